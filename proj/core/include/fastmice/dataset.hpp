#pragma once

#include <filesystem>
#include <optional>
#include <string>
#include <vector>

#include "fastmice/types.hpp"

namespace fastmice {

enum class DistanceMetric { kEuclidean, kCosine };

/// One feature representation (modality) of the N samples.
struct ViewMatrix {
  RowMatrix data;    // N x dim
  Index dim = 0;
  std::string name;
};

/// Immutable after load; safe for concurrent read.
struct MultiViewDataset {
  Index n_samples = 0;
  std::vector<ViewMatrix> views;
  std::vector<std::string> sample_ids;  // optional, may be empty

  Index n_views() const { return static_cast<Index>(views.size()); }
};

/// Everything a manifest describes: the data plus optional ground truth
/// and the configured distance metric (euclidean unless stated).
struct LoadedDataset {
  MultiViewDataset data;
  std::optional<Labels> truth;
  DistanceMetric metric = DistanceMetric::kEuclidean;
};

struct LoadOptions {
  bool standardize = false;  // per-view column z-scoring, off by default
};

/// Parse a manifest (line-oriented `key = value`) and the view matrices it
/// references. Keys: n_samples, n_views, view.<i>.file, view.<i>.dim,
/// optional view.<i>.format (csv|coo), optional metric (euclidean|cosine),
/// optional labels.file.
///
/// Rejects missing files, row-count or dimension mismatches, and
/// non-finite values. Under cosine, rejects zero-norm rows.
LoadedDataset load_dataset(const std::filesystem::path& manifest_path,
                           const LoadOptions& options = {});

/// Write manifest + one CSV per view (+ labels when given) into `dir`.
/// Values are printed at full round-trip precision, so load(save(x)) == x
/// bitwise.
void save_dataset(const MultiViewDataset& dataset,
                  const std::filesystem::path& dir,
                  const std::optional<Labels>& truth = std::nullopt,
                  DistanceMetric metric = DistanceMetric::kEuclidean);

double distance(const Eigen::Ref<const Eigen::RowVectorXd>& a,
                const Eigen::Ref<const Eigen::RowVectorXd>& b,
                DistanceMetric metric);

/// One integer label per line.
Labels read_labels(const std::filesystem::path& path);
void write_labels(const Labels& labels, const std::filesystem::path& path);

}  // namespace fastmice
