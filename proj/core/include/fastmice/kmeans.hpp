#pragma once

#include "fastmice/rng.hpp"
#include "fastmice/types.hpp"

namespace fastmice {

struct KMeansConfig {
  int k = 1;
  int max_iters = 100;
  double tol = 1e-6;  // relative inertia change
  int restarts = 1;
  enum class Init { kPlusPlus, kRandom } init = Init::kPlusPlus;
  // Empty clusters are always reseeded from the point farthest from its
  // center, so every cluster in the result is nonempty.
};

struct KMeansResult {
  Labels labels;       // in [0, k)
  RowMatrix centers;   // k x d
  double inertia = 0;  // sum of squared distances to assigned centers
  int iterations_run = 0;
};

/// Lloyd iterations with k-means++ (or random) init, squared-Euclidean
/// distance, deterministic per stream. With restarts > 1 the best inertia
/// wins. Throws if k > n or data is non-finite.
KMeansResult kmeans(const Eigen::Ref<const RowMatrix>& data,
                    const KMeansConfig& cfg, SeedStream stream);

/// Nearest-center label per row, ties to the lower index.
Labels assign(const Eigen::Ref<const RowMatrix>& data,
              const Eigen::Ref<const RowMatrix>& centers);

}  // namespace fastmice
