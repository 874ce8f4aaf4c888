#include "fastmice/kmeans.hpp"

#include <algorithm>
#include <limits>
#include <stdexcept>
#include <vector>

namespace fastmice {

namespace {

constexpr Index kAssignBlock = 2048;

// Labels plus squared distance to the assigned center. Distances come from
// the expansion |x|^2 + |c|^2 - 2 x.c evaluated blockwise as a GEMM.
void assign_with_dist2(const Eigen::Ref<const RowMatrix>& data,
                       const Eigen::Ref<const RowMatrix>& centers,
                       Labels& labels, Vector& dist2) {
  const Index n = data.rows(), k = centers.rows();
  labels.resize(n);
  dist2.resize(n);
  const Vector center_sq = centers.rowwise().squaredNorm();
  RowMatrix cross;  // block x k scratch
  for (Index start = 0; start < n; start += kAssignBlock) {
    const Index len = std::min(kAssignBlock, n - start);
    cross.noalias() = data.middleRows(start, len) * centers.transpose();
    for (Index i = 0; i < len; ++i) {
      const double xsq = data.row(start + i).squaredNorm();
      int best = 0;
      double best_d = xsq + center_sq(0) - 2.0 * cross(i, 0);
      for (Index c = 1; c < k; ++c) {
        const double d = xsq + center_sq(c) - 2.0 * cross(i, c);
        if (d < best_d) {
          best_d = d;
          best = static_cast<int>(c);
        }
      }
      labels[start + i] = best;
      dist2(start + i) = std::max(0.0, best_d);
    }
  }
}

void init_plus_plus(const Eigen::Ref<const RowMatrix>& data, int k,
                    SeedStream& stream, RowMatrix& centers) {
  const Index n = data.rows();
  centers.resize(k, data.cols());
  const auto first = stream.uniform_int(0, n - 1);
  centers.row(0) = data.row(first);

  Vector min_d2 =
      (data.rowwise() - centers.row(0)).rowwise().squaredNorm();
  for (int j = 1; j < k; ++j) {
    const double total = min_d2.sum();
    Index pick;
    if (total <= 0.0) {
      // All remaining mass sits on existing centers (duplicate data).
      pick = stream.uniform_int(0, n - 1);
    } else {
      const double r = stream.next_double() * total;
      double acc = 0.0;
      pick = n - 1;
      for (Index i = 0; i < n; ++i) {
        acc += min_d2(i);
        if (acc > r) {
          pick = i;
          break;
        }
      }
    }
    centers.row(j) = data.row(pick);
    min_d2 = min_d2.cwiseMin(
        (data.rowwise() - centers.row(j)).rowwise().squaredNorm());
  }
}

void init_random(const Eigen::Ref<const RowMatrix>& data, int k,
                 SeedStream& stream, RowMatrix& centers) {
  centers.resize(k, data.cols());
  auto rows = stream.sample_without_replacement(
      static_cast<std::size_t>(data.rows()), static_cast<std::size_t>(k));
  for (int j = 0; j < k; ++j)
    centers.row(j) = data.row(static_cast<Index>(rows[j]));
}

// Give every empty cluster the point currently farthest from its center,
// never stealing from a singleton. Grabbed points get distance 0, so the
// step cannot increase inertia.
void reseed_empty_clusters(const Eigen::Ref<const RowMatrix>& data,
                           RowMatrix& centers, Labels& labels,
                           Vector& dist2) {
  const Index n = data.rows();
  const int k = static_cast<int>(centers.rows());
  std::vector<Index> counts(k, 0);
  for (int label : labels) ++counts[label];
  for (int c = 0; c < k; ++c) {
    if (counts[c] > 0) continue;
    Index far = -1;
    double far_d = -1.0;
    for (Index i = 0; i < n; ++i) {
      if (counts[labels[i]] < 2) continue;
      if (dist2(i) > far_d) {
        far_d = dist2(i);
        far = i;
      }
    }
    if (far < 0)
      throw std::logic_error("kmeans: cannot reseed empty cluster");
    --counts[labels[far]];
    counts[c] = 1;
    centers.row(c) = data.row(far);
    labels[far] = c;
    dist2(far) = 0.0;
  }
}

KMeansResult run_once(const Eigen::Ref<const RowMatrix>& data,
                      const KMeansConfig& cfg, SeedStream stream) {
  const Index n = data.rows();
  KMeansResult result;
  if (cfg.init == KMeansConfig::Init::kPlusPlus) {
    init_plus_plus(data, cfg.k, stream, result.centers);
  } else {
    init_random(data, cfg.k, stream, result.centers);
  }

  Vector dist2;
  double prev_inertia = std::numeric_limits<double>::infinity();
  for (int iter = 0; iter < cfg.max_iters; ++iter) {
    assign_with_dist2(data, result.centers, result.labels, dist2);
    reseed_empty_clusters(data, result.centers, result.labels, dist2);
    result.inertia = dist2.sum();
    result.iterations_run = iter + 1;
    if (result.inertia > prev_inertia * (1.0 + 1e-12) + 1e-12)
      throw std::logic_error("kmeans: inertia increased");
    if (iter > 0 && prev_inertia - result.inertia <= cfg.tol * prev_inertia)
      break;
    prev_inertia = result.inertia;
    if (result.inertia == 0.0) break;

    // Update step: centers become member means. Every cluster is nonempty
    // after reseeding.
    RowMatrix sums = RowMatrix::Zero(cfg.k, data.cols());
    std::vector<Index> counts(cfg.k, 0);
    for (Index i = 0; i < n; ++i) {
      sums.row(result.labels[i]) += data.row(i);
      ++counts[result.labels[i]];
    }
    for (int c = 0; c < cfg.k; ++c)
      result.centers.row(c) = sums.row(c) / static_cast<double>(counts[c]);
  }
  return result;
}

}  // namespace

KMeansResult kmeans(const Eigen::Ref<const RowMatrix>& data,
                    const KMeansConfig& cfg, SeedStream stream) {
  if (cfg.k < 1) throw std::invalid_argument("kmeans: k must be positive");
  if (cfg.k > data.rows())
    throw std::invalid_argument("kmeans: k exceeds sample count");
  if (cfg.max_iters < 1)
    throw std::invalid_argument("kmeans: max_iters must be positive");
  if (cfg.restarts < 1)
    throw std::invalid_argument("kmeans: restarts must be positive");
  if (!data.allFinite())
    throw std::invalid_argument("kmeans: non-finite data");

  KMeansResult best;
  for (int r = 0; r < cfg.restarts; ++r) {
    KMeansResult cur = run_once(data, cfg, stream.derive(r));
    if (r == 0 || cur.inertia < best.inertia) best = std::move(cur);
  }
  return best;
}

Labels assign(const Eigen::Ref<const RowMatrix>& data,
              const Eigen::Ref<const RowMatrix>& centers) {
  if (data.cols() != centers.cols())
    throw std::invalid_argument("assign: dimension mismatch");
  Labels labels;
  Vector dist2;
  assign_with_dist2(data, centers, labels, dist2);
  return labels;
}

}  // namespace fastmice
