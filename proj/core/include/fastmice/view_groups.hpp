#pragma once

#include <cstddef>
#include <vector>

#include "fastmice/dataset.hpp"
#include "fastmice/rng.hpp"
#include "fastmice/types.hpp"

namespace fastmice {

struct ViewGroupConfig {
  int m_groups = 20;
  int v_min = 1;
  int v_max = 0;  // 0: use all views
  double tau_min = 0.2;
  double tau_max = 0.8;
};

struct ViewGroupMember {
  int view_index = 0;
  std::vector<Index> feature_indices;  // sorted ascending, distinct

  Index sampled_dim() const { return static_cast<Index>(feature_indices.size()); }
};

/// A random subset of views, each with its own random feature subsample.
struct ViewGroup {
  int index = 0;
  std::vector<ViewGroupMember> members;  // view indices ascending

  int size() const { return static_cast<int>(members.size()); }
};

/// Draw m_groups random view groups: group size uniform in [v_min, v_max],
/// member views without replacement, and per member a sampling ratio
/// uniform in [tau_min, tau_max] fixing ceil(tau * d_v) feature indices.
/// Each group draws from its own derived stream, so results do not depend
/// on generation or execution order.
std::vector<ViewGroup> generate_view_groups(const MultiViewDataset& dataset,
                                            const ViewGroupConfig& cfg,
                                            const SeedStream& stream);

/// Copy of the member's view restricted to its sampled feature columns.
RowMatrix member_matrix(const MultiViewDataset& dataset,
                        const ViewGroup& group, std::size_t member);

}  // namespace fastmice
