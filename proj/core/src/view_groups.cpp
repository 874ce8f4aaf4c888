#include "fastmice/view_groups.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

namespace fastmice {

std::vector<ViewGroup> generate_view_groups(const MultiViewDataset& dataset,
                                            const ViewGroupConfig& cfg,
                                            const SeedStream& stream) {
  const int n_views = static_cast<int>(dataset.n_views());
  const int v_max = cfg.v_max == 0 ? n_views : cfg.v_max;
  if (cfg.m_groups < 1)
    throw std::invalid_argument("view groups: m_groups must be positive");
  if (cfg.v_min < 1 || cfg.v_min > v_max)
    throw std::invalid_argument("view groups: need 1 <= v_min <= v_max");
  if (v_max > n_views)
    throw std::invalid_argument("view groups: v_max exceeds view count");
  if (!(cfg.tau_min > 0.0) || cfg.tau_min > cfg.tau_max || cfg.tau_max > 1.0)
    throw std::invalid_argument("view groups: need 0 < tau_min <= tau_max <= 1");

  std::vector<ViewGroup> groups(cfg.m_groups);
  for (int m = 0; m < cfg.m_groups; ++m) {
    SeedStream gs = stream.derive(static_cast<std::uint64_t>(m));
    ViewGroup& group = groups[m];
    group.index = m;

    const auto group_size =
        static_cast<std::size_t>(gs.uniform_int(cfg.v_min, v_max));
    auto picked = gs.sample_without_replacement(n_views, group_size);
    std::sort(picked.begin(), picked.end());

    group.members.reserve(group_size);
    for (std::size_t v : picked) {
      ViewGroupMember member;
      member.view_index = static_cast<int>(v);
      const Index dim = dataset.views[v].dim;
      const double tau = gs.uniform_real(cfg.tau_min, cfg.tau_max);
      const auto sampled = static_cast<std::size_t>(
          std::ceil(tau * static_cast<double>(dim)));
      auto features = gs.sample_without_replacement(
          static_cast<std::size_t>(dim), std::max<std::size_t>(1, sampled));
      std::sort(features.begin(), features.end());
      member.feature_indices.assign(features.begin(), features.end());
      group.members.push_back(std::move(member));
    }
  }
  return groups;
}

RowMatrix member_matrix(const MultiViewDataset& dataset,
                        const ViewGroup& group, std::size_t member) {
  if (member >= group.members.size())
    throw std::out_of_range("member_matrix: member index out of range");
  const ViewGroupMember& vm = group.members[member];
  const RowMatrix& src = dataset.views[vm.view_index].data;
  RowMatrix out(src.rows(), vm.sampled_dim());
  for (Index j = 0; j < vm.sampled_dim(); ++j)
    out.col(j) = src.col(vm.feature_indices[j]);
  return out;
}

}  // namespace fastmice
