#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

namespace fastmice {

/// Splittable deterministic random stream.
///
/// A stream is identified by a master seed and a derivation path: the
/// sequence drawn from a stream depends only on (master_seed, path), never
/// on how many values a parent has produced or on the order in which
/// sibling streams are consumed. Derive one child per parallel unit of work
/// before handing streams to workers.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t master_seed);

  /// Child stream keyed by (this stream's path, index). Does not disturb
  /// this stream's sequence.
  [[nodiscard]] SeedStream derive(std::uint64_t index) const;

  std::uint64_t next_u64();

  /// Uniform in [0, 1) with 53 random bits.
  double next_double();

  /// Uniform over the closed range [lo, hi]. Throws if lo > hi.
  std::int64_t uniform_int(std::int64_t lo, std::int64_t hi);

  /// Uniform over [lo, hi].
  double uniform_real(double lo, double hi);

  /// m distinct indices in [0, n). Throws if m == 0 or m > n.
  /// Order is unspecified but deterministic for a given stream state.
  std::vector<std::size_t> sample_without_replacement(std::size_t n,
                                                      std::size_t m);

 private:
  SeedStream(std::uint64_t key, int);  // internal: from derived key

  std::uint64_t key_;    // identifies the stream; derivation hashes this
  std::uint64_t state_;  // sequence position, advances on draws
};

}  // namespace fastmice
