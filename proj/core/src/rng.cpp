#include "fastmice/rng.hpp"

#include <stdexcept>
#include <unordered_set>

namespace fastmice {

namespace {

// SplitMix64 finalizer (Vigna 2015). Full-period, passes BigCrush when
// iterated; also serves as the mixing function for path derivation.
inline std::uint64_t mix64(std::uint64_t z) {
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
  return z ^ (z >> 31);
}

constexpr std::uint64_t kGolden = 0x9E3779B97F4A7C15ULL;

}  // namespace

SeedStream::SeedStream(std::uint64_t master_seed)
    : key_(mix64(master_seed + kGolden)), state_(key_) {}

SeedStream::SeedStream(std::uint64_t key, int) : key_(key), state_(key) {}

SeedStream SeedStream::derive(std::uint64_t index) const {
  // Hash chain over the path: child key depends only on (key_, index).
  std::uint64_t child = mix64(key_ ^ mix64(index + kGolden));
  return SeedStream(child, 0);
}

std::uint64_t SeedStream::next_u64() {
  state_ += kGolden;
  return mix64(state_);
}

double SeedStream::next_double() {
  return static_cast<double>(next_u64() >> 11) * 0x1.0p-53;
}

std::int64_t SeedStream::uniform_int(std::int64_t lo, std::int64_t hi) {
  if (lo > hi) throw std::invalid_argument("uniform_int: lo > hi");
  const std::uint64_t span =
      static_cast<std::uint64_t>(hi) - static_cast<std::uint64_t>(lo) + 1;
  if (span == 0) return static_cast<std::int64_t>(next_u64());  // full range
  // Rejection sampling to avoid modulo bias.
  const std::uint64_t limit = UINT64_MAX - UINT64_MAX % span;
  std::uint64_t x;
  do {
    x = next_u64();
  } while (x >= limit);
  return lo + static_cast<std::int64_t>(x % span);
}

double SeedStream::uniform_real(double lo, double hi) {
  return lo + (hi - lo) * next_double();
}

std::vector<std::size_t> SeedStream::sample_without_replacement(
    std::size_t n, std::size_t m) {
  if (m == 0 || m > n)
    throw std::invalid_argument(
        "sample_without_replacement: need 0 < m <= n");
  // Floyd's algorithm: O(m) memory, no O(n) scratch for small samples.
  std::vector<std::size_t> out;
  out.reserve(m);
  std::unordered_set<std::size_t> seen;
  seen.reserve(m * 2);
  for (std::size_t j = n - m; j < n; ++j) {
    const auto t = static_cast<std::size_t>(
        uniform_int(0, static_cast<std::int64_t>(j)));
    if (seen.insert(t).second) {
      out.push_back(t);
    } else {
      seen.insert(j);
      out.push_back(j);
    }
  }
  return out;
}

}  // namespace fastmice
