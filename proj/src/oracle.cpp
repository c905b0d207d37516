// Exhaustive optimality oracle. Deliberately shares nothing with the
// Huffman construction: it enumerates every leaf-depth profile a full
// binary tree can have and minimizes the weighted length over unit
// assignments directly.

#include <algorithm>
#include <functional>
#include <limits>
#include <numeric>

#include "semhuff/tree.hpp"

namespace semhuff {

namespace {

// Collects all non-decreasing depth vectors d_1 <= ... <= d_n with
// sum 2^-d_i == 1 exactly, i.e. the leaf depth profiles of full binary
// trees with n leaves. Depths are bounded by n-1 (the caterpillar tree).
// Kraft sums are tracked as integers scaled by 2^(n-1).
void enumerate_profiles(std::size_t n,
                        const std::function<void(const std::vector<std::uint32_t>&)>& emit) {
  const std::uint64_t target = std::uint64_t{1} << (n - 1);
  std::vector<std::uint32_t> depths(n);

  std::function<void(std::size_t, std::uint32_t, std::uint64_t)> step =
      [&](std::size_t i, std::uint32_t min_depth, std::uint64_t sum) {
        if (i == n) {
          if (sum == target) emit(depths);
          return;
        }
        const std::uint64_t remaining = n - i;
        if (sum + remaining > target) return;  // every unit adds at least 2^-(n-1)
        for (std::uint32_t d = min_depth; d <= n - 1; ++d) {
          const std::uint64_t contribution = std::uint64_t{1} << (n - 1 - d);
          // Even the largest allowed contributions cannot reach the target.
          if (sum + contribution * remaining < target) break;
          if (sum + contribution > target) continue;
          depths[i] = d;
          step(i + 1, d, sum + contribution);
        }
      };
  step(0, 1, 0);
}

}  // namespace

std::uint64_t brute_force_optimal_total(std::span<const std::uint64_t> weights) {
  const std::size_t n = weights.size();
  if (n < 2 || n > 8) {
    fail(ErrorKind::InvalidInput, "brute-force oracle handles 2..8 units");
  }

  // For a fixed depth profile the best assignment pairs large weights with
  // small depths (rearrangement), so sorting both once is enough.
  std::vector<std::uint64_t> sorted(weights.begin(), weights.end());
  std::sort(sorted.begin(), sorted.end(), std::greater<>());

  std::uint64_t best = std::numeric_limits<std::uint64_t>::max();
  enumerate_profiles(n, [&](const std::vector<std::uint32_t>& depths) {
    std::uint64_t total = 0;
    for (std::size_t i = 0; i < n; ++i) total += sorted[i] * depths[i];
    best = std::min(best, total);
  });
  return best;
}

double brute_force_optimal_length(std::span<const std::uint64_t> weights) {
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  if (total == 0) fail(ErrorKind::InvalidInput, "weights sum to zero");
  return static_cast<double>(brute_force_optimal_total(weights)) / static_cast<double>(total);
}

}  // namespace semhuff
