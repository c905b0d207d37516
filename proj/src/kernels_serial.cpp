// Serial reference implementations. These are the ground truth the
// OpenMP kernels are tested against and benchmarked over; keep them as
// plain as possible.

#include <cmath>
#include <string_view>
#include <unordered_map>

#include "semhuff/bitio.hpp"
#include "semhuff/kernels.hpp"

namespace semhuff::kernels {

TokenCounts map_and_count_serial(std::span<const std::string> tokens) {
  TokenCounts out;
  out.ids.reserve(tokens.size());
  std::unordered_map<std::string_view, std::uint32_t> index;
  for (const std::string& token : tokens) {
    auto [it, inserted] =
        index.emplace(std::string_view(token), static_cast<std::uint32_t>(out.vocab.size()));
    if (inserted) {
      out.vocab.push_back(token);
      out.counts.push_back(0);
    }
    ++out.counts[it->second];
    out.ids.push_back(it->second);
  }
  return out;
}

std::vector<std::uint64_t> histogram_serial(std::span<const std::uint32_t> values,
                                            std::size_t bins) {
  std::vector<std::uint64_t> out(bins, 0);
  for (std::uint32_t v : values) ++out[v];
  return out;
}

std::vector<std::uint8_t> pack_codewords_serial(std::span<const std::uint32_t> units,
                                                std::span<const CodeEntry> entries,
                                                std::uint64_t& bit_length) {
  std::uint64_t bits = 0;
  for (std::uint32_t u : units) bits += entries[u].length;
  bit_length = bits;

  std::vector<std::uint8_t> out((bits + 7) / 8, 0);
  std::uint64_t pos = 0;
  for (std::uint32_t u : units) {
    const CodeEntry& e = entries[u];
    or_bits(out.data(), pos, e.bits, e.length);
    pos += e.length;
  }
  return out;
}

std::uint64_t levenshtein_serial(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b) {
  const std::size_t m = a.size(), n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;

  std::vector<std::uint32_t> prev(n + 1), cur(n + 1);
  for (std::size_t j = 0; j <= n; ++j) prev[j] = static_cast<std::uint32_t>(j);
  for (std::size_t i = 1; i <= m; ++i) {
    cur[0] = static_cast<std::uint32_t>(i);
    for (std::size_t j = 1; j <= n; ++j) {
      const std::uint32_t del = prev[j] + 1;
      const std::uint32_t ins = cur[j - 1] + 1;
      const std::uint32_t sub = prev[j - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
      cur[j] = std::min(std::min(del, ins), sub);
    }
    std::swap(prev, cur);
  }
  return prev[n];
}

double neg_plogp_sum_serial(std::span<const double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p > 0.0) sum -= p * std::log2(p);
  }
  return sum;
}

}  // namespace semhuff::kernels
