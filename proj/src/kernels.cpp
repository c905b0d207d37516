#include "semhuff/kernels.hpp"

#include <algorithm>
#include <cmath>
#include <cstring>
#include <numeric>
#include <string_view>
#include <unordered_map>

#ifdef _OPENMP
#include <omp.h>
#endif

#include "semhuff/bitio.hpp"

namespace semhuff::kernels {

namespace {

int max_threads() {
#ifdef _OPENMP
  return omp_get_max_threads();
#else
  return 1;
#endif
}

// Inputs below this size skip the parallel plumbing.
constexpr std::size_t kCutoff = 1 << 14;

struct ChunkRange {
  std::size_t begin, end;
};

std::vector<ChunkRange> split(std::size_t n, std::size_t chunks) {
  chunks = std::max<std::size_t>(1, std::min(chunks, n));
  std::vector<ChunkRange> ranges(chunks);
  const std::size_t base = n / chunks, rem = n % chunks;
  std::size_t at = 0;
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t len = base + (c < rem ? 1 : 0);
    ranges[c] = {at, at + len};
    at += len;
  }
  return ranges;
}

}  // namespace

TokenCounts map_and_count(std::span<const std::string> tokens) {
  const std::size_t n = tokens.size();
  const int threads = max_threads();
  if (n < kCutoff || threads == 1) return map_and_count_serial(tokens);

  const auto ranges = split(n, static_cast<std::size_t>(threads));
  const std::size_t chunks = ranges.size();

  struct Local {
    std::vector<std::string_view> vocab;
    std::vector<std::uint64_t> counts;
    std::vector<std::uint32_t> ids;
    std::unordered_map<std::string_view, std::uint32_t> index;
  };
  std::vector<Local> locals(chunks);

#pragma omp parallel for schedule(static, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    Local& local = locals[c];
    local.ids.reserve(ranges[c].end - ranges[c].begin);
    for (std::size_t i = ranges[c].begin; i < ranges[c].end; ++i) {
      const std::string_view token = tokens[i];
      auto [it, inserted] =
          local.index.emplace(token, static_cast<std::uint32_t>(local.vocab.size()));
      if (inserted) {
        local.vocab.push_back(token);
        local.counts.push_back(0);
      }
      ++local.counts[it->second];
      local.ids.push_back(it->second);
    }
  }

  // Merging local vocabularies in chunk order reproduces the global
  // first-appearance order exactly, whatever the chunk boundaries were.
  TokenCounts out;
  out.ids.resize(n);
  std::unordered_map<std::string_view, std::uint32_t> global;
  std::vector<std::vector<std::uint32_t>> translate(chunks);
  for (std::size_t c = 0; c < chunks; ++c) {
    const Local& local = locals[c];
    translate[c].resize(local.vocab.size());
    for (std::size_t v = 0; v < local.vocab.size(); ++v) {
      auto [it, inserted] =
          global.emplace(local.vocab[v], static_cast<std::uint32_t>(out.vocab.size()));
      if (inserted) {
        out.vocab.emplace_back(local.vocab[v]);
        out.counts.push_back(0);
      }
      out.counts[it->second] += local.counts[v];
      translate[c][v] = it->second;
    }
  }

#pragma omp parallel for schedule(static, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    const Local& local = locals[c];
    const auto& map = translate[c];
    std::size_t at = ranges[c].begin;
    for (std::uint32_t local_id : local.ids) out.ids[at++] = map[local_id];
  }
  return out;
}

std::vector<std::uint64_t> histogram(std::span<const std::uint32_t> values, std::size_t bins) {
  const std::size_t n = values.size();
  if (n < kCutoff || max_threads() == 1) return histogram_serial(values, bins);

  std::vector<std::uint64_t> out(bins, 0);
#pragma omp parallel
  {
    std::vector<std::uint64_t> local(bins, 0);
#pragma omp for nowait schedule(static)
    for (std::size_t i = 0; i < n; ++i) ++local[values[i]];
#pragma omp critical(semhuff_histogram_merge)
    {
      for (std::size_t b = 0; b < bins; ++b) out[b] += local[b];
    }
  }
  return out;
}

std::vector<std::uint8_t> pack_codewords(std::span<const std::uint32_t> units,
                                         std::span<const CodeEntry> entries,
                                         std::uint64_t& bit_length) {
  const std::size_t n = units.size();
  if (n < kCutoff || max_threads() == 1) {
    return pack_codewords_serial(units, entries, bit_length);
  }

  const auto ranges = split(n, static_cast<std::size_t>(max_threads()));
  const std::size_t chunks = ranges.size();

  std::vector<std::uint64_t> chunk_bits(chunks, 0);
#pragma omp parallel for schedule(static, 1)
  for (std::size_t c = 0; c < chunks; ++c) {
    std::uint64_t bits = 0;
    for (std::size_t i = ranges[c].begin; i < ranges[c].end; ++i) bits += entries[units[i]].length;
    chunk_bits[c] = bits;
  }

  std::vector<std::uint64_t> start_bit(chunks + 1, 0);
  for (std::size_t c = 0; c < chunks; ++c) start_bit[c + 1] = start_bit[c] + chunk_bits[c];
  bit_length = start_bit[chunks];

  std::vector<std::uint8_t> out((bit_length + 7) / 8, 0);

  // Each chunk renders into a pre-shifted scratch buffer, then lands its
  // interior bytes with memcpy. Only the two edge bytes can be shared with
  // a neighbouring chunk, and those are merged with atomic ORs.
#pragma omp parallel
  {
    std::vector<std::uint8_t> scratch;
#pragma omp for schedule(static, 1)
    for (std::size_t c = 0; c < chunks; ++c) {
      if (chunk_bits[c] == 0) continue;
      const std::uint64_t first_bit = start_bit[c];
      const std::uint64_t end_bit = start_bit[c + 1];
      const std::uint64_t first_byte = first_bit >> 3;
      const std::uint64_t last_byte = (end_bit - 1) >> 3;
      const std::uint32_t lead = static_cast<std::uint32_t>(first_bit & 7u);

      scratch.assign(last_byte - first_byte + 1, 0);
      std::uint64_t pos = lead;
      for (std::size_t i = ranges[c].begin; i < ranges[c].end; ++i) {
        const CodeEntry& e = entries[units[i]];
        or_bits(scratch.data(), pos, e.bits, e.length);
        pos += e.length;
      }

      const std::uint8_t head = scratch.front();
#pragma omp atomic update
      out[first_byte] |= head;
      if (last_byte > first_byte) {
        const std::uint8_t tail = scratch.back();
#pragma omp atomic update
        out[last_byte] |= tail;
        if (last_byte - first_byte > 1) {
          std::memcpy(out.data() + first_byte + 1, scratch.data() + 1,
                      last_byte - first_byte - 1);
        }
      }
    }
  }
  return out;
}

std::uint64_t levenshtein(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b) {
  const std::size_t m = a.size(), n = b.size();
  if (m == 0) return n;
  if (n == 0) return m;
  if (m * n < kCutoff * 64 || max_threads() == 1) return levenshtein_serial(a, b);

  // Anti-diagonal sweep: cells (i, d-i) of diagonal d depend only on
  // diagonals d-1 and d-2, so each diagonal is a parallel loop.
  std::vector<std::uint32_t> buf0(m + 1), buf1(m + 1), buf2(m + 1);
  std::uint32_t* prev2 = buf0.data();
  std::uint32_t* prev1 = buf1.data();
  std::uint32_t* cur = buf2.data();

  prev1[0] = 0;  // diagonal 0: D[0][0]
  std::uint64_t result = 0;

#pragma omp parallel
  {
    for (std::size_t d = 1; d <= m + n; ++d) {
      const std::size_t lo = d > n ? d - n : 0;
      const std::size_t hi = std::min(m, d);
#pragma omp for schedule(static)
      for (std::size_t i = lo; i <= hi; ++i) {
        const std::size_t j = d - i;
        std::uint32_t v;
        if (i == 0) {
          v = static_cast<std::uint32_t>(j);
        } else if (j == 0) {
          v = static_cast<std::uint32_t>(i);
        } else {
          const std::uint32_t del = prev1[i - 1] + 1;
          const std::uint32_t ins = prev1[i] + 1;
          const std::uint32_t sub = prev2[i - 1] + (a[i - 1] == b[j - 1] ? 0 : 1);
          v = std::min(std::min(del, ins), sub);
        }
        cur[i] = v;
      }
#pragma omp single
      {
        std::uint32_t* rotated = prev2;
        prev2 = prev1;
        prev1 = cur;
        cur = rotated;
        if (d == m + n) result = prev1[m];
      }
    }
  }
  return result;
}

double neg_plogp_sum(std::span<const double> probs) {
  const std::size_t n = probs.size();
  if (n < kCutoff || max_threads() == 1) return neg_plogp_sum_serial(probs);

  // Fixed-size chunks summed in index order keep the result independent of
  // the thread count.
  constexpr std::size_t kChunk = 4096;
  const std::size_t chunks = (n + kChunk - 1) / kChunk;
  std::vector<double> partial(chunks, 0.0);
#pragma omp parallel for schedule(static)
  for (std::size_t c = 0; c < chunks; ++c) {
    const std::size_t end = std::min(n, (c + 1) * kChunk);
    double sum = 0.0;
    for (std::size_t i = c * kChunk; i < end; ++i) {
      if (probs[i] > 0.0) sum -= probs[i] * std::log2(probs[i]);
    }
    partial[c] = sum;
  }
  return std::accumulate(partial.begin(), partial.end(), 0.0);
}

}  // namespace semhuff::kernels
