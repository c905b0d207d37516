#pragma once

#include <cstddef>
#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semhuff/tree.hpp"

// Data-parallel inner loops, OpenMP-backed, each with a serial reference
// twin (`*_serial`). The parallel variants are the production path and are
// deterministic: integer kernels are exact, and floating-point reductions
// use fixed-size chunking so results do not depend on the thread count.
// The serial twins exist for differential tests and the benchmark tool.
namespace semhuff::kernels {

struct TokenCounts {
  std::vector<std::string> vocab;     // first-appearance order
  std::vector<std::uint64_t> counts;  // per vocab entry
  std::vector<std::uint32_t> ids;     // per input token
};

// Vocabulary, occurrence counts, and the id stream in one pass.
TokenCounts map_and_count(std::span<const std::string> tokens);
TokenCounts map_and_count_serial(std::span<const std::string> tokens);

// Occurrence counts of values < bins.
std::vector<std::uint64_t> histogram(std::span<const std::uint32_t> values, std::size_t bins);
std::vector<std::uint64_t> histogram_serial(std::span<const std::uint32_t> values,
                                            std::size_t bins);

// Concatenates the codewords of `units` MSB-first into a zero-padded byte
// buffer. `bit_length` receives the exact payload length in bits.
std::vector<std::uint8_t> pack_codewords(std::span<const std::uint32_t> units,
                                         std::span<const CodeEntry> entries,
                                         std::uint64_t& bit_length);
std::vector<std::uint8_t> pack_codewords_serial(std::span<const std::uint32_t> units,
                                                std::span<const CodeEntry> entries,
                                                std::uint64_t& bit_length);

// Unit-cost edit distance. The parallel variant sweeps anti-diagonals.
std::uint64_t levenshtein(std::span<const std::uint32_t> a, std::span<const std::uint32_t> b);
std::uint64_t levenshtein_serial(std::span<const std::uint32_t> a,
                                 std::span<const std::uint32_t> b);

// -sum p log2 p over raw probabilities; entries <= 0 contribute nothing.
double neg_plogp_sum(std::span<const double> probs);
double neg_plogp_sum_serial(std::span<const double> probs);

}  // namespace semhuff::kernels
