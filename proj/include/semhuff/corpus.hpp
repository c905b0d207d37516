#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "semhuff/model.hpp"

namespace semhuff {

using TokenSequence = std::vector<std::string>;

// Splits UTF-8 text into tokens: maximal runs of alphanumeric codepoints
// (Unicode categories L* and N*) with internal U+0027 apostrophes kept,
// every other non-whitespace codepoint as a single-character token.
// Whitespace is discarded. Malformed bytes pass through as single-byte
// tokens.
TokenSequence tokenize(std::string_view text);

// Tokens joined by single spaces; original whitespace is not recovered.
std::string detokenize(std::span<const std::string> tokens);

struct CorpusStats {
  SymbolTable table;       // distinct tokens, first-appearance order
  ProbabilityModel model;  // exact occurrence counts, total == token count
};

// Throws EmptyCorpus on an empty sequence.
CorpusStats count_frequencies(std::span<const std::string> tokens);

// Table lookups for a whole stream; throws UnknownToken naming the first
// offending position.
std::vector<std::uint32_t> token_ids(std::span<const std::string> tokens,
                                     const SymbolTable& table);

}  // namespace semhuff
