#include "semhuff/corpus.hpp"

#include <algorithm>
#include <iterator>

#include "semhuff/kernels.hpp"

namespace semhuff {

namespace {

struct CodepointRange {
  char32_t first, last;
};

#include "unicode_alnum.inc"

bool is_alnum(char32_t cp) {
  auto it = std::upper_bound(std::begin(kAlnumRanges), std::end(kAlnumRanges), cp,
                             [](char32_t v, const CodepointRange& r) { return v < r.first; });
  return it != std::begin(kAlnumRanges) && cp <= std::prev(it)->last;
}

bool is_space(char32_t cp) {
  switch (cp) {
    case 0x09: case 0x0A: case 0x0B: case 0x0C: case 0x0D: case 0x20:
    case 0x85: case 0xA0: case 0x1680: case 0x2028: case 0x2029:
    case 0x202F: case 0x205F: case 0x3000:
      return true;
    default:
      return cp >= 0x2000 && cp <= 0x200A;
  }
}

// Decodes one UTF-8 codepoint at `at`, returning its byte length, or 0 on
// malformed input (the caller then passes the byte through untouched).
std::size_t decode_utf8(std::string_view text, std::size_t at, char32_t& cp) {
  const auto byte = static_cast<unsigned char>(text[at]);
  std::size_t len;
  char32_t value;
  if (byte < 0x80) {
    cp = byte;
    return 1;
  } else if ((byte & 0xE0) == 0xC0) {
    len = 2;
    value = byte & 0x1F;
  } else if ((byte & 0xF0) == 0xE0) {
    len = 3;
    value = byte & 0x0F;
  } else if ((byte & 0xF8) == 0xF0) {
    len = 4;
    value = byte & 0x07;
  } else {
    return 0;
  }
  if (at + len > text.size()) return 0;
  for (std::size_t i = 1; i < len; ++i) {
    const auto cont = static_cast<unsigned char>(text[at + i]);
    if ((cont & 0xC0) != 0x80) return 0;
    value = (value << 6) | (cont & 0x3F);
  }
  if (value > 0x10FFFF) return 0;
  cp = value;
  return len;
}

}  // namespace

TokenSequence tokenize(std::string_view text) {
  TokenSequence tokens;
  std::size_t at = 0;
  while (at < text.size()) {
    char32_t cp = 0;
    std::size_t len = decode_utf8(text, at, cp);
    if (len == 0) {
      // Malformed byte: emit it on its own, like punctuation.
      tokens.emplace_back(text.substr(at, 1));
      ++at;
      continue;
    }
    if (is_space(cp)) {
      at += len;
      continue;
    }
    if (!is_alnum(cp)) {
      tokens.emplace_back(text.substr(at, len));
      at += len;
      continue;
    }

    // Alphanumeric run, keeping apostrophes that sit between two
    // alphanumeric codepoints ("don't" is one token, a trailing ' is not).
    const std::size_t start = at;
    std::size_t end = at + len;
    while (end < text.size()) {
      char32_t next_cp = 0;
      const std::size_t next_len = decode_utf8(text, end, next_cp);
      if (next_len == 0) break;
      if (is_alnum(next_cp)) {
        end += next_len;
        continue;
      }
      if (next_cp == U'\'' && end + next_len < text.size()) {
        char32_t after = 0;
        const std::size_t after_len = decode_utf8(text, end + next_len, after);
        if (after_len != 0 && is_alnum(after)) {
          end += next_len + after_len;
          continue;
        }
      }
      break;
    }
    tokens.emplace_back(text.substr(start, end - start));
    at = end;
  }
  return tokens;
}

std::string detokenize(std::span<const std::string> tokens) {
  std::string out;
  std::size_t size = tokens.empty() ? 0 : tokens.size() - 1;
  for (const auto& t : tokens) size += t.size();
  out.reserve(size);
  for (std::size_t i = 0; i < tokens.size(); ++i) {
    if (i > 0) out.push_back(' ');
    out += tokens[i];
  }
  return out;
}

CorpusStats count_frequencies(std::span<const std::string> tokens) {
  if (tokens.empty()) fail(ErrorKind::EmptyCorpus, "no tokens to count");
  kernels::TokenCounts counted = kernels::map_and_count(tokens);
  CorpusStats stats{SymbolTable(std::move(counted.vocab)),
                    ProbabilityModel::from_counts(std::move(counted.counts))};
  return stats;
}

std::vector<std::uint32_t> token_ids(std::span<const std::string> tokens,
                                     const SymbolTable& table) {
  constexpr std::uint32_t kMiss = UINT32_MAX;
  const std::size_t n = tokens.size();
  std::vector<std::uint32_t> ids(n);

#pragma omp parallel for schedule(static) if (n > std::size_t{1} << 14)
  for (std::size_t i = 0; i < n; ++i) {
    ids[i] = table.find(tokens[i]).value_or(kMiss);
  }

  for (std::size_t i = 0; i < n; ++i) {
    if (ids[i] == kMiss) {
      fail(ErrorKind::UnknownToken,
           "unknown token '" + tokens[i] + "' at position " + std::to_string(i));
    }
  }
  return ids;
}

}  // namespace semhuff
