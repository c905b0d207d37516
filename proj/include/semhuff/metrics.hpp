#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "semhuff/model.hpp"
#include "semhuff/tree.hpp"

namespace semhuff {

struct DistortionReport {
  double bleu = 0.0;  // 0..100
  double wer = 0.0;
  bool semantic_lossless = false;
  std::vector<std::uint64_t> mismatch_positions;  // syntactic differences
  // Slot for an external semantic-similarity scorer (e.g. an embedding
  // model). Nothing in this library fills it.
  std::optional<double> external_similarity;
};

struct CompressionReport {
  std::uint64_t token_count = 0;
  std::uint64_t classical_total_bits = 0;
  std::uint64_t semantic_total_sebits = 0;
  double classical_avg = 0.0;
  double semantic_avg = 0.0;
  double information_entropy_bits = 0.0;
  double semantic_entropy_sebits = 0.0;
  double savings_fraction = 0.0;
};

// Word-level edit distance (unit costs) over the reference length.
// Throws InvalidInput on an empty reference.
double wer(std::span<const std::string> reference, std::span<const std::string> hypothesis);

// Corpus-level BLEU, n-gram orders 1..4 with uniform weights, standard
// brevity penalty, no smoothing: any zero n-gram precision yields 0.
// Scaled to 0..100. Degenerate inputs yield 0.
double bleu(std::span<const std::string> reference, std::span<const std::string> hypothesis);

struct LosslessnessResult {
  bool semantic_lossless = false;
  std::vector<std::uint64_t> mismatch_positions;
};

// True iff every position pairs tokens from the same synonymous set.
// mismatch_positions lists positions whose tokens differ syntactically,
// whether or not they share a set. Sequences must have equal length and
// all tokens must be in the table.
LosslessnessResult semantic_losslessness(std::span<const std::string> reference,
                                         std::span<const std::string> hypothesis,
                                         const SymbolTable& table,
                                         const SynonymousPartition& partition);

// (classical - semantic) / classical.
double savings_fraction(std::uint64_t classical_total_bits,
                        std::uint64_t semantic_total_sebits);

// Exact bit totals of both codes over the token stream, entropies of the
// underlying distributions, and the savings fraction.
CompressionReport compression_report(const ProbabilityModel& model,
                                     const SynonymousPartition& partition,
                                     const Codebook& classical, const Codebook& semantic,
                                     std::span<const std::uint32_t> token_ids);

// wer + bleu + losslessness in one go, for equal-length sequences.
DistortionReport distortion_report(std::span<const std::string> reference,
                                   std::span<const std::string> hypothesis,
                                   const SymbolTable& table,
                                   const SynonymousPartition& partition);

}  // namespace semhuff
