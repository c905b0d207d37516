#include "semhuff/metrics.hpp"

#include <cmath>
#include <cstring>
#include <string_view>
#include <unordered_map>

#include "semhuff/entropy.hpp"
#include "semhuff/kernels.hpp"

namespace semhuff {

namespace {

// Interns both sequences over a shared vocabulary so the distance kernel
// works on integers.
std::pair<std::vector<std::uint32_t>, std::vector<std::uint32_t>> intern(
    std::span<const std::string> a, std::span<const std::string> b) {
  std::unordered_map<std::string_view, std::uint32_t> index;
  auto map = [&](std::span<const std::string> seq) {
    std::vector<std::uint32_t> ids;
    ids.reserve(seq.size());
    for (const std::string& token : seq) {
      auto [it, _] = index.emplace(std::string_view(token),
                                   static_cast<std::uint32_t>(index.size()));
      ids.push_back(it->second);
    }
    return ids;
  };
  auto ia = map(a);
  auto ib = map(b);
  return {std::move(ia), std::move(ib)};
}

// n-gram occurrence counts keyed on the raw bytes of the id window.
std::unordered_map<std::string, std::uint64_t> ngram_counts(
    std::span<const std::uint32_t> ids, std::size_t order) {
  std::unordered_map<std::string, std::uint64_t> counts;
  if (ids.size() < order) return counts;
  for (std::size_t i = 0; i + order <= ids.size(); ++i) {
    std::string key(order * sizeof(std::uint32_t), '\0');
    std::memcpy(key.data(), ids.data() + i, key.size());
    ++counts[key];
  }
  return counts;
}

}  // namespace

double wer(std::span<const std::string> reference, std::span<const std::string> hypothesis) {
  if (reference.empty()) fail(ErrorKind::InvalidInput, "WER needs a non-empty reference");
  auto [ref_ids, hyp_ids] = intern(reference, hypothesis);
  const std::uint64_t distance = kernels::levenshtein(ref_ids, hyp_ids);
  return static_cast<double>(distance) / static_cast<double>(reference.size());
}

double bleu(std::span<const std::string> reference, std::span<const std::string> hypothesis) {
  constexpr std::size_t kMaxOrder = 4;
  if (reference.empty() || hypothesis.empty()) return 0.0;
  auto [ref_ids, hyp_ids] = intern(reference, hypothesis);

  double log_precision_sum = 0.0;
  for (std::size_t order = 1; order <= kMaxOrder; ++order) {
    if (hyp_ids.size() < order) return 0.0;
    const auto hyp_counts = ngram_counts(hyp_ids, order);
    const auto ref_counts = ngram_counts(ref_ids, order);
    std::uint64_t matched = 0;
    for (const auto& [gram, count] : hyp_counts) {
      auto it = ref_counts.find(gram);
      if (it != ref_counts.end()) matched += std::min(count, it->second);
    }
    if (matched == 0) return 0.0;  // no smoothing
    const auto total = static_cast<double>(hyp_ids.size() - order + 1);
    log_precision_sum += std::log(static_cast<double>(matched) / total);
  }

  const auto ref_len = static_cast<double>(reference.size());
  const auto hyp_len = static_cast<double>(hypothesis.size());
  const double brevity = hyp_len >= ref_len ? 1.0 : std::exp(1.0 - ref_len / hyp_len);
  return 100.0 * brevity * std::exp(log_precision_sum / kMaxOrder);
}

LosslessnessResult semantic_losslessness(std::span<const std::string> reference,
                                         std::span<const std::string> hypothesis,
                                         const SymbolTable& table,
                                         const SynonymousPartition& partition) {
  if (reference.size() != hypothesis.size()) {
    fail(ErrorKind::InvalidInput, "sequences differ in length");
  }
  if (!partition.well_formed() || partition.symbol_count() != table.size()) {
    fail(ErrorKind::InvalidInput, "partition does not match the symbol table");
  }

  LosslessnessResult result;
  result.semantic_lossless = true;
  for (std::size_t i = 0; i < reference.size(); ++i) {
    const auto ref_id = table.find(reference[i]);
    const auto hyp_id = table.find(hypothesis[i]);
    if (!ref_id || !hyp_id) {
      fail(ErrorKind::UnknownToken,
           "unknown token '" + (ref_id ? hypothesis[i] : reference[i]) + "' at position " +
               std::to_string(i));
    }
    if (reference[i] != hypothesis[i]) result.mismatch_positions.push_back(i);
    if (partition.set_of(*ref_id) != partition.set_of(*hyp_id)) {
      result.semantic_lossless = false;
    }
  }
  return result;
}

double savings_fraction(std::uint64_t classical_total_bits,
                        std::uint64_t semantic_total_sebits) {
  if (classical_total_bits == 0) {
    fail(ErrorKind::InvalidInput, "savings undefined for a zero-bit classical total");
  }
  return (static_cast<double>(classical_total_bits) -
          static_cast<double>(semantic_total_sebits)) /
         static_cast<double>(classical_total_bits);
}

CompressionReport compression_report(const ProbabilityModel& model,
                                     const SynonymousPartition& partition,
                                     const Codebook& classical, const Codebook& semantic,
                                     std::span<const std::uint32_t> token_ids) {
  const std::size_t n_symbols = model.counts.size();
  if (!partition.well_formed() || partition.symbol_count() != n_symbols) {
    fail(ErrorKind::InvalidInput, "partition does not match the model");
  }
  if (classical.unit_count() != n_symbols) {
    fail(ErrorKind::InvalidInput, "classical codebook does not match the model");
  }
  if (semantic.unit_count() != partition.set_count()) {
    fail(ErrorKind::InvalidInput, "semantic codebook does not match the partition");
  }
  if (token_ids.empty()) fail(ErrorKind::EmptyCorpus, "no tokens to report on");
  for (std::uint32_t id : token_ids) {
    if (id >= n_symbols) fail(ErrorKind::InvalidInput, "token id out of range");
  }

  const std::vector<std::uint64_t> symbol_hist = kernels::histogram(token_ids, n_symbols);

  CompressionReport report;
  report.token_count = token_ids.size();
  for (std::uint32_t id = 0; id < n_symbols; ++id) {
    report.classical_total_bits += symbol_hist[id] * classical.entries[id].length;
    report.semantic_total_sebits +=
        symbol_hist[id] * semantic.entries[partition.set_of(id)].length;
  }
  const auto tokens = static_cast<double>(report.token_count);
  report.classical_avg = static_cast<double>(report.classical_total_bits) / tokens;
  report.semantic_avg = static_cast<double>(report.semantic_total_sebits) / tokens;

  const SetDistribution dist = aggregate_probabilities(model, partition);
  report.information_entropy_bits = entropy_from_counts(model.counts, model.total);
  report.semantic_entropy_sebits = semantic_entropy(dist);
  report.savings_fraction =
      savings_fraction(report.classical_total_bits, report.semantic_total_sebits);
  return report;
}

DistortionReport distortion_report(std::span<const std::string> reference,
                                   std::span<const std::string> hypothesis,
                                   const SymbolTable& table,
                                   const SynonymousPartition& partition) {
  DistortionReport report;
  report.wer = wer(reference, hypothesis);
  report.bleu = bleu(reference, hypothesis);
  auto lossless = semantic_losslessness(reference, hypothesis, table, partition);
  report.semantic_lossless = lossless.semantic_lossless;
  report.mismatch_positions = std::move(lossless.mismatch_positions);
  return report;
}

}  // namespace semhuff
