#include "semhuff/entropy.hpp"

#include <cmath>

#include "semhuff/kernels.hpp"

namespace semhuff {

namespace {
constexpr double kSumTolerance = 1e-9;
constexpr double kSlack = 1e-12;
}  // namespace

double information_entropy(std::span<const double> probs) {
  double sum = 0.0;
  for (double p : probs) {
    if (p < 0.0 || std::isnan(p)) {
      fail(ErrorKind::InvalidDistribution, "negative probability entry");
    }
    sum += p;
  }
  if (std::abs(sum - 1.0) > kSumTolerance) {
    fail(ErrorKind::InvalidDistribution,
         "probabilities sum to " + std::to_string(sum) + ", expected 1");
  }
  return kernels::neg_plogp_sum(probs);
}

double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total) {
  if (total == 0) fail(ErrorKind::InvalidDistribution, "zero total count");
  std::vector<double> probs;
  probs.reserve(counts.size());
  for (std::uint64_t c : counts) {
    probs.push_back(static_cast<double>(c) / static_cast<double>(total));
  }
  return kernels::neg_plogp_sum(probs);
}

double semantic_entropy(const SetDistribution& dist) {
  return entropy_from_counts(dist.set_counts, dist.total);
}

KraftResult kraft_sum(std::span<const std::uint32_t> lengths, unsigned radix) {
  if (lengths.empty()) fail(ErrorKind::InvalidInput, "empty code length profile");
  if (radix < 2) fail(ErrorKind::InvalidInput, "code alphabet radix must be >= 2");
  double sum = 0.0;
  for (std::uint32_t l : lengths) {
    if (l < 1) fail(ErrorKind::InvalidInput, "code length must be >= 1");
    sum += std::pow(static_cast<double>(radix), -static_cast<double>(l));
  }
  return {sum, sum <= 1.0 + kSlack};
}

bool check_vlc_bounds(double avg_length, double semantic_entropy_sebits, unsigned radix) {
  const double bound = semantic_entropy_sebits / std::log2(static_cast<double>(radix));
  return avg_length >= bound - kSumTolerance && avg_length < bound + 1.0;
}

EntropyReport entropy_report(const ProbabilityModel& model, const SetDistribution& dist) {
  EntropyReport report;
  report.information_entropy_bits = entropy_from_counts(model.counts, model.total);
  report.semantic_entropy_sebits = entropy_from_counts(dist.set_counts, dist.total);
  report.radix = 2;
  return report;
}

}  // namespace semhuff
