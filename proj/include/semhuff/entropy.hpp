#pragma once

#include <cstdint>
#include <span>

#include "semhuff/model.hpp"

namespace semhuff {

struct EntropyReport {
  double information_entropy_bits = 0.0;
  double semantic_entropy_sebits = 0.0;
  unsigned radix = 2;
};

// -sum p log2 p with 0 log 0 == 0. Entries must be >= 0 and sum to 1
// within 1e-9; otherwise InvalidDistribution.
double information_entropy(std::span<const double> probs);

// Same formula over the set distribution, computed from the exact counts.
// The result unit is sebits.
double semantic_entropy(const SetDistribution& dist);

// Entropy of counts[i]/total in bits. Zero counts contribute nothing.
double entropy_from_counts(std::span<const std::uint64_t> counts, std::uint64_t total);

struct KraftResult {
  double sum = 0.0;
  bool satisfied = false;  // sum <= 1 + 1e-12
};

// Sum of radix^-length over the profile. Lengths must be >= 1 and the
// radix >= 2; an empty profile is InvalidInput.
KraftResult kraft_sum(std::span<const std::uint32_t> lengths, unsigned radix);

// Variable-length bound: Hs/log2(F) <= avg < Hs/log2(F) + 1, lower bound
// inclusive with 1e-9 slack, upper bound exclusive.
bool check_vlc_bounds(double avg_length, double semantic_entropy_sebits, unsigned radix);

EntropyReport entropy_report(const ProbabilityModel& model, const SetDistribution& dist);

}  // namespace semhuff
