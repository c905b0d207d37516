#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

#include "semhuff/errors.hpp"

namespace semhuff {

// The syntactic alphabet: unique token strings with dense ids 0..N-1.
// Immutable after construction; safe for unsynchronized concurrent reads.
class SymbolTable {
 public:
  SymbolTable() = default;

  // Tokens keep their given order; id(tokens[i]) == i.
  // Throws InvalidInput on duplicate tokens.
  explicit SymbolTable(std::vector<std::string> tokens);

  std::uint32_t size() const { return static_cast<std::uint32_t>(tokens_.size()); }
  std::string_view token(std::uint32_t id) const { return tokens_[id]; }
  const std::vector<std::string>& tokens() const { return tokens_; }

  std::optional<std::uint32_t> find(std::string_view token) const;

 private:
  struct StringHash {
    using is_transparent = void;
    std::size_t operator()(std::string_view s) const {
      return std::hash<std::string_view>{}(s);
    }
  };

  std::vector<std::string> tokens_;
  std::unordered_map<std::string, std::uint32_t, StringHash, std::equal_to<>> index_;
};

// Integer occurrence counts. Probabilities are the exact rationals
// counts[i] / total; floats appear only at report boundaries.
struct ProbabilityModel {
  std::vector<std::uint64_t> counts;
  std::uint64_t total = 0;  // == sum of counts

  static ProbabilityModel from_counts(std::vector<std::uint64_t> counts);

  double p(std::uint32_t id) const {
    return total == 0 ? 0.0 : static_cast<double>(counts[id]) / static_cast<double>(total);
  }
};

// Disjoint, covering sets of symbol ids. `sets` is plain data and may be
// ill-formed; the set_of index exists only when the sets are pairwise
// disjoint, non-empty, and cover 0..symbol_count-1 exactly. Members are
// kept sorted by id so equal partitions compare and serialize identically.
class SynonymousPartition {
 public:
  SynonymousPartition() = default;

  static SynonymousPartition over(std::vector<std::vector<std::uint32_t>> sets,
                                  std::uint32_t symbol_count);
  static SynonymousPartition identity(std::uint32_t symbol_count);

  const std::vector<std::vector<std::uint32_t>>& sets() const { return sets_; }
  std::uint32_t set_count() const { return static_cast<std::uint32_t>(sets_.size()); }
  std::uint32_t symbol_count() const { return symbol_count_; }

  bool well_formed() const {
    return set_of_.size() == symbol_count_ || (symbol_count_ == 0 && sets_.empty());
  }

  // Requires well_formed().
  std::uint32_t set_of(std::uint32_t symbol_id) const { return set_of_[symbol_id]; }
  std::span<const std::uint32_t> set_of_all() const { return set_of_; }

 private:
  std::vector<std::vector<std::uint32_t>> sets_;
  std::uint32_t symbol_count_ = 0;
  std::vector<std::uint32_t> set_of_;
};

struct PartitionViolation {
  enum class Kind {
    EmptySet,       // a set with no members
    Overlap,        // symbol appears in more than one set
    MissingSymbol,  // symbol in the table covered by no set
    InvalidSymbol,  // set member outside the table's id range
  };
  Kind kind;
  std::uint32_t set_index;  // offending set, or UINT32_MAX for MissingSymbol
  std::uint32_t symbol_id;  // offending symbol, or UINT32_MAX for EmptySet
};

struct PartitionValidation {
  std::vector<PartitionViolation> violations;
  bool ok() const { return violations.empty(); }
};

// Checks the three partition conditions (non-empty sets, disjointness,
// coverage) against the table. Violations are data, not failures.
PartitionValidation validate_partition(const SynonymousPartition& partition,
                                       const SymbolTable& table);

// Per-set aggregated counts over the model's common denominator, plus the
// maximum-probability member of each set (ties resolved to the smallest id).
struct SetDistribution {
  std::vector<std::uint64_t> set_counts;
  std::uint64_t total = 0;
  std::vector<std::uint32_t> representative;

  double p(std::uint32_t set_index) const {
    return total == 0 ? 0.0
                      : static_cast<double>(set_counts[set_index]) / static_cast<double>(total);
  }
  std::vector<double> probabilities() const;
};

// Sums member counts per set in exact integer arithmetic.
// Throws EmptyModel when total == 0, InvalidInput when the partition does
// not match the model.
SetDistribution aggregate_probabilities(const ProbabilityModel& model,
                                        const SynonymousPartition& partition);

// Parses a thesaurus document: one synonymous set per line, tokens
// separated by spaces/tabs, '#' lines and blank lines ignored. Tokens of
// the table absent from every line become singleton sets appended in table
// order. Token matching is exact byte equality.
// Throws DisjointnessViolation on a repeated token and UnknownToken on a
// token missing from the table.
SynonymousPartition parse_thesaurus(std::string_view text, const SymbolTable& table);

}  // namespace semhuff
