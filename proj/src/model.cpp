#include "semhuff/model.hpp"

#include <algorithm>
#include <numeric>
#include <string>
#include <unordered_set>

namespace semhuff {

SymbolTable::SymbolTable(std::vector<std::string> tokens) : tokens_(std::move(tokens)) {
  index_.reserve(tokens_.size());
  for (std::uint32_t id = 0; id < tokens_.size(); ++id) {
    auto [it, inserted] = index_.emplace(tokens_[id], id);
    if (!inserted) fail(ErrorKind::InvalidInput, "duplicate token in symbol table: '" + tokens_[id] + "'");
  }
}

std::optional<std::uint32_t> SymbolTable::find(std::string_view token) const {
  auto it = index_.find(token);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

ProbabilityModel ProbabilityModel::from_counts(std::vector<std::uint64_t> counts) {
  ProbabilityModel model;
  model.total = std::accumulate(counts.begin(), counts.end(), std::uint64_t{0});
  model.counts = std::move(counts);
  return model;
}

namespace {

// Builds the symbol -> set index when the sets are disjoint, non-empty and
// covering; otherwise returns an empty vector.
std::vector<std::uint32_t> build_set_of(const std::vector<std::vector<std::uint32_t>>& sets,
                                        std::uint32_t symbol_count) {
  constexpr std::uint32_t kUnset = UINT32_MAX;
  std::vector<std::uint32_t> set_of(symbol_count, kUnset);
  std::uint64_t assigned = 0;
  for (std::uint32_t k = 0; k < sets.size(); ++k) {
    if (sets[k].empty()) return {};
    for (std::uint32_t id : sets[k]) {
      if (id >= symbol_count || set_of[id] != kUnset) return {};
      set_of[id] = k;
      ++assigned;
    }
  }
  if (assigned != symbol_count) return {};
  return set_of;
}

}  // namespace

SynonymousPartition SynonymousPartition::over(std::vector<std::vector<std::uint32_t>> sets,
                                              std::uint32_t symbol_count) {
  SynonymousPartition partition;
  partition.sets_ = std::move(sets);
  partition.symbol_count_ = symbol_count;
  // Canonical member order inside each set, so a partition rebuilt from a
  // codebook file is identical to the one it was written from (seeded
  // random reconstruction indexes into the member list).
  for (auto& set : partition.sets_) std::sort(set.begin(), set.end());
  partition.set_of_ = build_set_of(partition.sets_, symbol_count);
  return partition;
}

SynonymousPartition SynonymousPartition::identity(std::uint32_t symbol_count) {
  std::vector<std::vector<std::uint32_t>> sets(symbol_count);
  for (std::uint32_t id = 0; id < symbol_count; ++id) sets[id] = {id};
  return over(std::move(sets), symbol_count);
}

PartitionValidation validate_partition(const SynonymousPartition& partition,
                                       const SymbolTable& table) {
  constexpr std::uint32_t kNone = UINT32_MAX;
  PartitionValidation report;
  const std::uint32_t n = table.size();
  std::vector<std::uint32_t> owner(n, kNone);

  const auto& sets = partition.sets();
  for (std::uint32_t k = 0; k < sets.size(); ++k) {
    if (sets[k].empty()) {
      report.violations.push_back({PartitionViolation::Kind::EmptySet, k, kNone});
      continue;
    }
    for (std::uint32_t id : sets[k]) {
      if (id >= n) {
        report.violations.push_back({PartitionViolation::Kind::InvalidSymbol, k, id});
      } else if (owner[id] != kNone) {
        report.violations.push_back({PartitionViolation::Kind::Overlap, k, id});
      } else {
        owner[id] = k;
      }
    }
  }
  for (std::uint32_t id = 0; id < n; ++id) {
    if (owner[id] == kNone) {
      report.violations.push_back({PartitionViolation::Kind::MissingSymbol, kNone, id});
    }
  }
  return report;
}

std::vector<double> SetDistribution::probabilities() const {
  std::vector<double> probs(set_counts.size());
  for (std::size_t k = 0; k < set_counts.size(); ++k) {
    probs[k] = total == 0 ? 0.0 : static_cast<double>(set_counts[k]) / static_cast<double>(total);
  }
  return probs;
}

SetDistribution aggregate_probabilities(const ProbabilityModel& model,
                                        const SynonymousPartition& partition) {
  if (!partition.well_formed() || partition.symbol_count() != model.counts.size()) {
    fail(ErrorKind::InvalidInput, "partition does not cover the model's symbols");
  }
  if (model.total == 0) fail(ErrorKind::EmptyModel, "probability model has zero total count");

  SetDistribution dist;
  dist.total = model.total;
  dist.set_counts.resize(partition.set_count());
  dist.representative.resize(partition.set_count());

  const auto& sets = partition.sets();
  for (std::uint32_t k = 0; k < sets.size(); ++k) {
    std::uint64_t sum = 0;
    std::uint32_t best = sets[k].front();
    for (std::uint32_t id : sets[k]) {
      sum += model.counts[id];
      const std::uint64_t c = model.counts[id];
      if (c > model.counts[best] || (c == model.counts[best] && id < best)) best = id;
    }
    dist.set_counts[k] = sum;
    dist.representative[k] = best;
  }
  return dist;
}

SynonymousPartition parse_thesaurus(std::string_view text, const SymbolTable& table) {
  std::vector<std::vector<std::uint32_t>> sets;
  std::vector<bool> used(table.size(), false);

  std::size_t line_start = 0;
  std::size_t line_no = 0;
  while (line_start <= text.size()) {
    std::size_t line_end = text.find('\n', line_start);
    if (line_end == std::string_view::npos) line_end = text.size();
    std::string_view line = text.substr(line_start, line_end - line_start);
    ++line_no;
    line_start = line_end + 1;
    if (line_end == text.size() && line.empty()) break;

    if (!line.empty() && line.back() == '\r') line.remove_suffix(1);
    // Skip comments and blank lines.
    std::size_t first = line.find_first_not_of(" \t");
    if (first == std::string_view::npos || line[first] == '#') continue;

    std::vector<std::uint32_t> members;
    std::size_t pos = first;
    while (pos < line.size()) {
      std::size_t end = line.find_first_of(" \t", pos);
      if (end == std::string_view::npos) end = line.size();
      std::string_view token = line.substr(pos, end - pos);
      pos = line.find_first_not_of(" \t", end);
      if (pos == std::string_view::npos) pos = line.size();

      auto id = table.find(token);
      if (!id) {
        fail(ErrorKind::UnknownToken, "thesaurus line " + std::to_string(line_no) +
                 ": token '" + std::string(token) + "' is not in the symbol table");
      }
      if (used[*id]) {
        fail(ErrorKind::DisjointnessViolation,
             "token '" + std::string(token) + "' appears in more than one synonymous set (line " +
                 std::to_string(line_no) + ")");
      }
      used[*id] = true;
      members.push_back(*id);
    }
    sets.push_back(std::move(members));
  }

  // Symbols untouched by the thesaurus become singleton sets in table order.
  for (std::uint32_t id = 0; id < table.size(); ++id) {
    if (!used[id]) sets.push_back({id});
  }
  return SynonymousPartition::over(std::move(sets), table.size());
}

}  // namespace semhuff
