#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semhuff/model.hpp"
#include "semhuff/tree.hpp"

namespace semhuff {

// Everything both ends need to share: the alphabet with its counts, the
// synonymous partition, and the code lengths. Codewords are not stored;
// they are rebuilt canonically on load.
struct CodebookBundle {
  SymbolTable table;
  ProbabilityModel model;
  SynonymousPartition partition;
  Codebook codebook;  // indexed by set
  bool semantic = false;

  SetDistribution distribution() const;
};

// Codebook file layout (.scb), little-endian:
//   magic "SCBK" | version u8 = 1 | flags u8 (bit 0: semantic)
//   | set count u32 | symbol count u32 | total count u64
//   | per symbol: token length u16, token bytes, count u64, set index u32
//   | per set: code length u8.
// Loading rejects profiles with Kraft sum > 1, lengths outside 1..64, and
// partitions that do not satisfy the disjoint/covering conditions. A clear
// semantic flag additionally requires the identity partition.
std::vector<std::uint8_t> write_codebook(const CodebookBundle& bundle);
CodebookBundle read_codebook(std::span<const std::uint8_t> bytes);

}  // namespace semhuff
