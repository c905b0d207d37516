#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "semhuff/model.hpp"
#include "semhuff/tree.hpp"

namespace semhuff {

// The encoded artifact: a token count plus an MSB-first bit payload whose
// final byte is zero-padded.
struct BitContainer {
  std::uint64_t token_count = 0;
  std::uint64_t payload_bit_length = 0;
  std::vector<std::uint8_t> payload;  // size == ceil(payload_bit_length / 8)
};

enum class SelectionKind { MaxProbability, SeededRandom };

struct ReconstructionPolicy {
  SelectionKind kind = SelectionKind::MaxProbability;
  std::uint64_t seed = 0;

  static ReconstructionPolicy max_probability() { return {SelectionKind::MaxProbability, 0}; }
  static ReconstructionPolicy seeded_random(std::uint64_t seed) {
    return {SelectionKind::SeededRandom, seed};
  }
};

// Maps each token through the synonymous partition and concatenates the
// sets' codewords. Throws UnknownToken (with position) for tokens outside
// the table and InvalidInput when table, partition, and codebook disagree
// on dimensions.
BitContainer encode(std::span<const std::string> tokens, const SymbolTable& table,
                    const SynonymousPartition& partition, const Codebook& codebook);

// Walks the canonical code bit by bit, emitting exactly token_count set
// indices. Running out of payload mid-codeword is TruncatedStream; leftover
// declared bits (>= 8, or any nonzero) are TrailingGarbage; a bit pattern
// matching no codeword is FormatError.
std::vector<std::uint32_t> decode(const BitContainer& container, const Codebook& codebook);

// Picks one member token per decoded set. MaxProbability emits the set's
// representative; SeededRandom draws uniformly with a generator keyed on
// (seed, position), so outputs are reproducible and order-independent.
std::vector<std::string> reconstruct(std::span<const std::uint32_t> set_sequence,
                                     const SetDistribution& dist,
                                     const SynonymousPartition& partition,
                                     const SymbolTable& table,
                                     const ReconstructionPolicy& policy);

// Container file layout (.shc), little-endian:
//   magic "SHC1" | version u8 = 1 | token_count u64 | payload_bit_length u64
//   | payload bytes.
// The header is exactly 21 bytes.
std::vector<std::uint8_t> write_container(const BitContainer& container);
BitContainer read_container(std::span<const std::uint8_t> bytes);

}  // namespace semhuff
