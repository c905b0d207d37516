#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "semhuff/errors.hpp"

namespace semhuff {

// Binary code tree. Weights are integer numerators over the distribution's
// common denominator, so construction never touches floating point.
// Leaves occupy nodes 0..leaf_count-1 in unit order; merge nodes follow in
// creation order and the root is the last node.
struct CodeTree {
  struct Node {
    std::int32_t left = -1;
    std::int32_t right = -1;
    std::uint64_t weight = 0;
    bool is_leaf() const { return left < 0; }
  };

  std::vector<Node> nodes;
  std::uint32_t leaf_count = 0;

  std::vector<std::uint32_t> leaf_depths() const;
};

struct CodeEntry {
  std::uint64_t bits = 0;     // codeword value, right-aligned
  std::uint32_t length = 0;   // in bits, >= 1
};

// Canonical prefix code: one entry per coded unit (synonymous set index,
// or symbol id in the classical case). Codewords sorted by (length, unit)
// are consecutive integers, so lengths alone reproduce the whole book.
struct Codebook {
  std::vector<CodeEntry> entries;
  unsigned radix = 2;

  std::uint32_t unit_count() const { return static_cast<std::uint32_t>(entries.size()); }
  std::vector<std::uint32_t> lengths() const;
};

// Merge-two-smallest construction over integer weights. Ties are broken
// toward the earliest-created node (leaves in unit order first), making the
// tree a pure function of the weight sequence.
// The degenerate single-unit tree is one leaf; derive_codebook turns it
// into the length-1 code "0".
// Throws InvalidInput on an empty weight list.
CodeTree build_huffman_tree(std::span<const std::uint64_t> weights);

// Reads leaf depths off the tree and reassigns codewords canonically.
// Throws InvalidInput when a depth exceeds 64 bits.
Codebook derive_codebook(const CodeTree& tree);

// Canonical assignment from a bare length profile (shared with codebook
// deserialization). Lengths must be >= 1, <= 64, and Kraft-feasible.
Codebook codebook_from_lengths(std::span<const std::uint32_t> lengths);

// Sum of weight[i] * length[i]; exact.
std::uint64_t total_code_length(const Codebook& codebook,
                                std::span<const std::uint64_t> weights);

// total_code_length / sum(weights). Throws InvalidInput on dimension
// mismatch.
double average_code_length(const Codebook& codebook,
                           std::span<const std::uint64_t> weights);

// Independent optimality oracle: enumerates every full-binary-tree depth
// profile for 2..8 units and minimizes the weighted length over unit
// assignments. Shares no code with build_huffman_tree.
std::uint64_t brute_force_optimal_total(std::span<const std::uint64_t> weights);
double brute_force_optimal_length(std::span<const std::uint64_t> weights);

}  // namespace semhuff
