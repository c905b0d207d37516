#include "semhuff/tree.hpp"

#include <algorithm>
#include <numeric>
#include <queue>
#include <utility>

namespace semhuff {

std::vector<std::uint32_t> CodeTree::leaf_depths() const {
  std::vector<std::uint32_t> depths(leaf_count, 0);
  if (nodes.empty()) return depths;
  // Root is the last node; walk down with explicit (node, depth) pairs.
  std::vector<std::pair<std::int32_t, std::uint32_t>> stack;
  stack.emplace_back(static_cast<std::int32_t>(nodes.size()) - 1, 0);
  while (!stack.empty()) {
    auto [at, depth] = stack.back();
    stack.pop_back();
    const Node& node = nodes[at];
    if (node.is_leaf()) {
      depths[at] = depth;
    } else {
      stack.emplace_back(node.left, depth + 1);
      stack.emplace_back(node.right, depth + 1);
    }
  }
  return depths;
}

std::vector<std::uint32_t> Codebook::lengths() const {
  std::vector<std::uint32_t> out(entries.size());
  for (std::size_t i = 0; i < entries.size(); ++i) out[i] = entries[i].length;
  return out;
}

CodeTree build_huffman_tree(std::span<const std::uint64_t> weights) {
  const std::size_t n = weights.size();
  if (n == 0) fail(ErrorKind::InvalidInput, "cannot build a code tree over zero units");

  CodeTree tree;
  tree.leaf_count = static_cast<std::uint32_t>(n);
  tree.nodes.reserve(2 * n - 1);
  for (std::uint64_t w : weights) tree.nodes.push_back({-1, -1, w});
  if (n == 1) return tree;  // degenerate: single leaf, codeword assigned later

  // Min-heap keyed on (weight, creation index). Leaves come first in unit
  // order, merge nodes in creation order, so ties always resolve the same
  // way and the tree is reproducible bit for bit.
  using Key = std::pair<std::uint64_t, std::int32_t>;
  std::priority_queue<Key, std::vector<Key>, std::greater<Key>> heap;
  for (std::int32_t i = 0; i < static_cast<std::int32_t>(n); ++i) {
    heap.emplace(weights[i], i);
  }
  while (heap.size() > 1) {
    const auto [wa, a] = heap.top();
    heap.pop();
    const auto [wb, b] = heap.top();
    heap.pop();
    const auto merged = static_cast<std::int32_t>(tree.nodes.size());
    tree.nodes.push_back({a, b, wa + wb});
    heap.emplace(wa + wb, merged);
  }
  return tree;
}

Codebook codebook_from_lengths(std::span<const std::uint32_t> lengths) {
  const std::size_t n = lengths.size();
  Codebook book;
  book.entries.resize(n);

  std::vector<std::uint32_t> order(n);
  std::iota(order.begin(), order.end(), 0);
  std::stable_sort(order.begin(), order.end(), [&](std::uint32_t x, std::uint32_t y) {
    return lengths[x] < lengths[y];
  });

  std::uint64_t code = 0;
  std::uint32_t prev_len = 0;
  for (std::uint32_t unit : order) {
    const std::uint32_t len = lengths[unit];
    if (len < 1 || len > 64) {
      fail(ErrorKind::InvalidInput, "code length " + std::to_string(len) + " outside 1..64");
    }
    if (prev_len == 0) {
      code = 0;  // first codeword: all zeros at the shortest length
    } else {
      const std::uint32_t shift = len - prev_len;
      ++code;
      // The next codeword must still fit in `len` bits, otherwise the
      // profile violates the Kraft inequality.
      if (code > (~std::uint64_t{0} >> shift) ||
          (len < 64 && (code << shift) >= (std::uint64_t{1} << len))) {
        fail(ErrorKind::InvalidInput, "code lengths violate the Kraft inequality");
      }
      code <<= shift;
    }
    book.entries[unit] = {code, len};
    prev_len = len;
  }
  return book;
}

Codebook derive_codebook(const CodeTree& tree) {
  if (tree.leaf_count == 1) {
    // A single coded unit still needs one bit per token so that token
    // counts remain delimitable.
    Codebook book;
    book.entries = {{0, 1}};
    return book;
  }
  return codebook_from_lengths(tree.leaf_depths());
}

std::uint64_t total_code_length(const Codebook& codebook,
                                std::span<const std::uint64_t> weights) {
  if (weights.size() != codebook.entries.size()) {
    fail(ErrorKind::InvalidInput, "weight list does not match codebook units");
  }
  std::uint64_t total = 0;
  for (std::size_t i = 0; i < weights.size(); ++i) {
    total += weights[i] * codebook.entries[i].length;
  }
  return total;
}

double average_code_length(const Codebook& codebook, std::span<const std::uint64_t> weights) {
  const std::uint64_t bits = total_code_length(codebook, weights);
  const std::uint64_t total = std::accumulate(weights.begin(), weights.end(), std::uint64_t{0});
  if (total == 0) fail(ErrorKind::InvalidInput, "weights sum to zero");
  return static_cast<double>(bits) / static_cast<double>(total);
}

}  // namespace semhuff
