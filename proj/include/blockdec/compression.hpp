#pragma once

#include <algorithm>
#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "blockdec/core.hpp"

// Compressibility: detect subsets of blocks whose union is again a block,
// and merge such subsets greedily. Greedy merging yields an incompressible
// decomposition, not necessarily one with the fewest possible blocks.

namespace blockdec {

inline constexpr std::size_t kCompressionSubsetCap = 20;

namespace detail {

// Next k-combination of {0..n-1} in lexicographic order; false at the end.
inline bool next_combination(std::vector<std::size_t>& comb, std::size_t n) {
  const std::size_t k = comb.size();
  std::size_t i = k;
  while (i > 0) {
    --i;
    if (comb[i] + (k - i) < n) {
      ++comb[i];
      for (std::size_t j = i + 1; j < k; ++j) comb[j] = comb[j - 1] + 1;
      return true;
    }
  }
  return false;
}

inline Block bounding_box(std::span<const Block> blocks) {
  ExponentVector inner = blocks[0].inner();
  ExtentVector outer = blocks[0].outer();
  for (const Block& b : blocks.subspan(1)) {
    for (std::size_t i = 0; i < inner.size(); ++i) {
      inner[i] = std::min(inner[i], b.inner()[i]);
      outer[i] = std::max(outer[i], b.outer()[i]);
    }
  }
  return Block(std::move(inner), std::move(outer));
}

}  // namespace detail

/// If the exact union of the given pairwise-disjoint nonempty blocks is
/// itself a block, return it (necessarily their bounding box); otherwise
/// nullopt. Exactness is decided by coordinate-compressed cell coverage,
/// so unbounded extents need no point enumeration.
inline std::optional<Block> union_is_block(std::span<const Block> blocks) {
  if (blocks.empty())
    throw std::invalid_argument("union of an empty family of blocks");
  const std::size_t n = blocks[0].dimension();
  for (const Block& b : blocks) {
    detail::require_same_dimension(n, b.dimension());
    if (b.is_empty())
      throw std::invalid_argument("union_is_block needs nonempty blocks");
  }
  for (std::size_t i = 0; i < blocks.size(); ++i)
    for (std::size_t j = i + 1; j < blocks.size(); ++j)
      if (!disjoint(blocks[i], blocks[j]))
        throw std::invalid_argument("union_is_block needs disjoint blocks");

  const Block box = detail::bounding_box(blocks);

  // Cell starts per axis: every member boundary inside the box. Each cell is
  // then entirely inside or outside every member, so its lower corner decides
  // coverage of the whole cell.
  std::vector<std::vector<Exponent>> starts(n);
  for (std::size_t i = 0; i < n; ++i) {
    auto& axis = starts[i];
    axis.push_back(box.inner()[i]);
    for (const Block& b : blocks) {
      axis.push_back(b.inner()[i]);
      if (b.outer()[i].is_natural()) {
        const Exponent next = b.outer()[i].value() + 1;
        if (Extent(next) <= box.outer()[i]) axis.push_back(next);
      }
    }
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }

  std::vector<std::size_t> radices;
  for (const auto& axis : starts) radices.push_back(axis.size());

  std::vector<std::size_t> idx(n, 0);
  ExponentVector rep(n);
  while (true) {
    for (std::size_t i = 0; i < n; ++i) rep[i] = starts[i][idx[i]];
    bool covered = false;
    for (const Block& b : blocks)
      if (b.contains(rep)) {
        covered = true;
        break;
      }
    if (!covered) return std::nullopt;
    std::size_t i = n;
    while (i > 0 && ++idx[i - 1] == radices[i - 1]) {
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) break;
  }
  return box;
}

struct CompressionReport {
  bool compressible = false;
  std::vector<std::size_t> witness;  // indices into blocks(), >= 2 entries
  std::optional<Block> merged;
};

/// Search subsets of >= 2 nonempty blocks whose union is a block, by
/// increasing subset size and then lexicographically; the first witness
/// wins. Compressibility is global: a subset's bounding box may not touch
/// any block outside the subset, which prunes most candidates cheaply.
inline CompressionReport is_compressible(
    const BlockDecomposition& d,
    std::size_t max_blocks = kCompressionSubsetCap) {
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.blocks()[i].is_empty()) live.push_back(i);
  const std::size_t k = live.size();
  if (k > max_blocks)
    throw std::length_error("compression subset search cap exceeded");
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = i + 1; j < k; ++j)
      if (!disjoint(d.blocks()[live[i]], d.blocks()[live[j]]))
        throw std::invalid_argument("decomposition blocks are not disjoint");

  for (std::size_t size = 2; size <= k; ++size) {
    std::vector<std::size_t> comb(size);
    for (std::size_t i = 0; i < size; ++i) comb[i] = i;
    do {
      std::vector<Block> members;
      members.reserve(size);
      for (std::size_t c : comb) members.push_back(d.blocks()[live[c]]);
      const Block box = detail::bounding_box(members);
      bool blocked = false;
      for (std::size_t t = 0; t < k && !blocked; ++t) {
        if (std::binary_search(comb.begin(), comb.end(), t)) continue;
        if (!disjoint(box, d.blocks()[live[t]])) blocked = true;
      }
      if (blocked) continue;
      if (auto merged = union_is_block(members)) {
        CompressionReport report;
        report.compressible = true;
        for (std::size_t c : comb) report.witness.push_back(live[c]);
        report.merged = std::move(merged);
        return report;
      }
    } while (detail::next_combination(comb, k));
  }
  return {};
}

/// Repeatedly merge the first witness (smallest, then lexicographically
/// least) until no subset compresses. The merged block replaces the witness
/// member with the lowest index; empty blocks are dropped up front. The
/// result covers exactly the same monomials as the input.
inline BlockDecomposition compress_greedy(
    const BlockDecomposition& d,
    std::size_t max_blocks = kCompressionSubsetCap) {
  BlockDecomposition current = d.without_empty_blocks();
  while (true) {
    const CompressionReport report = is_compressible(current, max_blocks);
    if (!report.compressible) return current;
    std::vector<Block> next;
    next.reserve(current.size() - report.witness.size() + 1);
    for (std::size_t i = 0; i < current.size(); ++i) {
      if (i == report.witness.front()) {
        next.push_back(*report.merged);
      } else if (!std::binary_search(report.witness.begin(),
                                     report.witness.end(), i)) {
        next.push_back(current.blocks()[i]);
      }
    }
    current = BlockDecomposition(current.dimension(), std::move(next));
  }
}

}  // namespace blockdec
