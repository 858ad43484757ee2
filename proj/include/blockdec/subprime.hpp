#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <unordered_set>
#include <vector>

#include "blockdec/core.hpp"

// Subprime filtrations: nested chains of monomial ideals whose consecutive
// standard-monomial differences are blocks. An ordered decomposition is
// subprime exactly when each block, added in order, together with the
// current ideal spans a monomial ideal again; that in turn reduces to the
// outer adjacent faces of the block lying inside the current ideal.

namespace blockdec {

inline constexpr std::size_t kOrderingSearchCap = 20;

/// The i-th outer adjacent face: the block displaced one step outward from
/// the i-th outer face, i.e. column i pinned to outer_i + 1. Empty when the
/// block is unbounded in direction i.
inline Block outer_adjacent_face(const Block& b, std::size_t axis) {
  if (b.is_empty())
    throw std::invalid_argument("empty block has no outer adjacent faces");
  if (axis >= b.dimension())
    throw std::out_of_range("face axis out of range");
  if (b.outer()[axis].is_infinite()) return Block::empty_block(b.dimension());
  const Exponent step = b.outer()[axis].value() + 1;
  ExponentVector inner = b.inner();
  ExtentVector outer = b.outer();
  inner[axis] = step;
  outer[axis] = Extent(step);
  return Block(std::move(inner), std::move(outer));
}

/// Some monomial of the ideal lies in the (nonempty) block iff some
/// generator fits under the outer corner.
inline bool ideal_meets_block(const MonomialIdeal& ideal, const Block& b) {
  detail::require_same_dimension(ideal.dimension(), b.dimension());
  for (const auto& g : ideal.generators())
    if (principal_meets(b, g)) return true;
  return false;
}

/// Membership in a monomial ideal is upward closed, so a nonempty block lies
/// inside the ideal iff its inner corner does.
inline bool ideal_contains_block(const MonomialIdeal& ideal, const Block& b) {
  detail::require_same_dimension(ideal.dimension(), b.dimension());
  return b.is_empty() || ideal.contains(b.inner());
}

/// B ⊔ mon(I) is the monomial set of an ideal iff every outer adjacent face
/// of B lies in I; the spanned ideal is then I + <inner(B)>. Requires B
/// nonempty and disjoint from I.
inline bool spans_ideal_with(const Block& b, const MonomialIdeal& ideal) {
  detail::require_same_dimension(b.dimension(), ideal.dimension());
  if (b.is_empty())
    throw std::invalid_argument("spans_ideal_with needs a nonempty block");
  if (ideal_meets_block(ideal, b))
    throw std::invalid_argument("block is not disjoint from the ideal");
  for (std::size_t i = 0; i < b.dimension(); ++i)
    if (!ideal_contains_block(ideal, outer_adjacent_face(b, i))) return false;
  return true;
}

/// Walk the blocks in order, growing the ideal by each inner corner; true
/// iff every nonempty block spans an ideal with the ideal accumulated so
/// far. Empty blocks contribute nothing and are skipped. Throws if a block
/// overlaps the accumulated ideal, which cannot happen for a genuine
/// decomposition of the standard monomials.
inline bool is_subprime_ordered(const BlockDecomposition& d,
                                const MonomialIdeal& ideal) {
  detail::require_same_dimension(d.dimension(), ideal.dimension());
  MonomialIdeal current = ideal;
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    if (!spans_ideal_with(b, current)) return false;
    current = current.with_generator(b.inner());
  }
  return true;
}

/// Nested ideals I_0 ⊂ I_1 ⊂ ... ⊂ I_s with I_s the unit ideal, and the
/// block B_k = standard monomials of I_k not standard for I_{k-1}.
struct Filtration {
  std::vector<MonomialIdeal> ideals;
  std::vector<Block> blocks;
};

/// Build the filtration of a subprime-ordered decomposition: each step adds
/// the block's inner corner to the previous ideal's generators, dropping any
/// generator the new corner divides. Throws if the order is not subprime or
/// the blocks do not exhaust the standard monomials.
inline Filtration subprime_filtration(const BlockDecomposition& d,
                                      const MonomialIdeal& ideal) {
  detail::require_same_dimension(d.dimension(), ideal.dimension());
  Filtration f;
  f.ideals.push_back(ideal);
  MonomialIdeal current = ideal;
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    if (!spans_ideal_with(b, current))
      throw std::invalid_argument(
          "ordered decomposition is not subprime at block " +
          std::to_string(f.blocks.size() + 1));
    current = current.with_generator(b.inner());
    f.ideals.push_back(current);
    f.blocks.push_back(b);
  }
  if (!current.is_unit())
    throw std::invalid_argument(
        "decomposition does not exhaust the standard monomials");
  return f;
}

/// A subprime filtration is prime iff every block is a Stanley block.
inline bool is_prime_filtration(const Filtration& f) {
  for (const Block& b : f.blocks)
    if (!b.is_stanley()) return false;
  return true;
}

/// Depth-first search for an ordering of the nonempty blocks that is
/// subprime, memoizing failed placement sets. Returns the indices into
/// d.blocks() in a passing order, or nullopt when no ordering works.
/// Worst-case exponential; refuses inputs above max_blocks.
inline std::optional<std::vector<std::size_t>> exists_subprime_ordering(
    const BlockDecomposition& d, const MonomialIdeal& ideal,
    std::size_t max_blocks = kOrderingSearchCap) {
  detail::require_same_dimension(d.dimension(), ideal.dimension());
  std::vector<std::size_t> live;
  for (std::size_t i = 0; i < d.size(); ++i)
    if (!d.blocks()[i].is_empty()) live.push_back(i);
  const std::size_t k = live.size();
  if (k > max_blocks)
    throw std::length_error(
        "subprime ordering search exhausted: too many blocks");

  std::vector<std::size_t> order;
  std::unordered_set<std::uint64_t> failed;
  std::uint64_t placed = 0;

  auto dfs = [&](auto&& self, const MonomialIdeal& current) -> bool {
    if (order.size() == k) return true;
    if (failed.contains(placed)) return false;
    for (std::size_t t = 0; t < k; ++t) {
      const std::uint64_t bit = std::uint64_t{1} << t;
      if (placed & bit) continue;
      const Block& b = d.blocks()[live[t]];
      if (!spans_ideal_with(b, current)) continue;
      placed |= bit;
      order.push_back(live[t]);
      if (self(self, current.with_generator(b.inner()))) return true;
      order.pop_back();
      placed &= ~bit;
    }
    failed.insert(placed);
    return false;
  };

  if (dfs(dfs, ideal)) return order;
  return std::nullopt;
}

}  // namespace blockdec
