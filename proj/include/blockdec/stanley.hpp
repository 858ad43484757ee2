#pragma once

#include <cstddef>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <utility>
#include <vector>

#include "blockdec/core.hpp"

// Conversion of blocks to minimal Stanley decompositions: split off the
// unbounded columns as free variables, enumerate the bounded part as base
// monomials.

namespace blockdec {

/// K[X] * x^base: the exponent vectors equal to base off X and >= base on X.
struct StanleySpace {
  std::vector<std::size_t> free_variables;  // strictly increasing axis indices
  ExponentVector base;

  friend bool operator==(const StanleySpace&, const StanleySpace&) = default;
};

/// The Stanley block describing the same set: unbounded over the free
/// variables, degenerate elsewhere.
inline Block to_block(const StanleySpace& s) {
  ExtentVector outer;
  outer.reserve(s.base.size());
  for (Exponent e : s.base) outer.push_back(Extent(e));
  for (std::size_t i : s.free_variables) {
    if (i >= s.base.size())
      throw std::invalid_argument("free variable index out of range");
    outer[i] = Extent::infinity();
  }
  return Block(s.base, std::move(outer));
}

inline std::vector<std::size_t> unbounded_columns(const Block& b) {
  std::vector<std::size_t> cols;
  for (std::size_t i = 0; i < b.dimension(); ++i)
    if (b.outer()[i].is_infinite()) cols.push_back(i);
  return cols;
}

/// Split a nonempty block into its bounded part (unbounded columns replaced
/// by [0,0]) and its unbounded part (bounded columns replaced by [0,0]).
inline std::pair<Block, Block> split_bounded_unbounded(const Block& b) {
  if (b.is_empty())
    throw std::invalid_argument("empty block cannot be split");
  const std::size_t n = b.dimension();
  ExponentVector bounded_inner(n, 0), unbounded_inner(n, 0);
  ExtentVector bounded_outer(n, Extent(0)), unbounded_outer(n, Extent(0));
  for (std::size_t i = 0; i < n; ++i) {
    if (b.outer()[i].is_infinite()) {
      unbounded_inner[i] = b.inner()[i];
      unbounded_outer[i] = Extent::infinity();
    } else {
      bounded_inner[i] = b.inner()[i];
      bounded_outer[i] = b.outer()[i];
    }
  }
  return {Block(std::move(bounded_inner), std::move(bounded_outer)),
          Block(std::move(unbounded_inner), std::move(unbounded_outer))};
}

/// Number of spaces in the minimal Stanley decomposition: the product of the
/// interval sizes of the bounded columns.
inline std::uint64_t stanley_space_count(const Block& b) {
  if (b.is_empty())
    throw std::invalid_argument("empty block has no Stanley decomposition");
  std::uint64_t count = 1;
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    if (b.outer()[i].is_infinite()) continue;
    const std::uint64_t len =
        static_cast<std::uint64_t>(b.outer()[i].value() - b.inner()[i] + 1);
    if (count > std::numeric_limits<std::uint64_t>::max() / len)
      throw std::overflow_error("Stanley space count overflows");
    count *= len;
  }
  return count;
}

/// The Stanley decomposition of Span(B) with the fewest spaces. All spaces
/// share the free-variable set X = unbounded columns of B; the bases run
/// over the bounded part offset by the inner corner on the unbounded
/// columns. Bases are listed lexicographically (first coordinate most
/// significant).
inline std::vector<StanleySpace> minimal_stanley_decomposition(const Block& b) {
  if (b.is_empty())
    throw std::invalid_argument("empty block has no Stanley decomposition");
  const std::size_t n = b.dimension();
  const std::vector<std::size_t> free_vars = unbounded_columns(b);

  std::vector<std::size_t> bounded;
  std::vector<std::size_t> radices;
  for (std::size_t i = 0; i < n; ++i) {
    if (b.outer()[i].is_infinite()) continue;
    bounded.push_back(i);
    radices.push_back(
        static_cast<std::size_t>(b.outer()[i].value() - b.inner()[i] + 1));
  }

  std::vector<StanleySpace> spaces;
  detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
    ExponentVector base(b.inner());
    for (std::size_t k = 0; k < bounded.size(); ++k)
      base[bounded[k]] += static_cast<Exponent>(idx[k]);
    spaces.push_back(StanleySpace{free_vars, std::move(base)});
  });
  return spaces;
}

/// Concatenation over the nonempty blocks, block order preserved. The total
/// space count is the sum of the per-block counts.
inline std::vector<StanleySpace> decomposition_to_stanley(
    const BlockDecomposition& d) {
  std::vector<StanleySpace> spaces;
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    auto part = minimal_stanley_decomposition(b);
    spaces.insert(spaces.end(), std::make_move_iterator(part.begin()),
                  std::make_move_iterator(part.end()));
  }
  return spaces;
}

}  // namespace blockdec
