#pragma once

#include <algorithm>
#include <cstddef>
#include <stdexcept>
#include <vector>

#include "blockdec/core.hpp"

// The elementary block decomposition: grid Newton space with hyperplanes
// through every generator coordinate, keep the cells outside the ideal.

namespace blockdec {

/// Per-axis sorted coordinate lists: {0} together with the i-th coordinates
/// of all generators.
struct CoordinateGrid {
  std::vector<std::vector<Exponent>> axes;

  std::size_t dimension() const { return axes.size(); }
};

inline CoordinateGrid build_grid(const MonomialIdeal& ideal) {
  CoordinateGrid grid;
  grid.axes.assign(ideal.dimension(), {});
  for (std::size_t i = 0; i < ideal.dimension(); ++i) {
    auto& axis = grid.axes[i];
    axis.push_back(0);
    for (const auto& g : ideal.generators()) axis.push_back(g[i]);
    std::sort(axis.begin(), axis.end());
    axis.erase(std::unique(axis.begin(), axis.end()), axis.end());
  }
  return grid;
}

namespace detail {

// Outer corner for the cell whose inner corner sits at axis positions idx:
// one short of the next grid value, or unbounded past the last one.
inline Block grid_cell(const CoordinateGrid& grid,
                       const std::vector<std::size_t>& idx) {
  const std::size_t n = grid.dimension();
  ExponentVector inner(n);
  ExtentVector outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    const auto& axis = grid.axes[i];
    inner[i] = axis[idx[i]];
    outer[i] = idx[i] + 1 < axis.size() ? Extent(axis[idx[i] + 1] - 1)
                                        : Extent::infinity();
  }
  return Block(std::move(inner), std::move(outer));
}

}  // namespace detail

/// All grid cells whose inner corner is standard, in lexicographic order of
/// inner corners (first coordinate most significant). Their disjoint union
/// is the set of standard monomials of the ideal.
inline BlockDecomposition elementary_decomposition(const MonomialIdeal& ideal) {
  const CoordinateGrid grid = build_grid(ideal);
  std::vector<std::size_t> radices;
  for (const auto& axis : grid.axes) radices.push_back(axis.size());

  BlockDecomposition result(ideal.dimension());
  detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
    Block cell = detail::grid_cell(grid, idx);
    if (!ideal.contains(cell.inner())) result.append(std::move(cell));
  });
  return result;
}

/// The unique elementary block containing the standard monomial c: per axis
/// the largest grid value that is <= c_i. Rejects monomials of the ideal.
inline Block containing_block(const MonomialIdeal& ideal,
                              const ExponentVector& c) {
  detail::require_same_dimension(ideal.dimension(), c.size());
  detail::require_nonnegative(c);
  if (ideal.contains(c))
    throw std::invalid_argument(
        "monomial lies in the ideal and belongs to no block");
  const CoordinateGrid grid = build_grid(ideal);
  std::vector<std::size_t> idx(c.size());
  for (std::size_t i = 0; i < c.size(); ++i) {
    const auto& axis = grid.axes[i];
    auto it = std::upper_bound(axis.begin(), axis.end(), c[i]);
    idx[i] = static_cast<std::size_t>(it - axis.begin()) - 1;
  }
  return detail::grid_cell(grid, idx);
}

}  // namespace blockdec
