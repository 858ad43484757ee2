#pragma once

// Shared helpers for the test suites: deterministic random generators for
// ideals, blocks and points, plus set-level brute-force oracles on truncated
// grids that stay independent of the decomposition algorithms under test.

#include <algorithm>
#include <map>
#include <random>
#include <set>
#include <vector>

#include "blockdec/core.hpp"
#include "blockdec/elementary.hpp"
#include "blockdec/gnomon.hpp"
#include "blockdec/stanley.hpp"

namespace testsupport {

using namespace blockdec;

inline const Extent INF = Extent::infinity();

struct Rng {
  std::mt19937 engine;

  explicit Rng(std::uint32_t seed) : engine(seed) {}

  // inclusive bounds
  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return std::uniform_int_distribution<std::int64_t>(lo, hi)(engine);
  }

  bool chance(double p) {
    return std::uniform_real_distribution<double>(0.0, 1.0)(engine) < p;
  }
};

inline ExponentVector random_point(Rng& rng, std::size_t n, Exponent max) {
  ExponentVector p(n);
  for (auto& e : p) e = rng.range(0, max);
  return p;
}

inline MonomialIdeal random_ideal(Rng& rng, std::size_t n,
                                  std::size_t max_generators, Exponent max) {
  const std::size_t count = rng.range(1, static_cast<std::int64_t>(max_generators));
  std::vector<ExponentVector> gens;
  for (std::size_t i = 0; i < count; ++i) gens.push_back(random_point(rng, n, max));
  return MonomialIdeal(n, std::move(gens));
}

inline Block random_block(Rng& rng, std::size_t n, Exponent max,
                          double infinite_chance = 0.35) {
  ExponentVector inner(n);
  ExtentVector outer(n);
  for (std::size_t i = 0; i < n; ++i) {
    inner[i] = rng.range(0, max);
    if (rng.chance(infinite_chance))
      outer[i] = Extent::infinity();
    else
      outer[i] = Extent(rng.range(inner[i], max));
  }
  return Block(std::move(inner), std::move(outer));
}

// All points of the block with coordinates < bound.
inline std::set<ExponentVector> block_points(const Block& b, Exponent bound) {
  std::set<ExponentVector> points;
  if (b.is_empty()) return points;
  const std::size_t n = b.dimension();
  std::vector<Exponent> lo(n), hi(n);
  for (std::size_t i = 0; i < n; ++i) {
    lo[i] = b.inner()[i];
    hi[i] = b.outer()[i].is_infinite() ? bound - 1
                                       : std::min(b.outer()[i].value(), bound - 1);
    if (lo[i] > hi[i]) return points;
  }
  std::vector<std::size_t> radices(n);
  for (std::size_t i = 0; i < n; ++i)
    radices[i] = static_cast<std::size_t>(hi[i] - lo[i] + 1);
  detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
    ExponentVector p(n);
    for (std::size_t i = 0; i < n; ++i)
      p[i] = lo[i] + static_cast<Exponent>(idx[i]);
    points.insert(std::move(p));
  });
  return points;
}

inline std::set<ExponentVector> grid_points(std::size_t n, Exponent bound) {
  return block_points(Block::full_quadrant(n), bound);
}

inline std::set<ExponentVector> ideal_points(const MonomialIdeal& ideal,
                                             Exponent bound) {
  std::set<ExponentVector> points;
  for (const auto& p : grid_points(ideal.dimension(), bound))
    if (ideal.contains(p)) points.insert(p);
  return points;
}

// Max coordinate mentioned anywhere in the block plus 2, matching the
// clamping argument used throughout.
inline Exponent block_truncation(const Block& b) {
  Exponent top = 0;
  for (Exponent e : b.inner()) top = std::max(top, e);
  for (const Extent& e : b.outer())
    if (e.is_natural()) top = std::max(top, e.value());
  return top + 2;
}

inline Exponent instance_truncation(const Block& b, const ExponentVector& m) {
  Exponent top = block_truncation(b) - 2;
  for (Exponent e : m) top = std::max(top, e);
  return top + 2;
}

// Exhaustive search for a partition of the block into Stanley blocks that
// uses at most `limit` pieces. Works on the truncated grid, which decides
// the infinite question by the usual clamping argument. The piece covering
// the lexicographically least uncovered point must be based exactly there
// (anything lower would already be covered), so only the free-variable
// subset branches.
inline bool stanley_partition_with_fewer_pieces(const Block& block,
                                                std::uint64_t limit) {
  const Exponent bound = block_truncation(block);
  const std::vector<ExponentVector> points = [&] {
    const auto set = block_points(block, bound);
    return std::vector<ExponentVector>(set.begin(), set.end());
  }();
  const std::vector<std::size_t> unbounded = unbounded_columns(block);

  std::map<ExponentVector, std::size_t> index;
  for (std::size_t i = 0; i < points.size(); ++i) index[points[i]] = i;

  std::vector<bool> covered(points.size(), false);
  std::size_t covered_count = 0;

  auto candidate_points = [&](const ExponentVector& base, std::size_t subset) {
    std::vector<std::size_t> hits;
    std::vector<std::size_t> free;
    for (std::size_t k = 0; k < unbounded.size(); ++k)
      if (subset & (std::size_t{1} << k)) free.push_back(unbounded[k]);
    std::vector<std::size_t> radices;
    for (std::size_t axis : free)
      radices.push_back(static_cast<std::size_t>(bound - base[axis]));
    detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
      ExponentVector p = base;
      for (std::size_t k = 0; k < free.size(); ++k)
        p[free[k]] += static_cast<Exponent>(idx[k]);
      hits.push_back(index.at(p));
    });
    return hits;
  };

  auto dfs = [&](auto&& self, std::uint64_t used) -> bool {
    if (covered_count == points.size()) return true;
    if (used == limit) return false;
    std::size_t first = 0;
    while (covered[first]) ++first;
    const ExponentVector base = points[first];
    std::set<std::vector<std::size_t>> seen;
    for (std::size_t subset = 0;
         subset < (std::size_t{1} << unbounded.size()); ++subset) {
      std::vector<std::size_t> hits = candidate_points(base, subset);
      if (!seen.insert(hits).second) continue;
      bool clash = false;
      for (std::size_t h : hits) clash = clash || covered[h];
      if (clash) continue;
      for (std::size_t h : hits) covered[h] = true;
      covered_count += hits.size();
      if (self(self, used + 1)) return true;
      for (std::size_t h : hits) covered[h] = false;
      covered_count -= hits.size();
    }
    return false;
  };

  return dfs(dfs, 0);
}

}  // namespace testsupport
