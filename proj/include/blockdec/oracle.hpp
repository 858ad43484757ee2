#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "blockdec/core.hpp"

// Brute-force ground truth. Membership in an ideal or a block is a
// coordinatewise threshold condition, so once the truncation bound exceeds
// every generator coordinate and every finite block bound, clamping a point
// to the grid preserves both memberships. Checking the partition on the
// truncated grid therefore certifies it everywhere.

namespace blockdec {

namespace detail {

inline constexpr std::size_t kGridPointCap = std::size_t{1} << 24;

inline std::size_t checked_grid_size(std::size_t n, Exponent bound) {
  if (bound < 1) throw std::invalid_argument("truncation bound must be >= 1");
  std::size_t total = 1;
  for (std::size_t i = 0; i < n; ++i) {
    if (total > kGridPointCap / static_cast<std::size_t>(bound))
      throw std::length_error("truncated grid too large");
    total *= static_cast<std::size_t>(bound);
  }
  return total;
}

}  // namespace detail

/// Exclusive per-axis bound that is strictly above every generator
/// coordinate and every finite block bound, plus one more: clamping any
/// point's coordinates to bound - 1 then preserves ideal membership and
/// membership in every block of the decomposition.
inline Exponent sufficient_truncation(const MonomialIdeal& ideal,
                                      const BlockDecomposition& d) {
  detail::require_same_dimension(ideal.dimension(), d.dimension());
  Exponent top = 0;
  for (const auto& g : ideal.generators())
    for (Exponent e : g) top = std::max(top, e);
  for (const Block& b : d.blocks()) {
    for (Exponent e : b.inner()) top = std::max(top, e);
    for (const Extent& e : b.outer())
      if (e.is_natural()) top = std::max(top, e.value());
  }
  return top + 2;
}

inline ExponentVector clamp_point(ExponentVector p, Exponent max_value) {
  for (Exponent& e : p) e = std::min(e, max_value);
  return p;
}

/// All standard monomials of the ideal on the grid [0, bound)^n, in
/// lexicographic order.
inline std::vector<ExponentVector> enumerate_standard_monomials(
    const MonomialIdeal& ideal, Exponent bound) {
  const std::size_t n = ideal.dimension();
  detail::checked_grid_size(n, bound);
  std::vector<ExponentVector> points;
  std::vector<std::size_t> radices(n, static_cast<std::size_t>(bound));
  ExponentVector p(n);
  detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Exponent>(idx[i]);
    if (!ideal.contains(p)) points.push_back(p);
  });
  return points;
}

struct PartitionReport {
  bool ok = true;
  Exponent truncation = 0;
  std::optional<ExponentVector> counterexample;  // lexicographically least
  std::string detail;

  explicit operator bool() const { return ok; }
};

/// Certify that the nonempty blocks partition the standard monomials: on
/// the truncated grid every standard point must lie in exactly one block
/// and every ideal point in none. By the clamping guarantee this decides
/// the full infinite partition. An explicit truncation must be at least the
/// sufficient bound.
inline PartitionReport verify_partition(
    const BlockDecomposition& d, const MonomialIdeal& ideal,
    std::optional<Exponent> truncation = {}) {
  detail::require_same_dimension(d.dimension(), ideal.dimension());
  const std::size_t n = d.dimension();
  const Exponent needed = sufficient_truncation(ideal, d);
  Exponent bound = needed;
  if (truncation) {
    if (*truncation < needed)
      throw std::invalid_argument(
          "truncation " + std::to_string(*truncation) +
          " is below the sufficient bound " + std::to_string(needed));
    bound = *truncation;
  }
  const std::size_t total = detail::checked_grid_size(n, bound);

  std::vector<std::uint16_t> cover(total, 0);
  for (const Block& b : d.blocks()) {
    if (b.is_empty()) continue;
    std::vector<Exponent> lo(n), hi(n);
    bool inside = true;
    for (std::size_t i = 0; i < n; ++i) {
      lo[i] = b.inner()[i];
      hi[i] = b.outer()[i].is_infinite()
                  ? bound - 1
                  : std::min(b.outer()[i].value(), bound - 1);
      if (lo[i] > hi[i]) inside = false;
    }
    if (!inside) continue;
    std::vector<std::size_t> radices(n);
    for (std::size_t i = 0; i < n; ++i)
      radices[i] = static_cast<std::size_t>(hi[i] - lo[i] + 1);
    detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
      std::size_t flat = 0;
      for (std::size_t i = 0; i < n; ++i)
        flat = flat * static_cast<std::size_t>(bound) +
               static_cast<std::size_t>(lo[i]) + idx[i];
      ++cover[flat];
    });
  }

  PartitionReport report;
  report.truncation = bound;
  std::vector<std::size_t> radices(n, static_cast<std::size_t>(bound));
  ExponentVector p(n);
  std::size_t flat = 0;
  bool done = false;
  detail::for_each_tuple(radices, [&](const std::vector<std::size_t>& idx) {
    if (done) {
      ++flat;
      return;
    }
    for (std::size_t i = 0; i < n; ++i) p[i] = static_cast<Exponent>(idx[i]);
    const bool standard = !ideal.contains(p);
    const std::uint16_t hits = cover[flat];
    if (standard ? hits != 1 : hits != 0) {
      report.ok = false;
      report.counterexample = p;
      report.detail = standard
                          ? ("standard monomial covered by " +
                             std::to_string(hits) + " blocks")
                          : ("ideal monomial covered by " +
                             std::to_string(hits) + " blocks");
      done = true;
    }
    ++flat;
  });
  return report;
}

}  // namespace blockdec
