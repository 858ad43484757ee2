#pragma once

#include <algorithm>
#include <cstddef>
#include <cstdint>
#include <limits>
#include <ostream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

// Exact combinatorics of monomial ideals in Newton space: exponent vectors,
// axis-aligned blocks whose upper extents may be infinite, minimal generating
// sets, and ordered block decompositions. All types are immutable values and
// every operation is a pure function, so everything can be shared across
// threads without synchronization.

namespace blockdec {

using Exponent = std::int64_t;

/// A point of N^n, identified with the monomial having these exponents.
using ExponentVector = std::vector<Exponent>;

namespace detail {

inline void require_same_dimension(std::size_t a, std::size_t b) {
  if (a != b)
    throw std::invalid_argument("dimension mismatch: " + std::to_string(a) +
                                " vs " + std::to_string(b));
}

inline void require_nonnegative(const ExponentVector& v) {
  for (Exponent e : v)
    if (e < 0) throw std::invalid_argument("exponents must be nonnegative");
}

// Calls f(idx) once per tuple of the mixed-radix product {0..radix_i - 1},
// in lexicographic order with index 0 most significant. No calls if any
// radix is zero.
template <typename F>
void for_each_tuple(const std::vector<std::size_t>& radices, F&& f) {
  for (std::size_t r : radices)
    if (r == 0) return;
  std::vector<std::size_t> idx(radices.size(), 0);
  if (radices.empty()) {
    f(idx);
    return;
  }
  while (true) {
    f(idx);
    std::size_t i = radices.size();
    while (i > 0 && ++idx[i - 1] == radices[i - 1]) {
      idx[i - 1] = 0;
      --i;
    }
    if (i == 0) return;
  }
}

}  // namespace detail

/// Division partial order on exponent vectors: x^g divides x^m.
inline bool divides(const ExponentVector& g, const ExponentVector& m) {
  detail::require_same_dimension(g.size(), m.size());
  for (std::size_t i = 0; i < g.size(); ++i)
    if (g[i] > m[i]) return false;
  return true;
}

/// Upper bound of one interval in a block: a natural number, infinity, or
/// the below-zero mark that makes intervals such as [0, m-1] with m = 0
/// empty. Extents compare (infinity above every natural, below-zero under
/// everything) but carry no arithmetic; in particular infinity - 1 cannot
/// be formed.
class Extent {
 public:
  constexpr Extent() = default;
  constexpr Extent(Exponent value) : v_(value) {
    if (value < 0 || value == kInfMark)
      throw std::invalid_argument("extent value out of range");
  }

  static constexpr Extent infinity() {
    Extent e;
    e.v_ = kInfMark;
    return e;
  }
  static constexpr Extent below_zero() {
    Extent e;
    e.v_ = -1;
    return e;
  }

  constexpr bool is_infinite() const { return v_ == kInfMark; }
  constexpr bool is_natural() const { return v_ >= 0 && v_ != kInfMark; }

  /// The numeric value; only natural extents have one.
  constexpr Exponent value() const {
    if (!is_natural()) throw std::domain_error("extent has no natural value");
    return v_;
  }

  friend constexpr auto operator<=>(const Extent&, const Extent&) = default;

 private:
  static constexpr Exponent kInfMark = std::numeric_limits<Exponent>::max();
  Exponent v_ = 0;
};

using ExtentVector = std::vector<Extent>;

/// m - 1 as an interval top; below_zero when m = 0.
constexpr Extent predecessor(Exponent m) {
  return m > 0 ? Extent(m - 1) : Extent::below_zero();
}

inline std::ostream& operator<<(std::ostream& os, const Extent& e) {
  if (e.is_infinite()) return os << "inf";
  if (!e.is_natural()) return os << "-1";
  return os << e.value();
}

/// A rectangular set of exponent vectors: the Cartesian product of the
/// intervals [inner_i, outer_i], conventionally written as a 2 x n matrix
/// with the outer corner on top. Empty iff some interval has
/// outer_i < inner_i.
/// Empty blocks are legitimate values (the gnomon algorithms index over
/// them); they are filtered out only when rendering results.
class Block {
 public:
  Block(ExponentVector inner, ExtentVector outer)
      : inner_(std::move(inner)), outer_(std::move(outer)) {
    detail::require_same_dimension(inner_.size(), outer_.size());
    if (inner_.empty())
      throw std::invalid_argument("blocks need dimension >= 1");
    detail::require_nonnegative(inner_);
  }

  static Block full_quadrant(std::size_t n) {
    return Block(ExponentVector(n, 0), ExtentVector(n, Extent::infinity()));
  }

  static Block point(ExponentVector m) {
    ExtentVector outer;
    outer.reserve(m.size());
    for (Exponent e : m) outer.push_back(Extent(e));
    return Block(std::move(m), std::move(outer));
  }

  static Block empty_block(std::size_t n) {
    return Block(ExponentVector(n, 0), ExtentVector(n, Extent::below_zero()));
  }

  std::size_t dimension() const { return inner_.size(); }
  const ExponentVector& inner() const { return inner_; }
  const ExtentVector& outer() const { return outer_; }

  bool is_empty() const {
    for (std::size_t i = 0; i < dimension(); ++i)
      if (outer_[i] < Extent(inner_[i])) return true;
    return false;
  }

  bool contains(const ExponentVector& m) const {
    detail::require_same_dimension(dimension(), m.size());
    for (std::size_t i = 0; i < dimension(); ++i)
      if (m[i] < inner_[i] || outer_[i] < Extent(m[i])) return false;
    return true;
  }

  /// Every column is degenerate or infinite; the span of such a block is a
  /// Stanley space.
  bool is_stanley() const {
    for (std::size_t i = 0; i < dimension(); ++i)
      if (!outer_[i].is_infinite() && outer_[i] != Extent(inner_[i]))
        return false;
    return true;
  }

  friend bool operator==(const Block&, const Block&) = default;

 private:
  ExponentVector inner_;
  ExtentVector outer_;
};

/// Coordinatewise max of inners, min of outers; the result describes
/// exactly B1 ∩ B2 as a set (possibly an empty block).
inline Block intersection(const Block& b1, const Block& b2) {
  detail::require_same_dimension(b1.dimension(), b2.dimension());
  ExponentVector inner(b1.dimension());
  ExtentVector outer(b1.dimension());
  for (std::size_t i = 0; i < b1.dimension(); ++i) {
    inner[i] = std::max(b1.inner()[i], b2.inner()[i]);
    outer[i] = std::min(b1.outer()[i], b2.outer()[i]);
  }
  return Block(std::move(inner), std::move(outer));
}

inline bool disjoint(const Block& b1, const Block& b2) {
  return intersection(b1, b2).is_empty();
}

/// True iff m_i <= outer_i for all i, i.e. the principal ideal <x^m> meets
/// the block somewhere (assuming the block is nonempty).
inline bool principal_meets(const Block& b, const ExponentVector& m) {
  detail::require_same_dimension(b.dimension(), m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    if (b.outer()[i] < Extent(m[i])) return false;
  return true;
}

inline std::ostream& operator<<(std::ostream& os, const Block& b) {
  os << "[";
  for (const Extent& e : b.outer()) os << ' ' << e;
  os << " /";
  for (Exponent e : b.inner()) os << ' ' << e;
  return os << " ]";
}

/// A monomial ideal, stored by its unique minimal generating set. The
/// constructor discards generators divisible by another generator and keeps
/// the survivors in first-seen order; that order matters to the gnomon
/// algorithm and to filtration displays.
class MonomialIdeal {
 public:
  explicit MonomialIdeal(std::size_t dimension,
                         std::vector<ExponentVector> generators = {})
      : dim_(dimension) {
    if (dimension == 0)
      throw std::invalid_argument("ideals need dimension >= 1");
    for (auto& g : generators) {
      detail::require_same_dimension(dim_, g.size());
      detail::require_nonnegative(g);
      bool dominated = false;
      for (const auto& h : gens_)
        if (divides(h, g)) {
          dominated = true;
          break;
        }
      if (dominated) continue;
      std::erase_if(gens_,
                    [&](const ExponentVector& h) { return divides(g, h); });
      gens_.push_back(std::move(g));
    }
  }

  static MonomialIdeal zero(std::size_t n) { return MonomialIdeal(n); }
  static MonomialIdeal unit(std::size_t n) {
    return MonomialIdeal(n, {ExponentVector(n, 0)});
  }

  std::size_t dimension() const { return dim_; }

  /// Minimal generators, pairwise incomparable under divisibility.
  const std::vector<ExponentVector>& generators() const { return gens_; }

  bool contains(const ExponentVector& m) const {
    detail::require_same_dimension(dim_, m.size());
    for (const auto& g : gens_)
      if (divides(g, m)) return true;
    return false;
  }

  bool is_zero() const { return gens_.empty(); }

  bool is_unit() const {
    return gens_.size() == 1 &&
           std::all_of(gens_[0].begin(), gens_[0].end(),
                       [](Exponent e) { return e == 0; });
  }

  MonomialIdeal with_generator(ExponentVector m) const {
    auto gens = gens_;
    gens.push_back(std::move(m));
    return MonomialIdeal(dim_, std::move(gens));
  }

  /// Ideals are equal iff their minimal generating sets are equal as sets.
  friend bool operator==(const MonomialIdeal& a, const MonomialIdeal& b) {
    if (a.dim_ != b.dim_ || a.gens_.size() != b.gens_.size()) return false;
    auto sa = a.gens_;
    auto sb = b.gens_;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    return sa == sb;
  }

 private:
  std::size_t dim_;
  std::vector<ExponentVector> gens_;
};

/// The unique minimal generating subset with the same monomial membership.
inline MonomialIdeal minimalize_generators(std::size_t dimension,
                                           std::vector<ExponentVector> gens) {
  return MonomialIdeal(dimension, std::move(gens));
}

/// An ordered sequence of blocks. Consumers treat the order as meaningful
/// (subprimality is a property of ordered decompositions) and skip empty
/// blocks where appropriate.
class BlockDecomposition {
 public:
  explicit BlockDecomposition(std::size_t dimension,
                              std::vector<Block> blocks = {})
      : dim_(dimension), blocks_(std::move(blocks)) {
    if (dimension == 0)
      throw std::invalid_argument("decompositions need dimension >= 1");
    for (const Block& b : blocks_)
      detail::require_same_dimension(dim_, b.dimension());
  }

  std::size_t dimension() const { return dim_; }
  const std::vector<Block>& blocks() const { return blocks_; }
  std::size_t size() const { return blocks_.size(); }

  void append(Block b) {
    detail::require_same_dimension(dim_, b.dimension());
    blocks_.push_back(std::move(b));
  }

  std::vector<Block> nonempty_blocks() const {
    std::vector<Block> out;
    for (const Block& b : blocks_)
      if (!b.is_empty()) out.push_back(b);
    return out;
  }

  std::size_t nonempty_count() const {
    std::size_t n = 0;
    for (const Block& b : blocks_)
      if (!b.is_empty()) ++n;
    return n;
  }

  BlockDecomposition without_empty_blocks() const {
    return BlockDecomposition(dim_, nonempty_blocks());
  }

  BlockDecomposition reversed() const {
    std::vector<Block> blocks(blocks_.rbegin(), blocks_.rend());
    return BlockDecomposition(dim_, std::move(blocks));
  }

  friend bool operator==(const BlockDecomposition&,
                         const BlockDecomposition&) = default;

 private:
  std::size_t dim_;
  std::vector<Block> blocks_;
};

}  // namespace blockdec
