#pragma once

#include <algorithm>
#include <cstddef>
#include <numeric>
#include <stdexcept>
#include <vector>

#include "blockdec/core.hpp"

// Block subtraction (block minus principal monomial ideal, an L-shaped
// "gnomon" split into at most n blocks) and the gnomon decomposition built
// by folding the generators into the full quadrant one at a time.

namespace blockdec {

/// c_i = max(inner_i, m_i): the corner where the principal ideal <x^m>
/// enters the block.
inline ExponentVector cut_point(const Block& b, const ExponentVector& m) {
  detail::require_same_dimension(b.dimension(), m.size());
  detail::require_nonnegative(m);
  ExponentVector c(m.size());
  for (std::size_t i = 0; i < m.size(); ++i)
    c[i] = std::max(b.inner()[i], m[i]);
  return c;
}

/// The n pieces of one block-minus-principal-ideal subtraction. Empty
/// pieces are retained so concatenated results keep a uniform shape; they
/// are dropped only on user-facing output.
struct GnomonResult {
  std::vector<Block> pieces;
};

/// Nonempty pieces are pairwise disjoint and their union is
/// {p in B : x^m does not divide x^p}. When m fits under the outer corner,
/// piece i keeps columns j < i cut at c_j and stops column i at m_i - 1;
/// otherwise the subtraction changes nothing and piece 1 is the whole block.
inline GnomonResult block_subtract(const Block& b, const ExponentVector& m) {
  detail::require_same_dimension(b.dimension(), m.size());
  detail::require_nonnegative(m);
  const std::size_t n = b.dimension();
  GnomonResult out;
  out.pieces.reserve(n);
  if (!principal_meets(b, m)) {
    out.pieces.push_back(b);
    for (std::size_t i = 1; i < n; ++i)
      out.pieces.push_back(Block::empty_block(n));
    return out;
  }
  const ExponentVector c = cut_point(b, m);
  for (std::size_t i = 0; i < n; ++i) {
    ExponentVector inner(n);
    ExtentVector outer(n);
    for (std::size_t j = 0; j < n; ++j) {
      inner[j] = j < i ? c[j] : b.inner()[j];
      outer[j] = b.outer()[j];
    }
    outer[i] = predecessor(m[i]);
    out.pieces.emplace_back(std::move(inner), std::move(outer));
  }
  return out;
}

/// B ∩ <x^m> as a block: keep the outer corner, raise the inner corner to
/// the cut point. Empty whenever some m_i exceeds outer_i.
inline Block block_intersect_principal(const Block& b,
                                       const ExponentVector& m) {
  return Block(cut_point(b, m), b.outer());
}

/// Subtract <x^m> from every block of the decomposition and concatenate the
/// gnomon pieces block-major. The result decomposes the standard monomials
/// of the enlarged ideal; empty pieces ride along.
inline BlockDecomposition add_generator(const BlockDecomposition& d,
                                        const ExponentVector& m) {
  detail::require_same_dimension(d.dimension(), m.size());
  BlockDecomposition out(d.dimension());
  for (const Block& b : d.blocks())
    for (Block& piece : block_subtract(b, m).pieces) out.append(std::move(piece));
  return out;
}

using Permutation = std::vector<std::size_t>;

inline Permutation identity_permutation(std::size_t n) {
  Permutation p(n);
  std::iota(p.begin(), p.end(), std::size_t{0});
  return p;
}

inline void require_permutation(const Permutation& p, std::size_t n) {
  if (p.size() != n)
    throw std::invalid_argument("permutation has wrong length");
  std::vector<bool> seen(n, false);
  for (std::size_t v : p) {
    if (v >= n || seen[v]) throw std::invalid_argument("not a permutation");
    seen[v] = true;
  }
}

namespace detail {

inline ExponentVector permuted(const Permutation& pi,
                               const ExponentVector& v) {
  ExponentVector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = v[pi[i]];
  return out;
}

inline Block unpermuted(const Permutation& pi, const Block& b) {
  ExponentVector inner(b.dimension());
  ExtentVector outer(b.dimension());
  for (std::size_t i = 0; i < b.dimension(); ++i) {
    inner[pi[i]] = b.inner()[i];
    outer[pi[i]] = b.outer()[i];
  }
  return Block(std::move(inner), std::move(outer));
}

}  // namespace detail

/// Fold the generators into the full quadrant one subtraction at a time,
/// taking the generators in the given order, with the variables temporarily
/// renamed so that axis i plays the role of original axis pi[i]. Different
/// generator orders and different pi may give genuinely different results.
inline BlockDecomposition gnomon_decomposition(const MonomialIdeal& ideal,
                                               const Permutation& generator_order,
                                               const Permutation& pi) {
  require_permutation(generator_order, ideal.generators().size());
  require_permutation(pi, ideal.dimension());
  BlockDecomposition d(ideal.dimension(),
                       {Block::full_quadrant(ideal.dimension())});
  for (std::size_t k : generator_order)
    d = add_generator(d, detail::permuted(pi, ideal.generators()[k]));
  BlockDecomposition out(d.dimension());
  for (const Block& b : d.blocks()) out.append(detail::unpermuted(pi, b));
  return out;
}

inline BlockDecomposition gnomon_decomposition(const MonomialIdeal& ideal) {
  return gnomon_decomposition(
      ideal, identity_permutation(ideal.generators().size()),
      identity_permutation(ideal.dimension()));
}

}  // namespace blockdec
