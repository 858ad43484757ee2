#include <catch2/catch_amalgamated.hpp>

#include "blockdec/elementary.hpp"
#include "blockdec/gnomon.hpp"
#include "blockdec/oracle.hpp"
#include "support.hpp"

using namespace blockdec;
using testsupport::INF;
using testsupport::Rng;

namespace {

const MonomialIdeal kRunning(2, {{3, 9}, {7, 5}});

}  // namespace

TEST_CASE("cut point") {
  CHECK(cut_point(Block({3, 0}, {INF, 8}), {7, 5}) == ExponentVector{7, 5});
  CHECK(cut_point(Block({5, 5}, {9, 9}), {3, 3}) == ExponentVector{5, 5});
  CHECK(cut_point(Block({0, 2, 0}, {INF, INF, 2}), {3, 1, 1}) ==
        ExponentVector{3, 2, 1});
}

TEST_CASE("block subtraction") {
  SECTION("quadrant minus one generator") {
    const GnomonResult g = block_subtract(Block::full_quadrant(2), {3, 9});
    CHECK(g.pieces.size() == 2);
    CHECK(g.pieces[0] == Block({0, 0}, {2, INF}));
    CHECK(g.pieces[1] == Block({3, 0}, {INF, 8}));
  }
  SECTION("generator misses the block") {
    const Block b({0, 0}, {2, INF});
    const GnomonResult g = block_subtract(b, {7, 5});
    CHECK(g.pieces[0] == b);
    CHECK(g.pieces[1].is_empty());
  }
  SECTION("generator below the block") {
    const Block b({7, 0}, {INF, 4});
    const GnomonResult g = block_subtract(b, {3, 9});
    CHECK(g.pieces[0] == b);
    CHECK(g.pieces[1].is_empty());
  }
  SECTION("interior cut") {
    const GnomonResult g = block_subtract(Block({3, 0}, {INF, 8}), {7, 5});
    CHECK(g.pieces[0] == Block({3, 0}, {6, 8}));
    CHECK(g.pieces[1] == Block({7, 0}, {INF, 4}));
  }
}

TEST_CASE("block intersect principal") {
  CHECK(block_intersect_principal(Block::full_quadrant(2), {3, 9}) ==
        Block({3, 9}, {INF, INF}));
  CHECK(block_intersect_principal(Block({0, 0}, {2, INF}), {7, 5}).is_empty());
  CHECK(block_intersect_principal(Block({3, 0}, {INF, 8}), {7, 5}) ==
        Block({7, 5}, {INF, 8}));
}

TEST_CASE("add generator") {
  const BlockDecomposition start(2, {Block::full_quadrant(2)});
  const BlockDecomposition first = add_generator(start, {3, 9});
  CHECK(first.nonempty_blocks() ==
        std::vector<Block>{Block({0, 0}, {2, INF}), Block({3, 0}, {INF, 8})});

  const BlockDecomposition second = add_generator(first, {7, 5});
  CHECK(second.nonempty_blocks() ==
        std::vector<Block>{Block({0, 0}, {2, INF}), Block({3, 0}, {6, 8}),
                           Block({7, 0}, {INF, 4})});

  const BlockDecomposition killed = add_generator(second, {0, 0});
  CHECK(killed.nonempty_count() == 0);
}

TEST_CASE("gnomon decomposition of the running example") {
  const std::vector<Block> expected = {
      Block({0, 0}, {2, INF}), Block({3, 0}, {6, 8}), Block({7, 0}, {INF, 4})};

  SECTION("natural generator order") {
    const BlockDecomposition d = gnomon_decomposition(kRunning);
    CHECK(d.nonempty_blocks() == expected);
    CHECK(verify_partition(d, kRunning).ok);
  }
  SECTION("reversed generator order gives the same result here") {
    const BlockDecomposition d =
        gnomon_decomposition(kRunning, {1, 0}, identity_permutation(2));
    CHECK(d.nonempty_blocks() == expected);
  }
  SECTION("swapped variable order") {
    const BlockDecomposition d =
        gnomon_decomposition(kRunning, identity_permutation(2), {1, 0});
    CHECK(d.nonempty_blocks() ==
          std::vector<Block>{Block({0, 0}, {INF, 4}), Block({0, 5}, {6, 8}),
                             Block({0, 9}, {2, INF})});
    CHECK(verify_partition(d, kRunning).ok);
  }
}

TEST_CASE("gnomon decomposition with noncommuting generators") {
  const MonomialIdeal ideal(3, {{5, 3, 7}, {10, 6, 2}});

  const BlockDecomposition natural = gnomon_decomposition(ideal);
  CHECK(natural.nonempty_blocks() ==
        std::vector<Block>{
            Block({0, 0, 0}, {4, INF, INF}), Block({5, 0, 0}, {INF, 2, INF}),
            Block({5, 3, 0}, {9, INF, 6}), Block({10, 3, 0}, {INF, 5, 6}),
            Block({10, 6, 0}, {INF, INF, 1})});

  const BlockDecomposition reversed =
      gnomon_decomposition(ideal, {1, 0}, identity_permutation(3));
  CHECK(reversed.nonempty_blocks() ==
        std::vector<Block>{
            Block({0, 0, 0}, {4, INF, INF}), Block({5, 0, 0}, {9, 2, INF}),
            Block({5, 3, 0}, {9, INF, 6}), Block({10, 0, 0}, {INF, 2, INF}),
            Block({10, 3, 0}, {INF, 5, 6}), Block({10, 6, 0}, {INF, INF, 1})});

  CHECK(verify_partition(natural, ideal).ok);
  CHECK(verify_partition(reversed, ideal).ok);
}

TEST_CASE("gnomon decomposition with empty middle piece") {
  const MonomialIdeal ideal(3, {{0, 0, 5}, {0, 2, 3}, {3, 1, 1}});
  const BlockDecomposition d = gnomon_decomposition(ideal);
  CHECK(d.nonempty_blocks() ==
        std::vector<Block>{
            Block({0, 0, 0}, {2, 1, 4}), Block({3, 0, 0}, {INF, 0, 4}),
            Block({3, 1, 0}, {INF, 1, 0}), Block({0, 2, 0}, {2, INF, 2}),
            Block({3, 2, 0}, {INF, INF, 0})});

  // the final gnomon splits [inf inf 2 / 0 2 0] with its middle piece empty
  const GnomonResult last =
      block_subtract(Block({0, 2, 0}, {INF, INF, 2}), {3, 1, 1});
  CHECK_FALSE(last.pieces[0].is_empty());
  CHECK(last.pieces[1].is_empty());
  CHECK_FALSE(last.pieces[2].is_empty());

  CHECK(verify_partition(d, ideal).ok);
}

TEST_CASE("permutation plumbing") {
  CHECK_THROWS_AS(gnomon_decomposition(kRunning, {0, 0}, {0, 1}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gnomon_decomposition(kRunning, {0, 1}, {1, 2}),
                  std::invalid_argument);
  CHECK_THROWS_AS(gnomon_decomposition(kRunning, {0}, {0, 1}),
                  std::invalid_argument);
}

TEST_CASE("subtraction lemmas against grid enumeration") {
  Rng rng(5200);
  for (int iter = 0; iter < 250; ++iter) {
    const std::size_t n = rng.range(2, 4);
    const Block b = testsupport::random_block(rng, n, 6);
    ExponentVector m(n);
    if (!b.is_empty() && rng.chance(0.5)) {
      // force m under the outer corner so the cut case is well exercised
      for (std::size_t i = 0; i < n; ++i) {
        const Exponent top = b.outer()[i].is_infinite()
                                 ? 6
                                 : std::min<Exponent>(6, b.outer()[i].value());
        m[i] = rng.range(0, top);
      }
    } else {
      m = testsupport::random_point(rng, n, 6);
    }
    const Exponent bound = testsupport::instance_truncation(b, m);
    const auto inside = testsupport::block_points(b, bound);

    std::set<ExponentVector> survivors, removed;
    for (const auto& p : inside)
      (divides(m, p) ? removed : survivors).insert(p);

    // the nonempty pieces partition the survivors
    const GnomonResult g = block_subtract(b, m);
    REQUIRE(g.pieces.size() == n);
    std::set<ExponentVector> covered;
    std::size_t covered_count = 0;
    for (const Block& piece : g.pieces) {
      if (piece.is_empty()) continue;
      const auto pts = testsupport::block_points(piece, bound);
      covered_count += pts.size();
      covered.insert(pts.begin(), pts.end());
    }
    CHECK(covered == survivors);
    CHECK(covered_count == covered.size());  // pairwise disjoint

    // the principal intersection block matches the removed points
    CHECK(testsupport::block_points(block_intersect_principal(b, m), bound) ==
          removed);

    // telescoping: pieces i..n plus the principal intersection rebuild the
    // block cut at the first i-1 columns
    if (principal_meets(b, m)) {
      const ExponentVector c = cut_point(b, m);
      for (std::size_t i = 0; i < n; ++i) {
        std::set<ExponentVector> tail;
        std::size_t tail_count = 0;
        for (std::size_t j = i; j < n; ++j) {
          const auto pts = testsupport::block_points(g.pieces[j], bound);
          tail_count += pts.size();
          tail.insert(pts.begin(), pts.end());
        }
        const auto corner_pts = testsupport::block_points(
            block_intersect_principal(b, m), bound);
        tail_count += corner_pts.size();
        tail.insert(corner_pts.begin(), corner_pts.end());

        ExponentVector inner(n);
        for (std::size_t j = 0; j < n; ++j)
          inner[j] = j < i ? c[j] : b.inner()[j];
        CHECK(tail ==
              testsupport::block_points(Block(inner, b.outer()), bound));
        CHECK(tail_count == tail.size());
      }
    }
  }
}

TEST_CASE("gnomon blocks refine the elementary blocks") {
  Rng rng(5201);
  for (int iter = 0; iter < 30; ++iter) {
    const std::size_t n = rng.range(2, 3);
    const MonomialIdeal ideal = testsupport::random_ideal(rng, n, 4, 5);
    const BlockDecomposition elementary = elementary_decomposition(ideal);
    const BlockDecomposition gnomon = gnomon_decomposition(ideal);
    for (const Block& e : elementary.blocks()) {
      for (const Block& g : gnomon.blocks()) {
        if (g.is_empty()) continue;
        const Block meet = intersection(e, g);
        if (meet.is_empty()) continue;
        // wholly inside: the elementary block never straddles a gnomon block
        CHECK(meet == e);
      }
    }
  }
}

TEST_CASE("gnomon partitions for random orders and variable permutations") {
  Rng rng(5202);
  for (int iter = 0; iter < 25; ++iter) {
    const std::size_t n = rng.range(2, 3);
    const MonomialIdeal ideal = testsupport::random_ideal(rng, n, 4, 5);
    Permutation order = identity_permutation(ideal.generators().size());
    Permutation pi = identity_permutation(n);
    std::shuffle(order.begin(), order.end(), rng.engine);
    std::shuffle(pi.begin(), pi.end(), rng.engine);
    const BlockDecomposition d = gnomon_decomposition(ideal, order, pi);
    CHECK(verify_partition(d, ideal).ok);
  }
}
