#include <gtest/gtest.h>

#include "fixtures.hpp"
#include "oracles.hpp"
#include "selflink/link.hpp"
#include "selflink/random.hpp"

using namespace selflink;
using fixtures::pt;

namespace {

Polyline random_polyline(Rng& rng, std::size_t points) {
  Polyline c;
  while (c.size() < points) {
    Point3 p = pt(uniform_int(rng, -4, 4), uniform_int(rng, -4, 4), uniform_int(rng, -4, 4));
    if (!c.empty() && c.back() == p) continue;
    c.push_back(p);
  }
  if (c.front() == c.back()) c.back().z += 1;
  return c;
}

/// A random disjoint pair, or nullopt if the draw happens to intersect.
std::optional<std::pair<Polyline, Polyline>> random_pair(Rng& rng) {
  Polyline a = random_polyline(rng, static_cast<std::size_t>(uniform_int(rng, 3, 7)));
  Polyline b = random_polyline(rng, static_cast<std::size_t>(uniform_int(rng, 3, 7)));
  if (curves_meet(a, b)) return std::nullopt;
  return std::make_pair(a, b);
}

LinkingMatrix matrix_of(const Ring& ring, const std::vector<std::vector<long>>& rows) {
  std::vector<std::vector<RingElement>> entries;
  for (const auto& row : rows) {
    entries.emplace_back();
    for (long v : row) entries.back().push_back(ring.from_integer(v));
  }
  return LinkingMatrix(ring, entries);
}

Point3 shift_of(long x, long y, long z) { return pt(x, y, z); }

}  // namespace

TEST(LinkingNumber, SplitPairIsZero) {
  EXPECT_EQ(linking_number(fixtures::square_xy(), fixtures::square_xy(20, 0, 0)), 0);
  EXPECT_EQ(linking_number(fixtures::square_xy(), fixtures::square_xy(0, 0, 3)), 0);
}

TEST(LinkingNumber, HopfPair) {
  const Polyline a = fixtures::square_xy(), b = fixtures::square_xz_threading();
  EXPECT_EQ(linking_number(a, b), 1);
  EXPECT_EQ(linking_number(b, a), 1);
  EXPECT_EQ(oracle::disc_intersection_index(b, a), std::optional<long>(1));
}

TEST(LinkingNumber, OrientationAndMultiplicity) {
  const Polyline a = fixtures::square_xy(), b = fixtures::square_xz_threading();
  EXPECT_EQ(linking_number(fixtures::reversed(a), b), -1);
  EXPECT_EQ(linking_number(a, fixtures::reversed(b)), -1);
  EXPECT_EQ(linking_number(fixtures::reversed(a), fixtures::reversed(b)), 1);
  EXPECT_EQ(linking_number(fixtures::doubled(a), b), 2);
  EXPECT_EQ(linking_number(b, fixtures::doubled(a)), 2);
}

TEST(LinkingNumber, OctagonThreadedTwice) {
  // Rectangle in y = 0 whose two vertical sides both pass through the
  // octagon's disc, in opposite directions: unlinked.
  const Polyline rect{pt(-1, 0, -3), pt(-1, 0, 3), pt(1, 0, 3), pt(1, 0, -3)};
  EXPECT_EQ(linking_number(fixtures::octagon_xy(), rect), 0);
  EXPECT_EQ(oracle::disc_intersection_index(rect, fixtures::octagon_xy()), std::optional<long>(0));
}

TEST(LinkingNumber, AgreesWithDiscOracle) {
  Rng rng(31);
  const Polyline disc = fixtures::octagon_xy();
  int checked = 0;
  for (int trial = 0; trial < 400; ++trial) {
    Polyline c = random_polyline(rng, static_cast<std::size_t>(uniform_int(rng, 3, 8)));
    for (auto& p : c) p.x = 2 * p.x, p.y = 2 * p.y, p.z = 2 * p.z + Rational(1, 3);
    if (curves_meet(c, disc)) continue;
    const auto expected = oracle::disc_intersection_index(c, disc);
    if (!expected) continue;
    EXPECT_EQ(linking_number(c, disc), *expected);
    EXPECT_EQ(linking_number(disc, c), *expected);
    ++checked;
  }
  EXPECT_GT(checked, 200);
}

TEST(LinkingNumber, SymmetricOnRandomPairs) {
  Rng rng(32);
  int checked = 0;
  while (checked < 200) {
    auto pair = random_pair(rng);
    if (!pair) continue;
    EXPECT_EQ(linking_number(pair->first, pair->second), linking_number(pair->second, pair->first));
    ++checked;
  }
}

TEST(LinkingNumber, InvariantUnderRigidMotionAndSubdivision) {
  const Polyline a = fixtures::square_xy(), b = fixtures::square_xz_threading();
  const Matrix3 rot = multiply(pythagorean_rotation(0, 3, 4, 5), pythagorean_rotation(2, 5, 12, 13));
  const Point3 shift = shift_of(7, -2, 11);
  EXPECT_EQ(linking_number(transform(a, rot, shift), transform(b, rot, shift)), 1);
  EXPECT_EQ(linking_number(fixtures::subdivided(a), fixtures::subdivided(b)), 1);

  Rng rng(33);
  int checked = 0;
  while (checked < 100) {
    auto pair = random_pair(rng);
    if (!pair) continue;
    const long lk = linking_number(pair->first, pair->second);
    const Matrix3 m = detail::perturbation(static_cast<std::size_t>(uniform_int(rng, 1, 23)));
    EXPECT_EQ(linking_number(transform(pair->first, m, shift), transform(pair->second, m, shift)), lk);
    EXPECT_EQ(linking_number(fixtures::subdivided(pair->first), pair->second), lk);
    ++checked;
  }
}

TEST(LinkingNumber, DegenerateProjectionIsResolved) {
  // Every projected crossing lies on a vertex or a vertical segment.
  const Polyline a{pt(0, 0, 0), pt(4, 0, 0), pt(4, 4, 0), pt(0, 4, 0)};
  const Polyline b{pt(2, 2, -1), pt(2, 2, 1), pt(6, 2, 1), pt(6, 2, -1)};
  EXPECT_FALSE(detail::count_over_crossings(a, b).has_value());
  EXPECT_EQ(linking_number(a, b), 1);
}

TEST(LinkingNumber, Errors) {
  const Polyline a = fixtures::square_xy();
  EXPECT_THROW(linking_number(a, a), PreconditionError);
  EXPECT_THROW(linking_number(a, {pt(2, -2, 0), pt(9, 9, 9), pt(9, 0, 9)}), PreconditionError);
  EXPECT_THROW(linking_number(a, {pt(0, 0, 5), pt(1, 0, 5)}), InputError);
  EXPECT_THROW(linking_number(a, {pt(0, 0, 5), pt(0, 0, 5), pt(1, 0, 5)}), InputError);
}

TEST(PolylineLink, Validation) {
  EXPECT_THROW(PolylineLink(std::vector<Polyline>{}), InputError);
  EXPECT_THROW(PolylineLink({fixtures::square_xy(), fixtures::square_xy(1, 0, 0)}), InputError);
  const Polyline bowtie{pt(0, 0, 0), pt(2, 2, 0), pt(2, 0, 0), pt(0, 2, 0)};
  EXPECT_THROW(PolylineLink({bowtie}), InputError);
  EXPECT_THROW(PolylineLink(std::vector<Polyline>(13, fixtures::square_xy())), PreconditionError);
  EXPECT_NO_THROW(PolylineLink({fixtures::square_xy(), fixtures::square_xz_threading()}));
}

TEST(LinkingMatrixTest, FromLink) {
  Ring z = Ring::integers();
  PolylineLink link({fixtures::square_xy(), fixtures::square_xz_threading(), fixtures::square_xy(30, 0, 0)});
  LinkingMatrix m = linking_matrix(link, z);
  EXPECT_EQ(m, matrix_of(z, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
  EXPECT_EQ(self_linking_weight(m), z.zero());
  Ring m2 = Ring::modular(2);
  EXPECT_EQ(linking_matrix(link, m2), matrix_of(m2, {{0, 1, 0}, {1, 0, 0}, {0, 0, 0}}));
}

TEST(LinkingMatrixTest, Validation) {
  Ring z = Ring::integers();
  EXPECT_THROW(matrix_of(z, {{0, 1}, {2, 0}}), InputError);
  EXPECT_THROW(matrix_of(z, {{0, 1}, {1}}), InputError);
  EXPECT_THROW(matrix_of(z, {}), PreconditionError);
  // Diagonal is forced to zero.
  EXPECT_EQ(matrix_of(z, {{5, 1}, {1, 7}}), matrix_of(z, {{0, 1}, {1, 0}}));
  LinkingMatrix m = LinkingMatrix::zero(z, 3);
  EXPECT_THROW(m.set(1, 1, z.one()), PreconditionError);
  EXPECT_THROW(m.set(0, 3, z.one()), PreconditionError);
  EXPECT_THROW(m.set(0, 1, Ring::modular(3).one()), PreconditionError);
}

TEST(SelfLinkingWeight, Examples) {
  Ring z = Ring::integers();
  EXPECT_EQ(self_linking_weight(LinkingMatrix::zero(z, 1)), z.one());
  EXPECT_EQ(self_linking_weight(matrix_of(z, {{0, 3}, {3, 0}})), z.from_integer(3));
  // A chain 0-1-2 with unit links: exactly one spanning tree is supported.
  EXPECT_EQ(self_linking_weight(matrix_of(z, {{0, 1, 0}, {1, 0, 1}, {0, 1, 0}})), z.one());
  EXPECT_EQ(self_linking_weight(matrix_of(z, {{0, 1, 1}, {1, 0, 1}, {1, 1, 0}})), z.from_integer(3));
}

TEST(SelfLinkingWeight, InvariantUnderRelabelling) {
  Rng rng(34);
  for (const Ring& ring : fixtures::all_ring_kinds()) {
    for (unsigned n = 1; n <= 5; ++n) {
      LinkingMatrix m = LinkingMatrix::from_edge_vector(random_edge_vector(rng, CompleteGraph(n), ring));
      for (int k = 0; k < 5; ++k) {
        EXPECT_EQ(self_linking_weight(m.permuted(random_permutation(rng, n))), self_linking_weight(m));
      }
    }
  }
}

TEST(SelfLinkingWeight, SplitComponentGivesZero) {
  Rng rng(35);
  for (const Ring& ring : fixtures::all_ring_kinds()) {
    for (unsigned n = 2; n <= 6; ++n) {
      LinkingMatrix m = LinkingMatrix::from_edge_vector(random_edge_vector(rng, CompleteGraph(n), ring));
      const auto r = static_cast<std::size_t>(uniform_int(rng, 0, n - 1));
      for (std::size_t j = 0; j < n; ++j)
        if (j != r) m.set(r, j, ring.zero());
      EXPECT_TRUE(self_linking_weight(m).is_zero());
    }
  }
}

TEST(SelfLinkingWeight, MatchesTreeProductOracle) {
  Rng rng(36);
  for (const Ring& ring : fixtures::all_ring_kinds()) {
    for (unsigned n = 1; n <= 5; ++n) {
      LinkingMatrix m = LinkingMatrix::from_edge_vector(random_edge_vector(rng, CompleteGraph(n), ring));
      const RingElement expected = oracle::weight_by_tree_products(m);
      EXPECT_EQ(self_linking_weight(m, Evaluator::TreeSum), expected);
      EXPECT_EQ(self_linking_weight(m, Evaluator::Determinant), expected);
    }
  }
}
