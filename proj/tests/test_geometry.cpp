#include <gtest/gtest.h>

#include <unordered_set>

#include "ddist/error.hpp"
#include "ddist/esgk.hpp"
#include "ddist/geometry.hpp"
#include "ddist/linalg.hpp"
#include "support.hpp"

namespace ddist {
namespace {

using testing::Gen;

TEST(Rat, CanonicalFormAndParsing) {
  EXPECT_EQ(Rat(2, 4), Rat(1, 2));
  EXPECT_EQ(Rat(3, -6).str(), "-1/2");
  EXPECT_EQ(Rat::parse("+5/-10"), Rat(-1, 2));
  EXPECT_EQ(Rat::parse("-12").str(), "-12");
  EXPECT_THROW(Rat::parse("1/0"), std::invalid_argument);
  EXPECT_THROW(Rat::parse("x"), std::invalid_argument);
  EXPECT_THROW(Rat(1) / Rat(0), std::domain_error);
}

TEST(Rat, ExactSqrt) {
  EXPECT_EQ(exact_sqrt(Rat(9, 4)), Rat(3, 2));
  EXPECT_FALSE(exact_sqrt(Rat(2)).has_value());
  EXPECT_FALSE(exact_sqrt(Rat(-4)).has_value());
  EXPECT_EQ(exact_sqrt(Rat(0)), Rat(0));
}

TEST(Rat, FieldIdentitiesOnRandomValues) {
  Gen g(11);
  for (int i = 0; i < 1000; ++i) {
    const Rat a = g.rat(50, 17);
    const Rat b = g.rat(50, 17);
    EXPECT_EQ((a + b) - b, a);
    if (!b.is_zero()) { EXPECT_EQ((a * b) / b, a); }
    if (a == b) { EXPECT_EQ(a.hash(), b.hash()); }
    const Rat c = (a * 3) / 3;
    EXPECT_EQ(c, a);
    EXPECT_EQ(c.hash(), a.hash());
  }
}

TEST(Sqdist, Examples) {
  EXPECT_EQ(sqdist2({0, 0}, {0, 0}), Rat(0));
  EXPECT_EQ(sqdist2({0, 0}, {3, 4}), Rat(25));
  EXPECT_EQ(sqdist2({Rat(1, 2), 0}, {0, Rat(1, 2)}), Rat(1, 2));
}

TEST(Bisector, Examples) {
  const OrLine2 b1 = bisector({0, 0}, {2, 0});
  EXPECT_EQ(line_key(b1), line_key(OrLine2({1, 0}, {0, 1})));
  EXPECT_EQ(line_key(bisector({0, 0}, {0, 2})), line_key(OrLine2({0, 1}, {1, 0})));
  const OrLine2 b3 = bisector({0, 0}, {2, 2});
  EXPECT_EQ(b3.base, (Pt2{1, 1}));
  EXPECT_TRUE(cross(b3.dir, {-1, 1}).is_zero());
  EXPECT_THROW(bisector({1, 1}, {1, 1}), Error);
}

TEST(Bisector, RandomPointsAreEquidistant) {
  Gen g(12);
  for (int i = 0; i < 1000; ++i) {
    const Pt2 p = g.pt();
    Pt2 q = g.pt();
    if (p == q) q = q + Pt2{1, 0};
    const OrLine2 b = bisector(p, q);
    const Pt2 x = b.base + g.rat() * b.dir;
    EXPECT_EQ(sqdist2(x, p), sqdist2(x, q));
  }
}

TEST(OrLine2, Orientation) {
  const OrLine2 a({0, 0}, {1, 2});
  EXPECT_TRUE(parallel(a, OrLine2({5, 5}, {2, 4})));
  EXPECT_TRUE(anti_parallel(a, OrLine2({5, 5}, {-1, -2})));
  EXPECT_FALSE(parallel(a, OrLine2({5, 5}, {-1, -2})));
  EXPECT_THROW(OrLine2({0, 0}, {0, 0}), Error);
}

TEST(Relate, Examples) {
  const Line3 z = Line3::non_horizontal(0, 0, 0, 0);
  EXPECT_EQ(relate_lines3(z, z).kind, RelationKind::Equal);

  const Line3 l1 = Line3::non_horizontal(Rat(1, 2), Rat(1, 2), Rat(-1, 2), Rat(1, 2));
  const Line3 l2 = Line3::non_horizontal(Rat(1, 2), Rat(1, 2), Rat(1, 2), Rat(1, 2));
  EXPECT_EQ(l1, rho_line({0, 0}, {1, 1}));
  EXPECT_EQ(l2, rho_line({1, 0}, {0, 1}));
  const auto rel = relate_lines3(l1, l2);
  ASSERT_EQ(rel.kind, RelationKind::Intersect);
  EXPECT_EQ(*rel.point, (Pt3{Rat(1, 2), Rat(1, 2), 0}));

  EXPECT_EQ(relate_lines3(rho_line({0, 0}, {1, 1}), rho_line({0, 1}, {1, 2})).kind, RelationKind::Parallel);
}

TEST(Relate, HorizontalAgainstOthers) {
  const Line3 h = Line3::horizontal(2, {0, 0}, {1, 0});
  EXPECT_EQ(relate_lines3(h, Line3::horizontal(2, {5, 0}, {-3, 0})).kind, RelationKind::Equal);
  EXPECT_EQ(relate_lines3(h, Line3::horizontal(3, {5, 0}, {-3, 0})).kind, RelationKind::Parallel);
  EXPECT_EQ(relate_lines3(h, Line3::horizontal(3, {0, 0}, {0, 1})).kind, RelationKind::Skew);
  const auto meet = relate_lines3(h, Line3::non_horizontal(1, 0, 0, 0));
  ASSERT_EQ(meet.kind, RelationKind::Intersect);
  EXPECT_EQ(*meet.point, (Pt3{2, 0, 2}));
}

Line3 random_line(Gen& g) {
  switch (g.range(0, 2)) {
    case 0: return Line3::non_horizontal(g.rat(2, 2), g.rat(2, 2), g.rat(2, 2), g.rat(2, 2));
    case 1: {
      Pt2 d{Rat(g.range(-2, 2)), Rat(g.range(-2, 2))};
      if (d == Pt2{0, 0}) d = {1, 0};
      return Line3::horizontal(g.rat(2, 1), g.pt(2, 2), d);
    }
    default: return rho_line(g.int_pt(2), g.int_pt(2));
  }
}

TEST(Relate, SymmetricAndPointOnBoth) {
  Gen g(13);
  int intersections = 0;
  for (int i = 0; i < 3000; ++i) {
    const Line3 a = random_line(g);
    const Line3 b = random_line(g);
    const auto ab = relate_lines3(a, b);
    const auto ba = relate_lines3(b, a);
    EXPECT_EQ(ab.kind, ba.kind);
    EXPECT_EQ(ab.point, ba.point);
    if (ab.kind == RelationKind::Intersect) {
      ++intersections;
      EXPECT_TRUE(a.contains(*ab.point));
      EXPECT_TRUE(b.contains(*ab.point));
    }
    if (ab.kind == RelationKind::Equal) { EXPECT_EQ(a, b); }
  }
  EXPECT_GT(intersections, 100);
}

TEST(Line3, ThroughPicksCanonicalForm) {
  const Line3 l = Line3::through({1, 2, 3}, {2, 4, 2});
  ASSERT_FALSE(l.is_horizontal());
  EXPECT_EQ(l.direction(), (Vec3{1, 2, 1}));
  EXPECT_TRUE(l.contains({1, 2, 3}));
  const Line3 h = Line3::through({1, 2, 3}, {4, 2, 0});
  ASSERT_TRUE(h.is_horizontal());
  EXPECT_EQ(h, Line3::horizontal(3, {-1, 1}, {2, 1}));
  EXPECT_EQ(h.hash(), Line3::horizontal(3, {-1, 1}, {2, 1}).hash());
}

TEST(CollinearOrCircle, Examples) {
  const auto line = collinear_or_circle({0, 0}, {1, 0}, {2, 0});
  ASSERT_TRUE(std::holds_alternative<OrLine2>(line));
  EXPECT_EQ(line_key(std::get<OrLine2>(line)), line_through({0, 0}, {5, 0}));

  const auto unit = collinear_or_circle({1, 0}, {0, 1}, {-1, 0});
  ASSERT_TRUE(std::holds_alternative<CircleThrough>(unit));
  EXPECT_EQ(std::get<CircleThrough>(unit).center, (Pt2{0, 0}));
  EXPECT_EQ(std::get<CircleThrough>(unit).r2, Rat(1));

  const auto c = collinear_or_circle({0, 0}, {4, 0}, {0, 4});
  ASSERT_TRUE(std::holds_alternative<CircleThrough>(c));
  EXPECT_EQ(std::get<CircleThrough>(c).center, (Pt2{2, 2}));
  EXPECT_EQ(std::get<CircleThrough>(c).r2, Rat(8));

  EXPECT_THROW(collinear_or_circle({0, 0}, {0, 0}, {1, 1}), Error);
}

TEST(CollinearOrCircle, RandomTriplesPassThroughAll) {
  Gen g(14);
  for (int i = 0; i < 1000; ++i) {
    const Pt2 a = g.pt(4, 2);
    const Pt2 b = g.pt(4, 2);
    const Pt2 c = g.coin() ? a + g.rat(2, 2) * (b - a) : g.pt(4, 2);
    if (a == b || b == c || a == c) continue;
    const auto res = collinear_or_circle(a, b, c);
    if (const auto* l = std::get_if<OrLine2>(&res)) {
      EXPECT_TRUE(l->contains(a) && l->contains(b) && l->contains(c));
    } else {
      const auto& circ = std::get<CircleThrough>(res);
      EXPECT_EQ(sqdist2(circ.center, a), circ.r2);
      EXPECT_EQ(sqdist2(circ.center, b), circ.r2);
      EXPECT_EQ(sqdist2(circ.center, c), circ.r2);
    }
  }
}

TEST(PlaneThrough, Examples) {
  const Plane3 z0 = plane_through(Line3::horizontal(0, {0, 0}, {1, 0}), Line3::horizontal(0, {0, 0}, {0, 1}));
  EXPECT_EQ(z0, (Plane3{0, 0, 1, 0}));

  // Directions (1/2, -1/2, 1) and (1/2, 1/2, 1) through (1/2, 1/2, 0): 2x - z - 1 = 0.
  const Plane3 p = plane_through(rho_line({0, 0}, {1, 1}), rho_line({1, 0}, {0, 1}));
  EXPECT_EQ(p, (Plane3{1, 0, Rat(-1, 2), Rat(-1, 2)}));

  const Plane3 y0 = plane_through(Line3::non_horizontal(0, 0, 0, 0), Line3::non_horizontal(0, 1, 0, 0));
  EXPECT_EQ(y0, (Plane3{0, 1, 0, 0}));

  EXPECT_THROW(plane_through(Line3::horizontal(0, {0, 0}, {1, 0}), Line3::horizontal(1, {0, 0}, {0, 1})), Error);
  EXPECT_THROW(plane_through(rho_line({0, 0}, {1, 1}), rho_line({0, 0}, {1, 1})), Error);
}

TEST(Linalg, RankAndNullspace) {
  RatMatrix m(2, 3);
  m(0, 0) = 1; m(0, 1) = 2; m(0, 2) = 3;
  m(1, 0) = 2; m(1, 1) = 4; m(1, 2) = 6;
  EXPECT_EQ(rank(m), 1U);
  const auto ns = nullspace(m);
  ASSERT_EQ(ns.size(), 2U);
  for (const auto& v : ns) EXPECT_EQ(v[0] + Rat(2) * v[1] + Rat(3) * v[2], Rat(0));
}

TEST(Linalg, InertiaWithZeroDiagonal) {
  RatMatrix m(3, 3);
  m(0, 1) = m(1, 0) = Rat(1, 2);  // xy
  const Inertia in = inertia(m);
  EXPECT_EQ(in.positive, 1);
  EXPECT_EQ(in.negative, 1);
  EXPECT_EQ(in.zero, 1);

  RatMatrix d(3, 3);
  d(0, 0) = 2; d(1, 1) = -3; d(2, 2) = 5;
  const Inertia id = inertia(d);
  EXPECT_EQ(id.positive, 2);
  EXPECT_EQ(id.negative, 1);
}

}  // namespace
}  // namespace ddist
