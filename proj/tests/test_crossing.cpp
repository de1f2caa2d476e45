#include <gtest/gtest.h>

#include <cmath>

#include "ddist/crossing.hpp"
#include "ddist/error.hpp"
#include "support.hpp"

namespace ddist {
namespace {

using testing::Gen;

PointSetPair two_centers() {
  return make_point_set_pair({{0, 0}, {4, 0}}, {{1, 0}, {-1, 0}, {0, 1}, {0, -1}});
}

TEST(AngleLess, HalfPlanesThenOrientation) {
  const std::vector<Vec2> ccw{{1, 0}, {3, 1}, {1, 1}, {0, 2}, {-1, 1}, {-1, 0}, {-2, -1}, {0, -1}, {1, -3}};
  for (std::size_t i = 0; i < ccw.size(); ++i) {
    EXPECT_FALSE(angle_less(ccw[i], ccw[i]));
    for (std::size_t j = i + 1; j < ccw.size(); ++j) {
      EXPECT_TRUE(angle_less(ccw[i], ccw[j])) << i << " " << j;
      EXPECT_FALSE(angle_less(ccw[j], ccw[i])) << i << " " << j;
    }
  }
  EXPECT_FALSE(angle_less({2, 2}, {1, 1}));
}

TEST(BuildCircles, ConcentricRings) {
  const RationalSource src(two_centers());
  const auto circles = build_circles(src);
  ASSERT_EQ(circles.size(), 4U);
  EXPECT_EQ(circles[0].center_index, 0U);
  EXPECT_EQ(circles[0].r2, Rat(1));
  // (1,0), (0,1), (-1,0), (0,-1) counterclockwise from angle 0.
  EXPECT_EQ(circles[0].members, (std::vector<std::size_t>{0, 2, 1, 3}));
  EXPECT_EQ(circles[1].r2, Rat(9));
  EXPECT_EQ(circles[1].members, (std::vector<std::size_t>{0}));
  EXPECT_EQ(circles[2].r2, Rat(17));
  EXPECT_EQ(circles[2].members, (std::vector<std::size_t>{2, 3}));
  EXPECT_EQ(circles[3].r2, Rat(25));
  EXPECT_EQ(circles[3].members, (std::vector<std::size_t>{1}));
}

TEST(Multigraph, DeletesSmallCircles) {
  const RationalSource src(two_centers());
  const auto g = build_multigraph(src);
  EXPECT_EQ(g.pre_deletion_edges, 8);
  EXPECT_EQ(g.post_deletion_edges, 4);
  EXPECT_EQ(g.deleted_edges, 4);
  EXPECT_EQ(g.multiplicity.size(), 4U);
  for (const auto& [pair, mult] : g.multiplicity) EXPECT_EQ(mult, 1);

  const RationalSource pentagon(make_point_set_pair({{0, 0}}, {{5, 0}, {3, 4}, {-3, 4}, {-4, -3}, {0, -5}}));
  EXPECT_EQ(build_multigraph(pentagon).post_deletion_edges, 5);
  const RationalSource triangle(make_point_set_pair({{0, 0}}, {{5, 0}, {-3, 4}, {0, -5}}));
  EXPECT_EQ(build_multigraph(triangle).multiplicity.size(), 3U);
  const RationalSource pair(make_point_set_pair({{0, 0}, {9, 9}}, {{1, 0}, {0, 1}}));
  EXPECT_EQ(build_multigraph(pair).post_deletion_edges, 0);
}

TEST(Multigraph, SharedArcsAccumulateMultiplicity) {
  // (0,1) and (0,-1) are neighbours on circles about (1,0) and (-1,0).
  const RationalSource src(make_point_set_pair({{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}, {2, 1}, {-2, 1}}));
  const auto g = build_multigraph(src);
  EXPECT_EQ(g.post_deletion_edges, 6);
  EXPECT_EQ(g.multiplicity.at({0, 1}), 2);
  const auto links = edge_multiplicity_bisector_link(g, src);
  EXPECT_EQ(links.at({0, 1}).bisector_points, (std::vector<std::size_t>{0, 1}));
  EXPECT_TRUE(links.at({0, 1}).centers_on_bisector);
  EXPECT_TRUE(links.at({0, 1}).within_richness);
  const auto census = bisector_pair_census(g, src, 2);
  ASSERT_EQ(census.per_line.size(), 1U);
  EXPECT_EQ(census.per_line[0].pairs, 2);
  ASSERT_TRUE(census.per_line[0].line.has_value());
  EXPECT_EQ(*census.per_line[0].line, line_through({0, 0}, {1, 0}));
  EXPECT_EQ(census.per_line[0].limit, 2 * 2 * census.t);
  EXPECT_TRUE(bisector_pair_census(g, src, 3).pairs.empty());
  EXPECT_THROW(bisector_pair_census(g, src, 1), Error);
}

TEST(Multigraph, MatchesFloatingPointRecount) {
  Gen g(51);
  for (int it = 0; it < 200; ++it) {
    const auto pp = g.point_set(static_cast<std::size_t>(g.range(1, 5)), static_cast<std::size_t>(g.range(3, 9)));
    const RationalSource src(pp);
    const auto graph = build_multigraph(src);
    EXPECT_EQ(graph.multiplicity, testing::consecutive_recount(pp));
    EXPECT_EQ(graph.pre_deletion_edges, pp.m() * pp.n());
    EXPECT_EQ(graph.pre_deletion_edges, graph.post_deletion_edges + graph.deleted_edges);

    const auto links = edge_multiplicity_bisector_link(graph, src);
    for (const auto& [pair, link] : links) {
      EXPECT_TRUE(link.centers_on_bisector);
      EXPECT_TRUE(link.within_richness);
    }
    for (std::int64_t r = 2; r <= pp.m() + 1; ++r) {
      const auto census = bisector_pair_census(graph, src, r);
      EXPECT_TRUE(census.per_line_bound_holds);
      std::size_t expected = 0;
      for (const auto& e : graph.edges) {
        expected += static_cast<std::int64_t>(links.at(e.u < e.v ? VertexPair{e.u, e.v} : VertexPair{e.v, e.u})
                                                  .bisector_points.size()) >= r;
      }
      EXPECT_EQ(census.pairs.size(), expected);
      if (r > pp.m()) { EXPECT_TRUE(census.pairs.empty()); }
    }
  }
}

TEST(GridSource, AgreesWithRationalCoordinatesOnSquares) {
  // With j a perfect square the grid points are rational, so both sources apply.
  Gen g(52);
  for (int it = 0; it < 40; ++it) {
    CircleGrid grid;
    grid.m = g.range(1, 3);
    grid.s = 1;
    std::vector<Pt2> P;
    for (std::int64_t a = 1; a <= grid.m; ++a) {
      grid.P.push_back(a);
      P.push_back({a, 0});
    }
    std::vector<Pt2> Q;
    for (std::int64_t i = -2; i <= 3; ++i) {
      for (std::int64_t r = 1; r <= 4; ++r) {
        if (!g.coin()) continue;
        grid.Q.push_back({i, r * r});
        Q.push_back({i, r});
      }
    }
    if (Q.empty()) continue;
    const GridSource gs(grid);
    const RationalSource rs(make_point_set_pair(P, Q));
    const auto a = build_multigraph(gs);
    const auto b = build_multigraph(rs);
    EXPECT_EQ(a.multiplicity, b.multiplicity);
    ASSERT_EQ(a.circles.size(), b.circles.size());
    for (std::size_t c = 0; c < a.circles.size(); ++c) EXPECT_EQ(a.circles[c].members, b.circles[c].members);
  }
}

TEST(GridSource, ElekesGridPipeline) {
  const GridSource src(elekes_grid(2, 2));
  const auto rep = szekely_report(src, 1, Rat(1, 64));
  EXPECT_EQ(rep.edges_pre, 16);
  EXPECT_EQ(rep.edges_pre, rep.edges_post + rep.edges_deleted);
  EXPECT_LE(rep.edges_deleted, rep.deletion_limit);
  EXPECT_EQ(rep.T_counts.size(), 1U);
  EXPECT_TRUE(rep.per_line_bound_holds);
  const auto approx = src.approx_q(0);
  EXPECT_DOUBLE_EQ(approx.second, std::sqrt(4.0));
  EXPECT_FALSE(src.exact_q(0).has_value());
}

TEST(RichLines, Examples) {
  EXPECT_EQ(rich_lines({{0, 0}, {1, 0}, {0, 1}, {2, 3}}, 2).count, 6);
  std::vector<Pt2> grid;
  for (int x = 0; x < 3; ++x) {
    for (int y = 0; y < 3; ++y) grid.push_back({x, y});
  }
  const auto r3 = rich_lines(grid, 3);
  EXPECT_EQ(r3.count, 8);
  for (const auto& l : r3.lines) EXPECT_EQ(l.members.size(), 3U);
  EXPECT_EQ(rich_lines(grid, 10).count, 0);
  EXPECT_EQ(rich_lines(grid, 3).reference_bound, Rat(81, 27) + Rat(9, 3));
  EXPECT_THROW(rich_lines(grid, 1), Error);
}

TEST(RichLines, MatchesOracle) {
  Gen g(53);
  for (int it = 0; it < 50; ++it) {
    const auto count = static_cast<std::size_t>(g.range(2, 60));
    std::unordered_set<Pt2, Pt2Hash> used;
    const std::int64_t span = g.coin() ? 3 : 6;
    std::vector<Pt2> pts;
    while (pts.size() < count && used.size() < static_cast<std::size_t>((2 * span + 1) * (2 * span + 1))) {
      const Pt2 p = g.int_pt(span);
      if (used.insert(p).second) pts.push_back(p);
    }
    for (std::int64_t r = 2; r <= 6; ++r) {
      EXPECT_EQ(rich_lines(pts, r).count, testing::rich_lines_oracle(pts, r)) << it << " r=" << r;
    }
  }
}

TEST(CrossingBounds, Examples) {
  const auto b = crossing_bounds(10, 40, 1, Rat(1, 64));
  EXPECT_EQ(b.simple_bound, Rat(10));
  EXPECT_TRUE(b.simple_applicable);
  EXPECT_FALSE(b.multigraph_applicable);
  EXPECT_FALSE(crossing_bounds(10, 39, 1, Rat(1, 64)).simple_applicable);
  const auto heavy = crossing_bounds(10, 600, 10, Rat(1, 64));
  EXPECT_TRUE(heavy.multigraph_applicable);
  EXPECT_EQ(heavy.simple_bound, Rat(33750));
  EXPECT_EQ(heavy.multigraph_bound, Rat(3375));
  EXPECT_EQ(crossing_bounds(0, 0, 1, 1).simple_bound, Rat(0));
  EXPECT_THROW(crossing_bounds(10, 40, 0, 1), Error);
  EXPECT_THROW(crossing_bounds(10, 40, 1, 0), Error);
  EXPECT_THROW(crossing_bounds(-1, 40, 1, 1), Error);
}

CircleRecord circle(const Pt2& c, const Rat& r2) { return {0, c, r2, {}}; }

TEST(CirclePairCrossings, Examples) {
  EXPECT_EQ(circle_pair_crossings({circle({0, 0}, 1), circle({1, 0}, 1)}).intersecting_pairs, 1);
  // Tangent, concentric and disjoint pairs do not cross.
  EXPECT_EQ(circle_pair_crossings({circle({0, 0}, 1), circle({2, 0}, 1)}).intersecting_pairs, 0);
  EXPECT_EQ(circle_pair_crossings({circle({0, 0}, 1), circle({0, 0}, 4)}).intersecting_pairs, 0);
  EXPECT_EQ(circle_pair_crossings({circle({0, 0}, 1), circle({5, 0}, 1)}).intersecting_pairs, 0);
  EXPECT_EQ(circle_pair_crossings({circle({0, 0}, 1), circle({1, 0}, Rat(1, 4))}).intersecting_pairs, 1);
  const auto three = circle_pair_crossings({circle({0, 0}, 4), circle({1, 0}, 4), circle({0, 1}, 4)});
  EXPECT_EQ(three.intersecting_pairs, 3);
  EXPECT_EQ(three.upper, 6);
}

TEST(CirclePairCrossings, MatchesDistanceTest) {
  Gen g(54);
  for (int it = 0; it < 500; ++it) {
    // Integer radii keep the reference comparison exact.
    const Pt2 c1 = g.int_pt(5);
    const Pt2 c2 = g.int_pt(5);
    const std::int64_t r1 = g.range(1, 5);
    const std::int64_t r2 = g.range(1, 5);
    const Rat d2 = sqdist2(c1, c2);
    const bool expected = Rat((r1 - r2) * (r1 - r2)) < d2 && d2 < Rat((r1 + r2) * (r1 + r2));
    EXPECT_EQ(circle_pair_crossings({circle(c1, r1 * r1), circle(c2, r2 * r2)}).intersecting_pairs, expected ? 1 : 0);
  }
}

TEST(Szekely, TwoCenterExample) {
  const RationalSource src(two_centers());
  const auto rep = szekely_report(src, 1, Rat(1, 64));
  EXPECT_EQ(rep.edges_pre, 8);
  EXPECT_EQ(rep.edges_post, 4);
  EXPECT_EQ(rep.t, 3);
  EXPECT_EQ(rep.deletion_limit, 12);
  EXPECT_EQ(rep.edges_gprime, 4);
  EXPECT_EQ(rep.lhs, Rat(36));
  EXPECT_EQ(rep.rhs, Rat(1, 16));
  EXPECT_TRUE(rep.chain_consistent);
  EXPECT_FALSE(rep.vacuous);
  EXPECT_EQ(rep.mult_histogram, (std::map<std::int64_t, std::int64_t>{{1, 4}}));
  EXPECT_EQ(rep.T_counts, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 0}}));
  EXPECT_EQ(rep.rich_lines, (std::vector<std::pair<std::int64_t, std::int64_t>>{{2, 1}}));
}

TEST(Szekely, UnitCircleAndVacuousCases) {
  const RationalSource unit(make_point_set_pair({{0, 0}}, {{1, 0}, {0, 1}, {-1, 0}, {0, -1}}));
  const auto rep = szekely_report(unit, 1, Rat(1, 64));
  EXPECT_EQ(rep.t, 1);
  EXPECT_EQ(rep.edges_post, 4);
  EXPECT_EQ(rep.lhs, Rat(1));

  const RationalSource line(make_point_set_pair({{0, 0}}, {{1, 0}, {2, 0}}));
  const auto empty = szekely_report(line, 1, Rat(1, 64));
  EXPECT_TRUE(empty.vacuous);
  EXPECT_EQ(empty.rhs, Rat(0));
  EXPECT_THROW(szekely_report(line, 0, Rat(1, 64)), Error);
}

TEST(Szekely, HeavyPairsLeaveGPrime) {
  const RationalSource src(make_point_set_pair({{1, 0}, {-1, 0}}, {{0, 1}, {0, -1}, {2, 1}, {-2, 1}}));
  const auto k1 = szekely_report(src, 1, Rat(1, 64));
  EXPECT_EQ(k1.edges_heavy, 2);
  EXPECT_EQ(k1.edges_gprime, 4);
  const auto k2 = szekely_report(src, 2, Rat(1, 64));
  EXPECT_EQ(k2.edges_heavy, 0);
  EXPECT_EQ(k2.edges_gprime, 6);
}

TEST(Szekely, RandomInvariants) {
  Gen g(55);
  for (int it = 0; it < 100; ++it) {
    const auto pp = g.point_set(static_cast<std::size_t>(g.range(2, 5)), static_cast<std::size_t>(g.range(2, 8)));
    const RationalSource src(pp);
    const auto rep = szekely_report(src, g.range(1, 3), Rat(1, 64));
    EXPECT_EQ(rep.edges_pre, pp.m() * pp.n());
    EXPECT_LE(rep.edges_deleted, rep.deletion_limit);
    EXPECT_TRUE(rep.per_line_bound_holds);
    EXPECT_EQ(rep.edges_gprime + rep.edges_heavy, rep.edges_post);
    EXPECT_EQ(rep.T_counts.size(), static_cast<std::size_t>(pp.m() - 1));
    for (const auto& [r, count] : rep.rich_lines) EXPECT_EQ(count, testing::rich_lines_oracle(pp.P, r));
  }
}

}  // namespace
}  // namespace ddist
