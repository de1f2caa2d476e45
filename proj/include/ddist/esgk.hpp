#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "ddist/distance_stats.hpp"
#include "ddist/geometry.hpp"

namespace ddist {

// A point (o_x, o_y, z) of 3-space read as the rotation about (o_x, o_y) by
// the clockwise angle alpha with cot(alpha / 2) = z. z = 0 is the half turn.
struct RotationPt {
  Pt3 pt;

  Pt2 center() const { return {pt.x, pt.y}; }
  Rat cos_alpha() const;
  Rat sin_alpha() const;
};

// The line of all rotations taking p to q:
// ((p + q) / 2, 0) + t ((q_y - p_y) / 2, (p_x - q_x) / 2, 1). Carries (p, q).
Line3 rho_line(const Pt2& p, const Pt2& q);

// Inverse of rho_line. Throws HorizontalLine for horizontal input.
std::pair<Pt2, Pt2> line_to_pq(const Line3& l);

Pt2 apply_rotation(const RotationPt& g, const Pt2& x);

struct LineFamilies {
  std::vector<Line3> L1;  // rho_line(p, q), P-major order
  std::vector<Line3> L2;  // rho_line(q, p), same order
  std::size_t m = 0;
  std::size_t n = 0;
};

LineFamilies build_families(const PointSetPair& pp);

struct RichCounts {
  std::int64_t count1 = 0;  // lines of L1 through the point
  std::int64_t count2 = 0;  // lines of L2 through the point
  std::int64_t total() const { return count1 + count2; }
};

struct RichPointHistogram {
  // Every point of 3-space met by at least two lines of L1 u L2.
  std::unordered_map<Pt3, RichCounts, Pt3Hash> points;
  // r -> number of points incident to at least r lines, r = 2 .. max richness.
  std::map<std::int64_t, std::int64_t> m_r;

  std::int64_t max_richness() const;
};

struct IntersectingPairs {
  std::int64_t I = 0;  // ordered pairs of L1 x L2 that meet in a point
  RichPointHistogram per_point;
};

IntersectingPairs count_intersecting_pairs(const LineFamilies& fams);

// Sum over rich points of (count1 + count2)^2.
std::int64_t weighted_richpoint_sum(const RichPointHistogram& h);

struct PlaneCensus {
  std::int64_t max_on_plane = 0;
  std::optional<Plane3> witness;
};

// Largest number of lines of L1 u L2 lying in a common plane.
PlaneCensus plane_census(const LineFamilies& fams);

// The horizontal line of rotations mapping l1 onto l2 with orientation.
// Needs non-parallel lines whose directions have rational length.
Line3 s_line(const OrLine2& l1, const OrLine2& l2);

}  // namespace ddist
