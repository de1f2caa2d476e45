#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <utility>
#include <vector>

#include "ddist/constructions.hpp"
#include "ddist/distance_stats.hpp"
#include "ddist/geometry.hpp"

namespace ddist {

// Read-only view of a bipartite configuration for the circle-arc machinery.
// Centers are always rational; the points of Q are only reached through
// exact squared distances and an exact angular comparator.
class CircleSource {
 public:
  virtual ~CircleSource() = default;

  virtual std::size_t m() const = 0;
  virtual std::size_t n() const = 0;
  virtual Pt2 center(std::size_t p) const = 0;
  virtual Rat sqdist(std::size_t p, std::size_t q) const = 0;
  // Counterclockwise order about center(p), starting at angle 0.
  virtual bool angle_less(std::size_t p, std::size_t qa, std::size_t qb) const = 0;
  // Floating-point position of q, for drawing only.
  virtual std::pair<double, double> approx_q(std::size_t q) const = 0;
  // Exact coordinates of q when they are rational.
  virtual std::optional<Pt2> exact_q(std::size_t q) const = 0;
};

class RationalSource final : public CircleSource {
 public:
  explicit RationalSource(PointSetPair pp);

  std::size_t m() const override { return pp_.P.size(); }
  std::size_t n() const override { return pp_.Q.size(); }
  Pt2 center(std::size_t p) const override { return pp_.P[p]; }
  Rat sqdist(std::size_t p, std::size_t q) const override;
  bool angle_less(std::size_t p, std::size_t qa, std::size_t qb) const override;
  std::pair<double, double> approx_q(std::size_t q) const override;
  std::optional<Pt2> exact_q(std::size_t q) const override { return pp_.Q[q]; }

  const PointSetPair& points() const { return pp_; }

 private:
  PointSetPair pp_;
};

// The circle grid with Q = {(i, sqrt(j))}, handled through integers only.
class GridSource final : public CircleSource {
 public:
  explicit GridSource(CircleGrid g);

  std::size_t m() const override { return g_.P.size(); }
  std::size_t n() const override { return g_.Q.size(); }
  Pt2 center(std::size_t p) const override { return {Rat(g_.P[p]), Rat(0)}; }
  Rat sqdist(std::size_t p, std::size_t q) const override;
  bool angle_less(std::size_t p, std::size_t qa, std::size_t qb) const override;
  std::pair<double, double> approx_q(std::size_t q) const override;
  std::optional<Pt2> exact_q(std::size_t) const override { return std::nullopt; }

  const CircleGrid& grid() const { return g_; }

 private:
  CircleGrid g_;
};

// Exact angular comparator for vectors: half-plane first, then orientation.
bool angle_less(const Vec2& a, const Vec2& b);

struct CircleRecord {
  std::size_t center_index = 0;
  Pt2 center;
  Rat r2;
  std::vector<std::size_t> members;  // Q indices, counterclockwise from angle 0
};

// All concentric circles about each p, ordered by p then by radius.
std::vector<CircleRecord> build_circles(const CircleSource& src);

using VertexPair = std::pair<std::size_t, std::size_t>;  // first < second

struct ArcEdge {
  std::size_t u = 0;
  std::size_t v = 0;
  std::size_t circle = 0;  // index into the circle list
};

struct ArcMultigraph {
  std::size_t vertices = 0;
  std::vector<CircleRecord> circles;
  std::vector<ArcEdge> edges;  // circles with k >= 3 members give k edges each
  std::int64_t pre_deletion_edges = 0;
  std::int64_t post_deletion_edges = 0;
  std::int64_t deleted_edges = 0;
  std::map<VertexPair, std::int64_t> multiplicity;
};

ArcMultigraph build_multigraph(const CircleSource& src);

struct EdgeLink {
  std::int64_t multiplicity = 0;
  // Points of P on the perpendicular bisector of the pair.
  std::vector<std::size_t> bisector_points;
  // Every circle carrying the pair is centered on the bisector.
  bool centers_on_bisector = false;
  // multiplicity <= number of distinct circle centers on the bisector.
  bool within_richness = false;
};

std::map<VertexPair, EdgeLink> edge_multiplicity_bisector_link(const ArcMultigraph& g,
                                                               const CircleSource& src);

// A bisector, identified by the (at least two) points of P it contains.
using BisectorKey = std::vector<std::size_t>;

struct BisectorLine {
  BisectorKey points;
  std::optional<Line2Key> line;  // available when Q is rational
  std::int64_t pairs = 0;        // |T_l|
  std::int64_t limit = 0;        // 2 k_l t
};

struct BisectorPairSet {
  std::int64_t r = 0;
  std::int64_t t = 0;
  // (line index, edge index) for each edge whose bisector is r-rich.
  std::vector<std::pair<std::size_t, std::size_t>> pairs;
  std::vector<BisectorLine> per_line;
  bool per_line_bound_holds = true;
};

BisectorPairSet bisector_pair_census(const ArcMultigraph& g, const CircleSource& src, std::int64_t r);

struct RichLine {
  Line2Key line;
  std::vector<std::size_t> members;
};

struct RichLines {
  std::int64_t count = 0;
  std::vector<RichLine> lines;
  Rat reference_bound;  // m^2 / r^3 + m / r, for comparison only
};

RichLines rich_lines(const std::vector<Pt2>& points, std::int64_t r);

struct CrossingBounds {
  Rat simple_bound;      // c e^3 / n^2
  Rat multigraph_bound;  // c e^3 / (mult n^2)
  bool simple_applicable = false;      // e >= 4n
  bool multigraph_applicable = false;  // e > 5 mult n
};

CrossingBounds crossing_bounds(std::int64_t nV, std::int64_t nE, std::int64_t max_mult, const Rat& c);

struct CirclePairCrossings {
  std::int64_t intersecting_pairs = 0;
  std::int64_t upper = 0;
};

// Pairs of circles meeting in exactly two points.
CirclePairCrossings circle_pair_crossings(const std::vector<CircleRecord>& circles);

struct SzekelyReport {
  std::int64_t m = 0;
  std::int64_t n = 0;
  std::int64_t t = 0;  // most circles about a single p
  std::int64_t circles = 0;
  std::int64_t edges_pre = 0;
  std::int64_t edges_post = 0;
  std::int64_t edges_deleted = 0;
  std::int64_t deletion_limit = 0;  // 2 m t
  std::map<std::int64_t, std::int64_t> mult_histogram;  // multiplicity -> vertex pairs
  std::int64_t K = 1;
  std::int64_t edges_heavy = 0;   // edges on pairs of multiplicity > K
  std::int64_t edges_gprime = 0;  // edges kept in G'
  Rat c;
  Rat lhs;  // m^2 t^2
  Rat rhs;  // c e'^3 / (K n^2)
  bool chain_consistent = false;
  bool vacuous = false;  // G' has no edges
  CirclePairCrossings crossings;
  CrossingBounds bounds;
  std::vector<std::pair<std::int64_t, std::int64_t>> T_counts;    // (r, |T|)
  std::vector<std::pair<std::int64_t, std::int64_t>> rich_lines;  // (r, count), rational P
  bool per_line_bound_holds = true;
};

SzekelyReport szekely_report(const CircleSource& src, std::int64_t K, const Rat& c);

}  // namespace ddist
