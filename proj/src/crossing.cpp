#include "ddist/crossing.hpp"

#include <algorithm>
#include <cmath>
#include <set>

#include "ddist/error.hpp"

namespace ddist {

namespace {

// 0 for angles in [0, pi), 1 for [pi, 2 pi).
int half_plane(const Vec2& v) {
  return (v.y.sign() > 0 || (v.y.is_zero() && v.x.sign() > 0)) ? 0 : 1;
}

int sign_of(std::int64_t v) { return (v > 0) - (v < 0); }

VertexPair ordered(std::size_t u, std::size_t v) { return u < v ? VertexPair{u, v} : VertexPair{v, u}; }

std::int64_t max_circles_per_center(const std::vector<CircleRecord>& circles, std::size_t m) {
  std::vector<std::int64_t> per(m, 0);
  for (const auto& c : circles) ++per[c.center_index];
  return per.empty() ? 0 : *std::max_element(per.begin(), per.end());
}

std::vector<std::size_t> bisector_points(const CircleSource& src, std::size_t u, std::size_t v) {
  std::vector<std::size_t> pts;
  for (std::size_t p = 0; p < src.m(); ++p) {
    if (src.sqdist(p, u) == src.sqdist(p, v)) pts.push_back(p);
  }
  return pts;
}

}  // namespace

bool angle_less(const Vec2& a, const Vec2& b) {
  const int ha = half_plane(a);
  const int hb = half_plane(b);
  if (ha != hb) return ha < hb;
  return cross(a, b).sign() > 0;
}

RationalSource::RationalSource(PointSetPair pp) : pp_(std::move(pp)) { validate(pp_); }

Rat RationalSource::sqdist(std::size_t p, std::size_t q) const { return sqdist2(pp_.P[p], pp_.Q[q]); }

bool RationalSource::angle_less(std::size_t p, std::size_t qa, std::size_t qb) const {
  return ddist::angle_less(pp_.Q[qa] - pp_.P[p], pp_.Q[qb] - pp_.P[p]);
}

std::pair<double, double> RationalSource::approx_q(std::size_t q) const {
  return {pp_.Q[q].x.to_double(), pp_.Q[q].y.to_double()};
}

GridSource::GridSource(CircleGrid g) : g_(std::move(g)) {}

Rat GridSource::sqdist(std::size_t p, std::size_t q) const { return Rat(grid_sqdist(g_.P[p], g_.Q[q])); }

bool GridSource::angle_less(std::size_t p, std::size_t qa, std::size_t qb) const {
  // Both points lie strictly above the x-axis, so the order is the sign of
  // cross((xa, sqrt(ja)), (xb, sqrt(jb))) = xa sqrt(jb) - xb sqrt(ja).
  const std::int64_t xa = g_.Q[qa].i - g_.P[p];
  const std::int64_t xb = g_.Q[qb].i - g_.P[p];
  const int sa = sign_of(xa);
  const int sb = sign_of(xb);
  if (sa != sb) return sa > sb;
  if (sa == 0) return false;
  const std::int64_t lhs = xa * xa * g_.Q[qb].j;
  const std::int64_t rhs = xb * xb * g_.Q[qa].j;
  return sa * sign_of(lhs - rhs) > 0;
}

std::pair<double, double> GridSource::approx_q(std::size_t q) const {
  return {static_cast<double>(g_.Q[q].i), std::sqrt(static_cast<double>(g_.Q[q].j))};
}

std::vector<CircleRecord> build_circles(const CircleSource& src) {
  std::vector<CircleRecord> out;
  for (std::size_t p = 0; p < src.m(); ++p) {
    std::map<Rat, std::vector<std::size_t>> by_radius;
    for (std::size_t q = 0; q < src.n(); ++q) by_radius[src.sqdist(p, q)].push_back(q);
    for (auto& [r2, members] : by_radius) {
      std::sort(members.begin(), members.end(),
                [&](std::size_t a, std::size_t b) { return src.angle_less(p, a, b); });
      out.push_back({p, src.center(p), r2, std::move(members)});
    }
  }
  return out;
}

ArcMultigraph build_multigraph(const CircleSource& src) {
  ArcMultigraph g;
  g.vertices = src.n();
  g.circles = build_circles(src);
  g.pre_deletion_edges = static_cast<std::int64_t>(src.m() * src.n());
  for (std::size_t ci = 0; ci < g.circles.size(); ++ci) {
    const auto& mem = g.circles[ci].members;
    const std::size_t k = mem.size();
    if (k <= 2) {
      g.deleted_edges += static_cast<std::int64_t>(k);
      continue;
    }
    for (std::size_t i = 0; i < k; ++i) {
      const std::size_t u = mem[i];
      const std::size_t v = mem[(i + 1) % k];
      g.edges.push_back({u, v, ci});
      ++g.multiplicity[ordered(u, v)];
    }
  }
  g.post_deletion_edges = static_cast<std::int64_t>(g.edges.size());
  return g;
}

std::map<VertexPair, EdgeLink> edge_multiplicity_bisector_link(const ArcMultigraph& g,
                                                               const CircleSource& src) {
  std::map<VertexPair, std::set<std::size_t>> centers;
  for (const auto& e : g.edges) centers[ordered(e.u, e.v)].insert(g.circles[e.circle].center_index);
  std::map<VertexPair, EdgeLink> out;
  for (const auto& [pair, mult] : g.multiplicity) {
    EdgeLink link;
    link.multiplicity = mult;
    link.bisector_points = bisector_points(src, pair.first, pair.second);
    const auto& cs = centers[pair];
    link.centers_on_bisector = std::all_of(cs.begin(), cs.end(), [&](std::size_t c) {
      return std::binary_search(link.bisector_points.begin(), link.bisector_points.end(), c);
    });
    link.within_richness = mult <= static_cast<std::int64_t>(cs.size()) &&
                           cs.size() <= link.bisector_points.size();
    out.emplace(pair, std::move(link));
  }
  return out;
}

BisectorPairSet bisector_pair_census(const ArcMultigraph& g, const CircleSource& src, std::int64_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidParams, "bisector_pair_census: r must be at least 2");
  BisectorPairSet out;
  out.r = r;
  out.t = max_circles_per_center(g.circles, src.m());
  std::map<BisectorKey, std::size_t> slot;
  std::map<VertexPair, BisectorKey> cache;
  for (std::size_t ei = 0; ei < g.edges.size(); ++ei) {
    const auto& e = g.edges[ei];
    const VertexPair pair = ordered(e.u, e.v);
    auto it = cache.find(pair);
    if (it == cache.end()) it = cache.emplace(pair, bisector_points(src, e.u, e.v)).first;
    const BisectorKey& key = it->second;
    if (static_cast<std::int64_t>(key.size()) < r) continue;
    auto [s, fresh] = slot.emplace(key, out.per_line.size());
    if (fresh) {
      BisectorLine line;
      line.points = key;
      const auto qu = src.exact_q(e.u);
      const auto qv = src.exact_q(e.v);
      if (qu && qv) line.line = line_key(bisector(*qu, *qv));
      line.limit = 2 * static_cast<std::int64_t>(key.size()) * out.t;
      out.per_line.push_back(std::move(line));
    }
    ++out.per_line[s->second].pairs;
    out.pairs.emplace_back(s->second, ei);
  }
  for (const auto& l : out.per_line) out.per_line_bound_holds = out.per_line_bound_holds && l.pairs <= l.limit;
  return out;
}

RichLines rich_lines(const std::vector<Pt2>& points, std::int64_t r) {
  if (r < 2) throw Error(ErrorKind::InvalidParams, "rich_lines: r must be at least 2");
  std::map<Line2Key, std::set<std::size_t>> lines;
  for (std::size_t i = 0; i < points.size(); ++i) {
    for (std::size_t j = i + 1; j < points.size(); ++j) {
      auto& s = lines[line_through(points[i], points[j])];
      s.insert(i);
      s.insert(j);
    }
  }
  RichLines out;
  for (auto& [key, members] : lines) {
    if (static_cast<std::int64_t>(members.size()) < r) continue;
    out.lines.push_back({key, {members.begin(), members.end()}});
  }
  out.count = static_cast<std::int64_t>(out.lines.size());
  const Rat m(static_cast<std::int64_t>(points.size()));
  const Rat rr(r);
  out.reference_bound = m * m / (rr * rr * rr) + m / rr;
  return out;
}

CrossingBounds crossing_bounds(std::int64_t nV, std::int64_t nE, std::int64_t max_mult, const Rat& c) {
  if (nV < 0 || nE < 0 || max_mult < 1 || c.sign() <= 0) {
    throw Error(ErrorKind::InvalidParams, "crossing_bounds: need nV, nE >= 0, max_mult >= 1, c > 0");
  }
  CrossingBounds out;
  if (nV > 0) {
    const Rat e(nE);
    const Rat n2 = Rat(nV) * Rat(nV);
    out.simple_bound = c * e * e * e / n2;
    out.multigraph_bound = out.simple_bound / Rat(max_mult);
  }
  out.simple_applicable = nE >= 4 * nV;
  out.multigraph_applicable = nE > 5 * max_mult * nV;
  return out;
}

CirclePairCrossings circle_pair_crossings(const std::vector<CircleRecord>& circles) {
  CirclePairCrossings out;
  for (std::size_t i = 0; i < circles.size(); ++i) {
    for (std::size_t j = i + 1; j < circles.size(); ++j) {
      const Rat d2 = sqdist2(circles[i].center, circles[j].center);
      const Rat s = d2 - circles[i].r2 - circles[j].r2;
      // |r1 - r2| < d < r1 + r2  <=>  s^2 < 4 r1^2 r2^2
      if (square(s) < Rat(4) * circles[i].r2 * circles[j].r2) ++out.intersecting_pairs;
    }
  }
  out.upper = 2 * out.intersecting_pairs;
  return out;
}

SzekelyReport szekely_report(const CircleSource& src, std::int64_t K, const Rat& c) {
  if (K < 1) throw Error(ErrorKind::InvalidParams, "szekely_report: K must be at least 1");
  const ArcMultigraph g = build_multigraph(src);
  SzekelyReport rep;
  rep.m = static_cast<std::int64_t>(src.m());
  rep.n = static_cast<std::int64_t>(src.n());
  rep.t = max_circles_per_center(g.circles, src.m());
  rep.circles = static_cast<std::int64_t>(g.circles.size());
  rep.edges_pre = g.pre_deletion_edges;
  rep.edges_post = g.post_deletion_edges;
  rep.edges_deleted = g.deleted_edges;
  rep.deletion_limit = 2 * rep.m * rep.t;
  rep.K = K;
  rep.c = c;
  std::int64_t gprime_mult = 1;
  for (const auto& [pair, mult] : g.multiplicity) {
    ++rep.mult_histogram[mult];
    if (mult > K) {
      rep.edges_heavy += mult;
    } else {
      gprime_mult = std::max(gprime_mult, mult);
    }
  }
  rep.edges_gprime = rep.edges_post - rep.edges_heavy;
  rep.lhs = Rat(rep.m * rep.m) * Rat(rep.t * rep.t);
  if (rep.n > 0) {
    const Rat e(rep.edges_gprime);
    rep.rhs = c * e * e * e / (Rat(K) * Rat(rep.n) * Rat(rep.n));
  }
  rep.chain_consistent = rep.lhs >= rep.rhs;
  rep.vacuous = rep.edges_gprime == 0;
  std::vector<CircleRecord> retained;
  for (const auto& circle : g.circles) {
    if (circle.members.size() >= 3) retained.push_back(circle);
  }
  rep.crossings = circle_pair_crossings(retained);
  rep.bounds = crossing_bounds(rep.n, rep.edges_gprime, gprime_mult, c);
  std::vector<Pt2> centers;
  for (std::size_t p = 0; p < src.m(); ++p) centers.push_back(src.center(p));
  for (std::int64_t r = 2; r <= rep.m; ++r) {
    const auto census = bisector_pair_census(g, src, r);
    rep.T_counts.emplace_back(r, static_cast<std::int64_t>(census.pairs.size()));
    rep.per_line_bound_holds = rep.per_line_bound_holds && census.per_line_bound_holds;
    rep.rich_lines.emplace_back(r, rich_lines(centers, r).count);
  }
  return rep;
}

}  // namespace ddist
