#include "ddist/esgk.hpp"

#include <algorithm>
#include <set>
#include <unordered_map>

#include "ddist/error.hpp"

namespace ddist {

Rat RotationPt::cos_alpha() const {
  const Rat z2 = square(pt.z);
  return (z2 - Rat(1)) / (z2 + Rat(1));
}

Rat RotationPt::sin_alpha() const {
  return Rat(2) * pt.z / (square(pt.z) + Rat(1));
}

Line3 rho_line(const Pt2& p, const Pt2& q) {
  const Rat half(1, 2);
  // x = a z + b, y = c z + d
  Line3 l = Line3::non_horizontal(half * (q.y - p.y), half * (p.x + q.x),
                                  half * (p.x - q.x), half * (p.y + q.y));
  return l.with_provenance({p, q});
}

std::pair<Pt2, Pt2> line_to_pq(const Line3& l) {
  if (l.is_horizontal()) {
    throw Error(ErrorKind::HorizontalLine, "line_to_pq: horizontal lines have no (p, q) form");
  }
  const auto& f = l.nh();
  // a = (qy - py)/2, b = (px + qx)/2, c = (px - qx)/2, d = (py + qy)/2
  return {Pt2{f.b + f.c, f.d - f.a}, Pt2{f.b - f.c, f.d + f.a}};
}

Pt2 apply_rotation(const RotationPt& g, const Pt2& x) {
  const Rat c = g.cos_alpha();
  const Rat s = g.sin_alpha();
  const Pt2 o = g.center();
  const Vec2 v = x - o;
  // alpha is measured clockwise, matching the orientation of rho_line.
  return {o.x + c * v.x + s * v.y, o.y - s * v.x + c * v.y};
}

LineFamilies build_families(const PointSetPair& pp) {
  validate(pp);
  LineFamilies f;
  f.m = pp.P.size();
  f.n = pp.Q.size();
  f.L1.reserve(f.m * f.n);
  f.L2.reserve(f.m * f.n);
  for (const auto& p : pp.P) {
    for (const auto& q : pp.Q) {
      f.L1.push_back(rho_line(p, q));
      f.L2.push_back(rho_line(q, p));
    }
  }
  return f;
}

std::int64_t RichPointHistogram::max_richness() const {
  std::int64_t best = 0;
  for (const auto& [pt, c] : points) best = std::max(best, c.total());
  return best;
}

namespace {

std::vector<const Line3*> all_lines(const LineFamilies& fams) {
  std::vector<const Line3*> lines;
  lines.reserve(fams.L1.size() + fams.L2.size());
  for (const auto& l : fams.L1) lines.push_back(&l);
  for (const auto& l : fams.L2) lines.push_back(&l);
  return lines;
}

}  // namespace

IntersectingPairs count_intersecting_pairs(const LineFamilies& fams) {
  const auto lines = all_lines(fams);
  const std::size_t n1 = fams.L1.size();
  std::unordered_map<Pt3, std::set<std::size_t>, Pt3Hash> incident;
  IntersectingPairs out;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      auto rel = relate_lines3(*lines[i], *lines[j]);
      if (rel.kind != RelationKind::Intersect) continue;
      if (i < n1 && j >= n1) ++out.I;
      auto& s = incident[*rel.point];
      s.insert(i);
      s.insert(j);
    }
  }
  auto& h = out.per_point;
  std::int64_t top = 0;
  for (auto& [pt, idx] : incident) {
    RichCounts c;
    for (auto k : idx) (k < n1 ? c.count1 : c.count2) += 1;
    top = std::max(top, c.total());
    h.points.emplace(pt, c);
  }
  for (std::int64_t r = 2; r <= top; ++r) h.m_r[r] = 0;
  for (const auto& [pt, c] : h.points) {
    for (std::int64_t r = 2; r <= c.total(); ++r) ++h.m_r[r];
  }
  return out;
}

std::int64_t weighted_richpoint_sum(const RichPointHistogram& h) {
  std::int64_t sum = 0;
  for (const auto& [pt, c] : h.points) sum += c.total() * c.total();
  return sum;
}

PlaneCensus plane_census(const LineFamilies& fams) {
  const auto lines = all_lines(fams);
  std::unordered_map<Plane3, std::size_t, Plane3Hash> slot;
  std::vector<std::pair<Plane3, std::set<std::size_t>>> planes;
  for (std::size_t i = 0; i < lines.size(); ++i) {
    for (std::size_t j = i + 1; j < lines.size(); ++j) {
      const auto kind = relate_lines3(*lines[i], *lines[j]).kind;
      if (kind != RelationKind::Intersect && kind != RelationKind::Parallel) continue;
      Plane3 pl = plane_through(*lines[i], *lines[j]);
      auto [it, fresh] = slot.emplace(pl, planes.size());
      if (fresh) planes.emplace_back(std::move(pl), std::set<std::size_t>{});
      auto& members = planes[it->second].second;
      members.insert(i);
      members.insert(j);
    }
  }
  PlaneCensus out;
  for (const auto& [pl, members] : planes) {
    const auto k = static_cast<std::int64_t>(members.size());
    if (k > out.max_on_plane) {
      out.max_on_plane = k;
      out.witness = pl;
    }
  }
  if (!out.witness && !lines.empty()) {
    // No coplanar pair: any plane through the first line holds exactly one.
    const Vec3 d = lines[0]->direction();
    Vec3 n = cross(d, Vec3{Rat(1), Rat(0), Rat(0)});
    if (is_zero(n)) n = cross(d, Vec3{Rat(0), Rat(1), Rat(0)});
    out.max_on_plane = 1;
    out.witness = Plane3::from_normal(n, lines[0]->anchor());
  }
  return out;
}

Line3 s_line(const OrLine2& l1, const OrLine2& l2) {
  if (parallel(l1, l2)) {
    throw Error(ErrorKind::ParallelLines, "s_line: oriented lines are parallel");
  }
  const Rat cr = cross(l1.dir, l2.dir);
  if (cr.is_zero()) {
    // Anti-parallel: half turns about points of the midline.
    const Pt2 mid = Rat(1, 2) * (l1.base + l2.base);
    return Line3::horizontal(Rat(0), mid, l1.dir);
  }
  const auto n1 = exact_sqrt(dot(l1.dir, l1.dir));
  const auto n2 = exact_sqrt(dot(l2.dir, l2.dir));
  if (!n1 || !n2) {
    throw Error(ErrorKind::IrrationalAngle, "s_line: direction vectors need rational length");
  }
  // cot of half the clockwise turn from l1.dir to l2.dir.
  const Rat z = -(*n1 * *n2 + dot(l1.dir, l2.dir)) / cr;
  // Intersection of the two lines: l1.base + s l1.dir on l2.
  const Rat s = cross(l2.base - l1.base, l2.dir) / cr;
  const Pt2 x = l1.base + s * l1.dir;
  const Vec2 axis = (Rat(1) / *n1) * l1.dir - (Rat(1) / *n2) * l2.dir;
  return Line3::horizontal(z, x, axis);
}

}  // namespace ddist
