#include "ddist/geometry.hpp"

#include "ddist/error.hpp"

namespace ddist {

std::ostream& operator<<(std::ostream& os, const Pt2& p) {
  return os << "(" << p.x << ", " << p.y << ")";
}

std::ostream& operator<<(std::ostream& os, const Pt3& p) {
  return os << "(" << p.x << ", " << p.y << ", " << p.z << ")";
}

Rat dot(const Vec2& a, const Vec2& b) { return a.x * b.x + a.y * b.y; }
Rat cross(const Vec2& a, const Vec2& b) { return a.x * b.y - a.y * b.x; }
Vec2 rotate90(const Vec2& v) { return {-v.y, v.x}; }

Rat dot(const Vec3& a, const Vec3& b) { return a.x * b.x + a.y * b.y + a.z * b.z; }

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a.y * b.z - a.z * b.y, a.z * b.x - a.x * b.z, a.x * b.y - a.y * b.x};
}

bool is_zero(const Vec3& v) { return v.x.is_zero() && v.y.is_zero() && v.z.is_zero(); }

OrLine2::OrLine2(Pt2 b, Vec2 d) : base(std::move(b)), dir(std::move(d)) {
  if (dir.x.is_zero() && dir.y.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "oriented line with zero direction");
  }
}

bool OrLine2::contains(const Pt2& p) const { return cross(dir, p - base).is_zero(); }

bool parallel(const OrLine2& a, const OrLine2& b) {
  return cross(a.dir, b.dir).is_zero() && dot(a.dir, b.dir).sign() > 0;
}

bool anti_parallel(const OrLine2& a, const OrLine2& b) {
  return cross(a.dir, b.dir).is_zero() && dot(a.dir, b.dir).sign() < 0;
}

namespace {

Line2Key normalized_key(Rat a, Rat b, Rat c) {
  const Rat lead = a.is_zero() ? b : a;
  return {a / lead, b / lead, c / lead};
}

}  // namespace

Line2Key line_key(const OrLine2& l) {
  // Normal (dir.y, -dir.x).
  const Rat a = l.dir.y;
  const Rat b = -l.dir.x;
  return normalized_key(a, b, -(a * l.base.x + b * l.base.y));
}

Line2Key line_through(const Pt2& p, const Pt2& q) {
  if (p == q) throw Error(ErrorKind::DegenerateInput, "line through coincident points");
  return line_key(OrLine2(p, q - p));
}

Line3 Line3::non_horizontal(Rat a, Rat b, Rat c, Rat d) {
  return Line3(NonHorizontal{std::move(a), std::move(b), std::move(c), std::move(d)});
}

Line3 Line3::horizontal(Rat z, Pt2 base, Vec2 dir) {
  if (dir.x.is_zero() && dir.y.is_zero()) {
    throw Error(ErrorKind::DegenerateInput, "horizontal line with zero direction");
  }
  Vec2 d;
  Pt2 b;
  if (!dir.x.is_zero()) {
    d = {Rat(1), dir.y / dir.x};
    // Slide to x = 0.
    b = {Rat(0), base.y - d.y * base.x};
  } else {
    d = {Rat(0), Rat(1)};
    b = {base.x, Rat(0)};
  }
  return Line3(Horizontal{std::move(z), std::move(b), std::move(d)});
}

Line3 Line3::through(const Pt3& point, const Vec3& dir) {
  if (is_zero(dir)) throw Error(ErrorKind::DegenerateInput, "line with zero direction");
  if (dir.z.is_zero()) {
    return horizontal(point.z, {point.x, point.y}, {dir.x, dir.y});
  }
  const Rat a = dir.x / dir.z;
  const Rat c = dir.y / dir.z;
  return non_horizontal(a, point.x - a * point.z, c, point.y - c * point.z);
}

Pt3 Line3::anchor() const {
  if (const auto* nh = std::get_if<NonHorizontal>(&form_)) return {nh->b, nh->d, Rat(0)};
  const auto& h = std::get<Horizontal>(form_);
  return {h.base.x, h.base.y, h.z};
}

Vec3 Line3::direction() const {
  if (const auto* nh = std::get_if<NonHorizontal>(&form_)) return {nh->a, nh->c, Rat(1)};
  const auto& h = std::get<Horizontal>(form_);
  return {h.dir.x, h.dir.y, Rat(0)};
}

bool Line3::contains(const Pt3& p) const { return is_zero(cross(direction(), p - anchor())); }

Line3 Line3::with_provenance(Provenance prov) const {
  Line3 copy = *this;
  copy.prov_ = std::move(prov);
  return copy;
}

std::size_t Line3::hash() const {
  std::size_t seed = form_.index();
  if (const auto* nh = std::get_if<NonHorizontal>(&form_)) {
    hash_combine(seed, nh->a.hash());
    hash_combine(seed, nh->b.hash());
    hash_combine(seed, nh->c.hash());
    hash_combine(seed, nh->d.hash());
  } else {
    const auto& h = std::get<Horizontal>(form_);
    hash_combine(seed, h.z.hash());
    hash_combine(seed, Pt2Hash{}(h.base));
    hash_combine(seed, Pt2Hash{}(h.dir));
  }
  return seed;
}

std::ostream& operator<<(std::ostream& os, const Line3& l) {
  if (!l.is_horizontal()) {
    const auto& nh = l.nh();
    return os << "NH(a=" << nh.a << ", b=" << nh.b << ", c=" << nh.c << ", d=" << nh.d << ")";
  }
  const auto& h = l.hz();
  return os << "H(z=" << h.z << ", base=" << h.base << ", dir=" << h.dir << ")";
}

Plane3 Plane3::from_normal(const Vec3& n, const Pt3& point) {
  if (is_zero(n)) throw Error(ErrorKind::DegenerateInput, "plane with zero normal");
  const Rat lead = !n.x.is_zero() ? n.x : (!n.y.is_zero() ? n.y : n.z);
  const Vec3 u = (Rat(1) / lead) * n;
  return {u.x, u.y, u.z, -dot(u, point)};
}

bool Plane3::contains(const Line3& l) const {
  return contains(l.anchor()) && dot(normal(), l.direction()).is_zero();
}

std::size_t Plane3::hash() const {
  std::size_t seed = a.hash();
  hash_combine(seed, b.hash());
  hash_combine(seed, c.hash());
  hash_combine(seed, d.hash());
  return seed;
}

std::ostream& operator<<(std::ostream& os, const Plane3& p) {
  return os << "[" << p.a << ", " << p.b << ", " << p.c << ", " << p.d << "]";
}

Rat sqdist2(const Pt2& p, const Pt2& q) {
  const Vec2 d = p - q;
  return dot(d, d);
}

OrLine2 bisector(const Pt2& p, const Pt2& q) {
  if (p == q) throw Error(ErrorKind::DegenerateInput, "bisector of coincident points");
  return OrLine2(Rat(1, 2) * (p + q), rotate90(q - p));
}

namespace {

Line3Relation relate_non_horizontal(const NonHorizontal& l1, const NonHorizontal& l2) {
  // a1 z + b1 = a2 z + b2 and c1 z + d1 = c2 z + d2.
  const Rat da = l1.a - l2.a;
  const Rat db = l2.b - l1.b;
  const Rat dc = l1.c - l2.c;
  const Rat dd = l2.d - l1.d;
  if (da.is_zero() && dc.is_zero()) {
    if (db.is_zero() && dd.is_zero()) return {RelationKind::Equal, std::nullopt};
    return {RelationKind::Parallel, std::nullopt};
  }
  Rat z;
  if (!da.is_zero()) {
    z = db / da;
    if (!(dc * z - dd).is_zero()) return {RelationKind::Skew, std::nullopt};
  } else {
    if (!db.is_zero()) return {RelationKind::Skew, std::nullopt};
    z = dd / dc;
  }
  return {RelationKind::Intersect, Pt3{l1.a * z + l1.b, l1.c * z + l1.d, z}};
}

}  // namespace

Line3Relation relate_lines3(const Line3& l1, const Line3& l2) {
  if (!l1.is_horizontal() && !l2.is_horizontal()) {
    return relate_non_horizontal(l1.nh(), l2.nh());
  }
  const Pt3 p1 = l1.anchor();
  const Vec3 d1 = l1.direction();
  const Pt3 p2 = l2.anchor();
  const Vec3 d2 = l2.direction();
  const Vec3 w = p2 - p1;
  const Vec3 n = cross(d1, d2);
  if (is_zero(n)) {
    if (is_zero(cross(w, d1))) return {RelationKind::Equal, std::nullopt};
    return {RelationKind::Parallel, std::nullopt};
  }
  if (!dot(w, n).is_zero()) return {RelationKind::Skew, std::nullopt};
  // p1 + s d1 = p2 + u d2  =>  s = ((w x d2) . n) / |n|^2
  const Rat s = dot(cross(w, d2), n) / dot(n, n);
  return {RelationKind::Intersect, p1 + s * d1};
}

CollinearOrCircle collinear_or_circle(const Pt2& a, const Pt2& b, const Pt2& c) {
  if (a == b || b == c || a == c) {
    throw Error(ErrorKind::DegenerateInput, "collinear_or_circle needs three distinct points");
  }
  const Vec2 ab = b - a;
  const Vec2 ac = c - a;
  const Rat det = cross(ab, ac);
  if (det.is_zero()) return OrLine2(a, ab);
  // Circumcenter relative to a: solves 2 ab.u = |ab|^2, 2 ac.u = |ac|^2.
  const Rat ab2 = dot(ab, ab);
  const Rat ac2 = dot(ac, ac);
  const Rat two_det = Rat(2) * det;
  const Vec2 u{(ac.y * ab2 - ab.y * ac2) / two_det, (ab.x * ac2 - ac.x * ab2) / two_det};
  return CircleThrough{a + u, dot(u, u)};
}

Plane3 plane_through(const Line3& l1, const Line3& l2) {
  const auto rel = relate_lines3(l1, l2);
  switch (rel.kind) {
    case RelationKind::Intersect:
      return Plane3::from_normal(cross(l1.direction(), l2.direction()), *rel.point);
    case RelationKind::Parallel:
      return Plane3::from_normal(cross(l1.direction(), l2.anchor() - l1.anchor()), l1.anchor());
    case RelationKind::Equal:
      throw Error(ErrorKind::NotCoplanar, "plane_through: lines are equal");
    case RelationKind::Skew:
      break;
  }
  throw Error(ErrorKind::NotCoplanar, "plane_through: lines are skew");
}

std::size_t Pt2Hash::operator()(const Pt2& p) const noexcept {
  std::size_t seed = p.x.hash();
  hash_combine(seed, p.y.hash());
  return seed;
}

std::size_t Pt3Hash::operator()(const Pt3& p) const noexcept {
  std::size_t seed = p.x.hash();
  hash_combine(seed, p.y.hash());
  hash_combine(seed, p.z.hash());
  return seed;
}

std::size_t Line2KeyHash::operator()(const Line2Key& k) const noexcept {
  std::size_t seed = k.a.hash();
  hash_combine(seed, k.b.hash());
  hash_combine(seed, k.c.hash());
  return seed;
}

}  // namespace ddist
