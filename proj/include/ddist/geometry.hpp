#pragma once

#include <cstddef>
#include <optional>
#include <ostream>
#include <utility>
#include <variant>

#include "ddist/rat.hpp"

namespace ddist {

// Point of the plane. Also used for plane vectors (directions, offsets).
struct Pt2 {
  Rat x;
  Rat y;

  friend bool operator==(const Pt2&, const Pt2&) = default;
  friend auto operator<=>(const Pt2&, const Pt2&) = default;
  friend Pt2 operator+(const Pt2& a, const Pt2& b) { return {a.x + b.x, a.y + b.y}; }
  friend Pt2 operator-(const Pt2& a, const Pt2& b) { return {a.x - b.x, a.y - b.y}; }
  friend Pt2 operator*(const Rat& s, const Pt2& a) { return {s * a.x, s * a.y}; }
};
using Vec2 = Pt2;

struct Pt3 {
  Rat x;
  Rat y;
  Rat z;

  friend bool operator==(const Pt3&, const Pt3&) = default;
  friend auto operator<=>(const Pt3&, const Pt3&) = default;
  friend Pt3 operator+(const Pt3& a, const Pt3& b) { return {a.x + b.x, a.y + b.y, a.z + b.z}; }
  friend Pt3 operator-(const Pt3& a, const Pt3& b) { return {a.x - b.x, a.y - b.y, a.z - b.z}; }
  friend Pt3 operator*(const Rat& s, const Pt3& a) { return {s * a.x, s * a.y, s * a.z}; }
};
using Vec3 = Pt3;

std::ostream& operator<<(std::ostream& os, const Pt2& p);
std::ostream& operator<<(std::ostream& os, const Pt3& p);

Rat dot(const Vec2& a, const Vec2& b);
Rat cross(const Vec2& a, const Vec2& b);
Vec2 rotate90(const Vec2& v);
Rat dot(const Vec3& a, const Vec3& b);
Vec3 cross(const Vec3& a, const Vec3& b);
bool is_zero(const Vec3& v);

// Oriented line of the plane: base + t * dir, dir != 0.
struct OrLine2 {
  Pt2 base;
  Vec2 dir;

  OrLine2(Pt2 b, Vec2 d);
  bool contains(const Pt2& p) const;
};

// Same direction (cross = 0, dot > 0) / opposite direction (cross = 0, dot < 0).
bool parallel(const OrLine2& a, const OrLine2& b);
bool anti_parallel(const OrLine2& a, const OrLine2& b);

// Unoriented plane line a*x + b*y + c = 0, normalized so the first nonzero
// of (a, b) is 1. Two OrLine2 describe the same point set iff their keys match.
struct Line2Key {
  Rat a;
  Rat b;
  Rat c;

  friend bool operator==(const Line2Key&, const Line2Key&) = default;
  friend auto operator<=>(const Line2Key&, const Line2Key&) = default;
};
Line2Key line_key(const OrLine2& l);
Line2Key line_through(const Pt2& p, const Pt2& q);

// Line of 3-space {(a*z + b, c*z + d, z)}.
struct NonHorizontal {
  Rat a;
  Rat b;
  Rat c;
  Rat d;
  friend bool operator==(const NonHorizontal&, const NonHorizontal&) = default;
};

// Line of 3-space inside the plane at height z. Canonical: dir is scaled so
// its first nonzero coordinate is 1 and base is the point of the line with
// x = 0 (when dir.x != 0) or y = 0 (when dir = (0, 1)).
struct Horizontal {
  Rat z;
  Pt2 base;
  Vec2 dir;
  friend bool operator==(const Horizontal&, const Horizontal&) = default;
};

// (p, q) such that the line is the set of rotations taking p to q.
struct Provenance {
  Pt2 p;
  Pt2 q;
  friend bool operator==(const Provenance&, const Provenance&) = default;
};

class Line3 {
 public:
  using Form = std::variant<NonHorizontal, Horizontal>;

  static Line3 non_horizontal(Rat a, Rat b, Rat c, Rat d);
  static Line3 horizontal(Rat z, Pt2 base, Vec2 dir);
  // Line through point with direction (dir != 0); picks the matching form.
  static Line3 through(const Pt3& point, const Vec3& dir);

  const Form& form() const { return form_; }
  bool is_horizontal() const { return std::holds_alternative<Horizontal>(form_); }
  const NonHorizontal& nh() const { return std::get<NonHorizontal>(form_); }
  const Horizontal& hz() const { return std::get<Horizontal>(form_); }

  // Anchor point and direction such that the line is anchor() + t * direction().
  // For NonHorizontal: anchor is the z = 0 point, direction has z = 1.
  Pt3 anchor() const;
  Vec3 direction() const;
  Pt3 at(const Rat& t) const { return anchor() + t * direction(); }
  bool contains(const Pt3& p) const;

  const std::optional<Provenance>& provenance() const { return prov_; }
  Line3 with_provenance(Provenance prov) const;

  // Geometric equality; provenance is ignored.
  friend bool operator==(const Line3& a, const Line3& b) { return a.form_ == b.form_; }
  std::size_t hash() const;

 private:
  explicit Line3(Form f) : form_(std::move(f)) {}
  Form form_;
  std::optional<Provenance> prov_;
};

std::ostream& operator<<(std::ostream& os, const Line3& l);

enum class RelationKind { Equal, Parallel, Skew, Intersect };

struct Line3Relation {
  RelationKind kind;
  std::optional<Pt3> point;  // set iff kind == Intersect
};

// Plane A x + B y + C z + D = 0 with the first nonzero of (A, B, C) equal to 1.
struct Plane3 {
  Rat a;
  Rat b;
  Rat c;
  Rat d;

  static Plane3 from_normal(const Vec3& normal, const Pt3& point);
  Rat eval(const Pt3& p) const { return a * p.x + b * p.y + c * p.z + d; }
  bool contains(const Pt3& p) const { return eval(p).is_zero(); }
  bool contains(const Line3& l) const;
  Vec3 normal() const { return {a, b, c}; }

  friend bool operator==(const Plane3&, const Plane3&) = default;
  std::size_t hash() const;
};

std::ostream& operator<<(std::ostream& os, const Plane3& p);

Rat sqdist2(const Pt2& p, const Pt2& q);

// Perpendicular bisector: base = midpoint, dir = rotate90(q - p).
OrLine2 bisector(const Pt2& p, const Pt2& q);

Line3Relation relate_lines3(const Line3& l1, const Line3& l2);

struct CircleThrough {
  Pt2 center;
  Rat r2;
};
using CollinearOrCircle = std::variant<OrLine2, CircleThrough>;
CollinearOrCircle collinear_or_circle(const Pt2& a, const Pt2& b, const Pt2& c);

// Unique plane containing two Parallel or Intersecting lines.
Plane3 plane_through(const Line3& l1, const Line3& l2);

struct Pt2Hash {
  std::size_t operator()(const Pt2& p) const noexcept;
};
struct Pt3Hash {
  std::size_t operator()(const Pt3& p) const noexcept;
};
struct Line3Hash {
  std::size_t operator()(const Line3& l) const noexcept { return l.hash(); }
};
struct Plane3Hash {
  std::size_t operator()(const Plane3& p) const noexcept { return p.hash(); }
};
struct Line2KeyHash {
  std::size_t operator()(const Line2Key& k) const noexcept;
};

}  // namespace ddist
