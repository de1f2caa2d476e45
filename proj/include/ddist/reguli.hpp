#pragma once

#include <array>
#include <cstddef>
#include <optional>
#include <string_view>
#include <utility>
#include <vector>

#include "ddist/geometry.hpp"

namespace ddist {

// f(x,y,z) = c[0] x^2 + c[1] y^2 + c[2] z^2 + c[3] xy + c[4] xz + c[5] yz
//          + c[6] x + c[7] y + c[8] z + c[9]
// normalized so the first nonzero coefficient is 1.
class Quadric {
 public:
  static constexpr std::array<std::string_view, 10> kNames = {
      "x2", "y2", "z2", "xy", "xz", "yz", "x", "y", "z", "1"};

  explicit Quadric(std::array<Rat, 10> coeffs);

  const std::array<Rat, 10>& coeffs() const { return c_; }
  Rat eval(const Pt3& p) const;
  // The restriction along anchor + t dir is A t^2 + B t + C; returns {A, B, C}.
  std::array<Rat, 3> restrict_to(const Line3& l) const;
  bool proportional_to(const Quadric& other) const { return c_ == other.c_; }

  friend bool operator==(const Quadric&, const Quadric&) = default;

 private:
  std::array<Rat, 10> c_;
};

std::ostream& operator<<(std::ostream& os, const Quadric& q);

enum class SurfaceClass { HyperboloidOneSheet, HyperbolicParaboloid, Other };
std::string_view surface_class_name(SurfaceClass c);

// The quadric containing three pairwise skew lines.
Quadric regulus_fit(const Line3& l1, const Line3& l2, const Line3& l3);

// Dimension of the solution space of the 9x10 fitting system (1 for skew input).
std::size_t regulus_fit_nullity(const Line3& l1, const Line3& l2, const Line3& l3);

bool quadric_contains_line(const Quadric& q, const Line3& l);

SurfaceClass classify_quadric(const Quadric& q);

// The transversal of l1, l2, l3 through x (a point of l1), if one exists.
std::optional<Line3> psi_sample(const Line3& l1, const Line3& l2, const Line3& l3, const Pt3& x);

struct RulingPartition {
  std::vector<std::size_t> A;  // indices into the input list
  std::vector<std::size_t> B;
  // Cross pairs (index in A-list input, index in B-list input) that are Parallel.
  std::vector<std::pair<std::size_t, std::size_t>> exceptions;
  std::size_t intersecting_cross_pairs = 0;
};

RulingPartition rulings_partition(const Quadric& q, const std::vector<Line3>& lines);

// a(t) = center + r ((1 - t^2) / (1 + t^2), 2t / (1 + t^2)).
Pt2 rational_circle_point(const Pt2& center, const Rat& r, const Rat& t);

struct CircleRegulus {
  Quadric quadric;
  SurfaceClass surface;
  std::vector<Pt2> a_points;    // on C(q, r)
  std::vector<Pt2> b_points;    // on C(p, r)
  std::vector<Line3> ruling1;   // rho_line(p, a)
  std::vector<Line3> ruling2;   // rho_line(b, q)
  bool all_contained = false;
  // (i, j) with p - b_j = a_i - q.
  std::vector<std::pair<std::size_t, std::size_t>> translation_pairs;
  std::vector<std::pair<std::size_t, std::size_t>> parallel_pairs;
  // Parallel cross pairs are exactly the translation pairs; all others meet.
  bool cross_relations_consistent = false;
};

CircleRegulus circle_regulus(const Pt2& p, const Pt2& q, const Rat& r, const std::vector<Rat>& ts);

struct LineRegulus {
  Quadric quadric;
  SurfaceClass surface;
  std::vector<Pt2> a_points;       // on the target line
  std::vector<Line3> ruling1;      // rho_line(p, a)
  std::vector<Line3> ruling2;      // s_line(l', target), l' through p
  std::vector<bool> ruling1_contained;
  std::vector<bool> ruling2_contained;
  bool all_contained = false;
};

LineRegulus line_regulus(const Pt2& p, const OrLine2& target, const std::vector<Rat>& ts,
                         const std::vector<Vec2>& dirs);

// Polynomial of total degree <= 2 in (u, v) = (a_x, a_y):
// c[0] + c[1] u + c[2] v + c[3] u^2 + c[4] u v + c[5] v^2.
struct BiPoly {
  std::array<Rat, 6> c;
  Rat eval(const Rat& u, const Rat& v) const;
  bool is_zero() const;
};

enum class FamilySide { First, Second };

// Coefficients (t^2, t, 1) of q restricted to rho_line(p, a) (First) or
// rho_line(a, p) (Second), as polynomials in a. All three vanish at a
// exactly when that line lies on q.
std::array<BiPoly, 3> line_family_constraints(const Quadric& q, const Pt2& p, FamilySide side);

}  // namespace ddist
