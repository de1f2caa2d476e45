#include "ddist/reguli.hpp"

#include <algorithm>
#include <set>

#include "ddist/error.hpp"
#include "ddist/esgk.hpp"
#include "ddist/linalg.hpp"

namespace ddist {

namespace {

std::array<Rat, 10> monomials(const Pt3& p) {
  return {p.x * p.x, p.y * p.y, p.z * p.z, p.x * p.y, p.x * p.z, p.y * p.z,
          p.x,       p.y,       p.z,       Rat(1)};
}

// Symmetric 4x4 matrix of the homogenized form; the 3x3 leading block is the
// quadratic part.
RatMatrix full_matrix(const Quadric& q) {
  const auto& c = q.coeffs();
  const Rat h(1, 2);
  RatMatrix m(4, 4);
  m(0, 0) = c[0];
  m(1, 1) = c[1];
  m(2, 2) = c[2];
  m(0, 1) = m(1, 0) = h * c[3];
  m(0, 2) = m(2, 0) = h * c[4];
  m(1, 2) = m(2, 1) = h * c[5];
  m(0, 3) = m(3, 0) = h * c[6];
  m(1, 3) = m(3, 1) = h * c[7];
  m(2, 3) = m(3, 2) = h * c[8];
  m(3, 3) = c[9];
  return m;
}

void require_skew(const Line3& a, const Line3& b, const char* which) {
  if (relate_lines3(a, b).kind != RelationKind::Skew) {
    throw Error(ErrorKind::NotSkew, std::string("lines ") + which + " are not skew");
  }
}

void require_pairwise_skew(const Line3& l1, const Line3& l2, const Line3& l3) {
  require_skew(l1, l2, "1 and 2");
  require_skew(l1, l3, "1 and 3");
  require_skew(l2, l3, "2 and 3");
}

RatMatrix fit_system(const Line3& l1, const Line3& l2, const Line3& l3) {
  RatMatrix sys(9, 10);
  const std::array<const Line3*, 3> lines{&l1, &l2, &l3};
  const std::array<Rat, 3> params{Rat(0), Rat(1), Rat(-1)};
  std::size_t row = 0;
  for (const auto* l : lines) {
    for (const auto& t : params) {
      const auto mono = monomials(l->at(t));
      for (std::size_t c = 0; c < 10; ++c) sys(row, c) = mono[c];
      ++row;
    }
  }
  return sys;
}

}  // namespace

Quadric::Quadric(std::array<Rat, 10> coeffs) : c_(std::move(coeffs)) {
  const auto lead = std::find_if(c_.begin(), c_.end(), [](const Rat& r) { return !r.is_zero(); });
  if (lead == c_.end()) throw Error(ErrorKind::DegenerateInput, "quadric with all coefficients zero");
  const Rat inv = Rat(1) / *lead;
  for (auto& v : c_) v *= inv;
}

Rat Quadric::eval(const Pt3& p) const {
  const auto mono = monomials(p);
  Rat sum(0);
  for (std::size_t i = 0; i < 10; ++i) sum += c_[i] * mono[i];
  return sum;
}

std::array<Rat, 3> Quadric::restrict_to(const Line3& l) const {
  const Rat f0 = eval(l.at(Rat(0)));
  const Rat f1 = eval(l.at(Rat(1)));
  const Rat fm = eval(l.at(Rat(-1)));
  const Rat h(1, 2);
  return {h * (f1 + fm) - f0, h * (f1 - fm), f0};
}

std::ostream& operator<<(std::ostream& os, const Quadric& q) {
  bool first = true;
  for (std::size_t i = 0; i < 10; ++i) {
    if (q.coeffs()[i].is_zero()) continue;
    if (!first) os << " + ";
    os << "(" << q.coeffs()[i] << ")" << Quadric::kNames[i];
    first = false;
  }
  return os;
}

std::string_view surface_class_name(SurfaceClass c) {
  switch (c) {
    case SurfaceClass::HyperboloidOneSheet: return "hyperboloid_one_sheet";
    case SurfaceClass::HyperbolicParaboloid: return "hyperbolic_paraboloid";
    case SurfaceClass::Other: return "other";
  }
  return "other";
}

std::size_t regulus_fit_nullity(const Line3& l1, const Line3& l2, const Line3& l3) {
  return nullspace(fit_system(l1, l2, l3)).size();
}

Quadric regulus_fit(const Line3& l1, const Line3& l2, const Line3& l3) {
  require_pairwise_skew(l1, l2, l3);
  const auto basis = nullspace(fit_system(l1, l2, l3));
  if (basis.size() != 1) {
    throw Error(ErrorKind::DegenerateFit,
                "regulus_fit: solution space has dimension " + std::to_string(basis.size()));
  }
  std::array<Rat, 10> c;
  std::copy(basis[0].begin(), basis[0].end(), c.begin());
  return Quadric(c);
}

bool quadric_contains_line(const Quadric& q, const Line3& l) {
  // The restriction has degree <= 2, so three zeros force it to vanish.
  return q.eval(l.at(Rat(0))).is_zero() && q.eval(l.at(Rat(1))).is_zero() &&
         q.eval(l.at(Rat(-1))).is_zero();
}

SurfaceClass classify_quadric(const Quadric& q) {
  const RatMatrix full = full_matrix(q);
  RatMatrix quad(3, 3);
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) quad(i, j) = full(i, j);
  }
  const Inertia in3 = inertia(quad);
  const Inertia in4 = inertia(full);
  const bool indefinite = in3.positive > 0 && in3.negative > 0;
  if (in4.rank() != 4 || !indefinite) return SurfaceClass::Other;
  // With full rank, sign(det) = (-1)^negative.
  const bool det_positive = in4.negative % 2 == 0;
  if (in3.rank() == 3 && det_positive) return SurfaceClass::HyperboloidOneSheet;
  if (in3.rank() == 2) return SurfaceClass::HyperbolicParaboloid;
  return SurfaceClass::Other;
}

std::optional<Line3> psi_sample(const Line3& l1, const Line3& l2, const Line3& l3, const Pt3& x) {
  if (!l1.contains(x)) throw Error(ErrorKind::PointNotOnLine, "psi_sample: point is not on the first line");
  require_pairwise_skew(l1, l2, l3);
  // Planes spanned by x and l2, and by x and l3.
  const Vec3 n2 = cross(l2.direction(), x - l2.anchor());
  const Vec3 n3 = cross(l3.direction(), x - l3.anchor());
  const Vec3 dir = cross(n2, n3);
  if (is_zero(dir)) return std::nullopt;
  Line3 t = Line3::through(x, dir);
  if (relate_lines3(t, l2).kind != RelationKind::Intersect ||
      relate_lines3(t, l3).kind != RelationKind::Intersect) {
    return std::nullopt;
  }
  return t;
}

RulingPartition rulings_partition(const Quadric& q, const std::vector<Line3>& lines) {
  for (std::size_t i = 0; i < lines.size(); ++i) {
    if (!quadric_contains_line(q, lines[i])) {
      throw Error(ErrorKind::ContainmentFailure,
                  "rulings_partition: line " + std::to_string(i) + " is not on the quadric");
    }
  }
  if (classify_quadric(q) == SurfaceClass::Other) {
    throw Error(ErrorKind::InconsistentPartition, "rulings_partition: quadric is not doubly ruled");
  }
  RulingPartition out;
  if (lines.empty()) return out;
  out.A.push_back(0);
  for (std::size_t i = 1; i < lines.size(); ++i) {
    const auto kind = relate_lines3(lines[0], lines[i]).kind;
    if (kind == RelationKind::Equal) {
      throw Error(ErrorKind::InconsistentPartition,
                  "rulings_partition: line " + std::to_string(i) + " repeats line 0");
    }
    (kind == RelationKind::Skew ? out.A : out.B).push_back(i);
  }
  auto check_within = [&](const std::vector<std::size_t>& side) {
    for (std::size_t i = 0; i < side.size(); ++i) {
      for (std::size_t j = i + 1; j < side.size(); ++j) {
        if (relate_lines3(lines[side[i]], lines[side[j]]).kind != RelationKind::Skew) {
          throw Error(ErrorKind::InconsistentPartition,
                      "rulings_partition: lines " + std::to_string(side[i]) + " and " +
                          std::to_string(side[j]) + " share a ruling but are not skew");
        }
      }
    }
  };
  check_within(out.A);
  check_within(out.B);
  for (auto a : out.A) {
    for (auto b : out.B) {
      const auto kind = relate_lines3(lines[a], lines[b]).kind;
      if (kind == RelationKind::Intersect) {
        ++out.intersecting_cross_pairs;
      } else if (kind == RelationKind::Parallel) {
        out.exceptions.emplace_back(a, b);
      } else {
        throw Error(ErrorKind::InconsistentPartition,
                    "rulings_partition: lines " + std::to_string(a) + " and " + std::to_string(b) +
                        " lie in different rulings but are skew or equal");
      }
    }
  }
  return out;
}

Pt2 rational_circle_point(const Pt2& center, const Rat& r, const Rat& t) {
  const Rat t2 = square(t);
  const Rat den = Rat(1) + t2;
  return {center.x + r * (Rat(1) - t2) / den, center.y + r * Rat(2) * t / den};
}

namespace {

void require_distinct_params(const std::vector<Rat>& ts) {
  if (ts.size() < 3) throw Error(ErrorKind::InvalidParams, "need at least three parameters");
  const std::set<Rat> uniq(ts.begin(), ts.end());
  if (uniq.size() != ts.size()) throw Error(ErrorKind::InvalidParams, "parameters must be distinct");
}

}  // namespace

CircleRegulus circle_regulus(const Pt2& p, const Pt2& q, const Rat& r, const std::vector<Rat>& ts) {
  if (p == q) throw Error(ErrorKind::InvalidParams, "circle_regulus: p and q must differ");
  if (r.sign() <= 0) throw Error(ErrorKind::InvalidParams, "circle_regulus: radius must be positive");
  require_distinct_params(ts);
  std::vector<Pt2> a_pts;
  std::vector<Pt2> b_pts;
  std::vector<Line3> ruling1;
  std::vector<Line3> ruling2;
  for (const auto& t : ts) {
    a_pts.push_back(rational_circle_point(q, r, t));
    b_pts.push_back(rational_circle_point(p, r, t));
    ruling1.push_back(rho_line(p, a_pts.back()));
    ruling2.push_back(rho_line(b_pts.back(), q));
  }
  Quadric quadric = regulus_fit(ruling1[0], ruling1[1], ruling1[2]);
  CircleRegulus out{quadric, classify_quadric(quadric), std::move(a_pts), std::move(b_pts),
                    std::move(ruling1), std::move(ruling2), false, {}, {}, false};
  out.all_contained = true;
  for (const auto& l : out.ruling1) out.all_contained = out.all_contained && quadric_contains_line(quadric, l);
  for (const auto& l : out.ruling2) out.all_contained = out.all_contained && quadric_contains_line(quadric, l);
  out.cross_relations_consistent = true;
  for (std::size_t i = 0; i < out.ruling1.size(); ++i) {
    for (std::size_t j = 0; j < out.ruling2.size(); ++j) {
      const bool translation = (p - out.b_points[j]) == (out.a_points[i] - q);
      const auto kind = relate_lines3(out.ruling1[i], out.ruling2[j]).kind;
      if (translation) out.translation_pairs.emplace_back(i, j);
      if (kind == RelationKind::Parallel) out.parallel_pairs.emplace_back(i, j);
      const bool ok = translation ? kind == RelationKind::Parallel : kind == RelationKind::Intersect;
      out.cross_relations_consistent = out.cross_relations_consistent && ok;
    }
  }
  return out;
}

LineRegulus line_regulus(const Pt2& p, const OrLine2& target, const std::vector<Rat>& ts,
                         const std::vector<Vec2>& dirs) {
  require_distinct_params(ts);
  if (!exact_sqrt(dot(target.dir, target.dir))) {
    throw Error(ErrorKind::IrrationalAngle, "line_regulus: target direction needs rational length");
  }
  std::vector<Pt2> a_pts;
  std::vector<Line3> ruling1;
  for (const auto& t : ts) {
    a_pts.push_back(target.base + t * target.dir);
    ruling1.push_back(rho_line(p, a_pts.back()));
  }
  std::vector<Line3> ruling2;
  for (const auto& d : dirs) ruling2.push_back(s_line(OrLine2(p, d), target));
  Quadric quadric = regulus_fit(ruling1[0], ruling1[1], ruling1[2]);
  LineRegulus out{quadric, classify_quadric(quadric), std::move(a_pts), std::move(ruling1),
                  std::move(ruling2), {}, {}, false};
  out.all_contained = true;
  for (const auto& l : out.ruling1) {
    out.ruling1_contained.push_back(quadric_contains_line(quadric, l));
    out.all_contained = out.all_contained && out.ruling1_contained.back();
  }
  for (const auto& l : out.ruling2) {
    out.ruling2_contained.push_back(quadric_contains_line(quadric, l));
    out.all_contained = out.all_contained && out.ruling2_contained.back();
  }
  return out;
}

Rat BiPoly::eval(const Rat& u, const Rat& v) const {
  return c[0] + c[1] * u + c[2] * v + c[3] * u * u + c[4] * u * v + c[5] * v * v;
}

bool BiPoly::is_zero() const {
  return std::all_of(c.begin(), c.end(), [](const Rat& r) { return r.is_zero(); });
}

namespace {

// c0 + cu u + cv v
struct Affine {
  Rat c0;
  Rat cu;
  Rat cv;
};

BiPoly operator*(const Affine& a, const Affine& b) {
  return {{a.c0 * b.c0, a.c0 * b.cu + a.cu * b.c0, a.c0 * b.cv + a.cv * b.c0, a.cu * b.cu,
           a.cu * b.cv + a.cv * b.cu, a.cv * b.cv}};
}

BiPoly& operator+=(BiPoly& a, const BiPoly& b) {
  for (std::size_t i = 0; i < 6; ++i) a.c[i] += b.c[i];
  return a;
}

BiPoly scaled(const Rat& s, BiPoly p) {
  for (auto& v : p.c) v *= s;
  return p;
}

BiPoly lift(const Affine& a) { return {{a.c0, a.cu, a.cv, Rat(0), Rat(0), Rat(0)}}; }

using AffineVec = std::array<Affine, 3>;

BiPoly bilinear(const RatMatrix& s, const AffineVec& x, const AffineVec& y) {
  BiPoly out{};
  for (std::size_t i = 0; i < 3; ++i) {
    for (std::size_t j = 0; j < 3; ++j) {
      if (s(i, j).is_zero()) continue;
      out += scaled(s(i, j), x[i] * y[j]);
    }
  }
  return out;
}

BiPoly linear(const RatMatrix& full, const AffineVec& x) {
  // Linear coefficients are twice the off-block entries of the full matrix.
  BiPoly out{};
  for (std::size_t i = 0; i < 3; ++i) out += scaled(Rat(2) * full(i, 3), lift(x[i]));
  return out;
}

}  // namespace

std::array<BiPoly, 3> line_family_constraints(const Quadric& q, const Pt2& p, FamilySide side) {
  const RatMatrix full = full_matrix(q);
  const Rat h(1, 2);
  // Anchor ((p + a) / 2, 0); direction per side.
  const AffineVec base{Affine{h * p.x, h, Rat(0)}, Affine{h * p.y, Rat(0), h},
                       Affine{Rat(0), Rat(0), Rat(0)}};
  AffineVec dir;
  if (side == FamilySide::First) {
    // ((a_y - p_y) / 2, (p_x - a_x) / 2, 1)
    dir = {Affine{-h * p.y, Rat(0), h}, Affine{h * p.x, -h, Rat(0)}, Affine{Rat(1), Rat(0), Rat(0)}};
  } else {
    // ((p_y - a_y) / 2, (a_x - p_x) / 2, 1)
    dir = {Affine{h * p.y, Rat(0), -h}, Affine{-h * p.x, h, Rat(0)}, Affine{Rat(1), Rat(0), Rat(0)}};
  }
  BiPoly t2 = bilinear(full, dir, dir);
  BiPoly t1 = scaled(Rat(2), bilinear(full, base, dir));
  t1 += linear(full, dir);
  BiPoly t0 = bilinear(full, base, base);
  t0 += linear(full, base);
  t0.c[0] += full(3, 3);
  return {t2, t1, t0};
}

}  // namespace ddist
