#pragma once

#include <cstdint>
#include <string_view>
#include <vector>

namespace ddist {

// The point (i, sqrt(j)). Kept in the integer (i, j) domain; never converted
// to coordinates with radicals.
struct QuadPt {
  std::int64_t i;
  std::int64_t j;
  friend bool operator==(const QuadPt&, const QuadPt&) = default;
};

// Circle grid: P = {(a, 0) : 1 <= a <= m},
// Q = {(i, sqrt(j)) : 1 <= i <= s, s^2 + 1 - i^2 <= j <= s^2 + m s - i^2}.
struct CircleGrid {
  std::int64_t m = 0;
  std::int64_t s = 0;
  std::vector<std::int64_t> P;  // x-coordinates a of the points (a, 0)
  std::vector<QuadPt> Q;

  std::int64_t n() const { return m * s * s; }
};

CircleGrid elekes_grid(std::int64_t m, std::int64_t s);

// Squared distance between (a, 0) and (i, sqrt(j)).
std::int64_t grid_sqdist(std::int64_t a, const QuadPt& q);

struct GridCensus {
  std::int64_t count = 0;
  std::int64_t min = 0;
  std::int64_t max = 0;
};

GridCensus elekes_distance_census(const CircleGrid& g);

// Closed bracket every grid squared distance lies in when m <= s.
struct GridValueBracket {
  std::int64_t lo;
  std::int64_t hi;
};
GridValueBracket elekes_value_bracket(std::int64_t m, std::int64_t s);

// [ms, 3ms] count bracket and the value bracket; only meaningful for m <= s.
bool census_within_bounds(const CircleGrid& g, const GridCensus& c);

struct OrthogonalCensus {
  std::int64_t count = 0;
};

// P = {(sqrt(i), 0)}, Q = {(0, sqrt(j))}: squared distances i + j.
OrthogonalCensus orthogonal_pair(std::int64_t m, std::int64_t n);

enum class Regime { Single, SmallM, Middle, Large };
enum class BoundFormula { One, SqrtMN, SqrtMNOverLogN, MSquared, NOverSqrtLogN };

struct BoundsRow {
  Regime regime;
  BoundFormula lower;
  BoundFormula upper;
};

// Known upper/lower bound formulas for D(m, n), by range of m (1 <= m <= n).
BoundsRow bounds_table(std::int64_t m, std::int64_t n);

std::string_view regime_name(Regime r);
std::string_view formula_name(BoundFormula f);

}  // namespace ddist
