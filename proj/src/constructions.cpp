#include "ddist/constructions.hpp"

#include <algorithm>
#include <cmath>
#include <string>
#include <vector>

#include "ddist/error.hpp"

namespace ddist {

CircleGrid elekes_grid(std::int64_t m, std::int64_t s) {
  if (m < 2) throw Error(ErrorKind::InvalidParams, "elekes_grid: need m >= 2, got " + std::to_string(m));
  if (s < 1) throw Error(ErrorKind::InvalidParams, "elekes_grid: need s >= 1, got " + std::to_string(s));
  CircleGrid g;
  g.m = m;
  g.s = s;
  g.P.reserve(static_cast<std::size_t>(m));
  for (std::int64_t a = 1; a <= m; ++a) g.P.push_back(a);
  g.Q.reserve(static_cast<std::size_t>(m * s * s));
  for (std::int64_t i = 1; i <= s; ++i) {
    const std::int64_t lo = s * s + 1 - i * i;
    const std::int64_t hi = s * s + m * s - i * i;
    for (std::int64_t j = lo; j <= hi; ++j) g.Q.push_back({i, j});
  }
  return g;
}

std::int64_t grid_sqdist(std::int64_t a, const QuadPt& q) {
  return (a - q.i) * (a - q.i) + q.j;
}

GridCensus elekes_distance_census(const CircleGrid& g) {
  std::vector<std::int64_t> values;
  values.reserve(g.P.size() * g.Q.size());
  for (auto a : g.P) {
    for (const auto& q : g.Q) values.push_back(grid_sqdist(a, q));
  }
  if (values.empty()) return {};
  std::sort(values.begin(), values.end());
  values.erase(std::unique(values.begin(), values.end()), values.end());
  return {static_cast<std::int64_t>(values.size()), values.front(), values.back()};
}

GridValueBracket elekes_value_bracket(std::int64_t m, std::int64_t s) {
  return {m * m - 2 * m * s + s * s + 1, m * m - 2 * m + s * s + m * s};
}

bool census_within_bounds(const CircleGrid& g, const GridCensus& c) {
  const auto br = elekes_value_bracket(g.m, g.s);
  const std::int64_t ms = g.m * g.s;
  return c.count >= ms && c.count <= 3 * ms && c.min >= br.lo && c.max <= br.hi;
}

OrthogonalCensus orthogonal_pair(std::int64_t m, std::int64_t n) {
  if (m < 1 || n < 1) throw Error(ErrorKind::InvalidParams, "orthogonal_pair: need m, n >= 1");
  std::vector<bool> seen(static_cast<std::size_t>(m + n + 1), false);
  std::int64_t count = 0;
  for (std::int64_t i = 1; i <= m; ++i) {
    for (std::int64_t j = 1; j <= n; ++j) {
      const auto k = static_cast<std::size_t>(i + j);
      if (!seen[k]) {
        seen[k] = true;
        ++count;
      }
    }
  }
  return {count};
}

BoundsRow bounds_table(std::int64_t m, std::int64_t n) {
  if (m < 1 || m > n) throw Error(ErrorKind::InvalidParams, "bounds_table: need 1 <= m <= n");
  if (m == 1) return {Regime::Single, BoundFormula::One, BoundFormula::One};
  // m <= n^{1/3}  <=>  m^3 <= n, decided in integers.
  const __int128 m128 = m;
  if (m128 * m128 * m128 <= n) {
    return {Regime::SmallM, BoundFormula::SqrtMN, BoundFormula::SqrtMN};
  }
  // m <= n^{1/2} / log^{1/4} n  <=>  m^4 log n <= n^2 (natural log).
  const long double md = static_cast<long double>(m);
  const long double nd = static_cast<long double>(n);
  if (md * md * md * md * std::log(nd) <= nd * nd) {
    return {Regime::Middle, BoundFormula::SqrtMNOverLogN, BoundFormula::MSquared};
  }
  return {Regime::Large, BoundFormula::SqrtMNOverLogN, BoundFormula::NOverSqrtLogN};
}

std::string_view regime_name(Regime r) {
  switch (r) {
    case Regime::Single: return "m=1";
    case Regime::SmallM: return "2<=m<=n^(1/3)";
    case Regime::Middle: return "n^(1/3)<=m<=n^(1/2)/log^(1/4)n";
    case Regime::Large: return "n^(1/2)/log^(1/4)n<=m<=n";
  }
  return "";
}

std::string_view formula_name(BoundFormula f) {
  switch (f) {
    case BoundFormula::One: return "1";
    case BoundFormula::SqrtMN: return "sqrt(mn)";
    case BoundFormula::SqrtMNOverLogN: return "sqrt(mn)/log(n)";
    case BoundFormula::MSquared: return "m^2";
    case BoundFormula::NOverSqrtLogN: return "n/sqrt(log(n))";
  }
  return "";
}

}  // namespace ddist
