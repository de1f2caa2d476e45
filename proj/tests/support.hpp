#pragma once

// Random generators and brute-force oracles shared by the test binaries.
// Oracles deliberately avoid the library's own counting shortcuts.

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <map>
#include <random>
#include <set>
#include <unordered_set>
#include <vector>

#include "ddist/distance_stats.hpp"
#include "ddist/geometry.hpp"

namespace ddist::testing {

class Gen {
 public:
  explicit Gen(std::uint64_t seed) : rng_(seed) {}

  std::int64_t range(std::int64_t lo, std::int64_t hi) {
    return lo + static_cast<std::int64_t>(rng_() % static_cast<std::uint64_t>(hi - lo + 1));
  }
  bool coin() { return (rng_() & 1U) != 0; }

  Rat rat(std::int64_t max_abs = 6, std::int64_t max_den = 3) {
    const std::int64_t den = range(1, max_den);
    return Rat(range(-max_abs * den, max_abs * den), den);
  }
  Pt2 pt(std::int64_t max_abs = 6, std::int64_t max_den = 3) { return {rat(max_abs, max_den), rat(max_abs, max_den)}; }
  Pt2 int_pt(std::int64_t max_abs) { return {Rat(range(-max_abs, max_abs)), Rat(range(-max_abs, max_abs))}; }

  // Distinct points, disjoint from `avoid`, which is extended.
  std::vector<Pt2> distinct(std::size_t count, std::unordered_set<Pt2, Pt2Hash>& avoid, std::int64_t max_abs,
                            std::int64_t max_den) {
    std::vector<Pt2> out;
    while (out.size() < count) {
      Pt2 p = pt(max_abs, max_den);
      if (avoid.insert(p).second) out.push_back(p);
    }
    return out;
  }

  // Mix of small integer grids (many repeated distances) and rational points.
  PointSetPair point_set(std::size_t m, std::size_t n) {
    std::unordered_set<Pt2, Pt2Hash> used;
    const bool integral = coin();
    const std::int64_t max_abs = integral ? 3 : 5;
    const std::int64_t max_den = integral ? 1 : 2;
    auto P = distinct(m, used, max_abs, max_den);
    auto Q = distinct(n, used, max_abs, max_den);
    return make_point_set_pair(std::move(P), std::move(Q));
  }

  std::mt19937_64& engine() { return rng_; }

 private:
  std::mt19937_64 rng_;
};

struct QuadrupleCounts {
  std::int64_t total = 0;
  std::int64_t trans = 0;
};

// Direct enumeration of (p1, q1, p2, q2) with |p1 q1| = |p2 q2| != 0. The
// quadruple is a translation one when q2 - p1 = p2 - q1.
inline QuadrupleCounts quadruple_oracle(const PointSetPair& pp) {
  QuadrupleCounts c;
  for (const auto& p1 : pp.P) {
    for (const auto& q1 : pp.Q) {
      const Rat d = sqdist2(p1, q1);
      if (d.is_zero()) continue;
      for (const auto& p2 : pp.P) {
        for (const auto& q2 : pp.Q) {
          if (sqdist2(p2, q2) != d) continue;
          ++c.total;
          if (q2 - p1 == p2 - q1) ++c.trans;
        }
      }
    }
  }
  return c;
}

// Number of lines with at least r points: each line is counted once, from
// the pair of its two smallest indices.
inline std::int64_t rich_lines_oracle(const std::vector<Pt2>& pts, std::int64_t r) {
  auto orient = [](const Pt2& a, const Pt2& b, const Pt2& c) { return cross(b - a, c - a); };
  std::int64_t count = 0;
  for (std::size_t i = 0; i < pts.size(); ++i) {
    for (std::size_t j = i + 1; j < pts.size(); ++j) {
      bool first = true;
      std::int64_t on = 2;
      for (std::size_t k = 0; k < pts.size(); ++k) {
        if (k == i || k == j || !orient(pts[i], pts[j], pts[k]).is_zero()) continue;
        if (k < j) {
          first = false;
          break;
        }
        ++on;
      }
      if (first && on >= r) ++count;
    }
  }
  return count;
}

// Multiplicity of each pair of Q indices: circles about some p (three or more
// points of Q at equal distance) on which the two are neighbours, using
// floating-point angles. Only valid for well-separated small inputs.
inline std::map<std::pair<std::size_t, std::size_t>, std::int64_t> consecutive_recount(const PointSetPair& pp) {
  std::map<std::pair<std::size_t, std::size_t>, std::int64_t> out;
  for (const auto& p : pp.P) {
    std::map<Rat, std::vector<std::pair<double, std::size_t>>> rings;
    for (std::size_t q = 0; q < pp.Q.size(); ++q) {
      const double dx = (pp.Q[q].x - p.x).to_double();
      const double dy = (pp.Q[q].y - p.y).to_double();
      double a = std::atan2(dy, dx);
      if (a < 0) a += 2 * M_PI;
      rings[sqdist2(p, pp.Q[q])].emplace_back(a, q);
    }
    for (auto& [r2, ring] : rings) {
      if (ring.size() < 3) continue;
      std::sort(ring.begin(), ring.end());
      for (std::size_t i = 0; i < ring.size(); ++i) {
        std::size_t u = ring[i].second;
        std::size_t v = ring[(i + 1) % ring.size()].second;
        if (u > v) std::swap(u, v);
        ++out[{u, v}];
      }
    }
  }
  return out;
}

}  // namespace ddist::testing
