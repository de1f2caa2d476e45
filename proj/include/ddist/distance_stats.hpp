#pragma once

#include <cstdint>
#include <map>
#include <vector>

#include "ddist/geometry.hpp"
#include "ddist/rat.hpp"

namespace ddist {

// Bipartite point configuration. Points are distinct within each side and
// the two sides are disjoint; make_point_set_pair enforces this.
struct PointSetPair {
  std::vector<Pt2> P;
  std::vector<Pt2> Q;

  std::int64_t m() const { return static_cast<std::int64_t>(P.size()); }
  std::int64_t n() const { return static_cast<std::int64_t>(Q.size()); }
};

// Throws Error(Validation) on duplicates within a side or a shared point.
PointSetPair make_point_set_pair(std::vector<Pt2> P, std::vector<Pt2> Q);
void validate(const PointSetPair& pp);

// squared distance -> number of (p, q) pairs realizing it
using DistanceHistogram = std::map<Rat, std::int64_t>;

struct DistinctDistances {
  std::int64_t count = 0;
  DistanceHistogram histogram;
};

DistinctDistances distinct_distances(const PointSetPair& pp);

struct EnergyReport {
  std::int64_t total = 0;  // |E(P,Q)| = sum of d_i^2
  std::int64_t trans = 0;  // quadruples whose rigid motion is a translation
  std::int64_t rot = 0;    // total - trans
  DistanceHistogram histogram;
};

EnergyReport distance_energy(const PointSetPair& pp);

// m^2 n^2 / |E|; lower bound on the number of distinct distances.
Rat cs_lower_bound(const EnergyReport& rep, std::int64_t m, std::int64_t n);

struct MaxPointDistances {
  std::int64_t t = 0;
  Pt2 witness;
  std::size_t witness_index = 0;
};

MaxPointDistances max_point_distances(const PointSetPair& pp);

}  // namespace ddist
