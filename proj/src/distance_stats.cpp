#include "ddist/distance_stats.hpp"

#include <set>
#include <sstream>
#include <unordered_set>

#include "ddist/error.hpp"

namespace ddist {

void validate(const PointSetPair& pp) {
  std::unordered_set<Pt2, Pt2Hash> seen_p;
  for (std::size_t i = 0; i < pp.P.size(); ++i) {
    if (!seen_p.insert(pp.P[i]).second) {
      std::ostringstream os;
      os << "duplicate point " << pp.P[i] << " in P (index " << i << ")";
      throw Error(ErrorKind::Validation, os.str());
    }
  }
  std::unordered_set<Pt2, Pt2Hash> seen_q;
  for (std::size_t i = 0; i < pp.Q.size(); ++i) {
    if (!seen_q.insert(pp.Q[i]).second) {
      std::ostringstream os;
      os << "duplicate point " << pp.Q[i] << " in Q (index " << i << ")";
      throw Error(ErrorKind::Validation, os.str());
    }
    if (seen_p.count(pp.Q[i]) != 0) {
      std::ostringstream os;
      os << "point " << pp.Q[i] << " lies in both P and Q";
      throw Error(ErrorKind::Validation, os.str());
    }
  }
}

PointSetPair make_point_set_pair(std::vector<Pt2> P, std::vector<Pt2> Q) {
  PointSetPair pp{std::move(P), std::move(Q)};
  validate(pp);
  return pp;
}

DistinctDistances distinct_distances(const PointSetPair& pp) {
  DistinctDistances out;
  for (const auto& p : pp.P) {
    for (const auto& q : pp.Q) ++out.histogram[sqdist2(p, q)];
  }
  out.count = static_cast<std::int64_t>(out.histogram.size());
  return out;
}

EnergyReport distance_energy(const PointSetPair& pp) {
  EnergyReport rep;
  rep.histogram = distinct_distances(pp).histogram;
  for (const auto& [d2, count] : rep.histogram) {
    if (!d2.is_zero()) rep.total += count * count;
  }
  // (p1, q1, p2) determines the translation q1 -> p2, hence q2 = p1 + p2 - q1.
  const std::unordered_set<Pt2, Pt2Hash> qset(pp.Q.begin(), pp.Q.end());
  for (const auto& p1 : pp.P) {
    for (const auto& q1 : pp.Q) {
      if (p1 == q1) continue;
      for (const auto& p2 : pp.P) {
        if (qset.count(p1 + p2 - q1) != 0) ++rep.trans;
      }
    }
  }
  rep.rot = rep.total - rep.trans;
  return rep;
}

Rat cs_lower_bound(const EnergyReport& rep, std::int64_t m, std::int64_t n) {
  if (rep.total <= 0) throw Error(ErrorKind::EmptyEnergy, "cs_lower_bound: empty distance energy");
  const Rat mn(m * n);
  return mn * mn / Rat(rep.total);
}

MaxPointDistances max_point_distances(const PointSetPair& pp) {
  MaxPointDistances out;
  for (std::size_t i = 0; i < pp.P.size(); ++i) {
    std::set<Rat> dists;
    for (const auto& q : pp.Q) dists.insert(sqdist2(pp.P[i], q));
    const auto t = static_cast<std::int64_t>(dists.size());
    if (i == 0 || t > out.t) {
      out.t = t;
      out.witness = pp.P[i];
      out.witness_index = i;
    }
  }
  return out;
}

}  // namespace ddist
