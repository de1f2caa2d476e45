#include "ddist/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace ddist {

std::vector<std::size_t> rref(RatMatrix& m) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < m.cols() && row < m.rows(); ++col) {
    std::size_t sel = row;
    while (sel < m.rows() && m(sel, col).is_zero()) ++sel;
    if (sel == m.rows()) continue;
    if (sel != row) {
      for (std::size_t c = 0; c < m.cols(); ++c) std::swap(m(sel, c), m(row, c));
    }
    const Rat inv = Rat(1) / m(row, col);
    for (std::size_t c = col; c < m.cols(); ++c) m(row, c) *= inv;
    for (std::size_t r = 0; r < m.rows(); ++r) {
      if (r == row || m(r, col).is_zero()) continue;
      const Rat f = m(r, col);
      for (std::size_t c = col; c < m.cols(); ++c) m(r, c) -= f * m(row, c);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

std::size_t rank(RatMatrix m) { return rref(m).size(); }

std::vector<std::vector<Rat>> nullspace(RatMatrix m) {
  const auto pivots = rref(m);
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto c : pivots) is_pivot[c] = true;
  std::vector<std::vector<Rat>> basis;
  for (std::size_t free = 0; free < m.cols(); ++free) {
    if (is_pivot[free]) continue;
    std::vector<Rat> v(m.cols(), Rat(0));
    v[free] = Rat(1);
    for (std::size_t r = 0; r < pivots.size(); ++r) v[pivots[r]] = -m(r, free);
    basis.push_back(std::move(v));
  }
  return basis;
}

Inertia inertia(RatMatrix a) {
  if (a.rows() != a.cols()) throw std::invalid_argument("inertia: matrix not square");
  const std::size_t n = a.rows();
  Inertia out;
  std::vector<bool> done(n, false);
  std::size_t remaining = n;
  while (remaining > 0) {
    // Prefer a nonzero diagonal pivot.
    std::size_t k = n;
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && !a(i, i).is_zero()) { k = i; break; }
    }
    if (k == n) {
      // All remaining diagonals vanish: find an off-diagonal entry and apply
      // the congruence row_i += row_j, col_i += col_j to make a(i,i) = 2 a(i,j).
      std::size_t pi = n;
      std::size_t pj = n;
      for (std::size_t i = 0; i < n && pi == n; ++i) {
        if (done[i]) continue;
        for (std::size_t j = 0; j < n; ++j) {
          if (j != i && !done[j] && !a(i, j).is_zero()) { pi = i; pj = j; break; }
        }
      }
      if (pi == n) {
        out.zero += static_cast<int>(remaining);
        break;
      }
      for (std::size_t c = 0; c < n; ++c) a(pi, c) += a(pj, c);
      for (std::size_t r = 0; r < n; ++r) a(r, pi) += a(r, pj);
      k = pi;
    }
    const Rat piv = a(k, k);
    if (piv.sign() > 0) ++out.positive; else ++out.negative;
    // Schur complement on the untouched indices.
    for (std::size_t i = 0; i < n; ++i) {
      if (done[i] || i == k || a(i, k).is_zero()) continue;
      const Rat f = a(i, k) / piv;
      for (std::size_t j = 0; j < n; ++j) {
        if (done[j]) continue;
        a(i, j) -= f * a(k, j);
      }
    }
    for (std::size_t j = 0; j < n; ++j) {
      if (!done[j] && j != k) a(k, j) = Rat(0);
    }
    for (std::size_t i = 0; i < n; ++i) {
      if (!done[i] && i != k) a(i, k) = Rat(0);
    }
    done[k] = true;
    --remaining;
  }
  return out;
}

}  // namespace ddist
