#pragma once

#include <cstddef>
#include <vector>

#include "ddist/rat.hpp"

namespace ddist {

// Dense row-major matrix of exact rationals.
class RatMatrix {
 public:
  RatMatrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  Rat& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Rat& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

 private:
  std::size_t rows_;
  std::size_t cols_;
  std::vector<Rat> data_;
};

// Reduced row echelon form in place; returns the pivot column of each pivot row.
std::vector<std::size_t> rref(RatMatrix& m);

std::size_t rank(RatMatrix m);

// Basis of {x : m x = 0}, one vector per free column.
std::vector<std::vector<Rat>> nullspace(RatMatrix m);

struct Inertia {
  int positive = 0;
  int negative = 0;
  int zero = 0;
  int rank() const { return positive + negative; }
};

// Sylvester inertia of a symmetric matrix via exact symmetric pivoting.
Inertia inertia(RatMatrix sym);

}  // namespace ddist
