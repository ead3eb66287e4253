#pragma once

// Exact dense linear algebra over the rationals. Square systems go through
// fraction-free (Bareiss) elimination on a row-integerized copy; the
// overdetermined solver is plain rational elimination with exact consistency
// and uniqueness checks.

#include "graph.hpp"
#include "rational.hpp"

#include <vector>

namespace mg {

class Mat {
 public:
  Mat() = default;
  Mat(int rows, int cols) : rows_(rows), cols_(cols), data_(static_cast<std::size_t>(rows) * cols) {}

  int rows() const { return rows_; }
  int cols() const { return cols_; }
  Rat& operator()(int i, int j) { return data_[static_cast<std::size_t>(i) * cols_ + j]; }
  const Rat& operator()(int i, int j) const { return data_[static_cast<std::size_t>(i) * cols_ + j]; }

 private:
  int rows_ = 0, cols_ = 0;
  std::vector<Rat> data_;
};

// Solves A X = B for square nonsingular A (throws SolverInconsistency on a
// zero pivot column, i.e. singular A).
Mat bareiss_solve(const Mat& a, const Mat& b);

// A^(-1) for square nonsingular A.
Mat exact_inverse(const Mat& a);

// Solves A x = b exactly for A with rows >= cols. Throws SolverInconsistency
// if the system is inconsistent or the solution is not unique.
std::vector<Rat> solve_unique(const Mat& a, const std::vector<Rat>& b);

}  // namespace mg
