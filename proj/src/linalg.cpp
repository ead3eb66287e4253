#include "linalg.hpp"

namespace mg {

namespace {

// Row-wise denominator clearing: returns integer matrices [A'|B'] with
// A' x = B' equivalent to A x = B row by row.
struct IntAug {
  int n, m;
  std::vector<Int> a;  // n x (n+m), row major
  Int& at(int i, int j) { return a[static_cast<std::size_t>(i) * (n + m) + j]; }
};

IntAug integerize(const Mat& a, const Mat& b) {
  const int n = a.rows(), m = b.cols();
  IntAug out{n, m, std::vector<Int>(static_cast<std::size_t>(n) * (n + m))};
  for (int i = 0; i < n; ++i) {
    Int lcm = 1;
    for (int j = 0; j < n; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), a(i, j).get_den().get_mpz_t());
    for (int j = 0; j < m; ++j) mpz_lcm(lcm.get_mpz_t(), lcm.get_mpz_t(), b(i, j).get_den().get_mpz_t());
    for (int j = 0; j < n; ++j) out.at(i, j) = a(i, j).get_num() * (lcm / a(i, j).get_den());
    for (int j = 0; j < m; ++j) out.at(i, n + j) = b(i, j).get_num() * (lcm / b(i, j).get_den());
  }
  return out;
}

}  // namespace

Mat bareiss_solve(const Mat& a, const Mat& b) {
  const int n = a.rows(), m = b.cols();
  if (a.cols() != n || b.rows() != n) throw SolverInconsistency("bareiss_solve: shape mismatch");
  if (n == 0) return Mat(0, m);
  IntAug s = integerize(a, b);
  const int w = n + m;

  Int prev = 1;
  for (int k = 0; k < n; ++k) {
    // pivot: first row with nonzero entry in column k
    int piv = -1;
    for (int i = k; i < n; ++i)
      if (s.at(i, k) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw SolverInconsistency("bareiss_solve: singular matrix");
    if (piv != k)
      for (int j = 0; j < w; ++j) std::swap(s.at(piv, j), s.at(k, j));
    for (int i = k + 1; i < n; ++i) {
      for (int j = k + 1; j < w; ++j) {
        Int t = s.at(i, j) * s.at(k, k) - s.at(i, k) * s.at(k, j);
        mpz_divexact(s.at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      s.at(i, k) = 0;
    }
    prev = s.at(k, k);
  }

  // exact rational back substitution on the integer triangle
  Mat x(n, m);
  for (int c = 0; c < m; ++c) {
    for (int i = n - 1; i >= 0; --i) {
      Rat sum(s.at(i, n + c));
      for (int j = i + 1; j < n; ++j) sum -= Rat(s.at(i, j)) * x(j, c);
      x(i, c) = sum / Rat(s.at(i, i));
    }
  }
  return x;
}

Mat exact_inverse(const Mat& a) {
  const int n = a.rows();
  Mat id(n, n);
  for (int i = 0; i < n; ++i) id(i, i) = 1;
  return bareiss_solve(a, id);
}

std::vector<Rat> solve_unique(const Mat& a, const std::vector<Rat>& b) {
  const int rows = a.rows(), cols = a.cols();
  if (static_cast<int>(b.size()) != rows) throw SolverInconsistency("solve_unique: shape mismatch");
  if (rows < cols) throw SolverInconsistency("solve_unique: underdetermined system");

  Mat s(rows, cols + 1);
  for (int i = 0; i < rows; ++i) {
    for (int j = 0; j < cols; ++j) s(i, j) = a(i, j);
    s(i, cols) = b[i];
  }

  int rank = 0;
  for (int col = 0; col < cols && rank < rows; ++col) {
    int piv = -1;
    for (int i = rank; i < rows; ++i)
      if (s(i, col) != 0) {
        piv = i;
        break;
      }
    if (piv < 0) throw SolverInconsistency("solve_unique: rank-deficient system (uniqueness lost)");
    if (piv != rank)
      for (int j = col; j <= cols; ++j) std::swap(s(piv, j), s(rank, j));
    Rat inv = 1 / s(rank, col);
    for (int j = col; j <= cols; ++j) s(rank, j) *= inv;
    for (int i = 0; i < rows; ++i) {
      if (i == rank || s(i, col) == 0) continue;
      Rat f = s(i, col);
      for (int j = col; j <= cols; ++j) s(i, j) -= f * s(rank, j);
    }
    ++rank;
  }
  // all pivots found; remaining rows must have vanished entirely
  for (int i = rank; i < rows; ++i)
    if (s(i, cols) != 0) throw SolverInconsistency("solve_unique: inconsistent system");

  std::vector<Rat> x(cols);
  for (int i = 0; i < cols; ++i) x[i] = s(i, cols);
  return x;
}

}  // namespace mg
