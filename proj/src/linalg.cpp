#include "ga/linalg.hpp"

#include <utility>

namespace ga {

namespace {

using ZMatrix = Matrix<BigInt>;

// clear denominators row by row
ZMatrix integer_rows(const RationalMatrix& a) {
  ZMatrix z(a.rows(), a.cols());
  for (Eigen::Index i = 0; i < a.rows(); ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < a.cols(); ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    for (Eigen::Index j = 0; j < a.cols(); ++j) z(i, j) = a(i, j).get_num() * (l / a(i, j).get_den());
  }
  return z;
}

struct Echelon {
  ZMatrix m;
  std::vector<Eigen::Index> pivot_cols;
  int swaps = 0;
};

// Bareiss elimination to row echelon form; every division is exact
Echelon bareiss(ZMatrix m) {
  Echelon out;
  BigInt prev = 1;
  Eigen::Index r = 0;
  for (Eigen::Index c = 0; c < m.cols() && r < m.rows(); ++c) {
    Eigen::Index p = r;
    while (p < m.rows() && m(p, c) == 0) ++p;
    if (p == m.rows()) continue;
    if (p != r) {
      m.row(p).swap(m.row(r));
      ++out.swaps;
    }
    for (Eigen::Index i = r + 1; i < m.rows(); ++i) {
      for (Eigen::Index j = c + 1; j < m.cols(); ++j) {
        BigInt t = m(r, c) * m(i, j) - m(i, c) * m(r, j);
        mpz_divexact(m(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
      }
      m(i, c) = 0;
    }
    prev = m(r, c);
    out.pivot_cols.push_back(c);
    ++r;
  }
  out.m = std::move(m);
  return out;
}

}  // namespace

int matrix_rank(const RationalMatrix& a) {
  if (a.size() == 0) return 0;
  return static_cast<int>(bareiss(integer_rows(a)).pivot_cols.size());
}

BigRational determinant(const RationalMatrix& a) {
  if (a.rows() != a.cols()) throw Error("determinant of non-square matrix");
  Eigen::Index n = a.rows();
  if (n == 0) return 1;
  BigRational scale = 1;
  for (Eigen::Index i = 0; i < n; ++i) {
    BigInt l = 1;
    for (Eigen::Index j = 0; j < n; ++j) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), a(i, j).get_den_mpz_t());
    scale *= l;
  }
  Echelon e = bareiss(integer_rows(a));
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n) return 0;
  BigRational d = BigRational(e.m(n - 1, n - 1)) / scale;
  return e.swaps % 2 ? BigRational(-d) : d;
}

RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b) {
  Eigen::Index n = a.rows();
  if (a.cols() != n || b.size() != n) throw Error("solve_linear: shape mismatch");
  RationalMatrix aug(n, n + 1);
  aug.leftCols(n) = a;
  aug.col(n) = b;
  Echelon e = bareiss(integer_rows(aug));
  if (static_cast<Eigen::Index>(e.pivot_cols.size()) < n || e.pivot_cols[n - 1] != n - 1)
    throw SingularMatrix("solve_linear: singular matrix");
  RationalVector x(n);
  for (Eigen::Index i = n - 1; i >= 0; --i) {
    BigRational s = BigRational(e.m(i, n));
    for (Eigen::Index j = i + 1; j < n; ++j) s -= BigRational(e.m(i, j)) * x(j);
    x(i) = s / BigRational(e.m(i, i));
  }
  return x;
}

RationalMatrix inverse(const RationalMatrix& a) {
  Eigen::Index n = a.rows();
  RationalMatrix inv(n, n);
  for (Eigen::Index j = 0; j < n; ++j) {
    RationalVector e = RationalVector::Constant(n, BigRational(0));
    e(j) = 1;
    inv.col(j) = solve_linear(a, e);
  }
  return inv;
}

}  // namespace ga
