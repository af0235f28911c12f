#pragma once
#include <Eigen/Core>
#include <vector>

#include "ga/num.hpp"

namespace ga {

template <typename Scalar>
using Matrix = Eigen::Matrix<Scalar, Eigen::Dynamic, Eigen::Dynamic>;
template <typename Scalar>
using Vector = Eigen::Matrix<Scalar, Eigen::Dynamic, 1>;

using IntMatrix = Matrix<long long>;
using IntVector = Vector<long long>;
using RationalMatrix = Matrix<BigRational>;
using RationalVector = Vector<BigRational>;

struct SingularMatrix : Error {
  using Error::Error;
};

template <typename Scalar>
RationalMatrix to_rational(const Matrix<Scalar>& m) {
  RationalMatrix r(m.rows(), m.cols());
  for (Eigen::Index i = 0; i < m.rows(); ++i)
    for (Eigen::Index j = 0; j < m.cols(); ++j) r(i, j) = BigRational(static_cast<long>(m(i, j)));
  return r;
}

// fraction-free (Bareiss) elimination throughout
RationalVector solve_linear(const RationalMatrix& a, const RationalVector& b);
int matrix_rank(const RationalMatrix& a);
BigRational determinant(const RationalMatrix& a);
RationalMatrix inverse(const RationalMatrix& a);

template <typename Scalar>
int matrix_rank(const Matrix<Scalar>& a) {
  return matrix_rank(to_rational(a));
}

}  // namespace ga
