#pragma once
#include <gmpxx.h>
#include <Eigen/Core>
#include <stdexcept>
#include <string>

namespace ga {

using BigInt = mpz_class;
using BigRational = mpq_class;

// "p/q" or "p"
std::string rat_str(const BigRational& q);
BigRational make_rat(const BigInt& num, const BigInt& den);

struct Error : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct BudgetExceeded : Error {
  using Error::Error;
};

}  // namespace ga

namespace Eigen {
template <>
struct NumTraits<mpq_class> : GenericNumTraits<mpq_class> {
  typedef mpq_class Real;
  typedef mpq_class NonInteger;
  typedef mpq_class Nested;
  typedef mpq_class Literal;
  enum {
    IsInteger = 0,
    IsSigned = 1,
    IsComplex = 0,
    RequireInitialization = 1,
    ReadCost = 6,
    AddCost = 150,
    MulCost = 100
  };
  static inline Real epsilon() { return 0; }
  static inline Real dummy_precision() { return 0; }
  static inline int digits10() { return 0; }
};
}  // namespace Eigen
