#pragma once
#include <map>
#include <memory>
#include <string>
#include <vector>

#include "ga/num.hpp"

namespace ga {

using Exponent = std::vector<int>;
using VarList = std::vector<std::string>;
using VarListPtr = std::shared_ptr<const VarList>;

VarListPtr make_vars(VarList names);

// Descending graded lexicographic order: higher total degree first, ties
// broken lexicographically with the first variable most significant.
struct GrlexDesc {
  bool operator()(const Exponent& a, const Exponent& b) const;
};

class LaurentPoly {
 public:
  using Terms = std::map<Exponent, BigInt, GrlexDesc>;

  LaurentPoly() = default;
  explicit LaurentPoly(VarListPtr vars) : vars_(std::move(vars)) {}

  static LaurentPoly constant(VarListPtr vars, const BigInt& c);
  static LaurentPoly variable(VarListPtr vars, std::size_t i);
  static LaurentPoly monomial(VarListPtr vars, Exponent e, const BigInt& c = 1);

  const VarListPtr& vars() const { return vars_; }
  std::size_t nvars() const { return vars_ ? vars_->size() : 0; }
  const Terms& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  bool is_monomial() const { return terms_.size() == 1; }
  bool is_polynomial() const;

  // per-variable minimum exponent over all terms (zero polynomial: all 0)
  Exponent min_exponents() const;
  // multiply by the monomial x^shift
  LaurentPoly shifted(const Exponent& shift) const;

  LaurentPoly operator-() const;
  LaurentPoly& operator+=(const LaurentPoly& o);
  LaurentPoly& operator-=(const LaurentPoly& o);
  friend LaurentPoly operator+(LaurentPoly a, const LaurentPoly& b) { return a += b; }
  friend LaurentPoly operator-(LaurentPoly a, const LaurentPoly& b) { return a -= b; }
  friend LaurentPoly operator*(const LaurentPoly& a, const LaurentPoly& b);
  LaurentPoly pow(unsigned k) const;

  bool operator==(const LaurentPoly& o) const;
  bool operator!=(const LaurentPoly& o) const { return !(*this == o); }

  // canonical text, e.g. "x + y + 1", "2*x^2*y^-1 - z"
  std::string str() const;
  // numerator over monomial denominator, e.g. "(x + y + 1)/(x*y)"
  std::string fraction_str() const;

  bool coefficients_positive() const;
  BigRational evaluate(const std::vector<BigRational>& point) const;
  LaurentPoly derivative(std::size_t var) const;

  void add_term(const Exponent& e, const BigInt& c);

 private:
  void check_same(const LaurentPoly& o) const;
  VarListPtr vars_;
  Terms terms_;
};

enum class ArithOp { add, sub, mul };
LaurentPoly laurent_arith(const LaurentPoly& a, const LaurentPoly& b, ArithOp op);

struct NonExactDivision : Error {
  NonExactDivision(const std::string& what, LaurentPoly rem)
      : Error(what), remainder(std::move(rem)) {}
  LaurentPoly remainder;
};

// q with q*den == num; throws NonExactDivision otherwise
LaurentPoly laurent_exact_div(const LaurentPoly& num, const LaurentPoly& den);

// replace variable i of p by images[i]; all images share one variable list
LaurentPoly substitute(const LaurentPoly& p, const std::vector<LaurentPoly>& images);

}  // namespace ga
