#include <doctest.h>

#include <random>

#include "ga/laurent.hpp"
#include "ga/linalg.hpp"

using namespace ga;

namespace {

LaurentPoly random_poly(const VarListPtr& v, std::mt19937& rng, int terms, int lo, int hi) {
  std::uniform_int_distribution<int> ex(lo, hi), co(-5, 5);
  LaurentPoly p(v);
  for (int t = 0; t < terms; ++t) {
    Exponent e(v->size());
    for (auto& x : e) x = ex(rng);
    p.add_term(e, co(rng));
  }
  return p;
}

}  // namespace

TEST_CASE("canonical text") {
  auto v = make_vars({"x", "y", "z"});
  auto x = LaurentPoly::variable(v, 0), y = LaurentPoly::variable(v, 1), z = LaurentPoly::variable(v, 2);
  auto one = LaurentPoly::constant(v, 1);
  CHECK((x + y + one).str() == "x + y + 1");
  CHECK((one + y + x).str() == "x + y + 1");
  auto e = LaurentPoly::monomial(v, {2, -1, 0}, 2) - z;
  CHECK(e.str() == "2*x^2*y^-1 - z");
  CHECK(LaurentPoly(v).str() == "0");
  CHECK(laurent_exact_div(x + y + one, x * y).fraction_str() == "(x + y + 1)/(x*y)");
  CHECK(laurent_exact_div(y + one, x).fraction_str() == "(y + 1)/x");
  CHECK(x.fraction_str() == "x");
}

TEST_CASE("exact division") {
  auto v = make_vars({"x", "y"});
  auto x = LaurentPoly::variable(v, 0), y = LaurentPoly::variable(v, 1);
  auto one = LaurentPoly::constant(v, 1);
  CHECK(laurent_exact_div(x * y + y, y) == x + one);
  CHECK(laurent_exact_div(x * x - one, x - one) == x + one);
  CHECK(laurent_exact_div((x + y).pow(5), x + y) == (x + y).pow(4));
  bool thrown = false;
  try {
    laurent_exact_div(x + one, x - one);
  } catch (const NonExactDivision& e) {
    thrown = true;
    CHECK_FALSE(e.remainder.is_zero());
  }
  CHECK(thrown);
  CHECK_THROWS_AS(laurent_exact_div(x, LaurentPoly(v)), Error);
}

TEST_CASE("division inverts multiplication on random Laurent polynomials") {
  auto v = make_vars({"a", "b", "c"});
  std::mt19937 rng(11);
  for (int trial = 0; trial < 60; ++trial) {
    auto p = random_poly(v, rng, 6, -2, 3);
    auto q = random_poly(v, rng, 4, -1, 2);
    if (q.is_zero()) continue;
    CHECK(laurent_exact_div(p * q, q) == p);
    auto r = random_poly(v, rng, 3, -1, 1);
    CHECK(p * (q + r) == p * q + p * r);
    CHECK((p - p).is_zero());
  }
}

TEST_CASE("substitution and evaluation agree") {
  auto v = make_vars({"x", "y"});
  auto x = LaurentPoly::variable(v, 0), y = LaurentPoly::variable(v, 1);
  auto one = LaurentPoly::constant(v, 1);
  auto f = laurent_exact_div(x + y + one, x * y);
  // x -> y, y -> (y+1)/x shifts the pentagon sequence by one
  auto g = substitute(f, {y, laurent_exact_div(y + one, x)});
  CHECK(g == laurent_exact_div(x + one, y));
  std::vector<BigRational> pt{BigRational(2), BigRational(3)};
  CHECK(f.evaluate(pt) == BigRational(1));
  CHECK(g.evaluate(pt) == BigRational(1));
  CHECK(f.derivative(0) == laurent_exact_div(-(y + one), x * x * y));
  CHECK(f.is_polynomial() == false);
  CHECK(f.coefficients_positive());
  CHECK_FALSE((x - y).coefficients_positive());
}

TEST_CASE("monomial order is graded then lexicographic") {
  GrlexDesc less;
  CHECK(less({2, 0}, {1, 0}));
  CHECK(less({1, 1}, {0, 1}));
  CHECK(less({1, 0}, {0, 1}));
  CHECK_FALSE(less({0, 1}, {1, 0}));
}

TEST_CASE("rational linear algebra") {
  RationalMatrix h(4, 4);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) h(i, j) = make_rat(1, i + j + 1);
  CHECK(determinant(h) == make_rat(1, 6048000));
  RationalMatrix inv = inverse(h);
  RationalMatrix id = h * inv;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(id(i, j) == BigRational(i == j ? 1 : 0));
  RationalVector b(4);
  for (int i = 0; i < 4; ++i) b(i) = i + 1;
  RationalVector x = solve_linear(h, b);
  RationalVector back = h * x;
  for (int i = 0; i < 4; ++i) CHECK(back(i) == b(i));
  IntMatrix m(3, 3);
  m << 1, 2, 3, 2, 4, 6, 1, 0, 1;
  CHECK(matrix_rank(m) == 2);
  CHECK(determinant(to_rational(m)) == 0);
  CHECK_THROWS_AS(inverse(to_rational(m)), SingularMatrix);
  CHECK(rat_str(make_rat(6, -4)) == "-3/2");
}
