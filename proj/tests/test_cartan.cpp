#include <doctest.h>

#include <algorithm>
#include <numeric>
#include <random>
#include <set>

#include "ga/cartan.hpp"

using namespace ga;

namespace {

IntMatrix mat(std::initializer_list<std::initializer_list<long long>> rows) {
  IntMatrix m(rows.size(), rows.begin()->size());
  int i = 0;
  for (auto r : rows) {
    int j = 0;
    for (auto x : r) m(i, j++) = x;
    ++i;
  }
  return m;
}

IntMatrix permuted(const IntMatrix& a, const std::vector<int>& p) {
  IntMatrix b(a.rows(), a.cols());
  for (int i = 0; i < a.rows(); ++i)
    for (int j = 0; j < a.cols(); ++j) b(i, j) = a(p[i], p[j]);
  return b;
}

}  // namespace

TEST_CASE("built-in table classifies to itself") {
  for (char f : std::string("ABCDEFG"))
    for (int r = 1; r <= 8; ++r) {
      if (!valid_family_rank(f, r)) continue;
      auto a = standard_cartan(f, r);
      auto fc = validate_finite_type(a.matrix());
      CHECK(fc.finite);
      CHECK(classify(a).str() == std::string(1, f) + std::to_string(r));
    }
}

TEST_CASE("type names and small-rank coincidences") {
  CHECK(parse_type_name("A1+A1").str() == "A1+A1");
  CHECK_FALSE(parse_type_name("A1+A1").irreducible());
  CHECK(standard_cartan(parse_type_name("A1+A1")).matrix() == mat({{2, 0}, {0, 2}}));
  CHECK_FALSE(valid_family_rank('D', 3));
  CHECK_FALSE(valid_family_rank('E', 9));
  CHECK_FALSE(valid_family_rank('F', 5));
  CHECK(valid_family_rank('B', 2));
  CHECK_THROWS_AS(parse_type_name("X3"), Error);
  CHECK(parse_cartan("A3").matrix() == parse_cartan("type:A3").matrix());
  CHECK(parse_cartan("matrix:[[2,-1,0],[-1,2,-1],[0,-1,2]]").matrix() == standard_cartan('A', 3).matrix());
  CHECK_THROWS_AS(parse_cartan("matrix:[[2,-1],[0,2]]"), Error);
  CHECK(parse_cartan(cartan_text(standard_cartan('F', 4))).matrix() == standard_cartan('F', 4).matrix());
}

TEST_CASE("infinite and malformed matrices are rejected") {
  CHECK_FALSE(validate_finite_type(mat({{2, -2}, {-2, 2}})).finite);
  CHECK_FALSE(validate_finite_type(mat({{2, -1}, {-4, 2}})).finite);
  CHECK_FALSE(validate_finite_type(mat({{2, -1, -1}, {-1, 2, -1}, {-1, -1, 2}})).finite);
  // D4 with an extra leaf is affine
  CHECK_FALSE(validate_finite_type(mat({{2, 0, -1, 0, 0}, {0, 2, -1, 0, 0}, {-1, -1, 2, -1, -1},
                                        {0, 0, -1, 2, 0}, {0, 0, -1, 0, 2}}))
                  .finite);
  // not symmetrizable: the cycle product condition fails
  CHECK_THROWS_AS(validate_finite_type(mat({{2, -1, -1}, {-2, 2, -1}, {-1, -1, 2}})), NotSymmetrizable);
  CHECK_THROWS_AS(CartanMatrix(mat({{2, 1}, {-1, 2}})), NotCartanShape);
  CHECK_THROWS_AS(CartanMatrix(mat({{2, -1}, {0, 2}})), NotCartanShape);
}

TEST_CASE("rank-2 finite matrices") {
  int accepted = 0;
  std::set<std::string> names;
  for (int b = -3; b <= 0; ++b)
    for (int c = -3; c <= 0; ++c) {
      if ((b == 0) != (c == 0)) continue;
      auto fc = validate_finite_type(mat({{2, b}, {c, 2}}));
      if (!fc.finite) continue;
      ++accepted;
      names.insert(classify(CartanMatrix(mat({{2, b}, {c, 2}}))).str());
    }
  // the four printed matrices, and the transposes of the two non-symmetric ones
  CHECK(accepted == 6);
  CHECK(names == std::set<std::string>{"A1+A1", "A2", "B2", "G2"});
  auto g2 = validate_finite_type(mat({{2, -3}, {-1, 2}}));
  CHECK(*g2.symmetrizer == std::vector<long long>{1, 3});
}

TEST_CASE("classification is invariant under relabeling") {
  std::mt19937 rng(3);
  for (std::string t : {"A4", "B4", "C4", "D5", "E6", "F4", "G2", "B2", "D4"}) {
    auto a = parse_cartan("type:" + t).matrix();
    std::vector<int> p(a.rows());
    std::iota(p.begin(), p.end(), 0);
    for (int trial = 0; trial < 5; ++trial) {
      std::shuffle(p.begin(), p.end(), rng);
      CHECK(classify(CartanMatrix(permuted(a, p))).str() == t);
    }
  }
  auto two = mat({{2, 0, 0}, {0, 2, -1}, {0, -1, 2}});
  CHECK(classify(CartanMatrix(two)).str() == "A1+A2");
}

TEST_CASE("symmetrizer and bipartition") {
  auto b3 = standard_cartan('B', 3);
  auto d = symmetrizer(b3);
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) CHECK(d[i] * b3(i, j) == d[j] * b3(j, i));
  CHECK(*std::min_element(d.begin(), d.end()) == 1);
  auto bp = bipartition(standard_cartan('A', 4));
  CHECK(bp.plus == std::vector<int>{0, 2});
  CHECK(bp.minus == std::vector<int>{1, 3});
  auto b = b_of_a(standard_cartan('A', 4), bp);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) CHECK(b(i, j) == -b(j, i));
}
