#include <doctest.h>

#include <numeric>
#include <set>

#include "ga/rootsys.hpp"

using namespace ga;

namespace {

RootSystem rs_of(const std::string& t) { return generate(parse_cartan("type:" + t)); }

std::set<Coords> positive_set(const RootSystem& rs) {
  std::set<Coords> s;
  for (int k = 0; k < rs.num_positive(); ++k) s.insert(rs.roots[k].coords);
  return s;
}

}  // namespace

TEST_CASE("rank-2 positive roots") {
  CHECK(positive_set(rs_of("G2")) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1}, {3, 1}, {3, 2}});
  CHECK(positive_set(rs_of("B2")) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}, {2, 1}});
  CHECK(positive_set(rs_of("A2")) == std::set<Coords>{{1, 0}, {0, 1}, {1, 1}});
  CHECK(rs_of("G2").size() == 12);
}

TEST_CASE("type A roots are the intervals e_i - e_j") {
  for (int n = 1; n <= 6; ++n) {
    std::set<Coords> want;
    for (int i = 0; i < n; ++i)
      for (int j = i; j < n; ++j) {
        Coords c(n, 0);
        for (int k = i; k <= j; ++k) c[k] = 1;
        want.insert(c);
      }
    CHECK(positive_set(rs_of("A" + std::to_string(n))) == want);
  }
}

TEST_CASE("type B and D root counts from the orthonormal model") {
  // B_n: e_i (n), e_i +- e_j (n(n-1)); D_n: e_i +- e_j
  for (int n = 2; n <= 6; ++n) CHECK(rs_of("B" + std::to_string(n)).num_positive() == n * n);
  for (int n = 4; n <= 7; ++n) CHECK(rs_of("D" + std::to_string(n)).num_positive() == n * (n - 1));
}

TEST_CASE("root system axioms hold") {
  for (std::string t : {"A4", "B3", "C4", "D5", "E6", "F4", "G2", "A1+A2"}) {
    auto rs = rs_of(t);
    CHECK(rs.size() == 2 * rs.num_positive());
    for (int k = 0; k < rs.size(); ++k) {
      const auto& c = rs.roots[k].coords;
      bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
      bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
      CHECK((nonneg != nonpos));
      CHECK(rs.roots[rs.neg(k)].coords == [&] {
        Coords m = c;
        for (auto& x : m) x = -x;
        return m;
      }());
      for (int i = 0; i < rs.n(); ++i) {
        int img = rs.sref(i, k);
        REQUIRE(img >= 0);
        CHECK(rs.roots[img].coords == simple_reflect(rs.cartan, i, c));
      }
      for (int j = 0; j < rs.size(); ++j) CHECK(rs.index(rs.reflect(rs.roots[j].coords, c)) >= 0);
    }
  }
}

TEST_CASE("exponent numerology") {
  for (std::string t : {"A5", "B4", "C3", "D4", "D6", "E6", "E7", "F4", "G2"}) {
    auto rs = rs_of(t);
    auto cd = coxeter_data(rs);
    CHECK(std::accumulate(cd.exponents.begin(), cd.exponents.end(), 0) == rs.num_positive());
    BigInt order = 1;
    for (int e : cd.exponents) order *= e + 1;
    CHECK(order == cd.group_order);
    CHECK(cd.h * rs.n() == 2 * rs.num_positive());
    // exponents are symmetric: e -> h - e
    for (std::size_t i = 0; i < cd.exponents.size(); ++i)
      CHECK(cd.exponents[i] + cd.exponents[cd.exponents.size() - 1 - i] == cd.h);
  }
  auto e8 = coxeter_data(rs_of("E8"));
  CHECK(e8.h == 30);
  CHECK(e8.group_order == BigInt("696729600"));
}

TEST_CASE("root poset") {
  auto p = root_poset(rs_of("G2"));
  // G2: a chain except for the two simple roots at the bottom
  std::vector<int> by_height(7, 0);
  auto rs = rs_of("G2");
  for (int k = 0; k < rs.num_positive(); ++k) ++by_height[rs.roots[k].height];
  CHECK(by_height == std::vector<int>{0, 2, 1, 1, 1, 1, 0});
  CHECK(p.covers.size() == 5);
  auto a3 = root_poset(rs_of("A3"));
  CHECK(a3.covers.size() == 6);
}

TEST_CASE("weights and coroots") {
  auto wd = weight_data(rs_of("A3"));
  CHECK(wd.rho_coroot == std::vector<BigRational>{make_rat(3, 2), BigRational(2), make_rat(3, 2)});
  auto c3 = weight_data(generate(parse_cartan("matrix:[[2,-1,0],[-1,2,-2],[0,-1,2]]")));
  CHECK(c3.rho_coroot == std::vector<BigRational>{make_rat(5, 2), BigRational(4), make_rat(9, 2)});
}
