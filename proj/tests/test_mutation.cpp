#include <doctest.h>

#include <random>
#include <set>

#include "ga/mutation.hpp"

using namespace ga;

namespace {

IntMatrix bipartite_b(const std::string& t) {
  auto a = parse_cartan("type:" + t);
  return b_of_a(a, bipartition(a));
}

VarList xnames(int m) {
  VarList v;
  for (int i = 1; i <= m; ++i) v.push_back("x" + std::to_string(i));
  return v;
}

}  // namespace

TEST_CASE("matrix mutation is an involution and keeps skew-symmetrizability") {
  std::mt19937 rng(5);
  for (std::string t : {"A4", "B3", "C4", "D4", "F4", "G2"}) {
    IntMatrix b = bipartite_b(t);
    auto d = skew_symmetrizer(b);
    REQUIRE(d.has_value());
    for (int step = 0; step < 30; ++step) {
      int k = static_cast<int>(rng() % b.cols());
      IntMatrix b2 = matrix_mutate(b, k);
      CHECK(matrix_mutate(b2, k) == b);
      for (int i = 0; i < b.rows(); ++i)
        for (int j = 0; j < b.cols(); ++j) CHECK((*d)[i] * b2(i, j) == -(*d)[j] * b2(j, i));
      b = b2;
    }
  }
}

TEST_CASE("mutation of a rectangular matrix follows the entry rule") {
  IntMatrix b(3, 2);
  b << 0, 1, -1, 0, 1, -1;
  IntMatrix m = matrix_mutate(b, 0);
  IntMatrix want(3, 2);
  want << 0, -1, 1, 0, -1, 0;
  CHECK(m == want);
}

TEST_CASE("A2 seed reproduces the pentagon recurrence") {
  Seed s = initial_seed(bipartite_b("A2"), {"x", "y"});
  std::vector<std::string> seen{s.cluster[0].fraction_str(), s.cluster[1].fraction_str()};
  for (int t = 0; t < 5; ++t) {
    s = seed_mutate(s, t % 2);
    seen.push_back(s.cluster[t % 2].fraction_str());
  }
  CHECK(seen == std::vector<std::string>{"x", "y", "(y + 1)/x", "(x + y + 1)/(x*y)", "(x + 1)/y", "x", "y"});
}

TEST_CASE("exchange graphs of finite types") {
  for (auto [t, seeds, vars] :
       std::vector<std::tuple<std::string, std::size_t, std::size_t>>{{"A3", 14, 9}, {"B3", 20, 12}, {"C3", 20, 12}, {"D4", 50, 16}, {"G2", 8, 8}}) {
    IntMatrix b = bipartite_b(t);
    auto rec = explore(initial_seed(b, xnames(b.cols()), false));
    CHECK(rec.closed);
    CHECK(rec.seeds.size() == seeds);
    CHECK(rec.variables.size() == vars);
    // n-regular graph
    CHECK(rec.edges.size() == seeds * b.cols() / 2);
    CHECK(observe_positivity(rec).violations.empty());
    auto rs = generate(parse_cartan("type:" + t));
    std::set<int> labels;
    for (const auto& v : rec.variables) labels.insert(denominator_root(rs, v));
    CHECK(labels.size() == vars);
  }
}

TEST_CASE("budgets stop exploration") {
  IntMatrix b = bipartite_b("A4");
  auto rec = explore(initial_seed(b, xnames(4), false), 10);
  CHECK_FALSE(rec.closed);
  CHECK(rec.seeds.size() == 10);
  IntMatrix wild(2, 2);
  wild << 0, 3, -3, 0;
  auto rec2 = explore(initial_seed(wild, xnames(2)), 50, 300);
  CHECK_FALSE(rec2.closed);
  CHECK(rec2.term_limit_hit);
}

TEST_CASE("finite type detection") {
  for (std::string t : {"A1", "A3", "B3", "C3", "D4", "D5", "E6", "F4", "G2", "A1+A2"}) {
    auto r = detect_finite_type(bipartite_b(t));
    CHECK(r.status == FiniteStatus::finite);
    CHECK(r.type.str() == t);
  }
  // an oriented triangle is mutation equivalent to A3
  IntMatrix tri(3, 3);
  tri << 0, 1, -1, -1, 0, 1, 1, -1, 0;
  auto r = detect_finite_type(tri);
  CHECK(r.status == FiniteStatus::finite);
  CHECK(r.type.str() == "A3");
  IntMatrix kron(2, 2);
  kron << 0, 2, -2, 0;
  CHECK(detect_finite_type(kron).status == FiniteStatus::infinite);
  IntMatrix cyc(3, 3);
  cyc << 0, 2, -2, -2, 0, 2, 2, -2, 0;
  CHECK(detect_finite_type(cyc).status == FiniteStatus::infinite);
}

TEST_CASE("seeds with frozen variables") {
  IntMatrix bt(4, 2);
  bt << 0, 1, -1, 0, 1, 0, 0, 1;
  auto rec = explore(initial_seed(bt, {"x1", "x2", "p1", "p2"}));
  CHECK(rec.seeds.size() == 5);
  for (const auto& v : rec.variables) CHECK(v.coefficients_positive());
  IntMatrix lowt(3, 2);
  lowt << 0, 1, -1, 0, 0, 0;
  CHECK_NOTHROW(initial_seed(lowt, {"a", "b", "c"}));
  IntMatrix bad(2, 2);
  bad << 0, 1, 1, 0;
  CHECK_THROWS_AS(initial_seed(bad, {"a", "b"}), Error);
  // A3 coefficient-free B has rank 2
  CHECK_THROWS_AS(initial_seed(bipartite_b("A3"), xnames(3)), Error);
  CHECK_NOTHROW(initial_seed(bipartite_b("A3"), xnames(3), false));
}
