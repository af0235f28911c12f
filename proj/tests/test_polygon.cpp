#include <doctest.h>

#include <set>

#include "ga/mutation.hpp"
#include "ga/polygon.hpp"

using namespace ga;

TEST_CASE("triangulation counts are Catalan numbers") {
  std::vector<std::size_t> catalan{1, 2, 5, 14, 42, 132, 429};
  for (int n = 0; n <= 6; ++n) CHECK(enumerate_triangulations(n).size() == catalan[n]);
  for (const auto& t : enumerate_triangulations(4)) {
    CHECK(t.n() == 4);
    for (auto d : t.diagonals)
      for (auto e : t.diagonals) CHECK_FALSE(crosses(d, e));
  }
}

TEST_CASE("reference pentagon exchange matrix") {
  IntMatrix want(7, 2);
  want << 0, 1, -1, 0, 0, 1, -1, 0, 0, -1, 1, -1, 1, 0;
  CHECK(adjacency_matrix(reference_pentagon()) == want);
}

TEST_CASE("flips commute with mutation") {
  for (int n = 1; n <= 4; ++n)
    for (const auto& t : enumerate_triangulations(n))
      for (int k = 0; k < n; ++k) {
        CHECK(adjacency_matrix(flip(t, k)) == matrix_mutate(adjacency_matrix(t), k));
        CHECK(triangulation_key(flip(flip(t, k), k)) == triangulation_key(t));
      }
}

TEST_CASE("hexagon seed gives 14 clusters") {
  auto t = enumerate_triangulations(3)[0];
  VarList names;
  for (int i = 0; i < 9; ++i) names.push_back("v" + std::to_string(i));
  auto rec = explore(initial_seed(adjacency_matrix(t), names));
  CHECK(rec.seeds.size() == 14);
  CHECK(rec.variables.size() == 9);
}

TEST_CASE("Ptolemy values are independent of the flip path") {
  auto res = ptolemy_all(reference_pentagon(), reference_pentagon_names());
  CHECK(res.value.size() == 10);
  auto vars = res.vars;
  auto y3 = res.value.at({1, 4});
  CHECK(y3.fraction_str() == "(q2*y2 + q4*q5)/y1");
  CHECK(ptolemy_expand(reference_pentagon(), reference_pentagon_names(), {1, 4}) == y3);
  CHECK_THROWS_AS(ptolemy_expand(reference_pentagon(), reference_pentagon_names(), {0, 1}), NotADiagonal);
}

TEST_CASE("Plucker coordinates satisfy the Ptolemy relations") {
  for (int n = 1; n <= 4; ++n) {
    auto r = plucker_verify(n);
    CHECK(r.ok());
    CHECK(r.diagonals == (n + 3) * n / 2);
  }
}

TEST_CASE("snake labeling is a bijection onto the diagonals") {
  for (int n = 1; n <= 4; ++n) {
    auto lab = snake_labeling(n);
    CHECK(lab.size() == static_cast<std::size_t>(n * (n + 1) / 2 + n));
    std::set<Diagonal> ds;
    for (const auto& [c, d] : lab) ds.insert(d);
    CHECK(ds.size() == lab.size());
  }
}

TEST_CASE("centrally symmetric triangulations") {
  // type B_n / C_n counts binom(2n, n)
  std::vector<std::size_t> want{0, 2, 6, 20, 70};
  for (int n = 1; n <= 4; ++n) {
    auto m = enumerate_symmetric(n);
    CHECK(m.triangulations.size() == want[n]);
    CHECK(m.orbits.size() == static_cast<std::size_t>(n * n + n));
    CHECK(m.flips.size() == want[n] * n / 2);
  }
}
