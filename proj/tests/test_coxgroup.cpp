#include <doctest.h>

#include "ga/coxgroup.hpp"

using namespace ga;

namespace {
RootSystem rs_of(const std::string& t) { return generate(parse_cartan("type:" + t)); }
}  // namespace

TEST_CASE("group orders and longest element") {
  for (auto [t, order] : std::vector<std::pair<std::string, int>>{{"A3", 24}, {"B3", 48}, {"G2", 12}, {"D4", 192}, {"F4", 1152}}) {
    auto rs = rs_of(t);
    auto g = build_group(rs);
    CHECK(g.size() == order);
    CHECK(g.length[g.w0] == rs.num_positive());
    CHECK(g.elems[g.w0] == longest_element_perm(rs));
    CHECK(static_cast<int>(g.inversions(g.w0).count()) == rs.num_positive());
  }
  CHECK_THROWS_AS(build_group(rs_of("E6"), 1000), BudgetExceeded);
}

TEST_CASE("group operations are consistent") {
  auto rs = rs_of("B3");
  auto g = build_group(rs);
  for (int a = 0; a < g.size(); a += 5)
    for (int b = 0; b < g.size(); b += 7) {
      int ab = g.multiply(a, b);
      CHECK(g.multiply(ab, g.inverse(b)) == a);
      CHECK(g.length[ab] <= g.length[a] + g.length[b]);
      CHECK(perm_matrix(rs, g.elems[ab]) == perm_matrix(rs, g.elems[a]) * perm_matrix(rs, g.elems[b]));
    }
  for (int w = 0; w < g.size(); ++w) {
    auto word = g.lexmin_word(w);
    CHECK(static_cast<int>(word.size()) == g.length[w]);
    CHECK(g.from_word(word) == w);
    CHECK(perm_length(rs, g.elems[w]) == g.length[w]);
  }
  CHECK(g.word_label(0) == "e");
}

TEST_CASE("reduced word counts") {
  auto g = build_group(rs_of("A3"));
  CHECK(count_reduced_words(g, g.w0) == 16);
  auto b3 = build_group(rs_of("B3"));
  CHECK(count_reduced_words(b3, b3.w0) == 42);
  auto g2 = build_group(rs_of("G2"));
  CHECK(count_reduced_words(g2, g2.w0) == 2);
  // s2 s1 s3 s2 and s2 s3 s1 s2
  CHECK(count_reduced_words(g, g.from_word({1, 0, 2, 1})) == 2);
  auto all = reduced_word_counts(b3);
  CHECK(all[0] == 1);
  CHECK(all[b3.w0] == 42);
}

TEST_CASE("weak order is a lattice") {
  for (std::string t : {"A3", "B3", "G2"}) {
    auto g = build_group(rs_of(t));
    auto wo = weak_order(g);
    CHECK(wo.lattice_checked_full);
    long n = g.size();
    CHECK(wo.pairs_checked == n * (n - 1) / 2 + 300);
    int rank = generate(parse_cartan("type:" + t)).n();
    CHECK(wo.covers.size() == static_cast<std::size_t>(g.size() * rank / 2));
  }
  auto f4 = build_group(rs_of("F4"));
  auto wo = weak_order(f4, 1000, 200, 5);
  CHECK_FALSE(wo.lattice_checked_full);
  CHECK(wo.pairs_checked == 200);
}

TEST_CASE("noncrossing interval") {
  for (auto [t, total] : std::vector<std::pair<std::string, int>>{{"A3", 14}, {"B3", 20}, {"D4", 50}, {"G2", 8}}) {
    auto rs = rs_of(t);
    auto g = build_group(rs);
    auto ai = absolute_interval(g, bipartite_coxeter_word(rs.cartan));
    CHECK(static_cast<int>(ai.elements.size()) == total);
    CHECK(ai.reflection_length[ai.c] == rs.n());
  }
  auto g = build_group(rs_of("A2"));
  CHECK_THROWS_AS(absolute_interval(g, {0, 0}), NotCoxeterElement);
}
