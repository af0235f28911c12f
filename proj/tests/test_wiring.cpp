#include <doctest.h>

#include "ga/wiring.hpp"

using namespace ga;

namespace {

Chamber ch(std::vector<int> r, std::vector<int> c) { return Chamber{std::move(r), std::move(c)}; }

}  // namespace

TEST_CASE("word text round trip") {
  auto w = figure_word();
  CHECK(word_str(w) == "T2 t1 t2 T1 T2 t1");
  CHECK(parse_word(word_str(w)) == w);
  CHECK_THROWS_AS(parse_word("x1"), InvalidDiagram);
  CHECK_THROWS_AS(check_diagram(3, parse_word("t1 t1 t2 T1 T2 T1")), InvalidDiagram);
  CHECK_NOTHROW(check_diagram(3, w));
}

TEST_CASE("chamber labels of the figure diagram") {
  auto c = chambers(3, figure_word());
  std::vector<Chamber> want{ch({3}, {1}),         ch({3}, {2}),         ch({1}, {2}),
                            ch({1}, {3}),         ch({2, 3}, {1, 2}),   ch({1, 3}, {1, 2}),
                            ch({1, 3}, {2, 3}),   ch({1, 2}, {2, 3}),   ch({1, 2, 3}, {1, 2, 3})};
  CHECK(c == want);
  auto u = unbounded_chambers(3, figure_word());
  CHECK(u.size() == 5);
  auto xs = matrix_vars(3);
  std::vector<std::string> printed;
  for (const auto& x : u) printed.push_back(minor_poly(xs, 3, x).str());
  std::sort(printed.begin(), printed.end());
  std::vector<std::string> display{"x13", "x12*x23 - x13*x22", "x31", "x21*x32 - x22*x31",
                                   minor_poly(xs, 3, ch({1, 2, 3}, {1, 2, 3})).str()};
  std::sort(display.begin(), display.end());
  CHECK(printed == display);
}

TEST_CASE("minors are determinants") {
  auto xs = matrix_vars(3);
  auto det = minor_poly(xs, 3, ch({1, 2, 3}, {1, 2, 3}));
  CHECK(det.terms().size() == 6);
  std::vector<BigRational> pt{2, 0, 1, 1, 3, 0, 0, 5, 1};
  CHECK(det.evaluate(pt) == BigRational(2 * 3 - 0 + 1 * 5));
  CHECK(minor_poly(xs, 3, ch({}, {})).str() == "1");
}

TEST_CASE("2x2 instance of the three-term identity") {
  auto w = parse_word("t1 T1");
  auto m = local_moves(2, w);
  REQUIRE(m.size() == 1);
  CHECK(m[0].Y == ch({2}, {2}));
  CHECK(m[0].Z == ch({1}, {1}));
  auto xs = matrix_vars(2);
  CHECK(check_move_identity(xs, 2, m[0]));
  CHECK(word_str(m[0].result) == "T1 t1");
}

TEST_CASE("move graph for GL3") {
  auto wc = enumerate_classes(3);
  CHECK(wc.classes.size() == 34);
  std::size_t words = 0;
  for (const auto& w : wc.words) words += w.size();
  CHECK(words == 80);
  CHECK(wc.identity_ok == wc.moves_checked);
  CHECK(wc.single_exchange_ok == wc.moves_checked);
  CHECK(wc.involutive_ok == wc.moves_checked);
  CHECK(wc.connected());
  int fig = wc.find(chamber_collection(3, figure_word()));
  REQUIRE(fig >= 0);
  CHECK(wc.degree[fig] == 4);
  CHECK(wc.find(chamber_collection(3, parse_word("t1 t2 t1 T1 T2 T1"))) >= 0);
}

TEST_CASE("local move by chamber") {
  auto w = figure_word();
  auto m = local_move(3, w, ch({1, 3}, {1, 2}));
  CHECK(check_move_identity(matrix_vars(3), 3, m));
  CHECK_THROWS_AS(local_move(3, w, ch({3}, {1})), NoMoveAvailable);
  auto xs = matrix_vars(3);
  for (const auto& y : bounded_chambers(3, w)) {
    auto mv = local_move(3, w, y);
    CHECK(check_move_identity(xs, 3, mv));
    CHECK(chamber_collection(3, mv.result) != chamber_collection(3, w));
  }
}

TEST_CASE("GL3 cell") {
  auto r = gl3_cell(1);
  CHECK(r.signs_consistent);
  CHECK(r.closed);
  CHECK(r.seeds == 50);
  CHECK(r.variables.size() == 16);
  CHECK(r.minors_matched == 14);
  CHECK(r.hidden_matched == 2);
  CHECK(r.all_polynomial);
  CHECK(r.type == "D4");
  CHECK(r.wiring_clusters_embedded == 34);
  CHECK(r.jacobian_rank == 9);
  CHECK(jacobian_rank(3, parse_word("t1 t2 t1 T1 T2 T1"), 9) == 9);
}
