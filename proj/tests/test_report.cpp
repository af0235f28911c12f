#include <doctest.h>

#include "ga/report.hpp"

using namespace ga;

TEST_CASE("roots JSON") {
  auto rs = generate(parse_cartan("type:G2"));
  auto j = roots_json(rs, coxeter_data(rs));
  CHECK(j["type"] == "G2");
  CHECK(j["rank"] == 2);
  CHECK(j["positive_roots"].size() == 6);
  CHECK(j["roots"].size() == 12);
  CHECK(j["h"] == 6);
  CHECK(j["group_order"] == 12);
  CHECK(j["symmetrizer"].size() == 2);
  CHECK(j["exponents"] == Json::array({1, 5}));
}

TEST_CASE("seed JSON round trip") {
  Json j = Json::parse(R"({"m":3,"n":2,"btilde":[[0,1],[-1,0],[1,0]],"cluster":["a","b"],"frozen":["p"]})");
  Seed s = seed_from_json(j);
  CHECK(s.m() == 3);
  CHECK((*s.vars)[2] == "p");
  Json back = seed_json(s);
  CHECK(back["btilde"] == j["btilde"]);
  CHECK(back["cluster"] == j["cluster"]);
  CHECK(back["frozen"] == j["frozen"]);
  CHECK_THROWS_AS(seed_from_json(Json::parse(R"({"m":2,"n":2})")), Error);
  CHECK_THROWS_AS(seed_from_json(Json::parse(R"({"m":2,"n":2,"btilde":[[0,1]]})")), Error);
}

TEST_CASE("polytope exports") {
  auto rs = generate(parse_cartan("type:A3"));
  auto cc = cluster_complex(rs, compatibility(rs));
  auto p = build_polytope(rs, cc, support_function(rs));
  auto j = polytope_json(rs, p);
  CHECK(j["facets"].size() == 9);
  CHECK(j["vertices"].size() == 14);
  CHECK(j["incidence"].size() == 14);
  auto off = polytope_off(p);
  CHECK(off.rfind("OFF\n14 9 21\n", 0) == 0);
  auto a2 = generate(parse_cartan("type:A2"));
  auto p2 = build_polytope(a2, cluster_complex(a2, compatibility(a2)), support_function(a2));
  CHECK_THROWS_AS(polytope_off(p2), Error);
  auto fan = fan_json(rs, cc);
  CHECK(fan["rays"].size() == 9);
  CHECK(fan["cones"].size() == 14);
}

TEST_CASE("DOT exports") {
  auto dot = flip_graph_dot(2);
  CHECK(dot.rfind("graph flips {", 0) == 0);
  CHECK(std::count(dot.begin(), dot.end(), '\n') == 1 + 5 + 5 + 1);
  auto rs = generate(parse_cartan("type:A2"));
  auto g = build_group(rs);
  auto w = weak_order_dot(g, weak_order(g));
  CHECK(w.find("label=\"s1s2s1\"") != std::string::npos);
  auto nc = absolute_interval_dot(g, absolute_interval(g, bipartite_coxeter_word(rs.cartan)));
  CHECK(std::count(nc.begin(), nc.end(), '>') == 6);
}
