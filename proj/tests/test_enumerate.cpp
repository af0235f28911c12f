#include <doctest.h>

#include "ga/enumerate.hpp"

using namespace ga;

namespace {
RootSystem rs_of(const std::string& t) { return generate(parse_cartan("type:" + t)); }
}  // namespace

TEST_CASE("antichains") {
  RootPoset empty;
  CHECK(count_antichains(empty).total == 1);
  auto ac = count_antichains(root_poset(rs_of("A3")));
  CHECK(ac.total == 14);
  CHECK(ac.by_size == std::vector<BigInt>{1, 6, 6, 1});
  auto g2 = count_antichains(root_poset(rs_of("G2")));
  CHECK(g2.by_size == std::vector<BigInt>{1, 6, 1});
  CHECK(count_antichains(root_poset(rs_of("D4"))).total == 50);
  CHECK(count_antichains(root_poset(rs_of("F4"))).total == 105);
}

TEST_CASE("torus orbits") {
  CHECK(torus_orbits(rs_of("A2"), 3) == 5);
  CHECK(torus_orbits(rs_of("B2"), 4) == 6);
  CHECK(torus_orbits(rs_of("G2"), 6) == 8);
  CHECK(torus_orbits(rs_of("A3"), 4) == 14);
  CHECK(torus_orbits(rs_of("D4"), 6) == 50);
  CHECK(torus_orbits(rs_of("B3"), 6, true) == 20);
  CHECK_THROWS_AS(torus_orbits(rs_of("E6"), 12, false, 1000), BudgetExceeded);
}

TEST_CASE("Shi positive regions") {
  CHECK(shi_positive_regions(rs_of("A2"), 3) == 5);
  CHECK(shi_positive_regions(rs_of("B2"), 4) == 6);
  CHECK(shi_positive_regions(rs_of("G2"), 6) == 8);
  CHECK(shi_positive_regions(rs_of("A3"), 4) == 14);
  CHECK(shi_positive_regions(rs_of("C3"), 6) == 20);
  CHECK_THROWS_AS(shi_positive_regions(rs_of("A4"), 5), Error);
}

TEST_CASE("enumeration report") {
  auto rep = enumeration_report("D4");
  CHECK(rep.ok());
  auto csv = rep.csv();
  CHECK(csv.rfind("type,interpretation,k,observed,expected\n", 0) == 0);
  CHECK(csv.find("D4,antichains,total,50,50") != std::string::npos);
  CHECK(csv.find("D4,noncrossing,2,24,24") != std::string::npos);
  CHECK_THROWS_AS(enumeration_report("A1+A1"), Error);
}
