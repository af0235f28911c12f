#include <doctest.h>

#include "ga/gassoc.hpp"

using namespace ga;

namespace {
RootSystem rs_of(const std::string& t) { return generate(parse_cartan("type:" + t)); }
}  // namespace

TEST_CASE("tau involutions fix the right negative simples") {
  for (std::string t : {"A3", "B3", "D4", "G2", "F4"}) {
    auto rs = rs_of(t);
    auto td = tau_data(rs);
    for (int i = 0; i < rs.n(); ++i) {
      int k = td.ap.neg_simple(i);
      if (td.parts.eps[i] < 0)
        CHECK(td.plus[k] == k);
      else
        CHECK(td.minus[k] == k);
    }
  }
}

TEST_CASE("order of tau_- tau_+") {
  CHECK(tau_order(rs_of("A2")).order == 5);
  CHECK(tau_order(rs_of("A3")).order == 6);
  CHECK(tau_order(rs_of("B2")).order == 3);
  CHECK(tau_order(rs_of("G2")).order == 4);
  CHECK(tau_order(rs_of("D5")).order == 10);
  CHECK(tau_order(rs_of("E6")).order == 14);
  CHECK(w0_is_minus_identity(rs_of("D4")));
  CHECK_FALSE(w0_is_minus_identity(rs_of("A3")));
}

TEST_CASE("compatibility degree properties") {
  auto rs = rs_of("A3");
  auto cr = compatibility(rs);
  int m = cr.td.ap.size();
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b) {
      CHECK(cr.compatible[a][b] == cr.compatible[b][a]);
      CHECK(cr.compatible[a][b] == cr.compatible[cr.td.plus[a]][cr.td.plus[b]]);
      CHECK(cr.compatible[a][b] == cr.compatible[cr.td.minus[a]][cr.td.minus[b]]);
    }
  // negative simples are pairwise compatible
  for (int i = 0; i < rs.n(); ++i)
    for (int j = 0; j < rs.n(); ++j)
      if (i != j) CHECK(cr.compatible[cr.td.ap.neg_simple(i)][cr.td.ap.neg_simple(j)]);
}

TEST_CASE("cluster complex counts") {
  for (auto [t, n] : std::vector<std::pair<std::string, int>>{{"A4", 42}, {"B4", 70}, {"C4", 70}, {"D5", 182}, {"F4", 105}}) {
    auto rs = rs_of(t);
    auto cc = cluster_complex(rs, compatibility(rs));
    CHECK(static_cast<int>(cc.facets.size()) == n);
    CHECK(n_phi(coxeter_data(rs)) == n);
    auto ty = parse_type_name(t);
    CHECK(cc.h == narayana(ty.factors[0].first, ty.factors[0].second));
    // Dehn-Sommerville: h is palindromic
    for (std::size_t k = 0; k < cc.h.size(); ++k) CHECK(cc.h[k] == cc.h[cc.h.size() - 1 - k]);
  }
  CHECK(h_from_f({1, 9, 21, 14}) == std::vector<BigInt>{1, 6, 6, 1});
  CHECK(h_from_f({1, 2}) == std::vector<BigInt>{1, 1});
}

TEST_CASE("support function and polytope") {
  auto rs = rs_of("B3");
  auto sf = support_function(rs);
  auto cc = cluster_complex(rs, compatibility(rs));
  auto p = build_polytope(rs, cc, sf);
  CHECK(p.vertices.size() == 20);
  CHECK(p.edges.size() == 30);
  // Euler: V - E + F = 2
  CHECK(static_cast<long>(p.vertices.size()) - static_cast<long>(p.edges.size()) +
            static_cast<long>(p.facet_root.size()) ==
        2);
  for (std::size_t v = 0; v < p.vertices.size(); ++v)
    for (std::size_t f = 0; f < p.facet_root.size(); ++f) {
      BigRational s = 0;
      for (int j = 0; j < rs.n(); ++j) s += rs.roots[p.facet_root[f]].coords[j] * p.vertices[v](j);
      bool tight = std::find(p.clusters[v].begin(), p.clusters[v].end(), static_cast<int>(f)) != p.clusters[v].end();
      CHECK(s <= p.rhs[f]);
      CHECK((s == p.rhs[f]) == tight);
    }
}

TEST_CASE("fan checks") {
  auto rs = rs_of("B2");
  auto g = build_group(rs);
  auto cc = cluster_complex(rs, compatibility(rs));
  auto fr = fan_checks(rs, cc, &g, 300, 3);
  CHECK(fr.ok());
  CHECK(fr.regions == 8);
  CHECK(fr.walls == 6);
  auto d4 = rs_of("D4");
  auto fr2 = fan_checks(d4, cluster_complex(d4, compatibility(d4)), nullptr, 0);
  CHECK(fr2.ok());
  CHECK(fr2.walls == 50 * 4 / 2);
}
