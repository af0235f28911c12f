#include "ga/verify.hpp"

#include <functional>
#include <map>
#include <set>
#include <sstream>

#include "ga/enumerate.hpp"
#include "ga/gassoc.hpp"
#include "ga/mutation.hpp"
#include "ga/polygon.hpp"
#include "ga/wiring.hpp"

namespace ga {

namespace {

// accumulates failures; an empty list means the criterion holds
struct Checker {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
  void note(const std::string& s) { notes.push_back(s); }
};

const std::vector<std::string> kQuickTypes = {"A1", "A2", "A3", "A4", "A5", "B2", "B3", "B4",
                                              "C3", "D4", "F4", "G2"};

std::vector<std::string> suite_types(const VerifyOptions& opt) {
  auto t = kQuickTypes;
  if (opt.extended) t.push_back("E6");
  return t;
}

RootSystem rs_of(const std::string& type) { return generate(parse_cartan("type:" + type)); }

std::string join(const std::vector<std::string>& v, const std::string& sep) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) s += (i ? sep : "") + v[i];
  return s;
}

// alternating mutation chain from the bipartite seed; returns the new variables in order
std::vector<LaurentPoly> rank2_chain(const IntMatrix& b, int steps) {
  Seed s = initial_seed(b, {"x", "y"});
  std::vector<LaurentPoly> out{s.cluster[0], s.cluster[1]};
  for (int t = 0; t < steps; ++t) {
    s = seed_mutate(s, t % 2);
    out.push_back(s.cluster[t % 2]);
  }
  return out;
}

void c1(Checker& ck, const VerifyOptions&) {
  const std::vector<std::pair<std::string, std::size_t>> cases = {{"A2", 5}, {"B2", 6}, {"G2", 8}};
  for (const auto& [type, period] : cases) {
    auto a = parse_cartan("type:" + type);
    IntMatrix b = b_of_a(a, bipartition(a));
    auto rec = explore(initial_seed(b, {"x", "y"}));
    ck.expect(rec.closed && rec.seeds.size() == period,
              type + ": exchange graph has " + std::to_string(rec.seeds.size()) + " seeds");
    auto chain = rank2_chain(b, static_cast<int>(period) + 2);
    bool periodic = true;
    for (std::size_t i = 0; i + period < chain.size(); ++i)
      if (chain[i] != chain[i + period]) periodic = false;
    for (std::size_t p = 1; p < period; ++p)
      if (chain[p] == chain[0] && chain[p + 1] == chain[1]) periodic = false;
    ck.expect(periodic, type + ": chain does not have minimal period " + std::to_string(period));
    ck.note(type + " " + std::to_string(rec.seeds.size()));
  }
  auto a = parse_cartan("type:A2");
  auto chain = rank2_chain(b_of_a(a, bipartition(a)), 3);
  const std::vector<std::string> expected = {"x", "y", "(y + 1)/x", "(x + y + 1)/(x*y)", "(x + 1)/y"};
  for (std::size_t i = 0; i < expected.size(); ++i)
    ck.expect(chain[i].fraction_str() == expected[i], "A2 chain entry " + std::to_string(i + 1) + " is " +
                                                          chain[i].fraction_str());
}

void c2(Checker& ck, const VerifyOptions&) {
  std::vector<LaurentPoly> all;
  std::size_t divisions = 0;
  for (std::string type : {"A2", "B2", "G2"}) {
    auto a = parse_cartan("type:" + type);
    auto chain = rank2_chain(b_of_a(a, bipartition(a)), 10);
    divisions += chain.size() - 2;
    all.insert(all.end(), chain.begin(), chain.end());
  }
  // the B2 window x, y, (y+1)/x, (x^2+(y+1)^2)/(x^2 y), (x^2+y+1)/(xy), (x^2+1)/y
  auto a = parse_cartan("type:B2");
  auto chain = rank2_chain(b_of_a(a, bipartition(a)), 6);
  auto vars = chain[0].vars();
  auto x = LaurentPoly::variable(vars, 0), y = LaurentPoly::variable(vars, 1);
  auto one = LaurentPoly::constant(vars, 1);
  std::vector<LaurentPoly> expect = {
      x,
      y,
      laurent_exact_div(y + one, x),
      laurent_exact_div(x * x + (y + one) * (y + one), x * x * y),
      laurent_exact_div(x * x + y + one, x * y),
      laurent_exact_div(x * x + one, y),
      x,
      y};
  for (std::size_t i = 0; i < expect.size(); ++i)
    ck.expect(chain[i] == expect[i], "B2 window entry " + std::to_string(i + 1) + " is " + chain[i].fraction_str());
  all.insert(all.end(), chain.begin(), chain.end());
  auto rep = observe_positivity(all);
  ck.expect(rep.violations.empty(), "positivity violations: " + join(rep.violations, "; "));
  ck.note(std::to_string(rep.variables) + " variables, " + std::to_string(divisions) + " exact divisions");
}

IntMatrix mat(const std::vector<std::vector<long long>>& rows) {
  IntMatrix m(rows.size(), rows[0].size());
  for (std::size_t i = 0; i < rows.size(); ++i)
    for (std::size_t j = 0; j < rows[i].size(); ++j) m(i, j) = rows[i][j];
  return m;
}

void c3(Checker& ck, const VerifyOptions&) {
  const std::vector<std::pair<std::string, IntMatrix>> printed = {
      {"A4", mat({{2, -1, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}})},
      {"B4", mat({{2, -2, 0, 0}, {-1, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}})},
      {"C4", mat({{2, -1, 0, 0}, {-2, 2, -1, 0}, {0, -1, 2, -1}, {0, 0, -1, 2}})},
      {"D4", mat({{2, 0, -1, 0}, {0, 2, -1, 0}, {-1, -1, 2, -1}, {0, 0, -1, 2}})},
      {"A1+A1", mat({{2, 0}, {0, 2}})},
      {"A2", mat({{2, -1}, {-1, 2}})},
      {"B2", mat({{2, -2}, {-1, 2}})},
      {"G2", mat({{2, -3}, {-1, 2}})}};
  for (const auto& [name, m] : printed) {
    auto fc = validate_finite_type(m);
    ck.expect(fc.finite, name + " rejected");
    if (!fc.finite) continue;
    ck.expect(classify(CartanMatrix(m)).str() == name, name + " classified as " + classify(CartanMatrix(m)).str());
    ck.expect(parse_cartan("type:" + name).matrix() == m, name + " differs from the built-in table");
  }
  ck.expect(!validate_finite_type(mat({{2, -2}, {-2, 2}})).finite, "affine A1 accepted");
  // B(A) for B4 with I+ = {1,3}
  auto a = parse_cartan("type:B4");
  ck.expect(b_of_a(a, bipartition(a)) == mat({{0, -2, 0, 0}, {1, 0, 1, 0}, {0, -1, 0, -1}, {0, 0, 1, 0}}),
            "B(A) for B4 differs");
}

struct TableRow {
  int npos, h;
  std::vector<int> exps;
  long order;
};

void c4(Checker& ck, const VerifyOptions& opt) {
  std::map<std::string, TableRow> table = {
      {"A1", {1, 2, {1}, 2}},
      {"A2", {3, 3, {1, 2}, 6}},
      {"A3", {6, 4, {1, 2, 3}, 24}},
      {"A4", {10, 5, {1, 2, 3, 4}, 120}},
      {"A5", {15, 6, {1, 2, 3, 4, 5}, 720}},
      {"B2", {4, 4, {1, 3}, 8}},
      {"B3", {9, 6, {1, 3, 5}, 48}},
      {"B4", {16, 8, {1, 3, 5, 7}, 384}},
      {"C3", {9, 6, {1, 3, 5}, 48}},
      {"D4", {12, 6, {1, 3, 3, 5}, 192}},
      {"F4", {24, 12, {1, 5, 7, 11}, 1152}},
      {"G2", {6, 6, {1, 5}, 12}},
      {"E6", {36, 12, {1, 4, 5, 7, 8, 11}, 51840}}};
  for (const auto& type : suite_types(opt)) {
    const auto& row = table.at(type);
    auto rs = rs_of(type);
    auto cd = coxeter_data(rs);
    ck.expect(rs.num_positive() == row.npos, type + " |Phi+| = " + std::to_string(rs.num_positive()));
    ck.expect(cd.h == row.h, type + " h = " + std::to_string(cd.h));
    ck.expect(cd.exponents == row.exps, type + " exponents differ");
    ck.expect(cd.group_order == row.order, type + " |W| = " + cd.group_order.get_str());
    // the group itself, built by closure, has the tabulated order
    auto g = build_group(rs);
    ck.expect(g.size() == row.order, type + " closure gives " + std::to_string(g.size()) + " elements");
    ck.expect(g.length[g.w0] == row.npos, type + " longest element has wrong length");
  }
}

void c5(Checker& ck, const VerifyOptions&) {
  auto a3 = build_group(rs_of("A3"));
  ck.expect(count_reduced_words(a3, a3.w0) == 16, "A3 w0 has " + count_reduced_words(a3, a3.w0).get_str() + " words");
  for (int n = 1; n <= 4; ++n) {
    // binom(n+1,2)! / prod_{i=1}^{n} (2i-1)^{n+1-i}
    BigInt num = 1, den = 1;
    for (int k = 2; k <= n * (n + 1) / 2; ++k) num *= k;
    for (int i = 1; i <= n; ++i)
      for (int r = 0; r < n + 1 - i; ++r) den *= 2 * i - 1;
    BigInt stanley = num / den;
    auto g = build_group(rs_of("A" + std::to_string(n)));
    BigInt dp = count_reduced_words(g, g.w0);
    ck.expect(dp == stanley, "A" + std::to_string(n) + ": DP " + dp.get_str() + " vs " + stanley.get_str());
    if (n == 4) ck.note("A4 " + dp.get_str());
  }
}

EdgeNames default_names(const Triangulation& t) {
  EdgeNames names;
  for (std::size_t k = 0; k < t.diagonals.size(); ++k) names[t.diagonals[k]] = "y" + std::to_string(k + 1);
  for (std::size_t k = 0; k < t.sides.size(); ++k) names[t.sides[k]] = "q" + std::to_string(k + 1);
  return names;
}

void c6(Checker& ck, const VerifyOptions&) {
  const std::vector<int> catalan = {1, 2, 5, 14, 42};
  for (int n = 1; n <= 4; ++n) {
    auto ts = enumerate_triangulations(n);
    ck.expect(static_cast<int>(ts.size()) == catalan[n], "n=" + std::to_string(n) + " gives " +
                                                               std::to_string(ts.size()) + " triangulations");
    for (const auto& t : ts)
      for (int k = 0; k < n; ++k)
        ck.expect(adjacency_matrix(flip(t, k)) == matrix_mutate(adjacency_matrix(t), k),
                  "flip/mutation mismatch at " + t.str());
    try {
      auto res = ptolemy_all(ts[0], default_names(ts[0]));
      ck.expect(static_cast<int>(res.value.size()) == (n + 3) * n / 2 + n + 3, "not every diagonal was reached");
    } catch (const MonodromyDetected& e) {
      ck.expect(false, std::string("monodromy: ") + e.what());
    }
    auto pr = plucker_verify(n);
    ck.expect(pr.ok(), "Plucker check fails for n=" + std::to_string(n));
  }
  auto res = ptolemy_all(reference_pentagon(), reference_pentagon_names());
  auto v = [&](int a, int b) { return res.value.at(make_diagonal(a, b)); };
  auto q = [&](const std::string& s) {
    auto& vl = *res.vars;
    return LaurentPoly::variable(res.vars, std::find(vl.begin(), vl.end(), s) - vl.begin());
  };
  LaurentPoly y1 = v(0, 3), y2 = v(1, 3), y3 = v(1, 4), y4 = v(2, 4), y5 = v(0, 2);
  ck.expect(y1 * y3 == q("q2") * y2 + q("q4") * q("q5"), "y1 y3 relation");
  ck.expect(y5 * y2 == q("q1") * y1 + q("q3") * q("q4"), "y5 y2 relation");
  ck.expect(y4 * y1 == q("q5") * y5 + q("q2") * q("q3"), "y4 y1 relation");
  ck.expect(y3 * y5 == q("q4") * y4 + q("q1") * q("q2"), "y3 y5 relation");
  ck.expect(y2 * y4 == q("q3") * y3 + q("q5") * q("q1"), "y2 y4 relation");
  ck.expect(adjacency_matrix(reference_pentagon()) ==
                mat({{0, 1}, {-1, 0}, {0, 1}, {-1, 0}, {0, -1}, {1, -1}, {1, 0}}),
            "pentagon exchange matrix differs");
}

void c7(Checker& ck, const VerifyOptions& opt) {
  std::map<std::string, long> catalan = {{"A1", 2},  {"A2", 5},  {"A3", 14}, {"A4", 42}, {"A5", 132},
                                         {"B2", 6},  {"B3", 20}, {"B4", 70}, {"C3", 20}, {"D4", 50},
                                         {"F4", 105}, {"G2", 8}, {"E6", 833}};
  for (const auto& type : suite_types(opt)) {
    auto rs = rs_of(type);
    auto cd = coxeter_data(rs);
    ck.expect(n_phi(cd) == catalan.at(type), type + " N(Phi) formula gives " + n_phi(cd).get_str());
    try {
      auto cc = cluster_complex(rs, compatibility(rs));
      ck.expect(static_cast<long>(cc.facets.size()) == catalan.at(type),
                type + " has " + std::to_string(cc.facets.size()) + " clusters");
      ck.expect(cc.pure, type + " complex is not pure");
      auto t = parse_type_name(type);
      ck.expect(cc.h == narayana(t.factors[0].first, t.factors[0].second), type + " h-vector differs from Narayana");
      if (type == "A3") {
        ck.expect(cc.f == std::vector<BigInt>{1, 9, 21, 14}, "A3 f-vector");
        ck.expect(cc.h == std::vector<BigInt>{1, 6, 6, 1}, "A3 h-vector");
      }
      if (type == "B3") {
        ck.expect(cc.f == std::vector<BigInt>{1, 12, 30, 20}, "B3 f-vector");
        ck.expect(cc.h == std::vector<BigInt>{1, 9, 9, 1}, "B3 h-vector");
      }
    } catch (const NonUnimodularCluster& e) {
      ck.expect(false, type + ": " + e.what());
    }
  }
}

void c8(Checker& ck, const VerifyOptions& opt) {
  for (const auto& type : suite_types(opt)) {
    auto rs = rs_of(type);
    auto td = tau_data(rs);
    for (int k = 0; k < td.ap.size(); ++k) {
      ck.expect(td.plus[td.plus[k]] == k, type + " tau+ is not an involution");
      ck.expect(td.minus[td.minus[k]] == k, type + " tau- is not an involution");
    }
    auto to = tau_order(rs);
    ck.expect(to.order == to.predicted, type + " order of tau-tau+ is " + std::to_string(to.order));
    auto cd = coxeter_data(rs);
    int formula = w0_is_minus_identity(rs) ? (cd.h + 2) / 2 : cd.h + 2;
    ck.expect(to.order == formula, type + " order differs from (h+2)/2 or h+2");
    for (const auto& orb : tau_orbits(td)) {
      bool meets = false;
      for (int k : orb) meets = meets || td.ap.is_neg_simple(k);
      ck.expect(meets, type + " orbit avoids the negative simple roots");
    }
  }
  // -a1 <-t+-> a1 <-t-> a1+a2 <-t+-> a2 <-t-> -a2, t- fixes -a1, t+ fixes -a2
  auto rs = rs_of("A2");
  auto td = tau_data(rs);
  auto ap_index = [&](const Coords& c) {
    int r = rs.index(c);
    for (int k = 0; k < td.ap.size(); ++k)
      if (td.ap.root[k] == r) return k;
    return -1;
  };
  int m1 = ap_index({-1, 0}), a1 = ap_index({1, 0}), a12 = ap_index({1, 1}), a2 = ap_index({0, 1}),
      m2 = ap_index({0, -1});
  ck.expect(td.plus[m1] == a1 && td.minus[a1] == a12 && td.plus[a12] == a2 && td.minus[a2] == m2 &&
                td.minus[m1] == m1 && td.plus[m2] == m2,
            "A2 tau chain differs");
}

void expect_support(Checker& ck, const std::string& label, const RootSystem& rs,
                    const std::vector<std::pair<BigRational, std::vector<Coords>>>& groups) {
  auto sf = support_function(rs);
  auto ap = almost_positive(rs);
  std::size_t listed = 0;
  for (const auto& [value, roots] : groups)
    for (const auto& c : roots) {
      ++listed;
      int r = rs.index(c);
      bool found = false;
      for (int k = 0; k < ap.size(); ++k)
        if (ap.root[k] == r) {
          found = true;
          ck.expect(sf.F[k] == value, label + " F differs at a root of height " + std::to_string(rs.roots[r].height));
        }
      ck.expect(found, label + " printed root is not almost positive");
    }
  ck.expect(listed == static_cast<std::size_t>(ap.size()), label + " printed inequalities do not cover every facet");
}

void check_polytope(Checker& ck, const std::string& label, const RootSystem& rs, std::size_t vertices) {
  auto cc = cluster_complex(rs, compatibility(rs));
  auto p = build_polytope(rs, cc, support_function(rs));
  ck.expect(p.vertices.size() == vertices, label + " has " + std::to_string(p.vertices.size()) + " vertices");
  std::vector<int> degree(p.vertices.size(), 0);
  for (auto [a, b] : p.edges) {
    ++degree[a];
    ++degree[b];
  }
  for (int d : degree) ck.expect(d == rs.n(), label + " is not simple");
  std::set<RationalVector, std::function<bool(const RationalVector&, const RationalVector&)>> distinct(
      [](const RationalVector& x, const RationalVector& y) {
        return std::lexicographical_compare(x.data(), x.data() + x.size(), y.data(), y.data() + y.size());
      });
  for (const auto& v : p.vertices) distinct.insert(v);
  ck.expect(distinct.size() == p.vertices.size(), label + " has coinciding vertices");
}

void c9(Checker& ck, const VerifyOptions&) {
  BigRational h32(3, 2), h52(5, 2), h92(9, 2);
  expect_support(ck, "A3", rs_of("A3"),
                 {{h32, {{-1, 0, 0}, {0, 0, -1}, {1, 0, 0}, {0, 0, 1}, {1, 1, 0}, {0, 1, 1}}},
                  {BigRational(2), {{0, -1, 0}, {0, 1, 0}, {1, 1, 1}}}});
  // numbering with the long simple root last
  auto c3 = generate(parse_cartan("matrix:[[2,-1,0],[-1,2,-2],[0,-1,2]]"));
  expect_support(ck, "C3", c3,
                 {{h52, {{-1, 0, 0}, {1, 0, 0}, {1, 1, 0}, {0, 1, 1}}},
                  {BigRational(4), {{0, -1, 0}, {0, 1, 0}, {1, 1, 1}, {1, 2, 1}}},
                  {h92, {{0, 0, -1}, {0, 0, 1}, {0, 2, 1}, {2, 2, 1}}}});
  check_polytope(ck, "A3", rs_of("A3"), 14);
  check_polytope(ck, "C3", c3, 20);
  check_polytope(ck, "A2", rs_of("A2"), 5);
  auto a2 = rs_of("A2");
  auto p = build_polytope(a2, cluster_complex(a2, compatibility(a2)), support_function(a2));
  ck.expect(p.edges.size() == 5, "A2 polygon has " + std::to_string(p.edges.size()) + " edges");
}

void c10(Checker& ck, const VerifyOptions& opt) {
  const std::set<std::string> refine = {"A2", "A3", "B2", "B3", "G2"};
  for (const auto& type : suite_types(opt)) {
    auto rs = rs_of(type);
    auto cc = cluster_complex(rs, compatibility(rs));
    std::optional<CoxeterGroup> g;
    if (refine.count(type)) g = build_group(rs);
    auto fr = fan_checks(rs, cc, g ? &*g : nullptr, refine.count(type) ? 500 : 0, opt.rng_seed);
    ck.expect(fr.simplicial && fr.bad_walls == 0, type + ": " + std::to_string(fr.bad_walls) + " bad walls");
    if (g) {
      ck.expect(fr.regions == g->size() && fr.regions_contained == fr.regions,
                type + ": " + std::to_string(fr.regions_contained) + " of " + std::to_string(fr.regions) +
                    " Coxeter chambers inside a cluster cone");
      ck.expect(fr.uncovered == 0 && fr.not_unique == 0, type + ": random points not covered exactly once");
    }
  }
}

void c11(Checker& ck, const VerifyOptions&) {
  for (std::string type : {"A2", "A3", "B2", "B3", "G2"}) {
    auto rep = enumeration_report(type);
    for (const auto& r : rep.rows)
      ck.expect(r.match(), type + " " + r.interpretation + (r.k >= 0 ? " k=" + std::to_string(r.k) : "") + ": " +
                               r.observed.get_str() + " vs " + r.expected.get_str());
    std::set<std::string> kinds;
    for (const auto& r : rep.rows) kinds.insert(r.interpretation);
    for (std::string k : {"clusters", "antichains", "noncrossing", "torus", "shi"})
      ck.expect(kinds.count(k) == 1, type + " lacks " + k);
    auto rs = rs_of(type);
    int h = coxeter_data(rs).h;
    ck.expect(torus_orbits(rs, h, true) == torus_orbits(rs, h, false), type + " torus orbits depend on generators");
    auto ac = count_antichains(root_poset(rs));
    for (std::size_t k = 0; k < ac.by_size.size(); ++k)
      ck.expect(ac.by_size[k] == ac.by_size[ac.by_size.size() - 1 - k], type + " antichain profile is not symmetric");
  }
  ck.expect(torus_orbits(rs_of("A2"), 3) == 5, "A2 in Q/4Q");
  ck.expect(torus_orbits(rs_of("B2"), 4) == 6, "B2 in Q/5Q");
}

void c12(Checker& ck, const VerifyOptions& opt) {
  auto wc = enumerate_classes(3);
  ck.expect(wc.classes.size() == 34, std::to_string(wc.classes.size()) + " isotopy classes");
  int d4 = 0, d3 = 0;
  for (int d : wc.degree) {
    if (d == 4) ++d4;
    if (d == 3) ++d3;
  }
  ck.expect(d4 == 18 && d3 == 16 && wc.degree.size() == 34, "degree profile " + std::to_string(d4) + "x4 + " + std::to_string(d3) + "x3");
  ck.expect(wc.identity_ok == wc.moves_checked, "AC+BD=YZ fails on some move");
  ck.expect(wc.single_exchange_ok == wc.moves_checked, "a move changes more than one chamber");
  ck.expect(wc.involutive_ok == wc.moves_checked, "a move is not involutive");
  ck.expect(wc.connected(), "move graph is disconnected");
  auto col = chamber_collection(3, figure_word());
  int fig = wc.find(col);
  ck.expect(fig >= 0 && wc.degree[fig] == 4, "figure diagram does not allow 4 moves");
  auto r = gl3_cell(opt.rng_seed);
  ck.expect(r.signs_consistent, "exchange matrix signs inconsistent");
  ck.expect(r.variables.size() == 16, std::to_string(r.variables.size()) + " cluster variables");
  ck.expect(r.minors_matched == 14 && r.hidden_matched == 2,
            std::to_string(r.minors_matched) + " minors and " + std::to_string(r.hidden_matched) + " hidden matched");
  ck.expect(r.all_polynomial, "a cluster variable is not a polynomial");
  ck.expect(r.closed && r.seeds == 50, std::to_string(r.seeds) + " clusters");
  ck.expect(r.type == "D4", "type " + r.type);
  ck.expect(r.wiring_clusters_embedded == r.wiring_classes, "wiring clusters missing from the exchange graph");
  ck.expect(r.jacobian_rank == 9, "Jacobian rank " + std::to_string(r.jacobian_rank));
  ck.note(std::to_string(wc.moves_checked) + " moves checked");
}

const std::vector<std::pair<std::string, std::function<void(Checker&, const VerifyOptions&)>>>& battery() {
  static const std::vector<std::pair<std::string, std::function<void(Checker&, const VerifyOptions&)>>> b = {
      {"rank-2 periodicity", c1},   {"Laurent positivity", c2},     {"Cartan table", c3},
      {"root and group data", c4},  {"reduced words", c5},          {"polygon model", c6},
      {"cluster complexes", c7},    {"tau machinery", c8},          {"polytopes", c9},
      {"fan checks", c10},          {"enumerative cross-check", c11}, {"wiring diagrams", c12}};
  return b;
}

}  // namespace

CriterionResult check_criterion(int id, const VerifyOptions& opt) {
  if (id < 1 || id > kLibraryCriteria) throw Error("no criterion " + std::to_string(id));
  const auto& [name, fn] = battery()[id - 1];
  CriterionResult r{id, name, false, ""};
  Checker ck;
  try {
    fn(ck, opt);
  } catch (const std::exception& e) {
    ck.failures.push_back(std::string("error: ") + e.what());
  }
  r.pass = ck.failures.empty();
  r.detail = r.pass ? join(ck.notes, ", ") : join(ck.failures, "; ");
  return r;
}

std::vector<CriterionResult> verify_all(const VerifyOptions& opt) {
  std::vector<CriterionResult> out;
  for (int id = 1; id <= kLibraryCriteria; ++id) out.push_back(check_criterion(id, opt));
  return out;
}

std::string verify_report(const std::vector<CriterionResult>& results) {
  std::ostringstream os;
  int passed = 0;
  for (const auto& r : results) {
    passed += r.pass;
    os << (r.pass ? "PASS" : "FAIL") << " " << r.id << " " << r.name;
    if (!r.detail.empty()) os << ": " << r.detail;
    os << "\n";
  }
  os << passed << "/" << results.size() << " criteria passed\n";
  return os.str();
}

}  // namespace ga
