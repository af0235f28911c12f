#include "ga/enumerate.hpp"

#include <algorithm>
#include <cmath>
#include <functional>
#include <numeric>
#include <sstream>

#include "ga/gassoc.hpp"

namespace ga {

AntichainCount count_antichains(const RootPoset& p) {
  AntichainCount ac;
  ac.by_size.assign(1, 0);
  std::vector<int> chosen;
  std::function<void(int)> rec = [&](int start) {
    if (ac.by_size.size() <= chosen.size()) ac.by_size.resize(chosen.size() + 1, 0);
    ++ac.by_size[chosen.size()];
    for (int v = start; v < p.size; ++v) {
      bool ok = true;
      for (int u : chosen)
        if (p.leq[u][v] || p.leq[v][u]) ok = false;
      if (!ok) continue;
      chosen.push_back(v);
      rec(v + 1);
      chosen.pop_back();
    }
  };
  rec(0);
  ac.total = std::accumulate(ac.by_size.begin(), ac.by_size.end(), BigInt(0));
  return ac;
}

NcStats nc_lattice_stats(const AbsoluteInterval& ai) {
  NcStats s;
  s.total = static_cast<int>(ai.elements.size());
  s.by_rank = ai.rank_counts;
  if (std::accumulate(s.by_rank.begin(), s.by_rank.end(), 0) != s.total) throw Error("rank counts do not sum");
  return s;
}

long torus_orbits(const RootSystem& rs, int h, bool with_reflections, std::size_t budget) {
  int n = rs.n();
  long mod = h + 1;
  std::size_t total = 1;
  for (int i = 0; i < n; ++i) {
    total *= static_cast<std::size_t>(mod);
    if (total > budget) throw BudgetExceeded("torus has more than " + std::to_string(budget) + " points");
  }
  // linear generators as integer matrices on coordinates
  std::vector<IntMatrix> gens;
  for (int i = 0; i < n; ++i) gens.push_back(reflection_matrix(rs.cartan, i));
  if (with_reflections) {
    for (int k = 0; k < rs.num_positive(); ++k) {
      IntMatrix m(n, n);
      for (int j = 0; j < n; ++j) {
        Coords e(n, 0);
        e[j] = 1;
        Coords img = rs.reflect(rs.roots[k].coords, e);
        for (int i = 0; i < n; ++i) m(i, j) = img[i];
      }
      gens.push_back(m);
    }
  }
  std::vector<int> parent(total);
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) {
      parent[x] = parent[parent[x]];
      x = parent[x];
    }
    return x;
  };
  long components = static_cast<long>(total);
  std::vector<long> v(n);
  for (std::size_t code = 0; code < total; ++code) {
    std::size_t c = code;
    for (int i = 0; i < n; ++i) {
      v[i] = static_cast<long>(c % mod);
      c /= mod;
    }
    for (const auto& g : gens) {
      std::size_t img = 0, place = 1;
      for (int i = 0; i < n; ++i) {
        long s = 0;
        for (int j = 0; j < n; ++j) s += g(i, j) * v[j];
        s %= mod;
        if (s < 0) s += mod;
        img += static_cast<std::size_t>(s) * place;
        place *= mod;
      }
      int a = find(static_cast<int>(code)), b = find(static_cast<int>(img));
      if (a != b) {
        parent[a] = b;
        --components;
      }
    }
  }
  return components;
}

namespace {

// strict inequality a.y < b
struct Halfspace {
  std::vector<BigRational> a;
  BigRational b;
};

std::vector<RationalVector> polytope_vertices(const std::vector<Halfspace>& hs, int n) {
  std::vector<RationalVector> out;
  std::vector<int> pick(n);
  int m = static_cast<int>(hs.size());
  std::function<void(int, int)> rec = [&](int start, int depth) {
    if (depth == n) {
      RationalMatrix A(n, n);
      RationalVector b(n);
      for (int r = 0; r < n; ++r) {
        for (int j = 0; j < n; ++j) A(r, j) = hs[pick[r]].a[j];
        b(r) = hs[pick[r]].b;
      }
      if (determinant(A) == 0) return;
      RationalVector y = solve_linear(A, b);
      for (const auto& h : hs) {
        BigRational s = 0;
        for (int j = 0; j < n; ++j) s += h.a[j] * y(j);
        if (s > h.b) return;
      }
      for (const auto& v : out)
        if (v == y) return;
      out.push_back(y);
      return;
    }
    for (int k = start; k < m; ++k) {
      pick[depth] = k;
      rec(k + 1, depth + 1);
    }
  };
  rec(0, 0);
  return out;
}

}  // namespace

int shi_positive_regions(const RootSystem& rs, int h) {
  int n = rs.n();
  if (n > 3) throw Error("Shi region enumeration is limited to rank <= 3");
  BigRational box = 2 * (h + 1);
  // coordinates y_i = <alpha_i, x>; the positive cone is y > 0
  std::vector<Halfspace> base;
  for (int i = 0; i < n; ++i) {
    Halfspace lo{std::vector<BigRational>(n, BigRational(0)), 0}, hi = lo;
    lo.a[i] = -1;
    hi.a[i] = 1;
    hi.b = box;
    base.push_back(lo);
    base.push_back(hi);
  }
  // every vertex of the arrangement in the closed cone lies strictly inside the box
  {
    std::vector<Halfspace> planes;
    for (int i = 0; i < n; ++i) {
      Halfspace e{std::vector<BigRational>(n, BigRational(0)), 0};
      e.a[i] = 1;
      planes.push_back(e);
    }
    for (int k = 0; k < rs.num_positive(); ++k) {
      Halfspace e{std::vector<BigRational>(n), 1};
      for (int j = 0; j < n; ++j) e.a[j] = rs.roots[k].coords[j];
      planes.push_back(e);
    }
    std::vector<int> pick(n);
    std::function<void(int, int)> rec = [&](int start, int depth) {
      if (depth == n) {
        RationalMatrix A(n, n);
        RationalVector b(n);
        for (int r = 0; r < n; ++r) {
          for (int j = 0; j < n; ++j) A(r, j) = planes[pick[r]].a[j];
          b(r) = planes[pick[r]].b;
        }
        if (determinant(A) == 0) return;
        RationalVector y = solve_linear(A, b);
        for (int j = 0; j < n; ++j)
          if (y(j) >= box) throw Error("Shi vertex outside the search box");
        return;
      }
      for (int k = start; k < static_cast<int>(planes.size()); ++k) {
        pick[depth] = k;
        rec(k + 1, depth + 1);
      }
    };
    rec(0, 0);
  }
  std::vector<std::vector<Halfspace>> regions{base};
  for (int k = 0; k < rs.num_positive(); ++k) {
    Halfspace below{std::vector<BigRational>(n), 1};
    for (int j = 0; j < n; ++j) below.a[j] = rs.roots[k].coords[j];
    Halfspace above = below;
    for (auto& x : above.a) x = -x;
    above.b = -1;
    std::vector<std::vector<Halfspace>> next;
    for (const auto& r : regions) {
      bool lo = false, hi = false;
      for (const auto& v : polytope_vertices(r, n)) {
        BigRational s = 0;
        for (int j = 0; j < n; ++j) s += below.a[j] * v(j);
        if (s < 1) lo = true;
        if (s > 1) hi = true;
      }
      if (lo) {
        auto piece = r;
        piece.push_back(below);
        if (lo && hi) next.push_back(piece);
      }
      if (hi) {
        auto piece = r;
        piece.push_back(above);
        if (lo && hi) next.push_back(piece);
      }
      if (!(lo && hi)) next.push_back(r);
    }
    regions = std::move(next);
  }
  // each region carries a full-dimensional witness: the centroid of its vertices
  for (const auto& r : regions) {
    auto vs = polytope_vertices(r, n);
    if (static_cast<int>(vs.size()) <= n) throw Error("degenerate Shi region");
    RationalVector c = RationalVector::Constant(n, BigRational(0));
    for (const auto& v : vs) c += v;
    for (int j = 0; j < n; ++j) c(j) /= static_cast<long>(vs.size());
    for (const auto& hs : r) {
      BigRational s = 0;
      for (int j = 0; j < n; ++j) s += hs.a[j] * c(j);
      if (!(s < hs.b)) throw Error("Shi region witness is not interior");
    }
  }
  return static_cast<int>(regions.size());
}

bool EnumerationReport::ok() const {
  return std::all_of(rows.begin(), rows.end(), [](const EnumerationRow& r) { return r.match(); });
}

std::string EnumerationReport::csv() const {
  std::ostringstream os;
  os << "type,interpretation,k,observed,expected\n";
  for (const auto& r : rows)
    os << r.type << "," << r.interpretation << "," << (r.k < 0 ? std::string("total") : std::to_string(r.k)) << ","
       << r.observed.get_str() << "," << r.expected.get_str() << "\n";
  return os.str();
}

EnumerationReport enumeration_report(const std::string& type_name, std::size_t group_budget) {
  DynkinType t = parse_type_name(type_name);
  if (!t.irreducible()) throw Error("enumeration needs an irreducible type");
  RootSystem rs = generate(standard_cartan(t));
  CoxeterData cd = coxeter_data(rs);
  BigInt N = n_phi(cd);
  auto nar = narayana(t.factors[0].first, t.factors[0].second);
  EnumerationReport rep;
  std::string name = t.str();
  auto add_profile = [&](const std::string& what, const BigInt& total, const std::vector<BigInt>& prof) {
    rep.rows.push_back({name, what, -1, total, N});
    for (std::size_t k = 0; k < nar.size(); ++k)
      rep.rows.push_back({name, what, static_cast<int>(k), k < prof.size() ? prof[k] : BigInt(0), nar[k]});
  };
  rep.rows.push_back({name, "formula", -1, N, std::accumulate(nar.begin(), nar.end(), BigInt(0))});
  if (rs.num_positive() + rs.n() <= 128) {
    auto cc = cluster_complex(rs, compatibility(rs));
    add_profile("clusters", BigInt(static_cast<unsigned long>(cc.facets.size())), cc.h);
  }
  auto ac = count_antichains(root_poset(rs));
  add_profile("antichains", ac.total, ac.by_size);
  if (cd.group_order <= group_budget) {
    CoxeterGroup g = build_group(rs, group_budget);
    auto nc = nc_lattice_stats(absolute_interval(g, bipartite_coxeter_word(rs.cartan)));
    std::vector<BigInt> prof(nc.by_rank.begin(), nc.by_rank.end());
    add_profile("noncrossing", nc.total, prof);
  }
  double points = std::pow(static_cast<double>(cd.h + 1), rs.n());
  if (points <= 1e7) rep.rows.push_back({name, "torus", -1, BigInt(torus_orbits(rs, cd.h)), N});
  if (rs.n() <= 3) rep.rows.push_back({name, "shi", -1, BigInt(shi_positive_regions(rs, cd.h)), N});
  return rep;
}

}  // namespace ga
