#include "ga/gassoc.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <random>

namespace ga {

AlmostPositiveRoots almost_positive(const RootSystem& rs) {
  AlmostPositiveRoots ap;
  ap.npos = rs.num_positive();
  for (int k = 0; k < rs.num_positive(); ++k) ap.root.push_back(k);
  for (int i = 0; i < rs.n(); ++i) ap.root.push_back(rs.neg(rs.simple(i)));
  return ap;
}

int tau(const RootSystem& rs, const Bipartition& parts, int eps, int idx) {
  const Root& r = rs.roots[idx];
  if (r.height == -1) {
    int i = static_cast<int>(std::find(r.coords.begin(), r.coords.end(), -1) - r.coords.begin());
    if (parts.eps[i] == -eps) return idx;
  }
  for (int i : eps > 0 ? parts.plus : parts.minus) idx = rs.sref(i, idx);
  const Root& out = rs.roots[idx];
  if (!(out.positive() || out.height == -1)) throw Error("tau left the almost positive roots");
  return idx;
}

TauData tau_data(const RootSystem& rs) {
  TauData td;
  td.ap = almost_positive(rs);
  td.parts = bipartition(rs.cartan);
  std::map<int, int> back;
  for (int k = 0; k < td.ap.size(); ++k) back[td.ap.root[k]] = k;
  for (int k = 0; k < td.ap.size(); ++k) {
    td.plus.push_back(back.at(tau(rs, td.parts, 1, td.ap.root[k])));
    td.minus.push_back(back.at(tau(rs, td.parts, -1, td.ap.root[k])));
  }
  return td;
}

int permutation_order(const std::vector<int>& p) {
  int n = static_cast<int>(p.size());
  std::vector<int> q(n);
  std::iota(q.begin(), q.end(), 0);
  std::vector<int> id = q;
  int k = 0;
  do {
    for (int i = 0; i < n; ++i) q[i] = p[q[i]];
    ++k;
  } while (q != id);
  return k;
}

bool w0_is_minus_identity(const RootSystem& rs) {
  Perm w0 = longest_element_perm(rs);
  for (int k = 0; k < rs.size(); ++k)
    if (static_cast<unsigned char>(w0[k]) != rs.neg(k)) return false;
  return true;
}

TauOrderResult tau_order(const RootSystem& rs) {
  TauData td = tau_data(rs);
  std::vector<int> prod(td.ap.size());
  for (int k = 0; k < td.ap.size(); ++k) prod[k] = td.minus[td.plus[k]];
  TauOrderResult r;
  r.order = permutation_order(prod);
  int h = coxeter_data(rs).h;
  r.predicted = w0_is_minus_identity(rs) ? (h + 2) / 2 : h + 2;
  return r;
}

std::vector<std::vector<int>> tau_orbits(const TauData& td) {
  int m = td.ap.size();
  std::vector<int> comp(m, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < m; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> orb{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < orb.size(); ++k)
      for (int nb : {td.plus[orb[k]], td.minus[orb[k]]})
        if (comp[nb] < 0) {
          comp[nb] = comp[s];
          orb.push_back(nb);
        }
    std::sort(orb.begin(), orb.end());
    out.push_back(orb);
  }
  return out;
}

CompatibilityRelation compatibility(const RootSystem& rs) {
  CompatibilityRelation cr;
  cr.td = tau_data(rs);
  const TauData& td = cr.td;
  int m = td.ap.size();
  int limit = 2 * (coxeter_data(rs).h + 2) + 2;
  auto support_has = [&](int k, int i) { return rs.roots[td.ap.root[k]].coords[i] != 0; };
  auto reduce = [&](int x, int y, int eps) {
    for (int step = 0; step <= limit; ++step) {
      if (td.ap.is_neg_simple(x)) return !support_has(y, x - td.ap.npos);
      if (td.ap.is_neg_simple(y)) return !support_has(x, y - td.ap.npos);
      x = eps > 0 ? td.plus[x] : td.minus[x];
      y = eps > 0 ? td.plus[y] : td.minus[y];
      eps = -eps;
    }
    throw OrbitEscape("tau alternation did not reach a negative simple root");
  };
  cr.compatible.assign(m, std::vector<char>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y) continue;
      bool a = reduce(x, y, 1), b = reduce(x, y, -1), c = reduce(y, x, 1);
      if (a != b || a != c) throw Error("compatibility depends on the reduction path");
      cr.compatible[x][y] = a;
    }
  return cr;
}

std::vector<BigInt> h_from_f(const std::vector<BigInt>& f) {
  int d = static_cast<int>(f.size()) - 1;
  std::vector<BigInt> h(d + 1, 0);
  for (int k = 0; k <= d; ++k)
    for (int i = 0; i <= k; ++i) {
      BigInt c;
      mpz_bin_uiui(c.get_mpz_t(), d - i, k - i);
      BigInt t = c * f[i];
      h[k] += ((k - i) % 2) ? BigInt(-t) : t;
    }
  return h;
}

ClusterComplexData cluster_complex(const RootSystem& rs, const CompatibilityRelation& cr) {
  using Bits = std::bitset<128>;
  int m = cr.td.ap.size(), n = rs.n();
  if (m > 128) throw Error("cluster complex too large");
  std::vector<Bits> nb(m);
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y)
      if (cr.compatible[x][y]) nb[x].set(y);
  ClusterComplexData cc;
  cc.f.assign(n + 1, 0);
  std::vector<int> clique;
  Bits all;
  for (int x = 0; x < m; ++x) all.set(x);
  std::function<void(const Bits&, const Bits&, int)> grow = [&](const Bits& common, const Bits& cand, int start) {
    ++cc.f[clique.size()];
    if (common.none() && clique.size() != static_cast<std::size_t>(n)) cc.pure = false;
    if (clique.size() == static_cast<std::size_t>(n)) {
      if (common.any()) cc.pure = false;
      cc.facets.push_back(clique);
      return;
    }
    for (int v = start; v < m; ++v) {
      if (!cand.test(v)) continue;
      clique.push_back(v);
      grow(common & nb[v], cand & nb[v], v + 1);
      clique.pop_back();
    }
  };
  grow(all, all, 0);
  cc.h = h_from_f(cc.f);
  for (const auto& c : cc.facets) {
    RationalMatrix mtx(n, n);
    for (int r = 0; r < n; ++r)
      for (int j = 0; j < n; ++j) mtx(r, j) = rs.roots[cr.td.ap.root[c[r]]].coords[j];
    BigRational d = determinant(mtx);
    if (d != 1 && d != -1) throw NonUnimodularCluster("cluster with determinant " + rat_str(d));
  }
  return cc;
}

BigInt n_phi(const CoxeterData& cd) {
  BigRational r = 1;
  for (int e : cd.exponents) r *= make_rat(e + cd.h + 1, e + 1);
  if (r.get_den() != 1) throw Error("N(Phi) is not an integer");
  return r.get_num();
}

std::vector<BigInt> narayana(char family, int n) {
  auto C = [](long a, long b) {
    BigInt c;
    if (b < 0 || b > a) return BigInt(0);
    mpz_bin_uiui(c.get_mpz_t(), a, b);
    return c;
  };
  std::vector<BigInt> out;
  auto table = [&](std::initializer_list<long> v) {
    for (long x : v) out.emplace_back(x);
  };
  switch (family) {
    case 'A':
      for (int k = 0; k <= n; ++k) out.push_back(C(n + 1, k) * C(n + 1, k + 1) / (n + 1));
      break;
    case 'B':
    case 'C':
      for (int k = 0; k <= n; ++k) out.push_back(C(n, k) * C(n, k));
      break;
    case 'D':
      out.push_back(1);
      for (int k = 1; k < n; ++k) {
        BigRational t = BigRational(C(n, k) * C(n, k)) - BigRational(n, n - 1) * BigRational(C(n - 1, k - 1) * C(n - 1, k));
        out.push_back(t.get_num());
      }
      out.push_back(1);
      break;
    case 'E':
      if (n == 6) table({1, 36, 204, 351, 204, 36, 1});
      if (n == 7) table({1, 63, 546, 1470, 1470, 546, 63, 1});
      if (n == 8) table({1, 120, 1540, 6120, 9518, 6120, 1540, 120, 1});
      break;
    case 'F':
      table({1, 24, 55, 24, 1});
      break;
    case 'G':
      table({1, 6, 1});
      break;
  }
  if (out.empty()) throw Error("no Narayana numbers for this type");
  return out;
}

SupportFunction support_function(const RootSystem& rs) {
  TauData td = tau_data(rs);
  WeightData wd = weight_data(rs);
  int m = td.ap.size(), n = rs.n();
  SupportFunction sf;
  sf.F.assign(m, BigRational(0));
  std::vector<char> known(m, 0);
  std::vector<int> queue;
  for (int i = 0; i < n; ++i) {
    int k = td.ap.neg_simple(i);
    if (known[k] && sf.F[k] != wd.rho_coroot[i]) throw OrbitConflict("conflicting seed values");
    sf.F[k] = wd.rho_coroot[i];
    known[k] = 1;
    queue.push_back(k);
  }
  for (std::size_t q = 0; q < queue.size(); ++q) {
    int k = queue[q];
    for (int nb : {td.plus[k], td.minus[k]}) {
      if (!known[nb]) {
        known[nb] = 1;
        sf.F[nb] = sf.F[k];
        queue.push_back(nb);
      } else if (sf.F[nb] != sf.F[k]) {
        throw OrbitConflict("support function is not constant on a tau orbit");
      }
    }
  }
  for (int k = 0; k < m; ++k)
    if (!known[k]) throw OrbitConflict("tau orbit without a negative simple root");
  Perm w0 = longest_element_perm(rs);
  for (int i = 0; i < n; ++i) {
    int img = rs.neg(static_cast<unsigned char>(w0[rs.simple(i)]));  // -w0(alpha_i)
    int j = static_cast<int>(std::find(rs.roots[img].coords.begin(), rs.roots[img].coords.end(), 1) -
                             rs.roots[img].coords.begin());
    if (sf.F[td.ap.neg_simple(i)] != sf.F[td.ap.neg_simple(j)]) throw OrbitConflict("F is not -w0 invariant");
  }
  for (int j = 0; j < n; ++j) {
    BigRational s = 0;
    for (int i = 0; i < n; ++i) s += BigRational(static_cast<long>(rs.cartan(i, j))) * sf.F[td.ap.neg_simple(i)];
    if (s <= 0) throw InequalityViolation("support function fails the positivity condition");
  }
  return sf;
}

namespace {

RationalMatrix cluster_matrix(const RootSystem& rs, const AlmostPositiveRoots& ap, const std::vector<int>& c) {
  int n = rs.n();
  RationalMatrix m(n, n);
  for (int r = 0; r < n; ++r)
    for (int j = 0; j < n; ++j) m(r, j) = rs.roots[ap.root[c[r]]].coords[j];
  return m;
}

}  // namespace

AssociahedronPolytope build_polytope(const RootSystem& rs, const ClusterComplexData& cc, const SupportFunction& sf) {
  AssociahedronPolytope P;
  AlmostPositiveRoots ap = almost_positive(rs);
  int n = rs.n(), m = ap.size();
  P.facet_root = ap.root;
  P.rhs = sf.F;
  for (const auto& c : cc.facets) {
    RationalVector b(n);
    for (int r = 0; r < n; ++r) b(r) = sf.F[c[r]];
    RationalVector z;
    try {
      z = solve_linear(cluster_matrix(rs, ap, c), b);
    } catch (const SingularMatrix&) {
      throw SingularClusterSystem("singular cluster system");
    }
    std::vector<int> tight;
    for (int k = 0; k < m; ++k) {
      BigRational v = 0;
      for (int j = 0; j < n; ++j) v += BigRational(rs.roots[ap.root[k]].coords[j]) * z(j);
      bool in = std::binary_search(c.begin(), c.end(), k);
      if (v > sf.F[k] || (v == sf.F[k]) != in) throw InequalityViolation("vertex violates the facet inequalities");
      if (v == sf.F[k]) tight.push_back(k);
    }
    if (static_cast<int>(tight.size()) != n) throw InequalityViolation("polytope is not simple");
    P.clusters.push_back(tight);
    P.vertices.push_back(z);
  }
  for (std::size_t a = 0; a < P.clusters.size(); ++a)
    for (std::size_t b = a + 1; b < P.clusters.size(); ++b) {
      std::vector<int> common;
      std::set_intersection(P.clusters[a].begin(), P.clusters[a].end(), P.clusters[b].begin(), P.clusters[b].end(),
                            std::back_inserter(common));
      if (static_cast<int>(common.size()) == n - 1) P.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
    }
  return P;
}

FanReport fan_checks(const RootSystem& rs, const ClusterComplexData& cc, const CoxeterGroup* group, int samples,
                     unsigned long seed) {
  FanReport rep;
  AlmostPositiveRoots ap = almost_positive(rs);
  int n = rs.n();
  std::vector<RationalMatrix> inv;  // maps a vector to its coefficients on the cluster's rays
  for (const auto& c : cc.facets) {
    RationalMatrix rays = cluster_matrix(rs, ap, c).transpose();
    if (determinant(rays) == 0) {
      rep.simplicial = false;
      inv.push_back(RationalMatrix::Zero(n, n));
    } else {
      inv.push_back(inverse(rays));
    }
  }
  std::map<std::vector<int>, int> walls;
  for (const auto& c : cc.facets)
    for (int skip = 0; skip < n; ++skip) {
      std::vector<int> w;
      for (int r = 0; r < n; ++r)
        if (r != skip) w.push_back(c[r]);
      ++walls[w];
    }
  rep.walls = static_cast<int>(walls.size());
  for (const auto& [w, cnt] : walls)
    if (cnt != 2) ++rep.bad_walls;

  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    RationalVector v(n);
    for (int j = 0; j < n; ++j) v(j) = static_cast<long>(rng() % 2001) - 1000;
    int closed = 0, interior = 0;
    bool on_wall = false;
    for (const auto& A : inv) {
      RationalVector lam = A * v;
      bool nonneg = true, positive = true;
      for (int j = 0; j < n; ++j) {
        if (lam(j) < 0) nonneg = false;
        if (lam(j) <= 0) positive = false;
      }
      if (nonneg) {
        ++closed;
        if (positive)
          ++interior;
        else
          on_wall = true;
      }
    }
    ++rep.samples;
    if (closed == 0) ++rep.uncovered;
    if (!on_wall && interior != 1) ++rep.not_unique;
  }

  if (group) {
    WeightData wd = weight_data(rs);
    Bipartition parts = bipartition(rs.cartan);
    RationalMatrix L = wd.omega;
    for (int i = 0; i < n; ++i)
      if (parts.eps[i] < 0) L.col(i) = -L.col(i);
    std::vector<RationalMatrix> image_inv;
    for (const auto& c : cc.facets) image_inv.push_back(inverse(RationalMatrix(L * cluster_matrix(rs, ap, c).transpose())));
    rep.regions_per_cone.assign(cc.facets.size(), 0);
    for (int w = 0; w < group->size(); ++w) {
      RationalMatrix rays = to_rational(perm_matrix(rs, group->elems[w])) * wd.omega;
      ++rep.regions;
      for (std::size_t c = 0; c < image_inv.size(); ++c) {
        RationalMatrix lam = image_inv[c] * rays;
        bool inside = true;
        for (int i = 0; i < n && inside; ++i)
          for (int j = 0; j < n && inside; ++j) inside = lam(i, j) >= 0;
        if (inside) {
          ++rep.regions_contained;
          ++rep.regions_per_cone[c];
          break;
        }
      }
    }
  }
  return rep;
}

}  // namespace ga
