#include "ga/rootsys.hpp"

#include <algorithm>
#include <numeric>
#include <set>

namespace ga {

Coords simple_reflect(const CartanMatrix& a, int i, const Coords& v) {
  long long s = 0;
  for (int j = 0; j < a.n(); ++j) s += a(i, j) * v[j];
  Coords w = v;
  w[i] -= static_cast<int>(s);
  return w;
}

int RootSystem::index(const Coords& c) const {
  auto it = index_.find(c);
  return it == index_.end() ? -1 : it->second;
}

long long RootSystem::inner(const Coords& a, const Coords& b) const {
  long long s = 0;
  for (int i = 0; i < n(); ++i)
    for (int j = 0; j < n(); ++j) s += a[i] * gram(i, j) * b[j];
  return s;
}

Coords RootSystem::reflect(const Coords& beta, const Coords& v) const {
  long long num = 2 * inner(v, beta), den = inner(beta, beta);
  if (num % den) throw Error("non-integral reflection coefficient");
  long long k = num / den;
  Coords w = v;
  for (int i = 0; i < n(); ++i) w[i] -= static_cast<int>(k * beta[i]);
  return w;
}

RootSystem generate(const CartanMatrix& a) {
  RootSystem rs;
  rs.cartan = a;
  int n = a.n();
  rs.d = symmetrizer(a);
  rs.gram = IntMatrix(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) rs.gram(i, j) = rs.d[i] * a(i, j);

  std::set<Coords> seen;
  std::vector<Coords> queue;
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    seen.insert(e);
    queue.push_back(e);
  }
  std::size_t budget = 10 * static_cast<std::size_t>(n) * n;
  for (std::size_t k = 0; k < queue.size(); ++k) {
    for (int i = 0; i < n; ++i) {
      Coords w = simple_reflect(a, i, queue[k]);
      if (seen.insert(w).second) {
        if (seen.size() > budget) throw ClosureBudgetExceeded("root closure exceeded 10 n^2 roots");
        queue.push_back(w);
      }
    }
  }
  std::vector<Coords> pos;
  for (const auto& c : seen) {
    bool nonneg = std::all_of(c.begin(), c.end(), [](int x) { return x >= 0; });
    bool nonpos = std::all_of(c.begin(), c.end(), [](int x) { return x <= 0; });
    if (!nonneg && !nonpos) throw Error("root with mixed signs");
    if (nonneg) pos.push_back(c);
  }
  auto height = [](const Coords& c) { return std::accumulate(c.begin(), c.end(), 0); };
  std::sort(pos.begin(), pos.end(), [&](const Coords& x, const Coords& y) {
    int hx = height(x), hy = height(y);
    if (hx != hy) return hx < hy;
    return x > y;
  });
  if (2 * pos.size() != seen.size()) throw Error("root set is not symmetric");
  rs.npos_ = static_cast<int>(pos.size());
  std::vector<Coords> all = pos;
  for (const auto& c : pos) {
    Coords m = c;
    for (int& x : m) x = -x;
    all.push_back(m);
  }
  for (std::size_t k = 0; k < all.size(); ++k) {
    Root r;
    r.coords = all[k];
    r.height = height(all[k]);
    long long d_alpha2 = rs.inner(r.coords, r.coords);  // = 2 d_alpha
    r.coroot.resize(n);
    for (int i = 0; i < n; ++i) {
      long long num = 2 * r.coords[i] * rs.d[i];
      if (num % d_alpha2) throw Error("non-integral coroot coordinate");
      r.coroot[i] = static_cast<int>(num / d_alpha2);
    }
    rs.index_[all[k]] = static_cast<int>(k);
    rs.roots.push_back(std::move(r));
  }
  rs.simple_.resize(n);
  for (int i = 0; i < n; ++i) {
    Coords e(n, 0);
    e[i] = 1;
    rs.simple_[i] = rs.index(e);
  }
  rs.sref_.assign(n, std::vector<int>(all.size()));
  for (int i = 0; i < n; ++i)
    for (std::size_t k = 0; k < all.size(); ++k) rs.sref_[i][k] = rs.index(simple_reflect(a, i, all[k]));
  return rs;
}

RootPoset root_poset(const RootSystem& rs) {
  RootPoset p;
  int m = rs.num_positive();
  p.size = m;
  p.leq.assign(m, std::vector<char>(m, 0));
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      bool ok = true;
      for (int i = 0; i < rs.n() && ok; ++i) ok = rs.roots[y].coords[i] >= rs.roots[x].coords[i];
      p.leq[x][y] = ok;
    }
  for (int x = 0; x < m; ++x)
    for (int y = 0; y < m; ++y) {
      if (x == y || !p.leq[x][y]) continue;
      bool cover = true;
      for (int z = 0; z < m && cover; ++z)
        if (z != x && z != y && p.leq[x][z] && p.leq[z][y]) cover = false;
      if (cover) p.covers.emplace_back(x, y);
    }
  return p;
}

IntMatrix reflection_matrix(const CartanMatrix& a, int i) {
  int n = a.n();
  IntMatrix s = IntMatrix::Identity(n, n);
  for (int j = 0; j < n; ++j) s(i, j) -= a(i, j);
  return s;
}

IntMatrix bipartite_coxeter_matrix(const CartanMatrix& a) {
  Bipartition p = bipartition(a);
  IntMatrix c = IntMatrix::Identity(a.n(), a.n());
  for (int i : p.plus) c = c * reflection_matrix(a, i);
  for (int i : p.minus) c = c * reflection_matrix(a, i);
  return c;
}

CoxeterData coxeter_data(const RootSystem& rs) {
  CoxeterData cd;
  int n = rs.n();
  IntMatrix c = bipartite_coxeter_matrix(rs.cartan);
  IntMatrix p = c;
  IntMatrix id = IntMatrix::Identity(n, n);
  int h = 1;
  while (p != id) {
    p = p * c;
    if (++h > 1000) throw Error("Coxeter element order too large");
  }
  cd.h = h;
  for (const auto& comp : components(rs.cartan)) {
    std::vector<int> count;
    for (int k = 0; k < rs.num_positive(); ++k) {
      const Root& r = rs.roots[k];
      bool inside = std::any_of(comp.begin(), comp.end(), [&](int i) { return r.coords[i] > 0; });
      if (!inside) continue;
      if (static_cast<int>(count.size()) < r.height) count.resize(r.height, 0);
      ++count[r.height - 1];
    }
    for (std::size_t i = 1; i <= comp.size(); ++i) {
      int e = 0;
      for (int x : count)
        if (x >= static_cast<int>(i)) ++e;
      cd.exponents.push_back(e);
    }
  }
  std::sort(cd.exponents.begin(), cd.exponents.end());
  cd.group_order = 1;
  for (int e : cd.exponents) cd.group_order *= e + 1;
  return cd;
}

WeightData weight_data(const RootSystem& rs) {
  int n = rs.n();
  WeightData wd;
  // <omega_i, alpha_j^vee> = sum_k c_k <alpha_k, alpha_j> * 2 / <alpha_j, alpha_j>
  RationalMatrix pairing(n, n);
  for (int j = 0; j < n; ++j)
    for (int k = 0; k < n; ++k)
      pairing(j, k) = BigRational(static_cast<long>(rs.gram(k, j))) / static_cast<long>(rs.d[j]);
  wd.omega = inverse(pairing);
  wd.rho_coroot.assign(n, BigRational(0));
  for (int k = 0; k < rs.num_positive(); ++k)
    for (int i = 0; i < n; ++i) wd.rho_coroot[i] += rs.roots[k].coroot[i];
  for (auto& x : wd.rho_coroot) x /= 2;
  return wd;
}

}  // namespace ga
