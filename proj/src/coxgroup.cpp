#include "ga/coxgroup.hpp"

#include <algorithm>
#include <random>

namespace ga {

Perm identity_perm(const RootSystem& rs) {
  if (rs.size() > 255) throw Error("root system too large for byte permutations");
  Perm p(rs.size(), 0);
  for (int k = 0; k < rs.size(); ++k) p[k] = static_cast<char>(k);
  return p;
}

Perm simple_perm(const RootSystem& rs, int i) {
  Perm p(rs.size(), 0);
  for (int k = 0; k < rs.size(); ++k) p[k] = static_cast<char>(rs.sref(i, k));
  return p;
}

static inline int at(const Perm& p, int k) { return static_cast<unsigned char>(p[k]); }

Perm compose(const Perm& a, const Perm& b) {
  Perm c(b.size(), 0);
  for (std::size_t k = 0; k < b.size(); ++k) c[k] = a[at(b, static_cast<int>(k))];
  return c;
}

Perm invert(const Perm& p) {
  Perm q(p.size(), 0);
  for (std::size_t k = 0; k < p.size(); ++k) q[at(p, static_cast<int>(k))] = static_cast<char>(k);
  return q;
}

int perm_length(const RootSystem& rs, const Perm& p) {
  int l = 0;
  for (int k = 0; k < rs.num_positive(); ++k)
    if (at(p, k) >= rs.num_positive()) ++l;
  return l;
}

Perm longest_element_perm(const RootSystem& rs) {
  Perm p = identity_perm(rs);
  while (true) {
    int i = 0;
    while (i < rs.n() && at(p, rs.simple(i)) >= rs.num_positive()) ++i;
    if (i == rs.n()) return p;
    p = compose(p, simple_perm(rs, i));
  }
}

IntMatrix perm_matrix(const RootSystem& rs, const Perm& p) {
  int n = rs.n();
  IntMatrix m(n, n);
  for (int j = 0; j < n; ++j) {
    const Coords& c = rs.roots[at(p, rs.simple(j))].coords;
    for (int i = 0; i < n; ++i) m(i, j) = c[i];
  }
  return m;
}

int CoxeterGroup::find(const Perm& p) const {
  auto it = index_.find(p);
  return it == index_.end() ? -1 : it->second;
}

int CoxeterGroup::multiply(int a, int b) const { return find(compose(elems[a], elems[b])); }

int CoxeterGroup::inverse(int a) const { return find(invert(elems[a])); }

int CoxeterGroup::from_word(const std::vector<int>& word) const {
  int w = 0;
  for (int i : word) w = rmul[w][i];
  return w;
}

bool CoxeterGroup::left_descent(int w, int i) const {
  // l(s_i w) < l(w) iff w^{-1}(alpha_i) < 0
  const Perm& p = elems[w];
  int target = rs->simple(i);
  for (int k = 0; k < rs->size(); ++k)
    if (at(p, k) == target) return k >= rs->num_positive();
  return false;
}

std::vector<int> CoxeterGroup::lexmin_word(int w) const {
  std::vector<int> word;
  while (length[w] > 0) {
    int i = 0;
    while (!left_descent(w, i)) ++i;
    word.push_back(i);
    w = find(compose(simple_perm(*rs, i), elems[w]));
  }
  return word;
}

std::string CoxeterGroup::word_label(int w) const {
  auto word = lexmin_word(w);
  if (word.empty()) return "e";
  std::string s;
  for (int i : word) s += "s" + std::to_string(i + 1);
  return s;
}

InvSet CoxeterGroup::inversions(int w) const {
  Perm q = invert(elems[w]);
  InvSet s;
  for (int k = 0; k < rs->num_positive(); ++k)
    if (at(q, k) >= rs->num_positive()) s.set(k);
  return s;
}

CoxeterGroup build_group(const RootSystem& rs, std::size_t budget) {
  CoxeterGroup g;
  g.rs = std::make_shared<const RootSystem>(rs);
  int n = rs.n();
  std::vector<Perm> gens;
  for (int i = 0; i < n; ++i) gens.push_back(simple_perm(rs, i));
  Perm id = identity_perm(rs);
  g.elems.push_back(id);
  g.length.push_back(0);
  g.index_[id] = 0;
  for (std::size_t k = 0; k < g.elems.size(); ++k) {
    std::vector<int> row(n);
    for (int i = 0; i < n; ++i) {
      Perm p = compose(g.elems[k], gens[i]);
      auto [it, inserted] = g.index_.try_emplace(p, static_cast<int>(g.elems.size()));
      if (inserted) {
        if (g.elems.size() >= budget) throw BudgetExceeded("group order exceeds budget " + std::to_string(budget));
        g.elems.push_back(p);
        g.length.push_back(perm_length(rs, p));
      }
      row[i] = it->second;
    }
    g.rmul.push_back(row);
  }
  g.w0 = static_cast<int>(std::max_element(g.length.begin(), g.length.end()) - g.length.begin());
  for (int k = 0; k < rs.num_positive(); ++k) {
    Perm p(rs.size(), 0);
    for (int j = 0; j < rs.size(); ++j) p[j] = static_cast<char>(rs.index(rs.reflect(rs.roots[k].coords, rs.roots[j].coords)));
    int id_ = g.find(p);
    if (id_ < 0) throw Error("reflection missing from the group");
    g.reflections.push_back(id_);
  }
  return g;
}

std::vector<BigInt> reduced_word_counts(const CoxeterGroup& g) {
  // elements are stored in nondecreasing length order
  std::vector<BigInt> r(g.size(), 0);
  r[0] = 1;
  for (int w = 1; w < g.size(); ++w)
    for (int i = 0; i < g.rs->n(); ++i) {
      int v = g.rmul[w][i];
      if (g.length[v] < g.length[w]) r[w] += r[v];
    }
  return r;
}

BigInt count_reduced_words(const CoxeterGroup& g, int w) {
  // restrict the recursion to the lower interval of w
  std::vector<int> order{w};
  std::unordered_map<int, BigInt> memo;
  std::vector<char> seen(g.size(), 0);
  seen[w] = 1;
  for (std::size_t k = 0; k < order.size(); ++k)
    for (int i = 0; i < g.rs->n(); ++i) {
      int v = g.rmul[order[k]][i];
      if (g.length[v] < g.length[order[k]] && !seen[v]) {
        seen[v] = 1;
        order.push_back(v);
      }
    }
  std::sort(order.begin(), order.end(), [&](int a, int b) { return g.length[a] < g.length[b]; });
  for (int v : order) {
    if (g.length[v] == 0) {
      memo[v] = 1;
      continue;
    }
    BigInt s = 0;
    for (int i = 0; i < g.rs->n(); ++i) {
      int u = g.rmul[v][i];
      if (g.length[u] < g.length[v]) s += memo[u];
    }
    memo[v] = s;
  }
  return memo[w];
}

std::optional<int> weak_meet(const CoxeterGroup& g, const std::vector<InvSet>& inv, int u, int v) {
  InvSet common = inv[u] & inv[v];
  int best = -1;
  InvSet uni;
  for (int w = g.size() - 1; w >= 0; --w) {
    if ((inv[w] & ~common).any()) continue;
    if (best < 0) best = w;
    uni |= inv[w];
  }
  if (best < 0 || uni != inv[best]) return std::nullopt;
  return best;
}

WeakOrder weak_order(const CoxeterGroup& g, std::size_t full_threshold, int samples, unsigned long seed) {
  WeakOrder wo;
  for (int w = 0; w < g.size(); ++w)
    for (int i = 0; i < g.rs->n(); ++i) {
      int v = g.rmul[w][i];
      if (g.length[v] == g.length[w] + 1) wo.covers.emplace_back(w, v);
    }
  std::vector<InvSet> inv(g.size());
  for (int w = 0; w < g.size(); ++w) inv[w] = g.inversions(w);
  for (int w = 0; w < g.size(); ++w)
    if (static_cast<int>(inv[w].count()) != g.length[w]) throw LatticeCheckFailed("inversion set size differs from length");
  auto meet = [&](int a, int b) {
    auto m = weak_meet(g, inv, a, b);
    if (!m) throw LatticeCheckFailed("pair without a meet in the weak order");
    return *m;
  };
  if (static_cast<std::size_t>(g.size()) <= full_threshold) {
    wo.lattice_checked_full = true;
    for (int a = 0; a < g.size(); ++a)
      for (int b = a + 1; b < g.size(); ++b) {
        meet(a, b);
        ++wo.pairs_checked;
      }
  }
  std::mt19937_64 rng(seed);
  for (int s = 0; s < samples; ++s) {
    int a = static_cast<int>(rng() % g.size()), b = static_cast<int>(rng() % g.size()),
        c = static_cast<int>(rng() % g.size());
    if (meet(a, b) != meet(b, a)) throw LatticeCheckFailed("meet not commutative");
    if (meet(meet(a, b), c) != meet(a, meet(b, c))) throw LatticeCheckFailed("meet not associative");
    ++wo.pairs_checked;
  }
  return wo;
}

std::vector<int> bipartite_coxeter_word(const CartanMatrix& a) {
  Bipartition p = bipartition(a);
  std::vector<int> w = p.plus;
  w.insert(w.end(), p.minus.begin(), p.minus.end());
  return w;
}

AbsoluteInterval absolute_interval(const CoxeterGroup& g, const std::vector<int>& word) {
  int n = g.rs->n();
  std::vector<int> sorted = word;
  std::sort(sorted.begin(), sorted.end());
  for (int i = 0; i < n; ++i)
    if (static_cast<int>(sorted.size()) != n || sorted[i] != i)
      throw NotCoxeterElement("word must use each simple reflection exactly once");
  AbsoluteInterval ai;
  ai.c = g.from_word(word);
  ai.reflection_length.assign(g.size(), -1);
  ai.reflection_length[0] = 0;
  std::vector<int> queue{0};
  for (std::size_t k = 0; k < queue.size(); ++k) {
    int w = queue[k];
    for (int t : g.reflections) {
      int v = g.multiply(w, t);
      if (ai.reflection_length[v] < 0) {
        ai.reflection_length[v] = ai.reflection_length[w] + 1;
        queue.push_back(v);
      }
    }
  }
  const auto& L = ai.reflection_length;
  if (L[ai.c] != n) throw NotCoxeterElement("reflection length of c differs from the rank");
  ai.rank_counts.assign(n + 1, 0);
  for (int w = 0; w < g.size(); ++w) {
    int rest = g.multiply(g.inverse(w), ai.c);
    if (L[w] + L[rest] == n) {
      ai.elements.push_back(w);
      ++ai.rank_counts[L[w]];
    }
  }
  return ai;
}

}  // namespace ga
