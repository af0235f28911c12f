#include "ga/mutation.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <set>
#include <unordered_map>

namespace ga {

IntMatrix matrix_mutate(const IntMatrix& bt, int k) {
  IntMatrix r = bt;
  for (Eigen::Index i = 0; i < bt.rows(); ++i)
    for (Eigen::Index j = 0; j < bt.cols(); ++j) {
      if (i == k || j == k) {
        r(i, j) = -bt(i, j);
      } else if (bt(i, k) * bt(k, j) > 0) {
        long long t;
        if (__builtin_mul_overflow(std::llabs(bt(i, k)), bt(k, j), &t) ||
            __builtin_add_overflow(bt(i, j), t, &r(i, j)))
          throw Error("matrix mutation overflow");
      }
    }
  return r;
}

std::optional<std::vector<long long>> skew_symmetrizer(const IntMatrix& bt) {
  int n = static_cast<int>(bt.cols());
  IntMatrix b = bt.topRows(n);
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (i == j) {
        if (b(i, i) != 0) return std::nullopt;
        a(i, i) = 2;
        continue;
      }
      if ((b(i, j) == 0) != (b(j, i) == 0)) return std::nullopt;
      if (b(i, j) != 0 && (b(i, j) > 0) == (b(j, i) > 0)) return std::nullopt;
      a(i, j) = -std::llabs(b(i, j));
    }
  try {
    return symmetrizer(CartanMatrix(a));
  } catch (const NotSymmetrizable&) {
    return std::nullopt;
  }
}

Seed initial_seed(const IntMatrix& btilde, const VarList& names, bool check_rank) {
  Seed s;
  if (btilde.rows() < btilde.cols() || static_cast<Eigen::Index>(names.size()) != btilde.rows())
    throw Error("seed needs m >= n and m variable names");
  if (!skew_symmetrizer(btilde)) throw Error("principal part is not skew-symmetrizable");
  if (check_rank && matrix_rank(btilde) != btilde.cols()) throw Error("extended exchange matrix must have rank n");
  s.btilde = btilde;
  s.vars = make_vars(names);
  for (int i = 0; i < s.n(); ++i) s.cluster.push_back(LaurentPoly::variable(s.vars, i));
  return s;
}

Seed seed_mutate(const Seed& s, int k) {
  if (k < 0 || k >= s.n()) throw Error("mutation direction out of range");
  LaurentPoly plus = LaurentPoly::constant(s.vars, 1), minus = plus;
  for (int i = 0; i < s.m(); ++i) {
    long long b = s.btilde(i, k);
    if (b == 0) continue;
    LaurentPoly x = i < s.n() ? s.cluster[i] : s.frozen(i - s.n());
    LaurentPoly p = x.pow(static_cast<unsigned>(std::llabs(b)));
    if (b > 0)
      plus = plus * p;
    else
      minus = minus * p;
  }
  Seed t = s;
  t.cluster[k] = laurent_exact_div(plus + minus, s.cluster[k]);
  t.btilde = matrix_mutate(s.btilde, k);
  return t;
}

CanonicalSeed canonical_seed(const Seed& s) {
  CanonicalSeed c;
  int n = s.n(), m = s.m();
  std::vector<std::string> text(n);
  for (int i = 0; i < n; ++i) text[i] = s.cluster[i].str();
  c.order.resize(n);
  std::iota(c.order.begin(), c.order.end(), 0);
  std::sort(c.order.begin(), c.order.end(), [&](int a, int b) { return text[a] < text[b]; });
  for (int p = 0; p + 1 < n; ++p)
    if (text[c.order[p]] == text[c.order[p + 1]]) throw Error("seed with repeated cluster variable");
  c.btilde = IntMatrix(m, n);
  for (int i = 0; i < m; ++i) {
    int src = i < n ? c.order[i] : i;
    for (int j = 0; j < n; ++j) c.btilde(i, j) = s.btilde(src, c.order[j]);
  }
  for (int p = 0; p < n; ++p) {
    c.cluster.push_back(text[c.order[p]]);
    c.key += text[c.order[p]] + "|";
  }
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < n; ++j) c.key += std::to_string(c.btilde(i, j)) + ",";
  return c;
}

ExchangeGraphRecord explore(const Seed& s0, std::size_t budget, std::size_t max_terms) {
  ExchangeGraphRecord rec;
  std::unordered_map<std::string, int> index;
  std::map<std::string, LaurentPoly> vars;
  auto add = [&](const Seed& s) {
    CanonicalSeed c = canonical_seed(s);
    auto [it, inserted] = index.try_emplace(c.key, static_cast<int>(rec.seeds.size()));
    if (inserted) {
      rec.seeds.push_back(s);
      rec.keys.push_back(c.key);
      for (const auto& x : s.cluster) vars.emplace(x.str(), x);
    }
    return std::pair{it->second, inserted};
  };
  add(s0);
  rec.closed = true;
  for (std::size_t q = 0; q < rec.seeds.size(); ++q) {
    for (int k = 0; k < s0.n(); ++k) {
      Seed t = seed_mutate(rec.seeds[q], k);
      if (t.cluster[k].terms().size() > max_terms) {
        rec.closed = false;
        rec.term_limit_hit = true;
        continue;
      }
      CanonicalSeed c = canonical_seed(t);
      auto it = index.find(c.key);
      int v;
      if (it == index.end()) {
        if (rec.seeds.size() >= budget) {
          rec.closed = false;
          continue;
        }
        v = add(t).first;
      } else {
        v = it->second;
      }
      if (static_cast<int>(q) <= v) rec.edges.emplace_back(static_cast<int>(q), k, v);
    }
  }
  std::map<std::string, int> vidx;
  for (const auto& [text, x] : vars) {
    vidx[text] = static_cast<int>(rec.variables.size());
    rec.variables.push_back(x);
  }
  for (const auto& s : rec.seeds) {
    std::vector<int> ids;
    for (const auto& x : s.cluster) ids.push_back(vidx.at(x.str()));
    std::sort(ids.begin(), ids.end());
    rec.seed_variables.push_back(ids);
  }
  return rec;
}

std::vector<long long> canonical_principal(const IntMatrix& b) {
  int n = static_cast<int>(b.rows());
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<long long> best, cur(static_cast<std::size_t>(n) * n);
  do {
    for (int sign : {1, -1}) {
      for (int i = 0; i < n; ++i)
        for (int j = 0; j < n; ++j) cur[i * n + j] = sign * b(p[i], p[j]);
      if (best.empty() || cur < best) best = cur;
    }
  } while (std::next_permutation(p.begin(), p.end()));
  return best;
}

namespace {

std::string matrix_str(const IntMatrix& b) {
  std::string s = "[";
  for (Eigen::Index i = 0; i < b.rows(); ++i) {
    s += i ? ",[" : "[";
    for (Eigen::Index j = 0; j < b.cols(); ++j) s += (j ? "," : "") + std::to_string(b(i, j));
    s += "]";
  }
  return s + "]";
}

// rows sign-coherent means B = B(A) for A = 2I - |B| under some bipartition
std::optional<CartanMatrix> cartan_if_bipartite(const IntMatrix& b) {
  int n = static_cast<int>(b.rows());
  for (int i = 0; i < n; ++i) {
    bool pos = false, neg = false;
    for (int j = 0; j < n; ++j) {
      pos |= b(i, j) > 0;
      neg |= b(i, j) < 0;
    }
    if (pos && neg) return std::nullopt;
  }
  IntMatrix a(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) a(i, j) = i == j ? 2 : -std::llabs(b(i, j));
  if (!validate_finite_type(a).finite) return std::nullopt;
  return CartanMatrix(a);
}

}  // namespace

FiniteTypeResult detect_finite_type(const IntMatrix& b0, std::size_t budget) {
  FiniteTypeResult res;
  int n = static_cast<int>(b0.rows());
  if (b0.cols() != n || !skew_symmetrizer(b0)) throw Error("detect_finite_type needs a skew-symmetrizable square matrix");
  auto violates = [&](const IntMatrix& b) {
    for (int i = 0; i < n; ++i)
      for (int j = i + 1; j < n; ++j)
        if (std::llabs(b(i, j) * b(j, i)) > 3) return true;
    return false;
  };
  std::set<std::vector<long long>> seen;
  std::vector<IntMatrix> cls;
  auto push = [&](const IntMatrix& b) {
    if (seen.insert(canonical_principal(b)).second) cls.push_back(b);
  };
  push(b0);
  for (std::size_t q = 0; q < cls.size(); ++q) {
    if (violates(cls[q])) {
      res.status = FiniteStatus::infinite;
      res.witness = matrix_str(cls[q]);
      res.class_size = cls.size();
      return res;
    }
    for (int k = 0; k < n; ++k) {
      if (cls.size() >= budget) {
        res.class_size = cls.size();
        return res;
      }
      push(matrix_mutate(cls[q], k));
    }
  }
  res.class_size = cls.size();
  for (const auto& b : cls) {
    if (auto a = cartan_if_bipartite(b)) {
      res.status = FiniteStatus::finite;
      res.type = classify(*a);
      return res;
    }
  }
  return res;
}

Coords denominator_vector(const LaurentPoly& v, int n) {
  Exponent m = v.min_exponents();
  Coords c(n);
  for (int i = 0; i < n; ++i) c[i] = -m[i];
  return c;
}

int denominator_root(const RootSystem& rs, const LaurentPoly& v) {
  Coords c = denominator_vector(v, rs.n());
  int idx = rs.index(c);
  bool ok = idx >= 0 && (rs.roots[idx].positive() || rs.roots[idx].height == -1);
  if (!ok) {
    std::string s;
    for (int x : c) s += std::to_string(x) + " ";
    throw NotAlmostPositive("denominator vector " + s + "is not an almost positive root");
  }
  return idx;
}

PositivityReport observe_positivity(const std::vector<LaurentPoly>& vars) {
  PositivityReport r;
  for (const auto& x : vars) {
    ++r.variables;
    if (!x.coefficients_positive()) r.violations.push_back(x.str());
  }
  return r;
}

PositivityReport observe_positivity(const ExchangeGraphRecord& rec) { return observe_positivity(rec.variables); }

}  // namespace ga
