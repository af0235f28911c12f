#include "ga/cartan.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <queue>
#include <sstream>

#include <json.hpp>

namespace ga {

CartanMatrix::CartanMatrix(IntMatrix a) : a_(std::move(a)) {
  if (a_.rows() != a_.cols() || a_.rows() == 0) throw NotCartanShape("Cartan matrix must be square and non-empty");
  for (int i = 0; i < n(); ++i) {
    if (a_(i, i) != 2) throw NotCartanShape("diagonal entry " + std::to_string(i + 1) + " is not 2");
    for (int j = 0; j < n(); ++j) {
      if (i == j) continue;
      if (a_(i, j) > 0) throw NotCartanShape("positive off-diagonal entry");
      if ((a_(i, j) == 0) != (a_(j, i) == 0)) throw NotCartanShape("zero pattern is not symmetric");
    }
  }
}

std::vector<std::vector<int>> components(const CartanMatrix& a) {
  int n = a.n();
  std::vector<int> comp(n, -1);
  std::vector<std::vector<int>> out;
  for (int s = 0; s < n; ++s) {
    if (comp[s] >= 0) continue;
    std::vector<int> nodes{s};
    comp[s] = static_cast<int>(out.size());
    for (std::size_t k = 0; k < nodes.size(); ++k) {
      int u = nodes[k];
      for (int v = 0; v < n; ++v)
        if (v != u && a(u, v) != 0 && comp[v] < 0) {
          comp[v] = comp[s];
          nodes.push_back(v);
        }
    }
    std::sort(nodes.begin(), nodes.end());
    out.push_back(nodes);
  }
  return out;
}

std::vector<long long> symmetrizer(const CartanMatrix& a) {
  int n = a.n();
  std::vector<BigRational> d(n, BigRational(0));
  std::vector<long long> out(n);
  for (const auto& comp : components(a)) {
    d[comp[0]] = 1;
    std::queue<int> q;
    q.push(comp[0]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v : comp) {
        if (v == u || a(u, v) == 0) continue;
        BigRational want = d[u] * BigRational(static_cast<long>(a(u, v))) / BigRational(static_cast<long>(a(v, u)));
        if (d[v] == 0) {
          d[v] = want;
          q.push(v);
        } else if (d[v] != want) {
          throw NotSymmetrizable("no symmetrizer: inconsistent along a cycle");
        }
      }
    }
    BigInt l = 1, g = 0;
    for (int v : comp) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), d[v].get_den_mpz_t());
    for (int v : comp) {
      BigInt x = d[v].get_num() * (l / d[v].get_den());
      mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
    for (int v : comp) out[v] = BigInt(d[v].get_num() * (l / d[v].get_den()) / g).get_si();
  }
  return out;
}

FiniteCheck validate_finite_type(const IntMatrix& m) {
  CartanMatrix a(m);
  FiniteCheck res;
  auto d = symmetrizer(a);
  int n = a.n();
  RationalMatrix s(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) s(i, j) = BigRational(static_cast<long>(d[i] * a(i, j)));
  for (int k = 1; k <= n; ++k) {
    RationalMatrix lead = s.topLeftCorner(k, k);
    if (determinant(lead) <= 0) return res;
  }
  res.finite = true;
  res.symmetrizer = d;
  return res;
}

std::string DynkinType::str() const {
  std::string s;
  for (const auto& [f, r] : factors) {
    if (!s.empty()) s += "+";
    s += f + std::to_string(r);
  }
  return s;
}

namespace {

std::pair<char, int> classify_component(const CartanMatrix& a, const std::vector<int>& nodes) {
  int k = static_cast<int>(nodes.size());
  if (k == 1) return {'A', 1};
  std::map<int, int> deg;
  std::vector<std::vector<int>> adj(a.n());
  int edges = 0, doubles = 0, triples = 0;
  std::pair<int, int> dbl{-1, -1};
  for (int x = 0; x < k; ++x)
    for (int y = x + 1; y < k; ++y) {
      int u = nodes[x], v = nodes[y];
      if (a(u, v) == 0) continue;
      long long m = a(u, v) * a(v, u);
      ++edges;
      ++deg[u];
      ++deg[v];
      adj[u].push_back(v);
      adj[v].push_back(u);
      if (m == 2) {
        ++doubles;
        dbl = {u, v};
      } else if (m == 3) {
        ++triples;
      } else if (m != 1) {
        throw UnrecognizedDiagram("edge multiplicity " + std::to_string(m));
      }
    }
  if (edges != k - 1) throw UnrecognizedDiagram("diagram is not a tree");
  int maxdeg = 0, branch = -1;
  for (int v : nodes) {
    if (deg[v] > maxdeg) maxdeg = deg[v];
    if (deg[v] == 3) branch = v;
  }
  if (triples) {
    if (k == 2) return {'G', 2};
    throw UnrecognizedDiagram("triple edge in rank > 2");
  }
  if (doubles) {
    if (doubles > 1 || maxdeg > 2) throw UnrecognizedDiagram("bad multiply-laced diagram");
    if (k == 2) return {'B', 2};
    auto [u, v] = dbl;
    if (deg[u] == 1 || deg[v] == 1) {
      int leaf = deg[u] == 1 ? u : v, other = leaf == u ? v : u;
      return {a(leaf, other) == -2 ? 'B' : 'C', k};
    }
    if (k == 4) return {'F', 4};
    throw UnrecognizedDiagram("double edge in the interior");
  }
  if (maxdeg <= 2) return {'A', k};
  if (maxdeg > 3) throw UnrecognizedDiagram("node of degree > 3");
  std::vector<int> arms;
  for (int start : adj[branch]) {
    int len = 1, prev = branch, cur = start;
    while (true) {
      if (deg[cur] == 3) throw UnrecognizedDiagram("two branch nodes");
      int next = -1;
      for (int w : adj[cur])
        if (w != prev) next = w;
      if (next < 0) break;
      prev = cur;
      cur = next;
      ++len;
    }
    arms.push_back(len);
  }
  std::sort(arms.begin(), arms.end());
  if (arms[0] == 1 && arms[1] == 1) return {'D', k};
  if (arms[0] == 1 && arms[1] == 2 && arms[2] >= 2 && arms[2] <= 4) return {'E', k};
  throw UnrecognizedDiagram("unknown simply-laced tree");
}

}  // namespace

DynkinType classify(const CartanMatrix& a) {
  DynkinType t;
  for (const auto& comp : components(a)) t.factors.push_back(classify_component(a, comp));
  std::sort(t.factors.begin(), t.factors.end());
  return t;
}

Bipartition bipartition(const CartanMatrix& a) {
  int n = a.n();
  Bipartition p;
  p.eps.assign(n, 0);
  for (const auto& comp : components(a)) {
    p.eps[comp[0]] = 1;
    std::queue<int> q;
    q.push(comp[0]);
    while (!q.empty()) {
      int u = q.front();
      q.pop();
      for (int v = 0; v < n; ++v) {
        if (v == u || a(u, v) == 0) continue;
        if (p.eps[v] == 0) {
          p.eps[v] = -p.eps[u];
          q.push(v);
        } else if (p.eps[v] == p.eps[u]) {
          throw OddCycle("diagram contains an odd cycle");
        }
      }
    }
  }
  for (int i = 0; i < n; ++i) (p.eps[i] > 0 ? p.plus : p.minus).push_back(i);
  return p;
}

IntMatrix b_of_a(const CartanMatrix& a, const Bipartition& parts) {
  int n = a.n();
  IntMatrix b = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      if (i != j) b(i, j) = parts.eps[i] > 0 ? a(i, j) : -a(i, j);
  return b;
}

bool valid_family_rank(char family, int rank) {
  switch (family) {
    case 'A':
      return rank >= 1;
    case 'B':
      return rank >= 2;
    case 'C':
      return rank >= 3;
    case 'D':
      return rank >= 4;
    case 'E':
      return rank >= 6 && rank <= 8;
    case 'F':
      return rank == 4;
    case 'G':
      return rank == 2;
  }
  return false;
}

CartanMatrix standard_cartan(char family, int n) {
  if (!valid_family_rank(family, n)) throw Error(std::string("no built-in type ") + family + std::to_string(n));
  IntMatrix m = IntMatrix::Zero(n, n);
  for (int i = 0; i < n; ++i) m(i, i) = 2;
  auto link = [&](int i, int j) { m(i, j) = m(j, i) = -1; };
  switch (family) {
    case 'A':
    case 'B':
    case 'C':
      for (int i = 0; i + 1 < n; ++i) link(i, i + 1);
      if (family == 'B') m(0, 1) = -2;
      if (family == 'C') m(1, 0) = -2;
      break;
    case 'D':
      link(0, 2);
      link(1, 2);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'E':
      link(0, 2);
      link(1, 3);
      for (int i = 2; i + 1 < n; ++i) link(i, i + 1);
      break;
    case 'F':
      link(0, 1);
      link(1, 2);
      link(2, 3);
      m(2, 1) = -2;
      break;
    case 'G':
      m(0, 1) = -3;
      m(1, 0) = -1;
      break;
  }
  return CartanMatrix(m);
}

CartanMatrix standard_cartan(const DynkinType& t) {
  int n = 0;
  for (const auto& f : t.factors) n += f.second;
  IntMatrix m = IntMatrix::Zero(n, n);
  int off = 0;
  for (const auto& [fam, r] : t.factors) {
    m.block(off, off, r, r) = standard_cartan(fam, r).matrix();
    off += r;
  }
  return CartanMatrix(m);
}

DynkinType parse_type_name(const std::string& s) {
  DynkinType t;
  std::string tok;
  std::stringstream ss(s);
  while (std::getline(ss, tok, '+')) {
    if (tok.size() < 2 || !std::isupper(static_cast<unsigned char>(tok[0])))
      throw Error("bad type name '" + s + "'");
    int r = 0;
    try {
      std::size_t used = 0;
      r = std::stoi(tok.substr(1), &used);
      if (used != tok.size() - 1) throw Error("");
    } catch (...) {
      throw Error("bad type name '" + s + "'");
    }
    if (!valid_family_rank(tok[0], r)) throw Error("no built-in type " + tok);
    t.factors.emplace_back(tok[0], r);
  }
  if (t.factors.empty()) throw Error("empty type name");
  return t;
}

CartanMatrix parse_cartan(const std::string& raw) {
  std::string text = raw;
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.back()))) text.pop_back();
  while (!text.empty() && std::isspace(static_cast<unsigned char>(text.front()))) text.erase(text.begin());
  if (text.rfind("matrix:", 0) == 0) {
    nlohmann::json j;
    try {
      j = nlohmann::json::parse(text.substr(7));
    } catch (const std::exception& e) {
      throw Error(std::string("bad matrix text: ") + e.what());
    }
    if (!j.is_array() || j.empty()) throw Error("matrix must be a non-empty list of rows");
    int n = static_cast<int>(j.size());
    IntMatrix m(n, n);
    for (int i = 0; i < n; ++i) {
      if (!j[i].is_array() || static_cast<int>(j[i].size()) != n) throw Error("matrix must be square");
      for (int k = 0; k < n; ++k) {
        if (!j[i][k].is_number_integer()) throw Error("matrix entries must be integers");
        m(i, k) = j[i][k].get<long long>();
      }
    }
    return CartanMatrix(m);
  }
  if (text.rfind("type:", 0) == 0) text = text.substr(5);
  return standard_cartan(parse_type_name(text));
}

std::string cartan_text(const CartanMatrix& a) {
  std::string s = "matrix:[";
  for (int i = 0; i < a.n(); ++i) {
    s += i ? ",[" : "[";
    for (int j = 0; j < a.n(); ++j) s += (j ? "," : "") + std::to_string(a(i, j));
    s += "]";
  }
  return s + "]";
}

}  // namespace ga
