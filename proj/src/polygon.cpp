#include "ga/polygon.hpp"

#include <algorithm>
#include <functional>
#include <set>
#include <unordered_map>

namespace ga {

Diagonal make_diagonal(int a, int b) { return a < b ? Diagonal{a, b} : Diagonal{b, a}; }

bool crosses(Diagonal d, Diagonal e) {
  auto [a, b] = d;
  auto [c, f] = e;
  return (a < c && c < b && b < f) || (c < a && a < f && f < b);
}

std::vector<Diagonal> Triangulation::sorted_diagonals() const {
  auto d = diagonals;
  std::sort(d.begin(), d.end());
  return d;
}

std::string Triangulation::str() const {
  std::string s = "[";
  bool first = true;
  for (auto [a, b] : sorted_diagonals()) {
    s += (first ? "[" : ",[") + std::to_string(a) + "," + std::to_string(b) + "]";
    first = false;
  }
  return s + "]";
}

int Triangulation::label(Diagonal e) const {
  for (std::size_t k = 0; k < diagonals.size(); ++k)
    if (diagonals[k] == e) return static_cast<int>(k) + 1;
  for (std::size_t k = 0; k < sides.size(); ++k)
    if (sides[k] == e) return n() + 1 + static_cast<int>(k);
  return -1;
}

Triangulation make_triangulation(int ngon, std::vector<Diagonal> diagonals) {
  Triangulation t;
  t.ngon = ngon;
  t.diagonals = std::move(diagonals);
  for (int k = 0; k + 1 < ngon; ++k) t.sides.push_back({k, k + 1});
  t.sides.push_back({0, ngon - 1});
  return t;
}

Triangulation reference_pentagon() {
  Triangulation t;
  t.ngon = 5;
  t.diagonals = {{0, 3}, {1, 3}};
  t.sides = {{1, 2}, {0, 4}, {2, 3}, {0, 1}, {3, 4}};
  return t;
}

EdgeNames reference_pentagon_names() {
  return {{{0, 1}, "q4"}, {{1, 2}, "q1"}, {{2, 3}, "q3"}, {{3, 4}, "q5"},
          {{0, 4}, "q2"}, {{0, 3}, "y1"}, {{1, 3}, "y2"}};
}

namespace {

using DiagSet = std::vector<Diagonal>;

std::vector<DiagSet> sub_triangulations(int i, int j, std::map<std::pair<int, int>, std::vector<DiagSet>>& memo) {
  if (j - i < 2) return {DiagSet{}};
  auto it = memo.find({i, j});
  if (it != memo.end()) return it->second;
  std::vector<DiagSet> out;
  for (int k = i + 1; k < j; ++k) {
    auto left = sub_triangulations(i, k, memo);
    auto right = sub_triangulations(k, j, memo);
    for (const auto& l : left)
      for (const auto& r : right) {
        DiagSet d = l;
        d.insert(d.end(), r.begin(), r.end());
        if (k > i + 1) d.push_back({i, k});
        if (j > k + 1) d.push_back({k, j});
        std::sort(d.begin(), d.end());
        out.push_back(std::move(d));
      }
  }
  memo[{i, j}] = out;
  return out;
}

std::vector<DiagSet> all_triangulations(int ngon) {
  std::map<std::pair<int, int>, std::vector<DiagSet>> memo;
  auto out = sub_triangulations(0, ngon - 1, memo);
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace

std::vector<Triangulation> enumerate_triangulations(int n) {
  if (n < 0 || n > 10) throw Error("enumerate_triangulations supports 0 <= n <= 10");
  std::vector<Triangulation> out;
  for (auto& d : all_triangulations(n + 3)) out.push_back(make_triangulation(n + 3, d));
  return out;
}

std::string triangulation_key(const Triangulation& t) { return t.str(); }

std::vector<std::vector<int>> triangles(const Triangulation& t) {
  std::set<Diagonal> edges(t.diagonals.begin(), t.diagonals.end());
  edges.insert(t.sides.begin(), t.sides.end());
  std::vector<std::vector<int>> out;
  for (int a = 0; a < t.ngon; ++a)
    for (int b = a + 1; b < t.ngon; ++b) {
      if (!edges.count({a, b})) continue;
      for (int c = b + 1; c < t.ngon; ++c)
        if (edges.count({a, c}) && edges.count({b, c})) out.push_back({a, b, c});
    }
  return out;
}

IntMatrix adjacency_matrix(const Triangulation& t) {
  int n = t.n();
  IntMatrix b = IntMatrix::Zero(2 * n + 3, n);
  for (const auto& tri : triangles(t)) {
    int a = tri[0], m = tri[1], c = tri[2];
    // clockwise traversal of a counterclockwise triangle a < m < c
    int cyc[3] = {t.label({a, c}), t.label({m, c}), t.label({a, m})};
    for (int s = 0; s < 3; ++s) {
      int i = cyc[s], j = cyc[(s + 1) % 3];
      if (j <= n) b(i - 1, j - 1) += 1;
      if (i <= n) b(j - 1, i - 1) -= 1;
    }
  }
  return b;
}

Triangulation flip(const Triangulation& t, int k) {
  if (k < 0 || k >= t.n()) throw NotADiagonal("no diagonal with index " + std::to_string(k));
  auto [a, c] = t.diagonals[k];
  std::vector<int> apex;
  for (const auto& tri : triangles(t)) {
    int cnt = 0, other = -1;
    for (int v : tri) {
      if (v == a || v == c)
        ++cnt;
      else
        other = v;
    }
    if (cnt == 2) apex.push_back(other);
  }
  if (apex.size() != 2) throw NotADiagonal("diagonal is not inside two triangles");
  Triangulation r = t;
  r.diagonals[k] = make_diagonal(apex[0], apex[1]);
  return r;
}

PtolemyResult ptolemy_all(const Triangulation& t0, const EdgeNames& names) {
  PtolemyResult res;
  VarList vl;
  for (const auto& [e, s] : names) vl.push_back(s);
  std::sort(vl.begin(), vl.end());
  res.vars = make_vars(vl);
  for (const auto& [e, s] : names) {
    auto pos = std::find(vl.begin(), vl.end(), s) - vl.begin();
    res.value.emplace(e, LaurentPoly::variable(res.vars, pos));
  }
  for (auto e : t0.diagonals)
    if (!res.value.count(e)) throw Error("initial diagonal without a variable");
  for (auto e : t0.sides)
    if (!res.value.count(e)) throw Error("side without a variable");
  std::set<std::string> seen{triangulation_key(t0)};
  std::vector<Triangulation> queue{t0};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const Triangulation t = queue[q];
    for (int k = 0; k < t.n(); ++k) {
      Triangulation u = flip(t, k);
      auto [a, c] = t.diagonals[k];
      auto [b, d] = u.diagonals[k];
      int v[4] = {a, b, c, d};
      std::sort(v, v + 4);
      auto val = [&](int x, int y) -> const LaurentPoly& { return res.value.at(make_diagonal(x, y)); };
      LaurentPoly num = val(v[0], v[1]) * val(v[2], v[3]) + val(v[0], v[3]) * val(v[1], v[2]);
      LaurentPoly x = laurent_exact_div(num, val(a, c));
      auto it = res.value.find(u.diagonals[k]);
      if (it == res.value.end())
        res.value.emplace(u.diagonals[k], x);
      else if (it->second != x)
        throw MonodromyDetected("two flip paths disagree on diagonal " + std::to_string(b) + "-" + std::to_string(d));
      ++res.flips_checked;
      if (seen.insert(triangulation_key(u)).second) queue.push_back(u);
    }
  }
  return res;
}

LaurentPoly ptolemy_expand(const Triangulation& t0, const EdgeNames& names, Diagonal target) {
  target = make_diagonal(target.first, target.second);
  int gap = target.second - target.first;
  if (target.first < 0 || target.second >= t0.ngon || gap < 2 || gap == t0.ngon - 1)
    throw NotADiagonal("target is a side or lies outside the polygon");
  auto res = ptolemy_all(t0, names);
  auto it = res.value.find(target);
  if (it == res.value.end()) throw NotADiagonal("target is not a diagonal");
  return it->second;
}

PluckerReport plucker_verify(int n) {
  if (n < 1 || n > 5) throw Error("plucker_verify supports 1 <= n <= 5");
  int N = n + 3;
  VarList vl;
  for (int i = 0; i < N; ++i) vl.push_back("a" + std::to_string(i));
  for (int i = 0; i < N; ++i) vl.push_back("b" + std::to_string(i));
  VarListPtr vars = make_vars(vl);
  auto a = [&](int i) { return LaurentPoly::variable(vars, i); };
  auto b = [&](int i) { return LaurentPoly::variable(vars, N + i); };
  auto P = [&](int i, int j) { return a(i) * b(j) - a(j) * b(i); };
  PluckerReport rep;
  for (int i = 0; i < N; ++i)
    for (int j = i + 1; j < N; ++j)
      for (int k = j + 1; k < N; ++k)
        for (int l = k + 1; l < N; ++l) {
          ++rep.quadruples;
          if (P(i, k) * P(j, l) == P(i, j) * P(k, l) + P(i, l) * P(j, k)) ++rep.identities_ok;
        }
  std::vector<Diagonal> fan;
  for (int j = 2; j < N - 1; ++j) fan.push_back({0, j});
  Triangulation t0 = make_triangulation(N, fan);
  EdgeNames names;
  auto name = [](Diagonal e) { return "p" + std::to_string(e.first) + "_" + std::to_string(e.second); };
  for (auto e : t0.diagonals) names[e] = name(e);
  for (auto e : t0.sides) names[e] = name(e);
  auto res = ptolemy_all(t0, names);
  std::vector<LaurentPoly> images;
  for (const auto& v : *res.vars) {
    for (const auto& [e, s] : names)
      if (s == v) images.push_back(P(e.first, e.second));
  }
  for (const auto& [e, x] : res.value) {
    if (e.second - e.first < 2 || (e.first == 0 && e.second == N - 1)) continue;
    ++rep.diagonals;
    if (substitute(x, images) == P(e.first, e.second)) ++rep.minors_matched;
  }
  return rep;
}

std::map<Coords, Diagonal> snake_labeling(int n) {
  int N = n + 3;
  std::vector<Diagonal> snake;
  int lo = 0, hi = n + 1;
  snake.push_back({lo, hi});
  for (int i = 2; i <= n; ++i) {
    if (i % 2 == 0)
      ++lo;
    else
      --hi;
    snake.push_back({lo, hi});
  }
  std::map<Coords, Diagonal> out;
  for (int i = 0; i < n; ++i) {
    Coords c(n, 0);
    c[i] = -1;
    out[c] = snake[i];
  }
  for (int a = 0; a < N; ++a)
    for (int b = a + 2; b < N; ++b) {
      if (a == 0 && b == N - 1) continue;
      Diagonal d{a, b};
      if (std::find(snake.begin(), snake.end(), d) != snake.end()) continue;
      Coords c(n, 0);
      for (int i = 0; i < n; ++i) c[i] = crosses(d, snake[i]) ? 1 : 0;
      out[c] = d;
    }
  if (static_cast<int>(out.size()) != n * (n + 1) / 2 + n) throw Error("snake labeling is not a bijection");
  return out;
}

SymmetricModel enumerate_symmetric(int n) {
  if (n < 1 || n > 6) throw Error("enumerate_symmetric supports 1 <= n <= 6");
  SymmetricModel m;
  m.n = n;
  int N = 2 * n + 2, half = n + 1;
  auto anti = [&](Diagonal d) { return make_diagonal((d.first + half) % N, (d.second + half) % N); };
  for (auto& d : all_triangulations(N)) {
    bool sym = true;
    for (auto e : d)
      if (!std::binary_search(d.begin(), d.end(), anti(e))) sym = false;
    if (sym) m.triangulations.push_back(d);
  }
  std::map<DiagSet, int> idx;
  for (std::size_t k = 0; k < m.triangulations.size(); ++k) idx[m.triangulations[k]] = static_cast<int>(k);
  for (std::size_t k = 0; k < m.triangulations.size(); ++k) {
    Triangulation t = make_triangulation(N, m.triangulations[k]);
    std::set<Diagonal> done;
    for (int i = 0; i < t.n(); ++i) {
      Diagonal d = t.diagonals[i];
      if (done.count(d)) continue;
      done.insert(d);
      done.insert(anti(d));
      Triangulation u = flip(t, i);
      if (anti(d) != d) {
        int j = static_cast<int>(std::find(u.diagonals.begin(), u.diagonals.end(), anti(d)) - u.diagonals.begin());
        u = flip(u, j);
      }
      int v = idx.at(u.sorted_diagonals());
      if (static_cast<int>(k) < v) m.flips.emplace_back(static_cast<int>(k), v);
    }
  }
  std::set<Diagonal> used;
  for (int a = 0; a < N; ++a)
    for (int b = a + 2; b < N; ++b) {
      if (a == 0 && b == N - 1) continue;
      Diagonal d{a, b};
      if (used.count(d)) continue;
      used.insert(d);
      used.insert(anti(d));
      std::vector<Diagonal> orb{d};
      if (anti(d) != d) orb.push_back(anti(d));
      m.orbits.push_back(orb);
    }
  std::size_t V = m.orbits.size();
  m.compatible.assign(V, std::vector<char>(V, 0));
  for (std::size_t x = 0; x < V; ++x)
    for (std::size_t y = 0; y < V; ++y) {
      if (x == y) continue;
      bool ok = true;
      for (auto d : m.orbits[x])
        for (auto e : m.orbits[y]) ok = ok && !crosses(d, e);
      m.compatible[x][y] = ok;
    }
  return m;
}

}  // namespace ga
