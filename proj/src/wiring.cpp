#include "ga/wiring.hpp"

#include <algorithm>
#include <bit>
#include <functional>
#include <map>
#include <optional>
#include <random>
#include <set>
#include <sstream>

#include "ga/mutation.hpp"

namespace ga {

std::string word_str(const WiringWord& w) {
  std::string s;
  for (const auto& l : w) {
    if (!s.empty()) s += ' ';
    s += (l.thick ? 'T' : 't');
    s += std::to_string(l.level);
  }
  return s;
}

WiringWord parse_word(const std::string& s) {
  std::istringstream is(s);
  std::string tok;
  WiringWord w;
  while (is >> tok) {
    if (tok.size() < 2 || (tok[0] != 't' && tok[0] != 'T')) throw InvalidDiagram("bad letter '" + tok + "'");
    int level = 0;
    try {
      level = std::stoi(tok.substr(1));
    } catch (const std::exception&) {
      throw InvalidDiagram("bad letter '" + tok + "'");
    }
    w.push_back({tok[0] == 'T', level});
  }
  return w;
}

std::string Chamber::str() const {
  std::string s;
  for (int r : rows) s += std::to_string(r);
  s += ',';
  for (int c : cols) s += std::to_string(c);
  return s;
}

namespace {

struct State {
  std::vector<int> thick, thin;  // line at each position, bottom first
};

State initial_state(int n) {
  State s;
  for (int p = 1; p <= n; ++p) {
    s.thin.push_back(p);
    s.thick.push_back(n + 1 - p);
  }
  return s;
}

std::vector<State> sweep(int n, const WiringWord& w) {
  std::vector<State> out{initial_state(n)};
  for (const auto& l : w) {
    if (l.level < 1 || l.level >= n) throw InvalidDiagram("letter level out of range");
    State s = out.back();
    auto& v = l.thick ? s.thick : s.thin;
    std::swap(v[l.level - 1], v[l.level]);
    out.push_back(s);
  }
  return out;
}

Chamber chamber_at(const State& s, int k) {
  Chamber c;
  c.rows.assign(s.thick.begin(), s.thick.begin() + k);
  c.cols.assign(s.thin.begin(), s.thin.begin() + k);
  std::sort(c.rows.begin(), c.rows.end());
  std::sort(c.cols.begin(), c.cols.end());
  return c;
}

bool is_reduced_w0(int n, const std::vector<int>& levels) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  for (int k : levels) {
    if (p[k - 1] > p[k]) return false;
    std::swap(p[k - 1], p[k]);
  }
  return static_cast<int>(levels.size()) == n * (n - 1) / 2;
}

}  // namespace

void check_diagram(int n, const WiringWord& w) {
  std::vector<int> thin, thick;
  for (const auto& l : w) {
    if (l.level < 1 || l.level >= n) throw InvalidDiagram("letter level out of range");
    (l.thick ? thick : thin).push_back(l.level);
  }
  if (!is_reduced_w0(n, thin) || !is_reduced_w0(n, thick))
    throw InvalidDiagram("color subwords must be reduced words for the longest permutation");
}

std::vector<Chamber> chambers(int n, const WiringWord& w) {
  auto states = sweep(n, w);
  std::vector<Chamber> out;
  for (int k = 1; k < n; ++k) {
    out.push_back(chamber_at(states[0], k));
    for (std::size_t t = 0; t < w.size(); ++t)
      if (w[t].level == k) out.push_back(chamber_at(states[t + 1], k));
  }
  out.push_back(chamber_at(states[0], n));
  return out;
}

std::vector<Chamber> chamber_collection(int n, const WiringWord& w) {
  auto c = chambers(n, w);
  std::sort(c.begin(), c.end());
  return c;
}

namespace {

void split_bounded(int n, const WiringWord& w, std::vector<Chamber>* bounded, std::vector<Chamber>* unbounded) {
  auto states = sweep(n, w);
  for (int k = 1; k < n; ++k) {
    std::vector<Chamber> row{chamber_at(states[0], k)};
    for (std::size_t t = 0; t < w.size(); ++t)
      if (w[t].level == k) row.push_back(chamber_at(states[t + 1], k));
    for (std::size_t i = 0; i < row.size(); ++i) {
      bool edge = i == 0 || i + 1 == row.size();
      (edge ? unbounded : bounded)->push_back(row[i]);
    }
  }
  unbounded->push_back(chamber_at(states[0], n));
}

}  // namespace

std::vector<Chamber> bounded_chambers(int n, const WiringWord& w) {
  std::vector<Chamber> b, u;
  split_bounded(n, w, &b, &u);
  return b;
}

std::vector<Chamber> unbounded_chambers(int n, const WiringWord& w) {
  std::vector<Chamber> b, u;
  split_bounded(n, w, &b, &u);
  return u;
}

VarListPtr matrix_vars(int n) {
  VarList names;
  for (int i = 1; i <= n; ++i)
    for (int j = 1; j <= n; ++j) names.push_back("x" + std::to_string(i) + std::to_string(j));
  return make_vars(names);
}

LaurentPoly minor_poly(const VarListPtr& xs, int n, const Chamber& c) {
  if (c.rows.size() != c.cols.size()) throw Error("minor needs equal row and column counts");
  if (c.rows.empty()) return LaurentPoly::constant(xs, 1);
  // Laplace expansion along the first row
  Chamber rest;
  rest.rows.assign(c.rows.begin() + 1, c.rows.end());
  LaurentPoly out(xs);
  for (std::size_t j = 0; j < c.cols.size(); ++j) {
    rest.cols = c.cols;
    rest.cols.erase(rest.cols.begin() + static_cast<long>(j));
    LaurentPoly entry = LaurentPoly::variable(xs, static_cast<std::size_t>((c.rows[0] - 1) * n + c.cols[j] - 1));
    LaurentPoly term = entry * minor_poly(xs, n, rest);
    if (j % 2 == 0)
      out += term;
    else
      out -= term;
  }
  return out;
}

namespace {

// labels for t_k t_{k+1} t_k (or the thick version) starting at p
LocalMove braid_labels(int n, const WiringWord& before, int p, const WiringWord& after) {
  auto s = sweep(n, before);
  auto s2 = sweep(n, after);
  int k = before[p].level;
  LocalMove m;
  m.A = chamber_at(s[p], k);
  m.Y = chamber_at(s[p + 1], k);
  m.D = chamber_at(s[p + 3], k);
  m.B = chamber_at(s[p], k + 1);
  m.C = chamber_at(s[p + 3], k + 1);
  m.Z = chamber_at(s2[p + 1], k + 1);
  return m;
}

}  // namespace

std::vector<LocalMove> local_moves(int n, const WiringWord& w) {
  std::vector<LocalMove> out;
  int len = static_cast<int>(w.size());
  auto states = sweep(n, w);
  for (int p = 0; p + 1 < len; ++p) {
    if (w[p].level == w[p + 1].level && w[p].thick != w[p + 1].thick) {
      int k = w[p].level;
      LocalMove m;
      m.kind = LocalMove::Kind::mixed;
      m.pos = p;
      m.result = w;
      std::swap(m.result[p], m.result[p + 1]);
      auto s2 = sweep(n, m.result);
      m.A = chamber_at(states[p], k);
      m.Y = chamber_at(states[p + 1], k);
      m.C = chamber_at(states[p + 2], k);
      m.B = chamber_at(states[p + 1], k + 1);
      m.D = chamber_at(states[p + 1], k - 1);
      m.Z = chamber_at(s2[p + 1], k);
      out.push_back(m);
    }
    if (p + 2 < len && w[p].thick == w[p + 1].thick && w[p].thick == w[p + 2].thick && w[p].level == w[p + 2].level &&
        std::abs(w[p].level - w[p + 1].level) == 1) {
      WiringWord moved = w;
      std::swap(moved[p].level, moved[p + 1].level);
      moved[p + 2].level = moved[p].level;
      LocalMove m;
      if (w[p + 1].level == w[p].level + 1) {
        m = braid_labels(n, w, p, moved);
      } else {
        m = braid_labels(n, moved, p, w);
        std::swap(m.Y, m.Z);
      }
      m.kind = w[p].thick ? LocalMove::Kind::thick_braid : LocalMove::Kind::thin_braid;
      m.pos = p;
      m.result = moved;
      out.push_back(m);
    }
  }
  return out;
}

LocalMove local_move(int n, const WiringWord& w, const Chamber& y) {
  // thick and thin letters on different levels commute; search every such rearrangement
  std::set<std::string> seen{word_str(w)};
  std::vector<WiringWord> queue{w};
  for (std::size_t q = 0; q < queue.size(); ++q) {
    const WiringWord cur = queue[q];
    for (auto& m : local_moves(n, cur))
      if (m.Y == y) return m;
    for (std::size_t p = 0; p + 1 < cur.size(); ++p) {
      if (cur[p].thick == cur[p + 1].thick || cur[p].level == cur[p + 1].level) continue;
      WiringWord next = cur;
      std::swap(next[p], next[p + 1]);
      if (seen.insert(word_str(next)).second) queue.push_back(next);
    }
  }
  throw NoMoveAvailable("no local move removes chamber " + y.str());
}

bool check_move_identity(const VarListPtr& xs, int n, const LocalMove& m) {
  auto d = [&](const Chamber& c) { return minor_poly(xs, n, c); };
  return d(m.A) * d(m.C) + d(m.B) * d(m.D) == d(m.Y) * d(m.Z);
}

std::vector<WiringWord> reduced_words_w0(int n) {
  std::vector<WiringWord> out;
  int len = n * (n - 1) / 2;
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  WiringWord cur;
  std::function<void()> rec = [&]() {
    if (static_cast<int>(cur.size()) == len) {
      out.push_back(cur);
      return;
    }
    for (int k = 1; k < n; ++k) {
      if (p[k - 1] > p[k]) continue;
      std::swap(p[k - 1], p[k]);
      cur.push_back({false, k});
      rec();
      cur.pop_back();
      std::swap(p[k - 1], p[k]);
    }
  };
  rec();
  return out;
}

int WiringClasses::find(const std::vector<Chamber>& collection) const {
  auto it = std::find(classes.begin(), classes.end(), collection);
  return it == classes.end() ? -1 : static_cast<int>(it - classes.begin());
}

bool WiringClasses::connected() const {
  if (classes.empty()) return true;
  std::vector<std::vector<int>> adj(classes.size());
  for (auto [a, b] : edges) {
    adj[a].push_back(b);
    adj[b].push_back(a);
  }
  std::vector<char> seen(classes.size(), 0);
  std::vector<int> stack{0};
  seen[0] = 1;
  std::size_t count = 1;
  while (!stack.empty()) {
    int v = stack.back();
    stack.pop_back();
    for (int u : adj[v])
      if (!seen[u]) {
        seen[u] = 1;
        ++count;
        stack.push_back(u);
      }
  }
  return count == classes.size();
}

WiringClasses enumerate_classes(int n) {
  if (n < 2 || n > 3) throw Error("wiring enumeration supports n = 2 or 3");
  WiringClasses wc;
  wc.n = n;
  auto words = reduced_words_w0(n);
  int len = n * (n - 1) / 2;
  std::map<std::vector<Chamber>, int> index;
  std::vector<WiringWord> all;
  for (const auto& a : words)
    for (const auto& b : words) {
      // choose which of the 2*len slots carry thin letters
      for (unsigned mask = 0; mask < (1u << (2 * len)); ++mask) {
        if (std::popcount(mask) != len) continue;
        WiringWord w;
        std::size_t ia = 0, ib = 0;
        for (int s = 0; s < 2 * len; ++s) {
          if (mask & (1u << s))
            w.push_back(a[ia++]);
          else
            w.push_back({true, b[ib++].level});
        }
        all.push_back(w);
      }
    }
  std::sort(all.begin(), all.end());
  for (const auto& w : all) {
    auto col = chamber_collection(n, w);
    auto [it, fresh] = index.emplace(col, static_cast<int>(wc.classes.size()));
    if (fresh) {
      wc.classes.push_back(col);
      wc.words.emplace_back();
    }
    wc.words[it->second].push_back(w);
  }
  auto xs = matrix_vars(n);
  std::set<std::pair<int, int>> edges;
  for (const auto& w : all) {
    int from = index.at(chamber_collection(n, w));
    for (const auto& m : local_moves(n, w)) {
      ++wc.moves_checked;
      auto col = chamber_collection(n, m.result);
      int to = index.at(col);
      if (check_move_identity(xs, n, m)) ++wc.identity_ok;
      auto expect = wc.classes[from];
      expect.erase(std::find(expect.begin(), expect.end(), m.Y));
      expect.push_back(m.Z);
      std::sort(expect.begin(), expect.end());
      if (expect == col && m.Y != m.Z) ++wc.single_exchange_ok;
      bool back = false;
      for (const auto& m2 : local_moves(n, m.result))
        if (m2.pos == m.pos && m2.result == w) back = true;
      if (back) ++wc.involutive_ok;
      if (from != to) edges.insert({std::min(from, to), std::max(from, to)});
    }
  }
  wc.edges.assign(edges.begin(), edges.end());
  wc.degree.assign(wc.classes.size(), 0);
  for (auto [a, b] : wc.edges) {
    ++wc.degree[a];
    ++wc.degree[b];
  }
  return wc;
}

WiringWord figure_word() { return parse_word("T2 t1 t2 T1 T2 t1"); }

int jacobian_rank(int n, const WiringWord& w, unsigned long rng_seed) {
  auto xs = matrix_vars(n);
  std::mt19937_64 rng(rng_seed);
  std::uniform_int_distribution<int> dist(1, 97);
  std::vector<BigRational> point;
  for (int i = 0; i < n * n; ++i) point.emplace_back(dist(rng));
  auto ch = chambers(n, w);
  RationalMatrix jac(static_cast<Eigen::Index>(ch.size()), n * n);
  for (std::size_t r = 0; r < ch.size(); ++r) {
    auto p = minor_poly(xs, n, ch[r]);
    for (int v = 0; v < n * n; ++v) jac(static_cast<Eigen::Index>(r), v) = p.derivative(v).evaluate(point);
  }
  return matrix_rank(jac);
}

namespace {

LaurentPoly from_monomials(const VarListPtr& xs, const std::vector<std::pair<int, std::vector<int>>>& terms) {
  LaurentPoly p(xs);
  for (const auto& [c, entries] : terms) {
    Exponent e(xs->size(), 0);
    for (int ij : entries) ++e[(ij / 10 - 1) * 3 + (ij % 10 - 1)];
    p.add_term(e, c);
  }
  return p;
}

}  // namespace

Gl3Report gl3_cell(unsigned long rng_seed) {
  const int n = 3;
  Gl3Report rep;
  rep.word = figure_word();
  check_diagram(n, rep.word);
  rep.cluster = bounded_chambers(n, rep.word);
  rep.frozen = unbounded_chambers(n, rep.word);
  std::vector<Chamber> rows = rep.cluster;
  rows.insert(rows.end(), rep.frozen.begin(), rep.frozen.end());
  auto row_of = [&](const Chamber& c) {
    auto it = std::find(rows.begin(), rows.end(), c);
    return it == rows.end() ? -1 : static_cast<int>(it - rows.begin());
  };
  // any diagram isotopic to the chosen one carries the same chambers
  WiringClasses wc = enumerate_classes(n);
  int cls = wc.find(chamber_collection(n, rep.word));
  int m = static_cast<int>(rows.size()), nc = static_cast<int>(rep.cluster.size());
  IntMatrix bt = IntMatrix::Zero(m, nc);
  for (int k = 0; k < nc; ++k) {
    std::optional<LocalMove> mv;
    for (const auto& w : wc.words[cls]) {
      for (const auto& cand : local_moves(n, w))
        if (cand.Y == rep.cluster[k]) mv = cand;
      if (mv) break;
    }
    if (!mv) throw NoMoveAvailable("bounded chamber " + rep.cluster[k].str() + " admits no move");
    for (const Chamber* c : {&mv->A, &mv->C}) bt(row_of(*c), k) += 1;
    for (const Chamber* c : {&mv->B, &mv->D}) {
      int r = row_of(*c);
      if (r >= 0) bt(r, k) -= 1;  // the empty minor is the constant 1
    }
  }
  // flip column signs until the principal part is skew-symmetric
  for (unsigned signs = 0; signs < (1u << nc) && !rep.signs_consistent; ++signs) {
    IntMatrix t = bt;
    for (int k = 0; k < nc; ++k)
      if (signs & (1u << k)) t.col(k) = -t.col(k);
    bool skew = true;
    for (int i = 0; i < nc; ++i)
      for (int j = 0; j < nc; ++j)
        if (t(i, j) != -t(j, i)) skew = false;
    if (skew) {
      rep.signs_consistent = true;
      bt = t;
    }
  }
  if (!rep.signs_consistent) throw Error("move relations do not fit a skew-symmetric exchange matrix");
  rep.btilde = bt;
  VarList names;
  for (const auto& c : rows) names.push_back("D" + c.str());
  for (auto& s : names) std::replace(s.begin(), s.end(), ',', '_');
  Seed s0 = initial_seed(bt, names);
  ExchangeGraphRecord rec = explore(s0);
  rep.seeds = rec.seeds.size();
  rep.closed = rec.closed;
  auto xs = matrix_vars(n);
  std::vector<LaurentPoly> images;
  for (const auto& c : rows) images.push_back(minor_poly(xs, n, c));
  std::map<std::string, std::string> known;
  for (int k = 1; k <= n; ++k) {
    std::vector<int> mask(n, 0);
    std::fill(mask.begin(), mask.begin() + k, 1);
    std::vector<std::vector<int>> subsets;
    do {
      std::vector<int> s;
      for (int i = 0; i < n; ++i)
        if (mask[i]) s.push_back(i + 1);
      subsets.push_back(s);
    } while (std::prev_permutation(mask.begin(), mask.end()));
    for (const auto& r : subsets)
      for (const auto& c : subsets) {
        Chamber ch{r, c};
        known[minor_poly(xs, n, ch).str()] = ch.str();
      }
  }
  known[from_monomials(xs, {{1, {12, 21, 33}}, {-1, {12, 23, 31}}, {-1, {13, 21, 32}}, {1, {13, 22, 31}}}).str()] =
      "hidden1";
  known[from_monomials(xs, {{1, {11, 23, 32}}, {-1, {12, 23, 31}}, {-1, {13, 21, 32}}, {1, {13, 22, 31}}}).str()] =
      "hidden2";
  std::vector<std::string> xtext;
  for (const auto& v : rec.variables) {
    LaurentPoly p = substitute(v, images);
    if (!p.is_polynomial()) rep.all_polynomial = false;
    xtext.push_back(p.str());
    rep.variables.push_back(p.str());
    auto it = known.find(p.str());
    std::string label = it == known.end() ? "?" : it->second;
    rep.labels.push_back(label);
    if (label.rfind("hidden", 0) == 0)
      ++rep.hidden_matched;
    else if (label != "?")
      ++rep.minors_matched;
  }
  IntMatrix principal = bt.topRows(nc);
  FiniteTypeResult ft = detect_finite_type(principal);
  rep.type = ft.status == FiniteStatus::finite ? ft.type.str() : "none";
  std::set<std::set<std::string>> clusters;
  for (const auto& sv : rec.seed_variables) {
    std::set<std::string> c;
    for (int v : sv) c.insert(xtext[v]);
    clusters.insert(c);
  }
  rep.wiring_classes = static_cast<int>(wc.classes.size());
  for (const auto& w : wc.words) {
    std::set<std::string> c;
    for (const auto& ch : bounded_chambers(n, w[0])) c.insert(minor_poly(xs, n, ch).str());
    if (clusters.count(c)) ++rep.wiring_clusters_embedded;
  }
  rep.jacobian_rank = jacobian_rank(n, rep.word, rng_seed);
  return rep;
}

}  // namespace ga
