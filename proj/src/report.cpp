#include "ga/report.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>

namespace ga {

namespace {

Json coords_json(const Coords& c) { return Json(c); }

Json int_matrix_json(const IntMatrix& m) {
  Json out = Json::array();
  for (Eigen::Index i = 0; i < m.rows(); ++i) {
    Json row = Json::array();
    for (Eigen::Index j = 0; j < m.cols(); ++j) row.push_back(m(i, j));
    out.push_back(row);
  }
  return out;
}

Json rational_json(const BigRational& q) {
  if (q.get_den() == 1 && q.get_num().fits_slong_p()) return Json(q.get_num().get_si());
  return Json(rat_str(q));
}

}  // namespace

Json roots_json(const RootSystem& rs, const CoxeterData& cd) {
  Json j;
  j["type"] = classify(rs.cartan).str();
  j["rank"] = rs.n();
  Json pos = Json::array(), all = Json::array();
  for (int k = 0; k < rs.size(); ++k) {
    if (k < rs.num_positive()) pos.push_back(coords_json(rs.roots[k].coords));
    all.push_back(coords_json(rs.roots[k].coords));
  }
  j["positive_roots"] = pos;
  j["roots"] = all;
  j["cartan"] = int_matrix_json(rs.cartan.matrix());
  j["symmetrizer"] = rs.d;
  j["h"] = cd.h;
  j["exponents"] = cd.exponents;
  if (cd.group_order.fits_slong_p())
    j["group_order"] = cd.group_order.get_si();
  else
    j["group_order"] = cd.group_order.get_str();
  return j;
}

std::string roots_text(const RootSystem& rs, const CoxeterData& cd) {
  std::ostringstream os;
  os << "type " << classify(rs.cartan).str() << "\n";
  os << "rank " << rs.n() << "\n";
  os << "positive roots " << rs.num_positive() << "\n";
  os << "coxeter number " << cd.h << "\n";
  os << "exponents";
  for (int e : cd.exponents) os << " " << e;
  os << "\n";
  os << "group order " << cd.group_order.get_str() << "\n";
  for (int k = 0; k < rs.num_positive(); ++k) {
    os << "  ";
    for (std::size_t i = 0; i < rs.roots[k].coords.size(); ++i) os << (i ? " " : "") << rs.roots[k].coords[i];
    os << "  height " << rs.roots[k].height << "\n";
  }
  return os.str();
}

std::string weak_order_dot(const CoxeterGroup& g, const WeakOrder& wo) {
  std::ostringstream os;
  os << "digraph weak_order {\n  rankdir=BT;\n";
  for (int w = 0; w < g.size(); ++w) os << "  n" << w << " [label=\"" << g.word_label(w) << "\"];\n";
  for (auto [u, v] : wo.covers) os << "  n" << u << " -> n" << v << ";\n";
  os << "}\n";
  return os.str();
}

std::string absolute_interval_dot(const CoxeterGroup& g, const AbsoluteInterval& ai) {
  std::ostringstream os;
  os << "digraph noncrossing {\n  rankdir=BT;\n";
  std::vector<char> in(g.size(), 0);
  for (int w : ai.elements) {
    in[w] = 1;
    os << "  n" << w << " [label=\"" << g.word_label(w) << "\"];\n";
  }
  // u < u t covers inside the interval
  for (int u : ai.elements)
    for (int t : g.reflections) {
      int v = g.multiply(u, t);
      if (in[v] && ai.reflection_length[v] == ai.reflection_length[u] + 1) os << "  n" << u << " -> n" << v << ";\n";
    }
  os << "}\n";
  return os.str();
}

Json polytope_json(const RootSystem& rs, const AssociahedronPolytope& p) {
  Json j;
  Json facets = Json::array();
  for (std::size_t f = 0; f < p.facet_root.size(); ++f)
    facets.push_back({{"root", coords_json(rs.roots[p.facet_root[f]].coords)}, {"rhs", rational_json(p.rhs[f])}});
  j["facets"] = facets;
  Json verts = Json::array();
  for (const auto& v : p.vertices) {
    Json row = Json::array();
    for (Eigen::Index i = 0; i < v.size(); ++i) row.push_back(rational_json(v(i)));
    verts.push_back(row);
  }
  j["vertices"] = verts;
  j["incidence"] = p.clusters;
  j["edges"] = p.edges;
  return j;
}

std::string polytope_off(const AssociahedronPolytope& p) {
  if (p.vertices.empty() || p.vertices[0].size() != 3) throw Error("OFF export needs a 3-dimensional polytope");
  // facet f is the set of vertices tight on f; order its vertices into a cycle through polytope edges
  std::map<int, std::vector<int>> on_facet;
  for (std::size_t v = 0; v < p.clusters.size(); ++v)
    for (int f : p.clusters[v]) on_facet[f].push_back(static_cast<int>(v));
  std::set<std::pair<int, int>> edge(p.edges.begin(), p.edges.end());
  auto adjacent = [&](int a, int b) { return edge.count({std::min(a, b), std::max(a, b)}) > 0; };
  std::vector<std::vector<int>> faces;
  for (auto& [f, vs] : on_facet) {
    std::vector<int> cyc{vs[0]};
    std::vector<char> used(vs.size(), 0);
    used[0] = 1;
    while (cyc.size() < vs.size()) {
      bool grown = false;
      for (std::size_t i = 0; i < vs.size() && !grown; ++i)
        if (!used[i] && adjacent(cyc.back(), vs[i])) {
          used[i] = 1;
          cyc.push_back(vs[i]);
          grown = true;
        }
      if (!grown) throw Error("facet boundary is not a cycle");
    }
    faces.push_back(cyc);
  }
  std::ostringstream os;
  os << "OFF\n" << p.vertices.size() << " " << faces.size() << " " << p.edges.size() << "\n";
  for (const auto& v : p.vertices) os << rat_str(v(0)) << " " << rat_str(v(1)) << " " << rat_str(v(2)) << "\n";
  for (const auto& f : faces) {
    os << f.size();
    for (int v : f) os << " " << v;
    os << "\n";
  }
  return os.str();
}

Json fan_json(const RootSystem& rs, const ClusterComplexData& cc) {
  auto ap = almost_positive(rs);
  Json rays = Json::array();
  for (int k = 0; k < ap.size(); ++k) rays.push_back(coords_json(rs.roots[ap.root[k]].coords));
  return Json{{"rays", rays}, {"cones", cc.facets}};
}

Seed seed_from_json(const Json& j) {
  for (const char* key : {"m", "n", "btilde"})
    if (!j.contains(key)) throw Error(std::string("seed file lacks '") + key + "'");
  int m = j["m"].get<int>(), n = j["n"].get<int>();
  if (n <= 0 || m < n) throw Error("seed file needs 0 < n <= m");
  const auto& b = j["btilde"];
  if (!b.is_array() || static_cast<int>(b.size()) != m) throw Error("btilde must have m rows");
  IntMatrix bt(m, n);
  for (int i = 0; i < m; ++i) {
    if (!b[i].is_array() || static_cast<int>(b[i].size()) != n) throw Error("btilde rows must have n entries");
    for (int k = 0; k < n; ++k) bt(i, k) = b[i][k].get<long long>();
  }
  VarList names;
  if (j.contains("cluster")) {
    names = j["cluster"].get<VarList>();
    if (static_cast<int>(names.size()) != n) throw Error("cluster must list n names");
  } else {
    for (int i = 1; i <= n; ++i) names.push_back("x" + std::to_string(i));
  }
  if (j.contains("frozen")) {
    auto fr = j["frozen"].get<VarList>();
    if (static_cast<int>(fr.size()) != m - n) throw Error("frozen must list m-n names");
    names.insert(names.end(), fr.begin(), fr.end());
  } else {
    for (int i = 1; i <= m - n; ++i) names.push_back("q" + std::to_string(i));
  }
  return initial_seed(bt, names);
}

Json seed_json(const Seed& s) {
  Json j;
  j["m"] = s.m();
  j["n"] = s.n();
  j["btilde"] = int_matrix_json(s.btilde);
  Json cl = Json::array();
  for (const auto& v : s.cluster) cl.push_back(v.str());
  j["cluster"] = cl;
  Json fr = Json::array();
  for (int i = 0; i < s.m() - s.n(); ++i) fr.push_back((*s.vars)[s.n() + i]);
  j["frozen"] = fr;
  return j;
}

Json exchange_graph_json(const ExchangeGraphRecord& rec) {
  Json j;
  j["closed"] = rec.closed;
  j["seeds"] = rec.seeds.size();
  Json vars = Json::array();
  for (const auto& v : rec.variables) vars.push_back(v.fraction_str());
  j["variables"] = vars;
  j["clusters"] = rec.seed_variables;
  std::vector<std::vector<int>> adj(rec.seeds.size());
  for (auto [u, k, v] : rec.edges) {
    (void)k;
    adj[u].push_back(v);
    adj[v].push_back(u);
  }
  for (auto& a : adj) std::sort(a.begin(), a.end());
  j["adjacency"] = adj;
  return j;
}

std::string exchange_graph_dot(const ExchangeGraphRecord& rec) {
  std::ostringstream os;
  os << "graph exchange {\n";
  for (std::size_t s = 0; s < rec.seeds.size(); ++s) {
    os << "  s" << s << " [label=\"{";
    for (std::size_t i = 0; i < rec.seed_variables[s].size(); ++i) os << (i ? "," : "") << rec.seed_variables[s][i];
    os << "}\"];\n";
  }
  for (auto [u, k, v] : rec.edges) os << "  s" << u << " -- s" << v << " [label=\"" << k + 1 << "\"];\n";
  os << "}\n";
  return os.str();
}

std::string flip_graph_dot(int n) {
  auto ts = enumerate_triangulations(n);
  std::map<std::string, int> index;
  for (std::size_t i = 0; i < ts.size(); ++i) index[triangulation_key(ts[i])] = static_cast<int>(i);
  std::ostringstream os;
  os << "graph flips {\n";
  for (std::size_t i = 0; i < ts.size(); ++i) os << "  t" << i << " [label=\"" << ts[i].str() << "\"];\n";
  for (std::size_t i = 0; i < ts.size(); ++i)
    for (int k = 0; k < ts[i].n(); ++k) {
      int j = index.at(triangulation_key(flip(ts[i], k)));
      if (static_cast<int>(i) < j) os << "  t" << i << " -- t" << j << ";\n";
    }
  os << "}\n";
  return os.str();
}

std::string move_graph_dot(const WiringClasses& wc) {
  std::ostringstream os;
  os << "graph moves {\n";
  for (std::size_t c = 0; c < wc.classes.size(); ++c)
    os << "  d" << c << " [label=\"" << word_str(wc.words[c][0]) << "\"];\n";
  for (auto [a, b] : wc.edges) os << "  d" << a << " -- d" << b << ";\n";
  os << "}\n";
  return os.str();
}

Json gl3_json(const Gl3Report& r) {
  Json j;
  j["word"] = word_str(r.word);
  Json cl = Json::array(), fr = Json::array();
  for (const auto& c : r.cluster) cl.push_back(c.str());
  for (const auto& c : r.frozen) fr.push_back(c.str());
  j["cluster"] = cl;
  j["frozen"] = fr;
  j["btilde"] = int_matrix_json(r.btilde);
  j["seeds"] = r.seeds;
  j["closed"] = r.closed;
  Json vars = Json::array();
  for (std::size_t i = 0; i < r.variables.size(); ++i)
    vars.push_back({{"label", r.labels[i]}, {"polynomial", r.variables[i]}});
  j["variables"] = vars;
  j["minors_matched"] = r.minors_matched;
  j["hidden_matched"] = r.hidden_matched;
  j["all_polynomial"] = r.all_polynomial;
  j["type"] = r.type;
  j["wiring_classes"] = r.wiring_classes;
  j["wiring_clusters_embedded"] = r.wiring_clusters_embedded;
  j["jacobian_rank"] = r.jacobian_rank;
  return j;
}

}  // namespace ga
