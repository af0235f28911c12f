#include <CLI11.hpp>
#include <fstream>
#include <iostream>
#include <sstream>

#include "ga/report.hpp"
#include "ga/verify.hpp"

namespace {

struct RunConfig {
  std::string type;
  std::string matrix_file;
  std::string format;
  std::size_t budget_seeds = 100000;
  unsigned long rng_seed = 1;
  bool extended = false;
  bool quick = false;
  bool noncrossing = false;
  std::string out;
};

struct UsageError : ga::Error {
  using ga::Error::Error;
};

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw UsageError("cannot read " + path);
  std::stringstream ss;
  ss << in.rdbuf();
  return ss.str();
}

ga::CartanMatrix cartan_of(const RunConfig& cfg, bool need_finite = true) {
  if (!cfg.type.empty() && !cfg.matrix_file.empty()) throw UsageError("give either --type or --matrix-file, not both");
  if (!cfg.type.empty()) return ga::parse_cartan("type:" + cfg.type);
  if (cfg.matrix_file.empty()) throw UsageError("this command needs --type or --matrix-file");
  auto a = ga::parse_cartan(read_file(cfg.matrix_file));
  if (need_finite && !ga::validate_finite_type(a.matrix()).finite)
    throw UsageError("the Cartan matrix is not of finite type");
  return a;
}

void require_format(const RunConfig& cfg, const std::string& cmd, std::initializer_list<const char*> allowed) {
  for (const char* f : allowed)
    if (cfg.format == f) return;
  std::string list;
  for (const char* f : allowed) list += std::string(list.empty() ? "" : ", ") + f;
  throw UsageError(cmd + " supports --format " + list);
}

std::string cmd_roots(const RunConfig& cfg) {
  require_format(cfg, "roots", {"text", "json"});
  auto rs = ga::generate(cartan_of(cfg));
  auto cd = ga::coxeter_data(rs);
  if (cfg.format == "json") return ga::roots_json(rs, cd).dump(2) + "\n";
  return ga::roots_text(rs, cd);
}

std::string cmd_group(const RunConfig& cfg) {
  require_format(cfg, "group", {"text", "json", "dot"});
  auto rs = ga::generate(cartan_of(cfg));
  auto g = ga::build_group(rs);
  auto word = ga::bipartite_coxeter_word(rs.cartan);
  if (cfg.format == "dot") {
    if (cfg.noncrossing) return ga::absolute_interval_dot(g, ga::absolute_interval(g, word));
    return ga::weak_order_dot(g, ga::weak_order(g, 1000, 300, cfg.rng_seed));
  }
  auto wo = ga::weak_order(g, 1000, 300, cfg.rng_seed);
  auto ai = ga::absolute_interval(g, word);
  ga::Json j;
  j["type"] = ga::classify(rs.cartan).str();
  j["order"] = g.size();
  j["longest_element"] = g.word_label(g.w0);
  j["longest_length"] = g.length[g.w0];
  j["reduced_words_w0"] = ga::count_reduced_words(g, g.w0).get_str();
  j["weak_covers"] = wo.covers.size();
  j["lattice_pairs_checked"] = wo.pairs_checked;
  j["lattice_checked_full"] = wo.lattice_checked_full;
  j["coxeter_element"] = g.word_label(ai.c);
  j["noncrossing_size"] = ai.elements.size();
  j["noncrossing_ranks"] = ai.rank_counts;
  if (cfg.format == "json") return j.dump(2) + "\n";
  std::ostringstream os;
  for (auto& [k, v] : j.items()) os << k << " " << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  return os.str();
}

std::string cmd_mutate(const RunConfig& cfg, int* status) {
  require_format(cfg, "mutate", {"text", "json", "dot"});
  ga::Seed s0;
  std::string text = cfg.matrix_file.empty() || !cfg.type.empty() ? "" : read_file(cfg.matrix_file);
  auto first = text.find_first_not_of(" \t\r\n");
  if (first != std::string::npos && text[first] == '{') {
    ga::Json j;
    try {
      j = ga::Json::parse(text);
    } catch (const ga::Json::parse_error& e) {
      throw UsageError(std::string("seed file is not JSON: ") + e.what());
    }
    s0 = ga::seed_from_json(j);
  } else {
    auto a = cartan_of(cfg, false);
    ga::VarList names;
    for (int i = 1; i <= a.n(); ++i) names.push_back("x" + std::to_string(i));
    s0 = ga::initial_seed(ga::b_of_a(a, ga::bipartition(a)), names, false);
  }
  auto rec = ga::explore(s0, cfg.budget_seeds);
  if (!rec.closed) *status = 3;
  if (cfg.format == "json") return ga::exchange_graph_json(rec).dump(2) + "\n";
  if (cfg.format == "dot") return ga::exchange_graph_dot(rec);
  std::ostringstream os;
  os << "seeds " << rec.seeds.size()
     << (rec.closed ? "" : rec.term_limit_hit ? " (term limit reached)" : " (budget exhausted)") << "\n";
  os << "cluster variables " << rec.variables.size() << "\n";
  auto ft = ga::detect_finite_type(rec.seeds[0].btilde.topRows(s0.n()));
  os << "finite type "
     << (ft.status == ga::FiniteStatus::finite     ? ft.type.str()
         : ft.status == ga::FiniteStatus::infinite ? "no"
                                                   : "inconclusive")
     << "\n";
  for (const auto& v : rec.variables) os << "  " << v.fraction_str() << "\n";
  return os.str();
}

std::string cmd_assoc(const RunConfig& cfg) {
  require_format(cfg, "assoc", {"text", "json", "off"});
  auto rs = ga::generate(cartan_of(cfg));
  auto cc = ga::cluster_complex(rs, ga::compatibility(rs));
  auto poly = ga::build_polytope(rs, cc, ga::support_function(rs));
  if (cfg.format == "off") return ga::polytope_off(poly);
  if (cfg.format == "json") {
    auto j = ga::polytope_json(rs, poly);
    j["fan"] = ga::fan_json(rs, cc);
    return j.dump(2) + "\n";
  }
  std::ostringstream os;
  os << "vertices " << poly.vertices.size() << "\n";
  os << "facets " << poly.facet_root.size() << "\n";
  os << "edges " << poly.edges.size() << "\n";
  os << "f-vector";
  for (const auto& f : cc.f) os << " " << f.get_str();
  os << "\nh-vector";
  for (const auto& h : cc.h) os << " " << h.get_str();
  os << "\n";
  for (std::size_t k = 0; k < poly.facet_root.size(); ++k) {
    const auto& c = rs.roots[poly.facet_root[k]].coords;
    os << "  <z, (";
    for (std::size_t i = 0; i < c.size(); ++i) os << (i ? "," : "") << c[i];
    os << ")> <= " << ga::rat_str(poly.rhs[k]) << "\n";
  }
  return os.str();
}

std::string cmd_catalan(const RunConfig& cfg, int* status) {
  require_format(cfg, "catalan", {"csv", "text"});
  auto t = ga::classify(cartan_of(cfg));
  auto rep = ga::enumeration_report(t.str());
  if (!rep.ok()) *status = 1;
  if (cfg.format == "csv") return rep.csv();
  std::ostringstream os;
  for (const auto& r : rep.rows)
    os << r.interpretation << " " << (r.k < 0 ? std::string("total") : "k=" + std::to_string(r.k)) << " "
       << r.observed.get_str() << (r.match() ? "" : " MISMATCH expected " + r.expected.get_str()) << "\n";
  return os.str();
}

std::string cmd_wiring(const RunConfig& cfg) {
  require_format(cfg, "wiring", {"text", "json", "dot"});
  if (cfg.format == "dot") return ga::move_graph_dot(ga::enumerate_classes(3));
  auto r = ga::gl3_cell(cfg.rng_seed);
  if (cfg.format == "json") return ga::gl3_json(r).dump(2) + "\n";
  auto wc = ga::enumerate_classes(3);
  std::ostringstream os;
  os << "classes " << wc.classes.size() << "\n";
  int d3 = 0, d4 = 0;
  for (int d : wc.degree) {
    d3 += d == 3;
    d4 += d == 4;
  }
  os << "degree 4: " << d4 << ", degree 3: " << d3 << "\n";
  os << "moves checked " << wc.moves_checked << ", identity holds " << wc.identity_ok << "\n";
  os << "seed diagram " << ga::word_str(r.word) << "\n";
  os << "clusters " << r.seeds << ", cluster variables " << r.variables.size() << ", type " << r.type << "\n";
  for (std::size_t i = 0; i < r.variables.size(); ++i) os << "  " << r.labels[i] << "  " << r.variables[i] << "\n";
  return os.str();
}

std::string cmd_verify(const RunConfig& cfg, int* status) {
  require_format(cfg, "verify", {"text", "json"});
  if (cfg.quick && cfg.extended) throw UsageError("--quick and --extended are exclusive");
  ga::VerifyOptions opt;
  opt.extended = cfg.extended;
  opt.rng_seed = cfg.rng_seed;
  auto res = ga::verify_all(opt);
  for (const auto& r : res)
    if (!r.pass) *status = 1;
  if (cfg.format == "json") {
    ga::Json j = ga::Json::array();
    for (const auto& r : res) j.push_back({{"id", r.id}, {"name", r.name}, {"pass", r.pass}, {"detail", r.detail}});
    return j.dump(2) + "\n";
  }
  return ga::verify_report(res);
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"generalized associahedra and cluster algebra toolkit"};
  app.require_subcommand(1);
  RunConfig cfg;
  auto add_common = [&](CLI::App* sub, bool with_type) {
    if (with_type) {
      sub->add_option("--type", cfg.type, "Dynkin type, e.g. A3, B4, A1+A1");
      sub->add_option("--matrix-file", cfg.matrix_file, "Cartan text file (mutate also takes seed JSON)");
    }
    sub->add_option("--format", cfg.format, "output format");
    sub->add_option("--out", cfg.out, "write output to this file");
    sub->add_option("--rng-seed", cfg.rng_seed, "random seed")->check(CLI::NonNegativeNumber);
  };
  auto* roots = app.add_subcommand("roots", "root system data");
  add_common(roots, true);
  auto* group = app.add_subcommand("group", "Weyl group statistics and Hasse diagrams");
  add_common(group, true);
  group->add_flag("--noncrossing", cfg.noncrossing, "with --format dot, draw the noncrossing interval");
  auto* mutate = app.add_subcommand("mutate", "exchange graph of a seed");
  add_common(mutate, true);
  mutate->add_option("--budget-seeds", cfg.budget_seeds, "stop after this many seeds")->check(CLI::PositiveNumber);
  auto* assoc = app.add_subcommand("assoc", "generalized associahedron");
  add_common(assoc, true);
  auto* catalan = app.add_subcommand("catalan", "Catalan and Narayana cross-check");
  add_common(catalan, true);
  auto* wiring = app.add_subcommand("wiring", "double wiring diagrams for GL3");
  add_common(wiring, false);
  auto* verify = app.add_subcommand("verify", "acceptance battery");
  add_common(verify, false);
  verify->add_flag("--quick", cfg.quick, "default battery");
  verify->add_flag("--extended", cfg.extended, "add E6 to the battery");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return 2;
  }

  int status = 0;
  std::string output;
  try {
    if (roots->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_roots(cfg);
    } else if (group->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_group(cfg);
    } else if (mutate->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_mutate(cfg, &status);
    } else if (assoc->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_assoc(cfg);
    } else if (catalan->parsed()) {
      if (cfg.format.empty()) cfg.format = "csv";
      output = cmd_catalan(cfg, &status);
    } else if (wiring->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_wiring(cfg);
    } else if (verify->parsed()) {
      if (cfg.format.empty()) cfg.format = "text";
      output = cmd_verify(cfg, &status);
    }
  } catch (const UsageError& e) {
    std::cerr << "usage error: " << e.what() << "\n";
    return 2;
  } catch (const ga::BudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ga::ClosureBudgetExceeded& e) {
    std::cerr << "budget exceeded: " << e.what() << "\n";
    return 3;
  } catch (const ga::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  if (cfg.out.empty()) {
    std::cout << output;
  } else {
    std::ofstream f(cfg.out);
    if (!f) {
      std::cerr << "usage error: cannot write " << cfg.out << "\n";
      return 2;
    }
    f << output;
  }
  if (status == 3) std::cerr << "budget exceeded: exchange graph did not close\n";
  return status;
}
