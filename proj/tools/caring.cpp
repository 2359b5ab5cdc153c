// Command line front end. Subcommands construct coloring artifacts, verify
// properties, run the exact small-n searches, and handle capacity bounds.
//
// Output discipline: results go to stdout and are byte-identical for a given
// configuration and input (worker count has no effect); timing goes to stderr.
// Exit codes: 0 success, 1 a verification failed, 2 usage or input error,
// 3 search budget exceeded.

#include <chrono>
#include <cstdint>
#include <cstdio>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "caring/caring.hpp"
#include "json.hpp"

namespace {

using nlohmann::json;

constexpr const char* kVersion = "0.1.0";

int g_exit = 0;

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

json base_report(const std::string& command, const json& config) {
  json j;
  j["version"] = kVersion;
  j["command"] = command;
  j["config"] = config;
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(command + "\n" + config.dump())));
  j["config_hash"] = buf;
  return j;
}

void emit(const json& j) { std::cout << j.dump(2) << "\n"; }

// "-" reads stdin / writes stdout
struct InStream {
  std::ifstream file;
  std::istream* is = nullptr;
};

InStream open_in(const std::string& path) {
  InStream s;
  if (path == "-") {
    s.is = &std::cin;
    return s;
  }
  s.file.open(path);
  if (!s.file) throw std::runtime_error("cannot open " + path);
  s.is = &s.file;
  return s;
}

struct OutStream {
  std::ofstream file;
  std::ostream* os = nullptr;
};

OutStream open_out(const std::string& path) {
  OutStream s;
  if (path == "-") {
    s.os = &std::cout;
    return s;
  }
  s.file.open(path);
  if (!s.file) throw std::runtime_error("cannot open " + path + " for writing");
  s.os = &s.file;
  return s;
}

// labels file: header "n t", then n labels as decimal integers
caring::BinaryLabeling read_labels(std::istream& is) {
  long long n = 0, t = 0;
  if (!(is >> n >> t)) throw std::runtime_error("labels: expected header \"n t\"");
  if (n < 2 || t < 1 || t > 63) throw std::runtime_error("labels: bad header values");
  std::vector<std::uint64_t> labels(n);
  for (long long i = 0; i < n; ++i)
    if (!(is >> labels[i])) throw std::runtime_error("labels: expected " + std::to_string(n) +
                                                     " labels, got " + std::to_string(i));
  return caring::BinaryLabeling(static_cast<int>(t), std::move(labels));
}

json witness_json(const caring::VerifyReport& r, int n) {
  json w;
  w["subset"] = r.witness_subset;
  if (r.witness_edges[0] >= 0) {
    json edges = json::array();
    for (caring::EdgeId e : r.witness_edges) {
      auto [u, v] = caring::edge_endpoints(e, n);
      edges.push_back({u, v});
    }
    w["edges"] = edges;
  }
  if (r.witness_color >= 0) w["color"] = r.witness_color;
  if (r.witness_round >= 0) w["round"] = r.witness_round;
  if (!r.failed_stage.empty()) w["stage"] = r.failed_stage;
  return w;
}

void emit_verify(const std::string& command, const json& config, const caring::VerifyReport& r,
                 int n) {
  json j = base_report(command, config);
  j["check"] = r.check;
  j["pass"] = r.pass;
  if (r.pass) {
    j["stats"] = {{"subsets_checked", r.subsets_checked},
                  {"rainbow_total", r.rainbow_total},
                  {"min_rainbow_per_subset", r.min_rainbow_per_subset}};
  } else {
    j["witness"] = witness_json(r, n);
    j["stats"] = {{"subsets_checked", r.subsets_checked}};
  }
  emit(j);
  if (!r.pass) g_exit = 1;
}

}  // namespace

int main(int argc, char** argv) {
  auto started = std::chrono::steady_clock::now();
  CLI::App app{"caring edge colorings: constructions, verification, exact searches, capacity"};
  app.set_version_flag("--version", std::string(kVersion));
  app.require_subcommand(1);
  int workers = 0;
  app.add_option("--workers", workers, "verification threads, 0 = all hardware threads");

  // ------------------------------------------------------------- construct
  auto* construct = app.add_subcommand("construct", "emit coloring artifacts");
  construct->require_subcommand(1);

  auto* c_kts = construct->add_subcommand("kts", "Kirkman triple system on 3^t points");
  int kts_t = 2;
  std::string kts_out = "-";
  c_kts->add_option("--t", kts_t, "exponent, n = 3^t")->required()->check(CLI::Range(2, 7));
  c_kts->add_option("--out", kts_out, "output file, - = stdout");
  c_kts->callback([&] {
    auto out = open_out(kts_out);
    caring::write_kts(*out.os, caring::kts_power_of_three(kts_t));
  });

  auto* c_ham = construct->add_subcommand("ham", "Hamiltonian-cycle classes, odd n");
  int ham_n = 0;
  std::string ham_out = "-";
  c_ham->add_option("--n", ham_n, "vertex count, odd")->required();
  c_ham->add_option("--out", ham_out, "output file, - = stdout");
  c_ham->callback([&] {
    auto out = open_out(ham_out);
    caring::write_coloring(*out.os, caring::hamiltonian_decomposition_coloring(ham_n));
  });

  auto* c_of = construct->add_subcommand("onefact", "paired one-factorization classes, even n");
  int of_n = 0;
  std::string of_out = "-";
  c_of->add_option("--n", of_n, "vertex count, even")->required();
  c_of->add_option("--out", of_out, "output file, - = stdout");
  c_of->callback([&] {
    auto out = open_out(of_out);
    caring::write_coloring(*out.os, caring::paired_one_factorization_coloring(of_n));
  });

  auto* c_rounds = construct->add_subcommand("rounds", "binary four-color round family");
  int rounds_n = 0;
  bool ternary = false;
  std::string rounds_labels, rounds_out = "-";
  c_rounds->add_option("--n", rounds_n, "vertex count (default binary labels)");
  c_rounds->add_option("--labels-in", rounds_labels, "labels file, - = stdin");
  c_rounds->add_flag("--ternary", ternary, "re-encode to three colors, two rounds per round");
  c_rounds->add_option("--out", rounds_out, "output file, - = stdout");
  c_rounds->callback([&] {
    caring::ColoringRounds rounds = [&] {
      if (!rounds_labels.empty()) {
        auto in = open_in(rounds_labels);
        return caring::binary_four_color_rounds(read_labels(*in.is));
      }
      if (rounds_n < 2) throw std::runtime_error("construct rounds: need --n or --labels-in");
      return caring::binary_four_color_rounds(rounds_n);
    }();
    if (ternary) rounds = caring::encode_rounds_to_ternary(rounds);
    auto out = open_out(rounds_out);
    caring::write_rounds(*out.os, rounds);
  });

  auto* c_r3 = construct->add_subcommand("rounds3", "three-color rounds from labels");
  std::string r3_labels, r3_out = "-";
  c_r3->add_option("--labels-in", r3_labels, "labels file, - = stdin")->required();
  c_r3->add_option("--out", r3_out, "output file, - = stdout");
  c_r3->callback([&] {
    auto in = open_in(r3_labels);
    auto out = open_out(r3_out);
    caring::write_rounds(*out.os, caring::three_color_rounds_from_labels(read_labels(*in.is)));
  });

  // ---------------------------------------------------------------- verify
  auto* verify = app.add_subcommand("verify", "check coloring properties");
  verify->require_subcommand(1);

  struct VerifyArgs {
    std::string pattern;
    std::string coloring_in;
    std::string kts_in;
  };
  auto add_coloring_verify = [&](const char* name, const char* desc, VerifyArgs& args) {
    auto* sub = verify->add_subcommand(name, desc);
    sub->add_option("--pattern", args.pattern, "K3, K13 or P4")->required();
    auto* ci = sub->add_option("--coloring-in", args.coloring_in, "coloring file, - = stdin");
    sub->add_option("--kts-in", args.kts_in, "Kirkman system file, - = stdin")->excludes(ci);
    return sub;
  };
  auto load_coloring = [](const VerifyArgs& args) {
    if (!args.coloring_in.empty()) {
      auto in = open_in(args.coloring_in);
      return caring::read_coloring(*in.is);
    }
    if (!args.kts_in.empty()) {
      auto in = open_in(args.kts_in);
      return caring::kts_coloring(caring::read_kts(*in.is));
    }
    throw std::runtime_error("verify: need --coloring-in or --kts-in");
  };

  VerifyArgs v_caring, v_mono, v_rainbow;
  add_coloring_verify("caring", "monochromatic-free and rainbow everywhere", v_caring)
      ->callback([&] {
        caring::EdgeColoring c = load_coloring(v_caring);
        json config = {{"pattern", v_caring.pattern},
                       {"input", v_caring.coloring_in.empty() ? v_caring.kts_in : v_caring.coloring_in},
                       {"n", c.n()},
                       {"k", c.k()}};
        emit_verify("verify caring", config,
                    caring::is_caring(c, caring::parse_pattern(v_caring.pattern), workers), c.n());
      });
  add_coloring_verify("mono", "no monochromatic copy of the pattern", v_mono)->callback([&] {
    caring::EdgeColoring c = load_coloring(v_mono);
    json config = {{"pattern", v_mono.pattern},
                   {"input", v_mono.coloring_in.empty() ? v_mono.kts_in : v_mono.coloring_in},
                   {"n", c.n()},
                   {"k", c.k()}};
    emit_verify("verify mono", config,
                caring::monochromatic_free(c, caring::parse_pattern(v_mono.pattern), workers),
                c.n());
  });
  add_coloring_verify("rainbow", "a rainbow copy in every subset", v_rainbow)->callback([&] {
    caring::EdgeColoring c = load_coloring(v_rainbow);
    json config = {{"pattern", v_rainbow.pattern},
                   {"input", v_rainbow.coloring_in.empty() ? v_rainbow.kts_in : v_rainbow.coloring_in},
                   {"n", c.n()},
                   {"k", c.k()}};
    emit_verify("verify rainbow", config,
                caring::rainbow_everywhere(c, caring::parse_pattern(v_rainbow.pattern), workers),
                c.n());
  });

  auto* v_good = verify->add_subcommand("kts-good", "no 4-subset inside three classes");
  std::string good_in;
  v_good->add_option("--kts-in", good_in, "Kirkman system file, - = stdin")->required();
  v_good->callback([&] {
    auto in = open_in(good_in);
    caring::KirkmanSystem ks = caring::read_kts(*in.is);
    caring::GoodnessCheck gc = caring::is_good_kts(ks, workers);
    json config = {{"input", good_in}, {"n", ks.n()}};
    json j = base_report("verify kts-good", config);
    j["check"] = "kts-good";
    j["pass"] = gc.ok;
    if (!gc.ok) j["witness"] = {{"subset", gc.quad}};
    emit(j);
    if (!gc.ok) g_exit = 1;
  });

  auto* v_rp4 = verify->add_subcommand("rounds-p4", "rainbow path in every 4-subset, some round");
  std::string rp4_in;
  v_rp4->add_option("--rounds-in", rp4_in, "rounds file, - = stdin")->required();
  v_rp4->callback([&] {
    auto in = open_in(rp4_in);
    caring::ColoringRounds rounds = caring::read_rounds(*in.is);
    json config = {{"input", rp4_in},
                   {"n", rounds.n()},
                   {"rounds", rounds.round_count()},
                   {"palette", rounds.palette()}};
    emit_verify("verify rounds-p4", config, caring::rounds_rainbow_p4(rounds, workers),
                rounds.n());
  });

  auto* v_rt = verify->add_subcommand("rounds-triangle", "triangles multicolored in some round");
  std::string rt_in;
  int rt_required = 3;
  v_rt->add_option("--rounds-in", rt_in, "rounds file, - = stdin")->required();
  v_rt->add_option("--required-colors", rt_required, "2 or 3")->required()->check(CLI::Range(2, 3));
  v_rt->callback([&] {
    auto in = open_in(rt_in);
    caring::ColoringRounds rounds = caring::read_rounds(*in.is);
    json config = {{"input", rt_in},
                   {"n", rounds.n()},
                   {"rounds", rounds.round_count()},
                   {"palette", rounds.palette()},
                   {"required", rt_required}};
    emit_verify("verify rounds-triangle", config,
                caring::rounds_triangle_multicolored(rounds, rt_required, workers), rounds.n());
  });

  // ---------------------------------------------------------------- search
  auto* search = app.add_subcommand("search", "exact values on small instances (CSV to stdout)");
  search->require_subcommand(1);
  caring::SearchBudget budget;
  auto* opt_secs = search->add_option("--max-seconds", budget.max_seconds, "time budget");
  search->add_option("--max-nodes", budget.max_nodes, "node budget");
  search->add_option("--max-vertices", budget.max_vertices, "override the n guard");
  search->add_option("--max-colors", budget.max_colors, "override the color guard");
  auto effective_budget = [&]() {
    caring::SearchBudget b = budget;
    if (opt_secs->count() == 0)
      if (const char* env = std::getenv("CARING_BUDGET_SECONDS")) b.max_seconds = std::atof(env);
    return b;
  };
  auto csv_row = [](const std::string& parameter, int n, const std::string& arg, long long value,
                    std::uint64_t nodes) {
    std::cout << "parameter,n,arg,value,nodes\n"
              << parameter << ',' << n << ',' << arg << ',' << value << ',' << nodes << "\n";
  };
  auto maybe_write_witness = [](const std::string& path,
                                const std::optional<caring::EdgeColoring>& w) {
    if (path.empty()) return;
    if (!w) throw std::runtime_error("search: no witness coloring to write");
    auto out = open_out(path);
    caring::write_coloring(*out.os, *w);
  };

  struct MinArgs {
    int n = 0;
    std::string pattern;
    std::string witness_out;
  };
  MinArgs s_b, s_g, s_a;
  auto add_min_search = [&](const char* name, const char* desc, MinArgs& args) {
    auto* sub = search->add_subcommand(name, desc);
    sub->add_option("--n", args.n, "vertex count")->required();
    sub->add_option("--pattern", args.pattern, "K3, K13 or P4")->required();
    sub->add_option("--witness-out", args.witness_out, "write the achieving coloring");
    return sub;
  };
  add_min_search("b", "least colors avoiding monochromatic copies", s_b)->callback([&] {
    auto r = caring::exact_b(s_b.n, caring::parse_pattern(s_b.pattern), effective_budget());
    csv_row("b", s_b.n, s_b.pattern, r.value, r.nodes);
    maybe_write_witness(s_b.witness_out, r.witness);
  });
  add_min_search("g", "least colors for a caring coloring", s_g)->callback([&] {
    auto r = caring::exact_g(s_g.n, caring::parse_pattern(s_g.pattern), effective_budget());
    csv_row("g", s_g.n, s_g.pattern, r.value, r.nodes);
    maybe_write_witness(s_g.witness_out, r.witness);
  });
  add_min_search("a", "least colors with a rainbow copy everywhere", s_a)->callback([&] {
    auto r = caring::exact_a(s_a.n, caring::parse_pattern(s_a.pattern), effective_budget());
    csv_row("a", s_a.n, s_a.pattern, r.value, r.nodes);
    maybe_write_witness(s_a.witness_out, r.witness);
  });

  auto* s_f = search->add_subcommand("f", "least colors with every 4-subset spanning q colors");
  int f_n = 0, f_q = 0;
  std::string f_witness;
  s_f->add_option("--n", f_n, "vertex count")->required();
  s_f->add_option("--q", f_q, "required distinct colors per 4-subset")->required();
  s_f->add_option("--witness-out", f_witness, "write the achieving coloring");
  s_f->callback([&] {
    auto r = caring::exact_f(f_n, f_q, effective_budget());
    csv_row("f", f_n, "q=" + std::to_string(f_q), r.value, r.nodes);
    maybe_write_witness(f_witness, r.witness);
  });

  auto* s_p = search->add_subcommand("p", "least three-color rounds covering all 4-subsets");
  int p_n = 0;
  s_p->add_option("--n", p_n, "vertex count")->required();
  s_p->callback([&] {
    auto r = caring::exact_p(p_n, effective_budget());
    csv_row("p", p_n, "", r.value, r.nodes);
  });

  auto* s_r = search->add_subcommand("ramsey", "k-coloring with no monochromatic triangle?");
  int r_n = 0, r_k = 0;
  std::string r_witness;
  s_r->add_option("--n", r_n, "vertex count")->required();
  s_r->add_option("--k", r_k, "colors")->required();
  s_r->add_option("--witness-out", r_witness, "write a triangle-free coloring if feasible");
  s_r->callback([&] {
    auto r = caring::ramsey_feasible(r_n, r_k, effective_budget());
    csv_row("ramsey", r_n, "k=" + std::to_string(r_k), r.feasible ? 1 : 0, r.nodes);
    if (r.feasible) maybe_write_witness(r_witness, r.witness);
  });

  // -------------------------------------------------------------- capacity
  auto* capacity = app.add_subcommand("capacity", "OR-power clique bounds");
  capacity->require_subcommand(1);
  caring::SearchBudget cap_budget;
  auto* cap_secs = capacity->add_option("--max-seconds", cap_budget.max_seconds, "time budget");
  capacity->add_option("--max-nodes", cap_budget.max_nodes, "node budget");
  int vertex_cap = 20000;
  capacity->add_option("--vertex-cap", vertex_cap, "largest power graph to materialize");
  auto cap_effective = [&]() {
    caring::SearchBudget b = cap_budget;
    if (cap_secs->count() == 0)
      if (const char* env = std::getenv("CARING_BUDGET_SECONDS")) b.max_seconds = std::atof(env);
    return b;
  };

  auto load_graph = [](const std::string& name, const std::string& file) {
    if (!file.empty()) {
      auto in = open_in(file);
      return caring::read_edge_list(*in.is);
    }
    if (!name.empty()) return caring::named_graph(name);
    throw std::runtime_error("capacity: need --graph or --graph-in");
  };

  auto* cap_bound = capacity->add_subcommand("bound", "clique bound on the t-th OR-power");
  std::string cb_name, cb_file;
  int cb_t = 1;
  auto* cb_g = cap_bound->add_option("--graph", cb_name, "c<n>, k<n> or grotzsch");
  cap_bound->add_option("--graph-in", cb_file, "edge list file, - = stdin")->excludes(cb_g);
  cap_bound->add_option("--power", cb_t, "OR-power exponent")->required()->check(CLI::Range(1, 8));
  cap_bound->callback([&] {
    caring::SimpleGraph g = load_graph(cb_name, cb_file);
    caring::CapacityBound cb = caring::capacity_lower_bound(g, cb_t, cap_effective(), vertex_cap);
    json config = {{"graph", cb_name.empty() ? cb_file : cb_name},
                   {"power", cb_t},
                   {"vertex_cap", vertex_cap}};
    json j = base_report("capacity bound", config);
    j["bound"] = cb.value;
    j["clique_size"] = cb.clique_size;
    j["power"] = cb.t;
    j["exact"] = cb.exact;
    j["nodes"] = cb.nodes;
    emit(j);
  });

  auto* cap_clique = capacity->add_subcommand("clique", "maximum clique of a graph");
  std::string cq_name, cq_file;
  auto* cq_g = cap_clique->add_option("--graph", cq_name, "c<n>, k<n> or grotzsch");
  cap_clique->add_option("--graph-in", cq_file, "edge list file, - = stdin")->excludes(cq_g);
  cap_clique->callback([&] {
    caring::SimpleGraph g = load_graph(cq_name, cq_file);
    caring::CliqueResult cr = caring::max_clique(g, cap_effective());
    json config = {{"graph", cq_name.empty() ? cq_file : cq_name}};
    json j = base_report("capacity clique", config);
    j["size"] = cr.size;
    j["vertices"] = cr.vertices;
    j["exact"] = cr.exact;
    j["nodes"] = cr.nodes;
    emit(j);
  });

  auto* cap_cert = capacity->add_subcommand("certify", "check a clique certificate");
  std::string cert_file, cert_graph;
  cap_cert->add_option("--certificate", cert_file, "certificate file, - = stdin")->required();
  cap_cert->add_option("--graph", cert_graph, "base graph override (default: from descriptor)");
  cap_cert->callback([&] {
    auto in = open_in(cert_file);
    caring::CliqueCertificate cert = caring::read_certificate(*in.is);
    caring::PowerDescriptor d = caring::parse_power_descriptor(cert.descriptor);
    caring::SimpleGraph base =
        cert_graph.empty() ? caring::named_graph(d.base) : caring::named_graph(cert_graph);
    caring::CertificateCheck chk = caring::verify_certificate(base, cert);
    json config = {{"certificate", cert_file}, {"descriptor", cert.descriptor}};
    json j = base_report("capacity certify", config);
    j["pass"] = chk.ok;
    if (chk.ok) {
      caring::CapacityBound cb = caring::capacity_from_certificate(base, cert);
      j["bound"] = cb.value;
      j["clique_size"] = cb.clique_size;
      j["power"] = cb.t;
    } else {
      j["reason"] = chk.reason;
      j["members"] = {chk.first, chk.second};
    }
    emit(j);
    if (!chk.ok) g_exit = 1;
  });

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 2;
  } catch (const caring::budget_exceeded& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - started)
                  .count();
  std::fprintf(stderr, "elapsed_ms=%.3f\n", ms);
  return g_exit;
}
