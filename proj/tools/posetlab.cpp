#include <cstdint>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "posetlab/bounds.hpp"
#include "posetlab/config.hpp"
#include "posetlab/errors.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/io.hpp"
#include "posetlab/reports.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/sampler.hpp"
#include "posetlab/support.hpp"
#include "posetlab/wcol.hpp"

namespace pl = posetlab;

namespace {

std::string read_input(const std::string& path) {
  std::ostringstream ss;
  if (path == "-") {
    ss << std::cin.rdbuf();
  } else {
    std::ifstream in(path);
    if (!in) throw pl::Error("cannot open " + path);
    ss << in.rdbuf();
  }
  return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
  if (path.empty() || path == "-") {
    std::cout << text;
    return;
  }
  std::ofstream out(path);
  if (!out) throw pl::Error("cannot write " + path);
  out << text;
}

pl::CoverGraph graph_from_file(const std::string& text) {
  const std::string kind = pl::sniff_format(text);
  if (kind == "graph") return pl::parse_graph_string(text);
  if (kind == "poset") return pl::cover_graph(pl::parse_poset_string(text));
  throw pl::Error("expected a poset or graph file, found " + kind);
}

std::string big_cell(const pl::BigInt& v, long print_digits) {
  const std::string s = v.str();
  if (print_digits <= 0 || static_cast<long>(s.size()) <= print_digits)
    return s;
  return s.substr(0, 1) + "." + s.substr(1, 8) + "e" +
         std::to_string(s.size() - 1);
}

struct GenArgs {
  std::string family;
  int m = 3, r = 1, h = 1, t = 1, n = 10, max_height = 3;
  double density = 0.3;
  std::uint64_t seed = 1;
  std::string emit = "poset", out = "-";
};

int cmd_gen(const GenArgs& a) {
  pl::Poset poset = [&] {
    if (a.family == "standard") return pl::gen_standard_example(a.m).poset;
    if (a.family == "subdiv") return pl::gen_subdivided_standard(a.m, a.r).poset;
    if (a.family == "kelly") return pl::gen_kelly(a.m).poset;
    if (a.family == "pht") return pl::gen_pht(a.h, a.t).poset;
    if (a.family == "thm11") return pl::gen_for_height_width(a.h, a.t).poset;
    pl::Rng rng(a.seed);
    return pl::sample_random_poset(rng, a.n, a.max_height, a.density);
  }();

  if (a.emit == "poset") {
    write_output(a.out, pl::emit_poset(poset));
  } else if (a.emit == "dot") {
    write_output(a.out, pl::emit_dot(poset));
  } else if (a.emit == "td") {
    if (a.family != "pht" && a.family != "thm11")
      throw pl::Error("--emit td only applies to pht and thm11");
    pl::PhtInstance inst = a.family == "pht" ? pl::gen_pht(a.h, a.t)
                                             : pl::gen_for_height_width(a.h, a.t);
    write_output(a.out, pl::emit_td(inst.td, inst.poset.size()));
  } else {
    throw pl::Error("unknown emit kind: " + a.emit);
  }
  return 0;
}

int cmd_dim(const std::string& file, int pair_budget,
            const std::string& cert_path) {
  pl::Poset p = pl::parse_poset_string(read_input(file));
  pl::DimResult res = pl::dim_exact(p, pair_budget);
  pl::DimCertificate cert{res.dim, res.partition,
                          pl::partition_to_realizer(p, res.partition)};
  const std::string text = pl::emit_certificate(cert);
  if (!pl::verify_certificate(p, pl::parse_certificate_string(text)))
    throw pl::InternalProofViolation("emitted certificate failed verification");
  std::cout << "dim=" << res.dim << "\n";
  if (!cert_path.empty())
    write_output(cert_path, text);
  else
    std::cout << text;
  return 0;
}

int cmd_wcol(const std::string& file, int radius, int exact_n,
             const std::string& strategy, std::uint64_t seed, int iterations) {
  pl::CoverGraph g = graph_from_file(read_input(file));
  std::ostringstream out;
  out << "n=" << g.n << "\n";
  out << "edges=" << g.edge_count() << "\n";
  out << "radius=" << radius << "\n";
  pl::VertexOrder order;
  int value = 0;
  if (strategy == "auto" && g.n <= exact_n) {
    pl::WcolExact we = pl::wcol_exact(g, radius, exact_n);
    out << "method=exact\n";
    value = we.value;
    order = we.order;
  } else {
    pl::HeuristicParams hp;
    hp.seed = seed;
    hp.iterations = iterations;
    if (strategy == "smallest_last")
      hp.strategy = pl::OrderStrategy::smallest_last;
    else if (strategy == "bfs")
      hp.strategy = pl::OrderStrategy::bfs;
    else
      hp.strategy = pl::OrderStrategy::random_restart;
    pl::WcolHeuristic wh = pl::wcol_heuristic(g, radius, hp);
    out << "method=heuristic:"
        << (hp.strategy == pl::OrderStrategy::smallest_last ? "smallest_last"
            : hp.strategy == pl::OrderStrategy::bfs        ? "bfs"
                                                           : "random_restart")
        << "\n";
    value = wh.value;
    order = wh.order;
  }
  out << "value=" << value << "\n";
  out << "order=";
  for (int i = 0; i < order.size(); ++i)
    out << (i ? " " : "") << order.order[i];
  out << "\n";
  std::cout << out.str();
  return 0;
}

int cmd_realizer(const std::string& file, int pair_budget) {
  pl::Poset p = pl::parse_poset_string(read_input(file));
  pl::DimResult res = pl::dim_exact(p, pair_budget);
  pl::Realizer real = pl::partition_to_realizer(p, res.partition);
  if (!pl::verify_realizer(p, real))
    throw pl::InternalProofViolation("realizer failed verification");
  std::ostringstream out;
  out << "dim=" << res.dim << "\n";
  for (const auto& ext : real.extensions) {
    out << "L";
    for (int v : ext.order) out << " " << v;
    out << "\n";
  }
  std::cout << out.str();
  return 0;
}

int cmd_support(const std::string& file, const pl::Budgets& budgets) {
  pl::Poset p = pl::parse_poset_string(read_input(file));
  pl::SupportOptions opts;
  opts.dim_pair_budget = budgets.dim_pairs;
  opts.wcol_exact_max_n = budgets.wcol_exact_n;
  pl::SupportReport rep = pl::find_support_element(p, p.incomparable_pairs(), opts);
  std::cout << "q=" << rep.q << "\n"
            << "restricted=" << rep.restricted.size() << "\n"
            << "dim_all=" << rep.dim_all << "\n"
            << "dim_restricted=" << rep.dim_restricted << "\n"
            << "c=" << rep.c << "\n"
            << "inequality=" << (rep.inequality_holds ? "PASS" : "FAIL") << "\n"
            << "verified=" << (rep.verified ? "yes" : "no") << "\n";
  return rep.inequality_holds ? 0 : 1;
}

struct BoundArgs {
  std::string cls;
  int g = 0, t = 1, r = 1, h = 1;
  long long c = 1;
  long digits_limit = 200000;
  long print_digits = 100;
};

int cmd_bounds(const BoundArgs& a) {
  pl::BoundValue b;
  if (a.cls == "genus")
    b = pl::wcol_bound(pl::GraphClass::genus, a.g, a.r);
  else if (a.cls == "treewidth")
    b = pl::wcol_bound(pl::GraphClass::treewidth, a.t, a.r);
  else if (a.cls == "minor")
    b = pl::wcol_bound(pl::GraphClass::minor_free, a.t, a.r);
  else if (a.cls == "dim-wcol")
    b = pl::dim_upper_bound_from_wcol(pl::BigInt(a.c));
  else if (a.cls == "dim-genus")
    b = pl::dim_upper_bound(pl::GraphClass::genus, a.g, a.h);
  else if (a.cls == "dim-treewidth")
    b = pl::dim_upper_bound(pl::GraphClass::treewidth, a.t, a.h);
  else if (a.cls == "dim-minor")
    b = pl::dim_upper_bound(pl::GraphClass::minor_free, a.t, a.h);
  else if (a.cls == "construction")
    b = pl::dim_lower_bound_construction(a.h, a.t);
  else if (a.cls == "threshold")
    b = pl::subdivision_threshold(a.h, a.t, pl::BigInt(a.c), a.digits_limit);
  else if (a.cls == "topological-minor") {
    std::cout << "value=asymptotic, no constants available\n";
    return 0;
  } else {
    throw pl::Error("unknown bound class: " + a.cls);
  }
  std::cout << "value=" << big_cell(b.value, a.print_digits) << "\n"
            << "formula=" << b.formula << "\n";
  return 0;
}

int cmd_verify_td(const std::string& gfile, const std::string& tdfile) {
  pl::CoverGraph g = graph_from_file(read_input(gfile));
  pl::TreeDecomposition td = pl::parse_td_string(read_input(tdfile));
  pl::TdReport rep = pl::verify_tree_decomposition(g, td);
  std::cout << "width=" << rep.width << "\n"
            << "valid=" << (rep.valid ? "yes" : "no") << "\n";
  for (const auto& pr : rep.problems) std::cout << "problem=" << pr << "\n";
  return rep.valid ? 0 : 1;
}

int cmd_pipeline(const std::string& file, const std::string& name, bool csv,
                 const std::string& out_path, const pl::RunConfig& cfg) {
  pl::Poset p = pl::parse_poset_string(read_input(file));
  pl::PipelineOutput out = pl::run_pipeline(p, name, cfg);
  write_output(out_path, csv ? out.csv_header + out.csv_row : out.report);
  return out.report.find("=FAIL") == std::string::npos ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"poset dimension, weak colorings, and extremal constructions"};
  app.require_subcommand(1);
  pl::Budgets env = pl::Budgets::from_env();

  GenArgs ga;
  CLI::App* gen = app.add_subcommand("gen", "generate an instance");
  gen->add_option("family", ga.family, "standard|subdiv|kelly|pht|thm11|random")
      ->required()
      ->check(CLI::IsMember(
          {"standard", "subdiv", "kelly", "pht", "thm11", "random"}));
  gen->add_option("-m", ga.m, "standard-example order");
  gen->add_option("-r", ga.r, "subdivisions per edge");
  gen->add_option("-H", ga.h, "height parameter");
  gen->add_option("-t", ga.t, "width parameter");
  gen->add_option("-n", ga.n, "random: element count");
  gen->add_option("--max-height", ga.max_height, "random: height cap");
  gen->add_option("--density", ga.density, "random: arc probability");
  gen->add_option("--seed", ga.seed, "random: seed");
  gen->add_option("--emit", ga.emit, "poset|td|dot")
      ->check(CLI::IsMember({"poset", "td", "dot"}));
  gen->add_option("-o,--out", ga.out, "output file, - for stdout");

  std::string dim_file, dim_cert;
  int dim_budget = env.dim_pairs;
  CLI::App* dim = app.add_subcommand("dim", "exact dimension with certificate");
  dim->add_option("file", dim_file)->required();
  dim->add_option("--pair-budget", dim_budget, "max incomparable pairs");
  dim->add_option("--certificate", dim_cert, "write certificate here");

  std::string wcol_file, wcol_strategy = "auto";
  int wcol_radius = 1, wcol_exact_n = env.wcol_exact_n, wcol_iter = 200;
  std::uint64_t wcol_seed = 1;
  CLI::App* wcol = app.add_subcommand("wcol", "weak coloring number");
  wcol->add_option("file", wcol_file)->required();
  wcol->add_option("-r,--radius", wcol_radius)->required();
  wcol->add_option("--exact-n", wcol_exact_n, "max n for exhaustive search");
  wcol->add_option("--strategy", wcol_strategy,
                   "auto|smallest_last|bfs|random_restart")
      ->check(CLI::IsMember({"auto", "smallest_last", "bfs", "random_restart"}));
  wcol->add_option("--seed", wcol_seed);
  wcol->add_option("--iterations", wcol_iter);

  std::string real_file;
  int real_budget = env.dim_pairs;
  CLI::App* realizer = app.add_subcommand("realizer", "minimum realizer");
  realizer->add_option("file", real_file)->required();
  realizer->add_option("--pair-budget", real_budget);

  std::string sup_file;
  pl::Budgets sup_budgets = env;
  CLI::App* support = app.add_subcommand("support", "support element report");
  support->add_option("file", sup_file)->required();
  support->add_option("--pair-budget", sup_budgets.dim_pairs);
  support->add_option("--exact-n", sup_budgets.wcol_exact_n);

  BoundArgs ba;
  ba.digits_limit = env.digits_limit;
  CLI::App* bounds = app.add_subcommand("bounds", "closed-form bound values");
  bounds->add_option("--class", ba.cls,
                     "genus|treewidth|minor|dim-wcol|dim-genus|dim-treewidth|"
                     "dim-minor|construction|threshold|topological-minor")
      ->required();
  bounds->add_option("-g", ba.g, "genus");
  bounds->add_option("-t", ba.t, "treewidth / minor order");
  bounds->add_option("-r", ba.r, "radius");
  bounds->add_option("-H", ba.h, "poset height");
  bounds->add_option("-c", ba.c, "weak coloring number");
  bounds->add_option("--digits-limit", ba.digits_limit);
  bounds->add_option("--print-digits", ba.print_digits,
                     "truncate longer values in output");

  std::string vtd_graph, vtd_td;
  CLI::App* vtd = app.add_subcommand("verify-td", "check a tree decomposition");
  vtd->add_option("graph", vtd_graph, "poset or graph file")->required();
  vtd->add_option("td", vtd_td, "decomposition file")->required();

  std::string pipe_file, pipe_name = "input", pipe_out = "-";
  bool pipe_csv = false;
  pl::RunConfig pipe_cfg{env, 1};
  CLI::App* pipeline = app.add_subcommand("pipeline", "full diagnostic report");
  pipeline->add_option("file", pipe_file)->required();
  pipeline->add_option("--name", pipe_name);
  pipeline->add_flag("--csv", pipe_csv, "emit CSV instead of key=value");
  pipeline->add_option("--seed", pipe_cfg.seed);
  pipeline->add_option("--pair-budget", pipe_cfg.budgets.dim_pairs);
  pipeline->add_option("--exact-n", pipe_cfg.budgets.wcol_exact_n);
  pipeline->add_option("-o,--out", pipe_out, "output file, - for stdout");

  std::string bench_suite, bench_out = "-";
  bool bench_timing = false;
  pl::RunConfig bench_cfg{env, 1};
  CLI::App* bench = app.add_subcommand("bench", "value tables per suite");
  bench->add_option("--suite", bench_suite, "standard|pht|wcol")
      ->required()
      ->check(CLI::IsMember({"standard", "pht", "wcol"}));
  bench->add_option("--seed", bench_cfg.seed);
  bench->add_flag("--timing", bench_timing,
                  "append wall-clock column (not deterministic)");
  bench->add_option("-o,--out", bench_out);

  CLI11_PARSE(app, argc, argv);

  try {
    if (*gen) return cmd_gen(ga);
    if (*dim) return cmd_dim(dim_file, dim_budget, dim_cert);
    if (*wcol)
      return cmd_wcol(wcol_file, wcol_radius, wcol_exact_n, wcol_strategy,
                      wcol_seed, wcol_iter);
    if (*realizer) return cmd_realizer(real_file, real_budget);
    if (*support) return cmd_support(sup_file, sup_budgets);
    if (*bounds) return cmd_bounds(ba);
    if (*vtd) return cmd_verify_td(vtd_graph, vtd_td);
    if (*pipeline) return cmd_pipeline(pipe_file, pipe_name, pipe_csv, pipe_out, pipe_cfg);
    if (*bench) {
      write_output(bench_out, pl::bench_csv(bench_suite, bench_cfg, bench_timing));
      return 0;
    }
  } catch (const pl::ParseError& e) {
    std::cerr << "parse error: " << e.what() << "\n";
    return 2;
  } catch (const pl::BudgetExceededError& e) {
    std::cout << "budget exceeded: " << e.what() << "\n";
    if (e.lower >= 0) std::cout << "lower=" << e.lower << "\n";
    if (e.upper >= 0) std::cout << "upper=" << e.upper << "\n";
    return 3;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return 1;
}
