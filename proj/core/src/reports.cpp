#include "posetlab/reports.hpp"

#include <chrono>
#include <sstream>

#include "posetlab/bounds.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/reversibility.hpp"
#include "posetlab/sampler.hpp"
#include "posetlab/signatures.hpp"
#include "posetlab/support.hpp"
#include "posetlab/wcol.hpp"

namespace posetlab {

namespace {

const char* pf(bool ok) { return ok ? "PASS" : "FAIL"; }

}  // namespace

PipelineOutput run_pipeline(const Poset& p, const std::string& name,
                            const RunConfig& cfg) {
  std::ostringstream rep;
  rep << "name=" << name << "\n";
  rep << "n=" << p.size() << "\n";
  rep << "covers=" << p.cover_relations().size() << "\n";
  rep << "height=" << p.height() << "\n";
  const auto inc = p.incomparable_pairs();
  rep << "inc_pairs=" << inc.size() << "\n";
  rep << "seed=" << cfg.seed << "\n";

  SignaturePartitionOptions sopts;
  sopts.wcol_exact_max_n = cfg.budgets.wcol_exact_n;
  SignaturePartitionResult sp = signature_partition(p, sopts);
  rep << "radius=" << sp.radius << "\n";
  rep << "order=" << (sp.exact_order ? "exact" : "heuristic") << "\n";
  rep << "c=" << sp.reach_c << "\n";
  const int classes = sp.partition.size();
  rep << "signature_classes=" << classes << "\n";
  BoundValue cap = dim_upper_bound_from_wcol(sp.reach_c);
  rep << "class_bound_4c=" << cap.value.str() << "\n";
  const bool classes_ok = BigInt(classes) <= cap.value;
  rep << "classes_within_bound=" << pf(classes_ok) << "\n";

  bool reversible = true;
  for (const auto& cls : sp.partition.classes)
    if (find_alternating_cycle(p, cls).has_value()) reversible = false;
  rep << "classes_reversible=" << pf(reversible) << "\n";

  Realizer real = partition_to_realizer(p, sp.partition);
  rep << "realizer_extensions=" << real.size() << "\n";
  rep << "realizer_valid=" << pf(verify_realizer(p, real)) << "\n";

  int dim = -1;
  std::string dim_status = "exact";
  std::string dim_cell;
  try {
    dim = dim_exact(p, inc, cfg.budgets.dim_pairs).dim;
    dim_cell = std::to_string(dim);
    rep << "dim_status=exact\n";
    rep << "dim=" << dim << "\n";
    rep << "dim_within_classes=" << pf(dim <= std::max(classes, 1)) << "\n";
  } catch (const BudgetExceededError& e) {
    dim_status = "budget_exceeded";
    rep << "dim_status=budget_exceeded\n";
    rep << "dim_lower=" << e.lower << "\n";
    rep << "dim_upper=" << e.upper << "\n";
  }

  SupportOptions so;
  so.dim_pair_budget = cfg.budgets.dim_pairs;
  so.wcol_exact_max_n = cfg.budgets.wcol_exact_n;
  SupportReport sup = find_support_element(p, inc, so);
  rep << "support_radius=" << sup.radius << "\n";
  rep << "support_q=" << sup.q << "\n";
  rep << "support_restricted=" << sup.restricted.size() << "\n";
  rep << "support_dim_all=" << sup.dim_all << "\n";
  rep << "support_dim_restricted=" << sup.dim_restricted << "\n";
  rep << "support_c=" << sup.c << "\n";
  rep << "support_inequality=" << pf(sup.inequality_holds) << "\n";
  rep << "support_verified=" << (sup.verified ? "yes" : "no") << "\n";

  PipelineOutput out;
  out.report = rep.str();
  out.csv_header = "name,n,covers,height,inc,radius,c,classes,dim,dim_status,"
                   "support_q,support_inequality\n";
  std::ostringstream row;
  row << name << "," << p.size() << "," << p.cover_relations().size() << ","
      << p.height() << "," << inc.size() << "," << sp.radius << ","
      << sp.reach_c << "," << classes << "," << dim_cell << "," << dim_status
      << "," << sup.q << "," << pf(sup.inequality_holds) << "\n";
  out.csv_row = row.str();
  return out;
}

std::string bench_csv(const std::string& suite, const RunConfig& cfg,
                      bool with_timing) {
  using clock = std::chrono::steady_clock;
  std::ostringstream csv;
  auto stamp = [&](clock::time_point t0) {
    if (!with_timing) {
      csv << "\n";
      return;
    }
    const auto us =
        std::chrono::duration_cast<std::chrono::microseconds>(clock::now() - t0)
            .count();
    csv << "," << us << "\n";
  };
  const char* tail = with_timing ? ",micros\n" : "\n";

  if (suite == "standard") {
    csv << "name,m,n,inc,dim" << tail;
    for (int m = 2; m <= 5; ++m) {
      const auto t0 = clock::now();
      StandardInstance inst = gen_standard_example(m);
      const int dim =
          dim_exact(inst.poset, std::max(cfg.budgets.dim_pairs, 2 * m * m)).dim;
      csv << "S" << m << "," << m << "," << inst.poset.size() << ","
          << inst.poset.incomparable_pairs().size() << "," << dim;
      stamp(t0);
    }
    return csv.str();
  }

  if (suite == "pht") {
    csv << "name,h,t,n,k_formula,k_pairs,height,td_width,width_bound,td_valid"
        << tail;
    for (auto [h, t] : {std::pair{1, 1}, {1, 2}, {1, 3}, {2, 1}, {2, 2}, {3, 1}}) {
      const auto t0 = clock::now();
      PhtInstance inst = gen_pht(h, t);
      TdReport td = verify_tree_decomposition(cover_graph(inst.poset), inst.td);
      csv << "P" << h << "_" << t << "," << h << "," << t << ","
          << inst.poset.size() << ","
          << dim_lower_bound_construction(h, t).value.str() << ","
          << inst.vertical_pairs.size() << "," << inst.poset.height() << ","
          << td.width << "," << 2 * t + 1 << "," << pf(td.valid);
      stamp(t0);
    }
    return csv.str();
  }

  if (suite == "wcol") {
    csv << "name,n,edges,r,exact,heuristic" << tail;
    Rng rng(cfg.seed);
    for (int n = 4; n <= 8; ++n) {
      CoverGraph g = sample_connected_graph(rng, n, 0.3);
      for (int r = 1; r <= 2; ++r) {
        const auto t0 = clock::now();
        const int exact = wcol_exact(g, r, std::max(8, cfg.budgets.wcol_exact_n))
                              .value;
        HeuristicParams hp;
        hp.strategy = OrderStrategy::random_restart;
        hp.seed = rng();
        hp.iterations = 60;
        const int heur = wcol_heuristic(g, r, hp).value;
        csv << "G" << n << "," << n << "," << g.edge_count() << "," << r << ","
            << exact << "," << heur;
        stamp(t0);
      }
    }
    return csv.str();
  }

  throw PreconditionError("unknown bench suite: " + suite);
}

}  // namespace posetlab
