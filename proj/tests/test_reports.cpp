#include <string>

#include "doctest.h"
#include "posetlab/errors.hpp"
#include "posetlab/generators.hpp"
#include "posetlab/reports.hpp"

using namespace posetlab;

namespace {

bool has_line(const std::string& text, const std::string& line) {
  return text.find(line + "\n") != std::string::npos ||
         (text.size() >= line.size() &&
          text.compare(text.size() - line.size(), line.size(), line) == 0);
}

int count_lines(const std::string& text) {
  int n = 0;
  for (char ch : text)
    if (ch == '\n') ++n;
  return n;
}

}  // namespace

TEST_CASE("pipeline report on the order-2 standard example") {
  StandardInstance s = gen_standard_example(2);
  RunConfig cfg;
  PipelineOutput out = run_pipeline(s.poset, "s2", cfg);
  CHECK(has_line(out.report, "name=s2"));
  CHECK(has_line(out.report, "n=4"));
  CHECK(has_line(out.report, "height=2"));
  CHECK(has_line(out.report, "inc_pairs=8"));
  CHECK(has_line(out.report, "radius=3"));
  CHECK(has_line(out.report, "dim=2"));
  CHECK(has_line(out.report, "dim_status=exact"));
  CHECK(has_line(out.report, "classes_reversible=PASS"));
  CHECK(has_line(out.report, "realizer_valid=PASS"));
  CHECK(has_line(out.report, "support_inequality=PASS"));
  CHECK(has_line(out.report, "support_verified=yes"));
  CHECK(out.csv_header.find("name,") == 0);
  CHECK(out.csv_row.find("s2,4,") == 0);
}

TEST_CASE("pipeline is deterministic") {
  StandardInstance s = gen_standard_example(3);
  RunConfig cfg;
  cfg.seed = 99;
  PipelineOutput a = run_pipeline(s.poset, "x", cfg);
  PipelineOutput b = run_pipeline(s.poset, "x", cfg);
  CHECK(a.report == b.report);
  CHECK(a.csv_row == b.csv_row);
}

TEST_CASE("pipeline reports budget exhaustion as bounds") {
  StandardInstance s = gen_standard_example(5);  // |Inc| = 50
  RunConfig cfg;
  cfg.budgets.dim_pairs = 8;
  PipelineOutput out = run_pipeline(s.poset, "big", cfg);
  CHECK(out.report.find("dim_status=budget_exceeded") != std::string::npos);
  CHECK(out.report.find("dim_lower=") != std::string::npos);
  CHECK(out.report.find("dim_upper=") != std::string::npos);
  CHECK(out.csv_row.find("budget_exceeded") != std::string::npos);
}

TEST_CASE("bench suites are deterministic and well-formed") {
  RunConfig cfg;
  cfg.seed = 7;
  for (const std::string suite : {"standard", "pht", "wcol"}) {
    std::string a = bench_csv(suite, cfg);
    std::string b = bench_csv(suite, cfg);
    CHECK(a == b);
    CHECK(count_lines(a) >= 2);
  }
  CHECK(bench_csv("standard", cfg).find("name,m,n,inc,dim\n") == 0);
  CHECK(bench_csv("pht", cfg).find("name,h,t,n,") == 0);
  CHECK(bench_csv("wcol", cfg).find("name,n,edges,r,exact,heuristic\n") == 0);
  CHECK_THROWS_AS(bench_csv("nope", cfg), PreconditionError);
}

TEST_CASE("bench timing column is opt-in") {
  RunConfig cfg;
  std::string plain = bench_csv("standard", cfg, false);
  std::string timed = bench_csv("standard", cfg, true);
  CHECK(plain.find(",micros") == std::string::npos);
  CHECK(timed.find(",micros") != std::string::npos);
  CHECK(count_lines(plain) == count_lines(timed));
}
