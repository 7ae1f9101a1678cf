#pragma once

#include <string>

#include "posetlab/config.hpp"
#include "posetlab/poset.hpp"

namespace posetlab {

// Full diagnostic pass over one poset: exact or heuristic order, weak
// coloring, signature partition, realizer, exact dimension when within
// budget, support-element report.  Every verdict is recomputed from the
// produced artifacts, not echoed from intermediate state.  Output is
// deterministic for a fixed config.
struct PipelineOutput {
  std::string report;      // key=value lines
  std::string csv_header;  // RFC-4180 style, no quoting needed
  std::string csv_row;
};
PipelineOutput run_pipeline(const Poset& p, const std::string& name,
                            const RunConfig& cfg);

// Benchmark-style value tables; suites: "standard", "pht", "wcol".
// Deterministic under a fixed seed.  with_timing appends a wall-clock
// column and is off by default precisely because it breaks determinism.
std::string bench_csv(const std::string& suite, const RunConfig& cfg,
                      bool with_timing = false);

}  // namespace posetlab
