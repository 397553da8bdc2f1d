#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "mdus/model.hpp"
#include "mdus/money.hpp"
#include "mdus/report.hpp"

namespace mdus {

struct CompareOptions {
  std::vector<Delta> deltas;
  std::vector<std::string> algos;  // subset of {"em", "sd", "oracle"}
  int threads = 1;
  /// When nonempty, per-run files are written as
  /// <prefix>.<algo>.<delta>.patterns / .stats.json
  std::string out_prefix;
};

/// Runs one algorithm by name.
MiningReport run_algo(const std::string& algo, const QSDatabase& db,
                      const Delta& delta, int threads);

/// Runs each algorithm per delta, writes per-run stats, and prints one
/// verdict line per delta: "equal" or the first divergent pattern. Returns
/// true when all result sets agree.
bool run_compare(const QSDatabase& db, const CompareOptions& opts,
                 std::ostream& log);

}  // namespace mdus
