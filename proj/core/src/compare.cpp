#include "mdus/compare.hpp"

#include <algorithm>
#include <ostream>

#include "mdus/em_pipeline.hpp"
#include "mdus/errors.hpp"
#include "mdus/io.hpp"
#include "mdus/oracle.hpp"
#include "mdus/sd_pipeline.hpp"

namespace mdus {

MiningReport run_algo(const std::string& algo, const QSDatabase& db,
                      const Delta& delta, int threads) {
  if (algo == "em") return mine_em(db, delta, threads);
  if (algo == "sd") return mine_sd(db, delta, threads);
  if (algo == "oracle") return oracle_mine(db, delta);
  throw ParameterError("unknown algorithm '" + algo + "'");
}

namespace {

// First (pattern, utility) pair present in exactly one of the two reports;
// both are canonically sorted.
std::string first_divergence(const MiningReport& a, const MiningReport& b) {
  std::size_t i = 0, j = 0;
  while (i < a.patterns.size() && j < b.patterns.size()) {
    const auto& pa = a.patterns[i];
    const auto& pb = b.patterns[j];
    if (pa == pb) {
      ++i;
      ++j;
      continue;
    }
    if (canonical_less(pa.first, pb.first))
      return render_pattern_line(pa.first, pa.second) + " only in " +
             a.stats.algo;
    if (canonical_less(pb.first, pa.first))
      return render_pattern_line(pb.first, pb.second) + " only in " +
             b.stats.algo;
    return "utility mismatch for " + pa.first.str() + ": " + a.stats.algo +
           "=" + pa.second.str() + " " + b.stats.algo + "=" + pb.second.str();
  }
  if (i < a.patterns.size())
    return render_pattern_line(a.patterns[i].first, a.patterns[i].second) +
           " only in " + a.stats.algo;
  if (j < b.patterns.size())
    return render_pattern_line(b.patterns[j].first, b.patterns[j].second) +
           " only in " + b.stats.algo;
  return "";
}

}  // namespace

bool run_compare(const QSDatabase& db, const CompareOptions& opts,
                 std::ostream& log) {
  bool all_equal = true;
  for (const Delta& delta : opts.deltas) {
    std::vector<MiningReport> reports;
    for (const auto& algo : opts.algos) {
      reports.push_back(run_algo(algo, db, delta, opts.threads));
      const MiningReport& r = reports.back();
      log << "delta=" << delta.text() << " algo=" << algo
          << " patterns=" << r.stats.pattern_count
          << " candidates=" << r.stats.candidates_total
          << " runtime_ms=" << r.stats.runtime_ms << '\n';
      if (!opts.out_prefix.empty()) {
        const std::string base =
            opts.out_prefix + "." + algo + "." + delta.text();
        write_results(r, base + ".patterns", base + ".stats.json");
      }
    }
    for (std::size_t k = 1; k < reports.size(); ++k) {
      const std::string diff = first_divergence(reports[0], reports[k]);
      if (!diff.empty()) {
        all_equal = false;
        log << "delta=" << delta.text() << " DIVERGENCE ("
            << reports[0].stats.algo << " vs " << reports[k].stats.algo
            << "): " << diff << '\n';
      }
    }
    if (all_equal)
      log << "delta=" << delta.text() << " verdict: result sets equal\n";
  }
  return all_equal;
}

}  // namespace mdus
