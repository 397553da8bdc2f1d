#include "mdus/sd_pipeline.hpp"

#include <atomic>
#include <chrono>
#include <thread>

#include "mdus/dim_miner.hpp"
#include "mdus/seq_miner.hpp"

namespace mdus {

MiningReport mine_sd(const QSDatabase& db, const Delta& delta, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const Money db_util = database_utility(db);
  const Money minutil = min_utility(db_util, delta);

  std::vector<std::pair<std::string, QSequence>> rows;
  rows.reserve(db.transactions.size());
  for (const auto& tx : db.transactions) rows.emplace_back(tx.sid, tx.seq);
  SeqDB seq_db = build_seq_db(rows, db.profits);

  SeqMineResult husps = mine_husps(seq_db, minutil, threads);

  // Phase 2: dimensional mining per HUSP; the per-transaction utilities
  // recorded during sequential mining seed the dimensional databases.
  std::vector<DhuiResult> results(husps.patterns.size());
  const int nthreads = std::max(
      1, std::min<int>(threads, static_cast<int>(husps.patterns.size())));
  auto work = [&](std::size_t i) {
    const MinedSeq& m = husps.patterns[i];
    DimDatabase dimdb = build_dim_db(m.pattern, m.per_tx, db);
    results[i] = dhui_mine(m.pattern, dimdb, minutil, db.schema);
  };
  if (nthreads <= 1) {
    for (std::size_t i = 0; i < husps.patterns.size(); ++i) work(i);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    for (int w = 0; w < nthreads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < husps.patterns.size();
             i = next.fetch_add(1))
          work(i);
      });
    }
    for (auto& t : workers) t.join();
  }

  MiningReport report;
  std::uint64_t lists = 0;
  for (DhuiResult& r : results) {
    lists += r.lists_built;
    for (auto& p : r.patterns) report.patterns.push_back(std::move(p));
  }
  report.stats.algo = "sd";
  report.stats.delta = delta.text();
  report.stats.min_util = minutil;
  report.stats.db_util = db_util;
  report.stats.candidates_seq = husps.candidates;
  report.stats.candidates_dim = lists;
  report.stats.candidates_total = husps.candidates + lists;
  finalize_report(report);
  report.stats.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

}  // namespace mdus
