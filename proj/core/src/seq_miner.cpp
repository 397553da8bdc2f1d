#include "mdus/seq_miner.hpp"

#include <algorithm>
#include <atomic>
#include <map>
#include <set>
#include <thread>

#include "mdus/errors.hpp"

namespace mdus {

SeqDB build_seq_db(const std::vector<std::pair<std::string, QSequence>>& rows,
                   const ProfitTable& pt) {
  SeqDB db;
  db.txs.reserve(rows.size());
  for (const auto& [sid, seq] : rows) {
    SeqTx tx;
    tx.sid = sid;
    tx.seq = seq;
    tx.ul = build_ullist(seq, pt);
    tx.tu = qsequence_utility(seq, pt);
    db.total += tx.tu;
    db.txs.push_back(std::move(tx));
  }
  return db;
}

Pattern concatenate(const Pattern& p, const Item& item, ExtensionMode mode) {
  Pattern out = p;
  if (mode == ExtensionMode::kSequence || out.itemsets.empty()) {
    out.itemsets.push_back({item});
    return out;
  }
  Itemset& last = out.itemsets.back();
  if (!last.empty() && !(last.back() < item))
    throw ParameterError("I-extension item '" + item +
                         "' not greater than last itemset");
  last.push_back(item);
  return out;
}

namespace {

// Appends (cell, util) to `ends`, keeping at most one entry per cell with
// the maximum utility. Cells arrive in nondecreasing order.
void push_end(std::vector<MatchEnd>& ends, int cell, Money util) {
  if (!ends.empty() && ends.back().cell == cell) {
    if (util > ends.back().util) ends.back().util = util;
    return;
  }
  ends.push_back({cell, util});
}

// Projection of the one-item pattern <[item]> in a single transaction.
bool level1_entry(const SeqTx& tx, int tx_idx, const Item& item,
                  ProjEntry& out) {
  auto it = tx.ul.header.find(item);
  if (it == tx.ul.header.end()) return false;
  out.tx = tx_idx;
  out.ends.clear();
  for (int c = it->second; c != -1; c = tx.ul.cells[c].next)
    out.ends.push_back({c, tx.ul.cells[c].util});
  return true;
}

// Extends one projected entry by an item; returns false when no match end
// survives.
bool extend_entry(const SeqTx& tx, const ProjEntry& e, const Item& item,
                  ExtensionMode mode, ProjEntry& out) {
  const ULList& ul = tx.ul;
  out.tx = e.tx;
  out.ends.clear();
  if (mode == ExtensionMode::kItemset) {
    for (const MatchEnd& end : e.ends) {
      const int j = ul.itemset_of[end.cell];
      for (int c = end.cell + 1; c < ul.itemset_start[j + 1]; ++c) {
        if (ul.cells[c].item == item) {
          push_end(out.ends, c, end.util + ul.cells[c].util);
          break;
        }
      }
    }
  } else {
    auto it = ul.header.find(item);
    if (it == ul.header.end()) return false;
    // Walk occurrences in cell order; for each, the best prefix end in a
    // strictly earlier itemset.
    std::size_t ei = 0;
    bool have_best = false;
    Money best;
    for (int c = it->second; c != -1; c = ul.cells[c].next) {
      const int j = ul.itemset_of[c];
      while (ei < e.ends.size() && ul.itemset_of[e.ends[ei].cell] < j) {
        if (!have_best || e.ends[ei].util > best) {
          best = e.ends[ei].util;
          have_best = true;
        }
        ++ei;
      }
      if (have_best) push_end(out.ends, c, best + ul.cells[c].util);
    }
  }
  return !out.ends.empty();
}

ProjectedDB extend(const SeqDB& db, const ProjectedDB& pd, const Item& item,
                   ExtensionMode mode) {
  ProjectedDB out;
  ProjEntry scratch;
  for (const ProjEntry& e : pd.entries) {
    if (extend_entry(db.txs[e.tx], e, item, mode, scratch))
      out.entries.push_back(scratch);
  }
  return out;
}

Money entry_utility(const ProjEntry& e) {
  Money best;
  bool first = true;
  for (const MatchEnd& end : e.ends) {
    if (first || end.util > best) best = end.util;
    first = false;
  }
  return best;
}

struct Accumulator {
  std::vector<MinedSeq> patterns;
  std::uint64_t candidates = 0;
};

class Miner {
 public:
  Miner(const SeqDB& db, Money minutil) : db_(db), minutil_(minutil) {}

  // Evaluates one extension: project, compute u and PEU, emit, recurse.
  void judge(const Pattern& prefix2, const ProjectedDB& parent_pd,
             const Item& item, ExtensionMode mode, Accumulator& acc) const {
    ++acc.candidates;
    ProjectedDB pd = extend(db_, parent_pd, item, mode);
    if (pd.entries.empty()) return;
    evaluate(prefix2, pd, acc);
  }

  void evaluate(const Pattern& p, const ProjectedDB& pd,
                Accumulator& acc) const {
    Money u;
    Money bound;
    for (const ProjEntry& e : pd.entries) {
      Money best_u;
      Money best_peu;
      bool first = true;
      for (const MatchEnd& end : e.ends) {
        const Money ext = end.util + db_.txs[e.tx].ul.cells[end.cell].rutil;
        if (first || end.util > best_u) best_u = end.util;
        if (first || ext > best_peu) best_peu = ext;
        first = false;
      }
      u += best_u;
      bound += best_peu;
    }
    if (u >= minutil_) {
      MinedSeq m;
      m.pattern = p;
      m.utility = u;
      for (const ProjEntry& e : pd.entries)
        m.per_tx.emplace_back(e.tx, entry_utility(e));
      acc.patterns.push_back(std::move(m));
    }
    if (bound >= minutil_) grow(p, pd, acc);
  }

  // Pattern-growth loop: collect I- and S-extension items from the
  // projection, Judge each.
  void grow(const Pattern& prefix, const ProjectedDB& pd,
            Accumulator& acc) const {
    std::set<Item> iext, sext;
    for (const ProjEntry& e : pd.entries) {
      const ULList& ul = db_.txs[e.tx].ul;
      int min_itemset = -1;
      for (const MatchEnd& end : e.ends) {
        const int j = ul.itemset_of[end.cell];
        if (min_itemset == -1) min_itemset = j;  // ends are cell-ordered
        for (int c = end.cell + 1; c < ul.itemset_start[j + 1]; ++c)
          iext.insert(ul.cells[c].item);
      }
      if (min_itemset >= 0) {
        for (int c = ul.itemset_start[min_itemset + 1];
             c < static_cast<int>(ul.cells.size()); ++c)
          sext.insert(ul.cells[c].item);
      }
    }
    for (const Item& item : iext)
      judge(concatenate(prefix, item, ExtensionMode::kItemset), pd, item,
            ExtensionMode::kItemset, acc);
    for (const Item& item : sext)
      judge(concatenate(prefix, item, ExtensionMode::kSequence), pd, item,
            ExtensionMode::kSequence, acc);
  }

  // Level-1 entry point for one item: SWU filter, then evaluate.
  void mine_item(const Item& item, Money item_swu, Accumulator& acc) const {
    ++acc.candidates;
    if (item_swu < minutil_) return;
    ProjectedDB pd;
    ProjEntry scratch;
    for (int t = 0; t < static_cast<int>(db_.txs.size()); ++t) {
      if (level1_entry(db_.txs[t], t, item, scratch))
        pd.entries.push_back(scratch);
    }
    if (pd.entries.empty()) return;
    Pattern p;
    p.itemsets.push_back({item});
    evaluate(p, pd, acc);
  }

 private:
  const SeqDB& db_;
  Money minutil_;
};

}  // namespace

ProjectedDB project(const Pattern& p, const SeqDB& db) {
  if (p.itemsets.empty()) throw ParameterError("cannot project empty pattern");
  ProjectedDB pd;
  ProjEntry scratch;
  bool first = true;
  for (std::size_t j = 0; j < p.itemsets.size(); ++j) {
    for (std::size_t i = 0; i < p.itemsets[j].size(); ++i) {
      const Item& item = p.itemsets[j][i];
      if (first) {
        for (int t = 0; t < static_cast<int>(db.txs.size()); ++t)
          if (level1_entry(db.txs[t], t, item, scratch))
            pd.entries.push_back(scratch);
        first = false;
      } else {
        const auto mode =
            i == 0 ? ExtensionMode::kSequence : ExtensionMode::kItemset;
        pd = extend(db, pd, item, mode);
      }
    }
  }
  return pd;
}

Money prefix_utility(const ProjectedDB& pd) {
  Money u;
  for (const ProjEntry& e : pd.entries) u += entry_utility(e);
  return u;
}

Money swu(const Pattern& p, const SeqDB& db) {
  Money sum;
  for (const SeqTx& tx : db.txs)
    if (sequence_contained(p, tx.seq)) sum += tx.tu;
  return sum;
}

Money peu(const ProjectedDB& pd, const SeqDB& db) {
  Money sum;
  for (const ProjEntry& e : pd.entries) {
    Money best;
    bool first = true;
    for (const MatchEnd& end : e.ends) {
      const Money ext = end.util + db.txs[e.tx].ul.cells[end.cell].rutil;
      if (first || ext > best) best = ext;
      first = false;
    }
    sum += best;
  }
  return sum;
}

SeqMineResult mine_husps(const SeqDB& db, Money minutil, int threads) {
  if (minutil <= Money()) throw ParameterError("minutil must be positive");

  // Level-1 scan: distinct items with their SWU.
  std::map<Item, Money> swu1;
  for (const SeqTx& tx : db.txs)
    for (const auto& [item, cell] : tx.ul.header) swu1[item] += tx.tu;
  std::vector<std::pair<Item, Money>> items(swu1.begin(), swu1.end());

  Miner miner(db, minutil);
  const int nthreads =
      std::max(1, std::min<int>(threads, static_cast<int>(items.size())));

  std::vector<Accumulator> accs(items.size());
  if (nthreads == 1) {
    for (std::size_t i = 0; i < items.size(); ++i)
      miner.mine_item(items[i].first, items[i].second, accs[i]);
  } else {
    std::atomic<std::size_t> next{0};
    std::vector<std::thread> workers;
    workers.reserve(nthreads);
    for (int w = 0; w < nthreads; ++w) {
      workers.emplace_back([&] {
        for (std::size_t i = next.fetch_add(1); i < items.size();
             i = next.fetch_add(1))
          miner.mine_item(items[i].first, items[i].second, accs[i]);
      });
    }
    for (auto& t : workers) t.join();
  }

  // Merge in item order; candidate counts are schedule-independent sums and
  // the final sort makes the pattern list canonical.
  SeqMineResult result;
  for (Accumulator& acc : accs) {
    result.candidates += acc.candidates;
    for (MinedSeq& m : acc.patterns) result.patterns.push_back(std::move(m));
  }
  std::sort(result.patterns.begin(), result.patterns.end(),
            [](const MinedSeq& a, const MinedSeq& b) {
              return a.pattern < b.pattern;
            });
  return result;
}

}  // namespace mdus
