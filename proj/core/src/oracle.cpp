#include "mdus/oracle.hpp"

#include <algorithm>
#include <chrono>
#include <set>

#include "mdus/errors.hpp"

namespace mdus {

namespace {

void enumerate_embeddings(const Pattern& s, const QSequence& sq,
                          const ProfitTable& pt, std::size_t pi,
                          std::size_t from, Embedding& partial, Money util,
                          std::vector<std::pair<Embedding, Money>>& out) {
  if (pi == s.itemsets.size()) {
    out.emplace_back(partial, util);
    return;
  }
  for (std::size_t j = from; j < sq.itemsets.size(); ++j) {
    if (!itemset_in_qitemset(s.itemsets[pi], sq.itemsets[j])) continue;
    Money matched;
    for (const auto& item : s.itemsets[pi])
      for (const auto& qi : sq.itemsets[j].entries)
        if (qi.item == item) {
          matched += item_utility(qi, pt);
          break;
        }
    partial.positions.push_back(j);
    enumerate_embeddings(s, sq, pt, pi + 1, j + 1, partial, util + matched,
                         out);
    partial.positions.pop_back();
  }
}

}  // namespace

std::pair<Money, std::vector<std::pair<Embedding, Money>>>
oracle_match_utility(const Pattern& s, const QSequence& sq,
                     const ProfitTable& pt) {
  std::vector<std::pair<Embedding, Money>> embeddings;
  if (!s.itemsets.empty()) {
    Embedding partial;
    enumerate_embeddings(s, sq, pt, 0, 0, partial, Money(), embeddings);
  }
  Money best;
  for (const auto& [e, u] : embeddings) best = std::max(best, u);
  return {best, std::move(embeddings)};
}

std::pair<Money, std::vector<std::pair<Embedding, Money>>>
oracle_match_utility(const MultiDimPattern& t, const Transaction& tx,
                     const ProfitTable& pt) {
  if (!dims_select(t.dims, tx.dims)) return {Money(), {}};
  return oracle_match_utility(t.seq, tx.seq, pt);
}

namespace {

struct OracleSearch {
  const QSDatabase& db;
  const OracleBounds& bounds;
  Money minutil;
  std::vector<Item> items;
  std::vector<std::vector<std::string>> dim_values;  // per slot, sorted
  MiningReport report;
  std::uint64_t nodes = 0;

  // Per-transaction max-embedding utilities of the sequence, independent of
  // the production DP. Returns false when the sequence is contained nowhere
  // (its extensions then are too, so the subtree is skipped; such patterns
  // all have utility 0 < minutil).
  bool per_tx_utilities(const Pattern& s, std::vector<Money>& out) const {
    out.assign(db.transactions.size(), Money());
    bool contained_anywhere = false;
    for (std::size_t t = 0; t < db.transactions.size(); ++t) {
      auto [best, embeddings] =
          oracle_match_utility(s, db.transactions[t].seq, db.profits);
      out[t] = best;
      if (!embeddings.empty()) contained_anywhere = true;
    }
    return contained_anywhere;
  }

  void emit_dim_vectors(const Pattern& s, const std::vector<Money>& per_tx,
                        std::size_t slot, DimVector& dims) {
    if (slot == db.schema.arity()) {
      Money u;
      for (std::size_t t = 0; t < db.transactions.size(); ++t)
        if (dims_select(dims, db.transactions[t].dims)) u += per_tx[t];
      if (u >= minutil)
        report.patterns.emplace_back(MultiDimPattern{dims, s}, u);
      return;
    }
    dims.push_back(kWildcard);
    emit_dim_vectors(s, per_tx, slot + 1, dims);
    dims.pop_back();
    for (const auto& v : dim_values[slot]) {
      dims.push_back(v);
      emit_dim_vectors(s, per_tx, slot + 1, dims);
      dims.pop_back();
    }
  }

  void visit(const Pattern& s) {
    ++nodes;
    std::vector<Money> per_tx;
    if (!per_tx_utilities(s, per_tx)) return;
    DimVector dims;
    emit_dim_vectors(s, per_tx, 0, dims);

    // Children: I-extensions with a greater item, then S-extensions.
    if (static_cast<int>(s.itemsets.back().size()) <
        bounds.max_items_per_itemset) {
      for (const Item& item : items) {
        if (s.itemsets.back().back() < item)
          visit(concatenated(s, item, true));
      }
    }
    if (static_cast<int>(s.itemsets.size()) < bounds.max_pattern_itemsets) {
      for (const Item& item : items) visit(concatenated(s, item, false));
    }
  }

  static Pattern concatenated(const Pattern& s, const Item& item, bool iext) {
    Pattern out = s;
    if (iext)
      out.itemsets.back().push_back(item);
    else
      out.itemsets.push_back({item});
    return out;
  }

  void run() {
    for (const Item& item : items) {
      Pattern p;
      p.itemsets.push_back({item});
      visit(p);
    }
  }
};

}  // namespace

MiningReport oracle_mine(const QSDatabase& db, const Delta& delta,
                         const OracleBounds& bounds) {
  const auto start = std::chrono::steady_clock::now();
  std::set<Item> item_set;
  for (const auto& tx : db.transactions)
    for (const auto& is : tx.seq.itemsets)
      for (const auto& qi : is.entries) item_set.insert(qi.item);

  if (static_cast<int>(db.transactions.size()) > bounds.max_transactions)
    throw OracleRefusal("oracle refuses " +
                        std::to_string(db.transactions.size()) +
                        " transactions (max " +
                        std::to_string(bounds.max_transactions) + ")");
  if (static_cast<int>(item_set.size()) > bounds.max_distinct_items)
    throw OracleRefusal("oracle refuses " + std::to_string(item_set.size()) +
                        " distinct items (max " +
                        std::to_string(bounds.max_distinct_items) + ")");
  if (static_cast<int>(db.schema.arity()) > bounds.max_dimensions)
    throw OracleRefusal("oracle refuses " +
                        std::to_string(db.schema.arity()) +
                        " dimensions (max " +
                        std::to_string(bounds.max_dimensions) + ")");
  // A pattern longer than any transaction cannot be contained, so these
  // caps make the enumeration exhaustive for the database at hand.
  for (const auto& tx : db.transactions) {
    if (static_cast<int>(tx.seq.itemsets.size()) > bounds.max_pattern_itemsets)
      throw OracleRefusal("oracle refuses transaction '" + tx.sid + "' with " +
                          std::to_string(tx.seq.itemsets.size()) +
                          " itemsets (max " +
                          std::to_string(bounds.max_pattern_itemsets) + ")");
    for (const auto& is : tx.seq.itemsets)
      if (static_cast<int>(is.entries.size()) > bounds.max_items_per_itemset)
        throw OracleRefusal("oracle refuses an itemset of " +
                            std::to_string(is.entries.size()) +
                            " items in '" + tx.sid + "' (max " +
                            std::to_string(bounds.max_items_per_itemset) +
                            ")");
  }

  OracleSearch search{db, bounds, min_utility(database_utility(db), delta)};
  search.items.assign(item_set.begin(), item_set.end());
  search.dim_values.resize(db.schema.arity());
  for (const auto& tx : db.transactions)
    for (std::size_t d = 0; d < tx.dims.size(); ++d) {
      auto& vals = search.dim_values[d];
      if (std::find(vals.begin(), vals.end(), tx.dims[d]) == vals.end())
        vals.push_back(tx.dims[d]);
    }
  for (auto& vals : search.dim_values) std::sort(vals.begin(), vals.end());

  search.run();

  MiningReport report = std::move(search.report);
  report.stats.algo = "oracle";
  report.stats.delta = delta.text();
  report.stats.db_util = database_utility(db);
  report.stats.min_util = search.minutil;
  report.stats.candidates_seq = search.nodes;
  report.stats.candidates_dim = 0;
  report.stats.candidates_total = search.nodes;
  finalize_report(report);
  report.stats.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

}  // namespace mdus
