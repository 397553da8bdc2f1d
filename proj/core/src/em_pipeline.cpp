#include "mdus/em_pipeline.hpp"

#include <algorithm>
#include <chrono>

#include "mdus/errors.hpp"

namespace mdus {

std::string dim_token_name(const DimToken& t) {
  return std::string(1, kDimPrefix) + std::to_string(t.dim) + ":" + t.value;
}

bool is_dim_token(const Item& name) {
  return !name.empty() && name.front() == kDimPrefix;
}

DimToken parse_dim_token(const Item& name) {
  if (!is_dim_token(name))
    throw ValidationError("'" + name + "' is not a dimension token");
  const auto colon = name.find(':');
  if (colon == std::string::npos || colon == 1)
    throw ValidationError("malformed dimension token '" + name + "'");
  DimToken t;
  try {
    t.dim = std::stoi(name.substr(1, colon - 1));
  } catch (const std::exception&) {
    throw ValidationError("malformed dimension token '" + name + "'");
  }
  t.value = name.substr(colon + 1);
  if (t.dim < 0 || t.value.empty())
    throw ValidationError("malformed dimension token '" + name + "'");
  return t;
}

void finalize_report(MiningReport& report) {
  std::sort(report.patterns.begin(), report.patterns.end(),
            [](const auto& a, const auto& b) {
              return canonical_less(a.first, b.first);
            });
  report.stats.pattern_count = report.patterns.size();
}

TransformedDB transform_db(const QSDatabase& db) {
  TransformedDB out;
  out.profits = db.profits;
  for (std::size_t d = 0; d < db.schema.arity(); ++d) {
    // Profit 0 for every dimension value seen anywhere.
    for (const auto& tx : db.transactions) {
      const Item name = dim_token_name({static_cast<int>(d), tx.dims[d]});
      out.dim_marker.insert(name);
      out.profits.set(name, Money());
    }
  }
  for (const auto& tx : db.transactions) {
    QSequence seq;
    if (!tx.dims.empty()) {
      QItemset dim_itemset;
      for (std::size_t d = 0; d < tx.dims.size(); ++d)
        dim_itemset.entries.push_back(
            {dim_token_name({static_cast<int>(d), tx.dims[d]}), 1});
      std::sort(dim_itemset.entries.begin(), dim_itemset.entries.end());
      seq.itemsets.push_back(std::move(dim_itemset));
    }
    for (const auto& is : tx.seq.itemsets) seq.itemsets.push_back(is);
    out.rows.emplace_back(tx.sid, std::move(seq));
  }
  return out;
}

MultiDimPattern inverse_transform(const Pattern& p,
                                  const DimensionSchema& schema) {
  MultiDimPattern out;
  out.dims.assign(schema.arity(), kWildcard);
  int dim_itemset = -1;
  for (std::size_t j = 0; j < p.itemsets.size(); ++j) {
    bool any_dim = false;
    bool any_regular = false;
    for (const Item& item : p.itemsets[j])
      (is_dim_token(item) ? any_dim : any_regular) = true;
    if (!any_dim) {
      out.seq.itemsets.push_back(p.itemsets[j]);
      continue;
    }
    if (any_regular)
      throw ValidationError(
          "malformed pattern: dimension tokens mixed with items");
    if (dim_itemset != -1)
      throw ValidationError(
          "malformed pattern: dimension tokens in multiple itemsets");
    dim_itemset = static_cast<int>(j);
    for (const Item& item : p.itemsets[j]) {
      const DimToken t = parse_dim_token(item);
      if (t.dim >= static_cast<int>(schema.arity()))
        throw ValidationError("dimension token '" + item +
                              "' out of schema range");
      if (out.dims[t.dim] != kWildcard)
        throw ValidationError("two tokens for dimension " +
                              std::to_string(t.dim));
      out.dims[t.dim] = t.value;
    }
  }
  return out;
}

MiningReport mine_em(const QSDatabase& db, const Delta& delta, int threads) {
  const auto start = std::chrono::steady_clock::now();
  const Money db_util = database_utility(db);
  const Money minutil = min_utility(db_util, delta);

  TransformedDB tdb = transform_db(db);
  SeqDB seq_db = build_seq_db(tdb.rows, tdb.profits);
  SeqMineResult mined = mine_husps(seq_db, minutil, threads);

  MiningReport report;
  for (const MinedSeq& m : mined.patterns) {
    MultiDimPattern p = inverse_transform(m.pattern, db.schema);
    if (p.seq.empty()) continue;  // cannot happen with minutil > 0
    report.patterns.emplace_back(std::move(p), m.utility);
  }
  report.stats.algo = "em";
  report.stats.delta = delta.text();
  report.stats.min_util = minutil;
  report.stats.db_util = db_util;
  report.stats.candidates_seq = mined.candidates;
  report.stats.candidates_dim = 0;
  report.stats.candidates_total = mined.candidates;
  finalize_report(report);
  report.stats.runtime_ms = std::chrono::duration_cast<std::chrono::milliseconds>(
                                std::chrono::steady_clock::now() - start)
                                .count();
  return report;
}

}  // namespace mdus
