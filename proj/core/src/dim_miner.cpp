#include "mdus/dim_miner.hpp"

#include <algorithm>
#include <map>

#include "mdus/errors.hpp"

namespace mdus {

DimDatabase build_dim_db(const Pattern& husp,
                         const std::vector<std::pair<int, Money>>& per_tx,
                         const QSDatabase& db) {
  std::map<int, Money> utils(per_tx.begin(), per_tx.end());
  DimDatabase out;
  out.husp = husp;
  for (int t = 0; t < static_cast<int>(db.transactions.size()); ++t) {
    const Transaction& tx = db.transactions[t];
    DimTransaction row;
    row.sid = tx.sid;
    for (std::size_t d = 0; d < tx.dims.size(); ++d)
      row.values.push_back({static_cast<int>(d), tx.dims[d]});
    auto it = utils.find(t);
    if (it != utils.end()) row.tu = it->second;
    out.total += row.tu;
    out.rows.push_back(std::move(row));
  }
  return out;
}

namespace {

bool row_contains(const DimTransaction& row, const DimToken& token) {
  return std::binary_search(row.values.begin(), row.values.end(), token);
}

bool row_contains_all(const DimTransaction& row,
                      const std::vector<DimToken>& x) {
  for (const DimToken& t : x)
    if (!row_contains(row, t)) return false;
  return true;
}

}  // namespace

UtilityList build_utility_list(const DimToken& token,
                               const DimDatabase& dimdb) {
  UtilityList ul;
  ul.name = {token};
  for (int r = 0; r < static_cast<int>(dimdb.rows.size()); ++r) {
    if (row_contains(dimdb.rows[r], token)) {
      ul.records.emplace_back(r, dimdb.rows[r].tu);
      ul.sutil += dimdb.rows[r].tu;
    }
  }
  return ul;
}

UtilityList construct_ul(const UtilityList& x, const UtilityList& y) {
  if (x.name.empty() || y.name.empty() || x.name.size() != y.name.size() ||
      !std::equal(x.name.begin(), x.name.end() - 1, y.name.begin()) ||
      !(x.name.back() < y.name.back()))
    throw ParameterError("utility-list join precondition violated");

  UtilityList z;
  z.name = x.name;
  z.name.push_back(y.name.back());
  auto xi = x.records.begin();
  auto yi = y.records.begin();
  while (xi != x.records.end() && yi != y.records.end()) {
    if (xi->first < yi->first) {
      ++xi;
    } else if (yi->first < xi->first) {
      ++yi;
    } else {
      const Money util = std::min(xi->second, yi->second);
      z.records.emplace_back(xi->first, util);
      z.sutil += util;
      ++xi;
      ++yi;
    }
  }
  return z;
}

Money dim_itemset_utility(const std::vector<DimToken>& x,
                          const DimDatabase& dimdb) {
  if (x.empty()) throw ParameterError("empty dimension itemset");
  Money sum;
  for (const DimTransaction& row : dimdb.rows)
    if (row_contains_all(row, x)) sum += row.tu;
  return sum;
}

void dminer(const std::vector<UtilityList>& uls, Money minutil,
            DimMineResult& acc) {
  for (std::size_t i = 0; i < uls.size(); ++i) {
    std::vector<UtilityList> ex;
    for (std::size_t j = i + 1; j < uls.size(); ++j) {
      UtilityList z = construct_ul(uls[i], uls[j]);
      ++acc.lists_built;
      if (z.sutil >= minutil) {
        acc.itemsets.emplace_back(z.name, z.sutil);
        ex.push_back(std::move(z));
      }
    }
    if (!ex.empty()) dminer(ex, minutil, acc);
  }
}

MultiDimPattern combine(const std::vector<DimToken>& x, const Pattern& husp,
                        const DimensionSchema& schema) {
  MultiDimPattern out;
  out.dims.assign(schema.arity(), kWildcard);
  out.seq = husp;
  for (const DimToken& t : x) {
    if (t.dim < 0 || t.dim >= static_cast<int>(schema.arity()))
      throw ParameterError("dimension index out of range");
    if (out.dims[t.dim] != kWildcard)
      throw ParameterError("duplicate dimension in itemset");
    out.dims[t.dim] = t.value;
  }
  return out;
}

DhuiResult dhui_mine(const Pattern& husp, const DimDatabase& dimdb,
                     Money minutil, const DimensionSchema& schema) {
  DhuiResult out;

  std::map<DimToken, bool> tokens;
  for (const DimTransaction& row : dimdb.rows)
    for (const DimToken& t : row.values) tokens[t] = true;

  DimMineResult mined;
  std::vector<UtilityList> frontier;
  for (const auto& [token, _] : tokens) {
    UtilityList ul = build_utility_list(token, dimdb);
    ++mined.lists_built;
    if (ul.sutil >= minutil) {
      mined.itemsets.emplace_back(ul.name, ul.sutil);
      frontier.push_back(std::move(ul));
    }
  }
  dminer(frontier, minutil, mined);

  for (const auto& [itemset, sutil] : mined.itemsets)
    out.patterns.emplace_back(combine(itemset, husp, schema), sutil);
  // The all-wildcard pattern is the sequence itself; it belongs in the
  // result whenever the sequence clears the threshold.
  if (dimdb.total >= minutil)
    out.patterns.emplace_back(combine({}, husp, schema), dimdb.total);
  out.lists_built = mined.lists_built;
  return out;
}

}  // namespace mdus
