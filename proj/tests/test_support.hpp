#pragma once

#include <random>
#include <string>
#include <vector>

#include "mdus/model.hpp"

namespace mdus::testing {

inline QItemset qis(std::vector<std::pair<std::string, std::int64_t>> items) {
  QItemset out;
  for (auto& [name, qty] : items) out.entries.push_back({name, qty});
  return out;
}

/// The running-example database: 5 transactions, 3 dimensions, profits
/// {a:4, b:3, c:5, d:2, e:1}. Total utility 394.
inline QSDatabase table1() {
  QSDatabase db;
  db.schema.names = {"Sex", "Age", "Occupation"};
  db.profits.set("a", Money::from_units(4));
  db.profits.set("b", Money::from_units(3));
  db.profits.set("c", Money::from_units(5));
  db.profits.set("d", Money::from_units(2));
  db.profits.set("e", Money::from_units(1));

  auto add = [&](std::string sid, std::vector<std::string> dims,
                 std::vector<QItemset> itemsets) {
    Transaction tx;
    tx.sid = std::move(sid);
    tx.dims = std::move(dims);
    tx.seq.itemsets = std::move(itemsets);
    db.transactions.push_back(std::move(tx));
  };
  add("S1", {"Male", "Young", "Doctor"},
      {qis({{"a", 1}, {"c", 3}}), qis({{"a", 5}, {"c", 1}, {"e", 4}}),
       qis({{"c", 2}}), qis({{"b", 1}})});
  add("S2", {"Female", "Middle", "Lawyer"},
      {qis({{"c", 1}}), qis({{"b", 4}}), qis({{"b", 9}, {"d", 8}}),
       qis({{"b", 9}, {"e", 6}})});
  add("S3", {"Male", "Child", "Driver"}, {qis({{"a", 10}, {"d", 5}})});
  add("S4", {"Male", "Young", "Writer"},
      {qis({{"a", 3}, {"b", 4}, {"d", 2}, {"e", 6}}),
       qis({{"b", 3}, {"c", 2}})});
  add("S5", {"Female", "Old", "Artist"},
      {qis({{"e", 4}}), qis({{"d", 7}}), qis({{"c", 5}}),
       qis({{"a", 9}, {"b", 3}, {"c", 7}, {"d", 7}})});
  db.validate();
  return db;
}

/// Random micro database within the oracle's enumeration bounds:
/// <= 8 transactions, <= 5 items, <= 3 dimensions x <= 3 values,
/// quantities <= 3, <= 4 itemsets per sequence, <= 3 items per itemset.
inline QSDatabase random_micro_db(std::mt19937_64& rng) {
  auto uniform = [&](int lo, int hi) {
    return lo + static_cast<int>(rng() % (hi - lo + 1));
  };
  const std::vector<Item> all_items = {"a", "b", "c", "d", "e"};
  const std::int64_t profit_grid[] = {0, 5000, 10000, 20000, 30000, 50000};

  for (;;) {
    QSDatabase db;
    const int nitems = uniform(2, 5);
    for (int i = 0; i < nitems; ++i)
      db.profits.set(all_items[i],
                     Money::from_raw(profit_grid[uniform(0, 5)]));
    const int ndims = uniform(0, 3);
    std::vector<int> values_per_dim;
    for (int d = 0; d < ndims; ++d) {
      db.schema.names.push_back("D" + std::to_string(d));
      values_per_dim.push_back(uniform(1, 3));
    }
    const int ntx = uniform(2, 8);
    for (int t = 0; t < ntx; ++t) {
      Transaction tx;
      tx.sid = "T" + std::to_string(t);
      for (int d = 0; d < ndims; ++d)
        tx.dims.push_back("v" + std::to_string(d) +
                          std::to_string(uniform(0, values_per_dim[d] - 1)));
      const int nsets = uniform(1, 4);
      for (int s = 0; s < nsets; ++s) {
        const int sz = uniform(1, std::min(3, nitems));
        std::vector<int> picked;
        while (static_cast<int>(picked.size()) < sz) {
          int idx = uniform(0, nitems - 1);
          bool dup = false;
          for (int p : picked) dup |= p == idx;
          if (!dup) picked.push_back(idx);
        }
        std::sort(picked.begin(), picked.end());
        QItemset is;
        for (int idx : picked)
          is.entries.push_back({all_items[idx], uniform(1, 3)});
        tx.seq.itemsets.push_back(std::move(is));
      }
      db.transactions.push_back(std::move(tx));
    }
    db.validate();
    if (database_utility(db) > Money()) return db;
  }
}

}  // namespace mdus::testing
