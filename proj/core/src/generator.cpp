#include "mdus/generator.hpp"

#include <algorithm>
#include <cmath>
#include <random>

#include "mdus/errors.hpp"

namespace mdus {

QSDatabase gen_synthetic(const GenParams& p) {
  if (p.num_transactions < 1 || p.num_items < 1 || p.num_dims < 0 ||
      (p.num_dims > 0 && p.values_per_dim < 1) ||
      p.avg_itemsets_per_seq < 1 || p.avg_items_per_itemset < 1)
    throw ParameterError("generator parameters must be positive");

  std::mt19937_64 rng(p.seed);
  QSDatabase db;

  std::vector<Item> items;
  for (int i = 0; i < p.num_items; ++i)
    items.push_back("i" + std::to_string(i));
  std::sort(items.begin(), items.end());

  std::lognormal_distribution<double> profit_dist(1.0, 1.5);
  for (const auto& item : items) {
    double v = std::clamp(profit_dist(rng), 0.01, 1000.00);
    db.profits.set(item,
                   Money::from_raw(static_cast<std::int64_t>(
                       std::llround(v * Money::kScale))));
  }

  for (int d = 0; d < p.num_dims; ++d)
    db.schema.names.push_back("d" + std::to_string(d));

  std::uniform_int_distribution<int> qty_dist(1, 5);
  std::uniform_int_distribution<int> nsets_dist(1,
                                                2 * p.avg_itemsets_per_seq - 1);
  const int max_per_set = std::min(2 * p.avg_items_per_itemset - 1,
                                   p.num_items);
  std::uniform_int_distribution<int> nitems_dist(1, max_per_set);
  std::uniform_int_distribution<int> item_dist(0, p.num_items - 1);
  std::uniform_int_distribution<int> value_dist(0, p.values_per_dim - 1);

  for (int t = 0; t < p.num_transactions; ++t) {
    Transaction tx;
    tx.sid = "S" + std::to_string(t + 1);
    for (int d = 0; d < p.num_dims; ++d)
      tx.dims.push_back("d" + std::to_string(d) + "v" +
                        std::to_string(value_dist(rng)));
    const int nsets = nsets_dist(rng);
    for (int s = 0; s < nsets; ++s) {
      const int n = nitems_dist(rng);
      std::vector<int> picked;
      while (static_cast<int>(picked.size()) < n) {
        int idx = item_dist(rng);
        if (std::find(picked.begin(), picked.end(), idx) == picked.end())
          picked.push_back(idx);
      }
      std::sort(picked.begin(), picked.end(),
                [&](int a, int b) { return items[a] < items[b]; });
      QItemset is;
      for (int idx : picked) is.entries.push_back({items[idx], qty_dist(rng)});
      tx.seq.itemsets.push_back(std::move(is));
    }
    db.transactions.push_back(std::move(tx));
  }
  db.validate();
  return db;
}

}  // namespace mdus
