#include "mdus/ullist.hpp"

namespace mdus {

ULList build_ullist(const QSequence& sq, const ProfitTable& pt) {
  ULList ul;
  for (std::size_t j = 0; j < sq.itemsets.size(); ++j) {
    ul.itemset_start.push_back(static_cast<int>(ul.cells.size()));
    for (const auto& qi : sq.itemsets[j].entries) {
      ul.cells.push_back({qi.item, item_utility(qi, pt), Money(), -1});
      ul.itemset_of.push_back(static_cast<int>(j));
    }
  }
  ul.itemset_start.push_back(static_cast<int>(ul.cells.size()));

  // Suffix sums for rutil, then occurrence chains front-to-back.
  Money suffix;
  for (int c = static_cast<int>(ul.cells.size()) - 1; c >= 0; --c) {
    ul.cells[c].rutil = suffix;
    suffix += ul.cells[c].util;
  }
  std::map<Item, int> last;
  for (int c = 0; c < static_cast<int>(ul.cells.size()); ++c) {
    const Item& item = ul.cells[c].item;
    auto it = last.find(item);
    if (it == last.end()) {
      ul.header[item] = c;
    } else {
      ul.cells[it->second].next = c;
    }
    last[item] = c;
  }
  return ul;
}

}  // namespace mdus
