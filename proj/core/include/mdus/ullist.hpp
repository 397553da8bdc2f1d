#pragma once

#include <map>
#include <vector>

#include "mdus/model.hpp"

namespace mdus {

/// One flattened cell of a q-sequence: the item, its utility there, the
/// remaining utility of everything strictly after it, and the index of the
/// item's next occurrence (-1 when none).
struct ULCell {
  Item item;
  Money util;
  Money rutil;
  int next = -1;
};

/// Utility-linked list over one transaction's q-sequence. The header maps
/// each item to its first cell; next links chain further occurrences.
struct ULList {
  std::map<Item, int> header;
  std::vector<ULCell> cells;
  /// Itemset index of each cell.
  std::vector<int> itemset_of;
  /// First cell index of each itemset; one extra end sentinel.
  std::vector<int> itemset_start;

  int itemset_count() const {
    return static_cast<int>(itemset_start.size()) - 1;
  }
};

ULList build_ullist(const QSequence& sq, const ProfitTable& pt);

}  // namespace mdus
