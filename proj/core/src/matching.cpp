#include "mdus/matching.hpp"

#include <algorithm>

#include "mdus/errors.hpp"

namespace mdus {

std::size_t Pattern::length() const {
  std::size_t n = 0;
  for (const auto& is : itemsets) n += is.size();
  return n;
}

std::string Pattern::str() const {
  std::string out = "<";
  for (const auto& is : itemsets) {
    out += '[';
    for (std::size_t i = 0; i < is.size(); ++i) {
      if (i) out += ' ';
      out += is[i];
    }
    out += ']';
  }
  out += '>';
  return out;
}

std::string MultiDimPattern::str() const {
  std::string out = "(";
  for (std::size_t i = 0; i < dims.size(); ++i) {
    if (i) out += ',';
    out += dims[i];
  }
  out += ')';
  out += seq.str();
  return out;
}

bool canonical_less(const MultiDimPattern& a, const MultiDimPattern& b) {
  for (std::size_t i = 0; i < std::min(a.dims.size(), b.dims.size()); ++i) {
    const bool wa = a.dims[i] == kWildcard;
    const bool wb = b.dims[i] == kWildcard;
    if (wa != wb) return wb;  // concrete sorts before wildcard
    if (a.dims[i] != b.dims[i]) return a.dims[i] < b.dims[i];
  }
  if (a.dims.size() != b.dims.size()) return a.dims.size() < b.dims.size();
  return a.seq.str() < b.seq.str();
}

bool itemset_contained(const Itemset& w, const Itemset& w2) {
  return std::includes(w2.begin(), w2.end(), w.begin(), w.end());
}

bool qitemset_contained(const QItemset& v, const QItemset& v2) {
  auto it = v2.entries.begin();
  for (const auto& qi : v.entries) {
    while (it != v2.entries.end() && it->item < qi.item) ++it;
    if (it == v2.entries.end() || it->item != qi.item ||
        it->quantity != qi.quantity)
      return false;
  }
  return true;
}

bool itemset_in_qitemset(const Itemset& w, const QItemset& v2) {
  auto it = v2.entries.begin();
  for (const auto& item : w) {
    while (it != v2.entries.end() && it->item < item) ++it;
    if (it == v2.entries.end() || it->item != item) return false;
  }
  return true;
}

namespace {

// Greedy embedding test: map each pattern itemset to the earliest later
// container itemset that accepts it.
template <typename Container, typename Accepts>
bool embeds(const Container& pattern_itemsets, std::size_t container_size,
            Accepts&& accepts) {
  std::size_t j = 0;
  for (std::size_t i = 0; i < pattern_itemsets.size(); ++i) {
    while (j < container_size && !accepts(pattern_itemsets[i], j)) ++j;
    if (j == container_size) return false;
    ++j;
  }
  return true;
}

}  // namespace

bool sequence_contained(const Pattern& s, const Pattern& s2) {
  return embeds(s.itemsets, s2.itemsets.size(),
                [&](const Itemset& w, std::size_t j) {
                  return itemset_contained(w, s2.itemsets[j]);
                });
}

bool sequence_contained(const Pattern& s, const QSequence& s2) {
  return embeds(s.itemsets, s2.itemsets.size(),
                [&](const Itemset& w, std::size_t j) {
                  return itemset_in_qitemset(w, s2.itemsets[j]);
                });
}

bool qsequence_contained(const QSequence& s, const QSequence& s2) {
  return embeds(s.itemsets, s2.itemsets.size(),
                [&](const QItemset& v, std::size_t j) {
                  return qitemset_contained(v, s2.itemsets[j]);
                });
}

namespace {

bool dim_slot_contained(const std::string& d, const std::string& d2) {
  return d2 == kWildcard || d == d2;
}

}  // namespace

bool mdim_contained(const MultiDimPattern& t, const MultiDimPattern& t2) {
  if (t.dims.size() != t2.dims.size())
    throw ValidationError("dimension arity mismatch in containment check");
  for (std::size_t i = 0; i < t.dims.size(); ++i)
    if (!dim_slot_contained(t.dims[i], t2.dims[i])) return false;
  return sequence_contained(t.seq, t2.seq);
}

bool mdim_contained(const MultiDimPattern& t, const Transaction& t2,
                    const DimensionSchema& schema) {
  if (t.dims.size() != schema.arity() || t2.dims.size() != schema.arity())
    throw ValidationError("dimension arity mismatch in containment check");
  for (std::size_t i = 0; i < t.dims.size(); ++i)
    if (!dim_slot_contained(t.dims[i], t2.dims[i])) return false;
  return sequence_contained(t.seq, t2.seq);
}

bool dims_select(const DimVector& pattern_dims, const DimVector& tx_dims) {
  if (pattern_dims.size() != tx_dims.size())
    throw ValidationError("dimension arity mismatch");
  for (std::size_t i = 0; i < pattern_dims.size(); ++i)
    if (pattern_dims[i] != kWildcard && pattern_dims[i] != tx_dims[i])
      return false;
  return true;
}

bool matches(const Pattern& s, const QSequence& sq) {
  if (s.itemsets.size() != sq.itemsets.size()) return false;
  for (std::size_t k = 0; k < s.itemsets.size(); ++k) {
    const auto& w = s.itemsets[k];
    const auto& v = sq.itemsets[k];
    if (w.size() != v.entries.size()) return false;
    for (std::size_t i = 0; i < w.size(); ++i)
      if (w[i] != v.entries[i].item) return false;
  }
  return true;
}

Money max_match_utility(const Pattern& s, const QSequence& sq,
                        const ProfitTable& pt) {
  if (s.itemsets.empty()) return Money();
  const std::size_t np = s.itemsets.size();
  const std::size_t nt = sq.itemsets.size();
  if (np > nt) return Money();

  constexpr std::int64_t kNone = -1;
  // best[i][j]: max utility embedding the first i pattern itemsets into the
  // first j transaction itemsets; kNone when no embedding exists. The
  // matched-itemset utility at a fixed transaction itemset is fixed, so the
  // recurrence is exact.
  std::vector<std::int64_t> prev(nt + 1, 0), cur(nt + 1, kNone);
  for (std::size_t i = 1; i <= np; ++i) {
    const auto& w = s.itemsets[i - 1];
    std::fill(cur.begin(), cur.end(), kNone);
    for (std::size_t j = 1; j <= nt; ++j) {
      std::int64_t best = cur[j - 1];
      if (prev[j - 1] != kNone && itemset_in_qitemset(w, sq.itemsets[j - 1])) {
        std::int64_t match_util = 0;
        for (const auto& item : w) {
          for (const auto& qi : sq.itemsets[j - 1].entries) {
            if (qi.item == item) {
              match_util += item_utility(qi, pt).raw();
              break;
            }
          }
        }
        best = std::max(best, prev[j - 1] + match_util);
      }
      cur[j] = best;
    }
    std::swap(prev, cur);
  }
  return prev[nt] == kNone ? Money() : Money::from_raw(prev[nt]);
}

Money max_match_utility(const MultiDimPattern& t, const Transaction& tx,
                        const ProfitTable& pt) {
  if (!dims_select(t.dims, tx.dims)) return Money();
  return max_match_utility(t.seq, tx.seq, pt);
}

Money pattern_utility(const MultiDimPattern& t, const QSDatabase& db) {
  Money sum;
  for (const auto& tx : db.transactions)
    sum += max_match_utility(t, tx, db.profits);
  return sum;
}

}  // namespace mdus
