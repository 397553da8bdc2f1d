#pragma once

#include <string>
#include <vector>

#include "mdus/model.hpp"

namespace mdus {

/// Quantity-free itemset, canonically ordered, no duplicates.
using Itemset = std::vector<Item>;

struct Pattern {
  std::vector<Itemset> itemsets;

  bool empty() const { return itemsets.empty(); }
  /// Number of items across all itemsets (pattern length).
  std::size_t length() const;
  /// "<[a c][b]>"
  std::string str() const;

  friend auto operator<=>(const Pattern&, const Pattern&) = default;
};

struct MultiDimPattern {
  DimVector dims;  // wildcards allowed
  Pattern seq;

  /// "(Male,Young,*)<TAB-free text> form used for display: (v1,...)<[..]>"
  std::string str() const;

  friend auto operator<=>(const MultiDimPattern&,
                          const MultiDimPattern&) = default;
};

/// One transaction-itemset index per pattern itemset, strictly increasing.
struct Embedding {
  std::vector<std::size_t> positions;

  friend auto operator<=>(const Embedding&, const Embedding&) = default;
};

/// Output ordering: dimension tuples lexicographic with "*" sorting last per
/// slot, then sequence text.
bool canonical_less(const MultiDimPattern& a, const MultiDimPattern& b);

// Itemset containment.
bool itemset_contained(const Itemset& w, const Itemset& w2);
bool qitemset_contained(const QItemset& v, const QItemset& v2);
/// Plain itemset vs q-itemset: every item of `w` occurs in `v2` (quantities
/// ignored).
bool itemset_in_qitemset(const Itemset& w, const QItemset& v2);

// Sequence containment.
bool sequence_contained(const Pattern& s, const Pattern& s2);
bool sequence_contained(const Pattern& s, const QSequence& s2);
/// Quantity-exact q-sequence containment.
bool qsequence_contained(const QSequence& s, const QSequence& s2);

/// Multi-dimensional containment: t is contained in t2; wildcards live on
/// the container side.
bool mdim_contained(const MultiDimPattern& t, const MultiDimPattern& t2);
bool mdim_contained(const MultiDimPattern& t, const Transaction& t2,
                    const DimensionSchema& schema);

/// True when every concrete dimension of the pattern equals the transaction
/// value (pattern wildcards match anything). This is the selection used by
/// pattern utility.
bool dims_select(const DimVector& pattern_dims, const DimVector& tx_dims);

// Exact structural match: same itemset count, identical item sets per
// position.
bool matches(const Pattern& s, const QSequence& sq);

/// Maximum over all embeddings of the pattern's sequence, with
/// quantities taken from the transaction. 0 when the dimensions do not
/// select the transaction or no embedding exists.
Money max_match_utility(const MultiDimPattern& t, const Transaction& tx,
                        const ProfitTable& pt);
/// Sequence-only form (all-wildcard dimensions).
Money max_match_utility(const Pattern& s, const QSequence& sq,
                        const ProfitTable& pt);

/// Pattern utility summed over the whole database.
Money pattern_utility(const MultiDimPattern& t, const QSDatabase& db);

}  // namespace mdus
