#pragma once

#include <cstdint>
#include <utility>
#include <vector>

#include "mdus/dim_token.hpp"
#include "mdus/matching.hpp"
#include "mdus/model.hpp"

namespace mdus {

/// One row of a HUSP's dimensional database: the transaction's dimension
/// tokens and the HUSP's utility there (TU).
struct DimTransaction {
  std::string sid;
  std::vector<DimToken> values;  // one per schema dimension, sorted
  Money tu;
};

struct DimDatabase {
  Pattern husp;
  std::vector<DimTransaction> rows;
  Money total;  // sum of tu == the HUSP's database utility
};

/// Vertical utility-list: head (name, sutil) plus (row, util) records.
struct UtilityList {
  std::vector<DimToken> name;  // canonically ordered itemset
  Money sutil;
  std::vector<std::pair<int, Money>> records;  // (row index, util), sorted
};

/// Builds the dimensional database of a HUSP from its per-transaction
/// utilities (index, utility) over `db`. Rows cover every transaction; tu
/// is 0 where the HUSP has no match.
DimDatabase build_dim_db(const Pattern& husp,
                         const std::vector<std::pair<int, Money>>& per_tx,
                         const QSDatabase& db);

UtilityList build_utility_list(const DimToken& token, const DimDatabase& dimdb);

/// Prefix-based join: x and y share all but their last token. Records are
/// the SID intersection; per-record util is the minimum of the two.
UtilityList construct_ul(const UtilityList& x, const UtilityList& y);

/// Sum of tu over rows containing every token of x. x must be nonempty.
Money dim_itemset_utility(const std::vector<DimToken>& x,
                          const DimDatabase& dimdb);

struct DimMineResult {
  std::vector<std::pair<std::vector<DimToken>, Money>> itemsets;
  std::uint64_t lists_built = 0;  // candidate count: utility-lists constructed
};

/// Recursive pairwise joins over a frontier of utility-lists (all with
/// sutil >= minutil); prunes by downward closure.
void dminer(const std::vector<UtilityList>& uls, Money minutil,
            DimMineResult& acc);

/// Fills dimension slots from tokens (wildcards elsewhere); the sequence
/// part is the HUSP.
MultiDimPattern combine(const std::vector<DimToken>& x, const Pattern& husp,
                        const DimensionSchema& schema);

/// Dimensional mining for one high-utility sequence: 1-token utility-lists,
/// threshold filter, dminer recursion, combine. Also emits the all-wildcard
/// pattern when the sequence itself clears the threshold.
struct DhuiResult {
  std::vector<std::pair<MultiDimPattern, Money>> patterns;
  std::uint64_t lists_built = 0;
};
DhuiResult dhui_mine(const Pattern& husp, const DimDatabase& dimdb,
                     Money minutil, const DimensionSchema& schema);

}  // namespace mdus
