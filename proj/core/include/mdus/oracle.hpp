#pragma once

#include <utility>
#include <vector>

#include "mdus/matching.hpp"
#include "mdus/report.hpp"

namespace mdus {

/// Enumeration limits for the brute-force reference. Databases whose
/// transactions exceed the pattern-space caps are refused, never silently
/// truncated, so a passing equivalence test is meaningful.
struct OracleBounds {
  int max_pattern_itemsets = 4;
  int max_items_per_itemset = 4;
  int max_transactions = 12;
  int max_distinct_items = 6;
  int max_dimensions = 3;
};

/// Exhaustive embedding enumeration: every embedding with its
/// utility, plus the maximum (0 when none or the dimensions do not select
/// the transaction).
std::pair<Money, std::vector<std::pair<Embedding, Money>>>
oracle_match_utility(const MultiDimPattern& t, const Transaction& tx,
                     const ProfitTable& pt);

/// Sequence-only form.
std::pair<Money, std::vector<std::pair<Embedding, Money>>>
oracle_match_utility(const Pattern& s, const QSequence& sq,
                     const ProfitTable& pt);

/// Definition-level mining: enumerate every multi-dimensional pattern
/// buildable from items and dimension values occurring in the database
/// (within bounds), keep those with utility >= minutil. Throws
/// OracleRefusal when the database exceeds the bounds.
MiningReport oracle_mine(const QSDatabase& db, const Delta& delta,
                         const OracleBounds& bounds = {});

}  // namespace mdus
