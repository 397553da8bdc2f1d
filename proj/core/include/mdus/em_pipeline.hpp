#pragma once

#include <set>
#include <utility>
#include <vector>

#include "mdus/dim_token.hpp"
#include "mdus/report.hpp"
#include "mdus/seq_miner.hpp"

namespace mdus {

/// The dimension-free equivalent database: dimension values become
/// zero-profit items inside one dedicated itemset placed first in each
/// q-sequence.
struct TransformedDB {
  std::vector<std::pair<std::string, QSequence>> rows;  // (sid, q-sequence)
  ProfitTable profits;            // original profits plus 0 per dim token
  std::set<Item> dim_marker;      // the namespaced dimension tokens
};

TransformedDB transform_db(const QSDatabase& db);

/// Maps a mined pattern of the transformed database back to a
/// multi-dimensional pattern: dimension tokens fill their slots, absent
/// dimensions become wildcards.
MultiDimPattern inverse_transform(const Pattern& p,
                                  const DimensionSchema& schema);

/// Equivalent-transformation mining: transform, mine, inverse-transform.
/// Utilities are preserved by the zero-profit dimension items.
MiningReport mine_em(const QSDatabase& db, const Delta& delta,
                     int threads = 1);

}  // namespace mdus
