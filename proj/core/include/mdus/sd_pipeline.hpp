#pragma once

#include "mdus/report.hpp"
#include "mdus/model.hpp"

namespace mdus {

/// Sequence-first mining: mine the sequential part, then dimensional mining
/// per high-utility sequence, then
/// pattern join. candidates_seq counts Judge evaluations, candidates_dim
/// counts utility-lists.
MiningReport mine_sd(const QSDatabase& db, const Delta& delta,
                     int threads = 1);

}  // namespace mdus
