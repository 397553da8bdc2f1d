#pragma once

#include <cstdint>
#include <string>
#include <utility>
#include <vector>

#include "mdus/matching.hpp"
#include "mdus/money.hpp"

namespace mdus {

struct MiningStats {
  std::string algo;
  std::string delta;
  Money min_util;
  Money db_util;
  std::uint64_t candidates_seq = 0;
  std::uint64_t candidates_dim = 0;
  std::uint64_t candidates_total = 0;
  std::uint64_t pattern_count = 0;
  std::int64_t runtime_ms = 0;
};

struct MiningReport {
  /// Canonically sorted after finalize_report().
  std::vector<std::pair<MultiDimPattern, Money>> patterns;
  MiningStats stats;
};

/// Sorts patterns canonically and fills pattern_count.
void finalize_report(MiningReport& report);

}  // namespace mdus
