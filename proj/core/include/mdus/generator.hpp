#pragma once

#include <cstdint>

#include "mdus/model.hpp"

namespace mdus {

/// Synthetic database knobs. The seed fully determines the output.
struct GenParams {
  int num_transactions = 1000;
  int num_items = 50;
  int num_dims = 3;
  int values_per_dim = 4;
  int avg_itemsets_per_seq = 6;
  int avg_items_per_itemset = 4;
  std::uint64_t seed = 1;
};

/// Quantities uniform in 1..5, profits log-normal clamped to
/// [0.01, 1000.00] and quantized to the money grid, dimension values
/// uniform per slot.
QSDatabase gen_synthetic(const GenParams& params);

}  // namespace mdus
