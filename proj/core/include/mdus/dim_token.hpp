#pragma once

#include <compare>
#include <string>

#include "mdus/model.hpp"

namespace mdus {

/// A dimension value namespaced by its slot index, so identical value
/// strings in different dimensions never collide.
struct DimToken {
  int dim = 0;
  std::string value;

  friend auto operator<=>(const DimToken&, const DimToken&) = default;
};

/// "#<dim>:<value>" — the item-name form used inside transformed databases.
/// The '#' prefix sorts dimension tokens before every regular item.
std::string dim_token_name(const DimToken& t);
bool is_dim_token(const Item& name);
/// Parses a "#i:value" item back into a token; throws ValidationError.
DimToken parse_dim_token(const Item& name);

}  // namespace mdus
