#pragma once

#include <compare>
#include <cstdint>
#include <map>
#include <string>
#include <vector>

#include "mdus/money.hpp"

namespace mdus {

/// An item is a non-empty token without whitespace. The tokens "-1", "-2",
/// "|" and "*" are reserved by the file format, ':' separates item from
/// quantity, and '#' prefixes namespaced dimension tokens.
using Item = std::string;

constexpr char kWildcard[] = "*";
constexpr char kDimPrefix = '#';

/// Throws ValidationError unless `name` is a legal item token.
void validate_item(const Item& name);
/// Throws ValidationError unless `value` is a legal dimension value token.
void validate_dim_value(const std::string& value);

class ProfitTable {
 public:
  void set(const Item& item, Money profit);
  bool contains(const Item& item) const;
  /// Unit profit of `item`; throws ValidationError when the item is unknown.
  Money profit(const Item& item) const;
  const std::map<Item, Money>& entries() const { return entries_; }

 private:
  std::map<Item, Money> entries_;
};

struct QItem {
  Item item;
  std::int64_t quantity = 1;  // >= 1

  friend auto operator<=>(const QItem&, const QItem&) = default;
};

/// Entries strictly increasing by item name; never empty.
struct QItemset {
  std::vector<QItem> entries;

  friend auto operator<=>(const QItemset&, const QItemset&) = default;
};

struct QSequence {
  std::vector<QItemset> itemsets;

  friend auto operator<=>(const QSequence&, const QSequence&) = default;
};

struct DimensionSchema {
  std::vector<std::string> names;

  std::size_t arity() const { return names.size(); }
  friend auto operator<=>(const DimensionSchema&,
                          const DimensionSchema&) = default;
};

/// One value per schema dimension. "*" is the wildcard marker; data
/// transactions carry concrete values only.
using DimVector = std::vector<std::string>;

struct Transaction {
  std::string sid;
  DimVector dims;
  QSequence seq;
};

struct QSDatabase {
  DimensionSchema schema;
  ProfitTable profits;
  std::vector<Transaction> transactions;

  /// Checks profit coverage, schema arity, quantities, token legality and
  /// SID uniqueness. Throws ValidationError.
  void validate() const;
};

// Utility arithmetic.
Money item_utility(const QItem& qi, const ProfitTable& pt);
Money qitemset_utility(const QItemset& v, const ProfitTable& pt);
Money qsequence_utility(const QSequence& s, const ProfitTable& pt);
Money transaction_utility(const Transaction& t, const ProfitTable& pt);
Money database_utility(const QSDatabase& db);

}  // namespace mdus
