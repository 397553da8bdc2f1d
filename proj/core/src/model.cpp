#include "mdus/model.hpp"

#include <cctype>
#include <set>

#include "mdus/errors.hpp"

namespace mdus {

namespace {

bool has_whitespace(const std::string& s) {
  for (char c : s)
    if (std::isspace(static_cast<unsigned char>(c))) return true;
  return false;
}

}  // namespace

void validate_item(const Item& name) {
  if (name.empty()) throw ValidationError("empty item name");
  if (has_whitespace(name))
    throw ValidationError("item name '" + name + "' contains whitespace");
  if (name == "-1" || name == "-2" || name == "|" || name == kWildcard)
    throw ValidationError("item name '" + name + "' is a reserved token");
  if (name.front() == kDimPrefix)
    throw ValidationError("item name '" + name +
                          "' starts with the reserved dimension prefix '#'");
  if (name.find(':') != std::string::npos)
    throw ValidationError("item name '" + name + "' contains ':'");
}

void validate_dim_value(const std::string& value) {
  if (value.empty()) throw ValidationError("empty dimension value");
  if (has_whitespace(value))
    throw ValidationError("dimension value '" + value +
                          "' contains whitespace");
  if (value == "-1" || value == "-2" || value == "|" || value == kWildcard)
    throw ValidationError("dimension value '" + value +
                          "' is a reserved token");
}

void ProfitTable::set(const Item& item, Money profit) {
  if (profit.raw() < 0)
    throw ValidationError("negative profit for item '" + item + "'");
  entries_[item] = profit;
}

bool ProfitTable::contains(const Item& item) const {
  return entries_.count(item) != 0;
}

Money ProfitTable::profit(const Item& item) const {
  auto it = entries_.find(item);
  if (it == entries_.end())
    throw ValidationError("no profit entry for item '" + item + "'");
  return it->second;
}

void QSDatabase::validate() const {
  std::set<std::string> sids;
  for (const auto& tx : transactions) {
    if (tx.sid.empty()) throw ValidationError("empty SID");
    if (!sids.insert(tx.sid).second)
      throw ValidationError("duplicate SID '" + tx.sid + "'");
    if (tx.dims.size() != schema.arity())
      throw ValidationError("transaction '" + tx.sid + "' has " +
                            std::to_string(tx.dims.size()) +
                            " dimension values, schema expects " +
                            std::to_string(schema.arity()));
    for (const auto& v : tx.dims) validate_dim_value(v);
    for (const auto& is : tx.seq.itemsets) {
      if (is.entries.empty())
        throw ValidationError("empty itemset in transaction '" + tx.sid + "'");
      const Item* prev = nullptr;
      for (const auto& qi : is.entries) {
        validate_item(qi.item);
        if (qi.quantity < 1)
          throw ValidationError("quantity < 1 for item '" + qi.item +
                                "' in transaction '" + tx.sid + "'");
        if (prev && !(*prev < qi.item))
          throw ValidationError("itemset not strictly ordered in '" + tx.sid +
                                "'");
        prev = &qi.item;
        profits.profit(qi.item);  // coverage check
      }
    }
  }
}

Money item_utility(const QItem& qi, const ProfitTable& pt) {
  return pt.profit(qi.item) * qi.quantity;
}

Money qitemset_utility(const QItemset& v, const ProfitTable& pt) {
  Money sum;
  for (const auto& qi : v.entries) sum += item_utility(qi, pt);
  return sum;
}

Money qsequence_utility(const QSequence& s, const ProfitTable& pt) {
  Money sum;
  for (const auto& v : s.itemsets) sum += qitemset_utility(v, pt);
  return sum;
}

Money transaction_utility(const Transaction& t, const ProfitTable& pt) {
  return qsequence_utility(t.seq, pt);
}

Money database_utility(const QSDatabase& db) {
  Money sum;
  for (const auto& t : db.transactions) sum += transaction_utility(t, db.profits);
  return sum;
}

}  // namespace mdus
