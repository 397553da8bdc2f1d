#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mdus/errors.hpp"
#include "mdus/model.hpp"
#include "test_support.hpp"

using namespace mdus;
using mdus::testing::qis;
using mdus::testing::table1;

TEST_CASE("money parse and render") {
  CHECK(Money::parse("394").raw() == 3940000);
  CHECK(Money::parse("39.4").raw() == 394000);
  CHECK(Money::parse("0.0001").raw() == 1);
  CHECK(Money::parse("39.4").str() == "39.4");
  CHECK(Money::from_units(394).str() == "394");
  CHECK(Money().str() == "0");
  CHECK_THROWS_AS(Money::parse("1.23456"), ValidationError);
  CHECK_THROWS_AS(Money::parse("x"), ValidationError);
  CHECK_THROWS_AS(Money::parse(""), ValidationError);
}

TEST_CASE("item utility") {
  ProfitTable pt;
  pt.set("c", Money::from_units(5));
  pt.set("a", Money::from_units(4));
  pt.set("x", Money());
  CHECK(item_utility({"c", 3}, pt) == Money::from_units(15));
  CHECK(item_utility({"a", 1}, pt) == Money::from_units(4));
  CHECK(item_utility({"x", 7}, pt) == Money());
  CHECK_THROWS_AS(item_utility({"z", 1}, pt), ValidationError);
}

TEST_CASE("qitemset utility") {
  const auto db = table1();
  CHECK(qitemset_utility(qis({{"a", 1}, {"c", 3}}), db.profits) ==
        Money::from_units(19));
  CHECK(qitemset_utility(qis({{"a", 5}, {"c", 1}, {"e", 4}}), db.profits) ==
        Money::from_units(29));
  CHECK(qitemset_utility(qis({{"b", 2}}), db.profits) ==
        item_utility({"b", 2}, db.profits));
}

TEST_CASE("transaction and database utility") {
  const auto db = table1();
  CHECK(transaction_utility(db.transactions[0], db.profits) ==
        Money::from_units(61));
  CHECK(transaction_utility(db.transactions[4], db.profits) ==
        Money::from_units(137));
  CHECK(database_utility(db) == Money::from_units(394));

  Transaction empty;
  empty.sid = "E";
  CHECK(transaction_utility(empty, db.profits) == Money());

  QSDatabase none;
  CHECK(database_utility(none) == Money());

  QSDatabase single;
  single.profits = db.profits;
  single.transactions.push_back(db.transactions[2]);
  CHECK(database_utility(single) == Money::from_units(50));
}

TEST_CASE("min_utility") {
  CHECK(min_utility(Money::from_units(394), Delta::parse("0.1")) ==
        Money::parse("39.4"));
  CHECK(min_utility(Money::from_units(394), Delta::parse("1")) ==
        Money::from_units(394));
  CHECK(min_utility(Money(), Delta::parse("0.5")) == Money());
  CHECK_THROWS_AS(Delta::parse("0"), ParameterError);
  CHECK_THROWS_AS(Delta::parse("1.5"), ParameterError);
  CHECK_THROWS_AS(Delta::parse("-0.1"), ParameterError);
}

TEST_CASE("utility invariant under transaction permutation") {
  auto db = table1();
  const Money total = database_utility(db);
  std::mt19937_64 rng(7);
  for (int i = 0; i < 20; ++i) {
    std::shuffle(db.transactions.begin(), db.transactions.end(), rng);
    CHECK(database_utility(db) == total);
  }
}

TEST_CASE("transaction utility ignores dimensions") {
  auto db = table1();
  const Money u = transaction_utility(db.transactions[0], db.profits);
  db.transactions[0].dims = {"X", "Y", "Z"};
  CHECK(transaction_utility(db.transactions[0], db.profits) == u);
}

TEST_CASE("sub-q-itemset utility is bounded by the superset") {
  const auto db = table1();
  const auto super = qis({{"a", 5}, {"c", 1}, {"e", 4}});
  const auto sub = qis({{"a", 5}, {"e", 4}});
  CHECK(qitemset_utility(sub, db.profits) <=
        qitemset_utility(super, db.profits));
}

TEST_CASE("validation rejects bad databases") {
  auto db = table1();
  db.transactions[1].sid = "S1";
  CHECK_THROWS_AS(db.validate(), ValidationError);

  db = table1();
  db.transactions[0].dims.pop_back();
  CHECK_THROWS_AS(db.validate(), ValidationError);

  db = table1();
  db.transactions[0].seq.itemsets[0].entries[0].quantity = 0;
  CHECK_THROWS_AS(db.validate(), ValidationError);

  CHECK_THROWS_AS(validate_item("-1"), ValidationError);
  CHECK_THROWS_AS(validate_item("*"), ValidationError);
  CHECK_THROWS_AS(validate_item("#0:x"), ValidationError);
  CHECK_THROWS_AS(validate_item("a:1"), ValidationError);
  CHECK_THROWS_AS(validate_item(""), ValidationError);
}
