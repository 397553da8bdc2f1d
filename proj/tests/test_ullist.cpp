#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "mdus/ullist.hpp"
#include "test_support.hpp"

using namespace mdus;
using mdus::testing::random_micro_db;
using mdus::testing::table1;

TEST_CASE("ullist over the first running-example transaction") {
  const auto db = table1();
  const auto ul = build_ullist(db.transactions[0].seq, db.profits);

  REQUIRE(ul.cells.size() == 7);
  REQUIRE(ul.itemset_count() == 4);

  // Flattened order: [a c][a c e][c][b].
  const std::vector<std::string> items = {"a", "c", "a", "c", "e", "c", "b"};
  const std::vector<std::int64_t> utils = {4, 15, 20, 5, 4, 10, 3};
  const std::vector<std::int64_t> ruts = {57, 42, 22, 17, 13, 3, 0};
  for (std::size_t i = 0; i < ul.cells.size(); ++i) {
    CHECK(ul.cells[i].item == items[i]);
    CHECK(ul.cells[i].util == Money::from_units(utils[i]));
    CHECK(ul.cells[i].rutil == Money::from_units(ruts[i]));
  }

  CHECK(ul.header.at("a") == 0);
  CHECK(ul.header.at("c") == 1);
  CHECK(ul.header.at("e") == 4);
  CHECK(ul.header.at("b") == 6);
  CHECK(ul.cells[0].next == 2);
  CHECK(ul.cells[2].next == -1);
  CHECK(ul.cells[1].next == 3);
  CHECK(ul.cells[3].next == 5);
  CHECK(ul.cells[5].next == -1);
  CHECK(ul.cells[6].next == -1);

  CHECK(ul.itemset_start == std::vector<int>{0, 2, 5, 6, 7});
  CHECK(ul.itemset_of == std::vector<int>{0, 0, 1, 1, 1, 2, 3});
}

TEST_CASE("first cell utility plus its remaining utility equals the total") {
  std::mt19937_64 rng(23);
  for (int iter = 0; iter < 300; ++iter) {
    const auto db = random_micro_db(rng);
    for (const auto& tx : db.transactions) {
      const auto ul = build_ullist(tx.seq, db.profits);
      REQUIRE_FALSE(ul.cells.empty());
      CHECK(ul.cells[0].util + ul.cells[0].rutil ==
            transaction_utility(tx, db.profits));
      // rutil telescopes: rutil[i] == util[i+1] + rutil[i+1].
      for (std::size_t i = 0; i + 1 < ul.cells.size(); ++i)
        CHECK(ul.cells[i].rutil ==
              ul.cells[i + 1].util + ul.cells[i + 1].rutil);
      CHECK(ul.cells.back().rutil == Money());
    }
  }
}

TEST_CASE("next chains enumerate exactly the occurrences of each item") {
  std::mt19937_64 rng(29);
  for (int iter = 0; iter < 300; ++iter) {
    const auto db = random_micro_db(rng);
    for (const auto& tx : db.transactions) {
      const auto ul = build_ullist(tx.seq, db.profits);
      for (const auto& [item, first] : ul.header) {
        std::size_t count = 0;
        int prev_itemset = -1;
        for (int c = first; c != -1; c = ul.cells[c].next) {
          CHECK(ul.cells[c].item == item);
          CHECK(ul.itemset_of[c] > prev_itemset);
          prev_itemset = ul.itemset_of[c];
          ++count;
        }
        std::size_t expect = 0;
        for (const auto& is : tx.seq.itemsets)
          for (const auto& qi : is.entries) expect += qi.item == item;
        CHECK(count == expect);
      }
    }
  }
}
