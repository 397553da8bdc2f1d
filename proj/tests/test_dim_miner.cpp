#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <algorithm>
#include <random>

#include "mdus/dim_miner.hpp"
#include "mdus/errors.hpp"
#include "mdus/matching.hpp"
#include "test_support.hpp"

using namespace mdus;
using mdus::testing::random_micro_db;
using mdus::testing::table1;

namespace {

// Dimensional database of <[a]> over the running example:
// per-transaction utilities 20, 0, 40, 12, 36.
DimDatabase dim_db_of_a(const QSDatabase& db) {
  return build_dim_db({{{"a"}}},
                      {{0, Money::from_units(20)},
                       {2, Money::from_units(40)},
                       {3, Money::from_units(12)},
                       {4, Money::from_units(36)}},
                      db);
}

}  // namespace

TEST_CASE("build_dim_db covers every transaction") {
  const auto db = table1();
  const auto dimdb = dim_db_of_a(db);
  REQUIRE(dimdb.rows.size() == 5);
  const std::int64_t tus[] = {20, 0, 40, 12, 36};
  for (int i = 0; i < 5; ++i) {
    CHECK(dimdb.rows[i].sid == db.transactions[i].sid);
    CHECK(dimdb.rows[i].tu == Money::from_units(tus[i]));
    REQUIRE(dimdb.rows[i].values.size() == 3);
    CHECK(std::is_sorted(dimdb.rows[i].values.begin(),
                         dimdb.rows[i].values.end()));
  }
  CHECK(dimdb.rows[0].values[0] == DimToken{0, "Male"});
  CHECK(dimdb.rows[0].values[2] == DimToken{2, "Doctor"});
  CHECK(dimdb.total == Money::from_units(108));
}

TEST_CASE("utility-lists over the dimensional database") {
  const auto dimdb = dim_db_of_a(table1());

  const auto male = build_utility_list({0, "Male"}, dimdb);
  CHECK(male.sutil == Money::from_units(72));
  REQUIRE(male.records.size() == 3);
  CHECK(male.records[0] == std::pair{0, Money::from_units(20)});
  CHECK(male.records[1] == std::pair{2, Money::from_units(40)});
  CHECK(male.records[2] == std::pair{3, Money::from_units(12)});

  const auto young = build_utility_list({1, "Young"}, dimdb);
  CHECK(young.sutil == Money::from_units(32));

  // Middle only occurs where <[a]> does not: present with zero utility.
  const auto middle = build_utility_list({1, "Middle"}, dimdb);
  REQUIRE(middle.records.size() == 1);
  CHECK(middle.sutil == Money());

  const auto joined = construct_ul(male, young);
  CHECK(joined.name ==
        std::vector<DimToken>{{0, "Male"}, {1, "Young"}});
  REQUIRE(joined.records.size() == 2);
  CHECK(joined.records[0] == std::pair{0, Money::from_units(20)});
  CHECK(joined.records[1] == std::pair{3, Money::from_units(12)});
  CHECK(joined.sutil == Money::from_units(32));
  CHECK(dim_itemset_utility(joined.name, dimdb) == joined.sutil);
}

TEST_CASE("construct_ul rejects non-siblings") {
  const auto dimdb = dim_db_of_a(table1());
  const auto male = build_utility_list({0, "Male"}, dimdb);
  const auto young = build_utility_list({1, "Young"}, dimdb);
  const auto doctor = build_utility_list({2, "Doctor"}, dimdb);
  const auto my = construct_ul(male, young);
  CHECK_THROWS_AS(construct_ul(my, doctor), ParameterError);
  CHECK_NOTHROW(construct_ul(my, construct_ul(male, doctor)));
}

TEST_CASE("token-set utility is anti-monotone") {
  std::mt19937_64 rng(61);
  for (int iter = 0; iter < 200; ++iter) {
    const auto db = random_micro_db(rng);
    if (db.schema.arity() == 0) continue;
    // Any transaction's token set, with random utilities.
    std::vector<std::pair<int, Money>> per_tx;
    for (std::size_t t = 0; t < db.transactions.size(); ++t)
      if (rng() % 2)
        per_tx.emplace_back(static_cast<int>(t),
                            Money::from_units(1 + rng() % 9));
    const auto dimdb = build_dim_db({{{"a"}}}, per_tx, db);
    for (const auto& row : dimdb.rows) {
      const auto& full = row.values;
      for (std::size_t drop = 0; drop < full.size(); ++drop) {
        std::vector<DimToken> sub;
        for (std::size_t i = 0; i < full.size(); ++i)
          if (i != drop) sub.push_back(full[i]);
        if (sub.empty()) continue;
        CHECK(dim_itemset_utility(full, dimdb) <=
              dim_itemset_utility(sub, dimdb));
      }
    }
  }
}

TEST_CASE("combine fills slots and wildcards the rest") {
  DimensionSchema schema;
  schema.names = {"Sex", "Age", "Occupation"};
  const Pattern husp{{{"a"}}};
  const auto t = combine({{0, "Male"}, {2, "Doctor"}}, husp, schema);
  CHECK(t.dims == DimVector{"Male", "*", "Doctor"});
  CHECK(t.seq == husp);
  CHECK(combine({}, husp, schema).dims == DimVector{"*", "*", "*"});
  CHECK_THROWS_AS(combine({{0, "Male"}, {0, "Female"}}, husp, schema),
                  ParameterError);
}

TEST_CASE("dimensional mining of <[a]> at threshold 39.4") {
  const auto db = table1();
  const auto dimdb = dim_db_of_a(db);
  const auto res =
      dhui_mine({{{"a"}}}, dimdb, Money::parse("39.4"), db.schema);

  std::vector<std::pair<std::string, std::int64_t>> got;
  for (const auto& [pat, u] : res.patterns)
    got.emplace_back(pat.str(), u.raw() / 10000);
  std::sort(got.begin(), got.end());

  std::vector<std::pair<std::string, std::int64_t>> want = {
      {"(*,*,*)<[a]>", 108},          {"(*,*,Driver)<[a]>", 40},
      {"(*,Child,*)<[a]>", 40},       {"(*,Child,Driver)<[a]>", 40},
      {"(Male,*,*)<[a]>", 72},        {"(Male,*,Driver)<[a]>", 40},
      {"(Male,Child,*)<[a]>", 40},    {"(Male,Child,Driver)<[a]>", 40},
  };
  std::sort(want.begin(), want.end());
  CHECK(got == want);

  for (const auto& [pat, u] : res.patterns)
    CHECK(u == pattern_utility(pat, db));
}

TEST_CASE("high threshold leaves only the all-wildcard pattern") {
  const auto db = table1();
  const auto dimdb = dim_db_of_a(db);
  const auto res =
      dhui_mine({{{"a"}}}, dimdb, Money::parse("98.5"), db.schema);
  REQUIRE(res.patterns.size() == 1);
  CHECK(res.patterns[0].first.dims == DimVector{"*", "*", "*"});
  CHECK(res.patterns[0].second == Money::from_units(108));

  const auto none =
      dhui_mine({{{"a"}}}, dimdb, Money::from_units(109), db.schema);
  CHECK(none.patterns.empty());
}
