#include <doctest.h>

#include <set>

#include "helpers.hpp"
#include "numsg/oracle.hpp"

using namespace numsg;
using namespace numsg::testing;

TEST_CASE("oracle invariants by definition") {
  auto o = oracle::oracle_semigroup({5, 8, 11, 12});
  CHECK(o.generators == IntVec{5, 8, 11, 12});
  CHECK(o.frobenius == 14);
  CHECK(o.genus == 8);
  CHECK(o.gaps == IntVec{1, 2, 3, 4, 6, 7, 9, 14});
  CHECK(o.pseudo_frobenius == IntVec{7, 14});
  CHECK(o.type == 2);
  CHECK(o.multiplicity == 5);
  CHECK(o.embedding_dimension == 4);

  o = oracle::oracle_semigroup({1});
  CHECK(o.gaps.empty());
  CHECK(o.frobenius == -1);
  CHECK(o.pseudo_frobenius == IntVec{-1});

  o = oracle::oracle_semigroup({5, 7, 16});
  CHECK(o.frobenius == 18);
  CHECK(o.genus == 10);
  CHECK(o.pseudo_frobenius == IntVec{9, 18});

  o = oracle::oracle_semigroup({13, 4, 6, 9, 10});
  CHECK(o.generators == IntVec{4, 6, 9});
  CHECK(o.contains(13));
  CHECK_FALSE(o.contains(11));
  CHECK(o.contains(1000));
  CHECK_FALSE(o.contains(-4));

  CHECK(error_code_of([] { oracle::oracle_semigroup({6, 9}); }) == ErrorCode::GcdNotOne);
  CHECK(error_code_of([] { oracle::oracle_semigroup({}); }) == ErrorCode::EmptyInput);
}

TEST_CASE("definitional classes and dual") {
  const auto o = oracle::oracle_semigroup({3, 4, 5});
  CHECK_FALSE(oracle::symmetric_by_definition(o));
  CHECK(oracle::pseudo_symmetric_by_definition(o));
  CHECK(oracle::almost_symmetric_by_definition(o));
  CHECK(oracle::dual_by_definition(oracle::oracle_semigroup({5, 6, 8, 9})).generators == IntVec{3, 4, 5});
  CHECK(oracle::apery_by_scan(o, 4) == IntVec{0, 3, 5, 6});
}

TEST_CASE("genus tree enumeration") {
  const auto small = oracle::enumerate_by_genus(0);
  REQUIRE(small.size() == 1);
  CHECK(small[0].is_natural());

  const auto two = oracle::enumerate_by_genus(2);
  REQUIRE(two.size() == 4);
  CHECK(two[0] == NumericalSemigroup::natural());
  CHECK(two[1] == sg({2, 3}));
  CHECK(two[2] == sg({3, 4, 5}));
  CHECK(two[3] == sg({2, 5}));

  const IntVec known{1, 1, 2, 4, 7, 12, 23, 39, 67, 118, 204, 343, 592, 1001, 1693};
  std::vector<Int> counts(known.size(), 0);
  std::set<NumericalSemigroup> seen;
  oracle::enumerate_by_genus(14, [&](const NumericalSemigroup& h) {
    REQUIRE(h.genus() <= 14);
    ++counts[static_cast<std::size_t>(h.genus())];
    CHECK(seen.insert(h).second);
  });
  CHECK(counts == known);
  for (std::size_t g = 2; g < counts.size(); ++g) CHECK(counts[g] > counts[g - 1]);

  CHECK(error_code_of([] { oracle::enumerate_by_genus(26); }) == ErrorCode::CapExceeded);
  CHECK(error_code_of([] { oracle::enumerate_by_genus(5, 4); }) == ErrorCode::CapExceeded);
  CHECK(error_code_of([] { oracle::enumerate_by_genus(-1); }) == ErrorCode::BadParameters);
}

TEST_CASE("verify reports") {
  auto r = oracle::verify(sg({5, 8, 11, 12}));
  CHECK(r.all_pass());
  CHECK(r.checks.size() == 19);
  const auto tap = r.to_tap();
  CHECK(tap.find("1..19") != std::string::npos);
  CHECK(tap.find("ok 3 - frobenius") != std::string::npos);
  CHECK(tap.find("not ok") == std::string::npos);

  r = oracle::verify_opened_modular(5, 11);
  CHECK(r.all_pass());
  bool has_delta = false;
  for (const auto& c : r.checks) {
    if (c.name == "delta_frobenius_formula") {
      has_delta = true;
      CHECK(c.oracle_value == "6");
    }
    if (c.name == "multiplicity_formula") CHECK(c.fast_value == "5");
    if (c.name == "opened_frobenius_formula") CHECK(c.fast_value == "11");
    if (c.name == "opened_genus_formula") CHECK(c.fast_value == "6");
    if (c.name == "opened_type_formula") CHECK(c.fast_value == "1");
  }
  CHECK(has_delta);

  r = oracle::verify_gluing({sg({2, 3}), NumericalSemigroup::natural(), 2, 9});
  CHECK(r.all_pass());

  oracle::OracleReport failing{"x", {{"frobenius", "1", "2", false}}};
  CHECK_FALSE(failing.all_pass());
  CHECK(failing.to_tap().find("not ok 1 - frobenius # fast=1 oracle=2") != std::string::npos);
}

TEST_CASE("every golden instance verifies") {
  const auto reports = oracle::verify_goldens();
  CHECK(reports.size() > 30);
  for (const auto& r : reports) {
    CAPTURE(r.subject);
    CHECK(r.all_pass());
  }
}
