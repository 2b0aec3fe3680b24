#include <doctest.h>

#include <map>
#include <sstream>
#include <string>

#include <knotsum/errors.hpp>
#include <knotsum/prime_table.hpp>

#include "test_util.hpp"

using namespace knotsum;
using knotsum::test::factors;
using knotsum::test::primes9;

namespace {

const char* kTwoRowFile =
    "# comment\n"
    "3_1\t3\t1\tinvertible\t[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]\n"
    "4_1\t4\t1\tfull\t[[1,-7,-2,6],[3,8,-4,-1],[5,-3,-6,2],[7,4,-8,-5]]\n";

PrimeTable parse_text(const std::string& text) {
  std::istringstream in(text);
  return PrimeTable::parse(in, "<test>");
}

}  // namespace

TEST_CASE("load a minimal two-row table") {
  PrimeTable t = parse_text(kTwoRowFile);
  CHECK(t.size() == 2);
  CHECK(t.require("3_1").symmetry == subgroup_from_name("invertible"));
  CHECK(t.require("4_1").symmetry == subgroup_from_name("full"));
  CHECK(t.require("3_1").crossing_number == 3);
  CHECK(t.find("5_1") == nullptr);
  CHECK_THROWS_AS(t.require("5_1"), Error);
}

TEST_CASE("unknown symmetry token is rejected with the row number") {
  std::string text = kTwoRowFile;
  text.replace(text.find("invertible"), 10, "chiral");
  try {
    parse_text(text);
    FAIL("expected an Error");
  } catch (const Error& e) {
    std::string msg = e.what();
    CHECK(msg.find("unknown symmetry token") != std::string::npos);
    CHECK(msg.find("row 2") != std::string::npos);
  }
}

TEST_CASE("malformed rows are rejected") {
  CHECK_THROWS_AS(parse_text("3_1\t3\t1\tinvertible\n"), Error);  // 4 fields
  CHECK_THROWS_AS(parse_text("3_1\t0\t1\tinvertible\t[]\n"), Error);
  CHECK_THROWS_AS(
      parse_text("3_1\t3\t1\tinvertible\t[[4,-2,-5,1],[2,-6,-3,5]]\n"),
      Error);  // crossing count mismatch
  CHECK_THROWS_AS(parse_text("3_1\t3\t1\tinvertible\t[[1,2,3]]\n"), Error);
  // duplicate name
  std::string dup = kTwoRowFile;
  dup += "3_1\t5\t1\tinvertible\t[[1,-7,-2,6],[3,-9,-4,8],[5,-1,-6,10],"
         "[7,-3,-8,2],[9,-5,-10,4]]\n";
  CHECK_THROWS_AS(parse_text(dup), Error);
}

TEST_CASE("missing file") {
  CHECK_THROWS_AS(PrimeTable::load("/nonexistent/primes.tsv"), Error);
}

TEST_CASE("shipped table has the standard 84 records") {
  const PrimeTable& t = primes9();
  CHECK(t.size() == 84);
  std::map<int, int> per_crossing;
  for (const PrimeKnotRecord& rec : t.records()) {
    per_crossing[rec.crossing_number] += 1;
  }
  CHECK(per_crossing == std::map<int, int>{
                            {3, 1}, {4, 1}, {5, 2}, {6, 3},
                            {7, 7}, {8, 21}, {9, 49}});
  // records are sorted in base-type order and diagrams validated on load
  for (std::size_t i = 1; i < t.records().size(); ++i) {
    CHECK(record_less(t.records()[i - 1], t.records()[i]));
  }
}

TEST_CASE("shipped symmetry data") {
  const PrimeTable& t = primes9();
  CHECK(name_of(t.require("3_1").symmetry) == "invertible");
  CHECK(name_of(t.require("4_1").symmetry) == "full");
  CHECK(name_of(t.require("6_3").symmetry) == "full");
  CHECK(name_of(t.require("8_17").symmetry) == "neg_amphichiral");
  CHECK(name_of(t.require("9_32").symmetry) == "none");
  CHECK(name_of(t.require("9_33").symmetry) == "none");
  std::map<SymmetryType, int> counts;
  for (const PrimeKnotRecord& rec : t.records()) {
    counts[rec.symmetry.type()] += 1;
  }
  CHECK(counts[SymmetryType::kInvertible] == 75);
  CHECK(counts[SymmetryType::kFull] == 6);
  CHECK(counts[SymmetryType::kNegAmphichiral] == 1);
  CHECK(counts[SymmetryType::kNone] == 2);
  CHECK(counts[SymmetryType::kPosAmphichiral] == 0);
}

TEST_CASE("total_crossings") {
  const PrimeTable& t = primes9();
  CHECK(factors(t, {{"3_1", 2}}).total_crossings() == 6);
  CHECK(factors(t, {{"3_1", 1}, {"4_1", 1}}).total_crossings() == 7);
  CHECK(factors(t, {{"3_1", 2}, {"4_1", 1}}).total_crossings() == 10);
  CHECK(factors(t, {{"3_1", 2}, {"4_1", 1}}).total_factors() == 3);
}

TEST_CASE("enumerate_factor_lists at the smallest budgets") {
  const PrimeTable& t = primes9();
  auto at6 = enumerate_factor_lists(t, 6);
  REQUIRE(at6.size() == 1);
  CHECK(at6[0].entries.size() == 1);
  CHECK(at6[0].entries[0].record->name == "3_1");
  CHECK(at6[0].entries[0].multiplicity == 2);

  auto at7 = enumerate_factor_lists(t, 7);
  REQUIRE(at7.size() == 2);
  CHECK(at7[0].total_crossings() == 6);
  CHECK(at7[1].total_crossings() == 7);
  CHECK(at7[1].entries.size() == 2);
  CHECK(at7[1].entries[0].record->name == "3_1");
  CHECK(at7[1].entries[1].record->name == "4_1");

  CHECK_THROWS_AS(enumerate_factor_lists(t, 5), Error);
}

TEST_CASE("enumerated lists satisfy the FactorList invariants") {
  const PrimeTable& t = primes9();
  for (int budget : {6, 9, 12}) {
    for (const FactorList& P : enumerate_factor_lists(t, budget)) {
      CHECK(P.total_factors() >= 2);
      CHECK(P.total_crossings() <= budget);
      for (std::size_t i = 0; i < P.entries.size(); ++i) {
        CHECK(P.entries[i].multiplicity >= 1);
        if (i > 0) {
          CHECK(record_less(*P.entries[i - 1].record, *P.entries[i].record));
        }
      }
    }
  }
}

TEST_CASE("enumeration grows monotonically with the budget") {
  const PrimeTable& t = primes9();
  std::size_t prev = 0;
  for (int budget = 6; budget <= 12; ++budget) {
    auto lists = enumerate_factor_lists(t, budget);
    CHECK(lists.size() >= prev);
    prev = lists.size();
    // deterministic and duplicate-free
    for (std::size_t i = 1; i < lists.size(); ++i) {
      const bool lt = factor_list_less(lists[i - 1], lists[i]);
      const bool gt = factor_list_less(lists[i], lists[i - 1]);
      CHECK((lt || gt));  // neighbors differ
    }
  }
  // every composite class comes from some list, so #lists <= 544
  CHECK(prev <= 544);
}
