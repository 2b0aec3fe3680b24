#include <doctest.h>

#include <random>
#include <string>

#include <knotsum/errors.hpp>
#include <knotsum/pdcode.hpp>

#include "test_util.hpp"

using namespace knotsum;
using knotsum::test::primes9;

namespace {

const char* kTrefoilText = "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]";

// The worked two-trefoil sum: inputs and the output that follows the
// definition literally (keeping the label -1 in the first code).
const char* kSumD1Text = "[[2,-6,-3,5],[6,-4,-1,3],[4,-2,-5,1]]";
const char* kSumD2Text = "[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,3]]";
const char* kSumOutText =
    "[[8,-12,-9,11],[12,-10,-1,9],[10,-8,-11,7],"
    "[4,-2,-5,1],[2,-6,-3,5],[6,-4,-7,3]]";

PdCode trefoil() { return parse_pdcode(kTrefoilText); }

}  // namespace

TEST_CASE("parse accepts the trefoil code") {
  PdCode d = trefoil();
  CHECK(d.crossings() == 3);
  CHECK(d.quads[0] == Quad{4, -2, -5, 1});
  CHECK(d.quads[1] == Quad{2, -6, -3, 5});
  CHECK(d.quads[2] == Quad{6, -4, -1, 3});
}

TEST_CASE("parse rejects wrong arity") {
  CHECK_THROWS_AS(parse_pdcode("[[1,2,3]]"), ParseError);
}

TEST_CASE("parse rejects label-pairing violations with a label message") {
  try {
    parse_pdcode("[[4,-2,-5,1],[2,-6,-3,5],[6,-4,-1,4]]");
    FAIL("expected an Error");
  } catch (const Error& e) {
    CHECK(std::string(e.what()).find("label") != std::string::npos);
  }
}

TEST_CASE("parse syntax errors carry a position") {
  try {
    parse_pdcode_raw("[[1, x]]");
    FAIL("expected a ParseError");
  } catch (const ParseError& e) {
    CHECK(e.position() == 5);
  }
  CHECK_THROWS_AS(parse_pdcode_raw(""), ParseError);
  CHECK_THROWS_AS(parse_pdcode_raw("[[1,2,3,4]"), ParseError);
  CHECK_THROWS_AS(parse_pdcode_raw("[[01,2,3,4]]"), ParseError);
  CHECK_THROWS_AS(parse_pdcode_raw("[[1,2,3,4]] junk"), ParseError);
}

TEST_CASE("empty code is the crossingless unknot") {
  PdCode d = parse_pdcode("[]");
  CHECK(d.empty());
  CHECK(!validate(d));
  CHECK(serialize(d) == "[]");
  CHECK(canonical_form(d) == d);
}

TEST_CASE("whitespace is ignored between tokens") {
  PdCode d = parse_pdcode(" [ [4, -2, -5, 1] , [2,-6,-3,5],\n[6,-4,-1,3] ] ");
  CHECK(d == trefoil());
}

TEST_CASE("serialize round-trips over the prime table") {
  for (const PrimeKnotRecord& rec : primes9().records()) {
    CHECK(parse_pdcode(serialize(rec.diagram)) == rec.diagram);
  }
}

TEST_CASE("validate reports structural violations") {
  // under-strand break: swap the under-out labels of two quadruples
  PdCode bad = trefoil();
  bad.quads[0][2] = -3;
  bad.quads[1][2] = -5;
  auto v = validate(bad);
  REQUIRE(v.has_value());
  CHECK(v->message.find("under-strand") != std::string::npos);
  CHECK(v->quad == 0);

  // over-strand sign pattern: both over entries positive
  PdCode bad2 = trefoil();
  bad2.quads[0][1] = 2;
  v = validate(bad2);
  REQUIRE(v.has_value());
  CHECK(v->message.find("label") != std::string::npos);
}

TEST_CASE("validate accepts the worked-example sum output") {
  CHECK(!validate(parse_pdcode_raw(kSumOutText)));
}

TEST_CASE("apply_gamma identity fixes the diagram") {
  CHECK(apply_gamma(kIdentity, trefoil()) == trefoil());
}

TEST_CASE("apply_gamma elements are involutions on prime diagrams") {
  for (const PrimeKnotRecord& rec : primes9().records()) {
    for (GammaElement g : kGammaAll) {
      PdCode once = apply_gamma(g, rec.diagram);
      CHECK(!validate(once));
      CHECK(once.crossings() == rec.diagram.crossings());
      CHECK(diagram_equal(apply_gamma(g, once), rec.diagram));
    }
  }
}

TEST_CASE("mirrored trefoil differs from the trefoil as a diagram") {
  PdCode m = apply_gamma(kMirror, trefoil());
  CHECK(!validate(m));
  CHECK(m.crossings() == 3);
  CHECK(!diagram_equal(m, trefoil()));
}

TEST_CASE("reversed standard trefoil is the same diagram") {
  CHECK(diagram_equal(apply_gamma(kReverse, trefoil()), trefoil()));
}

TEST_CASE("apply_gamma is a group action up to diagram_equal") {
  PdCode d = primes9().require("5_2").diagram;
  for (GammaElement g : kGammaAll) {
    for (GammaElement h : kGammaAll) {
      CHECK(diagram_equal(apply_gamma(compose(g, h), d),
                          apply_gamma(g, apply_gamma(h, d))));
    }
  }
}

TEST_CASE("apply_gamma rejects invalid codes") {
  PdCode bad;
  bad.quads.push_back(Quad{1, 2, 3, 4});
  CHECK_THROWS_AS(apply_gamma(kMirror, bad), Error);
}

TEST_CASE("connected_sum follows the definition on the worked example") {
  PdCode d1 = parse_pdcode(kSumD1Text);
  PdCode d2 = parse_pdcode(kSumD2Text);
  PdCode sum = connected_sum(d1, d2);
  CHECK(serialize(sum) == kSumOutText);
  CHECK(!validate(sum));
  CHECK(sum.crossings() == 6);
}

TEST_CASE("connected_sum label multiset is exactly +-1..n1+n2") {
  std::mt19937 rng(20240901);
  auto records = primes9().records();
  std::uniform_int_distribution<std::size_t> pick(0, records.size() - 1);
  for (int trial = 0; trial < 25; ++trial) {
    const PdCode& a = records[pick(rng)].diagram;
    const PdCode& b = records[pick(rng)].diagram;
    PdCode sum = connected_sum(a, b);
    CHECK(sum.crossings() == a.crossings() + b.crossings());
    CHECK(!validate(sum));  // validity implies the label multiset property
  }
}

TEST_CASE("connected_sum rejects empty inputs") {
  PdCode empty;
  CHECK_THROWS_AS(connected_sum(empty, trefoil()), Error);
  CHECK_THROWS_AS(connected_sum(trefoil(), empty), Error);
  CHECK_THROWS_AS(connected_sum_list({}), Error);
}

TEST_CASE("connected_sum_list folds left") {
  PdCode t = trefoil();
  CHECK(connected_sum_list({t}) == t);
  CHECK(connected_sum_list({t, t}) == connected_sum(t, t));
  PdCode triple = connected_sum_list({t, t, t});
  CHECK(triple.crossings() == 9);
  CHECK(!validate(triple));
}

TEST_CASE("canonical_form is idempotent") {
  for (const PrimeKnotRecord& rec : primes9().records()) {
    PdCode c = canonical_form(rec.diagram);
    CHECK(canonical_form(c) == c);
  }
}

TEST_CASE("the two worked-example trefoil presentations are the same code") {
  PdCode a = parse_pdcode(kSumD1Text);
  PdCode b = parse_pdcode(kSumD2Text);
  CHECK(canonical_form(a) == canonical_form(b));
  CHECK(diagram_equal(a, b));
}

TEST_CASE("cyclic relabelings are diagram_equal") {
  // shift every label of the trefoil by 2 (mod 6)
  PdCode d = trefoil();
  PdCode shifted = d;
  for (Quad& q : shifted.quads) {
    for (int& x : q) {
      int mag = (std::abs(x) - 1 + 2) % 6 + 1;
      x = x > 0 ? mag : -mag;
    }
  }
  CHECK(!validate(shifted));
  CHECK(diagram_equal(d, shifted));
}

TEST_CASE("diagram_equal distinguishes different diagrams") {
  CHECK(diagram_equal(trefoil(), trefoil()));
  CHECK(!diagram_equal(trefoil(), primes9().require("4_1").diagram));
}
