#include <doctest.h>

#include <algorithm>
#include <set>

#include <knotsum/errors.hpp>
#include <knotsum/gamma.hpp>

using namespace knotsum;

TEST_CASE("compose is componentwise sign product") {
  CHECK(compose(kMirror, kMirrorReverse) == kReverse);
  CHECK(compose(kIdentity, kMirrorReverse) == kMirrorReverse);
  CHECK(compose(kReverse, kReverse) == kIdentity);
}

TEST_CASE("group laws") {
  for (GammaElement a : kGammaAll) {
    CHECK(compose(a, a) == kIdentity);
    for (GammaElement b : kGammaAll) {
      CHECK(compose(a, b) == compose(b, a));
      for (GammaElement c : kGammaAll) {
        CHECK(compose(a, compose(b, c)) == compose(compose(a, b), c));
      }
    }
  }
}

TEST_CASE("fixed order and indexing") {
  CHECK(index_of(kIdentity) == 0);
  CHECK(index_of(kReverse) == 1);
  CHECK(index_of(kMirror) == 2);
  CHECK(index_of(kMirrorReverse) == 3);
  for (int i = 0; i < 4; ++i) CHECK(index_of(gamma_from_index(i)) == i);
  CHECK(kIdentity < kReverse);
  CHECK(kReverse < kMirror);
  CHECK(kMirror < kMirrorReverse);
}

TEST_CASE("subgroup dictionary") {
  CHECK(subgroup_from_name("invertible").members() ==
        std::vector<GammaElement>{kIdentity, kReverse});
  CHECK(subgroup_from_name("full").members().size() == 4);
  CHECK(subgroup_from_name("none").members() ==
        std::vector<GammaElement>{kIdentity});
  CHECK(subgroup_from_name("pos_amphichiral").members() ==
        std::vector<GammaElement>{kIdentity, kMirror});
  CHECK(subgroup_from_name("neg_amphichiral").members() ==
        std::vector<GammaElement>{kIdentity, kMirrorReverse});
  CHECK_THROWS_AS(subgroup_from_name("chiral"), Error);
  CHECK_THROWS_AS(subgroup_from_name(""), Error);
}

TEST_CASE("name_of inverts subgroup_from_name") {
  for (const char* name :
       {"none", "pos_amphichiral", "invertible", "neg_amphichiral", "full"}) {
    CHECK(name_of(subgroup_from_name(name)) == name);
  }
}

TEST_CASE("exactly five subsets of Gamma are subgroups") {
  int count = 0;
  for (int mask = 0; mask < 16; ++mask) {
    if (!(mask & 1)) continue;  // must contain the identity
    std::vector<GammaElement> members;
    for (int i = 0; i < 4; ++i) {
      if ((mask >> i) & 1) members.push_back(gamma_from_index(i));
    }
    bool closed = true;
    for (GammaElement a : members) {
      for (GammaElement b : members) {
        GammaElement c = compose(a, b);
        if (std::find(members.begin(), members.end(), c) == members.end()) {
          closed = false;
        }
      }
    }
    if (closed) {
      ++count;
      CHECK(SymmetrySubgroup::from_members(members).members() == members);
    } else {
      CHECK_THROWS_AS(SymmetrySubgroup::from_members(members), Error);
    }
  }
  CHECK(count == 5);
}

TEST_CASE("cosets") {
  SUBCASE("invertible has two cosets split by the mirror flag") {
    CHECK(cosets(subgroup_from_name("invertible")) ==
          std::vector<GammaElement>{kIdentity, kMirror});
  }
  SUBCASE("full has one coset") {
    CHECK(cosets(subgroup_from_name("full")) ==
          std::vector<GammaElement>{kIdentity});
  }
  SUBCASE("trivial subgroup: four cosets in the fixed order") {
    CHECK(cosets(subgroup_from_name("none")) ==
          std::vector<GammaElement>{kIdentity, kReverse, kMirror,
                                    kMirrorReverse});
  }
}

TEST_CASE("coset map is constant on cosets and surjective") {
  for (SymmetryType type : kAllSymmetryTypes) {
    SymmetrySubgroup sub = SymmetrySubgroup::of(type);
    std::vector<GammaElement> reps = cosets(sub);
    CHECK(static_cast<int>(reps.size()) * sub.order() == 4);
    CHECK(static_cast<int>(reps.size()) == sub.num_cosets());
    std::set<int> hit;
    for (GammaElement g : kGammaAll) {
      GammaElement r = coset_rep(sub, g);
      CHECK(std::find(reps.begin(), reps.end(), r) != reps.end());
      hit.insert(index_of(r));
      // constant on the coset g * sub
      for (GammaElement s : sub.members()) {
        CHECK(coset_rep(sub, compose(g, s)) == r);
      }
    }
    CHECK(hit.size() == reps.size());
  }
}

TEST_CASE("intersect") {
  SymmetrySubgroup inv = subgroup_from_name("invertible");
  SymmetrySubgroup neg = subgroup_from_name("neg_amphichiral");
  SymmetrySubgroup full = subgroup_from_name("full");
  CHECK(intersect(inv, neg) == subgroup_from_name("none"));
  for (SymmetryType type : kAllSymmetryTypes) {
    SymmetrySubgroup s = SymmetrySubgroup::of(type);
    CHECK(intersect(full, s) == s);
    CHECK(intersect(s, s) == s);
  }
}
