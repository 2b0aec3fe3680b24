#pragma once

// Test-only oracles for the orbit engine, independent of the library's
// normal-form and closed-form counting paths.

#include <algorithm>
#include <set>
#include <vector>

#include <knotsum/orbit.hpp>

namespace knotsum::test {

inline std::vector<std::vector<int>> all_permutations(int n) {
  std::vector<int> p(n);
  for (int i = 0; i < n; ++i) p[i] = i;
  std::vector<std::vector<int>> out;
  do {
    out.push_back(p);
  } while (std::next_permutation(p.begin(), p.end()));
  return out;
}

// pi(Delta ^ Stab(Orbit(x))) by exhaustive search: for each gamma, try all
// permutation tuples and test whether the Delta element maps the orbit onto
// itself setwise.
inline SymmetrySubgroup stabilizer_formula_oracle(const FactorList& P,
                                                  const FlavorVector& x) {
  const std::vector<FlavorVector> orbit = orbit_bruteforce(P, x);
  auto in_orbit = [&](const FlavorVector& v) {
    return std::binary_search(
        orbit.begin(), orbit.end(), v,
        [](const FlavorVector& a, const FlavorVector& b) {
          return flavor_less(a, b);
        });
  };

  std::vector<std::vector<std::vector<int>>> perms_per_block;
  for (const Factor& f : P.entries) {
    perms_per_block.push_back(all_permutations(f.multiplicity));
  }

  std::vector<GammaElement> result;
  for (GammaElement g : kGammaAll) {
    bool stabilizes = false;
    // iterate the cartesian product of per-block permutations
    std::vector<std::size_t> idx(P.entries.size(), 0);
    while (!stabilizes) {
      WreathElement w;
      for (std::size_t i = 0; i < P.entries.size(); ++i) {
        WreathBlock b;
        b.gammas.assign(P.entries[i].multiplicity, g);
        b.perm = perms_per_block[i][idx[i]];
        w.blocks.push_back(std::move(b));
      }
      bool maps_into = true;
      for (const FlavorVector& v : orbit) {
        if (!in_orbit(act(w, v))) {
          maps_into = false;
          break;
        }
      }
      // the action is by bijections, so mapping into the orbit is enough
      if (maps_into) {
        stabilizes = true;
        break;
      }
      std::size_t k = 0;
      while (k < idx.size() && ++idx[k] == perms_per_block[k].size()) {
        idx[k] = 0;
        ++k;
      }
      if (k == idx.size()) break;
    }
    if (stabilizes) result.push_back(g);
  }
  return SymmetrySubgroup::from_members(result);
}

// The partition of X(P) into Sigma(P)-orbits, computed by brute force.
inline std::set<std::vector<FlavorVector>> bruteforce_partition(
    const FactorList& P) {
  std::set<std::vector<FlavorVector>> parts;
  for (const FlavorVector& x : enumerate_flavor_vectors(P)) {
    parts.insert(orbit_bruteforce(P, x));
  }
  return parts;
}

// The same partition via normal forms.
inline std::set<std::vector<FlavorVector>> normal_form_partition(
    const FactorList& P) {
  std::map<std::vector<std::vector<GammaElement>>, std::vector<FlavorVector>>
      groups;
  for (const FlavorVector& x : enumerate_flavor_vectors(P)) {
    groups[normal_form(P, x).blocks].push_back(x);
  }
  std::set<std::vector<FlavorVector>> parts;
  for (auto& [nf, members] : groups) {
    parts.insert(members);  // enumerate_flavor_vectors is sorted already
  }
  return parts;
}

}  // namespace knotsum::test
