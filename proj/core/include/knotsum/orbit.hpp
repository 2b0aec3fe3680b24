#pragma once

#include <cstdint>
#include <optional>
#include <vector>

#include <knotsum/gamma.hpp>
#include <knotsum/prime_table.hpp>

namespace knotsum {

// An element of X(P): one flavor per prime-factor slot, block i holding the
// n_i slots of the i-th base type.
struct FlavorVector {
  std::vector<std::vector<GammaElement>> blocks;

  friend bool operator==(const FlavorVector&, const FlavorVector&) = default;
  // Lexicographic via the fixed GammaElement order, block by block.
  friend bool operator<(const FlavorVector& a, const FlavorVector& b) {
    return a.blocks < b.blocks;
  }
};

inline bool flavor_less(const FlavorVector& a, const FlavorVector& b) {
  return a < b;
}

// An element of Gamma(P) = (+) [((+) Gamma) x| S_{n_i}]: per block, one
// gamma per slot plus a permutation of the slots.  For Sigma(P) elements
// the gammas lie in the factor's symmetry group.
struct WreathBlock {
  std::vector<GammaElement> gammas;
  std::vector<int> perm;  // perm[j] = image of slot j, 0-based
};

struct WreathElement {
  std::vector<WreathBlock> blocks;
};

WreathElement wreath_identity(const FactorList& P);

// Semidirect-product law: (g, p) * (h, q) = (j -> g_j h_{p(j)}, q o p),
// so that act(a, act(b, x)) == act(wreath_compose(a, b), x).
WreathElement wreath_compose(const WreathElement& a, const WreathElement& b);

// The natural action: result block i, slot j is gammas[i][j] * x[i][perm_i(j)].
// Throws Error on block-structure mismatch.
FlavorVector act(const WreathElement& w, const FlavorVector& x);

// True when x's block sizes match P's multiplicities.
bool structure_matches(const FactorList& P, const FlavorVector& x);

// Identity flavors everywhere.
FlavorVector identity_vector(const FactorList& P);

// All 4^N elements of X(P), lexicographically ordered.  Guarded to N <= 8.
std::vector<FlavorVector> enumerate_flavor_vectors(const FactorList& P);

// BFS closure of {x} under generators of Sigma(P): per-slot multiplication
// by factor-symmetry generators plus adjacent slot transpositions.
// Sorted output.  Guarded to N <= 8; throws Error beyond.
std::vector<FlavorVector> orbit_bruteforce(const FactorList& P,
                                           const FlavorVector& x);

// Canonical orbit representative: each slot replaced by its coset
// representative modulo the factor's symmetry group, blocks sorted.  Two
// vectors have equal normal forms iff they lie in the same Sigma(P)-orbit.
FlavorVector normal_form(const FactorList& P, const FlavorVector& x);

// One isotopy class of composite knots: a Sigma(P)-orbit of X(P).
struct CompositeClass {
  FactorList factors;
  FlavorVector representative;        // in normal form
  std::uint64_t orbit_size = 0;
  std::optional<SymmetrySubgroup> symmetry;  // filled by the tabulator
};

// All orbits, ordered by representative.  The class count is
// prod_i C(c_i + n_i - 1, n_i) with c_i the coset count of Sigma(k_i); the
// orbit sizes are computed in closed form and sum to 4^N.
std::vector<CompositeClass> orbits_all(const FactorList& P);

// The composite knot's intrinsic symmetry group: the gammas whose diagonal
// action fixes the orbit of x.  Equals pi(Delta ^ Stab(Orbit(x))).
SymmetrySubgroup symmetry_group(const FactorList& P, const FlavorVector& x);

std::uint64_t binomial(std::uint64_t n, std::uint64_t k);

}  // namespace knotsum
