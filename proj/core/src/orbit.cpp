#include <knotsum/orbit.hpp>

#include <algorithm>
#include <set>
#include <string>

#include <knotsum/errors.hpp>

namespace knotsum {

namespace {

constexpr int kBruteForceLimit = 8;  // 4^8 = 65536 states

void require_structure(const FactorList& P, const FlavorVector& x,
                       const char* op) {
  if (!structure_matches(P, x)) {
    throw Error(std::string(op) + ": flavor vector does not match factor list");
  }
}

std::uint64_t factorial(int n) {
  std::uint64_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::uint64_t>(i);
  return f;
}

std::uint64_t ipow(std::uint64_t base, int exp) {
  std::uint64_t r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

bool structure_matches(const FactorList& P, const FlavorVector& x) {
  if (x.blocks.size() != P.entries.size()) return false;
  for (std::size_t i = 0; i < x.blocks.size(); ++i) {
    if (static_cast<int>(x.blocks[i].size()) != P.entries[i].multiplicity) {
      return false;
    }
  }
  return true;
}

FlavorVector identity_vector(const FactorList& P) {
  FlavorVector x;
  for (const Factor& f : P.entries) {
    x.blocks.emplace_back(f.multiplicity, kIdentity);
  }
  return x;
}

WreathElement wreath_identity(const FactorList& P) {
  WreathElement w;
  for (const Factor& f : P.entries) {
    WreathBlock b;
    b.gammas.assign(f.multiplicity, kIdentity);
    b.perm.resize(f.multiplicity);
    for (int j = 0; j < f.multiplicity; ++j) b.perm[j] = j;
    w.blocks.push_back(std::move(b));
  }
  return w;
}

WreathElement wreath_compose(const WreathElement& a, const WreathElement& b) {
  if (a.blocks.size() != b.blocks.size()) {
    throw Error("wreath_compose: block count mismatch");
  }
  WreathElement out;
  for (std::size_t i = 0; i < a.blocks.size(); ++i) {
    const WreathBlock& x = a.blocks[i];
    const WreathBlock& y = b.blocks[i];
    const std::size_t n = x.gammas.size();
    if (y.gammas.size() != n) {
      throw Error("wreath_compose: block size mismatch");
    }
    WreathBlock r;
    r.gammas.resize(n);
    r.perm.resize(n);
    for (std::size_t j = 0; j < n; ++j) {
      r.gammas[j] = compose(x.gammas[j], y.gammas[x.perm[j]]);
      r.perm[j] = y.perm[x.perm[j]];
    }
    out.blocks.push_back(std::move(r));
  }
  return out;
}

FlavorVector act(const WreathElement& w, const FlavorVector& x) {
  if (w.blocks.size() != x.blocks.size()) {
    throw Error("act: block count mismatch");
  }
  FlavorVector out;
  for (std::size_t i = 0; i < w.blocks.size(); ++i) {
    const WreathBlock& b = w.blocks[i];
    const std::vector<GammaElement>& xs = x.blocks[i];
    const std::size_t n = xs.size();
    if (b.gammas.size() != n || b.perm.size() != n) {
      throw Error("act: block size mismatch");
    }
    std::vector<GammaElement> r(n);
    for (std::size_t j = 0; j < n; ++j) {
      r[j] = compose(b.gammas[j], xs[b.perm[j]]);
    }
    out.blocks.push_back(std::move(r));
  }
  return out;
}

std::vector<FlavorVector> enumerate_flavor_vectors(const FactorList& P) {
  const int n = P.total_factors();
  if (n > kBruteForceLimit) {
    throw Error("enumerate_flavor_vectors: too many factors (limit " +
                std::to_string(kBruteForceLimit) + ")");
  }
  std::vector<FlavorVector> out;
  FlavorVector x = identity_vector(P);
  auto rec = [&](auto&& self, std::size_t bi, std::size_t sj) -> void {
    if (bi == x.blocks.size()) {
      out.push_back(x);
      return;
    }
    if (sj == x.blocks[bi].size()) {
      self(self, bi + 1, 0);
      return;
    }
    for (GammaElement g : kGammaAll) {
      x.blocks[bi][sj] = g;
      self(self, bi, sj + 1);
    }
    x.blocks[bi][sj] = kIdentity;
  };
  rec(rec, 0, 0);
  std::sort(out.begin(), out.end(), flavor_less);
  return out;
}

std::vector<FlavorVector> orbit_bruteforce(const FactorList& P,
                                           const FlavorVector& x) {
  require_structure(P, x, "orbit_bruteforce");
  if (P.total_factors() > kBruteForceLimit) {
    throw Error("orbit_bruteforce: too many factors (limit " +
                std::to_string(kBruteForceLimit) + ")");
  }
  auto cmp = [](const FlavorVector& a, const FlavorVector& b) {
    return flavor_less(a, b);
  };
  std::set<FlavorVector, decltype(cmp)> seen(cmp);
  std::vector<FlavorVector> queue{x};
  seen.insert(x);
  while (!queue.empty()) {
    FlavorVector cur = std::move(queue.back());
    queue.pop_back();
    for (std::size_t i = 0; i < cur.blocks.size(); ++i) {
      const std::vector<GammaElement> sym =
          P.entries[i].record->symmetry.members();
      const std::size_t n = cur.blocks[i].size();
      // slotwise multiplication by factor-symmetry elements
      for (std::size_t j = 0; j < n; ++j) {
        for (GammaElement s : sym) {
          if (s.is_identity()) continue;
          FlavorVector next = cur;
          next.blocks[i][j] = compose(s, next.blocks[i][j]);
          if (seen.insert(next).second) queue.push_back(std::move(next));
        }
      }
      // adjacent transpositions
      for (std::size_t j = 0; j + 1 < n; ++j) {
        FlavorVector next = cur;
        std::swap(next.blocks[i][j], next.blocks[i][j + 1]);
        if (seen.insert(next).second) queue.push_back(std::move(next));
      }
    }
  }
  return std::vector<FlavorVector>(seen.begin(), seen.end());
}

FlavorVector normal_form(const FactorList& P, const FlavorVector& x) {
  require_structure(P, x, "normal_form");
  FlavorVector out = x;
  for (std::size_t i = 0; i < out.blocks.size(); ++i) {
    const SymmetrySubgroup& sym = P.entries[i].record->symmetry;
    for (GammaElement& g : out.blocks[i]) g = coset_rep(sym, g);
    std::sort(out.blocks[i].begin(), out.blocks[i].end(),
              [](GammaElement a, GammaElement b) { return a < b; });
  }
  return out;
}

std::vector<CompositeClass> orbits_all(const FactorList& P) {
  // Enumerate, per block, all multisets of coset representatives in
  // lexicographic order; the cartesian product over blocks yields the
  // normal forms directly.
  std::vector<std::vector<std::vector<GammaElement>>> block_choices;
  std::vector<std::uint64_t> sym_order;
  for (const Factor& f : P.entries) {
    const SymmetrySubgroup& sym = f.record->symmetry;
    const std::vector<GammaElement> reps = cosets(sym);
    std::vector<std::vector<GammaElement>> multisets;
    std::vector<GammaElement> cur;
    auto rec = [&](auto&& self, std::size_t start, int left) -> void {
      if (left == 0) {
        multisets.push_back(cur);
        return;
      }
      for (std::size_t r = start; r < reps.size(); ++r) {
        cur.push_back(reps[r]);
        self(self, r, left - 1);
        cur.pop_back();
      }
    };
    rec(rec, 0, f.multiplicity);
    block_choices.push_back(std::move(multisets));
    sym_order.push_back(static_cast<std::uint64_t>(sym.order()));
  }

  std::vector<CompositeClass> classes;
  FlavorVector rep;
  rep.blocks.resize(P.entries.size());
  auto emit = [&]() {
    CompositeClass cls;
    cls.factors = P;
    cls.representative = rep;
    // Within block i the orbit consists of every vector whose coset multiset
    // matches: |Sigma(k_i)|^{n_i} flavor choices times the distinct
    // arrangements of the multiset.
    std::uint64_t size = 1;
    for (std::size_t i = 0; i < rep.blocks.size(); ++i) {
      const int n = P.entries[i].multiplicity;
      size *= ipow(sym_order[i], n);
      std::uint64_t arrangements = factorial(n);
      int run = 1;
      for (int j = 1; j < n; ++j) {
        if (rep.blocks[i][j] == rep.blocks[i][j - 1]) {
          ++run;
        } else {
          arrangements /= factorial(run);
          run = 1;
        }
      }
      arrangements /= factorial(run);
      size *= arrangements;
    }
    cls.orbit_size = size;
    classes.push_back(std::move(cls));
  };
  auto rec = [&](auto&& self, std::size_t bi) -> void {
    if (bi == block_choices.size()) {
      emit();
      return;
    }
    for (const auto& multiset : block_choices[bi]) {
      rep.blocks[bi] = multiset;
      self(self, bi + 1);
    }
  };
  rec(rec, 0);
  return classes;
}

SymmetrySubgroup symmetry_group(const FactorList& P, const FlavorVector& x) {
  require_structure(P, x, "symmetry_group");
  const FlavorVector base = normal_form(P, x);
  std::vector<GammaElement> stab;
  for (GammaElement g : kGammaAll) {
    FlavorVector y = x;
    for (auto& block : y.blocks) {
      for (GammaElement& slot : block) slot = compose(g, slot);
    }
    if (normal_form(P, y) == base) stab.push_back(g);
  }
  return SymmetrySubgroup::from_members(stab);
}

std::uint64_t binomial(std::uint64_t n, std::uint64_t k) {
  if (k > n) return 0;
  k = std::min(k, n - k);
  std::uint64_t r = 1;
  for (std::uint64_t i = 1; i <= k; ++i) {
    r = r * (n - k + i) / i;
  }
  return r;
}

}  // namespace knotsum
