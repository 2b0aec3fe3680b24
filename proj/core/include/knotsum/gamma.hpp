#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <string_view>
#include <vector>

namespace knotsum {

// An intrinsic symmetry operation of a knot: eps0 == -1 mirrors,
// eps1 == -1 reverses orientation.  These form Gamma = Z2 x Z2 under
// componentwise sign multiplication; every element is its own inverse.
struct GammaElement {
  std::int8_t eps0 = 1;
  std::int8_t eps1 = 1;

  bool is_identity() const { return eps0 > 0 && eps1 > 0; }

  friend bool operator==(const GammaElement&, const GammaElement&) = default;
};

inline constexpr GammaElement kIdentity{1, 1};
inline constexpr GammaElement kReverse{1, -1};
inline constexpr GammaElement kMirror{-1, 1};
inline constexpr GammaElement kMirrorReverse{-1, -1};

// Fixed total order (1,1) < (1,-1) < (-1,1) < (-1,-1), used for every
// deterministic sort in the library.
inline int index_of(GammaElement g) {
  return (g.eps0 < 0 ? 2 : 0) + (g.eps1 < 0 ? 1 : 0);
}

inline GammaElement gamma_from_index(int i) {
  return GammaElement{static_cast<std::int8_t>(i & 2 ? -1 : 1),
                      static_cast<std::int8_t>(i & 1 ? -1 : 1)};
}

inline bool operator<(GammaElement a, GammaElement b) {
  return index_of(a) < index_of(b);
}

inline GammaElement compose(GammaElement a, GammaElement b) {
  return GammaElement{static_cast<std::int8_t>(a.eps0 * b.eps0),
                      static_cast<std::int8_t>(a.eps1 * b.eps1)};
}

// All of Gamma in the fixed order.
inline constexpr std::array<GammaElement, 4> kGammaAll{
    kIdentity, kReverse, kMirror, kMirrorReverse};

// The five classical symmetry types, in the token order used by data files
// and output.
enum class SymmetryType {
  kNone,
  kPosAmphichiral,
  kInvertible,
  kNegAmphichiral,
  kFull,
};

inline constexpr std::array<SymmetryType, 5> kAllSymmetryTypes{
    SymmetryType::kNone, SymmetryType::kPosAmphichiral,
    SymmetryType::kInvertible, SymmetryType::kNegAmphichiral,
    SymmetryType::kFull};

std::string_view to_string(SymmetryType type);
std::optional<SymmetryType> symmetry_type_from_name(std::string_view name);

// One of the five subgroups of Gamma, stored as a 4-bit membership mask
// indexed by the fixed element order.  Always contains the identity and is
// closed under composition.
class SymmetrySubgroup {
 public:
  // The trivial subgroup {identity}.
  SymmetrySubgroup() : mask_(1) {}

  static SymmetrySubgroup of(SymmetryType type);

  // Builds the subgroup with exactly the given members; throws Error if the
  // set is not one of the five subgroups.
  static SymmetrySubgroup from_members(const std::vector<GammaElement>& members);

  bool contains(GammaElement g) const { return (mask_ >> index_of(g)) & 1; }
  int order() const;
  int num_cosets() const { return 4 / order(); }
  SymmetryType type() const;

  // Members in the fixed element order.
  std::vector<GammaElement> members() const;

  friend bool operator==(const SymmetrySubgroup&, const SymmetrySubgroup&) =
      default;

 private:
  explicit SymmetrySubgroup(std::uint8_t mask) : mask_(mask) {}

  std::uint8_t mask_;
};

// Dictionary between symmetry-type names and subgroups.  Throws Error on an
// unknown name; name_of is the inverse bijection.
SymmetrySubgroup subgroup_from_name(std::string_view name);
std::string_view name_of(const SymmetrySubgroup& subgroup);

SymmetrySubgroup intersect(const SymmetrySubgroup& a, const SymmetrySubgroup& b);

// The minimal element of the coset g * sub under the fixed order.
GammaElement coset_rep(const SymmetrySubgroup& sub, GammaElement g);

// One representative per coset, identity's coset first, then by the fixed
// order of their minimal elements.
std::vector<GammaElement> cosets(const SymmetrySubgroup& sub);

}  // namespace knotsum
