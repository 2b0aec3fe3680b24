#include <knotsum/gamma.hpp>

#include <algorithm>
#include <string>

#include <knotsum/errors.hpp>

namespace knotsum {

namespace {

// Membership masks in the fixed element order
// (1,1)=bit0, (1,-1)=bit1, (-1,1)=bit2, (-1,-1)=bit3.
constexpr std::uint8_t kMaskNone = 0b0001;
constexpr std::uint8_t kMaskPos = 0b0101;   // {(1,1), (-1,1)}
constexpr std::uint8_t kMaskInv = 0b0011;   // {(1,1), (1,-1)}
constexpr std::uint8_t kMaskNeg = 0b1001;   // {(1,1), (-1,-1)}
constexpr std::uint8_t kMaskFull = 0b1111;

constexpr std::array<std::string_view, 5> kTypeNames{
    "none", "pos_amphichiral", "invertible", "neg_amphichiral", "full"};

std::uint8_t mask_of(SymmetryType type) {
  switch (type) {
    case SymmetryType::kNone: return kMaskNone;
    case SymmetryType::kPosAmphichiral: return kMaskPos;
    case SymmetryType::kInvertible: return kMaskInv;
    case SymmetryType::kNegAmphichiral: return kMaskNeg;
    case SymmetryType::kFull: return kMaskFull;
  }
  throw Error("invalid symmetry type");
}

}  // namespace

std::string_view to_string(SymmetryType type) {
  return kTypeNames[static_cast<int>(type)];
}

std::optional<SymmetryType> symmetry_type_from_name(std::string_view name) {
  for (std::size_t i = 0; i < kTypeNames.size(); ++i) {
    if (kTypeNames[i] == name) return static_cast<SymmetryType>(i);
  }
  return std::nullopt;
}

SymmetrySubgroup SymmetrySubgroup::of(SymmetryType type) {
  return SymmetrySubgroup(mask_of(type));
}

SymmetrySubgroup SymmetrySubgroup::from_members(
    const std::vector<GammaElement>& members) {
  std::uint8_t mask = 0;
  for (GammaElement g : members) mask |= std::uint8_t{1} << index_of(g);
  for (SymmetryType type : kAllSymmetryTypes) {
    if (mask == mask_of(type)) return SymmetrySubgroup(mask);
  }
  throw Error("element set is not a subgroup of Gamma");
}

int SymmetrySubgroup::order() const {
  int n = 0;
  for (int i = 0; i < 4; ++i) n += (mask_ >> i) & 1;
  return n;
}

SymmetryType SymmetrySubgroup::type() const {
  for (SymmetryType type : kAllSymmetryTypes) {
    if (mask_ == mask_of(type)) return type;
  }
  throw Error("corrupt subgroup mask");
}

std::vector<GammaElement> SymmetrySubgroup::members() const {
  std::vector<GammaElement> out;
  for (int i = 0; i < 4; ++i) {
    if ((mask_ >> i) & 1) out.push_back(gamma_from_index(i));
  }
  return out;
}

SymmetrySubgroup subgroup_from_name(std::string_view name) {
  auto type = symmetry_type_from_name(name);
  if (!type) throw Error("unknown symmetry token: " + std::string(name));
  return SymmetrySubgroup::of(*type);
}

std::string_view name_of(const SymmetrySubgroup& subgroup) {
  return to_string(subgroup.type());
}

SymmetrySubgroup intersect(const SymmetrySubgroup& a,
                           const SymmetrySubgroup& b) {
  std::vector<GammaElement> common;
  for (GammaElement g : kGammaAll) {
    if (a.contains(g) && b.contains(g)) common.push_back(g);
  }
  return SymmetrySubgroup::from_members(common);
}

GammaElement coset_rep(const SymmetrySubgroup& sub, GammaElement g) {
  GammaElement best = g;
  for (GammaElement s : sub.members()) {
    GammaElement c = compose(g, s);
    if (c < best) best = c;
  }
  return best;
}

std::vector<GammaElement> cosets(const SymmetrySubgroup& sub) {
  std::vector<GammaElement> reps;
  for (GammaElement g : kGammaAll) {
    GammaElement r = coset_rep(sub, g);
    if (std::find(reps.begin(), reps.end(), r) == reps.end()) {
      reps.push_back(r);
    }
  }
  return reps;
}

}  // namespace knotsum
