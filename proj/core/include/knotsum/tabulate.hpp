#pragma once

#include <array>
#include <cstdint>
#include <iosfwd>
#include <map>
#include <string>
#include <vector>

#include <knotsum/orbit.hpp>
#include <knotsum/pdcode.hpp>
#include <knotsum/prime_table.hpp>

namespace knotsum {

// One composite knot in the output table.
struct TableRow {
  std::string composite_name;
  int crossing_number = 0;
  FactorList factors;
  FlavorVector representative;  // normal form
  SymmetryType symmetry = SymmetryType::kNone;
  std::uint64_t orbit_size = 0;
};

// Flavor suffixes: "" plain, "m" mirrored, "r" reversed, "mr" both.
std::string_view flavor_suffix(GammaElement g);

// Name like "3_1 # 3_1m": factors in list order, slot flavors appended.
std::string composite_name(const FactorList& factors,
                           const FlavorVector& representative);

// Every composite constructible within the crossing budget, one row per
// orbit, sorted by (crossing_number, factors, representative).
std::vector<TableRow> tabulate(const PrimeTable& table, int max_crossings);

// Realize a row as a diagram: connected sum of the flavored base diagrams
// in slot order.
PdCode composite_pdcode(const TableRow& row);

struct Census {
  std::array<std::uint64_t, 5> by_type{};  // indexed by SymmetryType
  std::map<int, std::array<std::uint64_t, 5>> by_crossing;
  std::uint64_t total = 0;
};

Census census(const std::vector<TableRow>& rows);

// CSV: header name,crossings,factors,flavors,symmetry,orbit_size[,pdcode].
// factors is the expanded base-name list ("3_1 3_1"), flavors the matching
// suffix tokens with "-" for the identity ("- m").
void write_csv(std::ostream& out, const std::vector<TableRow>& rows,
               bool include_pdcodes);

// JSON: array of row objects with the same field names.
void write_json(std::ostream& out, const std::vector<TableRow>& rows,
                bool include_pdcodes);

// Plain-text census by type and by crossing number.
void write_census(std::ostream& out, const Census& c);

}  // namespace knotsum
