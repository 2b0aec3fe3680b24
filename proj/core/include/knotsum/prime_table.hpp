#pragma once

#include <filesystem>
#include <iosfwd>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include <knotsum/gamma.hpp>
#include <knotsum/pdcode.hpp>

namespace knotsum {

// A named prime knot with its preferred diagram and symmetry group.
struct PrimeKnotRecord {
  std::string name;        // e.g. "3_1", "8_17"
  int crossing_number = 0;
  int table_index = 0;     // position within its crossing number
  SymmetrySubgroup symmetry;
  PdCode diagram;
};

// Base-type order: (crossing_number, table_index).
inline bool record_less(const PrimeKnotRecord& a, const PrimeKnotRecord& b) {
  if (a.crossing_number != b.crossing_number) {
    return a.crossing_number < b.crossing_number;
  }
  return a.table_index < b.table_index;
}

// Immutable, name-indexed prime knot table.  Records are validated on
// construction (diagram validity, crossing counts, uniqueness) and sorted
// in base-type order; record pointers stay valid for the table's lifetime.
class PrimeTable {
 public:
  // File format: UTF-8, tab-separated
  //   name  crossing_number  table_index  symmetry_token  pdcode
  // lines starting with '#' are ignored.  Throws Error with the offending
  // row number on malformed input.
  static PrimeTable load(const std::filesystem::path& path);
  static PrimeTable parse(std::istream& in, std::string_view origin = "<stream>");
  static PrimeTable from_records(std::vector<PrimeKnotRecord> records);

  PrimeTable(PrimeTable&&) = default;
  PrimeTable& operator=(PrimeTable&&) = default;
  PrimeTable(const PrimeTable&) = delete;
  PrimeTable& operator=(const PrimeTable&) = delete;

  const PrimeKnotRecord* find(std::string_view name) const;
  // Throws Error when the name is absent.
  const PrimeKnotRecord& require(std::string_view name) const;

  std::span<const PrimeKnotRecord> records() const { return records_; }
  std::size_t size() const { return records_.size(); }

 private:
  PrimeTable() = default;

  std::vector<PrimeKnotRecord> records_;
  std::map<std::string, std::size_t, std::less<>> by_name_;
};

struct Factor {
  const PrimeKnotRecord* record = nullptr;
  int multiplicity = 0;
};

// A base prime factor list P = {(D_i, n_i)}: records strictly increasing in
// base-type order.  Composites require at least two factors in total.
struct FactorList {
  std::vector<Factor> entries;

  int total_factors() const;
  int total_crossings() const;
};

// Ordering on factor lists: entrywise by (base-type order, multiplicity).
bool factor_list_less(const FactorList& a, const FactorList& b);

// All factor lists with >= 2 total factors and total crossings within the
// budget, ordered by (total_crossings, entrywise).  Requires
// max_crossings >= 6 (twice the smallest prime's crossing number).
std::vector<FactorList> enumerate_factor_lists(const PrimeTable& table,
                                               int max_crossings);

}  // namespace knotsum
