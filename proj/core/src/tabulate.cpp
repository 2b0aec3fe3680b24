#include <knotsum/tabulate.hpp>

#include <algorithm>
#include <ostream>

#include <nlohmann/json.hpp>

#include <knotsum/errors.hpp>

namespace knotsum {

namespace {

std::string factors_field(const TableRow& row) {
  std::string out;
  for (const Factor& f : row.factors.entries) {
    for (int j = 0; j < f.multiplicity; ++j) {
      if (!out.empty()) out += ' ';
      out += f.record->name;
    }
  }
  return out;
}

std::string flavors_field(const TableRow& row) {
  std::string out;
  for (const auto& block : row.representative.blocks) {
    for (GammaElement g : block) {
      if (!out.empty()) out += ' ';
      std::string_view s = flavor_suffix(g);
      out += s.empty() ? "-" : std::string(s);
    }
  }
  return out;
}

// Only the pdcode column can contain commas; quote per RFC 4180 when needed.
std::string csv_escape(const std::string& field) {
  if (field.find_first_of(",\"\n") == std::string::npos) return field;
  std::string out = "\"";
  for (char c : field) {
    if (c == '"') out += '"';
    out += c;
  }
  out += '"';
  return out;
}

}  // namespace

std::string_view flavor_suffix(GammaElement g) {
  switch (index_of(g)) {
    case 0: return "";
    case 1: return "r";
    case 2: return "m";
    default: return "mr";
  }
}

std::string composite_name(const FactorList& factors,
                           const FlavorVector& representative) {
  std::string out;
  for (std::size_t i = 0; i < factors.entries.size(); ++i) {
    const Factor& f = factors.entries[i];
    for (int j = 0; j < f.multiplicity; ++j) {
      if (!out.empty()) out += " # ";
      out += f.record->name;
      out += flavor_suffix(representative.blocks[i][j]);
    }
  }
  return out;
}

std::vector<TableRow> tabulate(const PrimeTable& table, int max_crossings) {
  std::vector<TableRow> rows;
  for (const FactorList& P : enumerate_factor_lists(table, max_crossings)) {
    for (CompositeClass& cls : orbits_all(P)) {
      TableRow row;
      row.crossing_number = P.total_crossings();
      row.factors = cls.factors;
      row.representative = cls.representative;
      row.symmetry = symmetry_group(P, cls.representative).type();
      row.orbit_size = cls.orbit_size;
      row.composite_name = composite_name(row.factors, row.representative);
      rows.push_back(std::move(row));
    }
  }
  std::sort(rows.begin(), rows.end(), [](const TableRow& a, const TableRow& b) {
    if (a.crossing_number != b.crossing_number) {
      return a.crossing_number < b.crossing_number;
    }
    if (factor_list_less(a.factors, b.factors)) return true;
    if (factor_list_less(b.factors, a.factors)) return false;
    return flavor_less(a.representative, b.representative);
  });
  return rows;
}

PdCode composite_pdcode(const TableRow& row) {
  std::vector<PdCode> parts;
  for (std::size_t i = 0; i < row.factors.entries.size(); ++i) {
    const Factor& f = row.factors.entries[i];
    for (int j = 0; j < f.multiplicity; ++j) {
      parts.push_back(
          apply_gamma(row.representative.blocks[i][j], f.record->diagram));
    }
  }
  return connected_sum_list(parts);
}

Census census(const std::vector<TableRow>& rows) {
  Census c;
  for (const TableRow& row : rows) {
    const int t = static_cast<int>(row.symmetry);
    c.by_type[t] += 1;
    c.by_crossing[row.crossing_number][t] += 1;
    c.total += 1;
  }
  return c;
}

void write_csv(std::ostream& out, const std::vector<TableRow>& rows,
               bool include_pdcodes) {
  out << "name,crossings,factors,flavors,symmetry,orbit_size";
  if (include_pdcodes) out << ",pdcode";
  out << '\n';
  for (const TableRow& row : rows) {
    out << csv_escape(row.composite_name) << ',' << row.crossing_number << ','
        << factors_field(row) << ',' << flavors_field(row) << ','
        << to_string(row.symmetry) << ',' << row.orbit_size;
    if (include_pdcodes) {
      out << ',' << csv_escape(serialize(composite_pdcode(row)));
    }
    out << '\n';
  }
}

void write_json(std::ostream& out, const std::vector<TableRow>& rows,
                bool include_pdcodes) {
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const TableRow& row : rows) {
    nlohmann::ordered_json obj;
    obj["name"] = row.composite_name;
    obj["crossings"] = row.crossing_number;
    obj["factors"] = factors_field(row);
    obj["flavors"] = flavors_field(row);
    obj["symmetry"] = to_string(row.symmetry);
    obj["orbit_size"] = row.orbit_size;
    if (include_pdcodes) obj["pdcode"] = serialize(composite_pdcode(row));
    arr.push_back(std::move(obj));
  }
  out << arr.dump(2) << '\n';
}

void write_census(std::ostream& out, const Census& c) {
  out << "census by symmetry type (total " << c.total << "):\n";
  for (SymmetryType t : kAllSymmetryTypes) {
    out << "  " << to_string(t) << " " << c.by_type[static_cast<int>(t)]
        << '\n';
  }
  out << "census by crossing number:\n";
  for (const auto& [crossings, counts] : c.by_crossing) {
    out << "  " << crossings << ":";
    for (SymmetryType t : kAllSymmetryTypes) {
      out << ' ' << to_string(t) << ' ' << counts[static_cast<int>(t)];
    }
    out << '\n';
  }
}

}  // namespace knotsum
