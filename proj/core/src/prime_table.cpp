#include <knotsum/prime_table.hpp>

#include <algorithm>
#include <fstream>
#include <sstream>

#include <knotsum/errors.hpp>

namespace knotsum {

namespace {

std::vector<std::string> split_tabs(const std::string& line) {
  std::vector<std::string> fields;
  std::size_t start = 0;
  while (true) {
    std::size_t tab = line.find('\t', start);
    if (tab == std::string::npos) {
      fields.push_back(line.substr(start));
      break;
    }
    fields.push_back(line.substr(start, tab - start));
    start = tab + 1;
  }
  return fields;
}

int parse_positive_int(const std::string& s, const std::string& what) {
  std::size_t used = 0;
  int value = 0;
  try {
    value = std::stoi(s, &used);
  } catch (const std::exception&) {
    throw Error(what + ": not an integer: '" + s + "'");
  }
  if (used != s.size() || value <= 0) {
    throw Error(what + ": expected a positive integer, got '" + s + "'");
  }
  return value;
}

}  // namespace

PrimeTable PrimeTable::load(const std::filesystem::path& path) {
  std::ifstream in(path);
  if (!in) {
    throw Error("cannot open prime table file: " + path.string());
  }
  return parse(in, path.string());
}

PrimeTable PrimeTable::parse(std::istream& in, std::string_view origin) {
  std::vector<PrimeKnotRecord> records;
  std::string line;
  std::size_t row = 0;
  while (std::getline(in, line)) {
    ++row;
    if (!line.empty() && line.back() == '\r') line.pop_back();
    if (line.empty() || line[0] == '#') continue;
    auto fields = split_tabs(line);
    auto fail = [&](const std::string& msg) -> Error {
      return Error(std::string(origin) + " row " + std::to_string(row) + ": " +
                   msg);
    };
    if (fields.size() != 5) {
      throw fail("expected 5 tab-separated fields, got " +
                 std::to_string(fields.size()));
    }
    PrimeKnotRecord rec;
    rec.name = fields[0];
    if (rec.name.empty()) throw fail("empty knot name");
    try {
      rec.crossing_number = parse_positive_int(fields[1], "crossing_number");
      rec.table_index = parse_positive_int(fields[2], "table_index");
      rec.symmetry = subgroup_from_name(fields[3]);
      rec.diagram = parse_pdcode(fields[4]);
    } catch (const Error& e) {
      throw fail(e.what());
    }
    if (rec.diagram.crossings() != rec.crossing_number) {
      throw fail("diagram has " + std::to_string(rec.diagram.crossings()) +
                 " crossings, expected " + std::to_string(rec.crossing_number));
    }
    records.push_back(std::move(rec));
  }
  return from_records(std::move(records));
}

PrimeTable PrimeTable::from_records(std::vector<PrimeKnotRecord> records) {
  for (const PrimeKnotRecord& rec : records) {
    if (auto v = validate(rec.diagram)) {
      throw Error("record " + rec.name + ": invalid diagram: " + v->message);
    }
    if (rec.diagram.crossings() != rec.crossing_number) {
      throw Error("record " + rec.name + ": crossing count mismatch");
    }
  }
  std::sort(records.begin(), records.end(), record_less);
  PrimeTable table;
  table.records_ = std::move(records);
  for (std::size_t i = 0; i < table.records_.size(); ++i) {
    const PrimeKnotRecord& rec = table.records_[i];
    if (!table.by_name_.emplace(rec.name, i).second) {
      throw Error("duplicate knot name: " + rec.name);
    }
    if (i > 0) {
      const PrimeKnotRecord& prev = table.records_[i - 1];
      if (prev.crossing_number == rec.crossing_number &&
          prev.table_index == rec.table_index) {
        throw Error("duplicate (crossing_number, table_index): " + rec.name +
                    " vs " + prev.name);
      }
    }
  }
  return table;
}

const PrimeKnotRecord* PrimeTable::find(std::string_view name) const {
  auto it = by_name_.find(name);
  return it == by_name_.end() ? nullptr : &records_[it->second];
}

const PrimeKnotRecord& PrimeTable::require(std::string_view name) const {
  const PrimeKnotRecord* rec = find(name);
  if (!rec) throw Error("unknown knot name: " + std::string(name));
  return *rec;
}

int FactorList::total_factors() const {
  int n = 0;
  for (const Factor& f : entries) n += f.multiplicity;
  return n;
}

int FactorList::total_crossings() const {
  int n = 0;
  for (const Factor& f : entries) {
    n += f.record->crossing_number * f.multiplicity;
  }
  return n;
}

bool factor_list_less(const FactorList& a, const FactorList& b) {
  auto key = [](const Factor& f) {
    return std::tuple(f.record->crossing_number, f.record->table_index,
                      f.multiplicity);
  };
  return std::lexicographical_compare(
      a.entries.begin(), a.entries.end(), b.entries.begin(), b.entries.end(),
      [&](const Factor& x, const Factor& y) { return key(x) < key(y); });
}

std::vector<FactorList> enumerate_factor_lists(const PrimeTable& table,
                                               int max_crossings) {
  if (max_crossings < 6) {
    throw Error("enumerate_factor_lists: max_crossings must be >= 6");
  }
  std::vector<FactorList> out;
  std::vector<Factor> current;
  auto records = table.records();

  auto rec = [&](auto&& self, std::size_t start, int budget,
                 int factors) -> void {
    if (factors >= 2) {
      out.push_back(FactorList{current});
    }
    for (std::size_t i = start; i < records.size(); ++i) {
      const int c = records[i].crossing_number;
      if (c > budget) continue;
      const int max_mult = budget / c;
      for (int m = 1; m <= max_mult; ++m) {
        current.push_back(Factor{&records[i], m});
        self(self, i + 1, budget - c * m, factors + m);
        current.pop_back();
      }
    }
  };
  rec(rec, 0, max_crossings, 0);

  std::sort(out.begin(), out.end(), [](const FactorList& a, const FactorList& b) {
    const int ca = a.total_crossings();
    const int cb = b.total_crossings();
    if (ca != cb) return ca < cb;
    return factor_list_less(a, b);
  });
  return out;
}

}  // namespace knotsum
