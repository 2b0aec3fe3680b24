// knotsum: composite-knot construction, symmetry, and tabulation tool.
//
// Exit codes: 0 success, 1 domain/data error, 2 usage or parse error.

#include <fstream>
#include <iostream>
#include <map>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include <knotsum/errors.hpp>
#include <knotsum/orbit.hpp>
#include <knotsum/pdcode.hpp>
#include <knotsum/prime_table.hpp>
#include <knotsum/tabulate.hpp>

namespace {

using namespace knotsum;

constexpr int kExitOk = 0;
constexpr int kExitDomain = 1;
constexpr int kExitUsage = 2;

struct OutputOptions {
  std::string primes_path = "./data/primes9.tsv";
  std::string output_path;  // empty = stdout
  std::string format = "csv";
  bool include_pdcodes = false;
};

int cmd_validate(const std::string& text) {
  PdCode code;
  try {
    code = parse_pdcode_raw(text);
  } catch (const ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  }
  if (auto v = validate(code)) {
    std::cout << "invalid: " << v->message;
    if (v->quad >= 0) std::cout << " (quadruple " << v->quad << ")";
    std::cout << '\n';
    return kExitDomain;
  }
  std::cout << "ok\n";
  return kExitOk;
}

int cmd_sum(const std::vector<std::string>& texts) {
  if (texts.size() < 2) {
    std::cerr << "usage error: sum requires at least two PD-codes\n";
    return kExitUsage;
  }
  std::vector<PdCode> codes;
  for (const std::string& t : texts) {
    codes.push_back(parse_pdcode_raw(t));
  }
  std::cout << serialize(connected_sum_list(codes)) << '\n';
  return kExitOk;
}

GammaElement flavor_from_token(const std::string& token) {
  if (token.empty()) return kIdentity;
  if (token == "m") return kMirror;
  if (token == "r") return kReverse;
  if (token == "mr") return kMirrorReverse;
  throw CLI::ValidationError("flavor", "unknown flavor token '" + token +
                                           "' (expected m, r, or mr)");
}

// Builds (P, x) from tokens of the form name[:flavor].
std::pair<FactorList, FlavorVector> parse_factors(
    const PrimeTable& table, const std::vector<std::string>& tokens,
    bool allow_flavors) {
  std::map<const PrimeKnotRecord*, std::vector<GammaElement>> groups;
  for (const std::string& token : tokens) {
    std::string name = token;
    GammaElement flavor = kIdentity;
    if (auto colon = token.find(':'); colon != std::string::npos) {
      if (!allow_flavors) {
        throw CLI::ValidationError("factors",
                                   "flavor suffixes are not accepted here");
      }
      name = token.substr(0, colon);
      flavor = flavor_from_token(token.substr(colon + 1));
    }
    groups[&table.require(name)].push_back(flavor);
  }
  std::vector<const PrimeKnotRecord*> order;
  for (const auto& [rec, flavors] : groups) order.push_back(rec);
  std::sort(order.begin(), order.end(),
            [](const PrimeKnotRecord* a, const PrimeKnotRecord* b) {
              return record_less(*a, *b);
            });
  FactorList P;
  FlavorVector x;
  for (const PrimeKnotRecord* rec : order) {
    auto& flavors = groups[rec];
    P.entries.push_back(Factor{rec, static_cast<int>(flavors.size())});
    x.blocks.push_back(flavors);
  }
  return {std::move(P), std::move(x)};
}

int cmd_symmetry(const std::string& primes_path,
                 const std::vector<std::string>& tokens) {
  PrimeTable table = PrimeTable::load(primes_path);
  auto [P, x] = parse_factors(table, tokens, /*allow_flavors=*/true);
  std::cout << name_of(symmetry_group(P, x)) << '\n';
  return kExitOk;
}

void write_rows(const OutputOptions& opt, const std::vector<TableRow>& rows,
                std::ostream& fallback) {
  std::ofstream file;
  std::ostream* out = &fallback;
  if (!opt.output_path.empty()) {
    file.open(opt.output_path);
    if (!file) throw Error("cannot open output file: " + opt.output_path);
    out = &file;
  }
  if (opt.format == "csv") {
    write_csv(*out, rows, opt.include_pdcodes);
  } else {
    write_json(*out, rows, opt.include_pdcodes);
  }
}

int cmd_orbits(const OutputOptions& opt,
               const std::vector<std::string>& tokens) {
  PrimeTable table = PrimeTable::load(opt.primes_path);
  auto [P, x] = parse_factors(table, tokens, /*allow_flavors=*/false);
  std::vector<TableRow> rows;
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
  write_rows(opt, rows, std::cout);
  return kExitOk;
}

int cmd_tabulate(const OutputOptions& opt, int max_crossings) {
  PrimeTable table = PrimeTable::load(opt.primes_path);
  std::vector<TableRow> rows = tabulate(table, max_crossings);
  write_rows(opt, rows, std::cout);
  // census goes to stdout unless the rows are already streaming there
  write_census(opt.output_path.empty() ? std::cerr : std::cout, census(rows));
  return kExitOk;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"composite knot tables from prime factors"};
  app.require_subcommand(1);

  std::string code_text;
  auto* validate_cmd =
      app.add_subcommand("validate", "check a PD-code against the invariants");
  validate_cmd->add_option("code", code_text, "PD-code string")->required();

  // PD-codes are taken as raw trailing arguments: CLI11 would otherwise
  // treat the [...] syntax as container literals and split on commas.
  auto* sum_cmd =
      app.add_subcommand("sum", "connected sum of two or more PD-codes");
  sum_cmd->allow_extras();

  OutputOptions opt;
  std::vector<std::string> factor_tokens;
  auto* symmetry_cmd = app.add_subcommand(
      "symmetry", "intrinsic symmetry group of a composite knot");
  symmetry_cmd->add_option("factors", factor_tokens, "factors as name[:flavor]")
      ->expected(1, -1)
      ->required();
  symmetry_cmd->add_option("--primes", opt.primes_path, "prime table file");

  std::vector<std::string> orbit_names;
  auto* orbits_cmd = app.add_subcommand(
      "orbits", "all composite knots with the given prime factors");
  orbits_cmd->add_option("factors", orbit_names, "base factor names")
      ->expected(1, -1)
      ->required();
  orbits_cmd->add_option("--primes", opt.primes_path, "prime table file");
  orbits_cmd->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  orbits_cmd->add_option("--output", opt.output_path, "output file");
  orbits_cmd->add_flag("--pdcodes", opt.include_pdcodes,
                       "include composite PD-codes");

  int max_crossings = 12;
  auto* tabulate_cmd = app.add_subcommand(
      "tabulate", "composite knot table up to a crossing bound");
  tabulate_cmd->add_option("--primes", opt.primes_path, "prime table file");
  tabulate_cmd->add_option("--max-crossings", max_crossings, "crossing budget")
      ->check(CLI::Range(6, 1000));
  tabulate_cmd->add_option("--format", opt.format, "csv or json")
      ->check(CLI::IsMember({"csv", "json"}));
  tabulate_cmd->add_option("--output", opt.output_path, "output file");
  tabulate_cmd->add_flag("--pdcodes", opt.include_pdcodes,
                         "include composite PD-codes");

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitUsage;
  }

  try {
    if (*validate_cmd) return cmd_validate(code_text);
    if (*sum_cmd) return cmd_sum(sum_cmd->remaining());
    if (*symmetry_cmd) return cmd_symmetry(opt.primes_path, factor_tokens);
    if (*orbits_cmd) return cmd_orbits(opt, orbit_names);
    if (*tabulate_cmd) return cmd_tabulate(opt, max_crossings);
  } catch (const knotsum::ParseError& e) {
    std::cerr << "parse error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const CLI::ValidationError& e) {
    std::cerr << "usage error: " << e.what() << '\n';
    return kExitUsage;
  } catch (const knotsum::Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    return kExitDomain;
  }
  return kExitUsage;
}
