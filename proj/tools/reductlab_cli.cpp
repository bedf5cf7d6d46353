#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <set>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "reductlab/bounds.hpp"
#include "reductlab/lines.hpp"
#include "reductlab/polys.hpp"
#include "reductlab/reducts.hpp"
#include "reductlab/shattering.hpp"
#include "reductlab/table.hpp"

namespace {

using namespace reductlab;

std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  std::stringstream buffer;
  buffer << in.rdbuf();
  return std::move(buffer).str();
}

void write_output(const std::string& path, const std::string& content) {
  if (path.empty() || path == "-") {
    std::cout << content;
    return;
  }
  std::ofstream out(path);
  if (!out) throw Error("cannot write '" + path + "'");
  out << content;
}

std::string join_names(const std::vector<std::string>& names, const AttributeSet& set) {
  std::string out;
  for (int index : set) {
    if (!out.empty()) out += ' ';
    out += names[static_cast<std::size_t>(index)];
  }
  return out;
}

// ---- analyze ----------------------------------------------------------------

struct AnalyzeOptions {
  std::string path;
  int all_reducts = 0;
  std::string format = "text";
  int shatter_cap = 24;
};

int run_analyze(const AnalyzeOptions& options) {
  const auto table = parse_table(read_file(options.path));
  const auto reduct = min_reduct(table);
  const auto shatter = shattering_dimension(table, options.shatter_cap);

  std::optional<ReductEnumeration> enumeration;
  if (options.all_reducts > 0) {
    enumeration = enumerate_reducts(table, static_cast<std::size_t>(options.all_reducts));
  }

  const auto& names = table.attributes();
  auto pair_token = [&](const ValuePair& pair) {
    return "{" + table.alphabet().symbol(pair.lo) + "," + table.alphabet().symbol(pair.hi) +
           "}";
  };

  if (options.format == "json") {
    nlohmann::json j;
    j["N"] = table.row_count();
    j["cl"] = table.class_count();
    j["dim"] = table.dim();
    j["R"] = reduct.cardinality;
    auto reduct_names = nlohmann::json::array();
    for (int index : reduct.reduct) reduct_names.push_back(names[static_cast<std::size_t>(index)]);
    j["reduct"] = std::move(reduct_names);
    j["I"] = shatter.dimension;
    auto witness_columns = nlohmann::json::array();
    for (int index : shatter.columns) witness_columns.push_back(names[static_cast<std::size_t>(index)]);
    j["witness_columns"] = std::move(witness_columns);
    auto witness_pairs = nlohmann::json::array();
    for (const auto& pair : shatter.witness.pairs) {
      witness_pairs.push_back({table.alphabet().symbol(pair.lo), table.alphabet().symbol(pair.hi)});
    }
    j["witness_pairs"] = std::move(witness_pairs);
    if (enumeration) {
      auto reducts = nlohmann::json::array();
      for (const auto& set : enumeration->reducts) {
        auto one = nlohmann::json::array();
        for (int index : set) one.push_back(names[static_cast<std::size_t>(index)]);
        reducts.push_back(std::move(one));
      }
      j["reducts"] = std::move(reducts);
      j["reducts_truncated"] = enumeration->truncated;
    }
    std::cout << j.dump(2) << '\n';
    return 0;
  }

  std::cout << "N=" << table.row_count() << " cl=" << table.class_count()
            << " dim=" << table.dim() << " R=" << reduct.cardinality
            << " I=" << shatter.dimension << '\n';
  std::cout << "reduct: " << join_names(names, reduct.reduct) << '\n';
  std::cout << "witness_columns: " << join_names(names, shatter.columns) << '\n';
  std::cout << "witness:";
  for (std::size_t i = 0; i < shatter.witness.pairs.size(); ++i) {
    std::cout << ' ' << names[static_cast<std::size_t>(shatter.columns.indices()[i])] << ':'
              << pair_token(shatter.witness.pairs[i]);
  }
  std::cout << '\n';
  if (enumeration) {
    std::cout << "reducts: " << enumeration->reducts.size() << '\n';
    for (std::size_t i = 0; i < enumeration->reducts.size(); ++i) {
      std::cout << "reducts[" << i << "]: " << join_names(names, enumeration->reducts[i])
                << '\n';
    }
    if (enumeration->truncated) std::cout << "reducts_truncated: true\n";
  }
  return 0;
}

// ---- gen --------------------------------------------------------------------

struct GenOptions {
  std::string family;     // lines | polys | cube | shatter
  std::string spec_path;  // lines/polys
  int size = 0;           // cube/shatter
  std::string decisions = "distinct";
  std::uint64_t seed = 0;
  bool seed_given = false;
  std::string out_path;
};

int run_gen(const GenOptions& options) {
  const auto mode = DecisionSpec::parse(options.decisions);
  if (mode.kind == DecisionSpec::Kind::random_classes && !options.seed_given) {
    throw Error("--seed is required with randomized decisions");
  }

  DecisionTable table = [&] {
    if (options.family == "lines") {
      const auto lines = parse_lines(read_file(options.spec_path));
      return build_line_table(lines, mode, options.seed);
    }
    if (options.family == "polys") {
      const auto polys = parse_polys(read_file(options.spec_path));
      return build_poly_table(polys, mode, options.seed);
    }
    if (options.family == "cube") {
      return complete_table(Alphabet::binary(), options.size, mode, options.seed);
    }
    return build_poly_table(shatter_system(options.size), mode, options.seed);
  }();

  // Constant columns carry no information; point them out (a constant
  // polynomial attribute is legal input).
  for (int c = 0; c < table.dim(); ++c) {
    std::set<std::int32_t> values;
    for (const auto& row : table.rows()) values.insert(row.values[static_cast<std::size_t>(c)]);
    if (values.size() <= 1 && table.row_count() > 0) {
      std::cerr << "note: attribute '" << table.attributes()[static_cast<std::size_t>(c)]
                << "' is constant over every cell\n";
    }
  }

  write_output(options.out_path, serialize_table(table));
  return 0;
}

// ---- verify -----------------------------------------------------------------

int run_verify(const std::string& config_path, const std::string& out_path) {
  const auto config = parse_suite_config(read_file(config_path));
  const auto result = run_suite(config);
  const auto json_report = reports_to_json(result.reports);
  if (out_path.empty()) {
    std::cout << json_report << '\n';
    std::cerr << result.summary_text();
  } else {
    write_output(out_path, json_report);
    std::cout << result.summary_text();
  }
  return result.all_passed() ? 0 : 1;
}

// ---- nc ---------------------------------------------------------------------

int run_nc(const std::string& family, int max_n, int budget, std::uint64_t seed,
           const std::string& format) {
  ClassDescriptor cls;
  if (family == "lines") {
    cls = ClassDescriptor::lines_class();
  } else if (family == "polys") {
    cls = ClassDescriptor::polys_class(std::nullopt);
  } else if (family == "cubes") {
    cls = ClassDescriptor::cubes_class();
  } else {
    throw Error("unknown family '" + family + "' (expected lines, polys or cubes)");
  }
  const auto entries = empirical_nc(cls, max_n, budget, seed);
  if (format == "json") {
    nlohmann::json array = nlohmann::json::array();
    for (const auto& entry : entries) {
      nlohmann::json j;
      j["n"] = entry.n;
      j["max_rows"] = entry.max_rows;
      if (entry.exact) j["exact"] = *entry.exact;
      array.push_back(std::move(j));
    }
    std::cout << array.dump(2) << '\n';
    return 0;
  }
  for (const auto& entry : entries) {
    std::cout << "n=" << entry.n << " max_rows=" << entry.max_rows;
    if (entry.exact) std::cout << " exact=" << *entry.exact;
    std::cout << '\n';
  }
  return 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{
      "reductlab: exact analysis of decision tables - minimum reducts, shattering "
      "dimension, arrangement generators and an inequality verification suite"};
  app.require_subcommand(1);

  AnalyzeOptions analyze_options;
  auto* analyze = app.add_subcommand(
      "analyze", "statistics, minimum reduct and shattering dimension of a .dtab table");
  analyze->add_option("file", analyze_options.path, ".dtab input file")->required();
  analyze->add_option("--all-reducts", analyze_options.all_reducts,
                      "enumerate all reducts up to this many");
  analyze->add_option("--format", analyze_options.format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));
  analyze->add_option("--shatter-cap", analyze_options.shatter_cap,
                      "active-column cap for the shattering search");

  GenOptions gen_options;
  auto* gen = app.add_subcommand("gen", "generate a decision table");
  gen->require_subcommand(1);
  auto add_gen_common = [&](CLI::App* cmd) {
    cmd->add_option("--decisions", gen_options.decisions,
                    "distinct | constant:<d> | random:<c>");
    cmd->add_option("--seed", gen_options.seed, "seed for randomized decisions")
        ->each([&](const std::string&) { gen_options.seed_given = true; });
    cmd->add_option("-o,--out", gen_options.out_path, "output path (stdout by default)");
  };
  auto* gen_lines = gen->add_subcommand("lines", "table of a half-plane arrangement");
  gen_lines->add_option("spec", gen_options.spec_path, ".lines file")->required();
  add_gen_common(gen_lines);
  auto* gen_polys = gen->add_subcommand("polys", "table of a univariate sign arrangement");
  gen_polys->add_option("spec", gen_options.spec_path, ".poly file")->required();
  add_gen_common(gen_polys);
  auto* gen_cube = gen->add_subcommand("cube", "complete binary table of dimension n");
  gen_cube->add_option("n", gen_options.size, "dimension")->required()->check(CLI::Range(0, 16));
  add_gen_common(gen_cube);
  auto* gen_shatter =
      gen->add_subcommand("shatter", "polynomial system realizing all of {-1,+1}^p");
  gen_shatter->add_option("p", gen_options.size, "arity")->required()->check(CLI::Range(1, 6));
  add_gen_common(gen_shatter);

  std::string verify_config;
  std::string verify_out;
  auto* verify = app.add_subcommand("verify", "run the inequality verification suite");
  verify->add_option("config", verify_config, "JSON config file")->required();
  verify->add_option("-o,--out", verify_out, "report path (stdout by default)");

  std::string nc_family;
  int nc_n = 1;
  int nc_budget = 20;
  std::uint64_t nc_seed = 0;
  std::string nc_format = "text";
  auto* nc = app.add_subcommand("nc", "empirical worst-case row growth by dimension");
  nc->add_option("--family", nc_family, "lines | polys | cubes")->required();
  nc->add_option("--n", nc_n, "largest dimension")->required();
  nc->add_option("--budget", nc_budget, "random instances per dimension");
  nc->add_option("--seed", nc_seed, "seed for the random instances");
  nc->add_option("--format", nc_format, "text or json")
      ->check(CLI::IsMember({"text", "json"}));

  CLI11_PARSE(app, argc, argv);

  try {
    if (app.got_subcommand(analyze)) return run_analyze(analyze_options);
    if (app.got_subcommand(gen)) {
      for (const char* family : {"lines", "polys", "cube", "shatter"}) {
        if (gen->got_subcommand(family)) gen_options.family = family;
      }
      return run_gen(gen_options);
    }
    if (app.got_subcommand(verify)) return run_verify(verify_config, verify_out);
    if (app.got_subcommand(nc)) return run_nc(nc_family, nc_n, nc_budget, nc_seed, nc_format);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
