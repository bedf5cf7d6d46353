#include "reductlab/bounds.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <set>
#include <sstream>

#include <json.hpp>

#include "reductlab/lines.hpp"
#include "reductlab/polys.hpp"
#include "reductlab/rational.hpp"
#include "reductlab/reducts.hpp"
#include "reductlab/rng.hpp"
#include "reductlab/shattering.hpp"

namespace reductlab {

namespace {

std::string big_str(const BigInt& value) { return value.get_str(); }

CheckReport skipped(std::string check, std::string instance, std::uint64_t seed) {
  CheckReport report;
  report.check = std::move(check);
  report.instance = std::move(instance);
  report.lhs = "-";
  report.rhs = "-";
  report.holds = true;
  report.skipped = true;
  report.seed = seed;
  return report;
}

std::string pad4(std::uint64_t value) {
  std::string s = std::to_string(value);
  return s.size() >= 4 ? s : std::string(4 - s.size(), '0') + s;
}

std::string pad2(int value) {
  std::string s = std::to_string(value);
  return s.size() >= 2 ? s : "0" + s;
}

}  // namespace

ClassDescriptor ClassDescriptor::lines_class() {
  return ClassDescriptor{Family::lines, 2, 2, "half-plane attributes"};
}

ClassDescriptor ClassDescriptor::polys_class(std::optional<long> q) {
  return ClassDescriptor{Family::polys, 3, q, "univariate sign attributes"};
}

ClassDescriptor ClassDescriptor::cubes_class() {
  return ClassDescriptor{Family::cubes, 2, std::nullopt, "complete binary tables"};
}

CheckReport check_row_count_bound(const DecisionTable& table, std::string instance,
                                  std::uint64_t seed) {
  if (table.class_count() < 2 || table.dim() < 1) {
    return skipped("row_count_bound", std::move(instance), seed);
  }
  const int k = table.alphabet().k();
  const int shatter = shattering_dimension(table).dimension;
  const BigInt base = BigInt(k) * k * table.dim();
  const BigInt rhs = big_pow(base, static_cast<unsigned long>(shatter));
  CheckReport report;
  report.check = "row_count_bound";
  report.instance = std::move(instance);
  report.lhs = std::to_string(table.row_count());
  report.rhs = big_str(rhs);
  report.holds = BigInt(table.row_count()) <= rhs;
  report.seed = seed;
  return report;
}

CheckReport check_log_class_bound(const DecisionTable& table, std::string instance,
                                  std::uint64_t seed) {
  if (table.class_count() < 2) {
    return skipped("log_class_bound", std::move(instance), seed);
  }
  const int reduct_size = min_reduct(table).cardinality;
  const BigInt lhs = big_pow(BigInt(table.alphabet().k()),
                             static_cast<unsigned long>(reduct_size));
  CheckReport report;
  report.check = "log_class_bound";
  report.instance = std::move(instance);
  report.lhs = big_str(lhs);  // k^R
  report.rhs = std::to_string(table.class_count());
  report.holds = lhs >= BigInt(table.class_count());
  report.seed = seed;
  return report;
}

CheckReport check_power_class_bound(const DecisionTable& table,
                                    const ClassDescriptor& cls, std::string instance,
                                    std::uint64_t seed) {
  if (!cls.declared_dimension) {
    throw Error("the power bound needs a finite declared class dimension");
  }
  if (cls.k != table.alphabet().k()) {
    throw Error("class alphabet size does not match the table");
  }
  if (table.class_count() < 2) {
    return skipped("power_class_bound", std::move(instance), seed);
  }
  const int reduct_size = min_reduct(table).cardinality;
  const BigInt base = BigInt(cls.k) * cls.k * reduct_size;
  const BigInt lhs = big_pow(base, static_cast<unsigned long>(*cls.declared_dimension));
  CheckReport report;
  report.check = "power_class_bound";
  report.instance = std::move(instance);
  report.lhs = big_str(lhs);  // (k^2 * R)^I(C)
  report.rhs = std::to_string(table.class_count());
  report.holds = lhs >= BigInt(table.class_count());
  report.seed = seed;
  return report;
}

CheckReport check_projection_bound(const DecisionTable& table, std::string instance,
                                   std::uint64_t seed) {
  if (table.class_count() < 2) {
    return skipped("projection_bound", std::move(instance), seed);
  }
  const auto reduct = min_reduct(table);
  const auto projected = project(table, reduct.reduct, MergePolicy::keep_first);
  CheckReport report;
  report.check = "projection_bound";
  report.instance = std::move(instance);
  report.lhs = std::to_string(projected.row_count());
  report.rhs = std::to_string(table.class_count());
  report.holds = projected.row_count() >= table.class_count();
  report.seed = seed;
  return report;
}

CheckReport log_tightness_demo(int n, int n_cap) {
  if (n < 1) throw Error("dimension must be positive");
  if (n > n_cap) {
    throw Error("dimension " + std::to_string(n) + " exceeds the cap " +
                std::to_string(n_cap));
  }
  const auto cube = complete_table(Alphabet::binary(), n, DecisionSpec::distinct());
  const int reduct_size = min_reduct(cube).cardinality;
  const BigInt lhs = big_pow(BigInt(2), static_cast<unsigned long>(reduct_size));
  const BigInt rhs = BigInt(2) * cube.class_count();
  CheckReport report;
  report.check = "log_tightness";
  report.instance = "cube n=" + pad2(n);
  report.lhs = big_str(lhs);  // 2^R
  report.rhs = big_str(rhs);  // 2 * cl; the strengthened bound fails iff lhs < rhs
  report.holds = lhs < rhs;
  return report;
}

// ---- empirical growth -------------------------------------------------------

namespace {

std::uint64_t lines_region_formula(int n) {
  return 1 + static_cast<std::uint64_t>(n) +
         static_cast<std::uint64_t>(n) * (static_cast<std::uint64_t>(n) - 1) / 2;
}

}  // namespace

std::vector<NcEntry> empirical_nc(const ClassDescriptor& cls, int max_n, int budget,
                                  std::uint64_t seed) {
  if (max_n < 1) throw Error("dimension range must be positive");
  std::vector<NcEntry> entries;
  std::uint64_t running_max = 0;

  switch (cls.family) {
    case Family::cubes: {
      if (max_n > 16) throw Error("cube family cap is 16 dimensions");
      for (int n = 1; n <= max_n; ++n) {
        const auto cube = complete_table(Alphabet::binary(), n, DecisionSpec::distinct());
        running_max = std::max(running_max,
                               static_cast<std::uint64_t>(cube.row_count()));
        entries.push_back(NcEntry{n, running_max, std::uint64_t{1} << n});
      }
      break;
    }
    case Family::lines: {
      if (max_n > 16) throw Error("line family cap is 16 lines");
      for (int n = 1; n <= max_n; ++n) {
        const auto structured = general_position_lines(n);
        std::uint64_t best = enumerate_cells(structured).size();
        SeededRng rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
        for (int i = 0; i < budget; ++i) {
          const auto lines = random_lines(n, rng);
          best = std::max<std::uint64_t>(best, enumerate_cells(lines).size());
        }
        running_max = std::max(running_max, best);
        entries.push_back(NcEntry{n, running_max, lines_region_formula(n)});
      }
      break;
    }
    case Family::polys: {
      if (max_n > 8) throw Error("polynomial family cap is 8 attributes");
      for (int n = 1; n <= max_n; ++n) {
        // n shifted linear attributes realize 2n+1 cells.
        std::vector<RatPoly> structured;
        for (int j = 0; j < n; ++j) {
          structured.push_back(RatPoly::from_ints("p" + std::to_string(j),
                                                  {-static_cast<long>(j), 1}));
        }
        std::uint64_t best = enumerate_sign_vectors(structured).size();
        SeededRng rng(mix_seed(seed, static_cast<std::uint64_t>(n)));
        for (int i = 0; i < budget; ++i) {
          const auto polys = random_poly_system(n, 3, rng);
          best = std::max<std::uint64_t>(best, enumerate_sign_vectors(polys).size());
        }
        running_max = std::max(running_max, best);
        entries.push_back(NcEntry{n, running_max, std::nullopt});
      }
      break;
    }
    case Family::custom:
      throw Error("empirical growth needs a generator-backed family (lines, polys or cubes)");
  }
  return entries;
}

long smallest_consistent_q(std::span<const std::pair<std::uint64_t, std::uint64_t>> r_cl,
                           int k) {
  long best = 1;
  for (const auto& [reduct_size, classes] : r_cl) {
    if (classes < 2) continue;
    const BigInt base = BigInt(k) * k * static_cast<unsigned long>(reduct_size);
    if (base <= 1) {
      throw Error("no exponent fits: k^2 * R <= 1 while cl >= 2");
    }
    long q = 1;
    while (big_pow(base, static_cast<unsigned long>(q)) <
           BigInt(static_cast<unsigned long>(classes))) {
      ++q;
    }
    best = std::max(best, q);
  }
  return best;
}

// ---- suite config -----------------------------------------------------------

SuiteConfig SuiteConfig::defaults() {
  SuiteConfig config;
  config.random_tables.emplace();
  config.lines.emplace();
  config.polys.emplace();
  config.cubes.emplace();
  config.shatter.emplace();
  return config;
}

namespace {

using nlohmann::json;

[[noreturn]] void config_error(const std::string& path, const std::string& what) {
  throw Error("config field " + path + " " + what);
}

void require_object(const json& value, const std::string& path) {
  if (!value.is_object()) config_error(path, "must be an object");
}

std::uint64_t get_u64(const json& section, const std::string& path, const char* key,
                      std::uint64_t fallback) {
  if (!section.contains(key)) return fallback;
  const auto& v = section.at(key);
  if (!v.is_number_unsigned()) config_error(path + "." + key, "must be a nonnegative integer");
  return v.get<std::uint64_t>();
}

int get_int(const json& section, const std::string& path, const char* key, int fallback,
            int min_value, int max_value) {
  if (!section.contains(key)) return fallback;
  const auto& v = section.at(key);
  if (!v.is_number_integer()) config_error(path + "." + key, "must be an integer");
  const auto value = v.get<std::int64_t>();
  if (value < min_value || value > max_value) {
    config_error(path + "." + key, "must be in [" + std::to_string(min_value) + ", " +
                                       std::to_string(max_value) + "]");
  }
  return static_cast<int>(value);
}

void reject_unknown(const json& section, const std::string& path,
                    std::initializer_list<const char*> known) {
  for (const auto& [key, value] : section.items()) {
    bool ok = false;
    for (const char* k : known) {
      if (key == k) {
        ok = true;
        break;
      }
    }
    if (!ok) config_error(path + "." + key, "is not a recognized field");
  }
}

}  // namespace

SuiteConfig parse_suite_config(std::string_view json_text) {
  json root;
  try {
    root = json::parse(json_text);
  } catch (const json::exception& e) {
    throw Error(std::string("invalid config JSON: ") + e.what());
  }
  require_object(root, "(root)");
  reject_unknown(root, "(root)",
                 {"random_tables", "lines", "polys", "cubes", "shatter", "golden_tables"});

  SuiteConfig config;
  if (root.contains("random_tables")) {
    const auto& s = root.at("random_tables");
    require_object(s, "random_tables");
    reject_unknown(s, "random_tables",
                   {"count", "seed", "k_values", "min_dim", "max_dim", "min_rows", "max_rows"});
    RandomTablesSection section;
    section.count = get_u64(s, "random_tables", "count", section.count);
    section.seed = get_u64(s, "random_tables", "seed", section.seed);
    if (s.contains("k_values")) {
      const auto& kv = s.at("k_values");
      if (!kv.is_array() || kv.empty()) {
        config_error("random_tables.k_values", "must be a nonempty array");
      }
      section.k_values.clear();
      for (const auto& v : kv) {
        if (!v.is_number_integer() || v.get<std::int64_t>() < 2 || v.get<std::int64_t>() > 6) {
          config_error("random_tables.k_values", "entries must be integers in [2, 6]");
        }
        section.k_values.push_back(static_cast<int>(v.get<std::int64_t>()));
      }
    }
    section.min_dim = get_int(s, "random_tables", "min_dim", section.min_dim, 1, 16);
    section.max_dim = get_int(s, "random_tables", "max_dim", section.max_dim, 1, 16);
    if (section.min_dim > section.max_dim) {
      config_error("random_tables.max_dim", "must be >= min_dim");
    }
    section.min_rows = get_u64(s, "random_tables", "min_rows", section.min_rows);
    section.max_rows = get_u64(s, "random_tables", "max_rows", section.max_rows);
    if (section.min_rows < 1 || section.min_rows > section.max_rows) {
      config_error("random_tables.max_rows", "must be >= min_rows >= 1");
    }
    config.random_tables = std::move(section);
  }
  if (root.contains("lines")) {
    const auto& s = root.at("lines");
    require_object(s, "lines");
    reject_unknown(s, "lines",
                   {"general_min", "general_max", "random_systems", "random_lines", "seed"});
    LinesSection section;
    section.general_min = get_int(s, "lines", "general_min", section.general_min, 1, 16);
    section.general_max = get_int(s, "lines", "general_max", section.general_max, 1, 16);
    if (section.general_min > section.general_max) {
      config_error("lines.general_max", "must be >= general_min");
    }
    section.random_systems = get_int(s, "lines", "random_systems", section.random_systems, 0, 100000);
    section.random_lines = get_int(s, "lines", "random_lines", section.random_lines, 1, 16);
    section.seed = get_u64(s, "lines", "seed", section.seed);
    config.lines = std::move(section);
  }
  if (root.contains("polys")) {
    const auto& s = root.at("polys");
    require_object(s, "polys");
    reject_unknown(s, "polys", {"systems", "max_polys", "max_degree", "seed"});
    PolysSection section;
    section.systems = get_int(s, "polys", "systems", section.systems, 0, 100000);
    section.max_polys = get_int(s, "polys", "max_polys", section.max_polys, 1, 8);
    section.max_degree = get_int(s, "polys", "max_degree", section.max_degree, 0, 12);
    section.seed = get_u64(s, "polys", "seed", section.seed);
    config.polys = std::move(section);
  }
  if (root.contains("cubes")) {
    const auto& s = root.at("cubes");
    require_object(s, "cubes");
    reject_unknown(s, "cubes", {"min_n", "max_n"});
    CubesSection section;
    section.min_n = get_int(s, "cubes", "min_n", section.min_n, 1, 12);
    section.max_n = get_int(s, "cubes", "max_n", section.max_n, 1, 12);
    if (section.min_n > section.max_n) config_error("cubes.max_n", "must be >= min_n");
    config.cubes = std::move(section);
  }
  if (root.contains("shatter")) {
    const auto& s = root.at("shatter");
    require_object(s, "shatter");
    reject_unknown(s, "shatter", {"min_p", "max_p"});
    ShatterSection section;
    section.min_p = get_int(s, "shatter", "min_p", section.min_p, 1, 6);
    section.max_p = get_int(s, "shatter", "max_p", section.max_p, 1, 6);
    if (section.min_p > section.max_p) config_error("shatter.max_p", "must be >= min_p");
    config.shatter = std::move(section);
  }
  if (root.contains("golden_tables")) {
    const auto& list = root.at("golden_tables");
    if (!list.is_array()) config_error("golden_tables", "must be an array");
    for (std::size_t i = 0; i < list.size(); ++i) {
      const std::string path = "golden_tables[" + std::to_string(i) + "]";
      const auto& g = list.at(i);
      require_object(g, path);
      reject_unknown(g, path, {"path", "expect"});
      if (!g.contains("path") || !g.at("path").is_string()) {
        config_error(path + ".path", "must be a string");
      }
      if (!g.contains("expect")) config_error(path + ".expect", "is required");
      const auto& e = g.at("expect");
      require_object(e, path + ".expect");
      reject_unknown(e, path + ".expect", {"N", "cl", "dim", "R", "I"});
      GoldenTable golden;
      golden.path = g.at("path").get<std::string>();
      for (const char* key : {"N", "cl", "dim", "R", "I"}) {
        if (!e.contains(key)) config_error(path + ".expect." + key, "is required");
      }
      golden.rows = get_u64(e, path + ".expect", "N", 0);
      golden.classes = get_u64(e, path + ".expect", "cl", 0);
      golden.dim = get_u64(e, path + ".expect", "dim", 0);
      golden.reduct = get_u64(e, path + ".expect", "R", 0);
      golden.shatter = get_u64(e, path + ".expect", "I", 0);
      config.golden_tables.push_back(std::move(golden));
    }
  }
  return config;
}

// ---- suite execution --------------------------------------------------------

namespace {

DecisionTable poly_table_from_vectors(std::span<const RatPoly> polys,
                                      const std::vector<Pattern>& vectors) {
  std::vector<std::string> names;
  for (const auto& p : polys) names.push_back(p.name());
  std::vector<TableRow> rows;
  rows.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Pattern indices;
    indices.reserve(vectors[i].size());
    for (auto s : vectors[i]) indices.push_back(s + 1);
    rows.push_back(TableRow{std::move(indices), i});
  }
  return DecisionTable(Alphabet::signs(), std::move(names), std::move(rows));
}

std::string stats_line(const DecisionTable& table, int reduct_size, int shatter_dim) {
  std::ostringstream out;
  out << "N=" << table.row_count() << " cl=" << table.class_count()
      << " dim=" << table.dim() << " R=" << reduct_size << " I=" << shatter_dim;
  return std::move(out).str();
}

}  // namespace

std::size_t SuiteResult::failures() const {
  std::size_t count = 0;
  for (const auto& report : reports) {
    if (!report.skipped && !report.holds) ++count;
  }
  return count;
}

std::string SuiteResult::summary_text() const {
  struct Counts {
    std::size_t pass = 0, skip = 0, fail = 0;
  };
  std::map<std::string, Counts> by_check;
  for (const auto& report : reports) {
    auto& counts = by_check[report.check];
    if (report.skipped) {
      ++counts.skip;
    } else if (report.holds) {
      ++counts.pass;
    } else {
      ++counts.fail;
    }
  }
  std::ostringstream out;
  std::size_t total_pass = 0, total_skip = 0, total_fail = 0;
  for (const auto& [check, counts] : by_check) {
    out << check << ": pass=" << counts.pass << " skip=" << counts.skip
        << " fail=" << counts.fail << '\n';
    total_pass += counts.pass;
    total_skip += counts.skip;
    total_fail += counts.fail;
  }
  out << "total: pass=" << total_pass << " skip=" << total_skip
      << " fail=" << total_fail << '\n';
  if (!notes.empty()) out << notes;
  return std::move(out).str();
}

SuiteResult run_suite(const SuiteConfig& config) {
  SuiteResult result;
  auto& out = result.reports;

  auto standard_checks = [&](const DecisionTable& table, const std::string& instance,
                             std::uint64_t seed, const ClassDescriptor* power_class) {
    out.push_back(check_row_count_bound(table, instance, seed));
    out.push_back(check_log_class_bound(table, instance, seed));
    out.push_back(check_projection_bound(table, instance, seed));
    if (power_class) {
      out.push_back(check_power_class_bound(table, *power_class, instance, seed));
    }
  };

  if (config.random_tables) {
    const auto& section = *config.random_tables;
    for (std::uint64_t i = 0; i < section.count; ++i) {
      const std::uint64_t instance_seed = mix_seed(section.seed, i);
      SeededRng rng(instance_seed);
      const int k = section.k_values[rng.below(section.k_values.size())];
      const int dim = static_cast<int>(rng.in_range(section.min_dim, section.max_dim));
      const BigInt space = alphabet_power(k, dim);
      std::uint64_t hi = section.max_rows;
      if (space < BigInt(static_cast<unsigned long>(hi))) hi = space.get_ui();
      std::uint64_t lo = std::min<std::uint64_t>(section.min_rows, hi);
      const std::uint64_t rows =
          lo + rng.below(hi - lo + 1);
      DecisionSpec mode = DecisionSpec::distinct();
      switch (i % 4) {
        case 0:
        case 1:
          break;
        case 2:
          mode = DecisionSpec::random_classes(3);
          break;
        case 3:
          mode = DecisionSpec::random_classes(5);
          break;
      }
      const auto table = random_table(Alphabet::numeric(k), dim, rows, mode,
                                      mix_seed(instance_seed, 1));
      standard_checks(table, "random i=" + pad4(i), instance_seed, nullptr);
    }
  }

  if (config.lines) {
    const auto& section = *config.lines;
    const auto lines_class = ClassDescriptor::lines_class();
    for (int n = section.general_min; n <= section.general_max; ++n) {
      const auto lines = general_position_lines(n);
      const auto table = build_line_table(lines, DecisionSpec::distinct());
      const std::string instance = "lines general n=" + pad2(n);
      standard_checks(table, instance, section.seed, &lines_class);

      CheckReport bound;
      bound.check = "region_count_bound";
      bound.instance = instance;
      bound.lhs = std::to_string(table.row_count());
      bound.rhs = std::to_string(lines_region_formula(n));
      bound.holds = static_cast<std::uint64_t>(table.row_count()) <= lines_region_formula(n);
      bound.seed = section.seed;
      out.push_back(bound);

      // General position realizes the formula exactly; cross-validates the
      // cell enumerator.
      CheckReport formula = bound;
      formula.check = "region_formula";
      formula.holds = static_cast<std::uint64_t>(table.row_count()) == lines_region_formula(n);
      out.push_back(std::move(formula));
    }
    for (int i = 0; i < section.random_systems; ++i) {
      const std::uint64_t instance_seed = mix_seed(section.seed, 1000 + static_cast<std::uint64_t>(i));
      SeededRng rng(instance_seed);
      const auto lines = random_lines(section.random_lines, rng);
      const auto table = build_line_table(lines, DecisionSpec::distinct());
      const std::string instance = "lines random i=" + pad4(static_cast<std::uint64_t>(i));
      standard_checks(table, instance, instance_seed, &lines_class);

      CheckReport bound;
      bound.check = "region_count_bound";
      bound.instance = instance;
      bound.lhs = std::to_string(table.row_count());
      bound.rhs = std::to_string(lines_region_formula(section.random_lines));
      bound.holds = static_cast<std::uint64_t>(table.row_count()) <=
                    lines_region_formula(section.random_lines);
      bound.seed = instance_seed;
      out.push_back(std::move(bound));
    }
  }

  if (config.polys) {
    const auto& section = *config.polys;
    std::vector<std::pair<std::uint64_t, std::uint64_t>> r_cl;
    for (int i = 0; i < section.systems; ++i) {
      const std::uint64_t instance_seed = mix_seed(section.seed, static_cast<std::uint64_t>(i));
      SeededRng rng(instance_seed);
      const int count = static_cast<int>(rng.in_range(1, section.max_polys));
      const auto polys = random_poly_system(count, section.max_degree, rng);
      const auto detail = enumerate_sign_vectors_detail(polys);
      const auto table = poly_table_from_vectors(polys, detail.vectors);
      const std::string instance = "polys random i=" + pad4(static_cast<std::uint64_t>(i));
      standard_checks(table, instance, instance_seed, nullptr);

      CheckReport cells;
      cells.check = "cell_count_bound";
      cells.instance = instance;
      cells.lhs = std::to_string(table.row_count());
      cells.rhs = std::to_string(2 * detail.distinct_roots + 1);
      cells.holds = table.row_count() <= 2 * detail.distinct_roots + 1;
      cells.seed = instance_seed;
      out.push_back(std::move(cells));

      if (table.class_count() >= 2) {
        r_cl.emplace_back(static_cast<std::uint64_t>(min_reduct(table).cardinality),
                          static_cast<std::uint64_t>(table.class_count()));
      }
    }
    if (!r_cl.empty()) {
      result.notes += "polys family: smallest exponent q with (9*R)^q >= cl across " +
                      std::to_string(r_cl.size()) +
                      " instances: q=" + std::to_string(smallest_consistent_q(r_cl, 3)) + "\n";
    }
  }

  if (config.cubes) {
    const auto& section = *config.cubes;
    for (int n = section.min_n; n <= section.max_n; ++n) {
      const auto cube = complete_table(Alphabet::binary(), n, DecisionSpec::distinct());
      const std::string instance = "cube n=" + pad2(n);
      standard_checks(cube, instance, 0, nullptr);
      out.push_back(log_tightness_demo(n, std::max(n, 12)));

      CheckReport growth;
      growth.check = "cube_growth";
      growth.instance = instance;
      growth.lhs = std::to_string(cube.row_count());
      growth.rhs = big_str(big_pow(BigInt(2), static_cast<unsigned long>(n)));
      growth.holds = BigInt(cube.row_count()) >= big_pow(BigInt(2), static_cast<unsigned long>(n));
      out.push_back(std::move(growth));
    }
  }

  if (config.shatter) {
    const auto& section = *config.shatter;
    for (int p = section.min_p; p <= section.max_p; ++p) {
      const auto polys = shatter_system(p);
      const auto table = build_poly_table(polys, DecisionSpec::distinct());
      const std::string instance = "shatter p=" + pad2(p);
      standard_checks(table, instance, 0, nullptr);

      const auto shatter = shattering_dimension(table);
      CheckReport dimension;
      dimension.check = "shatter_dimension";
      dimension.instance = instance;
      dimension.lhs = std::to_string(shatter.dimension);
      dimension.rhs = std::to_string(p);
      dimension.holds = shatter.dimension == p;
      out.push_back(std::move(dimension));

      // The pairs {-1,+1} (alphabet indices {0,2}) must certify independence
      // on every column: all 2^p product tuples realized among the rows.
      std::set<Pattern> row_set;
      for (const auto& row : table.rows()) row_set.insert(row.values);
      std::uint64_t realized = 0;
      for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << p); ++combo) {
        Pattern wanted(static_cast<std::size_t>(p));
        for (int c = 0; c < p; ++c) {
          wanted[static_cast<std::size_t>(c)] = (combo >> c) & 1 ? 2 : 0;
        }
        if (row_set.count(wanted)) ++realized;
      }
      CheckReport witness;
      witness.check = "shatter_witness";
      witness.instance = instance;
      witness.lhs = std::to_string(realized);
      witness.rhs = std::to_string(std::uint64_t{1} << p);
      witness.holds = realized == (std::uint64_t{1} << p);
      out.push_back(std::move(witness));
    }
  }

  for (const auto& golden : config.golden_tables) {
    CheckReport report;
    report.check = "golden_stats";
    report.instance = golden.path;
    std::ostringstream expected;
    expected << "N=" << golden.rows << " cl=" << golden.classes << " dim=" << golden.dim
             << " R=" << golden.reduct << " I=" << golden.shatter;
    report.rhs = std::move(expected).str();
    try {
      std::ifstream in(golden.path);
      if (!in) throw Error("cannot read file");
      std::stringstream buffer;
      buffer << in.rdbuf();
      const auto table = parse_table(buffer.str());
      const int reduct_size = min_reduct(table).cardinality;
      const int shatter_dim = shattering_dimension(table).dimension;
      report.lhs = stats_line(table, reduct_size, shatter_dim);
      report.holds = report.lhs == report.rhs;
    } catch (const Error& e) {
      report.lhs = std::string("error: ") + e.what();
      report.holds = false;
    }
    out.push_back(std::move(report));
  }

  std::sort(out.begin(), out.end(), [](const CheckReport& a, const CheckReport& b) {
    return a.check != b.check ? a.check < b.check : a.instance < b.instance;
  });
  return result;
}

std::string reports_to_json(std::span<const CheckReport> reports) {
  json array = json::array();
  for (const auto& report : reports) {
    json j;
    j["check"] = report.check;
    j["instance"] = report.instance;
    j["lhs"] = report.lhs;
    j["rhs"] = report.rhs;
    j["holds"] = report.holds;
    j["skipped"] = report.skipped;
    j["seed"] = report.seed;
    array.push_back(std::move(j));
  }
  return array.dump(2);
}

}  // namespace reductlab
