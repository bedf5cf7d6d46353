#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

#include "reductlab/table.hpp"

namespace reductlab {

enum class Family { lines, polys, cubes, custom };

/// A closed family of tables together with its declared dimension bound
/// (nullopt = unbounded). The power bound needs a finite declared value.
struct ClassDescriptor {
  Family family = Family::custom;
  int k = 2;
  std::optional<long> declared_dimension;
  std::string note;

  static ClassDescriptor lines_class();                       // k = 2, dimension 2
  static ClassDescriptor polys_class(std::optional<long> q);  // k = 3
  static ClassDescriptor cubes_class();                       // k = 2, unbounded
};

/// One verified inequality instance. lhs/rhs hold the exact integer sides of
/// the cleared comparison (never floating point); `holds` is the verdict and
/// `skipped` marks unmet hypotheses (cl < 2 and the like), which never count
/// as failures.
struct CheckReport {
  std::string check;
  std::string instance;
  std::string lhs;
  std::string rhs;
  bool holds = false;
  bool skipped = false;
  std::uint64_t seed = 0;
};

/// row_count_bound: N <= (k^2 * dim)^I, with I the shattering dimension.
/// Skipped when cl < 2 or dim < 1.
CheckReport check_row_count_bound(const DecisionTable& table, std::string instance = "",
                                  std::uint64_t seed = 0);

/// log_class_bound: R >= log_k cl, compared exactly as k^R >= cl.
/// Holds for every table; skipped when cl < 2.
CheckReport check_log_class_bound(const DecisionTable& table, std::string instance = "",
                                  std::uint64_t seed = 0);

/// power_class_bound: R >= cl^(1/I(C)) / k^2, compared exactly as
/// (k^2 * R)^I(C) >= cl. Requires a finite declared class dimension.
CheckReport check_power_class_bound(const DecisionTable& table,
                                    const ClassDescriptor& cls, std::string instance = "",
                                    std::uint64_t seed = 0);

/// projection_bound: projecting onto a minimum reduct leaves at least cl
/// rows. Skipped when cl < 2.
CheckReport check_projection_bound(const DecisionTable& table, std::string instance = "",
                                   std::uint64_t seed = 0);

/// log_tightness: on the complete binary table of dimension n with all
/// decisions distinct, the strengthened bound R >= log2 cl + 1 fails;
/// compared exactly as 2^R < 2*cl. R itself equals n here.
CheckReport log_tightness_demo(int n, int n_cap = 12);

struct NcEntry {
  int n = 0;
  std::uint64_t max_rows = 0;            // best instance found within budget
  std::optional<std::uint64_t> exact;    // known family maximum, when available
};

/// Empirical worst-case row counts per dimension, monotone nondecreasing
/// (running maximum; a closed family contains all column-deleted tables).
/// `budget` random instances per dimension on top of the structured ones.
std::vector<NcEntry> empirical_nc(const ClassDescriptor& cls, int max_n, int budget,
                                  std::uint64_t seed);

/// Least integer q >= 1 with (k^2 * R)^q >= cl across all observed (R, cl)
/// instances with cl >= 2.
long smallest_consistent_q(std::span<const std::pair<std::uint64_t, std::uint64_t>> r_cl,
                           int k);

// ---- verification suite -----------------------------------------------------

struct RandomTablesSection {
  std::uint64_t count = 1200;
  std::uint64_t seed = 1;
  std::vector<int> k_values{2, 3};
  int min_dim = 2;
  int max_dim = 10;
  std::uint64_t min_rows = 2;
  std::uint64_t max_rows = 40;
};

struct LinesSection {
  int general_min = 2;    // general-position arrangements of this many lines ...
  int general_max = 8;    // ... up to this many
  int random_systems = 100;
  int random_lines = 3;
  std::uint64_t seed = 2;
};

struct PolysSection {
  int systems = 50;
  int max_polys = 5;
  int max_degree = 6;
  std::uint64_t seed = 3;
};

struct CubesSection {
  int min_n = 2;
  int max_n = 10;
};

struct ShatterSection {
  int min_p = 1;
  int max_p = 4;
};

/// Expected statistics for a golden .dtab file; mismatches fail the
/// golden_stats check (the suite's only deliberately failable check).
struct GoldenTable {
  std::string path;
  std::uint64_t rows = 0;     // N
  std::uint64_t classes = 0;  // cl
  std::uint64_t dim = 0;
  std::uint64_t reduct = 0;   // R
  std::uint64_t shatter = 0;  // I
};

struct SuiteConfig {
  std::optional<RandomTablesSection> random_tables;
  std::optional<LinesSection> lines;
  std::optional<PolysSection> polys;
  std::optional<CubesSection> cubes;
  std::optional<ShatterSection> shatter;
  std::vector<GoldenTable> golden_tables;

  static SuiteConfig defaults();
};

/// Parses the JSON config; malformed fields are reported with their path.
SuiteConfig parse_suite_config(std::string_view json_text);

struct SuiteResult {
  std::vector<CheckReport> reports;  // sorted by (check, instance)
  std::string notes;                 // informational lines, e.g. the fitted q

  std::size_t failures() const;
  bool all_passed() const { return failures() == 0; }
  std::string summary_text() const;  // per-check pass/skip/fail counts
};

/// Deterministic batch of every applicable check over the configured
/// generated and random instances.
SuiteResult run_suite(const SuiteConfig& config);

std::string reports_to_json(std::span<const CheckReport> reports);

}  // namespace reductlab
