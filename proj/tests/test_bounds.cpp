#include <doctest.h>

#include "reductlab/bounds.hpp"
#include "reductlab/lines.hpp"
#include "reductlab/polys.hpp"
#include "reductlab/rng.hpp"
#include "reductlab/table.hpp"

using namespace reductlab;

TEST_CASE("row-count bound on documented tables") {
  SUBCASE("complete boolean square: 4 <= (4*2)^2") {
    const auto square = complete_table(Alphabet::binary(), 2, DecisionSpec::distinct());
    const auto report = check_row_count_bound(square, "square");
    CHECK(report.holds);
    CHECK_FALSE(report.skipped);
    CHECK(report.lhs == "4");
    CHECK(report.rhs == "64");
  }
  SUBCASE("three general-position lines: 7 <= (4*3)^2") {
    const auto table = build_line_table(general_position_lines(3), DecisionSpec::distinct());
    const auto report = check_row_count_bound(table, "gp3");
    CHECK(report.holds);
    CHECK(report.lhs == "7");
    CHECK(report.rhs == "144");
  }
  SUBCASE("a single decision class is skipped, not failed") {
    const auto constant = complete_table(Alphabet::binary(), 2, DecisionSpec::constant(0));
    const auto report = check_row_count_bound(constant, "constant");
    CHECK(report.skipped);
    CHECK(report.holds);
  }
}

TEST_CASE("log class bound compares k^R against cl exactly") {
  SUBCASE("complete cubes meet it with equality") {
    for (int n = 1; n <= 5; ++n) {
      const auto cube = complete_table(Alphabet::binary(), n, DecisionSpec::distinct());
      const auto report = check_log_class_bound(cube, "cube");
      CHECK(report.holds);
      CHECK(report.lhs == report.rhs);  // 2^n on both sides
    }
  }
  SUBCASE("the shifted-pair polynomial table holds with room") {
    // 5 classes over k = 3, R = 2: 9 >= 5.
    const std::vector<RatPoly> polys{RatPoly::from_ints("x", {0, 1}),
                                     RatPoly::from_ints("y", {-1, 1})};
    const auto table = build_poly_table(polys, DecisionSpec::distinct());
    const auto report = check_log_class_bound(table, "pair");
    CHECK(report.holds);
    CHECK(report.lhs == "9");
    CHECK(report.rhs == "5");
  }
}

TEST_CASE("power class bound for the lines family") {
  const auto cls = ClassDescriptor::lines_class();
  SUBCASE("two crossing lines: (4*2)^2 >= 4") {
    std::vector<LineAttr> lines{LineAttr("v", Rat(1), Rat(0), Rat(0)),
                                LineAttr("h", Rat(0), Rat(1), Rat(0))};
    const auto table = build_line_table(lines, DecisionSpec::distinct());
    const auto report = check_power_class_bound(table, cls, "cross");
    CHECK(report.holds);
  }
  SUBCASE("six general-position lines: 22 classes") {
    const auto table = build_line_table(general_position_lines(6), DecisionSpec::distinct());
    CHECK(table.class_count() == 22);
    const auto report = check_power_class_bound(table, cls, "gp6");
    CHECK(report.holds);
    CHECK(report.rhs == "22");
  }
  SUBCASE("an unbounded class is rejected") {
    const auto cube = complete_table(Alphabet::binary(), 2, DecisionSpec::distinct());
    CHECK_THROWS_AS(check_power_class_bound(cube, ClassDescriptor::cubes_class(), "x"),
                    Error);
  }
}

TEST_CASE("projection bound over random seeds") {
  SeededRng rng(2718);
  int checked = 0;
  for (int i = 0; i < 100; ++i) {
    const int k = 2 + static_cast<int>(rng.below(2));
    const auto table = random_table(Alphabet::numeric(k), 6, 2 + rng.below(30),
                                    DecisionSpec::random_classes(5), rng.next());
    const auto report = check_projection_bound(table, "r");
    if (report.skipped) continue;
    CHECK(report.holds);
    ++checked;
  }
  CHECK(checked > 50);
}

TEST_CASE("log-tightness demo on complete binary tables") {
  for (int n = 2; n <= 8; ++n) {
    const auto report = log_tightness_demo(n);
    CHECK(report.holds);  // 2^R < 2*cl, i.e. R < log2(cl) + 1
  }
  const auto at2 = log_tightness_demo(2);
  CHECK(at2.lhs == "4");  // R = 2
  CHECK(at2.rhs == "8");  // 2 * cl = 8
  CHECK_THROWS_AS(log_tightness_demo(13), Error);
  CHECK_THROWS_AS(log_tightness_demo(0), Error);
}

TEST_CASE("empirical growth tables") {
  SUBCASE("lines reproduce the general-position region counts") {
    const auto entries = empirical_nc(ClassDescriptor::lines_class(), 6, 3, 11);
    const std::vector<std::uint64_t> expected{2, 4, 7, 11, 16, 22};
    REQUIRE(entries.size() == 6);
    for (std::size_t i = 0; i < entries.size(); ++i) {
      CHECK(entries[i].max_rows == expected[i]);
      CHECK(entries[i].exact == expected[i]);
    }
  }
  SUBCASE("cubes double each dimension") {
    const auto entries = empirical_nc(ClassDescriptor::cubes_class(), 5, 0, 0);
    for (const auto& entry : entries) {
      CHECK(entry.max_rows == (std::uint64_t{1} << entry.n));
      CHECK(entry.exact == entry.max_rows);
    }
  }
  SUBCASE("polys reach at least the shifted-linear cell counts") {
    const auto entries = empirical_nc(ClassDescriptor::polys_class(std::nullopt), 3, 2, 5);
    REQUIRE(entries.size() == 3);
    CHECK(entries[1].max_rows >= 5);  // {x, x-1} realizes five cells
    CHECK_FALSE(entries[0].exact.has_value());
  }
  SUBCASE("values are monotone nondecreasing") {
    const auto entries = empirical_nc(ClassDescriptor::polys_class(std::nullopt), 5, 3, 7);
    for (std::size_t i = 1; i < entries.size(); ++i) {
      CHECK(entries[i].max_rows >= entries[i - 1].max_rows);
    }
  }
  SUBCASE("custom families have no generator") {
    CHECK_THROWS_AS(empirical_nc(ClassDescriptor{}, 3, 1, 0), Error);
  }
}

TEST_CASE("smallest consistent exponent") {
  // (k^2 R)^q >= cl: with k = 3, R = 1, cl = 50: 9 < 50 <= 81 -> q = 2.
  std::vector<std::pair<std::uint64_t, std::uint64_t>> data{{1, 50}};
  CHECK(smallest_consistent_q(data, 3) == 2);
  data.push_back({2, 10});  // 18 >= 10 -> q = 1 suffices here
  CHECK(smallest_consistent_q(data, 3) == 2);
  std::vector<std::pair<std::uint64_t, std::uint64_t>> easy{{2, 10}};
  CHECK(smallest_consistent_q(easy, 3) == 1);
}

TEST_CASE("suite config parsing names malformed fields") {
  CHECK_THROWS_WITH_AS(parse_suite_config("[]"), doctest::Contains("(root)"), Error);
  CHECK_THROWS_WITH_AS(parse_suite_config("{\"unknown\": 1}"),
                       doctest::Contains("unknown"), Error);
  CHECK_THROWS_WITH_AS(parse_suite_config("{\"random_tables\": {\"count\": -3}}"),
                       doctest::Contains("random_tables.count"), Error);
  CHECK_THROWS_WITH_AS(parse_suite_config("{\"cubes\": {\"max_n\": 40}}"),
                       doctest::Contains("cubes.max_n"), Error);
  CHECK_THROWS_WITH_AS(
      parse_suite_config("{\"golden_tables\": [{\"path\": \"x\", \"expect\": {}}]}"),
      doctest::Contains("expect.N"), Error);
  const auto empty = parse_suite_config("{}");
  CHECK_FALSE(empty.random_tables.has_value());
  CHECK(run_suite(empty).reports.empty());
}

TEST_CASE("a small suite passes and is deterministic") {
  SuiteConfig config;
  config.random_tables.emplace();
  config.random_tables->count = 40;
  config.random_tables->seed = 9;
  config.lines.emplace();
  config.lines->general_min = 2;
  config.lines->general_max = 4;
  config.lines->random_systems = 5;
  config.cubes.emplace();
  config.cubes->min_n = 2;
  config.cubes->max_n = 5;
  config.shatter.emplace();
  config.shatter->min_p = 1;
  config.shatter->max_p = 3;

  const auto first = run_suite(config);
  CHECK(first.failures() == 0);
  CHECK(first.all_passed());
  const auto second = run_suite(config);
  CHECK(reports_to_json(first.reports) == reports_to_json(second.reports));

  // Reports arrive in canonical order.
  for (std::size_t i = 1; i < first.reports.size(); ++i) {
    const auto& a = first.reports[i - 1];
    const auto& b = first.reports[i];
    CHECK((a.check < b.check || (a.check == b.check && a.instance <= b.instance)));
  }

  const auto summary = first.summary_text();
  CHECK(summary.find("row_count_bound") != std::string::npos);
  CHECK(summary.find("fail=0") != std::string::npos);
}

TEST_CASE("golden tables catch corrupted stats") {
  SuiteConfig config;
  GoldenTable golden;
  golden.path = "does-not-exist.dtab";
  golden.rows = 4;
  golden.classes = 4;
  golden.dim = 2;
  golden.reduct = 2;
  golden.shatter = 2;
  config.golden_tables.push_back(golden);
  const auto result = run_suite(config);
  REQUIRE(result.reports.size() == 1);
  CHECK_FALSE(result.reports[0].holds);
  CHECK(result.failures() == 1);
}
