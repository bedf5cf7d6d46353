#include <doctest.h>

#include <algorithm>
#include <set>

#include "reductlab/lines.hpp"
#include "reductlab/reducts.hpp"
#include "reductlab/rng.hpp"
#include "reductlab/shattering.hpp"

using namespace reductlab;

namespace {

LineAttr line(const char* name, long a, long b, long c) {
  return LineAttr(name, Rat(a), Rat(b), Rat(c));
}

}  // namespace

TEST_CASE("degenerate lines are rejected at construction") {
  CHECK_THROWS_WITH_AS(line("bad", 0, 0, 1), doctest::Contains("degenerate"), Error);
}

TEST_CASE("feasible_sign_system on hand-checked systems") {
  SUBCASE("both sides of a single line are nonempty") {
    std::vector<LineAttr> lines{line("v", 1, 0, 0)};  // x >= 0
    CHECK(feasible_sign_system(lines, Pattern{1}));
    CHECK(feasible_sign_system(lines, Pattern{0}));
  }
  SUBCASE("coincident boundaries with opposite orientations leave a gap") {
    std::vector<LineAttr> lines{line("r", 1, 0, 0), line("l", -1, 0, 0)};
    // pattern (0,0): x < 0 and -x < 0, impossible
    CHECK_FALSE(feasible_sign_system(lines, Pattern{0, 0}));
    // the shared boundary satisfies both nonnegative sides
    CHECK(feasible_sign_system(lines, Pattern{1, 1}));
  }
  SUBCASE("a bounded triangle cell exists") {
    std::vector<LineAttr> lines{line("x", 1, 0, 0), line("y", 0, 1, 0),
                                line("s", 1, 1, -10)};
    CHECK(feasible_sign_system(lines, Pattern{1, 1, 0}));  // the origin
  }
  SUBCASE("length mismatches are rejected") {
    std::vector<LineAttr> lines{line("v", 1, 0, 0)};
    CHECK_THROWS_AS(feasible_sign_system(lines, Pattern{1, 0}), Error);
  }
}

TEST_CASE("enumerate_cells on known arrangements") {
  SUBCASE("two crossing lines make four cells") {
    std::vector<LineAttr> lines{line("v", 1, 0, 0), line("h", 0, 1, 0)};
    const auto cells = enumerate_cells(lines);
    CHECK(cells == std::vector<Pattern>{{0, 0}, {0, 1}, {1, 0}, {1, 1}});
  }
  SUBCASE("n parallel distinct lines make n+1 cells") {
    for (int n = 1; n <= 5; ++n) {
      std::vector<LineAttr> lines;
      for (int i = 0; i < n; ++i) {
        lines.push_back(line(("p" + std::to_string(i)).c_str(), 1, 0, -i));
      }
      CHECK(enumerate_cells(lines).size() == static_cast<std::size_t>(n) + 1);
    }
  }
  SUBCASE("general position realizes 1 + n + C(n,2) cells") {
    for (int n = 1; n <= 6; ++n) {
      const auto lines = general_position_lines(n);
      const auto expected = 1 + n + n * (n - 1) / 2;
      CHECK(enumerate_cells(lines).size() == static_cast<std::size_t>(expected));
    }
  }
  SUBCASE("the cap is enforced") {
    const auto lines = general_position_lines(5);
    CHECK_THROWS_WITH_AS(enumerate_cells(lines, 4), doctest::Contains("cap"), Error);
  }
}

TEST_CASE("sampled value vectors always land in the enumerated cell set") {
  SeededRng rng(2024);
  for (int trial = 0; trial < 10; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const auto lines = random_lines(n, rng);
    const auto cells = enumerate_cells(lines);
    const std::set<Pattern> cell_set(cells.begin(), cells.end());
    for (int i = 0; i < 100; ++i) {
      const Rat x = random_rational(rng, 50, 8);
      const Rat y = random_rational(rng, 50, 8);
      CHECK(cell_set.count(evaluate_lines_at(lines, x, y)) == 1);
    }
  }
}

TEST_CASE("structured witness points never find more cells than the enumerator") {
  // Pairwise intersection points, midpoints between them, and far points in
  // many directions: a lower estimate of the cell count.
  SeededRng rng(77);
  for (int trial = 0; trial < 6; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(3));
    const auto lines = random_lines(n, rng);
    const auto cells = enumerate_cells(lines);
    const std::set<Pattern> cell_set(cells.begin(), cells.end());

    std::vector<std::pair<Rat, Rat>> points;
    points.emplace_back(Rat(0), Rat(0));
    for (std::size_t i = 0; i < lines.size(); ++i) {
      for (std::size_t j = i + 1; j < lines.size(); ++j) {
        const Rat det = lines[i].a() * lines[j].b() - lines[j].a() * lines[i].b();
        if (sign_of(det) == 0) continue;
        const Rat x = (lines[j].c() * lines[i].b() - lines[i].c() * lines[j].b()) / det;
        const Rat y = (lines[i].c() * lines[j].a() - lines[j].c() * lines[i].a()) / det;
        points.emplace_back(x, y);
        points.emplace_back(x + Rat(1, 1000), y + Rat(1, 997));
      }
    }
    for (long d = 0; d < 16; ++d) {
      points.emplace_back(Rat(1000 + 37 * d), Rat(-2000 + 531 * d));
    }
    std::set<Pattern> found;
    for (const auto& [x, y] : points) found.insert(evaluate_lines_at(lines, x, y));
    for (const auto& pattern : found) {
      CHECK(cell_set.count(pattern) == 1);
    }
    CHECK(found.size() <= cell_set.size());
  }
}

TEST_CASE("build_line_table wires cells, names and decisions together") {
  std::vector<LineAttr> lines{line("v", 1, 0, 0), line("h", 0, 1, 0)};
  const auto table = build_line_table(lines, DecisionSpec::distinct());
  CHECK(table.row_count() == 4);
  CHECK(table.class_count() == 4);
  CHECK(table.dim() == 2);
  CHECK(table.attributes() == std::vector<std::string>{"v", "h"});
  CHECK(min_reduct(table).cardinality == 2);
  CHECK(shattering_dimension(table).dimension == 2);

  const auto constant = build_line_table(lines, DecisionSpec::constant(5));
  CHECK(constant.class_count() == 1);
  CHECK(min_reduct(constant).cardinality == 0);

  const auto random_a = build_line_table(lines, DecisionSpec::random_classes(2), 9);
  const auto random_b = build_line_table(lines, DecisionSpec::random_classes(2), 9);
  CHECK(random_a == random_b);
}

TEST_CASE("three general-position lines: seven cells, dimension two") {
  const auto lines = general_position_lines(3);
  const auto table = build_line_table(lines, DecisionSpec::distinct());
  CHECK(table.row_count() == 7);
  CHECK(shattering_dimension(table).dimension == 2);
  CHECK_FALSE(check_independent(table.patterns(), 3));
}

TEST_CASE("every generated line table satisfies the square-root class bound") {
  // (4R)^2 >= cl whenever cl >= 2.
  SeededRng rng(31337);
  for (int trial = 0; trial < 15; ++trial) {
    const int n = 2 + static_cast<int>(rng.below(4));
    const auto lines = random_lines(n, rng);
    const auto table = build_line_table(lines, DecisionSpec::distinct());
    if (table.class_count() < 2) continue;
    const long reduct_size = min_reduct(table).cardinality;
    CHECK(BigInt(4 * reduct_size) * (4 * reduct_size) >= BigInt(table.class_count()));
  }
}

TEST_CASE("coincident opposite lines keep the shared boundary as a cell") {
  std::vector<LineAttr> lines{line("r", 1, 0, 0), line("l", -1, 0, 0)};
  // x<0 gives (0,1), x>0 gives (1,0), the line x=0 itself gives (1,1).
  CHECK(enumerate_cells(lines) == std::vector<Pattern>{{0, 1}, {1, 0}, {1, 1}});
}

TEST_CASE("axis-parallel grids match the analytically known cell set") {
  // For lines x >= a_i and y >= b_j the cells factor into the product of the
  // two one-dimensional threshold patterns, computed here directly.
  SeededRng rng(606);
  for (int trial = 0; trial < 10; ++trial) {
    const int nx = 1 + static_cast<int>(rng.below(3));
    const int ny = 1 + static_cast<int>(rng.below(3));
    std::vector<LineAttr> lines;
    std::vector<long> xs, ys;
    for (int i = 0; i < nx; ++i) {
      long a = rng.in_range(-5, 5);
      while (std::find(xs.begin(), xs.end(), a) != xs.end()) a = rng.in_range(-5, 5);
      xs.push_back(a);
      lines.push_back(line(("x" + std::to_string(i)).c_str(), 1, 0, -a));
    }
    for (int j = 0; j < ny; ++j) {
      long b = rng.in_range(-5, 5);
      while (std::find(ys.begin(), ys.end(), b) != ys.end()) b = rng.in_range(-5, 5);
      ys.push_back(b);
      lines.push_back(line(("y" + std::to_string(j)).c_str(), 0, 1, -b));
    }
    // One-dimensional patterns: one per threshold interval, value 1 exactly
    // for thresholds at or below the probe.
    auto axis_patterns = [](const std::vector<long>& thresholds) {
      std::vector<long> sorted = thresholds;
      std::sort(sorted.begin(), sorted.end());
      std::vector<Pattern> out;
      for (std::size_t level = 0; level <= sorted.size(); ++level) {
        Pattern p(thresholds.size());
        for (std::size_t i = 0; i < thresholds.size(); ++i) {
          const auto rank = static_cast<std::size_t>(
              std::lower_bound(sorted.begin(), sorted.end(), thresholds[i]) -
              sorted.begin());
          p[i] = rank < level ? 1 : 0;
        }
        out.push_back(std::move(p));
      }
      return out;
    };
    std::set<Pattern> expected;
    for (const auto& px : axis_patterns(xs)) {
      for (const auto& py : axis_patterns(ys)) {
        Pattern combined = px;
        combined.insert(combined.end(), py.begin(), py.end());
        expected.insert(std::move(combined));
      }
    }
    const auto cells = enumerate_cells(lines);
    CHECK(cells.size() == expected.size());
    CHECK(std::set<Pattern>(cells.begin(), cells.end()) == expected);
  }
}

TEST_CASE("parse_lines reads names and rational coefficients") {
  const auto lines = parse_lines("# comment\nv 1 0 0\nd 1/2 -2/3 5\n");
  REQUIRE(lines.size() == 2);
  CHECK(lines[1].a() == Rat(1, 2));
  CHECK(lines[1].b() == Rat(-2, 3));
  CHECK(lines[1].c() == Rat(5));

  CHECK_THROWS_AS(parse_lines("v 1 0\n"), ParseError);
  CHECK_THROWS_WITH_AS(parse_lines("v 1 0 0\nv 0 1 0\n"), doctest::Contains("duplicate"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_lines("z 0 0 3\n"), doctest::Contains("degenerate"),
                       ParseError);
  CHECK_THROWS_WITH_AS(parse_lines("v 1/0 0 1\n"), doctest::Contains("denominator"),
                       ParseError);
}
