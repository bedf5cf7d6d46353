#include <doctest.h>

#include <algorithm>
#include <set>

#include "reductlab/rng.hpp"
#include "reductlab/shattering.hpp"
#include "reductlab/table.hpp"

using namespace reductlab;

namespace {

/// Independent VC-dimension oracle for binary pattern sets: a column set is
/// shattered iff its projection realizes all 2^|S| patterns. Over {0,1} this
/// coincides with the quasicompleteness dimension.
int vc_dimension_binary(const std::vector<Pattern>& rows, int dim) {
  int best = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << dim); ++subset) {
    std::vector<int> columns;
    for (int c = 0; c < dim; ++c) {
      if (subset & (std::uint64_t{1} << c)) columns.push_back(c);
    }
    std::set<Pattern> projected;
    for (const auto& row : rows) {
      Pattern p;
      for (int c : columns) p.push_back(row[static_cast<std::size_t>(c)]);
      projected.insert(std::move(p));
    }
    if (projected.size() == (std::size_t{1} << columns.size())) {
      best = std::max(best, static_cast<int>(columns.size()));
    }
  }
  return best;
}

}  // namespace

TEST_CASE("quasicomplete_witness on small pattern sets") {
  SUBCASE("the full boolean square is its own witness") {
    std::vector<Pattern> patterns{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
    const auto witness = quasicomplete_witness(patterns);
    REQUIRE(witness.has_value());
    REQUIRE(witness->pairs.size() == 2);
    CHECK(witness->pairs[0] == ValuePair{0, 1});
    CHECK(witness->pairs[1] == ValuePair{0, 1});
  }
  SUBCASE("a missing corner kills the witness") {
    std::vector<Pattern> patterns{{0, 0}, {0, 1}, {1, 0}};
    CHECK_FALSE(quasicomplete_witness(patterns).has_value());
  }
  SUBCASE("signs with a center point still shatter on {-1,+1}") {
    std::vector<Pattern> patterns{{-1, -1}, {-1, 1}, {1, -1}, {1, 1}, {0, 0}};
    const auto witness = quasicomplete_witness(patterns);
    REQUIRE(witness.has_value());
    CHECK(witness->pairs[0] == ValuePair{-1, 1});
    CHECK(witness->pairs[1] == ValuePair{-1, 1});
  }
  SUBCASE("ragged tuples are rejected") {
    std::vector<Pattern> patterns{{0, 0}, {0}};
    CHECK_THROWS_AS(quasicomplete_witness(patterns), Error);
  }
}

TEST_CASE("shattering_dimension on known tables") {
  SUBCASE("complete binary tables shatter completely") {
    for (int n = 1; n <= 6; ++n) {
      const auto cube = complete_table(Alphabet::binary(), n, DecisionSpec::distinct());
      const auto result = shattering_dimension(cube);
      CHECK(result.dimension == n);
      CHECK(result.columns == AttributeSet::full(n));
    }
  }
  SUBCASE("a single row shatters nothing") {
    DecisionTable table(Alphabet::binary(), {"f", "g"}, {{{0, 1}, 0}});
    const auto result = shattering_dimension(table);
    CHECK(result.dimension == 0);
    CHECK(result.columns.empty());
    CHECK(result.witness.pairs.empty());
  }
  SUBCASE("two distinct rows shatter exactly one column") {
    DecisionTable table(Alphabet::binary(), {"f", "g"}, {{{0, 0}, 0}, {{1, 1}, 1}});
    CHECK(shattering_dimension(table).dimension == 1);
    CHECK(brute_force_shatter_dimension(table) == 1);
  }
  SUBCASE("decisions are irrelevant") {
    const auto cube = complete_table(Alphabet::binary(), 4, DecisionSpec::distinct());
    const auto constant = complete_table(Alphabet::binary(), 4, DecisionSpec::constant(3));
    CHECK(shattering_dimension(cube).dimension == shattering_dimension(constant).dimension);
  }
}

TEST_CASE("shattering_dimension equals the exhaustive oracle on random tables") {
  SeededRng rng(1234);
  for (int i = 0; i < 60; ++i) {
    const int k = 2 + static_cast<int>(rng.below(2));
    const int dim = 1 + static_cast<int>(rng.below(8));
    const auto cap = alphabet_power(k, dim);
    const std::uint64_t rows =
        1 + rng.below(std::min<std::uint64_t>(cap.get_ui(), 30));
    const auto table = random_table(Alphabet::numeric(k), dim, rows,
                                    DecisionSpec::random_classes(4), rng.next());
    CHECK(shattering_dimension(table).dimension == brute_force_shatter_dimension(table));
  }
}

TEST_CASE("for binary alphabets the dimension is the VC dimension") {
  SeededRng rng(4321);
  for (int i = 0; i < 40; ++i) {
    const int dim = 1 + static_cast<int>(rng.below(8));
    const auto cap = alphabet_power(2, dim);
    const std::uint64_t rows =
        1 + rng.below(std::min<std::uint64_t>(cap.get_ui(), 30));
    const auto table = random_table(Alphabet::binary(), dim, rows,
                                    DecisionSpec::distinct(), rng.next());
    CHECK(shattering_dimension(table).dimension ==
          vc_dimension_binary(table.patterns(), dim));
  }
}

TEST_CASE("witness sets are downward closed") {
  SeededRng rng(55);
  for (int i = 0; i < 30; ++i) {
    const auto table = random_table(Alphabet::numeric(3), 6, 2 + rng.below(28),
                                    DecisionSpec::distinct(), rng.next());
    const auto result = shattering_dimension(table);
    if (result.dimension < 1) continue;
    // Drop a random witness column; the remainder must still admit a witness.
    const auto& indices = result.columns.indices();
    std::vector<int> subset;
    const std::size_t drop = rng.below(indices.size());
    for (std::size_t j = 0; j < indices.size(); ++j) {
      if (j != drop) subset.push_back(indices[j]);
    }
    std::set<Pattern> projected;
    for (const auto& row : table.rows()) {
      Pattern p;
      for (int c : subset) p.push_back(row.values[static_cast<std::size_t>(c)]);
      projected.insert(std::move(p));
    }
    std::vector<Pattern> patterns(projected.begin(), projected.end());
    if (!subset.empty()) {
      CHECK(quasicomplete_witness(patterns).has_value());
    }
  }
}

TEST_CASE("dimension bounds: 0 <= I <= dim, equality iff the full tuple set shatters") {
  SeededRng rng(808);
  for (int i = 0; i < 30; ++i) {
    const int dim = 1 + static_cast<int>(rng.below(5));
    const auto cap = alphabet_power(2, dim);
    const std::uint64_t rows =
        1 + rng.below(std::min<std::uint64_t>(cap.get_ui(), 20));
    const auto table = random_table(Alphabet::binary(), dim, rows,
                                    DecisionSpec::distinct(), rng.next());
    const auto result = shattering_dimension(table);
    CHECK(result.dimension >= 0);
    CHECK(result.dimension <= table.dim());
    const auto patterns = table.patterns();
    const bool full = quasicomplete_witness(patterns).has_value();
    CHECK((result.dimension == table.dim()) == full);
  }
}

TEST_CASE("check_independent ties witnesses to independence") {
  std::vector<Pattern> crossing{{0, 0}, {0, 1}, {1, 0}, {1, 1}};
  CHECK(check_independent(crossing, 2));
  std::vector<Pattern> three_lines{{0, 0, 0}, {1, 0, 0}, {1, 1, 0}, {1, 1, 1},
                                   {0, 1, 0}, {0, 1, 1}, {0, 0, 1}};
  CHECK_FALSE(check_independent(three_lines, 3));  // 7 patterns can never cover 2^3
  CHECK_THROWS_AS(check_independent(crossing, 3), Error);
}

TEST_CASE("the active-column cap guards the exponential search") {
  const auto wide = random_table(Alphabet::binary(), 30, 12, DecisionSpec::distinct(), 9);
  CHECK_THROWS_WITH_AS(shattering_dimension(wide, 8), doctest::Contains("cap"), Error);
  CHECK_NOTHROW(shattering_dimension(wide, 30));
}
