#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <vector>

#include "reductlab/table.hpp"

namespace reductlab {

/// An ordered pair of two distinct attribute values.
struct ValuePair {
  std::int32_t lo = 0;
  std::int32_t hi = 0;  // lo < hi

  bool operator==(const ValuePair&) const = default;
};

/// One value pair per selected column, certifying that the full product of
/// the pairs is contained in a pattern set.
struct Witness {
  std::vector<ValuePair> pairs;

  bool operator==(const Witness&) const = default;
};

/// Searches for two-element value subsets B_1, ..., B_n with
/// B_1 x ... x B_n contained in `patterns`. All tuples must have equal
/// length; candidate pair values are restricted to values occurring in the
/// respective column. Returns the lexicographically first witness or
/// nullopt. Throws Error on ragged tuple lengths.
std::optional<Witness> quasicomplete_witness(std::span<const Pattern> patterns);

struct ShatterResult {
  int dimension = 0;       // I(T)
  AttributeSet columns;    // witness columns, |columns| == dimension
  Witness witness;
};

/// The largest m together with a column set S of size m such that the
/// deduplicated projection of the row tuples onto S admits a
/// quasicompleteness witness. Decisions are ignored: the closure of a table
/// relabels them freely. Levelwise search descending from the number of
/// columns that take at least two values; that count must not exceed
/// `column_cap` (the search is exponential in it).
ShatterResult shattering_dimension(const DecisionTable& table, int column_cap = 24);

/// Independent oracle: exhaustive scan of every column subset and every
/// per-column value-pair assignment, with direct membership tests. Refuses
/// tables wider than `dim_cap` columns.
int brute_force_shatter_dimension(const DecisionTable& table, int dim_cap = 10);

/// An attribute set is independent exactly when its realized value vectors
/// form a quasicomplete pattern set. `arity` is the expected tuple length.
bool check_independent(std::span<const Pattern> patterns, std::size_t arity);

}  // namespace reductlab
