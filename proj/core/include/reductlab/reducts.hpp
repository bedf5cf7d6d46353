#pragma once

#include <cstddef>
#include <vector>

#include "reductlab/table.hpp"

namespace reductlab {

/// A pair of rows with different decisions, together with the exact set of
/// columns where their tuples differ. A column set is a test exactly when it
/// intersects every such differing set.
struct DiscernibilityPair {
  int row_i = 0;
  int row_j = 0;  // row_i < row_j
  AttributeSet differing;
};

std::vector<DiscernibilityPair> discernibility_pairs(const DecisionTable& table);

/// True iff any two rows with different decisions differ on some column of
/// `selection`; equivalently, every group of rows sharing the projection onto
/// `selection` carries a uniform decision.
bool is_test(const DecisionTable& table, const AttributeSet& selection);

struct ReductResult {
  AttributeSet reduct;
  int cardinality = 0;
};

/// Exact minimum-cardinality test (automatically a reduct). Returns the
/// lexicographically smallest index set among the minimum tests; the empty
/// set when the table has fewer than two decision classes. Branch and bound
/// over the discernibility pairs; tables up to 64 columns.
ReductResult min_reduct(const DecisionTable& table);

struct ReductEnumeration {
  std::vector<AttributeSet> reducts;  // ordered by (cardinality, lex)
  bool truncated = false;
};

/// All reducts (minimal tests), up to `cap` of them. `truncated` is set when
/// either the output cap or the internal search budget was reached; when it
/// is false the enumeration is complete.
ReductEnumeration enumerate_reducts(const DecisionTable& table, std::size_t cap = 10'000);

/// Independent oracle: minimum |S| with is_test(T, S) by exhaustive subset
/// scan in cardinality order, using a direct pairwise row check. Refuses
/// tables wider than `dim_cap` columns.
int brute_force_reduct_size(const DecisionTable& table, int dim_cap = 20);

}  // namespace reductlab
