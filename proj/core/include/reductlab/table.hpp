#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reductlab/errors.hpp"

namespace reductlab {

using Decision = std::uint64_t;

/// A value tuple, either alphabet indices of a table row or raw attribute
/// values such as signs. Ordered lexicographically by operator<.
using Pattern = std::vector<std::int32_t>;

/// Ordered sequence of distinct value tokens. The declaration order is
/// canonical: it drives row sorting and serialization.
class Alphabet {
public:
  explicit Alphabet(std::vector<std::string> symbols);

  static Alphabet binary();            // {"0", "1"}
  static Alphabet signs();             // {"-1", "0", "+1"}
  static Alphabet numeric(int k);      // {"0", ..., "k-1"}

  int k() const { return static_cast<int>(symbols_.size()); }
  const std::string& symbol(int index) const { return symbols_.at(static_cast<std::size_t>(index)); }
  std::optional<int> index_of(std::string_view token) const;
  const std::vector<std::string>& symbols() const { return symbols_; }

  bool operator==(const Alphabet& other) const { return symbols_ == other.symbols_; }

private:
  std::vector<std::string> symbols_;
};

/// A set of column indices into a specific table's attribute sequence.
/// Stored sorted; comparison is lexicographic on the index sequence.
class AttributeSet {
public:
  AttributeSet() = default;
  explicit AttributeSet(std::vector<int> indices);

  static AttributeSet full(int dim);

  int size() const { return static_cast<int>(indices_.size()); }
  bool empty() const { return indices_.empty(); }
  bool contains(int index) const;
  const std::vector<int>& indices() const { return indices_; }

  auto begin() const { return indices_.begin(); }
  auto end() const { return indices_.end(); }

  /// Throws Error when any index falls outside [0, dim).
  void validate_for_dim(int dim) const;

  AttributeSet without(int index) const;

  bool operator==(const AttributeSet& other) const = default;
  bool operator<(const AttributeSet& other) const { return indices_ < other.indices_; }

  std::string to_string() const;

private:
  std::vector<int> indices_;
};

struct TableRow {
  Pattern values;  // alphabet indices, length dim
  Decision decision = 0;
};

struct TableStats {
  int rows = 0;     // N
  int classes = 0;  // cl
  int dim = 0;
};

/// How a merged row group picks its surviving decision under projection.
/// Any deterministic choice yields a member of the closure of the input,
/// which relabels decisions freely.
enum class MergePolicy {
  keep_first,    // decision of the earliest original row in the group
  min_decision,  // smallest decision value in the group
};

/// Decision assignment for generated tables.
struct DecisionSpec {
  enum class Kind { distinct, constant, random_classes, explicit_list };

  Kind kind = Kind::distinct;
  Decision constant_value = 0;
  std::uint64_t num_classes = 2;     // random_classes
  std::vector<Decision> values;      // explicit_list, one per row

  static DecisionSpec distinct();
  static DecisionSpec constant(Decision value);
  static DecisionSpec random_classes(std::uint64_t classes);
  static DecisionSpec explicit_list(std::vector<Decision> values);

  /// Parses "distinct", "constant:<d>" or "random:<c>".
  static DecisionSpec parse(std::string_view token);
};

/// A rectangular table over a finite alphabet: pairwise-distinct value
/// tuples, each labeled with a nonnegative integer decision. Immutable
/// after construction; all operations below are pure.
class DecisionTable {
public:
  DecisionTable(Alphabet alphabet, std::vector<std::string> attributes,
                std::vector<TableRow> rows);

  const Alphabet& alphabet() const { return alphabet_; }
  const std::vector<std::string>& attributes() const { return attributes_; }
  const std::vector<TableRow>& rows() const { return rows_; }

  int dim() const { return static_cast<int>(attributes_.size()); }
  int row_count() const { return static_cast<int>(rows_.size()); }
  int class_count() const;

  /// Row value tuples, in row order.
  std::vector<Pattern> patterns() const;

  /// Equality is row-order-insensitive; serialization canonicalizes order.
  bool operator==(const DecisionTable& other) const;

private:
  Alphabet alphabet_;
  std::vector<std::string> attributes_;
  std::vector<TableRow> rows_;
};

TableStats stats(const DecisionTable& table);

/// Restricts columns to `selection` (original order), merges equal projected
/// rows and keeps one decision per group according to `policy`.
DecisionTable project(const DecisionTable& table, const AttributeSet& selection,
                      MergePolicy policy = MergePolicy::keep_first);

/// Same rows, new decisions; one decision per row, in row order.
DecisionTable relabel_decisions(const DecisionTable& table,
                                std::span<const Decision> decisions);

/// True iff `candidate` can be obtained from `outer` by deleting columns,
/// merging equal rows and relabeling decisions. Attribute identity is by
/// name; candidate attribute order must follow outer's order. Decisions are
/// ignored. Throws Error on an alphabet mismatch.
bool closure_contains(const DecisionTable& outer, const DecisionTable& candidate);

/// Deterministic random table: `target_rows` pairwise-distinct tuples.
DecisionTable random_table(const Alphabet& alphabet, int dim,
                           std::uint64_t target_rows, const DecisionSpec& decisions,
                           std::uint64_t seed);

/// The complete table holding all k^dim tuples, in lexicographic order.
DecisionTable complete_table(const Alphabet& alphabet, int dim,
                             const DecisionSpec& decisions, std::uint64_t seed = 0,
                             std::uint64_t max_cells = 1u << 20);

// ---- text and JSON serialization -------------------------------------------
//
// .dtab, line oriented:
//   alphabet: 0 1
//   attributes: f g
//   0 0 -> 0
//   1 1 -> 1
// Blank lines and '#' comments are ignored. Rows are emitted sorted
// lexicographically by tuple under alphabet order.

DecisionTable parse_table(std::string_view text);
std::string serialize_table(const DecisionTable& table);

std::string table_to_json(const DecisionTable& table);
DecisionTable table_from_json(std::string_view json_text);

}  // namespace reductlab
