#include "reductlab/shattering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <unordered_set>

namespace reductlab {

namespace {

/// Sorted distinct values per column.
std::vector<std::vector<std::int32_t>> column_values(std::span<const Pattern> patterns,
                                                     std::size_t width) {
  std::vector<std::set<std::int32_t>> seen(width);
  for (const auto& p : patterns) {
    for (std::size_t c = 0; c < width; ++c) seen[c].insert(p[c]);
  }
  std::vector<std::vector<std::int32_t>> out(width);
  for (std::size_t c = 0; c < width; ++c) out[c].assign(seen[c].begin(), seen[c].end());
  return out;
}

/// Candidate pairs for one column, in lexicographic order.
std::vector<ValuePair> candidate_pairs(const std::vector<std::int32_t>& values) {
  std::vector<ValuePair> pairs;
  for (std::size_t i = 0; i < values.size(); ++i) {
    for (std::size_t j = i + 1; j < values.size(); ++j) {
      pairs.push_back(ValuePair{values[i], values[j]});
    }
  }
  return pairs;
}

/// Backtracking over per-column pairs. Each survivor carries the pattern
/// index and the packed choice bits of the pairs fixed so far; at depth d
/// the survivors must realize all 2^(d+1) prefix combinations, which is
/// exactly the full-product condition at the last level.
struct WitnessSearch {
  struct Entry {
    std::uint32_t index;
    std::uint64_t bits;
  };

  std::span<const Pattern> patterns;
  std::vector<std::vector<ValuePair>> candidates;
  std::vector<ValuePair> chosen;

  std::optional<Witness> run() {
    std::vector<Entry> all(patterns.size());
    for (std::size_t i = 0; i < all.size(); ++i) {
      all[i] = Entry{static_cast<std::uint32_t>(i), 0};
    }
    if (extend(0, all)) return Witness{chosen};
    return std::nullopt;
  }

  bool extend(std::size_t depth, const std::vector<Entry>& survivors) {
    if (depth == candidates.size()) return true;
    for (const auto& pair : candidates[depth]) {
      std::vector<Entry> next;
      next.reserve(survivors.size());
      std::unordered_set<std::uint64_t> prefixes;
      for (const auto& entry : survivors) {
        const auto v = patterns[entry.index][depth];
        if (v != pair.lo && v != pair.hi) continue;
        const std::uint64_t bits =
            entry.bits | (v == pair.hi ? (std::uint64_t{1} << depth) : 0);
        next.push_back(Entry{entry.index, bits});
        prefixes.insert(bits);
      }
      if (prefixes.size() != (std::size_t{1} << (depth + 1))) continue;
      chosen.push_back(pair);
      if (extend(depth + 1, next)) return true;
      chosen.pop_back();
    }
    return false;
  }
};

}  // namespace

std::optional<Witness> quasicomplete_witness(std::span<const Pattern> patterns) {
  if (patterns.empty()) return std::nullopt;
  const std::size_t width = patterns.front().size();
  for (const auto& p : patterns) {
    if (p.size() != width) throw Error("ragged tuple lengths");
  }
  if (width == 0) return Witness{};
  // A witness needs 2^width distinct tuples in the set.
  if (width >= 63 || patterns.size() < (std::size_t{1} << width)) return std::nullopt;

  WitnessSearch search;
  search.patterns = patterns;
  const auto values = column_values(patterns, width);
  search.candidates.reserve(width);
  for (const auto& column : values) {
    auto pairs = candidate_pairs(column);
    if (pairs.empty()) return std::nullopt;  // a single-valued column admits no pair
    search.candidates.push_back(std::move(pairs));
  }
  return search.run();
}

namespace {

std::vector<Pattern> dedup_projection(const std::vector<Pattern>& tuples,
                                      const std::vector<int>& columns,
                                      std::int32_t max_value) {
  std::vector<Pattern> out;
  // Fast path: pack the projected tuple into 64 bits and dedupe by hash.
  if (max_value < 16 && columns.size() <= 16) {
    std::unordered_set<std::uint64_t> seen;
    seen.reserve(tuples.size() * 2);
    for (const auto& t : tuples) {
      std::uint64_t key = 0;
      for (int c : columns) {
        key = (key << 4) | static_cast<std::uint64_t>(t[static_cast<std::size_t>(c)]);
      }
      if (!seen.insert(key).second) continue;
      Pattern p;
      p.reserve(columns.size());
      for (int c : columns) p.push_back(t[static_cast<std::size_t>(c)]);
      out.push_back(std::move(p));
    }
    return out;
  }
  std::set<Pattern> dedup;
  for (const auto& t : tuples) {
    Pattern p;
    p.reserve(columns.size());
    for (int c : columns) p.push_back(t[static_cast<std::size_t>(c)]);
    dedup.insert(std::move(p));
  }
  return {dedup.begin(), dedup.end()};
}

bool next_combination(std::vector<int>& combo, std::span<const int> pool) {
  const int k = static_cast<int>(combo.size());
  const int n = static_cast<int>(pool.size());
  // combo holds indices into pool
  for (int i = k - 1; i >= 0; --i) {
    if (combo[static_cast<std::size_t>(i)] < n - (k - i)) {
      ++combo[static_cast<std::size_t>(i)];
      for (int j = i + 1; j < k; ++j) {
        combo[static_cast<std::size_t>(j)] = combo[static_cast<std::size_t>(j - 1)] + 1;
      }
      return true;
    }
  }
  return false;
}

}  // namespace

ShatterResult shattering_dimension(const DecisionTable& table, int column_cap) {
  const auto tuples = table.patterns();

  // Only columns with at least two realized values can join a witness set.
  std::vector<int> active;
  {
    const auto values = column_values(std::span<const Pattern>(tuples),
                                      static_cast<std::size_t>(table.dim()));
    for (int c = 0; c < table.dim(); ++c) {
      if (values[static_cast<std::size_t>(c)].size() >= 2) active.push_back(c);
    }
  }
  if (static_cast<int>(active.size()) > column_cap) {
    throw Error("shattering search over " + std::to_string(active.size()) +
                " active columns exceeds the cap " + std::to_string(column_cap));
  }
  if (active.empty()) return ShatterResult{0, AttributeSet{}, Witness{}};

  // Descending levelwise: witness-admitting sets are downward closed, so the
  // first level holding a witness is the dimension, and once a level is
  // exhausted no larger set can succeed either. A witness over m columns
  // needs 2^m distinct projected tuples, so levels with 2^m beyond the row
  // count are skipped outright and the same bound prunes individual sets.
  int top = static_cast<int>(active.size());
  while (top > 1 && (top >= 64 || (std::size_t{1} << top) > tuples.size())) --top;
  for (int m = top; m >= 1; --m) {
    std::vector<int> combo(static_cast<std::size_t>(m));
    for (int i = 0; i < m; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      std::vector<int> columns;
      columns.reserve(combo.size());
      for (int i : combo) columns.push_back(active[static_cast<std::size_t>(i)]);

      const auto projected =
          dedup_projection(tuples, columns, static_cast<std::int32_t>(table.alphabet().k()));
      if (m < 64 && projected.size() < (std::size_t{1} << m)) continue;
      if (auto witness = quasicomplete_witness(projected)) {
        return ShatterResult{m, AttributeSet(std::move(columns)), std::move(*witness)};
      }
    } while (next_combination(combo, active));
  }
  return ShatterResult{0, AttributeSet{}, Witness{}};
}

namespace {

/// Membership by linear scan over the projected columns; no hashing, no
/// sharing with the witness search above.
bool tuple_realized(const std::vector<Pattern>& tuples, const std::vector<int>& columns,
                    const std::vector<std::int32_t>& wanted) {
  for (const auto& t : tuples) {
    bool match = true;
    for (std::size_t i = 0; i < columns.size(); ++i) {
      if (t[static_cast<std::size_t>(columns[i])] != wanted[i]) {
        match = false;
        break;
      }
    }
    if (match) return true;
  }
  return false;
}

bool subset_admits_witness(const std::vector<Pattern>& tuples,
                           const std::vector<int>& columns,
                           const std::vector<std::vector<std::int32_t>>& values) {
  // Odometer over per-column value pairs.
  const std::size_t m = columns.size();
  std::vector<std::pair<std::size_t, std::size_t>> pair_idx(m, {0, 1});
  auto pairs_exhausted = [&](std::size_t c) {
    return values[static_cast<std::size_t>(columns[c])].size() < 2;
  };
  for (std::size_t c = 0; c < m; ++c) {
    if (pairs_exhausted(c)) return false;
  }
  while (true) {
    // Check all 2^m product tuples under the current assignment.
    bool all_present = true;
    for (std::uint64_t combo = 0; combo < (std::uint64_t{1} << m) && all_present; ++combo) {
      std::vector<std::int32_t> wanted(m);
      for (std::size_t c = 0; c < m; ++c) {
        const auto& column_vals = values[static_cast<std::size_t>(columns[c])];
        const auto [lo, hi] = pair_idx[c];
        wanted[c] = column_vals[(combo >> c) & 1 ? hi : lo];
      }
      if (!tuple_realized(tuples, columns, wanted)) all_present = false;
    }
    if (all_present) return true;

    // Advance the pair odometer.
    std::size_t c = 0;
    for (; c < m; ++c) {
      auto& [lo, hi] = pair_idx[c];
      const auto limit = values[static_cast<std::size_t>(columns[c])].size();
      if (hi + 1 < limit) {
        ++hi;
        break;
      }
      if (lo + 2 < limit) {
        ++lo;
        hi = lo + 1;
        break;
      }
      lo = 0;
      hi = 1;
    }
    if (c == m) return false;
  }
}

}  // namespace

int brute_force_shatter_dimension(const DecisionTable& table, int dim_cap) {
  if (table.dim() > dim_cap) {
    throw Error("table dimension " + std::to_string(table.dim()) +
                " above the brute-force cap " + std::to_string(dim_cap));
  }
  const auto tuples = table.patterns();
  const auto values = column_values(std::span<const Pattern>(tuples),
                                    static_cast<std::size_t>(table.dim()));
  const int n = table.dim();
  int best = 0;
  for (std::uint64_t subset = 1; subset < (std::uint64_t{1} << n); ++subset) {
    std::vector<int> columns;
    for (int c = 0; c < n; ++c) {
      if (subset & (std::uint64_t{1} << c)) columns.push_back(c);
    }
    if (static_cast<int>(columns.size()) <= best) continue;
    if (subset_admits_witness(tuples, columns, values)) {
      best = static_cast<int>(columns.size());
    }
  }
  return best;
}

bool check_independent(std::span<const Pattern> patterns, std::size_t arity) {
  for (const auto& p : patterns) {
    if (p.size() != arity) throw Error("ragged tuple lengths");
  }
  if (arity == 0) return !patterns.empty();
  return quasicomplete_witness(patterns).has_value();
}

}  // namespace reductlab
