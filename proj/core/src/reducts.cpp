#include "reductlab/reducts.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <set>
#include <unordered_set>

namespace reductlab {

namespace {

using Mask = std::uint64_t;

constexpr int kMaskWidth = 64;

void require_mask_width(int dim) {
  if (dim > kMaskWidth) {
    throw Error("tables wider than 64 columns are not supported by the reduct search");
  }
}

Mask bit_of(int column) { return Mask{1} << column; }

Mask diff_mask(const Pattern& a, const Pattern& b) {
  Mask mask = 0;
  for (std::size_t c = 0; c < a.size(); ++c) {
    if (a[c] != b[c]) mask |= bit_of(static_cast<int>(c));
  }
  return mask;
}

/// Distinct differing-column masks over all pairs with unequal decisions.
std::vector<Mask> distinct_pair_masks(const DecisionTable& table) {
  std::unordered_set<Mask> seen;
  const auto& rows = table.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].decision == rows[j].decision) continue;
      seen.insert(diff_mask(rows[i].values, rows[j].values));
    }
  }
  return {seen.begin(), seen.end()};
}

/// Keeps only set-minimal masks, sorted by popcount then value. Hitting the
/// minimal masks hits every mask.
std::vector<Mask> minimal_masks(std::vector<Mask> masks) {
  std::sort(masks.begin(), masks.end(), [](Mask a, Mask b) {
    const int pa = std::popcount(a);
    const int pb = std::popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  std::vector<Mask> kept;
  for (Mask m : masks) {
    bool dominated = false;
    for (Mask k : kept) {
      if ((k & m) == k) {
        dominated = true;
        break;
      }
    }
    if (!dominated) kept.push_back(m);
  }
  return kept;
}

std::vector<Mask> remove_hit(const std::vector<Mask>& masks, int column) {
  std::vector<Mask> out;
  out.reserve(masks.size());
  for (Mask m : masks) {
    if (!(m & bit_of(column))) out.push_back(m);
  }
  return out;
}

/// Number of pairwise-disjoint masks found greedily; any cover needs at
/// least one distinct column per disjoint mask.
int disjoint_lower_bound(const std::vector<Mask>& masks) {
  Mask used = 0;
  int count = 0;
  for (Mask m : masks) {
    if (!(m & used)) {
      used |= m;
      ++count;
    }
  }
  return count;
}

int greedy_cover_size(std::vector<Mask> uncovered, int dim) {
  int count = 0;
  while (!uncovered.empty()) {
    int best_column = 0;
    std::size_t best_hits = 0;
    for (int c = 0; c < dim; ++c) {
      std::size_t hits = 0;
      for (Mask m : uncovered) {
        if (m & bit_of(c)) ++hits;
      }
      if (hits > best_hits) {
        best_hits = hits;
        best_column = c;
      }
    }
    uncovered = remove_hit(uncovered, best_column);
    ++count;
  }
  return count;
}

std::size_t min_popcount_index(const std::vector<Mask>& masks) {
  std::size_t best = 0;
  int best_pc = std::popcount(masks[0]);
  for (std::size_t i = 1; i < masks.size(); ++i) {
    const int pc = std::popcount(masks[i]);
    if (pc < best_pc) {
      best_pc = pc;
      best = i;
    }
  }
  return best;
}

void dfs_min_cover(const std::vector<Mask>& uncovered, int chosen, int& best) {
  if (uncovered.empty()) {
    best = std::min(best, chosen);
    return;
  }
  if (chosen + disjoint_lower_bound(uncovered) >= best) return;
  const Mask branch = uncovered[min_popcount_index(uncovered)];
  for (int c = 0; c < kMaskWidth; ++c) {
    if (!(branch & bit_of(c))) continue;
    dfs_min_cover(remove_hit(uncovered, c), chosen + 1, best);
  }
}

/// Can `uncovered` be covered with at most `budget` columns from `allowed`?
bool feasible_cover(const std::vector<Mask>& uncovered, int budget, Mask allowed) {
  if (uncovered.empty()) return true;
  if (budget <= 0) return false;
  if (disjoint_lower_bound(uncovered) > budget) return false;
  // Branch on the mask with the fewest allowed columns.
  Mask branch = 0;
  int branch_options = kMaskWidth + 1;
  for (Mask m : uncovered) {
    const int options = std::popcount(m & allowed);
    if (options == 0) return false;
    if (options < branch_options) {
      branch_options = options;
      branch = m;
    }
  }
  for (int c = 0; c < kMaskWidth; ++c) {
    if (!(branch & allowed & bit_of(c))) continue;
    if (feasible_cover(remove_hit(uncovered, c), budget - 1, allowed)) return true;
  }
  return false;
}

Mask columns_above(int column, int dim) {
  const Mask dim_mask = dim == kMaskWidth ? ~Mask{0} : (bit_of(dim) - 1);
  if (column + 1 >= kMaskWidth) return 0;
  return ~((bit_of(column + 1)) - 1) & dim_mask;
}

/// Lexicographically smallest cover of the optimal size: fix columns left to
/// right, keeping each candidate only if a completion of the right size
/// exists among the strictly larger columns.
std::vector<int> lexmin_cover(const std::vector<Mask>& masks, int dim, int optimum) {
  std::vector<int> chosen;
  std::vector<Mask> uncovered = masks;
  int last = -1;
  for (int step = 0; step < optimum; ++step) {
    bool advanced = false;
    for (int c = last + 1; c < dim; ++c) {
      auto next = remove_hit(uncovered, c);
      if (feasible_cover(next, optimum - step - 1, columns_above(c, dim))) {
        chosen.push_back(c);
        uncovered = std::move(next);
        last = c;
        advanced = true;
        break;
      }
    }
    if (!advanced) {
      throw Error("internal error: minimum test reconstruction failed");
    }
  }
  return chosen;
}

}  // namespace

std::vector<DiscernibilityPair> discernibility_pairs(const DecisionTable& table) {
  std::vector<DiscernibilityPair> pairs;
  const auto& rows = table.rows();
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].decision == rows[j].decision) continue;
      std::vector<int> differing;
      for (std::size_t c = 0; c < rows[i].values.size(); ++c) {
        if (rows[i].values[c] != rows[j].values[c]) differing.push_back(static_cast<int>(c));
      }
      pairs.push_back(DiscernibilityPair{static_cast<int>(i), static_cast<int>(j),
                                         AttributeSet(std::move(differing))});
    }
  }
  return pairs;
}

bool is_test(const DecisionTable& table, const AttributeSet& selection) {
  selection.validate_for_dim(table.dim());
  std::map<Pattern, Decision> groups;
  for (const auto& row : table.rows()) {
    Pattern projected;
    projected.reserve(selection.indices().size());
    for (int c : selection) projected.push_back(row.values[static_cast<std::size_t>(c)]);
    auto [it, inserted] = groups.try_emplace(std::move(projected), row.decision);
    if (!inserted && it->second != row.decision) return false;
  }
  return true;
}

ReductResult min_reduct(const DecisionTable& table) {
  if (table.class_count() < 2) {
    return ReductResult{AttributeSet{}, 0};
  }
  require_mask_width(table.dim());
  const auto masks = minimal_masks(distinct_pair_masks(table));
  int best = greedy_cover_size(masks, table.dim());
  dfs_min_cover(masks, 0, best);
  auto indices = lexmin_cover(masks, table.dim(), best);
  return ReductResult{AttributeSet(std::move(indices)), best};
}

namespace {

struct ReductCollector {
  std::size_t cap = 0;
  std::size_t node_budget = 5'000'000;
  bool truncated = false;
  std::vector<Mask> base;  // minimal masks, for minimality witnesses

  struct BySizeThenLex {
    bool operator()(const std::vector<int>& a, const std::vector<int>& b) const {
      return a.size() != b.size() ? a.size() < b.size() : a < b;
    }
  };
  std::set<std::vector<int>, BySizeThenLex> found;

  bool is_minimal(Mask chosen) const {
    for (int c = 0; c < kMaskWidth; ++c) {
      if (!(chosen & bit_of(c))) continue;
      bool witnessed = false;
      for (Mask m : base) {
        if ((m & chosen) == bit_of(c)) {
          witnessed = true;
          break;
        }
      }
      if (!witnessed) return false;
    }
    return true;
  }

  void dfs(const std::vector<Mask>& uncovered, Mask chosen, Mask banned) {
    if (truncated) return;
    if (node_budget-- == 0) {
      truncated = true;
      return;
    }
    if (uncovered.empty()) {
      if (is_minimal(chosen)) {
        std::vector<int> indices;
        for (int c = 0; c < kMaskWidth; ++c) {
          if (chosen & bit_of(c)) indices.push_back(c);
        }
        found.insert(std::move(indices));
        if (found.size() > cap) truncated = true;
      }
      return;
    }
    const Mask branch = uncovered[min_popcount_index(uncovered)];
    Mask candidates = branch & ~banned;
    Mask local_ban = banned;
    for (int c = 0; c < kMaskWidth && !truncated; ++c) {
      if (!(candidates & bit_of(c))) continue;
      dfs(remove_hit(uncovered, c), chosen | bit_of(c), local_ban);
      // Later branches must not reuse this column: partitions the minimal
      // tests by the first column that hits the branch mask.
      local_ban |= bit_of(c);
    }
  }
};

}  // namespace

ReductEnumeration enumerate_reducts(const DecisionTable& table, std::size_t cap) {
  if (cap < 1) throw Error("reduct enumeration cap must be at least 1");
  require_mask_width(table.dim());
  ReductCollector collector;
  collector.cap = cap;
  collector.base = minimal_masks(distinct_pair_masks(table));
  collector.dfs(collector.base, 0, 0);

  ReductEnumeration result;
  result.truncated = collector.truncated;
  for (const auto& indices : collector.found) {
    if (result.reducts.size() == cap) {
      result.truncated = true;
      break;
    }
    result.reducts.push_back(AttributeSet(indices));
  }
  return result;
}

namespace {

/// Direct pairwise check, deliberately independent of is_test and of the
/// discernibility-pair machinery.
bool direct_test(const std::vector<TableRow>& rows, const std::vector<int>& columns) {
  for (std::size_t i = 0; i < rows.size(); ++i) {
    for (std::size_t j = i + 1; j < rows.size(); ++j) {
      if (rows[i].decision == rows[j].decision) continue;
      bool separated = false;
      for (int c : columns) {
        if (rows[i].values[static_cast<std::size_t>(c)] !=
            rows[j].values[static_cast<std::size_t>(c)]) {
          separated = true;
          break;
        }
      }
      if (!separated) return false;
    }
  }
  return true;
}

bool next_combination(std::vector<int>& combo, int n) {
  const int k = static_cast<int>(combo.size());
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

int brute_force_reduct_size(const DecisionTable& table, int dim_cap) {
  if (table.dim() > dim_cap) {
    throw Error("table dimension " + std::to_string(table.dim()) +
                " above the brute-force cap " + std::to_string(dim_cap));
  }
  const auto& rows = table.rows();
  const int n = table.dim();
  for (int size = 0; size <= n; ++size) {
    std::vector<int> combo(static_cast<std::size_t>(size));
    for (int i = 0; i < size; ++i) combo[static_cast<std::size_t>(i)] = i;
    do {
      if (direct_test(rows, combo)) return size;
    } while (size > 0 && next_combination(combo, n));
  }
  return n;  // unreachable: the full column set is always a test
}

}  // namespace reductlab
