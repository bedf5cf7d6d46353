#include "reductlab/lines.hpp"

#include <algorithm>
#include <set>

#include "parse_util.hpp"

namespace reductlab {

LineAttr::LineAttr(std::string name, Rat a, Rat b, Rat c)
    : name_(std::move(name)), a_(std::move(a)), b_(std::move(b)), c_(std::move(c)) {
  if (sign_of(a_) == 0 && sign_of(b_) == 0) {
    throw Error("degenerate line '" + name_ + "': a and b are both zero");
  }
  a_.canonicalize();
  b_.canonicalize();
  c_.canonicalize();
}

SignSystem sign_system_from_pattern(const Pattern& pattern) {
  SignSystem system;
  system.reserve(pattern.size());
  for (auto v : pattern) {
    if (v != 0 && v != 1) throw Error("line patterns must be binary");
    system.push_back(v == 0 ? HalfPlaneSide::negative : HalfPlaneSide::nonnegative);
  }
  return system;
}

namespace {

// p*x + q*y + r  >= 0, or > 0 when strict.
struct Constraint2 {
  Rat px, py, r;
  bool strict = false;
};

// p*x + r >= 0 / > 0.
struct Constraint1 {
  Rat p, r;
  bool strict = false;
};

bool feasible_1d(const std::vector<Constraint1>& constraints) {
  bool has_lower = false, has_upper = false;
  Rat lower, upper;
  bool lower_strict = false, upper_strict = false;
  for (const auto& c : constraints) {
    const int sp = sign_of(c.p);
    if (sp == 0) {
      const int sr = sign_of(c.r);
      if (c.strict ? sr <= 0 : sr < 0) return false;
      continue;
    }
    Rat bound = -c.r / c.p;
    bound.canonicalize();
    if (sp > 0) {  // x >= bound (or >)
      if (!has_lower || bound > lower) {
        lower = bound;
        lower_strict = c.strict;
        has_lower = true;
      } else if (bound == lower) {
        lower_strict = lower_strict || c.strict;
      }
    } else {  // x <= bound (or <)
      if (!has_upper || bound < upper) {
        upper = bound;
        upper_strict = c.strict;
        has_upper = true;
      } else if (bound == upper) {
        upper_strict = upper_strict || c.strict;
      }
    }
  }
  if (has_lower && has_upper) {
    const int c = cmp(lower, upper);
    if (c > 0) return false;
    if (c == 0 && (lower_strict || upper_strict)) return false;
  }
  return true;
}

bool feasible_2d(const std::vector<Constraint2>& constraints) {
  std::vector<Constraint1> xs;
  std::vector<Constraint2> lowers, uppers;  // on y
  for (const auto& c : constraints) {
    const int sy = sign_of(c.py);
    if (sy == 0) {
      xs.push_back(Constraint1{c.px, c.r, c.strict});
    } else if (sy > 0) {
      lowers.push_back(c);
    } else {
      uppers.push_back(c);
    }
  }
  // Eliminate y: combine L (py > 0) scaled by -U.py with U (py < 0) scaled
  // by L.py; both multipliers positive, y cancels, strictness propagates.
  for (const auto& lo : lowers) {
    for (const auto& up : uppers) {
      Constraint1 combined;
      combined.p = lo.px * (-up.py) + up.px * lo.py;
      combined.r = lo.r * (-up.py) + up.r * lo.py;
      combined.p.canonicalize();
      combined.r.canonicalize();
      combined.strict = lo.strict || up.strict;
      xs.push_back(std::move(combined));
    }
  }
  return feasible_1d(xs);
}

std::vector<Constraint2> system_constraints(std::span<const LineAttr> lines,
                                            const SignSystem& system) {
  std::vector<Constraint2> constraints;
  constraints.reserve(lines.size());
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const auto& line = lines[i];
    if (system[i] == HalfPlaneSide::nonnegative) {
      constraints.push_back(Constraint2{line.a(), line.b(), line.c(), false});
    } else {
      // a*x + b*y + c < 0  <=>  -a*x - b*y - c > 0
      constraints.push_back(Constraint2{-line.a(), -line.b(), -line.c(), true});
    }
  }
  return constraints;
}

}  // namespace

bool feasible_sign_system(std::span<const LineAttr> lines, const SignSystem& system) {
  if (system.size() != lines.size()) {
    throw Error("sign system length does not match the number of lines");
  }
  return feasible_2d(system_constraints(lines, system));
}

bool feasible_sign_system(std::span<const LineAttr> lines, const Pattern& pattern) {
  return feasible_sign_system(lines, sign_system_from_pattern(pattern));
}

namespace {

/// Prefix feasibility is monotone: an infeasible prefix kills the whole
/// subtree, so only O(cells * n) feasibility checks run instead of 2^n.
void enumerate_rec(std::span<const LineAttr> lines, SignSystem& prefix,
                   std::vector<Pattern>& out) {
  if (!prefix.empty() &&
      !feasible_2d(system_constraints(lines.first(prefix.size()), prefix))) {
    return;
  }
  if (prefix.size() == lines.size()) {
    Pattern pattern;
    pattern.reserve(prefix.size());
    for (auto side : prefix) pattern.push_back(static_cast<std::int32_t>(side));
    out.push_back(std::move(pattern));
    return;
  }
  prefix.push_back(HalfPlaneSide::negative);
  enumerate_rec(lines, prefix, out);
  prefix.back() = HalfPlaneSide::nonnegative;
  enumerate_rec(lines, prefix, out);
  prefix.pop_back();
}

}  // namespace

std::vector<Pattern> enumerate_cells(std::span<const LineAttr> lines, int line_cap) {
  if (static_cast<int>(lines.size()) > line_cap) {
    throw Error("number of lines " + std::to_string(lines.size()) +
                " exceeds the cap " + std::to_string(line_cap));
  }
  std::vector<Pattern> out;
  SignSystem prefix;
  enumerate_rec(lines, prefix, out);
  std::sort(out.begin(), out.end());
  return out;
}

DecisionTable build_line_table(std::span<const LineAttr> lines,
                               const DecisionSpec& decisions, std::uint64_t seed,
                               int line_cap) {
  auto patterns = enumerate_cells(lines, line_cap);
  std::vector<std::string> names;
  names.reserve(lines.size());
  for (const auto& line : lines) names.push_back(line.name());

  SeededRng rng(seed);
  std::vector<TableRow> rows;
  rows.reserve(patterns.size());
  for (std::size_t i = 0; i < patterns.size(); ++i) {
    Decision d = 0;
    switch (decisions.kind) {
      case DecisionSpec::Kind::distinct:
        d = i;
        break;
      case DecisionSpec::Kind::constant:
        d = decisions.constant_value;
        break;
      case DecisionSpec::Kind::random_classes:
        d = rng.below(decisions.num_classes);
        break;
      case DecisionSpec::Kind::explicit_list:
        if (decisions.values.size() != patterns.size()) {
          throw Error("decision list must cover every row");
        }
        d = decisions.values[i];
        break;
    }
    rows.push_back(TableRow{std::move(patterns[i]), d});
  }
  return DecisionTable(Alphabet::binary(), std::move(names), std::move(rows));
}

std::vector<LineAttr> parse_lines(std::string_view text) {
  std::vector<LineAttr> lines;
  std::set<std::string> names;
  const auto raw = detail::split_lines(text);
  for (std::size_t li = 0; li < raw.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    auto tokens = detail::tokenize_line(raw[li]);
    if (tokens.empty()) continue;
    if (tokens.size() != 4) {
      throw ParseError("expected 'name a b c'", line_no, tokens[0].column);
    }
    if (!names.insert(tokens[0].text).second) {
      throw ParseError("duplicate line name '" + tokens[0].text + "'", line_no,
                       tokens[0].column);
    }
    try {
      lines.emplace_back(tokens[0].text, parse_rational(tokens[1].text),
                         parse_rational(tokens[2].text), parse_rational(tokens[3].text));
    } catch (const Error& e) {
      throw ParseError(e.what(), line_no, tokens[1].column);
    }
  }
  return lines;
}

Pattern evaluate_lines_at(std::span<const LineAttr> lines, const Rat& x, const Rat& y) {
  Pattern pattern;
  pattern.reserve(lines.size());
  for (const auto& line : lines) {
    pattern.push_back(sign_of(line.eval(x, y)) >= 0 ? 1 : 0);
  }
  return pattern;
}

std::vector<LineAttr> general_position_lines(int n) {
  // Tangents to y = x^2 at x = i: y = 2i*x - i^2, i.e. 2i*x - y - i^2 = 0.
  // Distinct slopes, and the tangents at a and b meet at x = (a+b)/2, so no
  // three are concurrent.
  std::vector<LineAttr> lines;
  lines.reserve(static_cast<std::size_t>(n));
  for (int i = 1; i <= n; ++i) {
    lines.emplace_back("l" + std::to_string(i), Rat(2 * i), Rat(-1),
                       Rat(-static_cast<long>(i) * i));
  }
  return lines;
}

std::vector<LineAttr> random_lines(int n, SeededRng& rng) {
  std::vector<LineAttr> lines;
  lines.reserve(static_cast<std::size_t>(n));
  for (int i = 0; i < n; ++i) {
    Rat a, b;
    do {
      a = random_rational(rng, 9, 4);
      b = random_rational(rng, 9, 4);
    } while (sign_of(a) == 0 && sign_of(b) == 0);
    lines.emplace_back("l" + std::to_string(i), a, b, random_rational(rng, 9, 4));
  }
  return lines;
}

}  // namespace reductlab
