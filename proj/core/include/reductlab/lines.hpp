#pragma once

#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reductlab/rational.hpp"
#include "reductlab/rng.hpp"
#include "reductlab/table.hpp"

namespace reductlab {

/// A line a*x + b*y + c = 0 with exact rational coefficients. The attribute
/// it induces takes the value 1 where a*x + b*y + c >= 0 (including the line
/// itself) and 0 where the form is strictly negative; the coefficient sign
/// fixes which side is which.
class LineAttr {
public:
  LineAttr(std::string name, Rat a, Rat b, Rat c);

  const std::string& name() const { return name_; }
  const Rat& a() const { return a_; }
  const Rat& b() const { return b_; }
  const Rat& c() const { return c_; }

  Rat eval(const Rat& x, const Rat& y) const { return a_ * x + b_ * y + c_; }

private:
  std::string name_;
  Rat a_, b_, c_;
};

/// One required relation per line: the strict-negative side (value 0) or the
/// nonnegative side (value 1).
enum class HalfPlaneSide : std::int8_t {
  negative = 0,     // a*x + b*y + c < 0
  nonnegative = 1,  // a*x + b*y + c >= 0
};

using SignSystem = std::vector<HalfPlaneSide>;

SignSystem sign_system_from_pattern(const Pattern& pattern);

/// Exact feasibility of the mixed strict/nonstrict linear system over the
/// plane, by rational Fourier-Motzkin elimination of both variables.
bool feasible_sign_system(std::span<const LineAttr> lines, const SignSystem& system);
bool feasible_sign_system(std::span<const LineAttr> lines, const Pattern& pattern);

/// Exactly the realized 0/1 patterns among the 2^n candidates, sorted
/// lexicographically. Every point of the plane maps to exactly one of them.
std::vector<Pattern> enumerate_cells(std::span<const LineAttr> lines, int line_cap = 16);

/// One row per realized pattern over the alphabet {0,1}, columns named after
/// the lines, decisions per `decisions`.
DecisionTable build_line_table(std::span<const LineAttr> lines,
                               const DecisionSpec& decisions, std::uint64_t seed = 0,
                               int line_cap = 16);

/// .lines text format: one attribute per line, `name a b c`, coefficients as
/// integers or `p/q`; blank lines and '#' comments ignored.
std::vector<LineAttr> parse_lines(std::string_view text);

/// The 0/1 value vector of the lines at an explicit point.
Pattern evaluate_lines_at(std::span<const LineAttr> lines, const Rat& x, const Rat& y);

/// n pairwise nonparallel lines with no three concurrent (tangents to a
/// parabola at distinct points), so the arrangement realizes the maximum
/// 1 + n + n(n-1)/2 cells.
std::vector<LineAttr> general_position_lines(int n);

std::vector<LineAttr> random_lines(int n, SeededRng& rng);

}  // namespace reductlab
