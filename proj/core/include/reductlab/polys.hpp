#pragma once

#include <memory>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "reductlab/rational.hpp"
#include "reductlab/rng.hpp"
#include "reductlab/table.hpp"

namespace reductlab {

/// A univariate polynomial with exact rational coefficients, stored in
/// ascending degree with no trailing zeros (the zero polynomial has an empty
/// coefficient list).
class RatPoly {
public:
  RatPoly() = default;
  RatPoly(std::string name, std::vector<Rat> ascending_coefficients);

  static RatPoly from_ints(std::string name, std::vector<long> ascending_coefficients);

  const std::string& name() const { return name_; }
  bool is_zero() const { return coeffs_.empty(); }
  int degree() const { return static_cast<int>(coeffs_.size()) - 1; }  // -1 for zero
  const std::vector<Rat>& coeffs() const { return coeffs_; }
  const Rat& leading() const;

  Rat eval(const Rat& x) const;
  RatPoly derivative() const;

  RatPoly operator-() const;
  RatPoly operator+(const RatPoly& other) const;
  RatPoly operator-(const RatPoly& other) const;
  RatPoly operator*(const RatPoly& other) const;

  bool operator==(const RatPoly& other) const { return coeffs_ == other.coeffs_; }

  std::string to_string() const;  // e.g. "-1/2 + x - 3*x^2"

private:
  std::string name_;
  std::vector<Rat> coeffs_;
};

/// Monic gcd (constant 1 when coprime). Exact Euclid over the rationals.
RatPoly poly_gcd(const RatPoly& a, const RatPoly& b);

/// p divided by gcd(p, p'): same real roots, all simple.
RatPoly squarefree_part(const RatPoly& p);

/// Number of distinct real roots in the open interval (a, b); requires that
/// neither endpoint is a root. Sturm sign-variation count.
int count_roots_between(const RatPoly& p, const Rat& a, const Rat& b);

/// An open interval containing exactly one real root; the endpoints are
/// never roots.
struct RootInterval {
  Rat lo, hi;
};

/// Disjoint isolating intervals for all real roots, sorted left to right.
/// Throws Error on the zero polynomial.
std::vector<RootInterval> isolate_roots(const RatPoly& p);

/// A cell representative of a univariate arrangement: -infinity, an explicit
/// rational, the i-th root (left to right) of a context polynomial, or
/// +infinity.
struct SamplePoint {
  enum class Kind { minus_infinity, rational, root, plus_infinity };

  Kind kind = Kind::rational;
  Rat value{};         // rational kind
  int poly_index = -1;  // root kind: index into the context sequence
  int root_index = -1;

  static SamplePoint minus_infinity() { return {Kind::minus_infinity, Rat(), -1, -1}; }
  static SamplePoint plus_infinity() { return {Kind::plus_infinity, Rat(), -1, -1}; }
  static SamplePoint at(Rat value) { return {Kind::rational, std::move(value), -1, -1}; }
  static SamplePoint root_of(int poly_index, int root_index) {
    return {Kind::root, Rat(), poly_index, root_index};
  }
};

/// Evaluation context over a fixed polynomial sequence; caches squarefree
/// parts, Sturm chains and root isolations, refining intervals in place as
/// sign queries demand. Not safe for concurrent use of one instance.
class SignContext {
public:
  explicit SignContext(std::vector<RatPoly> polys);
  ~SignContext();
  SignContext(SignContext&&) noexcept;
  SignContext& operator=(SignContext&&) noexcept;

  const std::vector<RatPoly>& polys() const;

  /// Exact sign of p at the sample: from the leading coefficient at
  /// +/-infinity, by evaluation at rationals, and at a root r of a context
  /// polynomial q by gcd screening (shared root => 0) followed by interval
  /// refinement until p has constant sign on the isolating interval.
  int sign_at(const RatPoly& p, const SamplePoint& sample);

  /// Current isolating intervals of a context polynomial (isolates lazily).
  std::vector<RootInterval> roots_of(int poly_index);

private:
  struct Impl;
  std::unique_ptr<Impl> impl_;
};

/// One-off convenience wrapper around SignContext.
int sign_at(const RatPoly& p, const SamplePoint& sample, std::span<const RatPoly> context);

struct SignVectorsResult {
  std::vector<Pattern> vectors;  // sorted lexicographically, values in {-1,0,+1}
  int distinct_roots = 0;        // cells on the line = 2*distinct_roots + 1
};

/// Exactly the sign vectors realized over the real line, computed at the
/// full cell-representative set (-infinity, every root, a rational between
/// adjacent roots, +infinity). Zero polynomials are rejected unless
/// `allow_zero` admits them as constant-0 attributes.
SignVectorsResult enumerate_sign_vectors_detail(std::span<const RatPoly> polys,
                                                bool allow_zero = false);
std::vector<Pattern> enumerate_sign_vectors(std::span<const RatPoly> polys,
                                            bool allow_zero = false);

/// One row per realized sign vector over the alphabet {-1, 0, +1}, columns
/// named after the polynomials.
DecisionTable build_poly_table(std::span<const RatPoly> polys,
                               const DecisionSpec& decisions, std::uint64_t seed = 0,
                               bool allow_zero = false);

/// `arity` polynomials whose sign vectors realize all of {-1,+1}^arity: the
/// i-th polynomial flips sign between consecutive integer base points
/// exactly where bit i of the binary counting sequence flips.
std::vector<RatPoly> shatter_system(int arity, int arity_cap = 6);

/// .poly text format: one polynomial per line, `name c0 c1 c2 ...` with
/// ascending-degree rational coefficients; '#' comments ignored.
std::vector<RatPoly> parse_polys(std::string_view text);

/// The sign vector of the polynomials at an explicit rational point.
Pattern evaluate_signs_at(std::span<const RatPoly> polys, const Rat& x);

std::vector<RatPoly> random_poly_system(int count, int max_degree, SeededRng& rng);

}  // namespace reductlab
