#include "reductlab/rational.hpp"

#include <cctype>

#include "reductlab/errors.hpp"
#include "reductlab/rng.hpp"

namespace reductlab {

namespace {

bool is_integer_token(std::string_view s) {
  if (s.empty()) return false;
  std::size_t i = (s[0] == '+' || s[0] == '-') ? 1 : 0;
  if (i == s.size()) return false;
  for (; i < s.size(); ++i) {
    if (!std::isdigit(static_cast<unsigned char>(s[i]))) return false;
  }
  return true;
}

}  // namespace

Rat parse_rational(std::string_view token) {
  std::string_view num = token;
  std::string_view den = "1";
  if (auto slash = token.find('/'); slash != std::string_view::npos) {
    num = token.substr(0, slash);
    den = token.substr(slash + 1);
  }
  if (!is_integer_token(num) || !is_integer_token(den)) {
    throw Error("malformed rational '" + std::string(token) + "'");
  }
  BigInt n(std::string(num), 10);
  BigInt d(std::string(den), 10);
  if (d == 0) {
    throw Error("zero denominator in rational '" + std::string(token) + "'");
  }
  Rat value(n, d);
  value.canonicalize();
  return value;
}

std::string rat_to_string(const Rat& value) { return value.get_str(); }

BigInt big_pow(const BigInt& base, unsigned long exponent) {
  BigInt result;
  mpz_pow_ui(result.get_mpz_t(), base.get_mpz_t(), exponent);
  return result;
}

BigInt alphabet_power(int k, int dim) {
  return big_pow(BigInt(k), static_cast<unsigned long>(dim));
}

Rat random_rational(SeededRng& rng, std::int64_t max_abs_numerator,
                    std::int64_t max_denominator) {
  const auto num = rng.in_range(-max_abs_numerator, max_abs_numerator);
  const auto den = rng.in_range(1, max_denominator);
  Rat value(BigInt(static_cast<long>(num)), BigInt(static_cast<long>(den)));
  value.canonicalize();
  return value;
}

}  // namespace reductlab
