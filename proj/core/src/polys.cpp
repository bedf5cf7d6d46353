#include "reductlab/polys.hpp"

#include <algorithm>
#include <optional>
#include <set>
#include <sstream>

#include "parse_util.hpp"

namespace reductlab {

namespace {

using Coeffs = std::vector<Rat>;  // ascending degree, no trailing zeros

Coeffs strip(Coeffs c) {
  while (!c.empty() && sign_of(c.back()) == 0) c.pop_back();
  return c;
}

int cdeg(const Coeffs& c) { return static_cast<int>(c.size()) - 1; }

Rat ceval(const Coeffs& c, const Rat& x) {
  Rat acc(0);
  for (auto it = c.rbegin(); it != c.rend(); ++it) acc = acc * x + *it;
  acc.canonicalize();
  return acc;
}

Coeffs cderiv(const Coeffs& c) {
  Coeffs out;
  for (std::size_t i = 1; i < c.size(); ++i) {
    out.push_back(c[i] * static_cast<long>(i));
  }
  return strip(std::move(out));
}

Coeffs cneg(Coeffs c) {
  for (auto& v : c) v = -v;
  return c;
}

Coeffs cadd(const Coeffs& a, const Coeffs& b) {
  Coeffs out(std::max(a.size(), b.size()), Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) out[i] += a[i];
  for (std::size_t i = 0; i < b.size(); ++i) out[i] += b[i];
  return strip(std::move(out));
}

Coeffs cmul(const Coeffs& a, const Coeffs& b) {
  if (a.empty() || b.empty()) return {};
  Coeffs out(a.size() + b.size() - 1, Rat(0));
  for (std::size_t i = 0; i < a.size(); ++i) {
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] += a[i] * b[j];
  }
  return strip(std::move(out));
}

/// Remainder of a by b; b nonzero.
Coeffs crem(Coeffs a, const Coeffs& b) {
  const int db = cdeg(b);
  while (cdeg(a) >= db) {
    const Rat factor = a.back() / b.back();
    const int shift = cdeg(a) - db;
    for (int i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
    }
    a = strip(std::move(a));
    if (a.empty()) break;
  }
  return a;
}

/// Exact quotient of a by b (remainder must vanish).
Coeffs cdiv_exact(Coeffs a, const Coeffs& b) {
  const int db = cdeg(b);
  Coeffs quotient(a.size(), Rat(0));
  while (cdeg(a) >= db) {
    const Rat factor = a.back() / b.back();
    const int shift = cdeg(a) - db;
    quotient[static_cast<std::size_t>(shift)] = factor;
    for (int i = 0; i <= db; ++i) {
      a[static_cast<std::size_t>(i + shift)] -= factor * b[static_cast<std::size_t>(i)];
    }
    a = strip(std::move(a));
    if (a.empty()) break;
  }
  if (!a.empty()) throw Error("internal error: inexact polynomial division");
  return strip(std::move(quotient));
}

Coeffs cmonic(Coeffs c) {
  if (c.empty()) return c;
  const Rat lead = c.back();
  for (auto& v : c) {
    v /= lead;
    v.canonicalize();
  }
  return c;
}

/// Division by |leading|: a positive scaling, which preserves signs and
/// therefore the Sturm structure, while keeping coefficients small.
Coeffs scale_pos(Coeffs c) {
  if (c.empty()) return c;
  const Rat lead = abs(c.back());
  for (auto& v : c) {
    v /= lead;
    v.canonicalize();
  }
  return c;
}

Coeffs cgcd_impl(Coeffs a, Coeffs b) {
  a = strip(std::move(a));
  b = strip(std::move(b));
  while (!b.empty()) {
    Coeffs r = crem(a, b);
    a = std::move(b);
    b = cmonic(strip(std::move(r)));
  }
  return cmonic(std::move(a));
}

Coeffs csqfree(const Coeffs& p) {
  if (cdeg(p) <= 1) return cmonic(p);
  const Coeffs g = cgcd_impl(p, cderiv(p));
  if (cdeg(g) <= 0) return cmonic(p);
  return cmonic(cdiv_exact(p, g));
}

// ---- Sturm chains -----------------------------------------------------------

struct Chain {
  std::vector<Coeffs> seq;  // seq[0] squarefree, seq[1] its derivative, ...
};

Chain sturm_chain(const Coeffs& squarefree) {
  Chain chain;
  chain.seq.push_back(squarefree);
  Coeffs d = cderiv(squarefree);
  if (!d.empty()) {
    chain.seq.push_back(scale_pos(std::move(d)));
    while (true) {
      const auto& prev = chain.seq[chain.seq.size() - 2];
      const auto& last = chain.seq.back();
      Coeffs r = strip(cneg(crem(prev, last)));
      if (r.empty()) break;
      chain.seq.push_back(scale_pos(std::move(r)));
    }
  }
  return chain;
}

int count_variations(const std::vector<int>& signs) {
  int count = 0;
  int previous = 0;
  for (int s : signs) {
    if (s == 0) continue;
    if (previous != 0 && s != previous) ++count;
    previous = s;
  }
  return count;
}

int variations_at(const Chain& chain, const Rat& x) {
  std::vector<int> signs;
  signs.reserve(chain.seq.size());
  for (const auto& c : chain.seq) signs.push_back(sign_of(ceval(c, x)));
  return count_variations(signs);
}

int sign_inf(const Coeffs& c, int direction) {
  if (c.empty()) return 0;
  const int lead = sign_of(c.back());
  if (direction > 0) return lead;
  return cdeg(c) % 2 == 0 ? lead : -lead;
}

/// Distinct roots of the chain's polynomial in (a, b); both endpoints
/// must be non-roots.
int chain_count_open(const Chain& chain, const Rat& a, const Rat& b) {
  return variations_at(chain, a) - variations_at(chain, b);
}

/// All roots lie strictly inside (-bound, bound).
Rat cauchy_bound(const Coeffs& c) {
  Rat best(0);
  for (std::size_t i = 0; i + 1 < c.size(); ++i) {
    Rat ratio = abs(c[i]) / abs(c.back());
    ratio.canonicalize();
    best = std::max(best, ratio);
  }
  Rat bound = best + 2;
  bound.canonicalize();
  return bound;
}

/// A point in (a, b) that is not a root of p; tries midpoints first, then
/// denser rational grids. p has finitely many roots, so this terminates.
Rat pick_nonroot(const Coeffs& p, const Rat& a, const Rat& b) {
  const Rat width = b - a;
  for (long den = 2;; ++den) {
    for (long num = 1; num < den; ++num) {
      Rat fraction(num, den);
      fraction.canonicalize();
      Rat m = a + width * fraction;
      if (sign_of(ceval(p, m)) != 0) return m;
    }
  }
}

struct RootBox {
  Rat lo, hi;
  int vlo = 0, vhi = 0;  // cached sign variations at the endpoints
};

struct IsolatedPoly {
  Coeffs sqfree;
  Chain chain;
  std::vector<RootBox> boxes;  // sorted left to right, pairwise disjoint

  void refine(int index) {
    auto& box = boxes[static_cast<std::size_t>(index)];
    const Rat m = pick_nonroot(sqfree, box.lo, box.hi);
    const int vm = variations_at(chain, m);
    if (box.vlo - vm == 1) {
      box.hi = m;
      box.vhi = vm;
    } else {
      box.lo = m;
      box.vlo = vm;
    }
  }
};

void isolate_rec(IsolatedPoly& ip, const Rat& a, int va, const Rat& b, int vb) {
  const int count = va - vb;
  if (count == 0) return;
  if (count == 1) {
    ip.boxes.push_back(RootBox{a, b, va, vb});
    return;
  }
  const Rat m = pick_nonroot(ip.sqfree, a, b);
  const int vm = variations_at(ip.chain, m);
  isolate_rec(ip, a, va, m, vm);
  isolate_rec(ip, m, vm, b, vb);
}

IsolatedPoly isolate_impl(const Coeffs& p) {
  IsolatedPoly ip;
  ip.sqfree = csqfree(p);
  if (cdeg(ip.sqfree) <= 0) {
    return ip;  // constant: no roots
  }
  ip.chain = sturm_chain(ip.sqfree);
  const Rat bound = cauchy_bound(ip.sqfree);
  const Rat lo = -bound;
  isolate_rec(ip, lo, variations_at(ip.chain, lo), bound, variations_at(ip.chain, bound));
  return ip;
}

}  // namespace

// ---- RatPoly ----------------------------------------------------------------

RatPoly::RatPoly(std::string name, std::vector<Rat> ascending_coefficients)
    : name_(std::move(name)), coeffs_(std::move(ascending_coefficients)) {
  for (auto& c : coeffs_) c.canonicalize();
  coeffs_ = strip(std::move(coeffs_));
}

RatPoly RatPoly::from_ints(std::string name, std::vector<long> ascending_coefficients) {
  std::vector<Rat> coeffs;
  coeffs.reserve(ascending_coefficients.size());
  for (long v : ascending_coefficients) coeffs.emplace_back(v);
  return RatPoly(std::move(name), std::move(coeffs));
}

const Rat& RatPoly::leading() const {
  if (is_zero()) throw Error("the zero polynomial has no leading coefficient");
  return coeffs_.back();
}

Rat RatPoly::eval(const Rat& x) const { return ceval(coeffs_, x); }

RatPoly RatPoly::derivative() const { return RatPoly(name_ + "'", cderiv(coeffs_)); }

RatPoly RatPoly::operator-() const { return RatPoly("", cneg(coeffs_)); }

RatPoly RatPoly::operator+(const RatPoly& other) const {
  return RatPoly("", cadd(coeffs_, other.coeffs_));
}

RatPoly RatPoly::operator-(const RatPoly& other) const {
  return RatPoly("", cadd(coeffs_, cneg(other.coeffs_)));
}

RatPoly RatPoly::operator*(const RatPoly& other) const {
  return RatPoly("", cmul(coeffs_, other.coeffs_));
}

std::string RatPoly::to_string() const {
  if (is_zero()) return "0";
  std::ostringstream out;
  bool first = true;
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (sign_of(coeffs_[i]) == 0) continue;
    if (!first) out << " + ";
    out << rat_to_string(coeffs_[i]);
    if (i == 1) out << "*x";
    if (i > 1) out << "*x^" << i;
    first = false;
  }
  return std::move(out).str();
}

RatPoly poly_gcd(const RatPoly& a, const RatPoly& b) {
  return RatPoly("", cgcd_impl(a.coeffs(), b.coeffs()));
}

RatPoly squarefree_part(const RatPoly& p) {
  if (p.is_zero()) throw Error("the zero polynomial has no squarefree part");
  return RatPoly("", csqfree(p.coeffs()));
}

int count_roots_between(const RatPoly& p, const Rat& a, const Rat& b) {
  if (p.is_zero()) throw Error("cannot count roots of the zero polynomial");
  if (!(a < b)) throw Error("empty interval");
  if (sign_of(p.eval(a)) == 0 || sign_of(p.eval(b)) == 0) {
    throw Error("interval endpoints must not be roots");
  }
  const Coeffs sq = csqfree(p.coeffs());
  if (cdeg(sq) <= 0) return 0;
  const Chain chain = sturm_chain(sq);
  return chain_count_open(chain, a, b);
}

std::vector<RootInterval> isolate_roots(const RatPoly& p) {
  if (p.is_zero()) throw Error("cannot isolate roots of the zero polynomial");
  const auto ip = isolate_impl(p.coeffs());
  std::vector<RootInterval> out;
  out.reserve(ip.boxes.size());
  for (const auto& box : ip.boxes) out.push_back(RootInterval{box.lo, box.hi});
  return out;
}

// ---- SignContext ------------------------------------------------------------

struct SignContext::Impl {
  std::vector<RatPoly> polys;
  std::vector<std::optional<IsolatedPoly>> isolations;

  IsolatedPoly& isolation(int index) {
    if (index < 0 || index >= static_cast<int>(polys.size())) {
      throw Error("sample refers to a polynomial outside the context");
    }
    auto& slot = isolations[static_cast<std::size_t>(index)];
    if (!slot) {
      if (polys[static_cast<std::size_t>(index)].is_zero()) {
        throw Error("root sample refers to the zero polynomial");
      }
      slot.emplace(isolate_impl(polys[static_cast<std::size_t>(index)].coeffs()));
    }
    return *slot;
  }
};

SignContext::SignContext(std::vector<RatPoly> polys) : impl_(std::make_unique<Impl>()) {
  impl_->polys = std::move(polys);
  impl_->isolations.resize(impl_->polys.size());
}

SignContext::~SignContext() = default;
SignContext::SignContext(SignContext&&) noexcept = default;
SignContext& SignContext::operator=(SignContext&&) noexcept = default;

const std::vector<RatPoly>& SignContext::polys() const { return impl_->polys; }

namespace {

/// Sign of p at the single root inside `box` of the polynomial behind `ip`.
/// Assumes gcd screening has ruled out a shared root.
int sign_at_isolated_root(const Coeffs& p, const Coeffs& p_sqfree, const Chain& p_chain,
                          IsolatedPoly& ip, int root_index) {
  while (true) {
    const auto& box = ip.boxes[static_cast<std::size_t>(root_index)];
    if (sign_of(ceval(p_sqfree, box.lo)) != 0 && sign_of(ceval(p_sqfree, box.hi)) != 0 &&
        chain_count_open(p_chain, box.lo, box.hi) == 0) {
      Rat mid = (box.lo + box.hi) / 2;
      mid.canonicalize();
      return sign_of(ceval(p, mid));
    }
    ip.refine(root_index);
  }
}

}  // namespace

int SignContext::sign_at(const RatPoly& p, const SamplePoint& sample) {
  switch (sample.kind) {
    case SamplePoint::Kind::minus_infinity:
      return sign_inf(p.coeffs(), -1);
    case SamplePoint::Kind::plus_infinity:
      return sign_inf(p.coeffs(), +1);
    case SamplePoint::Kind::rational:
      return sign_of(p.eval(sample.value));
    case SamplePoint::Kind::root:
      break;
  }
  auto& ip = impl_->isolation(sample.poly_index);
  if (sample.root_index < 0 ||
      sample.root_index >= static_cast<int>(ip.boxes.size())) {
    throw Error("root index out of range");
  }
  if (p.is_zero()) return 0;

  // Shared root <=> gcd(p, q) vanishes at the sample root.
  const Coeffs g = cgcd_impl(p.coeffs(), ip.sqfree);
  if (cdeg(g) >= 1) {
    const Chain gchain = sturm_chain(g);
    const auto& box = ip.boxes[static_cast<std::size_t>(sample.root_index)];
    if (chain_count_open(gchain, box.lo, box.hi) == 1) return 0;
  }
  const Coeffs psf = csqfree(p.coeffs());
  const Chain pchain = sturm_chain(psf);
  return sign_at_isolated_root(p.coeffs(), psf, pchain, ip, sample.root_index);
}

std::vector<RootInterval> SignContext::roots_of(int poly_index) {
  const auto& ip = impl_->isolation(poly_index);
  std::vector<RootInterval> out;
  out.reserve(ip.boxes.size());
  for (const auto& box : ip.boxes) out.push_back(RootInterval{box.lo, box.hi});
  return out;
}

int sign_at(const RatPoly& p, const SamplePoint& sample, std::span<const RatPoly> context) {
  SignContext ctx(std::vector<RatPoly>(context.begin(), context.end()));
  return ctx.sign_at(p, sample);
}

// ---- sign-vector enumeration ------------------------------------------------

SignVectorsResult enumerate_sign_vectors_detail(std::span<const RatPoly> polys,
                                                bool allow_zero) {
  for (const auto& p : polys) {
    if (p.is_zero() && !allow_zero) {
      throw Error("zero polynomial attribute '" + p.name() +
                  "' (pass allow_zero to admit a constant-0 attribute)");
    }
  }

  SignVectorsResult result;

  // Squarefree product of the nonconstant attributes: its roots are exactly
  // the cell boundaries of the whole system.
  Coeffs product{Rat(1)};
  bool any_nonconstant = false;
  for (const auto& p : polys) {
    if (p.degree() >= 1) {
      product = cmul(product, csqfree(p.coeffs()));
      any_nonconstant = true;
    }
  }

  std::set<Pattern> vectors;
  auto eval_all_at = [&](const Rat& x) {
    Pattern v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(sign_of(ceval(p.coeffs(), x)));
    return v;
  };
  auto inf_all = [&](int direction) {
    Pattern v;
    v.reserve(polys.size());
    for (const auto& p : polys) v.push_back(sign_inf(p.coeffs(), direction));
    return v;
  };

  if (!any_nonconstant) {
    vectors.insert(eval_all_at(Rat(0)));
    result.vectors.assign(vectors.begin(), vectors.end());
    return result;
  }

  IsolatedPoly star = isolate_impl(product);
  const int root_count = static_cast<int>(star.boxes.size());
  result.distinct_roots = root_count;

  // Per-attribute data, hoisted out of the per-root loop.
  struct AttrData {
    const RatPoly* poly = nullptr;
    bool constant = false;
    int constant_sign = 0;
    Coeffs shared_gcd;  // with the squarefree product
    std::optional<Chain> gcd_chain;
    Coeffs sqfree;
    std::optional<Chain> chain;
  };
  std::vector<AttrData> attrs;
  attrs.reserve(polys.size());
  for (const auto& p : polys) {
    AttrData data;
    data.poly = &p;
    if (p.degree() <= 0) {
      data.constant = true;
      data.constant_sign = p.is_zero() ? 0 : sign_of(p.coeffs()[0]);
    } else {
      data.shared_gcd = cgcd_impl(p.coeffs(), star.sqfree);
      if (cdeg(data.shared_gcd) >= 1) data.gcd_chain.emplace(sturm_chain(data.shared_gcd));
      data.sqfree = csqfree(p.coeffs());
      data.chain.emplace(sturm_chain(data.sqfree));
    }
    attrs.push_back(std::move(data));
  }

  vectors.insert(inf_all(-1));
  for (int r = 0; r < root_count; ++r) {
    Pattern v;
    v.reserve(polys.size());
    for (auto& data : attrs) {
      if (data.constant) {
        v.push_back(data.constant_sign);
        continue;
      }
      bool shared = false;
      if (data.gcd_chain) {
        const auto& box = star.boxes[static_cast<std::size_t>(r)];
        shared = chain_count_open(*data.gcd_chain, box.lo, box.hi) == 1;
      }
      if (shared) {
        v.push_back(0);
      } else {
        v.push_back(sign_at_isolated_root(data.poly->coeffs(), data.sqfree, *data.chain,
                                          star, r));
      }
    }
    vectors.insert(std::move(v));
    if (r + 1 < root_count) {
      // Any point of (root_r, root_{r+1}): the right endpoint of box r works,
      // because the boxes are disjoint and endpoints are never roots.
      vectors.insert(eval_all_at(star.boxes[static_cast<std::size_t>(r)].hi));
    }
  }
  vectors.insert(inf_all(+1));

  result.vectors.assign(vectors.begin(), vectors.end());
  return result;
}

std::vector<Pattern> enumerate_sign_vectors(std::span<const RatPoly> polys,
                                            bool allow_zero) {
  return enumerate_sign_vectors_detail(polys, allow_zero).vectors;
}

DecisionTable build_poly_table(std::span<const RatPoly> polys,
                               const DecisionSpec& decisions, std::uint64_t seed,
                               bool allow_zero) {
  auto vectors = enumerate_sign_vectors(polys, allow_zero);
  std::vector<std::string> names;
  names.reserve(polys.size());
  for (const auto& p : polys) names.push_back(p.name());

  SeededRng rng(seed);
  std::vector<TableRow> rows;
  rows.reserve(vectors.size());
  for (std::size_t i = 0; i < vectors.size(); ++i) {
    Pattern indices;
    indices.reserve(vectors[i].size());
    for (auto s : vectors[i]) indices.push_back(s + 1);  // -1,0,+1 -> 0,1,2
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
        if (decisions.values.size() != vectors.size()) {
          throw Error("decision list must cover every row");
        }
        d = decisions.values[i];
        break;
    }
    rows.push_back(TableRow{std::move(indices), d});
  }
  return DecisionTable(Alphabet::signs(), std::move(names), std::move(rows));
}

std::vector<RatPoly> shatter_system(int arity, int arity_cap) {
  if (arity < 1) throw Error("shatter system needs arity >= 1");
  if (arity > arity_cap) {
    throw Error("shatter arity " + std::to_string(arity) + " exceeds the cap " +
                std::to_string(arity_cap));
  }
  std::vector<RatPoly> polys;
  polys.reserve(static_cast<std::size_t>(arity));
  for (int i = 0; i < arity; ++i) {
    // Roots halfway before every multiple of 2^i: the sign over the integer
    // base points 0..2^arity-1 follows bit i of the point index.
    Coeffs c{Rat(1)};
    const long flips = (1L << (arity - i)) - 1;
    for (long m = 1; m <= flips; ++m) {
      Rat root(2 * m * (1L << i) - 1, 2);  // m*2^i - 1/2
      root.canonicalize();
      c = cmul(c, Coeffs{-root, Rat(1)});
    }
    if (sign_of(ceval(c, Rat(0))) > 0) c = cneg(std::move(c));
    polys.emplace_back("s" + std::to_string(i), std::move(c));
  }
  return polys;
}

std::vector<RatPoly> parse_polys(std::string_view text) {
  std::vector<RatPoly> polys;
  std::set<std::string> names;
  const auto raw = detail::split_lines(text);
  for (std::size_t li = 0; li < raw.size(); ++li) {
    const int line_no = static_cast<int>(li) + 1;
    auto tokens = detail::tokenize_line(raw[li]);
    if (tokens.empty()) continue;
    if (tokens.size() < 2) {
      throw ParseError("expected 'name c0 c1 ...'", line_no, tokens[0].column);
    }
    if (!names.insert(tokens[0].text).second) {
      throw ParseError("duplicate polynomial name '" + tokens[0].text + "'", line_no,
                       tokens[0].column);
    }
    std::vector<Rat> coeffs;
    for (std::size_t t = 1; t < tokens.size(); ++t) {
      const bool symbolic = std::any_of(tokens[t].text.begin(), tokens[t].text.end(),
                                        [](unsigned char c) { return std::isalpha(c); });
      if (symbolic) {
        throw ParseError(
            "symbolic or multivariate input is not supported; list rational "
            "coefficients in ascending degree (univariate only)",
            line_no, tokens[t].column);
      }
      try {
        coeffs.push_back(parse_rational(tokens[t].text));
      } catch (const Error& e) {
        throw ParseError(e.what(), line_no, tokens[t].column);
      }
    }
    polys.emplace_back(tokens[0].text, std::move(coeffs));
  }
  return polys;
}

Pattern evaluate_signs_at(std::span<const RatPoly> polys, const Rat& x) {
  Pattern v;
  v.reserve(polys.size());
  for (const auto& p : polys) v.push_back(sign_of(p.eval(x)));
  return v;
}

std::vector<RatPoly> random_poly_system(int count, int max_degree, SeededRng& rng) {
  std::vector<RatPoly> polys;
  polys.reserve(static_cast<std::size_t>(count));
  for (int i = 0; i < count; ++i) {
    const int degree = static_cast<int>(rng.in_range(0, max_degree));
    std::vector<Rat> coeffs;
    coeffs.reserve(static_cast<std::size_t>(degree) + 1);
    for (int c = 0; c <= degree; ++c) coeffs.push_back(random_rational(rng, 8, 3));
    while (sign_of(coeffs.back()) == 0) coeffs.back() = random_rational(rng, 8, 3);
    polys.emplace_back("p" + std::to_string(i), std::move(coeffs));
  }
  return polys;
}

}  // namespace reductlab
