#include "twistgen/factored.hpp"

#include <algorithm>
#include <sstream>

#include "twistgen/poly_parser.hpp"

namespace twistgen {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r))
    throw ExpandError("degree bound not computable: exponent overflow");
  return r;
}

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r))
    throw ExpandError("degree bound not computable: exponent overflow");
  return r;
}

std::string assignment_str(const std::array<Rat, kNumVars>& values) {
  std::ostringstream out;
  for (int i = 0; i < kNumVars; ++i) {
    if (i) out << ",";
    out << var_name(static_cast<Var>(i)) << "=" << rat_str(values[i]);
  }
  return out.str();
}

}  // namespace

FactoredRF FactoredRF::from_rat(const Rat& c) {
  FactoredRF r;
  r.scale_ = c;
  return r;
}

FactoredRF FactoredRF::variable(Var v, std::int64_t exponent) {
  FactoredRF r;
  r.scale_ = 1;
  if (exponent != 0) r.factors_.push_back({MPoly::variable(v), exponent});
  return r;
}

void FactoredRF::push_normalized(const MPoly& base, std::int64_t exponent) {
  if (exponent == 0 || base.is_constant()) {
    if (base.is_constant()) scale_ *= rat_pow(base.constant_value(), exponent);
    return;
  }
  const Rat content = base.content();
  if (content != 1) scale_ *= rat_pow(content, exponent);
  MPoly prim = base.primitive_part();
  const Monomial mg = prim.monomial_gcd();
  if (mg != kUnitMonomial) {
    // split off the common monomial into per-variable factors
    MPoly rest;
    for (const auto& [m, c] : prim.terms()) {
      Monomial m2;
      for (int i = 0; i < kNumVars; ++i) m2[i] = m[i] - mg[i];
      rest += MPoly::monomial(c, m2);
    }
    for (int i = 0; i < kNumVars; ++i)
      if (mg[i] != 0)
        factors_.push_back({MPoly::variable(static_cast<Var>(i)),
                            checked_mul(mg[i], exponent)});
    prim = rest;
  }
  if (prim.is_constant()) {
    scale_ *= rat_pow(prim.constant_value(), exponent);
    return;
  }
  factors_.push_back({prim, exponent});
}

void FactoredRF::finalize() {
  if (scale_ == 0) {
    factors_.clear();
    return;
  }
  std::sort(factors_.begin(), factors_.end(),
            [](const Factor& a, const Factor& b) {
              return mpoly_less(a.base, b.base);
            });
  std::vector<Factor> merged;
  for (auto& f : factors_) {
    if (!merged.empty() && merged.back().base == f.base)
      merged.back().exponent = checked_add(merged.back().exponent, f.exponent);
    else
      merged.push_back(std::move(f));
  }
  merged.erase(std::remove_if(merged.begin(), merged.end(),
                              [](const Factor& f) { return f.exponent == 0; }),
               merged.end());
  factors_ = std::move(merged);
}

FactoredRF FactoredRF::from_poly(const MPoly& p) {
  FactoredRF r;
  if (p.is_zero()) return r;
  r.scale_ = 1;
  r.push_normalized(p, 1);
  r.finalize();
  return r;
}

FactoredRF FactoredRF::operator*(const FactoredRF& o) const {
  FactoredRF r;
  r.scale_ = scale_ * o.scale_;
  if (r.scale_ == 0) return r;
  r.factors_ = factors_;
  r.factors_.insert(r.factors_.end(), o.factors_.begin(), o.factors_.end());
  r.finalize();
  return r;
}

FactoredRF FactoredRF::operator/(const FactoredRF& o) const {
  return *this * o.pow(-1);
}

FactoredRF FactoredRF::operator-() const {
  FactoredRF r = *this;
  r.scale_ = -r.scale_;
  return r;
}

FactoredRF FactoredRF::pow(std::int64_t e) const {
  if (is_zero()) {
    if (e <= 0) throw std::domain_error("zero to a non-positive power");
    return *this;
  }
  if (e == 0) return from_rat(Rat(1));
  FactoredRF r;
  r.scale_ = rat_pow(scale_, e);
  r.factors_ = factors_;
  for (auto& f : r.factors_) f.exponent = checked_mul(f.exponent, e);
  return r;  // canonical order unchanged under exponent scaling
}

std::pair<MPoly, MPoly> FactoredRF::expand() const {
  if (is_zero()) return {MPoly(), MPoly::constant(Rat(1))};
  MPoly num = MPoly::constant(Rat(scale_.get_num()));
  MPoly den = MPoly::constant(Rat(scale_.get_den()));
  auto grow = [](MPoly& acc, const MPoly& base, std::int64_t e) {
    if (base.term_count() > 1 && e > kExpandExponentLimit)
      throw ExpandError("expansion refused: exponent " + std::to_string(e) +
                        " exceeds limit on a multi-term base");
    acc = acc * base.pow(e);
    if (acc.term_count() > kExpandTermLimit)
      throw ExpandError("expansion refused: term count limit");
  };
  for (const auto& f : factors_) {
    if (f.exponent > 0)
      grow(num, f.base, f.exponent);
    else
      grow(den, f.base, -f.exponent);
  }
  return {num, den};
}

FactoredRF rf_sum(const FactoredRF& a, const FactoredRF& b, int sign) {
  if (a.is_zero()) return sign > 0 ? b : -b;
  if (b.is_zero()) return a;
  // common part: per base, min(exp_a, exp_b, 0-filled); cofactors then
  // have non-negative exponents and expand as polynomials.
  std::map<const MPoly*, std::pair<std::int64_t, std::int64_t>,
           bool (*)(const MPoly*, const MPoly*)>
      exps([](const MPoly* x, const MPoly* y) { return mpoly_less(*x, *y); });
  for (const auto& f : a.factors_) exps[&f.base].first += f.exponent;
  for (const auto& f : b.factors_) exps[&f.base].second += f.exponent;
  FactoredRF common = FactoredRF::from_rat(Rat(1));
  FactoredRF ca = FactoredRF::from_rat(a.scale_);
  FactoredRF cb = FactoredRF::from_rat(b.scale_);
  for (const auto& [base, ee] : exps) {
    // missing side contributes exponent 0, so cofactor exponents stay >= 0
    const std::int64_t c = std::min(ee.first, ee.second);
    if (c != 0) common.factors_.push_back({*base, c});
    if (ee.first - c != 0) ca.factors_.push_back({*base, ee.first - c});
    if (ee.second - c != 0) cb.factors_.push_back({*base, ee.second - c});
  }
  common.finalize();
  ca.finalize();
  cb.finalize();
  const auto [na, da] = ca.expand();
  const auto [nb, db] = cb.expand();
  if (!da.is_constant() || !db.is_constant())
    throw std::logic_error("cofactor with denominator after extraction");
  MPoly sum = na * (Rat(1) / da.constant_value());
  const MPoly other = nb * (Rat(1) / db.constant_value());
  sum = (sign > 0) ? sum + other : sum - other;
  return FactoredRF::from_poly(sum) * common;
}

FactoredRF FactoredRF::operator+(const FactoredRF& o) const {
  return rf_sum(*this, o, +1);
}

FactoredRF FactoredRF::operator-(const FactoredRF& o) const {
  return rf_sum(*this, o, -1);
}

std::optional<Rat> FactoredRF::try_eval(
    const std::array<Rat, kNumVars>& values) const {
  if (is_zero()) return Rat(0);
  std::vector<Rat> vals(factors_.size());
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    vals[i] = factors_[i].base.eval(values);
    if (vals[i] == 0 && factors_[i].exponent < 0) return std::nullopt;
  }
  Rat acc = scale_;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (vals[i] == 0) return Rat(0);
    acc *= rat_pow(vals[i], factors_[i].exponent);
  }
  return acc;
}

Rat FactoredRF::eval(const std::array<Rat, kNumVars>& values) const {
  if (is_zero()) return Rat(0);
  for (const auto& f : factors_) {
    if (f.exponent < 0 && f.base.eval(values) == 0)
      throw PoleError(f.base.str(), assignment_str(values));
  }
  const auto v = try_eval(values);
  return *v;
}

FactoredRF FactoredRF::negate_variable(Var v) const {
  if (is_zero()) return *this;
  FactoredRF r;
  r.scale_ = scale_;
  for (const auto& f : factors_) r.push_normalized(f.base.negate_variable(v), f.exponent);
  r.finalize();
  return r;
}

FactoredRF FactoredRF::signflip(int i) const {
  if (i < 1 || i > 4) throw std::invalid_argument("signflip index not in 1..4");
  return negate_variable(static_cast<Var>(static_cast<int>(Var::v1) + i - 1));
}

FactoredRF FactoredRF::substitute(Var v, const Rat& value) const {
  if (is_zero()) return *this;
  FactoredRF r;
  r.scale_ = scale_;
  for (const auto& f : factors_) {
    const MPoly s = f.base.substitute(v, value);
    if (s.is_zero()) {
      if (f.exponent < 0) throw PoleError(f.base.str(), var_name(v));
      return FactoredRF();  // zero
    }
    r.push_normalized(s, f.exponent);
  }
  r.finalize();
  return r;
}

bool FactoredRF::depends_on(Var v) const {
  for (const auto& f : factors_)
    if (f.base.depends_on(v)) return true;
  return false;
}

std::int64_t FactoredRF::numerator_degree_bound() const {
  std::int64_t d = 0;
  for (const auto& f : factors_)
    if (f.exponent > 0)
      d = checked_add(d, checked_mul(f.exponent, f.base.total_degree()));
  return d;
}

std::int64_t FactoredRF::denominator_degree_bound() const {
  std::int64_t d = 0;
  for (const auto& f : factors_)
    if (f.exponent < 0)
      d = checked_add(d, checked_mul(-f.exponent, f.base.total_degree()));
  return d;
}

std::string FactoredRF::str() const {
  std::ostringstream out;
  out << rat_str(scale_);
  for (const auto& f : factors_)
    out << " * (" << f.base.str() << ")^" << f.exponent;
  return out.str();
}

FactoredRF FactoredRF::parse(const std::string& text) {
  // scale ( '*' '(' poly ')' '^' int )*
  std::size_t pos = 0;
  auto skip_ws = [&] {
    while (pos < text.size() && (text[pos] == ' ' || text[pos] == '\t')) ++pos;
  };
  skip_ws();
  std::size_t start = pos;
  while (pos < text.size() && text[pos] != ' ' && text[pos] != '*') ++pos;
  FactoredRF r = from_rat(rat_parse(text.substr(start, pos - start)));
  for (;;) {
    skip_ws();
    if (pos >= text.size()) break;
    if (text[pos] != '*') throw ParseError("expected '*'", pos);
    ++pos;
    skip_ws();
    if (pos >= text.size() || text[pos] != '(')
      throw ParseError("expected '('", pos);
    ++pos;
    int depth = 1;
    start = pos;
    while (pos < text.size() && depth > 0) {
      if (text[pos] == '(') ++depth;
      if (text[pos] == ')') --depth;
      ++pos;
    }
    if (depth != 0) throw ParseError("unbalanced parentheses", pos);
    const std::string body = text.substr(start, pos - 1 - start);
    skip_ws();
    if (pos >= text.size() || text[pos] != '^')
      throw ParseError("expected '^'", pos);
    ++pos;
    skip_ws();
    start = pos;
    if (pos < text.size() && text[pos] == '-') ++pos;
    while (pos < text.size() && isdigit(static_cast<unsigned char>(text[pos])))
      ++pos;
    if (pos == start || (pos == start + 1 && text[start] == '-'))
      throw ParseError("expected exponent", pos);
    const std::int64_t e = std::stoll(text.substr(start, pos - start));
    const MPoly base = parse_poly(body);
    if (base.is_zero()) throw ParseError("zero base", start);
    r.push_normalized(base, e);
  }
  r.finalize();
  return r;
}

bool rf_equal(const FactoredRF& lhs, const FactoredRF& rhs, int samples,
              std::uint64_t seed) {
  if (lhs == rhs) return true;
  // window from the cross-multiplied difference degree bound
  const std::int64_t d =
      std::max(checked_add(lhs.numerator_degree_bound(),
                           rhs.denominator_degree_bound()),
               checked_add(rhs.numerator_degree_bound(),
                           lhs.denominator_degree_bound()));
  const std::int64_t half = 2 * std::max<std::int64_t>(d, 8);
  bool active[kNumVars] = {};
  for (int i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    active[i] = lhs.depends_on(v) || rhs.depends_on(v);
  }
  Rng rng(seed);
  int accepted = 0, rejected = 0;
  while (accepted < samples) {
    std::array<Rat, kNumVars> values;
    for (int i = 0; i < kNumVars; ++i)
      values[i] = active[i] ? Rat(static_cast<long>(rng.uniform(-half, half)))
                            : Rat(0);
    const auto a = lhs.try_eval(values);
    const auto b = rhs.try_eval(values);
    if (!a || !b) {
      if (++rejected > 1000)
        throw std::runtime_error(
            "rf_equal: could not find pole-free assignments");
      continue;
    }
    if (*a != *b) return false;
    ++accepted;
  }
  return true;
}

}  // namespace twistgen
