#include "twistgen/mpoly.hpp"

#include <algorithm>
#include <numeric>
#include <sstream>

namespace twistgen {

namespace {
constexpr const char* kVarNames[kNumVars] = {"x", "u", "v1", "v2",
                                             "v3", "v4", "T"};
}

const char* var_name(Var v) { return kVarNames[static_cast<int>(v)]; }

std::optional<Var> var_from_name(const std::string& name) {
  for (int i = 0; i < kNumVars; ++i)
    if (name == kVarNames[i]) return static_cast<Var>(i);
  return std::nullopt;
}

std::int64_t mono_degree(const Monomial& m) {
  std::int64_t d = 0;
  for (auto e : m) d += e;
  return d;
}

int mono_cmp(const Monomial& a, const Monomial& b) {
  const std::int64_t da = mono_degree(a), db = mono_degree(b);
  if (da != db) return da < db ? -1 : 1;
  for (int i = kNumVars - 1; i >= 0; --i) {
    if (a[i] != b[i]) return a[i] < b[i] ? -1 : 1;
  }
  return 0;
}

MPoly MPoly::constant(const Rat& c) {
  MPoly p;
  if (c != 0) p.terms_.emplace(kUnitMonomial, c);
  return p;
}

MPoly MPoly::variable(Var v, std::int64_t exponent) {
  if (exponent < 0) throw std::invalid_argument("negative exponent");
  if (exponent == 0) return constant(Rat(1));
  Monomial m = kUnitMonomial;
  m[static_cast<int>(v)] = exponent;
  MPoly p;
  p.terms_.emplace(m, Rat(1));
  return p;
}

MPoly MPoly::monomial(const Rat& c, const Monomial& m) {
  MPoly p;
  if (c != 0) p.terms_.emplace(m, c);
  return p;
}

bool MPoly::is_constant() const {
  return terms_.empty() ||
         (terms_.size() == 1 && terms_.begin()->first == kUnitMonomial);
}

Rat MPoly::constant_value() const {
  if (terms_.empty()) return Rat(0);
  if (!is_constant()) throw std::logic_error("constant_value of non-constant");
  return terms_.begin()->second;
}

std::int64_t MPoly::total_degree() const {
  if (terms_.empty()) return 0;
  return mono_degree(terms_.begin()->first);  // leading term has max degree
}

std::int64_t MPoly::degree_in(Var v) const {
  std::int64_t d = 0;
  for (const auto& [m, c] : terms_) d = std::max(d, m[static_cast<int>(v)]);
  return d;
}

std::optional<Var> MPoly::sole_variable() const {
  std::optional<Var> found;
  for (int i = 0; i < kNumVars; ++i) {
    if (degree_in(static_cast<Var>(i)) > 0) {
      if (found) return std::nullopt;
      found = static_cast<Var>(i);
    }
  }
  return found;
}

const Rat& MPoly::leading_coefficient() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->second;
}

const Monomial& MPoly::leading_monomial() const {
  if (terms_.empty()) throw std::logic_error("leading term of zero");
  return terms_.begin()->first;
}

void MPoly::add_term(const Monomial& m, const Rat& c) {
  if (c == 0) return;
  auto [it, inserted] = terms_.emplace(m, c);
  if (!inserted) {
    it->second += c;
    if (it->second == 0) terms_.erase(it);
  }
}

MPoly& MPoly::operator+=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, c);
  return *this;
}

MPoly& MPoly::operator-=(const MPoly& o) {
  for (const auto& [m, c] : o.terms_) add_term(m, -c);
  return *this;
}

MPoly MPoly::operator+(const MPoly& o) const {
  MPoly r = *this;
  r += o;
  return r;
}

MPoly MPoly::operator-(const MPoly& o) const {
  MPoly r = *this;
  r -= o;
  return r;
}

MPoly MPoly::operator*(const MPoly& o) const {
  MPoly r;
  for (const auto& [m1, c1] : terms_) {
    for (const auto& [m2, c2] : o.terms_) {
      Monomial m;
      for (int i = 0; i < kNumVars; ++i) m[i] = m1[i] + m2[i];
      r.add_term(m, c1 * c2);
    }
  }
  return r;
}

MPoly MPoly::operator-() const {
  MPoly r;
  for (const auto& [m, c] : terms_) r.terms_.emplace(m, -c);
  return r;
}

MPoly MPoly::operator*(const Rat& c) const {
  MPoly r;
  if (c == 0) return r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef * c);
  return r;
}

MPoly MPoly::pow(std::int64_t e) const {
  if (e < 0) throw std::invalid_argument("negative exponent in MPoly::pow");
  MPoly result = constant(Rat(1));
  MPoly base = *this;
  while (e > 0) {
    if (e & 1) result = result * base;
    base = base * base;
    e >>= 1;
  }
  return result;
}

Rat MPoly::eval(const std::array<Rat, kNumVars>& values) const {
  Rat acc(0);
  for (const auto& [m, c] : terms_) {
    Rat term = c;
    for (int i = 0; i < kNumVars; ++i)
      if (m[i] != 0) term *= rat_pow(values[i], m[i]);
    acc += term;
  }
  return acc;
}

MPoly MPoly::substitute(Var v, const Rat& value) const {
  MPoly r;
  const int iv = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    m2[iv] = 0;
    Rat c2 = c;
    if (m[iv] != 0) c2 *= rat_pow(value, m[iv]);
    r.add_term(m2, c2);
  }
  return r;
}

MPoly MPoly::rename(Var from, Var to) const {
  if (from == to) return *this;
  MPoly r;
  const int a = static_cast<int>(from), b = static_cast<int>(to);
  for (const auto& [m, c] : terms_) {
    Monomial m2 = m;
    m2[b] += m2[a];
    m2[a] = 0;
    r.add_term(m2, c);
  }
  return r;
}

MPoly MPoly::negate_variable(Var v) const {
  MPoly r;
  const int iv = static_cast<int>(v);
  for (const auto& [m, c] : terms_)
    r.terms_.emplace(m, (m[iv] % 2 != 0) ? Rat(-c) : c);
  return r;
}

MPoly MPoly::derivative(Var v) const {
  MPoly r;
  const int iv = static_cast<int>(v);
  for (const auto& [m, c] : terms_) {
    if (m[iv] == 0) continue;
    Monomial m2 = m;
    m2[iv] -= 1;
    r.add_term(m2, c * Rat(static_cast<long>(m[iv])));
  }
  return r;
}

Rat MPoly::content() const {
  if (terms_.empty()) return Rat(0);
  mpz_class num_gcd(0), den_lcm(1);
  for (const auto& [m, c] : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), c.get_num().get_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), c.get_den().get_mpz_t());
  }
  Rat content(num_gcd, den_lcm);
  content.canonicalize();
  if (leading_coefficient() < 0) content = -content;
  return content;
}

MPoly MPoly::primitive_part() const {
  if (terms_.empty()) return MPoly();
  const Rat c = content();
  MPoly r;
  for (const auto& [m, coef] : terms_) r.terms_.emplace(m, coef / c);
  return r;
}

Monomial MPoly::monomial_gcd() const {
  if (terms_.empty()) return kUnitMonomial;
  Monomial g = terms_.begin()->first;
  for (const auto& [m, c] : terms_)
    for (int i = 0; i < kNumVars; ++i) g[i] = std::min(g[i], m[i]);
  return g;
}

MPoly MPoly::shift_monomial(const Monomial& by) const {
  MPoly r;
  for (const auto& [m, c] : terms_) {
    Monomial m2;
    for (int i = 0; i < kNumVars; ++i) {
      m2[i] = m[i] + by[i];
      if (m2[i] < 0) throw std::logic_error("negative exponent after shift");
    }
    r.terms_.emplace(m2, c);
  }
  return r;
}

std::string MPoly::str() const {
  if (terms_.empty()) return "0";
  std::ostringstream out;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rat a = c;
    if (first) {
      if (a < 0) {
        out << "-";
        a = -a;
      }
    } else {
      out << (a < 0 ? "-" : "+");
      if (a < 0) a = -a;
    }
    first = false;
    const bool unit_mono = (m == kUnitMonomial);
    if (a != 1 || unit_mono) {
      out << rat_str(a);
      if (!unit_mono) out << "*";
    }
    bool first_var = true;
    for (int i = 0; i < kNumVars; ++i) {
      if (m[i] == 0) continue;
      if (!first_var) out << "*";
      first_var = false;
      out << kVarNames[i];
      if (m[i] != 1) out << "^" << m[i];
    }
  }
  return out.str();
}

bool mpoly_less(const MPoly& a, const MPoly& b) {
  auto ia = a.terms().begin(), ib = b.terms().begin();
  for (; ia != a.terms().end() && ib != b.terms().end(); ++ia, ++ib) {
    const int c = mono_cmp(ia->first, ib->first);
    if (c != 0) return c < 0;
    if (ia->second != ib->second) return ia->second < ib->second;
  }
  return ia == a.terms().end() && ib != b.terms().end();
}

// ---- univariate helpers ----

namespace {
Var require_univariate(const MPoly& f, const char* who) {
  const auto v = f.sole_variable();
  if (!v) {
    if (f.is_constant()) return Var::x;  // harmless placeholder
    throw std::invalid_argument(std::string(who) +
                                ": multivariate input rejected");
  }
  return *v;
}
}  // namespace

std::vector<Rat> to_dense(const MPoly& f, Var v) {
  std::vector<Rat> out(static_cast<std::size_t>(f.degree_in(v)) + 1, Rat(0));
  for (const auto& [m, c] : f.terms()) {
    for (int i = 0; i < kNumVars; ++i)
      if (i != static_cast<int>(v) && m[i] != 0)
        throw std::invalid_argument("to_dense: not univariate");
    out[static_cast<std::size_t>(m[static_cast<int>(v)])] = c;
  }
  return out;
}

MPoly from_dense(const std::vector<Rat>& coeffs, Var v) {
  MPoly r;
  for (std::size_t i = 0; i < coeffs.size(); ++i) {
    if (coeffs[i] == 0) continue;
    Monomial m = kUnitMonomial;
    m[static_cast<int>(v)] = static_cast<std::int64_t>(i);
    r += MPoly::monomial(coeffs[i], m);
  }
  return r;
}

std::pair<MPoly, MPoly> poly_divmod(const MPoly& f, const MPoly& g, Var v) {
  if (g.is_zero()) throw std::domain_error("division by zero polynomial");
  std::vector<Rat> r = to_dense(f, v);
  const std::vector<Rat> d = to_dense(g, v);
  std::vector<Rat> q;
  const std::size_t dd = d.size() - 1;
  if (r.size() >= d.size()) q.assign(r.size() - d.size() + 1, Rat(0));
  while (r.size() >= d.size() && !(r.size() == 1 && r[0] == 0)) {
    const std::size_t shift = r.size() - d.size();
    const Rat coef = r.back() / d.back();
    q[shift] = coef;
    for (std::size_t i = 0; i < d.size(); ++i) r[shift + i] -= coef * d[i];
    while (r.size() > 1 && r.back() == 0) r.pop_back();
    if (r.size() <= dd) break;
  }
  return {from_dense(q, v), from_dense(r, v)};
}

MPoly poly_gcd(const MPoly& f, const MPoly& g) {
  if (f.is_zero() && g.is_zero()) return MPoly();
  Var v;
  if (!f.is_constant())
    v = require_univariate(f, "poly_gcd");
  else if (!g.is_constant())
    v = require_univariate(g, "poly_gcd");
  else
    return MPoly::constant(Rat(1));
  if (!f.is_constant() && !g.is_constant()) {
    if (*f.sole_variable() != *g.sole_variable())
      throw std::invalid_argument("poly_gcd: different variables");
  }
  MPoly a = f, b = g;
  while (!b.is_zero()) {
    if (b.is_constant()) return MPoly::constant(Rat(1));
    auto [q, r] = poly_divmod(a, b, v);
    a = b;
    b = r;
  }
  if (a.is_zero()) return a;
  return a.primitive_part();
}

bool is_squarefree(const MPoly& f) {
  if (f.is_constant())
    throw std::invalid_argument("is_squarefree: constant input");
  const auto v = f.sole_variable();
  if (!v)
    throw std::invalid_argument("is_squarefree: multivariate input rejected");
  const MPoly g = poly_gcd(f, f.derivative(*v));
  return g.is_constant();
}

std::int64_t lcm64(std::int64_t a, std::int64_t b) {
  return std::lcm(a, b);
}

}  // namespace twistgen
