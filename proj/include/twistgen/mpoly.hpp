#ifndef TWISTGEN_MPOLY_HPP
#define TWISTGEN_MPOLY_HPP

#include <array>
#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "twistgen/rat.hpp"

namespace twistgen {

/// The fixed ambient variable set. Everything in this project lives in
/// Q[x, u, v1, v2, v3, v4, T].
enum class Var : int { x = 0, u = 1, v1 = 2, v2 = 3, v3 = 4, v4 = 5, T = 6 };

inline constexpr int kNumVars = 7;

const char* var_name(Var v);
std::optional<Var> var_from_name(const std::string& name);

/// Exponent vector over the fixed variable set.
using Monomial = std::array<std::int64_t, kNumVars>;

inline constexpr Monomial kUnitMonomial{0, 0, 0, 0, 0, 0, 0};

std::int64_t mono_degree(const Monomial& m);

/// Graded lexicographic order with x < u < v1 < v2 < v3 < v4 < T
/// (T is the most significant variable in the lex tie-break).
/// Returns <0, 0, >0 like a comparator.
int mono_cmp(const Monomial& a, const Monomial& b);

/// std::map comparator putting the grlex-largest monomial first, so
/// begin() is always the leading term.
struct MonoGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    return mono_cmp(a, b) > 0;
  }
};

/// Sparse multivariate polynomial over Q. Invariant: no zero
/// coefficients are stored; the zero polynomial is the empty map.
class MPoly {
 public:
  using TermMap = std::map<Monomial, Rat, MonoGreater>;

  MPoly() = default;
  static MPoly constant(const Rat& c);
  static MPoly variable(Var v, std::int64_t exponent = 1);
  static MPoly monomial(const Rat& c, const Monomial& m);

  bool is_zero() const { return terms_.empty(); }
  bool is_constant() const;
  /// Value of a constant polynomial (0 for the zero polynomial).
  Rat constant_value() const;
  const TermMap& terms() const { return terms_; }
  std::size_t term_count() const { return terms_.size(); }

  std::int64_t total_degree() const;  // zero polynomial -> 0
  std::int64_t degree_in(Var v) const;
  bool depends_on(Var v) const { return degree_in(v) > 0; }
  /// The unique variable this polynomial depends on, if there is exactly one.
  std::optional<Var> sole_variable() const;
  const Rat& leading_coefficient() const;  // pre: !is_zero()
  const Monomial& leading_monomial() const;

  MPoly& operator+=(const MPoly& o);
  MPoly& operator-=(const MPoly& o);
  MPoly operator+(const MPoly& o) const;
  MPoly operator-(const MPoly& o) const;
  MPoly operator*(const MPoly& o) const;
  MPoly operator-() const;
  MPoly operator*(const Rat& c) const;
  /// e >= 0 (repeated squaring).
  MPoly pow(std::int64_t e) const;

  Rat eval(const std::array<Rat, kNumVars>& values) const;
  MPoly substitute(Var v, const Rat& value) const;
  MPoly rename(Var from, Var to) const;
  /// v -> -v.
  MPoly negate_variable(Var v) const;
  MPoly derivative(Var v) const;

  /// poly = content() * primitive_part(); the primitive part has coprime
  /// integer coefficients, no common monomial factor across its terms,
  /// and positive leading coefficient. content(0) = 0.
  Rat content() const;
  MPoly primitive_part() const;
  /// Componentwise min of all exponent vectors (the common monomial factor).
  Monomial monomial_gcd() const;
  MPoly shift_monomial(const Monomial& by) const;  // multiply by the monomial

  std::string str() const;

  bool operator==(const MPoly& o) const { return terms_ == o.terms_; }
  bool operator!=(const MPoly& o) const { return !(*this == o); }

 private:
  TermMap terms_;
  void add_term(const Monomial& m, const Rat& c);
};

/// Total order on polynomials for canonical sorting of factor bases.
bool mpoly_less(const MPoly& a, const MPoly& b);

// ---- univariate helpers (all require a genuinely univariate input) ----

std::vector<Rat> to_dense(const MPoly& f, Var v);
MPoly from_dense(const std::vector<Rat>& coeffs, Var v);

/// Euclidean division f = q*g + r with deg r < deg g over Q[v].
std::pair<MPoly, MPoly> poly_divmod(const MPoly& f, const MPoly& g, Var v);

/// Primitive gcd via the monic Euclidean algorithm. Both inputs must be
/// univariate in the same variable (constants are allowed).
MPoly poly_gcd(const MPoly& f, const MPoly& g);

/// True iff gcd(f, f') is constant. f must be non-constant and
/// univariate; multivariate input is rejected with std::invalid_argument.
bool is_squarefree(const MPoly& f);

std::int64_t lcm64(std::int64_t a, std::int64_t b);

}  // namespace twistgen

#endif
