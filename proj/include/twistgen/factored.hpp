#ifndef TWISTGEN_FACTORED_HPP
#define TWISTGEN_FACTORED_HPP

#include <cstdint>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "twistgen/mpoly.hpp"
#include "twistgen/rng.hpp"

namespace twistgen {

struct PoleError : std::runtime_error {
  PoleError(const std::string& base, const std::string& assignment)
      : std::runtime_error("division by zero: base (" + base +
                           ") vanishes at " + assignment),
        vanishing_base(base) {}
  std::string vanishing_base;
};

struct ExpandError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

struct Factor {
  MPoly base;
  std::int64_t exponent;
  bool operator==(const Factor&) const = default;
};

/// Rational function kept in factored form: scale * prod base_i^exp_i.
///
/// Canonical form: every base is non-constant, has integer coefficients
/// with content 1, no common monomial factor across its terms, and a
/// positive leading coefficient; single-variable monomial factors are
/// stored per variable; bases are pairwise distinct, sorted, and carry
/// nonzero exponents. Sums and differences go through `expand`, which
/// refuses to expand any multi-term base past kExpandExponentLimit --
/// the constructions in this project only ever need tiny expansions
/// after base-level cancellation, while objects like T^585 must never
/// be expanded.
class FactoredRF {
 public:
  /// Multi-term bases with |exponent| beyond this refuse to expand.
  static constexpr std::int64_t kExpandExponentLimit = 32;
  static constexpr std::size_t kExpandTermLimit = 200000;

  FactoredRF() = default;  // zero
  static FactoredRF from_rat(const Rat& c);
  static FactoredRF from_poly(const MPoly& p);
  static FactoredRF variable(Var v, std::int64_t exponent = 1);

  bool is_zero() const { return scale_ == 0; }
  bool is_constant() const { return factors_.empty(); }
  const Rat& scale() const { return scale_; }
  const std::vector<Factor>& factors() const { return factors_; }

  FactoredRF operator*(const FactoredRF& o) const;
  FactoredRF operator/(const FactoredRF& o) const;
  FactoredRF operator-() const;
  /// Exponent may be negative (throws std::domain_error on zero input).
  FactoredRF pow(std::int64_t e) const;
  FactoredRF inverse() const { return pow(-1); }

  /// Sum via common-part extraction + bounded expansion of the cofactors.
  FactoredRF operator+(const FactoredRF& o) const;
  FactoredRF operator-(const FactoredRF& o) const;

  /// Exact value. Throws PoleError if a base with negative exponent
  /// vanishes; a vanishing positive-exponent base makes the value 0.
  Rat eval(const std::array<Rat, kNumVars>& values) const;
  /// eval that reports a pole instead of throwing (for sampling loops).
  std::optional<Rat> try_eval(const std::array<Rat, kNumVars>& values) const;

  /// v_i -> -v_i (i in 1..4), renormalized.
  FactoredRF signflip(int i) const;
  FactoredRF negate_variable(Var v) const;
  FactoredRF substitute(Var v, const Rat& value) const;

  /// (numerator, denominator) as expanded polynomials. Throws
  /// ExpandError past the expansion limits.
  std::pair<MPoly, MPoly> expand() const;

  bool depends_on(Var v) const;
  /// Degree bounds of numerator / denominator (sum over factors of
  /// |exp| * total degree). Throws ExpandError on int64 overflow.
  std::int64_t numerator_degree_bound() const;
  std::int64_t denominator_degree_bound() const;

  /// `c * (p1)^e1 * (p2)^e2 * ...` with bases in canonical order.
  std::string str() const;
  static FactoredRF parse(const std::string& text);

  bool operator==(const FactoredRF& o) const = default;

 private:
  Rat scale_{0};
  std::vector<Factor> factors_;  // canonical; empty when constant

  void push_normalized(const MPoly& base, std::int64_t exponent);
  void finalize();  // sort + merge equal bases
  friend FactoredRF rf_sum(const FactoredRF& a, const FactoredRF& b, int sign);
};

/// Probabilistic identity test (Schwartz-Zippel style): draws `samples`
/// integer assignments uniformly from a window of width >= 4 * (total
/// degree bound of the cross-multiplied difference), rejects assignments
/// hitting a pole of either side (up to 1000 rejections), and compares
/// exact values. Deterministic given the seed; symmetric in lhs/rhs.
bool rf_equal(const FactoredRF& lhs, const FactoredRF& rhs, int samples,
              std::uint64_t seed);

inline bool rf_equal(const FactoredRF& lhs, const FactoredRF& rhs) {
  return rf_equal(lhs, rhs, 5, 0);
}

}  // namespace twistgen

#endif
