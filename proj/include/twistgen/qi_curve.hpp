#ifndef TWISTGEN_QI_CURVE_HPP
#define TWISTGEN_QI_CURVE_HPP

#include <array>
#include <vector>

#include "twistgen/factored.hpp"
#include "twistgen/mpoly.hpp"

namespace twistgen {

/// Point of P^3 with exact rational coordinates, kept normalized:
/// last coordinate 1 when w != 0; otherwise a primitive integer vector
/// with positive first nonzero coordinate.
struct ProjPoint {
  std::array<Rat, 4> c;

  static ProjPoint make(const Rat& p, const Rat& q, const Rat& r,
                        const Rat& w);
  bool operator==(const ProjPoint& o) const { return c == o.c; }
  bool at_infinity() const { return c[3] == 0; }
  std::string str() const;
};

/// Genus-1 curve presented as an intersection of two diagonal quadrics:
///   { [p:q:r:w] : l1 p^2 - k1 w^2 = l2 q^2 - k2 w^2 = l3 r^2 - k3 w^2 }.
struct QICurve {
  std::array<Rat, 3> lambda;
  std::array<Rat, 3> kappa;

  /// C_{T1,T2,T3}: x^2 - T1^2 = y^2 - T2^2 = z^2 - T3^2.
  static QICurve normal_form(const Rat& t1, const Rat& t2, const Rat& t3);
  /// Specialized C-family curve: lambda_i = v_i^{2 m_i}, kappa_i = k_i lambda_i
  /// (pass the squared constants in `ks`).
  static QICurve c_family(const std::array<Rat, 3>& ks,
                          const std::array<std::int64_t, 3>& m,
                          const std::array<Rat, 3>& v);
  /// Specialized H-family curve: lambda_i = prod_{j != i} v_j^{2 m_j},
  /// kappa_i = k_i * f(u) * lambda_i.
  static QICurve h_family(const std::array<Rat, 3>& ks,
                          const std::array<std::int64_t, 3>& m,
                          const std::array<Rat, 3>& v, const Rat& f_of_u);
};

/// Exact membership: both quadric differences vanish at P.
bool contains(const QICurve& curve, const ProjPoint& P);

/// Smoothness of the quadric pencil: det(mu Q1 + Q2) must be a cubic or
/// quartic in mu that is square-free (a degree drop below 3 means the
/// binary quartic has a multiple root at infinity).
bool is_nonsingular(const QICurve& curve);

/// The four rational points at w = 0, sign patterns (+,+,+), (+,-,-),
/// (-,+,-), (-,-,+). Requires lambda_i * lambda_j square for i != j;
/// throws std::domain_error("two-torsion not rational") otherwise.
std::vector<ProjPoint> two_torsion(const QICurve& curve);

/// The displayed coordinates of 2[a:b:c:1] on the curve C_{a^2,b^2,c^2}
/// over Q(v1,v2,v3):
///   w1 = (a^2 b^2 v1^{2m1} v2^{2m2} + a^2 c^2 v1^{2m1} v3^{2m3}
///         - b^2 c^2 v2^{2m2} v3^{2m3}) / (2abc v1^{2m1} v2^{m2} v3^{m3})
/// and cyclic sign variants for w2, w3.
std::array<FactoredRF, 3> double_C_explicit(const Rat& a, const Rat& b,
                                            const Rat& c,
                                            const std::array<std::int64_t, 3>& m);
std::array<Rat, 3> double_C_explicit(const Rat& a, const Rat& b, const Rat& c,
                                     const std::array<std::int64_t, 3>& m,
                                     const std::array<Rat, 3>& v);

/// The displayed coordinates of 2[a y_u : b y_u : c y_u : 1] on the
/// curve H_{a^2,b^2,c^2} (with f(u) = y_u^2) over Q(v1,v2,v3).
std::array<FactoredRF, 3> double_H_explicit(const Rat& a, const Rat& b,
                                            const Rat& c,
                                            const std::array<std::int64_t, 3>& m,
                                            const Rat& y_u);
std::array<Rat, 3> double_H_explicit(const Rat& a, const Rat& b, const Rat& c,
                                     const std::array<std::int64_t, 3>& m,
                                     const Rat& y_u,
                                     const std::array<Rat, 3>& v);

}  // namespace twistgen

#endif
