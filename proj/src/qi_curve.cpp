#include "twistgen/qi_curve.hpp"

#include <sstream>

namespace twistgen {

ProjPoint ProjPoint::make(const Rat& p, const Rat& q, const Rat& r,
                          const Rat& w) {
  std::array<Rat, 4> c{p, q, r, w};
  if (p == 0 && q == 0 && r == 0 && w == 0)
    throw std::invalid_argument("projective point with all-zero coordinates");
  if (w != 0) {
    for (auto& x : c) x /= w;
    return ProjPoint{c};
  }
  // w = 0: primitive integer vector, positive first nonzero coordinate
  mpz_class den_lcm(1);
  for (const auto& x : c)
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), x.get_den().get_mpz_t());
  mpz_class gcd(0);
  std::array<mpz_class, 4> ints;
  for (int i = 0; i < 4; ++i) {
    ints[i] = c[i].get_num() * (den_lcm / c[i].get_den());
    mpz_gcd(gcd.get_mpz_t(), gcd.get_mpz_t(), ints[i].get_mpz_t());
  }
  int first = 0;
  while (ints[first] == 0) ++first;
  if (ints[first] < 0) gcd = -gcd;
  for (int i = 0; i < 4; ++i) c[i] = Rat(ints[i] / gcd);
  return ProjPoint{c};
}

std::string ProjPoint::str() const {
  std::ostringstream out;
  out << "[" << rat_str(c[0]) << ":" << rat_str(c[1]) << ":" << rat_str(c[2])
      << ":" << rat_str(c[3]) << "]";
  return out.str();
}

QICurve QICurve::normal_form(const Rat& t1, const Rat& t2, const Rat& t3) {
  return QICurve{{Rat(1), Rat(1), Rat(1)}, {t1 * t1, t2 * t2, t3 * t3}};
}

QICurve QICurve::c_family(const std::array<Rat, 3>& ks,
                          const std::array<std::int64_t, 3>& m,
                          const std::array<Rat, 3>& v) {
  QICurve c;
  for (int i = 0; i < 3; ++i) {
    c.lambda[i] = rat_pow(v[i], 2 * m[i]);
    c.kappa[i] = ks[i] * c.lambda[i];
  }
  return c;
}

QICurve QICurve::h_family(const std::array<Rat, 3>& ks,
                          const std::array<std::int64_t, 3>& m,
                          const std::array<Rat, 3>& v, const Rat& f_of_u) {
  QICurve c;
  for (int i = 0; i < 3; ++i) {
    c.lambda[i] = Rat(1);
    for (int j = 0; j < 3; ++j)
      if (j != i) c.lambda[i] *= rat_pow(v[j], 2 * m[j]);
    c.kappa[i] = ks[i] * f_of_u * c.lambda[i];
  }
  return c;
}

bool contains(const QICurve& curve, const ProjPoint& P) {
  const Rat w2 = P.c[3] * P.c[3];
  std::array<Rat, 3> side;
  for (int i = 0; i < 3; ++i)
    side[i] = curve.lambda[i] * P.c[i] * P.c[i] - curve.kappa[i] * w2;
  return side[0] == side[1] && side[1] == side[2];
}

bool is_nonsingular(const QICurve& curve) {
  for (const auto& l : curve.lambda)
    if (l == 0) return false;
  // pencil mu*Q1 + Q2 with Q1 = diag(l1, -l2, 0, -(k1-k2)),
  // Q2 = diag(0, l2, -l3, -(k2-k3)); determinant as a polynomial in mu.
  const MPoly mu = MPoly::variable(Var::x);
  const MPoly e0 = mu * curve.lambda[0];
  const MPoly e1 = MPoly::constant(curve.lambda[1]) - mu * curve.lambda[1];
  const MPoly e2 = MPoly::constant(-curve.lambda[2]);
  const MPoly e3 = -(mu * (curve.kappa[0] - curve.kappa[1]) +
                     MPoly::constant(curve.kappa[1] - curve.kappa[2]));
  const MPoly det = e0 * e1 * e2 * e3;
  if (det.is_zero() || det.degree_in(Var::x) < 3) return false;
  return is_squarefree(det);
}

std::vector<ProjPoint> two_torsion(const QICurve& curve) {
  const auto s23 = rat_sqrt(curve.lambda[1] * curve.lambda[2]);
  const auto s13 = rat_sqrt(curve.lambda[0] * curve.lambda[2]);
  const auto s12 = rat_sqrt(curve.lambda[0] * curve.lambda[1]);
  if (!s23 || !s13 || !s12)
    throw std::domain_error("two-torsion not rational");
  static constexpr int signs[4][3] = {
      {1, 1, 1}, {1, -1, -1}, {-1, 1, -1}, {-1, -1, 1}};
  std::vector<ProjPoint> out;
  for (const auto& s : signs)
    out.push_back(
        ProjPoint::make(s[0] * *s23, s[1] * *s13, s[2] * *s12, Rat(0)));
  return out;
}

namespace {

void require_nonzero(std::initializer_list<Rat> values, const char* what) {
  for (const auto& v : values)
    if (v == 0) throw std::domain_error(std::string("zero input: ") + what);
}

FactoredRF v_power(int i, std::int64_t e) {
  return FactoredRF::variable(static_cast<Var>(static_cast<int>(Var::v1) + i),
                              e);
}

FactoredRF display_coordinate(const MPoly& num, const Rat& denom_scale,
                              const std::array<std::int64_t, 3>& dexp) {
  FactoredRF r = FactoredRF::from_poly(num);
  r = r * FactoredRF::from_rat(Rat(1) / denom_scale);
  for (int i = 0; i < 3; ++i)
    if (dexp[i] != 0) r = r * v_power(i, -dexp[i]);
  return r;
}

}  // namespace

std::array<FactoredRF, 3> double_C_explicit(
    const Rat& a, const Rat& b, const Rat& c,
    const std::array<std::int64_t, 3>& m) {
  require_nonzero({a, b, c}, "a, b, c");
  for (auto mi : m)
    if (mi < 3 || mi % 2 == 0)
      throw std::domain_error("m_i must be odd and >= 3");
  const Rat ab = a * a * b * b, ac = a * a * c * c, bc = b * b * c * c;
  const MPoly P12 = MPoly::variable(Var::v1, 2 * m[0]) *
                    MPoly::variable(Var::v2, 2 * m[1]);
  const MPoly P13 = MPoly::variable(Var::v1, 2 * m[0]) *
                    MPoly::variable(Var::v3, 2 * m[2]);
  const MPoly P23 = MPoly::variable(Var::v2, 2 * m[1]) *
                    MPoly::variable(Var::v3, 2 * m[2]);
  const Rat ds = 2 * a * b * c;
  return {
      display_coordinate(P12 * ab + P13 * ac - P23 * bc, ds,
                         {2 * m[0], m[1], m[2]}),
      display_coordinate(P12 * ab - P13 * ac + P23 * bc, ds,
                         {m[0], 2 * m[1], m[2]}),
      display_coordinate(-(P12 * ab) + P13 * ac + P23 * bc, ds,
                         {m[0], m[1], 2 * m[2]}),
  };
}

std::array<Rat, 3> double_C_explicit(const Rat& a, const Rat& b, const Rat& c,
                                     const std::array<std::int64_t, 3>& m,
                                     const std::array<Rat, 3>& v) {
  require_nonzero({v[0], v[1], v[2]}, "v_i");
  const auto sym = double_C_explicit(a, b, c, m);
  std::array<Rat, kNumVars> values;
  values.fill(Rat(0));
  values[static_cast<int>(Var::v1)] = v[0];
  values[static_cast<int>(Var::v2)] = v[1];
  values[static_cast<int>(Var::v3)] = v[2];
  return {sym[0].eval(values), sym[1].eval(values), sym[2].eval(values)};
}

std::array<FactoredRF, 3> double_H_explicit(
    const Rat& a, const Rat& b, const Rat& c,
    const std::array<std::int64_t, 3>& m, const Rat& y_u) {
  require_nonzero({a, b, c, y_u}, "a, b, c, y_u");
  for (auto mi : m)
    if (mi < 3 || mi % 2 == 0)
      throw std::domain_error("m_i must be odd and >= 3");
  const Rat ab = a * a * b * b, ac = a * a * c * c, bc = b * b * c * c;
  const MPoly V1 = MPoly::variable(Var::v1, 2 * m[0]);
  const MPoly V2 = MPoly::variable(Var::v2, 2 * m[1]);
  const MPoly V3 = MPoly::variable(Var::v3, 2 * m[2]);
  const Rat ds = 2 * a * b * c;
  const auto with_yu = [&](const MPoly& num,
                           const std::array<std::int64_t, 3>& dexp) {
    return display_coordinate(num, ds, dexp) * FactoredRF::from_rat(y_u);
  };
  return {
      with_yu(V3 * ab + V2 * ac - V1 * bc, {0, m[1], m[2]}),
      with_yu(V3 * ab - V2 * ac + V1 * bc, {m[0], 0, m[2]}),
      with_yu(-(V3 * ab) + V2 * ac + V1 * bc, {m[0], m[1], 0}),
  };
}

std::array<Rat, 3> double_H_explicit(const Rat& a, const Rat& b, const Rat& c,
                                     const std::array<std::int64_t, 3>& m,
                                     const Rat& y_u,
                                     const std::array<Rat, 3>& v) {
  require_nonzero({v[0], v[1], v[2]}, "v_i");
  const auto sym = double_H_explicit(a, b, c, m, y_u);
  std::array<Rat, kNumVars> values;
  values.fill(Rat(0));
  values[static_cast<int>(Var::v1)] = v[0];
  values[static_cast<int>(Var::v2)] = v[1];
  values[static_cast<int>(Var::v3)] = v[2];
  return {sym[0].eval(values), sym[1].eval(values), sym[2].eval(values)};
}

}  // namespace twistgen
