#include "twistgen/families.hpp"

#include <limits>
#include <sstream>

#include "twistgen/qi_curve.hpp"
#include "twistgen/reduction.hpp"

namespace twistgen {

namespace {

constexpr std::uint64_t kConstructSeed = 0x7715;

FactoredRF rf_rat(const Rat& r) { return FactoredRF::from_rat(r); }

FactoredRF rf_var(Var v, std::int64_t e = 1) {
  return FactoredRF::variable(v, e);
}

void check_odd_m(const std::vector<std::int64_t>& m, std::size_t count) {
  if (m.size() != count)
    throw InputError("expected " + std::to_string(count) +
                     " twist degrees m_i");
  for (const auto mi : m)
    if (mi < 3 || mi % 2 == 0)
      throw InputError("m_i must be odd and at least 3 (got " +
                       std::to_string(mi) + ")");
}

void check_consts(const std::vector<Rat>& cs, std::size_t count) {
  if (cs.size() != count)
    throw InputError("expected " + std::to_string(count) + " constants");
  for (const auto& c : cs)
    if (c == 0) throw InputError("constants must be nonzero");
}

void check_f_squarefree(const MPoly& f, std::int64_t min_deg,
                        std::int64_t max_deg) {
  if (f.is_zero() || f.is_constant())
    throw InputError("f must be a non-constant polynomial in x");
  for (int i = 0; i < kNumVars; ++i) {
    const Var v = static_cast<Var>(i);
    if (v != Var::x && f.depends_on(v))
      throw InputError("f must be univariate in x");
  }
  const std::int64_t deg = f.degree_in(Var::x);
  if (deg < min_deg || deg > max_deg)
    throw InputError("deg f = " + std::to_string(deg) +
                     " is outside the allowed range [" +
                     std::to_string(min_deg) + ", " + std::to_string(max_deg) +
                     "]");
  if (!is_squarefree(f)) throw InputError("f is not square-free");
}

/// Substitute a rational function for x in f (Horner).
FactoredRF compose_f(const MPoly& f, const FactoredRF& x_value) {
  const auto cs = to_dense(f, Var::x);
  FactoredRF acc = rf_rat(cs.back());
  for (std::size_t i = cs.size() - 1; i-- > 0;)
    acc = acc * x_value + rf_rat(cs[i]);
  return acc;
}

void verify_constructed(const TwistFamily& fam) {
  for (std::size_t i = 0; i < fam.points.size(); ++i) {
    const auto [lhs, rhs] =
        membership_sides(fam.curves[fam.points[i].curve_index], fam.D,
                         fam.points[i]);
    if (!rf_equal(lhs, rhs, 5, kConstructSeed + i))
      throw std::logic_error("constructed point " + std::to_string(i) +
                             " fails its curve equation");
  }
}

std::array<std::int64_t, 3> triple(const std::vector<std::int64_t>& m) {
  return {m[0], m[1], m[2]};
}

}  // namespace

const char* family_name(FamilyKind k) {
  switch (k) {
    case FamilyKind::A: return "A";
    case FamilyKind::A3: return "A3";
    case FamilyKind::B: return "B";
    case FamilyKind::B3: return "B3";
    case FamilyKind::C: return "C";
  }
  return "?";
}

std::optional<FamilyKind> family_from_name(const std::string& name) {
  if (name == "A") return FamilyKind::A;
  if (name == "A3") return FamilyKind::A3;
  if (name == "B") return FamilyKind::B;
  if (name == "B3") return FamilyKind::B3;
  if (name == "C") return FamilyKind::C;
  return std::nullopt;
}

const char* model_kind_name(ModelKind k) {
  switch (k) {
    case ModelKind::QuadraticTwist: return "quadratic_twist";
    case ModelKind::OddTwist: return "odd_twist";
    case ModelKind::EvenTwist: return "even_twist";
  }
  return "?";
}

std::optional<ModelKind> model_kind_from_name(const std::string& name) {
  if (name == "quadratic_twist") return ModelKind::QuadraticTwist;
  if (name == "odd_twist") return ModelKind::OddTwist;
  if (name == "even_twist") return ModelKind::EvenTwist;
  return std::nullopt;
}

std::string CurveModel::equation_str() const {
  std::ostringstream out;
  switch (kind) {
    case ModelKind::QuadraticTwist:
      out << "D*y^2 = " << f.str();
      break;
    case ModelKind::OddTwist:
      out << "y^2 = D*x^" << m << " + " << rat_str(constant);
      break;
    case ModelKind::EvenTwist:
      out << "y^2 = x^" << m << " + " << rat_str(constant) << "*D";
      break;
  }
  return out.str();
}

int CurveModel::genus() const {
  const std::int64_t deg =
      kind == ModelKind::QuadraticTwist ? f.degree_in(Var::x) : m;
  return static_cast<int>((deg - 1) / 2);
}

std::pair<FactoredRF, FactoredRF> membership_sides(const CurveModel& curve,
                                                   const FactoredRF& D,
                                                   const PointOnCurve& point) {
  const FactoredRF y2 = point.y * point.y;
  switch (curve.kind) {
    case ModelKind::QuadraticTwist:
      return {D * y2, compose_f(curve.f, point.x)};
    case ModelKind::OddTwist:
      return {y2, D * point.x.pow(curve.m) + rf_rat(curve.constant)};
    case ModelKind::EvenTwist:
      return {y2, point.x.pow(curve.m) + rf_rat(curve.constant) * D};
  }
  throw std::logic_error("unreachable");
}

namespace {

/// Shared core of families A and A3 (and the w/T/D part of C).
TwistFamily build_A_core(const FamilyInputs& inputs,
                         const std::vector<std::int64_t>& m,
                         const std::array<Rat, 3>& abc) {
  TwistFamily fam;
  fam.inputs = inputs;
  fam.M = lcm64(lcm64(m[0], m[1]), m[2]);
  for (const auto mi : m) fam.M_i.push_back(fam.M / mi);
  fam.w = double_C_explicit(abc[0], abc[1], abc[2], triple(m));
  const FactoredRF w3sq_c2 =
      fam.w[2] * fam.w[2] - rf_rat(abc[2] * abc[2]);
  if (w3sq_c2.is_zero())
    throw InputError("degenerate parameters: w3^2 - c^2 vanishes identically");
  const FactoredRF f_of_u =
      FactoredRF::from_poly(inputs.f.rename(Var::x, Var::u));
  fam.T = f_of_u * (rf_var(Var::v3, 2 * m[2]) * w3sq_c2).pow(-1);
  fam.D = (fam.w[0] * fam.w[0] - rf_rat(abc[0] * abc[0])) *
          rf_var(Var::v1, 2 * m[0]) * fam.T.pow(fam.M);
  return fam;
}

}  // namespace

TwistFamily construct_A(const FamilyInputs& inputs) {
  check_odd_m(inputs.m, 3);
  check_consts(inputs.consts, 3);
  check_f_squarefree(inputs.f, 3, std::numeric_limits<std::int64_t>::max());
  const std::array<Rat, 3> abc{inputs.consts[0], inputs.consts[1],
                               inputs.consts[2]};
  TwistFamily fam = build_A_core(inputs, inputs.m, abc);

  fam.curves.push_back(
      {ModelKind::QuadraticTwist, 0, Rat(0), inputs.f});
  for (int i = 0; i < 3; ++i)
    fam.curves.push_back(
        {ModelKind::OddTwist, inputs.m[i], abc[i] * abc[i], MPoly()});

  // P = (u, 1/T^{(M-1)/2}) on D y^2 = f(x)
  fam.points.push_back(
      {0, rf_var(Var::u), fam.T.pow(-(fam.M - 1) / 2)});
  // P_i = (1/(v_i^2 T^{M_i}), w_i) on y^2 = D x^{m_i} + k_i^2
  for (int i = 0; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    fam.points.push_back({static_cast<std::size_t>(i + 1),
                          rf_var(vi, -2) * fam.T.pow(-fam.M_i[i]),
                          fam.w[i]});
  }
  verify_constructed(fam);
  return fam;
}

TwistFamily construct_A_rank3(const FamilyInputs& inputs) {
  check_odd_m(inputs.m, 1);
  check_consts(inputs.consts, 1);
  check_f_squarefree(inputs.f, 3, std::numeric_limits<std::int64_t>::max());
  const Rat a = inputs.consts[0];
  const std::vector<std::int64_t> m3{inputs.m[0], inputs.m[0], inputs.m[0]};
  TwistFamily fam = build_A_core(inputs, m3, {a, a, a});

  fam.curves.push_back({ModelKind::QuadraticTwist, 0, Rat(0), inputs.f});
  fam.curves.push_back({ModelKind::OddTwist, inputs.m[0], a * a, MPoly()});

  fam.points.push_back({0, rf_var(Var::u), fam.T.pow(-(fam.M - 1) / 2)});
  // the three points land on the same curve; M_i = 1
  for (int i = 0; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    fam.points.push_back(
        {1, rf_var(vi, -2) * fam.T.pow(-1), fam.w[i]});
  }
  verify_constructed(fam);
  return fam;
}

namespace {

Rat checked_base_point(const FamilyInputs& inputs) {
  if (!inputs.base_point)
    throw InputError("families B/B3 need a base point (u, y_u)");
  const auto& [u0, yu] = *inputs.base_point;
  if (inputs.f.substitute(Var::x, u0).constant_value() != yu * yu)
    throw InputError("base point does not satisfy y_u^2 = f(u)");
  if (yu == 0)
    throw InputError("base point must have a nonzero y-coordinate");
  const auto cert =
      certify_on_hyperelliptic(to_dense(inputs.f, Var::x), u0, yu);
  if (!cert.infinite_order)
    throw InputError("base point fails the infinite-order certificate "
                     "(torsion of order " +
                     std::to_string(cert.torsion_order) + ")");
  return yu;
}

TwistFamily build_B_core(const FamilyInputs& inputs,
                         const std::vector<std::int64_t>& m,
                         const std::array<Rat, 3>& abc, const Rat& yu) {
  TwistFamily fam;
  fam.inputs = inputs;
  fam.M = lcm64(lcm64(m[0], m[1]), m[2]);
  for (const auto mi : m) fam.M_i.push_back(fam.M / mi);
  fam.w = double_H_explicit(abc[0], abc[1], abc[2], triple(m), yu);
  const Rat fu = yu * yu;
  fam.T = (fam.w[0] * fam.w[0] - rf_rat(abc[0] * abc[0] * fu)) *
          rf_var(Var::v1, -2 * m[0]);
  if (fam.T.is_zero())
    throw InputError("degenerate parameters: T vanishes identically");
  // the defining system: the same value from all three coordinates
  for (int i = 1; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    const FactoredRF other =
        (fam.w[i] * fam.w[i] - rf_rat(abc[i] * abc[i] * fu)) *
        rf_var(vi, -2 * m[i]);
    if (!rf_equal(fam.T, other, 5, kConstructSeed + 90 + i))
      throw std::logic_error("T is not symmetric across the coordinates");
  }
  fam.D = rf_rat(fu) * fam.T.pow(fam.M - 1);
  return fam;
}

}  // namespace

TwistFamily construct_B(const FamilyInputs& inputs) {
  check_odd_m(inputs.m, 3);
  check_consts(inputs.consts, 3);
  check_f_squarefree(inputs.f, 3, 4);
  const Rat yu = checked_base_point(inputs);
  const Rat u0 = inputs.base_point->first;
  const std::array<Rat, 3> abc{inputs.consts[0], inputs.consts[1],
                               inputs.consts[2]};
  TwistFamily fam = build_B_core(inputs, inputs.m, abc, yu);

  fam.curves.push_back({ModelKind::QuadraticTwist, 0, Rat(0), inputs.f});
  for (int i = 0; i < 3; ++i)
    fam.curves.push_back(
        {ModelKind::EvenTwist, inputs.m[i], abc[i] * abc[i], MPoly()});

  // P = (u, 1/T^{(M-1)/2}) with u frozen at the base point
  fam.points.push_back({0, rf_rat(u0), fam.T.pow(-(fam.M - 1) / 2)});
  // P_i = (v_i^2 T^{M_i}, w_i T^{(M-1)/2})
  for (int i = 0; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    fam.points.push_back({static_cast<std::size_t>(i + 1),
                          rf_var(vi, 2) * fam.T.pow(fam.M_i[i]),
                          fam.w[i] * fam.T.pow((fam.M - 1) / 2)});
  }
  verify_constructed(fam);
  return fam;
}

TwistFamily construct_B_rank3(const FamilyInputs& inputs) {
  check_odd_m(inputs.m, 1);
  check_consts(inputs.consts, 1);
  check_f_squarefree(inputs.f, 3, 4);
  const Rat yu = checked_base_point(inputs);
  const Rat u0 = inputs.base_point->first;
  const Rat a = inputs.consts[0];
  const std::vector<std::int64_t> m3{inputs.m[0], inputs.m[0], inputs.m[0]};
  TwistFamily fam = build_B_core(inputs, m3, {a, a, a}, yu);

  fam.curves.push_back({ModelKind::QuadraticTwist, 0, Rat(0), inputs.f});
  fam.curves.push_back({ModelKind::EvenTwist, inputs.m[0], a * a, MPoly()});

  fam.points.push_back({0, rf_rat(u0), fam.T.pow(-(fam.M - 1) / 2)});
  // P_i = (v_i^2 T, w_i T^{(m-1)/2}): the T factor in the x-coordinate
  // is forced by the membership identity (M_i = 1 here)
  for (int i = 0; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    fam.points.push_back({1, rf_var(vi, 2) * fam.T,
                          fam.w[i] * fam.T.pow((fam.M - 1) / 2)});
  }
  verify_constructed(fam);
  return fam;
}

TwistFamily construct_C(const FamilyInputs& inputs) {
  check_odd_m(inputs.m, 4);
  check_consts(inputs.consts, 4);
  if (!inputs.f.is_zero())
    throw InputError("family C takes no polynomial f");
  const std::array<Rat, 3> abc{inputs.consts[0], inputs.consts[1],
                               inputs.consts[2]};
  const Rat d = inputs.consts[3];
  const std::vector<std::int64_t> m123{inputs.m[0], inputs.m[1], inputs.m[2]};
  const std::int64_t m4 = inputs.m[3];

  TwistFamily fam;
  fam.inputs = inputs;
  fam.M = lcm64(lcm64(lcm64(inputs.m[0], inputs.m[1]), inputs.m[2]), m4);
  for (const auto mi : inputs.m) fam.M_i.push_back(fam.M / mi);
  fam.w = double_C_explicit(abc[0], abc[1], abc[2], triple(m123));
  const FactoredRF w3sq_c2 =
      fam.w[2] * fam.w[2] - rf_rat(abc[2] * abc[2]);
  const FactoredRF denom =
      rf_var(Var::v4, 2 * m4) +
      rf_rat(d) * w3sq_c2 * rf_var(Var::v3, 2 * inputs.m[2]);
  if (denom.is_zero())
    throw InputError("degenerate parameters: the denominator of T vanishes");
  fam.T = rf_var(Var::u, 2) * denom.pow(-1);
  fam.D = (fam.w[0] * fam.w[0] - rf_rat(abc[0] * abc[0])) *
          rf_var(Var::v1, 2 * inputs.m[0]) * fam.T.pow(fam.M);

  for (int i = 0; i < 3; ++i)
    fam.curves.push_back(
        {ModelKind::OddTwist, inputs.m[i], abc[i] * abc[i], MPoly()});
  fam.curves.push_back({ModelKind::EvenTwist, m4, d, MPoly()});

  for (int i = 0; i < 3; ++i) {
    const Var vi = static_cast<Var>(static_cast<int>(Var::v1) + i);
    fam.points.push_back({static_cast<std::size_t>(i),
                          rf_var(vi, -2) * fam.T.pow(-fam.M_i[i]),
                          fam.w[i]});
  }
  // P_4 = (v_4^2 T^{M_4}, u T^{(M-1)/2}); the M_4 exponent (not m_4) is
  // what the simplified system and the membership identity require
  fam.points.push_back({3, rf_var(Var::v4, 2) * fam.T.pow(fam.M_i[3]),
                        rf_var(Var::u) * fam.T.pow((fam.M - 1) / 2)});
  verify_constructed(fam);
  return fam;
}

TwistFamily construct_family(const FamilyInputs& inputs) {
  switch (inputs.family) {
    case FamilyKind::A: return construct_A(inputs);
    case FamilyKind::A3: return construct_A_rank3(inputs);
    case FamilyKind::B: return construct_B(inputs);
    case FamilyKind::B3: return construct_B_rank3(inputs);
    case FamilyKind::C: return construct_C(inputs);
  }
  throw std::logic_error("unreachable");
}

}  // namespace twistgen
