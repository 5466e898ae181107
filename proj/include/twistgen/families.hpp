#ifndef TWISTGEN_FAMILIES_HPP
#define TWISTGEN_FAMILIES_HPP

#include <optional>
#include <string>
#include <vector>

#include "twistgen/factored.hpp"
#include "twistgen/mpoly.hpp"

namespace twistgen {

/// Input validation failure (maps to CLI exit code 2).
struct InputError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

enum class FamilyKind { A, A3, B, B3, C };

const char* family_name(FamilyKind k);
std::optional<FamilyKind> family_from_name(const std::string& name);

/// Inputs of a construction.
///   A:  f square-free with deg >= 3, m = (m1,m2,m3), consts = (a,b,c)
///   A3: as A with a single m and a single constant
///   B:  deg f in {3,4}, base point (u, y_u) of infinite order on y^2=f(x)
///   B3: as B with a single m and a single constant
///   C:  no f, m = (m1..m4), consts = (a,b,c,d)
/// All m_i odd and >= 3; all constants nonzero. The constants of the
/// odd/even twist curves enter squared (except d of family C), exactly
/// as in the theorem statements.
struct FamilyInputs {
  FamilyKind family = FamilyKind::A;
  MPoly f;
  std::vector<std::int64_t> m;
  std::vector<Rat> consts;
  std::optional<std::pair<Rat, Rat>> base_point;
};

enum class ModelKind { QuadraticTwist, OddTwist, EvenTwist };

const char* model_kind_name(ModelKind k);
std::optional<ModelKind> model_kind_from_name(const std::string& name);

/// One member curve of a constructed family:
///   QuadraticTwist: D y^2 = f(x)
///   OddTwist:       y^2 = D x^m + k
///   EvenTwist:      y^2 = x^m + k D
struct CurveModel {
  ModelKind kind = ModelKind::OddTwist;
  std::int64_t m = 0;  // 0 for the quadratic twist
  Rat constant;        // k as it appears in the equation
  MPoly f;             // quadratic twist only
  std::string equation_str() const;
  /// Genus of the smooth model (deg f or m fixes it).
  int genus() const;
};

struct PointOnCurve {
  std::size_t curve_index = 0;
  FactoredRF x, y;
};

/// A constructed family: the twisting function D, its building blocks,
/// the member curves, and their rational points.
struct TwistFamily {
  FamilyInputs inputs;
  std::int64_t M = 0;
  std::vector<std::int64_t> M_i;
  std::array<FactoredRF, 3> w;
  FactoredRF T, D;
  std::vector<CurveModel> curves;
  std::vector<PointOnCurve> points;
};

/// Left- and right-hand side of the curve equation with the point
/// substituted in (the membership identity to be tested).
std::pair<FactoredRF, FactoredRF> membership_sides(const CurveModel& curve,
                                                   const FactoredRF& D,
                                                   const PointOnCurve& point);

TwistFamily construct_A(const FamilyInputs& inputs);
TwistFamily construct_A_rank3(const FamilyInputs& inputs);
TwistFamily construct_B(const FamilyInputs& inputs);
TwistFamily construct_B_rank3(const FamilyInputs& inputs);
TwistFamily construct_C(const FamilyInputs& inputs);

/// Dispatch on inputs.family.
TwistFamily construct_family(const FamilyInputs& inputs);

}  // namespace twistgen

#endif
