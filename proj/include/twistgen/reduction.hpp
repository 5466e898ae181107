#ifndef TWISTGEN_REDUCTION_HPP
#define TWISTGEN_REDUCTION_HPP

#include <array>
#include <map>
#include <optional>

#include "twistgen/qi_curve.hpp"
#include "twistgen/weierstrass.hpp"

namespace twistgen {

struct DegenerateError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

using Mat4 = std::array<std::array<Rat, 4>, 4>;

/// A pair of quadric hypersurfaces in P^3 as symmetric 4x4 matrices.
struct QuadricPair {
  Mat4 q1, q2;
  Rat eval1(const std::array<Rat, 4>& p) const;
  Rat eval2(const std::array<Rat, 4>& p) const;
};

QuadricPair quadrics_from_qicurve(const QICurve& curve);

/// y^2 = g(x) with deg g = 4 embedded in P^3 via [x : y : x^2 : 1]:
///   x^2 = z w  and  y^2 = g4 z^2 + g3 z x + g2 z w + g1 x w + g0 w^2.
QuadricPair quadrics_from_quartic(const std::array<Rat, 5>& g);

/// Birational maps between a smooth quadric-intersection curve with a
/// rational point and a Weierstrass model, built exactly over Q:
/// project the space quartic away from `origin` onto a plane cubic,
/// then reduce the cubic with its distinguished rational point (the
/// image of the tangent line at `origin`) to Weierstrass form.
/// forward(origin) is the point at infinity of the model. If the
/// projection or the cubic reduction degenerates, the construction
/// retries after a seeded random invertible linear change of
/// coordinates; failure after `max_retries` retries throws.
class Reduction {
 public:
  Reduction(const QuadricPair& quadrics, const std::array<Rat, 4>& origin,
            int max_retries = 10);
  Reduction(const QICurve& curve, const ProjPoint& origin,
            int max_retries = 10);

  const WeierstrassModel& model() const { return model_; }
  /// Number of random coordinate changes that were needed (0 normally).
  int coordinate_changes() const { return retries_; }

  EPoint forward(const ProjPoint& P) const;
  ProjPoint backward(const EPoint& P) const;

 private:
  using Mat3 = std::array<std::array<Rat, 3>, 3>;
  using Vec3 = std::array<Rat, 3>;
  using Vec4 = std::array<Rat, 4>;
  /// Coefficients of a homogeneous cubic in three variables.
  using Cubic = std::map<std::array<int, 3>, Rat>;

  void attempt(const QuadricPair& quadrics, const Vec4& origin);

  Mat4 A_, Ainv_;          // P^3 change moving [0:0:0:1] to the origin
  Vec3 L1_, L2_;           // Q_i = w * L_i(p,q,r) + M_i(p,q,r)
  Mat3 M1_, M2_;
  Cubic cubic_;            // projected cubic M1*L2 - M2*L1
  Vec3 T0_;                // image of the tangent line at the origin
  Mat3 B_, Binv_;          // P^2 change normalizing the cubic
  bool flex_ = false;
  // non-flex case coefficients of the normalized cubic
  Rat a120_, a021_, a111_, a012_, a201_, a102_, a003_, cscale_;
  // flex case
  Rat gamma_;
  WeierstrassModel model_;
  int retries_ = 0;

  EPoint cubic_to_model(const Vec3& normalized) const;
  Vec3 model_to_cubic(const EPoint& P) const;
};

/// Spec-level wrapper: model plus maps for a nonsingular specialized
/// curve with a rational origin on it.
Reduction reduce_to_weierstrass(const QICurve& curve, const ProjPoint& origin);

/// Group law on the curve with identity `origin`, via the reduction.
ProjPoint group_add(const Reduction& red, const ProjPoint& P,
                    const ProjPoint& Q);
ProjPoint group_add(const QICurve& curve, const ProjPoint& origin,
                    const ProjPoint& P, const ProjPoint& Q);

OrderCertificate certify_infinite_order(const QICurve& curve,
                                        const ProjPoint& origin,
                                        const ProjPoint& P);

/// Weierstrass model of the genus-1 curve y^2 = g(x) (deg g in {3,4})
/// together with the point map. Degree 4 needs a rational point with
/// nonzero y to serve as the origin of the group law; the mapped point
/// then represents the divisor class (P) - (x0, -y0).
class Genus1Model {
 public:
  Genus1Model(const std::vector<Rat>& g_ascending,
              std::optional<std::pair<Rat, Rat>> base_point = std::nullopt);
  const WeierstrassModel& model() const;
  /// Maps a rational point of y^2 = g(x) to the model.
  EPoint map_point(const Rat& x, const Rat& y) const;

 private:
  int degree_;
  Rat lead_;                      // deg-3 scaling
  std::optional<Reduction> red_;  // deg-4 path
  WeierstrassModel model_storage_;
};

/// Order certificate for (x0, y0) on y^2 = g(x), deg g in {3,4}.
OrderCertificate certify_on_hyperelliptic(const std::vector<Rat>& g_ascending,
                                          const Rat& x0, const Rat& y0);

}  // namespace twistgen

#endif
