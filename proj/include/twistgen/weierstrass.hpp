#ifndef TWISTGEN_WEIERSTRASS_HPP
#define TWISTGEN_WEIERSTRASS_HPP

#include <vector>

#include "twistgen/rat.hpp"

namespace twistgen {

/// Affine point or the point at infinity of a Weierstrass model.
struct EPoint {
  bool infinity = true;
  Rat x, y;

  static EPoint at_infinity() { return EPoint{}; }
  static EPoint affine(const Rat& x, const Rat& y) {
    return EPoint{false, x, y};
  }
  bool operator==(const EPoint& o) const {
    if (infinity != o.infinity) return false;
    return infinity || (x == o.x && y == o.y);
  }
  std::string str() const;
};

/// y^2 + a1 x y + a3 y = x^3 + a2 x^2 + a4 x + a6 over Q.
struct WeierstrassModel {
  Rat a1, a2, a3, a4, a6;

  Rat discriminant() const;
  Rat j_invariant() const;  // pre: discriminant != 0
  bool contains(const EPoint& P) const;

  EPoint neg(const EPoint& P) const;
  EPoint add(const EPoint& P, const EPoint& Q) const;
  EPoint mul(std::int64_t n, const EPoint& P) const;
};

/// Mazur-bound certificate: rational torsion has order in {1..10, 12},
/// so a point with nP != O for all n in {2..10, 12} has infinite order.
struct OrderCertificate {
  bool infinite_order = false;
  int torsion_order = 0;                 // set when !infinite_order
  std::vector<int> verified_nonidentity;  // the n with nP != O
};

OrderCertificate mazur_certify(const WeierstrassModel& model, const EPoint& P);

}  // namespace twistgen

#endif
