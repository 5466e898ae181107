#include "twistgen/weierstrass.hpp"

#include <sstream>
#include <stdexcept>

namespace twistgen {

std::string EPoint::str() const {
  if (infinity) return "O";
  std::ostringstream out;
  out << "(" << rat_str(x) << ", " << rat_str(y) << ")";
  return out.str();
}

Rat WeierstrassModel::discriminant() const {
  const Rat b2 = a1 * a1 + 4 * a2;
  const Rat b4 = 2 * a4 + a1 * a3;
  const Rat b6 = a3 * a3 + 4 * a6;
  const Rat b8 = a1 * a1 * a6 + 4 * a2 * a6 - a1 * a3 * a4 + a2 * a3 * a3 -
                 a4 * a4;
  return -b2 * b2 * b8 - 8 * b4 * b4 * b4 - 27 * b6 * b6 + 9 * b2 * b4 * b6;
}

Rat WeierstrassModel::j_invariant() const {
  const Rat b2 = a1 * a1 + 4 * a2;
  const Rat b4 = 2 * a4 + a1 * a3;
  const Rat c4 = b2 * b2 - 24 * b4;
  const Rat disc = discriminant();
  if (disc == 0) throw std::domain_error("j-invariant of singular model");
  return c4 * c4 * c4 / disc;
}

bool WeierstrassModel::contains(const EPoint& P) const {
  if (P.infinity) return true;
  return P.y * P.y + a1 * P.x * P.y + a3 * P.y ==
         P.x * P.x * P.x + a2 * P.x * P.x + a4 * P.x + a6;
}

EPoint WeierstrassModel::neg(const EPoint& P) const {
  if (P.infinity) return P;
  return EPoint::affine(P.x, -P.y - a1 * P.x - a3);
}

EPoint WeierstrassModel::add(const EPoint& P, const EPoint& Q) const {
  if (P.infinity) return Q;
  if (Q.infinity) return P;
  if (P.x == Q.x && Q.y == -P.y - a1 * P.x - a3) return EPoint::at_infinity();
  Rat lam;
  if (P.x != Q.x) {
    lam = (Q.y - P.y) / (Q.x - P.x);
  } else {
    lam = (3 * P.x * P.x + 2 * a2 * P.x + a4 - a1 * P.y) /
          (2 * P.y + a1 * P.x + a3);
  }
  const Rat nu = P.y - lam * P.x;
  const Rat x3 = lam * lam + a1 * lam - a2 - P.x - Q.x;
  const Rat y3 = -(lam + a1) * x3 - nu - a3;
  return EPoint::affine(x3, y3);
}

EPoint WeierstrassModel::mul(std::int64_t n, const EPoint& P) const {
  if (n < 0) return mul(-n, neg(P));
  EPoint acc = EPoint::at_infinity();
  EPoint base = P;
  while (n > 0) {
    if (n & 1) acc = add(acc, base);
    base = add(base, base);
    n >>= 1;
  }
  return acc;
}

OrderCertificate mazur_certify(const WeierstrassModel& model,
                               const EPoint& P) {
  OrderCertificate cert;
  if (P.infinity) {
    cert.torsion_order = 1;
    return cert;
  }
  static constexpr int kOrders[] = {2, 3, 4, 5, 6, 7, 8, 9, 10, 12};
  for (const int n : kOrders) {
    if (model.mul(n, P).infinity) {
      cert.torsion_order = n;
      return cert;
    }
    cert.verified_nonidentity.push_back(n);
  }
  cert.infinite_order = true;
  return cert;
}

}  // namespace twistgen
