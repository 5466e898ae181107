#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "twistgen/reduction.hpp"
#include "twistgen/rng.hpp"

using namespace twistgen;

namespace {

const QICurve kC123 = QICurve::normal_form(Rat(1), Rat(2), Rat(3));
const ProjPoint kOrigin = ProjPoint::make(Rat(1), Rat(1), Rat(1), Rat(0));
const ProjPoint kQ = ProjPoint::make(Rat(1), Rat(2), Rat(3), Rat(1));

// Independent oracle for the reduction: the Jacobian of the pencil
// binary quartic det(mu Q1 + nu Q2) = l1 l2 l3 * mu (nu - mu) nu *
// ((k1-k2) mu + (k2-k3) nu) has the same j-invariant as any correct
// Weierstrass model of the curve. Classical invariants of the binary
// quartic a0 mu^4 + ... + a4 nu^4:
//   I = 12 a0 a4 - 3 a1 a3 + a2^2
//   J = 72 a0 a2 a4 - 27 a0 a3^2 - 27 a4 a1^2 + 9 a1 a2 a3 - 2 a2^3
// and the Jacobian is y^2 = x^3 - 27 I x - 27 J.
Rat pencil_j_invariant(const QICurve& c) {
  // det(mu Q1 + nu Q2) with Q1 = diag(l1,-l2,0,-(k1-k2)),
  // Q2 = diag(0,l2,-l3,-(k2-k3)):
  //   (l1 mu) * (l2 (nu - mu)) * (-l3 nu) * (-((k1-k2) mu + (k2-k3) nu))
  // expand the binary quartic coefficients by brute force
  std::array<Rat, 5> a{};  // a[i]: coefficient of mu^(4-i) nu^i
  const Rat l1 = c.lambda[0], l2 = c.lambda[1], l3 = c.lambda[2];
  const Rat d12 = c.kappa[0] - c.kappa[1], d23 = c.kappa[1] - c.kappa[2];
  // (mu)(nu-mu)(nu)(d12 mu + d23 nu) * (l1 l2 l3)
  // mu*(nu-mu) = mu nu - mu^2 ; multiply by nu: mu nu^2 - mu^2 nu
  // times (d12 mu + d23 nu):
  //   d12 mu^2 nu^2 + d23 mu nu^3 - d12 mu^3 nu - d23 mu^2 nu^2
  const Rat s = l1 * l2 * l3;
  a[1] += -s * d12;        // mu^3 nu
  a[2] += s * (d12 - d23); // mu^2 nu^2
  a[3] += s * d23;         // mu nu^3
  const Rat I = 12 * a[0] * a[4] - 3 * a[1] * a[3] + a[2] * a[2];
  const Rat J = 72 * a[0] * a[2] * a[4] - 27 * a[0] * a[3] * a[3] -
                27 * a[4] * a[1] * a[1] + 9 * a[1] * a[2] * a[3] -
                2 * a[2] * a[2] * a[2];
  const WeierstrassModel jac{Rat(0), Rat(0), Rat(0), -27 * I, -27 * J};
  return jac.j_invariant();
}

}  // namespace

TEST_CASE("reduction of C_{1,2,3}: roundtrip and origin") {
  const Reduction red = reduce_to_weierstrass(kC123, kOrigin);
  CHECK(red.model().discriminant() != 0);
  CHECK(red.forward(kOrigin).infinity);

  const EPoint img = red.forward(kQ);
  CHECK(red.model().contains(img));
  CHECK(red.backward(img) == kQ);
  CHECK(red.backward(EPoint::at_infinity()) == kOrigin);
}

TEST_CASE("j-invariant agrees with the pencil-quartic oracle") {
  // frozen oracle value for C_{1,2,3}
  CHECK(pencil_j_invariant(kC123) == rat_of(470596, 225));
  const Reduction red = reduce_to_weierstrass(kC123, kOrigin);
  CHECK(red.model().j_invariant() == rat_of(470596, 225));

  Rng rng(5);
  int done = 0;
  while (done < 8) {
    const Rat t1(static_cast<long>(rng.uniform(1, 9)));
    const Rat t2(static_cast<long>(rng.uniform(1, 9)));
    const Rat t3(static_cast<long>(rng.uniform(1, 9)));
    const QICurve c = QICurve::normal_form(t1, t2, t3);
    if (!is_nonsingular(c)) continue;
    const Reduction r =
        reduce_to_weierstrass(c, ProjPoint::make(Rat(1), Rat(1), Rat(1), Rat(0)));
    CHECK(r.model().j_invariant() == pencil_j_invariant(c));
    ++done;
  }
}

TEST_CASE("two-torsion maps to 2-torsion of the model") {
  const Reduction red = reduce_to_weierstrass(kC123, kOrigin);
  for (const auto& t : two_torsion(kC123)) {
    const EPoint img = red.forward(t);
    CHECK(red.model().contains(img));
    CHECK(red.model().mul(2, img).infinity);
  }
}

TEST_CASE("forward is a homomorphism on multiples") {
  const Reduction red = reduce_to_weierstrass(kC123, kOrigin);
  const EPoint g = red.forward(kQ);
  Rng rng(71);
  for (int i = 0; i < 6; ++i) {
    const std::int64_t n1 = rng.uniform(1, 5), n2 = rng.uniform(1, 5);
    const ProjPoint P = red.backward(red.model().mul(n1, g));
    const ProjPoint Q = red.backward(red.model().mul(n2, g));
    const EPoint sum = red.model().add(red.forward(P), red.forward(Q));
    CHECK(red.backward(sum) == red.backward(red.model().mul(n1 + n2, g)));
  }
}

TEST_CASE("image of [1:2:3:1] has order beyond the Mazur bound") {
  const auto cert = certify_infinite_order(kC123, kOrigin, kQ);
  CHECK(cert.infinite_order);
  CHECK(cert.verified_nonidentity ==
        std::vector<int>{2, 3, 4, 5, 6, 7, 8, 9, 10, 12});
}

TEST_CASE("group_add laws at a specialization") {
  const Reduction red = reduce_to_weierstrass(kC123, kOrigin);
  // identity
  CHECK(group_add(red, kQ, kOrigin) == kQ);
  // T + T = origin for every two-torsion T
  for (const auto& t : two_torsion(kC123))
    CHECK(group_add(red, t, t) == kOrigin);
  // commutativity and associativity on small multiples of kQ
  const EPoint g = red.forward(kQ);
  const ProjPoint P2 = red.backward(red.model().mul(2, g));
  const ProjPoint P3 = red.backward(red.model().mul(3, g));
  CHECK(group_add(red, kQ, P2) == group_add(red, P2, kQ));
  CHECK(group_add(red, group_add(red, kQ, P2), P3) ==
        group_add(red, kQ, group_add(red, P2, P3)));
  // inverse: the w-negation [p:q:r:-w]
  const ProjPoint negQ = ProjPoint::make(Rat(1), Rat(2), Rat(3), Rat(-1));
  CHECK(group_add(red, kQ, negQ) == kOrigin);
}

TEST_CASE("group law rejects singular curves") {
  const QICurve sing = QICurve::normal_form(Rat(1), Rat(1), Rat(3));
  CHECK_THROWS_AS(reduce_to_weierstrass(
                      sing, ProjPoint::make(Rat(1), Rat(1), Rat(1), Rat(0))),
                  DegenerateError);
}

TEST_CASE("explicit C-doubling equals the group-law doubling") {
  Rng rng(411);
  int done = 0;
  while (done < 6) {
    const Rat a(static_cast<long>(rng.uniform(1, 6)));
    const Rat b(static_cast<long>(rng.uniform(1, 6)));
    const Rat c(static_cast<long>(rng.uniform(1, 6)));
    const std::array<std::int64_t, 3> m{3, 5, 3};
    const std::array<Rat, 3> v{Rat(static_cast<long>(rng.uniform(1, 4))),
                               Rat(static_cast<long>(rng.uniform(1, 4))),
                               Rat(static_cast<long>(rng.uniform(1, 4)))};
    const QICurve curve = QICurve::c_family({a * a, b * b, c * c}, m, v);
    if (!is_nonsingular(curve)) continue;
    const ProjPoint P = ProjPoint::make(a, b, c, Rat(1));
    REQUIRE(contains(curve, P));
    const ProjPoint origin = two_torsion(curve)[0];
    const auto w = double_C_explicit(a, b, c, m, v);
    const ProjPoint doubled = group_add(curve, origin, P, P);
    CHECK(doubled == ProjPoint::make(w[0], w[1], w[2], Rat(1)));
    ++done;
  }
}

TEST_CASE("explicit H-doubling equals the group-law doubling") {
  Rng rng(733);
  int done = 0;
  while (done < 6) {
    const Rat a(static_cast<long>(rng.uniform(1, 4)));
    const Rat b(static_cast<long>(rng.uniform(1, 4)));
    const Rat c(static_cast<long>(rng.uniform(1, 4)));
    const Rat yu(static_cast<long>(rng.uniform(1, 5)));
    const std::array<std::int64_t, 3> m{3, 3, 5};
    const std::array<Rat, 3> v{Rat(static_cast<long>(rng.uniform(1, 4))),
                               Rat(static_cast<long>(rng.uniform(1, 4))),
                               Rat(static_cast<long>(rng.uniform(1, 4)))};
    const QICurve curve = QICurve::h_family({a * a, b * b, c * c}, m, v, yu * yu);
    if (!is_nonsingular(curve)) continue;
    const ProjPoint P = ProjPoint::make(a * yu, b * yu, c * yu, Rat(1));
    REQUIRE(contains(curve, P));
    const ProjPoint origin = two_torsion(curve)[0];
    const auto w = double_H_explicit(a, b, c, m, yu, v);
    const ProjPoint doubled = group_add(curve, origin, P, P);
    CHECK(doubled == ProjPoint::make(w[0], w[1], w[2], Rat(1)));
    ++done;
  }
}

TEST_CASE("mazur certificate: torsion points are never certified infinite") {
  // y^2 = x^3 + 1: (2,3) has order 6; its multiples are torsion too
  const WeierstrassModel e{Rat(0), Rat(0), Rat(0), Rat(0), Rat(1)};
  const EPoint p = EPoint::affine(Rat(2), Rat(3));
  const auto cert = mazur_certify(e, p);
  CHECK(!cert.infinite_order);
  CHECK(cert.torsion_order == 6);
  for (int n = 1; n < 6; ++n) {
    const auto c = mazur_certify(e, e.mul(n, p));
    CHECK(!c.infinite_order);
    CHECK(c.torsion_order == 6 / std::gcd(6, n));
  }
  // two-torsion of C_{1,2,3} certifies as order 2
  const auto tt = two_torsion(kC123);
  const auto c2 = certify_infinite_order(kC123, tt[0], tt[1]);
  CHECK(!c2.infinite_order);
  CHECK(c2.torsion_order == 2);
}

TEST_CASE("degree-4 genus-1 model: roundtrip and certification") {
  // y^2 = x^4 + 9 with point (2, 5)
  const std::vector<Rat> g{Rat(9), Rat(0), Rat(0), Rat(0), Rat(1)};
  const Genus1Model m(g, std::make_pair(Rat(2), Rat(5)));
  const EPoint img = m.map_point(Rat(2), Rat(5));
  CHECK(m.model().contains(img));
  const auto cert = certify_on_hyperelliptic(g, Rat(2), Rat(5));
  CHECK(cert.infinite_order);
}

TEST_CASE("degree-3 genus-1 model maps points correctly") {
  // y^2 = 2 x^3 + 3 x + 4 contains (0, 2); model must contain the image
  const std::vector<Rat> g{Rat(4), Rat(3), Rat(0), Rat(2)};
  const Genus1Model m(g);
  CHECK(m.model().contains(m.map_point(Rat(0), Rat(2))));
  // non-square-free cubic is rejected: y^2 = x^3 (triple root)
  CHECK_THROWS_AS(Genus1Model({Rat(0), Rat(0), Rat(0), Rat(1)}),
                  DegenerateError);
}
