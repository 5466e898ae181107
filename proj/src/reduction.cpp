#include "twistgen/reduction.hpp"

#include <algorithm>

#include "twistgen/rng.hpp"

namespace twistgen {

namespace {

using Mat3 = std::array<std::array<Rat, 3>, 3>;
using Vec3 = std::array<Rat, 3>;
using Vec4 = std::array<Rat, 4>;
using Cubic = std::map<std::array<int, 3>, Rat>;

template <std::size_t N>
std::array<Rat, N> mat_vec(const std::array<std::array<Rat, N>, N>& A,
                           const std::array<Rat, N>& v) {
  std::array<Rat, N> out;
  for (std::size_t i = 0; i < N; ++i) {
    out[i] = 0;
    for (std::size_t j = 0; j < N; ++j) out[i] += A[i][j] * v[j];
  }
  return out;
}

template <std::size_t N>
std::array<std::array<Rat, N>, N> mat_mul(
    const std::array<std::array<Rat, N>, N>& A,
    const std::array<std::array<Rat, N>, N>& B) {
  std::array<std::array<Rat, N>, N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) {
      out[i][j] = 0;
      for (std::size_t k = 0; k < N; ++k) out[i][j] += A[i][k] * B[k][j];
    }
  return out;
}

template <std::size_t N>
std::array<std::array<Rat, N>, N> mat_inverse(
    const std::array<std::array<Rat, N>, N>& A) {
  std::array<std::array<Rat, 2 * N>, N> M;
  for (std::size_t i = 0; i < N; ++i) {
    for (std::size_t j = 0; j < N; ++j) {
      M[i][j] = A[i][j];
      M[i][N + j] = (i == j) ? 1 : 0;
    }
  }
  for (std::size_t c = 0; c < N; ++c) {
    std::size_t piv = c;
    while (piv < N && M[piv][c] == 0) ++piv;
    if (piv == N) throw DegenerateError("singular matrix");
    std::swap(M[piv], M[c]);
    const Rat d = M[c][c];
    for (auto& x : M[c]) x /= d;
    for (std::size_t r = 0; r < N; ++r) {
      if (r == c || M[r][c] == 0) continue;
      const Rat f = M[r][c];
      for (std::size_t k = 0; k < 2 * N; ++k) M[r][k] -= f * M[c][k];
    }
  }
  std::array<std::array<Rat, N>, N> out;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) out[i][j] = M[i][N + j];
  return out;
}

template <std::size_t N>
std::array<std::array<Rat, N>, N> congruent(
    const std::array<std::array<Rat, N>, N>& Q,
    const std::array<std::array<Rat, N>, N>& A) {
  // A^T Q A: the quadric after the substitution x -> A x
  std::array<std::array<Rat, N>, N> At;
  for (std::size_t i = 0; i < N; ++i)
    for (std::size_t j = 0; j < N; ++j) At[i][j] = A[j][i];
  return mat_mul(At, mat_mul(Q, A));
}

template <std::size_t N>
bool independent_of(const std::vector<std::array<Rat, N>>& rows) {
  // rank == rows.size()?
  std::vector<std::array<Rat, N>> M = rows;
  std::size_t r = 0;
  for (std::size_t c = 0; c < N && r < M.size(); ++c) {
    std::size_t piv = r;
    while (piv < M.size() && M[piv][c] == 0) ++piv;
    if (piv == M.size()) continue;
    std::swap(M[piv], M[r]);
    for (std::size_t i = 0; i < M.size(); ++i) {
      if (i == r || M[i][c] == 0) continue;
      const Rat f = M[i][c] / M[r][c];
      for (std::size_t k = c; k < N; ++k) M[i][k] -= f * M[r][k];
    }
    ++r;
  }
  return r == rows.size();
}

Rat ipow(const Rat& v, int e) {
  Rat acc(1);
  for (int i = 0; i < e; ++i) acc *= v;
  return acc;
}

Rat cubic_eval(const Cubic& C, const Vec3& v) {
  Rat acc(0);
  for (const auto& [m, c] : C)
    acc += c * ipow(v[0], m[0]) * ipow(v[1], m[1]) * ipow(v[2], m[2]);
  return acc;
}

Vec3 cubic_grad(const Cubic& C, const Vec3& v) {
  Vec3 g{Rat(0), Rat(0), Rat(0)};
  for (const auto& [m, c] : C) {
    if (m[0])
      g[0] += c * m[0] * ipow(v[0], m[0] - 1) * ipow(v[1], m[1]) *
              ipow(v[2], m[2]);
    if (m[1])
      g[1] += c * m[1] * ipow(v[0], m[0]) * ipow(v[1], m[1] - 1) *
              ipow(v[2], m[2]);
    if (m[2])
      g[2] += c * m[2] * ipow(v[0], m[0]) * ipow(v[1], m[1]) *
              ipow(v[2], m[2] - 1);
  }
  return g;
}

/// Coefficients of C(B x): substitute each variable by a linear form.
Cubic cubic_transform(const Cubic& C, const Mat3& B) {
  using Lin = std::map<std::array<int, 3>, Rat>;
  std::array<Lin, 3> lin;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      if (B[i][j] != 0) {
        std::array<int, 3> key{0, 0, 0};
        key[j] = 1;
        lin[i][key] = B[i][j];
      }
  auto mul = [](const Lin& a, const Lin& b) {
    Lin r;
    for (const auto& [k1, c1] : a)
      for (const auto& [k2, c2] : b) {
        std::array<int, 3> k{k1[0] + k2[0], k1[1] + k2[1], k1[2] + k2[2]};
        r[k] += c1 * c2;
      }
    return r;
  };
  Cubic out;
  for (const auto& [m, c] : C) {
    Lin term{{{0, 0, 0}, Rat(1)}};
    for (int rep = 0; rep < m[0]; ++rep) term = mul(term, lin[0]);
    for (int rep = 0; rep < m[1]; ++rep) term = mul(term, lin[1]);
    for (int rep = 0; rep < m[2]; ++rep) term = mul(term, lin[2]);
    for (const auto& [k, cc] : term) out[k] += c * cc;
  }
  std::erase_if(out, [](const auto& kv) { return kv.second == 0; });
  return out;
}

Vec3 cross(const Vec3& a, const Vec3& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2],
          a[0] * b[1] - a[1] * b[0]};
}

Rat coef(const Cubic& C, int i, int j, int k) {
  const auto it = C.find({i, j, k});
  return it == C.end() ? Rat(0) : it->second;
}

}  // namespace

Rat QuadricPair::eval1(const std::array<Rat, 4>& p) const {
  Rat acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += q1[i][j] * p[i] * p[j];
  return acc;
}

Rat QuadricPair::eval2(const std::array<Rat, 4>& p) const {
  Rat acc(0);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) acc += q2[i][j] * p[i] * p[j];
  return acc;
}

QuadricPair quadrics_from_qicurve(const QICurve& c) {
  QuadricPair qp;
  for (auto& row : qp.q1) row.fill(Rat(0));
  for (auto& row : qp.q2) row.fill(Rat(0));
  qp.q1[0][0] = c.lambda[0];
  qp.q1[1][1] = -c.lambda[1];
  qp.q1[3][3] = -(c.kappa[0] - c.kappa[1]);
  qp.q2[1][1] = c.lambda[1];
  qp.q2[2][2] = -c.lambda[2];
  qp.q2[3][3] = -(c.kappa[1] - c.kappa[2]);
  return qp;
}

QuadricPair quadrics_from_quartic(const std::array<Rat, 5>& g) {
  QuadricPair qp;
  for (auto& row : qp.q1) row.fill(Rat(0));
  for (auto& row : qp.q2) row.fill(Rat(0));
  // coordinates [x : y : z : w], z = x^2/w
  qp.q1[0][0] = 1;
  qp.q1[2][3] = qp.q1[3][2] = Rat(-1, 2);
  qp.q2[1][1] = 1;
  qp.q2[2][2] = -g[4];
  qp.q2[0][2] = qp.q2[2][0] = -g[3] / 2;
  qp.q2[2][3] = qp.q2[3][2] = -g[2] / 2;
  qp.q2[0][3] = qp.q2[3][0] = -g[1] / 2;
  qp.q2[3][3] = -g[0];
  return qp;
}

void Reduction::attempt(const QuadricPair& quadrics, const Vec4& origin) {
  // move the origin to [0:0:0:1]
  std::vector<Vec4> cols;
  static const Vec4 basis[4] = {{Rat(1), Rat(0), Rat(0), Rat(0)},
                                {Rat(0), Rat(1), Rat(0), Rat(0)},
                                {Rat(0), Rat(0), Rat(1), Rat(0)},
                                {Rat(0), Rat(0), Rat(0), Rat(1)}};
  for (const auto& e : basis) {
    if (cols.size() == 3) break;
    std::vector<Vec4> trial = cols;
    trial.push_back(e);
    trial.push_back(origin);
    if (independent_of(trial)) cols.push_back(e);
  }
  cols.push_back(origin);
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) A_[i][j] = cols[j][i];
  Ainv_ = mat_inverse(A_);
  const Mat4 q1t = congruent(quadrics.q1, A_);
  const Mat4 q2t = congruent(quadrics.q2, A_);
  if (q1t[3][3] != 0 || q2t[3][3] != 0)
    throw std::logic_error("origin not on the quadrics");
  // Q_i = w L_i(p,q,r) + M_i(p,q,r)
  for (int i = 0; i < 3; ++i) {
    L1_[i] = 2 * q1t[3][i];
    L2_[i] = 2 * q2t[3][i];
    for (int j = 0; j < 3; ++j) {
      M1_[i][j] = q1t[i][j];
      M2_[i][j] = q2t[i][j];
    }
  }
  // projected cubic M1 L2 - M2 L1
  cubic_.clear();
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j)
      for (int k = 0; k < 3; ++k) {
        std::array<int, 3> key{0, 0, 0};
        key[i] += 1;
        key[j] += 1;
        key[k] += 1;
        const Rat add = M1_[i][j] * L2_[k] - M2_[i][j] * L1_[k];
        if (add != 0) cubic_[key] += add;
      }
  std::erase_if(cubic_, [](const auto& kv) { return kv.second == 0; });
  if (cubic_.empty()) throw DegenerateError("projected cubic is zero");
  T0_ = cross(L1_, L2_);
  if (T0_[0] == 0 && T0_[1] == 0 && T0_[2] == 0)
    throw DegenerateError("tangent planes are dependent");
  if (cubic_eval(cubic_, T0_) != 0)
    throw std::logic_error("tangent image not on the cubic");

  // tangent line of the cubic at T0, and its third intersection point
  const Vec3 grad = cubic_grad(cubic_, T0_);
  if (grad[0] == 0 && grad[1] == 0 && grad[2] == 0)
    throw DegenerateError("cubic is singular at the distinguished point");
  Vec3 dir{Rat(0), Rat(0), Rat(0)};
  for (const Vec3& cand :
       {Vec3{grad[1], -grad[0], Rat(0)}, Vec3{grad[2], Rat(0), -grad[0]},
        Vec3{Rat(0), grad[2], -grad[1]}}) {
    if (cand[0] == 0 && cand[1] == 0 && cand[2] == 0) continue;
    if (independent_of<3>({T0_, cand})) {
      dir = cand;
      break;
    }
  }
  if (dir[0] == 0 && dir[1] == 0 && dir[2] == 0)
    throw DegenerateError("no tangent direction");
  // g(s,t) = cubic(s*T0 + t*dir) = gamma s t^2 + delta t^3
  auto eval_line = [&](const Rat& s, const Rat& t) {
    Vec3 p{s * T0_[0] + t * dir[0], s * T0_[1] + t * dir[1],
           s * T0_[2] + t * dir[2]};
    return cubic_eval(cubic_, p);
  };
  const Rat ga = eval_line(1, 0);            // s^3 coefficient
  const Rat gd = eval_line(0, 1);            // t^3 coefficient
  const Rat e1 = eval_line(1, 1);
  const Rat e2 = eval_line(1, -1);
  const Rat gb = ((e1 - e2) - 2 * gd) / 2;  // s^2 t
  const Rat gc = ((e1 + e2) - 2 * ga) / 2;  // s t^2
  if (ga != 0 || gb != 0)
    throw std::logic_error("tangency failure at distinguished point");

  Vec3 P1;
  if (gc == 0) {
    flex_ = true;
  } else {
    flex_ = false;
    for (int i = 0; i < 3; ++i) P1[i] = gd * T0_[i] - gc * dir[i];
    if (P1[0] == 0 && P1[1] == 0 && P1[2] == 0)
      throw DegenerateError("degenerate third intersection");
    if (!independent_of<3>({T0_, P1})) flex_ = true;  // P1 == T0
  }

  std::vector<Vec3> bcols;
  if (!flex_) {
    bcols = {T0_, P1};
  } else {
    bcols = {dir, T0_};
  }
  for (const Vec3& e :
       {Vec3{Rat(1), Rat(0), Rat(0)}, Vec3{Rat(0), Rat(1), Rat(0)},
        Vec3{Rat(0), Rat(0), Rat(1)}}) {
    if (bcols.size() == 3) break;
    std::vector<Vec3> trial = bcols;
    trial.push_back(e);
    if (independent_of(trial)) bcols.push_back(e);
  }
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) Binv_[i][j] = bcols[j][i];
  B_ = mat_inverse(Binv_);
  const Cubic G = cubic_transform(cubic_, Binv_);

  if (!flex_) {
    if (coef(G, 3, 0, 0) != 0 || coef(G, 0, 3, 0) != 0 ||
        coef(G, 2, 1, 0) != 0)
      throw std::logic_error("normalized cubic has wrong shape");
    a120_ = coef(G, 1, 2, 0);
    a021_ = coef(G, 0, 2, 1);
    a111_ = coef(G, 1, 1, 1);
    a012_ = coef(G, 0, 1, 2);
    a201_ = coef(G, 2, 0, 1);
    a102_ = coef(G, 1, 0, 2);
    a003_ = coef(G, 0, 0, 3);
    if (a120_ == 0 || a201_ == 0)
      throw DegenerateError("degenerate cubic normalization");
    cscale_ = -a201_ * a120_;
    const Rat d = -(a201_ * a021_ + a102_ * a120_);
    const Rat e = -(a102_ * a021_ + a003_ * a120_);
    const Rat g = -a003_ * a021_;
    model_ = WeierstrassModel{a111_, d, a012_ * cscale_, e * cscale_,
                              g * cscale_ * cscale_};
  } else {
    if (coef(G, 0, 3, 0) != 0 || coef(G, 1, 2, 0) != 0 ||
        coef(G, 2, 1, 0) != 0)
      throw std::logic_error("normalized flex cubic has wrong shape");
    const Rat a300 = coef(G, 3, 0, 0), a201 = coef(G, 2, 0, 1),
              a111 = coef(G, 1, 1, 1), a021 = coef(G, 0, 2, 1),
              a102 = coef(G, 1, 0, 2), a012 = coef(G, 0, 1, 2),
              a003 = coef(G, 0, 0, 3);
    if (a300 == 0 || a021 == 0)
      throw DegenerateError("degenerate flex normalization");
    gamma_ = -a300 / a021;
    const Rat alpha = a111 / a021, beta = a012 / a021;
    const Rat c2 = -a201 / a021, c1 = -a102 / a021, c0 = -a003 / a021;
    model_ = WeierstrassModel{alpha, c2, beta * gamma_, c1 * gamma_,
                              c0 * gamma_ * gamma_};
  }
  if (model_.discriminant() == 0)
    throw DegenerateError("reduction produced a singular model");
}

Reduction::Reduction(const QuadricPair& quadrics, const std::array<Rat, 4>& origin,
                     int max_retries) {
  if (quadrics.eval1(origin) != 0 || quadrics.eval2(origin) != 0)
    throw std::invalid_argument("origin is not on the curve");
  QuadricPair current = quadrics;
  Vec4 cur_origin = origin;
  Rng retry_rng(0xABCDEF01ULL);
  for (int tries = 0;; ++tries) {
    try {
      attempt(current, cur_origin);
      retries_ = tries;
      return;
    } catch (const DegenerateError&) {
      if (tries >= max_retries) throw;
      // random invertible change of coordinates x -> S y
      Mat4 S;
      do {
        for (auto& row : S)
          for (auto& x : row) x = Rat(static_cast<long>(retry_rng.uniform(-3, 3)));
      } while (![&] {
        try {
          mat_inverse(S);
          return true;
        } catch (const DegenerateError&) {
          return false;
        }
      }());
      current.q1 = congruent(quadrics.q1, S);
      current.q2 = congruent(quadrics.q2, S);
      cur_origin = mat_vec(mat_inverse(S), origin);
    }
  }
}

Reduction::Reduction(const QICurve& curve, const ProjPoint& origin,
                     int max_retries)
    : Reduction(quadrics_from_qicurve(curve), origin.c, max_retries) {}

EPoint Reduction::cubic_to_model(const Vec3& pt) const {
  const Vec3 n = mat_vec(B_, pt);
  if (!flex_) {
    if (n[2] == 0) {
      if (n[1] == 0) return EPoint::at_infinity();  // P0
      if (n[0] != 0) throw std::logic_error("Z=0 point not on the cubic");
      const Rat x0 = -a021_ / a120_;  // P1
      return EPoint::affine(cscale_ * x0, cscale_ * (-(a111_ * x0 + a012_)));
    }
    const Rat xt = n[0] / n[2];
    const Rat yt = n[1] / n[2];
    const Rat eta = yt * (a120_ * xt + a021_);
    return EPoint::affine(cscale_ * xt, cscale_ * eta);
  }
  if (n[2] == 0) {
    if (n[0] != 0) throw std::logic_error("Z=0 non-flex point on flex cubic");
    return EPoint::at_infinity();
  }
  return EPoint::affine(gamma_ * n[0] / n[2], gamma_ * n[1] / n[2]);
}

Reduction::Vec3 Reduction::model_to_cubic(const EPoint& P) const {
  if (!flex_) {
    if (P.infinity) return mat_vec(Binv_, Vec3{Rat(1), Rat(0), Rat(0)});
    const Rat xt = P.x / cscale_;
    const Rat eta = P.y / cscale_;
    const Rat den = a120_ * xt + a021_;
    if (den != 0)
      return mat_vec(Binv_, Vec3{xt, eta / den, Rat(1)});
    if (eta == -(a111_ * xt + a012_))
      return mat_vec(Binv_, Vec3{Rat(0), Rat(1), Rat(0)});  // P1
    // residual point of the line a120 X + a021 Z = 0 (tangent at P1)
    const Rat Ac = a012_ * a120_ * a120_ - a111_ * a021_ * a120_;
    const Rat Bc = a201_ * a021_ * a021_ * a120_ -
                   a102_ * a021_ * a120_ * a120_ +
                   a003_ * a120_ * a120_ * a120_;
    if (Ac == 0) return mat_vec(Binv_, Vec3{Rat(0), Rat(1), Rat(0)});
    return mat_vec(Binv_, Vec3{-a021_ * Ac, -Bc, a120_ * Ac});
  }
  if (P.infinity) return mat_vec(Binv_, Vec3{Rat(0), Rat(1), Rat(0)});
  return mat_vec(Binv_, Vec3{P.x / gamma_, P.y / gamma_, Rat(1)});
}

EPoint Reduction::forward(const ProjPoint& P) const {
  const Vec4 moved = mat_vec(Ainv_, P.c);
  Vec3 cub;
  if (moved[0] == 0 && moved[1] == 0 && moved[2] == 0)
    cub = T0_;  // the origin projects to the tangent direction
  else
    cub = {moved[0], moved[1], moved[2]};
  return cubic_to_model(cub);
}

ProjPoint Reduction::backward(const EPoint& P) const {
  const Vec3 cub = model_to_cubic(P);
  const Rat l1 = L1_[0] * cub[0] + L1_[1] * cub[1] + L1_[2] * cub[2];
  const Rat l2 = L2_[0] * cub[0] + L2_[1] * cub[1] + L2_[2] * cub[2];
  Vec4 lifted;
  if (l1 != 0 || l2 != 0) {
    Rat m(0);
    const Rat& l = (l1 != 0) ? l1 : l2;
    const auto& M = (l1 != 0) ? M1_ : M2_;
    for (int i = 0; i < 3; ++i)
      for (int j = 0; j < 3; ++j) m += M[i][j] * cub[i] * cub[j];
    lifted = {cub[0] * l, cub[1] * l, cub[2] * l, -m};
  } else {
    lifted = {Rat(0), Rat(0), Rat(0), Rat(1)};  // the projection center
  }
  const Vec4 orig = mat_vec(A_, lifted);
  return ProjPoint::make(orig[0], orig[1], orig[2], orig[3]);
}

Reduction reduce_to_weierstrass(const QICurve& curve, const ProjPoint& origin) {
  if (!is_nonsingular(curve))
    throw DegenerateError("curve is singular; the group law is undefined");
  if (!contains(curve, origin))
    throw std::invalid_argument("origin is not on the curve");
  return Reduction(curve, origin);
}

ProjPoint group_add(const Reduction& red, const ProjPoint& P,
                    const ProjPoint& Q) {
  return red.backward(red.model().add(red.forward(P), red.forward(Q)));
}

ProjPoint group_add(const QICurve& curve, const ProjPoint& origin,
                    const ProjPoint& P, const ProjPoint& Q) {
  const Reduction red = reduce_to_weierstrass(curve, origin);
  return group_add(red, P, Q);
}

OrderCertificate certify_infinite_order(const QICurve& curve,
                                        const ProjPoint& origin,
                                        const ProjPoint& P) {
  const Reduction red = reduce_to_weierstrass(curve, origin);
  return mazur_certify(red.model(), red.forward(P));
}

Genus1Model::Genus1Model(const std::vector<Rat>& g,
                         std::optional<std::pair<Rat, Rat>> base_point) {
  std::vector<Rat> cs = g;
  while (!cs.empty() && cs.back() == 0) cs.pop_back();
  degree_ = static_cast<int>(cs.size()) - 1;
  if (degree_ == 3) {
    lead_ = cs[3];
    model_storage_ = WeierstrassModel{Rat(0), cs[2], Rat(0), cs[1] * cs[3],
                                      cs[0] * cs[3] * cs[3]};
    if (model_storage_.discriminant() == 0)
      throw DegenerateError("singular cubic model (g not square-free)");
    return;
  }
  if (degree_ != 4)
    throw std::invalid_argument("genus-1 model needs deg 3 or 4");
  if (!base_point)
    throw std::invalid_argument("degree-4 model needs a rational base point");
  const auto& [x0, y0] = *base_point;
  if (y0 == 0)
    throw DegenerateError("degree-4 base point must have nonzero y");
  const std::array<Rat, 5> coeffs{cs[0], cs[1], cs[2], cs[3], cs[4]};
  red_.emplace(quadrics_from_quartic(coeffs),
               std::array<Rat, 4>{x0, -y0, x0 * x0, Rat(1)});
  model_storage_ = red_->model();
}

const WeierstrassModel& Genus1Model::model() const { return model_storage_; }

EPoint Genus1Model::map_point(const Rat& x, const Rat& y) const {
  if (degree_ == 3) return EPoint::affine(lead_ * x, lead_ * y);
  return red_->forward(ProjPoint::make(x, y, x * x, Rat(1)));
}

OrderCertificate certify_on_hyperelliptic(const std::vector<Rat>& g,
                                          const Rat& x0, const Rat& y0) {
  const Genus1Model m(g, std::make_pair(x0, y0));
  return mazur_certify(m.model(), m.map_point(x0, y0));
}

}  // namespace twistgen
