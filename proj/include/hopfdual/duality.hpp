#pragma once

/**
 * @file duality.hpp
 * @brief Duality maps for crossed products: lambda and rho, the phi and
 * epsilon bijections, both commutative diagrams, the resulting algebra
 * isomorphisms, compatibility of (V, U), and the coactions upsilon and
 * omega on H*.
 *
 * Index conventions, with n = rank H, r = rank A, m = rank U:
 *  - End(H) and Hom(H, M): E(c>b) at c * rank(M) + b, the map c -> b.
 *  - End_{-A}(H (x) A): E(k>h,a) at k*(n r) + h*r + a, the right A-linear
 *    map with k (x) 1 -> h (x) a.
 *  - End_{A-}(A (x) H)^op: E(k>a,h) at k*(r n) + a*n + h, the left
 *    A-linear map with 1 (x) k -> a (x) h; the product is reversed
 *    composition.
 *  - (A # H) # U and A (x) (H # U) share the index (a*n + h)*m + u.
 */

#include <optional>
#include <string>
#include <vector>

#include "hopfdual/crossed.hpp"
#include "hopfdual/smash.hpp"

namespace hopfdual {

// ---------------------------------------------------------------------------
// endomorphism algebras

/// End_R(H) under composition.
inline AlgebraData endomorphism_algebra(const FreeModule& h) {
  const std::size_t n = h.rank();
  std::vector<std::string> labels;
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b) labels.push_back("E(" + h.label(c) + ">" + h.label(b) + ")");
  Vector unit(n * n);
  for (std::size_t c = 0; c < n; ++c) unit[c * n + c] = 1;
  return AlgebraData::from_products(
      FreeModule(h.ring(), labels),
      [n](std::size_t x, std::size_t y) {
        Vector out(n * n);
        if (y % n == x / n) out[(y / n) * n + x % n] = 1;
        return out;
      },
      unit);
}

inline AlgebraData right_linear_endomorphisms(const FreeModule& h, const AlgebraData& a) {
  const std::size_t n = h.rank(), r = a.rank(), w = n * r;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t i = 0; i < r; ++i)
        labels.push_back("E(" + h.label(k) + ">" + h.label(x) + "," + a.carrier().label(i) + ")");
  Vector unit(n * w);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < r; ++i) unit[k * w + k * r + i] = a.unit()[i];
  return AlgebraData::from_products(
      FreeModule(h.ring(), labels),
      [&](std::size_t x, std::size_t y) {
        // E(k>h,a) o E(k'>h',a') = [h' = k] E(k'>h, a a')
        Vector out(n * w);
        std::size_t k = x / w, hx = (x % w) / r, ax = x % r;
        std::size_t ky = y / w, hy = (y % w) / r, ay = y % r;
        if (hy != k) return out;
        for (const auto& [c, v] : a.basis_product(ax, ay)) out[ky * w + hx * r + c] = v;
        return out;
      },
      unit);
}

inline AlgebraData left_linear_endomorphisms_op(const AlgebraData& a, const FreeModule& h) {
  const std::size_t n = h.rank(), r = a.rank(), w = n * r;
  std::vector<std::string> labels;
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t x = 0; x < n; ++x)
        labels.push_back("E(" + h.label(k) + ">" + a.carrier().label(i) + "," + h.label(x) + ")");
  Vector unit(n * w);
  for (std::size_t k = 0; k < n; ++k)
    for (std::size_t i = 0; i < r; ++i) unit[k * w + i * n + k] = a.unit()[i];
  return AlgebraData::from_products(
      FreeModule(h.ring(), labels),
      [&](std::size_t x, std::size_t y) {
        // E1 E2 = E2 o E1 = [h1 = k2] E(k1 > a1 a2, h2)
        Vector out(n * w);
        std::size_t k = x / w, ax = (x % w) / n, hx = x % n;
        std::size_t ky = y / w, ay = (y % w) / n, hy = y % n;
        if (hx != ky) return out;
        for (const auto& [c, v] : a.basis_product(ax, ay)) out[k * w + c * n + hy] = v;
        return out;
      },
      unit);
}

namespace detail {

inline void add_block(Matrix& m, std::size_t col, std::size_t offset, const Vector& v, const Scalar& scale) {
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) m(offset + i, col) += scale * v[i];
}

inline Matrix reduced(const Ring& ring, Matrix m) {
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = ring.normalize(m(i, j));
  return m;
}

/// First domain basis element where the two maps differ.
inline std::optional<std::string> map_difference(const LinearMap& f, const LinearMap& g) {
  require(f.matrix().rows() == g.matrix().rows() && f.matrix().cols() == g.matrix().cols(),
          ErrorKind::DimensionMismatch, "maps have different shapes");
  for (std::size_t c = 0; c < f.matrix().cols(); ++c)
    if (f.matrix().column(c) != g.matrix().column(c)) return f.domain().label(c);
  return std::nullopt;
}

inline std::optional<std::string> identity_difference(const LinearMap& f) {
  return map_difference(f, LinearMap::identity(f.domain()));
}

inline std::optional<std::string> unit_determinant(const LinearMap& f) {
  if (f.domain().rank() != f.codomain().rank()) return std::string("not square");
  Scalar d = determinant(f.ring(), f.matrix());
  if (!f.ring().is_unit(d)) return "det = " + d.get_str();
  return std::nullopt;
}

/// Basis-level arithmetic of a crossed product with a Hopf algebra H.
class CrossedOps {
 public:
  explicit CrossedOps(const CrossedProductData& cp)
      : cp_(cp), h_(cp.hopf_or_throw()), n(h_.rank()), r(cp.algebra().rank()) {
    hp_.resize(n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) hp_[i].push_back(h_.algebra().multiply(hb(i), hb(j)));
  }

  const HopfData& hopf() const { return h_; }
  const AlgebraData& algebra() const { return cp_.algebra(); }

  Vector hb(std::size_t i) const { return unit_vector(n, i); }
  Vector ab(std::size_t i) const { return unit_vector(r, i); }
  const Vector& hp(std::size_t i, std::size_t j) const { return hp_[i][j]; }
  Vector hm(const Vector& x, const Vector& y) const { return h_.algebra().multiply(x, y); }
  Vector s(const Vector& x) const { return h_.antipode()(x); }
  Vector sbar(const Vector& x) const { return h_.twisted_antipode_or_throw()(x); }
  Vector act(const Vector& x, const Vector& a) const { return cp_.action.act(x, a); }
  Vector sigma(const Vector& x, const Vector& y) const { return cp_.cocycle.sigma(tensor(x, y)); }
  Vector sigma_inv(const Vector& x, const Vector& y) const {
    return cp_.cocycle.inverse_or_throw()(tensor(x, y));
  }
  Vector am(const Vector& x, const Vector& y) const { return cp_.algebra().multiply(x, y); }
  Vector bm(const Vector& x, const Vector& y) const { return cp_.product.multiply(x, y); }
  SweedlerTable table(std::size_t legs) const { return sweedler_table(h_.coalgebra(), legs); }

 private:
  const CrossedProductData& cp_;
  const HopfData& h_;
  std::vector<std::vector<Vector>> hp_;

 public:
  const std::size_t n, r;
};

}  // namespace detail

// ---------------------------------------------------------------------------
// lambda, rho and the RL-condition

/// Right U: lambda(h # g)(k) = sum h k1 g(k2), into End(H).
/// Left U: lambda_bar(h # g)(k) = sum k1 g(k2) h, into End(H)^op.
inline LinearMap lambda_map(const HopfData& h, const SubalgebraU& u) {
  const std::size_t n = h.rank(), m = u.rank();
  Matrix out(n * n, n * m);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : h.coalgebra().coproduct(k)) {
          Scalar c = t.coeff * u.value(j, t.right);
          if (c == 0) continue;
          const SparseVec& p = u.side == Side::Right ? h.algebra().basis_product(x, t.left)
                                                     : h.algebra().basis_product(t.left, x);
          for (const auto& [b, v] : p) out(k * n + b, x * m + j) += c * v;
        }
  return LinearMap(tensor(h.carrier(), u.carrier()), endomorphism_algebra(h.carrier()).carrier(),
                   detail::reduced(h.ring(), out));
}

/// The algebra H # U (right U) or H #^op U (left U).
inline AlgebraData heisenberg(const HopfData& h, const SubalgebraU& u) {
  ComoduleAlgebraData reg = regular_comodule(h.bialgebra());
  return u.side == Side::Right ? right_smash(reg, u) : op_smash(reg, u);
}

inline AlgebraData lambda_target(const HopfData& h, Side side) {
  AlgebraData e = endomorphism_algebra(h.carrier());
  return side == Side::Right ? e : opposite(e);
}

/// rho(g)(k) = k <- g = sum g(k1) k2, for g in H* coordinates.
inline Vector rho_vector(const HopfData& h, const Vector& g) {
  const std::size_t n = h.rank();
  Vector out(n * n);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : h.coalgebra().coproduct(k)) out[k * n + t.right] += t.coeff * g[t.left];
  h.ring().reduce_in_place(out);
  return out;
}

struct RLPair {
  std::size_t h;  // basis of H
  std::size_t u;  // basis of U
  Scalar coeff;
};

struct RLWitness {
  Vector g;
  std::optional<Vector> xi;  // coordinates in H # U
  std::vector<RLPair> pairs;
  bool found() const { return xi.has_value(); }
};

/// Solves lambda(xi) = rho(g) for each g (the op form uses lambda_bar).
inline std::vector<RLWitness> rl_check(const HopfData& h, const SubalgebraU& u, const std::vector<Vector>& v) {
  LinearMap lam = lambda_map(h, u);
  std::vector<RLWitness> out;
  for (const auto& g : v) {
    RLWitness w{g, std::nullopt, {}};
    SolveResult s = solve_linear(lam, rho_vector(h, g));
    if (s.solvable()) {
      w.xi = s.particular;
      for (std::size_t i = 0; i < w.xi->size(); ++i)
        if ((*w.xi)[i] != 0) w.pairs.push_back({i / u.rank(), i % u.rank(), (*w.xi)[i]});
    }
    out.push_back(std::move(w));
  }
  return out;
}

inline ValidationReport density_report(const HopfData& h, const SubalgebraU& u) {
  ValidationReport r;
  const std::string p = u.side == Side::Right ? "lambda" : "lambda-bar";
  AlgebraData src = heisenberg(h, u), tgt = lambda_target(h, u.side);
  LinearMap lam = lambda_map(h, u);
  r.run(p + "-morphism", "lambda is a unital algebra map into End(H)",
        [&] { return check_algebra_morphism(src, tgt, lam); });
  if (u.rank() == h.rank()) {
    r.run(p + "-bijective", "det lambda is a unit", [&] { return detail::unit_determinant(lam); });
  } else {
    // a proper U only embeds H # U into End(H)
    r.run(p + "-injective", "lambda has zero kernel", [&]() -> std::optional<std::string> {
      SolveResult s = solve_linear(h.ring(), lam.matrix(), Vector(lam.codomain().rank()));
      if (!s.kernel_basis.empty()) return "kernel rank " + std::to_string(s.kernel_basis.size());
      return std::nullopt;
    });
  }
  return r;
}

// ---------------------------------------------------------------------------
// phi_1, phi_2 between #(H,H) and End(H)

struct PhiMaps {
  Side side;
  AlgebraData hat;   // #(H,H) or #^op(H,H)
  AlgebraData ends;  // End(H) or End(H)^op
  LinearMap phi1, phi2;
};

/// Right: phi1(f)(h) = sum f(h2) h1, phi2(g)(k) = sum g(k2) Sbar(k1).
/// Left: phi1(f)(h) = sum h1 f(h2), phi2(g)(k) = sum S(k1) g(k2).
inline PhiMaps phi_maps(const HopfData& h, Side side) {
  const std::size_t n = h.rank();
  const AlgebraData& ha = h.algebra();
  const Matrix& s = side == Side::Right ? h.twisted_antipode_or_throw().matrix() : h.antipode().matrix();
  Matrix p1(n * n, n * n), p2(n * n, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b)
      for (std::size_t k = 0; k < n; ++k)
        for (const auto& t : h.coalgebra().coproduct(k)) {
          if (t.right != c) continue;
          // the basis map c -> b, evaluated at k
          Vector v1 = side == Side::Right ? ha.multiply(ha.basis(b), ha.basis(t.left))
                                          : ha.multiply(ha.basis(t.left), ha.basis(b));
          Vector v2 = side == Side::Right ? ha.multiply(ha.basis(b), s.column(t.left))
                                          : ha.multiply(s.column(t.left), ha.basis(b));
          detail::add_block(p1, c * n + b, k * n, v1, t.coeff);
          detail::add_block(p2, c * n + b, k * n, v2, t.coeff);
        }
  ComoduleAlgebraData reg = regular_comodule(h.bialgebra());
  AlgebraData hat = side == Side::Right ? hat_smash(reg) : op_hat_smash(reg);
  AlgebraData ends = lambda_target(h, side);
  return {side, hat, ends, LinearMap(hat.carrier(), ends.carrier(), detail::reduced(h.ring(), p1)),
          LinearMap(ends.carrier(), hat.carrier(), detail::reduced(h.ring(), p2))};
}

inline ValidationReport phi_report(const PhiMaps& p) {
  ValidationReport r;
  const std::string pre = p.side == Side::Right ? "phi" : "phi-bar";
  r.run(pre + "-inverse-left", "phi2 o phi1 = id",
        [&] { return detail::identity_difference(compose(p.phi2, p.phi1)); });
  r.run(pre + "-inverse-right", "phi1 o phi2 = id",
        [&] { return detail::identity_difference(compose(p.phi1, p.phi2)); });
  r.run(pre + "-morphism", "phi1 is a unital algebra map",
        [&] { return check_algebra_morphism(p.hat, p.ends, p.phi1); });
  return r;
}

// ---------------------------------------------------------------------------
// the commutative diagrams

enum class PiOrder {
  ValueFirst,  // g(k5) * (sigma^-1(k2, Sbar k1)(k3 . a) # k4)
  ValueLast,   // (sigma^-1(k2, Sbar k1)(k3 . a) # k4) * g(k5)
};

inline std::string to_string(PiOrder o) { return o == PiOrder::ValueFirst ? "value-first" : "value-last"; }

struct DualityDiagram {
  Side side = Side::Right;
  PiOrder order = PiOrder::ValueFirst;
  std::string order_note;  // how the order was chosen
  AlgebraData smash;       // (A # H) # U or (A # H) #^op U
  AlgebraData hat;         // #(H, A # H) or #^op(H, A # H)
  AlgebraData ends;        // End_{-A}(H (x) A) or End_{A-}(A (x) H)^op
  AlgebraData target;      // A (x) (H # U) or A (x) (H #^op U)
  LinearMap alpha, chi, gamma, delta, pi, epsilon, epsilon_inv;
  std::optional<LinearMap> nu;  // right side only
  ValidationReport checks;
};

namespace detail {

inline ValidationReport diagram_checks(const DualityDiagram& d, const std::string& p) {
  ValidationReport r;
  r.run(p + "-epsilon-inverse", "epsilon and its inverse compose to the identity both ways",
        [&]() -> std::optional<std::string> {
          if (auto w = identity_difference(compose(d.epsilon_inv, d.epsilon))) return "inv o eps at " + *w;
          if (auto w = identity_difference(compose(d.epsilon, d.epsilon_inv))) return "eps o inv at " + *w;
          return std::nullopt;
        });
  r.run(p + "-chi-epsilon-alpha", "chi = epsilon o alpha",
        [&] { return map_difference(d.chi, compose(d.epsilon, d.alpha)); });
  r.run(p + "-pi-alpha", "pi o alpha = gamma", [&] { return map_difference(compose(d.pi, d.alpha), d.gamma); });
  r.run(p + "-pi-delta", "pi o delta = chi", [&] { return map_difference(compose(d.pi, d.delta), d.chi); });
  r.run(p + "-pi-invertible", "det pi is a unit", [&] { return unit_determinant(d.pi); });
  r.run(p + "-alpha-morphism", "alpha is an algebra map", [&] { return check_algebra_morphism(d.smash, d.hat, d.alpha); });
  r.run(p + "-gamma-morphism", "gamma is an algebra map", [&] { return check_algebra_morphism(d.smash, d.ends, d.gamma); });
  r.run(p + "-chi-morphism", "chi is an algebra map", [&] { return check_algebra_morphism(d.target, d.ends, d.chi); });
  r.run(p + "-delta-morphism", "delta is an algebra map", [&] { return check_algebra_morphism(d.target, d.hat, d.delta); });
  r.run(p + "-pi-morphism", "pi is an algebra map", [&] { return check_algebra_morphism(d.hat, d.ends, d.pi); });
  return r;
}

// alpha(b # f)(k) = b f(k), shared by both sides
inline Matrix alpha_matrix(std::size_t rb, std::size_t n, const SubalgebraU& u) {
  const std::size_t m = u.rank();
  Matrix out(n * rb, rb * m);
  for (std::size_t b = 0; b < rb; ++b)
    for (std::size_t j = 0; j < m; ++j)
      for (std::size_t k = 0; k < n; ++k) out(k * rb + b, b * m + j) = u.value(j, k);
  return out;
}

}  // namespace detail

/// The diagram for a right H-module subalgebra U. Without an explicit
/// order both readings of pi are built and the one with pi o alpha = gamma
/// is kept.
inline DualityDiagram build_right_diagram(const CrossedProductData& cp, const SubalgebraU& u,
                                          std::optional<PiOrder> order = std::nullopt) {
  if (u.side != Side::Right) fail(ErrorKind::SideMismatch, "the right diagram needs a right H-module U");
  detail::CrossedOps o(cp);
  const HopfData& h = o.hopf();
  const AlgebraData& a = o.algebra();
  const Ring& ring = a.ring();
  const std::size_t n = o.n, r = o.r, m = u.rank(), rb = n * r, rz = n * rb;
  const Vector one = a.unit();
  SweedlerTable d2 = o.table(2), d4 = o.table(4), d5 = o.table(5), d8 = o.table(8);
  std::vector<Vector> sbp(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) sbp[i * n + j] = o.sbar(o.hp(i, j));
  std::vector<Vector> sb(n);
  for (std::size_t i = 0; i < n; ++i) sb[i] = o.sbar(o.hb(i));

  DualityDiagram d;
  d.side = Side::Right;
  d.smash = right_smash(cp.comodule, u);
  d.hat = hat_smash(cp.comodule);
  d.ends = right_linear_endomorphisms(h.carrier(), a);
  d.target = tensor_algebra(a, heisenberg(h, u));

  // nu(a # h) = sum h4 (x) [Sbar(h3) a] sigma(Sbar h2, h1)
  Matrix nu(rb, rb);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (const auto& t : d4[x]) {
        const auto& l = t.legs;
        Vector av = o.am(o.act(sb[l[2]], o.ab(i)), o.sigma(sb[l[1]], o.hb(l[0])));
        detail::add_block(nu, i * n + x, 0, tensor(o.hb(l[3]), av), t.coeff);
      }
  LinearMap nu_map(cp.product.carrier(), tensor(h.carrier(), a.carrier()), detail::reduced(ring, nu));

  Matrix chi(rz, rb * m), gamma(rz, rb * m), delta(n * rb, rb * m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t col = (i * n + x) * m + j;
        const Vector ea = o.ab(i);
        for (std::size_t k = 0; k < n; ++k) {
          // chi: h (f -> k) (x) a
          for (const auto& t : d2[k]) {
            Scalar c = t.coeff * u.value(j, t.legs[1]);
            if (c != 0) detail::add_block(chi, col, k * rb, tensor(o.hp(x, t.legs[0]), ea), c);
          }
          // gamma: sum h4 k3 f(k4) (x) [Sbar(h3 k2) a] sigma(Sbar(h2 k1), h1)
          for (const auto& s : d4[x])
            for (const auto& t : d4[k]) {
              Scalar c = s.coeff * t.coeff * u.value(j, t.legs[3]);
              if (c == 0) continue;
              const auto &hl = s.legs, &kl = t.legs;
              Vector av = o.am(o.act(sbp[hl[2] * n + kl[1]], ea), o.sigma(sbp[hl[1] * n + kl[0]], o.hb(hl[0])));
              detail::add_block(gamma, col, k * rb, tensor(o.hp(hl[3], kl[2]), av), c);
            }
          // delta: sigma^-1(h2 k4, Sbar(h1 k3)) [(h3 k5) a] sigma(h4 k6, Sbar k2) # h5 k7 f(k8) Sbar(k1)
          for (const auto& s : d5[x])
            for (const auto& t : d8[k]) {
              Scalar c = s.coeff * t.coeff * u.value(j, t.legs[7]);
              if (c == 0) continue;
              const auto &hl = s.legs, &kl = t.legs;
              Vector av = o.sigma_inv(o.hp(hl[1], kl[3]), sbp[hl[0] * n + kl[2]]);
              av = o.am(av, o.act(o.hp(hl[2], kl[4]), ea));
              av = o.am(av, o.sigma(o.hp(hl[3], kl[5]), sb[kl[1]]));
              Vector hv = o.hm(o.hp(hl[4], kl[6]), sb[kl[0]]);
              detail::add_block(delta, col, k * rb, tensor(av, hv), c);
            }
        }
      }

  // pi(g)(k (x) a~) = nu(sum g(k5) . (sigma^-1(k2, Sbar k1)(k3 . a~) # k4)), both orders
  auto pi_value = [&](std::size_t c, std::size_t b, std::size_t k, const Vector& at, PiOrder ord) {
    Vector acc(rb);
    for (const auto& t : d5[k]) {
      const auto& l = t.legs;
      if (l[4] != c) continue;
      Vector inner = tensor(o.am(o.sigma_inv(o.hb(l[1]), sb[l[0]]), o.act(o.hb(l[2]), at)), o.hb(l[3]));
      Vector eb = unit_vector(rb, b);
      axpy(acc, t.coeff, ord == PiOrder::ValueFirst ? o.bm(eb, inner) : o.bm(inner, eb));
    }
    ring.reduce_in_place(acc);
    return nu_map(acc);
  };
  auto pi_matrix = [&](PiOrder ord) {
    Matrix pm(rz, n * rb);
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < rb; ++b)
        for (std::size_t k = 0; k < n; ++k) detail::add_block(pm, c * rb + b, k * rb, pi_value(c, b, k, one, ord), 1);
    return LinearMap(d.hat.carrier(), d.ends.carrier(), detail::reduced(ring, pm));
  };

  // epsilon(g)(k (x) 1) = sum tau(g(k2))(k1 (x) 1), and its inverse
  Matrix eps(rz, n * rb), eps_inv(n * rb, rz);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : d2[k]) {
      const std::size_t k1 = t.legs[0], k2 = t.legs[1];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t x = 0; x < n; ++x) {
          detail::add_block(eps, k2 * rb + i * n + x, k * rb, tensor(o.hp(x, k1), o.ab(i)), t.coeff);
          detail::add_block(eps_inv, k2 * rb + x * r + i, k * rb, tensor(o.ab(i), o.hm(o.hb(x), sb[k1])), t.coeff);
        }
    }

  d.alpha = LinearMap(d.smash.carrier(), d.hat.carrier(), detail::alpha_matrix(rb, n, u));
  d.chi = LinearMap(d.target.carrier(), d.ends.carrier(), detail::reduced(ring, chi));
  d.gamma = LinearMap(d.smash.carrier(), d.ends.carrier(), detail::reduced(ring, gamma));
  d.delta = LinearMap(d.target.carrier(), d.hat.carrier(), detail::reduced(ring, delta));
  d.epsilon = LinearMap(d.hat.carrier(), d.ends.carrier(), detail::reduced(ring, eps));
  d.epsilon_inv = LinearMap(d.ends.carrier(), d.hat.carrier(), detail::reduced(ring, eps_inv));
  d.nu = nu_map;

  if (order) {
    d.order = *order;
    d.pi = pi_matrix(*order);
    d.order_note = "fixed by caller";
  } else {
    LinearMap first = pi_matrix(PiOrder::ValueFirst), last = pi_matrix(PiOrder::ValueLast);
    bool ok_first = !detail::map_difference(compose(first, d.alpha), d.gamma);
    bool ok_last = !detail::map_difference(compose(last, d.alpha), d.gamma);
    d.order = ok_first || !ok_last ? PiOrder::ValueFirst : PiOrder::ValueLast;
    d.pi = d.order == PiOrder::ValueFirst ? first : last;
    d.order_note = ok_first && ok_last ? "both orders commute" : ok_first || ok_last ? "only this order commutes"
                                                                                   : "neither order commutes";
  }

  d.checks = detail::diagram_checks(d, "right");
  d.checks.add("right-pi-order", "pi product order: " + to_string(d.order), true, d.order_note);
  d.checks.run("right-pi-linear", "pi(g) is right A-linear", [&]() -> std::optional<std::string> {
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < rb; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          Vector base = pi_value(c, b, k, one, d.order);
          for (std::size_t i = 0; i < r; ++i) {
            Vector want(rb);
            for (std::size_t x = 0; x < n; ++x)
              for (std::size_t i2 = 0; i2 < r; ++i2)
                if (base[x * r + i2] != 0)
                  for (const auto& [q, v] : a.basis_product(i2, i)) want[x * r + q] += base[x * r + i2] * v;
            ring.reduce_in_place(want);
            if (pi_value(c, b, k, o.ab(i), d.order) != want)
              return "g = " + d.hat.carrier().label(c * rb + b) + " at " + h.carrier().label(k) + " (x) " +
                     a.carrier().label(i);
          }
        }
    return std::nullopt;
  });
  return d;
}

/// The diagram for a left H-module subalgebra U and #^op.
inline DualityDiagram build_op_diagram(const CrossedProductData& cp, const SubalgebraU& u) {
  if (u.side != Side::Left) fail(ErrorKind::SideMismatch, "the op diagram needs a left H-module U");
  detail::CrossedOps o(cp);
  const HopfData& h = o.hopf();
  const AlgebraData& a = o.algebra();
  const Ring& ring = a.ring();
  const std::size_t n = o.n, r = o.r, m = u.rank(), rb = n * r, rz = n * rb;
  SweedlerTable d2 = o.table(2), d4 = o.table(4), d8 = o.table(8);
  std::vector<Vector> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = o.s(o.hb(i));

  DualityDiagram d;
  d.side = Side::Left;
  d.order_note = "no ambiguity on this side";
  d.smash = op_smash(cp.comodule, u);
  d.hat = op_hat_smash(cp.comodule);
  d.ends = left_linear_endomorphisms_op(a, h.carrier());
  d.target = tensor_algebra(a, heisenberg(h, u));

  Matrix chi(rz, rb * m), gamma(rz, rb * m), delta(n * rb, rb * m);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t x = 0; x < n; ++x)
      for (std::size_t j = 0; j < m; ++j) {
        const std::size_t col = (i * n + x) * m + j;
        const Vector ea = o.ab(i);
        for (std::size_t k = 0; k < n; ++k) {
          // chi: a (x) (f -> k) h
          for (const auto& t : d2[k]) {
            Scalar c = t.coeff * u.value(j, t.legs[1]);
            if (c != 0) detail::add_block(chi, col, k * rb, tensor(ea, o.hp(t.legs[0], x)), c);
          }
          // gamma: sum [k1 a] sigma(k2, h1) (x) k3 f(k4) h2
          for (const auto& s : d2[x])
            for (const auto& t : d4[k]) {
              Scalar c = s.coeff * t.coeff * u.value(j, t.legs[3]);
              if (c == 0) continue;
              const auto &hl = s.legs, &kl = t.legs;
              Vector av = o.am(o.act(o.hb(kl[0]), ea), o.sigma(o.hb(kl[1]), o.hb(hl[0])));
              detail::add_block(gamma, col, k * rb, tensor(av, o.hp(kl[2], hl[1])), c);
            }
          // delta: sigma^-1(S k4, k5) [S(k3) a] sigma(S k2, k6 h1) # S(k1) k7 f(k8) h2
          for (const auto& s : d2[x])
            for (const auto& t : d8[k]) {
              Scalar c = s.coeff * t.coeff * u.value(j, t.legs[7]);
              if (c == 0) continue;
              const auto &hl = s.legs, &kl = t.legs;
              Vector av = o.sigma_inv(sv[kl[3]], o.hb(kl[4]));
              av = o.am(av, o.act(sv[kl[2]], ea));
              av = o.am(av, o.sigma(sv[kl[1]], o.hp(kl[5], hl[0])));
              Vector hv = o.hm(sv[kl[0]], o.hp(kl[6], hl[1]));
              detail::add_block(delta, col, k * rb, tensor(av, hv), c);
            }
        }
      }

  // pi(g)(a~ (x) k) = sum (a~ # k1) g(k2)
  auto pi_value = [&](std::size_t c, std::size_t b, std::size_t k, const Vector& at) {
    Vector acc(rb);
    for (const auto& t : d2[k])
      if (t.legs[1] == c) axpy(acc, t.coeff, o.bm(tensor(at, o.hb(t.legs[0])), unit_vector(rb, b)));
    ring.reduce_in_place(acc);
    return acc;
  };
  Matrix pi(rz, n * rb), eps(rz, n * rb), eps_inv(n * rb, rz);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < rb; ++b)
      for (std::size_t k = 0; k < n; ++k) detail::add_block(pi, c * rb + b, k * rb, pi_value(c, b, k, a.unit()), 1);
  for (std::size_t k = 0; k < n; ++k)
    for (const auto& t : d2[k]) {
      const std::size_t k1 = t.legs[0], k2 = t.legs[1];
      for (std::size_t i = 0; i < r; ++i)
        for (std::size_t x = 0; x < n; ++x) {
          // eps(g)(1 (x) k) = sum (1 (x) k1) g(k2); eps^-1(F)(k) = sum (1 (x) S k1) F(1 (x) k2)
          detail::add_block(eps, k2 * rb + i * n + x, k * rb, tensor(o.ab(i), o.hp(k1, x)), t.coeff);
          detail::add_block(eps_inv, k2 * rb + i * n + x, k * rb, tensor(o.ab(i), o.hm(sv[k1], o.hb(x))), t.coeff);
        }
    }

  d.alpha = LinearMap(d.smash.carrier(), d.hat.carrier(), detail::alpha_matrix(rb, n, u));
  d.chi = LinearMap(d.target.carrier(), d.ends.carrier(), detail::reduced(ring, chi));
  d.gamma = LinearMap(d.smash.carrier(), d.ends.carrier(), detail::reduced(ring, gamma));
  d.delta = LinearMap(d.target.carrier(), d.hat.carrier(), detail::reduced(ring, delta));
  d.pi = LinearMap(d.hat.carrier(), d.ends.carrier(), detail::reduced(ring, pi));
  d.epsilon = LinearMap(d.hat.carrier(), d.ends.carrier(), detail::reduced(ring, eps));
  d.epsilon_inv = LinearMap(d.ends.carrier(), d.hat.carrier(), detail::reduced(ring, eps_inv));

  d.checks = detail::diagram_checks(d, "op");
  d.checks.run("op-pi-linear", "pi(g) is left A-linear", [&]() -> std::optional<std::string> {
    for (std::size_t c = 0; c < n; ++c)
      for (std::size_t b = 0; b < rb; ++b)
        for (std::size_t k = 0; k < n; ++k) {
          Vector base = pi_value(c, b, k, a.unit());
          for (std::size_t i = 0; i < r; ++i) {
            Vector want(rb);
            for (std::size_t i2 = 0; i2 < r; ++i2)
              for (std::size_t x = 0; x < n; ++x)
                if (base[i2 * n + x] != 0)
                  for (const auto& [q, v] : a.basis_product(i, i2)) want[q * n + x] += base[i2 * n + x] * v;
            ring.reduce_in_place(want);
            if (pi_value(c, b, k, o.ab(i)) != want)
              return "g = " + d.hat.carrier().label(c * rb + b) + " at " + a.carrier().label(i) + " (x) " +
                     h.carrier().label(k);
          }
        }
    return std::nullopt;
  });
  return d;
}

inline DualityDiagram build_diagram(const CrossedProductData& cp, const SubalgebraU& u,
                                    std::optional<PiOrder> order = std::nullopt) {
  return u.side == Side::Right ? build_right_diagram(cp, u, order) : build_op_diagram(cp, u);
}

/// The unique map t with chi o t = gamma; chi must be injective and
/// Im gamma inside Im chi.
inline LinearMap factor_through(const LinearMap& chi, const LinearMap& gamma) {
  const Ring& ring = chi.ring();
  if (!kernel(ring, chi.matrix()).empty()) fail(ErrorKind::NotInvertible, "chi is not injective");
  Matrix t(chi.domain().rank(), gamma.domain().rank());
  for (std::size_t c = 0; c < gamma.domain().rank(); ++c) {
    SolveResult s = solve_linear(chi, gamma.matrix().column(c));
    if (!s.solvable())
      fail(ErrorKind::NotInvertible, "Im gamma is not inside Im chi at " + gamma.domain().label(c));
    t.set_column(c, *s.particular);
  }
  return LinearMap(gamma.domain(), chi.domain(), t);
}

/// chi^-1 o gamma, certified as an algebra isomorphism.
inline AlgebraIso duality_iso(const DualityDiagram& d) {
  return certify_iso(d.smash, d.target, factor_through(d.chi, d.gamma));
}

inline AlgebraIso duality_iso(const CrossedProductData& cp, const SubalgebraU& u) {
  return duality_iso(build_diagram(cp, u));
}

// ---------------------------------------------------------------------------
// (A # H) # H* = M_n(A)

struct MatrixIso {
  std::vector<AlgebraIso> legs;  // duality, id (x) lambda, End(H) = M_n, A (x) M_n = M_n(A)
  AlgebraIso total;
};

/// M_n(A) with e(i,j) (x) a at (i*n + j)*r + a.
inline AlgebraData matrix_algebra_over(const AlgebraData& a, std::size_t n) {
  return tensor_algebra(matrix_algebra(a.ring(), n), a);
}

inline MatrixIso matrix_iso(const CrossedProductData& cp, const std::optional<SubalgebraU>& u_in = std::nullopt) {
  const HopfData& h = cp.hopf_or_throw();
  SubalgebraU u = u_in ? *u_in : full_dual(h, Side::Right);
  const AlgebraData& a = cp.algebra();
  const Ring& ring = a.ring();
  const std::size_t n = h.rank(), r = a.rank();
  MatrixIso out;
  out.legs.push_back(duality_iso(cp, u));

  AlgebraData ends = endomorphism_algebra(h.carrier());
  AlgebraData a_ends = tensor_algebra(a, ends);
  LinearMap lam = lambda_map(h, u);
  LinearMap leg2(out.legs[0].target.carrier(), a_ends.carrier(),
                 kron(ring, Matrix::identity(r), lam.matrix()));
  out.legs.push_back(certify_iso(out.legs[0].target, a_ends, leg2));

  // E(c>b) -> e(b,c)
  Matrix p(n * n, n * n);
  for (std::size_t c = 0; c < n; ++c)
    for (std::size_t b = 0; b < n; ++b) p(b * n + c, c * n + b) = 1;
  AlgebraData a_mn = tensor_algebra(a, matrix_algebra(ring, n));
  out.legs.push_back(certify_iso(a_ends, a_mn, LinearMap(a_ends.carrier(), a_mn.carrier(), kron(ring, Matrix::identity(r), p))));

  AlgebraData mna = matrix_algebra_over(a, n);
  Matrix swap(n * n * r, n * n * r);
  for (std::size_t i = 0; i < r; ++i)
    for (std::size_t e = 0; e < n * n; ++e) swap(e * r + i, i * n * n + e) = 1;
  out.legs.push_back(certify_iso(a_mn, mna, LinearMap(a_mn.carrier(), mna.carrier(), swap)));

  LinearMap total = out.legs[0].map;
  for (std::size_t i = 1; i < out.legs.size(); ++i) total = compose(out.legs[i].map, total);
  out.total = certify_iso(out.legs[0].source, mna, total);
  return out;
}

// ---------------------------------------------------------------------------
// compatibility of (V, U)

struct CompatMaps {
  LinearMap phi;  // H (x) A -> Hom(H, A), index h*r + a -> k*r + a
  LinearMap psi;
};

/// Right side uses Sbar, the op side uses S.
inline CompatMaps compat_maps(const CrossedProductData& cp, Side side) {
  detail::CrossedOps o(cp);
  const std::size_t n = o.n, r = o.r;
  const Ring& ring = o.algebra().ring();
  SweedlerTable d2 = o.table(2), d5 = o.table(5);
  std::vector<Vector> sv(n);
  for (std::size_t i = 0; i < n; ++i) sv[i] = side == Side::Right ? o.sbar(o.hb(i)) : o.s(o.hb(i));
  Matrix phi(n * r, n * r), psi(n * r, n * r);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t col = x * r + i;
      const Vector ea = o.ab(i), hx = o.hb(x);
      for (std::size_t k = 0; k < n; ++k) {
        for (const auto& t : d2[k]) {
          const auto& l = t.legs;
          Vector v = side == Side::Right ? o.am(o.act(sv[l[1]], ea), o.sigma(sv[l[0]], hx))
                                         : o.am(o.act(o.hb(l[0]), ea), o.sigma(o.hb(l[1]), hx));
          detail::add_block(phi, col, k * r, v, t.coeff);
        }
        for (const auto& t : d5[k]) {
          const auto& l = t.legs;
          Vector v;
          if (side == Side::Right) {
            v = o.sigma_inv(o.hb(l[2]), sv[l[1]]);
            v = o.am(v, o.act(o.hb(l[3]), ea));
            v = o.am(v, o.sigma(o.hb(l[4]), o.hm(sv[l[0]], hx)));
          } else {
            v = o.sigma_inv(sv[l[2]], o.hb(l[3]));
            v = o.am(v, o.act(sv[l[1]], ea));
            v = o.am(v, o.sigma(sv[l[0]], o.hp(l[4], x)));
          }
          detail::add_block(psi, col, k * r, v, t.coeff);
        }
      }
    }
  FreeModule dom = tensor(o.hopf().carrier(), o.algebra().carrier());
  FreeModule hom = hom_module(o.hopf().carrier(), o.algebra().carrier());
  return {LinearMap(dom, hom, detail::reduced(ring, phi)), LinearMap(dom, hom, detail::reduced(ring, psi))};
}

/// Generators of J(A (x) V) inside Hom(H, A).
inline std::vector<Vector> j_image(const AlgebraData& a, const std::vector<Vector>& v) {
  const std::size_t r = a.rank();
  std::vector<Vector> out;
  for (std::size_t i = 0; i < r; ++i)
    for (const auto& g : v) {
      Vector w(g.size() * r);
      for (std::size_t k = 0; k < g.size(); ++k) w[k * r + i] = g[k];
      out.push_back(w);
    }
  return out;
}

/// First domain basis element whose image is outside J(A (x) V).
inline std::optional<std::string> j_membership(const LinearMap& f, const AlgebraData& a, const std::vector<Vector>& v) {
  std::vector<Vector> gens = j_image(a, v);
  for (std::size_t c = 0; c < f.domain().rank(); ++c)
    if (!submodule_membership(f.ring(), gens, f.matrix().column(c))) return f.domain().label(c);
  return std::nullopt;
}

inline ValidationReport compat_check(const CrossedProductData& cp, const SubalgebraU& u,
                                     const std::vector<Vector>& v) {
  ValidationReport r;
  const HopfData& h = cp.hopf_or_throw();
  const std::string p = u.side == Side::Right ? "compat" : "compat-op";
  CompatMaps maps = compat_maps(cp, u.side);
  r.run(p + "-phi", "phi(H (x) A) lies in J(A (x) V)", [&]() -> std::optional<std::string> {
    if (auto w = j_membership(maps.phi, cp.algebra(), v)) return "phi(" + *w + ")";
    return std::nullopt;
  });
  r.run(p + "-psi", "psi(H (x) A) lies in J(A (x) V)", [&]() -> std::optional<std::string> {
    if (auto w = j_membership(maps.psi, cp.algebra(), v)) return "psi(" + *w + ")";
    return std::nullopt;
  });
  r.run(p + "-rl", "(V, U) satisfies the RL-condition", [&]() -> std::optional<std::string> {
    HopfData d = dual_hopf(h);
    for (const auto& w : rl_check(h, u, v))
      if (!w.found()) return "g = " + format_vector(d.carrier(), w.g);
    return std::nullopt;
  });
  if (u.side == Side::Right)
    r.run(p + "-submodule", "V is a right H-submodule of H*", [&]() -> std::optional<std::string> {
      HopfData d = dual_hopf(h);
      RegularActions ra = regular_actions(h, d.carrier());
      for (const auto& g : v)
        for (std::size_t x = 0; x < h.rank(); ++x)
          if (!submodule_membership(h.ring(), v, ra.right(tensor(g, h.algebra().basis(x)))))
            return format_vector(d.carrier(), g) + " . " + h.carrier().label(x);
      return std::nullopt;
    });
  return r;
}

// ---------------------------------------------------------------------------
// the coactions upsilon and omega on H*

enum class CoactionKind { Upsilon, Omega };

inline std::string to_string(CoactionKind k) { return k == CoactionKind::Upsilon ? "upsilon" : "omega"; }

struct CoactionTable {
  CoactionKind kind = CoactionKind::Upsilon;
  HopfData hopf;
  LinearMap map;  // H* -> H (x) H*, e_x (x) d_y at x*n + y

  bool trivial() const {
    const std::size_t n = hopf.rank();
    for (std::size_t f = 0; f < n; ++f)
      if (map.matrix().column(f) != tensor(hopf.algebra().unit(), unit_vector(n, f))) return false;
    return true;
  }
};

/// Solves sum f<-1> f<0>(h) = sum h3 Sbar(h1) f(h2) (upsilon) or
/// sum f(h2) S(h1) h3 (omega) for every basis f.
inline CoactionTable coaction_table(const HopfData& h, CoactionKind kind) {
  const std::size_t n = h.rank();
  const Ring& ring = h.ring();
  const Matrix& s = kind == CoactionKind::Upsilon ? h.twisted_antipode_or_throw().matrix() : h.antipode().matrix();
  const AlgebraData& ha = h.algebra();
  // zeta = e_x (x) d_y  ->  [h -> [y = h] e_x], i.e. E(y>x)
  Matrix eval(n * n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t y = 0; y < n; ++y) eval(y * n + x, x * n + y) = 1;
  LinearMap ev(tensor(h.carrier(), dual_hopf(h).carrier()), endomorphism_algebra(h.carrier()).carrier(), eval);
  SweedlerTable d3 = sweedler_table(h.coalgebra(), 3);
  Matrix out(n * n, n);
  for (std::size_t f = 0; f < n; ++f) {
    Vector target(n * n);
    for (std::size_t k = 0; k < n; ++k)
      for (const auto& t : d3[k]) {
        const auto& l = t.legs;
        if (l[1] != f) continue;
        Vector v = kind == CoactionKind::Upsilon ? ha.multiply(ha.basis(l[2]), s.column(l[0]))
                                                 : ha.multiply(s.column(l[0]), ha.basis(l[2]));
        for (std::size_t x = 0; x < n; ++x) target[k * n + x] += t.coeff * v[x];
      }
    ring.reduce_in_place(target);
    SolveResult sol = solve_linear(ev, target);
    if (!sol.solvable()) fail(ErrorKind::ValidationError, "no " + to_string(kind) + " for " + dual_hopf(h).carrier().label(f));
    if (sol.status != SolveResult::Status::Unique)
      fail(ErrorKind::NonUniqueSolution, to_string(kind) + " is not unique at " + dual_hopf(h).carrier().label(f));
    out.set_column(f, *sol.particular);
  }
  HopfData d = dual_hopf(h);
  return {kind, h, LinearMap(d.carrier(), tensor(h.carrier(), d.carrier()), out)};
}

namespace detail {

struct CoTerm {
  std::size_t x, y;  // f<-1> = e_x, f<0> = d_y
  Scalar c;
};

inline std::vector<CoTerm> co_terms(const CoactionTable& t, std::size_t f) {
  const std::size_t n = t.hopf.rank();
  std::vector<CoTerm> out;
  for (std::size_t i = 0; i < n * n; ++i)
    if (t.map.matrix()(i, f) != 0) out.push_back({i / n, i % n, t.map.matrix()(i, f)});
  return out;
}

}  // namespace detail

/// The characterizing identities, each on all basis elements.
inline ValidationReport coaction_report(const CoactionTable& t) {
  ValidationReport r;
  const HopfData& h = t.hopf;
  const std::size_t n = h.rank();
  const Ring& ring = h.ring();
  const AlgebraData& ha = h.algebra();
  HopfData d = dual_hopf(h);
  const AlgebraData& da = d.algebra();
  RegularActions ra = regular_actions(h, d.carrier());
  const bool ups = t.kind == CoactionKind::Upsilon;
  const std::string p = to_string(t.kind);
  std::vector<std::vector<detail::CoTerm>> co(n);
  for (std::size_t f = 0; f < n; ++f) co[f] = detail::co_terms(t, f);
  auto dl = [&](std::size_t i) { return d.carrier().label(i); };
  auto right = [&](const Vector& g, const Vector& x) { return ra.right(tensor(g, x)); };
  auto left = [&](const Vector& x, const Vector& g) { return ra.left(tensor(x, g)); };

  r.run(p + "-1a", ups ? "f * g = sum (g f<-1>) * f<0>" : "f * g = sum (f<-1> g) * f<0>",
        [&]() -> std::optional<std::string> {
          for (std::size_t f = 0; f < n; ++f)
            for (std::size_t g = 0; g < n; ++g) {
              Vector rhs(n);
              for (const auto& c : co[f]) {
                Vector act = ups ? right(da.basis(g), ha.basis(c.x)) : left(ha.basis(c.x), da.basis(g));
                axpy(rhs, c.c, da.multiply(act, da.basis(c.y)));
              }
              ring.reduce_in_place(rhs);
              if (da.multiply(da.basis(f), da.basis(g)) != rhs) return "f = " + dl(f) + ", g = " + dl(g);
            }
          return std::nullopt;
        });
  r.run(p + "-1b", ups ? "h <- f = sum f<-1>(f<0> -> h)" : "h <- f = sum (f<0> -> h) f<-1>",
        [&]() -> std::optional<std::string> {
          for (std::size_t f = 0; f < n; ++f)
            for (std::size_t x = 0; x < n; ++x) {
              Vector lhs(n), rhs(n);
              for (const auto& s : h.coalgebra().coproduct(x)) {
                if (s.left == f) lhs[s.right] += s.coeff;
                for (const auto& c : co[f])
                  if (c.y == s.right)
                    axpy(rhs, s.coeff * c.c, ups ? ha.multiply(ha.basis(c.x), ha.basis(s.left))
                                                 : ha.multiply(ha.basis(s.left), ha.basis(c.x)));
              }
              ring.reduce_in_place(lhs);
              ring.reduce_in_place(rhs);
              if (lhs != rhs) return "f = " + dl(f) + ", h = " + h.carrier().label(x);
            }
          return std::nullopt;
        });
  r.run(p + "-1c", ups ? "sum h3 Sbar(h1) f(h2) = sum f<-1> f<0>(h)" : "sum f(h2) S(h1) h3 = sum f<0>(h) f<-1>",
        [&]() -> std::optional<std::string> {
          const Matrix& s = ups ? h.twisted_antipode_or_throw().matrix() : h.antipode().matrix();
          SweedlerTable d3 = sweedler_table(h.coalgebra(), 3);
          for (std::size_t f = 0; f < n; ++f)
            for (std::size_t x = 0; x < n; ++x) {
              Vector lhs(n), rhs(n);
              for (const auto& u : d3[x]) {
                const auto& l = u.legs;
                if (l[1] != f) continue;
                axpy(lhs, u.coeff, ups ? ha.multiply(ha.basis(l[2]), s.column(l[0]))
                                       : ha.multiply(s.column(l[0]), ha.basis(l[2])));
              }
              for (const auto& c : co[f])
                if (c.y == x) rhs[c.x] += c.c;
              ring.reduce_in_place(lhs);
              ring.reduce_in_place(rhs);
              if (lhs != rhs) return "f = " + dl(f) + ", h = " + h.carrier().label(x);
            }
          return std::nullopt;
        });
  if (ups) {
    r.run(p + "-3", "(f * f~) * g = sum g(f~<-1> f<-1>) * (f<0> * f~<0>)", [&]() -> std::optional<std::string> {
      for (std::size_t f = 0; f < n; ++f)
        for (std::size_t f2 = 0; f2 < n; ++f2)
          for (std::size_t g = 0; g < n; ++g) {
            Vector lhs = da.multiply(da.multiply(da.basis(f), da.basis(f2)), da.basis(g)), rhs(n);
            for (const auto& a : co[f])
              for (const auto& b : co[f2]) {
                Vector act = right(da.basis(g), ha.multiply(ha.basis(b.x), ha.basis(a.x)));
                axpy(rhs, a.c * b.c, da.multiply(act, da.multiply(da.basis(a.y), da.basis(b.y))));
              }
            ring.reduce_in_place(rhs);
            if (lhs != rhs) return "f = " + dl(f) + ", f~ = " + dl(f2) + ", g = " + dl(g);
          }
      return std::nullopt;
    });
  } else {
    r.run(p + "-3", "omega(f * f~) = sum f<-1> f~<-1> (x) f<0> * f~<0>, omega(eps) = 1 (x) eps",
          [&]() -> std::optional<std::string> {
            if (t.map(da.unit()) != tensor(ha.unit(), da.unit())) return std::string("eps");
            for (std::size_t f = 0; f < n; ++f)
              for (std::size_t f2 = 0; f2 < n; ++f2) {
                Vector rhs(n * n);
                for (const auto& a : co[f])
                  for (const auto& b : co[f2])
                    axpy(rhs, a.c * b.c,
                         tensor(ha.multiply(ha.basis(a.x), ha.basis(b.x)), da.multiply(da.basis(a.y), da.basis(b.y))));
                ring.reduce_in_place(rhs);
                if (t.map(da.multiply(da.basis(f), da.basis(f2))) != rhs) return "f = " + dl(f) + ", f~ = " + dl(f2);
              }
            return std::nullopt;
          });
  }
  r.run(p + "-4", ups ? "upsilon(f h) = sum Sbar(h3) f<-1> h1 (x) f<0> h2"
                      : "omega(h f) = sum h1 f<-1> S(h3) (x) h2 f<0>",
        [&]() -> std::optional<std::string> {
          const Matrix& s = ups ? h.twisted_antipode_or_throw().matrix() : h.antipode().matrix();
          SweedlerTable d3 = sweedler_table(h.coalgebra(), 3);
          for (std::size_t f = 0; f < n; ++f)
            for (std::size_t x = 0; x < n; ++x) {
              Vector moved = ups ? right(da.basis(f), ha.basis(x)) : left(ha.basis(x), da.basis(f));
              Vector rhs(n * n);
              for (const auto& u : d3[x]) {
                const auto& l = u.legs;
                for (const auto& c : co[f]) {
                  Vector hv = ups ? ha.multiply(ha.multiply(s.column(l[2]), ha.basis(c.x)), ha.basis(l[0]))
                                  : ha.multiply(ha.multiply(ha.basis(l[0]), ha.basis(c.x)), s.column(l[2]));
                  Vector fv = ups ? right(da.basis(c.y), ha.basis(l[1])) : left(ha.basis(l[1]), da.basis(c.y));
                  axpy(rhs, u.coeff * c.c, tensor(hv, fv));
                }
              }
              ring.reduce_in_place(rhs);
              if (t.map(moved) != rhs) return "f = " + dl(f) + ", h = " + h.carrier().label(x);
            }
          return std::nullopt;
        });
  return r;
}

/// V = coaction^-1(H (x) U), as a canonical generating set.
inline std::vector<Vector> coaction_preimage(const CoactionTable& t, const SubalgebraU& u) {
  const std::size_t n = t.hopf.rank(), m = u.rank();
  const Ring& ring = t.hopf.ring();
  // kernel of [coaction | -(e_x (x) u_j)] projected to the first n coordinates
  Matrix big(n * n, n + n * m);
  for (std::size_t f = 0; f < n; ++f) big.set_column(f, t.map.matrix().column(f));
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t j = 0; j < m; ++j) {
      Vector v = tensor(unit_vector(n, x), u.elements[j]);
      for (auto& e : v) e = -e;
      ring.reduce_in_place(v);
      big.set_column(n + x * m + j, v);
    }
  std::vector<Vector> gens;
  for (const auto& k : kernel(ring, big)) gens.emplace_back(k.begin(), k.begin() + static_cast<std::ptrdiff_t>(n));
  return echelon_basis(ring, gens, n);
}

}  // namespace hopfdual
