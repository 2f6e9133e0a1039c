#pragma once

/**
 * @file crossed.hpp
 * @brief Crossed products A #_sigma H, cocycle validation, cleft extensions
 * and the opposite crossed product A^op #_tau H^op.
 *
 * A #_sigma H lives on A (x) H with a # h at index a * rank(H) + h. A cocycle
 * is a LinearMap H (x) H -> A, so sigma(h (x) k) is column h * rank(H) + k.
 */

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/actions.hpp"
#include "hopfdual/algebra.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/solve.hpp"

namespace hopfdual {

namespace detail {

// f(h (x) k) for a map on H (x) H given by basis h and a vector k
inline Vector apply_left_basis(const LinearMap& f, std::size_t rh, std::size_t h, const Vector& k) {
  Vector out(f.codomain().rank());
  for (std::size_t j = 0; j < k.size(); ++j)
    if (k[j] != 0) axpy(out, k[j], f.matrix().column(h * rh + j));
  f.ring().reduce_in_place(out);
  return out;
}

inline Vector apply_right_basis(const LinearMap& f, std::size_t rh, const Vector& h, std::size_t k) {
  Vector out(f.codomain().rank());
  for (std::size_t i = 0; i < h.size(); ++i)
    if (h[i] != 0) axpy(out, h[i], f.matrix().column(i * rh + k));
  f.ring().reduce_in_place(out);
  return out;
}

inline Vector scaled(const Ring& ring, Vector v, const Scalar& c) {
  for (auto& x : v) x = ring.mul(x, c);
  return v;
}

}  // namespace detail

// ---------------------------------------------------------------------------
// cocycles

struct CocycleData {
  LinearMap sigma;                     // H (x) H -> A
  std::optional<LinearMap> sigma_inv;  // absent when sigma is not invertible
  std::string inverse_error;           // why sigma_inv is absent
  bool normal = false;
  bool cocycle = false;
  bool twisted_module = false;
  std::string normal_witness, cocycle_witness, twisted_witness;

  const LinearMap& inverse_or_throw() const {
    require(sigma_inv.has_value(), ErrorKind::NotConvInvertible,
            "cocycle is not convolution invertible: " + inverse_error);
    return *sigma_inv;
  }
};

/// sigma(h (x) k) = eps(h) eps(k) 1_A.
inline LinearMap trivial_cocycle(const BialgebraData& h, const AlgebraData& a) {
  const std::size_t n = h.rank();
  Matrix m(a.rank(), n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar e = h.ring().mul(h.coalgebra().counit()[i], h.coalgebra().counit()[j]);
      for (std::size_t k = 0; k < a.rank(); ++k) m(k, i * n + j) = h.ring().mul(e, a.unit()[k]);
    }
  return LinearMap(tensor(h.carrier(), h.carrier()), a.carrier(), m);
}

/// Evaluates normality, the cocycle condition and the twisted module
/// condition on every basis pair and triple, and computes sigma^-1 when it
/// exists. A missing inverse is recorded, not thrown, so the flags survive.
inline CocycleData validate_cocycle(const WeakActionData& w, const LinearMap& sigma) {
  const BialgebraData& h = w.hopf;
  const AlgebraData& a = w.algebra;
  const Ring& ring = a.ring();
  const std::size_t rh = h.rank();
  require(sigma.domain().rank() == rh * rh && sigma.codomain().rank() == a.rank(),
          ErrorKind::DimensionMismatch, "cocycle must map H (x) H to A");
  const AlgebraData& ha = h.algebra();
  const CoalgebraData& hc = h.coalgebra();
  auto sig = [&](std::size_t x, std::size_t y) { return sigma.matrix().column(x * rh + y); };

  CocycleData out{sigma, std::nullopt, "", false, false, false, "", "", ""};
  try {
    out.sigma_inv = convolution_invert(tensor_coalgebra(hc, hc), a, sigma);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotConvInvertible && e.kind() != ErrorKind::OneSidedInverse) throw;
    out.inverse_error = e.what();
  }

  out.normal = true;
  for (std::size_t x = 0; x < rh && out.normal; ++x) {
    Vector expect = detail::scaled(ring, a.unit(), hc.counit()[x]);
    if (detail::apply_left_basis(sigma, rh, x, ha.unit()) != expect) {
      out.normal = false;
      out.normal_witness = "sigma(" + h.carrier().label(x) + ",1)";
    } else if (detail::apply_right_basis(sigma, rh, ha.unit(), x) != expect) {
      out.normal = false;
      out.normal_witness = "sigma(1," + h.carrier().label(x) + ")";
    }
  }

  // sum [h1 sigma(k1, l1)] sigma(h2, k2 l2) = sum sigma(h1, k1) sigma(h2 k2, l)
  out.cocycle = true;
  for (std::size_t x = 0; x < rh && out.cocycle; ++x)
    for (std::size_t y = 0; y < rh && out.cocycle; ++y)
      for (std::size_t z = 0; z < rh && out.cocycle; ++z) {
        Vector lhs(a.rank()), rhs(a.rank());
        for (const auto& s : hc.coproduct(x))
          for (const auto& t : hc.coproduct(y)) {
            for (const auto& u : hc.coproduct(z)) {
              Vector kl = ha.multiply(ha.basis(t.right), ha.basis(u.right));
              axpy(lhs, s.coeff * t.coeff * u.coeff,
                   a.multiply(w.act(s.left, sig(t.left, u.left)),
                              detail::apply_left_basis(sigma, rh, s.right, kl)));
            }
            Vector hk = ha.multiply(ha.basis(s.right), ha.basis(t.right));
            axpy(rhs, s.coeff * t.coeff,
                 a.multiply(sig(s.left, t.left), detail::apply_right_basis(sigma, rh, hk, z)));
          }
        ring.reduce_in_place(lhs);
        ring.reduce_in_place(rhs);
        if (lhs != rhs) {
          out.cocycle = false;
          out.cocycle_witness = join_labels(h.carrier(), {x, y, z});
        }
      }

  // sum [h1 (k1 a)] sigma(h2, k2) = sum sigma(h1, k1) [(h2 k2) a]
  out.twisted_module = true;
  for (std::size_t x = 0; x < rh && out.twisted_module; ++x)
    for (std::size_t y = 0; y < rh && out.twisted_module; ++y)
      for (std::size_t i = 0; i < a.rank() && out.twisted_module; ++i) {
        Vector lhs(a.rank()), rhs(a.rank());
        for (const auto& s : hc.coproduct(x))
          for (const auto& t : hc.coproduct(y)) {
            Scalar c = s.coeff * t.coeff;
            axpy(lhs, c, a.multiply(w.act(s.left, w.act(t.left, a.basis(i))), sig(s.right, t.right)));
            Vector hk = ha.multiply(ha.basis(s.right), ha.basis(t.right));
            axpy(rhs, c, a.multiply(sig(s.left, t.left), w.act(hk, a.basis(i))));
          }
        ring.reduce_in_place(lhs);
        ring.reduce_in_place(rhs);
        if (lhs != rhs) {
          out.twisted_module = false;
          out.twisted_witness =
              join_labels(h.carrier(), {x, y}) + " on " + a.carrier().label(i);
        }
      }
  return out;
}

inline ValidationReport cocycle_report(const CocycleData& c) {
  ValidationReport r;
  r.add("cocycle-invertible", "sigma is invertible in Hom(H (x) H, A) under convolution",
        c.sigma_inv.has_value(), c.inverse_error);
  r.add("cocycle-normal", "sigma(h,1) = eps(h)1 = sigma(1,h)", c.normal, c.normal_witness);
  r.add("cocycle-condition", "sum [h1 sigma(k1,l1)] sigma(h2,k2l2) = sum sigma(h1,k1) sigma(h2k2,l)",
        c.cocycle, c.cocycle_witness);
  r.add("twisted-module", "sum [h1(k1 a)] sigma(h2,k2) = sum sigma(h1,k1) [(h2k2) a]",
        c.twisted_module, c.twisted_witness);
  return r;
}

// ---------------------------------------------------------------------------
// the crossed product algebra

/// (a # h)(b # k) = sum a (h1 b) sigma(h2, k1) # h3 k2, built on basis pairs
/// whether or not it is associative.
inline AlgebraData crossed_product_algebra(const WeakActionData& w, const LinearMap& sigma) {
  const BialgebraData& h = w.hopf;
  const AlgebraData& a = w.algebra;
  const std::size_t rh = h.rank();
  const AlgebraData& ha = h.algebra();
  SweedlerTable d3 = sweedler_table(h.coalgebra(), 3);
  return AlgebraData::from_products(
      tensor(a.carrier(), h.carrier()),
      [&](std::size_t x, std::size_t y) {
        std::size_t ai = x / rh, hi = x % rh, bi = y / rh, ki = y % rh;
        Vector out(a.rank() * rh);
        for (const auto& s : d3[hi]) {
          Vector left = a.multiply(a.basis(ai), w.act(s.legs[0], a.basis(bi)));
          for (const auto& t : h.coalgebra().coproduct(ki)) {
            Vector av = a.multiply(left, sigma.matrix().column(s.legs[1] * rh + t.left));
            if (is_zero(av)) continue;
            axpy(out, s.coeff * t.coeff, tensor(av, ha.multiply(ha.basis(s.legs[2]), ha.basis(t.right))));
          }
        }
        a.ring().reduce_in_place(out);
        return out;
      },
      tensor(a.unit(), ha.unit()));
}

/// Both sides of the associativity lemma for one (action, sigma) pair.
struct CrossedProductCheck {
  CocycleData cocycle;
  AlgebraData algebra;
  bool unital = false;
  bool associative = false;
  std::string direct_witness;

  bool flags() const { return cocycle.normal && cocycle.cocycle && cocycle.twisted_module; }
  bool direct() const { return unital && associative; }
  bool agrees() const { return flags() == direct(); }
};

inline CrossedProductCheck crossed_product_check(const WeakActionData& w, const LinearMap& sigma) {
  CrossedProductCheck c{validate_cocycle(w, sigma), crossed_product_algebra(w, sigma), false, false, ""};
  auto unit_w = check_unital(c.algebra);
  auto assoc_w = check_associative(c.algebra);
  c.unital = !unit_w.has_value();
  c.associative = !assoc_w.has_value();
  if (unit_w) c.direct_witness = "unit at " + *unit_w;
  else if (assoc_w) c.direct_witness = "associativity at " + *assoc_w;
  return c;
}

struct CrossedProductData {
  std::optional<HopfData> hopf;  // present when H has an antipode
  WeakActionData action;
  CocycleData cocycle;
  AlgebraData product;            // A #_sigma H
  ComoduleAlgebraData comodule;   // (A #_sigma H, id (x) Delta)

  const AlgebraData& algebra() const { return action.algebra; }
  const BialgebraData& bialgebra() const { return action.hopf; }

  const HopfData& hopf_or_throw() const {
    require(hopf.has_value(), ErrorKind::NotConvInvertible, "H has no antipode");
    return *hopf;
  }
};

/// id (x) Delta on A (x) H.
inline LinearMap crossed_coaction(const AlgebraData& a, const BialgebraData& h) {
  FreeModule b = tensor(a.carrier(), h.carrier());
  return LinearMap(b, tensor(b, h.carrier()),
                   kron(a.ring(), Matrix::identity(a.rank()), h.coalgebra().comult().matrix()));
}

/// Builds A #_sigma H and cross-checks the direct associativity and unit
/// test against the cocycle flags. Disagreement means a transcription bug.
inline CrossedProductData build_crossed_product(const WeakActionData& w, const CocycleData& c) {
  if (!c.normal) fail(ErrorKind::NotUnital, "sigma is not normal: " + c.normal_witness);
  AlgebraData product = crossed_product_algebra(w, c.sigma);
  auto unit_w = check_unital(product);
  auto assoc_w = check_associative(product);
  bool direct = !unit_w && !assoc_w;
  bool flags = c.cocycle && c.twisted_module;
  if (direct != flags)
    fail(ErrorKind::AssociativityMismatch,
         std::string("direct check ") + (direct ? "passes" : "fails") + " but cocycle flags " +
             (flags ? "pass" : "fail"));
  if (!direct)
    fail(ErrorKind::HypothesisFailed,
         "not a crossed product: " + (!c.cocycle ? "cocycle condition at " + c.cocycle_witness
                                                 : "twisted module condition at " + c.twisted_witness));
  std::optional<HopfData> hopf;
  try {
    hopf = make_hopf(w.hopf);
  } catch (const Error& e) {
    if (e.kind() != ErrorKind::NotConvInvertible && e.kind() != ErrorKind::OneSidedInverse) throw;
  }
  ComoduleAlgebraData comodule{w.hopf, product, crossed_coaction(w.algebra, w.hopf)};
  return {hopf, w, c, product, comodule};
}

inline CrossedProductData build_crossed_product(const WeakActionData& w, const LinearMap& sigma) {
  return build_crossed_product(w, validate_cocycle(w, sigma));
}

inline ValidationReport validate_crossed_product(const CrossedProductData& cp) {
  ValidationReport r;
  r.append(validate_weak_action(cp.action));
  r.append(cocycle_report(cp.cocycle));
  r.append(validate_algebra(cp.product), "crossed-");
  r.append(validate_comodule_algebra(cp.comodule), "crossed-");
  r.run("crossed-coinvariants", "coinvariants of A #_sigma H are A # 1",
        [&]() -> std::optional<std::string> {
          Coinvariants co = coinvariants(cp.comodule);
          std::vector<Vector> expect;
          for (std::size_t i = 0; i < cp.algebra().rank(); ++i)
            expect.push_back(tensor(cp.algebra().basis(i), cp.bialgebra().algebra().unit()));
          const Ring& ring = cp.algebra().ring();
          if (echelon_basis(ring, expect, cp.product.rank()) != co.basis)
            return "computed coinvariants have " + std::to_string(co.basis.size()) + " generators";
          return std::nullopt;
        });
  return r;
}

// ---------------------------------------------------------------------------
// cleft extensions

struct CleftData {
  HopfData hopf;
  ComoduleAlgebraData comodule;  // B with its coaction
  LinearMap theta;               // H -> B
  LinearMap theta_inv;           // H -> B
};

inline ValidationReport validate_cleft(const CleftData& cl) {
  ValidationReport r;
  const AlgebraData& b = cl.comodule.algebra;
  const HopfData& h = cl.hopf;
  r.append(validate_comodule_algebra(cl.comodule));
  r.run("integral-colinear", "rho theta = (theta (x) id) Delta", [&]() -> std::optional<std::string> {
    Matrix lhs = multiply(b.ring(), cl.comodule.coaction.matrix(), cl.theta.matrix());
    Matrix rhs = multiply(b.ring(), kron(cl.theta, LinearMap::identity(h.carrier())).matrix(),
                          h.coalgebra().comult().matrix());
    for (std::size_t i = 0; i < h.rank(); ++i)
      if (lhs.column(i) != rhs.column(i)) return h.carrier().label(i);
    return std::nullopt;
  });
  r.run("integral-unital", "theta(1) = 1", [&]() -> std::optional<std::string> {
    if (cl.theta(h.algebra().unit()) != b.unit()) return std::string("theta(1) != 1");
    return std::nullopt;
  });
  r.run("integral-invertible", "theta * theta^-1 = eta eps = theta^-1 * theta",
        [&]() -> std::optional<std::string> {
          LinearMap u = convolution_unit(h.coalgebra(), b);
          if (convolution(h.coalgebra(), b, cl.theta, cl.theta_inv) != u) return std::string("right");
          if (convolution(h.coalgebra(), b, cl.theta_inv, cl.theta) != u) return std::string("left");
          return std::nullopt;
        });
  return r;
}

/// theta(h) = 1 # h, theta^-1(h) = sum sigma^-1(S(h2), h3) # S(h1).
inline CleftData integral_from_crossed(const CrossedProductData& cp) {
  const HopfData& h = cp.hopf_or_throw();
  const LinearMap& sinv = cp.cocycle.inverse_or_throw();
  const AlgebraData& a = cp.algebra();
  const std::size_t rh = h.rank();
  const Matrix& s = h.antipode().matrix();
  Matrix theta(cp.product.rank(), rh), theta_inv(cp.product.rank(), rh);
  SweedlerTable d3 = sweedler_table(h.coalgebra(), 3);
  for (std::size_t x = 0; x < rh; ++x) {
    theta.set_column(x, tensor(a.unit(), h.algebra().basis(x)));
    Vector acc(cp.product.rank());
    for (const auto& t : d3[x]) {
      Vector sv = detail::apply_right_basis(sinv, rh, s.column(t.legs[1]), t.legs[2]);
      axpy(acc, t.coeff, tensor(sv, s.column(t.legs[0])));
    }
    a.ring().reduce_in_place(acc);
    theta_inv.set_column(x, acc);
  }
  return {h, cp.comodule, LinearMap(h.carrier(), cp.product.carrier(), theta),
          LinearMap(h.carrier(), cp.product.carrier(), theta_inv)};
}

/// B^coH as an algebra in its own right, with coordinates relative to the
/// computed generators.
struct CoinvariantAlgebra {
  std::vector<Vector> basis;  // generators inside B
  AlgebraData algebra;

  /// Coordinates of b in the generators; CoinvariantEscape when b is not
  /// coinvariant.
  Vector coordinates(const Vector& b) const {
    auto c = submodule_membership(algebra.ring(), basis, b);
    if (!c) fail(ErrorKind::CoinvariantEscape, "value leaves the coinvariant subalgebra");
    return *c;
  }

  Vector embed(const Vector& a) const {
    Vector out(basis.empty() ? 0 : basis[0].size());
    for (std::size_t i = 0; i < a.size(); ++i)
      if (a[i] != 0) axpy(out, a[i], basis[i]);
    algebra.ring().reduce_in_place(out);
    return out;
  }
};

inline CoinvariantAlgebra coinvariant_algebra(const ComoduleAlgebraData& c) {
  Coinvariants co = coinvariants(c);
  if (!co.free_summand)
    fail(ErrorKind::NotFreeSummand, "coinvariants do not span a direct summand of B");
  const AlgebraData& b = c.algebra;
  std::vector<std::string> labels;
  for (const auto& v : co.basis) labels.push_back(format_vector(b.carrier(), v));
  CoinvariantAlgebra out{co.basis, AlgebraData()};
  FreeModule carrier(b.ring(), labels);
  auto coords = [&](const Vector& v) {
    auto x = submodule_membership(b.ring(), co.basis, v);
    if (!x) fail(ErrorKind::CoinvariantEscape, "coinvariants are not closed under the product");
    return *x;
  };
  out.algebra = AlgebraData::from_products(
      carrier, [&](std::size_t i, std::size_t j) { return coords(b.multiply(co.basis[i], co.basis[j])); },
      coords(b.unit()));
  return out;
}

struct CleftDecomposition {
  CoinvariantAlgebra coinvariants;
  CrossedProductData crossed;
  AlgebraIso iso;  // A #_sigma H -> B, a # h |-> a theta(h)
};

/// ha = sum theta(h1) a theta^-1(h2), sigma(h,k) = sum theta(h1)theta(k1)theta^-1(h2k2).
inline CleftDecomposition crossed_from_integral(const CleftData& cl) {
  const AlgebraData& b = cl.comodule.algebra;
  const HopfData& h = cl.hopf;
  const std::size_t rh = h.rank();
  const CoalgebraData& hc = h.coalgebra();
  const AlgebraData& ha = h.algebra();
  CoinvariantAlgebra co = coinvariant_algebra(cl.comodule);
  const AlgebraData& a = co.algebra;
  const std::size_t ra = a.rank();

  Matrix act(ra, rh * ra);
  for (std::size_t x = 0; x < rh; ++x)
    for (std::size_t i = 0; i < ra; ++i) {
      Vector acc(b.rank());
      for (const auto& t : hc.coproduct(x))
        axpy(acc, t.coeff,
             b.multiply(b.multiply(cl.theta.matrix().column(t.left), co.basis[i]),
                        cl.theta_inv.matrix().column(t.right)));
      b.ring().reduce_in_place(acc);
      act.set_column(x * ra + i, co.coordinates(acc));
    }
  Matrix sig(ra, rh * rh);
  for (std::size_t x = 0; x < rh; ++x)
    for (std::size_t y = 0; y < rh; ++y) {
      Vector acc(b.rank());
      for (const auto& s : hc.coproduct(x))
        for (const auto& t : hc.coproduct(y)) {
          Vector hk = ha.multiply(ha.basis(s.right), ha.basis(t.right));
          axpy(acc, s.coeff * t.coeff,
               b.multiply(b.multiply(cl.theta.matrix().column(s.left), cl.theta.matrix().column(t.left)),
                          cl.theta_inv(hk)));
        }
      b.ring().reduce_in_place(acc);
      sig.set_column(x * rh + y, co.coordinates(acc));
    }
  WeakActionData w{h.bialgebra(), a, LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), act)};
  CrossedProductData cp =
      build_crossed_product(w, LinearMap(tensor(h.carrier(), h.carrier()), a.carrier(), sig));

  Matrix f(b.rank(), ra * rh);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t x = 0; x < rh; ++x)
      f.set_column(i * rh + x, b.multiply(co.basis[i], cl.theta.matrix().column(x)));
  AlgebraIso iso = certify_iso(cp.product, b, LinearMap(cp.product.carrier(), b.carrier(), f));
  return {co, cp, iso};
}

// ---------------------------------------------------------------------------
// the opposite crossed product

struct OppositeCrossed {
  CrossedProductData crossed;  // A^op #_tau H^op over H^op
  AlgebraIso iso;              // (A^op #_tau H^op)^op -> A #_sigma H
};

/// h . a = Sbar(h) a on A^op, tau(h,k) = sigma^-1(Sbar h, Sbar k). The
/// isomorphism sends a # h to theta^-1(Sbar h)(a # 1); it is checked to be
/// an algebra isomorphism and H-colinear.
inline OppositeCrossed opposite_crossed(const CrossedProductData& cp) {
  const HopfData& h = cp.hopf_or_throw();
  const LinearMap& sbar = h.twisted_antipode_or_throw();
  const LinearMap& sinv = cp.cocycle.inverse_or_throw();
  const AlgebraData& a = cp.algebra();
  const std::size_t rh = h.rank(), ra = a.rank();
  HopfData hop = opposite_hopf(h);
  AlgebraData aop = opposite(a);

  Matrix act(ra, rh * ra);
  for (std::size_t x = 0; x < rh; ++x)
    for (std::size_t i = 0; i < ra; ++i) act.set_column(x * ra + i, cp.action.act(sbar.matrix().column(x), a.basis(i)));
  Matrix tau(ra, rh * rh);
  for (std::size_t x = 0; x < rh; ++x)
    for (std::size_t y = 0; y < rh; ++y)
      tau.set_column(x * rh + y, sinv(tensor(sbar.matrix().column(x), sbar.matrix().column(y))));
  WeakActionData w{hop.bialgebra(), aop, LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), act)};
  CrossedProductData d = build_crossed_product(w, LinearMap(tensor(h.carrier(), h.carrier()), a.carrier(), tau));
  d.hopf = hop;

  CleftData cl = integral_from_crossed(cp);
  Matrix f(cp.product.rank(), ra * rh);
  for (std::size_t i = 0; i < ra; ++i)
    for (std::size_t x = 0; x < rh; ++x)
      f.set_column(i * rh + x, cp.product.multiply(cl.theta_inv(sbar.matrix().column(x)),
                                                   tensor(a.basis(i), h.algebra().unit())));
  AlgebraData dop = opposite(d.product);
  LinearMap fm(dop.carrier(), cp.product.carrier(), f);
  AlgebraIso iso = certify_iso(dop, cp.product, fm);
  Matrix lhs = multiply(a.ring(), cp.comodule.coaction.matrix(), f);
  Matrix rhs = multiply(a.ring(), kron(fm, LinearMap::identity(h.carrier())).matrix(),
                        d.comodule.coaction.matrix());
  require(lhs == rhs, ErrorKind::ValidationError, "opposite crossed product iso is not colinear");
  return {d, iso};
}

// ---------------------------------------------------------------------------
// the maps of a cleft extension into Hom(H, A)

struct CleftMaps {
  LinearMap phi;  // H (x) A -> Hom(H, A)
  LinearMap psi;
};

/// phi(h (x) a)(k) = sum theta(Sbar k2) a theta(h1) theta^-1(Sbar(k1) h2)
/// psi(h (x) a)(k) = sum theta^-1(Sbar k3) a theta(Sbar(k2) h1) theta^-1(k4 Sbar(k1) h2)
/// Values are read back in coinvariant coordinates.
inline CleftMaps cleft_maps(const CleftData& cl, const CoinvariantAlgebra& co) {
  const HopfData& h = cl.hopf;
  const Matrix& sb = h.twisted_antipode_or_throw().matrix();
  const AlgebraData& b = cl.comodule.algebra;
  const AlgebraData& ha = h.algebra();
  const std::size_t rh = h.rank(), ra = co.algebra.rank();
  SweedlerTable d2 = sweedler_table(h.coalgebra(), 2), d4 = sweedler_table(h.coalgebra(), 4);
  auto th = [&](const Vector& v) { return cl.theta(v); };
  auto thi = [&](const Vector& v) { return cl.theta_inv(v); };
  Matrix phi(rh * ra, rh * ra), psi(rh * ra, rh * ra);
  for (std::size_t x = 0; x < rh; ++x)
    for (std::size_t i = 0; i < ra; ++i) {
      const Vector& av = co.basis[i];
      for (std::size_t k = 0; k < rh; ++k) {
        Vector p(b.rank()), q(b.rank());
        for (const auto& s : d2[x]) {
          for (const auto& t : d2[k]) {
            Vector v = b.multiply(b.multiply(th(sb.column(t.legs[1])), av), th(ha.basis(s.legs[0])));
            v = b.multiply(v, thi(ha.multiply(sb.column(t.legs[0]), ha.basis(s.legs[1]))));
            axpy(p, s.coeff * t.coeff, v);
          }
          for (const auto& t : d4[k]) {
            Vector v = b.multiply(thi(sb.column(t.legs[2])), av);
            v = b.multiply(v, th(ha.multiply(sb.column(t.legs[1]), ha.basis(s.legs[0]))));
            Vector tail = ha.multiply(ha.multiply(ha.basis(t.legs[3]), sb.column(t.legs[0])),
                                      ha.basis(s.legs[1]));
            axpy(q, s.coeff * t.coeff, b.multiply(v, thi(tail)));
          }
        }
        b.ring().reduce_in_place(p);
        b.ring().reduce_in_place(q);
        Vector pc = co.coordinates(p), qc = co.coordinates(q);
        for (std::size_t j = 0; j < ra; ++j) {
          phi(k * ra + j, x * ra + i) = pc[j];
          psi(k * ra + j, x * ra + i) = qc[j];
        }
      }
    }
  FreeModule dom = tensor(h.carrier(), co.algebra.carrier());
  FreeModule hom = hom_module(h.carrier(), co.algebra.carrier());
  return {LinearMap(dom, hom, phi), LinearMap(dom, hom, psi)};
}

}  // namespace hopfdual
