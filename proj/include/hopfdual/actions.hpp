#pragma once

/**
 * @file actions.hpp
 * @brief Hit actions of measuring pairings, regular actions on H*, weak
 * actions, comodule algebras and their coinvariants.
 */

#include <optional>
#include <string>
#include <vector>

#include "hopfdual/algebra.hpp"
#include "hopfdual/hopf.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/solve.hpp"

namespace hopfdual {

// ---------------------------------------------------------------------------
// measuring pairings

struct PairingData {
  AlgebraData algebra;      // A
  CoalgebraData coalgebra;  // C
  LinearMap eval;           // A (x) C -> R

  Scalar pair(std::size_t a, std::size_t c) const {
    return eval.matrix()(0, a * coalgebra.rank() + c);
  }

  Scalar pair(const Vector& a, const Vector& c) const {
    return eval(tensor(a, c))[0];
  }
};

/// The pairing (H*, H) with <f, h> = f(h).
inline PairingData dual_pairing(const HopfData& h, const HopfData& dual) {
  const std::size_t n = h.rank();
  Matrix e(1, n * n);
  for (std::size_t i = 0; i < n; ++i) e(0, i * n + i) = 1;
  return {dual.algebra(), h.coalgebra(),
          LinearMap(tensor(dual.carrier(), h.carrier()), FreeModule::scalars(h.ring()), e)};
}

/// a -> c = sum c1 <a, c2>.
inline Vector hit_left(const PairingData& p, const Vector& a, const Vector& c) {
  Vector out(p.coalgebra.rank());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    for (const auto& t : p.coalgebra.coproduct(k)) {
      out[t.left] += c[k] * t.coeff * p.pair(a, unit_vector(p.coalgebra.rank(), t.right));
    }
  }
  p.coalgebra.ring().reduce_in_place(out);
  return out;
}

/// c <- a = sum <a, c1> c2.
inline Vector hit_right(const PairingData& p, const Vector& c, const Vector& a) {
  Vector out(p.coalgebra.rank());
  for (std::size_t k = 0; k < c.size(); ++k) {
    if (c[k] == 0) continue;
    for (const auto& t : p.coalgebra.coproduct(k))
      out[t.right] += c[k] * t.coeff * p.pair(a, unit_vector(p.coalgebra.rank(), t.left));
  }
  p.coalgebra.ring().reduce_in_place(out);
  return out;
}

inline ValidationReport validate_pairing(const PairingData& p) {
  ValidationReport r;
  const AlgebraData& a = p.algebra;
  const CoalgebraData& c = p.coalgebra;
  r.run("measuring", "<aa', c> = sum <a, c1><a', c2>, <1, c> = eps(c)",
        [&]() -> std::optional<std::string> {
          for (std::size_t k = 0; k < c.rank(); ++k) {
            if (c.ring().normalize(p.pair(a.unit(), unit_vector(c.rank(), k))) != c.counit()[k])
              return "unit at " + c.carrier().label(k);
            for (std::size_t i = 0; i < a.rank(); ++i)
              for (std::size_t j = 0; j < a.rank(); ++j) {
                Scalar lhs = p.pair(a.multiply(a.basis(i), a.basis(j)), unit_vector(c.rank(), k));
                Scalar rhs = 0;
                for (const auto& t : c.coproduct(k)) rhs += t.coeff * p.pair(i, t.left) * p.pair(j, t.right);
                if (c.ring().normalize(lhs) != c.ring().normalize(rhs))
                  return join_labels(a.carrier(), {i, j}) + " at " + c.carrier().label(k);
              }
          }
          return std::nullopt;
        });
  r.run("hit-bimodule", "(aa')->c = a->(a'->c), (a->c)<-a' = a->(c<-a')",
        [&]() -> std::optional<std::string> {
          for (std::size_t k = 0; k < c.rank(); ++k) {
            Vector ck = unit_vector(c.rank(), k);
            if (hit_left(p, a.unit(), ck) != ck || hit_right(p, ck, a.unit()) != ck)
              return "unit at " + c.carrier().label(k);
            for (std::size_t i = 0; i < a.rank(); ++i)
              for (std::size_t j = 0; j < a.rank(); ++j) {
                Vector ai = a.basis(i), aj = a.basis(j);
                if (hit_left(p, a.multiply(ai, aj), ck) != hit_left(p, ai, hit_left(p, aj, ck)))
                  return "left " + join_labels(a.carrier(), {i, j});
                if (hit_right(p, ck, a.multiply(ai, aj)) != hit_right(p, hit_right(p, ck, ai), aj))
                  return "right " + join_labels(a.carrier(), {i, j});
                if (hit_right(p, hit_left(p, ai, ck), aj) != hit_left(p, ai, hit_right(p, ck, aj)))
                  return "bimodule " + join_labels(a.carrier(), {i, j});
              }
          }
          return std::nullopt;
        });
  return r;
}

// ---------------------------------------------------------------------------
// regular actions of H on H*

struct RegularActions {
  LinearMap left;   // H (x) H* -> H*, (hf)(k) = f(kh)
  LinearMap right;  // H* (x) H -> H*, (fh)(k) = f(hk)
};

inline RegularActions regular_actions(const HopfData& h, const FreeModule& dual) {
  const std::size_t n = h.rank();
  const AlgebraData& alg = h.algebra();
  Matrix l(n, n * n), r(n, n * n);
  for (std::size_t x = 0; x < n; ++x)
    for (std::size_t f = 0; f < n; ++f)
      for (std::size_t k = 0; k < n; ++k) {
        // (x d_f)(e_k) = d_f(e_k x), (d_f x)(e_k) = d_f(x e_k)
        for (const auto& [idx, c] : alg.basis_product(k, x))
          if (idx == f) l(k, x * n + f) += c;
        for (const auto& [idx, c] : alg.basis_product(x, k))
          if (idx == f) r(k, f * n + x) += c;
      }
  return {LinearMap(tensor(h.carrier(), dual), dual, l), LinearMap(tensor(dual, h.carrier()), dual, r)};
}

inline ValidationReport validate_regular_actions(const HopfData& h, const RegularActions& ra) {
  ValidationReport r;
  const std::size_t n = h.rank();
  const AlgebraData& alg = h.algebra();
  auto left = [&](const Vector& x, const Vector& f) { return ra.left(tensor(x, f)); };
  auto right = [&](const Vector& f, const Vector& x) { return ra.right(tensor(f, x)); };
  r.run("regular-bimodule", "(hf)(k) = f(kh), (fh)(k) = f(hk) define an H-bimodule",
        [&]() -> std::optional<std::string> {
          for (std::size_t f = 0; f < n; ++f) {
            Vector df = unit_vector(n, f);
            if (left(alg.unit(), df) != df || right(df, alg.unit()) != df)
              return "unit at " + std::to_string(f);
            for (std::size_t x = 0; x < n; ++x)
              for (std::size_t y = 0; y < n; ++y) {
                Vector xy = alg.multiply(alg.basis(x), alg.basis(y));
                if (left(xy, df) != left(alg.basis(x), left(alg.basis(y), df)))
                  return "left " + join_labels(h.carrier(), {x, y});
                if (right(df, xy) != right(right(df, alg.basis(x)), alg.basis(y)))
                  return "right " + join_labels(h.carrier(), {x, y});
                if (right(left(alg.basis(x), df), alg.basis(y)) !=
                    left(alg.basis(x), right(df, alg.basis(y))))
                  return "bimodule " + join_labels(h.carrier(), {x, y});
              }
          }
          return std::nullopt;
        });
  return r;
}

// ---------------------------------------------------------------------------
// weak actions

struct WeakActionData {
  BialgebraData hopf;   // H
  AlgebraData algebra;  // A
  LinearMap action;     // H (x) A -> A

  /// h . a for basis h and an arbitrary vector a.
  Vector act(std::size_t h, const Vector& a) const {
    const std::size_t ra = algebra.rank();
    Vector out(ra);
    for (std::size_t j = 0; j < ra; ++j)
      if (a[j] != 0)
        for (std::size_t k = 0; k < ra; ++k)
          if (action.matrix()(k, h * ra + j) != 0) out[k] += a[j] * action.matrix()(k, h * ra + j);
    algebra.ring().reduce_in_place(out);
    return out;
  }

  Vector act(const Vector& h, const Vector& a) const {
    Vector out(algebra.rank());
    for (std::size_t i = 0; i < h.size(); ++i)
      if (h[i] != 0) axpy(out, h[i], act(i, a));
    algebra.ring().reduce_in_place(out);
    return out;
  }
};

/// h . a = eps(h) a.
inline LinearMap trivial_action(const BialgebraData& h, const AlgebraData& a) {
  const std::size_t ra = a.rank();
  Matrix m(ra, h.rank() * ra);
  for (std::size_t x = 0; x < h.rank(); ++x)
    for (std::size_t j = 0; j < ra; ++j) m(j, x * ra + j) = h.coalgebra().counit()[x];
  return LinearMap(tensor(h.carrier(), a.carrier()), a.carrier(), m);
}

inline ValidationReport validate_weak_action(const WeakActionData& w) {
  ValidationReport r;
  const AlgebraData& a = w.algebra;
  const BialgebraData& h = w.hopf;
  const Ring& ring = a.ring();
  r.run("weak-action-measuring", "h(ab) = sum (h1 a)(h2 b), h1 = eps(h)1",
        [&]() -> std::optional<std::string> {
          for (std::size_t x = 0; x < h.rank(); ++x) {
            Vector e1 = a.unit();
            for (auto& v : e1) v = ring.mul(v, h.coalgebra().counit()[x]);
            if (w.act(x, a.unit()) != e1) return "unit at " + h.carrier().label(x);
            for (std::size_t i = 0; i < a.rank(); ++i)
              for (std::size_t j = 0; j < a.rank(); ++j) {
                Vector lhs = w.act(x, a.multiply(a.basis(i), a.basis(j)));
                Vector rhs(a.rank());
                for (const auto& t : h.coalgebra().coproduct(x))
                  axpy(rhs, t.coeff, a.multiply(w.act(t.left, a.basis(i)), w.act(t.right, a.basis(j))));
                ring.reduce_in_place(rhs);
                if (lhs != rhs)
                  return h.carrier().label(x) + " on " + join_labels(a.carrier(), {i, j});
              }
          }
          return std::nullopt;
        });
  r.run("weak-action-unit", "1_H a = a", [&]() -> std::optional<std::string> {
    for (std::size_t i = 0; i < a.rank(); ++i)
      if (w.act(h.algebra().unit(), a.basis(i)) != a.basis(i)) return a.carrier().label(i);
    return std::nullopt;
  });
  return r;
}

/// h(k a) = (hk) a on all basis triples: the action is a module action.
inline std::optional<std::string> check_module_action(const WeakActionData& w) {
  const AlgebraData& ha = w.hopf.algebra();
  for (std::size_t x = 0; x < w.hopf.rank(); ++x)
    for (std::size_t y = 0; y < w.hopf.rank(); ++y)
      for (std::size_t i = 0; i < w.algebra.rank(); ++i) {
        Vector lhs = w.act(x, w.act(y, w.algebra.basis(i)));
        Vector rhs = w.act(ha.multiply(ha.basis(x), ha.basis(y)), w.algebra.basis(i));
        if (lhs != rhs)
          return join_labels(w.hopf.carrier(), {x, y}) + " on " + w.algebra.carrier().label(i);
      }
  return std::nullopt;
}

// ---------------------------------------------------------------------------
// comodule algebras

struct ComoduleAlgebraData {
  BialgebraData hopf;   // H
  AlgebraData algebra;  // B
  LinearMap coaction;   // B -> B (x) H
};

inline ValidationReport validate_comodule_algebra(const ComoduleAlgebraData& c) {
  ValidationReport r;
  const Ring& ring = c.algebra.ring();
  const AlgebraData& b = c.algebra;
  const BialgebraData& h = c.hopf;
  r.run("comodule", "(rho (x) id) rho = (id (x) Delta) rho, (id (x) eps) rho = id",
        [&]() -> std::optional<std::string> {
          LinearMap idb = LinearMap::identity(b.carrier());
          LinearMap idh = LinearMap::identity(h.carrier());
          Matrix lhs = multiply(ring, kron(c.coaction, idh).matrix(), c.coaction.matrix());
          Matrix rhs = multiply(ring, kron(idb, h.coalgebra().comult()).matrix(), c.coaction.matrix());
          Matrix counit = multiply(ring, kron(idb, h.coalgebra().counit_map()).matrix(),
                                   c.coaction.matrix());
          for (std::size_t i = 0; i < b.rank(); ++i) {
            if (lhs.column(i) != rhs.column(i)) return "coassociativity at " + b.carrier().label(i);
            if (counit.column(i) != b.basis(i)) return "counit at " + b.carrier().label(i);
          }
          return std::nullopt;
        });
  r.run("comodule-algebra", "rho is an algebra morphism B -> B (x) H", [&] {
    return check_algebra_morphism(b, tensor_algebra(b, h.algebra()), c.coaction);
  });
  return r;
}

struct Coinvariants {
  std::vector<Vector> basis;  // canonical generators inside B
  bool free_summand = false;
};

/// Kernel of rho - (id (x) 1_H), in canonical (echelon) form.
inline Coinvariants coinvariants(const ComoduleAlgebraData& c) {
  const Ring& ring = c.algebra.ring();
  const std::size_t rb = c.algebra.rank();
  Matrix one(c.hopf.rank(), 1);
  for (std::size_t i = 0; i < c.hopf.rank(); ++i) one(i, 0) = c.hopf.algebra().unit()[i];
  Matrix with_unit = kron(ring, Matrix::identity(rb), one);
  Matrix diff = add(ring, c.coaction.matrix(), with_unit, Scalar(-1));
  std::vector<Vector> gens = kernel(ring, diff);
  Coinvariants out;
  out.basis = echelon_basis(ring, gens, rb);
  out.free_summand = is_free_summand_basis(ring, out.basis, rb);
  return out;
}

/// Products of coinvariant generators stay in their span.
inline std::optional<std::string> check_coinvariant_subalgebra(const ComoduleAlgebraData& c,
                                                               const Coinvariants& co) {
  const AlgebraData& b = c.algebra;
  if (!submodule_membership(b.ring(), co.basis, b.unit())) return std::string("1_B");
  for (std::size_t i = 0; i < co.basis.size(); ++i)
    for (std::size_t j = 0; j < co.basis.size(); ++j)
      if (!submodule_membership(b.ring(), co.basis, b.multiply(co.basis[i], co.basis[j])))
        return "(c" + std::to_string(i) + ",c" + std::to_string(j) + ")";
  return std::nullopt;
}

}  // namespace hopfdual
