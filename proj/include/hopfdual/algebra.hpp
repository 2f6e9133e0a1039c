#pragma once

/**
 * @file algebra.hpp
 * @brief Algebras, coalgebras and bialgebras given by structure constants.
 *
 * Multiplication is stored both as the dense matrix carrier (x) carrier ->
 * carrier and as a sparse per-pair table built once at construction.
 * Iterated coproducts are always left-nested: legs are produced by splitting
 * the first leg again, (Delta (x) id ... ) o Delta.
 */

#include <functional>
#include <map>
#include <optional>
#include <string>
#include <tuple>
#include <utility>
#include <vector>

#include "hopfdual/error.hpp"
#include "hopfdual/linalg.hpp"
#include "hopfdual/report.hpp"
#include "hopfdual/ring.hpp"
#include "hopfdual/solve.hpp"

namespace hopfdual {

using SparseVec = std::vector<std::pair<std::size_t, Scalar>>;

inline SparseVec sparse(const Vector& v) {
  SparseVec out;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out.emplace_back(i, v[i]);
  return out;
}

inline std::string join_labels(const FreeModule& m, std::initializer_list<std::size_t> idx) {
  std::string s = "(";
  bool first = true;
  for (auto i : idx) {
    if (!first) s += ",";
    s += m.label(i);
    first = false;
  }
  return s + ")";
}

/// Human-readable vector, e.g. "2*g - x".
inline std::string format_vector(const FreeModule& m, const Vector& v) {
  std::string s;
  for (std::size_t i = 0; i < v.size(); ++i) {
    if (v[i] == 0) continue;
    if (!s.empty()) s += " + ";
    if (v[i] != 1) s += v[i].get_str() + "*";
    s += m.label(i);
  }
  return s.empty() ? "0" : s;
}

class AlgebraData {
 public:
  AlgebraData() = default;

  AlgebraData(FreeModule carrier, const Matrix& mult, Vector unit)
      : carrier_(std::move(carrier)),
        mult_(tensor(carrier_, carrier_), carrier_, mult),
        unit_(std::move(unit)) {
    require(unit_.size() == carrier_.rank(), ErrorKind::DimensionMismatch, "unit has wrong length");
    for (auto& x : unit_) x = ring().normalize(x);
    const std::size_t n = rank();
    table_.resize(n * n);
    for (std::size_t c = 0; c < n * n; ++c)
      for (std::size_t k = 0; k < n; ++k)
        if (mult_.matrix()(k, c) != 0) table_[c].emplace_back(k, mult_.matrix()(k, c));
  }

  /// Builds the multiplication from a function giving e_i * e_j.
  static AlgebraData from_products(const FreeModule& carrier,
                                   const std::function<Vector(std::size_t, std::size_t)>& prod,
                                   const Vector& unit) {
    const std::size_t n = carrier.rank();
    Matrix m(n, n * n);
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, prod(i, j));
    return AlgebraData(carrier, m, unit);
  }

  const FreeModule& carrier() const { return carrier_; }
  const Ring& ring() const { return carrier_.ring(); }
  std::size_t rank() const { return carrier_.rank(); }
  const LinearMap& mult() const { return mult_; }
  const Vector& unit() const { return unit_; }

  const SparseVec& basis_product(std::size_t i, std::size_t j) const {
    return table_[i * rank() + j];
  }

  Vector multiply(const Vector& x, const Vector& y) const {
    Vector out(rank());
    for (std::size_t i = 0; i < x.size(); ++i) {
      if (x[i] == 0) continue;
      for (std::size_t j = 0; j < y.size(); ++j) {
        if (y[j] == 0) continue;
        Scalar xy = x[i] * y[j];
        for (const auto& [k, c] : basis_product(i, j)) out[k] += xy * c;
      }
    }
    ring().reduce_in_place(out);
    return out;
  }

  Vector basis(std::size_t i) const { return unit_vector(rank(), i); }

  friend bool operator==(const AlgebraData& a, const AlgebraData& b) {
    return a.carrier_ == b.carrier_ && a.mult_ == b.mult_ && a.unit_ == b.unit_;
  }

 private:
  FreeModule carrier_;
  LinearMap mult_;
  Vector unit_;
  std::vector<SparseVec> table_;
};

struct CoproductTerm {
  std::size_t left;
  std::size_t right;
  Scalar coeff;
};

class CoalgebraData {
 public:
  CoalgebraData() = default;

  CoalgebraData(FreeModule carrier, const Matrix& comult, Vector counit)
      : carrier_(std::move(carrier)),
        comult_(carrier_, tensor(carrier_, carrier_), comult),
        counit_(std::move(counit)) {
    require(counit_.size() == carrier_.rank(), ErrorKind::DimensionMismatch,
            "counit has wrong length");
    for (auto& x : counit_) x = ring().normalize(x);
    const std::size_t n = rank();
    terms_.resize(n);
    for (std::size_t h = 0; h < n; ++h)
      for (std::size_t r = 0; r < n * n; ++r)
        if (comult_.matrix()(r, h) != 0) terms_[h].push_back({r / n, r % n, comult_.matrix()(r, h)});
  }

  static CoalgebraData from_coproducts(const FreeModule& carrier,
                                       const std::function<Vector(std::size_t)>& delta,
                                       const Vector& counit) {
    const std::size_t n = carrier.rank();
    Matrix m(n * n, n);
    for (std::size_t h = 0; h < n; ++h) m.set_column(h, delta(h));
    return CoalgebraData(carrier, m, counit);
  }

  const FreeModule& carrier() const { return carrier_; }
  const Ring& ring() const { return carrier_.ring(); }
  std::size_t rank() const { return carrier_.rank(); }
  const LinearMap& comult() const { return comult_; }
  const Vector& counit() const { return counit_; }
  const std::vector<CoproductTerm>& coproduct(std::size_t h) const { return terms_[h]; }

  LinearMap counit_map() const {
    Matrix m(1, rank());
    for (std::size_t i = 0; i < rank(); ++i) m(0, i) = counit_[i];
    return LinearMap(carrier_, FreeModule::scalars(ring()), m);
  }

  Scalar counit_of(const Vector& v) const {
    Scalar s = 0;
    for (std::size_t i = 0; i < v.size(); ++i) s += v[i] * counit_[i];
    return ring().normalize(s);
  }

  friend bool operator==(const CoalgebraData& a, const CoalgebraData& b) {
    return a.carrier_ == b.carrier_ && a.comult_ == b.comult_ && a.counit_ == b.counit_;
  }

 private:
  FreeModule carrier_;
  LinearMap comult_;
  Vector counit_;
  std::vector<std::vector<CoproductTerm>> terms_;
};

struct SweedlerTerm {
  std::vector<std::size_t> legs;
  Scalar coeff;
};

/// Left-nested iterated coproduct of the basis element `h` with `legs` legs.
inline std::vector<SweedlerTerm> sweedler(const CoalgebraData& c, std::size_t h,
                                          std::size_t legs) {
  require(legs >= 1, ErrorKind::DimensionMismatch, "sweedler needs at least one leg");
  std::map<std::vector<std::size_t>, Scalar> acc{{{h}, Scalar(1)}};
  for (std::size_t n = 1; n < legs; ++n) {
    std::map<std::vector<std::size_t>, Scalar> next;
    for (const auto& [idx, coeff] : acc)
      for (const auto& t : c.coproduct(idx[0])) {
        std::vector<std::size_t> split;
        split.reserve(idx.size() + 1);
        split.push_back(t.left);
        split.push_back(t.right);
        split.insert(split.end(), idx.begin() + 1, idx.end());
        next[split] += coeff * t.coeff;
      }
    acc = std::move(next);
  }
  std::vector<SweedlerTerm> out;
  for (auto& [idx, coeff] : acc) {
    Scalar v = c.ring().normalize(coeff);
    if (v != 0) out.push_back({idx, v});
  }
  return out;
}

/// Iterated coproducts for every basis element, computed once per call site.
using SweedlerTable = std::vector<std::vector<SweedlerTerm>>;

inline SweedlerTable sweedler_table(const CoalgebraData& c, std::size_t legs) {
  SweedlerTable t(c.rank());
  for (std::size_t h = 0; h < c.rank(); ++h) t[h] = sweedler(c, h, legs);
  return t;
}

class BialgebraData {
 public:
  BialgebraData() = default;
  BialgebraData(AlgebraData algebra, CoalgebraData coalgebra)
      : algebra_(std::move(algebra)), coalgebra_(std::move(coalgebra)) {
    require(algebra_.carrier() == coalgebra_.carrier(), ErrorKind::DimensionMismatch,
            "algebra and coalgebra must share a carrier");
  }

  const AlgebraData& algebra() const { return algebra_; }
  const CoalgebraData& coalgebra() const { return coalgebra_; }
  const FreeModule& carrier() const { return algebra_.carrier(); }
  const Ring& ring() const { return algebra_.ring(); }
  std::size_t rank() const { return algebra_.rank(); }

  friend bool operator==(const BialgebraData& a, const BialgebraData& b) {
    return a.algebra_ == b.algebra_ && a.coalgebra_ == b.coalgebra_;
  }

 private:
  AlgebraData algebra_;
  CoalgebraData coalgebra_;
};

class HopfData {
 public:
  HopfData() = default;
  HopfData(BialgebraData bialgebra, LinearMap antipode,
           std::optional<LinearMap> twisted_antipode = std::nullopt)
      : bialgebra_(std::move(bialgebra)),
        antipode_(std::move(antipode)),
        twisted_(std::move(twisted_antipode)) {
    require(antipode_.domain() == carrier() && antipode_.codomain() == carrier(),
            ErrorKind::DimensionMismatch, "antipode must be an endomorphism of H");
    if (twisted_)
      require(twisted_->domain() == carrier() && twisted_->codomain() == carrier(),
              ErrorKind::DimensionMismatch, "twisted antipode must be an endomorphism of H");
  }

  const BialgebraData& bialgebra() const { return bialgebra_; }
  const AlgebraData& algebra() const { return bialgebra_.algebra(); }
  const CoalgebraData& coalgebra() const { return bialgebra_.coalgebra(); }
  const FreeModule& carrier() const { return bialgebra_.carrier(); }
  const Ring& ring() const { return bialgebra_.ring(); }
  std::size_t rank() const { return bialgebra_.rank(); }
  const LinearMap& antipode() const { return antipode_; }
  const std::optional<LinearMap>& twisted_antipode() const { return twisted_; }

  const LinearMap& twisted_antipode_or_throw() const {
    require(twisted_.has_value(), ErrorKind::NotConvInvertible,
            "no twisted antipode: H^op has no antipode");
    return *twisted_;
  }

 private:
  BialgebraData bialgebra_;
  LinearMap antipode_;
  std::optional<LinearMap> twisted_;
};

// ---------------------------------------------------------------------------
// validators

inline std::optional<std::string> check_associative(const AlgebraData& a) {
  const std::size_t n = a.rank();
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Vector ij = a.multiply(a.basis(i), a.basis(j));
      for (std::size_t k = 0; k < n; ++k) {
        Vector left = a.multiply(ij, a.basis(k));
        Vector right = a.multiply(a.basis(i), a.multiply(a.basis(j), a.basis(k)));
        if (left != right) return join_labels(a.carrier(), {i, j, k});
      }
    }
  return std::nullopt;
}

inline std::optional<std::string> check_unital(const AlgebraData& a) {
  for (std::size_t i = 0; i < a.rank(); ++i) {
    Vector e = a.basis(i);
    if (a.multiply(a.unit(), e) != e || a.multiply(e, a.unit()) != e) return a.carrier().label(i);
  }
  return std::nullopt;
}

inline ValidationReport validate_algebra(const AlgebraData& a) {
  ValidationReport r;
  r.run("associativity", "mu o (mu (x) id) = mu o (id (x) mu)", [&] { return check_associative(a); });
  r.run("unit", "1 x = x = x 1", [&] { return check_unital(a); });
  return r;
}

inline ValidationReport validate_coalgebra(const CoalgebraData& c) {
  ValidationReport r;
  const Ring& ring = c.ring();
  const FreeModule& m = c.carrier();
  r.run("coassociativity", "(Delta (x) id) Delta = (id (x) Delta) Delta",
        [&]() -> std::optional<std::string> {
          LinearMap id = LinearMap::identity(m);
          Matrix left = multiply(ring, kron(c.comult(), id).matrix(), c.comult().matrix());
          Matrix right = multiply(ring, kron(id, c.comult()).matrix(), c.comult().matrix());
          for (std::size_t h = 0; h < c.rank(); ++h)
            if (left.column(h) != right.column(h)) return m.label(h);
          return std::nullopt;
        });
  r.run("counit", "(eps (x) id) Delta = id = (id (x) eps) Delta",
        [&]() -> std::optional<std::string> {
          for (std::size_t h = 0; h < c.rank(); ++h) {
            Vector left(c.rank()), right(c.rank());
            for (const auto& t : c.coproduct(h)) {
              left[t.right] += c.counit()[t.left] * t.coeff;
              right[t.left] += c.counit()[t.right] * t.coeff;
            }
            ring.reduce_in_place(left);
            ring.reduce_in_place(right);
            Vector e = unit_vector(c.rank(), h);
            if (left != e || right != e) return m.label(h);
          }
          return std::nullopt;
        });
  return r;
}

/// Delta(x) as a vector of H (x) H.
inline Vector coproduct_of(const CoalgebraData& c, const Vector& x) {
  return c.comult()(x);
}

inline AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b);

inline ValidationReport validate_bialgebra(const BialgebraData& b) {
  ValidationReport r;
  r.append(validate_algebra(b.algebra()));
  r.append(validate_coalgebra(b.coalgebra()));
  const AlgebraData& alg = b.algebra();
  const CoalgebraData& co = b.coalgebra();
  r.run("bialgebra", "Delta and eps are algebra morphisms", [&]() -> std::optional<std::string> {
    AlgebraData hh = tensor_algebra(alg, alg);
    const Ring& ring = b.ring();
    Vector du = coproduct_of(co, alg.unit());
    if (du != tensor(alg.unit(), alg.unit())) return std::string("Delta(1) != 1 (x) 1");
    if (co.counit_of(alg.unit()) != 1) return std::string("eps(1) != 1");
    for (std::size_t i = 0; i < b.rank(); ++i)
      for (std::size_t j = 0; j < b.rank(); ++j) {
        Vector ij = alg.multiply(alg.basis(i), alg.basis(j));
        Vector lhs = coproduct_of(co, ij);
        Vector rhs = hh.multiply(coproduct_of(co, alg.basis(i)), coproduct_of(co, alg.basis(j)));
        if (lhs != rhs) return "Delta at " + join_labels(b.carrier(), {i, j});
        if (co.counit_of(ij) != ring.mul(co.counit()[i], co.counit()[j]))
          return "eps at " + join_labels(b.carrier(), {i, j});
      }
    return std::nullopt;
  });
  return r;
}

/// Checks f(xy) = f(x)f(y) on basis pairs and f(1) = 1.
inline std::optional<std::string> check_algebra_morphism(const AlgebraData& src,
                                                         const AlgebraData& tgt,
                                                         const LinearMap& f) {
  require(f.domain().rank() == src.rank() && f.codomain().rank() == tgt.rank(),
          ErrorKind::DimensionMismatch, "morphism ranks do not match the algebras");
  if (f(src.unit()) != tgt.unit()) return std::string("f(1) != 1");
  std::vector<Vector> images(src.rank());
  for (std::size_t i = 0; i < src.rank(); ++i) images[i] = f.matrix().column(i);
  for (std::size_t i = 0; i < src.rank(); ++i)
    for (std::size_t j = 0; j < src.rank(); ++j) {
      Vector lhs = f(src.multiply(src.basis(i), src.basis(j)));
      Vector rhs = tgt.multiply(images[i], images[j]);
      if (lhs != rhs) return join_labels(src.carrier(), {i, j});
    }
  return std::nullopt;
}

/// An algebra isomorphism with its exact inverse, both checked.
struct AlgebraIso {
  AlgebraData source;
  AlgebraData target;
  LinearMap map;
  LinearMap inverse;
};

inline AlgebraIso certify_iso(const AlgebraData& src, const AlgebraData& tgt, const LinearMap& f) {
  LinearMap inv = invert_map(f);
  if (auto w = check_algebra_morphism(src, tgt, f))
    fail(ErrorKind::ValidationError, "map is not multiplicative at " + *w);
  require(compose(inv, f).matrix() == Matrix::identity(src.rank()) &&
              compose(f, inv).matrix() == Matrix::identity(tgt.rank()),
          ErrorKind::NotInvertible, "inverse fails a composite identity");
  return {src, tgt, f, inv};
}

// ---------------------------------------------------------------------------
// constructions

inline AlgebraData scalar_algebra(const Ring& ring) {
  FreeModule m = FreeModule::scalars(ring);
  Matrix mult(1, 1);
  mult(0, 0) = 1;
  return AlgebraData(m, mult, Vector{Scalar(1)});
}

/// mult o twist.
inline AlgebraData opposite(const AlgebraData& a) {
  const std::size_t n = a.rank();
  Matrix m(n, n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) m.set_column(i * n + j, a.mult().matrix().column(j * n + i));
  return AlgebraData(a.carrier(), m, a.unit());
}

/// twist o Delta.
inline CoalgebraData co_opposite(const CoalgebraData& c) {
  Matrix t = twist_matrix(c.rank(), c.rank());
  return CoalgebraData(c.carrier(), multiply(c.ring(), t, c.comult().matrix()), c.counit());
}

inline BialgebraData opposite(const BialgebraData& b) {
  return BialgebraData(opposite(b.algebra()), b.coalgebra());
}

inline BialgebraData co_opposite(const BialgebraData& b) {
  return BialgebraData(b.algebra(), co_opposite(b.coalgebra()));
}

/// (a (x) b)(a' (x) b') = aa' (x) bb'.
inline AlgebraData tensor_algebra(const AlgebraData& a, const AlgebraData& b) {
  require(a.ring() == b.ring(), ErrorKind::RingMismatch, "tensor of algebras over different rings");
  const std::size_t m = b.rank();
  return AlgebraData::from_products(
      tensor(a.carrier(), b.carrier()),
      [&](std::size_t x, std::size_t y) {
        return tensor(a.multiply(a.basis(x / m), a.basis(y / m)),
                      b.multiply(b.basis(x % m), b.basis(y % m)));
      },
      tensor(a.unit(), b.unit()));
}

/// Delta(c (x) d) = sum (c1 (x) d1) (x) (c2 (x) d2).
inline CoalgebraData tensor_coalgebra(const CoalgebraData& c, const CoalgebraData& d) {
  require(c.ring() == d.ring(), ErrorKind::RingMismatch,
          "tensor of coalgebras over different rings");
  const std::size_t m = d.rank();
  const std::size_t n = c.rank() * m;
  FreeModule carrier = tensor(c.carrier(), d.carrier());
  return CoalgebraData::from_coproducts(
      carrier,
      [&](std::size_t x) {
        Vector out(n * n);
        for (const auto& s : c.coproduct(x / m))
          for (const auto& t : d.coproduct(x % m))
            out[(s.left * m + t.left) * n + (s.right * m + t.right)] += s.coeff * t.coeff;
        c.ring().reduce_in_place(out);
        return out;
      },
      tensor(c.counit(), d.counit()));
}

/// M_n(R) on matrix units e(i,j) at index i*n+j.
inline AlgebraData matrix_algebra(const Ring& ring, std::size_t n) {
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      labels.push_back("e(" + std::to_string(i) + "," + std::to_string(j) + ")");
  FreeModule m(ring, labels);
  Vector unit(n * n);
  for (std::size_t i = 0; i < n; ++i) unit[i * n + i] = 1;
  return AlgebraData::from_products(
      m,
      [&](std::size_t x, std::size_t y) {
        Vector out(n * n);
        if (x % n == y / n) out[(x / n) * n + (y % n)] = 1;
        return out;
      },
      unit);
}

/// Group algebra of the cyclic group of order n: basis e, g, g2, ...
inline BialgebraData cyclic_group_bialgebra(const Ring& ring, std::size_t n) {
  std::vector<std::string> labels{"e"};
  for (std::size_t i = 1; i < n; ++i) labels.push_back(i == 1 ? "g" : "g" + std::to_string(i));
  FreeModule m(ring, labels);
  AlgebraData alg = AlgebraData::from_products(
      m, [&](std::size_t i, std::size_t j) { return unit_vector(n, (i + j) % n); },
      unit_vector(n, 0));
  CoalgebraData co = CoalgebraData::from_coproducts(
      m, [&](std::size_t i) { return unit_vector(n * n, i * n + i); }, Vector(n, Scalar(1)));
  return BialgebraData(alg, co);
}

/// Sweedler's four-dimensional algebra: g^2 = 1, x^2 = 0, xg = -gx,
/// Delta(x) = x (x) 1 + g (x) x. Basis 1, g, x, gx.
inline BialgebraData sweedler_bialgebra(const Ring& ring) {
  FreeModule m(ring, {"1", "g", "x", "gx"});
  // basis index = a + 2b for g^a x^b
  AlgebraData alg = AlgebraData::from_products(
      m,
      [&](std::size_t i, std::size_t j) {
        Vector out(4);
        std::size_t a = i % 2, b = i / 2, c = j % 2, d = j / 2;
        if (b + d < 2) out[(a + c) % 2 + 2 * (b + d)] = ring.normalize(Scalar((b * c) % 2 ? -1 : 1));
        return out;
      },
      unit_vector(4, 0));
  CoalgebraData co = CoalgebraData::from_coproducts(
      m,
      [&](std::size_t h) {
        Vector out(16);
        switch (h) {
          case 0: out[0] = 1; break;
          case 1: out[1 * 4 + 1] = 1; break;
          case 2: out[2 * 4 + 0] = 1; out[1 * 4 + 2] = 1; break;
          default: out[3 * 4 + 1] = 1; out[0 * 4 + 3] = 1; break;
        }
        return out;
      },
      Vector{Scalar(1), Scalar(1), Scalar(0), Scalar(0)});
  return BialgebraData(alg, co);
}

}  // namespace hopfdual
