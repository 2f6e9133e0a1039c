#pragma once

/**
 * @file solve.hpp
 * @brief Exact linear solving over Z, Q and Z/n.
 *
 * - Z: Smith normal form with unimodular transforms.
 * - Z/n: the system is lifted to Z and augmented with n * I, then solved by
 *   Smith normal form; the particular solution is reduced against the Hermite
 *   form of the lifted kernel lattice so that results are canonical.
 * - Q: fraction-free (Bareiss) elimination on the row-scaled integer system.
 *
 * No entry-size bound anywhere: all integer work is on GMP integers.
 */

#include <algorithm>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/error.hpp"
#include "hopfdual/linalg.hpp"
#include "hopfdual/ring.hpp"

namespace hopfdual {

/// Row-major integer matrix used by the normal-form routines.
struct IntMatrix {
  std::size_t rows = 0;
  std::size_t cols = 0;
  std::vector<Integer> data;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), data(r * c) {}

  static IntMatrix identity(std::size_t n) {
    IntMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  Integer& operator()(std::size_t r, std::size_t c) { return data[r * cols + c]; }
  const Integer& operator()(std::size_t r, std::size_t c) const { return data[r * cols + c]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t c = 0; c < cols; ++c) std::swap((*this)(a, c), (*this)(b, c));
  }
  void swap_cols(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t r = 0; r < rows; ++r) std::swap((*this)(r, a), (*this)(r, b));
  }
  // row_dst -= q * row_src
  void row_axpy(std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t c = 0; c < cols; ++c)
      if ((*this)(src, c) != 0) (*this)(dst, c) -= q * (*this)(src, c);
  }
  // col_dst -= q * col_src
  void col_axpy(std::size_t dst, const Integer& q, std::size_t src) {
    for (std::size_t r = 0; r < rows; ++r)
      if ((*this)(r, src) != 0) (*this)(r, dst) -= q * (*this)(r, src);
  }
};

/// U * M * V = diag(d_0, ..., d_{rank-1}, 0, ...), U and V unimodular.
struct SmithForm {
  IntMatrix u;
  IntMatrix v;
  IntMatrix d;
  std::size_t rank = 0;

  const Integer& diag(std::size_t i) const { return d(i, i); }
};

inline SmithForm smith_normal_form(const IntMatrix& m) {
  SmithForm s{IntMatrix::identity(m.rows), IntMatrix::identity(m.cols), m, 0};
  IntMatrix& d = s.d;
  const std::size_t limit = std::min(m.rows, m.cols);
  std::size_t t = 0;

  auto abs_less = [](const Integer& a, const Integer& b) { return abs(a) < abs(b); };

  for (; t < limit; ++t) {
    // smallest nonzero entry of the trailing block becomes the pivot
    std::size_t pr = m.rows, pc = m.cols;
    for (std::size_t i = t; i < m.rows; ++i)
      for (std::size_t j = t; j < m.cols; ++j)
        if (d(i, j) != 0 && (pr == m.rows || abs_less(d(i, j), d(pr, pc)))) {
          pr = i;
          pc = j;
        }
    if (pr == m.rows) break;
    d.swap_rows(t, pr);
    s.u.swap_rows(t, pr);
    d.swap_cols(t, pc);
    s.v.swap_cols(t, pc);

    for (;;) {
      bool clean = true;
      for (std::size_t i = t + 1; i < m.rows; ++i) {
        if (d(i, t) == 0) continue;
        Integer q = d(i, t) / d(t, t);
        if (q != 0) {
          d.row_axpy(i, q, t);
          s.u.row_axpy(i, q, t);
        }
        if (d(i, t) != 0) clean = false;
      }
      for (std::size_t j = t + 1; j < m.cols; ++j) {
        if (d(t, j) == 0) continue;
        Integer q = d(t, j) / d(t, t);
        if (q != 0) {
          d.col_axpy(j, q, t);
          s.v.col_axpy(j, q, t);
        }
        if (d(t, j) != 0) clean = false;
      }
      if (clean) break;
      // a nonzero remainder is smaller than the pivot: move it in
      std::size_t br = t, bc = t;
      for (std::size_t i = t + 1; i < m.rows; ++i)
        if (d(i, t) != 0 && abs_less(d(i, t), d(br, bc))) {
          br = i;
          bc = t;
        }
      for (std::size_t j = t + 1; j < m.cols; ++j)
        if (d(t, j) != 0 && abs_less(d(t, j), d(br, bc))) {
          br = t;
          bc = j;
        }
      if (br != t) {
        d.swap_rows(t, br);
        s.u.swap_rows(t, br);
      }
      if (bc != t) {
        d.swap_cols(t, bc);
        s.v.swap_cols(t, bc);
      }
    }
  }
  s.rank = t;
  return s;
}

/// Row-style Hermite normal form of the lattice spanned by `gens`
/// (all of length `width`). Returned rows have increasing pivot columns,
/// positive pivots, and entries above each pivot reduced into [0, pivot).
inline std::vector<std::vector<Integer>> hermite_rows(std::vector<std::vector<Integer>> gens,
                                                      std::size_t width) {
  std::vector<std::vector<Integer>> result;
  std::vector<std::size_t> pivots;
  for (std::size_t col = 0; col < width && !gens.empty(); ++col) {
    for (;;) {
      std::size_t best = gens.size();
      std::size_t nonzero = 0;
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (gens[i][col] == 0) continue;
        ++nonzero;
        if (best == gens.size() || abs(gens[i][col]) < abs(gens[best][col])) best = i;
      }
      if (nonzero == 0) break;
      if (nonzero == 1) {
        std::vector<Integer> row = std::move(gens[best]);
        gens.erase(gens.begin() + static_cast<std::ptrdiff_t>(best));
        if (row[col] < 0)
          for (auto& x : row) x = -x;
        for (std::size_t r = 0; r < result.size(); ++r) {
          Integer q;
          mpz_fdiv_q(q.get_mpz_t(), result[r][col].get_mpz_t(), row[col].get_mpz_t());
          if (q != 0)
            for (std::size_t c = col; c < width; ++c) result[r][c] -= q * row[c];
        }
        result.push_back(std::move(row));
        pivots.push_back(col);
        break;
      }
      for (std::size_t i = 0; i < gens.size(); ++i) {
        if (i == best || gens[i][col] == 0) continue;
        Integer q = gens[i][col] / gens[best][col];
        for (std::size_t c = col; c < width; ++c) gens[i][c] -= q * gens[best][c];
      }
    }
    gens.erase(std::remove_if(gens.begin(), gens.end(),
                              [](const std::vector<Integer>& g) {
                                return std::all_of(g.begin(), g.end(),
                                                   [](const Integer& x) { return x == 0; });
                              }),
               gens.end());
  }
  return result;
}

/// Reduces x modulo the lattice given in Hermite form; the result is the
/// canonical coset representative.
inline void hermite_reduce(std::vector<Integer>& x, const std::vector<std::vector<Integer>>& hnf) {
  for (const auto& row : hnf) {
    std::size_t p = 0;
    while (p < row.size() && row[p] == 0) ++p;
    if (p == row.size()) continue;
    Integer q;
    mpz_fdiv_q(q.get_mpz_t(), x[p].get_mpz_t(), row[p].get_mpz_t());
    if (q != 0)
      for (std::size_t c = p; c < row.size(); ++c) x[c] -= q * row[c];
  }
}

struct SolveResult {
  enum class Status { Unique, Parametric, NoSolution };
  Status status = Status::NoSolution;
  std::optional<Vector> particular;
  std::vector<Vector> kernel_basis;

  bool solvable() const { return status != Status::NoSolution; }
};

namespace detail {

inline Integer lift(const Scalar& x) {
  require(x.get_den() == 1, ErrorKind::InvalidElement, "expected an integral entry");
  return x.get_num();
}

inline IntMatrix lift(const Matrix& m) {
  IntMatrix out(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) out(i, j) = lift(m(i, j));
  return out;
}

struct IntegerSolution {
  bool solvable = false;
  std::vector<Integer> particular;
  std::vector<std::vector<Integer>> kernel;
};

inline IntegerSolution solve_over_z(const IntMatrix& m, const std::vector<Integer>& rhs) {
  SmithForm s = smith_normal_form(m);
  IntegerSolution out;
  std::vector<Integer> c(m.rows);
  for (std::size_t i = 0; i < m.rows; ++i)
    for (std::size_t k = 0; k < m.rows; ++k)
      if (s.u(i, k) != 0 && rhs[k] != 0) c[i] += s.u(i, k) * rhs[k];
  std::vector<Integer> y(m.cols);
  for (std::size_t i = 0; i < m.rows; ++i) {
    if (i < s.rank) {
      if (!mpz_divisible_p(c[i].get_mpz_t(), s.diag(i).get_mpz_t())) return out;
      mpz_divexact(y[i].get_mpz_t(), c[i].get_mpz_t(), s.diag(i).get_mpz_t());
    } else if (c[i] != 0) {
      return out;
    }
  }
  out.solvable = true;
  out.particular.assign(m.cols, Integer(0));
  for (std::size_t j = 0; j < m.cols; ++j)
    for (std::size_t k = 0; k < s.rank; ++k)
      if (s.v(j, k) != 0 && y[k] != 0) out.particular[j] += s.v(j, k) * y[k];
  for (std::size_t k = s.rank; k < m.cols; ++k) {
    std::vector<Integer> col(m.cols);
    for (std::size_t j = 0; j < m.cols; ++j) col[j] = s.v(j, k);
    out.kernel.push_back(std::move(col));
  }
  return out;
}

inline Vector to_vector(const std::vector<Integer>& v) {
  Vector out(v.size());
  for (std::size_t i = 0; i < v.size(); ++i) out[i] = Scalar(v[i]);
  return out;
}

/// Echelon form of [m | rhs] over Q by fraction-free elimination.
/// Returns pivot columns; the matrix is replaced by its integer echelon form.
inline std::vector<std::size_t> bareiss_echelon(IntMatrix& a, std::size_t coeff_cols) {
  std::vector<std::size_t> pivots;
  Integer prev = 1;
  std::size_t r = 0;
  for (std::size_t c = 0; c < coeff_cols && r < a.rows; ++c) {
    std::size_t p = r;
    while (p < a.rows && a(p, c) == 0) ++p;
    if (p == a.rows) continue;
    a.swap_rows(p, r);
    for (std::size_t i = r + 1; i < a.rows; ++i) {
      for (std::size_t j = c + 1; j < a.cols; ++j) {
        Integer num = a(r, c) * a(i, j) - a(i, c) * a(r, j);
        require(mpz_divisible_p(num.get_mpz_t(), prev.get_mpz_t()) != 0,
                ErrorKind::ValidationError, "fraction-free elimination lost exactness");
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, c) = 0;
    }
    prev = a(r, c);
    pivots.push_back(c);
    ++r;
  }
  return pivots;
}

inline IntMatrix scale_rows_to_integers(const Matrix& m, const Vector* rhs) {
  const std::size_t extra = rhs ? 1 : 0;
  IntMatrix out(m.rows(), m.cols() + extra);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    Integer l = 1;
    for (std::size_t j = 0; j < m.cols(); ++j)
      mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
    if (rhs) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), (*rhs)[i].get_den_mpz_t());
    for (std::size_t j = 0; j < m.cols(); ++j) {
      Scalar v = m(i, j) * l;
      out(i, j) = v.get_num();
    }
    if (rhs) {
      Scalar v = (*rhs)[i] * l;
      out(i, m.cols()) = v.get_num();
    }
  }
  return out;
}

inline SolveResult solve_rationals(const Matrix& m, const Vector& rhs) {
  IntMatrix a = scale_rows_to_integers(m, &rhs);
  const std::size_t n = m.cols();
  std::vector<std::size_t> pivots = bareiss_echelon(a, n);
  SolveResult out;
  for (std::size_t i = pivots.size(); i < a.rows; ++i)
    if (a(i, n) != 0) return out;

  std::vector<bool> is_pivot(n, false);
  for (auto p : pivots) is_pivot[p] = true;

  // back substitution for given values of the free variables
  auto back_substitute = [&](Vector x, bool homogeneous) {
    for (std::size_t r = pivots.size(); r-- > 0;) {
      const std::size_t c = pivots[r];
      Scalar acc = homogeneous ? Scalar(0) : Scalar(a(r, n));
      for (std::size_t j = c + 1; j < n; ++j)
        if (a(r, j) != 0 && x[j] != 0) acc -= Scalar(a(r, j)) * x[j];
      x[c] = acc / Scalar(a(r, c));
    }
    return x;
  };

  out.particular = back_substitute(Vector(n, Scalar(0)), false);
  for (std::size_t f = 0; f < n; ++f) {
    if (is_pivot[f]) continue;
    Vector x(n, Scalar(0));
    x[f] = 1;
    out.kernel_basis.push_back(back_substitute(std::move(x), true));
  }
  out.status = out.kernel_basis.empty() ? SolveResult::Status::Unique
                                        : SolveResult::Status::Parametric;
  return out;
}

inline SolveResult solve_integers(const Matrix& m, const Vector& rhs) {
  std::vector<Integer> b(rhs.size());
  for (std::size_t i = 0; i < rhs.size(); ++i) b[i] = lift(rhs[i]);
  IntegerSolution z = solve_over_z(lift(m), b);
  SolveResult out;
  if (!z.solvable) return out;
  // canonical particular solution: reduce against the kernel lattice
  auto hnf = hermite_rows(z.kernel, m.cols());
  hermite_reduce(z.particular, hnf);
  out.particular = to_vector(z.particular);
  for (const auto& k : hnf) out.kernel_basis.push_back(to_vector(k));
  out.status = out.kernel_basis.empty() ? SolveResult::Status::Unique
                                        : SolveResult::Status::Parametric;
  return out;
}

inline SolveResult solve_mod(const Ring& ring, const Matrix& m, const Vector& rhs) {
  const Integer& n = ring.modulus();
  const std::size_t rows = m.rows(), cols = m.cols();
  IntMatrix aug(rows, cols + rows);
  for (std::size_t i = 0; i < rows; ++i) {
    for (std::size_t j = 0; j < cols; ++j) aug(i, j) = lift(ring.normalize(m(i, j)));
    aug(i, cols + i) = n;
  }
  std::vector<Integer> b(rows);
  for (std::size_t i = 0; i < rows; ++i) b[i] = lift(ring.normalize(rhs[i]));
  IntegerSolution z = solve_over_z(aug, b);
  SolveResult out;
  if (!z.solvable) return out;

  std::vector<std::vector<Integer>> lattice;
  for (const auto& k : z.kernel) lattice.emplace_back(k.begin(), k.begin() + cols);
  for (std::size_t j = 0; j < cols; ++j) {
    std::vector<Integer> e(cols);
    e[j] = n;
    lattice.push_back(std::move(e));
  }
  auto hnf = hermite_rows(std::move(lattice), cols);

  std::vector<Integer> x(z.particular.begin(), z.particular.begin() + cols);
  hermite_reduce(x, hnf);
  out.particular = to_vector(x);
  ring.reduce_in_place(*out.particular);
  for (const auto& row : hnf) {
    Vector v = to_vector(row);
    ring.reduce_in_place(v);
    if (!is_zero(v)) out.kernel_basis.push_back(std::move(v));
  }
  out.status = out.kernel_basis.empty() ? SolveResult::Status::Unique
                                        : SolveResult::Status::Parametric;
  return out;
}

}  // namespace detail

/// Solves matrix * x = rhs exactly over `ring`.
inline SolveResult solve_linear(const Ring& ring, const Matrix& m, const Vector& rhs) {
  require(rhs.size() == m.rows(), ErrorKind::DimensionMismatch,
          "rhs has length " + std::to_string(rhs.size()) + ", matrix has " +
              std::to_string(m.rows()) + " rows");
  switch (ring.kind()) {
    case Ring::Kind::Rationals: return detail::solve_rationals(m, rhs);
    case Ring::Kind::Integers: return detail::solve_integers(m, rhs);
    case Ring::Kind::IntegersMod: return detail::solve_mod(ring, m, rhs);
  }
  return {};
}

inline SolveResult solve_linear(const LinearMap& m, const Vector& rhs) {
  return solve_linear(m.ring(), m.matrix(), rhs);
}

/// Generators of the kernel of `m` (a basis over Z and Q).
inline std::vector<Vector> kernel(const Ring& ring, const Matrix& m) {
  return solve_linear(ring, m, Vector(m.rows(), Scalar(0))).kernel_basis;
}

inline Scalar determinant(const Ring& ring, const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::NotInvertible, "determinant of a non-square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return ring.one();
  Scalar scale = 1;
  IntMatrix a(n, n);
  if (ring.kind() == Ring::Kind::Rationals) {
    a = detail::scale_rows_to_integers(m, nullptr);
    for (std::size_t i = 0; i < n; ++i) {
      Integer l = 1;
      for (std::size_t j = 0; j < n; ++j)
        mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), m(i, j).get_den_mpz_t());
      scale *= Scalar(l);
    }
  } else {
    a = detail::lift(m);
  }
  // Bareiss on the square matrix; track row swaps for the sign
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    std::size_t p = k;
    while (p < n && a(p, k) == 0) ++p;
    if (p == n) return ring.zero();
    if (p != k) {
      a.swap_rows(p, k);
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer num = a(k, k) * a(i, j) - a(i, k) * a(k, j);
        mpz_divexact(a(i, j).get_mpz_t(), num.get_mpz_t(), prev.get_mpz_t());
      }
      a(i, k) = 0;
    }
    prev = a(k, k);
  }
  Scalar det = Scalar(a(n - 1, n - 1)) * sign / scale;
  return ring.normalize(ring.kind() == Ring::Kind::Rationals ? det : Scalar(det.get_num()));
}

/// Exact two-sided inverse; NotInvertible unless the determinant is a unit.
inline Matrix invert(const Ring& ring, const Matrix& m) {
  require(m.rows() == m.cols(), ErrorKind::NotInvertible,
          "cannot invert a " + std::to_string(m.rows()) + "x" + std::to_string(m.cols()) +
              " matrix");
  const std::size_t n = m.rows();
  Scalar det = determinant(ring, m);
  require(ring.is_unit(det), ErrorKind::NotInvertible,
          "determinant " + ring.format(det) + " is not a unit in " + ring.name());
  if (ring.kind() == Ring::Kind::Rationals) {
    Matrix out(n, n);
    for (std::size_t j = 0; j < n; ++j) {
      SolveResult r = detail::solve_rationals(m, unit_vector(n, j));
      require(r.status == SolveResult::Status::Unique, ErrorKind::NotInvertible,
              "singular matrix");
      out.set_column(j, *r.particular);
    }
    return out;
  }
  IntMatrix lifted(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) lifted(i, j) = detail::lift(ring.normalize(m(i, j)));
  SmithForm s = smith_normal_form(lifted);
  require(s.rank == n, ErrorKind::NotInvertible, "singular matrix");
  // M^{-1} = V D^{-1} U
  Matrix out(n, n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) {
      Scalar acc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (s.v(i, k) == 0 || s.u(k, j) == 0) continue;
        Scalar dinv = ring.inverse(ring.normalize(Scalar(s.diag(k))));
        acc += Scalar(s.v(i, k)) * dinv * Scalar(s.u(k, j));
      }
      out(i, j) = ring.normalize(acc);
    }
  return out;
}

inline LinearMap invert_map(const LinearMap& m) {
  require(m.domain().rank() == m.codomain().rank(), ErrorKind::NotInvertible,
          "cannot invert a map between modules of different rank");
  return LinearMap(m.codomain(), m.domain(), invert(m.ring(), m.matrix()));
}

/// Coefficients c with sum_i c_i * generators[i] = v, or nullopt if v is not
/// in the R-span of the generators.
inline std::optional<Vector> submodule_membership(const Ring& ring,
                                                  const std::vector<Vector>& generators,
                                                  const Vector& v) {
  for (const auto& g : generators)
    require(g.size() == v.size(), ErrorKind::DimensionMismatch,
            "generator of length " + std::to_string(g.size()) + " vs vector of length " +
                std::to_string(v.size()));
  if (generators.empty()) {
    if (is_zero(v)) return Vector{};
    return std::nullopt;
  }
  SolveResult r = solve_linear(ring, Matrix::from_columns(v.size(), generators), v);
  if (!r.solvable()) return std::nullopt;
  return r.particular;
}

/// True when `basis` is a basis of a free direct summand of R^n, i.e. the
/// matrix with these columns has a left inverse over R.
inline bool is_free_summand_basis(const Ring& ring, const std::vector<Vector>& basis,
                                  std::size_t ambient_rank) {
  if (basis.empty()) return true;
  Matrix t = Matrix::from_columns(ambient_rank, basis).transpose();
  for (std::size_t i = 0; i < basis.size(); ++i)
    if (!solve_linear(ring, t, unit_vector(basis.size(), i)).solvable()) return false;
  return true;
}

/// Canonical generating set of span(gens): reduced row echelon over Q,
/// Hermite rows over Z, Hermite rows of the lifted lattice mod n for Z/n.
inline std::vector<Vector> echelon_basis(const Ring& ring, const std::vector<Vector>& gens,
                                         std::size_t width) {
  if (ring.kind() == Ring::Kind::Rationals) {
    std::vector<Vector> rows;
    for (const auto& g : gens) rows.push_back(g);
    std::size_t r = 0;
    for (std::size_t c = 0; c < width && r < rows.size(); ++c) {
      std::size_t p = r;
      while (p < rows.size() && rows[p][c] == 0) ++p;
      if (p == rows.size()) continue;
      std::swap(rows[p], rows[r]);
      Scalar inv = Scalar(1) / rows[r][c];
      for (auto& x : rows[r]) x *= inv;
      for (std::size_t i = 0; i < rows.size(); ++i) {
        if (i == r || rows[i][c] == 0) continue;
        Scalar f = rows[i][c];
        for (std::size_t j = 0; j < width; ++j) rows[i][j] -= f * rows[r][j];
      }
      ++r;
    }
    rows.resize(r);
    return rows;
  }
  std::vector<std::vector<Integer>> lattice;
  for (const auto& g : gens) {
    std::vector<Integer> row(width);
    for (std::size_t j = 0; j < width; ++j) row[j] = detail::lift(g[j]);
    lattice.push_back(std::move(row));
  }
  if (ring.kind() == Ring::Kind::IntegersMod)
    for (std::size_t j = 0; j < width; ++j) {
      std::vector<Integer> e(width);
      e[j] = ring.modulus();
      lattice.push_back(std::move(e));
    }
  std::vector<Vector> out;
  for (const auto& row : hermite_rows(std::move(lattice), width)) {
    Vector v = detail::to_vector(row);
    ring.reduce_in_place(v);
    if (!is_zero(v)) out.push_back(std::move(v));
  }
  return out;
}

}  // namespace hopfdual
