#pragma once

/**
 * @file linalg.hpp
 * @brief Dense matrices, free modules and linear maps over a Ring.
 *
 * Conventions used throughout the library:
 * - column j of a map's matrix is the image of the j-th domain basis vector;
 * - the basis of M (x) N is flattened row-major, e_i (x) f_j sits at
 *   index i * rank(N) + j.
 */

#include <cstddef>
#include <set>
#include <string>
#include <utility>
#include <vector>

#include "hopfdual/error.hpp"
#include "hopfdual/ring.hpp"

namespace hopfdual {

class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = 1;
    return m;
  }

  static Matrix from_columns(std::size_t rows, const std::vector<Vector>& cols) {
    Matrix m(rows, cols.size());
    for (std::size_t j = 0; j < cols.size(); ++j) {
      require(cols[j].size() == rows, ErrorKind::DimensionMismatch, "column length mismatch");
      for (std::size_t i = 0; i < rows; ++i) m(i, j) = cols[j][i];
    }
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }

  Scalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const Scalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  Vector column(std::size_t c) const {
    Vector v(rows_);
    for (std::size_t r = 0; r < rows_; ++r) v[r] = (*this)(r, c);
    return v;
  }

  void set_column(std::size_t c, const Vector& v) {
    require(v.size() == rows_, ErrorKind::DimensionMismatch, "set_column length mismatch");
    for (std::size_t r = 0; r < rows_; ++r) (*this)(r, c) = v[r];
  }

  Vector row(std::size_t r) const {
    return Vector(data_.begin() + static_cast<std::ptrdiff_t>(r * cols_),
                  data_.begin() + static_cast<std::ptrdiff_t>((r + 1) * cols_));
  }

  Matrix transpose() const {
    Matrix t(cols_, rows_);
    for (std::size_t r = 0; r < rows_; ++r)
      for (std::size_t c = 0; c < cols_; ++c) t(c, r) = (*this)(r, c);
    return t;
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (x != 0) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<Scalar> data_;
};

inline Matrix multiply(const Ring& ring, const Matrix& a, const Matrix& b) {
  require(a.cols() == b.rows(), ErrorKind::DimensionMismatch,
          "matrix product " + std::to_string(a.rows()) + "x" + std::to_string(a.cols()) + " * " +
              std::to_string(b.rows()) + "x" + std::to_string(b.cols()));
  Matrix out(a.rows(), b.cols());
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t k = 0; k < a.cols(); ++k) {
      const Scalar& aik = a(i, k);
      if (aik == 0) continue;
      for (std::size_t j = 0; j < b.cols(); ++j)
        if (b(k, j) != 0) out(i, j) += aik * b(k, j);
    }
  if (ring.kind() == Ring::Kind::IntegersMod)
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) ring.reduce_in_place(out(i, j));
  return out;
}

inline Vector apply(const Ring& ring, const Matrix& a, const Vector& v) {
  require(a.cols() == v.size(), ErrorKind::DimensionMismatch, "matrix-vector size mismatch");
  Vector out(a.rows());
  for (std::size_t k = 0; k < v.size(); ++k) {
    if (v[k] == 0) continue;
    for (std::size_t i = 0; i < a.rows(); ++i)
      if (a(i, k) != 0) out[i] += a(i, k) * v[k];
  }
  ring.reduce_in_place(out);
  return out;
}

inline Matrix add(const Ring& ring, const Matrix& a, const Matrix& b, const Scalar& b_scale = 1) {
  require(a.rows() == b.rows() && a.cols() == b.cols(), ErrorKind::DimensionMismatch,
          "matrix sum shape mismatch");
  Matrix out = a;
  for (std::size_t i = 0; i < a.rows(); ++i)
    for (std::size_t j = 0; j < a.cols(); ++j) {
      out(i, j) += b_scale * b(i, j);
      ring.reduce_in_place(out(i, j));
    }
  return out;
}

/// out += scale * v, unreduced; callers reduce once at the end.
inline void axpy(Vector& out, const Scalar& scale, const Vector& v) {
  if (scale == 0) return;
  for (std::size_t i = 0; i < v.size(); ++i)
    if (v[i] != 0) out[i] += scale * v[i];
}

/// Kronecker product of two vectors with row-major flattening.
inline Vector tensor(const Vector& x, const Vector& y) {
  Vector out(x.size() * y.size());
  for (std::size_t i = 0; i < x.size(); ++i) {
    if (x[i] == 0) continue;
    for (std::size_t j = 0; j < y.size(); ++j)
      if (y[j] != 0) out[i * y.size() + j] = x[i] * y[j];
  }
  return out;
}

class FreeModule {
 public:
  FreeModule() : ring_(Ring::integers()) {}
  FreeModule(Ring ring, std::vector<std::string> labels)
      : ring_(std::move(ring)), labels_(std::move(labels)) {
    std::set<std::string> seen(labels_.begin(), labels_.end());
    require(seen.size() == labels_.size(), ErrorKind::ValidationError,
            "basis labels must be pairwise distinct");
  }

  /// Basis labelled prefix0, prefix1, ...
  static FreeModule indexed(const Ring& ring, std::size_t rank, const std::string& prefix = "b") {
    std::vector<std::string> labels;
    labels.reserve(rank);
    for (std::size_t i = 0; i < rank; ++i) labels.push_back(prefix + std::to_string(i));
    return FreeModule(ring, std::move(labels));
  }

  /// The ring itself as a rank-one module.
  static FreeModule scalars(const Ring& ring) { return FreeModule(ring, {"1"}); }

  const Ring& ring() const { return ring_; }
  std::size_t rank() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const std::string& label(std::size_t i) const { return labels_.at(i); }

  friend bool operator==(const FreeModule& a, const FreeModule& b) {
    return a.ring_ == b.ring_ && a.labels_ == b.labels_;
  }

 private:
  Ring ring_;
  std::vector<std::string> labels_;
};

inline FreeModule tensor(const FreeModule& m, const FreeModule& n) {
  require(m.ring() == n.ring(), ErrorKind::RingMismatch, "tensor of modules over different rings");
  std::vector<std::string> labels;
  labels.reserve(m.rank() * n.rank());
  for (const auto& a : m.labels())
    for (const auto& b : n.labels()) labels.push_back("(" + a + "," + b + ")");
  return FreeModule(m.ring(), std::move(labels));
}

class LinearMap {
 public:
  LinearMap() = default;
  LinearMap(FreeModule domain, FreeModule codomain, Matrix matrix)
      : domain_(std::move(domain)), codomain_(std::move(codomain)), matrix_(std::move(matrix)) {
    require(domain_.ring() == codomain_.ring(), ErrorKind::RingMismatch,
            "domain and codomain over different rings");
    require(matrix_.rows() == codomain_.rank() && matrix_.cols() == domain_.rank(),
            ErrorKind::DimensionMismatch,
            "matrix is " + std::to_string(matrix_.rows()) + "x" + std::to_string(matrix_.cols()) +
                ", expected " + std::to_string(codomain_.rank()) + "x" +
                std::to_string(domain_.rank()));
    for (std::size_t i = 0; i < matrix_.rows(); ++i)
      for (std::size_t j = 0; j < matrix_.cols(); ++j)
        matrix_(i, j) = ring().normalize(matrix_(i, j));
  }

  static LinearMap identity(const FreeModule& m) {
    return LinearMap(m, m, Matrix::identity(m.rank()));
  }

  const FreeModule& domain() const { return domain_; }
  const FreeModule& codomain() const { return codomain_; }
  const Matrix& matrix() const { return matrix_; }
  const Ring& ring() const { return domain_.ring(); }

  Vector operator()(const Vector& v) const { return apply(ring(), matrix_, v); }

  friend bool operator==(const LinearMap& a, const LinearMap& b) {
    return a.domain_ == b.domain_ && a.codomain_ == b.codomain_ && a.matrix_ == b.matrix_;
  }

 private:
  FreeModule domain_;
  FreeModule codomain_;
  Matrix matrix_;
};

/// g after f.
inline LinearMap compose(const LinearMap& g, const LinearMap& f) {
  require(f.codomain().rank() == g.domain().rank(), ErrorKind::DimensionMismatch,
          "compose: rank mismatch");
  require(f.ring() == g.ring(), ErrorKind::RingMismatch, "compose: ring mismatch");
  return LinearMap(f.domain(), g.codomain(), multiply(f.ring(), g.matrix(), f.matrix()));
}

inline Matrix kron(const Ring& ring, const Matrix& f, const Matrix& g) {
  Matrix out(f.rows() * g.rows(), f.cols() * g.cols());
  for (std::size_t i = 0; i < f.rows(); ++i)
    for (std::size_t j = 0; j < f.cols(); ++j) {
      if (f(i, j) == 0) continue;
      for (std::size_t k = 0; k < g.rows(); ++k)
        for (std::size_t l = 0; l < g.cols(); ++l)
          if (g(k, l) != 0) out(i * g.rows() + k, j * g.cols() + l) = f(i, j) * g(k, l);
    }
  if (ring.kind() == Ring::Kind::IntegersMod)
    for (std::size_t i = 0; i < out.rows(); ++i)
      for (std::size_t j = 0; j < out.cols(); ++j) ring.reduce_in_place(out(i, j));
  return out;
}

/// (f (x) g)(e_i (x) f_j) = f(e_i) (x) g(f_j).
inline LinearMap kron(const LinearMap& f, const LinearMap& g) {
  require(f.ring() == g.ring(), ErrorKind::RingMismatch, "kron of maps over different rings");
  return LinearMap(tensor(f.domain(), g.domain()), tensor(f.codomain(), g.codomain()),
                   kron(f.ring(), f.matrix(), g.matrix()));
}

/// Permutation matrix of the flip M (x) N -> N (x) M for ranks (m, n).
inline Matrix twist_matrix(std::size_t m, std::size_t n) {
  Matrix out(m * n, m * n);
  for (std::size_t i = 0; i < m; ++i)
    for (std::size_t j = 0; j < n; ++j) out(j * m + i, i * n + j) = 1;
  return out;
}

inline LinearMap twist(const FreeModule& m, const FreeModule& n) {
  require(m.ring() == n.ring(), ErrorKind::RingMismatch, "twist of modules over different rings");
  return LinearMap(tensor(m, n), tensor(n, m), twist_matrix(m.rank(), n.rank()));
}

}  // namespace hopfdual
