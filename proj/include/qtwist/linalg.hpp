// Dense exact matrices: fraction-free elimination over Laurent polynomials
// and plain Gauss-Jordan over the rational function field.
#pragma once

#include "qtwist/scalar.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace qtwist {

template <class T>
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n) {
    Matrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m(i, i) = T(1);
    return m;
  }

  std::size_t rows() const { return rows_; }
  std::size_t cols() const { return cols_; }
  T& operator()(std::size_t i, std::size_t j) { return data_[i * cols_ + j]; }
  const T& operator()(std::size_t i, std::size_t j) const { return data_[i * cols_ + j]; }

  void swap_rows(std::size_t a, std::size_t b) {
    if (a == b) return;
    for (std::size_t j = 0; j < cols_; ++j) std::swap((*this)(a, j), (*this)(b, j));
  }

  bool is_zero() const {
    for (const auto& x : data_)
      if (!x.is_zero()) return false;
    return true;
  }

  friend bool operator==(const Matrix& a, const Matrix& b) {
    return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.data_ == b.data_;
  }

  friend Matrix operator+(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] += b.data_[k];
    return out;
  }

  friend Matrix operator-(const Matrix& a, const Matrix& b) {
    check_same(a, b);
    Matrix out = a;
    for (std::size_t k = 0; k < out.data_.size(); ++k) out.data_[k] -= b.data_[k];
    return out;
  }

  friend Matrix operator*(const Matrix& a, const Matrix& b) {
    if (a.cols_ != b.rows_) throw std::invalid_argument("matrix shape mismatch in product");
    Matrix out(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i)
      for (std::size_t k = 0; k < a.cols_; ++k) {
        const T& x = a(i, k);
        if (x.is_zero()) continue;
        for (std::size_t j = 0; j < b.cols_; ++j)
          if (!b(k, j).is_zero()) out(i, j) += x * b(k, j);
      }
    return out;
  }

  friend Matrix operator*(const T& c, Matrix m) {
    for (auto& x : m.data_) x = c * x;
    return m;
  }

 private:
  static void check_same(const Matrix& a, const Matrix& b) {
    if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw std::invalid_argument("matrix shape mismatch");
  }

  std::size_t rows_ = 0, cols_ = 0;
  std::vector<T> data_;
};

using PolyMatrix = Matrix<LaurentScalar>;
using CoeffMatrix = Matrix<Coeff>;

/// Fraction-free Gauss-Jordan. Rows [0, pivots.size()) hold the reduced
/// rows scaled by `scale`; every pivot entry equals `scale`.
struct FractionFreeForm {
  PolyMatrix rows;
  LaurentScalar scale;
  std::vector<std::size_t> pivots;
};

FractionFreeForm fraction_free_rref(PolyMatrix m);

/// Multiplies each row by a common denominator so entries become polynomials.
PolyMatrix clear_denominators(const CoeffMatrix& m);

std::size_t rank(const CoeffMatrix& m);
std::size_t rank(const PolyMatrix& m);

/// Reduced row echelon form over the fraction field.
CoeffMatrix rref(CoeffMatrix m, std::vector<std::size_t>* pivots = nullptr);
std::optional<CoeffMatrix> inverse(const CoeffMatrix& m);
/// Columns form a basis of the right null space.
CoeffMatrix kernel(const CoeffMatrix& m);
CoeffMatrix kronecker(const CoeffMatrix& a, const CoeffMatrix& b);
CoeffMatrix to_coeff(const PolyMatrix& m);

}  // namespace qtwist
