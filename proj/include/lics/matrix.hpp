#pragma once

#include "lics/gauss.hpp"

#include <cstddef>
#include <optional>
#include <span>
#include <utility>
#include <vector>

namespace lics {

/// A vector of the complexified algebra, in basis coordinates.
using Vector = std::vector<GaussScalar>;

Vector operator+(const Vector& a, const Vector& b);
Vector operator-(const Vector& a, const Vector& b);
Vector operator*(const GaussScalar& s, const Vector& v);
Vector conj(const Vector& v);
bool is_zero(const Vector& v);
bool is_real(const Vector& v);
Vector unit_vector(std::size_t dim, std::size_t index);

/// Dense row-major matrix over Q(i).
class Matrix {
 public:
  Matrix() = default;
  Matrix(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), data_(rows * cols) {}

  static Matrix identity(std::size_t n);
  /// Every row must have length `cols`.
  static Matrix from_rows(const std::vector<Vector>& rows, std::size_t cols);
  static Matrix from_rows(const std::vector<Vector>& rows);

  std::size_t rows() const noexcept { return rows_; }
  std::size_t cols() const noexcept { return cols_; }
  bool empty() const noexcept { return rows_ == 0; }

  GaussScalar& operator()(std::size_t r, std::size_t c) { return data_[r * cols_ + c]; }
  const GaussScalar& operator()(std::size_t r, std::size_t c) const { return data_[r * cols_ + c]; }

  std::span<const GaussScalar> row_view(std::size_t r) const {
    return {data_.data() + r * cols_, cols_};
  }
  Vector row(std::size_t r) const;
  Vector column(std::size_t c) const;
  std::vector<Vector> row_list() const;

  void append_row(const Vector& v);

  Matrix transpose() const;
  Matrix conj() const;
  bool is_real() const;

  /// Matrix-vector product M·v.
  Vector apply(const Vector& v) const;

  friend Matrix operator*(const Matrix& a, const Matrix& b);
  friend Matrix operator+(const Matrix& a, const Matrix& b);
  friend Matrix operator-(const Matrix& a, const Matrix& b);
  friend Matrix operator*(const GaussScalar& s, const Matrix& m);
  friend bool operator==(const Matrix&, const Matrix&) = default;

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::vector<GaussScalar> data_;
};

/// Rows of `top` followed by rows of `bottom`; column counts must agree.
Matrix vstack(const Matrix& top, const Matrix& bottom);

struct RrefResult {
  Matrix reduced;  // same shape as the input, zero rows last
  std::size_t rank = 0;
  std::vector<std::size_t> pivots;  // pivot column of each nonzero row
};

/// Exact reduced row-echelon form: pivots equal 1, pivot columns increase,
/// every pivot column is zero outside its pivot row.
RrefResult rref(Matrix m);

std::size_t rank(const Matrix& m);

/// Basis of {x : m·x = 0}, one vector per row of the result.
Matrix kernel(const Matrix& m);

GaussScalar determinant(Matrix m);

std::optional<Matrix> inverse(const Matrix& m);

}  // namespace lics
