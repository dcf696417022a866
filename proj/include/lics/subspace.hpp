#pragma once

#include "lics/matrix.hpp"

#include <cstddef>

namespace lics {

/// A complex subspace of C^ambient_dim held by its reduced row-echelon basis.
/// The echelon basis is unique, so subspace equality is structural equality.
class Subspace {
 public:
  /// The zero subspace of C^ambient_dim.
  explicit Subspace(std::size_t ambient_dim = 0) : ambient_dim_(ambient_dim), basis_(0, ambient_dim) {}

  static Subspace full(std::size_t ambient_dim);

  std::size_t ambient_dim() const noexcept { return ambient_dim_; }
  std::size_t dim() const noexcept { return basis_.rows(); }
  const Matrix& basis() const noexcept { return basis_; }
  const std::vector<std::size_t>& pivots() const noexcept { return pivots_; }

  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  /// True when the subspace is spanned by real vectors (equivalently, fixed by
  /// conjugation); canonical bases of such subspaces have real entries.
  bool is_real() const { return basis_.is_real(); }

  /// The component of v left after eliminating every pivot coordinate.
  Vector reduce(const Vector& v) const;

  friend bool operator==(const Subspace&, const Subspace&) = default;

 private:
  friend Subspace span(const Matrix& vectors, std::size_t ambient_dim);

  Subspace(std::size_t ambient_dim, Matrix basis, std::vector<std::size_t> pivots)
      : ambient_dim_(ambient_dim), basis_(std::move(basis)), pivots_(std::move(pivots)) {}

  std::size_t ambient_dim_ = 0;
  Matrix basis_;
  std::vector<std::size_t> pivots_;
};

/// Canonical span of the rows of `vectors`. Throws DimensionMismatch unless
/// cols(vectors) == ambient_dim.
Subspace span(const Matrix& vectors, std::size_t ambient_dim);
Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim);

Subspace conj_subspace(const Subspace& s);
Subspace intersect(const Subspace& a, const Subspace& b);
Subspace sum(const Subspace& a, const Subspace& b);

/// Rows completing a basis of w to a basis of s (w must lie in s).
Matrix quotient_basis(const Subspace& s, const Subspace& w);

}  // namespace lics
