#include "lics/subspace.hpp"

#include "lics/error.hpp"

#include <string>

namespace lics {

namespace {

void require_same_ambient(const Subspace& a, const Subspace& b, const char* what) {
  if (a.ambient_dim() != b.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, std::string(what) + ": ambient dimensions " +
                                             std::to_string(a.ambient_dim()) + " and " +
                                             std::to_string(b.ambient_dim()));
  }
}

}  // namespace

Subspace Subspace::full(std::size_t ambient_dim) {
  return span(Matrix::identity(ambient_dim), ambient_dim);
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.size() != ambient_dim_) throw Error(Errc::DimensionMismatch, "vector length vs ambient dimension");
  Vector r(v);
  for (std::size_t i = 0; i < basis_.rows(); ++i) {
    const GaussScalar c = r[pivots_[i]];
    if (c.is_zero()) continue;
    for (std::size_t k = 0; k < ambient_dim_; ++k) {
      if (!basis_(i, k).is_zero()) r[k] -= c * basis_(i, k);
    }
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return is_zero(reduce(v)); }

bool Subspace::contains(const Subspace& other) const {
  require_same_ambient(*this, other, "containment");
  for (std::size_t r = 0; r < other.dim(); ++r) {
    if (!contains(other.basis_.row(r))) return false;
  }
  return true;
}

Subspace span(const Matrix& vectors, std::size_t ambient_dim) {
  if (vectors.cols() != ambient_dim && !(vectors.rows() == 0)) {
    throw Error(Errc::DimensionMismatch, "span: vectors of length " + std::to_string(vectors.cols()) +
                                             " in ambient dimension " + std::to_string(ambient_dim));
  }
  if (vectors.rows() == 0) return Subspace(ambient_dim);
  RrefResult r = rref(vectors);
  Matrix basis(r.rank, ambient_dim);
  for (std::size_t i = 0; i < r.rank; ++i) {
    for (std::size_t c = 0; c < ambient_dim; ++c) basis(i, c) = r.reduced(i, c);
  }
  return Subspace(ambient_dim, std::move(basis), std::move(r.pivots));
}

Subspace span(const std::vector<Vector>& vectors, std::size_t ambient_dim) {
  return span(Matrix::from_rows(vectors, ambient_dim), ambient_dim);
}

Subspace conj_subspace(const Subspace& s) { return span(s.basis().conj(), s.ambient_dim()); }

Subspace intersect(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "intersect");
  if (a.dim() == 0 || b.dim() == 0) return Subspace(a.ambient_dim());
  // Coefficient vectors c with sum_i c_i a_i = sum_j c'_j b_j are the left
  // kernel of the stacked bases.
  const Matrix stacked = vstack(a.basis(), b.basis());
  const Matrix coeffs = kernel(stacked.transpose());
  Matrix vectors(0, a.ambient_dim());
  for (std::size_t r = 0; r < coeffs.rows(); ++r) {
    Vector w(a.ambient_dim());
    for (std::size_t i = 0; i < a.dim(); ++i) {
      const GaussScalar& c = coeffs(r, i);
      if (c.is_zero()) continue;
      for (std::size_t k = 0; k < a.ambient_dim(); ++k) w[k] += c * a.basis()(i, k);
    }
    vectors.append_row(w);
  }
  return span(vectors, a.ambient_dim());
}

Subspace sum(const Subspace& a, const Subspace& b) {
  require_same_ambient(a, b, "sum");
  return span(vstack(a.basis(), b.basis()), a.ambient_dim());
}

Matrix quotient_basis(const Subspace& s, const Subspace& w) {
  require_same_ambient(s, w, "quotient_basis");
  if (!s.contains(w)) throw Error(Errc::NotContained, "quotient_basis: w is not a subspace of s");
  Matrix reps(0, s.ambient_dim());
  Subspace current = w;
  for (std::size_t r = 0; r < s.dim() && current.dim() < s.dim(); ++r) {
    const Vector v = s.basis().row(r);
    if (current.contains(v)) continue;
    reps.append_row(v);
    current = sum(current, span(std::vector<Vector>{v}, s.ambient_dim()));
  }
  return reps;
}

}  // namespace lics
