#pragma once
// Test-only reference computations. Each routine here avoids the library's
// echelon machinery so it can check that machinery independently.

#include "lics/catalog.hpp"
#include "lics/lie_algebra.hpp"
#include "lics/matrix.hpp"
#include "lics/subspace.hpp"

#include <random>
#include <vector>

namespace oracle {

using lics::GaussScalar;
using lics::Matrix;
using lics::Rational;
using lics::Vector;

/// Laplace expansion along the first row.
inline GaussScalar cofactor_det(const Matrix& m) {
  const std::size_t n = m.rows();
  if (n == 0) return GaussScalar(1);
  if (n == 1) return m(0, 0);
  GaussScalar det;
  for (std::size_t c = 0; c < n; ++c) {
    if (m(0, c).is_zero()) continue;
    Matrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      std::size_t cc = 0;
      for (std::size_t k = 0; k < n; ++k) {
        if (k == c) continue;
        minor(r - 1, cc++) = m(r, k);
      }
    }
    const GaussScalar term = m(0, c) * cofactor_det(minor);
    det = (c % 2 == 0) ? det + term : det - term;
  }
  return det;
}

/// Bracket straight from the constants, summing over all ordered pairs.
inline Vector naive_bracket(const lics::LieAlgebra& g, const Vector& x, const Vector& y) {
  const std::size_t n = g.dim();
  Vector out(n);
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = 0; j < n; ++j) {
      if (x[i].is_zero() || y[j].is_zero()) continue;
      for (std::size_t k = 0; k < n; ++k) {
        const Rational c = g.constant(i, j, k);
        if (!c.is_zero()) out[k] += GaussScalar(c) * x[i] * y[j];
      }
    }
  }
  return out;
}

/// 2x2 complex matrix product and commutator.
inline Matrix commutator(const Matrix& a, const Matrix& b) { return a * b - b * a; }

/// The paper's su(2) basis X, Y1, Y2.
inline Matrix su2_x() { return Matrix::from_rows({{GaussScalar::i(), 0}, {0, -GaussScalar::i()}}); }
inline Matrix su2_y1() { return Matrix::from_rows({{0, 1}, {-1, 0}}); }
inline Matrix su2_y2() { return Matrix::from_rows({{0, GaussScalar::i()}, {GaussScalar::i(), 0}}); }

/// Rank by counting nonzero maximal-size minors, largest size first.
inline std::size_t minor_rank(const Matrix& m) {
  const std::size_t top = std::min(m.rows(), m.cols());
  for (std::size_t r = top; r > 0; --r) {
    std::vector<std::size_t> rows(r), cols(r);
    // enumerate all r-subsets of rows and columns
    std::vector<bool> rsel(m.rows(), false), csel(m.cols(), false);
    std::fill(rsel.begin(), rsel.begin() + r, true);
    do {
      std::fill(csel.begin(), csel.end(), false);
      std::fill(csel.begin(), csel.begin() + r, true);
      do {
        Matrix sub(r, r);
        std::size_t ri = 0;
        for (std::size_t a = 0; a < m.rows(); ++a) {
          if (!rsel[a]) continue;
          std::size_t ci = 0;
          for (std::size_t b = 0; b < m.cols(); ++b) {
            if (!csel[b]) continue;
            sub(ri, ci++) = m(a, b);
          }
          ++ri;
        }
        if (!cofactor_det(sub).is_zero()) return r;
      } while (std::prev_permutation(csel.begin(), csel.end()));
    } while (std::prev_permutation(rsel.begin(), rsel.end()));
  }
  return 0;
}

/// dim_R of T ∩ R^N: real solutions (x, y) of sum_j (x_j + i y_j) t_j with
/// zero imaginary part, modulo the real kernel of the coefficient map.
inline std::size_t real_intersection_dim(const lics::Subspace& t) {
  const std::size_t d = t.dim(), n = t.ambient_dim();
  // Unknowns: x_1..x_d, y_1..y_d (real). Im(v) = sum x_j Im t_j + y_j Re t_j = 0.
  Matrix im_map(n, 2 * d);
  for (std::size_t c = 0; c < n; ++c) {
    for (std::size_t j = 0; j < d; ++j) {
      im_map(c, j) = GaussScalar(t.basis()(j, c).im());
      im_map(c, d + j) = GaussScalar(t.basis()(j, c).re());
    }
  }
  // The basis is independent over C, so (x, y) -> v is injective over R.
  return 2 * d - minor_rank(im_map);
}

/// Type (II) basis with the factor i on the second vector instead of the S term.
inline Matrix hopf_type_II_misplaced_i(const GaussScalar& a, const GaussScalar& b) {
  const GaussScalar i = GaussScalar::i(), ai = a.inv();
  // 2S + a(A+iB) + a^-1(A-iB), bT + ia(A+iB) - ia^-1(A-iB)
  return Matrix::from_rows({{0, 2, a + ai, i * (a - ai)}, {b, 0, i * (a - ai), i * i * (a + ai)}});
}

struct Rng {
  std::mt19937_64 engine;
  explicit Rng(std::uint64_t seed) : engine(seed) {}

  long integer(long lo, long hi) { return lo + static_cast<long>(engine() % static_cast<std::uint64_t>(hi - lo + 1)); }
  Rational rational(long span = 9, long max_den = 5) { return Rational(integer(-span, span), integer(1, max_den)); }
  Rational nonzero_rational() {
    Rational r;
    while (r.is_zero()) r = rational();
    return r;
  }
  GaussScalar gauss() { return {rational(), rational()}; }
  GaussScalar nonzero_gauss() {
    GaussScalar z;
    while (z.is_zero()) z = gauss();
    return z;
  }
  Matrix gauss_matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = gauss();
    return m;
  }
  Matrix real_matrix(std::size_t r, std::size_t c) {
    Matrix m(r, c);
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = 0; j < c; ++j) m(i, j) = GaussScalar(rational());
    return m;
  }
  /// Random element of GL_n(Z) as a product of elementary integer moves.
  Matrix gl_z(std::size_t n) {
    Matrix m = Matrix::identity(n);
    for (int step = 0; step < 6; ++step) {
      const auto a = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      auto b = static_cast<std::size_t>(integer(0, static_cast<long>(n) - 1));
      if (a == b) b = (b + 1) % n;
      const long kind = integer(0, 2);
      Matrix e = Matrix::identity(n);
      if (kind == 0) {
        e(a, b) = GaussScalar(integer(-2, 2));
      } else if (kind == 1) {
        e(a, a) = GaussScalar(0);
        e(b, b) = GaussScalar(0);
        e(a, b) = GaussScalar(1);
        e(b, a) = GaussScalar(1);
      } else {
        e(a, a) = GaussScalar(-1);
      }
      m = e * m;
    }
    return m;
  }
};

}  // namespace oracle
