#include "lics/acs.hpp"

#include "lics/error.hpp"

#include <random>
#include <string>

namespace lics {

AlmostComplexStructure::AlmostComplexStructure(LieAlgebra algebra, Matrix j)
    : algebra_(std::move(algebra)), j_(std::move(j)) {
  const std::size_t n = algebra_.dim();
  if (j_.rows() != n || j_.cols() != n) {
    throw Error(Errc::DimensionMismatch, "J must be " + std::to_string(n) + "x" + std::to_string(n));
  }
  if (!j_.is_real()) throw Error(Errc::NotAlmostComplex, "J must have real entries");
  if (j_ * j_ != GaussScalar(-1) * Matrix::identity(n)) throw Error(Errc::NotAlmostComplex, "J^2 != -Id");
}

Subspace from_acs(const AlmostComplexStructure& j) {
  const std::size_t n = j.algebra().dim();
  Matrix rows(n, n);
  for (std::size_t v = 0; v < n; ++v) {
    for (std::size_t k = 0; k < n; ++k) rows(v, k) = GaussScalar(Rational(k == v ? 1 : 0), j.matrix()(k, v).re());
  }
  return span(rows, n);
}

AlmostComplexStructure to_acs(const LieAlgebra& g, const Subspace& t) {
  const std::size_t n = g.dim();
  if (t.ambient_dim() != n || 2 * t.dim() != n) {
    throw Error(Errc::DimensionMismatch, "to_acs needs a half-dimensional subspace of the complexification");
  }
  const Subspace tbar = conj_subspace(t);
  if (intersect(t, tbar).dim() != 0) throw Error(Errc::DegeneratePoint, "T meets its conjugate");
  // Columns of M: basis of T then basis of conj(T); J = M·D·M^-1.
  const std::size_t h = t.dim();
  Matrix m(n, n);
  Matrix d(n, n);
  for (std::size_t c = 0; c < h; ++c) {
    for (std::size_t r = 0; r < n; ++r) {
      m(r, c) = t.basis()(c, r);
      m(r, h + c) = tbar.basis()(c, r);
    }
    d(c, c) = -GaussScalar::i();
    d(h + c, h + c) = GaussScalar::i();
  }
  const auto minv = inverse(m);
  if (!minv) throw Error(Errc::Internal, "T + conj(T) does not span");
  Matrix j = m * d * *minv;
  if (!j.is_real()) throw Error(Errc::Internal, "recovered J is not real");
  return AlmostComplexStructure(g, std::move(j));
}

Vector nijenhuis(const AlmostComplexStructure& j, std::size_t x, std::size_t y) {
  const LieAlgebra& g = j.algebra();
  const std::size_t n = g.dim();
  if (x >= n || y >= n) throw Error(Errc::DimensionMismatch, "nijenhuis basis index out of range");
  const Vector ex = unit_vector(n, x);
  const Vector ey = unit_vector(n, y);
  const Vector jx = j.apply(ex);
  const Vector jy = j.apply(ey);
  return g.bracket(jx, jy) - g.bracket(ex, ey) - j.apply(g.bracket(jx, ey)) - j.apply(g.bracket(ex, jy));
}

bool nijenhuis_vanishes(const AlmostComplexStructure& j) {
  const std::size_t n = j.algebra().dim();
  for (std::size_t x = 0; x < n; ++x) {
    for (std::size_t y = x + 1; y < n; ++y) {
      if (!is_zero(nijenhuis(j, x, y))) return false;
    }
  }
  return true;
}

Matrix standard_complex_structure(std::size_t dim) {
  if (dim % 2 != 0) throw Error(Errc::DimensionMismatch, "odd-dimensional algebra has no complex structure");
  Matrix j0(dim, dim);
  for (std::size_t k = 0; k < dim; k += 2) {
    j0(k + 1, k) = GaussScalar(1);
    j0(k, k + 1) = GaussScalar(-1);
  }
  return j0;
}

namespace {

constexpr int kMaxAttempts = 64;

// Small rationals drawn straight from the engine's bit stream; the standard
// distributions are implementation-defined.
Rational draw_rational(std::mt19937_64& rng) {
  const long num = static_cast<long>(rng() % 19) - 9;
  const long den = static_cast<long>(rng() % 5) + 1;
  return Rational(num, den);
}

}  // namespace

AlmostComplexStructure sample_acs(const LieAlgebra& g, std::uint64_t seed) {
  const std::size_t n = g.dim();
  const Matrix j0 = standard_complex_structure(n);
  std::mt19937_64 rng(seed);
  for (int attempt = 0; attempt < kMaxAttempts; ++attempt) {
    Matrix p(n, n);
    for (std::size_t r = 0; r < n; ++r) {
      for (std::size_t c = 0; c < n; ++c) p(r, c) = GaussScalar(draw_rational(rng));
    }
    const auto pinv = inverse(p);
    if (!pinv) continue;
    return AlmostComplexStructure(g, p * j0 * *pinv);
  }
  throw Error(Errc::Internal, "sample_acs: no invertible conjugator after 64 attempts");
}

}  // namespace lics
