#include "lics/plucker.hpp"

#include "lics/error.hpp"

#include <cmath>
#include <string>

namespace lics {

std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t r) {
  std::vector<std::vector<std::size_t>> out;
  if (r > m) return out;
  std::vector<std::size_t> idx(r);
  for (std::size_t i = 0; i < r; ++i) idx[i] = i;
  while (true) {
    out.push_back(idx);
    std::size_t i = r;
    while (i > 0 && idx[i - 1] == m - r + (i - 1)) --i;
    if (i == 0) break;
    ++idx[i - 1];
    for (std::size_t k = i; k < r; ++k) idx[k] = idx[k - 1] + 1;
  }
  return out;
}

std::vector<GaussScalar> maximal_minors(const Matrix& m) {
  const std::size_t r = m.rows();
  if (r > m.cols()) throw Error(Errc::DimensionMismatch, "more rows than columns");
  std::vector<GaussScalar> out;
  for (const auto& cols : subsets(m.cols(), r)) {
    Matrix sub(r, r);
    for (std::size_t i = 0; i < r; ++i) {
      for (std::size_t k = 0; k < r; ++k) sub(i, k) = m(i, cols[k]);
    }
    out.push_back(determinant(std::move(sub)));
  }
  return out;
}

PluckerVector plucker(const Subspace& t) {
  if (t.dim() == 0 || 2 * t.dim() != t.ambient_dim()) {
    throw Error(Errc::DimensionMismatch, "plucker needs an n-plane in C^2n, got dim " + std::to_string(t.dim()) +
                                             " in C^" + std::to_string(t.ambient_dim()));
  }
  PluckerVector p{t.dim(), t.ambient_dim(), maximal_minors(t.basis())};
  GaussScalar scale;
  for (const auto& x : p.coordinates) {
    if (!x.is_zero()) {
      scale = x.inv();
      break;
    }
  }
  if (scale.is_zero()) throw Error(Errc::Internal, "all Plücker coordinates vanish");
  for (auto& x : p.coordinates) x *= scale;
  return p;
}

bool involutive_plucker(const LieAlgebra& g, const Subspace& t) {
  if (t.ambient_dim() != g.dim() || 2 * t.dim() != g.dim()) {
    throw Error(Errc::DimensionMismatch, "involutive_plucker needs an n-plane of the complexified algebra");
  }
  const std::size_t n = t.dim();
  const std::size_t dim = g.dim();
  const auto rows = t.basis().row_list();
  for (std::size_t a = 0; a < n; ++a) {
    for (std::size_t b = a + 1; b < n; ++b) {
      // Coordinates of the (n+1)-vector are the (n+1)×(n+1) minors of [u; v_1; ...; v_n].
      Matrix stacked(n + 1, dim);
      const Vector u = g.bracket(rows[a], rows[b]);
      for (std::size_t c = 0; c < dim; ++c) stacked(0, c) = u[c];
      for (std::size_t r = 0; r < n; ++r) {
        for (std::size_t c = 0; c < dim; ++c) stacked(r + 1, c) = rows[r][c];
      }
      for (const auto& minor : maximal_minors(stacked)) {
        if (!minor.is_zero()) return false;
      }
    }
  }
  return true;
}

double fubini_study(const PluckerVector& p, const PluckerVector& q) {
  if (p.coordinates.size() != q.coordinates.size()) {
    throw Error(Errc::DimensionMismatch, "Plücker vectors of different Grassmannians");
  }
  GaussScalar inner;
  Rational np, nq;
  for (std::size_t i = 0; i < p.coordinates.size(); ++i) {
    inner += p.coordinates[i] * q.coordinates[i].conj();
    np += p.coordinates[i].norm2();
    nq += q.coordinates[i].norm2();
  }
  const Rational denom = np * nq;
  const Rational gap = (denom - inner.norm2()) / denom;
  const double g = gap.to_double();
  return g <= 0.0 ? 0.0 : std::sqrt(g);
}

}  // namespace lics
