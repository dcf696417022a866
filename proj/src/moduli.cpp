#include "lics/moduli.hpp"

#include "lics/error.hpp"

#include <string>

namespace lics {

namespace {

void require_ambient(const LieAlgebra& g, const Subspace& t) {
  if (t.ambient_dim() != g.dim()) {
    throw Error(Errc::DimensionMismatch, "subspace lives in C^" + std::to_string(t.ambient_dim()) +
                                             ", algebra has dimension " + std::to_string(g.dim()));
  }
}

void require_half_dim(const LieAlgebra& g, const Subspace& t) {
  require_ambient(g, t);
  if (2 * t.dim() != g.dim()) {
    throw Error(Errc::DimensionMismatch, "expected a " + std::to_string(g.dim() / 2) + "-dimensional subspace, got " +
                                             std::to_string(t.dim()));
  }
}

}  // namespace

bool involutive(const LieAlgebra& g, const Subspace& t) {
  require_ambient(g, t);
  if (g.is_abelian()) return true;
  const auto rows = t.basis().row_list();
  for (std::size_t a = 0; a < rows.size(); ++a) {
    for (std::size_t b = a + 1; b < rows.size(); ++b) {
      if (!t.contains(g.bracket(rows[a], rows[b]))) return false;
    }
  }
  return true;
}

VPoint::VPoint(LieAlgebra algebra, Subspace t) : algebra_(std::move(algebra)), t_(std::move(t)) {
  if (t_.ambient_dim() != algebra_.dim() || 2 * t_.dim() != algebra_.dim()) {
    throw Error(Errc::NotInV, "not a half-dimensional subspace");
  }
  if (!involutive(algebra_, t_)) throw Error(Errc::NotInV, "not involutive");
}

std::size_t holomorphic_foliation_dim(const VPoint& p) { return p.subspace().dim(); }

std::size_t stratum(const LieAlgebra& g, const Subspace& t) {
  require_half_dim(g, t);
  return intersect(t, conj_subspace(t)).dim();
}

Subspace real_form(const LieAlgebra& g, const Subspace& w) {
  require_ambient(g, w);
  if (conj_subspace(w) != w) throw Error(Errc::NotConjInvariant, "subspace is not conjugation invariant");
  // v + conj v = 2 Re v and i(v - conj v) = -2 Im v span the same real space
  // as the real and imaginary parts.
  Matrix parts(0, w.ambient_dim());
  for (std::size_t r = 0; r < w.dim(); ++r) {
    Vector re(w.ambient_dim()), im(w.ambient_dim());
    for (std::size_t c = 0; c < w.ambient_dim(); ++c) {
      re[c] = GaussScalar(w.basis()(r, c).re());
      im[c] = GaussScalar(w.basis()(r, c).im());
    }
    parts.append_row(re);
    parts.append_row(im);
  }
  Subspace out = span(parts, w.ambient_dim());
  if (out.dim() != w.dim()) throw Error(Errc::Internal, "real form has the wrong dimension");
  return out;
}

Classification classify(const LieAlgebra& g, const Subspace& t) {
  require_ambient(g, t);
  if (2 * t.dim() != g.dim()) throw Error(Errc::NotInV, "dimension is not half the algebra dimension");
  if (!involutive(g, t)) throw Error(Errc::NotInV, "not involutive");
  Classification c;
  c.n = t.dim();
  const Subspace w = intersect(t, conj_subspace(t));
  c.k = w.dim();
  c.cr_bundle = quotient_basis(t, w);
  c.cr_real_rank = c.cr_bundle.rows();
  if (c.k == 0) {
    c.kind = StructureKind::Complex;
    c.j = to_acs(g, t);
  } else {
    c.kind = StructureKind::CRFoliation;
    c.leaf_tangent = real_form(g, w);
  }
  return c;
}

CRDecomposition cr_decomposition(const LieAlgebra& g, const Subspace& t, const Classification& c) {
  if (c.kind != StructureKind::CRFoliation || !c.leaf_tangent) {
    throw Error(Errc::NotAFoliationPoint, "classification is a complex structure");
  }
  require_half_dim(g, t);
  CRDecomposition d;
  d.n = c.n;
  d.k = c.k;
  const std::size_t dim = g.dim();
  const Subspace& leaf = *c.leaf_tangent;
  const Subspace w = span(leaf.basis(), dim);  // leaf ⊗ C = T ∩ conj T

  Matrix e_real(0, dim);
  for (std::size_t r = 0; r < c.cr_bundle.rows(); ++r) {
    Vector re(dim), im(dim);
    for (std::size_t k = 0; k < dim; ++k) {
      re[k] = GaussScalar(c.cr_bundle(r, k).re());
      im[k] = GaussScalar(c.cr_bundle(r, k).im());
    }
    e_real.append_row(leaf.reduce(re));
    e_real.append_row(leaf.reduce(im));
  }
  d.e_real = e_real;

  const Subspace e_span = span(c.cr_bundle, dim);
  const Subspace both = sum(sum(w, e_span), conj_subspace(e_span));
  d.e_plus_ebar_dim = both.dim() - d.k;
  d.normal_dim = dim - d.k;
  d.direct_sum = d.e_plus_ebar_dim == 2 * (d.n - d.k);
  d.strict = d.e_plus_ebar_dim < d.normal_dim;

  const Subspace e_mod = sum(w, e_span);  // equals T
  d.e_involutive = true;
  for (std::size_t a = 0; a < c.cr_bundle.rows() && d.e_involutive; ++a) {
    for (std::size_t b = a + 1; b < c.cr_bundle.rows(); ++b) {
      if (!e_mod.contains(g.bracket(c.cr_bundle.row(a), c.cr_bundle.row(b)))) {
        d.e_involutive = false;
        break;
      }
    }
  }
  d.leaf_involutive = involutive(g, leaf);
  return d;
}

Subspace act(const LieAlgebra& g, const AlgebraMap& phi, const Subspace& t) {
  require_ambient(g, t);
  if (!is_automorphism(g, phi)) throw Error(Errc::NotAutomorphism, "map does not preserve the bracket");
  Matrix image(0, t.ambient_dim());
  for (std::size_t r = 0; r < t.dim(); ++r) image.append_row(phi.apply(t.basis().row(r)));
  return span(image, t.ambient_dim());
}

}  // namespace lics
