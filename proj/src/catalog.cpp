#include "lics/catalog.hpp"

#include "lics/error.hpp"

#include <cmath>
#include <string>

namespace lics {

Param Param::parse(std::string_view text) {
  const auto colon = text.find(':');
  Param out = colon == std::string_view::npos
                  ? affine(GaussScalar::parse(text))
                  : Param{GaussScalar::parse(text.substr(0, colon)), GaussScalar::parse(text.substr(colon + 1))};
  if (out.p.is_zero() && out.q.is_zero()) throw Error(Errc::Parse, "[0:0] is not a projective point");
  return out;
}

GaussScalar Param::affine_value() const {
  if (is_infinite()) throw Error(Errc::EvaluationError, "parameter at infinity where a finite value is needed");
  return -p / q;
}

std::string Param::to_string() const {
  if (q == GaussScalar(-1)) return p.to_string();
  return p.to_string() + ":" + q.to_string();
}

namespace {

// su(2) + R basis order.
constexpr std::size_t kT = 0, kS = 1, kA = 2, kB = 3;

Vector hopf_vector(GaussScalar t, GaussScalar s, GaussScalar a, GaussScalar b) {
  return {std::move(t), std::move(s), std::move(a), std::move(b)};
}

Matrix hopf_type_I_rows(const Param& tau) {
  // q·T + p·S is proportional to T - tau·S for tau = -p/q.
  Vector v1(4);
  v1[kT] = tau.q;
  v1[kS] = tau.p;
  return Matrix::from_rows({v1, hopf_vector(0, 0, 1, GaussScalar::i())});
}

Matrix hopf_type_II_rows(const GaussScalar& a, const GaussScalar& b) {
  if (a.is_zero()) throw Error(Errc::ZeroParameter, "hopf_type_II needs a != 0");
  const GaussScalar ai = a.inv();
  const GaussScalar i = GaussScalar::i();
  // a(A+iB) + a^-1(A-iB) and a(A+iB) - a^-1(A-iB)
  const GaussScalar plus_a = a + ai, plus_b = i * (a - ai);
  const GaussScalar minus_a = a - ai, minus_b = i * (a + ai);
  return Matrix::from_rows({hopf_vector(0, GaussScalar(2) * i, plus_a, plus_b),
                            hopf_vector(b, 0, minus_a, minus_b)});
}

std::size_t torus_n(const std::vector<Param>& params) {
  if (params.size() == 1) return 1;
  const auto n = static_cast<std::size_t>(std::llround(std::sqrt(params.size() / 2.0)));
  if (n == 0 || 2 * n * n != params.size()) {
    throw Error(Errc::EvaluationError, "torus takes one projective point [p:q] or the 2n^2 entries of an n-plane");
  }
  return n;
}

Matrix torus_rows(const std::vector<Param>& params) {
  const std::size_t n = torus_n(params);
  if (params.size() == 1) return Matrix::from_rows({{params[0].p, params[0].q}});
  Matrix rows(n, 2 * n);
  for (std::size_t r = 0; r < n; ++r) {
    for (std::size_t c = 0; c < 2 * n; ++c) rows(r, c) = params[r * 2 * n + c].affine_value();
  }
  return rows;
}

void require_arity(const std::vector<Param>& params, std::size_t arity, const char* name) {
  if (params.size() != arity) {
    throw Error(Errc::EvaluationError, std::string(name) + " takes " + std::to_string(arity) + " parameter(s), got " +
                                           std::to_string(params.size()));
  }
}

std::vector<ParamFamily> build_catalog() {
  std::vector<ParamFamily> out;
  out.push_back({"torus",
                 "abelian R^2n; one projective point [p:q] (n = 1, tau = -p/q) or the 2n^2 entries of an "
                 "n-plane given row by row",
                 0, [](const std::vector<Param>& ps) { return LieAlgebra::abelian(2 * torus_n(ps)); },
                 torus_rows});
  out.push_back({"hopf_type_I", "su(2)+R; one projective tau, <T - tau S, A + iB>; complex iff Im tau != 0", 1,
                 [](const std::vector<Param>&) { return LieAlgebra::su2_plus_r(); },
                 [](const std::vector<Param>& ps) {
                   require_arity(ps, 1, "hopf_type_I");
                   return hopf_type_I_rows(ps[0]);
                 }});
  out.push_back({"hopf_type_I_conj",
                 "su(2)+R; one projective tau, <T - conj(tau) S, A - iB>; complex iff Im tau != 0", 1,
                 [](const std::vector<Param>&) { return LieAlgebra::su2_plus_r(); },
                 [](const std::vector<Param>& ps) {
                   require_arity(ps, 1, "hopf_type_I_conj");
                   return hopf_type_I_rows(ps[0]).conj();
                 }});
  out.push_back({"hopf_type_II",
                 "su(2)+R; affine a != 0 and b, <2iS + a(A+iB) + a^-1(A-iB), bT + a(A+iB) - a^-1(A-iB)>; "
                 "complex iff Re b != 0",
                 2, [](const std::vector<Param>&) { return LieAlgebra::su2_plus_r(); },
                 [](const std::vector<Param>& ps) {
                   require_arity(ps, 2, "hopf_type_II");
                   return hopf_type_II_rows(ps[0].affine_value(), ps[1].affine_value());
                 }});
  return out;
}

}  // namespace

VPoint torus_point(std::size_t n, const Subspace& plane) {
  if (plane.ambient_dim() != 2 * n || plane.dim() != n) {
    throw Error(Errc::DimensionMismatch, "torus point needs an n-plane in C^2n");
  }
  return VPoint(LieAlgebra::abelian(2 * n), plane);
}

Subspace hopf_type_I(const Param& tau) { return span(hopf_type_I_rows(tau), 4); }

Subspace hopf_type_I_conj(const Param& tau) { return span(hopf_type_I_rows(tau).conj(), 4); }

Subspace hopf_type_II(const GaussScalar& a, const GaussScalar& b) { return span(hopf_type_II_rows(a, b), 4); }

const std::vector<ParamFamily>& list_catalog() {
  static const std::vector<ParamFamily> catalog = build_catalog();
  return catalog;
}

const ParamFamily& find_family(std::string_view name) {
  for (const auto& f : list_catalog()) {
    if (f.name == name) return f;
  }
  throw Error(Errc::UnknownFamily, "unknown family '" + std::string(name) + "'");
}

Subspace evaluate_family(const ParamFamily& family, const std::vector<Param>& params) {
  Matrix rows;
  LieAlgebra g;
  try {
    g = family.algebra(params);
    rows = family.evaluate(params);
  } catch (const Error& e) {
    if (e.code() == Errc::EvaluationError) throw;
    throw Error(Errc::EvaluationError, e.what());
  }
  Subspace t = span(rows, g.dim());
  if (2 * t.dim() != g.dim()) {
    throw Error(Errc::EvaluationError, family.name + " degenerates: rank " + std::to_string(t.dim()) + " < " +
                                           std::to_string(g.dim() / 2));
  }
  return t;
}

}  // namespace lics
