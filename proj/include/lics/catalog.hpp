#pragma once

#include "lics/lie_algebra.hpp"
#include "lics/moduli.hpp"
#include "lics/subspace.hpp"

#include <functional>
#include <string>
#include <string_view>
#include <vector>

namespace lics {

/// Projective parameter [p : q]. An affine value z is the point [z : -1], so
/// [1 : 0] is the point at infinity.
struct Param {
  GaussScalar p;
  GaussScalar q;

  static Param affine(GaussScalar z) { return {std::move(z), GaussScalar(-1)}; }
  static Param infinity() { return {GaussScalar(1), GaussScalar(0)}; }

  /// "z" for an affine value, "p:q" for a projective pair. Rejects [0:0].
  static Param parse(std::string_view text);

  bool is_infinite() const noexcept { return q.is_zero(); }
  /// -p/q; throws EvaluationError at infinity.
  GaussScalar affine_value() const;
  std::string to_string() const;

  friend bool operator==(const Param&, const Param&) = default;
};

/// A named family of subspaces of a complexified algebra. `evaluate` returns
/// spanning rows that may be rank deficient at degenerate parameters.
struct ParamFamily {
  std::string name;
  std::string notes;
  std::size_t arity = 0;  // 0: variable length (torus)
  std::function<LieAlgebra(const std::vector<Param>&)> algebra;
  std::function<Matrix(const std::vector<Param>&)> evaluate;
};

/// Wraps an n-plane of C^2n as a point of V for the abelian algebra R^2n.
VPoint torus_point(std::size_t n, const Subspace& plane);

/// <T - tau S, A + iB> in su(2) + R; tau = [1:0] gives <S, A + iB>.
Subspace hopf_type_I(const Param& tau);
/// Conjugate branch: conj(hopf_type_I(tau)) = <T - conj(tau) S, A - iB>.
Subspace hopf_type_I_conj(const Param& tau);
/// <2iS + a(A+iB) + a^-1(A-iB), bT + a(A+iB) - a^-1(A-iB)>, a != 0.
/// Complex structure iff Re b != 0; as a -> 0 it tends to the
/// conjugate-branch point tau = conj(-2i/b).
Subspace hopf_type_II(const GaussScalar& a, const GaussScalar& b);

const std::vector<ParamFamily>& list_catalog();
/// Throws UnknownFamily.
const ParamFamily& find_family(std::string_view name);

/// Evaluates a family into a subspace; throws EvaluationError when the
/// spanning rows have rank below n or the parameters are inadmissible.
Subspace evaluate_family(const ParamFamily& family, const std::vector<Param>& params);

}  // namespace lics
