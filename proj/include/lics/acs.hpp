#pragma once

#include "lics/lie_algebra.hpp"
#include "lics/subspace.hpp"

#include <cstdint>

namespace lics {

/// Real endomorphism J of the algebra with J·J = -Id, checked exactly.
class AlmostComplexStructure {
 public:
  /// Throws NotAlmostComplex unless j is a real dim×dim matrix squaring to -Id.
  AlmostComplexStructure(LieAlgebra algebra, Matrix j);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Matrix& matrix() const noexcept { return j_; }
  Vector apply(const Vector& v) const { return j_.apply(v); }

  friend bool operator==(const AlmostComplexStructure& a, const AlmostComplexStructure& b) {
    return a.algebra_ == b.algebra_ && a.j_ == b.j_;
  }

 private:
  LieAlgebra algebra_;
  Matrix j_;
};

/// The -i eigenspace of J on the complexification: span{v + i·Jv}.
Subspace from_acs(const AlmostComplexStructure& j);

/// The structure acting by -i on T and by +i on conj(T). Requires dim T = n
/// and T ∩ conj(T) = 0 (else DegeneratePoint).
AlmostComplexStructure to_acs(const LieAlgebra& g, const Subspace& t);

/// N(e_x, e_y) = [Je_x, Je_y] - [e_x, e_y] - J[Je_x, e_y] - J[e_x, Je_y].
Vector nijenhuis(const AlmostComplexStructure& j, std::size_t x, std::size_t y);

/// Nijenhuis tensor vanishes on every basis pair.
bool nijenhuis_vanishes(const AlmostComplexStructure& j);

/// Block-standard structure J0 (e_{2k} -> e_{2k+1} -> -e_{2k}).
Matrix standard_complex_structure(std::size_t dim);

/// P·J0·P^-1 for a seeded random invertible rational P. Deterministic in the
/// seed across platforms.
AlmostComplexStructure sample_acs(const LieAlgebra& g, std::uint64_t seed);

}  // namespace lics
