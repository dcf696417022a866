#pragma once

#include "lics/lie_algebra.hpp"
#include "lics/subspace.hpp"

#include <cstddef>
#include <vector>

namespace lics {

/// Plücker coordinates of an n-plane in C^2n: the n×n minors of a basis
/// matrix, indexed by n-subsets of columns in lexicographic order and scaled
/// so the first nonzero coordinate is 1.
struct PluckerVector {
  std::size_t n = 0;
  std::size_t ambient_dim = 0;
  std::vector<GaussScalar> coordinates;

  friend bool operator==(const PluckerVector&, const PluckerVector&) = default;
};

/// All r-subsets of {0, ..., m-1} in lexicographic order.
std::vector<std::vector<std::size_t>> subsets(std::size_t m, std::size_t r);

/// Minors of the rows×rows submatrices of `m` (rows <= cols), in
/// lexicographic column-subset order. Unnormalized.
std::vector<GaussScalar> maximal_minors(const Matrix& m);

/// Throws DimensionMismatch unless dim T = ambient / 2 >= 1.
PluckerVector plucker(const Subspace& t);

/// Wedge criterion: [v_i, v_j] ∧ v_1 ∧ ... ∧ v_n = 0 for all i < j.
bool involutive_plucker(const LieAlgebra& g, const Subspace& t);

/// Fubini–Study distance sqrt(1 - |<p,q>|^2 / (|p|^2 |q|^2)). The ratio is
/// formed exactly and only the final square root is taken in binary64.
double fubini_study(const PluckerVector& p, const PluckerVector& q);

}  // namespace lics
