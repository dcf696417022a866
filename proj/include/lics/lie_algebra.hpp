#pragma once

#include "lics/matrix.hpp"
#include "lics/rational.hpp"

#include <cstddef>
#include <string>
#include <vector>

namespace lics {

/// One bracket [e_i, e_j] = sum_k c_k e_k with i < j (0-based indices).
struct BracketEntry {
  std::size_t i = 0;
  std::size_t j = 0;
  std::vector<std::pair<std::size_t, Rational>> terms;
};

struct JacobiViolation {
  std::size_t i, j, k;  // 0-based, i < j < k
  Vector residual;      // cyclic sum [[e_i,e_j],e_k] + [[e_j,e_k],e_i] + [[e_k,e_i],e_j]
};

enum class JacobiCheck { Strict, Skip };

/// Real Lie algebra given by rational structure constants c^k_{ij}, i < j.
/// The bracket extends C-bilinearly to the complexification.
class LieAlgebra {
 public:
  LieAlgebra() = default;

  /// Throws InvalidAlgebra on out-of-range or unordered indices, duplicate
  /// pairs, and (under JacobiCheck::Strict) on any Jacobi violation.
  LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets,
             JacobiCheck check = JacobiCheck::Strict);

  static LieAlgebra abelian(std::size_t dim);
  /// su(2) + R in the basis (T, S, A, B): [S,A] = 2B, [S,B] = -2A, [A,B] = 2S, T central.
  static LieAlgebra su2_plus_r();

  std::size_t dim() const noexcept { return names_.size(); }
  const std::vector<std::string>& basis_names() const noexcept { return names_; }

  /// Coefficient of e_k in [e_i, e_j], for any ordering of i, j.
  Rational constant(std::size_t i, std::size_t j, std::size_t k) const;

  /// The nonzero brackets with i < j, in (i, j) order.
  std::vector<BracketEntry> brackets() const;

  Vector bracket(const Vector& x, const Vector& y) const;

  bool is_abelian() const noexcept { return terms_.empty(); }

  friend bool operator==(const LieAlgebra& a, const LieAlgebra& b) {
    return a.names_.size() == b.names_.size() && a.terms_ == b.terms_;
  }

 private:
  struct Term {
    std::size_t i, j, k;
    Rational c;
    friend bool operator==(const Term&, const Term&) = default;
  };

  std::vector<std::string> names_;
  std::vector<Term> terms_;  // sorted by (i, j, k), nonzero c, i < j
};

std::vector<JacobiViolation> validate_jacobi(const LieAlgebra& g);

/// Endomorphism of the algebra; column j holds the image of e_j.
class AlgebraMap {
 public:
  explicit AlgebraMap(Matrix m);

  static AlgebraMap identity(std::size_t dim) { return AlgebraMap(Matrix::identity(dim)); }

  const Matrix& matrix() const noexcept { return m_; }
  std::size_t dim() const noexcept { return m_.rows(); }
  Vector apply(const Vector& v) const { return m_.apply(v); }

  friend AlgebraMap compose(const AlgebraMap& outer, const AlgebraMap& inner) {
    return AlgebraMap(outer.m_ * inner.m_);
  }

 private:
  Matrix m_;
};

/// Inverse map; throws NotAutomorphism when the matrix is singular.
AlgebraMap inverse(const AlgebraMap& phi);

/// True iff phi is invertible and phi[e_i,e_j] = [phi e_i, phi e_j] for all i < j.
bool is_automorphism(const LieAlgebra& g, const AlgebraMap& phi);

}  // namespace lics
