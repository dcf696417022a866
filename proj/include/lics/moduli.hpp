#pragma once

#include "lics/acs.hpp"
#include "lics/lie_algebra.hpp"
#include "lics/subspace.hpp"

#include <optional>

namespace lics {

/// [v_i, v_j] ∈ T for every pair of basis vectors of T. Any dim T is allowed.
bool involutive(const LieAlgebra& g, const Subspace& t);

/// A point of the variety V: an involutive half-dimensional subspace of the
/// complexified algebra.
class VPoint {
 public:
  /// Throws NotInV unless dim T = dim g / 2 and T is involutive.
  VPoint(LieAlgebra algebra, Subspace t);

  const LieAlgebra& algebra() const noexcept { return algebra_; }
  const Subspace& subspace() const noexcept { return t_; }

 private:
  LieAlgebra algebra_;
  Subspace t_;
};

/// Complex dimension of the holomorphic foliation T induces on G_C; equals dim T.
std::size_t holomorphic_foliation_dim(const VPoint& p);

/// k = dim_C(T ∩ conj T). Requires dim T = ambient / 2.
std::size_t stratum(const LieAlgebra& g, const Subspace& t);

/// Real subspace R with R ⊗ C = W, for conjugation-invariant W.
Subspace real_form(const LieAlgebra& g, const Subspace& w);

enum class StructureKind { Complex, CRFoliation };

struct Classification {
  StructureKind kind = StructureKind::Complex;
  std::size_t n = 0;  // dim T
  std::size_t k = 0;  // dim (T ∩ conj T)
  std::optional<AlmostComplexStructure> j;  // Complex only
  std::optional<Subspace> leaf_tangent;     // CRFoliation only: real, dim k
  Matrix cr_bundle;                         // representatives of E = T / (T ∩ conj T)
  std::size_t cr_real_rank = 0;             // dim E = n - k
};

/// Complex structure when T ∩ conj T = 0, transversely CR foliation
/// otherwise. Throws NotInV when T is not an involutive n-plane.
Classification classify(const LieAlgebra& g, const Subspace& t);

struct CRDecomposition {
  std::size_t n = 0;
  std::size_t k = 0;
  Matrix e_real;                  // real spanning set of E_R, reduced modulo the leaf tangent
  std::size_t e_plus_ebar_dim = 0;  // dim (E ⊕ conj E) in the normal space
  std::size_t normal_dim = 0;       // dim_C (N ⊗ C) = 2n - k
  bool direct_sum = false;          // E ∩ conj E = 0 modulo T ∩ conj T
  bool strict = false;              // E ⊕ conj E ⊊ N ⊗ C
  bool e_involutive = false;        // [E, E] ⊆ E modulo T ∩ conj T
  bool leaf_involutive = false;     // Frobenius hypothesis on the real leaf tangent
};

/// Verifies the transverse CR data of a foliation point. Throws
/// NotAFoliationPoint for complex-structure classifications.
CRDecomposition cr_decomposition(const LieAlgebra& g, const Subspace& t, const Classification& c);

/// Pushforward span{phi(v)}; throws NotAutomorphism unless phi preserves brackets.
Subspace act(const LieAlgebra& g, const AlgebraMap& phi, const Subspace& t);

}  // namespace lics
