#include "lics/lie_algebra.hpp"

#include "lics/error.hpp"

#include <algorithm>
#include <map>
#include <string>
#include <tuple>

namespace lics {

LieAlgebra::LieAlgebra(std::vector<std::string> basis_names, const std::vector<BracketEntry>& brackets,
                       JacobiCheck check)
    : names_(std::move(basis_names)) {
  const std::size_t n = names_.size();
  std::map<std::pair<std::size_t, std::size_t>, std::map<std::size_t, Rational>> table;
  for (const auto& b : brackets) {
    if (b.i >= b.j || b.j >= n) {
      throw Error(Errc::InvalidAlgebra, "bracket indices (" + std::to_string(b.i + 1) + ", " +
                                            std::to_string(b.j + 1) + ") must satisfy 1 <= i < j <= dim");
    }
    auto [it, inserted] = table.try_emplace({b.i, b.j});
    if (!inserted) {
      throw Error(Errc::InvalidAlgebra, "duplicate bracket (" + std::to_string(b.i + 1) + ", " +
                                            std::to_string(b.j + 1) + ")");
    }
    for (const auto& [k, c] : b.terms) {
      if (k >= n) throw Error(Errc::InvalidAlgebra, "bracket target index out of range");
      it->second[k] += c;
    }
  }
  for (const auto& [ij, row] : table) {
    for (const auto& [k, c] : row) {
      if (!c.is_zero()) terms_.push_back({ij.first, ij.second, k, c});
    }
  }
  if (check == JacobiCheck::Strict) {
    const auto violations = validate_jacobi(*this);
    if (!violations.empty()) {
      const auto& v = violations.front();
      throw Error(Errc::InvalidAlgebra, "Jacobi identity fails on basis triple (" + std::to_string(v.i + 1) +
                                            ", " + std::to_string(v.j + 1) + ", " + std::to_string(v.k + 1) +
                                            ")");
    }
  }
}

LieAlgebra LieAlgebra::abelian(std::size_t dim) {
  std::vector<std::string> names;
  for (std::size_t i = 0; i < dim; ++i) names.push_back("e" + std::to_string(i + 1));
  return LieAlgebra(std::move(names), {});
}

LieAlgebra LieAlgebra::su2_plus_r() {
  // Indices: T = 0, S = 1, A = 2, B = 3.
  return LieAlgebra({"T", "S", "A", "B"},
                    {
                        {1, 2, {{3, Rational(2)}}},
                        {1, 3, {{2, Rational(-2)}}},
                        {2, 3, {{1, Rational(2)}}},
                    });
}

Rational LieAlgebra::constant(std::size_t i, std::size_t j, std::size_t k) const {
  if (i == j) return Rational(0);
  const bool flip = i > j;
  const auto key = flip ? std::tuple(j, i, k) : std::tuple(i, j, k);
  const auto it = std::lower_bound(terms_.begin(), terms_.end(), key, [](const Term& t, const auto& kk) {
    return std::tuple(t.i, t.j, t.k) < kk;
  });
  if (it == terms_.end() || std::tuple(it->i, it->j, it->k) != key) return Rational(0);
  return flip ? -it->c : it->c;
}

std::vector<BracketEntry> LieAlgebra::brackets() const {
  std::vector<BracketEntry> out;
  for (const auto& t : terms_) {
    if (out.empty() || out.back().i != t.i || out.back().j != t.j) out.push_back({t.i, t.j, {}});
    out.back().terms.emplace_back(t.k, t.c);
  }
  return out;
}

Vector LieAlgebra::bracket(const Vector& x, const Vector& y) const {
  const std::size_t n = dim();
  if (x.size() != n || y.size() != n) {
    throw Error(Errc::DimensionMismatch, "bracket arguments must have length " + std::to_string(n));
  }
  Vector out(n);
  std::size_t last_i = n, last_j = n;
  GaussScalar wedge;
  for (const auto& t : terms_) {
    if (t.i != last_i || t.j != last_j) {
      wedge = x[t.i] * y[t.j] - x[t.j] * y[t.i];
      last_i = t.i;
      last_j = t.j;
    }
    if (!wedge.is_zero()) out[t.k] += GaussScalar(t.c) * wedge;
  }
  return out;
}

std::vector<JacobiViolation> validate_jacobi(const LieAlgebra& g) {
  const std::size_t n = g.dim();
  std::vector<JacobiViolation> out;
  const auto e = [n](std::size_t i) { return unit_vector(n, i); };
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      for (std::size_t k = j + 1; k < n; ++k) {
        Vector s = g.bracket(g.bracket(e(i), e(j)), e(k)) + g.bracket(g.bracket(e(j), e(k)), e(i)) +
                   g.bracket(g.bracket(e(k), e(i)), e(j));
        if (!is_zero(s)) out.push_back({i, j, k, std::move(s)});
      }
    }
  }
  return out;
}

AlgebraMap::AlgebraMap(Matrix m) : m_(std::move(m)) {
  if (m_.rows() != m_.cols()) throw Error(Errc::DimensionMismatch, "algebra map must be square");
  if (!m_.is_real()) throw Error(Errc::DimensionMismatch, "algebra map must have real entries");
}

AlgebraMap inverse(const AlgebraMap& phi) {
  auto inv = inverse(phi.matrix());
  if (!inv) throw Error(Errc::NotAutomorphism, "singular algebra map");
  return AlgebraMap(std::move(*inv));
}

bool is_automorphism(const LieAlgebra& g, const AlgebraMap& phi) {
  const std::size_t n = g.dim();
  if (phi.dim() != n) return false;
  if (rank(phi.matrix()) != n) return false;
  for (std::size_t i = 0; i < n; ++i) {
    for (std::size_t j = i + 1; j < n; ++j) {
      const Vector lhs = phi.apply(g.bracket(unit_vector(n, i), unit_vector(n, j)));
      const Vector rhs = g.bracket(phi.matrix().column(i), phi.matrix().column(j));
      if (lhs != rhs) return false;
    }
  }
  return true;
}

}  // namespace lics
