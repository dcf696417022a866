#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "lics/catalog.hpp"
#include "lics/error.hpp"
#include "lics/moduli.hpp"
#include "oracles.hpp"

using namespace lics;

namespace {

const GaussScalar I = GaussScalar::i();

Subspace sp(std::vector<Vector> rows, std::size_t n) { return span(rows, n); }

Errc code_of(auto&& f) {
  try {
    f();
  } catch (const Error& err) {
    return err.code();
  }
  FAIL("expected an Error");
  return Errc::Internal;
}

std::vector<Param> admissible_params(const ParamFamily& f, oracle::Rng& rng) {
  if (f.name == "torus") {
    const std::size_t n = 1 + rng.engine() % 3;
    if (n == 1) return {Param{rng.gauss(), rng.nonzero_gauss()}};
    std::vector<Param> ps;
    for (std::size_t i = 0; i < 2 * n * n; ++i) ps.push_back(Param::affine(rng.gauss()));
    return ps;
  }
  if (f.name == "hopf_type_II") return {Param::affine(rng.nonzero_gauss()), Param::affine(rng.gauss())};
  if (rng.engine() % 5 == 0) return {Param::infinity()};
  return {Param::affine(rng.gauss())};
}

}  // namespace

TEST_CASE("Param grammar") {
  CHECK(Param::parse("2+i") == Param::affine(GaussScalar(2, 1)));
  CHECK(Param::parse("1:0").is_infinite());
  CHECK(Param::parse("1/2:-1").affine_value() == GaussScalar(Rational(1, 2)));
  CHECK(Param::parse("i:2").affine_value() == GaussScalar(0, Rational(-1, 2)));
  CHECK(Param::affine(I).to_string() == "i");
  CHECK(Param::infinity().to_string() == "1:0");
  CHECK(code_of([] { (void)Param::parse("0:0"); }) == Errc::Parse);
  CHECK(code_of([] { (void)Param::infinity().affine_value(); }) == Errc::EvaluationError);
}

TEST_CASE("torus_point examples") {
  const VPoint p1 = torus_point(1, sp({{GaussScalar(3, 2), -1}}, 2));
  CHECK(classify(p1.algebra(), p1.subspace()).kind == StructureKind::Complex);

  const VPoint p2 = torus_point(2, sp({{1, 0, 0, 0}, {0, 1, 0, 0}}, 4));
  CHECK(stratum(p2.algebra(), p2.subspace()) == 2);
  CHECK(p2.subspace().is_real());

  const VPoint p3 = torus_point(2, sp({{1, I, 0, 0}, {0, 0, 1, 0}}, 4));
  const Classification c3 = classify(p3.algebra(), p3.subspace());
  CHECK(c3.k == 1);
  CHECK(c3.cr_real_rank == 1);

  CHECK(code_of([] { (void)torus_point(2, sp({{1, 0, 0, 0}}, 4)); }) == Errc::DimensionMismatch);
}

TEST_CASE("hopf_type_I examples") {
  const LieAlgebra g = LieAlgebra::su2_plus_r();
  const Subspace ti = hopf_type_I(Param::affine(I));
  CHECK(ti == sp({{1, -I, 0, 0}, {0, 0, 1, I}}, 4));
  CHECK(classify(g, ti).kind == StructureKind::Complex);

  const Classification c1 = classify(g, hopf_type_I(Param::affine(1)));
  CHECK(c1.kind == StructureKind::CRFoliation);
  CHECK(c1.k == 1);

  const Subspace inf = hopf_type_I(Param::infinity());
  CHECK(inf == sp({{0, 1, 0, 0}, {0, 0, 1, I}}, 4));
  CHECK(involutive(g, inf));
  CHECK(stratum(g, inf) == 1);
}

TEST_CASE("hopf_type_II examples") {
  const LieAlgebra g = LieAlgebra::su2_plus_r();
  const Subspace t11 = hopf_type_II(1, 1);
  CHECK(involutive(g, t11));
  CHECK(classify(g, t11).kind == StructureKind::Complex);

  const Subspace t1i = hopf_type_II(1, I);
  CHECK(involutive(g, t1i));
  CHECK(stratum(g, t1i) >= 1);

  const Subspace small = hopf_type_II(Rational(1, 10), 2);
  CHECK(classify(g, small).kind == StructureKind::Complex);

  CHECK(code_of([] { (void)hopf_type_II(0, 1); }) == Errc::ZeroParameter);
}

TEST_CASE("misplacing the factor i breaks type (II) involutivity") {
  // [v1, v2] = -8S + 4a(A+iB) + 4a^-1(A-iB) for that basis, which
  // leaves the span whenever b != 0. The catalog family moves the factor i
  // from the second vector onto the S term.
  const LieAlgebra g = LieAlgebra::su2_plus_r();
  oracle::Rng rng(41);
  for (int t = 0; t < 10; ++t) {
    const GaussScalar a = rng.nonzero_gauss(), b = rng.nonzero_gauss();
    const Matrix naive = oracle::hopf_type_II_misplaced_i(a, b);
    const Vector bracket = g.bracket(naive.row(0), naive.row(1));
    const GaussScalar ai = a.inv();
    CHECK(bracket == Vector{0, -8, GaussScalar(4) * (a + ai), GaussScalar(4) * I * (a - ai)});
    CHECK_FALSE(involutive(g, span(naive, 4)));
    CHECK(involutive(g, hopf_type_II(a, b)));
  }
}

TEST_CASE("list_catalog") {
  const auto& cat = list_catalog();
  std::vector<std::string> names;
  for (const auto& f : cat) names.push_back(f.name);
  CHECK(names == std::vector<std::string>{"torus", "hopf_type_I", "hopf_type_I_conj", "hopf_type_II"});
  CHECK(find_family("hopf_type_I").arity == 1);
  CHECK(find_family("hopf_type_II").arity == 2);
  CHECK(find_family("torus").notes.find("n-plane") != std::string::npos);
  CHECK(code_of([] { (void)find_family("klein_bottle"); }) == Errc::UnknownFamily);
}

TEST_CASE("every family evaluates into V at random admissible parameters") {
  oracle::Rng rng(42);
  for (const auto& f : list_catalog()) {
    int evaluated = 0;
    for (int t = 0; t < 25; ++t) {
      const auto params = admissible_params(f, rng);
      const LieAlgebra g = f.algebra(params);
      Subspace s;
      try {
        s = evaluate_family(f, params);
      } catch (const Error& e) {
        // random torus planes may be rank deficient
        CHECK(e.code() == Errc::EvaluationError);
        continue;
      }
      CHECK(involutive(g, s));
      CHECK(2 * s.dim() == g.dim());
      ++evaluated;
    }
    CAPTURE(f.name);
    CHECK(evaluated >= 20);
  }
  CHECK(code_of([] { (void)evaluate_family(find_family("torus"), {Param::affine(0), Param::affine(0)}); }) ==
        Errc::EvaluationError);
  CHECK(code_of([] { (void)evaluate_family(find_family("torus"), {Param::affine(1), Param::affine(1), Param::affine(1)}); }) ==
        Errc::EvaluationError);
  CHECK(code_of([] { (void)evaluate_family(find_family("hopf_type_II"), {Param::affine(0), Param::affine(1)}); }) ==
        Errc::EvaluationError);
  CHECK(code_of([] { (void)evaluate_family(find_family("hopf_type_I"), {}); }) == Errc::EvaluationError);
}

TEST_CASE("type (I) invariants") {
  const LieAlgebra g = LieAlgebra::su2_plus_r();
  oracle::Rng rng(43);
  for (int t = 0; t < 40; ++t) {
    const GaussScalar tau = t % 3 == 0 ? GaussScalar(rng.rational()) : rng.gauss();
    const Param p = Param::affine(tau);
    CHECK(hopf_type_I_conj(p) == conj_subspace(hopf_type_I(p)));
    CHECK(hopf_type_I(Param::affine(tau.conj())) != conj_subspace(hopf_type_I(p)));  // different branches
    const std::size_t k = stratum(g, hopf_type_I(p));
    CHECK(k == (tau.im().is_zero() ? 1u : 0u));
    if (tau.is_real()) {
      const Classification c = classify(g, hopf_type_I(p));
      CHECK(*c.leaf_tangent == span(std::vector<Vector>{{1, -tau, 0, 0}}, 4));
    }
  }
}

TEST_CASE("type (II) invariants") {
  const LieAlgebra g = LieAlgebra::su2_plus_r();
  Matrix flip = Matrix::identity(4);  // fixes T, S; negates A, B
  flip(2, 2) = -1;
  flip(3, 3) = -1;
  const AlgebraMap phi(flip);
  REQUIRE(is_automorphism(g, phi));
  oracle::Rng rng(44);
  for (int t = 0; t < 30; ++t) {
    const GaussScalar a = rng.nonzero_gauss();
    GaussScalar b = rng.gauss();
    if (t % 5 == 0) b = GaussScalar(0, rng.rational());
    const Subspace s = hopf_type_II(a, b);
    CHECK(involutive(g, s));
    CHECK(act(g, phi, s) == hopf_type_II(-a, b));
    const std::size_t k = stratum(g, s);
    CHECK((k == 0) == !b.re().is_zero());
  }
}
