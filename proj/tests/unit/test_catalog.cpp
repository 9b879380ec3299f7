#include <doctest.h>

#include "pistar/catalog.hpp"

using namespace pistar;

namespace {

Subspace span_of(const StarAlgebra& a, std::initializer_list<const char*> elems) {
  Subspace s(a.dim());
  for (auto e : elems) s.insert(parse_element(a, e));
  return s;
}

}  // namespace

TEST_CASE("reflection and symplectic involutions") {
  StructureAlgebra m4 = full_matrix_algebra(4);
  LinearMap theta = reflection_involution(4);
  CHECK(theta[3] == Vector::unit(16, 3));  // e14 is on the anti-diagonal
  LinearMap sigma = symplectic_involution(2);
  CHECK(sigma[0] == Vector::unit(4, 3));      // e11 -> e22
  CHECK(sigma[1] == Vector::unit(4, 1, -1));  // e12 -> -e12
  CHECK_THROWS_AS(symplectic_involution(3), Error);
  CHECK_THROWS_AS(matrix_algebra(5, MatrixInvolution::symplectic), Error);
  for (int n = 2; n <= 6; n += 2) {
    StarAlgebra t = matrix_algebra(n, MatrixInvolution::reflection);
    StarAlgebra s = matrix_algebra(n, MatrixInvolution::symplectic);
    CHECK(t.minus().dim() == static_cast<std::size_t>(n * (n - 1) / 2));
    CHECK(s.minus().dim() == static_cast<std::size_t>(n * (n + 1) / 2));
  }
  CHECK(check_involution(m4, theta).ok());
}

TEST_CASE("transpose and reflection on M2 are both of transpose type") {
  // Over the rationals they are not *-isomorphic (the antidiagonal form is
  // not congruent to the identity); what is checked is the type.
  StarAlgebra t = matrix_algebra(2, MatrixInvolution::transpose);
  StarAlgebra r = matrix_algebra(2, MatrixInvolution::reflection);
  CHECK(t.plus().dim() == r.plus().dim());
  CHECK(t.minus().dim() == r.minus().dim());
  // conjugation by the antidiagonal permutation is an automorphism that does
  // not intertwine the two
  LinearMap rev{Vector::unit(4, 3), Vector::unit(4, 2), Vector::unit(4, 1), Vector::unit(4, 0)};
  IsomorphismReport rep = check_star_isomorphism(t, r, rev);
  CHECK(rep.multiplicative);
  CHECK_FALSE(rep.star_compatible);
}

TEST_CASE("named upper triangular subalgebras") {
  const std::pair<const char*, std::size_t> dims[] = {{"N", 14}, {"M", 22}, {"P", 8}, {"Q", 8}, {"R", 14}};
  for (auto [name, d] : dims) {
    NamedSubalgebra s = ut_named(name);
    CHECK(s.basis.size() == d);
    // closure under both involutions of the ambient size; throws otherwise
    CHECK_NOTHROW(ut_star(name, MatrixInvolution::reflection, name));
    CHECK_NOTHROW(ut_star(name, MatrixInvolution::symplectic, name));
  }
  CHECK_THROWS_AS(ut_named("X"), Error);
  // the upper triangular 2x2 matrices are not closed under the transpose
  std::vector<Vector> ut2{parse_matrix_units(2, "e11"), parse_matrix_units(2, "e12"), parse_matrix_units(2, "e22")};
  CHECK_THROWS_AS(matrix_star_algebra(2, {"e11", "e12", "e22"}, ut2, MatrixInvolution::transpose, "UT2"), Error);
  CHECK_NOTHROW(matrix_star_algebra(2, {"e11", "e12", "e22"}, ut2, MatrixInvolution::reflection, "UT2"));
}

TEST_CASE("the fourteen algebras") {
  const std::size_t expected[] = {4, 4, 0, 0, 14, 14, 22, 22, 8, 8, 8, 8, 14, 14};
  for (int i = 1; i <= 14; ++i) {
    StarAlgebra a = catalog_algebra(i, 2);
    INFO("A" << i);
    CHECK(a.name() == "A" + std::to_string(i));
    if (i == 3 || i == 4)
      CHECK(a.dim() == 8u);
    else
      CHECK(a.dim() == expected[i - 1]);
    CHECK_FALSE(a.alg().associativity_counterexample());
    CHECK(a.alg().unit_ok());
    CHECK(check_involution(a.alg(), a.involution()).ok());
  }
  CHECK(catalog_algebra(3, 1).dim() == 4);
  CHECK(catalog_algebra(1).plus().dim() == 3);
  StarAlgebra a5 = catalog_algebra(5);
  Vector e16 = parse_element(a5, "e16");
  CHECK(a5.involve(e16) == e16);
  CHECK_THROWS_AS(catalog_algebra(15), Error);
  CHECK_THROWS_AS(catalog_algebra(3, 0), Error);
  CHECK(catalog_index("A7") == 7);
  CHECK(catalog_index("A15") == 0);
  CHECK(catalog_index("N") == 0);
}

TEST_CASE("centers of A5 through A14") {
  StarAlgebra a5 = catalog_algebra(5);
  CHECK(a5.center() == span_of(a5, {"e11+e22+e33+e44+e55+e66", "e16"}));
  CHECK(catalog_algebra(6).center().dim() == 2);
  for (int i : {7, 8}) {
    StarAlgebra a = catalog_algebra(i);
    CHECK(a.center() == span_of(a, {"e18"}));
  }
  for (int i : {9, 10}) {
    StarAlgebra a = catalog_algebra(i);
    CHECK(a.center() == span_of(a, {"e11+e22+e33+e44", "e14"}));
  }
  for (int i : {13, 14}) {
    StarAlgebra a = catalog_algebra(i);
    CHECK(a.center() == span_of(a, {"e16"}));
  }
}

TEST_CASE("property: centers are commutative subalgebras") {
  for (int i = 1; i <= 14; ++i) {
    StarAlgebra a = catalog_algebra(i, 2);
    const auto& z = a.center().rows();
    for (const auto& x : z)
      for (const auto& y : z) {
        CHECK(a.center().contains(a.multiply(x, y)));
        CHECK(a.multiply(x, y) == a.multiply(y, x));
      }
  }
}

TEST_CASE("matrix unit parsing") {
  CHECK(parse_matrix_units(2, "e12 - 2 e21") == Vector::dense({0, 1, -2, 0}));
  CHECK(parse_matrix_units(2, "-1/2 e11") == Vector::unit(4, 0, Rational(-1, 2)));
  CHECK(parse_matrix_units(10, "e(10,3)") == Vector::unit(100, 92));
  CHECK_THROWS_AS(parse_matrix_units(2, "e33"), ParseError);
  CHECK_THROWS_AS(parse_matrix_units(2, "f12"), ParseError);
  CHECK_THROWS_AS(parse_matrix_units(2, "e12 +"), ParseError);
  StarAlgebra a5 = catalog_algebra(5);
  CHECK_THROWS_AS(parse_element(a5, "e21"), Error);  // not in N
  CHECK_THROWS_AS(parse_element(a5, "e11"), Error);  // only e11+e66 is
  CHECK(parse_element(a5, "0").is_zero());
}

TEST_CASE("Wedderburn data") {
  WedderburnData w5 = wedderburn_data(5);
  CHECK(w5.components.size() == 3);
  CHECK(w5.radical.dim() == 11);
  WedderburnData w9 = wedderburn_data(9);
  REQUIRE(w9.components.size() == 2);
  CHECK(w9.components[0].space.dim() == 1);
  CHECK(w9.components[1].space.dim() == 2);
  CHECK(w9.components[1].e2_minus);
  WedderburnData w1 = wedderburn_data(1);
  CHECK(w1.components.size() == 1);
  CHECK(w1.radical.is_zero());
  CHECK(w1.components[0].space.dim() == 4);
  for (int i : {2, 6, 7, 8, 10, 11, 12, 13, 14}) CHECK_NOTHROW(wedderburn_data(i));
  CHECK_THROWS_AS(wedderburn_data(3), Error);

  StarAlgebra a1 = catalog_algebra(1);
  // the whole algebra is not nilpotent
  CHECK_THROWS_AS(make_wedderburn(a1, {}, Subspace::whole(4)), Error);
  // F e12 is not *-closed
  Component bad{"Fe12", span_of(a1, {"e12"}), {}, std::nullopt};
  CHECK_THROWS_AS(make_wedderburn(a1, {bad}, Subspace(4)), Error);
  // components must cover the algebra together with J
  Component diag{"F1", span_of(a1, {"e11+e22"}), {}, std::nullopt};
  CHECK_THROWS_AS(make_wedderburn(a1, {diag}, Subspace(4)), Error);
  // overlapping components
  StarAlgebra a5 = catalog_algebra(5);
  Component c1{"c1", span_of(a5, {"e11+e66"}), {}, std::nullopt};
  CHECK_THROWS_AS(make_wedderburn(a5, {c1, c1}, w5.radical), Error);
}

TEST_CASE("simple superalgebras") {
  SuperAlgebra m11 = graded_matrix(1, 1);
  int even = 0;
  for (int p : m11.parity) even += p == 0;
  CHECK(even == 2);
  CHECK(m11.parity.size() == 4);
  SuperStarAlgebra trp = trp_super(1);
  CHECK(trp.superinv[0] == Vector::unit(4, 3));      // e11 -> e22
  CHECK(trp.superinv[1] == Vector::unit(4, 1, -1));  // e12 -> -e12
  SuperAlgebra q1 = queer(1);
  CHECK(q1.alg.dim() == 2);
  CHECK(q1.parity == std::vector<int>{0, 1});
  CHECK(q1.alg.product(1, 1) == Vector::unit(2, 0));  // c^2 = 1
  CHECK_NOTHROW(check_grading(q1));
  for (auto s : {trp_super(1), trp_super(2), osp_super(0, 2), osp_super(1, 2), osp_super(2, 4),
                 mkl_exchange(1, 1), mkl_exchange(2, 1), qn_exchange(1), qn_exchange(2)}) {
    INFO(s.name);
    CHECK_FALSE(s.alg.associativity_counterexample());
    CHECK(check_superinvolution(s).ok());
  }
  CHECK_THROWS_AS(osp_super(1, 3), Error);
  CHECK_THROWS_AS(trp_super(0), Error);
  CHECK_THROWS_AS(simple_super({SimpleSuperKind::Kind::exchange_sum, 0, 0, std::nullopt}), Error);
  CHECK(simple_super({SimpleSuperKind::Kind::trp, 1, 0, std::nullopt}).alg.dim() == 4);
}

TEST_CASE("catalog lookup by name") {
  for (const auto& name : catalog_names()) {
    if (name.find('(') != std::string::npos) continue;
    CHECK_NOTHROW(catalog_lookup(name, 2));
  }
  CHECK(std::get<StarAlgebra>(catalog_lookup("M(3,theta)")).dim() == 9);
  CHECK(std::get<SuperStarAlgebra>(catalog_lookup("E(3)")).alg.dim() == 8);
  CHECK(std::get<SuperStarAlgebra>(catalog_lookup("osp(1,2)")).alg.dim() == 9);
  StarAlgebra ff = std::get<StarAlgebra>(catalog_lookup("FplusF"));
  CHECK(ff.plus().dim() == 1);
  CHECK(ff.minus().dim() == 1);
  CHECK_THROWS_AS(catalog_lookup("bogus"), Error);
  CHECK_THROWS_AS(catalog_lookup("M(13,t)"), Error);
}
