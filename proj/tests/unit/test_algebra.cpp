#include <doctest.h>

#include <random>

#include "pistar/catalog.hpp"
#include "pistar/grassmann.hpp"

using namespace pistar;

namespace {

Vector unit_of(int n, int i, int j) { return Vector::unit(static_cast<std::size_t>(n) * n, (i - 1) * n + (j - 1)); }

}  // namespace

TEST_CASE("matrix units multiply by hand") {
  StructureAlgebra m2 = full_matrix_algebra(2);
  CHECK(m2.dim() == 4);
  CHECK(m2.multiply(unit_of(2, 1, 2), unit_of(2, 2, 1)) == unit_of(2, 1, 1));
  CHECK(m2.multiply(unit_of(2, 2, 1), unit_of(2, 2, 1)).is_zero());
  CHECK_FALSE(m2.associativity_counterexample());
  CHECK(m2.unit_ok());
  CHECK(center(m2).dim() == 1);
  CHECK(center(full_matrix_algebra(3)).dim() == 1);
}

TEST_CASE("a non-associative table is caught") {
  // basis a, b with a a = b, a b = a, everything else 0: (a a) a = b a = 0, a (a a) = a b = a
  std::vector<std::vector<Vector>> t{{Vector::dense({0, 1}), Vector::dense({1, 0})},
                                     {Vector::dense({0, 0}), Vector::dense({0, 0})}};
  StructureAlgebra bad({"a", "b"}, t);
  CHECK(bad.associativity_counterexample());
}

TEST_CASE("involution checks") {
  StructureAlgebra m2 = full_matrix_algebra(2);
  CHECK(check_involution(m2, transpose_involution(2)).ok());
  CHECK(check_involution(m2, reflection_involution(2)).ok());
  CHECK(check_involution(m2, symplectic_involution(2)).ok());
  InvolutionReport id = check_involution(m2, identity_map(4));  // multiplicative, not anti
  CHECK(id.order_two);
  CHECK_FALSE(id.anti_mult);
  CHECK(id.counterexample);
  CHECK_THROWS_AS(StarAlgebra(m2, identity_map(4)), Error);
}

TEST_CASE("symmetric and skew parts of matrix involutions") {
  for (int n = 1; n <= 4; ++n) {
    StarAlgebra t = matrix_algebra(n, MatrixInvolution::transpose);
    CHECK(t.plus().dim() == static_cast<std::size_t>(n * (n + 1) / 2));
    CHECK(t.minus().dim() == static_cast<std::size_t>(n * (n - 1) / 2));
  }
  // symplectic on M2: symmetric = scalars, skew = traceless
  StarAlgebra s = matrix_algebra(2, MatrixInvolution::symplectic);
  CHECK(s.plus().dim() == 1);
  CHECK(s.minus().dim() == 3);
  CHECK(s.plus() == s.center());
  // symplectic on M4: 6 symmetric, 10 skew
  StarAlgebra s4 = matrix_algebra(4, MatrixInvolution::symplectic);
  CHECK(s4.plus().dim() == 6);
  CHECK(s4.minus().dim() == 10);
}

TEST_CASE("closures and quotients") {
  StarAlgebra m2 = matrix_algebra(2, MatrixInvolution::transpose);
  std::vector<Vector> gens{parse_element(m2, "e12")};
  // e12 and its transpose generate all of M2
  CHECK(star_subalgebra_closure(m2, gens).dim() == 4);
  std::vector<Vector> diag{parse_element(m2, "e11")};
  CHECK(star_subalgebra_closure(m2, diag).dim() == 1);

  // in M2 + M2 the ideal generated by (e11, 0) is the first summand
  StarAlgebra sum = direct_sum(m2, m2);
  std::vector<Vector> ig{join(parse_element(m2, "e11"), m2.zero())};
  Subspace ideal = star_ideal_closure(sum, Subspace::whole(8), ig);
  CHECK(ideal.dim() == 4);
  Quotient q(sum, Subspace::whole(8), ideal);
  CHECK(q.algebra().dim() == 4);
  CHECK(q.project(join(parse_element(m2, "e12"), m2.zero())).is_zero());
  CHECK_FALSE(q.project(join(m2.zero(), parse_element(m2, "e12"))).is_zero());
}

TEST_CASE("star isomorphism checks") {
  StarAlgebra m2 = matrix_algebra(2, MatrixInvolution::transpose);
  CHECK(check_star_isomorphism(m2, m2, identity_map(4)).ok());
  // e_ij -> e_ji is an anti-automorphism, not an automorphism
  IsomorphismReport r = check_star_isomorphism(m2, m2, transpose_involution(2));
  CHECK(r.bijective);
  CHECK_FALSE(r.multiplicative);
  // conjugation by diag(1, -1) is a *-automorphism for the transpose
  LinearMap conj{unit_of(2, 1, 1), -unit_of(2, 1, 2), -unit_of(2, 2, 1), unit_of(2, 2, 2)};
  CHECK(check_star_isomorphism(m2, m2, conj).ok());
  // conjugation by [[1,1],[0,1]] is an automorphism, not compatible with transpose
  LinearMap shear{unit_of(2, 1, 1) - unit_of(2, 1, 2), unit_of(2, 1, 2),
           unit_of(2, 1, 1) + unit_of(2, 2, 1) - unit_of(2, 1, 2) - unit_of(2, 2, 2), unit_of(2, 2, 2) + unit_of(2, 1, 2)};
  IsomorphismReport sr = check_star_isomorphism(m2, m2, shear);
  CHECK(sr.bijective);
  CHECK(sr.multiplicative);
  CHECK_FALSE(sr.star_compatible);
}

TEST_CASE("exchange involution and opposite") {
  StarAlgebra ex = with_exchange(full_matrix_algebra(2), "ex");
  CHECK(ex.dim() == 8);
  CHECK(ex.plus().dim() == 4);
  CHECK(ex.minus().dim() == 4);
  Vector x = join(unit_of(2, 1, 2), Vector(4));
  CHECK(ex.involve(x) == join(Vector(4), unit_of(2, 1, 2)));
  StructureAlgebra op = opposite(full_matrix_algebra(2));
  CHECK(op.multiply(unit_of(2, 2, 1), unit_of(2, 1, 2)) == unit_of(2, 1, 1));
}

TEST_CASE("superinvolutions") {
  CHECK(check_superinvolution(trp_super(1)).ok());
  CHECK(check_superinvolution(trp_super(2)).ok());
  CHECK(check_superinvolution(osp_super(1, 2)).ok());
  CHECK(check_superinvolution(mkl_exchange(1, 1)).ok());
  CHECK(check_superinvolution(qn_exchange(1)).ok());
  SuperStarAlgebra broken = trp_super(1);
  for (auto& col : broken.superinv) col = -col;  // negating keeps order two, breaks the product rule
  CHECK_FALSE(check_superinvolution(broken).ok());
}

TEST_CASE("property: random elements of M3 satisfy (xy)* = y* x*") {
  StarAlgebra m3 = matrix_algebra(3, MatrixInvolution::reflection);
  std::mt19937 rng(3);
  std::uniform_int_distribution<int> d(-3, 3);
  for (int t = 0; t < 30; ++t) {
    Vector x(9), y(9);
    for (Index i = 0; i < 9; ++i) {
      x.set(i, d(rng));
      y.set(i, d(rng));
    }
    CHECK(m3.involve(m3.multiply(x, y)) == m3.multiply(m3.involve(y), m3.involve(x)));
    CHECK(m3.involve(m3.involve(x)) == x);
  }
}

TEST_CASE("format_element uses matrix units when embedded") {
  StarAlgebra a5 = catalog_algebra(5);
  CHECK(format_element(a5, parse_element(a5, "e12+e56")) == "e12 + e56");
  CHECK(format_element(a5, parse_element(a5, "-2/3 e16")) == "-2/3 e16");
  CHECK(format_element(a5, a5.zero()) == "0");
}
