#include <doctest.h>

#include <random>

#include "pistar/linalg.hpp"

using namespace pistar;

namespace {

Vector random_vector(std::mt19937& rng, std::size_t n, int range = 3, double density = 0.6) {
  std::uniform_int_distribution<int> val(-range, range);
  std::bernoulli_distribution keep(density);
  Vector v(n);
  for (Index i = 0; i < n; ++i)
    if (keep(rng)) v.set(i, val(rng));
  return v;
}

}  // namespace

TEST_CASE("rationals parse and print in lowest terms") {
  CHECK(to_string(parse_rational("6/4")) == "3/2");
  CHECK(to_string(parse_rational("-2")) == "-2");
  CHECK(to_string(parse_rational("0/7")) == "0");
  CHECK_THROWS_AS(parse_rational("1/0"), Error);
  CHECK_THROWS_AS(parse_rational("abc"), Error);
}

TEST_CASE("sparse vectors never store zeros") {
  Vector a = Vector::dense({1, 0, -2});
  Vector b = Vector::dense({-1, 0, 2});
  CHECK(a.nnz() == 2);
  Vector s = a + b;
  CHECK(s.is_zero());
  CHECK(s.length() == 3);
  a.set(0, 0);
  CHECK(a.nnz() == 1);
  CHECK(a.leading() == Index(2));
  CHECK(dot(Vector::dense({1, 2, 3}), Vector::dense({4, 5, 6})) == 32);
  CHECK_THROWS_AS(a + Vector(4), DimensionError);
  CHECK_THROWS(a.get(3));
}

TEST_CASE("subspaces are kept in reduced row echelon form") {
  std::vector<Vector> gens{Vector::dense({1, 2, 3}), Vector::dense({2, 4, 6}), Vector::dense({0, 1, 1})};
  Subspace s = Subspace::span(3, gens);
  CHECK(s.dim() == 2);
  CHECK(s.contains(Vector::dense({1, 3, 4})));
  CHECK_FALSE(s.contains(Vector::dense({0, 0, 1})));
  // hand RREF of the span: (1,0,1), (0,1,1)
  REQUIRE(s.rows().size() == 2);
  CHECK(s.rows()[0] == Vector::dense({1, 0, 1}));
  CHECK(s.rows()[1] == Vector::dense({0, 1, 1}));
  CHECK(s.reduce(Vector::dense({1, 1, 5})) == Vector::dense({0, 0, 3}));
  CHECK_FALSE(s.insert(Vector::dense({3, 5, 8})));
  CHECK(s.insert(Vector::dense({0, 0, 1})));
  CHECK(s == Subspace::whole(3));
}

TEST_CASE("nullspaces by hand") {
  // x + y + z = 0, x - z = 0  ->  span (1, -2, 1)
  std::vector<Vector> rows{Vector::dense({1, 1, 1}), Vector::dense({1, 0, -1})};
  Subspace n = nullspace_of_rows(3, rows);
  CHECK(n.dim() == 1);
  CHECK(n.contains(Vector::dense({1, -2, 1})));
  std::vector<Vector> cols{Vector::dense({1, 0}), Vector::dense({0, 1}), Vector::dense({1, 1})};
  Subspace m = nullspace_of_columns(2, cols);
  CHECK(m.dim() == 1);
  CHECK(m.contains(Vector::dense({1, 1, -1})));
}

TEST_CASE("Hilbert matrices are nonsingular") {
  for (int n = 2; n <= 7; ++n) {
    std::vector<Vector> rows;
    for (int i = 0; i < n; ++i) {
      Vector r(n);
      for (int j = 0; j < n; ++j) r.set(j, Rational(1, i + j + 1));
      rows.push_back(r);
    }
    CHECK(Subspace::span(n, rows).dim() == static_cast<std::size_t>(n));
  }
}

TEST_CASE("property: dim U + dim V = dim(U+V) + dim(U cap V)") {
  std::mt19937 rng(11);
  for (int trial = 0; trial < 40; ++trial) {
    const std::size_t n = 3 + trial % 5;
    std::vector<Vector> gu, gv;
    for (int i = 0; i < 1 + trial % 4; ++i) gu.push_back(random_vector(rng, n));
    for (int i = 0; i < 1 + (trial / 4) % 4; ++i) gv.push_back(random_vector(rng, n));
    Subspace u = Subspace::span(n, gu), v = Subspace::span(n, gv);
    Subspace s = subspace_sum(u, v), c = intersect(u, v);
    CHECK(u.dim() + v.dim() == s.dim() + c.dim());
    CHECK(u.contains(c));
    CHECK(v.contains(c));
    CHECK(s.contains(u));
  }
}

TEST_CASE("property: modular rank agrees with exact rank on small integer matrices") {
  std::mt19937 rng(5);
  for (int trial = 0; trial < 60; ++trial) {
    const std::size_t n = 2 + trial % 7;
    RankAccumulator exact(n, RankMode::exact), mod(n, RankMode::modular);
    std::vector<Vector> cols;
    for (std::size_t i = 0; i < n + 2; ++i) {
      Vector v = random_vector(rng, n, 4, 0.4);
      if (trial % 3 == 0 && i > 1) v = cols[0] + cols[1] * Rational(trial % 5);  // forced dependence
      cols.push_back(v);
      exact.insert(v);
      mod.insert(v);
    }
    CHECK(exact.rank() == mod.rank());
    CertifiedRank cr = rank_modp_then_certify(cols);
    CHECK(cr.rank == exact.rank());
    CHECK(cr.certified);
  }
}

TEST_CASE("a rank drop modulo p is caught by certification") {
  // (p, 0) vanishes mod p
  const auto p = static_cast<long>(kDefaultPrime);
  std::vector<Vector> cols{Vector::dense({p, 0}), Vector::dense({0, 1})};
  CertifiedRank cr = rank_modp_then_certify(cols);
  CHECK(cr.modular_rank == 1);
  CHECK(cr.rank == 2);
}

TEST_CASE("basis solver recovers coordinates") {
  std::vector<Vector> gens{Vector::dense({1, 1, 0}), Vector::dense({0, 1, 1})};
  BasisSolver s(3, gens);
  auto c = s.coordinates(Vector::dense({2, 5, 3}));
  REQUIRE(c);
  CHECK(*c == Vector::dense({2, 3}));
  CHECK_FALSE(s.coordinates(Vector::dense({1, 0, 0})));
  CHECK_THROWS_AS(s.coordinates_or_throw(Vector::dense({1, 0, 0})), Error);
  std::vector<Vector> dep{Vector::dense({1, 2}), Vector::dense({2, 4})};
  CHECK_THROWS_AS(BasisSolver(2, dep), Error);
}

TEST_CASE("linear maps compose") {
  LinearMap swap{Vector::dense({0, 1}), Vector::dense({1, 0})};
  CHECK(compose(swap, swap) == identity_map(2));
  CHECK(pistar::apply(swap, Vector::dense({3, 7})) == Vector::dense({7, 3}));
  CHECK(rank_of(swap, 2) == 2);
  CHECK(is_prime(kDefaultPrime));
  CHECK_FALSE(is_prime(91));
  CHECK(mod_reduce(Rational(-1, 2), 7) == 3);  // 2 * 3 = 6 = -1 mod 7
}
