#include <doctest.h>

#include <random>

#include "pistar/catalog.hpp"
#include "pistar/evaluator.hpp"
#include "random_poly.hpp"

using namespace pistar;
using testing::random_ast;
using testing::random_leaves;

namespace {

using Dense = std::vector<std::vector<Rational>>;

Dense to_dense(const MatrixEmbedding& e, const Vector& x) {
  Dense m(e.n, std::vector<Rational>(e.n));
  for (const auto& [b, c] : x)
    for (const auto& [pos, q] : e.images[b]) m[pos / e.n][pos % e.n] += c * q;
  return m;
}

Dense mul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

// f evaluated with plain matrix products, read back in the algebra's basis.
Vector dense_oracle(const StarPolynomial& f, const StarAlgebra& a, const Assignment& s) {
  const MatrixEmbedding& e = *a.embedding();
  Dense total(e.n, std::vector<Rational>(e.n));
  for (const auto& [m, c] : f.terms()) {
    Dense p = to_dense(e, s.at(m[0]));
    for (std::size_t i = 1; i < m.size(); ++i) p = mul(p, to_dense(e, s.at(m[i])));
    for (int i = 0; i < e.n; ++i)
      for (int j = 0; j < e.n; ++j) total[i][j] += c * p[i][j];
  }
  Vector flat(static_cast<std::size_t>(e.n) * e.n);
  for (int i = 0; i < e.n; ++i)
    for (int j = 0; j < e.n; ++j) flat.set(static_cast<Index>(i * e.n + j), total[i][j]);
  return e.coordinates(flat);
}

Vector random_in(std::mt19937& rng, const Subspace& s) {
  std::uniform_int_distribution<int> d(-4, 4);
  Vector v(s.ambient_dim());
  for (const auto& r : s.rows()) v.add_scaled(r, d(rng));
  return v;
}

Assignment random_assignment(std::mt19937& rng, const StarAlgebra& a, const std::vector<SignedVar>& slots) {
  Assignment s;
  for (const auto& x : slots) s[x] = random_in(rng, a.part(x.sign));
  return s;
}

Assignment assign(const StarAlgebra& a, std::initializer_list<std::pair<const char*, const char*>> vals) {
  Assignment s;
  for (auto [slot, el] : vals) {
    PolyAst v = parse(slot);
    s[v.var] = parse_element(a, el);
  }
  return s;
}

Status status_of(const char* poly, const StarAlgebra& a) { return classify(parse(poly), a).status; }

}  // namespace

TEST_CASE("displayed products") {
  StarAlgebra a5 = catalog_algebra(5);
  Assignment s5 = assign(a5, {{"x1+", "e11+e66"}, {"x2+", "e12+e56"}, {"x3+", "e22+e55"},
                              {"x4+", "e23+e45"}, {"x5+", "e33+e44"}, {"x6+", "e36+e14"}});
  PolyAst f5 = parse("[x1+, x2+][x3+, x4+][x5+, x6+]");
  CHECK(evaluate_ast(f5, a5, s5) == parse_element(a5, "e16"));
  CHECK(evaluate(expand(f5), a5, s5) == parse_element(a5, "e16"));

  // By hand: [e12+e78, e22+e77] = e12 - e78, [e22+e77, e23+e67] = e23 - e67,
  // [e33+e66, e34+e56] = e34 - e56, and the product of these three is e14.
  // [e44+e55, e48+e14] = e48 - e14 and [e44+e55, e48-e14] = e48 + e14, so
  // both displayed tuples end in e14 e48 = e18.
  PolyAst f = parse("[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8+]");
  PolyAst g = parse("[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8-]");
  for (int i : {7, 8}) {
    StarAlgebra a = catalog_algebra(i);
    Assignment s = assign(a, {{"x1+", "e12+e78"}, {"x2+", "e22+e77"}, {"x3+", "e22+e77"}, {"x4+", "e23+e67"},
                              {"x5+", "e33+e66"}, {"x6+", "e34+e56"}, {"x7+", "e44+e55"}});
    Assignment s7 = s, s8 = s;
    s7[{8, Sign::plus}] = parse_element(a, "e48+e14");
    s8[{8, Sign::minus}] = parse_element(a, "e48-e14");
    CHECK(evaluate_ast(f, a, s7, false) == parse_element(a, "e18"));
    CHECK(evaluate_ast(g, a, s8, false) == parse_element(a, "e18"));
    // e48+e14 is not symmetric for either involution, so the checked path refuses it
    CHECK_THROWS_AS(evaluate_ast(f, a, s7), Error);
  }
}

TEST_CASE("evaluation errors") {
  StarAlgebra a1 = catalog_algebra(1);
  PolyAst f = parse("[x1+, x2+]");
  Assignment s = assign(a1, {{"x1+", "e11"}});
  CHECK_THROWS_AS(evaluate_ast(f, a1, s), Error);  // x2+ missing
  s[{2, Sign::plus}] = parse_element(a1, "e12-e21");
  CHECK_THROWS_AS(evaluate_ast(f, a1, s), Error);  // skew value in a + slot
  CHECK_THROWS_AS(classify(expand(parse("x1+ x1+")), a1), Error);
  Assignment zero;
  zero[{1, Sign::plus}] = a1.zero();
  zero[{2, Sign::plus}] = a1.zero();
  CHECK(evaluate_ast(f, a1, zero).is_zero());
}

TEST_CASE("trichotomy on known cases") {
  CHECK(status_of("[x1- x2-, x3-]", catalog_algebra(1)) == Status::identity);
  CHECK(status_of("x1+", catalog_algebra(2)) == Status::proper_central);
  CHECK(status_of("[x1+, x2+]", catalog_algebra(1)) == Status::noncentral);
  CHECK(status_of("[x1-, x2-, x1+]", catalog_algebra(3, 3)) == Status::proper_central);
  StarAlgebra a4 = catalog_algebra(4, 2);
  CHECK(is_central(parse("[x1+, x2+]"), a4));
  CHECK_FALSE(is_identity(parse("[x1+, x2+]"), a4));
  CHECK(is_identity(parse("[x1-, x2-][x3-, x4-]"), catalog_algebra(3, 4)));
  StarAlgebra f = std::get<StarAlgebra>(catalog_lookup("F"));
  CHECK(is_identity(parse("x1-"), f));
  CHECK(status_of("x1+", f) == Status::proper_central);
}

TEST_CASE("property: evaluate agrees with plain matrix products") {
  std::mt19937 rng(101);
  for (int i : {1, 2, 5, 9, 11, 13}) {
    StarAlgebra a = catalog_algebra(i);
    for (int t = 0; t < 15; ++t) {
      PolyAst p = random_ast(rng, random_leaves(rng, 1 + t % 4));
      StarPolynomial f = expand(p);
      if (f.is_zero()) continue;
      Assignment s = random_assignment(rng, a, ast_slots(p));
      Vector expect = dense_oracle(f, a, s);
      CHECK(evaluate(f, a, s) == expect);
      CHECK(evaluate_ast(p, a, s) == expect);
    }
  }
}

TEST_CASE("property: span path and brute force give the same verdict and witness") {
  std::mt19937 rng(7);
  for (int i : {1, 2, 5, 9, 10, 11, 12, 14}) {
    StarAlgebra a = catalog_algebra(i);
    for (int t = 0; t < 12; ++t) {
      PolyAst p = random_ast(rng, random_leaves(rng, 1 + t % 4));
      StarPolynomial f = expand(p);
      if (f.is_zero()) continue;
      INFO("A" << i << " " << render(p));
      Verdict fast = classify(p, a);
      Verdict slow = classify(f, a);
      ClassifyOptions par;
      par.threads = 4;
      Verdict threaded = classify(f, a, par);
      CHECK(fast.status == slow.status);
      CHECK(fast.witness == slow.witness);
      CHECK(fast.value == slow.value);
      CHECK(threaded.witness == slow.witness);
      if (slow.witness) {
        // witnesses re-evaluate to the reported value
        CHECK(evaluate(f, a, *slow.witness) == *slow.value);
        if (slow.status == Status::noncentral)
          CHECK_FALSE(a.center().contains(*slow.value));
        else
          CHECK((a.center().contains(*slow.value) && !slow.value->is_zero()));
      }
    }
  }
}

TEST_CASE("property: verdicts survive random rational substitutions") {
  std::mt19937 rng(19);
  StarAlgebra a9 = catalog_algebra(9);
  int identities = 0, centrals = 0;
  std::vector<PolyAst> polys;
  for (const char* text : {"[x1+, x2+][x3+, x4+]", "[x1+, x2+][x3+, x4+][x5+, x6+]", "[x1-, x2+][x3+, x4-]",
                           "x1- x2- x3-", "[x1+, x2+] x3- [x4+, x5+]"})
    polys.push_back(parse(text));
  for (int t = 0; t < 60; ++t) polys.push_back(random_ast(rng, random_leaves(rng, 1 + t % 3)));
  for (const PolyAst& p : polys) {
    StarPolynomial f = expand(p);
    if (f.is_zero()) continue;
    Verdict v = classify(p, a9);
    for (int r = 0; r < 5; ++r) {
      Vector val = evaluate(f, a9, random_assignment(rng, a9, ast_slots(p)));
      if (v.status == Status::identity) CHECK(val.is_zero());
      if (v.status == Status::proper_central) CHECK(a9.center().contains(val));
    }
    identities += v.status == Status::identity;
    centrals += v.status == Status::proper_central;
  }
  CHECK(identities > 0);
  CHECK(centrals > 0);
}

TEST_CASE("property: renaming slots does not change the verdict") {
  std::mt19937 rng(29);
  StarAlgebra a5 = catalog_algebra(5);
  for (int t = 0; t < 20; ++t) {
    std::vector<SignedVar> leaves = random_leaves(rng, 3);
    PolyAst p = random_ast(rng, leaves, false);
    // relabel x_i -> x_{4-i}, keeping signs
    std::string text = render(p);
    for (char& c : text)
      if (c == '1')
        c = '3';
      else if (c == '3')
        c = '1';
    CHECK(classify(p, a5).status == classify(parse(text), a5).status);
  }
}

TEST_CASE("regular substitutions agree with the full truncation at k = 3") {
  std::mt19937 rng(31);
  for (int i : {3, 4}) {
    StarAlgebra a = catalog_algebra(i, 3);
    for (int t = 0; t < 15; ++t) {
      PolyAst p = random_ast(rng, random_leaves(rng, 1 + t % 3));
      if (expand(p).is_zero()) continue;
      ClassifyOptions reg, full;
      reg.substitution = Substitution::regular;
      full.substitution = Substitution::full;
      INFO("A" << i << " " << render(p));
      CHECK(classify(p, a, reg).status == classify(p, a, full).status);
    }
  }
}

TEST_CASE("value spans") {
  StarAlgebra a1 = catalog_algebra(1);
  PolyAst p = parse("[x1+, x2+]");
  auto slots = ast_slots(p);
  Subspace s = value_span(p, a1, slot_candidates(a1, slots, Substitution::full), slots);
  // commutators of symmetric 2x2 matrices are the skew ones
  CHECK(s == a1.minus());
}
