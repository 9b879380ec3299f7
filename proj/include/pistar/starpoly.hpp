#pragma once

#include <compare>
#include <map>
#include <string>
#include <string_view>
#include <vector>

#include "pistar/algebra.hpp"
#include "pistar/error.hpp"
#include "pistar/linalg.hpp"

namespace pistar {

// x_i^+ or x_i^-; (i,+) and (i,-) are independent slots. Ordered by index,
// then + before -.
struct SignedVar {
  int index = 1;
  Sign sign = Sign::plus;
  auto operator<=>(const SignedVar&) const = default;
};

std::string to_string(const SignedVar& v);  // "x3-"

using Monomial = std::vector<SignedVar>;

std::string render(const Monomial& m);

class StarPolynomial {
 public:
  StarPolynomial() = default;
  static StarPolynomial monomial(Monomial m, Rational c = 1);

  const std::map<Monomial, Rational>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }
  Rational coefficient(const Monomial& m) const;

  void add(const Monomial& m, const Rational& c);
  StarPolynomial& operator+=(const StarPolynomial& o);
  StarPolynomial& operator-=(const StarPolynomial& o);
  StarPolynomial& operator*=(const Rational& c);
  friend StarPolynomial operator+(StarPolynomial a, const StarPolynomial& b) { return a += b; }
  friend StarPolynomial operator-(StarPolynomial a, const StarPolynomial& b) { return a -= b; }
  friend StarPolynomial operator*(StarPolynomial a, const Rational& c) { return a *= c; }
  friend StarPolynomial operator*(const Rational& c, StarPolynomial a) { return a *= c; }
  // concatenation product
  friend StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b);
  bool operator==(const StarPolynomial&) const = default;

  std::string str() const;

 private:
  std::map<Monomial, Rational> terms_;  // no zero coefficients
};

struct PolyAst {
  enum class Kind { var, product, commutator, jordan, sum };
  Kind kind = Kind::var;
  SignedVar var;                    // var
  std::vector<PolyAst> children;    // product, commutator, jordan, sum
  std::vector<Rational> coeffs;     // sum only, parallel to children

  static PolyAst variable(SignedVar v);
  static PolyAst product(std::vector<PolyAst> factors);
  static PolyAst commutator(std::vector<PolyAst> args);
  static PolyAst jordan(PolyAst a, PolyAst b);
  static PolyAst sum(std::vector<std::pair<Rational, PolyAst>> terms);

  bool operator==(const PolyAst& o) const;
};

// Grammar:
//   polynomial := term (("+"|"-") term)*
//   term       := [coeff] factor {factor}
//   coeff      := ["-"] digits ["/" digits]
//   factor     := variable | "[" poly ("," poly)+ "]" | "{" poly "," poly "}" | "(" poly ")"
//   variable   := "x" digits ("+"|"-")
// Throws ParseError carrying the byte offset.
PolyAst parse(std::string_view text);
std::string render(const PolyAst& ast);

StarPolynomial expand(const PolyAst& ast);

struct MultilinearCheck {
  bool ok = false;
  std::vector<SignedVar> slots;  // sorted
};
MultilinearCheck check_multilinear(const StarPolynomial& p);

// Slots of an AST in sorted order; throws if a slot repeats or if summands
// use different slot sets.
std::vector<SignedVar> ast_slots(const PolyAst& ast);

}  // namespace pistar
