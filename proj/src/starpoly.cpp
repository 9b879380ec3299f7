#include "pistar/starpoly.hpp"

#include <algorithm>
#include <cctype>
#include <set>

namespace pistar {

std::string to_string(const SignedVar& v) {
  return "x" + std::to_string(v.index) + (v.sign == Sign::plus ? "+" : "-");
}

std::string render(const Monomial& m) {
  std::string s;
  for (const auto& v : m) {
    if (!s.empty()) s += ' ';
    s += to_string(v);
  }
  return s;
}

// ---------------------------------------------------------------- StarPolynomial

StarPolynomial StarPolynomial::monomial(Monomial m, Rational c) {
  StarPolynomial p;
  p.add(m, c);
  return p;
}

Rational StarPolynomial::coefficient(const Monomial& m) const {
  auto it = terms_.find(m);
  return it == terms_.end() ? Rational(0) : it->second;
}

void StarPolynomial::add(const Monomial& m, const Rational& c) {
  if (m.empty()) throw Error("monomials are nonempty words");
  if (c == 0) return;
  Rational q = c;
  q.canonicalize();
  auto [it, fresh] = terms_.try_emplace(m, q);
  if (fresh) return;
  it->second += q;
  if (it->second == 0) terms_.erase(it);
}

StarPolynomial& StarPolynomial::operator+=(const StarPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, c);
  return *this;
}

StarPolynomial& StarPolynomial::operator-=(const StarPolynomial& o) {
  for (const auto& [m, c] : o.terms_) add(m, -c);
  return *this;
}

StarPolynomial& StarPolynomial::operator*=(const Rational& c) {
  if (c == 0) {
    terms_.clear();
    return *this;
  }
  for (auto& [m, q] : terms_) q *= c;
  return *this;
}

StarPolynomial operator*(const StarPolynomial& a, const StarPolynomial& b) {
  StarPolynomial out;
  for (const auto& [ma, ca] : a.terms_)
    for (const auto& [mb, cb] : b.terms_) {
      Monomial w = ma;
      w.insert(w.end(), mb.begin(), mb.end());
      out.add(w, ca * cb);
    }
  return out;
}

std::string StarPolynomial::str() const {
  if (terms_.empty()) return "0";
  std::string s;
  bool first = true;
  for (const auto& [m, c] : terms_) {
    Rational a = abs(c);
    if (first) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (a != 1) s += to_string(a) + " ";
    s += render(m);
    first = false;
  }
  return s;
}

// ---------------------------------------------------------------- AST

PolyAst PolyAst::variable(SignedVar v) {
  PolyAst a;
  a.kind = Kind::var;
  a.var = v;
  return a;
}

PolyAst PolyAst::product(std::vector<PolyAst> factors) {
  if (factors.empty()) throw Error("empty product");
  if (factors.size() == 1) return std::move(factors.front());
  PolyAst a;
  a.kind = Kind::product;
  for (auto& f : factors) {
    if (f.kind == Kind::product)
      for (auto& g : f.children) a.children.push_back(std::move(g));
    else
      a.children.push_back(std::move(f));
  }
  return a;
}

PolyAst PolyAst::commutator(std::vector<PolyAst> args) {
  if (args.size() < 2) throw Error("a commutator needs at least two arguments");
  PolyAst a;
  a.kind = Kind::commutator;
  a.children = std::move(args);
  return a;
}

PolyAst PolyAst::jordan(PolyAst x, PolyAst y) {
  PolyAst a;
  a.kind = Kind::jordan;
  a.children.push_back(std::move(x));
  a.children.push_back(std::move(y));
  return a;
}

PolyAst PolyAst::sum(std::vector<std::pair<Rational, PolyAst>> terms) {
  if (terms.empty()) throw Error("empty sum");
  PolyAst a;
  a.kind = Kind::sum;
  for (auto& [c, t] : terms) {
    c.canonicalize();
    a.coeffs.push_back(c);
    a.children.push_back(std::move(t));
  }
  return a;
}

bool PolyAst::operator==(const PolyAst& o) const {
  if (kind != o.kind) return false;
  if (kind == Kind::var) return var == o.var;
  return children == o.children && coeffs == o.coeffs;
}

// ---------------------------------------------------------------- parser

namespace {

class Parser {
 public:
  explicit Parser(std::string_view t) : text_(t) {}

  PolyAst run() {
    PolyAst p = polynomial();
    skip();
    if (pos_ != text_.size()) fail("unexpected '" + std::string(1, text_[pos_]) + "'");
    return p;
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;

  [[noreturn]] void fail(const std::string& what) const {
    throw ParseError(what, pos_);
  }

  void skip() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }

  char peek() {
    skip();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }

  void expect(char c) {
    if (peek() != c) {
      if (pos_ >= text_.size()) fail(std::string("expected '") + c + "' before end of input");
      fail(std::string("expected '") + c + "', found '" + text_[pos_] + "'");
    }
    ++pos_;
  }

  static bool starts_factor(char c) { return c == 'x' || c == '[' || c == '{' || c == '('; }

  std::string digits() {
    std::size_t start = pos_;
    while (pos_ < text_.size() && std::isdigit(static_cast<unsigned char>(text_[pos_]))) ++pos_;
    if (start == pos_) fail("expected digits");
    return std::string(text_.substr(start, pos_ - start));
  }

  PolyAst polynomial() {
    std::vector<std::pair<Rational, PolyAst>> terms;
    Rational sign = 1;
    if (peek() == '-') {
      ++pos_;
      sign = -1;
    } else if (peek() == '+') {
      ++pos_;
    }
    for (;;) {
      auto [c, t] = term();
      terms.emplace_back(sign * c, std::move(t));
      char n = peek();
      if (n == '+' || n == '-') {
        ++pos_;
        sign = n == '-' ? -1 : 1;
        continue;
      }
      break;
    }
    if (terms.size() == 1 && terms.front().first == 1) return std::move(terms.front().second);
    return PolyAst::sum(std::move(terms));
  }

  std::pair<Rational, PolyAst> term() {
    Rational c = 1;
    char n = peek();
    if (n == '-') {
      ++pos_;
      c = -1;
      n = peek();
    }
    if (std::isdigit(static_cast<unsigned char>(n))) {
      std::string num = digits();
      if (pos_ < text_.size() && text_[pos_] == '/') {
        ++pos_;
        std::string den = digits();
        if (Rational(mpz_class(den)) == 0) fail("zero denominator");
        num += "/" + den;
      }
      c *= parse_rational(num);
    }
    std::vector<PolyAst> factors;
    if (!starts_factor(peek())) {
      if (pos_ >= text_.size()) fail("expected a factor before end of input");
      fail("unknown token '" + std::string(1, text_[pos_]) + "'");
    }
    while (starts_factor(peek())) factors.push_back(factor());
    return {c, PolyAst::product(std::move(factors))};
  }

  PolyAst factor() {
    char c = peek();
    if (c == 'x') {
      ++pos_;
      std::string d = digits();
      if (pos_ >= text_.size() || (text_[pos_] != '+' && text_[pos_] != '-'))
        fail("variable x" + d + " needs a + or - sign");
      Sign s = text_[pos_] == '+' ? Sign::plus : Sign::minus;
      ++pos_;
      int idx = std::stoi(d);
      if (idx < 1) fail("variable indices start at 1");
      return PolyAst::variable({idx, s});
    }
    if (c == '[') {
      ++pos_;
      std::vector<PolyAst> args{polynomial()};
      while (peek() == ',') {
        ++pos_;
        args.push_back(polynomial());
      }
      const std::size_t close = pos_;
      expect(']');
      if (args.size() < 2) {
        pos_ = close;
        fail("a commutator needs at least two arguments");
      }
      return PolyAst::commutator(std::move(args));
    }
    if (c == '{') {
      ++pos_;
      PolyAst a = polynomial();
      expect(',');
      PolyAst b = polynomial();
      expect('}');
      return PolyAst::jordan(std::move(a), std::move(b));
    }
    if (c == '(') {
      ++pos_;
      PolyAst a = polynomial();
      expect(')');
      return a;
    }
    fail("unknown token");
  }
};

std::string render_inner(const PolyAst& a, bool in_product);

std::string render_sum(const PolyAst& a) {
  std::string s;
  for (std::size_t i = 0; i < a.children.size(); ++i) {
    const Rational& c = a.coeffs[i];
    Rational m = abs(c);
    if (i == 0) {
      if (c < 0) s += "-";
    } else {
      s += c < 0 ? " - " : " + ";
    }
    if (m != 1) s += to_string(m) + " ";
    const PolyAst& t = a.children[i];
    s += t.kind == PolyAst::Kind::sum ? "(" + render_sum(t) + ")" : render_inner(t, false);
  }
  return s;
}

std::string render_inner(const PolyAst& a, bool in_product) {
  using K = PolyAst::Kind;
  switch (a.kind) {
    case K::var:
      return to_string(a.var);
    case K::product: {
      std::string s;
      for (const auto& f : a.children) {
        if (!s.empty()) s += ' ';
        s += render_inner(f, true);
      }
      return s;
    }
    case K::commutator: {
      std::string s = "[";
      for (std::size_t i = 0; i < a.children.size(); ++i) {
        if (i) s += ", ";
        s += render(a.children[i]);
      }
      return s + "]";
    }
    case K::jordan:
      return "{" + render(a.children[0]) + ", " + render(a.children[1]) + "}";
    case K::sum:
      return in_product ? "(" + render_sum(a) + ")" : render_sum(a);
  }
  return {};
}

}  // namespace

PolyAst parse(std::string_view text) { return Parser(text).run(); }

std::string render(const PolyAst& ast) { return render_inner(ast, false); }

StarPolynomial expand(const PolyAst& a) {
  using K = PolyAst::Kind;
  switch (a.kind) {
    case K::var:
      return StarPolynomial::monomial({a.var});
    case K::product: {
      StarPolynomial p = expand(a.children.front());
      for (std::size_t i = 1; i < a.children.size(); ++i) p = p * expand(a.children[i]);
      return p;
    }
    case K::commutator: {
      StarPolynomial p = expand(a.children.front());
      for (std::size_t i = 1; i < a.children.size(); ++i) {
        StarPolynomial q = expand(a.children[i]);
        p = p * q - q * p;
      }
      return p;
    }
    case K::jordan: {
      StarPolynomial p = expand(a.children[0]), q = expand(a.children[1]);
      return p * q + q * p;
    }
    case K::sum: {
      StarPolynomial p;
      for (std::size_t i = 0; i < a.children.size(); ++i) p += expand(a.children[i]) * a.coeffs[i];
      return p;
    }
  }
  return {};
}

MultilinearCheck check_multilinear(const StarPolynomial& p) {
  MultilinearCheck out;
  if (p.is_zero()) return out;
  std::vector<SignedVar> ref;
  bool first = true;
  for (const auto& [m, c] : p.terms()) {
    std::vector<SignedVar> s = m;
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end()) return {false, {}};
    if (first) {
      ref = s;
      first = false;
    } else if (s != ref) {
      return {false, {}};
    }
  }
  return {true, ref};
}

namespace {

std::vector<SignedVar> slots_of(const PolyAst& a) {
  using K = PolyAst::Kind;
  if (a.kind == K::var) return {a.var};
  if (a.kind == K::sum) {
    std::vector<SignedVar> ref = slots_of(a.children.front());
    for (std::size_t i = 1; i < a.children.size(); ++i)
      if (slots_of(a.children[i]) != ref) throw Error("summands use different variables: " + render(a));
    return ref;
  }
  std::vector<SignedVar> all;
  for (const auto& c : a.children) {
    auto s = slots_of(c);
    all.insert(all.end(), s.begin(), s.end());
  }
  std::sort(all.begin(), all.end());
  if (auto it = std::adjacent_find(all.begin(), all.end()); it != all.end())
    throw Error("variable " + to_string(*it) + " repeats in " + render(a));
  return all;
}

}  // namespace

std::vector<SignedVar> ast_slots(const PolyAst& ast) { return slots_of(ast); }

}  // namespace pistar
