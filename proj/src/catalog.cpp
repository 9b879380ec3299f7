#include "pistar/catalog.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <regex>

#include "pistar/grassmann.hpp"

namespace pistar {

namespace {

Index flat(int n, int i, int j) { return static_cast<Index>(i * n + j); }

std::string unit_name(int n, int i, int j) {
  if (n <= 9) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

Vector matmul(int n, const Vector& x, const Vector& y) {
  Vector out(static_cast<std::size_t>(n) * n);
  for (const auto& [a, p] : x) {
    int i = static_cast<int>(a) / n, j = static_cast<int>(a) % n;
    for (const auto& [b, q] : y) {
      int k = static_cast<int>(b) / n, l = static_cast<int>(b) % n;
      if (j == k) out.add_scaled(Vector::unit(out.length(), flat(n, i, l)), p * q);
    }
  }
  return out;
}

// image of e_ij under the ambient involution
Vector involve_unit(int n, MatrixInvolution kind, int i, int j) {
  const std::size_t len = static_cast<std::size_t>(n) * n;
  switch (kind) {
    case MatrixInvolution::transpose:
      return Vector::unit(len, flat(n, j, i));
    case MatrixInvolution::reflection:
      return Vector::unit(len, flat(n, n - 1 - j, n - 1 - i));
    case MatrixInvolution::symplectic: {
      if (n % 2) throw Error("symplectic involution needs even n");
      const int m = n / 2;
      int s = ((i < m) ? 1 : -1) * ((j < m) ? 1 : -1);
      return Vector::unit(len, flat(n, n - 1 - j, n - 1 - i), s);
    }
  }
  throw Error("unknown involution");
}

Vector involve_matrix(int n, MatrixInvolution kind, const Vector& x) {
  Vector out(x.length());
  for (const auto& [a, q] : x)
    out.add_scaled(involve_unit(n, kind, static_cast<int>(a) / n, static_cast<int>(a) % n), q);
  return out;
}

LinearMap ambient_involution(int n, MatrixInvolution kind) {
  LinearMap m;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) m.push_back(involve_unit(n, kind, i, j));
  return m;
}

std::string trim(std::string_view s) {
  std::size_t a = 0, b = s.size();
  while (a < b && std::isspace(static_cast<unsigned char>(s[a]))) ++a;
  while (b > a && std::isspace(static_cast<unsigned char>(s[b - 1]))) --b;
  return std::string(s.substr(a, b - a));
}

// Splits "a + b - c" at top-level signs; each piece keeps its sign.
std::vector<std::pair<int, std::string>> split_terms(std::string_view text) {
  std::vector<std::pair<int, std::string>> out;
  int depth = 0;
  int sign = 1;
  std::string cur;
  auto flush = [&](std::size_t pos) {
    std::string t = trim(cur);
    if (t.empty()) throw ParseError("empty term in '" + std::string(text) + "'", pos);
    out.emplace_back(sign, t);
    cur.clear();
  };
  std::size_t start = 0;
  while (start < text.size() && std::isspace(static_cast<unsigned char>(text[start]))) ++start;
  if (start < text.size() && (text[start] == '-' || text[start] == '+')) {
    sign = text[start] == '-' ? -1 : 1;
    ++start;
  }
  for (std::size_t i = start; i < text.size(); ++i) {
    char c = text[i];
    if (c == '(' || c == '{' || c == '[') ++depth;
    if (c == ')' || c == '}' || c == ']') --depth;
    if (depth == 0 && (c == '+' || c == '-')) {
      flush(i);
      sign = c == '-' ? -1 : 1;
      continue;
    }
    cur += c;
  }
  flush(text.size());
  return out;
}

// "2/3 e12" or "2/3*e12" -> (2/3, "e12")
std::pair<Rational, std::string> split_coefficient(const std::string& term) {
  std::size_t i = 0;
  while (i < term.size() && (std::isdigit(static_cast<unsigned char>(term[i])) || term[i] == '/')) ++i;
  if (i == 0) return {Rational(1), term};
  Rational c = parse_rational(term.substr(0, i));
  std::string rest = trim(term.substr(i));
  if (!rest.empty() && rest[0] == '*') rest = trim(rest.substr(1));
  return {c, rest};
}

}  // namespace

StructureAlgebra full_matrix_algebra(int n) {
  if (n < 1) throw Error("matrix size must be positive");
  const std::size_t d = static_cast<std::size_t>(n) * n;
  std::vector<std::string> labels;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) labels.push_back(unit_name(n, i, j));
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j)
      for (int l = 0; l < n; ++l) table[flat(n, i, j)][flat(n, j, l)] = Vector::unit(d, flat(n, i, l));
  Vector unit(d);
  for (int i = 0; i < n; ++i) unit.set(flat(n, i, i), 1);
  return StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
}

LinearMap transpose_involution(int n) { return ambient_involution(n, MatrixInvolution::transpose); }
LinearMap reflection_involution(int n) { return ambient_involution(n, MatrixInvolution::reflection); }
LinearMap symplectic_involution(int n) {
  if (n < 2 || n % 2) throw Error("symplectic involution needs even n >= 2");
  return ambient_involution(n, MatrixInvolution::symplectic);
}

StarAlgebra matrix_star_algebra(int n, std::vector<std::string> labels, std::vector<Vector> basis,
                                MatrixInvolution inv, std::string name) {
  if (inv == MatrixInvolution::symplectic && n % 2) throw Error("symplectic involution needs even n");
  auto emb = std::make_shared<MatrixEmbedding>(n, basis);
  const std::size_t d = basis.size();
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (std::size_t i = 0; i < d; ++i)
    for (std::size_t j = 0; j < d; ++j) {
      auto c = emb->solver.coordinates(matmul(n, basis[i], basis[j]));
      if (!c) throw Error(name + ": basis does not span a subalgebra");
      table[i][j] = *c;
    }
  LinearMap m;
  for (std::size_t i = 0; i < d; ++i) {
    auto c = emb->solver.coordinates(involve_matrix(n, inv, basis[i]));
    if (!c) throw Error(name + ": subspace is not closed under the involution");
    m.push_back(*c);
  }
  // unit if the identity matrix lies in the span
  Vector id(static_cast<std::size_t>(n) * n);
  for (int i = 0; i < n; ++i) id.set(flat(n, i, i), 1);
  std::optional<Vector> unit = emb->solver.coordinates(id);
  StarAlgebra a(StructureAlgebra(std::move(labels), std::move(table), std::move(unit)), std::move(m),
                std::move(name));
  return a.with_embedding(std::move(emb));
}

StarAlgebra matrix_algebra(int n, MatrixInvolution inv) {
  std::vector<std::string> labels;
  std::vector<Vector> basis;
  const std::size_t len = static_cast<std::size_t>(n) * n;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      labels.push_back(unit_name(n, i, j));
      basis.push_back(Vector::unit(len, flat(n, i, j)));
    }
  const char* tag = inv == MatrixInvolution::transpose    ? "t"
                    : inv == MatrixInvolution::reflection ? "theta"
                                                          : "sigma";
  return matrix_star_algebra(n, std::move(labels), std::move(basis), inv,
                             "M(" + std::to_string(n) + "," + tag + ")");
}

Vector parse_matrix_units(int n, std::string_view text) {
  const std::size_t len = static_cast<std::size_t>(n) * n;
  Vector out(len);
  static const std::regex short_unit(R"(e([1-9])([1-9]))");
  static const std::regex long_unit(R"(e\((\d+),(\d+)\))");
  for (const auto& [sign, term] : split_terms(text)) {
    auto [c, atom] = split_coefficient(term);
    std::smatch m;
    int i = 0, j = 0;
    if (std::regex_match(atom, m, short_unit) || std::regex_match(atom, m, long_unit)) {
      i = std::stoi(m[1]) - 1;
      j = std::stoi(m[2]) - 1;
    } else {
      throw ParseError("not a matrix unit: '" + atom + "'", 0);
    }
    if (i < 0 || j < 0 || i >= n || j >= n)
      throw ParseError("matrix unit '" + atom + "' outside " + std::to_string(n) + "x" +
                           std::to_string(n),
                       0);
    out.add_scaled(Vector::unit(len, flat(n, i, j)), sign * c);
  }
  return out;
}

Vector parse_element(const StarAlgebra& a, std::string_view text) {
  std::string t = trim(text);
  if (t == "0") return a.zero();
  if (const auto& e = a.embedding()) {
    auto c = e->solver.coordinates(parse_matrix_units(e->n, t));
    if (!c) throw Error("element '" + t + "' does not lie in " + a.name());
    return *c;
  }
  const auto& labels = a.alg().labels();
  auto exact = std::find(labels.begin(), labels.end(), t);
  if (exact != labels.end()) return a.basis(static_cast<Index>(exact - labels.begin()));
  Vector out = a.zero();
  for (const auto& [sign, term] : split_terms(t)) {
    auto [c, atom] = split_coefficient(term);
    auto it = std::find(labels.begin(), labels.end(), atom);
    if (it == labels.end()) throw ParseError("unknown basis label '" + atom + "'", 0);
    out.add_scaled(a.basis(static_cast<Index>(it - labels.begin())), sign * c);
  }
  return out;
}

// ---------------------------------------------------------------- N M P Q R

NamedSubalgebra ut_named(std::string_view name) {
  struct Shape {
    int n;
    std::vector<const char*> gens;
  };
  // diagonal groups first, then the free strictly-upper entries
  static const std::map<std::string, Shape, std::less<>> shapes = {
      {"N",
       {6,
        {"e11+e66", "e22+e55", "e33+e44", "e12", "e13", "e23", "e14", "e15", "e16", "e26", "e36",
         "e45", "e46", "e56"}}},
      {"M",
       {8, {"e22+e77", "e33+e66", "e44+e55", "e12", "e13", "e14", "e23", "e24", "e34", "e15",
            "e16", "e17", "e18", "e28", "e38", "e48", "e56", "e57", "e58", "e67", "e68", "e78"}}},
      {"P", {4, {"e11+e44", "e22", "e33", "e12", "e13", "e14", "e24", "e34"}}},
      {"Q", {4, {"e11", "e22+e33", "e44", "e12", "e13", "e14", "e24", "e34"}}},
      {"R",
       {6,
        {"e22+e55", "e33", "e44", "e12", "e13", "e23", "e14", "e15", "e16", "e26", "e36", "e45",
         "e46", "e56"}}},
  };
  auto it = shapes.find(name);
  if (it == shapes.end()) throw Error("unknown subalgebra '" + std::string(name) + "'");
  NamedSubalgebra out;
  out.n = it->second.n;
  for (const char* g : it->second.gens) {
    out.labels.emplace_back(g);
    out.basis.push_back(parse_matrix_units(out.n, g));
  }
  return out;
}

StarAlgebra ut_star(std::string_view name, MatrixInvolution inv, std::string label) {
  NamedSubalgebra s = ut_named(name);
  return matrix_star_algebra(s.n, s.labels, s.basis, inv, std::move(label));
}

// ---------------------------------------------------------------- super

namespace {

int block_parity(int k, int i, int j) { return ((i < k) != (j < k)) ? 1 : 0; }

SuperAlgebra graded_full(int n, int k) {
  StructureAlgebra m = full_matrix_algebra(n);
  std::vector<int> parity;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) parity.push_back(block_parity(k, i, j));
  return {std::move(m), std::move(parity)};
}

using Dense = std::vector<std::vector<Rational>>;

Dense dense_unit(int n, int i, int j) {
  Dense m(n, std::vector<Rational>(n));
  m[i][j] = 1;
  return m;
}

Dense dmul(const Dense& a, const Dense& b) {
  const std::size_t n = a.size();
  Dense c(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t k = 0; k < n; ++k)
      if (a[i][k] != 0)
        for (std::size_t j = 0; j < n; ++j) c[i][j] += a[i][k] * b[k][j];
  return c;
}

Dense dtranspose(const Dense& a) {
  const std::size_t n = a.size();
  Dense t(n, std::vector<Rational>(n));
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j) t[j][i] = a[i][j];
  return t;
}

Vector dflatten(const Dense& a) {
  const std::size_t n = a.size();
  Vector v(n * n);
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = 0; j < n; ++j)
      if (a[i][j] != 0) v.set(static_cast<Index>(i * n + j), a[i][j]);
  return v;
}

}  // namespace

SuperAlgebra graded_matrix(int k, int l) {
  if (k < 0 || l < 0 || k + l < 1) throw Error("graded_matrix: invalid block sizes");
  return graded_full(k + l, k);
}

SuperAlgebra queer(int n) {
  if (n < 1) throw Error("queer: n must be positive");
  const int nn = n * n;
  const std::size_t d = 2 * static_cast<std::size_t>(nn);
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (int c = 0; c < 2; ++c)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j) {
        std::string base = n == 1 ? "1" : unit_name(n, i, j);
        labels.push_back(c ? (n == 1 ? std::string("c") : "c" + base) : base);
        parity.push_back(c);
      }
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (int a = 0; a < 2; ++a)
    for (int i = 0; i < n; ++i)
      for (int j = 0; j < n; ++j)
        for (int b = 0; b < 2; ++b)
          for (int l = 0; l < n; ++l) {
            Index x = static_cast<Index>(a * nn + i * n + j);
            Index y = static_cast<Index>(b * nn + j * n + l);
            table[x][y] = Vector::unit(d, static_cast<Index>(((a + b) % 2) * nn + i * n + l));
          }
  Vector unit(d);
  for (int i = 0; i < n; ++i) unit.set(static_cast<Index>(i * n + i), 1);
  return {StructureAlgebra(std::move(labels), std::move(table), std::move(unit)), std::move(parity)};
}

SuperStarAlgebra trp_super(int k) {
  if (k < 1) throw Error("trp: k must be positive");
  const int n = 2 * k;
  SuperAlgebra g = graded_full(n, k);
  const std::size_t d = static_cast<std::size_t>(n) * n;
  LinearMap m(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Index src = flat(n, i, j);
      if (i < k && j < k) {  // X -> T^t position
        m[src] = Vector::unit(d, flat(n, k + j, k + i));
      } else if (i >= k && j >= k) {  // T -> X^t position
        m[src] = Vector::unit(d, flat(n, j - k, i - k));
      } else if (i < k) {  // Y -> -Y^t
        m[src] = Vector::unit(d, flat(n, j - k, k + i), -1);
      } else {  // Z -> Z^t
        m[src] = Vector::unit(d, flat(n, k + j, i - k));
      }
    }
  return {std::move(g.alg), std::move(g.parity), std::move(m), "trp(" + std::to_string(k) + ")"};
}

SuperStarAlgebra osp_super(int k, int two_s) {
  if (k < 0 || two_s < 2 || two_s % 2) throw Error("osp: need k >= 0 and a positive even second block");
  const int s = two_s / 2, n = k + two_s;
  SuperAlgebra g = graded_full(n, k);
  Dense dm(n, std::vector<Rational>(n)), dinv(n, std::vector<Rational>(n));
  for (int i = 0; i < k; ++i) dm[i][i] = dinv[i][i] = 1;
  for (int i = 0; i < s; ++i) {
    dm[k + i][k + s + i] = 1;
    dm[k + s + i][k + i] = -1;
    dinv[k + i][k + s + i] = -1;
    dinv[k + s + i][k + i] = 1;
  }
  const std::size_t d = static_cast<std::size_t>(n) * n;
  LinearMap m(d);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Dense x = dense_unit(n, i, j);
      if (i < k && j >= k) x[i][j] = -1;  // the Y block changes sign
      m[flat(n, i, j)] = dflatten(dmul(dmul(dinv, dtranspose(x)), dm));
    }
  return {std::move(g.alg), std::move(g.parity), std::move(m),
          "osp(" + std::to_string(k) + "," + std::to_string(two_s) + ")"};
}

SuperStarAlgebra mkl_exchange(int k, int l) {
  return exchange_sum(graded_matrix(k, l), "Mkl(" + std::to_string(k) + "," + std::to_string(l) + ")");
}

SuperStarAlgebra qn_exchange(int n) { return exchange_sum(queer(n), "Qn(" + std::to_string(n) + ")"); }

SuperStarAlgebra simple_super(const SimpleSuperKind& kind) {
  using K = SimpleSuperKind::Kind;
  switch (kind.kind) {
    case K::mkl:
      return mkl_exchange(kind.a, kind.b);
    case K::qn:
      return qn_exchange(kind.a);
    case K::trp:
      return trp_super(kind.a);
    case K::osp:
      return osp_super(kind.a, kind.b);
    case K::exchange_sum:
      if (!kind.inner) throw Error("exchange_sum needs an inner superalgebra");
      return exchange_sum(*kind.inner);
  }
  throw Error("unknown super kind");
}

// ---------------------------------------------------------------- A1..A14

StarAlgebra catalog_algebra(int i, int grassmann_k) {
  if ((i == 3 || i == 4) && grassmann_k < 1) throw Error("A3/A4 need grassmann_k >= 1");
  const std::string name = "A" + std::to_string(i);
  using MI = MatrixInvolution;
  switch (i) {
    case 1:
      return matrix_algebra(2, MI::transpose).with_name(name);
    case 2:
      return matrix_algebra(2, MI::symplectic).with_name(name);
    case 3:
      return grassmann_envelope(trp_super(1), grassmann_k, name);
    case 4:
      return grassmann_envelope(qn_exchange(1), grassmann_k, name);
    case 5:
      return ut_star("N", MI::reflection, name);
    case 6:
      return ut_star("N", MI::symplectic, name);
    case 7:
      return ut_star("M", MI::reflection, name);
    case 8:
      return ut_star("M", MI::symplectic, name);
    case 9:
      return ut_star("P", MI::reflection, name);
    case 10:
      return ut_star("P", MI::symplectic, name);
    case 11:
      return ut_star("Q", MI::reflection, name);
    case 12:
      return ut_star("Q", MI::symplectic, name);
    case 13:
      return ut_star("R", MI::reflection, name);
    case 14:
      return ut_star("R", MI::symplectic, name);
    default:
      throw Error("unknown algebra index " + std::to_string(i));
  }
}

int catalog_index(std::string_view name) {
  static const std::regex re(R"(A(\d{1,2}))");
  std::string s(name);
  std::smatch m;
  if (!std::regex_match(s, m, re)) return 0;
  int i = std::stoi(m[1]);
  return (i >= 1 && i <= 14) ? i : 0;
}

// ---------------------------------------------------------------- Wedderburn

namespace {

bool closed_subalgebra(const StarAlgebra& a, const Subspace& s) {
  for (const auto& x : s.rows()) {
    if (!s.contains(a.involve(x))) return false;
    for (const auto& y : s.rows())
      if (!s.contains(a.multiply(x, y))) return false;
  }
  return true;
}

Subspace product_space(const StarAlgebra& a, const Subspace& u, const Subspace& v) {
  Subspace out(a.dim());
  for (const auto& x : u.rows())
    for (const auto& y : v.rows()) out.insert(a.multiply(x, y));
  return out;
}

}  // namespace

WedderburnData make_wedderburn(StarAlgebra source, std::vector<Component> comps, Subspace radical) {
  const std::size_t d = source.dim();
  Subspace total = radical;
  for (std::size_t i = 0; i < comps.size(); ++i) {
    const auto& c = comps[i];
    if (c.space.is_zero()) throw Error("component " + c.label + " is zero");
    if (!closed_subalgebra(source, c.space))
      throw Error("component " + c.label + " is not a *-closed subalgebra");
    for (std::size_t j = 0; j < i; ++j)
      if (!intersect(c.space, comps[j].space).is_zero())
        throw Error("components " + comps[j].label + " and " + c.label + " intersect");
    for (const auto& r : c.space.rows()) total.insert(r);
  }
  if (total.dim() != d) throw Error("components and radical do not span the algebra");
  if (!closed_subalgebra(source, radical)) throw Error("radical is not a *-closed subalgebra");
  Subspace power = radical;
  for (std::size_t step = 0; step <= d && !power.is_zero(); ++step) power = product_space(source, power, radical);
  if (!power.is_zero()) throw Error("radical is not nilpotent");
  return {std::move(comps), std::move(radical), std::move(source)};
}

WedderburnData wedderburn_data(int i) {
  if (i == 3 || i == 4) throw Error("Wedderburn data is not catalogued for the Grassmann envelopes A3/A4");
  StarAlgebra a = catalog_algebra(i);
  const std::size_t d = a.dim();
  auto el = [&](const char* t) { return parse_element(a, t); };
  auto span_of = [&](std::initializer_list<const char*> ts) {
    Subspace s(d);
    for (auto t : ts) s.insert(el(t));
    return s;
  };
  auto field = [&](const char* label, const char* idem) {
    return Component{label, span_of({idem}), {el(idem)}, std::nullopt};
  };
  auto split = [&](const char* label, const char* p, const char* q, const char* minus) {
    return Component{label, span_of({p, q}), {el(p), el(q)}, el(minus)};
  };
  if (i == 1 || i == 2) {
    Component whole{"M2", Subspace::whole(d), {*a.alg().unit()}, std::nullopt};
    return make_wedderburn(a, {whole}, Subspace(d));
  }
  // radical: strictly upper triangular part of the embedding
  Subspace radical(d);
  const auto& emb = *a.embedding();
  for (Index b = 0; b < d; ++b) {
    bool strict = true;
    for (const auto& [x, q] : emb.images[b])
      if (static_cast<int>(x) / emb.n >= static_cast<int>(x) % emb.n) strict = false;
    if (strict) radical.insert(a.basis(b));
  }
  std::vector<Component> comps;
  switch (i) {
    case 5:
    case 6:
      comps = {field("F(e11+e66)", "e11+e66"), field("F(e22+e55)", "e22+e55"),
               field("F(e33+e44)", "e33+e44")};
      break;
    case 7:
    case 8:
      comps = {field("F(e22+e77)", "e22+e77"), field("F(e33+e66)", "e33+e66"),
               field("F(e44+e55)", "e44+e55")};
      break;
    case 9:
    case 10:
      comps = {field("F(e11+e44)", "e11+e44"), split("(F+F)(e22+e33)", "e22", "e33", "e22-e33")};
      break;
    case 11:
    case 12:
      comps = {field("F(e22+e33)", "e22+e33"), split("(F+F)(e11+e44)", "e11", "e44", "e11-e44")};
      break;
    case 13:
    case 14:
      comps = {field("F(e22+e55)", "e22+e55"), split("(F+F)(e33+e44)", "e33", "e44", "e33-e44")};
      break;
    default:
      throw Error("unknown algebra index " + std::to_string(i));
  }
  return make_wedderburn(a, std::move(comps), std::move(radical));
}

// ---------------------------------------------------------------- lookup

CatalogItem catalog_lookup(std::string_view name, int grassmann_k) {
  std::string s(name);
  if (int i = catalog_index(s)) return catalog_algebra(i, grassmann_k);
  if (s == "N" || s == "M" || s == "P" || s == "Q" || s == "R") {
    int n = ut_named(s).n;
    (void)n;
    return ut_star(s, MatrixInvolution::reflection, s);
  }
  if (s == "F") {
    std::vector<std::vector<Vector>> t(1, std::vector<Vector>(1, Vector::unit(1, 0)));
    return StarAlgebra(StructureAlgebra({"1"}, t, Vector::unit(1, 0)), LinearMap{Vector::unit(1, 0)}, "F");
  }
  if (s == "FplusF") {
    std::vector<std::vector<Vector>> t(1, std::vector<Vector>(1, Vector::unit(1, 0)));
    return with_exchange(StructureAlgebra({"1"}, t, Vector::unit(1, 0)), "FplusF");
  }
  std::smatch m;
  static const std::regex mat(R"(M\((\d+),(t|theta|sigma)\))");
  if (std::regex_match(s, m, mat)) {
    int n = std::stoi(m[1]);
    if (n < 1 || n > 12) throw Error("matrix size out of range in '" + s + "'");
    MatrixInvolution inv = m[2] == "t"       ? MatrixInvolution::transpose
                           : m[2] == "theta" ? MatrixInvolution::reflection
                                             : MatrixInvolution::symplectic;
    return matrix_algebra(n, inv);
  }
  static const std::regex grass(R"(E\((\d+)\))");
  if (std::regex_match(s, m, grass)) return grassmann_algebra(std::stoi(m[1]));
  static const std::regex trp(R"(trp\((\d+)\))");
  if (std::regex_match(s, m, trp)) return trp_super(std::stoi(m[1]));
  static const std::regex osp(R"(osp\((\d+),(\d+)\))");
  if (std::regex_match(s, m, osp)) return osp_super(std::stoi(m[1]), std::stoi(m[2]));
  static const std::regex mkl(R"(Mkl\((\d+),(\d+)\))");
  if (std::regex_match(s, m, mkl)) return mkl_exchange(std::stoi(m[1]), std::stoi(m[2]));
  static const std::regex qn(R"(Qn\((\d+)\))");
  if (std::regex_match(s, m, qn)) return qn_exchange(std::stoi(m[1]));
  throw Error("unknown catalog name '" + s + "'");
}

std::vector<std::string> catalog_names() {
  std::vector<std::string> out;
  for (int i = 1; i <= 14; ++i) out.push_back("A" + std::to_string(i));
  for (const char* s : {"N", "M", "P", "Q", "R", "M(n,t)", "M(n,theta)", "M(n,sigma)", "F", "FplusF", "E(k)",
                        "trp(k)", "osp(k,2s)", "Mkl(k,l)", "Qn(n)"})
    out.emplace_back(s);
  return out;
}

}  // namespace pistar
