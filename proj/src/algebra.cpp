#include "pistar/algebra.hpp"

#include <sstream>

namespace pistar {

namespace {

std::string pair_str(const std::vector<std::string>& labels, Index i, Index j) {
  return "(" + labels[i] + ", " + labels[j] + ")";
}

}  // namespace

// ---------------------------------------------------------------- StructureAlgebra

StructureAlgebra::StructureAlgebra(std::vector<std::string> labels,
                                   std::vector<std::vector<Vector>> table,
                                   std::optional<Vector> unit)
    : labels_(std::move(labels)), table_(std::move(table)), unit_(std::move(unit)) {
  const std::size_t d = labels_.size();
  if (table_.size() != d) throw DimensionError("structure table has wrong row count");
  for (auto& row : table_) {
    if (row.size() != d) throw DimensionError("structure table has wrong column count");
    for (auto& v : row) {
      if (v.length() == 0 && d != 0) v = Vector(d);
      if (v.length() != d) throw DimensionError("structure constant vector has wrong length");
    }
  }
  if (unit_ && unit_->length() != d) throw DimensionError("unit has wrong length");
}

Vector StructureAlgebra::multiply(const Vector& u, const Vector& v) const {
  if (u.length() != dim() || v.length() != dim())
    throw DimensionError("multiply: vector length does not match algebra dimension " +
                         std::to_string(dim()));
  Vector out(dim());
  for (const auto& [i, a] : u)
    for (const auto& [j, b] : v) {
      const Vector& p = table_[i][j];
      if (!p.is_zero()) out.add_scaled(p, a * b);
    }
  return out;
}

std::optional<std::array<Index, 3>> StructureAlgebra::associativity_counterexample() const {
  const Index d = static_cast<Index>(dim());
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vector& ij = table_[i][j];
      for (Index k = 0; k < d; ++k) {
        Vector left = multiply(ij, basis(k));
        Vector right = multiply(basis(i), table_[j][k]);
        if (!(left == right)) return std::array<Index, 3>{i, j, k};
      }
    }
  return std::nullopt;
}

bool StructureAlgebra::unit_ok() const {
  if (!unit_) return true;
  for (Index i = 0; i < dim(); ++i) {
    Vector b = basis(i);
    if (!(multiply(*unit_, b) == b) || !(multiply(b, *unit_) == b)) return false;
  }
  return true;
}

Vector multiply(const StructureAlgebra& a, const Vector& u, const Vector& v) {
  return a.multiply(u, v);
}

InvolutionReport check_involution(const StructureAlgebra& alg, const LinearMap& m) {
  InvolutionReport r;
  const Index d = static_cast<Index>(alg.dim());
  if (m.size() != d) {
    r.counterexample = "map has " + std::to_string(m.size()) + " columns, algebra dim " +
                       std::to_string(d);
    return r;
  }
  for (const auto& c : m)
    if (c.length() != d) {
      r.counterexample = "map column of wrong length";
      return r;
    }
  r.order_two = true;
  for (Index i = 0; i < d && r.order_two; ++i) {
    if (!(apply(m, m[i]) == alg.basis(i))) {
      r.order_two = false;
      r.counterexample = "(" + alg.labels()[i] + ")** != " + alg.labels()[i];
    }
  }
  r.anti_mult = true;
  for (Index i = 0; i < d && r.anti_mult; ++i)
    for (Index j = 0; j < d; ++j) {
      Vector lhs = apply(m, alg.product(i, j));
      Vector rhs = alg.multiply(m[j], m[i]);
      if (!(lhs == rhs)) {
        r.anti_mult = false;
        if (!r.counterexample)
          r.counterexample = "(ab)* != b*a* at " + pair_str(alg.labels(), i, j);
        break;
      }
    }
  return r;
}

// ---------------------------------------------------------------- center, ±

Subspace center(const StructureAlgebra& a) {
  const Index d = static_cast<Index>(a.dim());
  // Unknown z = sum z_j b_j; equations (z b_i - b_i z)_k = 0.
  std::vector<Vector> eqs;
  for (Index i = 0; i < d; ++i) {
    std::vector<Vector> rows(d, Vector(d));
    for (Index j = 0; j < d; ++j) {
      Vector c = a.product(j, i) - a.product(i, j);
      for (const auto& [k, q] : c) rows[k].set(j, q);
    }
    for (auto& r : rows)
      if (!r.is_zero()) eqs.push_back(std::move(r));
  }
  return nullspace_of_rows(d, eqs);
}

std::pair<Subspace, Subspace> plus_minus(const StructureAlgebra& alg, const LinearMap& inv) {
  auto rep = check_involution(alg, inv);
  if (!rep.ok()) throw Error("not an involution: " + rep.counterexample.value_or("?"));
  Subspace plus(alg.dim()), minus(alg.dim());
  for (Index i = 0; i < alg.dim(); ++i) {
    Vector b = alg.basis(i);
    plus.insert(b + inv[i]);
    minus.insert(b - inv[i]);
  }
  return {plus, minus};
}

// ---------------------------------------------------------------- StarAlgebra

StarAlgebra::StarAlgebra(StructureAlgebra alg, LinearMap involution, std::string name)
    : alg_(std::move(alg)), inv_(std::move(involution)), name_(std::move(name)) {
  auto [p, m] = plus_minus(alg_, inv_);
  plus_ = std::move(p);
  minus_ = std::move(m);
  center_ = pistar::center(alg_);
}

StarAlgebra StarAlgebra::with_name(std::string name) const {
  StarAlgebra s = *this;
  s.name_ = std::move(name);
  return s;
}

StarAlgebra StarAlgebra::with_embedding(std::shared_ptr<const MatrixEmbedding> e) const {
  StarAlgebra s = *this;
  s.embedding_ = std::move(e);
  return s;
}

StarAlgebra StarAlgebra::with_envelope(std::shared_ptr<const EnvelopeInfo> e,
                                       Subspace true_center) const {
  StarAlgebra s = *this;
  s.envelope_ = std::move(e);
  s.center_ = std::move(true_center);
  return s;
}

Vector multiply(const StarAlgebra& a, const Vector& u, const Vector& v) { return a.multiply(u, v); }
Vector involve(const StarAlgebra& a, const Vector& u) { return a.involve(u); }

// ---------------------------------------------------------------- closures

Subspace star_subalgebra_closure(const StarAlgebra& a, std::span<const Vector> gens) {
  Subspace s(a.dim());
  std::vector<Vector> members;  // independent elements in insertion order
  std::vector<Vector> queue;
  auto push = [&](const Vector& v) {
    if (s.insert(v)) {
      members.push_back(v);
      queue.push_back(v);
    }
  };
  for (const auto& g : gens) {
    push(g);
    push(a.involve(g));
  }
  std::size_t done = 0;
  while (done < queue.size()) {
    Vector w = queue[done++];
    push(a.involve(w));
    const std::size_t m = members.size();
    for (std::size_t t = 0; t < m; ++t) {
      Vector x = members[t];
      push(a.multiply(w, x));
      push(a.multiply(x, w));
    }
  }
  return s;
}

Subspace star_ideal_closure(const StarAlgebra& a, const Subspace& sub, std::span<const Vector> gens) {
  for (const auto& g : gens)
    if (!sub.contains(g)) throw Error("ideal generator lies outside the subalgebra");
  Subspace s(a.dim());
  std::vector<Vector> queue;
  auto push = [&](const Vector& v) {
    if (s.insert(v)) queue.push_back(v);
  };
  for (const auto& g : gens) push(g);
  std::size_t done = 0;
  while (done < queue.size()) {
    Vector w = queue[done++];
    push(a.involve(w));
    for (const auto& b : sub.rows()) {
      push(a.multiply(b, w));
      push(a.multiply(w, b));
    }
  }
  return s;
}

// ---------------------------------------------------------------- quotient

Quotient::Quotient(const StarAlgebra& a, const Subspace& sub, const Subspace& ideal) {
  if (!sub.contains(ideal)) throw Error("quotient: ideal is not contained in the subalgebra");
  for (const auto& r : ideal.rows()) {
    if (!ideal.contains(a.involve(r))) throw Error("quotient: ideal is not *-stable");
    for (const auto& b : sub.rows()) {
      if (!ideal.contains(a.multiply(b, r)) || !ideal.contains(a.multiply(r, b)))
        throw Error("quotient: ideal is not two-sided");
    }
  }
  for (const auto& x : sub.rows())
    for (const auto& y : sub.rows())
      if (!sub.contains(a.multiply(x, y))) throw Error("quotient: subspace is not a subalgebra");

  Subspace grown = ideal;
  for (const auto& r : sub.rows())
    if (grown.insert(r)) reps_.push_back(r);
  ideal_dim_ = ideal.dim();
  std::vector<Vector> gens = ideal.rows();
  for (const auto& r : reps_) gens.push_back(r);
  solver_ = BasisSolver(a.dim(), gens);

  const std::size_t q = reps_.size();
  std::vector<std::string> labels;
  for (std::size_t i = 0; i < q; ++i) labels.push_back("[" + format_element(a, reps_[i]) + "]");
  std::vector<std::vector<Vector>> table(q, std::vector<Vector>(q, Vector(q)));
  for (std::size_t i = 0; i < q; ++i)
    for (std::size_t j = 0; j < q; ++j) table[i][j] = project(a.multiply(reps_[i], reps_[j]));
  LinearMap inv;
  for (std::size_t i = 0; i < q; ++i) inv.push_back(project(a.involve(reps_[i])));
  algebra_ = StarAlgebra(StructureAlgebra(std::move(labels), std::move(table)), std::move(inv),
                         a.name().empty() ? std::string() : a.name() + "/I");
}

Vector Quotient::project(const Vector& v) const {
  Vector c = solver_.coordinates_or_throw(v);
  Vector out(reps_.size());
  for (const auto& [i, q] : c)
    if (i >= ideal_dim_) out.set(static_cast<Index>(i - ideal_dim_), q);
  return out;
}

Quotient quotient(const StarAlgebra& a, const Subspace& sub, const Subspace& ideal) {
  return Quotient(a, sub, ideal);
}

// ---------------------------------------------------------------- isomorphism

IsomorphismReport check_star_isomorphism(const StarAlgebra& a, const StarAlgebra& b,
                                         const LinearMap& m) {
  IsomorphismReport r;
  if (a.dim() != b.dim() || m.size() != a.dim()) {
    r.counterexample = "dimension mismatch: " + std::to_string(a.dim()) + " vs " +
                       std::to_string(b.dim());
    return r;
  }
  for (const auto& c : m)
    if (c.length() != b.dim()) {
      r.counterexample = "map column of wrong length";
      return r;
    }
  r.bijective = rank_of(m, b.dim()) == a.dim();
  if (!r.bijective) r.counterexample = "map is not bijective";
  r.multiplicative = true;
  const Index d = static_cast<Index>(a.dim());
  for (Index i = 0; i < d && r.multiplicative; ++i)
    for (Index j = 0; j < d; ++j) {
      if (!(apply(m, a.alg().product(i, j)) == b.multiply(m[i], m[j]))) {
        r.multiplicative = false;
        if (!r.counterexample)
          r.counterexample = "m(xy) != m(x)m(y) at " + pair_str(a.alg().labels(), i, j);
        break;
      }
    }
  r.star_compatible = true;
  for (Index i = 0; i < d; ++i) {
    if (!(apply(m, a.involution()[i]) == b.involve(m[i]))) {
      r.star_compatible = false;
      if (!r.counterexample) r.counterexample = "m(x*) != m(x)* at " + a.alg().labels()[i];
      break;
    }
  }
  return r;
}

// ---------------------------------------------------------------- constructions

Vector join(const Vector& x, const Vector& y) {
  Vector v(x.length() + y.length());
  for (const auto& [i, q] : x) v.set(i, q);
  for (const auto& [i, q] : y) v.set(static_cast<Index>(x.length() + i), q);
  return v;
}

namespace {

Vector shift(const Vector& v, std::size_t total, std::size_t offset) {
  Vector out(total);
  for (const auto& [i, q] : v) out.set(static_cast<Index>(i + offset), q);
  return out;
}

}  // namespace

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b) {
  const std::size_t da = a.dim(), db = b.dim(), d = da + db;
  std::vector<std::string> labels;
  for (const auto& l : a.labels()) labels.push_back("(" + l + ",0)");
  for (const auto& l : b.labels()) labels.push_back("(0," + l + ")");
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (Index i = 0; i < da; ++i)
    for (Index j = 0; j < da; ++j) table[i][j] = shift(a.product(i, j), d, 0);
  for (Index i = 0; i < db; ++i)
    for (Index j = 0; j < db; ++j) table[da + i][da + j] = shift(b.product(i, j), d, da);
  std::optional<Vector> unit;
  if (a.unit() && b.unit()) unit = join(*a.unit(), *b.unit());
  return StructureAlgebra(std::move(labels), std::move(table), std::move(unit));
}

StructureAlgebra opposite(const StructureAlgebra& a) {
  const Index d = static_cast<Index>(a.dim());
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) table[i][j] = a.product(j, i);
  return StructureAlgebra(a.labels(), std::move(table), a.unit());
}

StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b) {
  StructureAlgebra s = direct_sum(a.alg(), b.alg());
  const std::size_t d = s.dim();
  LinearMap inv;
  for (const auto& c : a.involution()) inv.push_back(shift(c, d, 0));
  for (const auto& c : b.involution()) inv.push_back(shift(c, d, a.dim()));
  std::string name;
  if (!a.name().empty() && !b.name().empty()) name = a.name() + "+" + b.name();
  return StarAlgebra(std::move(s), std::move(inv), name);
}

StarAlgebra opposite(const StarAlgebra& a) {
  return StarAlgebra(opposite(a.alg()), a.involution(), a.name().empty() ? "" : a.name() + "^op");
}

StarAlgebra with_exchange(const StructureAlgebra& a, std::string name) {
  StructureAlgebra s = direct_sum(a, opposite(a));
  const std::size_t n = a.dim(), d = 2 * n;
  LinearMap inv(d);
  for (Index i = 0; i < n; ++i) {
    inv[i] = Vector::unit(d, static_cast<Index>(n + i));
    inv[n + i] = Vector::unit(d, i);
  }
  return StarAlgebra(std::move(s), std::move(inv), std::move(name));
}

// ---------------------------------------------------------------- super

namespace {

int sign_of(int pa, int pb) { return (pa & pb) ? -1 : 1; }

// parity of a nonzero vector, or -1 if it mixes parities
int vector_parity(const std::vector<int>& parity, const Vector& v) {
  int p = -2;
  for (const auto& [i, q] : v) {
    if (p == -2)
      p = parity[i];
    else if (p != parity[i])
      return -1;
  }
  return p;
}

}  // namespace

void check_grading(const SuperAlgebra& s) {
  const Index d = static_cast<Index>(s.alg.dim());
  if (s.parity.size() != d) throw Error("parity list has wrong length");
  for (int p : s.parity)
    if (p != 0 && p != 1) throw Error("parity entries must be 0 or 1");
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      const Vector& v = s.alg.product(i, j);
      if (v.is_zero()) continue;
      int p = vector_parity(s.parity, v);
      if (p != ((s.parity[i] + s.parity[j]) & 1))
        throw Error("grading not multiplicative at " + pair_str(s.alg.labels(), i, j));
    }
}

SuperReport check_superinvolution(const SuperStarAlgebra& s) {
  SuperReport r;
  const Index d = static_cast<Index>(s.alg.dim());
  try {
    check_grading(s.graded());
  } catch (const Error& e) {
    r.counterexample = e.what();
    return r;
  }
  if (s.superinv.size() != d) {
    r.counterexample = "map has wrong size";
    return r;
  }
  r.graded = true;
  for (Index i = 0; i < d; ++i) {
    int p = vector_parity(s.parity, s.superinv[i]);
    if (!s.superinv[i].is_zero() && p != s.parity[i]) {
      r.graded = false;
      r.counterexample = "map does not preserve the parity of " + s.alg.labels()[i];
      return r;
    }
  }
  r.order_two = true;
  for (Index i = 0; i < d; ++i)
    if (!(apply(s.superinv, s.superinv[i]) == s.alg.basis(i))) {
      r.order_two = false;
      r.counterexample = "(" + s.alg.labels()[i] + ")## != " + s.alg.labels()[i];
      return r;
    }
  r.super_anti_mult = true;
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      Vector lhs = apply(s.superinv, s.alg.product(i, j));
      Vector rhs = s.alg.multiply(s.superinv[j], s.superinv[i]);
      rhs *= sign_of(s.parity[i], s.parity[j]);
      if (!(lhs == rhs)) {
        r.super_anti_mult = false;
        r.counterexample = "(ab)# != (-1)^{|a||b|} b#a# at " + pair_str(s.alg.labels(), i, j);
        return r;
      }
    }
  return r;
}

SuperAlgebra super_opposite(const SuperAlgebra& s) {
  const Index d = static_cast<Index>(s.alg.dim());
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j)
      table[i][j] = Rational(sign_of(s.parity[i], s.parity[j])) * s.alg.product(j, i);
  return {StructureAlgebra(s.alg.labels(), std::move(table), s.alg.unit()), s.parity};
}

SuperStarAlgebra exchange_sum(const SuperAlgebra& inner, std::string name) {
  check_grading(inner);
  SuperAlgebra sop = super_opposite(inner);
  StructureAlgebra sum = direct_sum(inner.alg, sop.alg);
  const std::size_t n = inner.alg.dim(), d = 2 * n;
  LinearMap inv(d);
  for (Index i = 0; i < n; ++i) {
    inv[i] = Vector::unit(d, static_cast<Index>(n + i));
    inv[n + i] = Vector::unit(d, i);
  }
  std::vector<int> parity = inner.parity;
  parity.insert(parity.end(), inner.parity.begin(), inner.parity.end());
  return {std::move(sum), std::move(parity), std::move(inv), std::move(name)};
}

// ---------------------------------------------------------------- formatting

std::string format_by_labels(const std::vector<std::string>& labels, const Vector& v) {
  if (v.is_zero()) return "0";
  std::ostringstream os;
  bool first = true;
  for (const auto& [i, q] : v) {
    Rational c = q;
    if (c < 0) {
      os << (first ? "-" : " - ");
      c = -c;
    } else if (!first) {
      os << " + ";
    }
    if (c != 1) os << c.get_str() << " ";
    os << labels[i];
    first = false;
  }
  return os.str();
}

namespace {

std::string unit_label(int n, int i, int j) {
  if (n <= 9) return "e" + std::to_string(i + 1) + std::to_string(j + 1);
  return "e(" + std::to_string(i + 1) + "," + std::to_string(j + 1) + ")";
}

}  // namespace

std::string format_element(const StarAlgebra& a, const Vector& v) {
  if (const auto& e = a.embedding()) {
    Vector m(static_cast<std::size_t>(e->n) * e->n);
    for (const auto& [i, q] : v) m.add_scaled(e->images[i], q);
    std::vector<std::string> labels;
    for (int i = 0; i < e->n; ++i)
      for (int j = 0; j < e->n; ++j) labels.push_back(unit_label(e->n, i, j));
    return format_by_labels(labels, m);
  }
  return format_by_labels(a.alg().labels(), v);
}

}  // namespace pistar
