#include "pistar/linalg.hpp"

#include <algorithm>
#include <sstream>

namespace pistar {

Rational parse_rational(const std::string& text) {
  std::string t;
  for (char c : text)
    if (c != ' ') t += c;
  if (t.empty()) throw ParseError("empty rational", 0);
  std::size_t pos = (t[0] == '-' || t[0] == '+') ? 1 : 0;
  bool seen_digit = false, seen_slash = false;
  for (std::size_t i = pos; i < t.size(); ++i) {
    if (t[i] == '/' && !seen_slash && seen_digit) {
      seen_slash = true;
      seen_digit = false;
    } else if (t[i] >= '0' && t[i] <= '9') {
      seen_digit = true;
    } else {
      throw ParseError("bad rational '" + text + "'", i);
    }
  }
  if (!seen_digit) throw ParseError("bad rational '" + text + "'", t.size());
  if (t[0] == '+') t.erase(0, 1);
  Rational q(t);
  if (q.get_den() == 0) throw ParseError("zero denominator in '" + text + "'", 0);
  q.canonicalize();
  return q;
}

std::string to_string(const Rational& q) { return q.get_str(); }

// ---------------------------------------------------------------- Vector

Vector Vector::unit(std::size_t length, Index i, const Rational& c) {
  Vector v(length);
  v.set(i, c);
  return v;
}

Vector Vector::dense(std::span<const Rational> values) {
  Vector v(values.size());
  for (std::size_t i = 0; i < values.size(); ++i)
    if (values[i] != 0) v.entries_.emplace_back(static_cast<Index>(i), values[i]);
  return v;
}

Vector Vector::dense(std::initializer_list<long> values) {
  std::vector<Rational> q;
  for (long x : values) q.emplace_back(x);
  return dense(q);
}

void Vector::require_index(Index i) const {
  if (i >= length_)
    throw DimensionError("index " + std::to_string(i) + " out of range for length " +
                         std::to_string(length_));
}

Rational Vector::get(Index i) const {
  require_index(i);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) return it->second;
  return 0;
}

void Vector::set(Index i, const Rational& value) {
  require_index(i);
  auto it = std::lower_bound(entries_.begin(), entries_.end(), i,
                             [](const Entry& e, Index k) { return e.first < k; });
  if (it != entries_.end() && it->first == i) {
    if (value == 0)
      entries_.erase(it);
    else
      it->second = value;
  } else if (value != 0) {
    entries_.insert(it, Entry{i, value});
  }
}

std::optional<Index> Vector::leading() const {
  if (entries_.empty()) return std::nullopt;
  return entries_.front().first;
}

void Vector::add_scaled(const Vector& other, const Rational& c) {
  require_same_length(*this, other);
  if (c == 0 || other.is_zero()) return;
  std::vector<Entry> out;
  out.reserve(entries_.size() + other.entries_.size());
  auto a = entries_.begin();
  auto b = other.entries_.begin();
  while (a != entries_.end() || b != other.entries_.end()) {
    if (b == other.entries_.end() || (a != entries_.end() && a->first < b->first)) {
      out.push_back(std::move(*a));
      ++a;
    } else if (a == entries_.end() || b->first < a->first) {
      out.emplace_back(b->first, c * b->second);
      ++b;
    } else {
      Rational s = a->second + c * b->second;
      if (s != 0) out.emplace_back(a->first, std::move(s));
      ++a;
      ++b;
    }
  }
  entries_ = std::move(out);
}

Vector& Vector::operator+=(const Vector& other) {
  add_scaled(other, 1);
  return *this;
}

Vector& Vector::operator-=(const Vector& other) {
  add_scaled(other, -1);
  return *this;
}

Vector& Vector::operator*=(const Rational& c) {
  if (c == 0) {
    entries_.clear();
  } else {
    for (auto& e : entries_) e.second *= c;
  }
  return *this;
}

Vector Vector::operator-() const {
  Vector v = *this;
  for (auto& e : v.entries_) e.second = -e.second;
  return v;
}

bool Vector::operator==(const Vector& other) const {
  return length_ == other.length_ && entries_ == other.entries_;
}

bool Vector::operator<(const Vector& other) const {
  if (length_ != other.length_) return length_ < other.length_;
  return entries_ < other.entries_;
}

std::vector<Rational> Vector::to_dense() const {
  std::vector<Rational> out(length_);
  for (const auto& [i, q] : entries_) out[i] = q;
  return out;
}

std::string Vector::str() const {
  std::ostringstream os;
  os << "(";
  auto d = to_dense();
  for (std::size_t i = 0; i < d.size(); ++i) os << (i ? ", " : "") << d[i].get_str();
  os << ")";
  return os.str();
}

void require_same_length(const Vector& a, const Vector& b) {
  if (a.length() != b.length())
    throw DimensionError("vector length mismatch: " + std::to_string(a.length()) + " vs " +
                         std::to_string(b.length()));
}

Rational dot(const Vector& a, const Vector& b) {
  require_same_length(a, b);
  Rational s = 0;
  auto x = a.begin();
  auto y = b.begin();
  while (x != a.end() && y != b.end()) {
    if (x->first < y->first)
      ++x;
    else if (y->first < x->first)
      ++y;
    else {
      s += x->second * y->second;
      ++x;
      ++y;
    }
  }
  return s;
}

// ---------------------------------------------------------------- Subspace

Subspace Subspace::span(std::size_t ambient_dim, std::span<const Vector> gens) {
  Subspace s(ambient_dim);
  for (const auto& g : gens) s.insert(g);
  return s;
}

Subspace Subspace::whole(std::size_t ambient_dim) {
  Subspace s(ambient_dim);
  for (std::size_t i = 0; i < ambient_dim; ++i) {
    s.rows_.push_back(Vector::unit(ambient_dim, static_cast<Index>(i)));
    s.pivots_.push_back(static_cast<Index>(i));
  }
  return s;
}

Vector Subspace::reduce(const Vector& v) const {
  if (v.length() != ambient_)
    throw DimensionError("subspace ambient " + std::to_string(ambient_) + " vs vector length " +
                         std::to_string(v.length()));
  Vector r = v;
  for (std::size_t k = 0; k < rows_.size(); ++k) {
    Rational c = r.get(pivots_[k]);
    if (c != 0) r.add_scaled(rows_[k], -c);
  }
  return r;
}

bool Subspace::contains(const Vector& v) const { return reduce(v).is_zero(); }

bool Subspace::contains(const Subspace& other) const {
  for (const auto& r : other.rows_)
    if (!contains(r)) return false;
  return true;
}

bool Subspace::insert(const Vector& v) {
  Vector r = reduce(v);
  if (r.is_zero()) return false;
  Index p = *r.leading();
  r *= Rational(1) / r.get(p);
  for (auto& row : rows_) {
    Rational c = row.get(p);
    if (c != 0) row.add_scaled(r, -c);
  }
  auto pos = std::lower_bound(pivots_.begin(), pivots_.end(), p) - pivots_.begin();
  pivots_.insert(pivots_.begin() + pos, p);
  rows_.insert(rows_.begin() + pos, std::move(r));
  return true;
}

bool Subspace::operator==(const Subspace& other) const {
  return ambient_ == other.ambient_ && rows_ == other.rows_;
}

Subspace subspace_sum(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("subspace_sum: ambient mismatch");
  Subspace s = u;
  for (const auto& r : v.rows()) s.insert(r);
  return s;
}

bool subspace_member(const Subspace& s, const Vector& v) { return s.contains(v); }

Subspace nullspace_of_rows(std::size_t cols, std::span<const Vector> rows) {
  Subspace eq(cols);
  for (const auto& r : rows) eq.insert(r);
  // Free columns give one basis vector each.
  std::vector<bool> is_pivot(cols, false);
  for (Index p : eq.pivots()) is_pivot[p] = true;
  Subspace out(cols);
  for (std::size_t f = 0; f < cols; ++f) {
    if (is_pivot[f]) continue;
    Vector x = Vector::unit(cols, static_cast<Index>(f));
    for (std::size_t k = 0; k < eq.dim(); ++k) {
      Rational c = eq.rows()[k].get(static_cast<Index>(f));
      if (c != 0) x.set(eq.pivots()[k], -c);
    }
    out.insert(x);
  }
  return out;
}

Subspace nullspace_of_columns(std::size_t rows, std::span<const Vector> columns) {
  // Transpose: equation i reads sum_j columns[j][i] x_j = 0.
  std::vector<Vector> eqs(rows, Vector(columns.size()));
  for (std::size_t j = 0; j < columns.size(); ++j) {
    if (columns[j].length() != rows) throw DimensionError("nullspace: column length mismatch");
    for (const auto& [i, q] : columns[j]) eqs[i].set(static_cast<Index>(j), q);
  }
  return nullspace_of_rows(columns.size(), eqs);
}

Subspace intersect(const Subspace& u, const Subspace& v) {
  if (u.ambient_dim() != v.ambient_dim()) throw DimensionError("intersect: ambient mismatch");
  // x in u ∩ v  iff  x = sum a_i u_i = sum b_j v_j.
  std::vector<Vector> cols;
  for (const auto& r : u.rows()) cols.push_back(r);
  for (const auto& r : v.rows()) cols.push_back(-r);
  Subspace ker = nullspace_of_columns(u.ambient_dim(), cols);
  Subspace out(u.ambient_dim());
  for (const auto& k : ker.rows()) {
    Vector x(u.ambient_dim());
    for (const auto& [i, q] : k)
      if (i < u.dim()) x.add_scaled(u.rows()[i], q);
    out.insert(x);
  }
  return out;
}

// ---------------------------------------------------------------- modular rank

namespace {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>((static_cast<unsigned __int128>(a) * b) % p);
}

std::uint64_t powmod(std::uint64_t a, std::uint64_t e, std::uint64_t p) {
  std::uint64_t r = 1;
  a %= p;
  while (e) {
    if (e & 1) r = mulmod(r, a, p);
    a = mulmod(a, a, p);
    e >>= 1;
  }
  return r;
}

std::uint64_t invmod(std::uint64_t a, std::uint64_t p) { return powmod(a, p - 2, p); }

std::uint64_t mpz_mod(const mpz_class& z, std::uint64_t p) {
  mpz_class r;
  mpz_class pp;
  mpz_import(pp.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(r.get_mpz_t(), z.get_mpz_t(), pp.get_mpz_t());
  std::uint64_t out = 0;
  if (r != 0) mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, r.get_mpz_t());
  return out;
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    if (n % d == 0) return n == d;
  }
  std::uint64_t d = n - 1;
  int s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // Deterministic Miller-Rabin bases for 64-bit inputs.
  for (std::uint64_t a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
    std::uint64_t x = powmod(a, d, n);
    if (x == 1 || x == n - 1) continue;
    bool composite = true;
    for (int r = 1; r < s; ++r) {
      x = mulmod(x, x, n);
      if (x == n - 1) {
        composite = false;
        break;
      }
    }
    if (composite) return false;
  }
  return true;
}

std::uint64_t mod_reduce(const Rational& q, std::uint64_t p) {
  std::uint64_t den = mpz_mod(q.get_den(), p);
  if (den == 0) throw Error("denominator divisible by the modulus");
  return mulmod(mpz_mod(q.get_num(), p), invmod(den, p), p);
}

RankAccumulator::RankAccumulator(std::size_t ambient_dim, RankMode mode, std::uint64_t prime)
    : ambient_(ambient_dim), mode_(mode), prime_(prime), exact_(ambient_dim) {
  if (mode == RankMode::modular) {
    if (prime <= (1ULL << 20)) throw Error("modulus must exceed 2^20");
    if (prime >= (1ULL << 62) || !is_prime(prime)) throw Error("modulus must be a prime below 2^62");
  }
}

std::size_t RankAccumulator::rank() const {
  return mode_ == RankMode::exact ? exact_.dim() : mod_rows_.size();
}

const Subspace& RankAccumulator::span() const {
  if (mode_ != RankMode::exact) throw Error("span() is only available in exact mode");
  return exact_;
}

RankAccumulator::ModRow RankAccumulator::to_mod(const Vector& v) const {
  ModRow row;
  for (const auto& [i, q] : v) {
    std::uint64_t x = mod_reduce(q, prime_);
    if (x) row.emplace_back(i, x);
  }
  return row;
}

bool RankAccumulator::insert_mod(ModRow row) {
  const std::uint64_t p = prime_;
  for (const auto& basis : mod_rows_) {
    if (row.empty()) return false;
    Index lead = basis.front().first;
    if (row.front().first > lead) continue;
    auto it = std::lower_bound(row.begin(), row.end(), lead,
                               [](const auto& e, Index k) { return e.first < k; });
    if (it == row.end() || it->first != lead) continue;
    // row -= c * basis, basis has leading coefficient 1
    std::uint64_t c = it->second;
    ModRow out;
    out.reserve(row.size() + basis.size());
    auto a = row.begin();
    auto b = basis.begin();
    while (a != row.end() || b != basis.end()) {
      if (b == basis.end() || (a != row.end() && a->first < b->first)) {
        out.push_back(*a++);
      } else if (a == row.end() || b->first < a->first) {
        out.emplace_back(b->first, (p - mulmod(c, b->second, p)) % p);
        ++b;
      } else {
        std::uint64_t x = (a->second + p - mulmod(c, b->second, p)) % p;
        if (x) out.emplace_back(a->first, x);
        ++a;
        ++b;
      }
    }
    row = std::move(out);
  }
  if (row.empty()) return false;
  std::uint64_t inv = invmod(row.front().second, p);
  for (auto& e : row) e.second = mulmod(e.second, inv, p);
  Index lead = row.front().first;
  auto pos = std::lower_bound(mod_rows_.begin(), mod_rows_.end(), lead,
                              [](const ModRow& r, Index k) { return r.front().first < k; });
  mod_rows_.insert(pos, std::move(row));
  return true;
}

bool RankAccumulator::insert(const Vector& v) {
  if (v.length() != ambient_)
    throw DimensionError("rank accumulator ambient " + std::to_string(ambient_) +
                         " vs vector length " + std::to_string(v.length()));
  if (mode_ == RankMode::exact) return exact_.insert(v);
  return insert_mod(to_mod(v));
}

std::pair<RankAccumulator, bool> rref_insert(RankAccumulator acc, const Vector& v) {
  bool grew = acc.insert(v);
  return {std::move(acc), grew};
}

CertifiedRank rank_modp_then_certify(std::span<const Vector> columns, std::uint64_t prime,
                                     bool certify) {
  CertifiedRank out;
  if (columns.empty()) {
    if (prime <= (1ULL << 20)) throw Error("modulus must exceed 2^20");
    out.certified = certify;
    return out;
  }
  const std::size_t n = columns.front().length();
  RankAccumulator mod(n, RankMode::modular, prime);
  std::vector<bool> pivot(columns.size(), false);
  for (std::size_t i = 0; i < columns.size(); ++i) pivot[i] = mod.insert(columns[i]);
  out.modular_rank = mod.rank();
  out.rank = out.modular_rank;
  if (!certify) return out;
  // Columns independent mod p are independent over Q; then every other column
  // is tested exactly against that span and absorbed if it escapes.
  Subspace exact(n);
  for (std::size_t i = 0; i < columns.size(); ++i)
    if (pivot[i]) exact.insert(columns[i]);
  for (std::size_t i = 0; i < columns.size() && exact.dim() < n; ++i)
    if (!pivot[i]) exact.insert(columns[i]);
  out.rank = exact.dim();
  out.certified = true;
  return out;
}

// ---------------------------------------------------------------- BasisSolver

BasisSolver::BasisSolver(std::size_t ambient_dim, std::vector<Vector> gens)
    : ambient_(ambient_dim), gens_(std::move(gens)) {
  const std::size_t m = gens_.size();
  for (std::size_t k = 0; k < m; ++k) {
    Vector r = gens_[k];
    if (r.length() != ambient_) throw DimensionError("BasisSolver: generator length mismatch");
    Vector combo = Vector::unit(m, static_cast<Index>(k));
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      Rational c = r.get(pivots_[t]);
      if (c != 0) {
        r.add_scaled(rows_[t], -c);
        combo.add_scaled(combos_[t], -c);
      }
    }
    if (r.is_zero()) throw Error("BasisSolver: generators are linearly dependent");
    Index p = *r.leading();
    Rational inv = Rational(1) / r.get(p);
    r *= inv;
    combo *= inv;
    for (std::size_t t = 0; t < rows_.size(); ++t) {
      Rational c = rows_[t].get(p);
      if (c != 0) {
        rows_[t].add_scaled(r, -c);
        combos_[t].add_scaled(combo, -c);
      }
    }
    rows_.push_back(std::move(r));
    combos_.push_back(std::move(combo));
    pivots_.push_back(p);
  }
}

std::optional<Vector> BasisSolver::coordinates(const Vector& v) const {
  if (v.length() != ambient_) throw DimensionError("BasisSolver: vector length mismatch");
  Vector r = v;
  Vector out(gens_.size());
  for (std::size_t t = 0; t < rows_.size(); ++t) {
    Rational c = r.get(pivots_[t]);
    if (c != 0) {
      r.add_scaled(rows_[t], -c);
      out.add_scaled(combos_[t], c);
    }
  }
  if (!r.is_zero()) return std::nullopt;
  return out;
}

Vector BasisSolver::coordinates_or_throw(const Vector& v) const {
  auto c = coordinates(v);
  if (!c) throw Error("vector lies outside the span of the basis");
  return *c;
}

// ---------------------------------------------------------------- maps

Vector apply(const LinearMap& m, const Vector& v) {
  if (v.length() != m.size())
    throw DimensionError("map domain " + std::to_string(m.size()) + " vs vector length " +
                         std::to_string(v.length()));
  if (m.empty()) return Vector(0);
  Vector out(m.front().length());
  for (const auto& [i, q] : v) out.add_scaled(m[i], q);
  return out;
}

LinearMap compose(const LinearMap& outer, const LinearMap& inner) {
  LinearMap out;
  out.reserve(inner.size());
  for (const auto& col : inner) out.push_back(apply(outer, col));
  return out;
}

LinearMap identity_map(std::size_t n) {
  LinearMap m;
  for (std::size_t i = 0; i < n; ++i) m.push_back(Vector::unit(n, static_cast<Index>(i)));
  return m;
}

std::size_t rank_of(const LinearMap& m, std::size_t codomain_dim) {
  Subspace s(codomain_dim);
  for (const auto& c : m) s.insert(c);
  return s.dim();
}

}  // namespace pistar
