#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "pistar/error.hpp"

namespace pistar {

using Rational = mpq_class;
using Index = std::uint32_t;

Rational parse_rational(const std::string& text);
std::string to_string(const Rational& q);

// Sparse vector over a fixed-length basis. Entries are kept sorted by index
// and no stored entry is zero.
class Vector {
 public:
  using Entry = std::pair<Index, Rational>;

  Vector() = default;
  explicit Vector(std::size_t length) : length_(length) {}

  static Vector unit(std::size_t length, Index i, const Rational& c = 1);
  static Vector dense(std::span<const Rational> values);
  static Vector dense(std::initializer_list<long> values);

  std::size_t length() const { return length_; }
  std::size_t nnz() const { return entries_.size(); }
  bool is_zero() const { return entries_.empty(); }

  Rational get(Index i) const;
  void set(Index i, const Rational& value);
  std::optional<Index> leading() const;

  // this += c * other
  void add_scaled(const Vector& other, const Rational& c);

  Vector& operator+=(const Vector& other);
  Vector& operator-=(const Vector& other);
  Vector& operator*=(const Rational& c);
  Vector operator-() const;

  friend Vector operator+(Vector a, const Vector& b) { return a += b; }
  friend Vector operator-(Vector a, const Vector& b) { return a -= b; }
  friend Vector operator*(const Rational& c, Vector v) { return v *= c; }
  friend Vector operator*(Vector v, const Rational& c) { return v *= c; }

  bool operator==(const Vector& other) const;
  bool operator<(const Vector& other) const;

  const std::vector<Entry>& entries() const { return entries_; }
  auto begin() const { return entries_.begin(); }
  auto end() const { return entries_.end(); }

  std::vector<Rational> to_dense() const;
  // "(1, 0, -1/2)"
  std::string str() const;

 private:
  void require_index(Index i) const;

  std::size_t length_ = 0;
  std::vector<Entry> entries_;
};

void require_same_length(const Vector& a, const Vector& b);
Rational dot(const Vector& a, const Vector& b);

// Linear subspace kept as a basis in reduced row-echelon form.
class Subspace {
 public:
  Subspace() = default;
  explicit Subspace(std::size_t ambient_dim) : ambient_(ambient_dim) {}

  static Subspace span(std::size_t ambient_dim, std::span<const Vector> gens);
  static Subspace whole(std::size_t ambient_dim);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t dim() const { return rows_.size(); }
  bool is_zero() const { return rows_.empty(); }
  const std::vector<Vector>& rows() const { return rows_; }
  const std::vector<Index>& pivots() const { return pivots_; }

  // Remainder of v after clearing the pivot columns with the basis rows.
  Vector reduce(const Vector& v) const;
  bool contains(const Vector& v) const;
  bool contains(const Subspace& other) const;
  // Returns true iff the span grew.
  bool insert(const Vector& v);

  bool operator==(const Subspace& other) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> rows_;
  std::vector<Index> pivots_;
};

Subspace subspace_sum(const Subspace& u, const Subspace& v);
bool subspace_member(const Subspace& s, const Vector& v);
Subspace intersect(const Subspace& u, const Subspace& v);
// Solutions x of  sum_j x_j * columns[j] = 0, as a subspace of F^{columns.size()}.
Subspace nullspace_of_columns(std::size_t rows, std::span<const Vector> columns);
// Solutions x of  row . x = 0 for every given row.
Subspace nullspace_of_rows(std::size_t cols, std::span<const Vector> rows);

inline constexpr std::uint64_t kDefaultPrime = 2147483647ULL;

enum class RankMode { exact, modular };

// Streaming rank. Exact mode keeps an RREF subspace; modular mode keeps an
// echelon basis over Z/p.
class RankAccumulator {
 public:
  explicit RankAccumulator(std::size_t ambient_dim, RankMode mode = RankMode::exact,
                           std::uint64_t prime = kDefaultPrime);

  std::size_t ambient_dim() const { return ambient_; }
  std::size_t rank() const;
  RankMode mode() const { return mode_; }
  std::uint64_t prime() const { return prime_; }
  bool full() const { return rank() == ambient_; }

  bool insert(const Vector& v);
  // Exact mode only.
  const Subspace& span() const;

 private:
  using ModRow = std::vector<std::pair<Index, std::uint64_t>>;
  ModRow to_mod(const Vector& v) const;
  bool insert_mod(ModRow row);

  std::size_t ambient_;
  RankMode mode_;
  std::uint64_t prime_;
  Subspace exact_;
  std::vector<ModRow> mod_rows_;  // sorted by leading index
};

std::pair<RankAccumulator, bool> rref_insert(RankAccumulator acc, const Vector& v);

struct CertifiedRank {
  std::size_t rank = 0;
  std::size_t modular_rank = 0;
  bool certified = false;
};

CertifiedRank rank_modp_then_certify(std::span<const Vector> columns,
                                     std::uint64_t prime = kDefaultPrime,
                                     bool certify = true);

bool is_prime(std::uint64_t n);
std::uint64_t mod_reduce(const Rational& q, std::uint64_t p);

// Expresses vectors as combinations of a fixed independent family.
class BasisSolver {
 public:
  BasisSolver() = default;
  // Throws if gens are dependent.
  BasisSolver(std::size_t ambient_dim, std::vector<Vector> gens);

  std::size_t size() const { return gens_.size(); }
  const std::vector<Vector>& gens() const { return gens_; }
  // Coefficient vector (length size()) or nullopt if v is outside the span.
  std::optional<Vector> coordinates(const Vector& v) const;
  Vector coordinates_or_throw(const Vector& v) const;

 private:
  std::size_t ambient_ = 0;
  std::vector<Vector> gens_;
  std::vector<Vector> rows_;     // RREF of gens
  std::vector<Vector> combos_;   // rows_[i] = sum combos_[i][k] gens_[k]
  std::vector<Index> pivots_;
};

// Linear map given by the images of the basis vectors (the columns).
using LinearMap = std::vector<Vector>;

Vector apply(const LinearMap& m, const Vector& v);
LinearMap compose(const LinearMap& outer, const LinearMap& inner);
LinearMap identity_map(std::size_t n);
std::size_t rank_of(const LinearMap& m, std::size_t codomain_dim);

}  // namespace pistar
