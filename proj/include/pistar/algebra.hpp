#pragma once

#include <array>
#include <memory>
#include <span>
#include <optional>
#include <string>
#include <vector>

#include "pistar/linalg.hpp"

namespace pistar {

// Finite-dimensional algebra by structure constants: product(i, j) = b_i b_j.
class StructureAlgebra {
 public:
  StructureAlgebra() = default;
  StructureAlgebra(std::vector<std::string> labels, std::vector<std::vector<Vector>> table,
                   std::optional<Vector> unit = std::nullopt);

  std::size_t dim() const { return labels_.size(); }
  const std::vector<std::string>& labels() const { return labels_; }
  const Vector& product(Index i, Index j) const { return table_[i][j]; }
  const std::optional<Vector>& unit() const { return unit_; }

  Vector basis(Index i) const { return Vector::unit(dim(), i); }
  Vector zero() const { return Vector(dim()); }
  Vector multiply(const Vector& u, const Vector& v) const;

  // First basis triple (i, j, k) with (b_i b_j) b_k != b_i (b_j b_k).
  std::optional<std::array<Index, 3>> associativity_counterexample() const;
  bool unit_ok() const;

 private:
  std::vector<std::string> labels_;
  std::vector<std::vector<Vector>> table_;
  std::optional<Vector> unit_;
};

Vector multiply(const StructureAlgebra& a, const Vector& u, const Vector& v);

struct InvolutionReport {
  bool order_two = false;
  bool anti_mult = false;
  std::optional<std::string> counterexample;
  bool ok() const { return order_two && anti_mult; }
};

InvolutionReport check_involution(const StructureAlgebra& alg, const LinearMap& m);

// Realization of the basis inside n x n matrices; entry (i, j) of a matrix
// lives at index i * n + j (0-based).
struct MatrixEmbedding {
  int n = 0;
  std::vector<Vector> images;  // one flattened matrix per basis element
  BasisSolver solver;          // over images

  MatrixEmbedding(int n_, std::vector<Vector> images_)
      : n(n_), images(images_), solver(static_cast<std::size_t>(n_) * n_, std::move(images_)) {}
  Vector coordinates(const Vector& flat) const { return solver.coordinates_or_throw(flat); }
};

struct EnvelopeInfo;  // grassmann.hpp

enum class Sign : std::uint8_t { plus, minus };

class StarAlgebra {
 public:
  StarAlgebra() = default;
  // Checks the involution axioms (not associativity); throws Error on failure.
  StarAlgebra(StructureAlgebra alg, LinearMap involution, std::string name = {});

  const StructureAlgebra& alg() const { return alg_; }
  const LinearMap& involution() const { return inv_; }
  const std::string& name() const { return name_; }
  std::size_t dim() const { return alg_.dim(); }
  const Subspace& plus() const { return plus_; }
  const Subspace& minus() const { return minus_; }
  const Subspace& part(Sign s) const { return s == Sign::plus ? plus_ : minus_; }
  // Center of the algebra used for centrality decisions. For Grassmann
  // envelopes this is the center of the untruncated envelope intersected
  // with the truncation.
  const Subspace& center() const { return center_; }

  Vector multiply(const Vector& u, const Vector& v) const { return alg_.multiply(u, v); }
  Vector involve(const Vector& u) const { return apply(inv_, u); }
  Vector basis(Index i) const { return alg_.basis(i); }
  Vector zero() const { return alg_.zero(); }

  const std::shared_ptr<const MatrixEmbedding>& embedding() const { return embedding_; }
  const std::shared_ptr<const EnvelopeInfo>& envelope() const { return envelope_; }

  StarAlgebra with_name(std::string name) const;
  StarAlgebra with_embedding(std::shared_ptr<const MatrixEmbedding> e) const;
  StarAlgebra with_envelope(std::shared_ptr<const EnvelopeInfo> e, Subspace true_center) const;

 private:
  StructureAlgebra alg_;
  LinearMap inv_;
  std::string name_;
  Subspace plus_, minus_, center_;
  std::shared_ptr<const MatrixEmbedding> embedding_;
  std::shared_ptr<const EnvelopeInfo> envelope_;
};

Vector multiply(const StarAlgebra& a, const Vector& u, const Vector& v);
Vector involve(const StarAlgebra& a, const Vector& u);

Subspace center(const StructureAlgebra& a);
std::pair<Subspace, Subspace> plus_minus(const StructureAlgebra& alg, const LinearMap& inv);

Subspace star_subalgebra_closure(const StarAlgebra& a, std::span<const Vector> gens);
Subspace star_ideal_closure(const StarAlgebra& a, const Subspace& sub, std::span<const Vector> gens);

// B/I with coset representatives obtained by extending I's RREF basis with
// B's RREF rows.
class Quotient {
 public:
  Quotient(const StarAlgebra& a, const Subspace& sub, const Subspace& ideal);

  const StarAlgebra& algebra() const { return algebra_; }
  const std::vector<Vector>& representatives() const { return reps_; }
  // Coordinates of the coset of v (v must lie in sub).
  Vector project(const Vector& v) const;

 private:
  StarAlgebra algebra_;
  std::vector<Vector> reps_;
  std::size_t ideal_dim_ = 0;
  BasisSolver solver_;
};

Quotient quotient(const StarAlgebra& a, const Subspace& sub, const Subspace& ideal);

struct IsomorphismReport {
  bool bijective = false;
  bool multiplicative = false;
  bool star_compatible = false;
  std::optional<std::string> counterexample;
  bool ok() const { return bijective && multiplicative && star_compatible; }
};

// m maps a's basis to vectors of b.
IsomorphismReport check_star_isomorphism(const StarAlgebra& a, const StarAlgebra& b,
                                         const LinearMap& m);

StructureAlgebra direct_sum(const StructureAlgebra& a, const StructureAlgebra& b);
StructureAlgebra opposite(const StructureAlgebra& a);
StarAlgebra direct_sum(const StarAlgebra& a, const StarAlgebra& b);
StarAlgebra opposite(const StarAlgebra& a);
// A + A^op with (x, y)* = (y, x)
StarAlgebra with_exchange(const StructureAlgebra& a, std::string name = {});
// (x, y) in a + b as one vector
Vector join(const Vector& x, const Vector& y);

// Z/2-graded algebra with homogeneous basis.
struct SuperAlgebra {
  StructureAlgebra alg;
  std::vector<int> parity;
};

struct SuperStarAlgebra {
  StructureAlgebra alg;
  std::vector<int> parity;
  LinearMap superinv;
  std::string name;

  SuperAlgebra graded() const { return {alg, parity}; }
};

struct SuperReport {
  bool graded = false;        // grading multiplicative, map preserves parity
  bool order_two = false;
  bool super_anti_mult = false;
  std::optional<std::string> counterexample;
  bool ok() const { return graded && order_two && super_anti_mult; }
};

SuperReport check_superinvolution(const SuperStarAlgebra& s);
// Throws unless the grading is multiplicative on basis pairs.
void check_grading(const SuperAlgebra& s);

// a o b = (-1)^{|a||b|} b a
SuperAlgebra super_opposite(const SuperAlgebra& s);
// (B + B^sop, exc)
SuperStarAlgebra exchange_sum(const SuperAlgebra& inner, std::string name = {});

// Human-readable element: "e12 - 2 e{1,3}⊗e21" style, using basis labels or
// matrix units when an embedding is present.
std::string format_element(const StarAlgebra& a, const Vector& v);
std::string format_by_labels(const std::vector<std::string>& labels, const Vector& v);

}  // namespace pistar
