#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <variant>
#include <vector>

#include "pistar/algebra.hpp"

namespace pistar {

// ---- matrix algebras, basis e_ij in row-major order

StructureAlgebra full_matrix_algebra(int n);
LinearMap transpose_involution(int n);
LinearMap reflection_involution(int n);   // e_ij -> e_{n+1-j, n+1-i}
LinearMap symplectic_involution(int n);   // reflection twisted by delta(i) delta(j)

enum class MatrixInvolution { transpose, reflection, symplectic };

// Subalgebra of M_n spanned by the given flattened n x n matrices, with the
// restriction of the chosen involution. Throws if not closed.
StarAlgebra matrix_star_algebra(int n, std::vector<std::string> labels, std::vector<Vector> basis,
                                MatrixInvolution inv, std::string name);

StarAlgebra matrix_algebra(int n, MatrixInvolution inv);

// Flattened matrix from "e12+e56", "e22-e33", "2 e14", "-1/2 e(10,3)".
Vector parse_matrix_units(int n, std::string_view text);

// Element of a catalog algebra: matrix-unit syntax when the algebra has an
// embedding, otherwise a sum of basis labels.
Vector parse_element(const StarAlgebra& a, std::string_view text);

// ---- named UT subalgebras

struct NamedSubalgebra {
  int n = 0;
  std::vector<std::string> labels;
  std::vector<Vector> basis;  // flattened n x n
};

NamedSubalgebra ut_named(std::string_view name);  // N, M, P, Q, R
StarAlgebra ut_star(std::string_view name, MatrixInvolution inv, std::string label);

// ---- super-algebras

SuperAlgebra graded_matrix(int k, int l);  // M_{k,l}(F)
SuperAlgebra queer(int n);                 // Q(n) = M_n(F) + c M_n(F)
SuperStarAlgebra trp_super(int k);         // (M_{k,k}, trp)
SuperStarAlgebra osp_super(int k, int two_s);
SuperStarAlgebra mkl_exchange(int k, int l);  // (M_{k,l} + M_{k,l}^sop, exc)
SuperStarAlgebra qn_exchange(int n);          // (Q(n) + Q(n)^sop, exc)

struct SimpleSuperKind {
  enum class Kind { mkl, qn, trp, osp, exchange_sum } kind;
  int a = 0;
  int b = 0;
  std::optional<SuperAlgebra> inner;
};
SuperStarAlgebra simple_super(const SimpleSuperKind& kind);

// ---- the fourteen algebras

// grassmann_k is used by A3 and A4 only.
StarAlgebra catalog_algebra(int i, int grassmann_k = 1);
int catalog_index(std::string_view name);  // "A7" -> 7, else 0

struct Component {
  std::string label;
  Subspace space;
  std::vector<Vector> idempotents;  // one for F, two for F+F
  std::optional<Vector> e2_minus;   // F+F only
};

struct WedderburnData {
  std::vector<Component> components;
  Subspace radical;
  StarAlgebra source;
};

// Validates: components *-closed subalgebras with trivial pairwise
// intersections, J *-closed and nilpotent, components + J = A.
WedderburnData make_wedderburn(StarAlgebra source, std::vector<Component> comps, Subspace radical);
WedderburnData wedderburn_data(int i);

// ---- name lookup used by the command line

using CatalogItem = std::variant<StarAlgebra, SuperStarAlgebra>;
CatalogItem catalog_lookup(std::string_view name, int grassmann_k = 1);
std::vector<std::string> catalog_names();

}  // namespace pistar
