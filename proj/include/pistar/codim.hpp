#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "pistar/algebra.hpp"
#include "pistar/starpoly.hpp"

namespace pistar {

// Rows of the evaluation matrix: sign patterns (bit i-1 set when x_i is a
// minus variable) in increasing order, then permutations in lex order.
std::vector<Monomial> pn_basis(int n);
std::size_t pn_dimension(int n);  // 2^n n!

inline constexpr std::size_t kDefaultRowCap = 3840;  // admits n = 5
// PISTAR_ROW_CAP if set and valid, else kDefaultRowCap.
std::size_t row_cap_from_env();

enum class CodimMode { automatic, exact, modular, modular_certified };
enum class RankMethod { exact, modular_certified, modular_uncertified };
std::string to_string(RankMethod m);

struct CodimOptions {
  CodimMode mode = CodimMode::automatic;  // exact up to 400 rows, modular beyond
  std::optional<std::size_t> row_cap;     // default from the environment
  unsigned threads = 1;                   // over sign-pattern blocks
  std::uint64_t prime = kDefaultPrime;
};

struct CodimResult {
  int n = 0;
  std::size_t c_star = 0;
  std::size_t c_z = 0;
  std::size_t c_delta = 0;
  RankMethod method = RankMethod::exact;
};

// Envelopes are evaluated with regular substitutions; their truncation must
// be at least n.
CodimResult codimensions(const StarAlgebra& a, int n, const CodimOptions& opt = {});

// Exact column space (inside F^{n!}) of the block of rows with the given sign
// pattern; outputs taken modulo Z(A) when modulo_center is set.
Subspace block_column_space(const StarAlgebra& a, int n, std::uint32_t pattern, bool modulo_center);

// f must use exactly x_1..x_n once each. Returns the sign pattern and the
// coefficient vector of f in that block's permutation order.
std::pair<std::uint32_t, Vector> block_coefficients(const StarPolynomial& f);

// True iff f's coefficient row annihilates every evaluation column.
bool in_left_kernel(const StarAlgebra& a, const StarPolynomial& f, bool modulo_center = false);

}  // namespace pistar
