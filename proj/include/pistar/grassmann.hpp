#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "pistar/algebra.hpp"

namespace pistar {

// Subsets of {1..k} as bitmasks (bit i-1 for generator i), ordered by size,
// then lexicographically.
std::vector<std::uint32_t> grassmann_subsets(int k);
// "1", "e{1}", "e{1,3}"
std::string subset_label(std::uint32_t mask);
// Sign of e_S e_T for disjoint S, T (0 if they meet).
int grassmann_sign(std::uint32_t s, std::uint32_t t);

// Truncated Grassmann algebra E_k with the superinvolution e_i -> -e_i.
SuperStarAlgebra grassmann_algebra(int k);

struct EnvelopeInfo {
  SuperStarAlgebra base;
  int k = 0;
  std::vector<std::uint32_t> subset;  // per envelope basis element
  std::vector<Index> base_index;      // per envelope basis element
};

// (E_k^0 (x) B^0) + (E_k^1 (x) B^1) with (g (x) a)* = g# (x) a*.
StarAlgebra grassmann_envelope(const SuperStarAlgebra& b, int k, std::string name = {});

// Per slot, a basis of the span of the regular candidates {1 (x) b : b even}
// and {e_{i} (x) b : b odd} (slot i uses generator i), cut down to the
// symmetric or skew part as the slot's sign requires.
using SlotCandidates = std::vector<std::vector<Vector>>;
SlotCandidates regular_substitution_set(const StarAlgebra& a, std::span<const Sign> slot_signs);

// Per slot, the RREF basis of A^+ or A^-.
SlotCandidates full_substitution_set(const StarAlgebra& a, std::span<const Sign> slot_signs);

}  // namespace pistar
