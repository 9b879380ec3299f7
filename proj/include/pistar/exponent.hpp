#pragma once

#include <map>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "pistar/catalog.hpp"
#include "pistar/evaluator.hpp"

namespace pistar {

// Span of all products s_1 s_2 ... s_m with s_i taken from spaces[i].
Subspace subspace_product_chain(std::span<const Subspace> spaces, const StructureAlgebra& a);

struct Admissibility {
  bool admissible = false;
  std::vector<std::size_t> ordering;  // replayable: B_{o1} J B_{o2} J ... != 0
};

// Tries the permutations of the subset in lex order; exactly k-1 radical
// factors between the k components.
Admissibility is_admissible(const WedderburnData& d, std::vector<std::size_t> subset);

struct ExpStar {
  std::size_t value = 0;
  std::vector<std::size_t> best;  // component indices
};
ExpStar exp_star(const WedderburnData& d);

std::size_t component_dimension(const WedderburnData& d, std::span<const std::size_t> subset);

// designation maps one slot to each component of the subset.
bool verify_centrally_admissible(const StarAlgebra& a, const WedderburnData& d,
                                 const std::vector<std::size_t>& subset, const PolyAst& f, const Assignment& s,
                                 const std::map<SignedVar, std::size_t>& designation);

struct CentralWitness {
  std::string text;  // polynomial text
  Assignment values;
  std::map<SignedVar, std::size_t> designation;  // slot -> component
  std::vector<std::size_t> subset;
};

struct ExponentReport {
  std::size_t exp_star = 0;
  std::size_t exp_delta_lower = 0;
  std::size_t exp_delta_upper = 0;
  bool confirmed = false;
  std::vector<std::size_t> best_admissible;
  std::vector<std::size_t> admissible_ordering;
  std::optional<CentralWitness> witness;  // the one giving the lower bound
  std::vector<std::string> notes;         // rejected witnesses, with reasons
};

// Without a verified witness the lower bound stays 0.
ExponentReport exponent_report(const StarAlgebra& a, const WedderburnData& d,
                               const std::vector<CentralWitness>& witnesses);

// Grassmann envelopes of a simple superalgebra B: exp* = dim B; a witness
// counts when it is proper central on the envelope (regular substitutions).
ExponentReport envelope_exponent_report(const StarAlgebra& a, const std::vector<std::string>& witness_polys);

// Witnesses shipped for A1..A14 (values written against the catalog
// algebra, A3/A4 built with k = witness degree).
struct WitnessSpec {
  std::string poly;
  std::vector<std::pair<std::string, std::string>> values;  // slot -> element
  std::vector<std::pair<std::string, std::size_t>> designation;
};
WitnessSpec catalog_witness(int i);
CentralWitness resolve_witness(const StarAlgebra& a, const WedderburnData& d, const WitnessSpec& w);

// The full report for Ai, using the shipped witness.
ExponentReport catalog_exponent_report(int i);

SignedVar parse_slot(std::string_view text);  // "x3-"

}  // namespace pistar
