#pragma once

#include <optional>
#include <string>
#include <vector>

#include "pistar/algebra.hpp"

namespace pistar {

// inner3: e1 j1 e2 j2 e3 j3 e1, targets A5/A6
// outer3: j1 e1 j2 e2 j3 e3 j4, targets A7/A8
// innerF_FF: e1 j1 e2 j2 e1, targets A9/A10
// innerFF_F: e2 j1 e1 j2 e2, targets A11/A12
// outer_mixed: j1 e1 j2 e2 j3 (outer_mixed_b: j1 e2 j2 e1 j3), targets A13/A14
enum class LemmaPatternId { inner3, outer3, innerF_FF, innerFF_F, outer_mixed, outer_mixed_b };

std::string to_string(LemmaPatternId id);
LemmaPatternId parse_pattern(std::string_view name);

struct MapEntry {
  std::string word;   // e.g. "e1 j3* e3"
  std::string image;  // matrix units in the target
  bool alpha = false; // image is scaled by alpha
};

struct LemmaPattern {
  LemmaPatternId id;
  int idempotents = 0;
  int js = 0;
  bool uses_e2_minus = false;
  std::pair<int, int> targets;             // catalog indices (alpha = 1, alpha = -1)
  std::string hypothesis;                  // the word p
  std::vector<std::string> b_generators;   // words
  std::vector<std::string> i_generators;   // words or "w1 - w2" / "w1 + w2"
  std::vector<MapEntry> map;               // representatives of B/I and their images
};

const LemmaPattern& lemma_pattern(LemmaPatternId id);

// Independent branch: which extra generator to add to I.
enum class BranchChoice { minus, plus };  // p - p* (first target) / p + p* (second)

struct LemmaInput {
  LemmaPatternId pattern = LemmaPatternId::inner3;
  std::vector<Vector> idempotents;
  std::vector<Vector> js;
  std::optional<Vector> e2_minus;
  BranchChoice choice = BranchChoice::minus;
};

struct LemmaReport {
  LemmaPatternId pattern;
  bool dependent = true;
  int alpha = 1;
  std::vector<Sign> j_parts;  // which +/- part of each j was used
  int target = 0;             // catalog index
  std::size_t b_dim = 0;
  std::size_t i_dim = 0;
  std::size_t quotient_dim = 0;
  StarAlgebra quotient;
  LinearMap iso;              // quotient coordinates -> target coordinates
  IsomorphismReport iso_report;
  bool center_preserved = false;
  bool verified = false;
};

// Throws Error when the idempotent axioms fail, every +/- choice kills the
// hypothesis product, or the quotient has the wrong dimension.
LemmaReport run_lemma(const StarAlgebra& a, const LemmaInput& in);

// The canonical instantiation of a pattern on one of its own targets
// (member 0 or 1), and the synthetic independent-branch instance on the
// direct sum of both targets.
struct LemmaInstance {
  std::string label;
  StarAlgebra algebra;
  LemmaInput input;
  int expected_target = 0;
};
LemmaInstance canonical_instance(LemmaPatternId id, int member);
LemmaInstance synthetic_instance(LemmaPatternId id, BranchChoice choice);

}  // namespace pistar
