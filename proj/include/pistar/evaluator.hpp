#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "pistar/algebra.hpp"
#include "pistar/grassmann.hpp"
#include "pistar/starpoly.hpp"

namespace pistar {

using Assignment = std::map<SignedVar, Vector>;

enum class Status { identity, proper_central, noncentral };
std::string to_string(Status s);

struct Verdict {
  Status status = Status::identity;
  std::optional<Assignment> witness;  // absent for identities
  std::optional<Vector> value;        // f at the witness
};

enum class Substitution { automatic, full, regular };

struct ClassifyOptions {
  Substitution substitution = Substitution::automatic;
  unsigned threads = 1;  // brute-force path only
};

// Sum over monomials of coefficient times the ordered product of values.
// Throws if p is not multilinear, a slot is missing, or a value lies in the
// wrong part of A.
Vector evaluate(const StarPolynomial& p, const StarAlgebra& a, const Assignment& s);
// check_signs = false evaluates the expression as written, for displayed
// products whose values ignore the +/- constraint.
Vector evaluate_ast(const PolyAst& p, const StarAlgebra& a, const Assignment& s, bool check_signs = true);

// Candidate values per slot (slots in sorted order) for the chosen substitution.
SlotCandidates slot_candidates(const StarAlgebra& a, const std::vector<SignedVar>& slots,
                               Substitution mode);

// Exhaustive over candidate tuples in lex order; the witness is the minimal
// tuple that is noncentral (or, failing that, nonzero).
Verdict classify(const StarPolynomial& p, const StarAlgebra& a, const ClassifyOptions& opt = {});
// Same verdict and witness, via spans of values over subtrees. Falls back to
// tuple enumeration inside sums.
Verdict classify(const PolyAst& p, const StarAlgebra& a, const ClassifyOptions& opt = {});

bool is_identity(const PolyAst& p, const StarAlgebra& a);
bool is_central(const PolyAst& p, const StarAlgebra& a);

// Span of all values of p over the candidate tuples.
Subspace value_span(const PolyAst& p, const StarAlgebra& a, const SlotCandidates& cands,
                    const std::vector<SignedVar>& slots);

std::string format_assignment(const StarAlgebra& a, const Assignment& s);

}  // namespace pistar
