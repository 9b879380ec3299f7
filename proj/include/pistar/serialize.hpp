#pragma once

#include <json.hpp>

#include "pistar/algebra.hpp"
#include "pistar/codim.hpp"
#include "pistar/evaluator.hpp"
#include "pistar/exponent.hpp"
#include "pistar/lemma_lab.hpp"

namespace pistar {

// Sparse vectors are arrays of [index, "p/q"] pairs in index order.
nlohmann::json vector_json(const Vector& v);
Vector vector_from_json(const nlohmann::json& j, std::size_t length);

// {name, dim, labels, products: [[i, j, v]...], unit, involution: [v...],
//  embedding?: {n, images}} plus derived fields (associative, center,
// symmetric_dim, skew_dim) that algebra_from_json ignores.
nlohmann::json algebra_json(const StarAlgebra& a);
StarAlgebra algebra_from_json(const nlohmann::json& j);

nlohmann::json super_algebra_json(const SuperStarAlgebra& s);

nlohmann::json verdict_json(const StarAlgebra& a, const Verdict& v);
nlohmann::json codim_json(const CodimResult& r);
nlohmann::json exponent_json(const StarAlgebra& a, const ExponentReport& r);
nlohmann::json lemma_json(const LemmaReport& r);

// {pattern, algebra, idempotents: [text], js: [text], e2_minus?, choice?}
// elements are written in the algebra's element syntax.
struct LemmaDescriptor {
  StarAlgebra algebra;
  LemmaInput input;
};
LemmaDescriptor lemma_from_json(const nlohmann::json& j);

}  // namespace pistar
