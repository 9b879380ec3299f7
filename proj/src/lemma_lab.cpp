#include "pistar/lemma_lab.hpp"

#include <map>
#include <sstream>

#include "pistar/catalog.hpp"

namespace pistar {

std::string to_string(LemmaPatternId id) {
  switch (id) {
    case LemmaPatternId::inner3:
      return "inner3";
    case LemmaPatternId::outer3:
      return "outer3";
    case LemmaPatternId::innerF_FF:
      return "innerF_FF";
    case LemmaPatternId::innerFF_F:
      return "innerFF_F";
    case LemmaPatternId::outer_mixed:
      return "outer_mixed";
    case LemmaPatternId::outer_mixed_b:
      return "outer_mixed_b";
  }
  return "?";
}

LemmaPatternId parse_pattern(std::string_view name) {
  for (auto id : {LemmaPatternId::inner3, LemmaPatternId::outer3, LemmaPatternId::innerF_FF,
                  LemmaPatternId::innerFF_F, LemmaPatternId::outer_mixed, LemmaPatternId::outer_mixed_b})
    if (to_string(id) == name) return id;
  throw Error("unknown lemma pattern '" + std::string(name) + "'");
}

namespace {

LemmaPattern make_inner3() {
  return {LemmaPatternId::inner3,
          3,
          3,
          false,
          {5, 6},
          "e1 j1 e2 j2 e3 j3 e1",
          {"e1", "e2", "e3", "e1 j1 e2", "e2 j2 e3", "e3 j3 e1"},
          {"e3 j3 e1 j1 e2", "e1 j1 e2 j1* e1", "e2 j1* e1 j1 e2", "e2 j2 e3 j2* e2", "e3 j2* e2 j2 e3",
           "e3 j3 e1 j3* e3", "e1 j3* e3 j3 e1"},
          {{"e1", "e11+e66"},
           {"e2", "e22+e55"},
           {"e3", "e33+e44"},
           {"e1 j1 e2", "e12"},
           {"e2 j1* e1", "e56"},
           {"e2 j2 e3", "e23"},
           {"e3 j2* e2", "e45"},
           {"e3 j3 e1", "e36"},
           {"e1 j3* e3", "e14", true},
           {"e1 j1 e2 j2 e3", "e13"},
           {"e3 j2* e2 j1* e1", "e46"},
           {"e2 j2 e3 j3 e1", "e26"},
           {"e1 j3* e3 j2* e2", "e15", true},
           {"e1 j1 e2 j2 e3 j3 e1", "e16"}}};
}

LemmaPattern make_outer3() {
  return {LemmaPatternId::outer3,
          3,
          4,
          false,
          {7, 8},
          "j1 e1 j2 e2 j3 e3 j4",
          {"e1", "e2", "e3", "j1 e1", "e1 j2 e2", "e2 j3 e3", "e3 j4"},
          {"e3 j4 e1", "e3 j4 e2", "e3 j4 e3", "e3 j4 j1 e1", "e3 j1 e1", "e2 j1 e1", "e1 j1 e1", "j1 e1 j1*",
           "j4* e3 j4", "e1 j1* j1 e1", "e3 j4 j4* e3", "e1 j2 e2 j2* e1", "e2 j2* e1 j2 e2", "e2 j3 e3 j3* e2",
           "e3 j3* e2 j3 e3"},
          {{"e1", "e22+e77"},
           {"e2", "e33+e66"},
           {"e3", "e44+e55"},
           {"j1 e1", "e12"},
           {"e1 j1*", "e78"},
           {"e1 j2 e2", "e23"},
           {"e2 j2* e1", "e67"},
           {"e2 j3 e3", "e34"},
           {"e3 j3* e2", "e56"},
           {"e3 j4", "e48"},
           {"j4* e3", "e15", true},
           {"j1 e1 j2 e2", "e13"},
           {"e2 j2* e1 j1*", "e68"},
           {"e1 j2 e2 j3 e3", "e24"},
           {"e3 j3* e2 j2* e1", "e57"},
           {"e2 j3 e3 j4", "e38"},
           {"j4* e3 j3* e2", "e16", true},
           {"j1 e1 j2 e2 j3 e3", "e14"},
           {"e3 j3* e2 j2* e1 j1*", "e58"},
           {"e1 j2 e2 j3 e3 j4", "e28"},
           {"j4* e3 j3* e2 j2* e1", "e17", true},
           {"j1 e1 j2 e2 j3 e3 j4", "e18"}}};
}

LemmaPattern make_innerF_FF() {
  return {LemmaPatternId::innerF_FF,
          2,
          2,
          true,
          {9, 10},
          "e1 j1 e2 j2 e1",
          {"e1", "e2", "e2-", "e1 j1 e2", "e2 j2 e1"},
          {"e2 j2 e1 j1 e2", "e2 j1* e1 j1 e2", "e1 j2* e2 j2 e1", "e1 j1 e2 j1* e1", "e2 j2 e1 j2* e2",
           "e1 j1 e2 - e1 j1 e2-", "e2 j2 e1 - e2- j2 e1"},
          {{"e1", "e11+e44"},
           {"e2", "e22+e33"},
           {"e2-", "e22-e33"},
           {"e1 j1 e2", "e12"},
           {"e2 j1* e1", "e34"},
           {"e2 j2 e1", "e24"},
           {"e1 j2* e2", "e13", true},
           {"e1 j1 e2 j2 e1", "e14"}}};
}

LemmaPattern make_innerFF_F() {
  return {LemmaPatternId::innerFF_F,
          2,
          2,
          true,
          {11, 12},
          "e2 j1 e1 j2 e2",
          {"e1", "e2", "e2-", "e2 j1 e1", "e1 j2 e2"},
          {"e1 j2 e2 j1 e1", "e1 j2 e2 j2* e1", "e1 j1* e2 j1 e1", "e2 j1 e1 j1* e2", "e2 j2* e1 j2 e2",
           "e1 j2 e2 + e1 j2 e2-", "e2 j1 e1 - e2- j1 e1"},
          {{"e1", "e22+e33"},
           {"e2", "e11+e44"},
           {"e2-", "e11-e44"},
           {"e2 j1 e1", "e13"},
           {"e1 j1* e2", "e24", true},
           {"e1 j2 e2", "e34"},
           {"e2 j2* e1", "e12"},
           {"e2 j1 e1 j2 e2", "e14"}}};
}

LemmaPattern make_outer_mixed() {
  return {LemmaPatternId::outer_mixed,
          2,
          3,
          true,
          {13, 14},
          "j1 e1 j2 e2 j3",
          {"e1", "e2", "e2-", "j1 e1", "e1 j2 e2", "e2 j3"},
          {"e1 j1 e1", "e2 j1 e1", "e2 j3 e1", "e2 j3 e2", "e2 j3 j1 e1", "e1 j1* j1 e1", "j1 e1 j1*",
           "e2 j2* e1 j2 e2", "e1 j2 e2 j2* e1", "j3* e2 j3", "e2 j3 j3* e2", "e1 j2 e2 - e1 j2 e2-",
           "e2 j3 - e2- j3"},
          {{"e1", "e22+e55"},
           {"e2", "e33+e44"},
           {"e2-", "e33-e44"},
           {"j1 e1", "e12"},
           {"e1 j2 e2", "e23"},
           {"e2 j3", "e36"},
           {"j1 e1 j2 e2", "e13"},
           {"e1 j2 e2 j3", "e26"},
           {"j1 e1 j2 e2 j3", "e16"},
           {"e1 j1*", "e56"},
           {"e2 j2* e1", "e45"},
           {"j3* e2", "e14", true},
           {"e2 j2* e1 j1*", "e46"},
           {"j3* e2 j2* e1", "e15", true}}};
}

LemmaPattern make_outer_mixed_b() {
  return {LemmaPatternId::outer_mixed_b,
          2,
          3,
          true,
          {13, 14},
          "j1 e2 j2 e1 j3",
          {"e1", "e2", "e2-", "j1 e2", "e2 j2 e1", "e1 j3"},
          {"e1 j1 e2", "e2 j1 e2", "e1 j3 e1", "e1 j3 e2", "e1 j3 j1 e2", "e2 j1* j1 e2", "j1 e2 j1*",
           "e1 j2* e2 j2 e1", "e2 j2 e1 j2* e2", "j3* e1 j3", "e1 j3 j3* e1", "e2 j2 e1 + e2- j2 e1",
           "j1 e2 + j1 e2-"},
          {{"e1", "e22+e55"},
           {"e2", "e33+e44"},
           {"e2-", "e33-e44"},
           {"j1 e2", "e14"},
           {"e2 j2 e1", "e45"},
           {"e1 j3", "e56"},
           {"j1 e2 j2 e1", "e15"},
           {"e2 j2 e1 j3", "e46"},
           {"j1 e2 j2 e1 j3", "e16"},
           {"e2 j1*", "e36", true},
           {"e1 j2* e2", "e23"},
           {"j3* e1", "e12"},
           {"e1 j2* e2 j1*", "e26", true},
           {"j3* e1 j2* e2", "e13"}}};
}

struct Tokens {
  const StarAlgebra& a;
  std::map<std::string, Vector> values;

  Vector word(const std::string& w) const {
    std::istringstream in(w);
    std::string t;
    std::optional<Vector> acc;
    while (in >> t) {
      auto it = values.find(t);
      if (it == values.end()) throw Error("lemma table: unknown token '" + t + "'");
      acc = acc ? a.multiply(*acc, it->second) : it->second;
    }
    if (!acc) throw Error("lemma table: empty word");
    return *acc;
  }

  // "w1 - w2", "w1 + w2" or a single word
  Vector expr(const std::string& e) const {
    for (const char* op : {" - ", " + "}) {
      auto pos = e.find(op);
      if (pos == std::string::npos) continue;
      Vector l = word(e.substr(0, pos)), r = word(e.substr(pos + 3));
      return op[1] == '-' ? l - r : l + r;
    }
    return word(e);
  }
};

void check_idempotents(const StarAlgebra& a, const LemmaInput& in, const LemmaPattern& p) {
  if (static_cast<int>(in.idempotents.size()) != p.idempotents)
    throw Error(to_string(p.id) + " needs " + std::to_string(p.idempotents) + " idempotents");
  if (static_cast<int>(in.js.size()) != p.js)
    throw Error(to_string(p.id) + " needs " + std::to_string(p.js) + " connecting elements");
  if (p.uses_e2_minus != in.e2_minus.has_value())
    throw Error(to_string(p.id) + (p.uses_e2_minus ? " needs" : " does not take") + " the element e2-");
  for (const auto& v : in.idempotents)
    if (v.length() != a.dim()) throw DimensionError("idempotent has the wrong length");
  for (const auto& v : in.js)
    if (v.length() != a.dim()) throw DimensionError("connecting element has the wrong length");
  for (std::size_t i = 0; i < in.idempotents.size(); ++i) {
    const Vector& e = in.idempotents[i];
    const std::string name = "e" + std::to_string(i + 1);
    if (e.is_zero()) throw Error(name + " is zero");
    if (a.multiply(e, e) != e) throw Error(name + " is not idempotent");
    if (a.involve(e) != e) throw Error(name + " is not symmetric");
    for (std::size_t j = 0; j < in.idempotents.size(); ++j)
      if (i != j && !a.multiply(e, in.idempotents[j]).is_zero())
        throw Error("e" + std::to_string(i + 1) + " e" + std::to_string(j + 1) + " != 0: idempotents are not orthogonal");
  }
  if (in.e2_minus) {
    const Vector& e2 = in.idempotents[1];
    const Vector& m = *in.e2_minus;
    if (m.length() != a.dim()) throw DimensionError("e2- has the wrong length");
    if (a.multiply(m, m) != e2 || a.multiply(e2, m) != m || a.multiply(m, e2) != m)
      throw Error("e2- must satisfy (e2-)^2 = e2 and e2 e2- = e2- e2 = e2-");
  }
}

}  // namespace

const LemmaPattern& lemma_pattern(LemmaPatternId id) {
  static const std::map<LemmaPatternId, LemmaPattern> table = {
      {LemmaPatternId::inner3, make_inner3()},       {LemmaPatternId::outer3, make_outer3()},
      {LemmaPatternId::innerF_FF, make_innerF_FF()}, {LemmaPatternId::innerFF_F, make_innerFF_F()},
      {LemmaPatternId::outer_mixed, make_outer_mixed()}, {LemmaPatternId::outer_mixed_b, make_outer_mixed_b()}};
  return table.at(id);
}

LemmaReport run_lemma(const StarAlgebra& a, const LemmaInput& in) {
  const LemmaPattern& pat = lemma_pattern(in.pattern);
  check_idempotents(a, in, pat);

  Tokens tok{a, {}};
  for (int i = 0; i < pat.idempotents; ++i) tok.values["e" + std::to_string(i + 1)] = in.idempotents[i];
  if (in.e2_minus) tok.values["e2-"] = *in.e2_minus;

  // +/- parts of the js: first combination (+ before -, j1 slowest) with p != 0
  const std::size_t nj = in.js.size();
  std::vector<std::array<Vector, 2>> parts;
  for (const auto& j : in.js) {
    Vector s = a.involve(j);
    parts.push_back({(j + s) * Rational(1, 2), (j - s) * Rational(1, 2)});
  }
  std::optional<std::vector<Sign>> chosen;
  for (std::uint32_t mask = 0; mask < (1u << nj) && !chosen; ++mask) {
    std::vector<Sign> signs(nj);
    bool skip = false;
    for (std::size_t i = 0; i < nj; ++i) {
      signs[i] = (mask >> (nj - 1 - i)) & 1u ? Sign::minus : Sign::plus;
      const Vector& part = parts[i][signs[i] == Sign::plus ? 0 : 1];
      if (part.is_zero()) skip = true;
      tok.values["j" + std::to_string(i + 1)] = part;
      tok.values["j" + std::to_string(i + 1) + "*"] = a.involve(part);
    }
    if (skip) continue;
    if (!tok.word(pat.hypothesis).is_zero()) chosen = signs;
  }
  if (!chosen) throw Error("hypothesis product " + pat.hypothesis + " vanishes for every +/- part of the js");

  LemmaReport r;
  r.pattern = in.pattern;
  r.j_parts = *chosen;

  const Vector p = tok.word(pat.hypothesis);
  const Vector ps = a.involve(p);
  std::vector<Vector> bgens;
  for (const auto& w : pat.b_generators) bgens.push_back(tok.word(w));
  const Subspace b = star_subalgebra_closure(a, bgens);
  std::vector<Vector> igens;
  for (const auto& e : pat.i_generators) igens.push_back(tok.expr(e));
  if (ps == p) {
    r.alpha = 1;
  } else if (ps == -p) {
    r.alpha = -1;
  } else {
    r.dependent = false;
    r.alpha = in.choice == BranchChoice::minus ? 1 : -1;
    igens.push_back(in.choice == BranchChoice::minus ? p - ps : p + ps);
  }
  r.target = r.alpha == 1 ? pat.targets.first : pat.targets.second;
  const Subspace ideal = star_ideal_closure(a, b, igens);
  r.b_dim = b.dim();
  r.i_dim = ideal.dim();

  const StarAlgebra target = catalog_algebra(r.target);
  Quotient q(a, b, ideal);
  r.quotient = q.algebra();
  r.quotient_dim = r.quotient.dim();
  if (r.quotient_dim != target.dim())
    throw Error("B/I has dimension " + std::to_string(r.quotient_dim) + " but " + target.name() + " has dimension " +
                std::to_string(target.dim()));
  if (pat.map.size() != target.dim()) throw Error("lemma table: map size does not match the target");

  // representatives in quotient coordinates, then M = images . R^-1
  std::vector<Vector> reps;
  std::vector<Vector> images;
  for (const auto& m : pat.map) {
    reps.push_back(q.project(tok.word(m.word)));
    Vector img = parse_element(target, m.image);
    images.push_back(m.alpha ? img * Rational(r.alpha) : img);
  }
  BasisSolver solver(r.quotient_dim, reps);  // throws if the representatives are dependent mod I
  for (Index j = 0; j < r.quotient_dim; ++j) {
    Vector c = solver.coordinates_or_throw(Vector::unit(r.quotient_dim, j));
    Vector col = target.zero();
    for (const auto& [i, x] : c) col.add_scaled(images[i], x);
    r.iso.push_back(std::move(col));
  }
  r.iso_report = check_star_isomorphism(r.quotient, target, r.iso);
  if (r.iso_report.ok()) {
    Subspace image(target.dim());
    for (const auto& z : r.quotient.center().rows()) image.insert(pistar::apply(r.iso, z));
    r.center_preserved = image == target.center();
  }
  r.verified = r.iso_report.ok() && r.center_preserved;
  return r;
}

// ---------------------------------------------------------------- instances

namespace {

struct InstanceText {
  std::vector<const char*> idempotents;
  std::vector<const char*> js;
  const char* e2_minus = nullptr;
};

InstanceText canonical_text(LemmaPatternId id, int member) {
  switch (id) {
    case LemmaPatternId::inner3:
      return {{"e11+e66", "e22+e55", "e33+e44"}, {"e12+e56", "e23+e45", member ? "e36-e14" : "e36+e14"}};
    case LemmaPatternId::outer3:
      return {{"e22+e77", "e33+e66", "e44+e55"},
              {"e12+e78", "e23+e67", "e34+e56", member ? "e48-e15" : "e48+e15"}};
    case LemmaPatternId::innerF_FF:
      return {{"e11+e44", "e22+e33"}, {"e12", "e24"}, "e22-e33"};
    case LemmaPatternId::innerFF_F:
      return {{"e22+e33", "e11+e44"}, {"e13", "e34"}, "e11-e44"};
    case LemmaPatternId::outer_mixed:
      return {{"e22+e55", "e33+e44"}, {"e12+e56", "e23+e45", member ? "e36-e14" : "e36+e14"}, "e33-e44"};
    case LemmaPatternId::outer_mixed_b:
      return {{"e22+e55", "e33+e44"}, {member ? "e14-e36" : "e14+e36", "e45+e23", "e56+e12"}, "e33-e44"};
  }
  throw Error("unknown pattern");
}

// js chosen symmetric in both members so that p and p* are independent in
// the direct sum
InstanceText symmetric_text(LemmaPatternId id, int member) {
  InstanceText t = canonical_text(id, member);
  if (id == LemmaPatternId::innerF_FF) t.js = {"e12+e34", member ? "e24-e13" : "e24+e13"};
  if (id == LemmaPatternId::innerFF_F) t.js = {member ? "e13-e24" : "e13+e24", "e34+e12"};
  return t;
}

LemmaInput to_input(LemmaPatternId id, const StarAlgebra& a, const InstanceText& t) {
  LemmaInput in;
  in.pattern = id;
  for (auto s : t.idempotents) in.idempotents.push_back(parse_element(a, s));
  for (auto s : t.js) in.js.push_back(parse_element(a, s));
  if (t.e2_minus) in.e2_minus = parse_element(a, t.e2_minus);
  return in;
}

}  // namespace

LemmaInstance canonical_instance(LemmaPatternId id, int member) {
  if (member != 0 && member != 1) throw Error("member must be 0 or 1");
  const LemmaPattern& pat = lemma_pattern(id);
  const int target = member ? pat.targets.second : pat.targets.first;
  StarAlgebra a = catalog_algebra(target);
  LemmaInput in = to_input(id, a, canonical_text(id, member));
  return {to_string(id) + " on " + a.name(), a, std::move(in), target};
}

LemmaInstance synthetic_instance(LemmaPatternId id, BranchChoice choice) {
  const LemmaPattern& pat = lemma_pattern(id);
  const StarAlgebra t1 = catalog_algebra(pat.targets.first), t2 = catalog_algebra(pat.targets.second);
  const LemmaInput a = to_input(id, t1, symmetric_text(id, 0));
  const LemmaInput b = to_input(id, t2, symmetric_text(id, 1));
  StarAlgebra sum = direct_sum(t1, t2).with_name(t1.name() + "+" + t2.name());
  LemmaInput in;
  in.pattern = id;
  in.choice = choice;
  for (std::size_t i = 0; i < a.idempotents.size(); ++i) in.idempotents.push_back(join(a.idempotents[i], b.idempotents[i]));
  for (std::size_t i = 0; i < a.js.size(); ++i) in.js.push_back(join(a.js[i], b.js[i]));
  if (a.e2_minus) in.e2_minus = join(*a.e2_minus, *b.e2_minus);
  const int expected = choice == BranchChoice::minus ? pat.targets.first : pat.targets.second;
  return {to_string(id) + " on " + sum.name() + (choice == BranchChoice::minus ? " (p - p*)" : " (p + p*)"), sum,
          std::move(in), expected};
}

}  // namespace pistar
