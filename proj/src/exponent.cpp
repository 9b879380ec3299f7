#include "pistar/exponent.hpp"

#include <algorithm>
#include <regex>
#include <set>

namespace pistar {

Subspace subspace_product_chain(std::span<const Subspace> spaces, const StructureAlgebra& a) {
  if (spaces.empty()) throw Error("subspace_product_chain: empty list");
  Subspace cur = spaces.front();
  for (std::size_t i = 1; i < spaces.size(); ++i) {
    Subspace next(a.dim());
    for (const auto& x : cur.rows())
      for (const auto& y : spaces[i].rows()) {
        next.insert(a.multiply(x, y));
        if (next.dim() == a.dim()) break;
      }
    cur = std::move(next);
    if (cur.is_zero()) break;
  }
  return cur;
}

namespace {

void check_subset(const WedderburnData& d, const std::vector<std::size_t>& subset) {
  if (subset.empty()) throw Error("component subset is empty");
  std::set<std::size_t> seen;
  for (auto i : subset) {
    if (i >= d.components.size()) throw Error("component index " + std::to_string(i) + " out of range");
    if (!seen.insert(i).second) throw Error("component index " + std::to_string(i) + " repeats");
  }
}

}  // namespace

Admissibility is_admissible(const WedderburnData& d, std::vector<std::size_t> subset) {
  check_subset(d, subset);
  std::sort(subset.begin(), subset.end());
  do {
    std::vector<Subspace> chain;
    for (std::size_t i = 0; i < subset.size(); ++i) {
      if (i) chain.push_back(d.radical);
      chain.push_back(d.components[subset[i]].space);
    }
    if (!subspace_product_chain(chain, d.source.alg()).is_zero()) return {true, subset};
  } while (std::next_permutation(subset.begin(), subset.end()));
  return {false, {}};
}

std::size_t component_dimension(const WedderburnData& d, std::span<const std::size_t> subset) {
  std::size_t s = 0;
  for (auto i : subset) s += d.components.at(i).space.dim();
  return s;
}

ExpStar exp_star(const WedderburnData& d) {
  const std::size_t m = d.components.size();
  if (m > 16) throw Error("exp_star: too many components");
  ExpStar best;
  for (std::uint32_t mask = 1; mask < (1u << m); ++mask) {
    std::vector<std::size_t> subset;
    for (std::size_t i = 0; i < m; ++i)
      if (mask & (1u << i)) subset.push_back(i);
    const std::size_t dim = component_dimension(d, subset);
    if (dim <= best.value) continue;
    if (is_admissible(d, subset).admissible) best = {dim, subset};
  }
  return best;
}

bool verify_centrally_admissible(const StarAlgebra& a, const WedderburnData& d,
                                 const std::vector<std::size_t>& subset, const PolyAst& f, const Assignment& s,
                                 const std::map<SignedVar, std::size_t>& designation) {
  check_subset(d, subset);
  const auto slots = ast_slots(f);
  std::set<std::size_t> covered;
  for (const auto& [slot, comp] : designation) {
    if (!std::binary_search(slots.begin(), slots.end(), slot))
      throw Error("malformed designation: " + to_string(slot) + " is not a variable of the polynomial");
    if (std::find(subset.begin(), subset.end(), comp) == subset.end())
      throw Error("malformed designation: component " + std::to_string(comp) + " is not in the subset");
    if (!covered.insert(comp).second)
      throw Error("malformed designation: component " + std::to_string(comp) + " designated twice");
  }
  if (covered.size() != subset.size()) throw Error("malformed designation: some component has no slot");

  if (classify(f, a).status != Status::proper_central) return false;
  if (evaluate_ast(f, a, s).is_zero()) return false;
  for (const auto& [slot, comp] : designation) {
    const Vector& v = s.at(slot);
    if (!d.components[comp].space.contains(v) || !a.part(slot.sign).contains(v)) return false;
  }
  return true;
}

ExponentReport exponent_report(const StarAlgebra& a, const WedderburnData& d,
                               const std::vector<CentralWitness>& witnesses) {
  ExponentReport r;
  ExpStar e = exp_star(d);
  r.exp_star = e.value;
  r.best_admissible = e.best;
  if (!e.best.empty()) r.admissible_ordering = is_admissible(d, e.best).ordering;
  r.exp_delta_upper = e.value;
  for (const auto& w : witnesses) {
    bool ok = false;
    std::string why;
    try {
      ok = verify_centrally_admissible(a, d, w.subset, parse(w.text), w.values, w.designation);
      if (!ok) {
        Verdict v = classify(parse(w.text), a);
        why = v.status != Status::proper_central ? "classified " + to_string(v.status)
                                                 : "assignment or designation check failed";
        if (v.value) why += ", value " + format_element(a, *v.value);
      }
    } catch (const Error& ex) {
      why = ex.what();
    }
    if (!ok) {
      r.notes.push_back(w.text + ": " + why);
      continue;
    }
    const std::size_t dim = component_dimension(d, w.subset);
    if (dim > r.exp_delta_lower || !r.witness) {
      r.exp_delta_lower = std::max(r.exp_delta_lower, dim);
      r.witness = w;
    }
  }
  r.exp_delta_lower = std::min(r.exp_delta_lower, r.exp_delta_upper);
  r.confirmed = r.exp_delta_lower == r.exp_delta_upper;
  return r;
}

ExponentReport envelope_exponent_report(const StarAlgebra& a, const std::vector<std::string>& witness_polys) {
  const auto& env = a.envelope();
  if (!env) throw Error("envelope_exponent_report: not a Grassmann envelope");
  ExponentReport r;
  r.exp_star = env->base.alg.dim();
  r.exp_delta_upper = r.exp_star;
  r.best_admissible = {0};
  r.admissible_ordering = {0};
  for (const auto& text : witness_polys) {
    try {
      PolyAst f = parse(text);
      Verdict v = classify(f, a);
      if (v.status != Status::proper_central) {
        r.notes.push_back(text + ": classified " + to_string(v.status));
        continue;
      }
      r.exp_delta_lower = r.exp_star;
      r.witness = CentralWitness{text, *v.witness, {}, {0}};
      break;
    } catch (const Error& ex) {
      r.notes.push_back(text + ": " + ex.what());
    }
  }
  r.confirmed = r.exp_delta_lower == r.exp_delta_upper;
  return r;
}

SignedVar parse_slot(std::string_view text) {
  static const std::regex re(R"(\s*x(\d+)([+-])\s*)");
  std::string s(text);
  std::smatch m;
  if (!std::regex_match(s, m, re)) throw ParseError("not a variable: '" + s + "'", 0);
  int i = std::stoi(m[1]);
  if (i < 1) throw ParseError("variable indices start at 1", 0);
  return {i, m[2] == "+" ? Sign::plus : Sign::minus};
}

WitnessSpec catalog_witness(int i) {
  switch (i) {
    case 1:
      return {"x1- x2-", {{"x1-", "e12-e21"}, {"x2-", "e12-e21"}}, {{"x1-", 0}}};
    case 2:
      return {"x1+", {{"x1+", "e11+e22"}}, {{"x1+", 0}}};
    case 3:
      return {"[x1-, x2-, x1+]", {}, {}};
    case 4:
      return {"[x1+, x2+]", {}, {}};
    case 5:
    case 6:
      return {i == 5 ? "[x1+,x2+][x3+,x4+][x5+,x6+]" : "[x1+,x2+][x3+,x4+][x5+,x6-]",
              {{"x1+", "e11+e66"},
               {"x2+", "e12+e56"},
               {"x3+", "e22+e55"},
               {"x4+", "e23+e45"},
               {"x5+", "e33+e44"},
               {i == 5 ? "x6+" : "x6-", "e36+e14"}},
              {{"x1+", 0}, {"x3+", 1}, {"x5+", 2}}};
    case 7:
    case 8:
      return {i == 7 ? "[x1+,x2+][x3+,x4+][x5+,x6+][x7+,x8+]" : "[x1+,x2+][x3+,x4+][x5+,x6+][x7+,x8-]",
              {{"x1+", "e12+e78"},
               {"x2+", "e22+e77"},
               {"x3+", "e22+e77"},
               {"x4+", "e23+e67"},
               {"x5+", "e33+e66"},
               {"x6+", "e34+e56"},
               {"x7+", "e44+e55"},
               // the displayed e48 +- e14 is not in M^+ / M^-; e48 pairs with e15
               {i == 7 ? "x8+" : "x8-", "e48+e15"}},
              {{"x2+", 0}, {"x5+", 1}, {"x7+", 2}}};
    case 9:
    case 10:
      return {i == 9 ? "[x1+,x2+][x4+,x5+]" : "[x1+,x2+][x4+,x5-]",
              {{"x1+", "e11+e44"}, {"x2+", "e12+e34"}, {"x4+", "e22+e33"}, {i == 9 ? "x5+" : "x5-", "e24+e13"}},
              {{"x1+", 0}, {"x4+", 1}}};
    case 11:
    case 12:
      // no witness is displayed for these two; the A9/A10 pattern is reused
      return {i == 11 ? "[x1+,x2+][x3+,x4+]" : "[x1+,x2+][x3+,x4-]",
              {{"x1+", "e11+e44"}, {"x2+", "e12+e34"}, {"x3+", "e22+e33"}, {i == 11 ? "x4+" : "x4-", "e24+e13"}},
              {{"x1+", 1}, {"x3+", 0}}};
    case 13:
    case 14:
      return {i == 13 ? "[x1+,x2+][x3+,x4+][x5+,x6+]" : "[x1+,x2+][x3+,x4+][x5+,x6-]",
              {{"x1+", "e22+e55"},
               {"x2+", "e12+e56"},
               {"x3+", "e33+e44"},
               {"x4+", "e23+e45"},
               {"x5+", "e33+e44"},
               {i == 13 ? "x6+" : "x6-", "e36+e14"}},
              {{"x1+", 0}, {"x3+", 1}}};
    default:
      throw Error("no witness for index " + std::to_string(i));
  }
}

CentralWitness resolve_witness(const StarAlgebra& a, const WedderburnData& d, const WitnessSpec& w) {
  CentralWitness c;
  c.text = w.poly;
  for (const auto& [slot, val] : w.values) c.values.emplace(parse_slot(slot), parse_element(a, val));
  std::set<std::size_t> comps;
  for (const auto& [slot, comp] : w.designation) {
    if (comp >= d.components.size()) throw Error("witness designates a missing component");
    c.designation.emplace(parse_slot(slot), comp);
    comps.insert(comp);
  }
  c.subset.assign(comps.begin(), comps.end());
  return c;
}

ExponentReport catalog_exponent_report(int i) {
  const WitnessSpec w = catalog_witness(i);
  if (i == 3 || i == 4) {
    const int k = static_cast<int>(ast_slots(parse(w.poly)).size());
    return envelope_exponent_report(catalog_algebra(i, k), {w.poly});
  }
  WedderburnData d = wedderburn_data(i);
  return exponent_report(d.source, d, {resolve_witness(d.source, d, w)});
}

}  // namespace pistar
