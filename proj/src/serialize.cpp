#include "pistar/serialize.hpp"

#include "pistar/catalog.hpp"

namespace pistar {

using nlohmann::json;

json vector_json(const Vector& v) {
  json out = json::array();
  for (const auto& [i, c] : v) out.push_back(json::array({i, to_string(c)}));
  return out;
}

Vector vector_from_json(const json& j, std::size_t length) {
  if (!j.is_array()) throw Error("vector: expected an array of [index, value] pairs");
  Vector v(length);
  for (const auto& e : j) {
    if (!e.is_array() || e.size() != 2 || !e[0].is_number_unsigned())
      throw Error("vector: entries are [index, value]");
    const auto i = e[0].get<std::size_t>();
    if (i >= length) throw DimensionError("vector: index " + std::to_string(i) + " out of range");
    Rational c = e[1].is_string() ? parse_rational(e[1].get<std::string>()) : Rational(e[1].get<long>());
    v.set(static_cast<Index>(i), v.get(static_cast<Index>(i)) + c);
  }
  return v;
}

namespace {

json basis_json(const StarAlgebra& a, const Subspace& s) {
  json out = json::array();
  for (const auto& r : s.rows()) out.push_back(format_element(a, r));
  return out;
}

}  // namespace

json algebra_json(const StarAlgebra& a) {
  const auto& alg = a.alg();
  json products = json::array();
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j)
      if (!alg.product(i, j).is_zero()) products.push_back(json::array({i, j, vector_json(alg.product(i, j))}));
  json inv = json::array();
  for (const auto& col : a.involution()) inv.push_back(vector_json(col));
  json out{{"name", a.name()},
           {"dim", a.dim()},
           {"labels", alg.labels()},
           {"products", products},
           {"unit", alg.unit() ? vector_json(*alg.unit()) : json(nullptr)},
           {"involution", inv}};
  if (const auto& e = a.embedding()) {
    json images = json::array();
    for (const auto& im : e->images) images.push_back(vector_json(im));
    out["embedding"] = json{{"n", e->n}, {"images", images}};
  }
  out["associative"] = !alg.associativity_counterexample().has_value();
  out["symmetric_dim"] = a.plus().dim();
  out["skew_dim"] = a.minus().dim();
  out["center"] = basis_json(a, a.center());
  return out;
}

StarAlgebra algebra_from_json(const json& j) {
  try {
    const auto labels = j.at("labels").get<std::vector<std::string>>();
    const std::size_t n = labels.size();
    if (j.contains("dim") && j["dim"].get<std::size_t>() != n) throw DimensionError("dim does not match labels");
    std::vector<std::vector<Vector>> table(n, std::vector<Vector>(n, Vector(n)));
    for (const auto& p : j.at("products")) {
      if (!p.is_array() || p.size() != 3) throw Error("products entries are [i, j, vector]");
      const auto i = p[0].get<std::size_t>(), k = p[1].get<std::size_t>();
      if (i >= n || k >= n) throw DimensionError("product index out of range");
      table[i][k] = vector_from_json(p[2], n);
    }
    std::optional<Vector> unit;
    if (j.contains("unit") && !j["unit"].is_null()) unit = vector_from_json(j["unit"], n);
    LinearMap inv;
    for (const auto& c : j.at("involution")) inv.push_back(vector_from_json(c, n));
    if (inv.size() != n) throw DimensionError("involution needs one column per basis element");
    StructureAlgebra alg(labels, std::move(table), unit);
    if (unit && !alg.unit_ok()) throw Error("the given unit is not a two-sided identity");
    if (auto bad = alg.associativity_counterexample())
      throw Error("not associative at basis triple (" + labels[(*bad)[0]] + ", " + labels[(*bad)[1]] + ", " +
                  labels[(*bad)[2]] + ")");
    StarAlgebra a(std::move(alg), std::move(inv), j.value("name", std::string("custom")));
    if (j.contains("embedding")) {
      const auto& e = j["embedding"];
      const int m = e.at("n").get<int>();
      std::vector<Vector> images;
      for (const auto& im : e.at("images")) images.push_back(vector_from_json(im, static_cast<std::size_t>(m) * m));
      if (images.size() != n) throw DimensionError("embedding needs one image per basis element");
      a = a.with_embedding(std::make_shared<MatrixEmbedding>(m, std::move(images)));
    }
    return a;
  } catch (const json::exception& e) {
    throw Error(std::string("algebra JSON: ") + e.what());
  }
}

json super_algebra_json(const SuperStarAlgebra& s) {
  const auto& alg = s.alg;
  json products = json::array();
  for (Index i = 0; i < alg.dim(); ++i)
    for (Index j = 0; j < alg.dim(); ++j)
      if (!alg.product(i, j).is_zero()) products.push_back(json::array({i, j, vector_json(alg.product(i, j))}));
  json inv = json::array();
  for (const auto& col : s.superinv) inv.push_back(vector_json(col));
  SuperReport rep = check_superinvolution(s);
  return json{{"name", s.name},         {"dim", alg.dim()},   {"labels", alg.labels()}, {"parity", s.parity},
              {"products", products},   {"superinvolution", inv},
              {"unit", alg.unit() ? vector_json(*alg.unit()) : json(nullptr)},
              {"associative", !alg.associativity_counterexample().has_value()},
              {"superinvolution_ok", rep.ok()}};
}

json verdict_json(const StarAlgebra& a, const Verdict& v) {
  json out{{"status", to_string(v.status)}};
  if (v.witness) {
    json w = json::object();
    for (const auto& [slot, val] : *v.witness) w[to_string(slot)] = format_element(a, val);
    out["witness"] = w;
  }
  if (v.value) out["value"] = format_element(a, *v.value);
  return out;
}

json codim_json(const CodimResult& r) {
  return json{{"n", r.n}, {"c_star", r.c_star}, {"c_z", r.c_z}, {"c_delta", r.c_delta},
              {"method", to_string(r.method)}};
}

json exponent_json(const StarAlgebra& a, const ExponentReport& r) {
  json out{{"exp_star", r.exp_star},
           {"exp_delta_lower", r.exp_delta_lower},
           {"exp_delta_upper", r.exp_delta_upper},
           {"confirmed", r.confirmed},
           {"best_admissible", r.best_admissible},
           {"admissible_ordering", r.admissible_ordering},
           {"notes", r.notes}};
  if (r.witness) {
    json vals = json::object();
    for (const auto& [slot, val] : r.witness->values) vals[to_string(slot)] = format_element(a, val);
    json des = json::object();
    for (const auto& [slot, comp] : r.witness->designation) des[to_string(slot)] = comp;
    out["witness"] = json{{"poly", r.witness->text}, {"values", vals}, {"designation", des}, {"subset", r.witness->subset}};
  } else {
    out["witness"] = nullptr;
  }
  return out;
}

json lemma_json(const LemmaReport& r) {
  json parts = json::array();
  for (auto s : r.j_parts) parts.push_back(s == Sign::plus ? "+" : "-");
  json iso = json::array();
  for (const auto& col : r.iso) iso.push_back(vector_json(col));
  return json{{"pattern", to_string(r.pattern)},
              {"branch", r.dependent ? "dependent" : "independent"},
              {"alpha", r.alpha},
              {"j_parts", parts},
              {"target", "A" + std::to_string(r.target)},
              {"b_dim", r.b_dim},
              {"i_dim", r.i_dim},
              {"quotient_dim", r.quotient_dim},
              {"bijective", r.iso_report.bijective},
              {"multiplicative", r.iso_report.multiplicative},
              {"star_compatible", r.iso_report.star_compatible},
              {"center_preserved", r.center_preserved},
              {"verified", r.verified},
              {"iso", iso}};
}

LemmaDescriptor lemma_from_json(const json& j) {
  try {
    LemmaDescriptor d;
    d.input.pattern = parse_pattern(j.at("pattern").get<std::string>());
    const auto& alg = j.at("algebra");
    if (alg.is_string()) {
      CatalogItem item = catalog_lookup(alg.get<std::string>());
      auto* a = std::get_if<StarAlgebra>(&item);
      if (!a) throw Error("lemma: " + alg.get<std::string>() + " is a superalgebra");
      d.algebra = *a;
    } else {
      d.algebra = algebra_from_json(alg);
    }
    auto elem = [&](const json& e) {
      return e.is_string() ? parse_element(d.algebra, e.get<std::string>()) : vector_from_json(e, d.algebra.dim());
    };
    for (const auto& e : j.at("idempotents")) d.input.idempotents.push_back(elem(e));
    for (const auto& e : j.at("js")) d.input.js.push_back(elem(e));
    if (j.contains("e2_minus") && !j["e2_minus"].is_null()) d.input.e2_minus = elem(j["e2_minus"]);
    if (j.contains("choice")) {
      const auto c = j["choice"].get<std::string>();
      if (c != "minus" && c != "plus") throw Error("lemma: choice is \"minus\" or \"plus\"");
      d.input.choice = c == "minus" ? BranchChoice::minus : BranchChoice::plus;
    }
    return d;
  } catch (const json::exception& e) {
    throw Error(std::string("lemma descriptor: ") + e.what());
  }
}

}  // namespace pistar
