#include "pistar/claims.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <fstream>
#include <functional>
#include <iomanip>
#include <sstream>
#include <thread>

#include "pistar/codim.hpp"
#include "pistar/exponent.hpp"
#include "pistar/lemma_lab.hpp"

namespace pistar {

using nlohmann::json;

namespace {

constexpr std::pair<ClaimKind, const char*> kKindNames[] = {
    {ClaimKind::identity_member, "identity_member"},
    {ClaimKind::identity_nonmember, "identity_nonmember"},
    {ClaimKind::central_proper, "central_proper"},
    {ClaimKind::center_equals, "center_equals"},
    {ClaimKind::witness_value, "witness_value"},
    {ClaimKind::dimension, "dimension"},
    {ClaimKind::exp_star, "exp_star"},
    {ClaimKind::exp_delta_confirmed, "exp_delta_confirmed"},
    {ClaimKind::lemma_construction, "lemma_construction"},
    {ClaimKind::codim_value, "codim_value"},
    {ClaimKind::admissible, "admissible"},
};

}  // namespace

std::string to_string(ClaimKind k) {
  for (auto [kind, name] : kKindNames)
    if (kind == k) return name;
  return "?";
}

ClaimKind parse_claim_kind(std::string_view s) {
  for (auto [kind, name] : kKindNames)
    if (s == name) return kind;
  throw Error("unknown claim kind '" + std::string(s) + "'");
}

std::string to_string(ClaimStatus s) {
  switch (s) {
    case ClaimStatus::verified:
      return "verified";
    case ClaimStatus::refuted:
      return "refuted";
    case ClaimStatus::ambiguous_resolved:
      return "ambiguous_resolved";
    case ClaimStatus::ambiguous_unresolved:
      return "ambiguous_unresolved";
    case ClaimStatus::skipped:
      return "skipped";
  }
  return "?";
}

int ClaimsReport::exit_code() const {
  if (summary.refuted) return 1;
  if (summary.ambiguous_unresolved) return 3;
  return 0;
}

// ------------------------------------------------------------------ runner

namespace {

// Thrown for claims that cannot be set up (unknown algebra, bad element
// text); these become "skipped" rather than "refuted".
struct SetupError : Error {
  using Error::Error;
};

StarAlgebra algebra_for(const std::string& name, std::optional<int> k, std::size_t degree) {
  const int idx = catalog_index(name);
  const bool envelope = idx == 3 || idx == 4 || name.rfind("E(", 0) == 0;
  const int kk = k ? *k : envelope ? static_cast<int>(std::max<std::size_t>(degree, 1)) : 1;
  try {
    CatalogItem item = catalog_lookup(name, kk);
    if (auto* a = std::get_if<StarAlgebra>(&item)) return *a;
  } catch (const Error& e) {
    throw SetupError(e.what());
  }
  throw SetupError(name + " is a superalgebra, not a *-algebra");
}

Vector element_for(const StarAlgebra& a, const std::string& text) {
  try {
    return parse_element(a, text);
  } catch (const Error& e) {
    throw SetupError("element '" + text + "' in " + a.name() + ": " + e.what());
  }
}

int catalog_index_for(const std::string& name) {
  int i = catalog_index(name);
  if (!i) throw SetupError(name + " is not one of A1..A14");
  return i;
}

std::string describe_witness(const StarAlgebra& a, const Verdict& v) {
  std::string s;
  if (v.witness) s += " at " + format_assignment(a, *v.witness);
  if (v.value) s += " -> " + format_element(a, *v.value);
  return s;
}

using Check = std::function<std::optional<std::string>(const PolyAst&)>;

std::optional<std::string> check_membership(const Claim& c, const PolyAst& f) {
  const std::size_t deg = ast_slots(f).size();
  for (const auto& name : c.algebras) {
    StarAlgebra a = algebra_for(name, c.grassmann_k, deg);
    Verdict v = classify(f, a);
    if (c.kind == ClaimKind::identity_member && v.status != Status::identity)
      return "not an identity of " + name + describe_witness(a, v);
    if (c.kind == ClaimKind::identity_nonmember && v.status == Status::identity) return "identity of " + name;
  }
  for (const auto& name : c.nonmembers) {
    StarAlgebra a = algebra_for(name, c.grassmann_k, deg);
    if (is_identity(f, a)) return "identity of " + name;
  }
  return std::nullopt;
}

std::optional<std::string> check_central(const Claim& c, const PolyAst& f) {
  const std::size_t deg = ast_slots(f).size();
  for (const auto& name : c.algebras) {
    StarAlgebra a = algebra_for(name, c.grassmann_k, deg);
    Verdict v = classify(f, a);
    if (v.status != Status::proper_central) return name + ": " + to_string(v.status) + describe_witness(a, v);
  }
  return std::nullopt;
}

std::optional<std::string> check_witness(const Claim& c, const PolyAst& f) {
  if (c.algebras.size() != 1) throw SetupError("witness_value needs exactly one algebra");
  StarAlgebra a = algebra_for(c.algebras[0], c.grassmann_k, ast_slots(f).size());
  Assignment s;
  for (const auto& [slot, val] : c.assignment) {
    SignedVar v;
    try {
      v = parse_slot(slot);
    } catch (const Error& e) {
      throw SetupError(e.what());
    }
    s[v] = element_for(a, val);
  }
  Vector got = evaluate_ast(f, a, s, false);
  Vector want = element_for(a, c.expected);
  if (got != want) return "value is " + format_element(a, got) + ", expected " + format_element(a, want);
  return std::nullopt;
}

// Applies a polynomial check to the verbatim text or, when that does not
// parse, to each shipped reading in order.
ClaimResult run_poly_claim(const Claim& c, const Check& check) {
  ClaimResult r;
  r.id = c.id;
  std::optional<PolyAst> verbatim;
  std::string parse_error;
  try {
    verbatim = parse(c.poly);
    ast_slots(*verbatim);
  } catch (const Error& e) {
    verbatim.reset();
    parse_error = e.what();
  }
  if (verbatim) {
    auto fail = check(*verbatim);
    r.status = fail ? ClaimStatus::refuted : ClaimStatus::verified;
    if (fail) r.detail = *fail;
    return r;
  }
  if (c.readings.empty()) {
    r.status = ClaimStatus::skipped;
    r.detail = "does not parse: " + parse_error;
    return r;
  }
  std::vector<std::string> failures;
  for (const auto& reading : c.readings) {
    std::optional<std::string> fail;
    try {
      PolyAst f = parse(reading);
      ast_slots(f);
      fail = check(f);
    } catch (const SetupError&) {
      throw;
    } catch (const Error& e) {
      fail = std::string("does not parse: ") + e.what();
    }
    if (!fail) {
      r.status = ClaimStatus::ambiguous_resolved;
      r.reading = reading;
      return r;
    }
    failures.push_back("'" + reading + "': " + *fail);
  }
  r.status = ClaimStatus::ambiguous_unresolved;
  for (std::size_t i = 0; i < failures.size(); ++i) r.detail += (i ? "; " : "") + failures[i];
  return r;
}

std::size_t expected_number(const Claim& c) {
  try {
    std::size_t pos = 0;
    long v = std::stol(c.expected, &pos);
    if (pos != c.expected.size() || v < 0) throw Error("");
    return static_cast<std::size_t>(v);
  } catch (...) {
    throw SetupError("expected value '" + c.expected + "' is not a nonnegative integer");
  }
}

const std::string& single_algebra(const Claim& c) {
  if (c.algebras.size() != 1) throw SetupError(to_string(c.kind) + " needs exactly one algebra");
  return c.algebras[0];
}

ClaimResult verdict(const Claim& c, std::optional<std::string> fail) {
  ClaimResult r;
  r.id = c.id;
  r.status = fail ? ClaimStatus::refuted : ClaimStatus::verified;
  if (fail) r.detail = *fail;
  return r;
}

ClaimResult run_center(const Claim& c) {
  StarAlgebra a = algebra_for(single_algebra(c), c.grassmann_k, 1);
  std::vector<Vector> gens;
  for (const auto& e : c.elements) gens.push_back(element_for(a, e));
  Subspace want = Subspace::span(a.dim(), gens);
  const Subspace& z = a.center();
  if (want == z) return verdict(c, std::nullopt);
  std::string got;
  for (const auto& v : z.rows()) got += (got.empty() ? "" : ", ") + format_element(a, v);
  return verdict(c, "center has dimension " + std::to_string(z.dim()) + ", basis {" + got + "}");
}

ClaimResult run_exponent(const Claim& c) {
  const int i = catalog_index_for(single_algebra(c));
  const std::size_t want = expected_number(c);
  ExponentReport e = catalog_exponent_report(i);
  if (c.kind == ClaimKind::exp_star) {
    if (e.exp_star == want) return verdict(c, std::nullopt);
    return verdict(c, "exp* = " + std::to_string(e.exp_star));
  }
  if (e.confirmed && e.exp_delta_lower == want) return verdict(c, std::nullopt);
  std::string why = "interval [" + std::to_string(e.exp_delta_lower) + ", " + std::to_string(e.exp_delta_upper) + "]";
  why += e.confirmed ? " confirmed" : " not confirmed";
  for (const auto& n : e.notes) why += "; " + n;
  return verdict(c, why);
}

ClaimResult run_admissible(const Claim& c) {
  const int i = catalog_index_for(single_algebra(c));
  WedderburnData d = wedderburn_data(i);
  std::vector<std::size_t> subset;
  for (const auto& text : c.elements) {
    Vector v;
    try {
      v = parse_element(d.source, text);
    } catch (const Error&) {
      return verdict(c, "'" + text + "' is not an element of " + d.source.name());
    }
    std::optional<std::size_t> hit;
    for (std::size_t k = 0; k < d.components.size(); ++k)
      if (d.components[k].space.contains(v)) hit = k;
    if (!hit) return verdict(c, "'" + text + "' lies in no semisimple component");
    if (std::find(subset.begin(), subset.end(), *hit) != subset.end())
      return verdict(c, "'" + text + "' repeats component " + d.components[*hit].label);
    subset.push_back(*hit);
  }
  Admissibility adm = is_admissible(d, subset);
  if (!adm.admissible) return verdict(c, "the components are not admissible in any order");
  const std::size_t dim = component_dimension(d, subset);
  if (!c.expected.empty() && dim != expected_number(c))
    return verdict(c, "admissible of dimension " + std::to_string(dim));
  ExpStar best = exp_star(d);
  if (dim != best.value) return verdict(c, "not maximal: exp* = " + std::to_string(best.value));
  return verdict(c, std::nullopt);
}

ClaimResult run_lemma_claim(const Claim& c) {
  LemmaPatternId id;
  try {
    id = parse_pattern(c.lemma_pattern);
  } catch (const Error& e) {
    throw SetupError(e.what());
  }
  LemmaInstance inst = [&] {
    if (c.lemma_variant == "0" || c.lemma_variant == "1") return canonical_instance(id, c.lemma_variant == "1");
    if (c.lemma_variant == "minus") return synthetic_instance(id, BranchChoice::minus);
    if (c.lemma_variant == "plus") return synthetic_instance(id, BranchChoice::plus);
    throw SetupError("unknown lemma variant '" + c.lemma_variant + "'");
  }();
  const int want = catalog_index_for(c.expected);
  try {
    LemmaReport r = run_lemma(inst.algebra, inst.input);
    if (r.target != want) return verdict(c, "landed on A" + std::to_string(r.target));
    if (!r.iso_report.ok())
      return verdict(c, "map is not a *-isomorphism" +
                            (r.iso_report.counterexample ? ": " + *r.iso_report.counterexample : std::string()));
    if (!r.center_preserved) return verdict(c, "center not preserved");
    return verdict(c, std::nullopt);
  } catch (const Error& e) {
    return verdict(c, e.what());
  }
}

ClaimResult run_codim(const Claim& c) {
  if (!c.n || *c.n < 1) throw SetupError("codim_value needs n >= 1");
  StarAlgebra a = algebra_for(single_algebra(c), c.grassmann_k, static_cast<std::size_t>(*c.n));
  std::vector<std::size_t> want;
  std::stringstream in(c.expected);
  std::string part;
  while (std::getline(in, part, ',')) {
    Claim tmp;
    tmp.expected = part;
    want.push_back(expected_number(tmp));
  }
  if (want.size() != 3) throw SetupError("codim_value expects \"c*,cz,cdelta\"");
  CodimResult r = codimensions(a, *c.n);
  if (r.c_star == want[0] && r.c_z == want[1] && r.c_delta == want[2]) return verdict(c, std::nullopt);
  return verdict(c, "got " + std::to_string(r.c_star) + "," + std::to_string(r.c_z) + "," +
                        std::to_string(r.c_delta));
}

}  // namespace

ClaimResult run_claim(const Claim& c) {
  const auto t0 = std::chrono::steady_clock::now();
  ClaimResult r;
  r.id = c.id;
  try {
    switch (c.kind) {
      case ClaimKind::identity_member:
      case ClaimKind::identity_nonmember:
        r = run_poly_claim(c, [&](const PolyAst& f) { return check_membership(c, f); });
        break;
      case ClaimKind::central_proper:
        r = run_poly_claim(c, [&](const PolyAst& f) { return check_central(c, f); });
        break;
      case ClaimKind::witness_value:
        r = run_poly_claim(c, [&](const PolyAst& f) { return check_witness(c, f); });
        break;
      case ClaimKind::center_equals:
        r = run_center(c);
        break;
      case ClaimKind::dimension: {
        StarAlgebra a = algebra_for(single_algebra(c), c.grassmann_k, 1);
        const std::size_t want = expected_number(c);
        r = verdict(c, a.dim() == want ? std::nullopt
                                       : std::optional<std::string>("dimension is " + std::to_string(a.dim())));
        break;
      }
      case ClaimKind::exp_star:
      case ClaimKind::exp_delta_confirmed:
        r = run_exponent(c);
        break;
      case ClaimKind::admissible:
        r = run_admissible(c);
        break;
      case ClaimKind::lemma_construction:
        r = run_lemma_claim(c);
        break;
      case ClaimKind::codim_value:
        r = run_codim(c);
        break;
    }
  } catch (const std::exception& e) {
    r = ClaimResult{};
    r.status = ClaimStatus::skipped;
    r.detail = e.what();
  }
  r.id = c.id;
  r.seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
  return r;
}

ClaimsReport run_claims(const std::vector<Claim>& claims, const ClaimsOptions& opt) {
  std::vector<const Claim*> todo;
  for (const auto& c : claims)
    if (opt.only.empty() || opt.only.count(c.id)) todo.push_back(&c);
  for (const auto& id : opt.only)
    if (std::none_of(claims.begin(), claims.end(), [&](const Claim& c) { return c.id == id; }))
      throw Error("no claim with id '" + id + "'");

  ClaimsReport rep;
  rep.results.resize(todo.size());
  std::atomic<std::size_t> next{0};
  auto worker = [&] {
    for (std::size_t i; (i = next++) < todo.size();) rep.results[i] = run_claim(*todo[i]);
  };
  const unsigned n = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(todo.size())));
  std::vector<std::jthread> pool;
  for (unsigned t = 1; t < n; ++t) pool.emplace_back(worker);
  worker();
  pool.clear();

  std::stable_sort(rep.results.begin(), rep.results.end(),
                   [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; });
  auto& s = rep.summary;
  s.total = rep.results.size();
  for (const auto& r : rep.results) {
    switch (r.status) {
      case ClaimStatus::verified:
        ++s.verified;
        break;
      case ClaimStatus::refuted:
        ++s.refuted;
        break;
      case ClaimStatus::ambiguous_resolved:
        ++s.ambiguous_resolved;
        break;
      case ClaimStatus::ambiguous_unresolved:
        ++s.ambiguous_unresolved;
        break;
      case ClaimStatus::skipped:
        ++s.skipped;
        break;
    }
  }
  return rep;
}

// -------------------------------------------------------------------- JSON

void to_json(json& j, const Claim& c) {
  j = json{{"id", c.id}, {"kind", to_string(c.kind)}, {"algebras", c.algebras}};
  if (!c.nonmembers.empty()) j["nonmembers"] = c.nonmembers;
  if (c.grassmann_k) j["grassmann_k"] = *c.grassmann_k;
  if (!c.poly.empty()) j["poly"] = c.poly;
  if (!c.readings.empty()) j["readings"] = c.readings;
  if (!c.assignment.empty()) {
    json a = json::array();
    for (const auto& [slot, val] : c.assignment) a.push_back({slot, val});
    j["assignment"] = a;
  }
  if (!c.elements.empty()) j["elements"] = c.elements;
  if (!c.expected.empty()) j["expected"] = c.expected;
  if (c.n) j["n"] = *c.n;
  if (!c.lemma_pattern.empty()) j["lemma_pattern"] = c.lemma_pattern;
  if (!c.lemma_variant.empty()) j["lemma_variant"] = c.lemma_variant;
  j["origin"] = c.origin;
  if (!c.location.empty()) j["location"] = c.location;
  if (!c.source.empty()) j["source"] = c.source;
}

void from_json(const json& j, Claim& c) {
  c = Claim{};
  c.id = j.at("id").get<std::string>();
  c.kind = parse_claim_kind(j.at("kind").get<std::string>());
  c.algebras = j.value("algebras", std::vector<std::string>{});
  c.nonmembers = j.value("nonmembers", std::vector<std::string>{});
  if (j.contains("grassmann_k")) c.grassmann_k = j["grassmann_k"].get<int>();
  c.poly = j.value("poly", std::string{});
  c.readings = j.value("readings", std::vector<std::string>{});
  if (j.contains("assignment"))
    for (const auto& p : j["assignment"]) {
      if (!p.is_array() || p.size() != 2) throw Error("claim " + c.id + ": assignment entries are [slot, element]");
      c.assignment.emplace_back(p[0].get<std::string>(), p[1].get<std::string>());
    }
  c.elements = j.value("elements", std::vector<std::string>{});
  if (j.contains("expected")) {
    const auto& e = j["expected"];
    c.expected = e.is_string() ? e.get<std::string>() : e.dump();
  }
  if (j.contains("n")) c.n = j["n"].get<int>();
  c.lemma_pattern = j.value("lemma_pattern", std::string{});
  c.lemma_variant = j.value("lemma_variant", std::string{});
  c.origin = j.value("origin", std::string("stated"));
  c.location = j.value("location", std::string{});
  c.source = j.value("source", std::string{});
}

json report_json(const ClaimsReport& r) {
  json results = json::array();
  for (const auto& x : r.results) {
    json e{{"id", x.id}, {"status", to_string(x.status)}};
    if (x.reading) e["reading"] = *x.reading;
    if (!x.detail.empty()) e["detail"] = x.detail;
    results.push_back(e);
  }
  const auto& s = r.summary;
  return json{{"results", results},
              {"summary",
               {{"total", s.total},
                {"verified", s.verified},
                {"refuted", s.refuted},
                {"ambiguous_resolved", s.ambiguous_resolved},
                {"ambiguous_unresolved", s.ambiguous_unresolved},
                {"skipped", s.skipped}}}};
}

std::string report_table(const ClaimsReport& r) {
  std::size_t w = 2;
  for (const auto& x : r.results) w = std::max(w, x.id.size());
  std::ostringstream out;
  out << std::left << std::setw(static_cast<int>(w)) << "id" << "  " << std::setw(21) << "status" << "detail\n";
  for (const auto& x : r.results) {
    out << std::setw(static_cast<int>(w)) << x.id << "  " << std::setw(21) << to_string(x.status);
    if (x.reading) out << "reading: " << *x.reading;
    if (!x.detail.empty()) out << (x.reading ? "; " : "") << x.detail;
    out << "\n";
  }
  const auto& s = r.summary;
  out << "\n"
      << s.total << " claims: " << s.verified << " verified, " << s.refuted << " refuted, " << s.ambiguous_resolved
      << " resolved by a reading, " << s.ambiguous_unresolved << " unresolved, " << s.skipped << " skipped\n";
  return out.str();
}

std::vector<Claim> load_claims(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error("cannot open '" + path + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw Error("'" + path + "': " + e.what());
  }
  if (!j.is_array()) throw Error("'" + path + "': expected a JSON array of claims");
  try {
    return j.get<std::vector<Claim>>();
  } catch (const json::exception& e) {
    throw Error("'" + path + "': " + e.what());
  }
}

}  // namespace pistar
