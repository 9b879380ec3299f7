// One PASS/FAIL line per acceptance criterion; exit status 1 if any fails.
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "pistar/catalog.hpp"
#include "pistar/claims.hpp"
#include "pistar/codim.hpp"
#include "pistar/evaluator.hpp"
#include "pistar/exponent.hpp"
#include "pistar/lemma_lab.hpp"
#include "../unit/random_poly.hpp"

using namespace pistar;

namespace {

// Collects failures; a criterion passes when the list stays empty.
struct Log {
  std::vector<std::string> failures;
  std::vector<std::string> notes;
  void expect(bool ok, const std::string& what) {
    if (!ok) failures.push_back(what);
  }
};

struct Criterion {
  int number;
  const char* title;
  double budget_s;
  std::function<void(Log&)> body;
};

StarAlgebra named(const char* name) { return std::get<StarAlgebra>(catalog_lookup(name)); }

std::string idx(int i) { return "A" + std::to_string(i); }

void construction(Log& log) {
  const std::size_t dims[] = {4, 4, 0, 0, 14, 14, 22, 22, 8, 8, 8, 8, 14, 14};
  for (int i = 1; i <= 14; ++i) {
    const bool env = i == 3 || i == 4;
    for (int k = 1; k <= (env ? 3 : 1); ++k) {
      StarAlgebra a = catalog_algebra(i, k);
      const std::string tag = idx(i) + (env ? " k=" + std::to_string(k) : "");
      const std::size_t want = env ? (std::size_t{1} << (k + 1)) : dims[i - 1];
      log.expect(a.dim() == want, tag + ": dim " + std::to_string(a.dim()) + " != " + std::to_string(want));
      log.expect(!a.alg().associativity_counterexample(), tag + ": not associative");
      log.expect(a.alg().unit_ok(), tag + ": bad unit");
      log.expect(check_involution(a.alg(), a.involution()).ok(), tag + ": involution axioms fail");
    }
  }
  for (const char* n : {"N", "M", "P", "Q", "R"})
    for (auto inv : {MatrixInvolution::reflection, MatrixInvolution::symplectic}) {
      try {
        StarAlgebra s = ut_star(n, inv, n);
        log.expect(check_involution(s.alg(), s.involution()).ok(), std::string(n) + ": involution axioms fail");
      } catch (const Error& e) {
        log.expect(false, std::string(n) + ": " + e.what());
      }
    }
}

void centers(Log& log) {
  auto span_of = [](const StarAlgebra& a, std::initializer_list<const char*> elems) {
    Subspace s(a.dim());
    for (auto e : elems) s.insert(parse_element(a, e));
    return s;
  };
  struct Row {
    int i;
    std::initializer_list<const char*> basis;
  };
  const Row rows[] = {{5, {"e11+e22+e33+e44+e55+e66", "e16"}},
                      {7, {"e18"}},
                      {8, {"e18"}},
                      {9, {"e11+e22+e33+e44", "e14"}},
                      {10, {"e11+e22+e33+e44", "e14"}},
                      {13, {"e16"}},
                      {14, {"e16"}}};
  for (const auto& r : rows) {
    StarAlgebra a = catalog_algebra(r.i);
    log.expect(a.center() == span_of(a, r.basis), idx(r.i) + ": center differs");
  }
}

void witnesses(Log& log) {
  std::vector<Claim> all = builtin_ledger();
  for (const Claim& c : all) {
    if (c.id != "witness-A5" && c.id != "witness-A7" && c.id != "witness-A8") continue;
    ClaimResult r = run_claim(c);
    log.expect(r.status == ClaimStatus::verified, c.id + ": " + r.detail);
  }
}

void exponents(Log& log) {
  for (int i = 1; i <= 14; ++i) {
    ExponentReport r = catalog_exponent_report(i);
    const std::size_t want = i <= 4 ? 4 : 3;
    log.expect(r.exp_star == want, idx(i) + ": exp* = " + std::to_string(r.exp_star));
    std::ostringstream why;
    why << idx(i) << ": exp*delta in [" << r.exp_delta_lower << ", " << r.exp_delta_upper << "]";
    for (const auto& n : r.notes) why << "; " << n;
    log.expect(r.confirmed && r.exp_delta_lower == want && r.exp_delta_upper == want, why.str());
  }
}

void ledger(Log& log) {
  ClaimsOptions opt;
  opt.threads = 1;
  ClaimsReport rep = run_claims(builtin_ledger(), opt);
  log.expect(rep.summary.total == rep.results.size(), "summary count differs from result count");
  std::size_t ambiguous = 0, unresolved = 0;
  for (const auto& r : rep.results) {
    if (r.id.rfind("sep-", 0) != 0) continue;
    if (r.status == ClaimStatus::ambiguous_resolved || r.status == ClaimStatus::ambiguous_unresolved) {
      ++ambiguous;
      unresolved += r.status == ClaimStatus::ambiguous_unresolved;
      continue;
    }
    log.expect(r.status == ClaimStatus::verified, r.id + " " + to_string(r.status) + ": " + r.detail);
  }
  log.notes.push_back(std::to_string(ambiguous) + " ambiguous bullets, " + std::to_string(unresolved) +
                      " unresolved");
}

void lemmas(Log& log) {
  constexpr LemmaPatternId all[] = {LemmaPatternId::inner3,      LemmaPatternId::outer3,
                                    LemmaPatternId::innerF_FF,   LemmaPatternId::innerFF_F,
                                    LemmaPatternId::outer_mixed, LemmaPatternId::outer_mixed_b};
  for (auto id : all) {
    for (int member : {0, 1}) {
      LemmaInstance inst = canonical_instance(id, member);
      LemmaReport r = run_lemma(inst.algebra, inst.input);
      const std::size_t dim = catalog_algebra(inst.expected_target).dim();
      log.expect(r.verified && r.target == inst.expected_target && r.quotient_dim == dim && r.iso_report.ok(),
                 inst.label + ": canonical instance fails");
    }
    for (auto choice : {BranchChoice::minus, BranchChoice::plus}) {
      LemmaInstance inst = synthetic_instance(id, choice);
      LemmaReport r = run_lemma(inst.algebra, inst.input);
      log.expect(r.verified && !r.dependent && r.target == inst.expected_target, inst.label + ": synthetic fails");
    }
  }
}

// Criteria 7 and 9 share the same instances: every catalog algebra at n <= 3.
void codim_properties(Log& log, bool compare_modular) {
  std::mt19937 rng(2024);
  for (int i = 1; i <= 14; ++i) {
    for (int n = 1; n <= 3; ++n) {
      StarAlgebra a = catalog_algebra(i, n);
      const std::string tag = idx(i) + " n=" + std::to_string(n);
      CodimOptions ex;
      ex.mode = CodimMode::exact;
      CodimResult e = codimensions(a, n, ex);
      if (!compare_modular) {
        log.expect(e.c_delta == e.c_star - e.c_z, tag + ": c_delta != c_star - c_z");
        continue;
      }
      CodimOptions mod;
      mod.mode = CodimMode::modular;
      CodimResult m = codimensions(a, n, mod);
      log.expect(m.c_star == e.c_star && m.c_z == e.c_z && m.c_delta == e.c_delta, tag + ": modular != exact");
    }
    if (compare_modular) continue;
    StarAlgebra a = catalog_algebra(i, 3);
    int done = 0;
    while (done < 20) {
      PolyAst p = testing::random_ast(rng, testing::random_leaves(rng, 1 + done % 3));
      StarPolynomial f = expand(p);
      if (f.is_zero()) continue;
      ++done;
      Verdict v = classify(p, a);
      log.expect(in_left_kernel(a, f) == (v.status == Status::identity), idx(i) + ": kernel/identity " + render(p));
      log.expect(in_left_kernel(a, f, true) == (v.status != Status::noncentral),
                 idx(i) + ": kernel/central " + render(p));
    }
  }
  if (compare_modular) return;
  StarAlgebra f = named("F");
  for (int n = 1; n <= 4; ++n)
    log.expect(codimensions(f, n).c_star == 1, "F: c_" + std::to_string(n) + "* != 1");
  log.expect(codimensions(catalog_algebra(1), 1).c_star == 2, "A1: c_1* != 2");
  log.expect(codimensions(catalog_algebra(2), 1).c_star == 2, "A2: c_1* != 2");
  log.expect(codimensions(named("FplusF"), 1).c_star == 2, "FplusF: c_1* != 2");
}

void grassmann_oracle(Log& log) {
  std::vector<std::string> texts;
  for (const Claim& c : builtin_ledger()) {
    if (!c.poly.empty()) texts.push_back(c.poly);
    for (const auto& r : c.readings) texts.push_back(r);
  }
  std::size_t checked = 0;
  for (const auto& t : texts) {
    PolyAst p;
    try {
      p = parse(t);
    } catch (const ParseError&) {
      continue;
    }
    if (ast_slots(p).size() > 3 || expand(p).is_zero()) continue;
    for (int i : {3, 4}) {
      StarAlgebra a = catalog_algebra(i, 3);
      ClassifyOptions reg, full;
      reg.substitution = Substitution::regular;
      full.substitution = Substitution::full;
      Status r = classify(p, a, reg).status, b = classify(p, a, full).status;
      log.expect(r == b, idx(i) + " " + t + ": regular " + to_string(r) + ", full " + to_string(b));
    }
    ++checked;
  }
  log.expect(checked > 0, "no ledger polynomial of degree <= 3");
  log.notes.push_back(std::to_string(checked) + " polynomials");
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "construction", 5, construction},
      {2, "centers", 1, centers},
      {3, "witness evaluations", 1, witnesses},
      {4, "exponents", 60, exponents},
      {5, "claim ledger", 600, ledger},
      {6, "lemma constructions", 30, lemmas},
      {7, "codimension properties", 600, [](Log& l) { codim_properties(l, false); }},
      {8, "grassmann reduction", 300, grassmann_oracle},
      {9, "modular vs exact rank", 600, [](Log& l) { codim_properties(l, true); }},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    Log log;
    const auto t0 = std::chrono::steady_clock::now();
    try {
      c.body(log);
    } catch (const std::exception& e) {
      log.failures.push_back(std::string("exception: ") + e.what());
    }
    const double s = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    if (s > c.budget_s) log.failures.push_back("over the time budget");
    const bool ok = log.failures.empty();
    failed += !ok;
    std::cout << (ok ? "PASS" : "FAIL") << " criterion " << c.number << " (" << c.title << ") " << std::fixed
              << std::setprecision(2) << s << " s / " << std::setprecision(0) << c.budget_s << " s";
    for (const auto& n : log.notes) std::cout << "; " << n;
    std::cout << "\n";
    for (const auto& f : log.failures) std::cout << "    " << f << "\n";
  }
  std::cout << (criteria.size() - failed) << "/" << criteria.size() << " criteria passed\n";
  return failed ? 1 : 0;
}
