#include "pistar/cli.hpp"

#include <CLI11.hpp>

#include <fstream>
#include <iostream>
#include <sstream>
#include <thread>

#include "pistar/catalog.hpp"
#include "pistar/claims.hpp"
#include "pistar/codim.hpp"
#include "pistar/exponent.hpp"
#include "pistar/lemma_lab.hpp"
#include "pistar/serialize.hpp"

namespace pistar {

using nlohmann::json;

namespace {

struct UsageError : Error {
  using Error::Error;
};

struct Config {
  unsigned threads = std::max(1u, std::thread::hardware_concurrency());
  std::string format = "table";
  std::optional<std::size_t> row_cap;
  std::optional<int> grassmann_k;

  std::string algebra;
  std::string algebra_file;
  std::string poly;
  std::string check_mode;
  std::string substitution = "auto";
  int n = 0;
  std::string kind;
  std::string codim_mode = "auto";
  std::string file;
  std::string claims_file;
  std::vector<std::string> only;
  std::string show_name;
};

StarAlgebra load_algebra(const Config& cfg, std::size_t degree) {
  if (!cfg.algebra_file.empty()) {
    if (!cfg.algebra.empty()) throw UsageError("give --algebra or --algebra-file, not both");
    std::ifstream in(cfg.algebra_file);
    if (!in) throw UsageError("cannot open '" + cfg.algebra_file + "'");
    json j;
    try {
      in >> j;
    } catch (const json::exception& e) {
      throw UsageError("'" + cfg.algebra_file + "': " + e.what());
    }
    return algebra_from_json(j);
  }
  if (cfg.algebra.empty()) throw UsageError("--algebra or --algebra-file is required");
  const int idx = catalog_index(cfg.algebra);
  const bool envelope = idx == 3 || idx == 4 || cfg.algebra.rfind("E(", 0) == 0;
  const int k = cfg.grassmann_k ? *cfg.grassmann_k : envelope ? static_cast<int>(std::max<std::size_t>(degree, 1)) : 1;
  CatalogItem item = catalog_lookup(cfg.algebra, k);
  if (auto* a = std::get_if<StarAlgebra>(&item)) return *a;
  throw UsageError(cfg.algebra + " is a superalgebra; only catalog show accepts it");
}

void emit(std::ostream& out, const json& j) { out << j.dump(2) << "\n"; }

int cmd_catalog_list(const Config& cfg, std::ostream& out) {
  const auto names = catalog_names();
  if (cfg.format == "json") {
    emit(out, names);
  } else {
    for (const auto& n : names) out << n << "\n";
  }
  return 0;
}

int cmd_catalog_show(const Config& cfg, std::ostream& out) {
  const int k = cfg.grassmann_k.value_or(3);
  CatalogItem item = catalog_lookup(cfg.show_name, k);
  if (auto* s = std::get_if<SuperStarAlgebra>(&item)) {
    json j = super_algebra_json(*s);
    if (cfg.format == "json") {
      emit(out, j);
    } else {
      out << "name: " << s->name << "\ndim: " << s->alg.dim() << "\nkind: superalgebra with superinvolution\n";
      out << "superinvolution ok: " << (j["superinvolution_ok"].get<bool>() ? "yes" : "no") << "\n";
      out << "basis:";
      for (std::size_t i = 0; i < s->alg.dim(); ++i) out << " " << s->alg.labels()[i] << (s->parity[i] ? "(1)" : "(0)");
      out << "\n";
    }
    return 0;
  }
  const auto& a = std::get<StarAlgebra>(item);
  json j = algebra_json(a);
  if (cfg.format == "json") {
    emit(out, j);
    return 0;
  }
  out << "name: " << a.name() << "\ndim: " << a.dim() << "\n";
  out << "associative: " << (j["associative"].get<bool>() ? "yes" : "no") << "\n";
  out << "symmetric part: " << a.plus().dim() << "\nskew part: " << a.minus().dim() << "\n";
  out << "basis:";
  for (const auto& l : a.alg().labels()) out << " " << l;
  out << "\ncenter:";
  for (const auto& z : j["center"]) out << " [" << z.get<std::string>() << "]";
  out << "\n";
  return 0;
}

int cmd_check(const Config& cfg, std::ostream& out) {
  PolyAst f;
  try {
    f = parse(cfg.poly);
  } catch (const ParseError& e) {
    throw UsageError(e.what());
  }
  const std::size_t deg = ast_slots(f).size();
  StarAlgebra a = load_algebra(cfg, deg);
  ClassifyOptions opt;
  opt.threads = cfg.threads;
  opt.substitution = cfg.substitution == "full"      ? Substitution::full
                     : cfg.substitution == "regular" ? Substitution::regular
                                                     : Substitution::automatic;
  Verdict v = classify(f, a, opt);
  if (cfg.format == "json") {
    json j = verdict_json(a, v);
    j["algebra"] = a.name();
    j["poly"] = render(f);
    emit(out, j);
  } else {
    out << "algebra: " << a.name() << "\npoly: " << render(f) << "\nstatus: " << to_string(v.status) << "\n";
    if (v.witness) out << "witness: " << format_assignment(a, *v.witness) << "\n";
    if (v.value) out << "value: " << format_element(a, *v.value) << "\n";
  }
  if (cfg.check_mode.empty()) return 0;
  bool ok = cfg.check_mode == "identity" ? v.status == Status::identity
            : cfg.check_mode == "central" ? v.status != Status::noncentral
                                          : v.status == Status::proper_central;
  return ok ? 0 : 1;
}

int cmd_codim(const Config& cfg, std::ostream& out) {
  if (cfg.n < 1) throw UsageError("--n must be at least 1");
  StarAlgebra a = load_algebra(cfg, static_cast<std::size_t>(cfg.n));
  CodimOptions opt;
  opt.threads = cfg.threads;
  opt.row_cap = cfg.row_cap;
  opt.mode = cfg.codim_mode == "exact"               ? CodimMode::exact
             : cfg.codim_mode == "modular"           ? CodimMode::modular
             : cfg.codim_mode == "modular-certified" ? CodimMode::modular_certified
                                                     : CodimMode::automatic;
  CodimResult r = codimensions(a, cfg.n, opt);
  json j = codim_json(r);
  j["algebra"] = a.name();
  if (cfg.format == "json") {
    emit(out, j);
    return 0;
  }
  if (!cfg.kind.empty()) {
    out << (cfg.kind == "star" ? r.c_star : cfg.kind == "z" ? r.c_z : r.c_delta) << "\n";
    return 0;
  }
  out << "algebra: " << a.name() << "\nn: " << r.n << "\nc_star: " << r.c_star << "\nc_z: " << r.c_z
      << "\nc_delta: " << r.c_delta << "\nmethod: " << to_string(r.method) << "\n";
  return 0;
}

int cmd_exponent(const Config& cfg, std::ostream& out) {
  const int i = catalog_index(cfg.algebra);
  if (!i) throw UsageError("exponent needs a catalog algebra A1..A14 (Wedderburn data is catalog supplied)");
  ExponentReport r = catalog_exponent_report(i);
  StarAlgebra a = (i == 3 || i == 4) ? catalog_algebra(i, static_cast<int>(ast_slots(parse(catalog_witness(i).poly)).size()))
                                     : catalog_algebra(i);
  json j = exponent_json(a, r);
  j["algebra"] = a.name();
  if (cfg.format == "json") {
    emit(out, j);
  } else {
    out << "algebra: " << a.name() << "\nexp_star: " << r.exp_star << "\nexp_delta: [" << r.exp_delta_lower << ", "
        << r.exp_delta_upper << "]" << (r.confirmed ? " confirmed" : " not confirmed") << "\n";
    if (r.witness)
      out << "witness: " << r.witness->text << " at " << format_assignment(a, r.witness->values) << "\n";
    for (const auto& n : r.notes) out << "note: " << n << "\n";
  }
  return r.confirmed ? 0 : 1;
}

int cmd_lemma(const Config& cfg, std::ostream& out) {
  std::ifstream in(cfg.file);
  if (!in) throw UsageError("cannot open '" + cfg.file + "'");
  json j;
  try {
    in >> j;
  } catch (const json::exception& e) {
    throw UsageError("'" + cfg.file + "': " + e.what());
  }
  LemmaDescriptor d;
  try {
    d = lemma_from_json(j);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  LemmaReport r = run_lemma(d.algebra, d.input);
  if (cfg.format == "json") {
    emit(out, lemma_json(r));
  } else {
    out << "pattern: " << to_string(r.pattern) << "\nbranch: " << (r.dependent ? "dependent" : "independent")
        << ", alpha = " << r.alpha << "\ntarget: A" << r.target << "\ndim B = " << r.b_dim << ", dim I = " << r.i_dim
        << ", dim B/I = " << r.quotient_dim << "\n*-isomorphism: " << (r.iso_report.ok() ? "yes" : "no")
        << "\ncenter preserved: " << (r.center_preserved ? "yes" : "no")
        << "\nverified: " << (r.verified ? "yes" : "no") << "\n";
    if (r.iso_report.counterexample) out << "counterexample: " << *r.iso_report.counterexample << "\n";
  }
  return r.verified ? 0 : 1;
}

int cmd_verify(const Config& cfg, std::ostream& out) {
  std::vector<Claim> claims = cfg.claims_file.empty() ? builtin_ledger() : load_claims(cfg.claims_file);
  ClaimsOptions opt;
  opt.threads = cfg.threads;
  opt.only.insert(cfg.only.begin(), cfg.only.end());
  ClaimsReport r;
  try {
    r = run_claims(claims, opt);
  } catch (const Error& e) {
    throw UsageError(e.what());
  }
  if (cfg.format == "json")
    emit(out, report_json(r));
  else
    out << report_table(r);
  return r.exit_code();
}

}  // namespace

int run_cli(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  Config cfg;
  CLI::App app{"pistar: *-algebras, *-polynomial identities and central polynomials"};
  app.require_subcommand(1);
  app.set_help_all_flag("--help-all");

  app.add_option("--threads", cfg.threads, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--format", cfg.format, "output format")->check(CLI::IsMember({"table", "json"}));
  app.add_option("--row-cap", cfg.row_cap, "codim row guard (overrides PISTAR_ROW_CAP)")->check(CLI::PositiveNumber);
  app.add_option("--grassmann-k", cfg.grassmann_k, "Grassmann truncation (default: polynomial degree)")
      ->check(CLI::PositiveNumber);

  // every subcommand also accepts the global flags after its name
  auto globals = [&](CLI::App* sub) {
    sub->add_option("--threads", cfg.threads)->check(CLI::PositiveNumber);
    sub->add_option("--format", cfg.format)->check(CLI::IsMember({"table", "json"}));
    sub->add_option("--row-cap", cfg.row_cap)->check(CLI::PositiveNumber);
    sub->add_option("--grassmann-k", cfg.grassmann_k)->check(CLI::PositiveNumber);
  };

  auto* catalog = app.add_subcommand("catalog", "list or show catalog algebras");
  catalog->require_subcommand(1);
  auto* list = catalog->add_subcommand("list", "catalog names");
  auto* show = catalog->add_subcommand("show", "one algebra");
  show->add_option("name", cfg.show_name, "catalog name")->required();
  globals(list);
  globals(show);

  auto* check = app.add_subcommand("check", "classify a multilinear *-polynomial");
  check->add_option("--algebra", cfg.algebra, "catalog name");
  check->add_option("--algebra-file", cfg.algebra_file, "algebra JSON")->check(CLI::ExistingFile);
  check->add_option("--poly", cfg.poly, "polynomial text")->required();
  check->add_option("--mode", cfg.check_mode, "exit 1 unless the property holds")
      ->check(CLI::IsMember({"identity", "central", "proper-central"}));
  check->add_option("--substitution", cfg.substitution)->check(CLI::IsMember({"auto", "full", "regular"}));
  globals(check);

  auto* codim = app.add_subcommand("codim", "c_n^*, c_n^{*z}, c_n^{*delta}");
  codim->add_option("--algebra", cfg.algebra, "catalog name");
  codim->add_option("--algebra-file", cfg.algebra_file, "algebra JSON")->check(CLI::ExistingFile);
  codim->add_option("--n", cfg.n, "degree")->required();
  codim->add_option("--kind", cfg.kind, "print one value")->check(CLI::IsMember({"star", "z", "delta"}));
  codim->add_option("--mode", cfg.codim_mode, "rank mode")
      ->check(CLI::IsMember({"auto", "exact", "modular", "modular-certified"}));
  globals(codim);

  auto* exponent = app.add_subcommand("exponent", "exp^* and the exp^{*delta} interval");
  exponent->add_option("--algebra", cfg.algebra, "A1..A14")->required();
  globals(exponent);

  auto* lemma = app.add_subcommand("lemma", "run a construction on a JSON descriptor");
  lemma->add_option("--file", cfg.file, "descriptor JSON")->required();
  globals(lemma);

  auto* verify = app.add_subcommand("verify-paper", "re-run the claim ledger");
  verify->add_option("--claims", cfg.claims_file, "ledger JSON (default: builtin)")->check(CLI::ExistingFile);
  verify->add_option("--only", cfg.only, "claim ids")->delimiter(',');
  globals(verify);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e, out, err);
    return code == 0 ? 0 : 2;
  }

  try {
    if (list->parsed()) return cmd_catalog_list(cfg, out);
    if (show->parsed()) return cmd_catalog_show(cfg, out);
    if (check->parsed()) return cmd_check(cfg, out);
    if (codim->parsed()) return cmd_codim(cfg, out);
    if (exponent->parsed()) return cmd_exponent(cfg, out);
    if (lemma->parsed()) return cmd_lemma(cfg, out);
    if (verify->parsed()) return cmd_verify(cfg, out);
  } catch (const UsageError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  } catch (const Error& e) {
    // catalog and input problems surface here too; lemma axioms count as a negative result
    err << "error: " << e.what() << "\n";
    return lemma->parsed() ? 1 : 2;
  }
  return 2;
}

}  // namespace pistar
