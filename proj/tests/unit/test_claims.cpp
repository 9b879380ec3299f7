#include <doctest.h>

#include <cstdio>
#include <fstream>
#include <map>
#include <set>

#include "pistar/claims.hpp"
#include "pistar/starpoly.hpp"

using namespace pistar;

namespace {

bool parses(const std::string& text) {
  try {
    parse(text);
    return true;
  } catch (const ParseError&) {
    return false;
  }
}

bool is_poly_kind(ClaimKind k) {
  return k == ClaimKind::identity_member || k == ClaimKind::identity_nonmember || k == ClaimKind::central_proper;
}

const Claim& find(const std::vector<Claim>& all, const std::string& id) {
  for (const auto& c : all)
    if (c.id == id) return c;
  throw std::runtime_error("no claim " + id);
}

std::map<std::string, ClaimResult> by_id(const ClaimsReport& r) {
  std::map<std::string, ClaimResult> out;
  for (const auto& x : r.results) out[x.id] = x;
  return out;
}

}  // namespace

TEST_CASE("the builtin ledger is well formed") {
  const auto all = builtin_ledger();
  CHECK(all.size() >= 60);
  std::set<std::string> ids;
  for (const auto& c : all) {
    INFO(c.id);
    CHECK(ids.insert(c.id).second);
    CHECK_FALSE(c.algebras.empty());
    CHECK((c.origin == "stated" || c.origin == "computed"));
    if (c.origin == "stated") {
      CHECK_FALSE(c.location.empty());
      CHECK_FALSE(c.source.empty());
    }
    if (is_poly_kind(c.kind)) CHECK(c.readings.empty() == parses(c.poly));
    for (const auto& r : c.readings) CHECK(parses(r));
  }
  CHECK(parse_claim_kind(to_string(ClaimKind::codim_value)) == ClaimKind::codim_value);
  CHECK_THROWS_AS(parse_claim_kind("nonsense"), Error);
}

TEST_CASE("full ledger run") {
  const auto all = builtin_ledger();
  ClaimsOptions opt;
  opt.threads = 4;
  ClaimsReport r = run_claims(all, opt);
  CHECK(r.summary.total == all.size());
  CHECK(r.summary.verified + r.summary.refuted + r.summary.ambiguous_resolved + r.summary.ambiguous_unresolved +
            r.summary.skipped ==
        r.summary.total);
  CHECK(std::is_sorted(r.results.begin(), r.results.end(),
                       [](const ClaimResult& a, const ClaimResult& b) { return a.id < b.id; }));
  auto m = by_id(r);
  CHECK(m["center-A5"].status == ClaimStatus::verified);
  CHECK(m["witness-A5"].status == ClaimStatus::verified);
  CHECK(m["expstar-A7"].status == ClaimStatus::verified);
  CHECK(m["expdelta-A7"].status == ClaimStatus::verified);
  CHECK(m["lemma-inner3-0"].status == ClaimStatus::verified);
  CHECK(m["codim-A2-n1"].status == ClaimStatus::verified);
  CHECK(m["sep-16"].status == ClaimStatus::ambiguous_resolved);
  CHECK(m["sep-16"].reading);
  CHECK(r.summary.skipped == 0);
  CHECK(r.summary.ambiguous_unresolved == 0);
  // computed refutations with explicit witnesses
  for (const char* id : {"sep-08", "sep-14", "sep-23", "sep-26", "witness-A8", "expdelta-A11", "expdelta-A12"}) {
    INFO(id);
    CHECK(m[id].status == ClaimStatus::refuted);
    CHECK_FALSE(m[id].detail.empty());
  }
  CHECK(r.exit_code() == (r.summary.refuted ? 1 : 0));
}

TEST_CASE("runs are deterministic and independent of thread count") {
  const auto all = builtin_ledger();
  ClaimsOptions one, many;
  many.threads = 6;
  ClaimsReport a = run_claims(all, one), b = run_claims(all, many);
  REQUIRE(a.results.size() == b.results.size());
  for (std::size_t i = 0; i < a.results.size(); ++i) {
    CHECK(a.results[i].id == b.results[i].id);
    CHECK(a.results[i].status == b.results[i].status);
    CHECK(a.results[i].detail == b.results[i].detail);
    CHECK(a.results[i].reading == b.results[i].reading);
  }
}

TEST_CASE("a tampered witness is refuted with the true value") {
  Claim c = find(builtin_ledger(), "witness-A5");
  c.expected = "-e16";
  ClaimResult r = run_claim(c);
  CHECK(r.status == ClaimStatus::refuted);
  CHECK(r.detail.find("e16") != std::string::npos);
  CHECK(r.detail.find("-e16") != std::string::npos);  // "expected -e16"
}

TEST_CASE("ambiguous claims") {
  Claim c;
  c.id = "t";
  c.kind = ClaimKind::identity_member;
  c.algebras = {"A1"};
  c.poly = "[x1- x2-, x3-] s1+";  // unknown token
  CHECK(run_claim(c).status == ClaimStatus::skipped);  // no readings
  c.readings = {"[x1+, x2+]", "[x1- x2-, x3-]"};
  ClaimResult r = run_claim(c);
  CHECK(r.status == ClaimStatus::ambiguous_resolved);
  CHECK(r.reading == "[x1- x2-, x3-]");
  c.readings = {"[x1+, x2+]"};
  CHECK(run_claim(c).status == ClaimStatus::ambiguous_unresolved);
}

TEST_CASE("exit codes") {
  ClaimsReport r;
  CHECK(r.exit_code() == 0);
  r.summary.ambiguous_unresolved = 1;
  CHECK(r.exit_code() == 3);
  r.summary.refuted = 1;
  CHECK(r.exit_code() == 1);
}

TEST_CASE("claims survive a JSON round trip") {
  const auto all = builtin_ledger();
  nlohmann::json j = all;
  std::vector<Claim> back = j.get<std::vector<Claim>>();
  REQUIRE(back.size() == all.size());
  CHECK(nlohmann::json(back) == j);

  const std::string path = "claims_roundtrip_test.json";
  {
    std::ofstream out(path);
    out << j.dump(2);
  }
  std::vector<Claim> loaded = load_claims(path);
  std::remove(path.c_str());
  CHECK(nlohmann::json(loaded) == j);
  CHECK_THROWS_AS(load_claims("does/not/exist.json"), Error);

  ClaimsOptions only;
  only.only = {"center-A5", "dim-A7"};
  ClaimsReport r = run_claims(all, only);
  CHECK(r.summary.total == 2);
  nlohmann::json rj = report_json(r);
  CHECK(rj["summary"]["verified"] == 2);
  CHECK(report_table(r).find("center-A5") != std::string::npos);
}
