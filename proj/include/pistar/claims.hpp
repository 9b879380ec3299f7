#pragma once

#include <optional>
#include <set>
#include <string>
#include <vector>

#include <json.hpp>

namespace pistar {

enum class ClaimKind {
  identity_member,     // poly is an identity of every algebra, and of none of the nonmembers
  identity_nonmember,  // poly is an identity of none of the algebras
  central_proper,
  center_equals,       // Z(A) = span(elements)
  witness_value,       // poly at assignment (signs unchecked) equals expected
  dimension,
  exp_star,
  exp_delta_confirmed,
  lemma_construction,
  codim_value,         // expected "c*,cz,cdelta" at degree n
  admissible,          // elements pick distinct components forming an admissible subset
};

std::string to_string(ClaimKind k);
ClaimKind parse_claim_kind(std::string_view s);

struct Claim {
  std::string id;
  ClaimKind kind = ClaimKind::identity_member;
  std::vector<std::string> algebras;
  std::vector<std::string> nonmembers;
  std::optional<int> grassmann_k;  // A3/A4; default is the polynomial degree
  std::string poly;                // as transcribed; may fail to parse
  std::vector<std::string> readings;  // only when poly does not parse
  std::vector<std::pair<std::string, std::string>> assignment;  // slot -> element
  std::vector<std::string> elements;
  std::string expected;
  std::optional<int> n;            // codim degree
  std::string lemma_pattern;       // lemma_construction
  std::string lemma_variant;       // "0", "1", "minus", "plus"
  std::string origin = "stated";   // "stated" in the source text, or "computed" here
  std::string location;            // where in the source text
  std::string source;              // the formula as typeset there
};

enum class ClaimStatus { verified, refuted, ambiguous_resolved, ambiguous_unresolved, skipped };
std::string to_string(ClaimStatus s);

struct ClaimResult {
  std::string id;
  ClaimStatus status = ClaimStatus::skipped;
  std::optional<std::string> reading;  // the reading that resolved an ambiguous claim
  std::string detail;                  // refutation witness or reason
  double seconds = 0;
};

struct ClaimsSummary {
  std::size_t total = 0;
  std::size_t verified = 0;
  std::size_t refuted = 0;
  std::size_t ambiguous_resolved = 0;
  std::size_t ambiguous_unresolved = 0;
  std::size_t skipped = 0;
};

struct ClaimsReport {
  std::vector<ClaimResult> results;  // sorted by id
  ClaimsSummary summary;
  int exit_code() const;  // 1 if refuted, else 3 if unresolved, else 0
};

struct ClaimsOptions {
  unsigned threads = 1;
  std::set<std::string> only;  // empty = all
};

std::vector<Claim> builtin_ledger();

ClaimResult run_claim(const Claim& c);
ClaimsReport run_claims(const std::vector<Claim>& claims, const ClaimsOptions& opt = {});

void to_json(nlohmann::json& j, const Claim& c);
void from_json(const nlohmann::json& j, Claim& c);
nlohmann::json report_json(const ClaimsReport& r);
std::string report_table(const ClaimsReport& r);

std::vector<Claim> load_claims(const std::string& path);

}  // namespace pistar
