#include <string>
#include <vector>

#include "pistar/claims.hpp"

namespace pistar {

namespace {

std::vector<std::string> range(int lo, int hi) {
  std::vector<std::string> v;
  for (int i = lo; i <= hi; ++i) v.push_back("A" + std::to_string(i));
  return v;
}

std::vector<std::string> cat(std::vector<std::string> a, const std::vector<std::string>& b) {
  a.insert(a.end(), b.begin(), b.end());
  return a;
}

struct Bullet {
  const char* location;
  const char* source;
  const char* poly;
  std::vector<std::string> readings;
  std::vector<std::string> members;
  std::vector<std::string> nonmembers;
};

// Separation list. Polynomials are transcribed with x_i^{+-} -> xi+-, the
// Jordan product a \circ b -> {a, b}. Strings that then fail to parse carry
// readings: comma insertion inside [x1- x2-], the stray token s_1^+ renamed
// to the next free symmetric variable, and the bracket read as grouping.
std::vector<Bullet> separation_bullets() {
  const auto A = [](std::initializer_list<int> is) {
    std::vector<std::string> v;
    for (int i : is) v.push_back("A" + std::to_string(i));
    return v;
  };
  return {
      {"separation proof, exponent 4 list, bullet 1", "[x_1^-x_2^-,x_3^-]", "[x1- x2-, x3-]", {}, A({1}), A({2, 3})},
      {"separation proof, exponent 4 list, bullet 2", "[x_1^+,x_2^+]", "[x1+, x2+]", {}, A({2, 3}), A({1, 4})},
      {"separation proof, exponent 4 list, bullet 3", "[x_1^+,x_1^-]", "[x1+, x1-]", {}, A({2}), A({3})},
      {"separation proof, exponent 4 list, bullet 4", "[x_1^-,x_2^-][x_3^-,x_4^-]", "[x1-, x2-][x3-, x4-]", {},
       A({3}), A({2})},
      {"separation proof, exponent 4 list, bullet 5", "[x_1^-,x_2^-,x_3^-]", "[x1-, x2-, x3-]", {}, A({4}),
       A({2, 3})},
      {"separation proof, exponent 4 list, bullet 6", "[x_1^-x_2^-,x_1^+]", "[x1- x2-, x1+]", {}, A({1}), A({4})},
      {"separation proof, exponent 4 list, bullet 7", "[x_1^+,x_2^+,x_3^+]", "[x1+, x2+, x3+]", {}, A({4}), A({1})},
      {"separation proof, exponent 3 list, bullet 1", "[x_1^-x_2^-,x_3^-]", "[x1- x2-, x3-]", {}, A({5}),
       range(6, 8)},
      {"separation proof, exponent 3 list, bullet 2", "[x_1^-,x_2^- ]\\circ x_3^-", "{[x1-, x2-], x3-}", {}, A({6}),
       A({5, 7, 8})},
      {"separation proof, exponent 3 list, bullet 3", "x_1^+[x_2^+,x_3^+][x_4^+,x_5^+][x_6^+,x_7^+]x_8^+",
       "x1+ [x2+, x3+][x4+, x5+][x6+, x7+] x8+", {}, A({7, 8}), A({5, 6})},
      // members are written "A_i ... for j=5,6"; read as A5, A6
      {"separation proof, exponent 3 list, bullet 4", "[x_1^-,x_2^-][x_3^-,x_4^-]", "[x1-, x2-][x3-, x4-]", {},
       A({5, 6}), range(9, 14)},
      {"separation proof, exponent 3 list, bullet 5", "[x_1^+,x_2^+][x_3^+, x_4^+][x_5^+, x_6^+]",
       "[x1+, x2+][x3+, x4+][x5+, x6+]", {}, range(9, 12), cat(range(5, 8), A({13, 14}))},
      {"separation proof, exponent 3 list, bullet 6", "[x_1^+,x_2^+][x_3^+, x_4^+][x_5^+, x_6^+]x_7^+",
       "[x1+, x2+][x3+, x4+][x5+, x6+] x7+", {}, A({13, 14}), range(5, 8)},
      {"separation proof, exponent 3 list, bullet 7", "[x_1^-x_2^-,x_3^-, x_4^-]", "[x1- x2-, x3-, x4-]", {}, A({7}),
       A({8})},
      {"separation proof, exponent 3 list, bullet 8", "[x_1^-,x_2^-,x_3^-] \\circ x_4^-", "{[x1-, x2-, x3-], x4-}",
       {}, A({8}), A({7})},
      {"separation proof, exponent 3 list, bullet 9", "[x_1^-x_2^-][x_3^-, x_4^-] s_1^+",
       "[x1- x2-][x3-, x4-] s1+", {"[x1-, x2-][x3-, x4-] x5+", "x1- x2- [x3-, x4-] x5+"}, A({7, 8}),
       range(9, 14)},
      {"separation proof, exponent 3 list, bullet 10", "[[x_1^-x_2^-][x_3^-, x_4^-]]", "[[x1- x2-][x3-, x4-]]",
       {"[[x1-, x2-], [x3-, x4-]]", "[x1- x2-, [x3-, x4-]]"}, A({9, 11}), A({10, 12})},
      {"separation proof, exponent 3 list, bullet 11", "[x_1^-x_2^-]\\circ [x_3^-, x_4^-]",
       "{[x1- x2-], [x3-, x4-]}", {"{[x1-, x2-], [x3-, x4-]}", "{x1- x2-, [x3-, x4-]}"}, A({10, 12}),
       A({9, 11})},
      {"separation proof, exponent 3 list, bullet 12", "[x_1^-x_2^-] [x_3^-, x_4^-]x_5^-",
       "[x1- x2-][x3-, x4-] x5-", {"[x1-, x2-][x3-, x4-] x5-", "x1- x2- [x3-, x4-] x5-"}, A({9, 10}),
       range(11, 14)},
      {"separation proof, exponent 3 list, bullet 13", "[x_1^-x_2^-] x_3^- [x_4^-, x_5^-]",
       "[x1- x2-] x3- [x4-, x5-]", {"[x1-, x2-] x3- [x4-, x5-]", "x1- x2- x3- [x4-, x5-]"}, A({11, 12}),
       A({9, 10, 13, 14})},
      {"separation proof, exponent 3 list, bullet 14", "[[[x_1^-x_2^-],  [x_3^-, x_4^-]], x_5^-]",
       "[[[x1- x2-], [x3-, x4-]], x5-]", {"[[[x1-, x2-], [x3-, x4-]], x5-]", "[[x1- x2-, [x3-, x4-]], x5-]"},
       A({13}), A({14})},
      {"separation proof, exponent 3 list, bullet 15", "[[x_1^-x_2^-],  [x_3^-, x_4^-]] \\circ x_5^-",
       "{[[x1- x2-], [x3-, x4-]], x5-}", {"{[[x1-, x2-], [x3-, x4-]], x5-}", "{[x1- x2-, [x3-, x4-]], x5-}"},
       A({14}), A({13})},
      {"separation proof, across exponents", "x_1^-x_2^-x_3^-x_4^-x_5^-", "x1- x2- x3- x4- x5-", {}, range(5, 14),
       range(1, 4)},
      {"separation proof, closing remark 1", "[x_1^-x_2^-,x_3^-]", "[x1- x2-, x3-]", {}, A({1}), range(5, 14)},
      {"separation proof, closing remark 2", "[x_1^+x_2^+]", "[x1+ x2+]", {"[x1+, x2+]", "x1+ x2+"}, A({2, 3}),
       range(5, 14)},
      {"separation proof, closing remark 3", "[x_1^+x_2^+,x_3^+]", "[x1+ x2+, x3+]", {}, A({4}), range(5, 14)},
  };
}

Claim make(std::string id, ClaimKind kind, std::vector<std::string> algebras, std::string location,
           std::string source = {}) {
  Claim c;
  c.id = std::move(id);
  c.kind = kind;
  c.algebras = std::move(algebras);
  c.location = std::move(location);
  c.source = std::move(source);
  return c;
}

std::string two(int i) { return (i < 10 ? "0" : "") + std::to_string(i); }

}  // namespace

std::vector<Claim> builtin_ledger() {
  std::vector<Claim> out;

  // ---- separation bullets
  int b = 0;
  for (auto& s : separation_bullets()) {
    Claim c = make("sep-" + two(++b), ClaimKind::identity_member, s.members, s.location, s.source);
    c.nonmembers = s.nonmembers;
    c.poly = s.poly;
    c.readings = s.readings;
    out.push_back(std::move(c));
  }

  // ---- exponent 4 lemma
  const std::pair<const char*, const char*> central4[] = {{"x1- x2-", "f(x_1^-,x_2^-)=x_1^-x_2^-"},
                                                          {"x1+", "f(x_1^+)=x_1^+"},
                                                          {"[x1-, x2-, x1+]", "f(x_1^+,x_1^-,x_2^-)=[x_1^-,x_2^-,x_1^+]"},
                                                          {"[x1+, x2+]", "f(x_1^+,x_2^+)=[x_1^+,x_2^+]"}};
  for (int i = 1; i <= 4; ++i) {
    const std::string a = "A" + std::to_string(i);
    Claim c = make("central-" + a, ClaimKind::central_proper, {a}, "exponent 4 lemma, " + a + " paragraph",
                   central4[i - 1].second);
    c.poly = central4[i - 1].first;
    out.push_back(std::move(c));
    for (auto kind : {ClaimKind::exp_star, ClaimKind::exp_delta_confirmed}) {
      bool star = kind == ClaimKind::exp_star;
      Claim e = make((star ? "expstar-" : "expdelta-") + a, kind, {a}, "exponent 4 lemma, statement",
                     star ? "exp^\\ast(\\mathcal A_i)=4" : "exp^{\\ast, \\delta}(\\mathcal A_i)=4");
      e.expected = "4";
      out.push_back(std::move(e));
    }
  }

  // ---- exponent 3 lemma
  auto admissible = [&](const std::string& a, std::vector<std::string> elems, const char* src) {
    Claim c = make("admissible-" + a, ClaimKind::admissible, {a}, "exponent 3 lemma, " + a + " paragraph", src);
    c.elements = std::move(elems);
    c.expected = "3";
    out.push_back(std::move(c));
  };
  auto center = [&](const std::string& a, std::vector<std::string> elems, const char* src) {
    Claim c = make("center-" + a, ClaimKind::center_equals, {a}, "exponent 3 lemma, " + a + " paragraph", src);
    c.elements = std::move(elems);
    out.push_back(std::move(c));
  };
  auto central = [&](const std::string& a, const char* poly, const char* src) {
    Claim c = make("central-" + a, ClaimKind::central_proper, {a}, "exponent 3 lemma, " + a + " paragraph", src);
    c.poly = poly;
    out.push_back(std::move(c));
  };
  auto witness = [&](const std::string& a, const char* poly, std::vector<std::pair<std::string, std::string>> vals,
                     const char* expected, const char* src) {
    Claim c = make("witness-" + a, ClaimKind::witness_value, {a}, "exponent 3 lemma, " + a + " paragraph", src);
    c.poly = poly;
    c.assignment = std::move(vals);
    c.expected = expected;
    out.push_back(std::move(c));
  };

  admissible("A5", {"e11+e66", "e22+e55", "e33+e44"},
             "F(e_{11}+e_{66})Fe_{12}F(e_{22}+e_{55})Fe_{23}F(e_{33}+e_{44})\\neq 0");
  center("A5", {"e11+e22+e33+e44+e55+e66", "e16"}, "Z(\\mathcal A_5)=F(e_{11}+\\cdots+e_{66})+Fe_{16}");
  witness("A5", "[x1+, x2+][x3+, x4+][x5+, x6+]",
          {{"x1+", "e11+e66"}, {"x2+", "e12+e56"}, {"x3+", "e22+e55"}, {"x4+", "e23+e45"}, {"x5+", "e33+e44"},
           {"x6+", "e36+e14"}},
          "e16",
          "[e_{11}+e_{66},e_{12}+e_{56}][e_{22}+e_{55},e_{23}+e_{45}][e_{33}+e_{44},e_{36}+e_{14}]=e_{16}");
  central("A5", "[x1+, x2+][x3+, x4+][x5+, x6+]", "[x_1^+,x_2^+][x_3^+,x_4^+][x_5^+,x_6^+]");

  for (const char* a : {"A7", "A8"}) {
    admissible(a, {"e22+e77", "e33+e66", "e44+e55"}, "F(e_{22}+e_{77})\\oplus F(e_{33}+e_{66})\\oplus F(e_{44}+e_{55})");
    center(a, {"e18"}, "Z(\\mathcal A_7)=Z(\\mathcal A_8)=Fe_{18}");
  }
  central("A7", "[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8+]", "[x_1^+,x_2^+][x_3^+,x_4^+][x_5^+,x_6^+][x_7^+,x_8^+]");
  central("A8", "[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8-]", "[x_1^+,x_2^+][x_3^+,x_4^+][x_5^+,x_6^+][x_7^+,x_8^-]");
  witness("A7", "[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8+]",
          {{"x1+", "e12+e78"}, {"x2+", "e22+e77"}, {"x3+", "e22+e77"}, {"x4+", "e23+e67"}, {"x5+", "e33+e66"},
           {"x6+", "e34+e56"}, {"x7+", "e44+e55"}, {"x8+", "e48+e14"}},
          "e18",
          "[e_{12}+e_{78},e_{22}+e_{77}][e_{22}+e_{77},e_{23}+e_{67}][e_{33}+e_{66},e_{34}+e_{56}][e_{44}+e_{55}, "
          "e_{48}+ e_{14}]= e_{18}");
  witness("A8", "[x1+, x2+][x3+, x4+][x5+, x6+][x7+, x8-]",
          {{"x1+", "e12+e78"}, {"x2+", "e22+e77"}, {"x3+", "e22+e77"}, {"x4+", "e23+e67"}, {"x5+", "e33+e66"},
           {"x6+", "e34+e56"}, {"x7+", "e44+e55"}, {"x8-", "e48-e14"}},
          "-e18",
          "[e_{12}+e_{78},e_{22}+e_{77}][e_{22}+e_{77},e_{23}+e_{67}][e_{33}+e_{66},e_{34}+e_{56}][e_{44}+e_{55}, "
          "e_{48}- e_{14}]= - e_{18}");

  for (const char* a : {"A9", "A10"}) {
    admissible(a, {"e11+e44", "e22+e33"}, "F(e_{11}+e_{44})\\oplus (F\\oplus F)(e_{22}+e_{33})");
    center(a, {"e11+e22+e33+e44", "e14"}, "F(e_{11}+e_{22}+e_{33}+e_{44})+Fe_{14}=Z(\\mathcal A_9)=Z(\\mathcal A_{10})");
  }
  central("A9", "[x1+, x2+][x4+, x5+]", "[x_1^+,x_2^+][x_4^+,x_5^+]");
  central("A10", "[x1+, x2+][x4+, x5-]", "[x_1^+,x_2^+][x_4^+,x_5^-]");

  for (const char* a : {"A13", "A14"}) {
    admissible(a, {"e22+e33", "e44+e55"}, "F(e_{22}+e_{33})\\oplus (F\\oplus F)(e_{44}+e_{55})");
    center(a, {"e16"}, "Z(\\mathcal A_{13})=Z(\\mathcal A_{14}) =Fe_{16}");
  }
  central("A13", "[x1+, x2+][x3+, x4+][x5+, x6+]", "[x_1^+,x_2^+][x_3^+,x_4^+][x_5^+,x_6^+]");
  central("A14", "[x1+, x2+][x3+, x4+][x5+, x6-]", "[x_1^+,x_2^+][x_3^+,x_4^+][x_5^+,x_6^-]");

  for (int i = 5; i <= 14; ++i) {
    const std::string a = "A" + std::to_string(i);
    for (auto kind : {ClaimKind::exp_star, ClaimKind::exp_delta_confirmed}) {
      bool star = kind == ClaimKind::exp_star;
      Claim e = make((star ? "expstar-" : "expdelta-") + a, kind, {a}, "exponent 3 lemma, statement; minimality corollary",
                     star ? "exp^\\ast(\\mathcal A_i)=3" : "exp^{\\ast, \\delta}(\\mathcal A_i)=3");
      e.expected = "3";
      out.push_back(std::move(e));
    }
  }

  // ---- dimensions of the catalog algebras (from their matrix-unit bases)
  const std::pair<int, int> dims[] = {{1, 4},   {2, 4},   {3, 16},  {4, 16},  {5, 14},  {6, 14}, {7, 22},
                                      {8, 22},  {9, 8},   {10, 8},  {11, 8},  {12, 8},  {13, 14}, {14, 14}};
  for (auto [i, d] : dims) {
    const std::string a = "A" + std::to_string(i);
    Claim c = make("dim-" + a, ClaimKind::dimension, {a}, "list of the fourteen algebras");
    c.expected = std::to_string(d);
    c.origin = "computed";
    if (i == 3 || i == 4) c.grassmann_k = 3;
    out.push_back(std::move(c));
  }

  // ---- constructions
  const std::pair<const char*, std::pair<int, int>> lemmas[] = {
      {"inner3", {5, 6}},      {"outer3", {7, 8}},           {"innerF_FF", {9, 10}},
      {"innerFF_F", {11, 12}}, {"outer_mixed", {13, 14}},    {"outer_mixed_b", {13, 14}}};
  for (auto [pat, targets] : lemmas) {
    const std::string t1 = "A" + std::to_string(targets.first), t2 = "A" + std::to_string(targets.second);
    const std::string loc = "construction lemma for " + t1 + "/" + t2;
    const std::pair<const char*, const std::string*> variants[] = {{"0", &t1}, {"1", &t2}, {"minus", &t1}, {"plus", &t2}};
    for (auto [variant, target] : variants) {
      // the synthetic instances live on the direct sum of both targets
      const bool synthetic = variant[0] == 'm' || variant[0] == 'p';
      std::vector<std::string> on = synthetic ? std::vector<std::string>{t1, t2} : std::vector<std::string>{*target};
      Claim c = make("lemma-" + std::string(pat) + "-" + variant, ClaimKind::lemma_construction, on, loc);
      c.lemma_pattern = pat;
      c.lemma_variant = variant;
      c.expected = *target;
      c.origin = "computed";
      out.push_back(std::move(c));
    }
  }

  // ---- small codimensions, hand-checked
  const std::tuple<const char*, int, const char*> codims[] = {
      {"F", 1, "1,0,1"}, {"F", 4, "1,0,1"}, {"A1", 1, "2,2,0"}, {"A2", 1, "2,1,1"}, {"FplusF", 1, "2,0,2"}};
  for (auto [a, n, v] : codims) {
    Claim c = make("codim-" + std::string(a) + "-n" + std::to_string(n), ClaimKind::codim_value, {a}, "hand computation");
    c.n = n;
    c.expected = v;
    c.origin = "computed";
    out.push_back(std::move(c));
  }
  return out;
}

}  // namespace pistar
