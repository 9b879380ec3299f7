#include "pistar/codim.hpp"

#include <algorithm>
#include <atomic>
#include <cstdlib>
#include <numeric>
#include <thread>

#include "pistar/evaluator.hpp"

namespace pistar {

namespace {

std::vector<std::vector<int>> permutations(int n) {
  std::vector<int> p(n);
  std::iota(p.begin(), p.end(), 0);
  std::vector<std::vector<int>> out;
  do out.push_back(p);
  while (std::next_permutation(p.begin(), p.end()));
  return out;
}

std::size_t factorial(int n) {
  std::size_t f = 1;
  for (int i = 2; i <= n; ++i) f *= static_cast<std::size_t>(i);
  return f;
}

std::vector<SignedVar> pattern_slots(int n, std::uint32_t pattern) {
  std::vector<SignedVar> s;
  for (int i = 0; i < n; ++i) s.push_back({i + 1, (pattern >> i) & 1u ? Sign::minus : Sign::plus});
  return s;
}

// Streams the columns of one sign block: for every candidate tuple (lex) and
// output coordinate, the vector of monomial values over the permutations.
// The sink returns false to stop early.
template <class Sink>
void stream_block(const StarAlgebra& a, int n, std::uint32_t pattern, const std::vector<std::vector<int>>& perms,
                  Sink&& sink) {
  const auto slots = pattern_slots(n, pattern);
  const SlotCandidates cands = slot_candidates(a, slots, Substitution::automatic);
  for (const auto& c : cands)
    if (c.empty()) return;
  const std::size_t rows = perms.size();
  std::vector<std::size_t> idx(n, 0);
  std::vector<Vector> prefix(n);  // prefix products of the current permutation
  std::vector<Vector> values(rows);
  for (;;) {
    const std::vector<int>* prev = nullptr;
    for (std::size_t r = 0; r < rows; ++r) {
      const auto& p = perms[r];
      std::size_t common = 0;
      if (prev)
        while (common < static_cast<std::size_t>(n) && (*prev)[common] == p[common]) ++common;
      for (std::size_t l = common; l < static_cast<std::size_t>(n); ++l) {
        const Vector& x = cands[p[l]][idx[p[l]]];
        prefix[l] = l == 0 ? x : (prefix[l - 1].is_zero() ? prefix[l - 1] : a.multiply(prefix[l - 1], x));
      }
      values[r] = prefix[n - 1];
      prev = &p;
    }
    if (!sink(values)) return;
    int q = n - 1;
    while (q >= 0 && ++idx[q] == cands[q].size()) idx[q--] = 0;
    if (q < 0) return;
  }
}

// Transposes per-row value vectors into per-coordinate columns.
std::vector<Vector> to_columns(const std::vector<Vector>& values, std::size_t d, const Subspace* modulo) {
  std::vector<Vector> cols(d, Vector(values.size()));
  for (std::size_t r = 0; r < values.size(); ++r) {
    if (values[r].is_zero()) continue;
    Vector v = modulo ? modulo->reduce(values[r]) : values[r];
    for (const auto& [c, q] : v) cols[c].set(static_cast<Index>(r), q);
  }
  return cols;
}

struct BlockRank {
  std::size_t star = 0;
  std::size_t z = 0;
  bool certified = true;
};

BlockRank block_rank(const StarAlgebra& a, int n, std::uint32_t pattern, const std::vector<std::vector<int>>& perms,
                     RankMode mode, bool certify, std::uint64_t prime) {
  const std::size_t rows = perms.size();
  const Subspace& z = a.center();
  RankAccumulator star(rows, mode, prime), cz(rows, mode, prime);
  std::vector<Vector> star_pivots, z_pivots;  // kept for certification
  stream_block(a, n, pattern, perms, [&](const std::vector<Vector>& values) {
    if (!star.full())
      for (auto& c : to_columns(values, a.dim(), nullptr))
        if (!c.is_zero() && star.insert(c) && mode == RankMode::modular && certify) star_pivots.push_back(c);
    if (!cz.full())
      for (auto& c : to_columns(values, a.dim(), &z))
        if (!c.is_zero() && cz.insert(c) && mode == RankMode::modular && certify) z_pivots.push_back(c);
    return !(star.full() && cz.full());
  });
  BlockRank out{star.rank(), cz.rank(), mode == RankMode::exact};
  if (mode != RankMode::modular || !certify) return out;

  // Exact pass: the modular pivot columns must be independent over Q, and
  // every column must lie in their span.
  Subspace s_star = Subspace::span(rows, star_pivots), s_z = Subspace::span(rows, z_pivots);
  bool ok = s_star.dim() == out.star && s_z.dim() == out.z;
  if (ok && !(s_star.dim() == rows && s_z.dim() == rows)) {
    stream_block(a, n, pattern, perms, [&](const std::vector<Vector>& values) {
      if (s_star.dim() < rows)
        for (auto& c : to_columns(values, a.dim(), nullptr))
          if (!c.is_zero() && !s_star.contains(c)) {
            s_star.insert(c);
            ok = false;
          }
      if (s_z.dim() < rows)
        for (auto& c : to_columns(values, a.dim(), &z))
          if (!c.is_zero() && !s_z.contains(c)) {
            s_z.insert(c);
            ok = false;
          }
      return true;
    });
  }
  // the exact ranks win either way
  out.star = s_star.dim();
  out.z = s_z.dim();
  out.certified = ok;
  return out;
}

}  // namespace

std::vector<Monomial> pn_basis(int n) {
  if (n < 1) throw Error("pn_basis: n must be at least 1");
  if (n > 10) throw Error("pn_basis: n too large");
  const auto perms = permutations(n);
  std::vector<Monomial> out;
  for (std::uint32_t pat = 0; pat < (1u << n); ++pat) {
    const auto slots = pattern_slots(n, pat);
    for (const auto& p : perms) {
      Monomial m;
      for (int v : p) m.push_back(slots[v]);
      out.push_back(std::move(m));
    }
  }
  return out;
}

std::size_t pn_dimension(int n) {
  if (n < 1) throw Error("pn_dimension: n must be at least 1");
  return (std::size_t{1} << n) * factorial(n);
}

std::size_t row_cap_from_env() {
  if (const char* s = std::getenv("PISTAR_ROW_CAP")) {
    char* end = nullptr;
    unsigned long long v = std::strtoull(s, &end, 10);
    if (end && *end == '\0' && v > 0) return static_cast<std::size_t>(v);
  }
  return kDefaultRowCap;
}

std::string to_string(RankMethod m) {
  switch (m) {
    case RankMethod::exact:
      return "exact";
    case RankMethod::modular_certified:
      return "modular-certified";
    case RankMethod::modular_uncertified:
      return "modular-uncertified";
  }
  return "?";
}

CodimResult codimensions(const StarAlgebra& a, int n, const CodimOptions& opt) {
  if (n < 1) throw Error("codimensions: n must be at least 1");
  if (n > 10) throw Error("codimensions: n too large");
  const std::size_t rows = pn_dimension(n);
  const std::size_t cap = opt.row_cap.value_or(row_cap_from_env());
  if (rows > cap)
    throw Error("codimensions: 2^n n! = " + std::to_string(rows) + " rows exceeds the row cap " +
                std::to_string(cap) + " (raise it with PISTAR_ROW_CAP or --row-cap)");
  if (const auto& e = a.envelope(); e && e->k < n)
    throw Error("codimensions: Grassmann truncation k=" + std::to_string(e->k) + " is below n=" + std::to_string(n));

  CodimMode mode = opt.mode;
  if (mode == CodimMode::automatic) mode = rows <= 400 ? CodimMode::exact : CodimMode::modular;
  const RankMode rm = mode == CodimMode::exact ? RankMode::exact : RankMode::modular;
  const bool certify = mode == CodimMode::modular_certified;

  const auto perms = permutations(n);
  const std::uint32_t blocks = 1u << n;
  std::vector<BlockRank> ranks(blocks);
  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, blocks));
  std::atomic<std::uint32_t> next{0};
  auto worker = [&] {
    for (std::uint32_t b; (b = next.fetch_add(1)) < blocks;) ranks[b] = block_rank(a, n, b, perms, rm, certify, opt.prime);
  };
  if (threads == 1) {
    worker();
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker);
  }

  CodimResult r;
  r.n = n;
  bool certified = true;
  for (const auto& b : ranks) {
    r.c_star += b.star;
    r.c_z += b.z;
    certified = certified && b.certified;
  }
  r.c_delta = r.c_star - r.c_z;
  r.method = mode == CodimMode::exact  ? RankMethod::exact
             : certified && certify    ? RankMethod::modular_certified
                                       : RankMethod::modular_uncertified;
  return r;
}

Subspace block_column_space(const StarAlgebra& a, int n, std::uint32_t pattern, bool modulo_center) {
  if (n < 1 || n > 8) throw Error("block_column_space: n out of range");
  if (pattern >= (1u << n)) throw Error("block_column_space: sign pattern out of range");
  const auto perms = permutations(n);
  Subspace s(perms.size());
  const Subspace* z = modulo_center ? &a.center() : nullptr;
  stream_block(a, n, pattern, perms, [&](const std::vector<Vector>& values) {
    for (auto& c : to_columns(values, a.dim(), z))
      if (!c.is_zero()) s.insert(c);
    return s.dim() < perms.size();
  });
  return s;
}

std::pair<std::uint32_t, Vector> block_coefficients(const StarPolynomial& f) {
  auto ml = check_multilinear(f);
  if (!ml.ok) throw Error("block_coefficients: polynomial is not multilinear");
  const int n = static_cast<int>(ml.slots.size());
  std::uint32_t pattern = 0;
  for (int i = 0; i < n; ++i) {
    if (ml.slots[i].index != i + 1) throw Error("block_coefficients: variables must be x1..xn, each once");
    if (ml.slots[i].sign == Sign::minus) pattern |= 1u << i;
  }
  const auto perms = permutations(n);
  Vector coeffs(perms.size());
  for (const auto& [m, c] : f.terms()) {
    std::vector<int> word;
    for (const auto& v : m) word.push_back(v.index - 1);
    auto it = std::lower_bound(perms.begin(), perms.end(), word);
    coeffs.set(static_cast<Index>(it - perms.begin()), c);
  }
  return {pattern, coeffs};
}

bool in_left_kernel(const StarAlgebra& a, const StarPolynomial& f, bool modulo_center) {
  auto [pattern, coeffs] = block_coefficients(f);
  const int n = static_cast<int>(check_multilinear(f).slots.size());
  const Subspace cols = block_column_space(a, n, pattern, modulo_center);
  for (const auto& c : cols.rows())
    if (dot(coeffs, c) != 0) return false;
  return true;
}

}  // namespace pistar
