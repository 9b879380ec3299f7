#include "pistar/grassmann.hpp"

#include <algorithm>
#include <bit>
#include <map>

namespace pistar {

std::vector<std::uint32_t> grassmann_subsets(int k) {
  if (k < 0 || k > 20) throw Error("grassmann: generator count out of range");
  std::vector<std::uint32_t> masks;
  for (std::uint32_t m = 0; m < (1u << k); ++m) masks.push_back(m);
  auto elems = [](std::uint32_t m) {
    std::vector<int> e;
    for (int i = 0; i < 32; ++i)
      if (m & (1u << i)) e.push_back(i);
    return e;
  };
  std::stable_sort(masks.begin(), masks.end(), [&](std::uint32_t a, std::uint32_t b) {
    int pa = std::popcount(a), pb = std::popcount(b);
    if (pa != pb) return pa < pb;
    return elems(a) < elems(b);
  });
  return masks;
}

std::string subset_label(std::uint32_t mask) {
  if (mask == 0) return "1";
  std::string s = "e{";
  bool first = true;
  for (int i = 0; i < 32; ++i)
    if (mask & (1u << i)) {
      if (!first) s += ",";
      s += std::to_string(i + 1);
      first = false;
    }
  return s + "}";
}

int grassmann_sign(std::uint32_t s, std::uint32_t t) {
  if (s & t) return 0;
  // count pairs (a in S, b in T) with a > b
  int inversions = 0;
  for (int b = 0; b < 32; ++b)
    if (t & (1u << b)) inversions += std::popcount(s >> (b + 1));
  return (inversions & 1) ? -1 : 1;
}

SuperStarAlgebra grassmann_algebra(int k) {
  const auto masks = grassmann_subsets(k);
  const std::size_t d = masks.size();
  std::map<std::uint32_t, Index> pos;
  for (Index i = 0; i < d; ++i) pos[masks[i]] = i;
  std::vector<std::string> labels;
  std::vector<int> parity;
  for (auto m : masks) {
    labels.push_back(subset_label(m));
    parity.push_back(std::popcount(m) & 1);
  }
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (Index i = 0; i < d; ++i)
    for (Index j = 0; j < d; ++j) {
      int s = grassmann_sign(masks[i], masks[j]);
      if (s) table[i][j] = Vector::unit(d, pos[masks[i] | masks[j]], s);
    }
  StructureAlgebra alg(labels, std::move(table), Vector::unit(d, 0));

  // # from the axioms: 1# = 1, e_i# = -e_i, (ab)# = (-1)^{|a||b|} b# a#,
  // splitting e_S = e_{S minus max} e_max.
  LinearMap sharp(d);
  for (Index i = 0; i < d; ++i) {
    std::uint32_t m = masks[i];
    if (m == 0) {
      sharp[i] = Vector::unit(d, i);
      continue;
    }
    int top = 31 - std::countl_zero(m);
    std::uint32_t rest = m & ~(1u << top);
    Vector a_sharp = sharp[pos[rest]];
    Vector b_sharp = Vector::unit(d, pos[1u << top], -1);
    Vector prod = alg.multiply(b_sharp, a_sharp);
    int sign = (std::popcount(rest) & 1) ? -1 : 1;
    sharp[i] = Rational(sign) * prod;
  }
  return {std::move(alg), std::move(parity), std::move(sharp), "E(" + std::to_string(k) + ")"};
}

namespace {

Subspace true_envelope_center(const EnvelopeInfo& info, std::size_t d) {
  const StructureAlgebra& b = info.base.alg;
  const std::size_t db = b.dim();
  // group envelope indices by subset
  std::map<std::uint32_t, std::vector<Index>> blocks;
  for (Index i = 0; i < d; ++i) blocks[info.subset[i]].push_back(i);
  std::vector<Vector> eqs;
  for (const auto& [mask, idx] : blocks) {
    const int ss = (std::popcount(mask) & 1) ? -1 : 1;
    for (Index c = 0; c < db; ++c) {
      const bool odd = info.base.parity[c] == 1;
      std::vector<Vector> rows(db, Vector(d));
      for (Index e : idx) {
        Index j = info.base_index[e];
        // even c: b_j c - c b_j ; odd c: b_j c - (-1)^{|S|} c b_j
        Vector v = b.product(j, c) - Rational(odd ? ss : 1) * b.product(c, j);
        for (const auto& [l, q] : v) rows[l].set(e, q);
      }
      for (auto& r : rows)
        if (!r.is_zero()) eqs.push_back(std::move(r));
    }
  }
  return nullspace_of_rows(d, eqs);
}

}  // namespace

StarAlgebra grassmann_envelope(const SuperStarAlgebra& b, int k, std::string name) {
  auto rep = check_superinvolution(b);
  if (!rep.ok()) throw Error("envelope: base is not a superalgebra with superinvolution: " +
                             rep.counterexample.value_or("?"));
  const SuperStarAlgebra e = grassmann_algebra(k);
  const auto masks = grassmann_subsets(k);
  auto info = std::make_shared<EnvelopeInfo>();
  info->base = b;
  info->k = k;
  std::map<std::pair<std::uint32_t, Index>, Index> pos;
  std::vector<std::string> labels;
  for (auto m : masks)
    for (Index j = 0; j < b.alg.dim(); ++j) {
      if ((std::popcount(m) & 1) != b.parity[j]) continue;
      pos[{m, j}] = static_cast<Index>(labels.size());
      info->subset.push_back(m);
      info->base_index.push_back(j);
      labels.push_back(subset_label(m) + "⊗" + b.alg.labels()[j]);
    }
  const std::size_t d = labels.size();
  std::vector<std::vector<Vector>> table(d, std::vector<Vector>(d, Vector(d)));
  for (Index x = 0; x < d; ++x)
    for (Index y = 0; y < d; ++y) {
      int s = grassmann_sign(info->subset[x], info->subset[y]);
      if (!s) continue;
      std::uint32_t u = info->subset[x] | info->subset[y];
      const Vector& ab = b.alg.product(info->base_index[x], info->base_index[y]);
      Vector v(d);
      for (const auto& [l, q] : ab) v.set(pos.at({u, l}), s * q);
      table[x][y] = std::move(v);
    }
  // g# is +-g on a Grassmann monomial; read the sign off E_k's map.
  std::map<std::uint32_t, int> sharp_sign;
  for (Index i = 0; i < masks.size(); ++i) sharp_sign[masks[i]] = e.superinv[i].get(i) > 0 ? 1 : -1;
  LinearMap inv(d);
  for (Index x = 0; x < d; ++x) {
    const Vector& a_star = b.superinv[info->base_index[x]];
    Vector v(d);
    for (const auto& [l, q] : a_star) v.set(pos.at({info->subset[x], l}), sharp_sign[info->subset[x]] * q);
    inv[x] = std::move(v);
  }
  std::optional<Vector> unit;
  if (b.alg.unit()) {
    Vector u(d);
    for (const auto& [l, q] : *b.alg.unit()) u.set(pos.at({0u, l}), q);
    unit = u;
  }
  StarAlgebra alg(StructureAlgebra(std::move(labels), std::move(table), std::move(unit)),
                  std::move(inv), std::move(name));
  Subspace zc = true_envelope_center(*info, d);
  return alg.with_envelope(std::move(info), std::move(zc));
}

SlotCandidates regular_substitution_set(const StarAlgebra& a, std::span<const Sign> slot_signs) {
  const auto& info = a.envelope();
  if (!info) throw Error("regular substitution requires a Grassmann envelope");
  if (static_cast<int>(slot_signs.size()) > info->k)
    throw Error("grassmann truncation k=" + std::to_string(info->k) + " is too small for " +
                std::to_string(slot_signs.size()) + " slots");
  SlotCandidates out;
  for (std::size_t p = 0; p < slot_signs.size(); ++p) {
    const std::uint32_t gen = 1u << p;
    Subspace s(a.dim());
    for (Index x = 0; x < a.dim(); ++x) {
      std::uint32_t m = info->subset[x];
      if (m != 0 && m != gen) continue;
      Vector c = a.basis(x);
      Vector cs = a.involve(c);
      s.insert(slot_signs[p] == Sign::plus ? c + cs : c - cs);
    }
    out.push_back(s.rows());
  }
  return out;
}

SlotCandidates full_substitution_set(const StarAlgebra& a, std::span<const Sign> slot_signs) {
  SlotCandidates out;
  for (Sign s : slot_signs) out.push_back(a.part(s).rows());
  return out;
}

}  // namespace pistar
