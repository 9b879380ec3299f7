#include "pistar/evaluator.hpp"

#include <algorithm>
#include <atomic>
#include <thread>

namespace pistar {

std::string to_string(Status s) {
  switch (s) {
    case Status::identity:
      return "identity";
    case Status::proper_central:
      return "proper_central";
    case Status::noncentral:
      return "noncentral";
  }
  return "?";
}

namespace {

void check_assignment(const StarAlgebra& a, const std::vector<SignedVar>& slots, const Assignment& s) {
  for (const auto& v : slots) {
    auto it = s.find(v);
    if (it == s.end()) throw Error("no value assigned to " + to_string(v));
    if (it->second.length() != a.dim()) throw DimensionError("value for " + to_string(v) + " has wrong length");
    if (!a.part(v.sign).contains(it->second))
      throw Error("value for " + to_string(v) + " is not " +
                  (v.sign == Sign::plus ? "symmetric" : "skew"));
  }
}

Vector eval_rec(const PolyAst& p, const StarAlgebra& a, const Assignment& s) {
  using K = PolyAst::Kind;
  switch (p.kind) {
    case K::var:
      return s.at(p.var);
    case K::product: {
      Vector v = eval_rec(p.children.front(), a, s);
      for (std::size_t i = 1; i < p.children.size() && !v.is_zero(); ++i)
        v = a.multiply(v, eval_rec(p.children[i], a, s));
      return v;
    }
    case K::commutator: {
      Vector v = eval_rec(p.children.front(), a, s);
      for (std::size_t i = 1; i < p.children.size(); ++i) {
        Vector w = eval_rec(p.children[i], a, s);
        v = a.multiply(v, w) - a.multiply(w, v);
      }
      return v;
    }
    case K::jordan: {
      Vector u = eval_rec(p.children[0], a, s), w = eval_rec(p.children[1], a, s);
      return a.multiply(u, w) + a.multiply(w, u);
    }
    case K::sum: {
      Vector v = a.zero();
      for (std::size_t i = 0; i < p.children.size(); ++i) v.add_scaled(eval_rec(p.children[i], a, s), p.coeffs[i]);
      return v;
    }
  }
  return a.zero();
}

// Monomials rewritten over slot positions.
struct CompiledPoly {
  std::vector<std::pair<std::vector<std::size_t>, Rational>> terms;
};

CompiledPoly compile(const StarPolynomial& p, const std::vector<SignedVar>& slots) {
  CompiledPoly out;
  for (const auto& [m, c] : p.terms()) {
    std::vector<std::size_t> pos;
    for (const auto& v : m)
      pos.push_back(static_cast<std::size_t>(std::lower_bound(slots.begin(), slots.end(), v) - slots.begin()));
    out.terms.emplace_back(std::move(pos), c);
  }
  return out;
}

Vector eval_tuple(const CompiledPoly& p, const StarAlgebra& a, const SlotCandidates& cands,
                  const std::vector<std::size_t>& idx) {
  Vector out = a.zero();
  for (const auto& [pos, c] : p.terms) {
    Vector v = cands[pos[0]][idx[pos[0]]];
    for (std::size_t i = 1; i < pos.size() && !v.is_zero(); ++i) v = a.multiply(v, cands[pos[i]][idx[pos[i]]]);
    out.add_scaled(v, c);
  }
  return out;
}

Assignment make_assignment(const std::vector<SignedVar>& slots, const SlotCandidates& cands,
                           const std::vector<std::size_t>& idx) {
  Assignment s;
  for (std::size_t i = 0; i < slots.size(); ++i) s.emplace(slots[i], cands[i][idx[i]]);
  return s;
}

// Advance idx lexicographically over positions [from, n); false when exhausted.
bool next_tuple(std::vector<std::size_t>& idx, const SlotCandidates& cands, std::size_t from) {
  for (std::size_t p = idx.size(); p-- > from;) {
    if (++idx[p] < cands[p].size()) return true;
    idx[p] = 0;
  }
  return false;
}

struct ScanResult {
  std::optional<std::vector<std::size_t>> noncentral;
  std::optional<std::vector<std::size_t>> nonzero;
};

}  // namespace

Vector evaluate(const StarPolynomial& p, const StarAlgebra& a, const Assignment& s) {
  auto ml = check_multilinear(p);
  if (!ml.ok) throw Error("polynomial is not multilinear: " + p.str());
  check_assignment(a, ml.slots, s);
  Vector out = a.zero();
  for (const auto& [m, c] : p.terms()) {
    Vector v = s.at(m.front());
    for (std::size_t i = 1; i < m.size() && !v.is_zero(); ++i) v = a.multiply(v, s.at(m[i]));
    out.add_scaled(v, c);
  }
  return out;
}

Vector evaluate_ast(const PolyAst& p, const StarAlgebra& a, const Assignment& s, bool check_signs) {
  const auto slots = ast_slots(p);
  if (check_signs) {
    check_assignment(a, slots, s);
  } else {
    for (const auto& v : slots)
      if (!s.count(v)) throw Error("no value assigned to " + to_string(v));
  }
  return eval_rec(p, a, s);
}

SlotCandidates slot_candidates(const StarAlgebra& a, const std::vector<SignedVar>& slots, Substitution mode) {
  std::vector<Sign> signs;
  for (const auto& v : slots) signs.push_back(v.sign);
  if (mode == Substitution::automatic) mode = a.envelope() ? Substitution::regular : Substitution::full;
  if (mode == Substitution::regular) return regular_substitution_set(a, signs);
  return full_substitution_set(a, signs);
}

Verdict classify(const StarPolynomial& p, const StarAlgebra& a, const ClassifyOptions& opt) {
  auto ml = check_multilinear(p);
  if (!ml.ok) throw Error("polynomial is not multilinear: " + p.str());
  const auto& slots = ml.slots;
  const SlotCandidates cands = slot_candidates(a, slots, opt.substitution);
  for (const auto& c : cands)
    if (c.empty()) return {Status::identity, std::nullopt, std::nullopt};
  const CompiledPoly cp = compile(p, slots);
  const Subspace& z = a.center();

  const unsigned threads = std::max(1u, std::min<unsigned>(opt.threads, static_cast<unsigned>(cands[0].size())));
  std::atomic<std::size_t> best_first{cands[0].size()};  // first index of the best noncentral so far
  std::vector<ScanResult> results(threads);

  auto worker = [&](unsigned t) {
    ScanResult& r = results[t];
    for (std::size_t first = t; first < cands[0].size(); first += threads) {
      if (first > best_first.load()) return;
      std::vector<std::size_t> idx(slots.size(), 0);
      idx[0] = first;
      do {
        Vector v = eval_tuple(cp, a, cands, idx);
        if (v.is_zero()) continue;
        if (!z.contains(v)) {
          r.noncentral = idx;
          std::size_t cur = best_first.load();
          while (first < cur && !best_first.compare_exchange_weak(cur, first)) {
          }
          return;
        }
        if (!r.nonzero) r.nonzero = idx;
      } while (next_tuple(idx, cands, 1));
    }
  };
  if (threads == 1) {
    worker(0);
  } else {
    std::vector<std::jthread> pool;
    for (unsigned t = 0; t < threads; ++t) pool.emplace_back(worker, t);
  }

  std::optional<std::vector<std::size_t>> nc, nz;
  for (const auto& r : results) {
    if (r.noncentral && (!nc || *r.noncentral < *nc)) nc = r.noncentral;
    if (r.nonzero && (!nz || *r.nonzero < *nz)) nz = r.nonzero;
  }
  auto finish = [&](Status s, const std::vector<std::size_t>& idx) {
    return Verdict{s, make_assignment(slots, cands, idx), eval_tuple(cp, a, cands, idx)};
  };
  if (nc) return finish(Status::noncentral, *nc);
  if (nz) return finish(Status::proper_central, *nz);
  return {Status::identity, std::nullopt, std::nullopt};
}

// ---------------------------------------------------------------- span path

namespace {

Subspace bilinear_span(const StarAlgebra& a, const Subspace& u, const Subspace& v, int mode) {
  Subspace out(a.dim());
  if (u.is_zero() || v.is_zero()) return out;
  for (const auto& x : u.rows())
    for (const auto& y : v.rows()) {
      Vector w = a.multiply(x, y);
      if (mode == 1) w -= a.multiply(y, x);
      if (mode == 2) w += a.multiply(y, x);
      out.insert(w);
      if (out.dim() == a.dim()) return out;
    }
  return out;
}

struct SpanContext {
  const StarAlgebra& a;
  const SlotCandidates& cands;
  const std::vector<SignedVar>& slots;

  std::size_t position(const SignedVar& v) const {
    return static_cast<std::size_t>(std::lower_bound(slots.begin(), slots.end(), v) - slots.begin());
  }

  Subspace span(const PolyAst& p) const {
    using K = PolyAst::Kind;
    switch (p.kind) {
      case K::var:
        return Subspace::span(a.dim(), cands[position(p.var)]);
      case K::product: {
        Subspace s = span(p.children.front());
        for (std::size_t i = 1; i < p.children.size(); ++i) s = bilinear_span(a, s, span(p.children[i]), 0);
        return s;
      }
      case K::commutator: {
        Subspace s = span(p.children.front());
        for (std::size_t i = 1; i < p.children.size(); ++i) s = bilinear_span(a, s, span(p.children[i]), 1);
        return s;
      }
      case K::jordan:
        return bilinear_span(a, span(p.children[0]), span(p.children[1]), 2);
      case K::sum:
        return sum_span(p);
    }
    return Subspace(a.dim());
  }

  // Sums do not factor; enumerate the subtree's own tuples.
  Subspace sum_span(const PolyAst& p) const {
    const std::vector<SignedVar> local = ast_slots(p);
    SlotCandidates sub;
    for (const auto& v : local) sub.push_back(cands[position(v)]);
    Subspace out(a.dim());
    for (const auto& c : sub)
      if (c.empty()) return out;
    const CompiledPoly cp = compile(expand(p), local);
    std::vector<std::size_t> idx(local.size(), 0);
    do {
      out.insert(eval_tuple(cp, a, sub, idx));
      if (out.dim() == a.dim()) break;
    } while (next_tuple(idx, sub, 0));
    return out;
  }
};

template <class Pred>
std::vector<std::size_t> minimal_tuple(const PolyAst& p, const StarAlgebra& a, const SlotCandidates& cands,
                                       const std::vector<SignedVar>& slots, Pred pred) {
  SlotCandidates work = cands;
  std::vector<std::size_t> idx(slots.size(), 0);
  for (std::size_t s = 0; s < slots.size(); ++s) {
    bool found = false;
    for (std::size_t i = 0; i < cands[s].size() && !found; ++i) {
      work[s] = {cands[s][i]};
      if (pred(SpanContext{a, work, slots}.span(p))) {
        idx[s] = i;
        found = true;
      }
    }
    if (!found) throw Error("internal: span witness search lost the property");
  }
  return idx;
}

}  // namespace

Subspace value_span(const PolyAst& p, const StarAlgebra& a, const SlotCandidates& cands,
                    const std::vector<SignedVar>& slots) {
  return SpanContext{a, cands, slots}.span(p);
}

Verdict classify(const PolyAst& p, const StarAlgebra& a, const ClassifyOptions& opt) {
  const std::vector<SignedVar> slots = ast_slots(p);
  const SlotCandidates cands = slot_candidates(a, slots, opt.substitution);
  const Subspace& z = a.center();
  const Subspace all = value_span(p, a, cands, slots);
  if (all.is_zero()) return {Status::identity, std::nullopt, std::nullopt};
  const bool central = z.contains(all);
  auto idx = central ? minimal_tuple(p, a, cands, slots, [](const Subspace& s) { return !s.is_zero(); })
                     : minimal_tuple(p, a, cands, slots, [&](const Subspace& s) { return !z.contains(s); });
  Assignment w;
  for (std::size_t i = 0; i < slots.size(); ++i) w.emplace(slots[i], cands[i][idx[i]]);
  Vector v = eval_rec(p, a, w);
  return {central ? Status::proper_central : Status::noncentral, std::move(w), std::move(v)};
}

bool is_identity(const PolyAst& p, const StarAlgebra& a) { return classify(p, a).status == Status::identity; }

bool is_central(const PolyAst& p, const StarAlgebra& a) { return classify(p, a).status != Status::noncentral; }

std::string format_assignment(const StarAlgebra& a, const Assignment& s) {
  std::string out;
  for (const auto& [v, x] : s) {
    if (!out.empty()) out += ", ";
    out += to_string(v) + " = " + format_element(a, x);
  }
  return out;
}

}  // namespace pistar
