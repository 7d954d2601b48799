// Brute-force check of the derangement theorem for PSL2(q): for each
// subgroup family (a)-(g) and every coset Hx != H, some element of Hx
// fixes no coset. Also the A4-on-2-subsets example and the trace filters.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <memory>
#include <numeric>
#include <optional>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosetder/ffield.hpp"
#include "cosetder/mat2.hpp"
#include "cosetder/parallel.hpp"
#include "cosetder/subgroups.hpp"

namespace cosetder {

using FGroup = GroupSet<FieldElem>;

inline constexpr std::size_t kDefaultPslCap = 200'000;

inline std::uint64_t psl2_order(std::uint64_t q) {
  return q * (q * q - 1) / (q % 2 ? 2 : 1);
}

/// PSL2(q) as a projective GroupSet, by enumerating SL2(q).
inline FGroup psl2(const FieldCtx& F, std::size_t cap = kDefaultPslCap) {
  const Elem q = F.q();
  if (q < 4) throw std::invalid_argument("psl2 needs q >= 4");
  if (psl2_order(q) > cap)
    throw std::length_error("|PSL2(" + std::to_string(q) + ")| = " + std::to_string(psl2_order(q)) +
                            " exceeds cap " + std::to_string(cap));
  std::vector<FMat> out;
  out.reserve(psl2_order(q));
  auto keep = [&](const FMat& m) {
    if (projective_canonical(m) == m) out.push_back(m);
  };
  for (Elem a = 0; a < q; ++a)
    for (Elem b = 0; b < q; ++b)
      for (Elem c = 0; c < q; ++c) {
        if (a != 0) {
          keep(fmat(F, a, b, c, F.div(F.add(1, F.mul(b, c)), a)));
        } else if (b != 0 && c == F.neg(F.inv(b))) {
          for (Elem d = 0; d < q; ++d) keep(fmat(F, a, b, c, d));
        }
      }
  return FGroup(std::move(out), true);
}

/// Order of m in PSL2 (m^k = +-E), or 0 past `bound`.
inline unsigned projective_element_order(const FMat& m, unsigned bound = 1000) {
  const FMat e = FMat::identity(one_like(m.a));
  FMat p = m;
  for (unsigned k = 1; k <= bound; ++k) {
    if (p == e || p == -e) return k;
    p = p * m;
  }
  return 0;
}

/// {m, -m : m in H}.
inline FGroup sl2_preimage(const FGroup& H) {
  std::vector<FMat> out;
  for (const auto& m : H) {
    out.push_back(m);
    out.push_back(-m);
  }
  return FGroup(std::move(out), false);
}

// ---------------------------------------------------------------------------
// subgroup families

enum class CaseTag { A, B, C, D, E, F, G };

inline char tag_char(CaseTag t) { return static_cast<char>('a' + static_cast<int>(t)); }

inline CaseTag parse_case_tag(char c) {
  if (c < 'a' || c > 'g') throw std::invalid_argument(std::string("unknown case: ") + c);
  return static_cast<CaseTag>(c - 'a');
}

/// r with q = r^e, e >= 2, ascending.
inline std::vector<std::uint32_t> subfield_orders(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  std::vector<std::uint32_t> out;
  std::uint64_t r = 1;
  for (unsigned j = 1; j < pp->k; ++j) {
    r *= pp->p;
    if (pp->k % j == 0) out.push_back(static_cast<std::uint32_t>(r));
  }
  return out;
}

/// Applicability predicates of the subgroup list, taken as printed.
inline bool case_applies(CaseTag t, std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp || q < 4) return false;
  switch (t) {
    case CaseTag::A:
    case CaseTag::B:
    case CaseTag::C: return true;
    case CaseTag::D: return pp->k == 1 && pp->p != 2;
    case CaseTag::E: return pp->k == 1 && (q % 8 == 1 || q % 8 == 7);
    case CaseTag::F: return (q % 10 == 1 || q % 10 == 9) && (pp->p != 3 || q == 9);
    case CaseTag::G: return pp->k >= 2;
  }
  return false;
}

struct SubgroupRep {
  CaseTag tag;
  std::string label;  // "a".."f", or "g:PSL2(r)" / "g:PGL2(r)"
  FGroup group;       // projective, inside PSL2(q)
  std::optional<std::uint64_t> expected_index;
};

inline FGroup borel_subgroup(const FieldCtx& F) {
  std::vector<FMat> out;
  for (Elem r = 1; r < F.q(); ++r)
    for (Elem s = 0; s < F.q(); ++s) out.push_back(fmat(F, r, s, 0, F.inv(r)));
  return FGroup(std::move(out), true);
}

/// The nonsplit normalizer moved from SU2 into SL2(q). X in SU2 satisfies
/// conj(X) = J X J^-1 with J = (0 1; -1 0), so if conj(g) = lambda g J^-1
/// then g X g^-1 is fixed by Frobenius. Such g: a = 1, b = 1/lambda,
/// d = conj(c)/lambda, for N(lambda) = -1 and c outside GF(q).
inline FGroup nonsplit_in_sl2(const FieldPtr& base) {
  const auto qe = quadratic_extension(base);
  const FieldCtx& E = *qe.ext;
  const Elem minus_one = base->neg(1);
  std::optional<Elem> lambda, c;
  for (Elem x = 1; x < E.q() && !lambda; ++x)
    if (qe.restriction[qe.norm(x)] == static_cast<std::int32_t>(minus_one)) lambda = x;
  for (Elem x = 0; x < E.q() && !c; ++x)
    if (qe.restriction[x] < 0) c = x;
  if (!lambda || !c) throw std::logic_error("no base change for the nonsplit torus");
  const FieldElem l = E(*lambda), cc = E(*c);
  const FMat g{E.one(), l.inv(), cc, qe.conj(cc) / l};
  const FMat gi = g.inverse();
  std::vector<FMat> out;
  for (const auto& X : nonsplit_torus_normalizer(qe)) {
    const FMat Y = g * X * gi;
    auto down = [&](const FieldElem& v) {
      const auto r = qe.restrict_to_base(v);
      if (!r) throw std::logic_error("base change left an entry outside GF(q)");
      return *r;
    };
    out.push_back({down(Y.a), down(Y.b), down(Y.c), down(Y.d)});
  }
  return FGroup(std::move(out), true);
}

/// Closure of the generators if it has at most `cap` elements.
inline std::optional<FGroup> bounded_closure(const std::vector<FMat>& gens, std::size_t cap) {
  try {
    return group_closure(gens, true, cap);
  } catch (const std::length_error&) {
    return std::nullopt;
  }
}

/// A subgroup of PSL2(q) generated by an involution and an element of
/// order 3 whose product has order n, of the given size. The involution is
/// the first one in canonical order (all involutions are conjugate); the
/// second generator is the first that works.
inline std::optional<FGroup> triangle_subgroup(const FGroup& S, unsigned n, std::size_t size) {
  const FMat* x = nullptr;
  for (const auto& m : S)
    if (projective_element_order(m, 2) == 2) {
      x = &m;
      break;
    }
  if (!x) return std::nullopt;
  for (const auto& y : S) {
    if (projective_element_order(y, 3) != 3) continue;
    if (projective_element_order(*x * y, n) != n) continue;
    auto g = bounded_closure({*x, y}, size);
    if (g && g->size() == size) return g;
  }
  return std::nullopt;
}

inline FGroup polyhedral_in_psl2(PolyKind kind, const FieldCtx& F, const FGroup& S) {
  const std::size_t order = projective_order(kind);
  if (std::gcd<std::size_t, std::size_t>(F.q(), 2 * order) == 1) {
    if (auto img = reduce_mod_p(binary_polyhedral(kind), F)) return img->projective_image();
  }
  const unsigned n = kind == PolyKind::A4 ? 3 : kind == PolyKind::S4 ? 4 : 5;
  if (auto g = triangle_subgroup(S, n, order)) return *g;
  throw std::runtime_error(std::string("construction not found: ") + to_string(kind) + " in PSL2(" +
                           std::to_string(F.q()) + ")");
}

/// PSL2(r) on the subfield {x : x^r = x}.
inline FGroup subfield_psl2(const FieldCtx& F, std::uint32_t r) {
  std::vector<Elem> sub;
  for (Elem x = 0; x < F.q(); ++x)
    if (F.pow(x, r) == x) sub.push_back(x);
  if (sub.size() != r) throw std::invalid_argument("no subfield of order " + std::to_string(r));
  std::vector<FMat> out;
  for (Elem a : sub)
    for (Elem b : sub)
      for (Elem c : sub)
        for (Elem d : sub)
          if (F.sub(F.mul(a, d), F.mul(b, c)) == 1) out.push_back(fmat(F, a, b, c, d));
  return FGroup(std::move(out), true);
}

/// H together with the first element of S (canonical order) outside H that
/// normalizes it and doubles its size.
inline std::optional<FGroup> normalizer_extension(const FGroup& S, const FGroup& H) {
  for (const auto& n : S) {
    if (H.contains(n)) continue;
    const FMat ni = n.inverse();
    bool normal = true;
    for (const auto& h : H)
      if (!H.contains(ni * h * n)) {
        normal = false;
        break;
      }
    if (!normal) continue;
    std::vector<FMat> gens(H.begin(), H.end());
    gens.push_back(n);
    auto g = bounded_closure(gens, 2 * H.size());
    if (g && g->size() == 2 * H.size()) return g;
  }
  return std::nullopt;
}

/// One representative per applicable case, restricted to `tags` if given.
inline std::vector<SubgroupRep> maximal_subgroup_reps(const FieldPtr& Fp, const FGroup& S,
                                                      const std::set<CaseTag>* tags = nullptr) {
  const FieldCtx& F = *Fp;
  const std::uint64_t q = F.q();
  if (q < 4) throw std::invalid_argument("subgroup list needs q >= 4");
  auto want = [&](CaseTag t) { return case_applies(t, q) && (!tags || tags->count(t)); };
  std::vector<SubgroupRep> out;
  if (want(CaseTag::A)) out.push_back({CaseTag::A, "a", borel_subgroup(F), q + 1});
  if (want(CaseTag::B))
    out.push_back({CaseTag::B, "b", split_torus_normalizer(F).projective_image(), q * (q + 1) / 2});
  if (want(CaseTag::C)) out.push_back({CaseTag::C, "c", nonsplit_in_sl2(Fp), q * (q - 1) / 2});
  if (want(CaseTag::D)) out.push_back({CaseTag::D, "d", polyhedral_in_psl2(PolyKind::A4, F, S), std::nullopt});
  if (want(CaseTag::E)) out.push_back({CaseTag::E, "e", polyhedral_in_psl2(PolyKind::S4, F, S), std::nullopt});
  if (want(CaseTag::F)) out.push_back({CaseTag::F, "f", polyhedral_in_psl2(PolyKind::A5, F, S), std::nullopt});
  if (want(CaseTag::G)) {
    const unsigned k = F.k();
    for (auto r : subfield_orders(q)) {
      const std::string rs = std::to_string(r);
      FGroup sub = subfield_psl2(F, r);
      // PGL2(r) sits inside PSL2(r^e) only for even e
      unsigned j = 0;
      for (std::uint64_t t = r; t > 1; t /= F.p()) ++j;
      const bool pgl = r % 2 == 1 && (k / j) % 2 == 0;
      if (pgl) {
        auto ext = normalizer_extension(S, sub);
        if (!ext) throw std::runtime_error("construction not found: PGL2(" + rs + ")");
        out.push_back({CaseTag::G, "g:PSL2(" + rs + ")", std::move(sub), std::nullopt});
        out.push_back({CaseTag::G, "g:PGL2(" + rs + ")", std::move(*ext), std::nullopt});
      } else {
        out.push_back({CaseTag::G, "g:PSL2(" + rs + ")", std::move(sub), std::nullopt});
      }
    }
  }
  return out;
}

// ---------------------------------------------------------------------------
// coset action

/// Action of a group on the right cosets of a subgroup. Coset 0 is H;
/// the others are numbered by their smallest element. Permutation images
/// are computed on demand rather than stored for every element.
class CosetAction {
 public:
  CosetAction(std::shared_ptr<const FGroup> group, FGroup stab) : g_(std::move(group)), h_(std::move(stab)) {
    const FGroup& G = *g_;
    if (G.projective() != h_.projective()) throw std::invalid_argument("group and stabilizer disagree on projectivity");
    if (h_.size() == 0 || G.size() % h_.size()) throw std::invalid_argument("stabilizer is not a subgroup");
    for (const auto& h : h_)
      if (!G.contains(h)) throw std::invalid_argument("stabilizer is not a subgroup");
    if (!h_.is_closed()) throw std::invalid_argument("stabilizer is not a subgroup");
    constexpr std::uint32_t none = ~0u;
    coset_.assign(G.size(), none);
    auto assign = [&](std::size_t gi) {
      const auto c = static_cast<std::uint32_t>(members_.size());
      members_.emplace_back();
      for (const auto& h : h_) {
        const auto idx = G.index_of(h * G[gi]);
        if (idx < 0) throw std::invalid_argument("stabilizer is not a subgroup");
        if (coset_[idx] != none) throw std::invalid_argument("stabilizer is not closed");
        coset_[idx] = c;
        members_.back().push_back(static_cast<std::uint32_t>(idx));
      }
      std::sort(members_.back().begin(), members_.back().end());
      reps_.push_back(members_.back().front());
    };
    assign(static_cast<std::size_t>(G.index_of(h_[0])));
    for (std::size_t i = 0; i < G.size(); ++i)
      if (coset_[i] == none) assign(i);
    if (reps_.size() * h_.size() != G.size()) throw std::logic_error("coset decomposition is not a partition");
  }

  const FGroup& group() const { return *g_; }
  const FGroup& stabilizer() const { return h_; }
  std::size_t degree() const { return reps_.size(); }
  std::uint32_t coset_of(std::size_t elem) const { return coset_.at(elem); }
  /// Element indices of a coset, ascending.
  const std::vector<std::uint32_t>& members(std::size_t coset) const { return members_.at(coset); }
  const FMat& rep(std::size_t coset) const { return (*g_)[reps_.at(coset)]; }

  std::uint32_t act(std::size_t coset, const FMat& s) const {
    const auto idx = g_->index_of(rep(coset) * s);
    if (idx < 0) throw std::invalid_argument("element not in the group");
    return coset_[idx];
  }
  std::vector<std::uint32_t> image(const FMat& s) const {
    std::vector<std::uint32_t> p(degree());
    for (std::size_t j = 0; j < degree(); ++j) p[j] = act(j, s);
    return p;
  }
  std::size_t fixed_points(const FMat& s) const {
    std::size_t n = 0;
    for (std::size_t j = 0; j < degree(); ++j) n += act(j, s) == j;
    return n;
  }

  /// Flags elements that fix some coset: the union of rep^-1 H rep.
  std::vector<char> point_fixers() const {
    std::vector<char> f(g_->size(), 0);
    for (std::size_t j = 0; j < degree(); ++j) {
      const FMat r = rep(j), ri = r.inverse();
      for (const auto& h : h_) f[static_cast<std::size_t>(g_->index_of(ri * h * r))] = 1;
    }
    return f;
  }

  /// Orbit of coset 0 under H has every other coset.
  bool doubly_transitive() const {
    if (degree() <= 2) return true;
    std::vector<char> seen(degree(), 0);
    std::size_t n = 0;
    for (const auto& h : h_) {
      const auto j = act(1, h);
      if (!seen[j]) seen[j] = 1, ++n;
    }
    return n == degree() - 1;
  }

 private:
  std::shared_ptr<const FGroup> g_;
  FGroup h_;
  std::vector<std::uint32_t> coset_;
  std::vector<std::vector<std::uint32_t>> members_;
  std::vector<std::uint32_t> reps_;
};

inline CosetAction build_coset_action(std::shared_ptr<const FGroup> group, FGroup stab) {
  return CosetAction(std::move(group), std::move(stab));
}

/// First element of the coset (canonical order) fixing no coset.
inline std::optional<std::uint32_t> derangement_in_coset(const CosetAction& act, std::size_t coset,
                                                         const std::vector<char>& fixers) {
  if (coset == 0 || coset >= act.degree()) throw std::invalid_argument("coset index must be in 1..degree-1");
  for (auto e : act.members(coset))
    if (!fixers[e]) return e;
  return std::nullopt;
}

inline std::optional<std::uint32_t> derangement_in_coset(const CosetAction& act, std::size_t coset) {
  return derangement_in_coset(act, coset, act.point_fixers());
}

/// Orbit of coset 0 under the group generated by the given elements is
/// everything.
inline bool generated_transitive(const CosetAction& act, const std::vector<std::uint32_t>& gens) {
  std::vector<char> seen(act.degree(), 0);
  std::deque<std::uint32_t> work{0};
  seen[0] = 1;
  std::size_t n = 1;
  // from coset 0 the image of g is just its coset
  for (auto g : gens) {
    const auto j = act.coset_of(g);
    if (!seen[j]) seen[j] = 1, ++n, work.push_back(j);
  }
  while (!work.empty() && n < act.degree()) {
    const auto j = work.front();
    work.pop_front();
    for (auto g : gens) {
      const auto k = act.act(j, act.group()[g]);
      if (!seen[k]) seen[k] = 1, ++n, work.push_back(k);
    }
  }
  return n == act.degree();
}

struct TraceFilter {
  bool subset1 = false;  // traces of Hx inside traces of H
  bool subset2 = false;  // ... inside traces of H without -2, 2
};

/// H is a subgroup of SL2 (not projective).
inline TraceFilter trace_filter(const FGroup& H, const FMat& x) {
  const auto T = trace_set(H);
  const FieldElem two = x.a.ctx()->from(2);
  TraceFilter f{true, true};
  for (const auto& h : H) {
    const FieldElem t = (h * x).trace();
    if (!std::binary_search(T.begin(), T.end(), t)) f.subset1 = false;
    if (!std::binary_search(T.begin(), T.end(), t) || t == two || t == -two) f.subset2 = false;
  }
  return f;
}

// ---------------------------------------------------------------------------
// verification

struct CaseReport {
  std::uint64_t q = 0;
  CaseTag tag = CaseTag::A;
  std::string label;
  std::size_t subgroup_order = 0;
  std::size_t index = 0;
  std::optional<std::uint64_t> expected_index;
  std::size_t cosets_checked = 0;
  std::vector<std::size_t> missing;  // cosets without a derangement
  std::vector<FMat> sample_witnesses;  // first three
  bool witnesses_valid = true;         // fix nothing and hit the target coset
  std::size_t subset1 = 0, subset2 = 0;  // cosets whose rep passes the trace filters
  bool filter_consistent = true;
  bool derangements_transitive = false;
  bool doubly_transitive = false;

  bool index_ok() const { return !expected_index || *expected_index == index; }
  bool pass() const {
    return missing.empty() && witnesses_valid && filter_consistent && derangements_transitive && index_ok();
  }
};

inline CaseReport check_action(std::uint64_t q, const SubgroupRep& rep, const CosetAction& act, unsigned jobs) {
  CaseReport r;
  r.q = q;
  r.tag = rep.tag;
  r.label = rep.label;
  r.subgroup_order = rep.group.size();
  r.index = act.degree();
  r.expected_index = rep.expected_index;
  r.cosets_checked = act.degree() - 1;
  r.doubly_transitive = act.doubly_transitive();

  const auto fixers = act.point_fixers();
  const FGroup H = sl2_preimage(act.stabilizer());
  std::vector<std::optional<std::uint32_t>> wit(act.degree());
  std::vector<TraceFilter> filt(act.degree());
  parallel_for(act.degree() - 1, jobs, [&](std::size_t i) {
    const std::size_t c = i + 1;
    wit[c] = derangement_in_coset(act, c, fixers);
    filt[c] = trace_filter(H, act.rep(c));
  });
  for (std::size_t c = 1; c < act.degree(); ++c) {
    r.subset1 += filt[c].subset1;
    r.subset2 += filt[c].subset2;
    if (!wit[c]) {
      r.missing.push_back(c);
      if (!filt[c].subset1) r.filter_consistent = false;
      continue;
    }
    if (r.sample_witnesses.size() < 3) {
      const FMat& s = act.group()[*wit[c]];
      r.sample_witnesses.push_back(s);
      if (act.fixed_points(s) != 0 || act.act(0, s) != c) r.witnesses_valid = false;
    }
  }
  std::vector<std::uint32_t> der;
  for (std::size_t e = 0; e < fixers.size(); ++e)
    if (!fixers[e]) der.push_back(static_cast<std::uint32_t>(e));
  r.derangements_transitive = generated_transitive(act, der);
  return r;
}

struct TheoremReport {
  std::uint64_t q = 0;
  std::size_t group_order = 0;
  std::vector<CaseReport> cases;

  bool pass() const {
    return std::all_of(cases.begin(), cases.end(), [](const CaseReport& c) { return c.pass(); });
  }
};

/// All applicable cases for q (or those in `tags`).
inline TheoremReport verify_theorem(std::uint64_t q, const std::set<CaseTag>* tags = nullptr, unsigned jobs = 1,
                                    std::size_t cap = kDefaultPslCap) {
  const FieldPtr F = field_of_order(q);
  auto S = std::make_shared<const FGroup>(psl2(*F, cap));
  TheoremReport out;
  out.q = q;
  out.group_order = S->size();
  for (const auto& rep : maximal_subgroup_reps(F, *S, tags)) {
    const CosetAction act(S, rep.group);
    out.cases.push_back(check_action(q, rep, act, jobs));
  }
  return out;
}

// ---------------------------------------------------------------------------
// A4 on the 2-subsets of {1,2,3,4}

using Perm = std::vector<int>;

inline Perm perm_mul(const Perm& x, const Perm& y) {  // x then y
  Perm r(x.size());
  for (std::size_t i = 0; i < x.size(); ++i) r[i] = y[x[i]];
  return r;
}

inline std::vector<Perm> perm_closure(const std::vector<Perm>& gens) {
  Perm e(gens.at(0).size());
  std::iota(e.begin(), e.end(), 0);
  std::set<Perm> seen{e};
  std::deque<Perm> work{e};
  while (!work.empty()) {
    const Perm g = work.front();
    work.pop_front();
    for (const auto& s : gens) {
      Perm h = perm_mul(g, s);
      if (seen.insert(h).second) work.push_back(std::move(h));
    }
  }
  return {seen.begin(), seen.end()};
}

struct IntroReport {
  std::size_t group_order = 0;
  std::size_t points = 0;
  std::size_t coset_size = 0;
  std::size_t derangements_in_coset = 0;
  std::size_t derangements = 0;
  bool derangements_transitive = false;
  std::vector<std::vector<int>> block;  // a nontrivial block, as 2-subsets (1-based)
  bool block_ok = false;

  bool pass() const { return coset_size > 0 && derangements_in_coset == 0 && derangements_transitive && block_ok; }
};

inline IntroReport intro_counterexample() {
  // A4 = <(1 2 3), (1 2)(3 4)> on 0-based points
  const auto A4 = perm_closure({{1, 2, 0, 3}, {1, 0, 3, 2}});
  std::vector<std::pair<int, int>> pairs;
  for (int i = 0; i < 4; ++i)
    for (int j = i + 1; j < 4; ++j) pairs.emplace_back(i, j);
  auto pair_index = [&](int i, int j) {
    if (i > j) std::swap(i, j);
    return static_cast<int>(std::find(pairs.begin(), pairs.end(), std::make_pair(i, j)) - pairs.begin());
  };
  auto on_pairs = [&](const Perm& g) {
    Perm p(pairs.size());
    for (std::size_t k = 0; k < pairs.size(); ++k) p[k] = pair_index(g[pairs[k].first], g[pairs[k].second]);
    return p;
  };
  auto fixes_none = [](const Perm& p) {
    for (std::size_t k = 0; k < p.size(); ++k)
      if (p[k] == static_cast<int>(k)) return false;
    return true;
  };

  IntroReport r;
  r.group_order = A4.size();
  r.points = pairs.size();
  const int from = pair_index(0, 1), to = pair_index(2, 3);
  std::vector<Perm> der;
  for (const auto& g : A4) {
    const Perm p = on_pairs(g);
    const bool d = fixes_none(p);
    if (d) der.push_back(p);
    if (p[from] == to) {
      ++r.coset_size;
      r.derangements_in_coset += d;
    }
  }
  r.derangements = der.size();
  if (!der.empty()) {
    std::set<int> orbit{0};
    for (const auto& g : perm_closure(der)) orbit.insert(g[0]);
    r.derangements_transitive = orbit.size() == pairs.size();
  }
  // {{1,2},{3,4}} is a block: every image is itself or disjoint from it
  const std::set<int> B{from, to};
  r.block = {{1, 2}, {3, 4}};
  r.block_ok = true;
  for (const auto& g : A4) {
    const Perm p = on_pairs(g);
    const std::set<int> img{p[from], p[to]};
    std::vector<int> common;
    std::set_intersection(B.begin(), B.end(), img.begin(), img.end(), std::back_inserter(common));
    if (!(img == B || common.empty())) r.block_ok = false;
  }
  return r;
}

}  // namespace cosetder
