// Symbolic checks over the binary polyhedral groups: the trace identities
// sum_h tr(hy) tr(hx)^(2m+1) = |H-bar| c_m (tr x tr y - tr xy) det(x)^m,
// the product polynomials over the trace sets, and the sum that reduces to
// |H-bar| modulo det = 1.
#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

#include "cosetder/mat2.hpp"
#include "cosetder/mpoly.hpp"
#include "cosetder/parallel.hpp"
#include "cosetder/subgroups.hpp"

namespace cosetder {

using NPoly = MPoly<NFElem>;
using PMat = Mat2<NPoly>;

/// C_{m+1} = binom(2m+2, m+1) / (m+2); gives 1, 2, 5, 14, 42 for m = 0..4.
inline std::uint64_t catalan(unsigned m) {
  if (m > 30) throw std::out_of_range("catalan: m too large");
  const unsigned n = m + 1;
  std::uint64_t b = 1;  // binom(2n, k) built up incrementally, always exact
  for (unsigned k = 1; k <= n; ++k) b = b * (n + k) / k;
  return b / (n + 1);
}

/// Largest m for which the identity holds.
inline unsigned max_identity_m(PolyKind k) {
  switch (k) {
    case PolyKind::A4: return 1;
    case PolyKind::S4: return 2;
    case PolyKind::A5: return 4;
  }
  return 0;
}

struct TraceIdentityCase {
  PolyKind kind;
  unsigned m;

  std::uint64_t catalan() const { return cosetder::catalan(m); }
  unsigned order() const { return projective_order(kind); }
  bool in_range() const { return m <= max_identity_m(kind); }
};

inline std::vector<TraceIdentityCase> identity_cases() {
  std::vector<TraceIdentityCase> out;
  for (auto k : {PolyKind::A4, PolyKind::S4, PolyKind::A5})
    for (unsigned m = 0; m <= max_identity_m(k); ++m) out.push_back({k, m});
  return out;
}

/// First m past the range, for each kind.
inline std::vector<TraceIdentityCase> negative_cases() {
  return {{PolyKind::A4, 2}, {PolyKind::S4, 3}, {PolyKind::A5, 5}};
}

/// The three groups, built once.
inline const GroupSet<NFElem>& cached_polyhedral(PolyKind k) {
  static const GroupSet<NFElem> groups[3] = {binary_polyhedral(PolyKind::A4), binary_polyhedral(PolyKind::S4),
                                             binary_polyhedral(PolyKind::A5)};
  return groups[static_cast<int>(k)];
}

/// x = (x11 x12; x21 x22) in variables 0..3 and y likewise in 4..7.
inline std::pair<PMat, PMat> generic_matrices(NFKind f) {
  const NFElem one(f, Rational{1});
  auto v = [&](int i) { return NPoly::var(i, one); };
  return {PMat{v(0), v(1), v(2), v(3)}, PMat{v(4), v(5), v(6), v(7)}};
}

inline PMat lift(const NMat& h) {
  return {NPoly::constant(h.a), NPoly::constant(h.b), NPoly::constant(h.c), NPoly::constant(h.d)};
}

inline bool dyadic_coefficients(const NPoly& p) {
  for (const auto& [m, c] : p.terms())
    if (!c.dyadic()) return false;
  return true;
}

inline bool dyadic_group(const GroupSet<NFElem>& g) {
  for (const auto& h : g)
    if (!h.a.dyadic() || !h.b.dyadic() || !h.c.dyadic() || !h.d.dyadic()) return false;
  return true;
}

/// Sum over h of term(h), split into contiguous chunks that are summed on
/// their own and merged in chunk order.
template <class Term>
NPoly sum_over_group(const GroupSet<NFElem>& g, unsigned jobs, Term&& term, bool* dyadic = nullptr) {
  const std::size_t n = g.size();
  const std::size_t chunks = std::max<std::size_t>(1, std::min<std::size_t>(jobs, n));
  std::vector<NPoly> part(chunks);
  std::vector<char> dy(chunks, 1);
  parallel_for(chunks, jobs, [&](std::size_t c) {
    for (std::size_t i = c * n / chunks; i < (c + 1) * n / chunks; ++i) {
      const NPoly t = term(g[i]);
      if (!dyadic_coefficients(t)) dy[c] = 0;
      part[c] += t;
    }
  });
  NPoly acc;
  for (std::size_t c = 0; c < chunks; ++c) {
    acc += part[c];
    if (dyadic && !dy[c]) *dyadic = false;
  }
  return acc;
}

struct TraceIdentityReport {
  PolyKind kind;
  unsigned m = 0;
  unsigned order = 0;
  std::uint64_t catalan = 0;
  bool equal = false;
  bool proportional = false;  // lhs is some multiple of the right-hand shape
  std::size_t diff_terms = 0;
  std::size_t lhs_terms = 0;
  bool dyadic = true;

  std::uint64_t expected_coefficient() const { return order * catalan; }
  /// Verdict as predicted: equality inside the range, failure outside.
  bool as_predicted() const { return m <= max_identity_m(kind) ? equal && dyadic : !equal; }
};

/// Expands both sides for H (defaults to the cached group of `kind`).
inline TraceIdentityReport trace_identity_check(const TraceIdentityCase& tc, const GroupSet<NFElem>* group = nullptr,
                                                unsigned jobs = 1) {
  const GroupSet<NFElem>& H = group ? *group : cached_polyhedral(tc.kind);
  const NFKind f = field_of(tc.kind);
  const NFElem one(f, Rational{1});
  const auto [x, y] = generic_matrices(f);

  TraceIdentityReport r{tc.kind, tc.m, tc.order(), tc.catalan()};
  r.dyadic = dyadic_group(H);
  const NPoly lhs = sum_over_group(
      H, jobs,
      [&](const NMat& h) {
        const PMat hl = lift(h);
        return (hl * y).trace() * (hl * x).trace().pow(2 * tc.m + 1, one);
      },
      &r.dyadic);

  const NPoly shape = (x.trace() * y.trace() - (x * y).trace()) * x.det().pow(tc.m, one);
  const NPoly rhs = shape.scale(NFElem(f, Rational{static_cast<long>(r.expected_coefficient())}));
  const NPoly diff = lhs - rhs;
  r.lhs_terms = lhs.size();
  r.diff_terms = diff.size();
  r.equal = diff.is_zero();
  r.dyadic = r.dyadic && dyadic_coefficients(rhs);

  // a single monomial of the shape fixes the only possible multiplier
  const auto& [mono, coef] = *shape.terms().begin();
  const auto it = lhs.terms().find(mono);
  const NFElem lambda = it == lhs.terms().end() ? NFElem(f) : it->second / coef;
  r.proportional = (lhs - shape.scale(lambda)).is_zero() && !lhs.is_zero();
  return r;
}

/// A random element of SL2 with integer entries, as a product of
/// elementary matrices.
inline NMat random_sl2(NFKind f, std::uint64_t seed, int factors = 4) {
  std::mt19937_64 rng(seed);
  std::uniform_int_distribution<long> d(-3, 3);
  const NFElem one(f, Rational{1}), zero(f);
  NMat g = NMat::identity(one);
  for (int i = 0; i < factors; ++i) {
    const NFElem k(f, Rational{d(rng)});
    g = g * (i % 2 ? NMat{one, zero, k, one} : NMat{one, k, zero, one});
  }
  return g;
}

/// {g^-1 h g : h in H}.
inline GroupSet<NFElem> conjugate_group(const GroupSet<NFElem>& H, const NMat& g) {
  const NMat gi = g.inverse();
  std::vector<NMat> out;
  for (const auto& h : H) out.push_back(gi * h * g);
  return GroupSet<NFElem>(std::move(out), H.projective());
}

/// prod over t in T of (Z - t), T = traces of H without -2 and 2.
inline UPoly<NFElem> product_trace_poly(PolyKind kind) {
  const NFKind f = field_of(kind);
  const NFElem one(f, Rational{1}), two(f, Rational{2});
  UPoly<NFElem> p{{one}};
  for (const auto& t : trace_set(cached_polyhedral(kind))) {
    if (t == two || t == -two) continue;
    p = p * UPoly<NFElem>{{-t, one}};
  }
  return p;
}

/// The displayed products Z^3 - Z, Z^5 - 3Z^3 + 2Z, Z^7 - 4Z^5 + 4Z^3 - Z.
inline UPoly<NFElem> expected_product_poly(PolyKind kind) {
  const NFKind f = field_of(kind);
  std::vector<long> c;
  switch (kind) {
    case PolyKind::A4: c = {0, -1, 0, 1}; break;
    case PolyKind::S4: c = {0, 2, 0, -3, 0, 1}; break;
    case PolyKind::A5: c = {0, -1, 0, 4, 0, -4, 0, 1}; break;
  }
  std::vector<NFElem> out;
  for (long v : c) out.emplace_back(f, Rational{v});
  return UPoly<NFElem>{std::move(out)};
}

inline constexpr int kVarA = 0, kVarB = 1, kVarC = 2, kVarD = 3;

/// Normal form modulo (ad - bc - 1): every a^i d^j picks up
/// (bc + 1)^min(i, j). ad is the leading term of the relation, so this is
/// the full reduction.
inline NPoly reduce_det_one(const NPoly& p) {
  NPoly r;
  for (const auto& [m, c] : p.terms()) {
    const unsigned k = std::min(m.e[kVarA], m.e[kVarD]);
    Monomial base = m;
    base.e[kVarA] = static_cast<std::uint8_t>(base.e[kVarA] - k);
    base.e[kVarD] = static_cast<std::uint8_t>(base.e[kVarD] - k);
    long binom = 1;
    for (unsigned j = 0; j <= k; ++j) {
      Monomial t = base;
      t.e[kVarB] = static_cast<std::uint8_t>(t.e[kVarB] + j);
      t.e[kVarC] = static_cast<std::uint8_t>(t.e[kVarC] + j);
      r.add_term(t, c * int_like(c, binom));
      binom = binom * static_cast<long>(k - j) / static_cast<long>(j + 1);
    }
  }
  return r;
}

struct PolyhedralSumReport {
  PolyKind kind;
  unsigned order = 0;
  std::size_t lhs_terms = 0;
  NPoly reduced;
  bool equal = false;
};

/// Sum over h of tr(hy) prod_t (tr(hx) - t) with x = (a b; c d) and
/// y = (0 0; c d), reduced modulo det x = 1 and compared with |H-bar|.
inline PolyhedralSumReport polyhedral_sum_check(PolyKind kind, unsigned jobs = 1) {
  const NFKind f = field_of(kind);
  const NFElem one(f, Rational{1}), two(f, Rational{2});
  auto v = [&](int i) { return NPoly::var(i, one); };
  const PMat x{v(kVarA), v(kVarB), v(kVarC), v(kVarD)};
  const PMat y{NPoly{}, NPoly{}, v(kVarC), v(kVarD)};
  std::vector<NFElem> T;
  for (const auto& t : trace_set(cached_polyhedral(kind)))
    if (t != two && t != -two) T.push_back(t);

  const NPoly lhs = sum_over_group(cached_polyhedral(kind), jobs, [&](const NMat& h) {
    const PMat hl = lift(h);
    const NPoly tx = (hl * x).trace();
    NPoly prod = (hl * y).trace();
    for (const auto& t : T) prod *= tx - NPoly::constant(t);
    return prod;
  });
  PolyhedralSumReport r;
  r.kind = kind;
  r.order = projective_order(kind);
  r.lhs_terms = lhs.size();
  r.reduced = reduce_det_one(lhs);
  r.equal = r.reduced == NPoly::constant(NFElem(f, Rational{static_cast<long>(r.order)}));
  return r;
}

}  // namespace cosetder
