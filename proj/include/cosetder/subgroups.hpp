// Concrete subgroup families of SL2: the binary polyhedral groups over
// number fields, and the split / nonsplit torus normalizers over finite
// fields.
#pragma once

#include <numeric>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosetder/ffield.hpp"
#include "cosetder/mat2.hpp"
#include "cosetder/numfield.hpp"

namespace cosetder {

enum class PolyKind { A4, S4, A5 };

inline const char* to_string(PolyKind k) {
  switch (k) {
    case PolyKind::A4: return "2A4";
    case PolyKind::S4: return "2S4";
    case PolyKind::A5: return "2A5";
  }
  return "?";
}

inline PolyKind parse_poly_kind(const std::string& s) {
  if (s == "2A4" || s == "A4") return PolyKind::A4;
  if (s == "2S4" || s == "S4") return PolyKind::S4;
  if (s == "2A5" || s == "A5") return PolyKind::A5;
  throw std::invalid_argument("unknown polyhedral kind: " + s);
}

inline NFKind field_of(PolyKind k) {
  switch (k) {
    case PolyKind::A4: return NFKind::GaussianI;
    case PolyKind::S4: return NFKind::GaussianRho;
    case PolyKind::A5: return NFKind::GaussianSigma;
  }
  return NFKind::GaussianI;
}

/// |H-bar|, the order of the image in PSL2.
inline unsigned projective_order(PolyKind k) {
  switch (k) {
    case PolyKind::A4: return 12;
    case PolyKind::S4: return 24;
    case PolyKind::A5: return 60;
  }
  return 0;
}

using NMat = Mat2<NFElem>;

/// The quaternion units I, J, K = IJ and W = (-E + I + J + K)/2 over a field.
struct QuaternionUnits {
  NMat E, I, J, K, W;

  explicit QuaternionUnits(NFKind f) {
    const NFElem zero(f), one(f, Rational{1}), i = NFElem::i(f);
    E = NMat::identity(one);
    I = {i, zero, zero, -i};
    J = {zero, one, -one, zero};
    K = I * J;
    W = (-E + I + J + K).scale(NFElem(f, Rational{1, 2}));
  }
};

inline std::vector<NMat> binary_polyhedral_generators(PolyKind kind) {
  const NFKind f = field_of(kind);
  const QuaternionUnits q(f);
  switch (kind) {
    case PolyKind::A4: return {q.I, q.W};
    case PolyKind::S4: {
      const NFElem rho = NFElem::u(f);
      return {(q.J + q.K).scale(rho.inv()), q.W};
    }
    case PolyKind::A5: {
      const NFElem sigma = NFElem::u(f), one(f, Rational{1});
      const NMat x = (q.I + q.J.scale(sigma) + q.K.scale(sigma + one)).scale(NFElem(f, Rational{1, 2}));
      return {x, q.W};
    }
  }
  throw std::logic_error("unreachable");
}

/// 2A4, 2S4 or 2A5 as a subgroup of SL2 over Q(i), Q(i,rho) or Q(i,sigma).
inline GroupSet<NFElem> binary_polyhedral(PolyKind kind) {
  return group_closure(binary_polyhedral_generators(kind));
}

/// {h_r = diag(r, 1/r)} and {h'_r = (0 -r; 1/r 0)} for r in GF(q)^*.
inline GroupSet<FieldElem> split_torus_normalizer(const FieldCtx& F) {
  if (F.q() < 2) throw std::invalid_argument("split torus needs q >= 2");
  std::vector<FMat> out;
  const FieldElem zero = F.zero();
  for (Elem x = 1; x < F.q(); ++x) {
    const FieldElem r = F(x), ri = r.inv();
    out.push_back({r, zero, zero, ri});
    out.push_back({zero, -r, ri, zero});
  }
  return GroupSet<FieldElem>(std::move(out), false);
}

/// {h_r = diag(r, 1/r)} and {h'_r = (0 -1/r; r 0)} for r in the norm-one
/// subgroup N of GF(q^2); every element has the SU2 shape (a b; -b^q a^q).
inline GroupSet<FieldElem> nonsplit_torus_normalizer(const QuadraticExtension& qe) {
  std::vector<FMat> out;
  const FieldCtx& F = *qe.ext;
  const FieldElem zero = F.zero();
  for (const auto& r : norm_one_subgroup(qe)) {
    const FieldElem ri = r.inv();
    out.push_back({r, zero, zero, ri});
    out.push_back({zero, -ri, r, zero});
  }
  return GroupSet<FieldElem>(std::move(out), false);
}

/// (a b; c d) with d = a^q and c = -b^q.
inline bool has_su2_shape(const FMat& m, const QuadraticExtension& qe) {
  return m.d == qe.conj(m.a) && m.c == -qe.conj(m.b);
}

/// Images of i, rho, sigma in a finite field (smallest solutions).
struct Specialization {
  FieldElem i;
  std::optional<FieldElem> u;  // rho or sigma
};

inline std::optional<Specialization> find_specialization(NFKind kind, const FieldCtx& F) {
  auto smallest = [&](auto pred) -> std::optional<FieldElem> {
    for (Elem x = 0; x < F.q(); ++x)
      if (pred(F(x))) return F(x);
    return std::nullopt;
  };
  const FieldElem one = F.one();
  auto i = smallest([&](const FieldElem& x) { return x * x == -one; });
  if (!i) return std::nullopt;
  Specialization s{*i, std::nullopt};
  if (kind == NFKind::GaussianRho) {
    s.u = smallest([&](const FieldElem& x) { return x * x == one + one; });
    if (!s.u) return std::nullopt;
  } else if (kind == NFKind::GaussianSigma) {
    s.u = smallest([&](const FieldElem& x) { return x * x + x == one; });
    if (!s.u) return std::nullopt;
  }
  return s;
}

inline FieldElem specialize(const NFElem& x, const Specialization& s, const FieldCtx& F) {
  const auto& c = x.coords();
  auto r = [&](const Rational& q) { return F.from(static_cast<long long>(q.mod(F.p()))); };
  FieldElem out = r(c[0]) + r(c[1]) * s.i;
  if (s.u) out = out + (r(c[2]) + r(c[3]) * s.i) * *s.u;
  return out;
}

/// Entrywise image of a number-field group in SL2(q), through the ring
/// morphism sending i, rho, sigma to their smallest roots in GF(q).
/// Returns nullopt when a needed root is missing from GF(q).
inline std::optional<GroupSet<FieldElem>> reduce_mod_p(const GroupSet<NFElem>& g, const FieldCtx& F) {
  if (g.size() == 0) throw std::invalid_argument("empty group");
  if (std::gcd<std::size_t, std::size_t>(F.q(), g.size()) != 1)
    throw std::invalid_argument("characteristic divides the group order");
  const auto roots = find_specialization(g[0].a.kind(), F);
  if (!roots) return std::nullopt;
  std::vector<FMat> out;
  for (const auto& m : g)
    out.push_back({specialize(m.a, *roots, F), specialize(m.b, *roots, F), specialize(m.c, *roots, F),
                   specialize(m.d, *roots, F)});
  GroupSet<FieldElem> img(std::move(out), g.projective());
  if (img.size() != g.size()) throw std::logic_error("specialization is not injective");
  return img;
}

}  // namespace cosetder
