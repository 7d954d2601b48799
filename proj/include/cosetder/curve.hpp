// Quartic curves Y^2 = f(X) in odd characteristic: normalization to
// Y^2 = (X^2+c)^2 + bX - a, the maps to and from V^2 = U^3 - 4cU^2 + 4aU + b^2,
// brute-force point counts and the affine Hasse-type bound.
#pragma once

#include <algorithm>
#include <array>
#include <compare>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosetder/ffield.hpp"
#include "cosetder/fpoly.hpp"
#include "cosetder/mpoly.hpp"
#include "cosetder/rational.hpp"

namespace cosetder {

inline void require_odd(const FieldCtx& F) {
  if (F.p() == 2) throw std::invalid_argument("curve operations need odd characteristic");
}

struct AffinePoint {
  Elem x = 0, y = 0;
  friend auto operator<=>(const AffinePoint&, const AffinePoint&) = default;
};

/// Square roots of every element, precomputed once per field.
class SquareRoots {
 public:
  explicit SquareRoots(const FieldCtx& F) : roots_(F.q()) {
    for (Elem y = 0; y < F.q(); ++y) roots_[F.mul(y, y)].push_back(y);
  }
  const std::vector<Elem>& of(Elem v) const { return roots_[v]; }
  std::size_t count(Elem v) const { return roots_[v].size(); }

 private:
  std::vector<std::vector<Elem>> roots_;
};

/// #{(x, y) in GF(q)^2 : y^2 = f(x)}.
inline std::size_t count_affine_points(const FPoly& f, const SquareRoots& sq) {
  require_odd(f.ctx());
  std::size_t n = 0;
  for (Elem x = 0; x < f.ctx().q(); ++x) n += sq.count(f(x));
  return n;
}

inline std::size_t count_affine_points(const FPoly& f) { return count_affine_points(f, SquareRoots(f.ctx())); }

inline std::vector<AffinePoint> affine_points(const FPoly& f, const SquareRoots& sq) {
  std::vector<AffinePoint> pts;
  for (Elem x = 0; x < f.ctx().q(); ++x)
    for (Elem y : sq.of(f(x))) pts.push_back({x, y});
  std::sort(pts.begin(), pts.end());
  return pts;
}

/// f(X + s).
inline FPoly shift_x(const FPoly& f, Elem s) {
  const FieldCtx& F = f.ctx();
  const FPoly lin(F, std::vector<Elem>{s, 1});
  FPoly r(F, std::vector<Elem>{});
  for (int i = f.degree(); i >= 0; --i) r = r * lin + FPoly(F, std::vector<Elem>{f.coeff(i)});
  return r;
}

/// Y^2 = a0 + a1 X + ... + a4 X^4 with a4 != 0.
struct QuarticCurve {
  FPoly f;

  explicit QuarticCurve(FPoly poly) : f(std::move(poly)) {
    require_odd(f.ctx());
    if (f.degree() != 4) throw std::invalid_argument("quartic curve needs a degree-4 polynomial");
  }
  const FieldCtx& ctx() const { return f.ctx(); }
  Elem coeff(int i) const { return f.coeff(i); }
};

/// Y^2 = (X^2 + c)^2 + bX - a.
struct ReducedQuartic {
  const FieldCtx* F = nullptr;
  Elem a = 0, b = 0, c = 0;

  FPoly f() const {
    // X^4 + 2c X^2 + b X + (c^2 - a)
    return FPoly(*F, std::vector<Elem>{F->sub(F->mul(c, c), a), b, F->add(c, c), 0, 1});
  }
  friend bool operator==(const ReducedQuartic& x, const ReducedQuartic& y) {
    return x.F == y.F && x.a == y.a && x.b == y.b && x.c == y.c;
  }
};

/// V^2 = U^3 - 4c U^2 + 4a U + b^2.
struct WeierstrassCubic {
  const FieldCtx* F = nullptr;
  Elem a = 0, b = 0, c = 0;

  explicit WeierstrassCubic(const ReducedQuartic& r) : F(r.F), a(r.a), b(r.b), c(r.c) {}
  FPoly g() const {
    const Elem four = F->from_int(4);
    return FPoly(*F, std::vector<Elem>{F->mul(b, b), F->mul(four, a), F->neg(F->mul(four, c)), 1});
  }
};

enum class StepKind { ShiftX, Invert, ScaleY, ShiftX2 };

inline const char* to_string(StepKind k) {
  switch (k) {
    case StepKind::ShiftX: return "shift-x";
    case StepKind::Invert: return "invert";
    case StepKind::ScaleY: return "scale-y";
    case StepKind::ShiftX2: return "shift-x-2";
  }
  return "?";
}

struct TransformStep {
  StepKind kind;
  Elem param;  // shift amount, or the scale factor alpha with a4 = alpha^2
  int delta;   // change in the affine point count
};

struct TransformLog {
  std::vector<TransformStep> steps;
  int total_delta() const {
    int d = 0;
    for (const auto& s : steps) d += s.delta;
    return d;
  }
};

/// Brings a separable quartic to the reduced shape. A point with y != 0
/// is needed unless a4 is already a square; without `point`, the first one
/// in x order is used. Returns nullopt if no such point exists and a4 is a
/// non-square.
inline std::optional<std::pair<ReducedQuartic, TransformLog>> reduce_quartic(
    const QuarticCurve& curve, std::optional<AffinePoint> point = std::nullopt) {
  const FieldCtx& F = curve.ctx();
  if (!is_separable(curve.f)) throw std::invalid_argument("reduce_quartic: inseparable polynomial");
  FPoly f = curve.f;
  TransformLog log;
  const SquareRoots sq(F);

  if (point) {
    if (F.mul(point->y, point->y) != f(point->x)) throw std::invalid_argument("reduce_quartic: point not on curve");
    if (point->y == 0) throw std::invalid_argument("reduce_quartic: point must have y != 0");
  } else if (!F.is_square(f.lead())) {
    for (Elem x = 0; x < F.q() && !point; ++x) {
      const Elem v = f(x);
      if (v != 0 && F.is_square(v)) point = AffinePoint{x, *F.sqrt(v)};
    }
    if (!point) return std::nullopt;
  }

  if (point) {
    f = shift_x(f, point->x);
    log.steps.push_back({StepKind::ShiftX, point->x, 0});
    // X -> 1/X, Y -> Y/X^2 reverses the coefficients; points over X = 0 are
    // swapped for points over X = 0 of the new curve
    const int before = static_cast<int>(sq.count(f.coeff(0)));
    std::vector<Elem> rev(5);
    for (int i = 0; i <= 4; ++i) rev[4 - i] = f.coeff(i);
    f = FPoly(F, std::move(rev));
    const int after = static_cast<int>(sq.count(f.coeff(0)));
    log.steps.push_back({StepKind::Invert, 0, after - before});
  }

  const Elem alpha = *F.sqrt(f.lead());
  f = FPoly(F, [&] {
    std::vector<Elem> c;
    const Elem inv = F.inv(f.lead());
    for (int i = 0; i <= 4; ++i) c.push_back(F.mul(f.coeff(i), inv));
    return c;
  }());
  log.steps.push_back({StepKind::ScaleY, alpha, 0});

  const Elem s = F.neg(F.div(f.coeff(3), F.from_int(4)));
  f = shift_x(f, s);
  log.steps.push_back({StepKind::ShiftX2, s, 0});

  const Elem a2 = f.coeff(2), a1 = f.coeff(1), a0 = f.coeff(0);
  ReducedQuartic r{&F, F.sub(F.div(F.mul(a2, a2), F.from_int(4)), a0), a1, F.div(a2, F.from_int(2))};
  if (r.f() != f) throw std::logic_error("reduce_quartic: normal form mismatch");
  return std::make_pair(r, log);
}

inline bool on_curve(const FPoly& f, const AffinePoint& p) {
  return f.ctx().mul(p.y, p.y) == f(p.x);
}

/// (x, y) -> (u, v) = (2(x^2 + y + c), 2xu + b).
inline AffinePoint phi(const ReducedQuartic& r, const AffinePoint& p) {
  const FieldCtx& F = *r.F;
  if (!on_curve(r.f(), p)) throw std::invalid_argument("phi: point not on C");
  const Elem two = F.from_int(2);
  const Elem u = F.mul(two, F.add(F.add(F.mul(p.x, p.x), p.y), r.c));
  const Elem v = F.add(F.mul(F.mul(two, p.x), u), r.b);
  return {u, v};
}

/// (u, v) -> ((v - b)/(2u), -x^2 + (u - 2c)/2).
inline AffinePoint psi(const ReducedQuartic& r, const AffinePoint& p) {
  const FieldCtx& F = *r.F;
  if (!on_curve(WeierstrassCubic(r).g(), p)) throw std::invalid_argument("psi: point not on E");
  if (p.x == 0) throw std::domain_error("psi: u = 0");
  const Elem two = F.from_int(2);
  const Elem x = F.div(F.sub(p.y, r.b), F.mul(two, p.x));
  const Elem y = F.add(F.neg(F.mul(x, x)), F.div(F.sub(p.x, F.mul(two, r.c)), two));
  return {x, y};
}

struct CorrespondenceReport {
  std::uint32_t q = 0;
  Elem a = 0, b = 0, c = 0;
  bool f_separable = false, g_separable = false;
  std::size_t count_c = 0, count_e = 0;
  bool count_ok = false;      // |C| = |E| - 1
  bool bijection_ok = false;  // phi and psi mutually inverse on the stated domains
  bool pass() const { return f_separable && g_separable && count_ok && bijection_ok; }
};

/// Brute-force counts of both curves plus a point-by-point check of the
/// bijection C minus exclusions -> E minus exclusions.
inline CorrespondenceReport verify_correspondence(const ReducedQuartic& r, const SquareRoots& sq) {
  const FieldCtx& F = *r.F;
  require_odd(F);
  CorrespondenceReport rep;
  rep.q = F.q();
  rep.a = r.a;
  rep.b = r.b;
  rep.c = r.c;
  const FPoly f = r.f(), g = WeierstrassCubic(r).g();
  rep.f_separable = is_separable(f);
  rep.g_separable = is_separable(g);
  const auto cpts = affine_points(f, sq), epts = affine_points(g, sq);
  rep.count_c = cpts.size();
  rep.count_e = epts.size();
  rep.count_ok = rep.count_c + 1 == rep.count_e;

  std::vector<AffinePoint> excl_c, excl_e;
  if (r.b == 0) {
    excl_e = {{0, 0}};
  } else {
    const Elem x0 = F.div(r.a, r.b), y0 = F.add(r.c, F.mul(x0, x0));
    excl_c = {{x0, F.neg(y0)}};
    excl_e = {{0, r.b}, {0, F.neg(r.b)}};
    // (x0, +-y0) on C
    if (!on_curve(f, {x0, y0}) || !on_curve(f, excl_c[0])) return rep;
  }
  for (const auto& p : excl_e)
    if (!on_curve(g, p)) return rep;
  auto excluded = [](const std::vector<AffinePoint>& s, const AffinePoint& p) {
    return std::find(s.begin(), s.end(), p) != s.end();
  };

  std::vector<AffinePoint> image;
  for (const auto& p : cpts) {
    if (excluded(excl_c, p)) continue;
    const AffinePoint e = phi(r, p);
    if (!on_curve(g, e) || excluded(excl_e, e)) return rep;
    if (psi(r, e) != p) return rep;
    image.push_back(e);
  }
  std::sort(image.begin(), image.end());
  if (std::adjacent_find(image.begin(), image.end()) != image.end()) return rep;
  std::vector<AffinePoint> target;
  for (const auto& e : epts)
    if (!excluded(excl_e, e)) target.push_back(e);
  if (image != target) return rep;
  for (const auto& e : target) {
    const AffinePoint p = psi(r, e);
    if (!on_curve(f, p) || phi(r, p) != e) return rep;
  }
  rep.bijection_ok = true;
  return rep;
}

inline CorrespondenceReport verify_correspondence(const ReducedQuartic& r) {
  return verify_correspondence(r, SquareRoots(*r.F));
}

/// All (a, b, c) with f separable, in lexicographic order.
inline std::vector<ReducedQuartic> separable_reduced_quartics(const FieldCtx& F) {
  std::vector<ReducedQuartic> out;
  for (Elem a = 0; a < F.q(); ++a)
    for (Elem b = 0; b < F.q(); ++b)
      for (Elem c = 0; c < F.q(); ++c) {
        ReducedQuartic r{&F, a, b, c};
        if (is_separable(r.f())) out.push_back(r);
      }
  return out;
}

struct HasseReport {
  std::uint32_t q = 0;
  int degree = 0;
  std::size_t count = 0;
  bool within_bound = false;    // count <= q + 1 + 2 sqrt(q)
  bool within_cubic = false;    // count <= q + 2 sqrt(q)
  bool pass() const { return within_bound && (degree != 3 || within_cubic); }
};

/// n <= q + k + 2 sqrt(q), decided by squaring.
inline bool below_sqrt_bound(std::size_t n, std::uint64_t q, std::uint64_t k) {
  if (n <= q + k) return true;
  const std::uint64_t d = n - q - k;
  return d * d <= 4 * q;
}

/// Affine count of Y^2 = f(X) against q + 1 + 2 sqrt(q), and against the
/// cubic bound q + 2 sqrt(q) when deg f = 3.
inline HasseReport hasse_check(const FPoly& f, const SquareRoots& sq) {
  require_odd(f.ctx());
  if (f.degree() < 1 || f.degree() > 4) throw std::invalid_argument("hasse_check: degree must be 1..4");
  if (!is_separable(f)) throw std::invalid_argument("hasse_check: inseparable polynomial");
  HasseReport rep;
  rep.q = f.ctx().q();
  rep.degree = f.degree();
  rep.count = count_affine_points(f, sq);
  rep.within_bound = below_sqrt_bound(rep.count, rep.q, 1);
  rep.within_cubic = below_sqrt_bound(rep.count, rep.q, 0);
  return rep;
}

inline HasseReport hasse_check(const FPoly& f) { return hasse_check(f, SquareRoots(f.ctx())); }

// Symbolic side: disc_X(f) = disc_U(g) over Q[a, b, c].

struct DiscIdentity {
  MPoly<Rational> disc_f, disc_g;
  bool equal() const { return mpoly_equal(disc_f, disc_g); }
};

inline DiscIdentity curve_discriminant_identity() {
  using P = MPoly<Rational>;
  const Rational one{1};
  enum { X = 0, A = 1, B = 2, C = 3 };
  const P x = P::var(X, one), a = P::var(A, one), b = P::var(B, one), c = P::var(C, one);
  const P x2c = x * x + c;
  const P f = x2c * x2c + b * x - a;
  const P g = x.pow(3, one) - (c * x * x).scale(Rational{4}) + (a * x).scale(Rational{4}) + b * b;
  return {discriminant(f, X, one), discriminant(g, X, one)};
}

}  // namespace cosetder
