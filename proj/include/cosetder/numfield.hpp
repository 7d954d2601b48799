// The number fields Q(i), Q(i, rho) and Q(i, sigma) as fixed-basis Q-algebras.
//
// An element is A + B*u with A, B in Q(i), stored as the coordinates
// (Re A, Im A, Re B, Im B) in the basis {1, i, u, iu}. The extra generator
// satisfies u^2 = alpha + beta*u:
//   GaussianRho:   u = rho,   rho^2 = 2
//   GaussianSigma: u = sigma, sigma^2 = 1 - sigma
// GaussianI has no u; its last two coordinates stay zero.
#pragma once

#include <array>
#include <compare>
#include <stdexcept>
#include <string>

#include "cosetder/rational.hpp"

namespace cosetder {

enum class NFKind { GaussianI, GaussianRho, GaussianSigma };

inline const char* to_string(NFKind k) {
  switch (k) {
    case NFKind::GaussianI: return "Q(i)";
    case NFKind::GaussianRho: return "Q(i,rho)";
    case NFKind::GaussianSigma: return "Q(i,sigma)";
  }
  return "?";
}

inline int nf_dimension(NFKind k) { return k == NFKind::GaussianI ? 2 : 4; }

class NFElem {
 public:
  NFElem() = default;
  explicit NFElem(NFKind kind) : kind_(kind) {}
  NFElem(NFKind kind, const Rational& r) : kind_(kind) { c_[0] = r; }
  NFElem(NFKind kind, std::array<Rational, 4> coords) : kind_(kind), c_(std::move(coords)) {
    if (kind == NFKind::GaussianI && !(c_[2].is_zero() && c_[3].is_zero()))
      throw std::invalid_argument("Q(i) element with a nonzero u-coordinate");
  }

  static NFElem i(NFKind kind) { return NFElem(kind, {Rational{0}, Rational{1}, Rational{0}, Rational{0}}); }
  /// rho or sigma, depending on the field.
  static NFElem u(NFKind kind) {
    if (kind == NFKind::GaussianI) throw std::invalid_argument("Q(i) has no second generator");
    return NFElem(kind, {Rational{0}, Rational{0}, Rational{1}, Rational{0}});
  }

  NFKind kind() const noexcept { return kind_; }
  const std::array<Rational, 4>& coords() const noexcept { return c_; }
  const Rational& coord(int j) const { return c_.at(j); }

  bool is_zero() const { return c_[0].is_zero() && c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }
  bool is_rational() const { return c_[1].is_zero() && c_[2].is_zero() && c_[3].is_zero(); }

  friend NFElem operator+(const NFElem& a, const NFElem& b) {
    const NFKind k = same(a, b);
    return NFElem(k, {a.c_[0] + b.c_[0], a.c_[1] + b.c_[1], a.c_[2] + b.c_[2], a.c_[3] + b.c_[3]});
  }
  friend NFElem operator-(const NFElem& a, const NFElem& b) {
    const NFKind k = same(a, b);
    return NFElem(k, {a.c_[0] - b.c_[0], a.c_[1] - b.c_[1], a.c_[2] - b.c_[2], a.c_[3] - b.c_[3]});
  }
  NFElem operator-() const { return NFElem(kind_, {-c_[0], -c_[1], -c_[2], -c_[3]}); }

  friend NFElem operator*(const NFElem& a, const NFElem& b) {
    const NFKind k = same(a, b);
    const Gauss A{a.c_[0], a.c_[1]}, B{a.c_[2], a.c_[3]};
    const Gauss C{b.c_[0], b.c_[1]}, D{b.c_[2], b.c_[3]};
    if (k == NFKind::GaussianI) {
      const Gauss r = A * C;
      return NFElem(k, {r.re, r.im, Rational{0}, Rational{0}});
    }
    const auto [alpha, beta] = relation(k);
    const Gauss bd = B * D;
    const Gauss lo = A * C + bd.scale(alpha);
    Gauss hi = A * D + B * C;
    if (!beta.is_zero()) hi = hi + bd.scale(beta);
    return NFElem(k, {lo.re, lo.im, hi.re, hi.im});
  }

  NFElem& operator+=(const NFElem& b) {
    const NFKind k = same(*this, b);
    (void)k;
    for (int j = 0; j < 4; ++j) c_[j] += b.c_[j];
    return *this;
  }
  NFElem& operator-=(const NFElem& b) {
    same(*this, b);
    for (int j = 0; j < 4; ++j) c_[j] -= b.c_[j];
    return *this;
  }
  NFElem& operator*=(const NFElem& b) { return *this = *this * b; }

  /// Multiplicative inverse via the norm down to Q(i), then to Q.
  NFElem inv() const {
    if (is_zero()) throw std::domain_error("number-field division by zero");
    const Gauss A{c_[0], c_[1]}, B{c_[2], c_[3]};
    if (kind_ == NFKind::GaussianI) {
      const Gauss r = A.inv();
      return NFElem(kind_, {r.re, r.im, Rational{0}, Rational{0}});
    }
    // (A + Bu)(A + B u') with u' = beta - u the conjugate root
    const auto [alpha, beta] = relation(kind_);
    const Gauss conj_lo = A + B.scale(beta);
    const Gauss conj_hi = -B;
    const Gauss n = A * A + (A * B).scale(beta) - (B * B).scale(alpha);
    const Gauss ni = n.inv();
    const Gauss lo = conj_lo * ni, hi = conj_hi * ni;
    return NFElem(kind_, {lo.re, lo.im, hi.re, hi.im});
  }
  friend NFElem operator/(const NFElem& a, const NFElem& b) {
    same(a, b);
    return a * b.inv();
  }

  friend bool operator==(const NFElem& a, const NFElem& b) { return a.kind_ == b.kind_ && a.c_ == b.c_; }
  /// Lexicographic on coordinates; only meaningful within one field.
  friend std::strong_ordering operator<=>(const NFElem& a, const NFElem& b) {
    for (int j = 0; j < 4; ++j)
      if (auto c = a.c_[j] <=> b.c_[j]; c != 0) return c;
    return std::strong_ordering::equal;
  }

  /// All coordinate denominators are powers of two.
  bool dyadic() const {
    for (const auto& r : c_)
      if (!r.den_is_power_of_two()) return false;
    return true;
  }

  std::string to_string() const {
    static const char* basis[4] = {"", "i", nullptr, nullptr};
    const char* u = kind_ == NFKind::GaussianSigma ? "sigma" : "rho";
    std::string s;
    for (int j = 0; j < 4; ++j) {
      if (c_[j].is_zero()) continue;
      std::string b = j < 2 ? basis[j] : (j == 2 ? std::string(u) : std::string("i*") + u);
      std::string term = c_[j].to_string();
      if (!b.empty()) term = (c_[j].is_one() ? "" : (c_[j] == Rational{-1} ? "-" : term + "*")) + b;
      if (!s.empty() && term[0] != '-') s += "+";
      s += term;
    }
    return s.empty() ? "0" : s;
  }

 private:
  struct Gauss {
    Rational re, im;
    friend Gauss operator+(const Gauss& x, const Gauss& y) { return {x.re + y.re, x.im + y.im}; }
    friend Gauss operator-(const Gauss& x, const Gauss& y) { return {x.re - y.re, x.im - y.im}; }
    Gauss operator-() const { return {-re, -im}; }
    friend Gauss operator*(const Gauss& x, const Gauss& y) {
      return {x.re * y.re - x.im * y.im, x.re * y.im + x.im * y.re};
    }
    Gauss scale(const Rational& r) const { return {re * r, im * r}; }
    Gauss inv() const {
      const Rational n = re * re + im * im;
      return {re / n, -im / n};
    }
  };

  struct Relation {
    Rational alpha, beta;
  };
  static Relation relation(NFKind k) {
    if (k == NFKind::GaussianRho) return {Rational{2}, Rational{0}};
    return {Rational{1}, Rational{-1}};
  }

  static NFKind same(const NFElem& a, const NFElem& b) {
    if (a.kind_ != b.kind_) throw std::invalid_argument("number-field elements from different fields");
    return a.kind_;
  }

  NFKind kind_ = NFKind::GaussianI;
  std::array<Rational, 4> c_{};
};

inline NFElem zero_like(const NFElem& x) { return NFElem(x.kind()); }
inline NFElem one_like(const NFElem& x) { return NFElem(x.kind(), Rational{1}); }
inline NFElem int_like(const NFElem& x, long n) { return NFElem(x.kind(), Rational{n}); }

}  // namespace cosetder
