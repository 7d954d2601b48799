// Dense univariate polynomials over a FieldCtx.
#pragma once

#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosetder/ffield.hpp"

namespace cosetder {

class FPoly {
 public:
  FPoly() = default;
  /// Coefficients low to high.
  FPoly(const FieldCtx& ctx, std::vector<Elem> coeffs) : ctx_(&ctx), c_(std::move(coeffs)) {
    for (auto x : c_)
      if (!ctx.valid(x)) throw std::invalid_argument("coefficient out of range");
    trim();
  }
  FPoly(const FieldCtx& ctx, const std::vector<FieldElem>& coeffs) : ctx_(&ctx) {
    c_.reserve(coeffs.size());
    for (const auto& x : coeffs) {
      if (x.ctx() != &ctx) throw std::invalid_argument("coefficient from a different field");
      c_.push_back(x.value());
    }
    trim();
  }
  static FPoly from_ints(const FieldCtx& ctx, const std::vector<long long>& coeffs) {
    std::vector<Elem> c;
    for (auto n : coeffs) c.push_back(ctx.from_int(n));
    return {ctx, std::move(c)};
  }

  const FieldCtx& ctx() const { return *ctx_; }
  bool is_zero() const noexcept { return c_.empty(); }
  /// Degree, or -1 for the zero polynomial.
  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  Elem coeff(std::size_t i) const noexcept { return i < c_.size() ? c_[i] : 0; }
  Elem lead() const noexcept { return c_.empty() ? 0 : c_.back(); }
  const std::vector<Elem>& coeffs() const noexcept { return c_; }

  Elem operator()(Elem x) const {
    Elem acc = 0;
    for (std::size_t i = c_.size(); i-- > 0;) acc = ctx_->add(ctx_->mul(acc, x), c_[i]);
    return acc;
  }

  FPoly derivative() const {
    std::vector<Elem> d;
    for (std::size_t i = 1; i < c_.size(); ++i) d.push_back(ctx_->mul(ctx_->from_int(static_cast<long long>(i)), c_[i]));
    return {*ctx_, std::move(d)};
  }

  friend FPoly operator+(const FPoly& f, const FPoly& g) {
    const FieldCtx& F = same(f, g);
    std::vector<Elem> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.add(f.coeff(i), g.coeff(i));
    return {F, std::move(r)};
  }
  friend FPoly operator-(const FPoly& f, const FPoly& g) {
    const FieldCtx& F = same(f, g);
    std::vector<Elem> r(std::max(f.c_.size(), g.c_.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i) r[i] = F.sub(f.coeff(i), g.coeff(i));
    return {F, std::move(r)};
  }
  friend FPoly operator*(const FPoly& f, const FPoly& g) {
    const FieldCtx& F = same(f, g);
    if (f.is_zero() || g.is_zero()) return {F, std::vector<Elem>{}};
    std::vector<Elem> r(f.c_.size() + g.c_.size() - 1, 0);
    for (std::size_t i = 0; i < f.c_.size(); ++i)
      for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] = F.add(r[i + j], F.mul(f.c_[i], g.c_[j]));
    return {F, std::move(r)};
  }
  friend bool operator==(const FPoly& f, const FPoly& g) { return f.ctx_ == g.ctx_ && f.c_ == g.c_; }

  /// Quotient and remainder.
  std::pair<FPoly, FPoly> divmod(const FPoly& g) const {
    const FieldCtx& F = same(*this, g);
    if (g.is_zero()) throw std::domain_error("polynomial division by zero");
    std::vector<Elem> r = c_;
    std::vector<Elem> quo(c_.size() >= g.c_.size() ? c_.size() - g.c_.size() + 1 : 0, 0);
    const Elem lead_inv = F.inv(g.lead());
    while (r.size() >= g.c_.size() && !r.empty()) {
      const Elem factor = F.mul(r.back(), lead_inv);
      const std::size_t shift = r.size() - g.c_.size();
      quo[shift] = factor;
      for (std::size_t i = 0; i < g.c_.size(); ++i) r[shift + i] = F.sub(r[shift + i], F.mul(factor, g.c_[i]));
      while (!r.empty() && r.back() == 0) r.pop_back();
    }
    return {FPoly{F, std::move(quo)}, FPoly{F, std::move(r)}};
  }

  FPoly monic() const {
    if (is_zero()) return *this;
    const Elem li = ctx_->inv(lead());
    std::vector<Elem> r;
    for (auto x : c_) r.push_back(ctx_->mul(x, li));
    return {*ctx_, std::move(r)};
  }

  friend FPoly gcd(FPoly a, FPoly b) {
    same(a, b);
    while (!b.is_zero()) {
      FPoly r = a.divmod(b).second;
      a = std::move(b);
      b = std::move(r);
    }
    return a.monic();
  }

  std::string to_string(const std::string& var = "X") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i] == 0) continue;
      if (!s.empty()) s += " + ";
      const std::string coef = ctx_->to_string(c_[i]);
      const bool paren = coef.find('+') != std::string::npos;
      if (i == 0) {
        s += coef;
        continue;
      }
      if (c_[i] != 1) s += (paren ? "(" + coef + ")" : coef) + "*";
      s += var;
      if (i > 1) s += "^" + std::to_string(i);
    }
    return s;
  }

 private:
  static const FieldCtx& same(const FPoly& f, const FPoly& g) {
    if (!f.ctx_ || f.ctx_ != g.ctx_) throw std::invalid_argument("polynomials over different fields");
    return *f.ctx_;
  }
  void trim() {
    while (!c_.empty() && c_.back() == 0) c_.pop_back();
  }

  const FieldCtx* ctx_ = nullptr;
  std::vector<Elem> c_;
};

/// gcd(f, f') = 1. The zero polynomial is rejected.
inline bool is_separable(const FPoly& f) {
  if (f.is_zero()) throw std::invalid_argument("separability of the zero polynomial");
  if (f.degree() == 0) return true;
  return gcd(f, f.derivative()).degree() == 0;
}

}  // namespace cosetder
