// Finite fields GF(p^k) in polynomial-basis representation.
//
// Elements are encoded as integers: the coefficient of t^i is the i-th
// base-p digit. That encoding is also the canonical element order, used
// for deterministic choices (square roots, generators, representatives).
//
// Multiplication goes through discrete log / exp tables built once per
// context, so a FieldCtx is immutable after construction and can be shared
// freely between threads.
#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

namespace cosetder {

using Elem = std::uint32_t;

/// Largest field order a context will accept (tables are O(q)).
inline constexpr std::uint64_t kMaxFieldOrder = std::uint64_t{1} << 22;

namespace detail {

inline bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

/// Dense polynomial over GF(p), coefficients low to high, no trailing zeros.
using ZpPoly = std::vector<std::uint64_t>;

inline void zp_trim(ZpPoly& f) {
  while (!f.empty() && f.back() == 0) f.pop_back();
}

inline std::uint64_t zp_inv(std::uint64_t a, std::uint64_t p) {
  // p is prime: a^(p-2)
  std::uint64_t r = 1, e = p - 2;
  a %= p;
  while (e) {
    if (e & 1) r = r * a % p;
    a = a * a % p;
    e >>= 1;
  }
  return r;
}

inline ZpPoly zp_mod(ZpPoly f, const ZpPoly& g, std::uint64_t p) {
  zp_trim(f);
  const std::size_t dg = g.size() - 1;
  const std::uint64_t lead_inv = zp_inv(g.back(), p);
  while (f.size() >= g.size()) {
    const std::uint64_t factor = f.back() * lead_inv % p;
    const std::size_t shift = f.size() - g.size();
    for (std::size_t i = 0; i <= dg; ++i)
      f[shift + i] = (f[shift + i] + (p - factor) * g[i]) % p;
    zp_trim(f);
  }
  return f;
}

inline ZpPoly zp_mulmod(const ZpPoly& a, const ZpPoly& b, const ZpPoly& m,
                        std::uint64_t p) {
  if (a.empty() || b.empty()) return {};
  ZpPoly r(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j)
      r[i + j] = (r[i + j] + a[i] * b[j]) % p;
  return zp_mod(std::move(r), m, p);
}

inline ZpPoly zp_gcd(ZpPoly a, ZpPoly b, std::uint64_t p) {
  zp_trim(a);
  zp_trim(b);
  while (!b.empty()) {
    ZpPoly r = zp_mod(a, b, p);
    a = std::move(b);
    b = std::move(r);
  }
  return a;
}

/// x^(p^e) mod m by repeated p-th powering.
inline ZpPoly zp_frobenius_power(const ZpPoly& m, std::uint64_t p, unsigned e) {
  ZpPoly x = zp_mod(ZpPoly{0, 1}, m, p);
  for (unsigned round = 0; round < e; ++round) {
    ZpPoly base = x, acc{1};
    std::uint64_t n = p;
    while (n) {
      if (n & 1) acc = zp_mulmod(acc, base, m, p);
      base = zp_mulmod(base, base, m, p);
      n >>= 1;
    }
    x = std::move(acc);
  }
  return x;
}

/// Rabin's irreducibility test for a monic polynomial of degree k.
inline bool zp_is_irreducible(const ZpPoly& m, std::uint64_t p) {
  const unsigned k = static_cast<unsigned>(m.size() - 1);
  if (k == 1) return true;
  auto x_pow_minus_x = [&](unsigned e) {
    ZpPoly f = zp_frobenius_power(m, p, e);
    if (f.size() < 2) f.resize(2, 0);
    f[1] = (f[1] + p - 1) % p;
    zp_trim(f);
    return f;
  };
  if (!x_pow_minus_x(k).empty()) return false;
  for (unsigned l = 2; l <= k; ++l) {
    if (k % l != 0 || !is_prime(l)) continue;
    ZpPoly g = zp_gcd(m, x_pow_minus_x(k / l), p);
    if (g.size() != 1) return false;
  }
  return true;
}

}  // namespace detail

class FieldElem;

class FieldCtx {
  struct Token {};

 public:
  /// GF(p^k) with the lexicographically least monic irreducible modulus.
  static std::shared_ptr<const FieldCtx> make(std::uint64_t p, unsigned k) {
    check_params(p, k);
    if (k == 1) return std::make_shared<const FieldCtx>(Token{}, p, std::vector<std::uint32_t>{0, 1});
    std::uint64_t q = ipow(p, k);
    for (std::uint64_t code = 0; code < q; ++code) {
      detail::ZpPoly m(k + 1, 0);
      std::uint64_t c = code;
      for (unsigned i = 0; i < k; ++i, c /= p) m[i] = c % p;
      m[k] = 1;
      if (detail::zp_is_irreducible(m, p))
        return std::make_shared<const FieldCtx>(Token{}, p, std::vector<std::uint32_t>(m.begin(), m.end()));
    }
    throw std::logic_error("no irreducible polynomial found");
  }

  /// GF(p^k) with a caller-chosen monic modulus (coefficients low to high).
  static std::shared_ptr<const FieldCtx> make(std::uint64_t p, std::vector<std::uint32_t> modulus) {
    if (modulus.size() < 2 || modulus.back() != 1)
      throw std::invalid_argument("modulus must be monic of degree >= 1");
    const unsigned k = static_cast<unsigned>(modulus.size() - 1);
    check_params(p, k);
    detail::ZpPoly m(modulus.begin(), modulus.end());
    for (auto c : m)
      if (c >= p) throw std::invalid_argument("modulus coefficient out of range");
    if (!detail::zp_is_irreducible(m, p)) throw std::invalid_argument("modulus is reducible");
    return std::make_shared<const FieldCtx>(Token{}, p, std::move(modulus));
  }

  FieldCtx(Token, std::uint64_t p, std::vector<std::uint32_t> modulus)
      : p_(static_cast<std::uint32_t>(p)),
        k_(static_cast<unsigned>(modulus.size() - 1)),
        q_(static_cast<std::uint32_t>(ipow(p, k_))),
        modulus_(std::move(modulus)) {
    build_tables();
  }

  FieldCtx(const FieldCtx&) = delete;
  FieldCtx& operator=(const FieldCtx&) = delete;

  std::uint32_t p() const noexcept { return p_; }
  unsigned k() const noexcept { return k_; }
  std::uint32_t q() const noexcept { return q_; }
  const std::vector<std::uint32_t>& modulus() const noexcept { return modulus_; }
  bool is_prime_field() const noexcept { return k_ == 1; }

  // Raw arithmetic on encoded elements.

  Elem add(Elem x, Elem y) const {
    if (p_ == 2) return x ^ y;
    if (k_ == 1) {
      const std::uint32_t s = x + y;
      return s >= p_ ? s - p_ : s;
    }
    return add_generic(x, y);
  }

  /// Digit-wise addition; the fast paths in add() must agree with it.
  Elem add_generic(Elem x, Elem y) const {
    Elem r = 0, place = 1;
    for (unsigned i = 0; i < k_; ++i) {
      const Elem d = (x % p_ + y % p_) % p_;
      r += d * place;
      place *= p_;
      x /= p_;
      y /= p_;
    }
    return r;
  }

  Elem neg(Elem x) const { return neg_[x]; }
  Elem sub(Elem x, Elem y) const { return add(x, neg_[y]); }

  Elem mul(Elem x, Elem y) const {
    if (x == 0 || y == 0) return 0;
    std::uint32_t e = log_[x] + log_[y];
    if (e >= q_ - 1) e -= q_ - 1;
    return exp_[e];
  }

  Elem inv(Elem x) const {
    if (x == 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
    return exp_[log_[x] == 0 ? 0 : q_ - 1 - log_[x]];
  }

  Elem div(Elem x, Elem y) const { return mul(x, inv(y)); }

  Elem pow(Elem x, long long n) const {
    if (x == 0) {
      if (n < 0) throw std::domain_error("division by zero in GF(" + std::to_string(q_) + ")");
      return n == 0 ? 1 : 0;
    }
    const long long order = q_ - 1;
    long long e = (static_cast<long long>(log_[x]) * (n % order)) % order;
    if (e < 0) e += order;
    return exp_[static_cast<std::size_t>(e)];
  }

  /// Image of an integer in the prime subfield.
  Elem from_int(long long n) const {
    long long r = n % static_cast<long long>(p_);
    return static_cast<Elem>(r < 0 ? r + p_ : r);
  }

  Elem from_coeffs(const std::vector<std::uint32_t>& c) const {
    if (c.size() > k_) throw std::invalid_argument("too many coefficients");
    Elem r = 0, place = 1;
    for (auto d : c) {
      if (d >= p_) throw std::invalid_argument("coefficient out of range");
      r += d * place;
      place *= p_;
    }
    return r;
  }

  std::vector<std::uint32_t> coeffs(Elem x) const {
    std::vector<std::uint32_t> c(k_);
    for (unsigned i = 0; i < k_; ++i, x /= p_) c[i] = x % p_;
    return c;
  }

  bool is_square(Elem x) const {
    if (x == 0 || p_ == 2) return true;
    return log_[x] % 2 == 0;
  }

  /// Smallest y (canonical order) with y^2 = x.
  std::optional<Elem> sqrt(Elem x) const {
    if (x == 0) return Elem{0};
    if (p_ == 2) return pow(x, static_cast<long long>(q_ / 2));
    if (log_[x] % 2 != 0) return std::nullopt;
    const Elem y = exp_[log_[x] / 2];
    return std::min(y, neg_[y]);
  }

  /// Smallest primitive element; exp/log tables are relative to it.
  Elem generator() const noexcept { return exp_[q_ > 2 ? 1 : 0]; }
  std::uint32_t log(Elem x) const {
    if (x == 0) throw std::domain_error("log of zero");
    return log_[x];
  }
  Elem exp(std::uint64_t e) const { return exp_[e % (q_ - 1)]; }

  bool valid(Elem x) const noexcept { return x < q_; }

  FieldElem operator()(Elem x) const;
  FieldElem from(long long n) const;
  FieldElem zero() const;
  FieldElem one() const;
  std::vector<FieldElem> elements() const;

  std::string to_string(Elem x) const {
    if (k_ == 1) return std::to_string(x);
    const auto c = coeffs(x);
    std::string s;
    for (unsigned i = 0; i < k_; ++i) {
      if (c[i] == 0) continue;
      if (!s.empty()) s += "+";
      if (i == 0) {
        s += std::to_string(c[i]);
        continue;
      }
      if (c[i] != 1) s += std::to_string(c[i]) + "*";
      s += i == 1 ? "t" : "t^" + std::to_string(i);
    }
    return s.empty() ? "0" : s;
  }

 private:
  static std::uint64_t ipow(std::uint64_t p, unsigned k) {
    std::uint64_t q = 1;
    for (unsigned i = 0; i < k; ++i) {
      if (q > kMaxFieldOrder / p) throw std::overflow_error("field order exceeds supported width");
      q *= p;
    }
    return q;
  }

  static void check_params(std::uint64_t p, unsigned k) {
    if (!detail::is_prime(p)) throw std::invalid_argument("characteristic " + std::to_string(p) + " is not prime");
    if (k == 0) throw std::invalid_argument("extension degree must be >= 1");
    ipow(p, k);
  }

  Elem mul_slow(Elem x, Elem y) const {
    if (k_ == 1) return static_cast<Elem>(std::uint64_t{x} * y % p_);
    detail::ZpPoly a(k_), b(k_), m(modulus_.begin(), modulus_.end());
    for (unsigned i = 0; i < k_; ++i, x /= p_, y /= p_) {
      a[i] = x % p_;
      b[i] = y % p_;
    }
    detail::zp_trim(a);
    detail::zp_trim(b);
    const auto r = detail::zp_mulmod(a, b, m, p_);
    Elem out = 0, place = 1;
    for (std::size_t i = 0; i < r.size(); ++i, place *= p_) out += static_cast<Elem>(r[i]) * place;
    return out;
  }

  void build_tables() {
    neg_.resize(q_);
    for (Elem x = 0; x < q_; ++x) {
      Elem r = 0, place = 1, t = x;
      for (unsigned i = 0; i < k_; ++i, t /= p_, place *= p_) r += ((p_ - t % p_) % p_) * place;
      neg_[x] = r;
    }
    exp_.assign(q_ - 1, 0);
    log_.assign(q_, 0);
    if (q_ == 2) {
      exp_[0] = 1;
      return;
    }
    for (Elem g = 2; g < q_; ++g) {
      Elem x = 1;
      std::uint32_t n = 0;
      do {
        exp_[n++] = x;
        x = mul_slow(x, g);
      } while (x != 1 && n < q_ - 1);
      if (x == 1 && n == q_ - 1) {
        for (std::uint32_t i = 0; i < n; ++i) log_[exp_[i]] = i;
        return;
      }
    }
    throw std::logic_error("no primitive element found");
  }

  std::uint32_t p_;
  unsigned k_;
  std::uint32_t q_;
  std::vector<std::uint32_t> modulus_;
  std::vector<Elem> exp_;
  std::vector<std::uint32_t> log_;
  std::vector<Elem> neg_;
};

using FieldPtr = std::shared_ptr<const FieldCtx>;

inline FieldPtr make_field(std::uint64_t p, unsigned k) { return FieldCtx::make(p, k); }

struct PrimePower {
  std::uint64_t p;
  unsigned k;
};

/// q = p^k with p prime, or nullopt.
inline std::optional<PrimePower> as_prime_power(std::uint64_t q) {
  if (q < 2) return std::nullopt;
  std::uint64_t p = 2;
  while (p * p <= q && q % p) ++p;
  if (q % p) p = q;
  unsigned k = 0;
  while (q % p == 0) q /= p, ++k;
  if (q != 1) return std::nullopt;
  return PrimePower{p, k};
}

inline bool is_prime_power(std::uint64_t q) { return as_prime_power(q).has_value(); }

/// GF(q) for a prime power q.
inline FieldPtr field_of_order(std::uint64_t q) {
  const auto pp = as_prime_power(q);
  if (!pp) throw std::invalid_argument(std::to_string(q) + " is not a prime power");
  return make_field(pp->p, pp->k);
}

/// Field element bound to its context. The context must outlive the element.
class FieldElem {
 public:
  FieldElem() = default;
  FieldElem(const FieldCtx* ctx, Elem v) : ctx_(ctx), v_(v) {
    if (ctx_ && !ctx_->valid(v_)) throw std::invalid_argument("element out of range");
  }

  const FieldCtx* ctx() const noexcept { return ctx_; }
  Elem value() const noexcept { return v_; }
  bool is_zero() const noexcept { return v_ == 0; }
  bool is_one() const noexcept { return v_ == 1; }

  friend FieldElem operator+(const FieldElem& x, const FieldElem& y) {
    return {same(x, y), x.ctx_->add(x.v_, y.v_)};
  }
  friend FieldElem operator-(const FieldElem& x, const FieldElem& y) {
    return {same(x, y), x.ctx_->sub(x.v_, y.v_)};
  }
  friend FieldElem operator*(const FieldElem& x, const FieldElem& y) {
    return {same(x, y), x.ctx_->mul(x.v_, y.v_)};
  }
  friend FieldElem operator/(const FieldElem& x, const FieldElem& y) {
    return {same(x, y), x.ctx_->div(x.v_, y.v_)};
  }
  FieldElem operator-() const { return {checked(), ctx_->neg(v_)}; }
  FieldElem& operator+=(const FieldElem& y) { return *this = *this + y; }
  FieldElem& operator-=(const FieldElem& y) { return *this = *this - y; }
  FieldElem& operator*=(const FieldElem& y) { return *this = *this * y; }
  FieldElem& operator/=(const FieldElem& y) { return *this = *this / y; }

  FieldElem inv() const { return {checked(), ctx_->inv(v_)}; }
  FieldElem pow(long long n) const { return {checked(), ctx_->pow(v_, n)}; }
  bool is_square() const { return checked()->is_square(v_); }
  std::optional<FieldElem> sqrt() const {
    auto r = checked()->sqrt(v_);
    if (!r) return std::nullopt;
    return FieldElem{ctx_, *r};
  }

  friend bool operator==(const FieldElem& x, const FieldElem& y) noexcept {
    return x.ctx_ == y.ctx_ && x.v_ == y.v_;
  }
  /// Canonical order: the base-p integer encoding.
  friend std::strong_ordering operator<=>(const FieldElem& x, const FieldElem& y) noexcept {
    return x.v_ <=> y.v_;
  }

  std::string to_string() const { return ctx_ ? ctx_->to_string(v_) : "<null>"; }

 private:
  static const FieldCtx* same(const FieldElem& x, const FieldElem& y) {
    if (x.ctx_ == nullptr || x.ctx_ != y.ctx_) throw std::invalid_argument("field elements from different contexts");
    return x.ctx_;
  }
  const FieldCtx* checked() const {
    if (!ctx_) throw std::invalid_argument("field element without context");
    return ctx_;
  }

  const FieldCtx* ctx_ = nullptr;
  Elem v_ = 0;
};

inline FieldElem FieldCtx::operator()(Elem x) const { return {this, x}; }
inline FieldElem FieldCtx::from(long long n) const { return {this, from_int(n)}; }
inline FieldElem FieldCtx::zero() const { return {this, 0}; }
inline FieldElem FieldCtx::one() const { return {this, 1}; }
inline std::vector<FieldElem> FieldCtx::elements() const {
  std::vector<FieldElem> out;
  out.reserve(q_);
  for (Elem x = 0; x < q_; ++x) out.emplace_back(this, x);
  return out;
}

inline FieldElem zero_like(const FieldElem& x) { return {x.ctx(), 0}; }
inline FieldElem one_like(const FieldElem& x) { return {x.ctx(), 1}; }

/// GF(q^2) over GF(q) together with the subfield embedding.
///
/// For odd q, omega is the smallest nonzero element with omega^q = -omega,
/// and gamma = omega^2 lies in the base field.
struct QuadraticExtension {
  FieldPtr base;
  FieldPtr ext;
  std::vector<Elem> embedding;      // base element -> ext element
  std::vector<std::int32_t> restriction;  // ext element -> base element or -1
  std::optional<Elem> omega;
  std::optional<Elem> gamma;        // in the base field

  std::uint32_t q() const { return base->q(); }
  FieldElem embed(const FieldElem& x) const {
    if (x.ctx() != base.get()) throw std::invalid_argument("element not in the base field");
    return (*ext)(embedding[x.value()]);
  }
  std::optional<FieldElem> restrict_to_base(const FieldElem& x) const {
    if (x.ctx() != ext.get()) throw std::invalid_argument("element not in the extension field");
    const auto r = restriction[x.value()];
    if (r < 0) return std::nullopt;
    return (*base)(static_cast<Elem>(r));
  }
  /// x -> x^q, the nontrivial automorphism over the base.
  Elem conj(Elem x) const { return ext->pow(x, base->q()); }
  FieldElem conj(const FieldElem& x) const { return (*ext)(conj(x.value())); }
  /// x^(q+1), which lies in the base field.
  Elem norm(Elem x) const { return ext->pow(x, static_cast<long long>(base->q()) + 1); }
};

inline QuadraticExtension quadratic_extension(const FieldPtr& base) {
  QuadraticExtension qe;
  qe.base = base;
  qe.ext = FieldCtx::make(base->p(), 2 * base->k());
  const FieldCtx& F = *qe.ext;
  const std::uint32_t q = base->q();

  Elem theta = 0;
  if (base->k() > 1) {
    // root of the base modulus inside the fixed field of x -> x^q
    bool found = false;
    for (Elem x = 0; x < F.q() && !found; ++x) {
      if (F.pow(x, q) != x) continue;
      Elem acc = 0;
      for (std::size_t i = base->modulus().size(); i-- > 0;) acc = F.add(F.mul(acc, x), F.from_int(base->modulus()[i]));
      if (acc == 0) {
        theta = x;
        found = true;
      }
    }
    if (!found) throw std::logic_error("subfield embedding not found");
  }
  qe.embedding.resize(q);
  qe.restriction.assign(F.q(), -1);
  for (Elem x = 0; x < q; ++x) {
    Elem img = 0;
    if (base->k() == 1) {
      img = F.from_int(x);
    } else {
      const auto c = base->coeffs(x);
      for (std::size_t i = c.size(); i-- > 0;) img = F.add(F.mul(img, theta), F.from_int(c[i]));
    }
    qe.embedding[x] = img;
    qe.restriction[img] = static_cast<std::int32_t>(x);
  }
  if (base->p() != 2) {
    for (Elem w = 1; w < F.q(); ++w) {
      if (F.pow(w, q) == F.neg(w)) {
        qe.omega = w;
        qe.gamma = static_cast<Elem>(qe.restriction[F.mul(w, w)]);
        break;
      }
    }
  }
  return qe;
}

/// N = { r in GF(q^2) : r^(q+1) = 1 }, sorted canonically.
inline std::vector<FieldElem> norm_one_subgroup(const QuadraticExtension& qe) {
  const FieldCtx& F = *qe.ext;
  const std::uint32_t q = qe.q();
  std::vector<FieldElem> out;
  out.reserve(q + 1);
  for (std::uint64_t j = 0; j <= q; ++j) out.push_back(F(F.exp(j * (q - 1))));
  std::sort(out.begin(), out.end());
  return out;
}

}  // namespace cosetder
