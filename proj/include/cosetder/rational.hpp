// Exact rationals on top of GMP's mpq_class.
#pragma once

#include <gmpxx.h>

#include <compare>
#include <cstdint>
#include <stdexcept>
#include <string>

namespace cosetder {

class Rational {
 public:
  Rational() = default;
  Rational(long n) : v_(n) {}  // NOLINT(google-explicit-constructor)
  Rational(int n) : v_(n) {}   // NOLINT(google-explicit-constructor)
  Rational(long num, long den) {
    if (den == 0) throw std::domain_error("rational with zero denominator");
    v_ = mpq_class(num, den);
    v_.canonicalize();
  }
  explicit Rational(mpq_class v) : v_(std::move(v)) { v_.canonicalize(); }

  static Rational parse(const std::string& s) {
    mpq_class v;
    if (v.set_str(s, 10) != 0) throw std::invalid_argument("not a rational: " + s);
    if (v.get_den() == 0) throw std::domain_error("rational with zero denominator");
    v.canonicalize();
    return Rational{v};
  }

  bool is_zero() const { return sgn(v_) == 0; }
  bool is_one() const { return v_ == 1; }
  bool is_integer() const { return v_.get_den() == 1; }
  int sign() const { return sgn(v_); }
  mpz_class num() const { return v_.get_num(); }
  mpz_class den() const { return v_.get_den(); }
  const mpq_class& raw() const { return v_; }

  /// Denominator is 2^j for some j >= 0.
  bool den_is_power_of_two() const {
    const mpz_class& d = v_.get_den();
    return mpz_popcount(d.get_mpz_t()) == 1;
  }

  friend Rational operator+(const Rational& a, const Rational& b) { return Rational{Canonical{}, a.v_ + b.v_}; }
  friend Rational operator-(const Rational& a, const Rational& b) { return Rational{Canonical{}, a.v_ - b.v_}; }
  friend Rational operator*(const Rational& a, const Rational& b) { return Rational{Canonical{}, a.v_ * b.v_}; }
  friend Rational operator/(const Rational& a, const Rational& b) {
    if (b.is_zero()) throw std::domain_error("rational division by zero");
    return Rational{Canonical{}, a.v_ / b.v_};
  }
  Rational operator-() const { return Rational{Canonical{}, -v_}; }
  Rational& operator+=(const Rational& b) {
    v_ += b.v_;
    return *this;
  }
  Rational& operator-=(const Rational& b) {
    v_ -= b.v_;
    return *this;
  }
  Rational& operator*=(const Rational& b) {
    v_ *= b.v_;
    return *this;
  }

  friend bool operator==(const Rational& a, const Rational& b) { return a.v_ == b.v_; }
  friend std::strong_ordering operator<=>(const Rational& a, const Rational& b) {
    const int c = cmp(a.v_, b.v_);
    return c < 0 ? std::strong_ordering::less : c > 0 ? std::strong_ordering::greater : std::strong_ordering::equal;
  }

  std::string to_string() const { return v_.get_str(); }

  /// Reduce into Z/p (p prime, not dividing the denominator).
  std::uint64_t mod(std::uint64_t p) const {
    mpz_class n = v_.get_num() % p;
    if (n < 0) n += p;
    mpz_class d = v_.get_den() % p;
    if (d == 0) throw std::domain_error("denominator divisible by the characteristic");
    mpz_class dinv;
    mpz_class pm(static_cast<unsigned long>(p));
    mpz_invert(dinv.get_mpz_t(), d.get_mpz_t(), pm.get_mpz_t());
    mpz_class r = (n * dinv) % pm;
    return r.get_ui();
  }

 private:
  // GMP arithmetic already returns canonical values.
  struct Canonical {};
  Rational(Canonical, mpq_class v) : v_(std::move(v)) {}

  mpq_class v_;
};

inline Rational zero_like(const Rational&) { return Rational{0}; }
inline Rational one_like(const Rational&) { return Rational{1}; }
inline Rational int_like(const Rational&, long n) { return Rational{n}; }

}  // namespace cosetder
