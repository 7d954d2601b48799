// Sparse polynomials in up to eight variables, and dense univariate
// polynomials, over an exact coefficient type (Rational or NFElem).
//
// Terms are kept in graded-lexicographic order (variable 0 is the most
// significant), so two polynomials are equal exactly when their term maps
// are equal.
#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "cosetder/numfield.hpp"
#include "cosetder/rational.hpp"

namespace cosetder {

inline constexpr int kMaxVars = 8;

/// Exponent vector; each exponent fits in one byte.
struct Monomial {
  std::array<std::uint8_t, kMaxVars> e{};

  unsigned degree() const {
    unsigned d = 0;
    for (auto x : e) d += x;
    return d;
  }
  static Monomial var(int v, unsigned power = 1) {
    Monomial m;
    m.e.at(v) = static_cast<std::uint8_t>(power);
    return m;
  }
  friend Monomial operator*(const Monomial& a, const Monomial& b) {
    Monomial m;
    for (int i = 0; i < kMaxVars; ++i) {
      const unsigned s = unsigned{a.e[i]} + b.e[i];
      if (s > 255) throw std::overflow_error("monomial exponent overflow");
      m.e[i] = static_cast<std::uint8_t>(s);
    }
    return m;
  }
  friend bool operator==(const Monomial&, const Monomial&) = default;
};

/// Graded lex: higher total degree first, then lexicographic from variable 0.
struct GrlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const {
    const unsigned da = a.degree(), db = b.degree();
    if (da != db) return da > db;
    return a.e > b.e;
  }
};

template <class C>
class MPoly {
 public:
  using Terms = std::map<Monomial, C, GrlexGreater>;

  MPoly() = default;
  static MPoly constant(const C& c) {
    MPoly p;
    if (!c.is_zero()) p.t_.emplace(Monomial{}, c);
    return p;
  }
  static MPoly term(const Monomial& m, const C& c) {
    MPoly p;
    if (!c.is_zero()) p.t_.emplace(m, c);
    return p;
  }
  /// The variable x_v with coefficient `one`.
  static MPoly var(int v, const C& one) { return term(Monomial::var(v), one); }

  bool is_zero() const noexcept { return t_.empty(); }
  std::size_t size() const noexcept { return t_.size(); }
  const Terms& terms() const noexcept { return t_; }
  int degree() const {
    int d = -1;
    for (const auto& [m, c] : t_) d = std::max(d, static_cast<int>(m.degree()));
    return d;
  }

  void add_term(const Monomial& m, const C& c) {
    if (c.is_zero()) return;
    auto [it, inserted] = t_.try_emplace(m, c);
    if (inserted) return;
    it->second += c;
    if (it->second.is_zero()) t_.erase(it);
  }

  MPoly& operator+=(const MPoly& g) {
    for (const auto& [m, c] : g.t_) add_term(m, c);
    return *this;
  }
  MPoly& operator-=(const MPoly& g) {
    for (const auto& [m, c] : g.t_) add_term(m, -c);
    return *this;
  }
  friend MPoly operator+(MPoly f, const MPoly& g) { return f += g; }
  friend MPoly operator-(MPoly f, const MPoly& g) { return f -= g; }
  MPoly operator-() const {
    MPoly r;
    for (const auto& [m, c] : t_) r.t_.emplace(m, -c);
    return r;
  }

  friend MPoly operator*(const MPoly& f, const MPoly& g) {
    MPoly r;
    for (const auto& [mf, cf] : f.t_)
      for (const auto& [mg, cg] : g.t_) r.add_term(mf * mg, cf * cg);
    return r;
  }
  MPoly& operator*=(const MPoly& g) { return *this = *this * g; }

  MPoly scale(const C& s) const {
    MPoly r;
    if (s.is_zero()) return r;
    for (const auto& [m, c] : t_) r.add_term(m, c * s);
    return r;
  }

  MPoly pow(unsigned n, const C& one) const {
    MPoly r = constant(one), base = *this;
    while (n) {
      if (n & 1) r *= base;
      n >>= 1;
      if (n) base *= base;
    }
    return r;
  }

  /// Replace x_v by `value`.
  MPoly substitute(int v, const C& value) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
      Monomial rest = m;
      const unsigned k = rest.e.at(v);
      rest.e[v] = 0;
      C coef = c;
      for (unsigned j = 0; j < k; ++j) coef = coef * value;
      r.add_term(rest, coef);
    }
    return r;
  }

  /// Coefficient of x_v^k, as a polynomial in the other variables.
  MPoly coefficient(int v, unsigned k) const {
    MPoly r;
    for (const auto& [m, c] : t_) {
      if (m.e.at(v) != k) continue;
      Monomial rest = m;
      rest.e[v] = 0;
      r.add_term(rest, c);
    }
    return r;
  }

  friend bool operator==(const MPoly& f, const MPoly& g) { return f.t_ == g.t_; }

  std::string to_string(const std::vector<std::string>& names) const {
    if (t_.empty()) return "0";
    std::string s;
    for (const auto& [m, c] : t_) {
      std::string mono;
      for (int i = 0; i < kMaxVars; ++i) {
        if (m.e[i] == 0) continue;
        if (!mono.empty()) mono += "*";
        mono += i < static_cast<int>(names.size()) ? names[i] : "x" + std::to_string(i);
        if (m.e[i] > 1) mono += "^" + std::to_string(m.e[i]);
      }
      std::string coef = c.to_string();
      const bool compound = coef.find_first_of("+-", 1) != std::string::npos;
      if (compound) coef = "(" + coef + ")";
      std::string term;
      if (mono.empty()) term = coef;
      else if (coef == "1") term = mono;
      else if (coef == "-1") term = "-" + mono;
      else term = coef + "*" + mono;
      if (!s.empty()) s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
      else s = term;
    }
    return s;
  }

 private:
  Terms t_;
};

/// f == g as polynomials (exact, full expansion).
template <class C>
bool mpoly_equal(const MPoly<C>& f, const MPoly<C>& g) {
  return (f - g).is_zero();
}

/// Determinant of a square matrix with polynomial entries, by Laplace
/// expansion along rows with memoisation over column subsets.
template <class C>
MPoly<C> determinant(const std::vector<std::vector<MPoly<C>>>& m, const C& one) {
  const std::size_t n = m.size();
  if (n == 0) return MPoly<C>::constant(one);
  if (n > 16) throw std::invalid_argument("determinant: matrix too large");
  for (const auto& row : m)
    if (row.size() != n) throw std::invalid_argument("determinant: matrix not square");
  // minor[cols] = det of rows (n - popcount(cols))..n-1 restricted to cols
  std::map<std::uint32_t, MPoly<C>> memo;
  std::function<MPoly<C>(std::uint32_t)> minor = [&](std::uint32_t cols) -> MPoly<C> {
    const int k = __builtin_popcount(cols);
    if (k == 0) return MPoly<C>::constant(one);
    if (auto it = memo.find(cols); it != memo.end()) return it->second;
    const std::size_t row = n - static_cast<std::size_t>(k);
    MPoly<C> acc;
    int sign_pos = 0;
    for (std::size_t c = 0; c < n; ++c) {
      if (!(cols & (1u << c))) continue;
      const MPoly<C>& entry = m[row][c];
      if (!entry.is_zero()) {
        MPoly<C> t = entry * minor(cols & ~(1u << c));
        if (sign_pos % 2) acc -= t;
        else acc += t;
      }
      ++sign_pos;
    }
    memo.emplace(cols, acc);
    return acc;
  };
  return minor((1u << n) - 1u);
}

/// Sylvester matrix of f and g in variable v (f, g given by their
/// coefficient polynomials, highest degree first).
template <class C>
std::vector<std::vector<MPoly<C>>> sylvester(const std::vector<MPoly<C>>& f, const std::vector<MPoly<C>>& g) {
  const std::size_t m = f.size() - 1, n = g.size() - 1, N = m + n;
  std::vector<std::vector<MPoly<C>>> s(N, std::vector<MPoly<C>>(N));
  for (std::size_t r = 0; r < n; ++r)
    for (std::size_t j = 0; j <= m; ++j) s[r][r + j] = f[j];
  for (std::size_t r = 0; r < m; ++r)
    for (std::size_t j = 0; j <= n; ++j) s[n + r][r + j] = g[j];
  return s;
}

/// Coefficients of f in x_v, highest degree first (degree taken from f).
template <class C>
std::vector<MPoly<C>> coefficients_in(const MPoly<C>& f, int v) {
  unsigned d = 0;
  for (const auto& [m, c] : f.terms()) d = std::max<unsigned>(d, m.e.at(v));
  std::vector<MPoly<C>> out;
  for (unsigned k = d + 1; k-- > 0;) out.push_back(f.coefficient(v, k));
  return out;
}

/// res_v(f, g) via the Sylvester determinant.
template <class C>
MPoly<C> resultant(const MPoly<C>& f, const MPoly<C>& g, int v, const C& one) {
  return determinant(sylvester(coefficients_in(f, v), coefficients_in(g, v)), one);
}

/// Formal partial derivative.
template <class C>
MPoly<C> derivative(const MPoly<C>& f, int v) {
  MPoly<C> r;
  for (const auto& [m, c] : f.terms()) {
    if (m.e.at(v) == 0) continue;
    Monomial d = m;
    const long k = d.e[v]--;
    r.add_term(d, c * int_like(c, k));
  }
  return r;
}

/// disc_v(f) = (-1)^(n(n-1)/2) res(f, f') / lead(f), for f with constant
/// leading coefficient in x_v.
template <class C>
MPoly<C> discriminant(const MPoly<C>& f, int v, const C& one) {
  const auto coeffs = coefficients_in(f, v);
  const auto& lead = coeffs.front();
  if (lead.size() != 1 || lead.terms().begin()->first.degree() != 0)
    throw std::invalid_argument("discriminant: leading coefficient must be a nonzero constant");
  const std::size_t n = coeffs.size() - 1;
  MPoly<C> r = resultant(f, derivative(f, v), v, one);
  C scale = one / lead.terms().begin()->second;
  if ((n * (n - 1) / 2) % 2) scale = -scale;
  return r.scale(scale);
}

/// Dense univariate polynomial, coefficients low to high.
template <class C>
class UPoly {
 public:
  UPoly() = default;
  explicit UPoly(std::vector<C> c) : c_(std::move(c)) { trim(); }

  int degree() const noexcept { return static_cast<int>(c_.size()) - 1; }
  const std::vector<C>& coeffs() const noexcept { return c_; }
  bool is_zero() const noexcept { return c_.empty(); }

  friend UPoly operator*(const UPoly& f, const UPoly& g) {
    if (f.is_zero() || g.is_zero()) return UPoly{};
    std::vector<C> r(f.c_.size() + g.c_.size() - 1, zero_like(f.c_[0]));
    for (std::size_t i = 0; i < f.c_.size(); ++i)
      for (std::size_t j = 0; j < g.c_.size(); ++j) r[i + j] += f.c_[i] * g.c_[j];
    return UPoly{std::move(r)};
  }
  friend bool operator==(const UPoly& f, const UPoly& g) { return f.c_ == g.c_; }

  C operator()(const C& z) const {
    if (c_.empty()) throw std::invalid_argument("evaluating the zero polynomial without a context");
    C acc = zero_like(c_[0]);
    for (std::size_t i = c_.size(); i-- > 0;) acc = acc * z + c_[i];
    return acc;
  }

  std::string to_string(const std::string& var = "Z") const {
    if (c_.empty()) return "0";
    std::string s;
    for (std::size_t i = c_.size(); i-- > 0;) {
      if (c_[i].is_zero()) continue;
      std::string coef = c_[i].to_string();
      if (coef.find_first_of("+-", 1) != std::string::npos) coef = "(" + coef + ")";
      std::string mono = i == 0 ? "" : (i == 1 ? var : var + "^" + std::to_string(i));
      std::string term = mono.empty() ? coef : coef == "1" ? mono : coef == "-1" ? "-" + mono : coef + "*" + mono;
      if (s.empty()) s = term;
      else s += term[0] == '-' ? " - " + term.substr(1) : " + " + term;
    }
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && c_.back().is_zero()) c_.pop_back();
  }
  std::vector<C> c_;
};

}  // namespace cosetder
