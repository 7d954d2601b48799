// 2x2 matrices over an arbitrary coefficient ring and finite matrix groups.
#pragma once

#include <algorithm>
#include <compare>
#include <cstddef>
#include <deque>
#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "cosetder/ffield.hpp"

namespace cosetder {

template <class S>
struct Mat2 {
  S a, b, c, d;  // row-major: (a b; c d)

  static Mat2 identity(const S& one) { return {one, zero_like(one), zero_like(one), one}; }

  friend Mat2 operator*(const Mat2& x, const Mat2& y) {
    return {x.a * y.a + x.b * y.c, x.a * y.b + x.b * y.d, x.c * y.a + x.d * y.c, x.c * y.b + x.d * y.d};
  }
  friend Mat2 operator+(const Mat2& x, const Mat2& y) { return {x.a + y.a, x.b + y.b, x.c + y.c, x.d + y.d}; }
  friend Mat2 operator-(const Mat2& x, const Mat2& y) { return {x.a - y.a, x.b - y.b, x.c - y.c, x.d - y.d}; }
  Mat2 operator-() const { return {-a, -b, -c, -d}; }
  Mat2 scale(const S& s) const { return {a * s, b * s, c * s, d * s}; }

  S det() const { return a * d - b * c; }
  S trace() const { return a + d; }
  /// adj(m) with m * adj(m) = det(m) * E.
  Mat2 adjugate() const { return {d, -b, -c, a}; }
  Mat2 inverse() const {
    const S dt = det();
    if (dt.is_zero()) throw std::domain_error("inverse of a singular matrix");
    const S di = one_like(dt) / dt;
    return adjugate().scale(di);
  }

  friend bool operator==(const Mat2&, const Mat2&) = default;
  /// Entry-wise canonical order, row-major.
  friend std::strong_ordering operator<=>(const Mat2& x, const Mat2& y)
    requires std::three_way_comparable<S>
  {
    if (auto r = x.a <=> y.a; r != 0) return r;
    if (auto r = x.b <=> y.b; r != 0) return r;
    if (auto r = x.c <=> y.c; r != 0) return r;
    return x.d <=> y.d;
  }

  std::string to_string() const
    requires requires(const S& s) { s.to_string(); }
  {
    return "[" + a.to_string() + ", " + b.to_string() + "; " + c.to_string() + ", " + d.to_string() + "]";
  }
};

/// Representative of {m, -m}: the smaller one in canonical order.
template <class S>
Mat2<S> projective_canonical(const Mat2<S>& m) {
  Mat2<S> n = -m;
  return n < m ? n : m;
}

inline constexpr std::size_t kDefaultClosureCap = 1'000'000;

/// A finite, deduplicated set of matrices kept sorted in canonical order.
/// With the projective flag, m and -m are identified and stored as
/// projective_canonical(m). In characteristic 2 that flag changes nothing.
template <class S>
class GroupSet {
 public:
  GroupSet() = default;
  GroupSet(std::vector<Mat2<S>> elems, bool projective) : projective_(projective) {
    if (projective_)
      for (auto& m : elems) m = projective_canonical(m);
    std::sort(elems.begin(), elems.end());
    elems.erase(std::unique(elems.begin(), elems.end()), elems.end());
    elems_ = std::move(elems);
  }

  std::size_t size() const noexcept { return elems_.size(); }
  bool projective() const noexcept { return projective_; }
  const std::vector<Mat2<S>>& elements() const noexcept { return elems_; }
  auto begin() const { return elems_.begin(); }
  auto end() const { return elems_.end(); }
  const Mat2<S>& operator[](std::size_t i) const { return elems_[i]; }

  Mat2<S> canonical(const Mat2<S>& m) const { return projective_ ? projective_canonical(m) : m; }

  bool contains(const Mat2<S>& m) const { return std::binary_search(elems_.begin(), elems_.end(), canonical(m)); }
  /// Index in canonical order, or -1.
  std::ptrdiff_t index_of(const Mat2<S>& m) const {
    const auto key = canonical(m);
    auto it = std::lower_bound(elems_.begin(), elems_.end(), key);
    return it != elems_.end() && *it == key ? it - elems_.begin() : -1;
  }

  /// Image in the projective group.
  GroupSet projective_image() const { return GroupSet(elems_, true); }

  /// g*h is in the set for all g, h (quadratic; meant for small groups).
  bool is_closed() const {
    for (const auto& g : elems_)
      for (const auto& h : elems_)
        if (!contains(g * h)) return false;
    return true;
  }

  friend bool operator==(const GroupSet&, const GroupSet&) = default;

 private:
  std::vector<Mat2<S>> elems_;
  bool projective_ = false;
};

/// Smallest multiplicatively closed set containing E and the generators,
/// computed with a worklist. Throws std::length_error past `cap` elements.
template <class S>
GroupSet<S> group_closure(const std::vector<Mat2<S>>& gens, bool projective = false,
                          std::size_t cap = kDefaultClosureCap) {
  if (gens.empty()) throw std::invalid_argument("group_closure needs at least one generator");
  for (const auto& g : gens)
    if (g.det().is_zero()) throw std::domain_error("singular generator");
  auto canon = [&](const Mat2<S>& m) { return projective ? projective_canonical(m) : m; };
  const Mat2<S> e = canon(Mat2<S>::identity(one_like(gens.front().a)));
  std::set<Mat2<S>> seen{e};
  std::deque<Mat2<S>> work{e};
  while (!work.empty()) {
    const Mat2<S> g = std::move(work.front());
    work.pop_front();
    for (const auto& s : gens) {
      Mat2<S> h = canon(g * s);
      if (seen.insert(h).second) {
        if (seen.size() > cap) throw std::length_error("group closure exceeded cap of " + std::to_string(cap));
        work.push_back(std::move(h));
      }
    }
  }
  return GroupSet<S>(std::vector<Mat2<S>>(seen.begin(), seen.end()), projective);
}

/// Distinct traces, sorted.
template <class S>
std::vector<S> trace_set(const GroupSet<S>& g) {
  std::vector<S> t;
  for (const auto& m : g) t.push_back(m.trace());
  std::sort(t.begin(), t.end());
  t.erase(std::unique(t.begin(), t.end()), t.end());
  return t;
}

using FMat = Mat2<FieldElem>;

/// Matrix over a field from raw encodings.
inline FMat fmat(const FieldCtx& F, Elem a, Elem b, Elem c, Elem d) { return {F(a), F(b), F(c), F(d)}; }

}  // namespace cosetder
