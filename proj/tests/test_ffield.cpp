#include <catch2/catch_amalgamated.hpp>

#include <set>

#include "cosetder/ffield.hpp"
#include "cosetder/fpoly.hpp"

using namespace cosetder;

TEST_CASE("make_field picks the least irreducible modulus", "[ffield]") {
  auto f4 = make_field(2, 2);
  CHECK(f4->q() == 4);
  CHECK(f4->modulus() == std::vector<std::uint32_t>{1, 1, 1});
  auto f7 = make_field(7, 1);
  CHECK(f7->q() == 7);
  auto f9 = make_field(3, 2);
  CHECK(f9->q() == 9);
  // t^2 + 1 is the first monic irreducible quadratic over GF(3)
  CHECK(f9->modulus() == std::vector<std::uint32_t>{1, 0, 1});
  CHECK(make_field(3, 2)->modulus() == f9->modulus());
}

TEST_CASE("make_field rejects bad parameters", "[ffield]") {
  CHECK_THROWS_AS(make_field(6, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(1, 1), std::invalid_argument);
  CHECK_THROWS_AS(make_field(2, 40), std::overflow_error);
  CHECK_THROWS_AS(FieldCtx::make(3, std::vector<std::uint32_t>{2, 0, 1}), std::invalid_argument);  // t^2+2 = (t-1)(t+1)
}

TEST_CASE("small prime field arithmetic", "[ffield]") {
  auto F = make_field(5, 1);
  CHECK((F->from(2) * F->from(3)) == F->one());
  CHECK(F->from(2).inv() == F->from(3));
  CHECK(F->from(2).pow(-1) == F->from(3));
  CHECK(F->from(2).pow(4) == F->one());
  CHECK((-F->from(2)) == F->from(3));
  CHECK_THROWS_AS(F->one() / F->zero(), std::domain_error);
  auto G = make_field(7, 1);
  CHECK_THROWS_AS(F->one() + G->one(), std::invalid_argument);
}

TEST_CASE("Frobenius fixes every element", "[ffield]") {
  for (auto [p, k] : {std::pair{3u, 2u}, {2u, 3u}, {5u, 2u}, {2u, 4u}, {7u, 2u}}) {
    auto F = make_field(p, k);
    for (auto x : F->elements()) CHECK(x.pow(F->q()) == x);
  }
}

TEST_CASE("x^(q-1) = 1 for nonzero x", "[ffield]") {
  for (std::uint64_t q : {2, 3, 4, 5, 7, 8, 9, 11, 13, 16, 25, 27, 32, 49, 64, 81, 121, 125, 128, 169, 243, 256, 343,
                          361, 512}) {
    unsigned k = 0;
    std::uint64_t p = 2;
    while (q % p) ++p;
    for (std::uint64_t t = q; t > 1; t /= p) ++k;
    auto F = make_field(p, k);
    for (Elem x = 1; x < F->q(); ++x) REQUIRE(F->pow(x, F->q() - 1) == 1);
  }
}

TEST_CASE("generic addition agrees with the fast paths", "[ffield]") {
  for (auto [p, k] : {std::pair{2u, 3u}, {7u, 1u}, {3u, 3u}}) {
    auto F = make_field(p, k);
    for (Elem x = 0; x < F->q(); ++x)
      for (Elem y = 0; y < F->q(); ++y) REQUIRE(F->add(x, y) == F->add_generic(x, y));
  }
}

TEST_CASE("is_square and sqrt", "[ffield]") {
  auto F5 = make_field(5, 1);
  CHECK(F5->from(4).is_square());
  CHECK_FALSE(F5->from(2).is_square());
  CHECK_FALSE(F5->from(3).sqrt().has_value());
  auto F7 = make_field(7, 1);
  CHECK(F7->from(2).sqrt() == F7->from(3));
  CHECK(F7->zero().sqrt() == F7->zero());
  auto F4 = make_field(2, 2);
  for (auto x : F4->elements()) {
    CHECK(x.is_square());
    auto r = x.sqrt();
    REQUIRE(r);
    CHECK((*r * *r) == x);
  }
  // oracle: square table by enumeration
  for (auto [p, k] : {std::pair{3u, 2u}, {11u, 1u}, {5u, 2u}, {2u, 3u}}) {
    auto F = make_field(p, k);
    std::set<Elem> squares;
    for (Elem y = 0; y < F->q(); ++y) squares.insert(F->mul(y, y));
    for (Elem x = 0; x < F->q(); ++x) {
      CHECK(F->is_square(x) == (squares.count(x) > 0));
      if (auto r = F->sqrt(x)) {
        CHECK(F->mul(*r, *r) == x);
        CHECK(*r <= F->neg(*r));
      }
    }
  }
}

TEST_CASE("squareness is multiplicative in odd characteristic", "[ffield]") {
  for (auto [p, k] : {std::pair{3u, 2u}, {13u, 1u}, {5u, 2u}}) {
    auto F = make_field(p, k);
    for (Elem x = 1; x < F->q(); ++x)
      for (Elem y = 1; y < F->q(); ++y) REQUIRE(F->is_square(F->mul(x, y)) == (F->is_square(x) == F->is_square(y)));
  }
}

TEST_CASE("size of { s + 1/s }", "[ffield]") {
  for (auto [p, k] : {std::pair{2u, 2u}, {2u, 3u}, {3u, 1u}, {5u, 1u}, {3u, 2u}, {7u, 1u}, {2u, 4u}, {13u, 1u}}) {
    auto F = make_field(p, k);
    std::set<Elem> t;
    for (Elem s = 1; s < F->q(); ++s) t.insert(F->add(s, F->inv(s)));
    const std::size_t q = F->q();
    CHECK(t.size() == (q % 2 ? (q - 1) / 2 + 1 : q / 2));
  }
}

TEST_CASE("quadratic extension and omega", "[ffield]") {
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {7u, 1u}, {3u, 2u}, {2u, 2u}}) {
    auto B = make_field(p, k);
    auto qe = quadratic_extension(B);
    const FieldCtx& F = *qe.ext;
    CHECK(F.q() == B->q() * B->q());
    CHECK(qe.embed(B->one()) == F.one());
    // embedding is a ring morphism onto the fixed field of x -> x^q
    for (Elem x = 0; x < B->q(); ++x) {
      for (Elem y = 0; y < B->q(); ++y) {
        REQUIRE(qe.embedding[B->add(x, y)] == F.add(qe.embedding[x], qe.embedding[y]));
        REQUIRE(qe.embedding[B->mul(x, y)] == F.mul(qe.embedding[x], qe.embedding[y]));
      }
      CHECK(qe.conj(qe.embedding[x]) == qe.embedding[x]);
    }
    if (p == 2) {
      CHECK_FALSE(qe.omega);
      continue;
    }
    REQUIRE(qe.omega);
    CHECK(qe.conj(*qe.omega) == F.neg(*qe.omega));
    REQUIRE(qe.gamma);
    CHECK(qe.embedding[*qe.gamma] == F.mul(*qe.omega, *qe.omega));
    CHECK_FALSE(B->is_square(*qe.gamma));
  }
}

TEST_CASE("norm-one subgroup", "[ffield]") {
  for (auto [p, k] : {std::pair{3u, 1u}, {5u, 1u}, {2u, 2u}, {3u, 2u}, {7u, 1u}}) {
    auto B = make_field(p, k);
    auto qe = quadratic_extension(B);
    const auto N = norm_one_subgroup(qe);
    const std::uint32_t q = B->q();
    CHECK(N.size() == q + 1);
    std::set<Elem> ns;
    for (const auto& r : N) ns.insert(r.value());
    CHECK(ns.count(1));
    // oracle: direct enumeration of r^(q+1) = 1
    std::size_t direct = 0;
    for (Elem x = 1; x < qe.ext->q(); ++x) direct += qe.norm(x) == 1;
    CHECK(direct == q + 1);
    for (const auto& r : N) {
      CHECK(ns.count(r.inv().value()));
      CHECK(qe.conj(r) == r.inv());
      for (const auto& s : N) REQUIRE(ns.count((r * s).value()));
    }
  }
}

TEST_CASE("Cayley map onto N minus 1", "[ffield]") {
  for (std::uint64_t q : {3, 5, 7, 9, 11, 13, 25, 27, 49}) {
    std::uint64_t p = 2;
    while (q % p) ++p;
    unsigned k = 0;
    for (std::uint64_t t = q; t > 1; t /= p) ++k;
    auto B = make_field(p, k);
    auto qe = quadratic_extension(B);
    const FieldCtx& F = *qe.ext;
    const Elem w = *qe.omega;
    std::set<Elem> img;
    for (Elem z = 0; z < q; ++z) {
      const Elem e = qe.embedding[z];
      const Elem c = F.div(F.sub(e, w), F.add(e, w));
      REQUIRE(qe.norm(c) == 1);
      REQUIRE(c != 1);
      img.insert(c);
    }
    CHECK(img.size() == q);
  }
}

TEST_CASE("field polynomials and separability", "[ffield]") {
  auto F5 = make_field(5, 1);
  CHECK(is_separable(FPoly::from_ints(*F5, {1, 0, 0, 0, 1})));
  CHECK(is_separable(FPoly::from_ints(*F5, {1, 0, 0, 0, 3})));
  auto F7 = make_field(7, 1);
  CHECK_FALSE(is_separable(FPoly::from_ints(*F7, {1, -2, 1})));
  CHECK_THROWS_AS(is_separable(FPoly(*F7, std::vector<Elem>{})), std::invalid_argument);
  const auto f = FPoly::from_ints(*F7, {-1, 0, 1}), g = FPoly::from_ints(*F7, {1, 1});
  const auto [quo, rem] = f.divmod(g);
  CHECK(rem.is_zero());
  CHECK(quo == FPoly::from_ints(*F7, {-1, 1}));
  CHECK(gcd(f, g) == FPoly::from_ints(*F7, {1, 1}));
}

TEST_CASE("element formatting", "[ffield]") {
  auto F9 = make_field(3, 2);
  CHECK(F9->to_string(0) == "0");
  CHECK(F9->to_string(3) == "t");
  CHECK(F9->to_string(5) == "2+t");
}

TEST_CASE("prime power helpers", "[ffield]") {
  std::set<std::uint64_t> got;
  for (std::uint64_t q = 0; q <= 64; ++q)
    if (is_prime_power(q)) got.insert(q);
  // oracle: p^k by multiplication
  std::set<std::uint64_t> want;
  for (std::uint64_t p = 2; p <= 64; ++p) {
    if (!detail::is_prime(p)) continue;
    for (std::uint64_t v = p; v <= 64; v *= p) want.insert(v);
  }
  CHECK(got == want);
  const auto pp = as_prime_power(27);
  REQUIRE(pp);
  CHECK(pp->p == 3);
  CHECK(pp->k == 3);
  CHECK_FALSE(as_prime_power(1));
  CHECK_FALSE(as_prime_power(12));
  CHECK(field_of_order(16)->q() == 16);
  CHECK_THROWS_AS(field_of_order(10), std::invalid_argument);
}
