#include <catch2/catch_amalgamated.hpp>

#include "cosetder/polyhedral.hpp"

using namespace cosetder;

TEST_CASE("catalan numbers", "[polyhedral]") {
  const std::uint64_t want[] = {1, 2, 5, 14, 42, 132};
  for (unsigned m = 0; m < 6; ++m) CHECK(catalan(m) == want[m]);
  // recurrence C_{n+1} = sum C_i C_{n-i}, with C_1 = catalan(0)
  for (unsigned m = 1; m < 10; ++m) {
    std::uint64_t s = 0;
    for (unsigned i = 0; i <= m; ++i) s += (i ? catalan(i - 1) : 1) * (m - i ? catalan(m - i - 1) : 1);
    CHECK(catalan(m) == s);
  }
}

TEST_CASE("generic matrices", "[polyhedral]") {
  const auto [x, y] = generic_matrices(NFKind::GaussianI);
  const NFElem one(NFKind::GaussianI, Rational{1});
  CHECK(x.trace() == NPoly::var(0, one) + NPoly::var(3, one));
  CHECK(x.det() == NPoly::var(0, one) * NPoly::var(3, one) - NPoly::var(1, one) * NPoly::var(2, one));
  const NPoly lhs = x.trace() * y.trace() - (x * y).trace();
  CHECK(lhs.size() == 4);
  CHECK(lhs == (y.adjugate() * x).trace());
}

TEST_CASE("trace identities in range", "[polyhedral]") {
  const auto cases = identity_cases();
  REQUIRE(cases.size() == 10);
  for (const auto& tc : cases) {
    const auto r = trace_identity_check(tc);
    INFO(to_string(tc.kind) << " m=" << tc.m);
    CHECK(r.equal);
    CHECK(r.diff_terms == 0);
    CHECK(r.dyadic);
    CHECK(r.as_predicted());
  }
  const auto r = trace_identity_check({PolyKind::A5, 4});
  CHECK(r.expected_coefficient() == 60 * 42);
}

TEST_CASE("trace identities fail past the range", "[polyhedral]") {
  for (const auto& tc : negative_cases()) {
    const auto r = trace_identity_check(tc);
    INFO(to_string(tc.kind) << " m=" << tc.m);
    CHECK_FALSE(r.equal);
    CHECK_FALSE(r.proportional);
    CHECK(r.diff_terms > 0);
    CHECK(r.as_predicted());
  }
}

TEST_CASE("trace identity with a wrong coefficient", "[polyhedral]") {
  // same group, off-by-one Catalan: must not pass
  const auto& H = cached_polyhedral(PolyKind::A4);
  const auto ok = trace_identity_check({PolyKind::A4, 1}, &H);
  CHECK(ok.equal);
  CHECK(ok.proportional);
  const GroupSet<NFElem> half(std::vector<NMat>(H.begin(), H.begin() + 12), false);
  CHECK_FALSE(trace_identity_check({PolyKind::A4, 1}, &half).equal);
}

TEST_CASE("verdicts survive conjugation", "[polyhedral]") {
  for (auto k : {PolyKind::A4, PolyKind::S4}) {
    const NMat g = random_sl2(field_of(k), 7 + static_cast<int>(k));
    REQUIRE(g.det() == NFElem(field_of(k), Rational{1}));
    REQUIRE_FALSE(g == NMat::identity(NFElem(field_of(k), Rational{1})));
    const auto Hg = conjugate_group(cached_polyhedral(k), g);
    REQUIRE(Hg.size() == cached_polyhedral(k).size());
    REQUIRE(Hg.is_closed());
    for (unsigned m = 0; m <= max_identity_m(k) + 1; ++m) {
      const TraceIdentityCase tc{k, m};
      CHECK(trace_identity_check(tc, &Hg).equal == trace_identity_check(tc).equal);
    }
  }
}

TEST_CASE("thread count does not change the expansion", "[polyhedral]") {
  const auto a = trace_identity_check({PolyKind::S4, 2}, nullptr, 1);
  const auto b = trace_identity_check({PolyKind::S4, 2}, nullptr, 4);
  CHECK(a.lhs_terms == b.lhs_terms);
  CHECK(a.equal == b.equal);
}

TEST_CASE("product polynomials", "[polyhedral]") {
  for (auto k : {PolyKind::A4, PolyKind::S4, PolyKind::A5}) {
    const auto p = product_trace_poly(k);
    CHECK(p == expected_product_poly(k));
    CHECK(p.degree() == (k == PolyKind::A4 ? 3 : k == PolyKind::S4 ? 5 : 7));
  }
  CHECK(expected_product_poly(PolyKind::S4).to_string() == "Z^5 - 3*Z^3 + 2*Z");
}

TEST_CASE("reduction modulo det = 1", "[polyhedral]") {
  const NFElem one(NFKind::GaussianI, Rational{1});
  auto v = [&](int i) { return NPoly::var(i, one); };
  const NPoly det = v(kVarA) * v(kVarD) - v(kVarB) * v(kVarC);
  CHECK(reduce_det_one(det) == NPoly::constant(one));
  CHECK(reduce_det_one(det.pow(3, one) * v(kVarA)) == v(kVarA));
  const NPoly p = v(kVarA) * v(kVarA) * v(kVarD) + v(kVarB);
  CHECK(reduce_det_one(p - (det - NPoly::constant(one)) * v(kVarA)) == reduce_det_one(p));
}

TEST_CASE("polyhedral sums reduce to the group order", "[polyhedral]") {
  for (auto k : {PolyKind::A4, PolyKind::S4, PolyKind::A5}) {
    const auto r = polyhedral_sum_check(k);
    INFO(to_string(k));
    CHECK(r.equal);
    CHECK(r.lhs_terms > 1);
  }
  // coefficient bookkeeping from the final display
  auto c = [](unsigned m) { return static_cast<long>(catalan(m)); };
  CHECK(c(1) - c(0) == 1);
  CHECK(c(2) - 3 * c(1) + 2 * c(0) == 1);
  CHECK(c(3) - 4 * c(2) + 4 * c(1) - c(0) == 1);
}
