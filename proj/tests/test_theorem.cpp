#include <catch2/catch_amalgamated.hpp>

#include <map>

#include "cosetder/theorem.hpp"

using namespace cosetder;

namespace {

// element-order histogram, used to tell A4 / S4 / A5 apart
std::map<unsigned, std::size_t> order_profile(const FGroup& g) {
  std::map<unsigned, std::size_t> out;
  for (const auto& m : g) ++out[projective_element_order(m)];
  return out;
}

const std::map<unsigned, std::size_t> kA4{{1, 1}, {2, 3}, {3, 8}};
const std::map<unsigned, std::size_t> kS4{{1, 1}, {2, 9}, {3, 8}, {4, 6}};
const std::map<unsigned, std::size_t> kA5{{1, 1}, {2, 15}, {3, 20}, {5, 24}};

const SubgroupRep& find_case(const std::vector<SubgroupRep>& reps, const std::string& label) {
  for (const auto& r : reps)
    if (r.label == label) return r;
  FAIL("missing case " << label);
  throw std::logic_error("unreachable");
}

}  // namespace

TEST_CASE("PSL2 orders", "[theorem]") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u}) {
    auto F = field_of_order(q);
    const auto S = psl2(*F);
    CHECK(S.size() == psl2_order(q));
    CHECK(S.projective());
  }
  CHECK(psl2_order(4) == 60);
  CHECK(psl2_order(5) == 60);
  CHECK(psl2_order(9) == 360);
  CHECK(psl2(*make_field(5, 1)).is_closed());
  CHECK_THROWS_AS(psl2(*make_field(3, 1)), std::invalid_argument);
  CHECK_THROWS_AS(psl2(*make_field(7, 2), 1000), std::length_error);
}

TEST_CASE("case applicability", "[theorem]") {
  auto tags = [](std::uint64_t q) {
    std::string s;
    for (char c = 'a'; c <= 'g'; ++c)
      if (case_applies(parse_case_tag(c), q)) s += c;
    return s;
  };
  CHECK(tags(4) == "abcg");
  CHECK(tags(5) == "abcd");
  CHECK(tags(7) == "abcde");
  CHECK(tags(9) == "abcfg");
  CHECK(tags(11) == "abcdf");
  CHECK(tags(17) == "abcde");
  CHECK(tags(49) == "abcfg");
  CHECK(tags(81) == "abcg");
  CHECK(tags(3) == "");
  CHECK(subfield_orders(64) == std::vector<std::uint32_t>{2, 4, 8});
  CHECK(subfield_orders(27) == std::vector<std::uint32_t>{3});
  CHECK_THROWS_AS(parse_case_tag('h'), std::invalid_argument);
}

TEST_CASE("subgroup representatives at q = 5", "[theorem]") {
  auto F = make_field(5, 1);
  const auto S = psl2(*F);
  const auto reps = maximal_subgroup_reps(F, S);
  REQUIRE(reps.size() == 4);
  const std::size_t want[] = {6, 15, 10, 5};
  for (std::size_t i = 0; i < 4; ++i) {
    CHECK(S.size() / reps[i].group.size() == want[i]);
    CHECK(reps[i].group.is_closed());
    for (const auto& h : reps[i].group) CHECK(S.contains(h));
  }
  CHECK(order_profile(reps[3].group) == kA4);
}

TEST_CASE("polyhedral subgroups by specialization and by scan", "[theorem]") {
  {
    auto F = make_field(7, 1);  // no i in GF(7): both need the scan
    const auto S = psl2(*F);
    const auto reps = maximal_subgroup_reps(F, S);
    CHECK(order_profile(find_case(reps, "d").group) == kA4);
    CHECK(order_profile(find_case(reps, "e").group) == kS4);
  }
  {
    auto F = make_field(3, 2);  // char 3 divides 120
    const auto S = psl2(*F);
    const auto reps = maximal_subgroup_reps(F, S);
    CHECK(order_profile(find_case(reps, "f").group) == kA5);
    CHECK(find_case(reps, "g:PSL2(3)").group.size() == 12);
    CHECK(find_case(reps, "g:PGL2(3)").group.size() == 24);
    CHECK(order_profile(find_case(reps, "g:PGL2(3)").group) == kS4);
  }
  {
    auto F = make_field(41, 1);  // everything specializes
    const auto S = triangle_subgroup(psl2(*F), 5, 60);
    REQUIRE(S);
    CHECK(order_profile(*S) == kA5);
    CHECK(order_profile(polyhedral_in_psl2(PolyKind::A5, *F, psl2(*F))) == kA5);
  }
}

TEST_CASE("nonsplit normalizer lands in SL2(q)", "[theorem]") {
  for (std::uint32_t q : {4u, 5u, 7u, 8u, 9u, 11u, 13u}) {
    auto F = field_of_order(q);
    const auto H = nonsplit_in_sl2(F);
    CHECK(H.size() == 2 * (q + 1) / (q % 2 ? 2 : 1));
    CHECK(H.is_closed());
    for (const auto& h : H) CHECK(h.det() == F->one());
  }
}

TEST_CASE("subfield subgroups", "[theorem]") {
  {
    auto F = make_field(2, 4);
    const auto reps = maximal_subgroup_reps(F, psl2(*F));
    CHECK(find_case(reps, "g:PSL2(2)").group.size() == 6);
    CHECK(order_profile(find_case(reps, "g:PSL2(4)").group) == kA5);
  }
  {
    auto F = make_field(3, 3);
    const std::set<CaseTag> g{CaseTag::G};
    const auto reps = maximal_subgroup_reps(F, psl2(*F), &g);
    REQUIRE(reps.size() == 1);  // odd exponent: no PGL2(3) inside PSL2(27)
    CHECK(reps[0].label == "g:PSL2(3)");
  }
}

TEST_CASE("coset actions", "[theorem]") {
  auto F = make_field(5, 1);
  auto S = std::make_shared<const FGroup>(psl2(*F));
  const CosetAction whole(S, *S);
  CHECK(whole.degree() == 1);

  const auto reps = maximal_subgroup_reps(F, *S);
  for (const auto& rep : reps) {
    const CosetAction act(S, rep.group);
    CHECK(act.degree() * rep.group.size() == S->size());
    // coset 0 is H and its stabilizer is H
    for (const auto& h : rep.group) CHECK(act.coset_of(S->index_of(h)) == 0);
    std::size_t stab = 0;
    for (const auto& g : *S) stab += act.act(0, g) == 0;
    CHECK(stab == rep.group.size());
    // representatives are the smallest members
    for (std::size_t c = 0; c < act.degree(); ++c) CHECK(S->index_of(act.rep(c)) == act.members(c).front());
  }
  const CosetAction natural(S, reps[0].group);
  CHECK(natural.degree() == 6);
  CHECK(natural.doubly_transitive());
  CHECK_FALSE(CosetAction(S, reps[1].group).doubly_transitive());

  const FGroup not_sub(std::vector<FMat>{fmat(*F, 1, 1, 0, 1)}, true);
  CHECK_THROWS_AS(CosetAction(S, not_sub), std::invalid_argument);
}

TEST_CASE("derangement witnesses against explicit permutations", "[theorem]") {
  for (std::uint32_t q : {5u, 7u}) {
    auto F = make_field(q, 1);
    auto S = std::make_shared<const FGroup>(psl2(*F));
    for (const auto& rep : maximal_subgroup_reps(F, *S)) {
      const CosetAction act(S, rep.group);
      for (std::size_t c = 1; c < act.degree(); ++c) {
        // oracle: first member whose full permutation has no fixed point
        std::optional<std::uint32_t> naive;
        for (auto e : act.members(c)) {
          const auto p = act.image((*S)[e]);
          bool fixed = false;
          for (std::size_t j = 0; j < p.size(); ++j) fixed |= p[j] == j;
          if (!fixed) {
            naive = e;
            break;
          }
        }
        REQUIRE(derangement_in_coset(act, c) == naive);
        REQUIRE(naive.has_value());
      }
      CHECK_THROWS_AS(derangement_in_coset(act, 0), std::invalid_argument);
    }
  }
}

TEST_CASE("trace filters", "[theorem]") {
  auto F = make_field(7, 1);
  auto S = std::make_shared<const FGroup>(psl2(*F));
  const auto reps = maximal_subgroup_reps(F, *S);
  const auto& d = find_case(reps, "d");
  const FGroup H = sl2_preimage(d.group);
  CHECK(H.size() == 24);
  for (const auto& h : H) CHECK(trace_filter(H, h).subset1);
  const CosetAction act(S, d.group);
  std::size_t fails = 0;
  for (std::size_t c = 1; c < act.degree(); ++c) fails += !trace_filter(H, act.rep(c)).subset1;
  CHECK(fails > 0);
}

TEST_CASE("theorem at small q", "[theorem]") {
  for (std::uint64_t q : {4u, 5u, 7u, 8u, 9u}) {
    const auto rep = verify_theorem(q);
    INFO("q=" << q);
    CHECK(rep.group_order == psl2_order(q));
    for (const auto& c : rep.cases) {
      INFO(c.label);
      CHECK(c.pass());
      CHECK(c.missing.empty());
      CHECK(c.index_ok());
      CHECK(c.cosets_checked == c.index - 1);
      CHECK(c.sample_witnesses.size() == std::min<std::size_t>(3, c.index - 1));
      if (c.tag == CaseTag::A) CHECK(c.doubly_transitive);
    }
  }
}

TEST_CASE("q = 9 details", "[theorem]") {
  const auto rep = verify_theorem(9);
  std::set<std::string> labels;
  for (const auto& c : rep.cases) labels.insert(c.label);
  CHECK(labels == std::set<std::string>{"a", "b", "c", "f", "g:PSL2(3)", "g:PGL2(3)"});
  for (const auto& c : rep.cases) {
    if (c.label == "f") {
      CHECK(c.index == 6);
      CHECK(c.doubly_transitive);  // A6 on 6 points
    }
    if (c.label == "b") CHECK(c.pass());
  }
}

TEST_CASE("verification is independent of the thread count", "[theorem]") {
  const std::set<CaseTag> tags{CaseTag::B, CaseTag::C};
  const auto a = verify_theorem(11, &tags, 1), b = verify_theorem(11, &tags, 4);
  REQUIRE(a.cases.size() == b.cases.size());
  for (std::size_t i = 0; i < a.cases.size(); ++i) {
    CHECK(a.cases[i].sample_witnesses == b.cases[i].sample_witnesses);
    CHECK(a.cases[i].subset1 == b.cases[i].subset1);
    CHECK(a.cases[i].subset2 == b.cases[i].subset2);
  }
}

TEST_CASE("A4 on 2-subsets", "[theorem]") {
  const auto r = intro_counterexample();
  CHECK(r.group_order == 12);
  CHECK(r.points == 6);
  CHECK(r.coset_size == 2);
  CHECK(r.derangements_in_coset == 0);
  CHECK(r.derangements == 8);  // the 3-cycles
  CHECK(r.derangements_transitive);
  CHECK(r.block_ok);
  CHECK(r.pass());
}
