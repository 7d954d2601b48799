// JSON reports for every verifier. The text output of the CLI is derived
// from these documents. Timings live under "elapsed_ms" keys only, so
// strip_timing() leaves a document that is identical across runs.
#pragma once

#include <chrono>
#include <cstdint>
#include <optional>
#include <set>
#include <sstream>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "cosetder/curve.hpp"
#include "cosetder/lemmata.hpp"
#include "cosetder/polyhedral.hpp"
#include "cosetder/theorem.hpp"

namespace cosetder {

using Json = nlohmann::ordered_json;

inline constexpr int kSchemaVersion = 1;

struct RunConfig {
  std::string command = "all";
  std::optional<std::vector<std::uint64_t>> qs;  // prime powers; defaults per command otherwise
  std::set<CaseTag> cases;                        // empty: all
  std::optional<PolyKind> kind;
  std::optional<std::vector<long long>> single;   // f coefficients, highest degree first
  bool intro_only = false;
  unsigned jobs = 1;
  std::size_t cap = kDefaultPslCap;
  std::uint64_t seed = 42;
  std::size_t samples = 2000;
};

/// Prime powers in [lo, hi].
inline std::vector<std::uint64_t> prime_powers_between(std::uint64_t lo, std::uint64_t hi) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t q = lo; q <= hi; ++q)
    if (is_prime_power(q)) out.push_back(q);
  return out;
}

namespace detail {

class Stopwatch {
 public:
  long long ms() const {
    return std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - t0_).count();
  }

 private:
  std::chrono::steady_clock::time_point t0_ = std::chrono::steady_clock::now();
};

inline Json set_json(const std::set<std::uint64_t>& s) {
  Json a = Json::array();
  for (auto x : s) a.push_back(x);
  return a;
}

inline std::string upoly_string(const UPoly<NFElem>& p) { return p.to_string("Z"); }

}  // namespace detail

// ---------------------------------------------------------------------------

inline Json report_trace_identities(const RunConfig& cfg) {
  detail::Stopwatch sw;
  std::vector<PolyKind> kinds{PolyKind::A4, PolyKind::S4, PolyKind::A5};
  if (cfg.kind) kinds = {*cfg.kind};
  auto wanted = [&](PolyKind k) { return std::find(kinds.begin(), kinds.end(), k) != kinds.end(); };

  Json out;
  out["catalan"] = Json::array();
  for (unsigned m = 0; m < 5; ++m) out["catalan"].push_back(catalan(m));
  bool pass = true;
  std::size_t positive = 0, negative = 0;
  Json cases = Json::array();
  auto run = [&](const TraceIdentityCase& tc, bool expect_equal) {
    const auto r = trace_identity_check(tc, nullptr, cfg.jobs);
    const bool ok = r.as_predicted();
    pass = pass && ok;
    (expect_equal ? positive : negative) += ok;
    cases.push_back({{"kind", to_string(r.kind)},
                     {"m", r.m},
                     {"order", r.order},
                     {"catalan", r.catalan},
                     {"expected_coefficient", r.expected_coefficient()},
                     {"expect", expect_equal ? "equal" : "unequal"},
                     {"equal", r.equal},
                     {"proportional", r.proportional},
                     {"lhs_minus_rhs_terms", r.diff_terms},
                     {"lhs_terms", r.lhs_terms},
                     {"dyadic", r.dyadic},
                     {"as_predicted", ok}});
  };
  for (const auto& tc : identity_cases())
    if (wanted(tc.kind)) run(tc, true);
  for (const auto& tc : negative_cases())
    if (wanted(tc.kind)) run(tc, false);
  out["cases"] = cases;
  out["positive_confirmed"] = positive;
  out["negative_confirmed"] = negative;

  Json products = Json::array(), sums = Json::array();
  for (auto k : kinds) {
    const auto p = product_trace_poly(k);
    const bool ok = p == expected_product_poly(k);
    pass = pass && ok;
    products.push_back({{"kind", to_string(k)},
                        {"computed", detail::upoly_string(p)},
                        {"expected", detail::upoly_string(expected_product_poly(k))},
                        {"equal", ok}});
    const auto s = polyhedral_sum_check(k, cfg.jobs);
    pass = pass && s.equal;
    sums.push_back({{"kind", to_string(k)},
                    {"order", s.order},
                    {"lhs_terms", s.lhs_terms},
                    {"reduced", s.reduced.to_string({"a", "b", "c", "d"})},
                    {"equal", s.equal}});
  }
  out["products"] = products;
  out["sums"] = sums;
  out["pass"] = pass;
  out["elapsed_ms"] = sw.ms();
  return out;
}

// ---------------------------------------------------------------------------

inline const std::set<std::uint64_t>& expected_split_exceptions() {
  static const std::set<std::uint64_t> s{3, 5, 7, 9, 11};
  return s;
}
inline const std::set<std::uint64_t>& expected_nonsplit_exceptions() {
  static const std::set<std::uint64_t> s{3, 5, 7, 9, 13};
  return s;
}

/// Known exceptions are only listed up to this q; beyond it none are
/// expected.
inline constexpr std::uint64_t kExceptionListBound = 19;

inline Json report_lemmata(const RunConfig& cfg) {
  detail::Stopwatch sw;
  std::vector<std::uint64_t> qs = cfg.qs.value_or(prime_powers_between(3, 19));
  std::set<std::uint64_t> split_ex, nonsplit_ex, want_split, want_nonsplit;
  for (auto q : qs) {
    if (q < 3) throw std::invalid_argument("lemmata need q >= 3");
    if (expected_split_exceptions().count(q)) want_split.insert(q);
    if (expected_nonsplit_exceptions().count(q)) want_nonsplit.insert(q);
  }
  bool pass = true;
  Json per_q = Json::array();
  for (auto q : qs) {
    const FieldPtr F = field_of_order(q);
    const auto qe = quadratic_extension(F);
    Json e;
    e["q"] = q;
    const auto sl = check_split_lemma(*F);
    const auto nl = check_nonsplit_lemma(qe);
    e["split_lemma_exceptions"] = sl.size();
    e["nonsplit_lemma_exceptions"] = nl.size();
    if (!sl.empty()) split_ex.insert(q);
    if (!nl.empty()) nonsplit_ex.insert(q);
    if (q >= 4) {
      const auto sc = check_split_corollary(*F, cfg.jobs);
      e["split_corollary"] = {{"tuples", sc.tuples},
                              {"hypothesis", sc.hypothesis},
                              {"branch_b", sc.branch_b},
                              {"violations", sc.violations.size()},
                              {"pass", sc.pass()}};
      pass = pass && sc.pass();
      Json readings;
      for (auto rd : {NonsplitReading::OverN, NonsplitReading::OverFq, NonsplitReading::OverNWithZero}) {
        const auto nc = check_nonsplit_corollary(qe, rd, cfg.jobs);
        readings[to_string(rd)] = {{"pairs", nc.pairs},
                                   {"hypothesis", nc.hypothesis},
                                   {"violations", nc.violations.size()},
                                   {"pass", nc.pass()}};
        if (rd == NonsplitReading::OverN) pass = pass && nc.pass();
      }
      e["nonsplit_corollary"] = readings;
      if (q > kExceptionListBound) {
        const auto sm = sample_nonsplit_corollary(qe, cfg.samples, cfg.seed);
        e["nonsplit_sampled"] = {{"samples", sm.samples},
                                 {"seed", cfg.seed},
                                 {"hypothesis", sm.hypothesis},
                                 {"violations", sm.violations},
                                 {"pass", sm.pass()}};
        pass = pass && sm.pass();
      }
    }
    if (q % 2) {
      const auto cy = cayley_check(qe);
      e["cayley"] = cy.pass();
      pass = pass && cy.pass();
      bool bound_ok = true;
      for (const auto& w : nl) bound_ok = bound_ok && nonsplit_point_bound(qe, w.a).pass();
      e["point_bound"] = bound_ok;
      pass = pass && bound_ok;
    }
    per_q.push_back(e);
  }
  const auto pq = pq_identity_check();
  pass = pass && pq.pass();
  const bool split_match = split_ex == want_split, nonsplit_match = nonsplit_ex == want_nonsplit;
  pass = pass && split_match && nonsplit_match;

  Json out;
  out["q_values"] = qs;
  out["split_exceptions"] = detail::set_json(split_ex);
  out["split_exceptions_expected"] = detail::set_json(want_split);
  out["nonsplit_exceptions"] = detail::set_json(nonsplit_ex);
  out["nonsplit_exceptions_expected"] = detail::set_json(want_nonsplit);
  out["pq_identities"] = {{"disc_p", pq.disc_p}, {"disc_q", pq.disc_q}, {"resultant", pq.resultant}};
  out["per_q"] = per_q;
  out["pass"] = pass;
  out["elapsed_ms"] = sw.ms();
  return out;
}

// ---------------------------------------------------------------------------

inline Json transform_log_json(const TransformLog& log) {
  Json a = Json::array();
  for (const auto& s : log.steps) a.push_back({{"step", to_string(s.kind)}, {"param", s.param}, {"delta", s.delta}});
  return a;
}

/// One curve y^2 = f(x), coefficients highest degree first.
inline Json report_single_curve(std::uint64_t q, const std::vector<long long>& coeffs) {
  const FieldPtr F = field_of_order(q);
  require_odd(*F);
  std::vector<long long> low(coeffs.rbegin(), coeffs.rend());
  const FPoly f = FPoly::from_ints(*F, low);
  const SquareRoots sq(*F);
  Json out;
  out["q"] = q;
  out["f"] = f.to_string("x");
  out["count"] = count_affine_points(f, sq);
  bool pass = true;
  if (f.degree() >= 1 && is_separable(f)) {
    const auto h = hasse_check(f, sq);
    out["hasse"] = {{"within_bound", h.within_bound}, {"within_cubic", h.within_cubic}, {"pass", h.pass()}};
    pass = h.pass();
  } else {
    out["hasse"] = nullptr;
  }
  if (f.degree() == 4 && is_separable(f)) {
    const auto red = reduce_quartic(QuarticCurve(f));
    if (red) {
      const auto& [r, log] = *red;
      const auto cr = verify_correspondence(r, sq);
      out["reduced"] = {{"a", r.a}, {"b", r.b}, {"c", r.c}, {"f", r.f().to_string("x")}};
      out["chain"] = transform_log_json(log);
      out["count_reduced"] = count_affine_points(r.f(), sq);
      out["count_e"] = cr.count_e;
      out["correspondence"] = cr.pass();
      pass = pass && cr.pass();
    } else {
      out["reduced"] = nullptr;
    }
  }
  out["pass"] = pass;
  return out;
}

inline Json report_curves(const RunConfig& cfg) {
  detail::Stopwatch sw;
  Json out;
  bool pass = true;
  const auto disc = curve_discriminant_identity();
  out["disc_identity"] = disc.equal();
  pass = pass && disc.equal();

  // y^2 = 3x^4 + 1 over GF(5)
  const auto flag = report_single_curve(5, {3, 0, 0, 0, 1});
  const bool sharp = flag["count"] == 10 && !below_sqrt_bound(10, 5, 0) && below_sqrt_bound(10, 5, 1);
  out["hasse_sharpness"] = {{"count", flag["count"]},
                            {"above_q_plus_2sqrtq", !below_sqrt_bound(10, 5, 0)},
                            {"within_q_plus_1_plus_2sqrtq", below_sqrt_bound(10, 5, 1)},
                            {"pass", sharp}};
  pass = pass && sharp;

  if (cfg.single) {
    if (!cfg.qs || cfg.qs->size() != 1) throw std::invalid_argument("--single needs exactly one --q");
    const auto s = report_single_curve(cfg.qs->front(), *cfg.single);
    out["single"] = s;
    pass = pass && s["pass"].get<bool>();
  } else {
    std::vector<std::uint64_t> qs;
    for (auto q : cfg.qs.value_or(prime_powers_between(3, 13)))
      if (q % 2) qs.push_back(q);
    if (qs.empty()) throw std::invalid_argument("curves need odd q");
    Json sweep = Json::array();
    for (auto q : qs) {
      const FieldPtr F = field_of_order(q);
      const SquareRoots sq(*F);
      const auto curves = separable_reduced_quartics(*F);
      std::vector<std::size_t> bad(curves.size(), 0);
      std::vector<char> hasse_bad(curves.size(), 0);
      parallel_for(curves.size(), cfg.jobs, [&](std::size_t i) {
        bad[i] = !verify_correspondence(curves[i], sq).pass();
        hasse_bad[i] = !hasse_check(curves[i].f(), sq).pass() || !hasse_check(WeierstrassCubic(curves[i]).g(), sq).pass();
      });
      std::size_t nbad = 0, nhasse = 0;
      for (std::size_t i = 0; i < curves.size(); ++i) nbad += bad[i], nhasse += hasse_bad[i];
      sweep.push_back({{"q", q},
                       {"curves", curves.size()},
                       {"correspondence_failures", nbad},
                       {"hasse_failures", nhasse},
                       {"pass", nbad == 0 && nhasse == 0}});
      pass = pass && nbad == 0 && nhasse == 0;
    }
    out["sweep"] = sweep;
  }
  out["pass"] = pass;
  out["elapsed_ms"] = sw.ms();
  return out;
}

// ---------------------------------------------------------------------------

inline Json intro_json() {
  const auto r = intro_counterexample();
  return {{"group_order", r.group_order},
          {"points", r.points},
          {"coset_size", r.coset_size},
          {"derangements_in_coset", r.derangements_in_coset},
          {"derangements", r.derangements},
          {"derangements_transitive", r.derangements_transitive},
          {"block", r.block},
          {"block_ok", r.block_ok},
          {"pass", r.pass()}};
}

inline Json case_json(const CaseReport& c, long long elapsed) {
  Json w = Json::array();
  for (const auto& m : c.sample_witnesses) w.push_back(m.to_string());
  return {{"case", c.label},
          {"subgroup_order", c.subgroup_order},
          {"index", c.index},
          {"expected_index", c.expected_index ? Json(*c.expected_index) : Json(nullptr)},
          {"cosets_checked", c.cosets_checked},
          {"missing", c.missing},
          {"all_pass", c.pass()},
          {"sample_witnesses", w},
          {"witnesses_valid", c.witnesses_valid},
          {"trace_filter", {{"subset1", c.subset1}, {"subset2", c.subset2}, {"consistent", c.filter_consistent}}},
          {"derangements_transitive", c.derangements_transitive},
          {"doubly_transitive", c.doubly_transitive},
          {"elapsed_ms", elapsed}};
}

inline Json report_theorem(const RunConfig& cfg) {
  detail::Stopwatch sw;
  Json out;
  const Json intro = intro_json();
  out["intro"] = intro;
  bool pass = intro["pass"].get<bool>();
  if (!cfg.intro_only) {
    std::vector<std::uint64_t> qs;
    for (auto q : cfg.qs.value_or(prime_powers_between(4, 13)))
      if (q >= 4) qs.push_back(q);
    if (qs.empty()) throw std::invalid_argument("theorem needs q >= 4");
    const std::set<CaseTag>* tags = cfg.cases.empty() ? nullptr : &cfg.cases;
    Json per_q = Json::array();
    for (auto q : qs) {
      const FieldPtr F = field_of_order(q);
      auto S = std::make_shared<const FGroup>(psl2(*F, cfg.cap));
      Json cases = Json::array();
      for (const auto& rep : maximal_subgroup_reps(F, *S, tags)) {
        detail::Stopwatch cw;
        const CosetAction act(S, rep.group);
        const auto c = check_action(q, rep, act, cfg.jobs);
        pass = pass && c.pass();
        cases.push_back(case_json(c, cw.ms()));
      }
      per_q.push_back({{"q", q}, {"group_order", S->size()}, {"cases", cases}});
    }
    out["per_q"] = per_q;
  }
  out["pass"] = pass;
  out["elapsed_ms"] = sw.ms();
  return out;
}

// ---------------------------------------------------------------------------

inline Json config_json(const RunConfig& cfg) {
  Json c;
  c["command"] = cfg.command;
  c["q"] = cfg.qs ? Json(*cfg.qs) : Json(nullptr);
  std::string cases;
  for (auto t : cfg.cases) cases += tag_char(t);
  c["cases"] = cases.empty() ? Json(nullptr) : Json(cases);
  c["kind"] = cfg.kind ? Json(to_string(*cfg.kind)) : Json(nullptr);
  c["single"] = cfg.single ? Json(*cfg.single) : Json(nullptr);
  c["intro_only"] = cfg.intro_only;
  c["cap"] = cfg.cap;
  c["seed"] = cfg.seed;
  return c;  // jobs left out: it must not change the report
}

inline Json run_report(const RunConfig& cfg) {
  Json out;
  out["schema"] = kSchemaVersion;
  out["config"] = config_json(cfg);
  const bool all = cfg.command == "all";
  if (!all && cfg.command != "trace-identities" && cfg.command != "lemmata" && cfg.command != "curves" &&
      cfg.command != "theorem")
    throw std::invalid_argument("unknown command: " + cfg.command);
  bool pass = true;
  auto add = [&](const char* key, Json j) {
    pass = pass && j["pass"].get<bool>();
    out[key] = std::move(j);
  };
  if (all || cfg.command == "trace-identities") add("trace_identities", report_trace_identities(cfg));
  if (all || cfg.command == "lemmata") add("lemmata", report_lemmata(cfg));
  if (all || cfg.command == "curves") add("curves", report_curves(cfg));
  if (all || cfg.command == "theorem") add("theorem", report_theorem(cfg));
  out["pass"] = pass;
  return out;
}

/// Copy without any "elapsed_ms" member.
inline Json strip_timing(const Json& j) {
  if (j.is_object()) {
    Json o = Json::object();
    for (const auto& [k, v] : j.items())
      if (k != "elapsed_ms") o[k] = strip_timing(v);
    return o;
  }
  if (j.is_array()) {
    Json a = Json::array();
    for (const auto& v : j) a.push_back(strip_timing(v));
    return a;
  }
  return j;
}

// ---------------------------------------------------------------------------
// text summary

namespace detail {

inline const char* verdict(const Json& j) { return j.value("pass", false) ? "PASS" : "FAIL"; }

inline std::string join_ints(const Json& a) {
  std::string s = "{";
  for (std::size_t i = 0; i < a.size(); ++i) s += (i ? "," : "") + a[i].dump();
  return s + "}";
}

}  // namespace detail

inline std::string text_summary(const Json& r) {
  std::ostringstream o;
  if (r.contains("trace_identities")) {
    const auto& t = r["trace_identities"];
    o << "trace-identities: " << detail::verdict(t) << "\n";
    for (const auto& c : t["cases"])
      o << "  " << c["kind"].get<std::string>() << " m=" << c["m"] << " coefficient " << c["expected_coefficient"]
        << ": " << (c["equal"].get<bool>() ? "equal" : "unequal") << " (expected "
        << c["expect"].get<std::string>() << ")\n";
    for (const auto& p : t["products"])
      o << "  product " << p["kind"].get<std::string>() << ": " << p["computed"].get<std::string>() << "\n";
    for (const auto& s : t["sums"])
      o << "  sum " << s["kind"].get<std::string>() << " = " << s["reduced"].get<std::string>() << " mod det-1\n";
  }
  if (r.contains("lemmata")) {
    const auto& l = r["lemmata"];
    o << "lemmata: " << detail::verdict(l) << "\n";
    o << "  split exceptions " << detail::join_ints(l["split_exceptions"]) << ", expected "
      << detail::join_ints(l["split_exceptions_expected"]) << "\n";
    o << "  nonsplit exceptions " << detail::join_ints(l["nonsplit_exceptions"]) << ", expected "
      << detail::join_ints(l["nonsplit_exceptions_expected"]) << "\n";
    for (const auto& e : l["per_q"]) {
      o << "  q=" << e["q"];
      if (e.contains("split_corollary"))
        o << " split corollary " << detail::verdict(e["split_corollary"]) << ", nonsplit corollary "
          << detail::verdict(e["nonsplit_corollary"]["r-in-N"]);
      o << "\n";
    }
  }
  if (r.contains("curves")) {
    const auto& c = r["curves"];
    o << "curves: " << detail::verdict(c) << "\n";
    o << "  disc(f) = disc(g): " << (c["disc_identity"].get<bool>() ? "yes" : "no") << "\n";
    o << "  y^2 = 3x^4+1 over GF(5): " << c["hasse_sharpness"]["count"] << " points, "
      << detail::verdict(c["hasse_sharpness"]) << "\n";
    if (c.contains("sweep"))
      for (const auto& s : c["sweep"])
        o << "  q=" << s["q"] << ": " << s["curves"] << " curves, " << detail::verdict(s) << "\n";
    if (c.contains("single")) {
      const auto& s = c["single"];
      o << "  single y^2 = " << s["f"].get<std::string>() << " over GF(" << s["q"] << "): " << s["count"]
        << " points, " << detail::verdict(s) << "\n";
    }
  }
  if (r.contains("theorem")) {
    const auto& t = r["theorem"];
    o << "theorem: " << detail::verdict(t) << "\n";
    const auto& in = t["intro"];
    o << "  A4 on 2-subsets: " << in["derangements_in_coset"] << " derangements in the coset {1,2}->{3,4}"
      << (in["pass"].get<bool>() ? ", confirmed" : ", NOT confirmed") << "\n";
    if (t.contains("per_q"))
      for (const auto& e : t["per_q"])
        for (const auto& c : e["cases"])
          o << "  q=" << e["q"] << " case " << c["case"].get<std::string>() << ": index " << c["index"] << ", "
            << c["cosets_checked"] << " cosets, " << c["missing"].size() << " missing, trace filter "
            << c["trace_filter"]["subset1"] << "/" << c["trace_filter"]["subset2"] << ", "
            << (c["all_pass"].get<bool>() ? "PASS" : "FAIL") << "\n";
  }
  o << "overall: " << detail::verdict(r) << "\n";
  return o.str();
}

}  // namespace cosetder
