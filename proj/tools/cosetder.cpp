// cosetder: command-line driver for the verifiers.
//
//   cosetder trace-identities [--kind 2A5]
//   cosetder lemmata [--q-min 3 --q-max 19]
//   cosetder curves [--q 3..13 | --q 5 --single 3,0,0,0,1]
//   cosetder theorem [--q 4..13] [--case b] [--intro]
//   cosetder all
//
// Exit status: 0 all checks as predicted, 1 mathematical mismatch,
// 2 configuration or resource error.
#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "cosetder/report.hpp"

namespace {

using namespace cosetder;

struct ConfigError : std::runtime_error {
  using std::runtime_error::runtime_error;
};

std::uint64_t parse_u64(const std::string& s) {
  std::size_t pos = 0;
  unsigned long long v = 0;
  try {
    v = std::stoull(s, &pos);
  } catch (const std::exception&) {
    throw ConfigError("not a number: " + s);
  }
  if (pos != s.size()) throw ConfigError("not a number: " + s);
  return v;
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::stringstream ss(s);
  for (std::string item; std::getline(ss, item, sep);)
    if (!item.empty()) out.push_back(item);
  return out;
}

// "9", "4..13" or "4,8,9"
std::vector<std::uint64_t> parse_q(const std::string& s) {
  std::vector<std::uint64_t> out;
  if (auto dots = s.find(".."); dots != std::string::npos) {
    const auto lo = parse_u64(s.substr(0, dots)), hi = parse_u64(s.substr(dots + 2));
    if (lo > hi) throw ConfigError("empty q range " + s);
    out = prime_powers_between(lo, hi);
    if (out.empty()) throw ConfigError("no prime powers in " + s);
    return out;
  }
  for (const auto& part : split(s, ',')) {
    const auto q = parse_u64(part);
    if (!is_prime_power(q)) throw ConfigError(part + " is not a prime power");
    out.push_back(q);
  }
  if (out.empty()) throw ConfigError("empty --q");
  return out;
}

std::set<CaseTag> parse_cases(const std::string& s) {
  std::set<CaseTag> out;
  for (char c : s) {
    if (c == ',') continue;
    if (c < 'a' || c > 'g') throw ConfigError(std::string("unknown case '") + c + "'");
    out.insert(parse_case_tag(c));
  }
  return out;
}

std::vector<long long> parse_coeffs(const std::string& s) {
  std::vector<long long> out;
  for (const auto& part : split(s, ',')) {
    try {
      std::size_t pos = 0;
      out.push_back(std::stoll(part, &pos));
      if (pos != part.size()) throw ConfigError("bad coefficient " + part);
    } catch (const std::logic_error&) {
      throw ConfigError("bad coefficient " + part);
    }
  }
  if (out.empty()) throw ConfigError("empty --single");
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Brute-force and symbolic checks for derangements in cosets of PSL2(q) subgroups"};
  app.require_subcommand(1, 1);
  app.fallthrough();

  std::string q, cases, kind, single, format = "text", out_path;
  std::uint64_t q_min = 0, q_max = 0, seed = 42;
  unsigned jobs = default_jobs();
  std::size_t cap = kDefaultPslCap, samples = 2000;
  bool intro = false;

  app.add_option("--q", q, "q value, list (4,8,9) or range (4..13)");
  app.add_option("--q-min", q_min, "lower end of the q range");
  app.add_option("--q-max", q_max, "upper end of the q range");
  app.add_option("--case", cases, "theorem cases, letters a-g");
  app.add_option("--kind", kind, "trace identities for one group: 2A4, 2S4, 2A5");
  app.add_option("--single", single, "curves: coefficients of f, highest degree first");
  app.add_option("--format", format, "json or text")->check(CLI::IsMember({"json", "text"}));
  app.add_option("--out", out_path, "write the report here instead of stdout");
  app.add_option("--jobs", jobs, "worker threads")->check(CLI::PositiveNumber);
  app.add_option("--cap", cap, "largest |PSL2(q)| to enumerate")->check(CLI::PositiveNumber);
  app.add_option("--seed", seed, "seed for sampled spot checks");
  app.add_option("--samples", samples, "sample count for spot checks")->check(CLI::PositiveNumber);
  app.add_flag("--intro", intro, "theorem: only the A4 example");

  for (const char* name : {"trace-identities", "lemmata", "curves", "theorem", "all"}) app.add_subcommand(name);

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int rc = app.exit(e);
    return rc == 0 ? 0 : 2;
  }

  RunConfig cfg;
  try {
    cfg.command = app.get_subcommands().front()->get_name();
    if (!q.empty() && (q_min || q_max)) throw ConfigError("use either --q or --q-min/--q-max");
    if (!q.empty()) cfg.qs = parse_q(q);
    if (q_min || q_max) {
      if (!q_min || !q_max) throw ConfigError("--q-min and --q-max go together");
      cfg.qs = parse_q(std::to_string(q_min) + ".." + std::to_string(q_max));
    }
    cfg.cases = parse_cases(cases);
    if (!kind.empty()) cfg.kind = parse_poly_kind(kind);
    if (!single.empty()) cfg.single = parse_coeffs(single);
    cfg.intro_only = intro;
    cfg.jobs = jobs;
    cfg.cap = cap;
    cfg.seed = seed;
    cfg.samples = samples;
  } catch (const std::exception& e) {
    std::cerr << "cosetder: " << e.what() << "\n";
    return 2;
  }

  Json report;
  try {
    report = run_report(cfg);
  } catch (const std::invalid_argument& e) {
    std::cerr << "cosetder: " << e.what() << "\n";
    return 2;
  } catch (const std::length_error& e) {
    std::cerr << "cosetder: " << e.what() << "\n";
    return 2;
  } catch (const std::bad_alloc&) {
    std::cerr << "cosetder: out of memory\n";
    return 2;
  } catch (const std::exception& e) {
    std::cerr << "cosetder: " << e.what() << "\n";
    return 1;
  }

  const std::string text = format == "json" ? report.dump(2) + "\n" : text_summary(report);
  if (out_path.empty()) {
    std::cout << text;
  } else {
    std::ofstream f(out_path);
    if (!f || !(f << text)) {
      std::cerr << "cosetder: cannot write " << out_path << "\n";
      return 2;
    }
  }
  return report["pass"].get<bool>() ? 0 : 1;
}
