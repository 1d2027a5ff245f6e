// Acceptance checks. Prints one PASS/FAIL line per criterion; exit status 0
// only when every selected criterion passes.

#include <CLI11.hpp>
#include <chrono>
#include <cstdlib>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "flagval/error.hpp"
#include "flagval/suites.hpp"

namespace {

using flagval::Report;
using flagval::RunMode;
using flagval::SuiteConfig;

struct Outcome {
  bool pass = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) pass = false;
    detail << (detail.tellp() > 0 ? "; " : "") << what << (ok ? "" : " [failed]");
  }
};

SuiteConfig make(std::string suite, std::optional<std::uint32_t> q = std::nullopt,
                 std::optional<RunMode> mode = std::nullopt, std::optional<std::uint64_t> samples = std::nullopt,
                 std::optional<std::uint64_t> seed = std::nullopt) {
  SuiteConfig c;
  c.suite = std::move(suite);
  c.q = q;
  c.mode = mode;
  c.samples = samples;
  c.seed = seed;
  return c;
}

std::string counts(const Report& r) {
  return r.suite + " q=" + r.config["q"].dump() + " " + std::to_string(r.passes) + "/" +
         std::to_string(r.cases_total) + " passed, " + std::to_string(r.violation_count) + " violations";
}

constexpr std::uint64_t kSeed = 20240611;

void criterion1(Outcome& o) {
  const Report r = flagval::run_suite(make("flag-classify", 2));
  const auto& f = r.details["by_family"];
  std::vector<std::uint64_t> by_family;
  for (const auto& [name, n] : f.items()) by_family.push_back(n.get<std::uint64_t>());
  o.require(r.ok(), counts(r));
  o.require(r.details["flag_subsets"] == 70, "70 flag subsets");
  o.require(by_family == std::vector<std::uint64_t>{7, 7, 21, 7, 7, 21}, "families " + f.dump());
}

void criterion2(Outcome& o) {
  const Report ex = flagval::run_suite(make("prop-flag-map", 2, RunMode::Exhaustive));
  o.require(ex.ok(), counts(ex) + " (exhaustive P2(F2))");
  for (std::uint32_t q : {3u, 2u}) {
    const Report s = flagval::run_suite(make("prop-flag-map", q, RunMode::Sampled, 100000, kSeed));
    o.require(s.ok(), counts(s) + " (sampled P2, P3)");
  }
}

void criterion3(Outcome& o) {
  const Report r = flagval::run_suite(make("lemma-p2", 2, RunMode::Exhaustive));
  o.require(r.ok(), counts(r));
  o.require(r.details["hypothesis_holds"].get<std::uint64_t>() > 0, "hypothesis holds in " +
                                                                         r.details["hypothesis_holds"].dump() + " cases");
}

void criterion4(Outcome& o) {
  const Report p3 = flagval::run_suite(make("collineation", 3, RunMode::Exhaustive));
  o.require(p3.ok() && p3.details["max_image_size"].get<std::uint64_t>() <= 3,
            counts(p3) + ", max image " + p3.details["max_image_size"].dump());
  const Report p2 = flagval::run_suite(make("collineation", 2, RunMode::Exhaustive));
  o.require(p2.ok() && p2.witnesses.contains("model-failure exhibited"), counts(p2) + ", failure exhibited");
}

void criterion5(Outcome& o) {
  for (std::uint32_t q : {3u, 5u}) {
    const Report r = flagval::run_suite(make("valuation-axioms", q, RunMode::Sampled, 10000, kSeed));
    o.require(r.ok(), counts(r));
  }
}

void criterion6(Outcome& o) {
  const Report r = flagval::run_suite(make("weil-inertia", 3));
  o.require(r.ok(), counts(r) + " over " + r.details["places"].dump() + " places");
}

void criterion7(Outcome& o) {
  const Report r = flagval::run_suite(make("c-pairs", 3));
  o.require(r.ok(), counts(r));
  o.require(r.witnesses["refutation"].contains("minor") && r.witnesses["refutation"]["minor"] == -1,
            "refutation " + r.witnesses["refutation"].dump());
}

void criterion8(Outcome& o) {
  for (std::uint32_t q : {3u, 5u}) {
    const Report r = flagval::run_suite(make("ktheory", q, RunMode::Sampled, 1000, kSeed));
    o.require(r.ok() && r.details["reciprocity_samples"] == 500, counts(r));
    if (q == 3) o.require(r.witnesses.contains("tame symbol {t, t-1}"), "worked example (2,1,2)");
  }
}

void criterion9(Outcome& o) {
  SuiteConfig c = make("reconstruct-roundtrip", 3, RunMode::Sampled, 60, kSeed);
  c.arena_degree = 2;
  const Report r = flagval::run_suite(c);
  o.require(r.ok(), counts(r));
}

// Each suite in its cheapest complete configuration, run with 1 and 2 workers.
void criterion10(Outcome& o) {
  std::vector<SuiteConfig> configs = {
      make("flag-classify"),
      make("prop-flag-map", 2, RunMode::Exhaustive),
      make("prop-flag-map", 3, RunMode::Sampled, 2000, kSeed),
      make("lemma-p2"),
      make("lemma-p2", 2, RunMode::Sampled, 2000, kSeed),
      make("collineation", 2),
      make("collineation", 3, RunMode::Sampled, 20000, kSeed),
      make("valuation-axioms", 3, RunMode::Sampled, 1000, kSeed),
      make("weil-inertia", 3),
      make("c-pairs", 3),
      make("ktheory", 3, RunMode::Sampled, 200, kSeed),
      make("reconstruct-roundtrip", 3, RunMode::Sampled, 20, kSeed),
  };
  configs.back().arena_degree = 1;
  for (const auto& c : configs) {
    ::setenv("FLAGVAL_THREADS", "1", 1);
    const std::string a = flagval::run_suite(c).to_json().dump();
    ::setenv("FLAGVAL_THREADS", "2", 1);
    const std::string b = flagval::run_suite(c).to_json().dump();
    ::unsetenv("FLAGVAL_THREADS");
    if (a != b) o.require(false, c.suite + " differs between runs");
  }
  o.require(o.pass, std::to_string(configs.size()) + " configurations byte-identical");
}

struct Criterion {
  int id;
  double limit_s;
  std::function<void(Outcome&)> run;
};

const std::vector<Criterion> kCriteria = {
    {1, 1, criterion1},    {2, 60, criterion2},   {3, 120, criterion3}, {4, 600, criterion4},
    {5, 60, criterion5},   {6, 60, criterion6},   {7, 60, criterion7},  {8, 60, criterion8},
    {9, 300, criterion9},  {10, 600, criterion10},
};

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagval acceptance checks"};
  int only = 0;
  app.add_option("--criterion", only, "Run a single criterion (1-10)")->check(CLI::Range(1, 10));
  CLI11_PARSE(app, argc, argv);

  bool all_pass = true;
  for (const auto& c : kCriteria) {
    if (only != 0 && c.id != only) continue;
    Outcome o;
    const auto start = std::chrono::steady_clock::now();
    try {
      c.run(o);
    } catch (const flagval::Error& e) {
      o.require(false, std::string("error: ") + e.what());
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    std::ostringstream time;
    time.precision(2);
    time << std::fixed << secs << " s, limit " << c.limit_s << " s";
    o.require(secs < c.limit_s, time.str());
    std::cout << "criterion " << c.id << ": " << (o.pass ? "PASS" : "FAIL") << " " << o.detail.str() << "\n";
    all_pass = all_pass && o.pass;
  }
  return all_pass ? 0 : 1;
}
