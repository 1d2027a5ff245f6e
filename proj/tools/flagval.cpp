// flagval: runs the verification suites and single reconstructions.
//
// Exit codes: 0 no violations, 1 violations found, 2 invalid configuration.
// Command-line syntax errors use CLI11's exit codes.

#include <CLI11.hpp>
#include <cstdint>
#include <fstream>
#include <iostream>
#include <optional>
#include <string>

#include "flagval/arena.hpp"
#include "flagval/error.hpp"
#include "flagval/milnor.hpp"
#include "flagval/psi.hpp"
#include "flagval/reconstruct.hpp"
#include "flagval/rng.hpp"
#include "flagval/suites.hpp"

namespace {

using json = nlohmann::ordered_json;

struct Common {
  std::optional<std::uint32_t> q;
  std::optional<std::string> mode;
  std::optional<std::uint64_t> seed;
  std::optional<int> arena_degree;
  std::optional<std::uint64_t> samples;
  std::string out;
  bool timing = false;
};

void add_common(CLI::App* cmd, Common& c, bool with_arena) {
  cmd->add_option("--q,--p", c.q, "Field order q (or the prime p)");
  cmd->add_option("--mode", c.mode, "exhaustive or sampled")->check(CLI::IsMember({"exhaustive", "sampled"}));
  cmd->add_option("--seed", c.seed, "RNG seed (required in sampled mode)");
  if (with_arena) cmd->add_option("--arena-deg", c.arena_degree, "Arena degree bound");
  cmd->add_option("--samples", c.samples, "Sample count in sampled mode");
  cmd->add_option("--out", c.out, "Write the JSON report here instead of stdout");
  cmd->add_flag("--timing", c.timing, "Include elapsed_ms (reports are then not byte-identical)");
}

void emit(const json& j, const std::string& path) {
  if (path.empty()) {
    std::cout << j.dump(2) << "\n";
    return;
  }
  std::ofstream f(path);
  if (!f) throw flagval::Error(flagval::ErrorCode::InvalidConfig, "cannot write " + path);
  f << j.dump(2) << "\n";
}

int finish(const flagval::Report& r, const std::string& out) {
  emit(r.to_json(), out);
  std::cerr << r.suite << ": " << r.cases_total << " cases, " << r.passes << " passed, " << r.violation_count
            << " violations\n";
  return r.ok() ? 0 : 1;
}

int run(const std::string& suite, const Common& c) {
  flagval::SuiteConfig cfg;
  cfg.suite = suite;
  cfg.q = c.q;
  if (c.mode) cfg.mode = flagval::parse_run_mode(*c.mode);
  cfg.seed = c.seed;
  cfg.arena_degree = c.arena_degree;
  cfg.samples = c.samples;
  cfg.timing = c.timing;
  return finish(flagval::run_suite(cfg), c.out);
}

// Single randomized K-theory check outside the full suite.
int ktheory_check(const std::string& check, const Common& c) {
  using namespace flagval;
  if (!c.seed) throw Error(ErrorCode::InvalidConfig, "ktheory checks are sampled; pass --seed");
  const std::uint32_t q = c.q.value_or(3);
  const FunctionField kt = FunctionField::parse("F" + std::to_string(q) + "(t)");
  const std::uint64_t n = c.samples.value_or(500);
  Report r;
  r.suite = "ktheory:" + check;
  r.config = json{{"q", q}, {"mode", "sampled"}, {"seed", *c.seed}, {"arena_deg", nullptr}, {"samples", n}};
  // Numerator and denominator of degree <= 4.
  auto draw = [&](std::mt19937_64& rng) {
    auto poly = [&] {
      std::vector<Elem> coeffs(5);
      for (auto& x : coeffs) x = static_cast<Elem>(uniform_below(rng, kt.field().order()));
      return Poly::from_dense(kt.field(), coeffs);
    };
    for (;;) {
      Poly num = poly();
      Poly den = poly();
      if (num.is_zero() || den.is_zero()) continue;
      RatFn f(std::move(num), std::move(den));
      if (!f.is_one()) return f;
    }
  };
  for (std::uint64_t i = 0; i < n; ++i) {
    auto rng = item_rng(*c.seed, i);
    const RatFn f = draw(rng);
    bool ok = true;
    json w{{"f", to_string(f)}};
    if (check == "steinberg") {
      ok = steinberg_check(f);
    } else {
      const RatFn g = draw(rng);
      w["g"] = to_string(g);
      ok = weil_reciprocity_check(f, g);
    }
    ++r.cases_total;
    if (ok) ++r.passes;
    else r.add_violation(std::move(w));
  }
  return finish(r, c.out);
}

int reconstruct(const std::string& source, const std::string& psi_spec, int arena_degree, std::uint64_t samples,
                std::uint64_t seed, const std::string& out) {
  using namespace flagval;
  const FunctionField k = FunctionField::parse(source);
  const Arena arena(k, arena_degree);
  const PsiMap psi = PsiMap::parse(psi_spec, k);
  ReconstructionConfig rc;
  rc.seed = seed;
  const ReconstructionResult res = extract_valuation(psi, arena, rc);
  json j{{"source", source}, {"psi", psi_spec}};
  j.update(to_json(res, arena));
  bool ok = res.checks.passed();
  if (res.valuation()) {
    const ConclusionChecks cc = verify_theorem_conclusions(res, psi, arena, samples, seed);
    j["conclusion_checks"] = to_json(cc);
    ok = ok && cc.passed();
  } else {
    j["conclusion_checks"] = nullptr;
  }
  emit(j, out);
  std::cerr << "reconstruct " << psi_spec << ": " << j["verdict"].get<std::string>()
            << (ok ? "" : " (checks failed)") << "\n";
  return ok ? 0 : 1;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"flagval: flag maps, valuations and reconstruction experiments"};
  app.require_subcommand(1);
  app.set_version_flag("--version", std::string(flagval::library_version()));

  Common run_opts;
  std::string suite;
  auto* run_cmd = app.add_subcommand("run", "Run a named verification suite");
  run_cmd->add_option("--suite", suite, "Suite name (see `flagval list`)")->required();
  add_common(run_cmd, run_opts, true);

  Common sweep_opts;
  std::string sweep_check;
  auto* sweep_cmd = app.add_subcommand("sweep", "Flag-map sweeps: flag-classify, prop-flag-map, lemma-p2");
  sweep_cmd->add_option("--check", sweep_check, "Sweep to run")
      ->required()
      ->check(CLI::IsMember({"flag-classify", "prop-flag-map", "lemma-p2"}));
  add_common(sweep_cmd, sweep_opts, false);

  Common col_opts;
  auto* col_cmd = app.add_subcommand("collineation", "Collineation model P2(F_p) -> A2(F_2)");
  add_common(col_cmd, col_opts, false);

  Common kt_opts;
  std::string kt_check = "all";
  auto* kt_cmd = app.add_subcommand("ktheory", "Tame symbols, Steinberg relation, Weil reciprocity");
  kt_cmd->add_option("--check", kt_check, "all, steinberg or reciprocity")
      ->check(CLI::IsMember({"all", "steinberg", "reciprocity"}));
  add_common(kt_cmd, kt_opts, false);

  std::string source = "F3(x,y)";
  std::string psi_spec;
  int rec_degree = 2;
  std::uint64_t rec_samples = 60;
  std::uint64_t rec_seed = 1;
  std::string report;
  auto* rec_cmd = app.add_subcommand("reconstruct", "Extract a valuation from a multiplicative map psi");
  rec_cmd->add_option("--source", source, "Source function field, e.g. F3(x,y)");
  rec_cmd->add_option("--psi", psi_spec,
                      "identity | from-valuation:<place> | from-valuation-twisted:<place> | valuation-map:<place>")
      ->required();
  rec_cmd->add_option("--arena-deg", rec_degree, "Arena degree bound");
  rec_cmd->add_option("--samples", rec_samples, "Samples for the conclusion checks");
  rec_cmd->add_option("--seed", rec_seed, "Seed for sampled checks");
  rec_cmd->add_option("--report", report, "Write the JSON report here instead of stdout");

  auto* list_cmd = app.add_subcommand("list", "List suite names");

  CLI11_PARSE(app, argc, argv);

  try {
    if (*run_cmd) return run(suite, run_opts);
    if (*sweep_cmd) return run(sweep_check, sweep_opts);
    if (*col_cmd) return run("collineation", col_opts);
    if (*kt_cmd) return kt_check == "all" ? run("ktheory", kt_opts) : ktheory_check(kt_check, kt_opts);
    if (*rec_cmd) return reconstruct(source, psi_spec, rec_degree, rec_samples, rec_seed, report);
    if (*list_cmd) {
      for (const auto& name : flagval::suite_names()) std::cout << name << "\n";
      return 0;
    }
  } catch (const flagval::Error& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 2;
  }
  return 2;
}
