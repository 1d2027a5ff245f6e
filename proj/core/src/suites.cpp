#include "flagval/suites.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <map>
#include <random>

#include "flagval/arena.hpp"
#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/flag.hpp"
#include "flagval/milnor.hpp"
#include "flagval/parallel.hpp"
#include "flagval/psi.hpp"
#include "flagval/reconstruct.hpp"
#include "flagval/rng.hpp"
#include "flagval/valuation.hpp"
#include "flagval/weil.hpp"

#ifndef FLAGVAL_VERSION_STRING
#define FLAGVAL_VERSION_STRING "dev"
#endif

namespace flagval {

using json = nlohmann::ordered_json;

std::string_view library_version() { return FLAGVAL_VERSION_STRING; }

std::string_view to_string(RunMode m) { return m == RunMode::Exhaustive ? "exhaustive" : "sampled"; }

RunMode parse_run_mode(std::string_view text) {
  if (text == "exhaustive") return RunMode::Exhaustive;
  if (text == "sampled") return RunMode::Sampled;
  throw Error(ErrorCode::InvalidConfig, "mode must be exhaustive or sampled, got '" + std::string(text) + "'");
}

void Report::add_violation(json witness) {
  ++violation_count;
  if (violations.size() < kMaxListed) violations.push_back(std::move(witness));
}

json Report::to_json() const {
  json j;
  j["suite"] = suite;
  j["version"] = std::string(library_version());
  j["config"] = config;
  j["cases_total"] = cases_total;
  j["passes"] = passes;
  j["violation_count"] = violation_count;
  j["violations"] = violations;
  j["witnesses"] = witnesses;
  j["details"] = details;
  if (elapsed_ms) j["elapsed_ms"] = *elapsed_ms;
  return j;
}

namespace {

// ----- config resolution -----

struct Resolved {
  std::uint32_t q = 0;
  RunMode mode = RunMode::Exhaustive;
  std::uint64_t seed = 0;
  int arena_degree = 0;
  std::uint64_t samples = 0;
};

struct SuiteSpec {
  RunMode default_mode;
  std::vector<RunMode> modes;
  std::uint32_t default_q;
  bool uses_arena;
  std::uint64_t default_samples;  // 0: unused
  std::function<void(const Resolved&, Report&)> run;
};

constexpr std::uint64_t kMaxSamples = 10'000'000;

const Field& field_of_order(std::uint32_t q) {
  for (std::uint32_t p = 2; p <= q; ++p) {
    if (!is_prime(p) || q % p != 0) continue;
    std::uint32_t e = 0;
    std::uint64_t r = 1;
    while (r < q) {
      r *= p;
      ++e;
    }
    if (r != q) break;
    return Field::get(p, e);
  }
  throw Error(ErrorCode::InvalidConfig, "q = " + std::to_string(q) + " is not a prime power");
}

std::string digits(std::span<const int> labels) {
  std::string s;
  for (int v : labels) s += std::to_string(v);
  return s;
}

template <typename T>
std::string digits_of(const std::vector<T>& values) {
  std::string s;
  for (auto v : values) s += std::to_string(v);
  return s;
}

Poly random_poly(const Field& field, int max_degree, std::mt19937_64& rng) {
  std::vector<Elem> c(static_cast<std::size_t>(max_degree) + 1);
  for (auto& x : c) x = static_cast<Elem>(uniform_below(rng, field.order()));
  if (std::all_of(c.begin(), c.end(), [](Elem x) { return x == 0; })) c[0] = 1;
  return Poly::from_dense(field, c);
}

RatFn random_ratfn(const Field& field, int max_degree, std::mt19937_64& rng) {
  Poly num = random_poly(field, max_degree, rng);
  Poly den = random_poly(field, max_degree, rng);
  return RatFn(std::move(num), std::move(den));
}

std::vector<Place> univariate_places(const Field& field, int max_degree) {
  std::vector<Place> out;
  for (int d = 1; d <= max_degree; ++d)
    for (const Poly& p : monic_irreducibles(field, 1, d)) out.push_back(Place::finite(p));
  out.push_back(Place::infinite(field));
  return out;
}

Place place_of(const Generator& g) {
  return g.is_infinity() ? Place::infinite(g.poly().field()) : Place::finite(g.poly());
}

std::string field_spec(std::uint32_t q, std::string_view vars) { return "F" + std::to_string(q) + "(" + std::string(vars) + ")"; }

// Labels constant on the strata of a random full chain, optionally changed
// at one random point.
std::vector<int> random_flag_labels(const ProjectiveSpace& space, std::mt19937_64& rng) {
  std::vector<PointSet> chain;
  PointSet prev;
  for (int d = 0; d < space.dimension(); ++d) {
    std::vector<const PointSet*> options;
    for (const PointSet& s : space.subspaces(d))
      if ((s & prev) == prev) options.push_back(&s);
    prev = *options[uniform_below(rng, options.size())];
    chain.push_back(prev);
  }
  std::vector<int> stratum_value(chain.size() + 1);
  for (auto& v : stratum_value) v = static_cast<int>(uniform_below(rng, 3));
  std::vector<int> labels(space.size());
  for (std::size_t i = 0; i < space.size(); ++i) {
    std::size_t k = 0;
    while (k < chain.size() && !chain[k].test(i)) ++k;
    labels[i] = stratum_value[k];
  }
  if (uniform_below(rng, 2) == 0) labels[uniform_below(rng, labels.size())] = static_cast<int>(uniform_below(rng, 3));
  return labels;
}

std::vector<int> random_labels(std::size_t n, int values, std::mt19937_64& rng) {
  std::vector<int> labels(n);
  for (auto& v : labels) v = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(values)));
  return labels;
}

// Violations found by work item i, merged in index order.
using ItemFindings = std::vector<std::vector<json>>;

void merge(const ItemFindings& found, Report& r) {
  for (const auto& items : found) {
    ++r.cases_total;
    if (items.empty()) ++r.passes;
    for (const auto& w : items) r.add_violation(w);
  }
}

// ----- flag-classify -----

void run_flag_classify(const Resolved& c, Report& r) {
  if (c.q > 3) throw Error(ErrorCode::SizeBound, "flag-classify enumerates all subsets of P^2(F_q); q <= 3");
  const Field& field = field_of_order(c.q);
  const FlagCensus census = classify_flag_subsets(field);
  const std::uint64_t n = std::uint64_t{c.q} * c.q + c.q + 1;
  const std::array<std::uint64_t, 6> expected = {n, n, n * (c.q + 1), n, n, n * (c.q + 1)};

  r.cases_total = census.subsets_examined;
  r.passes = census.subsets_examined - census.unclassified;
  const auto& plane = projective_space(2, field);
  for (const PointSet& s : census.unclassified_examples) {
    json w;
    w["kind"] = "unclassified flag subset";
    std::vector<std::string> pts;
    for (std::size_t i = 0; i < plane.size(); ++i)
      if (s.test(i)) pts.push_back(plane.point(i).to_string());
    w["points"] = pts;
    r.add_violation(std::move(w));
  }
  for (std::uint64_t i = census.unclassified_examples.size(); i < census.unclassified; ++i)
    r.add_violation(json{{"kind", "unclassified flag subset"}});

  json families;
  for (std::size_t k = 0; k < kFlagFamilies.size(); ++k) {
    families[to_string(kFlagFamilies[k])] = census.by_family[k];
    if (census.by_family[k] != expected[k])
      r.add_violation(json{{"kind", "family count"},
                           {"family", to_string(kFlagFamilies[k])},
                           {"count", census.by_family[k]},
                           {"expected", expected[k]}});
  }
  r.details["flag_subsets"] = census.flag_subsets;
  r.details["improper_flag"] = census.improper_flag;
  r.details["by_family"] = families;
}

// ----- prop-flag-map -----

std::vector<json> compare_criteria(const ProjectiveSpace& space, std::span<const int> labels, std::string_view where) {
  std::vector<json> out;
  const FlagVerdict v = is_flag_map(space, labels);
  const bool chain = is_flag(v);
  const bool lines = line_criterion(space, labels);
  if (!verify_verdict(space, labels, v))
    out.push_back(json{{"kind", "verdict does not re-verify"}, {"space", where}, {"map", digits(labels)}});
  if (chain != lines)
    out.push_back(json{{"kind", "chain search and line criterion disagree"},
                       {"space", where},
                       {"map", digits(labels)},
                       {"chain_search", chain ? "flag" : "not flag"},
                       {"line_criterion", lines}});
  return out;
}

void run_prop_flag_map(const Resolved& c, Report& r) {
  const Field& field = field_of_order(c.q);
  if (c.mode == RunMode::Exhaustive) {
    const auto& plane = projective_space(2, field);
    const std::size_t n = plane.size();
    std::uint64_t total = 1;
    for (std::size_t i = 0; i < n; ++i) {
      total *= 3;
      if (total > 2'000'000) throw Error(ErrorCode::SizeBound, "exhaustive prop-flag-map needs 3^|P^2| <= 2e6");
    }
    constexpr std::uint64_t kChunk = 4096;
    const std::size_t chunks = static_cast<std::size_t>((total + kChunk - 1) / kChunk);
    std::vector<std::vector<json>> found(chunks);
    std::vector<std::uint64_t> flags(chunks, 0);
    parallel_for(chunks, [&](std::size_t ch) {
      std::vector<int> labels(n);
      for (std::uint64_t code = ch * kChunk; code < std::min(total, (ch + 1) * kChunk); ++code) {
        std::uint64_t x = code;
        for (std::size_t i = 0; i < n; ++i, x /= 3) labels[i] = static_cast<int>(x % 3);
        auto w = compare_criteria(plane, labels, "P2");
        if (is_flag_map_fast(plane, labels)) ++flags[ch];
        for (auto& item : w) found[ch].push_back(std::move(item));
      }
    });
    std::uint64_t mismatches = 0;
    std::uint64_t flag_maps = 0;
    for (std::size_t ch = 0; ch < chunks; ++ch) {
      flag_maps += flags[ch];
      for (auto& w : found[ch]) {
        ++mismatches;
        r.add_violation(std::move(w));
      }
    }
    r.cases_total = total;
    r.passes = total - mismatches;
    r.details["space"] = "P2(F" + std::to_string(c.q) + ")";
    r.details["values"] = 3;
    r.details["flag_maps"] = flag_maps;
    return;
  }
  // Sampled: P^2 and P^3, half uniform maps, half flag maps with at most
  // one changed point.
  json per_space = json::array();
  for (int dim : {2, 3}) {
    const auto& space = projective_space(dim, field);
    const std::string where = "P" + std::to_string(dim);
    ItemFindings found(c.samples);
    std::vector<char> flag(c.samples, 0);
    parallel_for(c.samples, [&](std::size_t i) {
      auto rng = item_rng(c.seed, (static_cast<std::uint64_t>(dim) << 40) + i);
      auto labels = i % 2 == 0 ? random_labels(space.size(), 3, rng) : random_flag_labels(space, rng);
      found[i] = compare_criteria(space, labels, where);
      flag[i] = is_flag_map_fast(space, labels) ? 1 : 0;
    });
    const std::uint64_t before = r.violation_count;
    merge(found, r);
    per_space.push_back(json{{"space", where + "(F" + std::to_string(c.q) + ")"},
                             {"samples", c.samples},
                             {"flag_maps", std::count(flag.begin(), flag.end(), 1)},
                             {"mismatches", r.violation_count - before}});
  }
  r.details["spaces"] = per_space;
}

// ----- lemma-p2 -----

json partition_json(const Partition& p) { return json{{"parts", digits_of(p.part_of)}, {"distinguished", p.distinguished}}; }

Partition random_partition(const ProjectiveSpace& plane, std::mt19937_64& rng) {
  Partition p;
  if (uniform_below(rng, 2) == 0) {
    // Strata of a random chain, one of them possibly split in two.
    std::vector<int> labels = random_flag_labels(plane, rng);
    const std::size_t pt = uniform_below(rng, plane.size());
    std::vector<std::size_t> through;
    for (std::size_t l = 0; l < plane.lines().size(); ++l)
      if (plane.line_sets()[l].test(pt)) through.push_back(l);
    const PointSet& line = plane.line_sets()[through[uniform_below(rng, through.size())]];
    p.part_of.assign(plane.size(), 2);
    for (std::size_t i = 0; i < plane.size(); ++i)
      if (line.test(i)) p.part_of[i] = 1;
    p.part_of[pt] = 0;
    if (uniform_below(rng, 2) == 0) {
      const int target = static_cast<int>(uniform_below(rng, 3));
      for (std::size_t i = 0; i < plane.size(); ++i)
        if (p.part_of[i] == target && labels[i] % 2 == 1) p.part_of[i] = 3;
    }
  } else {
    p.part_of = random_labels(plane.size(), 3 + static_cast<int>(uniform_below(rng, 3)), rng);
  }
  p.part_of = label_values(p.part_of);
  const int parts = *std::max_element(p.part_of.begin(), p.part_of.end()) + 1;
  p.distinguished = static_cast<int>(uniform_below(rng, static_cast<std::uint64_t>(parts)));
  return p;
}

void run_lemma_p2(const Resolved& c, Report& r) {
  const Field& field = field_of_order(c.q);
  const auto& plane = projective_space(2, field);
  if (c.mode == RunMode::Exhaustive) {
    if (c.q != 2) throw Error(ErrorCode::SizeBound, "exhaustive lemma-p2 enumerates set partitions of P^2(F_2) only");
    const LemmaSweep sweep = sweep_decomposition_lemma(plane);
    r.cases_total = sweep.partitions;
    r.passes = sweep.partitions - std::min(sweep.partitions, sweep.counterexamples);
    if (sweep.counterexamples > 0) {
      json w{{"kind", "no part is a flag subset"}};
      if (sweep.first_counterexample) w["partition"] = partition_json(*sweep.first_counterexample);
      r.add_violation(std::move(w));
      for (std::uint64_t i = 1; i < sweep.counterexamples; ++i) r.add_violation(json{{"kind", "no part is a flag subset"}});
    }
    if (sweep.first_hypothesis_failure) {
      const auto& [part, line] = *sweep.first_hypothesis_failure;
      r.witnesses["first_hypothesis_failure"] = json{{"partition", partition_json(part)},
                                                     {"line", plane.line(line).to_json()}};
    }
    r.details["partitions"] = sweep.partitions;
    r.details["cases_with_distinguished_part"] = sweep.cases;
    r.details["hypothesis_holds"] = sweep.hypothesis_holds;
    r.details["other_part_flag"] = sweep.other_part_flag;
    r.details["only_distinguished_flag"] = sweep.only_distinguished_flag;
    return;
  }
  ItemFindings found(c.samples);
  std::vector<int> kind(c.samples, 0);  // 0 hypothesis fails, 1 other part flag, 2 only S_1 flag
  parallel_for(c.samples, [&](std::size_t i) {
    auto rng = item_rng(c.seed, i);
    Partition p;
    do p = random_partition(plane, rng);
    while (*std::max_element(p.part_of.begin(), p.part_of.end()) < 2);
    const LemmaVerdict v = check_decomposition_lemma(plane, p);
    if (std::holds_alternative<CounterexampleCandidate>(v)) {
      found[i].push_back(json{{"kind", "no part is a flag subset"}, {"partition", partition_json(p)}});
    } else if (const auto* h = std::get_if<LemmaHolds>(&v)) {
      kind[i] = h->other_part_flag ? 1 : 2;
    }
  });
  merge(found, r);
  r.details["plane"] = "P2(F" + std::to_string(c.q) + ")";
  r.details["hypothesis_holds"] = std::count_if(kind.begin(), kind.end(), [](int k) { return k > 0; });
  r.details["other_part_flag"] = std::count(kind.begin(), kind.end(), 1);
  r.details["only_distinguished_flag"] = std::count(kind.begin(), kind.end(), 2);
}

// ----- collineation -----

void run_collineation(const Resolved& c, Report& r) {
  if (!is_prime(c.q)) throw Error(ErrorCode::InvalidConfig, "collineation needs a prime p");
  if (c.mode == RunMode::Exhaustive && c.q > 3)
    throw Error(ErrorCode::SizeBound, "exhaustive collineation sweep is limited to p <= 3");
  const CollineationReport rep = collineation_analyze(
      c.q, c.mode == RunMode::Exhaustive ? SearchMode::Exhaustive : SearchMode::Sampled, c.samples, c.seed);
  const std::uint64_t points = std::uint64_t{c.q} * c.q + c.q + 1;
  if (c.mode == RunMode::Exhaustive) {
    r.cases_total = 1;
    for (std::uint64_t i = 0; i < points; ++i) r.cases_total *= 4;
  } else {
    r.cases_total = c.samples;
  }
  std::uint64_t bad = 0;
  if (c.q > 2) {
    bad = rep.image_size_violations + rep.no_flag_combination;
    for (std::uint64_t i = 0; i < rep.image_size_violations; ++i) {
      json w{{"kind", "image has more than 3 points"}};
      if (i == 0 && rep.first_image_violation) w["map"] = digits_of(*rep.first_image_violation);
      r.add_violation(std::move(w));
    }
    for (std::uint64_t i = 0; i < rep.no_flag_combination; ++i) {
      json w{{"kind", "no nontrivial combination is a flag map"}};
      if (i == 0 && rep.first_no_flag_combination) w["map"] = digits_of(*rep.first_no_flag_combination);
      r.add_violation(std::move(w));
    }
  } else if (rep.first_line_test_not_flag) {
    r.witnesses["model-failure exhibited"] =
        json{{"map", digits_of(*rep.first_line_test_not_flag)},
             {"encoding", "value a + 2b per point of P2(F2) in canonical order"},
             {"property", "constant off one point on every line, yet not a flag map"}};
  } else {
    bad = 1;
    r.add_violation(json{{"kind", "expected model failure at p = 2 not found"}});
  }
  r.passes = r.cases_total - std::min(r.cases_total, bad);
  r.details["p"] = c.q;
  r.details["maps_satisfying_star"] = rep.maps_satisfying;
  r.details["max_image_size"] = rep.max_image_size;
  r.details["image_size_violations"] = rep.image_size_violations;
  r.details["no_flag_combination"] = rep.no_flag_combination;
  r.details["line_test_not_flag"] = rep.line_test_not_flag;
}

// ----- valuation-axioms -----

RatFn as_ratfn(const DivisorRep& d) { return from_divisor(d); }

std::vector<json> valuation_sample(const std::vector<Place>& places, std::mt19937_64& rng) {
  std::vector<json> out;
  const Place& place = places[uniform_below(rng, places.size())];
  const Field& field = place.field();
  const RatFn u = as_ratfn(make_splitting(place).uniformizer());
  auto power = [&](int e) { return u.pow(e); };
  const int a = static_cast<int>(uniform_below(rng, 5)) - 2;
  const int b = static_cast<int>(uniform_below(rng, 5)) - 2;
  const RatFn f = power(a) * random_ratfn(field, 3, rng);
  RatFn g = power(b) * random_ratfn(field, 3, rng);
  // Sometimes force cancellation in f + g.
  if (uniform_below(rng, 4) == 0) g = power(std::max(a, b) + 1) * random_ratfn(field, 2, rng) - f;
  auto fail = [&](std::string what, std::string detail) {
    out.push_back(json{{"kind", std::move(what)},
                       {"place", place.to_string()},
                       {"f", to_string(f)},
                       {"g", to_string(g)},
                       {"detail", std::move(detail)}});
  };
  const Gamma vf = val(place, f);
  if (!g.is_zero()) {
    const Gamma vg = val(place, g);
    if (val(place, f * g) != vf + vg) fail("val not additive", val(place, f * g).to_string());
    const RatFn s = f + g;
    if (!s.is_zero()) {
      const Gamma vs = val(place, s);
      const Gamma lo = std::min(vf, vg);
      if (vs < lo) fail("ultrametric inequality", vs.to_string() + " < " + lo.to_string());
      if (vf != vg && vs != lo) fail("ultrametric equality", vs.to_string() + " != " + lo.to_string());
    }
    const RatFn uf = f * u.pow(static_cast<int>(-vf[0]));
    const RatFn ug = g * u.pow(static_cast<int>(-vg[0]));
    const auto rf = std::get<ResidueClass>(residue(place, uf));
    const auto rg = std::get<ResidueClass>(residue(place, ug));
    if (std::get<ResidueClass>(residue(place, uf * ug)) != rf * rg) fail("residue not multiplicative", "");
    const RatFn h = RatFn::constant(field, 1, 1) + u * uf;
    if (!in_one_plus_m(place, h) || !is_one(residue(place, h))) fail("1 + m element", to_string(h));
  }
  std::int64_t degree_sum = 0;
  const DivisorRep df = to_divisor(f);
  for (const auto& [gen, e] : df.terms()) {
    (void)e;
    degree_sum += gen.degree() * val(place_of(gen), f)[0];
  }
  if (degree_sum != 0) fail("degree sum", std::to_string(degree_sum));
  return out;
}

struct CatalogEntry {
  std::string field;
  std::vector<std::string> gens;
  std::vector<std::string> places;
};

void run_valuation_axioms(const Resolved& c, Report& r) {
  const Field& field = field_of_order(c.q);
  if (c.q > 7) throw Error(ErrorCode::SizeBound, "valuation-axioms catalog uses P^3(F_q); q <= 7");
  const std::vector<Place> places = univariate_places(field, 2);
  ItemFindings found(c.samples);
  parallel_for(c.samples, [&](std::size_t i) {
    auto rng = item_rng(c.seed, i);
    found[i] = valuation_sample(places, rng);
  });
  merge(found, r);
  const std::uint64_t pair_cases = r.cases_total;

  // Catalog of subspaces: flag structure of every valuation on each.
  const FunctionField kt = FunctionField::parse(field_spec(c.q, "t"));
  const FunctionField kxy = FunctionField::parse(field_spec(c.q, "x,y"));
  const std::vector<std::vector<std::string>> uni = {
      {"1", "t"}, {"1", "t+1"}, {"1", "t", "t^2"}, {"1", "t+1", "t^2+t"}, {"1/t", "1", "t"},
      {"t", "t^2+1", "t^3"}, {"1", "t", "t^2", "t^3"}};
  const std::vector<std::vector<std::string>> bi = {
      {"1", "x", "y"}, {"1", "x", "x*y"}, {"1", "y", "x^2"}, {"x", "y", "x+y^2"}, {"1", "x", "y", "x*y"}};
  std::vector<std::string> bi_places = {"curve:x", "curve:y", "curve:y+x^2", "composite:x|y", "composite:y|x"};
  std::uint64_t catalog = 0;
  auto check = [&](const FunctionField& k, const std::vector<std::string>& gens, const Place& place) {
    std::vector<RatFn> fns;
    for (const auto& g : gens) fns.push_back(k.element(g));
    const EmbeddedSubspace s = embed_span(k, fns);
    const auto values = valuation_values(place, s);
    const auto labels = label_values(values);
    const FlagVerdict v = valuation_flag_structure(place, s);
    ++catalog;
    ++r.cases_total;
    if (is_flag(v) && verify_verdict(s.geometry(), labels, v)) {
      ++r.passes;
    } else {
      std::string span;
      for (const auto& g : gens) span += (span.empty() ? "" : ", ") + g;
      r.add_violation(json{{"kind", "valuation is not a flag map on subspace"},
                           {"field", k.to_string()},
                           {"span", span},
                           {"place", place.to_string(k.names())}});
    }
  };
  for (const auto& gens : uni)
    for (const Place& p : places) check(kt, gens, p);
  for (const auto& gens : bi)
    for (const auto& p : bi_places) check(kxy, gens, Place::parse(p, kxy));
  r.details["pairs"] = pair_cases;
  r.details["places"] = places.size();
  r.details["catalog_checks"] = catalog;
}

// ----- weil-inertia -----

void run_weil_inertia(const Resolved& c, Report& r) {
  const Field& field = field_of_order(c.q);
  std::vector<DivisorRep> arena;
  for (int d = 1; d <= c.arena_degree; ++d)
    for (const Poly& p : monic_irreducibles(field, 1, d)) arena.push_back(to_divisor(p));
  if (arena.size() > 500) throw Error(ErrorCode::SizeBound, "weil-inertia arena exceeds 500 generators");
  const std::vector<Place> places = univariate_places(field, c.arena_degree);
  const auto ring = CoefficientRing::integers();
  for (std::size_t i = 0; i < places.size(); ++i) {
    const Place& place = places[i];
    ++r.cases_total;
    lattice::IntVector nu;
    for (const auto& g : arena) nu.push_back(val(place, g)[0]);
    lattice::IntVector neg = nu;
    for (auto& x : neg) x = -x;
    const auto solutions = solve_inertia(place, arena);
    const bool exact = solutions.size() == 1 && (solutions[0] == nu || solutions[0] == neg);
    const auto own = weil_from_valuation(place, {1}, ring);
    const bool own_inertia = is_inertia(own, place, arena) && is_inertia(own.scaled(3), place, arena);
    const Place& other = places[(i + 1) % places.size()];
    const bool other_rejected = !is_inertia(weil_from_valuation(other, {1}, ring), place, arena);
    if (exact && own_inertia && other_rejected) {
      ++r.passes;
      continue;
    }
    json w{{"kind", "inertia mismatch"}, {"place", place.to_string()}, {"solutions", solutions.size()}};
    w["solution_is_nu"] = exact;
    w["own_valuation_inertia"] = own_inertia;
    w["other_valuation_rejected"] = other_rejected;
    r.add_violation(std::move(w));
  }
  r.details["field"] = field_spec(c.q, "t");
  r.details["arena_generators"] = arena.size();
  r.details["places"] = places.size();
}

// ----- c-pairs -----

json verdict_json(const CPairVerdict& v, const FunctionField& k) {
  if (std::holds_alternative<Cyclic>(v)) return json{{"verdict", "cyclic"}};
  const auto& n = std::get<NonCyclic>(v);
  return json{{"verdict", "non-cyclic"},
              {"subfield", n.subfield},
              {"generators", {k.format(n.elements.first), k.format(n.elements.second)}},
              {"minor", n.minor}};
}

void run_c_pairs(const Resolved& c, Report& r) {
  const FunctionField k = FunctionField::parse(field_spec(c.q, "x,y"));
  const Field& field = k.field();
  const std::vector<Subfield> family = {{k.element("x"), "k(x)"},     {k.element("y"), "k(y)"},
                                        {k.element("x+y"), "k(x+y)"}, {k.element("x*y"), "k(xy)"},
                                        {k.element("x/y"), "k(x/y)"}};
  std::vector<DivisorRep> probe;
  for (const Poly& p : monic_irreducibles(field, 2, 1)) probe.push_back(DivisorRep::of(Generator(p)));
  const Arena arena(k, c.arena_degree);
  std::vector<DivisorRep> window;
  for (const auto& g : arena.generators()) window.push_back(DivisorRep::of(g));

  const auto z = CoefficientRing::integers();
  const Place px = Place::parse("curve:x", k);
  const Place py = Place::parse("curve:y", k);
  const Place comp = Place::parse("composite:x|y", k);
  const WeilElement nx = weil_from_valuation(px, {1}, z);
  const WeilElement ny = weil_from_valuation(py, {1}, z);
  const WeilElement c1 = weil_from_valuation(comp, {1, 0}, z);
  const WeilElement c2 = weil_from_valuation(comp, {0, 1}, z);

  auto record = [&](const std::string& name, bool ok, json detail) {
    ++r.cases_total;
    r.details[name] = detail;
    if (ok) {
      ++r.passes;
    } else {
      detail["case"] = name;
      r.add_violation(std::move(detail));
    }
  };
  // A non-cyclic witness must re-verify by evaluation.
  auto reverified = [](const CPairVerdict& v, const WeilElement& a, const WeilElement& b) {
    const auto* n = std::get_if<NonCyclic>(&v);
    if (!n) return false;
    const auto& ring = a.ring();
    const std::int64_t det = ring.reduce(
        lattice::checked_add(lattice::checked_mul(a(n->elements.first), b(n->elements.second)),
                             -lattice::checked_mul(a(n->elements.second), b(n->elements.first))));
    return det == ring.reduce(n->minor) && !ring.is_zero(det);
  };
  auto expect_witness = [&](const std::string& name, const WeilElement& a, const WeilElement& b,
                            std::int64_t expected_minor) {
    const CPairVerdict v = c_pair_test(a, b, family, probe);
    const auto* n = std::get_if<NonCyclic>(&v);
    const bool ok = n && n->subfield == "k(x/y)" && reverified(v, a, b) &&
                    (expected_minor == 0 || a.ring().reduce(n->minor) == a.ring().reduce(expected_minor));
    record(name, ok, verdict_json(v, k));
  };

  expect_witness("nu_x,nu_y", nx, ny, -1);
  expect_witness("nu_y,nu_x", ny, nx, 1);
  expect_witness("nu_x+nu_y,nu_y", nx.combine(1, ny, 1), ny, 0);
  if (field.characteristic() != 2) {
    const auto z4 = CoefficientRing::mod_prime_power(2, 2, field.characteristic());
    expect_witness("nu_x,nu_y mod 4", weil_from_valuation(px, {1}, z4), weil_from_valuation(py, {1}, z4), -1);
  }

  {
    const CPairVerdict v = c_pair_test(c1, c2, family, probe);
    record("composite components", std::holds_alternative<Cyclic>(v), verdict_json(v, k));
  }
  {
    bool thrown = false;
    try {
      (void)c_pair_test(nx, nx.scaled(2), family, probe);
    } catch (const Error& e) {
      thrown = e.code() == ErrorCode::ProportionalPair;
    }
    record("proportional pair", thrown, json{{"proportional_pair_error", thrown}});
  }

  const std::vector<Place> universe = {py, Place::parse("curve:x+y", k), px};
  auto expect_support = [&](const std::string& name, const WeilElement& a, const WeilElement& b,
                            const std::vector<Place>& places, std::optional<std::pair<std::int64_t, std::int64_t>> rs) {
    const auto found = find_supporting_valuation(a, b, places, window);
    json d;
    if (found) {
      d["place"] = found->place.to_string(k.names());
      d["r"] = found->r;
      d["s"] = found->s;
    } else {
      d["place"] = nullptr;
    }
    const bool ok = rs ? (found && found->place == px && found->r == rs->first && found->s == rs->second) : !found;
    record(name, ok, std::move(d));
  };
  expect_support("support of composite pair", c1, c2, universe, std::pair<std::int64_t, std::int64_t>{1, 0});
  expect_support("support of nu_x, 3 nu_x + second", c1, c1.combine(3, c2, 1), universe,
                 std::pair<std::int64_t, std::int64_t>{1, 0});
  expect_support("empty universe", c1, c2, {}, std::nullopt);

  r.witnesses["refutation"] = r.details["nu_x,nu_y"];
  r.details["family"] = json::array();
  for (const auto& e : family) r.details["family"].push_back(e.label);
  r.details["arena_generators"] = window.size();
}

// ----- ktheory -----

std::vector<json> ktheory_sample(const Field& field, bool identities, std::mt19937_64& rng) {
  std::vector<json> out;
  auto draw = [&] {
    for (;;) {
      RatFn f = random_ratfn(field, 4, rng);
      if (!f.is_zero() && !f.is_one()) return f;
    }
  };
  const RatFn f = draw();
  if (!steinberg_check(f)) out.push_back(json{{"kind", "steinberg"}, {"f", to_string(f)}});
  if (!identities) return out;
  const RatFn g = draw();
  const RatFn f2 = draw();
  if (!weil_reciprocity_check(f, g))
    out.push_back(json{{"kind", "weil reciprocity"}, {"f", to_string(f)}, {"g", to_string(g)}});
  const K2Symbol fg = K2Symbol::of(f, g);
  const K2Symbol gf = K2Symbol::of(g, f);
  const K2Symbol f2g = K2Symbol::of(f2, g);
  const K2Symbol prod = K2Symbol::of(f * f2, g);
  const K2Symbol fminus = K2Symbol::of(f, -f);
  std::vector<Place> support;
  for (const K2Symbol* s : {&fg, &f2g, &prod, &fminus})
    for (Place& p : symbol_support(*s))
      if (std::find(support.begin(), support.end(), p) == support.end()) support.push_back(std::move(p));
  for (const Place& p : support) {
    if (tame_symbol(prod, p) != tame_symbol(fg, p) * tame_symbol(f2g, p))
      out.push_back(json{{"kind", "bilinearity"}, {"place", p.to_string()}, {"f", to_string(f)}, {"g", to_string(g)}});
    if (!(tame_symbol(fg, p) * tame_symbol(gf, p)).is_one())
      out.push_back(json{{"kind", "antisymmetry"}, {"place", p.to_string()}, {"f", to_string(f)}, {"g", to_string(g)}});
    if (!tame_symbol(fminus, p).is_one())
      out.push_back(json{{"kind", "{f,-f} = 1"}, {"place", p.to_string()}, {"f", to_string(f)}});
  }
  return out;
}

void run_ktheory(const Resolved& c, Report& r) {
  const Field& field = field_of_order(c.q);
  const std::uint64_t pairs = c.samples / 2;
  ItemFindings found(c.samples);
  parallel_for(c.samples, [&](std::size_t i) {
    auto rng = item_rng(c.seed, i);
    found[i] = ktheory_sample(field, i < pairs, rng);
  });
  merge(found, r);
  r.details["steinberg_samples"] = c.samples;
  r.details["reciprocity_samples"] = pairs;

  if (c.q != 3) return;
  const FunctionField kt = FunctionField::parse("F3(t)");
  auto record = [&](const std::string& name, bool ok, json detail) {
    ++r.cases_total;
    if (ok) ++r.passes;
    else r.add_violation(json{{"case", name}, {"detail", detail}});
    r.witnesses[name] = std::move(detail);
  };
  {
    const RatFn t = kt.element("t");
    const RatFn t1 = kt.element("t-1");
    const auto residues = tame_residues(K2Symbol::of(t, t1));
    json d = json::array();
    std::vector<std::string> values;
    Elem product = 1;
    for (const auto& [p, v] : residues) {
      d.push_back(json{{"place", p.to_string(kt.names())}, {"residue", v.to_string()}});
      values.push_back(v.to_string());
      product = field.mul(product, v.norm());
    }
    const bool ok = values == std::vector<std::string>{"2", "1", "2"} && product == 1 && weil_reciprocity_check(t, t1);
    record("tame symbol {t, t-1}", ok, json{{"residues", d}, {"norm_product", product}});
  }
  {
    const SymbolProbe probe = symbol_divisibility_probe(kt.element("t"), kt.element("t-1"), 2, Tower::doubling(1));
    const auto* u = std::get_if<UnobstructedUpTo>(&probe);
    json d = u ? json{{"probe", "unobstructed"}, {"level", u->level}, {"cleared_from", u->cleared_from}}
               : json{{"probe", "obstructed"}};
    record("divisibility probe {t, t-1}, l = 2", u && u->level == 1 && u->cleared_from == 1, std::move(d));
  }
  {
    const Tower ladder = Tower::doubling(1);
    const bool here = std::holds_alternative<DivisibleHere>(divisible_in_k1(to_divisor(kt.element("t^2")), 2, ladder));
    const auto two = divisible_in_k1(to_divisor(kt.element("2")), 2, ladder);
    const auto* in_tower = std::get_if<DivisibleInTower>(&two);
    const bool tower = in_tower && in_tower->level == 1 && in_tower->degree == 2;
    const bool not_div = std::holds_alternative<NotDivisible>(divisible_in_k1(to_divisor(kt.element("t")), 2, ladder));
    record("K1 divisibility", here && tower && not_div,
           json{{"t^2", here ? "divisible here" : "?"}, {"2", tower ? "divisible in F9" : "?"}, {"t", not_div ? "not divisible" : "?"}});
  }
}

// ----- reconstruct-roundtrip -----

struct RoundTrip {
  std::string psi;
  std::optional<std::string> place;  // valuation expected back
  std::string path;                  // expected path, or "injective"
  bool conclusions;
};

void run_reconstruct(const Resolved& c, Report& r) {
  const FunctionField k = FunctionField::parse(field_spec(c.q, "x,y"));
  const Arena arena(k, c.arena_degree);
  const std::string conic = k.field().characteristic() == 2 ? "y+x^2" : "y+2*x^2";
  const std::vector<RoundTrip> cases = {
      {"from-valuation:curve:x", "curve:x", "non-flag-lines", true},
      {"from-valuation:curve:y", "curve:y", "non-flag-lines", true},
      {"from-valuation:curve:" + conic, "curve:" + conic, "non-flag-lines", true},
      {"from-valuation-twisted:curve:x", "curve:x", "non-flag-field", true},
      {"valuation-map:curve:x", "curve:x", "flag-everywhere", false},
      {"identity", std::nullopt, "injective", false},
  };
  ReconstructionConfig rc;
  rc.seed = c.seed;
  json runs = json::array();
  for (const auto& rt : cases) {
    ++r.cases_total;
    const PsiMap psi = PsiMap::parse(rt.psi, k);
    const ReconstructionResult res = extract_valuation(psi, arena, rc);
    json run = to_json(res, arena);
    run.erase("arena");
    std::vector<std::string> problems;
    const ValuationVerdict* v = res.valuation();
    const std::string path = v ? to_string(v->path) : std::holds_alternative<InjectiveVerdict>(res.verdict) ? "injective" : "inconclusive";
    if (path != rt.path) problems.push_back("path " + path + ", expected " + rt.path);
    if (!res.checks.passed()) problems.push_back("lemma checks failed");
    if (v && rt.place) {
      const Place place = Place::parse(*rt.place, k);
      const std::size_t ng = arena.generators().size();
      lattice::IntVector nu(ng);
      for (std::size_t g = 0; g < ng; ++g) nu[g] = val(place, DivisorRep::of(arena.generators()[g]))[0];
      lattice::HermiteBasis expected(ng), got(ng);
      for (const auto& row : lattice::integer_kernel({nu}, ng)) expected.add(row);
      for (const auto& row : v->units) got.add(row);
      bool same = expected.rank() == got.rank();
      for (const auto& row : expected.rows()) same = same && got.contains(row);
      for (const auto& row : got.rows()) same = same && expected.contains(row);
      if (!same) problems.push_back("units differ from the valuation ring units");
      if (v->gamma.free_rank() != 1 || !v->gamma.torsion().empty()) problems.push_back("gamma is not Z");
      // The class map must be nu or -nu on every generator.
      if (v->gamma.free_rank() == 1) {
        lattice::IntVector values;
        for (const auto& g : arena.generators()) values.push_back(gamma_value(*v, arena, DivisorRep::of(g))[0]);
        lattice::IntVector neg = nu;
        for (auto& x : neg) x = -x;
        if (values != nu && values != neg) problems.push_back("gamma values are not +-nu");
      }
      run["units_match_valuation"] = same;
    }
    if (v && rt.conclusions) {
      const ConclusionChecks cc = verify_theorem_conclusions(res, psi, arena, c.samples, c.seed);
      run["conclusion_checks"] = to_json(cc);
      if (!cc.passed()) problems.push_back("theorem conclusions failed");
    }
    run = json{{"psi", rt.psi}, {"expected_path", rt.path}, {"result", std::move(run)}};
    if (problems.empty()) {
      ++r.passes;
    } else {
      r.add_violation(json{{"psi", rt.psi}, {"problems", problems}});
    }
    runs.push_back(std::move(run));
  }
  r.details["arena"] = arena.describe();
  r.details["runs"] = std::move(runs);
}

const std::map<std::string, SuiteSpec>& registry() {
  using M = RunMode;
  static const std::map<std::string, SuiteSpec> suites = {
      {"flag-classify", {M::Exhaustive, {M::Exhaustive}, 2, false, 0, run_flag_classify}},
      {"prop-flag-map", {M::Exhaustive, {M::Exhaustive, M::Sampled}, 2, false, 100'000, run_prop_flag_map}},
      {"lemma-p2", {M::Exhaustive, {M::Exhaustive, M::Sampled}, 2, false, 100'000, run_lemma_p2}},
      {"collineation", {M::Exhaustive, {M::Exhaustive, M::Sampled}, 3, false, 1'000'000, run_collineation}},
      {"valuation-axioms", {M::Sampled, {M::Sampled}, 3, false, 10'000, run_valuation_axioms}},
      {"weil-inertia", {M::Exhaustive, {M::Exhaustive}, 3, true, 0, run_weil_inertia}},
      {"c-pairs", {M::Exhaustive, {M::Exhaustive}, 3, true, 0, run_c_pairs}},
      {"ktheory", {M::Sampled, {M::Sampled}, 3, false, 1000, run_ktheory}},
      {"reconstruct-roundtrip", {M::Sampled, {M::Sampled}, 3, true, 60, run_reconstruct}},
  };
  return suites;
}

int default_arena_degree(const std::string& suite) { return suite == "weil-inertia" ? 3 : 2; }

}  // namespace

const std::vector<std::string>& suite_names() {
  static const std::vector<std::string> names = {"flag-classify", "prop-flag-map", "lemma-p2",
                                                 "collineation",  "valuation-axioms", "weil-inertia",
                                                 "c-pairs",       "ktheory",          "reconstruct-roundtrip"};
  return names;
}

Report run_suite(const SuiteConfig& config) {
  const auto& reg = registry();
  const auto it = reg.find(config.suite);
  if (it == reg.end()) throw Error(ErrorCode::UnknownSuite, "unknown suite '" + config.suite + "'");
  const SuiteSpec& spec = it->second;

  Resolved c;
  c.mode = config.mode.value_or(spec.default_mode);
  if (std::find(spec.modes.begin(), spec.modes.end(), c.mode) == spec.modes.end())
    throw Error(ErrorCode::InvalidConfig, config.suite + " does not support " + std::string(to_string(c.mode)) + " mode");
  const bool sampled = c.mode == RunMode::Sampled;
  if (sampled && !config.seed) throw Error(ErrorCode::InvalidConfig, "a seed is required in sampled mode");
  c.q = config.q.value_or(spec.default_q);
  if (c.q < 2) throw Error(ErrorCode::InvalidConfig, "q must be at least 2");
  c.seed = config.seed.value_or(0);
  c.samples = sampled ? config.samples.value_or(spec.default_samples) : 0;
  if (sampled && (c.samples == 0 || c.samples > kMaxSamples))
    throw Error(ErrorCode::InvalidConfig, "samples must be in [1, 1e7]");
  if (spec.uses_arena) {
    c.arena_degree = config.arena_degree.value_or(default_arena_degree(config.suite));
    if (c.arena_degree < 1 || c.arena_degree > 4) throw Error(ErrorCode::InvalidConfig, "arena degree must be in [1, 4]");
  }

  Report report;
  report.suite = config.suite;
  report.config = json{{"q", c.q}, {"mode", to_string(c.mode)}};
  report.config["seed"] = sampled ? json(c.seed) : json(nullptr);
  report.config["arena_deg"] = spec.uses_arena ? json(c.arena_degree) : json(nullptr);
  report.config["samples"] = sampled ? json(c.samples) : json(nullptr);

  const auto start = std::chrono::steady_clock::now();
  spec.run(c, report);
  if (config.timing)
    report.elapsed_ms =
        std::chrono::duration_cast<std::chrono::milliseconds>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace flagval
