#include "flagval/reconstruct.hpp"

#include <algorithm>
#include <map>
#include <unordered_set>

#include "flagval/dependence.hpp"
#include "flagval/error.hpp"
#include "flagval/rng.hpp"

namespace flagval {

namespace {

unsigned variable_mask(const DivisorRep& d) {
  unsigned mask = 0;
  for (const auto& [g, e] : d.terms()) {
    if (g.is_infinity()) continue;
    for (int v = 0; v < d.nvars(); ++v)
      if (g.poly().degree_in(v) > 0) mask |= 1u << v;
  }
  return mask;
}

std::string vector_key(const lattice::IntVector& v) {
  std::string key;
  for (auto x : v) key += std::to_string(x) + ",";
  return key;
}

// Dense ids for classes, in order of first appearance.
class ClassIds {
 public:
  std::size_t operator()(const DivisorRep& d) {
    auto [it, inserted] = ids_.emplace(d.class_part(), ids_.size());
    return it->second;
  }

 private:
  std::unordered_map<DivisorRep, std::size_t, DivisorClassHash, DivisorClassEq> ids_;
};

// A line is a flag map iff it is constant off at most one point.
bool constant_off_one(const std::vector<std::size_t>& values) {
  std::map<std::size_t, std::size_t> counts;
  for (auto v : values) ++counts[v];
  for (const auto& [v, c] : counts)
    if (c + 1 >= values.size()) return true;
  return false;
}

bool all_distinct(std::vector<std::size_t> values) {
  std::sort(values.begin(), values.end());
  return std::adjacent_find(values.begin(), values.end()) == values.end();
}

lattice::IntVector difference(const lattice::IntVector& a, const lattice::IntVector& b) {
  lattice::IntVector out(a.size());
  for (std::size_t k = 0; k < a.size(); ++k) out[k] = lattice::checked_add(a[k], -b[k]);
  return out;
}

}  // namespace

bool DependenceOracle::operator()(const DivisorRep& a, const DivisorRep& b) {
  if (a.is_trivial() || b.is_trivial()) return true;
  if (std::popcount(variable_mask(a) | variable_mask(b)) <= 1) return true;
  std::string ka = a.to_string(), kb = b.to_string();
  if (kb < ka) std::swap(ka, kb);
  const std::string key = ka + "|" + kb;
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;
  const bool dep = std::holds_alternative<Dependent>(algebraically_dependent(from_divisor(a), from_divisor(b), bound_));
  cache_.emplace(key, dep);
  return dep;
}

Decomposition decompose_subspace(const PsiMap& psi, const EmbeddedSubspace& s, int dependence_bound) {
  DependenceOracle dep(psi.target(), dependence_bound);
  const auto& pts = s.points();
  const std::size_t n = pts.size();
  std::vector<DivisorRep> images;
  images.reserve(n);
  for (const auto& p : pts) images.push_back(psi(p.divisor));

  Decomposition out;
  std::vector<int> class_of(n, -1);
  for (std::size_t i = 0; i < n; ++i) {
    if (images[i].is_trivial()) {
      out.s1.push_back(i);
      continue;
    }
    for (std::size_t c = 0; c < out.classes.size(); ++c)
      if (dep(images[out.classes[c].representative], images[i])) {
        out.classes[c].points.push_back(i);
        class_of[i] = static_cast<int>(c);
        break;
      }
    if (class_of[i] < 0) {
      class_of[i] = static_cast<int>(out.classes.size());
      out.classes.push_back({i, {i}});
    }
  }
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (class_of[i] < 0 || class_of[j] < 0) continue;
      if ((class_of[i] == class_of[j]) != dep(images[i], images[j]))
        throw Error(ErrorCode::DependenceBoundTooSmall,
                    "dependence of images is not transitive at bound " + std::to_string(dependence_bound));
    }

  const FunctionField& K = s.field();
  auto defect = [&](std::string property, std::string detail) {
    out.defects.push_back({std::move(property), std::move(detail)});
  };
  // (1) S_1 u S_f is closed under multiplication.
  for (const auto& cls : out.classes) {
    std::vector<std::size_t> members = out.s1;
    members.insert(members.end(), cls.points.begin(), cls.points.end());
    for (std::size_t a = 0; a < members.size(); ++a)
      for (std::size_t b = a; b < members.size(); ++b) {
        ++out.checks;
        const DivisorRep prod = psi(pts[members[a]].divisor * pts[members[b]].divisor);
        if (!dep(prod, images[cls.representative]))
          defect("decomposition.1", K.format(pts[members[a]].value) + " * " + K.format(pts[members[b]].value));
      }
  }
  // (2) every line l(1, f) with psi(f) != 1 lies in S_1 u S_f; lines of S
  // are shifted to pass through 1.
  const auto& geometry = s.geometry();
  for (const auto& line : geometry.lines())
    for (std::size_t h : line) {
      std::vector<DivisorRep> ratios;
      for (std::size_t p : line) ratios.push_back(psi(pts[p].divisor / pts[h].divisor));
      auto f = std::find_if(ratios.begin(), ratios.end(), [](const DivisorRep& r) { return !r.is_trivial(); });
      if (f == ratios.end()) continue;
      for (std::size_t k = 0; k < line.size(); ++k) {
        ++out.checks;
        if (!dep(ratios[k], *f)) defect("decomposition.2", "line through " + K.format(pts[h].value) + " at " + K.format(pts[line[k]].value));
      }
    }
  // (3) for f, g with distinct nontrivial images, l(f, g) lies in S_1 u S_f
  // when the images are dependent, and misses S_1 otherwise.
  for (std::size_t i = 0; i < n; ++i)
    for (std::size_t j = i + 1; j < n; ++j) {
      if (images[i].is_trivial() || images[j].is_trivial() || images[i].same_class(images[j])) continue;
      const auto& line = geometry.lines()[geometry.line_index(i, j)];
      const bool dependent = dep(images[i], images[j]);
      for (std::size_t p : line) {
        ++out.checks;
        const bool ok = dependent ? dep(images[p], images[i]) : !images[p].is_trivial();
        if (!ok) defect("decomposition.3", "line through " + K.format(pts[i].value) + ", " + K.format(pts[j].value));
      }
    }
  return out;
}

PlaneClassification classify_plane(const PsiMap& psi, const EmbeddedSubspace& plane, int dependence_bound) {
  if (plane.dimension() != 2) throw Error(ErrorCode::InvalidConfig, "classify_plane needs a plane");
  DependenceOracle dep(psi.target(), dependence_bound);
  const auto& pts = plane.points();
  const std::size_t n = pts.size();
  ClassIds ids;
  std::vector<DivisorRep> images;
  std::vector<std::size_t> id(n);
  for (std::size_t i = 0; i < n; ++i) {
    images.push_back(psi(pts[i].divisor));
    id[i] = ids(images[i]);
  }

  bool precondition = false;
  for (std::size_t z = 0; z < n && !precondition; ++z)
    for (std::size_t x = 0; x < n && !precondition; ++x) {
      if (id[x] == id[z]) continue;
      const DivisorRep rx = images[x] / images[z];
      for (std::size_t y = x + 1; y < n; ++y) {
        if (id[y] == id[z] || id[y] == id[x]) continue;
        if (!dep(rx, images[y] / images[z])) {
          precondition = true;
          break;
        }
      }
    }
  if (!precondition)
    throw Error(ErrorCode::PreconditionFailed, "plane " + plane.label() + " has no pair of independent image ratios");

  PlaneClassification out{InjectiveOnPlane{}};
  if (all_distinct(id)) return out;

  const auto& geometry = plane.geometry();
  std::optional<std::vector<std::size_t>> case1;
  for (const auto& line : geometry.lines()) {
    std::optional<std::size_t> value;
    bool constant = true;
    for (std::size_t i = 0; i < n && constant; ++i) {
      if (std::find(line.begin(), line.end(), i) != line.end()) continue;
      if (value && *value != id[i]) constant = false;
      value = id[i];
    }
    if (constant) {
      case1 = line;
      break;
    }
  }
  std::vector<std::size_t> pivots;
  for (std::size_t g = 0; g < n; ++g) {
    bool ok = true;
    for (const auto& line : geometry.lines()) {
      if (std::find(line.begin(), line.end(), g) == line.end()) continue;
      std::optional<std::size_t> value;
      for (std::size_t p : line) {
        if (p == g) continue;
        if (value && *value != id[p]) ok = false;
        value = id[p];
      }
    }
    // psi(g) is independent of every image outside S_1.
    for (std::size_t f = 0; f < n && ok; ++f)
      if (f != g && !images[f].is_trivial() && dep(images[g], images[f])) ok = false;
    for (std::size_t f = 0; f < n && ok; ++f)
      for (std::size_t f2 = f + 1; f2 < n && ok; ++f2)
        if (f != g && f2 != g && !dep(images[f], images[f2])) ok = false;
    if (ok) pivots.push_back(g);
  }
  out.case1_matched = case1.has_value();
  out.case2_matched = !pivots.empty();
  if (case1)
    out.verdict = PlaneCase1{*case1};
  else if (!pivots.empty())
    out.verdict = PlaneCase2{pivots};
  else
    out.verdict = HypothesisViolation{"neither a constant complement of a line nor a pivot"};
  return out;
}

std::string to_string(const PlaneVerdict& v, const EmbeddedSubspace& plane) {
  const FunctionField& K = plane.field();
  auto point = [&](std::size_t i) { return K.format(plane.points()[i].value); };
  if (const auto* c1 = std::get_if<PlaneCase1>(&v)) return "case1: line through " + point(c1->line[0]) + ", " + point(c1->line[1]);
  if (const auto* c2 = std::get_if<PlaneCase2>(&v)) {
    std::string s = "case2: pivot";
    for (auto g : c2->pivots) s += " " + point(g);
    return s;
  }
  if (std::holds_alternative<InjectiveOnPlane>(v)) return "injective";
  return "hypothesis-violation: " + std::get<HypothesisViolation>(v).detail;
}

std::string to_string(ReconstructionPath path) {
  switch (path) {
    case ReconstructionPath::UnionOfInjectiveLines: return "injective-lines";
    case ReconstructionPath::NonFlagField: return "non-flag-field";
    case ReconstructionPath::NonFlagLines: return "non-flag-lines";
    case ReconstructionPath::FlagEverywhere: return "flag-everywhere";
  }
  return "unknown";
}

void check_multiplicative(const PsiMap& psi, const Arena& arena, std::size_t samples, std::uint64_t seed) {
  auto check = [&](const DivisorRep& a, const DivisorRep& b) {
    if (!psi(a * b).same_class(psi(a) * psi(b)))
      throw Error(ErrorCode::NotMultiplicative, "psi(fg) != psi(f) psi(g) for f = " + arena.field().format(a) +
                                                    ", g = " + arena.field().format(b));
  };
  const std::size_t np = arena.point_count();
  for (std::size_t g = 0; g < arena.generators().size(); ++g) {
    auto rng = item_rng(seed, g);
    const DivisorRep dg = to_divisor(arena.generators()[g].poly());
    check(dg, dg);
    check(dg, arena.point_divisor(uniform_below(rng, np)));
  }
  for (std::size_t k = 0; k < samples; ++k) {
    auto rng = item_rng(seed ^ 0x9e3779b97f4a7c15ULL, k);
    check(arena.point_divisor(uniform_below(rng, np)), arena.point_divisor(uniform_below(rng, np)));
  }
}

ReconstructionResult extract_valuation(const PsiMap& psi, const Arena& arena, const ReconstructionConfig& config) {
  if (!(psi.source() == arena.field())) throw Error(ErrorCode::FieldMismatch, "psi and arena over different fields");
  check_multiplicative(psi, arena, config.multiplicativity_samples, config.seed);
  ReconstructionResult result{Inconclusive{"not run"}, {}, 0, 0, false, {}, {}};
  const FunctionField& K = arena.field();
  const std::size_t ng = arena.generators().size();
  const std::size_t np = arena.point_count();
  DependenceOracle dep(psi.target(), config.dependence_bound);

  // Kernel of psi on the arena group.
  std::vector<DivisorRep> gen_images;
  std::map<Generator, std::size_t> target_index;
  for (const auto& g : arena.generators()) {
    gen_images.push_back(psi(to_divisor(g.poly())));
    for (const auto& [t, e] : gen_images.back().terms()) target_index.emplace(t, target_index.size());
  }
  lattice::IntMatrix image_matrix(target_index.size(), lattice::IntVector(ng, 0));
  for (std::size_t g = 0; g < ng; ++g)
    for (const auto& [t, e] : gen_images[g].terms()) image_matrix[target_index.at(t)][g] = e;
  const lattice::IntMatrix kernel = lattice::integer_kernel(image_matrix, ng);
  if (kernel.empty()) {
    result.verdict = InjectiveVerdict{};
    result.notes.push_back("psi has trivial kernel on the arena group");
    return result;
  }

  std::vector<DivisorRep> images;
  std::vector<std::size_t> id(np);
  ClassIds ids;
  for (std::size_t i = 0; i < np; ++i) {
    images.push_back(psi(arena.point_divisor(i)));
    id[i] = ids(images[i]);
  }
  const auto& lines = arena.lines();
  std::vector<char> injective(lines.size()), flag(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::vector<std::size_t> values;
    for (auto p : lines[l]) values.push_back(id[p]);
    injective[l] = all_distinct(values);
    flag[l] = constant_off_one(values);
    result.injective_lines += injective[l];
    result.nonflag_lines += !flag[l];
  }

  // Decomposition checks on a few planes through 1.
  {
    std::size_t done = 0;
    const Poly one = arena.point(arena.one_index());
    for (std::size_t a = 0; a < ng && done < config.planes; ++a)
      for (std::size_t b = a + 1; b < ng && done < config.planes; ++b) {
        const Poly& ga = arena.generators()[a].poly();
        const Poly& gb = arena.generators()[b].poly();
        if (linear_rank({RatFn(one), RatFn(ga), RatFn(gb)}) < 3) continue;
        const EmbeddedSubspace plane =
            arena.subspace({one, ga, gb}, "P2(1, " + K.format(ga) + ", " + K.format(gb) + ")");
        const Decomposition d = decompose_subspace(psi, plane, config.dependence_bound);
        ++result.checks.decomposition_calls;
        result.checks.decomposition_checks += d.checks;
        result.checks.decomposition_defects += d.defects.size();
        for (const auto& def : d.defects) result.notes.push_back(def.property + " defect: " + def.detail);
        std::string verdict;
        try {
          verdict = to_string(classify_plane(psi, plane, config.dependence_bound).verdict, plane);
        } catch (const Error& e) {
          if (e.code() != ErrorCode::PreconditionFailed) throw;
          verdict = "precondition-failed";
        }
        result.planes.push_back(plane.label() + ": " + verdict);
        ++done;
      }
  }

  // Ratios p/h on the selected lines are the points of the shifted lines l(1, p/h).
  auto ratio_vectors = [&](const std::vector<char>& selected) {
    lattice::IntMatrix rows;
    for (std::size_t l = 0; l < lines.size(); ++l) {
      if (!selected[l]) continue;
      const auto& line = lines[l];
      for (std::size_t k = 1; k < line.size(); ++k)
        rows.push_back(difference(arena.point_vector(line[k]), arena.point_vector(line[0])));
    }
    return rows;
  };
  // First nontrivial ratio image on the selected lines and whether every
  // ratio image is dependent on it.
  struct FieldProbe {
    std::optional<DivisorRep> base;
    bool shared = true;
    std::size_t tested = 0;
  };
  auto probe_field = [&](const std::vector<char>& selected, std::size_t cap) {
    FieldProbe probe;
    std::unordered_set<std::size_t> seen;
    ClassIds ratio_ids;
    for (std::size_t l = 0; l < lines.size() && probe.shared && probe.tested < cap; ++l) {
      if (!selected[l]) continue;
      for (auto h : lines[l])
        for (auto p : lines[l]) {
          const DivisorRep r = images[p] / images[h];
          if (r.is_trivial() || !seen.insert(ratio_ids(r)).second) continue;
          if (!probe.base) {
            probe.base = r;
            continue;
          }
          ++probe.tested;
          if (!dep(*probe.base, r)) probe.shared = false;
        }
    }
    return probe;
  };

  const FieldProbe u_probe = probe_field(injective, 3000);
  result.u_hypothesis = u_probe.base.has_value() && !u_probe.shared;

  lattice::HermiteBasis units(ng);
  ReconstructionPath path;
  if (result.u_hypothesis) {
    path = ReconstructionPath::UnionOfInjectiveLines;
    const lattice::IntMatrix rows = ratio_vectors(injective);
    for (const auto& r : rows) units.add(r);
    // Triple products: x y z = t w with t, w in u, on sampled triples.
    result.checks.triple_product_applicable = true;
    std::vector<lattice::IntVector> u;
    std::unordered_set<std::string> u_keys;
    for (const auto& r : rows) {
      for (const auto& v : {r, difference(lattice::IntVector(ng, 0), r)})
        if (u.size() < 20000 && u_keys.insert(vector_key(v)).second) u.push_back(v);
    }
    for (std::size_t s = 0; s < config.closure_samples && !u.empty(); ++s) {
      auto rng = item_rng(config.seed, 1'000'000 + s);
      lattice::IntVector v(ng, 0);
      for (int k = 0; k < 3; ++k) {
        const auto& x = u[uniform_below(rng, u.size())];
        for (std::size_t c = 0; c < ng; ++c) v[c] = lattice::checked_add(v[c], x[c]);
      }
      ++result.checks.triple_product_samples;
      const bool found = std::any_of(u.begin(), u.end(), [&](const auto& t) { return u_keys.count(vector_key(difference(v, t))) > 0; });
      if (!found) ++result.checks.triple_product_failures;
    }
  } else if (result.nonflag_lines > 0) {
    std::vector<char> nonflag(lines.size());
    for (std::size_t l = 0; l < lines.size(); ++l) nonflag[l] = !flag[l];
    const FieldProbe f_probe = probe_field(nonflag, 3000);
    if (!f_probe.shared) {
      result.verdict = Inconclusive{"images of the non-flag lines do not lie in one one-dimensional field"};
      return result;
    }
    for (std::size_t i = 0; i < np; ++i)
      if (dep(images[i], *f_probe.base)) units.add(arena.point_vector(i));
    const lattice::Quotient trial(units.rows(), ng);
    if (trial.free_rank() == 0 && trial.torsion().empty()) {
      result.notes.push_back(
          "psi^{-1}(F^x) is the whole arena group (the image has transcendence degree one); "
          "using the lines on which psi is not a flag map");
      path = ReconstructionPath::NonFlagLines;
      units = lattice::HermiteBasis(ng);
      for (const auto& r : ratio_vectors(nonflag)) units.add(r);
    } else {
      path = ReconstructionPath::NonFlagField;
    }
  } else {
    path = ReconstructionPath::FlagEverywhere;
    for (const auto& r : kernel) units.add(r);
  }

  lattice::Quotient gamma(units.rows(), ng);
  if (gamma.free_rank() == 0 && gamma.torsion().empty()) {
    result.verdict = Inconclusive{"the reconstructed unit group is the whole arena group"};
    return result;
  }

  // The quotient map is a flag map on every catalog line.
  std::vector<std::size_t> cls(np);
  {
    std::map<lattice::IntVector, std::size_t> class_ids;
    for (std::size_t i = 0; i < np; ++i)
      cls[i] = class_ids.emplace(gamma.coordinates(arena.point_vector(i)), class_ids.size()).first->second;
  }
  std::optional<std::size_t> first_failure;
  for (std::size_t l = 0; l < lines.size(); ++l) {
    std::vector<std::size_t> values;
    for (auto p : lines[l]) values.push_back(cls[p]);
    ++result.checks.line_flag_lines;
    if (!constant_off_one(values)) {
      ++result.checks.line_flag_failures;
      if (!first_failure) first_failure = l;
    }
  }
  if (first_failure) {
    const auto& line = lines[*first_failure];
    throw Error(ErrorCode::OrderFailure, "quotient map is not a flag map on the line through " +
                                             K.format(arena.point(line[0])) + " and " + K.format(arena.point(line[1])));
  }
  result.verdict = ValuationVerdict{path, units.rows(), std::move(gamma)};
  return result;
}

lattice::IntVector gamma_value(const ValuationVerdict& v, const Arena& arena, const DivisorRep& f) {
  return v.gamma.project(arena.to_vector(f));
}

ConclusionChecks verify_theorem_conclusions(const ReconstructionResult& result, const PsiMap& psi, const Arena& arena,
                                            std::size_t samples, std::uint64_t seed) {
  const ValuationVerdict* v = result.valuation();
  if (!v) throw Error(ErrorCode::PreconditionFailed, "no valuation verdict to verify");
  const std::size_t np = arena.point_count();
  std::vector<lattice::IntVector> cls(np);
  for (std::size_t i = 0; i < np; ++i) cls[i] = v->gamma.coordinates(arena.point_vector(i));
  std::vector<DivisorRep> images;
  for (std::size_t i = 0; i < np; ++i) images.push_back(psi(arena.point_divisor(i)));
  ConclusionChecks out;

  // (1) On a line through h and p where only p changes class, every other
  // point r satisfies r/h in k^x (1 + m).
  const auto& lines = arena.lines();
  std::vector<std::size_t> order(lines.size());
  for (std::size_t l = 0; l < lines.size(); ++l) order[l] = l;
  {
    auto rng = item_rng(seed, 0);
    for (std::size_t l = order.size(); l > 1; --l) std::swap(order[l - 1], order[uniform_below(rng, l)]);
  }
  for (std::size_t l : order) {
    if (out.one_plus_m_samples >= samples) break;
    const auto& line = lines[l];
    std::map<lattice::IntVector, std::vector<std::size_t>> by_class;
    for (auto p : line) by_class[cls[p]].push_back(p);
    std::optional<std::size_t> odd;
    if (by_class.size() == 2)
      for (const auto& [c, members] : by_class)
        if (members.size() == 1) odd = members[0];
    if (!odd) continue;
    const std::size_t h = line[0] == *odd ? line[1] : line[0];
    for (auto r : line) {
      if (r == h || r == *odd) continue;
      ++out.one_plus_m_samples;
      if (!images[r].same_class(images[h])) ++out.one_plus_m_failures;
    }
  }

  // (2) Units u, u' have equal images iff the line through them is not
  // constant, i.e. u - c u' lies in m for some constant c.
  std::vector<std::size_t> units;
  for (std::size_t i = 0; i < np; ++i)
    if (cls[i] == cls[arena.one_index()]) units.push_back(i);
  {
    auto rng = item_rng(seed, 1);
    for (std::size_t l = units.size(); l > 1; --l) std::swap(units[l - 1], units[uniform_below(rng, l)]);
  }
  if (units.size() > samples) units.resize(samples);
  out.residue_samples = units.size();
  for (std::size_t a = 0; a < units.size(); ++a)
    for (std::size_t b = a + 1; b < units.size(); ++b) {
      const auto& line = lines[arena.line_through(units[a], units[b])];
      const bool constant =
          std::all_of(line.begin(), line.end(), [&](auto r) { return cls[r] == cls[line[0]]; });
      const bool same_image = images[units[a]].same_class(images[units[b]]);
      ++out.residue_pairs;
      if (same_image == constant) ++out.residue_failures;
    }
  return out;
}

nlohmann::ordered_json to_json(const ReconstructionResult& result, const Arena& arena) {
  const FunctionField& K = arena.field();
  nlohmann::ordered_json j;
  if (const auto* v = result.valuation()) {
    j["verdict"] = "valuation";
    j["path"] = to_string(v->path);
    nlohmann::ordered_json sample = nlohmann::ordered_json::array();
    std::size_t in_units = 0;
    for (std::size_t g = 0; g < arena.generators().size(); ++g) {
      lattice::IntVector e(arena.generators().size(), 0);
      e[g] = 1;
      if (!v->gamma.is_zero(e)) continue;
      ++in_units;
      if (sample.size() < 8) sample.push_back(K.format(arena.generators()[g].poly()));
    }
    j["o_units_sample"] = sample;
    j["o_units_generators"] = in_units;
    j["gamma_rank"] = v->gamma.free_rank();
    j["gamma_torsion"] = v->gamma.torsion();
  } else if (std::holds_alternative<InjectiveVerdict>(result.verdict)) {
    j["verdict"] = "injective";
  } else {
    j["verdict"] = "inconclusive";
    j["reason"] = std::get<Inconclusive>(result.verdict).reason;
  }
  const auto& c = result.checks;
  j["lemma_checks"] = {
      {"decomposition", {{"calls", c.decomposition_calls}, {"checks", c.decomposition_checks}, {"defects", c.decomposition_defects}}},
      {"triple_product", {{"applicable", c.triple_product_applicable}, {"samples", c.triple_product_samples}, {"failures", c.triple_product_failures}}},
      {"line_flag", {{"lines", c.line_flag_lines}, {"failures", c.line_flag_failures}}}};
  j["lines"] = {{"total", arena.lines().size()}, {"injective", result.injective_lines}, {"nonflag", result.nonflag_lines}};
  j["u_hypothesis"] = result.u_hypothesis;
  j["planes"] = result.planes;
  j["notes"] = result.notes;
  j["arena"] = arena.describe();
  return j;
}

nlohmann::ordered_json to_json(const ConclusionChecks& c) {
  nlohmann::ordered_json j;
  j["one_plus_m"] = {{"samples", c.one_plus_m_samples}, {"failures", c.one_plus_m_failures}};
  j["residue_injectivity"] = {
      {"representatives", c.residue_samples}, {"pairs", c.residue_pairs}, {"failures", c.residue_failures}};
  j["passed"] = c.passed();
  return j;
}

}  // namespace flagval
