#include <algorithm>
#include <bit>
#include <random>

#include "flagval/error.hpp"
#include "flagval/flag.hpp"
#include "flagval/parallel.hpp"
#include "flagval/rng.hpp"

namespace flagval {

bool star_condition(const StarMap& m) { return !star_violation(m).has_value(); }

std::optional<std::size_t> star_violation(const StarMap& m) {
  if (m.domain == nullptr || m.values.size() != m.domain->size())
    throw Error(ErrorCode::BadInput, "star map must be total on its domain");
  const std::uint32_t r = m.modulus;
  const auto& lines = m.domain->lines();
  for (std::size_t l = 0; l < lines.size(); ++l) {
    bool found = false;
    // Nontrivial relation a*u + b*v = c, (a, b) != (0, 0).
    for (std::uint32_t a = 0; a < r && !found; ++a)
      for (std::uint32_t b = 0; b < r && !found; ++b) {
        if (a == 0 && b == 0) continue;
        const auto& first = m.values[lines[l][0]];
        const std::uint32_t c = (a * first[0] + b * first[1]) % r;
        found = std::all_of(lines[l].begin(), lines[l].end(), [&](std::size_t x) {
          const auto& v = m.values[x];
          return (a * v[0] + b * v[1]) % r == c;
        });
      }
    if (!found) return l;
  }
  return std::nullopt;
}

namespace {

constexpr std::uint32_t kValues = 4;  // A^2(F_2), encoded a + 2b

struct Model {
  const ProjectiveSpace* plane;
  std::vector<std::vector<std::size_t>> lines_closing_at;  // lines whose largest point is i
};

Model make_model(const ProjectiveSpace& plane) {
  Model m{&plane, std::vector<std::vector<std::size_t>>(plane.size())};
  for (std::size_t l = 0; l < plane.lines().size(); ++l) m.lines_closing_at[plane.lines()[l].back()].push_back(l);
  return m;
}

// Over F_2 an affine line of A^2 has two points, so (*) means at most two
// distinct values on every line.
bool closing_lines_ok(const Model& m, const std::vector<std::uint32_t>& values, std::size_t i) {
  for (std::size_t l : m.lines_closing_at[i]) {
    unsigned seen = 0;
    for (std::size_t x : m.plane->lines()[l]) seen |= 1u << values[x];
    if (std::popcount(seen) > 2) return false;
  }
  return true;
}

void record(const Model& m, const std::vector<std::uint32_t>& values, CollineationReport& rep) {
  ++rep.maps_satisfying;
  unsigned seen = 0;
  for (auto v : values) seen |= 1u << v;
  const auto image = static_cast<std::uint32_t>(std::popcount(seen));
  rep.max_image_size = std::max(rep.max_image_size, image);
  if (image > 3) {
    ++rep.image_size_violations;
    if (!rep.first_image_violation) rep.first_image_violation = values;
  }
  const std::size_t n = values.size();
  std::vector<int> labels(n);
  bool some_flag = false;
  for (std::uint32_t r : {1u, 2u, 3u}) {  // (1,0), (0,1), (1,1)
    for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(std::popcount(values[i] & r) & 1u);
    if (is_flag_map_fast(*m.plane, labels)) {
      some_flag = true;
      break;
    }
  }
  if (!some_flag) {
    ++rep.no_flag_combination;
    if (!rep.first_no_flag_combination) rep.first_no_flag_combination = values;
  }
  for (std::size_t i = 0; i < n; ++i) labels[i] = static_cast<int>(values[i]);
  if (line_criterion(*m.plane, labels) && !is_flag_map_fast(*m.plane, labels)) {
    ++rep.line_test_not_flag;
    if (!rep.first_line_test_not_flag) rep.first_line_test_not_flag = values;
  }
}

void merge(CollineationReport& into, const CollineationReport& part) {
  into.maps_satisfying += part.maps_satisfying;
  into.max_image_size = std::max(into.max_image_size, part.max_image_size);
  into.image_size_violations += part.image_size_violations;
  into.no_flag_combination += part.no_flag_combination;
  into.line_test_not_flag += part.line_test_not_flag;
  if (!into.first_image_violation) into.first_image_violation = part.first_image_violation;
  if (!into.first_no_flag_combination) into.first_no_flag_combination = part.first_no_flag_combination;
  if (!into.first_line_test_not_flag) into.first_line_test_not_flag = part.first_line_test_not_flag;
}

void extend(const Model& m, std::vector<std::uint32_t>& values, std::size_t i, CollineationReport& rep) {
  if (i == values.size()) {
    record(m, values, rep);
    return;
  }
  for (std::uint32_t v = 0; v < kValues; ++v) {
    values[i] = v;
    if (closing_lines_ok(m, values, i)) extend(m, values, i + 1, rep);
  }
}

// Randomised depth-first search for one (*)-map; false if the node budget runs out.
bool random_fill(const Model& m, std::vector<std::uint32_t>& values, std::size_t i, std::mt19937_64& rng,
                 std::uint64_t& budget) {
  if (i == values.size()) return true;
  if (budget == 0) return false;
  --budget;
  std::array<std::uint32_t, kValues> order{0, 1, 2, 3};
  for (std::size_t k = kValues - 1; k > 0; --k) std::swap(order[k], order[uniform_below(rng, k + 1)]);
  for (std::uint32_t v : order) {
    values[i] = v;
    if (closing_lines_ok(m, values, i) && random_fill(m, values, i + 1, rng, budget)) return true;
  }
  return false;
}

}  // namespace

CollineationReport collineation_analyze(std::uint32_t p, SearchMode mode, std::uint64_t samples, std::uint64_t seed) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (mode == SearchMode::Exhaustive && p > 3)
    throw Error(ErrorCode::SizeBound, "exhaustive collineation sweep is limited to p <= 3");
  const ProjectiveSpace& plane = projective_space(2, Field::get(p, 1, 7));
  const Model model = make_model(plane);
  CollineationReport rep;
  rep.p = p;
  rep.mode = mode;
  rep.samples = samples;
  rep.seed = seed;
  const std::size_t n = plane.size();

  if (mode == SearchMode::Exhaustive) {
    // Split on the values of the first three points; reduce in prefix order.
    constexpr std::size_t kPrefix = 3;
    std::vector<std::vector<std::uint32_t>> prefixes;
    for (std::uint32_t code = 0; code < kValues * kValues * kValues; ++code) {
      std::vector<std::uint32_t> values(n, 0);
      bool ok = true;
      for (std::size_t i = 0; i < kPrefix && ok; ++i) {
        values[i] = (code >> (2 * (kPrefix - 1 - i))) & 3u;
        ok = closing_lines_ok(model, values, i);
      }
      if (ok) prefixes.push_back(std::move(values));
    }
    std::vector<CollineationReport> parts(prefixes.size());
    parallel_for(prefixes.size(), [&](std::size_t k) {
      std::vector<std::uint32_t> values = prefixes[k];
      extend(model, values, kPrefix, parts[k]);
    });
    for (const auto& part : parts) merge(rep, part);
    return rep;
  }

  if (samples == 0) throw Error(ErrorCode::InvalidConfig, "sampled mode needs a positive sample count");
  std::vector<CollineationReport> parts(samples);
  parallel_for(samples, [&](std::size_t s) {
    std::mt19937_64 rng = item_rng(seed, s);
    std::vector<std::uint32_t> values(n, 0);
    std::uint64_t budget = 1'000'000;
    if (random_fill(model, values, 0, rng, budget)) record(model, values, parts[s]);
  });
  for (const auto& part : parts) merge(rep, part);
  return rep;
}

}  // namespace flagval
