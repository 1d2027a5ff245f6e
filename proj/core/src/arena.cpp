#include "flagval/arena.hpp"

#include <algorithm>

#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/projspace.hpp"
#include "flagval/rng.hpp"

namespace flagval {

namespace {

std::vector<Monomial> basis_descending(int nvars, int degree) {
  std::vector<Monomial> out;
  for (int d = 0; d <= degree; ++d) {
    if (nvars == 1) {
      out.push_back({static_cast<std::uint16_t>(d), 0});
      continue;
    }
    for (int i = 0; i <= d; ++i) out.push_back({static_cast<std::uint16_t>(i), static_cast<std::uint16_t>(d - i)});
  }
  std::sort(out.begin(), out.end(), std::greater<>());
  return out;
}

}  // namespace

Arena::Arena(FunctionField field, int degree, int exponent_bound)
    : field_(std::move(field)), degree_(degree), exponent_bound_(exponent_bound) {
  if (degree < 1) throw Error(ErrorCode::InvalidConfig, "arena degree must be >= 1");
  if (exponent_bound < 1) throw Error(ErrorCode::InvalidConfig, "arena exponent bound must be >= 1");
  const Field& F = field_.field();
  const int nvars = field_.nvars();
  for (int d = 1; d <= degree; ++d)
    for (const Poly& p : monic_irreducibles(F, nvars, d)) {
      generator_index_.emplace(Generator(p), generators_.size());
      generators_.emplace_back(p);
    }

  const std::vector<Monomial> basis = basis_descending(nvars, degree);
  const std::vector<ProjPoint> coords = enumerate_points(static_cast<int>(basis.size()) - 1, F);
  const std::uint64_t q = F.order();
  const std::uint64_t n = coords.size();
  if (n * (n - 1) / (q * (q + 1)) > kMaxLines)
    throw Error(ErrorCode::SizeBound, "arena line catalog exceeds " + std::to_string(kMaxLines) + " lines");
  points_.reserve(coords.size());
  for (const auto& c : coords) {
    Poly p(F, nvars);
    for (std::size_t k = 0; k < basis.size(); ++k)
      if (c.coords()[k] != 0) p = p + Poly::monomial(F, nvars, basis[k], c.coords()[k]);
    point_index_.emplace(p, points_.size());
    if (p.is_one()) one_ = points_.size();
    points_.push_back(std::move(p));
  }
  divisors_.reserve(points_.size());
  vectors_.reserve(points_.size());
  for (const Poly& p : points_) {
    divisors_.push_back(to_divisor(p));
    vectors_.push_back(to_vector(divisors_.back()));
  }

  const std::size_t np = points_.size();
  for (std::size_t i = 0; i < np; ++i)
    for (std::size_t j = i + 1; j < np; ++j) {
      std::vector<std::uint32_t> line{static_cast<std::uint32_t>(i), static_cast<std::uint32_t>(j)};
      bool smallest_pair = true;
      for (Elem a = 1; a < F.order() && smallest_pair; ++a) {
        const std::size_t k = point_index_.at((points_[i] + points_[j].scaled(a)).monic());
        if (k < j) smallest_pair = false;
        line.push_back(static_cast<std::uint32_t>(k));
      }
      if (!smallest_pair) continue;
      std::sort(line.begin(), line.end());
      line_of_pair_.emplace(static_cast<std::uint64_t>(i) * np + j, lines_.size());
      lines_.push_back(std::move(line));
    }
}

std::optional<std::size_t> Arena::generator_index(const Generator& g) const {
  auto it = generator_index_.find(g);
  if (it == generator_index_.end()) return std::nullopt;
  return it->second;
}

lattice::IntVector Arena::to_vector(const DivisorRep& f) const {
  lattice::IntVector v(generators_.size(), 0);
  for (const auto& [g, e] : f.terms()) {
    if (g.is_infinity()) continue;
    auto idx = generator_index(g);
    if (!idx) throw Error(ErrorCode::BadInput, "class outside the arena: " + f.to_string(field_.names()));
    v[*idx] = e;
  }
  return v;
}

bool Arena::covers(const DivisorRep& f) const {
  return std::all_of(f.terms().begin(), f.terms().end(),
                     [&](const auto& t) { return t.first.is_infinity() || generator_index(t.first).has_value(); });
}

DivisorRep Arena::from_vector(const lattice::IntVector& v) const {
  DivisorRep out = DivisorRep::scalar(field_.field(), field_.nvars(), 1);
  for (std::size_t k = 0; k < v.size(); ++k)
    if (v[k] != 0) out *= to_divisor(generators_[k].poly()).pow(static_cast<int>(v[k]));
  return out;
}

std::optional<std::size_t> Arena::index_of(const Poly& p) const {
  if (p.is_zero()) return std::nullopt;
  auto it = point_index_.find(p.monic());
  if (it == point_index_.end()) return std::nullopt;
  return it->second;
}

std::size_t Arena::line_through(std::size_t a, std::size_t b) const {
  if (a == b) throw Error(ErrorCode::EqualPoints, "line through equal points");
  const Field& F = field_.field();
  std::vector<std::size_t> pts{a, b};
  for (Elem c = 1; c < F.order(); ++c) pts.push_back(point_index_.at((points_[a] + points_[b].scaled(c)).monic()));
  std::sort(pts.begin(), pts.end());
  return line_of_pair_.at(static_cast<std::uint64_t>(pts[0]) * points_.size() + pts[1]);
}

EmbeddedSubspace Arena::subspace(std::vector<Poly> gens, std::string label) const {
  std::vector<RatFn> fns;
  fns.reserve(gens.size());
  for (auto& g : gens) fns.emplace_back(std::move(g));
  return embed_span(field_, std::move(fns), std::move(label));
}

DivisorRep Arena::random_element(std::mt19937_64& rng) const {
  DivisorRep out = DivisorRep::scalar(field_.field(), field_.nvars(), 1);
  const std::size_t count = 1 + uniform_below(rng, 3);
  for (std::size_t k = 0; k < count; ++k) {
    const std::size_t g = uniform_below(rng, generators_.size());
    std::int64_t e = static_cast<std::int64_t>(uniform_below(rng, 2 * static_cast<std::uint64_t>(exponent_bound_))) -
                     exponent_bound_;
    if (e >= 0) ++e;
    DivisorRep next = out * to_divisor(generators_[g].poly()).pow(static_cast<int>(e));
    if (within_bounds(next)) out = std::move(next);
  }
  return out;
}

bool Arena::within_bounds(const DivisorRep& f) const {
  if (!covers(f)) return false;
  return std::all_of(f.terms().begin(), f.terms().end(), [&](const auto& t) {
    return t.first.is_infinity() || (t.second <= exponent_bound_ && t.second >= -exponent_bound_);
  });
}

nlohmann::ordered_json Arena::describe() const {
  nlohmann::ordered_json j;
  j["field"] = field_.to_string();
  j["degree"] = degree_;
  j["exponent_bound"] = exponent_bound_;
  j["generators"] = generators_.size();
  j["points"] = points_.size();
  j["lines"] = lines_.size();
  return j;
}

}  // namespace flagval
