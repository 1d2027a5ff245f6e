#include "flagval/weil.hpp"

#include <algorithm>

#include "flagval/error.hpp"
#include "flagval/factor.hpp"
#include "flagval/valuation.hpp"

namespace flagval {

CoefficientRing CoefficientRing::mod_prime_power(std::uint32_t ell, int m, std::uint32_t characteristic) {
  if (!is_prime(ell)) throw Error(ErrorCode::BadL, std::to_string(ell) + " is not prime");
  if (ell == characteristic) throw Error(ErrorCode::BadL, "coefficient prime equals the characteristic");
  if (m < 1) throw Error(ErrorCode::InvalidConfig, "exponent must be >= 1");
  std::int64_t mod = 1;
  for (int i = 0; i < m; ++i) mod = lattice::checked_mul(mod, ell);
  return CoefficientRing(mod);
}

std::int64_t CoefficientRing::reduce(std::int64_t a) const {
  if (modulus_ == 0) return a;
  std::int64_t r = a % modulus_;
  return r < 0 ? r + modulus_ : r;
}

std::string CoefficientRing::to_string() const {
  return modulus_ == 0 ? "Z" : "Z/" + std::to_string(modulus_);
}

WeilElement::WeilElement(CoefficientRing ring, Rule rule) : ring_(ring) { terms_.emplace_back(1, std::move(rule)); }

std::int64_t WeilElement::operator()(const DivisorRep& f) const {
  std::int64_t acc = 0;
  for (const auto& [coef, rule] : terms_) {
    std::int64_t v = 0;
    if (const auto* t = std::get_if<TableRule>(&rule)) {
      for (const auto& [g, e] : f.terms()) {
        auto it = t->values.find(g);
        if (it != t->values.end()) v = lattice::checked_add(v, lattice::checked_mul(e, it->second));
      }
    } else {
      const auto& vr = std::get<ValuationRule>(rule);
      const Gamma g = val(vr.place, f);
      for (std::size_t i = 0; i < vr.character.size() && i < g.components().size(); ++i)
        v = lattice::checked_add(v, lattice::checked_mul(vr.character[i], g[i]));
    }
    acc = ring_.add(acc, ring_.mul(coef, v));
  }
  return acc;
}

std::int64_t WeilElement::operator()(const RatFn& f) const { return (*this)(to_divisor(f)); }

WeilElement WeilElement::combine(std::int64_t r, const WeilElement& other, std::int64_t s) const {
  if (!(ring_ == other.ring_)) throw Error(ErrorCode::FieldMismatch, "Weil elements over different rings");
  std::vector<std::pair<std::int64_t, Rule>> terms;
  for (const auto& [c, rule] : terms_) terms.emplace_back(ring_.mul(r, c), rule);
  for (const auto& [c, rule] : other.terms_) terms.emplace_back(ring_.mul(s, c), rule);
  std::erase_if(terms, [&](const auto& t) { return ring_.is_zero(t.first); });
  return WeilElement(ring_, std::move(terms));
}

WeilElement WeilElement::scaled(std::int64_t r) const {
  return combine(r, WeilElement(ring_, std::vector<std::pair<std::int64_t, Rule>>{}), 0);
}

nlohmann::ordered_json WeilElement::to_json(const FunctionField& field) const {
  auto rule_json = [&](const Rule& rule) {
    nlohmann::ordered_json j;
    if (const auto* t = std::get_if<TableRule>(&rule)) {
      j["rule"] = "table";
      nlohmann::ordered_json values = nlohmann::ordered_json::object();
      for (const auto& [g, v] : t->values) values[g.to_string(field.names())] = v;
      j["values"] = values;
      j["default"] = 0;
    } else {
      const auto& vr = std::get<ValuationRule>(rule);
      j["rule"] = "valuation";
      j["place"] = vr.place.to_string(field.names());
      j["character"] = vr.character;
    }
    return j;
  };
  nlohmann::ordered_json out;
  if (terms_.size() == 1 && terms_[0].first == 1) {
    out = rule_json(terms_[0].second);
  } else {
    out["rule"] = "combination";
    nlohmann::ordered_json parts = nlohmann::ordered_json::array();
    for (const auto& [c, rule] : terms_) parts.push_back({{"coefficient", c}, {"element", rule_json(rule)}});
    out["terms"] = parts;
  }
  out["ring"] = ring_.to_string();
  return out;
}

WeilElement weil_from_valuation(const Place& place, std::vector<std::int64_t> character, CoefficientRing ring) {
  if (static_cast<int>(character.size()) != place.rank())
    throw Error(ErrorCode::InvalidConfig, "character length must equal the rank of the value group");
  for (auto& c : character) c = ring.reduce(c);
  return WeilElement(ring, ValuationRule{place, std::move(character)});
}

std::vector<std::pair<Poly, RatFn>> subfield_generators(const Subfield& e, int degree_bound) {
  const RatFn& h = e.generator;
  if (h.is_constant()) throw Error(ErrorCode::ConstantH, "subfield generator is constant");
  const Field& field = h.field();
  std::vector<std::pair<Poly, RatFn>> out;
  for (Elem a = 0; a < field.order(); ++a) {
    Poly p = Poly::variable(field, 1, 0) - Poly::constant(field, 1, a);
    out.emplace_back(p, substitute(p, h));
  }
  for (int d = 2; d <= degree_bound; ++d)
    for (const Poly& p : monic_irreducibles(field, 1, d)) out.emplace_back(p, substitute(p, h));
  return out;
}

std::vector<RestrictedValue> restrict_to_subfield(const WeilElement& w, const Subfield& e, int degree_bound) {
  std::vector<RestrictedValue> out;
  for (auto& [p, f] : subfield_generators(e, degree_bound)) {
    std::int64_t v = w(f);
    out.push_back({std::move(p), std::move(f), v});
  }
  return out;
}

namespace {

lattice::IntMatrix valuation_matrix(const Place& place, const std::vector<DivisorRep>& arena) {
  lattice::IntMatrix m(static_cast<std::size_t>(place.rank()), lattice::IntVector(arena.size(), 0));
  for (std::size_t j = 0; j < arena.size(); ++j) {
    const Gamma g = val(place, arena[j]);
    for (int i = 0; i < place.rank(); ++i) m[static_cast<std::size_t>(i)][j] = g[static_cast<std::size_t>(i)];
  }
  return m;
}

}  // namespace

bool is_inertia(const WeilElement& w, const Place& place, const std::vector<DivisorRep>& arena) {
  const auto kernel = lattice::integer_kernel(valuation_matrix(place, arena), arena.size());
  std::vector<std::int64_t> values;
  values.reserve(arena.size());
  for (const auto& g : arena) values.push_back(w(g));
  const CoefficientRing& R = w.ring();
  for (const auto& k : kernel) {
    std::int64_t acc = 0;
    for (std::size_t j = 0; j < arena.size(); ++j) acc = R.add(acc, R.mul(k[j], values[j]));
    if (!R.is_zero(acc)) return false;
  }
  return true;
}

bool is_decomposition(const WeilElement& w, const Place& place, const std::vector<RatFn>& sample) {
  for (const auto& f : sample) {
    if (!in_one_plus_m(place, f)) throw Error(ErrorCode::BadInput, "sample element is not in 1 + m");
    if (!w.ring().is_zero(w(f))) return false;
  }
  return true;
}

lattice::IntMatrix solve_inertia(const Place& place, const std::vector<DivisorRep>& arena) {
  if (place.rank() != 1) throw Error(ErrorCode::UnsupportedValueGroup, "inertia solve needs a rank one valuation");
  const std::size_t n = arena.size();
  std::vector<std::int64_t> v(n);
  for (std::size_t j = 0; j < n; ++j) v[j] = val(place, arena[j])[0];
  lattice::IntMatrix units;
  for (std::size_t j = 0; j < n; ++j) {
    if (v[j] == 0) {
      lattice::IntVector row(n, 0);
      row[j] = 1;
      units.push_back(std::move(row));
    }
  }
  for (std::size_t a = 0; a < n; ++a)
    for (std::size_t b = a + 1; b < n; ++b) {
      if (v[a] == 0 || v[b] == 0) continue;
      lattice::IntVector row(n, 0);
      row[a] = v[b];
      row[b] = -v[a];
      units.push_back(std::move(row));
    }
  return lattice::integer_kernel(units, n);
}

CPairVerdict c_pair_test(const WeilElement& a, const WeilElement& b, const std::vector<Subfield>& family,
                         const std::vector<DivisorRep>& probe, int degree_bound) {
  const CoefficientRing& R = a.ring();
  auto minor = [&](std::int64_t a1, std::int64_t b1, std::int64_t a2, std::int64_t b2) {
    return R.reduce(lattice::checked_add(lattice::checked_mul(a1, b2), -lattice::checked_mul(a2, b1)));
  };
  {
    std::vector<std::pair<std::int64_t, std::int64_t>> rows;
    for (const auto& g : probe) rows.emplace_back(a(g), b(g));
    bool proportional = true;
    for (std::size_t i = 0; i < rows.size() && proportional; ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j)
        if (minor(rows[i].first, rows[i].second, rows[j].first, rows[j].second) != 0) {
          proportional = false;
          break;
        }
    if (proportional) throw Error(ErrorCode::ProportionalPair, "pair is proportional on the probe set");
  }
  for (std::size_t e = 0; e < family.size(); ++e) {
    const auto gens = subfield_generators(family[e], degree_bound);
    std::vector<std::pair<std::int64_t, std::int64_t>> rows;
    for (const auto& [p, f] : gens) {
      const DivisorRep d = to_divisor(f);
      rows.emplace_back(a(d), b(d));
    }
    for (std::size_t i = 0; i < rows.size(); ++i)
      for (std::size_t j = i + 1; j < rows.size(); ++j) {
        const std::int64_t m = minor(rows[i].first, rows[i].second, rows[j].first, rows[j].second);
        if (m == 0) continue;
        return NonCyclic{e, family[e].label, {gens[i].first, gens[j].first}, {gens[i].second, gens[j].second}, m};
      }
  }
  return Cyclic{};
}

std::optional<SupportingValuation> find_supporting_valuation(const WeilElement& a, const WeilElement& b,
                                                             const std::vector<Place>& universe,
                                                             const std::vector<DivisorRep>& arena,
                                                             int coefficient_bound) {
  std::vector<std::pair<std::int64_t, std::int64_t>> combos;
  for (int r = -coefficient_bound; r <= coefficient_bound; ++r)
    for (int s = -coefficient_bound; s <= coefficient_bound; ++s)
      if (r > 0 || (r == 0 && s > 0)) combos.emplace_back(r, s);
  std::stable_sort(combos.begin(), combos.end(), [](const auto& x, const auto& y) {
    const auto nx = std::llabs(x.first) + std::llabs(x.second), ny = std::llabs(y.first) + std::llabs(y.second);
    if (nx != ny) return nx < ny;
    if (x.first != y.first) return x.first > y.first;
    return x.second > y.second;
  });
  for (const Place& place : universe)
    for (const auto& [r, s] : combos) {
      const WeilElement iota = a.combine(r, b, s);
      if (is_inertia(iota, place, arena)) return SupportingValuation{place, r, s};
    }
  return std::nullopt;
}

}  // namespace flagval
