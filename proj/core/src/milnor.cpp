#include "flagval/milnor.hpp"

#include <algorithm>
#include <numeric>

#include "flagval/error.hpp"
#include "flagval/valuation.hpp"

namespace flagval {

namespace {

DivisorRep nonzero_divisor(const RatFn& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroEntry, "symbol entry is zero");
  return to_divisor(f);
}

void require_univariate(const DivisorRep& f) {
  if (f.nvars() != 1) throw Error(ErrorCode::UnsupportedPlace, "tame symbols are implemented for F_q(t)");
}

}  // namespace

K2Symbol::K2Symbol(DivisorRep f, DivisorRep g, std::int64_t multiplicity) {
  require_univariate(f);
  require_univariate(g);
  if (&f.field() != &g.field()) throw Error(ErrorCode::FieldMismatch, "symbol entries over different fields");
  terms_.push_back({std::move(f), std::move(g), multiplicity});
}

K2Symbol K2Symbol::of(const RatFn& f, const RatFn& g) { return K2Symbol(nonzero_divisor(f), nonzero_divisor(g)); }

K2Symbol& K2Symbol::operator+=(const K2Symbol& other) {
  terms_.insert(terms_.end(), other.terms_.begin(), other.terms_.end());
  return *this;
}

Poly residue_modulus(const Place& place) {
  if (std::holds_alternative<InfinitePlace>(place.kind())) return infinity_modulus(place.field());
  if (std::holds_alternative<FinitePlace>(place.kind())) return place.defining_polynomial();
  throw Error(ErrorCode::UnsupportedPlace, "tame symbols are implemented for places of F_q(t)");
}

ResidueClass tame_symbol(const K2Symbol& s, const Place& place) {
  const Poly modulus = residue_modulus(place);
  ResidueClass acc = ResidueClass::constant(modulus, 1);
  for (const auto& term : s.terms()) {
    const std::int64_t m = val(place, term.f)[0];
    const std::int64_t n = val(place, term.g)[0];
    DivisorRep h = term.f.pow(static_cast<int>(n)) * term.g.pow(static_cast<int>(-m));
    if ((m * n) % 2 != 0) h = h.with_unit(place.field().neg(h.unit()));
    acc = acc * std::get<ResidueClass>(residue(place, h)).pow(term.multiplicity);
  }
  return acc;
}

std::vector<Place> symbol_support(const K2Symbol& s) {
  std::vector<Generator> gens;
  const Field* field = nullptr;
  for (const auto& term : s.terms()) {
    field = &term.f.field();
    for (const auto* d : {&term.f, &term.g})
      for (const auto& [g, e] : d->terms())
        if (!g.is_infinity()) gens.push_back(g);
  }
  std::sort(gens.begin(), gens.end());
  gens.erase(std::unique(gens.begin(), gens.end()), gens.end());
  std::vector<Place> out;
  for (const auto& g : gens) out.push_back(Place::finite(g.poly()));
  if (field) out.push_back(Place::infinite(*field));
  return out;
}

TameResidueVector tame_residues(const K2Symbol& s) {
  TameResidueVector out;
  for (auto& place : symbol_support(s)) {
    ResidueClass r = tame_symbol(s, place);
    out.emplace_back(std::move(place), std::move(r));
  }
  return out;
}

bool steinberg_check(const RatFn& f) {
  if (f.is_zero() || f.is_one()) throw Error(ErrorCode::BadInput, "Steinberg check needs f other than 0 and 1");
  const RatFn one = RatFn::constant(f.field(), f.nvars(), 1);
  for (const auto& [place, r] : tame_residues(K2Symbol::of(f, one - f)))
    if (!r.is_one()) return false;
  return true;
}

bool weil_reciprocity_check(const RatFn& f, const RatFn& g) {
  const Field& field = f.field();
  Elem product = 1;
  for (const auto& [place, r] : tame_residues(K2Symbol::of(f, g))) product = field.mul(product, r.norm());
  return product == 1;
}

Tower Tower::doubling(int height) {
  Tower t;
  for (int i = 0, d = 1; i <= height; ++i, d *= 2) t.degrees.push_back(d);
  return t;
}

std::string Tower::label(const Field& base, int level) const {
  return "F" + std::to_string(ipow(base.order(), degrees.at(static_cast<std::size_t>(level))));
}

K1Divisibility divisible_in_k1(const DivisorRep& f, std::uint64_t n, const Tower& tower) {
  const Field& field = f.field();
  if (n < 1 || n % field.characteristic() == 0)
    throw Error(ErrorCode::BadN, "n must be positive and prime to the characteristic");
  for (const auto& [g, e] : f.terms())
    if (e % static_cast<std::int64_t>(n) != 0) return NotDivisible{g, e};
  const ResidueClass unit = ResidueClass::constant(infinity_modulus(field), f.unit());
  if (unit.is_nth_power_in(n, 1)) return DivisibleHere{};
  for (int level = 0; level <= tower.top(); ++level) {
    const int d = tower.degrees[static_cast<std::size_t>(level)];
    if (unit.is_nth_power_in(n, d)) return DivisibleInTower{level, d};
  }
  return UnitNotDivisibleOnLadder{tower.degrees.empty() ? 1 : tower.degrees.back()};
}

SymbolProbe symbol_divisibility_probe(const RatFn& f, const RatFn& g, std::uint64_t ell, const Tower& tower) {
  const Field& field = f.field();
  if (!is_prime(ell) || ell == field.characteristic())
    throw Error(ErrorCode::BadL, "l must be a prime different from the characteristic");
  if (tower.degrees.empty()) throw Error(ErrorCode::InvalidConfig, "empty tower");
  const TameResidueVector residues = tame_residues(K2Symbol::of(f, g));
  auto first_failure = [&](int level) -> const std::pair<Place, ResidueClass>* {
    const int d = tower.degrees[static_cast<std::size_t>(level)];
    for (const auto& entry : residues)
      if (!entry.second.is_nth_power_in(ell, std::lcm(d, entry.second.degree()))) return &entry;
    return nullptr;
  };
  const int top = tower.top();
  if (const auto* bad = first_failure(top)) return ObstructedAtLevel{top, bad->first, bad->second};
  int cleared = top;
  while (cleared > 0 && first_failure(cleared - 1) == nullptr) --cleared;
  return UnobstructedUpTo{top, cleared};
}

}  // namespace flagval
