#include "flagval/valuation.hpp"

#include "flagval/error.hpp"

namespace flagval {

bool Gamma::is_zero() const {
  for (auto x : c_)
    if (x != 0) return false;
  return true;
}

Gamma operator+(const Gamma& a, const Gamma& b) {
  std::vector<std::int64_t> c(a.c_.size());
  for (std::size_t i = 0; i < c.size(); ++i) c[i] = a.c_[i] + b.c_[i];
  return Gamma(std::move(c));
}

Gamma operator-(const Gamma& a, const Gamma& b) { return a + (-b); }

Gamma Gamma::operator-() const {
  std::vector<std::int64_t> c = c_;
  for (auto& x : c) x = -x;
  return Gamma(std::move(c));
}

std::string Gamma::to_string() const {
  if (c_.size() == 1) return std::to_string(c_[0]);
  std::string out = "(";
  for (std::size_t i = 0; i < c_.size(); ++i) out += (i ? "," : "") + std::to_string(c_[i]);
  return out + ")";
}

Poly infinity_modulus(const Field& field) { return Poly::variable(field, 1, 0); }

namespace {

void require_nonzero(const RatFn& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroElement, "valuation of zero");
}

void require_ring(const Place& place, int nvars) {
  if (place.nvars() != nvars) throw Error(ErrorCode::FieldMismatch, "place and element live in different fields");
}

// Order at a place of k(s) of a univariate rational function.
std::int64_t univariate_order(const Place& place, const RatFn& f) {
  if (const auto* fp = std::get_if<FinitePlace>(&place.kind()))
    return multiplicity(f.num(), fp->prime) - multiplicity(f.den(), fp->prime);
  return f.den().degree() - f.num().degree();
}

std::int64_t univariate_order(const std::variant<FinitePlace, InfinitePlace>& point, const RatFn& f) {
  if (const auto* fp = std::get_if<FinitePlace>(&point))
    return multiplicity(f.num(), fp->prime) - multiplicity(f.den(), fp->prime);
  return f.den().degree() - f.num().degree();
}

Place point_place(const std::variant<FinitePlace, InfinitePlace>& point, const Field& field) {
  if (const auto* fp = std::get_if<FinitePlace>(&point)) return Place::finite(fp->prime);
  return Place::infinite(field);
}

CurveChart require_chart(const Place& place) {
  auto chart = place.chart();
  if (!chart) throw Error(ErrorCode::UnsupportedPlace, "residues need a curve of degree 1 in some variable");
  return *chart;
}

// Image in k(s) of f * C^{-ord_C f} for a divisor representation.
RatFn curve_residue_of_unit_part(const Poly& curve, const CurveChart& chart, const DivisorRep& f) {
  const Field& field = f.field();
  RatFn acc = RatFn::constant(field, 1, f.unit());
  for (const auto& [g, e] : f.terms()) {
    if (g.poly() == curve) continue;
    acc = acc * restrict_to_chart(g.poly(), chart).pow(e);
  }
  return acc;
}

RatFn curve_residue_of_unit_part(const Poly& curve, const CurveChart& chart, const RatFn& f) {
  Poly num = f.num(), den = f.den();
  while (auto q = exact_divide(num, curve)) num = std::move(*q);
  while (auto q = exact_divide(den, curve)) den = std::move(*q);
  return restrict_to_chart(num, chart) / restrict_to_chart(den, chart);
}

std::int64_t curve_order(const Poly& curve, const RatFn& f) {
  return multiplicity(f.num(), curve) - multiplicity(f.den(), curve);
}

}  // namespace

ResidueClass residue_at(const Place& place, const RatFn& f) {
  require_nonzero(f);
  if (univariate_order(place, f) != 0) throw Error(ErrorCode::NotAUnit, "residue of a non-unit");
  if (const auto* fp = std::get_if<FinitePlace>(&place.kind())) {
    Poly num = f.num(), den = f.den();
    while (auto q = exact_divide(num, fp->prime)) num = std::move(*q);
    while (auto q = exact_divide(den, fp->prime)) den = std::move(*q);
    return ResidueClass(fp->prime, num) / ResidueClass(fp->prime, den);
  }
  const Field& field = f.field();
  return ResidueClass::constant(infinity_modulus(field),
                                field.div(f.num().leading_coefficient(), f.den().leading_coefficient()));
}

Gamma val(const Place& place, const DivisorRep& f) {
  if (const auto* fp = std::get_if<FinitePlace>(&place.kind())) {
    require_ring(place, f.nvars());
    return Gamma({f.exponent(Generator(fp->prime))});
  }
  if (std::holds_alternative<InfinitePlace>(place.kind())) {
    require_ring(place, f.nvars());
    return Gamma({f.exponent(Generator::infinity(f.field()))});
  }
  require_ring(place, f.nvars());
  if (const auto* c = std::get_if<CurvePlace>(&place.kind())) return Gamma({f.exponent(Generator(c->curve))});
  const auto& cp = std::get<CompositePlace>(place.kind());
  const std::int64_t first = f.exponent(Generator(cp.curve));
  const RatFn r = curve_residue_of_unit_part(cp.curve, require_chart(place), f);
  return Gamma({first, univariate_order(cp.point, r)});
}

Gamma val(const Place& place, const RatFn& f) {
  require_nonzero(f);
  require_ring(place, f.nvars());
  if (place.is_univariate()) return Gamma({univariate_order(place, f)});
  if (const auto* c = std::get_if<CurvePlace>(&place.kind())) return Gamma({curve_order(c->curve, f)});
  const auto& cp = std::get<CompositePlace>(place.kind());
  const RatFn r = curve_residue_of_unit_part(cp.curve, require_chart(place), f);
  return Gamma({curve_order(cp.curve, f), univariate_order(cp.point, r)});
}

bool in_units(const Place& place, const DivisorRep& f) { return val(place, f).is_zero(); }
bool in_units(const Place& place, const RatFn& f) { return val(place, f).is_zero(); }

bool in_one_plus_m(const Place& place, const RatFn& f) {
  require_nonzero(f);
  const RatFn diff = f - RatFn::constant(f.field(), f.nvars(), 1);
  if (diff.is_zero()) return true;
  return val(place, diff).is_positive();
}

ResidueValue residue(const Place& place, const DivisorRep& f) {
  if (!in_units(place, f)) throw Error(ErrorCode::NotAUnit, "residue of a non-unit");
  const Field& field = f.field();
  if (const auto* fp = std::get_if<FinitePlace>(&place.kind())) {
    ResidueClass acc = ResidueClass::constant(fp->prime, f.unit());
    for (const auto& [g, e] : f.terms()) {
      if (g.is_infinity()) continue;
      acc = acc * ResidueClass(fp->prime, g.poly()).pow(e);
    }
    return acc;
  }
  if (std::holds_alternative<InfinitePlace>(place.kind()))
    return ResidueClass::constant(infinity_modulus(field), f.unit());
  const CurveChart chart = require_chart(place);
  if (const auto* c = std::get_if<CurvePlace>(&place.kind())) return curve_residue_of_unit_part(c->curve, chart, f);
  const auto& cp = std::get<CompositePlace>(place.kind());
  return residue_at(point_place(cp.point, field), curve_residue_of_unit_part(cp.curve, chart, f));
}

ResidueValue residue(const Place& place, const RatFn& f) {
  if (!in_units(place, f)) throw Error(ErrorCode::NotAUnit, "residue of a non-unit");
  if (place.is_univariate()) return residue_at(place, f);
  const CurveChart chart = require_chart(place);
  if (const auto* c = std::get_if<CurvePlace>(&place.kind())) return curve_residue_of_unit_part(c->curve, chart, f);
  const auto& cp = std::get<CompositePlace>(place.kind());
  return residue_at(point_place(cp.point, f.field()), curve_residue_of_unit_part(cp.curve, chart, f));
}

bool is_one(const ResidueValue& r) {
  if (const auto* c = std::get_if<ResidueClass>(&r)) return c->is_one();
  return std::get<RatFn>(r).is_one();
}

std::string to_string(const ResidueValue& r) {
  if (const auto* c = std::get_if<ResidueClass>(&r)) return c->to_string();
  return to_string(std::get<RatFn>(r));
}

Splitting::Splitting(Place place) : place_(std::move(place)), uniformizer_(place_.field(), place_.nvars()) {
  if (place_.rank() != 1) throw Error(ErrorCode::UnsupportedValueGroup, "splittings need value group Z");
  if (std::holds_alternative<InfinitePlace>(place_.kind())) {
    const Field& f = place_.field();
    uniformizer_ = to_divisor(RatFn::variable(f, 1, 0)).inverse();
  } else {
    uniformizer_ = DivisorRep::of(Generator(place_.defining_polynomial()));
    if (place_.is_univariate())
      uniformizer_ *= DivisorRep::of(Generator::infinity(place_.field()), -place_.defining_polynomial().degree());
  }
}

bool Splitting::certify(int range) const {
  for (int a = -range; a <= range; ++a) {
    if (val(place_, section(a)) != Gamma({a})) return false;
    for (int b = -range; b <= range; ++b)
      if (!(section(a + b) == section(a) * section(b))) return false;
  }
  return true;
}

Splitting make_splitting(const Place& place) { return Splitting(place); }

std::vector<Gamma> valuation_values(const Place& place, const EmbeddedSubspace& s) {
  std::vector<Gamma> out;
  out.reserve(s.points().size());
  for (const auto& p : s.points()) out.push_back(val(place, p.divisor));
  return out;
}

FlagVerdict valuation_flag_structure(const Place& place, const EmbeddedSubspace& s) {
  const auto labels = label_values(valuation_values(place, s));
  return is_flag_map(s.geometry(), labels);
}

}  // namespace flagval
