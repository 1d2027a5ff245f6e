#include "flagval/divisor.hpp"

#include <algorithm>

#include "flagval/error.hpp"
#include "flagval/factor.hpp"

namespace flagval {

Generator::Generator(Poly poly) : poly_(std::move(poly)), infinity_(false) {
  if (poly_.is_zero() || poly_.is_constant() || poly_.leading_coefficient() != 1)
    throw Error(ErrorCode::BadInput, "generator must be monic and nonconstant");
}

Generator Generator::infinity(const Field& field) { return Generator(Poly(field, 1), true); }

std::strong_ordering operator<=>(const Generator& a, const Generator& b) {
  if (a.infinity_ != b.infinity_) return a.infinity_ ? std::strong_ordering::greater : std::strong_ordering::less;
  if (a.infinity_) return std::strong_ordering::equal;
  return canonical_compare(a.poly_, b.poly_);
}

std::string Generator::to_string(std::span<const std::string> names) const {
  if (infinity_) return "inf";
  return flagval::to_string(poly_, names);
}

std::string Generator::to_string() const {
  auto names = default_names(poly_.nvars());
  return to_string(names);
}

DivisorRep::DivisorRep(const Field& field, int nvars) : field_(&field), nvars_(nvars) {}

DivisorRep DivisorRep::of(Generator g, int exponent) {
  DivisorRep d(g.poly().field(), g.poly().nvars());
  if (exponent != 0) d.terms_.emplace_back(std::move(g), exponent);
  return d;
}

DivisorRep DivisorRep::scalar(const Field& field, int nvars, Elem unit) {
  if (unit == 0) throw Error(ErrorCode::ZeroElement, "zero is not a unit");
  DivisorRep d(field, nvars);
  d.unit_ = unit;
  return d;
}

int DivisorRep::exponent(const Generator& g) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), g,
                             [](const Entry& e, const Generator& key) { return e.first < key; });
  return it != terms_.end() && it->first == g ? it->second : 0;
}

DivisorRep DivisorRep::with_unit(Elem unit) const {
  DivisorRep d = *this;
  d.unit_ = unit;
  return d;
}

DivisorRep DivisorRep::inverse() const { return pow(-1); }

DivisorRep DivisorRep::pow(int n) const {
  DivisorRep d(*field_, nvars_);
  d.unit_ = field_->pow(unit_, n);
  if (n == 0) return d;
  d.terms_ = terms_;
  for (auto& e : d.terms_) e.second *= n;
  return d;
}

DivisorRep operator*(const DivisorRep& a, const DivisorRep& b) {
  if (a.field_ != b.field_ || a.nvars_ != b.nvars_)
    throw Error(ErrorCode::FieldMismatch, "divisors over different fields");
  DivisorRep d(*a.field_, a.nvars_);
  d.unit_ = a.field_->mul(a.unit_, b.unit_);
  d.terms_.reserve(a.terms_.size() + b.terms_.size());
  std::size_t i = 0, j = 0;
  while (i < a.terms_.size() || j < b.terms_.size()) {
    if (j == b.terms_.size() || (i < a.terms_.size() && a.terms_[i].first < b.terms_[j].first)) {
      d.terms_.push_back(a.terms_[i++]);
    } else if (i == a.terms_.size() || b.terms_[j].first < a.terms_[i].first) {
      d.terms_.push_back(b.terms_[j++]);
    } else {
      int e = a.terms_[i].second + b.terms_[j].second;
      if (e != 0) d.terms_.emplace_back(a.terms_[i].first, e);
      ++i;
      ++j;
    }
  }
  return d;
}

std::size_t DivisorRep::class_hash() const {
  std::size_t h = 0x51ed27;
  for (const auto& [g, e] : terms_) {
    std::size_t v = (g.is_infinity() ? 0x1234567 : g.poly().hash()) ^ (static_cast<std::size_t>(e) * 0x9e3779b1);
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

nlohmann::ordered_json DivisorRep::to_json(std::span<const std::string> names) const {
  nlohmann::ordered_json j = nlohmann::ordered_json::object();
  for (const auto& [g, e] : terms_) j[g.to_string(names)] = e;
  return j;
}

nlohmann::ordered_json DivisorRep::to_json() const {
  auto names = default_names(nvars_);
  return to_json(names);
}

std::string DivisorRep::to_string(std::span<const std::string> names) const {
  std::string out;
  for (const auto& [g, e] : terms_) {
    if (!out.empty()) out += '*';
    std::string s = g.to_string(names);
    bool simple = g.is_infinity() || g.poly().terms().size() == 1;
    out += simple ? s : "(" + s + ")";
    if (e != 1) out += "^" + std::to_string(e);
  }
  return out.empty() ? "1" : out;
}

std::string DivisorRep::to_string() const {
  auto names = default_names(nvars_);
  return to_string(names);
}

DivisorRep to_divisor(const Poly& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "divisor of zero");
  auto fz = poly_factor(f);
  DivisorRep d = DivisorRep::scalar(f.field(), f.nvars(), fz.unit);
  for (auto& [g, k] : fz.factors) d *= DivisorRep::of(Generator(g), k);
  if (f.nvars() == 1 && f.degree() != 0) d *= DivisorRep::of(Generator::infinity(f.field()), -f.degree());
  return d;
}

DivisorRep to_divisor(const RatFn& f) {
  if (f.is_zero()) throw Error(ErrorCode::ZeroFunction, "divisor of zero");
  return to_divisor(f.num()) / to_divisor(f.den());
}

RatFn from_divisor(const DivisorRep& d) {
  const Field& field = d.field();
  Poly num = Poly::constant(field, d.nvars(), d.unit());
  Poly den = Poly::constant(field, d.nvars(), 1);
  for (const auto& [g, e] : d.terms()) {
    if (g.is_infinity()) continue;
    if (e > 0) num *= g.poly().pow(static_cast<unsigned>(e));
    else den *= g.poly().pow(static_cast<unsigned>(-e));
  }
  return RatFn(std::move(num), std::move(den));
}

DivisorRep divisor_from_json(const nlohmann::json& j, const Field& field,
                             std::span<const std::string> names) {
  const int nvars = static_cast<int>(names.size());
  DivisorRep d(field, nvars);
  if (!j.is_object()) throw Error(ErrorCode::ParseError, "divisor JSON must be an object");
  for (const auto& [key, value] : j.items()) {
    if (!value.is_number_integer()) throw Error(ErrorCode::ParseError, "exponent must be an integer");
    int e = value.get<int>();
    if (key == "inf") {
      if (nvars != 1) throw Error(ErrorCode::ParseError, "inf only exists in one variable");
      d *= DivisorRep::of(Generator::infinity(field), e);
    } else {
      Poly p = parse_poly(key, field, names);
      if (!is_irreducible(p) || p.leading_coefficient() != 1)
        throw Error(ErrorCode::ParseError, "generator '" + key + "' is not monic irreducible");
      d *= DivisorRep::of(Generator(p), e);
    }
  }
  return d;
}

}  // namespace flagval
