#include "flagval/embedded.hpp"

#include <cctype>
#include <map>
#include <mutex>

#include "flagval/error.hpp"
#include "flagval/linalg.hpp"

namespace flagval {

FunctionField::FunctionField(const Field& field, std::vector<std::string> names)
    : field_(&field), names_(std::move(names)) {
  if (names_.empty() || names_.size() > 2) throw Error(ErrorCode::InvalidConfig, "function fields have 1 or 2 variables");
}

FunctionField FunctionField::parse(std::string_view spec, std::uint32_t max_order) {
  auto fail = [&] { throw Error(ErrorCode::InvalidConfig, "bad field spec '" + std::string(spec) + "'"); };
  if (spec.size() < 4 || (spec[0] != 'F' && spec[0] != 'f')) fail();
  std::size_t pos = 1;
  std::uint64_t q = 0;
  while (pos < spec.size() && std::isdigit(static_cast<unsigned char>(spec[pos]))) {
    q = q * 10 + static_cast<std::uint64_t>(spec[pos++] - '0');
    if (q > 1'000'000) fail();
  }
  if (q < 2 || pos >= spec.size() || spec[pos] != '(' || spec.back() != ')') fail();
  std::uint32_t p = 0, e = 0;
  for (std::uint32_t cand = 2; cand <= q; ++cand) {
    if (q % cand == 0) {
      p = cand;
      break;
    }
  }
  std::uint64_t x = q;
  while (x % p == 0) {
    x /= p;
    ++e;
  }
  if (x != 1) fail();
  std::vector<std::string> names;
  std::string cur;
  for (std::size_t i = pos + 1; i + 1 < spec.size(); ++i) {
    char c = spec[i];
    if (c == ',') {
      names.push_back(cur);
      cur.clear();
    } else if (!std::isspace(static_cast<unsigned char>(c))) {
      if (!std::isalpha(static_cast<unsigned char>(c))) fail();
      cur += c;
    }
  }
  names.push_back(cur);
  for (const auto& n : names)
    if (n.empty()) fail();
  if (names.size() == 2 && names[0] == names[1]) fail();
  return FunctionField(Field::get(p, e, max_order), std::move(names));
}

RatFn FunctionField::element(std::string_view text) const {
  auto strip = [](std::string_view s) {
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.front()))) s.remove_prefix(1);
    while (!s.empty() && std::isspace(static_cast<unsigned char>(s.back()))) s.remove_suffix(1);
    return s;
  };
  int depth = 0;
  for (std::size_t i = 0; i < text.size(); ++i) {
    if (text[i] == '(') ++depth;
    else if (text[i] == ')') --depth;
    else if (text[i] == '/' && depth == 0) {
      Poly num = poly(strip(text.substr(0, i)));
      Poly den = poly(strip(text.substr(i + 1)));
      return RatFn(num, den);
    }
  }
  return RatFn(poly(strip(text)));
}

std::string FunctionField::to_string() const {
  std::string out = "F" + std::to_string(field_->order()) + "(";
  for (std::size_t i = 0; i < names_.size(); ++i) out += (i ? "," : "") + names_[i];
  return out + ")";
}

std::size_t linear_rank(const std::vector<RatFn>& fns) {
  if (fns.empty()) return 0;
  const Field& field = fns.front().field();
  const int nvars = fns.front().nvars();
  Poly common = Poly::constant(field, nvars, 1);
  for (const auto& f : fns)
    if (!exact_divide(common, f.den())) common *= f.den();
  std::vector<Poly> nums;
  std::map<Monomial, std::size_t> col_of;
  for (const auto& f : fns) {
    Poly n = f.num() * *exact_divide(common, f.den());
    for (const Term& t : n.terms()) col_of.try_emplace(t.mono, col_of.size());
    nums.push_back(std::move(n));
  }
  FqMatrix rows;
  for (const auto& n : nums) {
    FqVector v(col_of.size(), 0);
    for (const Term& t : n.terms()) v[col_of[t.mono]] = t.coef;
    rows.push_back(std::move(v));
  }
  return rank(field, rows, col_of.size());
}

const ProjectiveSpace& EmbeddedSubspace::geometry() const {
  return projective_space(dimension(), field_.field());
}

EmbeddedSubspace embed_span(const FunctionField& field, std::vector<RatFn> gens, std::string label) {
  if (gens.size() < 2) throw Error(ErrorCode::InvalidConfig, "embedded subspaces need at least two generators");
  for (const auto& g : gens)
    if (&g.field() != &field.field() || g.nvars() != field.nvars())
      throw Error(ErrorCode::FieldMismatch, "generator outside the ambient field");
  if (linear_rank(gens) != gens.size())
    throw Error(ErrorCode::DependentGenerators, "generators are linearly dependent over k");
  const Field& k = field.field();
  EmbeddedSubspace s(field, std::move(gens), std::move(label));
  for (const ProjPoint& pt : enumerate_points(s.dimension(), k)) {
    RatFn value = field.constant(0);
    for (std::size_t i = 0; i < pt.size(); ++i)
      if (pt.coords()[i] != 0) value = value + field.constant(pt.coords()[i]) * s.generators_[i];
    DivisorRep d = to_divisor(value);
    s.points_.push_back({pt, std::move(value), std::move(d)});
  }
  return s;
}

EmbeddedSubspace EmbeddedSubspace::shifted(const DivisorRep& h) const {
  const RatFn factor = from_divisor(h);
  EmbeddedSubspace out = *this;
  for (auto& g : out.generators_) g = g * factor;
  for (auto& p : out.points_) {
    p.value = p.value * factor;
    p.divisor = p.divisor * h;
  }
  return out;
}

}  // namespace flagval
