#include "flagval/psi.hpp"

#include "flagval/error.hpp"
#include "flagval/valuation.hpp"

namespace flagval {

namespace {

const CurveChart& require_curve_chart(const Place& place, std::optional<CurveChart>& storage) {
  if (!std::holds_alternative<CurvePlace>(place.kind()))
    throw Error(ErrorCode::UnsupportedPlace, "psi maps are built from curve places of two-variable fields");
  storage = place.chart();
  if (!storage) throw Error(ErrorCode::UnsupportedPlace, "curve place without a graph chart");
  return *storage;
}

void require_same_ground(const FunctionField& a, const FunctionField& b) {
  if (&a.field() != &b.field()) throw Error(ErrorCode::FieldMismatch, "source and target over different fields");
}

}  // namespace

PsiMap PsiMap::from_valuation(const FunctionField& source, const Place& place, const FunctionField& target,
                              int embed_var, std::optional<int> twist_var) {
  require_same_ground(source, target);
  std::optional<CurveChart> chart;
  require_curve_chart(place, chart);
  if (embed_var < 0 || embed_var >= target.nvars())
    throw Error(ErrorCode::BadEmbedding, "embedding variable out of range");
  if (twist_var && (*twist_var < 0 || *twist_var >= target.nvars() || *twist_var == embed_var))
    throw Error(ErrorCode::BadEmbedding, "twist variable must be a different target variable");
  const Splitting splitting = make_splitting(place);
  const RatFn image_of_s = target.var(embed_var);
  std::optional<DivisorRep> twist;
  if (twist_var) twist = to_divisor(target.var(*twist_var));
  std::string name = std::string(twist ? "from-valuation-twisted:" : "from-valuation:") + place.to_string(source.names());
  Eval eval = [place, splitting, image_of_s, twist, target](const DivisorRep& f) {
    const std::int64_t n = val(place, f)[0];
    const DivisorRep unit = f * splitting.section(-n);
    const RatFn r = std::get<RatFn>(residue(place, unit));
    const RatFn embedded = substitute(r.num(), image_of_s) / substitute(r.den(), image_of_s);
    DivisorRep out = to_divisor(embedded).class_part();
    if (twist) out *= twist->pow(static_cast<int>(n));
    return out;
  };
  return PsiMap(source, target, std::move(name), place, std::move(eval));
}

PsiMap PsiMap::valuation_map(const FunctionField& source, const Place& place, const FunctionField& target, int var) {
  require_same_ground(source, target);
  if (place.rank() != 1) throw Error(ErrorCode::UnsupportedValueGroup, "valuation map needs value group Z");
  if (var < 0 || var >= target.nvars()) throw Error(ErrorCode::BadEmbedding, "target variable out of range");
  const DivisorRep base = to_divisor(target.var(var));
  Eval eval = [place, base](const DivisorRep& f) { return base.pow(static_cast<int>(val(place, f)[0])); };
  return PsiMap(source, target, "valuation-map:" + place.to_string(source.names()), place, std::move(eval));
}

PsiMap PsiMap::identity(const FunctionField& field) {
  return PsiMap(field, field, "identity", std::nullopt, [](const DivisorRep& f) { return f.class_part(); });
}

PsiMap PsiMap::table(const FunctionField& source, const FunctionField& target, std::map<Generator, DivisorRep> values,
                     std::string name) {
  require_same_ground(source, target);
  auto shared = std::make_shared<const std::map<Generator, DivisorRep>>(std::move(values));
  const int target_vars = target.nvars();
  const Field* field = &target.field();
  Eval eval = [shared, field, target_vars](const DivisorRep& f) {
    DivisorRep out(*field, target_vars);
    for (const auto& [g, e] : f.terms()) {
      if (g.is_infinity()) continue;
      auto it = shared->find(g);
      if (it == shared->end()) throw Error(ErrorCode::BadInput, "table psi has no value at " + g.to_string());
      out *= it->second.pow(e);
    }
    return out.class_part();
  };
  return PsiMap(source, target, std::move(name), std::nullopt, std::move(eval));
}

PsiMap PsiMap::perturbed(const DivisorRep& at, const DivisorRep& factor) const {
  Eval base = eval_;
  const DivisorRep key = at.class_part();
  const DivisorRep extra = factor.class_part();
  Eval eval = [base, key, extra](const DivisorRep& f) {
    DivisorRep v = base(f);
    if (f.same_class(key)) v *= extra;
    return v;
  };
  return PsiMap(source_, target_, name_ + "+perturbed", place_, std::move(eval));
}

PsiMap PsiMap::parse(std::string_view spec, const FunctionField& source) {
  auto after = [&](std::string_view prefix) -> std::optional<std::string_view> {
    if (spec.substr(0, prefix.size()) == prefix) return spec.substr(prefix.size());
    return std::nullopt;
  };
  if (spec == "identity") return identity(source);
  const Field& field = source.field();
  auto residue_name = [&](const Place& place) {
    std::optional<CurveChart> chart;
    const CurveChart& c = require_curve_chart(place, chart);
    return source.names()[static_cast<std::size_t>(c.kept_var)];
  };
  auto fresh_name = [&](const std::string& taken) { return taken == "z" ? std::string("w") : std::string("z"); };
  if (auto rest = after("from-valuation-twisted:")) {
    const Place place = Place::parse(*rest, source);
    const std::string s = residue_name(place);
    return from_valuation(source, place, FunctionField(field, {s, fresh_name(s)}), 0, 1);
  }
  if (auto rest = after("from-valuation:")) {
    const Place place = Place::parse(*rest, source);
    const std::string s = residue_name(place);
    return from_valuation(source, place, FunctionField(field, {s, fresh_name(s)}), 0);
  }
  if (auto rest = after("valuation-map:")) {
    const Place place = Place::parse(*rest, source);
    return valuation_map(source, place, FunctionField(field, {"z"}), 0);
  }
  throw Error(ErrorCode::ParseError, "unknown psi specification: " + std::string(spec));
}

}  // namespace flagval
