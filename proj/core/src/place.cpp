#include "flagval/place.hpp"

#include "flagval/error.hpp"
#include "flagval/factor.hpp"

namespace flagval {

namespace {

Poly require_monic_irreducible(Poly p, int nvars) {
  if (p.nvars() != nvars) throw Error(ErrorCode::BadInput, "place polynomial has the wrong number of variables");
  if (p.is_zero() || p.is_constant()) throw Error(ErrorCode::BadInput, "place polynomial must be nonconstant");
  p = p.monic();
  if (!is_irreducible(p)) throw Error(ErrorCode::BadInput, "place polynomial must be irreducible: " + to_string(p));
  return p;
}

}  // namespace

Place Place::finite(Poly prime) {
  const Field& f = prime.field();
  return Place(FinitePlace{require_monic_irreducible(std::move(prime), 1)}, f);
}

Place Place::infinite(const Field& field) { return Place(InfinitePlace{}, field); }

Place Place::curve(Poly curve) {
  const Field& f = curve.field();
  return Place(CurvePlace{require_monic_irreducible(std::move(curve), 2)}, f);
}

Place Place::composite(Poly curve, const Place& point) {
  const Field& f = curve.field();
  Poly c = require_monic_irreducible(std::move(curve), 2);
  if (!graph_chart(c)) throw Error(ErrorCode::UnsupportedPlace, "composite places need a curve of degree 1 in some variable");
  CompositePlace cp{std::move(c), InfinitePlace{}};
  if (const auto* fp = std::get_if<FinitePlace>(&point.kind())) cp.point = *fp;
  else if (!std::holds_alternative<InfinitePlace>(point.kind()))
    throw Error(ErrorCode::BadInput, "composite point must be a place of a rational residue field");
  return Place(std::move(cp), f);
}

Place Place::parse(std::string_view text, const FunctionField& field) {
  auto fail = [&](const std::string& why) -> Place {
    throw Error(ErrorCode::ParseError, "place '" + std::string(text) + "': " + why);
  };
  const std::size_t colon = text.find(':');
  const std::string_view kind = text.substr(0, colon);
  const std::string_view body = colon == std::string_view::npos ? std::string_view{} : text.substr(colon + 1);
  if (kind == "infinite") {
    if (field.nvars() != 1) return fail("infinite place needs k(t)");
    return infinite(field.field());
  }
  if (kind == "finite") {
    if (field.nvars() != 1) return fail("finite place needs k(t)");
    return finite(field.poly(body));
  }
  if (kind == "curve") {
    if (field.nvars() != 2) return fail("curve place needs k(x,y)");
    return curve(field.poly(body));
  }
  if (kind == "composite") {
    if (field.nvars() != 2) return fail("composite place needs k(x,y)");
    const std::size_t bar = body.find('|');
    if (bar == std::string_view::npos) return fail("expected curve|point");
    Poly c = field.poly(body.substr(0, bar));
    auto chart = graph_chart(c.monic());
    if (!chart) return fail("curve is not graph-like");
    FunctionField residue(field.field(), {field.names()[static_cast<std::size_t>(chart->kept_var)]});
    const std::string_view pt = body.substr(bar + 1);
    Place point = pt == "infinite" ? infinite(field.field()) : finite(residue.poly(pt));
    return composite(std::move(c), point);
  }
  return fail("unknown kind");
}

int Place::residue_degree() const {
  if (const auto* f = std::get_if<FinitePlace>(&kind_)) return f->prime.degree();
  if (std::holds_alternative<InfinitePlace>(kind_)) return 1;
  throw Error(ErrorCode::UnsupportedPlace, "residue degree of a place of k(x,y)");
}

const Poly& Place::defining_polynomial() const {
  if (const auto* f = std::get_if<FinitePlace>(&kind_)) return f->prime;
  if (const auto* c = std::get_if<CurvePlace>(&kind_)) return c->curve;
  if (const auto* c = std::get_if<CompositePlace>(&kind_)) return c->curve;
  throw Error(ErrorCode::UnsupportedPlace, "the infinite place has no defining polynomial");
}

std::optional<CurveChart> Place::chart() const {
  if (const auto* c = std::get_if<CurvePlace>(&kind_)) return graph_chart(c->curve);
  if (const auto* c = std::get_if<CompositePlace>(&kind_)) return graph_chart(c->curve);
  return std::nullopt;
}

std::optional<CurveChart> graph_chart(const Poly& curve) {
  const Field& f = curve.field();
  // C = A * v + B with v of degree 1 and A, B free of v  =>  v = -B/A.
  for (int v : {1, 0}) {
    if (curve.degree_in(v) != 1) continue;
    const int kept = 1 - v;
    std::vector<Elem> a, b;
    for (const Term& t : curve.terms()) {
      const int kept_exp = kept == 0 ? t.mono.x : t.mono.y;
      const int v_exp = v == 0 ? t.mono.x : t.mono.y;
      auto& target = v_exp == 1 ? a : b;
      if (target.size() <= static_cast<std::size_t>(kept_exp)) target.resize(static_cast<std::size_t>(kept_exp) + 1, 0);
      target[static_cast<std::size_t>(kept_exp)] = t.coef;
    }
    Poly A = Poly::from_dense(f, a), B = Poly::from_dense(f, b);
    return CurveChart{kept, RatFn(-B, A)};
  }
  return std::nullopt;
}

RatFn restrict_to_chart(const Poly& g, const CurveChart& chart) {
  const Field& f = g.field();
  RatFn s = RatFn::variable(f, 1, 0);
  const RatFn& other = chart.eliminated;
  return chart.kept_var == 0 ? substitute(g, s, other) : substitute(g, other, s);
}

std::string Place::to_string(std::span<const std::string> names) const {
  if (const auto* f = std::get_if<FinitePlace>(&kind_)) return "finite:" + flagval::to_string(f->prime, names);
  if (std::holds_alternative<InfinitePlace>(kind_)) return "infinite";
  if (const auto* c = std::get_if<CurvePlace>(&kind_)) return "curve:" + flagval::to_string(c->curve, names);
  const auto& cp = std::get<CompositePlace>(kind_);
  std::string out = "composite:" + flagval::to_string(cp.curve, names) + "|";
  if (std::holds_alternative<InfinitePlace>(cp.point)) return out + "infinite";
  const auto chart = graph_chart(cp.curve);
  std::vector<std::string> residue_name{names[static_cast<std::size_t>(chart->kept_var)]};
  return out + flagval::to_string(std::get<FinitePlace>(cp.point).prime, residue_name);
}

std::string Place::to_string() const {
  auto names = default_names(nvars());
  return to_string(names);
}

bool operator==(const Place& a, const Place& b) {
  if (a.field_ != b.field_ || a.kind_.index() != b.kind_.index()) return false;
  if (const auto* f = std::get_if<FinitePlace>(&a.kind_)) return f->prime == std::get<FinitePlace>(b.kind_).prime;
  if (std::holds_alternative<InfinitePlace>(a.kind_)) return true;
  if (const auto* c = std::get_if<CurvePlace>(&a.kind_)) return c->curve == std::get<CurvePlace>(b.kind_).curve;
  const auto& ca = std::get<CompositePlace>(a.kind_);
  const auto& cb = std::get<CompositePlace>(b.kind_);
  if (!(ca.curve == cb.curve) || ca.point.index() != cb.point.index()) return false;
  if (const auto* f = std::get_if<FinitePlace>(&ca.point)) return f->prime == std::get<FinitePlace>(cb.point).prime;
  return true;
}

}  // namespace flagval
