#include "flagval/ratfn.hpp"

#include "flagval/error.hpp"

namespace flagval {

RatFn::RatFn(Poly num, Poly den) : num_(std::move(num)), den_(std::move(den)) {
  if (&num_.field() != &den_.field() || num_.nvars() != den_.nvars())
    throw Error(ErrorCode::FieldMismatch, "numerator and denominator differ");
  if (den_.is_zero()) throw Error(ErrorCode::ZeroFunction, "zero denominator");
  normalize();
}

RatFn::RatFn(Poly num)
    : num_(num), den_(Poly::constant(num.field(), num.nvars(), 1)) {}

RatFn RatFn::constant(const Field& field, int nvars, Elem c) {
  return RatFn(Poly::constant(field, nvars, c));
}

RatFn RatFn::variable(const Field& field, int nvars, int index) {
  return RatFn(Poly::variable(field, nvars, index));
}

void RatFn::normalize() {
  if (num_.is_zero()) {
    den_ = Poly::constant(num_.field(), num_.nvars(), 1);
    return;
  }
  if (num_.nvars() == 1 && !den_.is_constant()) {
    Poly g = poly_gcd(num_, den_);
    if (!g.is_constant()) {
      num_ = divmod(num_, g).first;
      den_ = divmod(den_, g).first;
    }
  } else if (num_.nvars() == 2 && !den_.is_constant()) {
    if (auto q = exact_divide(num_, den_)) {
      num_ = std::move(*q);
      den_ = Poly::constant(num_.field(), 2, 1);
      return;
    }
  }
  Elem lead = den_.leading_coefficient();
  if (lead != 1) {
    Elem inv = num_.field().inv(lead);
    num_ = num_.scaled(inv);
    den_ = den_.scaled(inv);
  }
}

bool RatFn::is_constant() const {
  if (num_.is_zero()) return true;
  if (num_.nvars() == 1) return num_.is_constant() && den_.is_constant();
  if (num_.degree() != den_.degree() || num_.terms().size() != den_.terms().size()) return false;
  const Field& f = field();
  Elem c = f.div(num_.leading_coefficient(), den_.leading_coefficient());
  return num_ == den_.scaled(c);
}

bool RatFn::is_one() const { return is_constant() && !is_zero() && num_ == den_; }

RatFn RatFn::inverse() const {
  if (is_zero()) throw Error(ErrorCode::ZeroFunction, "inverse of zero");
  return RatFn(den_, num_);
}

RatFn RatFn::pow(int n) const {
  if (n < 0) return inverse().pow(-n);
  return RatFn(num_.pow(static_cast<unsigned>(n)), den_.pow(static_cast<unsigned>(n)));
}

RatFn operator+(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ + b.num_, a.den_);
  return RatFn(a.num_ * b.den_ + b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator-(const RatFn& a, const RatFn& b) {
  if (a.den_ == b.den_) return RatFn(a.num_ - b.num_, a.den_);
  return RatFn(a.num_ * b.den_ - b.num_ * a.den_, a.den_ * b.den_);
}

RatFn operator*(const RatFn& a, const RatFn& b) {
  return RatFn(a.num_ * b.num_, a.den_ * b.den_);
}

RatFn operator/(const RatFn& a, const RatFn& b) {
  if (b.is_zero()) throw Error(ErrorCode::ZeroFunction, "division by zero");
  return RatFn(a.num_ * b.den_, a.den_ * b.num_);
}

RatFn RatFn::operator-() const { return RatFn(-num_, den_); }

bool operator==(const RatFn& a, const RatFn& b) {
  if (a.nvars() == 1) return a.num_ == b.num_ && a.den_ == b.den_;
  return a.num_ * b.den_ == b.num_ * a.den_;
}

RatFn substitute(const Poly& p, const RatFn& u, const RatFn& v) {
  const Field& f = u.field();
  RatFn acc = RatFn::constant(f, u.nvars(), 0);
  for (const Term& t : p.terms()) {
    RatFn term = RatFn::constant(f, u.nvars(), t.coef) * u.pow(t.mono.x);
    if (t.mono.y > 0) term = term * v.pow(t.mono.y);
    acc = acc + term;
  }
  return acc;
}

RatFn substitute(const Poly& p, const RatFn& u) {
  if (p.nvars() != 1) throw Error(ErrorCode::InvalidConfig, "univariate substitution of bivariate polynomial");
  return substitute(p, u, u);
}

std::string to_string(const RatFn& f, std::span<const std::string> names) {
  std::string n = to_string(f.num(), names);
  if (f.den().is_one()) return n;
  return "(" + n + ")/(" + to_string(f.den(), names) + ")";
}

std::string to_string(const RatFn& f) {
  auto names = default_names(f.nvars());
  return to_string(f, names);
}

}  // namespace flagval
