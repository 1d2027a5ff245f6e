#include "flagval/poly.hpp"

#include <algorithm>
#include <cctype>
#include <functional>

#include "flagval/error.hpp"

namespace flagval {

namespace {

void require_same(const Poly& a, const Poly& b) {
  if (&a.field() != &b.field() || a.nvars() != b.nvars())
    throw Error(ErrorCode::FieldMismatch, "polynomials over different rings");
}

}  // namespace

// Internal constructor access for building from sorted terms.
class PolyBuilder {
 public:
  static Poly from_sorted(const Field& f, int nvars, std::vector<Term> terms) {
    Poly p(f, nvars);
    p.terms_ = std::move(terms);
    return p;
  }
  static Poly from_unsorted(const Field& f, int nvars, std::vector<Term> terms) {
    std::sort(terms.begin(), terms.end(),
              [](const Term& a, const Term& b) { return a.mono > b.mono; });
    std::vector<Term> out;
    for (const Term& t : terms) {
      if (!out.empty() && out.back().mono == t.mono) {
        out.back().coef = f.add(out.back().coef, t.coef);
      } else {
        out.push_back(t);
      }
    }
    std::erase_if(out, [](const Term& t) { return t.coef == 0; });
    return from_sorted(f, nvars, std::move(out));
  }
};

Poly::Poly(const Field& field, int nvars) : field_(&field), nvars_(nvars) {
  if (nvars != 1 && nvars != 2) throw Error(ErrorCode::InvalidConfig, "polynomials need 1 or 2 variables");
}

Poly Poly::constant(const Field& field, int nvars, Elem c) {
  return monomial(field, nvars, {}, c);
}

Poly Poly::variable(const Field& field, int nvars, int index) {
  Monomial m;
  if (index == 0) m.x = 1;
  else m.y = 1;
  if (index >= nvars) throw Error(ErrorCode::InvalidConfig, "variable index out of range");
  return monomial(field, nvars, m, 1);
}

Poly Poly::monomial(const Field& field, int nvars, Monomial m, Elem c) {
  Poly p(field, nvars);
  if (nvars == 1 && m.y != 0) throw Error(ErrorCode::InvalidConfig, "y in univariate ring");
  if (c != 0) p.terms_.push_back({m, c});
  return p;
}

Poly Poly::from_dense(const Field& field, std::span<const Elem> coeffs) {
  std::vector<Term> terms;
  for (std::size_t i = coeffs.size(); i-- > 0;)
    if (coeffs[i] != 0) terms.push_back({{static_cast<std::uint16_t>(i), 0}, coeffs[i]});
  return PolyBuilder::from_sorted(field, 1, std::move(terms));
}

bool Poly::is_one() const {
  return terms_.size() == 1 && terms_[0].mono.degree() == 0 && terms_[0].coef == 1;
}

int Poly::degree_in(int var) const {
  int d = terms_.empty() ? -1 : 0;
  for (const Term& t : terms_) d = std::max<int>(d, var == 0 ? t.mono.x : t.mono.y);
  return d;
}

Monomial Poly::leading_monomial() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading monomial of zero");
  return terms_.front().mono;
}

Elem Poly::leading_coefficient() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "leading coefficient of zero");
  return terms_.front().coef;
}

Elem Poly::coefficient(Monomial m) const {
  for (const Term& t : terms_)
    if (t.mono == m) return t.coef;
  return 0;
}

std::vector<Elem> Poly::dense() const {
  std::vector<Elem> out(static_cast<std::size_t>(std::max(degree() + 1, 0)), 0);
  for (const Term& t : terms_) out[t.mono.x] = t.coef;
  return out;
}

Poly Poly::monic() const {
  if (terms_.empty()) throw Error(ErrorCode::ZeroPolynomial, "monic of zero");
  return scaled(field_->inv(leading_coefficient()));
}

Poly Poly::scaled(Elem c) const {
  if (c == 0) return Poly(*field_, nvars_);
  Poly out = *this;
  for (Term& t : out.terms_) t.coef = field_->mul(t.coef, c);
  return out;
}

Poly Poly::pow(unsigned n) const {
  Poly result = constant(*field_, nvars_, 1);
  Poly base = *this;
  while (n > 0) {
    if (n & 1u) result = result * base;
    n >>= 1;
    if (n > 0) base = base * base;
  }
  return result;
}

Elem Poly::evaluate(Elem t) const {
  Elem acc = 0;
  for (const Term& term : terms_)
    acc = field_->add(acc, field_->mul(term.coef, field_->pow(t, term.mono.x)));
  return acc;
}

Elem Poly::evaluate(Elem x, Elem y) const {
  Elem acc = 0;
  for (const Term& term : terms_) {
    Elem v = field_->mul(field_->pow(x, term.mono.x), field_->pow(y, term.mono.y));
    acc = field_->add(acc, field_->mul(term.coef, v));
  }
  return acc;
}

namespace {

Poly merge(const Poly& a, const Poly& b, bool subtract) {
  require_same(a, b);
  const Field& f = a.field();
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::vector<Term> out;
  out.reserve(ta.size() + tb.size());
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].mono > tb[j].mono)) {
      out.push_back(ta[i++]);
    } else if (i == ta.size() || tb[j].mono > ta[i].mono) {
      Elem c = subtract ? f.neg(tb[j].coef) : tb[j].coef;
      out.push_back({tb[j++].mono, c});
    } else {
      Elem c = subtract ? f.sub(ta[i].coef, tb[j].coef) : f.add(ta[i].coef, tb[j].coef);
      if (c != 0) out.push_back({ta[i].mono, c});
      ++i;
      ++j;
    }
  }
  return PolyBuilder::from_sorted(f, a.nvars(), std::move(out));
}

}  // namespace

Poly operator+(const Poly& a, const Poly& b) { return merge(a, b, false); }
Poly operator-(const Poly& a, const Poly& b) { return merge(a, b, true); }

Poly operator*(const Poly& a, const Poly& b) {
  require_same(a, b);
  const Field& f = a.field();
  if (a.is_zero() || b.is_zero()) return Poly(f, a.nvars());
  int ax = a.degree_in(0), bx = b.degree_in(0);
  int ay = a.nvars() == 2 ? a.degree_in(1) : 0, by = b.nvars() == 2 ? b.degree_in(1) : 0;
  const std::size_t ny = static_cast<std::size_t>(ay + by + 1);
  const std::size_t nx = static_cast<std::size_t>(ax + bx + 1);
  std::vector<Elem> acc(nx * ny, 0);
  for (const Term& s : a.terms())
    for (const Term& t : b.terms()) {
      std::size_t k = static_cast<std::size_t>(s.mono.x + t.mono.x) * ny + (s.mono.y + t.mono.y);
      acc[k] = f.add(acc[k], f.mul(s.coef, t.coef));
    }
  std::vector<Term> terms;
  for (std::size_t k = 0; k < acc.size(); ++k)
    if (acc[k] != 0)
      terms.push_back({{static_cast<std::uint16_t>(k / ny), static_cast<std::uint16_t>(k % ny)}, acc[k]});
  return PolyBuilder::from_unsorted(f, a.nvars(), std::move(terms));
}

bool operator==(const Poly& a, const Poly& b) {
  return a.field_ == b.field_ && a.nvars_ == b.nvars_ && a.terms_ == b.terms_;
}

std::size_t Poly::hash() const {
  std::size_t h = std::hash<const void*>{}(field_) ^ static_cast<std::size_t>(nvars_);
  for (const Term& t : terms_) {
    std::size_t v = (static_cast<std::size_t>(t.mono.x) << 40) ^
                    (static_cast<std::size_t>(t.mono.y) << 24) ^ t.coef;
    h ^= v + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
  }
  return h;
}

std::strong_ordering canonical_compare(const Poly& a, const Poly& b) {
  if (auto c = a.degree() <=> b.degree(); c != 0) return c;
  const auto& ta = a.terms();
  const auto& tb = b.terms();
  std::size_t i = 0, j = 0;
  while (i < ta.size() || j < tb.size()) {
    if (j == tb.size() || (i < ta.size() && ta[i].mono > tb[j].mono)) return std::strong_ordering::greater;
    if (i == ta.size() || tb[j].mono > ta[i].mono) return std::strong_ordering::less;
    if (auto c = ta[i].coef <=> tb[j].coef; c != 0) return c;
    ++i;
    ++j;
  }
  return std::strong_ordering::equal;
}

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (a.nvars() != 1) throw Error(ErrorCode::InvalidConfig, "divmod needs univariate input");
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const Field& f = a.field();
  std::vector<Elem> r = a.dense();
  std::vector<Elem> d = b.dense();
  const int db = b.degree();
  const Elem lead_inv = f.inv(d.back());
  if (a.degree() < db) return {Poly(f, 1), a};
  std::vector<Elem> quot(static_cast<std::size_t>(a.degree() - db + 1), 0);
  for (int top = a.degree(); top >= db; --top) {
    Elem c = r[static_cast<std::size_t>(top)];
    if (c == 0) continue;
    Elem factor = f.mul(c, lead_inv);
    quot[static_cast<std::size_t>(top - db)] = factor;
    for (int i = 0; i <= db; ++i) {
      std::size_t k = static_cast<std::size_t>(top - db + i);
      r[k] = f.sub(r[k], f.mul(factor, d[static_cast<std::size_t>(i)]));
    }
  }
  r.resize(static_cast<std::size_t>(db));
  return {Poly::from_dense(f, quot), Poly::from_dense(f, r)};
}

Poly poly_mod(const Poly& a, const Poly& m) { return divmod(a, m).second; }

Poly poly_gcd(const Poly& a, const Poly& b) {
  Poly x = a, y = b;
  while (!y.is_zero()) {
    Poly r = poly_mod(x, y);
    x = std::move(y);
    y = std::move(r);
  }
  if (x.is_zero()) return x;
  return x.monic();
}

std::optional<Poly> exact_divide(const Poly& a, const Poly& b) {
  require_same(a, b);
  if (b.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "division by zero polynomial");
  const Field& f = a.field();
  if (a.nvars() == 1) {
    auto [q, r] = divmod(a, b);
    if (!r.is_zero()) return std::nullopt;
    return q;
  }
  const Monomial lb = b.leading_monomial();
  const Elem lb_inv = f.inv(b.leading_coefficient());
  Poly rem = a;
  std::vector<Term> quot;
  while (!rem.is_zero()) {
    Monomial lr = rem.leading_monomial();
    if (!lb.divides(lr)) return std::nullopt;
    Monomial m{static_cast<std::uint16_t>(lr.x - lb.x), static_cast<std::uint16_t>(lr.y - lb.y)};
    Elem c = f.mul(rem.leading_coefficient(), lb_inv);
    quot.push_back({m, c});
    rem = rem - Poly::monomial(f, a.nvars(), m, c) * b;
  }
  return PolyBuilder::from_sorted(f, a.nvars(), std::move(quot));
}

int multiplicity(const Poly& a, const Poly& b) {
  if (a.is_zero()) throw Error(ErrorCode::ZeroPolynomial, "multiplicity in zero");
  if (b.is_constant()) throw Error(ErrorCode::InvalidConfig, "multiplicity of a constant");
  int k = 0;
  Poly cur = a;
  while (cur.degree() >= b.degree()) {
    auto q = exact_divide(cur, b);
    if (!q) break;
    cur = std::move(*q);
    ++k;
  }
  return k;
}

std::vector<std::string> default_names(int nvars) {
  if (nvars == 1) return {"t"};
  return {"x", "y"};
}

std::string to_string(const Poly& p, std::span<const std::string> names) {
  if (p.is_zero()) return "0";
  std::string out;
  for (const Term& t : p.terms()) {
    if (!out.empty()) out += '+';
    std::string body;
    auto append_var = [&](const std::string& name, int e) {
      if (e == 0) return;
      if (!body.empty()) body += '*';
      body += name;
      if (e > 1) body += '^' + std::to_string(e);
    };
    append_var(names[0], t.mono.x);
    if (p.nvars() == 2) append_var(names[1], t.mono.y);
    if (body.empty()) {
      out += p.field().format(t.coef);
    } else if (t.coef == 1) {
      out += body;
    } else {
      out += p.field().format(t.coef) + '*' + body;
    }
  }
  return out;
}

std::string to_string(const Poly& p) {
  auto names = default_names(p.nvars());
  return to_string(p, names);
}

namespace {

class PolyParser {
 public:
  PolyParser(std::string_view text, const Field& field, std::span<const std::string> names)
      : text_(text), field_(field), names_(names) {}

  Poly parse() {
    Poly out = parse_sum();
    if (pos_ < text_.size()) fail("unexpected ')'");
    return out;
  }

 private:
  char peek() const { return pos_ < text_.size() ? text_[pos_] : '\0'; }
  void skip_space() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_]))) ++pos_;
  }
  [[noreturn]] void fail(const std::string& what) const {
    throw Error(ErrorCode::ParseError, what + " at offset " + std::to_string(pos_) + " in '" +
                                           std::string(text_) + "'");
  }
  std::uint64_t parse_number() {
    skip_space();
    if (!std::isdigit(static_cast<unsigned char>(peek()))) fail("expected number");
    std::uint64_t v = 0;
    while (std::isdigit(static_cast<unsigned char>(peek()))) {
      v = v * 10 + static_cast<std::uint64_t>(peek() - '0');
      if (v > 1'000'000'000ULL) fail("number too large");
      ++pos_;
    }
    return v;
  }

  // sum := ['+'|'-'] term (('+'|'-') term)*, ending at ')' or the end.
  Poly parse_sum() {
    Poly acc(field_, static_cast<int>(names_.size()));
    skip_space();
    bool negate = false;
    if (peek() == '-') {
      negate = true;
      ++pos_;
    } else if (peek() == '+') {
      ++pos_;
    }
    while (true) {
      Poly term = parse_term();
      acc = negate ? acc - term : acc + term;
      skip_space();
      if (pos_ >= text_.size() || peek() == ')') break;
      char c = text_[pos_++];
      if (c == '+') negate = false;
      else if (c == '-') negate = true;
      else fail("expected '+' or '-'");
    }
    return acc;
  }

  std::uint64_t parse_exponent() {
    skip_space();
    if (peek() != '^') return 1;
    ++pos_;
    const std::uint64_t e = parse_number();
    if (e > 1000) fail("exponent too large");
    return e;
  }

  // term := factor ('*' factor)*, factor := number | name['^'n] | '(' sum ')'['^'n].
  Poly parse_term() {
    const int nvars = static_cast<int>(names_.size());
    Elem coef = 1;
    Monomial m;
    Poly rest = Poly::constant(field_, nvars, 1);
    bool first = true;
    while (true) {
      skip_space();
      if (std::isdigit(static_cast<unsigned char>(peek()))) {
        std::uint64_t v = parse_number();
        Elem c = field_.degree() == 1 ? field_.from_int(static_cast<std::int64_t>(v))
                                      : static_cast<Elem>(v);
        if (c >= field_.order()) fail("coefficient out of range");
        coef = field_.mul(coef, c);
      } else if (peek() == '(') {
        ++pos_;
        Poly inner = parse_sum();
        if (peek() != ')') fail("expected ')'");
        ++pos_;
        rest *= inner.pow(static_cast<unsigned>(parse_exponent()));
      } else {
        std::size_t best = names_.size();
        for (std::size_t i = 0; i < names_.size(); ++i) {
          const std::string& n = names_[i];
          if (text_.substr(pos_, n.size()) == n &&
              (best == names_.size() || n.size() > names_[best].size()))
            best = i;
        }
        if (best == names_.size()) fail(first ? "expected term" : "expected factor");
        pos_ += names_[best].size();
        const std::uint64_t e = parse_exponent();
        if (best == 0) m.x = static_cast<std::uint16_t>(m.x + e);
        else m.y = static_cast<std::uint16_t>(m.y + e);
      }
      first = false;
      skip_space();
      if (peek() != '*') break;
      ++pos_;
    }
    return Poly::monomial(field_, nvars, m, coef) * rest;
  }

  std::string_view text_;
  const Field& field_;
  std::span<const std::string> names_;
  std::size_t pos_ = 0;
};

}  // namespace

Poly parse_poly(std::string_view text, const Field& field, std::span<const std::string> names) {
  if (names.empty() || names.size() > 2) throw Error(ErrorCode::InvalidConfig, "need 1 or 2 variable names");
  return PolyParser(text, field, names).parse();
}

}  // namespace flagval
