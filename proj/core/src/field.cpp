#include "flagval/field.hpp"

#include <map>
#include <memory>
#include <mutex>
#include <numeric>
#include <utility>

#include "flagval/error.hpp"

namespace flagval {

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t d = 2; d * d <= n; ++d)
    if (n % d == 0) return false;
  return true;
}

namespace {

std::vector<std::uint32_t> digits(std::uint32_t code, std::uint32_t p, std::uint32_t e) {
  std::vector<std::uint32_t> out(e);
  for (std::uint32_t i = 0; i < e; ++i) {
    out[i] = code % p;
    code /= p;
  }
  return out;
}

std::uint32_t undigits(const std::vector<std::uint32_t>& d, std::uint32_t p) {
  std::uint32_t code = 0;
  for (std::size_t i = d.size(); i-- > 0;) code = code * p + d[i];
  return code;
}

// Whether the monic polynomial (low-to-high coefficients) has a factor of
// degree <= deg/2; brute force over monic divisors, fine for e <= 6.
bool irreducible_over_prime(const std::vector<std::uint32_t>& f, std::uint32_t p) {
  const std::size_t n = f.size() - 1;
  for (std::size_t d = 1; d <= n / 2; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t c = 0; c < count; ++c) {
      std::vector<std::uint32_t> g(d + 1);
      std::uint64_t x = c;
      for (std::size_t i = 0; i < d; ++i) {
        g[i] = static_cast<std::uint32_t>(x % p);
        x /= p;
      }
      g[d] = 1;
      std::vector<std::uint32_t> r = f;
      for (std::size_t top = n; top >= d; --top) {
        std::uint32_t c0 = r[top];
        if (c0 != 0) {
          for (std::size_t i = 0; i <= d; ++i) {
            std::size_t k = top - d + i;
            r[k] = static_cast<std::uint32_t>((r[k] + (p - c0) * g[i]) % p);
          }
        }
        if (top == d) break;
      }
      bool zero = true;
      for (std::size_t i = 0; i < d; ++i) zero = zero && r[i] == 0;
      if (zero) return false;
    }
  }
  return true;
}

// Least monic irreducible of degree e, comparing coefficients high to low.
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, std::uint32_t e) {
  std::uint64_t count = 1;
  for (std::uint32_t i = 0; i < e; ++i) count *= p;
  for (std::uint64_t c = 0; c < count; ++c) {
    // c enumerates (a_{e-1}, ..., a_0) with a_{e-1} most significant.
    std::vector<std::uint32_t> f(e + 1);
    std::uint64_t x = c;
    for (std::uint32_t i = 0; i < e; ++i) {
      f[i] = static_cast<std::uint32_t>(x % p);
      x /= p;
    }
    f[e] = 1;
    if (irreducible_over_prime(f, p)) return f;
  }
  throw Error(ErrorCode::SizeBound, "no irreducible modulus found");
}

}  // namespace

const Field& Field::get(std::uint32_t p, std::uint32_t e, std::uint32_t max_order) {
  if (!is_prime(p)) throw Error(ErrorCode::NotPrime, std::to_string(p) + " is not prime");
  if (e == 0) throw Error(ErrorCode::InvalidConfig, "extension degree must be >= 1");
  std::uint64_t q = 1;
  for (std::uint32_t i = 0; i < e; ++i) {
    q *= p;
    if (q > max_order)
      throw Error(ErrorCode::SizeBound, "field order exceeds bound " + std::to_string(max_order));
  }
  static std::mutex mutex;
  static std::map<std::pair<std::uint32_t, std::uint32_t>, std::unique_ptr<Field>> registry;
  std::lock_guard lock(mutex);
  auto& slot = registry[{p, e}];
  if (!slot) slot.reset(new Field(p, e));
  return *slot;
}

Field::Field(std::uint32_t p, std::uint32_t e) : p_(p), e_(e), q_(1) {
  for (std::uint32_t i = 0; i < e; ++i) q_ *= p;
  if (e == 1) {
    modulus_ = {0, 1};
  } else {
    modulus_ = canonical_modulus(p, e);
  }
  // Find a primitive element by brute force.
  const std::uint32_t n = q_ - 1;
  exp_.assign(n == 0 ? 1 : n, 1);
  log_.assign(q_, 0);
  for (Elem g = 1; g < q_; ++g) {
    Elem x = 1;
    std::uint32_t ord = 0;
    do {
      x = slow_mul(x, g);
      ++ord;
    } while (x != 1);
    if (ord != n) continue;
    x = 1;
    for (std::uint32_t i = 0; i < n; ++i) {
      exp_[i] = x;
      log_[x] = i;
      x = slow_mul(x, g);
    }
    break;
  }
  if (e > 1 && q_ <= 256) {
    add_table_.resize(static_cast<std::size_t>(q_) * q_);
    for (Elem a = 0; a < q_; ++a) {
      auto da = digits(a, p_, e_);
      for (Elem b = 0; b < q_; ++b) {
        auto db = digits(b, p_, e_);
        for (std::uint32_t i = 0; i < e_; ++i) db[i] = (da[i] + db[i]) % p_;
        add_table_[static_cast<std::size_t>(a) * q_ + b] = undigits(db, p_);
      }
    }
  }
}

Elem Field::slow_mul(Elem a, Elem b) const {
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  auto da = digits(a, p_, e_);
  auto db = digits(b, p_, e_);
  std::vector<std::uint32_t> prod(2 * e_ - 1, 0);
  for (std::uint32_t i = 0; i < e_; ++i)
    for (std::uint32_t j = 0; j < e_; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p_;
  for (std::size_t top = prod.size(); top-- > e_;) {
    std::uint32_t c = prod[top];
    if (c == 0) continue;
    for (std::uint32_t i = 0; i <= e_; ++i) {
      std::size_t k = top - e_ + i;
      prod[k] = (prod[k] + (p_ - c) * modulus_[i]) % p_;
    }
  }
  prod.resize(e_);
  return undigits(prod, p_);
}

Elem Field::add(Elem a, Elem b) const {
  if (e_ == 1) {
    Elem s = a + b;
    return s >= p_ ? s - p_ : s;
  }
  if (!add_table_.empty()) return add_table_[static_cast<std::size_t>(a) * q_ + b];
  Elem out = 0, scale = 1;
  while (a != 0 || b != 0) {
    out += ((a % p_ + b % p_) % p_) * scale;
    a /= p_;
    b /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::neg(Elem a) const {
  if (e_ == 1) return a == 0 ? 0 : p_ - a;
  Elem out = 0, scale = 1;
  while (a != 0) {
    out += ((p_ - a % p_) % p_) * scale;
    a /= p_;
    scale *= p_;
  }
  return out;
}

Elem Field::mul(Elem a, Elem b) const {
  if (a == 0 || b == 0) return 0;
  if (e_ == 1) return static_cast<Elem>((static_cast<std::uint64_t>(a) * b) % p_);
  std::uint32_t s = log_[a] + log_[b];
  const std::uint32_t n = q_ - 1;
  return exp_[s >= n ? s - n : s];
}

Elem Field::inv(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "inverse of zero");
  const std::uint32_t n = q_ - 1;
  return exp_[(n - log_[a]) % n];
}

Elem Field::pow(Elem a, std::int64_t k) const {
  if (a == 0) {
    if (k < 0) throw Error(ErrorCode::ZeroElement, "negative power of zero");
    return k == 0 ? 1 : 0;
  }
  const std::int64_t n = q_ - 1;
  std::int64_t s = (static_cast<std::int64_t>(log_[a]) * (k % n)) % n;
  if (s < 0) s += n;
  return exp_[static_cast<std::size_t>(s)];
}

Elem Field::from_int(std::int64_t n) const {
  std::int64_t r = n % static_cast<std::int64_t>(p_);
  if (r < 0) r += p_;
  return static_cast<Elem>(r);
}

std::uint64_t Field::multiplicative_order(Elem a) const {
  if (a == 0) throw Error(ErrorCode::ZeroElement, "order of zero");
  const std::uint64_t n = q_ - 1;
  return n / std::gcd<std::uint64_t, std::uint64_t>(n, log_[a]);
}

}  // namespace flagval
