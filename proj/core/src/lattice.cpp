#include "flagval/lattice.hpp"

#include <algorithm>
#include <cstdlib>

#include "flagval/error.hpp"

namespace flagval::lattice {

std::int64_t checked_add(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_add_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in lattice arithmetic");
  return r;
}

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) throw Error(ErrorCode::Overflow, "integer overflow in lattice arithmetic");
  return r;
}

namespace {

// row_a <- s*row_a + t*row_b
void combine(IntVector& a, const IntVector& b, std::int64_t s, std::int64_t t) {
  for (std::size_t k = 0; k < a.size(); ++k) a[k] = checked_add(checked_mul(s, a[k]), checked_mul(t, b[k]));
}

struct ExtGcd {
  std::int64_t g, s, t;
};

ExtGcd ext_gcd(std::int64_t a, std::int64_t b) {
  std::int64_t old_r = a, r = b, old_s = 1, s = 0, old_t = 0, t = 1;
  while (r != 0) {
    std::int64_t q = old_r / r;
    std::int64_t tmp = old_r - q * r;
    old_r = r;
    r = tmp;
    tmp = old_s - q * s;
    old_s = s;
    s = tmp;
    tmp = old_t - q * t;
    old_t = t;
    t = tmp;
  }
  if (old_r < 0) return {-old_r, -old_s, -old_t};
  return {old_r, old_s, old_t};
}

std::int64_t floor_div(std::int64_t a, std::int64_t b) {
  std::int64_t q = a / b;
  if ((a % b != 0) && ((a < 0) != (b < 0))) --q;
  return q;
}

}  // namespace

bool HermiteBasis::add(IntVector v) {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidConfig, "vector length mismatch");
  auto leading = [&](std::size_t from) {
    while (from < dim_ && v[from] == 0) ++from;
    return from;
  };
  std::size_t vc = leading(0);
  std::size_t i = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), vc) - pivots_.begin());
  for (; i < rows_.size(); ++i) {
    if (vc == dim_) return false;
    const std::size_t pc = pivots_[i];
    if (vc < pc) break;
    if (vc > pc) continue;
    IntVector& r = rows_[i];
    if (v[pc] % r[pc] == 0) {
      combine(v, r, 1, -(v[pc] / r[pc]));
    } else {
      ExtGcd e = ext_gcd(r[pc], v[pc]);
      IntVector new_row = r;
      combine(new_row, v, e.s, e.t);
      const std::int64_t ra = r[pc] / e.g, va = v[pc] / e.g;
      combine(v, r, ra, -va);
      r = std::move(new_row);
      if (r[pc] < 0) combine(r, r, -1, 0);
      for (std::size_t a = 0; a < i; ++a) {
        std::int64_t f = floor_div(rows_[a][pc], r[pc]);
        if (f != 0) combine(rows_[a], r, 1, -f);
      }
    }
    vc = leading(pc);
    i = static_cast<std::size_t>(std::lower_bound(pivots_.begin(), pivots_.end(), vc) - pivots_.begin()) - 1;
  }
  if (vc == dim_) return false;
  if (v[vc] < 0) combine(v, v, -1, 0);
  for (auto& row : rows_) {
    std::int64_t f = floor_div(row[vc], v[vc]);
    if (f != 0) combine(row, v, 1, -f);
  }
  rows_.insert(rows_.begin() + static_cast<std::ptrdiff_t>(i), std::move(v));
  pivots_.insert(pivots_.begin() + static_cast<std::ptrdiff_t>(i), vc);
  return true;
}

IntVector HermiteBasis::reduce(IntVector v) const {
  if (v.size() != dim_) throw Error(ErrorCode::InvalidConfig, "vector length mismatch");
  for (std::size_t i = 0; i < rows_.size(); ++i) {
    const std::size_t pc = pivots_[i];
    if (v[pc] == 0) continue;
    const std::int64_t f = floor_div(v[pc], rows_[i][pc]);
    if (f != 0) combine(v, rows_[i], 1, -f);
  }
  return v;
}

bool HermiteBasis::contains(IntVector v) const {
  const IntVector r = reduce(std::move(v));
  return std::all_of(r.begin(), r.end(), [](std::int64_t x) { return x == 0; });
}

namespace {

SmithForm smith_impl(const IntMatrix& input, std::size_t ncols, bool track) {
  IntMatrix a = input;
  const std::size_t m = a.size();
  for (const auto& row : a)
    if (row.size() != ncols) throw Error(ErrorCode::InvalidConfig, "matrix row length mismatch");
  IntMatrix v;
  if (track) {
    v.assign(ncols, IntVector(ncols, 0));
    for (std::size_t i = 0; i < ncols; ++i) v[i][i] = 1;
  }

  // Entries left of column t and above row t are already zero, so row
  // operations start at column t and column operations at row t.
  auto row_axpy = [&](std::size_t dst, std::size_t src, std::int64_t f, std::size_t t) {
    for (std::size_t c = t; c < ncols; ++c)
      if (a[src][c] != 0) a[dst][c] = checked_add(a[dst][c], checked_mul(f, a[src][c]));
  };
  auto col_axpy = [&](std::size_t dst, std::size_t src, std::int64_t f, std::size_t t) {
    for (std::size_t r = t; r < m; ++r)
      if (a[r][src] != 0) a[r][dst] = checked_add(a[r][dst], checked_mul(f, a[r][src]));
    for (auto& row : v)
      if (row[src] != 0) row[dst] = checked_add(row[dst], checked_mul(f, row[src]));
  };
  auto col_swap = [&](std::size_t c1, std::size_t c2) {
    if (c1 == c2) return;
    for (auto& row : a) std::swap(row[c1], row[c2]);
    for (auto& row : v) std::swap(row[c1], row[c2]);
  };
  auto move_pivot = [&](std::size_t t, std::size_t r, std::size_t c) {
    std::swap(a[t], a[r]);
    col_swap(t, c);
  };

  std::vector<std::int64_t> diag;
  std::size_t t = 0;
  while (t < m && t < ncols) {
    std::size_t pr = m, pc = ncols;
    std::int64_t best = 0;
    for (std::size_t r = t; r < m; ++r)
      for (std::size_t c = t; c < ncols; ++c)
        if (a[r][c] != 0 && (best == 0 || std::llabs(a[r][c]) < best)) {
          best = std::llabs(a[r][c]);
          pr = r;
          pc = c;
          if (best == 1) break;
        }
    if (pr == m) break;
    move_pivot(t, pr, pc);
    for (;;) {
      bool remainder = false;
      for (std::size_t r = t + 1; r < m; ++r) {
        if (a[r][t] == 0) continue;
        row_axpy(r, t, -(a[r][t] / a[t][t]), t);
        if (a[r][t] != 0) remainder = true;
      }
      for (std::size_t c = t + 1; c < ncols; ++c) {
        if (a[t][c] == 0) continue;
        col_axpy(c, t, -(a[t][c] / a[t][t]), t);
        if (a[t][c] != 0) remainder = true;
      }
      if (remainder) {
        // A nonzero remainder is smaller than the pivot; make it the pivot.
        std::size_t br = t, bc = t;
        std::int64_t b = std::llabs(a[t][t]);
        for (std::size_t r = t + 1; r < m; ++r)
          if (a[r][t] != 0 && std::llabs(a[r][t]) < b) b = std::llabs(a[r][t]), br = r, bc = t;
        for (std::size_t c = t + 1; c < ncols; ++c)
          if (a[t][c] != 0 && std::llabs(a[t][c]) < b) b = std::llabs(a[t][c]), br = t, bc = c;
        move_pivot(t, br, bc);
        continue;
      }
      // Row and column are clear; the pivot must divide the rest.
      std::size_t bad = m;
      for (std::size_t r = t + 1; r < m && bad == m; ++r)
        for (std::size_t c = t + 1; c < ncols; ++c)
          if (a[r][c] % a[t][t] != 0) {
            bad = r;
            break;
          }
      if (bad == m) break;
      row_axpy(t, bad, 1, t);
    }
    if (a[t][t] < 0) {
      for (auto& row : v) row[t] = -row[t];
      a[t][t] = -a[t][t];
    }
    diag.push_back(a[t][t]);
    ++t;
  }
  return {std::move(diag), std::move(v)};
}

}  // namespace

SmithForm smith_form(const IntMatrix& a, std::size_t ncols) { return smith_impl(a, ncols, true); }

std::vector<std::int64_t> invariant_factors(const IntMatrix& a, std::size_t ncols) {
  return smith_impl(a, ncols, false).diagonal;
}

IntMatrix integer_kernel(const IntMatrix& a, std::size_t ncols) {
  // Echelon basis of {(x A^T, x)}: rows vanishing on the first part span the kernel.
  const std::size_t m = a.size();
  HermiteBasis h(m + ncols);
  for (std::size_t j = 0; j < ncols; ++j) {
    IntVector row(m + ncols, 0);
    for (std::size_t i = 0; i < m; ++i) row[i] = a[i].at(j);
    row[m + j] = 1;
    h.add(std::move(row));
  }
  IntMatrix out;
  for (std::size_t i = 0; i < h.rank(); ++i) {
    if (h.pivot(i) < m) continue;
    out.emplace_back(h.rows()[i].begin() + static_cast<std::ptrdiff_t>(m), h.rows()[i].end());
  }
  return out;
}

Quotient::Quotient(const IntMatrix& relations, std::size_t n) : relations_(n) {
  for (const auto& r : relations) relations_.add(r);
  kernel_ = integer_kernel(relations_.rows(), n);
  for (auto d : invariant_factors(relations_.rows(), n))
    if (d > 1) torsion_.push_back(d);
}

IntVector Quotient::project(const IntVector& x) const {
  IntVector out;
  for (const auto& w : kernel_) {
    std::int64_t acc = 0;
    for (std::size_t r = 0; r < x.size(); ++r)
      if (x[r] != 0) acc = checked_add(acc, checked_mul(x[r], w[r]));
    out.push_back(acc);
  }
  return out;
}

IntVector Quotient::coordinates(const IntVector& x) const { return relations_.reduce(x); }

bool Quotient::is_zero(const IntVector& x) const { return relations_.contains(x); }

}  // namespace flagval::lattice
