#include "flagval/projspace.hpp"

#include <algorithm>
#include <map>
#include <memory>
#include <mutex>
#include <unordered_set>

#include "flagval/error.hpp"

namespace flagval {

ProjPoint ProjPoint::normalized(std::vector<Elem> coords, const Field& field) {
  auto it = std::find_if(coords.begin(), coords.end(), [](Elem c) { return c != 0; });
  if (it == coords.end()) throw Error(ErrorCode::ZeroElement, "projective point with all coordinates zero");
  const Elem inv = field.inv(*it);
  for (Elem& c : coords) c = field.mul(c, inv);
  return ProjPoint(std::move(coords), field);
}

std::string ProjPoint::to_string() const {
  std::string out = "(";
  for (std::size_t i = 0; i < coords_.size(); ++i) {
    if (i) out += ':';
    out += field_->format(coords_[i]);
  }
  return out + ")";
}

ProjSubspace ProjSubspace::span(std::span<const ProjPoint> points) {
  if (points.empty()) throw Error(ErrorCode::BadInput, "span of no points");
  FqMatrix rows;
  for (const auto& p : points) rows.push_back(p.coords());
  return span(points.front().field(), points.front().size(), std::move(rows));
}

ProjSubspace ProjSubspace::span(const Field& field, std::size_t ambient, FqMatrix vectors) {
  RowEchelon e = reduced_row_echelon(field, std::move(vectors), ambient);
  if (e.rows.empty()) throw Error(ErrorCode::ZeroElement, "span of zero vectors");
  return ProjSubspace(field, ambient, std::move(e.rows));
}

bool ProjSubspace::contains(const ProjPoint& p) const {
  if (p.size() != ambient_) return false;
  FqMatrix rows = basis_;
  rows.push_back(p.coords());
  return rank(*field_, rows, ambient_) == basis_.size();
}

bool ProjSubspace::contains(const ProjSubspace& s) const {
  FqMatrix rows = basis_;
  rows.insert(rows.end(), s.basis_.begin(), s.basis_.end());
  return rank(*field_, rows, ambient_) == basis_.size();
}

std::size_t ProjSubspace::point_count() const {
  std::size_t q = field_->order(), total = 1;
  for (std::size_t i = 0; i < basis_.size(); ++i) total *= q;
  return (total - 1) / (q - 1);
}

std::vector<ProjPoint> ProjSubspace::points() const {
  const std::size_t k = basis_.size();
  const Field& f = *field_;
  std::vector<ProjPoint> out;
  for (const ProjPoint& lambda : enumerate_points(static_cast<int>(k) - 1, f)) {
    std::vector<Elem> v(ambient_, 0);
    for (std::size_t i = 0; i < k; ++i) {
      if (lambda.coords()[i] == 0) continue;
      for (std::size_t c = 0; c < ambient_; ++c)
        v[c] = f.add(v[c], f.mul(lambda.coords()[i], basis_[i][c]));
    }
    out.push_back(ProjPoint::normalized(std::move(v), f));
  }
  std::sort(out.begin(), out.end());
  return out;
}

nlohmann::ordered_json ProjSubspace::to_json() const {
  nlohmann::ordered_json j = nlohmann::ordered_json::array();
  for (const auto& p : points()) j.push_back(p.to_string());
  return j;
}

std::string ProjSubspace::to_string() const {
  std::string out = "{";
  bool first = true;
  for (const auto& p : points()) {
    if (!first) out += ',';
    first = false;
    out += p.to_string();
  }
  return out + "}";
}

std::vector<ProjPoint> enumerate_points(int n, const Field& field, std::size_t limit) {
  if (n < 0) throw Error(ErrorCode::InvalidConfig, "negative projective dimension");
  const std::size_t q = field.order();
  std::size_t count = 0, layer = 1;
  for (int i = 0; i <= n; ++i) {
    count += layer;
    if (count > limit) throw Error(ErrorCode::SizeBound, "too many projective points");
    layer *= q;
  }
  std::vector<ProjPoint> out;
  out.reserve(count);
  const std::size_t len = static_cast<std::size_t>(n) + 1;
  // Leading 1 at position lead; later leads sort first.
  for (std::size_t lead = len; lead-- > 0;) {
    const std::size_t free = len - lead - 1;
    std::size_t count = 1;
    for (std::size_t i = 0; i < free; ++i) count *= q;
    for (std::size_t c = 0; c < count; ++c) {
      std::vector<Elem> v(len, 0);
      v[lead] = 1;
      std::size_t x = c;
      for (std::size_t i = len; i-- > lead + 1;) {
        v[i] = static_cast<Elem>(x % q);
        x /= q;
      }
      out.push_back(ProjPoint::normalized(std::move(v), field));
    }
  }
  return out;
}

ProjSubspace line_through(const ProjPoint& a, const ProjPoint& b) {
  if (a == b) throw Error(ErrorCode::EqualPoints, "line through a point and itself");
  const ProjPoint pts[] = {a, b};
  return ProjSubspace::span(pts);
}

namespace {

std::vector<std::size_t> members(const PointSet& s, std::size_t n) {
  std::vector<std::size_t> out;
  for (std::size_t i = 0; i < n; ++i)
    if (s.test(i)) out.push_back(i);
  return out;
}

}  // namespace

ProjectiveSpace::ProjectiveSpace(int n, const Field& field) : n_(n), field_(&field) {
  if (n < 1) throw Error(ErrorCode::InvalidConfig, "projective dimension must be >= 1");
  points_ = enumerate_points(n, field, kMaxIndexedPoints);
  const std::size_t N = points_.size();
  const std::size_t q = field.order();
  std::size_t codes = 1;
  for (int i = 0; i <= n; ++i) codes *= q;
  index_by_code_.assign(codes, N);
  for (std::size_t i = 0; i < N; ++i) {
    const auto& c = points_[i].coords();
    // Index every nonzero multiple.
    for (Elem lambda = 1; lambda < q; ++lambda) {
      std::size_t code = 0;
      for (Elem x : c) code = code * q + field.mul(x, lambda);
      index_by_code_[code] = i;
    }
    all_.set(i);
  }

  line_of_pair_.assign(N * N, 0);
  std::vector<bool> seen(N * N, false);
  for (std::size_t a = 0; a < N; ++a)
    for (std::size_t b = a + 1; b < N; ++b) {
      if (seen[a * N + b]) continue;
      std::vector<std::size_t> pts;
      const auto& u = points_[a].coords();
      const auto& v = points_[b].coords();
      // Points u + lambda v and v.
      pts.push_back(a);
      pts.push_back(b);
      for (Elem lambda = 1; lambda < q; ++lambda) {
        std::vector<Elem> w(u.size());
        for (std::size_t k = 0; k < u.size(); ++k) w[k] = field.add(u[k], field.mul(lambda, v[k]));
        pts.push_back(index_of_vector(w));
      }
      std::sort(pts.begin(), pts.end());
      const std::size_t id = lines_.size();
      for (std::size_t x : pts)
        for (std::size_t y : pts) {
          seen[x * N + y] = true;
          line_of_pair_[x * N + y] = id;
        }
      lines_.push_back(std::move(pts));
    }

  subspaces_.resize(static_cast<std::size_t>(n) + 1);
  for (std::size_t i = 0; i < N; ++i) {
    PointSet s;
    s.set(i);
    subspaces_[0].push_back(s);
  }
  for (const auto& l : lines_) {
    PointSet s;
    for (std::size_t x : l) s.set(x);
    subspaces_[1].push_back(s);
  }
  for (int d = 2; d <= n; ++d) {
    std::unordered_set<PointSet> found;
    std::vector<PointSet> ordered;
    for (const PointSet& s : subspaces_[static_cast<std::size_t>(d - 1)]) {
      const auto ms = members(s, N);
      for (std::size_t p = 0; p < N; ++p) {
        if (s.test(p)) continue;
        PointSet t = s;
        t.set(p);
        for (std::size_t x : ms)
          for (std::size_t y : lines_[line_of_pair_[p * N + x]]) t.set(y);
        if (found.insert(t).second) ordered.push_back(t);
      }
    }
    std::sort(ordered.begin(), ordered.end(), [N](const PointSet& a, const PointSet& b) {
      return members(a, N) < members(b, N);
    });
    subspaces_[static_cast<std::size_t>(d)] = std::move(ordered);
  }
}

std::size_t ProjectiveSpace::index_of_vector(std::span<const Elem> v) const {
  const std::size_t q = field_->order();
  std::size_t code = 0;
  for (Elem x : v) code = code * q + x;
  if (v.size() != static_cast<std::size_t>(n_) + 1 || code >= index_by_code_.size() ||
      index_by_code_[code] == points_.size())
    throw Error(ErrorCode::BadInput, "vector is not a point of this space");
  return index_by_code_[code];
}

std::size_t ProjectiveSpace::index_of(const ProjPoint& p) const { return index_of_vector(p.coords()); }

std::size_t ProjectiveSpace::line_index(std::size_t a, std::size_t b) const {
  if (a == b) throw Error(ErrorCode::EqualPoints, "line through a point and itself");
  return line_of_pair_[a * points_.size() + b];
}

int ProjectiveSpace::subspace_dimension(const PointSet& s) const {
  for (std::size_t d = 0; d < subspaces_.size(); ++d)
    for (const auto& t : subspaces_[d])
      if (t == s) return static_cast<int>(d);
  return -1;
}

ProjSubspace ProjectiveSpace::to_subspace(const PointSet& s) const {
  std::vector<ProjPoint> pts;
  for (std::size_t i = 0; i < points_.size(); ++i)
    if (s.test(i)) pts.push_back(points_[i]);
  return ProjSubspace::span(pts);
}

ProjSubspace ProjectiveSpace::line(std::size_t index) const {
  PointSet s;
  for (std::size_t x : lines_[index]) s.set(x);
  return to_subspace(s);
}

const ProjectiveSpace& projective_space(int n, const Field& field) {
  static std::mutex mutex;
  static std::map<std::pair<int, const Field*>, std::unique_ptr<ProjectiveSpace>> cache;
  std::lock_guard lock(mutex);
  auto& slot = cache[{n, &field}];
  if (!slot) slot = std::make_unique<ProjectiveSpace>(n, field);
  return *slot;
}

}  // namespace flagval
