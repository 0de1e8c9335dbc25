#include <algorithm>

#include "sidon/planes.hpp"

namespace sidon {

Vec3 normalize_point(const FiniteField& f, Vec3 v) {
  for (int i = 2; i >= 0; --i) {
    if (v[i] == f.zero()) continue;
    const Fq s = f.inv(v[i]);
    for (auto& c : v) c = f.mul(c, s);
    return v;
  }
  throw PreconditionError("zero vector does not span a point");
}

Mat3 normalize_matrix(const FiniteField& f, Mat3 m) {
  for (const Fq c : m) {
    if (c == f.zero()) continue;
    const Fq s = f.inv(c);
    for (auto& e : m) e = f.mul(e, s);
    return m;
  }
  throw PreconditionError("zero matrix");
}

Mat3 mat_mul(const FiniteField& f, const Mat3& a, const Mat3& b) {
  Mat3 c;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      Fq s = f.zero();
      for (int k = 0; k < 3; ++k) s = f.add(s, f.mul(a[3 * i + k], b[3 * k + j]));
      c[3 * i + j] = s;
    }
  return c;
}

Fq mat_det(const FiniteField& f, const Mat3& m) {
  auto minor = [&](int r0, int r1, int c0, int c1) {
    return f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]), f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
  };
  Fq d = f.mul(m[0], minor(1, 2, 1, 2));
  d = f.sub(d, f.mul(m[1], minor(1, 2, 0, 2)));
  return f.add(d, f.mul(m[2], minor(1, 2, 0, 1)));
}

Mat3 mat_inverse(const FiniteField& f, const Mat3& m) {
  const Fq det = mat_det(f, m);
  if (det == f.zero()) throw PreconditionError("singular matrix");
  const Fq s = f.inv(det);
  Mat3 out;
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) {
      // Cofactor of entry (j, i).
      const int r0 = (j + 1) % 3, r1 = (j + 2) % 3, c0 = (i + 1) % 3, c1 = (i + 2) % 3;
      const Fq cof = f.sub(f.mul(m[3 * r0 + c0], m[3 * r1 + c1]), f.mul(m[3 * r0 + c1], m[3 * r1 + c0]));
      out[3 * i + j] = f.mul(cof, s);
    }
  return out;
}

Vec3 mat_apply(const FiniteField& f, const Mat3& m, const Vec3& v) {
  Vec3 out;
  for (int i = 0; i < 3; ++i)
    out[i] = f.add(f.add(f.mul(m[3 * i], v[0]), f.mul(m[3 * i + 1], v[1])), f.mul(m[3 * i + 2], v[2]));
  return out;
}

Vec3 mat_apply_row(const FiniteField& f, const Vec3& u, const Mat3& m) {
  Vec3 out;
  for (int j = 0; j < 3; ++j) out[j] = f.add(f.add(f.mul(u[0], m[j]), f.mul(u[1], m[3 + j])), f.mul(u[2], m[6 + j]));
  return out;
}

std::uint64_t ProjectivePlane::key(const Vec3& v) const {
  const std::uint64_t q = field_.order();
  return v[0].code + q * (v[1].code + q * std::uint64_t(v[2].code));
}

std::uint32_t ProjectivePlane::point_index(const Vec3& v) const { return index_.at(key(normalize_point(field_, v))); }
std::uint32_t ProjectivePlane::line_index(const Vec3& u) const { return index_.at(key(normalize_point(field_, u))); }

std::shared_ptr<const ProjectivePlane> ProjectivePlane::build(const FiniteField& f, PlaneLimits limits) {
  if (f.order() > limits.max_q) throw PreconditionError("plane_build: field order exceeds the plane cap");
  auto plane = std::shared_ptr<ProjectivePlane>(new ProjectivePlane(f));
  const std::uint32_t q = f.order();
  std::vector<Vec3> reps;
  for (std::uint32_t a = 0; a < q; ++a)
    for (std::uint32_t b = 0; b < q; ++b)
      for (std::uint32_t c = 0; c < q; ++c) {
        const Vec3 v{Fq{a}, Fq{b}, Fq{c}};
        if (a == 0 && b == 0 && c == 0) continue;
        if (normalize_point(f, v) == v) reps.push_back(v);
      }
  // Loops above already produce lexicographic order of (code0, code1, code2).
  plane->points_ = reps;
  plane->lines_ = reps;
  for (std::uint32_t i = 0; i < reps.size(); ++i) plane->index_.emplace(plane->key(reps[i]), i);

  // Direct dot products; the order cap keeps this below 2*10^7 products.
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inc;
  inc.reserve(reps.size() * (q + 1));
  for (std::uint32_t l = 0; l < reps.size(); ++l) {
    const Vec3& u = reps[l];
    for (std::uint32_t p = 0; p < reps.size(); ++p) {
      const Vec3& v = reps[p];
      const Fq dot = f.add(f.add(f.mul(u[0], v[0]), f.mul(u[1], v[1])), f.mul(u[2], v[2]));
      if (dot == f.zero()) inc.emplace_back(p, l);
    }
  }
  plane->structure_ = IncidenceStructure(reps.size(), reps.size(), std::move(inc));
  return plane;
}

}  // namespace sidon
