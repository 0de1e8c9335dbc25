#include <algorithm>
#include <numeric>

#include "sidon/dense.hpp"
#include "sidon/planes.hpp"
#include "sidon/sidon.hpp"

namespace sidon {

namespace {

std::vector<std::vector<std::uint32_t>> orbits_of(const std::vector<std::vector<std::uint32_t>>& perm,
                                                  std::size_t n) {
  std::vector<char> seen(n, 0);
  std::vector<std::vector<std::uint32_t>> out;
  for (std::uint32_t x = 0; x < n; ++x) {
    if (seen[x]) continue;
    std::vector<std::uint32_t> orbit;
    for (const auto& g : perm)
      if (!seen[g[x]]) {
        seen[g[x]] = 1;
        orbit.push_back(g[x]);
      }
    std::sort(orbit.begin(), orbit.end());
    out.push_back(std::move(orbit));
  }
  return out;
}

}  // namespace

OrbitReport orbit_analysis(const PlaneAction& a) {
  OrbitReport r;
  r.point_orbits = orbits_of(a.point_perm, a.plane->points().size());
  r.line_orbits = orbits_of(a.line_perm, a.plane->lines().size());
  if (r.point_orbits.size() != r.line_orbits.size())
    throw std::logic_error("numbers of point and line orbits differ");
  r.t = r.point_orbits.size();
  for (const auto& o : r.point_orbits)
    if (o.size() == 1) r.fixed_points.push_back(o[0]);
  for (const auto& o : r.line_orbits)
    if (o.size() == 1) r.fixed_lines.push_back(o[0]);
  return r;
}

StabilizerScan stabilizer_scan_serial(const PlaneAction& a) {
  StabilizerScan s;
  s.point_stabilizer.assign(a.plane->points().size(), 0);
  s.line_stabilizer.assign(a.plane->lines().size(), 0);
  for (const auto& g : a.point_perm)
    for (std::uint32_t p = 0; p < g.size(); ++p) s.point_stabilizer[p] += g[p] == p;
  for (const auto& g : a.line_perm)
    for (std::uint32_t l = 0; l < g.size(); ++l) s.line_stabilizer[l] += g[l] == l;
  return s;
}

StabilizerScan stabilizer_scan(const PlaneAction& a) {
  StabilizerScan s;
  const std::int64_t np = a.plane->points().size(), nl = a.plane->lines().size();
  s.point_stabilizer.assign(np, 0);
  s.line_stabilizer.assign(nl, 0);
#pragma omp parallel for schedule(static)
  for (std::int64_t p = 0; p < np; ++p) {
    std::uint32_t c = 0;
    for (const auto& g : a.point_perm) c += g[p] == p;
    s.point_stabilizer[p] = c;
  }
#pragma omp parallel for schedule(static)
  for (std::int64_t l = 0; l < nl; ++l) {
    std::uint32_t c = 0;
    for (const auto& g : a.line_perm) c += g[l] == l;
    s.line_stabilizer[l] = c;
  }
  return s;
}

Extraction extract_sidon(const PlaneAction& a, std::uint32_t point, std::uint32_t line) {
  const auto& s = a.plane->structure();
  if (point >= s.num_points() || line >= s.num_lines()) throw PreconditionError("point or line index out of range");
  std::uint32_t stab_p = 0, stab_l = 0;
  for (std::size_t g = 0; g < a.elements.size(); ++g) {
    stab_p += a.point_perm[g][point] == point;
    stab_l += a.line_perm[g][line] == line;
  }
  if (stab_p != 1) throw PreconditionError("nontrivial point stabilizer (order " + std::to_string(stab_p) + ")");
  if (stab_l != 1) throw PreconditionError("nontrivial line stabilizer (order " + std::to_string(stab_l) + ")");

  Extraction e;
  e.point = point;
  e.line = line;
  std::vector<char> in_orbit(s.num_points(), 0);
  for (Elem g = 0; g < a.elements.size(); ++g) {
    const std::uint32_t img = a.point_perm[g][point];
    in_orbit[img] = 1;
    if (s.incident(img, line)) e.set.push_back(g);
  }
  const std::uint64_t q = a.plane->order();
  e.d = q + 1 - e.set.size();
  for (std::uint32_t p : s.points_on(line)) e.d_outside_orbit += !in_orbit[p];
  const std::uint64_t n = a.group.order();
  e.bound_ok = e.d * n <= (q + 1) * (q * q + q + 1 - n);
  return e;
}

std::optional<std::pair<std::uint32_t, std::uint32_t>> default_extraction_pair(const PlaneAction& a) {
  const auto scan = stabilizer_scan(a);
  std::optional<std::uint32_t> p, l;
  for (std::uint32_t i = 0; i < scan.point_stabilizer.size() && !p; ++i)
    if (scan.point_stabilizer[i] == 1) p = i;
  for (std::uint32_t i = 0; i < scan.line_stabilizer.size() && !l; ++i)
    if (scan.line_stabilizer[i] == 1) l = i;
  if (!p || !l) return std::nullopt;
  return std::make_pair(*p, *l);
}

std::vector<Recovery> recover_constructions(const FiniteField& f, PlaneLimits limits) {
  const std::vector<std::pair<Family, DenseName>> pairs{{Family::i, DenseName::singer},
                                                        {Family::ii, DenseName::bose},
                                                        {Family::iii, DenseName::hughes},
                                                        {Family::iv, DenseName::spence},
                                                        {Family::v, DenseName::erdos_turan}};
  std::vector<Recovery> out;
  for (auto [fam, name] : pairs) {
    if (name == DenseName::erdos_turan && f.characteristic() == 2) continue;
    Recovery r;
    r.family = fam;
    r.construction = to_string(name);
    const auto action = family_build(f, fam, limits);
    const auto dense = construct_dense(name, f);
    r.group_matches = action.group == dense.group;
    if (auto pl = default_extraction_pair(action)) {
      r.extraction = extract_sidon(action, pl->first, pl->second);
      if (r.group_matches) {
        const auto eq = affine_equivalent(dense.group, r.extraction->set, dense.set);
        r.exhaustive = eq.exhaustive;
        if (eq.map) {
          r.equivalent = true;
          r.automorphism_images = eq.map->generator_images;
          r.translation = eq.map->translation;
        }
      }
    }
    out.push_back(std::move(r));
  }
  return out;
}

}  // namespace sidon
