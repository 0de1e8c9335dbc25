#include "sidon/incidence.hpp"

#include <algorithm>
#include <sstream>

#include "sidon/errors.hpp"

namespace sidon {

IncidenceStructure::IncidenceStructure(std::uint32_t num_points, std::uint32_t num_lines,
                                       std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences)
    : num_points_(num_points), num_lines_(num_lines), incidences_(std::move(incidences)) {
  std::sort(incidences_.begin(), incidences_.end());
  incidences_.erase(std::unique(incidences_.begin(), incidences_.end()), incidences_.end());
  point_lines_.resize(num_points_);
  line_points_.resize(num_lines_);
  for (auto [p, l] : incidences_) {
    if (p >= num_points_ || l >= num_lines_) throw PreconditionError("incidence index out of range");
    point_lines_[p].push_back(l);
    line_points_[l].push_back(p);
  }
}

bool IncidenceStructure::incident(std::uint32_t point, std::uint32_t line) const {
  const auto& ls = point_lines_.at(point);
  return std::binary_search(ls.begin(), ls.end(), line);
}

IncidenceStructure develop(const AbelianGroup& g, std::span<const Elem> s_in) {
  const ElemSet s = normalized(ElemSet(s_in.begin(), s_in.end()));
  const auto n = static_cast<std::uint32_t>(g.order());
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inc;
  inc.reserve(std::size_t(n) * s.size());
  for (Elem l = 0; l < n; ++l)
    for (Elem x : s) inc.emplace_back(g.add(l, x), l);
  return IncidenceStructure(n, n, std::move(inc));
}

namespace {

// Scans, for each point p, the points collinear with it. Returns the first C4
// found; also counts for each p how many other points share a line with it.
struct JoinScan {
  std::optional<C4Witness> witness;
  std::uint64_t unjoined_pairs = 0;  // unordered
};

JoinScan scan_joins(std::uint32_t n, const std::vector<std::vector<std::uint32_t>>& lines_of,
                    const std::vector<std::vector<std::uint32_t>>& points_of, bool stop_at_c4) {
  JoinScan out;
  std::vector<std::uint32_t> via(n, UINT32_MAX);  // line through p and q, for the current p
  std::vector<std::uint32_t> stamp(n, UINT32_MAX);
  for (std::uint32_t p = 0; p < n; ++p) {
    std::uint64_t reached = 0;
    for (std::uint32_t l : lines_of[p]) {
      for (std::uint32_t r : points_of[l]) {
        if (r == p) continue;
        if (stamp[r] == p) {
          if (!out.witness) out.witness = C4Witness{{std::min(p, r), std::max(p, r)}, {via[r], l}};
          if (stop_at_c4) return out;
          continue;
        }
        stamp[r] = p;
        via[r] = l;
        ++reached;
      }
    }
    out.unjoined_pairs += (n - 1) - reached;
  }
  out.unjoined_pairs /= 2;
  return out;
}

std::vector<std::vector<std::uint32_t>> point_lists(const IncidenceStructure& s, bool lines_of_points) {
  std::vector<std::vector<std::uint32_t>> out(lines_of_points ? s.num_points() : s.num_lines());
  for (std::uint32_t i = 0; i < out.size(); ++i) out[i] = lines_of_points ? s.lines_on(i) : s.points_on(i);
  return out;
}

}  // namespace

LinearSpaceCheck is_partial_linear_space(const IncidenceStructure& s) {
  const auto scan = scan_joins(s.num_points(), point_lists(s, true), point_lists(s, false), true);
  LinearSpaceCheck out;
  out.ok = !scan.witness;
  out.witness = scan.witness;
  return out;
}

std::string to_string(PlaneAxiom a) {
  switch (a) {
    case PlaneAxiom::points_joined: return "points_joined";
    case PlaneAxiom::lines_meet: return "lines_meet";
    case PlaneAxiom::nondegenerate: return "nondegenerate";
    case PlaneAxiom::regularity: return "regularity";
  }
  return "unknown";
}

PlaneCheck is_projective_plane(const IncidenceStructure& s) {
  PlaneCheck out;
  auto fail = [&](PlaneAxiom a, std::string detail) {
    out.violated = a;
    out.detail = std::move(detail);
    return out;
  };
  const auto lines_of = point_lists(s, true);
  const auto points_of = point_lists(s, false);

  const auto pj = scan_joins(s.num_points(), lines_of, points_of, false);
  if (pj.witness)
    return fail(PlaneAxiom::points_joined, "points " + std::to_string(pj.witness->points[0]) + " and " +
                                               std::to_string(pj.witness->points[1]) + " share two lines");
  if (pj.unjoined_pairs) return fail(PlaneAxiom::points_joined, std::to_string(pj.unjoined_pairs) + " point pairs unjoined");
  const auto lm = scan_joins(s.num_lines(), points_of, lines_of, false);
  if (lm.witness)
    return fail(PlaneAxiom::lines_meet, "lines " + std::to_string(lm.witness->points[0]) + " and " +
                                            std::to_string(lm.witness->points[1]) + " share two points");
  if (lm.unjoined_pairs) return fail(PlaneAxiom::lines_meet, std::to_string(lm.unjoined_pairs) + " line pairs disjoint");

  // With (a) and (b) in force a quadrangle exists iff one exists through
  // points 0 and 1, so the search below is complete.
  const std::uint32_t n = s.num_points();
  if (n < 4) return fail(PlaneAxiom::nondegenerate, "fewer than four points");
  auto join = [&](std::uint32_t a, std::uint32_t b) {
    for (std::uint32_t l : lines_of[a])
      if (s.incident(b, l)) return l;
    return UINT32_MAX;
  };
  bool found = false;
  const std::uint32_t l01 = join(0, 1);
  for (std::uint32_t c = 2; c < n && !found; ++c) {
    if (s.incident(c, l01)) continue;
    const std::uint32_t l0c = join(0, c), l1c = join(1, c);
    for (std::uint32_t d = 2; d < n && !found; ++d)
      if (d != c && !s.incident(d, l01) && !s.incident(d, l0c) && !s.incident(d, l1c)) found = true;
  }
  if (!found) return fail(PlaneAxiom::nondegenerate, "no four points with no three collinear");

  const std::uint64_t q = points_of.empty() ? 0 : points_of[0].size() - 1;
  const std::uint64_t size = q * q + q + 1;
  if (s.num_points() != size || s.num_lines() != size)
    return fail(PlaneAxiom::regularity, "point or line count differs from q^2+q+1");
  for (const auto& v : points_of)
    if (v.size() != q + 1) return fail(PlaneAxiom::regularity, "line sizes differ");
  for (const auto& v : lines_of)
    if (v.size() != q + 1) return fail(PlaneAxiom::regularity, "point degrees differ");
  out.order = q;
  return out;
}

IncidenceStructure dualize(const IncidenceStructure& s) {
  std::vector<std::pair<std::uint32_t, std::uint32_t>> inc;
  inc.reserve(s.incidences().size());
  for (auto [p, l] : s.incidences()) inc.emplace_back(l, p);
  return IncidenceStructure(s.num_lines(), s.num_points(), std::move(inc));
}

bool self_dual_via_negation(const AbelianGroup& g, std::span<const Elem> s) {
  const auto dev = develop(g, s);
  const auto dual = dualize(dev);
  if (dual.incidences().size() != dev.incidences().size()) return false;
  for (auto [p, l] : dev.incidences())
    if (!dual.incident(g.neg(p), g.neg(l))) return false;
  return true;
}

Deficiency deficiency(const IncidenceStructure& s) {
  Deficiency d;
  for (std::uint32_t l = 0; l < s.num_lines(); ++l)
    d.order = std::max<std::uint64_t>(d.order, s.points_on(l).size());
  if (d.order > 0) --d.order;
  const auto size = static_cast<std::int64_t>(d.order * d.order + d.order + 1);
  d.missing_points = size - s.num_points();
  d.missing_lines = size - s.num_lines();
  const auto lines_of = point_lists(s, true);
  const auto points_of = point_lists(s, false);
  d.unjoined_point_pairs = scan_joins(s.num_points(), lines_of, points_of, false).unjoined_pairs;
  d.disjoint_line_pairs = scan_joins(s.num_lines(), points_of, lines_of, false).unjoined_pairs;
  return d;
}

std::string to_dot(const IncidenceStructure& s) {
  std::ostringstream os;
  os << "graph incidence {\n";
  for (std::uint32_t p = 0; p < s.num_points(); ++p) os << "  p" << p << " [shape=circle];\n";
  for (std::uint32_t l = 0; l < s.num_lines(); ++l) os << "  l" << l << " [shape=box];\n";
  for (auto [p, l] : s.incidences()) os << "  p" << p << " -- l" << l << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace sidon
