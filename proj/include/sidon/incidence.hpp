#pragma once

// Finite incidence structures: development of a subset of an abelian group,
// C4-freeness (partial linear spaces), projective-plane axioms and duality.

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "sidon/group.hpp"

namespace sidon {

class IncidenceStructure {
 public:
  IncidenceStructure() = default;
  /// Duplicate pairs are dropped; indices must be in range.
  IncidenceStructure(std::uint32_t num_points, std::uint32_t num_lines,
                     std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences);

  std::uint32_t num_points() const { return num_points_; }
  std::uint32_t num_lines() const { return num_lines_; }
  /// (point, line) pairs sorted lexicographically.
  const std::vector<std::pair<std::uint32_t, std::uint32_t>>& incidences() const { return incidences_; }
  const std::vector<std::uint32_t>& lines_on(std::uint32_t point) const { return point_lines_[point]; }
  const std::vector<std::uint32_t>& points_on(std::uint32_t line) const { return line_points_[line]; }
  bool incident(std::uint32_t point, std::uint32_t line) const;

  friend bool operator==(const IncidenceStructure& a, const IncidenceStructure& b) {
    return a.num_points_ == b.num_points_ && a.num_lines_ == b.num_lines_ && a.incidences_ == b.incidences_;
  }

 private:
  std::uint32_t num_points_ = 0;
  std::uint32_t num_lines_ = 0;
  std::vector<std::pair<std::uint32_t, std::uint32_t>> incidences_;
  std::vector<std::vector<std::uint32_t>> point_lines_;
  std::vector<std::vector<std::uint32_t>> line_points_;
};

/// Points and lines are the elements of g; point p lies on line l iff p - l is in s.
IncidenceStructure develop(const AbelianGroup& g, std::span<const Elem> s);

/// Two distinct points on two distinct common lines.
struct C4Witness {
  std::uint32_t points[2];
  std::uint32_t lines[2];
};

struct LinearSpaceCheck {
  bool ok = true;
  std::optional<C4Witness> witness;
};

LinearSpaceCheck is_partial_linear_space(const IncidenceStructure& s);

enum class PlaneAxiom { points_joined, lines_meet, nondegenerate, regularity };
std::string to_string(PlaneAxiom a);

struct PlaneCheck {
  std::optional<std::uint64_t> order;
  std::optional<PlaneAxiom> violated;  // first failing axiom when order is absent
  std::string detail;
};

/// Checks: (a) two distinct points lie on exactly one common line, (b) two
/// distinct lines share exactly one point, (c) four points with no three
/// collinear exist; then confirms q^2+q+1 points and lines, (q+1)-regular.
PlaneCheck is_projective_plane(const IncidenceStructure& s);

IncidenceStructure dualize(const IncidenceStructure& s);

/// Checks that x -> -x (points to lines, lines to points) is an isomorphism
/// from dev(s) onto its dual.
bool self_dual_via_negation(const AbelianGroup& g, std::span<const Elem> s);

/// How far a partial linear space is from a projective plane whose order is
/// taken from the largest line.
struct Deficiency {
  std::uint64_t order = 0;
  std::int64_t missing_points = 0;  // q^2+q+1 - #points
  std::int64_t missing_lines = 0;
  std::uint64_t unjoined_point_pairs = 0;
  std::uint64_t disjoint_line_pairs = 0;
};

Deficiency deficiency(const IncidenceStructure& s);

/// Graphviz export of the bipartite incidence graph.
std::string to_dot(const IncidenceStructure& s);

}  // namespace sidon
