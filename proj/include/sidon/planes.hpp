#pragma once

// The desarguesian plane P^2(K), the maximal abelian subgroups of PGL_3(K)
// acting on it, orbit structure, and Sidon sets read off from a point and a
// line with trivial stabilizers.

#include <array>
#include <cstdint>
#include <memory>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "sidon/field.hpp"
#include "sidon/group.hpp"
#include "sidon/incidence.hpp"

namespace sidon {

using Vec3 = std::array<Fq, 3>;
/// Row-major 3x3 matrix.
using Mat3 = std::array<Fq, 9>;

/// Scales v so that its last nonzero coordinate is 1.
Vec3 normalize_point(const FiniteField& f, Vec3 v);
/// Scales m so that its first nonzero entry (row-major) is 1.
Mat3 normalize_matrix(const FiniteField& f, Mat3 m);
Mat3 mat_mul(const FiniteField& f, const Mat3& a, const Mat3& b);
Mat3 mat_inverse(const FiniteField& f, const Mat3& m);
Fq mat_det(const FiniteField& f, const Mat3& m);
Vec3 mat_apply(const FiniteField& f, const Mat3& m, const Vec3& v);       // m v
Vec3 mat_apply_row(const FiniteField& f, const Vec3& u, const Mat3& m);   // u m

struct PlaneLimits {
  std::uint64_t max_q = 64;
};

class ProjectivePlane {
 public:
  static std::shared_ptr<const ProjectivePlane> build(const FiniteField& f, PlaneLimits limits = {});

  const FiniteField& field() const { return field_; }
  std::uint64_t order() const { return field_.order(); }
  /// Normalized triples in lexicographic order of their coordinate codes.
  const std::vector<Vec3>& points() const { return points_; }
  /// Line u is the set of points v with u . v = 0.
  const std::vector<Vec3>& lines() const { return lines_; }
  const IncidenceStructure& structure() const { return structure_; }

  /// Index of the point (line) spanned by a nonzero vector.
  std::uint32_t point_index(const Vec3& v) const;
  std::uint32_t line_index(const Vec3& u) const;

 private:
  explicit ProjectivePlane(FiniteField f) : field_(std::move(f)) {}
  std::uint64_t key(const Vec3& v) const;
  FiniteField field_;
  std::vector<Vec3> points_, lines_;
  std::unordered_map<std::uint64_t, std::uint32_t> index_;  // same normalization for points and lines
  IncidenceStructure structure_;
};

enum class Family { i, ii, iii, iv, v, vi, vii, viii, ix };
std::string to_string(Family f);
std::optional<Family> parse_family(const std::string& s);
/// Group order stated for the family over F_q.
std::uint64_t expected_family_order(Family fam, std::uint64_t q);

struct Mat3Hash {
  std::size_t operator()(const Mat3& m) const noexcept;
};

/// An abelian subgroup of PGL_3(K) presented in invariant-factor form, with
/// its permutation action on points (v -> M v) and lines (u -> u M^-1).
struct PlaneAction {
  Family family;
  std::shared_ptr<const ProjectivePlane> plane;
  AbelianGroup group;
  std::vector<Mat3> generators;  // image of the i-th invariant-factor generator
  std::vector<Mat3> elements;    // element with mixed-radix index k
  std::unordered_map<Mat3, Elem, Mat3Hash> index_of;
  std::vector<std::vector<std::uint32_t>> point_perm;  // [element][point]
  std::vector<std::vector<std::uint32_t>> line_perm;   // [element][line]
  std::string iso_note;

  Elem element_index(const Mat3& m) const;
};

PlaneAction family_build(const FiniteField& f, Family fam, PlaneLimits limits = {});

/// Checks identity, homomorphism on all pairs (or on pairs with a generator
/// when sampled) and incidence preservation. Throws std::logic_error on failure.
void verify_action(const PlaneAction& a, bool exhaustive);

struct OrbitReport {
  std::vector<std::vector<std::uint32_t>> point_orbits;
  std::vector<std::vector<std::uint32_t>> line_orbits;
  std::size_t t = 0;
  std::vector<std::uint32_t> fixed_points;
  std::vector<std::uint32_t> fixed_lines;
};

OrbitReport orbit_analysis(const PlaneAction& a);

/// Stabilizer orders of every point and every line; parallel over points/lines.
struct StabilizerScan {
  std::vector<std::uint32_t> point_stabilizer;
  std::vector<std::uint32_t> line_stabilizer;
};
StabilizerScan stabilizer_scan(const PlaneAction& a);
StabilizerScan stabilizer_scan_serial(const PlaneAction& a);

struct Extraction {
  std::uint32_t point = 0;
  std::uint32_t line = 0;
  ElemSet set;
  std::uint64_t d = 0;
  std::uint64_t d_outside_orbit = 0;  // points of the line outside the orbit of the point
  bool bound_ok = false;              // d |G| <= (q+1)(q^2+q+1-|G|)
};

/// Throws PreconditionError naming the stabilizer that is nontrivial.
Extraction extract_sidon(const PlaneAction& a, std::uint32_t point, std::uint32_t line);
/// First point and first line with trivial stabilizers; nullopt if none.
std::optional<std::pair<std::uint32_t, std::uint32_t>> default_extraction_pair(const PlaneAction& a);

struct Recovery {
  Family family;
  std::string construction;
  bool group_matches = false;
  std::optional<Extraction> extraction;
  bool equivalent = false;
  std::vector<Elem> automorphism_images;
  Elem translation = 0;
  bool exhaustive = true;
};

/// Families (i)-(v) matched against singer, bose, hughes, spence, erdos_turan.
/// Family (v) is skipped in characteristic 2.
std::vector<Recovery> recover_constructions(const FiniteField& f, PlaneLimits limits = {});

}  // namespace sidon
