#pragma once

// Dense Sidon sets from finite fields: the five classical constructions and
// graphs of planar functions.

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "sidon/field.hpp"
#include "sidon/group.hpp"

namespace sidon {

enum class DenseName { erdos_turan, singer, bose, spence, hughes };
std::string to_string(DenseName n);
std::optional<DenseName> parse_dense_name(const std::string& s);

struct DenseConstruction {
  DenseName name;
  std::uint64_t q = 0;
  AbelianGroup group;
  ElemSet set;
  /// For each element of set (same order): the field-element codes it came from.
  /// Pairs for erdos_turan (x, x^2), spence (x, x), hughes (x, 1-x); one code
  /// (a representative) for singer and bose.
  std::vector<std::vector<std::uint32_t>> field_points;
  /// Cyclic orders before the invariant-factor normalization, and the field
  /// generator used for discrete logarithms.
  std::vector<std::uint64_t> source_orders;
  std::string iso_note;
  std::uint64_t expected_group_order = 0;
  std::uint64_t expected_size = 0;
  bool degenerate = false;  // |S| <= 1
};

/// F is the base field K. singer and bose build GF(q^3) and GF(q^2) internally.
DenseConstruction construct_dense(DenseName name, const FiniteField& f, FieldLimits limits = {});

// ---------------------------------------------------------------------------

struct Monomial {
  std::uint64_t exponent;
};
/// phi(x) = sum_{i,j} a[i][j] x^(p^i + p^j), indices in [0, d).
struct QuadraticForm {
  std::vector<std::vector<Fq>> a;
};
struct FunctionTable {
  std::vector<Fq> values;  // indexed by element code
};

struct PlanarCandidate {
  FiniteField field;
  std::variant<Monomial, QuadraticForm, FunctionTable> form;

  std::vector<Fq> table() const;
};

/// x^(p^alpha + 1).
PlanarCandidate dembowski_ostrom_monomial(const FiniteField& f, unsigned alpha);
/// x^((3^alpha + 1)/2) over a field of characteristic 3; requires gcd(alpha, 2d) = 1.
PlanarCandidate coulter_matthews(const FiniteField& f, unsigned alpha);

struct PlanarCheck {
  bool planar = true;
  std::optional<Fq> witness;  // smallest h whose difference map is not bijective
};

/// Exhaustive over h != 0; parallel over h.
PlanarCheck is_planar(const PlanarCandidate& c);
/// Single-threaded reference.
PlanarCheck is_planar_serial(const PlanarCandidate& c);

struct PlanarGraph {
  AbelianGroup group;  // F_q^2 = (Z/p)^(2d); coordinates are coeffs(x) then coeffs(phi(x))
  ElemSet set;
};

PlanarGraph planar_graph(const PlanarCandidate& c);

/// beta(x, y) = phi(x + y) - phi(x) - phi(y) as a q x q table.
struct Polarization {
  std::uint32_t q = 0;
  std::vector<Fq> values;
  Fq at(Fq x, Fq y) const { return values[std::size_t(x.code) * q + y.code]; }
};

/// From the coefficients: beta(x, y) = sum a_ij (x^(p^i) y^(p^j) + y^(p^i) x^(p^j)).
Polarization polarization_symbolic(const PlanarCandidate& c);
Polarization polarization_numeric(const PlanarCandidate& c);
bool is_nondegenerate(const Polarization& beta);

}  // namespace sidon
