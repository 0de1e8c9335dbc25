#pragma once

// Sparse Sidon sets built from primes: logarithms, residues, Gaussian angles,
// class groups of imaginary quadratic fields, log-ratios in real quadratic
// fields, the rounded-homomorphism framework unifying them, cubic graphs and
// perturbation. Every output is verified exactly.

#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "sidon/field.hpp"
#include "sidon/group.hpp"

namespace sidon {

/// Sidon test for a set of integers: embeds into Z/(2(max-min)+1).
bool is_sidon_integers(const std::vector<std::int64_t>& s);

struct IntegerSidon {
  std::vector<std::int64_t> set;  // sorted
  bool sidon = false;
  std::uint64_t high_precision_recomputations = 0;  // values too close to a rounding boundary
};

/// {floor(3 X^2 log p) : p <= X prime}.
IntegerSidon log_primes(std::uint64_t x);

struct GroupSidon {
  AbelianGroup group;
  ElemSet set;
  std::vector<std::string> labels;   // one per prime used, in the order added
  std::vector<std::int64_t> values;  // concrete representative per label (residue, prime)
  bool sidon = false;
  std::string iso_note;
};

/// {p mod m : p <= sqrt(m) prime, gcd(p, m) = 1} in (Z/m)^x.
GroupSidon quotient_ring_primes(std::uint64_t m);

struct GaussianAngle {
  std::uint64_t p = 0;
  std::int64_t re = 0, im = 0;       // rho_p with 0 < im < re
  std::int64_t re4 = 0, im4 = 0;     // rho_p^4
  double phi = 0;                    // arg(rho_p^4) / 2 pi
  std::int64_t element = 0;          // floor(n phi)
};

/// One prime p = 1 (mod 4).
GaussianAngle gaussian_angle(std::uint64_t p, std::uint64_t n);

struct GaussianAngles {
  IntegerSidon integers;  // Sidon status as a subset of Z
  bool sidon_mod_n = false;
  std::vector<GaussianAngle> primes;
};

/// Primes p = 1 (mod 4) with 16 p^2 <= n.
GaussianAngles gaussian_angles(std::uint64_t n);

// ---------------------------------------------------------------------------

struct BinaryForm {
  std::int64_t a, b, c;
  friend bool operator==(const BinaryForm&, const BinaryForm&) = default;
  friend auto operator<=>(const BinaryForm&, const BinaryForm&) = default;
};

struct BinaryFormHash {
  std::size_t operator()(const BinaryForm& f) const noexcept {
    return std::hash<std::int64_t>()(f.a * 1000003 + f.b * 1009 + f.c);
  }
};

BinaryForm reduce_form(BinaryForm f);
/// Composition of primitive positive definite forms of equal discriminant, reduced.
BinaryForm compose_forms(const BinaryForm& f, const BinaryForm& g);

class QuadraticClassGroup {
 public:
  /// Negative discriminant (= 0 or 1 mod 4).
  explicit QuadraticClassGroup(std::int64_t discriminant);

  std::int64_t discriminant() const { return disc_; }
  const std::vector<BinaryForm>& reduced_forms() const { return forms_; }
  const AbelianGroup& group() const { return group_; }
  BinaryForm identity() const;
  /// Class of a primitive form of this discriminant.
  Elem index(const BinaryForm& f) const;
  const BinaryForm& form(Elem x) const { return by_index_[x]; }
  std::string iso_note() const;

 private:
  std::int64_t disc_;
  std::vector<BinaryForm> forms_;     // sorted
  std::vector<BinaryForm> by_index_;  // invariant-factor index -> form
  std::map<BinaryForm, Elem> index_;
  AbelianGroup group_;
  std::vector<BinaryForm> generators_;
};

/// -D if D = 3 (mod 4), else -4D.
std::int64_t fundamental_discriminant_imaginary(std::uint64_t d);

/// Prime form (p, b, c) of discriminant disc with 0 <= b <= p; nullopt unless p splits.
std::optional<BinaryForm> prime_form(std::int64_t disc, std::uint64_t p);

struct ClassGroupPrimes {
  QuadraticClassGroup cl;
  GroupSidon result;
  std::vector<std::uint64_t> split_primes;  // candidates considered, ascending
  std::vector<std::pair<std::uint64_t, std::string>> discarded;  // prime, reason
  bool injective = true;  // distinct primes gave distinct classes
};

/// Split primes p with 16 p^4 < D; greedy selection in ascending p.
ClassGroupPrimes class_group_primes(std::uint64_t d);

// ---------------------------------------------------------------------------

struct RealQuadraticUnit {
  std::string a, b;  // u = a + b sqrt(D), decimal
  int norm = 0;      // a^2 - D b^2
  std::uint64_t period = 0;
  std::string regulator;  // log u, decimal with ~30 significant digits
  double regulator_approx = 0;
};

/// Fundamental unit of Z[sqrt(D)] from the continued fraction of sqrt(D).
RealQuadraticUnit fundamental_unit(std::uint64_t d);

struct RealQuadraticPrime {
  std::uint64_t p = 0;
  std::string a, b;  // a^2 - D b^2 = +-p
  int sign = 0;
  std::int64_t element = 0;
  double margin = 0;  // distance of the unrounded value to the nearest integer
};

struct RealQuadratic {
  std::uint64_t d = 0;
  RealQuadraticUnit unit;
  std::uint64_t modulus = 0;  // M = ceil(r)
  std::vector<RealQuadraticPrime> primes;
  std::vector<std::uint64_t> skipped;  // split primes with no element of norm +-p in Z[sqrt(D)]
  std::vector<std::int64_t> set;       // sorted residues mod M
  bool sidon = false;
  double min_margin = 1;
  bool class_number_one_asserted = false;
};

/// Split primes p with 10^4 p^4 <= D.
RealQuadratic real_quadratic(std::uint64_t d, bool asserted_class_number_one = false);

// ---------------------------------------------------------------------------

enum class NumberField { rationals, gaussian, imaginary_quadratic, real_quadratic };
enum class ComponentKind { log_norm, residue, arg4, class_group, log_ratio };
enum class Rounding { floor, nearest };

struct FrameworkComponent {
  ComponentKind kind;
  // log_norm: lattice step 1/scale with scale = scale_num/scale_den.
  std::uint64_t scale_num = 1, scale_den = 1;
  // residue: m; arg4: n (step 1/n on R/Z); log_ratio: M (0 means ceil(r)).
  std::uint64_t modulus = 0;
};

struct FrameworkSpec {
  NumberField field = NumberField::rationals;
  std::uint64_t d = 0;          // for quadratic fields
  std::uint64_t conductor = 1;  // prime ideals with norm coprime to this
  double bound = 2;             // R: norm cap
  std::vector<FrameworkComponent> components;
  Rounding rounding = Rounding::floor;
  std::uint64_t max_primes = 3000;
};

struct FrameworkIdeal {
  std::string label;
  std::uint64_t norm = 0;
  bool kept = false;
  std::string reason;               // why discarded
  std::vector<std::int64_t> point;  // lattice coordinates per component
};

struct FrameworkResult {
  std::vector<FrameworkIdeal> ideals;
  bool check_i = false;
  bool check_ii = false;
  std::uint64_t ties = 0;
  std::uint64_t high_precision_recomputations = 0;
  std::uint64_t log_ratio_modulus = 0;  // M actually used by a log_ratio component
  std::vector<std::vector<std::int64_t>> points;  // kept lattice points, in ideal order
  bool sidon = false;  // kept points have distinct pairwise sums in the lattice
  // Finite group containing the lattice points (real coordinates folded into
  // Z/(2 range + 1)); built when its order is at most 2^26.
  bool group_verified = false;
  AbelianGroup group;
  ElemSet set;
};

FrameworkResult framework_build(const FrameworkSpec& spec);

// ---------------------------------------------------------------------------

struct CubicGraph {
  AbelianGroup group;  // F^2 as (Z/p)^(2d): coeffs(x) then coeffs(x^3)
  ElemSet set;
  bool sidon = false;
};

/// Unordered pairs {x, y} in U with x + y = 0 ({0, 0} included when 0 is in U).
std::vector<std::pair<Fq, Fq>> cubic_zero_sum_pairs(const FiniteField& f, const std::vector<Fq>& u);
/// Requires characteristic > 3 and at most one zero-sum pair.
CubicGraph cubic_graph(const FiniteField& f, const std::vector<Fq>& u);
/// A largest admissible U: 0 and the smaller code of each pair {x, -x}; size (q+1)/2.
std::vector<Fq> cubic_max_subset(const FiniteField& f);

/// {5s + eps(s)}; eps values in {-1, 0, 1}.
IntegerSidon perturb(const std::vector<std::int64_t>& s, const std::vector<int>& eps);

}  // namespace sidon
