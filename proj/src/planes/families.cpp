#include <deque>
#include <sstream>
#include <stdexcept>

#include "sidon/numtheory.hpp"
#include "sidon/planes.hpp"
#include "sidon/presentation.hpp"

namespace sidon {

std::string to_string(Family f) {
  static const char* names[] = {"i", "ii", "iii", "iv", "v", "vi", "vii", "viii", "ix"};
  return names[static_cast<int>(f)];
}

std::optional<Family> parse_family(const std::string& s) {
  for (int i = 0; i < 9; ++i)
    if (to_string(Family(i)) == s) return Family(i);
  return std::nullopt;
}

std::uint64_t expected_family_order(Family fam, std::uint64_t q) {
  switch (fam) {
    case Family::i: return q * q + q + 1;
    case Family::ii: return q * q - 1;
    case Family::iii: return (q - 1) * (q - 1);
    case Family::iv: return q * (q - 1);
    case Family::v:
    case Family::vi:
    case Family::vii: return q * q;
    case Family::viii:
    case Family::ix: return 9;
  }
  return 0;
}

std::size_t Mat3Hash::operator()(const Mat3& m) const noexcept {
  std::size_t h = 0;
  for (const Fq c : m) h = h * 1000003u ^ c.code;
  return h;
}

Elem PlaneAction::element_index(const Mat3& m) const {
  auto it = index_of.find(normalize_matrix(plane->field(), m));
  if (it == index_of.end()) throw std::out_of_range("matrix is not in the subgroup");
  return it->second;
}

namespace {

// K as a subfield of an extension L (over the same prime), with coordinates
// of L-elements in the K-basis 1, theta, ..., theta^(k-1) of L.
struct Extension {
  FiniteField l;
  unsigned k = 0;                          // [L : K]
  std::vector<Fq> embed;                   // K code -> L element
  std::vector<std::vector<Fq>> coords;     // L code -> K coordinates

  Mat3 multiplication_matrix(const FiniteField& kf, Fq x) const {
    return linear_matrix(kf, [&](Fq b) { return l.mul(x, b); });
  }
  template <class F>
  Mat3 linear_matrix(const FiniteField& kf, F map) const {
    Mat3 m;
    m.fill(kf.zero());
    Fq basis = l.one();
    for (unsigned j = 0; j < k; ++j) {
      const auto& c = coords[map(basis).code];
      for (unsigned i = 0; i < k; ++i) m[3 * i + j] = c[i];
      basis = l.mul(basis, l.theta());
    }
    if (k == 2) m[8] = kf.one();
    return m;
  }
};

Extension make_extension(const FiniteField& kf, unsigned k, FieldLimits limits) {
  const std::uint32_t p = kf.characteristic();
  const unsigned d = kf.degree();
  Extension e{FiniteField::create(p, d * k, std::nullopt, limits), k, {}, {}};
  const auto& l = e.l;
  // Image of K's generator t: the smallest root of K's modulus in L.
  Fq root{0};
  bool found = false;
  for (std::uint32_t x = 0; x < l.order() && !found; ++x) {
    Fq acc = l.zero();
    for (std::size_t i = kf.modulus().size(); i-- > 0;) acc = l.add(l.mul(acc, Fq{x}), l.from_int(kf.modulus()[i]));
    if (acc == l.zero()) {
      root = Fq{x};
      found = true;
    }
  }
  if (!found) throw std::logic_error("no root of the base modulus in the extension");
  e.embed.resize(kf.order());
  for (std::uint32_t c = 0; c < kf.order(); ++c) {
    const auto cs = kf.coeffs(Fq{c});
    Fq acc = l.zero();
    for (std::size_t i = cs.size(); i-- > 0;) acc = l.add(l.mul(acc, root), l.from_int(cs[i]));
    e.embed[c] = acc;
  }
  std::vector<Fq> powers{l.one()};
  for (unsigned i = 1; i < k; ++i) powers.push_back(l.mul(powers.back(), l.theta()));
  e.coords.assign(l.order(), {});
  std::vector<std::uint32_t> digit(k, 0);
  for (std::uint64_t n = 0; n < l.order(); ++n) {
    Fq x = l.zero();
    std::vector<Fq> c(k);
    for (unsigned i = 0; i < k; ++i) {
      c[i] = Fq{digit[i]};
      x = l.add(x, l.mul(e.embed[digit[i]], powers[i]));
    }
    if (!e.coords[x.code].empty()) throw std::logic_error("powers of theta are not a K-basis");
    e.coords[x.code] = std::move(c);
    for (unsigned i = 0; i < k && ++digit[i] == kf.order(); ++i) digit[i] = 0;
  }
  return e;
}

Mat3 identity(const FiniteField& f) {
  Mat3 m;
  m.fill(f.zero());
  m[0] = m[4] = m[8] = f.one();
  return m;
}

// Additive basis of K over the prime field.
std::vector<Fq> additive_basis(const FiniteField& f) {
  std::vector<Fq> out;
  for (unsigned i = 0; i < f.degree(); ++i) {
    std::vector<std::uint32_t> c(f.degree(), 0);
    c[i] = 1;
    out.push_back(f.from_coeffs(c));
  }
  return out;
}

std::vector<Mat3> family_generators(const FiniteField& f, Family fam, std::string& note) {
  const std::uint64_t q = f.order();
  const Fq g = f.generator();
  const Fq zero = f.zero(), one = f.one();
  std::vector<Mat3> gens;
  auto m = [&](std::initializer_list<Fq> v) {
    Mat3 r;
    std::copy(v.begin(), v.end(), r.begin());
    return r;
  };
  switch (fam) {
    case Family::i: {
      const auto e = make_extension(f, 3, {});
      gens.push_back(e.multiplication_matrix(f, e.l.generator()));
      note = "multiplication by a generator of GF(q^3) in the K-basis 1, theta, theta^2";
      break;
    }
    case Family::ii: {
      const auto e = make_extension(f, 2, {});
      gens.push_back(e.multiplication_matrix(f, e.l.generator()));
      note = "multiplication by a generator of GF(q^2) on the K-basis 1, theta, fixing the third coordinate";
      break;
    }
    case Family::iii:
      gens.push_back(m({g, zero, zero, zero, one, zero, zero, zero, one}));
      gens.push_back(m({one, zero, zero, zero, g, zero, zero, zero, one}));
      note = "diagonal matrices diag(x, y, 1)";
      break;
    case Family::iv:
      gens.push_back(m({g, zero, zero, zero, g, zero, zero, zero, one}));
      for (Fq a : additive_basis(f)) gens.push_back(m({one, a, zero, zero, one, zero, zero, zero, one}));
      note = "matrices [[r, a, 0], [0, r, 0], [0, 0, 1]]";
      break;
    case Family::v:
      for (Fq a : additive_basis(f)) gens.push_back(m({one, a, zero, zero, one, a, zero, zero, one}));
      for (Fq b : additive_basis(f)) gens.push_back(m({one, zero, b, zero, one, zero, zero, zero, one}));
      note = "matrices [[1, a, b], [0, 1, a], [0, 0, 1]]";
      break;
    case Family::vi:
      for (Fq a : additive_basis(f)) gens.push_back(m({one, zero, zero, zero, one, a, zero, zero, one}));
      for (Fq b : additive_basis(f)) gens.push_back(m({one, zero, b, zero, one, zero, zero, zero, one}));
      note = "matrices [[1, 0, b], [0, 1, a], [0, 0, 1]]";
      break;
    case Family::vii:
      for (Fq a : additive_basis(f)) gens.push_back(m({one, a, zero, zero, one, zero, zero, zero, one}));
      for (Fq b : additive_basis(f)) gens.push_back(m({one, zero, b, zero, one, zero, zero, zero, one}));
      note = "matrices [[1, a, b], [0, 1, 0], [0, 0, 1]]";
      break;
    case Family::viii: {
      if (q % 3 != 1) throw PreconditionError("family viii requires q = 1 mod 3");
      const Fq w = f.pow(g, (q - 1) / 3);
      gens.push_back(m({one, zero, zero, zero, w, zero, zero, zero, f.mul(w, w)}));
      gens.push_back(m({zero, zero, one, one, zero, zero, zero, one, zero}));
      note = "diag(1, w, w^2) with w a primitive cube root of unity, and the cyclic permutation matrix";
      break;
    }
    case Family::ix: {
      if (q % 3 != 1) throw PreconditionError("family ix requires q = 1 mod 3");
      const auto e = make_extension(f, 3, {});
      const Fq lambda = e.l.pow(e.l.generator(), (q * q + q + 1) / 3);
      gens.push_back(e.multiplication_matrix(f, lambda));
      gens.push_back(e.linear_matrix(f, [&](Fq x) { return e.l.pow(x, q); }));
      note = "multiplication by a cube root of a generator of K^x inside GF(q^3), and x -> x^q";
      break;
    }
  }
  for (auto& x : gens) x = normalize_matrix(f, x);
  return gens;
}

std::string matrix_string(const Mat3& m) {
  std::ostringstream os;
  os << "[";
  for (int i = 0; i < 3; ++i) {
    os << (i ? ",[" : "[");
    for (int j = 0; j < 3; ++j) os << (j ? "," : "") << m[3 * i + j].code;
    os << "]";
  }
  os << "]";
  return os.str();
}

}  // namespace

PlaneAction family_build(const FiniteField& f, Family fam, PlaneLimits limits) {
  PlaneAction a;
  a.family = fam;
  a.plane = ProjectivePlane::build(f, limits);
  std::string note;
  const auto gens = family_generators(f, fam, note);

  const Mat3 id = identity(f);
  auto mul = [&](const Mat3& x, const Mat3& y) { return normalize_matrix(f, mat_mul(f, x, y)); };
  std::vector<Mat3> elements{id};
  std::unordered_map<Mat3, char, Mat3Hash> seen{{id, 1}};
  for (std::size_t i = 0; i < elements.size(); ++i)
    for (const auto& g : gens) {
      Mat3 y = mul(elements[i], g);
      if (seen.emplace(y, 1).second) elements.push_back(y);
    }
  for (const auto& x : gens)
    for (const auto& y : gens)
      if (mul(x, y) != mul(y, x)) throw std::logic_error("family generators do not commute");

  auto pres = present_abelian<Mat3, Mat3Hash>(elements, id, mul);
  a.group = pres.group;
  a.generators = pres.generators;
  a.elements = std::move(pres.element_at);
  a.index_of = std::move(pres.index_of);

  std::ostringstream os;
  os << note << "; invariant-factor generators:";
  for (const auto& g : a.generators) os << " " << matrix_string(g);
  a.iso_note = os.str();

  const auto& pts = a.plane->points();
  const auto& lns = a.plane->lines();
  a.point_perm.assign(a.elements.size(), std::vector<std::uint32_t>(pts.size()));
  a.line_perm.assign(a.elements.size(), std::vector<std::uint32_t>(lns.size()));
#pragma omp parallel for schedule(dynamic, 8)
  for (std::size_t k = 0; k < a.elements.size(); ++k) {
    const Mat3& m = a.elements[k];
    const Mat3 inv = mat_inverse(f, m);
    for (std::size_t p = 0; p < pts.size(); ++p) a.point_perm[k][p] = a.plane->point_index(mat_apply(f, m, pts[p]));
    for (std::size_t l = 0; l < lns.size(); ++l) a.line_perm[k][l] = a.plane->line_index(mat_apply_row(f, lns[l], inv));
  }
  return a;
}

void verify_action(const PlaneAction& a, bool exhaustive) {
  const auto& s = a.plane->structure();
  const std::size_t n = a.elements.size();
  for (std::uint32_t p = 0; p < s.num_points(); ++p)
    if (a.point_perm[0][p] != p) throw std::logic_error("identity moves a point");
  for (std::uint32_t l = 0; l < s.num_lines(); ++l)
    if (a.line_perm[0][l] != l) throw std::logic_error("identity moves a line");
  std::vector<Elem> partners;
  if (exhaustive) {
    for (Elem h = 0; h < n; ++h) partners.push_back(h);
  } else {
    for (std::size_t i = 0; i < a.group.rank(); ++i) {
      std::vector<std::uint64_t> e(a.group.rank(), 0);
      e[i] = 1;
      partners.push_back(a.group.encode(e));
    }
  }
  for (Elem g = 0; g < n; ++g) {
    for (Elem h : partners) {
      const Elem gh = a.group.add(g, h);
      for (std::uint32_t p = 0; p < s.num_points(); ++p)
        if (a.point_perm[gh][p] != a.point_perm[g][a.point_perm[h][p]])
          throw std::logic_error("point action is not a homomorphism");
      for (std::uint32_t l = 0; l < s.num_lines(); ++l)
        if (a.line_perm[gh][l] != a.line_perm[g][a.line_perm[h][l]])
          throw std::logic_error("line action is not a homomorphism");
    }
    for (auto [p, l] : s.incidences())
      if (!s.incident(a.point_perm[g][p], a.line_perm[g][l])) throw std::logic_error("incidence not preserved");
  }
}

}  // namespace sidon
