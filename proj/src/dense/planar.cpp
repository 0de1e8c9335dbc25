#include <algorithm>

#include "sidon/dense.hpp"
#include "sidon/numtheory.hpp"

namespace sidon {

std::vector<Fq> PlanarCandidate::table() const {
  const auto& f = field;
  std::vector<Fq> out(f.order());
  if (const auto* m = std::get_if<Monomial>(&form)) {
    for (std::uint32_t x = 0; x < f.order(); ++x) out[x] = f.pow(Fq{x}, m->exponent);
  } else if (const auto* qf = std::get_if<QuadraticForm>(&form)) {
    const unsigned d = f.degree();
    if (qf->a.size() != d) throw PreconditionError("quadratic form matrix must be d x d");
    for (std::uint32_t x = 0; x < f.order(); ++x) {
      std::vector<Fq> frob(d);
      frob[0] = Fq{x};
      for (unsigned i = 1; i < d; ++i) frob[i] = f.frobenius(frob[i - 1]);
      Fq acc = f.zero();
      for (unsigned i = 0; i < d; ++i) {
        if (qf->a[i].size() != d) throw PreconditionError("quadratic form matrix must be d x d");
        for (unsigned j = 0; j < d; ++j)
          if (qf->a[i][j] != f.zero()) acc = f.add(acc, f.mul(qf->a[i][j], f.mul(frob[i], frob[j])));
      }
      out[x] = acc;
    }
  } else {
    const auto& t = std::get<FunctionTable>(form).values;
    if (t.size() != f.order()) throw PreconditionError("function table must have one value per field element");
    for (auto v : t)
      if (v.code >= f.order()) throw PreconditionError("function table value outside the field");
    out = t;
  }
  return out;
}

PlanarCandidate dembowski_ostrom_monomial(const FiniteField& f, unsigned alpha) {
  return {f, Monomial{nt::ipow(f.characteristic(), alpha) + 1}};
}

PlanarCandidate coulter_matthews(const FiniteField& f, unsigned alpha) {
  if (f.characteristic() != 3) throw PreconditionError("coulter_matthews: characteristic must be 3");
  if (nt::gcd(alpha, 2 * f.degree()) != 1) throw PreconditionError("coulter_matthews: requires gcd(alpha, 2d) = 1");
  return {f, Monomial{(nt::ipow(3, alpha) + 1) / 2}};
}

namespace {

bool difference_map_bijective(const FiniteField& f, const std::vector<Fq>& phi, std::uint32_t h,
                              std::vector<char>& hit) {
  std::fill(hit.begin(), hit.end(), 0);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    const Fq v = f.sub(phi[f.add(Fq{x}, Fq{h}).code], phi[x]);
    if (hit[v.code]) return false;
    hit[v.code] = 1;
  }
  return true;
}

}  // namespace

PlanarCheck is_planar_serial(const PlanarCandidate& c) {
  const auto phi = c.table();
  std::vector<char> hit(c.field.order());
  PlanarCheck out;
  for (std::uint32_t h = 1; h < c.field.order(); ++h)
    if (!difference_map_bijective(c.field, phi, h, hit)) {
      out.planar = false;
      out.witness = Fq{h};
      break;
    }
  return out;
}

PlanarCheck is_planar(const PlanarCandidate& c) {
  const auto phi = c.table();
  const std::int64_t q = c.field.order();
  std::int64_t first_bad = q;
#pragma omp parallel
  {
    std::vector<char> hit(q);
#pragma omp for schedule(dynamic, 4) reduction(min : first_bad)
    for (std::int64_t h = 1; h < q; ++h) {
      if (h > first_bad) continue;
      if (!difference_map_bijective(c.field, phi, std::uint32_t(h), hit)) first_bad = std::min(first_bad, h);
    }
  }
  PlanarCheck out;
  if (first_bad < q) {
    out.planar = false;
    out.witness = Fq{std::uint32_t(first_bad)};
  }
  return out;
}

PlanarGraph planar_graph(const PlanarCandidate& c) {
  if (!is_planar(c).planar) throw PreconditionError("planar_graph: candidate is not planar");
  const auto& f = c.field;
  const auto phi = c.table();
  const std::vector<std::uint64_t> orders(2 * f.degree(), f.characteristic());
  PlanarGraph out{AbelianGroup::from_cyclic_orders(orders), {}};
  const CyclicProductIso iso(orders);
  for (std::uint32_t x = 0; x < f.order(); ++x) {
    std::vector<std::uint64_t> coords;
    for (auto v : f.coeffs(Fq{x})) coords.push_back(v);
    for (auto v : f.coeffs(phi[x])) coords.push_back(v);
    out.set.push_back(iso.forward(coords));
  }
  out.set = normalized(std::move(out.set));
  return out;
}

Polarization polarization_symbolic(const PlanarCandidate& c) {
  const auto* qf = std::get_if<QuadraticForm>(&c.form);
  if (!qf) throw PreconditionError("symbolic polarization needs a generalized quadratic form");
  const auto& f = c.field;
  const unsigned d = f.degree();
  const std::uint32_t q = f.order();
  std::vector<std::vector<Fq>> frob(q, std::vector<Fq>(d));
  for (std::uint32_t x = 0; x < q; ++x) {
    frob[x][0] = Fq{x};
    for (unsigned i = 1; i < d; ++i) frob[x][i] = f.frobenius(frob[x][i - 1]);
  }
  Polarization beta{q, std::vector<Fq>(std::size_t(q) * q)};
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y) {
      Fq acc = f.zero();
      for (unsigned i = 0; i < d; ++i)
        for (unsigned j = 0; j < d; ++j) {
          if (qf->a.at(i).at(j) == f.zero()) continue;
          const Fq t = f.add(f.mul(frob[x][i], frob[y][j]), f.mul(frob[y][i], frob[x][j]));
          acc = f.add(acc, f.mul(qf->a[i][j], t));
        }
      beta.values[std::size_t(x) * q + y] = acc;
    }
  return beta;
}

Polarization polarization_numeric(const PlanarCandidate& c) {
  const auto& f = c.field;
  const auto phi = c.table();
  const std::uint32_t q = f.order();
  Polarization beta{q, std::vector<Fq>(std::size_t(q) * q)};
  for (std::uint32_t x = 0; x < q; ++x)
    for (std::uint32_t y = 0; y < q; ++y)
      beta.values[std::size_t(x) * q + y] = f.sub(f.sub(phi[f.add(Fq{x}, Fq{y}).code], phi[x]), phi[y]);
  return beta;
}

bool is_nondegenerate(const Polarization& beta) {
  for (std::uint32_t x = 1; x < beta.q; ++x)
    for (std::uint32_t y = 1; y < beta.q; ++y)
      if (beta.values[std::size_t(x) * beta.q + y].code == 0) return false;
  return true;
}

}  // namespace sidon
