#include <algorithm>
#include <numeric>

#include "sidon/dense.hpp"

namespace sidon {

std::string to_string(DenseName n) {
  switch (n) {
    case DenseName::erdos_turan: return "erdos_turan";
    case DenseName::singer: return "singer";
    case DenseName::bose: return "bose";
    case DenseName::spence: return "spence";
    case DenseName::hughes: return "hughes";
  }
  return "unknown";
}

std::optional<DenseName> parse_dense_name(const std::string& s) {
  for (auto n : {DenseName::erdos_turan, DenseName::singer, DenseName::bose, DenseName::spence, DenseName::hughes})
    if (to_string(n) == s) return n;
  return std::nullopt;
}

namespace {

std::string generator_note(const FiniteField& f) {
  std::string s = "GF(" + std::to_string(f.characteristic()) + "^" + std::to_string(f.degree()) + ") modulus [";
  for (std::size_t i = 0; i < f.modulus().size(); ++i) s += (i ? "," : "") + std::to_string(f.modulus()[i]);
  s += "], generator code " + std::to_string(f.generator().code);
  return s;
}

// Sorts set and field_points together by group element.
void finish(DenseConstruction& c, std::vector<std::pair<Elem, std::vector<std::uint32_t>>> items) {
  std::sort(items.begin(), items.end());
  for (auto& [e, pts] : items) {
    c.set.push_back(e);
    c.field_points.push_back(std::move(pts));
  }
  c.degenerate = c.set.size() <= 1;
}

}  // namespace

DenseConstruction construct_dense(DenseName name, const FiniteField& f, FieldLimits limits) {
  const std::uint64_t p = f.characteristic(), d = f.degree(), q = f.order();
  DenseConstruction c;
  c.name = name;
  c.q = q;
  std::vector<std::pair<Elem, std::vector<std::uint32_t>>> items;

  switch (name) {
    case DenseName::erdos_turan: {
      if (p == 2) throw PreconditionError("erdos_turan requires odd characteristic");
      c.source_orders.assign(2 * d, p);
      const CyclicProductIso iso(c.source_orders);
      for (std::uint32_t x = 0; x < q; ++x) {
        const Fq y = f.mul(Fq{x}, Fq{x});
        auto coords = f.coeffs(Fq{x});
        for (auto v : f.coeffs(y)) coords.push_back(v);
        items.push_back({iso.forward(std::vector<std::uint64_t>(coords.begin(), coords.end())), {x, y.code}});
      }
      c.group = iso.target();
      c.iso_note = "K^2 as (Z/p)^(2d): coefficient vectors of x then x^2";
      c.expected_group_order = q * q;
      c.expected_size = q;
      break;
    }
    case DenseName::singer: {
      if (q * q * q > limits.max_order) throw PreconditionError("singer: q^3 exceeds the field cap");
      const auto l = FiniteField::create(p, 3 * d, std::nullopt, limits);
      const std::uint64_t n = q * q + q + 1;
      c.source_orders = {n};
      std::vector<char> seen(n, 0);
      for (std::uint32_t x = 1; x < l.order(); ++x) {
        if (l.trace(Fq{x}, d) != l.zero()) continue;
        const Elem e = l.table_log(Fq{x}) % n;
        if (seen[e]) continue;
        seen[e] = 1;
        items.push_back({e, {x}});
      }
      c.group = AbelianGroup::cyclic(n);
      c.iso_note = "L^x/K^x as Z/(q^2+q+1) via discrete log in " + generator_note(l) +
                   "; H = trace-zero plane; field point = least representative";
      c.expected_group_order = n;
      c.expected_size = q + 1;
      break;
    }
    case DenseName::bose: {
      if (q * q > limits.max_order) throw PreconditionError("bose: q^2 exceeds the field cap");
      const auto l = FiniteField::create(p, 2 * d, std::nullopt, limits);
      const std::uint64_t n = q * q - 1;
      c.source_orders = {n};
      for (std::uint32_t k = 0; k < l.order(); ++k) {
        if (!l.in_subfield(Fq{k}, d)) continue;
        const Fq x = l.add(l.theta(), Fq{k});
        items.push_back({l.table_log(x), {x.code}});
      }
      c.group = AbelianGroup::cyclic(n);
      c.iso_note = "L^x as Z/(q^2-1) via discrete log in " + generator_note(l) + "; S = theta + K";
      c.expected_group_order = n;
      c.expected_size = q;
      break;
    }
    case DenseName::spence: {
      c.source_orders.push_back(q - 1);
      for (std::uint64_t i = 0; i < d; ++i) c.source_orders.push_back(p);
      const CyclicProductIso iso(c.source_orders);
      for (std::uint32_t x = 1; x < q; ++x) {
        std::vector<std::uint64_t> coords{f.table_log(Fq{x})};
        for (auto v : f.coeffs(Fq{x})) coords.push_back(v);
        items.push_back({iso.forward(coords), {x, x}});
      }
      c.group = iso.target();
      c.iso_note = "K^x x K as Z/(q-1) x (Z/p)^d: discrete log in " + generator_note(f) + ", then coefficients";
      c.expected_group_order = q * (q - 1);
      c.expected_size = q - 1;
      break;
    }
    case DenseName::hughes: {
      c.source_orders = {q - 1, q - 1};
      const CyclicProductIso iso(c.source_orders);
      for (std::uint32_t x = 2; x < q; ++x) {
        const Fq y = f.sub(f.one(), Fq{x});
        if (y == f.zero()) continue;
        const std::vector<std::uint64_t> coords{f.table_log(Fq{x}), f.table_log(y)};
        items.push_back({iso.forward(coords), {x, y.code}});
      }
      c.group = iso.target();
      c.iso_note = "K^x x K^x as (Z/(q-1))^2 via discrete log in " + generator_note(f);
      c.expected_group_order = (q - 1) * (q - 1);
      c.expected_size = q - 2;
      break;
    }
  }
  finish(c, std::move(items));
  return c;
}

}  // namespace sidon
