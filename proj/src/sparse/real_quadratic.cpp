#include <boost/multiprecision/cpp_int.hpp>
#include <map>

#include "precision.hpp"
#include "sidon/numtheory.hpp"
#include "sidon/sidon.hpp"
#include "sidon/sparse.hpp"

namespace sidon {

namespace {

using boost::multiprecision::cpp_int;
using detail::HP;

// Continued fraction of sqrt(D) over one period. Step k (1-based) yields
// P_k, Q_k and the convergent p_{k-1} + q_{k-1} sqrt(D) of norm (-1)^k Q_k,
// whose logarithm is the running sum of log((P_i + sqrt(D)) / Q_{i-1}).
struct Expansion {
  std::uint64_t period = 0;
  cpp_int unit_a, unit_b;
  HP regulator;
  std::map<std::uint64_t, std::pair<std::uint64_t, HP>> first_hit;  // Q_k -> (k, log theta_k)
  std::map<std::uint64_t, std::pair<cpp_int, cpp_int>> hit_convergent;
};

Expansion expand(std::uint64_t d, const std::vector<std::uint64_t>& wanted) {
  const std::uint64_t a0 = nt::isqrt(d);
  const HP root = boost::multiprecision::sqrt(HP(d));
  Expansion e;
  std::int64_t p_prev = 0, q_prev = 1;  // P_{k-1}, Q_{k-1}
  std::uint64_t a = a0;
  cpp_int pm2 = 1, pm1 = a0, qm2 = 0, qm1 = 1;  // p_{k-2}, p_{k-1}, q_{k-2}, q_{k-1}
  HP log_theta = 0;
  for (std::uint64_t k = 1;; ++k) {
    const auto pk = static_cast<std::int64_t>(a) * q_prev - p_prev;
    const auto qk = (static_cast<std::int64_t>(d) - pk * pk) / q_prev;
    log_theta += boost::multiprecision::log((HP(pk) + root) / HP(q_prev));
    const auto uq = static_cast<std::uint64_t>(qk);
    if (std::find(wanted.begin(), wanted.end(), uq) != wanted.end() && !e.first_hit.count(uq)) {
      e.first_hit[uq] = {k, log_theta};
      e.hit_convergent[uq] = {pm1, qm1};
    }
    if (qk == 1) {
      e.period = k;
      e.unit_a = pm1;
      e.unit_b = qm1;
      e.regulator = log_theta;
      return e;
    }
    a = (a0 + static_cast<std::uint64_t>(pk)) / uq;
    cpp_int pn = a * pm1 + pm2, qn = a * qm1 + qm2;
    pm2 = std::move(pm1);
    pm1 = std::move(pn);
    qm2 = std::move(qm1);
    qm1 = std::move(qn);
    p_prev = pk;
    q_prev = qk;
  }
}

RealQuadraticUnit unit_from(const Expansion& e, std::uint64_t d) {
  RealQuadraticUnit u;
  u.a = e.unit_a.str();
  u.b = e.unit_b.str();
  const cpp_int n = e.unit_a * e.unit_a - cpp_int(d) * e.unit_b * e.unit_b;
  u.norm = n == 1 ? 1 : (n == -1 ? -1 : 0);
  if (u.norm == 0) throw std::logic_error("continued fraction produced a non-unit");
  u.period = e.period;
  u.regulator = e.regulator.str(30);
  u.regulator_approx = static_cast<double>(e.regulator);
  return u;
}

}  // namespace

RealQuadraticUnit fundamental_unit(std::uint64_t d) {
  if (d < 2) throw PreconditionError("D must be at least 2");
  const std::uint64_t a0 = nt::isqrt(d);
  if (a0 * a0 == d) throw PreconditionError("D is a perfect square");
  return unit_from(expand(d, {}), d);
}

RealQuadratic real_quadratic(std::uint64_t d, bool asserted_class_number_one) {
  if (d < 2 || !nt::is_squarefree(d)) throw PreconditionError("D must be a squarefree integer >= 2");
  RealQuadratic out;
  out.d = d;
  out.class_number_one_asserted = asserted_class_number_one;
  const std::int64_t disc = d % 4 == 1 ? static_cast<std::int64_t>(d) : 4 * static_cast<std::int64_t>(d);
  std::vector<std::uint64_t> split;
  for (std::uint64_t p = 2; 10000 * p * p * p * p <= d; ++p)
    if (nt::is_prime(p) && nt::kronecker(disc, p) == 1) split.push_back(p);

  const auto e = expand(d, split);
  out.unit = unit_from(e, d);
  const HP r = e.regulator;
  out.modulus = static_cast<std::uint64_t>(boost::multiprecision::ceil(r));
  const HP scale = HP(out.modulus) / r;
  const auto m = static_cast<std::int64_t>(out.modulus);
  for (auto p : split) {
    auto it = e.first_hit.find(p);
    if (it == e.first_hit.end()) {
      out.skipped.push_back(p);
      continue;
    }
    const auto [k, log_theta] = it->second;
    const auto& [a, b] = e.hit_convergent.at(p);
    RealQuadraticPrime rp;
    rp.p = p;
    rp.a = a.str();
    rp.b = b.str();
    rp.sign = k % 2 == 0 ? 1 : -1;
    const HP v = scale * (2 * log_theta - boost::multiprecision::log(HP(p)));
    const HP fl = boost::multiprecision::floor(v);
    rp.element = nt::mod(static_cast<std::int64_t>(fl), m);
    const HP frac = v - fl;
    rp.margin = static_cast<double>(frac < HP(0.5) ? frac : HP(1) - frac);
    out.min_margin = std::min(out.min_margin, rp.margin);
    out.set.push_back(rp.element);
    out.primes.push_back(std::move(rp));
  }
  std::sort(out.set.begin(), out.set.end());
  out.set.erase(std::unique(out.set.begin(), out.set.end()), out.set.end());
  ElemSet s;
  for (auto x : out.set) s.push_back(static_cast<Elem>(x));
  out.sidon = out.set.size() == out.primes.size() && is_sidon(AbelianGroup::cyclic(out.modulus), s).is_sidon;
  return out;
}

}  // namespace sidon

namespace sidon::detail {

SplitLogs split_logs(std::uint64_t d, const std::vector<std::uint64_t>& primes) {
  const std::uint64_t a0 = nt::isqrt(d);
  if (d < 2 || a0 * a0 == d) throw PreconditionError("D must be a non-square integer >= 2");
  const auto e = expand(d, primes);
  SplitLogs out;
  out.regulator = e.regulator;
  for (const auto& [p, hit] : e.first_hit) {
    out.log_ratio[p] = 2 * hit.second - boost::multiprecision::log(HP(p));
    const auto& [a, b] = e.hit_convergent.at(p);
    out.generator[p] = {a.str(), b.str()};
  }
  return out;
}

}  // namespace sidon::detail
