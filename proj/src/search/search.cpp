#include "sidon/search.hpp"

#include <algorithm>

#include "sidon/numtheory.hpp"
#include "sidon/sidon.hpp"

namespace sidon {

namespace {

// Group arithmetic with a difference table for small groups.
class Arith {
 public:
  explicit Arith(const AbelianGroup& g) : g_(g), n_(static_cast<Elem>(g.order())) {
    if (n_ <= kTableLimit) {
      sub_.resize(static_cast<std::size_t>(n_) * n_);
      for (Elem a = 0; a < n_; ++a)
        for (Elem b = 0; b < n_; ++b) sub_[static_cast<std::size_t>(a) * n_ + b] = g.sub(a, b);
    }
    neg_.resize(n_);
    for (Elem a = 0; a < n_; ++a) neg_[a] = g.neg(a);
  }
  Elem order() const { return n_; }
  Elem sub(Elem a, Elem b) const { return sub_.empty() ? g_.sub(a, b) : sub_[static_cast<std::size_t>(a) * n_ + b]; }
  Elem neg(Elem a) const { return neg_[a]; }

 private:
  static constexpr Elem kTableLimit = 1024;
  const AbelianGroup& g_;
  Elem n_;
  std::vector<Elem> sub_;
  std::vector<Elem> neg_;
};

// Depth-first search below the prefix {0, a}: every further element exceeds
// the previous one and every difference is at least a in index order.
class Branch {
 public:
  Branch(const Arith& ar, const AbelianGroup& g, std::size_t k, Elem a, std::uint64_t budget, std::size_t max_sets)
      : ar_(ar), g_(g), k_(k), a_(a), budget_(budget), max_sets_(max_sets), used_(ar.order(), 0) {}

  void run() {
    set_.push_back(0);
    if (k_ == 1) {
      emit();
      return;
    }
    if (!try_push(a_)) return;
    ++nodes_;
    dfs();
  }

  std::vector<ElemSet> found;
  std::uint64_t nodes_ = 0;
  bool truncated = false;

 private:
  bool stop() const { return truncated || found.size() >= max_sets_; }

  void dfs() {
    if (set_.size() == k_) {
      emit();
      return;
    }
    const Elem n = ar_.order();
    for (Elem x = set_.back() + 1; x < n && !stop(); ++x) {
      if (n - x < k_ - set_.size()) break;
      if (!try_push(x)) continue;
      if (++nodes_ > budget_) {
        truncated = true;
        pop();
        return;
      }
      dfs();
      pop();
    }
  }

  bool try_push(Elem x) {
    marked_.clear();
    for (Elem s : set_) {
      const Elem d1 = ar_.sub(x, s), d2 = ar_.sub(s, x);
      if (d1 < a_ || d2 < a_ || used_[d1] || used_[d2] || d1 == d2) {
        unmark();
        return false;
      }
      used_[d1] = used_[d2] = 1;
      marked_.push_back(d1);
      marked_.push_back(d2);
    }
    diffs_.push_back(marked_);
    set_.push_back(x);
    return true;
  }

  void unmark() {
    for (Elem d : marked_) used_[d] = 0;
    marked_.clear();
  }

  void pop() {
    for (Elem d : diffs_.back()) used_[d] = 0;
    diffs_.pop_back();
    set_.pop_back();
  }

  void emit() {
    ElemSet s = set_;
    if (canonical_form(g_, s) == s) found.push_back(std::move(s));
  }

  const Arith& ar_;
  const AbelianGroup& g_;
  std::size_t k_;
  Elem a_;
  std::uint64_t budget_;
  std::size_t max_sets_;
  std::vector<char> used_;
  ElemSet set_;
  std::vector<Elem> marked_;
  std::vector<std::vector<Elem>> diffs_;
};

Enumeration enumerate_impl(const AbelianGroup& g, const Arith& ar, std::size_t k, const SearchOptions& opt) {
  Enumeration out;
  if (k == 0) {
    out.sets.push_back({});
    return out;
  }
  if (k > counting_bound(g.order())) return out;
  std::vector<Elem> seconds;
  if (k == 1) {
    seconds.push_back(0);
  } else {
    for (Elem a = 1; a < ar.order(); ++a)
      if (a <= ar.neg(a)) seconds.push_back(a);
  }
  const std::uint64_t per_branch = std::max<std::uint64_t>(1, opt.node_budget / std::max<std::size_t>(1, seconds.size()));
  std::vector<Branch> branches;
  branches.reserve(seconds.size());
  for (Elem a : seconds) branches.emplace_back(ar, g, k, a, per_branch, opt.max_sets);
  const auto nb = static_cast<std::int64_t>(branches.size());
#pragma omp parallel for schedule(dynamic, 1) if (opt.parallel)
  for (std::int64_t i = 0; i < nb; ++i) branches[static_cast<std::size_t>(i)].run();
  for (auto& b : branches) {
    out.nodes_visited += b.nodes_;
    if (b.truncated) out.exhaustive = false;
    for (auto& s : b.found) out.sets.push_back(std::move(s));
  }
  std::sort(out.sets.begin(), out.sets.end());
  if (out.sets.size() >= opt.max_sets) {
    out.exhaustive = false;
    out.sets.resize(opt.max_sets);
  }
  return out;
}

}  // namespace

ElemSet canonical_form(const AbelianGroup& g, const ElemSet& s_in) {
  const ElemSet s = normalized(s_in);
  if (s.empty()) return s;
  ElemSet best, img(s.size());
  for (int sign = 0; sign < 2; ++sign) {
    ElemSet base = s;
    if (sign)
      for (auto& x : base) x = g.neg(x);
    for (Elem y : base) {
      for (std::size_t i = 0; i < base.size(); ++i) img[i] = g.sub(base[i], y);
      std::sort(img.begin(), img.end());
      if (best.empty() || img < best) best = img;
    }
  }
  return best;
}

Enumeration enumerate_sidon(const AbelianGroup& g, std::size_t k, SearchOptions options) {
  const Arith ar(g);
  return enumerate_impl(g, ar, k, options);
}

SearchResult max_sidon(const AbelianGroup& g, const SearchOptions& options) {
  const Arith ar(g);
  SearchResult res;
  std::uint64_t remaining = options.node_budget;
  for (std::size_t k = counting_bound(g.order()); k >= 1; --k) {
    SearchOptions level = options;
    level.node_budget = remaining;
    auto e = enumerate_impl(g, ar, k, level);
    res.nodes_visited += e.nodes_visited;
    remaining = remaining > e.nodes_visited ? remaining - e.nodes_visited : 1;
    // A size found under a truncated search is still attained; an empty
    // truncated level leaves larger sizes unresolved.
    if (!e.sets.empty()) {
      res.sigma = k;
      res.extremal_sets = std::move(e.sets);
      return res;
    }
    if (!e.exhaustive) res.exhaustive = false;
  }
  return res;
}

std::string to_string(Verdict v) {
  switch (v) {
    case Verdict::holds: return "holds";
    case Verdict::fails: return "fails";
    case Verdict::inconclusive: return "inconclusive";
  }
  return "?";
}

TSubgroupReport test_T_subgroup(std::uint64_t p, SearchOptions options) {
  if (!nt::is_prime(p)) throw PreconditionError("test_T_subgroup needs a prime p");
  if (p > 13) throw PreconditionError("test_T_subgroup supports p <= 13");
  TSubgroupReport rep;
  rep.p = p;
  const AbelianGroup g(std::vector<std::uint64_t>{p, p});
  auto e = enumerate_sidon(g, p, options);
  rep.nodes_visited = e.nodes_visited;
  rep.canonical_sets = e.sets.size();

  // GL2(p) as images of the two basis vectors.
  std::vector<std::array<Elem, 2>> gl;
  for (Elem u = 1; u < g.order(); ++u)
    for (Elem v = 1; v < g.order(); ++v) {
      const auto a = g.decode(u), b = g.decode(v);
      if ((a[0] * b[1] + p * p - (a[1] * b[0]) % p) % p != 0) gl.push_back({u, v});
    }
  auto affine_canonical = [&](const ElemSet& s) {
    ElemSet best;
    ElemSet img(s.size());
    for (const auto& m : gl) {
      for (std::size_t i = 0; i < s.size(); ++i) {
        const auto c = g.decode(s[i]);
        img[i] = g.add(g.mul(c[0], m[0]), g.mul(c[1], m[1]));
      }
      const auto t = canonical_form(g, img);
      if (best.empty() || t < best) best = t;
    }
    return best;
  };
  std::vector<ElemSet> classes;
  std::vector<std::size_t> sizes;
  for (const auto& s : e.sets) {
    if (!rep.counterexample && !is_subgroup(g, is_sidon(g, s).t_set)) rep.counterexample = s;
    const auto c = affine_canonical(s);
    auto it = std::lower_bound(classes.begin(), classes.end(), c);
    const auto pos = static_cast<std::size_t>(it - classes.begin());
    if (it == classes.end() || *it != c) {
      classes.insert(it, c);
      sizes.insert(sizes.begin() + static_cast<std::ptrdiff_t>(pos), 0);
    }
    ++sizes[pos];
  }
  rep.affine_classes = classes.size();
  rep.class_sizes = sizes;
  if (rep.counterexample)
    rep.verdict = Verdict::fails;
  else
    rep.verdict = e.exhaustive ? Verdict::holds : Verdict::inconclusive;
  return rep;
}

std::optional<Elem> find_completion(const AbelianGroup& g, const ElemSet& s_in) {
  const ElemSet s = normalized(s_in);
  if (!is_sidon(g, s).is_sidon) throw PreconditionError("set is not Sidon");
  std::vector<char> used(g.order(), 0), in(g.order(), 0);
  for (Elem x : s) in[x] = 1;
  for (Elem x : s)
    for (Elem y : s)
      if (x != y) used[g.sub(x, y)] = 1;
  std::vector<Elem> fresh;
  for (Elem x = 0; x < g.order(); ++x) {
    if (in[x]) continue;
    bool ok = true;
    fresh.clear();
    for (Elem y : s) {
      const Elem d1 = g.sub(x, y), d2 = g.sub(y, x);
      if (used[d1] || used[d2] || d1 == d2 || std::find(fresh.begin(), fresh.end(), d1) != fresh.end() ||
          std::find(fresh.begin(), fresh.end(), d2) != fresh.end()) {
        ok = false;
        break;
      }
      fresh.push_back(d1);
      fresh.push_back(d2);
    }
    if (ok) return x;
  }
  return std::nullopt;
}

ExtendableReport test_extendable(std::uint64_t p, SearchOptions options) {
  if (!nt::is_prime(p)) throw PreconditionError("test_extendable needs a prime p");
  if (p > 31) throw PreconditionError("test_extendable supports p <= 31");
  ExtendableReport rep;
  rep.p = p;
  const auto g = AbelianGroup::cyclic(p * p + p + 1);
  auto e = enumerate_sidon(g, p, options);
  rep.nodes_visited = e.nodes_visited;
  for (const auto& s : e.sets) {
    ++rep.sets_tested;
    if (find_completion(g, s))
      ++rep.extendable;
    else if (!rep.counterexample)
      rep.counterexample = s;
  }
  if (rep.counterexample)
    rep.verdict = Verdict::fails;
  else
    rep.verdict = e.exhaustive ? Verdict::holds : Verdict::inconclusive;
  return rep;
}

std::string to_string(OrderForm f) {
  switch (f) {
    case OrderForm::q2_q_1: return "q^2+q+1";
    case OrderForm::q2: return "q^2";
    case OrderForm::q2_minus_1: return "q^2-1";
    case OrderForm::q2_minus_sqrt_q: return "q^2-q^(1/2)";
    case OrderForm::q_q_minus_1: return "q(q-1)";
    case OrderForm::q_minus_1_squared: return "(q-1)^2";
  }
  return "?";
}

std::vector<OrderMatch> admissible_orders(std::uint64_t n) {
  if (n == 0) throw PreconditionError("n must be positive");
  std::vector<OrderMatch> out;
  // Every form is at least (q-1)^2, so q <= sqrt(n) + 1.
  const std::uint64_t qmax = nt::isqrt(n) + 1;
  for (std::uint64_t q = qmax; q >= 2; --q) {
    const auto pp = nt::prime_power(q);
    if (!pp) continue;
    const std::uint64_t r = nt::isqrt(q);
    const std::pair<OrderForm, std::optional<std::uint64_t>> forms[] = {
        {OrderForm::q2_q_1, q * q + q + 1},
        {OrderForm::q2, q * q},
        {OrderForm::q2_minus_1, q * q - 1},
        {OrderForm::q2_minus_sqrt_q, r * r == q ? std::optional<std::uint64_t>(q * q - r) : std::nullopt},
        {OrderForm::q_q_minus_1, q * (q - 1)},
        {OrderForm::q_minus_1_squared, (q - 1) * (q - 1)},
    };
    for (const auto& [form, value] : forms)
      if (value && *value == n) out.push_back({form, q});
  }
  return out;
}

}  // namespace sidon
