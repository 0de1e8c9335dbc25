#include <algorithm>
#include <set>

#include "sidon/sidon.hpp"

namespace sidon {

namespace {

// Closure of base + {x} under addition, or nullopt if it leaves T.
std::optional<ElemSet> extend_within(const AbelianGroup& g, const ElemSet& base, Elem x,
                                     const std::vector<char>& in_t) {
  std::vector<char> seen(g.order(), 0);
  ElemSet members = base;
  for (Elem m : members) seen[m] = 1;
  if (seen[x]) return members;
  // base is a subgroup, so its elements together with x generate base + <x>.
  for (std::size_t i = 0; i < members.size(); ++i) {
    const Elem y = g.add(members[i], x);
    if (!seen[y]) {
      if (!in_t[y]) return std::nullopt;
      seen[y] = 1;
      members.push_back(y);
    }
  }
  std::sort(members.begin(), members.end());
  return members;
}

// Every subgroup contained in T that is maximal under inclusion among such.
std::vector<ElemSet> maximal_subgroups_within(const AbelianGroup& g, const ElemSet& t,
                                              const std::vector<char>& in_t) {
  std::set<ElemSet> all{ElemSet{0}};
  std::vector<ElemSet> frontier{ElemSet{0}};
  while (!frontier.empty()) {
    std::vector<ElemSet> next;
    for (const auto& h : frontier) {
      for (Elem x : t) {
        if (std::binary_search(h.begin(), h.end(), x)) continue;
        auto ext = extend_within(g, h, x, in_t);
        if (ext && all.insert(*ext).second) next.push_back(std::move(*ext));
      }
    }
    frontier = std::move(next);
  }
  std::vector<ElemSet> maximal;
  for (const auto& h : all) {
    bool is_max = true;
    for (const auto& other : all) {
      if (other.size() > h.size() && std::includes(other.begin(), other.end(), h.begin(), h.end())) {
        is_max = false;
        break;
      }
    }
    if (is_max) maximal.push_back(h);
  }
  std::sort(maximal.begin(), maximal.end(),
            [](const ElemSet& a, const ElemSet& b) { return a.size() != b.size() ? a.size() > b.size() : a < b; });
  return maximal;
}

// Greedily grows a subgroup of T containing x.
std::optional<ElemSet> grow_maximal(const AbelianGroup& g, const ElemSet& t, const std::vector<char>& in_t, Elem x) {
  auto start = extend_within(g, ElemSet{0}, x, in_t);
  if (!start) return std::nullopt;
  ElemSet h = std::move(*start);
  for (Elem y : t) {
    if (std::binary_search(h.begin(), h.end(), y)) continue;
    if (auto ext = extend_within(g, h, y, in_t)) h = std::move(*ext);
  }
  return std::optional<ElemSet>(std::move(h));
}

bool cover_search(const std::vector<ElemSet>& candidates, std::vector<int>& covered, std::size_t remaining,
                  std::size_t budget, std::vector<std::size_t>& chosen, const ElemSet& t) {
  if (remaining == 0) return true;
  if (budget == 0) return false;
  // Branch on the first uncovered element: some chosen subgroup must contain it.
  Elem target = 0;
  for (Elem x : t)
    if (!covered[x]) {
      target = x;
      break;
    }
  for (std::size_t i = 0; i < candidates.size(); ++i) {
    const auto& h = candidates[i];
    if (!std::binary_search(h.begin(), h.end(), target)) continue;
    std::size_t gained = 0;
    for (Elem x : h)
      if (covered[x]++ == 0) ++gained;
    chosen.push_back(i);
    if (cover_search(candidates, covered, remaining - gained, budget - 1, chosen, t)) return true;
    chosen.pop_back();
    for (Elem x : h) --covered[x];
  }
  return false;
}

}  // namespace

SubgroupCover subgroup_union_cover(const AbelianGroup& g, std::span<const Elem> t_in, std::size_t k_max) {
  if (k_max == 0) throw PreconditionError("subgroup_union_cover: k_max must be positive");
  const ElemSet t = normalized(ElemSet(t_in.begin(), t_in.end()));
  if (t.empty() || t.front() != 0) throw PreconditionError("subgroup_union_cover: T must contain 0");
  std::vector<char> in_t(g.order(), 0);
  for (Elem x : t) in_t[x] = 1;

  SubgroupCover result;
  if (is_subgroup(g, t)) {
    result.status = CoverStatus::found;
    result.subgroups.push_back(t);
    return result;
  }
  if (t.size() <= 64) {
    const auto candidates = maximal_subgroups_within(g, t, in_t);
    std::vector<int> covered(g.order(), 0);
    std::vector<std::size_t> chosen;
    if (cover_search(candidates, covered, t.size(), k_max, chosen, t)) {
      result.status = CoverStatus::found;
      for (auto i : chosen) result.subgroups.push_back(candidates[i]);
    } else {
      result.status = CoverStatus::none;
    }
    return result;
  }

  std::vector<char> covered(g.order(), 0);
  std::size_t remaining = t.size();
  while (remaining > 0 && result.subgroups.size() < k_max) {
    Elem x = 0;
    for (Elem y : t)
      if (!covered[y]) {
        x = y;
        break;
      }
    auto grown = grow_maximal(g, t, in_t, x);
    if (!grown) {
      // x lies in no subgroup contained in T.
      result.status = CoverStatus::none;
      return result;
    }
    ElemSet h = std::move(*grown);
    for (Elem y : h)
      if (!covered[y]) {
        covered[y] = 1;
        --remaining;
      }
    result.subgroups.push_back(std::move(h));
  }
  if (remaining == 0) {
    result.status = CoverStatus::found;
  } else {
    result.status = CoverStatus::inconclusive;
    result.subgroups.clear();
  }
  return result;
}

}  // namespace sidon
