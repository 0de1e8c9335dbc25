#include <algorithm>
#include <random>

#include "sidon/sidon.hpp"

namespace sidon {

Elem AffineMap::apply(const AbelianGroup& g, Elem x) const {
  const auto c = g.decode(x);
  Elem y = translation;
  for (std::size_t i = 0; i < c.size(); ++i) y = g.add(y, g.mul(c[i], generator_images[i]));
  return y;
}

ElemSet AffineMap::apply(const AbelianGroup& g, std::span<const Elem> s) const {
  ElemSet out;
  out.reserve(s.size());
  for (Elem x : s) out.push_back(apply(g, x));
  return normalized(std::move(out));
}

bool is_automorphism(const AbelianGroup& g, std::span<const Elem> images) {
  if (images.size() != g.rank()) return false;
  for (std::size_t i = 0; i < images.size(); ++i)
    if (images[i] >= g.order() || g.factors()[i] % g.element_order(images[i]) != 0) return false;
  return subgroup_generated(g, images).size() == g.order();
}

namespace {

// Translation c with phi(s1) + c = s2, given phi(s1) as a list.
std::optional<Elem> matching_translation(const AbelianGroup& g, const std::vector<Elem>& image,
                                         const ElemSet& s2, const std::vector<char>& in_s2) {
  for (Elem x : image) {
    const Elem c = g.sub(s2.front(), x);
    bool ok = true;
    for (Elem y : image)
      if (!in_s2[g.add(y, c)]) {
        ok = false;
        break;
      }
    if (ok) return c;
  }
  return std::nullopt;
}

}  // namespace

AffineEquivalence affine_equivalent(const AbelianGroup& g, std::span<const Elem> s1_in, std::span<const Elem> s2_in,
                                    const AffineSearchOptions& options) {
  const ElemSet s1 = normalized(ElemSet(s1_in.begin(), s1_in.end()));
  const ElemSet s2 = normalized(ElemSet(s2_in.begin(), s2_in.end()));
  AffineEquivalence result;
  const std::size_t k = g.rank();
  std::vector<Elem> identity(k);
  for (std::size_t i = 0; i < k; ++i) {
    std::vector<std::uint64_t> e(k, 0);
    e[i] = 1;
    identity[i] = g.encode(e);
  }
  if (s1.size() != s2.size()) return result;
  if (s1.empty()) {
    result.map = AffineMap{identity, 0};
    return result;
  }

  std::vector<char> in_s2(g.order(), 0);
  for (Elem x : s2) in_s2[x] = 1;
  const std::vector<std::vector<std::uint64_t>> coords = [&] {
    std::vector<std::vector<std::uint64_t>> c;
    for (Elem x : s1) c.push_back(g.decode(x));
    return c;
  }();
  std::vector<Elem> image(s1.size());
  auto try_images = [&](const std::vector<Elem>& imgs) -> bool {
    for (std::size_t j = 0; j < s1.size(); ++j) {
      Elem y = 0;
      for (std::size_t i = 0; i < k; ++i) y = g.add(y, g.mul(coords[j][i], imgs[i]));
      image[j] = y;
    }
    auto c = matching_translation(g, image, s2, in_s2);
    if (!c || !is_automorphism(g, imgs)) return false;
    result.map = AffineMap{imgs, *c};
    return true;
  };

  if (try_images(identity)) return result;

  std::vector<std::vector<Elem>> candidates(k);
  for (Elem x = 0; x < g.order(); ++x) {
    const auto ord = g.element_order(x);
    for (std::size_t i = 0; i < k; ++i)
      if (g.factors()[i] % ord == 0) candidates[i].push_back(x);
  }
  long double total = 1;
  for (const auto& c : candidates) total *= static_cast<long double>(c.size());

  std::vector<Elem> imgs(k);
  if (total <= static_cast<long double>(options.exhaustive_limit)) {
    std::vector<std::size_t> pos(k, 0);
    while (true) {
      for (std::size_t i = 0; i < k; ++i) imgs[i] = candidates[i][pos[i]];
      if (try_images(imgs)) return result;
      std::size_t i = 0;
      while (i < k && ++pos[i] == candidates[i].size()) pos[i++] = 0;
      if (i == k) break;
    }
    return result;
  }

  result.exhaustive = false;
  std::mt19937_64 rng(options.seed);
  for (std::uint64_t trial = 0; trial < options.random_trials; ++trial) {
    for (std::size_t i = 0; i < k; ++i) imgs[i] = candidates[i][rng() % candidates[i].size()];
    if (try_images(imgs)) return result;
  }
  return result;
}

}  // namespace sidon
