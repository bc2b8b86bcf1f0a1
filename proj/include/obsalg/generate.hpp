/*
 * Copyright 2026 The obsalg Authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

#ifndef OBSALG_GENERATE_HPP
#define OBSALG_GENERATE_HPP

#include <algorithm>
#include <functional>
#include <limits>
#include <random>
#include <set>
#include <vector>

#include "observable.hpp"

namespace obsalg {

/// Seeded generator with platform-independent bounded draws.
class Rng {
public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  /// Uniform in [0, n). n must be positive.
  std::uint64_t below(std::uint64_t n) {
    const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() - std::numeric_limits<std::uint64_t>::max() % n;
    std::uint64_t v;
    do
      v = engine_();
    while (v >= limit);
    return v % n;
  }

  template <class T>
  const T& pick(const std::vector<T>& v) {
    return v[below(v.size())];
  }

private:
  std::mt19937_64 engine_;
};

/// splitmix64 finalizer; derives independent seeds from one user seed.
inline std::uint64_t mix_seed(std::uint64_t seed, std::uint64_t salt) {
  std::uint64_t z = seed + 0x9E3779B97F4A7C15ull * (salt + 1);
  z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ull;
  z = (z ^ (z >> 27)) * 0x94D049BB133111EBull;
  return z ^ (z >> 31);
}

/// Rationals p/q with 1 <= q <= denominator in [lo, hi].
struct GridSpec {
  std::int64_t denominator = 1;
  Rational lo = Rational(-2);
  Rational hi = Rational(2);

  std::vector<Rational> points() const {
    if (denominator < 1)
      throw std::invalid_argument("grid denominator must be at least 1");
    if (!(lo < hi))
      throw std::invalid_argument("grid needs lo < hi");
    std::set<Rational> s;
    for (std::int64_t q = 1; q <= denominator; ++q)
      for (std::int64_t p = (lo * Rational(q)).ceil(); Rational(p, q) <= hi; ++p)
        s.insert(Rational(p, q));
    return {s.begin(), s.end()};
  }
};

/// Which elements may serve as masses.
enum class MassFilter { any, sharp };

namespace detail {

inline std::vector<Element> allowed_masses(const EffectAlgebra& e, MassFilter f) {
  std::vector<Element> out;
  for (Element a : e.elements())
    if (a != e.zero() && (f == MassFilter::any || e.is_sharp(a)))
      out.push_back(a);
  return out;
}

}  // namespace detail

/**
 * Calls visit for every ordered decomposition 1 = m_1 + ... + m_k into
 * nonzero allowed masses, depth-first over the partial sum.
 */
inline void for_each_decomposition(const EffectAlgebra& e, std::size_t k, MassFilter filter,
                                   const std::function<void(const std::vector<Element>&)>& visit) {
  auto allowed = detail::allowed_masses(e, filter);
  std::vector<Element> cur;
  std::function<void(Element)> rec = [&](Element rem) {
    if (cur.size() + 1 == k) {
      if (std::find(allowed.begin(), allowed.end(), rem) != allowed.end()) {
        cur.push_back(rem);
        visit(cur);
        cur.pop_back();
      }
      return;
    }
    for (Element m : allowed) {
      if (!e.leq(m, rem) || m == rem)
        continue;
      cur.push_back(m);
      rec(e.diff(m, rem));
      cur.pop_back();
    }
  };
  if (k >= 1)
    rec(e.one());
}

/// All canonical observables with at most max_support points from grid.
inline std::vector<Observable> enumerate_observables(const AlgebraPtr& e, const std::vector<Rational>& grid,
                                                     std::size_t max_support, MassFilter filter = MassFilter::any) {
  std::vector<Observable> out;
  std::vector<std::size_t> chosen;
  for (std::size_t k = 1; k <= std::min(max_support, grid.size()); ++k) {
    std::vector<std::vector<Element>> decomps;
    for_each_decomposition(*e, k, filter, [&](const std::vector<Element>& d) { decomps.push_back(d); });
    if (decomps.empty())
      continue;
    // k-subsets of the grid in lexicographic order
    chosen.resize(k);
    for (std::size_t i = 0; i < k; ++i)
      chosen[i] = i;
    while (true) {
      for (const auto& d : decomps) {
        std::vector<Atom> atoms;
        for (std::size_t i = 0; i < k; ++i)
          atoms.push_back({grid[chosen[i]], d[i]});
        out.push_back(Observable::from_canonical(e, std::move(atoms)));
      }
      std::size_t i = k;
      while (i > 0 && chosen[i - 1] == grid.size() - k + i - 1)
        --i;
      if (i == 0)
        break;
      ++chosen[i - 1];
      for (std::size_t j = i; j < k; ++j)
        chosen[j] = chosen[j - 1] + 1;
    }
  }
  return out;
}

/**
 * One random observable: a support size in [1, max_support], distinct grid
 * points, and masses drawn step by step from what is left of 1.
 */
inline Observable random_observable(const AlgebraPtr& e, const std::vector<Rational>& grid, std::size_t max_support,
                                    Rng& rng, MassFilter filter = MassFilter::any) {
  if (grid.empty())
    throw std::invalid_argument("random_observable: empty grid");
  auto allowed = detail::allowed_masses(*e, filter);
  std::size_t k = 1 + rng.below(std::min(max_support, grid.size()));

  std::vector<std::size_t> idx(grid.size());
  for (std::size_t i = 0; i < idx.size(); ++i)
    idx[i] = i;
  for (std::size_t i = 0; i < k; ++i)
    std::swap(idx[i], idx[i + rng.below(idx.size() - i)]);
  std::vector<std::size_t> pts(idx.begin(), idx.begin() + k);
  std::sort(pts.begin(), pts.end());

  for (int attempt = 0; attempt < 64; ++attempt) {
    std::vector<Atom> atoms;
    Element rem = e->one();
    for (std::size_t i = 0; i < k && rem != e->zero(); ++i) {
      Element m = rem;
      if (i + 1 < k) {
        std::vector<Element> proper;
        for (Element a : allowed)
          if (a != rem && e->leq(a, rem))
            proper.push_back(a);
        if (!proper.empty())
          m = rng.pick(proper);
      }
      atoms.push_back({grid[pts[i]], m});
      rem = e->diff(m, rem);
    }
    bool ok = std::all_of(atoms.begin(), atoms.end(), [&](const Atom& a) {
      return std::find(allowed.begin(), allowed.end(), a.mass) != allowed.end();
    });
    if (ok)
      return Observable::from_canonical(e, std::move(atoms));
  }
  // Point mass is always admissible: 1 is sharp.
  return point_mass(e, grid[pts[0]]);
}

struct GenConfig {
  std::vector<Rational> grid;
  std::size_t max_support = 3;
  std::uint64_t seed = 0;
  std::size_t count = 100;
  bool exhaustive = false;
  MassFilter filter = MassFilter::any;
};

/// Seeded stream of `count` observables, or every observable when exhaustive.
inline std::vector<Observable> gen_observables(const AlgebraPtr& e, const GenConfig& cfg) {
  if (cfg.grid.empty())
    throw std::invalid_argument("gen_observables: empty grid");
  if (cfg.exhaustive)
    return enumerate_observables(e, cfg.grid, cfg.max_support, cfg.filter);
  Rng rng(cfg.seed);
  std::vector<Observable> out;
  out.reserve(cfg.count);
  for (std::size_t i = 0; i < cfg.count; ++i)
    out.push_back(random_observable(e, cfg.grid, cfg.max_support, rng, cfg.filter));
  return out;
}

}  // namespace obsalg

#endif  // OBSALG_GENERATE_HPP
