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

#ifndef OBSALG_CALCULUS_HPP
#define OBSALG_CALCULUS_HPP

#include <functional>
#include <map>
#include <optional>
#include <set>
#include <span>
#include <string>
#include <vector>

#include "spectral.hpp"

namespace obsalg {

// ---------------------------------------------------------------------------
// Function calculus

/// A real function, only ever evaluated on support points.
using PointMap = std::function<Rational(const Rational&)>;

/// A function given by its values on finitely many points.
using FiniteMap = std::map<Rational, Rational>;

namespace maps {

inline PointMap identity() {
  return [](const Rational& t) { return t; };
}
inline PointMap negate() {
  return [](const Rational& t) { return -t; };
}
inline PointMap scale(std::int64_t n) {
  return [n](const Rational& t) { return Rational(n) * t; };
}
/// t -> p t + q
inline PointMap affine(Rational p, Rational q) {
  return [p, q](const Rational& t) { return p * t + q; };
}
inline PointMap one_minus() {
  return [](const Rational& t) { return Rational(1) - t; };
}
inline PointMap square() {
  return [](const Rational& t) { return t * t; };
}
inline PointMap add(PointMap f, PointMap g) {
  return [f = std::move(f), g = std::move(g)](const Rational& t) { return f(t) + g(t); };
}
inline PointMap max(PointMap f, PointMap g) {
  return [f = std::move(f), g = std::move(g)](const Rational& t) { return std::max(f(t), g(t)); };
}

inline PointMap from_table(FiniteMap table) {
  return [table = std::move(table)](const Rational& t) {
    auto it = table.find(t);
    if (it == table.end())
      throw std::invalid_argument("map undefined at support point " + t.str());
    return it->second;
  };
}

/// The values of f on the given points.
inline FiniteMap tabulate(const PointMap& f, std::span<const Rational> points) {
  FiniteMap out;
  for (const auto& p : points)
    out.emplace(p, f(p));
  return out;
}

}  // namespace maps

/// f o x: the mass at v is the sum of the masses of the support points f maps to v.
inline Observable compose(const Observable& x, const PointMap& f) {
  const auto& e = x.algebra();
  std::map<Rational, Element> image;
  for (const auto& a : x.atoms()) {
    Rational v = f(a.point);
    auto [it, fresh] = image.emplace(v, a.mass);
    if (!fresh)
      it->second = *e->sum(it->second, a.mass);
  }
  std::vector<Atom> atoms;
  for (const auto& [v, m] : image)
    atoms.push_back({v, m});
  return Observable::from_canonical(e, std::move(atoms));
}

inline Observable compose(const Observable& x, const FiniteMap& f) { return compose(x, maps::from_table(f)); }

inline Observable negate(const Observable& x) { return compose(x, maps::negate()); }

/// n x as f_n o x with f_n(t) = n t.
inline Observable scale(const Observable& x, std::int64_t n) { return compose(x, maps::scale(n)); }

// ---------------------------------------------------------------------------
// Sum

struct SumOptions {
  /// Compute on lattice algebras without the distributive laws. The result
  /// is still a valid observable but none of the semigroup laws is promised.
  bool force = false;
};

/// True when the sum on this algebra carries the usual guarantees.
inline bool sum_is_guaranteed(const EffectAlgebra& e) {
  return e.properties().is_lattice && e.properties().distributive;
}

inline void require_sum_allowed(const EffectAlgebra& e, SumOptions opt) {
  if (!e.properties().is_lattice)
    throw UnsupportedAlgebra("sum of observables requires a lattice effect algebra");
  if (!e.properties().distributive && !opt.force)
    throw DistributivityRequired("sum of observables requires the distributive laws; use force to override");
}

/// Every breakpoint of x + y is among the pairwise sums of support points.
inline std::vector<Rational> sum_candidates(const Observable& x, const Observable& y) {
  std::set<Rational> c;
  for (const auto& a : x.atoms())
    for (const auto& b : y.atoms())
      c.insert(a.point + b.point);
  return {c.begin(), c.end()};
}

/**
 * B_{x+y}(t) through the jumps of x only.
 *
 * With x-breakpoints s_i and post-jump values c_i, B_x(r) = c_i on
 * (s_i, s_{i+1}] and B_y(t - r) is largest as r decreases to s_i, where by
 * left-continuity it equals B_y(t - s_i). So the supremum over all rationals
 * collapses to the join over i of c_i /\ B_y(t - s_i).
 */
inline Element sum_value(const SpectralResolution& bx, const SpectralResolution& by, const Rational& t) {
  const auto& e = *bx.algebra();
  Element acc = e.zero();
  for (std::size_t i = 0; i < bx.jumps(); ++i) {
    Element term = e.meet_or_throw(bx.values()[i], by(t - bx.breakpoints()[i]));
    acc = e.join_or_throw(acc, term);
  }
  return acc;
}

namespace detail {

/// Step function that takes value values[k] on (points[k-1], points[k]] and 1 past the end.
inline SpectralResolution resolution_through(const AlgebraPtr& e, const std::vector<Rational>& points,
                                             const std::vector<Element>& at_points) {
  // value after points[k] is at_points[k+1]
  std::vector<Element> after(points.size());
  for (std::size_t k = 0; k + 1 < points.size(); ++k)
    after[k] = at_points[k + 1];
  if (!points.empty())
    after.back() = e->one();
  return build_resolution(e, points, std::move(after));
}

}  // namespace detail

inline SpectralResolution sum_resolution(const Observable& x, const Observable& y, SumOptions opt = {}) {
  require_same_algebra(x, y);
  require_sum_allowed(*x.algebra(), opt);
  auto bx = resolution_of(x);
  auto by = resolution_of(y);
  auto cand = sum_candidates(x, y);
  std::vector<Element> vals;
  vals.reserve(cand.size());
  for (const auto& t : cand)
    vals.push_back(sum_value(bx, by, t));
  return detail::resolution_through(x.algebra(), cand, vals);
}

/// The sum x + y. Throws DistributivityRequired on non-distributive algebras unless forced.
inline Observable obs_sum(const Observable& x, const Observable& y, SumOptions opt = {}) {
  return observable_of(sum_resolution(x, y, opt));
}

/// x + x + ... + x (n >= 1 copies).
inline Observable sum_n(const Observable& x, std::int64_t n, SumOptions opt = {}) {
  if (n < 1)
    throw std::invalid_argument("sum_n needs n >= 1");
  Observable acc = x;
  for (std::int64_t i = 1; i < n; ++i)
    acc = obs_sum(acc, x, opt);
  return acc;
}

// ---------------------------------------------------------------------------
// Grid oracle for the sum

/// Resolution values sampled at probe points, as produced by sum_oracle.
struct ProbedValues {
  AlgebraPtr algebra;
  std::vector<Rational> probes;
  std::vector<Element> values;

  /// Reads the samples as a step function jumping only at probes. Throws
  /// ResolutionError if the samples do not start at 0 and end at 1, which
  /// happens when the grid is too coarse.
  SpectralResolution to_resolution() const {
    if (probes.empty() || values.front() != algebra->zero())
      throw ResolutionError("normalization", "samples do not start at 0");
    if (values.back() != algebra->one())
      throw ResolutionError("normalization", "samples do not reach 1");
    std::vector<Rational> bp(probes.begin(), probes.end() - 1);
    std::vector<Element> after(values.begin() + 1, values.end());
    return build_resolution(algebra, std::move(bp), std::move(after));
  }
};

/**
 * Direct evaluation of B(t) = \/_{s in grid} (B_x(s) /\ B_y(t - s)) at every
 * probe t. Independent of the jump-list reduction in sum_value.
 */
inline ProbedValues sum_oracle(const Observable& x, const Observable& y, std::span<const Rational> grid,
                               std::span<const Rational> probes) {
  require_same_algebra(x, y);
  const auto& e = *x.algebra();
  auto bx = resolution_of(x);
  auto by = resolution_of(y);
  ProbedValues out{x.algebra(), {probes.begin(), probes.end()}, {}};
  for (const auto& t : probes) {
    Element acc = e.zero();
    for (const auto& s : grid)
      acc = e.join_or_throw(acc, e.meet_or_throw(bx(s), by(t - s)));
    out.values.push_back(acc);
  }
  return out;
}

/// Candidate breakpoints, midpoints between consecutive ones, and one point beyond each end.
inline std::vector<Rational> sum_probes(const Observable& x, const Observable& y) {
  auto cand = sum_candidates(x, y);
  std::vector<Rational> p;
  p.push_back(cand.front() - Rational(1));
  for (std::size_t k = 0; k < cand.size(); ++k) {
    if (k)
      p.push_back(midpoint(cand[k - 1], cand[k]));
    p.push_back(cand[k]);
  }
  p.push_back(cand.back() + Rational(1));
  return p;
}

/**
 * Smallest positive gap the oracle grid has to resolve: for each probe t and
 * x-jump s_i, the distance from t - s_i down to the nearest y-jump below it,
 * and the distance to the next x-jump. A grid point in (s_i, s_i + gap) then
 * sees the same B_x and B_y values as the limit r -> s_i.
 */
inline Rational oracle_gap(const Observable& x, const Observable& y, std::span<const Rational> probes) {
  std::optional<Rational> gap;
  auto consider = [&](const Rational& g) {
    if (g > Rational(0) && (!gap || g < *gap))
      gap = g;
  };
  const auto& xs = x.atoms();
  for (std::size_t i = 0; i + 1 < xs.size(); ++i)
    consider(xs[i + 1].point - xs[i].point);
  for (const auto& t : probes)
    for (const auto& a : xs)
      for (const auto& b : y.atoms())
        consider(t - a.point - b.point);
  return gap.value_or(Rational(1));
}

/**
 * Grid of multiples of base^-k covering every point where B_x can jump,
 * with mesh base^-k strictly below oracle_gap and below 1.
 */
inline std::vector<Rational> oracle_grid(const Observable& x, const Observable& y, std::span<const Rational> probes,
                                         std::int64_t base) {
  if (base < 2)
    throw std::invalid_argument("oracle grid base must be at least 2");
  Rational gap = std::min(oracle_gap(x, y, probes), Rational(1));
  Rational mesh(1);
  while (!(mesh < gap))
    mesh = mesh / Rational(base);
  Rational lo_pt = std::min(x.min_point(), y.min_point());
  Rational hi_pt = std::max(x.max_point(), y.max_point());
  std::int64_t lo = std::min(lo_pt, lo_pt + lo_pt).floor() - 1;
  std::int64_t hi = std::max(hi_pt, hi_pt + hi_pt).ceil() + 1;
  std::vector<Rational> grid;
  for (Rational r(lo); r <= Rational(hi); r += mesh)
    grid.push_back(r);
  return grid;
}

// ---------------------------------------------------------------------------
// Olson order and lattice operations

enum class OrderRelation { less, greater, equal, incomparable };

inline const char* to_string(OrderRelation r) {
  switch (r) {
  case OrderRelation::less:
    return "LESS";
  case OrderRelation::greater:
    return "GREATER";
  case OrderRelation::equal:
    return "EQUAL";
  case OrderRelation::incomparable:
    return "INCOMPARABLE";
  }
  return "?";
}

namespace detail {

inline std::vector<Rational> merged_breakpoints(std::span<const SpectralResolution> rs) {
  std::set<Rational> s;
  for (const auto& r : rs)
    s.insert(r.breakpoints().begin(), r.breakpoints().end());
  return {s.begin(), s.end()};
}

}  // namespace detail

/// x precedes y in the Olson order iff B_y(t) <= B_x(t) for all t.
/// Both are step functions, so checking at the union of breakpoints suffices.
inline bool olson_leq(const Observable& x, const Observable& y) {
  require_same_algebra(x, y);
  const auto& e = *x.algebra();
  SpectralResolution rs[] = {resolution_of(x), resolution_of(y)};
  for (const auto& t : detail::merged_breakpoints(rs))
    if (!e.leq(rs[1](t), rs[0](t)))
      return false;
  return true;
}

inline OrderRelation olson_compare(const Observable& x, const Observable& y) {
  if (x == y)
    return OrderRelation::equal;
  bool le = olson_leq(x, y);
  bool ge = olson_leq(y, x);
  if (le && ge)
    throw std::logic_error("Olson order not antisymmetric on canonical forms");
  if (le)
    return OrderRelation::less;
  if (ge)
    return OrderRelation::greater;
  return OrderRelation::incomparable;
}

namespace detail {

inline Observable pointwise(std::span<const Observable> xs, bool use_join) {
  if (xs.empty())
    throw std::invalid_argument("lattice operation on an empty family");
  for (const auto& x : xs)
    require_same_algebra(xs.front(), x);
  const auto& ep = xs.front().algebra();
  if (!ep->properties().is_lattice)
    throw UnsupportedAlgebra("Olson meets and joins require a lattice effect algebra");
  std::vector<SpectralResolution> rs;
  for (const auto& x : xs)
    rs.push_back(resolution_of(x));
  auto pts = merged_breakpoints(rs);
  std::vector<Element> vals;
  for (const auto& t : pts) {
    Element acc = rs.front()(t);
    for (std::size_t i = 1; i < rs.size(); ++i)
      acc = use_join ? ep->join_or_throw(acc, rs[i](t)) : ep->meet_or_throw(acc, rs[i](t));
    vals.push_back(acc);
  }
  return observable_of(resolution_through(ep, pts, vals));
}

}  // namespace detail

/// Greatest lower bound: the pointwise join of the resolutions.
inline Observable obs_meet(std::span<const Observable> xs) { return detail::pointwise(xs, true); }

/// Least upper bound. For finitely many step functions the left limit of the
/// pointwise meet is the pointwise meet itself.
inline Observable obs_join(std::span<const Observable> xs) { return detail::pointwise(xs, false); }

inline Observable obs_meet(const Observable& x, const Observable& y) {
  Observable v[] = {x, y};
  return obs_meet(v);
}
inline Observable obs_join(const Observable& x, const Observable& y) {
  Observable v[] = {x, y};
  return obs_join(v);
}

// ---------------------------------------------------------------------------
// Sharp observables

/// The three readings of "every value of x is sharp" for a discrete observable.
struct SharpnessReport {
  bool masses = false;       ///< every point mass is sharp
  bool cumulatives = false;  ///< every value B_x(t) is sharp
  bool unions = false;       ///< every x(A), i.e. every subsum of masses, is sharp

  bool consistent() const noexcept { return masses == cumulatives && cumulatives == unions; }
};

inline SharpnessReport sharpness(const Observable& x) {
  const auto& e = *x.algebra();
  SharpnessReport r{true, true, true};
  Element acc = e.zero();
  std::set<std::uint32_t> reachable{e.zero().index()};
  for (const auto& a : x.atoms()) {
    r.masses = r.masses && e.is_sharp(a.mass);
    acc = *e.sum(acc, a.mass);
    r.cumulatives = r.cumulatives && e.is_sharp(acc);
    std::set<std::uint32_t> next = reachable;
    for (auto s : reachable)
      next.insert(e.sum(e.element(s), a.mass)->index());
    reachable = std::move(next);
  }
  for (auto s : reachable)
    r.unions = r.unions && e.is_sharp(e.element(s));
  return r;
}

/**
 * Every x(A) is sharp. On algebras with Riesz decomposition the mass and
 * cumulative characterizations must agree with this; a disagreement there is
 * an internal error. Elsewhere use sharpness() to see all three.
 */
inline bool is_sharp_observable(const Observable& x) {
  auto r = sharpness(x);
  if (x.algebra()->properties().has_rdp && !r.consistent())
    throw std::logic_error("sharpness characterizations disagree on an algebra with RDP");
  return r.unions;
}

/// -x = f o x with f(t) = -t; for sharp x, x + (-x) = o.
inline Observable sharp_inverse(const Observable& x) {
  if (!is_sharp_observable(x))
    throw std::invalid_argument("sharp_inverse: observable is not sharp");
  return negate(x);
}

/// q_1 for the unit element: point mass 1 at 1.
inline Observable unit_question(const AlgebraPtr& e) { return question(e, e->one()); }

/**
 * Least integer n >= 1 exceeding every support point of a sharp x; then
 * x precedes n q_1 in the Olson order.
 */
inline std::int64_t strong_unit_bound(const Observable& x) {
  if (!is_sharp_observable(x))
    throw std::invalid_argument("strong_unit_bound: observable is not sharp");
  std::int64_t n = std::max<std::int64_t>(1, x.max_point().floor() + 1);
  if (!olson_leq(x, scale(unit_question(x.algebra()), n)))
    throw std::logic_error("strong unit bound does not dominate");
  return n;
}

}  // namespace obsalg

#endif  // OBSALG_CALCULUS_HPP
