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

#ifndef OBSALG_SPECTRAL_HPP
#define OBSALG_SPECTRAL_HPP

#include <algorithm>
#include <vector>

#include "observable.hpp"

namespace obsalg {

/**
 * Left-continuous step function B(t) = x((-inf, t)) stored as a jump list.
 *
 * With breakpoints t_1 < ... < t_n and values c_1 <= ... <= c_n = 1:
 *   B(t) = 0    for t <= t_1,
 *   B(t) = c_j  for t_j < t <= t_{j+1},
 *   B(t) = 1    for t > t_n.
 * Canonical: c_1 != 0 and consecutive values differ, so every breakpoint is a
 * genuine jump. Left-continuity holds by representation.
 */
class SpectralResolution {
public:
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Rational>& breakpoints() const noexcept { return breakpoints_; }
  const std::vector<Element>& values() const noexcept { return values_; }
  std::size_t jumps() const noexcept { return breakpoints_.size(); }

  /// Value at t. At a breakpoint this is the value before the jump.
  Element operator()(const Rational& t) const {
    // number of breakpoints strictly below t
    auto it = std::lower_bound(breakpoints_.begin(), breakpoints_.end(), t);
    auto k = static_cast<std::size_t>(it - breakpoints_.begin());
    return k == 0 ? algebra_->zero() : values_[k - 1];
  }

  friend bool operator==(const SpectralResolution& a, const SpectralResolution& b) {
    return a.algebra_->fingerprint() == b.algebra_->fingerprint() && a.breakpoints_ == b.breakpoints_ &&
           a.values_ == b.values_;
  }

private:
  friend SpectralResolution build_resolution(const AlgebraPtr&, std::vector<Rational>, std::vector<Element>);

  AlgebraPtr algebra_;
  std::vector<Rational> breakpoints_;
  std::vector<Element> values_;
};

/**
 * Validates monotonicity and normalization, then canonicalizes (drops
 * breakpoints whose value equals the previous one). No lattice requirement.
 */
inline SpectralResolution build_resolution(const AlgebraPtr& e, std::vector<Rational> breakpoints,
                                           std::vector<Element> values) {
  if (breakpoints.size() != values.size())
    throw ResolutionError("shape", "breakpoints and values differ in length");
  if (breakpoints.empty())
    throw ResolutionError("normalization", "resolution never reaches 1");
  for (std::size_t j = 1; j < breakpoints.size(); ++j)
    if (!(breakpoints[j - 1] < breakpoints[j]))
      throw ResolutionError("shape", "breakpoints not strictly increasing at " + breakpoints[j].str());

  SpectralResolution r;
  r.algebra_ = e;
  Element prev = e->zero();
  for (std::size_t j = 0; j < breakpoints.size(); ++j) {
    e->check(values[j]);
    if (!e->leq(prev, values[j]))
      throw ResolutionError("monotonicity", "value " + e->name(values[j]) + " after " + breakpoints[j].str() +
                                                " is not above the preceding value " + e->name(prev));
    if (values[j] != prev) {
      r.breakpoints_.push_back(breakpoints[j]);
      r.values_.push_back(values[j]);
    }
    prev = values[j];
  }
  if (prev != e->one())
    throw ResolutionError("normalization", "top value is " + e->name(prev) + ", not 1");
  return r;
}

/**
 * User-facing constructor. Rejects non-lattice algebras always, and algebras
 * without the distributive laws unless `allow_nondistributive` is set, since
 * the sum built on top of resolutions needs them.
 */
inline SpectralResolution make_resolution(const AlgebraPtr& e, std::vector<Rational> breakpoints,
                                          std::vector<Element> values, bool allow_nondistributive = false) {
  if (!e->properties().is_lattice)
    throw UnsupportedAlgebra("spectral resolutions require a lattice effect algebra");
  if (!e->properties().distributive && !allow_nondistributive)
    throw DistributivityRequired("spectral resolutions require a distributive lattice effect algebra");
  return build_resolution(e, std::move(breakpoints), std::move(values));
}

inline Element eval_resolution(const SpectralResolution& b, const Rational& t) { return b(t); }

/// Breakpoints are the support points; values are the running mass sums.
inline SpectralResolution resolution_of(const Observable& x) {
  const auto& e = x.algebra();
  std::vector<Rational> bp;
  std::vector<Element> vals;
  Element acc = e->zero();
  for (const auto& a : x.atoms()) {
    acc = *e->sum(acc, a.mass);
    bp.push_back(a.point);
    vals.push_back(acc);
  }
  return build_resolution(e, std::move(bp), std::move(vals));
}

/// Inverse of resolution_of: mass at each breakpoint is the jump c_j - c_{j-1}.
inline Observable observable_of(const SpectralResolution& b) {
  const auto& e = b.algebra();
  std::vector<Atom> atoms;
  Element prev = e->zero();
  for (std::size_t j = 0; j < b.jumps(); ++j) {
    atoms.push_back({b.breakpoints()[j], e->diff(prev, b.values()[j])});
    prev = b.values()[j];
  }
  return Observable::from_canonical(e, std::move(atoms));
}

}  // namespace obsalg

#endif  // OBSALG_SPECTRAL_HPP
