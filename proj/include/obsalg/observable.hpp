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

#ifndef OBSALG_OBSERVABLE_HPP
#define OBSALG_OBSERVABLE_HPP

#include <algorithm>
#include <map>
#include <utility>
#include <vector>

#include "effect_algebra.hpp"
#include "rational.hpp"

namespace obsalg {

/// One support point of a discrete observable and the element it carries.
struct Atom {
  Rational point;
  Element mass;

  friend bool operator==(const Atom&, const Atom&) = default;
};

/**
 * Discrete bounded observable x(A) = sum of masses at support points in A.
 *
 * Always canonical: points strictly increasing, no zero masses, masses
 * summable to exactly 1. Equality is canonical-form equality.
 */
class Observable {
public:
  const AlgebraPtr& algebra() const noexcept { return algebra_; }
  const std::vector<Atom>& atoms() const noexcept { return atoms_; }
  std::size_t support_size() const noexcept { return atoms_.size(); }

  const Rational& min_point() const { return atoms_.front().point; }
  const Rational& max_point() const { return atoms_.back().point; }

  /// Mass at a single point (zero off the support).
  Element mass_at(const Rational& t) const {
    auto it = std::lower_bound(atoms_.begin(), atoms_.end(), t,
                               [](const Atom& a, const Rational& p) { return a.point < p; });
    if (it != atoms_.end() && it->point == t)
      return it->mass;
    return algebra_->zero();
  }

  friend bool operator==(const Observable& a, const Observable& b) {
    return a.algebra_->fingerprint() == b.algebra_->fingerprint() && a.atoms_ == b.atoms_;
  }

  /// Atoms must already be canonical. Used by constructions whose output is
  /// canonical by design (resolution inversion, sums, compositions).
  static Observable from_canonical(AlgebraPtr e, std::vector<Atom> atoms) {
    Observable x;
    x.algebra_ = std::move(e);
    x.atoms_ = std::move(atoms);
    return x;
  }

private:
  AlgebraPtr algebra_;
  std::vector<Atom> atoms_;
};

inline void require_same_algebra(const Observable& x, const Observable& y) {
  if (x.algebra()->fingerprint() != y.algebra()->fingerprint())
    throw AlgebraMismatch("observables live on different algebras");
}

/**
 * Builds a canonical discrete observable.
 *
 * Duplicate points are merged by summing their masses and zero masses are
 * dropped. Throws ObservableError if a running sum (in point order) becomes
 * undefined or the total is not 1; prefix() reports how many atoms summed.
 */
inline Observable make_discrete(const AlgebraPtr& e, std::vector<Atom> atoms) {
  for (const auto& a : atoms)
    e->check(a.mass);
  std::stable_sort(atoms.begin(), atoms.end(), [](const Atom& a, const Atom& b) { return a.point < b.point; });

  std::vector<Atom> merged;
  for (const auto& a : atoms) {
    if (!merged.empty() && merged.back().point == a.point) {
      auto s = e->sum(merged.back().mass, a.mass);
      if (!s)
        throw ObservableError(merged.size(), "masses at point " + a.point.str() + " are not summable");
      merged.back().mass = *s;
    } else {
      merged.push_back(a);
    }
  }

  Element total = e->zero();
  std::vector<Atom> out;
  for (std::size_t i = 0; i < merged.size(); ++i) {
    auto s = e->sum(total, merged[i].mass);
    if (!s)
      throw ObservableError(i, "masses are not summable: prefix of " + std::to_string(i) + " atoms sums to " +
                                   e->name(total) + ", adding " + e->name(merged[i].mass) + " at " +
                                   merged[i].point.str() + " is undefined");
    total = *s;
    if (merged[i].mass != e->zero())
      out.push_back(merged[i]);
  }
  if (total != e->one())
    throw ObservableError(merged.size(), "total mass is " + e->name(total) + ", not 1");
  return Observable::from_canonical(e, std::move(out));
}

/// The question q_a with mass a' at 0 and a at 1.
inline Observable question(const AlgebraPtr& e, Element a) {
  e->check(a);
  return make_discrete(e, {{Rational(0), e->complement(a)}, {Rational(1), a}});
}

/// Point mass 1 at t. point_mass(e, 0) is the neutral observable o.
inline Observable point_mass(const AlgebraPtr& e, const Rational& t) {
  return Observable::from_canonical(e, {{t, e->one()}});
}

inline Observable neutral(const AlgebraPtr& e) { return point_mass(e, Rational(0)); }

}  // namespace obsalg

#endif  // OBSALG_OBSERVABLE_HPP
