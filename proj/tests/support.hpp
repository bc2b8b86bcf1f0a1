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


#ifndef OBSALG_TESTS_SUPPORT_HPP
#define OBSALG_TESTS_SUPPORT_HPP

#include <initializer_list>
#include <utility>
#include <vector>

#include <obsalg/obsalg.hpp>

namespace obsalg::testing {

/// Element of a product-of-chains algebra from its coordinates.
inline Element el(const AlgebraPtr& e, std::initializer_list<std::uint32_t> coords) {
  std::vector<std::uint32_t> c(coords);
  return e->from_coords(c);
}

/// Element of a single chain.
inline Element el(const AlgebraPtr& e, std::uint32_t n) { return el(e, {n}); }

/// Observable from (point, element) pairs; points given as p or p/q strings.
inline Observable obs(const AlgebraPtr& e, std::initializer_list<std::pair<const char*, Element>> atoms) {
  std::vector<Atom> v;
  for (const auto& [t, m] : atoms)
    v.push_back({Rational::parse(t), m});
  return make_discrete(e, std::move(v));
}

inline Rational r(const char* s) { return Rational::parse(s); }

/// Every algebra the suites sweep: chains, products, and the two table algebras.
inline std::vector<AlgebraPtr> sample_algebras() {
  return {make_chain(1),
          make_chain(2),
          make_chain(3),
          make_chain(4),
          make_product_chains({1, 1}),
          make_product_chains({1, 2}),
          make_product_chains({2, 2}),
          make_product_chains({1, 1, 1}),
          make_diamond(),
          make_mo2()};
}

}  // namespace obsalg::testing

#endif  // OBSALG_TESTS_SUPPORT_HPP
