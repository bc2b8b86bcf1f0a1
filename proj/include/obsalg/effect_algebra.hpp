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

#ifndef OBSALG_EFFECT_ALGEBRA_HPP
#define OBSALG_EFFECT_ALGEBRA_HPP

#include <algorithm>
#include <array>
#include <compare>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <tuple>
#include <unordered_map>
#include <vector>

#include "error.hpp"

namespace obsalg {

class EffectAlgebra;

namespace detail {
struct AlgebraBuilder;
}

/// A point of a finite effect algebra.
///
/// Elements are indices into the algebra's element list, tagged with the
/// algebra's structural fingerprint so that mixing algebras is detected.
class Element {
public:
  constexpr Element() noexcept = default;

  constexpr std::uint32_t index() const noexcept { return index_; }
  constexpr std::uint64_t tag() const noexcept { return tag_; }

  friend constexpr bool operator==(const Element&, const Element&) noexcept = default;
  friend constexpr auto operator<=>(const Element& a, const Element& b) noexcept {
    return std::tie(a.tag_, a.index_) <=> std::tie(b.tag_, b.index_);
  }

private:
  friend class EffectAlgebra;
  friend struct detail::AlgebraBuilder;
  constexpr Element(std::uint32_t index, std::uint64_t tag) noexcept : index_(index), tag_(tag) {}

  std::uint32_t index_ = 0;
  std::uint64_t tag_ = 0;
};

struct AlgebraProperties {
  bool is_lattice = false;
  /// Both distributive laws hold for all triples. On a finite lattice this is
  /// equivalent to the countable distributive laws the sum layer relies on.
  bool distributive = false;
  bool has_rdp = false;
  bool is_mv = false;
  bool is_orthoalgebra = false;
  bool is_boolean = false;
  std::vector<Element> sharp_set;

  friend bool operator==(const AlgebraProperties&, const AlgebraProperties&) = default;
};

/// Result of comparing two elements in the derived order.
struct Comparison {
  bool leq = false;
  bool geq = false;
  std::optional<Element> meet;
  std::optional<Element> join;
};

struct MvOps {
  Element oplus;
  Element odot;
};

/// A user-level sum triple x + y = z by element name.
struct SumTriple {
  std::string x, y, z;
};

/**
 * Immutable finite effect algebra.
 *
 * Two representations share one interface: a product of finite chains
 * C(u_1) x ... x C(u_k), where every operation is coordinatewise integer
 * arithmetic, and an explicit table of sums over named elements, where the
 * order, meets, joins and complements are precomputed at construction.
 *
 * Build instances with make_chain, make_product or make_table.
 */
class EffectAlgebra {
public:
  enum class Kind { product_chains, table };

  /// Table algebras are validated in O(n^3) and classified in O(n^4).
  static constexpr std::size_t max_table_size = 64;

  Kind kind() const noexcept { return kind_; }
  std::size_t size() const noexcept { return size_; }
  std::uint64_t fingerprint() const noexcept { return fingerprint_; }

  Element zero() const noexcept { return Element(0, fingerprint_); }
  Element one() const noexcept { return Element(one_index_, fingerprint_); }

  Element element(std::size_t i) const {
    if (i >= size_)
      throw std::out_of_range("element index " + std::to_string(i) + " out of range");
    return Element(static_cast<std::uint32_t>(i), fingerprint_);
  }

  std::vector<Element> elements() const {
    std::vector<Element> out;
    out.reserve(size_);
    for (std::size_t i = 0; i < size_; ++i)
      out.push_back(Element(static_cast<std::uint32_t>(i), fingerprint_));
    return out;
  }

  bool contains(Element a) const noexcept { return a.tag() == fingerprint_ && a.index() < size_; }

  /// a + b, or nullopt where the partial sum is undefined.
  std::optional<Element> sum(Element a, Element b) const {
    check(a);
    check(b);
    std::int64_t r = kind_ == Kind::table ? sum_[idx(a, b)] : product_sum(a.index(), b.index());
    if (r < 0)
      return std::nullopt;
    return Element(static_cast<std::uint32_t>(r), fingerprint_);
  }

  Element complement(Element a) const {
    check(a);
    if (kind_ == Kind::table)
      return Element(complement_[a.index()], fingerprint_);
    return Element(one_index_ - a.index(), fingerprint_);
  }

  bool leq(Element a, Element b) const {
    check(a);
    check(b);
    if (kind_ == Kind::table)
      return leq_[idx(a, b)] != 0;
    return product_leq(a.index(), b.index());
  }

  /// b - a, the unique c with a + c = b. Requires a <= b.
  Element diff(Element a, Element b) const {
    if (!leq(a, b))
      throw std::invalid_argument("diff: " + name(a) + " is not below " + name(b));
    // b - a = (b' + a)'
    return complement(*sum(complement(b), a));
  }

  std::optional<Element> meet(Element a, Element b) const {
    check(a);
    check(b);
    if (kind_ == Kind::table) {
      auto r = meet_[idx(a, b)];
      return r < 0 ? std::nullopt : std::optional<Element>(Element(r, fingerprint_));
    }
    return Element(product_minmax(a.index(), b.index(), false), fingerprint_);
  }

  std::optional<Element> join(Element a, Element b) const {
    check(a);
    check(b);
    if (kind_ == Kind::table) {
      auto r = join_[idx(a, b)];
      return r < 0 ? std::nullopt : std::optional<Element>(Element(r, fingerprint_));
    }
    return Element(product_minmax(a.index(), b.index(), true), fingerprint_);
  }

  Comparison compare(Element a, Element b) const {
    return Comparison{leq(a, b), leq(b, a), meet(a, b), join(a, b)};
  }

  /// Meet that must exist; throws UnsupportedAlgebra otherwise.
  Element meet_or_throw(Element a, Element b) const {
    auto m = meet(a, b);
    if (!m)
      throw UnsupportedAlgebra("meet of " + name(a) + " and " + name(b) + " does not exist");
    return *m;
  }
  Element join_or_throw(Element a, Element b) const {
    auto m = join(a, b);
    if (!m)
      throw UnsupportedAlgebra("join of " + name(a) + " and " + name(b) + " does not exist");
    return *m;
  }

  /// Total MV operations a (+) b = a + (a' /\ b) and a (.) b = (a' (+) b')'.
  MvOps mv_ops(Element a, Element b) const {
    if (!properties_.is_mv)
      throw UnsupportedAlgebra("total MV operations require an MV-effect algebra");
    auto oplus = [&](Element x, Element y) { return *sum(x, *meet(complement(x), y)); };
    return MvOps{oplus(a, b), complement(oplus(complement(a), complement(b)))};
  }

  /// a /\ a' exists and equals 0.
  bool is_sharp(Element a) const {
    auto m = meet(a, complement(a));
    return m && *m == zero();
  }

  const std::vector<Element>& sharp_set() const noexcept { return properties_.sharp_set; }
  const AlgebraProperties& properties() const noexcept { return properties_; }

  // product_chains form

  const std::vector<std::uint32_t>& orders() const noexcept { return orders_; }

  std::vector<std::uint32_t> coords(Element a) const {
    check(a);
    if (kind_ != Kind::product_chains)
      throw std::logic_error("coords() on a table algebra");
    std::vector<std::uint32_t> c(orders_.size());
    std::uint32_t i = a.index();
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      c[k] = i / strides_[k];
      i %= strides_[k];
    }
    return c;
  }

  Element from_coords(std::span<const std::uint32_t> c) const {
    if (kind_ != Kind::product_chains)
      throw std::logic_error("from_coords() on a table algebra");
    if (c.size() != orders_.size())
      throw std::invalid_argument("coordinate vector has " + std::to_string(c.size()) +
                                  " entries, algebra has " + std::to_string(orders_.size()) + " factors");
    std::uint32_t i = 0;
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (c[k] > orders_[k])
        throw std::invalid_argument("coordinate " + std::to_string(c[k]) + " exceeds chain order " +
                                    std::to_string(orders_[k]));
      i += c[k] * strides_[k];
    }
    return Element(i, fingerprint_);
  }

  // table form

  const std::vector<std::string>& names() const noexcept { return names_; }

  Element by_name(const std::string& n) const {
    auto it = name_index_.find(n);
    if (it == name_index_.end())
      throw std::invalid_argument("unknown element '" + n + "'");
    return Element(it->second, fingerprint_);
  }

  /// Display name: the table name, "n" for a single chain, "(c1,...,ck)" for products.
  std::string name(Element a) const {
    check(a);
    if (kind_ == Kind::table)
      return names_[a.index()];
    auto c = coords(a);
    if (c.size() == 1)
      return std::to_string(c[0]);
    std::string s = "(";
    for (std::size_t k = 0; k < c.size(); ++k) {
      if (k)
        s += ",";
      s += std::to_string(c[k]);
    }
    return s + ")";
  }

  /// Defined sums x + y = z with x, y nonzero and index(x) <= index(y).
  std::vector<std::array<Element, 3>> nontrivial_sums() const {
    std::vector<std::array<Element, 3>> out;
    for (std::uint32_t i = 1; i < size_; ++i)
      for (std::uint32_t j = i; j < size_; ++j)
        if (auto s = sum(element(i), element(j)))
          out.push_back({element(i), element(j), *s});
    return out;
  }

  friend bool operator==(const EffectAlgebra& a, const EffectAlgebra& b) noexcept {
    return a.fingerprint_ == b.fingerprint_ && a.kind_ == b.kind_ && a.orders_ == b.orders_ &&
           a.names_ == b.names_ && a.sum_ == b.sum_;
  }

  void check(Element a) const {
    if (!contains(a))
      throw AlgebraMismatch("element does not belong to this algebra");
  }

private:
  friend struct detail::AlgebraBuilder;
  EffectAlgebra() = default;

  std::size_t idx(Element a, Element b) const noexcept { return std::size_t(a.index()) * size_ + b.index(); }

  std::int64_t product_sum(std::uint32_t a, std::uint32_t b) const noexcept {
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      std::uint32_t ca = a / strides_[k], cb = b / strides_[k];
      a %= strides_[k];
      b %= strides_[k];
      if (ca + cb > orders_[k])
        return -1;
      out += (ca + cb) * strides_[k];
    }
    return out;
  }

  bool product_leq(std::uint32_t a, std::uint32_t b) const noexcept {
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      if (a / strides_[k] > b / strides_[k])
        return false;
      a %= strides_[k];
      b %= strides_[k];
    }
    return true;
  }

  std::uint32_t product_minmax(std::uint32_t a, std::uint32_t b, bool take_max) const noexcept {
    std::uint32_t out = 0;
    for (std::size_t k = 0; k < orders_.size(); ++k) {
      std::uint32_t ca = a / strides_[k], cb = b / strides_[k];
      a %= strides_[k];
      b %= strides_[k];
      out += (take_max ? std::max(ca, cb) : std::min(ca, cb)) * strides_[k];
    }
    return out;
  }

  Kind kind_ = Kind::product_chains;
  std::size_t size_ = 0;
  std::uint32_t one_index_ = 0;
  std::uint64_t fingerprint_ = 0;
  AlgebraProperties properties_;

  std::vector<std::uint32_t> orders_;
  std::vector<std::uint32_t> strides_;

  std::vector<std::string> names_;
  std::unordered_map<std::string, std::uint32_t> name_index_;
  std::vector<std::int32_t> sum_;
  std::vector<std::uint8_t> leq_;
  std::vector<std::int32_t> meet_;
  std::vector<std::int32_t> join_;
  std::vector<std::uint32_t> complement_;
};

using AlgebraPtr = std::shared_ptr<const EffectAlgebra>;

namespace detail {

inline std::uint64_t fnv1a(std::uint64_t h, std::string_view s) noexcept {
  for (unsigned char c : s) {
    h ^= c;
    h *= 1099511628211ull;
  }
  return h;
}

inline constexpr std::uint64_t fnv_basis = 14695981039346656037ull;

}  // namespace detail

/// Witness of a failed Riesz decomposition: a1 + a2 = b1 + b2 with no refinement.
struct RdpFailure {
  Element a1, a2, b1, b2;
};

/// Witness of a failed distributive law a /\ (b \/ c) != (a /\ b) \/ (a /\ c) or its dual.
struct DistributivityFailure {
  Element a, b, c;
  bool meet_over_join = true;
};

/**
 * Searches for a refinement matrix c11..c22 for every equality a1 + a2 = b1 + b2.
 *
 * For fixed a1, b1 the choice of c11 determines the rest: c12 = a1 - c11,
 * c21 = b1 - c11, c22 = a2 - c21, and then c12 + c22 must equal b2.
 */
inline std::optional<RdpFailure> find_rdp_failure(const EffectAlgebra& e) {
  auto els = e.elements();
  for (Element a1 : els)
    for (Element a2 : els) {
      auto s = e.sum(a1, a2);
      if (!s)
        continue;
      for (Element b1 : els) {
        if (!e.leq(b1, *s))
          continue;
        Element b2 = e.diff(b1, *s);
        bool found = false;
        for (Element c11 : els) {
          if (!e.leq(c11, a1) || !e.leq(c11, b1))
            continue;
          Element c12 = e.diff(c11, a1);
          Element c21 = e.diff(c11, b1);
          if (!e.leq(c21, a2))
            continue;
          Element c22 = e.diff(c21, a2);
          auto t = e.sum(c12, c22);
          if (t && *t == b2) {
            found = true;
            break;
          }
        }
        if (!found)
          return RdpFailure{a1, a2, b1, b2};
      }
    }
  return std::nullopt;
}

/// Only meaningful on lattices; returns the first failing triple.
inline std::optional<DistributivityFailure> find_distributivity_failure(const EffectAlgebra& e) {
  auto els = e.elements();
  for (Element a : els)
    for (Element b : els)
      for (Element c : els) {
        Element l1 = e.meet_or_throw(a, e.join_or_throw(b, c));
        Element r1 = e.join_or_throw(e.meet_or_throw(a, b), e.meet_or_throw(a, c));
        if (l1 != r1)
          return DistributivityFailure{a, b, c, true};
        Element l2 = e.join_or_throw(a, e.meet_or_throw(b, c));
        Element r2 = e.meet_or_throw(e.join_or_throw(a, b), e.join_or_throw(a, c));
        if (l2 != r2)
          return DistributivityFailure{a, b, c, false};
      }
  return std::nullopt;
}

/// Exhaustive structural classification. Works for either representation.
inline AlgebraProperties check_properties(const EffectAlgebra& e) {
  AlgebraProperties p;
  auto els = e.elements();
  p.is_lattice = true;
  for (Element a : els)
    for (Element b : els)
      if (!e.meet(a, b) || !e.join(a, b))
        p.is_lattice = false;

  p.has_rdp = !find_rdp_failure(e);
  p.is_orthoalgebra = true;
  for (Element a : els)
    if (a != e.zero() && e.sum(a, a))
      p.is_orthoalgebra = false;

  if (p.is_lattice) {
    p.distributive = !find_distributivity_failure(e);
    p.is_mv = true;
    p.is_boolean = true;
    for (Element a : els)
      for (Element b : els) {
        bool disjoint = *e.meet(a, b) == e.zero();
        bool summable = e.sum(a, b).has_value();
        if (disjoint && !summable)
          p.is_mv = false;
        if (disjoint != summable)
          p.is_boolean = false;
      }
  }
  for (Element a : els)
    if (e.is_sharp(a))
      p.sharp_set.push_back(a);
  return p;
}

namespace detail {

struct AlgebraBuilder {
  static AlgebraPtr product(const std::vector<std::uint32_t>& orders) {
    std::shared_ptr<EffectAlgebra> e(new EffectAlgebra());
    e->kind_ = EffectAlgebra::Kind::product_chains;
    e->orders_ = orders;
    e->strides_.resize(orders.size());
    std::uint64_t n = 1;
    for (std::size_t k = orders.size(); k-- > 0;) {
      if (orders[k] == 0)
        throw std::invalid_argument("chain order must be positive");
      e->strides_[k] = static_cast<std::uint32_t>(n);
      n *= std::uint64_t(orders[k]) + 1;
      if (n > (1ull << 31))
        throw std::invalid_argument("product of chains too large");
    }
    e->size_ = n;
    e->one_index_ = static_cast<std::uint32_t>(n - 1);

    std::string key = "product_chains:";
    for (auto u : orders)
      key += std::to_string(u) + ",";
    e->fingerprint_ = fnv1a(fnv_basis, key);

    // A finite product of chains is an MV-effect algebra; Boolean iff every chain has order 1.
    auto& p = e->properties_;
    p.is_lattice = p.distributive = p.has_rdp = p.is_mv = true;
    p.is_boolean = p.is_orthoalgebra =
        std::all_of(orders.begin(), orders.end(), [](std::uint32_t u) { return u == 1; });
    for (std::uint32_t i = 0; i < e->size_; ++i) {
      auto c = e->coords(e->element(i));
      bool sharp = true;
      for (std::size_t k = 0; k < c.size(); ++k)
        sharp = sharp && (c[k] == 0 || c[k] == orders[k]);
      if (sharp)
        p.sharp_set.push_back(e->element(i));
    }
    return e;
  }

  static AlgebraPtr table(const std::vector<std::string>& names, const std::vector<SumTriple>& sums,
                          const std::string& zero, const std::string& one) {
    auto fail = [](std::string axiom, std::vector<std::string> witness, const std::string& msg) {
      return AxiomViolation(std::move(axiom), std::move(witness), msg);
    };
    const std::size_t n = names.size();
    if (n < 2)
      throw fail("structure", {}, "table algebra needs at least the two elements 0 and 1");
    if (n > EffectAlgebra::max_table_size)
      throw fail("structure", {}, "table algebra exceeds " + std::to_string(EffectAlgebra::max_table_size) +
                                      " elements");

    // Element 0 is always the zero, so reorder names with zero first and keep the rest in order.
    std::vector<std::string> order;
    order.push_back(zero);
    for (const auto& nm : names)
      if (nm != zero)
        order.push_back(nm);
    std::unordered_map<std::string, std::uint32_t> index;
    for (std::uint32_t i = 0; i < order.size(); ++i)
      if (!index.emplace(order[i], i).second)
        throw fail("structure", {order[i]}, "duplicate element name '" + order[i] + "'");
    if (order.size() != n || !index.count(zero))
      throw fail("structure", {zero}, "zero '" + zero + "' is not among the elements");
    if (!index.count(one))
      throw fail("structure", {one}, "one '" + one + "' is not among the elements");
    if (zero == one)
      throw fail("structure", {zero}, "zero and one must differ");

    std::vector<std::int32_t> table(n * n, -1);
    auto at = [&](std::uint32_t a, std::uint32_t b) -> std::int32_t& { return table[a * n + b]; };
    auto lookup = [&](const std::string& s) {
      auto it = index.find(s);
      if (it == index.end())
        throw fail("structure", {s}, "sum triple mentions unknown element '" + s + "'");
      return it->second;
    };

    for (const auto& t : sums) {
      auto x = lookup(t.x), y = lookup(t.y), z = lookup(t.z);
      if (at(x, y) >= 0 && at(x, y) != std::int32_t(z))
        throw fail("functional", {t.x, t.y}, t.x + " + " + t.y + " is given two different values");
      at(x, y) = z;
    }
    // 0 is neutral; entries the table leaves out are filled in.
    for (std::uint32_t a = 0; a < n; ++a) {
      if (at(0, a) < 0)
        at(0, a) = a;
      if (at(a, 0) < 0)
        at(a, 0) = a;
    }
    // Symmetric closure; a disagreement between x+y and y+x violates commutativity.
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        if (at(a, b) < 0)
          continue;
        if (at(b, a) < 0)
          at(b, a) = at(a, b);
        else if (at(b, a) != at(a, b))
          throw fail("commutativity", {order[a], order[b]},
                     order[a] + " + " + order[b] + " differs from " + order[b] + " + " + order[a]);
      }

    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b)
        for (std::uint32_t c = 0; c < n; ++c) {
          std::int32_t ab = at(a, b), bc = at(b, c);
          std::int32_t l = ab >= 0 ? at(ab, c) : -1;
          std::int32_t r = bc >= 0 ? at(a, bc) : -1;
          if (l != r)
            throw fail("associativity", {order[a], order[b], order[c]},
                       "(" + order[a] + " + " + order[b] + ") + " + order[c] + " and " + order[a] + " + (" +
                           order[b] + " + " + order[c] + ") disagree");
        }

    const std::uint32_t one_idx = index.at(one);
    std::vector<std::uint32_t> comp(n);
    for (std::uint32_t a = 0; a < n; ++a) {
      std::vector<std::string> found;
      for (std::uint32_t b = 0; b < n; ++b)
        if (at(a, b) == std::int32_t(one_idx)) {
          found.push_back(order[b]);
          comp[a] = b;
        }
      if (found.size() != 1) {
        std::vector<std::string> w{order[a]};
        w.insert(w.end(), found.begin(), found.end());
        throw fail("complement", w,
                   found.empty() ? order[a] + " has no complement"
                                 : order[a] + " has " + std::to_string(found.size()) + " complements");
      }
    }
    for (std::uint32_t a = 1; a < n; ++a)
      if (at(a, one_idx) >= 0)
        throw fail("zero-one", {order[a]}, order[a] + " + " + one + " is defined but " + order[a] + " is not 0");

    std::shared_ptr<EffectAlgebra> e(new EffectAlgebra());
    e->kind_ = EffectAlgebra::Kind::table;
    e->size_ = n;
    e->one_index_ = one_idx;
    e->names_ = order;
    e->name_index_ = index;
    e->sum_ = table;
    e->complement_ = comp;

    std::string key = "table:";
    for (const auto& nm : order)
      key += nm + '\x1f';
    key += '\x1e' + one + '\x1e';
    for (auto v : table)
      key += std::to_string(v) + ",";
    e->fingerprint_ = fnv1a(fnv_basis, key);

    e->leq_.assign(n * n, 0);
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t c = 0; c < n; ++c)
        if (at(a, c) >= 0)
          e->leq_[a * n + at(a, c)] = 1;

    e->meet_.assign(n * n, -1);
    e->join_.assign(n * n, -1);
    auto le = [&](std::uint32_t a, std::uint32_t b) { return e->leq_[a * n + b] != 0; };
    for (std::uint32_t a = 0; a < n; ++a)
      for (std::uint32_t b = 0; b < n; ++b) {
        for (std::uint32_t g = 0; g < n; ++g) {
          if (!le(g, a) || !le(g, b))
            continue;
          bool greatest = true;
          for (std::uint32_t l = 0; l < n && greatest; ++l)
            if (le(l, a) && le(l, b) && !le(l, g))
              greatest = false;
          if (greatest) {
            e->meet_[a * n + b] = g;
            break;
          }
        }
        for (std::uint32_t g = 0; g < n; ++g) {
          if (!le(a, g) || !le(b, g))
            continue;
          bool least = true;
          for (std::uint32_t u = 0; u < n && least; ++u)
            if (le(a, u) && le(b, u) && !le(g, u))
              least = false;
          if (least) {
            e->join_[a * n + b] = g;
            break;
          }
        }
      }
    e->properties_ = check_properties(*e);
    return e;
  }
};

}  // namespace detail

/// The chain C(n) = {0, 1, ..., n}; a + b is defined iff a + b <= n.
inline AlgebraPtr make_chain(std::uint32_t n) {
  if (n == 0)
    throw std::invalid_argument("make_chain: order must be positive");
  return detail::AlgebraBuilder::product({n});
}

/// Coordinatewise product of product-of-chains algebras.
inline AlgebraPtr make_product(std::span<const AlgebraPtr> factors) {
  if (factors.empty())
    throw std::invalid_argument("make_product: empty factor list");
  std::vector<std::uint32_t> orders;
  for (const auto& f : factors) {
    if (!f || f->kind() != EffectAlgebra::Kind::product_chains)
      throw std::invalid_argument("make_product: factors must be products of chains");
    orders.insert(orders.end(), f->orders().begin(), f->orders().end());
  }
  return detail::AlgebraBuilder::product(orders);
}

inline AlgebraPtr make_product(std::initializer_list<AlgebraPtr> factors) {
  std::vector<AlgebraPtr> v(factors);
  return make_product(std::span<const AlgebraPtr>(v));
}

inline AlgebraPtr make_product_chains(const std::vector<std::uint32_t>& orders) {
  if (orders.empty())
    throw std::invalid_argument("make_product: empty factor list");
  return detail::AlgebraBuilder::product(orders);
}

/**
 * Validated table algebra.
 *
 * Each triple x + y = z also defines y + x = z, and 0 + a = a is added for
 * every a the table leaves out. Everything else not listed is undefined.
 * Throws AxiomViolation naming the failed axiom and witnessing elements.
 */
inline AlgebraPtr make_table(const std::vector<std::string>& elements, const std::vector<SumTriple>& sums,
                             const std::string& zero, const std::string& one) {
  return detail::AlgebraBuilder::table(elements, sums, zero, one);
}

/// The four-element diamond {0, a, b, 1} with a + a = b + b = 1.
inline AlgebraPtr make_diamond() {
  return make_table({"0", "a", "b", "1"}, {{"a", "a", "1"}, {"b", "b", "1"}}, "0", "1");
}

/// Horizontal sum of two four-element Boolean algebras sharing 0 and 1.
inline AlgebraPtr make_mo2() {
  return make_table({"0", "a", "a'", "b", "b'", "1"}, {{"a", "a'", "1"}, {"b", "b'", "1"}}, "0", "1");
}
}  // namespace obsalg

#endif  // OBSALG_EFFECT_ALGEBRA_HPP
