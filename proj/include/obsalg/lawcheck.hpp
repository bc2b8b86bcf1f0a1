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

#ifndef OBSALG_LAWCHECK_HPP
#define OBSALG_LAWCHECK_HPP

#include <array>
#include <iomanip>
#include <optional>
#include <sstream>
#include <string>
#include <string_view>
#include <vector>

#include "calculus.hpp"
#include "generate.hpp"
#include "io.hpp"

namespace obsalg {

enum class LawId {
  sum_comm,
  sum_assoc,
  sum_neutral,
  dense_inv,
  oracle_eq,
  olson_po,
  lattice_dist,
  translate_mono,
  los,
  sharp_char,
  sharp_group,
  strong_unit,
  q_add,
  q_char,
  sharp_iso,
  dedekind_fin,
  fcalc_add,
};

/// What a law quantifies over.
enum class LawDomain {
  observables,       ///< arbitrary observables
  sharp,             ///< sharp observables
  unit_sharp,        ///< sharp observables between o and q_1
  sharp_elements,    ///< pairs of sharp elements
  sharp_iso,         ///< pairs of sharp elements, then unit_sharp observables
  sharp_with_maps,   ///< a sharp observable and two finite maps on its support
};

struct LawInfo {
  LawId id;
  std::string_view name;
  std::size_t arity;
  LawDomain domain;
  bool needs_sum;
  std::string_view statement;
};

inline constexpr std::array<LawInfo, 17> law_catalog{{
    {LawId::sum_comm, "SUM-COMM", 2, LawDomain::observables, true, "x + y = y + x"},
    {LawId::sum_assoc, "SUM-ASSOC", 3, LawDomain::observables, true, "(x + y) + z = x + (y + z)"},
    {LawId::sum_neutral, "SUM-NEUTRAL", 1, LawDomain::observables, true, "x + o = o + x = x"},
    {LawId::dense_inv, "DENSE-INV", 2, LawDomain::observables, true,
     "sum over a dyadic grid equals sum over a triadic grid"},
    {LawId::oracle_eq, "ORACLE-EQ", 2, LawDomain::observables, true,
     "jump-list sum equals direct supremum over a fine grid"},
    {LawId::olson_po, "OLSON-PO", 3, LawDomain::observables, false,
     "Olson order is reflexive, antisymmetric, transitive"},
    {LawId::lattice_dist, "LATTICE-DIST", 3, LawDomain::observables, false,
     "observables form a distributive lattice; negation reverses it"},
    {LawId::translate_mono, "TRANSLATE-MONO", 3, LawDomain::observables, true, "x <= y implies x + z <= y + z"},
    {LawId::los, "LOS", 3, LawDomain::observables, true, "(x v y) + z = (x + z) v (y + z)"},
    {LawId::sharp_char, "SHARP-CHAR", 1, LawDomain::observables, false,
     "sharp masses <=> sharp cumulative values <=> every x(A) sharp"},
    {LawId::sharp_group, "SHARP-GROUP", 3, LawDomain::sharp, true,
     "sharp observables: closed under +, meet, join; x + (-x) = o; associative"},
    {LawId::strong_unit, "STRONG-UNIT", 1, LawDomain::sharp, true, "x <= n q_1 for the least integer n > max support"},
    {LawId::q_add, "Q-ADD", 2, LawDomain::sharp_elements, true, "q_a + q_b = q_(a+b) for sharp a, b"},
    {LawId::q_char, "Q-CHAR", 1, LawDomain::unit_sharp, false, "x v x' = q_1 iff x = q_a for a sharp a"},
    {LawId::sharp_iso, "SHARP-ISO", 2, LawDomain::sharp_iso, true,
     "a -> q_a is a bijection onto sharp questions preserving +, ' and v"},
    {LawId::dedekind_fin, "DEDEKIND-FIN", 4, LawDomain::sharp, false,
     "join of three sharp observables is their least upper bound"},
    {LawId::fcalc_add, "FCALC-ADD", 1, LawDomain::sharp_with_maps, true, "f o x + g o x = (f + g) o x for sharp x"},
}};

inline const LawInfo& law_info(LawId id) {
  for (const auto& l : law_catalog)
    if (l.id == id)
      return l;
  throw std::logic_error("law id missing from catalog");
}

inline std::string_view law_name(LawId id) { return law_info(id).name; }

inline std::optional<LawId> parse_law(std::string_view s) {
  for (const auto& l : law_catalog)
    if (l.name == s)
      return l.id;
  return std::nullopt;
}

inline std::vector<LawId> all_laws() {
  std::vector<LawId> v;
  for (const auto& l : law_catalog)
    v.push_back(l.id);
  return v;
}

/// Participants of one law instance.
struct LawInput {
  std::vector<Observable> obs;
  std::vector<Element> elems;
  std::vector<FiniteMap> maps;
};

struct Counterexample {
  LawId law;
  LawInput input;
  std::string detail;
  std::optional<Observable> lhs;
  std::optional<Observable> rhs;
  std::optional<Rational> probe;
  std::optional<Element> lhs_value;
  std::optional<Element> rhs_value;
};

struct LawOutcome {
  bool applicable = true;
  std::optional<Counterexample> failure;
};

struct EvalOptions {
  bool force = false;
};

namespace detail {

/// Records the first failure; every check after that is a no-op.
class LawEval {
public:
  LawEval(LawId law, const LawInput& in, EvalOptions opt) : law_(law), in_(in), opt_(opt) {}

  SumOptions sum_opts() const { return SumOptions{opt_.force}; }
  bool failed() const { return failure_.has_value(); }

  Observable sum(const Observable& x, const Observable& y) const { return obs_sum(x, y, sum_opts()); }

  void equal(const std::string& what, const Observable& lhs, const Observable& rhs) {
    if (failed() || lhs == rhs)
      return;
    Counterexample c = base(what);
    c.lhs = lhs;
    c.rhs = rhs;
    auto bl = resolution_of(lhs), br = resolution_of(rhs);
    SpectralResolution both[] = {bl, br};
    for (const auto& t : merged_breakpoints(both))
      if (bl(t) != br(t)) {
        c.probe = t;
        c.lhs_value = bl(t);
        c.rhs_value = br(t);
        break;
      }
    if (!c.probe) {
      // Resolutions agree on every breakpoint only if they differ past the last one.
      c.probe = std::max(lhs.max_point(), rhs.max_point()) + Rational(1);
      c.lhs_value = bl(*c.probe);
      c.rhs_value = br(*c.probe);
    }
    failure_ = std::move(c);
  }

  /// x precedes y in the Olson order; a failure records a probe t with
  /// B_y(t) not below B_x(t).
  void below(const std::string& what, const Observable& x, const Observable& y) {
    if (failed() || olson_leq(x, y))
      return;
    Counterexample c = base(what);
    c.lhs = x;
    c.rhs = y;
    auto bx = resolution_of(x), by = resolution_of(y);
    SpectralResolution both[] = {bx, by};
    const auto& e = *x.algebra();
    for (const auto& t : merged_breakpoints(both))
      if (!e.leq(by(t), bx(t))) {
        c.probe = t;
        c.lhs_value = bx(t);
        c.rhs_value = by(t);
        break;
      }
    failure_ = std::move(c);
  }

  void holds(const std::string& what, bool ok) {
    if (failed() || ok)
      return;
    failure_ = base(what);
  }

  void values(const std::string& what, const Rational& t, Element lhs, Element rhs) {
    if (failed() || lhs == rhs)
      return;
    Counterexample c = base(what);
    c.probe = t;
    c.lhs_value = lhs;
    c.rhs_value = rhs;
    failure_ = std::move(c);
  }

  LawOutcome done() { return LawOutcome{true, std::move(failure_)}; }

private:
  Counterexample base(const std::string& what) const {
    Counterexample c;
    c.law = law_;
    c.input = in_;
    c.detail = what;
    return c;
  }

  LawId law_;
  const LawInput& in_;
  EvalOptions opt_;
  std::optional<Counterexample> failure_;
};

inline bool in_unit_interval(const Observable& x) {
  return olson_leq(neutral(x.algebra()), x) && olson_leq(x, unit_question(x.algebra()));
}

}  // namespace detail

/**
 * Evaluates one law on one input. Laws with a restricted domain return
 * applicable = false when the input falls outside it.
 */
inline LawOutcome evaluate_law(LawId law, const LawInput& in, EvalOptions opt = {}) {
  detail::LawEval ev(law, in, opt);
  const auto& info = law_info(law);
  const auto& o = in.obs;
  AlgebraPtr e = !o.empty() ? o.front().algebra() : nullptr;
  if (!in.elems.empty() && !e)
    throw std::invalid_argument("element-based law input needs an observable to name the algebra");
  if (info.needs_sum)
    require_sum_allowed(*e, SumOptions{opt.force});
  auto need = [&](std::size_t n) {
    if (o.size() < n)
      throw std::invalid_argument(std::string(info.name) + " needs " + std::to_string(n) + " observables");
  };

  switch (law) {
  case LawId::sum_comm:
    need(2);
    ev.equal("x + y vs y + x", ev.sum(o[0], o[1]), ev.sum(o[1], o[0]));
    break;

  case LawId::sum_assoc:
    need(3);
    ev.equal("(x + y) + z vs x + (y + z)", ev.sum(ev.sum(o[0], o[1]), o[2]), ev.sum(o[0], ev.sum(o[1], o[2])));
    break;

  case LawId::sum_neutral: {
    need(1);
    auto zero = neutral(e);
    ev.equal("x + o vs x", ev.sum(o[0], zero), o[0]);
    ev.equal("o + x vs x", ev.sum(zero, o[0]), o[0]);
    break;
  }

  case LawId::oracle_eq: {
    need(2);
    auto probes = sum_probes(o[0], o[1]);
    auto grid = oracle_grid(o[0], o[1], probes, 2);
    auto oracle = sum_oracle(o[0], o[1], grid, probes);
    auto fast = sum_resolution(o[0], o[1], ev.sum_opts());
    for (std::size_t k = 0; k < probes.size(); ++k)
      ev.values("jump-list sum vs dyadic grid supremum", probes[k], fast(probes[k]), oracle.values[k]);
    if (!ev.failed())
      ev.holds("oracle samples reassemble the same resolution", oracle.to_resolution() == fast);
    break;
  }

  case LawId::dense_inv: {
    need(2);
    auto probes = sum_probes(o[0], o[1]);
    auto dy = sum_oracle(o[0], o[1], oracle_grid(o[0], o[1], probes, 2), probes);
    auto tri = sum_oracle(o[0], o[1], oracle_grid(o[0], o[1], probes, 3), probes);
    for (std::size_t k = 0; k < probes.size(); ++k)
      ev.values("dyadic grid vs triadic grid", probes[k], dy.values[k], tri.values[k]);
    break;
  }

  case LawId::olson_po: {
    need(3);
    const auto &x = o[0], &y = o[1], &z = o[2];
    ev.holds("reflexive: x <= x", olson_leq(x, x));
    bool xy = olson_leq(x, y), yx = olson_leq(y, x), yz = olson_leq(y, z);
    ev.holds("antisymmetric: x <= y and y <= x imply x = y", !(xy && yx) || x == y);
    if (xy && yz)
      ev.below("transitive: x <= y <= z implies x <= z", x, z);
    if (e->properties().is_lattice) {
      auto m = obs_meet(x, y), j = obs_join(x, y);
      ev.below("x ^ y <= x", m, x);
      ev.below("x <= x v y", x, j);
      ev.below("transitive on the chain x ^ y <= x <= x v y", m, j);
    }
    break;
  }

  case LawId::lattice_dist: {
    need(3);
    const auto &x = o[0], &y = o[1], &z = o[2];
    auto meet = [](const Observable& a, const Observable& b) { return obs_meet(a, b); };
    auto join = [](const Observable& a, const Observable& b) { return obs_join(a, b); };
    ev.equal("x ^ y vs y ^ x", meet(x, y), meet(y, x));
    ev.equal("x v y vs y v x", join(x, y), join(y, x));
    ev.equal("(x ^ y) ^ z vs x ^ (y ^ z)", meet(meet(x, y), z), meet(x, meet(y, z)));
    ev.equal("(x v y) v z vs x v (y v z)", join(join(x, y), z), join(x, join(y, z)));
    ev.equal("x ^ (x v y) vs x", meet(x, join(x, y)), x);
    ev.equal("x v (x ^ y) vs x", join(x, meet(x, y)), x);
    ev.holds("x ^ y is a lower and x v y an upper bound",
             olson_leq(meet(x, y), x) && olson_leq(meet(x, y), y) && olson_leq(x, join(x, y)) &&
                 olson_leq(y, join(x, y)));
    ev.equal("(x v y) ^ z vs (x ^ z) v (y ^ z)", meet(join(x, y), z), join(meet(x, z), meet(y, z)));
    ev.equal("(x ^ y) v z vs (x v z) ^ (y v z)", join(meet(x, y), z), meet(join(x, z), join(y, z)));
    ev.equal("-(-x) vs x", negate(negate(x)), x);
    ev.holds("x <= y iff -y <= -x", olson_leq(x, y) == olson_leq(negate(y), negate(x)));
    ev.equal("-(x v y) vs -x ^ -y", negate(join(x, y)), meet(negate(x), negate(y)));
    ev.equal("-(x ^ y) vs -x v -y", negate(meet(x, y)), join(negate(x), negate(y)));
    break;
  }

  case LawId::translate_mono: {
    need(3);
    const auto &x = o[0], &y = o[1], &z = o[2];
    // x ^ y lies below both, so the premise always holds for it.
    auto m = obs_meet(x, y);
    ev.below("x ^ y <= y implies (x ^ y) + z <= y + z", ev.sum(m, z), ev.sum(y, z));
    ev.below("x ^ y <= x implies (x ^ y) + z <= x + z", ev.sum(m, z), ev.sum(x, z));
    if (olson_leq(x, y))
      ev.below("x <= y implies x + z <= y + z", ev.sum(x, z), ev.sum(y, z));
    break;
  }

  case LawId::los: {
    need(3);
    const auto &x = o[0], &y = o[1], &z = o[2];
    ev.equal("(x v y) + z vs (x + z) v (y + z)", ev.sum(obs_join(x, y), z), obs_join(ev.sum(x, z), ev.sum(y, z)));
    break;
  }

  case LawId::sharp_char: {
    need(1);
    auto r = sharpness(o[0]);
    std::ostringstream msg;
    msg << "masses " << (r.masses ? "sharp" : "unsharp") << ", cumulatives " << (r.cumulatives ? "sharp" : "unsharp")
        << ", all x(A) " << (r.unions ? "sharp" : "unsharp");
    ev.holds(msg.str(), r.consistent());
    break;
  }

  case LawId::sharp_group: {
    need(3);
    const auto &x = o[0], &y = o[1], &z = o[2];
    if (!is_sharp_observable(x) || !is_sharp_observable(y) || !is_sharp_observable(z))
      return LawOutcome{false, {}};
    auto zero = neutral(e);
    ev.holds("x + y is sharp", is_sharp_observable(ev.sum(x, y)));
    ev.holds("x ^ y is sharp", is_sharp_observable(obs_meet(x, y)));
    ev.holds("x v y is sharp", is_sharp_observable(obs_join(x, y)));
    ev.holds("-x is sharp", is_sharp_observable(negate(x)));
    ev.equal("x + (-x) vs o", ev.sum(x, sharp_inverse(x)), zero);
    ev.equal("(-x) + x vs o", ev.sum(sharp_inverse(x), x), zero);
    ev.equal("(x + y) + z vs x + (y + z)", ev.sum(ev.sum(x, y), z), ev.sum(x, ev.sum(y, z)));
    break;
  }

  case LawId::strong_unit: {
    need(1);
    const auto& x = o[0];
    if (!is_sharp_observable(x))
      return LawOutcome{false, {}};
    auto q1 = unit_question(e);
    std::int64_t n = std::max<std::int64_t>(1, x.max_point().floor() + 1);
    ev.below("o <= q_1", neutral(e), q1);
    ev.below("x <= n q_1", x, scale(q1, n));
    ev.equal("n q_1 as f_n o q_1 vs n-fold sum", scale(q1, n), sum_n(q1, n, ev.sum_opts()));
    ev.holds("strong_unit_bound agrees", !ev.failed() && strong_unit_bound(x) == n);
    break;
  }

  case LawId::q_add: {
    if (in.elems.size() < 2)
      throw std::invalid_argument("Q-ADD needs two elements");
    Element a = in.elems[0], b = in.elems[1];
    auto s = e->sum(a, b);
    if (!e->is_sharp(a) || !e->is_sharp(b) || !s)
      return LawOutcome{false, {}};
    ev.equal("q_a + q_b vs q_(a+b)", ev.sum(question(e, a), question(e, b)), question(e, *s));
    break;
  }

  case LawId::q_char: {
    need(1);
    const auto& x = o[0];
    if (!is_sharp_observable(x) || !detail::in_unit_interval(x))
      return LawOutcome{false, {}};
    auto xc = compose(x, maps::one_minus());
    ev.holds("o <= x' <= q_1", detail::in_unit_interval(xc));
    bool top = obs_join(x, xc) == unit_question(e);
    Element a = x.mass_at(Rational(1));
    bool is_q = x == question(e, a) && e->is_sharp(a);
    ev.holds(top ? "x v x' = q_1 but x is not a sharp question" : "x is a sharp question but x v x' != q_1",
             top == is_q);
    break;
  }

  case LawId::sharp_iso: {
    if (in.elems.size() >= 2) {
      Element a = in.elems[0], b = in.elems[1];
      if (!e->is_sharp(a) || !e->is_sharp(b))
        return LawOutcome{false, {}};
      auto qa = question(e, a), qb = question(e, b);
      ev.holds("injective: a != b implies q_a != q_b", a == b || qa != qb);
      ev.equal("q_(a') vs (q_a)'", question(e, e->complement(a)), compose(qa, maps::one_minus()));
      ev.equal("q_(a v b) vs q_a v q_b", question(e, e->join_or_throw(a, b)), obs_join(qa, qb));
      if (auto s = e->sum(a, b))
        ev.equal("q_(a+b) vs q_a + q_b", question(e, *s), ev.sum(qa, qb));
      ev.holds("a <= b iff q_a <= q_b", e->leq(a, b) == olson_leq(qa, qb));
      break;
    }
    need(1);
    const auto& x = o[0];
    if (!is_sharp_observable(x) || !detail::in_unit_interval(x))
      return LawOutcome{false, {}};
    if (obs_join(x, compose(x, maps::one_minus())) != unit_question(e))
      return LawOutcome{false, {}};
    bool hit = false;
    for (Element a : e->sharp_set())
      hit = hit || question(e, a) == x;
    ev.holds("surjective: sharp x with x v x' = q_1 is some q_a", hit);
    break;
  }

  case LawId::dedekind_fin: {
    need(4);
    for (std::size_t i = 0; i < 4; ++i)
      if (!is_sharp_observable(o[i]))
        return LawOutcome{false, {}};
    std::vector<Observable> family(o.begin(), o.begin() + 3);
    auto j = obs_join(family);
    ev.holds("join is sharp", is_sharp_observable(j));
    ev.holds("join is an upper bound", olson_leq(o[0], j) && olson_leq(o[1], j) && olson_leq(o[2], j));
    ev.equal("join of the family vs iterated binary join", j, obs_join(obs_join(o[0], o[1]), o[2]));
    const auto& w = o[3];
    if (olson_leq(o[0], w) && olson_leq(o[1], w) && olson_leq(o[2], w))
      ev.below("join is below every upper bound", j, w);
    break;
  }

  case LawId::fcalc_add: {
    need(1);
    if (in.maps.size() < 2)
      throw std::invalid_argument("FCALC-ADD needs two maps");
    const auto& x = o[0];
    if (!is_sharp_observable(x))
      return LawOutcome{false, {}};
    auto f = maps::from_table(in.maps[0]);
    auto g = maps::from_table(in.maps[1]);
    ev.equal("f o x + g o x vs (f + g) o x", ev.sum(compose(x, f), compose(x, g)), compose(x, maps::add(f, g)));
    break;
  }
  }
  return ev.done();
}

/// Re-evaluates a counterexample; true if the law still fails on its inputs.
inline bool replay(const Counterexample& c, EvalOptions opt = {}) {
  return evaluate_law(c.law, c.input, opt).failure.has_value();
}

// ---------------------------------------------------------------------------
// Tuple streams

namespace detail {

/// Random finite maps on the support of x with values from grid.
inline std::vector<FiniteMap> random_maps(const Observable& x, const std::vector<Rational>& grid, Rng& rng) {
  std::vector<FiniteMap> out(2);
  for (auto& m : out)
    for (const auto& a : x.atoms())
      m.emplace(a.point, rng.pick(grid));
  return out;
}

inline std::vector<Rational> unit_grid(const std::vector<Rational>& grid) {
  std::set<Rational> s{Rational(0), Rational(1)};
  for (const auto& t : grid)
    if (Rational(0) <= t && t <= Rational(1))
      s.insert(t);
  return {s.begin(), s.end()};
}

inline MassFilter filter_for(LawDomain d) { return d == LawDomain::observables ? MassFilter::any : MassFilter::sharp; }

/// Observables an input of this domain is drawn from.
inline std::vector<Rational> grid_for(LawDomain d, const std::vector<Rational>& grid) {
  return d == LawDomain::unit_sharp || d == LawDomain::sharp_iso ? unit_grid(grid) : grid;
}

inline std::vector<LawInput> element_pairs(const AlgebraPtr& e) {
  std::vector<LawInput> out;
  for (Element a : e->sharp_set())
    for (Element b : e->sharp_set())
      out.push_back(LawInput{{neutral(e)}, {a, b}, {}});
  return out;
}

}  // namespace detail

/// Where law inputs come from.
struct TupleSource {
  std::vector<Rational> grid;
  std::size_t max_support = 3;
  std::uint64_t seed = 0;
  std::size_t samples = 100;
  bool exhaustive = false;
  /// Cap on tuples visited in exhaustive mode.
  std::size_t limit = 10'000'000;
};

/**
 * Calls visit(input) for each tuple of the law's domain until it returns
 * false. Exhaustive mode walks all tuples of the exhaustive pool in
 * lexicographic order; otherwise `samples` seeded random tuples are drawn.
 * Element-pair domains are always enumerated completely.
 */
inline void for_each_tuple(LawId law, const AlgebraPtr& e, const TupleSource& src,
                           const std::function<bool(const LawInput&)>& visit) {
  const auto& info = law_info(law);
  auto grid = detail::grid_for(info.domain, src.grid);
  auto filter = detail::filter_for(info.domain);
  Rng rng(mix_seed(src.seed, static_cast<std::uint64_t>(law)));

  if (info.domain == LawDomain::sharp_elements || info.domain == LawDomain::sharp_iso) {
    for (const auto& in : detail::element_pairs(e))
      if (!visit(in))
        return;
    if (info.domain == LawDomain::sharp_elements)
      return;
    for (const auto& x : enumerate_observables(e, grid, std::min<std::size_t>(src.max_support, 2), filter))
      if (!visit(LawInput{{x}, {}, {}}))
        return;
    return;
  }

  const std::size_t arity = info.arity;
  if (src.exhaustive) {
    auto pool = enumerate_observables(e, grid, src.max_support, filter);
    if (pool.empty())
      return;
    std::vector<std::size_t> ix(arity, 0);
    std::size_t visited = 0;
    while (visited < src.limit) {
      LawInput in;
      for (auto i : ix)
        in.obs.push_back(pool[i]);
      if (info.domain == LawDomain::sharp_with_maps)
        in.maps = detail::random_maps(in.obs[0], src.grid, rng);
      ++visited;
      if (!visit(in))
        return;
      std::size_t k = arity;
      while (k > 0 && ++ix[k - 1] == pool.size())
        ix[--k] = 0;
      if (k == 0)
        return;
    }
    return;
  }

  for (std::size_t s = 0; s < src.samples; ++s) {
    LawInput in;
    for (std::size_t i = 0; i < arity; ++i)
      in.obs.push_back(random_observable(e, grid, src.max_support, rng, filter));
    if (info.domain == LawDomain::sharp_with_maps)
      in.maps = detail::random_maps(in.obs[0], src.grid, rng);
    if (!visit(in))
      return;
  }
}

// ---------------------------------------------------------------------------
// Suite runner

struct LawSuiteConfig {
  std::vector<LawId> laws = all_laws();
  std::size_t sample_count = 100;
  std::uint64_t seed = 0;
  GridSpec grid;
  std::size_t max_support = 3;
  bool exhaustive = false;
  bool force = false;

  void validate() const {
    if (sample_count < 1)
      throw std::invalid_argument("sample_count must be at least 1");
    if (grid.denominator < 1)
      throw std::invalid_argument("grid denominator must be at least 1");
    if (!(grid.lo < grid.hi))
      throw std::invalid_argument("grid needs lo < hi");
    if (max_support < 1)
      throw std::invalid_argument("max_support must be at least 1");
  }
};

struct LawResult {
  LawId law;
  std::size_t checked = 0;
  std::size_t passed = 0;
  std::optional<Counterexample> first_counterexample;

  bool ok() const { return checked == passed; }
};

struct LawReport {
  AlgebraPtr algebra;
  LawSuiteConfig config;
  std::vector<LawResult> results;

  bool all_passed() const {
    return std::all_of(results.begin(), results.end(), [](const LawResult& r) { return r.ok(); });
  }
  const LawResult& result(LawId id) const {
    for (const auto& r : results)
      if (r.law == id)
        return r;
    throw std::out_of_range("law not in report");
  }
};

inline void require_laws_allowed(const EffectAlgebra& e, const std::vector<LawId>& laws, bool force) {
  if (!e.properties().is_lattice)
    throw UnsupportedAlgebra("law suites require a lattice effect algebra");
  if (force || e.properties().distributive)
    return;
  for (auto id : laws)
    if (law_info(id).needs_sum)
      throw DistributivityRequired(std::string(law_name(id)) +
                                   " needs the sum, which requires the distributive laws; use force to override");
}

/// Evaluates one law on its tuple stream.
inline LawResult run_law(const AlgebraPtr& e, LawId law, const TupleSource& src, EvalOptions opt) {
  LawResult r;
  r.law = law;
  for_each_tuple(law, e, src, [&](const LawInput& in) {
    auto out = evaluate_law(law, in, opt);
    if (!out.applicable)
      return true;
    ++r.checked;
    if (out.failure) {
      if (!r.first_counterexample)
        r.first_counterexample = std::move(out.failure);
    } else {
      ++r.passed;
    }
    return true;
  });
  return r;
}

inline LawReport run_suite(const AlgebraPtr& e, const LawSuiteConfig& cfg) {
  cfg.validate();
  require_laws_allowed(*e, cfg.laws, cfg.force);
  TupleSource src{cfg.grid.points(), cfg.max_support, cfg.seed, cfg.sample_count, cfg.exhaustive};
  LawReport rep{e, cfg, {}};
  for (auto id : cfg.laws)
    rep.results.push_back(run_law(e, id, src, EvalOptions{cfg.force}));
  return rep;
}

// ---------------------------------------------------------------------------
// Counterexample search

/// One searched stratum: every tuple over this grid and support bound.
struct SearchStratum {
  std::vector<Rational> grid;
  std::size_t max_support;
  std::size_t tuples = 0;
  bool complete = false;
};

struct SearchResult {
  LawId law;
  std::optional<Counterexample> counterexample;
  std::vector<SearchStratum> strata;
  std::size_t random_tuples = 0;
  /// Stratum the random phase draws from.
  SearchStratum random_stratum;
  std::uint64_t seed = 0;
  std::size_t examined = 0;
  std::size_t budget = 0;
};

struct SearchOptions {
  bool force = false;
  std::uint64_t seed = 0;
};

/// Grid of the random phase: finer than every exhaustive stratum.
inline SearchStratum random_phase_stratum() { return {GridSpec{4, Rational(-2), Rational(3)}.points(), 4}; }

/// Exhaustive strata searched in order: small grids and supports first.
inline std::vector<SearchStratum> default_strata() {
  auto ints = [](std::int64_t lo, std::int64_t hi) {
    std::vector<Rational> g;
    for (auto i = lo; i <= hi; ++i)
      g.push_back(Rational(i));
    return g;
  };
  return {
      {ints(0, 1), 2},
      {ints(0, 2), 3},
      {ints(-1, 2), 3},
      {ints(-1, 3), 3},
      {GridSpec{2, Rational(-1), Rational(1)}.points(), 3},
      {ints(-2, 3), 4},
  };
}

/**
 * Exhaustive-first search: walks each stratum completely while budget
 * remains, then spends the rest on seeded random tuples over a finer grid.
 * A result without counterexample records exactly what was searched.
 */
inline SearchResult search_counterexample(const AlgebraPtr& e, LawId law, std::size_t budget,
                                          SearchOptions opt = {}) {
  require_laws_allowed(*e, {law}, opt.force);
  SearchResult res;
  res.law = law;
  res.seed = opt.seed;
  res.budget = budget;
  EvalOptions ev{opt.force};

  auto examine = [&](const LawInput& in) {
    if (res.examined >= budget)
      return false;
    ++res.examined;
    auto out = evaluate_law(law, in, ev);
    if (out.failure) {
      res.counterexample = std::move(out.failure);
      return false;
    }
    return true;
  };

  const auto domain = law_info(law).domain;
  auto strata = default_strata();
  for (auto& st : strata) {
    if (res.examined >= budget || res.counterexample)
      break;
    std::size_t before = res.examined;
    bool finished = true;
    TupleSource src{st.grid, st.max_support, opt.seed, 0, true, budget};
    for_each_tuple(law, e, src, [&](const LawInput& in) {
      bool go = examine(in);
      if (!go)
        finished = false;
      return go;
    });
    st.tuples = res.examined - before;
    st.complete = finished && !res.counterexample;
    res.strata.push_back(st);
    // Element pairs are enumerated in full by the first stratum.
    if (domain == LawDomain::sharp_elements && st.complete)
      return res;
  }

  if (!res.counterexample && res.examined < budget && domain != LawDomain::sharp_elements) {
    res.random_stratum = random_phase_stratum();
    TupleSource src{res.random_stratum.grid, res.random_stratum.max_support, opt.seed, budget - res.examined, false};
    std::size_t before = res.examined;
    for_each_tuple(law, e, src, examine);
    res.random_tuples = res.examined - before;
  }
  return res;
}

// ---------------------------------------------------------------------------
// Serialization

inline json counterexample_to_json(const Counterexample& c) {
  json j;
  j["law"] = std::string(law_name(c.law));
  j["detail"] = c.detail;
  json obs = json::array();
  for (const auto& x : c.input.obs)
    obs.push_back(observable_to_json(x));
  j["inputs"] = obs;
  const EffectAlgebra* e = c.input.obs.empty() ? nullptr : c.input.obs.front().algebra().get();
  json els = json::array();
  for (auto a : c.input.elems)
    els.push_back(element_to_json(*e, a));
  j["elements"] = els;
  json ms = json::array();
  for (const auto& m : c.input.maps) {
    json pairs = json::array();
    for (const auto& [k, v] : m)
      pairs.push_back({k.str(), v.str()});
    ms.push_back(pairs);
  }
  j["maps"] = ms;
  j["lhs"] = c.lhs ? observable_to_json(*c.lhs)["points"] : json();
  j["rhs"] = c.rhs ? observable_to_json(*c.rhs)["points"] : json();
  j["probe"] = c.probe ? json(c.probe->str()) : json();
  j["lhs_value"] = c.lhs_value ? element_to_json(*e, *c.lhs_value) : json();
  j["rhs_value"] = c.rhs_value ? element_to_json(*e, *c.rhs_value) : json();
  return j;
}

/// Reads back the replayable part of a counterexample (law and inputs).
inline Counterexample counterexample_from_json(const json& j) {
  Counterexample c;
  auto law = parse_law(detail::as_string(detail::field(j, "law", ""), "law"));
  if (!law)
    throw ParseError("law", "unknown law id");
  c.law = *law;
  c.detail = j.value("detail", "");
  for (const auto& x : detail::field(j, "inputs", ""))
    c.input.obs.push_back(observable_from_json(x));
  if (j.contains("elements") && !j["elements"].empty()) {
    if (c.input.obs.empty())
      throw ParseError("elements", "element inputs need an observable naming the algebra");
    for (const auto& a : j["elements"])
      c.input.elems.push_back(element_from_json(*c.input.obs.front().algebra(), a, "elements"));
  }
  if (j.contains("maps"))
    for (const auto& m : j["maps"]) {
      FiniteMap fm;
      for (const auto& p : m)
        fm.emplace(rational_from_json(p.at(0), "maps"), rational_from_json(p.at(1), "maps"));
      c.input.maps.push_back(std::move(fm));
    }
  return c;
}

inline json suite_config_to_json(const LawSuiteConfig& cfg) {
  json laws = json::array();
  for (auto id : cfg.laws)
    laws.push_back(std::string(law_name(id)));
  return json{{"laws", laws},
              {"samples", cfg.sample_count},
              {"seed", cfg.seed},
              {"grid", {{"denominator", cfg.grid.denominator}, {"lo", cfg.grid.lo.str()}, {"hi", cfg.grid.hi.str()}}},
              {"max_support", cfg.max_support},
              {"exhaustive", cfg.exhaustive},
              {"force", cfg.force}};
}

inline json report_to_json(const LawReport& rep) {
  json laws = json::array();
  for (const auto& r : rep.results) {
    laws.push_back({{"id", std::string(law_name(r.law))},
                    {"checked", r.checked},
                    {"passed", r.passed},
                    {"counterexample",
                     r.first_counterexample ? counterexample_to_json(*r.first_counterexample) : json()}});
  }
  json j{{"algebra", algebra_to_json(*rep.algebra)},
         {"classification", properties_to_json(*rep.algebra)},
         {"config", suite_config_to_json(rep.config)},
         {"laws", laws},
         {"status", rep.all_passed() ? "pass" : "fail"}};
  if (rep.config.force && !sum_is_guaranteed(*rep.algebra))
    j["note"] = "forced: algebra lacks the distributive laws, sum laws not guaranteed";
  return j;
}

inline json search_to_json(const SearchResult& s, const EffectAlgebra& e) {
  json strata = json::array();
  for (const auto& st : s.strata) {
    json g = json::array();
    for (const auto& t : st.grid)
      g.push_back(t.str());
    strata.push_back({{"grid", g}, {"max_support", st.max_support}, {"tuples", st.tuples}, {"complete", st.complete}});
  }
  json j{{"algebra", algebra_to_json(e)},
         {"classification", properties_to_json(e)},
         {"law", std::string(law_name(s.law))},
         {"budget", s.budget},
         {"seed", s.seed},
         {"examined", s.examined},
         {"strata", strata},
         {"random_tuples", s.random_tuples}};
  if (s.random_tuples > 0) {
    const auto& g = s.random_stratum.grid;
    j["random_phase"] = {{"grid_lo", g.front().str()},
                         {"grid_hi", g.back().str()},
                         {"grid_points", g.size()},
                         {"max_support", s.random_stratum.max_support}};
  }
  if (s.counterexample) {
    j["status"] = "counterexample";
    j["counterexample"] = counterexample_to_json(*s.counterexample);
  } else {
    j["status"] = "none-found";
  }
  return j;
}

inline std::string report_to_table(const LawReport& rep) {
  std::ostringstream os;
  const auto& p = rep.algebra->properties();
  os << "algebra: " << algebra_to_json(*rep.algebra).dump() << "\n";
  os << "lattice=" << p.is_lattice << " distributive=" << p.distributive << " rdp=" << p.has_rdp
     << " mv=" << p.is_mv << " boolean=" << p.is_boolean << "  seed=" << rep.config.seed
     << " samples=" << rep.config.sample_count << (rep.config.exhaustive ? " exhaustive" : "")
     << (rep.config.force ? " forced" : "") << "\n";
  os << std::left << std::setw(16) << "law" << std::right << std::setw(9) << "checked" << std::setw(9) << "passed"
     << "  status\n";
  for (const auto& r : rep.results) {
    os << std::left << std::setw(16) << law_name(r.law) << std::right << std::setw(9) << r.checked << std::setw(9)
       << r.passed << "  " << (r.ok() ? "ok" : "FAIL");
    if (r.first_counterexample)
      os << "  (" << r.first_counterexample->detail << ")";
    os << "\n";
  }
  os << (rep.all_passed() ? "all laws hold\n" : "violations found\n");
  return os.str();
}

}  // namespace obsalg

#endif  // OBSALG_LAWCHECK_HPP
