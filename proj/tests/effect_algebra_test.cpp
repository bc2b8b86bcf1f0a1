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


#include <gtest/gtest.h>

#include <set>

#include "support.hpp"

namespace {

using namespace obsalg;
using obsalg::testing::el;
using obsalg::testing::sample_algebras;

TEST(ChainTest, ElementsAndSums) {
  auto c2 = make_chain(2);
  EXPECT_EQ(c2->size(), 3u);
  EXPECT_EQ(c2->sum(el(c2, 1), el(c2, 1)), el(c2, 2));
  EXPECT_FALSE(c2->sum(el(c2, 2), el(c2, 1)).has_value());
  EXPECT_EQ(c2->complement(el(c2, 1)), el(c2, 1));
  EXPECT_EQ(c2->complement(el(c2, 0)), el(c2, 2));
  EXPECT_EQ(c2->diff(el(c2, 1), el(c2, 2)), el(c2, 1));
  EXPECT_THROW(c2->diff(el(c2, 2), el(c2, 1)), std::invalid_argument);
  EXPECT_THROW(make_chain(0), std::invalid_argument);
}

TEST(ChainTest, TwoElementChainIsBoolean) {
  auto c1 = make_chain(1);
  EXPECT_EQ(c1->size(), 2u);
  EXPECT_TRUE(c1->properties().is_boolean);
  EXPECT_TRUE(c1->properties().is_orthoalgebra);
}

TEST(ChainTest, ClassificationAndSharpSet) {
  auto c2 = make_chain(2);
  const auto& p = c2->properties();
  EXPECT_TRUE(p.is_mv);
  EXPECT_TRUE(p.has_rdp);
  EXPECT_FALSE(p.is_boolean);
  EXPECT_EQ(p.sharp_set, (std::vector<Element>{el(c2, 0), el(c2, 2)}));
  EXPECT_FALSE(c2->is_sharp(el(c2, 1)));
}

TEST(ChainTest, CompareOnChain) {
  auto c2 = make_chain(2);
  auto c = c2->compare(el(c2, 1), el(c2, 2));
  EXPECT_TRUE(c.leq);
  EXPECT_FALSE(c.geq);
  EXPECT_EQ(c.meet, el(c2, 1));
  EXPECT_EQ(c.join, el(c2, 2));
}

TEST(ChainTest, MvOperations) {
  auto c2 = make_chain(2);
  auto ops = c2->mv_ops(el(c2, 1), el(c2, 2));
  EXPECT_EQ(ops.oplus, el(c2, 2));
  EXPECT_EQ(ops.odot, el(c2, 1));
  EXPECT_THROW(make_diamond()->mv_ops(make_diamond()->zero(), make_diamond()->one()), UnsupportedAlgebra);
}

TEST(ProductTest, Construction) {
  auto b = make_product({make_chain(1), make_chain(1)});
  EXPECT_EQ(b->size(), 4u);
  EXPECT_TRUE(b->properties().is_boolean);
  EXPECT_EQ(b->properties().sharp_set.size(), 4u);
  EXPECT_EQ(*make_product({make_chain(2)}), *make_chain(2));
  auto p = make_product({make_chain(1), make_chain(2)});
  EXPECT_EQ(p->complement(el(p, {1, 0})), el(p, {0, 2}));
  EXPECT_EQ(b->complement(el(b, {1, 0})), el(b, {0, 1}));
  EXPECT_THROW(make_product(std::initializer_list<AlgebraPtr>{}), std::invalid_argument);
  EXPECT_THROW(make_product({make_chain(1), make_diamond()}), std::invalid_argument);
}

TEST(ProductTest, CompareIsCoordinatewise) {
  auto b = make_product_chains({1, 1});
  auto c = b->compare(el(b, {1, 0}), el(b, {0, 1}));
  EXPECT_FALSE(c.leq);
  EXPECT_FALSE(c.geq);
  EXPECT_EQ(c.meet, el(b, {0, 0}));
  EXPECT_EQ(c.join, el(b, {1, 1}));
}

TEST(ProductTest, CoordinatesRoundTrip) {
  auto p = make_product_chains({2, 3, 1});
  for (auto a : p->elements())
    EXPECT_EQ(p->from_coords(p->coords(a)), a);
  EXPECT_EQ(p->name(el(p, {2, 0, 1})), "(2,0,1)");
  std::vector<std::uint32_t> bad{3, 0, 0};
  EXPECT_THROW(p->from_coords(bad), std::invalid_argument);
}

TEST(TableTest, Diamond) {
  auto d = make_diamond();
  const auto& p = d->properties();
  EXPECT_TRUE(p.is_lattice);
  EXPECT_TRUE(p.distributive);
  EXPECT_FALSE(p.has_rdp);
  EXPECT_FALSE(p.is_mv);
  EXPECT_FALSE(p.is_orthoalgebra);
  EXPECT_FALSE(p.is_boolean);
  EXPECT_EQ(p.sharp_set, (std::vector<Element>{d->zero(), d->one()}));
  EXPECT_FALSE(d->sum(d->by_name("a"), d->by_name("b")).has_value());
  EXPECT_EQ(d->complement(d->by_name("a")), d->by_name("a"));
}

TEST(TableTest, DiamondRdpWitness) {
  auto d = make_diamond();
  auto w = find_rdp_failure(*d);
  ASSERT_TRUE(w.has_value());
  std::set<std::string> names{d->name(w->a1), d->name(w->a2), d->name(w->b1), d->name(w->b2)};
  EXPECT_EQ(names, (std::set<std::string>{"a", "b"}));
}

TEST(TableTest, Mo2) {
  auto m = make_mo2();
  const auto& p = m->properties();
  EXPECT_TRUE(p.is_lattice);
  EXPECT_FALSE(p.distributive);
  EXPECT_FALSE(p.has_rdp);
  EXPECT_FALSE(p.is_mv);
  EXPECT_TRUE(p.is_orthoalgebra);
  EXPECT_FALSE(p.is_boolean);
  EXPECT_EQ(p.sharp_set.size(), 6u);
  EXPECT_EQ(m->meet(m->by_name("a"), m->by_name("b")), m->zero());
  EXPECT_EQ(m->join(m->by_name("a"), m->by_name("b")), m->one());
  EXPECT_TRUE(find_distributivity_failure(*m).has_value());
}

TEST(TableTest, RejectsIdempotentSum) {
  try {
    make_table({"0", "a", "1"}, {{"a", "a", "a"}}, "0", "1");
    FAIL() << "accepted a + a = a";
  } catch (const AxiomViolation& v) {
    EXPECT_NE(v.axiom(), "structure");
  }
}

TEST(TableTest, ReportsMissingComplement) {
  try {
    make_table({"0", "a", "b", "1"}, {{"a", "a", "1"}}, "0", "1");
    FAIL() << "accepted b without complement";
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "complement");
    EXPECT_EQ(v.witness(), (std::vector<std::string>{"b"}));
  }
}

TEST(TableTest, ReportsAssociativityFailure) {
  try {
    make_table({"0", "a", "b", "1"}, {{"a", "a", "b"}, {"b", "b", "1"}}, "0", "1");
    FAIL() << "accepted (a + a) + b defined with a + b undefined";
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "associativity");
    EXPECT_FALSE(v.witness().empty());
  }
}

TEST(TableTest, ReportsCommutativityConflict) {
  try {
    make_table({"0", "a", "b", "c", "1"}, {{"a", "b", "c"}, {"b", "a", "1"}}, "0", "1");
    FAIL() << "accepted a + b != b + a";
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "commutativity");
  }
}

TEST(TableTest, ReportsFunctionalConflict) {
  try {
    make_table({"0", "a", "1"}, {{"a", "a", "1"}, {"a", "a", "0"}}, "0", "1");
    FAIL();
  } catch (const AxiomViolation& v) {
    EXPECT_EQ(v.axiom(), "functional");
  }
}

TEST(TableTest, StructuralErrors) {
  EXPECT_THROW(make_table({"0", "1", "1"}, {}, "0", "1"), AxiomViolation);
  EXPECT_THROW(make_table({"0", "1"}, {{"0", "x", "1"}}, "0", "1"), AxiomViolation);
  EXPECT_THROW(make_table({"0", "1"}, {}, "0", "0"), AxiomViolation);
}

TEST(TableTest, TableOfChainMatchesChain) {
  auto t = make_table({"0", "1", "2"}, {{"1", "1", "2"}}, "0", "2");
  EXPECT_EQ(t->properties().is_mv, true);
  EXPECT_EQ(t->properties().sharp_set.size(), 2u);
}

TEST(ElementTest, ForeignElementsRejected) {
  auto c2 = make_chain(2);
  auto c3 = make_chain(3);
  EXPECT_THROW(c2->sum(el(c3, 1), el(c2, 1)), AlgebraMismatch);
  EXPECT_THROW(c2->complement(el(c3, 1)), AlgebraMismatch);
  // Structurally identical algebras share elements.
  EXPECT_EQ(c2->sum(el(make_chain(2), 1), el(c2, 1)), el(c2, 2));
}

// ---------------------------------------------------------------------------
// Exhaustive properties on every sample algebra

class AlgebraLaws : public ::testing::TestWithParam<std::size_t> {
protected:
  AlgebraPtr e = sample_algebras()[GetParam()];
};

TEST_P(AlgebraLaws, Axioms) {
  auto els = e->elements();
  for (auto a : els) {
    EXPECT_EQ(e->sum(a, e->zero()), a);
    EXPECT_EQ(e->sum(a, e->complement(a)), e->one());
    if (e->sum(a, e->one())) {
      EXPECT_EQ(a, e->zero());
    }
    std::size_t complements = 0;
    for (auto b : els) {
      EXPECT_EQ(e->sum(a, b), e->sum(b, a));
      complements += e->sum(a, b) == e->one();
      for (auto c : els) {
        auto ab = e->sum(a, b);
        auto bc = e->sum(b, c);
        auto l = ab ? e->sum(*ab, c) : std::nullopt;
        auto r = bc ? e->sum(a, *bc) : std::nullopt;
        if (l || r) {
          EXPECT_EQ(l, r);
        }
      }
    }
    EXPECT_EQ(complements, 1u);
  }
}

TEST_P(AlgebraLaws, OrderCoherence) {
  for (auto a : e->elements()) {
    EXPECT_EQ(e->complement(e->complement(a)), a);
    for (auto b : e->elements()) {
      bool defined = false;
      for (auto c : e->elements())
        defined = defined || e->sum(a, c) == b;
      EXPECT_EQ(e->leq(a, b), defined);
      if (e->leq(a, b)) {
        EXPECT_EQ(e->sum(a, e->diff(a, b)), b);
        EXPECT_TRUE(e->leq(e->complement(b), e->complement(a)));
      }
      auto m = e->meet(a, b);
      auto j = e->join(a, b);
      if (m) {
        EXPECT_TRUE(e->leq(*m, a) && e->leq(*m, b));
        for (auto c : e->elements())
          if (e->leq(c, a) && e->leq(c, b)) {
            EXPECT_TRUE(e->leq(c, *m));
          }
      }
      if (j) {
        EXPECT_TRUE(e->leq(a, *j) && e->leq(b, *j));
        for (auto c : e->elements())
          if (e->leq(a, c) && e->leq(b, c)) {
            EXPECT_TRUE(e->leq(*j, c));
          }
      }
    }
  }
}

TEST_P(AlgebraLaws, ClassificationSoundness) {
  const auto& p = e->properties();
  EXPECT_EQ(p, check_properties(*e));
  EXPECT_EQ(p.is_mv, p.is_lattice && p.has_rdp);
  if (p.is_boolean) {
    EXPECT_TRUE(p.is_mv);
    EXPECT_EQ(p.sharp_set.size(), e->size());
  }
  std::set<std::uint32_t> sharp;
  for (auto a : p.sharp_set)
    sharp.insert(a.index());
  EXPECT_TRUE(sharp.count(e->zero().index()));
  EXPECT_TRUE(sharp.count(e->one().index()));
  for (auto a : p.sharp_set)
    EXPECT_TRUE(sharp.count(e->complement(a).index()));
}

/// The chains and products among the samples: MV, hence with RDP.
class MvAlgebraLaws : public ::testing::TestWithParam<std::size_t> {
protected:
  AlgebraPtr e = sample_algebras()[GetParam()];
};

TEST_P(MvAlgebraLaws, MvIdentities) {
  ASSERT_TRUE(e->properties().is_mv);
  for (auto a : e->elements()) {
    EXPECT_EQ(e->mv_ops(a, e->zero()).oplus, a);
    EXPECT_EQ(e->mv_ops(a, e->complement(a)).oplus, e->one());
    EXPECT_EQ(e->mv_ops(a, e->one()).oplus, e->one());
    for (auto b : e->elements()) {
      EXPECT_EQ(e->mv_ops(a, b).oplus, e->mv_ops(b, a).oplus);
      auto lhs = e->mv_ops(e->complement(e->mv_ops(e->complement(a), b).oplus), b).oplus;
      auto rhs = e->mv_ops(e->complement(e->mv_ops(e->complement(b), a).oplus), a).oplus;
      EXPECT_EQ(lhs, rhs);
    }
  }
}

TEST_P(MvAlgebraLaws, SharpSetIsBoolean) {
  ASSERT_TRUE(e->properties().has_rdp);
  const auto& s = e->sharp_set();
  auto in = [&](Element a) { return std::find(s.begin(), s.end(), a) != s.end(); };
  for (auto a : s) {
    EXPECT_TRUE(in(e->complement(a)));
    for (auto b : s) {
      EXPECT_TRUE(in(e->meet_or_throw(a, b)));
      EXPECT_TRUE(in(e->join_or_throw(a, b)));
      if (auto ab = e->sum(a, b)) {
        EXPECT_TRUE(in(*ab));
      }
      // Boolean: summable exactly when disjoint
      EXPECT_EQ(e->sum(a, b).has_value(), e->meet_or_throw(a, b) == e->zero());
      for (auto c : s)
        EXPECT_EQ(e->meet_or_throw(a, e->join_or_throw(b, c)),
                  e->join_or_throw(e->meet_or_throw(a, b), e->meet_or_throw(a, c)));
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Samples, AlgebraLaws, ::testing::Range<std::size_t>(0, sample_algebras().size()));
INSTANTIATE_TEST_SUITE_P(Samples, MvAlgebraLaws, ::testing::Range<std::size_t>(0, 8));

TEST(ClassificationTest, ChainsAndBooleanPowers) {
  for (std::uint32_t n = 1; n <= 8; ++n) {
    auto p = check_properties(*make_chain(n));
    EXPECT_TRUE(p.is_mv && p.has_rdp) << n;
  }
  for (std::size_t k = 1; k <= 4; ++k) {
    auto p = check_properties(*make_product_chains(std::vector<std::uint32_t>(k, 1)));
    EXPECT_TRUE(p.is_boolean && p.is_orthoalgebra) << k;
  }
}

}  // namespace
