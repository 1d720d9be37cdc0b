#include <gtest/gtest.h>

#include <vector>

#include "microlog/oracle.hpp"
#include "microlog/prover.hpp"
#include "microlog/syntax.hpp"
#include "support/generators.hpp"
#include "support/reference_mp.hpp"

namespace microlog {
namespace {

const PropId p("p");
const PropId q("q");
const PropId r("r");
const PropId s("s");
const Formula P = Formula::pro(p);
const Formula Q = Formula::pro(q);
const Formula F = Formula::falsity();
const Formula kIdentity = Formula::imp(P, P);
const Formula kPeirce = Formula::imp(Formula::imp(Formula::imp(P, Q), P), P);

using R = RuleName;

std::vector<int> clause_numbers(const Derivation& d) {
  std::vector<int> out;
  for (RuleName rule : rule_sequence(d)) out.push_back(clause_number(rule));
  return out;
}

TEST(MemberTest, Examples) {
  EXPECT_FALSE(member(p, List<PropId>{}));
  EXPECT_TRUE(member(q, List<PropId>{p, q, r}));
  EXPECT_FALSE(member(s, List<PropId>{p, q, r}));
}

TEST(CommonTest, Examples) {
  EXPECT_FALSE(common(List<PropId>{p, q}, List<PropId>{}));
  EXPECT_TRUE(common(List<PropId>{p}, List<PropId>{p}));
  EXPECT_FALSE(common(List<PropId>{p, q}, List<PropId>{r, s}));
}

TEST(CommonTest, AgreesWithSetIntersection) {
  testing::Rng rng(3);
  auto pool = testing::atom_pool(5);
  for (int n = 0; n < 2000; ++n) {
    std::vector<PropId> xs, ys;
    for (auto k = testing::uniform(rng, 0, 4); k > 0; --k) xs.push_back(pool[testing::uniform(rng, 0, 4)]);
    for (auto k = testing::uniform(rng, 0, 4); k > 0; --k) ys.push_back(pool[testing::uniform(rng, 0, 4)]);
    bool shared = false;
    for (const auto& x : xs)
      for (const auto& y : ys) shared = shared || x == y;
    ASSERT_EQ(common(xs, ys), shared);
    ASSERT_EQ(common(List<PropId>::from_range(xs), List<PropId>::from_range(ys)), shared);
  }
}

TEST(MpTest, Examples) {
  EXPECT_TRUE(mp(Sequent{{}, {}, {F}, {}}));
  EXPECT_TRUE(mp(Sequent{{p}, {p}, {}, {}}));
  EXPECT_FALSE(mp(Sequent{{}, {}, {}, {P}}));
}

TEST(ProveTest, Examples) {
  EXPECT_TRUE(prove(kIdentity));
  EXPECT_FALSE(prove(F));
  EXPECT_TRUE(prove(kPeirce));
}

TEST(ExpandTest, EachSequentShapeSelectsOneRule) {
  EXPECT_EQ(expand(Sequent{{}, {}, {P}, {}}).rule, R::LShiftPro);
  EXPECT_EQ(expand(Sequent{{}, {}, {P}, {Q}}).rule, R::RShiftPro);
  EXPECT_EQ(expand(Sequent{{}, {}, {F, P}, {}}).rule, R::LFalsityAxiom);
  EXPECT_EQ(expand(Sequent{{}, {}, {F}, {F}}).rule, R::RFalsityDrop);
  EXPECT_EQ(expand(Sequent{{}, {}, {kIdentity}, {}}).rule, R::LImpBranch);
  EXPECT_EQ(expand(Sequent{{}, {}, {F}, {kIdentity}}).rule, R::RImpMove);
  EXPECT_EQ(expand(Sequent{{p}, {q}, {}, {}}).rule, R::BasicAxiom);
  EXPECT_FALSE(expand(Sequent{{p}, {q}, {}, {}}).closed);
}

TEST(ProveWithTraceTest, IdentityHasOneLeafAndHandTracedClauses) {
  Verdict v = prove_with_trace(kIdentity);
  ASSERT_TRUE(v.proved());
  EXPECT_EQ(leaves(v.derivation()).size(), 1u);
  EXPECT_EQ(clause_numbers(v.derivation()), (std::vector<int>{6, 2, 1, 7}));
}

TEST(ProveWithTraceTest, PeirceHasTwoLeavesAndHandTracedClauses) {
  Verdict v = prove_with_trace(kPeirce);
  ASSERT_TRUE(v.proved());
  auto ls = leaves(v.derivation());
  ASSERT_EQ(ls.size(), 2u);
  EXPECT_EQ(ls[0]->conclusion, (Sequent{{p}, {q, p}, {}, {}}));
  EXPECT_EQ(ls[1]->conclusion, (Sequent{{p}, {p}, {}, {}}));
  EXPECT_EQ(clause_numbers(v.derivation()), (std::vector<int>{6, 2, 5, 6, 2, 1, 7, 1, 7}));
}

TEST(ProveWithTraceTest, AtomIsRefutedByEmptyInterpretation) {
  Verdict v = prove_with_trace(P);
  ASSERT_FALSE(v.proved());
  ASSERT_EQ(v.refutation().countermodels.size(), 1u);
  EXPECT_EQ(v.refutation().countermodels[0], Interpretation{});
  EXPECT_EQ(v.refutation().leaves[0], (Sequent{{}, {p}, {}, {}}));
}

TEST(ProveWithTraceTest, CollectsEveryOpenLeaf) {
  // (p & q) has two ways to fail: p false or q false.
  Formula conj = desugar(ExtFormula::conj(ExtFormula::atom(p), ExtFormula::atom(q)));
  Verdict v = prove_with_trace(conj);
  ASSERT_FALSE(v.proved());
  EXPECT_EQ(v.refutation().countermodels.size(), 2u);
  for (const auto& i : v.refutation().countermodels) EXPECT_FALSE(eval(i, conj));
}

TEST(CountermodelTest, Examples) {
  EXPECT_EQ(countermodel(kIdentity), std::nullopt);
  EXPECT_EQ(countermodel(P), Interpretation{});
  EXPECT_FALSE(eval({}, P));
  Formula p_to_q = Formula::imp(P, Q);
  EXPECT_EQ(countermodel(p_to_q), Interpretation{p});
  EXPECT_FALSE(eval({p}, p_to_q));
}

TEST(MeasureTest, Examples) {
  EXPECT_EQ(measure(Sequent{}), 0u);
  EXPECT_EQ(measure(Sequent{{}, {}, {}, {kIdentity}}), 3u);
  EXPECT_EQ(measure(Sequent{{p}, {q}, {F}, {Formula::pro(r)}}), 2u);
}

TEST(ProveTest, ExhaustiveAgreementWithOracle) {
  TerminationMonitor monitor;
  std::size_t count = 0;
  oracle::for_each_formula(3, {p, q}, [&](const Formula& f) {
    ASSERT_EQ(prove(f, &monitor), oracle::oracle_valid(f)) << f;
    ++count;
  });
  EXPECT_EQ(count, 471u);
  EXPECT_GT(monitor.steps, 0u);
  EXPECT_EQ(monitor.violations, 0u);
}

TEST(ProveTest, RandomAgreementWithOracleAndReference) {
  testing::Rng rng(2024);
  TerminationMonitor monitor;
  for (int n = 0; n < 3000; ++n) {
    Formula f = testing::random_formula(rng, 20, 5);
    const bool valid = oracle::oracle_valid(f);
    ASSERT_EQ(prove(f, &monitor), valid) << f;
    ASSERT_EQ(testing::ref_prover(f), valid) << f;
    Verdict v = prove_with_trace(f, &monitor);
    ASSERT_EQ(v.proved(), valid) << f;
    if (!valid) {
      for (const auto& i : v.refutation().countermodels) ASSERT_FALSE(eval(i, f)) << f;
      ASSERT_EQ(v.refutation().countermodels.front(), *countermodel(f));
    }
  }
  EXPECT_EQ(monitor.violations, 0u);
}

TEST(ProveWithTraceTest, ClauseSequenceMatchesReferenceOnValidFormulas) {
  oracle::for_each_formula(3, {p, q}, [&](const Formula& f) {
    std::vector<int> expected;
    if (!testing::ref_prover(f, &expected)) return;
    Verdict v = prove_with_trace(f);
    ASSERT_TRUE(v.proved());
    ASSERT_EQ(clause_numbers(v.derivation()), expected) << f;
  });
}

TEST(MpTest, SequentLevelAgreementWithSemantics) {
  testing::Rng rng(99);
  TerminationMonitor monitor;
  for (int n = 0; n < 5000; ++n) {
    Sequent s = testing::random_sequent(rng);
    bool semantic = true;
    for (const Interpretation& i : oracle::valuations(atoms(s))) semantic = semantic && eval_sequent(s, i);
    ASSERT_EQ(mp(s, &monitor), semantic) << s;
    ASSERT_EQ(oracle::oracle_valid_sequent(left_formulas(s).to_vector(), right_formulas(s).to_vector()), semantic);
    ASSERT_EQ(testing::ref_mp(s.a.to_vector(), s.b.to_vector(), s.c.to_vector(), s.d.to_vector()), semantic) << s;
  }
  EXPECT_EQ(monitor.violations, 0u);
}

TEST(ProveTest, DeepFormulaDoesNotExhaustStack) {
  // p -> (p -> (p -> ... -> p)), 20k levels. mp itself keeps no call
  // stack; the limit here comes from recursive formula destruction.
  Formula f = P;
  for (int k = 0; k < 20'000; ++k) f = Formula::imp(P, f);
  EXPECT_TRUE(prove(f));
  EXPECT_EQ(countermodel(f), std::nullopt);
}

}  // namespace
}  // namespace microlog
