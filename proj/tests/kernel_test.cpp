#include <gtest/gtest.h>

#include "microlog/kernel.hpp"
#include "microlog/oracle.hpp"
#include "microlog/prover.hpp"
#include "microlog/syntax.hpp"
#include "support/generators.hpp"
#include "support/mutations.hpp"

namespace microlog {
namespace {

const PropId p("p");
const PropId q("q");
const Formula P = Formula::pro(p);
const Formula Q = Formula::pro(q);
const Formula F = Formula::falsity();
const Formula kIdentity = Formula::imp(P, P);
const Formula kPeirce = Formula::imp(Formula::imp(Formula::imp(P, Q), P), P);

using R = RuleName;

TEST(RuleNameTest, SevenRulesWithClauseNumbersAndArity) {
  ASSERT_EQ(kAllRules.size(), 7u);
  for (std::size_t k = 0; k < kAllRules.size(); ++k) {
    EXPECT_EQ(clause_number(kAllRules[k]), static_cast<int>(k + 1));
    EXPECT_EQ(rule_from_string(to_string(kAllRules[k])), kAllRules[k]);
  }
  EXPECT_EQ(arity(R::BasicAxiom), 0u);
  EXPECT_EQ(arity(R::LFalsityAxiom), 0u);
  EXPECT_EQ(arity(R::LImpBranch), 2u);
  EXPECT_EQ(arity(R::RImpMove), 1u);
  EXPECT_EQ(rule_from_string("Cut"), std::nullopt);
}

TEST(CheckNodeTest, Examples) {
  EXPECT_TRUE(kernel::check_node(Derivation{Sequent{{p}, {p}, {}, {}}, R::BasicAxiom, {}}));
  EXPECT_FALSE(kernel::check_node(Derivation{Sequent{{p}, {q}, {}, {}}, R::BasicAxiom, {}}));
  EXPECT_TRUE(kernel::check_node(Derivation{Sequent{{}, {}, {F}, {}}, R::LFalsityAxiom, {}}));
}

TEST(CheckNodeTest, SideConditions) {
  // LFalsityAxiom needs an empty right list.
  EXPECT_FALSE(kernel::check_node(Derivation{Sequent{{}, {}, {F}, {P}}, R::LFalsityAxiom, {}}));
  // LShiftPro must prepend the atom to a.
  Sequent s{{}, {}, {P}, {}};
  EXPECT_TRUE(kernel::check_node(Derivation{s, R::LShiftPro, {Derivation{Sequent{{p}, {}, {}, {}}, R::BasicAxiom, {}}}}));
  EXPECT_FALSE(kernel::check_node(Derivation{s, R::LShiftPro, {Derivation{Sequent{{}, {p}, {}, {}}, R::BasicAxiom, {}}}}));
  // Arity.
  EXPECT_FALSE(kernel::check_node(Derivation{s, R::LShiftPro, {}}));
  EXPECT_FALSE(kernel::check_node(Derivation{Sequent{{p}, {p}, {}, {}}, R::BasicAxiom,
                                             {Derivation{Sequent{{p}, {p}, {}, {}}, R::BasicAxiom, {}}}}));
  // BasicAxiom needs both formula lists empty.
  EXPECT_FALSE(kernel::check_node(Derivation{Sequent{{p}, {p}, {F}, {}}, R::BasicAxiom, {}}));
}

TEST(CheckNodeTest, DiagnosticNamesTheRule) {
  auto why = kernel::diagnose_node(Derivation{Sequent{{p}, {q}, {}, {}}, R::BasicAxiom, {}});
  ASSERT_TRUE(why.has_value());
  EXPECT_NE(why->find("BasicAxiom"), std::string::npos);
}

TEST(CheckDerivationTest, Examples) {
  Verdict v = prove_with_trace(kIdentity);
  ASSERT_TRUE(v.proved());
  EXPECT_TRUE(kernel::check_derivation(v.derivation(), kIdentity));
  EXPECT_FALSE(kernel::check_derivation(v.derivation(), P));

  Derivation swapped = v.derivation();
  swapped.premises[0].rule = R::RFalsityDrop;
  EXPECT_FALSE(kernel::check_derivation(swapped, kIdentity));
}

TEST(CheckDerivationTest, HandBuiltPeirceProof) {
  Formula pq = Formula::imp(P, Q);
  Formula pqp = Formula::imp(pq, P);
  Derivation left{Sequent{{}, {p}, {}, {pq}}, R::RImpMove,
                  {Derivation{Sequent{{}, {p}, {P}, {Q}}, R::RShiftPro,
                              {Derivation{Sequent{{}, {q, p}, {P}, {}}, R::LShiftPro,
                                          {Derivation{Sequent{{p}, {q, p}, {}, {}}, R::BasicAxiom, {}}}}}}}};
  Derivation right{Sequent{{}, {p}, {P}, {}}, R::LShiftPro, {Derivation{Sequent{{p}, {p}, {}, {}}, R::BasicAxiom, {}}}};
  Derivation proof{Sequent::goal(kPeirce), R::RImpMove,
                   {Derivation{Sequent{{}, {}, {pqp}, {P}}, R::RShiftPro,
                               {Derivation{Sequent{{}, {p}, {pqp}, {}}, R::LImpBranch, {left, right}}}}}};
  EXPECT_TRUE(kernel::check_derivation(proof, kPeirce));
  EXPECT_EQ(proof, prove_with_trace(kPeirce).derivation());

  std::swap(proof.premises[0].premises[0].premises[0], proof.premises[0].premises[0].premises[1]);
  EXPECT_FALSE(kernel::check_derivation(proof, kPeirce));
}

TEST(KernelTest, AcceptsEveryEmittedProofAndOnlyValidGoals) {
  std::size_t proofs = 0;
  oracle::for_each_formula(3, {p, q}, [&](const Formula& f) {
    Verdict v = prove_with_trace(f);
    if (!v.proved()) return;
    ++proofs;
    auto why = kernel::diagnose_derivation(v.derivation(), f);
    ASSERT_FALSE(why.has_value()) << f << ": " << *why;
    ASSERT_TRUE(oracle::oracle_valid(f)) << f;
  });
  EXPECT_EQ(proofs, 232u);
}

TEST(KernelTest, RejectsSingleNodeMutations) {
  testing::Rng rng(77);
  std::vector<std::pair<Formula, Derivation>> proofs;
  oracle::for_each_formula(3, {p, q}, [&](const Formula& f) {
    Verdict v = prove_with_trace(f);
    if (v.proved()) proofs.emplace_back(f, v.derivation());
  });

  std::size_t effective = 0;
  for (int n = 0; n < 3000; ++n) {
    const auto& [goal, proof] = proofs[testing::uniform(rng, 0, proofs.size() - 1)];
    Derivation mutated = testing::mutate(proof, rng);
    if (mutated == proof) continue;
    ++effective;
    ASSERT_FALSE(kernel::check_derivation(mutated, goal)) << goal;
  }
  EXPECT_GE(effective, 1000u);
}

}  // namespace
}  // namespace microlog
