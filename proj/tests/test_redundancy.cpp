// Tests for the superredundancy checkers and the superirredundancy prover.

#include <doctest.h>

#include <random>
#include <set>
#include <vector>

#include "helpers.hpp"
#include "oracle.hpp"
#include "superclause/redundancy.hpp"

using namespace superclause;
using testutil::C;
using testutil::F;

namespace {

// Reference answer: does the closure minus the clause entail the clause?
bool oracle_super(const Formula& f, const Clause& c) {
  return oracle::superredundant(f, c);
}

}  // namespace

TEST_CASE("plain redundancy") {
  const Formula f = F("a; -a b; a -b");
  CHECK(is_redundant(f, C("a -b")));       // a alone implies it
  CHECK_FALSE(is_redundant(f, C("a")));    // the other two admit a=false
  CHECK_FALSE(is_redundant(f, C("-a b")));
  CHECK_THROWS_AS(is_redundant(f, C("b")), PreconditionError);
}

TEST_CASE("a clause can be superredundant yet not redundant") {
  const Formula f = F("a; -a b; -b a");
  CHECK_FALSE(is_redundant(f, C("a")));
  CHECK(check_super_definition(f, C("a")));
  CHECK(check_super_first_step(f, C("a")));
  CHECK(check_super_last_step(f, C("a")));
}

TEST_CASE("superredundancy depends on how the formula is written") {
  // Two equivalent formulas; the unit a is superredundant in one
  // presentation and superirredundant in the other.
  CHECK(check_super_definition(F("a; -a b; -b a"), C("a")));
  CHECK_FALSE(check_super_definition(F("a; b"), C("a")));
}

TEST_CASE("definition check: worked examples and certificate") {
  const Formula f = F("a; -a b; -b a");
  for (const Clause& c : f.clauses()) CHECK(check_super_definition(f, c));

  Certificate cert;
  REQUIRE(check_super_definition(f, C("a"), kDefaultVariableCap,
                                 kDefaultClosureBudget, &cert));
  CHECK(cert.kind == Certificate::Kind::entailing_set);
  CHECK(cert.entailing == F("b; -a b; -b a"));

  // All three clauses of this one are superredundant as well, through the
  // derived units.
  const Formula g = F("a; -a b; a -b");
  for (const Clause& c : g.clauses()) CHECK(check_super_definition(g, c));

  CHECK_THROWS_AS(check_super_definition(F("a"), C("b")), PreconditionError);
}

TEST_CASE("definition check refuses a truncated closure") {
  const Formula f = F("a b; -b c; -c d; -d e; -e f; -f g; -g h");
  CHECK_THROWS_AS(
      check_super_definition(f, C("a b"), kDefaultVariableCap, /*budget=*/9),
      CapacityError);
}

TEST_CASE("first-step check avoids the closure") {
  const Formula f = F("a; -a b; -b a");
  CHECK(check_super_first_step(f, C("a")));
  CHECK(check_super_first_step(f, C("-a b")));
  CHECK_FALSE(check_super_first_step(F("a; b"), C("b")));

  Certificate cert;
  REQUIRE(check_super_first_step(f, C("a"), kDefaultVariableCap, &cert));
  CHECK(cert.kind == Certificate::Kind::entailing_set);
  // The rest of the formula plus the resolvents of a against it.
  CHECK(cert.entailing == F("b; -a b; -b a"));
}

TEST_CASE("last-step check: subset certificate") {
  const Formula f = F("a; a b; -a b");
  Certificate cert;
  REQUIRE(check_super_last_step(f, C("a b"), kDefaultClosureBudget, &cert));
  CHECK(cert.kind == Certificate::Kind::subset_clause);
  CHECK(cert.subset == C("a"));
}

TEST_CASE("last-step check: resolving-pair certificate") {
  const Formula f = F("a b; a x; b -x");
  Certificate cert;
  REQUIRE(check_super_last_step(f, C("a b"), kDefaultClosureBudget, &cert));
  CHECK(cert.kind == Certificate::Kind::last_step_pair);
  CHECK(cert.pair_first == C("b -x"));
  CHECK(cert.pair_second == C("a x"));
  // The certified pair really resolves to the clause.
  auto r = resolve_pair(cert.pair_first, cert.pair_second);
  REQUIRE(r.has_value());
  CHECK(*r == C("a b"));
}

TEST_CASE("last-step check: negative case and truncation") {
  CHECK_FALSE(check_super_last_step(F("a b"), C("a b")));
  const Formula f = F("a b; -b c; -c d; -d e; -e f; -f g; -g h");
  CHECK_THROWS_AS(check_super_last_step(f, C("a b"), /*budget=*/9),
                  CapacityError);
}

TEST_CASE("unit clause check") {
  CHECK(check_super_unit(F("a; -a b; -b a"), C("a").literals()[0]));
  CHECK_FALSE(check_super_unit(F("a"), C("a").literals()[0]));
  CHECK_FALSE(check_super_unit(F("a; -a b"), C("a").literals()[0]));
  CHECK_THROWS_AS(check_super_unit(F("b"), C("a").literals()[0]),
                  PreconditionError);
}

TEST_CASE("pure unit clause check") {
  const Literal a = C("a").literals()[0];
  CHECK(check_super_pure_unit(F("a; a b; -b a"), a));
  CHECK_FALSE(check_super_pure_unit(F("a; -b a"), a));
  // The opposite literal occurring anywhere voids the precondition.
  CHECK_THROWS_AS(check_super_pure_unit(F("a; -a b"), a), PreconditionError);
}

TEST_CASE("horn and krom check") {
  CHECK(check_super_horn_krom(F("a; -a b; -b a"), C("a")));
  const Formula cycle = F("-a b; -b c; -c a");
  for (const Clause& c : cycle.clauses())
    CHECK(check_super_horn_krom(cycle, c));
  CHECK_FALSE(check_super_horn_krom(F("-a b; -b c"), C("-a b")));
  CHECK_THROWS_AS(check_super_horn_krom(F("a b c; -a"), C("a b c")),
                  PreconditionError);
}

TEST_CASE("monotone superset shortcut") {
  const Formula f = F("a; -a b; -b a");
  // Already superredundant: adding clauses cannot undo it.
  CHECK(check_super_monotone_superset(f, C("a"), F("c d")));
  // Not superredundant alone, but the added clauses make it so.
  CHECK(check_super_monotone_superset(F("a b"), C("a b"), F("a x; b -x")));
  CHECK_FALSE(check_super_monotone_superset(F("a b"), C("a b"), F("c d")));
  CHECK_THROWS_AS(check_super_monotone_superset(F("a b"), C("a b"), F("a b")),
                  PreconditionError);
}

TEST_CASE("growing a clause set never loses superredundancy") {
  std::mt19937 rng(20240820);
  for (int trial = 0; trial < 150; ++trial) {
    const Formula f = testutil::random_formula(rng, 5, 4, 3);
    const Formula extra = testutil::random_formula(rng, 5, 3, 3);
    for (const Clause& c : f.clauses()) {
      if (extra.contains(c)) continue;
      const bool before = check_super_first_step(f, c);
      const bool after = check_super_first_step(f.union_with(extra), c);
      if (before) CHECK(after);
      CHECK(check_super_monotone_superset(f, c, extra) == after);
    }
  }
}

TEST_CASE("fresh unit over an unused positive literal") {
  const Literal a = C("a").literals()[0];
  CHECK(check_unit_no_positive(F("-a b"), a) == true);
  CHECK_FALSE(check_unit_no_positive(F("-a"), a).has_value());
  CHECK_THROWS_AS(check_unit_no_positive(F("a b"), a), PreconditionError);
}

TEST_CASE("a clause containing a strict subset clause is superredundant") {
  std::mt19937 rng(20240821);
  int hits = 0;
  for (int trial = 0; trial < 120; ++trial) {
    const Formula f = testutil::random_formula(rng, 5, 5, 3);
    for (const Clause& c : f.clauses()) {
      bool subset = false;
      for (const Clause& d : f.clauses())
        if (d.strict_subset_of(c)) subset = true;
      if (!subset) continue;
      ++hits;
      CHECK(check_super_first_step(f, c));
    }
  }
  CHECK(hits > 20);
}

TEST_CASE("all checking methods agree with each other and the reference") {
  std::mt19937 rng(20240822);
  int unit_hits = 0, pure_hits = 0, horn_krom_hits = 0;
  for (int trial = 0; trial < 250; ++trial) {
    Formula f;
    switch (trial % 3) {
      case 0: f = testutil::random_formula(rng, 6, 6, 3); break;
      case 1: f = testutil::random_horn(rng, 6, 6, 3); break;
      default: f = testutil::random_krom(rng, 6, 6); break;
    }
    for (const Clause& c : f.clauses()) {
      const bool expected = oracle_super(f, c);
      CHECK(check_super_definition(f, c) == expected);
      CHECK(check_super_first_step(f, c) == expected);
      CHECK(check_super_last_step(f, c) == expected);
      if (c.size() == 1) {
        const Literal l = c.literals()[0];
        CHECK(check_super_unit(f, l) == expected);
        ++unit_hits;
        bool opposite_occurs = false;
        for (const Clause& d : f.clauses())
          if (d.contains(l.negated())) opposite_occurs = true;
        if (!opposite_occurs) {
          CHECK(check_super_pure_unit(f, l) == expected);
          ++pure_hits;
        }
      }
      if (is_horn(f) || is_krom(f)) {
        CHECK(check_super_horn_krom(f, c) == expected);
        ++horn_krom_hits;
      }
      // Plain redundancy is the stronger property.
      if (is_redundant(f, c)) CHECK(expected);
    }
  }
  CHECK(unit_hits > 50);
  CHECK(pure_hits > 10);
  CHECK(horn_krom_hits > 100);
}

TEST_CASE("aggregate verdicts") {
  const Formula f = F("a; -a b; -b a");
  for (CheckMethod m : {CheckMethod::definition, CheckMethod::first_step,
                        CheckMethod::last_step, CheckMethod::unit,
                        CheckMethod::horn_krom}) {
    const auto v = check_superredundant(f, C("a"), m);
    CHECK(v.superredundant);
    CHECK(v.clause == C("a"));
    CHECK_FALSE(v.degenerate);
    REQUIRE(v.methods_used.size() == 1);
    CHECK(v.methods_used[0] == method_name(m));
    CHECK(v.certificate.has_value());
  }
  CHECK_THROWS_AS(check_superredundant(f, C("-a b"), CheckMethod::unit),
                  PreconditionError);

  const auto neg =
      check_superredundant(F("a; b"), C("a"), CheckMethod::definition);
  CHECK_FALSE(neg.superredundant);
  CHECK_FALSE(neg.certificate.has_value());

  const auto degen =
      check_superredundant(F("0; a"), C("a"), CheckMethod::definition);
  CHECK(degen.superredundant);  // an inconsistent set entails anything
  CHECK(degen.degenerate);
}

TEST_CASE("method names") {
  CHECK(std::string(method_name(CheckMethod::definition)) == "definition");
  CHECK(std::string(method_name(CheckMethod::first_step)) == "first-step");
  CHECK(std::string(method_name(CheckMethod::last_step)) == "last-step");
  CHECK(std::string(method_name(CheckMethod::unit)) == "unit");
  CHECK(std::string(method_name(CheckMethod::horn_krom)) == "horn-krom");
}

// ---------------------------------------------------------------------------
// The substitution prover.

TEST_CASE("substitution proof: two assignments then a component drop") {
  const Formula f = F("a b; b c; -b -d; -c d e");
  const auto cert = prove_superirredundant_by_substitution(f, C("a b"));
  REQUIRE(cert.has_value());
  CHECK(cert->kind == Certificate::Kind::substitution_chain);
  REQUIRE(cert->steps.size() == 3);

  CHECK(cert->steps[0].kind == SubstitutionStep::Kind::assign);
  CHECK(cert->steps[0].var == "c");
  CHECK(cert->steps[0].value == true);

  CHECK(cert->steps[1].kind == SubstitutionStep::Kind::assign);
  CHECK(cert->steps[1].var == "d");
  CHECK(cert->steps[1].value == false);

  CHECK(cert->steps[2].kind == SubstitutionStep::Kind::drop_component);
  CHECK(cert->steps[2].dropped == F("e"));

  CHECK(cert->residual == F("a b"));
  CHECK_FALSE(oracle_super(f, C("a b")));  // the proof is truthful
}

TEST_CASE("substitution proof: second worked example") {
  const Formula f = F("a b; -a c d; -b -c -f; -d f g; d h");
  const auto cert = prove_superirredundant_by_substitution(f, C("a b"));
  REQUIRE(cert.has_value());
  REQUIRE(cert->steps.size() == 3);

  CHECK(cert->steps[0].kind == SubstitutionStep::Kind::assign);
  CHECK(cert->steps[0].var == "c");
  CHECK(cert->steps[0].value == true);

  CHECK(cert->steps[1].kind == SubstitutionStep::Kind::assign);
  CHECK(cert->steps[1].var == "f");
  CHECK(cert->steps[1].value == false);

  CHECK(cert->steps[2].kind == SubstitutionStep::Kind::drop_component);
  CHECK(cert->steps[2].dropped == F("-d g; d h"));

  CHECK(cert->residual == F("a b"));
  CHECK_FALSE(oracle_super(f, C("a b")));
}

TEST_CASE("substitution proof: immediate success on a closed formula") {
  // Nothing resolves (the two clauses clash on two variables), so the
  // starting point is already terminal and the chain is empty.
  const Formula f = F("a b; -a -b");
  const auto cert = prove_superirredundant_by_substitution(f, C("a b"));
  REQUIRE(cert.has_value());
  CHECK(cert->steps.empty());
  CHECK(cert->residual == f);
}

TEST_CASE("substitution proof: leading component drop is recorded") {
  const Formula f = F("a b; x");
  const auto cert = prove_superirredundant_by_substitution(f, C("a b"));
  REQUIRE(cert.has_value());
  REQUIRE(cert->steps.size() == 1);
  CHECK(cert->steps[0].kind == SubstitutionStep::Kind::drop_component);
  CHECK(cert->steps[0].dropped == F("x"));
  CHECK(cert->residual == F("a b"));
}

TEST_CASE("substitution proof fails on superredundant clauses") {
  CHECK_FALSE(
      prove_superirredundant_by_substitution(F("a; -a b; -b a"), C("a"))
          .has_value());
  CHECK_FALSE(
      prove_superirredundant_by_substitution(F("a; a b"), C("a b"))
          .has_value());
  CHECK_THROWS_AS(prove_superirredundant_by_substitution(F("a"), C("b")),
                  PreconditionError);
}

TEST_CASE("substitution proofs are sound on random formulas") {
  std::mt19937 rng(20240823);
  int proved = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f = testutil::random_formula(rng, 6, 5, 3);
    for (const Clause& c : f.clauses()) {
      const auto cert = prove_superirredundant_by_substitution(f, c);
      if (!cert) continue;
      ++proved;
      CHECK_FALSE(oracle_super(f, c));
      // Replay the chain and confirm it reaches the recorded residual with
      // the target intact and nothing resolving.
      Formula current = f;
      for (const auto& step : cert->steps) {
        switch (step.kind) {
          case SubstitutionStep::Kind::assign:
            CHECK_FALSE(c.mentions(step.var));
            CHECK_FALSE(current.contains(c.union_with(
                Clause{Literal(step.var, !step.value)})));
            current = substitute(current, step.var, step.value);
            break;
          case SubstitutionStep::Kind::drop_component: {
            for (const Clause& d : step.dropped.clauses())
              current = current.without(d);
            break;
          }
          case SubstitutionStep::Kind::delete_pure:
            current = current.without(step.deleted);
            break;
        }
        CHECK(current.contains(c));
      }
      CHECK(current == cert->residual);
    }
  }
  CHECK(proved > 100);
}

TEST_CASE("clauses in separate variable-disjoint parts do not interact") {
  std::mt19937 rng(20240824);
  int checked = 0;
  for (int trial = 0; trial < 200; ++trial) {
    const Formula f1 = testutil::random_formula(rng, 4, 4, 3);
    // Rename the second part away from the first by using later letters.
    Formula f2;
    {
      const Formula raw = testutil::random_formula(rng, 4, 4, 3);
      std::vector<Clause> shifted;
      for (const Clause& c : raw.clauses()) {
        std::vector<Literal> lits;
        for (const Literal& l : c.literals())
          lits.emplace_back("z" + l.var, l.positive);
        shifted.emplace_back(std::move(lits));
      }
      f2 = Formula(std::move(shifted));
    }
    if (!oracle::satisfiable(f2)) continue;
    const Formula joint = f1.union_with(f2);
    for (const Clause& c : f1.clauses()) {
      ++checked;
      CHECK(check_super_first_step(joint, c) ==
            check_super_first_step(f1, c));
    }
  }
  CHECK(checked > 100);
}
