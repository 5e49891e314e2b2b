#include <algorithm>
#include <vector>

#include "doctest.h"
#include "helpers.hpp"
#include "superclause/cnf.hpp"

using namespace superclause;
using testutil::C;
using testutil::F;

TEST_CASE("variable name validation") {
  CHECK_NOTHROW(validate_variable_name("a"));
  CHECK_NOTHROW(validate_variable_name("x12"));
  CHECK_NOTHROW(validate_variable_name("_s0"));
  CHECK_THROWS_AS(validate_variable_name(""), PreconditionError);
  CHECK_THROWS_AS(validate_variable_name("-a"), PreconditionError);
  CHECK_THROWS_AS(validate_variable_name("!a"), PreconditionError);
  CHECK_THROWS_AS(validate_variable_name("a b"), PreconditionError);
  CHECK_THROWS_AS(validate_variable_name("123"), PreconditionError);
}

TEST_CASE("literal basics") {
  const Literal l = pos("a");
  CHECK(l.negated() == neg("a"));
  CHECK(l.negated().negated() == l);
  CHECK(neg("a") < pos("a"));  // within a variable, negative first
  CHECK(pos("a") < neg("b"));  // name dominates
}

TEST_CASE("clause canonicalization") {
  const Clause c({pos("b"), pos("a"), pos("b")});
  CHECK(c.size() == 2);
  CHECK(c.literals() == std::vector<Literal>{pos("a"), pos("b")});
  CHECK(Clause{pos("a"), pos("a")} == Clause{pos("a")});
  CHECK_THROWS_AS(Clause({pos("a"), neg("a")}), TautologyError);
}

TEST_CASE("clause set operations") {
  CHECK(C("a b").subset_of(C("a b c")));
  CHECK(C("a b").strict_subset_of(C("a b c")));
  CHECK_FALSE(C("a b").strict_subset_of(C("a b")));
  CHECK_FALSE(C("a b").subset_of(C("a c")));
  CHECK(C("a").union_with(C("b c")) == C("a b c"));
  CHECK_THROWS_AS(C("a").union_with(C("-a b")), TautologyError);
  CHECK(C("a b").without(pos("b")) == C("a"));
  CHECK(C("a b").without(pos("c")) == C("a b"));
  CHECK(C("a -b").contains(neg("b")));
  CHECK_FALSE(C("a -b").contains(pos("b")));
  CHECK(C("a -b").mentions("b"));
  CHECK(C("a -b").variables() == std::vector<Variable>{"a", "b"});
}

TEST_CASE("clause order puts the positive literal of a variable first") {
  // This order decides the index every clause gets in a formula, which the
  // command line's --clause / --targets flags address.
  CHECK(C("a") < C("-a"));
  CHECK(C("a b d e") < C("a f"));
  CHECK(C("a f") < C("-a b -d e"));
  CHECK(C("-a b -d e") < C("-a -d -f"));
  CHECK(C("x1 x2") < C("-x1 -x2"));
  CHECK(C("0") < C("a"));  // the empty clause sorts first
}

TEST_CASE("formula canonicalization and lookup") {
  const Formula f = F("-a b; a; -b a; a");
  CHECK(f.size() == 3);
  CHECK(f.contains(C("a")));
  CHECK(f.index_of(C("a")) == 0);
  CHECK(f.index_of(C("a -b")) == 1);
  CHECK(f.index_of(C("-a b")) == 2);
  CHECK_FALSE(f.index_of(C("b")).has_value());
  CHECK(f.variables() == std::vector<Variable>{"a", "b"});
  CHECK(f.with(C("b")).size() == 4);
  CHECK(f.without(C("a")).size() == 2);
  CHECK(f.without(C("b")) == f);
  CHECK(F("a; b").union_with(F("b; c")) == F("a; b; c"));
  CHECK(F("0").contains_empty_clause());
  CHECK_FALSE(f.contains_empty_clause());
}

TEST_CASE("formula size counts literal occurrences") {
  CHECK(formula_size(F("a; -a b; a -b")) == 5);
  CHECK(formula_size(Formula{}) == 0);
  CHECK(formula_size(F("a; b")) == 2);
}

TEST_CASE("clauses with a literal") {
  const Formula f = F("a x; b -x; c");
  CHECK(clauses_with_literal(f, pos("x")) == F("a x"));
  CHECK(clauses_with_literal(f, neg("x")) == F("b -x"));
  CHECK(clauses_with_literal(F("a"), pos("b")) == Formula{});
}

TEST_CASE("substitution") {
  SUBCASE("two-step worked example, first") {
    Formula f = F("a b; b c; -b -d; -c d e");
    f = substitute(f, "c", true);
    f = substitute(f, "d", false);
    CHECK(f == F("a b; e"));
  }
  SUBCASE("two-step worked example, second") {
    Formula f = F("a b; -a c d; -b -c -f; -d f g; d h");
    f = substitute(f, "c", true);
    f = substitute(f, "f", false);
    CHECK(f == F("a b; -d g; d h"));
  }
  SUBCASE("satisfied unit vanishes") {
    CHECK(substitute(F("x"), "x", true) == Formula{});
  }
  SUBCASE("a clause emptied by substitution stays as the empty clause") {
    CHECK(substitute(F("x; x a"), "x", false) == F("0; a"));
  }
  SUBCASE("result never mentions the variable") {
    const Formula f = F("a x; -x b; c");
    for (bool v : {false, true}) {
      const Formula g = substitute(f, "x", v);
      const auto vars = g.variables();
      CHECK(std::find(vars.begin(), vars.end(), "x") == vars.end());
      CHECK(formula_size(g) <= formula_size(f));
    }
  }
}

TEST_CASE("evaluation requires a covering assignment") {
  const Assignment a{{"a", true}, {"b", false}};
  CHECK(satisfies(a, C("a b")));
  CHECK_FALSE(satisfies(a, C("-a b")));
  CHECK_FALSE(satisfies(a, C("0")));
  CHECK(satisfies(a, F("a; a -b")));
  CHECK_FALSE(satisfies(a, F("a; b")));
  CHECK_THROWS_AS(satisfies(a, C("a c")), PreconditionError);
}

TEST_CASE("text rendering") {
  CHECK(to_string(pos("a")) == "a");
  CHECK(to_string(neg("a")) == "-a");
  CHECK(to_string(C("b -a c")) == "-a b c");
  CHECK(to_string(C("0")) == "0");
  CHECK(to_string(F("-a b; a")) == "a; -a b");
}
