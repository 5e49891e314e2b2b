#include "helpers.hpp"

#include <algorithm>
#include <stdexcept>
#include <vector>

#include "superclause/parse.hpp"

namespace testutil {

using superclause::Clause;
using superclause::Formula;
using superclause::Literal;
using superclause::Variable;

Formula F(const std::string& text) {
  std::string lines = text;
  std::replace(lines.begin(), lines.end(), ';', '\n');
  return superclause::parse(lines, superclause::Format::named);
}

Clause C(const std::string& text) {
  const Formula f = F(text);
  if (f.size() != 1) throw std::runtime_error("C() expects exactly one clause");
  return f.clauses().front();
}

namespace {

const char* kNames[] = {"a", "b", "c", "d", "e", "f", "g", "h",
                        "i", "j", "k", "l", "m", "n"};

Clause random_clause(std::mt19937& rng, int num_vars, int max_len,
                     int max_positive) {
  std::uniform_int_distribution<int> len_dist(1, std::min(max_len, num_vars));
  const int len = len_dist(rng);
  std::vector<int> vars(num_vars);
  for (int i = 0; i < num_vars; ++i) vars[i] = i;
  std::shuffle(vars.begin(), vars.end(), rng);
  std::vector<Literal> lits;
  int positives = 0;
  for (int i = 0; i < len; ++i) {
    bool sign = std::uniform_int_distribution<int>(0, 1)(rng) != 0;
    if (sign && max_positive >= 0 && positives >= max_positive) sign = false;
    positives += sign ? 1 : 0;
    lits.emplace_back(kNames[vars[i]], sign);
  }
  return Clause(lits);
}

Formula random_with(std::mt19937& rng, int num_vars, int max_clauses,
                    int max_len, int max_positive) {
  std::uniform_int_distribution<int> count_dist(1, max_clauses);
  const int count = count_dist(rng);
  std::vector<Clause> clauses;
  for (int i = 0; i < count; ++i)
    clauses.push_back(random_clause(rng, num_vars, max_len, max_positive));
  return Formula(clauses);
}

}  // namespace

Formula random_formula(std::mt19937& rng, int num_vars, int max_clauses,
                       int max_len) {
  return random_with(rng, num_vars, max_clauses, max_len, -1);
}

Formula random_horn(std::mt19937& rng, int num_vars, int max_clauses,
                    int max_len) {
  return random_with(rng, num_vars, max_clauses, max_len, 1);
}

Formula random_krom(std::mt19937& rng, int num_vars, int max_clauses) {
  return random_with(rng, num_vars, max_clauses, 2, -1);
}

}  // namespace testutil
