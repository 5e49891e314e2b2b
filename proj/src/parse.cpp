#include "superclause/parse.hpp"

#include <algorithm>
#include <cstdlib>
#include <map>
#include <set>
#include <sstream>
#include <vector>

namespace superclause {

namespace {

std::vector<std::string> split_lines(const std::string& text) {
  std::vector<std::string> lines;
  std::string current;
  for (char ch : text) {
    if (ch == '\n') {
      if (!current.empty() && current.back() == '\r') current.pop_back();
      lines.push_back(current);
      current.clear();
    } else {
      current.push_back(ch);
    }
  }
  if (!current.empty()) {
    if (current.back() == '\r') current.pop_back();
    lines.push_back(current);
  }
  return lines;
}

std::vector<std::string> split_tokens(const std::string& line) {
  std::vector<std::string> tokens;
  std::istringstream in(line);
  std::string token;
  while (in >> token) tokens.push_back(token);
  return tokens;
}

bool all_digits(const std::string& s) {
  if (s.empty()) return false;
  return std::all_of(s.begin(), s.end(),
                     [](unsigned char ch) { return std::isdigit(ch); });
}

Formula parse_named(const std::string& text) {
  std::vector<Clause> clauses;
  const std::vector<std::string> lines = split_lines(text);
  for (std::size_t i = 0; i < lines.size(); ++i) {
    const int lineno = static_cast<int>(i) + 1;
    std::string line = lines[i];
    if (auto hash = line.find('#'); hash != std::string::npos)
      line.erase(hash);
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.empty()) continue;
    if (tokens.size() == 1 && tokens[0] == "0") {
      clauses.emplace_back();  // the empty clause
      continue;
    }
    std::vector<Literal> lits;
    for (const std::string& token : tokens) {
      bool positive = true;
      std::string name = token;
      if (name.front() == '-' || name.front() == '!') {
        positive = false;
        name.erase(name.begin());
      }
      if (name.empty())
        throw ParseError("lone negation sign '" + token + "'", lineno);
      if (all_digits(name))
        throw ParseError("invalid variable name '" + name +
                             "' (digit-only names are reserved)",
                         lineno);
      try {
        validate_variable_name(name);
      } catch (const PreconditionError& e) {
        throw ParseError(e.what(), lineno);
      }
      lits.emplace_back(name, positive);
    }
    try {
      clauses.emplace_back(std::move(lits));
    } catch (const TautologyError& e) {
      throw ParseError(e.what(), lineno);
    }
  }
  return Formula(std::move(clauses));
}

Formula parse_dimacs(const std::string& text) {
  const std::vector<std::string> lines = split_lines(text);
  std::map<long, Variable> names;
  long declared_vars = -1;
  long declared_clauses = -1;
  std::vector<Clause> clauses;
  std::vector<Literal> pending;
  auto name_of = [&names](long id) -> Variable {
    auto it = names.find(id);
    if (it != names.end()) return it->second;
    return "x" + std::to_string(id);
  };
  bool stopped = false;
  for (std::size_t i = 0; i < lines.size() && !stopped; ++i) {
    const int lineno = static_cast<int>(i) + 1;
    const std::vector<std::string> tokens = split_tokens(lines[i]);
    if (tokens.empty()) continue;
    if (tokens[0] == "c") {
      // "c var <number> <name>" records the name of a numbered variable.
      if (tokens.size() == 4 && tokens[1] == "var" && all_digits(tokens[2])) {
        try {
          validate_variable_name(tokens[3]);
        } catch (const PreconditionError& e) {
          throw ParseError(e.what(), lineno);
        }
        names[std::strtol(tokens[2].c_str(), nullptr, 10)] = tokens[3];
      }
      continue;
    }
    if (tokens[0].front() == 'c') continue;  // comment without space
    if (tokens[0] == "p") {
      if (tokens.size() != 4 || tokens[1] != "cnf" || !all_digits(tokens[2]) ||
          !all_digits(tokens[3]))
        throw ParseError("malformed header, expected 'p cnf VARS CLAUSES'",
                         lineno);
      if (declared_vars >= 0)
        throw ParseError("duplicate 'p cnf' header", lineno);
      declared_vars = std::strtol(tokens[2].c_str(), nullptr, 10);
      declared_clauses = std::strtol(tokens[3].c_str(), nullptr, 10);
      continue;
    }
    if (tokens[0] == "%") {
      stopped = true;  // tolerated trailer used by some benchmark suites
      continue;
    }
    if (declared_vars < 0)
      throw ParseError("clause before 'p cnf' header", lineno);
    for (const std::string& token : tokens) {
      if (token == "%") {
        stopped = true;
        break;
      }
      char* end = nullptr;
      const long value = std::strtol(token.c_str(), &end, 10);
      if (end == nullptr || *end != '\0' || token.empty())
        throw ParseError("invalid literal token '" + token + "'", lineno);
      if (value == 0) {
        try {
          clauses.emplace_back(std::move(pending));
        } catch (const TautologyError& e) {
          throw ParseError(e.what(), lineno);
        }
        pending.clear();
        continue;
      }
      const long id = value < 0 ? -value : value;
      if (id > declared_vars)
        throw ParseError("literal " + token + " exceeds declared variable count " +
                             std::to_string(declared_vars),
                         lineno);
      pending.emplace_back(name_of(id), value > 0);
    }
  }
  if (declared_vars < 0) throw ParseError("missing 'p cnf' header");
  if (!pending.empty())
    throw ParseError("last clause is not terminated by 0");
  if (declared_clauses != static_cast<long>(clauses.size()))
    throw ParseError("header declares " + std::to_string(declared_clauses) +
                     " clauses but " + std::to_string(clauses.size()) +
                     " were found");
  return Formula(std::move(clauses));
}

// True when the variable set is exactly x1..xV, in which case DIMACS output
// needs no name mapping comments.
bool natural_numbering(const std::vector<Variable>& vars) {
  std::set<std::string> have(vars.begin(), vars.end());
  for (std::size_t i = 1; i <= vars.size(); ++i)
    if (have.find("x" + std::to_string(i)) == have.end()) return false;
  return true;
}

std::string serialize_named(const Formula& f) {
  std::string out;
  for (const Clause& c : f.clauses()) {
    out += to_string(c);
    out += '\n';
  }
  return out;
}

std::string serialize_dimacs(const Formula& f) {
  const std::vector<Variable> vars = f.variables();
  std::map<Variable, long> ids;
  std::string out;
  if (natural_numbering(vars)) {
    for (const Variable& v : vars)
      ids[v] = std::strtol(v.c_str() + 1, nullptr, 10);
  } else {
    // Lexicographic numbering, recorded in comments so parsing restores the
    // original names.
    long next = 1;
    for (const Variable& v : vars) ids[v] = next++;
    for (const Variable& v : vars)
      out += "c var " + std::to_string(ids[v]) + " " + v + "\n";
  }
  out += "p cnf " + std::to_string(vars.size()) + " " +
         std::to_string(f.size()) + "\n";
  for (const Clause& c : f.clauses()) {
    std::vector<long> nums;
    nums.reserve(c.size());
    for (const Literal& l : c.literals())
      nums.push_back(l.positive ? ids[l.var] : -ids[l.var]);
    std::sort(nums.begin(), nums.end(),
              [](long a, long b) { return std::labs(a) < std::labs(b); });
    for (long n : nums) out += std::to_string(n) + " ";
    out += "0\n";
  }
  return out;
}

}  // namespace

Formula parse(const std::string& text, Format format) {
  return format == Format::named ? parse_named(text) : parse_dimacs(text);
}

Format detect_format(const std::string& text) {
  for (const std::string& line : split_lines(text)) {
    const std::vector<std::string> tokens = split_tokens(line);
    if (tokens.size() >= 2 && tokens[0] == "p" && tokens[1] == "cnf")
      return Format::dimacs;
  }
  return Format::named;
}

std::pair<Formula, Format> parse_auto(const std::string& text) {
  const Format format = detect_format(text);
  return {parse(text, format), format};
}

std::string serialize(const Formula& f, Format format) {
  return format == Format::named ? serialize_named(f) : serialize_dimacs(f);
}

const char* format_name(Format format) {
  return format == Format::named ? "named" : "dimacs";
}

}  // namespace superclause
