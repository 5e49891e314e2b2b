// Command line front end for the superclause library.
//
// One subcommand per operation: closure, check, fix, minimize, forget,
// reduce, verify-reduction.  Input is a CNF file (named or DIMACS format,
// auto-detected), or standard input with `-`.  Reports go to standard output
// as human-readable text, or as JSON with --json; both are deterministic for
// identical inputs and flags.
//
// Exit codes: 0 success, 2 parse error (input text or command line),
// 3 resource cap exceeded, 4 cross-check disagreement, 5 fix failure,
// 1 any other error.

#include <cstdint>
#include <cstdlib>
#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "superclause/cnf.hpp"
#include "superclause/errors.hpp"
#include "superclause/minimality.hpp"
#include "superclause/parse.hpp"
#include "superclause/reduction.hpp"
#include "superclause/redundancy.hpp"
#include "superclause/resolution.hpp"
#include "superclause/semantics.hpp"
#include "superclause/splitting.hpp"

namespace sc = superclause;
using nlohmann::ordered_json;

namespace {

constexpr const char* kToolName = "superclause";
constexpr const char* kToolVersion = "1.0.0";

constexpr int kExitOk = 0;
constexpr int kExitGeneric = 1;
constexpr int kExitParse = 2;
constexpr int kExitCapacity = 3;
constexpr int kExitDisagreement = 4;
constexpr int kExitFix = 5;

// --------------------------------------------------------------------------
// Input plumbing.

std::string fnv1a64(const std::string& bytes) {
  std::uint64_t h = 14695981039346656037ull;
  for (unsigned char ch : bytes) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  static const char* hex = "0123456789abcdef";
  std::string out(16, '0');
  for (int i = 15; i >= 0; --i) {
    out[static_cast<std::size_t>(i)] = hex[h & 0xF];
    h >>= 4;
  }
  return out;
}

std::string read_input(const std::string& path) {
  if (path == "-") {
    std::ostringstream buf;
    buf << std::cin.rdbuf();
    return buf.str();
  }
  std::ifstream in(path, std::ios::binary);
  if (!in) throw sc::Error("cannot open input file '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

struct LoadedInput {
  std::string path;
  std::string digest;
  sc::Formula formula;
  sc::Format format = sc::Format::named;
};

LoadedInput load_input(const std::string& path, const std::string& format) {
  LoadedInput in;
  in.path = path;
  const std::string text = read_input(path);
  in.digest = fnv1a64(text);
  if (format == "named") {
    in.formula = sc::parse(text, sc::Format::named);
    in.format = sc::Format::named;
  } else if (format == "dimacs") {
    in.formula = sc::parse(text, sc::Format::dimacs);
    in.format = sc::Format::dimacs;
  } else {
    auto [f, fmt] = sc::parse_auto(text);
    in.formula = std::move(f);
    in.format = fmt;
  }
  return in;
}

void write_file(const std::string& path, const std::string& content) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw sc::Error("cannot write output file '" + path + "'");
  out << content;
  if (!out) throw sc::Error("error while writing '" + path + "'");
}

std::string stem_of(const std::string& path) {
  if (path == "-") return "reduction";
  std::size_t slash = path.find_last_of('/');
  std::string base = slash == std::string::npos ? path : path.substr(slash + 1);
  std::size_t dot = base.find_last_of('.');
  if (dot != std::string::npos && dot > 0) base = base.substr(0, dot);
  return base.empty() ? "reduction" : base;
}

// --------------------------------------------------------------------------
// Report assembly.

ordered_json clause_list(const sc::Formula& f) {
  ordered_json arr = ordered_json::array();
  for (const sc::Clause& c : f.clauses()) arr.push_back(sc::to_string(c));
  return arr;
}

ordered_json base_report(const char* command, const LoadedInput& in) {
  ordered_json report;
  report["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  report["command"] = command;
  report["input"] = {{"path", in.path},
                     {"digest", in.digest},
                     {"format", sc::format_name(in.format)},
                     {"clauses", in.formula.size()},
                     {"variables", in.formula.variables().size()}};
  report["options"] = ordered_json::object();
  report["results"] = ordered_json::object();
  report["warnings"] = ordered_json::array();
  return report;
}

void emit(const ordered_json& report, bool json, const std::string& human) {
  if (json)
    std::cout << report.dump(2) << "\n";
  else
    std::cout << human;
}

std::string counted(std::size_t n, const char* noun) {
  return std::to_string(n) + " " + noun + (n == 1 ? "" : "s");
}

std::string human_header(const char* command, const LoadedInput& in) {
  std::ostringstream out;
  out << kToolName << " " << command << ": " << in.path << " ("
      << sc::format_name(in.format) << ", " << counted(in.formula.size(), "clause")
      << ", " << counted(in.formula.variables().size(), "variable") << ")\n";
  return out.str();
}

std::string render_warnings(const ordered_json& report) {
  std::string out;
  for (const auto& w : report["warnings"])
    out += "warning: " + w.get<std::string>() + "\n";
  return out;
}

// --------------------------------------------------------------------------
// Certificates.

ordered_json steps_json(const std::vector<sc::SubstitutionStep>& steps) {
  ordered_json arr = ordered_json::array();
  for (const auto& step : steps) {
    switch (step.kind) {
      case sc::SubstitutionStep::Kind::assign:
        arr.push_back({{"op", "assign"}, {"var", step.var},
                       {"value", step.value}});
        break;
      case sc::SubstitutionStep::Kind::drop_component:
        arr.push_back({{"op", "drop-component"},
                       {"clauses", clause_list(step.dropped)}});
        break;
      case sc::SubstitutionStep::Kind::delete_pure:
        arr.push_back({{"op", "delete-pure"},
                       {"literal", sc::to_string(step.pure)},
                       {"clause", sc::to_string(step.deleted)}});
        break;
    }
  }
  return arr;
}

ordered_json certificate_json(const sc::Certificate& cert) {
  switch (cert.kind) {
    case sc::Certificate::Kind::subset_clause:
      return {{"kind", "subset-clause"}, {"subset", sc::to_string(cert.subset)}};
    case sc::Certificate::Kind::last_step_pair:
      return {{"kind", "last-step-pair"},
              {"first", sc::to_string(cert.pair_first)},
              {"second", sc::to_string(cert.pair_second)}};
    case sc::Certificate::Kind::entailing_set:
      return {{"kind", "entailing-set"},
              {"clauses", clause_list(cert.entailing)}};
    case sc::Certificate::Kind::substitution_chain:
      return {{"kind", "substitution-chain"}, {"steps", steps_json(cert.steps)},
              {"residual", clause_list(cert.residual)}};
  }
  return nullptr;
}

std::string render_steps(const std::vector<sc::SubstitutionStep>& steps) {
  std::string out;
  for (const auto& step : steps) {
    if (!out.empty()) out += ", ";
    switch (step.kind) {
      case sc::SubstitutionStep::Kind::assign:
        out += "assign " + step.var + ":=" + (step.value ? "1" : "0");
        break;
      case sc::SubstitutionStep::Kind::drop_component:
        out += "drop {" + sc::to_string(step.dropped) + "}";
        break;
      case sc::SubstitutionStep::Kind::delete_pure:
        out += "delete '" + sc::to_string(step.deleted) + "' (pure " +
               sc::to_string(step.pure) + ")";
        break;
    }
  }
  return out.empty() ? "nothing to do" : out;
}

std::string render_certificate(const sc::Certificate& cert) {
  switch (cert.kind) {
    case sc::Certificate::Kind::subset_clause:
      return "subset clause in closure: " + sc::to_string(cert.subset);
    case sc::Certificate::Kind::last_step_pair:
      return "closure pair resolving to it: '" + sc::to_string(cert.pair_first) +
             "' with '" + sc::to_string(cert.pair_second) + "'";
    case sc::Certificate::Kind::entailing_set:
      return "entailed by: " + sc::to_string(cert.entailing);
    case sc::Certificate::Kind::substitution_chain:
      return "proof: " + render_steps(cert.steps) + "; residual {" +
             sc::to_string(cert.residual) + "}";
  }
  return "";
}

// --------------------------------------------------------------------------
// Shared option bundles.

struct CommonFlags {
  std::string input;
  std::string format = "auto";
  bool json = false;
  int max_vars = sc::kDefaultVariableCap;
  int budget = sc::kDefaultClosureBudget;
};

int default_max_vars() {
  if (const char* env = std::getenv("SUPERCLAUSE_MAX_VARS")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return sc::kDefaultVariableCap;
}

void add_common(CLI::App* cmd, CommonFlags& flags, bool with_caps = true) {
  cmd->add_option("input", flags.input,
                  "input CNF file (named or DIMACS; '-' for stdin)")
      ->required();
  cmd->add_option("--format", flags.format, "input format")
      ->check(CLI::IsMember({"auto", "named", "dimacs"}))
      ->capture_default_str();
  cmd->add_flag("--json", flags.json, "emit a JSON report instead of text");
  if (with_caps) {
    cmd->add_option("--max-vars", flags.max_vars,
                    "variable cap for model enumeration")
        ->capture_default_str();
    cmd->add_option("--budget", flags.budget,
                    "clause budget for resolution closures")
        ->capture_default_str();
  }
}

// --------------------------------------------------------------------------
// closure

int run_closure(const CommonFlags& flags, const std::string& out_path) {
  const LoadedInput in = load_input(flags.input, flags.format);
  ordered_json report = base_report("closure", in);
  report["options"] = {{"budget", flags.budget},
                       {"out", out_path.empty() ? ordered_json(nullptr)
                                                : ordered_json(out_path)}};

  const sc::ClosureResult closure =
      sc::resolution_closure(in.formula, flags.budget);
  report["results"] = {{"clauses", clause_list(closure.clauses)},
                       {"count", closure.clauses.size()},
                       {"derived", closure.generation_count},
                       {"truncated", closure.truncated}};
  if (closure.truncated)
    report["warnings"].push_back("resolution closure truncated at budget " +
                                 std::to_string(flags.budget));

  if (!out_path.empty())
    write_file(out_path, sc::serialize(closure.clauses, in.format));

  std::ostringstream human;
  human << human_header("closure", in);
  human << "closure: " << counted(closure.clauses.size(), "clause") << " ("
        << closure.generation_count << " derived, "
        << (closure.truncated ? "truncated" : "complete") << ")\n";
  human << sc::serialize(closure.clauses, sc::Format::named);
  if (!out_path.empty()) human << "written: " << out_path << "\n";
  human << render_warnings(report);
  emit(report, flags.json, human.str());
  return closure.truncated ? kExitCapacity : kExitOk;
}

// --------------------------------------------------------------------------
// check

struct MethodVerdict {
  std::string name;
  bool superredundant = false;
};

int run_check(const CommonFlags& flags, int clause_index, bool all_clauses,
              const std::string& method) {
  const LoadedInput in = load_input(flags.input, flags.format);
  const sc::Formula& f = in.formula;
  ordered_json report = base_report("check", in);
  report["options"] = {
      {"selection", all_clauses ? ordered_json("all")
                                : ordered_json(clause_index)},
      {"method", method},
      {"max_vars", flags.max_vars},
      {"budget", flags.budget}};

  std::vector<std::size_t> indices;
  if (all_clauses) {
    for (std::size_t i = 0; i < f.size(); ++i) indices.push_back(i);
  } else {
    if (clause_index < 0 || static_cast<std::size_t>(clause_index) >= f.size())
      throw sc::Error("clause index " + std::to_string(clause_index) +
                      " out of range (formula has " + std::to_string(f.size()) +
                      " clauses)");
    indices.push_back(static_cast<std::size_t>(clause_index));
  }

  if (f.contains_empty_clause())
    report["warnings"].push_back(
        "formula contains the empty clause; every clause is entailed by it");

  bool disagreement = false;
  std::size_t super_count = 0;
  ordered_json rows = ordered_json::array();
  std::ostringstream lines;

  for (std::size_t idx : indices) {
    const sc::Clause& c = f.clauses()[idx];
    std::vector<MethodVerdict> verdicts;
    std::optional<sc::Certificate> positive_cert;

    const auto run_method = [&](sc::CheckMethod m) {
      const sc::SuperredundancyVerdict v =
          sc::check_superredundant(f, c, m, flags.max_vars, flags.budget);
      verdicts.push_back({sc::method_name(m), v.superredundant});
      if (v.superredundant && v.certificate &&
          (!positive_cert ||
           m == sc::CheckMethod::last_step))  // prefer the compact one
        positive_cert = v.certificate;
    };

    if (method == "cross") {
      run_method(sc::CheckMethod::definition);
      run_method(sc::CheckMethod::first_step);
      run_method(sc::CheckMethod::last_step);
      if (c.size() == 1) run_method(sc::CheckMethod::unit);
      if (sc::is_horn(f) || sc::is_krom(f))
        run_method(sc::CheckMethod::horn_krom);
    } else if (method == "definition") {
      run_method(sc::CheckMethod::definition);
    } else if (method == "first-step" || method == "auto") {
      run_method(sc::CheckMethod::first_step);
    } else if (method == "last-step") {
      run_method(sc::CheckMethod::last_step);
    } else if (method == "unit") {
      run_method(sc::CheckMethod::unit);
    } else {
      run_method(sc::CheckMethod::horn_krom);
    }

    bool agree = true;
    for (const MethodVerdict& v : verdicts)
      agree = agree && v.superredundant == verdicts.front().superredundant;
    if (!agree) {
      disagreement = true;
      report["warnings"].push_back("methods disagree on clause " +
                                   std::to_string(idx) + " '" +
                                   sc::to_string(c) + "'");
    }
    const bool super = verdicts.front().superredundant;
    if (super) ++super_count;

    ordered_json row;
    row["index"] = idx;
    row["clause"] = sc::to_string(c);
    row["superredundant"] = super;
    row["methods"] = ordered_json::array();
    for (const MethodVerdict& v : verdicts)
      row["methods"].push_back(
          {{"method", v.name}, {"superredundant", v.superredundant}});

    std::optional<sc::Certificate> shown;
    if (super && agree) {
      shown = positive_cert;
    } else if (!super && agree) {
      shown = sc::prove_superirredundant_by_substitution(f, c, -1,
                                                         flags.max_vars);
    }
    row["certificate"] = shown ? certificate_json(*shown) : ordered_json(nullptr);
    rows.push_back(std::move(row));

    lines << "clause " << idx << " '" << sc::to_string(c) << "': "
          << (agree ? (super ? "superredundant" : "superirredundant")
                    : "DISAGREEMENT");
    lines << " [";
    for (std::size_t i = 0; i < verdicts.size(); ++i)
      lines << (i ? ", " : "") << verdicts[i].name;
    lines << "]\n";
    if (shown) lines << "  " << render_certificate(*shown) << "\n";
  }

  report["results"] = {{"clauses", std::move(rows)},
                       {"checked", indices.size()},
                       {"superredundant_count", super_count},
                       {"agreement", !disagreement}};

  std::ostringstream human;
  human << human_header("check", in) << lines.str();
  human << "checked " << counted(indices.size(), "clause") << ", "
        << super_count << " superredundant\n";
  human << render_warnings(report);
  emit(report, flags.json, human.str());
  return disagreement ? kExitDisagreement : kExitOk;
}

// --------------------------------------------------------------------------
// fix

int run_fix(const CommonFlags& flags, const std::vector<int>& targets,
            bool all_targets, const std::string& out_path) {
  const LoadedInput in = load_input(flags.input, flags.format);
  const sc::Formula& f = in.formula;
  ordered_json report = base_report("fix", in);
  ordered_json target_opt;
  if (all_targets) {
    target_opt = "all";
  } else {
    target_opt = ordered_json::array();
    for (int t : targets) target_opt.push_back(t);
  }
  report["options"] = {{"targets", target_opt},
                       {"max_vars", flags.max_vars},
                       {"out", out_path.empty() ? ordered_json(nullptr)
                                                : ordered_json(out_path)}};

  std::vector<sc::Clause> target_clauses;
  if (all_targets) {
    target_clauses.assign(f.clauses().begin(), f.clauses().end());
  } else {
    for (int t : targets) {
      if (t < 0 || static_cast<std::size_t>(t) >= f.size())
        throw sc::Error("target index " + std::to_string(t) +
                        " out of range (formula has " +
                        std::to_string(f.size()) + " clauses)");
      target_clauses.push_back(f.clauses()[static_cast<std::size_t>(t)]);
    }
  }

  const sc::FixResult fixed =
      sc::make_superirredundant(f, target_clauses, flags.max_vars);

  ordered_json plans = ordered_json::array();
  for (const sc::SplitPlan& plan : fixed.plans)
    plans.push_back({{"original", sc::to_string(plan.original)},
                     {"fresh", plan.fresh},
                     {"half_a", sc::to_string(plan.half_a)},
                     {"half_b", sc::to_string(plan.half_b)},
                     {"collateral", clause_list(plan.collateral)}});
  report["results"] = {{"formula", clause_list(fixed.formula)},
                       {"splits", fixed.plans.size()},
                       {"plans", std::move(plans)}};

  if (!out_path.empty())
    write_file(out_path, sc::serialize(fixed.formula, in.format));

  std::ostringstream human;
  human << human_header("fix", in);
  human << "splits: " << fixed.plans.size() << "\n";
  for (const sc::SplitPlan& plan : fixed.plans) {
    human << "  split '" << sc::to_string(plan.original) << "' -> '"
          << sc::to_string(plan.half_a) << "' + '"
          << sc::to_string(plan.half_b) << "' (fresh " << plan.fresh << ")\n";
    if (!plan.collateral.empty())
      human << "    rechecked: " << sc::to_string(plan.collateral) << "\n";
  }
  human << sc::serialize(fixed.formula, sc::Format::named);
  if (!out_path.empty()) human << "written: " << out_path << "\n";
  emit(report, flags.json, human.str());
  return kExitOk;
}

// --------------------------------------------------------------------------
// minimize

int run_minimize(const CommonFlags& flags, int clause_cap) {
  const LoadedInput in = load_input(flags.input, flags.format);
  ordered_json report = base_report("minimize", in);
  report["options"] = {{"max_vars", flags.max_vars},
                       {"clause_cap", clause_cap},
                       {"budget", flags.budget}};

  const sc::MinimizationResult result = sc::minimal_equivalent_formulas(
      in.formula, flags.max_vars, clause_cap, flags.budget);
  const sc::MinimalityCertificate cert =
      sc::certify_minimal(in.formula, flags.max_vars);

  ordered_json minima = ordered_json::array();
  for (const sc::Formula& m : result.minimal_formulas)
    minima.push_back(clause_list(m));
  report["results"] = {{"min_size", result.min_size},
                       {"minima", std::move(minima)},
                       {"minima_count", result.minimal_formulas.size()},
                       {"search_space", result.search_space},
                       {"degenerate", result.degenerate},
                       {"input_certificate", sc::certificate_name(cert)}};
  if (result.degenerate)
    report["warnings"].push_back(
        "formula is unsatisfiable; its minimum is the empty clause");

  std::ostringstream human;
  human << human_header("minimize", in);
  human << "minimum size: " << result.min_size << " literals, "
        << counted(result.minimal_formulas.size(), "minimal formula")
        << " (searched " << result.search_space << " subsets)\n";
  for (const sc::Formula& m : result.minimal_formulas)
    human << "  {" << sc::to_string(m) << "}\n";
  human << "input formula: " << sc::certificate_name(cert)
        << (cert == sc::MinimalityCertificate::certified
                ? " minimal (every clause superirredundant)\n"
                : " (some clause is superredundant)\n");
  human << render_warnings(report);
  emit(report, flags.json, human.str());
  return kExitOk;
}

// --------------------------------------------------------------------------
// forget

int run_forget(const CommonFlags& flags, const std::string& var,
               const std::string& out_path) {
  const LoadedInput in = load_input(flags.input, flags.format);
  ordered_json report = base_report("forget", in);
  report["options"] = {{"var", var},
                       {"out", out_path.empty() ? ordered_json(nullptr)
                                                : ordered_json(out_path)}};

  sc::validate_variable_name(var);
  const sc::Formula result = sc::forget_variable(in.formula, var);
  report["results"] = {{"formula", clause_list(result)},
                       {"count", result.size()}};
  if (!out_path.empty())
    write_file(out_path, sc::serialize(result, in.format));

  std::ostringstream human;
  human << human_header("forget", in);
  human << "forgot " << var << ": " << counted(result.size(), "clause") << "\n";
  human << sc::serialize(result, sc::Format::named);
  if (!out_path.empty()) human << "written: " << out_path << "\n";
  emit(report, flags.json, human.str());
  return kExitOk;
}

// --------------------------------------------------------------------------
// reduce

ordered_json instance_metadata(const sc::ReductionInstance& inst,
                               const std::string& instance_digest) {
  ordered_json meta;
  meta["tool"] = {{"name", kToolName}, {"version", kToolVersion}};
  meta["n"] = inst.n;
  meta["m"] = inst.m;
  meta["k"] = inst.k;
  meta["alphabet"] = inst.alphabet;
  meta["input_cnf"] = clause_list(inst.input_cnf);
  meta["instance_digest"] = instance_digest;
  return meta;
}

std::string instance_text(const sc::ReductionInstance& inst) {
  std::ostringstream out;
  out << "# " << kToolName << " reduction instance\n";
  out << "# n " << inst.n << "\n";
  out << "# m " << inst.m << "\n";
  out << "# k " << inst.k << "\n";
  out << "# alphabet";
  for (const sc::Variable& v : inst.alphabet) out << " " << v;
  out << "\n";
  for (const sc::Clause& c : inst.input_cnf.clauses())
    out << "# input " << sc::to_string(c) << "\n";
  out << sc::serialize(inst.full(), sc::Format::named);
  return out.str();
}

int run_reduce(const CommonFlags& flags, std::string out_path) {
  const LoadedInput in = load_input(flags.input, flags.format);
  if (out_path.empty()) out_path = stem_of(flags.input) + ".inst";
  const std::string meta_path = out_path + ".json";

  ordered_json report = base_report("reduce", in);
  report["options"] = {{"out", out_path}};

  const sc::ReductionInstance inst = sc::build_reduction(in.formula);
  const sc::FixedVerification fv =
      sc::verify_fixed_superirredundant(inst, flags.max_vars, flags.budget);

  const std::string text = instance_text(inst);
  const std::string digest = fnv1a64(text);
  write_file(out_path, text);
  write_file(meta_path, instance_metadata(inst, digest).dump(2) + "\n");

  report["results"] = {{"n", inst.n},
                       {"m", inst.m},
                       {"k", inst.k},
                       {"alphabet", inst.alphabet},
                       {"families",
                        {{"a_f", inst.a_f.size()},
                         {"a_t", inst.a_t.size()},
                         {"a_c", inst.a_c.size()},
                         {"a_b_prime", inst.a_b_prime.size()}}},
                       {"instance_clauses", inst.full().size()},
                       {"fixed_certified", fv.ok},
                       {"notes", fv.notes},
                       {"out", out_path},
                       {"metadata", meta_path}};
  if (!fv.ok)
    report["warnings"].push_back(
        "fixed part could not be certified superirredundant");

  std::ostringstream human;
  human << human_header("reduce", in);
  human << "instance: n=" << inst.n << " m=" << inst.m << " k=" << inst.k
        << ", " << counted(inst.full().size(), "clause") << " over "
        << counted(inst.alphabet.size(), "variable") << "\n";
  human << "fixed part: " << (fv.ok ? "certified superirredundant"
                                    : "NOT certified")
        << " (" << counted(fv.checks.size(), "clause") << ")\n";
  for (const std::string& note : fv.notes) human << "  " << note << "\n";
  human << "written: " << out_path << "\n";
  human << "written: " << meta_path << "\n";
  human << render_warnings(report);
  emit(report, flags.json, human.str());
  return fv.ok ? kExitOk : kExitDisagreement;
}

// --------------------------------------------------------------------------
// verify-reduction

int run_verify_reduction(const CommonFlags& flags) {
  const std::string text = read_input(flags.input);
  const std::string meta_path = flags.input + ".json";
  std::ifstream meta_in(meta_path, std::ios::binary);
  if (!meta_in)
    throw sc::Error("cannot open instance metadata '" + meta_path + "'");
  ordered_json meta;
  try {
    meta_in >> meta;
  } catch (const std::exception& e) {
    throw sc::ParseError("instance metadata '" + meta_path +
                         "' is not valid JSON: " + e.what());
  }

  LoadedInput in;
  in.path = flags.input;
  in.digest = fnv1a64(text);
  in.formula = sc::parse(text, sc::Format::named);
  in.format = sc::Format::named;

  ordered_json report = base_report("verify-reduction", in);
  report["options"] = {{"max_vars", flags.max_vars},
                       {"budget", flags.budget},
                       {"metadata", meta_path}};

  bool consistent = true;
  std::vector<std::string> checks;

  if (meta.value("instance_digest", std::string()) != in.digest) {
    consistent = false;
    checks.push_back("digest: instance file does not match its metadata");
  }

  std::string joined;
  for (const auto& line : meta.at("input_cnf"))
    joined += line.get<std::string>() + "\n";
  const sc::Formula input_cnf = sc::parse(joined, sc::Format::named);
  const sc::ReductionInstance rebuilt = sc::build_reduction(input_cnf);

  if (rebuilt.full() != in.formula) {
    consistent = false;
    checks.push_back("structure: instance clauses do not match a rebuild "
                     "from the recorded input");
  }
  if (rebuilt.k != meta.at("k").get<std::size_t>() ||
      rebuilt.n != meta.at("n").get<std::size_t>() ||
      rebuilt.m != meta.at("m").get<std::size_t>()) {
    consistent = false;
    checks.push_back("metadata: recorded n/m/k do not match a rebuild");
  }

  ordered_json results;
  results["n"] = rebuilt.n;
  results["m"] = rebuilt.m;
  results["k"] = rebuilt.k;
  if (consistent && rebuilt.n <= 3 && rebuilt.m <= 3) {
    const sc::ReductionVerification v =
        sc::verify_reduction(rebuilt, flags.max_vars, flags.budget);
    consistent = v.consistent;
    results["input_satisfiable"] = v.input_satisfiable;
    results["witnesses_checked"] = v.witnesses_checked;
    results["candidates_refuted"] = v.candidates_refuted;
    for (const std::string& line : v.checks) checks.push_back(line);
  } else if (consistent) {
    checks.push_back("deep verification skipped (instance larger than 3 "
                     "variables or 3 clauses)");
  }
  results["consistent"] = consistent;
  results["checks"] = checks;
  report["results"] = std::move(results);

  std::ostringstream human;
  human << human_header("verify-reduction", in);
  for (const std::string& line : checks) human << "  " << line << "\n";
  human << (consistent ? "consistent\n" : "INCONSISTENT\n");
  emit(report, flags.json, human.str());
  return consistent ? kExitOk : kExitDisagreement;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"superredundancy analysis for CNF formulas"};
  app.require_subcommand(1);

  CommonFlags closure_flags;
  std::string closure_out;
  CLI::App* cmd_closure =
      app.add_subcommand("closure", "resolution closure of a formula");
  closure_flags.budget = sc::kDefaultClosureBudget;
  add_common(cmd_closure, closure_flags, false);
  cmd_closure->add_option("--budget", closure_flags.budget,
                          "clause budget for the closure")
      ->capture_default_str();
  cmd_closure->add_option("--out", closure_out, "write the closure here");

  CommonFlags check_flags;
  check_flags.max_vars = default_max_vars();
  int check_index = -1;
  bool check_all = false;
  std::string check_method = "auto";
  CLI::App* cmd_check =
      app.add_subcommand("check", "superredundancy of clauses");
  add_common(cmd_check, check_flags);
  {
    CLI::Option_group* sel =
        cmd_check->add_option_group("selection", "which clauses to check");
    sel->add_option("--clause", check_index, "zero-based clause index");
    sel->add_flag("--all", check_all, "check every clause");
    sel->require_option(1);
  }
  cmd_check->add_option("--method", check_method, "checking method")
      ->check(CLI::IsMember({"auto", "definition", "first-step", "last-step",
                             "unit", "horn-krom", "cross"}))
      ->capture_default_str();

  CommonFlags fix_flags;
  fix_flags.max_vars = default_max_vars();
  std::vector<int> fix_targets;
  bool fix_all = false;
  std::string fix_out;
  CLI::App* cmd_fix = app.add_subcommand(
      "fix", "make clauses superirredundant by splitting");
  add_common(cmd_fix, fix_flags);
  {
    CLI::Option_group* sel =
        cmd_fix->add_option_group("targets", "which clauses to repair");
    sel->add_option("--targets", fix_targets,
                    "comma-separated zero-based clause indices")
        ->delimiter(',');
    sel->add_flag("--all", fix_all, "repair every clause");
    sel->require_option(1);
  }
  cmd_fix->add_option("--out", fix_out, "write the repaired formula here");

  CommonFlags minimize_flags;
  minimize_flags.max_vars = default_max_vars();
  int minimize_clause_cap = sc::kDefaultMinimizeClauseCap;
  CLI::App* cmd_minimize =
      app.add_subcommand("minimize", "all minimum equivalent formulas");
  add_common(cmd_minimize, minimize_flags);
  cmd_minimize
      ->add_option("--clause-cap", minimize_clause_cap,
                   "closure clause cap for subset enumeration")
      ->capture_default_str();

  CommonFlags forget_flags;
  std::string forget_var;
  std::string forget_out;
  CLI::App* cmd_forget =
      app.add_subcommand("forget", "forget a variable, keeping consequences");
  add_common(cmd_forget, forget_flags, false);
  cmd_forget->add_option("--var", forget_var, "variable to forget")
      ->required();
  cmd_forget->add_option("--out", forget_out, "write the result here");

  CommonFlags reduce_flags;
  reduce_flags.max_vars = default_max_vars();
  std::string reduce_out;
  CLI::App* cmd_reduce = app.add_subcommand(
      "reduce", "build the minimization-hardness instance for a CNF");
  add_common(cmd_reduce, reduce_flags);
  cmd_reduce->add_option("--out", reduce_out,
                         "instance file (metadata goes to <out>.json)");

  CommonFlags verify_flags;
  verify_flags.max_vars = default_max_vars();
  CLI::App* cmd_verify = app.add_subcommand(
      "verify-reduction", "re-check an instance written by reduce");
  add_common(cmd_verify, verify_flags);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    app.exit(e);
    return kExitParse;
  }

  try {
    if (*cmd_closure) return run_closure(closure_flags, closure_out);
    if (*cmd_check)
      return run_check(check_flags, check_index, check_all, check_method);
    if (*cmd_fix) return run_fix(fix_flags, fix_targets, fix_all, fix_out);
    if (*cmd_minimize) return run_minimize(minimize_flags, minimize_clause_cap);
    if (*cmd_forget) return run_forget(forget_flags, forget_var, forget_out);
    if (*cmd_reduce) return run_reduce(reduce_flags, reduce_out);
    if (*cmd_verify) return run_verify_reduction(verify_flags);
  } catch (const sc::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitParse;
  } catch (const sc::CapacityError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitCapacity;
  } catch (const sc::FixError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitFix;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitGeneric;
  }
  return kExitGeneric;
}
