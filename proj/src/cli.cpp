#include "ipc/cli.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <future>
#include <iostream>
#include <sstream>

#include <CLI11.hpp>

#include "ipc/proof_io.hpp"

namespace ipc::cli {

namespace {

using nlohmann::json;
using Clock = std::chrono::steady_clock;

double millis_since(Clock::time_point start) {
  return std::chrono::duration<double, std::milli>(Clock::now() - start).count();
}

json scheme_list(const Proof& p) {
  json out = json::array();
  for (Scheme s : used_schemes(p)) out.push_back(scheme_name(s));
  return out;
}

std::string final_step_name(FinalStep s) { return s == FinalStep::Identity ? "id" : "peirce"; }

}  // namespace

std::string format_valuation(const Formula& f, const Valuation& v) {
  std::string out;
  for (const auto& name : variables(f)) {
    if (!out.empty()) out += ' ';
    out += name + "=" + (v.at(name) ? "true" : "false");
  }
  return out;
}

ProveResult cmd_prove(const std::string& formula_text, const ProveOptions& opts) {
  const auto start = Clock::now();
  ProveResult r;
  std::optional<Formula> z, q;
  try {
    z = parse(formula_text);
    if (opts.q) q = parse(*opts.q);
  } catch (const ParseError& e) {
    r.status = kBadInput;
    r.message = e.what();
    return r;
  }
  r.report = {{"formula", print(*z)}};

  try {
    if (auto v = falsifying_valuation(*z)) {
      r.status = kFailed;
      r.message = print(*z) + " is not a tautology: " + format_valuation(*z, *v);
      r.report["tautology"] = false;
      r.report["falsifying"] = format_valuation(*z, *v);
      r.report["wall_ms"] = millis_since(start);
      return r;
    }
  } catch (const ResourceError& e) {
    r.status = kBadInput;
    r.message = e.what();
    return r;
  }

  Synthesis s = q ? prove_qq(*z, QContext{*q}) : complete(*z, opts.final_step);
  const Formula expected = q ? QContext{*q}.negneg(*z) : *z;
  try {
    if (check(s.proof) != expected) {
      r.status = kFailed;
      r.message = "internal error: synthesized proof concludes " + print(s.proof.conclusion());
      return r;
    }
  } catch (const CheckError& e) {
    r.status = kFailed;
    r.message = "internal error: synthesized proof rejected at line " + std::to_string(e.line()) + ": " + e.reason();
    return r;
  }

  r.proof = write_proof(s.proof);
  json& rep = r.report;
  rep["tautology"] = true;
  rep["conclusion"] = print(expected);
  rep["tableau_nodes"] = s.stats.tableau_nodes;
  rep["branches"] = s.stats.branches;
  rep["proof_lines"] = s.proof.size();
  rep["schemes"] = scheme_list(s.proof);
  if (q) {
    rep["q"] = print(*q);
  } else {
    rep["q"] = print(*z);
    rep["final_step"] = final_step_name(opts.final_step);
  }
  if (opts.stats) {
    rep["prune_steps"] = s.stats.prune.steps;
    rep["leaf_proof_lines"] = s.stats.prune.axiom_lines;
    rep["deduction_calls"] = s.stats.deduction.calls;
    rep["deduction_input_lines"] = s.stats.deduction.input_lines;
    rep["deduction_output_lines"] = s.stats.deduction.output_lines;
    rep["deduction_expansion"] = s.stats.deduction.expansion();
    rep["proof_bytes"] = r.proof.size();
  }
  rep["wall_ms"] = millis_since(start);
  return r;
}

namespace {

int cmd_taut(const std::string& text, std::ostream& out, std::ostream& err) {
  try {
    Formula f = parse(text);
    if (auto v = falsifying_valuation(f)) {
      out << "not a tautology: " << format_valuation(f, *v) << "\n";
      return kFailed;
    }
    out << "tautology\n";
    return kOk;
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
  } catch (const ResourceError& e) {
    err << "error: " << e.what() << "\n";
  }
  return kBadInput;
}

int run_prove(const std::string& text, const ProveOptions& opts, const std::string& emit, std::ostream& out,
              std::ostream& err) {
  ProveResult r = cmd_prove(text, opts);
  if (r.status != kOk) {
    err << "error: " << r.message << "\n";
    if (!r.report.is_null() && !emit.empty()) out << r.report.dump() << "\n";
    return r.status;
  }
  if (emit.empty()) {
    out << r.proof;
    err << r.report.dump() << "\n";
    return kOk;
  }
  std::ofstream file(emit, std::ios::binary);
  file << r.proof;
  file.close();
  if (!file) {
    err << "error: cannot write " << emit << "\n";
    return kBadInput;
  }
  out << r.report.dump() << "\n";
  return kOk;
}

int cmd_check(const std::string& path, std::ostream& out, std::ostream& err) {
  std::ifstream file(path, std::ios::binary);
  if (!file) {
    err << "error: cannot read " << path << "\n";
    return kBadInput;
  }
  std::stringstream buf;
  buf << file.rdbuf();
  std::optional<Proof> parsed;
  try {
    parsed = read_proof(buf.str());
  } catch (const FormatError& e) {
    err << "error: " << path << ": " << e.what() << "\n";
    return kBadInput;
  }
  const Proof& p = *parsed;
  try {
    Formula c = check(p);
    if (!p.closed()) {
      std::string hyps;
      for (const auto& h : p.hypotheses()) hyps += (hyps.empty() ? "" : ", ") + print(h);
      out << "{" << hyps << "} |- ";
    }
    out << print(c) << "\n";
    return kOk;
  } catch (const CheckError& e) {
    out << "line " << e.line() << ": " << e.reason() << "\n";
    return kFailed;
  }
}

int cmd_tableau(const std::string& text, const std::optional<std::string>& q_text, const std::string& format,
                std::ostream& out, std::ostream& err) {
  Formula z = var("p");
  std::optional<Formula> q;
  try {
    z = parse(text);
    if (q_text) q = parse(*q_text);
  } catch (const ParseError& e) {
    err << "error: " << e.what() << "\n";
    return kBadInput;
  }
  Tableau t = expand(z);
  const bool json_out = format == "json";
  if (!q) {
    out << (json_out ? render_json(t).dump(2) + "\n" : render_text(t));
    return kOk;
  }
  if (!is_closed(t)) {
    err << "error: the tableau of " << print(z) << " is open; only closed tableaux are Q-transformed\n";
    return kFailed;
  }
  QTableau qt = q_transform(t, QContext{*q});
  out << (json_out ? render_json(qt).dump(2) + "\n" : render_text(qt));
  return kOk;
}

struct CorpusEntry {
  bool tautology = false;
  bool agree = true;
  bool proved = false;
  std::size_t lines = 0;
  std::string problem;
};

CorpusEntry corpus_entry(const Formula& z) {
  CorpusEntry e;
  e.tautology = is_tautology(z);
  e.agree = is_closed(expand(z)) == e.tautology;
  if (!e.agree) {
    e.problem = "tableau and truth table disagree";
    return e;
  }
  if (!e.tautology) return e;
  try {
    Synthesis s = complete(z);
    if (check(s.proof) != z) {
      e.problem = "proof concludes " + print(s.proof.conclusion());
      return e;
    }
    e.proved = true;
    e.lines = s.proof.size();
  } catch (const std::exception& ex) {
    e.problem = ex.what();
  }
  return e;
}

int cmd_corpus(std::size_t max_vars, std::size_t max_conn, std::size_t jobs, std::ostream& out) {
  const auto formulas = enumerate_formulas(default_variable_names(max_vars), max_conn);
  std::vector<CorpusEntry> results(formulas.size());
  if (jobs <= 1) {
    for (std::size_t i = 0; i < formulas.size(); ++i) results[i] = corpus_entry(formulas[i]);
  } else {
    std::vector<std::future<void>> workers;
    for (std::size_t w = 0; w < jobs; ++w)
      workers.push_back(std::async(std::launch::async, [&, w] {
        for (std::size_t i = w; i < formulas.size(); i += jobs) results[i] = corpus_entry(formulas[i]);
      }));
    for (auto& f : workers) f.get();
  }

  std::size_t tautologies = 0, agree = 0, proved = 0, max_lines = 0;
  std::optional<std::size_t> largest;
  for (std::size_t i = 0; i < results.size(); ++i) {
    const auto& e = results[i];
    tautologies += e.tautology;
    agree += e.agree;
    proved += e.proved;
    if (e.proved && e.lines > max_lines) {
      max_lines = e.lines;
      largest = i;
    }
    if (!e.problem.empty()) out << "FAIL " << print(formulas[i]) << ": " << e.problem << "\n";
  }
  out << "formulas     " << formulas.size() << "\n";
  out << "tautologies  " << tautologies << "\n";
  out << "agreement    " << agree << "/" << formulas.size() << "\n";
  out << "proved       " << proved << "/" << tautologies << "\n";
  out << "max lines    " << max_lines;
  if (largest) out << "  (" << print(formulas[*largest]) << ")";
  out << "\n";
  return agree == formulas.size() && proved == tautologies ? kOk : kFailed;
}

}  // namespace

int run(int argc, const char* const* argv, std::ostream& out, std::ostream& err) {
  CLI::App app{"Implicational propositional calculus: tautologies, tableaux and Hilbert proofs", "ipc"};
  app.require_subcommand(1);

  std::string formula;
  std::optional<std::string> q;

  auto* taut = app.add_subcommand("taut", "Decide tautology-hood by truth table");
  taut->add_option("formula", formula, "Formula, e.g. \"p->q->p\"")->required();

  ProveOptions prove_opts;
  std::string emit, final_step = "id";
  auto* prove = app.add_subcommand("prove", "Synthesize a Hilbert proof of a tautology");
  prove->add_option("formula", formula)->required();
  prove->add_option("--emit", emit, "Write the proof here and print the report to stdout");
  prove->add_option("--q", q, "Stop after pruning and prove QQZ for this Q");
  prove->add_option("--final-step", final_step, "Last step from (Z->Z)->Z")
      ->check(CLI::IsMember({"id", "peirce"}));
  prove->add_flag("--stats", prove_opts.stats, "Add pruning and deduction-theorem statistics to the report");

  std::string path;
  auto* chk = app.add_subcommand("check", "Kernel-check a proof file");
  chk->add_option("path", path)->required();

  std::string format = "text";
  auto* tab = app.add_subcommand("tableau", "Print the signed dual tableau");
  tab->add_option("formula", formula)->required();
  tab->add_option("--q", q, "Print the Q-transformed tableau instead");
  tab->add_option("--format", format)->check(CLI::IsMember({"text", "json"}));

  std::size_t max_vars = 2, max_conn = 4, jobs = 1;
  auto* corpus = app.add_subcommand("corpus", "Check every formula within the bounds end to end");
  corpus->add_option("--max-vars", max_vars)->check(CLI::Range(std::size_t{1}, std::size_t{24}));
  corpus->add_option("--max-conn", max_conn);
  corpus->add_option("--jobs", jobs)->check(CLI::Range(std::size_t{1}, std::size_t{256}));

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp&) {
    out << app.help();
    return kOk;
  } catch (const CLI::ParseError& e) {
    err << "usage error: " << e.what() << "\n";
    return kBadInput;
  }

  if (*taut) return cmd_taut(formula, out, err);
  if (*prove) {
    prove_opts.q = q;
    prove_opts.final_step = final_step == "peirce" ? FinalStep::Peirce : FinalStep::Identity;
    return run_prove(formula, prove_opts, emit, out, err);
  }
  if (*chk) return cmd_check(path, out, err);
  if (*tab) return cmd_tableau(formula, q, format, out, err);
  return cmd_corpus(max_vars, max_conn, jobs, out);
}

}  // namespace ipc::cli
