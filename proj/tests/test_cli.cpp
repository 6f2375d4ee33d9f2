#include <doctest.h>

#include <filesystem>
#include <fstream>
#include <sstream>

#include "ipc/cli.hpp"
#include "ipc/proof_io.hpp"

using namespace ipc;
namespace fs = std::filesystem;

namespace {

struct Run {
  int status;
  std::string out;
  std::string err;
};

Run ipc_run(std::vector<std::string> args) {
  args.insert(args.begin(), "ipc");
  std::vector<const char*> argv;
  for (const auto& a : args) argv.push_back(a.c_str());
  std::ostringstream out, err;
  int status = cli::run(static_cast<int>(argv.size()), argv.data(), out, err);
  return {status, out.str(), err.str()};
}

fs::path scratch(const std::string& name) {
  fs::path dir = fs::temp_directory_path() / "ipc_cli_tests";
  fs::create_directories(dir);
  return dir / name;
}

std::string slurp(const fs::path& p) {
  std::ifstream in(p, std::ios::binary);
  std::stringstream s;
  s << in.rdbuf();
  return s.str();
}

}  // namespace

TEST_CASE("taut") {
  auto r = ipc_run({"taut", "p->q->p"});
  CHECK(r.status == 0);
  CHECK(r.out == "tautology\n");

  r = ipc_run({"taut", "p->q"});
  CHECK(r.status == 1);
  CHECK(r.out == "not a tautology: p=true q=false\n");

  r = ipc_run({"taut", "(q->p)->q"});
  CHECK(r.status == 1);
  CHECK(r.out == "not a tautology: q=false p=false\n");

  r = ipc_run({"taut", "p->"});
  CHECK(r.status == 2);
  CHECK(r.err.find("position 3") != std::string::npos);
}

TEST_CASE("prove, then check the emitted file") {
  const fs::path file = scratch("pp.json");
  auto r = ipc_run({"prove", "p->p", "--emit", file.string()});
  REQUIRE(r.status == 0);
  auto report = nlohmann::json::parse(r.out);
  CHECK(report["formula"] == "p->p");
  CHECK(report["tautology"] == true);
  CHECK(report["tableau_nodes"] == 3);
  CHECK(report["branches"] == 1);
  CHECK(report["final_step"] == "id");
  CHECK(report.contains("wall_ms"));
  CHECK_FALSE(report.contains("deduction_calls"));

  auto c = ipc_run({"check", file.string()});
  CHECK(c.status == 0);
  CHECK(c.out == "p->p\n");

  // the same document printed to stdout
  auto s = ipc_run({"prove", "p->p"});
  CHECK(s.status == 0);
  CHECK(s.out == slurp(file));
  CHECK(nlohmann::json::parse(s.err)["proof_lines"] == report["proof_lines"]);
}

TEST_CASE("prove with stats, Q override and final step") {
  auto r = ipc_run({"prove", "((p->q)->p)->p", "--stats", "--emit", scratch("peirce.json").string()});
  REQUIRE(r.status == 0);
  auto report = nlohmann::json::parse(r.out);
  CHECK(report["schemes"] == nlohmann::json::array({"PEIRCE", "K", "S"}));
  CHECK(report["deduction_calls"].get<int>() > 0);
  CHECK(report["deduction_expansion"].get<double>() <= 5.0);
  CHECK(report["prune_steps"] == 6);

  const fs::path qfile = scratch("qq.json");
  r = ipc_run({"prove", "p->p", "--q", "q", "--emit", qfile.string()});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["conclusion"] == "((p->p)->q)->q");
  CHECK(ipc_run({"check", qfile.string()}).out == "((p->p)->q)->q\n");

  const fs::path pfile = scratch("final.json");
  r = ipc_run({"prove", "p->q->p", "--final-step", "peirce", "--emit", pfile.string()});
  REQUIRE(r.status == 0);
  CHECK(nlohmann::json::parse(r.out)["final_step"] == "peirce");
  CHECK(ipc_run({"check", pfile.string()}).out == "p->q->p\n");

  CHECK(ipc_run({"prove", "p->p", "--final-step", "cut"}).status == 2);
}

TEST_CASE("prove rejects non-tautologies and bad input") {
  auto r = ipc_run({"prove", "p"});
  CHECK(r.status == 1);
  CHECK(r.err.find("p=false") != std::string::npos);
  CHECK(r.out.empty());
  CHECK(ipc_run({"prove", "p->("}).status == 2);
  CHECK(ipc_run({"prove", "p->p", "--q", ")"}).status == 2);
  CHECK(ipc_run({"prove", "p->p", "--emit", "/nonexistent-dir/x.json"}).status == 2);
}

TEST_CASE("check reports the first bad line") {
  const fs::path good = scratch("good.json");
  REQUIRE(ipc_run({"prove", "p->q->p", "--emit", good.string()}).status == 0);
  Proof p = read_proof(slurp(good));

  std::vector<Line> lines = p.lines();
  lines[3].formula = parse("q->q");
  const fs::path bad = scratch("bad.json");
  std::ofstream(bad) << write_proof(Proof(p.hypotheses(), lines));
  auto r = ipc_run({"check", bad.string()});
  CHECK(r.status == 1);
  CHECK(r.out.starts_with("line 3: "));

  const fs::path empty = scratch("empty.json");
  std::ofstream(empty).close();
  CHECK(ipc_run({"check", empty.string()}).status == 2);
  const fs::path garbled = scratch("garbled.json");
  std::ofstream(garbled) << "{\"hypotheses\": [], \"lines\": [ {\"formula\": 3";
  CHECK(ipc_run({"check", garbled.string()}).status == 2);
  CHECK(ipc_run({"check", scratch("missing.json").string()}).status == 2);

  const fs::path deduction = scratch("deduction.json");
  std::ofstream(deduction) << R"({"hypotheses":["p","p->q"],"lines":[{"formula":"p","just":{"kind":"hyp","index":0}},)"
                              R"({"formula":"p->q","just":{"kind":"hyp","index":1}},)"
                              R"({"formula":"q","just":{"kind":"mp","major":1,"minor":0}}]})";
  r = ipc_run({"check", deduction.string()});
  CHECK(r.status == 0);
  CHECK(r.out == "{p, p->q} |- q\n");
}

TEST_CASE("tableau") {
  auto r = ipc_run({"tableau", "p->p"});
  CHECK(r.status == 0);
  CHECK(r.out == "[0] T p->p\n  [1] F p  (B0 of 0)\n    [2] T p  (B1 of 0)  closed\ntableau closed\n");

  r = ipc_run({"tableau", "p->q"});
  CHECK(r.status == 0);
  CHECK(r.out.find("OPEN") != std::string::npos);

  r = ipc_run({"tableau", "p->p", "--q", "q", "--format", "json"});
  REQUIRE(r.status == 0);
  auto j = nlohmann::json::parse(r.out);
  CHECK(j["nodes"][0]["polarity"] == "QQ");
  CHECK(j["nodes"][0]["body"] == "p->p");
  CHECK(j["nodes"][1]["polarity"] == "Q");
  CHECK(j["nodes"][1]["body"] == "p");
  CHECK(j["nodes"][2]["polarity"] == "QQ");
  CHECK(j["nodes"][2]["body"] == "p");

  CHECK(ipc_run({"tableau", "p->q", "--q", "q"}).status == 1);
  CHECK(ipc_run({"tableau", "p->p", "--format", "svg"}).status == 2);
  CHECK(ipc_run({"tableau", "(p"}).status == 2);
}

TEST_CASE("corpus") {
  auto r = ipc_run({"corpus", "--max-vars", "1", "--max-conn", "3"});
  CHECK(r.status == 0);
  CHECK(r.out.find("formulas     9\n") != std::string::npos);
  CHECK(r.out.find("tautologies  6\n") != std::string::npos);
  CHECK(r.out.find("agreement    9/9\n") != std::string::npos);
  CHECK(r.out.find("proved       6/6\n") != std::string::npos);

  auto par = ipc_run({"corpus", "--max-vars", "1", "--max-conn", "3", "--jobs", "3"});
  CHECK(par.out == r.out);

  CHECK(ipc_run({"corpus", "--max-vars", "0"}).status == 2);
  CHECK(ipc_run({"corpus", "--max-vars", "x"}).status == 2);
}

TEST_CASE("usage errors") {
  CHECK(ipc_run({}).status == 2);
  CHECK(ipc_run({"frobnicate"}).status == 2);
  CHECK(ipc_run({"taut"}).status == 2);
  auto help = ipc_run({"--help"});
  CHECK(help.status == 0);
  CHECK(help.out.find("prove") != std::string::npos);
}

TEST_CASE("prove is deterministic apart from wall time") {
  cli::ProveOptions opts;
  opts.stats = true;
  auto a = cli::cmd_prove("(p->q)->(q->r)->p->r", opts);
  auto b = cli::cmd_prove("(p->q)->(q->r)->p->r", opts);
  REQUIRE(a.status == 0);
  CHECK(a.proof == b.proof);
  a.report.erase("wall_ms");
  b.report.erase("wall_ms");
  CHECK(a.report == b.report);
}
