#include <doctest.h>

#include "ipc/derivation.hpp"
#include "ipc/kernel.hpp"
#include "ipc/proof_io.hpp"
#include "support.hpp"

using namespace ipc;
namespace t = ipc::testing;

namespace {

Formula P(const char* s) { return parse(s); }

std::string failure(const Proof& p) {
  try {
    check(p);
  } catch (const CheckError& e) {
    return e.what();
  }
  return "accepted";
}

}  // namespace

TEST_CASE("scheme instances") {
  CHECK(instantiate(Scheme::K, {P("p"), P("q")}) == P("p->q->p"));
  CHECK(instantiate(Scheme::Peirce, {P("p"), P("p")}) == P("((p->p)->p)->p"));
  CHECK(instantiate(Scheme::S, {P("p"), P("q"), P("r")}) == P("(p->q->r)->(p->q)->p->r"));
  CHECK_THROWS_AS(instantiate(Scheme::K, {P("p")}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(Scheme::S, {P("p"), P("q")}), std::invalid_argument);
  CHECK_THROWS_AS(instantiate(Scheme::Peirce, {P("p"), P("q"), P("r")}), std::invalid_argument);
  CHECK(scheme_from_name("PEIRCE") == Scheme::Peirce);
  CHECK(scheme_name(Scheme::S) == "S");
  CHECK_THROWS_AS(scheme_from_name("B"), std::invalid_argument);
}

TEST_CASE("check accepts valid proofs") {
  Proof k({}, {{P("p->q->p"), AxiomStep{Scheme::K, {P("p"), P("q")}}}});
  CHECK(check(k) == P("p->q->p"));
  CHECK(used_schemes(k) == std::set<Scheme>{Scheme::K});

  Proof id = prove_id(P("p"));
  CHECK(id.size() == 5);
  CHECK(check(id) == P("p->p"));
  CHECK(used_schemes(id) == std::set<Scheme>{Scheme::K, Scheme::S});

  Proof mp({P("p"), P("p->q")}, {{P("p"), HypStep{0}}, {P("p->q"), HypStep{1}}, {P("q"), MpStep{1, 0}}});
  CHECK(check(mp) == P("q"));
  CHECK(used_schemes(mp).empty());
}

TEST_CASE("check rejects with a line diagnostic") {
  const Line hp{P("p"), HypStep{0}};
  const Line hpq{P("p->q"), HypStep{1}};
  const std::vector<Formula> hyps{P("p"), P("p->q")};

  CHECK(failure(Proof(hyps, {hp, {P("q"), MpStep{2, 0}}, hpq})) == "line 1: forward reference");
  CHECK(failure(Proof(hyps, {hp, {P("q"), MpStep{1, 0}}})) == "line 1: forward reference");
  CHECK(failure(Proof(hyps, {hp, hpq, {P("r"), MpStep{1, 0}}})) ==
        "line 2: formula is not the consequent of the major premise");
  CHECK(failure(Proof(hyps, {hp, hpq, {P("q"), MpStep{0, 1}}})) == "line 2: major premise is not a conditional");
  CHECK(failure(Proof(hyps, {hpq, hpq, {P("q"), MpStep{1, 0}}})) ==
        "line 2: minor premise does not match the antecedent");
  CHECK(failure(Proof(hyps, {{P("q"), HypStep{0}}})) == "line 0: formula differs from hypothesis 0");
  CHECK(failure(Proof(hyps, {{P("p"), HypStep{5}}})) == "line 0: hypothesis index 5 out of range");
  CHECK(failure(Proof({}, {{P("p->q->q"), AxiomStep{Scheme::K, {P("p"), P("q")}}}})) ==
        "line 0: formula is not the cited K instance");
  CHECK(failure(Proof({}, {{P("p->q->p"), AxiomStep{Scheme::K, {P("p")}}}})).starts_with("line 0: scheme K needs"));
  CHECK(failure(Proof({}, {})) == "line 0: proof has no lines");
  CHECK_THROWS_AS(used_schemes(Proof({}, {hp})), CheckError);
}

TEST_CASE("unused hypotheses are harmless") {
  std::mt19937_64 rng(3);
  for (int i = 0; i < 100; ++i) {
    auto d = t::random_deduction(rng, 20).proof;
    REQUIRE(check(d) == d.conclusion());
    auto hyps = d.hypotheses();
    hyps.push_back(t::random_formula_upto(rng, t::pqr(), 3));
    hyps.push_back(P("s"));
    CHECK(check(Proof(hyps, d.lines())) == d.conclusion());
  }
}

TEST_CASE("random deductions are valid and sound") {
  std::mt19937_64 rng(17);
  for (int i = 0; i < 300; ++i) {
    auto d = t::random_deduction(rng, 30).proof;
    REQUIRE(d.size() <= 30);
    CHECK(t::proof_is_sound(d));
  }
}

TEST_CASE("mutated proofs are rejected or still sound") {
  std::mt19937_64 rng(23);
  std::vector<Proof> originals{prove_id(P("p->q")), robbin(3, QContext{P("r")}, {P("p")}),
                               robbin(7, QContext{P("r")}, {P("p"), P("q")})};
  for (int i = 0; i < 20; ++i) originals.push_back(t::random_deduction(rng, 30).proof);
  int rejected = 0, tried = 0;
  for (int round = 0; round < 20; ++round)
    for (const auto& p : originals)
      for (auto kind : {t::MutationKind::SwapLines, t::MutationKind::EditSubformula, t::MutationKind::EditIndex}) {
        auto m = t::mutate(p, kind, rng);
        if (!m) continue;
        ++tried;
        std::optional<Formula> accepted;
        try {
          accepted = check(*m);
        } catch (const CheckError& e) {
          CHECK(e.line() < m->size());
          ++rejected;
        }
        // an accepted mutant is a proof of whatever its last line says
        if (accepted) CHECK(t::oracle_entails(m->hypotheses(), *accepted));
      }
  CHECK(tried > 1000);
  CHECK(rejected > tried / 2);
}

TEST_CASE("proof documents round-trip") {
  Proof d({P("p"), P("p->q")},
          {{P("p"), HypStep{0}},
           {P("p->q"), HypStep{1}},
           {P("q"), MpStep{1, 0}},
           {P("((p->q)->p)->p"), AxiomStep{Scheme::Peirce, {P("p"), P("q")}}}});
  const std::string text = write_proof(d);
  CHECK(text ==
        R"({"hypotheses":["p","p->q"],"lines":[{"formula":"p","just":{"index":0,"kind":"hyp"}},)"
        R"({"formula":"p->q","just":{"index":1,"kind":"hyp"}},)"
        R"({"formula":"q","just":{"kind":"mp","major":1,"minor":0}},)"
        R"({"formula":"((p->q)->p)->p","just":{"kind":"axiom","scheme":"PEIRCE","subst":["p","q"]}}]})"
        "\n");
  Proof back = read_proof(text);
  CHECK(write_proof(back) == text);
  CHECK(check(back) == check(d));
  // whitespace and field order are not significant
  Proof loose = read_proof(R"( { "lines" : [ { "just" : { "minor":0, "major":0, "kind":"mp" }, "formula":"q" } ],
                                 "hypotheses" : [] } )");
  CHECK(loose.size() == 1);
  CHECK(std::get<MpStep>(loose.lines()[0].just).major == 0);
}

TEST_CASE("malformed proof documents") {
  for (const char* bad : {"", "[]", "{", R"({"lines":[]})", R"({"hypotheses":[],"lines":{}})",
                          R"({"hypotheses":[1],"lines":[]})",
                          R"({"hypotheses":[],"lines":[{"formula":"p->","just":{"kind":"hyp","index":0}}]})",
                          R"({"hypotheses":[],"lines":[{"formula":"p","just":{"kind":"cut"}}]})",
                          R"({"hypotheses":[],"lines":[{"formula":"p","just":{"kind":"hyp","index":-1}}]})",
                          R"({"hypotheses":[],"lines":[{"formula":"p","just":{"kind":"axiom","scheme":"B","subst":[]}}]})",
                          R"({"hypotheses":[],"lines":[{"formula":"p","just":{"kind":"mp","major":0}}]})"}) {
    CAPTURE(bad);
    CHECK_THROWS_AS(read_proof(bad), FormatError);
  }
}
