#include "ipc/kernel.hpp"

namespace ipc {

std::string scheme_name(Scheme s) {
  switch (s) {
    case Scheme::Peirce:
      return "PEIRCE";
    case Scheme::K:
      return "K";
    case Scheme::S:
      return "S";
  }
  throw std::logic_error("unknown scheme");
}

Scheme scheme_from_name(const std::string& name) {
  if (name == "PEIRCE") return Scheme::Peirce;
  if (name == "K") return Scheme::K;
  if (name == "S") return Scheme::S;
  throw std::invalid_argument("unknown axiom scheme '" + name + "'");
}

std::size_t scheme_arity(Scheme s) { return s == Scheme::S ? 3 : 2; }

Formula instantiate(Scheme s, const std::vector<Formula>& subst) {
  if (subst.size() != scheme_arity(s))
    throw std::invalid_argument("scheme " + scheme_name(s) + " takes " + std::to_string(scheme_arity(s)) +
                                " formulas, got " + std::to_string(subst.size()));
  const Formula& a = subst[0];
  const Formula& b = subst[1];
  switch (s) {
    case Scheme::Peirce:
      return imp(imp(imp(a, b), a), a);
    case Scheme::K:
      return imp(a, imp(b, a));
    case Scheme::S: {
      const Formula& c = subst[2];
      return imp(imp(a, imp(b, c)), imp(imp(a, b), imp(a, c)));
    }
  }
  throw std::logic_error("unknown scheme");
}

const Formula& Proof::conclusion() const {
  if (lines_.empty()) throw std::logic_error("empty proof has no conclusion");
  return lines_.back().formula;
}

CheckError::CheckError(std::size_t line, const std::string& reason)
    : std::runtime_error("line " + std::to_string(line) + ": " + reason), line_(line), reason_(reason) {}

namespace {

struct LineChecker {
  const Proof& proof;
  std::size_t n;

  void operator()(const AxiomStep& step) const {
    if (step.subst.size() != scheme_arity(step.scheme))
      throw CheckError(n, "scheme " + scheme_name(step.scheme) + " needs " +
                              std::to_string(scheme_arity(step.scheme)) + " substitution formulas");
    if (instantiate(step.scheme, step.subst) != proof.lines()[n].formula)
      throw CheckError(n, "formula is not the cited " + scheme_name(step.scheme) + " instance");
  }

  void operator()(const HypStep& step) const {
    if (step.index >= proof.hypotheses().size())
      throw CheckError(n, "hypothesis index " + std::to_string(step.index) + " out of range");
    if (proof.hypotheses()[step.index] != proof.lines()[n].formula)
      throw CheckError(n, "formula differs from hypothesis " + std::to_string(step.index));
  }

  void operator()(const MpStep& step) const {
    if (step.major >= n || step.minor >= n) throw CheckError(n, "forward reference");
    const Formula& major = proof.lines()[step.major].formula;
    const Formula& minor = proof.lines()[step.minor].formula;
    if (!major.is_imp()) throw CheckError(n, "major premise is not a conditional");
    if (major.antecedent() != minor) throw CheckError(n, "minor premise does not match the antecedent");
    if (major.consequent() != proof.lines()[n].formula)
      throw CheckError(n, "formula is not the consequent of the major premise");
  }
};

}  // namespace

Formula check(const Proof& p) {
  if (p.lines().empty()) throw CheckError(0, "proof has no lines");
  for (std::size_t n = 0; n < p.lines().size(); ++n) std::visit(LineChecker{p, n}, p.lines()[n].just);
  return p.conclusion();
}

std::set<Scheme> used_schemes(const Proof& p) {
  check(p);
  std::set<Scheme> out;
  for (const auto& line : p.lines())
    if (const auto* ax = std::get_if<AxiomStep>(&line.just)) out.insert(ax->scheme);
  return out;
}

}  // namespace ipc
