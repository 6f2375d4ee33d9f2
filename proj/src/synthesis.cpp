#include "ipc/synthesis.hpp"

#include <algorithm>
#include <future>
#include <map>

namespace ipc {

namespace {

std::vector<Formula> realize_all(const QBranch& theta, const QContext& ctx) {
  std::vector<Formula> out;
  out.reserve(theta.size());
  for (const auto& t : theta) out.push_back(t.realize(ctx));
  return out;
}

void require_conclusion(const Proof& p, const Formula& expected, const char* what) {
  if (p.lines().empty() || p.conclusion() != expected)
    throw DerivationError(std::string(what) + ": premise concludes " +
                          (p.lines().empty() ? std::string("nothing") : print(p.conclusion())) + ", expected " +
                          print(expected));
}

// ⊢ term -> D for a term of theta.
Proof term_implies_disjunction(const std::vector<Formula>& terms, std::size_t i) {
  return disj_intro_imp(i, terms);
}

}  // namespace

Formula d_of(const QBranch& theta, const QContext& ctx) {
  if (theta.empty()) throw DerivationError("empty branch has no disjunction");
  return disj_many(realize_all(theta, ctx));
}

Proof axiom_proof(const QBranch& theta, const QContext& ctx) {
  auto pair = conjugate_pair(theta);
  if (!pair) throw DerivationError("branch is not closed");
  const auto [i, j] = *pair;
  const Formula& w = theta[i].body;
  const std::vector<Formula> terms = realize_all(theta, ctx);
  const Formula d = disj_many(terms);

  // QW -> D and QQW -> D, then QQD through part 8.
  ProofBuilder b;
  std::size_t qw_d = b.append(term_implies_disjunction(terms, i));
  std::size_t qqw_d = b.append(term_implies_disjunction(terms, j));
  std::size_t r8 = b.append(robbin(8, ctx, {w, d}));
  std::size_t qqd = b.mp(b.mp(r8, qw_d), qqw_d);

  // QQD -> QQZ_0 ∨ ... ∨ QQZ_N -> Z_0 ∨ ... ∨ Z_N. Every term is Q(A) for
  // A = W (Q terms) or A = QW (QQ terms), so part 4 maps QQQA back to QA.
  std::vector<Formula> lifted;
  std::vector<Proof> back;
  for (std::size_t n = 0; n < theta.size(); ++n) {
    const Formula a = theta[n].polarity == Polarity::Q ? theta[n].body : ctx.neg(theta[n].body);
    lifted.push_back(ctx.negneg(terms[n]));
    back.push_back(robbin(4, ctx, {a}));
  }
  std::size_t spread = b.append(qq_distribute_imp(ctx, terms));
  std::size_t down = b.append(disj_map_imp(back, lifted, terms));
  std::size_t qqd_d = chain(b, spread, down);
  return std::move(b).build(b.mp(qqd_d, qqd));
}

Proof rule_a(const QBranch& theta, std::size_t alpha, const Proof& p0, const Proof& p1, const QContext& ctx) {
  if (alpha >= theta.size() || theta[alpha].polarity != Polarity::Q || !theta[alpha].body.is_imp())
    throw DerivationError("rule A: term " + std::to_string(alpha) + " is not of the form Q(X->Y)");
  const Formula& x = theta[alpha].body.antecedent();
  const Formula& y = theta[alpha].body.consequent();
  const std::vector<Formula> terms = realize_all(theta, ctx);
  const Formula d = disj_many(terms);
  const Formula a0 = ctx.negneg(x);
  const Formula a1 = ctx.neg(y);
  require_conclusion(p0, disj(d, a0), "rule A");
  require_conclusion(p1, disj(d, a1), "rule A");

  ProofBuilder b;
  std::size_t alpha_d = b.append(term_implies_disjunction(terms, alpha));
  std::size_t r6 = b.append(robbin(6, ctx, {x, y}));           // a0 -> a1 -> alpha
  std::size_t lifted = lift(b, alpha_d, a1);                    // (a1 -> alpha) -> a1 -> D
  std::size_t a0_a1_d = chain(b, r6, lifted);                   // a0 -> a1 -> D
  std::size_t a1_or_d = b.append(disj_commute(p1));             // (a1 -> D) -> D
  std::size_t a0_d = chain(b, a0_a1_d, a1_or_d);                // a0 -> D
  std::size_t a0_or_d = b.append(disj_commute(p0));             // (a0 -> D) -> D
  return std::move(b).build(b.mp(a0_or_d, a0_d));
}

Proof rule_b(const QBranch& theta, std::size_t beta, int slot, const Proof& p, const QContext& ctx) {
  if (beta >= theta.size() || theta[beta].polarity != Polarity::QQ || !theta[beta].body.is_imp())
    throw DerivationError("rule B: term " + std::to_string(beta) + " is not of the form QQ(X->Y)");
  if (slot != 0 && slot != 1) throw DerivationError("rule B: slot must be 0 or 1");
  const Formula& x = theta[beta].body.antecedent();
  const Formula& y = theta[beta].body.consequent();
  const std::vector<Formula> terms = realize_all(theta, ctx);
  const Formula d = disj_many(terms);
  const Formula consequent = slot == 0 ? ctx.neg(x) : ctx.negneg(y);
  require_conclusion(p, disj(d, consequent), "rule B");

  ProofBuilder b;
  // QX -> QQ(X->Y) needs part 7; QQY -> QQ(X->Y) is part 5.
  std::size_t to_beta = b.append(robbin(slot == 0 ? 7 : 5, ctx, {x, y}));
  std::size_t beta_d = b.append(term_implies_disjunction(terms, beta));
  std::size_t c_d = chain(b, to_beta, beta_d);
  std::size_t c_or_d = b.append(disj_commute(p));
  return std::move(b).build(b.mp(c_or_d, c_d));
}

namespace {

void verify_step(const Proof& p, const Formula& expected) {
  if (check(p) != expected) throw DerivationError("intermediate proof has the wrong conclusion");
  if (!is_tautology(expected)) throw DerivationError("intermediate conclusion is not a tautology");
}

std::size_t position_in(const std::vector<std::size_t>& path, std::size_t id) {
  auto it = std::find(path.begin(), path.end(), id);
  if (it == path.end()) throw DerivationError("rule source is not on the branch");
  return static_cast<std::size_t>(it - path.begin());
}

}  // namespace

Proof prune(const QTableau& qt, const PruneOptions& opts, PruneStats* stats) {
  if (!is_closed(qt)) throw TableauError("cannot prune a tableau with an open branch");
  const QContext& ctx = qt.ctx;

  std::map<std::size_t, Proof> proofs;
  const auto leaves = qt.leaves();
  if (opts.parallel_leaves) {
    std::vector<std::future<Proof>> jobs;
    for (std::size_t leaf : leaves)
      jobs.push_back(std::async(std::launch::async, [&qt, &ctx, leaf] { return axiom_proof(qt.branch(leaf), ctx); }));
    for (std::size_t k = 0; k < leaves.size(); ++k) proofs.emplace(leaves[k], jobs[k].get());
  } else {
    for (std::size_t leaf : leaves) proofs.emplace(leaf, axiom_proof(qt.branch(leaf), ctx));
  }
  PruneStats local;
  local.leaves = leaves.size();
  for (const auto& [leaf, p] : proofs) {
    local.axiom_lines += p.size();
    if (opts.verify_steps) verify_step(p, d_of(qt.branch(leaf), ctx));
  }

  std::optional<Proof> alternative;  // proof for the slot-1 child of a pending type-A split
  for (std::size_t id = qt.nodes.size(); id-- > 1;) {
    const auto& node = qt.nodes[id];
    auto it = proofs.find(id);
    if (it == proofs.end() || !node.from) throw DerivationError("pruning reached a node that is not a leaf");
    Proof p = std::move(it->second);
    proofs.erase(it);
    const std::size_t parent = *node.parent;
    const auto path = qt.path(parent);
    const std::size_t source = position_in(path, node.from->source);
    ++local.steps;

    if (node.from->rule == RuleKind::A && node.from->slot == 1) {
      alternative = std::move(p);
      continue;
    }
    const QBranch theta = qt.branch(parent);
    Proof merged = node.from->rule == RuleKind::B
                       ? rule_b(theta, source, node.from->slot, p, ctx)
                       : rule_a(theta, source, p, *alternative, ctx);
    alternative.reset();
    if (opts.verify_steps) verify_step(merged, d_of(theta, ctx));
    proofs.emplace(parent, std::move(merged));
  }
  if (stats) *stats = local;
  return std::move(proofs.at(0));
}

NotTautologyError::NotTautologyError(const Formula& z, Valuation falsifying)
    : std::runtime_error(print(z) + " is not a tautology"), falsifying_(std::move(falsifying)) {}

namespace {

Tableau closed_tableau(const Formula& z) {
  if (auto v = falsifying_valuation(z)) throw NotTautologyError(z, std::move(*v));
  Tableau t = expand(z);
  if (!is_closed(t)) throw TableauError("tableau of a tautology did not close: " + print(z));
  return t;
}

}  // namespace

Synthesis prove_qq(const Formula& z, const QContext& ctx, const PruneOptions& opts) {
  DeductionStatsScope scope;
  Tableau t = closed_tableau(z);
  SynthesisStats stats;
  stats.tableau_nodes = t.nodes.size();
  stats.branches = t.leaves().size();
  Proof p = prune(q_transform(t, ctx), opts, &stats.prune);
  stats.deduction = scope.stats();
  stats.proof_lines = p.size();
  return {std::move(p), stats};
}

Synthesis complete(const Formula& z, FinalStep final_step, const PruneOptions& opts) {
  Synthesis qq = prove_qq(z, QContext{z}, opts);  // ⊢ (z->z)->z
  ProofBuilder b;
  std::size_t zzz = b.append(qq.proof);
  std::size_t last;
  if (final_step == FinalStep::Identity) {
    std::size_t id = b.append(prove_id(z));
    last = b.mp(zzz, id);
  } else {
    std::size_t pe = b.axiom(Scheme::Peirce, {z, z});
    last = b.mp(pe, zzz);
  }
  Proof p = std::move(b).build(last);
  qq.stats.proof_lines = p.size();
  return {std::move(p), qq.stats};
}

}  // namespace ipc
