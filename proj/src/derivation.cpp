#include "ipc/derivation.hpp"

#include <algorithm>

namespace ipc {

// ---------------------------------------------------------------------------
// ProofBuilder

std::size_t ProofBuilder::add(Line line) {
  lines_.push_back(std::move(line));
  return lines_.size() - 1;
}

std::size_t ProofBuilder::axiom(Scheme s, std::vector<Formula> subst) {
  Formula f = instantiate(s, subst);
  return add(Line{std::move(f), AxiomStep{s, std::move(subst)}});
}

std::size_t ProofBuilder::hyp(std::size_t index) {
  if (index >= hypotheses_.size()) throw DerivationError("hypothesis index out of range");
  return add(Line{hypotheses_[index], HypStep{index}});
}

std::size_t ProofBuilder::hyp(const Formula& f) {
  auto it = std::find(hypotheses_.begin(), hypotheses_.end(), f);
  if (it == hypotheses_.end()) throw DerivationError("no hypothesis " + print(f));
  return hyp(static_cast<std::size_t>(it - hypotheses_.begin()));
}

std::size_t ProofBuilder::mp(std::size_t major, std::size_t minor) {
  const Formula& maj = formula(major);
  if (!maj.is_imp() || maj.antecedent() != formula(minor))
    throw DerivationError("modus ponens mismatch: " + print(maj) + " applied to " + print(formula(minor)));
  return add(Line{maj.consequent(), MpStep{major, minor}});
}

std::size_t ProofBuilder::append(const Proof& sub, std::span<const std::optional<std::size_t>> hyp_lines) {
  if (sub.lines().empty()) throw DerivationError("cannot append an empty proof");
  std::vector<std::size_t> map(sub.size());
  for (std::size_t i = 0; i < sub.size(); ++i) {
    const Line& line = sub.lines()[i];
    if (const auto* h = std::get_if<HypStep>(&line.just)) {
      if (h->index >= sub.hypotheses().size()) throw DerivationError("appended proof cites a missing hypothesis");
      const Formula& wanted = sub.hypotheses()[h->index];
      if (h->index < hyp_lines.size() && hyp_lines[h->index]) {
        if (formula(*hyp_lines[h->index]) != wanted) throw DerivationError("substituted line does not match hypothesis");
        map[i] = *hyp_lines[h->index];
      } else {
        map[i] = hyp(wanted);
      }
    } else if (const auto* m = std::get_if<MpStep>(&line.just)) {
      if (m->major >= i || m->minor >= i) throw DerivationError("appended proof has a forward reference");
      map[i] = add(Line{line.formula, MpStep{map[m->major], map[m->minor]}});
    } else {
      map[i] = add(line);
    }
  }
  return map.back();
}

Proof ProofBuilder::build(std::size_t line) && {
  if (line >= lines_.size()) throw DerivationError("conclusion line out of range");
  if (line + 1 != lines_.size()) lines_.push_back(lines_[line]);
  return Proof(std::move(hypotheses_), std::move(lines_));
}

std::size_t chain(ProofBuilder& b, std::size_t ab, std::size_t bc) {
  const Formula& f = b.formula(ab);
  const Formula& g = b.formula(bc);
  if (!f.is_imp() || !g.is_imp() || f.consequent() != g.antecedent())
    throw DerivationError("cannot chain " + print(f) + " with " + print(g));
  Formula a = f.antecedent(), mid = f.consequent(), c = g.consequent();
  std::size_t k = b.axiom(Scheme::K, {g, a});
  std::size_t a_bc = b.mp(k, bc);
  std::size_t s = b.axiom(Scheme::S, {a, mid, c});
  std::size_t ab_ac = b.mp(s, a_bc);
  return b.mp(ab_ac, ab);
}

std::size_t lift(ProofBuilder& b, std::size_t zw, const Formula& y) {
  const Formula& f = b.formula(zw);
  if (!f.is_imp()) throw DerivationError("cannot lift non-conditional " + print(f));
  Formula z = f.antecedent(), w = f.consequent();
  std::size_t k = b.axiom(Scheme::K, {f, y});
  std::size_t y_zw = b.mp(k, zw);
  std::size_t s = b.axiom(Scheme::S, {y, z, w});
  return b.mp(s, y_zw);
}

std::size_t contra(ProofBuilder& b, std::size_t xy, const Formula& z) {
  const Formula f = b.formula(xy);
  if (!f.is_imp()) throw DerivationError("cannot contrapose non-conditional " + print(f));
  const Formula& x = f.antecedent();
  const Formula& y = f.consequent();
  // S gives (X->Y->Z)->(X->Y)->X->Z; discharge the middle premise with xy.
  const Formula w = imp(x, imp(y, z));
  const Formula u = imp(x, z);
  std::size_t s = b.axiom(Scheme::S, {x, y, z});
  std::size_t w_v = b.mp(b.axiom(Scheme::K, {f, w}), xy);
  std::size_t s2 = b.axiom(Scheme::S, {w, f, u});
  std::size_t w_u = b.mp(b.mp(s2, s), w_v);
  std::size_t k = b.axiom(Scheme::K, {imp(y, z), x});
  return chain(b, k, w_u);
}

std::size_t flip_apply(ProofBuilder& b, const Formula& x, const Formula& y) {
  const Formula v = imp(x, y);
  std::size_t vv = b.append(prove_id(v));
  std::size_t s = b.axiom(Scheme::S, {v, x, y});  // (V->X->Y)->(V->X)->V->Y
  std::size_t vx_vy = b.mp(s, vv);
  std::size_t k = b.axiom(Scheme::K, {x, v});     // X->V->X
  return chain(b, k, vx_vy);
}

Proof compose(const Proof& first, const Proof& second) {
  if (second.hypotheses().size() != 1 || second.hypotheses()[0] != first.conclusion())
    throw DerivationError("compose: second derivation must assume exactly the first's conclusion");
  ProofBuilder b(first.hypotheses());
  std::size_t c = b.append(first);
  const std::optional<std::size_t> subst[] = {c};
  std::size_t r = b.append(second, subst);
  return std::move(b).build(r);
}

// ---------------------------------------------------------------------------
// Deduction theorem and friends

namespace {

thread_local DeductionStatsScope* g_stats_scope = nullptr;

}  // namespace

DeductionStatsScope::DeductionStatsScope() : outer_(g_stats_scope) { g_stats_scope = this; }
DeductionStatsScope::~DeductionStatsScope() { g_stats_scope = outer_; }

void DeductionStatsScope::record(std::size_t input_lines, std::size_t output_lines) {
  if (g_stats_scope == nullptr) return;
  ++g_stats_scope->stats_.calls;
  g_stats_scope->stats_.input_lines += input_lines;
  g_stats_scope->stats_.output_lines += output_lines;
}

Proof prove_id(const Formula& a) {
  ProofBuilder b;
  Formula aa = imp(a, a);
  std::size_t s = b.axiom(Scheme::S, {a, aa, a});    // (a->(a->a)->a)->(a->a->a)->a->a
  std::size_t k1 = b.axiom(Scheme::K, {a, aa});      // a->(a->a)->a
  std::size_t m = b.mp(s, k1);                       // (a->a->a)->a->a
  std::size_t k2 = b.axiom(Scheme::K, {a, a});       // a->a->a
  return std::move(b).build(b.mp(m, k2));
}

Proof deduction_theorem(const Proof& d, const Formula& a) {
  const auto& hyps = d.hypotheses();
  auto last = std::find(hyps.rbegin(), hyps.rend(), a);
  if (last == hyps.rend()) throw DerivationError("deduction theorem: " + print(a) + " is not a hypothesis");
  if (d.lines().empty()) throw DerivationError("deduction theorem: empty derivation");
  const std::size_t removed = static_cast<std::size_t>(hyps.rend() - last) - 1;

  std::vector<Formula> rest;
  for (std::size_t i = 0; i < hyps.size(); ++i)
    if (i != removed) rest.push_back(hyps[i]);
  ProofBuilder b(std::move(rest));

  // map[i] is the output line proving a -> (formula of input line i).
  std::vector<std::size_t> map(d.size());
  for (std::size_t i = 0; i < d.size(); ++i) {
    const Line& line = d.lines()[i];
    if (const auto* m = std::get_if<MpStep>(&line.just)) {
      if (m->major >= i || m->minor >= i) throw DerivationError("deduction theorem: forward reference in input");
      const Formula& major = d.lines()[m->major].formula;
      std::size_t s = b.axiom(Scheme::S, {a, major.antecedent(), major.consequent()});
      std::size_t x = b.mp(s, map[m->major]);
      map[i] = b.mp(x, map[m->minor]);
      continue;
    }
    const auto* h = std::get_if<HypStep>(&line.just);
    if (h != nullptr && h->index == removed) {
      map[i] = b.append(prove_id(a));
      continue;
    }
    std::size_t l;
    if (h != nullptr) {
      l = b.hyp(h->index < removed ? h->index : h->index - 1);
    } else {
      l = b.add(line);
    }
    std::size_t k = b.axiom(Scheme::K, {line.formula, a});
    map[i] = b.mp(k, l);
  }
  Proof out = std::move(b).build(map.back());
  DeductionStatsScope::record(d.size(), out.size());
  return out;
}

Proof hs(const Proof& p1, const Proof& p2) {
  if (p1.hypotheses() != p2.hypotheses()) throw DerivationError("hs: hypothesis lists differ");
  ProofBuilder b(p1.hypotheses());
  std::size_t ab = b.append(p1);
  std::size_t bc = b.append(p2);
  return std::move(b).build(chain(b, ab, bc));
}

// ---------------------------------------------------------------------------
// The eight Q-schemes

namespace {

void require_params(int n, const std::vector<Formula>& params) {
  static const std::size_t arity[] = {0, 3, 2, 1, 1, 2, 2, 2, 2};
  if (n < 1 || n > 8) throw DerivationError("scheme part must be in 1..8, got " + std::to_string(n));
  if (params.size() != arity[n])
    throw DerivationError("part " + std::to_string(n) + " takes " + std::to_string(arity[n]) + " formulas, got " +
                          std::to_string(params.size()));
}

// Discharges the listed hypotheses one after another, innermost first.
Proof discharge(Proof d, std::initializer_list<Formula> order) {
  for (const auto& h : order) d = deduction_theorem(d, h);
  return d;
}

}  // namespace

Formula robbin_statement(int n, const QContext& ctx, const std::vector<Formula>& params) {
  require_params(n, params);
  const Formula& a = params[0];
  switch (n) {
    case 1:
      return imp(imp(a, params[1]), imp(imp(params[1], params[2]), imp(a, params[2])));
    case 2:
      return imp(imp(a, params[1]), imp(ctx.neg(params[1]), ctx.neg(a)));
    case 3:
      return imp(a, ctx.negneg(a));
    case 4:
      return imp(ctx.negneg(ctx.neg(a)), ctx.neg(a));
    case 5:
      return imp(ctx.negneg(params[1]), ctx.negneg(imp(a, params[1])));
    case 6:
      return imp(ctx.negneg(a), imp(ctx.neg(params[1]), ctx.neg(imp(a, params[1]))));
    case 7:
      return imp(ctx.neg(a), ctx.negneg(imp(a, params[1])));
    case 8:
      return imp(imp(ctx.neg(a), params[1]), imp(imp(ctx.negneg(a), params[1]), ctx.negneg(params[1])));
  }
  throw std::logic_error("unreachable");
}

Proof robbin(int n, const QContext& ctx, const std::vector<Formula>& params) {
  require_params(n, params);
  const Formula& q = ctx.q;
  const Formula& a = params[0];
  switch (n) {
    case 1: {
      // {A->B, B->C, A} ⊢ C
      const Formula& b_ = params[1];
      const Formula& c = params[2];
      ProofBuilder b({imp(a, b_), imp(b_, c), a});
      std::size_t x = b.hyp(2);
      std::size_t y = b.mp(b.hyp(0), x);
      std::size_t z = b.mp(b.hyp(1), y);
      return discharge(std::move(b).build(z), {a, imp(b_, c), imp(a, b_)});
    }
    case 2:
      return robbin(1, ctx, {a, params[1], q});
    case 3: {
      // {A, QA} ⊢ Q
      ProofBuilder b({a, ctx.neg(a)});
      std::size_t x = b.hyp(0);
      std::size_t z = b.mp(b.hyp(1), x);
      return discharge(std::move(b).build(z), {ctx.neg(a), a});
    }
    case 4: {
      // {QQQA, A} ⊢ Q via A -> QQA
      Formula qqqa = ctx.negneg(ctx.neg(a));
      ProofBuilder b({qqqa, a});
      std::size_t lemma = b.append(robbin(3, ctx, {a}));
      std::size_t qqa = b.mp(lemma, b.hyp(1));
      std::size_t z = b.mp(b.hyp(0), qqa);
      return discharge(std::move(b).build(z), {a, qqqa});
    }
    case 5: {
      // {QQB, Q(A->B)} ⊢ Q: B -> A->B -> Q
      const Formula& b_ = params[1];
      ProofBuilder b({ctx.negneg(b_), ctx.neg(imp(a, b_))});
      std::size_t k = b.axiom(Scheme::K, {b_, a});
      std::size_t bq = chain(b, k, b.hyp(1));
      std::size_t z = b.mp(b.hyp(0), bq);
      return discharge(std::move(b).build(z), {ctx.neg(imp(a, b_)), ctx.negneg(b_)});
    }
    case 6: {
      // {QQA, QB, A->B} ⊢ Q: A -> B -> Q
      const Formula& b_ = params[1];
      ProofBuilder b({ctx.negneg(a), ctx.neg(b_), imp(a, b_)});
      std::size_t ab = b.hyp(2);
      std::size_t aq = chain(b, ab, b.hyp(1));
      std::size_t z = b.mp(b.hyp(0), aq);
      return discharge(std::move(b).build(z), {imp(a, b_), ctx.neg(b_), ctx.negneg(a)});
    }
    case 7: {
      // {QA, Q(A->B), Q->B} ⊢ Q, so {QA, Q(A->B)} ⊢ (Q->B)->Q; Peirce closes.
      const Formula& b_ = params[1];
      ProofBuilder inner({ctx.neg(a), ctx.neg(imp(a, b_)), imp(q, b_)});
      std::size_t aq = inner.hyp(0);
      std::size_t ab = chain(inner, aq, inner.hyp(2));
      std::size_t z = inner.mp(inner.hyp(1), ab);
      Proof qbq = deduction_theorem(std::move(inner).build(z), imp(q, b_));

      ProofBuilder b({ctx.neg(a), ctx.neg(imp(a, b_))});
      std::size_t x = b.append(qbq);
      std::size_t pe = b.axiom(Scheme::Peirce, {q, b_});
      std::size_t w = b.mp(pe, x);
      return discharge(std::move(b).build(w), {ctx.neg(imp(a, b_)), ctx.neg(a)});
    }
    case 8: {
      // {QA->B, QQA->B, QB} ⊢ Q: QA -> B -> Q gives QQA, then B, then Q.
      const Formula& b_ = params[1];
      ProofBuilder b({imp(ctx.neg(a), b_), imp(ctx.negneg(a), b_), ctx.neg(b_)});
      std::size_t qa_b = b.hyp(0);
      std::size_t bq = b.hyp(2);
      std::size_t qqa = chain(b, qa_b, bq);
      std::size_t bb = b.mp(b.hyp(1), qqa);
      std::size_t z = b.mp(bq, bb);
      return discharge(std::move(b).build(z),
                       {ctx.neg(b_), imp(ctx.negneg(a), b_), imp(ctx.neg(a), b_)});
    }
  }
  throw std::logic_error("unreachable");
}

}  // namespace ipc
