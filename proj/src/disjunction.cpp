#include "ipc/derivation.hpp"

namespace ipc {

Formula disj(const Formula& a, const Formula& b) { return imp(imp(a, b), b); }

Formula disj_many(std::span<const Formula> terms) {
  if (terms.empty()) throw DerivationError("disjunction of an empty list");
  Formula acc = terms[0];
  for (std::size_t i = 1; i < terms.size(); ++i) acc = disj(acc, terms[i]);
  return acc;
}

namespace {

// From A->C at `ac` and B->C at `bc`: ((A->B)->B)->C.
// A∨B gives (C->B)->B by contraposing twice, the second premise turns that
// into (C->B)->C, and Peirce yields C.
std::size_t or_elim(ProofBuilder& b, std::size_t ac, std::size_t bc) {
  const Formula& f = b.formula(ac);
  const Formula& g = b.formula(bc);
  if (!f.is_imp() || !g.is_imp() || f.consequent() != g.consequent())
    throw DerivationError("or_elim: premises must share a consequent");
  const Formula bb = g.antecedent();
  const Formula c = g.consequent();
  std::size_t cb_ab = contra(b, ac, bb);            // (C->B)->A->B
  std::size_t or_cbb = contra(b, cb_ab, bb);        // ((A->B)->B)->(C->B)->B
  std::size_t cbb_cbc = lift(b, bc, imp(c, bb));    // ((C->B)->B)->(C->B)->C
  std::size_t or_cbc = chain(b, or_cbb, cbb_cbc);
  std::size_t pe = b.axiom(Scheme::Peirce, {c, bb});
  return chain(b, or_cbc, pe);
}

std::size_t intro_lines(ProofBuilder& b, std::size_t i, std::span<const Formula> terms) {
  if (terms.size() == 1) return b.append(prove_id(terms[0]));
  // First step: terms[i] -> D_{i+1} (D_n is the disjunction of the first n terms).
  std::size_t cur;
  std::size_t n;
  if (i == 0) {
    cur = flip_apply(b, terms[0], terms[1]);
    n = 2;
  } else {
    cur = b.axiom(Scheme::K, {terms[i], imp(disj_many(terms.first(i)), terms[i])});
    n = i + 1;
  }
  Formula acc = disj_many(terms.first(n));
  for (; n < terms.size(); ++n) {
    std::size_t step = flip_apply(b, acc, terms[n]);  // D_n -> D_{n+1}
    cur = chain(b, cur, step);
    acc = disj(acc, terms[n]);
  }
  return cur;
}

std::size_t elim_lines(ProofBuilder& b, std::span<const std::size_t> imps) {
  std::size_t acc = imps[0];
  for (std::size_t n = 1; n < imps.size(); ++n) acc = or_elim(b, acc, imps[n]);
  return acc;
}

void require_implication(const Proof& p, const Formula& from, const Formula& to, std::size_t n) {
  if (!p.closed() || p.lines().empty() || p.conclusion() != imp(from, to))
    throw DerivationError("premise " + std::to_string(n) + " must be a closed proof of " + print(imp(from, to)));
}

void require_deduction(const Proof& d, const Formula& from, const Formula& to, std::size_t n) {
  if (d.hypotheses().size() != 1 || d.hypotheses()[0] != from || d.lines().empty() || d.conclusion() != to)
    throw DerivationError("derivation " + std::to_string(n) + " must be {" + print(from) + "} |- " + print(to));
}

// {a} ⊢ b from ⊢ a -> b.
Proof detach(const Proof& imp_proof) {
  const Formula& c = imp_proof.conclusion();
  ProofBuilder b({c.antecedent()});
  std::size_t x = b.append(imp_proof);
  return std::move(b).build(b.mp(x, b.hyp(0)));
}

}  // namespace

Proof disj_intro_imp(std::size_t i, std::span<const Formula> terms) {
  if (i >= terms.size())
    throw DerivationError("disjunct index " + std::to_string(i) + " out of range for " +
                          std::to_string(terms.size()) + " terms");
  ProofBuilder b;
  return std::move(b).build(intro_lines(b, i, terms));
}

Proof disj_intro(std::size_t i, std::span<const Formula> terms) {
  if (terms.size() == 1 && i == 0) {
    ProofBuilder b({terms[0]});
    return std::move(b).build(b.hyp(0));
  }
  return detach(disj_intro_imp(i, terms));
}

Proof disj_elim_imp(std::span<const Proof> imps, std::span<const Formula> terms, const Formula& b) {
  if (terms.empty()) throw DerivationError("disjunction elimination over an empty list");
  if (imps.size() != terms.size()) throw DerivationError("one premise per disjunct is required");
  for (std::size_t n = 0; n < terms.size(); ++n) require_implication(imps[n], terms[n], b, n);
  ProofBuilder out;
  std::vector<std::size_t> lines;
  for (const auto& p : imps) lines.push_back(out.append(p));
  return std::move(out).build(elim_lines(out, lines));
}

Proof disj_elim(std::span<const Proof> deds, std::span<const Formula> terms, const Formula& b) {
  if (terms.empty()) throw DerivationError("disjunction elimination over an empty list");
  if (deds.size() != terms.size()) throw DerivationError("one derivation per disjunct is required");
  for (std::size_t n = 0; n < terms.size(); ++n) require_deduction(deds[n], terms[n], b, n);
  if (terms.size() == 1) return deds[0];
  std::vector<Proof> imps;
  for (std::size_t n = 0; n < terms.size(); ++n) imps.push_back(deduction_theorem(deds[n], terms[n]));
  return detach(disj_elim_imp(imps, terms, b));
}

Proof disj_map_imp(std::span<const Proof> imps, std::span<const Formula> as, std::span<const Formula> bs) {
  if (as.empty() || as.size() != bs.size() || imps.size() != as.size())
    throw DerivationError("disj_map needs equally many premises, sources and targets");
  for (std::size_t n = 0; n < as.size(); ++n) require_implication(imps[n], as[n], bs[n], n);
  // as[n] -> bs[n] -> disj_many(bs) for every n, then eliminate.
  ProofBuilder b;
  std::vector<std::size_t> into;
  for (std::size_t n = 0; n < as.size(); ++n) {
    std::size_t ab = b.append(imps[n]);
    if (bs.size() == 1) {
      into.push_back(ab);
      continue;
    }
    into.push_back(chain(b, ab, intro_lines(b, n, bs)));
  }
  return std::move(b).build(elim_lines(b, into));
}

Proof disj_map(std::span<const Proof> deds, std::span<const Formula> as, std::span<const Formula> bs) {
  if (as.empty() || as.size() != bs.size() || deds.size() != as.size())
    throw DerivationError("disj_map needs equally many derivations, sources and targets");
  for (std::size_t n = 0; n < as.size(); ++n) require_deduction(deds[n], as[n], bs[n], n);
  if (as.size() == 1) return deds[0];
  std::vector<Proof> imps;
  for (std::size_t n = 0; n < as.size(); ++n) imps.push_back(deduction_theorem(deds[n], as[n]));
  return detach(disj_map_imp(imps, as, bs));
}

Proof disj_commute(const Proof& p) {
  const Formula& c = p.conclusion();
  if (!c.is_imp() || !c.antecedent().is_imp() || c.antecedent().consequent() != c.consequent())
    throw DerivationError("disj_commute: " + print(c) + " is not of the form (b->a)->a");
  const Formula b_ = c.antecedent().antecedent();
  const Formula a = c.consequent();
  const Formula ab[] = {a, b_};
  // b∨a -> a∨b by eliminating over [b, a] into a∨b.
  ProofBuilder b(p.hypotheses());
  std::size_t given = b.append(p);
  const std::size_t into[] = {intro_lines(b, 1, ab), intro_lines(b, 0, ab)};
  std::size_t swap = elim_lines(b, into);
  return std::move(b).build(b.mp(swap, given));
}

Proof qq_distribute_imp(const QContext& ctx, std::span<const Formula> terms) {
  if (terms.empty()) throw DerivationError("qq_distribute over an empty list");
  if (terms.size() == 1) return prove_id(ctx.negneg(terms[0]));
  // QQ(t1 ∨ ... ∨ tN) is literally t1 ∨ ... ∨ tN ∨ Q: send each tn to QQtn
  // and Q to QQt1, each into the lifted disjunction, then eliminate.
  std::vector<Formula> lifted;
  for (const auto& t : terms) lifted.push_back(ctx.negneg(t));

  ProofBuilder b;
  std::vector<std::size_t> into;
  for (std::size_t n = 0; n < terms.size(); ++n) {
    std::size_t up = b.append(robbin(3, ctx, {terms[n]}));
    into.push_back(chain(b, up, intro_lines(b, n, lifted)));
  }
  std::size_t k = b.axiom(Scheme::K, {ctx.q, ctx.neg(terms[0])});  // Q -> QQt1
  into.push_back(chain(b, k, intro_lines(b, 0, lifted)));
  return std::move(b).build(elim_lines(b, into));
}

Proof qq_distribute(const QContext& ctx, std::span<const Formula> terms) {
  if (terms.empty()) throw DerivationError("qq_distribute over an empty list");
  if (terms.size() == 1) {
    ProofBuilder b({ctx.negneg(terms[0])});
    return std::move(b).build(b.hyp(0));
  }
  return detach(qq_distribute_imp(ctx, terms));
}

}  // namespace ipc
