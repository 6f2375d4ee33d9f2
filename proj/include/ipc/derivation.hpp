#ifndef IPC_DERIVATION_HPP
#define IPC_DERIVATION_HPP

#include <cstddef>
#include <optional>
#include <span>
#include <stdexcept>
#include <vector>

#include "ipc/formula.hpp"
#include "ipc/kernel.hpp"

namespace ipc {

class DerivationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// A fixed formula Q with the abbreviations QW = W->Q and QQW = (W->Q)->Q.
struct QContext {
  Formula q;

  Formula neg(const Formula& w) const { return imp(w, q); }
  Formula negneg(const Formula& w) const { return imp(imp(w, q), q); }
};

// Appends lines to a growing derivation. Every helper returns the index of the
// line it added; helpers that receive line indices only read earlier lines.
class ProofBuilder {
 public:
  explicit ProofBuilder(std::vector<Formula> hypotheses = {}) : hypotheses_(std::move(hypotheses)) {}

  std::size_t axiom(Scheme s, std::vector<Formula> subst);
  std::size_t hyp(std::size_t index);
  // Cites the first hypothesis equal to f.
  std::size_t hyp(const Formula& f);
  // Throws DerivationError unless formula(major) == formula(minor) -> X.
  std::size_t mp(std::size_t major, std::size_t minor);

  // Copies sub's lines with shifted indices and returns the index of its
  // conclusion. Hypothesis citations are resolved through `hyp_lines` when
  // an entry is given (the cited hypothesis is then an existing line here and
  // no line is emitted for it), otherwise by formula against this builder's
  // hypotheses.
  std::size_t append(const Proof& sub, std::span<const std::optional<std::size_t>> hyp_lines = {});

  const Formula& formula(std::size_t line) const { return lines_.at(line).formula; }
  std::size_t size() const { return lines_.size(); }
  const std::vector<Formula>& hypotheses() const { return hypotheses_; }

  // Appends a line verbatim. The kernel, not the builder, decides validity.
  std::size_t add(Line line);

  // Finishes with `line` as the conclusion, repeating it at the end if needed.
  Proof build(std::size_t line) &&;

 private:
  std::vector<Formula> hypotheses_;
  std::vector<Line> lines_;
};

// Line-level combinators (K/S only).
// From A->B at `ab` and B->C at `bc`: A->C.
std::size_t chain(ProofBuilder& b, std::size_t ab, std::size_t bc);
// From Z->W at `zw`: (Y->Z)->(Y->W).
std::size_t lift(ProofBuilder& b, std::size_t zw, const Formula& y);
// From X->Y at `xy`: (Y->Z)->(X->Z).
std::size_t contra(ProofBuilder& b, std::size_t xy, const Formula& z);
// X->(X->Y)->Y, with no premises.
std::size_t flip_apply(ProofBuilder& b, const Formula& x, const Formula& y);

// Γ ⊢ B and {B} ⊢ C give Γ ⊢ C by inlining the second derivation.
Proof compose(const Proof& first, const Proof& second);

// ---------------------------------------------------------------------------

// Closed proof of a -> a from S and K.
Proof prove_id(const Formula& a);

// Γ ∪ {a} ⊢ B to Γ ⊢ a -> B. Removes the last occurrence of `a` from the
// hypothesis list; citations of that occurrence become a -> a, every other
// line L becomes a -> L through K (axioms, remaining hypotheses) or S (MP).
// At most five output lines per input line.
Proof deduction_theorem(const Proof& d, const Formula& a);

// Γ ⊢ A->B and Γ ⊢ B->C give Γ ⊢ A->C.
Proof hs(const Proof& p1, const Proof& p2);

// Statement of the n-th Q-scheme (1..8):
//   1 (A->B)->(B->C)->A->C        5 QQB->QQ(A->B)
//   2 (A->B)->QB->QA              6 QQA->QB->Q(A->B)
//   3 A->QQA                      7 QA->QQ(A->B)
//   4 QQQA->QA                    8 (QA->B)->(QQA->B)->QQB
// params: A,B,C for 1; A for 3 and 4; A,B otherwise.
Formula robbin_statement(int n, const QContext& ctx, const std::vector<Formula>& params);
// Closed proof of robbin_statement(n, ...). Only part 7 cites PEIRCE.
Proof robbin(int n, const QContext& ctx, const std::vector<Formula>& params);

// ---------------------------------------------------------------------------
// Disjunction: a ∨ b := (a->b)->b, left-nested for longer lists.

Formula disj(const Formula& a, const Formula& b);
Formula disj_many(std::span<const Formula> terms);

// {terms[i]} ⊢ disj_many(terms). Peirce-free.
Proof disj_intro(std::size_t i, std::span<const Formula> terms);

// deds[n] : {terms[n]} ⊢ b   gives   {disj_many(terms)} ⊢ b.
Proof disj_elim(std::span<const Proof> deds, std::span<const Formula> terms, const Formula& b);

// deds[n] : {as[n]} ⊢ bs[n]   gives   {disj_many(as)} ⊢ disj_many(bs).
Proof disj_map(std::span<const Proof> deds, std::span<const Formula> as, std::span<const Formula> bs);

// ⊢ (b->a)->a   gives   ⊢ (a->b)->b.
Proof disj_commute(const Proof& p);

// {QQ(disj_many(terms))} ⊢ disj_many(QQ terms[0], ..., QQ terms[N-1]).
Proof qq_distribute(const QContext& ctx, std::span<const Formula> terms);

// Closed forms of the above, used where the conditional itself is needed.
// ⊢ terms[i] -> disj_many(terms)
Proof disj_intro_imp(std::size_t i, std::span<const Formula> terms);
// each imps[n] : ⊢ terms[n] -> b   gives   ⊢ disj_many(terms) -> b
Proof disj_elim_imp(std::span<const Proof> imps, std::span<const Formula> terms, const Formula& b);
// each imps[n] : ⊢ as[n] -> bs[n]   gives   ⊢ disj_many(as) -> disj_many(bs)
Proof disj_map_imp(std::span<const Proof> imps, std::span<const Formula> as, std::span<const Formula> bs);
// ⊢ QQ(disj_many(terms)) -> disj_many(QQ terms[0], ..., QQ terms[N-1])
Proof qq_distribute_imp(const QContext& ctx, std::span<const Formula> terms);

// ---------------------------------------------------------------------------

// Counters for deduction_theorem calls made on this thread while a scope is
// alive. Scopes nest; the innermost one receives the counts.
struct DeductionStats {
  std::size_t calls = 0;
  std::size_t input_lines = 0;
  std::size_t output_lines = 0;

  double expansion() const {
    return input_lines == 0 ? 0.0 : static_cast<double>(output_lines) / static_cast<double>(input_lines);
  }
};

class DeductionStatsScope {
 public:
  DeductionStatsScope();
  ~DeductionStatsScope();
  DeductionStatsScope(const DeductionStatsScope&) = delete;
  DeductionStatsScope& operator=(const DeductionStatsScope&) = delete;

  const DeductionStats& stats() const { return stats_; }

  static void record(std::size_t input_lines, std::size_t output_lines);

 private:
  DeductionStats stats_;
  DeductionStatsScope* outer_;
};

}  // namespace ipc

#endif
