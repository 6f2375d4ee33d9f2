#ifndef IPC_SYNTHESIS_HPP
#define IPC_SYNTHESIS_HPP

#include <cstddef>
#include <stdexcept>

#include "ipc/derivation.hpp"
#include "ipc/formula.hpp"
#include "ipc/kernel.hpp"
#include "ipc/tableau.hpp"

namespace ipc {

// Branch disjunction: realized terms of theta, left-nested, in branch order.
Formula d_of(const QBranch& theta, const QContext& ctx);

// ⊢ d_of(theta) for a closed theta.
Proof axiom_proof(const QBranch& theta, const QContext& ctx);

// theta[alpha] = (Q, X->Y). From ⊢ D∨QQX (p0) and ⊢ D∨QY (p1) with
// D = d_of(theta), proves ⊢ D.
Proof rule_a(const QBranch& theta, std::size_t alpha, const Proof& p0, const Proof& p1, const QContext& ctx);

// theta[beta] = (QQ, X->Y). From ⊢ D∨QX (slot 0) or ⊢ D∨QQY (slot 1),
// proves ⊢ D.
Proof rule_b(const QBranch& theta, std::size_t beta, int slot, const Proof& p, const QContext& ctx);

struct PruneOptions {
  // Kernel-check every intermediate branch proof and confirm its conclusion
  // by truth table.
  bool verify_steps = false;
  // Build the leaf proofs on separate threads before pruning starts.
  bool parallel_leaves = false;
};

struct PruneStats {
  std::size_t leaves = 0;
  std::size_t steps = 0;
  std::size_t axiom_lines = 0;  // summed over leaf proofs
};

// Rebuilds ⊢ QQ z from the leaf axioms of a closed Q-tableau, removing nodes
// in reverse stamp order.
Proof prune(const QTableau& qt, const PruneOptions& opts = {}, PruneStats* stats = nullptr);

class NotTautologyError : public std::runtime_error {
 public:
  NotTautologyError(const Formula& z, Valuation falsifying);
  const Valuation& falsifying() const { return falsifying_; }

 private:
  Valuation falsifying_;
};

// Last step from ⊢ (z->z)->z: MP with ⊢ z->z, or MP with the Peirce instance
// ((z->z)->z)->z.
enum class FinalStep { Identity, Peirce };

struct SynthesisStats {
  std::size_t tableau_nodes = 0;
  std::size_t branches = 0;
  PruneStats prune;
  DeductionStats deduction;
  std::size_t proof_lines = 0;
};

struct Synthesis {
  Proof proof;
  SynthesisStats stats;
};

// ⊢ QQ z through the Q-tableau of z. Throws NotTautologyError.
Synthesis prove_qq(const Formula& z, const QContext& ctx, const PruneOptions& opts = {});

// ⊢ z, taking Q := z. Throws NotTautologyError.
Synthesis complete(const Formula& z, FinalStep final_step = FinalStep::Identity, const PruneOptions& opts = {});

}  // namespace ipc

#endif
