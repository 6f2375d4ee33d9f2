#ifndef IPC_TESTS_SUPPORT_HPP
#define IPC_TESTS_SUPPORT_HPP

#include <array>
#include <map>
#include <optional>
#include <random>
#include <string>
#include <variant>
#include <vector>

#include "ipc/formula.hpp"
#include "ipc/kernel.hpp"

namespace ipc::testing {

// Truth tables by plain recursion over a name -> bool map. Deliberately shares
// no code with the library's evaluator.
inline bool oracle_eval(const Formula& f, const std::map<std::string, bool>& v) {
  if (f.is_var()) return v.at(f.name());
  return !oracle_eval(f.antecedent(), v) || oracle_eval(f.consequent(), v);
}

inline void oracle_vars(const Formula& f, std::vector<std::string>& out) {
  if (f.is_var()) {
    for (const auto& n : out)
      if (n == f.name()) return;
    out.push_back(f.name());
    return;
  }
  oracle_vars(f.antecedent(), out);
  oracle_vars(f.consequent(), out);
}

inline bool oracle_tautology(const Formula& f) {
  std::vector<std::string> names;
  oracle_vars(f, names);
  std::map<std::string, bool> v;
  for (const auto& n : names) v[n] = false;
  while (true) {
    if (!oracle_eval(f, v)) return false;
    // binary increment over the map
    auto it = v.begin();
    while (it != v.end() && it->second) it++->second = false;
    if (it == v.end()) return true;
    it->second = true;
  }
}

// Γ ⊨ b, i.e. the folded conditional H1 -> ... -> Hk -> b is a tautology.
inline bool oracle_entails(const std::vector<Formula>& hyps, const Formula& b) {
  Formula acc = b;
  for (auto it = hyps.rbegin(); it != hyps.rend(); ++it) acc = imp(*it, acc);
  return oracle_tautology(acc);
}

inline bool proof_is_sound(const Proof& p) { return oracle_entails(p.hypotheses(), check(p)); }

inline Formula random_formula(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t connectives) {
  if (connectives == 0) return var(vars[std::uniform_int_distribution<std::size_t>(0, vars.size() - 1)(rng)]);
  std::size_t left = std::uniform_int_distribution<std::size_t>(0, connectives - 1)(rng);
  Formula a = random_formula(rng, vars, left);
  return imp(std::move(a), random_formula(rng, vars, connectives - 1 - left));
}

inline Formula random_formula_upto(std::mt19937_64& rng, const std::vector<std::string>& vars, std::size_t max_conn) {
  return random_formula(rng, vars, std::uniform_int_distribution<std::size_t>(0, max_conn)(rng));
}

inline std::vector<std::string> pqr() { return {"p", "q", "r"}; }

struct RandomDeduction {
  Proof proof;
  Formula discharged;
};

// A kernel-valid derivation of at most max_lines lines from 1-3 random
// hypotheses, mixing axiom instances, hypothesis citations and MP.
inline RandomDeduction random_deduction(std::mt19937_64& rng, std::size_t max_lines) {
  auto small = [&] { return random_formula_upto(rng, pqr(), 2); };
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };

  std::vector<Formula> hyps;
  const std::size_t nh = 1 + pick(3);
  for (std::size_t i = 0; i < nh; ++i) hyps.push_back(pick(2) ? imp(small(), small()) : small());
  // Give MP something to chew on: sometimes a hypothesis is an implication
  // whose antecedent is another hypothesis.
  if (nh >= 2 && pick(2)) hyps[1] = imp(hyps[0], small());

  std::vector<Line> lines;
  const std::size_t target = 1 + pick(max_lines);
  while (lines.size() < target) {
    const std::size_t roll = pick(10);
    if (roll < 3 || lines.empty()) {
      std::size_t h = pick(hyps.size());
      lines.push_back({hyps[h], HypStep{h}});
    } else if (roll < 5) {
      Scheme s = std::array{Scheme::K, Scheme::S, Scheme::Peirce}[pick(3)];
      std::vector<Formula> subst;
      for (std::size_t k = 0; k < scheme_arity(s); ++k) subst.push_back(small());
      Formula f = instantiate(s, subst);
      lines.push_back({f, AxiomStep{s, subst}});
    } else {
      std::vector<std::pair<std::size_t, std::size_t>> pairs;
      for (std::size_t i = 0; i < lines.size(); ++i)
        for (std::size_t j = 0; j < lines.size(); ++j)
          if (lines[i].formula.is_imp() && lines[i].formula.antecedent() == lines[j].formula) pairs.emplace_back(i, j);
      if (!pairs.empty() && roll < 8) {
        auto [i, j] = pairs[pick(pairs.size())];
        lines.push_back({lines[i].formula.consequent(), MpStep{i, j}});
      } else if (lines.size() + 2 <= target) {
        // X, K(X,Y) : X->Y->X, MP : Y->X
        std::size_t j = pick(lines.size());
        Formula x = lines[j].formula;
        Formula y = small();
        lines.push_back({instantiate(Scheme::K, {x, y}), AxiomStep{Scheme::K, {x, y}}});
        lines.push_back({imp(y, x), MpStep{lines.size() - 1, j}});
      } else {
        std::size_t h = pick(hyps.size());
        lines.push_back({hyps[h], HypStep{h}});
      }
    }
  }
  Formula a = hyps[pick(hyps.size())];
  return {Proof(std::move(hyps), std::move(lines)), a};
}

enum class MutationKind { SwapLines, EditSubformula, EditIndex };

// Replaces the subformula at preorder position `target` with `with`.
inline Formula replace_at(const Formula& f, std::size_t& target, const Formula& with) {
  if (target == 0) return with;
  --target;
  if (f.is_var()) return f;
  Formula a = replace_at(f.antecedent(), target, with);
  return imp(std::move(a), replace_at(f.consequent(), target, with));
}

inline std::size_t node_count(const Formula& f) {
  return f.is_var() ? 1 : 1 + node_count(f.antecedent()) + node_count(f.consequent());
}

// One corrupted copy of p, or nothing when the kind does not apply (for
// example an index edit on a proof without MP lines).
inline std::optional<Proof> mutate(const Proof& p, MutationKind kind, std::mt19937_64& rng) {
  auto pick = [&](std::size_t n) { return std::uniform_int_distribution<std::size_t>(0, n - 1)(rng); };
  std::vector<Line> lines = p.lines();
  switch (kind) {
    case MutationKind::SwapLines: {
      if (lines.size() < 2) return std::nullopt;
      std::size_t i = pick(lines.size()), j = pick(lines.size() - 1);
      if (j >= i) ++j;
      std::swap(lines[i], lines[j]);
      break;
    }
    case MutationKind::EditSubformula: {
      std::size_t i = pick(lines.size());
      const Formula& f = lines[i].formula;
      std::size_t at = pick(node_count(f));
      Formula with = random_formula_upto(rng, {"p", "q", "r", "s"}, 2);
      Formula edited = replace_at(f, at, with);
      if (edited == f) edited = imp(f, var("s"));
      lines[i].formula = edited;
      break;
    }
    case MutationKind::EditIndex: {
      std::vector<std::size_t> mps;
      for (std::size_t i = 0; i < lines.size(); ++i)
        if (std::holds_alternative<MpStep>(lines[i].just)) mps.push_back(i);
      if (mps.empty()) return std::nullopt;
      std::size_t i = mps[pick(mps.size())];
      auto& step = std::get<MpStep>(lines[i].just);
      std::size_t& slot = pick(2) ? step.major : step.minor;
      std::size_t old = slot;
      slot = pick(lines.size());
      if (slot == old) slot = (old + 1) % lines.size();
      break;
    }
  }
  return Proof(p.hypotheses(), std::move(lines));
}

}  // namespace ipc::testing

#endif
