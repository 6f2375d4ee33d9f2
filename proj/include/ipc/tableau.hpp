#ifndef IPC_TABLEAU_HPP
#define IPC_TABLEAU_HPP

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include <json.hpp>

#include "ipc/derivation.hpp"
#include "ipc/formula.hpp"

namespace ipc {

enum class Sign { T, F };

struct SignedFormula {
  Sign sign;
  Formula body;

  SignedFormula conjugate() const { return {sign == Sign::T ? Sign::F : Sign::T, body}; }
  friend bool operator==(const SignedFormula&, const SignedFormula&) = default;
};

// F(X->Y) is type A (alternatives T X | F Y); T(X->Y) is type B (direct
// consequences F X, T Y). Signed variables are unclassified.
enum class RuleKind { A, B };
std::optional<RuleKind> classify(const SignedFormula& sf);
// Consequence 0 or 1 of a classified signed formula.
SignedFormula consequence(const SignedFormula& sf, int slot);

enum class Polarity { Q, QQ };

struct QTerm {
  Polarity polarity;
  Formula body;

  Formula realize(const QContext& ctx) const {
    return polarity == Polarity::Q ? ctx.neg(body) : ctx.negneg(body);
  }
  friend bool operator==(const QTerm&, const QTerm&) = default;
};

using QBranch = std::vector<QTerm>;

// Some (Q, W) and (QQ, W) with the same W.
bool is_closed(const QBranch& theta);
// Positions (i, j) of the first conjugate pair found, Q term first.
std::optional<std::pair<std::size_t, std::size_t>> conjugate_pair(const QBranch& theta);

struct Provenance {
  std::size_t source;  // node whose expansion produced this one
  RuleKind rule;
  int slot;            // 0 or 1
};

template <class Label>
struct TableauNode {
  Label label;
  std::optional<std::size_t> parent;
  std::optional<Provenance> from;
  std::size_t stamp;
  std::vector<std::size_t> children;
  // Leaves only: whether the root-to-leaf branch holds a conjugate pair.
  bool closed = false;
};

// Nodes are stored in creation order, so node id == expansion stamp and the
// root is node 0.
template <class Label>
struct BasicTableau {
  std::vector<TableauNode<Label>> nodes;

  const TableauNode<Label>& root() const { return nodes.front(); }
  bool is_leaf(std::size_t id) const { return nodes[id].children.empty(); }
  // Leaves from left to right (depth first, children in slot order).
  std::vector<std::size_t> leaves() const;
  // Node ids from the root down to `id`.
  std::vector<std::size_t> path(std::size_t id) const;
  std::vector<Label> branch(std::size_t leaf) const;
  // Root-to-leaf label sequences, leaves from left to right.
  std::vector<std::vector<Label>> branches() const;
  std::size_t depth(std::size_t id) const { return path(id).size() - 1; }
};

using Tableau = BasicTableau<SignedFormula>;

struct QTableau : BasicTableau<QTerm> {
  QContext ctx;
};

class TableauError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

// Complete signed dual tableau rooted at T z. Unexpanded classified nodes are
// processed FIFO per branch; a branch stops growing once it closes.
Tableau expand(const Formula& z);

bool is_closed(const Tableau& t);
bool is_closed(const QTableau& t);

// T W becomes (QQ, W), F W becomes (Q, W); shape, provenance and stamps are
// kept. Throws TableauError if t is open.
QTableau q_transform(const Tableau& t, const QContext& ctx);

std::string render_text(const Tableau& t);
std::string render_text(const QTableau& t);
nlohmann::json render_json(const Tableau& t);
nlohmann::json render_json(const QTableau& t);

std::string to_string(const SignedFormula& sf);
std::string to_string(const QTerm& term);

// ---------------------------------------------------------------------------

template <class Label>
std::vector<std::size_t> BasicTableau<Label>::leaves() const {
  std::vector<std::size_t> out;
  if (nodes.empty()) return out;
  std::vector<std::size_t> stack{0};
  while (!stack.empty()) {
    std::size_t id = stack.back();
    stack.pop_back();
    const auto& kids = nodes[id].children;
    if (kids.empty()) out.push_back(id);
    stack.insert(stack.end(), kids.rbegin(), kids.rend());
  }
  return out;
}

template <class Label>
std::vector<std::size_t> BasicTableau<Label>::path(std::size_t id) const {
  std::vector<std::size_t> out;
  for (std::optional<std::size_t> cur = id; cur; cur = nodes[*cur].parent) out.push_back(*cur);
  return {out.rbegin(), out.rend()};
}

template <class Label>
std::vector<Label> BasicTableau<Label>::branch(std::size_t leaf) const {
  std::vector<Label> out;
  for (std::size_t id : path(leaf)) out.push_back(nodes[id].label);
  return out;
}

template <class Label>
std::vector<std::vector<Label>> BasicTableau<Label>::branches() const {
  std::vector<std::vector<Label>> out;
  for (std::size_t leaf : leaves()) out.push_back(branch(leaf));
  return out;
}

}  // namespace ipc

#endif
