#ifndef IPC_FORMULA_HPP
#define IPC_FORMULA_HPP

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace ipc {

// Implicational formula: a variable or a conditional. Values are immutable and
// share subtrees; equality is structural.
class Formula {
 public:
  static Formula var(std::string name);
  static Formula imp(Formula antecedent, Formula consequent);

  bool is_var() const { return node_->left == nullptr; }
  bool is_imp() const { return node_->left != nullptr; }

  // Only meaningful for variables.
  const std::string& name() const { return node_->name; }
  // Only meaningful for conditionals.
  const Formula& antecedent() const { return *node_->left; }
  const Formula& consequent() const { return *node_->right; }

  // Number of -> occurrences.
  std::size_t connectives() const { return node_->connectives; }
  std::size_t depth() const { return node_->depth; }
  std::size_t hash() const { return node_->hash; }

  friend bool operator==(const Formula& a, const Formula& b);
  friend bool operator!=(const Formula& a, const Formula& b) { return !(a == b); }

 private:
  struct Node {
    std::string name;
    std::unique_ptr<const Formula> left;
    std::unique_ptr<const Formula> right;
    std::size_t hash = 0;
    std::size_t connectives = 0;
    std::size_t depth = 0;
  };

  explicit Formula(std::shared_ptr<const Node> node) : node_(std::move(node)) {}

  std::shared_ptr<const Node> node_;
};

struct FormulaHash {
  std::size_t operator()(const Formula& f) const { return f.hash(); }
};

// Shorthand used throughout: imp(a, b) is a -> b.
inline Formula imp(Formula a, Formula b) { return Formula::imp(std::move(a), std::move(b)); }
inline Formula var(std::string name) { return Formula::var(std::move(name)); }

class ParseError : public std::runtime_error {
 public:
  ParseError(std::size_t position, const std::string& message);
  std::size_t position() const { return position_; }

 private:
  std::size_t position_;
};

// formula := atom | atom "->" formula ; atom := IDENT | "(" formula ")".
// "⊃" is accepted as an alias for "->".
Formula parse(std::string_view text);

// Minimal-parenthesis rendering using "->".
std::string print(const Formula& f);

bool is_identifier(std::string_view s);

// ---------------------------------------------------------------------------
// Semantics

using Valuation = std::map<std::string, bool>;

class EvaluationError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ResourceError : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

struct TruthTableOptions {
  std::size_t max_vars = 24;
};

// Variables in order of first occurrence, left to right.
std::vector<std::string> variables(const Formula& f);

// Material implication. Throws EvaluationError if v misses a variable of f.
bool evaluate(const Formula& f, const Valuation& v);

// First falsifying row in counting order (variable i of variables(f) is bit i
// of the row number, true when set). Nothing when f is a tautology.
std::optional<Valuation> falsifying_valuation(const Formula& f, const TruthTableOptions& opts = {});

bool is_tautology(const Formula& f, const TruthTableOptions& opts = {});

// H1 -> (H2 -> ... -> (Hk -> conclusion)).
Formula fold_hypotheses(std::span<const Formula> hypotheses, const Formula& conclusion);

// Every formula over `vars` with at most `max_connectives` conditionals,
// ordered by connective count, then lexicographically by printed form.
std::vector<Formula> enumerate_formulas(std::span<const std::string> vars, std::size_t max_connectives);

// p, q, r, s, ... (then v4, v5, ... past the single letters).
std::vector<std::string> default_variable_names(std::size_t count);

}  // namespace ipc

#endif
