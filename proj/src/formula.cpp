#include "ipc/formula.hpp"

#include <algorithm>
#include <cstdint>
#include <functional>
#include <unordered_map>

namespace ipc {

namespace {

std::size_t mix(std::size_t seed, std::size_t value) {
  return seed ^ (value + 0x9e3779b97f4a7c15ULL + (seed << 6) + (seed >> 2));
}

}  // namespace

Formula Formula::var(std::string name) {
  if (!is_identifier(name))
    throw std::invalid_argument("invalid variable name '" + name + "'");
  auto node = std::make_shared<Node>();
  node->hash = mix(0x51ed27, std::hash<std::string>{}(name));
  node->name = std::move(name);
  return Formula(std::move(node));
}

Formula Formula::imp(Formula antecedent, Formula consequent) {
  auto node = std::make_shared<Node>();
  node->hash = mix(mix(0x2545f491, antecedent.hash()), consequent.hash());
  node->connectives = 1 + antecedent.connectives() + consequent.connectives();
  node->depth = 1 + std::max(antecedent.depth(), consequent.depth());
  node->left = std::make_unique<const Formula>(std::move(antecedent));
  node->right = std::make_unique<const Formula>(std::move(consequent));
  return Formula(std::move(node));
}

bool operator==(const Formula& a, const Formula& b) {
  if (a.node_ == b.node_) return true;
  if (a.hash() != b.hash() || a.connectives() != b.connectives()) return false;
  if (a.is_var()) return b.is_var() && a.name() == b.name();
  if (!b.is_imp()) return false;
  return a.antecedent() == b.antecedent() && a.consequent() == b.consequent();
}

bool is_identifier(std::string_view s) {
  auto alpha = [](char c) { return (c >= 'a' && c <= 'z') || (c >= 'A' && c <= 'Z'); };
  auto digit = [](char c) { return c >= '0' && c <= '9'; };
  if (s.empty() || !alpha(s.front())) return false;
  return std::all_of(s.begin() + 1, s.end(), [&](char c) { return alpha(c) || digit(c) || c == '_'; });
}

namespace {

void print_to(const Formula& f, std::string& out) {
  if (f.is_var()) {
    out += f.name();
    return;
  }
  // Right-associative: only a conditional antecedent needs parentheses.
  if (f.antecedent().is_imp()) {
    out += '(';
    print_to(f.antecedent(), out);
    out += ')';
  } else {
    out += f.antecedent().name();
  }
  out += "->";
  print_to(f.consequent(), out);
}

}  // namespace

std::string print(const Formula& f) {
  std::string out;
  out.reserve(4 * f.connectives() + 1);
  print_to(f, out);
  return out;
}

// ---------------------------------------------------------------------------

std::vector<std::string> variables(const Formula& f) {
  std::vector<std::string> out;
  std::vector<const Formula*> stack{&f};
  while (!stack.empty()) {
    const Formula* g = stack.back();
    stack.pop_back();
    if (g->is_var()) {
      if (std::find(out.begin(), out.end(), g->name()) == out.end()) out.push_back(g->name());
    } else {
      stack.push_back(&g->consequent());
      stack.push_back(&g->antecedent());
    }
  }
  return out;
}

bool evaluate(const Formula& f, const Valuation& v) {
  if (f.is_var()) {
    auto it = v.find(f.name());
    if (it == v.end()) throw EvaluationError("valuation does not assign variable '" + f.name() + "'");
    return it->second;
  }
  return !evaluate(f.antecedent(), v) || evaluate(f.consequent(), v);
}

namespace {

// Postfix program over variable indices; evaluated once per truth-table row.
struct CompiledFormula {
  // >= 0: push variable bit; -1: pop b, pop a, push (!a || b)
  std::vector<std::int32_t> ops;
  std::vector<std::string> vars;

  explicit CompiledFormula(const Formula& f) : vars(variables(f)) {
    std::unordered_map<std::string, std::int32_t> index;
    for (std::size_t i = 0; i < vars.size(); ++i) index[vars[i]] = static_cast<std::int32_t>(i);
    ops.reserve(2 * f.connectives() + 1);
    emit(f, index);
  }

  void emit(const Formula& f, const std::unordered_map<std::string, std::int32_t>& index) {
    if (f.is_var()) {
      ops.push_back(index.at(f.name()));
      return;
    }
    emit(f.antecedent(), index);
    emit(f.consequent(), index);
    ops.push_back(-1);
  }

  bool run(std::uint64_t row, std::vector<char>& stack) const {
    stack.clear();
    for (std::int32_t op : ops) {
      if (op >= 0) {
        stack.push_back(static_cast<char>((row >> op) & 1U));
      } else {
        char b = stack.back();
        stack.pop_back();
        char a = stack.back();
        stack.back() = static_cast<char>(!a || b);
      }
    }
    return stack.back() != 0;
  }
};

}  // namespace

std::optional<Valuation> falsifying_valuation(const Formula& f, const TruthTableOptions& opts) {
  CompiledFormula program(f);
  const std::size_t k = program.vars.size();
  if (k > opts.max_vars || k > 62)
    throw ResourceError("truth table over " + std::to_string(k) + " variables exceeds the cap of " +
                        std::to_string(opts.max_vars));
  std::vector<char> stack;
  stack.reserve(f.depth() + 2);
  const std::uint64_t rows = std::uint64_t{1} << k;
  for (std::uint64_t row = 0; row < rows; ++row) {
    if (!program.run(row, stack)) {
      Valuation v;
      for (std::size_t i = 0; i < k; ++i) v[program.vars[i]] = ((row >> i) & 1U) != 0;
      return v;
    }
  }
  return std::nullopt;
}

bool is_tautology(const Formula& f, const TruthTableOptions& opts) {
  return !falsifying_valuation(f, opts).has_value();
}

Formula fold_hypotheses(std::span<const Formula> hypotheses, const Formula& conclusion) {
  Formula out = conclusion;
  for (auto it = hypotheses.rbegin(); it != hypotheses.rend(); ++it) out = imp(*it, out);
  return out;
}

std::vector<Formula> enumerate_formulas(std::span<const std::string> vars, std::size_t max_connectives) {
  std::vector<std::vector<Formula>> by_size(max_connectives + 1);
  for (const auto& name : vars) by_size[0].push_back(Formula::var(name));
  for (std::size_t n = 1; n <= max_connectives; ++n)
    for (std::size_t left = 0; left < n; ++left)
      for (const auto& a : by_size[left])
        for (const auto& b : by_size[n - 1 - left]) by_size[n].push_back(imp(a, b));

  std::vector<Formula> out;
  for (auto& level : by_size) {
    std::vector<std::pair<std::string, Formula>> keyed;
    keyed.reserve(level.size());
    for (auto& f : level) keyed.emplace_back(print(f), f);
    std::sort(keyed.begin(), keyed.end(), [](const auto& x, const auto& y) { return x.first < y.first; });
    for (auto& [_, f] : keyed) out.push_back(std::move(f));
  }
  return out;
}

std::vector<std::string> default_variable_names(std::size_t count) {
  static const char* letters[] = {"p", "q", "r", "s", "t", "u"};
  std::vector<std::string> out;
  for (std::size_t i = 0; i < count; ++i)
    out.push_back(i < std::size(letters) ? std::string(letters[i]) : "v" + std::to_string(i));
  return out;
}

}  // namespace ipc
