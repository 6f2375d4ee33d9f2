#include "ipc/tableau.hpp"

#include <algorithm>
#include <deque>

namespace ipc {

std::optional<RuleKind> classify(const SignedFormula& sf) {
  if (!sf.body.is_imp()) return std::nullopt;
  return sf.sign == Sign::F ? RuleKind::A : RuleKind::B;
}

SignedFormula consequence(const SignedFormula& sf, int slot) {
  if (!sf.body.is_imp()) throw TableauError("signed variable has no consequences");
  if (slot != 0 && slot != 1) throw TableauError("consequence slot must be 0 or 1");
  const Formula& x = sf.body.antecedent();
  const Formula& y = sf.body.consequent();
  if (sf.sign == Sign::F) return slot == 0 ? SignedFormula{Sign::T, x} : SignedFormula{Sign::F, y};
  return slot == 0 ? SignedFormula{Sign::F, x} : SignedFormula{Sign::T, y};
}

std::optional<std::pair<std::size_t, std::size_t>> conjugate_pair(const QBranch& theta) {
  for (std::size_t i = 0; i < theta.size(); ++i) {
    if (theta[i].polarity != Polarity::Q) continue;
    for (std::size_t j = 0; j < theta.size(); ++j)
      if (theta[j].polarity == Polarity::QQ && theta[j].body == theta[i].body) return std::make_pair(i, j);
  }
  return std::nullopt;
}

bool is_closed(const QBranch& theta) { return conjugate_pair(theta).has_value(); }

namespace {

class Expander {
 public:
  explicit Expander(const Formula& z) {
    t_.nodes.push_back(TableauNode<SignedFormula>{{Sign::T, z}, std::nullopt, std::nullopt, 0, {}, false});
  }

  Tableau run() && {
    grow(0, {0}, {t_.nodes[0].label}, false);
    return std::move(t_);
  }

 private:
  std::size_t add(const SignedFormula& label, std::size_t parent, Provenance from) {
    const std::size_t id = t_.nodes.size();
    t_.nodes.push_back(TableauNode<SignedFormula>{label, parent, from, id, {}, false});
    t_.nodes[parent].children.push_back(id);
    return id;
  }

  static bool clashes(const std::vector<SignedFormula>& on_branch, const SignedFormula& sf) {
    return std::find(on_branch.begin(), on_branch.end(), sf.conjugate()) != on_branch.end();
  }

  void grow(std::size_t leaf, std::deque<std::size_t> pending, std::vector<SignedFormula> on_branch, bool closed) {
    while (!closed) {
      std::optional<std::size_t> next;
      while (!pending.empty() && !next) {
        std::size_t id = pending.front();
        pending.pop_front();
        if (classify(t_.nodes[id].label)) next = id;
      }
      if (!next) return;

      const SignedFormula sf = t_.nodes[*next].label;
      const SignedFormula c0 = consequence(sf, 0);
      const SignedFormula c1 = consequence(sf, 1);
      if (*classify(sf) == RuleKind::B) {
        std::size_t n0 = add(c0, leaf, {*next, RuleKind::B, 0});
        std::size_t n1 = add(c1, n0, {*next, RuleKind::B, 1});
        on_branch.push_back(c0);
        closed = clashes(on_branch, c0);
        on_branch.push_back(c1);
        closed = closed || clashes(on_branch, c1);
        pending.push_back(n0);
        pending.push_back(n1);
        leaf = n1;
        continue;
      }
      // Type A: alternatives on separate sub-branches. Both children are
      // created before either subtree grows.
      std::size_t n0 = add(c0, leaf, {*next, RuleKind::A, 0});
      std::size_t n1 = add(c1, leaf, {*next, RuleKind::A, 1});
      for (auto [id, label] : {std::pair{n0, c0}, std::pair{n1, c1}}) {
        auto sub_pending = pending;
        sub_pending.push_back(id);
        auto sub_branch = on_branch;
        bool sub_closed = clashes(sub_branch, label);
        sub_branch.push_back(label);
        grow(id, std::move(sub_pending), std::move(sub_branch), sub_closed);
      }
      return;
    }
    t_.nodes[leaf].closed = true;
  }

  Tableau t_;
};

template <class Label>
bool all_leaves_closed(const BasicTableau<Label>& t) {
  for (std::size_t leaf : t.leaves())
    if (!t.nodes[leaf].closed) return false;
  return true;
}

std::string rule_name(RuleKind r) { return r == RuleKind::A ? "A" : "B"; }

template <class Label, class LabelText>
std::string render_text_impl(const BasicTableau<Label>& t, LabelText&& text) {
  std::string out;
  std::vector<std::pair<std::size_t, std::size_t>> stack{{0, 0}};  // (id, depth)
  while (!stack.empty()) {
    auto [id, depth] = stack.back();
    stack.pop_back();
    const auto& node = t.nodes[id];
    out.append(2 * depth, ' ');
    out += "[" + std::to_string(node.stamp) + "] " + text(node.label);
    if (node.from) out += "  (" + rule_name(node.from->rule) + std::to_string(node.from->slot) + " of " +
                          std::to_string(node.from->source) + ")";
    if (node.children.empty()) out += node.closed ? "  closed" : "  OPEN";
    out += '\n';
    for (auto it = node.children.rbegin(); it != node.children.rend(); ++it) stack.emplace_back(*it, depth + 1);
  }
  out += all_leaves_closed(t) ? "tableau closed\n" : "tableau open\n";
  return out;
}

template <class Label, class LabelFields>
nlohmann::json render_json_impl(const BasicTableau<Label>& t, LabelFields&& fields) {
  using nlohmann::json;
  json nodes = json::array();
  for (std::size_t id = 0; id < t.nodes.size(); ++id) {
    const auto& node = t.nodes[id];
    json j = {{"id", id},
              {"parent", node.parent ? json(*node.parent) : json(nullptr)},
              {"from", node.from ? json(node.from->source) : json(nullptr)},
              {"rule", node.from ? json(rule_name(node.from->rule)) : json(nullptr)},
              {"slot", node.from ? json(node.from->slot) : json(nullptr)},
              {"stamp", node.stamp}};
    fields(node.label, j);
    if (node.children.empty()) j["closed"] = node.closed;
    nodes.push_back(std::move(j));
  }
  return {{"nodes", std::move(nodes)}, {"closed", all_leaves_closed(t)}};
}

}  // namespace

Tableau expand(const Formula& z) { return Expander(z).run(); }

bool is_closed(const Tableau& t) { return all_leaves_closed(t); }
bool is_closed(const QTableau& t) { return all_leaves_closed(t); }

QTableau q_transform(const Tableau& t, const QContext& ctx) {
  if (!is_closed(t)) throw TableauError("cannot Q-transform an open tableau");
  QTableau out{{}, ctx};
  out.nodes.reserve(t.nodes.size());
  for (const auto& n : t.nodes) {
    QTerm term{n.label.sign == Sign::T ? Polarity::QQ : Polarity::Q, n.label.body};
    out.nodes.push_back(TableauNode<QTerm>{std::move(term), n.parent, n.from, n.stamp, n.children, n.closed});
  }
  return out;
}

std::string to_string(const SignedFormula& sf) {
  return std::string(sf.sign == Sign::T ? "T " : "F ") + print(sf.body);
}

std::string to_string(const QTerm& term) {
  std::string body = print(term.body);
  if (term.body.is_imp()) body = "(" + body + ")";
  return (term.polarity == Polarity::Q ? "Q" : "QQ") + body;
}

std::string render_text(const Tableau& t) {
  return render_text_impl(t, [](const SignedFormula& sf) { return to_string(sf); });
}

std::string render_text(const QTableau& t) {
  std::string out = "Q = " + print(t.ctx.q) + "\n";
  return out + render_text_impl(t, [&](const QTerm& term) { return to_string(term) + "  = " + print(term.realize(t.ctx)); });
}

nlohmann::json render_json(const Tableau& t) {
  return render_json_impl(t, [](const SignedFormula& sf, nlohmann::json& j) {
    j["sign"] = sf.sign == Sign::T ? "T" : "F";
    j["body"] = print(sf.body);
  });
}

nlohmann::json render_json(const QTableau& t) {
  nlohmann::json out = render_json_impl(t, [](const QTerm& term, nlohmann::json& j) {
    j["polarity"] = term.polarity == Polarity::Q ? "Q" : "QQ";
    j["body"] = print(term.body);
  });
  out["q"] = print(t.ctx.q);
  return out;
}

}  // namespace ipc
