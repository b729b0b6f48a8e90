#include "g3nn/prover.hpp"

#include <algorithm>
#include <unordered_set>

namespace g3nn {

namespace {

// Leaf for a closed sequent: falsum on the left wins if it comes first.
DerivationTree leaf(const Sequent& s) {
  DerivationTree t{s, RuleId::Init, {}, {}, 0};
  for (std::uint32_t i = 0; i < s.antecedent.size(); ++i) {
    const Formula f = s.antecedent[i];
    if (f.is_bottom()) {
      t.rule = RuleId::LBot;
      t.principal = {{Side::Left, i}};
      return t;
    }
    if (!f.is_atom()) continue;
    auto it = std::find(s.succedent.begin(), s.succedent.end(), f);
    if (it != s.succedent.end()) {
      t.principal = {{Side::Left, i}, {Side::Right, static_cast<std::uint32_t>(it - s.succedent.begin())}};
      return t;
    }
  }
  throw std::logic_error("leaf() called on an open sequent");
}

class DepthFirst {
 public:
  DepthFirst(const CalculusSpec& calculus, const DecideOptions& options) : calculus_(calculus), options_(options) {}

  bool prove(const Sequent& s, unsigned depth, DerivationTree& out) {
    ++stats.nodes;
    stats.max_depth = std::max(stats.max_depth, depth);
    if (is_closed(s)) {
      out = leaf(s);
      return true;
    }
    SequentKey key;
    if (options_.memoize_failures) {
      key = canonical_key(s);
      if (failed_.contains(key)) return false;
    }
    if (auto inst = first_propositional_instance(s)) {
      if (apply(s, *inst, depth, out)) return true;
    } else {
      for (const auto& m : modal_instances(s, calculus_, options_.enumeration)) {
        ++stats.or_branches;
        if (apply(s, m, depth, out)) return true;
      }
    }
    if (options_.memoize_failures) failed_.insert(std::move(key));
    return false;
  }

  SearchStats stats;

 private:
  bool apply(const Sequent& s, const RuleInstance& inst, unsigned depth, DerivationTree& out) {
    std::vector<DerivationTree> children(inst.premisses.size());
    unsigned height = 0;
    for (std::size_t i = 0; i < inst.premisses.size(); ++i) {
      if (!prove(inst.premisses[i], depth + 1, children[i])) return false;
      height = std::max(height, children[i].height);
    }
    out = DerivationTree{s, inst.rule, inst.principal, std::move(children), height + 1};
    return true;
  }

  const CalculusSpec& calculus_;
  const DecideOptions& options_;
  std::unordered_set<SequentKey, SequentKeyHash> failed_;
};

bool same_premisses(const std::vector<Sequent>& a, const std::vector<DerivationTree>& children) {
  if (a.size() != children.size()) return false;
  std::vector<bool> used(a.size(), false);
  for (const auto& child : children) {
    bool found = false;
    for (std::size_t i = 0; i < a.size() && !found; ++i) {
      if (!used[i] && a[i] == child.sequent) used[i] = found = true;
    }
    if (!found) return false;
  }
  return true;
}

std::vector<Formula> principal_formulas(const Sequent& s, const std::vector<Occurrence>& occs, bool& in_range) {
  std::vector<Formula> out;
  in_range = true;
  for (auto o : occs) {
    const auto& side = s.side(o.side);
    if (o.index >= side.size()) {
      in_range = false;
      return out;
    }
    out.push_back(side[o.index]);
  }
  return out;
}

// Principal formulas match as a multiset per side.
bool same_principal(const Sequent& s, const std::vector<Occurrence>& a, const std::vector<Occurrence>& b) {
  for (Side side : {Side::Left, Side::Right}) {
    std::vector<Formula> fa, fb;
    for (auto o : a)
      if (o.side == side) fa.push_back(s.side(side)[o.index]);
    for (auto o : b)
      if (o.side == side) fb.push_back(s.side(side)[o.index]);
    if (!multiset_equal(fa, fb)) return false;
  }
  return true;
}

std::string check_node(const DerivationTree& t, const CalculusSpec& calculus) {
  const Sequent& s = t.sequent;
  bool in_range = true;
  const auto principal = principal_formulas(s, t.principal, in_range);
  if (!in_range) return "principal index out of range";

  if (t.children.empty()) {
    if (t.height != 0) return "leaf with nonzero height";
    if (t.rule == RuleId::LBot) {
      if (principal.size() != 1 || t.principal[0].side != Side::Left || !principal[0].is_bottom())
        return "LBot leaf without falsum as principal antecedent formula";
      return {};
    }
    if (t.rule == RuleId::Init) {
      if (principal.size() != 2 || t.principal[0].side != Side::Left || t.principal[1].side != Side::Right ||
          !principal[0].is_atom() || principal[0] != principal[1])
        return "Init leaf without a shared atom as principal pair";
      return {};
    }
    return std::string("rule ") + std::string(rule_name(t.rule)) + " applied without premisses";
  }

  unsigned height = 0;
  for (const auto& c : t.children) height = std::max(height, c.height);
  if (t.height != height + 1) return "inconsistent height";
  if (!calculus.has(t.rule)) return std::string("rule ") + std::string(rule_name(t.rule)) + " is not a rule of " + calculus.name();

  if (is_propositional(t.rule)) {
    if (t.principal.size() != 1) return "propositional rule needs exactly one principal formula";
    if (!principal[0].is_compound()) return "principal formula is not compound";
    const auto inst = propositional_instance_at(s, t.principal[0]);
    if (inst.rule != t.rule) return std::string("principal formula does not match rule ") + std::string(rule_name(t.rule));
    if (!same_premisses(inst.premisses, t.children)) return "premisses do not match the rule schema";
    return {};
  }

  for (const auto& inst : modal_instances(s, calculus)) {
    if (inst.rule != t.rule) continue;
    if (inst.principal.size() != t.principal.size()) continue;
    if (!same_principal(s, inst.principal, t.principal)) continue;
    if (same_premisses(inst.premisses, t.children)) return {};
  }
  return std::string("no ") + std::string(rule_name(t.rule)) + " instance with these principal formulas and premisses";
}

CheckResult check_rec(const DerivationTree& t, const CalculusSpec& calculus, const std::string& path) {
  if (auto err = check_node(t, calculus); !err.empty())
    return {false, "invalid node " + path + " (" + render(t.sequent) + "): " + err};
  if (t.children.empty() && !is_closed(t.sequent))
    return {false, "invalid node " + path + " (" + render(t.sequent) + "): open leaf"};
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    auto r = check_rec(t.children[i], calculus, path + "." + std::to_string(i));
    if (!r) return r;
  }
  return {};
}

}  // namespace

std::size_t tree_size(const DerivationTree& t) {
  std::size_t n = 1;
  for (const auto& c : t.children) n += tree_size(c);
  return n;
}

Verdict decide(const Sequent& s, const CalculusSpec& calculus, const DecideOptions& options) {
  DepthFirst search(calculus, options);
  Verdict v;
  DerivationTree tree;
  v.derivable = search.prove(s, 0, tree);
  if (v.derivable) v.tree = std::move(tree);
  v.stats = search.stats;
  return v;
}

bool derivable(const Sequent& s, const CalculusSpec& calculus) { return decide(s, calculus).derivable; }

std::optional<unsigned> MinHeightSearch::operator()(const Sequent& s) {
  const int h = search(s);
  if (h == kUnderivable) return std::nullopt;
  return static_cast<unsigned>(h);
}

int MinHeightSearch::search(const Sequent& s) {
  if (is_closed(s)) return 0;
  auto key = canonical_key(s);
  if (auto it = cache_.find(key); it != cache_.end()) return it->second;

  int best = kUnderivable;
  auto consider = [&](const RuleInstance& inst) {
    int h = 0;
    for (const auto& p : inst.premisses) {
      const int ph = search(p);
      if (ph == kUnderivable) return;
      h = std::max(h, ph);
      if (best != kUnderivable && h + 1 >= best) return;
    }
    best = h + 1;
  };

  // Identical formulas give identical premisses; try each distinct one once.
  for (Side side : {Side::Left, Side::Right}) {
    const auto& fs = s.side(side);
    for (std::uint32_t i = 0; i < fs.size() && best != 1; ++i) {
      if (!fs[i].is_compound()) continue;
      if (std::find(fs.begin(), fs.begin() + i, fs[i]) != fs.begin() + i) continue;
      consider(propositional_instance_at(s, {side, i}));
    }
  }
  if (best != 1)
    for (const auto& inst : modal_instances(s, *calculus_)) {
      consider(inst);
      if (best == 1) break;
    }
  cache_.emplace(std::move(key), best);
  return best;
}

std::optional<unsigned> min_height(const Sequent& s, const CalculusSpec& calculus) {
  MinHeightSearch search(calculus);
  return search(s);
}

CheckResult check_derivation(const DerivationTree& t, const CalculusSpec& calculus) {
  return check_rec(t, calculus, "root");
}

}  // namespace g3nn
