#include "g3nn/interpolation.hpp"

#include <algorithm>

namespace g3nn {

namespace {

const Formula kTop = Formula::top();
const Formula kBottom = Formula::bottom();

bool remove_from(std::vector<Formula>& fs, Formula f) {
  auto it = std::find(fs.begin(), fs.end(), f);
  if (it == fs.end()) return false;
  fs.erase(it);
  return true;
}

bool contains(const std::vector<Formula>& fs, Formula f) { return std::find(fs.begin(), fs.end(), f) != fs.end(); }

// Removes one copy of f from the first component holding it; true if that was
// the second component.
bool take(Partition& p, Side side, Formula f) {
  auto& first = side == Side::Left ? p.g1 : p.d1;
  auto& second = side == Side::Left ? p.g2 : p.d2;
  if (remove_from(first, f)) return false;
  if (remove_from(second, f)) return true;
  throw InvalidDerivation("principal formula " + render(f) + " missing from partition");
}

std::vector<Formula>& slot(Partition& p, Side side, bool second) {
  if (side == Side::Left) return second ? p.g2 : p.g1;
  return second ? p.d2 : p.d1;
}

class Maehara {
 public:
  Formula operator()(const DerivationTree& t, const Partition& p) {
    if (t.children.empty()) return leaf(t, p);
    if (is_propositional(t.rule)) return propositional(t, p);
    return modal(t, p);
  }

 private:
  Formula leaf(const DerivationTree& t, const Partition& p) {
    if (t.rule == RuleId::LBot) return contains(p.g1, kBottom) ? kBottom : kTop;
    const Formula a = t.sequent.antecedent.at(t.principal.at(0).index);
    if (contains(p.g1, a) && contains(p.d1, a)) return kBottom;
    if (contains(p.g2, a) && contains(p.d2, a)) return kTop;
    if (contains(p.g1, a) && contains(p.d2, a)) return a;
    return fold_not(a);
  }

  Formula child(const DerivationTree& t, const Partition& q, std::vector<bool>& used) {
    const Sequent s = q.joined();
    for (std::size_t i = 0; i < t.children.size(); ++i) {
      if (used[i] || !(t.children[i].sequent == s)) continue;
      used[i] = true;
      return (*this)(t.children[i], q);
    }
    throw InvalidDerivation("no premiss " + render(s) + " under " + std::string(rule_name(t.rule)));
  }

  Formula propositional(const DerivationTree& t, const Partition& p) {
    const Occurrence at = t.principal.at(0);
    const Formula f = t.sequent.side(at.side).at(at.index);
    Partition rest = p;
    const bool second = take(rest, at.side, f);
    const Formula a = f.left();
    const Formula b = f.right();

    auto with = [&](std::initializer_list<std::pair<Side, Formula>> actives) {
      Partition q = rest;
      for (auto [side, g] : actives) slot(q, side, second).push_back(g);
      return q;
    };

    std::vector<Partition> parts;
    switch (t.rule) {
      case RuleId::LAnd:
        parts = {with({{Side::Left, a}, {Side::Left, b}})};
        break;
      case RuleId::ROr:
        parts = {with({{Side::Right, a}, {Side::Right, b}})};
        break;
      case RuleId::RImp:
        parts = {with({{Side::Left, a}, {Side::Right, b}})};
        break;
      case RuleId::LOr:
        parts = {with({{Side::Left, a}}), with({{Side::Left, b}})};
        break;
      case RuleId::RAnd:
        parts = {with({{Side::Right, a}}), with({{Side::Right, b}})};
        break;
      case RuleId::LImp:
        parts = {with({{Side::Right, a}}), with({{Side::Left, b}})};
        break;
      default:
        throw InvalidDerivation("unexpected rule " + std::string(rule_name(t.rule)));
    }

    std::vector<bool> used(t.children.size(), false);
    std::vector<Formula> is;
    for (const auto& q : parts) is.push_back(child(t, q, used));
    if (is.size() == 1) return is[0];
    return second ? fold_and(is[0], is[1]) : fold_or(is[0], is[1]);
  }

  Formula modal(const DerivationTree& t, const Partition& p) {
    Partition rest = p;
    std::vector<Formula> lambda1, lambda2;
    std::optional<Formula> boxed;
    bool boxed_second = false;
    for (auto o : t.principal) {
      const Formula f = t.sequent.side(o.side).at(o.index);
      const bool second = take(rest, o.side, f);
      if (o.side == Side::Left) {
        (second ? lambda2 : lambda1).push_back(f.inner());
      } else {
        boxed = f.inner();
        boxed_second = second;
      }
    }

    std::vector<bool> used(t.children.size(), false);
    switch (t.rule) {
      case RuleId::LRE:
      case RuleId::LRM:
      case RuleId::LRR:
      case RuleId::LRK: {
        Partition q{lambda1, {}, lambda2, {}};
        (boxed_second ? q.d2 : q.d1).push_back(*boxed);
        const Formula c = child(t, q, used);
        if (boxed_second) return lambda1.empty() ? c : Formula::box(c);
        return lambda2.empty() ? c : fold_diamond(c);
      }
      case RuleId::RN:
        return boxed_second ? kTop : kBottom;
      case RuleId::LDBot:
      case RuleId::LDDiamE:
      case RuleId::LDDiamM: {
        const Formula c = child(t, Partition{lambda1, {}, lambda2, {}}, used);
        if (lambda1.empty() || lambda2.empty()) return c;
        return Formula::box(c);
      }
      case RuleId::LDStar: {
        const Formula c = child(t, Partition{lambda1, {}, lambda2, {}}, used);
        return lambda1.empty() ? fold_diamond(c) : Formula::box(c);
      }
      default:
        throw InvalidDerivation("no interpolation case for rule " + std::string(rule_name(t.rule)));
    }
  }
};

bool subset(const std::set<std::string>& a, const std::set<std::string>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

Sequent left_half(const Partition& p, Formula i) {
  Sequent s = p.first();
  s.succedent.push_back(i);
  return s;
}

Sequent right_half(const Partition& p, Formula i) {
  Sequent s = p.second();
  s.antecedent.insert(s.antecedent.begin(), i);
  return s;
}

}  // namespace

UnsupportedCalculus::UnsupportedCalculus(const CalculusSpec& calculus)
    : std::invalid_argument("interpolation unsupported for LR-C calculi (" + calculus.name() + ")") {}

InvalidDerivation::InvalidDerivation(const std::string& detail) : std::invalid_argument(detail) {}

Formula fold_or(Formula a, Formula b) {
  if (a == kTop || b == kTop) return kTop;
  if (a == kBottom) return b;
  if (b == kBottom) return a;
  return Formula::disj(a, b);
}

Formula fold_and(Formula a, Formula b) {
  if (a == kBottom || b == kBottom) return kBottom;
  if (a == kTop) return b;
  if (b == kTop) return a;
  return Formula::conj(a, b);
}

Formula fold_not(Formula a) {
  if (a == kTop) return kBottom;
  if (a == kBottom) return kTop;
  return Formula::negation(a);
}

Formula fold_diamond(Formula a) { return fold_not(Formula::box(fold_not(a))); }

Formula maehara(const DerivationTree& t, const Partition& p, const CalculusSpec& calculus) {
  if (!calculus.standard()) throw UnsupportedCalculus(calculus);
  if (!(p.joined() == t.sequent))
    throw std::invalid_argument("partition " + render(p) + " does not split " + render(t.sequent));
  return Maehara{}(t, p);
}

InterpolationResult interpolate(const DerivationTree& t, const Partition& p, const CalculusSpec& calculus) {
  if (!calculus.standard()) throw UnsupportedCalculus(calculus);
  if (auto r = check_derivation(t, calculus); !r) throw InvalidDerivation(r.message);
  const Formula i = maehara(t, p, calculus);

  auto fail = [&](const std::string& why) {
    return std::logic_error("interpolant " + render(i) + " for " + render(p) + " " + why);
  };
  if (!subset(atoms(i), p.common_atoms())) throw fail("uses a non-shared atom");
  auto left = decide(left_half(p, i), calculus);
  if (!left.derivable) throw fail("does not follow from the first component");
  auto right = decide(right_half(p, i), calculus);
  if (!right.derivable) throw fail("does not entail the second component");
  return {i, std::move(*left.tree), std::move(*right.tree)};
}

std::optional<InterpolationResult> craig(Formula a, Formula b, const CalculusSpec& calculus) {
  if (!calculus.standard()) throw UnsupportedCalculus(calculus);
  auto v = decide(Sequent{{a}, {b}}, calculus);
  if (!v.derivable) return std::nullopt;
  return interpolate(*v.tree, Partition{{a}, {}, {}, {b}}, calculus);
}

bool verify_interpolant(Formula i, const Partition& p, const CalculusSpec& calculus) {
  return subset(atoms(i), p.common_atoms()) && derivable(left_half(p, i), calculus) &&
         derivable(right_half(p, i), calculus);
}

}  // namespace g3nn
