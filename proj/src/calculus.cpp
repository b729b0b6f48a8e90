#include "g3nn/calculus.hpp"

#include <algorithm>
#include <array>
#include <set>

namespace g3nn {

namespace {

struct RuleInfo {
  RuleId id;
  std::string_view name;
};

constexpr std::array<RuleInfo, kRuleCount> kRules{{
    {RuleId::Init, "Init"},
    {RuleId::LBot, "LBot"},
    {RuleId::LAnd, "LAnd"},
    {RuleId::RAnd, "RAnd"},
    {RuleId::LOr, "LOr"},
    {RuleId::ROr, "ROr"},
    {RuleId::LImp, "LImp"},
    {RuleId::RImp, "RImp"},
    {RuleId::LRE, "LR-E"},
    {RuleId::LRM, "LR-M"},
    {RuleId::LRR, "LR-R"},
    {RuleId::LRC, "LR-C"},
    {RuleId::LRK, "LR-K"},
    {RuleId::RN, "R-N"},
    {RuleId::LDBot, "L-Dbot"},
    {RuleId::LDDiamE, "L-DdiamE"},
    {RuleId::LDDiamM, "L-DdiamM"},
    {RuleId::LDDiamC, "L-DdiamC"},
    {RuleId::LDStar, "L-D*"},
}};

using enum RuleId;

const std::vector<CalculusSpec>& table() {
  static const std::vector<CalculusSpec> calculi{
      // modal cube
      {"G3E", "G3E", {LRE}},
      {"G3EN", "G3EN", {LRE, RN}},
      {"G3M", "G3M", {LRM}},
      {"G3MN", "G3MN", {LRM, RN}},
      {"G3C", "G3C", {LRC}},
      {"G3CN", "G3CN", {LRC, RN}},
      {"G3R", "G3R", {LRR}},
      {"G3K", "G3K", {LRK}},
      // deontic extensions; bundled (N) columns expanded
      {"G3EDbot", "G3ED⊥", {LRE, LDBot}},
      {"G3ENDbot", "G3END⊥", {LRE, RN, LDBot}},
      {"G3EDdiam", "G3ED◇", {LRE, LDDiamE}},
      {"G3ED", "G3ED", {LRE, LDBot, LDDiamE}},
      {"G3END", "G3END", {LRE, RN, LDBot, LDDiamE}},
      {"G3MDbot", "G3MD⊥", {LRM, LDBot}},
      {"G3MNDbot", "G3MND⊥", {LRM, RN, LDBot}},
      {"G3MD", "G3MD", {LRM, LDDiamM}},
      {"G3MND", "G3MND", {LRM, RN, LDDiamM}},
      {"G3CDdiam", "G3CD◇", {LRC, LDDiamC}},
      {"G3CD", "G3CD", {LRC, LDStar}},
      {"G3CND", "G3CND", {LRC, RN, LDStar}},
      {"G3RD", "G3RD", {LRR, LDStar}},
      {"G3KD", "G3KD", {LRK, LDStar}},
  };
  return calculi;
}

// Boxed occurrences of one side, grouped by formula in order of first
// occurrence.
struct BoxGroup {
  Formula inner;
  std::vector<std::uint32_t> positions;
};

std::vector<BoxGroup> box_groups(const std::vector<Formula>& side) {
  std::vector<BoxGroup> groups;
  for (std::uint32_t i = 0; i < side.size(); ++i) {
    if (!side[i].is_box()) continue;
    auto it = std::find_if(groups.begin(), groups.end(),
                           [&](const BoxGroup& g) { return g.inner == side[i].inner(); });
    if (it == groups.end())
      groups.push_back({side[i].inner(), {i}});
    else
      it->positions.push_back(i);
  }
  return groups;
}

// A sub-multiset of boxed antecedent occurrences.
struct Pick {
  std::vector<std::uint32_t> counts;     // per group
  std::vector<std::uint32_t> positions;  // sorted
  std::vector<Formula> inners;           // in position order
};

// Sub-multisets of the groups' occurrences not already taken (`taken` counts
// per group), with size in [min_size, max_size], length-lexicographic.
std::vector<Pick> submultisets(const std::vector<BoxGroup>& groups, const std::vector<std::uint32_t>& taken,
                               std::size_t min_size, std::size_t max_size, const std::vector<Formula>& side) {
  std::vector<Pick> out;
  std::vector<std::uint32_t> counts(groups.size(), 0);
  while (true) {
    std::size_t size = 0;
    for (auto c : counts) size += c;
    if (size >= min_size && size <= max_size) {
      Pick p;
      p.counts = counts;
      for (std::size_t g = 0; g < groups.size(); ++g)
        for (std::uint32_t k = 0; k < counts[g]; ++k) p.positions.push_back(groups[g].positions[taken[g] + k]);
      std::sort(p.positions.begin(), p.positions.end());
      for (auto pos : p.positions) p.inners.push_back(side[pos].inner());
      out.push_back(std::move(p));
    }
    std::size_t g = 0;
    for (; g < groups.size(); ++g) {
      if (counts[g] < groups[g].positions.size() - taken[g]) {
        ++counts[g];
        break;
      }
      counts[g] = 0;
    }
    if (g == groups.size()) break;
  }
  std::sort(out.begin(), out.end(), [](const Pick& a, const Pick& b) {
    if (a.positions.size() != b.positions.size()) return a.positions.size() < b.positions.size();
    return a.positions < b.positions;
  });
  return out;
}

std::vector<Occurrence> left_occurrences(const std::vector<std::uint32_t>& positions) {
  std::vector<Occurrence> out;
  for (auto p : positions) out.push_back({Side::Left, p});
  return out;
}

std::strong_ordering compare_sides(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  for (std::size_t i = 0; i < std::min(a.size(), b.size()); ++i)
    if (auto c = structural_compare(a[i], b[i]); c != 0) return c;
  return a.size() <=> b.size();
}

}  // namespace

std::string_view rule_name(RuleId rule) { return kRules[static_cast<std::size_t>(rule)].name; }

std::optional<RuleId> rule_from_name(std::string_view name) {
  for (const auto& info : kRules)
    if (info.name == name) return info.id;
  return std::nullopt;
}

bool is_propositional(RuleId rule) { return rule >= LAnd && rule <= RImp; }

bool is_modal(RuleId rule) { return rule >= LRE; }

UnknownCalculus::UnknownCalculus(const std::string& name) : std::invalid_argument("unknown calculus '" + name + "'") {}

CalculusSpec::CalculusSpec(std::string name, std::string display_name, std::initializer_list<RuleId> modal_rules)
    : name_(std::move(name)), display_name_(std::move(display_name)) {
  for (auto r = static_cast<std::size_t>(Init); r <= static_cast<std::size_t>(RImp); ++r) rules_.set(r);
  for (RuleId r : modal_rules) rules_.set(static_cast<std::size_t>(r));
}

std::vector<RuleId> CalculusSpec::modal_rules() const {
  std::vector<RuleId> out;
  for (const auto& info : kRules)
    if (is_modal(info.id) && has(info.id)) out.push_back(info.id);
  return out;
}

const CalculusSpec& calculus_for(std::string_view name) {
  for (const auto& c : table())
    if (c.name() == name || c.display_name() == name) return c;
  throw UnknownCalculus(std::string(name));
}

std::span<const CalculusSpec> all_calculi() { return table(); }

RuleInstance propositional_instance_at(const Sequent& s, Occurrence at) {
  const Formula f = s.side(at.side).at(at.index);
  if (!f.is_compound()) throw std::invalid_argument("no propositional rule for a non-compound formula");
  Sequent rest = s;
  auto& side = rest.side(at.side);
  side.erase(side.begin() + at.index);
  const Formula a = f.left();
  const Formula b = f.right();

  auto with_left = [&](std::initializer_list<Formula> fs) {
    Sequent p = rest;
    p.antecedent.insert(p.antecedent.begin(), fs);
    return p;
  };
  auto with_right = [&](std::initializer_list<Formula> fs) {
    Sequent p = rest;
    p.succedent.insert(p.succedent.end(), fs);
    return p;
  };

  RuleInstance inst;
  inst.principal = {at};
  if (at.side == Side::Left) {
    switch (f.kind()) {
      case Connective::And:
        inst.rule = LAnd;
        inst.premisses = {with_left({a, b})};
        break;
      case Connective::Or:
        inst.rule = LOr;
        inst.premisses = {with_left({a}), with_left({b})};
        break;
      default:
        inst.rule = LImp;
        inst.premisses = {with_right({a}), with_left({b})};
        break;
    }
  } else {
    switch (f.kind()) {
      case Connective::And:
        inst.rule = RAnd;
        inst.premisses = {with_right({a}), with_right({b})};
        break;
      case Connective::Or:
        inst.rule = ROr;
        inst.premisses = {with_right({a, b})};
        break;
      default: {
        inst.rule = RImp;
        Sequent p = rest;
        p.antecedent.insert(p.antecedent.begin(), a);
        p.succedent.push_back(b);
        inst.premisses = {std::move(p)};
        break;
      }
    }
  }
  return inst;
}

std::vector<RuleInstance> propositional_instances(const Sequent& s) {
  std::vector<RuleInstance> out;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& fs = s.side(side);
    for (std::uint32_t i = 0; i < fs.size(); ++i)
      if (fs[i].is_compound()) out.push_back(propositional_instance_at(s, {side, i}));
  }
  return out;
}

std::optional<RuleInstance> first_propositional_instance(const Sequent& s) {
  for (Side side : {Side::Left, Side::Right}) {
    const auto& fs = s.side(side);
    for (std::uint32_t i = 0; i < fs.size(); ++i)
      if (fs[i].is_compound()) return propositional_instance_at(s, {side, i});
  }
  return std::nullopt;
}

std::vector<RuleInstance> modal_instances(const Sequent& s, const CalculusSpec& calculus,
                                          const EnumerationOptions& options) {
  std::vector<RuleInstance> out;
  const auto left = box_groups(s.antecedent);
  const auto right = box_groups(s.succedent);
  const std::vector<std::uint32_t> none(left.size(), 0);
  const std::size_t unbounded = s.antecedent.size();

  auto single = [](Formula f) { return std::vector<Formula>{f}; };
  auto boxed_succedent = [](const BoxGroup& g) { return Occurrence{Side::Right, g.positions.front()}; };

  for (RuleId rule : calculus.modal_rules()) {
    switch (rule) {
      case LRE:
      case LRM:
        for (const auto& a : left) {
          for (const auto& b : right) {
            RuleInstance inst{rule, {{Side::Left, a.positions.front()}, boxed_succedent(b)}, {}};
            inst.premisses.push_back({single(a.inner), single(b.inner)});
            if (rule == LRE) inst.premisses.push_back({single(b.inner), single(a.inner)});
            out.push_back(std::move(inst));
          }
        }
        break;
      case LRR:
      case LRC:
      case LRK: {
        const std::size_t min_size = rule == LRK ? 0 : 1;
        for (const auto& pick : submultisets(left, none, min_size, unbounded, s.antecedent)) {
          for (const auto& b : right) {
            RuleInstance inst{rule, left_occurrences(pick.positions), {}};
            inst.principal.push_back(boxed_succedent(b));
            inst.premisses.push_back({pick.inners, single(b.inner)});
            if (rule == LRC)
              for (Formula a : pick.inners) inst.premisses.push_back({single(b.inner), single(a)});
            out.push_back(std::move(inst));
          }
        }
        break;
      }
      case RN:
        for (const auto& b : right) out.push_back({RN, {boxed_succedent(b)}, {Sequent{{}, single(b.inner)}}});
        break;
      case LDBot:
        for (const auto& a : left)
          out.push_back({LDBot, {{Side::Left, a.positions.front()}}, {Sequent{single(a.inner), {}}}});
        break;
      case LDDiamE:
      case LDDiamM: {
        const std::size_t min_size = rule == LDDiamE && options.prune_single_diamond_e ? 2 : 1;
        for (const auto& pick : submultisets(left, none, min_size, 2, s.antecedent)) {
          RuleInstance inst{rule, left_occurrences(pick.positions), {Sequent{pick.inners, {}}}};
          if (rule == LDDiamE) inst.premisses.push_back({{}, pick.inners});
          out.push_back(std::move(inst));
        }
        break;
      }
      case LDDiamC: {
        std::set<std::vector<SequentKey>, decltype([](const auto& a, const auto& b) {
                   return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end(),
                                                       [](const SequentKey& x, const SequentKey& y) { return x.ids < y.ids; });
                 })>
            seen;
        for (const auto& pi : submultisets(left, none, 1, unbounded, s.antecedent)) {
          for (const auto& sigma : submultisets(left, pi.counts, 1, unbounded, s.antecedent)) {
            RuleInstance inst{LDDiamC, {}, {}};
            std::vector<std::uint32_t> positions = pi.positions;
            positions.insert(positions.end(), sigma.positions.begin(), sigma.positions.end());
            std::sort(positions.begin(), positions.end());
            inst.principal = left_occurrences(positions);

            std::vector<Formula> both = pi.inners;
            both.insert(both.end(), sigma.inners.begin(), sigma.inners.end());
            inst.premisses.push_back({both, {}});

            std::vector<Sequent> pairs;
            for (Formula a : pi.inners) {
              for (Formula b : sigma.inners) {
                std::vector<Formula> succ{a, b};
                std::sort(succ.begin(), succ.end(), StructuralLess{});
                pairs.push_back({{}, std::move(succ)});
              }
            }
            std::sort(pairs.begin(), pairs.end(), [](const Sequent& x, const Sequent& y) {
              return compare_sides(x.succedent, y.succedent) < 0;
            });
            pairs.erase(std::unique(pairs.begin(), pairs.end()), pairs.end());
            inst.premisses.insert(inst.premisses.end(), pairs.begin(), pairs.end());

            std::vector<SequentKey> key;
            for (const auto& p : inst.premisses) key.push_back(canonical_key(p));
            if (seen.insert(std::move(key)).second) out.push_back(std::move(inst));
          }
        }
        break;
      }
      case LDStar:
        for (const auto& pick : submultisets(left, none, 1, unbounded, s.antecedent))
          out.push_back({LDStar, left_occurrences(pick.positions), {Sequent{pick.inners, {}}}});
        break;
      default:
        break;
    }
  }
  return out;
}

}  // namespace g3nn
