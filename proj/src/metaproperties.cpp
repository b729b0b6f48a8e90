#include "g3nn/metaproperties.hpp"

#include <algorithm>
#include <stdexcept>

namespace g3nn {

namespace {

constexpr std::size_t kCacheLimit = 4'000'000;
constexpr std::size_t kExamplesKept = 5;

void remove_one(std::vector<Formula>& fs, Formula f) {
  auto it = std::find(fs.begin(), fs.end(), f);
  if (it == fs.end()) throw std::invalid_argument("formula " + render(f) + " is not in the sequent");
  fs.erase(it);
}

std::optional<unsigned> require_derivable(const Sequent& s, MinHeightSearch& search) {
  auto h = search(s);
  if (!h) throw std::invalid_argument("sequent " + render(s) + " is not derivable");
  return h;
}

bool no_higher(std::optional<unsigned> h, std::optional<unsigned> bound) { return h && *h <= *bound; }

void record(PropertyReport& r, bool ok, const std::string& description) {
  ++r.samples;
  if (ok) return;
  ++r.counterexamples;
  if (r.examples.size() < kExamplesKept) r.examples.push_back(description);
}

bool uses_modal_rule(const DerivationTree& t) {
  if (is_modal(t.rule)) return true;
  return std::any_of(t.children.begin(), t.children.end(), uses_modal_rule);
}

}  // namespace

Generator::Generator(GenConfig cfg) : cfg_(std::move(cfg)), rng_(cfg_.seed) {
  if (cfg_.atom_pool.empty()) throw std::invalid_argument("empty atom pool");
  for (const auto& name : cfg_.atom_pool) atoms_.push_back(Formula::atom(name));
}

Formula Generator::leaf() {
  if (below(8) == 0) return Formula::bottom();
  return atoms_[below(atoms_.size())];
}

Formula Generator::exact(unsigned weight, unsigned max_depth, unsigned box_percent) {
  if (weight == 0) return leaf();
  if (max_depth > 0 && chance(box_percent)) return Formula::box(exact(weight - 1, max_depth - 1, box_percent));
  const auto lhs = static_cast<unsigned>(below(weight));
  const unsigned rhs = weight - 1 - lhs;
  Formula a = exact(lhs, max_depth, box_percent);
  Formula b = exact(rhs, max_depth, box_percent);
  switch (below(3)) {
    case 0:
      return Formula::conj(a, b);
    case 1:
      return Formula::disj(a, b);
    default:
      return Formula::implies(a, b);
  }
}

Formula Generator::formula(unsigned max_weight, unsigned max_depth) {
  return exact(static_cast<unsigned>(below(max_weight + 1)), max_depth, 30);
}

Formula Generator::boxed_formula(unsigned max_weight, unsigned max_depth) {
  if (max_weight == 0 || max_depth == 0 || !chance(70)) return formula(max_weight, max_depth);
  const auto w = static_cast<unsigned>(below(max_weight));
  return Formula::box(exact(w, max_depth - 1, 45));
}

Sequent Generator::sequent(unsigned max_weight) {
  const bool boxed = chance(50);
  const auto n = 1 + below(4);
  unsigned budget = max_weight;
  Sequent s;
  for (std::uint64_t i = 0; i < n; ++i) {
    Formula f = boxed ? boxed_formula(budget, cfg_.max_modal_depth) : formula(budget, cfg_.max_modal_depth);
    budget -= f.weight();
    (chance(50) ? s.antecedent : s.succedent).push_back(f);
  }
  return s;
}

Formula gen_formula(const GenConfig& cfg) {
  Generator g(cfg);
  return g.formula();
}

bool check_weakening(const Sequent& s, Formula a, MinHeightSearch& search) {
  const auto h = require_derivable(s, search);
  Sequent left = s, right = s;
  left.antecedent.insert(left.antecedent.begin(), a);
  right.succedent.push_back(a);
  return no_higher(search(left), h) && no_higher(search(right), h);
}

bool check_weakening(const Sequent& s, Formula a, const CalculusSpec& calculus) {
  MinHeightSearch search(calculus);
  return check_weakening(s, a, search);
}

bool check_contraction(const Sequent& s, MinHeightSearch& search) {
  bool duplicated = false;
  std::optional<unsigned> h;
  for (Side side : {Side::Left, Side::Right}) {
    const auto& fs = s.side(side);
    for (std::size_t i = 0; i < fs.size(); ++i) {
      // Only the first occurrence of each duplicated formula.
      if (std::find(fs.begin(), fs.begin() + i, fs[i]) != fs.begin() + i) continue;
      if (std::count(fs.begin(), fs.end(), fs[i]) < 2) continue;
      if (!duplicated) h = require_derivable(s, search);
      duplicated = true;
      Sequent contracted = s;
      contracted.side(side).erase(contracted.side(side).begin() + i);
      if (!no_higher(search(contracted), h)) return false;
    }
  }
  if (!duplicated) throw std::invalid_argument("sequent " + render(s) + " has no duplicated formula");
  return true;
}

bool check_contraction(const Sequent& s, const CalculusSpec& calculus) {
  MinHeightSearch search(calculus);
  return check_contraction(s, search);
}

bool check_cut(const Sequent& left, const Sequent& right, Formula d, const CalculusSpec& calculus) {
  Sequent conclusion = left;
  remove_one(conclusion.succedent, d);
  Sequent rest = right;
  remove_one(rest.antecedent, d);
  if (!derivable(left, calculus) || !derivable(right, calculus))
    throw std::invalid_argument("cut premisses must be derivable");
  conclusion.antecedent.insert(conclusion.antecedent.end(), rest.antecedent.begin(), rest.antecedent.end());
  conclusion.succedent.insert(conclusion.succedent.end(), rest.succedent.begin(), rest.succedent.end());
  return derivable(conclusion, calculus);
}

bool check_invertibility(const Sequent& s, MinHeightSearch& search) {
  const auto instances = propositional_instances(s);
  if (instances.empty()) throw std::invalid_argument("no propositional rule applies to " + render(s));
  const auto h = require_derivable(s, search);
  for (const auto& inst : instances)
    for (const auto& p : inst.premisses)
      if (!no_higher(search(p), h)) return false;
  return true;
}

bool check_invertibility(const Sequent& s, const CalculusSpec& calculus) {
  MinHeightSearch search(calculus);
  return check_invertibility(s, search);
}

bool SuiteReport::passed(std::uint64_t required_samples) const {
  for (const auto& p : properties)
    if (p.counterexamples != 0 || p.samples < required_samples) return false;
  return true;
}

SuiteReport run_suite(const CalculusSpec& calculus, const GenConfig& cfg, std::uint64_t samples) {
  Generator gen(cfg);
  MinHeightSearch search(calculus);
  const unsigned w = cfg.max_weight;
  const unsigned depth = cfg.max_modal_depth;
  const std::uint64_t budget = std::max<std::uint64_t>(1000, 200 * samples);

  auto named = [](const char* name) {
    PropertyReport r;
    r.property = name;
    return r;
  };
  auto weakening = named("weakening"), contraction = named("contraction"), cut = named("cut"),
       inversion = named("invertibility"), agreement = named("agreement");

  auto refresh = [&] {
    if (search.cache_size() > kCacheLimit) search = MinHeightSearch(calculus);
  };
  // Precondition via decide; the minimal-height search must agree with it.
  auto provable = [&](const Sequent& s, PropertyReport& r) {
    const auto v = decide(s, calculus);
    const bool m = search(s).has_value();
    record(agreement, v.derivable == m, render(s));
    if (v.derivable && uses_modal_rule(*v.tree)) ++r.modal_samples;
    return v.derivable;
  };

  while (weakening.samples < samples && weakening.attempts < budget) {
    ++weakening.attempts;
    refresh();
    Sequent s = gen.sequent();
    if (!provable(s, weakening)) continue;
    const unsigned room = w - sequent_weight(s);
    Formula a = gen.chance(50) ? gen.boxed_formula(room, depth) : gen.formula(room, depth);
    record(weakening, check_weakening(s, a, search), render(s) + "  weakened by  " + render(a));
  }

  while (contraction.samples < samples && contraction.attempts < budget) {
    ++contraction.attempts;
    refresh();
    Sequent s = gen.sequent();
    const unsigned room = w - sequent_weight(s);
    const auto pick = gen.below(s.size());
    const Side side = pick < s.antecedent.size() ? Side::Left : Side::Right;
    const auto index = side == Side::Left ? pick : pick - s.antecedent.size();
    const Formula f = s.side(side)[index];
    if (f.weight() > room) continue;
    s.side(side).push_back(f);
    if (!provable(s, contraction)) continue;
    record(contraction, check_contraction(s, search), render(s));
  }

  while (cut.samples < samples && cut.attempts < budget) {
    ++cut.attempts;
    Formula d = gen.chance(50) ? gen.boxed_formula(w / 2, depth) : gen.formula(w / 2, depth);
    Sequent left = gen.sequent(w - d.weight());
    Sequent right = gen.sequent(w - d.weight());
    left.succedent.push_back(d);
    right.antecedent.insert(right.antecedent.begin(), d);
    const auto l = decide(left, calculus);
    if (!l.derivable) continue;
    const auto r = decide(right, calculus);
    if (!r.derivable) continue;
    if (uses_modal_rule(*l.tree) || uses_modal_rule(*r.tree)) ++cut.modal_samples;
    record(cut, check_cut(left, right, d, calculus),
           render(left) + "  and  " + render(right) + "  on  " + render(d));
  }

  while (inversion.samples < samples && inversion.attempts < budget) {
    ++inversion.attempts;
    refresh();
    Sequent s = gen.sequent();
    if (!first_propositional_instance(s)) continue;
    if (!provable(s, inversion)) continue;
    record(inversion, check_invertibility(s, search), render(s));
  }

  agreement.attempts = agreement.samples;
  return {calculus.name(), {weakening, contraction, cut, inversion, agreement}};
}

std::vector<AxiomFixture> axiom_fixtures(const CalculusSpec& calculus) {
  const auto& name = calculus.name();
  auto in = [&](std::initializer_list<const char*> names) {
    return std::find(names.begin(), names.end(), name) != names.end();
  };
  std::vector<AxiomFixture> out;
  out.push_back({"RE", parse_sequent("=> [](p & q) -> [](q & p)")});
  if (in({"G3M", "G3MN", "G3R", "G3K", "G3MDbot", "G3MNDbot", "G3MD", "G3MND", "G3RD", "G3KD"}))
    out.push_back({"M", parse_sequent("=> [](p & q) -> []p & []q")});
  if (in({"G3C", "G3CN", "G3R", "G3K", "G3CDdiam", "G3CD", "G3CND", "G3RD", "G3KD"}))
    out.push_back({"C", parse_sequent("=> []p & []q -> [](p & q)")});
  if (in({"G3EN", "G3MN", "G3CN", "G3K", "G3ENDbot", "G3END", "G3MNDbot", "G3MND", "G3CND", "G3KD"}))
    out.push_back({"N", parse_sequent("=> []top")});
  if (in({"G3EDbot", "G3ENDbot", "G3ED", "G3END", "G3MDbot", "G3MNDbot", "G3MD", "G3MND", "G3CD", "G3CND", "G3RD",
          "G3KD"}))
    out.push_back({"Dbot", parse_sequent("=> ~[]bot")});
  if (in({"G3EDdiam", "G3ED", "G3END", "G3MD", "G3MND", "G3CDdiam", "G3CD", "G3CND", "G3RD", "G3KD"}))
    out.push_back({"Ddiam", parse_sequent("=> []p -> <>p")});
  return out;
}

}  // namespace g3nn
