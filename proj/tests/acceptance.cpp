// Acceptance run: one PASS/FAIL line per criterion, exit status 1 if any
// criterion fails. Pass a criterion number (1-8) to run only that one.

#include <chrono>
#include <cstdio>
#include <cstdlib>
#include <functional>
#include <string>
#include <vector>

#include "g3nn/interpolation.hpp"
#include "g3nn/metaproperties.hpp"
#include "oracle.hpp"

using namespace g3nn;

namespace {

struct Outcome {
  bool pass;
  std::string detail;
};

const CalculusSpec& calc(const char* name) { return calculus_for(name); }

bool derives(const char* sequent, const char* calculus) { return derivable(parse_sequent(sequent), calc(calculus)); }

std::string n(std::uint64_t v) { return std::to_string(v); }

// 1. Axiom coverage.
Outcome axiom_coverage() {
  std::uint64_t fixtures = 0, failures = 0;
  std::string first;
  for (const auto& c : all_calculi()) {
    for (const auto& f : axiom_fixtures(c)) {
      ++fixtures;
      if (derivable(f.sequent, c)) continue;
      if (!failures++) first = " first: " + f.name + " in " + c.name();
    }
  }
  std::uint64_t facts = 0;
  auto fact = [&](const char* sequent, const char* calculus) {
    ++facts;
    if (derives(sequent, calculus)) return;
    if (!failures++) first = std::string(" first: ") + sequent + " in " + calculus;
  };
  for (const char* c : {"G3MD", "G3MND", "G3ED", "G3END"}) fact("=> ~[]bot", c);
  for (const char* c : {"G3CD", "G3RD", "G3KD"}) fact("=> []p -> ~[]~p", c);
  return {failures == 0, n(fixtures) + " axiom instances over 22 calculi, " + n(facts) + " cross-logic facts, " +
                             n(failures) + " underivable" + first};
}

// 2. Forrester's paradox.
Outcome forrester() {
  const char* gentle = "g -> m, m -> []g, []~m, m =>";
  const char* resolved = "m -> [](m & g), []~m, m =>";
  std::string wrong;
  for (const char* c : {"G3KD", "G3ED", "G3MD", "G3CD", "G3RD"})
    if (derives(gentle, c)) wrong += std::string(" gentle derivable in ") + c + ";";
  for (const char* c : {"G3MD", "G3RD", "G3KD"})
    if (!derives(resolved, c)) wrong += std::string(" resolved underivable in ") + c + ";";
  return {wrong.empty(), wrong.empty() ? "gentle underivable in G3KD/ED/MD/CD/RD, resolved derivable in G3MD/RD/KD" : wrong};
}

// 3. Weakening, contraction, cut and invertibility.
Outcome structural() {
  constexpr std::uint64_t kSamples = 10000;
  GenConfig cfg{8, 3, {"p", "q", "r"}, 20240601};
  std::uint64_t counterexamples = 0, fewest = ~0ull, modal = 0, total = 0;
  std::string first;
  for (const auto& c : all_calculi()) {
    const auto report = run_suite(c, cfg, kSamples);
    for (const auto& p : report.properties) {
      counterexamples += p.counterexamples;
      fewest = std::min(fewest, p.samples);
      modal += p.modal_samples;
      total += p.samples;
      if (p.counterexamples && first.empty())
        first = " first: " + c.name() + " " + p.property + " " + (p.examples.empty() ? "" : p.examples.front());
    }
  }
  return {counterexamples == 0 && fewest >= kSamples,
          "22 calculi x 5 properties, >= " + n(fewest) + " samples each (" + n(modal) + " of " + n(total) +
              " use modal rules), " + n(counterexamples) + " counterexamples" + first};
}

// 4. Height bound and termination.
Outcome height_bound() {
  constexpr int kPerCalculus = 10000;
  std::uint64_t runs = 0, derivations = 0, violations = 0;
  std::string first;
  for (const auto& c : all_calculi()) {
    Generator gen(GenConfig{12, 4, {"p", "q", "r"}, 12});
    for (int i = 0; i < kPerCalculus; ++i) {
      const Sequent s = gen.sequent();
      const Verdict v = decide(s, c);
      ++runs;
      if (!v.derivable) continue;
      ++derivations;
      if (v.tree->height <= sequent_weight(s) && check_derivation(*v.tree, c)) continue;
      if (!violations++) first = " first: " + render(s) + " in " + c.name();
    }
  }
  return {violations == 0, n(runs) + " decisions up to weight 12 terminated, " + n(derivations) +
                               " derivations checked, " + n(violations) + " exceed the weight or fail checking" +
                               first};
}

// 5. Consistency.
Outcome consistency() {
  std::string wrong;
  for (const auto& c : all_calculi())
    if (derivable(Sequent{}, c)) wrong += " " + c.name();
  return {wrong.empty(), wrong.empty() ? "empty sequent underivable in all 22 calculi" : "derivable in" + wrong};
}

// 6. Interpolation.
Outcome interpolation() {
  constexpr int kPerCalculus = 1000;
  std::uint64_t found = 0, failures = 0, modal = 0, calculi = 0;
  std::string first;
  for (const auto& c : all_calculi()) {
    if (!c.standard()) continue;
    ++calculi;
    Generator gen(GenConfig{6, 3, {"p", "q", "r"}, 51});
    int here = 0;
    for (int draw = 0; draw < 200 * kPerCalculus && here < kPerCalculus; ++draw) {
      const Formula a = gen.chance(50) ? gen.boxed_formula(6, 3) : gen.formula();
      const Formula b = gen.chance(50) ? gen.boxed_formula(6, 3) : gen.formula();
      const Partition p{{a}, {}, {}, {b}};
      try {
        const auto r = craig(a, b, c);
        if (!r) continue;
        ++here;
        if (modal_depth(r->interpolant) > 0) ++modal;
        if (verify_interpolant(r->interpolant, p, c)) continue;
      } catch (const std::exception& e) {
        if (first.empty()) first = std::string(" (") + e.what() + ")";
      }
      if (!failures++) first = " first: " + render(a) + " => " + render(b) + " in " + c.name() + first;
    }
    found += here;
    if (here < kPerCalculus && !failures++) first = " only " + n(here) + " implications in " + c.name();
  }

  const Formula top_box = parse_formula("[]top"), bot_box = parse_formula("[]bot");
  bool constants = true;
  for (Formula f : {top_box, bot_box}) {
    const auto t = decide(Sequent{{f}, {f}}, calc("G3E"));
    constants = constants && t.derivable && interpolate(*t.tree, Partition{{f}, {}, {}, {f}}, calc("G3E")).interpolant == f;
  }

  bool refused = true;
  for (const auto& c : all_calculi()) {
    if (c.standard()) continue;
    try {
      craig(parse_formula("[]p"), parse_formula("[]p"), c);
      refused = false;
    } catch (const UnsupportedCalculus&) {
    }
  }
  return {failures == 0 && constants && refused,
          n(found) + " interpolants over " + n(calculi) + " standard calculi (" + n(modal) + " modal), " +
              n(failures) + " failures" + first + "; constants " + (constants ? "[]top, []bot" : "MISMATCH") +
              "; LR-C calculi " + (refused ? "refused" : "NOT refused")};
}

// 7. Hallden completeness.
Outcome hallden() {
  constexpr int kPerCalculus = 1000;
  std::uint64_t samples = 0, failures = 0;
  std::string first;
  for (const char* name : {"G3KD", "G3ENDbot", "G3MNDbot", "G3END", "G3MND"}) {
    const auto& c = calc(name);
    Generator left(GenConfig{5, 2, {"p", "q"}, 71}), right(GenConfig{5, 2, {"r", "s"}, 72});
    int here = 0;
    for (int draw = 0; draw < 200 * kPerCalculus && here < kPerCalculus; ++draw) {
      const Formula a = left.chance(50) ? left.boxed_formula(5, 2) : left.formula();
      const Formula b = right.chance(50) ? right.boxed_formula(5, 2) : right.formula();
      if (!derivable(Sequent{{a}, {b}}, c)) continue;
      ++here;
      if (derivable(Sequent{{a}, {}}, c) || derivable(Sequent{{}, {b}}, c)) continue;
      if (!failures++) first = " first: " + render(a) + " => " + render(b) + " in " + name;
    }
    samples += here;
    if (here < kPerCalculus && !failures++) first = " only " + n(here) + " samples in " + name;
  }
  const bool witness = derives("[]top => []top", "G3E") && !derives("[]top =>", "G3E") && !derives("=> []top", "G3E");
  return {failures == 0 && witness, n(samples) + " disjoint-atom implications in G3KD/ENDbot/MNDbot/END/MND, " +
                                        n(failures) + " failures" + first + "; G3E witness " +
                                        (witness ? "holds" : "FAILS")};
}

// 8. Agreement with the brute-force oracle on bounded sequent classes.
struct Family {
  const char* label;
  std::vector<Formula> leaves;
  unsigned max_weight;
  unsigned max_occurrences;
};

std::vector<Formula> formulas_up_to(const std::vector<Formula>& leaves, unsigned max_weight) {
  std::vector<std::vector<Formula>> by_weight{leaves};
  for (unsigned w = 1; w <= max_weight; ++w) {
    std::vector<Formula> level;
    for (Formula f : by_weight[w - 1]) level.push_back(Formula::box(f));
    for (unsigned l = 0; l < w; ++l)
      for (Formula a : by_weight[l])
        for (Formula b : by_weight[w - 1 - l]) {
          level.push_back(Formula::conj(a, b));
          level.push_back(Formula::disj(a, b));
          level.push_back(Formula::implies(a, b));
        }
    by_weight.push_back(std::move(level));
  }
  std::vector<Formula> all;
  for (const auto& level : by_weight) all.insert(all.end(), level.begin(), level.end());
  return all;  // ordered by weight
}

struct Agreement {
  std::uint64_t sequents = 0, derivable = 0, disagreements = 0;
  std::string first;
};

void agree(const Family& family, const char* name, Agreement& out) {
  const auto& c = calc(name);
  oracle::Prover brute(name);
  // Items are (side, formula) pairs; a sequent is a multiset of items.
  struct Item {
    Side side;
    Formula f;
    unsigned weight;
  };
  std::vector<Item> items;
  for (Formula f : formulas_up_to(family.leaves, family.max_weight))
    for (Side side : {Side::Left, Side::Right}) items.push_back({side, f, f.weight()});

  Sequent s;
  std::function<void(std::size_t, unsigned, unsigned)> extend = [&](std::size_t from, unsigned budget,
                                                                    unsigned slots) {
    ++out.sequents;
    const Verdict v = decide(s, c);
    if (brute.memo_size() > 4'000'000) brute.clear();
    const bool expected = brute.derivable(s);
    out.derivable += expected;
    if (v.derivable != expected || (v.derivable && v.tree->height > sequent_weight(s))) {
      if (!out.disagreements++) out.first = " first: " + render(s) + " in " + name;
    }
    if (slots == 0) return;
    for (std::size_t i = from; i < items.size() && items[i].weight <= budget; ++i) {
      s.side(items[i].side).push_back(items[i].f);
      extend(i, budget - items[i].weight, slots - 1);
      s.side(items[i].side).pop_back();
    }
  };
  extend(0, family.max_weight, family.max_occurrences);
}

Outcome oracle_agreement() {
  const Formula p = Formula::atom("p"), q = Formula::atom("q"), bot = Formula::bottom();
  const std::vector<Family> families{
      {"{p,q} weight<=5 occ<=2", {p, q}, 5, 2},
      {"{p,q} weight<=4 occ<=3", {p, q}, 4, 3},
      {"{p,q,bot} weight<=3 occ<=3", {p, q, bot}, 3, 3},
  };
  Agreement total;
  for (const char* name : {"G3E", "G3M", "G3K", "G3KD"})
    for (const auto& f : families) agree(f, name, total);
  return {total.disagreements == 0, n(total.sequents) + " sequents (" + n(total.derivable) +
                                        " derivable) in G3E/M/K/KD, classes " + families[0].label + "; " +
                                        families[1].label + "; " + families[2].label + ", " +
                                        n(total.disagreements) + " disagreements" + total.first};
}

}  // namespace

int main(int argc, char** argv) {
  const std::vector<std::pair<const char*, std::function<Outcome()>>> criteria{
      {"axiom coverage", axiom_coverage},
      {"Forrester fixtures", forrester},
      {"structural metatheorems", structural},
      {"height bound and termination", height_bound},
      {"consistency", consistency},
      {"interpolation", interpolation},
      {"Hallden completeness", hallden},
      {"oracle equivalence", oracle_agreement},
  };
  const int only = argc > 1 ? std::atoi(argv[1]) : 0;
  bool all = true;
  for (std::size_t i = 0; i < criteria.size(); ++i) {
    if (only && only != static_cast<int>(i + 1)) continue;
    const auto start = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = criteria[i].second();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
    all = all && o.pass;
    std::printf("%s %zu %s: %s [%.1fs]\n", o.pass ? "PASS" : "FAIL", i + 1, criteria[i].first, o.detail.c_str(),
                seconds);
    std::fflush(stdout);
  }
  return all ? 0 : 1;
}
