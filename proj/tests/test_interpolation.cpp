#include <doctest.h>

#include "g3nn/interpolation.hpp"
#include "g3nn/metaproperties.hpp"

using namespace g3nn;

namespace {

const CalculusSpec& calc(const char* name) { return calculus_for(name); }
Formula f(const char* text) { return parse_formula(text); }

DerivationTree derivation(const char* sequent, const char* calculus) {
  auto v = decide(parse_sequent(sequent), calc(calculus));
  REQUIRE(v.derivable);
  return *v.tree;
}

Partition split(std::vector<const char*> g1, std::vector<const char*> d1, std::vector<const char*> g2,
                std::vector<const char*> d2) {
  auto conv = [](const std::vector<const char*>& xs) {
    std::vector<Formula> out;
    for (auto* x : xs) out.push_back(parse_formula(x));
    return out;
  };
  return {conv(g1), conv(d1), conv(g2), conv(d2)};
}

bool shared_only(Formula i, const Partition& p) {
  const auto shared = p.common_atoms();
  for (const auto& a : atoms(i))
    if (!shared.contains(a)) return false;
  return true;
}

}  // namespace

TEST_SUITE("interpolation") {

TEST_CASE("interpolants for []top -> []top and []bot -> []bot in G3E") {
  const auto top = craig(f("[]top"), f("[]top"), calc("G3E"));
  REQUIRE(top);
  CHECK(top->interpolant == f("[]top"));
  const auto bot = craig(f("[]bot"), f("[]bot"), calc("G3E"));
  REQUIRE(bot);
  CHECK(bot->interpolant == f("[]bot"));

  // The premiss partitions of the figure.
  CHECK(maehara(derivation("top => top", "G3E"), split({"top"}, {}, {}, {"top"}), calc("G3E")) == f("top"));
  CHECK(maehara(derivation("bot => bot", "G3E"), split({"bot"}, {}, {}, {"bot"}), calc("G3E")) == f("bot"));
}

TEST_CASE("initial sequent cases") {
  const auto& e = calc("G3E");
  const auto t = derivation("p => p", "G3E");
  CHECK(maehara(t, split({"p"}, {"p"}, {}, {}), e) == f("bot"));
  CHECK(maehara(t, split({}, {}, {"p"}, {"p"}), e) == f("top"));
  CHECK(maehara(t, split({"p"}, {}, {}, {"p"}), e) == f("p"));
  CHECK(maehara(t, split({}, {"p"}, {"p"}, {}), e) == f("~p"));
  for (const auto& p : partitions(t.sequent)) CHECK(verify_interpolant(maehara(t, p, e), p, e));
}

TEST_CASE("falsum cases") {
  const auto& e = calc("G3E");
  const auto t = derivation("bot =>", "G3E");
  CHECK(maehara(t, split({"bot"}, {}, {}, {}), e) == f("bot"));
  CHECK(maehara(t, split({}, {}, {"bot"}, {}), e) == f("top"));
  CHECK(verify_interpolant(f("top"), split({}, {}, {"bot"}, {}), e));
}

TEST_CASE("verify_interpolant") {
  const auto& e = calc("G3E");
  CHECK(verify_interpolant(f("p"), split({"p"}, {}, {}, {"p"}), e));
  CHECK_FALSE(verify_interpolant(f("q"), split({"p"}, {}, {}, {"p"}), e));
  CHECK_FALSE(verify_interpolant(f("bot"), split({"p"}, {}, {}, {"p"}), e));
  CHECK_FALSE(verify_interpolant(f("p & q"), split({"p & q"}, {}, {}, {"p"}), e));
}

TEST_CASE("Craig examples") {
  const auto& e = calc("G3E");
  const auto r = craig(f("p & q"), f("q | r"), e);
  REQUIRE(r);
  CHECK(atoms(r->interpolant) == std::set<std::string>{"q"});
  CHECK(check_derivation(r->left_derivation, e));
  CHECK(check_derivation(r->right_derivation, e));
  CHECK(r->left_derivation.sequent == parse_sequent("p & q => " + render(r->interpolant)));

  const auto boxed = craig(f("[](p & q)"), f("[](q & p)"), e);
  REQUIRE(boxed);
  CHECK(boxed->interpolant.is_box());
  CHECK(verify_interpolant(boxed->interpolant, split({"[](p & q)"}, {}, {}, {"[](q & p)"}), e));

  CHECK_FALSE(craig(f("p"), f("q"), e).has_value());
}

TEST_CASE("excluded middle with everything on one side") {
  const auto& e = calc("G3E");
  const auto t = derivation("=> p | ~p", "G3E");
  const auto p = split({}, {"p | ~p"}, {}, {});
  const Formula i = maehara(t, p, e);
  CHECK(atoms(i).empty());
  CHECK(verify_interpolant(i, p, e));
  CHECK(interpolate(t, p, e).interpolant == i);
}

TEST_CASE("modal cases: every partition of small derivable sequents") {
  struct Case {
    const char* calculus;
    const char* sequent;
  };
  for (auto [name, text] : std::vector<Case>{
           {"G3E", "[](p & q), r => [](q & p), s"},
           {"G3M", "[](p & q) => []p"},
           {"G3R", "[]p, []q => [](p & q)"},
           {"G3R", "[]p, [](p -> q) => []q"},
           {"G3K", "[]p, [](p -> q) => []q"},
           {"G3K", "r => []top"},
           {"G3EN", "=> []top, p"},
           {"G3EDbot", "[]bot => q"},
           {"G3ED", "[]p, []~p =>"},
           {"G3EDdiam", "[](p & q), [](~q | ~p) =>"},
           {"G3MD", "[](p & r), []~p =>"},
           {"G3MND", "[]~p, [](p & q) => r"},
           {"G3RD", "[]p, []q, [](~p | ~q) =>"},
           {"G3KD", "[]p, []q, [](~p | ~q) =>"},
           {"G3KD", "[]~p, []p, q => q & p, r"},
       }) {
    const auto& c = calc(name);
    const auto t = derivation(text, name);
    for (const auto& p : partitions(t.sequent)) {
      CAPTURE(name);
      CAPTURE(render(p));
      const auto r = interpolate(t, p, c);
      CHECK(shared_only(r.interpolant, p));
      CHECK(verify_interpolant(r.interpolant, p, c));
    }
  }
}

TEST_CASE("non-standard calculi are refused") {
  for (const char* name : {"G3C", "G3CN", "G3CDdiam", "G3CD", "G3CND"}) {
    CAPTURE(name);
    CHECK_THROWS_AS(craig(f("p"), f("p"), calc(name)), UnsupportedCalculus);
    CHECK_THROWS_AS(interpolate(derivation("p => p", "G3E"), split({"p"}, {}, {}, {"p"}), calc(name)),
                    UnsupportedCalculus);
  }
  try {
    craig(f("p"), f("p"), calc("G3C"));
  } catch (const UnsupportedCalculus& e) {
    CHECK(std::string(e.what()).starts_with("interpolation unsupported for LR-C calculi"));
  }
}

TEST_CASE("invalid input derivations") {
  auto t = derivation("[]p => []p", "G3E");
  CHECK_THROWS_AS(interpolate(t, split({"[]p"}, {}, {}, {"[]p"}), calc("G3MD")), InvalidDerivation);
  auto md = derivation("[](p & q) => []p", "G3M");
  CHECK_THROWS_AS(interpolate(md, split({"[](p & q)"}, {}, {}, {"[]p"}), calc("G3E")), InvalidDerivation);
  CHECK_THROWS_AS(interpolate(t, split({"[]p"}, {}, {}, {"[]q"}), calc("G3E")), std::invalid_argument);
}

TEST_CASE("constant folding") {
  const Formula top = Formula::top(), bot = Formula::bottom(), p = f("p");
  CHECK(fold_or(top, p) == top);
  CHECK(fold_or(bot, p) == p);
  CHECK(fold_and(bot, p) == bot);
  CHECK(fold_and(top, p) == p);
  CHECK(fold_not(top) == bot);
  CHECK(fold_not(bot) == top);
  CHECK(fold_not(p) == f("~p"));
  CHECK(fold_diamond(p) == f("<>p"));
  CHECK(fold_diamond(top) == f("~[]bot"));
}

TEST_CASE("random Craig interpolants verify") {
  for (const auto& c : all_calculi()) {
    if (!c.standard()) continue;
    Generator gen(GenConfig{6, 3, {"p", "q", "r"}, 41});
    int found = 0;
    for (int n = 0; n < 3000 && found < 150; ++n) {
      const Formula a = gen.chance(50) ? gen.boxed_formula(6, 3) : gen.formula();
      const Formula b = gen.chance(50) ? gen.boxed_formula(6, 3) : gen.formula();
      CAPTURE(c.name());
      CAPTURE(render(a));
      CAPTURE(render(b));
      const auto r = craig(a, b, c);
      if (!r) continue;
      ++found;
      const Partition p{{a}, {}, {}, {b}};
      CHECK(shared_only(r->interpolant, p));
      CHECK(verify_interpolant(r->interpolant, p, c));
    }
    CHECK(found == 150);
  }
}

TEST_CASE("Hallden witness in G3E") {
  const auto& e = calc("G3E");
  CHECK(derivable(parse_sequent("[]top => []top"), e));
  CHECK_FALSE(derivable(parse_sequent("[]top =>"), e));
  CHECK_FALSE(derivable(parse_sequent("=> []top"), e));
}

}
