#pragma once

#include <cstdint>
#include <random>
#include <string>
#include <vector>

#include "g3nn/prover.hpp"

namespace g3nn {

struct GenConfig {
  unsigned max_weight = 8;
  unsigned max_modal_depth = 3;
  std::vector<std::string> atom_pool{"p", "q", "r"};
  std::uint64_t seed = 1;
};

/// Deterministic random formulas and sequents. Draws are reduced by modulo
/// from mt19937_64 so a seed gives the same stream on every standard library.
class Generator {
 public:
  explicit Generator(GenConfig cfg);

  const GenConfig& config() const { return cfg_; }

  /// A formula within the configured bounds.
  Formula formula() { return formula(cfg_.max_weight, cfg_.max_modal_depth); }
  Formula formula(unsigned max_weight, unsigned max_depth);
  /// Same, but leaning towards boxes at the top.
  Formula boxed_formula(unsigned max_weight, unsigned max_depth);

  /// A sequent of at most `max_weight` total weight and at most four
  /// formulas; every other draw is boxed-heavy.
  Sequent sequent() { return sequent(cfg_.max_weight); }
  Sequent sequent(unsigned max_weight);

  std::uint64_t below(std::uint64_t n) { return rng_() % n; }
  bool chance(unsigned percent) { return below(100) < percent; }

 private:
  Formula exact(unsigned weight, unsigned max_depth, unsigned box_percent);
  Formula leaf();

  GenConfig cfg_;
  std::mt19937_64 rng_;
  std::vector<Formula> atoms_;
};

/// One formula drawn from a fresh generator seeded with cfg.seed.
Formula gen_formula(const GenConfig& cfg);

// The checks assume their preconditions and throw std::invalid_argument when
// they do not hold. Overloads taking a MinHeightSearch share its cache.

/// Adding `a` on either side does not raise the minimal height.
bool check_weakening(const Sequent& s, Formula a, MinHeightSearch& search);
bool check_weakening(const Sequent& s, Formula a, const CalculusSpec& calculus);

/// Removing one copy of any duplicated formula does not raise the minimal
/// height.
bool check_contraction(const Sequent& s, MinHeightSearch& search);
bool check_contraction(const Sequent& s, const CalculusSpec& calculus);

/// left = Gamma => Delta, d and right = d, Pi => Sigma, both derivable;
/// true iff Gamma, Pi => Delta, Sigma is derivable.
bool check_cut(const Sequent& left, const Sequent& right, Formula d, const CalculusSpec& calculus);

/// Every premiss of every propositional instance with conclusion s is
/// derivable at no greater minimal height.
bool check_invertibility(const Sequent& s, MinHeightSearch& search);
bool check_invertibility(const Sequent& s, const CalculusSpec& calculus);

struct PropertyReport {
  std::string property;
  std::uint64_t samples = 0;   // cases meeting the precondition
  std::uint64_t attempts = 0;  // cases drawn
  std::uint64_t counterexamples = 0;
  std::uint64_t modal_samples = 0;  // samples whose derivation found by decide uses a modal rule
  std::vector<std::string> examples;  // first few failures, concrete syntax
};

struct SuiteReport {
  std::string calculus;
  std::vector<PropertyReport> properties;
  bool passed(std::uint64_t required_samples) const;
};

/// Draws cases until `samples` of each property meet their precondition (or
/// a generous attempt budget runs out) and checks weakening, contraction,
/// cut and invertibility. Also counts disagreements between decide and the
/// minimal-height search as counterexamples of "agreement".
SuiteReport run_suite(const CalculusSpec& calculus, const GenConfig& cfg, std::uint64_t samples);

struct AxiomFixture {
  std::string name;  // RE, M, C, N, Dbot, Ddiam
  Sequent sequent;
};

/// The defining axioms and rules of the logic of `calculus`, instantiated
/// with the atoms p and q.
std::vector<AxiomFixture> axiom_fixtures(const CalculusSpec& calculus);

}  // namespace g3nn
