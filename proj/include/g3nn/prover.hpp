#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <unordered_map>
#include <vector>

#include "g3nn/calculus.hpp"

namespace g3nn {

struct DerivationTree {
  Sequent sequent;
  RuleId rule = RuleId::Init;  // Init or LBot at leaves
  std::vector<Occurrence> principal;
  std::vector<DerivationTree> children;
  unsigned height = 0;  // 0 for a leaf
};

/// Number of nodes of the tree.
std::size_t tree_size(const DerivationTree& t);

struct SearchStats {
  std::uint64_t nodes = 0;        // sequents visited
  unsigned max_depth = 0;         // deepest visited sequent, root = 0
  std::uint64_t or_branches = 0;  // modal instances tried
};

struct Verdict {
  bool derivable = false;
  std::optional<DerivationTree> tree;  // set iff derivable
  SearchStats stats;
};

struct DecideOptions {
  /// Remember sequents already shown underivable. Only affects speed.
  bool memoize_failures = true;
  EnumerationOptions enumeration;
};

/// Depth-first proof search. Closed sequents become leaves; otherwise the
/// first propositional instance is applied without alternatives, and only
/// modal/deontic instances are branched over. Returns the first derivation
/// found in canonical order.
Verdict decide(const Sequent& s, const CalculusSpec& calculus, const DecideOptions& options = {});

bool derivable(const Sequent& s, const CalculusSpec& calculus);

/// Minimum height over all derivations, trying every rule at every node.
/// Results are cached per instance, so one search object can answer many
/// related queries cheaply. Not thread safe.
class MinHeightSearch {
 public:
  explicit MinHeightSearch(const CalculusSpec& calculus) : calculus_(&calculus) {}

  std::optional<unsigned> operator()(const Sequent& s);
  const CalculusSpec& calculus() const { return *calculus_; }
  std::size_t cache_size() const { return cache_.size(); }

 private:
  static constexpr int kUnderivable = -1;
  int search(const Sequent& s);

  const CalculusSpec* calculus_;
  std::unordered_map<SequentKey, int, SequentKeyHash> cache_;
};

std::optional<unsigned> min_height(const Sequent& s, const CalculusSpec& calculus);

struct CheckResult {
  bool ok = true;
  std::string message;  // describes the first invalid node
  explicit operator bool() const { return ok; }
};

/// Independent re-verification: leaves must be closed with a correct
/// principal, every inner node must coincide with an instance of one of the
/// calculus' rules, and recorded heights must be consistent.
CheckResult check_derivation(const DerivationTree& t, const CalculusSpec& calculus);

}  // namespace g3nn
