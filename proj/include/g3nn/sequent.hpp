#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "g3nn/formula.hpp"

namespace g3nn {

enum class Side : std::uint8_t { Left, Right };

/// Gamma => Delta over finite multisets. Positions are kept so that rule
/// instances and derivations can refer to occurrences, but equality ignores
/// order and respects multiplicities.
struct Sequent {
  std::vector<Formula> antecedent;
  std::vector<Formula> succedent;

  const std::vector<Formula>& side(Side s) const { return s == Side::Left ? antecedent : succedent; }
  std::vector<Formula>& side(Side s) { return s == Side::Left ? antecedent : succedent; }
  std::size_t size() const { return antecedent.size() + succedent.size(); }
  bool empty() const { return antecedent.empty() && succedent.empty(); }

  friend bool operator==(const Sequent& a, const Sequent& b);
};

/// Order-insensitive identity of a sequent; usable as a hash-map key.
struct SequentKey {
  std::vector<std::uint32_t> ids;  // sorted antecedent ids, 0, sorted succedent ids
  friend bool operator==(const SequentKey&, const SequentKey&) = default;
};

struct SequentKeyHash {
  std::size_t operator()(const SequentKey& key) const noexcept;
};

SequentKey canonical_key(const Sequent& s);

bool multiset_equal(const std::vector<Formula>& a, const std::vector<Formula>& b);

/// Parses `A, B => C, D`; either side may be empty.
Sequent parse_sequent(std::string_view text);
std::string render(const Sequent& s, Notation notation = Notation::Ascii);

unsigned sequent_weight(const Sequent& s);
unsigned modal_depth(const Sequent& s);

/// /\Gamma -> \/Delta, with empty conjunction top and empty disjunction bot.
/// Members are sorted structurally and folded right-associatively.
Formula characteristic_formula(const Sequent& s);

/// Atomic closure: some atom on both sides, or falsum on the left.
bool is_closed(const Sequent& s);

std::set<std::string> atoms(const Sequent& s);

/// <g1 => d1 || g2 => d2>
struct Partition {
  std::vector<Formula> g1, d1, g2, d2;

  Sequent first() const { return {g1, d1}; }
  Sequent second() const { return {g2, d2}; }
  /// The partitioned sequent.
  Sequent joined() const;
  /// Atoms shared by the two components.
  std::set<std::string> common_atoms() const;
};

/// Every way of splitting the occurrences of s; 2^n entries for n occurrences.
std::vector<Partition> partitions(const Sequent& s);

std::string render(const Partition& p, Notation notation = Notation::Ascii);

}  // namespace g3nn
