#pragma once

#include <bitset>
#include <cstdint>
#include <optional>
#include <span>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

#include "g3nn/sequent.hpp"

namespace g3nn {

/// Rule identifiers, in canonical order. Init and LBot are the zero-premiss
/// closures; LRE..LDStar are the modal and deontic rules.
enum class RuleId : std::uint8_t {
  Init,
  LBot,
  LAnd,
  RAnd,
  LOr,
  ROr,
  LImp,
  RImp,
  LRE,
  LRM,
  LRR,
  LRC,
  LRK,
  RN,
  LDBot,
  LDDiamE,
  LDDiamM,
  LDDiamC,
  LDStar,
};

inline constexpr std::size_t kRuleCount = 19;

/// ASCII rule name used in every output format, e.g. "LR-E", "L-D*".
std::string_view rule_name(RuleId rule);
std::optional<RuleId> rule_from_name(std::string_view name);
bool is_propositional(RuleId rule);
bool is_modal(RuleId rule);  // modal or deontic

class UnknownCalculus : public std::invalid_argument {
 public:
  explicit UnknownCalculus(const std::string& name);
};

/// One of the 22 named calculi. Propositional rules are always active.
class CalculusSpec {
 public:
  CalculusSpec(std::string name, std::string display_name, std::initializer_list<RuleId> modal_rules);

  const std::string& name() const { return name_; }
  /// Unicode name, e.g. "G3ED⊥".
  const std::string& display_name() const { return display_name_; }
  bool has(RuleId rule) const { return rules_.test(static_cast<std::size_t>(rule)); }
  /// False iff LR-C or L-D◇C is active.
  bool standard() const { return !has(RuleId::LRC) && !has(RuleId::LDDiamC); }
  std::vector<RuleId> modal_rules() const;

 private:
  std::string name_;
  std::string display_name_;
  std::bitset<kRuleCount> rules_;
};

/// Accepts the ASCII name (`G3EDbot`, `G3EDdiam`, ...) or the Unicode one.
const CalculusSpec& calculus_for(std::string_view name);
std::span<const CalculusSpec> all_calculi();

struct Occurrence {
  Side side;
  std::uint32_t index;
  friend bool operator==(const Occurrence&, const Occurrence&) = default;
};

/// A rule instance whose conclusion is the sequent it was enumerated from.
/// All premisses are needed (AND-branching).
struct RuleInstance {
  RuleId rule;
  std::vector<Occurrence> principal;
  std::vector<Sequent> premisses;
};

/// One instance per occurrence of a compound formula.
std::vector<RuleInstance> propositional_instances(const Sequent& s);

/// The instance the decision procedure commits to: leftmost compound formula,
/// antecedent before succedent.
std::optional<RuleInstance> first_propositional_instance(const Sequent& s);

/// Premisses of the propositional rule whose principal formula is `at`.
RuleInstance propositional_instance_at(const Sequent& s, Occurrence at);

struct EnumerationOptions {
  /// Drop L-D◇E instances with a single principal formula; they can never
  /// close, since A => and => A are not both derivable.
  bool prune_single_diamond_e = false;
};

/// Complete, duplicate-free, canonically ordered modal/deontic instances of
/// the calculus with conclusion s. Rules come in RuleId order; within a rule,
/// antecedent selections (length-lexicographic over occurrence positions)
/// come before succedent positions. Identical boxed formulas at different
/// positions yield a single instance.
std::vector<RuleInstance> modal_instances(const Sequent& s, const CalculusSpec& calculus,
                                          const EnumerationOptions& options = {});

}  // namespace g3nn
