#pragma once

#include <compare>
#include <cstddef>
#include <cstdint>
#include <functional>
#include <set>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace g3nn {

/// Primitive connectives of the modal language. Negation, verum and diamond
/// are abbreviations and never appear as node kinds.
enum class Connective : std::uint8_t { Bottom, Atom, And, Or, Implies, Box };

namespace detail {
struct Node;
}

/// Immutable, hash-consed modal formula.
///
/// Structurally equal formulas share a single node, so equality and hashing
/// are pointer operations. Nodes live for the lifetime of the process and
/// handles may be copied freely across threads.
class Formula {
 public:
  /// Defaults to falsum.
  Formula();

  static Formula bottom();
  static Formula atom(std::string_view name);
  static Formula conj(Formula lhs, Formula rhs);
  static Formula disj(Formula lhs, Formula rhs);
  static Formula implies(Formula lhs, Formula rhs);
  static Formula box(Formula inner);

  // Abbreviations, expanded into primitive constructors.
  static Formula negation(Formula inner);  // A -> bot
  static Formula top();                    // bot -> bot
  static Formula diamond(Formula inner);   // ~[]~A

  Connective kind() const;
  bool is_atom() const { return kind() == Connective::Atom; }
  bool is_bottom() const { return kind() == Connective::Bottom; }
  bool is_box() const { return kind() == Connective::Box; }
  bool is_compound() const;  // one of and/or/implies

  /// Atom name; empty for every other kind.
  const std::string& name() const;
  /// Left operand of a binary connective, or the operand of a box.
  Formula left() const;
  Formula right() const;
  Formula inner() const { return left(); }

  std::uint32_t id() const;
  unsigned weight() const;
  unsigned modal_depth() const;
  /// Number of AST nodes (tree size, shared subtrees counted per occurrence).
  std::size_t size() const;

  friend bool operator==(Formula a, Formula b) { return a.node_ == b.node_; }

 private:
  explicit Formula(const detail::Node* node) : node_(node) {}
  const detail::Node* node_;
  friend struct detail::Node;
  friend class Interner;
};

/// Total order on formulas that depends only on structure (not on the order
/// in which nodes were interned).
std::strong_ordering structural_compare(Formula a, Formula b);

struct StructuralLess {
  bool operator()(Formula a, Formula b) const { return structural_compare(a, b) < 0; }
};

/// Orders by intern id. Cheap, deterministic within one process only.
struct IdLess {
  bool operator()(Formula a, Formula b) const { return a.id() < b.id(); }
};

unsigned weight(Formula f);
unsigned modal_depth(Formula f);

/// All subformulas of f, f included, without repetition (pre-order).
std::vector<Formula> subformulas(Formula f);

std::set<std::string> atoms(Formula f);

class ParseError : public std::runtime_error {
 public:
  ParseError(const std::string& message, std::size_t position);
  std::size_t position() const { return position_; }
  /// Message without the position prefix.
  const std::string& detail() const { return detail_; }

 private:
  std::size_t position_;
  std::string detail_;
};

/// Parses the concrete syntax: atoms `[a-z][a-zA-Z0-9_]*`, `false`/`bot`,
/// `true`/`top`, `~`, `[]`, `<>`, `&`, `|`, `->` (right associative) and
/// parentheses, plus the Unicode aliases. Abbreviations are expanded.
Formula parse_formula(std::string_view text);

enum class Notation { Ascii, Unicode };

/// Prints with minimal parentheses; re-sugars negation, verum and diamond.
/// `parse_formula(render(f)) == f` for the ASCII notation.
std::string render(Formula f, Notation notation = Notation::Ascii);

}  // namespace g3nn

template <>
struct std::hash<g3nn::Formula> {
  std::size_t operator()(g3nn::Formula f) const noexcept { return f.id(); }
};
