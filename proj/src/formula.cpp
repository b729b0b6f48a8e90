#include "g3nn/formula.hpp"

#include <algorithm>
#include <deque>
#include <mutex>
#include <unordered_map>
#include <unordered_set>

namespace g3nn {

namespace detail {

struct Node {
  Connective kind;
  const Node* lhs;
  const Node* rhs;
  std::string name;
  std::uint32_t id;
  unsigned weight;
  unsigned depth;
  std::size_t size;
};

}  // namespace detail

using detail::Node;

class Interner {
 public:
  static Interner& instance() {
    static Interner interner;
    return interner;
  }

  const Node* bottom() const { return bottom_; }

  const Node* atom(std::string_view name) {
    std::lock_guard lock(mutex_);
    auto it = atoms_.find(std::string(name));
    if (it != atoms_.end()) return it->second;
    const Node* n = make(Connective::Atom, nullptr, nullptr, std::string(name));
    atoms_.emplace(n->name, n);
    return n;
  }

  const Node* compound(Connective kind, const Node* lhs, const Node* rhs) {
    const std::uint64_t key = (std::uint64_t{static_cast<std::uint8_t>(kind)} << 58) |
                              (std::uint64_t{lhs->id} << 29) | (rhs ? rhs->id : 0u);
    std::lock_guard lock(mutex_);
    auto it = compounds_.find(key);
    if (it != compounds_.end()) return it->second;
    const Node* n = make(kind, lhs, rhs, {});
    compounds_.emplace(key, n);
    return n;
  }

  static Formula wrap(const Node* n) { return Formula(n); }

 private:
  Interner() { bottom_ = make(Connective::Bottom, nullptr, nullptr, {}); }

  const Node* make(Connective kind, const Node* lhs, const Node* rhs, std::string name) {
    unsigned w = 0;
    unsigned d = 0;
    std::size_t size = 1;
    switch (kind) {
      case Connective::Bottom:
      case Connective::Atom:
        break;
      case Connective::Box:
        w = lhs->weight + 1;
        d = lhs->depth + 1;
        size += lhs->size;
        break;
      default:
        w = lhs->weight + rhs->weight + 1;
        d = std::max(lhs->depth, rhs->depth);
        size += lhs->size + rhs->size;
        break;
    }
    const auto id = static_cast<std::uint32_t>(nodes_.size() + 1);
    if (id >= (1u << 29)) throw std::length_error("formula interner exhausted");
    nodes_.push_back(Node{kind, lhs, rhs, std::move(name), id, w, d, size});
    return &nodes_.back();
  }

  std::mutex mutex_;
  std::deque<Node> nodes_;
  std::unordered_map<std::string, const Node*> atoms_;
  std::unordered_map<std::uint64_t, const Node*> compounds_;
  const Node* bottom_ = nullptr;
};

Formula::Formula() : node_(Interner::instance().bottom()) {}

Formula Formula::bottom() { return Formula(Interner::instance().bottom()); }

Formula Formula::atom(std::string_view name) { return Formula(Interner::instance().atom(name)); }

Formula Formula::conj(Formula lhs, Formula rhs) {
  return Formula(Interner::instance().compound(Connective::And, lhs.node_, rhs.node_));
}

Formula Formula::disj(Formula lhs, Formula rhs) {
  return Formula(Interner::instance().compound(Connective::Or, lhs.node_, rhs.node_));
}

Formula Formula::implies(Formula lhs, Formula rhs) {
  return Formula(Interner::instance().compound(Connective::Implies, lhs.node_, rhs.node_));
}

Formula Formula::box(Formula inner) {
  return Formula(Interner::instance().compound(Connective::Box, inner.node_, nullptr));
}

Formula Formula::negation(Formula inner) { return implies(inner, bottom()); }

Formula Formula::top() { return implies(bottom(), bottom()); }

Formula Formula::diamond(Formula inner) { return negation(box(negation(inner))); }

Connective Formula::kind() const { return node_->kind; }

bool Formula::is_compound() const {
  const auto k = node_->kind;
  return k == Connective::And || k == Connective::Or || k == Connective::Implies;
}

const std::string& Formula::name() const { return node_->name; }

Formula Formula::left() const { return Formula(node_->lhs); }

Formula Formula::right() const { return Formula(node_->rhs); }

std::uint32_t Formula::id() const { return node_->id; }

unsigned Formula::weight() const { return node_->weight; }

unsigned Formula::modal_depth() const { return node_->depth; }

std::size_t Formula::size() const { return node_->size; }

std::strong_ordering structural_compare(Formula a, Formula b) {
  if (a == b) return std::strong_ordering::equal;
  if (a.kind() != b.kind()) return a.kind() <=> b.kind();
  switch (a.kind()) {
    case Connective::Bottom:
      return std::strong_ordering::equal;
    case Connective::Atom:
      return a.name() <=> b.name();
    case Connective::Box:
      return structural_compare(a.inner(), b.inner());
    default:
      if (auto c = structural_compare(a.left(), b.left()); c != 0) return c;
      return structural_compare(a.right(), b.right());
  }
}

unsigned weight(Formula f) { return f.weight(); }

unsigned modal_depth(Formula f) { return f.modal_depth(); }

std::vector<Formula> subformulas(Formula f) {
  std::vector<Formula> out;
  std::unordered_set<Formula> seen;
  std::vector<Formula> stack{f};
  while (!stack.empty()) {
    Formula g = stack.back();
    stack.pop_back();
    if (!seen.insert(g).second) continue;
    out.push_back(g);
    switch (g.kind()) {
      case Connective::Bottom:
      case Connective::Atom:
        break;
      case Connective::Box:
        stack.push_back(g.inner());
        break;
      default:
        stack.push_back(g.right());
        stack.push_back(g.left());
        break;
    }
  }
  return out;
}

std::set<std::string> atoms(Formula f) {
  std::set<std::string> out;
  for (Formula g : subformulas(f))
    if (g.is_atom()) out.insert(g.name());
  return out;
}

ParseError::ParseError(const std::string& message, std::size_t position)
    : std::runtime_error("parse error at position " + std::to_string(position) + ": " + message),
      position_(position),
      detail_(message) {}

namespace {

enum class Tok { Atom, Bottom, Top, Not, Box, Diamond, And, Or, Implies, LParen, RParen, End };

struct Token {
  Tok kind;
  std::string text;
  std::size_t pos;
};

bool starts_with(std::string_view text, std::size_t pos, std::string_view prefix) {
  return text.substr(pos, prefix.size()) == prefix;
}

std::vector<Token> tokenize(std::string_view text) {
  struct Alias {
    std::string_view spelling;
    Tok kind;
  };
  static constexpr Alias aliases[] = {
      {"->", Tok::Implies}, {"[]", Tok::Box},     {"<>", Tok::Diamond}, {"~", Tok::Not},
      {"&", Tok::And},      {"|", Tok::Or},       {"(", Tok::LParen},   {")", Tok::RParen},
      {"⊥", Tok::Bottom},   {"⊤", Tok::Top},      {"¬", Tok::Not},      {"□", Tok::Box},
      {"◇", Tok::Diamond},  {"∧", Tok::And},      {"∨", Tok::Or},       {"⊃", Tok::Implies},
      {"→", Tok::Implies},
  };
  std::vector<Token> out;
  std::size_t i = 0;
  while (i < text.size()) {
    const char c = text[i];
    if (c == ' ' || c == '\t' || c == '\n' || c == '\r') {
      ++i;
      continue;
    }
    if (c >= 'a' && c <= 'z') {
      std::size_t j = i + 1;
      while (j < text.size() && ((text[j] >= 'a' && text[j] <= 'z') ||
                                 (text[j] >= 'A' && text[j] <= 'Z') ||
                                 (text[j] >= '0' && text[j] <= '9') || text[j] == '_'))
        ++j;
      std::string word(text.substr(i, j - i));
      Tok kind = Tok::Atom;
      if (word == "false" || word == "bot") kind = Tok::Bottom;
      if (word == "true" || word == "top") kind = Tok::Top;
      out.push_back({kind, std::move(word), i});
      i = j;
      continue;
    }
    bool matched = false;
    for (const auto& alias : aliases) {
      if (starts_with(text, i, alias.spelling)) {
        out.push_back({alias.kind, std::string(alias.spelling), i});
        i += alias.spelling.size();
        matched = true;
        break;
      }
    }
    if (!matched) throw ParseError("unexpected character '" + std::string(1, c) + "'", i);
  }
  out.push_back({Tok::End, {}, text.size()});
  return out;
}

// implication := disjunction ('->' implication)?
// disjunction := conjunction ('|' conjunction)*
// conjunction := unary ('&' unary)*
// unary       := ('~' | '[]' | '<>') unary | primary
class Parser {
 public:
  explicit Parser(std::vector<Token> tokens) : tokens_(std::move(tokens)) {}

  Formula parse() {
    Formula f = implication();
    if (peek().kind != Tok::End) throw ParseError("unexpected '" + peek().text + "'", peek().pos);
    return f;
  }

 private:
  const Token& peek() const { return tokens_[pos_]; }
  const Token& next() { return tokens_[pos_++]; }

  Formula implication() {
    Formula lhs = disjunction();
    if (peek().kind == Tok::Implies) {
      next();
      return Formula::implies(lhs, implication());
    }
    return lhs;
  }

  Formula disjunction() {
    Formula lhs = conjunction();
    while (peek().kind == Tok::Or) {
      next();
      lhs = Formula::disj(lhs, conjunction());
    }
    return lhs;
  }

  Formula conjunction() {
    Formula lhs = unary();
    while (peek().kind == Tok::And) {
      next();
      lhs = Formula::conj(lhs, unary());
    }
    return lhs;
  }

  Formula unary() {
    switch (peek().kind) {
      case Tok::Not:
        next();
        return Formula::negation(unary());
      case Tok::Box:
        next();
        return Formula::box(unary());
      case Tok::Diamond:
        next();
        return Formula::diamond(unary());
      default:
        return primary();
    }
  }

  Formula primary() {
    const Token& t = next();
    switch (t.kind) {
      case Tok::Atom:
        return Formula::atom(t.text);
      case Tok::Bottom:
        return Formula::bottom();
      case Tok::Top:
        return Formula::top();
      case Tok::LParen: {
        Formula f = implication();
        if (peek().kind != Tok::RParen) throw ParseError("expected ')'", peek().pos);
        next();
        return f;
      }
      case Tok::End:
        throw ParseError("unexpected end of input", t.pos);
      default:
        throw ParseError("unexpected '" + t.text + "'", t.pos);
    }
  }

  std::vector<Token> tokens_;
  std::size_t pos_ = 0;
};

struct Symbols {
  std::string_view bottom, top, neg, box, diamond, conj, disj, implies;
};

constexpr Symbols kAscii{"bot", "top", "~", "[]", "<>", " & ", " | ", " -> "};
constexpr Symbols kUnicode{"⊥", "⊤", "¬", "□", "◇", " ∧ ", " ∨ ", " ⊃ "};

// Binding strength: implication 1, disjunction 2, conjunction 3, prefix 4.
int precedence(Formula f) {
  switch (f.kind()) {
    case Connective::And:
      return 3;
    case Connective::Or:
      return 2;
    case Connective::Implies:
      if (f.right().is_bottom()) return 4;  // printed as negation or verum
      return 1;
    default:
      return 4;
  }
}

void print(Formula f, const Symbols& sym, std::string& out);

void print_operand(Formula f, int min_prec, const Symbols& sym, std::string& out) {
  if (precedence(f) < min_prec) {
    out += '(';
    print(f, sym, out);
    out += ')';
  } else {
    print(f, sym, out);
  }
}

void print(Formula f, const Symbols& sym, std::string& out) {
  switch (f.kind()) {
    case Connective::Bottom:
      out += sym.bottom;
      return;
    case Connective::Atom:
      out += f.name();
      return;
    case Connective::Box:
      out += sym.box;
      print_operand(f.inner(), 4, sym, out);
      return;
    case Connective::And:
      print_operand(f.left(), 3, sym, out);
      out += sym.conj;
      print_operand(f.right(), 4, sym, out);
      return;
    case Connective::Or:
      print_operand(f.left(), 2, sym, out);
      out += sym.disj;
      print_operand(f.right(), 3, sym, out);
      return;
    case Connective::Implies:
      if (f.right().is_bottom()) {
        Formula body = f.left();
        if (body.is_bottom()) {
          out += sym.top;
        } else if (body.is_box() && body.inner().kind() == Connective::Implies &&
                   body.inner().right().is_bottom()) {
          out += sym.diamond;
          print_operand(body.inner().left(), 4, sym, out);
        } else {
          out += sym.neg;
          print_operand(body, 4, sym, out);
        }
        return;
      }
      print_operand(f.left(), 2, sym, out);
      out += sym.implies;
      print_operand(f.right(), 1, sym, out);
      return;
  }
}

}  // namespace

Formula parse_formula(std::string_view text) { return Parser(tokenize(text)).parse(); }

std::string render(Formula f, Notation notation) {
  std::string out;
  print(f, notation == Notation::Ascii ? kAscii : kUnicode, out);
  return out;
}

}  // namespace g3nn
