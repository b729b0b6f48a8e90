#include "g3nn/sequent.hpp"

#include <algorithm>
#include <iterator>
#include <stdexcept>

namespace g3nn {

namespace {

std::vector<std::uint32_t> sorted_ids(const std::vector<Formula>& fs) {
  std::vector<std::uint32_t> ids;
  ids.reserve(fs.size());
  for (Formula f : fs) ids.push_back(f.id());
  std::sort(ids.begin(), ids.end());
  return ids;
}

std::string trim(std::string_view text) {
  const auto first = text.find_first_not_of(" \t\r\n");
  if (first == std::string_view::npos) return {};
  const auto last = text.find_last_not_of(" \t\r\n");
  return std::string(text.substr(first, last - first + 1));
}

// Splits on top-level commas; offset locates errors within the whole sequent.
std::vector<Formula> parse_side(std::string_view text, std::size_t offset) {
  std::vector<Formula> out;
  if (trim(text).empty()) return out;
  int depth = 0;
  std::size_t start = 0;
  for (std::size_t i = 0; i <= text.size(); ++i) {
    if (i < text.size()) {
      if (text[i] == '(') ++depth;
      if (text[i] == ')') --depth;
      if (text[i] != ',' || depth != 0) continue;
    }
    const auto piece = text.substr(start, i - start);
    if (trim(piece).empty()) throw ParseError("empty formula in sequent", offset + start);
    try {
      out.push_back(parse_formula(piece));
    } catch (const ParseError& e) {
      throw ParseError(e.detail(), offset + start + e.position());
    }
    start = i + 1;
  }
  return out;
}

void append_side(const std::vector<Formula>& fs, Notation notation, std::string& out) {
  for (std::size_t i = 0; i < fs.size(); ++i) {
    if (i) out += ", ";
    out += render(fs[i], notation);
  }
}

}  // namespace

bool multiset_equal(const std::vector<Formula>& a, const std::vector<Formula>& b) {
  if (a.size() != b.size()) return false;
  return sorted_ids(a) == sorted_ids(b);
}

bool operator==(const Sequent& a, const Sequent& b) {
  return multiset_equal(a.antecedent, b.antecedent) && multiset_equal(a.succedent, b.succedent);
}

std::size_t SequentKeyHash::operator()(const SequentKey& key) const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (auto id : key.ids) {
    h ^= id;
    h *= 1099511628211ull;
  }
  return h;
}

SequentKey canonical_key(const Sequent& s) {
  SequentKey key;
  key.ids = sorted_ids(s.antecedent);
  key.ids.push_back(0);
  auto right = sorted_ids(s.succedent);
  key.ids.insert(key.ids.end(), right.begin(), right.end());
  return key;
}

Sequent parse_sequent(std::string_view text) {
  std::size_t arrow = text.find("=>");
  std::size_t arrow_len = 2;
  if (arrow == std::string_view::npos) {
    arrow = text.find("⇒");
    arrow_len = std::string_view("⇒").size();
  }
  if (arrow == std::string_view::npos) throw ParseError("expected '=>'", text.size());
  if (text.find("=>", arrow + arrow_len) != std::string_view::npos)
    throw ParseError("more than one '=>'", text.find("=>", arrow + arrow_len));
  Sequent s;
  s.antecedent = parse_side(text.substr(0, arrow), 0);
  s.succedent = parse_side(text.substr(arrow + arrow_len), arrow + arrow_len);
  return s;
}

std::string render(const Sequent& s, Notation notation) {
  std::string out;
  append_side(s.antecedent, notation, out);
  if (!s.antecedent.empty()) out += ' ';
  out += notation == Notation::Ascii ? "=>" : "⇒";
  if (!s.succedent.empty()) out += ' ';
  append_side(s.succedent, notation, out);
  return out;
}

unsigned sequent_weight(const Sequent& s) {
  unsigned w = 0;
  for (Formula f : s.antecedent) w += f.weight();
  for (Formula f : s.succedent) w += f.weight();
  return w;
}

unsigned modal_depth(const Sequent& s) {
  unsigned d = 0;
  for (Formula f : s.antecedent) d = std::max(d, f.modal_depth());
  for (Formula f : s.succedent) d = std::max(d, f.modal_depth());
  return d;
}

namespace {

Formula fold(std::vector<Formula> fs, Formula empty, Formula (*join)(Formula, Formula)) {
  if (fs.empty()) return empty;
  std::sort(fs.begin(), fs.end(), StructuralLess{});
  Formula acc = fs.back();
  for (std::size_t i = fs.size() - 1; i-- > 0;) acc = join(fs[i], acc);
  return acc;
}

}  // namespace

Formula characteristic_formula(const Sequent& s) {
  return Formula::implies(fold(s.antecedent, Formula::top(), &Formula::conj),
                          fold(s.succedent, Formula::bottom(), &Formula::disj));
}

bool is_closed(const Sequent& s) {
  for (Formula f : s.antecedent) {
    if (f.is_bottom()) return true;
    if (f.is_atom() && std::find(s.succedent.begin(), s.succedent.end(), f) != s.succedent.end())
      return true;
  }
  return false;
}

std::set<std::string> atoms(const Sequent& s) {
  std::set<std::string> out;
  for (Formula f : s.antecedent) out.merge(atoms(f));
  for (Formula f : s.succedent) out.merge(atoms(f));
  return out;
}

Sequent Partition::joined() const {
  Sequent s{g1, d1};
  s.antecedent.insert(s.antecedent.end(), g2.begin(), g2.end());
  s.succedent.insert(s.succedent.end(), d2.begin(), d2.end());
  return s;
}

std::set<std::string> Partition::common_atoms() const {
  const auto a = atoms(first());
  const auto b = atoms(second());
  std::set<std::string> out;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::inserter(out, out.end()));
  return out;
}

std::vector<Partition> partitions(const Sequent& s) {
  const std::size_t n = s.size();
  if (n >= 24) throw std::length_error("too many occurrences to enumerate partitions");
  std::vector<Partition> out;
  out.reserve(std::size_t{1} << n);
  for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
    Partition p;
    for (std::size_t i = 0; i < s.antecedent.size(); ++i)
      ((mask >> i) & 1u ? p.g2 : p.g1).push_back(s.antecedent[i]);
    for (std::size_t j = 0; j < s.succedent.size(); ++j)
      ((mask >> (s.antecedent.size() + j)) & 1u ? p.d2 : p.d1).push_back(s.succedent[j]);
    out.push_back(std::move(p));
  }
  return out;
}

std::string render(const Partition& p, Notation notation) {
  std::string out = "<";
  out += render(p.first(), notation);
  out += " || ";
  out += render(p.second(), notation);
  out += ">";
  return out;
}

}  // namespace g3nn
