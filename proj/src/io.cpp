#include "g3nn/io.hpp"

#include <array>
#include <utility>

namespace g3nn {

using nlohmann::json;

OutputFormat format_from_name(const std::string& name) {
  if (name == "text") return OutputFormat::Text;
  if (name == "json") return OutputFormat::Json;
  if (name == "latex") return OutputFormat::Latex;
  throw std::invalid_argument("unknown format '" + name + "' (expected text, json or latex)");
}

json tree_to_json(const DerivationTree& t) {
  json principal = json::array();
  for (auto o : t.principal) principal.push_back({{"side", o.side == Side::Left ? "left" : "right"}, {"index", o.index}});
  json children = json::array();
  for (const auto& c : t.children) children.push_back(tree_to_json(c));
  return {{"sequent", render(t.sequent)},
          {"rule", std::string(rule_name(t.rule))},
          {"principal", std::move(principal)},
          {"children", std::move(children)},
          {"height", t.height}};
}

DerivationTree tree_from_json(const json& j) {
  if (!j.is_object()) throw std::invalid_argument("derivation node must be an object");
  for (const char* field : {"sequent", "rule", "principal", "children"})
    if (!j.contains(field)) throw std::invalid_argument(std::string("derivation node lacks '") + field + "'");

  DerivationTree t;
  t.sequent = parse_sequent(j.at("sequent").get<std::string>());
  const auto name = j.at("rule").get<std::string>();
  const auto rule = rule_from_name(name);
  if (!rule) throw std::invalid_argument("unknown rule '" + name + "'");
  t.rule = *rule;
  for (const auto& o : j.at("principal")) {
    const auto side = o.at("side").get<std::string>();
    if (side != "left" && side != "right") throw std::invalid_argument("side must be left or right");
    t.principal.push_back({side == "left" ? Side::Left : Side::Right, o.at("index").get<std::uint32_t>()});
  }
  unsigned height = 0;
  for (const auto& c : j.at("children")) {
    t.children.push_back(tree_from_json(c));
    height = std::max(height, t.children.back().height + 1);
  }
  // A stated height is kept so that the checker can catch inconsistencies.
  t.height = j.contains("height") ? j.at("height").get<unsigned>() : height;
  return t;
}

json stats_to_json(const SearchStats& stats) {
  return {{"nodes", stats.nodes}, {"max_depth", stats.max_depth}, {"or_branches", stats.or_branches}};
}

json verdict_to_json(const Verdict& v, const Sequent& s, const CalculusSpec& calculus) {
  return {{"schema", kSchema},
          {"verdict", v.derivable ? "derivable" : "underivable"},
          {"calculus", calculus.name()},
          {"sequent", render(s)},
          {"tree", v.tree ? tree_to_json(*v.tree) : json(nullptr)},
          {"statistics", stats_to_json(v.stats)}};
}

json interpolation_to_json(const InterpolationResult& r, const Partition& p, const CalculusSpec& calculus) {
  const auto shared = p.common_atoms();
  const auto used = atoms(r.interpolant);
  return {{"schema", kSchema},
          {"calculus", calculus.name()},
          {"partition", render(p)},
          {"interpolant", render(r.interpolant)},
          {"atoms", {{"shared", shared}, {"used", used}}},
          {"left_derivation", tree_to_json(r.left_derivation)},
          {"right_derivation", tree_to_json(r.right_derivation)}};
}

namespace {

void text_rec(const DerivationTree& t, Notation notation, unsigned indent, std::string& out) {
  out.append(2 * indent, ' ');
  out += render(t.sequent, notation);
  out += "   [";
  out += rule_name(t.rule);
  out += "]\n";
  for (const auto& c : t.children) text_rec(c, notation, indent + 1, out);
}

std::string replace_symbols(std::string s) {
  static const std::array<std::pair<std::string_view, std::string_view>, 9> table{{
      {"⊥", "\\bot "},
      {"⊤", "\\top "},
      {"¬", "\\neg "},
      {"□", "\\Box "},
      {"◇", "\\Diamond "},
      {"∧", "\\wedge"},
      {"∨", "\\vee"},
      {"⊃", "\\supset"},
      {"⇒", "\\Rightarrow"},
  }};
  for (auto [from, to] : table) {
    for (std::size_t pos = s.find(from); pos != std::string::npos; pos = s.find(from, pos + to.size()))
      s.replace(pos, from.size(), to);
  }
  return s;
}

void latex_rec(const DerivationTree& t, unsigned indent, std::string& out) {
  const std::string pad(2 * indent, ' ');
  out += pad + "\\infer[\\mathrm{" + std::string(rule_name(t.rule)) + "}]{" + latex(t.sequent) + "}{";
  if (t.children.empty()) {
    out += "}";
    return;
  }
  out += "\n";
  for (std::size_t i = 0; i < t.children.size(); ++i) {
    if (i) out += "\n" + pad + "  &\n";
    latex_rec(t.children[i], indent + 1, out);
  }
  out += "\n" + pad + "}";
}

}  // namespace

std::string tree_to_text(const DerivationTree& t, Notation notation) {
  std::string out;
  text_rec(t, notation, 0, out);
  return out;
}

std::string latex(Formula f) { return replace_symbols(render(f, Notation::Unicode)); }

std::string latex(const Sequent& s) { return replace_symbols(render(s, Notation::Unicode)); }

std::string tree_to_latex(const DerivationTree& t) {
  std::string out;
  latex_rec(t, 0, out);
  out += "\n";
  return out;
}

}  // namespace g3nn
