#include "g3nn/cli.hpp"

#include <ostream>

namespace g3nn::cli {

using nlohmann::json;

namespace {

std::string stats_line(const SearchStats& s) {
  return "nodes " + std::to_string(s.nodes) + ", max depth " + std::to_string(s.max_depth) + ", or-branches " +
         std::to_string(s.or_branches);
}

std::string atom_list(const std::set<std::string>& atoms) {
  std::string out = "{";
  for (const auto& a : atoms) out += (out.size() > 1 ? ", " : "") + a;
  return out + "}";
}

}  // namespace

int cmd_decide(const std::string& logic, const std::string& text, OutputFormat format, std::ostream& out,
               std::ostream& err) {
  try {
    const auto& calculus = calculus_for(logic);
    const Sequent s = parse_sequent(text);
    const Verdict v = decide(s, calculus);
    if (format == OutputFormat::Json) {
      out << verdict_to_json(v, s, calculus).dump(2) << "\n";
    } else if (format == OutputFormat::Latex) {
      if (v.tree)
        out << tree_to_latex(*v.tree);
      else
        out << "% " << latex(s) << " is not derivable in " << calculus.name() << "\n";
    } else {
      out << render(s, Notation::Unicode) << "  is " << (v.derivable ? "derivable" : "not derivable") << " in "
          << calculus.display_name();
      if (v.tree) out << " (height " << v.tree->height << ")";
      out << "\n";
      if (v.tree) out << tree_to_text(*v.tree);
      out << stats_line(v.stats) << "\n";
    }
    return v.derivable ? 0 : 1;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_interpolate(const std::string& logic, const std::string& a_text, const std::string& b_text,
                    OutputFormat format, std::ostream& out, std::ostream& err) {
  const CalculusSpec* calculus = nullptr;
  Formula a, b;
  try {
    calculus = &calculus_for(logic);
    a = parse_formula(a_text);
    b = parse_formula(b_text);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  try {
    const auto r = craig(a, b, *calculus);
    const Partition p{{a}, {}, {}, {b}};
    if (!r) {
      err << render(Sequent{{a}, {b}}) << " is not derivable in " << calculus->name() << "\n";
      return 1;
    }
    if (format == OutputFormat::Json) {
      out << interpolation_to_json(*r, p, *calculus).dump(2) << "\n";
    } else if (format == OutputFormat::Latex) {
      out << "% interpolant: $" << latex(r->interpolant) << "$\n";
      out << tree_to_latex(r->left_derivation) << tree_to_latex(r->right_derivation);
    } else {
      out << "interpolant: " << render(r->interpolant, Notation::Unicode) << "\n";
      out << "partition: " << render(p, Notation::Unicode) << "\n";
      out << "shared atoms: " << atom_list(p.common_atoms()) << ", used: " << atom_list(atoms(r->interpolant))
          << "\n";
      out << "first half:\n" << tree_to_text(r->left_derivation);
      out << "second half:\n" << tree_to_text(r->right_derivation);
    }
    return 0;
  } catch (const UnsupportedCalculus&) {
    err << "interpolation unsupported for LR-C calculi\n";
    return 3;
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
}

int cmd_axioms(const std::string& logic, OutputFormat format, std::ostream& out, std::ostream& err) {
  const CalculusSpec* calculus = nullptr;
  try {
    calculus = &calculus_for(logic);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  bool all = true;
  json fixtures = json::array();
  for (const auto& f : axiom_fixtures(*calculus)) {
    const Verdict v = decide(f.sequent, *calculus);
    all = all && v.derivable;
    if (!v.derivable) err << "not derivable: " << f.name << "  " << render(f.sequent) << "\n";
    if (format == OutputFormat::Json) {
      fixtures.push_back({{"axiom", f.name},
                          {"sequent", render(f.sequent)},
                          {"derivable", v.derivable},
                          {"tree", v.tree ? tree_to_json(*v.tree) : json(nullptr)}});
    } else if (format == OutputFormat::Latex) {
      out << "% " << f.name << "\n";
      if (v.tree) out << tree_to_latex(*v.tree);
    } else {
      out << f.name << "  " << render(f.sequent, Notation::Unicode) << "  "
          << (v.derivable ? "derivable" : "NOT derivable") << "\n";
      if (v.tree) {
        std::string tree = tree_to_text(*v.tree);
        for (std::size_t pos = 0; pos < tree.size();) {
          const auto end = tree.find('\n', pos);
          out << "    " << tree.substr(pos, end - pos + 1);
          pos = end + 1;
        }
      }
    }
  }
  if (format == OutputFormat::Json)
    out << json{{"schema", kSchema}, {"calculus", calculus->name()}, {"fixtures", fixtures}}.dump(2) << "\n";
  return all ? 0 : 1;
}

int cmd_meta(const MetaOptions& options, OutputFormat format, std::ostream& out, std::ostream& err) {
  std::vector<const CalculusSpec*> targets;
  try {
    if (options.logic.empty() || options.logic == "all") {
      for (const auto& c : all_calculi()) targets.push_back(&c);
    } else {
      targets.push_back(&calculus_for(options.logic));
    }
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }

  bool all = true;
  json reports = json::array();
  for (const auto* c : targets) {
    const auto report = run_suite(*c, options.config, options.samples);
    all = all && report.passed(options.samples);
    json props = json::array();
    for (const auto& p : report.properties) {
      if (format == OutputFormat::Json) {
        props.push_back({{"property", p.property},
                         {"samples", p.samples},
                         {"attempts", p.attempts},
                         {"modal_samples", p.modal_samples},
                         {"counterexamples", p.counterexamples},
                         {"examples", p.examples}});
      } else {
        out << c->name() << "  " << p.property << ": " << p.samples << " samples (" << p.attempts << " drawn, "
            << p.modal_samples << " using modal rules), " << p.counterexamples << " counterexamples\n";
        for (const auto& e : p.examples) out << "    " << e << "\n";
      }
    }
    if (format == OutputFormat::Json) reports.push_back({{"calculus", c->name()}, {"properties", props}});
  }
  if (format == OutputFormat::Json)
    out << json{{"schema", kSchema},
                {"seed", options.config.seed},
                {"max_weight", options.config.max_weight},
                {"max_modal_depth", options.config.max_modal_depth},
                {"reports", reports}}
               .dump(2)
        << "\n";
  return all ? 0 : 1;
}

int cmd_check(const std::string& logic, const std::string& document, std::ostream& out, std::ostream& err) {
  DerivationTree tree;
  const CalculusSpec* calculus = nullptr;
  try {
    const json j = json::parse(document);
    std::string name = logic;
    if (name.empty() && j.is_object() && j.contains("calculus")) name = j.at("calculus").get<std::string>();
    if (name.empty()) throw std::invalid_argument("no calculus given and none recorded in the document");
    calculus = &calculus_for(name);
    const json& node = j.is_object() && j.contains("tree") ? j.at("tree") : j;
    if (node.is_null()) throw std::invalid_argument("document holds no derivation");
    tree = tree_from_json(node);
  } catch (const std::exception& e) {
    err << "error: " << e.what() << "\n";
    return 2;
  }
  if (auto r = check_derivation(tree, *calculus); !r) {
    out << "invalid " << calculus->name() << " derivation: " << r.message << "\n";
    return 1;
  }
  out << "valid " << calculus->name() << " derivation of " << render(tree.sequent, Notation::Unicode)
      << " (height " << tree.height << ", " << tree_size(tree) << " nodes)\n";
  return 0;
}

}  // namespace g3nn::cli
