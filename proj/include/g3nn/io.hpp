#pragma once

#include <string>

#include <json.hpp>

#include "g3nn/interpolation.hpp"

namespace g3nn {

inline constexpr const char* kSchema = "g3nn/1";

enum class OutputFormat { Text, Json, Latex };

/// "text", "json" or "latex"; throws std::invalid_argument otherwise.
OutputFormat format_from_name(const std::string& name);

/// Sequents are stored as ASCII strings; principal occurrences as
/// {"side": "left"|"right", "index": n} into that string's formula order.
nlohmann::json tree_to_json(const DerivationTree& t);
/// Throws std::invalid_argument (or ParseError) on malformed input.
DerivationTree tree_from_json(const nlohmann::json& j);

nlohmann::json stats_to_json(const SearchStats& stats);

/// {schema, verdict, calculus, sequent, tree | null, statistics}
nlohmann::json verdict_to_json(const Verdict& v, const Sequent& s, const CalculusSpec& calculus);

nlohmann::json interpolation_to_json(const InterpolationResult& r, const Partition& p, const CalculusSpec& calculus);

/// One node per line, children indented by two spaces.
std::string tree_to_text(const DerivationTree& t, Notation notation = Notation::Unicode);

/// Nested \infer[rule]{conclusion}{premisses} as in proof.sty.
std::string tree_to_latex(const DerivationTree& t);
std::string latex(Formula f);
std::string latex(const Sequent& s);

}  // namespace g3nn
