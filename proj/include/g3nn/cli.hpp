#pragma once

#include <cstdint>
#include <iosfwd>
#include <string>

#include "g3nn/io.hpp"
#include "g3nn/metaproperties.hpp"

namespace g3nn::cli {

// Each command writes its document to `out`, diagnostics to `err`, and
// returns the process exit status.

/// 0 derivable, 1 underivable, 2 usage or parse error.
int cmd_decide(const std::string& logic, const std::string& sequent, OutputFormat format, std::ostream& out,
               std::ostream& err);

/// 0 interpolant found, 1 a => b underivable, 2 usage or parse error,
/// 3 unsupported calculus.
int cmd_interpolate(const std::string& logic, const std::string& a, const std::string& b, OutputFormat format,
                    std::ostream& out, std::ostream& err);

/// 0 every axiom fixture is derivable, 1 otherwise, 2 unknown calculus.
int cmd_axioms(const std::string& logic, OutputFormat format, std::ostream& out, std::ostream& err);

struct MetaOptions {
  std::string logic;  // empty: all calculi
  std::uint64_t samples = 10000;
  GenConfig config;
};

/// 0 no counterexamples and enough samples everywhere, 1 otherwise,
/// 2 unknown calculus.
int cmd_meta(const MetaOptions& options, OutputFormat format, std::ostream& out, std::ostream& err);

/// Re-verifies a JSON derivation (a bare tree or a decide document). The
/// calculus is `logic` if non-empty, else the document's. 0 valid,
/// 1 invalid, 2 unreadable input.
int cmd_check(const std::string& logic, const std::string& document, std::ostream& out, std::ostream& err);

}  // namespace g3nn::cli
