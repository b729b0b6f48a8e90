#pragma once

#include <optional>
#include <stdexcept>
#include <string>

#include "g3nn/prover.hpp"

namespace g3nn {

/// Raised for calculi with LR-C or L-D◇C, where no interpolation method is
/// known.
class UnsupportedCalculus : public std::invalid_argument {
 public:
  explicit UnsupportedCalculus(const CalculusSpec& calculus);
};

class InvalidDerivation : public std::invalid_argument {
 public:
  explicit InvalidDerivation(const std::string& detail);
};

struct InterpolationResult {
  Formula interpolant;
  DerivationTree left_derivation;   // g1 => d1, I
  DerivationTree right_derivation;  // I, g2 => d2
};

// Constant-folding connectives used when combining interpolants, so that
// e.g. top | X becomes top and ~bot becomes top.
Formula fold_or(Formula a, Formula b);
Formula fold_and(Formula a, Formula b);
Formula fold_not(Formula a);
Formula fold_diamond(Formula a);  // fold_not(box(fold_not(a)))

/// Interpolant read off the derivation t for the partition p of its end
/// sequent, without verification.
Formula maehara(const DerivationTree& t, const Partition& p, const CalculusSpec& calculus);

/// maehara() plus witness derivations of both halves. Throws
/// UnsupportedCalculus, InvalidDerivation when t is not a derivation in the
/// calculus, std::invalid_argument when p does not partition t's end sequent,
/// and std::logic_error if the interpolant fails verification.
InterpolationResult interpolate(const DerivationTree& t, const Partition& p, const CalculusSpec& calculus);

/// Interpolant of a => b for the partition <a => || => b>; nullopt when
/// a => b is not derivable.
std::optional<InterpolationResult> craig(Formula a, Formula b, const CalculusSpec& calculus);

/// Atoms of i are common to both components, g1 => d1, i and i, g2 => d2 are
/// derivable.
bool verify_interpolant(Formula i, const Partition& p, const CalculusSpec& calculus);

}  // namespace g3nn
