#pragma once

#include <cmath>

#include "csfq/params.hpp"

namespace csfq::test {

/// Perturbative device set; E_CS from the 78 fF shunt.
inline ValidatedQubit perturbative_set() { return validate_params(QubitParams{0.41, 85.0, 3.2, 78.0}); }

/// Same set with E_CS pinned to exactly 0.25 GHz.
inline ValidatedQubit rounded_set() {
  return validate_params(QubitParams{0.41, 85.0, 3.2, capacitance_from_charging_energy(0.25)});
}

/// Two-dimensional device set.
inline ValidatedQubit grid_set() { return validate_params(QubitParams{0.437, 136.75, 3.2, 60.0}); }

inline double rel_err(double a, double b) { return std::abs(a - b) / std::abs(b); }

}  // namespace csfq::test
