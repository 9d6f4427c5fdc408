#pragma once

#include <string>
#include <utility>
#include <variant>

#include "waveshift/grid.hpp"

namespace waveshift {

// Initial-potential models. Conventions (hbar^2/2m = 1 throughout):
//   RepulsiveCoulomb:  V0(r) = Z / r, Z > 0
//   LinearRamp:        V0(r) = g * r
// The infinite well is V = 0 on [0, L] with the hard wall encoded as a
// boundary condition of the eigenvalue solver, not as a large sample value.

struct InfiniteWell {
    double L;
};

struct FreeHalfAxis {};

struct RepulsiveCoulomb {
    double Z;
};

struct LinearRamp {
    double g;
};

struct Tabulated {
    GridFunction f;  // native samples; linearly interpolated off-grid
};

using PotentialModel =
    std::variant<InfiniteWell, FreeHalfAxis, RepulsiveCoulomb, LinearRamp, Tabulated>;

/// Short tag for CSV metadata ("well", "free", "coulomb", "linear", "tabulated").
std::string model_tag(const PotentialModel& m);

/// Human-readable parameter string, e.g. "coulomb Z=1".
std::string model_describe(const PotentialModel& m);

bool singular_origin(const PotentialModel& m);

/// Validates parameter domains (L > 0, Z > 0, tabulated starts at r = 0).
void validate_model(const PotentialModel& m);

/// Pointwise samples of V0 on the grid. The Coulomb origin sample is set to
/// the r = h value and the result is flagged origin_regularized; the
/// integrator never reads it when seeded with small_r_series.
GridFunction evaluate(const PotentialModel& m, const RadialGrid& grid);

/// (phi(h), phi(2h)) of the s-wave regular solution from the two-term
/// series: regular models phi ~ r - (E - V0(0)) r^3/6, Coulomb
/// phi ~ r + (Z/2) r^2.
std::pair<double, double> small_r_series(const PotentialModel& m, double E, double h);

/// Reads a two-column CSV (r, V) with a one-line header; requires strictly
/// increasing r starting at 0 with an odd sample count >= 9.
PotentialModel load_tabulated_csv(const std::string& path);

}  // namespace waveshift
