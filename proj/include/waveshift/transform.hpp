#pragma once

#include "waveshift/grid.hpp"
#include "waveshift/potentials.hpp"

namespace waveshift {

/// Spectral-weight change at a fixed energy E0nu. c is the derivative at the
/// origin of the unit-normalized state (psi = c * phi with phi'(0) = 1), so
/// the initial weight is c0^2 = 1 / int phi0^2. For continuum energies the
/// state is spread over the half-axis and c0^2 = 0, making delta_c_sq a free
/// positive input.
struct WeightChange {
    double E0nu = 0.0;
    double c0_sq = 0.0;
    double c_sq = 0.0;

    double delta_c_sq() const { return c_sq - c0_sq; }

    void validate() const {
        if (!(c0_sq >= 0.0)) throw ValidationError("WeightChange: c0_sq must be >= 0");
        if (!(c_sq > 0.0)) throw ValidationError("WeightChange: c_sq must be > 0");
    }
};

struct TransformResult {
    WeightChange weight;
    GridFunction V0;       // initial potential samples
    GridFunction p;        // transformation kernel, p(0) = 1
    GridFunction V;        // transformed potential
    GridFunction delta_V;  // V - V0
    GridFunction phi_nu;   // transformed regular solution at E0nu (= phi0/p)
};

/// Initial spectral weight c0^2 = 1 / int_0^rmax phi0^2 dr. Requires a
/// normalizable input: the boundary sample must be below 1e-6 of the peak
/// (a decaying tail or a hard-wall node), otherwise the integral is a
/// truncation artifact.
double norm_constant(const GridFunction& phi0_nu);

/// p(r) = 1 + delta_c_sq * int_0^r phi0^2. Fails if min p <= 1e-9: the
/// weight change would drive c^2 nonpositive and the transform singular.
GridFunction compute_p(const GridFunction& phi0_nu, double delta_c_sq);

/// Transformed potential
///   V = V0 - 4 dc2 phi0' phi0 / p + 2 dc2^2 phi0^4 / p^2,
/// with phi0' taken numerically (one code path; the log-form below is the
/// independent check).
GridFunction transform_potential(const GridFunction& V0, const GridFunction& phi0_nu,
                                 const GridFunction& p, double delta_c_sq);

/// Algebraically equivalent route V = V0 - 2 (d^2/dr^2) ln p. Used as an
/// oracle for transform_potential; finite-difference error dominates.
GridFunction transform_potential_logform(const GridFunction& V0, const GridFunction& p);

/// Transformed regular solution at E != E0nu:
///   phi(E,r) = phi0(E,r) - dc2 * phi0(E0nu,r) p^-1(r) int_0^r phi0(E0nu) phi0(E).
GridFunction transform_solution(const GridFunction& phi0_E, const GridFunction& phi0_nu,
                                const GridFunction& p, double delta_c_sq);

/// Transformed solution at the chosen energy: phi = phi0 / p.
GridFunction transform_chosen(const GridFunction& phi0_nu, const GridFunction& p);

/// Fixed-energy pipeline: integrate phi0 at wc.E0nu in the model potential,
/// then build p, V, delta_V and phi_nu. The caller supplies the full weight
/// change (bound states: use apply_weight_change_level instead).
TransformResult apply_weight_change(const PotentialModel& model, const RadialGrid& grid,
                                    const WeightChange& wc);

/// Bound-state pipeline: solves for level nu, sets c0^2 from the norm
/// integral and c^2 = ratio * c0^2.
TransformResult apply_weight_change_level(const PotentialModel& model, const RadialGrid& grid,
                                          int nu, double c_sq_ratio);

}  // namespace waveshift
