#pragma once

#include <utility>
#include <vector>

#include "waveshift/grid.hpp"
#include "waveshift/potentials.hpp"

namespace waveshift {

/// A gathering potential and the square-integrable positive-energy state it
/// holds at E_b = k_b^2. psi = phi0(E_b)/p; knots of psi coincide with the
/// knots of phi0 because p stays positive.
struct BsecSystem {
    double k_b;
    double delta_c_sq;
    PotentialModel model;
    GridFunction V;
    GridFunction psi;
    GridFunction p;
    bool gathering;  // false in the degenerate delta_c_sq = 0 case
};

/// Free initial motion: phi0 = sin(k_b r)/k_b with the closed-form kernel
/// p = 1 + dc2 (2 k_b r - sin 2 k_b r) / (4 k_b^3).
BsecSystem build_bsec_free(double k_b, double delta_c_sq, const RadialGrid& grid);

/// Same pipeline with numerically integrated phi0(E_b) for an arbitrary
/// initial model (free, repulsive Coulomb, linear ramp, tabulated).
BsecSystem build_bsec_numeric(const PotentialModel& model, double E_b, double delta_c_sq,
                              const RadialGrid& grid);

/// Scattering phase shift at E = k^2 from a two-point match of the regular
/// solution to A sin(kr + delta)/k at the window radii. Reduced to
/// (-pi/2, pi/2]. Fails with "degenerate matching points" when
/// k (r2 - r1) sits too close to a multiple of pi.
double phase_shift(const GridFunction& V, double E, std::pair<double, double> window);

struct PhaseShiftScan {
    std::vector<double> energies;
    std::vector<double> deltas_reduced;    // each in (-pi/2, pi/2]
    std::vector<double> deltas_unwrapped;  // neighbor-continuous
    std::pair<double, double> window;
};

/// phase_shift mapped over the energies with mod-pi continuity unwrapping.
PhaseShiftScan scan_phase(const GridFunction& V, const std::vector<double>& energies,
                          std::pair<double, double> window);

struct BeatAnalysis {
    double beat_period;                                     // median minima spacing
    std::vector<std::pair<double, double>> envelope_maxima; // (r, peak of |phi| envelope)
    std::vector<std::pair<double, double>> envelope_minima;
};

/// Integrates the regular solution at E in V and reports the slow amplitude
/// modulation: |phi| oscillation peaks form the envelope, whose filtered
/// minima give the beat period. Fails with "no beats resolved" when fewer
/// than 3 envelope minima fit in the grid.
BeatAnalysis beating_analysis(const GridFunction& V, double E);

struct ResonanceEstimate {
    double R_cut;        // truncation radius after snapping to a knot
    double E_r;          // resonance position
    double Gamma;        // width, 2 / (d delta/dE at E_r)
    double fit_quality;  // RMS residual of the Breit-Wigner phase fit
};

/// Deletes the potential tail beyond R_cut (snapped to the nearest knot of
/// psi, keeping blocks whole) and measures the finite width the embedded
/// state acquires: the absolute phase rises by ~pi across the resonance;
/// its steepest-ascent point gives E_r and the slope gives Gamma.
ResonanceEstimate truncate_and_width(const BsecSystem& sys, double R_cut,
                                     std::pair<double, double> energy_window, int n_scan);

/// Sentinel permutation entry: replace the block by an interval of zero
/// potential ("missed" block).
inline constexpr int kZeroBlock = -1;

struct RearrangeResult {
    GridFunction V_new;
    GridFunction psi_new;
    bool gathered;
};

/// Permutes the first n_blocks inter-knot blocks of the gathering potential
/// (free initial model only: equal block widths pi/k_b) and re-integrates the
/// state at E_b. gathered reports whether the envelope still decays across
/// block boundaries past the permuted region and stays bounded by the
/// original peak.
RearrangeResult rearrange_blocks(const BsecSystem& sys, const std::vector<int>& permutation,
                                 int n_blocks);

}  // namespace waveshift
