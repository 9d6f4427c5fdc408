#pragma once

#include <vector>

#include "waveshift/grid.hpp"
#include "waveshift/potentials.hpp"
#include "waveshift/transform.hpp"

namespace waveshift {

/// Bound level: nu = interior node count + 1 (ground state nu = 1), psi
/// unit-normalized, c_sq = (psi'(0))^2 = 1 / int phi0^2.
struct BoundState {
    int nu;
    double energy;
    GridFunction psi;
    double c_sq;
};

/// Boundary condition at r_max for the shooting solver.
enum class TailCondition {
    hard_wall,  // phi(r_max) = 0
    decaying,   // log-derivative match to the decaying tail, requires V(r_max) > E
};

/// Lowest `count` eigenstates by outward shooting with node counting and
/// bisection (eigenvalue tolerance 1e-10 relative).
std::vector<BoundState> find_bound_states(const GridFunction& V, int count, TailCondition tail);
std::vector<BoundState> find_bound_states(const PotentialModel& m, const RadialGrid& grid,
                                          int count);

/// Probability centroid <r> = int r psi^2 / int psi^2.
double centroid(const GridFunction& psi);

/// One barrier/well block of the potential perturbation. sign_pattern lists
/// the signs (+1/-1) of the lobes between this block's knots, in order of
/// increasing r; lobes below the noise floor are dropped.
struct Block {
    double r_left;
    double r_right;
    std::vector<int> sign_pattern;
    double barrier_peak;  // max delta_V inside the block
    double well_depth;    // min delta_V inside the block
};

struct BlockDecomposition {
    std::vector<Block> blocks;
};

/// Splits delta_V at the given interior knots (plus the domain endpoints)
/// and records the lobe sign pattern per block. Noise floor: a lobe counts
/// only if its peak magnitude exceeds 1e-9 * max|delta_V|.
BlockDecomposition decompose_blocks(const GridFunction& delta_V,
                                    const std::vector<double>& knots);

struct LevelShift {
    int nu;
    double energy_before;
    double energy_after;
    double centroid_before;
    double centroid_after;
};

struct ShiftReport {
    WeightChange weight;
    TransformResult transform;
    std::vector<LevelShift> levels;
};

/// Applies the weight change to level `chosen_nu`, re-solves the spectrum of
/// the transformed potential from scratch, and reports energies and centroids
/// of the lowest `levels` states before and after. Hard-wall models only.
ShiftReport shift_report(const PotentialModel& model, const RadialGrid& grid, int chosen_nu,
                         double c_sq_ratio, int levels);

}  // namespace waveshift
