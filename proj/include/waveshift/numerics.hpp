#pragma once

#include <utility>
#include <vector>

#include "waveshift/grid.hpp"

namespace waveshift {

/// Magnitude cap for outward integration; far below overflow, far above any
/// physical solution on a sensible grid.
inline constexpr double kDefaultBlowupCap = 1e250;

/// Regular solution of -phi'' + V phi = E phi with phi(0) = 0, integrated
/// outward by the fourth-order Numerov recursion. start_values are
/// (phi(h), phi(2h)); the recursion never reads V at r = 0, so singular
/// origins are safe as long as the caller seeds a proper series start.
GridFunction integrate_regular(const GridFunction& V, double E,
                               std::pair<double, double> start_values,
                               double blowup_cap = kDefaultBlowupCap);

/// Two-term series start (phi(h), phi(2h)) for a potential that is regular at
/// the origin with value v0 there: phi(r) ~ r - (E - v0) r^3 / 6.
std::pair<double, double> free_series_start(double E, double v0, double h);

/// Running integral F(r_i) = int_0^{r_i} f dt. Composite Simpson on even
/// nodes; odd nodes get a three-point Newton-Cotes half step, which keeps
/// every node at third order or better.
GridFunction cumulative_integral(const GridFunction& f);

/// Composite Simpson over the full grid (fourth order).
double definite_integral(const GridFunction& f);

/// Central differences O(h^2) in the interior, one-sided O(h^2) at the ends.
GridFunction derivative(const GridFunction& f);

/// Radii of sign changes located by linear interpolation between samples.
/// A sample that is exactly zero counts once. With skip_origin, r = 0 is
/// excluded.
std::vector<double> find_zeros(const GridFunction& f, bool skip_origin);

}  // namespace waveshift
