// Test-only oracles shared across suites. These deliberately avoid the
// library's own solver paths where they are used as independent checks.
#pragma once

#include <algorithm>
#include <cmath>
#include <vector>

#include "waveshift/grid.hpp"

namespace test_oracles {

/// Max over interior nodes of |−phi'' + V phi − E phi| via the plain
/// three-point second difference, scaled by max|phi| (1 + |E| + max|V|).
inline double scaled_schrodinger_residual(const waveshift::GridFunction& phi,
                                          const waveshift::GridFunction& V, double E) {
    const double h = phi.grid().h;
    double scale = phi.max_abs() * (1.0 + std::abs(E) + V.max_abs());
    double worst = 0.0;
    for (int i = 1; i + 1 < phi.size(); ++i) {
        double second = (phi[i + 1] - 2.0 * phi[i] + phi[i - 1]) / (h * h);
        worst = std::max(worst, std::abs(-second + (V[i] - E) * phi[i]));
    }
    return worst / scale;
}

/// Oscillation peaks of |f|: the envelope samples (r, |f| at local maxima).
inline std::vector<std::pair<double, double>> abs_peaks(const waveshift::GridFunction& f,
                                                        double r_min = 0.0) {
    std::vector<std::pair<double, double>> peaks;
    for (int i = 1; i + 1 < f.size(); ++i) {
        if (f.r(i) < r_min) continue;
        double a = std::abs(f[i]);
        if (a >= std::abs(f[i - 1]) && a > std::abs(f[i + 1])) peaks.emplace_back(f.r(i), a);
    }
    return peaks;
}

}  // namespace test_oracles
