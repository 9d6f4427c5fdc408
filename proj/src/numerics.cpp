#include "waveshift/numerics.hpp"

#include <cmath>

namespace waveshift {

GridFunction integrate_regular(const GridFunction& V, double E,
                               std::pair<double, double> start_values,
                               double blowup_cap) {
    const RadialGrid& g = V.grid();
    const int n = g.n_points;
    const double h = g.h;
    const double h2_12 = h * h / 12.0;

    std::vector<double> phi(n);
    phi[0] = 0.0;
    phi[1] = start_values.first;
    phi[2] = start_values.second;

    // Numerov for phi'' = (V - E) phi: c_i = 1 + h^2 (E - V_i) / 12.
    auto c = [&](int i) { return 1.0 + h2_12 * (E - V[i]); };

    double c_im1 = c(1), c_i = c(2);
    for (int i = 2; i + 1 < n; ++i) {
        double c_ip1 = c(i + 1);
        phi[i + 1] = ((12.0 - 10.0 * c_i) * phi[i] - c_im1 * phi[i - 1]) / c_ip1;
        if (std::abs(phi[i + 1]) > blowup_cap)
            throw BlowupError(g.r(i + 1), blowup_cap, phi[i + 1]);
        c_im1 = c_i;
        c_i = c_ip1;
    }
    return GridFunction(g, std::move(phi));
}

std::pair<double, double> free_series_start(double E, double v0, double h) {
    double a = (E - v0) / 6.0;
    return {h - a * h * h * h, 2.0 * h - 8.0 * a * h * h * h};
}

GridFunction cumulative_integral(const GridFunction& f) {
    const RadialGrid& g = f.grid();
    const int n = g.n_points;
    const double h = g.h;

    std::vector<double> F(n);
    F[0] = 0.0;
    for (int i = 2; i < n; i += 2)
        F[i] = F[i - 2] + h / 3.0 * (f[i - 2] + 4.0 * f[i - 1] + f[i]);
    // Odd nodes: integrate the quadratic through (i-1, i, i+1) over the first
    // half step and add it to the preceding Simpson value.
    for (int i = 1; i < n; i += 2)
        F[i] = F[i - 1] + h / 12.0 * (5.0 * f[i - 1] + 8.0 * f[i] - f[i + 1]);
    return GridFunction(g, std::move(F));
}

double definite_integral(const GridFunction& f) {
    const int n = f.size();
    const double h = f.grid().h;
    double odd = 0.0, even = 0.0;
    for (int i = 1; i < n - 1; i += 2) odd += f[i];
    for (int i = 2; i < n - 1; i += 2) even += f[i];
    return h / 3.0 * (f[0] + 4.0 * odd + 2.0 * even + f[n - 1]);
}

GridFunction derivative(const GridFunction& f) {
    const int n = f.size();
    const double h = f.grid().h;
    std::vector<double> d(n);
    d[0] = (-3.0 * f[0] + 4.0 * f[1] - f[2]) / (2.0 * h);
    for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - f[i - 1]) / (2.0 * h);
    d[n - 1] = (3.0 * f[n - 1] - 4.0 * f[n - 2] + f[n - 3]) / (2.0 * h);
    return GridFunction(f.grid(), std::move(d));
}

std::vector<double> find_zeros(const GridFunction& f, bool skip_origin) {
    const int n = f.size();
    std::vector<double> zeros;
    for (int i = 0; i < n; ++i) {
        if (f[i] == 0.0) {
            if (!(i == 0 && skip_origin)) zeros.push_back(f.r(i));
            continue;
        }
        if (i + 1 < n && f[i] * f[i + 1] < 0.0)
            zeros.push_back(f.r(i) + f.grid().h * f[i] / (f[i] - f[i + 1]));
    }
    return zeros;
}

}  // namespace waveshift
