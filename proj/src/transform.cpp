#include "waveshift/transform.hpp"

#include <cmath>

#include "waveshift/numerics.hpp"
#include "waveshift/spectrum.hpp"

namespace waveshift {

double norm_constant(const GridFunction& phi0_nu) {
    double peak = phi0_nu.max_abs();
    if (peak == 0.0) throw ValidationError("norm_constant: zero input");
    double tail = std::abs(phi0_nu[phi0_nu.size() - 1]);
    if (tail > 1e-6 * peak)
        throw NumericalError(
            "non-normalizable input: boundary magnitude " + std::to_string(tail / peak) +
            " of peak (expected a decaying or hard-wall state)");
    GridFunction sq(phi0_nu.grid(), std::vector<double>(phi0_nu.size()));
    for (int i = 0; i < phi0_nu.size(); ++i) sq[i] = phi0_nu[i] * phi0_nu[i];
    return 1.0 / definite_integral(sq);
}

GridFunction compute_p(const GridFunction& phi0_nu, double delta_c_sq) {
    GridFunction sq(phi0_nu.grid(), std::vector<double>(phi0_nu.size()));
    for (int i = 0; i < phi0_nu.size(); ++i) sq[i] = phi0_nu[i] * phi0_nu[i];
    GridFunction F = cumulative_integral(sq);
    std::vector<double> p(phi0_nu.size());
    double pmin = 1.0;
    for (int i = 0; i < phi0_nu.size(); ++i) {
        p[i] = 1.0 + delta_c_sq * F[i];
        pmin = std::min(pmin, p[i]);
    }
    if (pmin <= 1e-9)
        throw NumericalError("p nonpositive: min p = " + std::to_string(pmin) +
                             " (weight change too negative)");
    return GridFunction(phi0_nu.grid(), std::move(p));
}

GridFunction transform_potential(const GridFunction& V0, const GridFunction& phi0_nu,
                                 const GridFunction& p, double delta_c_sq) {
    require_same_grid(V0, phi0_nu, "transform_potential");
    require_same_grid(V0, p, "transform_potential");
    GridFunction dphi = derivative(phi0_nu);
    std::vector<double> v(V0.size());
    for (int i = 0; i < V0.size(); ++i) {
        double f = phi0_nu[i], f2 = f * f;
        v[i] = V0[i] - 4.0 * delta_c_sq * dphi[i] * f / p[i] +
               2.0 * delta_c_sq * delta_c_sq * f2 * f2 / (p[i] * p[i]);
    }
    GridFunction out(V0.grid(), std::move(v));
    out.origin_regularized = V0.origin_regularized;
    return out;
}

namespace {

// Direct O(h^2) second difference. Composing two first-derivative passes
// would be O(h) at the boundary nodes, where the one-sided and central error
// coefficients clash.
GridFunction second_difference(const GridFunction& f) {
    const int n = f.size();
    const double h2 = f.grid().h * f.grid().h;
    std::vector<double> d(n);
    d[0] = (2.0 * f[0] - 5.0 * f[1] + 4.0 * f[2] - f[3]) / h2;
    for (int i = 1; i < n - 1; ++i) d[i] = (f[i + 1] - 2.0 * f[i] + f[i - 1]) / h2;
    d[n - 1] = (2.0 * f[n - 1] - 5.0 * f[n - 2] + 4.0 * f[n - 3] - f[n - 4]) / h2;
    return GridFunction(f.grid(), std::move(d));
}

}  // namespace

GridFunction transform_potential_logform(const GridFunction& V0, const GridFunction& p) {
    require_same_grid(V0, p, "transform_potential_logform");
    GridFunction lnp(p.grid(), std::vector<double>(p.size()));
    for (int i = 0; i < p.size(); ++i) {
        if (p[i] <= 0.0) throw NumericalError("p nonpositive: cannot take log");
        lnp[i] = std::log(p[i]);
    }
    GridFunction dd = second_difference(lnp);
    std::vector<double> v(V0.size());
    for (int i = 0; i < V0.size(); ++i) v[i] = V0[i] - 2.0 * dd[i];
    return GridFunction(V0.grid(), std::move(v));
}

GridFunction transform_solution(const GridFunction& phi0_E, const GridFunction& phi0_nu,
                                const GridFunction& p, double delta_c_sq) {
    require_same_grid(phi0_E, phi0_nu, "transform_solution");
    require_same_grid(phi0_E, p, "transform_solution");
    GridFunction prod(phi0_E.grid(), std::vector<double>(phi0_E.size()));
    for (int i = 0; i < phi0_E.size(); ++i) prod[i] = phi0_nu[i] * phi0_E[i];
    GridFunction cross = cumulative_integral(prod);
    std::vector<double> out(phi0_E.size());
    for (int i = 0; i < phi0_E.size(); ++i)
        out[i] = phi0_E[i] - delta_c_sq * phi0_nu[i] * cross[i] / p[i];
    return GridFunction(phi0_E.grid(), std::move(out));
}

GridFunction transform_chosen(const GridFunction& phi0_nu, const GridFunction& p) {
    require_same_grid(phi0_nu, p, "transform_chosen");
    std::vector<double> out(phi0_nu.size());
    for (int i = 0; i < phi0_nu.size(); ++i) out[i] = phi0_nu[i] / p[i];
    return GridFunction(phi0_nu.grid(), std::move(out));
}

TransformResult apply_weight_change(const PotentialModel& model, const RadialGrid& grid,
                                    const WeightChange& wc) {
    wc.validate();
    GridFunction V0 = evaluate(model, grid);
    GridFunction phi0 =
        integrate_regular(V0, wc.E0nu, small_r_series(model, wc.E0nu, grid.h));
    double dc2 = wc.delta_c_sq();
    GridFunction p = compute_p(phi0, dc2);
    GridFunction V = transform_potential(V0, phi0, p, dc2);
    std::vector<double> dv(V.size());
    for (int i = 0; i < V.size(); ++i) dv[i] = V[i] - V0[i];
    return TransformResult{wc, V0, p, V, GridFunction(grid, std::move(dv)),
                           transform_chosen(phi0, p)};
}

TransformResult apply_weight_change_level(const PotentialModel& model, const RadialGrid& grid,
                                          int nu, double c_sq_ratio) {
    if (nu < 1) throw ValidationError("apply_weight_change_level: nu must be >= 1");
    if (!(c_sq_ratio > 0.0))
        throw ValidationError("apply_weight_change_level: c_sq_ratio must be > 0");
    std::vector<BoundState> states = find_bound_states(model, grid, nu);
    const BoundState& s = states[nu - 1];
    WeightChange wc{s.energy, s.c_sq, c_sq_ratio * s.c_sq};
    return apply_weight_change(model, grid, wc);
}

}  // namespace waveshift
