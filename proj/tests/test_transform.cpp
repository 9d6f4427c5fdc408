// The weight-change transform against its analytic identities: the
// telescoping normalization integral, the log-form potential route, and the
// residual of the transformed solutions in the transformed potential.

#include <cmath>

#include "doctest.h"
#include "oracles.hpp"
#include "waveshift/numerics.hpp"
#include "waveshift/transform.hpp"

using namespace waveshift;

namespace {

GridFunction well_state(const RadialGrid& g, int nu) {
    // Regular solutions of the L=pi well: phi = sin(nu r)/nu, phi'(0) = 1.
    return GridFunction::sampled(g, [nu](double r) { return std::sin(nu * r) / nu; });
}

double max_abs_diff(const GridFunction& a, const GridFunction& b) {
    double m = 0.0;
    for (int i = 0; i < a.size(); ++i) m = std::max(m, std::abs(a[i] - b[i]));
    return m;
}

}  // namespace

TEST_CASE("norm_constant: well ground and second states") {
    RadialGrid g(M_PI, 2001);
    CHECK(norm_constant(well_state(g, 1)) == doctest::Approx(2.0 / M_PI).epsilon(1e-6));
    CHECK(norm_constant(well_state(g, 2)) == doctest::Approx(8.0 / M_PI).epsilon(1e-6));

    GridFunction twice(g, std::vector<double>(g.n_points));
    GridFunction base = well_state(g, 1);
    for (int i = 0; i < base.size(); ++i) twice[i] = 2.0 * base[i];
    CHECK(norm_constant(twice) ==
          doctest::Approx(0.25 * norm_constant(base)).epsilon(1e-12));
}

TEST_CASE("norm_constant rejects a continuum wave") {
    RadialGrid g(20.5, 2051);
    GridFunction wave = GridFunction::sampled(g, [](double r) { return std::sin(r); });
    CHECK_THROWS_WITH_AS(norm_constant(wave), doctest::Contains("non-normalizable"),
                         NumericalError);
}

TEST_CASE("compute_p: trivial and closed-form cases") {
    RadialGrid g(M_PI, 2001);
    GridFunction phi = well_state(g, 1);

    GridFunction p0 = compute_p(phi, 0.0);
    for (int i = 0; i < p0.size(); ++i) CHECK(p0[i] == 1.0);

    GridFunction p1 = compute_p(phi, 1.0);
    CHECK(p1[0] == 1.0);
    CHECK(p1[p1.size() - 1] == doctest::Approx(1.0 + M_PI / 2).epsilon(1e-8));

    // general k_b: p = 1 + dc2 (2 k r - sin 2kr) / (4 k^3)
    double kb = 1.7, dc2 = 0.6;
    RadialGrid gb(12.0, 4001);
    GridFunction phib =
        GridFunction::sampled(gb, [kb](double r) { return std::sin(kb * r) / kb; });
    GridFunction pb = compute_p(phib, dc2);
    double err = 0.0;
    for (int i = 0; i < pb.size(); ++i) {
        double ref = 1.0 + dc2 * (2 * kb * gb.r(i) - std::sin(2 * kb * gb.r(i))) /
                               (4 * kb * kb * kb);
        err = std::max(err, std::abs(pb[i] - ref));
    }
    CHECK(err < 1e-8);
}

TEST_CASE("compute_p fails loudly when the weight change is too negative") {
    RadialGrid g(M_PI, 2001);
    CHECK_THROWS_WITH_AS(compute_p(well_state(g, 1), -0.7), doctest::Contains("p nonpositive"),
                         NumericalError);
}

TEST_CASE("transform_potential: dc2 = 0 is the identity") {
    RadialGrid g(M_PI, 1001);
    GridFunction V0 = GridFunction::sampled(g, [](double r) { return 0.3 * r; });
    GridFunction phi = well_state(g, 1);
    GridFunction p = compute_p(phi, 0.0);
    GridFunction V = transform_potential(V0, phi, p, 0.0);
    CHECK(max_abs_diff(V, V0) < 1e-12);
}

TEST_CASE("transform_potential agrees with the log-form route at O(h^2)") {
    auto err_at = [](int n) {
        RadialGrid g(M_PI, n);
        GridFunction V0 = GridFunction::zeros(g);
        GridFunction phi = well_state(g, 1);
        double dc2 = 2.0 / M_PI;  // doubles the spectral weight
        GridFunction p = compute_p(phi, dc2);
        return max_abs_diff(transform_potential(V0, phi, p, dc2),
                            transform_potential_logform(V0, p));
    };
    double e1 = err_at(3143);  // h ~ 1e-3
    double e2 = err_at(6285);  // h ~ 5e-4
    CHECK(e1 < 5e-4);
    CHECK(e1 / e2 > 3.0);
}

TEST_CASE("log-form route on a synthetic Gaussian kernel") {
    // p = exp(alpha r^2) has (ln p)'' = 2 alpha, so V = V0 - 4 alpha.
    RadialGrid g(1.0, 501);
    double alpha = 0.35;
    GridFunction V0 = GridFunction::sampled(g, [](double r) { return r; });
    GridFunction p = GridFunction::sampled(g, [alpha](double r) { return std::exp(alpha * r * r); });
    GridFunction V = transform_potential_logform(V0, p);
    double err = 0.0;
    for (int i = 0; i < V.size(); ++i) err = std::max(err, std::abs(V[i] - (g.r(i) - 4 * alpha)));
    CHECK(err < 1e-6);
}

TEST_CASE("transform_solution: dc2 = 0 identity and origin conditions") {
    RadialGrid g(M_PI, 2001);
    GridFunction phi_nu = well_state(g, 1);
    GridFunction phi_E = GridFunction::sampled(g, [](double r) { return std::sin(2 * r) / 2; });
    GridFunction p = compute_p(phi_nu, 0.0);
    CHECK(max_abs_diff(transform_solution(phi_E, phi_nu, p, 0.0), phi_E) < 1e-12);

    double dc2 = 3.0;
    GridFunction p3 = compute_p(phi_nu, dc2);
    GridFunction tr = transform_solution(phi_E, phi_nu, p3, dc2);
    CHECK(tr[0] == 0.0);
    // correction vanishes as O(r^3): the first samples still look like phi ~ r
    CHECK(tr[1] == doctest::Approx(g.h).epsilon(1e-6));
    CHECK((tr[2] - tr[1]) / g.h == doctest::Approx(1.0).epsilon(1e-4));
}

TEST_CASE("transformed solutions satisfy the transformed equation") {
    // Free base at E_b = 1 with a solution at E = 2.25; the discrete residual
    // must sit at the discretization level.
    RadialGrid g(30.0, 30001);
    double kb = 1.0, dc2 = 1.0, E = 2.25, k = 1.5;
    GridFunction phi_nu = GridFunction::sampled(g, [kb](double r) { return std::sin(kb * r) / kb; });
    GridFunction phi_E = GridFunction::sampled(g, [k](double r) { return std::sin(k * r) / k; });
    GridFunction p = compute_p(phi_nu, dc2);
    GridFunction V0 = GridFunction::zeros(g);
    GridFunction V = transform_potential(V0, phi_nu, p, dc2);

    double h2 = g.h * g.h;
    GridFunction sol = transform_solution(phi_E, phi_nu, p, dc2);
    CHECK(test_oracles::scaled_schrodinger_residual(sol, V, E) < 100.0 * h2);

    GridFunction chosen = transform_chosen(phi_nu, p);
    CHECK(test_oracles::scaled_schrodinger_residual(chosen, V, kb * kb) < 100.0 * h2);
}

TEST_CASE("transform_solution tends to transform_chosen as E -> E0nu") {
    RadialGrid g(40.0, 8001);
    double kb = 1.0, dc2 = 1.0;
    GridFunction phi_nu = GridFunction::sampled(g, [kb](double r) { return std::sin(kb * r) / kb; });
    GridFunction p = compute_p(phi_nu, dc2);
    GridFunction chosen = transform_chosen(phi_nu, p);

    double eps = 1e-8;
    double k = std::sqrt(1.0 + eps);
    GridFunction phi_E = GridFunction::sampled(g, [k](double r) { return std::sin(k * r) / k; });
    GridFunction near = transform_solution(phi_E, phi_nu, p, dc2);
    CHECK(max_abs_diff(near, chosen) < 1e-5);
}

TEST_CASE("transform_chosen: normalization identity over the weight ladder") {
    // int phi_nu^2 = 1/c^2 exactly (telescoping integral); checked by
    // quadrature for both parities of the weight change.
    RadialGrid g(M_PI, 4001);
    for (int nu : {1, 2}) {
        GridFunction phi = well_state(g, nu);
        double c0 = norm_constant(phi);
        for (double ratio : {0.5, 2.0, 10.0}) {
            double c2 = ratio * c0, dc2 = c2 - c0;
            GridFunction p = compute_p(phi, dc2);
            GridFunction chosen = transform_chosen(phi, p);
            GridFunction sq(g, std::vector<double>(g.n_points));
            for (int i = 0; i < sq.size(); ++i) sq[i] = chosen[i] * chosen[i];
            double integral = definite_integral(sq);
            CHECK(integral == doctest::Approx(1.0 / c2).epsilon(1e-6));
        }
    }
}

TEST_CASE("positive p neither creates nor destroys knots") {
    RadialGrid g(M_PI, 4001);
    GridFunction phi = well_state(g, 2);
    GridFunction p = compute_p(phi, 5.0);
    auto before = find_zeros(phi, true);
    auto after = find_zeros(transform_chosen(phi, p), true);
    REQUIRE(before.size() == after.size());
    for (size_t i = 0; i < before.size(); ++i) CHECK(std::abs(before[i] - after[i]) < g.h);
}

TEST_CASE("gathering monotonicity: positive dc2 damps the chosen state") {
    RadialGrid g(M_PI, 2001);
    GridFunction phi = well_state(g, 1);
    GridFunction p = compute_p(phi, 4.0);
    for (int i = 0; i < p.size() - 1; ++i) CHECK(p[i + 1] >= p[i]);
    GridFunction chosen = transform_chosen(phi, p);
    for (int i = 0; i < chosen.size(); ++i) CHECK(std::abs(chosen[i]) <= std::abs(phi[i]) + 1e-15);
}

TEST_CASE("apply_weight_change composes the pipeline") {
    RadialGrid g(M_PI, 2001);
    PotentialModel well = InfiniteWell{M_PI};
    TransformResult tr = apply_weight_change_level(well, g, 1, 2.0);
    CHECK(tr.weight.c0_sq == doctest::Approx(2.0 / M_PI).epsilon(1e-6));
    CHECK(tr.weight.c_sq == doctest::Approx(4.0 / M_PI).epsilon(1e-6));
    CHECK(tr.p[0] == 1.0);
    // p(L) = c^2 / c0^2 is the telescoped end value
    CHECK(tr.p[tr.p.size() - 1] == doctest::Approx(2.0).epsilon(1e-8));
    // phi_nu * p recovers phi0 pointwise
    GridFunction phi0 = integrate_regular(tr.V0, tr.weight.E0nu,
                                          small_r_series(well, tr.weight.E0nu, g.h));
    for (int i = 0; i < g.n_points; i += 97)
        CHECK(tr.phi_nu[i] * tr.p[i] == doctest::Approx(phi0[i]).epsilon(1e-12));

    // identity weight change
    TransformResult id = apply_weight_change_level(well, g, 1, 1.0);
    CHECK(id.delta_V.max_abs() < 1e-12);
}
