// Eigenvalue solver against textbook spectra (hard wall and linear ramp),
// centroid and block-decomposition behavior, and the shift/recoil report.

#include <cmath>

#include "doctest.h"
#include "waveshift/numerics.hpp"
#include "waveshift/spectrum.hpp"

using namespace waveshift;

TEST_CASE("infinite well L=pi: E_nu = nu^2") {
    RadialGrid g(M_PI, 2001);
    auto states = find_bound_states(InfiniteWell{M_PI}, g, 4);
    REQUIRE(states.size() == 4);
    for (int nu = 1; nu <= 4; ++nu) {
        CHECK(states[nu - 1].nu == nu);
        CHECK(std::abs(states[nu - 1].energy - nu * nu) < 1e-8 * nu * nu);
        // exactly nu - 1 knots strictly inside the well
        auto zs = find_zeros(states[nu - 1].psi, true);
        while (!zs.empty() && zs.back() > g.r_max - g.h) zs.pop_back();
        CHECK(zs.size() == static_cast<size_t>(nu - 1));
    }
}

TEST_CASE("infinite well ground state is sqrt(2/pi) sin r, unit normalized") {
    RadialGrid g(M_PI, 2001);
    auto states = find_bound_states(InfiniteWell{M_PI}, g, 1);
    const GridFunction& psi = states[0].psi;
    double amp = std::sqrt(2.0 / M_PI);
    double err = 0.0;
    for (int i = 0; i < psi.size(); ++i)
        err = std::max(err, std::abs(psi[i] - amp * std::sin(g.r(i))));
    CHECK(err < 1e-6);

    GridFunction sq(g, std::vector<double>(g.n_points));
    for (int i = 0; i < sq.size(); ++i) sq[i] = psi[i] * psi[i];
    CHECK(definite_integral(sq) == doctest::Approx(1.0).epsilon(1e-8));
    CHECK(states[0].c_sq == doctest::Approx(2.0 / M_PI).epsilon(1e-8));
}

TEST_CASE("well width scaling: L=2pi gives E_nu = nu^2/4") {
    RadialGrid g(2 * M_PI, 2001);
    auto states = find_bound_states(InfiniteWell{2 * M_PI}, g, 3);
    for (int nu = 1; nu <= 3; ++nu)
        CHECK(states[nu - 1].energy == doctest::Approx(nu * nu / 4.0).epsilon(1e-8));
}

TEST_CASE("linear ramp bound states sit at the Airy zeros") {
    // -psi'' + r psi = E psi with psi(0)=0 and a decaying tail: E_n = -a_n
    // where a_n are the zeros of Ai (reference values).
    RadialGrid g(11.0, 8001);
    auto states = find_bound_states(LinearRamp{1.0}, g, 3);
    const double airy[] = {2.338107410459767, 4.087949444130970, 5.520559828095515};
    for (int i = 0; i < 3; ++i)
        CHECK(std::abs(states[i].energy - airy[i]) < 1e-6 * airy[i]);
}

TEST_CASE("energies increase with nu and insufficient spectra are reported") {
    RadialGrid g(M_PI, 801);
    auto states = find_bound_states(InfiniteWell{M_PI}, g, 3);
    CHECK(states[0].energy < states[1].energy);
    CHECK(states[1].energy < states[2].energy);

    // The free half-axis holds no bound state at all.
    CHECK_THROWS_AS(find_bound_states(FreeHalfAxis{}, g, 1), ValidationError);
}

TEST_CASE("centroid oracles") {
    RadialGrid g(M_PI, 2001);
    GridFunction ground = GridFunction::sampled(
        g, [](double r) { return std::sqrt(2.0 / M_PI) * std::sin(r); });
    CHECK(centroid(ground) == doctest::Approx(M_PI / 2).epsilon(1e-8));

    // half-wave on [0, pi/2], zero beyond: symmetric about pi/4
    GridFunction half(g, std::vector<double>(g.n_points));
    for (int i = 0; i < half.size(); ++i)
        half[i] = g.r(i) <= M_PI_2 ? std::sin(2.0 * g.r(i)) : 0.0;
    CHECK(centroid(half) == doctest::Approx(M_PI / 4).epsilon(1e-6));
    CHECK(centroid(half) > 0.0);
    CHECK(centroid(half) < g.r_max);
}

TEST_CASE("decompose_blocks: one well-then-barrier block per bump when gathering") {
    // Raising the spectral weight pulls the state toward the origin; the
    // perturbation digs a well before it raises a barrier inside each bump.
    RadialGrid g(M_PI, 4001);
    PotentialModel well = InfiniteWell{M_PI};

    for (int nu : {1, 2}) {
        TransformResult tr = apply_weight_change_level(well, g, nu, 2.0);
        GridFunction phi0 = integrate_regular(tr.V0, tr.weight.E0nu,
                                              small_r_series(well, tr.weight.E0nu, g.h));
        auto knots = find_zeros(phi0, true);
        // drop the wall node itself; block boundaries include the endpoints
        while (!knots.empty() && knots.back() > g.r_max - g.h) knots.pop_back();
        auto dec = decompose_blocks(tr.delta_V, knots);
        REQUIRE(dec.blocks.size() == static_cast<size_t>(nu));
        for (const auto& blk : dec.blocks) {
            REQUIRE(blk.sign_pattern.size() == 2);
            CHECK(blk.sign_pattern[0] == -1);
            CHECK(blk.sign_pattern[1] == +1);
            CHECK(blk.well_depth < 0.0);
            CHECK(blk.barrier_peak > 0.0);
        }
    }
}

TEST_CASE("decompose_blocks: mirror ordering when the weight is lowered") {
    RadialGrid g(M_PI, 4001);
    PotentialModel well = InfiniteWell{M_PI};
    TransformResult tr = apply_weight_change_level(well, g, 1, 0.5);
    auto dec = decompose_blocks(tr.delta_V, {});
    REQUIRE(dec.blocks.size() == 1);
    REQUIRE(dec.blocks[0].sign_pattern.size() == 2);
    CHECK(dec.blocks[0].sign_pattern[0] == +1);
    CHECK(dec.blocks[0].sign_pattern[1] == -1);
}

TEST_CASE("decompose_blocks: identity weight change leaves empty patterns") {
    RadialGrid g(M_PI, 2001);
    TransformResult tr = apply_weight_change_level(InfiniteWell{M_PI}, g, 1, 1.0);
    auto dec = decompose_blocks(tr.delta_V, {});
    REQUIRE(dec.blocks.size() == 1);
    CHECK(dec.blocks[0].sign_pattern.empty());
}

TEST_CASE("block boundaries stay within h of the knots") {
    RadialGrid g(M_PI, 4001);
    PotentialModel well = InfiniteWell{M_PI};
    TransformResult tr = apply_weight_change_level(well, g, 2, 3.0);
    GridFunction phi0 = integrate_regular(tr.V0, tr.weight.E0nu,
                                          small_r_series(well, tr.weight.E0nu, g.h));
    auto knots = find_zeros(phi0, true);
    while (!knots.empty() && knots.back() > g.r_max - g.h) knots.pop_back();
    REQUIRE(knots.size() == 1);

    // Every sign change of delta_V that separates a (well, barrier) pair from
    // the next bump's pair must sit on a knot.
    auto zs = find_zeros(tr.delta_V, true);
    bool found = false;
    for (double z : zs)
        if (std::abs(z - knots[0]) <= g.h) found = true;
    CHECK(found);
}

TEST_CASE("shift_report: recoil directions and isospectrality") {
    RadialGrid g(M_PI, 2001);
    PotentialModel well = InfiniteWell{M_PI};

    // press the ground state toward the wall: its centroid falls, the
    // partner state recoils outward, and no energy moves
    ShiftReport rep = shift_report(well, g, 1, 2.0, 2);
    CHECK(rep.levels[0].centroid_after < rep.levels[0].centroid_before);
    CHECK(rep.levels[1].centroid_after > rep.levels[1].centroid_before);
    for (const auto& l : rep.levels)
        CHECK(std::abs(l.energy_after - l.energy_before) <
              1e-6 * std::max(1.0, std::abs(l.energy_before)));

    // choosing the second state recoils the first one outward instead
    ShiftReport rep2 = shift_report(well, g, 2, 2.0, 2);
    CHECK(rep2.levels[1].centroid_after < rep2.levels[1].centroid_before);
    CHECK(rep2.levels[0].centroid_after > rep2.levels[0].centroid_before);
}

TEST_CASE("shift_report: identity ratio changes nothing") {
    RadialGrid g(M_PI, 2001);
    ShiftReport rep = shift_report(InfiniteWell{M_PI}, g, 1, 1.0, 2);
    for (const auto& l : rep.levels) {
        CHECK(std::abs(l.energy_after - l.energy_before) < 1e-10 * std::max(1.0, l.energy_before));
        CHECK(std::abs(l.centroid_after - l.centroid_before) < 1e-10);
    }
}
