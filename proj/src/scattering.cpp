#include "waveshift/scattering.hpp"

#include <algorithm>
#include <cmath>

#include "waveshift/numerics.hpp"
#include "waveshift/transform.hpp"

namespace waveshift {

namespace {

std::pair<double, double> series_for_potential(const GridFunction& V, double E) {
    double v0 = V.origin_regularized ? V[1] : V[0];
    return free_series_start(E, v0, V.grid().h);
}

double reduce_mod_pi(double delta) {
    double d = std::remainder(delta, M_PI);  // [-pi/2, pi/2]
    if (d <= -M_PI_2) d += M_PI;
    return d;
}

struct TwoPointMatch {
    double delta_reduced;
    int zeros_below_r1;  // interior zeros of phi strictly inside (0, r1)
    double k;
    double r1;
};

TwoPointMatch match_phase(const GridFunction& V, double E, std::pair<double, double> window) {
    if (!(E > 0.0)) throw ValidationError("phase_shift: E must be > 0");
    const RadialGrid& g = V.grid();
    double k = std::sqrt(E);

    int i1 = static_cast<int>(std::lround(window.first / g.h));
    int i2 = static_cast<int>(std::lround(window.second / g.h));
    if (i1 < 1 || i2 <= i1 || i2 > g.n_points - 1)
        throw ValidationError("phase_shift: window outside the grid");
    double r1 = g.r(i1), r2 = g.r(i2);

    // cond_F of [[sin kr1, cos kr1], [sin kr2, cos kr2]] is 2/|sin k(r1-r2)|.
    double det = std::sin(k * (r1 - r2));
    if (2.0 / std::abs(det) > 1e8)
        throw NumericalError("degenerate matching points: k(r2-r1) too close to a multiple of pi");

    GridFunction phi = integrate_regular(V, E, series_for_potential(V, E));
    double b1 = k * phi[i1], b2 = k * phi[i2];
    double u = (b1 * std::cos(k * r2) - b2 * std::cos(k * r1)) / det;
    double v = (b2 * std::sin(k * r1) - b1 * std::sin(k * r2)) / det;
    double delta = std::atan2(v, u);

    int zeros = 0;
    for (int i = 1; i < i1; ++i) {
        if (phi[i] == 0.0) {
            ++zeros;
            continue;
        }
        if (phi[i] * phi[i + 1] < 0.0) ++zeros;
    }

    return {reduce_mod_pi(delta), zeros, k, r1};
}

/// Branch-anchored phase: continuous in E as long as the potential vanishes
/// identically beyond r1 (then the sine form is exact at the matching radii
/// and node count pins the multiple of pi).
double absolute_phase(const GridFunction& V, double E, std::pair<double, double> window) {
    TwoPointMatch m = match_phase(V, E, window);
    int asymptotic_count = static_cast<int>(std::floor((m.k * m.r1 + m.delta_reduced) / M_PI));
    return m.delta_reduced + M_PI * (m.zeros_below_r1 - asymptotic_count);
}

}  // namespace

BsecSystem build_bsec_free(double k_b, double delta_c_sq, const RadialGrid& grid) {
    if (!(k_b > 0.0)) throw ValidationError("build_bsec_free: k_b must be > 0");
    if (!(delta_c_sq >= 0.0)) throw ValidationError("build_bsec_free: delta_c_sq must be >= 0");

    GridFunction phi0 = GridFunction::sampled(
        grid, [k_b](double r) { return std::sin(k_b * r) / k_b; });
    double k3 = 4.0 * k_b * k_b * k_b;
    GridFunction p = GridFunction::sampled(grid, [&](double r) {
        return 1.0 + delta_c_sq * (2.0 * k_b * r - std::sin(2.0 * k_b * r)) / k3;
    });

    GridFunction V0 = GridFunction::zeros(grid);
    GridFunction V = transform_potential(V0, phi0, p, delta_c_sq);
    GridFunction psi = transform_chosen(phi0, p);
    return BsecSystem{k_b, delta_c_sq, FreeHalfAxis{}, std::move(V), std::move(psi),
                      std::move(p), delta_c_sq > 0.0};
}

BsecSystem build_bsec_numeric(const PotentialModel& model, double E_b, double delta_c_sq,
                              const RadialGrid& grid) {
    validate_model(model);
    if (std::holds_alternative<InfiniteWell>(model))
        throw ValidationError("build_bsec_numeric: the hard-wall well is not a scattering model");
    if (!(E_b > 0.0)) throw ValidationError("build_bsec_numeric: E_b must be > 0");
    if (!(delta_c_sq >= 0.0))
        throw ValidationError("build_bsec_numeric: delta_c_sq must be >= 0");

    GridFunction V0 = evaluate(model, grid);
    GridFunction phi0 = integrate_regular(V0, E_b, small_r_series(model, E_b, grid.h));
    double k_b = std::sqrt(E_b);
    if (delta_c_sq == 0.0)
        return BsecSystem{k_b, 0.0, model, V0, phi0, GridFunction::sampled(grid, [](double) {
                              return 1.0;
                          }),
                          false};
    GridFunction p = compute_p(phi0, delta_c_sq);
    GridFunction V = transform_potential(V0, phi0, p, delta_c_sq);
    GridFunction psi = transform_chosen(phi0, p);
    return BsecSystem{k_b, delta_c_sq, model, std::move(V), std::move(psi), std::move(p), true};
}

double phase_shift(const GridFunction& V, double E, std::pair<double, double> window) {
    return match_phase(V, E, window).delta_reduced;
}

PhaseShiftScan scan_phase(const GridFunction& V, const std::vector<double>& energies,
                          std::pair<double, double> window) {
    PhaseShiftScan scan;
    scan.window = window;
    scan.energies = energies;
    scan.deltas_reduced.reserve(energies.size());
    scan.deltas_unwrapped.reserve(energies.size());
    for (double E : energies) {
        double d = phase_shift(V, E, window);
        scan.deltas_reduced.push_back(d);
        if (scan.deltas_unwrapped.empty()) {
            scan.deltas_unwrapped.push_back(d);
        } else {
            double prev = scan.deltas_unwrapped.back();
            double m = std::round((prev - d) / M_PI);
            scan.deltas_unwrapped.push_back(d + m * M_PI);
        }
    }
    return scan;
}

BeatAnalysis beating_analysis(const GridFunction& V, double E) {
    GridFunction phi = integrate_regular(V, E, series_for_potential(V, E));

    // Oscillation peaks of |phi| form the envelope samples.
    std::vector<double> pr, pv;
    for (int i = 1; i + 1 < phi.size(); ++i) {
        double a = std::abs(phi[i]);
        if (a >= std::abs(phi[i - 1]) && a > std::abs(phi[i + 1])) {
            pr.push_back(phi.r(i));
            pv.push_back(a);
        }
    }

    BeatAnalysis out{0.0, {}, {}};
    if (pv.size() >= 3) {
        // Alternating extrema with hysteresis so that grid-sampling wobble of
        // the peak values does not register as modulation.
        double lo = *std::min_element(pv.begin(), pv.end());
        double hi = *std::max_element(pv.begin(), pv.end());
        double th = 0.05 * (hi - lo);
        size_t cand = 0;
        int dir = 0;  // +1 rising toward a maximum, -1 falling toward a minimum
        for (size_t j = 1; j < pv.size(); ++j) {
            if (dir >= 0) {
                if (pv[j] >= pv[cand]) {
                    cand = j;
                } else if (pv[cand] - pv[j] > th) {
                    if (dir != 0) out.envelope_maxima.emplace_back(pr[cand], pv[cand]);
                    cand = j;
                    dir = -1;
                }
            } else {
                if (pv[j] <= pv[cand]) {
                    cand = j;
                } else if (pv[j] - pv[cand] > th) {
                    out.envelope_minima.emplace_back(pr[cand], pv[cand]);
                    cand = j;
                    dir = +1;
                }
            }
            if (dir == 0 && pv[cand] - pv[j] > th) dir = -1;
        }
    }

    if (out.envelope_minima.size() < 3)
        throw NumericalError("no beats resolved: fewer than 3 envelope minima in the grid");

    std::vector<double> gaps;
    for (size_t j = 1; j < out.envelope_minima.size(); ++j)
        gaps.push_back(out.envelope_minima[j].first - out.envelope_minima[j - 1].first);
    std::sort(gaps.begin(), gaps.end());
    size_t mid = gaps.size() / 2;
    out.beat_period =
        gaps.size() % 2 ? gaps[mid] : 0.5 * (gaps[mid - 1] + gaps[mid]);
    return out;
}

ResonanceEstimate truncate_and_width(const BsecSystem& sys, double R_cut,
                                     std::pair<double, double> energy_window, int n_scan) {
    const RadialGrid& g = sys.V.grid();
    double E_b = sys.k_b * sys.k_b;
    auto [E_lo, E_hi] = energy_window;
    if (!(E_lo > 0.0 && E_hi > E_lo))
        throw ValidationError("truncate_and_width: need 0 < E_lo < E_hi");
    if (!(E_lo < E_b && E_b < E_hi))
        throw ValidationError("truncate_and_width: energy window must bracket E_b");
    if (n_scan < 8) throw ValidationError("truncate_and_width: n_scan must be >= 8");

    // Snap the cut to the nearest knot so blocks stay whole.
    std::vector<double> knots = find_zeros(sys.psi, /*skip_origin=*/true);
    if (knots.empty()) throw ValidationError("truncate_and_width: psi has no knots");
    double knot = knots[0];
    for (double z : knots)
        if (std::abs(z - R_cut) < std::abs(knot - R_cut)) knot = z;
    int cut_idx = static_cast<int>(std::lround(knot / g.h));
    double R = g.r(cut_idx);

    GridFunction V_cut = sys.V;
    for (int i = cut_idx + 1; i < g.n_points; ++i) V_cut[i] = 0.0;

    // Matching window in the exactly-free region past the cut.
    double r1 = R + 1.0;
    auto window_for = [&](double E) {
        double k = std::sqrt(E);
        return std::pair<double, double>{r1, r1 + M_PI_2 / k};
    };
    if (r1 + M_PI_2 / std::sqrt(E_lo) >= g.r_max)
        throw ValidationError("truncate_and_width: grid too short for matching past the cut");

    auto dabs = [&](double E) { return absolute_phase(V_cut, E, window_for(E)); };

    double d_lo = dabs(E_lo), d_hi = dabs(E_hi);
    if (d_hi - d_lo < 2.0)
        throw NumericalError("no resonance in window: unwrapped phase rise " +
                             std::to_string(d_hi - d_lo) + " < 2 rad");

    // The absolute phase climbs by ~pi through the resonance; bisect onto the
    // mid-rise point, which is the steepest-ascent energy of the unwrapped
    // phase (its pi/2 crossing relative to the slow background).
    double target = 0.5 * (d_lo + d_hi);
    double Ea = E_lo, Eb = E_hi;
    for (int it = 0; it < 200 && (Eb - Ea) > 1e-15 * E_b; ++it) {
        double Em = 0.5 * (Ea + Eb);
        if (dabs(Em) < target)
            Ea = Em;
        else
            Eb = Em;
    }
    double E_r = 0.5 * (Ea + Eb);

    // Width from the slope at E_r, with the probe spacing walked down until
    // the centered-difference estimate stabilizes.
    double eps = (E_hi - E_lo) / n_scan;
    double gamma = 0.0;
    for (int it = 0; it < 60; ++it) {
        double slope = (dabs(E_r + eps) - dabs(E_r - eps)) / (2.0 * eps);
        double new_gamma = 2.0 / slope;
        if (gamma != 0.0 && std::abs(new_gamma / gamma - 1.0) < 0.01) {
            gamma = new_gamma;
            break;
        }
        gamma = new_gamma;
        double next = std::abs(new_gamma) / 8.0;
        if (next >= eps || !(next > 0.0)) break;
        eps = std::max(next, 1e-14 * E_b);
    }
    if (!(gamma > 0.0))
        throw NumericalError("no resonance in window: non-positive width estimate");

    // Breit-Wigner residual over +-5 Gamma.
    double span = 5.0 * gamma;
    double fit_lo = std::max(E_lo, E_r - span), fit_hi = std::min(E_hi, E_r + span);
    double offset_sum = 0.0;
    std::vector<double> es(n_scan), ds(n_scan);
    for (int j = 0; j < n_scan; ++j) {
        es[j] = fit_lo + (fit_hi - fit_lo) * j / (n_scan - 1);
        ds[j] = dabs(es[j]);
        offset_sum += ds[j] - std::atan((es[j] - E_r) / (0.5 * gamma));
    }
    double offset = offset_sum / n_scan;
    double rss = 0.0;
    for (int j = 0; j < n_scan; ++j) {
        double resid = ds[j] - offset - std::atan((es[j] - E_r) / (0.5 * gamma));
        rss += resid * resid;
    }
    return ResonanceEstimate{R, E_r, gamma, std::sqrt(rss / n_scan)};
}

RearrangeResult rearrange_blocks(const BsecSystem& sys, const std::vector<int>& permutation,
                                 int n_blocks) {
    if (!std::holds_alternative<FreeHalfAxis>(sys.model))
        throw ValidationError(
            "rearrange_blocks: unequal block widths; only the free initial model is supported");
    const RadialGrid& g = sys.V.grid();
    double width = M_PI / sys.k_b;
    int w = static_cast<int>(std::lround(width / g.h));
    if (w < 4 || std::abs(w * g.h - width) > 1e-6 * width)
        throw ValidationError(
            "rearrange_blocks: grid step must subdivide the block width pi/k_b");
    if (n_blocks < 1 || (n_blocks + 1) * w >= g.n_points)
        throw ValidationError("rearrange_blocks: n_blocks does not fit in the grid");
    if (static_cast<int>(permutation.size()) != n_blocks)
        throw ValidationError("rearrange_blocks: permutation length must equal n_blocks");
    std::vector<bool> seen(n_blocks, false);
    for (int idx : permutation) {
        if (idx == kZeroBlock) continue;
        if (idx < 0 || idx >= n_blocks || seen[idx])
            throw ValidationError("rearrange_blocks: permutation is not a bijection");
        seen[idx] = true;
    }

    GridFunction V_new = sys.V;
    for (int j = 0; j < n_blocks; ++j) {
        int src = permutation[j];
        for (int t = 0; t < w; ++t)
            V_new[j * w + t] = (src == kZeroBlock) ? 0.0 : sys.V[src * w + t];
    }

    double E_b = sys.k_b * sys.k_b;
    GridFunction psi_new = integrate_regular(V_new, E_b, series_for_potential(V_new, E_b));

    // Per-block envelope peaks; the gathering property survives when they
    // keep decaying past the permuted region and nothing exceeds the original
    // global peak.
    int total_blocks = (g.n_points - 1) / w;
    std::vector<double> peak(total_blocks, 0.0);
    for (int b = 0; b < total_blocks; ++b)
        for (int i = b * w; i <= (b + 1) * w; ++i)
            peak[b] = std::max(peak[b], std::abs(psi_new[i]));

    constexpr double tol = 1e-3;
    bool gathered = psi_new.max_abs() <= sys.psi.max_abs() * (1.0 + tol);
    for (int b = std::max(1, n_blocks - 1); b + 1 < total_blocks && gathered; ++b)
        if (peak[b + 1] > peak[b] * (1.0 + tol)) gathered = false;

    return RearrangeResult{std::move(V_new), std::move(psi_new), gathered};
}

}  // namespace waveshift
