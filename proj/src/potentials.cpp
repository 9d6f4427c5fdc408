#include "waveshift/potentials.hpp"

#include <cmath>
#include <fstream>
#include <sstream>

#include "waveshift/numerics.hpp"

namespace waveshift {

namespace {

template <class... Ts>
struct Overload : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
Overload(Ts...) -> Overload<Ts...>;

}  // namespace

std::string model_tag(const PotentialModel& m) {
    return std::visit(Overload{[](const InfiniteWell&) { return std::string("well"); },
                               [](const FreeHalfAxis&) { return std::string("free"); },
                               [](const RepulsiveCoulomb&) { return std::string("coulomb"); },
                               [](const LinearRamp&) { return std::string("linear"); },
                               [](const Tabulated&) { return std::string("tabulated"); }},
                      m);
}

std::string model_describe(const PotentialModel& m) {
    return std::visit(
        Overload{[](const InfiniteWell& w) { return "well L=" + std::to_string(w.L); },
                 [](const FreeHalfAxis&) { return std::string("free"); },
                 [](const RepulsiveCoulomb& c) { return "coulomb Z=" + std::to_string(c.Z); },
                 [](const LinearRamp& l) { return "linear g=" + std::to_string(l.g); },
                 [](const Tabulated&) { return std::string("tabulated"); }},
        m);
}

bool singular_origin(const PotentialModel& m) {
    return std::holds_alternative<RepulsiveCoulomb>(m);
}

void validate_model(const PotentialModel& m) {
    std::visit(Overload{[](const InfiniteWell& w) {
                            if (!(w.L > 0.0)) throw ValidationError("well: L must be > 0");
                        },
                        [](const FreeHalfAxis&) {},
                        [](const RepulsiveCoulomb& c) {
                            if (!(c.Z > 0.0)) throw ValidationError("coulomb: Z must be > 0");
                        },
                        [](const LinearRamp&) {},
                        [](const Tabulated& t) {
                            if (t.f.size() == 0) throw ValidationError("tabulated: empty table");
                        }},
               m);
}

GridFunction evaluate(const PotentialModel& m, const RadialGrid& grid) {
    validate_model(m);
    return std::visit(
        Overload{
            [&](const InfiniteWell& w) {
                if (std::abs(grid.r_max - w.L) > 1e-12 * w.L)
                    throw ValidationError("well: grid r_max must equal the well width L");
                return GridFunction::zeros(grid);
            },
            [&](const FreeHalfAxis&) { return GridFunction::zeros(grid); },
            [&](const RepulsiveCoulomb& c) {
                std::vector<double> s(grid.n_points);
                for (int i = 1; i < grid.n_points; ++i) s[i] = c.Z / grid.r(i);
                s[0] = s[1];  // singular origin: regularized, never read by the integrator
                GridFunction f(grid, std::move(s));
                f.origin_regularized = true;
                return f;
            },
            [&](const LinearRamp& l) {
                return GridFunction::sampled(grid, [&](double r) { return l.g * r; });
            },
            [&](const Tabulated& t) {
                if (grid.r_max > t.f.grid().r_max * (1.0 + 1e-12))
                    throw ValidationError("tabulated: grid extends beyond the native table");
                if (t.f.grid() == grid) return t.f;
                return GridFunction::sampled(grid, [&](double r) { return t.f.interpolate(r); });
            }},
        m);
}

std::pair<double, double> small_r_series(const PotentialModel& m, double E, double h) {
    if (const auto* c = std::get_if<RepulsiveCoulomb>(&m)) {
        // Frobenius start absorbing the 1/r singularity: phi ~ r + (Z/2) r^2.
        double a = 0.5 * c->Z;
        return {h + a * h * h, 2.0 * h + 4.0 * a * h * h};
    }
    double v0 = 0.0;
    if (const auto* t = std::get_if<Tabulated>(&m)) v0 = t->f[0];
    return free_series_start(E, v0, h);
}

PotentialModel load_tabulated_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("tabulated: cannot open " + path);

    std::string line;
    if (!std::getline(in, line)) throw ValidationError("tabulated: empty file " + path);
    // One-line header; skip any leading metadata comments as well.
    while (!line.empty() && line[0] == '#') {
        if (!std::getline(in, line)) throw ValidationError("tabulated: no data in " + path);
    }

    std::vector<double> rs, vs;
    while (std::getline(in, line)) {
        if (line.empty() || line[0] == '#') continue;
        std::istringstream ss(line);
        std::string a, b;
        if (!std::getline(ss, a, ',') || !std::getline(ss, b, ','))
            throw ValidationError("tabulated: malformed row '" + line + "'");
        rs.push_back(std::stod(a));
        vs.push_back(std::stod(b));
    }
    if (rs.size() < 9) throw ValidationError("tabulated: need at least 9 samples");
    if (rs.front() != 0.0) throw ValidationError("tabulated: r column must start at 0");
    for (size_t i = 1; i < rs.size(); ++i)
        if (!(rs[i] > rs[i - 1]))
            throw ValidationError("tabulated: r column must be strictly increasing");
    if (rs.size() % 2 == 0)
        throw ValidationError("tabulated: sample count must be odd");

    RadialGrid grid(rs.back(), static_cast<int>(rs.size()));
    for (size_t i = 0; i < rs.size(); ++i)
        if (std::abs(rs[i] - grid.r(static_cast<int>(i))) > 1e-9 * grid.h)
            throw ValidationError("tabulated: r column must be uniformly spaced");
    return Tabulated{GridFunction(grid, std::move(vs))};
}

}  // namespace waveshift
