#pragma once

#include <cmath>
#include <functional>
#include <span>
#include <vector>

#include "waveshift/errors.hpp"

namespace waveshift {

/// Uniform radial grid on [0, r_max]. n_points is odd so that composite
/// Simpson covers the whole interval without a trailing patch.
struct RadialGrid {
    double r_max = 0.0;
    int n_points = 0;
    double h = 0.0;

    RadialGrid() = default;
    RadialGrid(double r_max_, int n_points_) : r_max(r_max_), n_points(n_points_) {
        if (!(r_max > 0.0)) throw ValidationError("RadialGrid: r_max must be > 0");
        if (n_points < 9) throw ValidationError("RadialGrid: n_points must be >= 9");
        if (n_points % 2 == 0) throw ValidationError("RadialGrid: n_points must be odd");
        h = r_max / (n_points - 1);
    }

    double r(int i) const { return i * h; }

    std::vector<double> radii() const {
        std::vector<double> rs(n_points);
        for (int i = 0; i < n_points; ++i) rs[i] = r(i);
        return rs;
    }

    bool operator==(const RadialGrid& o) const {
        return r_max == o.r_max && n_points == o.n_points;
    }
};

/// A real function sampled on a RadialGrid. Value semantics; samples must be
/// finite (a singular model origin is replaced by its r=h value and flagged
/// via origin_regularized).
class GridFunction {
public:
    GridFunction() = default;

    GridFunction(const RadialGrid& grid, std::vector<double> samples)
        : grid_(grid), samples_(std::move(samples)) {
        if (static_cast<int>(samples_.size()) != grid_.n_points)
            throw ValidationError("GridFunction: sample count does not match grid");
        for (double v : samples_)
            if (!std::isfinite(v)) throw ValidationError("GridFunction: non-finite sample");
    }

    static GridFunction zeros(const RadialGrid& grid) {
        return GridFunction(grid, std::vector<double>(grid.n_points, 0.0));
    }

    template <typename F>
    static GridFunction sampled(const RadialGrid& grid, F&& f) {
        std::vector<double> s(grid.n_points);
        for (int i = 0; i < grid.n_points; ++i) s[i] = f(grid.r(i));
        return GridFunction(grid, std::move(s));
    }

    const RadialGrid& grid() const { return grid_; }
    int size() const { return grid_.n_points; }
    double r(int i) const { return grid_.r(i); }

    double operator[](int i) const { return samples_[i]; }
    double& operator[](int i) { return samples_[i]; }

    std::span<const double> samples() const { return samples_; }
    std::vector<double>& mutable_samples() { return samples_; }

    double max_abs() const {
        double m = 0.0;
        for (double v : samples_) m = std::max(m, std::abs(v));
        return m;
    }

    /// Linear interpolation inside the domain; clamps outside.
    double interpolate(double r) const {
        if (r <= 0.0) return samples_.front();
        if (r >= grid_.r_max) return samples_.back();
        double x = r / grid_.h;
        int i = static_cast<int>(x);
        if (i >= grid_.n_points - 1) return samples_.back();
        double t = x - i;
        return (1.0 - t) * samples_[i] + t * samples_[i + 1];
    }

    bool origin_regularized = false;

private:
    RadialGrid grid_;
    std::vector<double> samples_;
};

inline void require_same_grid(const GridFunction& a, const GridFunction& b, const char* what) {
    if (!(a.grid() == b.grid()))
        throw ValidationError(std::string(what) + ": operands live on different grids");
}

}  // namespace waveshift
