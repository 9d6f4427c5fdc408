#include "waveshift/io.hpp"

#include <cmath>

namespace waveshift {

namespace {

void add_grid_meta(CsvTable& t, const RadialGrid& g) {
    t.add_meta("r_max", g.r_max);
    t.add_meta("n_points", static_cast<double>(g.n_points));
}

void add_model_meta(CsvTable& t, const PotentialModel& m) {
    t.add_meta("model", model_tag(m));
    if (const auto* w = std::get_if<InfiniteWell>(&m)) t.add_meta("L", w->L);
    if (const auto* c = std::get_if<RepulsiveCoulomb>(&m)) {
        t.add_meta("Z", c->Z);
        t.add_meta("coulomb_convention", "Z_over_r");
    }
    if (const auto* l = std::get_if<LinearRamp>(&m)) {
        t.add_meta("g", l->g);
        t.add_meta("linear_convention", "g_times_r");
    }
}

std::vector<double> to_vec(const GridFunction& f) {
    return {f.samples().begin(), f.samples().end()};
}

RadialGrid grid_from_meta(const CsvTable& t) {
    double r_max = std::strtod(t.meta("r_max").c_str(), nullptr);
    int n = static_cast<int>(std::strtod(t.meta("n_points").c_str(), nullptr));
    return RadialGrid(r_max, n);
}

}  // namespace

CsvTable transform_to_csv(const TransformResult& tr, const PotentialModel& model) {
    CsvTable t;
    add_model_meta(t, model);
    add_grid_meta(t, tr.V.grid());
    t.add_meta("E0nu", tr.weight.E0nu);
    t.add_meta("c0_sq", tr.weight.c0_sq);
    t.add_meta("c_sq", tr.weight.c_sq);
    t.add_meta("delta_c_sq", tr.weight.delta_c_sq());
    if (tr.V0.origin_regularized) t.add_meta("origin_regularized", "true");
    t.add_column("r", tr.V.grid().radii());
    t.add_column("V0", to_vec(tr.V0));
    t.add_column("V", to_vec(tr.V));
    t.add_column("delta_V", to_vec(tr.delta_V));
    t.add_column("p", to_vec(tr.p));
    t.add_column("phi_nu", to_vec(tr.phi_nu));
    return t;
}

void write_transform_csv(const std::string& path, const TransformResult& tr,
                         const PotentialModel& model) {
    write_csv(path, transform_to_csv(tr, model));
}

CsvTable bsec_to_csv(const BsecSystem& sys) {
    CsvTable t;
    add_model_meta(t, sys.model);
    add_grid_meta(t, sys.V.grid());
    t.add_meta("kb", sys.k_b);
    t.add_meta("Eb", sys.k_b * sys.k_b);
    t.add_meta("delta_c_sq", sys.delta_c_sq);
    t.add_meta("gathering", sys.gathering ? "true" : "false");
    if (sys.V.origin_regularized) t.add_meta("origin_regularized", "true");
    t.add_column("r", sys.V.grid().radii());
    t.add_column("V", to_vec(sys.V));
    t.add_column("psi", to_vec(sys.psi));
    t.add_column("p", to_vec(sys.p));
    return t;
}

void write_bsec_csv(const std::string& path, const BsecSystem& sys) {
    write_csv(path, bsec_to_csv(sys));
}

BsecSystem read_bsec_csv(const std::string& path) {
    CsvTable t = read_csv(path);
    RadialGrid grid = grid_from_meta(t);
    double k_b = std::strtod(t.meta("kb").c_str(), nullptr);
    double dc2 = std::strtod(t.meta("delta_c_sq").c_str(), nullptr);
    if (!(k_b > 0.0)) throw ValidationError(path + ": missing or invalid kb metadata");

    PotentialModel model = FreeHalfAxis{};
    std::string tag = t.meta("model");
    if (tag == "coulomb")
        model = RepulsiveCoulomb{std::strtod(t.meta("Z").c_str(), nullptr)};
    else if (tag == "linear")
        model = LinearRamp{std::strtod(t.meta("g").c_str(), nullptr)};
    else if (tag == "well")
        throw ValidationError(path + ": well systems are not scattering inputs");

    GridFunction V(grid, t.column("V"));
    V.origin_regularized = t.meta("origin_regularized") == "true";
    GridFunction psi(grid, t.column("psi"));
    GridFunction p(grid, t.column("p"));
    return BsecSystem{k_b, dc2, model, std::move(V), std::move(psi), std::move(p), dc2 > 0.0};
}

CsvTable scan_to_csv(const PhaseShiftScan& scan) {
    CsvTable t;
    t.add_meta("match_r1", scan.window.first);
    t.add_meta("match_r2", scan.window.second);
    std::vector<double> ks(scan.energies.size());
    for (size_t i = 0; i < ks.size(); ++i) ks[i] = std::sqrt(scan.energies[i]);
    t.add_column("E", scan.energies);
    t.add_column("k", ks);
    t.add_column("delta_unwrapped", scan.deltas_unwrapped);
    t.add_column("delta_reduced", scan.deltas_reduced);
    return t;
}

void write_scan_csv(const std::string& path, const PhaseShiftScan& scan) {
    write_csv(path, scan_to_csv(scan));
}

CsvTable shift_report_to_csv(const ShiftReport& rep, const PotentialModel& model) {
    CsvTable t;
    add_model_meta(t, model);
    add_grid_meta(t, rep.transform.V.grid());
    t.add_meta("E0nu", rep.weight.E0nu);
    t.add_meta("c0_sq", rep.weight.c0_sq);
    t.add_meta("c_sq", rep.weight.c_sq);
    t.add_meta("delta_c_sq", rep.weight.delta_c_sq());
    std::vector<double> nu, eb, ea, cb, ca;
    for (const auto& l : rep.levels) {
        nu.push_back(l.nu);
        eb.push_back(l.energy_before);
        ea.push_back(l.energy_after);
        cb.push_back(l.centroid_before);
        ca.push_back(l.centroid_after);
    }
    t.add_column("nu", nu);
    t.add_column("energy_before", eb);
    t.add_column("energy_after", ea);
    t.add_column("centroid_before", cb);
    t.add_column("centroid_after", ca);
    return t;
}

void write_shift_report_csv(const std::string& path, const ShiftReport& rep,
                            const PotentialModel& model) {
    write_csv(path, shift_report_to_csv(rep, model));
}

}  // namespace waveshift
