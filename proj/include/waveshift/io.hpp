#pragma once

#include <string>

#include "waveshift/csv.hpp"
#include "waveshift/scattering.hpp"
#include "waveshift/spectrum.hpp"
#include "waveshift/transform.hpp"

namespace waveshift {

// CSV serialization. Every table carries the parameters needed to reproduce
// the run in its metadata header.

CsvTable transform_to_csv(const TransformResult& tr, const PotentialModel& model);
void write_transform_csv(const std::string& path, const TransformResult& tr,
                         const PotentialModel& model);

CsvTable bsec_to_csv(const BsecSystem& sys);
void write_bsec_csv(const std::string& path, const BsecSystem& sys);
/// Rebuilds V/psi/p and the scalar parameters; the model comes back as a tag
/// only (free/coulomb/linear), which is enough for the downstream scans.
BsecSystem read_bsec_csv(const std::string& path);

CsvTable scan_to_csv(const PhaseShiftScan& scan);
void write_scan_csv(const std::string& path, const PhaseShiftScan& scan);

CsvTable shift_report_to_csv(const ShiftReport& rep, const PotentialModel& model);
void write_shift_report_csv(const std::string& path, const ShiftReport& rep,
                            const PotentialModel& model);

}  // namespace waveshift
