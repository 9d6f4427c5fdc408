#pragma once

#include <map>
#include <string>
#include <vector>

namespace waveshift {

/// Column-major table with '#'-prefixed key=value metadata lines, then a
/// column-name row, then data rows. Floats are written with the shortest
/// representation that round-trips, so identical runs produce identical bytes.
struct CsvTable {
    std::vector<std::pair<std::string, std::string>> metadata;
    std::vector<std::string> columns;
    std::vector<std::vector<double>> data;  // one vector per column

    void add_meta(const std::string& key, const std::string& value);
    void add_meta(const std::string& key, double value);
    void add_column(const std::string& name, std::vector<double> values);

    const std::vector<double>& column(const std::string& name) const;
    std::string meta(const std::string& key) const;  // "" if absent
};

/// Shortest round-trip decimal form of x.
std::string format_double(double x);

void write_csv(const std::string& path, const CsvTable& table);
CsvTable read_csv(const std::string& path);

}  // namespace waveshift
