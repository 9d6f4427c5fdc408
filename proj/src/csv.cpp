#include "waveshift/csv.hpp"

#include <charconv>
#include <cstdlib>
#include <fstream>
#include <sstream>

#include "waveshift/errors.hpp"

namespace waveshift {

void CsvTable::add_meta(const std::string& key, const std::string& value) {
    metadata.emplace_back(key, value);
}

void CsvTable::add_meta(const std::string& key, double value) {
    metadata.emplace_back(key, format_double(value));
}

void CsvTable::add_column(const std::string& name, std::vector<double> values) {
    if (!data.empty() && values.size() != data.front().size())
        throw ValidationError("CsvTable: ragged columns");
    columns.push_back(name);
    data.push_back(std::move(values));
}

const std::vector<double>& CsvTable::column(const std::string& name) const {
    for (size_t i = 0; i < columns.size(); ++i)
        if (columns[i] == name) return data[i];
    throw ValidationError("CsvTable: no column named '" + name + "'");
}

std::string CsvTable::meta(const std::string& key) const {
    for (const auto& [k, v] : metadata)
        if (k == key) return v;
    return "";
}

std::string format_double(double x) {
    char buf[64];
    auto res = std::to_chars(buf, buf + sizeof(buf), x);
    return std::string(buf, res.ptr);
}

void write_csv(const std::string& path, const CsvTable& table) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw ValidationError("cannot write " + path);
    for (const auto& [k, v] : table.metadata) out << "# " << k << "=" << v << "\n";
    for (size_t c = 0; c < table.columns.size(); ++c)
        out << table.columns[c] << (c + 1 < table.columns.size() ? "," : "");
    out << "\n";
    size_t rows = table.data.empty() ? 0 : table.data.front().size();
    for (size_t r = 0; r < rows; ++r) {
        for (size_t c = 0; c < table.data.size(); ++c)
            out << format_double(table.data[c][r]) << (c + 1 < table.data.size() ? "," : "");
        out << "\n";
    }
}

CsvTable read_csv(const std::string& path) {
    std::ifstream in(path);
    if (!in) throw ValidationError("cannot read " + path);
    CsvTable table;
    std::string line;
    bool header_seen = false;
    while (std::getline(in, line)) {
        if (!line.empty() && line.back() == '\r') line.pop_back();
        if (line.empty()) continue;
        if (line[0] == '#') {
            std::string body = line.substr(1);
            size_t start = body.find_first_not_of(' ');
            if (start == std::string::npos) continue;
            body = body.substr(start);
            size_t eq = body.find('=');
            if (eq != std::string::npos)
                table.metadata.emplace_back(body.substr(0, eq), body.substr(eq + 1));
            continue;
        }
        std::istringstream ss(line);
        std::string cell;
        if (!header_seen) {
            while (std::getline(ss, cell, ',')) {
                table.columns.push_back(cell);
                table.data.emplace_back();
            }
            header_seen = true;
            continue;
        }
        size_t c = 0;
        while (std::getline(ss, cell, ',')) {
            if (c >= table.data.size())
                throw ValidationError(path + ": row wider than header");
            table.data[c++].push_back(std::strtod(cell.c_str(), nullptr));
        }
        if (c != table.data.size()) throw ValidationError(path + ": short row");
    }
    if (!header_seen) throw ValidationError(path + ": no column header found");
    return table;
}

}  // namespace waveshift
