#pragma once

#include <cstdint>
#include <filesystem>
#include <fstream>
#include <string>
#include <vector>

namespace qcadp {

/// CSV writer that stamps a provenance comment line ("# config_hash=... version=...
/// generated=...") before the header row, so every emitted artifact is attributable
/// to the config that produced it.
class CsvWriter {
public:
    CsvWriter(const std::filesystem::path& path, std::uint64_t config_hash,
              const std::vector<std::string>& columns);

    void row(const std::vector<double>& values);
    void row_mixed(const std::vector<std::string>& cells);

    /// Formats a double so it round-trips bit-exactly.
    static std::string num(double v);

private:
    std::ofstream out_;
    std::size_t n_cols_;
};

} // namespace qcadp
