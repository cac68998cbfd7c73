#include "qcadp/common/csv.hpp"

#include "qcadp/common/version.hpp"

#include <chrono>
#include <cstdio>
#include <stdexcept>

namespace qcadp {

CsvWriter::CsvWriter(const std::filesystem::path& path, std::uint64_t config_hash,
                     const std::vector<std::string>& columns)
    : out_(path), n_cols_(columns.size()) {
    if (!out_) {
        throw std::runtime_error("cannot open output file: " + path.string());
    }
    const auto now = std::chrono::system_clock::now();
    const auto secs = std::chrono::duration_cast<std::chrono::seconds>(now.time_since_epoch());
    char hash_buf[32];
    std::snprintf(hash_buf, sizeof(hash_buf), "%016llx",
                  static_cast<unsigned long long>(config_hash));
    out_ << "# config_hash=" << hash_buf << " version=" << kVersion
         << " generated=" << secs.count() << "\n";
    for (std::size_t i = 0; i < columns.size(); ++i) {
        out_ << columns[i] << (i + 1 < columns.size() ? "," : "");
    }
    out_ << "\n";
}

void CsvWriter::row(const std::vector<double>& values) {
    if (values.size() != n_cols_) throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < values.size(); ++i) {
        out_ << num(values[i]) << (i + 1 < values.size() ? "," : "");
    }
    out_ << "\n";
}

void CsvWriter::row_mixed(const std::vector<std::string>& cells) {
    if (cells.size() != n_cols_) throw std::runtime_error("csv row width mismatch");
    for (std::size_t i = 0; i < cells.size(); ++i) {
        out_ << cells[i] << (i + 1 < cells.size() ? "," : "");
    }
    out_ << "\n";
}

std::string CsvWriter::num(double v) {
    char buf[40];
    std::snprintf(buf, sizeof(buf), "%.17g", v);
    return buf;
}

} // namespace qcadp
