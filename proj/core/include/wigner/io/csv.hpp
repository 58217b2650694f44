#pragma once

#include <string>
#include <vector>

namespace wigner::io {

// Rectangular table with a mandatory header; cells are stored already formatted.
struct CsvTable {
    std::string name;
    std::vector<std::string> header;
    std::vector<std::vector<std::string>> rows;

    void add_row(const std::vector<double>& values);
    void add_row(std::vector<std::string> cells);
};

// 17 significant digits, shortest form that round-trips.
std::string format_number(double v);

// ',' delimiter, '\n' line ends, header first.
std::string render_csv(const CsvTable& table);
// Lines starting with '#' are skipped; throws ConfigError on ragged rows or a missing header.
CsvTable parse_csv(const std::string& text);

struct ColumnTolerance {
    double abs;
    double rel;
};

struct GoldenReport {
    bool passed;
    bool structural;  // schema mismatch or empty golden
    std::string message;
};

// Golden files may carry a line "#tol,<abs>:<rel>,..." with one entry per column; otherwise
// every column uses abs 1e-9, rel 0. Numeric cells pass when |got - want| <= abs + rel |want|,
// other cells must match exactly.
GoldenReport verify_golden(const CsvTable& produced, const std::string& golden_text);

}  // namespace wigner::io
