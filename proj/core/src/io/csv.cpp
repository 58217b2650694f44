#include "wigner/io/csv.hpp"

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <optional>
#include <sstream>

#include "wigner/io/config.hpp"

namespace wigner::io {

namespace {

std::vector<std::string> split(const std::string& line) {
    std::vector<std::string> out;
    std::string cell;
    std::istringstream in(line);
    while (std::getline(in, cell, ',')) {
        out.push_back(cell);
    }
    if (!line.empty() && line.back() == ',') {
        out.emplace_back();
    }
    return out;
}

std::optional<double> to_number(const std::string& cell) {
    if (cell.empty()) {
        return std::nullopt;
    }
    char* end = nullptr;
    const double v = std::strtod(cell.c_str(), &end);
    if (end != cell.c_str() + cell.size()) {
        return std::nullopt;
    }
    return v;
}

}  // namespace

void CsvTable::add_row(const std::vector<double>& values) {
    std::vector<std::string> cells;
    cells.reserve(values.size());
    for (double v : values) {
        cells.push_back(format_number(v));
    }
    add_row(std::move(cells));
}

void CsvTable::add_row(std::vector<std::string> cells) {
    if (cells.size() != header.size()) {
        throw NumericalError("csv row width " + std::to_string(cells.size()) + " does not match header width " +
                             std::to_string(header.size()));
    }
    rows.push_back(std::move(cells));
}

std::string format_number(double v) {
    if (v == 0.0) {
        return "0";  // folds -0
    }
    char buf[40];
    std::snprintf(buf, sizeof buf, "%.17g", v);
    return buf;
}

std::string render_csv(const CsvTable& table) {
    std::string out;
    auto line = [&out](const std::vector<std::string>& cells) {
        for (std::size_t i = 0; i < cells.size(); ++i) {
            if (i) {
                out += ',';
            }
            out += cells[i];
        }
        out += '\n';
    };
    line(table.header);
    for (const auto& row : table.rows) {
        line(row);
    }
    return out;
}

CsvTable parse_csv(const std::string& text) {
    CsvTable t;
    std::istringstream in(text);
    std::string line;
    std::size_t line_no = 0;
    bool have_header = false;
    while (std::getline(in, line)) {
        ++line_no;
        if (!line.empty() && line.back() == '\r') {
            line.pop_back();
        }
        if (line.empty() || line[0] == '#') {
            continue;
        }
        auto cells = split(line);
        if (!have_header) {
            t.header = std::move(cells);
            have_header = true;
            continue;
        }
        if (cells.size() != t.header.size()) {
            throw ConfigError("line " + std::to_string(line_no), "row width does not match header");
        }
        t.rows.push_back(std::move(cells));
    }
    if (!have_header) {
        throw ConfigError("<csv>", "missing header row");
    }
    return t;
}

GoldenReport verify_golden(const CsvTable& produced, const std::string& golden_text) {
    CsvTable golden;
    try {
        golden = parse_csv(golden_text);
    } catch (const ConfigError& e) {
        return {false, true, std::string("golden is not a table: ") + e.what()};
    }
    if (golden.header != produced.header) {
        return {false, true, "header mismatch"};
    }
    if (golden.rows.size() != produced.rows.size()) {
        return {false, true,
                "row count mismatch: golden " + std::to_string(golden.rows.size()) + ", produced " +
                    std::to_string(produced.rows.size())};
    }
    if (golden.rows.empty()) {
        return {false, true, "golden has no data rows"};
    }

    std::vector<ColumnTolerance> tol(golden.header.size(), ColumnTolerance{1e-9, 0.0});
    std::istringstream in(golden_text);
    std::string line;
    while (std::getline(in, line)) {
        if (line.rfind("#tol,", 0) != 0) {
            continue;
        }
        auto cells = split(line.substr(5));
        if (cells.size() != tol.size()) {
            return {false, true, "#tol line width does not match header"};
        }
        for (std::size_t c = 0; c < cells.size(); ++c) {
            const auto colon = cells[c].find(':');
            auto a = to_number(cells[c].substr(0, colon));
            auto r = colon == std::string::npos ? std::optional<double>(0.0) : to_number(cells[c].substr(colon + 1));
            if (!a || !r || *a < 0.0 || *r < 0.0) {
                return {false, true, "malformed #tol entry for column " + golden.header[c]};
            }
            tol[c] = {*a, *r};
        }
        break;
    }

    constexpr std::size_t kMaxReported = 10;
    std::size_t mismatches = 0;
    std::ostringstream msg;
    for (std::size_t r = 0; r < golden.rows.size(); ++r) {
        for (std::size_t c = 0; c < golden.header.size(); ++c) {
            const std::string& want = golden.rows[r][c];
            const std::string& got = produced.rows[r][c];
            auto w = to_number(want);
            auto g = to_number(got);
            bool ok;
            if (w && g) {
                ok = std::abs(*g - *w) <= tol[c].abs + tol[c].rel * std::abs(*w);
            } else {
                ok = want == got;
            }
            if (!ok) {
                if (mismatches < kMaxReported) {
                    msg << "row " << r + 1 << " column " << golden.header[c] << ": expected " << want << ", got "
                        << got << "\n";
                }
                ++mismatches;
            }
        }
    }
    if (mismatches) {
        msg << mismatches << " mismatching cell(s)";
        return {false, false, msg.str()};
    }
    return {true, false, "ok"};
}

}  // namespace wigner::io
