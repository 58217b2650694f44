#include <filesystem>
#include <fstream>
#include <iostream>
#include <sstream>

#include "CLI11.hpp"
#include "wigner/errors.hpp"
#include "wigner/io/config.hpp"
#include "wigner/io/csv.hpp"
#include "wigner/io/run.hpp"

namespace fs = std::filesystem;
using namespace wigner;

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) {
        throw io::ConfigError(path, "cannot open file");
    }
    std::ostringstream s;
    s << in.rdbuf();
    return s.str();
}

void write_file(const fs::path& path, const std::string& text) {
    std::ofstream out(path, std::ios::binary);
    out << text;
    if (!out) {
        throw Error("cannot write " + path.string());
    }
}

// out.csv -> out.<name>.csv
fs::path sibling(const fs::path& primary, const std::string& name) {
    fs::path p = primary;
    const std::string ext = p.has_extension() ? p.extension().string() : ".csv";
    p.replace_filename(p.stem().string() + "." + name + ext);
    return p;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Wigner phase-space toolkit"};
    app.require_subcommand(1);

    std::string config_path;
    std::string out_path;
    std::string golden_path;
    bool emit_plot = false;

    const char* commands[][2] = {
        {"transform", "Wigner function of a catalog state"},
        {"propagate", "transport a catalog state along the quadratic-potential flow"},
        {"gaussian", "evolved Gaussian packet density and moments"},
        {"tunnel", "survival probability at an inverted-oscillator barrier"},
        {"eigen", "harmonic oscillator spectrum and eigenfunction fields"},
        {"verify", "built-in invariant suite"},
    };
    for (const auto& c : commands) {
        CLI::App* sub = app.add_subcommand(c[0], c[1]);
        sub->add_option("--config", config_path, "JSON config file")->required()->check(CLI::ExistingFile);
        auto* out = sub->add_option("--out", out_path, "primary CSV path; stdout when omitted");
        sub->add_flag("--emit-plot", emit_plot, "write <out>.plot.txt with the column mapping")->needs(out);
        sub->add_option("--golden", golden_path, "compare the primary table against a golden CSV")
            ->check(CLI::ExistingFile);
    }

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? io::kSuccess : io::kConfigFailure;
    }
    const std::string command = app.get_subcommands().front()->get_name();

    io::RunConfig config;
    try {
        config = io::parse_config(read_file(config_path), command);
    } catch (const io::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return io::kConfigFailure;
    }

    try {
        const auto tables = io::run(config);
        if (out_path.empty()) {
            std::cout << io::render_csv(tables.front());
        } else {
            const fs::path primary(out_path);
            write_file(primary, io::render_csv(tables.front()));
            for (std::size_t i = 1; i < tables.size(); ++i) {
                write_file(sibling(primary, tables[i].name), io::render_csv(tables[i]));
            }
            if (emit_plot) {
                fs::path script = primary;
                script.replace_extension(".plot.txt");
                write_file(script, io::plot_script(config, primary.filename().string()));
            }
        }
        if (!golden_path.empty()) {
            const auto report = io::verify_golden(tables.front(), read_file(golden_path));
            if (!report.passed) {
                std::cerr << (report.structural ? "golden structural error: " : "golden mismatch:\n")
                          << report.message << "\n";
                return report.structural ? io::kConfigFailure : io::kNumericFailure;
            }
            std::cerr << "golden: ok\n";
        }
    } catch (const io::ConfigError& e) {
        std::cerr << "config error: " << e.what() << "\n";
        return io::kConfigFailure;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return io::kNumericFailure;
    }
    return io::kSuccess;
}
