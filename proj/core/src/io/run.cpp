#include "wigner/io/run.hpp"

#include <sstream>

#include "wigner/closed_forms.hpp"
#include "wigner/gaussian.hpp"
#include "wigner/liouville.hpp"
#include "wigner/phase_space.hpp"
#include "wigner/tunneling.hpp"
#include "wigner/verify.hpp"

namespace wigner::io {

namespace {

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

PhaseSpaceGrid make_grid(const AxisSpec& x, const XiSpec& xi) {
    return PhaseSpaceGrid(Grid1D::spanning(x.min, x.max, x.count), Grid1D::symmetric(xi.max, xi.count));
}

void append_field(CsvTable& table, const WignerField& field, std::optional<double> lead) {
    const auto& g = field.grid;
    for (std::size_t i = 0; i < g.x().count(); ++i) {
        for (std::size_t k = 0; k < g.xi().count(); ++k) {
            if (lead) {
                table.add_row(std::vector<double>{*lead, g.x().node(i), g.xi().node(k), field.at(i, k)});
            } else {
                table.add_row(std::vector<double>{g.x().node(i), g.xi().node(k), field.at(i, k)});
            }
        }
    }
}

std::vector<CsvTable> run_transform(const TransformConfig& c) {
    const closed_forms::AnalyticState state(c.state, c.hbar);
    const PhaseSpaceGrid grid = make_grid(c.x_grid, c.xi_grid);
    const WignerField field = c.analytic ? closed_forms::sample_wigner(state, grid)
                                         : wigner_transform(closed_forms::sample_state(state, grid.x()), grid);
    CsvTable t{"wigner", {"x", "xi", "W"}, {}};
    append_field(t, field, std::nullopt);
    return {t};
}

std::vector<CsvTable> run_propagate(const PropagateConfig& c) {
    const closed_forms::AnalyticState state(c.state, c.hbar);
    const liouville::OscillatorParams params(c.gamma, c.drive, c.hbar);
    const auto initial = liouville::analytic_initial(state);
    const PhaseSpaceGrid grid = make_grid(c.x_grid, c.xi_grid);
    CsvTable t{"field", {"t", "x", "xi", "W"}, {}};
    for (double time : c.time.nodes()) {
        append_field(t, liouville::propagate_field(initial, params, time, grid), time);
    }
    return {t};
}

std::vector<CsvTable> run_gaussian(const GaussianConfig& c) {
    const gaussian::GaussianPacket packet{c.a, c.p0, c.hbar};
    const liouville::OscillatorParams params(c.gamma, c.drive, c.hbar);
    const Grid1D xs = Grid1D::spanning(c.x_grid.min, c.x_grid.max, c.x_grid.count);
    CsvTable main{"density", {"t", "x", "density"}, {}};
    CsvTable moments{"moments", {"t", "v", "A"}, {}};
    for (double time : c.time.nodes()) {
        const auto shape = gaussian::packet_shape(packet, params, time);
        moments.add_row(std::vector<double>{time, shape.v, shape.A});
        for (std::size_t i = 0; i < xs.count(); ++i) {
            main.add_row(std::vector<double>{time, xs.node(i), gaussian::density(shape, c.hbar, xs.node(i))});
        }
    }
    return {main, moments};
}

std::vector<CsvTable> run_tunnel(const TunnelConfig& c) {
    CsvTable main{"survival", {"p0", "t", "P"}, {}};
    CsvTable summary{"summary", {"p0", "p_crit", "P_inf", "regime", "E_q", "E_c"}, {}};
    const auto times = c.time.nodes();
    for (double p0 : c.p0) {
        const tunneling::TunnelScenario scenario(gaussian::GaussianPacket{c.a, p0, c.hbar}, c.omega, c.drive);
        for (double time : times) {
            main.add_row(std::vector<double>{p0, time, tunneling::survival_probability(scenario, time)});
        }
        const auto r = tunneling::report(scenario);
        summary.add_row(std::vector<std::string>{format_number(p0), format_number(r.p_crit), format_number(r.P_inf),
                                                 tunneling::to_string(r.regime), format_number(r.E_q),
                                                 format_number(r.E_c)});
    }
    return {main, summary};
}

std::vector<CsvTable> run_eigen(const EigenConfig& c) {
    CsvTable main{"spectrum", {"n", "E_n"}, {}};
    for (int n = 0; n <= c.n_max; ++n) {
        main.add_row(std::vector<double>{static_cast<double>(n), closed_forms::harmonic_energy(n, c.omega, c.hbar)});
    }
    std::vector<CsvTable> out{main};
    if (c.x_grid) {
        const PhaseSpaceGrid grid = make_grid(*c.x_grid, *c.xi_grid);
        CsvTable fields{"fields", {"n", "x", "xi", "W"}, {}};
        for (int n = 0; n <= c.n_max; ++n) {
            const closed_forms::AnalyticState state(closed_forms::HarmonicEigen{n, c.omega, true}, c.hbar);
            append_field(fields, closed_forms::sample_wigner(state, grid), static_cast<double>(n));
        }
        out.push_back(std::move(fields));
    }
    return out;
}

std::vector<CsvTable> run_verify(const VerifyConfig& c) {
    CsvTable t{"checks", {"check", "passed", "residual", "tolerance"}, {}};
    for (const auto& r : verify::run_invariant_suite(c.seed)) {
        t.add_row(std::vector<std::string>{r.name, r.passed ? "true" : "false", format_number(r.residual),
                                           format_number(r.tolerance)});
    }
    return {t};
}

}  // namespace

std::vector<CsvTable> run(const RunConfig& config) {
    return std::visit(overloaded{
                          [](const TransformConfig& c) { return run_transform(c); },
                          [](const PropagateConfig& c) { return run_propagate(c); },
                          [](const GaussianConfig& c) { return run_gaussian(c); },
                          [](const TunnelConfig& c) { return run_tunnel(c); },
                          [](const EigenConfig& c) { return run_eigen(c); },
                          [](const VerifyConfig& c) { return run_verify(c); },
                      },
                      config);
}

std::string plot_script(const RunConfig& config, const std::string& csv_path) {
    struct Mapping {
        const char* x;
        const char* y;
        const char* z;
        const char* series;
    };
    static const Mapping maps[] = {
        {"x", "xi", "W", ""},   {"x", "xi", "W", "t"}, {"x", "density", "", "t"},
        {"t", "P", "", "p0"},   {"n", "E_n", "", ""},  {"check", "residual", "", ""},
    };
    const Mapping& m = maps[config.index()];
    std::ostringstream out;
    out << "# plot mapping for " << csv_path << "\n";
    out << "# command: " << command_name(config) << "\n";
    out << "# horizontal: " << m.x << "\n";
    out << "# vertical: " << m.y << "\n";
    if (*m.z) {
        out << "# colour: " << m.z << "\n";
    }
    if (*m.series) {
        out << "# one curve or panel per distinct value of: " << m.series << "\n";
    }
    return out.str();
}

}  // namespace wigner::io
