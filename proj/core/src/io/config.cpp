#include "wigner/io/config.hpp"

#include <cmath>
#include "json.hpp"
#include <set>

namespace wigner::io {

namespace {

using json = nlohmann::ordered_json;

template <class... Ts>
struct overloaded : Ts... {
    using Ts::operator()...;
};
template <class... Ts>
overloaded(Ts...) -> overloaded<Ts...>;

std::string join(const std::string& path, const std::string& key) { return path.empty() ? key : path + "." + key; }

// Reads keys from one JSON object and rejects the ones nobody asked for.
class Reader {
public:
    Reader(const json& j, std::string path) : j_(j), path_(std::move(path)) {
        if (!j_.is_object()) {
            throw ConfigError(path_.empty() ? "<root>" : path_, "expected an object");
        }
    }

    bool has(const std::string& key) const { return j_.contains(key); }
    std::string path(const std::string& key) const { return join(path_, key); }

    const json& raw(const std::string& key) {
        used_.insert(key);
        if (!j_.contains(key)) {
            throw ConfigError(path(key), "missing required key");
        }
        return j_.at(key);
    }

    double number(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number()) {
            throw ConfigError(path(key), "expected a number");
        }
        const double d = v.get<double>();
        if (!std::isfinite(d)) {
            throw ConfigError(path(key), "must be finite");
        }
        return d;
    }

    double number_or(const std::string& key, double fallback) { return has(key) ? number(key) : fallback; }

    double positive(const std::string& key) {
        const double d = number(key);
        if (!(d > 0.0)) {
            throw ConfigError(path(key), "must be positive");
        }
        return d;
    }

    long long integer(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_number_integer()) {
            throw ConfigError(path(key), "expected an integer");
        }
        return v.get<long long>();
    }

    std::size_t count(const std::string& key, std::size_t minimum) {
        const long long n = integer(key);
        if (n < static_cast<long long>(minimum)) {
            throw ConfigError(path(key), "must be at least " + std::to_string(minimum));
        }
        return static_cast<std::size_t>(n);
    }

    bool boolean_or(const std::string& key, bool fallback) {
        if (!has(key)) {
            return fallback;
        }
        const json& v = raw(key);
        if (!v.is_boolean()) {
            throw ConfigError(path(key), "expected true or false");
        }
        return v.get<bool>();
    }

    std::string string(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_string()) {
            throw ConfigError(path(key), "expected a string");
        }
        return v.get<std::string>();
    }

    std::vector<double> numbers(const std::string& key) {
        const json& v = raw(key);
        if (!v.is_array()) {
            throw ConfigError(path(key), "expected an array of numbers");
        }
        std::vector<double> out;
        for (std::size_t i = 0; i < v.size(); ++i) {
            if (!v[i].is_number()) {
                throw ConfigError(path(key) + "[" + std::to_string(i) + "]", "expected a number");
            }
            out.push_back(v[i].get<double>());
        }
        return out;
    }

    void skip(const std::string& key) { used_.insert(key); }

    void finish() const {
        for (const auto& item : j_.items()) {
            if (!used_.count(item.key())) {
                throw ConfigError(path(item.key()), "unknown key");
            }
        }
    }

private:
    const json& j_;
    std::string path_;
    std::set<std::string> used_;
};

double read_hbar(Reader& r) { return r.positive("hbar"); }

AxisSpec read_axis(Reader& parent, const std::string& key) {
    Reader r(parent.raw(key), parent.path(key));
    AxisSpec a{r.number("min"), r.number("max"), r.count("count", 2)};
    if (!(a.max > a.min)) {
        throw ConfigError(r.path("max"), "must exceed min");
    }
    r.finish();
    return a;
}

XiSpec read_xi(Reader& parent, const std::string& key) {
    Reader r(parent.raw(key), parent.path(key));
    XiSpec x{r.positive("max"), r.count("count", 2)};
    r.finish();
    return x;
}

TimeSpec read_time(Reader& r) {
    TimeSpec t{r.number("t_max"), r.count("t_steps", 1)};
    if (t.t_max < 0.0) {
        throw ConfigError(r.path("t_max"), "must be non-negative");
    }
    return t;
}

int read_degree(Reader& r, const std::string& key) {
    const long long n = r.integer(key);
    if (n < 0 || n > 60) {
        throw ConfigError(r.path(key), "must lie in [0, 60]");
    }
    return static_cast<int>(n);
}

closed_forms::StateKind read_state(Reader& parent, double hbar) {
    Reader r(parent.raw("state"), parent.path("state"));
    const std::string type = r.string("type");
    closed_forms::StateKind kind;
    if (type == "box") {
        kind = closed_forms::Box{r.positive("R")};
    } else if (type == "gauss_general") {
        kind = closed_forms::GaussGeneral{r.positive("a1"), r.number("a2"), r.number("b1"),
                                          r.number("b2"), r.number("c1"), r.number("c2")};
    } else if (type == "coherent") {
        kind = closed_forms::CoherentGaussian{r.number("a"), r.number("p0")};
    } else if (type == "hermite") {
        const int n = read_degree(r, "n");
        kind = closed_forms::Hermite{n, r.boolean_or("normalized", false)};
    } else if (type == "free_gaussian") {
        kind = closed_forms::FreeEvolvedGaussian{r.number("t")};
    } else if (type == "delta_bound") {
        const double g = r.number("gamma");
        if (!(g < 0.0)) {
            throw ConfigError(r.path("gamma"), "must be negative");
        }
        kind = closed_forms::DeltaBound{g};
    } else if (type == "soliton") {
        const double nu = r.number("nu");
        if (!(nu < 0.0)) {
            throw ConfigError(r.path("nu"), "must be negative");
        }
        kind = closed_forms::Soliton{nu};
    } else if (type == "harmonic_eigen") {
        const int n = read_degree(r, "n");
        const double omega = r.positive("omega");
        kind = closed_forms::HarmonicEigen{n, omega, r.boolean_or("normalized", false)};
    } else {
        throw ConfigError(r.path("type"), "unknown state type '" + type + "'");
    }
    r.finish();
    try {
        closed_forms::AnalyticState check(kind, hbar);
    } catch (const ConfigurationError& e) {
        throw ConfigError(parent.path("state"), e.what());
    }
    return kind;
}

liouville::DrivePolicy read_drive(Reader& parent) {
    if (!parent.has("drive")) {
        return liouville::ConstantDrive{0.0};
    }
    Reader r(parent.raw("drive"), parent.path("drive"));
    liouville::DrivePolicy drive;
    if (r.has("times") || r.has("values")) {
        std::vector<double> times = r.numbers("times");
        std::vector<double> values = r.numbers("values");
        try {
            drive = liouville::TabulatedDrive(std::move(times), std::move(values));
        } catch (const ConfigurationError& e) {
            throw ConfigError(r.path("times"), e.what());
        }
    } else if (r.has("b") || r.has("Omega")) {
        const double lambda = r.number_or("lambda", 0.0);
        const double b = r.number_or("b", 0.0);
        const double omega = r.number_or("Omega", 0.0);
        if (omega < 0.0) {
            throw ConfigError(r.path("Omega"), "must be non-negative");
        }
        drive = liouville::CosineDrive{lambda, b, omega};
    } else {
        drive = liouville::ConstantDrive{r.number_or("lambda", 0.0)};
    }
    r.finish();
    return drive;
}

json render_axis(const AxisSpec& a) { return json{{"min", a.min}, {"max", a.max}, {"count", a.count}}; }
json render_xi(const XiSpec& x) { return json{{"max", x.max}, {"count", x.count}}; }

json render_state(const closed_forms::StateKind& kind) {
    return std::visit(
        overloaded{
            [](const closed_forms::Box& s) { return json{{"type", "box"}, {"R", s.R}}; },
            [](const closed_forms::GaussGeneral& s) {
                return json{{"type", "gauss_general"}, {"a1", s.a1}, {"a2", s.a2}, {"b1", s.b1},
                            {"b2", s.b2},              {"c1", s.c1}, {"c2", s.c2}};
            },
            [](const closed_forms::CoherentGaussian& s) { return json{{"type", "coherent"}, {"a", s.a}, {"p0", s.p0}}; },
            [](const closed_forms::Hermite& s) {
                return json{{"type", "hermite"}, {"n", s.n}, {"normalized", s.normalized}};
            },
            [](const closed_forms::FreeEvolvedGaussian& s) { return json{{"type", "free_gaussian"}, {"t", s.t}}; },
            [](const closed_forms::DeltaBound& s) { return json{{"type", "delta_bound"}, {"gamma", s.gamma}}; },
            [](const closed_forms::Soliton& s) { return json{{"type", "soliton"}, {"nu", s.nu}}; },
            [](const closed_forms::HarmonicEigen& s) {
                return json{{"type", "harmonic_eigen"}, {"n", s.n}, {"omega", s.omega}, {"normalized", s.normalized}};
            },
        },
        kind);
}

json render_drive(const liouville::DrivePolicy& d) {
    return std::visit(overloaded{
                          [](const liouville::ConstantDrive& c) { return json{{"lambda", c.lambda}}; },
                          [](const liouville::CosineDrive& c) {
                              return json{{"lambda", c.lambda}, {"b", c.b}, {"Omega", c.Omega}};
                          },
                          [](const liouville::TabulatedDrive& t) { return json{{"times", t.times}, {"values", t.values}}; },
                      },
                      d);
}

}  // namespace

ConfigError::ConfigError(const std::string& key_path, const std::string& reason)
    : Error(key_path + ": " + reason), key_path_(key_path) {}

std::vector<double> TimeSpec::nodes() const {
    std::vector<double> out(t_steps + 1);
    for (std::size_t k = 0; k <= t_steps; ++k) {
        out[k] = t_max * static_cast<double>(k) / static_cast<double>(t_steps);
    }
    return out;
}

std::string command_name(const RunConfig& config) {
    static const char* names[] = {"transform", "propagate", "gaussian", "tunnel", "eigen", "verify"};
    return names[config.index()];
}

RunConfig parse_config(const std::string& text, const std::optional<std::string>& expected_command) {
    json j;
    try {
        j = json::parse(text);
    } catch (const json::parse_error& e) {
        throw ConfigError("<root>", std::string("invalid JSON: ") + e.what());
    }
    Reader r(j, "");
    std::string command;
    if (r.has("command")) {
        command = r.string("command");
        if (expected_command && *expected_command != command) {
            throw ConfigError("command", "config says '" + command + "' but '" + *expected_command + "' was requested");
        }
    } else if (expected_command) {
        command = *expected_command;
    } else {
        throw ConfigError("command", "missing required key");
    }

    RunConfig out;
    if (command == "transform") {
        const double hbar = read_hbar(r);
        TransformConfig c{read_state(r, hbar), hbar, read_axis(r, "x_grid"), read_xi(r, "xi_grid"), false};
        const std::string method = r.has("method") ? r.string("method") : "discrete";
        if (method != "discrete" && method != "analytic") {
            throw ConfigError("method", "expected 'discrete' or 'analytic'");
        }
        c.analytic = method == "analytic";
        out = c;
    } else if (command == "propagate") {
        const double hbar = read_hbar(r);
        PropagateConfig c{read_state(r, hbar), hbar,
                          r.number("gamma"),   read_drive(r),
                          read_time(r),        read_axis(r, "x_grid"),
                          read_xi(r, "xi_grid")};
        out = c;
    } else if (command == "gaussian") {
        GaussianConfig c{r.number("a"), r.number("p0"), read_hbar(r), r.number("gamma"),
                         read_drive(r), read_time(r),    read_axis(r, "x_grid")};
        out = c;
    } else if (command == "tunnel") {
        TunnelConfig c{};
        c.a = r.number("a");
        if (r.has("p0") && r.raw("p0").is_array()) {
            c.p0 = r.numbers("p0");
            if (c.p0.empty()) {
                throw ConfigError("p0", "must not be empty");
            }
        } else {
            c.p0 = {r.number("p0")};
        }
        c.omega = r.positive("omega");
        c.hbar = read_hbar(r);
        c.drive = read_drive(r);
        if (std::holds_alternative<liouville::TabulatedDrive>(c.drive)) {
            throw ConfigError("drive", "tunnel supports constant or cosine drives only");
        }
        c.time = read_time(r);
        out = c;
    } else if (command == "eigen") {
        EigenConfig c{r.positive("omega"), read_hbar(r), read_degree(r, "n_max"), std::nullopt, std::nullopt};
        if (r.has("x_grid") != r.has("xi_grid")) {
            throw ConfigError(r.has("x_grid") ? "xi_grid" : "x_grid", "x_grid and xi_grid must be given together");
        }
        if (r.has("x_grid")) {
            c.x_grid = read_axis(r, "x_grid");
            c.xi_grid = read_xi(r, "xi_grid");
        }
        out = c;
    } else if (command == "verify") {
        long long seed = 1;
        if (r.has("seed")) {
            seed = r.integer("seed");
            if (seed < 0) {
                throw ConfigError("seed", "must be non-negative");
            }
        }
        out = VerifyConfig{static_cast<std::uint64_t>(seed)};
    } else {
        throw ConfigError("command", "unknown command '" + command + "'");
    }
    r.finish();
    return out;
}

std::string render_config(const RunConfig& config) {
    json j;
    j["command"] = command_name(config);
    std::visit(overloaded{
                   [&](const TransformConfig& c) {
                       j["hbar"] = c.hbar;
                       j["state"] = render_state(c.state);
                       j["x_grid"] = render_axis(c.x_grid);
                       j["xi_grid"] = render_xi(c.xi_grid);
                       j["method"] = c.analytic ? "analytic" : "discrete";
                   },
                   [&](const PropagateConfig& c) {
                       j["hbar"] = c.hbar;
                       j["state"] = render_state(c.state);
                       j["gamma"] = c.gamma;
                       j["drive"] = render_drive(c.drive);
                       j["t_max"] = c.time.t_max;
                       j["t_steps"] = c.time.t_steps;
                       j["x_grid"] = render_axis(c.x_grid);
                       j["xi_grid"] = render_xi(c.xi_grid);
                   },
                   [&](const GaussianConfig& c) {
                       j["a"] = c.a;
                       j["p0"] = c.p0;
                       j["hbar"] = c.hbar;
                       j["gamma"] = c.gamma;
                       j["drive"] = render_drive(c.drive);
                       j["t_max"] = c.time.t_max;
                       j["t_steps"] = c.time.t_steps;
                       j["x_grid"] = render_axis(c.x_grid);
                   },
                   [&](const TunnelConfig& c) {
                       j["a"] = c.a;
                       j["p0"] = c.p0;
                       j["omega"] = c.omega;
                       j["hbar"] = c.hbar;
                       j["drive"] = render_drive(c.drive);
                       j["t_max"] = c.time.t_max;
                       j["t_steps"] = c.time.t_steps;
                   },
                   [&](const EigenConfig& c) {
                       j["omega"] = c.omega;
                       j["hbar"] = c.hbar;
                       j["n_max"] = c.n_max;
                       if (c.x_grid) {
                           j["x_grid"] = render_axis(*c.x_grid);
                           j["xi_grid"] = render_xi(*c.xi_grid);
                       }
                   },
                   [&](const VerifyConfig& c) { j["seed"] = c.seed; },
               },
               config);
    return j.dump(2) + "\n";
}

}  // namespace wigner::io
