#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <variant>
#include <vector>

#include "wigner/closed_forms.hpp"
#include "wigner/errors.hpp"
#include "wigner/liouville.hpp"

namespace wigner::io {

// Parse or validation failure; the message starts with the offending key path.
class ConfigError : public Error {
public:
    ConfigError(const std::string& key_path, const std::string& reason);

    const std::string& key_path() const { return key_path_; }

private:
    std::string key_path_;
};

struct AxisSpec {
    double min;
    double max;
    std::size_t count;
    bool operator==(const AxisSpec&) const = default;
};

// xi axis is symmetric: [-max, max].
struct XiSpec {
    double max;
    std::size_t count;
    bool operator==(const XiSpec&) const = default;
};

struct TimeSpec {
    double t_max;
    std::size_t t_steps;
    bool operator==(const TimeSpec&) const = default;

    std::vector<double> nodes() const;
};

struct TransformConfig {
    closed_forms::StateKind state;
    double hbar;
    AxisSpec x_grid;
    XiSpec xi_grid;
    bool analytic;
    bool operator==(const TransformConfig&) const = default;
};

struct PropagateConfig {
    closed_forms::StateKind state;
    double hbar;
    double gamma;
    liouville::DrivePolicy drive;
    TimeSpec time;
    AxisSpec x_grid;
    XiSpec xi_grid;
    bool operator==(const PropagateConfig&) const = default;
};

struct GaussianConfig {
    double a;
    double p0;
    double hbar;
    double gamma;
    liouville::DrivePolicy drive;
    TimeSpec time;
    AxisSpec x_grid;
    bool operator==(const GaussianConfig&) const = default;
};

struct TunnelConfig {
    double a;
    std::vector<double> p0;
    double omega;
    double hbar;
    liouville::DrivePolicy drive;
    TimeSpec time;
    bool operator==(const TunnelConfig&) const = default;
};

struct EigenConfig {
    double omega;
    double hbar;
    int n_max;
    std::optional<AxisSpec> x_grid;
    std::optional<XiSpec> xi_grid;
    bool operator==(const EigenConfig&) const = default;
};

struct VerifyConfig {
    std::uint64_t seed;
    bool operator==(const VerifyConfig&) const = default;
};

using RunConfig =
    std::variant<TransformConfig, PropagateConfig, GaussianConfig, TunnelConfig, EigenConfig, VerifyConfig>;

std::string command_name(const RunConfig& config);

// JSON text to config. The "command" key selects the variant; expected_command, when given,
// must agree with it and supplies it when the key is absent.
RunConfig parse_config(const std::string& text, const std::optional<std::string>& expected_command = std::nullopt);
// Canonical JSON; parse_config(render_config(c)) == c.
std::string render_config(const RunConfig& config);

}  // namespace wigner::io
