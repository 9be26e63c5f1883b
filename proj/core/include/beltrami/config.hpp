#pragma once

#include <optional>
#include <string>
#include <vector>

#include "beltrami/beltrami.hpp"
#include "beltrami/profile.hpp"

namespace beltrami {

/// How alpha is supplied in a run configuration.
struct AlphaSpec {
    enum class Kind { preset_example, preset_constant, expression, tabulated };
    Kind kind = Kind::preset_example;
    double k = 1.0;               // preset_constant
    std::string expression;      // expression
    std::vector<double> ys, as;  // tabulated
};

/// Residual thresholds applied by the verify command (fixed by the
/// contract of the generated system, not user-tunable).
struct Thresholds {
    double beltrami = 1e-5;     // three scalar equations, orders <= 10
    double divergence = 1e-8;   // div(alpha B)
    double vekua = 1e-6;        // characteristic equation of W
    double second_kind = 1e-6;  // characteristic equation of omega
    double high_order = 1e-3;   // normalized FD residual for orders > 10
};

struct RunConfig {
    AlphaSpec alpha;
    std::optional<Interval> domain;
    double c1 = 0.0;
    double c2 = 1.0;
    std::optional<double> y_ref;
    std::optional<Complex> z0;
    int n_max = 3;
    std::optional<ProbeGrid> grid;
    double tol = 1e-10;
    std::size_t n_nodes = 2049;
    Thresholds thresholds;

    std::string bvp_spec_json; // raw "bvp" object, empty if absent
    std::string config_hash;   // FNV-1a of the canonical config dump
};

/// Parse a configuration from JSON text. Unknown keys, malformed values
/// and a disabled determinism flag all raise ConfigError.
RunConfig parse_run_config(const std::string& json_text);

/// Everything a run needs, with defaults resolved against the profile.
struct Workspace {
    AlphaProfile profile;
    GeneratingFunction generator;
    Complex z0;
    ProbeGrid grid;
    std::vector<ScalarBasisElement> basis;
};

Workspace build_workspace(const RunConfig& config);

/// Boundary-value problem specification (the "bvp" object of a config).
struct BvpSpec {
    std::vector<Vec2> boundary;           // resolved curve points
    std::vector<double> data;             // empty if preset_trace is used
    std::string preset_trace;             // "exp_cos" or a basis element name
    int n_max = 0;                        // 0: inherit from run config
    double regularization = 0.0;
};

BvpSpec parse_bvp_spec(const std::string& json_text);

} // namespace beltrami
