#include "beltrami/config.hpp"

#include <cmath>

#include <nlohmann/json.hpp>

#include "beltrami/bvp.hpp"
#include "beltrami/io.hpp"

namespace beltrami {

using nlohmann::json;

namespace {

json parse_json(const std::string& text, const char* what) {
    json j = json::parse(text, nullptr, false);
    if (j.is_discarded()) {
        throw ConfigError(std::string(what) + ": malformed JSON");
    }
    return j;
}

Interval interval_from(const json& j, const char* key) {
    if (!j.is_array() || j.size() != 2 || !j[0].is_number() || !j[1].is_number()) {
        throw ConfigError(std::string(key) + " must be [lo, hi]");
    }
    const double lo = j[0].get<double>(), hi = j[1].get<double>();
    if (!(lo < hi)) throw ConfigError(std::string(key) + ": lo must be < hi");
    return Interval(lo, hi);
}

AlphaSpec alpha_from(const json& j) {
    if (!j.is_object()) throw ConfigError("\"alpha\" must be an object");
    AlphaSpec a;
    if (j.contains("preset")) {
        const std::string name = j.at("preset").get<std::string>();
        if (name == "example_inv_sqrt") {
            a.kind = AlphaSpec::Kind::preset_example;
        } else if (name == "constant") {
            a.kind = AlphaSpec::Kind::preset_constant;
            if (!j.contains("k")) throw ConfigError("constant preset needs \"k\"");
            a.k = j.at("k").get<double>();
        } else {
            throw ConfigError("unknown alpha preset '" + name + "'");
        }
    } else if (j.contains("expression")) {
        a.kind = AlphaSpec::Kind::expression;
        a.expression = j.at("expression").get<std::string>();
    } else if (j.contains("tabulated")) {
        a.kind = AlphaSpec::Kind::tabulated;
        const json& t = j.at("tabulated");
        a.ys = t.at("y").get<std::vector<double>>();
        a.as = t.at("alpha").get<std::vector<double>>();
    } else {
        throw ConfigError("\"alpha\" needs preset, expression or tabulated");
    }
    return a;
}

ProbeGrid grid_from(const json& j) {
    auto axis = [&](const char* key, double& lo, double& hi, int& n) {
        const json& a = j.at(key);
        if (!a.is_array() || a.size() != 3) {
            throw ConfigError(std::string("grid.") + key + " must be [lo, hi, count]");
        }
        lo = a[0].get<double>();
        hi = a[1].get<double>();
        n = a[2].get<int>();
        if (!(lo < hi) || n < 2) {
            throw ConfigError(std::string("grid.") + key + ": need lo < hi, count >= 2");
        }
    };
    ProbeGrid g;
    axis("x", g.x_lo, g.x_hi, g.nx);
    axis("y", g.y_lo, g.y_hi, g.ny);
    return g;
}

} // namespace

RunConfig parse_run_config(const std::string& json_text) {
    const json j = parse_json(json_text, "config");
    if (!j.is_object()) throw ConfigError("config must be a JSON object");

    static const char* known[] = {"alpha",  "domain", "c1",    "c2",
                                  "y_ref",  "z0",     "n_max", "grid",
                                  "tol",    "n_nodes", "bvp",  "deterministic"};
    for (auto it = j.begin(); it != j.end(); ++it) {
        bool ok = false;
        for (const char* k : known) ok = ok || it.key() == k;
        if (!ok) throw ConfigError("unknown config key '" + it.key() + "'");
    }

    RunConfig cfg;
    if (!j.contains("alpha")) throw ConfigError("config needs \"alpha\"");
    cfg.alpha = alpha_from(j.at("alpha"));

    if (j.contains("domain")) cfg.domain = interval_from(j.at("domain"), "domain");
    if (j.contains("c1")) cfg.c1 = j.at("c1").get<double>();
    if (j.contains("c2")) cfg.c2 = j.at("c2").get<double>();
    if (j.contains("y_ref")) cfg.y_ref = j.at("y_ref").get<double>();
    if (j.contains("z0")) {
        const json& z = j.at("z0");
        if (!z.is_array() || z.size() != 2) throw ConfigError("z0 must be [x0, y0]");
        cfg.z0 = Complex(z[0].get<double>(), z[1].get<double>());
    }
    if (j.contains("n_max")) cfg.n_max = j.at("n_max").get<int>();
    if (cfg.n_max < 0) throw ConfigError("n_max must be >= 0");
    if (j.contains("grid")) cfg.grid = grid_from(j.at("grid"));
    if (j.contains("tol")) cfg.tol = j.at("tol").get<double>();
    if (!(cfg.tol > 0.0)) throw ConfigError("tol must be positive");
    if (j.contains("n_nodes")) {
        const long long n = j.at("n_nodes").get<long long>();
        if (n < 32) throw ConfigError("n_nodes must be >= 32");
        cfg.n_nodes = static_cast<std::size_t>(n);
    }
    if (j.contains("deterministic") && !j.at("deterministic").get<bool>()) {
        throw ConfigError("determinism cannot be disabled");
    }
    if (j.contains("bvp")) cfg.bvp_spec_json = j.at("bvp").dump();

    cfg.config_hash = fnv1a_hex(j.dump());
    return cfg;
}

Workspace build_workspace(const RunConfig& config) {
    AlphaProfile profile;
    switch (config.alpha.kind) {
    case AlphaSpec::Kind::preset_example:
        profile = preset_example_inv_sqrt(
            config.domain.value_or(Interval(-0.95, 0.95)));
        break;
    case AlphaSpec::Kind::preset_constant:
        if (!config.domain) throw ConfigError("constant alpha needs \"domain\"");
        profile = preset_constant(config.alpha.k, *config.domain);
        break;
    case AlphaSpec::Kind::expression:
        if (!config.domain) throw ConfigError("expression alpha needs \"domain\"");
        try {
            profile = parse_alpha(config.alpha.expression, *config.domain);
        } catch (const Error& e) {
            throw ConfigError(std::string("alpha expression: ") + e.what());
        }
        break;
    case AlphaSpec::Kind::tabulated: {
        try {
            profile = tabulated_alpha(config.alpha.ys, config.alpha.as);
        } catch (const Error& e) {
            throw ConfigError(std::string("tabulated alpha: ") + e.what());
        }
        if (config.domain) {
            if (config.domain->lo < profile.domain.lo ||
                config.domain->hi > profile.domain.hi) {
                throw ConfigError("domain exceeds the tabulated sample range");
            }
            profile.domain = *config.domain;
        }
        break;
    }
    }

    const double y_ref = config.y_ref.value_or(profile.domain.midpoint());
    if (!profile.domain.contains(y_ref)) {
        throw ConfigError("y_ref outside the alpha domain");
    }
    GeneratingFunction generator(profile, config.c1, config.c2, y_ref,
                                 config.tol, config.n_nodes);

    const Interval window = generator.table_interval();
    const Complex z0 = config.z0.value_or(Complex(0.0, window.midpoint()));
    if (!window.contains(z0.imag())) {
        throw ConfigError("Im z0 outside the positivity window");
    }

    ProbeGrid grid;
    if (config.grid) {
        grid = *config.grid;
        if (grid.y_lo < window.lo || grid.y_hi > window.hi) {
            throw ConfigError("grid y-range outside the positivity window");
        }
    } else {
        const Interval inner = window.shrunk(0.02);
        grid = ProbeGrid{-0.9, 0.9, 41, inner.lo, inner.hi, 41};
    }
    grid.validate(2);

    std::vector<ScalarBasisElement> basis = b3_basis(
        profile, generator, z0, config.n_max, config.tol, config.n_nodes);
    return Workspace{std::move(profile), std::move(generator), z0, grid,
                     std::move(basis)};
}

BvpSpec parse_bvp_spec(const std::string& json_text) {
    const json j = parse_json(json_text, "bvp spec");
    if (!j.is_object()) throw ConfigError("bvp spec must be a JSON object");

    BvpSpec spec;
    if (!j.contains("curve")) throw ConfigError("bvp spec needs \"curve\"");
    const json& curve = j.at("curve");
    if (curve.contains("circle")) {
        const json& c = curve.at("circle");
        Vec2 center{0.0, 0.0};
        if (c.contains("center")) {
            center = {c.at("center")[0].get<double>(),
                      c.at("center")[1].get<double>()};
        }
        spec.boundary = circle_points(center, c.at("r").get<double>(),
                                      c.value("count", 64));
    } else if (curve.contains("points")) {
        for (const json& p : curve.at("points")) {
            spec.boundary.push_back({p[0].get<double>(), p[1].get<double>()});
        }
    } else {
        throw ConfigError("curve needs \"circle\" or \"points\"");
    }

    if (!j.contains("data")) throw ConfigError("bvp spec needs \"data\"");
    const json& data = j.at("data");
    if (data.is_array()) {
        spec.data = data.get<std::vector<double>>();
        if (spec.data.size() != spec.boundary.size()) {
            throw ConfigError("bvp data length does not match the boundary");
        }
    } else if (data.is_object() && data.contains("preset_trace")) {
        spec.preset_trace = data.at("preset_trace").get<std::string>();
    } else {
        throw ConfigError("data must be an array or {\"preset_trace\": name}");
    }

    spec.n_max = j.value("n_max", 0);
    spec.regularization = j.value("reg", 0.0);
    if (spec.regularization < 0.0) throw ConfigError("reg must be nonnegative");
    return spec;
}

} // namespace beltrami
