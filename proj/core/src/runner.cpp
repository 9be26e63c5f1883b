#include "beltrami/runner.hpp"

#include <algorithm>
#include <cmath>
#include <fstream>
#include <limits>
#include <ostream>

#include <nlohmann/json.hpp>

#include "beltrami/bvp.hpp"
#include "beltrami/example_closed_forms.hpp"
#include "beltrami/io.hpp"
#include "beltrami/vekua.hpp"

namespace beltrami {

using nlohmann::json;

namespace {

std::string element_file_name(int n, Flavor f) {
    return "B3_" + std::to_string(n) + "_" + (f == Flavor::unit ? "u" : "v") +
           ".csv";
}

struct ElementReport {
    int n = 0;
    Flavor flavor = Flavor::unit;
    std::string name;
    bool checked = false;      // full residual suite (orders <= 10)
    bool high_order = false;   // normalized FD check (top order > 10)
    BeltramiResiduals res;
    double div = 0.0;
    double vekua_r = 0.0;
    double second_kind_r = 0.0;
    double normalized_fd = std::numeric_limits<double>::quiet_NaN();
};

ProbeGrid high_order_grid(const GeneratingFunction& g) {
    // fine grid for FD checks of high orders: |x| <= 0.8 crossed with the
    // window clipped to |y| <= 0.8, spacing ~2e-3
    const Interval w = g.table_interval().shrunk(0.01);
    const double y_lo = std::max(-0.8, w.lo);
    const double y_hi = std::min(0.8, w.hi);
    const int ny = std::max(64, static_cast<int>((y_hi - y_lo) / 0.002) + 1);
    return ProbeGrid{-0.8, 0.8, 801, y_lo, y_hi, ny};
}

ElementReport element_report(const Workspace& w, const ScalarBasisElement& e,
                             int n_max) {
    ElementReport r;
    r.n = e.n;
    r.flavor = e.flavor;
    r.name = e.name;
    r.checked = e.n <= 10;
    r.high_order = e.n > 10 && e.n == n_max;

    const BeltramiFieldElement field = field_from_scalar(e);
    if (r.checked) {
        r.res = beltrami_residual(field, w.profile, w.grid);
        r.div = div_alpha_residual(field, w.profile, w.grid);
        const FormalPowerBasis& basis = e.core->basis();
        const Complex a = e.core->a_of(e.flavor);
        r.vekua_r = vekua_residual(basis.first_kind_field(a, e.n, w.grid),
                                   w.generator);
        r.second_kind_r =
            second_kind_residual(basis.as_field(a, e.n, w.grid), w.generator);
    }
    if (r.high_order) {
        r.normalized_fd = normalized_third_residual_fd(
            field, w.profile, high_order_grid(w.generator));
    }
    return r;
}

json report_json(const ElementReport& r) {
    json j{{"name", r.name},
           {"n", r.n},
           {"flavor", r.flavor == Flavor::unit ? "unit" : "imag"}};
    if (r.checked) {
        j["residuals"] = {{"beltrami1", r.res.r1},   {"beltrami2", r.res.r2},
                          {"beltrami3", r.res.r3},   {"div_alpha", r.div},
                          {"vekua", r.vekua_r},      {"second_kind", r.second_kind_r}};
    }
    if (r.high_order) {
        j["normalized_fd_third"] = r.normalized_fd;
    }
    return j;
}

json meta_json(const RunConfig& cfg) {
    return json{{"config_hash", cfg.config_hash},
                {"tol", cfg.tol},
                {"thresholds",
                 {{"beltrami", cfg.thresholds.beltrami},
                  {"div_alpha", cfg.thresholds.divergence},
                  {"vekua", cfg.thresholds.vekua},
                  {"second_kind", cfg.thresholds.second_kind},
                  {"high_order", cfg.thresholds.high_order}}}};
}

std::vector<FieldRow> sample_rows(const BeltramiFieldElement& f,
                                  const ProbeGrid& g) {
    std::vector<FieldRow> rows;
    rows.reserve(static_cast<std::size_t>(g.nx) * g.ny);
    for (int i = 0; i < g.nx; ++i) {
        for (int j = 0; j < g.ny; ++j) {
            const double x = g.x(i), y = g.y(j);
            rows.push_back({x, y, f.B1.value(x, y), f.B2.value(x, y),
                            f.B3.value(x, y)});
        }
    }
    return rows;
}

void write_json(const std::filesystem::path& path, const json& j) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw Error("cannot open " + path.string() + " for writing");
    out << j.dump(2) << "\n";
}

struct Check {
    std::string name;
    double value;
    double threshold;
    bool pass;
};

void log_check(std::ostream& log, const Check& c) {
    log << (c.pass ? "[PASS] " : "[FAIL] ") << c.name << ": " << c.value
        << (c.pass ? " <= " : " > ") << c.threshold << "\n";
}

} // namespace

int run_basis(const RunConfig& config, const std::filesystem::path& out_dir,
              std::ostream& log) {
    const Workspace w = build_workspace(config);
    std::filesystem::create_directories(out_dir);

    json manifest;
    manifest["meta"] = meta_json(config);
    manifest["n_max"] = config.n_max;
    manifest["z0"] = {w.z0.real(), w.z0.imag()};
    manifest["grid"] = {{"x", {w.grid.x_lo, w.grid.x_hi, w.grid.nx}},
                        {"y", {w.grid.y_lo, w.grid.y_hi, w.grid.ny}}};
    manifest["elements"] = json::array();

    for (const ScalarBasisElement& e : w.basis) {
        const BeltramiFieldElement field = field_from_scalar(e);
        const std::string file = element_file_name(e.n, e.flavor);
        write_field_csv(out_dir / file,
                        {{"element", e.name},
                         {"config_hash", config.config_hash},
                         {"tol", format_double(config.tol)}},
                        sample_rows(field, w.grid));
        json entry = report_json(element_report(w, e, config.n_max));
        entry["file"] = file;
        manifest["elements"].push_back(std::move(entry));
        log << "wrote " << (out_dir / file).string() << "\n";
    }
    write_json(out_dir / "manifest.json", manifest);
    log << "wrote " << (out_dir / "manifest.json").string() << "\n";
    return exit_ok;
}

int run_verify(const RunConfig& config,
               const std::optional<std::filesystem::path>& out_dir,
               std::ostream& log) {
    const Workspace w = build_workspace(config);
    std::vector<Check> checks;
    json elements = json::array();

    for (const ScalarBasisElement& e : w.basis) {
        const ElementReport r = element_report(w, e, config.n_max);
        elements.push_back(report_json(r));
        if (r.checked) {
            const Thresholds& t = config.thresholds;
            checks.push_back({r.name + "/beltrami1", r.res.r1, t.beltrami,
                              r.res.r1 <= t.beltrami});
            checks.push_back({r.name + "/beltrami2", r.res.r2, t.beltrami,
                              r.res.r2 <= t.beltrami});
            checks.push_back({r.name + "/beltrami3", r.res.r3, t.beltrami,
                              r.res.r3 <= t.beltrami});
            checks.push_back({r.name + "/div_alpha", r.div, t.divergence,
                              r.div <= t.divergence});
            checks.push_back({r.name + "/vekua", r.vekua_r, t.vekua,
                              r.vekua_r <= t.vekua});
            checks.push_back({r.name + "/second_kind", r.second_kind_r,
                              t.second_kind, r.second_kind_r <= t.second_kind});
        }
        if (r.high_order) {
            checks.push_back({r.name + "/normalized_fd_third", r.normalized_fd,
                              config.thresholds.high_order,
                              r.normalized_fd <= config.thresholds.high_order});
        }
    }

    // cross-check previously exported files, when present
    if (out_dir && std::filesystem::exists(*out_dir / "manifest.json")) {
        std::ifstream in(*out_dir / "manifest.json");
        json manifest = json::parse(in, nullptr, false);
        if (manifest.is_discarded()) {
            checks.push_back({"files/manifest", 1.0, 0.0, false});
        } else {
            const std::string hash =
                manifest.value("meta", json::object()).value("config_hash", "");
            if (hash != config.config_hash) {
                checks.push_back({"files/config_hash", 1.0, 0.0, false});
                log << "manifest config_hash " << hash
                    << " does not match this configuration\n";
            } else {
                for (const ScalarBasisElement& e : w.basis) {
                    const auto path = *out_dir / element_file_name(e.n, e.flavor);
                    if (!std::filesystem::exists(path)) continue;
                    bool same = true;
                    try {
                        const auto rows = read_field_csv(path);
                        const auto fresh =
                            sample_rows(field_from_scalar(e), w.grid);
                        same = rows.size() == fresh.size();
                        for (std::size_t k = 0; same && k < rows.size(); ++k) {
                            same = rows[k].x == fresh[k].x &&
                                   rows[k].y == fresh[k].y &&
                                   rows[k].B1 == fresh[k].B1 &&
                                   rows[k].B2 == fresh[k].B2 &&
                                   rows[k].B3 == fresh[k].B3;
                        }
                    } catch (const Error&) {
                        same = false;
                    }
                    checks.push_back(
                        {"files/" + e.name, same ? 0.0 : 1.0, 0.0, same});
                }
            }
        }
    }

    bool all_pass = true;
    const Check* first_fail = nullptr;
    for (const Check& c : checks) {
        log_check(log, c);
        if (!c.pass && !first_fail) first_fail = &c;
        all_pass = all_pass && c.pass;
    }

    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        json report;
        report["meta"] = meta_json(config);
        report["pass"] = all_pass;
        report["elements"] = elements;
        json jchecks = json::array();
        for (const Check& c : checks) {
            jchecks.push_back({{"name", c.name},
                               {"value", c.value},
                               {"threshold", c.threshold},
                               {"pass", c.pass}});
        }
        report["checks"] = jchecks;
        write_json(*out_dir / "verify_report.json", report);
    }

    if (!all_pass) {
        log << "FAILED: " << first_fail->name << "\n";
        return exit_verify_failed;
    }
    log << "all checks passed\n";
    return exit_ok;
}

int run_bvp(const RunConfig& config, const std::filesystem::path& out_dir,
            std::ostream& log) {
    if (config.bvp_spec_json.empty()) {
        throw ConfigError("bvp command needs a \"bvp\" object in the config");
    }
    const BvpSpec spec = parse_bvp_spec(config.bvp_spec_json);
    Workspace w = build_workspace(config);

    const int n_fit = spec.n_max > 0 ? spec.n_max : config.n_max;
    if (n_fit > config.n_max) {
        w.basis = b3_basis(w.profile, w.generator, w.z0, n_fit, config.tol,
                           config.n_nodes);
    }

    const Interval window = w.generator.table_interval();
    for (const Vec2& p : spec.boundary) {
        if (!window.contains(p.y)) {
            throw ConfigError("boundary point outside the positivity window");
        }
    }

    CollocationProblem problem;
    problem.boundary = spec.boundary;
    problem.n_max = n_fit;
    problem.regularization = spec.regularization;
    if (!spec.data.empty()) {
        problem.data = spec.data;
    } else if (spec.preset_trace == "exp_cos") {
        for (const Vec2& p : spec.boundary) {
            problem.data.push_back(std::exp(p.x) * std::cos(p.y));
        }
    } else if (!spec.preset_trace.empty()) {
        const ScalarBasisElement* found = nullptr;
        for (const ScalarBasisElement& e : w.basis) {
            if (e.name == spec.preset_trace) found = &e;
        }
        if (!found) {
            throw ConfigError("preset_trace '" + spec.preset_trace +
                              "' is not a basis element name");
        }
        for (const Vec2& p : spec.boundary) {
            problem.data.push_back(found->field.value(p.x, p.y));
        }
    } else {
        throw ConfigError("bvp spec has neither data nor preset_trace");
    }

    const FitResult result = fit(problem, w.basis);
    std::filesystem::create_directories(out_dir);

    json coeffs;
    coeffs["meta"] = meta_json(config);
    coeffs["n_max"] = n_fit;
    coeffs["boundary_residual"] = result.boundary_residual;
    coeffs["condition_estimate"] = result.condition_estimate;
    coeffs["coefficients"] = json::array();
    for (std::size_t j = 0; j < result.coefficients.size(); ++j) {
        const auto [n, flavor] = basis_index_map(static_cast<int>(j));
        coeffs["coefficients"].push_back(
            {{"name", basis_element_name(n, flavor)},
             {"value", result.coefficients[j]}});
    }

    const InteriorReport interior = evaluate_interior(result.solution, w.grid);
    coeffs["interior_residuals"] = {{"beltrami1", interior.residuals.r1},
                                    {"beltrami2", interior.residuals.r2},
                                    {"beltrami3", interior.residuals.r3},
                                    {"div_alpha", interior.div_residual}};
    write_json(out_dir / "coefficients.json", coeffs);

    std::vector<FieldRow> rows;
    rows.reserve(interior.field.size());
    std::size_t k = 0;
    for (int i = 0; i < w.grid.nx; ++i) {
        for (int j = 0; j < w.grid.ny; ++j, ++k) {
            rows.push_back({w.grid.x(i), w.grid.y(j), interior.field[k][0],
                            interior.field[k][1], interior.field[k][2]});
        }
    }
    write_field_csv(out_dir / "interior.csv",
                    {{"config_hash", config.config_hash},
                     {"tol", format_double(config.tol)}},
                    rows);

    log << "boundary residual " << result.boundary_residual
        << ", condition estimate " << result.condition_estimate << "\n";
    log << "wrote " << (out_dir / "coefficients.json").string() << " and "
        << (out_dir / "interior.csv").string() << "\n";
    return exit_ok;
}

int run_example(const std::optional<std::filesystem::path>& out_dir,
                std::ostream& log) {
    RunConfig cfg;
    cfg.alpha.kind = AlphaSpec::Kind::preset_example;
    cfg.c1 = 0.0;
    cfg.c2 = 1.0;
    cfg.y_ref = 0.0;
    cfg.z0 = Complex(0.0, 0.0);
    cfg.n_max = 3;
    cfg.config_hash = fnv1a_hex("example");
    const Workspace w = build_workspace(cfg);
    const FormalPowerBasis& basis = w.basis.front().core->basis();

    constexpr int n_points = 200;
    constexpr double radius = 0.9;

    bool pass = true;
    json report;
    report["formal_powers"] = json::array();
    for (int n = 1; n <= 3; ++n) {
        for (bool unit : {true, false}) {
            const Complex a = unit ? Complex(1, 0) : Complex(0, 1);
            double dev = 0.0;
            for (int i = 0; i < n_points; ++i) {
                const auto [x, y] = example::disk_point(i, n_points, radius);
                const Complex num = basis.formal_power(a, n, Complex(x, y));
                const Complex ref = example::Z(n, unit, x, y);
                dev = std::max(dev, std::abs(num - ref));
            }
            const double threshold = (n == 1 && !unit) ? 1e-10 : 1e-8;
            const bool ok = dev < threshold;
            pass = pass && ok;
            log << (ok ? "[PASS] " : "[FAIL] ") << "*Z^(" << n << ")("
                << (unit ? "1" : "i") << ",0;.) max deviation " << dev << "\n";
            report["formal_powers"].push_back({{"n", n},
                                               {"flavor", unit ? "unit" : "imag"},
                                               {"max_deviation", dev},
                                               {"threshold", threshold}});
        }
    }

    report["fields"] = json::array();
    for (int j = 0; j < 7; ++j) {
        const BeltramiFieldElement f =
            field_from_scalar(w.basis[static_cast<std::size_t>(j)]);
        double dev = 0.0;
        std::vector<FieldRow> closed_rows;
        closed_rows.reserve(n_points);
        for (int i = 0; i < n_points; ++i) {
            const auto [x, y] = example::disk_point(i, n_points, radius);
            const auto ref = example::B_field(j, x, y);
            dev = std::max({dev, std::abs(f.B1.value(x, y) - ref[0]),
                            std::abs(f.B2.value(x, y) - ref[1]),
                            std::abs(f.B3.value(x, y) - ref[2])});
            closed_rows.push_back({x, y, ref[0], ref[1], ref[2]});
        }
        const bool ok = dev < 1e-8;
        pass = pass && ok;
        log << (ok ? "[PASS] " : "[FAIL] ") << "B_" << j << " max deviation "
            << dev << "\n";
        report["fields"].push_back(
            {{"index", j}, {"max_deviation", dev}, {"threshold", 1e-8}});
        if (out_dir) {
            std::filesystem::create_directories(*out_dir);
            write_field_csv(*out_dir / ("B_" + std::to_string(j) + ".csv"),
                            {{"element", "closed form B_" + std::to_string(j)},
                             {"config_hash", cfg.config_hash},
                             {"tol", format_double(cfg.tol)}},
                            closed_rows);
        }
    }

    report["pass"] = pass;
    if (out_dir) {
        std::filesystem::create_directories(*out_dir);
        write_json(*out_dir / "example_report.json", report);
        log << "wrote " << (*out_dir / "example_report.json").string() << "\n";
    }
    return pass ? exit_ok : exit_verify_failed;
}

} // namespace beltrami
