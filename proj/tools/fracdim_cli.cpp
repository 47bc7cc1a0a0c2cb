#include <cstdio>
#include <filesystem>
#include <fstream>
#include <functional>
#include <iostream>
#include <sstream>
#include <string>
#include <utility>
#include <vector>

#include <CLI11.hpp>
#include <json.hpp>

#include "fracdim/elasticity.hpp"
#include "fracdim/electrostatics.hpp"
#include "fracdim/errors.hpp"
#include "fracdim/expression.hpp"
#include "fracdim/geometry.hpp"
#include "fracdim/heat.hpp"
#include "fracdim/operators.hpp"
#include "fracdim/profile_io.hpp"

using nlohmann::json;

namespace {

// Base file name (extension comes from --format) plus the table to emit.
using Files = std::vector<std::pair<std::string, fracdim::ProfileTable>>;

json load_config(const std::string& path) {
    if (path == "-") {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        return json::parse(buf.str());
    }
    std::ifstream in(path);
    if (!in) throw std::invalid_argument("cannot open scenario file '" + path + "'");
    return json::parse(in);
}

fracdim::MaterialParams parse_material(const json& cfg) {
    fracdim::MaterialParams m;
    m.lambda = cfg.value("lambda", m.lambda);
    m.mu = cfg.value("mu", m.mu);
    m.rho = cfg.value("rho", m.rho);
    m.c_p = cfg.value("c_p", m.c_p);
    m.k = cfg.value("k", m.k);
    m.eps0 = cfg.value("eps0", m.eps0);
    m.rho_q = cfg.value("rho_q", m.rho_q);
    return m;
}

fracdim::BoundaryCondition parse_bc(const json& j) {
    if (j.contains("type")) {
        const std::string type = j.at("type");
        const double value = j.value("value", 0.0);
        if (type == "dirichlet") return fracdim::BoundaryCondition::dirichlet(value);
        if (type == "neumann") return fracdim::BoundaryCondition::neumann(value);
        if (type == "robin")
            return fracdim::BoundaryCondition::robin(j.at("a"), j.at("b"), value);
        throw std::invalid_argument("unknown boundary condition type '" + type + "'");
    }
    return fracdim::BoundaryCondition::robin(j.value("a", 1.0), j.value("b", 0.0),
                                             j.value("value", 0.0));
}

fracdim::Symmetry parse_symmetry(const std::string& s) {
    if (s == "spherical") return fracdim::Symmetry::spherical;
    if (s == "cylindrical") return fracdim::Symmetry::cylindrical;
    throw std::invalid_argument("unknown symmetry '" + s + "'");
}

fracdim::DimensionSpec make_spec(const json& cfg) {
    const std::string sym = cfg.value("symmetry", std::string("spherical"));
    const double D = cfg.at("D").get<double>();
    const bool has_d = cfg.contains("d");
    if (sym == "spherical")
        return has_d ? fracdim::DimensionSpec::spherical(D, cfg["d"].get<double>())
                     : fracdim::DimensionSpec::spherical(D);
    if (sym == "cylindrical")
        return has_d ? fracdim::DimensionSpec::cylindrical(D, cfg["d"].get<double>())
                     : fracdim::DimensionSpec::cylindrical(D);
    throw std::invalid_argument("unknown symmetry '" + sym + "'");
}

fracdim::QuadratureConfig quadrature_config(const json& cfg) {
    fracdim::QuadratureConfig q;
    if (cfg.contains("tolerance")) q.rel_tol = cfg["tolerance"].get<double>();
    return q;
}

int grid_nodes(const json& cfg) { return cfg.value("nodes", 200); }

std::string time_suffix(double t) {
    char buf[40];
    std::snprintf(buf, sizeof buf, "%g", t);
    return buf;
}

void print_value(double v) { std::printf("%.17g\n", v); }

// ---------------------------------------------------------------------------
// Scenario kinds
// ---------------------------------------------------------------------------

Files run_elasticity(const json& cfg, bool ball) {
    fracdim::ElasticScenario s;
    s.geometry = ball ? fracdim::ElasticGeometry::hollow_ball : fracdim::ElasticGeometry::pipe;
    s.D = cfg.value("D", 3.0);
    s.R1 = cfg.at("R1").get<double>();
    s.R2 = cfg.at("R2").get<double>();
    s.p1 = cfg.value("p1", 0.0);
    s.p2 = cfg.value("p2", 0.0);
    s.material = parse_material(cfg);

    const int n = grid_nodes(cfg);
    const fracdim::RadialGrid grid(s.R1, s.R2, n);
    std::vector<double> u(n), sigma(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid.node(i);
        u[i] = ball ? fracdim::ball_displacement(s, r) : fracdim::pipe_displacement(s, r);
        sigma[i] = ball ? fracdim::ball_stress(s, r) : fracdim::pipe_stress(s, r);
    }

    fracdim::ProfileTable t;
    t.meta.scenario = ball ? "elasticity_ball" : "elasticity_pipe";
    t.meta.D = s.D;
    t.meta.d = s.D - 1.0;
    t.meta.symmetry = ball ? "spherical" : "cylindrical";
    t.columns = {"u_r", "sigma_rr"};
    t.r = grid.nodes();
    t.values = {std::move(u), std::move(sigma)};
    return {{t.meta.scenario, std::move(t)}};
}

fracdim::HeatScenario parse_heat(const json& cfg) {
    fracdim::HeatScenario h;
    h.symmetry = parse_symmetry(cfg.value("symmetry", std::string("spherical")));
    h.D = cfg.value("D", 3.0);
    h.r_min = cfg.at("r_min").get<double>();
    h.r_max = cfg.at("r_max").get<double>();
    h.material = parse_material(cfg);
    h.q0 = cfg.value("q0", 0.0);
    if (cfg.contains("q")) {
        auto f = fracdim::to_radial_field(cfg.at("q").get<std::string>());
        h.q = [f](double r) { return f(r); };
    }
    if (cfg.contains("bc_left")) h.bc_left = parse_bc(cfg["bc_left"]);
    if (cfg.contains("bc_right")) h.bc_right = parse_bc(cfg["bc_right"]);
    return h;
}

Files run_heat_steady(const json& cfg) {
    const fracdim::HeatScenario h = parse_heat(cfg);
    const fracdim::RadialScalarField phi =
        h.q ? fracdim::steady_general_source_field(h, quadrature_config(cfg))
            : fracdim::steady_constant_source_field(h);

    const int n = grid_nodes(cfg);
    const fracdim::RadialGrid grid(h.r_min, h.r_max, n);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = phi(grid.node(i));

    fracdim::ProfileTable t;
    t.meta.scenario = "heat_steady";
    t.meta.D = h.D;
    t.meta.d = cfg.value("d", h.D - 1.0);
    t.meta.symmetry = cfg.value("symmetry", std::string("spherical"));
    t.columns = {"phi"};
    t.r = grid.nodes();
    t.values = {std::move(values)};
    return {{t.meta.scenario, std::move(t)}};
}

Files run_heat_transient(const json& cfg) {
    const fracdim::HeatScenario h = parse_heat(cfg);
    const int n = grid_nodes(cfg);
    const fracdim::RadialGrid grid(h.r_min, h.r_max, n);

    const double t_end = cfg.at("t_end").get<double>();
    const int n_steps = cfg.at("n_steps").get<int>();
    const int stride = cfg.value("snapshot_stride", n_steps);

    std::vector<double> initial(n, 0.0);
    if (cfg.contains("initial")) {
        auto f = fracdim::to_radial_field(cfg.at("initial").get<std::string>());
        for (int i = 0; i < n; ++i) initial[i] = f(grid.node(i));
    }

    const auto snapshots = fracdim::transient(h, grid, initial, t_end, n_steps, stride);
    Files out;
    for (const auto& p : snapshots) {
        fracdim::ProfileTable t = fracdim::to_table(p);
        t.meta.scenario = "heat_transient";
        out.emplace_back("heat_transient_t=" + time_suffix(p.meta.time), std::move(t));
    }
    return out;
}

Files run_electro_cylinder(const json& cfg) {
    fracdim::CylinderChargeScenario s;
    s.D = cfg.value("D", 3.0);
    s.R = cfg.at("R").get<double>();
    s.material = parse_material(cfg);

    const double r_max = cfg.value("r_max", 2.0 * s.R);
    const int n = grid_nodes(cfg);
    const fracdim::RadialGrid grid(0.0, r_max, n);
    std::vector<double> phi(n), E(n);
    for (int i = 0; i < n; ++i) {
        const double r = grid.node(i);
        phi[i] = fracdim::potential(s, r);
        E[i] = fracdim::field(s, r).value;
    }

    fracdim::ProfileTable t;
    t.meta.scenario = "electro_cylinder";
    t.meta.D = s.D;
    t.meta.d = s.D - 1.0;
    t.meta.symmetry = "cylindrical";
    t.columns = {"phi", "E"};
    t.r = grid.nodes();
    t.values = {std::move(phi), std::move(E)};
    return {{t.meta.scenario, std::move(t)}};
}

std::function<double(double)> make_op_evaluator(const std::string& op,
                                                const fracdim::DimensionSpec& spec,
                                                const json& cfg) {
    auto scalar = [&cfg]() {
        return fracdim::to_radial_field(cfg.at("phi").get<std::string>());
    };
    auto vec = [&cfg]() {
        return fracdim::RadialVectorField{
            fracdim::to_radial_field(cfg.at("u").get<std::string>())};
    };

    if (op == "div") {
        auto u = vec();
        return [u, spec](double r) { return fracdim::div_radial(u, spec, r); };
    }
    if (op == "grad") {
        auto p = scalar();
        return [p, spec](double r) { return fracdim::grad_radial(p, spec, r).value; };
    }
    if (op == "curl") {
        auto u = vec();
        return [u, spec](double r) { return fracdim::curl_radial(u, spec, r).value; };
    }
    if (op == "curl_rz") {
        auto a = fracdim::to_axial_field(
            fracdim::parse_expression(cfg.at("u_r").get<std::string>()),
            fracdim::parse_expression(cfg.at("u_z").get<std::string>()));
        const double z = cfg.value("z", 0.0);
        return [a, spec, z](double r) { return fracdim::curl_rz(a, spec, r, z).value; };
    }
    if (op == "laplacian_scalar") {
        auto p = scalar();
        return [p, spec](double r) { return fracdim::laplacian_scalar(p, spec, r); };
    }
    if (op == "laplacian_vector") {
        auto u = vec();
        return [u, spec](double r) { return fracdim::laplacian_vector(u, spec, r).value; };
    }
    if (op == "stillinger") {
        auto p = scalar();
        const double D = spec.D();
        return [p, D](double r) { return fracdim::stillinger_laplacian_radial(p, D, r); };
    }
    if (op == "div_generalized") {
        auto u = vec();
        return [u, spec](double r) { return fracdim::div_generalized(u, spec, r); };
    }
    if (op == "grad_generalized") {
        auto p = scalar();
        return [p, spec](double r) { return fracdim::grad_generalized(p, spec, r).value; };
    }
    if (op == "laplacian_scalar_generalized") {
        auto p = scalar();
        return [p, spec](double r) {
            return fracdim::laplacian_scalar_generalized(p, spec, r);
        };
    }
    if (op == "laplacian_vector_generalized") {
        auto u = vec();
        return [u, spec](double r) {
            return fracdim::laplacian_vector_generalized(u, spec, r).value;
        };
    }
    throw std::invalid_argument("unknown operator '" + op + "'");
}

Files run_ops_eval(const json& cfg) {
    const std::string op = cfg.at("op").get<std::string>();
    const fracdim::DimensionSpec spec = make_spec(cfg);
    const auto eval = make_op_evaluator(op, spec, cfg);

    if (cfg.contains("r")) {
        print_value(eval(cfg["r"].get<double>()));
        return {};
    }

    const double r_min = cfg.at("r_min").get<double>();
    const double r_max = cfg.at("r_max").get<double>();
    const int n = grid_nodes(cfg);
    const fracdim::RadialGrid grid(r_min, r_max, n);
    std::vector<double> values(n);
    for (int i = 0; i < n; ++i) values[i] = eval(grid.node(i));

    fracdim::ProfileTable t;
    t.meta.scenario = "ops_eval";
    t.meta.D = spec.D();
    t.meta.d = spec.d();
    t.meta.symmetry = to_string(spec.symmetry());
    t.columns = {op};
    t.r = grid.nodes();
    t.values = {std::move(values)};
    return {{t.meta.scenario, std::move(t)}};
}

Files run_integrate(const json& cfg) {
    const double D = cfg.at("D").get<double>();
    const auto f = fracdim::to_radial_field(cfg.at("f").get<std::string>());
    const double r_min = cfg.value("r_min", 0.0);

    fracdim::RadialInterval iv = fracdim::RadialInterval::to_infinity(r_min);
    if (cfg.contains("r_max") && cfg["r_max"].is_number())
        iv = fracdim::RadialInterval::finite(r_min, cfg["r_max"].get<double>());
    else if (cfg.contains("r_max")) {
        const std::string top = cfg["r_max"].get<std::string>();
        if (top != "inf" && top != "infinity")
            throw std::invalid_argument("r_max must be a number or \"inf\"");
    }

    print_value(fracdim::integrate_radial(f, D, iv, quadrature_config(cfg)));
    return {};
}

Files run_verify(const json& cfg) {
    const std::string check = cfg.at("check").get<std::string>();
    if (check != "gauss")
        throw std::invalid_argument("unknown verify check '" + check + "'");
    const fracdim::DimensionSpec spec = make_spec(cfg);
    const fracdim::RadialVectorField u{
        fracdim::to_radial_field(cfg.at("u").get<std::string>())};
    const double R1 = cfg.at("r_min").get<double>();
    const double R2 = cfg.at("r_max").get<double>();
    const double tol = cfg.value("tolerance", 1e-8);

    const double residual = fracdim::gauss_residual(u, spec, R1, R2);
    print_value(residual);
    if (!(residual <= tol)) {
        char buf[128];
        std::snprintf(buf, sizeof buf, "gauss residual %.3e exceeds tolerance %.3e",
                      residual, tol);
        throw fracdim::NumericError(buf);
    }
    return {};
}

Files run_scenario(const json& cfg) {
    const std::string kind = cfg.at("kind").get<std::string>();
    if (kind == "elasticity_ball") return run_elasticity(cfg, true);
    if (kind == "elasticity_pipe") return run_elasticity(cfg, false);
    if (kind == "heat_steady") return run_heat_steady(cfg);
    if (kind == "heat_transient") return run_heat_transient(cfg);
    if (kind == "electro_cylinder") return run_electro_cylinder(cfg);
    if (kind == "ops_eval") return run_ops_eval(cfg);
    if (kind == "integrate") return run_integrate(cfg);
    if (kind == "verify") return run_verify(cfg);
    throw std::invalid_argument("unknown scenario kind '" + kind + "'");
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"radial vector calculus and boundary-value scenarios in non-integer dimension"};
    std::string scenario_path;
    std::string out_dir = ".";
    std::string format = "csv";
    double dimension = 0.0, boundary_dimension = 0.0, tolerance = 0.0;
    int nodes = 0;

    app.add_option("--scenario", scenario_path, "scenario JSON file, or - for standard input")
        ->required();
    app.add_option("--out", out_dir, "output directory (created if missing)");
    app.add_option("--format", format, "output format")
        ->check(CLI::IsMember({"csv", "json"}));
    app.add_option("--dimension", dimension, "override the config's D");
    app.add_option("--boundary-dimension", boundary_dimension, "override the config's d");
    app.add_option("--nodes", nodes, "override the config's grid node count");
    app.add_option("--tolerance", tolerance, "override the config's tolerance");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 2;
    }

    try {
        json cfg = load_config(scenario_path);
        if (app.count("--dimension")) cfg["D"] = dimension;
        if (app.count("--boundary-dimension")) cfg["d"] = boundary_dimension;
        if (app.count("--nodes")) cfg["nodes"] = nodes;
        if (app.count("--tolerance")) cfg["tolerance"] = tolerance;

        // Compute everything first so a failure never leaves partial output.
        Files files = run_scenario(cfg);
        if (!files.empty()) std::filesystem::create_directories(out_dir);
        for (auto& [base, table] : files)
            fracdim::write_file(table, out_dir + "/" + base + "." + format, format);
        return 0;
    } catch (const fracdim::ParseError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const fracdim::NumericError& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const json::exception& e) {
        std::cerr << "error: invalid scenario config: " << e.what() << "\n";
        return 2;
    } catch (const std::domain_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::invalid_argument& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 2;
    } catch (const std::overflow_error& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    } catch (const std::exception& e) {
        std::cerr << "error: " << e.what() << "\n";
        return 3;
    }
}
