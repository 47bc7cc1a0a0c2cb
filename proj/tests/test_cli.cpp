// Drives the command-line binary end to end through a shell: scenario files
// in, exit codes and emitted files out. The binary path arrives as argv[1].

#include <sys/wait.h>
#include <unistd.h>

#include <cmath>
#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "fracdim/elasticity.hpp"

namespace fs = std::filesystem;

namespace {

int failures = 0;

void expect(bool ok, const std::string& what) {
    if (!ok) {
        ++failures;
        std::fprintf(stderr, "FAIL: %s\n", what.c_str());
    }
}

std::string bin_path;
fs::path work;

int run(const std::string& args) {
    const std::string cmd = "\"" + bin_path + "\" " + args;
    const int status = std::system(cmd.c_str());
    if (status == -1) return -1;
    return WIFEXITED(status) ? WEXITSTATUS(status) : -2;
}

fs::path write_config(const std::string& name, const std::string& text) {
    const fs::path path = work / name;
    std::ofstream out(path);
    out << text;
    return path;
}

std::string slurp(const fs::path& path) {
    std::ifstream in(path, std::ios::binary);
    std::ostringstream buf;
    buf << in.rdbuf();
    return buf.str();
}

std::vector<std::string> split(const std::string& line, char sep) {
    std::vector<std::string> out;
    std::string tok;
    std::istringstream in(line);
    while (std::getline(in, tok, sep)) out.push_back(tok);
    return out;
}

void test_elasticity_csv() {
    const fs::path cfg = write_config("ball.json", R"({
        "kind": "elasticity_ball", "D": 2.5,
        "R1": 1.0, "R2": 2.0, "p1": 3.0, "p2": 1.0, "nodes": 11
    })");
    const fs::path out = work / "ball_out";
    expect(run("--scenario " + cfg.string() + " --out " + out.string()) == 0,
           "elasticity_ball run exits 0");

    const fs::path csv = out / "elasticity_ball.csv";
    expect(fs::exists(csv), "elasticity_ball.csv written");
    const std::string text = slurp(csv);
    const auto lines = split(text, '\n');
    expect(lines.size() == 12, "header plus one line per node");
    expect(lines.at(0) == "r,u_r,sigma_rr", "csv header names the columns");

    const auto first = split(lines.at(1), ',');
    expect(first.size() == 3, "three fields per row");
    expect(std::strtod(first.at(0).c_str(), nullptr) == 1.0, "first row sits at R1");
    const double sigma_r1 = std::strtod(first.at(2).c_str(), nullptr);
    expect(std::abs(sigma_r1 + 3.0) <= 1e-10, "radial stress meets the inner pressure");

    // Row three of the file against the library evaluated at the same node.
    fracdim::ElasticScenario s;
    s.geometry = fracdim::ElasticGeometry::hollow_ball;
    s.D = 2.5;
    s.R1 = 1.0;
    s.R2 = 2.0;
    s.p1 = 3.0;
    s.p2 = 1.0;
    const auto row = split(lines.at(2), ',');
    const double r = std::strtod(row.at(0).c_str(), nullptr);
    expect(std::abs(std::strtod(row.at(1).c_str(), nullptr) -
                    fracdim::ball_displacement(s, r)) <= 1e-14,
           "displacement column matches the library");
    expect(std::abs(std::strtod(row.at(2).c_str(), nullptr) -
                    fracdim::ball_stress(s, r)) <= 1e-14,
           "stress column matches the library");
}

void test_json_format_and_nodes_override() {
    const fs::path cfg = write_config("ball_json.json", R"({
        "kind": "elasticity_ball", "D": 2.5,
        "R1": 1.0, "R2": 2.0, "p1": 3.0, "p2": 1.0, "nodes": 11
    })");
    const fs::path out = work / "ball_json_out";
    expect(run("--scenario " + cfg.string() + " --out " + out.string() +
               " --format json --nodes 7") == 0,
           "json emission exits 0");
    const fs::path path = out / "elasticity_ball.json";
    expect(fs::exists(path), "elasticity_ball.json written");
    const auto doc = nlohmann::json::parse(slurp(path));
    expect(doc.at("meta").at("D").get<double>() == 2.5, "meta carries D");
    expect(doc.at("meta").at("symmetry") == "spherical", "meta carries the symmetry");
    expect(doc.at("columns") == nlohmann::json({"r", "u_r", "sigma_rr"}),
           "json column list");
    expect(doc.at("rows").size() == 7, "--nodes override shrinks the grid");
}

void test_ops_eval_point() {
    const fs::path cfg = write_config("div_point.json", R"({
        "kind": "ops_eval", "op": "div", "symmetry": "spherical",
        "D": 3.0, "u": "r", "r": 2.0
    })");
    const fs::path out = work / "ops_point_out";
    const fs::path captured = work / "div_point.txt";
    expect(run("--scenario " + cfg.string() + " --out " + out.string() + " > " +
               captured.string()) == 0,
           "point evaluation exits 0");
    expect(slurp(captured) == "3\n", "divergence of r in three dimensions prints 3");
    expect(!fs::exists(out), "point evaluation creates no output directory");
}

void test_verify_gauss() {
    const fs::path cfg = write_config("gauss.json", R"({
        "kind": "verify", "check": "gauss", "u": "r^2",
        "D": 2.5, "r_min": 1.0, "r_max": 2.0
    })");
    expect(run("--scenario " + cfg.string() + " > /dev/null") == 0,
           "divergence theorem check passes for a smooth field");
}

void test_dimension_override_rejected() {
    const fs::path cfg = write_config("ball_override.json", R"({
        "kind": "elasticity_ball", "D": 2.5,
        "R1": 1.0, "R2": 2.0, "p1": 3.0, "p2": 1.0, "nodes": 11
    })");
    const fs::path out = work / "override_out";
    expect(run("--scenario " + cfg.string() + " --out " + out.string() +
               " --dimension 3.5 2> /dev/null") == 2,
           "out-of-range dimension override exits 2");
    expect(!fs::exists(out), "failed run leaves no output behind");
}

void test_heat_transient_files() {
    const fs::path cfg = write_config("transient.json", R"({
        "kind": "heat_transient", "symmetry": "spherical", "D": 3.0,
        "r_min": 1.0, "r_max": 2.0, "nodes": 21,
        "t_end": 0.01, "n_steps": 10, "initial": "r-1"
    })");
    const fs::path out = work / "transient_out";
    expect(run("--scenario " + cfg.string() + " --out " + out.string()) == 0,
           "transient march exits 0");
    std::set<std::string> names;
    if (fs::exists(out))
        for (const auto& entry : fs::directory_iterator(out))
            names.insert(entry.path().filename().string());
    expect(names ==
               std::set<std::string>{"heat_transient_t=0.csv", "heat_transient_t=0.01.csv"},
           "snapshot files are stamped with their times");
}

void test_stdin_scenario() {
    const fs::path captured = work / "integrate.txt";
    const std::string cmd =
        "printf '%s' '{\"kind\":\"integrate\",\"D\":3,\"f\":\"exp(-r^2)\","
        "\"r_max\":\"inf\"}' | \"" +
        bin_path + "\" --scenario - > " + captured.string();
    const int status = std::system(cmd.c_str());
    expect(WIFEXITED(status) && WEXITSTATUS(status) == 0, "scenario over stdin exits 0");
    const double got = std::strtod(slurp(captured).c_str(), nullptr);
    const double want = std::pow(M_PI, 1.5);
    expect(std::abs(got - want) <= 1e-8 * want,
           "gaussian over all space integrates to pi^(3/2)");
}

void test_error_exit_codes() {
    const fs::path bad_expr = write_config("bad_expr.json", R"({
        "kind": "ops_eval", "op": "grad", "symmetry": "spherical",
        "D": 3.0, "phi": "sin(", "r": 1.0
    })");
    expect(run("--scenario " + bad_expr.string() + " 2> /dev/null") == 2,
           "expression syntax error exits 2");

    const fs::path pinched = write_config("pipe_d2.json", R"({
        "kind": "elasticity_pipe", "D": 2.0,
        "R1": 1.0, "R2": 2.0, "p1": 1.0, "p2": 0.0
    })");
    expect(run("--scenario " + pinched.string() + " --out " + (work / "p2").string() +
               " 2> /dev/null") == 3,
           "unsatisfiable scenario exits 3");

    const fs::path missing = write_config("missing_key.json", R"({
        "kind": "elasticity_ball", "D": 2.5, "R2": 2.0
    })");
    expect(run("--scenario " + missing.string() + " 2> /dev/null") == 2,
           "missing required key exits 2");

    expect(run("--scenario " + missing.string() + " --bogus 2> /dev/null") == 2,
           "unknown flag exits 2");
    expect(run("--help > /dev/null") == 0, "--help exits 0");
    expect(run("--scenario /no/such/file.json 2> /dev/null") == 2,
           "unreadable scenario file exits 2");
}

}  // namespace

int main(int argc, char** argv) {
    if (argc < 2) {
        std::fprintf(stderr, "usage: test_cli <path-to-cli-binary>\n");
        return 2;
    }
    bin_path = argv[1];
    work = fs::temp_directory_path() /
           ("fracdim_cli_test_" + std::to_string(static_cast<long>(::getpid())));
    fs::create_directories(work);

    test_elasticity_csv();
    test_json_format_and_nodes_override();
    test_ops_eval_point();
    test_verify_gauss();
    test_dimension_override_rejected();
    test_heat_transient_files();
    test_stdin_scenario();
    test_error_exit_codes();

    if (failures == 0) {
        std::printf("test_cli: all checks passed\n");
        return 0;
    }
    std::printf("test_cli: %d check(s) failed\n", failures);
    return 1;
}
