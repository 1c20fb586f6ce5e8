#include <fstream>
#include <iostream>
#include <optional>
#include <sstream>
#include <string>

#include <CLI11.hpp>

#include "nnatoms/error.hpp"
#include "nnatoms/examples.hpp"
#include "nnatoms/kernel.hpp"
#include "nnatoms/matrix_market.hpp"
#include "nnatoms/report.hpp"

namespace {

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw nnatoms::InputError("cannot open " + path);
    std::ostringstream ss;
    ss << in.rdbuf();
    return ss.str();
}

void write_output(const std::string& path, const std::string& text) {
    if (path == "-") {
        std::cout << text;
        return;
    }
    std::ofstream out(path, std::ios::binary);
    if (!out) throw nnatoms::InputError("cannot write " + path);
    out << text;
}

bool ends_with(const std::string& s, const std::string& suffix) {
    return s.size() >= suffix.size() && s.compare(s.size() - suffix.size(), suffix.size(), suffix) == 0;
}

}  // namespace

int main(int argc, char** argv) {
    CLI::App app{"Atom decomposition and spectral structure of nonnegative matrices"};

    std::string input, example, kernel, report_path, dot_path;
    std::size_t grid = 0;
    std::optional<std::size_t> power;
    bool exact = false, oracle = false, list = false;
    nnatoms::Tolerances tol;

    auto* in_opt = app.add_option("--input", input, "Matrix Market file, or a .json kernel spec");
    auto* ex_opt = app.add_option("--example", example, "Built-in example name (see --list-examples)");
    auto* k_opt = app.add_option("--kernel", kernel, "Kernel name: volterra, k1, k3");
    auto* g_opt = app.add_option("--grid", grid, "Grid size for --kernel")->check(CLI::PositiveNumber);
    in_opt->excludes(ex_opt)->excludes(k_opt);
    ex_opt->excludes(k_opt);
    k_opt->needs(g_opt);
    g_opt->needs(k_opt);
    app.add_option("--report", report_path, "Write the JSON report here ('-' for stdout)");
    app.add_option("--dot", dot_path, "Write the atom order as Graphviz DOT");
    app.add_option("--power", power, "Analyse the atoms of T^n for this n")->check(CLI::PositiveNumber);
    app.add_flag("--exact", exact, "Use exact rational arithmetic for supports and multiplicities");
    app.add_flag("--oracle", oracle, "Cross-check by exhaustive enumeration (n <= 16)");
    app.add_flag("--list-examples", list, "Print the built-in example names");
    app.add_option("--rtol", tol.rtol, "Relative tolerance for eigen-residuals")->capture_default_str();
    app.add_option("--atol", tol.atol, "Radius tie tolerance, relative to rho(T)")->capture_default_str();
    app.add_option("--support-threshold", tol.support_threshold, "Entries <= this * max entry are zero")
        ->capture_default_str();

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int code = app.exit(e);
        return code == 0 ? 0 : 1;
    }

    if (list) {
        for (const auto& name : nnatoms::builtin_example_names()) std::cout << name << "\n";
        return 0;
    }

    try {
        const auto backend = exact ? nnatoms::Backend::Exact : nnatoms::Backend::Float;
        std::optional<nnatoms::NonnegativeMatrix> t;
        nnatoms::ReportOptions options;
        if (!input.empty()) {
            const std::string text = read_file(input);
            t = ends_with(input, ".json") ? nnatoms::discretize_kernel(nnatoms::parse_kernel_spec(text), backend)
                                          : nnatoms::load_matrix_market(text, backend);
            options.input = "file:" + input;
        } else if (!example.empty()) {
            auto m = nnatoms::builtin_example(example);
            t = exact ? m : m.to_float();
            options.input = "example:" + example;
        } else if (!kernel.empty()) {
            t = nnatoms::discretize_kernel(nnatoms::kernel_by_name(kernel, grid), backend);
            options.input = "kernel:" + kernel + ":" + std::to_string(grid);
        } else {
            throw nnatoms::InputError("one of --input, --example or --kernel is required");
        }
        options.tolerances = tol;
        options.power = power;
        options.oracle = oracle;

        const auto report = nnatoms::build_report(*t, options);
        if (!report_path.empty() || dot_path.empty()) write_output(report_path.empty() ? "-" : report_path,
                                                                   nnatoms::to_json(report));
        if (!dot_path.empty()) write_output(dot_path, nnatoms::export_dot(report));
        for (const auto& w : report.warnings) std::cerr << "nnatoms: warning: " << w << "\n";
    } catch (const nnatoms::InvariantViolation& e) {
        std::cerr << "nnatoms: invariant violation [" << e.theorem() << "]: " << e.what() << "\n";
        return 2;
    } catch (const nnatoms::Error& e) {
        std::cerr << "nnatoms: error: " << e.what() << "\n";
        return 1;
    }
    return 0;
}
