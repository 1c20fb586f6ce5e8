#include <gtest/gtest.h>

#include <array>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <memory>
#include <sys/wait.h>

#include "generators.hpp"
#include "nnatoms/error.hpp"
#include "nnatoms/examples.hpp"
#include "nnatoms/kernel.hpp"
#include "nnatoms/report.hpp"

using namespace nnatoms;

namespace {

struct RunResult {
    int code;
    std::string out;
};

RunResult run_cli(const std::string& args) {
    const std::string cmd = std::string(NNATOMS_CLI) + " " + args + " 2>&1";
    std::unique_ptr<FILE, int (*)(FILE*)> pipe(popen(cmd.c_str(), "r"), pclose);
    std::string out;
    std::array<char, 4096> buf{};
    std::size_t got = 0;
    while ((got = fread(buf.data(), 1, buf.size(), pipe.get())) > 0) out.append(buf.data(), got);
    const int status = pclose(pipe.release());
    return {WIFEXITED(status) ? WEXITSTATUS(status) : -1, out};
}

std::filesystem::path temp_path(const std::string& name) {
    return std::filesystem::temp_directory_path() / ("nnatoms_test_" + std::to_string(::getpid()) + "_" + name);
}

}  // namespace

TEST(Report, FigureExample) {
    auto r = build_report(builtin_example("fig-m-graph-6"), {.input = "fig", .oracle = true});
    EXPECT_EQ(r.atoms.size(), 4u);
    ASSERT_TRUE(r.invariant_sets);
    EXPECT_EQ(r.invariant_sets->size(), 6u);
    EXPECT_EQ(r.atoms[0].members, (Members{0, 1, 2}));
    ASSERT_TRUE(r.oracle);
    EXPECT_TRUE(r.oracle->atom_characterizations_agree);
    EXPECT_EQ(r.oracle->invariant_set_count, 6u);
}

TEST(Report, GraphSupp) {
    auto r = build_report(builtin_example("graph-supp"));
    ASSERT_TRUE(r.monatomic);
    EXPECT_FALSE(r.monatomic->is_monatomic);
    EXPECT_EQ(r.multiplicity_at_radius, 2u);
    ASSERT_TRUE(r.critical);
    EXPECT_EQ(r.critical->ascent, 2u);
    EXPECT_EQ(r.critical->ascent_exact, 2u);
}

TEST(Report, VolterraChain) {
    auto r = build_report(discretize_kernel(volterra_kernel(8)));
    EXPECT_EQ(r.atoms.size(), 8u);
    EXPECT_EQ(r.covers.size(), 7u);
    for (const auto& a : r.atoms) EXPECT_EQ(a.members.size(), 1u);
    EXPECT_EQ(r.critical->ascent, 8u);
}

TEST(Report, PowerSection) {
    auto r = build_report(builtin_example("two-cycle"), {.power = 2});
    ASSERT_EQ(r.periodicity.size(), 1u);
    EXPECT_EQ(r.periodicity[0].period, 2u);
    EXPECT_EQ(r.periodicity[0].d, 2u);
    EXPECT_EQ(r.periodicity[0].classes, (std::vector<Members>{{0}, {1}}));
}

TEST(Report, OracleRejectsLargeInputs) {
    EXPECT_THROW(build_report(builtin_example("volterra-17"), {.oracle = true}), InputError);
}

TEST(Report, RoundTripAndDeterminism) {
    gen::Rng rng(71);
    for (int t = 0; t < 30; ++t) {
        auto m = gen::exact(gen::random_structured(rng, gen::uniform(rng, 1, 10)));
        for (const auto& matrix : {m, m.to_float()}) {
            auto r = build_report(matrix, {.power = 3, .oracle = true});
            const auto text = to_json(r);
            EXPECT_EQ(from_json(text), r);
            EXPECT_EQ(to_json(build_report(matrix, {.power = 3, .oracle = true})), text);
        }
    }
}

TEST(Report, ExactScalarsAreStrings) {
    auto text = to_json(build_report(builtin_example("graph-supp")));
    EXPECT_NE(text.find("\"rho\": \"1\""), std::string::npos);
    auto ftext = to_json(build_report(builtin_example("graph-supp").to_float()));
    EXPECT_NE(ftext.find("\"rho\": 1.0"), std::string::npos);
}

TEST(Report, MalformedJson) {
    EXPECT_THROW(from_json("{"), InputError);
    EXPECT_THROW(from_json("{\"schema\": 2}"), InputError);
}

TEST(Dot, Examples) {
    auto single = export_dot(build_report(builtin_example("two-cycle")));
    EXPECT_NE(single.find("a0 ["), std::string::npos);
    EXPECT_EQ(single.find("->"), std::string::npos);

    auto fig = export_dot(build_report(builtin_example("fig-m-graph-6")));
    for (const char* edge : {"a0 -> a1;", "a0 -> a2;", "a1 -> a3;", "a2 -> a3;"}) {
        EXPECT_NE(fig.find(edge), std::string::npos) << edge;
    }
    EXPECT_NE(fig.find("penwidth=3"), std::string::npos);

    auto jordan = export_dot(build_report(NonnegativeMatrix::from_rows({{1, 1}, {0, 1}})));
    std::size_t filled = 0;
    for (std::size_t pos = 0; (pos = jordan.find("fillcolor", pos)) != std::string::npos; ++pos) ++filled;
    EXPECT_EQ(filled, 2u);
    EXPECT_NE(jordan.find("a0 -> a1;"), std::string::npos);
}

TEST(Cli, ExampleToStdout) {
    auto r = run_cli("--example fig-m-graph-6 --report -");
    EXPECT_EQ(r.code, 0);
    auto report = from_json(r.out);
    EXPECT_EQ(report.atoms.size(), 4u);
    EXPECT_EQ(report.invariant_sets->size(), 6u);
}

TEST(Cli, GraphSuppReport) {
    auto r = run_cli("--example graph-supp --report -");
    ASSERT_EQ(r.code, 0) << r.out;
    auto report = from_json(r.out);
    EXPECT_FALSE(report.monatomic->is_monatomic);
    EXPECT_EQ(*report.multiplicity_at_radius, 2u);
}

TEST(Cli, KernelDotFile) {
    const auto dot = temp_path("poset.dot");
    auto r = run_cli("--kernel volterra --grid 8 --dot " + dot.string());
    ASSERT_EQ(r.code, 0) << r.out;
    std::ifstream in(dot);
    std::string text((std::istreambuf_iterator<char>(in)), std::istreambuf_iterator<char>());
    std::size_t edges = 0;
    for (std::size_t pos = 0; (pos = text.find("->", pos)) != std::string::npos; ++pos) ++edges;
    EXPECT_EQ(edges, 7u);
    std::filesystem::remove(dot);
}

TEST(Cli, MatrixMarketAndKernelJsonInputs) {
    const auto mtx = temp_path("m.mtx");
    std::ofstream(mtx) << "%%MatrixMarket matrix coordinate real general\n2 2 3\n1 1 1\n2 1 1\n2 2 1\n";
    auto r = run_cli("--input " + mtx.string() + " --exact --oracle --report -");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(from_json(r.out).multiplicity_at_radius, 2u);
    const auto spec = temp_path("k.json");
    std::ofstream(spec) << "{\"kernel\": \"k3\", \"grid\": 4}";
    r = run_cli("--input " + spec.string() + " --power 2 --report -");
    ASSERT_EQ(r.code, 0) << r.out;
    EXPECT_EQ(from_json(r.out).periodicity.at(0).d, 2u);
    std::filesystem::remove(mtx);
    std::filesystem::remove(spec);
}

TEST(Cli, InputErrorsExitOne) {
    EXPECT_EQ(run_cli("--example nope").code, 1);
    EXPECT_EQ(run_cli("--input /nonexistent/file.mtx").code, 1);
    EXPECT_EQ(run_cli("").code, 1);
    EXPECT_EQ(run_cli("--kernel volterra").code, 1);
    EXPECT_EQ(run_cli("--example volterra-20 --oracle").code, 1);
    const auto neg = temp_path("neg.mtx");
    std::ofstream(neg) << "%%MatrixMarket matrix array real general\n1 1\n-1\n";
    EXPECT_EQ(run_cli("--input " + neg.string()).code, 1);
    std::filesystem::remove(neg);
}

TEST(Cli, ListExamples) {
    auto r = run_cli("--list-examples");
    EXPECT_EQ(r.code, 0);
    EXPECT_NE(r.out.find("fig-m-graph-6"), std::string::npos);
}
