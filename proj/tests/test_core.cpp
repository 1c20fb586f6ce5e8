#include <gtest/gtest.h>

#include <cmath>

#include "generators.hpp"
#include "nnatoms/error.hpp"
#include "nnatoms/examples.hpp"
#include "nnatoms/index_set.hpp"
#include "nnatoms/kernel.hpp"
#include "nnatoms/matrix.hpp"
#include "nnatoms/matrix_market.hpp"
#include "nnatoms/rational.hpp"

using namespace nnatoms;

TEST(IndexSet, BasicOperations) {
    auto a = IndexSet::of(70, {0, 3, 65});
    auto b = IndexSet::of(70, {3, 4});
    EXPECT_EQ(a.count(), 3u);
    EXPECT_TRUE(a.contains(65));
    EXPECT_EQ((a | b).members(), (std::vector<std::size_t>{0, 3, 4, 65}));
    EXPECT_EQ((a & b).members(), (std::vector<std::size_t>{3}));
    EXPECT_EQ((a - b).members(), (std::vector<std::size_t>{0, 65}));
    EXPECT_EQ(a.complement().count(), 67u);
    EXPECT_TRUE((a & b).is_subset_of(a));
    EXPECT_EQ(a.to_string(), "{0,3,65}");
    EXPECT_EQ(*a.first(), 0u);
    EXPECT_FALSE(IndexSet(5).first().has_value());
}

TEST(IndexSet, RejectsOutOfRangeAndMismatch) {
    IndexSet s(3);
    EXPECT_THROW(s.insert(3), std::out_of_range);
    EXPECT_THROW((void)(s | IndexSet(4)), std::invalid_argument);
}

TEST(IndexSet, MaskRoundTrip) {
    for (std::uint64_t m = 0; m < 64; ++m) EXPECT_EQ(IndexSet::from_mask(6, m).mask(), m);
}

TEST(Rational, ParsesDecimalsExactly) {
    EXPECT_EQ(parse_rational("0.1"), Rational(1, 10));
    EXPECT_EQ(parse_rational("2.5e-1"), Rational(1, 4));
    EXPECT_EQ(parse_rational("-3/6"), Rational(-1, 2));
    EXPECT_EQ(parse_rational("1E2"), Rational(100));
    EXPECT_THROW(parse_rational("1/0"), InputError);
    EXPECT_THROW(parse_rational("abc"), InputError);
    EXPECT_THROW(parse_rational(""), InputError);
}

TEST(Rational, LeadingZerosAreDecimal) {
    EXPECT_EQ(parse_rational("010"), Rational(10));
    EXPECT_EQ(parse_rational("08"), Rational(8));
    EXPECT_EQ(parse_rational("010/03"), Rational(10, 3));
    EXPECT_EQ(parse_rational("0.025"), Rational(1, 40));
}

TEST(Rational, FormatsTerminatingAsDecimal) {
    EXPECT_EQ(format_rational(Rational(1, 4)), "0.25");
    EXPECT_EQ(format_rational(Rational(3)), "3");
    EXPECT_EQ(format_rational(Rational(1, 3)), "1/3");
    for (const char* s : {"0.125", "17", "2/7", "-1.5"}) {
        EXPECT_EQ(parse_rational(format_rational(parse_rational(s))), parse_rational(s));
    }
}

TEST(Matrix, RejectsBadInput) {
    Eigen::MatrixXd neg(2, 2);
    neg << 1, -1, 0, 1;
    EXPECT_THROW(NonnegativeMatrix::from_float(neg), InputError);
    Eigen::MatrixXd nan = Eigen::MatrixXd::Constant(1, 1, std::nan(""));
    EXPECT_THROW(NonnegativeMatrix::from_float(nan), InputError);
    EXPECT_THROW(NonnegativeMatrix::from_float(Eigen::MatrixXd(2, 3)), InputError);
    EXPECT_THROW(NonnegativeMatrix::from_float(Eigen::MatrixXd(0, 0)), InputError);
}

TEST(Matrix, ExactPowerAndRestriction) {
    auto m = NonnegativeMatrix::from_rows({{1, 1}, {0, 1}}, Backend::Exact);
    auto p = m.power(3);
    EXPECT_EQ(p.exact()(0, 1), Rational(3));
    auto r = m.restricted(IndexSet::of(2, {1}));
    EXPECT_EQ(r.exact()(0, 1), Rational(0));
    EXPECT_EQ(r.exact()(1, 1), Rational(1));
    EXPECT_THROW(NonnegativeMatrix::from_rows({{1}}).exact(), std::logic_error);
}

TEST(MatrixMarket, ArrayIsColumnMajor) {
    // Columns (1,1) then (0,1) give [[1,0],[1,1]].
    auto m = load_matrix_market("%%MatrixMarket matrix array real general\n2 2\n1\n1\n0\n1\n");
    EXPECT_EQ(m, NonnegativeMatrix::from_rows({{1, 0}, {1, 1}}));
}

TEST(MatrixMarket, DegenerateAndErrors) {
    auto z = load_matrix_market("%%MatrixMarket matrix array real general\n1 1\n0\n");
    EXPECT_EQ(z.size(), 1u);
    EXPECT_EQ(z(0, 0), 0.0);
    EXPECT_THROW(load_matrix_market("%%MatrixMarket matrix array real general\n1 1\n-1\n"), InputError);
    EXPECT_THROW(load_matrix_market("%%MatrixMarket matrix coordinate real general\n2 2 2\n1 1 1\n1 1 2\n"),
                 InputError);
    EXPECT_THROW(load_matrix_market("%%MatrixMarket matrix coordinate real general\n2 2 1\n3 1 1\n"), InputError);
    EXPECT_THROW(load_matrix_market("%%MatrixMarket matrix array real general\n2 3\n1\n1\n1\n1\n1\n1\n"),
                 InputError);
    EXPECT_THROW(load_matrix_market("%%MatrixMarket matrix coordinate real symmetric\n1 1 1\n1 1 1\n"),
                 InputError);
    EXPECT_THROW(load_matrix_market("not a header\n"), InputError);
}

TEST(MatrixMarket, PatternAndComments) {
    auto m = load_matrix_market("%%MatrixMarket matrix coordinate pattern general\n% comment\n2 2 1\n2 1\n");
    EXPECT_EQ(m, NonnegativeMatrix::from_rows({{0, 0}, {1, 0}}));
}

TEST(MatrixMarket, RoundTripExact) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 50; ++trial) {
        auto m = gen::exact(gen::random_rational(rng, gen::uniform(rng, 1, 7), 0.4));
        for (auto layout : {MatrixMarketLayout::Coordinate, MatrixMarketLayout::Array}) {
            EXPECT_EQ(load_matrix_market(write_matrix_market(m, layout), Backend::Exact), m);
        }
    }
    auto third = NonnegativeMatrix::from_exact(RationalMatrix{{Rational(1, 3)}});
    EXPECT_EQ(load_matrix_market(write_matrix_market(third), Backend::Exact), third);
}

TEST(MatrixMarket, RoundTripFloat) {
    gen::Rng rng(12);
    std::uniform_real_distribution<double> u(0.0, 10.0);
    for (int trial = 0; trial < 50; ++trial) {
        const std::size_t n = gen::uniform(rng, 1, 6);
        Eigen::MatrixXd v(n, n);
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) v(i, j) = gen::coin(rng, 0.5) ? u(rng) : 0.0;
        auto m = NonnegativeMatrix::from_float(v);
        auto back = load_matrix_market(write_matrix_market(m));
        EXPECT_LE((back.values() - m.values()).cwiseAbs().maxCoeff(), 1e-15 * std::max(1.0, m.max_entry()));
    }
}

TEST(Kernel, VolterraMidpoint) {
    auto t = discretize_kernel(volterra_kernel(4), Backend::Exact);
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(t.exact()(i, j), i >= j ? Rational(1, 4) : Rational(0));
}

TEST(Kernel, ZeroKernel) {
    KernelSpec zero{"zero", [](double, double) { return 0.0; }, 5};
    EXPECT_EQ(discretize_kernel(zero).max_entry(), 0.0);
}

TEST(Kernel, K3Pattern) {
    auto t = discretize_kernel(k3_kernel(4));
    for (std::size_t i = 0; i < 4; ++i)
        for (std::size_t j = 0; j < 4; ++j) EXPECT_EQ(t(i, j) > 0, (i < 2 && 2 <= j) || (j < 2 && 2 <= i));
}

TEST(Kernel, SupportMatchesKernelPositivity) {
    for (const char* name : {"volterra", "k1", "k3"}) {
        for (std::size_t m : {3u, 8u, 13u}) {
            auto spec = kernel_by_name(name, m);
            auto t = discretize_kernel(spec);
            for (std::size_t i = 0; i < m; ++i) {
                for (std::size_t j = 0; j < m; ++j) {
                    const double x = (i + 0.5) / m, y = (j + 0.5) / m;
                    EXPECT_EQ(t(i, j) > 0, spec.kernel(x, y) > 0) << name << " " << i << "," << j;
                }
            }
        }
    }
}

TEST(Kernel, RejectsNegativeAndBadSpecs) {
    KernelSpec bad{"bad", [](double, double) { return -1.0; }, 2};
    EXPECT_THROW(discretize_kernel(bad), InputError);
    KernelSpec inf{"inf", [](double, double) { return INFINITY; }, 2};
    EXPECT_THROW(discretize_kernel(inf), InputError);
    EXPECT_THROW(parse_kernel_spec("{\"kernel\":\"volterra\"}"), InputError);
    EXPECT_THROW(parse_kernel_spec("{\"kernel\":\"nope\",\"grid\":3}"), InputError);
    EXPECT_THROW(parse_kernel_spec("[1,2"), InputError);
    EXPECT_EQ(parse_kernel_spec("{\"kernel\":\"k1\",\"grid\":6}").grid, 6u);
}

TEST(Examples, Builtins) {
    EXPECT_EQ(builtin_example("two-cycle"), NonnegativeMatrix::from_rows({{0, 1}, {1, 0}}, Backend::Exact));
    EXPECT_EQ(builtin_example("graph-supp"), NonnegativeMatrix::from_rows({{1, 0}, {1, 1}}, Backend::Exact));
    const auto g = builtin_example("fig-m-graph-6");
    const int pattern[6][6] = {{0, 1, 0, 0, 0, 0}, {1, 0, 1, 0, 0, 0}, {0, 1, 0, 0, 0, 0},
                               {0, 1, 0, 0, 0, 0}, {0, 1, 0, 0, 0, 0}, {0, 0, 0, 1, 1, 0}};
    for (std::size_t i = 0; i < 6; ++i)
        for (std::size_t j = 0; j < 6; ++j) EXPECT_EQ(g(i, j) > 0, pattern[i][j] == 1);
    EXPECT_EQ(builtin_example("volterra-3").size(), 3u);
    EXPECT_THROW(builtin_example("nope"), InputError);
    for (auto name : builtin_example_names()) {
        if (auto pos = name.find("<m>"); pos != std::string::npos) name.replace(pos, 3, "5");
        EXPECT_NO_THROW(builtin_example(name)) << name;
    }
}
