#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <sstream>

using namespace geneig;
using fixtures::f1;

TEST(GenMat, BlockMatrixLayout)
{
    BlockSpec spec;
    spec.entries.push_back({f1, {3}});
    const MatQ a = build_block_matrix(spec);
    ASSERT_EQ(a.rows(), 6u);
    EXPECT_EQ(spec.order(), 6u);
    const MatQ c = companion(f1);
    for (std::size_t b = 0; b < 3; ++b)
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j) EXPECT_EQ(a.at(2 * b + i, 2 * b + j), c.at(i, j));
    for (std::size_t b = 0; b + 1 < 3; ++b) {
        EXPECT_EQ(a.at(2 * b, 2 * b + 2), 1);
        EXPECT_EQ(a.at(2 * b + 1, 2 * b + 3), 1);
        EXPECT_EQ(a.at(2 * b, 2 * b + 3), 0);
    }
    EXPECT_EQ(char_poly(a), pow(f1, 3));
    EXPECT_EQ(run_full(a).factors[0].chain_lengths(), (std::vector<unsigned>{3}));
    EXPECT_THROW(build_block_matrix(BlockSpec{}), std::invalid_argument);
}

TEST(GenMat, SuiteStructures)
{
    const BlockSpec s71 = suite_spec("paper71", 3);
    EXPECT_EQ(s71.order(), 30u);
    EXPECT_EQ(char_poly(build_block_matrix(s71)), pow(eisenstein_poly(3, 2), 10));
    const BlockSpec s72 = suite_spec("paper72", 2);
    const PolyQ want = pow(eisenstein_poly(2, 2), 5) * pow(eisenstein_poly(2, 3), 2) * eisenstein_poly(4, 5) *
                       eisenstein_poly(2, 7);
    EXPECT_EQ(char_poly(build_block_matrix(s72)), want);
    EXPECT_THROW(suite_spec("nope", 2), std::invalid_argument);

    const EigenstructureReport rep = run_full(scramble(build_block_matrix(s71), 5, 120));
    ASSERT_EQ(rep.factors.size(), 1u);
    EXPECT_EQ(rep.factors[0].counts, (std::vector<std::size_t>{0, 3, 2, 1}));
}

TEST(GenMat, EisensteinPolynomialsAreIrreducible)
{
    for (unsigned d = 1; d <= 8; ++d)
        for (long p : {2L, 3L, 5L}) {
            const Factorization fac = factor_rationals(eisenstein_poly(d, p));
            ASSERT_EQ(fac.factors.size(), 1u);
            EXPECT_EQ(fac.factors[0].multiplicity, 1u);
        }
    EXPECT_EQ(eisenstein_poly(1, 2), (PolyQ{2, 1}));
    EXPECT_EQ(eisenstein_poly(3, 2), (PolyQ{2, 2, 0, 1}));
}

TEST(GenMat, ScramblePreservesCharpolyAndIsDeterministic)
{
    const MatQ a = build_block_matrix(parse_block_spec("5,1,1:2,1;-1,1:2;3,0,1:1"));
    EXPECT_EQ(scramble(a, 1, 0), a);
    for (std::uint64_t seed = 1; seed <= 5; ++seed) {
        const MatQ s = scramble(a, seed, 4 * a.rows());
        EXPECT_EQ(char_poly(s), char_poly(a));
        EXPECT_EQ(s, scramble(a, seed, 4 * a.rows()));
        EXPECT_NE(s, a);
    }
    EXPECT_NE(scramble(a, 1, 40), scramble(a, 2, 40));
    EXPECT_THROW(scramble(MatQ(2, 3), 1, 3), ShapeError);
}

TEST(GenMat, ScrambleIsAnElementarySimilarity)
{
    // One step must equal T A T^{-1} with T = I + c E_ji for some i != j and
    // 0 < |c| <= bound; find that (i, j, c) by search.
    const MatQ a = build_block_matrix(parse_block_spec("1,1:2;2,0,1:1"));
    const MatQ s = scramble(a, 77, 1, 3);
    const std::size_t n = a.rows();
    bool found = false;
    for (std::size_t i = 0; i < n && !found; ++i)
        for (std::size_t j = 0; j < n && !found; ++j) {
            if (i == j) continue;
            for (long c = -3; c <= 3 && !found; ++c) {
                if (c == 0) continue;
                oracle::Mat t = oracle::identity(n), ti = oracle::identity(n);
                t[j][i] = c;
                ti[j][i] = -c;
                found = fixtures::from_oracle(oracle::mul(oracle::mul(t, fixtures::to_oracle(a)), ti)) == s;
            }
        }
    EXPECT_TRUE(found);
}

TEST(GenMat, SpecParsing)
{
    const BlockSpec s = parse_block_spec("5,1,1:3,1 ; -2,1:2");
    ASSERT_EQ(s.entries.size(), 2u);
    EXPECT_EQ(s.entries[0].f, f1);
    EXPECT_EQ(s.entries[0].chains, (std::vector<unsigned>{3, 1}));
    EXPECT_EQ(s.order(), 10u);
    EXPECT_EQ(format_block_spec(s), "5,1,1:3,1;-2,1:2");
    EXPECT_THROW(parse_block_spec(""), ParseError);
    EXPECT_THROW(parse_block_spec("5,1,1"), ParseError);
    EXPECT_THROW(parse_block_spec("5,1,2:1"), ParseError);
    EXPECT_THROW(parse_block_spec("5,1,1:0"), ParseError);
    EXPECT_THROW(parse_block_spec("5:1"), ParseError);
}

TEST(GenMat, RationalEigenvaluesMatchKernelDimensions)
{
    const std::vector<std::string> specs = {"-2,1:3,1,1", "1,1:2,2;-3,1:1", "0,1:4;2,1:1,1", "-1,1:1,1,1;1,1:3"};
    std::uint64_t seed = 500;
    for (const auto& sp : specs) {
        const BlockSpec spec = parse_block_spec(sp);
        const MatQ a0 = build_block_matrix(spec);
        const MatQ a = scramble(a0, seed++, 4 * a0.rows());
        const EigenstructureReport rep = run_full(a);
        const oracle::Mat o = fixtures::to_oracle(a);
        for (const auto& fr : rep.factors) {
            ASSERT_EQ(fr.f.degree(), 1);
            const Rat alpha = -fr.f.coeff(0);
            EXPECT_EQ(fr.chain_lengths(), oracle::chain_lengths_from_kernels(o, alpha)) << sp;
        }
    }
}

TEST(Bench, EmptyAndSmallSuites)
{
    EXPECT_TRUE(bench_suite("paper71", {}, 1).empty());
    const auto rows = bench_suite("paper71", {2}, 1);
    ASSERT_EQ(rows.size(), 2u);
    for (const auto& r : rows) {
        EXPECT_EQ(r.n, 20u);
        EXPECT_TRUE(r.ok);
        EXPECT_EQ(r.counts, (std::vector<std::size_t>{0, 3, 2, 1}));
        EXPECT_GT(r.mat_vec, 0u);
        EXPECT_LE(r.t, r.r);
    }
    EXPECT_TRUE(rows[0].proc4);
    EXPECT_FALSE(rows[1].proc4);
    std::ostringstream table, csv;
    print_bench_table(table, rows);
    print_bench_csv(csv, rows);
    EXPECT_NE(table.str().find("20"), std::string::npos);
    const std::string text = csv.str();
    EXPECT_EQ(std::count(text.begin(), text.end(), '\n'), 3);
    EXPECT_THROW(bench_suite("unknown", {2}, 1), std::invalid_argument);
}
