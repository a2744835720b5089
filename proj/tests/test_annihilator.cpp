#include "fixtures.hpp"

#include <gtest/gtest.h>

#include <random>

using namespace geneig;
using fixtures::f1;
using fixtures::f2;

namespace {

// Krylov dimension of v under A from the oracle rank of [v, Av, ..., A^n v].
std::size_t krylov_dim(const oracle::Mat& a, const oracle::Vec& v)
{
    oracle::Mat rows;
    oracle::Vec w = v;
    for (std::size_t k = 0; k <= a.size(); ++k) {
        rows.push_back(w);
        w = oracle::mul(a, w);
    }
    return oracle::rank(rows);
}

MatQ scrambled(const std::string& spec, std::uint64_t seed)
{
    const MatQ a0 = build_block_matrix(parse_block_spec(spec));
    return scramble(a0, seed, 4 * a0.rows());
}

} // namespace

TEST(Annihilator, GoldenTable)
{
    const MatQ a = fixtures::golden10();
    const AnnihilatorTable t = build_annihilator_table(a);
    const std::vector<PolyQ> want = {f1 * f2,          f1,      pow(f1, 2) * f2, pow(f1, 3), pow(f1, 3),
                                     pow(f1, 3) * f2, pow(f1, 3), pow(f1, 3) * f2, f1,         f1 * f2};
    ASSERT_EQ(t.pi.size(), 10u);
    for (std::size_t j = 0; j < 10; ++j) EXPECT_EQ(t.pi[j], want[j]) << "e" << j + 1;
    EXPECT_EQ(t.info(f1).lbar, 3u);
    EXPECT_EQ(t.info(f2).lbar, 1u);
    EXPECT_EQ(t.info(f1).m, 4u);
    EXPECT_EQ(t.info(f2).m, 1u);
    EXPECT_EQ(t.minimal, pow(f1, 3) * f2);
    EXPECT_EQ(t.cofactor(f1, 5), f2);
    EXPECT_EQ(t.cofactor(f2, 2), pow(f1, 2));
    EXPECT_THROW(t.info(PolyQ{1, 1}), std::invalid_argument);
}

TEST(Annihilator, KrylovAndFactoredRoutesAgree)
{
    const std::vector<std::string> specs = {"5,1,1:3,1;4,1,1:1", "2,1:2,2,1;-1,1:3", "2,2,1:2;3,0,1:1,1;1,1:2",
                                            "3,3,0,1:2,1"};
    std::uint64_t seed = 1;
    for (const auto& s : specs) {
        const MatQ a = scrambled(s, seed++);
        const auto fact = build_annihilator_table(a, AnnihilatorMethod::factored);
        const auto kry = build_annihilator_table(a, AnnihilatorMethod::krylov);
        EXPECT_EQ(fact.pi, kry.pi) << s;
        EXPECT_EQ(fact.minimal, kry.minimal) << s;
        for (std::size_t i = 0; i < fact.factors.size(); ++i) EXPECT_EQ(fact.factors[i].ell, kry.factors[i].ell);
    }
}

TEST(Annihilator, MinAnnihVectorIsMinimal)
{
    std::mt19937_64 rng(6);
    const MatQ a = scrambled("5,1,1:2,1;-2,1:2;1,0,1:1", 3);
    const oracle::Mat o = fixtures::to_oracle(a);
    for (int t = 0; t < 10; ++t) {
        std::vector<Rat> v(a.rows());
        for (auto& x : v) x = static_cast<long>(rng() % 5) - 2;
        if (t < 3) std::fill(v.begin(), v.end(), Rat(0)), v[static_cast<std::size_t>(t)] = 1;
        const VecQ vq = VecQ::from_rats(v);
        const PolyQ pi = min_annih_vector(a, vq);
        EXPECT_TRUE(pi.is_monic());
        EXPECT_TRUE(mat_poly_apply_vec(pi, a, vq).is_zero());
        EXPECT_EQ(static_cast<std::size_t>(pi.degree()), krylov_dim(o, v));
        EXPECT_TRUE(divides(pi, char_poly(a)));
    }
    EXPECT_EQ(min_annih_vector(a, VecQ(a.rows())), PolyQ::constant(1));
}

TEST(Annihilator, CapBoundsSearch)
{
    const MatQ a = fixtures::golden10();
    const VecQ e4 = VecQ::unit(10, 3);
    EXPECT_EQ(min_annih_vector(a, e4, pow(f1, 3) * f2), pow(f1, 3));
    EXPECT_THROW(min_annih_vector(a, e4, f1), std::invalid_argument);
    EXPECT_THROW(min_annih_vector(a, VecQ(3)), ShapeError);
}

TEST(Annihilator, RankF)
{
    const MatQ a = fixtures::golden10();
    const MatQ fa = mat_poly_eval(f1, a);
    EXPECT_EQ(rank_f(fa, VecQ::unit(10, 3), 3), 3u);
    EXPECT_EQ(rank_f(fa, VecQ::unit(10, 1), 3), 1u);
    EXPECT_EQ(rank_f(fa, VecQ(10), 3), 0u);
    EXPECT_THROW(rank_f(fa, VecQ::unit(10, 3), 2), std::domain_error);
    EXPECT_THROW(rank_f(fa, VecQ::unit(10, 0), 3), std::domain_error);  // not in ker f1(A)^3
}

TEST(Annihilator, TableProperties)
{
    // pi_e(A) e = 0; multiplicities are bounded by m; lbar matches the
    // multiplicity in the minimal polynomial.
    for (std::uint64_t seed = 1; seed <= 4; ++seed) {
        const MatQ a = scrambled("1,1:3,1;1,0,1:2;-3,1:1,1", seed);
        const auto t = build_annihilator_table(a);
        for (std::size_t e = 0; e < t.basis.size(); ++e)
            EXPECT_TRUE(mat_poly_apply_vec(t.pi[e], a, t.basis[e]).is_zero());
        for (const auto& fi : t.factors) {
            EXPECT_LE(fi.lbar, fi.m);
            EXPECT_EQ(t.chi.multiplicity_of(fi.f), fi.m);
            PolyQ q = t.minimal;
            unsigned k = 0;
            while (divides(fi.f, q)) q = q / fi.f, ++k;
            EXPECT_EQ(k, fi.lbar);
        }
    }
}
