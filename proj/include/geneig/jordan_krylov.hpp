#ifndef GENEIG_JORDAN_KRYLOV_HPP
#define GENEIG_JORDAN_KRYLOV_HPP

// Krylov generating sets of ker f(A)^lbar and Jordan-Krylov elimination.

#include "annihilator.hpp"
#include "echelon.hpp"
#include "matrix.hpp"

#include <chrono>
#include <cstddef>
#include <deque>
#include <stdexcept>
#include <vector>

namespace geneig {

/// Generators of ker f(A)^lbar partitioned by rank: level(l) holds vectors of
/// rank exactly l, for l = 1..lbar.
struct KrylovGenSet {
    unsigned d = 0;
    unsigned lbar = 0;
    std::vector<std::deque<VecQ>> levels;  // index 0 unused

    KrylovGenSet() = default;
    KrylovGenSet(unsigned d_, unsigned lbar_) : d(d_), lbar(lbar_), levels(lbar_ + 1) {}

    std::deque<VecQ>& level(unsigned l) { return levels.at(l); }
    const std::deque<VecQ>& level(unsigned l) const { return levels.at(l); }

    std::size_t total() const
    {
        std::size_t s = 0;
        for (const auto& l : levels) s += l.size();
        return s;
    }
};

/// Jordan-Krylov basis partitioned by rank: level(l) holds B^(l).
struct JKBasis {
    std::vector<std::vector<VecQ>> levels;  // index 0 unused

    JKBasis() = default;
    explicit JKBasis(unsigned lbar) : levels(lbar + 1) {}

    unsigned lbar() const { return levels.empty() ? 0 : static_cast<unsigned>(levels.size() - 1); }
    std::vector<VecQ>& level(unsigned l) { return levels.at(l); }
    const std::vector<VecQ>& level(unsigned l) const { return levels.at(l); }

    /// #B^(l) for l = 1..lbar (index 0 is always 0).
    std::vector<std::size_t> counts() const
    {
        std::vector<std::size_t> c(levels.size(), 0);
        for (std::size_t l = 1; l < levels.size(); ++l) c[l] = levels[l].size();
        return c;
    }

    /// sum of l * #B^(l); equals the multiplicity m for a complete basis.
    std::size_t weighted_size() const
    {
        std::size_t s = 0;
        for (std::size_t l = 1; l < levels.size(); ++l) s += l * levels[l].size();
        return s;
    }

    std::size_t size() const
    {
        std::size_t s = 0;
        for (std::size_t l = 1; l < levels.size(); ++l) s += levels[l].size();
        return s;
    }
};

struct JKStats {
    std::size_t candidates = 0;   // vectors taken from the generating set
    std::size_t demoted = 0;      // residuals moved to a lower level
    std::size_t proc4_calls = 0;
    double proc4_seconds = 0;
};

/// V^(l) = { g_e(A) e : l_e = l } in basis order.
inline KrylovGenSet krylov_generating_set(const MatQ& /*a*/, const PolyQ& f, const AnnihilatorTable& table)
{
    const auto& fi = table.info(f);
    KrylovGenSet gs(static_cast<unsigned>(fi.f.degree()), fi.lbar);
    for (std::size_t e = 0; e < table.basis.size(); ++e) {
        const unsigned l = fi.ell[e];
        if (l == 0) continue;
        // g_e is the product of the other factors to their multiplicities in pi_{A,e}.
        VecQ v = table.basis[e];
        for (const auto& other : table.factors) {
            if (&other == &fi) continue;
            const unsigned k = other.ell[e];
            for (unsigned i = 0; i < k; ++i) v = mat_vec(other.fa, v);
        }
        gs.level(l).push_back(std::move(v));
    }
    return gs;
}

/// Column-reduce V^(l) and re-file every nonzero result by its rank.
inline void reduce_gen_set(const MatQ& fa, KrylovGenSet& gs, unsigned l)
{
    if (l == 0 || l > gs.lbar) throw std::out_of_range("reduce_gen_set: level out of range");
    std::vector<VecQ> t(gs.level(l).begin(), gs.level(l).end());
    gs.level(l).clear();
    for (auto& v : column_reduce(t)) {
        const unsigned r = rank_f(fa, v, l);
        gs.level(r).push_back(std::move(v));
    }
}

namespace detail {

// Integer numerators of M times an integer vector.
inline IntVec num_mat_vec(const MatQ& m, const IntVec& v)
{
    counters().mat_vec.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = m.rows(), k = m.cols();
    IntVec out(n);
    const auto& mn = m.num();
    for (std::size_t i = 0; i < n; ++i) {
        mpz_ptr acc = out[i].get_mpz_t();
        for (std::size_t j = 0; j < k; ++j) {
            if (mpz_sgn(v[j].get_mpz_t()) == 0 || mpz_sgn(mn[i * k + j].get_mpz_t()) == 0) continue;
            mpz_addmul(acc, mn[i * k + j].get_mpz_t(), v[j].get_mpz_t());
        }
    }
    return out;
}

inline VecQ pow_apply(const MatQ& fa, VecQ v, unsigned k)
{
    for (unsigned i = 0; i < k; ++i) v = mat_vec(fa, v);
    return v;
}

// Insert the pairs (A^j x, A^j y), j < d, into W with companions.
inline void add_krylov_pairs(EchelonState& w, const MatQ& a, VecQ x, VecQ y, unsigned d)
{
    for (unsigned j = 0; j < d; ++j) {
        if (j) {
            x = mat_vec(a, x);
            y = mat_vec(a, y);
        }
        auto [xi, yi] = common_numerators(x, y);
        Reduction red = w.reduce(std::move(xi), std::move(yi));
        if (!red.is_zero()) w.append(std::move(red));
    }
}

} // namespace detail

/// Jordan-Krylov elimination. Candidates are taken first-in first-out;
/// residuals that fall to a lower rank are appended to that level.
inline JKBasis jk_eliminate(const MatQ& fa, const MatQ& a, KrylovGenSet genset, std::size_t m, unsigned d,
                            bool use_proc4, JKStats* stats = nullptr)
{
    using clock = std::chrono::steady_clock;
    JKStats local;
    JKStats& st = stats ? *stats : local;
    const unsigned lbar = genset.lbar;
    if (lbar == 0 || genset.total() == 0) throw std::invalid_argument("jk_eliminate: empty generating set");
    auto proc4 = [&](unsigned l) {
        const auto t0 = clock::now();
        reduce_gen_set(fa, genset, l);
        st.proc4_seconds += std::chrono::duration<double>(clock::now() - t0).count();
        ++st.proc4_calls;
    };

    JKBasis basis(lbar);
    if (use_proc4) proc4(lbar);
    if (genset.level(lbar).empty()) throw std::logic_error("jk_eliminate: no generator of maximal rank");
    VecQ v0 = genset.level(lbar).front();
    genset.level(lbar).pop_front();
    ++st.candidates;
    basis.level(lbar).push_back(v0);
    if (m < lbar) throw std::logic_error("jk_eliminate: multiplicity smaller than maximal rank");
    m -= lbar;
    if (m == 0) return basis;

    // W holds f(A)^(l-1) S in reduced echelon form; each column carries the
    // matching column of S as its companion.
    EchelonState w(a.rows());
    detail::add_krylov_pairs(w, a, detail::pow_apply(fa, v0, lbar - 1), v0, d);

    for (unsigned l = lbar; l >= 1; --l) {
        if (use_proc4 && l < lbar && !genset.level(l).empty()) proc4(l);
        auto& queue = genset.level(l);
        while (!queue.empty()) {
            VecQ v = std::move(queue.front());
            queue.pop_front();
            ++st.candidates;
            const VecQ vp = detail::pow_apply(fa, v, l - 1);
            auto [xi, yi] = common_numerators(vp, v);
            Reduction red = w.reduce(std::move(xi), std::move(yi));
            // The integer pair is (s*L*r', s*L*r) with r = v - S c exactly.
            const VecQ rp = VecQ::from_ints(red.residual);
            const VecQ r(red.companion, red.scale * lcm(vp.den(), v.den()));
            if (!rp.is_zero()) {
                basis.level(l).push_back(r);
                if (m < l) throw std::logic_error("jk_eliminate: accepted more than the multiplicity");
                m -= l;
                if (m == 0) return basis;
                detail::add_krylov_pairs(w, a, rp, VecQ::from_ints(red.companion), d);
            } else if (!r.is_zero() && l > 1) {
                VecQ rn = r.primitive();
                const unsigned rk = rank_f(fa, rn, l - 1);
                genset.level(rk).push_back(std::move(rn));
                ++st.demoted;
            }
        }
        if (l > 1) {
            // S <- f(A) S. With f(A) = N/D this is s <- N s, and keeping
            // W = f(A)^(l-2) S exact needs w <- D w.
            const Int& den = fa.den();
            w.transform([&](detail::IntVec& col, detail::IntVec& comp) {
                comp = detail::num_mat_vec(fa, comp);
                if (den != 1)
                    for (auto& x : col) x *= den;
            });
        }
    }
    throw std::logic_error("jk_eliminate: generating set exhausted before reaching the multiplicity");
}

/// Columns A^j f(A)^i b for b in B^(l), i < l, j < d.
inline std::vector<VecQ> stacked_columns(const MatQ& a, const MatQ& fa, const JKBasis& basis, unsigned d)
{
    std::vector<VecQ> cols;
    for (unsigned l = basis.lbar(); l >= 1; --l) {
        for (const auto& b : basis.level(l)) {
            VecQ u = b;
            for (unsigned i = 0; i < l; ++i) {
                if (i) u = mat_vec(fa, u);
                VecQ x = u;
                for (unsigned j = 0; j < d; ++j) {
                    if (j) x = mat_vec(a, x);
                    cols.push_back(x);
                }
            }
        }
    }
    return cols;
}

/// True when the stacked columns have full column rank m*d.
inline bool certify_independence(const MatQ& a, const MatQ& fa, const JKBasis& basis, unsigned d, std::size_t m)
{
    const auto cols = stacked_columns(a, fa, basis, d);
    if (cols.size() != m * d) return false;
    if (cols.empty()) return true;
    return rank(MatQ::from_columns(cols, a.rows())) == cols.size();
}

} // namespace geneig

#endif // GENEIG_JORDAN_KRYLOV_HPP
