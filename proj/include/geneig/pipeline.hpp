#ifndef GENEIG_PIPELINE_HPP
#define GENEIG_PIPELINE_HPP

// End-to-end driver: characteristic polynomial, factorization, annihilator
// table, then for each irreducible factor the Krylov generating set,
// Jordan-Krylov elimination and Jordan chains.

#include "annihilator.hpp"
#include "chains.hpp"
#include "counters.hpp"
#include "factor.hpp"
#include "jordan_krylov.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <cstdint>
#include <exception>
#include <optional>
#include <stdexcept>
#include <thread>
#include <vector>

namespace geneig {

struct PipelineOptions {
    bool use_proc4 = true;
    bool verify = false;
    bool certify = true;             // exact rank of the stacked Krylov columns
    unsigned jobs = 1;               // factors processed concurrently
    std::optional<PolyQ> factor;     // restrict to this irreducible factor
    AnnihilatorMethod method = AnnihilatorMethod::factored;
};

struct StageTimes {
    double genset = 0;
    double jk = 0;       // includes proc4
    double proc4 = 0;
    double chains = 0;
    double verify = 0;
    double certify = 0;
};

struct FactorResult {
    PolyQ f;
    unsigned m = 0;
    unsigned lbar = 0;
    std::vector<std::size_t> counts;  // #B^(l), index 0 unused
    JKBasis basis;
    std::vector<JordanChain> chains;
    std::vector<VerificationReport> verification;  // empty unless verified
    std::optional<bool> independent;               // set when certified
    JKStats stats;
    StageTimes times;

    unsigned degree() const { return static_cast<unsigned>(f.degree()); }

    /// Chain lengths, longest first.
    std::vector<unsigned> chain_lengths() const
    {
        std::vector<unsigned> out;
        for (const auto& c : chains) out.push_back(c.length);
        return out;
    }

    bool verified() const
    {
        if (verification.size() != chains.size()) return false;
        for (const auto& r : verification)
            if (!r.ok()) return false;
        return true;
    }
};

struct EigenstructureReport {
    std::size_t n = 0;
    PolyQ charpoly;
    Factorization chi;
    std::vector<FactorResult> factors;  // ascending (degree, coefficients)
    double charpoly_seconds = 0;
    double factor_seconds = 0;
    double table_seconds = 0;
    double total_seconds = 0;
    std::uint64_t mat_vec = 0;
    std::uint64_t mat_mat = 0;
    std::uint64_t max_bits = 0;

    /// False if any requested verification or certification failed.
    bool ok(const PipelineOptions& opt) const
    {
        for (const auto& fr : factors) {
            if (opt.verify && !fr.verified()) return false;
            if (opt.certify && fr.independent && !*fr.independent) return false;
        }
        return true;
    }
};

namespace detail {

inline double seconds_since(std::chrono::steady_clock::time_point t0)
{
    return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
}

} // namespace detail

/// All stages for one factor f of chi_A with multiplicity m.
inline FactorResult solve_factor(const MatQ& a, const PolyQ& f, const AnnihilatorTable& table,
                                 const PipelineOptions& opt = {})
{
    using clock = std::chrono::steady_clock;
    const auto& fi = table.info(f);
    FactorResult r;
    r.f = fi.f;
    r.m = fi.m;
    r.lbar = fi.lbar;
    const unsigned d = r.degree();

    auto t0 = clock::now();
    KrylovGenSet gs = krylov_generating_set(a, fi.f, table);
    r.times.genset = detail::seconds_since(t0);

    t0 = clock::now();
    r.basis = jk_eliminate(fi.fa, a, std::move(gs), fi.m, d, opt.use_proc4, &r.stats);
    r.times.jk = detail::seconds_since(t0);
    r.times.proc4 = r.stats.proc4_seconds;
    r.counts = r.basis.counts();

    t0 = clock::now();
    r.chains = jordan_chains(a, fi.fa, fi.f, r.basis);
    r.times.chains = detail::seconds_since(t0);
    for (const auto& c : r.chains)
        for (const auto& p : c.vectors)
            for (const auto& v : p.coeffs) counters().note_bits(v.max_bits());

    if (opt.verify) {
        t0 = clock::now();
        for (const auto& c : r.chains) r.verification.push_back(verify_chain(a, fi.f, c));
        r.times.verify = detail::seconds_since(t0);
    }
    if (opt.certify) {
        t0 = clock::now();
        r.independent = certify_independence(a, fi.fa, r.basis, d, fi.m);
        r.times.certify = detail::seconds_since(t0);
    }
    return r;
}

/// Jordan chains for the roots of f: f(A), the Krylov generating set, the
/// Jordan-Krylov basis and the chains built from it.
inline std::vector<JordanChain> generalized_eigenspace(const MatQ& a, const PolyQ& f, const AnnihilatorTable& table,
                                                       const PipelineOptions& opt = {})
{
    PipelineOptions o = opt;
    o.verify = false;
    o.certify = false;
    return solve_factor(a, f, table, o).chains;
}

inline EigenstructureReport run_full(const MatQ& a, const PipelineOptions& opt = {})
{
    using clock = std::chrono::steady_clock;
    if (!a.is_square()) throw ShapeError("run_full: matrix not square");
    const auto start = clock::now();
    const std::uint64_t mv0 = counters().mat_vec.load(), mm0 = counters().mat_mat.load();

    EigenstructureReport rep;
    rep.n = a.rows();
    auto t0 = clock::now();
    rep.charpoly = char_poly(a);
    rep.charpoly_seconds = detail::seconds_since(t0);
    t0 = clock::now();
    rep.chi = factor_rationals(rep.charpoly);
    std::sort(rep.chi.factors.begin(), rep.chi.factors.end(),
              [](const auto& x, const auto& y) { return poly_less(x.factor, y.factor); });
    rep.factor_seconds = detail::seconds_since(t0);

    std::vector<PolyQ> todo;
    if (opt.factor) {
        const PolyQ g = opt.factor->monic();
        if (rep.chi.multiplicity_of(g) == 0)
            throw std::domain_error("not an irreducible factor of the characteristic polynomial: " + format_poly(g));
        todo.push_back(g);
    } else {
        for (const auto& t : rep.chi.factors) todo.push_back(t.factor);
    }

    t0 = clock::now();
    const AnnihilatorTable table = build_annihilator_table(a, standard_basis(a.rows()), opt.method, rep.chi);
    rep.table_seconds = detail::seconds_since(t0);

    rep.factors.resize(todo.size());
    const unsigned jobs = std::max(1u, std::min<unsigned>(opt.jobs, static_cast<unsigned>(todo.size())));
    if (jobs == 1) {
        for (std::size_t i = 0; i < todo.size(); ++i) rep.factors[i] = solve_factor(a, todo[i], table, opt);
    } else {
        std::atomic<std::size_t> next{0};
        std::vector<std::exception_ptr> errors(todo.size());
        std::vector<std::thread> pool;
        for (unsigned w = 0; w < jobs; ++w)
            pool.emplace_back([&] {
                for (std::size_t i; (i = next.fetch_add(1)) < todo.size();) {
                    try {
                        rep.factors[i] = solve_factor(a, todo[i], table, opt);
                    } catch (...) {
                        errors[i] = std::current_exception();
                    }
                }
            });
        for (auto& t : pool) t.join();
        for (const auto& e : errors)
            if (e) std::rethrow_exception(e);
    }

    rep.total_seconds = detail::seconds_since(start);
    rep.mat_vec = counters().mat_vec.load() - mv0;
    rep.mat_mat = counters().mat_mat.load() - mm0;
    rep.max_bits = counters().max_bits.load();
    return rep;
}

} // namespace geneig

#endif // GENEIG_PIPELINE_HPP
