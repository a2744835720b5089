#ifndef GENEIG_BENCH_HPP
#define GENEIG_BENCH_HPP

// Benchmark harness over the generated suites: per degree, one scrambled
// matrix, run with and without the generating-set reduction.

#include "annihilator.hpp"
#include "chains.hpp"
#include "counters.hpp"
#include "genmat.hpp"
#include "jordan_krylov.hpp"
#include "pipeline.hpp"

#include <algorithm>
#include <chrono>
#include <cstdint>
#include <iomanip>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

namespace geneig {

struct BenchRow {
    std::string suite;
    unsigned degree = 0;
    std::size_t n = 0;
    bool proc4 = false;
    std::size_t max_entry_bits = 0;  // of the scrambled input
    // Stage wall times in seconds for the first factor of the suite.
    double charpoly = 0, table = 0, f_of_a = 0, genset = 0, jk = 0, proc4_time = 0, chains = 0, verify = 0,
           certify = 0, total = 0;
    std::uint64_t mat_vec = 0, mat_mat = 0, max_bits = 0;
    std::size_t r = 0;  // basis vectors whose annihilator f divides
    std::size_t t = 0;  // ... and whose cofactor g_e is nonconstant
    std::vector<std::size_t> counts;
    bool ok = false;    // verified, certified and matching the spec
};

inline std::uint64_t default_scramble_steps(std::size_t n) { return 4 * static_cast<std::uint64_t>(n); }

/// One row per (degree, proc4 on/off). `steps` = 0 picks 4n.
inline std::vector<BenchRow> bench_suite(const std::string& name, const std::vector<unsigned>& degrees,
                                         std::uint64_t seed, std::uint64_t steps = 0)
{
    using clock = std::chrono::steady_clock;
    std::vector<BenchRow> rows;
    for (unsigned d : degrees) {
        const BlockSpec spec = suite_spec(name, d);
        const MatQ a0 = build_block_matrix(spec);
        const MatQ a = scramble(a0, seed, steps ? steps : default_scramble_steps(a0.rows()));
        const PolyQ f = spec.entries.front().f;
        std::vector<unsigned> want = spec.entries.front().chains;
        std::sort(want.rbegin(), want.rend());

        for (bool p4 : {true, false}) {
            counters().reset();
            BenchRow row;
            row.suite = name;
            row.degree = d;
            row.n = a.rows();
            row.proc4 = p4;
            row.max_entry_bits = a.max_bits();
            const auto start = clock::now();

            auto t0 = clock::now();
            const PolyQ chi = char_poly(a);
            row.charpoly = detail::seconds_since(t0);
            Factorization fac = factor_rationals(chi);

            t0 = clock::now();
            AnnihilatorTable table = build_annihilator_table(a, standard_basis(a.rows()), AnnihilatorMethod::factored, fac);
            row.table = detail::seconds_since(t0);

            t0 = clock::now();
            const MatQ fa = mat_poly_eval(f, a);
            row.f_of_a = detail::seconds_since(t0);

            PipelineOptions opt;
            opt.use_proc4 = p4;
            opt.verify = true;
            FactorResult fr = solve_factor(a, f, table, opt);
            row.genset = fr.times.genset;
            row.jk = fr.times.jk;
            row.proc4_time = fr.times.proc4;
            row.chains = fr.times.chains;
            row.verify = fr.times.verify;
            row.certify = fr.times.certify;
            row.total = detail::seconds_since(start);
            row.mat_vec = counters().mat_vec.load();
            row.mat_mat = counters().mat_mat.load();
            row.max_bits = counters().max_bits.load();
            row.counts = fr.counts;

            const auto& fi = table.info(f);
            for (std::size_t e = 0; e < fi.ell.size(); ++e) {
                if (fi.ell[e] == 0) continue;
                ++row.r;
                if (table.pi[e].degree() > static_cast<long>(fi.ell[e]) * fi.f.degree()) ++row.t;
            }
            row.ok = fr.verified() && fr.independent.value_or(false) && fr.chain_lengths() == want;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

inline void print_bench_table(std::ostream& os, const std::vector<BenchRow>& rows)
{
    os << std::left << std::setw(4) << "d" << std::setw(6) << "n" << std::setw(7) << "proc4" << std::right
       << std::setw(9) << "charpoly" << std::setw(9) << "table" << std::setw(9) << "f(A)" << std::setw(9) << "genset"
       << std::setw(9) << "jk" << std::setw(9) << "(proc4)" << std::setw(9) << "chains" << std::setw(9) << "verify"
       << std::setw(9) << "total" << std::setw(9) << "mat_vec" << std::setw(8) << "mat_mat" << std::setw(9)
       << "max_bits" << std::setw(5) << "r" << std::setw(5) << "t" << "  counts  ok\n";
    for (const auto& r : rows) {
        std::ostringstream counts;
        for (std::size_t l = 1; l < r.counts.size(); ++l) counts << (l > 1 ? "," : "") << r.counts[l];
        os << std::left << std::setw(4) << r.degree << std::setw(6) << r.n << std::setw(7) << (r.proc4 ? "on" : "off")
           << std::right << std::fixed << std::setprecision(3) << std::setw(9) << r.charpoly << std::setw(9) << r.table
           << std::setw(9) << r.f_of_a << std::setw(9) << r.genset << std::setw(9) << r.jk << std::setw(9)
           << r.proc4_time << std::setw(9) << r.chains << std::setw(9) << r.verify << std::setw(9) << r.total
           << std::setw(9) << r.mat_vec << std::setw(8) << r.mat_mat << std::setw(9) << r.max_bits << std::setw(5)
           << r.r << std::setw(5) << r.t << "  " << counts.str() << "  " << (r.ok ? "yes" : "NO") << '\n';
    }
}

/// Machine-readable rows: one comma-separated line per row after a header.
inline void print_bench_csv(std::ostream& os, const std::vector<BenchRow>& rows)
{
    os << "suite,degree,n,proc4,charpoly,table,f_of_a,genset,jk,proc4_time,chains,verify,certify,total,mat_vec,"
          "mat_mat,max_bits,r,t,ok\n";
    for (const auto& r : rows)
        os << r.suite << ',' << r.degree << ',' << r.n << ',' << (r.proc4 ? 1 : 0) << ',' << r.charpoly << ','
           << r.table << ',' << r.f_of_a << ',' << r.genset << ',' << r.jk << ',' << r.proc4_time << ',' << r.chains
           << ',' << r.verify << ',' << r.certify << ',' << r.total << ',' << r.mat_vec << ',' << r.mat_mat << ','
           << r.max_bits << ',' << r.r << ',' << r.t << ',' << (r.ok ? 1 : 0) << '\n';
}

} // namespace geneig

#endif // GENEIG_BENCH_HPP
