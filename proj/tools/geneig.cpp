// geneig: generalized eigenspaces and Jordan chains of rational matrices.

#include <geneig.hpp>

#include <CLI11.hpp>

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

namespace {

using namespace geneig;

constexpr int kOk = 0;
constexpr int kVerifyFailed = 2;
constexpr int kInputError = 3;

std::string chi_string(const Factorization& chi)
{
    std::string s = to_string(chi.unit) == "1" ? "" : to_string(chi.unit) + " * ";
    for (std::size_t i = 0; i < chi.factors.size(); ++i) {
        if (i) s += " * ";
        s += "(" + format_poly(chi.factors[i].factor, "x") + ")";
        if (chi.factors[i].multiplicity > 1) s += "^" + std::to_string(chi.factors[i].multiplicity);
    }
    return s.empty() ? "1" : s;
}

void print_polyvec(std::ostream& os, const PolyVec& p)
{
    os << "[";
    for (std::size_t i = 0; i < p.dim(); ++i) os << (i ? ", " : "") << format_poly(p.entry(i), "lambda");
    os << "]";
}

int cmd_chains(const std::string& file, const std::string& factor, bool no_reduce, bool verify, unsigned jobs,
               const std::string& json_out)
{
    PipelineOptions opt;
    opt.use_proc4 = !no_reduce;
    opt.verify = verify;
    opt.jobs = jobs;
    const MatQ a = read_matrix_file(file);
    if (!factor.empty()) {
        const PolyQ f = parse_poly(factor);
        if (f.degree() < 1) throw ParseError("factor must have positive degree");
        opt.factor = f;
    }
    const EigenstructureReport rep = run_full(a, opt);

    std::cout << "n = " << rep.n << "\n";
    std::cout << "chi = " << chi_string(rep.chi) << "\n";
    for (const auto& fr : rep.factors) {
        std::cout << "\nfactor " << format_poly(fr.f, "lambda") << "  m = " << fr.m << "  lbar = " << fr.lbar
                  << "  #B = (";
        for (std::size_t l = 1; l < fr.counts.size(); ++l) std::cout << (l > 1 ? ", " : "") << fr.counts[l];
        std::cout << ")\n";
        for (std::size_t c = 0; c < fr.chains.size(); ++c) {
            const auto& ch = fr.chains[c];
            std::cout << "  chain " << c + 1 << " (length " << ch.length << ")\n";
            for (unsigned k = ch.length; k >= 1; --k) {
                std::cout << "    p^(" << k << ") = ";
                print_polyvec(std::cout, ch.p(k));
                std::cout << "\n";
            }
            if (verify) std::cout << "    verify: " << (fr.verification[c].ok() ? "ok" : "FAILED") << "\n";
        }
        if (fr.independent) std::cout << "  independent: " << (*fr.independent ? "yes" : "NO") << "\n";
    }
    std::cout << "\nmat_vec = " << rep.mat_vec << "  mat_mat = " << rep.mat_mat << "\n";

    if (!json_out.empty()) {
        std::ofstream os(json_out);
        if (!os) throw std::invalid_argument("cannot write " + json_out);
        os << to_json(rep).dump(2) << "\n";
    }
    if (!rep.ok(opt)) {
        std::cerr << "geneig: verification failed\n";
        return kVerifyFailed;
    }
    return kOk;
}

int cmd_factors(const std::string& file)
{
    const MatQ a = read_matrix_file(file);
    const PolyQ chi = char_poly(a);
    Factorization fac = factor_rationals(chi);
    std::cout << "chi = " << format_poly(chi, "x") << "\n";
    for (const auto& t : fac.factors)
        std::cout << format_coeffs(t.factor) << "  " << format_poly(t.factor, "x") << "  multiplicity " << t.multiplicity
                  << "\n";
    return kOk;
}

int cmd_minpolys(const std::string& file)
{
    const MatQ a = read_matrix_file(file);
    const AnnihilatorTable t = build_annihilator_table(a);
    for (std::size_t e = 0; e < t.basis.size(); ++e) {
        std::string s;
        for (const auto& fi : t.factors) {
            if (fi.ell[e] == 0) continue;
            if (!s.empty()) s += " * ";
            s += "(" + format_poly(fi.f, "x") + ")";
            if (fi.ell[e] > 1) s += "^" + std::to_string(fi.ell[e]);
        }
        std::cout << e + 1 << "  " << (s.empty() ? "1" : s) << "\n";
    }
    return kOk;
}

int cmd_genmat(const std::string& spec_text, std::uint64_t seed, long steps, unsigned bound, const std::string& out)
{
    const BlockSpec spec = parse_block_spec(spec_text);
    const MatQ a0 = build_block_matrix(spec);
    const std::uint64_t k = steps < 0 ? default_scramble_steps(a0.rows()) : static_cast<std::uint64_t>(steps);
    const MatQ a = scramble(a0, seed, k, bound);
    std::ostringstream text;
    text << "# genmat spec " << format_block_spec(spec) << " seed " << seed << " steps " << k << "\n"
         << format_matrix(a);
    if (out.empty() || out == "-") {
        std::cout << text.str();
    } else {
        std::ofstream os(out);
        if (!os) throw std::invalid_argument("cannot write " + out);
        os << text.str();
    }
    return kOk;
}

int cmd_bench(const std::string& suite, const std::vector<unsigned>& degrees, std::uint64_t seed, bool csv)
{
    const auto rows = bench_suite(suite, degrees, seed);
    if (csv) print_bench_csv(std::cout, rows);
    else print_bench_table(std::cout, rows);
    for (const auto& r : rows)
        if (!r.ok) return kVerifyFailed;
    return kOk;
}

} // namespace

int main(int argc, char** argv)
{
    CLI::App app{"Generalized eigenspaces and Jordan chains of rational matrices"};
    app.require_subcommand(1);

    std::string file, factor, json_out;
    bool no_reduce = false, verify = false;
    unsigned jobs = 1;
    auto* chains = app.add_subcommand("chains", "Jordan chains for every irreducible factor");
    chains->add_option("matrix", file, "Matrix file")->required();
    chains->add_option("--factor", factor, "Only this factor, ascending coefficients, e.g. 5,1,1");
    chains->add_flag("--no-reduce", no_reduce, "Skip the generating-set reduction");
    chains->add_flag("--verify", verify, "Check every chain exactly");
    chains->add_option("--jobs", jobs, "Factors processed in parallel")->check(CLI::Range(1u, 256u));
    chains->add_option("--json", json_out, "Write chains as JSON");

    auto* factors = app.add_subcommand("factors", "Factor the characteristic polynomial");
    factors->add_option("matrix", file, "Matrix file")->required();

    auto* minpolys = app.add_subcommand("minpolys", "Minimal annihilating polynomial of each unit vector");
    minpolys->add_option("matrix", file, "Matrix file")->required();

    std::string spec, out;
    std::uint64_t seed = 1;
    long steps = -1;
    unsigned bound = 2;
    auto* genmat = app.add_subcommand("genmat", "Scrambled block companion matrix with a given Jordan structure");
    genmat->add_option("--spec", spec, "<coeffs>:<l1,l2,...>[;...]")->required();
    genmat->add_option("--seed", seed, "Random seed");
    genmat->add_option("--steps", steps, "Elementary similarity steps (default 4n)");
    genmat->add_option("--bound", bound, "Largest multiplier magnitude")->check(CLI::Range(1u, 1000u));
    genmat->add_option("-o,--output", out, "Output file (default stdout)");

    std::string suite = "paper71";
    std::vector<unsigned> degrees{2, 4, 6};
    bool csv = false;
    auto* bench = app.add_subcommand("bench", "Benchmark a generated suite with and without the reduction");
    bench->add_option("--suite", suite, "paper71 or paper72")->check(CLI::IsMember({"paper71", "paper72"}));
    bench->add_option("--degrees", degrees, "Degrees of f")->delimiter(',');
    bench->add_option("--seed", seed, "Random seed");
    bench->add_flag("--csv", csv, "Comma-separated output");

    try {
        app.parse(argc, argv);
    } catch (const CLI::ParseError& e) {
        const int rc = app.exit(e);
        return rc == 0 ? kOk : kInputError;
    }

    try {
        if (*chains) return cmd_chains(file, factor, no_reduce, verify, jobs, json_out);
        if (*factors) return cmd_factors(file);
        if (*minpolys) return cmd_minpolys(file);
        if (*genmat) return cmd_genmat(spec, seed, steps, bound, out);
        if (*bench) return cmd_bench(suite, degrees, seed, csv);
    } catch (const std::invalid_argument& e) {
        // parse, shape and "not a factor" errors
        std::cerr << "geneig: " << e.what() << "\n";
        return kInputError;
    } catch (const std::domain_error& e) {
        std::cerr << "geneig: " << e.what() << "\n";
        return kInputError;
    } catch (const std::exception& e) {
        std::cerr << "geneig: internal error: " << e.what() << "\n";
        return 1;
    }
    return kOk;
}
