#ifndef GENEIG_ANNIHILATOR_HPP
#define GENEIG_ANNIHILATOR_HPP

// Minimal annihilating polynomials of vectors and the per-factor bookkeeping
// built on them: for each irreducible factor f of the characteristic
// polynomial, the multiplicity l_e of f in pi_{A,e}, the cofactor g_e, the
// maximum lbar and the characteristic multiplicity m.

#include "echelon.hpp"
#include "factor.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <cstddef>
#include <optional>
#include <stdexcept>
#include <vector>

namespace geneig {

/// Monic polynomial of least degree with pi(A)v = 0, read off the first
/// linear dependence among v, Av, A^2 v, ... If `cap` is given it must
/// annihilate v and bounds the search.
inline PolyQ min_annih_vector(const MatQ& a, const VecQ& v, const std::optional<PolyQ>& cap = std::nullopt)
{
    if (!a.is_square() || a.cols() != v.dim()) throw ShapeError("min_annih_vector: dimension mismatch");
    std::size_t limit = a.rows();
    if (cap) {
        if (cap->is_zero() || !mat_poly_apply_vec(*cap, a, v).is_zero())
            throw std::invalid_argument("min_annih_vector: cap does not annihilate the vector");
        limit = std::min<std::size_t>(limit, static_cast<std::size_t>(cap->degree()));
    }
    if (v.is_zero()) return PolyQ::constant(1);
    TrackedEchelon st(v.dim());
    VecQ w = v;
    for (std::size_t k = 0; k <= limit; ++k) {
        auto res = st.insert(w);
        if (!res.independent) {
            // A^k v = sum c_j A^j v
            std::vector<Rat> c(k + 1);
            for (std::size_t j = 0; j < k; ++j) c[j] = -res.coeffs[j];
            c[k] = 1;
            return PolyQ(std::move(c));
        }
        w = mat_vec(a, w);
    }
    throw std::logic_error("min_annih_vector: no dependence within the degree bound");
}

/// Smallest l >= 0 with fA^l v = 0, searching up to `lbar`.
inline unsigned rank_f(const MatQ& fa, const VecQ& v, unsigned lbar)
{
    VecQ w = v;
    for (unsigned l = 0; l <= lbar; ++l) {
        if (w.is_zero()) return l;
        if (l < lbar) w = mat_vec(fa, w);
    }
    throw std::domain_error("rank_f: vector not in kernel tower");
}

enum class AnnihilatorMethod {
    krylov,    // one Krylov dependence search per basis vector
    factored,  // per factor f_i: rank of (chi / f_i^m_i)(A) e under f_i(A)
};

struct AnnihilatorTable {
    struct FactorInfo {
        PolyQ f;
        unsigned m = 0;         // multiplicity in chi_A
        unsigned lbar = 0;      // multiplicity in pi_A
        std::vector<unsigned> ell;  // multiplicity in pi_{A,e}, per basis vector
        MatQ fa;                // f(A)
    };

    std::vector<VecQ> basis;
    std::vector<PolyQ> pi;      // pi_{A,e}, per basis vector
    PolyQ minimal;              // lcm of all pi
    PolyQ charpoly;
    Factorization chi;
    std::vector<FactorInfo> factors;  // same order as chi.factors

    const FactorInfo& info(const PolyQ& f) const
    {
        const PolyQ g = f.monic();
        for (const auto& fi : factors)
            if (fi.f == g) return fi;
        throw std::invalid_argument("factor does not divide the characteristic polynomial: " + format_poly(f));
    }

    /// g_e with pi_{A,e} = f^{l_e} g_e.
    PolyQ cofactor(const PolyQ& f, std::size_t e) const
    {
        const auto& fi = info(f);
        return pi.at(e) / pow(fi.f, fi.ell.at(e));
    }
};

inline std::vector<VecQ> standard_basis(std::size_t n)
{
    std::vector<VecQ> b;
    b.reserve(n);
    for (std::size_t i = 0; i < n; ++i) b.push_back(VecQ::unit(n, i));
    return b;
}

namespace detail {

inline unsigned multiplicity_in(const PolyQ& f, PolyQ p)
{
    unsigned k = 0;
    while (p.degree() >= f.degree()) {
        auto [q, r] = divrem(p, f);
        if (!r.is_zero()) break;
        p = std::move(q);
        ++k;
    }
    return k;
}

} // namespace detail

/// Annihilator table for `basis` (which must span Q^n). `chi` may supply a
/// precomputed factorization of the characteristic polynomial.
inline AnnihilatorTable build_annihilator_table(const MatQ& a, const std::vector<VecQ>& basis,
                                                AnnihilatorMethod method = AnnihilatorMethod::factored,
                                                const std::optional<Factorization>& chi = std::nullopt)
{
    if (!a.is_square()) throw ShapeError("build_annihilator_table: matrix not square");
    AnnihilatorTable t;
    t.basis = basis;
    if (chi) {
        t.chi = *chi;
        t.charpoly = chi->expand();
    } else {
        t.charpoly = char_poly(a);
        t.chi = factor_rationals(t.charpoly);
    }
    for (const auto& term : t.chi.factors) {
        AnnihilatorTable::FactorInfo fi;
        fi.f = term.factor;
        fi.m = term.multiplicity;
        fi.fa = mat_poly_eval(fi.f, a);
        t.factors.push_back(std::move(fi));
    }

    if (method == AnnihilatorMethod::krylov) {
        for (const auto& e : basis) t.pi.push_back(min_annih_vector(a, e));
        for (auto& fi : t.factors)
            for (const auto& p : t.pi) fi.ell.push_back(detail::multiplicity_in(fi.f, p));
    } else {
        for (auto& fi : t.factors) {
            const PolyQ h = t.charpoly.monic() / pow(fi.f, fi.m);
            const bool trivial = h.degree() == 0;
            const MatQ hm = trivial ? MatQ() : mat_poly_eval(h, a);
            for (const auto& e : basis) {
                const VecQ u = trivial ? e : mat_vec(hm, e);
                fi.ell.push_back(rank_f(fi.fa, u, fi.m));
            }
        }
        for (std::size_t j = 0; j < basis.size(); ++j) {
            PolyQ p = PolyQ::constant(1);
            for (const auto& fi : t.factors) p *= pow(fi.f, fi.ell[j]);
            t.pi.push_back(std::move(p));
        }
    }

    t.minimal = PolyQ::constant(1);
    for (const auto& p : t.pi) t.minimal = lcm(t.minimal, p);
    for (auto& fi : t.factors) {
        fi.lbar = 0;
        for (unsigned l : fi.ell) fi.lbar = std::max(fi.lbar, l);
    }
    return t;
}

inline AnnihilatorTable build_annihilator_table(const MatQ& a,
                                                AnnihilatorMethod method = AnnihilatorMethod::factored,
                                                const std::optional<Factorization>& chi = std::nullopt)
{
    return build_annihilator_table(a, standard_basis(a.rows()), method, chi);
}

} // namespace geneig

#endif // GENEIG_ANNIHILATOR_HPP
