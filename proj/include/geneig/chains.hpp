#ifndef GENEIG_CHAINS_HPP
#define GENEIG_CHAINS_HPP

// The psi tower of an irreducible f and Jordan chains with entries in
// Q[lambda]/(f). A chain vector is stored as its d coefficient vectors:
// p = p_0 + p_1 lambda + ... + p_{d-1} lambda^{d-1}.

#include "annihilator.hpp"
#include "jordan_krylov.hpp"
#include "matrix.hpp"
#include "poly.hpp"

#include <cstddef>
#include <stdexcept>
#include <string>
#include <vector>

namespace geneig {

struct PolyVec {
    std::vector<VecQ> coeffs;  // coeffs[i] multiplies lambda^i

    PolyVec() = default;
    PolyVec(std::size_t n, std::size_t d) : coeffs(d, VecQ(n)) {}

    std::size_t dim() const { return coeffs.empty() ? 0 : coeffs.front().dim(); }
    std::size_t degree_bound() const { return coeffs.size(); }

    bool is_zero() const
    {
        for (const auto& c : coeffs)
            if (!c.is_zero()) return false;
        return true;
    }

    /// Entry i as a polynomial in lambda.
    PolyQ entry(std::size_t i) const
    {
        std::vector<Rat> c;
        c.reserve(coeffs.size());
        for (const auto& v : coeffs) c.push_back(v[i]);
        return PolyQ(std::move(c));
    }

    friend bool operator==(const PolyVec& a, const PolyVec& b) { return a.coeffs == b.coeffs; }
    friend bool operator!=(const PolyVec& a, const PolyVec& b) { return !(a == b); }
};

/// psi^(k)(mu, lambda) for k = 1..lbar, as polynomials in mu whose
/// coefficients are residues modulo f(lambda).
struct PsiTower {
    PolyQ f;
    unsigned d = 0;
    std::vector<std::vector<PolyQ>> levels;  // levels[k][j] = coefficient of mu^j; index 0 unused

    const std::vector<PolyQ>& psi(unsigned k) const { return levels.at(k); }
    unsigned lbar() const { return levels.empty() ? 0 : static_cast<unsigned>(levels.size() - 1); }
};

inline PsiTower psi_tower(const PolyQ& f, unsigned lbar)
{
    if (f.degree() < 1 || !f.is_monic()) throw std::domain_error("psi_tower: f must be monic of positive degree");
    if (lbar < 1) throw std::domain_error("psi_tower: lbar must be positive");
    PsiTower t;
    t.f = f;
    t.d = static_cast<unsigned>(f.degree());
    t.levels.resize(lbar + 1);
    const auto& a = f.coeffs();
    const std::size_t d = t.d;
    // (f(mu) - f(lambda)) / (mu - lambda) = sum_j mu^j sum_{i>j} a_i lambda^(i-1-j)
    std::vector<PolyQ> psi1(d);
    for (std::size_t j = 0; j < d; ++j) {
        std::vector<Rat> c(d - j);
        for (std::size_t i = j + 1; i <= d; ++i) c[i - 1 - j] = a[i];
        psi1[j] = PolyQ(std::move(c));
    }
    t.levels[1] = psi1;
    for (unsigned k = 2; k <= lbar; ++k) {
        const auto& prev = t.levels[k - 1];
        std::vector<PolyQ> next(prev.size() + psi1.size() - 1);
        for (std::size_t i = 0; i < prev.size(); ++i)
            for (std::size_t j = 0; j < psi1.size(); ++j) next[i + j] += prev[i] * psi1[j];
        for (auto& c : next) c = c % f;
        t.levels[k] = std::move(next);
    }
    return t;
}

struct JordanChain {
    unsigned length = 0;
    std::vector<PolyVec> vectors;  // p^(length), ..., p^(1)

    const PolyVec& p(unsigned k) const { return vectors.at(length - k); }
    PolyVec& p(unsigned k) { return vectors.at(length - k); }
};

namespace detail {

// sum_j c_j v_j over one common denominator.
inline VecQ lin_comb(const std::vector<Rat>& c, const std::vector<VecQ>& v, std::size_t n)
{
    Int l = 1;
    for (std::size_t j = 0; j < c.size(); ++j)
        if (c[j] != 0) l = lcm(l, Int(c[j].get_den() * v[j].den()));
    std::vector<Int> num(n);
    Int s;
    for (std::size_t j = 0; j < c.size(); ++j) {
        if (c[j] == 0) continue;
        s = (l / (c[j].get_den() * v[j].den())) * c[j].get_num();
        const auto& vn = v[j].num();
        for (std::size_t i = 0; i < n; ++i)
            if (vn[i] != 0) mpz_addmul(num[i].get_mpz_t(), s.get_mpz_t(), vn[i].get_mpz_t());
    }
    return VecQ(std::move(num), l);
}

// psi(A, lambda E) u for psi given by its mu-coefficients: the Krylov vectors
// A^j u are formed once and combined per power of lambda.
inline PolyVec apply_psi(const std::vector<PolyQ>& psi, const MatQ& a, const VecQ& u, unsigned d)
{
    std::vector<VecQ> kry;
    kry.reserve(psi.size());
    kry.push_back(u);
    for (std::size_t j = 1; j < psi.size(); ++j) kry.push_back(mat_vec(a, kry.back()));
    PolyVec p;
    p.coeffs.reserve(d);
    std::vector<Rat> c(psi.size());
    for (unsigned i = 0; i < d; ++i) {
        for (std::size_t j = 0; j < psi.size(); ++j) c[j] = psi[j].coeff(i);
        p.coeffs.push_back(lin_comb(c, kry, u.dim()));
    }
    return p;
}

} // namespace detail

/// (A - lambda E) p reduced modulo f(lambda).
inline PolyVec apply_a_minus_lambda(const MatQ& a, const PolyQ& f, const PolyVec& p)
{
    const std::size_t d = static_cast<std::size_t>(f.degree());
    if (p.coeffs.size() != d) throw ShapeError("chain vector has wrong lambda degree bound");
    const std::size_t n = p.dim();
    const auto& fc = f.coeffs();
    PolyVec out;
    out.coeffs.reserve(d);
    const VecQ& top = p.coeffs[d - 1];
    for (std::size_t i = 0; i < d; ++i) {
        // lambda * p has coefficient p_{i-1} - f_i p_{d-1} at lambda^i.
        VecQ lp = fc[i] == 0 ? VecQ(n) : -fc[i] * top;
        if (i) lp = lp + p.coeffs[i - 1];
        out.coeffs.push_back(mat_vec(a, p.coeffs[i]) - lp);
    }
    return out;
}

/// Chain of length l from b with rank_f b = l:
/// p^(k) = psi^(k)(A, lambda E) f(A)^(l-k) b.
inline JordanChain chain_from_basis_vector(const MatQ& a, const MatQ& fa, const PsiTower& tower, const VecQ& b,
                                           unsigned l)
{
    if (l == 0 || l > tower.lbar()) throw std::invalid_argument("chain_from_basis_vector: length outside the tower");
    if (rank_f(fa, b, l) != l) throw std::invalid_argument("chain_from_basis_vector: vector rank differs from length");
    JordanChain ch;
    ch.length = l;
    VecQ u = b;
    for (unsigned k = l; k >= 1; --k) {
        if (k < l) u = mat_vec(fa, u);
        ch.vectors.push_back(detail::apply_psi(tower.psi(k), a, u, tower.d));
    }
    return ch;
}

/// One chain per basis vector, longest first, insertion order within a rank.
inline std::vector<JordanChain> jordan_chains(const MatQ& a, const MatQ& fa, const PolyQ& f, const JKBasis& basis)
{
    std::vector<JordanChain> out;
    if (basis.size() == 0) return out;
    const PsiTower tower = psi_tower(f, basis.lbar());
    for (unsigned l = basis.lbar(); l >= 1; --l)
        for (const auto& b : basis.level(l)) out.push_back(chain_from_basis_vector(a, fa, tower, b, l));
    return out;
}

struct VerificationReport {
    struct Check {
        std::string name;
        bool pass = false;
    };
    std::vector<Check> checks;

    bool ok() const
    {
        for (const auto& c : checks)
            if (!c.pass) return false;
        return !checks.empty();
    }
};

/// Exact checks in Q[lambda]/(f): (A - lambda E) p^(k) = p^(k-1) for k >= 2,
/// (A - lambda E) p^(1) = 0 and (A - lambda E)^(l-1) p^(l) != 0.
inline VerificationReport verify_chain(const MatQ& a, const PolyQ& f, const JordanChain& chain)
{
    VerificationReport rep;
    const std::size_t d = static_cast<std::size_t>(f.degree());
    bool shape = chain.length >= 1 && chain.vectors.size() == chain.length;
    for (const auto& p : chain.vectors) shape = shape && p.coeffs.size() == d && p.dim() == a.rows();
    rep.checks.push_back({"shape: " + std::to_string(chain.length) + " vectors of lambda-degree < " + std::to_string(d),
                          shape});
    if (!shape) return rep;
    for (unsigned k = chain.length; k >= 2; --k)
        rep.checks.push_back({"(A-lambda E) p^(" + std::to_string(k) + ") = p^(" + std::to_string(k - 1) + ")",
                              apply_a_minus_lambda(a, f, chain.p(k)) == chain.p(k - 1)});
    rep.checks.push_back({"(A-lambda E) p^(1) = 0", apply_a_minus_lambda(a, f, chain.p(1)).is_zero()});
    PolyVec it = chain.p(chain.length);
    for (unsigned i = 1; i < chain.length; ++i) it = apply_a_minus_lambda(a, f, it);
    rep.checks.push_back({"(A-lambda E)^" + std::to_string(chain.length - 1) + " p^(" + std::to_string(chain.length) +
                              ") != 0",
                          !it.is_zero()});
    return rep;
}

} // namespace geneig

#endif // GENEIG_CHAINS_HPP
