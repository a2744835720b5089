#ifndef GENEIG_FACTOR_HPP
#define GENEIG_FACTOR_HPP

// Irreducible factorization over the rationals: squarefree decomposition,
// then Zassenhaus (factor modulo a small prime, Hensel-lift, recombine) on
// each squarefree part. The result is certified by exact re-multiplication.

#include "modular.hpp"
#include "poly.hpp"

#include <algorithm>
#include <cmath>
#include <cstdint>
#include <random>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geneig {

struct Factorization {
    struct Term {
        PolyQ factor;  // monic, irreducible over Q
        unsigned multiplicity = 0;
    };
    Rat unit{0};
    std::vector<Term> factors;

    PolyQ expand() const
    {
        PolyQ r = PolyQ::constant(unit);
        for (const auto& t : factors) r *= pow(t.factor, t.multiplicity);
        return r;
    }

    /// Multiplicity of `f` (0 when absent). `f` is compared after making it monic.
    unsigned multiplicity_of(const PolyQ& f) const
    {
        const PolyQ g = f.monic();
        for (const auto& t : factors)
            if (t.factor == g) return t.multiplicity;
        return 0;
    }
};

namespace detail {

using ZPoly = std::vector<Int>;  // ascending, integer coefficients

inline void ztrim(ZPoly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline ZPoly zmod(ZPoly a, const Int& m)
{
    for (auto& x : a) mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
    ztrim(a);
    return a;
}

// Symmetric residues in (-m/2, m/2].
inline ZPoly zsymmetric(ZPoly a, const Int& m)
{
    const Int half = m / 2;
    for (auto& x : a) {
        mpz_fdiv_r(x.get_mpz_t(), x.get_mpz_t(), m.get_mpz_t());
        if (x > half) x -= m;
    }
    ztrim(a);
    return a;
}

inline ZPoly zadd(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] += b[i];
    ztrim(r);
    return r;
}

inline ZPoly zsub(const ZPoly& a, const ZPoly& b)
{
    ZPoly r(std::max(a.size(), b.size()));
    for (std::size_t i = 0; i < a.size(); ++i) r[i] += a[i];
    for (std::size_t i = 0; i < b.size(); ++i) r[i] -= b[i];
    ztrim(r);
    return r;
}

inline ZPoly zmul(const ZPoly& a, const ZPoly& b)
{
    if (a.empty() || b.empty()) return {};
    ZPoly r(a.size() + b.size() - 1);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) mpz_addmul(r[i + j].get_mpz_t(), a[i].get_mpz_t(), b[j].get_mpz_t());
    }
    ztrim(r);
    return r;
}

// Division by a monic polynomial modulo m.
inline std::pair<ZPoly, ZPoly> zdivrem_monic(ZPoly a, const ZPoly& b, const Int& m)
{
    a = zmod(std::move(a), m);
    if (a.size() < b.size()) return {ZPoly{}, a};
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        Int t = a[k + db];
        mpz_fdiv_r(t.get_mpz_t(), t.get_mpz_t(), m.get_mpz_t());
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(a[k + j].get_mpz_t(), t.get_mpz_t(), b[j].get_mpz_t());
    }
    a.resize(db);
    return {zmod(std::move(q), m), zmod(std::move(a), m)};
}

inline ZPoly from_modp(const modp::Poly& a)
{
    ZPoly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::to_int(a[i]);
    return r;
}

inline modp::Poly to_modp(const ZPoly& a, modp::u64 p)
{
    modp::Poly r(a.size());
    for (std::size_t i = 0; i < a.size(); ++i) r[i] = modp::reduce(a[i], p);
    modp::trim(r);
    return r;
}

// Exact division over Z; empty optional-like result (ok=false) when b does not divide a.
inline bool zdivide_exact(const ZPoly& a, const ZPoly& b, ZPoly& quotient)
{
    if (a.size() < b.size()) return false;
    ZPoly r = a;
    const std::size_t db = b.size() - 1;
    ZPoly q(a.size() - db);
    for (std::size_t k = q.size(); k-- > 0;) {
        if (!mpz_divisible_p(r[k + db].get_mpz_t(), b.back().get_mpz_t())) return false;
        mpz_divexact(q[k].get_mpz_t(), r[k + db].get_mpz_t(), b.back().get_mpz_t());
        for (std::size_t j = 0; j <= db; ++j) mpz_submul(r[k + j].get_mpz_t(), q[k].get_mpz_t(), b[j].get_mpz_t());
    }
    for (std::size_t i = 0; i < db; ++i)
        if (r[i] != 0) return false;
    quotient = std::move(q);
    return true;
}

inline ZPoly zprimitive(ZPoly a)
{
    Int c = 0;
    for (const auto& x : a) c = gcd(c, x);
    if (c == 0) return a;
    if (a.back() < 0) c = -c;
    for (auto& x : a) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
    return a;
}

// Distinct-degree factorization of a monic squarefree polynomial mod p.
inline std::vector<std::pair<modp::Poly, unsigned>> distinct_degree(modp::Poly g, modp::u64 p)
{
    std::vector<std::pair<modp::Poly, unsigned>> out;
    const modp::Poly x{0, 1};
    modp::Poly h = x;
    for (unsigned i = 1; 2 * i <= static_cast<unsigned>(modp::degree(g)); ++i) {
        h = modp::powmod(h, modp::to_int(p), g, p);
        modp::Poly gi = modp::gcd(g, modp::sub(h, x, p), p);
        if (modp::degree(gi) > 0) {
            out.emplace_back(gi, i);
            g = modp::divrem(g, gi, p).first;
            h = modp::rem(h, g, p);
        }
    }
    if (modp::degree(g) > 0) out.emplace_back(g, static_cast<unsigned>(modp::degree(g)));
    return out;
}

// Cantor-Zassenhaus equal-degree splitting (p odd).
inline void equal_degree(const modp::Poly& g, unsigned d, modp::u64 p, std::mt19937_64& rng,
                         std::vector<modp::Poly>& out)
{
    const long n = modp::degree(g);
    if (n == static_cast<long>(d)) {
        out.push_back(g);
        return;
    }
    Int e;
    mpz_ui_pow_ui(e.get_mpz_t(), p, d);
    e = (e - 1) / 2;
    while (true) {
        modp::Poly a(static_cast<std::size_t>(n));
        for (auto& c : a) c = rng() % p;
        modp::trim(a);
        if (modp::degree(a) < 1) continue;
        modp::Poly b = modp::powmod(a, e, g, p);
        b = modp::sub(b, modp::Poly{1}, p);
        modp::Poly f = modp::gcd(g, b, p);
        if (modp::degree(f) > 0 && modp::degree(f) < n) {
            equal_degree(f, d, p, rng, out);
            equal_degree(modp::divrem(g, f, p).first, d, p, rng, out);
            return;
        }
    }
}

inline std::vector<modp::Poly> factor_modp(const modp::Poly& monic_g, modp::u64 p)
{
    std::mt19937_64 rng(0x5EED0000ULL + p);
    std::vector<modp::Poly> out;
    for (auto& [gi, d] : distinct_degree(monic_g, p)) equal_degree(gi, d, p, rng, out);
    return out;
}

// Lifts f = g*h (mod p), h monic, gcd(g,h)=1 mod p, to a factorization
// modulo p^(2^k) >= bound. Returns the lifted monic h.
inline ZPoly hensel_lift_factor(const ZPoly& f, const modp::Poly& g0, const modp::Poly& h0, modp::u64 p,
                                const Int& bound, Int& modulus)
{
    auto [one, s0, t0] = modp::xgcd(g0, h0, p);
    if (modp::degree(one) != 0) throw std::logic_error("Hensel lifting: factors not coprime mod p");
    ZPoly g = from_modp(g0), h = from_modp(h0), s = from_modp(s0), t = from_modp(t0);
    Int m = modp::to_int(p);
    while (m <= bound) {
        const Int m2 = m * m;
        const ZPoly e = zmod(zsub(f, zmul(g, h)), m2);
        auto [q, r] = zdivrem_monic(zmul(s, e), h, m2);
        const ZPoly gs = zmod(zadd(g, zadd(zmul(t, e), zmul(q, g))), m2);
        const ZPoly hs = zmod(zadd(h, r), m2);
        const ZPoly b = zmod(zsub(zadd(zmul(s, gs), zmul(t, hs)), ZPoly{Int(1)}), m2);
        auto [c, d] = zdivrem_monic(zmul(s, b), hs, m2);
        s = zmod(zsub(s, d), m2);
        t = zmod(zsub(t, zadd(zmul(t, b), zmul(c, gs))), m2);
        g = gs;
        h = hs;
        m = m2;
    }
    modulus = m;
    return h;
}

// Zassenhaus on a primitive squarefree integer polynomial of degree >= 1.
// Returns primitive irreducible factors with positive leading coefficients.
inline std::vector<ZPoly> zassenhaus(ZPoly f)
{
    if (f.size() <= 2) return {f};
    const std::size_t n = f.size() - 1;

    // Pick the prime giving the fewest modular factors among a few candidates.
    modp::u64 best_p = 0;
    std::vector<modp::Poly> best;
    int tried = 0;
    for (modp::u64 p = 3; tried < 6 && p < 100000; p += 2) {
        if (!modp::is_prime(p)) continue;
        if (modp::reduce(f.back(), p) == 0) continue;
        const modp::Poly fp = to_modp(f, p);
        if (modp::degree(modp::gcd(fp, modp::derivative(fp, p), p)) != 0) continue;
        auto fac = factor_modp(modp::make_monic(fp, p), p);
        ++tried;
        if (best_p == 0 || fac.size() < best.size()) {
            best_p = p;
            best = std::move(fac);
        }
        if (best.size() == 1) break;
    }
    if (best_p == 0) throw std::logic_error("no suitable prime for factorization");
    if (best.size() == 1) return {f};
    const modp::u64 p = best_p;

    // Landau-Mignotte: any factor's coefficients are at most 2^n * ||f||_2; the
    // recombination candidate carries an extra |lc(f)|.
    Int norm2 = 0;
    for (const auto& c : f) norm2 += c * c;
    Int norm;
    mpz_sqrt(norm.get_mpz_t(), norm2.get_mpz_t());
    norm += 1;
    Int bound = norm * abs(f.back()) * 2;
    mpz_mul_2exp(bound.get_mpz_t(), bound.get_mpz_t(), n);

    const modp::u64 lc_p = modp::reduce(f.back(), p);
    std::vector<ZPoly> lifted;
    Int modulus = 1;
    for (std::size_t i = 0; i < best.size(); ++i) {
        modp::Poly rest{lc_p};
        for (std::size_t j = 0; j < best.size(); ++j)
            if (j != i) rest = modp::mul(rest, best[j], p);
        lifted.push_back(hensel_lift_factor(f, rest, best[i], p, bound, modulus));
    }

    // Recombination over subsets of increasing size.
    std::vector<ZPoly> result;
    std::vector<bool> used(lifted.size(), false);
    std::size_t remaining = lifted.size();
    for (std::size_t k = 1; 2 * k <= remaining; ++k) {
        bool found_any = true;
        while (found_any && 2 * k <= remaining) {
            found_any = false;
            std::vector<std::size_t> idx;
            for (std::size_t i = 0; i < lifted.size(); ++i)
                if (!used[i]) idx.push_back(i);
            std::vector<std::size_t> sel(k);
            for (std::size_t i = 0; i < k; ++i) sel[i] = i;
            while (true) {
                ZPoly cand{f.back()};
                for (std::size_t s : sel) cand = zmod(zmul(cand, lifted[idx[s]]), modulus);
                cand = zprimitive(zsymmetric(cand, modulus));
                ZPoly q;
                if (zdivide_exact(f, cand, q)) {
                    result.push_back(cand);
                    f = zprimitive(q);
                    for (std::size_t s : sel) used[idx[s]] = true;
                    remaining -= k;
                    found_any = true;
                    break;
                }
                // next k-subset of idx
                std::size_t i = k;
                while (i > 0 && sel[i - 1] == idx.size() - k + i - 1) --i;
                if (i == 0) break;
                ++sel[i - 1];
                for (std::size_t j = i; j < k; ++j) sel[j] = sel[j - 1] + 1;
            }
        }
    }
    if (f.size() > 1) result.push_back(f);
    return result;
}

} // namespace detail

/// Complete factorization over Q into monic irreducibles with multiplicities;
/// `unit` is the leading coefficient. Factors are ordered by degree, then by
/// coefficients. The result is checked by re-multiplication.
inline Factorization factor_rationals(const PolyQ& p)
{
    if (p.is_zero()) throw std::domain_error("factorization of zero polynomial");
    Factorization out;
    out.unit = p.lead();
    for (const auto& [part, mult] : squarefree_decomposition(p)) {
        const auto prim = primitive_integer_part(part).second;
        for (const auto& z : detail::zassenhaus(prim)) out.factors.push_back({from_integer_coeffs(z).monic(), mult});
    }
    std::sort(out.factors.begin(), out.factors.end(),
              [](const auto& a, const auto& b) { return poly_less(a.factor, b.factor); });
    if (out.expand() != p) throw std::logic_error("factorization failed re-multiplication check");
    return out;
}

} // namespace geneig

#endif // GENEIG_FACTOR_HPP
