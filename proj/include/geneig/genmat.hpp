#ifndef GENEIG_GENMAT_HPP
#define GENEIG_GENMAT_HPP

// Test matrices with a prescribed Jordan structure: block companion matrices
// scrambled by random elementary similarity transforms.

#include "matrix.hpp"
#include "poly.hpp"

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geneig {

struct BlockSpec {
    struct Entry {
        PolyQ f;                      // monic
        std::vector<unsigned> chains;  // chain lengths
    };
    std::vector<Entry> entries;

    std::size_t order() const
    {
        std::size_t n = 0;
        for (const auto& e : entries)
            for (unsigned c : e.chains) n += static_cast<std::size_t>(e.f.degree()) * c;
        return n;
    }
};

/// "<coeffs>:<l1,l2,...>[;<coeffs>:<...>]", coefficients ascending.
inline BlockSpec parse_block_spec(std::string_view text)
{
    BlockSpec spec;
    std::size_t pos = 0;
    while (pos <= text.size()) {
        std::size_t end = text.find(';', pos);
        if (end == std::string_view::npos) end = text.size();
        const std::string part = trim(text.substr(pos, end - pos));
        pos = end + 1;
        if (part.empty()) continue;
        const auto colon = part.find(':');
        if (colon == std::string::npos) throw ParseError("block spec entry needs '<poly>:<lengths>': " + part);
        BlockSpec::Entry e;
        e.f = parse_poly(std::string_view(part).substr(0, colon));
        if (e.f.degree() < 1 || !e.f.is_monic()) throw ParseError("block spec polynomial must be monic of positive degree");
        const std::string lens = part.substr(colon + 1);
        std::size_t p = 0;
        while (p <= lens.size()) {
            std::size_t q = lens.find(',', p);
            if (q == std::string::npos) q = lens.size();
            const std::string tok = trim(std::string_view(lens).substr(p, q - p));
            p = q + 1;
            const Int v = detail::parse_int(tok);
            if (v < 1 || v > 1000000) throw ParseError("chain length out of range: " + tok);
            e.chains.push_back(static_cast<unsigned>(v.get_ui()));
        }
        spec.entries.push_back(std::move(e));
    }
    if (spec.entries.empty()) throw ParseError("empty block spec");
    return spec;
}

inline std::string format_block_spec(const BlockSpec& spec)
{
    std::string out;
    for (const auto& e : spec.entries) {
        if (!out.empty()) out += ';';
        out += format_coeffs(e.f) + ':';
        for (std::size_t i = 0; i < e.chains.size(); ++i) out += (i ? "," : "") + std::to_string(e.chains[i]);
    }
    return out;
}

/// Block diagonal over factors and chains; a chain of length c is a c x c
/// grid of d x d blocks with C(f) on the diagonal and the identity on the
/// superdiagonal.
inline MatQ build_block_matrix(const BlockSpec& spec)
{
    if (spec.entries.empty()) throw std::invalid_argument("build_block_matrix: empty spec");
    const std::size_t n = spec.order();
    std::vector<Rat> m(n * n);
    std::size_t off = 0;
    for (const auto& e : spec.entries) {
        if (e.f.degree() < 1 || !e.f.is_monic()) throw std::invalid_argument("build_block_matrix: factor must be monic");
        const std::size_t d = static_cast<std::size_t>(e.f.degree());
        const MatQ c = companion(e.f);
        for (unsigned len : e.chains) {
            for (unsigned b = 0; b < len; ++b) {
                const std::size_t o = off + b * d;
                for (std::size_t i = 0; i < d; ++i)
                    for (std::size_t j = 0; j < d; ++j) m[(o + i) * n + o + j] = c.at(i, j);
                if (b + 1 < len)
                    for (std::size_t i = 0; i < d; ++i) m[(o + i) * n + o + d + i] = 1;
            }
            off += len * d;
        }
    }
    return MatQ::from_rats(n, n, m);
}

/// Similarity by `steps` random elementary transforms: T = I + c E_ji adds c
/// times row i to row j, and T^{-1} on the right subtracts c times column j
/// from column i. Indices and multipliers come from std::mt19937_64 seeded
/// with `seed`: i = x % n, j drawn from the other n-1 indices, c uniform in
/// [-bound, bound] without 0, each from one draw taken modulo the range.
inline MatQ scramble(const MatQ& a, std::uint64_t seed, std::size_t steps, unsigned bound = 2)
{
    if (!a.is_square()) throw ShapeError("scramble: matrix not square");
    const std::size_t n = a.rows();
    if (n < 2 || steps == 0 || bound == 0) return a;
    std::vector<Int> num = a.num();
    std::mt19937_64 rng(seed);
    for (std::size_t s = 0; s < steps; ++s) {
        const std::size_t i = rng() % n;
        std::size_t j = rng() % (n - 1);
        if (j >= i) ++j;
        const long k = static_cast<long>(rng() % (2 * bound));
        const Int c = k < static_cast<long>(bound) ? Int(k - static_cast<long>(bound)) : Int(k - static_cast<long>(bound) + 1);
        for (std::size_t t = 0; t < n; ++t)
            if (num[i * n + t] != 0) mpz_addmul(num[j * n + t].get_mpz_t(), c.get_mpz_t(), num[i * n + t].get_mpz_t());
        for (std::size_t t = 0; t < n; ++t)
            if (num[t * n + j] != 0) mpz_submul(num[t * n + i].get_mpz_t(), c.get_mpz_t(), num[t * n + j].get_mpz_t());
    }
    return MatQ(n, n, std::move(num), a.den());
}

/// x^d + p x + p for d >= 2 (Eisenstein at p, hence irreducible); x + p for d = 1.
inline PolyQ eisenstein_poly(unsigned d, long p)
{
    if (d == 0) throw std::invalid_argument("eisenstein_poly: degree must be positive");
    if (d == 1) return PolyQ{p, 1};
    std::vector<Rat> c(d + 1);
    c[0] = p;
    c[1] += p;
    c[d] = 1;
    return PolyQ(std::move(c));
}

/// Benchmark structures: paper71 is one factor of degree d with chains
/// 3,2,2,1,1,1 (n = 10d); paper72 mixes four factors with chains 5 | 2 | 1 | 1.
inline BlockSpec suite_spec(std::string_view name, unsigned d)
{
    BlockSpec s;
    if (name == "paper71") {
        s.entries.push_back({eisenstein_poly(d, 2), {3, 2, 2, 1, 1, 1}});
    } else if (name == "paper72") {
        s.entries.push_back({eisenstein_poly(d, 2), {5}});
        s.entries.push_back({eisenstein_poly(d, 3), {2}});
        s.entries.push_back({eisenstein_poly(2 * d, 5), {1}});
        s.entries.push_back({eisenstein_poly(d, 7), {1}});
    } else {
        throw std::invalid_argument("unknown suite: " + std::string(name));
    }
    return s;
}

} // namespace geneig

#endif // GENEIG_GENMAT_HPP
