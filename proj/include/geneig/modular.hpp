#ifndef GENEIG_MODULAR_HPP
#define GENEIG_MODULAR_HPP

// Word-size prime-field arithmetic: scalars, dense polynomials and matrices
// modulo a prime p < 2^62. Used by the factorizer, the multimodular
// characteristic polynomial and the rank certificates.

#include "rational.hpp"

#include <algorithm>
#include <cstdint>
#include <stdexcept>
#include <optional>
#include <tuple>
#include <utility>
#include <vector>

namespace geneig::modp {

using u64 = std::uint64_t;
using u128 = unsigned __int128;

inline u64 mul(u64 a, u64 b, u64 p)
{
    return static_cast<u64>(static_cast<u128>(a) * b % p);
}

inline u64 add(u64 a, u64 b, u64 p)
{
    const u64 s = a + b;
    return s >= p ? s - p : s;
}

inline u64 sub(u64 a, u64 b, u64 p)
{
    return a >= b ? a - b : a + p - b;
}

inline u64 pow(u64 a, u64 e, u64 p)
{
    u64 r = 1 % p;
    a %= p;
    while (e) {
        if (e & 1) r = mul(r, a, p);
        a = mul(a, a, p);
        e >>= 1;
    }
    return r;
}

inline u64 inv(u64 a, u64 p)
{
    if (a % p == 0) throw std::domain_error("inverse of zero modulo p");
    return pow(a, p - 2, p);
}

/// Deterministic Miller-Rabin for 64-bit integers.
inline bool is_prime(u64 n)
{
    if (n < 2) return false;
    for (u64 q : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        if (n % q == 0) return n == q;
    }
    u64 d = n - 1;
    int s = 0;
    while ((d & 1) == 0) {
        d >>= 1;
        ++s;
    }
    for (u64 a : {2ULL, 3ULL, 5ULL, 7ULL, 11ULL, 13ULL, 17ULL, 19ULL, 23ULL, 29ULL, 31ULL, 37ULL}) {
        u64 x = pow(a, d, n);
        if (x == 1 || x == n - 1) continue;
        bool composite = true;
        for (int r = 1; r < s; ++r) {
            x = mul(x, x, n);
            if (x == n - 1) {
                composite = false;
                break;
            }
        }
        if (composite) return false;
    }
    return true;
}

/// Largest prime strictly below `n`.
inline u64 prev_prime(u64 n)
{
    for (u64 c = n - 1; c > 2; --c)
        if (is_prime(c)) return c;
    throw std::logic_error("no prime below bound");
}

static_assert(sizeof(unsigned long) == sizeof(u64), "GMP ui calls need 64-bit unsigned long");

inline u64 reduce(const Int& z, u64 p)
{
    return mpz_fdiv_ui(z.get_mpz_t(), p);
}

inline Int to_int(u64 v)
{
    return Int(static_cast<unsigned long>(v));
}

// ---------------------------------------------------------------------------
// Polynomials over Z/p, ascending coefficients, no trailing zeros.

using Poly = std::vector<u64>;

inline void trim(Poly& a)
{
    while (!a.empty() && a.back() == 0) a.pop_back();
}

inline long degree(const Poly& a)
{
    return static_cast<long>(a.size()) - 1;
}

inline Poly sub(const Poly& a, const Poly& b, u64 p)
{
    Poly r(std::max(a.size(), b.size()), 0);
    for (std::size_t i = 0; i < r.size(); ++i)
        r[i] = sub(i < a.size() ? a[i] : 0, i < b.size() ? b[i] : 0, p);
    trim(r);
    return r;
}

inline Poly mul(const Poly& a, const Poly& b, u64 p)
{
    if (a.empty() || b.empty()) return {};
    Poly r(a.size() + b.size() - 1, 0);
    for (std::size_t i = 0; i < a.size(); ++i) {
        if (a[i] == 0) continue;
        for (std::size_t j = 0; j < b.size(); ++j) r[i + j] = add(r[i + j], mul(a[i], b[j], p), p);
    }
    trim(r);
    return r;
}

inline Poly scale(Poly a, u64 s, u64 p)
{
    for (auto& x : a) x = mul(x, s, p);
    trim(a);
    return a;
}

inline Poly make_monic(const Poly& a, u64 p)
{
    if (a.empty()) return a;
    return scale(a, inv(a.back(), p), p);
}

inline std::pair<Poly, Poly> divrem(Poly a, const Poly& b, u64 p)
{
    if (b.empty()) throw std::domain_error("division by zero polynomial mod p");
    if (a.size() < b.size()) return {Poly{}, a};
    const u64 il = inv(b.back(), p);
    const std::size_t db = b.size() - 1;
    Poly q(a.size() - db, 0);
    for (std::size_t k = q.size(); k-- > 0;) {
        const u64 t = mul(a[k + db], il, p);
        q[k] = t;
        if (t == 0) continue;
        for (std::size_t j = 0; j <= db; ++j) a[k + j] = sub(a[k + j], mul(t, b[j], p), p);
    }
    a.resize(db);
    trim(a);
    trim(q);
    return {q, a};
}

inline Poly rem(const Poly& a, const Poly& b, u64 p)
{
    return divrem(a, b, p).second;
}

inline Poly gcd(Poly a, Poly b, u64 p)
{
    while (!b.empty()) {
        Poly r = rem(a, b, p);
        a = std::move(b);
        b = std::move(r);
    }
    return make_monic(a, p);
}

/// Returns (g, s, t) with s*a + t*b = g monic.
inline std::tuple<Poly, Poly, Poly> xgcd(Poly a, Poly b, u64 p)
{
    Poly s0{1}, s1{}, t0{}, t1{1};
    while (!b.empty()) {
        auto [q, r] = divrem(a, b, p);
        Poly s2 = sub(s0, mul(q, s1, p), p);
        Poly t2 = sub(t0, mul(q, t1, p), p);
        a = std::move(b);
        b = std::move(r);
        s0 = std::move(s1);
        s1 = std::move(s2);
        t0 = std::move(t1);
        t1 = std::move(t2);
    }
    if (a.empty()) return {a, s0, t0};
    const u64 il = inv(a.back(), p);
    return {scale(a, il, p), scale(s0, il, p), scale(t0, il, p)};
}

inline Poly derivative(const Poly& a, u64 p)
{
    if (a.size() <= 1) return {};
    Poly d(a.size() - 1);
    for (std::size_t i = 1; i < a.size(); ++i) d[i - 1] = mul(a[i], i % p, p);
    trim(d);
    return d;
}

inline Poly powmod(Poly base, const Int& e, const Poly& m, u64 p)
{
    Poly r{1};
    base = rem(base, m, p);
    const std::size_t bits = mpz_sizeinbase(e.get_mpz_t(), 2);
    for (std::size_t i = bits; i-- > 0;) {
        r = rem(mul(r, r, p), m, p);
        if (mpz_tstbit(e.get_mpz_t(), i)) r = rem(mul(r, base, p), m, p);
    }
    return r;
}

// ---------------------------------------------------------------------------
// Dense matrices over Z/p.

/// Row-major n x m matrix mod p.
struct Mat {
    std::size_t rows = 0;
    std::size_t cols = 0;
    std::vector<u64> a;
    u64& operator()(std::size_t i, std::size_t j) { return a[i * cols + j]; }
    u64 operator()(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

/// Rank by Gaussian elimination over Z/p.
inline std::size_t rank(Mat m, u64 p)
{
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        const u64 il = inv(m(r, c), p);
        for (std::size_t i = r + 1; i < m.rows; ++i) {
            if (m(i, c) == 0) continue;
            const u64 t = mul(m(i, c), il, p);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = sub(m(i, j), mul(t, m(r, j), p), p);
        }
        ++r;
    }
    return r;
}

/// Characteristic polynomial det(xI - M) via reduction to upper Hessenberg
/// form and the Hessenberg determinant recurrence. O(n^3).
inline Poly charpoly(Mat h, u64 p)
{
    const std::size_t n = h.rows;
    // Hessenberg reduction by stabilized elementary similarity transforms.
    for (std::size_t m = 1; m < n; ++m) {
        std::size_t i = m;
        while (i < n && h(i, m - 1) == 0) ++i;
        if (i == n) continue;
        if (i != m) {
            for (std::size_t j = 0; j < n; ++j) std::swap(h(i, j), h(m, j));
            for (std::size_t j = 0; j < n; ++j) std::swap(h(j, i), h(j, m));
        }
        const u64 il = inv(h(m, m - 1), p);
        for (std::size_t r = m + 1; r < n; ++r) {
            const u64 t = mul(h(r, m - 1), il, p);
            if (t == 0) continue;
            // row_r -= t * row_m
            for (std::size_t j = 0; j < n; ++j) h(r, j) = sub(h(r, j), mul(t, h(m, j), p), p);
            // col_m += t * col_r
            for (std::size_t j = 0; j < n; ++j) h(j, m) = add(h(j, m), mul(t, h(j, r), p), p);
        }
    }
    // c[k] = charpoly of the leading k x k block.
    std::vector<Poly> c(n + 1);
    c[0] = Poly{1};
    for (std::size_t k = 1; k <= n; ++k) {
        // c[k] = (x - h(k-1,k-1)) c[k-1] - sum_{i<k-1} h(i,k-1) * prod_{j=i+1}^{k-1} h(j,j-1) * c[i]
        Poly xk(c[k - 1].size() + 1, 0);
        for (std::size_t j = 0; j < c[k - 1].size(); ++j) {
            xk[j + 1] = add(xk[j + 1], c[k - 1][j], p);
            xk[j] = sub(xk[j], mul(h(k - 1, k - 1), c[k - 1][j], p), p);
        }
        u64 prod = 1;
        for (std::size_t i = k - 1; i-- > 0;) {
            prod = mul(prod, h(i + 1, i), p);
            const u64 t = mul(prod, h(i, k - 1), p);
            if (t == 0) continue;
            for (std::size_t j = 0; j < c[i].size(); ++j) xk[j] = sub(xk[j], mul(t, c[i][j], p), p);
        }
        c[k] = std::move(xk);
    }
    Poly out = c[n];
    out.resize(n + 1, 0);
    return out;
}


/// Row-reduced echelon form of m over Z/p (leading entries 1, zero elsewhere
/// in pivot columns). Returns the pivot columns; m is replaced by its first
/// rank rows.
inline std::vector<std::size_t> rref(Mat& m, u64 p)
{
    std::vector<std::size_t> pivots;
    std::size_t r = 0;
    for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
        std::size_t piv = r;
        while (piv < m.rows && m(piv, c) == 0) ++piv;
        if (piv == m.rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < m.cols; ++j) std::swap(m(piv, j), m(r, j));
        const u64 il = inv(m(r, c), p);
        for (std::size_t j = c; j < m.cols; ++j) m(r, j) = mul(m(r, j), il, p);
        for (std::size_t i = 0; i < m.rows; ++i) {
            if (i == r || m(i, c) == 0) continue;
            const u64 t = m(i, c);
            for (std::size_t j = c; j < m.cols; ++j) m(i, j) = sub(m(i, j), mul(t, m(r, j), p), p);
        }
        pivots.push_back(c);
        ++r;
    }
    m.rows = r;
    m.a.resize(r * m.cols);
    return pivots;
}

/// Rational a/b with a = u b (mod m), |a|, b <= sqrt(m/2); nullopt if none.
inline std::optional<Rat> rational_reconstruct(const Int& u, const Int& m)
{
    Int bound;
    mpz_fdiv_q_2exp(bound.get_mpz_t(), m.get_mpz_t(), 1);
    mpz_sqrt(bound.get_mpz_t(), bound.get_mpz_t());
    Int r0 = m, r1 = u, t0 = 0, t1 = 1, q, tmp;
    if (r1 < 0) r1 += m;
    while (r1 > bound) {
        mpz_fdiv_q(q.get_mpz_t(), r0.get_mpz_t(), r1.get_mpz_t());
        tmp = r0 - q * r1;
        r0 = r1;
        r1 = tmp;
        tmp = t0 - q * t1;
        t0 = t1;
        t1 = tmp;
    }
    if (t1 == 0 || abs(t1) > bound) return std::nullopt;
    Rat out(r1, t1);
    out.canonicalize();
    if (gcd(Int(abs(t1)), m) != 1) return std::nullopt;
    return out;
}

} // namespace geneig::modp

#endif // GENEIG_MODULAR_HPP
