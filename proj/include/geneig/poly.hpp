#ifndef GENEIG_POLY_HPP
#define GENEIG_POLY_HPP

#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <sstream>
#include <stdexcept>
#include <string>
#include <string_view>
#include <utility>
#include <vector>

namespace geneig {

/// Dense univariate polynomial over the rationals, coefficients in ascending
/// degree. The zero polynomial has no coefficients; otherwise the leading
/// coefficient is nonzero.
class PolyQ {
public:
    PolyQ() = default;

    explicit PolyQ(std::vector<Rat> coeffs) : c_(std::move(coeffs)) { trim(); }

    PolyQ(std::initializer_list<long> coeffs)
    {
        c_.reserve(coeffs.size());
        for (long v : coeffs) c_.emplace_back(v);
        trim();
    }

    static PolyQ constant(const Rat& c) { return PolyQ(std::vector<Rat>{c}); }

    static PolyQ monomial(const Rat& c, std::size_t k)
    {
        std::vector<Rat> v(k + 1);
        v[k] = c;
        return PolyQ(std::move(v));
    }

    /// The polynomial `lambda - a`.
    static PolyQ linear_root(const Rat& a) { return PolyQ(std::vector<Rat>{-a, Rat(1)}); }

    bool is_zero() const { return c_.empty(); }

    /// -1 for the zero polynomial.
    long degree() const { return static_cast<long>(c_.size()) - 1; }

    std::size_t size() const { return c_.size(); }

    const std::vector<Rat>& coeffs() const { return c_; }

    Rat coeff(std::size_t i) const { return i < c_.size() ? c_[i] : Rat(0); }

    const Rat& lead() const
    {
        if (c_.empty()) throw std::domain_error("leading coefficient of zero polynomial");
        return c_.back();
    }

    bool is_monic() const { return !c_.empty() && c_.back() == 1; }

    PolyQ monic() const
    {
        if (c_.empty()) return {};
        PolyQ r = *this;
        const Rat inv = 1 / c_.back();
        for (auto& x : r.c_) x *= inv;
        return r;
    }

    PolyQ derivative() const
    {
        if (c_.size() <= 1) return {};
        std::vector<Rat> d(c_.size() - 1);
        for (std::size_t i = 1; i < c_.size(); ++i) d[i - 1] = c_[i] * static_cast<unsigned long>(i);
        return PolyQ(std::move(d));
    }

    Rat eval(const Rat& x) const
    {
        Rat acc = 0;
        for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    PolyQ& operator+=(const PolyQ& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] += o.c_[i];
        trim();
        return *this;
    }

    PolyQ& operator-=(const PolyQ& o)
    {
        if (o.c_.size() > c_.size()) c_.resize(o.c_.size());
        for (std::size_t i = 0; i < o.c_.size(); ++i) c_[i] -= o.c_[i];
        trim();
        return *this;
    }

    PolyQ& operator*=(const Rat& s)
    {
        if (s == 0) {
            c_.clear();
            return *this;
        }
        for (auto& x : c_) x *= s;
        return *this;
    }

    friend PolyQ operator+(PolyQ a, const PolyQ& b) { return a += b; }
    friend PolyQ operator-(PolyQ a, const PolyQ& b) { return a -= b; }
    friend PolyQ operator*(PolyQ a, const Rat& s) { return a *= s; }
    friend PolyQ operator*(const Rat& s, PolyQ a) { return a *= s; }

    friend PolyQ operator-(PolyQ a)
    {
        for (auto& x : a.c_) x = -x;
        return a;
    }

    friend PolyQ operator*(const PolyQ& a, const PolyQ& b)
    {
        if (a.is_zero() || b.is_zero()) return {};
        std::vector<Rat> r(a.c_.size() + b.c_.size() - 1);
        for (std::size_t i = 0; i < a.c_.size(); ++i) {
            if (a.c_[i] == 0) continue;
            for (std::size_t j = 0; j < b.c_.size(); ++j) r[i + j] += a.c_[i] * b.c_[j];
        }
        return PolyQ(std::move(r));
    }

    PolyQ& operator*=(const PolyQ& o) { return *this = *this * o; }

    friend bool operator==(const PolyQ& a, const PolyQ& b) { return a.c_ == b.c_; }
    friend bool operator!=(const PolyQ& a, const PolyQ& b) { return !(a == b); }

private:
    void trim()
    {
        while (!c_.empty() && c_.back() == 0) c_.pop_back();
    }

    std::vector<Rat> c_;
};

inline PolyQ pow(const PolyQ& p, unsigned k)
{
    PolyQ result = PolyQ::constant(1);
    PolyQ base = p;
    while (k > 0) {
        if (k & 1u) result *= base;
        k >>= 1u;
        if (k > 0) base *= base;
    }
    return result;
}

/// Quotient and remainder with `a = q*b + r`, `deg r < deg b`.
inline std::pair<PolyQ, PolyQ> divrem(const PolyQ& a, const PolyQ& b)
{
    if (b.is_zero()) throw std::domain_error("polynomial division by zero");
    if (a.degree() < b.degree()) return {PolyQ{}, a};
    std::vector<Rat> r = a.coeffs();
    const std::size_t db = static_cast<std::size_t>(b.degree());
    const std::size_t dq = r.size() - 1 - db;
    std::vector<Rat> q(dq + 1);
    const Rat inv_lead = 1 / b.lead();
    const bool monic = b.lead() == 1;
    const auto& bc = b.coeffs();
    for (std::size_t k = dq + 1; k-- > 0;) {
        Rat t = r[k + db];
        if (t == 0) continue;
        if (!monic) t *= inv_lead;
        q[k] = t;
        for (std::size_t j = 0; j < db; ++j)
            if (bc[j] != 0) r[k + j] -= t * bc[j];
        r[k + db] = 0;
    }
    r.resize(db);
    return {PolyQ(std::move(q)), PolyQ(std::move(r))};
}

inline PolyQ operator/(const PolyQ& a, const PolyQ& b)
{
    return divrem(a, b).first;
}

inline PolyQ operator%(const PolyQ& a, const PolyQ& b)
{
    return divrem(a, b).second;
}

inline bool divides(const PolyQ& d, const PolyQ& p)
{
    return (p % d).is_zero();
}

/// Splits `p = scale * prim` with `prim` an integer polynomial of content one
/// and positive leading coefficient.
inline std::pair<Rat, std::vector<Int>> primitive_integer_part(const PolyQ& p)
{
    if (p.is_zero()) return {Rat(0), {}};
    Int den = 1;
    for (const auto& c : p.coeffs()) den = lcm(den, c.get_den());
    std::vector<Int> z(p.size());
    Int content = 0;
    for (std::size_t i = 0; i < p.size(); ++i) {
        z[i] = p.coeffs()[i].get_num() * (den / p.coeffs()[i].get_den());
        content = gcd(content, z[i]);
    }
    if (z.back() < 0) content = -content;
    for (auto& x : z) x /= content;
    Rat scale(content, den);
    scale.canonicalize();
    return {scale, std::move(z)};
}

inline PolyQ from_integer_coeffs(const std::vector<Int>& z)
{
    std::vector<Rat> c;
    c.reserve(z.size());
    for (const auto& x : z) c.emplace_back(x);
    return PolyQ(std::move(c));
}

namespace detail {

// Pseudo-remainder sequence with content removal, on primitive integer
// polynomials. Keeps coefficient growth bounded by the subresultants.
inline std::vector<Int> integer_prem(std::vector<Int> a, const std::vector<Int>& b)
{
    const std::size_t db = b.size() - 1;
    const Int& lb = b.back();
    while (a.size() >= b.size()) {
        const Int la = a.back();
        const std::size_t shift = a.size() - b.size();
        const Int g = gcd(la, lb);
        const Int sa = lb / g;
        const Int sb = la / g;
        for (auto& x : a) x *= sa;
        for (std::size_t j = 0; j <= db; ++j) a[shift + j] -= sb * b[j];
        while (!a.empty() && a.back() == 0) a.pop_back();
        if (a.empty()) break;
    }
    Int content = 0;
    for (const auto& x : a) content = gcd(content, x);
    if (content > 1)
        for (auto& x : a) x /= content;
    return a;
}

} // namespace detail

/// Monic greatest common divisor. Error when both inputs are zero.
inline PolyQ gcd(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() && b.is_zero()) throw std::domain_error("gcd of two zero polynomials");
    if (a.is_zero()) return b.monic();
    if (b.is_zero()) return a.monic();
    auto x = primitive_integer_part(a).second;
    auto y = primitive_integer_part(b).second;
    if (x.size() < y.size()) std::swap(x, y);
    while (!y.empty()) {
        if (y.size() == 1) return PolyQ::constant(1);
        auto r = detail::integer_prem(std::move(x), y);
        x = std::move(y);
        y = std::move(r);
    }
    return from_integer_coeffs(x).monic();
}

/// Monic least common multiple. Error on a zero input.
inline PolyQ lcm(const PolyQ& a, const PolyQ& b)
{
    if (a.is_zero() || b.is_zero()) throw std::domain_error("lcm with zero polynomial");
    return ((a / gcd(a, b)) * b).monic();
}

/// Yun's squarefree decomposition: `p = lc * prod part_i^i`, parts
/// squarefree and pairwise coprime. Only nonconstant parts are returned,
/// ordered by multiplicity; each part is monic.
inline std::vector<std::pair<PolyQ, unsigned>> squarefree_decomposition(const PolyQ& p)
{
    if (p.is_zero()) throw std::domain_error("squarefree decomposition of zero polynomial");
    std::vector<std::pair<PolyQ, unsigned>> out;
    if (p.degree() == 0) return out;
    const PolyQ f = p.monic();
    const PolyQ df = f.derivative();
    PolyQ a = gcd(f, df);
    PolyQ b = f / a;
    PolyQ c = (df / a) - b.derivative();
    unsigned i = 1;
    while (b.degree() > 0) {
        const PolyQ d = gcd(b, c);
        if (d.degree() > 0) out.emplace_back(d, i);
        const PolyQ bn = b / d;
        c = (c / d) - bn.derivative();
        b = bn;
        ++i;
    }
    return out;
}

/// Orders by degree, then by ascending-coefficient lexicographic order.
inline bool poly_less(const PolyQ& a, const PolyQ& b)
{
    if (a.degree() != b.degree()) return a.degree() < b.degree();
    return std::lexicographical_compare(a.coeffs().begin(), a.coeffs().end(), b.coeffs().begin(),
                                        b.coeffs().end());
}

/// Comma-separated ascending coefficients, e.g. "5,1,1" for λ²+λ+5.
inline PolyQ parse_poly(std::string_view text)
{
    const std::string s = trim(text);
    if (s.empty()) throw ParseError("empty polynomial");
    std::vector<Rat> c;
    std::size_t start = 0;
    while (true) {
        const auto comma = s.find(',', start);
        c.push_back(parse_rat(std::string_view(s).substr(start, comma - start)));
        if (comma == std::string::npos) break;
        start = comma + 1;
    }
    return PolyQ(std::move(c));
}

/// Inverse of parse_poly; the zero polynomial prints as "0".
inline std::string format_coeffs(const PolyQ& p)
{
    if (p.is_zero()) return "0";
    std::string out;
    for (std::size_t i = 0; i < p.size(); ++i) {
        if (i) out += ',';
        out += to_string(p.coeffs()[i]);
    }
    return out;
}

/// Human-readable form in descending powers of `var`.
inline std::string format_poly(const PolyQ& p, std::string_view var = "x")
{
    if (p.is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t k = p.size(); k-- > 0;) {
        Rat c = p.coeffs()[k];
        if (c == 0) continue;
        const bool neg = c < 0;
        if (neg) c = -c;
        if (first)
            os << (neg ? "-" : "");
        else
            os << (neg ? " - " : " + ");
        first = false;
        if (k == 0 || c != 1) {
            os << to_string(c);
            if (k > 0) os << '*';
        }
        if (k >= 1) os << var;
        if (k >= 2) os << '^' << k;
    }
    return os.str();
}

} // namespace geneig

#endif // GENEIG_POLY_HPP
