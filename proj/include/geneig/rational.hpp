#ifndef GENEIG_RATIONAL_HPP
#define GENEIG_RATIONAL_HPP

#include <gmpxx.h>

#include <cstddef>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace geneig {

/// Arbitrary-precision integer.
using Int = mpz_class;

/// Exact rational, always kept in lowest terms with a positive denominator.
using Rat = mpq_class;

/// Thrown for malformed textual input (matrices, polynomials, specs).
class ParseError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

inline std::string trim(std::string_view s)
{
    std::size_t b = 0;
    std::size_t e = s.size();
    while (b < e && (s[b] == ' ' || s[b] == '\t' || s[b] == '\r' || s[b] == '\n')) ++b;
    while (e > b && (s[e - 1] == ' ' || s[e - 1] == '\t' || s[e - 1] == '\r' || s[e - 1] == '\n')) --e;
    return std::string(s.substr(b, e - b));
}

namespace detail {

inline bool is_integer_literal(std::string_view s)
{
    std::size_t i = 0;
    if (i < s.size() && (s[i] == '-' || s[i] == '+')) ++i;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
        if (s[i] < '0' || s[i] > '9') return false;
    return true;
}

inline Int parse_int(std::string_view s)
{
    if (!is_integer_literal(s)) throw ParseError("not an integer: '" + std::string(s) + "'");
    if (s.front() == '+') s.remove_prefix(1);
    return Int(std::string(s), 10);
}

} // namespace detail

/// Parses "p" or "p/q" (optional sign on p). The result is canonical.
inline Rat parse_rat(std::string_view text)
{
    const std::string s = trim(text);
    const auto slash = s.find('/');
    if (slash == std::string::npos) return Rat(detail::parse_int(s));
    const Int num = detail::parse_int(std::string_view(s).substr(0, slash));
    const std::string_view den_text = std::string_view(s).substr(slash + 1);
    if (!den_text.empty() && (den_text.front() == '-' || den_text.front() == '+'))
        throw ParseError("sign not allowed in denominator: '" + s + "'");
    const Int den = detail::parse_int(den_text);
    if (den == 0) throw ParseError("zero denominator: '" + s + "'");
    Rat r(num, den);
    r.canonicalize();
    return r;
}

/// "p/q", or "p" when the denominator is one.
inline std::string to_string(const Rat& r)
{
    return r.get_str(10);
}

inline std::string to_string(const Int& z)
{
    return z.get_str(10);
}

inline Int lcm(const Int& a, const Int& b)
{
    Int r;
    mpz_lcm(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline Int gcd(const Int& a, const Int& b)
{
    Int r;
    mpz_gcd(r.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
    return r;
}

inline std::size_t bit_length(const Int& z)
{
    return z == 0 ? 0 : mpz_sizeinbase(z.get_mpz_t(), 2);
}

} // namespace geneig

#endif // GENEIG_RATIONAL_HPP
