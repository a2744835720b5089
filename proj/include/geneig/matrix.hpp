#ifndef GENEIG_MATRIX_HPP
#define GENEIG_MATRIX_HPP

// Dense exact-rational vectors and matrices. Both are stored as integer
// numerators over one common positive denominator, kept canonical
// (gcd of all numerators and the denominator is 1), so every entry read back
// through operator[] / at() is a lowest-terms rational. Products and
// polynomial evaluation then run on integers only.

#include "counters.hpp"
#include "modular.hpp"
#include "poly.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cmath>
#include <cstddef>
#include <fstream>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace geneig {

/// Dimension mismatch between operands.
class ShapeError : public std::invalid_argument {
public:
    using std::invalid_argument::invalid_argument;
};

namespace detail {

inline void canonicalize(std::vector<Int>& num, Int& den)
{
    if (den == 0) throw std::domain_error("zero denominator");
    if (den < 0) {
        den = -den;
        for (auto& x : num) x = -x;
    }
    if (den == 1) return;
    Int g = den;
    bool any = false;
    for (const auto& x : num) {
        if (x == 0) continue;
        any = true;
        mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
        if (g == 1) return;
    }
    if (!any) {
        den = 1;
        return;
    }
    for (auto& x : num) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
    mpz_divexact(den.get_mpz_t(), den.get_mpz_t(), g.get_mpz_t());
}

inline std::size_t max_bits(const std::vector<Int>& v)
{
    std::size_t b = 0;
    for (const auto& x : v) b = std::max(b, bit_length(x));
    return b;
}

} // namespace detail

class VecQ {
public:
    VecQ() = default;

    explicit VecQ(std::size_t n) : num_(n) {}

    VecQ(std::vector<Int> num, Int den) : num_(std::move(num)), den_(std::move(den))
    {
        detail::canonicalize(num_, den_);
    }

    static VecQ from_ints(std::vector<Int> num) { return VecQ(std::move(num), Int(1)); }

    static VecQ from_rats(const std::vector<Rat>& r)
    {
        Int den = 1;
        for (const auto& x : r) den = lcm(den, x.get_den());
        std::vector<Int> num(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) num[i] = r[i].get_num() * (den / r[i].get_den());
        return VecQ(std::move(num), den);
    }

    VecQ(std::initializer_list<long> vals)
    {
        num_.reserve(vals.size());
        for (long v : vals) num_.emplace_back(v);
    }

    static VecQ unit(std::size_t n, std::size_t i)
    {
        VecQ v(n);
        v.num_.at(i) = 1;
        return v;
    }

    std::size_t dim() const { return num_.size(); }

    Rat operator[](std::size_t i) const
    {
        Rat r(num_[i], den_);
        r.canonicalize();
        return r;
    }

    std::vector<Rat> to_rats() const
    {
        std::vector<Rat> out;
        out.reserve(num_.size());
        for (std::size_t i = 0; i < num_.size(); ++i) out.push_back((*this)[i]);
        return out;
    }

    const std::vector<Int>& num() const { return num_; }
    const Int& den() const { return den_; }

    bool is_zero() const
    {
        return std::all_of(num_.begin(), num_.end(), [](const Int& x) { return x == 0; });
    }

    /// Primitive integer vector on the same line: denominators cleared,
    /// content divided out, first nonzero entry positive. Zero stays zero.
    VecQ primitive() const
    {
        VecQ r;
        r.num_ = num_;
        Int c = 0;
        for (const auto& x : r.num_) c = gcd(c, x);
        if (c == 0) return r;
        const auto first = std::find_if(r.num_.begin(), r.num_.end(), [](const Int& x) { return x != 0; });
        if (*first < 0) c = -c;
        for (auto& x : r.num_) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), c.get_mpz_t());
        return r;
    }

    std::size_t max_bits() const { return std::max(detail::max_bits(num_), bit_length(den_)); }

    friend VecQ operator+(const VecQ& a, const VecQ& b) { return combine(a, b, false); }
    friend VecQ operator-(const VecQ& a, const VecQ& b) { return combine(a, b, true); }

    friend VecQ operator*(const Rat& s, const VecQ& v)
    {
        std::vector<Int> num(v.num_.size());
        for (std::size_t i = 0; i < num.size(); ++i) num[i] = v.num_[i] * s.get_num();
        return VecQ(std::move(num), v.den_ * s.get_den());
    }

    friend VecQ operator-(const VecQ& v) { return Rat(-1) * v; }

    friend bool operator==(const VecQ& a, const VecQ& b) { return a.den_ == b.den_ && a.num_ == b.num_; }
    friend bool operator!=(const VecQ& a, const VecQ& b) { return !(a == b); }

private:
    static VecQ combine(const VecQ& a, const VecQ& b, bool subtract)
    {
        if (a.dim() != b.dim()) throw ShapeError("vector dimension mismatch");
        const Int l = lcm(a.den_, b.den_);
        const Int sa = l / a.den_;
        const Int sb = l / b.den_;
        std::vector<Int> num(a.dim());
        for (std::size_t i = 0; i < num.size(); ++i) {
            num[i] = a.num_[i] * sa;
            if (subtract)
                mpz_submul(num[i].get_mpz_t(), b.num_[i].get_mpz_t(), sb.get_mpz_t());
            else
                mpz_addmul(num[i].get_mpz_t(), b.num_[i].get_mpz_t(), sb.get_mpz_t());
        }
        return VecQ(std::move(num), l);
    }

    std::vector<Int> num_;
    Int den_{1};
};

class MatQ {
public:
    MatQ() = default;

    MatQ(std::size_t rows, std::size_t cols) : rows_(rows), cols_(cols), num_(rows * cols) {}

    MatQ(std::size_t rows, std::size_t cols, std::vector<Int> num, Int den)
        : rows_(rows), cols_(cols), num_(std::move(num)), den_(std::move(den))
    {
        if (num_.size() != rows_ * cols_) throw ShapeError("matrix entry count mismatch");
        detail::canonicalize(num_, den_);
    }

    static MatQ from_rats(std::size_t rows, std::size_t cols, const std::vector<Rat>& r)
    {
        if (r.size() != rows * cols) throw ShapeError("matrix entry count mismatch");
        Int den = 1;
        for (const auto& x : r) den = lcm(den, x.get_den());
        std::vector<Int> num(r.size());
        for (std::size_t i = 0; i < r.size(); ++i) num[i] = r[i].get_num() * (den / r[i].get_den());
        return MatQ(rows, cols, std::move(num), den);
    }

    MatQ(std::initializer_list<std::initializer_list<long>> rows)
    {
        rows_ = rows.size();
        cols_ = rows_ ? rows.begin()->size() : 0;
        for (const auto& r : rows) {
            if (r.size() != cols_) throw ShapeError("ragged matrix literal");
            for (long v : r) num_.emplace_back(v);
        }
    }

    static MatQ identity(std::size_t n)
    {
        MatQ m(n, n);
        for (std::size_t i = 0; i < n; ++i) m.num_[i * n + i] = 1;
        return m;
    }

    static MatQ from_columns(const std::vector<VecQ>& cols, std::size_t rows)
    {
        Int den = 1;
        for (const auto& c : cols) {
            if (c.dim() != rows) throw ShapeError("column dimension mismatch");
            den = lcm(den, c.den());
        }
        std::vector<Int> num(rows * cols.size());
        for (std::size_t j = 0; j < cols.size(); ++j) {
            const Int s = den / cols[j].den();
            for (std::size_t i = 0; i < rows; ++i) num[i * cols.size() + j] = cols[j].num()[i] * s;
        }
        return MatQ(rows, cols.size(), std::move(num), den);
    }

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    bool is_square() const { return rows_ == cols_; }

    Rat at(std::size_t i, std::size_t j) const
    {
        Rat r(num_[i * cols_ + j], den_);
        r.canonicalize();
        return r;
    }

    const std::vector<Int>& num() const { return num_; }
    const Int& den() const { return den_; }
    const Int& num_at(std::size_t i, std::size_t j) const { return num_[i * cols_ + j]; }

    VecQ column(std::size_t j) const
    {
        std::vector<Int> c(rows_);
        for (std::size_t i = 0; i < rows_; ++i) c[i] = num_[i * cols_ + j];
        return VecQ(std::move(c), den_);
    }

    bool is_zero() const
    {
        return std::all_of(num_.begin(), num_.end(), [](const Int& x) { return x == 0; });
    }

    bool is_integral() const { return den_ == 1; }

    std::size_t max_bits() const { return std::max(detail::max_bits(num_), bit_length(den_)); }

    friend bool operator==(const MatQ& a, const MatQ& b)
    {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.den_ == b.den_ && a.num_ == b.num_;
    }
    friend bool operator!=(const MatQ& a, const MatQ& b) { return !(a == b); }

    friend MatQ operator+(const MatQ& a, const MatQ& b) { return combine(a, Rat(1), b); }
    friend MatQ operator-(const MatQ& a, const MatQ& b) { return combine(a, Rat(-1), b); }

    friend MatQ operator*(const Rat& s, const MatQ& m)
    {
        std::vector<Int> num(m.num_.size());
        for (std::size_t i = 0; i < num.size(); ++i) num[i] = m.num_[i] * s.get_num();
        return MatQ(m.rows_, m.cols_, std::move(num), m.den_ * s.get_den());
    }

    /// a + s*b
    static MatQ combine(const MatQ& a, const Rat& s, const MatQ& b)
    {
        if (a.rows_ != b.rows_ || a.cols_ != b.cols_) throw ShapeError("matrix shape mismatch");
        const Int bden = b.den_ * s.get_den();
        const Int l = lcm(a.den_, bden);
        const Int sa = l / a.den_;
        const Int sb = (l / bden) * s.get_num();
        std::vector<Int> num(a.num_.size());
        for (std::size_t i = 0; i < num.size(); ++i) {
            num[i] = a.num_[i] * sa;
            mpz_addmul(num[i].get_mpz_t(), b.num_[i].get_mpz_t(), sb.get_mpz_t());
        }
        return MatQ(a.rows_, a.cols_, std::move(num), l);
    }

private:
    std::size_t rows_ = 0;
    std::size_t cols_ = 0;
    std::vector<Int> num_;
    Int den_{1};
};

// ---------------------------------------------------------------------------
// Products and matrix polynomials.

inline VecQ mat_vec(const MatQ& a, const VecQ& v)
{
    if (a.cols() != v.dim()) throw ShapeError("mat_vec: dimension mismatch");
    counters().mat_vec.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = a.rows();
    const std::size_t m = a.cols();
    std::vector<Int> out(n);
    const auto& an = a.num();
    const auto& vn = v.num();
    for (std::size_t i = 0; i < n; ++i) {
        mpz_ptr acc = out[i].get_mpz_t();
        const Int* row = &an[i * m];
        for (std::size_t j = 0; j < m; ++j) {
            if (mpz_sgn(vn[j].get_mpz_t()) == 0 || mpz_sgn(row[j].get_mpz_t()) == 0) continue;
            mpz_addmul(acc, row[j].get_mpz_t(), vn[j].get_mpz_t());
        }
    }
    VecQ r(std::move(out), a.den() * v.den());
    counters().note_bits(r.max_bits());
    return r;
}

inline MatQ mat_mul(const MatQ& a, const MatQ& b)
{
    if (a.cols() != b.rows()) throw ShapeError("mat_mul: dimension mismatch");
    counters().mat_mat.fetch_add(1, std::memory_order_relaxed);
    const std::size_t n = a.rows(), k = a.cols(), m = b.cols();
    std::vector<Int> out(n * m);
    const auto& an = a.num();
    const auto& bn = b.num();
    for (std::size_t i = 0; i < n; ++i) {
        for (std::size_t t = 0; t < k; ++t) {
            mpz_srcptr x = an[i * k + t].get_mpz_t();
            if (mpz_sgn(x) == 0) continue;
            for (std::size_t j = 0; j < m; ++j) {
                mpz_srcptr y = bn[t * m + j].get_mpz_t();
                if (mpz_sgn(y) == 0) continue;
                mpz_addmul(out[i * m + j].get_mpz_t(), x, y);
            }
        }
    }
    MatQ r(n, m, std::move(out), a.den() * b.den());
    counters().note_bits(r.max_bits());
    return r;
}

/// g(A)v by Horner's rule: deg g matrix-vector products.
inline VecQ mat_poly_apply_vec(const PolyQ& g, const MatQ& a, const VecQ& v)
{
    if (!a.is_square() || a.cols() != v.dim()) throw ShapeError("mat_poly_apply_vec: dimension mismatch");
    if (g.is_zero()) return VecQ(v.dim());
    const auto& c = g.coeffs();
    VecQ acc = c.back() * v;
    for (std::size_t i = c.size() - 1; i-- > 0;) {
        acc = mat_vec(a, acc);
        if (c[i] != 0) acc = acc + c[i] * v;
    }
    return acc;
}

/// g(A) with the Paterson-Stockmeyer scheme: with s ~ sqrt(deg g), the powers
/// A^2..A^s are formed once and g is evaluated as a polynomial in A^s whose
/// coefficients are linear combinations of those powers. About 2*sqrt(deg g)
/// matrix products instead of deg g.
inline MatQ mat_poly_eval(const PolyQ& g, const MatQ& a)
{
    if (!a.is_square()) throw ShapeError("mat_poly_eval: matrix not square");
    const std::size_t n = a.rows();
    if (g.is_zero()) return MatQ(n, n);
    const auto& c = g.coeffs();
    const std::size_t deg = c.size() - 1;
    if (deg == 0) return c[0] * MatQ::identity(n);
    const std::size_t s = std::max<std::size_t>(1, static_cast<std::size_t>(std::ceil(std::sqrt(double(deg + 1)))));
    std::vector<MatQ> pw;
    pw.reserve(s + 1);
    pw.push_back(MatQ::identity(n));
    pw.push_back(a);
    for (std::size_t i = 2; i <= s; ++i) pw.push_back(mat_mul(pw[i - 1], a));
    const std::size_t blocks = deg / s + 1;
    auto block = [&](std::size_t j) {
        MatQ acc(n, n);
        for (std::size_t i = 0; i < s; ++i) {
            const std::size_t k = j * s + i;
            if (k > deg || c[k] == 0) continue;
            acc = MatQ::combine(acc, c[k], pw[i]);
        }
        return acc;
    };
    MatQ result = block(blocks - 1);
    for (std::size_t j = blocks - 1; j-- > 0;) {
        result = mat_mul(result, pw[s]);
        result = result + block(j);
    }
    return result;
}

// ---------------------------------------------------------------------------
// Characteristic polynomial.

namespace detail {

inline Int common_denominator(const MatQ& a)
{
    return a.den();
}

// Bound (in bits) on |coeffs| of charpoly of the integer matrix `num`:
// the coefficient of x^(n-k) is a sum of C(n,k) principal k-minors, each at
// most the product of the k largest column 2-norms (Hadamard).
inline double charpoly_coeff_bits(const std::vector<Int>& num, std::size_t n)
{
    std::vector<double> lognorm(n, 0.0);
    for (std::size_t j = 0; j < n; ++j) {
        double s = 0;
        for (std::size_t i = 0; i < n; ++i) {
            const std::size_t b = bit_length(num[i * n + j]);
            if (b == 0) continue;
            // log2(x^2) <= 2*b
            const double lx = 2.0 * static_cast<double>(b);
            s = (s == 0) ? lx : std::max(s, lx) + std::log2(1.0 + std::exp2(std::min(s, lx) - std::max(s, lx)));
        }
        lognorm[j] = s / 2.0;  // log2 of column 2-norm (upper bound)
    }
    std::sort(lognorm.begin(), lognorm.end(), std::greater<>());
    double best = 0, prefix = 0, logbinom = 0;
    for (std::size_t k = 1; k <= n; ++k) {
        prefix += std::max(0.0, lognorm[k - 1]);
        logbinom += std::log2(double(n - k + 1)) - std::log2(double(k));
        best = std::max(best, prefix + logbinom);
    }
    return best;
}

} // namespace detail

/// Monic characteristic polynomial det(xI - A), exact. The denominators of A
/// are cleared (A = B/D), charpoly(B) is computed modulo enough 62-bit primes
/// to exceed a Hadamard-type coefficient bound, recovered by Chinese
/// remaindering, and rescaled: coefficient k of charpoly(A) is
/// coefficient k of charpoly(B) divided by D^(n-k).
inline PolyQ char_poly(const MatQ& a)
{
    if (!a.is_square()) throw ShapeError("char_poly: matrix not square");
    const std::size_t n = a.rows();
    if (n == 0) return PolyQ::constant(1);
    const auto& num = a.num();
    const double need_bits = detail::charpoly_coeff_bits(num, n) + 2.0;

    std::vector<Int> acc(n + 1);
    Int modulus = 1;
    modp::u64 p = (1ULL << 62);
    while (static_cast<double>(bit_length(modulus)) <= need_bits + 1.0) {
        p = modp::prev_prime(p);
        modp::Mat m{n, n, std::vector<modp::u64>(n * n)};
        for (std::size_t i = 0; i < n * n; ++i) m.a[i] = modp::reduce(num[i], p);
        const modp::Poly cp = modp::charpoly(std::move(m), p);
        // Garner step: acc <- acc + modulus * ((cp - acc) * modulus^-1 mod p)
        const modp::u64 minv = modp::inv(modp::reduce(modulus, p), p);
        for (std::size_t k = 0; k <= n; ++k) {
            const modp::u64 ak = modp::reduce(acc[k], p);
            const modp::u64 t = modp::mul(modp::sub(cp[k], ak, p), minv, p);
            if (t) mpz_addmul_ui(acc[k].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        modulus *= modp::to_int(p);
    }
    const Int half = modulus / 2;
    std::vector<Rat> coeffs(n + 1);
    Int dpow = 1;  // D^(n-k), built from k = n downwards
    for (std::size_t k = n + 1; k-- > 0;) {
        if (acc[k] > half) acc[k] -= modulus;
        coeffs[k] = Rat(acc[k], dpow);
        coeffs[k].canonicalize();
        dpow *= a.den();
    }
    return PolyQ(std::move(coeffs));
}

/// Berkowitz's division-free characteristic polynomial, run on the integer
/// numerators and rescaled. O(n^4); kept as an independent route to cross-check
/// char_poly.
inline PolyQ char_poly_berkowitz(const MatQ& a)
{
    if (!a.is_square()) throw ShapeError("char_poly_berkowitz: matrix not square");
    const std::size_t n = a.rows();
    auto M = [&](std::size_t i, std::size_t j) -> const Int& { return a.num_at(i, j); };
    // vect holds the coefficients of the charpoly of the leading block,
    // highest degree first.
    std::vector<Int> vect{Int(1)};
    if (n > 0) vect = {Int(1), -M(0, 0)};
    for (std::size_t r = 1; r < n; ++r) {
        // Column R = A[0..r-1][r], row S = A[r][0..r-1], block C = A[0..r-1][0..r-1]
        std::vector<Int> col(r);
        for (std::size_t i = 0; i < r; ++i) col[i] = M(i, r);
        std::vector<Int> q(r + 2);
        q[0] = 1;
        q[1] = -M(r, r);
        // q[k+2] = -S * C^k * R
        std::vector<Int> cur = col;
        for (std::size_t k = 0; k < r; ++k) {
            Int dot = 0;
            for (std::size_t j = 0; j < r; ++j) mpz_addmul(dot.get_mpz_t(), M(r, j).get_mpz_t(), cur[j].get_mpz_t());
            q[k + 2] = -dot;
            if (k + 1 < r) {
                std::vector<Int> next(r);
                for (std::size_t i = 0; i < r; ++i)
                    for (std::size_t j = 0; j < r; ++j)
                        mpz_addmul(next[i].get_mpz_t(), M(i, j).get_mpz_t(), cur[j].get_mpz_t());
                cur = std::move(next);
            }
        }
        // new = T * vect, T lower-triangular Toeplitz with first column q.
        std::vector<Int> next(r + 2);
        for (std::size_t i = 0; i < r + 2; ++i)
            for (std::size_t j = 0; j <= i && j < vect.size(); ++j)
                mpz_addmul(next[i].get_mpz_t(), q[i - j].get_mpz_t(), vect[j].get_mpz_t());
        vect = std::move(next);
    }
    // Rescale by the denominator.
    std::vector<Rat> coeffs(n + 1);
    Int dpow = 1;
    for (std::size_t k = n + 1; k-- > 0;) {
        coeffs[k] = Rat(vect[n - k], dpow);
        coeffs[k].canonicalize();
        dpow *= a.den();
    }
    return PolyQ(std::move(coeffs));
}

// ---------------------------------------------------------------------------
// Rank.

/// Exact rank by fraction-free (Bareiss) elimination.
inline std::size_t rank_exact(const MatQ& a)
{
    std::vector<Int> m = a.num();
    const std::size_t rows = a.rows(), cols = a.cols();
    auto at = [&](std::size_t i, std::size_t j) -> Int& { return m[i * cols + j]; };
    Int prev = 1;
    std::size_t r = 0;
    for (std::size_t c = 0; c < cols && r < rows; ++c) {
        std::size_t piv = r;
        while (piv < rows && at(piv, c) == 0) ++piv;
        if (piv == rows) continue;
        if (piv != r)
            for (std::size_t j = 0; j < cols; ++j) std::swap(at(piv, j), at(r, j));
        for (std::size_t i = r + 1; i < rows; ++i) {
            for (std::size_t j = c + 1; j < cols; ++j) {
                Int t = at(r, c) * at(i, j);
                mpz_submul(t.get_mpz_t(), at(i, c).get_mpz_t(), at(r, j).get_mpz_t());
                mpz_divexact(at(i, j).get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
            }
            at(i, c) = 0;
        }
        prev = at(r, c);
        ++r;
    }
    return r;
}

/// Rank modulo p of the numerator matrix (a lower bound on the rational rank).
inline std::size_t rank_mod_p(const MatQ& a, modp::u64 p)
{
    modp::Mat m{a.rows(), a.cols(), std::vector<modp::u64>(a.rows() * a.cols())};
    for (std::size_t i = 0; i < m.a.size(); ++i) m.a[i] = modp::reduce(a.num()[i], p);
    return modp::rank(std::move(m), p);
}

/// Exact rank, using a modular rank as a certificate when it is already
/// maximal and falling back to Bareiss otherwise.
inline std::size_t rank(const MatQ& a)
{
    const std::size_t full = std::min(a.rows(), a.cols());
    const modp::u64 p = 4611686018427387847ULL;  // prime just below 2^62
    if (rank_mod_p(a, p) == full) return full;
    return rank_exact(a);
}

// ---------------------------------------------------------------------------
// Text format: first line "n" or "n m", then n lines of m entries.

inline MatQ parse_matrix(std::istream& in)
{
    std::string line;
    auto next_line = [&](std::string& out) {
        while (std::getline(in, line)) {
            const std::string t = trim(line);
            if (!t.empty() && t[0] != '#') {
                out = t;
                return true;
            }
        }
        return false;
    };
    std::string header;
    if (!next_line(header)) throw ParseError("matrix file is empty");
    std::istringstream hs(header);
    std::string tok;
    std::vector<std::string> dims;
    while (hs >> tok) dims.push_back(tok);
    if (dims.empty() || dims.size() > 2) throw ParseError("matrix header must be 'n' or 'n m'");
    const Int rn = detail::parse_int(dims[0]);
    const Int cn = dims.size() == 2 ? detail::parse_int(dims[1]) : rn;
    if (rn < 0 || cn < 0) throw ParseError("negative matrix dimension");
    const std::size_t rows = rn.get_ui(), cols = cn.get_ui();
    std::vector<Rat> entries;
    entries.reserve(rows * cols);
    for (std::size_t i = 0; i < rows; ++i) {
        std::string row;
        if (!next_line(row)) throw ParseError("matrix file ends after " + std::to_string(i) + " rows");
        std::istringstream rs(row);
        std::size_t count = 0;
        while (rs >> tok) {
            entries.push_back(parse_rat(tok));
            ++count;
        }
        if (count != cols)
            throw ParseError("row " + std::to_string(i + 1) + " has " + std::to_string(count) + " entries, expected " +
                             std::to_string(cols));
    }
    std::string extra;
    if (next_line(extra)) throw ParseError("trailing data after matrix rows");
    return MatQ::from_rats(rows, cols, entries);
}

inline MatQ parse_matrix(const std::string& text)
{
    std::istringstream in(text);
    return parse_matrix(in);
}

inline MatQ read_matrix_file(const std::string& path)
{
    std::ifstream in(path);
    if (!in) throw ParseError("cannot open matrix file: " + path);
    return parse_matrix(in);
}

inline std::string format_matrix(const MatQ& a)
{
    std::ostringstream os;
    os << a.rows();
    if (!a.is_square()) os << ' ' << a.cols();
    os << '\n';
    for (std::size_t i = 0; i < a.rows(); ++i) {
        for (std::size_t j = 0; j < a.cols(); ++j) {
            if (j) os << ' ';
            os << to_string(a.at(i, j));
        }
        os << '\n';
    }
    return os.str();
}

/// Companion matrix of a monic polynomial: ones on the subdiagonal and
/// minus the low coefficients in the last column.
inline MatQ companion(const PolyQ& f)
{
    if (!f.is_monic() || f.degree() < 1) throw std::domain_error("companion matrix needs a monic nonconstant polynomial");
    const std::size_t d = static_cast<std::size_t>(f.degree());
    std::vector<Rat> e(d * d);
    for (std::size_t i = 1; i < d; ++i) e[i * d + (i - 1)] = 1;
    for (std::size_t i = 0; i < d; ++i) e[i * d + (d - 1)] = -f.coeffs()[i];
    return MatQ::from_rats(d, d, e);
}

} // namespace geneig

#endif // GENEIG_MATRIX_HPP
