#ifndef GENEIG_ECHELON_HPP
#define GENEIG_ECHELON_HPP

// Incremental reduced column echelon form, fraction-free.
//
// Columns are kept as primitive integer vectors with a positive pivot (the
// first nonzero row). Every column is zero at the pivot rows of all other
// columns, so reducing a vector is one pass over the columns in any order.
// Each column may carry a companion vector that receives exactly the same
// integer column operations; the pipeline uses this both to replay an
// elimination on a second matrix and to express columns in terms of the
// vectors that were inserted.

#include "matrix.hpp"
#include "rational.hpp"

#include <algorithm>
#include <cstddef>
#include <optional>
#include <stdexcept>
#include <utility>
#include <vector>

namespace geneig {

namespace detail {

using IntVec = std::vector<Int>;

// x <- a*x - b*y, entrywise; y may be shorter than x (missing entries are 0)
// or longer (x grows).
inline void axmby(IntVec& x, const Int& a, const Int& b, const IntVec& y)
{
    if (x.size() < y.size()) x.resize(y.size());
    const bool a_one = (a == 1);
    for (std::size_t i = 0; i < x.size(); ++i) {
        if (!a_one) x[i] *= a;
        if (i < y.size() && mpz_sgn(y[i].get_mpz_t()) != 0) mpz_submul(x[i].get_mpz_t(), b.get_mpz_t(), y[i].get_mpz_t());
    }
}

inline void accumulate_gcd(Int& g, const IntVec& v)
{
    for (const auto& x : v) {
        if (g == 1) return;
        if (x != 0) mpz_gcd(g.get_mpz_t(), g.get_mpz_t(), x.get_mpz_t());
    }
}

inline void divide_exact(IntVec& v, const Int& g)
{
    for (auto& x : v)
        if (x != 0) mpz_divexact(x.get_mpz_t(), x.get_mpz_t(), g.get_mpz_t());
}

inline std::optional<std::size_t> first_nonzero(const IntVec& v)
{
    for (std::size_t i = 0; i < v.size(); ++i)
        if (v[i] != 0) return i;
    return std::nullopt;
}

// Divide the pair (v, c) by the gcd of all their entries; returns the divisor.
inline Int remove_joint_content(IntVec& v, IntVec& c)
{
    Int g = 0;
    accumulate_gcd(g, v);
    accumulate_gcd(g, c);
    if (g > 1) {
        divide_exact(v, g);
        divide_exact(c, g);
        return g;
    }
    return Int(1);
}

} // namespace detail

/// Outcome of reducing one vector against an EchelonState, before any
/// insertion. With `scale` = s the identities are
///     residual  = s * x  - sum_k beta_k * column_k
///     companion = s * cx - sum_k beta_k * companion_k
/// where x, cx are the integer inputs.
struct Reduction {
    detail::IntVec residual;
    detail::IntVec companion;
    Int scale{1};
    bool is_zero() const { return !detail::first_nonzero(residual).has_value(); }
};

class EchelonState {
public:
    EchelonState() = default;
    explicit EchelonState(std::size_t rows) : rows_(rows) {}

    std::size_t rows() const { return rows_; }
    std::size_t size() const { return cols_.size(); }
    bool empty() const { return cols_.empty(); }

    /// Pivot rows in column order (strictly increasing).
    std::vector<std::size_t> pivot_rows() const
    {
        std::vector<std::size_t> p;
        p.reserve(cols_.size());
        for (const auto& c : cols_) p.push_back(c.pivot);
        return p;
    }

    /// Column j scaled so its pivot entry is 1.
    VecQ column(std::size_t j) const
    {
        const auto& c = cols_.at(j);
        return VecQ(c.v, c.v[c.pivot]);
    }

    const detail::IntVec& raw_column(std::size_t j) const { return cols_.at(j).v; }
    const detail::IntVec& raw_companion(std::size_t j) const { return cols_.at(j).c; }

    /// Reduce integer x (with companion cx) against all columns. Does not modify the state.
    Reduction reduce(detail::IntVec x, detail::IntVec cx = {}) const
    {
        if (x.size() != rows_) throw ShapeError("echelon reduce: dimension mismatch");
        // Columns vanish at each other's pivots, so the coefficient of column k
        // is x[p_k] / pivot_k for the original x. One common scale L clears
        // all of them: result = L x - sum (L x[p_k] / pivot_k) column_k.
        Reduction r;
        std::vector<std::size_t> hit;
        Int g;
        for (std::size_t k = 0; k < cols_.size(); ++k) {
            const Int& xp = x[cols_[k].pivot];
            if (xp == 0) continue;
            hit.push_back(k);
            const Int& piv = cols_[k].v[cols_[k].pivot];
            mpz_gcd(g.get_mpz_t(), piv.get_mpz_t(), xp.get_mpz_t());
            mpz_divexact(g.get_mpz_t(), piv.get_mpz_t(), g.get_mpz_t());
            mpz_lcm(r.scale.get_mpz_t(), r.scale.get_mpz_t(), g.get_mpz_t());
        }
        std::vector<Int> coef(hit.size());
        for (std::size_t h = 0; h < hit.size(); ++h) {
            const auto& col = cols_[hit[h]];
            coef[h] = r.scale * x[col.pivot];
            mpz_divexact(coef[h].get_mpz_t(), coef[h].get_mpz_t(), col.v[col.pivot].get_mpz_t());
        }
        if (r.scale != 1) {
            for (auto& e : x) e *= r.scale;
            for (auto& e : cx) e *= r.scale;
        }
        for (std::size_t h = 0; h < hit.size(); ++h) {
            const auto& col = cols_[hit[h]];
            detail::axmby(x, Int(1), coef[h], col.v);
            detail::axmby(cx, Int(1), coef[h], col.c);
        }
        r.residual = std::move(x);
        r.companion = std::move(cx);
        return r;
    }

    /// Append a nonzero reduction result as a new column (made primitive with
    /// positive pivot, jointly with its companion) and clear its pivot row in
    /// the existing columns.
    void append(Reduction red)
    {
        auto piv = detail::first_nonzero(red.residual);
        if (!piv) throw std::logic_error("echelon append: zero residual");
        Col nc{std::move(red.residual), std::move(red.companion), *piv};
        detail::remove_joint_content(nc.v, nc.c);
        if (nc.v[nc.pivot] < 0) {
            for (auto& x : nc.v) x = -x;
            for (auto& x : nc.c) x = -x;
        }
        for (auto& col : cols_) {
            const Int& e = col.v[nc.pivot];
            if (e == 0) continue;
            Int g = gcd(nc.v[nc.pivot], e);
            Int a = nc.v[nc.pivot] / g;
            Int b = e / g;
            detail::axmby(col.v, a, b, nc.v);
            detail::axmby(col.c, a, b, nc.c);
            detail::remove_joint_content(col.v, col.c);
        }
        const auto pos = std::lower_bound(cols_.begin(), cols_.end(), nc.pivot,
                                          [](const Col& c, std::size_t p) { return c.pivot < p; });
        cols_.insert(pos, std::move(nc));
    }

    /// Apply `fn(column, companion)` to every column pair. The caller must keep
    /// each column a scalar multiple of itself (pivots and reduced form are
    /// preserved); joint content is removed afterwards.
    template <class Fn>
    void transform(Fn&& fn)
    {
        for (auto& col : cols_) {
            fn(col.v, col.c);
            detail::remove_joint_content(col.v, col.c);
            if (col.v[col.pivot] <= 0) throw std::logic_error("echelon transform changed a pivot");
        }
    }

    bool contains(const VecQ& v) const { return reduce(v.num()).is_zero(); }

    /// State whose columns are `cols`. Throws std::invalid_argument unless
    /// they are primitive, have positive pivots in increasing order and
    /// vanish at each other's pivots.
    static EchelonState from_reduced_columns(std::size_t rows, std::vector<detail::IntVec> cols)
    {
        EchelonState st(rows);
        for (auto& c : cols) {
            auto piv = detail::first_nonzero(c);
            if (!piv || c.size() != rows || c[*piv] < 0 || (!st.cols_.empty() && *piv <= st.cols_.back().pivot))
                throw std::invalid_argument("from_reduced_columns: not in echelon form");
            Int g = 0;
            detail::accumulate_gcd(g, c);
            if (g != 1) throw std::invalid_argument("from_reduced_columns: column not primitive");
            st.cols_.push_back(Col{std::move(c), {}, *piv});
        }
        for (std::size_t i = 0; i < st.cols_.size(); ++i)
            for (std::size_t j = 0; j < st.cols_.size(); ++j)
                if (i != j && st.cols_[j].v[st.cols_[i].pivot] != 0)
                    throw std::invalid_argument("from_reduced_columns: not reduced");
        return st;
    }

private:
    struct Col {
        detail::IntVec v;
        detail::IntVec c;
        std::size_t pivot;
    };
    std::size_t rows_ = 0;
    std::vector<Col> cols_;
};

/// EchelonState that also records every column as a combination of the
/// vectors inserted so far ("generators"), so that membership answers come
/// with coefficients.
class TrackedEchelon {
public:
    struct InsertResult {
        VecQ residual;             // v - sum coeffs_j * generator_j
        std::vector<Rat> coeffs;   // one per generator present before the insert
        bool independent = false;  // residual != 0; v became a new generator
    };

    TrackedEchelon() = default;
    explicit TrackedEchelon(std::size_t rows) : state_(rows) {}

    const EchelonState& state() const { return state_; }
    std::size_t rows() const { return state_.rows(); }
    std::size_t size() const { return state_.size(); }
    const std::vector<VecQ>& generators() const { return gens_; }

    /// Reduce v without inserting it.
    InsertResult reduce(const VecQ& v) const
    {
        if (v.dim() != state_.rows()) throw ShapeError("echelon insert: dimension mismatch");
        Reduction red = state_.reduce(v.num());
        return finish(v, red);
    }

    InsertResult insert(const VecQ& v)
    {
        if (v.dim() != state_.rows()) throw ShapeError("echelon insert: dimension mismatch");
        Reduction red = state_.reduce(v.num());
        InsertResult out = finish(v, red);
        if (out.independent) {
            // residual_int = s*den*v + G*tau, so the new column's companion is tau + s*den*e_new.
            red.companion.resize(gens_.size() + 1);
            red.companion[gens_.size()] = red.scale * v.den();
            gens_.push_back(v);
            state_.append(std::move(red));
        }
        return out;
    }

private:
    InsertResult finish(const VecQ& v, const Reduction& red) const
    {
        // red.residual = s*num(v) - sum beta_k col_k, and each col_k = G t_k, so
        // red.residual = s*den*v + G*tau with tau = red.companion.
        InsertResult out;
        const Int denom = red.scale * v.den();
        out.coeffs.assign(gens_.size(), Rat(0));
        for (std::size_t j = 0; j < gens_.size() && j < red.companion.size(); ++j) {
            out.coeffs[j] = Rat(-red.companion[j], denom);
            out.coeffs[j].canonicalize();
        }
        out.residual = VecQ(red.residual, denom);
        out.independent = !red.is_zero();
        return out;
    }

    EchelonState state_;
    std::vector<VecQ> gens_;
};

/// Reduce v' against W (tracked by generators) and replay the same
/// combination on v against the matching columns of S: r' = v' - W c and
/// r = v - S c for one coefficient vector c.
inline std::pair<VecQ, VecQ> simultaneous_reduce(const TrackedEchelon& w_state, const MatQ& s_cols, const VecQ& vp,
                                                 const VecQ& v)
{
    if (s_cols.cols() != w_state.generators().size())
        throw ShapeError("simultaneous_reduce: W and S column counts differ");
    if (s_cols.rows() != v.dim()) throw ShapeError("simultaneous_reduce: S and v dimensions differ");
    auto red = w_state.reduce(vp);
    VecQ r = v;
    for (std::size_t j = 0; j < red.coeffs.size(); ++j)
        if (red.coeffs[j] != 0) r = r - red.coeffs[j] * s_cols.column(j);
    return {red.residual, r};
}

/// Integer numerators of a and b over one common denominator.
inline std::pair<detail::IntVec, detail::IntVec> common_numerators(const VecQ& a, const VecQ& b)
{
    const Int l = lcm(a.den(), b.den());
    const Int sa = l / a.den();
    const Int sb = l / b.den();
    detail::IntVec x = a.num(), y = b.num();
    if (sa != 1)
        for (auto& e : x) e *= sa;
    if (sb != 1)
        for (auto& e : y) e *= sb;
    return {std::move(x), std::move(y)};
}

namespace detail {

inline std::vector<VecQ> column_reduce_exact(const std::vector<VecQ>& vs)
{
    std::vector<VecQ> out;
    if (vs.empty()) return out;
    EchelonState st(vs.front().dim());
    for (const auto& v : vs) {
        Reduction red = st.reduce(v.num());
        if (!red.is_zero()) st.append(std::move(red));
    }
    for (std::size_t j = 0; j < st.size(); ++j) out.push_back(VecQ::from_ints(st.raw_column(j)));
    return out;
}

// Reduced echelon form modulo enough primes to reconstruct it, then checked
// exactly: every input must reduce to zero against the candidate, and the
// candidate size equals a modular rank of the inputs (a lower bound on the
// true rank). Together these prove the spans agree, and the reduced echelon
// form of a subspace is unique. nullopt when no certified answer was found.
inline std::optional<std::vector<VecQ>> column_reduce_modular(const std::vector<VecQ>& vs, std::size_t max_primes = 40)
{
    const std::size_t n = vs.front().dim();
    const std::size_t k = vs.size();
    std::vector<std::size_t> best_pivots;
    std::vector<Int> acc;  // CRT images of the rref rows, rank x n
    Int modulus = 1;
    modp::u64 p = (1ULL << 62) - 57;
    std::vector<std::vector<Rat>> last;
    for (std::size_t used = 0; used < max_primes; ++used) {
        p = modp::prev_prime(p - 1);
        modp::Mat m{k, n, std::vector<modp::u64>(k * n)};
        for (std::size_t i = 0; i < k; ++i)
            for (std::size_t j = 0; j < n; ++j) m.a[i * n + j] = modp::reduce(vs[i].num()[j], p);
        const auto piv = modp::rref(m, p);
        const bool better = piv.size() > best_pivots.size() ||
                            (piv.size() == best_pivots.size() && piv < best_pivots);
        if (modulus == 1 || better) {
            best_pivots = piv;
            acc.assign(m.a.size(), Int(0));
            for (std::size_t i = 0; i < m.a.size(); ++i) acc[i] = modp::to_int(m.a[i]);
            modulus = modp::to_int(p);
            last.clear();
            continue;
        }
        if (piv != best_pivots) continue;  // unlucky prime
        const modp::u64 minv = modp::inv(modp::reduce(modulus, p), p);
        for (std::size_t i = 0; i < acc.size(); ++i) {
            const modp::u64 t = modp::mul(modp::sub(m.a[i], modp::reduce(acc[i], p), p), minv, p);
            if (t) mpz_addmul_ui(acc[i].get_mpz_t(), modulus.get_mpz_t(), t);
        }
        modulus *= modp::to_int(p);

        const std::size_t r = best_pivots.size();
        std::vector<std::vector<Rat>> rows(r, std::vector<Rat>(n));
        bool ok = true;
        for (std::size_t i = 0; i < r && ok; ++i)
            for (std::size_t j = 0; j < n && ok; ++j) {
                auto q = modp::rational_reconstruct(acc[i * n + j], modulus);
                if (!q) ok = false;
                else rows[i][j] = *q;
            }
        if (!ok) continue;
        if (rows != last) {
            last = std::move(rows);
            continue;
        }
        std::vector<IntVec> cols;
        for (const auto& row : last) {
            VecQ c = VecQ::from_rats(row).primitive();
            cols.push_back(c.num());
        }
        EchelonState st;
        try {
            st = EchelonState::from_reduced_columns(n, cols);
        } catch (const std::invalid_argument&) {
            continue;
        }
        bool spans = true;
        for (const auto& v : vs)
            if (!st.reduce(v.num()).is_zero()) {
                spans = false;
                break;
            }
        if (!spans) continue;
        std::vector<VecQ> out;
        for (auto& c : cols) out.push_back(VecQ::from_ints(std::move(c)));
        return out;
    }
    return std::nullopt;
}

} // namespace detail

/// Reduced column echelon form of a list of vectors: primitive integer
/// columns with positive pivots, in pivot order. Zero residuals are dropped.
inline std::vector<VecQ> column_reduce(const std::vector<VecQ>& vs)
{
    if (vs.size() < 8) return detail::column_reduce_exact(vs);
    if (auto r = detail::column_reduce_modular(vs)) return *r;
    return detail::column_reduce_exact(vs);
}

} // namespace geneig

#endif // GENEIG_ECHELON_HPP
