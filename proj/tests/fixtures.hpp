#ifndef GENEIG_TEST_FIXTURES_HPP
#define GENEIG_TEST_FIXTURES_HPP

#include "oracles.hpp"

#include <geneig.hpp>

#include <ostream>
#include <string>
#include <vector>

namespace fixtures {

using geneig::MatQ;
using geneig::PolyQ;
using geneig::Rat;
using geneig::VecQ;

inline std::string data_path(const std::string& name) { return std::string(GENEIG_TEST_DATA) + "/" + name; }

inline MatQ golden10() { return geneig::read_matrix_file(data_path("golden10.txt")); }
inline MatQ companion6() { return geneig::read_matrix_file(data_path("companion6.txt")); }

inline const PolyQ f1{5, 1, 1};  // x^2 + x + 5
inline const PolyQ f2{4, 1, 1};  // x^2 + x + 4

inline oracle::Mat to_oracle(const MatQ& a)
{
    oracle::Mat m = oracle::zeros(a.rows(), a.cols());
    for (std::size_t i = 0; i < a.rows(); ++i)
        for (std::size_t j = 0; j < a.cols(); ++j) m[i][j] = a.at(i, j);
    return m;
}

inline MatQ from_oracle(const oracle::Mat& m)
{
    std::vector<Rat> flat;
    for (const auto& row : m) flat.insert(flat.end(), row.begin(), row.end());
    return MatQ::from_rats(m.size(), m.empty() ? 0 : m.front().size(), flat);
}

inline oracle::Vec unit(std::size_t n, std::size_t i)
{
    oracle::Vec v(n, Rat(0));
    v[i] = 1;
    return v;
}

inline std::vector<Rat> rats(std::initializer_list<long> v) { return oracle::ints(v); }

/// Chain-length multiset per factor of a block spec, longest first.
inline std::vector<unsigned> sorted_desc(std::vector<unsigned> v)
{
    std::sort(v.rbegin(), v.rend());
    return v;
}

} // namespace fixtures

#endif // GENEIG_TEST_FIXTURES_HPP

// Readable gtest failure output.
namespace geneig {

inline void PrintTo(const PolyQ& p, std::ostream* os) { *os << format_poly(p); }

inline void PrintTo(const VecQ& v, std::ostream* os)
{
    *os << "(";
    for (std::size_t i = 0; i < v.dim(); ++i) *os << (i ? ", " : "") << to_string(v[i]);
    *os << ")";
}

} // namespace geneig
