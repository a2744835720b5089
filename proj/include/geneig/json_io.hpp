#ifndef GENEIG_JSON_IO_HPP
#define GENEIG_JSON_IO_HPP

// JSON form of chains and reports. Rationals are strings ("p/q", or "p"
// when integral) so no value ever passes through a float.

#include "chains.hpp"
#include "pipeline.hpp"
#include "rational.hpp"

#include <json.hpp>

#include <string>
#include <vector>

namespace geneig {

using json = nlohmann::json;

inline json rat_array(const std::vector<Rat>& v)
{
    json a = json::array();
    for (const auto& x : v) a.push_back(to_string(x));
    return a;
}

inline json to_json(const PolyVec& p)
{
    json rows = json::array();
    for (const auto& c : p.coeffs) rows.push_back(rat_array(c.to_rats()));
    return json{{"lambda_coeffs", rows}};
}

inline json to_json(const JordanChain& c)
{
    json vs = json::array();
    for (const auto& p : c.vectors) vs.push_back(to_json(p));
    return json{{"length", c.length}, {"vectors", vs}};
}

/// {factor, multiplicity, lbar, chains}, plus basis counts and the outcome
/// of verification and certification when they ran.
inline json to_json(const FactorResult& r)
{
    json chains = json::array();
    for (const auto& c : r.chains) chains.push_back(to_json(c));
    json j{{"factor", rat_array(r.f.coeffs())},
           {"multiplicity", r.m},
           {"lbar", r.lbar},
           {"chains", chains}};
    json counts = json::array();
    for (std::size_t l = 1; l < r.counts.size(); ++l) counts.push_back(r.counts[l]);
    j["basis_counts"] = counts;
    if (!r.verification.empty()) j["verified"] = r.verified();
    if (r.independent) j["independent"] = *r.independent;
    return j;
}

inline json to_json(const EigenstructureReport& rep)
{
    json fs = json::array();
    for (const auto& f : rep.factors) fs.push_back(to_json(f));
    json chi = json::array();
    for (const auto& t : rep.chi.factors) chi.push_back(json{{"factor", rat_array(t.factor.coeffs())}, {"multiplicity", t.multiplicity}});
    return json{{"n", rep.n},
                {"charpoly", rat_array(rep.charpoly.coeffs())},
                {"unit", to_string(rep.chi.unit)},
                {"chi", chi},
                {"factors", fs},
                {"counters", {{"mat_vec", rep.mat_vec}, {"mat_mat", rep.mat_mat}, {"max_bits", rep.max_bits}}}};
}

inline PolyVec polyvec_from_json(const json& j)
{
    PolyVec p;
    for (const auto& row : j.at("lambda_coeffs")) {
        std::vector<Rat> v;
        for (const auto& s : row) v.push_back(parse_rat(s.get<std::string>()));
        p.coeffs.push_back(VecQ::from_rats(v));
    }
    return p;
}

inline JordanChain chain_from_json(const json& j)
{
    JordanChain c;
    c.length = j.at("length").get<unsigned>();
    for (const auto& v : j.at("vectors")) c.vectors.push_back(polyvec_from_json(v));
    return c;
}

inline PolyQ poly_from_json(const json& j)
{
    std::vector<Rat> c;
    for (const auto& s : j) c.push_back(parse_rat(s.get<std::string>()));
    return PolyQ(std::move(c));
}

} // namespace geneig

#endif // GENEIG_JSON_IO_HPP
