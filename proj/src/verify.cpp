#include "ipset/verify.hpp"

#include "ipset/canonical.hpp"
#include "ipset/embedding_detail.hpp"
#include "ipset/errors.hpp"
#include "ipset/geometry.hpp"

namespace ipset {

namespace {

std::string triple_name(std::size_t i, std::size_t j, std::size_t l)
{
    return "{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," + std::to_string(l + 1) + "}";
}

CheckResult skipped(const std::string& why)
{
    return {false, "not evaluated: " + why};
}

// First non-degenerate triple in index order, if any.
std::optional<std::array<std::size_t, 3>> first_proper_triangle(const DistanceMatrix& m)
{
    const std::size_t n = m.size();
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l)
                if (!is_collinear_triple(m(i, j), m(i, l), m(j, l)))
                    return std::array<std::size_t, 3>{i, j, l};
    return std::nullopt;
}

} // namespace

bool VerificationReport::passed() const
{
    for (const auto& [name, check] : checks())
        if (!check->passed)
            return false;
    return true;
}

std::vector<std::pair<std::string_view, const CheckResult*>> VerificationReport::checks() const
{
    return {
        {"well_formed", &well_formed},
        {"triangle_inequality", &triangle_inequality},
        {"realizable", &realizable},
        {"no_three_collinear", &no_three_collinear},
        {"no_four_concyclic", &no_four_concyclic},
        {"uniform_characteristic", &uniform_characteristic},
        {"canonical", &canonical},
        {"diameter", &diameter},
    };
}

VerificationReport verify(const DistanceMatrix& m)
{
    VerificationReport r;
    const std::size_t n = m.size();

    if (auto why = m.invariant_violation()) {
        r.well_formed = {false, *why};
        const auto s = skipped("matrix is malformed");
        r.triangle_inequality = r.realizable = r.no_three_collinear = r.no_four_concyclic = s;
        r.uniform_characteristic = r.canonical = r.diameter = s;
        return r;
    }
    r.well_formed = {true, std::to_string(n) + " points"};
    r.diameter_value = m.diameter();

    std::size_t triples = 0;
    std::vector<std::string> violated;
    std::vector<std::string> tight;
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = j + 1; l < n; ++l) {
                ++triples;
                try {
                    if (is_collinear_triple(m(i, j), m(i, l), m(j, l)))
                        tight.push_back(triple_name(i, j, l));
                } catch (const GeometryError&) {
                    violated.push_back(triple_name(i, j, l));
                }
            }
    auto list = [](const std::vector<std::string>& v) {
        std::string s;
        for (std::size_t i = 0; i < v.size() && i < 5; ++i)
            s += (i ? " " : "") + v[i];
        if (v.size() > 5)
            s += " ...";
        return s;
    };
    if (!violated.empty())
        r.triangle_inequality = {false, std::to_string(violated.size()) + " triples violate it: " + list(violated)};
    else if (!tight.empty())
        r.triangle_inequality = {false, std::to_string(tight.size()) + " triples are tight: " + list(tight)};
    else
        r.triangle_inequality = {true, std::to_string(triples) + " triples strict"};

    if (!violated.empty())
        r.no_three_collinear = skipped("triangle inequality violated");
    else if (!tight.empty())
        r.no_three_collinear = {false, std::to_string(tight.size()) + " collinear triples: " + list(tight)};
    else
        r.no_three_collinear = {true, std::to_string(triples) + " triples non-collinear"};

    // Realizability.
    if (!violated.empty()) {
        r.realizable = skipped("triangle inequality violated");
    } else {
        try {
            if (n < 3) {
                r.embedding = detail::place_on_line(m);
            } else if (auto base = first_proper_triangle(m)) {
                r.embedding = detail::place_on_base(m, (*base)[0], (*base)[1], (*base)[2], true);
            } else {
                r.embedding = detail::place_on_line(m);
            }
            r.realizable = {true, "exact embedding over sqrt(" + r.embedding->k.get_str() + ")"};
        } catch (const GeometryError& e) {
            r.realizable = {false, e.what()};
        }
    }

    if (!r.embedding) {
        r.no_four_concyclic = skipped("no planar embedding");
    } else {
        std::size_t quads = 0;
        std::vector<std::string> hits;
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = i + 1; j < n; ++j)
                for (std::size_t l = j + 1; l < n; ++l)
                    for (std::size_t q = l + 1; q < n; ++q) {
                        ++quads;
                        if (is_concyclic_or_collinear(*r.embedding, i, j, l, q))
                            hits.push_back("{" + std::to_string(i + 1) + "," + std::to_string(j + 1) + "," +
                                           std::to_string(l + 1) + "," + std::to_string(q + 1) + "}");
                    }
        if (hits.empty())
            r.no_four_concyclic = {true, std::to_string(quads) + " quadruples non-concyclic"};
        else
            r.no_four_concyclic = {false, std::to_string(hits.size()) + " quadruples on a circle or line: " + list(hits)};
    }

    // Characteristic over the non-degenerate triangles.
    if (!violated.empty()) {
        r.uniform_characteristic = skipped("triangle inequality violated");
    } else if (n < 3) {
        r.uniform_characteristic = {true, "no triangles"};
    } else {
        std::optional<Integer> first;
        std::string first_name;
        std::string mismatch;
        for (std::size_t i = 0; i < n && mismatch.empty(); ++i)
            for (std::size_t j = i + 1; j < n && mismatch.empty(); ++j)
                for (std::size_t l = j + 1; l < n && mismatch.empty(); ++l) {
                    if (is_collinear_triple(m(i, j), m(i, l), m(j, l)))
                        continue;
                    const Integer k = triangle_characteristic(m(i, j), m(i, l), m(j, l));
                    if (!first) {
                        first = k;
                        first_name = triple_name(i, j, l);
                    } else if (k != *first) {
                        mismatch = "triangle " + first_name + " has " + first->get_str() + ", triangle " +
                                   triple_name(i, j, l) + " has " + k.get_str();
                    }
                }
        if (!first) {
            r.uniform_characteristic = {false, "every triangle is degenerate"};
        } else if (!mismatch.empty()) {
            r.uniform_characteristic = {false, mismatch};
        } else {
            r.characteristic = first;
            r.cluster_candidate = *first == 1;
            r.uniform_characteristic = {true, "characteristic " + first->get_str()};
        }
    }

    const bool canon = is_canonical(m);
    r.canonical = {canon, canon ? "labeling is canonical" : "a relabeling has a larger vector"};

    if (n < 2)
        r.diameter = {true, "diameter 0"};
    else if (m(0, 1) == r.diameter_value)
        r.diameter = {true, "diameter " + r.diameter_value.get_str() + " at d12"};
    else
        r.diameter = {false, "diameter " + r.diameter_value.get_str() + " but d12 = " + m(0, 1).get_str()};
    return r;
}

} // namespace ipset
