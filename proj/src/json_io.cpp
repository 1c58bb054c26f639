#include "flagcoh/json_io.hpp"

#include "flagcoh/error.hpp"

namespace flagcoh::io {

std::string rational_text(const Rational& q) { return q.get_num().get_str() + "/" + q.get_den().get_str(); }

json to_json(const Partition& p) { return p.parts(); }

json to_json(const Composition& c) { return c.parts(); }

json to_json(const Tableau& t) { return {{"shape", t.shape().parts()}, {"rows", t.rows()}}; }

Tableau tableau_from_json(const json& j) {
    try {
        auto t = Tableau::from_rows(j.at("rows").get<std::vector<std::vector<int>>>());
        if (j.contains("shape") && j.at("shape").get<std::vector<int>>() != t.shape().parts())
            throw InvalidArgument("tableau shape does not match its rows");
        return t;
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed tableau JSON: ") + e.what());
    }
}

json to_json(const Polynomial& p) {
    json out = json::array();
    for (const auto& [e, c] : p.terms()) out.push_back({{"coeff", rational_text(c)}, {"exps", e}});
    return out;
}

Polynomial polynomial_from_json(const json& j, int nvars) {
    Polynomial p(nvars);
    try {
        for (const auto& term : j) {
            auto e = term.at("exps").get<Exponent>();
            if (static_cast<int>(e.size()) != nvars)
                throw InvalidArgument("exponent vector has the wrong length");
            Rational c(term.at("coeff").get<std::string>());
            c.canonicalize();
            p.add_term(e, c);
        }
    } catch (const json::exception& e) {
        throw InvalidArgument(std::string("malformed polynomial JSON: ") + e.what());
    } catch (const std::invalid_argument& e) {
        throw InvalidArgument(std::string("malformed coefficient: ") + e.what());
    }
    return p;
}

json to_json(const HilbertSeries& h) { return h.coefficients; }

json to_json(const StructureConstants& sc) {
    json entries = json::array();
    for (std::size_t i = 0; i < sc.product.size(); ++i)
        for (std::size_t j = 0; j < sc.product[i].size(); ++j)
            for (const auto& [k, c] : sc.product[i][j])
                entries.push_back({i, j, k, rational_text(c)});
    return {{"dimension", sc.dimension}, {"integral", sc.is_integral()}, {"entries", entries}};
}

json to_json(const TransferReport& r) {
    json degrees = json::array();
    for (const auto& d : r.degrees)
        degrees.push_back({{"degree", 2 * d.degree},
                           {"quotient_dim", d.quotient_dim},
                           {"anti_invariant_dim", d.anti_invariant_dim},
                           {"image_rank", d.image_rank},
                           {"kernel_matches", d.kernel_matches}});
    json out = {{"passed", r.passed}, {"shift", 2 * r.shift}, {"degrees", degrees}};
    if (!r.passed) out["witness"] = json::parse(r.witness);
    return out;
}

json to_json(const Component& c) {
    json fiber = json::array();
    for (const auto& t : c.fiber) fiber.push_back(to_json(t));
    return {{"top", to_json(c.top)},
            {"dimension", c.dimension},
            {"fiber", fiber},
            {"unique_maximal", c.unique_maximal}};
}

json to_json(const PosetExport& p) {
    json nodes = json::array();
    for (const auto& t : p.nodes) nodes.push_back(to_json(t));
    json edges = json::array();
    for (const auto& [a, b] : p.edges) edges.push_back({a, b});
    return {{"nodes", nodes}, {"edges", edges}};
}

json quotient_report(const GradedQuotient& q, const BasisCertificate& cert) {
    json basis = json::array();
    for (const auto& t : cert.basis) basis.push_back(to_json(t));
    return {{"lambda", q.lambda().padded(q.mu().length())}, {"mu", to_json(q.mu())},       {"hilbert", to_json(q.hilbert())},
            {"basis", basis},                {"family", to_string(q.family())}, {"certified", cert.certified}};
}

}  // namespace flagcoh::io
