#include "flagcoh/reports.hpp"

#include <cstdint>

namespace flagcoh {

namespace {

std::string reading_label(const Tableau& t) {
    std::string out;
    for (int e : t.reading_word()) {
        if (!out.empty()) out += ',';
        out += std::to_string(e);
    }
    return out;
}

}  // namespace

HilbertSeries betti(const Partition& lambda, const Composition& mu) {
    check_pair(lambda, mu);
    std::vector<long> b;
    for (const auto& t : column_strict_tableaux(lambda, mu)) {
        const auto deg = static_cast<std::size_t>(tableau_degree(t, mu));
        if (b.size() <= deg) b.resize(deg + 1, 0);
        ++b[deg];
    }
    return HilbertSeries(b);
}

std::vector<Component> components(const Partition& lambda, const Composition& mu) {
    check_pair(lambda, mu);
    std::vector<Component> out;
    const auto tabs = column_strict_tableaux(lambda, mu);
    const FlagDims fd = dims(lambda, mu);
    for (const auto& s : semistandard_tableaux(lambda, mu)) {
        Component c;
        c.top = s;
        c.dimension = fd.lambda - fd.mu;
        out.push_back(std::move(c));
    }
    for (const auto& t : tabs) {
        const Tableau plus = straighten(t, mu);
        for (auto& c : out)
            if (c.top == plus) {
                c.fiber.push_back(t);
                break;
            }
    }
    for (auto& c : out) {
        const auto top_sig = cell_signature(c.top, mu);
        bool contains_top = false, below = true;
        for (const auto& t : c.fiber) {
            if (t == c.top) {
                contains_top = true;
                continue;
            }
            if (compare_signatures(cell_signature(t, mu), top_sig) != CellOrder::less) below = false;
        }
        c.unique_maximal = contains_top && below;
    }
    return out;
}

PosetExport poset_export(const Partition& lambda, const Composition& mu) {
    check_pair(lambda, mu);
    PosetExport out;
    out.nodes = column_strict_tableaux(lambda, mu);
    const std::size_t n = out.nodes.size();
    std::vector<std::vector<Partition>> sig;
    for (const auto& t : out.nodes) sig.push_back(cell_signature(t, mu));
    const std::size_t words = (n + 63) / 64;
    // above[a] = {c : a ≺ c}, below[b] = {c : c ≺ b}.
    std::vector<std::vector<std::uint64_t>> above(n, std::vector<std::uint64_t>(words)),
        below(n, std::vector<std::uint64_t>(words));
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b)
            if (compare_signatures(sig[a], sig[b]) == CellOrder::less) {
                above[a][b / 64] |= std::uint64_t{1} << (b % 64);
                below[b][a / 64] |= std::uint64_t{1} << (a % 64);
            }
    for (std::size_t a = 0; a < n; ++a)
        for (std::size_t b = 0; b < n; ++b) {
            if (!(above[a][b / 64] >> (b % 64) & 1)) continue;
            bool covering = true;
            for (std::size_t w = 0; w < words && covering; ++w)
                if (above[a][w] & below[b][w]) covering = false;
            if (covering) out.edges.emplace_back(static_cast<int>(a), static_cast<int>(b));
        }
    out.dot = "digraph paving {\n";
    for (std::size_t i = 0; i < n; ++i)
        out.dot += "  n" + std::to_string(i) + " [label=\"" + reading_label(out.nodes[i]) + "\"];\n";
    for (const auto& [a, b] : out.edges)
        out.dot += "  n" + std::to_string(a) + " -> n" + std::to_string(b) + ";\n";
    out.dot += "}\n";
    return out;
}

PavingReport paving_report(const Partition& lambda, const Composition& mu) {
    PavingReport r;
    r.lambda = lambda;
    r.mu = mu;
    for (const auto& t : column_strict_tableaux(lambda, mu)) r.cells.emplace_back(t, tableau_degree(t, mu));
    r.betti = betti(lambda, mu);
    r.components = components(lambda, mu);
    r.edges = poset_export(lambda, mu).edges;
    return r;
}

}  // namespace flagcoh
