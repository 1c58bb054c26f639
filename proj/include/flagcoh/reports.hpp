#ifndef FLAGCOH_REPORTS_HPP
#define FLAGCOH_REPORTS_HPP

#include <string>
#include <utility>
#include <vector>

#include "flagcoh/presentation.hpp"
#include "flagcoh/tableau.hpp"

namespace flagcoh {

/// b_{2r} = #{T ∈ Col^λ_μ : deg T = r}.
HilbertSeries betti(const Partition& lambda, const Composition& mu);

struct Component {
    Tableau top;                 ///< S ∈ Std^λ_μ
    long dimension = 0;          ///< d_λ - d_μ
    std::vector<Tableau> fiber;  ///< Ω(S) = {T : T⁺ = S}, enumeration order
    bool unique_maximal = false; ///< every other T in Ω(S) lies strictly below S
};

/// One entry per semi-standard tableau; empty when the variety is empty.
std::vector<Component> components(const Partition& lambda, const Composition& mu);

struct PosetExport {
    std::vector<Tableau> nodes;                 ///< Col^λ_μ, enumeration order
    std::vector<std::pair<int, int>> edges;     ///< covering relations a ≺ b
    std::string dot;
};

/// Hasse diagram of ⪯. DOT node labels are the column reading words.
PosetExport poset_export(const Partition& lambda, const Composition& mu);

struct PavingReport {
    Partition lambda;
    Composition mu;
    std::vector<std::pair<Tableau, int>> cells;
    HilbertSeries betti;
    std::vector<Component> components;
    std::vector<std::pair<int, int>> edges;
};

PavingReport paving_report(const Partition& lambda, const Composition& mu);

}  // namespace flagcoh

#endif  // FLAGCOH_REPORTS_HPP
