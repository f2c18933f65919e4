#pragma once

#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>

#include "madlec/density.hpp"
#include "madlec/discharging.hpp"
#include "madlec/graph.hpp"

namespace madlec {

// Per-graph outcome.  For Delta <= 4 the bound chi'_l(G) <= Delta + 1 is
// settled outright (Vizing 1976; Erdos, Rubin, Taylor 1979; Juvan, Mohar,
// Skrekovski 1998).  For Delta >= 5 the verdict applies the closed-form rule
// mad(G) < m(Delta); the lp module reports the threshold the underlying
// inequality family actually certifies, which is smaller from Delta = 14 on.
// No epsilon anywhere: m is non-dyadic for some Delta, so the comparison must
// be rational.

enum class Outcome { guaranteed_small_delta, guaranteed_sparse, inconclusive };

inline std::string to_string(Outcome outcome) {
    switch (outcome) {
        case Outcome::guaranteed_small_delta: return "guaranteed_small_delta";
        case Outcome::guaranteed_sparse: return "guaranteed_sparse";
        case Outcome::inconclusive: return "inconclusive";
    }
    return "?";
}

struct Verdict {
    int delta = 0;
    Outcome outcome = Outcome::inconclusive;
    std::optional<Rational> mad;        // absent for delta <= 4 (not computed)
    std::optional<Rational> m;          // absent for delta <= 4
    std::optional<DensityWitness> witness;
    std::string note;

    bool guaranteed() const { return outcome != Outcome::inconclusive; }

    std::string to_text() const {
        std::ostringstream out;
        out << "delta: " << delta << "\n";
        if (mad) out << "mad: " << madlec::to_string(*mad) << " (" << to_decimal_string(*mad) << ")\n";
        if (witness) {
            out << "witness:";
            for (int v : witness->vertices) out << " " << v;
            out << "\n";
        }
        if (m) out << "m: " << madlec::to_string(*m) << " (" << to_decimal_string(*m) << ")\n";
        out << "outcome: " << madlec::to_string(outcome) << "\n";
        if (!note.empty()) out << "note: " << note << "\n";
        return out.str();
    }
};

inline Verdict certify(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("verdict on empty graph");
    Verdict verdict;
    verdict.delta = g.max_degree();
    if (verdict.delta <= 4) {
        verdict.outcome = Outcome::guaranteed_small_delta;
        verdict.note =
            "delta <= 4 is settled: delta <= 3 (Vizing 1976; Erdos, Rubin, Taylor 1979), "
            "delta = 4 (Juvan, Mohar, Skrekovski 1998)";
        return verdict;
    }
    const DensityWitness witness = mad_exact(g);
    const Threshold t = threshold(verdict.delta);
    verdict.mad = witness.density;
    verdict.witness = witness;
    verdict.m = t.m;
    if (witness.density < t.m) {
        verdict.outcome = Outcome::guaranteed_sparse;
        verdict.note = "mad < m certifies chi'_l <= delta + 1";
    } else {
        verdict.outcome = Outcome::inconclusive;
        verdict.note = "mad >= m: sparsity criterion does not apply";
    }
    return verdict;
}

}  // namespace madlec
