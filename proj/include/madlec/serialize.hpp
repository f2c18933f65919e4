#pragma once

// JSON views of the report types.  Field names are part of the CLI's stable
// output contract (documented in the README); exact rationals serialize as
// "p/q" strings, decimals are display-only strings.

#include <json.hpp>

#include "madlec/choosability.hpp"
#include "madlec/density.hpp"
#include "madlec/discharging.hpp"
#include "madlec/lp.hpp"
#include "madlec/verdict.hpp"

namespace madlec {

using json = nlohmann::ordered_json;

inline json to_json(const Rational& r) { return to_string(r); }

inline json to_json(const DensityWitness& w) {
    return json{{"vertices", w.vertices}, {"density", to_string(w.density)}};
}

inline json to_json(const Threshold& t) {
    return json{{"delta", t.delta},
                {"c", t.c},
                {"m", to_string(t.m)},
                {"m_decimal", to_decimal_string(t.m)},
                {"gap", to_string(Rational(t.m - rat(t.delta, 4)))}};
}

inline json to_json(const ChargeLedger& ledger) {
    json x = json::object();
    for (const auto& [j, value] : ledger.x) x[std::to_string(j)] = to_string(value);
    json alpha = json::object();
    for (const auto& [j, value] : ledger.alpha_final) alpha[std::to_string(j)] = to_string(value);
    return json{{"x", x},
                {"alpha_final", alpha},
                {"pot_sign", ledger.pot_sign == ChargeLedger::PotSign::positive_guaranteed
                                 ? "positive_guaranteed"
                                 : "indeterminate"}};
}

inline json to_json(const VerificationReport& report) {
    json checks = json::array();
    for (const auto& check : report.checks)
        checks.push_back(json{{"id", check.id},
                              {"description", check.description},
                              {"pass", check.pass},
                              {"detail", check.detail}});
    return json{{"delta", report.delta},
                {"c", report.c},
                {"m", to_string(report.m)},
                {"checks", checks},
                {"ledger", to_json(report.ledger)},
                {"pass", report.all_pass()}};
}

inline json to_json(const IdentityReport& report) {
    return json{{"delta", report.delta},
                {"c", report.c},
                {"parity", report.even ? "even" : "odd"},
                {"m", to_string(report.m)},
                {"closed_form_m", to_string(report.closed_form_m)},
                {"closed_form_matches", report.closed_form_matches},
                {"gap", to_string(report.gap)},
                {"constant", to_string(report.constant)},
                {"quoted_constant", to_string(report.quoted_constant)},
                {"quoted_constant_differs", report.quoted_constant_differs}};
}

inline json to_json(const LpSolution& solution) {
    json out{{"delta", solution.delta}};
    switch (solution.status) {
        case LpStatus::optimal: out["status"] = "optimal"; break;
        case LpStatus::infeasible: out["status"] = "infeasible"; break;
        case LpStatus::unbounded: out["status"] = "unbounded"; break;
    }
    if (solution.status == LpStatus::optimal) {
        out["value"] = to_string(solution.value);
        json primal = json::object();
        for (const auto& [j, nj] : solution.primal)
            if (nj != 0) primal[std::to_string(j)] = to_string(nj);
        out["primal"] = primal;
        json lambda = json::object();
        for (size_t r = 0; r < solution.dual.size(); ++r)
            lambda[std::to_string(r + 3)] = to_string(solution.dual.values[r]);
        out["dual"] = json{{"mu", to_string(solution.dual_mu)}, {"lambda", lambda}};
    }
    return out;
}

inline json to_json(const CriticalityReport& report) {
    json edge_violations = json::array();
    for (const auto& [u, v] : report.edge_weight_violations)
        edge_violations.push_back(json::array({u, v}));
    return json{{"delta", report.delta},
                {"min_degree_ok", report.min_degree_ok},
                {"edge_weight_violations", edge_violations},
                {"inequality_violations", report.inequality_violations},
                {"verdict", report.verdict == CriticalityReport::Verdict::cannot_be_critical
                                ? "cannot_be_critical"
                                : "conditions_hold"}};
}

inline json to_json(const Verdict& verdict) {
    json out{{"delta", verdict.delta}, {"outcome", to_string(verdict.outcome)}};
    if (verdict.mad) {
        out["mad"] = to_string(*verdict.mad);
        out["mad_decimal"] = to_decimal_string(*verdict.mad);
    }
    if (verdict.m) {
        out["m"] = to_string(*verdict.m);
        out["m_decimal"] = to_decimal_string(*verdict.m);
    }
    if (verdict.witness) out["witness"] = to_json(*verdict.witness);
    out["note"] = verdict.note;
    return out;
}

inline json to_json(const ListAssignment& L) {
    json lists = json::array();
    for (const auto& [edge, colors] : L.lists)
        lists.push_back(json{{"edge", json::array({edge.first, edge.second})}, {"colors", colors}});
    return json{{"lists", lists}};
}

}  // namespace madlec
