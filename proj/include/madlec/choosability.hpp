#pragma once

#include <algorithm>
#include <bit>
#include <cstdint>
#include <functional>
#include <map>
#include <optional>
#include <sstream>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

#include "madlec/discharging.hpp"
#include "madlec/graph.hpp"

namespace madlec {

/// Per-edge color lists.  Color identifiers are small non-negative integers;
/// only equality between colors matters.
struct ListAssignment {
    std::map<Edge, std::vector<int>> lists;  // each list sorted, no duplicates

    std::string to_text() const {
        std::ostringstream out;
        for (const auto& [edge, colors] : lists) {
            out << edge.first << " " << edge.second << " : ";
            for (size_t i = 0; i < colors.size(); ++i) {
                if (i) out << ",";
                out << colors[i];
            }
            out << "\n";
        }
        return out.str();
    }
};

struct EdgeColoring {
    std::map<Edge, int> colors;
};

/// Proper = no two edges sharing an endpoint carry the same color.
inline bool is_proper(const Graph& g, const EdgeColoring& coloring) {
    for (const Edge& e : g.edges())
        if (!coloring.colors.count(e))
            throw std::invalid_argument("coloring misses an edge");
    for (int v = 0; v < g.vertex_count(); ++v) {
        std::vector<int> seen;
        for (int u : g.neighbors(v)) seen.push_back(coloring.colors.at(make_edge(u, v)));
        std::sort(seen.begin(), seen.end());
        if (std::adjacent_find(seen.begin(), seen.end()) != seen.end()) return false;
    }
    return true;
}

namespace detail {

inline std::vector<std::vector<int>> edge_adjacency(const std::vector<Edge>& edges) {
    const size_t m = edges.size();
    std::vector<std::vector<int>> adjacent(m);
    for (size_t e1 = 0; e1 < m; ++e1) {
        for (size_t e2 = e1 + 1; e2 < m; ++e2) {
            const auto& [a, b] = edges[e1];
            const auto& [c, d] = edges[e2];
            if (a == c || a == d || b == c || b == d) {
                adjacent[e1].push_back(static_cast<int>(e2));
                adjacent[e2].push_back(static_cast<int>(e1));
            }
        }
    }
    return adjacent;
}

enum class SolveOutcome { found, none, out_of_budget };

// Backtracking list-edge-coloring.  Most-constrained edge first (fewest
// usable list entries given already-colored neighbors); candidate colors in
// ascending order, so results are deterministic.  The ordering heuristic only
// affects speed, never the outcome.
class ListColorSolver {
public:
    ListColorSolver(const std::vector<Edge>& edges, std::vector<std::vector<int>> lists,
                    uint64_t* budget)
        : edges_(edges),
          lists_(std::move(lists)),
          adjacent_(edge_adjacency(edges)),
          budget_(budget) {
        colors_.assign(edges_.size(), -1);
    }

    SolveOutcome run() { return dfs(); }

    const std::vector<int>& colors() const { return colors_; }

private:
    bool usable(size_t e, int color) const {
        for (int other : adjacent_[e])
            if (colors_[static_cast<size_t>(other)] == color) return false;
        return true;
    }

    SolveOutcome dfs() {
        if (budget_) {
            if (*budget_ == 0) return SolveOutcome::out_of_budget;
            --*budget_;
        }
        size_t pick = edges_.size();
        size_t pick_count = 0;
        for (size_t e = 0; e < edges_.size(); ++e) {
            if (colors_[e] >= 0) continue;
            size_t count = 0;
            for (int color : lists_[e])
                if (usable(e, color)) ++count;
            if (pick == edges_.size() || count < pick_count) {
                pick = e;
                pick_count = count;
                if (count == 0) break;
            }
        }
        if (pick == edges_.size()) return SolveOutcome::found;
        if (pick_count == 0) return SolveOutcome::none;
        for (int color : lists_[pick]) {
            if (!usable(pick, color)) continue;
            colors_[pick] = color;
            const SolveOutcome outcome = dfs();
            if (outcome != SolveOutcome::none) return outcome;
            colors_[pick] = -1;
        }
        return SolveOutcome::none;
    }

    const std::vector<Edge>& edges_;
    std::vector<std::vector<int>> lists_;
    std::vector<std::vector<int>> adjacent_;
    uint64_t* budget_;
    std::vector<int> colors_;
};

// Plain k-edge-coloring search with color-symmetry breaking: along any search
// path the used colors form a prefix 0..t-1, and a fresh color may only enter
// as color t.  Restricting fresh colors to one representative is sound since
// unused colors are interchangeable.
class PlainColorSolver {
public:
    PlainColorSolver(const std::vector<Edge>& edges, int k)
        : edges_(edges), adjacent_(edge_adjacency(edges)), k_(k) {
        colors_.assign(edges_.size(), -1);
        use_count_.assign(static_cast<size_t>(k), 0);
    }

    bool run() { return dfs(); }

    const std::vector<int>& colors() const { return colors_; }

private:
    bool usable(size_t e, int color) const {
        for (int other : adjacent_[e])
            if (colors_[static_cast<size_t>(other)] == color) return false;
        return true;
    }

    bool dfs() {
        const int limit = std::min(k_, distinct_used_ + 1);
        size_t pick = edges_.size();
        int pick_count = 0;
        for (size_t e = 0; e < edges_.size(); ++e) {
            if (colors_[e] >= 0) continue;
            int count = 0;
            for (int color = 0; color < limit; ++color)
                if (usable(e, color)) ++count;
            if (pick == edges_.size() || count < pick_count) {
                pick = e;
                pick_count = count;
                if (count == 0) break;
            }
        }
        if (pick == edges_.size()) return true;
        for (int color = 0; color < limit; ++color) {
            if (!usable(pick, color)) continue;
            colors_[pick] = color;
            if (use_count_[static_cast<size_t>(color)]++ == 0) ++distinct_used_;
            if (dfs()) return true;
            if (--use_count_[static_cast<size_t>(color)] == 0) --distinct_used_;
            colors_[pick] = -1;
        }
        return false;
    }

    const std::vector<Edge>& edges_;
    std::vector<std::vector<int>> adjacent_;
    int k_;
    std::vector<int> colors_;
    std::vector<int> use_count_;
    int distinct_used_ = 0;
};

}  // namespace detail

/// Exact chromatic index by backtracking.  Tries k = max degree, then
/// k = max degree + 1; one of the two always succeeds.
inline int chromatic_index(const Graph& g, int max_edges = 24) {
    const int m = g.edge_count();
    if (m == 0) return 0;
    if (m > max_edges)
        throw std::invalid_argument("chromatic_index limited to " + std::to_string(max_edges) + " edges");
    const int delta = g.max_degree();
    for (int k = delta; k <= delta + 1; ++k) {
        detail::PlainColorSolver solver(g.edges(), k);
        if (solver.run()) return k;
    }
    throw std::logic_error("edge coloring above the classical bound");
}

/// A proper coloring drawn from the given lists, or nullopt when none exists.
inline std::optional<EdgeColoring> find_list_coloring(const Graph& g, const ListAssignment& L,
                                                      int max_edges = 24) {
    if (g.edge_count() > max_edges)
        throw std::invalid_argument("list coloring limited to " + std::to_string(max_edges) + " edges");
    std::vector<std::vector<int>> lists;
    lists.reserve(g.edges().size());
    for (const Edge& e : g.edges()) {
        auto it = L.lists.find(e);
        if (it == L.lists.end() || it->second.empty())
            throw std::invalid_argument("list assignment misses an edge");
        std::vector<int> list = it->second;
        std::sort(list.begin(), list.end());
        list.erase(std::unique(list.begin(), list.end()), list.end());
        lists.push_back(std::move(list));
    }
    detail::ListColorSolver solver(g.edges(), std::move(lists), nullptr);
    if (solver.run() != detail::SolveOutcome::found) return std::nullopt;
    EdgeColoring coloring;
    for (size_t e = 0; e < g.edges().size(); ++e)
        coloring.colors[g.edges()[e]] = solver.colors()[e];
    return coloring;
}

// ---------------------------------------------------------------------------
// Exhaustive search for a size-k list assignment with no proper coloring.
//
// Assignments are enumerated up to color renaming.  A color is determined by
// the set of edges whose lists contain it, so an assignment class is exactly
// a multiset of nonempty edge subsets in which every edge appears k times
// counting multiplicity.  Enumerating those multisets visits each renaming
// class once, with no dedup pass.  Subsets are processed largest-first with
// singletons last, so any residual demand is absorbed by singletons and every
// search branch ends in a valid class.  Badness survives list shrinking, so
// searching |L(e)| = k exactly decides all assignments with |L(e)| >= k.

struct SearchBudget {
    uint64_t max_nodes = 10'000'000;
};

struct ChoosabilityLimits {
    int max_edges = 6;
    int max_k = 4;
};

enum class SearchStatus { found, none_complete, budget_exhausted };

struct BadSearchResult {
    SearchStatus status = SearchStatus::none_complete;
    std::optional<ListAssignment> assignment;
    uint64_t nodes_used = 0;
};

/// Visits every list-assignment class for `edge_count` edges and list size k,
/// as (edge-subset mask, multiplicity) vectors in a fixed canonical order.
/// The visitor returns false to stop early; the function returns false iff
/// the walk was stopped.
template <typename Visitor>
bool for_each_assignment_class(int edge_count, int k, Visitor&& visit) {
    if (edge_count < 0 || edge_count > 20) throw std::invalid_argument("edge count out of range");
    if (k < 1) throw std::invalid_argument("list size must be >= 1");
    std::vector<uint32_t> masks;
    for (uint32_t mask = 1; mask < (1u << edge_count); ++mask) masks.push_back(mask);
    std::sort(masks.begin(), masks.end(), [](uint32_t a, uint32_t b) {
        const int pa = std::popcount(a), pb = std::popcount(b);
        return pa != pb ? pa > pb : a < b;
    });

    std::vector<int> remaining(static_cast<size_t>(edge_count), k);
    std::vector<std::pair<uint32_t, int>> chosen;
    std::function<bool(size_t)> walk = [&](size_t idx) -> bool {
        if (idx == masks.size()) return visit(std::as_const(chosen));
        const uint32_t mask = masks[idx];
        if (std::popcount(mask) == 1) {
            const int e = std::countr_zero(mask);
            const int mult = remaining[static_cast<size_t>(e)];
            remaining[static_cast<size_t>(e)] = 0;
            if (mult > 0) chosen.push_back({mask, mult});
            const bool keep_going = walk(idx + 1);
            remaining[static_cast<size_t>(e)] = mult;
            if (mult > 0) chosen.pop_back();
            return keep_going;
        }
        int cap = k;
        for (int e = 0; e < edge_count; ++e)
            if (mask >> e & 1) cap = std::min(cap, remaining[static_cast<size_t>(e)]);
        for (int mult = cap; mult >= 0; --mult) {
            if (mult > 0) {
                chosen.push_back({mask, mult});
                for (int e = 0; e < edge_count; ++e)
                    if (mask >> e & 1) remaining[static_cast<size_t>(e)] -= mult;
            }
            const bool keep_going = walk(idx + 1);
            if (mult > 0) {
                for (int e = 0; e < edge_count; ++e)
                    if (mask >> e & 1) remaining[static_cast<size_t>(e)] += mult;
                chosen.pop_back();
            }
            if (!keep_going) return false;
        }
        return true;
    };
    return walk(0);
}

inline ListAssignment assignment_from_class(const Graph& g,
                                            const std::vector<std::pair<uint32_t, int>>& chosen) {
    ListAssignment L;
    for (const Edge& e : g.edges()) L.lists[e];
    int next_color = 0;
    for (const auto& [mask, mult] : chosen) {
        for (int copy = 0; copy < mult; ++copy, ++next_color)
            for (int e = 0; e < g.edge_count(); ++e)
                if (mask >> e & 1) L.lists[g.edges()[static_cast<size_t>(e)]].push_back(next_color);
    }
    return L;
}

inline BadSearchResult find_bad_assignment(const Graph& g, int k, SearchBudget budget = {},
                                           ChoosabilityLimits limits = {}) {
    if (k < 1) throw std::invalid_argument("list size must be >= 1");
    const int m = g.edge_count();
    if (m > limits.max_edges)
        throw std::invalid_argument("exhaustive choosability search limited to " +
                                    std::to_string(limits.max_edges) + " edges");
    if (k > limits.max_k)
        throw std::invalid_argument("exhaustive choosability search limited to list size " +
                                    std::to_string(limits.max_k));
    BadSearchResult result;
    if (m == 0) return result;  // no lists to pick badly

    uint64_t countdown = budget.max_nodes;
    bool completed = for_each_assignment_class(m, k, [&](const auto& chosen) {
        if (countdown == 0) {
            result.status = SearchStatus::budget_exhausted;
            return false;
        }
        --countdown;
        std::vector<std::vector<int>> lists(static_cast<size_t>(m));
        int next_color = 0;
        for (const auto& [mask, mult] : chosen)
            for (int copy = 0; copy < mult; ++copy, ++next_color)
                for (int e = 0; e < m; ++e)
                    if (mask >> e & 1) lists[static_cast<size_t>(e)].push_back(next_color);
        detail::ListColorSolver solver(g.edges(), std::move(lists), &countdown);
        const detail::SolveOutcome outcome = solver.run();
        if (outcome == detail::SolveOutcome::out_of_budget) {
            result.status = SearchStatus::budget_exhausted;
            return false;
        }
        if (outcome == detail::SolveOutcome::none) {
            result.status = SearchStatus::found;
            result.assignment = assignment_from_class(g, chosen);
            return false;
        }
        return true;
    });
    if (completed) result.status = SearchStatus::none_complete;
    result.nodes_used = budget.max_nodes - countdown;
    return result;
}

// ---------------------------------------------------------------------------

enum class BoundReason { exact, budget_exhausted, limit_reached };

struct ListChromaticResult {
    int value = 0;        // exact value, or a verified lower bound
    bool exact = false;
    BoundReason reason = BoundReason::exact;
    uint64_t nodes_used = 0;
};

/// Smallest k for which the exhaustive bad-assignment search completes empty.
/// Starts at the chromatic index, which is always a lower bound.
inline ListChromaticResult list_chromatic_index(const Graph& g, SearchBudget budget = {},
                                                ChoosabilityLimits limits = {}) {
    ListChromaticResult result;
    if (g.edge_count() == 0) {
        result.exact = true;
        return result;
    }
    if (g.edge_count() > limits.max_edges)
        throw std::invalid_argument("exhaustive choosability search limited to " +
                                    std::to_string(limits.max_edges) + " edges");
    int k = chromatic_index(g);
    uint64_t used = 0;
    for (;; ++k) {
        result.value = k;
        if (k > limits.max_k) {
            result.exact = false;
            result.reason = BoundReason::limit_reached;
            break;
        }
        SearchBudget step{budget.max_nodes - used};
        const BadSearchResult search = find_bad_assignment(g, k, step, limits);
        used += search.nodes_used;
        if (search.status == SearchStatus::none_complete) {
            result.exact = true;
            result.reason = BoundReason::exact;
            break;
        }
        if (search.status == SearchStatus::budget_exhausted) {
            result.exact = false;
            result.reason = BoundReason::budget_exhausted;
            break;
        }
        if (k > 2 * g.max_degree())
            throw std::logic_error("list chromatic index above the greedy bound");
    }
    result.nodes_used = used;
    return result;
}

// ---------------------------------------------------------------------------
// Necessary conditions for a (delta+1)-edge-choosability-critical graph:
// minimum degree 3, degree sum >= delta + 3 across every edge, and every
// counting inequality satisfied strictly.  A failed condition proves the
// graph cannot be such a critical graph; the filter never asserts the
// converse.

struct CriticalityReport {
    int delta = 0;
    bool min_degree_ok = false;
    std::vector<Edge> edge_weight_violations;   // deg(u) + deg(v) < delta + 3
    std::vector<int> inequality_violations;     // row index a with LHS >= RHS
    enum class Verdict { cannot_be_critical, conditions_hold } verdict = Verdict::cannot_be_critical;

    std::string to_text() const {
        std::ostringstream out;
        out << "delta: " << delta << "\n";
        out << "min_degree_ok: " << (min_degree_ok ? "yes" : "no") << "\n";
        out << "edge_weight_violations:";
        if (edge_weight_violations.empty()) out << " none";
        for (const auto& [u, v] : edge_weight_violations) out << " " << u << "-" << v;
        out << "\n";
        out << "inequality_violations:";
        if (inequality_violations.empty()) out << " none";
        for (int a : inequality_violations) out << " a=" << a;
        out << "\n";
        out << "verdict: "
            << (verdict == Verdict::cannot_be_critical ? "cannot_be_critical" : "conditions_hold")
            << "\n";
        return out.str();
    }
};

inline CriticalityReport criticality_filter(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("criticality filter on empty graph");
    CriticalityReport report;
    report.delta = g.max_degree();
    report.min_degree_ok = g.min_degree() >= 3;
    for (const Edge& e : g.edges())
        if (g.degree(e.first) + g.degree(e.second) < report.delta + 3)
            report.edge_weight_violations.push_back(e);
    if (report.delta >= 5) {
        const DegreeProfile profile = degree_profile(g);
        const InequalitySystem system = build_inequalities(report.delta);
        for (const InequalityRow& row : system.rows) {
            long long lhs = 0, rhs = 0;
            for (int j = 3; j <= report.delta; ++j) {
                lhs += row.lhs_coeff(j) * profile.at(j);
                rhs += row.rhs_coeff(j) * profile.at(j);
            }
            if (!(lhs < rhs)) report.inequality_violations.push_back(row.a);
        }
    }
    const bool clean = report.min_degree_ok && report.edge_weight_violations.empty() &&
                       report.inequality_violations.empty();
    report.verdict = clean ? CriticalityReport::Verdict::conditions_hold
                           : CriticalityReport::Verdict::cannot_be_critical;
    return report;
}

}  // namespace madlec
