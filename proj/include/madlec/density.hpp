#pragma once

#include <bit>
#include <cstdint>
#include <limits>
#include <queue>
#include <stdexcept>
#include <vector>

#include "madlec/graph.hpp"
#include "madlec/rational.hpp"

namespace madlec {

/// A vertex subset together with the average degree of the subgraph it
/// induces.  density == 2 * e(S) / |S|, recomputable from the host graph.
struct DensityWitness {
    std::vector<int> vertices;  // sorted
    Rational density;
};

inline Rational average_degree(const Graph& g) {
    if (g.vertex_count() == 0) throw std::invalid_argument("average degree of empty graph");
    return rat(2L * g.edge_count(), g.vertex_count());
}

inline long long induced_edge_count(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in(static_cast<size_t>(g.vertex_count()), 0);
    for (int v : vertices) in.at(static_cast<size_t>(v)) = 1;
    long long count = 0;
    for (const auto& [u, v] : g.edges())
        if (in[static_cast<size_t>(u)] && in[static_cast<size_t>(v)]) ++count;
    return count;
}

// ---------------------------------------------------------------------------
// Brute-force maximum average degree over all nonempty vertex subsets.  Only
// induced subgraphs matter: deleting edges at a fixed vertex set never raises
// the average degree.  Ties break towards the smaller subset, then towards
// the lexicographically smaller sorted vertex sequence, so output is a fixed
// golden value for any given graph.

inline DensityWitness mad_bruteforce(const Graph& g, int max_vertices = 16) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad of empty graph");
    if (n > max_vertices || n > 30)
        throw std::invalid_argument("mad_bruteforce limited to " + std::to_string(std::min(max_vertices, 30)) + " vertices");

    std::vector<uint64_t> adj(static_cast<size_t>(n), 0);
    for (const auto& [u, v] : g.edges()) {
        adj[static_cast<size_t>(u)] |= uint64_t{1} << v;
        adj[static_cast<size_t>(v)] |= uint64_t{1} << u;
    }

    auto subset_vertices = [n](uint64_t mask) {
        std::vector<int> vs;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) vs.push_back(v);
        return vs;
    };

    uint64_t best_mask = 1;
    Rational best_density = rat(0);
    int best_size = 1;
    bool have_best = false;
    for (uint64_t mask = 1; mask < (uint64_t{1} << n); ++mask) {
        long long twice_edges = 0;
        for (int v = 0; v < n; ++v)
            if (mask >> v & 1) twice_edges += std::popcount(adj[static_cast<size_t>(v)] & mask);
        const int size = std::popcount(mask);
        const Rational density = rat(twice_edges, size);
        const int order = have_best ? cmp(density, best_density) : 1;
        bool better = order > 0;
        if (!better && order == 0) {
            if (size < best_size) {
                better = true;
            } else if (size == best_size) {
                better = subset_vertices(mask) < subset_vertices(best_mask);
            }
        }
        if (better) {
            best_mask = mask;
            best_density = density;
            best_size = size;
            have_best = true;
        }
    }
    return DensityWitness{subset_vertices(best_mask), best_density};
}

namespace detail {

// Dinic max-flow on 64-bit integer capacities.  Capacities here are small
// (bounded by (|E|+1) * n after scaling), so 64 bits is exact.
class MaxFlow {
public:
    explicit MaxFlow(int node_count) : head_(static_cast<size_t>(node_count), -1) {}

    void add_edge(int from, int to, long long capacity) {
        arcs_.push_back({to, head_[static_cast<size_t>(from)], capacity});
        head_[static_cast<size_t>(from)] = static_cast<int>(arcs_.size()) - 1;
        arcs_.push_back({from, head_[static_cast<size_t>(to)], 0});
        head_[static_cast<size_t>(to)] = static_cast<int>(arcs_.size()) - 1;
    }

    long long run(int source, int sink) {
        source_ = source;
        sink_ = sink;
        long long total = 0;
        while (build_levels()) {
            iter_ = head_;
            long long pushed;
            while ((pushed = dfs(source_, std::numeric_limits<long long>::max())) > 0) total += pushed;
        }
        return total;
    }

    /// After run(): nodes still reachable from the source in the residual
    /// network.  This is the inclusion-minimal min-cut source side.
    std::vector<bool> source_side() const {
        std::vector<bool> seen(head_.size(), false);
        std::queue<int> q;
        q.push(source_);
        seen[static_cast<size_t>(source_)] = true;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int a = head_[static_cast<size_t>(v)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<size_t>(a)];
                if (arc.capacity > 0 && !seen[static_cast<size_t>(arc.to)]) {
                    seen[static_cast<size_t>(arc.to)] = true;
                    q.push(arc.to);
                }
            }
        }
        return seen;
    }

private:
    struct Arc {
        int to;
        int next;
        long long capacity;
    };

    bool build_levels() {
        level_.assign(head_.size(), -1);
        std::queue<int> q;
        q.push(source_);
        level_[static_cast<size_t>(source_)] = 0;
        while (!q.empty()) {
            const int v = q.front();
            q.pop();
            for (int a = head_[static_cast<size_t>(v)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
                const Arc& arc = arcs_[static_cast<size_t>(a)];
                if (arc.capacity > 0 && level_[static_cast<size_t>(arc.to)] < 0) {
                    level_[static_cast<size_t>(arc.to)] = level_[static_cast<size_t>(v)] + 1;
                    q.push(arc.to);
                }
            }
        }
        return level_[static_cast<size_t>(sink_)] >= 0;
    }

    long long dfs(int v, long long limit) {
        if (v == sink_) return limit;
        for (int& a = iter_[static_cast<size_t>(v)]; a != -1; a = arcs_[static_cast<size_t>(a)].next) {
            Arc& arc = arcs_[static_cast<size_t>(a)];
            if (arc.capacity <= 0 || level_[static_cast<size_t>(arc.to)] != level_[static_cast<size_t>(v)] + 1)
                continue;
            const long long pushed = dfs(arc.to, std::min(limit, arc.capacity));
            if (pushed > 0) {
                arc.capacity -= pushed;
                arcs_[static_cast<size_t>(a ^ 1)].capacity += pushed;
                return pushed;
            }
        }
        return 0;
    }

    std::vector<int> head_;
    std::vector<Arc> arcs_;
    std::vector<int> level_;
    std::vector<int> iter_;
    int source_ = 0;
    int sink_ = 0;
};

inline long long to_int64(const BigInt& value) {
    if (!value.fits_slong_p()) throw std::overflow_error("flow capacity exceeds 64-bit range");
    return static_cast<long long>(value.get_si());
}

}  // namespace detail

// ---------------------------------------------------------------------------
// Exact maximum average degree via parametric min-cut.
//
// For a guess gamma = p/q on edges-per-vertex density, build the network
//   source -> edge node      capacity q          (edge worth 1, scaled by q)
//   edge node -> endpoints   capacity (|E|+1)*q  (effectively infinite)
//   vertex node -> sink      capacity p
// Then max over subsets H of q*e(H) - p*|H| equals q*|E| - mincut, and the
// source-side vertex nodes of the minimal min cut realize the maximum.
// Dinkelbach iteration: start at gamma = |E|/n, replace gamma by the density
// of the returned witness while an improving subset exists.  Every iterate is
// the density of some subgraph, so the strictly increasing sequence takes at
// most n^2 steps.  Reported density converts back to average degree (2*gamma).

inline DensityWitness mad_exact(const Graph& g) {
    const int n = g.vertex_count();
    if (n == 0) throw std::invalid_argument("mad of empty graph");
    const int m = g.edge_count();
    if (m == 0) return DensityWitness{{0}, rat(0)};

    Rational gamma = rat(m, n);
    std::vector<int> witness(static_cast<size_t>(n));
    for (int v = 0; v < n; ++v) witness[static_cast<size_t>(v)] = v;

    const long long max_iterations = static_cast<long long>(n) * n;
    for (long long iteration = 0;; ++iteration) {
        if (iteration > max_iterations)
            throw std::logic_error("parametric density iteration failed to terminate");
        const BigInt p = gamma.get_num();
        const BigInt q = gamma.get_den();
        const long long cap_edge = detail::to_int64(q);
        const long long cap_inf = detail::to_int64(BigInt((m + 1) * q));
        const long long cap_vertex = detail::to_int64(p);

        // node ids: 0 = source, 1..m = edge nodes, m+1..m+n = vertex nodes, m+n+1 = sink
        const int source = 0;
        const int sink = m + n + 1;
        detail::MaxFlow flow(m + n + 2);
        for (int e = 0; e < m; ++e) {
            flow.add_edge(source, 1 + e, cap_edge);
            flow.add_edge(1 + e, m + 1 + g.edges()[static_cast<size_t>(e)].first, cap_inf);
            flow.add_edge(1 + e, m + 1 + g.edges()[static_cast<size_t>(e)].second, cap_inf);
        }
        for (int v = 0; v < n; ++v) flow.add_edge(m + 1 + v, sink, cap_vertex);

        const long long cut = flow.run(source, sink);
        const long long value = static_cast<long long>(m) * cap_edge - cut;  // q*e(H) - p*|H| at the optimum
        if (value <= 0) break;

        const std::vector<bool> side = flow.source_side();
        std::vector<int> subset;
        for (int v = 0; v < n; ++v)
            if (side[static_cast<size_t>(m + 1 + v)]) subset.push_back(v);
        const Rational next = rat(static_cast<long>(induced_edge_count(g, subset)),
                                  static_cast<long>(subset.size()));
        if (!(next > gamma)) throw std::logic_error("parametric density failed to increase");
        gamma = next;
        witness = std::move(subset);
    }
    return DensityWitness{witness, Rational(2 * gamma)};
}

}  // namespace madlec
