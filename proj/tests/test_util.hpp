#pragma once

#include <random>
#include <vector>

#include "madlec/graph.hpp"

namespace test_util {

/// G(n, p) with a fixed engine so every run sees the same corpus.
inline madlec::Graph gnp(int n, double p, std::mt19937& rng) {
    std::bernoulli_distribution flip(p);
    std::vector<madlec::Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (flip(rng)) edges.push_back({u, v});
    return madlec::Graph(n, std::move(edges));
}

/// Random tree: each vertex attaches to a uniformly chosen earlier vertex.
inline madlec::Graph random_tree(int n, std::mt19937& rng) {
    std::vector<madlec::Edge> edges;
    for (int v = 1; v < n; ++v) {
        std::uniform_int_distribution<int> pick(0, v - 1);
        edges.push_back(madlec::make_edge(pick(rng), v));
    }
    return madlec::Graph(n, std::move(edges));
}

/// Spider: one center with `legs` paths of length `leg_len` attached.
/// A tree with max degree = legs.
inline madlec::Graph spider(int legs, int leg_len) {
    std::vector<madlec::Edge> edges;
    int next = 1;
    for (int leg = 0; leg < legs; ++leg) {
        int prev = 0;
        for (int step = 0; step < leg_len; ++step) {
            edges.push_back(madlec::make_edge(prev, next));
            prev = next++;
        }
    }
    return madlec::Graph(next, std::move(edges));
}

/// r x c grid graph; planar and triangle-free.
inline madlec::Graph grid(int rows, int cols) {
    std::vector<madlec::Edge> edges;
    auto id = [cols](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r) {
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) edges.push_back({id(r, c), id(r, c + 1)});
            if (r + 1 < rows) edges.push_back({id(r, c), id(r + 1, c)});
        }
    }
    return madlec::Graph(rows * cols, std::move(edges));
}

/// Delta = 5 graph with degree profile {3: 2, 4: 2, 5: 4}: a K4 core whose
/// vertices absorb the extra adjacencies.  Realizes n_3 = 2, n_5 = 4.
inline madlec::Graph profile_3x2_5x4() {
    std::vector<madlec::Edge> edges;
    for (int u = 0; u < 4; ++u)
        for (int v = u + 1; v < 4; ++v) edges.push_back({u, v});  // K4 on 0..3
    edges.push_back({0, 4});
    edges.push_back({0, 5});
    edges.push_back({1, 4});
    edges.push_back({1, 5});
    edges.push_back({2, 6});
    edges.push_back({2, 7});
    edges.push_back({3, 6});
    edges.push_back({3, 7});
    edges.push_back({4, 5});
    edges.push_back({4, 6});
    edges.push_back({5, 7});
    return madlec::Graph(8, std::move(edges));
}

}  // namespace test_util
