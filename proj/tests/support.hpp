#pragma once

// Shared fixtures and randomized-instance helpers. All randomness is
// mt19937_64 with explicit seeds so every failure replays exactly.

#include <bit>
#include <cstdint>
#include <random>
#include <vector>

#include "rminor/graph.hpp"

namespace rminor::testsupport {

using Rng = std::mt19937_64;

inline int pick(Rng& rng, int bound) {  // uniform in [0, bound)
    return static_cast<int>(rng() % static_cast<std::uint64_t>(bound));
}

inline Graph complete_graph(int n) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) b.add_edge(i, j);
    return b.build();
}

inline Graph cycle_graph(int n) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i < n; ++i) b.add_edge(i, (i + 1) % n);
    return b.build();
}

inline Graph path_graph(int n) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i + 1 < n; ++i) b.add_edge(i, i + 1);
    return b.build();
}

inline Graph petersen() {
    GraphBuilder b;
    for (int i = 0; i < 10; ++i) b.add_vertex();
    for (int i = 0; i < 5; ++i) {
        b.add_edge(i, (i + 1) % 5);          // outer pentagon
        b.add_edge(i, i + 5);                // spoke
        b.add_edge(5 + i, 5 + (i + 2) % 5);  // inner pentagram
    }
    return b.build();
}

// Random spanning tree (random attachment) plus `extra` random fresh edges.
inline Graph random_connected_graph(int n, int extra, Rng& rng) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 1; i < n; ++i) b.add_edge(i, pick(rng, i));
    int budget = n * (n - 1) / 2 - (n - 1);
    for (int tries = 0; extra > 0 && budget > 0 && tries < 20 * extra; ++tries) {
        int u = pick(rng, n), v = pick(rng, n);
        if (u == v || b.has_edge(u, v)) continue;
        b.add_edge(u, v);
        --extra;
        --budget;
    }
    return b.build();
}

// Each pair independently present with probability num/den; may be disconnected.
inline Graph random_graph(int n, int num, int den, Rng& rng) {
    GraphBuilder b;
    for (int i = 0; i < n; ++i) b.add_vertex();
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (pick(rng, den) < num) b.add_edge(i, j);
    return b.build();
}

inline VertexSet random_roots(const Graph& g, int k, Rng& rng) {
    VertexSet pool = g.vertices();
    VertexSet out;
    for (int i = 0; i < k; ++i) {
        int j = pick(rng, static_cast<int>(pool.size()));
        out.push_back(pool[static_cast<std::size_t>(j)]);
        pool.erase(pool.begin() + j);
    }
    return make_set(std::move(out));
}

// Definition-level k-connectivity: |V| >= k+1 and no vertex set of size < k
// disconnects. Exponential in |V|; keep inputs small.
inline bool is_k_connected_brute(const Graph& g, int k) {
    const int n = g.order();
    if (k <= 0) return true;
    if (n < k + 1) return false;
    const VertexSet& vs = g.vertices();
    for (std::uint32_t mask = 0; mask < (1u << n); ++mask) {
        if (std::popcount(mask) >= k) continue;
        VertexSet s;
        for (int i = 0; i < n; ++i)
            if (mask >> i & 1) s.push_back(vs[static_cast<std::size_t>(i)]);
        if (components(delete_vertices(g, s)).size() >= 2) return false;
    }
    return true;
}

} // namespace rminor::testsupport
