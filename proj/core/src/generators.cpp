#include "rminor/generators.hpp"

#include <algorithm>
#include <array>
#include <random>
#include <set>
#include <stdexcept>
#include <string>

namespace rminor {

namespace {

void check(bool cond, const std::string& what) {
    if (!cond) throw std::logic_error("family construction failed validation: " + what);
}

// Validates the facts the instance was built for; white_degree < 0 skips the
// uniform-degree check (used by the random family).
FamilyInstance validated(RootedGraph rooted, Family family, std::vector<int> params,
                         FamilyInstance::Facts facts, const std::string& name) {
    const Graph& g = rooted.graph;
    check(static_cast<int>(rooted.roots.size()) == facts.white_count, name + ": white count");
    check(g.order() - facts.white_count == facts.black_count, name + ": black count");
    if (facts.white_degree >= 0)
        for (VertexId x : rooted.roots)
            check(g.degree(x) == facts.white_degree, name + ": white degree");
    check(kappa_x(rooted) == facts.kappa, name + ": kappa");
    return FamilyInstance{std::move(rooted), family, std::move(params), facts};
}

} // namespace

FamilyInstance gen_gt(int t) {
    if (t < 7) throw std::invalid_argument("gen_gt: t must be >= 7");
    GraphBuilder b;
    auto m = [&](int i) { return 5 * ((i % t + t) % t); };
    auto a = [&](int i) { return m(i) + 1; };
    auto bb = [&](int i) { return m(i) + 2; };
    auto c = [&](int i) { return m(i) + 3; };
    auto r = [&](int i) { return m(i) + 4; };
    for (int i = 0; i < t; ++i) {
        b.add_vertex_with_id(5 * i, "m" + std::to_string(i));
        b.add_vertex_with_id(5 * i + 1, "a" + std::to_string(i));
        b.add_vertex_with_id(5 * i + 2, "b" + std::to_string(i));
        b.add_vertex_with_id(5 * i + 3, "c" + std::to_string(i));
        b.add_vertex_with_id(5 * i + 4, "r" + std::to_string(i));
    }
    for (int i = 0; i < t; ++i) {
        b.add_edge(m(i), m(i - 1));
        b.add_edge(m(i - 1), a(i));
        b.add_edge(m(i), bb(i));
        b.add_edge(a(i), bb(i));
        b.add_edge(bb(i), c(i));
        b.add_edge(a(i), c(i - 1));
        b.add_edge(a(i), r(i));
        b.add_edge(bb(i), r(i));
        b.add_edge(c(i), r(i));
        b.add_edge(c(i - 1), r(i));
        b.add_edge(r(i), r(i - 1));
    }
    Graph g = b.build();
    VertexSet roots;
    for (int i = 0; i < t; ++i) roots.push_back(r(i));
    std::sort(roots.begin(), roots.end());

    check(g.order() == 5 * t, "gen_gt: vertex count");
    check(g.size() == static_cast<std::size_t>(11 * t), "gen_gt: edge count");
    for (int i = 0; i < t; ++i) {
        check(g.degree(r(i)) == 6, "gen_gt: white degree");
        check(g.degree(m(i)) == 4 && g.degree(a(i)) == 4 && g.degree(bb(i)) == 4 &&
                  g.degree(c(i)) == 4,
              "gen_gt: black degree");
    }
    return validated(RootedGraph(std::move(g), std::move(roots)), Family::GT, {t},
                     {t, 4 * t, 6, 6}, "gen_gt");
}

FamilyInstance gen_fl(int l, int whites) {
    if (l < 4) throw std::invalid_argument("gen_fl: l must be >= 4");
    if (whites < l + 1) throw std::invalid_argument("gen_fl: whites must be >= l+1");

    // Brick-wall strip: rows 0..l-1, vertical edges only where (row + col) is
    // even, so every black has at most one vertical and degree <= 3. White j
    // fans into l bottom-row vertices two columns apart, on the parity that
    // carries no vertical (degree 2 + 1 = 3). Group pitch leaves room for the
    // l staircase climbs that realize l disjoint row paths between any two
    // whites.
    int pitch = 3 * l + 4;
    if (pitch % 2 != 0) ++pitch;
    int base = 2 * l;
    if ((base + l) % 2 == 0) ++base;
    const int fan_width = 2 * (l - 1) + 1;
    const int cols = base + (whites - 1) * pitch + fan_width + 2 * l;

    GraphBuilder b;
    auto black = [&](int row, int col) { return row * cols + col; };
    for (int row = 0; row < l; ++row)
        for (int col = 0; col < cols; ++col)
            b.add_vertex_with_id(black(row, col),
                                 "b" + std::to_string(row) + "x" + std::to_string(col));
    for (int j = 0; j < whites; ++j) b.add_vertex_with_id(l * cols + j, "w" + std::to_string(j));

    for (int row = 0; row < l; ++row)
        for (int col = 0; col + 1 < cols; ++col) b.add_edge(black(row, col), black(row, col + 1));
    for (int row = 0; row + 1 < l; ++row)
        for (int col = 0; col < cols; ++col)
            if ((row + col) % 2 == 0) b.add_edge(black(row, col), black(row + 1, col));
    for (int j = 0; j < whites; ++j)
        for (int i = 0; i < l; ++i) b.add_edge(l * cols + j, black(l - 1, base + j * pitch + 2 * i));

    Graph g = b.build();
    VertexSet roots;
    for (int j = 0; j < whites; ++j) roots.push_back(l * cols + j);

    for (int row = 0; row < l; ++row)
        for (int col = 0; col < cols; ++col)
            check(g.degree(black(row, col)) <= 3, "gen_fl: black degree");
    return validated(RootedGraph(std::move(g), std::move(roots)), Family::FL, {l, whites},
                     {whites, l * cols, l, l}, "gen_fl");
}

FamilyInstance gen_hl(int l) {
    if (l < 2) throw std::invalid_argument("gen_hl: l must be >= 2");
    const int cols = l * (l + 1);
    GraphBuilder b;
    auto black = [&](int row, int col) { return row * cols + col; };
    for (int row = 0; row < l; ++row)
        for (int col = 0; col < cols; ++col)
            b.add_vertex_with_id(black(row, col),
                                 "b" + std::to_string(row) + "x" + std::to_string(col));
    for (int i = 0; i <= l; ++i) b.add_vertex_with_id(l * cols + i, "w" + std::to_string(i));

    for (int row = 0; row < l; ++row)
        for (int col = 0; col + 1 < cols; ++col) b.add_edge(black(row, col), black(row, col + 1));
    for (int row = 0; row + 1 < l; ++row)
        for (int col = 0; col < cols; ++col) b.add_edge(black(row, col), black(row + 1, col));
    for (int i = 0; i <= l; ++i)
        for (int k = 0; k < l; ++k) b.add_edge(l * cols + i, black(l - 1, i * l + k));

    Graph g = b.build();
    VertexSet roots;
    for (int i = 0; i <= l; ++i) roots.push_back(l * cols + i);
    return validated(RootedGraph(std::move(g), std::move(roots)), Family::HL, {l},
                     {l + 1, l * l * (l + 1), l, l}, "gen_hl");
}

Graph gen_random_planar(int n, std::uint64_t seed) {
    if (n < 4) throw std::invalid_argument("gen_random_planar: n must be >= 4");
    std::mt19937_64 rng(seed);
    auto pick = [&](std::size_t bound) { return static_cast<std::size_t>(rng() % bound); };

    std::vector<std::array<int, 3>> faces = {{0, 1, 2}, {0, 1, 3}, {0, 2, 3}, {1, 2, 3}};
    std::set<std::pair<int, int>> edge_set = {{0, 1}, {0, 2}, {0, 3}, {1, 2}, {1, 3}, {2, 3}};
    auto key = [](int u, int v) { return std::make_pair(std::min(u, v), std::max(u, v)); };

    for (int v = 4; v < n; ++v) {
        std::size_t fi = pick(faces.size());
        auto [a, bb, c] = faces[fi];
        edge_set.insert(key(a, v));
        edge_set.insert(key(bb, v));
        edge_set.insert(key(c, v));
        // Replace the chosen face by its three subdivision faces.
        faces[fi] = {a, bb, v};
        faces.push_back({a, c, v});
        faces.push_back({bb, c, v});
    }

    // Diagonal flips randomize away the stacked (3-tree) shape; each flip
    // keeps the complex a simple triangulation of the sphere.
    std::vector<std::pair<int, int>> edge_list(edge_set.begin(), edge_set.end());
    const int flips = 6 * n;
    for (int step = 0; step < flips; ++step) {
        auto [u, v] = edge_list[pick(edge_list.size())];
        int f1 = -1, f2 = -1;
        for (std::size_t i = 0; i < faces.size(); ++i) {
            const auto& f = faces[i];
            bool has_u = f[0] == u || f[1] == u || f[2] == u;
            bool has_v = f[0] == v || f[1] == v || f[2] == v;
            if (has_u && has_v) (f1 < 0 ? f1 : f2) = static_cast<int>(i);
        }
        auto apex = [&](int fi) {
            for (int x : faces[static_cast<std::size_t>(fi)])
                if (x != u && x != v) return x;
            return -1;
        };
        int a = apex(f1), bb = apex(f2);
        if (a == bb || a < 0 || bb < 0) continue;
        if (edge_set.contains(key(a, bb))) continue;
        edge_set.erase(key(u, v));
        edge_set.insert(key(a, bb));
        faces[static_cast<std::size_t>(f1)] = {u, a, bb};
        faces[static_cast<std::size_t>(f2)] = {v, a, bb};
        for (auto& e : edge_list)
            if (e == std::make_pair(std::min(u, v), std::max(u, v))) {
                e = key(a, bb);
                break;
            }
    }

    GraphBuilder b;
    for (int v = 0; v < n; ++v) b.add_vertex_with_id(v);
    for (auto [u, v] : edge_set) b.add_edge(u, v);
    Graph g = b.build();
    check(g.size() == static_cast<std::size_t>(3 * n - 6), "gen_random_planar: edge count");
    check(is_connected(g), "gen_random_planar: connectivity");
    return g;
}

FamilyInstance gen_wheel(int k) {
    if (k < 3) throw std::invalid_argument("gen_wheel: k must be >= 3");
    GraphBuilder b;
    for (int i = 0; i <= k; ++i) b.add_vertex_with_id(i);
    for (int i = 0; i < k; ++i) {
        b.add_edge(i, (i + 1) % k);
        b.add_edge(i, k);
    }
    Graph g = b.build();
    VertexSet roots;
    for (int i = 0; i < k; ++i) roots.push_back(i);
    // W3 = K4: the rim is complete, so kappa is |X|-1 = 2; otherwise 3.
    int kappa = k == 3 ? 2 : 3;
    return validated(RootedGraph(std::move(g), std::move(roots)), Family::WHEEL, {k},
                     {k, 1, 3, kappa}, "gen_wheel");
}

FamilyInstance gen_grid(int rows, int cols) {
    if (rows < 2 || cols < 2) throw std::invalid_argument("gen_grid: rows and cols must be >= 2");
    GraphBuilder b;
    auto at = [&](int r, int c) { return r * cols + c; };
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) b.add_vertex_with_id(at(r, c));
    for (int r = 0; r < rows; ++r)
        for (int c = 0; c < cols; ++c) {
            if (c + 1 < cols) b.add_edge(at(r, c), at(r, c + 1));
            if (r + 1 < rows) b.add_edge(at(r, c), at(r + 1, c));
        }
    Graph g = b.build();
    VertexSet roots = make_set({at(0, 0), at(0, cols - 1), at(rows - 1, 0), at(rows - 1, cols - 1)});
    return validated(RootedGraph(std::move(g), std::move(roots)), Family::GRID, {rows, cols},
                     {4, rows * cols - 4, 2, 2}, "gen_grid");
}

FamilyInstance make_random_planar_instance(int n, std::uint64_t seed, int k) {
    Graph g = gen_random_planar(n, seed);
    VertexSet roots = greedy_root_sample(g, k);
    RootedGraph rooted(std::move(g), std::move(roots));
    int kappa = kappa_x(rooted);
    return FamilyInstance{std::move(rooted), Family::RANDOM_PLANAR, {n, k}, {k, n - k, -1, kappa}};
}

Graph prism(int k) {
    if (k < 3) throw std::invalid_argument("prism: k must be >= 3");
    GraphBuilder b;
    for (int i = 0; i < 2 * k; ++i) b.add_vertex_with_id(i);
    for (int i = 0; i < k; ++i) {
        b.add_edge(i, (i + 1) % k);
        b.add_edge(k + i, k + (i + 1) % k);
        b.add_edge(i, k + i);
    }
    return b.build();
}

Graph antiprism(int k) {
    if (k < 3) throw std::invalid_argument("antiprism: k must be >= 3");
    GraphBuilder b;
    for (int i = 0; i < 2 * k; ++i) b.add_vertex_with_id(i);
    for (int i = 0; i < k; ++i) {
        b.add_edge(i, (i + 1) % k);
        b.add_edge(k + i, k + (i + 1) % k);
        b.add_edge(i, k + i);
        b.add_edge(i, k + (i + 1) % k);
    }
    return b.build();
}

VertexSet greedy_root_sample(const Graph& g, int k) {
    if (k < 1 || k > g.order())
        throw std::invalid_argument("greedy_root_sample: k must be in 1..|V|");
    VertexId start = g.vertices().front();
    for (VertexId v : g.vertices())
        if (g.degree(v) > g.degree(start)) start = v;
    VertexSet roots{start};
    while (static_cast<int>(roots.size()) < k) {
        VertexId best = -1;
        int best_kappa = -1;
        for (VertexId v : g.vertices()) {
            if (set_contains(roots, v)) continue;
            int kappa = kappa_x(RootedGraph(g, set_union(roots, {v})));
            if (kappa > best_kappa) {
                best_kappa = kappa;
                best = v;
            }
        }
        roots.insert(std::lower_bound(roots.begin(), roots.end(), best), best);
    }
    return roots;
}

} // namespace rminor
