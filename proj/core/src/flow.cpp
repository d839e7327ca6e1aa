#include "flow.hpp"

#include <algorithm>
#include <queue>
#include <vector>

namespace rminor::detail {

namespace {

struct Net {
    // Node layout: vertex at position i (in g.vertices() order) splits into
    // in-node 2i and out-node 2i+1.
    struct Arc {
        int to;
        int cap;
    };
    std::vector<Arc> arcs;                 // paired: arc 2j is forward, 2j+1 its reverse
    std::vector<std::vector<int>> out;     // node -> arc indices
    const VertexSet* verts;

    int index(VertexId v) const {
        return static_cast<int>(std::lower_bound(verts->begin(), verts->end(), v) - verts->begin());
    }
    void add_arc(int from, int to, int cap) {
        out[from].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({to, cap});
        out[to].push_back(static_cast<int>(arcs.size()));
        arcs.push_back({from, 0});
    }
};

Net build(const Graph& g, VertexId x, VertexId y) {
    Net net;
    net.verts = &g.vertices();
    const int n = g.order();
    net.out.resize(2 * static_cast<std::size_t>(n));
    const int big = n + 1;
    for (int i = 0; i < n; ++i) {
        VertexId v = g.vertices()[static_cast<std::size_t>(i)];
        net.add_arc(2 * i, 2 * i + 1, (v == x || v == y) ? big : 1);
    }
    // Edge arcs must not be cut-minimal themselves (only the unit vertex-internal
    // arcs may carry the min cut, or the residual extraction below undercounts),
    // so they get the same effectively-infinite capacity as the endpoints.
    for (const Edge& e : g.edges()) {
        int iu = net.index(e.a), iv = net.index(e.b);
        net.add_arc(2 * iu + 1, 2 * iv, big);
        net.add_arc(2 * iv + 1, 2 * iu, big);
    }
    return net;
}

// One BFS augmentation step; returns false when no augmenting path remains.
bool augment(Net& net, int s, int t) {
    std::vector<int> pred_arc(net.out.size(), -1);
    std::vector<char> seen(net.out.size(), 0);
    std::queue<int> q;
    seen[static_cast<std::size_t>(s)] = 1;
    q.push(s);
    while (!q.empty() && !seen[static_cast<std::size_t>(t)]) {
        int v = q.front();
        q.pop();
        for (int a : net.out[static_cast<std::size_t>(v)]) {
            const auto& arc = net.arcs[static_cast<std::size_t>(a)];
            if (arc.cap > 0 && !seen[static_cast<std::size_t>(arc.to)]) {
                seen[static_cast<std::size_t>(arc.to)] = 1;
                pred_arc[static_cast<std::size_t>(arc.to)] = a;
                q.push(arc.to);
            }
        }
    }
    if (!seen[static_cast<std::size_t>(t)]) return false;
    for (int v = t; v != s;) {
        int a = pred_arc[static_cast<std::size_t>(v)];
        net.arcs[static_cast<std::size_t>(a)].cap -= 1;
        net.arcs[static_cast<std::size_t>(a ^ 1)].cap += 1;
        v = net.arcs[static_cast<std::size_t>(a ^ 1)].to;
    }
    return true;
}

} // namespace

int vertex_disjoint_paths(const Graph& g, VertexId x, VertexId y, int cap) {
    Net net = build(g, x, y);
    const int s = 2 * net.index(x) + 1;  // x_out
    const int t = 2 * net.index(y);      // y_in
    int flow = 0;
    while ((cap < 0 || flow < cap) && augment(net, s, t)) ++flow;
    return flow;
}

VertexSet min_vertex_cut(const Graph& g, VertexId x, VertexId y) {
    Net net = build(g, x, y);
    const int s = 2 * net.index(x) + 1;
    const int t = 2 * net.index(y);
    while (augment(net, s, t)) {
    }
    // Residual reachability from the source side.
    std::vector<char> reach(net.out.size(), 0);
    std::queue<int> q;
    reach[static_cast<std::size_t>(s)] = 1;
    q.push(s);
    while (!q.empty()) {
        int v = q.front();
        q.pop();
        for (int a : net.out[static_cast<std::size_t>(v)]) {
            const auto& arc = net.arcs[static_cast<std::size_t>(a)];
            if (arc.cap > 0 && !reach[static_cast<std::size_t>(arc.to)]) {
                reach[static_cast<std::size_t>(arc.to)] = 1;
                q.push(arc.to);
            }
        }
    }
    VertexSet cut;
    for (std::size_t i = 0; i < g.vertices().size(); ++i) {
        VertexId v = g.vertices()[i];
        if (v == x || v == y) continue;
        if (reach[2 * i] && !reach[2 * i + 1]) cut.push_back(v);
    }
    return cut;  // vertices() order is ascending, so already sorted
}

} // namespace rminor::detail
