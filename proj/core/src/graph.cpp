#include "rminor/graph.hpp"

#include <algorithm>
#include <queue>
#include <stdexcept>

namespace rminor {

struct Graph::Rep {
    VertexSet verts;                         // sorted
    std::vector<VertexSet> adj;              // parallel to verts, each sorted
    std::vector<std::string> names;          // parallel to verts; "" = decimal id
    std::size_t m = 0;

    int index_of(VertexId v) const {
        auto it = std::lower_bound(verts.begin(), verts.end(), v);
        if (it == verts.end() || *it != v) return -1;
        return static_cast<int>(it - verts.begin());
    }
};

namespace {
const std::shared_ptr<const Graph::Rep>& empty_rep() {
    static const auto rep = std::make_shared<const Graph::Rep>();
    return rep;
}

int require_index(const Graph::Rep& rep, VertexId v, const char* op) {
    int i = rep.index_of(v);
    if (i < 0) throw std::invalid_argument(std::string(op) + ": unknown vertex " + std::to_string(v));
    return i;
}
} // namespace

Graph::Graph() : rep_(empty_rep()) {}
Graph::Graph(std::shared_ptr<const Rep> rep) : rep_(std::move(rep)) {}

Graph Graph::add_vertex(VertexId v, std::string name) const {
    if (rep_->index_of(v) >= 0)
        throw std::invalid_argument("add_vertex: vertex " + std::to_string(v) + " already present");
    auto rep = std::make_shared<Rep>(*rep_);
    auto it = std::lower_bound(rep->verts.begin(), rep->verts.end(), v);
    auto pos = it - rep->verts.begin();
    rep->verts.insert(it, v);
    rep->adj.insert(rep->adj.begin() + pos, VertexSet{});
    rep->names.insert(rep->names.begin() + pos, std::move(name));
    return Graph(std::move(rep));
}

Graph Graph::add_edge(VertexId u, VertexId v) const {
    if (u == v) throw std::invalid_argument("add_edge: loop at vertex " + std::to_string(u));
    int iu = require_index(*rep_, u, "add_edge");
    int iv = require_index(*rep_, v, "add_edge");
    if (has_edge(u, v)) throw std::invalid_argument("add_edge: duplicate edge");
    auto rep = std::make_shared<Rep>(*rep_);
    auto& au = rep->adj[iu];
    au.insert(std::lower_bound(au.begin(), au.end(), v), v);
    auto& av = rep->adj[iv];
    av.insert(std::lower_bound(av.begin(), av.end(), u), u);
    ++rep->m;
    return Graph(std::move(rep));
}

Graph Graph::remove_edge(VertexId u, VertexId v) const {
    int iu = require_index(*rep_, u, "remove_edge");
    int iv = require_index(*rep_, v, "remove_edge");
    if (!has_edge(u, v)) throw std::invalid_argument("remove_edge: no such edge");
    auto rep = std::make_shared<Rep>(*rep_);
    auto& au = rep->adj[iu];
    au.erase(std::lower_bound(au.begin(), au.end(), v));
    auto& av = rep->adj[iv];
    av.erase(std::lower_bound(av.begin(), av.end(), u));
    --rep->m;
    return Graph(std::move(rep));
}

int Graph::order() const { return static_cast<int>(rep_->verts.size()); }
std::size_t Graph::size() const { return rep_->m; }
bool Graph::has_vertex(VertexId v) const { return rep_->index_of(v) >= 0; }

bool Graph::has_edge(VertexId u, VertexId v) const {
    int iu = rep_->index_of(u);
    if (iu < 0 || rep_->index_of(v) < 0) return false;
    const auto& au = rep_->adj[iu];
    return std::binary_search(au.begin(), au.end(), v);
}

const VertexSet& Graph::vertices() const { return rep_->verts; }

const VertexSet& Graph::neighbors(VertexId v) const {
    return rep_->adj[require_index(*rep_, v, "neighbors")];
}

int Graph::degree(VertexId v) const { return static_cast<int>(neighbors(v).size()); }

std::vector<Edge> Graph::edges() const {
    std::vector<Edge> out;
    out.reserve(rep_->m);
    for (std::size_t i = 0; i < rep_->verts.size(); ++i) {
        VertexId u = rep_->verts[i];
        for (VertexId v : rep_->adj[i])
            if (u < v) out.push_back({u, v});
    }
    return out;  // already sorted: verts ascending, adj sorted
}

const std::string& Graph::name(VertexId v) const {
    return rep_->names[require_index(*rep_, v, "name")];
}

bool operator==(const Graph& l, const Graph& r) {
    if (l.rep_ == r.rep_) return true;
    return l.rep_->verts == r.rep_->verts && l.rep_->adj == r.rep_->adj;
}

// --- GraphBuilder ---

VertexId GraphBuilder::add_vertex(std::string name) {
    VertexId v = verts_.empty() ? 0 : verts_.back() + 1;
    add_vertex_with_id(v, std::move(name));
    return v;
}

void GraphBuilder::add_vertex_with_id(VertexId v, std::string name) {
    if (!verts_.empty() && v <= verts_.back())
        throw std::invalid_argument("GraphBuilder: vertex ids must be added in increasing order");
    verts_.push_back(v);
    names_.push_back(std::move(name));
}

void GraphBuilder::add_edge(VertexId u, VertexId v) {
    if (u == v) throw std::invalid_argument("GraphBuilder: loop at vertex " + std::to_string(u));
    if (u > v) std::swap(u, v);
    edges_.emplace_back(u, v);
}

bool GraphBuilder::has_edge(VertexId u, VertexId v) const {
    if (u > v) std::swap(u, v);
    return std::find(edges_.begin(), edges_.end(), std::make_pair(u, v)) != edges_.end();
}

Graph GraphBuilder::build() {
    auto rep = std::make_shared<Graph::Rep>();
    rep->verts = verts_;
    rep->names = names_;
    rep->adj.assign(verts_.size(), {});
    std::sort(edges_.begin(), edges_.end());
    auto last = std::unique(edges_.begin(), edges_.end());
    if (last != edges_.end()) throw std::invalid_argument("GraphBuilder: duplicate edge");
    for (const auto& [u, v] : edges_) {
        int iu = rep->index_of(u), iv = rep->index_of(v);
        if (iu < 0 || iv < 0) throw std::invalid_argument("GraphBuilder: edge endpoint not a vertex");
        rep->adj[iu].push_back(v);
        rep->adj[iv].push_back(u);
    }
    for (auto& a : rep->adj) std::sort(a.begin(), a.end());
    rep->m = edges_.size();
    return Graph(std::move(rep));
}

// --- VertexSet helpers ---

bool set_contains(const VertexSet& s, VertexId v) {
    return std::binary_search(s.begin(), s.end(), v);
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    out.reserve(a.size() + b.size());
    std::set_union(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_intersection(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_intersection(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet set_difference(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
    std::set_difference(a.begin(), a.end(), b.begin(), b.end(), std::back_inserter(out));
    return out;
}

VertexSet make_set(std::vector<VertexId> items) {
    std::sort(items.begin(), items.end());
    items.erase(std::unique(items.begin(), items.end()), items.end());
    return items;
}

// --- Kernel operations ---

Graph induced_subgraph(const Graph& g, const VertexSet& s) {
    GraphBuilder b;
    for (VertexId v : s) {
        if (!g.has_vertex(v))
            throw std::invalid_argument("induced_subgraph: unknown vertex " + std::to_string(v));
        b.add_vertex_with_id(v, g.name(v));
    }
    for (VertexId v : s)
        for (VertexId w : g.neighbors(v))
            if (v < w && set_contains(s, w)) b.add_edge(v, w);
    return b.build();
}

Graph contract_edge(const Graph& g, VertexId x, VertexId y) {
    if (!g.has_edge(x, y))
        throw std::invalid_argument("contract_edge: " + std::to_string(x) + "-" + std::to_string(y) +
                                    " is not an edge");
    GraphBuilder b;
    for (VertexId v : g.vertices())
        if (v != y) b.add_vertex_with_id(v, g.name(v));
    for (const Edge& e : g.edges()) {
        if (e.a == y || e.b == y) continue;
        b.add_edge(e.a, e.b);
    }
    for (VertexId z : g.neighbors(y))
        if (z != x && !g.has_edge(x, z)) b.add_edge(x, z);
    return b.build();
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> out;
    // BFS from the least unvisited id; neighbor expansion in id order.
    const VertexSet& verts = g.vertices();
    std::vector<char> visited_flag(verts.size(), 0);
    auto idx = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    for (VertexId start : verts) {
        if (visited_flag[idx(start)]) continue;
        VertexSet comp;
        std::queue<VertexId> q;
        visited_flag[idx(start)] = 1;
        q.push(start);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            comp.push_back(v);
            for (VertexId w : g.neighbors(v)) {
                auto i = idx(w);
                if (!visited_flag[i]) {
                    visited_flag[i] = 1;
                    q.push(w);
                }
            }
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    return out;
}

Graph delete_vertices(const Graph& g, const VertexSet& s) {
    for (VertexId v : s)
        if (!g.has_vertex(v))
            throw std::invalid_argument("delete_vertices: unknown vertex " + std::to_string(v));
    return induced_subgraph(g, set_difference(g.vertices(), s));
}

bool is_connected(const Graph& g) {
    return g.order() <= 1 || components(g).size() == 1;
}

std::optional<std::vector<VertexId>> lex_shortest_path(const Graph& g, VertexId from,
                                                       const VertexSet& targets) {
    if (!g.has_vertex(from)) throw std::invalid_argument("lex_shortest_path: unknown source");
    if (targets.empty()) return std::nullopt;
    const VertexSet& verts = g.vertices();
    auto idx = [&](VertexId v) {
        return static_cast<std::size_t>(std::lower_bound(verts.begin(), verts.end(), v) - verts.begin());
    };
    // Multi-source BFS from the targets: dist[v] = distance to nearest target.
    constexpr int kInf = -1;
    std::vector<int> dist(verts.size(), kInf);
    std::queue<VertexId> q;
    for (VertexId t : targets) {
        if (!g.has_vertex(t)) throw std::invalid_argument("lex_shortest_path: unknown target");
        dist[idx(t)] = 0;
        q.push(t);
    }
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : g.neighbors(v)) {
            if (dist[idx(w)] == kInf) {
                dist[idx(w)] = dist[idx(v)] + 1;
                q.push(w);
            }
        }
    }
    if (dist[idx(from)] == kInf) return std::nullopt;
    // Walk downhill choosing the least-id neighbor each step: the vertex
    // sequence is lexicographically least among all shortest paths.
    std::vector<VertexId> path{from};
    VertexId cur = from;
    while (dist[idx(cur)] != 0) {
        for (VertexId w : g.neighbors(cur)) {
            if (dist[idx(w)] == dist[idx(cur)] - 1) {
                path.push_back(w);
                cur = w;
                break;
            }
        }
    }
    return path;
}

} // namespace rminor
