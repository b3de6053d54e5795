#include "rk4/graph.hpp"

#include <algorithm>
#include <queue>
#include <set>

namespace rk4 {

VertexSet make_set(std::vector<int> v) {
    std::sort(v.begin(), v.end());
    v.erase(std::unique(v.begin(), v.end()), v.end());
    return v;
}

VertexSet set_union(const VertexSet& a, const VertexSet& b) {
    VertexSet out;
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

bool set_contains(const VertexSet& s, int v) {
    return std::binary_search(s.begin(), s.end(), v);
}

Graph Graph::from_edges(int n, const std::vector<std::pair<int, int>>& edges) {
    if (n < 0) throw std::invalid_argument("Graph: negative vertex count");
    Graph g;
    g.adj_.assign(n, {});
    for (auto [u, v] : edges) {
        if (u < 0 || u >= n || v < 0 || v >= n)
            throw std::invalid_argument("Graph: edge endpoint out of range");
        if (u == v) throw std::invalid_argument("Graph: self-loop");
        g.adj_[u].push_back(v);
        g.adj_[v].push_back(u);
    }
    for (auto& nb : g.adj_) {
        std::sort(nb.begin(), nb.end());
        nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
    }
    return g;
}

bool Graph::adjacent(int u, int v) const {
    const auto& nb = adj_.at(u);
    return std::binary_search(nb.begin(), nb.end(), v);
}

int Graph::edge_count() const {
    int deg_sum = 0;
    for (const auto& nb : adj_) deg_sum += static_cast<int>(nb.size());
    return deg_sum / 2;
}

std::vector<std::pair<int, int>> Graph::edges() const {
    std::vector<std::pair<int, int>> out;
    for (int u = 0; u < n(); ++u)
        for (int v : adj_[u])
            if (u < v) out.emplace_back(u, v);
    return out;
}

bool Path::valid_in(const Graph& g) const {
    if (vertices.empty()) return false;
    std::set<int> seen;
    for (size_t i = 0; i < vertices.size(); ++i) {
        int v = vertices[i];
        if (v < 0 || v >= g.n()) return false;
        if (!seen.insert(v).second) return false;
        if (i > 0 && !g.adjacent(vertices[i - 1], v)) return false;
    }
    return true;
}

bool Separation::valid_in(const Graph& g) const {
    VertexSet all(static_cast<size_t>(g.n()));
    for (int i = 0; i < g.n(); ++i) all[i] = i;
    if (set_union(a, b) != all) return false;
    VertexSet a_only = set_difference(a, b);
    VertexSet b_only = set_difference(b, a);
    if (a_only.empty() || b_only.empty()) return false;
    for (int u : a_only)
        for (int v : g.neighbors(u))
            if (set_contains(b_only, v)) return false;
    return true;
}

std::vector<VertexSet> components(const Graph& g) {
    std::vector<VertexSet> comps;
    std::vector<bool> seen(g.n(), false);
    for (int s = 0; s < g.n(); ++s) {
        if (seen[s]) continue;
        VertexSet comp;
        std::queue<int> q;
        q.push(s);
        seen[s] = true;
        while (!q.empty()) {
            int u = q.front();
            q.pop();
            comp.push_back(u);
            for (int v : g.neighbors(u))
                if (!seen[v]) {
                    seen[v] = true;
                    q.push(v);
                }
        }
        std::sort(comp.begin(), comp.end());
        comps.push_back(std::move(comp));
    }
    return comps;
}

bool is_connected(const Graph& g) { return components(g).size() <= 1; }

namespace {

// Unit-vertex-capacity max flow on the split digraph; used for local
// connectivity. u and v are uncapacitated.
int split_flow(const Graph& g, int u, int v, int limit) {
    int n = g.n();
    // node 2i = in, 2i+1 = out
    struct Edge {
        int to, cap, rev;
    };
    std::vector<std::vector<Edge>> net(2 * n);
    auto add_edge = [&](int from, int to, int cap) {
        net[from].push_back({to, cap, static_cast<int>(net[to].size())});
        net[to].push_back({from, 0, static_cast<int>(net[from].size()) - 1});
    };
    for (int i = 0; i < n; ++i) add_edge(2 * i, 2 * i + 1, (i == u || i == v) ? limit : 1);
    for (auto [a, b] : g.edges()) {
        add_edge(2 * a + 1, 2 * b, 1);
        add_edge(2 * b + 1, 2 * a, 1);
    }
    int source = 2 * u + 1, sink = 2 * v;
    int flow = 0;
    while (flow < limit) {
        std::vector<std::pair<int, int>> parent(2 * n, {-1, -1});
        std::queue<int> q;
        q.push(source);
        parent[source] = {source, -1};
        while (!q.empty() && parent[sink].first < 0) {
            int x = q.front();
            q.pop();
            for (size_t i = 0; i < net[x].size(); ++i) {
                const Edge& e = net[x][i];
                if (e.cap > 0 && parent[e.to].first < 0) {
                    parent[e.to] = {x, static_cast<int>(i)};
                    q.push(e.to);
                }
            }
        }
        if (parent[sink].first < 0) break;
        for (int x = sink; x != source;) {
            auto [px, pi] = parent[x];
            net[px][pi].cap--;
            net[x][net[px][pi].rev].cap++;
            x = px;
        }
        ++flow;
    }
    return flow;
}

}  // namespace

int local_connectivity(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("local_connectivity: u == v");
    return split_flow(g, u, v, g.n());
}

int vertex_connectivity(const Graph& g) {
    int n = g.n();
    if (n <= 1) return 0;
    if (!is_connected(g)) return 0;
    bool complete = (g.edge_count() == n * (n - 1) / 2);
    if (complete) return n - 1;
    int best = n;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (!g.adjacent(u, v)) best = std::min(best, local_connectivity(g, u, v));
    return best;
}

bool is_k_connected(const Graph& g, int k) {
    if (k <= 0) throw std::invalid_argument("is_k_connected: k must be positive");
    return g.n() > k && vertex_connectivity(g) >= k;
}

std::vector<Separation> separations_up_to_order(const Graph& g, int max_order) {
    if (max_order > 3) throw std::invalid_argument("separations_up_to_order: max_order > 3");
    int n = g.n();
    std::set<std::pair<VertexSet, VertexSet>> seen;
    // Enumerate separator candidates X of size 0..max_order.
    std::vector<VertexSet> separators{{}};
    for (int size = 1; size <= max_order; ++size) {
        std::vector<int> idx(size);
        for (int i = 0; i < size; ++i) idx[i] = i;
        if (size > n) break;
        while (true) {
            separators.emplace_back(idx.begin(), idx.end());
            int i = size - 1;
            while (i >= 0 && idx[i] == n - size + i) --i;
            if (i < 0) break;
            ++idx[i];
            for (int j = i + 1; j < size; ++j) idx[j] = idx[j - 1] + 1;
        }
    }
    for (const VertexSet& x : separators) {
        VertexSet rest;
        for (int v = 0; v < n; ++v)
            if (!set_contains(x, v)) rest.push_back(v);
        if (rest.empty()) continue;
        auto comps = components(induced(g, rest).graph);
        int r = static_cast<int>(comps.size());
        if (r < 2) continue;
        auto sub = induced(g, rest);
        // Map component blocks back to original ids.
        std::vector<VertexSet> blocks;
        for (auto& c : comps) {
            VertexSet orig;
            for (int v : c) orig.push_back(sub.new_to_old[v]);
            std::sort(orig.begin(), orig.end());
            blocks.push_back(std::move(orig));
        }
        // Every nonempty proper union of blocks vs the rest.
        for (unsigned mask = 1; mask + 1 < (1u << r); ++mask) {
            VertexSet side_a = x, side_b = x;
            for (int i = 0; i < r; ++i) {
                if (mask & (1u << i))
                    side_a = set_union(side_a, blocks[i]);
                else
                    side_b = set_union(side_b, blocks[i]);
            }
            VertexSet a_only = set_difference(side_a, side_b);
            VertexSet b_only = set_difference(side_b, side_a);
            if (a_only.front() > b_only.front()) std::swap(side_a, side_b);
            seen.emplace(side_a, side_b);
        }
    }
    std::vector<Separation> out;
    for (auto& [a, b] : seen) out.push_back(Separation{a, b});
    std::sort(out.begin(), out.end(), [](const Separation& x, const Separation& y) {
        int ox = x.order(), oy = y.order();
        if (ox != oy) return ox < oy;
        if (x.a != y.a) return x.a < y.a;
        return x.b < y.b;
    });
    return out;
}

MappedGraph induced(const Graph& g, const VertexSet& x) {
    for (int v : x)
        if (v < 0 || v >= g.n()) throw std::invalid_argument("induced: vertex out of range");
    MappedGraph out;
    out.old_to_new.assign(g.n(), -1);
    out.new_to_old = x;
    for (size_t i = 0; i < x.size(); ++i) out.old_to_new[x[i]] = static_cast<int>(i);
    std::vector<std::pair<int, int>> edges;
    for (int u : x)
        for (int v : g.neighbors(u))
            if (u < v && out.old_to_new[v] >= 0)
                edges.emplace_back(out.old_to_new[u], out.old_to_new[v]);
    out.graph = Graph::from_edges(static_cast<int>(x.size()), edges);
    return out;
}

MappedGraph identify_vertices(const Graph& g, int u, int v) {
    if (u == v) throw std::invalid_argument("identify_vertices: u == v");
    if (u < 0 || u >= g.n() || v < 0 || v >= g.n())
        throw std::invalid_argument("identify_vertices: vertex out of range");
    int keep = std::min(u, v), drop = std::max(u, v);
    MappedGraph out;
    out.old_to_new.assign(g.n(), -1);
    int next = 0;
    for (int w = 0; w < g.n(); ++w) {
        if (w == drop) continue;
        out.old_to_new[w] = next++;
        out.new_to_old.push_back(w);
    }
    out.old_to_new[drop] = out.old_to_new[keep];
    std::vector<std::pair<int, int>> edges;
    for (auto [a, b] : g.edges()) {
        int na = out.old_to_new[a], nb = out.old_to_new[b];
        if (na != nb) edges.emplace_back(na, nb);
    }
    out.graph = Graph::from_edges(g.n() - 1, edges);
    return out;
}

std::optional<Path> shortest_path_between(const Graph& g, const VertexSet& from,
                                          const VertexSet& to, const VertexSet& forbidden) {
    std::vector<int> prev(g.n(), -2);
    std::queue<int> q;
    for (int s : from)
        if (!set_contains(forbidden, s)) {
            prev[s] = -1;
            q.push(s);
        }
    int hit = -1;
    for (int s : from)
        if (prev[s] == -1 && set_contains(to, s)) hit = std::min(hit == -1 ? s : hit, s);
    while (hit < 0 && !q.empty()) {
        int x = q.front();
        q.pop();
        for (int y : g.neighbors(x)) {
            if (prev[y] != -2 || set_contains(forbidden, y)) continue;
            prev[y] = x;
            if (set_contains(to, y)) {
                hit = y;
                break;
            }
            // interior must avoid the source set
            if (!set_contains(from, y)) q.push(y);
        }
    }
    if (hit < 0) return std::nullopt;
    std::vector<int> rev;
    for (int x = hit; x != -1; x = prev[x]) rev.push_back(x);
    std::reverse(rev.begin(), rev.end());
    // Trim so interior avoids both endpoint sets.
    size_t start = 0;
    for (size_t i = 0; i < rev.size(); ++i)
        if (set_contains(from, rev[i])) start = i;
    return Path{std::vector<int>(rev.begin() + start, rev.end())};
}

VertexSet map_set(const VertexSet& s, const std::vector<int>& old_to_new) {
    std::vector<int> out;
    for (int v : s) {
        int m = old_to_new.at(v);
        if (m >= 0) out.push_back(m);
    }
    return make_set(std::move(out));
}

}  // namespace rk4
