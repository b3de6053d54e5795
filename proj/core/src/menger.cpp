#include "rk4/menger.hpp"

#include <algorithm>
#include <queue>

namespace rk4 {

namespace {

struct Edge {
    int to, cap, orig, rev;
};

struct Net {
    std::vector<std::vector<Edge>> g;
    int source, sink;

    explicit Net(int nodes) : g(nodes) {}
    void add(int from, int to, int cap) {
        g[from].push_back({to, cap, cap, static_cast<int>(g[to].size())});
        g[to].push_back({from, 0, 0, static_cast<int>(g[from].size()) - 1});
    }
    // Edmonds-Karp; BFS explores edges in insertion order, so results are
    // deterministic and augmenting paths are shortest first.
    int max_flow(int limit) {
        int flow = 0;
        while (flow < limit) {
            std::vector<std::pair<int, int>> parent(g.size(), {-1, -1});
            std::queue<int> q;
            q.push(source);
            parent[source] = {source, -1};
            while (!q.empty() && parent[sink].first < 0) {
                int x = q.front();
                q.pop();
                for (size_t i = 0; i < g[x].size(); ++i)
                    if (g[x][i].cap > 0 && parent[g[x][i].to].first < 0) {
                        parent[g[x][i].to] = {x, static_cast<int>(i)};
                        q.push(g[x][i].to);
                    }
            }
            if (parent[sink].first < 0) break;
            for (int x = sink; x != source;) {
                auto [px, pi] = parent[x];
                g[px][pi].cap--;
                g[x][g[px][pi].rev].cap++;
                x = px;
            }
            ++flow;
        }
        return flow;
    }
};

// Walk flow-carrying edges from `start` (an out-node) to the sink,
// consuming them; smallest-id continuation first. If a node repeats, the
// loop between the occurrences is a flow cycle whose units have just been
// consumed, so the walk is truncated back to the first occurrence.
std::vector<int> extract_walk(Net& net, int start, int sink, int n) {
    std::vector<int> nodes{start};
    int cur = start;
    while (cur != sink) {
        // a forward edge carrying flow has cap < orig
        int best = -1, best_to = -1;
        for (size_t i = 0; i < net.g[cur].size(); ++i) {
            Edge& e = net.g[cur][i];
            if (e.orig > 0 && e.cap < e.orig) {
                if (best < 0 || e.to < best_to) {
                    best = static_cast<int>(i);
                    best_to = e.to;
                }
            }
        }
        if (best < 0) throw std::logic_error("flow decomposition: dead end");
        Edge& e = net.g[cur][best];
        net.g[e.to][e.rev].cap--;  // consume the unit
        e.cap++;
        cur = e.to;
        auto it = std::find(nodes.begin(), nodes.end(), cur);
        if (it != nodes.end())
            nodes.erase(it + 1, nodes.end());
        else
            nodes.push_back(cur);
    }
    std::vector<int> walk;
    for (int node : nodes)
        if (node != start && node < 2 * n && node % 2 == 0) walk.push_back(node / 2);
    return walk;
}

}  // namespace

std::vector<Path> disjoint_paths_between_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b, int k) {
    if (a.empty() || b.empty())
        throw std::invalid_argument("disjoint_paths_between_sets: empty endpoint set");
    if (k <= 0) return {};
    int n = g.n();
    Net net(2 * n + 2);
    net.source = 2 * n;
    net.sink = 2 * n + 1;
    for (int i = 0; i < n; ++i) net.add(2 * i, 2 * i + 1, 1);
    for (auto [u, v] : g.edges()) {
        net.add(2 * u + 1, 2 * v, 1);
        net.add(2 * v + 1, 2 * u, 1);
    }
    for (int s : a) net.add(net.source, 2 * s, 1);
    for (int t : b) net.add(2 * t + 1, net.sink, 1);
    net.max_flow(k);
    std::vector<Path> paths;
    for (int s : a) {
        // source -> in(s) carrying flow?
        for (Edge& e : net.g[net.source]) {
            if (e.to == 2 * s && e.cap < e.orig) {
                net.g[e.to][e.rev].cap--;
                e.cap++;
                // consume in(s) -> out(s) as well
                for (Edge& f : net.g[2 * s])
                    if (f.to == 2 * s + 1 && f.orig > 0 && f.cap < f.orig) {
                        net.g[f.to][f.rev].cap--;
                        f.cap++;
                        break;
                    }
                std::vector<int> walk = extract_walk(net, 2 * s + 1, net.sink, n);
                walk.insert(walk.begin(), s);
                paths.push_back(Path{std::move(walk)});
            }
        }
    }
    return paths;
}

std::vector<Path> fan_paths(const Graph& g, int v, const VertexSet& a, int k) {
    if (set_contains(a, v)) throw std::invalid_argument("fan_paths: v in A");
    if (a.empty()) throw std::invalid_argument("fan_paths: empty target set");
    if (k <= 0) return {};
    int n = g.n();
    Net net(2 * n + 2);
    net.source = 2 * n;
    net.sink = 2 * n + 1;
    for (int i = 0; i < n; ++i) net.add(2 * i, 2 * i + 1, i == v ? k : 1);
    for (auto [x, y] : g.edges()) {
        net.add(2 * x + 1, 2 * y, 1);
        net.add(2 * y + 1, 2 * x, 1);
    }
    net.add(net.source, 2 * v, k);
    for (int t : a) net.add(2 * t + 1, net.sink, 1);
    int flow = net.max_flow(k);
    std::vector<Path> paths;
    for (int i = 0; i < flow; ++i) {
        auto walk = extract_walk(net, 2 * v + 1, net.sink, n);
        walk.insert(walk.begin(), v);
        paths.push_back(Path{std::move(walk)});
    }
    return paths;
}

std::vector<Path> internally_disjoint_paths(const Graph& g, int u, int v, int k) {
    if (u == v) throw std::invalid_argument("internally_disjoint_paths: u == v");
    if (k <= 0) return {};
    int n = g.n();
    Net net(2 * n + 2);
    net.source = 2 * n;
    net.sink = 2 * n + 1;
    for (int i = 0; i < n; ++i) net.add(2 * i, 2 * i + 1, (i == u || i == v) ? k : 1);
    for (auto [x, y] : g.edges()) {
        net.add(2 * x + 1, 2 * y, 1);
        net.add(2 * y + 1, 2 * x, 1);
    }
    net.add(net.source, 2 * u, k);
    net.add(2 * v + 1, net.sink, k);
    int flow = net.max_flow(k);
    std::vector<Path> paths;
    for (int i = 0; i < flow; ++i) {
        auto walk = extract_walk(net, 2 * u + 1, net.sink, n);
        walk.insert(walk.begin(), u);
        paths.push_back(Path{std::move(walk)});
    }
    return paths;
}

}  // namespace rk4
