#ifndef RK4_GRAPH_HPP
#define RK4_GRAPH_HPP

#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace rk4 {

// Sorted, duplicate-free vector of vertex ids.
using VertexSet = std::vector<int>;

VertexSet set_union(const VertexSet& a, const VertexSet& b);
VertexSet set_intersection(const VertexSet& a, const VertexSet& b);
VertexSet set_difference(const VertexSet& a, const VertexSet& b);
bool set_contains(const VertexSet& s, int v);
VertexSet make_set(std::vector<int> v);

/// Immutable simple undirected graph over dense vertex ids 0..n-1.
/// Adjacency lists are sorted; no self-loops, no parallel edges.
class Graph {
public:
    Graph() = default;
    static Graph from_edges(int n, const std::vector<std::pair<int, int>>& edges);

    int n() const { return static_cast<int>(adj_.size()); }
    const std::vector<int>& neighbors(int v) const { return adj_.at(v); }
    int degree(int v) const { return static_cast<int>(adj_.at(v).size()); }
    bool adjacent(int u, int v) const;
    int edge_count() const;
    std::vector<std::pair<int, int>> edges() const;  // u < v, sorted

    bool operator==(const Graph& other) const { return adj_ == other.adj_; }

private:
    std::vector<std::vector<int>> adj_;
};

/// Path: ordered sequence of distinct vertices, consecutive ones adjacent.
/// Length 0 (single vertex) is allowed.
struct Path {
    std::vector<int> vertices;

    int first() const { return vertices.front(); }
    int last() const { return vertices.back(); }
    bool valid_in(const Graph& g) const;
};

/// Separation (A,B): A u B = V, both strict sides nonempty, no edge
/// across A\B -- B\A. Order is |A n B|.
struct Separation {
    VertexSet a;
    VertexSet b;

    VertexSet separator() const { return set_intersection(a, b); }
    int order() const { return static_cast<int>(separator().size()); }
    bool valid_in(const Graph& g) const;
};

/// Result of an id-remapping graph derivation.
struct MappedGraph {
    Graph graph;
    std::vector<int> old_to_new;  // -1 for dropped vertices
    std::vector<int> new_to_old;  // for identify: merged vertex maps to min(u,v)
};

std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Number of internally disjoint u-v paths (u != v, non-adjacent or not).
int local_connectivity(const Graph& g, int u, int v);
int vertex_connectivity(const Graph& g);
bool is_k_connected(const Graph& g, int k);

/// All separations of order <= max_order (max_order <= 3), canonically
/// ordered: sides flipped so min(A\B) < min(B\A), list sorted by
/// (order, A, B), duplicates removed.
std::vector<Separation> separations_up_to_order(const Graph& g, int max_order);

MappedGraph induced(const Graph& g, const VertexSet& x);
MappedGraph identify_vertices(const Graph& g, int u, int v);

/// BFS shortest path between two vertex sets; nullopt if unreachable.
/// The path's interior avoids both `from` and `to`.
std::optional<Path> shortest_path_between(const Graph& g, const VertexSet& from,
                                          const VertexSet& to,
                                          const VertexSet& forbidden = {});

VertexSet map_set(const VertexSet& s, const std::vector<int>& old_to_new);

}  // namespace rk4

#endif
