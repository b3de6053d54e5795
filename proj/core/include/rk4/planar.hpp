#ifndef RK4_PLANAR_HPP
#define RK4_PLANAR_HPP

#include <optional>
#include <variant>

#include "rk4/graph.hpp"

namespace rk4 {

/// Combinatorial embedding: per-vertex cyclic neighbor order plus the
/// face walks it induces. outer_face indexes into faces.
struct Embedding {
    std::vector<std::vector<int>> rotation;
    std::vector<std::vector<int>> faces;  // directed closed walks (vertex sequences)
    int outer_face = 0;
};

/// A subgraph of G that is a subdivision of K5 or K3,3.
struct KuratowskiWitness {
    enum class Kind { K5, K33 };
    Kind kind;
    std::vector<std::pair<int, int>> edges;
    VertexSet branch_vertices;
};

using PlanarityResult = std::variant<Embedding, KuratowskiWitness>;

/// G plus one new vertex (id = base.n()) adjacent exactly to S.
struct ApexGraph {
    Graph graph;
    int apex;
    VertexSet s;
};

ApexGraph apex_graph(const Graph& g, const VertexSet& s);

/// Planarity with certificates: either a valid rotation system or a
/// structurally verified Kuratowski subdivision.
PlanarityResult planarity(const Graph& g);
bool planar_decide(const Graph& g);

/// Recompute faces from a rotation system (orbit tracing) and check the
/// per-component Euler formula. Independent of how the embedding was made.
bool validate_embedding(const Graph& g, const Embedding& emb);
std::vector<std::vector<int>> trace_faces(const Graph& g,
                                          const std::vector<std::vector<int>>& rotation);

bool verify_kuratowski(const Graph& g, const KuratowskiWitness& w);

/// Embedding of G with all roots on one face (realized via the apex
/// trick); nullopt iff the apex graph is non-planar.
std::optional<Embedding> embed_with_roots_on_outer_face(const Graph& g, const VertexSet& roots);

struct TwoCut {
    int u, v;
    std::vector<VertexSet> component_partition;
};

/// First vertex pair (lex order) whose removal leaves >= 3 components.
std::optional<TwoCut> two_cut_three_components(const Graph& g);

}  // namespace rk4

#endif
