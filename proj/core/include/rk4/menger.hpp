#ifndef RK4_MENGER_HPP
#define RK4_MENGER_HPP

#include "rk4/graph.hpp"

namespace rk4 {

/// Maximum collection of pairwise vertex-disjoint A-B paths, at most k of
/// them. Endpoints included in the disjointness requirement; a vertex in
/// A n B yields a length-0 path.
std::vector<Path> disjoint_paths_between_sets(const Graph& g, const VertexSet& a,
                                              const VertexSet& b, int k);

/// Fan version: paths from v to A, pairwise sharing only v. Rejects v in A.
std::vector<Path> fan_paths(const Graph& g, int v, const VertexSet& a, int k);

/// Up to k internally disjoint u-v paths (shared endpoints allowed).
std::vector<Path> internally_disjoint_paths(const Graph& g, int u, int v, int k);

}  // namespace rk4

#endif
