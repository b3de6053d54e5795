#ifndef RK4_COLORING_HPP
#define RK4_COLORING_HPP

#include <optional>

#include "rk4/graph.hpp"

namespace rk4 {

/// Proper vertex coloring with palette {1, ..., k}.
struct ProperColoring {
    int k = 0;
    std::vector<int> color;  // per vertex, 1-based

    bool valid_in(const Graph& g) const;
};

/// Witness that S is not colorful: a proper coloring in which no vertex of
/// S receives missing_color.
struct ColoringCert {
    ProperColoring coloring;
    int missing_color = 0;
    VertexSet roots;

    bool valid_in(const Graph& g) const;
};

/// Exact chromatic number via backtracking with a clique lower bound;
/// nullopt if it exceeds max_k.
std::optional<int> chromatic_number(const Graph& g, int max_k = 6);

/// Proper k-coloring where vertex v's color must avoid forbidden[v]
/// (bitmask over colors, bit c-1 = color c banned). Deterministic:
/// vertices by decreasing degree, colors ascending.
std::optional<ProperColoring> color_with_forbidden(const Graph& g, int k,
                                                   const std::vector<unsigned>& forbidden);
std::optional<ProperColoring> proper_coloring(const Graph& g, int k);

/// First j in 1..k admitting a proper k-coloring with color j absent
/// from S; nullopt if none exists.
std::optional<ColoringCert> find_avoiding_coloring(const Graph& g, const VertexSet& s, int k);

bool is_colorful(const Graph& g, const VertexSet& s);

/// Lexicographically smallest permutation of {1..k} with pi(from)=to for
/// every constraint and pi(avoid.first) != avoid.second when present.
std::optional<std::vector<int>> match_permutation(
    const std::vector<std::pair<int, int>>& constraints,
    std::optional<std::pair<int, int>> avoid, int k);

int apply_permutation(const std::vector<int>& perm, int color);

/// Common extension of two side colorings that agree on the separator.
/// Throws on separator disagreement.
ProperColoring glue_colorings(const Graph& g, const ProperColoring& ca, const VertexSet& a,
                              const ProperColoring& cb, const VertexSet& b);

}  // namespace rk4

#endif
