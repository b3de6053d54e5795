#include "rk4/coloring.hpp"

#include <algorithm>
#include <numeric>

namespace rk4 {

bool ProperColoring::valid_in(const Graph& g) const {
    if (static_cast<int>(color.size()) != g.n()) return false;
    for (int v = 0; v < g.n(); ++v)
        if (color[v] < 1 || color[v] > k) return false;
    for (auto [u, v] : g.edges())
        if (color[u] == color[v]) return false;
    return true;
}

bool ColoringCert::valid_in(const Graph& g) const {
    if (!coloring.valid_in(g)) return false;
    if (missing_color < 1 || missing_color > coloring.k) return false;
    for (int v : roots) {
        if (v < 0 || v >= g.n()) return false;
        if (coloring.color[v] == missing_color) return false;
    }
    return true;
}

namespace {

// Vertex order: decreasing degree, ties by id.
std::vector<int> search_order(const Graph& g) {
    std::vector<int> order(g.n());
    std::iota(order.begin(), order.end(), 0);
    std::stable_sort(order.begin(), order.end(),
                     [&](int u, int v) { return g.degree(u) > g.degree(v); });
    return order;
}

bool color_rec(const Graph& g, const std::vector<int>& order, size_t pos, int k,
               const std::vector<unsigned>& forbidden, std::vector<int>& color) {
    if (pos == order.size()) return true;
    int v = order[pos];
    for (int c = 1; c <= k; ++c) {
        if (forbidden[v] & (1u << (c - 1))) continue;
        bool ok = true;
        for (int w : g.neighbors(v))
            if (color[w] == c) {
                ok = false;
                break;
            }
        if (!ok) continue;
        color[v] = c;
        if (color_rec(g, order, pos + 1, k, forbidden, color)) return true;
        color[v] = 0;
    }
    return false;
}

int greedy_clique_bound(const Graph& g) {
    auto order = search_order(g);
    VertexSet clique;
    for (int v : order) {
        bool ok = true;
        for (int u : clique)
            if (!g.adjacent(u, v)) {
                ok = false;
                break;
            }
        if (ok) clique.push_back(v);
    }
    return static_cast<int>(clique.size());
}

}  // namespace

std::optional<ProperColoring> color_with_forbidden(const Graph& g, int k,
                                                   const std::vector<unsigned>& forbidden) {
    std::vector<int> color(g.n(), 0);
    auto order = search_order(g);
    if (!color_rec(g, order, 0, k, forbidden, color)) return std::nullopt;
    return ProperColoring{k, std::move(color)};
}

std::optional<ProperColoring> proper_coloring(const Graph& g, int k) {
    return color_with_forbidden(g, k, std::vector<unsigned>(g.n(), 0u));
}

std::optional<int> chromatic_number(const Graph& g, int max_k) {
    if (g.n() == 0) return 0;
    int lb = greedy_clique_bound(g);
    if (lb > max_k) return std::nullopt;
    for (int k = std::max(1, lb); k <= max_k; ++k) {
        // Symmetry break: pin the first vertex in search order to color 1.
        std::vector<unsigned> forbidden(g.n(), 0u);
        auto order = search_order(g);
        forbidden[order[0]] = ~1u & ((1u << k) - 1);
        if (color_with_forbidden(g, k, forbidden)) return k;
    }
    return std::nullopt;
}

std::optional<ColoringCert> find_avoiding_coloring(const Graph& g, const VertexSet& s, int k) {
    for (int j = 1; j <= k; ++j) {
        std::vector<unsigned> forbidden(g.n(), 0u);
        for (int v : s) forbidden[v] |= 1u << (j - 1);
        if (auto c = color_with_forbidden(g, k, forbidden))
            return ColoringCert{std::move(*c), j, s};
    }
    return std::nullopt;
}

bool is_colorful(const Graph& g, const VertexSet& s) {
    auto chi = chromatic_number(g, 6);
    if (!chi) throw std::invalid_argument("is_colorful: chromatic number exceeds cap");
    if (*chi == 0) return false;
    return !find_avoiding_coloring(g, s, *chi).has_value();
}

std::optional<std::vector<int>> match_permutation(
    const std::vector<std::pair<int, int>>& constraints,
    std::optional<std::pair<int, int>> avoid, int k) {
    for (auto [from, to] : constraints)
        if (from < 1 || from > k || to < 1 || to > k)
            throw std::invalid_argument("match_permutation: color out of range");
    std::vector<int> perm(k);
    std::iota(perm.begin(), perm.end(), 1);
    do {
        bool ok = true;
        for (auto [from, to] : constraints)
            if (perm[from - 1] != to) {
                ok = false;
                break;
            }
        if (ok && avoid && perm[avoid->first - 1] == avoid->second) ok = false;
        if (ok) return perm;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::nullopt;
}

int apply_permutation(const std::vector<int>& perm, int color) { return perm.at(color - 1); }

ProperColoring glue_colorings(const Graph& g, const ProperColoring& ca, const VertexSet& a,
                              const ProperColoring& cb, const VertexSet& b) {
    if (ca.k != cb.k) throw std::invalid_argument("glue_colorings: palette mismatch");
    for (int v : set_intersection(a, b))
        if (ca.color.at(v) != cb.color.at(v))
            throw std::invalid_argument("glue_colorings: disagreement on separator");
    ProperColoring out{ca.k, std::vector<int>(g.n(), 0)};
    for (int v : a) out.color[v] = ca.color.at(v);
    for (int v : b) out.color[v] = cb.color.at(v);
    if (!out.valid_in(g)) throw std::invalid_argument("glue_colorings: result not proper");
    return out;
}

}  // namespace rk4
