#ifndef RK4_ROOTED_MINORS_HPP
#define RK4_ROOTED_MINORS_HPP

#include <optional>

#include "rk4/graph.hpp"

namespace rk4 {

/// K_t-minor certificate: t disjoint connected branch sets, pairwise
/// adjacent, each meeting the root set (when roots are nonempty).
struct RootedMinorCert {
    int t = 0;
    std::vector<VertexSet> branch_sets;
    VertexSet roots;
};

bool verify_cert(const Graph& g, const RootedMinorCert& cert);

struct OracleOptions {
    int cap = 12;           // largest n the exhaustive search accepts
    bool ignore_cap = false;
};

/// Exhaustive search for an S-rooted K_t-minor. Branch sets are enumerated
/// as connected vertex subsets with strictly increasing minimum vertex, so
/// the first certificate found is canonical. Rejects n > cap unless
/// ignore_cap is set.
std::optional<RootedMinorCert> brute_force_rooted_kt(const Graph& g, const VertexSet& roots,
                                                     int t, const OracleOptions& opt = {});

/// Greedily shrink branch sets while all certificate invariants hold.
RootedMinorCert minimalize_cert(const Graph& g, RootedMinorCert cert);

/// Rooted K3 detection per the two-of-three-share-a-component condition;
/// constructive extraction validated by verify_cert, oracle fallback.
std::optional<RootedMinorCert> rooted_k3(const Graph& g, int a, int b, int c,
                                         const OracleOptions& opt = {});

/// True iff for every vertex v at least two of a,b,c lie in a common
/// component of G - v.
bool k3_condition_holds(const Graph& g, int a, int b, int c);

std::optional<RootedMinorCert> rooted_k4(const Graph& g, int a, int b, int c, int d,
                                         const OracleOptions& opt = {});

/// Substitute the three separator roots of an inner certificate by
/// connected attachment sets on the far side of the separation.
/// attachments: (c_i, A_i) with c_i in A_i. Throws if an A_i intersects
/// the inner certificate outside c_i or the A_i are not disjoint.
RootedMinorCert extend_k4_through_separator(const Graph& g, const RootedMinorCert& inner,
                                            const std::vector<std::pair<int, VertexSet>>& attachments,
                                            const VertexSet& final_roots);

}  // namespace rk4

#endif
