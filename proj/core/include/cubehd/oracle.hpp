#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <unordered_map>
#include <utility>
#include <vector>

#include "cubehd/builder.hpp"
#include "cubehd/errors.hpp"
#include "cubehd/interval_model.hpp"

// Ground-truth cubicity for tiny graphs. Unit interval graphs are
// enumerated through their proper-interval ordering characterization
// (an ordering in which every vertex's later neighbors form a prefix and
// the last-neighbor map is nondecreasing) instead of discretized real
// starts: the device is finite, exact, and immune to epsilon disputes
// about touching intervals. Proper interval = unit interval is Roberts'
// classical equivalence; it is assumed here as an external mathematical
// fact and every enumerated ordering is converted back to an explicit
// start assignment and re-verified, so nothing rests on it silently.

namespace cubehd {

inline constexpr int kMaxRecognitionVertices = 10;
inline constexpr int kMaxEnumerationVertices = 7;  // relaxable to 8; n! * Catalan(n) orderings

struct SmallGraph {
    int n = 0;
    std::array<std::uint16_t, kMaxRecognitionVertices> adj{};

    static SmallGraph with_vertices(int n);

    void add_edge(int i, int j);
    bool adjacent(int i, int j) const { return (adj[i] >> j) & 1; }
    int edge_count() const;

    /// Index of the unordered pair (i, j), i < j, in the packed C(n,2)-bit
    /// edge mask: pairs sorted by (i, j).
    static int pair_index(int n, int i, int j);
    std::uint64_t edge_mask() const;
    std::uint64_t nonedge_mask() const;
};

/// The d-cube (d <= 3) as a SmallGraph, vertex labels as in Hypercube.
SmallGraph hypercube_graph(int d);

// A proper-interval ordering with its last-neighbor map: order is a
// permutation of the vertices, reach is nondecreasing with reach[i] >= i,
// and the induced edges are {(order[i], order[j]) : i < j <= reach[i]}.
struct ProperOrderRep {
    std::vector<int> order;
    std::vector<int> reach;

    std::uint64_t induced_edge_mask(int n) const;

    /// Explicit unit interval representation realizing the ordering,
    /// starts indexed by vertex id. Solves the difference constraints
    /// exactly over integers scaled by a common denominator.
    UnitIntervalRep to_unit_interval_rep() const;
};

/// Recognition with witness: searches for an ordering in which no vertex
/// "looks over" a non-neighbor (for i < j < k, an edge (i,k) forces edges
/// (i,j) and (j,k)). Succeeds exactly on unit interval graphs.
std::optional<ProperOrderRep> is_unit_interval(const SmallGraph& g);

struct SupergraphSet {
    std::vector<std::uint64_t> edge_masks;  // distinct, each a superset of E(G)
    std::unordered_map<std::uint64_t, ProperOrderRep> witnesses;
};

/// All distinct unit-interval edge sets containing E(G), each with one
/// witness ordering. Guarded by the enumeration limit.
SupergraphSet unit_interval_supergraphs(const SmallGraph& g,
                                        int max_n = kMaxEnumerationVertices);

struct CubicityResult {
    bool exceeded = false;  // no cover within t_max
    int cubicity = 0;       // meaningful when !exceeded
    std::vector<ProperOrderRep> certificate;  // orderings whose edge intersection is E(G)
};

/// Smallest t <= t_max such that t unit-interval supergraphs of G
/// intersect to exactly E(G): a set cover over the non-edges, each
/// candidate covering the non-edges it excludes.
CubicityResult exact_cubicity(const SmallGraph& g, int t_max,
                              int max_n = kMaxEnumerationVertices);

struct CertifyResult {
    bool ok = false;
    std::optional<std::pair<Vertex, Vertex>> first_diff;
    bool expected_adjacent = false;  // hypercube truth at the differing pair
};

/// Independent certificate check for a seed set: materializes every layer
/// as an explicit start assignment, recomputes adjacency from the starts
/// alone, and compares the intersection against the hypercube edge by
/// edge. Success certifies cubicity(H_d) <= |S|. Exhaustive, d <= 10.
CertifyResult certify_representation(const SeedSet& s);

}  // namespace cubehd
