#pragma once

#include <cstdint>
#include <span>
#include <stdexcept>
#include <vector>

#include "cubehd/hypercube.hpp"

// Unit interval representations and the distance-layer graph of an apex
// vertex. Interval starts are exact integers scaled by a common
// denominator; the interval of vertex v is
// [starts[v]/denom, starts[v]/denom + 1], closed on both sides. Two unit
// intervals intersect iff their starts differ by at most one unit, so
// adjacency tests are exact integer comparisons with no epsilon policy.

namespace cubehd {

struct UnitIntervalRep {
    std::vector<std::int64_t> starts;  // numerators, one per vertex
    std::int64_t denom = 1;            // common denominator, >= 1

    std::size_t size() const { return starts.size(); }
};

/// Closed unit intervals intersect iff their starts are within one unit.
inline bool rep_adjacent(const UnitIntervalRep& rep, std::size_t u, std::size_t v) {
    if (u == v) throw std::invalid_argument("rep_adjacent: u == v");
    std::int64_t a = rep.starts.at(u), b = rep.starts.at(v);
    return (a > b ? a - b : b - a) <= rep.denom;
}

// Distance-layer representation: vertex u is mapped to the interval
// [dist(apex, u), dist(apex, u) + 1]. Start values are recomputed on
// demand (one XOR-popcount each); materialize() spells out all 2^d of
// them.
struct ApexLayerRep {
    Vertex apex;
    int d;

    int start(Vertex u) const { return hamming_distance(apex, u); }

    UnitIntervalRep materialize() const {
        UnitIntervalRep rep;
        std::uint64_t n = std::uint64_t{1} << d;
        rep.starts.reserve(n);
        for (std::uint64_t u = 0; u < n; ++u)
            rep.starts.push_back(start(static_cast<Vertex>(u)));
        return rep;
    }
};

/// The layer graph of apex x, with the apex itself at [0, 1].
inline ApexLayerRep build_apex_layer(Vertex x, int d) {
    Hypercube cube(d);
    if (!cube.contains(x)) throw std::invalid_argument("apex out of range");
    return ApexLayerRep{x, d};
}

/// Adjacency in the layer graph of x, computed with two XOR-popcounts.
inline bool layer_adjacent(Vertex x, Vertex u, Vertex v) {
    int du = hamming_distance(x, u);
    int dv = hamming_distance(x, v);
    return (du > dv ? du - dv : dv - du) <= 1;
}

/// Adjacency in the edge intersection of all layer graphs of `seeds`.
inline bool intersection_adjacent(std::span<const Vertex> seeds, Vertex u, Vertex v) {
    if (seeds.empty())
        throw std::invalid_argument("intersection_adjacent: empty seed list");
    for (Vertex x : seeds)
        if (!layer_adjacent(x, u, v)) return false;
    return true;
}

// Geometric cube representation induced by an ordered seed list: vertex v
// occupies the axis-parallel unit cube with corner
// (dist(x_1, v), ..., dist(x_k, v)). Corners are integers in [0, d]^k.
struct CubeRepresentation {
    int d = 0;
    std::vector<Vertex> seeds;

    std::size_t dimension() const { return seeds.size(); }

    /// Lower corner of the cube of v, one coordinate per seed.
    std::vector<int> corner(Vertex v) const {
        std::vector<int> c;
        c.reserve(seeds.size());
        for (Vertex x : seeds) c.push_back(hamming_distance(x, v));
        return c;
    }

    /// Geometric intersection test on the explicit coordinates: closed
    /// cubes [c, c+1]^k meet iff they meet in every coordinate.
    bool cubes_intersect(Vertex u, Vertex v) const {
        for (Vertex x : seeds) {
            int cu = hamming_distance(x, u);
            int cv = hamming_distance(x, v);
            int lo = cu > cv ? cu : cv;        // max of lower corners
            int hi = (cu < cv ? cu : cv) + 1;  // min of upper corners
            if (lo > hi) return false;
        }
        return true;
    }
};

inline CubeRepresentation cube_representation(std::vector<Vertex> seeds, int d) {
    if (seeds.empty())
        throw std::invalid_argument("cube_representation: empty seed list");
    Hypercube cube(d);
    for (Vertex x : seeds)
        if (!cube.contains(x)) throw std::invalid_argument("seed out of range");
    return CubeRepresentation{d, std::move(seeds)};
}

}  // namespace cubehd
