#pragma once

#include <bit>
#include <cstdint>
#include <iterator>
#include <stdexcept>
#include <utility>

// Bit-level primitives for the d-dimensional hypercube on the vertex set
// {0, ..., 2^d - 1}. A vertex is a d-bit string packed into an unsigned
// integer; string position 1 is bit 0 (least significant). All functions
// here are pure and safe to call concurrently.

namespace cubehd {

using Vertex = std::uint32_t;
using PositionSet = std::uint32_t;  // subset of bit positions, low d bits

inline constexpr int kMaxDimension = 30;  // keeps 2^d pair enumeration addressable

struct Hypercube {
    int d;

    explicit Hypercube(int dim) : d(dim) {
        if (d < 1 || d > kMaxDimension)
            throw std::invalid_argument("hypercube dimension must be in [1, 30]");
    }

    std::uint64_t num_vertices() const { return std::uint64_t{1} << d; }
    bool contains(Vertex v) const { return v < num_vertices(); }
};

/// Set of positions where the bit strings of u and v differ.
inline PositionSet diff_positions(Vertex u, Vertex v) { return u ^ v; }

/// Hamming distance; equals the shortest-path distance in the hypercube.
inline int hamming_distance(Vertex u, Vertex v) {
    return std::popcount(u ^ v);
}

/// Hypercube adjacency: the strings differ in exactly one position.
inline bool is_adjacent(Vertex u, Vertex v) {
    return std::has_single_bit(u ^ v);
}

/// Among the positions where u and v differ, the number at which x
/// disagrees with u (and therefore agrees with v). Swapping u and v
/// gives the complementary count; the two sum to hamming_distance(u, v).
inline int u_bit_count(Vertex x, Vertex u, Vertex v) {
    return std::popcount((x ^ u) & (u ^ v));
}

/// Pattern of u restricted to `mask`, packed so that the lowest mask
/// position (string position 1) lands in the *most* significant bit of
/// the popcount(mask)-wide result. With that packing, integer order of
/// two patterns on the same mask equals lexicographic order of the
/// strings read from position 1 upward.
inline std::uint32_t lex_pattern(Vertex u, PositionSet mask) {
    std::uint32_t packed = 0;
    while (mask != 0) {
        PositionSet low = mask & (0u - mask);
        packed = (packed << 1) | ((u & low) != 0 ? 1u : 0u);
        mask ^= low;
    }
    return packed;
}

/// Inverse of lex_pattern: spread a packed width-popcount(mask) pattern
/// back onto the mask positions.
inline Vertex expand_pattern(std::uint32_t packed, PositionSet mask) {
    Vertex out = 0;
    int width = std::popcount(mask);
    while (mask != 0) {
        PositionSet low = mask & (0u - mask);
        --width;
        if ((packed >> width) & 1u) out |= low;
        mask ^= low;
    }
    return out;
}

/// Orders a pair so that the first element's pattern on the differing
/// positions is the lexicographically smaller one. The two patterns are
/// bitwise complements of each other, so they already differ at the
/// lowest differing position: the vertex with a 0 there comes first.
inline std::pair<Vertex, Vertex> canonical_orientation(Vertex u, Vertex v) {
    if (u == v) throw std::invalid_argument("canonical_orientation: u == v");
    PositionSet low = (u ^ v) & (0u - (u ^ v));
    return (u & low) == 0 ? std::pair{u, v} : std::pair{v, u};
}

/// Number of unordered non-adjacent vertex pairs: C(2^d, 2) - d*2^(d-1).
inline std::uint64_t nonadjacent_pair_count(int d) {
    std::uint64_t n = std::uint64_t{1} << d;
    return n * (n - 1) / 2 - std::uint64_t(d) * (n / 2);
}

// Enumerates every unordered non-adjacent pair exactly once, ordered by
// ascending (min, max) integer encoding; each pair is yielded in
// canonical orientation. Single-consumer, freely re-creatable.
class NonAdjacentPairRange {
public:
    explicit NonAdjacentPairRange(int d) : d_(d) {
        if (d < 1 || d > kMaxDimension)
            throw std::invalid_argument("dimension must be in [1, 30]");
    }

    class iterator {
    public:
        using value_type = std::pair<Vertex, Vertex>;
        using difference_type = std::ptrdiff_t;
        using iterator_category = std::input_iterator_tag;

        iterator() : n_(0), a_(0), b_(0) {}
        iterator(std::uint64_t n, Vertex a, Vertex b) : n_(n), a_(a), b_(b) {
            settle();
        }

        value_type operator*() const { return canonical_orientation(a_, b_); }

        iterator& operator++() {
            advance();
            settle();
            return *this;
        }
        iterator operator++(int) {
            iterator t = *this;
            ++*this;
            return t;
        }
        bool operator==(const iterator& o) const { return a_ == o.a_ && b_ == o.b_; }
        bool operator!=(const iterator& o) const { return !(*this == o); }

    private:
        void advance() {
            if (++b_ >= n_) {
                ++a_;
                b_ = a_ + 1;
            }
        }
        // Skip adjacent pairs; park at the end sentinel (a_ == n_ - 1).
        void settle() {
            while (a_ + 1 < n_ && is_adjacent(a_, b_)) advance();
            if (a_ + 1 >= n_) {
                a_ = static_cast<Vertex>(n_ - 1);
                b_ = static_cast<Vertex>(n_);
            }
        }
        std::uint64_t n_;
        Vertex a_, b_;
    };

    iterator begin() const { return iterator(std::uint64_t{1} << d_, 0, 1); }
    iterator end() const {
        std::uint64_t n = std::uint64_t{1} << d_;
        return iterator(n, static_cast<Vertex>(n - 1), static_cast<Vertex>(n));
    }

private:
    int d_;
};

/// Callback form of the pair enumeration for hot loops. Returning false
/// from the callback stops early.
template <class F>
void for_each_nonadjacent_pair(int d, F&& fn) {
    const std::uint64_t n = std::uint64_t{1} << d;
    for (Vertex a = 0; a + 1 < n; ++a) {
        for (Vertex b = a + 1; b < n; ++b) {
            if (is_adjacent(a, b)) continue;
            auto [u, v] = canonical_orientation(a, b);
            if (!fn(u, v)) return;
        }
    }
}

}  // namespace cubehd
