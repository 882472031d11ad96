#include "cubehd/oracle.hpp"

#include <algorithm>
#include <numeric>
#include <stdexcept>

namespace cubehd {

namespace {

void validate_vertex_count(int n, int cap, const char* who) {
    if (n < 1 || n > cap)
        throw CapacityError(std::string(who) + ": vertex count out of range");
}

}  // namespace

SmallGraph SmallGraph::with_vertices(int n) {
    validate_vertex_count(n, kMaxRecognitionVertices, "SmallGraph");
    SmallGraph g;
    g.n = n;
    return g;
}

void SmallGraph::add_edge(int i, int j) {
    if (i == j) throw std::invalid_argument("SmallGraph: self-loop");
    if (i < 0 || j < 0 || i >= n || j >= n)
        throw std::invalid_argument("SmallGraph: vertex out of range");
    adj[i] |= std::uint16_t(1) << j;
    adj[j] |= std::uint16_t(1) << i;
}

int SmallGraph::edge_count() const {
    int total = 0;
    for (int i = 0; i < n; ++i) total += std::popcount(adj[i]);
    return total / 2;
}

int SmallGraph::pair_index(int n, int i, int j) {
    if (i > j) std::swap(i, j);
    // pairs (0,1), (0,2), ..., (0,n-1), (1,2), ...
    return i * n - i * (i + 1) / 2 + (j - i - 1);
}

std::uint64_t SmallGraph::edge_mask() const {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j)
            if (adjacent(i, j)) mask |= std::uint64_t{1} << pair_index(n, i, j);
    return mask;
}

std::uint64_t SmallGraph::nonedge_mask() const {
    std::uint64_t all = (std::uint64_t{1} << (n * (n - 1) / 2)) - 1;
    return all & ~edge_mask();
}

SmallGraph hypercube_graph(int d) {
    if (d < 1 || d > 3) throw std::invalid_argument("hypercube_graph: d must be 1..3");
    SmallGraph g = SmallGraph::with_vertices(1 << d);
    for (int u = 0; u < (1 << d); ++u)
        for (int j = 0; j < d; ++j)
            if (u < (u ^ (1 << j))) g.add_edge(u, u ^ (1 << j));
    return g;
}

std::uint64_t ProperOrderRep::induced_edge_mask(int n) const {
    std::uint64_t mask = 0;
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j <= reach[i]; ++j)
            mask |= std::uint64_t{1} << SmallGraph::pair_index(n, order[i], order[j]);
    return mask;
}

UnitIntervalRep ProperOrderRep::to_unit_interval_rep() const {
    const int n = static_cast<int>(order.size());

    // Difference constraints on the position starts x_0..x_{n-1}, unit
    // length L: monotone (x_{p-1} <= x_p), farthest neighbor within L
    // (x_reach[p] - x_p <= L), first non-neighbor beyond L
    // (x_{reach[p]+1} - x_p >= L + 1). Solved by Bellman-Ford from a
    // virtual source; L doubles on the (unexpected) infeasible case.
    struct Edge {
        int from, to;
        std::int64_t base, unit;  // weight = base + unit * L
    };
    std::vector<Edge> edges;
    for (int p = 1; p < n; ++p) edges.push_back({p, p - 1, 0, 0});
    for (int p = 0; p < n; ++p) {
        if (reach[p] > p) edges.push_back({p, reach[p], 0, 1});
        if (reach[p] + 1 < n) edges.push_back({reach[p] + 1, p, -1, -1});
    }

    for (std::int64_t unit = n + 1;; unit *= 2) {
        if (unit > (std::int64_t{1} << 32))
            throw std::logic_error("proper order rep: difference system infeasible");
        std::vector<std::int64_t> dist(n, 0);  // virtual source = 0-edges to all
        bool changed = true;
        int rounds = 0;
        while (changed && rounds <= n + 1) {
            changed = false;
            ++rounds;
            for (const Edge& e : edges) {
                std::int64_t w = e.base + e.unit * unit;
                if (dist[e.from] + w < dist[e.to]) {
                    dist[e.to] = dist[e.from] + w;
                    changed = true;
                }
            }
        }
        if (changed) continue;  // negative cycle at this L; retry larger

        std::int64_t lowest = *std::min_element(dist.begin(), dist.end());
        UnitIntervalRep rep;
        rep.denom = unit;
        rep.starts.assign(n, 0);
        for (int p = 0; p < n; ++p) rep.starts[order[p]] = dist[p] - lowest;
        return rep;
    }
}

std::optional<ProperOrderRep> is_unit_interval(const SmallGraph& g) {
    validate_vertex_count(g.n, kMaxRecognitionVertices, "is_unit_interval");
    const int n = g.n;

    std::vector<int> order;
    order.reserve(n);
    std::uint16_t used = 0;

    // Depth-first search over orderings; appending vertex v at position k
    // is allowed only if no earlier vertex "looks over" an intermediate
    // non-neighbor to reach v.
    auto can_append = [&](int v) {
        const int k = static_cast<int>(order.size());
        for (int i = 0; i < k; ++i) {
            if (!g.adjacent(order[i], v)) continue;
            for (int j = i + 1; j < k; ++j)
                if (!g.adjacent(order[i], order[j]) || !g.adjacent(order[j], v))
                    return false;
        }
        return true;
    };

    auto search = [&](auto&& self) -> bool {
        if (static_cast<int>(order.size()) == n) return true;
        for (int v = 0; v < n; ++v) {
            if ((used >> v) & 1) continue;
            if (!can_append(v)) continue;
            order.push_back(v);
            used |= std::uint16_t(1) << v;
            if (self(self)) return true;
            used &= ~(std::uint16_t(1) << v);
            order.pop_back();
        }
        return false;
    };

    if (!search(search)) return std::nullopt;

    ProperOrderRep rep;
    rep.order = order;
    rep.reach.assign(n, 0);
    for (int i = 0; i < n; ++i) {
        rep.reach[i] = i;
        for (int j = i + 1; j < n; ++j)
            if (g.adjacent(order[i], order[j])) rep.reach[i] = j;
    }
    // The umbrella-free order makes rows prefixes and reach nondecreasing.
    for (int i = 0; i + 1 < n; ++i)
        if (rep.reach[i] > rep.reach[i + 1])
            throw std::logic_error("is_unit_interval: reach not monotone");
    if (rep.induced_edge_mask(n) != g.edge_mask())
        throw std::logic_error("is_unit_interval: witness mismatch");
    return rep;
}

SupergraphSet unit_interval_supergraphs(const SmallGraph& g, int max_n) {
    if (max_n > 8) throw std::invalid_argument("unit_interval_supergraphs: max_n <= 8");
    validate_vertex_count(g.n, max_n, "unit_interval_supergraphs");
    const int n = g.n;
    const std::uint64_t need = g.edge_mask();

    SupergraphSet out;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::vector<int> reach(n);
    std::vector<int> req_max(n);  // last position holding a required edge of each row

    // For each permutation, walk every nondecreasing reach map with
    // reach[i] >= i. Row pos contributes exactly the edges
    // (pos, pos+1..reach[pos]), so reach[pos] must not fall short of the
    // row's last required edge; that prunes the walk to supergraphs only.
    do {
        for (int i = 0; i < n; ++i) {
            req_max[i] = i;
            for (int j = i + 1; j < n; ++j)
                if (g.adjacent(perm[i], perm[j])) req_max[i] = j;
        }
        auto walk = [&](auto&& self, int pos, std::uint64_t mask) -> void {
            if (pos == n) {
                if (out.witnesses.emplace(mask, ProperOrderRep{perm, reach}).second)
                    out.edge_masks.push_back(mask);
                return;
            }
            int lo = std::max(pos == 0 ? 0 : reach[pos - 1], req_max[pos]);
            std::uint64_t m = mask;
            for (int j = pos + 1; j <= lo; ++j)
                m |= std::uint64_t{1} << SmallGraph::pair_index(n, perm[pos], perm[j]);
            for (int r = lo; r < n; ++r) {
                if (r > lo)
                    m |= std::uint64_t{1} << SmallGraph::pair_index(n, perm[pos], perm[r]);
                reach[pos] = r;
                self(self, pos + 1, m);
            }
        };
        walk(walk, 0, 0);
    } while (std::next_permutation(perm.begin(), perm.end()));

    for ([[maybe_unused]] std::uint64_t mask : out.edge_masks)
        if ((mask & need) != need) throw std::logic_error("supergraph enumeration broke");
    std::sort(out.edge_masks.begin(), out.edge_masks.end());
    return out;
}

CubicityResult exact_cubicity(const SmallGraph& g, int t_max, int max_n) {
    if (t_max < 1 || t_max > 4) throw std::invalid_argument("exact_cubicity: t_max must be 1..4");
    validate_vertex_count(g.n, max_n, "exact_cubicity");

    const std::uint64_t universe = g.nonedge_mask();
    SupergraphSet supers = unit_interval_supergraphs(g, max_n);

    // Candidates matter only through which non-edges they exclude. Keep
    // one representative supergraph per distinct exclusion mask (the
    // smallest edge mask, for determinism), then drop dominated ones.
    std::unordered_map<std::uint64_t, std::uint64_t> excl_to_mask;
    for (std::uint64_t mask : supers.edge_masks) {
        std::uint64_t excl = universe & ~mask;
        auto [it, fresh] = excl_to_mask.emplace(excl, mask);
        if (!fresh && mask < it->second) it->second = mask;
    }

    struct Candidate {
        std::uint64_t excl;
        std::uint64_t mask;
    };
    std::vector<Candidate> candidates;
    candidates.reserve(excl_to_mask.size());
    for (auto& [excl, mask] : excl_to_mask)
        if (excl != 0) candidates.push_back({excl, mask});
    std::sort(candidates.begin(), candidates.end(),
              [](const Candidate& a, const Candidate& b) { return a.excl < b.excl; });
    // Dominated exclusion masks never help a minimum cover.
    std::vector<Candidate> maximal;
    for (const Candidate& c : candidates) {
        bool dominated = false;
        for (const Candidate& o : candidates)
            if (o.excl != c.excl && (c.excl & ~o.excl) == 0) {
                dominated = true;
                break;
            }
        if (!dominated) maximal.push_back(c);
    }

    CubicityResult result;
    if (universe == 0) {
        // Complete graph: a single supergraph, E(G) itself, suffices.
        result.cubicity = 1;
        result.certificate.push_back(supers.witnesses.at(g.edge_mask()));
        return result;
    }

    std::vector<std::uint64_t> chosen;
    std::unordered_map<std::uint64_t, int> failed;  // covered set -> depth already shown hopeless
    auto cover = [&](auto&& self, std::uint64_t covered, int depth_left) -> bool {
        if (covered == universe) return true;
        if (depth_left == 0) return false;
        if (auto it = failed.find(covered); it != failed.end() && it->second >= depth_left)
            return false;
        // Branch on the lowest uncovered non-edge.
        std::uint64_t remaining = universe & ~covered;
        std::uint64_t pick = remaining & (0 - remaining);
        for (const Candidate& c : maximal) {
            if (!(c.excl & pick)) continue;
            chosen.push_back(c.mask);
            if (self(self, covered | c.excl, depth_left - 1)) return true;
            chosen.pop_back();
        }
        auto [it, fresh] = failed.emplace(covered, depth_left);
        if (!fresh && it->second < depth_left) it->second = depth_left;
        return false;
    };

    for (int t = 1; t <= t_max; ++t) {
        chosen.clear();
        if (cover(cover, 0, t)) {
            result.cubicity = t;
            for (std::uint64_t mask : chosen)
                result.certificate.push_back(supers.witnesses.at(mask));
            return result;
        }
    }
    result.exceeded = true;
    return result;
}

CertifyResult certify_representation(const SeedSet& s) {
    Hypercube cube(s.d);
    if (s.d > 10) throw CapacityError("certify_representation: exhaustive check guarded at d <= 10");
    if (s.seeds.empty()) throw std::invalid_argument("certify_representation: empty seed set");

    // Materialized start assignments; adjacency below is recomputed from
    // the starts alone, independent of the popcount shortcut.
    std::vector<UnitIntervalRep> layers;
    layers.reserve(s.seeds.size());
    for (Vertex x : s.seeds) layers.push_back(build_apex_layer(x, s.d).materialize());

    const std::uint32_t n = std::uint32_t{1} << s.d;
    CertifyResult result;
    for (Vertex u = 0; u + 1 < n; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
            bool represented = true;
            for (const UnitIntervalRep& rep : layers) {
                if (!rep_adjacent(rep, u, v)) {
                    represented = false;
                    break;
                }
            }
            bool expected = is_adjacent(u, v);
            if (represented != expected) {
                result.first_diff = std::pair{u, v};
                result.expected_adjacent = expected;
                return result;
            }
        }
    }
    result.ok = true;
    return result;
}

}  // namespace cubehd
