#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

#include "acm/errors.hpp"
#include "acm/limits.hpp"

namespace acm {

// Unordered edge, always normalized to first < second.
using Edge = std::pair<int, int>;

Edge make_edge(int u, int v);

// Finite simple undirected graph with integer edge weights (default 1).
// Vertices are dense 0-based ids. Immutable after construction; all
// operations on it are pure, so values may be shared across threads.
class Graph {
public:
    Graph() = default;
    Graph(int n, const std::vector<Edge>& edges);
    Graph(int n, const std::vector<Edge>& edges, const std::vector<int>& weights);

    int order() const { return n_; }
    int size() const { return static_cast<int>(edges_.size()); }

    const std::vector<Edge>& edges() const { return edges_; }
    const std::vector<int>& weights() const { return weights_; }

    bool adjacent(int u, int v) const;
    // Index of edge {u,v} in the sorted edge list, -1 if not an edge.
    int edge_index(int u, int v) const;
    // Weight of edge {u,v}; throws GraphError if not an edge.
    int weight(int u, int v) const;
    int weight_at(int edge_idx) const { return weights_[edge_idx]; }

    const std::vector<int>& neighbors(int u) const;
    int degree(int u) const;

    bool operator==(const Graph& other) const;

private:
    void init(int n, const std::vector<Edge>& edges, const std::vector<int>& weights);

    int n_ = 0;
    std::vector<Edge> edges_;    // sorted lexicographically
    std::vector<int> weights_;   // parallel to edges_
    std::vector<std::vector<int>> adj_;  // sorted neighbor lists
    std::vector<uint64_t> adj_bits_;     // row-major bit matrix, built for small n
    int bits_words_ = 0;
};

// A set of pairwise vertex-disjoint edges. Disjointness is enforced at
// construction; membership in a host graph is checked separately.
class Matching {
public:
    Matching() = default;
    explicit Matching(std::vector<Edge> edges);

    int size() const { return static_cast<int>(edges_.size()); }
    bool empty() const { return edges_.empty(); }
    const std::vector<Edge>& edges() const { return edges_; }
    // Sorted V(M).
    std::vector<int> vertices() const;
    bool covers(int v) const;

    bool operator==(const Matching& other) const { return edges_ == other.edges_; }

private:
    std::vector<Edge> edges_;  // sorted lexicographically
};

// True iff every edge of m is an edge of g (disjointness already holds).
bool is_valid_matching(const Graph& g, const Matching& m);
void require_valid_matching(const Graph& g, const Matching& m);

// Total weight of a matching in g.
long long matching_weight(const Graph& g, const Matching& m);

// Lexicographic order on sorted edge lists; used for deterministic
// tie-breaking everywhere.
bool lex_less(const std::vector<Edge>& a, const std::vector<Edge>& b);

enum class MatchingKind {
    Unrestricted,
    Induced,
    Acyclic,
    UniquelyRestricted,
};

const char* to_string(MatchingKind kind);

// Induced subgraph together with the relabeling back to the host graph:
// vertex i of `graph` is vertex `vertex_map[i]` of the host.
struct InducedSubgraph {
    Graph graph;
    std::vector<int> vertex_map;
};

// Induced subgraph on the given vertices (any order, duplicates rejected);
// weights carry over, ids are compacted to 0..k-1 in ascending host order.
InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices);

// G(M): the subgraph induced by the endpoints of m. Order is exactly 2|m|.
InducedSubgraph matched_subgraph(const Graph& g, const Matching& m);

// Feasibility predicate for the four matching kinds:
//   Unrestricted        -- any matching
//   Induced             -- G(M) is 1-regular
//   Acyclic             -- G(M) is a forest
//   UniquelyRestricted  -- M is the only perfect matching of G(M), tested
//                          per component: no non-matching edge uv of G(M)
//                          leaves a perfect matching in G(M)-u-v
// All three restricted kinds are hereditary: subsets of feasible matchings
// stay feasible.
bool is_kind_matching(const Graph& g, const Matching& m, MatchingKind kind,
                      const SolveLimits& limits = {});

struct Bipartition {
    std::vector<int> side_a, side_b;  // sorted
    std::vector<int8_t> side;         // side[v] in {0,1}
};

// Deterministic 2-coloring: BFS from the lowest unvisited id, which is
// placed on side A. Absent iff the graph has an odd cycle.
std::optional<Bipartition> is_bipartite(const Graph& g);

// Connected components as sorted vertex lists, ordered by smallest vertex.
std::vector<std::vector<int>> components(const Graph& g);
// Same, restricted to the induced subgraph on `vertices` (host ids).
std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& vertices);

// True iff g has no induced path on 4 vertices (same recursion as
// build_cotree, which succeeds exactly when this holds).
bool is_p4_free(const Graph& g);

// An induced P4 in path order (smaller endpoint first), if one exists.
// Deterministic: first 4-subset in ascending order that induces a path.
std::optional<std::array<int, 4>> find_induced_p4(const Graph& g);

// True iff g has no induced 2P3 (two vertex-disjoint P3s without edges
// between them). Brute force over 6-subsets with early exit.
bool is_2p3_free(const Graph& g);

// Witness for a failed 2P3-freeness check: two triples, each sorted, each
// inducing a P3, no cross edges. Deterministic first hit.
std::optional<std::array<int, 6>> find_induced_2p3(const Graph& g);

// Exact number of perfect matchings via recursive lowest-vertex branching
// (memoized). Intended for small graphs; guarded by
// limits.exact_matching_max_order.
unsigned long long count_perfect_matchings(const Graph& g, const SolveLimits& limits = {});

}  // namespace acm
