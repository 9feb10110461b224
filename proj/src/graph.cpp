#include "acm/graph.hpp"

#include <algorithm>
#include <cassert>
#include <unordered_map>

#include "acm/cograph.hpp"
#include "acm/oracles.hpp"

namespace acm {

Edge make_edge(int u, int v) {
    if (u > v) std::swap(u, v);
    return {u, v};
}

// ---------------------------------------------------------------- Graph

void Graph::init(int n, const std::vector<Edge>& edges, const std::vector<int>& weights) {
    if (n < 0) throw GraphError("negative vertex count");
    if (weights.size() != edges.size()) throw GraphError("weight list does not match edge list");
    n_ = n;

    std::vector<std::pair<Edge, int>> work;
    work.reserve(edges.size());
    for (size_t i = 0; i < edges.size(); ++i) {
        auto [u, v] = edges[i];
        if (u == v)
            throw GraphError("self-loop at vertex " + std::to_string(u));
        if (u < 0 || v < 0 || u >= n || v >= n)
            throw GraphError("edge endpoint out of range: {" + std::to_string(u) + "," +
                             std::to_string(v) + "}");
        work.push_back({make_edge(u, v), weights[i]});
    }
    std::sort(work.begin(), work.end());
    for (size_t i = 1; i < work.size(); ++i)
        if (work[i].first == work[i - 1].first)
            throw GraphError("parallel edge {" + std::to_string(work[i].first.first) + "," +
                             std::to_string(work[i].first.second) + "}");

    edges_.reserve(work.size());
    weights_.reserve(work.size());
    adj_.assign(n_, {});
    for (auto& [e, w] : work) {
        edges_.push_back(e);
        weights_.push_back(w);
        adj_[e.first].push_back(e.second);
        adj_[e.second].push_back(e.first);
    }
    for (auto& list : adj_) std::sort(list.begin(), list.end());

    // adjacency bit matrix for small graphs; larger ones fall back to
    // binary search in the neighbor lists
    if (n_ > 0 && n_ <= 4096) {
        bits_words_ = (n_ + 63) / 64;
        adj_bits_.assign(static_cast<size_t>(n_) * bits_words_, 0);
        for (auto& [u, v] : edges_) {
            adj_bits_[static_cast<size_t>(u) * bits_words_ + v / 64] |= 1ull << (v % 64);
            adj_bits_[static_cast<size_t>(v) * bits_words_ + u / 64] |= 1ull << (u % 64);
        }
    }
}

Graph::Graph(int n, const std::vector<Edge>& edges) {
    init(n, edges, std::vector<int>(edges.size(), 1));
}

Graph::Graph(int n, const std::vector<Edge>& edges, const std::vector<int>& weights) {
    init(n, edges, weights);
}

bool Graph::adjacent(int u, int v) const {
    if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v) return false;
    if (bits_words_ > 0)
        return (adj_bits_[static_cast<size_t>(u) * bits_words_ + v / 64] >> (v % 64)) & 1;
    const auto& list = adj_[u];
    return std::binary_search(list.begin(), list.end(), v);
}

int Graph::edge_index(int u, int v) const {
    if (!adjacent(u, v)) return -1;
    Edge e = make_edge(u, v);
    auto it = std::lower_bound(edges_.begin(), edges_.end(), e);
    return static_cast<int>(it - edges_.begin());
}

int Graph::weight(int u, int v) const {
    int idx = edge_index(u, v);
    if (idx < 0)
        throw GraphError("no edge {" + std::to_string(u) + "," + std::to_string(v) + "}");
    return weights_[idx];
}

const std::vector<int>& Graph::neighbors(int u) const {
    if (u < 0 || u >= n_) throw GraphError("vertex out of range: " + std::to_string(u));
    return adj_[u];
}

int Graph::degree(int u) const { return static_cast<int>(neighbors(u).size()); }

bool Graph::operator==(const Graph& other) const {
    return n_ == other.n_ && edges_ == other.edges_ && weights_ == other.weights_;
}

// ------------------------------------------------------------- Matching

Matching::Matching(std::vector<Edge> edges) {
    for (auto& [u, v] : edges) {
        if (u == v) throw MatchingError("matching edge with equal endpoints");
        if (u < 0 || v < 0) throw MatchingError("matching edge with negative endpoint");
        if (u > v) std::swap(u, v);
    }
    std::sort(edges.begin(), edges.end());
    edges.erase(std::unique(edges.begin(), edges.end()), edges.end());
    std::vector<int> seen;
    for (auto& [u, v] : edges) {
        seen.push_back(u);
        seen.push_back(v);
    }
    std::sort(seen.begin(), seen.end());
    if (std::adjacent_find(seen.begin(), seen.end()) != seen.end())
        throw MatchingError("matching edges share a vertex");
    edges_ = std::move(edges);
}

std::vector<int> Matching::vertices() const {
    std::vector<int> out;
    out.reserve(2 * edges_.size());
    for (auto& [u, v] : edges_) {
        out.push_back(u);
        out.push_back(v);
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool Matching::covers(int v) const {
    for (auto& [a, b] : edges_)
        if (a == v || b == v) return true;
    return false;
}

bool is_valid_matching(const Graph& g, const Matching& m) {
    for (auto& [u, v] : m.edges())
        if (!g.adjacent(u, v)) return false;
    return true;
}

void require_valid_matching(const Graph& g, const Matching& m) {
    for (auto& [u, v] : m.edges())
        if (!g.adjacent(u, v))
            throw MatchingError("matching uses non-edge {" + std::to_string(u) + "," +
                                std::to_string(v) + "}");
}

long long matching_weight(const Graph& g, const Matching& m) {
    long long total = 0;
    for (auto& [u, v] : m.edges()) total += g.weight(u, v);
    return total;
}

bool lex_less(const std::vector<Edge>& a, const std::vector<Edge>& b) {
    return std::lexicographical_compare(a.begin(), a.end(), b.begin(), b.end());
}

const char* to_string(MatchingKind kind) {
    switch (kind) {
        case MatchingKind::Unrestricted: return "matching";
        case MatchingKind::Induced: return "induced";
        case MatchingKind::Acyclic: return "acyclic";
        case MatchingKind::UniquelyRestricted: return "unique";
    }
    return "?";
}

// ---------------------------------------------------------- subgraphs

InducedSubgraph induced_subgraph(const Graph& g, std::vector<int> vertices) {
    std::sort(vertices.begin(), vertices.end());
    if (std::adjacent_find(vertices.begin(), vertices.end()) != vertices.end())
        throw GraphError("duplicate vertex in induced subgraph request");
    for (int v : vertices)
        if (v < 0 || v >= g.order()) throw GraphError("vertex out of range: " + std::to_string(v));

    std::vector<int> pos(g.order(), -1);
    for (size_t i = 0; i < vertices.size(); ++i) pos[vertices[i]] = static_cast<int>(i);

    std::vector<Edge> edges;
    std::vector<int> weights;
    for (size_t i = 0; i < g.edges().size(); ++i) {
        auto [u, v] = g.edges()[i];
        if (pos[u] >= 0 && pos[v] >= 0) {
            edges.push_back(make_edge(pos[u], pos[v]));
            weights.push_back(g.weights()[i]);
        }
    }
    return {Graph(static_cast<int>(vertices.size()), edges, weights), std::move(vertices)};
}

InducedSubgraph matched_subgraph(const Graph& g, const Matching& m) {
    require_valid_matching(g, m);
    return induced_subgraph(g, m.vertices());
}

// ----------------------------------------------------------- predicates

namespace {

// forest test: every component has exactly size-1 edges
bool is_forest(const Graph& g) {
    return g.size() == g.order() - static_cast<int>(components(g).size());
}

bool is_uniquely_restricted(const Graph& g, const Matching& m, const SolveLimits& limits) {
    auto sub = matched_subgraph(g, m);
    std::vector<int> local(g.order(), -1);
    for (size_t i = 0; i < sub.vertex_map.size(); ++i) local[sub.vertex_map[i]] = static_cast<int>(i);

    std::vector<char> in_matching(sub.graph.size(), 0);
    for (auto& [u, v] : m.edges()) {
        int idx = sub.graph.edge_index(local[u], local[v]);
        assert(idx >= 0);
        in_matching[idx] = 1;
    }

    // Another perfect matching of G(M) exists iff some non-matching edge uv
    // leaves a perfect matching in G(M)-u-v. Checked per component so the
    // perfect-matching tests stay small (or bipartite).
    for (auto& comp : components(sub.graph)) {
        auto piece = induced_subgraph(sub.graph, comp);
        std::vector<int> piece_pos(sub.graph.order(), -1);
        for (size_t i = 0; i < piece.vertex_map.size(); ++i)
            piece_pos[piece.vertex_map[i]] = static_cast<int>(i);
        for (auto& [u, v] : piece.graph.edges()) {
            int host_idx = sub.graph.edge_index(piece.vertex_map[u], piece.vertex_map[v]);
            if (in_matching[host_idx]) continue;
            std::vector<int> rest;
            for (int w = 0; w < piece.graph.order(); ++w)
                if (w != u && w != v) rest.push_back(w);
            if (has_perfect_matching(induced_subgraph(piece.graph, rest).graph, limits))
                return false;
        }
    }
    return true;
}

}  // namespace

bool is_kind_matching(const Graph& g, const Matching& m, MatchingKind kind,
                      const SolveLimits& limits) {
    require_valid_matching(g, m);
    if (m.empty()) return true;
    switch (kind) {
        case MatchingKind::Unrestricted:
            return true;
        case MatchingKind::Induced: {
            auto sub = matched_subgraph(g, m);
            // 1-regular: exactly |m| edges on 2|m| vertices with max degree 1
            return sub.graph.size() == m.size();
        }
        case MatchingKind::Acyclic:
            return is_forest(matched_subgraph(g, m).graph);
        case MatchingKind::UniquelyRestricted:
            return is_uniquely_restricted(g, m, limits);
    }
    return false;
}

std::optional<Bipartition> is_bipartite(const Graph& g) {
    Bipartition out;
    out.side.assign(g.order(), -1);
    std::vector<int> queue;
    for (int start = 0; start < g.order(); ++start) {
        if (out.side[start] != -1) continue;
        out.side[start] = 0;
        queue.assign(1, start);
        for (size_t head = 0; head < queue.size(); ++head) {
            int u = queue[head];
            for (int v : g.neighbors(u)) {
                if (out.side[v] == -1) {
                    out.side[v] = static_cast<int8_t>(1 - out.side[u]);
                    queue.push_back(v);
                } else if (out.side[v] == out.side[u]) {
                    return std::nullopt;
                }
            }
        }
    }
    for (int v = 0; v < g.order(); ++v)
        (out.side[v] == 0 ? out.side_a : out.side_b).push_back(v);
    return out;
}

std::vector<std::vector<int>> components(const Graph& g) {
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return components_within(g, all);
}

std::vector<std::vector<int>> components_within(const Graph& g, const std::vector<int>& vertices) {
    std::vector<char> in_set(g.order(), 0), seen(g.order(), 0);
    for (int v : vertices) in_set[v] = 1;
    std::vector<std::vector<int>> out;
    for (int start : vertices) {
        if (seen[start]) continue;
        std::vector<int> comp{start};
        seen[start] = 1;
        for (size_t head = 0; head < comp.size(); ++head)
            for (int v : g.neighbors(comp[head]))
                if (in_set[v] && !seen[v]) {
                    seen[v] = 1;
                    comp.push_back(v);
                }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

bool is_p4_free(const Graph& g) {
    if (g.order() == 0) return true;
    try {
        build_cotree(g);
        return true;
    } catch (const NotCographError&) {
        return false;
    }
}

namespace {

// Check whether four vertices induce a path; if so emit them in path order
// with the smaller endpoint first.
std::optional<std::array<int, 4>> as_induced_path(const Graph& g, const std::array<int, 4>& q) {
    int deg[4] = {0, 0, 0, 0};
    int edge_count = 0;
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (g.adjacent(q[i], q[j])) {
                ++edge_count;
                ++deg[i];
                ++deg[j];
            }
    if (edge_count != 3) return std::nullopt;
    int ends = 0;
    for (int i = 0; i < 4; ++i) {
        if (deg[i] != 1 && deg[i] != 2) return std::nullopt;
        if (deg[i] == 1) ++ends;
    }
    if (ends != 2) return std::nullopt;  // rules out K3 + pendant etc.
    int start = -1;
    for (int i = 0; i < 4; ++i)
        if (deg[i] == 1 && (start == -1 || q[i] < q[start])) start = i;
    std::array<int, 4> path{};
    path[0] = q[start];
    int prev = -1, cur = q[start];
    for (int step = 1; step < 4; ++step) {
        for (int i = 0; i < 4; ++i) {
            if (q[i] != prev && q[i] != cur && g.adjacent(cur, q[i])) {
                path[step] = q[i];
                prev = cur;
                cur = q[i];
                break;
            }
        }
    }
    return path;
}

}  // namespace

std::optional<std::array<int, 4>> find_induced_p4(const Graph& g) {
    int n = g.order();
    for (int a = 0; a < n; ++a)
        for (int b = a + 1; b < n; ++b)
            for (int c = b + 1; c < n; ++c)
                for (int d = c + 1; d < n; ++d)
                    if (auto p = as_induced_path(g, {a, b, c, d})) return p;
    return std::nullopt;
}

namespace {

// q must be sorted; checks for an induced P3 with the middle vertex
// identified, returning {end, mid, end} sorted as a triple.
bool induces_p3(const Graph& g, int a, int b, int c) {
    int ab = g.adjacent(a, b), ac = g.adjacent(a, c), bc = g.adjacent(b, c);
    return ab + ac + bc == 2;
}

}  // namespace

std::optional<std::array<int, 6>> find_induced_2p3(const Graph& g) {
    int n = g.order();
    if (n < 6) return std::nullopt;
    std::vector<int> idx(6);
    // all 6-subsets in ascending order, then all 3|3 splits keeping the
    // smallest chosen vertex on the first side
    std::array<int, 6> sel{};
    std::vector<std::array<int, 6>> splits;
    for (int i = 1; i < 6; ++i)
        for (int j = i + 1; j < 6; ++j) {
            std::array<int, 6> s{};
            s[0] = 0;
            s[1] = i;
            s[2] = j;
            int p = 3;
            for (int k = 1; k < 6; ++k)
                if (k != i && k != j) s[p++] = k;
            splits.push_back(s);
        }
    for (idx[0] = 0; idx[0] < n - 5; ++idx[0])
        for (idx[1] = idx[0] + 1; idx[1] < n - 4; ++idx[1])
            for (idx[2] = idx[1] + 1; idx[2] < n - 3; ++idx[2])
                for (idx[3] = idx[2] + 1; idx[3] < n - 2; ++idx[3])
                    for (idx[4] = idx[3] + 1; idx[4] < n - 1; ++idx[4])
                        for (idx[5] = idx[4] + 1; idx[5] < n; ++idx[5]) {
                            for (auto& s : splits) {
                                for (int k = 0; k < 6; ++k) sel[k] = idx[s[k]];
                                if (!induces_p3(g, sel[0], sel[1], sel[2])) continue;
                                if (!induces_p3(g, sel[3], sel[4], sel[5])) continue;
                                bool cross = false;
                                for (int a = 0; a < 3 && !cross; ++a)
                                    for (int b = 3; b < 6 && !cross; ++b)
                                        if (g.adjacent(sel[a], sel[b])) cross = true;
                                if (!cross) return sel;
                            }
                        }
    return std::nullopt;
}

bool is_2p3_free(const Graph& g) { return !find_induced_2p3(g).has_value(); }

unsigned long long count_perfect_matchings(const Graph& g, const SolveLimits& limits) {
    int n = g.order();
    if (n > limits.exact_matching_max_order)
        throw ResourceLimitError("perfect matching count: order " + std::to_string(n) +
                                 " exceeds guard " +
                                 std::to_string(limits.exact_matching_max_order));
    if (n % 2 == 1) return 0;
    if (n == 0) return 1;

    std::vector<uint32_t> nbr(n, 0);
    for (auto& [u, v] : g.edges()) {
        nbr[u] |= 1u << v;
        nbr[v] |= 1u << u;
    }
    std::unordered_map<uint32_t, unsigned long long> memo;
    auto rec = [&](auto&& self, uint32_t mask) -> unsigned long long {
        if (mask == 0) return 1;
        auto it = memo.find(mask);
        if (it != memo.end()) return it->second;
        int v = std::countr_zero(mask);
        uint32_t partners = nbr[v] & mask;
        unsigned long long total = 0;
        while (partners) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            total += self(self, mask & ~(1u << v) & ~(1u << u));
        }
        memo.emplace(mask, total);
        return total;
    };
    uint32_t full = (n == 32) ? ~0u : ((1u << n) - 1);
    return rec(rec, full);
}

}  // namespace acm
