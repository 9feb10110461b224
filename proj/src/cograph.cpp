#include "acm/cograph.hpp"

#include <algorithm>
#include <cassert>

namespace acm {

std::vector<int> CotreeNode::vertices() const {
    std::vector<int> out;
    if (type == Type::Leaf) {
        out.push_back(vertex);
        return out;
    }
    for (const auto& child : children) {
        auto sub = child.vertices();
        out.insert(out.end(), sub.begin(), sub.end());
    }
    std::sort(out.begin(), out.end());
    return out;
}

namespace {

// components of the complement of g restricted to `vertices`
std::vector<std::vector<int>> co_components_within(const Graph& g,
                                                   const std::vector<int>& vertices) {
    // BFS over non-neighbors; the "unvisited pool" trick keeps it near-linear
    std::vector<int> pool = vertices;  // sorted
    std::vector<std::vector<int>> out;
    while (!pool.empty()) {
        std::vector<int> comp{pool.front()};
        pool.erase(pool.begin());
        for (size_t head = 0; head < comp.size(); ++head) {
            int u = comp[head];
            std::vector<int> keep;
            keep.reserve(pool.size());
            for (int v : pool) {
                if (!g.adjacent(u, v))
                    comp.push_back(v);
                else
                    keep.push_back(v);
            }
            pool.swap(keep);
        }
        std::sort(comp.begin(), comp.end());
        out.push_back(std::move(comp));
    }
    std::sort(out.begin(), out.end());
    return out;
}

std::optional<std::array<int, 4>> find_induced_p4_within(const Graph& g,
                                                         const std::vector<int>& verts) {
    auto sub = induced_subgraph(g, verts);
    auto p4 = find_induced_p4(sub.graph);
    if (!p4) return std::nullopt;
    std::array<int, 4> host{};
    for (int i = 0; i < 4; ++i) host[i] = sub.vertex_map[(*p4)[i]];
    if (host[0] > host[3]) std::reverse(host.begin(), host.end());
    return host;
}

CotreeNode build_rec(const Graph& g, const std::vector<int>& verts) {
    if (verts.size() == 1) {
        CotreeNode leaf;
        leaf.type = CotreeNode::Type::Leaf;
        leaf.vertex = verts.front();
        return leaf;
    }
    auto comps = components_within(g, verts);
    if (comps.size() > 1) {
        CotreeNode node;
        node.type = CotreeNode::Type::Union;
        for (auto& c : comps) node.children.push_back(build_rec(g, c));
        return node;
    }
    auto co_comps = co_components_within(g, verts);
    if (co_comps.size() > 1) {
        CotreeNode node;
        node.type = CotreeNode::Type::Join;
        for (auto& c : co_comps) node.children.push_back(build_rec(g, c));
        return node;
    }
    // connected with connected complement: an induced P4 must exist here
    auto p4 = find_induced_p4_within(g, verts);
    assert(p4.has_value());
    throw NotCographError(*p4);
}

}  // namespace

CotreeNode build_cotree(const Graph& g) {
    if (g.order() == 0) throw GraphError("cotree of the empty graph is undefined");
    std::vector<int> all(g.order());
    for (int i = 0; i < g.order(); ++i) all[i] = i;
    return build_rec(g, all);
}

namespace {

void collect_edges(const CotreeNode& node, std::vector<Edge>& out) {
    if (node.type == CotreeNode::Type::Leaf) return;
    for (const auto& child : node.children) collect_edges(child, out);
    if (node.type == CotreeNode::Type::Join) {
        std::vector<std::vector<int>> parts;
        for (const auto& child : node.children) parts.push_back(child.vertices());
        for (size_t i = 0; i < parts.size(); ++i)
            for (size_t j = i + 1; j < parts.size(); ++j)
                for (int u : parts[i])
                    for (int v : parts[j]) out.push_back(make_edge(u, v));
    }
}

}  // namespace

Graph evaluate_cotree(const CotreeNode& root, int n) {
    std::vector<Edge> edges;
    collect_edges(root, edges);
    return Graph(n, edges);
}

// ------------------------------------------------------------------ solver

namespace {

struct PartialSolution {
    long long value = 0;
    std::vector<Edge> edges;  // sorted
};

bool better(const PartialSolution& a, const PartialSolution& b) {
    if (a.value != b.value) return a.value > b.value;
    return lex_less(a.edges, b.edges);
}

PartialSolution solve_node(const Graph& g, const CotreeNode& node) {
    PartialSolution out;
    if (node.type == CotreeNode::Type::Leaf) return out;

    std::vector<PartialSolution> child_solutions;
    for (const auto& child : node.children) child_solutions.push_back(solve_node(g, child));

    if (node.type == CotreeNode::Type::Union) {
        // vertex sets are disjoint and non-adjacent: solutions just add up
        for (auto& sol : child_solutions) {
            out.value += sol.value;
            out.edges.insert(out.edges.end(), sol.edges.begin(), sol.edges.end());
        }
        std::sort(out.edges.begin(), out.edges.end());
        return out;
    }

    // Join: an acyclic matching lies inside one part, or is a single cross
    // edge, or is empty. Two matching edges meeting different parts would
    // close a 4-cycle in G(M).
    PartialSolution best;  // empty matching, value 0
    for (auto& sol : child_solutions)
        if (better(sol, best)) best = sol;

    std::vector<std::vector<int>> parts;
    for (const auto& child : node.children) parts.push_back(child.vertices());
    for (size_t i = 0; i < parts.size(); ++i)
        for (size_t j = i + 1; j < parts.size(); ++j)
            for (int u : parts[i])
                for (int v : parts[j]) {
                    int w = g.weight(u, v);  // join: every cross pair is an edge
                    if (w <= 0) continue;
                    PartialSolution cross{w, {make_edge(u, v)}};
                    if (better(cross, best)) best = std::move(cross);
                }

#ifndef NDEBUG
    // join soundness: the winner is empty, inside one part, or one cross edge
    if (best.edges.size() > 1) {
        bool inside_one = false;
        for (auto& part : parts) {
            bool all_in = true;
            for (auto& [u, v] : best.edges)
                all_in = all_in && std::binary_search(part.begin(), part.end(), u) &&
                         std::binary_search(part.begin(), part.end(), v);
            inside_one = inside_one || all_in;
        }
        assert(inside_one);
    }
#endif
    return best;
}

}  // namespace

SolveResult mwam_p4free(const Graph& g) {
    SolveResult out;
    out.kind = MatchingKind::Acyclic;
    if (g.order() == 0) return out;
    CotreeNode root = build_cotree(g);
    PartialSolution sol = solve_node(g, root);
    out.value = sol.value;
    out.witness = Matching(sol.edges);
    assert(is_kind_matching(g, out.witness, MatchingKind::Acyclic));
    return out;
}

}  // namespace acm
