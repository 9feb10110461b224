#include "acm/twop3.hpp"

#include <algorithm>
#include <cassert>

namespace acm {

const char* to_string(ShapeClass::Kind kind) {
    switch (kind) {
        case ShapeClass::Kind::K2: return "K2";
        case ShapeClass::Kind::P4: return "P4";
        case ShapeClass::Kind::Spider: return "spider";
        case ShapeClass::Kind::DoubleSpider: return "double-spider";
        case ShapeClass::Kind::LinkedSpiders: return "linked-spiders";
        case ShapeClass::Kind::Invalid: return "invalid";
    }
    return "?";
}

// ------------------------------------------------------------- classifier

namespace {

ShapeClass invalid_shape() { return {ShapeClass::Kind::Invalid, 0, 0}; }

// Sorted edge set equality against a proposed shape edge list.
bool edge_set_is(const Graph& t, std::vector<Edge> proposed) {
    std::sort(proposed.begin(), proposed.end());
    proposed.erase(std::unique(proposed.begin(), proposed.end()), proposed.end());
    return proposed == t.edges();
}

}  // namespace

ShapeClass classify_component(const Graph& t, const Matching& m) {
    int n = t.order();
    if (n < 2) throw MatchingError("component classification needs order >= 2");
    require_valid_matching(t, m);
    if (2 * m.size() != n) throw MatchingError("matching is not perfect on the component");
    if (components(t).size() != 1) throw MatchingError("component graph is disconnected");

    if (n == 2) return {ShapeClass::Kind::K2, 0, 0};
    if (t.size() != n - 1) return invalid_shape();  // every admissible shape is a tree

    std::vector<int> mate(n, -1);
    for (auto& [u, v] : m.edges()) {
        mate[u] = v;
        mate[v] = u;
    }
    std::vector<Edge> non_matching;
    for (auto& e : t.edges())
        if (mate[e.first] != e.second) non_matching.push_back(e);

    if (non_matching.size() == 1) {
        // a tree with a perfect matching and one non-matching edge is a P4
        auto [b, c] = non_matching.front();
        if (edge_set_is(t, {make_edge(b, mate[b]), make_edge(c, mate[c]), make_edge(b, c)}))
            return {ShapeClass::Kind::P4, 0, 0};
        return invalid_shape();
    }

    auto touches = [](const Edge& e, int v) { return e.first == v || e.second == v; };
    auto leg_edges = [&](int hub, int other_hub, std::vector<Edge>& out, int& legs) {
        legs = 0;
        for (auto& e : non_matching) {
            if (!touches(e, hub)) continue;
            int leg = e.first == hub ? e.second : e.first;
            if (leg == other_hub) continue;
            out.push_back(make_edge(hub, leg));
            out.push_back(make_edge(leg, mate[leg]));
            ++legs;
        }
    };

    // single hub: all non-matching edges share one vertex -> Spider
    for (int hub : {non_matching[0].first, non_matching[0].second}) {
        bool all = true;
        for (auto& e : non_matching) all = all && touches(e, hub);
        if (!all) continue;
        std::vector<Edge> proposed{make_edge(hub, mate[hub])};
        int k = 0;
        leg_edges(hub, -1, proposed, k);
        if (k >= 2 && edge_set_is(t, std::move(proposed)))
            return {ShapeClass::Kind::Spider, k, 0};
        return invalid_shape();
    }

    // two hubs: a 2-vertex cover {a,b} of the non-matching edges
    for (int a : {non_matching[0].first, non_matching[0].second}) {
        // all edges missing `a` must share a common vertex b
        std::vector<int> b_candidates;
        bool first_rest = true;
        for (auto& e : non_matching) {
            if (touches(e, a)) continue;
            if (first_rest) {
                b_candidates = {e.first, e.second};
                first_rest = false;
            } else {
                std::vector<int> keep;
                for (int b : b_candidates)
                    if (touches(e, b)) keep.push_back(b);
                b_candidates = keep;
            }
        }
        for (int b : b_candidates) {
            if (b == a) continue;
            bool covered = true;
            for (auto& e : non_matching) covered = covered && (touches(e, a) || touches(e, b));
            if (!covered) continue;

            int x = std::min(a, b), y = std::max(a, b);  // report smaller hub first
            if (mate[x] == y) {
                // hubs matched to each other
                std::vector<Edge> proposed{make_edge(x, y)};
                int k = 0, l = 0;
                leg_edges(x, y, proposed, k);
                leg_edges(y, x, proposed, l);
                if (k >= 1 && l >= 1 && edge_set_is(t, std::move(proposed)))
                    return {ShapeClass::Kind::DoubleSpider, k, l};
                return invalid_shape();
            }
            if (t.adjacent(x, y)) {
                // hubs joined by a non-matching edge, each with a matched pendant
                std::vector<Edge> proposed{make_edge(x, mate[x]), make_edge(y, mate[y]),
                                           make_edge(x, y)};
                int k = 0, l = 0;
                leg_edges(x, y, proposed, k);
                leg_edges(y, x, proposed, l);
                if (k >= 1 && l >= 1 && edge_set_is(t, std::move(proposed)))
                    return {ShapeClass::Kind::LinkedSpiders, k, l};
                return invalid_shape();
            }
        }
    }
    return invalid_shape();
}

// ------------------------------------------------------------------ mwim

SolveResult mwim(const Graph& g, const SolveLimits& limits, const MwimBackend& backend) {
    SolveResult out = backend ? backend(g, limits)
                              : max_restricted_matching(g, MatchingKind::Induced, true, limits);
    out.kind = MatchingKind::Induced;
    assert(is_kind_matching(g, out.witness, MatchingKind::Induced, limits));
#ifndef NDEBUG
    for (auto& [u, v] : out.witness.edges()) assert(g.weight(u, v) > 0);
#endif
    return out;
}

// ----------------------------------------------------------- mwam solver

namespace {

struct Candidate {
    long long value = 0;
    std::vector<Edge> edges;
};

struct TwoP3Solver {
    const Graph& g;
    const SolveLimits& limits;
    const MwimBackend& backend;
    int n;
    Candidate best;  // starts as the empty matching

    TwoP3Solver(const Graph& host, const SolveLimits& lim, const MwimBackend& be)
        : g(host), limits(lim), backend(be), n(host.order()) {}

    void consider(long long value, std::vector<Edge> edges) {
        std::sort(edges.begin(), edges.end());
        if (value > best.value || (value == best.value && lex_less(edges, best.edges)))
            best = {value, std::move(edges)};
    }

    // Candidate = seed edges plus a maximum-weight induced matching of the
    // graph minus `removed`, where edges with both endpoints flagged as hub
    // neighbors are dropped to weight -1. Candidates failing the acyclicity
    // re-check are discarded.
    void assemble(const std::vector<Edge>& seed, const std::vector<char>& removed,
                  const std::vector<char>& hub_nbr) {
        long long value = 0;
        for (auto& [u, v] : seed) value += g.weight(u, v);

        std::vector<int> keep;
        for (int v = 0; v < n; ++v)
            if (!removed[v]) keep.push_back(v);
        auto sub = induced_subgraph(g, keep);

        std::vector<int> weights = sub.graph.weights();
        if (!hub_nbr.empty()) {
            for (int i = 0; i < sub.graph.size(); ++i) {
                auto [a, b] = sub.graph.edges()[i];
                if (hub_nbr[sub.vertex_map[a]] && hub_nbr[sub.vertex_map[b]]) weights[i] = -1;
            }
        }
        Graph reduced(sub.graph.order(), sub.graph.edges(), weights);

        SolveResult inner = mwim(reduced, limits, backend);
        std::vector<Edge> edges = seed;
        for (auto& [a, b] : inner.witness.edges()) {
            Edge host = make_edge(sub.vertex_map[a], sub.vertex_map[b]);
#ifndef NDEBUG
            if (!hub_nbr.empty()) assert(!(hub_nbr[host.first] && hub_nbr[host.second]));
#endif
            value += g.weight(host.first, host.second);
            edges.push_back(host);
        }

        // post-validation: seeds and inner matching must stay disjoint and
        // the assembled matching acyclic
        std::vector<int> endpoints;
        for (auto& [u, v] : edges) {
            endpoints.push_back(u);
            endpoints.push_back(v);
        }
        std::sort(endpoints.begin(), endpoints.end());
        if (std::adjacent_find(endpoints.begin(), endpoints.end()) != endpoints.end()) return;
        Matching m(edges);
        if (!is_kind_matching(g, m, MatchingKind::Acyclic, limits)) return;
        consider(value, std::move(edges));
    }

    std::vector<char> closed_neighborhood(std::initializer_list<int> verts) const {
        std::vector<char> out(n, 0);
        for (int v : verts) {
            out[v] = 1;
            for (int u : g.neighbors(v)) out[u] = 1;
        }
        return out;
    }

    std::vector<char> neighbor_flags(std::initializer_list<int> verts) const {
        std::vector<char> out(n, 0);
        for (int v : verts)
            for (int u : g.neighbors(v)) out[u] = 1;
        return out;
    }

    // exact induced pattern on the seed vertices: present[] lists the index
    // pairs that must be edges, every other pair must be a non-edge
    bool induces_exactly(const std::vector<int>& verts,
                         const std::vector<std::pair<int, int>>& present) const {
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (verts[i] == verts[j]) return false;
        std::vector<char> want(verts.size() * verts.size(), 0);
        for (auto& [i, j] : present) {
            want[i * verts.size() + j] = 1;
            want[j * verts.size() + i] = 1;
        }
        for (size_t i = 0; i < verts.size(); ++i)
            for (size_t j = i + 1; j < verts.size(); ++j)
                if (g.adjacent(verts[i], verts[j]) != static_cast<bool>(want[i * verts.size() + j]))
                    return false;
        return true;
    }

    void seeded_p4_components() {
        // component T = induced path a-b-c-d, matched by its end edges
        for (int b = 0; b < n; ++b)
            for (int c : g.neighbors(b)) {
                for (int a : g.neighbors(b)) {
                    if (a == c || g.adjacent(a, c)) continue;
                    for (int d : g.neighbors(c)) {
                        if (d <= a || d == b || g.adjacent(d, a) || g.adjacent(d, b)) continue;
                        assemble({make_edge(a, b), make_edge(c, d)},
                                 closed_neighborhood({a, b, c, d}), {});
                    }
                }
            }
    }

    void seeded_spiders() {
        // hub x with pendant partner x' and two legs y1-y1', y2-y2'; further
        // legs come from induced-matching edges that keep one endpoint in
        // N(x), which the -1 reweighting permits at most once per edge
        for (int x = 0; x < n; ++x)
            for (int xp : g.neighbors(x))
                for (int y1 : g.neighbors(x)) {
                    if (y1 == xp || g.adjacent(y1, xp)) continue;
                    for (int y2 : g.neighbors(x)) {
                        if (y2 <= y1 || y2 == xp) continue;
                        if (g.adjacent(y2, xp) || g.adjacent(y2, y1)) continue;
                        for (int y1p : g.neighbors(y1)) {
                            if (y1p == x || y1p == xp || y1p == y2) continue;
                            for (int y2p : g.neighbors(y2)) {
                                std::vector<int> seed{x, xp, y1, y1p, y2, y2p};
                                if (!induces_exactly(seed, {{0, 1}, {0, 2}, {0, 4},
                                                            {2, 3}, {4, 5}}))
                                    continue;
                                assemble({make_edge(x, xp), make_edge(y1, y1p),
                                          make_edge(y2, y2p)},
                                         closed_neighborhood({xp, y1, y1p, y2, y2p}),
                                         neighbor_flags({x}));
                            }
                        }
                    }
                }
    }

    void seeded_double_spiders() {
        // matched hub edge x-x' with one explicit leg on each side; the
        // common neighborhood of the hubs is deleted, both open hub
        // neighborhoods are reweighted
        for (int x = 0; x < n; ++x)
            for (int xp : g.neighbors(x)) {
                if (xp <= x) continue;  // swapping hubs mirrors the candidate
                for (int y1 : g.neighbors(x)) {
                    if (y1 == xp || g.adjacent(y1, xp)) continue;
                    for (int z1 : g.neighbors(xp)) {
                        if (z1 == x || z1 == y1 || g.adjacent(z1, x) || g.adjacent(z1, y1))
                            continue;
                        for (int y1p : g.neighbors(y1)) {
                            if (y1p == x || y1p == xp || y1p == z1) continue;
                            for (int z1p : g.neighbors(z1)) {
                                std::vector<int> seed{x, xp, y1, y1p, z1, z1p};
                                if (!induces_exactly(seed, {{0, 1}, {0, 2}, {2, 3},
                                                            {1, 4}, {4, 5}}))
                                    continue;
                                std::vector<char> removed =
                                    closed_neighborhood({y1, y1p, z1, z1p});
                                for (int u : g.neighbors(x))
                                    if (g.adjacent(u, xp)) removed[u] = 1;
                                assemble({make_edge(x, xp), make_edge(y1, y1p),
                                          make_edge(z1, z1p)},
                                         removed, neighbor_flags({x, xp}));
                            }
                        }
                    }
                }
            }
    }

    void seeded_linked_spiders() {
        // adjacent hubs x, y, each matched to its own pendant, one explicit
        // leg on each hub; the hubs' common neighborhood is deleted
        for (int x = 0; x < n; ++x)
            for (int y : g.neighbors(x)) {
                if (y <= x) continue;  // swapping the two spiders mirrors the candidate
                for (int xp : g.neighbors(x)) {
                    if (xp == y || g.adjacent(xp, y)) continue;
                    for (int yp : g.neighbors(y)) {
                        if (yp == x || yp == xp || g.adjacent(yp, x) || g.adjacent(yp, xp))
                            continue;
                        for (int w1 : g.neighbors(x)) {
                            if (w1 == y || w1 == xp || w1 == yp) continue;
                            if (g.adjacent(w1, y) || g.adjacent(w1, xp) || g.adjacent(w1, yp))
                                continue;
                            for (int z1 : g.neighbors(y)) {
                                if (z1 == x || z1 == xp || z1 == yp || z1 == w1) continue;
                                if (g.adjacent(z1, x) || g.adjacent(z1, xp) ||
                                    g.adjacent(z1, yp) || g.adjacent(z1, w1))
                                    continue;
                                for (int w1p : g.neighbors(w1)) {
                                    if (w1p == x || w1p == y || w1p == xp || w1p == yp ||
                                        w1p == z1)
                                        continue;
                                    for (int z1p : g.neighbors(z1)) {
                                        std::vector<int> seed{x, xp, y, yp, w1, w1p, z1, z1p};
                                        if (!induces_exactly(seed,
                                                             {{0, 1}, {0, 2}, {2, 3},
                                                              {0, 4}, {4, 5}, {2, 6}, {6, 7}}))
                                            continue;
                                        std::vector<char> removed = closed_neighborhood(
                                            {xp, yp, w1, w1p, z1, z1p});
                                        for (int u : g.neighbors(x))
                                            if (g.adjacent(u, y)) removed[u] = 1;
                                        assemble({make_edge(x, xp), make_edge(y, yp),
                                                  make_edge(w1, w1p), make_edge(z1, z1p)},
                                                 removed, neighbor_flags({x, y}));
                                    }
                                }
                            }
                        }
                    }
                }
            }
    }

    SolveResult run() {
        SolveResult base = mwim(g, limits, backend);
        consider(base.value, base.witness.edges());  // an induced matching is acyclic

        seeded_p4_components();
        seeded_spiders();
        seeded_double_spiders();
        seeded_linked_spiders();

        SolveResult out;
        out.kind = MatchingKind::Acyclic;
        out.value = best.value;
        out.witness = Matching(best.edges);
        return out;
    }
};

}  // namespace

SolveResult mwam_2p3free(const Graph& g, const SolveLimits& limits, const MwimBackend& backend) {
    if (auto w = find_induced_2p3(g)) throw NotTwoP3FreeError(*w);
    TwoP3Solver solver(g, limits, backend);
    SolveResult out = solver.run();
    assert(is_kind_matching(g, out.witness, MatchingKind::Acyclic, limits));
    return out;
}

}  // namespace acm
