#include "acm/oracles.hpp"

#include <algorithm>
#include <bit>
#include <cassert>
#include <string>

namespace acm {

namespace {

// ------------------------------------------------ bipartite augmenting

struct BipartiteMatcher {
    const Graph& g;
    std::vector<int> mate;
    std::vector<char> visited;

    explicit BipartiteMatcher(const Graph& host) : g(host), mate(host.order(), -1) {}

    bool augment(int u) {
        for (int v : g.neighbors(u)) {
            if (visited[v]) continue;
            visited[v] = 1;
            if (mate[v] == -1 || augment(mate[v])) {
                mate[v] = u;
                mate[u] = v;
                return true;
            }
        }
        return false;
    }

    int run(const std::vector<int>& left) {
        int total = 0;
        for (int u : left) {
            if (mate[u] != -1) continue;
            visited.assign(g.order(), 0);
            if (augment(u)) ++total;
        }
        return total;
    }
};

// --------------------------------------------------- bitmask matching DP

struct MatchingDp {
    std::vector<uint32_t> nbr;
    std::vector<int8_t> memo;

    explicit MatchingDp(const Graph& g) : nbr(g.order(), 0) {
        for (auto& [u, v] : g.edges()) {
            nbr[u] |= 1u << v;
            nbr[v] |= 1u << u;
        }
        memo.assign(size_t(1) << g.order(), -1);
    }

    int solve(uint32_t mask) {
        if (mask == 0) return 0;
        int8_t& entry = memo[mask];
        if (entry >= 0) return entry;
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~(1u << v);
        int best = solve(rest);  // leave v unmatched
        uint32_t partners = nbr[v] & rest;
        while (partners) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            best = std::max(best, 1 + solve(rest & ~(1u << u)));
        }
        entry = static_cast<int8_t>(best);
        return best;
    }
};

void require_order(int order, int guard, const char* what) {
    if (order > guard)
        throw ResourceLimitError(std::string(what) + ": order " + std::to_string(order) +
                                 " exceeds guard " + std::to_string(guard));
}

}  // namespace

SolveResult maximum_matching(const Graph& g, const SolveLimits& limits) {
    SolveResult out;
    out.kind = MatchingKind::Unrestricted;
    if (g.order() == 0 || g.size() == 0) return out;

    if (auto bp = is_bipartite(g)) {
        BipartiteMatcher bm(g);
        out.value = bm.run(bp->side_a);
        std::vector<Edge> edges;
        for (int u : bp->side_a)
            if (bm.mate[u] != -1) edges.push_back(make_edge(u, bm.mate[u]));
        out.witness = Matching(std::move(edges));
        return out;
    }

    require_order(g.order(), limits.exact_matching_max_order, "maximum matching");
    MatchingDp dp(g);
    uint32_t mask = (g.order() == 32) ? ~0u : ((1u << g.order()) - 1);
    out.value = dp.solve(mask);

    // deterministic witness: walk the DP, preferring to leave the lowest
    // vertex unmatched, otherwise matching it to its smallest usable partner
    std::vector<Edge> edges;
    while (mask) {
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~(1u << v);
        int want = dp.solve(mask);
        if (dp.solve(rest) == want) {
            mask = rest;
            continue;
        }
        uint32_t partners = dp.nbr[v] & rest;
        while (partners) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            if (1 + dp.solve(rest & ~(1u << u)) == want) {
                edges.push_back(make_edge(v, u));
                mask = rest & ~(1u << u);
                break;
            }
        }
    }
    out.witness = Matching(std::move(edges));
    assert(static_cast<long long>(out.witness.size()) == out.value);
    return out;
}

bool has_perfect_matching(const Graph& g, const SolveLimits& limits) {
    int n = g.order();
    if (n % 2 == 1) return false;
    if (n == 0) return true;
    if (auto bp = is_bipartite(g)) {
        if (bp->side_a.size() != bp->side_b.size()) return false;
        BipartiteMatcher bm(g);
        return bm.run(bp->side_a) == n / 2;
    }
    require_order(n, limits.exact_matching_max_order, "perfect matching test");
    MatchingDp dp(g);
    uint32_t mask = (n == 32) ? ~0u : ((1u << n) - 1);
    return dp.solve(mask) == n / 2;
}

// ===================================================================
// branch and bound for kind-restricted maximum matchings
// ===================================================================

namespace {

// Perfect-matching test on a vertex subset of the host graph, as bitmasks
// over a local index space. Used by the incremental uniquely-restricted
// feasibility check; components are small, so this stays cheap.
struct LocalPmTester {
    std::vector<uint32_t> nbr;
    std::vector<int8_t> memo;  // -1 unknown, 0 no, 1 yes

    void build(const Graph& g, const std::vector<int>& verts) {
        int k = static_cast<int>(verts.size());
        nbr.assign(k, 0);
        for (int i = 0; i < k; ++i)
            for (int j = i + 1; j < k; ++j)
                if (g.adjacent(verts[i], verts[j])) {
                    nbr[i] |= 1u << j;
                    nbr[j] |= 1u << i;
                }
        memo.assign(size_t(1) << k, -1);
    }

    bool has_pm(uint32_t mask) {
        if (mask == 0) return true;
        int8_t& entry = memo[mask];
        if (entry >= 0) return entry;
        int v = std::countr_zero(mask);
        uint32_t rest = mask & ~(1u << v);
        uint32_t partners = nbr[v] & rest;
        bool ok = false;
        while (partners && !ok) {
            int u = std::countr_zero(partners);
            partners &= partners - 1;
            ok = has_pm(rest & ~(1u << u));
        }
        entry = ok;
        return ok;
    }
};

struct RestrictedSearch {
    const Graph& g;
    MatchingKind kind;
    bool weighted;
    const SolveLimits& limits;
    int n;

    std::vector<Edge> cand;        // candidate edges, ascending
    std::vector<long long> cval;   // contribution of each candidate
    std::vector<int> cand_pos;     // graph edge index -> candidate index or -1

    std::vector<char> in_vm;       // vertex covered by the current matching
    std::vector<int> mate;         // partner in the current matching, -1 free
    std::vector<Edge> current;
    long long current_value = 0;

    std::vector<Edge> best;
    long long best_value = 0;      // empty matching is always feasible

    // union-find over V(M) with rollback, for the incremental forest check
    std::vector<int> uf_parent, uf_rank;
    struct UfRecord {
        int child, old_parent, root, old_rank;
    };
    std::vector<UfRecord> uf_log;

    // exact matching bound on the remaining candidate subgraph; only
    // maintained for bipartite hosts in unweighted mode, where the repair
    // augmentation is exact
    bool matching_bound = false;
    std::vector<int> mate_bound;
    std::vector<int> bound_seen;
    int bound_stamp = 0;
    std::vector<std::vector<int>> saved_bound;  // per recursion depth

    std::vector<int> stamp_free;
    int free_stamp = 0;
    std::vector<long long> weight_scratch;
    std::vector<int> comp_scratch;
    LocalPmTester pm_tester;

    RestrictedSearch(const Graph& host, MatchingKind k, bool w, const SolveLimits& lim)
        : g(host), kind(k), weighted(w), limits(lim), n(host.order()) {
        cand_pos.assign(g.size(), -1);
        for (int i = 0; i < g.size(); ++i) {
            if (weighted && g.weight_at(i) <= 0) continue;  // hereditary: dropping keeps feasibility
            cand_pos[i] = static_cast<int>(cand.size());
            cand.push_back(g.edges()[i]);
            cval.push_back(weighted ? g.weight_at(i) : 1);
        }
        in_vm.assign(n, 0);
        mate.assign(n, -1);
        uf_parent.resize(n);
        uf_rank.assign(n, 0);
        for (int i = 0; i < n; ++i) uf_parent[i] = i;
        stamp_free.assign(n, 0);

        if (!weighted && n > 20 && is_bipartite(g).has_value()) {
            matching_bound = true;
            mate_bound.assign(n, -1);
            bound_seen.assign(n, 0);
            // seed with a maximum matching of the full candidate subgraph
            for (int v = 0; v < n; ++v)
                if (mate_bound[v] == -1) try_augment_bound(v, 0);
        }
    }

    // ---- union-find with rollback ----

    int uf_find(int x) const {
        while (uf_parent[x] != x) x = uf_parent[x];
        return x;
    }

    bool uf_unite(int a, int b) {
        int ra = uf_find(a), rb = uf_find(b);
        if (ra == rb) return false;
        if (uf_rank[ra] > uf_rank[rb]) std::swap(ra, rb);
        uf_log.push_back({ra, uf_parent[ra], rb, uf_rank[rb]});
        uf_parent[ra] = rb;
        if (uf_rank[ra] == uf_rank[rb]) ++uf_rank[rb];
        return true;
    }

    void uf_rollback(size_t mark) {
        while (uf_log.size() > mark) {
            const UfRecord& r = uf_log.back();
            uf_parent[r.child] = r.old_parent;
            uf_rank[r.root] = r.old_rank;
            uf_log.pop_back();
        }
    }

    // ---- kind-specific incremental feasibility ----

    bool acyclic_add(int u, int v, size_t& mark) {
        mark = uf_log.size();
        // u and v join V(M); every host edge between {u,v} and the new V(M)
        // becomes an edge of G(M) and must keep it a forest
        for (int x : g.neighbors(u)) {
            if (x == v || in_vm[x]) {
                if (!uf_unite(u, x)) {
                    uf_rollback(mark);
                    return false;
                }
            }
        }
        for (int x : g.neighbors(v)) {
            if (in_vm[x]) {
                if (!uf_unite(v, x)) {
                    uf_rollback(mark);
                    return false;
                }
            }
        }
        return true;
    }

    bool induced_ok(int u, int v) const {
        for (int x : g.neighbors(u))
            if (x != v && in_vm[x]) return false;
        for (int x : g.neighbors(v))
            if (x != u && in_vm[x]) return false;
        return true;
    }

    // Uniquely restricted: adding uv can only create an alternating cycle
    // through uv, and such a cycle uses a non-matching G(M)-edge at u. So it
    // suffices to test, within the new component, whether removing u and a
    // non-matching neighbor x of u leaves a perfect matching.
    bool unique_ok_after_tentative_add(int u, int v) {
        comp_scratch.clear();
        comp_scratch.push_back(u);
        ++free_stamp;
        stamp_free[u] = free_stamp;
        for (size_t head = 0; head < comp_scratch.size(); ++head)
            for (int x : g.neighbors(comp_scratch[head]))
                if (in_vm[x] && stamp_free[x] != free_stamp) {
                    stamp_free[x] = free_stamp;
                    comp_scratch.push_back(x);
                }
        std::sort(comp_scratch.begin(), comp_scratch.end());
        if (comp_scratch.size() > 20)
            throw ResourceLimitError("uniquely restricted check: component of order " +
                                     std::to_string(comp_scratch.size()) + " exceeds guard 20");

        // pick the endpoint with fewer neighbors inside the component
        int a = u, b = v;
        int du = 0, dv = 0;
        for (int x : g.neighbors(u))
            if (in_vm[x]) ++du;
        for (int x : g.neighbors(v))
            if (in_vm[x]) ++dv;
        if (dv < du) std::swap(a, b);

        pm_tester.build(g, comp_scratch);
        uint32_t full = (1u << comp_scratch.size()) - 1;
        auto local_of = [&](int vertex) {
            return static_cast<int>(std::lower_bound(comp_scratch.begin(), comp_scratch.end(),
                                                     vertex) -
                                    comp_scratch.begin());
        };
        int la = local_of(a);
        for (int x : g.neighbors(a)) {
            if (!in_vm[x] || x == mate[a]) continue;
            uint32_t mask = full & ~(1u << la) & ~(1u << local_of(x));
            if (pm_tester.has_pm(mask)) return false;
        }
        return true;
    }

    // ---- bound machinery ----

    int cand_index(int a, int b) const {
        int gi = g.edge_index(a, b);
        return gi < 0 ? -1 : cand_pos[gi];
    }

    bool available(int a, int b, int k) const {
        if (in_vm[a] || in_vm[b]) return false;
        int ci = cand_index(a, b);
        return ci >= k;
    }

    bool bound_aug_dfs(int a, int k) {
        for (int b : g.neighbors(a)) {
            if (bound_seen[b] == bound_stamp) continue;
            if (in_vm[b]) continue;
            int ci = cand_index(a, b);
            if (ci < k) continue;
            bound_seen[b] = bound_stamp;
            if (mate_bound[b] == -1 || bound_aug_dfs(mate_bound[b], k)) {
                mate_bound[b] = a;
                mate_bound[a] = b;
                return true;
            }
        }
        return false;
    }

    bool try_augment_bound(int a, int k) {
        if (in_vm[a] || mate_bound[a] != -1) return false;
        ++bound_stamp;
        return bound_aug_dfs(a, k);
    }

    // Repair mate_bound into a maximum matching of the candidate subgraph
    // restricted to indices >= k and free endpoints. Exact for bipartite
    // hosts: dropped edges expose at most two vertices each, and every new
    // augmenting path starts at an exposed vertex.
    int repair_bound(int k) {
        std::vector<int> exposed;
        for (int a = 0; a < n; ++a) {
            int b = mate_bound[a];
            if (b <= a) continue;
            if (!available(a, b, k)) {
                mate_bound[a] = mate_bound[b] = -1;
                exposed.push_back(a);
                exposed.push_back(b);
            }
        }
        for (int a : exposed)
            if (mate_bound[a] == -1 && !in_vm[a]) try_augment_bound(a, k);
        int pairs = 0;
        for (int a = 0; a < n; ++a)
            if (mate_bound[a] > a) ++pairs;
        return pairs;
    }

    // admissible optimistic bound on what can still be added at position k
    bool may_improve(int k, int depth) {
        long long sum = 0;
        int cnt = 0, free_endpoints = 0;
        ++free_stamp;
        weight_scratch.clear();
        for (size_t j = k; j < cand.size(); ++j) {
            auto [a, b] = cand[j];
            if (in_vm[a] || in_vm[b]) continue;
            sum += cval[j];
            ++cnt;
            if (stamp_free[a] != free_stamp) {
                stamp_free[a] = free_stamp;
                ++free_endpoints;
            }
            if (stamp_free[b] != free_stamp) {
                stamp_free[b] = free_stamp;
                ++free_endpoints;
            }
            if (weighted) weight_scratch.push_back(cval[j]);
        }
        if (current_value + sum <= best_value) return false;
        int cap = free_endpoints / 2;
        if (!weighted) {
            if (current_value + std::min(cnt, cap) <= best_value) return false;
            if (matching_bound) {
                saved_bound.resize(std::max<size_t>(saved_bound.size(), depth + 1));
                saved_bound[depth] = mate_bound;
                int nu = repair_bound(k);
                if (current_value + nu <= best_value) {
                    mate_bound = saved_bound[depth];
                    return false;
                }
            }
        } else if (cap < cnt) {
            std::sort(weight_scratch.begin(), weight_scratch.end(), std::greater<>());
            long long top = 0;
            for (int i = 0; i < cap; ++i) top += weight_scratch[i];
            if (current_value + top <= best_value) return false;
        }
        return true;
    }

    void restore_bound(int depth) {
        if (matching_bound) mate_bound = saved_bound[depth];
    }

    // ---- search ----

    void record() {
        if (current_value > best_value) {
            best_value = current_value;
            best = current;
        }
    }

    void dfs(size_t k, int depth) {
        while (k < cand.size() && (in_vm[cand[k].first] || in_vm[cand[k].second])) ++k;
        record();
        if (k == cand.size()) return;
        if (!may_improve(static_cast<int>(k), depth)) return;

        auto [u, v] = cand[k];
        size_t uf_mark = 0;
        bool can_add = true;
        switch (kind) {
            case MatchingKind::Unrestricted: break;
            case MatchingKind::Induced: can_add = induced_ok(u, v); break;
            case MatchingKind::Acyclic: can_add = acyclic_add(u, v, uf_mark); break;
            case MatchingKind::UniquelyRestricted: break;  // checked after tentative add
        }
        if (can_add) {
            in_vm[u] = in_vm[v] = 1;
            mate[u] = v;
            mate[v] = u;
            bool keep = true;
            if (kind == MatchingKind::UniquelyRestricted)
                keep = unique_ok_after_tentative_add(u, v);
            if (keep) {
                current.push_back({u, v});
                current_value += cval[k];
                dfs(k + 1, depth + 1);
                current_value -= cval[k];
                current.pop_back();
            }
            in_vm[u] = in_vm[v] = 0;
            mate[u] = mate[v] = -1;
        }
        if (kind == MatchingKind::Acyclic && can_add) uf_rollback(uf_mark);

        dfs(k + 1, depth + 1);
        restore_bound(depth);
    }

    SolveResult run() {
        dfs(0, 0);
        SolveResult out;
        out.kind = kind;
        out.value = best_value;
        out.witness = Matching(best);
        return out;
    }
};

}  // namespace

SolveResult max_restricted_matching(const Graph& g, MatchingKind kind, bool weighted,
                                    const SolveLimits& limits) {
    require_order(g.order(), limits.restricted_search_max_order, "restricted matching search");
    RestrictedSearch search(g, kind, weighted, limits);
    SolveResult out = search.run();
    assert(is_kind_matching(g, out.witness, kind, limits));
    return out;
}

// ===================================================================
// enumeration of maximum matchings
// ===================================================================

namespace {

struct Enumerator {
    const Graph& g;
    long long target;
    const std::function<bool(const Matching&)>& yield;
    std::vector<char> in_vm;
    std::vector<Edge> current;
    std::vector<int> stamp_free;
    int free_stamp = 0;
    bool aborted = false;

    Enumerator(const Graph& host, long long nu, const std::function<bool(const Matching&)>& fn)
        : g(host), target(nu), yield(fn), in_vm(host.order(), 0), stamp_free(host.order(), 0) {}

    void dfs(size_t k) {
        if (aborted) return;
        while (k < g.edges().size() && (in_vm[g.edges()[k].first] || in_vm[g.edges()[k].second]))
            ++k;
        if (k == g.edges().size()) {
            if (static_cast<long long>(current.size()) == target)
                if (!yield(Matching(current))) aborted = true;
            return;
        }
        // keep only branches that can still reach a maximum matching
        int cnt = 0, free_endpoints = 0;
        ++free_stamp;
        for (size_t j = k; j < g.edges().size(); ++j) {
            auto [a, b] = g.edges()[j];
            if (in_vm[a] || in_vm[b]) continue;
            ++cnt;
            if (stamp_free[a] != free_stamp) {
                stamp_free[a] = free_stamp;
                ++free_endpoints;
            }
            if (stamp_free[b] != free_stamp) {
                stamp_free[b] = free_stamp;
                ++free_endpoints;
            }
        }
        long long upper = current.size() + std::min(cnt, free_endpoints / 2);
        if (upper < target) return;

        auto [u, v] = g.edges()[k];
        in_vm[u] = in_vm[v] = 1;
        current.push_back({u, v});
        dfs(k + 1);
        current.pop_back();
        in_vm[u] = in_vm[v] = 0;
        if (aborted) return;
        dfs(k + 1);
    }
};

}  // namespace

void for_each_maximum_matching(const Graph& g, const std::function<bool(const Matching&)>& yield,
                               const SolveLimits& limits) {
    require_order(g.order(), limits.enumeration_max_order, "maximum matching enumeration");
    long long nu = maximum_matching(g, limits).value;
    Enumerator en(g, nu, yield);
    en.dfs(0);
}

std::vector<Matching> all_maximum_matchings(const Graph& g, const SolveLimits& limits) {
    std::vector<Matching> out;
    for_each_maximum_matching(
        g,
        [&](const Matching& m) {
            out.push_back(m);
            return true;
        },
        limits);
    return out;
}

bool every_maximum_matching_is(const Graph& g, MatchingKind kind, const SolveLimits& limits) {
    bool ok = true;
    for_each_maximum_matching(
        g,
        [&](const Matching& m) {
            if (!is_kind_matching(g, m, kind, limits)) {
                ok = false;
                return false;
            }
            return true;
        },
        limits);
    return ok;
}

}  // namespace acm
