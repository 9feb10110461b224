#include "acm/sat_reduction.hpp"

#include <algorithm>
#include <cassert>
#include <cstdlib>
#include <map>
#include <stdexcept>

#include "acm/oracles.hpp"

namespace acm {

// --------------------------------------------------------------- formulas

bool Clause::tautological() const {
    for (int lit : lits)
        if (lit > 0 && contains(-lit)) return true;
    return false;
}

bool Clause::contains(int lit) const {
    return std::find(lits.begin(), lits.end(), lit) != lits.end();
}

int CnfFormula::literal_count() const {
    int total = 0;
    for (const auto& c : clauses) total += static_cast<int>(c.lits.size());
    return total;
}

namespace {

bool lit_order(int a, int b) {
    if (std::abs(a) != std::abs(b)) return std::abs(a) < std::abs(b);
    return a < b;
}

Clause make_clause(std::vector<int> lits) {
    std::sort(lits.begin(), lits.end(), lit_order);
    lits.erase(std::unique(lits.begin(), lits.end()), lits.end());
    return Clause{std::move(lits)};
}

void require_lits_in_range(const CnfFormula& f) {
    for (const auto& c : f.clauses)
        for (int lit : c.lits)
            if (lit == 0 || std::abs(lit) > f.num_vars)
                throw ValidationError("literal " + std::to_string(lit) + " out of range");
}

struct OccurrenceCounts {
    std::vector<int> pos, neg;  // indexed by variable, 1-based
    explicit OccurrenceCounts(const CnfFormula& f) : pos(f.num_vars + 1, 0), neg(f.num_vars + 1, 0) {
        for (const auto& c : f.clauses)
            for (int lit : c.lits) (lit > 0 ? pos[lit] : neg[-lit])++;
    }
};

}  // namespace

bool is_restricted_form(const CnfFormula& f) {
    for (const auto& c : f.clauses) {
        if (c.lits.size() < 2 || c.lits.size() > 3) return false;
        if (c.tautological()) return false;
        for (size_t i = 1; i < c.lits.size(); ++i)
            if (std::abs(c.lits[i]) == std::abs(c.lits[i - 1])) return false;  // dup variable
    }
    OccurrenceCounts occ(f);
    for (int v = 1; v <= f.num_vars; ++v)
        if (occ.pos[v] > 2 || occ.neg[v] > 2) return false;
    return true;
}

void require_buildable(const CnfFormula& f) {
    require_lits_in_range(f);
    if (!is_restricted_form(f)) throw ValidationError("formula is not in restricted form");
    OccurrenceCounts occ(f);
    for (int v = 1; v <= f.num_vars; ++v)
        if ((occ.pos[v] == 0) != (occ.neg[v] == 0))
            throw ValidationError("variable " + std::to_string(v) +
                                  " occurs in only one polarity; normalize first");
}

NormalizeResult normalize_cnf(const CnfFormula& f) {
    require_lits_in_range(f);
    std::vector<Clause> clauses;
    for (const auto& c : f.clauses) clauses.push_back(make_clause(c.lits));
    int num_vars = f.num_vars;

    for (;;) {
        // tautologies can simply be removed
        std::erase_if(clauses, [](const Clause& c) { return c.tautological(); });
        bool empty_clause = false;
        for (const auto& c : clauses) empty_clause = empty_clause || c.lits.empty();
        if (empty_clause) return {NormalizeResult::Status::Unsatisfiable, {}};
        if (clauses.empty()) return {NormalizeResult::Status::Satisfiable, {}};

        // unit clauses assign their variable
        int unit = 0;
        for (const auto& c : clauses)
            if (c.lits.size() == 1) {
                unit = c.lits.front();
                break;
            }
        if (unit != 0) {
            std::vector<Clause> next;
            for (auto& c : clauses) {
                if (c.contains(unit)) continue;
                Clause reduced = c;
                std::erase(reduced.lits, -unit);
                next.push_back(std::move(reduced));
            }
            clauses = std::move(next);
            continue;
        }

        // pure literals are satisfied free of charge
        std::vector<int> pos(num_vars + 1, 0), neg(num_vars + 1, 0);
        for (const auto& c : clauses)
            for (int lit : c.lits) (lit > 0 ? pos[lit] : neg[-lit])++;
        int pure = 0;
        for (int v = 1; v <= num_vars && pure == 0; ++v) {
            if (pos[v] > 0 && neg[v] == 0) pure = v;
            if (neg[v] > 0 && pos[v] == 0) pure = -v;
        }
        if (pure != 0) {
            std::erase_if(clauses, [&](const Clause& c) { return c.contains(pure); });
            continue;
        }
        break;
    }

    // compact the variable numbering
    std::vector<int> remap(num_vars + 1, 0);
    int used = 0;
    for (const auto& c : clauses)
        for (int lit : c.lits)
            if (remap[std::abs(lit)] == 0) remap[std::abs(lit)] = -1;  // mark
    for (int v = 1; v <= num_vars; ++v)
        if (remap[v] == -1) remap[v] = ++used;

    CnfFormula out;
    out.num_vars = used;
    for (const auto& c : clauses) {
        std::vector<int> lits;
        for (int lit : c.lits) lits.push_back(lit > 0 ? remap[lit] : -remap[-lit]);
        out.clauses.push_back(make_clause(std::move(lits)));
    }

    if (!is_restricted_form(out))
        throw NotNormalizableError("occurrence or clause-size bounds cannot be met");
    return {NormalizeResult::Status::Restricted, std::move(out)};
}

// ----------------------------------------------------------------- gadget

namespace {

constexpr int kU = 0, kW = 4, kX = 6, kT = 8, kF = 12, kY = 16, kZ = 24;

const std::array<Edge, 38>& gadget_edge_table() {
    static const std::array<Edge, 38> table = [] {
        std::array<Edge, 38> e{};
        int p = 0;
        auto add = [&](int a, int b) { e[p++] = make_edge(a, b); };
        for (int j = 0; j < 8; ++j) add(kY + j, kZ + j);
        for (int j = 0; j < 4; ++j) {
            add(kU + j, kT + j);
            add(kU + j, kF + j);
        }
        add(kW, kU);          // w1-u1
        add(kW, kU + 1);      // w1-u2
        add(kW + 1, kU + 2);  // w2-u3
        add(kW + 1, kU + 3);  // w2-u4
        add(kX, kW);          // x1-w1
        add(kX + 1, kW + 1);  // x2-w2
        // each y(i,2j-1) ties a t-slot to an f-slot, each y(i,2j) an f-slot
        // to a t-slot; together they pin all four u-edges to one side
        add(kY + 0, kT + 0);
        add(kY + 0, kF + 1);
        add(kY + 4, kT + 1);
        add(kY + 4, kF + 2);
        add(kY + 2, kT + 2);
        add(kY + 2, kF + 3);
        add(kY + 6, kT + 0);
        add(kY + 6, kF + 3);
        add(kY + 1, kF + 0);
        add(kY + 1, kT + 1);
        add(kY + 5, kF + 1);
        add(kY + 5, kT + 2);
        add(kY + 3, kF + 2);
        add(kY + 3, kT + 3);
        add(kY + 7, kF + 0);
        add(kY + 7, kT + 3);
        std::sort(e.begin(), e.end());
        return e;
    }();
    return table;
}

// the three cycles every correct gadget must contain; they force the four
// u-edges of an acyclic maximum matching onto a single side
const std::vector<std::vector<int>>& gadget_cycle_table() {
    static const std::vector<std::vector<int>> cycles = {
        {kU, kT, kY, kF + 1, kU + 1, kW},
        {kU + 1, kT + 1, kY + 4, kF + 2, kU + 2, kW + 1, kU + 3, kF + 3, kY + 6, kT, kU, kW},
        {kF, kY + 1, kT + 1, kU + 1, kW, kU},
    };
    return cycles;
}

// tripwire: the hand-entered edge table must contain all three cycles
bool gadget_tables_consistent() {
    const auto& edges = gadget_edge_table();
    auto has = [&](int a, int b) {
        return std::binary_search(edges.begin(), edges.end(), make_edge(a, b));
    };
    for (const auto& cycle : gadget_cycle_table())
        for (size_t i = 0; i < cycle.size(); ++i)
            if (!has(cycle[i], cycle[(i + 1) % cycle.size()])) return false;
    int max_local = 0;
    for (auto& [a, b] : edges) max_local = std::max({max_local, a, b});
    return max_local == 31;
}

void require_gadget_tables() {
    static const bool ok = gadget_tables_consistent();
    if (!ok) throw std::logic_error("gadget edge table lost one of its defining cycles");
}

}  // namespace

int gadget_local_id(char kind, int j) {
    switch (kind) {
        case 'u': return kU + j - 1;
        case 'w': return kW + j - 1;
        case 'x': return kX + j - 1;
        case 't': return kT + j - 1;
        case 'f': return kF + j - 1;
        case 'y': return kY + j - 1;
        case 'z': return kZ + j - 1;
        default: throw ValidationError("unknown gadget role kind");
    }
}

std::pair<char, int> gadget_role_of(int local) {
    if (local >= kZ) return {'z', local - kZ + 1};
    if (local >= kY) return {'y', local - kY + 1};
    if (local >= kF) return {'f', local - kF + 1};
    if (local >= kT) return {'t', local - kT + 1};
    if (local >= kX) return {'x', local - kX + 1};
    if (local >= kW) return {'w', local - kW + 1};
    return {'u', local - kU + 1};
}

const std::array<Edge, 38>& gadget_edges_local() {
    require_gadget_tables();
    return gadget_edge_table();
}

std::string gadget_role_name(int var_index, int local) {
    auto [kind, j] = gadget_role_of(local);
    return std::string(1, kind) + "(" + std::to_string(var_index) + "," + std::to_string(j) + ")";
}

std::vector<std::pair<std::string, std::string>> build_gadget(int var_index) {
    std::vector<std::pair<std::string, std::string>> out;
    for (auto& [a, b] : gadget_edges_local())
        out.push_back({gadget_role_name(var_index, a), gadget_role_name(var_index, b)});
    return out;
}

// --------------------------------------------------------------- instance

int ReductionInstance::gadget_vertex(int var_index, char kind, int j) const {
    return gadget_base(var_index) + gadget_local_id(kind, j);
}

int ReductionInstance::literal_vertex(int clause_index, int lit) const {
    for (const auto& lv : literal_vertices)
        if (lv.clause == clause_index && lv.lit == lit) return lv.first_id;
    throw ValidationError("no such clause literal");
}

namespace {

std::string literal_name(int lit, int clause_display, int which) {
    std::string base = (lit > 0 ? "x" : "~x") + std::to_string(std::abs(lit));
    return base + "(" + std::to_string(clause_display) + "," + std::to_string(which) + ")";
}

}  // namespace

ReductionInstance build_reduction(const CnfFormula& f) {
    require_gadget_tables();
    CnfFormula canon;
    canon.num_vars = f.num_vars;
    for (const auto& c : f.clauses) canon.clauses.push_back(make_clause(c.lits));
    require_buildable(canon);

    const int n = canon.num_vars;
    ReductionInstance inst;
    inst.formula = canon;

    std::vector<Edge> edges;
    // gadgets
    for (int i = 1; i <= n; ++i) {
        int base = 32 * (i - 1);
        for (auto& [a, b] : gadget_edges_local()) edges.push_back(make_edge(base + a, base + b));
    }
    // one K2 per clause literal
    int next_id = 32 * n;
    for (size_t r = 0; r < canon.clauses.size(); ++r)
        for (int lit : canon.clauses[r].lits) {
            inst.literal_vertices.push_back({static_cast<int>(r), lit, next_id});
            edges.push_back(make_edge(next_id, next_id + 1));
            next_id += 2;
        }
    const int order = next_id;

    std::map<std::pair<int, int>, int> lit_vertex;  // (clause, lit) -> first id
    for (const auto& lv : inst.literal_vertices) lit_vertex[{lv.clause, lv.lit}] = lv.first_id;

    // clause wiring: the q-th clause containing the literal (by ascending
    // clause index) uses slots 2q-1, 2q of the f-row for positive and of
    // the t-row for negative occurrences
    auto wire = [&](int i, int r, int own_lit, int slot1_local, int slot2_local) {
        const Clause& c = canon.clauses[r];
        int base = 32 * (i - 1);
        std::vector<int> others;
        for (int lit : c.lits)
            if (lit != own_lit) others.push_back(lit);
        if (others.size() == 1) {
            int j = std::abs(others.front());
            int own_v = lit_vertex[{r, own_lit}];
            int other_v = lit_vertex[{r, others.front()}];
            if (i < j) {
                edges.push_back(make_edge(own_v, base + slot1_local));
                edges.push_back(make_edge(other_v, base + slot2_local));
            } else {
                edges.push_back(make_edge(own_v, base + slot2_local));
                edges.push_back(make_edge(other_v, base + slot1_local));
            }
        } else {
            // three literals: the two partners wire into this gadget
            edges.push_back(make_edge(lit_vertex[{r, others[0]}], base + slot1_local));
            edges.push_back(make_edge(lit_vertex[{r, others[1]}], base + slot2_local));
        }
    };

    for (int i = 1; i <= n; ++i) {
        std::vector<int> pos_clauses, neg_clauses;
        for (size_t r = 0; r < canon.clauses.size(); ++r) {
            if (canon.clauses[r].contains(i)) pos_clauses.push_back(static_cast<int>(r));
            if (canon.clauses[r].contains(-i)) neg_clauses.push_back(static_cast<int>(r));
        }
        for (size_t q = 0; q < pos_clauses.size(); ++q)
            wire(i, pos_clauses[q], i, kF + 2 * static_cast<int>(q),
                 kF + 2 * static_cast<int>(q) + 1);
        for (size_t q = 0; q < neg_clauses.size(); ++q)
            wire(i, neg_clauses[q], -i, kT + 2 * static_cast<int>(q),
                 kT + 2 * static_cast<int>(q) + 1);
    }

    inst.graph = Graph(order, edges);

    // partite sets: u, x, y vertices and the degree-3 clause vertices
    std::vector<char> in_a(order, 0);
    for (int i = 1; i <= n; ++i) {
        int base = 32 * (i - 1);
        for (int j = 0; j < 4; ++j) in_a[base + kU + j] = 1;
        in_a[base + kX] = in_a[base + kX + 1] = 1;
        for (int j = 0; j < 8; ++j) in_a[base + kY + j] = 1;
    }
    for (const auto& lv : inst.literal_vertices) in_a[lv.first_id] = 1;
    for (int v = 0; v < order; ++v) (in_a[v] ? inst.side_a : inst.side_b).push_back(v);

    // labels in id order
    for (int i = 1; i <= n; ++i)
        for (int local = 0; local < 32; ++local)
            inst.labels.push_back({gadget_role_name(i, local), 32 * (i - 1) + local});
    for (const auto& lv : inst.literal_vertices) {
        inst.labels.push_back({literal_name(lv.lit, lv.clause + 1, 1), lv.first_id});
        inst.labels.push_back({literal_name(lv.lit, lv.clause + 1, 2), lv.first_id + 1});
    }

#ifndef NDEBUG
    for (auto& [u, v] : inst.graph.edges()) assert(in_a[u] + in_a[v] == 1);
    assert(static_cast<int>(inst.side_a.size()) == 14 * n + canon.literal_count());
#endif
    return inst;
}

// ----------------------------------------------------------- verification

bool VerifyReport::all_pass() const {
    for (const auto& c : checks)
        if (!c.pass) return false;
    return true;
}

namespace {

template <typename Fn>
void run_check(VerifyReport& report, const std::string& name, Fn&& fn) {
    VerifyCheck check;
    check.name = name;
    try {
        check.detail = fn(check.pass);
    } catch (const std::exception& e) {
        check.pass = false;
        check.detail = std::string("exception: ") + e.what();
    }
    report.checks.push_back(std::move(check));
}

}  // namespace

VerifyReport verify_instance(const ReductionInstance& inst) {
    VerifyReport report;
    const Graph& g = inst.graph;
    const int n = inst.num_vars();
    const long long size_a = static_cast<long long>(inst.side_a.size());

    run_check(report, "vertex-partition", [&](bool& pass) {
        std::vector<char> seen(g.order(), 0);
        for (int v : inst.side_a) seen[v] += 1;
        for (int v : inst.side_b) seen[v] += 1;
        pass = std::all_of(seen.begin(), seen.end(), [](char c) { return c == 1; });
        return "A and B partition V";
    });

    run_check(report, "bipartite-with-sides", [&](bool& pass) {
        std::vector<char> in_a(g.order(), 0);
        for (int v : inst.side_a) in_a[v] = 1;
        pass = true;
        for (auto& [u, v] : g.edges()) pass = pass && (in_a[u] + in_a[v] == 1);
        return "every edge joins A and B";
    });

    run_check(report, "side-sizes", [&](bool& pass) {
        pass = inst.side_a.size() <= inst.side_b.size();
        return "|A| = " + std::to_string(inst.side_a.size()) +
               ", |B| = " + std::to_string(inst.side_b.size());
    });

    run_check(report, "max-degree-4", [&](bool& pass) {
        int max_deg = 0;
        for (int v = 0; v < g.order(); ++v) max_deg = std::max(max_deg, g.degree(v));
        pass = max_deg <= 4;
        return "max degree " + std::to_string(max_deg);
    });

    run_check(report, "gadget-structure", [&](bool& pass) {
        pass = true;
        for (int i = 1; i <= n && pass; ++i) {
            int base = inst.gadget_base(i);
            std::vector<Edge> internal;
            for (auto& [u, v] : g.edges())
                if (u >= base && u < base + 32 && v >= base && v < base + 32)
                    internal.push_back(make_edge(u - base, v - base));
            std::sort(internal.begin(), internal.end());
            const auto& expect = gadget_edges_local();
            pass = pass && internal.size() == expect.size() &&
                   std::equal(internal.begin(), internal.end(), expect.begin());
            int pendant = 0;
            for (int local = 0; local < 32; ++local) {
                bool is_end = g.degree(base + local) == 1;
                auto [kind, j] = gadget_role_of(local);
                bool should = kind == 'z' || kind == 'x';
                pass = pass && (is_end == should);
                if (is_end) ++pendant;
            }
            pass = pass && pendant == 10;
        }
        return std::to_string(n) + " gadgets with 32 vertices, 38 edges, 10 endvertices";
    });

    run_check(report, "gadget-cycles", [&](bool& pass) {
        pass = true;
        for (int i = 1; i <= n; ++i) {
            int base = inst.gadget_base(i);
            for (const auto& cycle : gadget_cycle_table())
                for (size_t p = 0; p < cycle.size(); ++p)
                    pass = pass &&
                           g.adjacent(base + cycle[p], base + cycle[(p + 1) % cycle.size()]);
        }
        return "alignment cycles present in every gadget";
    });

    run_check(report, "matching-number", [&](bool& pass) {
        if (!is_bipartite(g)) {
            pass = false;
            return std::string("graph is not bipartite");
        }
        long long nu = maximum_matching(g).value;
        pass = nu == size_a;
        return "nu = " + std::to_string(nu) + ", |A| = " + std::to_string(size_a);
    });

    run_check(report, "canonical-matching-maximum", [&](bool& pass) {
        Matching m = canonical_matching(inst);
        require_valid_matching(g, m);
        pass = static_cast<long long>(m.size()) == size_a;
        return "canonical matching has " + std::to_string(m.size()) + " edges";
    });

    run_check(report, "canonical-matching-uniquely-restricted", [&](bool& pass) {
        Matching m = canonical_matching(inst);
        pass = is_kind_matching(g, m, MatchingKind::UniquelyRestricted);
        return "uniquely restricted maximum matching witnesses nu_ur = nu";
    });

    return report;
}

// ----------------------------------------------------------- assignments

Matching assignment_to_matching(const ReductionInstance& inst,
                                const std::vector<bool>& assignment) {
    if (static_cast<int>(assignment.size()) != inst.num_vars())
        throw ValidationError("assignment length " + std::to_string(assignment.size()) +
                              " does not match variable count " +
                              std::to_string(inst.num_vars()));
    std::vector<Edge> edges;
    for (int i = 1; i <= inst.num_vars(); ++i) {
        int base = inst.gadget_base(i);
        for (int j = 0; j < 8; ++j) edges.push_back(make_edge(base + kY + j, base + kZ + j));
        edges.push_back(make_edge(base + kX, base + kW));
        edges.push_back(make_edge(base + kX + 1, base + kW + 1));
        int row = assignment[i - 1] ? kT : kF;  // true leaves the f-side unmatched
        for (int j = 0; j < 4; ++j) edges.push_back(make_edge(base + kU + j, base + row + j));
    }
    for (const auto& lv : inst.literal_vertices)
        edges.push_back(make_edge(lv.first_id, lv.first_id + 1));
    Matching m(edges);
    assert(m.size() == static_cast<int>(inst.side_a.size()));
    return m;
}

Matching canonical_matching(const ReductionInstance& inst) {
    return assignment_to_matching(inst, std::vector<bool>(inst.num_vars(), true));
}

bool decide_via_assignments(const ReductionInstance& inst, const SolveLimits& limits) {
    const int n = inst.num_vars();
    if (n > limits.assignment_sweep_max_vars)
        throw ResourceLimitError("assignment sweep over " + std::to_string(n) +
                                 " variables exceeds guard " +
                                 std::to_string(limits.assignment_sweep_max_vars));
    // an acyclic maximum matching must align every gadget entirely to its
    // t-side or f-side, so sweeping all assignments is exhaustive
    for (unsigned long long a = 0; a < (1ull << n); ++a) {
        std::vector<bool> assignment(n);
        for (int i = 0; i < n; ++i) assignment[i] = (a >> i) & 1;
        Matching m = assignment_to_matching(inst, assignment);
        if (is_kind_matching(inst.graph, m, MatchingKind::Acyclic, limits)) return true;
    }
    return false;
}

}  // namespace acm
