#include "acm/generate.hpp"

#include <algorithm>

#include "acm/cograph.hpp"

namespace acm {

GenModel parse_model(const std::string& name) {
    if (name == "gnp") return GenModel::Gnp;
    if (name == "tree") return GenModel::Tree;
    if (name == "cycle") return GenModel::Cycle;
    if (name == "star") return GenModel::Star;
    if (name == "cograph") return GenModel::Cograph;
    if (name == "twop3free") return GenModel::TwoP3Free;
    if (name == "reduction") return GenModel::Reduction;
    throw ValidationError("unknown generator model '" + name + "'");
}

const char* to_string(GenModel model) {
    switch (model) {
        case GenModel::Gnp: return "gnp";
        case GenModel::Tree: return "tree";
        case GenModel::Cycle: return "cycle";
        case GenModel::Star: return "star";
        case GenModel::Cograph: return "cograph";
        case GenModel::TwoP3Free: return "twop3free";
        case GenModel::Reduction: return "reduction";
    }
    return "?";
}

Graph path_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    return Graph(n, edges);
}

Graph cycle_graph(int n) {
    if (n < 3) throw ValidationError("cycle needs at least 3 vertices");
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({v - 1, v});
    edges.push_back(make_edge(n - 1, 0));
    return Graph(n, edges);
}

Graph star_graph(int n) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v) edges.push_back({0, v});
    return Graph(n, edges);
}

Graph complete_graph(int n) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v) edges.push_back({u, v});
    return Graph(n, edges);
}

namespace {

Graph with_random_weights(const Graph& g, SplitMix64& rng, int lo, int hi) {
    if (lo == 1 && hi == 1) return g;
    std::vector<int> weights(g.size());
    for (auto& w : weights) w = rng.range(lo, hi);
    return Graph(g.order(), g.edges(), weights);
}

Graph gnp(int n, double p, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int u = 0; u < n; ++u)
        for (int v = u + 1; v < n; ++v)
            if (rng.unit() < p) edges.push_back({u, v});
    return Graph(n, edges);
}

Graph random_tree(int n, SplitMix64& rng) {
    std::vector<Edge> edges;
    for (int v = 1; v < n; ++v)
        edges.push_back(make_edge(static_cast<int>(rng.below(v)), v));
    return Graph(n, edges);
}

CotreeNode random_cotree(const std::vector<int>& labels, size_t lo, size_t hi, bool join,
                         SplitMix64& rng) {
    if (hi - lo == 1) {
        CotreeNode leaf;
        leaf.type = CotreeNode::Type::Leaf;
        leaf.vertex = labels[lo];
        return leaf;
    }
    CotreeNode node;
    node.type = join ? CotreeNode::Type::Join : CotreeNode::Type::Union;
    size_t len = hi - lo;
    size_t parts = 2 + rng.below(std::min<uint64_t>(3, len - 1));
    // random composition of len into `parts` nonempty blocks
    std::vector<size_t> cuts{lo, hi};
    while (cuts.size() < parts + 1) {
        size_t c = lo + 1 + rng.below(len - 1);
        if (std::find(cuts.begin(), cuts.end(), c) == cuts.end()) cuts.push_back(c);
    }
    std::sort(cuts.begin(), cuts.end());
    for (size_t i = 0; i + 1 < cuts.size(); ++i)
        node.children.push_back(random_cotree(labels, cuts[i], cuts[i + 1], !join, rng));
    return node;
}

Graph random_cograph(int n, SplitMix64& rng) {
    std::vector<int> labels(n);
    for (int i = 0; i < n; ++i) labels[i] = i;
    for (int i = n - 1; i > 0; --i)
        std::swap(labels[i], labels[rng.below(i + 1)]);
    if (n == 1) return Graph(1, {});
    CotreeNode root = random_cotree(labels, 0, labels.size(), rng.below(2) == 0, rng);
    return evaluate_cotree(root, n);
}

}  // namespace

CnfFormula random_restricted_formula(int num_vars, uint64_t seed, int extra_clauses) {
    if (num_vars < 2)
        throw ValidationError("restricted formulas with both polarities need >= 2 variables");
    SplitMix64 rng(seed);
    CnfFormula f;
    f.num_vars = num_vars;

    // implication ring: variable i appears once positively and once
    // negatively, and setting x_i = sign_i satisfies every ring clause
    std::vector<int> sign(num_vars + 1);
    for (int v = 1; v <= num_vars; ++v) sign[v] = rng.below(2) == 0 ? 1 : -1;
    std::vector<int> pos_left(num_vars + 1, 2), neg_left(num_vars + 1, 2);
    auto spend = [&](int lit) { (lit > 0 ? pos_left[lit] : neg_left[-lit])--; };
    for (int v = 1; v <= num_vars; ++v) {
        int next = v % num_vars + 1;
        Clause c;
        c.lits = {sign[v] * v, -sign[next] * next};
        std::sort(c.lits.begin(), c.lits.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        for (int lit : c.lits) spend(lit);
        f.clauses.push_back(std::move(c));
    }

    for (int e = 0; e < extra_clauses; ++e) {
        int want = 2 + static_cast<int>(rng.below(2));
        std::vector<int> lits;
        for (int attempt = 0; attempt < 4 * num_vars && static_cast<int>(lits.size()) < want;
             ++attempt) {
            int v = rng.range(1, num_vars);
            bool positive = rng.below(2) == 0;
            int lit = positive ? v : -v;
            bool used = false;
            for (int l : lits) used = used || std::abs(l) == v;
            if (used) continue;
            if ((positive ? pos_left[v] : neg_left[v]) <= 0) continue;
            lits.push_back(lit);
        }
        if (static_cast<int>(lits.size()) < 2) continue;  // budget exhausted, skip
        for (int lit : lits) spend(lit);
        std::sort(lits.begin(), lits.end(),
                  [](int a, int b) { return std::abs(a) < std::abs(b); });
        f.clauses.push_back(Clause{std::move(lits)});
    }
    return f;
}

Graph generate(const GenSpec& spec) {
    SplitMix64 rng(spec.seed);
    switch (spec.model) {
        case GenModel::Gnp: {
            Graph g = gnp(spec.n, spec.edge_prob, rng);
            return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
        }
        case GenModel::Tree: {
            Graph g = random_tree(spec.n, rng);
            return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
        }
        case GenModel::Cycle: {
            Graph g = cycle_graph(spec.n);
            return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
        }
        case GenModel::Star: {
            Graph g = star_graph(spec.n);
            return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
        }
        case GenModel::Cograph: {
            Graph g = random_cograph(spec.n, rng);
            return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
        }
        case GenModel::TwoP3Free: {
            const double densities[] = {0.8, 0.65, 0.5, 0.35, 0.2};
            for (int attempt = 0; attempt < 500; ++attempt) {
                Graph g = gnp(spec.n, densities[attempt % 5], rng);
                if (is_2p3_free(g))
                    return with_random_weights(g, rng, spec.weight_min, spec.weight_max);
            }
            throw GenerationError("rejection sampling for a 2P3-free graph exhausted its budget");
        }
        case GenModel::Reduction: {
            CnfFormula f = random_restricted_formula(spec.n, rng.next());
            return build_reduction(f).graph;
        }
    }
    throw ValidationError("unhandled generator model");
}

}  // namespace acm
