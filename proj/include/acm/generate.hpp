#pragma once

#include <cstdint>
#include <string>

#include "acm/graph.hpp"
#include "acm/sat_reduction.hpp"

namespace acm {

// SplitMix64: the only randomness source in the project. Fully specified,
// so seeded runs are reproducible across platforms. Bounded draws use plain
// modulo reduction.
struct SplitMix64 {
    uint64_t state;

    explicit SplitMix64(uint64_t seed) : state(seed) {}

    uint64_t next() {
        uint64_t z = (state += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    uint64_t below(uint64_t bound) { return bound == 0 ? 0 : next() % bound; }

    int range(int lo, int hi) {  // inclusive
        return lo + static_cast<int>(below(static_cast<uint64_t>(hi - lo + 1)));
    }

    double unit() { return static_cast<double>(next() >> 11) * 0x1.0p-53; }
};

enum class GenModel { Gnp, Tree, Cycle, Star, Cograph, TwoP3Free, Reduction };

GenModel parse_model(const std::string& name);  // throws ValidationError
const char* to_string(GenModel model);

struct GenSpec {
    GenModel model = GenModel::Gnp;
    int n = 0;             // vertices (variables for Reduction)
    uint64_t seed = 1;
    double edge_prob = 0.5;  // Gnp only
    int weight_min = 1, weight_max = 1;
};

// Deterministic: identical specs produce identical graphs. The twop3free
// model rejection-samples Gnp over a bounded density schedule and raises
// GenerationError when the budget runs out.
Graph generate(const GenSpec& spec);

// Random formula in restricted form in which every variable occurs both
// positively and negatively: a satisfiable implication ring plus up to
// `extra_clauses` additional clauses within the occurrence budget.
// Requires n >= 2.
CnfFormula random_restricted_formula(int num_vars, uint64_t seed, int extra_clauses = 2);

// deterministic standard graphs
Graph path_graph(int n);
Graph cycle_graph(int n);
Graph star_graph(int n);
Graph complete_graph(int n);

}  // namespace acm
