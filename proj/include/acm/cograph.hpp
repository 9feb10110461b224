#pragma once

#include <vector>

#include "acm/graph.hpp"
#include "acm/oracles.hpp"

namespace acm {

// Decomposition tree of a P4-free graph. Leaves are exactly the vertices of
// the decomposed graph; Union children realize the components of the
// current induced subgraph, Join children the components of its complement.
// Canonical form: no Union child is a Union, no Join child a Join.
struct CotreeNode {
    enum class Type { Leaf, Union, Join };

    Type type = Type::Leaf;
    int vertex = -1;                  // Leaf only
    std::vector<CotreeNode> children; // Union/Join: at least two, ordered by
                                      // smallest contained vertex

    // sorted vertices of the subtree
    std::vector<int> vertices() const;
};

// Builds the canonical cotree by recursive complement-connectivity
// splitting; throws NotCographError (with an induced P4 in path order)
// exactly when g is not P4-free. Requires order >= 1.
CotreeNode build_cotree(const Graph& g);

// Reconstructs the (unit-weight) graph a cotree describes; inverse of
// build_cotree up to edge weights.
Graph evaluate_cotree(const CotreeNode& root, int n);

// Maximum-weight acyclic matching of a P4-free graph in polynomial time.
// On a disconnected graph the optimum is the union over components; on a
// join it lies inside a single part or is one positive cross edge, because
// two matching edges touching different parts always induce a 4-cycle.
// Ties break toward the lexicographically smallest witness.
SolveResult mwam_p4free(const Graph& g);

}  // namespace acm
