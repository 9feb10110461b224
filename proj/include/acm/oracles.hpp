#pragma once

#include <functional>
#include <vector>

#include "acm/graph.hpp"
#include "acm/limits.hpp"

namespace acm {

// Result of any matching solver. In unweighted mode value == |witness|,
// in weighted mode value is the total weight of the witness.
struct SolveResult {
    long long value = 0;
    Matching witness;
    MatchingKind kind = MatchingKind::Unrestricted;
};

// Classical matching number with witness. Bipartite graphs use augmenting
// paths (polynomial, no size guard); everything else an exact bitmask DP
// guarded by limits.exact_matching_max_order.
SolveResult maximum_matching(const Graph& g, const SolveLimits& limits = {});

// True iff g has a perfect matching; same dispatch as maximum_matching.
bool has_perfect_matching(const Graph& g, const SolveLimits& limits = {});

// Exact maximum kind-restricted matching by depth-first search over edges
// in ascending index order with incremental feasibility and pruning. In
// weighted mode edges of non-positive weight are dropped up front (legal
// because feasibility is hereditary). Ties break toward the
// lexicographically smallest edge set. Guarded by
// limits.restricted_search_max_order.
SolveResult max_restricted_matching(const Graph& g, MatchingKind kind, bool weighted,
                                    const SolveLimits& limits = {});

// Calls yield for every matching of size nu(g), each exactly once, in
// lexicographic edge-set order. yield returns false to stop early.
// Guarded by limits.enumeration_max_order.
void for_each_maximum_matching(const Graph& g, const std::function<bool(const Matching&)>& yield,
                               const SolveLimits& limits = {});

std::vector<Matching> all_maximum_matchings(const Graph& g, const SolveLimits& limits = {});

// True iff every maximum matching of g satisfies the kind predicate.
bool every_maximum_matching_is(const Graph& g, MatchingKind kind, const SolveLimits& limits = {});

}  // namespace acm
