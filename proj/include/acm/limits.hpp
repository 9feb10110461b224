#pragma once

namespace acm {

// Size guards for the exponential-time solvers. All of them are plain
// configuration: exceeding one raises ResourceLimitError, the search is
// never silently truncated.
struct SolveLimits {
    // bitmask DP used for exact matching / perfect-matching counting on
    // non-bipartite graphs (bipartite graphs have no guard)
    int exact_matching_max_order = 24;

    // branch-and-bound for kind-restricted maximum matchings
    int restricted_search_max_order = 16;

    // exhaustive enumeration of all maximum matchings
    int enumeration_max_order = 14;

    // 2^n truth-assignment sweep over reduction instances
    int assignment_sweep_max_vars = 20;
};

}  // namespace acm
