#pragma once

#include <vector>

#include "acm/graph.hpp"

namespace acm {

// Shape of a connected component, most specific label first: every star is
// a tree and every triangle is an odd cycle, so Star and Triangle win over
// Tree and OddCycle. Classification is total and deterministic.
enum class ComponentShape { Star, Tree, Triangle, OddCycle, Other };

const char* to_string(ComponentShape shape);

ComponentShape classify_component_shape(const Graph& g, const std::vector<int>& component);

// True iff every maximum matching of g is acyclic, recognized in O(n+m):
// every component must be a tree or an odd cycle.
bool every_max_matching_acyclic(const Graph& g);

// True iff every maximum matching of g is induced: every component must be
// a star (including K1 and K2) or a triangle.
bool every_max_matching_induced(const Graph& g);

// First component (by smallest vertex) violating the respective
// characterization, if any; used for witness reporting.
std::vector<int> acyclic_violation_witness(const Graph& g);
std::vector<int> induced_violation_witness(const Graph& g);

}  // namespace acm
