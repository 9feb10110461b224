#include "acm/characterization.hpp"

namespace acm {

const char* to_string(ComponentShape shape) {
    switch (shape) {
        case ComponentShape::Star: return "star";
        case ComponentShape::Tree: return "tree";
        case ComponentShape::Triangle: return "triangle";
        case ComponentShape::OddCycle: return "odd-cycle";
        case ComponentShape::Other: return "other";
    }
    return "?";
}

ComponentShape classify_component_shape(const Graph& g, const std::vector<int>& component) {
    int n = static_cast<int>(component.size());
    int edge_count = 0;
    int high_degree = 0;  // vertices of degree >= 2
    bool two_regular = true;
    for (int v : component) {
        int d = g.degree(v);  // a component keeps all its neighbors inside
        edge_count += d;
        if (d >= 2) ++high_degree;
        if (d != 2) two_regular = false;
    }
    edge_count /= 2;

    bool tree = edge_count == n - 1;
    if (tree && high_degree <= 1) return ComponentShape::Star;  // covers K1 and K2
    if (n == 3 && edge_count == 3) return ComponentShape::Triangle;
    if (tree) return ComponentShape::Tree;
    if (two_regular && n % 2 == 1) return ComponentShape::OddCycle;
    return ComponentShape::Other;
}

bool every_max_matching_acyclic(const Graph& g) {
    for (auto& comp : components(g)) {
        ComponentShape s = classify_component_shape(g, comp);
        if (s == ComponentShape::Other) return false;
    }
    return true;
}

bool every_max_matching_induced(const Graph& g) {
    for (auto& comp : components(g)) {
        ComponentShape s = classify_component_shape(g, comp);
        if (s != ComponentShape::Star && s != ComponentShape::Triangle) return false;
    }
    return true;
}

std::vector<int> acyclic_violation_witness(const Graph& g) {
    for (auto& comp : components(g))
        if (classify_component_shape(g, comp) == ComponentShape::Other) return comp;
    return {};
}

std::vector<int> induced_violation_witness(const Graph& g) {
    for (auto& comp : components(g)) {
        ComponentShape s = classify_component_shape(g, comp);
        if (s != ComponentShape::Star && s != ComponentShape::Triangle) return comp;
    }
    return {};
}

}  // namespace acm
