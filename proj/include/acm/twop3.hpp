#pragma once

#include <functional>

#include "acm/graph.hpp"
#include "acm/oracles.hpp"

namespace acm {

// Shape of a connected component T of G(M) for an acyclic matching M in a
// 2P3-free graph. Besides K2 and P4 only three tree shapes can occur:
//
//   Spider(k), k >= 2:   hub x matched to a pendant x', plus k legs
//                        y_i - y_i' where each y_i is adjacent to x and
//                        matched to the pendant y_i'.
//   DoubleSpider(k, l):  adjacent hubs x, x' matched to each other, with
//                        k >= 1 legs on x and l >= 1 legs on x'.
//   LinkedSpiders(k, l): adjacent hubs x, y, each matched to its own
//                        pendant, with k >= 1 legs on x and l >= 1 on y.
//
// Any other component is Invalid. Leg counts are reported with the
// smaller-id hub first.
struct ShapeClass {
    enum class Kind { K2, P4, Spider, DoubleSpider, LinkedSpiders, Invalid };
    Kind kind = Kind::Invalid;
    int k = 0;
    int l = 0;

    bool operator==(const ShapeClass&) const = default;
};

const char* to_string(ShapeClass::Kind kind);

// Classifies a connected graph t carrying the perfect matching m (the
// restriction of an acyclic matching to one component of G(M)). Throws
// MatchingError if t is disconnected or m is not a perfect matching of t.
// The returned shape's edge set equals E(t) exactly, else Invalid.
ShapeClass classify_component(const Graph& t, const Matching& m);

// Pluggable maximum-weight induced matching subroutine. The default backend
// is the exact oracle; a polynomial 2P3-free backend can be slotted in
// without touching any caller.
using MwimBackend = std::function<SolveResult(const Graph&, const SolveLimits&)>;

// Maximum-weight induced matching. Edges of non-positive weight never
// appear in the output.
SolveResult mwim(const Graph& g, const SolveLimits& limits = {},
                 const MwimBackend& backend = {});

// Maximum-weight acyclic matching of a 2P3-free graph, reduced to
// polynomially many induced-matching instances: the best over
//   (1) an induced matching of g,
//   (2) a seeded induced P4 component plus mwim of g - N[V(T)],
//   (3) a seeded Spider,
//   (4) a seeded DoubleSpider,
//   (5) a seeded LinkedSpiders,
// where the spider families delete the closed neighborhoods that must stay
// clear and drop edges inside the hub neighborhoods to weight -1 so that no
// induced-matching edge uses two hub neighbors at once. Every assembled
// candidate is re-validated for acyclicity and discarded if it fails.
// Throws NotTwoP3FreeError if g is outside the class.
SolveResult mwam_2p3free(const Graph& g, const SolveLimits& limits = {},
                         const MwimBackend& backend = {});

}  // namespace acm
