#pragma once

#include <string>

#include "acm/graph.hpp"
#include "acm/sat_reduction.hpp"

namespace acm {

// Graph files are DIMACS-edge style with 1-based vertex ids:
//   c <comment>
//   p edge <n> <m>
//   e <u> <v> [<weight>]
// Unknown lines are rejected. Emission is canonical: edges sorted, weight
// printed only when it differs from 1.
Graph parse_graph(const std::string& text);
std::string emit_graph(const Graph& g);

// DIMACS CNF. Clauses are zero-terminated literal runs that may span
// lines; duplicate literals within a clause collapse; tautological clauses
// are kept (normalize_cnf removes them).
CnfFormula parse_cnf(const std::string& text);
std::string emit_cnf(const CnfFormula& f);

// Label sidecar for reduction instances: one "role -> id" line per vertex
// (1-based ids) followed by "A:" and "B:" membership lines.
std::string emit_labels(const ReductionInstance& inst);

}  // namespace acm
