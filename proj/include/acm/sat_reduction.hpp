#pragma once

#include <array>
#include <string>
#include <utility>
#include <vector>

#include "acm/graph.hpp"
#include "acm/limits.hpp"

namespace acm {

// A clause is a set of DIMACS-style literals: +v / -v with v in 1..num_vars.
// Literals are kept sorted by (variable, sign) with duplicates collapsed.
struct Clause {
    std::vector<int> lits;

    bool tautological() const;     // contains both v and -v
    bool contains(int lit) const;
};

struct CnfFormula {
    int num_vars = 0;
    std::vector<Clause> clauses;

    int literal_count() const;  // sum of clause sizes
};

// Restricted form: every clause has 2 or 3 literals, no clause is
// tautological, every variable occurs at most twice positively and at most
// twice negatively. For building the reduction a variable must additionally
// occur in both polarities or not at all.
bool is_restricted_form(const CnfFormula& f);
void require_buildable(const CnfFormula& f);  // throws ValidationError

struct NormalizeResult {
    enum class Status { Restricted, Satisfiable, Unsatisfiable };
    Status status = Status::Restricted;
    CnfFormula formula;  // meaningful only for Restricted
};

// Repeatedly removes tautological clauses, propagates unit clauses and
// eliminates pure literals, then renumbers the surviving variables.
// Returns an early verdict when the formula collapses; throws
// NotNormalizableError when the result violates the restricted form.
NormalizeResult normalize_cnf(const CnfFormula& f);

// ------------------------------------------------------------ the gadget
//
// The 32-vertex variable gadget. Local vertex layout (one block per
// variable, documented in the labels sidecar):
//   u(1..4) -> 0..3,  w(1..2) -> 4..5,  x(1..2) -> 6..7,
//   t(1..4) -> 8..11, f(1..4) -> 12..15, y(1..8) -> 16..23, z(1..8) -> 24..31
// The z and x vertices are its 10 endvertices. Which of the t- or f-side
// stays unmatched in a maximum acyclic matching encodes the variable.

int gadget_local_id(char kind, int j);          // kind in {u,w,x,t,f,y,z}
std::pair<char, int> gadget_role_of(int local); // inverse
const std::array<Edge, 38>& gadget_edges_local();
std::string gadget_role_name(int var_index, int local);  // e.g. "u(3,1)"

// Labeled edge list of gadget i; 32 vertices, 38 edges.
std::vector<std::pair<std::string, std::string>> build_gadget(int var_index);

// --------------------------------------------------------- the instance

struct LiteralVertex {
    int clause;    // 0-based clause index
    int lit;       // the literal
    int first_id;  // id of the degree-3 vertex; its pendant partner is first_id+1
};

struct ReductionInstance {
    Graph graph;
    std::vector<int> side_a, side_b;  // sorted partite sets
    std::vector<std::pair<std::string, int>> labels;  // role -> vertex id, in id order
    CnfFormula formula;                               // the source, restricted form
    std::vector<LiteralVertex> literal_vertices;      // in id order

    int num_vars() const { return formula.num_vars; }
    int gadget_base(int var_index) const { return 32 * (var_index - 1); }
    int gadget_vertex(int var_index, char kind, int j) const;
    // id of the degree-3 clause vertex of `lit` in clause r (0-based)
    int literal_vertex(int clause_index, int lit) const;
};

// Builds the instance: one gadget per variable, one K2 per clause literal,
// plus the clause wiring into the f-slots (positive occurrences) and
// t-slots (negative occurrences), first occurrence by ascending clause
// index. Vertex ids are deterministic: gadget i occupies 32(i-1)..32i-1,
// literal pairs follow in clause order, sorted by variable within a clause.
ReductionInstance build_reduction(const CnfFormula& f);

struct VerifyCheck {
    std::string name;
    bool pass = false;
    std::string detail;
};

struct VerifyReport {
    std::vector<VerifyCheck> checks;
    bool all_pass() const;
};

// Structural verification: partition and bipartiteness with the declared
// sides, |A| <= |B|, maximum degree 4, per-gadget edge sets and endvertex
// counts, the three alignment cycles of each gadget, matching number |A|,
// and the canonical matching (all pendant edges plus every u(i,j)t(i,j))
// being maximum and uniquely restricted.
VerifyReport verify_instance(const ReductionInstance& inst);

// The maximum matching induced by a truth assignment: all pendant edges,
// plus u(i,j)t(i,j) for all j when variable i is true, else u(i,j)f(i,j).
// Always has size |A|. Throws ValidationError on wrong assignment length.
Matching assignment_to_matching(const ReductionInstance& inst,
                                const std::vector<bool>& assignment);

// The canonical all-true matching used by the structural verification.
Matching canonical_matching(const ReductionInstance& inst);

// True iff some assignment yields an acyclic matching, swept in ascending
// binary order (bit i-1 of the counter is variable i). Equals the
// satisfiability of the source formula. Guarded by
// limits.assignment_sweep_max_vars.
bool decide_via_assignments(const ReductionInstance& inst, const SolveLimits& limits = {});

}  // namespace acm
