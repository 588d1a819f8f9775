#pragma once

#include <vector>

#include "qsat12/formula.hpp"

namespace qsat12 {

// Implication digraph over literal vertices: a 2-clause (a|b) contributes
// the edges ~a->b and ~b->a, a unit clause (a) contributes ~a->a. Skew
// symmetric by construction: u->v exists iff ~v->~u does.
struct ImplicationGraph {
	int num_vertices = 0;                // 2 per declared variable
	std::vector<std::vector<int>> succ;  // literal index -> successors
	int num_edges = 0;
};

// Throws std::invalid_argument on clauses of size 0 or more than 2.
ImplicationGraph build_implication_graph(const Formula &f);

// Strongly connected components; ids come out in reverse topological order
// of the condensation (Tarjan numbering).
struct ComponentLabeling {
	std::vector<int> comp; // literal index -> component id
	int count = 0;
};

ComponentLabeling strong_components(const ImplicationGraph &g);

// Decides a forall-exists formula whose clauses all have at most 2 literals.
// FALSE iff an empty clause is present, or
//   (a) some existential variable shares a component with its complement,
//   (b) some universal literal reaches its own complement, or
//   (c) some universal literal reaches a universal literal of another
//       variable.
// Universal-to-* reachability is answered by per-source traversal of the
// condensation; n1 is small in this fragment.
Verdict qsat2_truth(const Formula &f);

}
