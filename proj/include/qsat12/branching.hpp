#pragma once

#include <string>
#include <vector>

#include "qsat12/formula.hpp"
#include "qsat12/solver.hpp"

namespace qsat12 {

// Per-node measure decreases (r_1,...,r_k), all >= 1.
using BranchTuple = std::vector<int>;

// The unique root x > 1 of sum_i x^{-r_i} = 1 for k >= 2; exactly 1 for
// k = 1. Uniform tuples use the closed form k^(1/r); everything else is
// bracketed bisection, absolute tolerance well under 1e-9.
double branching_number(const BranchTuple &t);

struct AuditReport {
	long long total_nodes = 0;
	BranchTuple worst_tuple;   // empty when the run never branched
	double worst_lambda = 1.0;
	double bound_limit = 0.0;  // 2 * 1.4143^m of the input formula
	bool bound_ok = true;
	std::vector<BranchRecord> violations; // records with a decrease < 2
};

// Checks the branching accounting on a recorded run: every branch must
// shrink the count of universal-bearing clauses by at least 2 on both sides,
// which caps the tree at 2 * 1.4143^m nodes.
AuditReport audit_trace(const SolveStats &stats, const Formula &f0);

// The full stats document written by the CLI: instance sizes, counters, one
// entry per branch record, and the audit summary. Stable field order, two
// space indent, LF newlines.
std::string stats_report_json(const SolveStats &stats, const Formula &f0);

}
