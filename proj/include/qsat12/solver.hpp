#pragma once

#include <cstdint>
#include <vector>

#include "qsat12/formula.hpp"

namespace qsat12 {

// How the complement of the branch literal sits in the formula at the time
// of branching. Purely diagnostic; every case branches the same way. `Other`
// exists so the audit can flag a pattern outside the expected three.
enum class CaseTag : uint8_t { C41, C42, C43, Other };

const char *to_string(CaseTag t);

struct BranchRecord {
	int depth = 0;
	Var branch_var = 0;
	int u_count_parent = 0;
	// child counts are measured after the child's own reduction; children
	// that collapse to a verdict record 0
	int u_count_child_true = 0;
	int u_count_child_false = 0;
	CaseTag case_tag = CaseTag::Other;

	bool operator==(const BranchRecord &) const = default;
};

struct SolveStats {
	long long nodes = 0; // solve invocations, root included
	int max_depth = 0;
	long long reduce_passes = 0;
	long long short_circuits = 0; // FALSE branches skipped
	std::vector<BranchRecord> records;
};

struct SolveOptions {
	// explore the false branch even when the true branch already failed;
	// used for exact tree-size measurements
	bool no_shortcircuit = false;
};

struct SolveResult {
	Verdict verdict = Verdict::False;
	SolveStats stats;
};

// The universal variable to branch on: among universal variables occurring
// in 3-clauses, the one with the most occurrences over the whole formula,
// ties broken by lowest id. Requires a reduced formula with at least one
// 3-clause; throws std::invalid_argument when a 3-clause has no universal
// literal (such formulas are outside the supported fragment).
Var select_branch_variable(const Formula &f);

// Reduce; answer empty / contradictory formulas directly; otherwise branch
// on a universal variable of a 3-clause, requiring both branches to hold
// (true branch first); once no 3-clause remains, hand over to qsat2_truth.
SolveResult solve(const Formula &f, const SolveOptions &opt = {});

}
