#pragma once

#include <optional>

#include "qsat12/formula.hpp"

namespace qsat12 {

// Result of running the reduction rules to fixpoint: either an early verdict
// or a simplified formula containing no empty clause, no all-universal
// clause, no existential unit and no monotone literal.
struct ReduceOutcome {
	std::optional<Verdict> verdict;
	std::optional<Formula> formula;

	bool is_verdict() const { return verdict.has_value(); }
};

// FALSE if some clause consists of universal literals only. The empty clause
// qualifies vacuously, which is sound (it is unsatisfiable outright).
std::optional<Verdict> trivial_falsity(const Formula &f);

// Assigns existential unit clauses true, repeatedly, lowest variable id
// first. Universal units are left alone (they mean falsity, which the
// caller's trivial falsity check reports). Stops early if an empty clause
// appears.
Formula unit_propagate(const Formula &f);

// Eliminates the monotone literal on the lowest-numbered eligible variable:
// existential monotone literals are assigned true, universal ones are set
// false (stripped from their clauses). At most one variable is eliminated
// per call; the fixpoint driver below re-runs all rules anyway.
Formula monotone_eliminate(const Formula &f);

// Applies trivial falsity, unit propagation and monotone elimination in that
// order until none of them changes the formula. `passes`, when given,
// accumulates the number of loop iterations.
ReduceOutcome reduce(const Formula &f, int *passes = nullptr);

}
