#pragma once

#include <cstdint>

#include "qsat12/formula.hpp"

namespace qsat12 {

// Fixed, documented generator so identical seeds give identical formulas on
// every platform (the standard <random> distributions are not portable).
// next() is the splitmix64 step; below() maps it into [0, bound) by the
// multiply-shift reduction.
struct SplitMix64 {
	uint64_t state;

	explicit SplitMix64(uint64_t seed) : state(seed) {}

	uint64_t next()
	{
		uint64_t z = (state += 0x9e3779b97f4a7c15ULL);
		z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
		z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
		return z ^ (z >> 31);
	}

	uint64_t below(uint64_t bound)
	{
		return static_cast<uint64_t>(
		    (static_cast<unsigned __int128>(next()) * bound) >> 64);
	}

	bool coin() { return next() >> 63; }
};

struct GenParams {
	int n1 = 0;       // universal variables
	int n2 = 2;       // existential variables, at least 2
	int m = 0;        // clauses
	uint64_t seed = 0;
};

// m independent clauses, each one universal literal plus two distinct
// existential literals, all uniform. Universals are 1..n1, existentials
// n1+1..n1+n2. Requires n1 >= 1 when m > 0.
Formula generate(const GenParams &p);

// Random clauses of the shapes (universal|existential), two distinct
// existentials, or a single existential literal, for exercising the 2-CNF
// engine. With n1 = 0 the universal shape is left out.
Formula generate_qsat2(const GenParams &p);

enum class ResidualMode {
	// 2-SAT components when the residual is at most 2-CNF, enumeration
	// otherwise
	Auto,
	// pure truth-table enumeration of the residual; shares nothing with
	// the implication-graph engine, so it can stand as its oracle
	EnumerateOnly,
};

// Ground truth by definition: enumerates every assignment of the universal
// variables occurring in f and checks that each residual is satisfiable.
// Enumeration is guarded at 25 occurring universal (and, when enumerating
// residuals, existential) variables.
Verdict oracle(const Formula &f, ResidualMode mode = ResidualMode::Auto);

}
