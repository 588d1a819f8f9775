#include "qsat12/reduce.hpp"

namespace qsat12 {

namespace {

// lowest-variable existential unit clause, if any
std::optional<Lit> find_existential_unit(const Formula &f)
{
	std::optional<Lit> best;
	for (const Clause &c : f.clauses()) {
		if (c.size() != 1)
			continue;
		Lit l = c.lits[0];
		if (!f.is_existential(l))
			continue;
		if (!best || l.var() < best->var())
			best = l;
	}
	return best;
}

// lowest variable occurring at exactly one polarity, with that literal
std::optional<Lit> find_monotone(const Formula &f)
{
	for (Var v = 1; v <= f.num_vars(); ++v) {
		bool pos = !f.occurrences(Lit::positive(v)).empty();
		bool neg = !f.occurrences(Lit::negative(v)).empty();
		if (pos == neg)
			continue; // absent or both polarities
		return pos ? Lit::positive(v) : Lit::negative(v);
	}
	return std::nullopt;
}

} // namespace

std::optional<Verdict> trivial_falsity(const Formula &f)
{
	for (const Clause &c : f.clauses()) {
		bool all_universal = true;
		for (Lit l : c.lits)
			if (!f.is_universal(l))
				all_universal = false;
		if (all_universal)
			return Verdict::False;
	}
	return std::nullopt;
}

Formula unit_propagate(const Formula &f)
{
	Formula cur = f;
	while (!has_empty_clause(cur)) {
		auto unit = find_existential_unit(cur);
		if (!unit)
			break;
		cur = assign_literal(cur, *unit);
	}
	return cur;
}

Formula monotone_eliminate(const Formula &f)
{
	auto mono = find_monotone(f);
	if (!mono)
		return f;
	if (f.is_existential(*mono))
		return assign_literal(f, *mono);
	// universal monotone literals are set false; since the complement
	// occurs nowhere, assigning it true just strips the literal
	return assign_literal(f, mono->complement());
}

ReduceOutcome reduce(const Formula &f, int *passes)
{
	Formula cur = f;
	bool changed = true;
	while (changed) {
		if (passes)
			++*passes;
		changed = false;

		if (trivial_falsity(cur))
			return {Verdict::False, std::nullopt};

		Formula propagated = unit_propagate(cur);
		if (!(propagated == cur)) {
			cur = std::move(propagated);
			changed = true;
			if (has_empty_clause(cur))
				return {Verdict::False, std::nullopt};
		}

		Formula eliminated = monotone_eliminate(cur);
		if (!(eliminated == cur)) {
			cur = std::move(eliminated);
			changed = true;
		}
	}
	if (has_empty_clause(cur))
		return {Verdict::False, std::nullopt};
	if (is_empty(cur))
		return {Verdict::True, std::nullopt};
	return {std::nullopt, std::move(cur)};
}

}
