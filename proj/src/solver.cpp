#include "qsat12/solver.hpp"

#include <algorithm>
#include <stdexcept>

#include "qsat12/qsat2.hpp"
#include "qsat12/reduce.hpp"

namespace qsat12 {

const char *to_string(CaseTag t)
{
	switch (t) {
	case CaseTag::C41:
		return "C41";
	case CaseTag::C42:
		return "C42";
	case CaseTag::C43:
		return "C43";
	default:
		return "OTHER";
	}
}

namespace {

bool has_three_clause(const Formula &f)
{
	for (const Clause &c : f.clauses())
		if (c.size() == 3)
			return true;
	return false;
}

bool occurs_in_size(const Formula &f, Lit l, int size)
{
	for (int ci : f.occurrences(l))
		if (f.clause(ci).size() == size)
			return true;
	return false;
}

struct BranchChoice {
	Var var = 0;
	CaseTag tag = CaseTag::Other;
};

CaseTag classify(const Formula &f, Var v)
{
	Lit pos = Lit::positive(v), neg = Lit::negative(v);
	bool pos3 = occurs_in_size(f, pos, 3);
	bool neg3 = occurs_in_size(f, neg, 3);
	if (pos3 && neg3)
		return CaseTag::C41;

	// the branch literal li is the polarity sitting in a 3-clause; look at
	// the 2-clauses holding ~li and where their other literal's complement
	// occurs
	Lit nli = pos3 ? neg : pos;
	bool saw_c43 = false;
	for (int ci : f.occurrences(nli)) {
		const Clause &c = f.clause(ci);
		if (c.size() != 2)
			continue;
		Lit other = c.lits[0] == nli ? c.lits[1] : c.lits[0];
		Lit comp = other.complement();
		if (occurs_in_size(f, comp, 3))
			return CaseTag::C42;
		if (occurs_in_size(f, comp, 2))
			saw_c43 = true;
	}
	return saw_c43 ? CaseTag::C43 : CaseTag::Other;
}

BranchChoice choose_branch(const Formula &f)
{
	Var best = 0;
	int best_occ = -1;
	std::vector<char> considered(f.num_vars() + 1, 0);
	for (const Clause &c : f.clauses()) {
		if (c.size() != 3)
			continue;
		Var v = 0;
		for (Lit l : c.lits)
			if (f.is_universal(l))
				v = l.var();
		if (v == 0)
			throw std::invalid_argument(
			    "3-clause without a universal literal; formula is outside "
			    "the one-universal-two-existential fragment");
		if (considered[v])
			continue;
		considered[v] = 1;
		int occ = f.occurrence_count(v);
		if (occ > best_occ || (occ == best_occ && v < best)) {
			best = v;
			best_occ = occ;
		}
	}
	if (best == 0)
		throw std::invalid_argument(
		    "select_branch_variable requires a 3-clause");
	return {best, classify(f, best)};
}

struct Ctx {
	SolveOptions opt;
	SolveStats stats;
};

// returns the verdict; *post_reduce_u gets the u_count of the reduced
// formula at this node (0 when reduction already decided it)
Verdict solve_node(const Formula &f, int depth, Ctx &ctx, int *post_reduce_u)
{
	++ctx.stats.nodes;
	ctx.stats.max_depth = std::max(ctx.stats.max_depth, depth);

	int passes = 0;
	ReduceOutcome out = reduce(f, &passes);
	ctx.stats.reduce_passes += passes;
	if (out.is_verdict()) {
		if (post_reduce_u)
			*post_reduce_u = 0;
		return *out.verdict;
	}
	const Formula &g = *out.formula;
	if (post_reduce_u)
		*post_reduce_u = g.u_count();

	if (!has_three_clause(g))
		return qsat2_truth(g);

	BranchChoice choice = choose_branch(g);
	BranchRecord rec;
	rec.depth = depth;
	rec.branch_var = choice.var;
	rec.u_count_parent = g.u_count();
	rec.case_tag = choice.tag;

	// both branches must hold; explore the true branch first
	Verdict vt = solve_node(assign_literal(g, Lit::positive(choice.var)),
	                        depth + 1, ctx, &rec.u_count_child_true);
	Verdict verdict;
	if (vt == Verdict::False && !ctx.opt.no_shortcircuit) {
		++ctx.stats.short_circuits;
		rec.u_count_child_false = 0;
		verdict = Verdict::False;
	} else {
		Verdict vf =
		    solve_node(assign_literal(g, Lit::negative(choice.var)),
		               depth + 1, ctx, &rec.u_count_child_false);
		verdict = (vt == Verdict::True && vf == Verdict::True)
		              ? Verdict::True
		              : Verdict::False;
	}
	ctx.stats.records.push_back(rec);
	return verdict;
}

} // namespace

Var select_branch_variable(const Formula &f)
{
	return choose_branch(f).var;
}

SolveResult solve(const Formula &f, const SolveOptions &opt)
{
	Ctx ctx{opt, {}};
	SolveResult r;
	r.verdict = solve_node(f, 0, ctx, nullptr);
	r.stats = std::move(ctx.stats);
	return r;
}

}
