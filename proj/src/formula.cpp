#include "qsat12/formula.hpp"

#include <algorithm>
#include <stdexcept>
#include <string>

namespace qsat12 {

const char *to_string(Verdict v)
{
	return v == Verdict::True ? "TRUE" : "FALSE";
}

bool Clause::contains(Lit l) const
{
	return std::find(lits.begin(), lits.end(), l) != lits.end();
}

Formula::Formula(Prefix prefix, std::vector<Clause> clauses)
    : prefix_(std::move(prefix)), clauses_(std::move(clauses))
{
	build_index();
}

void Formula::build_index()
{
	int n = prefix_.total();
	qmap_.assign(n + 1, Quant::Existential);
	for (Var v : prefix_.universals)
		qmap_[v] = Quant::Universal;

	occ_.assign(2 * n, {});
	u_count_ = 0;
	for (int ci = 0; ci < static_cast<int>(clauses_.size()); ++ci) {
		bool has_universal = false;
		for (Lit l : clauses_[ci].lits) {
			occ_[l.index()].push_back(ci);
			if (qmap_[l.var()] == Quant::Universal)
				has_universal = true;
		}
		if (has_universal)
			++u_count_;
	}
}

Formula mk_formula(Prefix prefix, std::vector<Clause> clauses)
{
	int n = prefix.total();
	std::vector<int> seen(n + 1, 0);
	auto declare = [&](Var v) {
		if (v < 1)
			throw std::invalid_argument("variable ids must be positive");
		if (v > n)
			throw std::invalid_argument(
			    "prefix is not dense: variable " + std::to_string(v) +
			    " exceeds block size " + std::to_string(n));
		if (seen[v]++)
			throw std::invalid_argument("variable " + std::to_string(v) +
			                            " declared twice in the prefix");
	};
	for (Var v : prefix.universals)
		declare(v);
	for (Var v : prefix.existentials)
		declare(v);

	std::vector<Clause> kept;
	kept.reserve(clauses.size());
	for (Clause &c : clauses) {
		std::sort(c.lits.begin(), c.lits.end());
		c.lits.erase(std::unique(c.lits.begin(), c.lits.end()),
		             c.lits.end());
		bool tautology = false;
		for (size_t i = 0; i + 1 < c.lits.size(); ++i) {
			if (c.lits[i].var() == c.lits[i + 1].var())
				tautology = true;
		}
		for (Lit l : c.lits) {
			if (l.var() < 1 || l.var() > n)
				throw std::invalid_argument(
				    "clause mentions undeclared variable " +
				    std::to_string(l.var()));
		}
		if (tautology)
			continue;
		if (c.size() > 3)
			throw std::invalid_argument(
			    "clause has more than 3 literals");
		kept.push_back(std::move(c));
	}
	return Formula(std::move(prefix), std::move(kept));
}

bool validate_12_shape(const Formula &f)
{
	for (const Clause &c : f.clauses()) {
		if (c.size() != 3)
			return false;
		int universal = 0;
		for (Lit l : c.lits)
			if (f.is_universal(l))
				++universal;
		if (universal != 1)
			return false;
		// distinct variables hold by construction (sorted, tautologies
		// dropped), but check anyway so the predicate stands alone
		for (int i = 0; i + 1 < 3; ++i)
			if (c.lits[i].var() == c.lits[i + 1].var())
				return false;
	}
	return true;
}

Formula assign_literal(const Formula &f, Lit l)
{
	if (!f.is_declared(l.var()))
		throw std::invalid_argument("assign_literal: variable " +
		                            std::to_string(l.var()) +
		                            " is not declared");
	Lit neg = l.complement();
	std::vector<Clause> next;
	next.reserve(f.clauses().size());
	for (const Clause &c : f.clauses()) {
		if (c.contains(l))
			continue;
		Clause nc = c;
		std::erase(nc.lits, neg);
		next.push_back(std::move(nc));
	}
	return Formula(f.prefix(), std::move(next));
}

bool is_empty(const Formula &f)
{
	return f.m() == 0;
}

bool has_empty_clause(const Formula &f)
{
	for (const Clause &c : f.clauses())
		if (c.empty())
			return true;
	return false;
}

}
