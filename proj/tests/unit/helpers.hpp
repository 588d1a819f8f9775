#pragma once

#include <stdexcept>
#include <vector>

#include "qsat12/formula.hpp"
#include "qsat12/testkit.hpp"

namespace test_helpers {

// formula over universals 1..n1 and existentials n1+1..n1+n2 from signed
// DIMACS clause lists
inline qsat12::Formula F(int n1, int n2,
                         const std::vector<std::vector<int>> &clauses)
{
	qsat12::Prefix prefix;
	for (qsat12::Var v = 1; v <= n1; ++v)
		prefix.universals.push_back(v);
	for (qsat12::Var v = n1 + 1; v <= n1 + n2; ++v)
		prefix.existentials.push_back(v);
	std::vector<qsat12::Clause> cs;
	for (const auto &ints : clauses) {
		qsat12::Clause c;
		for (int dl : ints)
			c.lits.push_back(qsat12::Lit::from_dimacs(dl));
		cs.push_back(std::move(c));
	}
	return qsat12::mk_formula(std::move(prefix), std::move(cs));
}

inline qsat12::GenParams random_params(qsat12::SplitMix64 &rng, int n1_max,
                                       int n2_max, int m_max)
{
	qsat12::GenParams p;
	p.n1 = 1 + static_cast<int>(rng.below(n1_max));
	p.n2 = 2 + static_cast<int>(rng.below(n2_max - 1));
	p.m = 1 + static_cast<int>(rng.below(m_max));
	p.seed = rng.next();
	return p;
}

}
