#include <doctest.h>

#include "helpers.hpp"

#include "qsat12/formula.hpp"
#include "qsat12/testkit.hpp"

using namespace qsat12;
using test_helpers::F;
using test_helpers::random_params;

namespace {

int recount_u(const Formula &f)
{
	int u = 0;
	for (const Clause &c : f.clauses()) {
		bool has = false;
		for (Lit l : c.lits)
			if (f.is_universal(l))
				has = true;
		u += has;
	}
	return u;
}

} // namespace

TEST_CASE("literal complement is an involution")
{
	for (Var v = 1; v <= 40; ++v) {
		for (bool neg : {false, true}) {
			Lit l(v, neg);
			CHECK(l.complement().complement() == l);
			CHECK(l.complement().var() == v);
			CHECK(l.complement().is_negative() != neg);
		}
	}
	CHECK(Lit::from_dimacs(-7) == Lit::negative(7));
	CHECK(Lit::from_dimacs(-7).to_dimacs() == -7);
}

TEST_CASE("mk_formula counts and canonicalizes")
{
	Formula f = F(1, 2, {{1, 2, 3}});
	CHECK(f.m() == 1);
	CHECK(f.u_count() == 1);

	// tautological clause vanishes
	Formula t = F(1, 2, {{2, -2, 1}});
	CHECK(t.m() == 0);
	CHECK(t.u_count() == 0);

	// duplicate literals collapse
	Formula d = F(1, 2, {{2, 2, 1}});
	CHECK(d.m() == 1);
	CHECK(d.clause(0).size() == 2);

	CHECK_THROWS_AS(F(1, 1, {{1, 4, 2}}), std::invalid_argument);
}

TEST_CASE("mk_formula rejects broken prefixes")
{
	Prefix overlap{{1}, {1, 2}};
	CHECK_THROWS_AS(mk_formula(overlap, {}), std::invalid_argument);

	Prefix gap{{1}, {3}}; // 2 is missing, so ids are not dense
	CHECK_THROWS_AS(mk_formula(gap, {}), std::invalid_argument);

	Prefix dup{{1, 1}, {2}};
	CHECK_THROWS_AS(mk_formula(dup, {}), std::invalid_argument);
}

TEST_CASE("validate_12_shape")
{
	CHECK(validate_12_shape(F(1, 2, {{1, 2, 3}})));
	CHECK_FALSE(validate_12_shape(F(1, 2, {{2, 3}})));
	CHECK_FALSE(validate_12_shape(F(2, 1, {{1, 2, 3}}))); // two universals
	CHECK(validate_12_shape(F(1, 2, {}))); // vacuous
}

TEST_CASE("assign_literal")
{
	// clause satisfied and removed
	Formula a = assign_literal(F(1, 2, {{1, 2, 3}}), Lit::positive(1));
	CHECK(a.m() == 0);

	// literal stripped, universal clause count drops
	Formula b = assign_literal(F(1, 2, {{1, 2, 3}}), Lit::negative(1));
	CHECK(b.m() == 1);
	CHECK(b.clause(0).size() == 2);
	CHECK(b.u_count() == 0);

	// unit clause remains observable
	Formula c = assign_literal(F(1, 1, {{-1, 2}}), Lit::positive(1));
	CHECK(c.m() == 1);
	CHECK(c.clause(0).size() == 1);

	CHECK_THROWS_AS(assign_literal(F(1, 2, {}), Lit::positive(9)),
	                std::invalid_argument);
}

TEST_CASE("is_empty and has_empty_clause")
{
	CHECK(is_empty(F(1, 2, {})));
	CHECK_FALSE(has_empty_clause(F(1, 2, {})));

	Formula stripped = assign_literal(F(0, 2, {{1}}), Lit::negative(1));
	CHECK(has_empty_clause(stripped));
	CHECK_FALSE(is_empty(stripped));

	Formula plain = F(0, 2, {{1, 2}});
	CHECK_FALSE(is_empty(plain));
	CHECK_FALSE(has_empty_clause(plain));
}

TEST_CASE("assign_literal keeps counters honest on random formulas")
{
	SplitMix64 rng(0x5eed0001);
	for (int iter = 0; iter < 300; ++iter) {
		Formula f = generate(random_params(rng, 5, 6, 15));
		for (int step = 0; step < 6; ++step) {
			Var v = 1 + static_cast<Var>(rng.below(f.num_vars()));
			Lit l(v, rng.coin());
			Formula g = assign_literal(f, l);

			CHECK(g.m() <= f.m());
			CHECK(g.u_count() <= f.u_count());
			CHECK(g.u_count() == recount_u(g));
			CHECK(g.occurrences(l).empty());
			CHECK(g.occurrences(l.complement()).empty());
			for (const Clause &c : g.clauses()) {
				int universal = 0;
				for (Lit cl : c.lits)
					if (g.is_universal(cl))
						++universal;
				CHECK(universal <= 1);
			}
			f = std::move(g);
		}
	}
}
