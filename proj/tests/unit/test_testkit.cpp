#include <doctest.h>

#include "helpers.hpp"

#include "qsat12/qdimacs.hpp"
#include "qsat12/testkit.hpp"

using namespace qsat12;
using test_helpers::F;

namespace {

// the plainest possible truth check: enumerate every assignment of both
// blocks and evaluate clauses literally; no simplification, no 2-SAT
Verdict naive_truth(const Formula &f)
{
	const auto &univ = f.prefix().universals;
	const auto &exis = f.prefix().existentials;
	std::vector<char> value(f.num_vars() + 1, 0);

	for (uint64_t a = 0; a < (1ull << univ.size()); ++a) {
		for (size_t i = 0; i < univ.size(); ++i)
			value[univ[i]] = (a >> i) & 1;
		bool some_b_works = false;
		for (uint64_t b = 0; b < (1ull << exis.size()) && !some_b_works;
		     ++b) {
			for (size_t i = 0; i < exis.size(); ++i)
				value[exis[i]] = (b >> i) & 1;
			bool all = true;
			for (const Clause &c : f.clauses()) {
				bool sat = false;
				for (Lit l : c.lits)
					if (value[l.var()] != l.is_negative())
						sat = true;
				if (!sat) {
					all = false;
					break;
				}
			}
			if (all)
				some_b_works = true;
		}
		if (!some_b_works)
			return Verdict::False;
	}
	return Verdict::True;
}

} // namespace

TEST_CASE("oracle matches a fully naive enumeration")
{
	SplitMix64 rng(0x5eed000b);
	for (int i = 0; i < 400; ++i) {
		GenParams p;
		p.n1 = 1 + static_cast<int>(rng.below(4));
		p.n2 = 2 + static_cast<int>(rng.below(4));
		p.m = 1 + static_cast<int>(rng.below(12));
		p.seed = rng.next();
		Formula f = generate(p);
		Verdict expected = naive_truth(f);
		CHECK(oracle(f, ResidualMode::Auto) == expected);
		CHECK(oracle(f, ResidualMode::EnumerateOnly) == expected);
	}
	// and on 2-CNF instances
	for (int i = 0; i < 400; ++i) {
		GenParams p;
		p.n1 = static_cast<int>(rng.below(4));
		p.n2 = 2 + static_cast<int>(rng.below(4));
		p.m = 1 + static_cast<int>(rng.below(14));
		p.seed = rng.next();
		Formula f = generate_qsat2(p);
		Verdict expected = naive_truth(f);
		CHECK(oracle(f, ResidualMode::Auto) == expected);
		CHECK(oracle(f, ResidualMode::EnumerateOnly) == expected);
	}
}

TEST_CASE("oracle on the worked examples")
{
	CHECK(oracle(F(1, 2, {{1, 2, 3}, {-1, -2, -3}})) == Verdict::True);
	CHECK(oracle(F(1, 2,
	               {{1, 2, 3}, {1, -2, 3}, {1, 2, -3}, {1, -2, -3}})) ==
	      Verdict::False);
	CHECK(oracle(F(1, 2, {})) == Verdict::True);
}

TEST_CASE("oracle truth is stable under clause reordering and block-"
          "respecting renaming")
{
	SplitMix64 rng(0x5eed000c);
	for (int i = 0; i < 100; ++i) {
		GenParams p = test_helpers::random_params(rng, 4, 5, 12);
		Formula f = generate(p);
		Verdict v = oracle(f);

		std::vector<Clause> shuffled = f.clauses();
		for (size_t j = shuffled.size(); j > 1; --j)
			std::swap(shuffled[j - 1], shuffled[rng.below(j)]);
		Formula g = mk_formula(f.prefix(), std::move(shuffled));
		CHECK(oracle(g) == v);

		// swap two variables inside each block
		std::vector<Var> map(f.num_vars() + 1);
		for (Var w = 1; w <= f.num_vars(); ++w)
			map[w] = w;
		if (p.n1 >= 2) {
			Var a = 1 + static_cast<Var>(rng.below(p.n1));
			Var b = 1 + static_cast<Var>(rng.below(p.n1));
			std::swap(map[a], map[b]);
		}
		Var a = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
		Var b = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
		std::swap(map[a], map[b]);

		std::vector<Clause> renamed;
		for (const Clause &c : f.clauses()) {
			Clause rc;
			for (Lit l : c.lits)
				rc.lits.push_back(Lit(map[l.var()], l.is_negative()));
			renamed.push_back(std::move(rc));
		}
		Formula h = mk_formula(f.prefix(), std::move(renamed));
		CHECK(oracle(h) == v);
	}
}

TEST_CASE("generate emits well-shaped deterministic instances")
{
	Formula f = generate({2, 3, 5, 42});
	CHECK(f.m() == 5);
	CHECK(validate_12_shape(f));
	CHECK(serialize(f).rfind("p cnf 5 5\n", 0) == 0);

	CHECK(generate({2, 3, 5, 42}) == f);
	CHECK_FALSE(generate({2, 3, 5, 43}) == f);

	Formula empty = generate({1, 2, 0, 7});
	CHECK(is_empty(empty));
	CHECK(oracle(empty) == Verdict::True);

	SplitMix64 rng(0x5eed000d);
	for (int i = 0; i < 200; ++i) {
		GenParams p = test_helpers::random_params(rng, 6, 9, 30);
		CHECK(validate_12_shape(generate(p)));
	}
}

TEST_CASE("generate rejects bad parameters")
{
	CHECK_THROWS_AS(generate({2, 1, 5, 0}), std::invalid_argument);
	CHECK_THROWS_AS(generate({0, 3, 5, 0}), std::invalid_argument);
	CHECK_THROWS_AS(generate({-1, 3, 5, 0}), std::invalid_argument);
	CHECK_THROWS_AS(generate_qsat2({0, 1, 5, 0}), std::invalid_argument);
}

TEST_CASE("generate_qsat2 emits short clauses with at most one universal")
{
	SplitMix64 rng(0x5eed000e);
	for (int i = 0; i < 200; ++i) {
		GenParams p;
		p.n1 = static_cast<int>(rng.below(5));
		p.n2 = 2 + static_cast<int>(rng.below(8));
		p.m = 1 + static_cast<int>(rng.below(30));
		p.seed = rng.next();
		Formula f = generate_qsat2(p);
		CHECK(f.m() == p.m);
		for (const Clause &c : f.clauses()) {
			CHECK(c.size() >= 1);
			CHECK(c.size() <= 2);
			int universal = 0;
			for (Lit l : c.lits)
				if (f.is_universal(l))
					++universal;
			CHECK(universal <= 1);
		}
		CHECK(generate_qsat2(p) == f);
	}
}

TEST_CASE("oracle guard trips on oversized enumerations")
{
	// 26 occurring universal variables, one per clause
	std::vector<std::vector<int>> clauses;
	for (int v = 1; v <= 26; ++v)
		clauses.push_back({v, 27, 28});
	Formula f = F(26, 2, clauses);
	CHECK_THROWS_AS(oracle(f), std::invalid_argument);
}
