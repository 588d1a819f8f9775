#include "qsat12/testkit.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>

namespace qsat12 {

namespace {

Prefix dense_prefix(int n1, int n2)
{
	Prefix p;
	for (Var v = 1; v <= n1; ++v)
		p.universals.push_back(v);
	for (Var v = n1 + 1; v <= n1 + n2; ++v)
		p.existentials.push_back(v);
	return p;
}

void check_params(const GenParams &p)
{
	if (p.n1 < 0 || p.n2 < 2 || p.m < 0)
		throw std::invalid_argument(
		    "generator needs n1 >= 0, n2 >= 2, m >= 0");
}

Lit random_lit(SplitMix64 &rng, Var v)
{
	return Lit(v, rng.coin());
}

} // namespace

Formula generate(const GenParams &p)
{
	check_params(p);
	if (p.n1 < 1 && p.m > 0)
		throw std::invalid_argument(
		    "generate needs at least one universal variable");
	SplitMix64 rng(p.seed);
	std::vector<Clause> clauses(p.m);
	for (Clause &c : clauses) {
		Var u = 1 + static_cast<Var>(rng.below(p.n1));
		Var e1 = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
		Var e2 = e1;
		while (e2 == e1)
			e2 = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
		c.lits = {random_lit(rng, u), random_lit(rng, e1),
		          random_lit(rng, e2)};
	}
	return mk_formula(dense_prefix(p.n1, p.n2), std::move(clauses));
}

Formula generate_qsat2(const GenParams &p)
{
	check_params(p);
	SplitMix64 rng(p.seed);
	std::vector<Clause> clauses(p.m);
	for (Clause &c : clauses) {
		uint64_t shape = p.n1 >= 1 ? rng.below(3) : 1 + rng.below(2);
		if (shape == 0) {
			Var u = 1 + static_cast<Var>(rng.below(p.n1));
			Var e = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
			c.lits = {random_lit(rng, u), random_lit(rng, e)};
		} else if (shape == 1) {
			Var e1 = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
			Var e2 = e1;
			while (e2 == e1)
				e2 = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
			c.lits = {random_lit(rng, e1), random_lit(rng, e2)};
		} else {
			Var e = p.n1 + 1 + static_cast<Var>(rng.below(p.n2));
			c.lits = {random_lit(rng, e)};
		}
	}
	return mk_formula(dense_prefix(p.n1, p.n2), std::move(clauses));
}

namespace {

// Residual clause over existential variables, encoded as bitmasks over the
// positions of the occurring existential variables.
struct MaskClause {
	uint32_t pos = 0;
	uint32_t neg = 0;
};

bool enum_satisfiable(const std::vector<MaskClause> &clauses, int bits)
{
	uint32_t limit = bits >= 32 ? 0 : (1u << bits);
	for (uint32_t beta = 0;; ++beta) {
		bool ok = true;
		for (const MaskClause &c : clauses) {
			if ((beta & c.pos) == 0 && (~beta & c.neg) == 0) {
				ok = false;
				break;
			}
		}
		if (ok)
			return true;
		if (beta + 1 == limit)
			return false;
	}
}

// Self-contained 2-SAT on residual clauses (Kosaraju's two-pass scheme),
// kept deliberately apart from the implication-graph engine it helps test.
class TwoSat {
  public:
	explicit TwoSat(int nvars) : n_(nvars), adj_(2 * nvars), radj_(2 * nvars)
	{
	}

	// lit encoding: 2*v for positive, 2*v+1 for negative, v in [0, n)
	void add_clause(int a, int b)
	{
		adj_[a ^ 1].push_back(b);
		adj_[b ^ 1].push_back(a);
		radj_[b].push_back(a ^ 1);
		radj_[a].push_back(b ^ 1);
	}

	bool satisfiable()
	{
		int verts = 2 * n_;
		std::vector<char> visited(verts, 0);
		std::vector<int> order;
		order.reserve(verts);
		std::vector<int> todo;
		for (int s = 0; s < verts; ++s) {
			if (visited[s])
				continue;
			todo.push_back(s);
			while (!todo.empty()) {
				int v = todo.back();
				todo.pop_back();
				if (v < 0) {
					order.push_back(~v);
					continue;
				}
				if (visited[v])
					continue;
				// mark at expansion, not at push: the marker must
				// sit below this vertex's whole subtree for the
				// finish order to be a true DFS postorder
				visited[v] = 1;
				todo.push_back(~v);
				for (int w : adj_[v])
					if (!visited[w])
						todo.push_back(w);
			}
		}
		std::vector<int> comp(verts, -1);
		int ncomp = 0;
		for (auto it = order.rbegin(); it != order.rend(); ++it) {
			if (comp[*it] != -1)
				continue;
			todo.push_back(*it);
			comp[*it] = ncomp;
			while (!todo.empty()) {
				int v = todo.back();
				todo.pop_back();
				for (int w : radj_[v]) {
					if (comp[w] != -1)
						continue;
					comp[w] = ncomp;
					todo.push_back(w);
				}
			}
			++ncomp;
		}
		for (int v = 0; v < n_; ++v)
			if (comp[2 * v] == comp[2 * v + 1])
				return false;
		return true;
	}

  private:
	int n_;
	std::vector<std::vector<int>> adj_, radj_;
};

} // namespace

Verdict oracle(const Formula &f, ResidualMode mode)
{
	// variables that actually occur; the others cannot influence truth
	std::vector<Var> univ, exis;
	std::unordered_map<Var, int> upos, epos;
	for (Var v = 1; v <= f.num_vars(); ++v) {
		if (f.occurrence_count(v) == 0)
			continue;
		if (f.quant(v) == Quant::Universal) {
			upos[v] = static_cast<int>(univ.size());
			univ.push_back(v);
		} else {
			epos[v] = static_cast<int>(exis.size());
			exis.push_back(v);
		}
	}
	if (univ.size() > 25)
		throw std::invalid_argument(
		    "oracle guard: more than 25 occurring universal variables");

	std::vector<std::vector<Lit>> residual;
	for (uint64_t alpha = 0; alpha < (1ull << univ.size()); ++alpha) {
		residual.clear();
		bool empty_residual_clause = false;
		for (const Clause &c : f.clauses()) {
			bool satisfied = false;
			std::vector<Lit> rest;
			for (Lit l : c.lits) {
				if (f.is_universal(l)) {
					bool value = (alpha >> upos[l.var()]) & 1;
					if (value != l.is_negative())
						satisfied = true;
				} else {
					rest.push_back(l);
				}
			}
			if (satisfied)
				continue;
			if (rest.empty()) {
				empty_residual_clause = true;
				break;
			}
			residual.push_back(std::move(rest));
		}
		if (empty_residual_clause)
			return Verdict::False;

		bool two_cnf = true;
		for (const auto &rc : residual)
			if (rc.size() > 2)
				two_cnf = false;

		bool sat;
		if (mode == ResidualMode::Auto && two_cnf) {
			TwoSat ts(static_cast<int>(exis.size()));
			for (const auto &rc : residual) {
				auto enc = [&](Lit l) {
					return 2 * epos[l.var()] +
					       (l.is_negative() ? 1 : 0);
				};
				if (rc.size() == 1)
					ts.add_clause(enc(rc[0]), enc(rc[0]));
				else
					ts.add_clause(enc(rc[0]), enc(rc[1]));
			}
			sat = ts.satisfiable();
		} else {
			if (exis.size() > 25)
				throw std::invalid_argument(
				    "oracle guard: more than 25 occurring existential "
				    "variables");
			std::vector<MaskClause> masks;
			masks.reserve(residual.size());
			for (const auto &rc : residual) {
				MaskClause mc;
				for (Lit l : rc) {
					uint32_t bit = 1u << epos[l.var()];
					if (l.is_negative())
						mc.neg |= bit;
					else
						mc.pos |= bit;
				}
				masks.push_back(mc);
			}
			sat = enum_satisfiable(masks,
			                       static_cast<int>(exis.size()));
		}
		if (!sat)
			return Verdict::False;
	}
	return Verdict::True;
}

}
