#pragma once

#include <compare>
#include <cstdint>
#include <vector>

namespace qsat12 {

// Variables are dense 1-based integers, matching QDIMACS numbering.
using Var = int;

enum class Quant : uint8_t { Universal, Existential };

enum class Verdict : uint8_t { True, False };

const char *to_string(Verdict v);

// A literal packed as 2*(var-1)+sign so it can index flat per-literal arrays.
class Lit {
  public:
	Lit() = default;
	Lit(Var v, bool negative) : code_(2 * (v - 1) + (negative ? 1 : 0)) {}

	static Lit positive(Var v) { return Lit(v, false); }
	static Lit negative(Var v) { return Lit(v, true); }
	static Lit from_dimacs(int dl) { return Lit(dl < 0 ? -dl : dl, dl < 0); }

	Var var() const { return code_ / 2 + 1; }
	bool is_negative() const { return code_ & 1; }
	Lit complement() const
	{
		Lit l;
		l.code_ = code_ ^ 1;
		return l;
	}
	int index() const { return code_; }
	int to_dimacs() const { return is_negative() ? -var() : var(); }

	auto operator<=>(const Lit &) const = default;

  private:
	int code_ = -1;
};

// The two quantifier blocks, in prefix order (all universals before all
// existentials). Block order is significant for equality.
struct Prefix {
	std::vector<Var> universals;
	std::vector<Var> existentials;

	int total() const
	{
		return static_cast<int>(universals.size() + existentials.size());
	}
	bool operator==(const Prefix &) const = default;
};

// Disjunction of at most 3 literals on distinct variables. Literals are kept
// sorted by variable id; construction through mk_formula enforces the rest.
struct Clause {
	std::vector<Lit> lits;

	int size() const { return static_cast<int>(lits.size()); }
	bool empty() const { return lits.empty(); }
	bool contains(Lit l) const;

	bool operator==(const Clause &) const = default;
};

// Prenex forall-exists CNF with clause counters and a per-literal occurrence
// index. Formulas behave as immutable values: every operation below returns a
// fresh one.
class Formula {
  public:
	Formula() { build_index(); }

	const Prefix &prefix() const { return prefix_; }
	const std::vector<Clause> &clauses() const { return clauses_; }
	const Clause &clause(int idx) const { return clauses_[idx]; }

	int m() const { return static_cast<int>(clauses_.size()); }
	int u_count() const { return u_count_; }
	int num_vars() const { return prefix_.total(); }

	Quant quant(Var v) const { return qmap_[v]; }
	bool is_universal(Lit l) const
	{
		return qmap_[l.var()] == Quant::Universal;
	}
	bool is_existential(Lit l) const
	{
		return qmap_[l.var()] == Quant::Existential;
	}
	bool is_declared(Var v) const
	{
		return v >= 1 && v <= static_cast<Var>(prefix_.total());
	}

	// Clause indices (into clauses()) where l occurs.
	const std::vector<int> &occurrences(Lit l) const
	{
		return occ_[l.index()];
	}
	int occurrence_count(Var v) const
	{
		return static_cast<int>(occ_[Lit::positive(v).index()].size() +
		                        occ_[Lit::negative(v).index()].size());
	}

	// Equality is prefix plus the ordered clause list; the occurrence index
	// is derived data and does not participate.
	bool operator==(const Formula &other) const
	{
		return prefix_ == other.prefix_ && clauses_ == other.clauses_;
	}

  private:
	Formula(Prefix prefix, std::vector<Clause> clauses);
	void build_index();

	Prefix prefix_;
	std::vector<Clause> clauses_;
	int u_count_ = 0;
	std::vector<Quant> qmap_;               // var -> block
	std::vector<std::vector<int>> occ_;     // lit index -> clause ids

	friend Formula mk_formula(Prefix, std::vector<Clause>);
	friend Formula assign_literal(const Formula &, Lit);
};

// Validates and canonicalizes: prefix blocks must be disjoint and cover
// 1..n densely; duplicate literals inside a clause collapse; tautological
// clauses are dropped. Throws std::invalid_argument on undeclared variables,
// malformed prefixes, or clauses with more than 3 distinct variables.
Formula mk_formula(Prefix prefix, std::vector<Clause> clauses);

// True iff every clause has exactly 3 literals on distinct variables, one
// universal and two existential. Input gate only; formulas reached during
// search need not pass.
bool validate_12_shape(const Formula &f);

// Makes l true: clauses containing l are deleted, occurrences of ~l are
// stripped. Stripping may leave empty clauses; they are kept so the solver
// can observe them. Throws if var(l) is undeclared.
Formula assign_literal(const Formula &f, Lit l);

bool is_empty(const Formula &f);
bool has_empty_clause(const Formula &f);

}
