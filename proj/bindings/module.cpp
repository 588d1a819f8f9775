#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "qsat12/branching.hpp"
#include "qsat12/qdimacs.hpp"
#include "qsat12/qsat2.hpp"
#include "qsat12/reduce.hpp"
#include "qsat12/solver.hpp"
#include "qsat12/testkit.hpp"

namespace py = pybind11;
using namespace qsat12;

namespace {

bool as_bool(Verdict v)
{
	return v == Verdict::True;
}

Formula make_formula(const std::vector<int> &universals,
                     const std::vector<int> &existentials,
                     const std::vector<std::vector<int>> &clauses)
{
	Prefix prefix{universals, existentials};
	std::vector<Clause> cs;
	cs.reserve(clauses.size());
	for (const auto &ints : clauses) {
		Clause c;
		for (int dl : ints) {
			if (dl == 0)
				throw std::invalid_argument("0 is not a literal");
			c.lits.push_back(Lit::from_dimacs(dl));
		}
		cs.push_back(std::move(c));
	}
	return mk_formula(std::move(prefix), std::move(cs));
}

std::vector<std::vector<int>> clause_ints(const Formula &f)
{
	std::vector<std::vector<int>> out;
	out.reserve(f.clauses().size());
	for (const Clause &c : f.clauses()) {
		std::vector<int> ints;
		for (Lit l : c.lits)
			ints.push_back(l.to_dimacs());
		out.push_back(std::move(ints));
	}
	return out;
}

Formula parse_or_raise(const std::string &text, bool strict)
{
	ParseResult r =
	    parse(text, strict ? ParseMode::Strict : ParseMode::Lax);
	if (!r.ok())
		throw std::invalid_argument(r.error->str());
	return *r.formula;
}

} // namespace

PYBIND11_MODULE(_core, m)
{
	m.doc() = "decision engine for forall-exists CNF with one universal "
	          "and two existential literals per clause";

	py::class_<Formula>(m, "Formula")
	    .def_property_readonly("m", &Formula::m, "number of clauses")
	    .def_property_readonly("u_count", &Formula::u_count,
	                           "clauses still holding a universal literal")
	    .def_property_readonly(
	        "universals",
	        [](const Formula &f) { return f.prefix().universals; })
	    .def_property_readonly(
	        "existentials",
	        [](const Formula &f) { return f.prefix().existentials; })
	    .def_property_readonly("clauses", &clause_ints,
	                           "clauses as lists of signed DIMACS literals")
	    .def("__eq__", [](const Formula &a,
	                      const Formula &b) { return a == b; })
	    .def("__repr__", [](const Formula &f) {
		    return "<Formula n1=" +
		           std::to_string(f.prefix().universals.size()) +
		           " n2=" + std::to_string(f.prefix().existentials.size()) +
		           " m=" + std::to_string(f.m()) + ">";
	    });

	py::class_<BranchRecord>(m, "BranchRecord")
	    .def_readonly("depth", &BranchRecord::depth)
	    .def_readonly("var", &BranchRecord::branch_var)
	    .def_readonly("u_parent", &BranchRecord::u_count_parent)
	    .def_readonly("u_true", &BranchRecord::u_count_child_true)
	    .def_readonly("u_false", &BranchRecord::u_count_child_false)
	    .def_property_readonly("case", [](const BranchRecord &r) {
		    return std::string(to_string(r.case_tag));
	    });

	py::class_<SolveStats>(m, "SolveStats")
	    .def_readonly("nodes", &SolveStats::nodes)
	    .def_readonly("max_depth", &SolveStats::max_depth)
	    .def_readonly("reduce_passes", &SolveStats::reduce_passes)
	    .def_readonly("short_circuits", &SolveStats::short_circuits)
	    .def_readonly("records", &SolveStats::records);

	py::class_<SolveResult>(m, "SolveResult")
	    .def_property_readonly(
	        "verdict", [](const SolveResult &r) { return as_bool(r.verdict); })
	    .def_readonly("stats", &SolveResult::stats);

	py::class_<ReduceOutcome>(m, "ReduceOutcome")
	    .def_property_readonly("verdict",
	                           [](const ReduceOutcome &o) -> py::object {
		                           if (!o.verdict)
			                           return py::none();
		                           return py::bool_(as_bool(*o.verdict));
	                           })
	    .def_property_readonly("formula",
	                           [](const ReduceOutcome &o) -> py::object {
		                           if (!o.formula)
			                           return py::none();
		                           return py::cast(*o.formula);
	                           });

	py::class_<AuditReport>(m, "AuditReport")
	    .def_readonly("total_nodes", &AuditReport::total_nodes)
	    .def_readonly("worst_tuple", &AuditReport::worst_tuple)
	    .def_readonly("worst_lambda", &AuditReport::worst_lambda)
	    .def_readonly("bound_limit", &AuditReport::bound_limit)
	    .def_readonly("bound_ok", &AuditReport::bound_ok)
	    .def_readonly("violations", &AuditReport::violations);

	m.def("make_formula", &make_formula, py::arg("universals"),
	      py::arg("existentials"), py::arg("clauses"),
	      "build a formula from quantifier blocks and clauses of signed "
	      "DIMACS literals");
	m.def("parse", &parse_or_raise, py::arg("text"),
	      py::arg("strict") = true,
	      "parse QDIMACS text; raises ValueError with a line number on "
	      "malformed input");
	m.def("serialize", &serialize, py::arg("formula"));
	m.def("validate_12_shape", &validate_12_shape, py::arg("formula"));
	m.def(
	    "assign_literal",
	    [](const Formula &f, int dl) {
		    if (dl == 0)
			    throw std::invalid_argument("0 is not a literal");
		    return assign_literal(f, Lit::from_dimacs(dl));
	    },
	    py::arg("formula"), py::arg("literal"),
	    "make a signed literal true and simplify");
	m.def("is_empty", &is_empty, py::arg("formula"));
	m.def("has_empty_clause", &has_empty_clause, py::arg("formula"));

	m.def(
	    "reduce",
	    [](const Formula &f) { return reduce(f); },
	    py::arg("formula"),
	    "run the reduction rules to fixpoint; yields a verdict or a "
	    "simplified formula");
	m.def("unit_propagate", &unit_propagate, py::arg("formula"));
	m.def("monotone_eliminate", &monotone_eliminate, py::arg("formula"));

	m.def(
	    "solve",
	    [](const Formula &f, bool no_shortcircuit) {
		    return solve(f, SolveOptions{no_shortcircuit});
	    },
	    py::arg("formula"), py::arg("no_shortcircuit") = false);
	m.def(
	    "qsat2_truth",
	    [](const Formula &f) { return as_bool(qsat2_truth(f)); },
	    py::arg("formula"),
	    "decide a formula whose clauses have at most 2 literals");
	m.def(
	    "oracle",
	    [](const Formula &f, bool enumerate_only) {
		    return as_bool(oracle(f, enumerate_only
		                                 ? ResidualMode::EnumerateOnly
		                                 : ResidualMode::Auto));
	    },
	    py::arg("formula"), py::arg("enumerate_only") = false,
	    "brute-force ground truth (guarded at 25 occurring variables per "
	    "block)");

	m.def(
	    "generate",
	    [](int n1, int n2, int m_, uint64_t seed) {
		    return generate({n1, n2, m_, seed});
	    },
	    py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("seed"),
	    "random instance with one universal and two distinct existential "
	    "literals per clause");
	m.def(
	    "generate_qsat2",
	    [](int n1, int n2, int m_, uint64_t seed) {
		    return generate_qsat2({n1, n2, m_, seed});
	    },
	    py::arg("n1"), py::arg("n2"), py::arg("m"), py::arg("seed"),
	    "random instance with clauses of at most 2 literals");

	m.def("branching_number", &branching_number, py::arg("tuple"),
	      "positive root of sum x^-ri = 1");
	m.def("audit_trace", &audit_trace, py::arg("stats"), py::arg("formula"));
	m.def("stats_report_json", &stats_report_json, py::arg("stats"),
	      py::arg("formula"));
}
