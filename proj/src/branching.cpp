#include "qsat12/branching.hpp"

#include <algorithm>
#include <cmath>
#include <stdexcept>

#include <nlohmann/json.hpp>

namespace qsat12 {

double branching_number(const BranchTuple &t)
{
	if (t.empty())
		throw std::invalid_argument("branching tuple must not be empty");
	for (int r : t)
		if (r < 1)
			throw std::invalid_argument(
			    "branching tuple entries must be >= 1");

	// canonical order makes the result exactly permutation invariant
	BranchTuple sorted = t;
	std::sort(sorted.begin(), sorted.end());

	size_t k = sorted.size();
	if (k == 1)
		return 1.0;
	int rmin = sorted.front();
	int rmax = sorted.back();
	if (rmin == rmax)
		return std::pow(static_cast<double>(k), 1.0 / rmin);

	auto excess = [&](double x) {
		double s = -1.0;
		for (int r : sorted)
			s += std::pow(x, -static_cast<double>(r));
		return s;
	};
	// excess() is strictly decreasing on x > 1; positive at the lower end
	// (it tends to k-1 >= 1) and negative at k^(1/rmin) + 1
	double lo = 1.0 + 1e-12;
	double hi = std::pow(static_cast<double>(k), 1.0 / rmin) + 1.0;
	for (int i = 0; i < 200 && hi - lo > 1e-13; ++i) {
		double mid = 0.5 * (lo + hi);
		if (excess(mid) > 0.0)
			lo = mid;
		else
			hi = mid;
	}
	return 0.5 * (lo + hi);
}

AuditReport audit_trace(const SolveStats &stats, const Formula &f0)
{
	AuditReport report;
	report.total_nodes = stats.nodes;
	for (const BranchRecord &rec : stats.records) {
		int rt = rec.u_count_parent - rec.u_count_child_true;
		int rf = rec.u_count_parent - rec.u_count_child_false;
		if (rt < 2 || rf < 2)
			report.violations.push_back(rec);
		if (rt >= 1 && rf >= 1) {
			BranchTuple tuple{rt, rf};
			double lambda = branching_number(tuple);
			if (lambda > report.worst_lambda) {
				report.worst_lambda = lambda;
				report.worst_tuple = tuple;
			}
		}
	}
	report.bound_limit = 2.0 * std::pow(1.4143, f0.m());
	report.bound_ok =
	    static_cast<double>(stats.nodes) <= report.bound_limit;
	return report;
}

namespace {

nlohmann::ordered_json record_json(const BranchRecord &rec)
{
	return {{"depth", rec.depth},
	        {"var", rec.branch_var},
	        {"u_parent", rec.u_count_parent},
	        {"u_true", rec.u_count_child_true},
	        {"u_false", rec.u_count_child_false},
	        {"case", to_string(rec.case_tag)}};
}

} // namespace

std::string stats_report_json(const SolveStats &stats, const Formula &f0)
{
	AuditReport audit = audit_trace(stats, f0);

	nlohmann::ordered_json doc;
	doc["m"] = f0.m();
	doc["n1"] = f0.prefix().universals.size();
	doc["n2"] = f0.prefix().existentials.size();
	doc["nodes"] = stats.nodes;
	doc["max_depth"] = stats.max_depth;
	doc["reduce_passes"] = stats.reduce_passes;
	doc["short_circuits"] = stats.short_circuits;
	doc["records"] = nlohmann::ordered_json::array();
	for (const BranchRecord &rec : stats.records)
		doc["records"].push_back(record_json(rec));

	nlohmann::ordered_json aj;
	aj["worst_tuple"] = audit.worst_tuple;
	aj["worst_lambda"] = audit.worst_lambda;
	aj["bound_limit"] = audit.bound_limit;
	aj["bound_ok"] = audit.bound_ok;
	aj["violations"] = nlohmann::ordered_json::array();
	for (const BranchRecord &rec : audit.violations)
		aj["violations"].push_back(record_json(rec));
	doc["audit"] = aj;

	return doc.dump(2) + "\n";
}

}
