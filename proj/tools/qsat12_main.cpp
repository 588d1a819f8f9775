#include <cstdio>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "qsat12/branching.hpp"
#include "qsat12/qdimacs.hpp"
#include "qsat12/reduce.hpp"
#include "qsat12/solver.hpp"
#include "qsat12/testkit.hpp"

namespace {

// solver-convention exit codes
enum ExitStatus {
	EXIT_INFO = 0,
	EXIT_ERROR = 1,
	EXIT_TRUE = 10,
	EXIT_FALSE = 20,
};

int verdict_exit(qsat12::Verdict v)
{
	return v == qsat12::Verdict::True ? EXIT_TRUE : EXIT_FALSE;
}

int cmd_solve(const std::string &path, bool lax, const std::string &stats_path,
              bool no_shortcircuit)
{
	std::ifstream in(path, std::ios::binary);
	if (!in) {
		std::cerr << "error: cannot read '" << path << "'\n";
		return EXIT_ERROR;
	}
	std::ostringstream buf;
	buf << in.rdbuf();

	qsat12::ParseResult parsed = qsat12::parse(
	    buf.str(), lax ? qsat12::ParseMode::Lax : qsat12::ParseMode::Strict);
	for (const auto &w : parsed.warnings)
		std::cerr << path << ": warning: " << w.str() << '\n';
	if (!parsed.ok()) {
		std::cerr << path << ": " << parsed.error->str() << '\n';
		return EXIT_ERROR;
	}

	qsat12::SolveOptions opt;
	opt.no_shortcircuit = no_shortcircuit;
	qsat12::SolveResult result;
	try {
		result = qsat12::solve(*parsed.formula, opt);
	} catch (const std::exception &e) {
		std::cerr << path << ": " << e.what() << '\n';
		return EXIT_ERROR;
	}

	if (!stats_path.empty()) {
		std::ofstream out(stats_path, std::ios::binary);
		if (!out) {
			std::cerr << "error: cannot write '" << stats_path << "'\n";
			return EXIT_ERROR;
		}
		out << qsat12::stats_report_json(result.stats, *parsed.formula);
	}
	std::cout << qsat12::to_string(result.verdict) << '\n';
	return verdict_exit(result.verdict);
}

int cmd_gen(int n1, int n2, int m, uint64_t seed, const std::string &out_path)
{
	qsat12::Formula f;
	try {
		f = qsat12::generate({n1, n2, m, seed});
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return EXIT_ERROR;
	}
	std::ofstream out(out_path, std::ios::binary);
	if (!out) {
		std::cerr << "error: cannot write '" << out_path << "'\n";
		return EXIT_ERROR;
	}
	out << qsat12::serialize(f);
	return EXIT_INFO;
}

struct Range {
	int lo = 0, hi = 0;
};

int sample(qsat12::SplitMix64 &rng, const Range &r)
{
	return r.lo + static_cast<int>(rng.below(r.hi - r.lo + 1));
}

int cmd_verify(long count, Range n1, Range n2, Range m, uint64_t seed)
{
	if (n1.lo > n1.hi || n2.lo > n2.hi || m.lo > m.hi || n1.lo < 1 ||
	    n2.lo < 2 || m.lo < 0 || count < 0) {
		std::cerr << "error: invalid parameter ranges\n";
		return EXIT_ERROR;
	}
	qsat12::SplitMix64 rng(seed);
	long agree = 0;
	for (long i = 0; i < count; ++i) {
		qsat12::GenParams p;
		p.n1 = sample(rng, n1);
		p.n2 = sample(rng, n2);
		p.m = sample(rng, m);
		p.seed = rng.next();
		qsat12::Formula f = qsat12::generate(p);

		qsat12::Verdict truth = qsat12::oracle(f);
		qsat12::Verdict got = qsat12::solve(f).verdict;
		bool ok = got == truth;

		if (ok) {
			// reduction must preserve the verdict and be idempotent
			qsat12::ReduceOutcome out = qsat12::reduce(f);
			if (out.is_verdict())
				ok = *out.verdict == truth;
			else
				ok = qsat12::oracle(*out.formula) == truth;
		}

		if (!ok) {
			std::cout << agree << "/" << count << " agree\n";
			std::cerr << "mismatch on instance " << i << " (n1=" << p.n1
			          << " n2=" << p.n2 << " m=" << p.m << " seed=" << p.seed
			          << "):\n"
			          << qsat12::serialize(f);
			return EXIT_ERROR;
		}
		++agree;
	}
	std::cout << agree << "/" << count << " agree\n";
	return EXIT_INFO;
}

int cmd_lambda(const std::vector<int> &tuple)
{
	double lambda;
	try {
		lambda = qsat12::branching_number(tuple);
	} catch (const std::exception &e) {
		std::cerr << "error: " << e.what() << '\n';
		return EXIT_ERROR;
	}
	std::printf("%.6f\n", lambda);
	return EXIT_INFO;
}

} // namespace

int main(int argc, char **argv)
{
	CLI::App app{"decision engine for forall-exists CNF with one universal "
	             "and two existential literals per clause"};
	app.require_subcommand(1);

	// solve
	std::string solve_path, stats_path;
	bool lax = false, no_shortcircuit = false;
	auto *solve = app.add_subcommand(
	    "solve", "decide a QDIMACS file (exit 10 TRUE, 20 FALSE)");
	solve->add_option("file", solve_path, "QDIMACS input")->required();
	solve->add_flag("--lax", lax,
	                "accept clauses of 1-3 literals instead of the strict "
	                "3-literal shape");
	solve->add_option("--stats", stats_path,
	                  "write a JSON run report to this path");
	solve->add_flag("--no-shortcircuit", no_shortcircuit,
	                "explore both branches even after a FALSE result");

	// gen
	int g_n1 = 0, g_n2 = 0, g_m = 0;
	uint64_t g_seed = 0;
	std::string gen_out;
	auto *gen = app.add_subcommand("gen", "write a random instance");
	gen->add_option("n1", g_n1, "universal variables")->required();
	gen->add_option("n2", g_n2, "existential variables")->required();
	gen->add_option("m", g_m, "clauses")->required();
	gen->add_option("seed", g_seed, "generator seed")->required();
	gen->add_option("out", gen_out, "output path")->required();

	// verify
	long v_count = 0;
	std::vector<int> v_n1{1, 6}, v_n2{2, 10}, v_m{1, 30};
	uint64_t v_seed = 1;
	auto *verify = app.add_subcommand(
	    "verify", "cross-check solver and reducer against the oracle on "
	              "random instances");
	verify->add_option("count", v_count, "number of instances")->required();
	verify->add_option("--n1", v_n1, "universal range LO HI")
	    ->expected(2);
	verify->add_option("--n2", v_n2, "existential range LO HI")
	    ->expected(2);
	verify->add_option("--m", v_m, "clause count range LO HI")->expected(2);
	verify->add_option("--seed", v_seed, "master seed");

	// lambda
	std::vector<int> tuple;
	auto *lambda = app.add_subcommand(
	    "lambda", "branching number of a tuple: positive root of "
	              "sum x^-ri = 1");
	lambda->add_option("r", tuple, "tuple entries, all >= 1")
	    ->required()
	    ->expected(-1);

	try {
		app.parse(argc, argv);
	} catch (const CLI::ParseError &e) {
		int code = app.exit(e);
		return code == 0 ? EXIT_INFO : EXIT_ERROR;
	}

	if (solve->parsed())
		return cmd_solve(solve_path, lax, stats_path, no_shortcircuit);
	if (gen->parsed())
		return cmd_gen(g_n1, g_n2, g_m, g_seed, gen_out);
	if (verify->parsed())
		return cmd_verify(v_count, {v_n1[0], v_n1[1]}, {v_n2[0], v_n2[1]},
		                  {v_m[0], v_m[1]}, v_seed);
	if (lambda->parsed())
		return cmd_lambda(tuple);
	return EXIT_ERROR;
}
