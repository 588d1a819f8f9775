#include "qsat12/qdimacs.hpp"

#include <charconv>
#include <sstream>

namespace qsat12 {

namespace {

struct Tokenizer {
	std::string_view text;
	size_t pos = 0;
	int line = 0;

	// next non-comment, non-blank line split into tokens; false at EOF
	bool next_line(std::vector<std::string_view> &tokens)
	{
		while (pos < text.size()) {
			size_t end = text.find('\n', pos);
			std::string_view raw =
			    text.substr(pos, end == std::string_view::npos
			                         ? std::string_view::npos
			                         : end - pos);
			pos = end == std::string_view::npos ? text.size() : end + 1;
			++line;
			if (!raw.empty() && raw.back() == '\r')
				raw.remove_suffix(1);

			tokens.clear();
			size_t i = 0;
			while (i < raw.size()) {
				while (i < raw.size() &&
				       (raw[i] == ' ' || raw[i] == '\t'))
					++i;
				size_t start = i;
				while (i < raw.size() && raw[i] != ' ' &&
				       raw[i] != '\t')
					++i;
				if (i > start)
					tokens.push_back(raw.substr(start, i - start));
			}
			if (tokens.empty())
				continue;
			if (tokens[0][0] == 'c')
				continue;
			return true;
		}
		++line; // diagnostics at EOF point one past the last line
		return false;
	}
};

bool to_int(std::string_view tok, long &out)
{
	auto [ptr, ec] =
	    std::from_chars(tok.data(), tok.data() + tok.size(), out);
	return ec == std::errc() && ptr == tok.data() + tok.size();
}

ParseResult fail(int line, std::string message)
{
	ParseResult r;
	r.error = ParseDiagnostic{line, std::move(message)};
	return r;
}

} // namespace

ParseResult parse(std::string_view text, ParseMode mode)
{
	Tokenizer tz{text};
	std::vector<std::string_view> toks;

	if (!tz.next_line(toks))
		return fail(tz.line, "expected header 'p cnf <vars> <clauses>'");
	long nvars = 0, nclauses = 0;
	if (toks.size() != 4 || toks[0] != "p" || toks[1] != "cnf" ||
	    !to_int(toks[2], nvars) || !to_int(toks[3], nclauses) ||
	    nvars < 0 || nclauses < 0)
		return fail(tz.line, "malformed header; expected 'p cnf <vars> <clauses>'");

	// quantifier blocks: exactly one `a` line, then exactly one `e` line
	std::vector<Var> blocks[2];
	std::vector<int> block_of(nvars + 1, -1);
	static const char *kind[2] = {"a", "e"};
	int block_line[2] = {0, 0};
	for (int b = 0; b < 2; ++b) {
		if (!tz.next_line(toks))
			return fail(tz.line, std::string("expected '") + kind[b] +
			                         "' quantifier line");
		if (toks[0] != kind[b])
			return fail(tz.line, std::string("expected '") + kind[b] +
			                         "' quantifier line");
		block_line[b] = tz.line;
		bool terminated = false;
		for (size_t i = 1; i < toks.size(); ++i) {
			long v;
			if (!to_int(toks[i], v))
				return fail(tz.line, "invalid token '" +
				                         std::string(toks[i]) +
				                         "' in quantifier line");
			if (v == 0) {
				if (i + 1 != toks.size())
					return fail(tz.line,
					            "tokens after quantifier line terminator");
				terminated = true;
				break;
			}
			if (v < 0)
				return fail(tz.line,
				            "quantifier block must list positive variables");
			if (v > nvars)
				return fail(tz.line, "variable " + std::to_string(v) +
				                         " exceeds declared count " +
				                         std::to_string(nvars));
			if (block_of[v] != -1)
				return fail(tz.line, "variable " + std::to_string(v) +
				                         " already declared in a block");
			block_of[v] = b;
			blocks[b].push_back(static_cast<Var>(v));
		}
		if (!terminated)
			return fail(tz.line, "quantifier line not terminated by 0");
	}

	ParseResult result;
	for (Var v = 1; v <= nvars; ++v) {
		if (block_of[v] == -1) {
			result.warnings.push_back(
			    {block_line[1], "variable " + std::to_string(v) +
			                        " not listed in any block; treated as "
			                        "existential"});
			block_of[v] = 1;
			blocks[1].push_back(v);
		}
	}

	std::vector<Clause> clauses;
	clauses.reserve(nclauses);
	while (tz.next_line(toks)) {
		if (static_cast<long>(clauses.size()) == nclauses)
			return fail(tz.line, "more clauses than the " +
			                         std::to_string(nclauses) +
			                         " declared in the header");
		Clause c;
		bool terminated = false;
		int universal = 0;
		for (size_t i = 0; i < toks.size(); ++i) {
			long dl;
			if (!to_int(toks[i], dl))
				return fail(tz.line, "invalid literal token '" +
				                         std::string(toks[i]) + "'");
			if (dl == 0) {
				if (i + 1 != toks.size())
					return fail(tz.line,
					            "tokens after clause terminator");
				terminated = true;
				break;
			}
			long v = dl < 0 ? -dl : dl;
			if (v > nvars)
				return fail(tz.line, "variable " + std::to_string(v) +
				                         " exceeds declared count " +
				                         std::to_string(nvars));
			Lit l = Lit::from_dimacs(static_cast<int>(dl));
			if (block_of[v] == 0)
				++universal;
			c.lits.push_back(l);
		}
		if (!terminated)
			return fail(tz.line, "clause not terminated by 0");
		if (c.size() == 0)
			return fail(tz.line, "clause has no literals");
		if (c.size() > 3)
			return fail(tz.line, "clause has " + std::to_string(c.size()) +
			                         " literals; at most 3 supported");
		if (mode == ParseMode::Strict) {
			bool distinct = true;
			for (int i = 0; i < c.size(); ++i)
				for (int j = i + 1; j < c.size(); ++j)
					if (c.lits[i].var() == c.lits[j].var())
						distinct = false;
			if (c.size() != 3 || universal != 1 || !distinct)
				return fail(tz.line,
				            "clause must contain exactly one universal and "
				            "two existential literals on distinct variables");
		} else {
			if (universal > 1)
				return fail(tz.line,
				            "clause contains more than one universal literal");
		}
		clauses.push_back(std::move(c));
	}
	if (static_cast<long>(clauses.size()) != nclauses)
		return fail(tz.line, "header declares " + std::to_string(nclauses) +
		                         " clauses, file contains " +
		                         std::to_string(clauses.size()));

	Prefix prefix{std::move(blocks[0]), std::move(blocks[1])};
	try {
		result.formula = mk_formula(std::move(prefix), std::move(clauses));
	} catch (const std::exception &e) {
		return fail(tz.line, e.what());
	}
	return result;
}

std::string serialize(const Formula &f)
{
	std::ostringstream out;
	out << "p cnf " << f.num_vars() << ' ' << f.m() << '\n';
	out << 'a';
	for (Var v : f.prefix().universals)
		out << ' ' << v;
	out << " 0\n";
	out << 'e';
	for (Var v : f.prefix().existentials)
		out << ' ' << v;
	out << " 0\n";
	for (const Clause &c : f.clauses()) {
		for (Lit l : c.lits)
			out << l.to_dimacs() << ' ';
		out << "0\n";
	}
	return out.str();
}

}
