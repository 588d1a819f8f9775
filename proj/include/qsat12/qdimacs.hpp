#pragma once

#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "qsat12/formula.hpp"

namespace qsat12 {

struct ParseDiagnostic {
	int line = 1;
	std::string message;

	std::string str() const
	{
		return "line " + std::to_string(line) + ": " + message;
	}
};

enum class ParseMode {
	// every clause must be (1,2)-shaped: exactly one universal and two
	// existential literals on distinct variables
	Strict,
	// any clause of 1-3 literals with at most one universal literal
	Lax,
};

struct ParseResult {
	std::optional<Formula> formula;
	std::vector<ParseDiagnostic> warnings;
	std::optional<ParseDiagnostic> error; // set iff formula is empty

	bool ok() const { return formula.has_value(); }
};

// Accepted grammar, one item per line (comments `c ...` and blank lines may
// appear anywhere and are skipped):
//
//   p cnf <nvars> <nclauses>
//   a <var>... 0
//   e <var>... 0
//   <lit>... 0        (exactly <nclauses> of these)
//
// Exactly one `a` line followed by exactly one `e` line. Variables declared
// by the header but listed in neither block are appended to the existential
// block with a warning. CRLF input is accepted. Never throws on malformed
// input; returns a diagnostic with a 1-based line number instead.
ParseResult parse(std::string_view text, ParseMode mode = ParseMode::Strict);

// Canonical form: header, `a` line, `e` line (both always present, possibly
// holding no variables), clauses in stored order, LF line endings.
std::string serialize(const Formula &f);

}
