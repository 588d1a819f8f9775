"""Decision toolkit for forall-exists CNF with one universal and two
existential literals per clause: reduction rules, branching solver,
quantified 2-CNF engine, brute-force oracle, random generators and
branching-number analysis."""

from qsat12._core import (
    AuditReport,
    BranchRecord,
    Formula,
    ReduceOutcome,
    SolveResult,
    SolveStats,
    assign_literal,
    audit_trace,
    branching_number,
    generate,
    generate_qsat2,
    has_empty_clause,
    is_empty,
    make_formula,
    monotone_eliminate,
    oracle,
    parse,
    qsat2_truth,
    reduce,
    serialize,
    solve,
    stats_report_json,
    unit_propagate,
    validate_12_shape,
)

__version__ = "0.1.0"

__all__ = [
    "AuditReport",
    "BranchRecord",
    "Formula",
    "ReduceOutcome",
    "SolveResult",
    "SolveStats",
    "assign_literal",
    "audit_trace",
    "branching_number",
    "generate",
    "generate_qsat2",
    "has_empty_clause",
    "is_empty",
    "make_formula",
    "monotone_eliminate",
    "oracle",
    "parse",
    "qsat2_truth",
    "reduce",
    "serialize",
    "solve",
    "stats_report_json",
    "unit_propagate",
    "validate_12_shape",
    "__version__",
]
