"""Smoke tests for the qsat12 python module."""

import pytest

import qsat12


TRUE_TEXT = "p cnf 3 2\na 1 0\ne 2 3 0\n1 2 3 0\n-1 -2 3 0\n"


def test_parse_solve_roundtrip():
    f = qsat12.parse(TRUE_TEXT)
    assert f.m == 2
    assert f.u_count == 2
    assert f.universals == [1]
    assert f.existentials == [2, 3]
    assert qsat12.validate_12_shape(f)
    assert qsat12.serialize(f) == TRUE_TEXT

    result = qsat12.solve(f)
    assert result.verdict is True
    assert result.stats.nodes >= 1
    assert qsat12.oracle(f) is True


def test_parse_error_carries_line():
    with pytest.raises(ValueError, match="line 4"):
        qsat12.parse("p cnf 3 1\na 1 0\ne 2 3 0\n1 2 0\n")


def test_make_formula_and_assign():
    f = qsat12.make_formula([1], [2, 3], [[1, 2, 3]])
    assert f.clauses == [[1, 2, 3]]
    g = qsat12.assign_literal(f, -1)
    assert g.clauses == [[2, 3]]
    assert g.u_count == 0
    assert qsat12.assign_literal(f, 1).m == 0


def test_reduce_outcomes():
    falsy = qsat12.make_formula([1], [2, 3], [[2], [-2, 3], [-3, 1]])
    out = qsat12.reduce(falsy)
    assert out.verdict is False
    assert out.formula is None

    fixed = qsat12.make_formula([1], [2, 3], [[1, 2, 3], [-1, -2, -3]])
    out = qsat12.reduce(fixed)
    assert out.verdict is None
    assert out.formula == fixed


def test_solver_agrees_with_oracle_on_random_instances():
    for seed in range(200):
        f = qsat12.generate(3, 5, 12, seed)
        assert qsat12.solve(f).verdict == qsat12.oracle(f)


def test_qsat2_agrees_with_enumeration():
    for seed in range(200):
        f = qsat12.generate_qsat2(3, 6, 15, seed)
        assert qsat12.qsat2_truth(f) == qsat12.oracle(f, enumerate_only=True)


def test_generator_is_deterministic():
    a = qsat12.generate(2, 3, 5, 42)
    b = qsat12.generate(2, 3, 5, 42)
    assert a == b
    assert a.m == 5
    with pytest.raises(ValueError):
        qsat12.generate(2, 1, 5, 0)


def test_branching_number():
    assert qsat12.branching_number([1, 1]) == 2.0
    assert abs(qsat12.branching_number([2, 2]) - 2 ** 0.5) < 1e-9
    assert abs(qsat12.branching_number([1, 2]) - 1.618034) < 1e-6
    with pytest.raises(ValueError):
        qsat12.branching_number([])


def test_audit_and_report():
    f = qsat12.generate(4, 6, 14, 7)
    result = qsat12.solve(f, no_shortcircuit=True)
    report = qsat12.audit_trace(result.stats, f)
    assert report.violations == []
    assert report.bound_ok
    assert report.total_nodes == result.stats.nodes

    doc = qsat12.stats_report_json(result.stats, f)
    assert '"bound_ok": true' in doc
