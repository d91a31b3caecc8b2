import pytest

from njordan.errors import ScriptError
from njordan.freealg import Mode
from njordan.services.derivation import (
    AssertEquals,
    Combine,
    DerivationScript,
    Seed,
    Solve,
    Substitute,
    first_divergence,
    replay,
    validate_script,
)
from njordan.services.identities import parse_identity
from njordan.services.persistence import to_json
from njordan.services.scripts import SCRIPT_MAP, get_script


def labels(trace):
    return [step.label for step in trace.steps if step.label]


def assertion(trace, label):
    return next(step for step in trace.steps if step.label == label)


@pytest.mark.parametrize("name", sorted(SCRIPT_MAP))
def test_builtin_scripts_pass(name):
    trace = replay(get_script(name))
    failed = [step.label for step in trace.steps if step.passed is False]
    assert trace.passed, failed


def test_jordan_n2_commutative():
    trace = replay(get_script("jordan_n2_commutative"))
    assert trace.conclusion == "h(x*y) = H(x)*H(y)"
    assert trace.denominators == [2]


def test_thm2_2_n3():
    trace = replay(get_script("thm2_2_n3"))
    assert trace.conclusion == "h(x*y*z) = H(x)*H(y)*H(z)"
    assert set(trace.denominators) <= {2, 3}
    assert assertion(trace, "(1)").passed
    assert assertion(trace, "(1)").denominators == [3]
    assert trace.premises == []


def test_thm2_2_n4():
    trace = replay(get_script("thm2_2_n4"))
    assert trace.conclusion == "h(x*y*w*t) = H(x)*H(y)*H(w)*H(t)"
    assert {"(2)", "(3)", "(4)", "(5)", "(6)"} <= set(labels(trace))
    assert assertion(trace, "(3)").note.startswith("asserted in recomputed form")
    assert set(trace.denominators) <= {2, 3}


def test_thm2_5_step1():
    trace = replay(get_script("thm2_5_step1"))
    assert trace.passed
    assert trace.mode == "nc"
    assert trace.conclusion == "h(y*x*z) = H(x)*H(y)*H(z)"
    assert trace.premises == ["(11)", "(15)"]
    for label in ("(7)", "(8)", "(9)", "(10)", "(11s)", "(12)", "(13)", "(14)", "(15s)", "(16)", "(17)", "(18)"):
        assert assertion(trace, label).passed, label
    assert len(trace.flags) == 5
    assert any(flag.startswith("(10)") for flag in trace.flags)
    assert any(flag.startswith("(15)") for flag in trace.flags)


def test_thm2_5_probes_report_not_in_span():
    trace = replay(get_script("thm2_5_step1"))
    for label in ("(11) probe", "(15) probe"):
        detail = assertion(trace, label).detail
        assert detail.startswith("NotInSpan")
        assert "every seed instance is constant on words of equal content" in detail


def test_unconditional_steps_carry_no_premises():
    trace = replay(get_script("thm2_5_step1"))
    assert assertion(trace, "(11s)").premises == []
    assert assertion(trace, "(12)").premises == ["(11)"]
    assert assertion(trace, "(16)").premises == ["(11)", "(15)"]


def test_trace_json_is_stable():
    first = to_json(replay(get_script("thm2_2_n4")))
    second = to_json(replay(get_script("thm2_2_n4")))
    assert first == second
    assert "wall_time" not in first


def test_timings_are_opt_in():
    trace = replay(get_script("thm2_2_n3"), timings=True)
    assert trace.wall_time is not None and trace.wall_time >= 0


## Failing and malformed scripts

def small_script(expected: str) -> DerivationScript:
    return DerivationScript(
        name="small",
        mode=Mode.COMMUTATIVE,
        conclusion="J",
        steps=[
            Seed("S", 2),
            Substitute("S_xy", "S", {"a": "x+y"}),
            Substitute("S_x", "S", {"a": "x"}),
            Substitute("S_y", "S", {"a": "y"}),
            Combine("J", [(1, "S_xy"), (-1, "S_x"), (-1, "S_y")]),
            AssertEquals("J", expected, "(j)"),
        ],
    )


def test_failed_assertion_marks_trace_failed():
    trace = replay(small_script("h(x*y) = H(x)*H(y)"))
    step = assertion(trace, "(j)")
    assert not trace.passed
    assert step.passed is False
    assert step.detail == "lhs term x*y: got 2, expected 1"


def test_correct_assertion_passes():
    assert replay(small_script("h(2*x*y) = 2*H(x)*H(y)")).passed


def test_first_divergence_on_right_side():
    actual = parse_identity("h(x) = H(x)")
    expected = parse_identity("h(x) = 2*H(x)")
    assert first_divergence(actual, expected) == "rhs term H(x): got 1, expected 2"
    assert first_divergence(actual, actual) is None


def test_undefined_reference():
    script = DerivationScript("bad", Mode.NONCOMMUTATIVE, [Seed("S", 3), Substitute("T", "U", {"a": "x"})], "T")
    with pytest.raises(ScriptError):
        validate_script(script)


def test_duplicate_label():
    script = DerivationScript(
        "bad",
        Mode.NONCOMMUTATIVE,
        [Seed("S", 3), AssertEquals("S", "h(a^3) = H(a)^3", "(1)"), AssertEquals("S", "h(a^3) = H(a)^3", "(1)")],
        "S",
    )
    with pytest.raises(ScriptError):
        replay(script)


def test_errors_inside_steps_become_script_errors():
    script = DerivationScript("bad", Mode.NONCOMMUTATIVE, [Seed("S", 3), Substitute("T", "S", {"a": "x*y"})], "T")
    with pytest.raises(ScriptError):
        replay(script)


def test_unknown_script():
    with pytest.raises(ScriptError):
        get_script("thm9")


def test_assertions_after_a_failed_solve_fail():
    script = DerivationScript(
        "unreachable",
        Mode.COMMUTATIVE,
        [
            Seed("S", 2),
            Solve("F", ["S"], "h(x*y) = H(x)*H(y)"),
            AssertEquals("F", "h(x*y) = H(x)*H(y)", "(f)"),
            Substitute("G", "F", {"x": "y"}),
            AssertEquals("G", "h(y^2) = H(y)^2", "(g)"),
        ],
        "G",
    )
    trace = replay(script)
    assert not trace.passed
    solve = next(step for step in trace.steps if step.kind == "Solve")
    assert solve.passed is False
    assert solve.detail.startswith("not in the span")
    assert assertion(trace, "(f)").passed is False
    assert assertion(trace, "(f)").detail == "F rests on a failed Solve step"
    assert assertion(trace, "(g)").passed is False
