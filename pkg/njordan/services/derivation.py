"""
Derivation scripts and their replay.

A script is an ordered list of steps. Steps that produce an identity have a unique name; later
steps refer to earlier ones by that name. Assertions compare canonical forms and never stop the
replay: a failed assertion only marks the trace failed.
"""

import logging
import time
from dataclasses import dataclass, field
from fractions import Fraction
from typing import Union

from njordan.errors import NJordanError, ScriptError
from njordan.freealg import FreePoly, Mode, SubstitutionSpec, format_poly
from njordan.freealg.parser import RHS_HEAD
from njordan.schema.trace import Trace, TraceStep
from njordan.services.consequence import consequence_check, permutation_instances, solve_span
from njordan.services.identities import (
    HIdentity,
    as_premise,
    combine,
    format_identity,
    parse_identity,
    seed,
    substitute,
)

logger = logging.getLogger(__name__)


## Steps

@dataclass(frozen=True)
class Seed:
    name: str
    n: int
    mode: Mode | None = None


@dataclass(frozen=True)
class Substitute:
    name: str
    ref: str
    sigma: dict
    note: str | None = None


@dataclass(frozen=True)
class Combine:
    name: str
    terms: list[tuple[Union[int, str, Fraction], str]]
    note: str | None = None


@dataclass(frozen=True)
class AssertEquals:
    ref: str
    expected: str
    label: str
    note: str | None = None


@dataclass(frozen=True)
class Assume:
    name: str
    identity: str
    label: str
    note: str | None = None


@dataclass(frozen=True)
class Solve:
    name: str
    refs: list[str]
    target: str
    relabel: bool = True
    note: str | None = None


@dataclass(frozen=True)
class Probe:
    target: str
    label: str
    coeff_range: int = 1
    note: str | None = None


Step = Union[Seed, Substitute, Combine, AssertEquals, Assume, Solve, Probe]


@dataclass(frozen=True)
class DerivationScript:
    name: str
    mode: Mode
    steps: list[Step]
    conclusion: str
    description: str = ""
    flags: list[str] = field(default_factory=list)


## Validation

def _refs(step: Step) -> list[str]:
    if isinstance(step, (Substitute, AssertEquals)):
        return [step.ref]
    if isinstance(step, Combine):
        return [ref for _, ref in step.terms]
    if isinstance(step, Solve):
        return list(step.refs)
    return []


def validate_script(script: DerivationScript):
    defined: set[str] = set()
    labels: set[str] = set()
    for i, step in enumerate(script.steps):
        for ref in _refs(step):
            if ref not in defined:
                raise ScriptError(f"{script.name}: step {i} refers to {ref!r}, which is not defined before it")
        if isinstance(step, (AssertEquals, Assume, Probe)):
            if step.label in labels:
                raise ScriptError(f"{script.name}: label {step.label} is used twice")
            labels.add(step.label)
        name = getattr(step, "name", None)
        if name is not None:
            if name in defined:
                raise ScriptError(f"{script.name}: step name {name!r} is defined twice")
            defined.add(name)
    if script.conclusion not in defined:
        raise ScriptError(f"{script.name}: conclusion {script.conclusion!r} is not a step")


## Replay

def first_divergence(actual: HIdentity, expected: HIdentity) -> str | None:
    for side, got, want, head in (
        ("lhs", actual.lhs, expected.lhs, None),
        ("rhs", actual.rhs, expected.rhs, RHS_HEAD),
    ):
        diff = got - want
        if diff.is_zero():
            continue
        word = diff.terms[0][0]
        monomial = format_poly(FreePoly.monomial(word, 1, diff.mode), head)
        return f"{side} term {monomial}: got {got.coeff(word)}, expected {want.coeff(word)}"
    return None


def _step_record(index: int, step: Step, identity: HIdentity | None, **extra) -> TraceStep:
    record = TraceStep(
        index=index,
        name=getattr(step, "name", None) or f"{type(step).__name__.lower()}:{getattr(step, 'label', index)}",
        kind=type(step).__name__,
        note=getattr(step, "note", None),
        **extra,
    )
    if identity is not None:
        record.identity = format_identity(identity)
        record.denominators = sorted(identity.denominators)
        record.premises = sorted(identity.premises)
    return record


def _run_probe(step: Probe, env: dict[str, HIdentity], mode: Mode) -> tuple[HIdentity, str]:
    identity = env[step.target] if step.target in env else parse_identity(step.target, mode)
    result = consequence_check(
        identity.lhs.degree(), identity, identity.variables(), step.coeff_range
    )
    outcome = f"{result.verdict} (rank {result.rank} of {result.instance_count} instances)"
    if result.symmetry_obstruction:
        outcome += f"; {result.symmetry_obstruction}"
    return identity, outcome


def replay(script: DerivationScript, timings: bool = False) -> Trace:
    validate_script(script)
    started = time.perf_counter()
    mode = script.mode
    env: dict[str, HIdentity] = {}
    records: list[TraceStep] = []
    passed = True
    # names bound to a target some Solve step could not reach, and everything built from them
    unproven: set[str] = set()

    for i, step in enumerate(script.steps):
        try:
            if isinstance(step, Seed):
                env[step.name] = seed(step.n, step.mode or mode)
                records.append(_step_record(i, step, env[step.name]))

            elif isinstance(step, Substitute):
                env[step.name] = substitute(env[step.ref], SubstitutionSpec.of(step.sigma))
                if step.ref in unproven:
                    unproven.add(step.name)
                records.append(_step_record(i, step, env[step.name]))

            elif isinstance(step, Combine):
                env[step.name] = combine([(Fraction(c), env[ref]) for c, ref in step.terms])
                if any(ref in unproven for _, ref in step.terms):
                    unproven.add(step.name)
                records.append(_step_record(i, step, env[step.name]))

            elif isinstance(step, Assume):
                env[step.name] = as_premise(parse_identity(step.identity, mode), step.label)
                records.append(_step_record(i, step, env[step.name], label=step.label))

            elif isinstance(step, AssertEquals):
                actual = env[step.ref]
                detail = first_divergence(actual, parse_identity(step.expected, mode))
                if step.ref in unproven:
                    detail = f"{step.ref} rests on a failed Solve step"
                ok = detail is None
                passed &= ok
                if not ok:
                    logger.warning("%s %s failed: %s", script.name, step.label, detail)
                records.append(_step_record(i, step, actual, label=step.label, passed=ok, detail=detail))

            elif isinstance(step, Solve):
                generators = []
                for ref in step.refs:
                    generators.extend(permutation_instances(env[ref]) if step.relabel else [env[ref]])
                target = parse_identity(step.target, mode)
                result = solve_span(generators, target)
                if result.coefficients is None:
                    passed = False
                    env[step.name] = target
                    unproven.add(step.name)
                    detail = f"not in the span (rank {result.rank}), residual {format_identity(result.residual)}"
                    records.append(_step_record(i, step, None, passed=False, detail=detail))
                else:
                    solved = combine([(c, g) for c, g in zip(result.coefficients, generators) if c != 0])
                    env[step.name] = solved
                    if any(ref in unproven for ref in step.refs):
                        unproven.add(step.name)
                    ok = solved.same_statement(target)
                    passed &= ok
                    records.append(_step_record(
                        i, step, solved, passed=ok,
                        detail=f"combination of {sum(1 for c in result.coefficients if c)} of {len(generators)} generators",
                    ))

            elif isinstance(step, Probe):
                identity, outcome = _run_probe(step, env, mode)
                records.append(_step_record(i, step, identity, label=step.label, detail=outcome))

            else:
                raise ScriptError(f"Unknown step type {type(step).__name__}")

        except ScriptError:
            raise
        except NJordanError as exc:
            raise ScriptError(f"{script.name}: step {i} ({type(step).__name__}) failed: {exc.detail}") from exc

    conclusion = env[script.conclusion]
    trace = Trace(
        script=script.name,
        mode=mode.value,
        passed=passed,
        conclusion=format_identity(conclusion),
        denominators=sorted(conclusion.denominators),
        premises=sorted(conclusion.premises),
        flags=list(script.flags),
        steps=records,
    )
    if timings:
        trace.wall_time = round(time.perf_counter() - started, 6)
    return trace
