import pandas as pd

from njordan.schema.reports import (
    Corollary26Report,
    ExamplesReport,
    FunctionalReport,
    ImplicationReport,
    SearchReport,
    Step2Report,
    Theorem27Report,
)
from njordan.schema.trace import Trace

"""
This file is used to render reports as plain-text tables
It is used by every command when --json is not given
"""


def _table(rows: list[dict]) -> str:
    if not rows:
        return "(none)"
    return pd.DataFrame(rows).fillna("").to_string(index=False)


## Derivations

def trace_frame(trace: Trace) -> pd.DataFrame:
    return pd.DataFrame([step.model_dump() for step in trace.steps])


def trace_summary(trace: Trace) -> dict:
    df = trace_frame(trace)
    checked = df[df["kind"].isin(["AssertEquals", "Solve"])]
    return {
        "assertions": int(len(checked)),
        "passed": int(checked["passed"].fillna(False).astype(bool).sum()),
        "premises": int((df["kind"] == "Assume").sum()),
        "probes": int((df["kind"] == "Probe").sum()),
    }


def render_trace(trace: Trace) -> str:
    df = trace_frame(trace)
    shown = df[df["label"].notna() | df["kind"].isin(["Solve"])].copy()
    shown["result"] = shown["passed"].map({True: "ok", False: "FAILED"}).fillna("")
    shown["detail"] = shown["detail"].fillna("")
    lines = [
        f"script {trace.script} ({trace.mode}): {'passed' if trace.passed else 'FAILED'}",
        shown[["label", "kind", "identity", "result", "detail"]].fillna("").to_string(index=False),
        "",
        f"conclusion: {trace.conclusion}",
        f"denominators: {trace.denominators or 'none'}",
    ]
    if trace.premises:
        lines.append(f"conditional on premises: {', '.join(trace.premises)}")
    summary = trace_summary(trace)
    lines.append(f"{summary['passed']} of {summary['assertions']} checks passed")
    lines.extend(f"flag: {flag}" for flag in trace.flags)
    return "\n".join(lines)


## Finite models

def render_search(report: SearchReport) -> str:
    rows = []
    for found in report.found:
        row = {"map": found.map, "matrix": found.coordinates}
        row.update({k: "yes" if v else "no" for k, v in found.results.items()})
        rows.append(row)
    header = f"{report.predicate} on {report.domain} -> {report.codomain}, n={report.n} ({report.mode}): {len(report.found)} found"
    return header + "\n" + _table(rows)


def render_implication(report: ImplicationReport) -> str:
    return _table([report.model_dump(exclude={"first_counterexample"})]) + (
        f"\nfirst counterexample: {report.first_counterexample}" if report.first_counterexample else ""
    )


def render_examples(report: ExamplesReport) -> str:
    rows = []
    for section in report.sections:
        for key, value in section.facts.items():
            rows.append({"example": section.title[:48], "fact": key, "value": value})
    verdicts = _table([{"example": s.title, "ring": s.ring, "ok": "yes" if s.passed else "no"} for s in report.sections])
    notes = [f"note ({s.ring}): {s.note}" for s in report.sections if s.note]
    return "\n".join([verdicts, "", _table(rows), ""] + notes)


## Norm checks

def render_functionals(report: FunctionalReport) -> str:
    rows = [{"#": i, "functional": f} for i, f in enumerate(report.functionals)]
    return f"{report.n}-Jordan functionals on C^{report.m}: {report.count}\n" + _table(rows)


def render_corollary(report: Corollary26Report) -> str:
    lines = [
        f"C^{report.m} -> C^{report.k}: {report.maps_checked} involution preserving 3-Jordan maps, "
        f"max norm {report.max_norm:g}",
    ]
    if report.rejected:
        lines.append(_table([r.model_dump() for r in report.rejected]))
    return "\n".join(lines)


def render_theorem27(report: Theorem27Report) -> str:
    rows = [{"hypothesis": f.hypothesis, "passed": f.passed, "witness": f.witness or ""} for f in report.filters]
    lines = [f"{report.map}, k={report.k}: {'admitted' if report.admitted else 'excluded by hypotheses'}", _table(rows)]
    if report.admitted:
        lines.append(f"norm {report.norm:g}, slack min {report.min_slack:.3g} max {report.max_slack:.3g}")
    return "\n".join(lines)


def render_step2(report: Step2Report) -> str:
    return (
        f"step II reduction on {report.maps} random maps (n={report.n}, seed {report.seed}): "
        f"{report.agreed} agree, {report.jordan_maps} are {report.n}-Jordan"
    )
