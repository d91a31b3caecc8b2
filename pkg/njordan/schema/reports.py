from pydantic import BaseModel

"""
This file holds the report models written by the CLI
Every report is plain data so `model_dump_json` gives byte-stable output
"""


## Finite models

"""
This class is used to store the predicate verdicts of one additive map
witnesses are coordinate vectors (an element, or a list of elements for a product)
"""
class PredicateReport(BaseModel):
    map: str
    domain: str
    codomain: str
    coordinates: list[int]
    results: dict[str, bool]
    witnesses: dict[str, list] = {}


class ImplicationReport(BaseModel):
    domain: str
    codomain: str
    n: int
    maps: int
    jordan_maps: int
    ring_maps: int
    counterexamples: int
    ring_not_jordan: int
    first_counterexample: list[int] | None = None


class SearchReport(BaseModel):
    domain: str
    codomain: str
    n: int
    predicate: str
    mode: str
    seed: int | None = None
    found: list[PredicateReport] = []


"""
This class is used to store one reproduced example
note says which finite surrogate stands in for the real or complex algebra
"""
class ExampleSection(BaseModel):
    title: str
    ring: str
    note: str | None = None
    passed: bool
    facts: dict[str, bool | int | str | list | None] = {}


class ExamplesReport(BaseModel):
    passed: bool
    seed: int
    sections: list[ExampleSection] = []


## Consequence checks

class ConsequenceReport(BaseModel):
    verdict: str
    n: int
    mode: str
    field: str
    target: str
    instances: int
    rank: int
    residual: str | None = None
    symmetry_obstruction: str | None = None
    certificate_path: str | None = None


## Norm checks

class FunctionalReport(BaseModel):
    m: int
    n: int
    count: int
    functionals: list[str]


class RejectedMap(BaseModel):
    map: str
    reason: str
    witness: list[str] | None = None


class Corollary26Report(BaseModel):
    m: int
    k: int
    functionals_per_component: int
    maps_checked: int
    max_norm: float
    rejected: list[RejectedMap] = []
    violations: list[str] = []
    samples: int
    seed: int


class FilterVerdict(BaseModel):
    hypothesis: str
    passed: bool
    witness: list[str] | None = None


class Theorem27Report(BaseModel):
    map: str
    k: int
    admitted: bool
    filters: list[FilterVerdict]
    norm: float | None = None
    min_slack: float | None = None
    max_slack: float | None = None
    samples: int
    seed: int


class Step2Report(BaseModel):
    maps: int
    n: int
    agreed: int
    jordan_maps: int
    samples: int
    seed: int
