from pydantic import BaseModel

"""
This class is used to store one replayed step
identity is the canonical text of the identity the step produced, label is set on assertions and premises
"""
class TraceStep(BaseModel):
    index: int
    name: str
    kind: str
    identity: str | None = None
    denominators: list[int] = []
    premises: list[str] = []
    label: str | None = None
    passed: bool | None = None
    note: str | None = None
    detail: str | None = None


"""
This class is used to store the trace of a replayed derivation script
It is used by the replay command, a trace with any failed assertion is failed overall
"""
class Trace(BaseModel):
    script: str
    mode: str
    passed: bool
    conclusion: str | None = None
    denominators: list[int] = []
    premises: list[str] = []
    flags: list[str] = []
    steps: list[TraceStep] = []
    wall_time: float | None = None
