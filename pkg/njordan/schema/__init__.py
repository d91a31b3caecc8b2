from njordan.schema.certificate import Certificate, CertificateInstance
from njordan.schema.reports import (
    ConsequenceReport,
    Corollary26Report,
    ExampleSection,
    ExamplesReport,
    FilterVerdict,
    FunctionalReport,
    ImplicationReport,
    PredicateReport,
    RejectedMap,
    SearchReport,
    Step2Report,
    Theorem27Report,
)
from njordan.schema.trace import Trace, TraceStep
