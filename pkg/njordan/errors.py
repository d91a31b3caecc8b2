"""
This file holds the error types of the toolkit.
Every error carries an exit code and a detail message, the CLI maps them straight to the process exit status
"""


class NJordanError(Exception):
    exit_code = 2

    def __init__(self, detail: str):
        super().__init__(detail)
        self.detail = detail


## Input errors (exit 2)

class ParseError(NJordanError):

    def __init__(self, detail: str, position: int | None = None):
        if position is not None:
            detail = f"{detail} (at position {position})"
        super().__init__(detail)
        self.position = position


class UnknownVariableError(ParseError):
    pass


class ModeMismatchError(NJordanError):
    pass


class SubstitutionError(NJordanError):
    pass


class GuardError(NJordanError):
    pass


class DenominatorError(NJordanError):
    pass


class ModelError(NJordanError):
    pass


class ScriptError(NJordanError):
    pass


class CertificateFormatError(NJordanError):
    pass


## Verification outcomes (exit 1)

class VerificationFailure(NJordanError):
    exit_code = 1


class ContractivityViolation(VerificationFailure):
    pass
