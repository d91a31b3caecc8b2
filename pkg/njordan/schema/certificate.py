from pydantic import BaseModel, Field, field_validator

"""
This class is used to store one substitution instance of a certificate
subst maps the variables of the base identity (the seed variable "a", or a premise's variables) to linear expressions
"""
class CertificateInstance(BaseModel):
    subst: dict[str, str]
    coeff: str
    source: str = "seed"

    @field_validator("source")
    @classmethod
    def check_source(cls, value: str) -> str:
        if value != "seed" and not (value.startswith("premise:") and value[8:].isdigit()):
            raise ValueError(f"source must be 'seed' or 'premise:<i>', got {value!r}")
        return value


"""
This class is used to store a certificate: rational (or GF(p)) coefficients over substitution instances
It is used by the consequence command to write --cert files and by verify-cert to read them back
"""
class Certificate(BaseModel):
    n: int = Field(ge=2)
    mode: str = Field(pattern=r"^(nc|c)$")
    field: str = Field(pattern=r"^(Q|GF\(\d+\))$")
    target: str
    instances: list[CertificateInstance] = []
    premises: list[str] = []
