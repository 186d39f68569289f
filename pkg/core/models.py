# Pydantic models for verdicts, reports and run configuration
from enum import StrEnum
from pathlib import Path
from typing import Optional

from pydantic import BaseModel, Field, field_validator, model_validator

from config import OutputFormat


class Status(StrEnum):
    PASS = "pass"
    FAIL = "fail"
    NOT_APPLICABLE = "not_applicable"


class InstanceResult(BaseModel):
    """One algebra checked by a verifier"""

    algebra: str = Field(..., description="Name of the algebra or split algebra")
    computed: dict[str, int | list[int]] = Field(default_factory=dict, description="Integers computed directly")
    expected: dict[str, int | list[int]] = Field(
        default_factory=dict, description="Integers predicted by the statement being checked"
    )
    status: Status = Field(..., description="pass, fail, or not_applicable when a hypothesis is not met")
    note: Optional[str] = Field(None, description="Why an instance was skipped or failed")

    @property
    def passed(self) -> bool:
        return self.status != Status.FAIL


class Verdict(BaseModel):
    """Structured outcome of one theorem verifier"""

    theorem_id: str = Field(..., description="Registered verifier identifier")
    title: str = Field("", description="Statement being checked")
    instances: list[InstanceResult] = Field(default_factory=list)
    seed: int = Field(0, description="Seed of randomized checks")
    max_degree: Optional[int] = Field(None, description="Degree cap used, when one applies")

    @property
    def overall(self) -> bool:
        return all(i.passed for i in self.instances) and any(i.status == Status.PASS for i in self.instances)

    def summary(self) -> dict:
        data = self.model_dump(mode="json")
        data["overall"] = self.overall
        return data


class LESNode(BaseModel):
    """A term of the long exact sequence with its incoming and outgoing ranks"""

    label: str
    degree: int = Field(..., ge=0)
    dim: int = Field(..., ge=0)
    rank_in: int = Field(..., ge=0)
    rank_out: int = Field(..., ge=0)

    @property
    def exact(self) -> bool:
        return self.dim == self.rank_in + self.rank_out


class BidegreeBlock(BaseModel):
    p: int = Field(..., ge=0)
    q: int = Field(..., ge=0)
    rank: int = Field(..., ge=0)


class CenterReport(BaseModel):
    """The center of Λ split along A ⊕ M"""

    center: int
    base_part: int = Field(..., description="dim of A^A ∩ A^M")
    ideal_part: int = Field(..., description="dim of M^M ∩ M^A")
    kernel_delta0: int = Field(..., description="dim of the kernel of δ⁰")

    @property
    def consistent(self) -> bool:
        return self.center == self.base_part + self.ideal_part and self.kernel_delta0 == self.base_part


class LESReport(BaseModel):
    """H^n(Λ,M) -> H^n(Λ,Λ) -> H^n(Λ,Λ/M) -> H^{n+1}(Λ,M) up to a degree"""

    algebra: str
    max_degree: int
    sub: list[int]
    middle: list[int]
    quotient: list[int]
    inclusion_ranks: list[int]
    projection_ranks: list[int]
    connecting_ranks: list[int]
    nodes: list[LESNode]
    blocks: dict[int, list[BidegreeBlock]] = Field(default_factory=dict)
    center: Optional[CenterReport] = None

    @property
    def exact(self) -> bool:
        return all(node.exact for node in self.nodes)


class CohomologyReport(BaseModel):
    algebra: str
    coefficients: str
    field: str
    kind: str = Field("cohomology", description="cohomology, homology or ext")
    dims: list[int]
    max_degree: int
    seed: int = 0


class DoubleComplexReport(BaseModel):
    algebra: str
    coefficients: str
    field: str
    max_degree: int
    columns: dict[str, int] = Field(..., description="dim H^q(C^p(X)) keyed by 'p,q'")
    total: list[int]
    horizontal_zero: Status
    blocks: dict[int, list[BidegreeBlock]] = Field(default_factory=dict)
    seed: int = 0


class RunConfig(BaseModel):
    """Validated command-line options shared by every subcommand"""

    command: str
    inputs: list[Path] = Field(default_factory=list)
    field: Optional[str] = Field(None, pattern=r"^(Q|Fp:\d+)$")
    max_degree: int = Field(..., ge=1)
    seed: int = 0
    output_format: OutputFormat = OutputFormat.TEXT

    @field_validator("inputs")
    @classmethod
    def _exists(cls, paths: list[Path]) -> list[Path]:
        for path in paths:
            if not path.is_file():
                raise ValueError(f"input file {path} does not exist")
        return paths

    @model_validator(mode="after")
    def _has_input(self) -> "RunConfig":
        if self.command != "verify" and not self.inputs:
            raise ValueError(f"{self.command} needs an input algebra")
        return self
