"""Pydantic request/response models for the classification service.

These are the wire contract: field names and order are fixed so report
JSON stays diffable, and `ReportDocument` round-trips losslessly
through its JSON form.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field

from ..balance import BalanceReport

GraphFormat = Literal["g6", "edgelist"]


class GraphPayload(BaseModel):
    """A graph shipped as text in one of the supported formats."""

    format: GraphFormat = "g6"
    text: str


class GraphResponse(BaseModel):
    format: GraphFormat
    text: str
    n: int
    m: int


class GenerateRequest(BaseModel):
    family: str
    params: list[int] = Field(default_factory=list)
    format: GraphFormat = "g6"


class CheckRequest(BaseModel):
    graph: GraphPayload
    source: str = "inline"


class SdbWitness(BaseModel):
    u: int
    v: int
    level: int


class BalanceReportModel(BaseModel):
    """JSON form of `balance.BalanceReport` (same field order)."""

    is_db: bool
    is_ndb: bool
    gamma: int | None = None
    is_sdb: bool
    diameter: int
    bipartite: bool
    regular_valency: int | None = None
    db_witness: tuple[int, int] | None = None
    sdb_witness: SdbWitness | None = None
    conjecture_holds: bool
    n: int
    m: int

    @classmethod
    def from_report(cls, rep: BalanceReport) -> "BalanceReportModel":
        witness = None
        if rep.sdb_witness is not None:
            (u, v), level = rep.sdb_witness
            witness = SdbWitness(u=u, v=v, level=level)
        return cls(
            is_db=rep.is_db,
            is_ndb=rep.is_ndb,
            gamma=rep.gamma,
            is_sdb=rep.is_sdb,
            diameter=rep.diameter,
            bipartite=rep.bipartite,
            regular_valency=rep.regular_valency,
            db_witness=rep.db_witness,
            sdb_witness=witness,
            conjecture_holds=rep.conjecture_holds,
            n=rep.n,
            m=rep.m,
        )


class ReportDocument(BaseModel):
    """A classification report plus provenance."""

    report: BalanceReportModel
    source: str
    tool_version: str
    wall_time_ms: float


class ProductRequest(BaseModel):
    op: Literal["cartesian", "lex", "line"]
    a: GraphPayload
    b: GraphPayload | None = None
    format: GraphFormat = "g6"


class OracleDiffRequest(BaseModel):
    count: int = 1000
    max_n: int = 8
    seed: int = 42


class Disagreement(BaseModel):
    index: int
    graph6: str
    fast: tuple[bool, bool, int | None, bool]
    oracle: tuple[bool, bool, int | None, bool]


class OracleDiffResponse(BaseModel):
    cases: int
    seed: int
    disagreements: list[Disagreement]


class BenchRequest(BaseModel):
    k_values: list[int] = Field(default_factory=list)
    repeats: int = 3


class BenchRow(BaseModel):
    k: int
    n: int
    m: int
    seconds: float
    ratio: float  # seconds / (m * n)


class BenchResponse(BaseModel):
    rows: list[BenchRow]
