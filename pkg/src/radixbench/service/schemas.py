"""Request and response models shared by the HTTP service and the CLI.

Every response carries render-ready table blocks alongside the structured
fields, so Markdown and CSV output are identical whether a command runs
in-process or against a remote server.
"""

from __future__ import annotations

from typing import Literal

from pydantic import BaseModel, Field, model_validator

from ..netlist import DEFAULT_EXHAUSTIVE_CAP, DEFAULT_SAMPLES

PresetName = Literal["conventional", "tg16", "tg14", "compact8", "capacitive"]


class TableBlock(BaseModel):
    title: str
    headers: list[str]
    rows: list[list[str]]
    notes: list[str] = []


class CircuitSelector(BaseModel):
    """Which circuit a command operates on: an adder arch or a multiplier."""

    radix: Literal[2, 3]
    width: int = Field(ge=1, le=64)
    mul: bool = False
    arch: Literal["cpa", "cla", "csa"] | None = None
    block: int | None = Field(default=None, ge=2, le=5)
    ha_policy: Literal["eager", "lazy"] = "eager"

    @model_validator(mode="after")
    def _consistent(self) -> "CircuitSelector":
        if self.mul and self.arch is not None:
            raise ValueError("choose an adder architecture or --mul, not both")
        if not self.mul and self.arch is None:
            self.arch = "cpa"
        if self.arch == "cpa" and self.block is not None:
            raise ValueError("the ripple adder takes no block size")
        if self.mul and self.block is not None:
            raise ValueError("multipliers take no block size")
        return self


class VerifyRequest(CircuitSelector):
    cap: int = Field(default=DEFAULT_EXHAUSTIVE_CAP, ge=1)
    samples: int = Field(default=DEFAULT_SAMPLES, ge=1)
    seed: int = 0


class VerifyResponse(BaseModel):
    circuit: str
    mode: Literal["exhaustive", "sampled"]
    vectors: int
    passed: bool
    counterexample: dict | None = None
    blocks: list[TableBlock]


class MultiplierSummaryModel(BaseModel):
    radix: int
    width: int
    elementary_mul_count: int
    reduction_fa: int
    reduction_ha: int
    final_fa: int
    final_ha: int
    total_fa: int
    total_ha: int
    equivalent_fa: float
    stage_rows: list[int]


class AdderSummaryModel(BaseModel):
    arch: str
    radix: int
    width: int
    fa_count: int
    aux_gate_counts: dict[str, int]
    carry_block_count: int


class CountsRequest(CircuitSelector):
    pass


class CountsResponse(BaseModel):
    cell_counts: dict[str, int]
    multiplier: MultiplierSummaryModel | None = None
    adder: AdderSummaryModel | None = None
    blocks: list[TableBlock]


class CostRequest(CircuitSelector):
    preset: PresetName = "conventional"


class CostItemModel(BaseModel):
    kind: str
    count: int
    unit: int
    subtotal: int


class CostResponse(BaseModel):
    preset: str
    total: int
    items: list[CostItemModel]
    blocks: list[TableBlock]


class CompareRequest(BaseModel):
    bits: int = Field(ge=2, le=64)
    preset: PresetName = "conventional"
    ha_policy: Literal["eager", "lazy"] = "eager"


class DiscrepancyModel(BaseModel):
    key: str
    printed: str
    computed: str
    note: str


class CompareResponse(BaseModel):
    bits: int
    wire_trits: int
    mul_trits: int
    preset: str
    ha_policy: str
    discrepancies: list[DiscrepancyModel]
    blocks: list[TableBlock]


class TableResponse(BaseModel):
    table_id: str
    title: str
    headers: list[str]
    rows: list[list[str]]
    notes: list[str]
    blocks: list[TableBlock]


class HealthResponse(BaseModel):
    status: str
    version: str
