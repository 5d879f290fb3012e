"""Transistor-count pricing of cells and carry circuitry.

Unit costs come from published CNTFET cell figures. Presets select the
binary full-adder realization (conventional CMOS, transmission-gate, the
8-transistor XOR scheme, or capacitive threshold inputs) and the matching
ternary full adder. Everything else is a flat per-kind price; aggregation
is a plain weighted sum over cell counts.
"""

from __future__ import annotations

import json
import math
from dataclasses import dataclass
from typing import Mapping

from .adders import default_block
from .cells import and_kind, carry_kind
from .core import Radix

__all__ = [
    "UncostedCellError",
    "CostPreset",
    "CostTable",
    "PRESETS",
    "DEFAULT_PRESET",
    "CARRY_EQN_COST",
    "builtin_cost_table",
    "circuit_cost",
    "ClaBlockCost",
    "ClaCarryReport",
    "CsaBlockCost",
    "CsaSkipReport",
    "cla_carry_cost",
    "csa_skip_cost",
    "ratio_report",
    "format_ratio",
]


class UncostedCellError(ValueError):
    """A circuit uses a cell kind the cost table does not price."""


@dataclass(frozen=True)
class CostPreset:
    """One full-adder realization per radix, with its half-adder price."""

    name: str
    binary_fa: int
    ternary_fa: int
    ternary_ha: int

    @property
    def binary_ha(self) -> int:
        # no published binary HA figure; priced at half an FA, rounded up
        return math.ceil(self.binary_fa / 2)


PRESETS: dict[str, CostPreset] = {
    "conventional": CostPreset("conventional", 28, 124, 66),
    "tg16": CostPreset("tg16", 16, 124, 66),
    "tg14": CostPreset("tg14", 14, 124, 66),
    "compact8": CostPreset("compact8", 8, 124, 66),
    # capacitive threshold-input adders; the ternary HA is half of 27, up
    "capacitive": CostPreset("capacitive", 11, 27, 14),
}

DEFAULT_PRESET = "conventional"

#: Two-level sum-of-products carry equations C1..C5, binary in both radices.
CARRY_EQN_COST = (10, 18, 28, 40, 54)


@dataclass(frozen=True)
class CostTable:
    """Per-kind transistor prices; lookups on unknown kinds fail loudly."""

    name: str
    entries: dict[str, int]

    def cost(self, kind: str) -> int:
        try:
            return self.entries[kind]
        except KeyError:
            raise UncostedCellError(
                f"cost table {self.name!r} has no entry for cell kind {kind!r}"
            ) from None

    def to_json(self) -> str:
        return json.dumps(
            {"name": self.name, "entries": dict(sorted(self.entries.items()))},
            indent=2,
        )

    @classmethod
    def from_json(cls, text: str) -> "CostTable":
        doc = json.loads(text)
        entries = {str(k): int(v) for k, v in doc["entries"].items()}
        for kind, cost in entries.items():
            if cost < 0:
                raise ValueError(f"negative cost for {kind!r}")
        return cls(name=doc["name"], entries=entries)


def builtin_cost_table(preset: str | CostPreset = DEFAULT_PRESET) -> CostTable:
    """Cost table for one preset.

    The mixed-port ternary adder variants are priced at the full T-FA and
    T-HA figures: the published tallies count every reduction cell as a
    T-FA or T-HA regardless of how many of its inputs are binary.
    """
    p = PRESETS[preset] if isinstance(preset, str) else preset
    entries: dict[str, int] = {
        "bin_fa": p.binary_fa,
        "bin_ha": p.binary_ha,
        "tern_fa": p.ternary_fa,
        "tern_fa_tbb": p.ternary_fa,
        "tern_fa_bbb": p.ternary_fa,
        "tern_ha": p.ternary_ha,
        "tern_ha_tb": p.ternary_ha,
        "tern_ha_bb": p.ternary_ha,
        "bit_mul": 6,
        "trit_mul": 38,
        "bin_gen": 6,
        "bin_prop": 6,
        "tern_gen": 16,
        "tern_prop": 18,
        "mux2": 14,
        "const0_b": 0,
        "const0_t": 0,
    }
    for k, cost in enumerate(CARRY_EQN_COST, start=1):
        entries[carry_kind(k)] = cost
    for n in range(2, 9):
        # n-input AND as an n-input Nand plus an inverter
        entries[and_kind(n)] = 2 * n + 2
    return CostTable(name=p.name, entries=entries)


def circuit_cost(counts: Mapping[str, int], table: CostTable) -> int:
    """Weighted sum of cell counts; every kind present must be priced."""
    total = 0
    for kind, n in counts.items():
        total += n * table.cost(kind)
    return total


@dataclass(frozen=True)
class ClaBlockCost:
    digits: int
    gi: int
    pi: int
    carries: tuple[int, ...]

    @property
    def total(self) -> int:
        return self.gi + self.pi + sum(self.carries)


@dataclass(frozen=True)
class ClaCarryReport:
    radix: int
    width: int
    block: int
    blocks: tuple[ClaBlockCost, ...]

    @property
    def total(self) -> int:
        return sum(b.total for b in self.blocks)


@dataclass(frozen=True)
class CsaBlockCost:
    digits: int
    pi: int
    and_gate: int
    mux: int

    @property
    def total(self) -> int:
        return self.pi + self.and_gate + self.mux


@dataclass(frozen=True)
class CsaSkipReport:
    radix: int
    width: int
    block: int
    blocks: tuple[CsaBlockCost, ...]

    @property
    def total(self) -> int:
        return sum(b.total for b in self.blocks)


def _block_sizes(width: int, block: int) -> list[int]:
    sizes = [block] * (width // block)
    if width % block:
        sizes.append(width % block)
    return sizes


def cla_carry_cost(
    radix: Radix | int,
    width: int,
    block: int | None = None,
    table: CostTable | None = None,
) -> ClaCarryReport:
    """Carry-circuit cost of a lookahead adder, per block and in total."""
    r = int(Radix(radix))
    if width < 1:
        raise ValueError("width must be >= 1")
    if block is None:
        block = default_block(r)
    if table is None:
        table = builtin_cost_table()
    gen = "bin_gen" if r == 2 else "tern_gen"
    prop = "bin_prop" if r == 2 else "tern_prop"
    blocks = []
    for k in _block_sizes(width, block):
        blocks.append(
            ClaBlockCost(
                digits=k,
                gi=k * table.cost(gen),
                pi=k * table.cost(prop),
                carries=tuple(table.cost(carry_kind(j)) for j in range(1, k + 1)),
            )
        )
    return ClaCarryReport(radix=r, width=width, block=block, blocks=tuple(blocks))


def csa_skip_cost(
    radix: Radix | int,
    width: int,
    block: int | None = None,
    table: CostTable | None = None,
) -> CsaSkipReport:
    """Skip-circuit cost of a carry-skip adder, per block and in total."""
    r = int(Radix(radix))
    if width < 1:
        raise ValueError("width must be >= 1")
    if block is None:
        block = default_block(r)
    if table is None:
        table = builtin_cost_table()
    prop = "bin_prop" if r == 2 else "tern_prop"
    blocks = []
    for k in _block_sizes(width, block):
        blocks.append(
            CsaBlockCost(
                digits=k,
                pi=k * table.cost(prop),
                and_gate=table.cost(and_kind(k)) if k >= 2 else 0,
                mux=table.cost("mux2"),
            )
        )
    return CsaSkipReport(radix=r, width=width, block=block, blocks=tuple(blocks))


def ratio_report(ternary_total: float, binary_total: float) -> float:
    """Ternary-over-binary quotient at full precision."""
    if binary_total <= 0:
        raise ValueError("binary total must be positive")
    return ternary_total / binary_total


def format_ratio(value: float, decimals: int = 1) -> str:
    """Fixed-point display with decimal half-up rounding.

    Uses decimal rounding of the shortest repr so values like 1.3375
    display as 1.34 rather than falling to the binary representation's
    side of the tie.
    """
    from decimal import ROUND_HALF_UP, Decimal

    q = Decimal(1).scaleb(-decimals)
    return str(Decimal(repr(float(value))).quantize(q, rounding=ROUND_HALF_UP))
