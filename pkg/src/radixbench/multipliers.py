"""Wallace-tree multipliers for binary and ternary operands.

The multiplier has three parts: elementary digit products, a staged
reduction of the resulting dot rows down to two rows, and a final ripple
adder. In the ternary case each elementary product emits a product trit
plus a binary carry, so a width-w multiplier starts from 2w rows, and the
reduction mixes trit and bit dots; carries stay binary throughout.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from .cells import cell_spec
from .core import Radix, equivalent_trit_width, information_ratio
from .netlist import (
    Circuit,
    CircuitBuilder,
    OperandLayout,
    WordGroup,
    count_cells,
    eval_vectorized,
)

__all__ = [
    "Dot",
    "DotRow",
    "ReductionStep",
    "MultiplierSummary",
    "MultiplierBuild",
    "MultiplierComparison",
    "gen_partial_products",
    "reduce_wallace",
    "build_multiplier",
    "build_multiplier_detailed",
    "multiplier_layout",
    "multiplier_oracle",
    "multiplier_summary",
    "compare_multipliers",
    "dump_rows",
    "stage_value_sums",
    "HA_POLICIES",
]

#: Binary 2-dot columns: "eager" always spends a half adder, "lazy" lets
#: both dots fall through to the two result rows when the slot is free.
HA_POLICIES = ("eager", "lazy")


@dataclass(frozen=True)
class Dot:
    """One partial-product term: a net carrying a digit at a weight."""

    weight: int
    radix: int
    net: int


@dataclass(frozen=True)
class DotRow:
    """A row of dots, at most one per weight, ascending.

    Rows produced by the 2-bit-row half-adder rule mix trit and bit dots,
    so the radix lives on the dot; a row counts as ternary when any dot is.
    """

    dots: tuple[Dot, ...]

    def __post_init__(self) -> None:
        weights = [d.weight for d in self.dots]
        if sorted(set(weights)) != weights:
            raise ValueError("row must have unique ascending weights")

    @property
    def radix_class(self) -> int:
        return 3 if any(d.radix == 3 for d in self.dots) else 2

    def by_weight(self) -> dict[int, Dot]:
        return {d.weight: d for d in self.dots}


@dataclass(frozen=True)
class ReductionStep:
    stage_index: int
    rows_before: int
    rows_after: int
    fa_used: int
    ha_used: int


@dataclass(frozen=True)
class MultiplierSummary:
    """Cell tallies for one multiplier, split by phase."""

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
    stage_rows: tuple[int, ...]


@dataclass(frozen=True)
class MultiplierBuild:
    """A built multiplier plus the reduction trace behind it."""

    circuit: Circuit
    stages: tuple[tuple[DotRow, ...], ...]  # stages[0] = initial rows
    steps: tuple[ReductionStep, ...]
    summary: MultiplierSummary


@dataclass(frozen=True)
class MultiplierComparison:
    """Side-by-side tallies for an n-bit and its capability-matched trit multiplier."""

    n_bits: int
    m_trits: int
    binary: MultiplierSummary
    ternary: MultiplierSummary
    elementary_ratio: float
    equivalent_fa_ratio: float
    ir_squared: float


def gen_partial_products(
    builder: CircuitBuilder, radix: Radix | int, width: int
) -> list[DotRow]:
    """Create operand inputs on ``builder`` and emit all digit products.

    Binary: one row per multiplier digit, row j holding the AND terms at
    weights j..j+width-1. Ternary: each elementary product yields a trit
    at weight i+j and a binary carry at weight i+j+1, so row j expands to
    a trit row followed by its carry row.
    """
    if width < 1:
        raise ValueError("width must be >= 1")
    r = int(Radix(radix))
    a = [builder.input(f"a{i}", r) for i in range(width)]
    b = [builder.input(f"b{j}", r) for j in range(width)]
    rows: list[DotRow] = []
    for j in range(width):
        if r == 2:
            dots = []
            for i in range(width):
                (p,) = builder.cell("bit_mul", a[i], b[j])
                dots.append(Dot(i + j, 2, p))
            rows.append(DotRow(tuple(dots)))
        else:
            trits = []
            bits = []
            for i in range(width):
                p, c = builder.cell("trit_mul", a[i], b[j])
                trits.append(Dot(i + j, 3, p))
                bits.append(Dot(i + j + 1, 2, c))
            rows.append(DotRow(tuple(trits)))
            rows.append(DotRow(tuple(bits)))
    return rows


# --- column compression ---------------------------------------------------

_TERN_FA = {2: "tern_fa", 1: "tern_fa_tbb", 0: "tern_fa_bbb"}
_TERN_HA = {2: "tern_ha", 1: "tern_ha_tb", 0: "tern_ha_bb"}


def _compress_column(
    builder: CircuitBuilder, radix_op: int, dots: list[Dot]
) -> tuple[Dot, Dot | None, str]:
    """Apply one adder cell to 2 or 3 dots of equal weight.

    Returns (sum dot, carry dot or None, "fa"|"ha"). Inputs are ordered
    trits first to match the mixed-port cell specs.
    """
    w = dots[0].weight
    ordered = sorted(dots, key=lambda d: -d.radix)
    if radix_op == 2:
        kind = "bin_fa" if len(dots) == 3 else "bin_ha"
    else:
        trits = sum(1 for d in dots if d.radix == 3)
        if len(dots) == 3:
            kind = _TERN_FA[trits]
        else:
            kind = _TERN_HA[trits]
    outs = builder.cell(kind, *(d.net for d in ordered))
    spec = cell_spec(kind)
    s = Dot(w, int(spec.ports.outputs[0]), outs[0])
    carry = Dot(w + 1, 2, outs[1]) if len(outs) > 1 else None
    return s, carry, spec.counts_as or "fa"


def _reduce_group(
    builder: CircuitBuilder,
    group: list[DotRow],
    radix_op: int,
    ha_policy: str,
) -> tuple[list[DotRow], int, int]:
    """Compress one group of 2 or 3 rows into sum and carry rows."""
    maps = [row.by_weight() for row in group]
    weights = sorted(set(w for m in maps for w in m))
    sum_row: dict[int, Dot] = {}
    carry_row: dict[int, Dot] = {}
    fa = ha = 0
    for w in weights:
        dots = [m[w] for m in maps if w in m]
        if len(dots) == 1:
            sum_row[w] = dots[0]
            continue
        if (
            radix_op == 2
            and ha_policy == "lazy"
            and len(dots) == 2
            and w not in carry_row
        ):
            sum_row[w] = dots[0]
            carry_row[w] = dots[1]
            continue
        s, carry, tag = _compress_column(builder, radix_op, dots)
        sum_row[w] = s
        if carry is not None:
            carry_row[carry.weight] = carry
        if tag == "fa":
            fa += 1
        else:
            ha += 1
    out = []
    for acc in (sum_row, carry_row):
        if acc:
            out.append(DotRow(tuple(acc[w] for w in sorted(acc))))
    return out, fa, ha


def _group_binary(rows: list[DotRow]) -> tuple[list[list[DotRow]], list[DotRow]]:
    groups = [rows[i : i + 3] for i in range(0, len(rows) - 2, 3)]
    return groups, rows[3 * len(groups) :]


def _group_ternary(rows: list[DotRow]) -> tuple[list[list[DotRow]], list[DotRow]]:
    """Greedy grouping by row class, scanning top-down.

    Preference order: two ternary rows with one binary row, then one
    ternary row with two binary rows, then a pair of binary rows that a
    half adder alone turns into a single ternary row.
    """
    avail = list(rows)
    groups: list[list[DotRow]] = []

    def take(t_need: int, b_need: int) -> bool:
        t_idx = [i for i, r in enumerate(avail) if r.radix_class == 3]
        b_idx = [i for i, r in enumerate(avail) if r.radix_class == 2]
        if len(t_idx) < t_need or len(b_idx) < b_need:
            return False
        picked = sorted(t_idx[:t_need] + b_idx[:b_need])
        groups.append([avail[i] for i in picked])
        for i in reversed(picked):
            del avail[i]
        return True

    while take(2, 1) or take(1, 2) or take(0, 2):
        pass
    return groups, avail


def reduce_wallace(
    builder: CircuitBuilder,
    rows: list[DotRow],
    radix_op: Radix | int,
    ha_policy: str = "eager",
) -> tuple[tuple[DotRow, ...], tuple[ReductionStep, ...], tuple[tuple[DotRow, ...], ...]]:
    """Stage rows down to at most two, returning the final rows and trace.

    The returned stages tuple snapshots the rows before any reduction and
    after each stage; value over all dots is conserved at every snapshot.
    """
    if ha_policy not in HA_POLICIES:
        raise ValueError(f"ha_policy must be one of {HA_POLICIES}")
    r = int(Radix(radix_op))
    current = list(rows)
    stages = [tuple(current)]
    steps: list[ReductionStep] = []
    stage_index = 0
    while len(current) > 2:
        stage_index += 1
        if r == 2:
            groups, passes = _group_binary(current)
        else:
            groups, passes = _group_ternary(current)
        if not groups:
            raise ValueError(f"reduction stalled at {len(current)} rows")
        new_rows: list[DotRow] = []
        fa = ha = 0
        for g in groups:
            reduced, gfa, gha = _reduce_group(builder, g, r, ha_policy)
            new_rows.extend(reduced)
            fa += gfa
            ha += gha
        new_rows.extend(passes)
        steps.append(ReductionStep(stage_index, len(current), len(new_rows), fa, ha))
        current = new_rows
        stages.append(tuple(current))
    return tuple(current), tuple(steps), tuple(stages)


def _final_cpa(
    builder: CircuitBuilder,
    rows: tuple[DotRow, ...],
    radix_op: int,
    width: int,
) -> tuple[int, int]:
    """Ripple-add the last two rows into output digits p0..p(2*width-1).

    Dots above weight 2*width-1, and the top ripple carry, are provably
    zero (the product fits in 2*width digits) and are dropped; exhaustive
    verification confirms the dropping is sound.
    """
    maps = [row.by_weight() for row in rows]
    carry: Dot | None = None
    fa = ha = 0
    for w in range(2 * width):
        dots = [m[w] for m in maps if w in m]
        if carry is not None:
            dots.append(carry)
        carry = None
        if not dots:
            net = builder.const_zero(radix_op)
            builder.output(f"p{w}", net)
            continue
        if len(dots) == 1:
            builder.output(f"p{w}", dots[0].net)
            continue
        s, carry, tag = _compress_column(builder, radix_op, dots)
        builder.output(f"p{w}", s.net)
        if tag == "fa":
            fa += 1
        else:
            ha += 1
    return fa, ha


def build_multiplier_detailed(
    radix: Radix | int, width: int, ha_policy: str = "eager"
) -> MultiplierBuild:
    r = int(Radix(radix))
    builder = CircuitBuilder(f"mul r{r} w{width}")
    rows = gen_partial_products(builder, r, width)
    final_rows, steps, stages = reduce_wallace(builder, rows, r, ha_policy)
    final_fa, final_ha = _final_cpa(builder, final_rows, r, width)
    circuit = builder.build()
    reduction_fa = sum(s.fa_used for s in steps)
    reduction_ha = sum(s.ha_used for s in steps)
    total_fa = reduction_fa + final_fa
    total_ha = reduction_ha + final_ha
    summary = MultiplierSummary(
        radix=r,
        width=width,
        elementary_mul_count=width * width,
        reduction_fa=reduction_fa,
        reduction_ha=reduction_ha,
        final_fa=final_fa,
        final_ha=final_ha,
        total_fa=total_fa,
        total_ha=total_ha,
        equivalent_fa=total_fa + 0.5 * total_ha,
        stage_rows=tuple(len(s) for s in stages),
    )
    return MultiplierBuild(circuit=circuit, stages=stages, steps=steps, summary=summary)


def build_multiplier(radix: Radix | int, width: int, ha_policy: str = "eager") -> Circuit:
    return build_multiplier_detailed(radix, width, ha_policy).circuit


def multiplier_layout(radix: Radix | int, width: int) -> OperandLayout:
    r = int(Radix(radix))
    return OperandLayout(
        inputs=(
            WordGroup("a", tuple(f"a{i}" for i in range(width)), r),
            WordGroup("b", tuple(f"b{j}" for j in range(width)), r),
        ),
        outputs=(WordGroup("p", tuple(f"p{w}" for w in range(2 * width)), r),),
    )


def multiplier_oracle():
    def oracle(a, b):
        return (a * b,)

    return oracle


def multiplier_summary(
    radix: Radix | int, width: int, ha_policy: str = "eager"
) -> MultiplierSummary:
    return build_multiplier_detailed(radix, width, ha_policy).summary


def compare_multipliers(n_bits: int, ha_policy: str = "eager") -> MultiplierComparison:
    """Pair an n-bit multiplier with its equal-capability trit multiplier.

    The trit width is the half-up rounding of n/log2(3), which yields the
    published pairings 8/5, 12/8 and 16/10.
    """
    if n_bits < 2:
        raise ValueError("n_bits must be >= 2")
    m = equivalent_trit_width(n_bits)
    binary = multiplier_summary(2, n_bits, ha_policy)
    ternary = multiplier_summary(3, m)
    return MultiplierComparison(
        n_bits=n_bits,
        m_trits=m,
        binary=binary,
        ternary=ternary,
        elementary_ratio=(n_bits * n_bits) / (m * m),
        equivalent_fa_ratio=binary.equivalent_fa / ternary.equivalent_fa,
        ir_squared=information_ratio() ** 2,
    )


def dump_rows(rows: tuple[DotRow, ...] | list[DotRow]) -> str:
    """One line per row: class letter then the occupied weights."""
    lines = []
    for row in rows:
        letter = "T" if row.radix_class == 3 else "B"
        lines.append(letter + " " + " ".join(str(d.weight) for d in row.dots))
    return "\n".join(lines)


def stage_value_sums(build: MultiplierBuild, input_arrays) -> list[np.ndarray]:
    """Numeric value of the dot matrix at every stage snapshot.

    Feeds the given operand digit arrays through the circuit once and
    returns, per stage, sum(dot * radix_op^weight) as int64 arrays. Every
    entry must equal a*b for the reduction to be value-conserving.
    """
    nets = sorted({d.net for stage in build.stages for row in stage for d in row.dots})
    _, observed = eval_vectorized(build.circuit, input_arrays, observe=nets)
    base = build.summary.radix
    sums = []
    for stage in build.stages:
        total = None
        for row in stage:
            for d in row.dots:
                term = observed[d.net].astype(np.int64) * (base**d.weight)
                total = term if total is None else total + term
        if total is None:
            total = np.zeros(
                len(next(iter(input_arrays.values()))) if input_arrays else 0,
                dtype=np.int64,
            )
        sums.append(total)
    return sums
