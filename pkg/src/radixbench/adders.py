"""Builders for ripple, lookahead and skip adders in both radices.

All three architectures add two width-digit words plus a carry-in bit and
produce a width-digit sum plus a carry-out bit. The carry nets are binary
even in the ternary adders. The lookahead and skip variants keep the same
full-adder count as the ripple adder; they only add carry circuitry.
"""

from __future__ import annotations

from collections import Counter
from dataclasses import dataclass

from .cells import and_kind, carry_kind, cell_spec
from .core import Radix
from .netlist import Circuit, CircuitBuilder, OperandLayout, WordGroup, count_cells

__all__ = [
    "MIN_BLOCK",
    "MAX_BLOCK",
    "AdderArch",
    "AdderSummary",
    "adder_layout",
    "adder_oracle",
    "build_cpa",
    "build_cla",
    "build_csa",
    "build_adder",
    "adder_summary",
    "default_block",
]

MIN_BLOCK = 2
MAX_BLOCK = 5


@dataclass(frozen=True)
class AdderArch:
    """Adder architecture selector: ripple, lookahead or skip blocks."""

    name: str  # "cpa" | "cla" | "csa"
    block: int | None = None

    def __post_init__(self) -> None:
        if self.name not in ("cpa", "cla", "csa"):
            raise ValueError(f"unknown adder architecture {self.name!r}")
        if self.name == "cpa":
            if self.block is not None:
                raise ValueError("cpa takes no block size")
        elif self.block is not None and not MIN_BLOCK <= self.block <= MAX_BLOCK:
            raise ValueError(f"block size must be in [{MIN_BLOCK}, {MAX_BLOCK}]")

    def __str__(self) -> str:
        if self.block is None:
            return self.name
        return f"{self.name}/{self.block}"


@dataclass(frozen=True)
class AdderSummary:
    """Cell-count view of a built adder."""

    arch: str
    radix: int
    width: int
    fa_count: int
    aux_gate_counts: dict[str, int]
    carry_block_count: int


def default_block(radix: Radix | int) -> int:
    """Block size used when none is given: 4 for binary, 5 for ternary.

    These are the only block sizes the reference comparisons exercise
    (two 4-bit blocks against one 5-trit block).
    """
    return 4 if int(radix) == 2 else 5


def adder_layout(radix: Radix | int, width: int) -> OperandLayout:
    r = int(Radix(radix))
    return OperandLayout(
        inputs=(
            WordGroup("a", tuple(f"a{i}" for i in range(width)), r),
            WordGroup("b", tuple(f"b{i}" for i in range(width)), r),
            WordGroup("cin", ("cin",), 2),
        ),
        outputs=(
            WordGroup("s", tuple(f"s{i}" for i in range(width)), r),
            WordGroup("cout", ("cout",), 2),
        ),
    )


def adder_oracle(radix: Radix | int, width: int):
    """Integer reference: (a, b, cin) -> (sum digits value, carry out)."""
    modulus = int(radix) ** width

    def oracle(a, b, cin):
        total = a + b + cin
        return total % modulus, total // modulus

    return oracle


def _fa_kind(radix: int) -> str:
    return "bin_fa" if radix == 2 else "tern_fa"


def _gp_kinds(radix: int) -> tuple[str, str]:
    return ("bin_gen", "bin_prop") if radix == 2 else ("tern_gen", "tern_prop")


def _operand_nets(builder: CircuitBuilder, radix: int, width: int):
    a = [builder.input(f"a{i}", radix) for i in range(width)]
    b = [builder.input(f"b{i}", radix) for i in range(width)]
    cin = builder.input("cin", 2)
    return a, b, cin


def _check_width(width: int) -> None:
    if width < 1:
        raise ValueError("width must be >= 1")


def _blocks(width: int, block: int) -> list[range]:
    # last block absorbs the remainder as a smaller block
    return [range(lo, min(lo + block, width)) for lo in range(0, width, block)]


def build_cpa(radix: Radix | int, width: int) -> Circuit:
    """Ripple adder: a chain of full adders linked by their carries."""
    _check_width(width)
    r = int(Radix(radix))
    builder = CircuitBuilder(f"cpa r{r} w{width}")
    a, b, carry = _operand_nets(builder, r, width)
    for i in range(width):
        s, carry = builder.cell(_fa_kind(r), a[i], b[i], carry)
        builder.output(f"s{i}", s)
    builder.output("cout", carry)
    return builder.build()


def build_cla(radix: Radix | int, width: int, block: int | None = None) -> Circuit:
    """Lookahead adder: per-block carries from generate/propagate equations.

    Each block computes its internal carries C1..Ck as two-level
    sum-of-products cells fed by per-digit generate and propagate signals;
    the top carry of one block ripples into the next. The full adders take
    these lookahead carries; their own carry outputs are left unused.
    """
    _check_width(width)
    r = int(Radix(radix))
    if block is None:
        block = default_block(r)
    if not MIN_BLOCK <= block <= MAX_BLOCK:
        raise ValueError(f"block size must be in [{MIN_BLOCK}, {MAX_BLOCK}]")
    gen_kind, prop_kind = _gp_kinds(r)
    builder = CircuitBuilder(f"cla r{r} w{width} b{block}")
    a, b, carry = _operand_nets(builder, r, width)
    for digits in _blocks(width, block):
        gs = []
        ps = []
        for i in digits:
            gs.append(builder.cell(gen_kind, a[i], b[i])[0])
            ps.append(builder.cell(prop_kind, a[i], b[i])[0])
        block_cin = carry
        carries = [block_cin]
        for k in range(1, len(digits) + 1):
            (ck,) = builder.cell(carry_kind(k), *gs[:k], *ps[:k], block_cin)
            carries.append(ck)
        for j, i in enumerate(digits):
            s, _unused = builder.cell(_fa_kind(r), a[i], b[i], carries[j])
            builder.output(f"s{i}", s)
        carry = carries[-1]
    builder.output("cout", carry)
    return builder.build()


def build_csa(radix: Radix | int, width: int, block: int | None = None) -> Circuit:
    """Skip adder: ripple blocks whose carry can bypass via a multiplexer.

    Per block: a full-adder ripple chain, per-digit propagate signals, an
    AND over the block's propagates, and a 2-way mux that forwards the
    block carry-in when every position propagates. The mux output always
    equals the ripple carry; the skip path exists for speed, so the skip
    circuitry is still instantiated and counted.
    """
    _check_width(width)
    r = int(Radix(radix))
    if block is None:
        block = default_block(r)
    if not MIN_BLOCK <= block <= MAX_BLOCK:
        raise ValueError(f"block size must be in [{MIN_BLOCK}, {MAX_BLOCK}]")
    _, prop_kind = _gp_kinds(r)
    builder = CircuitBuilder(f"csa r{r} w{width} b{block}")
    a, b, carry = _operand_nets(builder, r, width)
    for digits in _blocks(width, block):
        block_cin = carry
        ripple = block_cin
        ps = []
        for i in digits:
            s, ripple = builder.cell(_fa_kind(r), a[i], b[i], ripple)
            builder.output(f"s{i}", s)
            ps.append(builder.cell(prop_kind, a[i], b[i])[0])
        if len(ps) > 1:
            (sel,) = builder.cell(and_kind(len(ps)), *ps)
        else:
            sel = ps[0]
        (carry,) = builder.cell("mux2", ripple, block_cin, sel)
    builder.output("cout", carry)
    return builder.build()


def build_adder(arch: AdderArch, radix: Radix | int, width: int) -> Circuit:
    if arch.name == "cpa":
        return build_cpa(radix, width)
    if arch.name == "cla":
        return build_cla(radix, width, arch.block)
    return build_csa(radix, width, arch.block)


def adder_summary(arch: AdderArch, radix: Radix | int, width: int) -> AdderSummary:
    """Counts from the built circuit: full adders vs carry circuitry."""
    circuit = build_adder(arch, radix, width)
    counts = count_cells(circuit)
    fa = 0
    aux: Counter[str] = Counter()
    for kind, n in counts.items():
        if cell_spec(kind).counts_as == "fa":
            fa += n
        else:
            aux[kind] += n
    if arch.name == "cpa":
        blocks = 0
    else:
        block = arch.block if arch.block is not None else default_block(radix)
        blocks = -(-width // block)
    return AdderSummary(
        arch=str(arch),
        radix=int(radix),
        width=width,
        fa_count=fa,
        aux_gate_counts=dict(sorted(aux.items())),
        carry_block_count=blocks,
    )
