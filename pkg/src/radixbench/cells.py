"""Functional models of every elementary cell used by the adders and multipliers.

Each cell kind is registered with its port radices and a scalar truth
function. Truth tables (and the netlist simulator's lookup tables) are
derived from those functions, so there is exactly one source of truth for
cell semantics.

Kind names are plain strings ("bin_fa", "trit_mul", "and4", "carry3", ...).
Ternary adder cells come in port variants because the reduction tree mixes
trit and bit rows; all 3-input variants count as full adders and all
2-input variants as half adders when tallying.
"""

from __future__ import annotations

import io
import itertools
from dataclasses import dataclass
from typing import Callable

from .core import Radix

__all__ = [
    "PortSpec",
    "CellSpec",
    "DecodedTrit",
    "TruthTable",
    "cell_spec",
    "known_kinds",
    "and_kind",
    "carry_kind",
    "bin_full_add",
    "bin_half_add",
    "tern_add3",
    "bit_mul",
    "trit_mul",
    "trit_decode",
    "trit_mul_gates",
    "carry_generate",
    "carry_propagate",
    "carry_lookahead",
    "truth_table",
]

MAX_AND_ARITY = 8
MAX_CARRY_INDEX = 5


@dataclass(frozen=True)
class PortSpec:
    """Input/output radices of a cell, in port order."""

    inputs: tuple[Radix, ...]
    outputs: tuple[Radix, ...]


@dataclass(frozen=True)
class CellSpec:
    """A registered cell kind: ports, truth function and tally class."""

    kind: str
    ports: PortSpec
    fn: Callable[..., tuple[int, ...]]
    input_names: tuple[str, ...]
    output_names: tuple[str, ...]
    counts_as: str | None = None  # "fa" | "ha" | "mul" | None


_REGISTRY: dict[str, CellSpec] = {}


def _register(kind, inputs, outputs, fn, in_names, out_names, counts_as=None):
    spec = CellSpec(
        kind=kind,
        ports=PortSpec(tuple(Radix(r) for r in inputs), tuple(Radix(r) for r in outputs)),
        fn=fn,
        input_names=tuple(in_names),
        output_names=tuple(out_names),
        counts_as=counts_as,
    )
    _REGISTRY[kind] = spec
    return spec


def cell_spec(kind: str) -> CellSpec:
    try:
        return _REGISTRY[kind]
    except KeyError:
        raise KeyError(f"unknown cell kind {kind!r}") from None


def known_kinds() -> tuple[str, ...]:
    return tuple(_REGISTRY)


def and_kind(n: int) -> str:
    """Kind name of the n-input AND (realised as Nand plus inverter)."""
    if not 2 <= n <= MAX_AND_ARITY:
        raise ValueError(f"AND arity must be in [2, {MAX_AND_ARITY}]")
    return f"and{n}"


def carry_kind(k: int) -> str:
    """Kind name of the lookahead cell computing carry k of a block."""
    if not 1 <= k <= MAX_CARRY_INDEX:
        raise ValueError(f"carry index must be in [1, {MAX_CARRY_INDEX}]")
    return f"carry{k}"


def _check_digit(x: int, radix: int, name: str) -> int:
    x = int(x)
    if not 0 <= x < radix:
        raise ValueError(f"{name}={x} out of range for radix {radix}")
    return x


def bin_full_add(a: int, b: int, cin: int) -> tuple[int, int]:
    """1-bit full adder: s + 2*cout == a + b + cin."""
    t = _check_digit(a, 2, "a") + _check_digit(b, 2, "b") + _check_digit(cin, 2, "cin")
    return t & 1, t >> 1


def bin_half_add(a: int, b: int) -> tuple[int, int]:
    t = _check_digit(a, 2, "a") + _check_digit(b, 2, "b")
    return t & 1, t >> 1


def tern_add3(a: int, b: int, c: int = 0) -> tuple[int, int]:
    """Ternary digit addition with a binary carry out: s + 3*cout == a + b + c.

    Inputs may each be a trit or a bit, but their sum must stay <= 5; a
    larger sum would need a non-binary carry, which ternary addition here
    never produces.
    """
    t = _check_digit(a, 3, "a") + _check_digit(b, 3, "b") + _check_digit(c, 3, "c")
    if t > 5:
        raise ValueError(f"digit sum {t} would need a non-binary carry")
    return t % 3, t // 3


def bit_mul(a: int, b: int) -> int:
    """1-bit multiplier, a single AND."""
    return _check_digit(a, 2, "a") & _check_digit(b, 2, "b")


def trit_mul(a: int, b: int) -> tuple[int, int]:
    """1-trit multiplier: product trit p and binary carry c with p + 3*c == a*b."""
    m = _check_digit(a, 3, "a") * _check_digit(b, 3, "b")
    return m % 3, m // 3


@dataclass(frozen=True)
class DecodedTrit:
    """Unary-style decode of a trit: x1 flags value 2, x0 flags value 1."""

    x1: int
    x0: int

    def __post_init__(self) -> None:
        if self.x1 not in (0, 1) or self.x0 not in (0, 1) or (self.x1 and self.x0):
            raise ValueError("invalid decoded trit")


def trit_decode(x: int) -> DecodedTrit:
    x = _check_digit(x, 3, "x")
    return DecodedTrit(x1=int(x == 2), x0=int(x == 1))


def trit_mul_gates(a: int, b: int) -> tuple[int, int]:
    """1-trit multiplier evaluated through its two-level gate equations.

    Computes the decoded product indicators S2, S1 and the carry Cm from
    decoded operands, then re-encodes. Must agree with :func:`trit_mul` on
    all nine input pairs.
    """
    da, db = trit_decode(a), trit_decode(b)
    a1, a0, b1, b0 = da.x1, da.x0, db.x1, db.x0
    s2 = (a1 & (1 - b1) & b0) | (b1 & (1 - a1) & a0)
    s1 = (a1 & b1) | ((1 - b1) & b0 & (1 - a1) & a0)
    cm = a1 & b1
    p = 2 if s2 else (1 if s1 else 0)
    return p, cm


def carry_generate(radix: Radix | int, a: int, b: int) -> int:
    """1 iff a+b produces a carry regardless of carry-in (a+b >= radix).

    For radix 3 this includes the (2,2) pair, which the published generate
    list omits but functional correctness requires.
    """
    r = int(Radix(radix))
    return int(_check_digit(a, r, "a") + _check_digit(b, r, "b") >= r)


def carry_propagate(radix: Radix | int, a: int, b: int) -> int:
    """1 iff an incoming carry passes through (a+b == radix-1).

    The binary form is XOR (not OR) so that generate and propagate stay
    mutually exclusive.
    """
    r = int(Radix(radix))
    return int(_check_digit(a, r, "a") + _check_digit(b, r, "b") == r - 1)


def carry_lookahead(k: int, gs, ps, c0: int) -> int:
    """Block carry k from generate/propagate digits 0..k-1 and block carry-in.

    Evaluates the recurrence c[i+1] = g[i] OR (p[i] AND c[i]), which equals
    the expanded sum-of-products form used for the costed two-level gates.
    """
    if len(gs) != k or len(ps) != k:
        raise ValueError("need k generate and k propagate inputs")
    c = _check_digit(c0, 2, "c0")
    for g, p in zip(gs, ps):
        c = _check_digit(g, 2, "g") | (_check_digit(p, 2, "p") & c)
    return c


# --- registry -----------------------------------------------------------

_register("bin_fa", (2, 2, 2), (2, 2), bin_full_add, ("a", "b", "cin"), ("s", "cout"), "fa")
_register("bin_ha", (2, 2), (2, 2), bin_half_add, ("a", "b"), ("s", "cout"), "ha")

_register("tern_fa", (3, 3, 2), (3, 2), tern_add3, ("a", "b", "cin"), ("s", "cout"), "fa")
_register("tern_fa_tbb", (3, 2, 2), (3, 2), tern_add3, ("a", "b", "c"), ("s", "cout"), "fa")
_register("tern_fa_bbb", (2, 2, 2), (3, 2), tern_add3, ("a", "b", "c"), ("s", "cout"), "fa")
_register("tern_ha", (3, 3), (3, 2), tern_add3, ("a", "b"), ("s", "cout"), "ha")
_register("tern_ha_tb", (3, 2), (3, 2), tern_add3, ("a", "b"), ("s", "cout"), "ha")
# two binary lines reduce to one ternary line; the carry is structurally zero
_register(
    "tern_ha_bb",
    (2, 2),
    (3,),
    lambda a, b: (_check_digit(a, 2, "a") + _check_digit(b, 2, "b"),),
    ("a", "b"),
    ("s",),
    "ha",
)

_register("bit_mul", (2, 2), (2,), lambda a, b: (bit_mul(a, b),), ("a", "b"), ("p",), "mul")
_register("trit_mul", (3, 3), (3, 2), trit_mul, ("a", "b"), ("p", "c"), "mul")

_register("bin_gen", (2, 2), (2,), lambda a, b: (carry_generate(2, a, b),), ("a", "b"), ("g",))
_register("bin_prop", (2, 2), (2,), lambda a, b: (carry_propagate(2, a, b),), ("a", "b"), ("p",))
_register("tern_gen", (3, 3), (2,), lambda a, b: (carry_generate(3, a, b),), ("a", "b"), ("g",))
_register("tern_prop", (3, 3), (2,), lambda a, b: (carry_propagate(3, a, b),), ("a", "b"), ("p",))

_register(
    "mux2",
    (2, 2, 2),
    (2,),
    lambda d0, d1, sel: (d1 if sel else d0,),
    ("d0", "d1", "sel"),
    ("y",),
)

for _n in range(2, MAX_AND_ARITY + 1):

    def _and_fn(*xs):
        y = 1
        for x in xs:
            y &= _check_digit(x, 2, "x")
        return (y,)

    _register(
        f"and{_n}",
        (2,) * _n,
        (2,),
        _and_fn,
        tuple(f"x{i}" for i in range(_n)),
        ("y",),
    )

for _k in range(1, MAX_CARRY_INDEX + 1):

    def _carry_fn(*xs, _k=_k):
        return (carry_lookahead(_k, xs[:_k], xs[_k : 2 * _k], xs[2 * _k]),)

    _register(
        f"carry{_k}",
        (2,) * (2 * _k + 1),
        (2,),
        _carry_fn,
        tuple(f"g{i}" for i in range(_k)) + tuple(f"p{i}" for i in range(_k)) + ("c0",),
        (f"c{_k}",),
    )

_register("const0_b", (), (2,), lambda: (0,), (), ("y",))
_register("const0_t", (), (3,), lambda: (0,), (), ("y",))


# --- truth tables -------------------------------------------------------


@dataclass(frozen=True)
class TruthTable:
    """Exhaustive enumeration of a cell function over its input domain."""

    kind: str
    input_names: tuple[str, ...]
    output_names: tuple[str, ...]
    rows: tuple[tuple[tuple[int, ...], tuple[int, ...]], ...]

    def to_csv(self) -> str:
        """Columns: inputs then outputs, one row per domain point."""
        buf = io.StringIO()
        buf.write(",".join(self.input_names + self.output_names) + "\n")
        for ins, outs in self.rows:
            buf.write(",".join(str(v) for v in ins + outs) + "\n")
        return buf.getvalue()


def truth_table(kind: str) -> TruthTable:
    """Enumerate ``kind`` over its whole port domain, inputs in lexicographic order."""
    spec = cell_spec(kind)
    domains = [range(int(r)) for r in spec.ports.inputs]
    rows = []
    for ins in itertools.product(*domains):
        outs = spec.fn(*ins)
        rows.append((tuple(int(v) for v in ins), tuple(int(v) for v in outs)))
    return TruthTable(kind, spec.input_names, spec.output_names, tuple(rows))
