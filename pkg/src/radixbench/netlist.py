"""Circuit graphs over radix-tagged nets, simulation and verification.

A :class:`Circuit` is an immutable DAG of cell instances. Evaluation uses
per-kind lookup tables derived from the cell truth functions, in two
flavours: a scalar path for single assignments and a vectorised numpy path
that evaluates whole blocks of the input space at once. The vectorised
path is what makes exhaustive verification of the published circuit sizes
run in seconds.
"""

from __future__ import annotations

import functools
import json
from collections import Counter
from dataclasses import dataclass, field
from typing import Callable, Iterable, Mapping, Sequence

import numpy as np

from .cells import cell_spec
from .core import Radix

__all__ = [
    "NetlistError",
    "Port",
    "CellInstance",
    "Circuit",
    "CircuitBuilder",
    "WordGroup",
    "OperandLayout",
    "VerificationReport",
    "simulate",
    "eval_vectorized",
    "count_cells",
    "exhaustive_check",
    "circuit_to_json",
    "circuit_from_json",
    "DEFAULT_EXHAUSTIVE_CAP",
    "DEFAULT_SAMPLES",
]

#: Largest input space that is still enumerated exhaustively.
DEFAULT_EXHAUSTIVE_CAP = 2**21
#: Seeded sample count used when the space exceeds the cap.
DEFAULT_SAMPLES = 10**5
#: Vectors evaluated per numpy block.
_CHUNK = 2**18


class NetlistError(ValueError):
    """Structural problem in a circuit: radix mismatch, cycle, bad driver."""


@dataclass(frozen=True)
class Port:
    """A named circuit input or output bound to a net."""

    name: str
    net: int


@dataclass(frozen=True)
class CellInstance:
    """One cell of a given kind wired to input and output nets."""

    kind: str
    ins: tuple[int, ...]
    outs: tuple[int, ...]


@dataclass(frozen=True)
class Circuit:
    """Immutable combinational netlist with named input and output ports.

    Validation happens at construction: every net has exactly one driver,
    port radices match the cell specs, and the cell graph is acyclic. The
    topological evaluation order is computed once and cached.
    """

    label: str
    net_radices: tuple[int, ...]
    inputs: tuple[Port, ...]
    outputs: tuple[Port, ...]
    cells: tuple[CellInstance, ...]
    _topo: tuple[int, ...] = field(init=False, repr=False, compare=False)

    def __post_init__(self) -> None:
        object.__setattr__(self, "_topo", self._validate())

    def _validate(self) -> tuple[int, ...]:
        n = len(self.net_radices)
        for r in self.net_radices:
            Radix(r)

        def check_net(i: int, what: str) -> None:
            if not 0 <= i < n:
                raise NetlistError(f"{what} references unknown net {i}")

        driver: list[object | None] = [None] * n
        for port in self.inputs:
            check_net(port.net, f"input {port.name}")
            if driver[port.net] is not None:
                raise NetlistError(f"net {port.net} has more than one driver")
            driver[port.net] = port
        for ci, cell in enumerate(self.cells):
            spec = cell_spec(cell.kind)
            if len(cell.ins) != len(spec.ports.inputs) or len(cell.outs) != len(spec.ports.outputs):
                raise NetlistError(f"cell {ci} ({cell.kind}) has wrong arity")
            for net, radix in zip(cell.ins, spec.ports.inputs):
                check_net(net, f"cell {ci}")
                if self.net_radices[net] != int(radix):
                    raise NetlistError(
                        f"cell {ci} ({cell.kind}) input expects radix {int(radix)}, "
                        f"net {net} is radix {self.net_radices[net]}"
                    )
            for net, radix in zip(cell.outs, spec.ports.outputs):
                check_net(net, f"cell {ci}")
                if self.net_radices[net] != int(radix):
                    raise NetlistError(
                        f"cell {ci} ({cell.kind}) output drives radix-{self.net_radices[net]} "
                        f"net {net}, expected {int(radix)}"
                    )
                if driver[net] is not None:
                    raise NetlistError(f"net {net} has more than one driver")
                driver[net] = ci
        for port in self.outputs:
            check_net(port.net, f"output {port.name}")
        for net, drv in enumerate(driver):
            if drv is None:
                raise NetlistError(f"net {net} has no driver")

        # Kahn's algorithm over cells; a leftover cell means a cycle.
        indeg = [0] * len(self.cells)
        readers: dict[int, list[int]] = {}
        for ci, cell in enumerate(self.cells):
            for net in cell.ins:
                readers.setdefault(net, []).append(ci)
                if isinstance(driver[net], int):
                    indeg[ci] += 1
        ready = [ci for ci, d in enumerate(indeg) if d == 0]
        order: list[int] = []
        while ready:
            ci = ready.pop()
            order.append(ci)
            for net in self.cells[ci].outs:
                for rj in readers.get(net, ()):
                    indeg[rj] -= 1
                    if indeg[rj] == 0:
                        ready.append(rj)
        if len(order) != len(self.cells):
            raise NetlistError("cell graph contains a cycle")
        return tuple(order)

    @property
    def topo_order(self) -> tuple[int, ...]:
        return self._topo

    def input_names(self) -> tuple[str, ...]:
        return tuple(p.name for p in self.inputs)


class CircuitBuilder:
    """Incrementally wires up a :class:`Circuit`; nets are created on demand."""

    def __init__(self, label: str = "") -> None:
        self.label = label
        self._radices: list[int] = []
        self._inputs: list[Port] = []
        self._outputs: list[Port] = []
        self._cells: list[CellInstance] = []

    def _new_net(self, radix: Radix | int) -> int:
        self._radices.append(int(Radix(radix)))
        return len(self._radices) - 1

    def input(self, name: str, radix: Radix | int) -> int:
        net = self._new_net(radix)
        self._inputs.append(Port(name, net))
        return net

    def cell(self, kind: str, *ins: int) -> tuple[int, ...]:
        spec = cell_spec(kind)
        outs = tuple(self._new_net(r) for r in spec.ports.outputs)
        self._cells.append(CellInstance(kind, tuple(ins), outs))
        return outs

    def const_zero(self, radix: Radix | int) -> int:
        kind = "const0_b" if int(radix) == 2 else "const0_t"
        return self.cell(kind)[0]

    def output(self, name: str, net: int) -> None:
        self._outputs.append(Port(name, net))

    def build(self) -> Circuit:
        return Circuit(
            label=self.label,
            net_radices=tuple(self._radices),
            inputs=tuple(self._inputs),
            outputs=tuple(self._outputs),
            cells=tuple(self._cells),
        )


# --- evaluation ---------------------------------------------------------


@functools.lru_cache(maxsize=None)
def _kind_luts(kind: str) -> tuple[tuple[int, ...], tuple[np.ndarray, ...]]:
    """Mixed-radix input strides and one uint8 output LUT per output port."""
    spec = cell_spec(kind)
    radices = [int(r) for r in spec.ports.inputs]
    strides = []
    acc = 1
    for r in reversed(radices):
        strides.append(acc)
        acc *= r
    strides.reverse()
    n_rows = acc
    luts = [np.zeros(max(n_rows, 1), dtype=np.uint8) for _ in spec.ports.outputs]
    for idx in range(max(n_rows, 1)):
        rem = idx
        ins = []
        for s, r in zip(strides, radices):
            ins.append((rem // s) % r)
        outs = spec.fn(*ins)
        for lut, v in zip(luts, outs):
            lut[idx] = v
    return tuple(strides), tuple(luts)


def simulate(circuit: Circuit, assignment: Mapping[str, int]) -> dict[str, int]:
    """Evaluate one input assignment; returns output name -> digit."""
    values: list[int | None] = [None] * len(circuit.net_radices)
    seen = set()
    for port in circuit.inputs:
        if port.name not in assignment:
            raise NetlistError(f"missing input {port.name!r}")
        v = int(assignment[port.name])
        if not 0 <= v < circuit.net_radices[port.net]:
            raise NetlistError(
                f"input {port.name}={v} out of range for radix {circuit.net_radices[port.net]}"
            )
        values[port.net] = v
        seen.add(port.name)
    extra = set(assignment) - seen
    if extra:
        raise NetlistError(f"unknown inputs: {sorted(extra)}")
    for ci in circuit.topo_order:
        cell = circuit.cells[ci]
        strides, luts = _kind_luts(cell.kind)
        idx = 0
        for net, s in zip(cell.ins, strides):
            idx += values[net] * s  # type: ignore[operator]
        for net, lut in zip(cell.outs, luts):
            values[net] = int(lut[idx])
    return {port.name: values[port.net] for port in circuit.outputs}  # type: ignore[misc]


def eval_vectorized(
    circuit: Circuit,
    input_arrays: Mapping[str, np.ndarray],
    observe: Iterable[int] = (),
) -> tuple[dict[str, np.ndarray], dict[int, np.ndarray]]:
    """Evaluate many assignments at once.

    ``input_arrays`` maps every input port name to a uint8 array of equal
    length. Returns (outputs by name, observed net values by id). Net
    buffers are freed as soon as their last reader has run.
    """
    n_nets = len(circuit.net_radices)
    values: list[np.ndarray | None] = [None] * n_nets
    refcount = [0] * n_nets
    for cell in circuit.cells:
        for net in cell.ins:
            refcount[net] += 1
    for port in circuit.outputs:
        refcount[port.net] += 1
    observe = set(observe)
    for net in observe:
        refcount[net] += 1

    for port in circuit.inputs:
        arr = np.asarray(input_arrays[port.name], dtype=np.uint8)
        values[port.net] = arr

    observed: dict[int, np.ndarray] = {}
    outputs: dict[str, np.ndarray] = {}

    def consume(net: int) -> None:
        refcount[net] -= 1
        if refcount[net] == 0:
            values[net] = None

    for ci in circuit.topo_order:
        cell = circuit.cells[ci]
        strides, luts = _kind_luts(cell.kind)
        if cell.ins:
            idx = values[cell.ins[0]].astype(np.int32) * strides[0]
            for net, s in zip(cell.ins[1:], strides[1:]):
                idx += values[net].astype(np.int32) * s
        else:
            length = len(next(iter(input_arrays.values()))) if input_arrays else 1
            idx = np.zeros(length, dtype=np.int32)
        for net, lut in zip(cell.outs, luts):
            values[net] = lut[idx]
        for net in cell.ins:
            consume(net)
        for net in cell.outs:
            if net in observe:
                observed[net] = values[net]
            if refcount[net] == 0:
                values[net] = None

    for port in circuit.inputs:
        if port.net in observe:
            observed[port.net] = np.asarray(input_arrays[port.name], dtype=np.uint8)
    for port in circuit.outputs:
        outputs[port.name] = values[port.net]
    return outputs, observed


def count_cells(circuit: Circuit) -> Counter[str]:
    """Exact multiset of cell kinds in the circuit."""
    return Counter(cell.kind for cell in circuit.cells)


# --- operand encoding and verification -----------------------------------


@dataclass(frozen=True)
class WordGroup:
    """Ports forming one unsigned operand, least significant port first."""

    name: str
    ports: tuple[str, ...]
    radix: int

    @property
    def size(self) -> int:
        return self.radix ** len(self.ports)


@dataclass(frozen=True)
class OperandLayout:
    """How circuit ports group into integer operands and results."""

    inputs: tuple[WordGroup, ...]
    outputs: tuple[WordGroup, ...]

    def space(self) -> int:
        n = 1
        for g in self.inputs:
            n *= g.size
        return n


@dataclass(frozen=True)
class VerificationReport:
    """Outcome of checking a circuit against an integer oracle."""

    circuit: str
    mode: str  # "exhaustive" | "sampled"
    vectors: int
    passed: bool
    counterexample: dict | None = None

    def first_failure(self) -> dict | None:
        return self.counterexample


def _group_digit_arrays(values: np.ndarray, group: WordGroup) -> dict[str, np.ndarray]:
    arrays = {}
    v = values.astype(np.int64, copy=False)
    for j, port in enumerate(group.ports):
        arrays[port] = ((v // group.radix**j) % group.radix).astype(np.uint8)
    return arrays


def _group_value(outputs: Mapping[str, np.ndarray], group: WordGroup) -> np.ndarray:
    total = np.zeros_like(np.asarray(outputs[group.ports[0]], dtype=np.int64))
    for j, port in enumerate(group.ports):
        total += np.asarray(outputs[port], dtype=np.int64) * (group.radix**j)
    return total


def _check_layout(circuit: Circuit, layout: OperandLayout) -> None:
    in_ports = [p for g in layout.inputs for p in g.ports]
    if sorted(in_ports) != sorted(circuit.input_names()):
        raise NetlistError("layout input ports do not match circuit inputs")
    out_names = {p.name for p in circuit.outputs}
    for g in layout.outputs:
        missing = set(g.ports) - out_names
        if missing:
            raise NetlistError(f"layout output ports missing from circuit: {sorted(missing)}")


def exhaustive_check(
    circuit: Circuit,
    oracle: Callable[..., tuple],
    layout: OperandLayout,
    cap: int = DEFAULT_EXHAUSTIVE_CAP,
    seed: int | None = None,
    samples: int = DEFAULT_SAMPLES,
) -> VerificationReport:
    """Check ``circuit`` against ``oracle`` over its whole input space.

    If the space fits under ``cap`` every assignment is enumerated once;
    otherwise ``samples`` seeded uniform vectors are drawn. The oracle maps
    input group values (int64 arrays) to a tuple of expected output group
    values in layout order. Reports the first counterexample found.
    """
    if cap < 1:
        raise ValueError("cap must be >= 1")
    _check_layout(circuit, layout)
    space = layout.space()
    exhaustive = space <= cap
    mode = "exhaustive" if exhaustive else "sampled"
    total = space if exhaustive else samples

    rng = np.random.default_rng(seed)
    done = 0
    while done < total:
        n = min(_CHUNK, total - done)
        group_vals: list[np.ndarray] = []
        if exhaustive:
            idx = np.arange(done, done + n, dtype=np.int64)
            stride = 1
            for g in layout.inputs:
                group_vals.append((idx // stride) % g.size)
                stride *= g.size
        else:
            for g in layout.inputs:
                group_vals.append(rng.integers(0, g.size, size=n, dtype=np.int64))
        input_arrays: dict[str, np.ndarray] = {}
        for g, vals in zip(layout.inputs, group_vals):
            input_arrays.update(_group_digit_arrays(vals, g))
        outputs, _ = eval_vectorized(circuit, input_arrays)
        got = [_group_value(outputs, g) for g in layout.outputs]
        expected = oracle(*group_vals)
        if len(expected) != len(layout.outputs):
            raise NetlistError("oracle arity does not match layout outputs")
        bad = np.zeros(n, dtype=bool)
        for g_arr, e_arr in zip(got, expected):
            bad |= g_arr != np.asarray(e_arr, dtype=np.int64)
        if bad.any():
            i = int(np.argmax(bad))
            return VerificationReport(
                circuit=circuit.label,
                mode=mode,
                vectors=done + i + 1,
                passed=False,
                counterexample={
                    "inputs": {
                        g.name: int(vals[i]) for g, vals in zip(layout.inputs, group_vals)
                    },
                    "expected": {
                        g.name: int(np.asarray(e)[i] if np.ndim(e) else e)
                        for g, e in zip(layout.outputs, expected)
                    },
                    "got": {g.name: int(v[i]) for g, v in zip(layout.outputs, got)},
                },
            )
        done += n
    return VerificationReport(circuit=circuit.label, mode=mode, vectors=total, passed=True)


# --- serialization -------------------------------------------------------


def circuit_to_json(circuit: Circuit) -> str:
    """Structural netlist as JSON with stable field order."""
    doc = {
        "label": circuit.label,
        "nets": [int(r) for r in circuit.net_radices],
        "inputs": [
            {"name": p.name, "radix": circuit.net_radices[p.net], "net": p.net}
            for p in circuit.inputs
        ],
        "outputs": [
            {"name": p.name, "radix": circuit.net_radices[p.net], "net": p.net}
            for p in circuit.outputs
        ],
        "cells": [
            {"kind": c.kind, "ins": list(c.ins), "outs": list(c.outs)} for c in circuit.cells
        ],
    }
    return json.dumps(doc, indent=2)


def circuit_from_json(text: str) -> Circuit:
    doc = json.loads(text)
    return Circuit(
        label=doc.get("label", ""),
        net_radices=tuple(doc["nets"]),
        inputs=tuple(Port(p["name"], p["net"]) for p in doc["inputs"]),
        outputs=tuple(Port(p["name"], p["net"]) for p in doc["outputs"]),
        cells=tuple(
            CellInstance(c["kind"], tuple(c["ins"]), tuple(c["outs"])) for c in doc["cells"]
        ),
    )
