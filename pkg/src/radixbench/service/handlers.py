"""Command handlers: build circuits, run checks, assemble responses.

The CLI calls these directly; the HTTP app wraps them. They raise
ValueError on bad configurations and KeyError on unknown table ids.
"""

from __future__ import annotations

from .. import __version__
from ..adders import AdderArch, adder_layout, adder_oracle, adder_summary, build_adder
from ..costmodel import builtin_cost_table, circuit_cost
from ..multipliers import (
    build_multiplier_detailed,
    multiplier_layout,
    multiplier_oracle,
)
from ..netlist import count_cells, exhaustive_check
from ..reftables import (
    TableDoc,
    compare_document,
    get_table,
    multiplier_count_rows,
)
from .schemas import (
    AdderSummaryModel,
    CircuitSelector,
    CompareRequest,
    CompareResponse,
    CostItemModel,
    CostRequest,
    CostResponse,
    CountsRequest,
    CountsResponse,
    DiscrepancyModel,
    HealthResponse,
    MultiplierSummaryModel,
    TableBlock,
    TableResponse,
    VerifyRequest,
    VerifyResponse,
)

__all__ = [
    "handle_health",
    "handle_verify",
    "handle_counts",
    "handle_cost",
    "handle_compare",
    "handle_table",
]


def handle_health() -> HealthResponse:
    return HealthResponse(status="ok", version=__version__)


def _doc_to_block(doc: TableDoc) -> TableBlock:
    return TableBlock(
        title=doc.title,
        headers=list(doc.headers),
        rows=[list(r) for r in doc.rows],
        notes=list(doc.notes),
    )


def _selected_circuit(sel: CircuitSelector):
    """Build the selected circuit plus its layout, oracle and label."""
    if sel.mul:
        build = build_multiplier_detailed(sel.radix, sel.width, sel.ha_policy)
        layout = multiplier_layout(sel.radix, sel.width)
        return build.circuit, layout, multiplier_oracle(), build
    arch = AdderArch(sel.arch, sel.block if sel.arch != "cpa" else None)
    circuit = build_adder(arch, sel.radix, sel.width)
    layout = adder_layout(sel.radix, sel.width)
    return circuit, layout, adder_oracle(sel.radix, sel.width), None


def _selector_label(sel: CircuitSelector) -> str:
    kind = "mul" if sel.mul else sel.arch
    label = f"{kind} radix={sel.radix} width={sel.width}"
    if sel.block is not None:
        label += f" block={sel.block}"
    return label


def handle_verify(req: VerifyRequest) -> VerifyResponse:
    circuit, layout, oracle, _ = _selected_circuit(req)
    report = exhaustive_check(
        circuit, oracle, layout, cap=req.cap, seed=req.seed, samples=req.samples
    )
    rows = [
        ["circuit", report.circuit],
        ["mode", report.mode],
        ["vectors", str(report.vectors)],
        ["result", "pass" if report.passed else "FAIL"],
    ]
    notes = []
    if report.counterexample is not None:
        ce = report.counterexample
        for section in ("inputs", "expected", "got"):
            for name, value in ce[section].items():
                rows.append([f"{section}.{name}", str(value)])
        notes.append("first counterexample shown; inputs are operand values.")
    block = TableBlock(
        title=f"verify {_selector_label(req)}",
        headers=["field", "value"],
        rows=rows,
        notes=notes,
    )
    return VerifyResponse(
        circuit=report.circuit,
        mode=report.mode,
        vectors=report.vectors,
        passed=report.passed,
        counterexample=report.counterexample,
        blocks=[block],
    )


def handle_counts(req: CountsRequest) -> CountsResponse:
    circuit, _, _, build = _selected_circuit(req)
    counts = dict(sorted(count_cells(circuit).items()))
    blocks = [
        TableBlock(
            title=f"cell counts for {_selector_label(req)}",
            headers=["kind", "count"],
            rows=[[k, str(n)] for k, n in counts.items()],
        )
    ]
    mul_model = None
    adder_model = None
    if build is not None:
        s = build.summary
        mul_model = MultiplierSummaryModel(
            radix=s.radix,
            width=s.width,
            elementary_mul_count=s.elementary_mul_count,
            reduction_fa=s.reduction_fa,
            reduction_ha=s.reduction_ha,
            final_fa=s.final_fa,
            final_ha=s.final_ha,
            total_fa=s.total_fa,
            total_ha=s.total_ha,
            equivalent_fa=s.equivalent_fa,
            stage_rows=list(s.stage_rows),
        )
        blocks.append(
            TableBlock(
                title="multiplier summary",
                headers=["row", "count"],
                rows=[[label, value] for label, value in multiplier_count_rows(s)],
                notes=[
                    f"stage rows: {list(s.stage_rows)}",
                    'the source table labels the last row "Total equivalant FA"; '
                    "spelling corrected here.",
                ],
            )
        )
    else:
        arch = AdderArch(req.arch, req.block if req.arch != "cpa" else None)
        a = adder_summary(arch, req.radix, req.width)
        adder_model = AdderSummaryModel(
            arch=a.arch,
            radix=a.radix,
            width=a.width,
            fa_count=a.fa_count,
            aux_gate_counts=a.aux_gate_counts,
            carry_block_count=a.carry_block_count,
        )
        blocks.append(
            TableBlock(
                title="adder summary",
                headers=["field", "value"],
                rows=[
                    ["full adders", str(a.fa_count)],
                    ["carry blocks", str(a.carry_block_count)],
                ],
            )
        )
    return CountsResponse(
        cell_counts=counts, multiplier=mul_model, adder=adder_model, blocks=blocks
    )


def handle_cost(req: CostRequest) -> CostResponse:
    circuit, _, _, _ = _selected_circuit(req)
    table = builtin_cost_table(req.preset)
    counts = dict(sorted(count_cells(circuit).items()))
    items = [
        CostItemModel(kind=k, count=n, unit=table.cost(k), subtotal=n * table.cost(k))
        for k, n in counts.items()
    ]
    total = circuit_cost(counts, table)
    block = TableBlock(
        title=f"transistor cost of {_selector_label(req)} (preset {req.preset})",
        headers=["kind", "count", "unit", "subtotal"],
        rows=[[i.kind, str(i.count), str(i.unit), str(i.subtotal)] for i in items]
        + [["total", "", "", str(total)]],
    )
    return CostResponse(preset=req.preset, total=total, items=items, blocks=[block])


def handle_compare(req: CompareRequest) -> CompareResponse:
    doc = compare_document(req.bits, req.preset, req.ha_policy)
    return CompareResponse(
        bits=doc.n_bits,
        wire_trits=doc.wire_trits,
        mul_trits=doc.mul_trits,
        preset=doc.preset,
        ha_policy=doc.ha_policy,
        discrepancies=[
            DiscrepancyModel(key=d.key, printed=d.printed, computed=d.computed, note=d.note)
            for d in doc.discrepancies
        ],
        blocks=[_doc_to_block(s) for s in doc.sections],
    )


def handle_table(table_id: str) -> TableResponse:
    doc = get_table(table_id)
    return TableResponse(
        table_id=doc.table_id,
        title=doc.title,
        headers=list(doc.headers),
        rows=[list(r) for r in doc.rows],
        notes=list(doc.notes),
        blocks=[_doc_to_block(doc)],
    )
