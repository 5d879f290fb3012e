"""Reproduction of the published comparison tables, with receipts.

Every constant printed in the reference comparison lives here, next to
the code that recomputes it from the builders and the cost model. Tables
I, II, VI, VII and IX reproduce the printed cells exactly (quirks
included) and carry computed cross-checks as notes; tables III-V and
VIII show computed values beside the printed ones with a match column.
A discrepancy list records every known disagreement between printed
values and what the arithmetic actually yields, so nothing diverges
silently.
"""

from __future__ import annotations

from dataclasses import dataclass

from .adders import AdderArch, adder_summary, default_block
from .cells import truth_table
from .core import (
    TABLE_WIRE_WIDTHS,
    equivalent_trit_width,
    information_ratio,
    trit_width_for_bit_width,
)
from .costmodel import (
    DEFAULT_PRESET,
    PRESETS,
    builtin_cost_table,
    circuit_cost,
    cla_carry_cost,
    csa_skip_cost,
    format_ratio,
    ratio_report,
)
from .multipliers import MultiplierSummary, build_multiplier, compare_multipliers
from .netlist import count_cells

__all__ = [
    "TableDoc",
    "Discrepancy",
    "CompareDoc",
    "TABLE_IDS",
    "MUL_ROW_LABELS",
    "PRINTED_TRIT_MUL",
    "PRINTED_MUL",
    "PRINTED_FA_COUNTS",
    "PRINTED_FA_RATIOS",
    "PRINTED_CLA_BINARY_ROW",
    "PRINTED_CLA_TERNARY_ROW",
    "PRINTED_CSA_ROWS",
    "STANDING_DISCREPANCIES",
    "get_table",
    "table_i",
    "table_ii",
    "table_iii",
    "table_iv",
    "table_v",
    "table_vi",
    "table_vii",
    "table_viii",
    "table_ix",
    "multiplier_count_rows",
    "compare_document",
]


@dataclass(frozen=True)
class TableDoc:
    """One renderable table: headers, string cells, and footnotes."""

    table_id: str
    title: str
    headers: tuple[str, ...]
    rows: tuple[tuple[str, ...], ...]
    notes: tuple[str, ...] = ()


@dataclass(frozen=True)
class Discrepancy:
    """A printed value that disagrees with the recomputed one."""

    key: str
    printed: str
    computed: str
    note: str


@dataclass(frozen=True)
class CompareDoc:
    """Full binary-vs-ternary comparison for one bit width."""

    n_bits: int
    wire_trits: int
    mul_trits: int
    preset: str
    ha_policy: str
    sections: tuple[TableDoc, ...]
    discrepancies: tuple[Discrepancy, ...]


TABLE_IDS = ("I", "II", "III", "IV", "V", "VI", "VII", "VIII", "IX")

# --- printed reference cells ----------------------------------------------

PRINTED_TRIT_MUL = (
    (0, 0, 0, 0),
    (0, 1, 0, 0),
    (0, 2, 0, 0),
    (1, 0, 0, 0),
    (1, 1, 1, 0),
    (1, 2, 2, 0),
    (2, 0, 0, 0),
    (2, 1, 2, 0),
    (2, 2, 1, 1),
)

MUL_ROW_LABELS = (
    "Ai*Bi",
    "Reduction FA",
    "Reduction HA",
    "Final Add FA",
    "Final Add HA",
    "Total FA",
    "Total HA",
    "Total equivalent FA",
)

# per bit width: the matched trit width and the printed table cells,
# keyed by (corrected) row label as (binary, ternary, ratio)
PRINTED_MUL: dict[int, dict] = {
    8: {
        "m": 5,
        "rows": {
            "Ai*Bi": ("64", "25", "2.56"),
            "Reduction FA": ("35", "29", ""),
            "Reduction HA": ("18", "12", ""),
            "Final Add FA": ("9", "5", ""),
            "Final Add HA": ("1", "0", ""),
            "Total FA": ("44", "34", ""),
            "Total HA": ("19", "12", ""),
            "Total equivalent FA": ("53.5", "40", "1.34"),
        },
    },
    12: {
        "m": 8,
        "rows": {
            "Ai*Bi": ("144", "64", "2.25"),
            "Reduction FA": ("102", "102", ""),
            "Reduction HA": ("34", "18", ""),
            "Final Add FA": ("18", "10", ""),
            "Final Add HA": ("0", "0", ""),
            "Total FA": ("120", "112", ""),
            "Total HA": ("34", "18", ""),
            "Total equivalent FA": ("137", "121", "1.13"),
        },
    },
    16: {
        "m": 10,
        "rows": {
            "Ai*Bi": ("256", "100", "2.56"),
            "Reduction FA": ("200", "153", ""),
            "Reduction HA": ("54", "38", ""),
            "Final Add FA": ("24", "13", ""),
            "Final Add HA": ("1", "1", ""),
            "Total FA": ("224", "166", ""),
            "Total HA": ("55", "39", ""),
            "Total equivalent FA": ("251.5", "185.5", "1.36"),
        },
    },
}

PRINTED_FA_COUNTS = ("124", "28", "14 to 16", "8")
PRINTED_FA_RATIOS = ("", "4.4", "7.7 to 8.8", "15.5")
PRINTED_CLA_BINARY_ROW = ("24", "24", "10", "18", "28", "40", "144", "288")
PRINTED_CLA_TERNARY_ROW = ("80", "90", "10", "18", "28", "40", "54", "310")
# the binary Pi cell is printed "24i"; read as 24 (4 digits at 6T, total 48)
PRINTED_CSA_ROWS = (
    ("Binary", "24i", "10", "14", "48", "96"),
    ("Ternary", "90", "12", "14", "", "116"),
)

STANDING_DISCREPANCIES = (
    Discrepancy(
        key="cla-ternary-total",
        printed="310",
        computed="320",
        note="5-trit lookahead carry table: the printed total is 310 but its own "
        "entries sum to 80+90+10+18+28+40+54 = 320; both are reported.",
    ),
    Discrepancy(
        key="ternary-reduction-ha-count",
        printed="34 T-FA / 14 T-HA",
        computed="34 T-FA / 12 T-HA",
        note="the reference narrative quotes 14 ternary half adders for the 5x5 "
        "tree while its comparison table (table III) lists 12; the table is "
        "taken as canonical.",
    ),
    Discrepancy(
        key="wire-table-ratio-range",
        printed="N/M ranges from 1.5 to 1.6",
        computed="16/11 = 1.45",
        note="the printed wire pairing 16 bits to 11 trits falls outside the "
        "stated N/M range.",
    ),
    Discrepancy(
        key="fa-ratio-interval",
        printed="7.7 to 8.8",
        computed="7.75 to 8.86",
        note="transmission-gate FA ratios recomputed from the stored counts "
        "(124/16 and 124/14) differ from the printed interval bounds.",
    ),
    Discrepancy(
        key="ternary-generate-pair",
        printed="generate on (2,1),(1,2)",
        computed="generate on (2,1),(1,2),(2,2)",
        note="a+b = 4 must generate a carry for the adders to be correct; the "
        "printed enumeration omits (2,2).",
    ),
    Discrepancy(
        key="csa-pi-cell",
        printed="24i",
        computed="24",
        note="binary Pi cell of the skip-cost table; read as 24, consistent "
        "with 4 digits at 6 transistors and the printed 48 total.",
    ),
)


# --- table reproductions ---------------------------------------------------


def table_i() -> TableDoc:
    bits = sorted(TABLE_WIRE_WIDTHS)
    trits = [trit_width_for_bit_width(n) for n in bits]
    ir = information_ratio()
    notes = (
        "trit counts computed by the width-pairing lookup; raw n/log2(3): "
        + ", ".join(f"{n}: {n / ir:.2f}" for n in bits),
        "the 16-to-11 pair gives N/M = 1.45, outside the stated 1.5 to 1.6 range.",
    )
    return TableDoc(
        table_id="I",
        title="bit widths and their equal-information trit widths",
        headers=("Number of bits",) + tuple(str(n) for n in bits),
        rows=(("Number of trits",) + tuple(str(m) for m in trits),),
        notes=notes,
    )


def table_ii() -> TableDoc:
    tt = truth_table("trit_mul")
    rows = tuple(
        tuple(str(v) for v in ins + outs) for ins, outs in tt.rows
    )
    return TableDoc(
        table_id="II",
        title="1-trit multiplier: product trit and binary carry",
        headers=("Ai", "Bi", "Pi", "Ci"),
        rows=rows,
        notes=("computed by enumerating the trit_mul cell; p + 3c = a*b.",),
    )


def _fmt_equiv(x: float) -> str:
    return str(int(x)) if x == int(x) else f"{x:.1f}"


def multiplier_count_rows(summary: MultiplierSummary) -> tuple[tuple[str, str], ...]:
    """The eight labeled count rows for one multiplier, as strings."""
    s = summary
    vals = (
        str(s.elementary_mul_count),
        str(s.reduction_fa),
        str(s.reduction_ha),
        str(s.final_fa),
        str(s.final_ha),
        str(s.total_fa),
        str(s.total_ha),
        _fmt_equiv(s.equivalent_fa),
    )
    return tuple(zip(MUL_ROW_LABELS, vals))


def _mul_table(table_id: str, n_bits: int, ha_policy: str = "eager") -> TableDoc:
    printed = PRINTED_MUL[n_bits]
    m = printed["m"]
    cmp = compare_multipliers(n_bits, ha_policy)
    computed_b = dict(multiplier_count_rows(cmp.binary))
    computed_t = dict(multiplier_count_rows(cmp.ternary))
    computed_ratio = {
        "Ai*Bi": format_ratio(cmp.elementary_ratio, 2),
        "Total equivalent FA": format_ratio(cmp.equivalent_fa_ratio, 2),
    }
    rows = []
    for label in MUL_ROW_LABELS:
        pb, pt, pr = printed["rows"][label]
        cb = computed_b[label]
        ct = computed_t[label]
        cr = computed_ratio.get(label, "")
        match = "=" if (pb, pt, pr) == (cb, ct, cr) else "D"
        rows.append((label, pb, pt, pr, cb, ct, cr, match))
    notes = (
        f"computed with ha_policy={ha_policy}; the scheduling of full vs half "
        "adders is not pinned by the reference, so per-row counts may differ "
        "while the equivalent-FA totals stay within tolerance.",
        'the last row is labeled "Total equivalant FA" in the source table; '
        "spelling corrected here.",
    )
    return TableDoc(
        table_id=table_id,
        title=f"{n_bits}x{n_bits} bit vs {m}x{m} trit multiplier cell counts",
        headers=(
            "",
            "Binary (printed)",
            "Ternary (printed)",
            "Binary/Ternary (printed)",
            "Binary (computed)",
            "Ternary (computed)",
            "Binary/Ternary (computed)",
            "match",
        ),
        rows=tuple(rows),
        notes=notes,
    )


def table_iii(ha_policy: str = "eager") -> TableDoc:
    return _mul_table("III", 8, ha_policy)


def table_iv(ha_policy: str = "eager") -> TableDoc:
    return _mul_table("IV", 12, ha_policy)


def table_v(ha_policy: str = "eager") -> TableDoc:
    return _mul_table("V", 16, ha_policy)


def table_vi() -> TableDoc:
    t_fa = PRESETS["conventional"].ternary_fa
    computed = {
        "conventional": format_ratio(ratio_report(t_fa, 28), 1),
        "tg": f"{ratio_report(t_fa, 16):.2f} to {ratio_report(t_fa, 14):.2f}",
        "compact": format_ratio(ratio_report(t_fa, 8), 1),
    }
    notes = (
        f"computed ratios: 124/28 = {computed['conventional']}, "
        f"124/16 and 124/14 = {computed['tg']}, 124/8 = {computed['compact']}.",
        f"the computed transmission-gate interval {computed['tg']} differs "
        'from the printed "7.7 to 8.8".',
        f"capacitive-input adders (not in this table): ternary 27, binary 11, "
        f"ratio {format_ratio(ratio_report(27, 11), 2)}.",
    )
    return TableDoc(
        table_id="VI",
        title="transistor counts of ternary vs binary full adders",
        headers=("", "3-FA", "Nand-2 FA", "Xor-2 FA", "8T-FA"),
        rows=(
            ("Transistor count",) + PRINTED_FA_COUNTS,
            ("Ratio 3/2",) + PRINTED_FA_RATIOS,
        ),
        notes=notes,
    )


def table_vii() -> TableDoc:
    table = builtin_cost_table()
    half = cla_carry_cost(2, 4, 4, table)
    full = cla_carry_cost(2, 8, 4, table)
    b = half.blocks[0]
    computed = (
        str(b.gi),
        str(b.pi),
        *(str(c) for c in b.carries),
        str(half.total),
        str(full.total),
    )
    if computed != PRINTED_CLA_BINARY_ROW:
        raise AssertionError("binary lookahead carry costs drifted from the table")
    return TableDoc(
        table_id="VII",
        title="lookahead carry circuitry cost, two 4-bit blocks",
        headers=("Function", "Gi", "Pi", "C1", "C2", "C3", "C4", "4-bit", "8-bit"),
        rows=(("Transistor count",) + PRINTED_CLA_BINARY_ROW,),
        notes=("computed per-block totals match the printed cells exactly.",),
    )


def table_viii() -> TableDoc:
    table = builtin_cost_table()
    rep = cla_carry_cost(3, 5, 5, table)
    b = rep.blocks[0]
    computed = (
        str(b.gi),
        str(b.pi),
        *(str(c) for c in b.carries),
        str(rep.total),
    )
    delta = tuple(
        "" if c == p else f"{int(c) - int(p):+d}"
        for c, p in zip(computed, PRINTED_CLA_TERNARY_ROW)
    )
    return TableDoc(
        table_id="VIII",
        title="lookahead carry circuitry cost, one 5-trit block",
        headers=("Function", "Gi", "Pi", "C1", "C2", "C3", "C4", "C5", "5-trit"),
        rows=(
            ("printed",) + PRINTED_CLA_TERNARY_ROW,
            ("computed",) + computed,
            ("delta",) + delta,
        ),
        notes=(
            "the printed total 310 does not equal the sum of the printed "
            "entries; the recomputed total is 320. Both are shown.",
        ),
    )


def table_ix() -> TableDoc:
    table = builtin_cost_table()
    b_half = csa_skip_cost(2, 4, 4, table)
    b_full = csa_skip_cost(2, 8, 4, table)
    t_full = csa_skip_cost(3, 5, 5, table)
    bb = b_half.blocks[0]
    tb = t_full.blocks[0]
    checks = (
        (bb.pi, 24),
        (bb.and_gate, 10),
        (bb.mux, 14),
        (b_half.total, 48),
        (b_full.total, 96),
        (tb.pi, 90),
        (tb.and_gate, 12),
        (tb.mux, 14),
        (t_full.total, 116),
    )
    for got, want in checks:
        if got != want:
            raise AssertionError("skip carry costs drifted from the table")
    return TableDoc(
        table_id="IX",
        title="skip carry circuitry cost, 4-bit blocks vs one 5-trit block",
        headers=("", "Pi", "Nand+inverter", "Mux", "4-bit CS", "8-bit 5-trit CS"),
        rows=PRINTED_CSA_ROWS,
        notes=(
            'the binary Pi cell is printed "24i"; read as 24 (4 digits at 6 '
            "transistors, consistent with the 48 total).",
            "computed totals: binary 48 per 4-bit block, 96 for 8 bits; "
            "ternary 116 for one 5-trit block. All match.",
        ),
    )


_TABLES = {
    "I": table_i,
    "II": table_ii,
    "III": table_iii,
    "IV": table_iv,
    "V": table_v,
    "VI": table_vi,
    "VII": table_vii,
    "VIII": table_viii,
    "IX": table_ix,
}


def get_table(table_id: str) -> TableDoc:
    key = table_id.strip().upper()
    if key not in _TABLES:
        raise KeyError(f"unknown table {table_id!r}; pick one of {', '.join(TABLE_IDS)}")
    return _TABLES[key]()


# --- the full comparison document ------------------------------------------


def _pairing_section(n_bits: int, wire_m: int, mul_m: int) -> TableDoc:
    ir = information_ratio()
    return TableDoc(
        table_id="pairing",
        title="width pairing",
        headers=("quantity", "value"),
        rows=(
            ("bits (N)", str(n_bits)),
            ("raw N/log2(3)", f"{n_bits / ir:.3f}"),
            ("trit wires (lookup)", str(wire_m)),
            ("trit multiplier width (half-up)", str(mul_m)),
        ),
        notes=(
            "adder comparisons use the wire pairing; multiplier comparisons "
            "use the half-up capability pairing.",
        ),
    )


def _mul_section(n_bits: int, ha_policy: str) -> tuple[TableDoc, tuple[Discrepancy, ...]]:
    cmp = compare_multipliers(n_bits, ha_policy)
    rows_b = dict(multiplier_count_rows(cmp.binary))
    rows_t = dict(multiplier_count_rows(cmp.ternary))
    ratio_by_label = {
        "Ai*Bi": format_ratio(cmp.elementary_ratio, 2),
        "Total equivalent FA": format_ratio(cmp.equivalent_fa_ratio, 2),
    }
    printed = PRINTED_MUL.get(n_bits)
    rows = []
    deviations: list[Discrepancy] = []
    for label in MUL_ROW_LABELS:
        row = [label, rows_b[label], rows_t[label], ratio_by_label.get(label, "")]
        if printed is not None:
            pb, pt, pr = printed["rows"][label]
            row += [pb, pt, pr]
            for side, got, want in (("binary", rows_b[label], pb), ("ternary", rows_t[label], pt)):
                if got != want:
                    deviations.append(
                        Discrepancy(
                            key=f"mul-{n_bits}-{side}-{label.lower().replace(' ', '-')}",
                            printed=want,
                            computed=got,
                            note=f"{side} {label} for the {n_bits}-bit comparison "
                            "differs from the printed tally (unpinned adder "
                            "scheduling); equivalent-FA stays within tolerance.",
                        )
                    )
            if ratio_by_label.get(label) and pr and ratio_by_label[label] != pr:
                deviations.append(
                    Discrepancy(
                        key=f"mul-{n_bits}-ratio-{label.lower().replace(' ', '-')}",
                        printed=pr,
                        computed=ratio_by_label[label],
                        note=f"{label} ratio recomputed from this scheduler's counts.",
                    )
                )
        rows.append(tuple(row))
    headers = ("", "Binary", "Ternary", "Binary/Ternary")
    if printed is not None:
        headers += ("Binary (printed)", "Ternary (printed)", "Ratio (printed)")
    stage_note = (
        f"binary stage rows: {list(cmp.binary.stage_rows)}; "
        f"ternary stage rows: {list(cmp.ternary.stage_rows)}."
    )
    return (
        TableDoc(
            table_id="multiplier",
            title=f"multiplier cell counts: {n_bits}x{n_bits} bit vs "
            f"{cmp.m_trits}x{cmp.m_trits} trit",
            headers=headers,
            rows=tuple(rows),
            notes=(stage_note,),
        ),
        tuple(deviations),
    )


def _adder_section(n_bits: int, wire_m: int) -> TableDoc:
    rows = []
    for arch in (AdderArch("cpa"), AdderArch("cla"), AdderArch("csa")):
        sb = adder_summary(arch, 2, n_bits)
        st = adder_summary(arch, 3, wire_m)
        rows.append(
            (
                arch.name,
                str(sb.fa_count),
                str(st.fa_count),
                format_ratio(sb.fa_count / st.fa_count, 2),
                str(sb.carry_block_count),
                str(st.carry_block_count),
            )
        )
    return TableDoc(
        table_id="adders",
        title=f"adder full-adder counts: {n_bits} bits vs {wire_m} trits",
        headers=(
            "arch",
            "binary FA",
            "ternary FA",
            "FA ratio (b/t)",
            "binary blocks",
            "ternary blocks",
        ),
        rows=tuple(rows),
        notes=("lookahead and skip blocks default to 4 bits / 5 trits.",),
    )


def _cost_section(
    n_bits: int, wire_m: int, mul_m: int, preset: str, ha_policy: str
) -> tuple[TableDoc, TableDoc]:
    table = builtin_cost_table(preset)
    p = PRESETS[preset]
    cpa_b = n_bits * p.binary_fa
    cpa_t = wire_m * p.ternary_fa
    cla_b = cla_carry_cost(2, n_bits, None, table).total
    cla_t = cla_carry_cost(3, wire_m, None, table).total
    csa_b = csa_skip_cost(2, n_bits, None, table).total
    csa_t = csa_skip_cost(3, wire_m, None, table).total
    mul_cells_b = circuit_cost(count_cells(build_multiplier(2, n_bits, ha_policy)), table)
    mul_cells_t = circuit_cost(count_cells(build_multiplier(3, mul_m)), table)
    elem_b = n_bits * n_bits * table.cost("bit_mul")
    elem_t = mul_m * mul_m * table.cost("trit_mul")
    rows = (
        ("1-digit FA", str(p.binary_fa), str(p.ternary_fa)),
        ("1-digit multiplier", str(table.cost("bit_mul")), str(table.cost("trit_mul"))),
        ("CPA (FA chain)", str(cpa_b), str(cpa_t)),
        ("CLA carry circuitry", str(cla_b), str(cla_t)),
        ("CLA total", str(cpa_b + cla_b), str(cpa_t + cla_t)),
        ("CSA skip circuitry", str(csa_b), str(csa_t)),
        ("CSA total", str(cpa_b + csa_b), str(cpa_t + csa_t)),
        ("elementary multipliers", str(elem_b), str(elem_t)),
        ("multiplier, all cells", str(mul_cells_b), str(mul_cells_t)),
    )
    cost_doc = TableDoc(
        table_id="transistors",
        title=f"transistor totals under preset {preset!r}",
        headers=("circuit", "binary", "ternary"),
        rows=rows,
        notes=(
            f"adders use the wire pairing ({n_bits} bits vs {wire_m} trits); "
            f"multipliers use the capability pairing ({n_bits} vs {mul_m}).",
        ),
    )
    ratio_rows = [
        ("1-digit FA, ternary/binary", format_ratio(ratio_report(p.ternary_fa, p.binary_fa), 1)),
        (
            "1-digit multiplier, ternary/binary",
            format_ratio(ratio_report(table.cost("trit_mul"), table.cost("bit_mul")), 1),
        ),
        ("CPA, ternary/binary", format_ratio(ratio_report(cpa_t, cpa_b), 2)),
        ("CLA carry, ternary/binary", format_ratio(ratio_report(cla_t, cla_b), 2)),
        ("CSA skip, ternary/binary", format_ratio(ratio_report(csa_t, csa_b), 2)),
        (
            "elementary multipliers, ternary/binary",
            format_ratio(ratio_report(elem_t, elem_b), 2),
        ),
        (
            "multiplier all cells, ternary/binary",
            format_ratio(ratio_report(mul_cells_t, mul_cells_b), 2),
        ),
    ]
    ratio_doc = TableDoc(
        table_id="ratios",
        title="cost ratios",
        headers=("quantity", "ratio"),
        rows=tuple(ratio_rows),
        notes=(),
    )
    return cost_doc, ratio_doc


def _discrepancy_section(entries: tuple[Discrepancy, ...]) -> TableDoc:
    rows = tuple((d.key, d.printed, d.computed, d.note) for d in entries)
    return TableDoc(
        table_id="discrepancies",
        title="discrepancy appendix (always emitted)",
        headers=("key", "printed", "computed", "note"),
        rows=rows,
        notes=() if rows else ("no discrepancies recorded.",),
    )


def compare_document(
    n_bits: int, preset: str = DEFAULT_PRESET, ha_policy: str = "eager"
) -> CompareDoc:
    """Assemble the full comparison for one bit width.

    Sections: width pairing, multiplier cell counts (with printed values
    beside them when available), adder counts, transistor totals, ratios,
    and the discrepancy appendix.
    """
    if n_bits < 2:
        raise ValueError("n_bits must be >= 2")
    if preset not in PRESETS:
        raise ValueError(f"unknown cost preset {preset!r}")
    wire_m = trit_width_for_bit_width(n_bits)
    mul_m = equivalent_trit_width(n_bits)
    mul_doc, deviations = _mul_section(n_bits, ha_policy)
    cost_doc, ratio_doc = _cost_section(n_bits, wire_m, mul_m, preset, ha_policy)
    discrepancies = list(STANDING_DISCREPANCIES) + list(deviations)
    if wire_m != mul_m:
        discrepancies.append(
            Discrepancy(
                key=f"pairing-{n_bits}",
                printed=f"wire table: {n_bits} -> {wire_m}",
                computed=f"capability pairing: {n_bits} -> {mul_m}",
                note="the wire lookup and the half-up capability pairing "
                "disagree at this width; multipliers use the latter.",
            )
        )
    sections = (
        _pairing_section(n_bits, wire_m, mul_m),
        mul_doc,
        _adder_section(n_bits, wire_m),
        cost_doc,
        ratio_doc,
        _discrepancy_section(tuple(discrepancies)),
    )
    return CompareDoc(
        n_bits=n_bits,
        wire_trits=wire_m,
        mul_trits=mul_m,
        preset=preset,
        ha_policy=ha_policy,
        sections=sections,
        discrepancies=tuple(discrepancies),
    )
