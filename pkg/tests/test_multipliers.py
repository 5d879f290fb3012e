import numpy as np
import pytest

from radixbench.multipliers import (
    Dot,
    DotRow,
    build_multiplier,
    build_multiplier_detailed,
    compare_multipliers,
    dump_rows,
    multiplier_layout,
    multiplier_oracle,
    multiplier_summary,
    stage_value_sums,
)
from radixbench.netlist import exhaustive_check

# frozen scheduler tallies for the published sizes; any change to the
# grouping rules must be deliberate enough to update these
EXPECTED = {
    # (radix, width, policy): stages, elementary, red fa/ha, fin fa/ha, equivalent
    (2, 8, "eager"): ((8, 6, 4, 3, 2), 64, 38, 15, 9, 2, 55.5),
    (2, 8, "lazy"): ((8, 6, 4, 3, 2), 64, 38, 8, 9, 6, 54.0),
    (3, 5, "eager"): ((10, 7, 5, 3, 2), 25, 28, 14, 4, 1, 39.5),
    (2, 12, "eager"): ((12, 8, 6, 4, 3, 2), 144, 102, 34, 17, 1, 136.5),
    (3, 8, "eager"): ((16, 10, 7, 5, 3, 2), 64, 77, 44, 9, 1, 108.5),
    (2, 16, "eager"): ((16, 11, 8, 6, 4, 3, 2), 256, 200, 53, 23, 2, 250.5),
    (3, 10, "eager"): ((20, 13, 9, 6, 4, 3, 2), 100, 132, 67, 12, 1, 178.0),
}


def test_dot_row_validation():
    with pytest.raises(ValueError):
        DotRow((Dot(2, 2, 0), Dot(1, 2, 1)))
    with pytest.raises(ValueError):
        DotRow((Dot(1, 2, 0), Dot(1, 2, 1)))


def test_dot_row_radix_class():
    assert DotRow((Dot(0, 2, 0), Dot(1, 2, 1))).radix_class == 2
    assert DotRow((Dot(0, 2, 0), Dot(1, 3, 1))).radix_class == 3


def test_build_argument_validation():
    with pytest.raises(ValueError):
        build_multiplier(2, 0)
    with pytest.raises(ValueError):
        build_multiplier(4, 4)
    with pytest.raises(ValueError):
        build_multiplier(2, 4, "greedy")


def test_partial_product_rows():
    # binary: one row per multiplier bit; ternary: product row plus carry row
    b = build_multiplier_detailed(2, 3)
    assert dump_rows(b.stages[0]) == "B 0 1 2\nB 1 2 3\nB 2 3 4"
    t = build_multiplier_detailed(3, 2)
    assert dump_rows(t.stages[0]) == "T 0 1\nB 1 2\nT 1 2\nB 2 3"


def test_reduction_steps_are_consistent():
    for radix, width in [(2, 8), (3, 5)]:
        b = build_multiplier_detailed(radix, width)
        assert len(b.stages) == len(b.steps) + 1
        for step, before, after in zip(b.steps, b.stages, b.stages[1:]):
            assert step.rows_before == len(before)
            assert step.rows_after == len(after)
        assert len(b.stages[-1]) <= 2
        assert b.summary.stage_rows == tuple(len(s) for s in b.stages)


def test_frozen_schedule_tallies():
    for (radix, width, policy), want in EXPECTED.items():
        s = multiplier_summary(radix, width, policy)
        got = (
            s.stage_rows,
            s.elementary_mul_count,
            s.reduction_fa,
            s.reduction_ha,
            s.final_fa,
            s.final_ha,
            s.equivalent_fa,
        )
        assert got == want, (radix, width, policy, got)
        assert s.total_fa == s.reduction_fa + s.final_fa
        assert s.total_ha == s.reduction_ha + s.final_ha
        assert s.equivalent_fa == s.total_fa + s.total_ha / 2


def test_elementary_count_is_width_squared():
    for radix in (2, 3):
        for width in range(1, 7):
            s = multiplier_summary(radix, width)
            assert s.elementary_mul_count == width * width


def test_exhaustive_small_multipliers():
    for radix, widths in [(2, range(1, 6)), (3, range(1, 4))]:
        for width in widths:
            for policy in ("eager", "lazy") if radix == 2 else ("eager",):
                circuit = build_multiplier(radix, width, policy)
                report = exhaustive_check(
                    circuit, multiplier_oracle(), multiplier_layout(radix, width)
                )
                assert report.passed, (radix, width, policy, report.counterexample)
                assert report.mode == "exhaustive"


def test_lazy_policy_only_changes_binary_counts():
    eager = multiplier_summary(3, 5, "eager")
    lazy = multiplier_summary(3, 5, "lazy")
    assert eager == lazy


def test_stage_value_conservation_full_enumeration():
    # every reduction stage preserves sum(dot * radix^weight) == a*b
    for radix, width in [(2, 4), (3, 3)]:
        build = build_multiplier_detailed(radix, width)
        layout = multiplier_layout(radix, width)
        n = layout.space()
        idx = np.arange(n, dtype=np.int64)
        size = radix**width
        a_vals, b_vals = idx % size, idx // size
        arrays = {}
        for vals, prefix in [(a_vals, "a"), (b_vals, "b")]:
            for j in range(width):
                arrays[f"{prefix}{j}"] = ((vals // radix**j) % radix).astype(np.uint8)
        want = a_vals * b_vals
        for stage_sum in stage_value_sums(build, arrays):
            assert np.array_equal(stage_sum, want)


def test_compare_multipliers_pairs_by_capability():
    c = compare_multipliers(8)
    assert (c.n_bits, c.m_trits) == (8, 5)
    assert c.elementary_ratio == 64 / 25
    assert c.equivalent_fa_ratio == pytest.approx(55.5 / 39.5)
    assert c.ir_squared == pytest.approx(2.512, abs=1e-3)
    assert compare_multipliers(16).m_trits == 10
    with pytest.raises(ValueError):
        compare_multipliers(1)


def test_product_width_is_twice_the_operand_width():
    for radix, width in [(2, 5), (3, 4)]:
        circuit = build_multiplier(radix, width)
        names = [p.name for p in circuit.outputs]
        assert names == [f"p{w}" for w in range(2 * width)]
