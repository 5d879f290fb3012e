import itertools

import pytest

from radixbench.cells import (
    MAX_AND_ARITY,
    MAX_CARRY_INDEX,
    and_kind,
    bin_full_add,
    bin_half_add,
    bit_mul,
    carry_generate,
    carry_kind,
    carry_lookahead,
    carry_propagate,
    cell_spec,
    known_kinds,
    tern_add3,
    trit_decode,
    trit_mul,
    trit_mul_gates,
    truth_table,
)


def test_bin_full_add_exhaustive():
    for a, b, c in itertools.product((0, 1), repeat=3):
        s, cout = bin_full_add(a, b, c)
        assert s + 2 * cout == a + b + c


def test_bin_half_add_exhaustive():
    for a, b in itertools.product((0, 1), repeat=2):
        s, cout = bin_half_add(a, b)
        assert s + 2 * cout == a + b


def test_tern_add3_exhaustive():
    # carries into a ternary adder are binary, so c is 0 or 1
    for a, b in itertools.product((0, 1, 2), repeat=2):
        for c in (0, 1):
            s, cout = tern_add3(a, b, c)
            assert 0 <= s <= 2 and cout in (0, 1)
            assert s + 3 * cout == a + b + c


def test_tern_add3_domain():
    # three full trits can reach 6, which no trit/carry pair can encode
    with pytest.raises(ValueError):
        tern_add3(2, 2, 2)
    with pytest.raises(ValueError):
        tern_add3(3, 0, 0)


def test_bit_mul():
    for a, b in itertools.product((0, 1), repeat=2):
        assert bit_mul(a, b) == a * b


def test_trit_mul_value():
    for a, b in itertools.product((0, 1, 2), repeat=2):
        p, c = trit_mul(a, b)
        assert p + 3 * c == a * b
        assert 0 <= p <= 2 and c in (0, 1)


def test_trit_mul_gates_matches_arithmetic_form():
    for a, b in itertools.product((0, 1, 2), repeat=2):
        assert trit_mul_gates(a, b) == trit_mul(a, b)


def test_trit_decode():
    assert (trit_decode(0).x1, trit_decode(0).x0) == (0, 0)
    assert (trit_decode(1).x1, trit_decode(1).x0) == (0, 1)
    assert (trit_decode(2).x1, trit_decode(2).x0) == (1, 0)


def test_carry_generate():
    # generate means a+b already reaches the radix, cin cannot matter
    for a, b in itertools.product((0, 1), repeat=2):
        assert carry_generate(2, a, b) == int(a + b >= 2)
    for a, b in itertools.product((0, 1, 2), repeat=2):
        assert carry_generate(3, a, b) == int(a + b >= 3)
    # (2,2) generates even though a+b exceeds the radix
    assert carry_generate(3, 2, 2) == 1


def test_carry_propagate():
    for a, b in itertools.product((0, 1), repeat=2):
        assert carry_propagate(2, a, b) == int(a + b == 1)
    for a, b in itertools.product((0, 1, 2), repeat=2):
        assert carry_propagate(3, a, b) == int(a + b == 2)


def test_generate_propagate_disjoint_and_sufficient():
    # g and p never overlap, and g+p*cin predicts the true carry out
    for radix in (2, 3):
        digits = range(radix)
        for a, b in itertools.product(digits, repeat=2):
            g = carry_generate(radix, a, b)
            p = carry_propagate(radix, a, b)
            assert not (g and p)
            for cin in (0, 1):
                want = int(a + b + cin >= radix)
                assert g | (p & cin) == want


def test_carry_lookahead_matches_ripple():
    # every lookahead equation equals the carry a ripple chain would produce
    for k in range(1, MAX_CARRY_INDEX + 1):
        for bits in itertools.product((0, 1), repeat=2 * k + 1):
            gs, ps, c0 = bits[:k], bits[k : 2 * k], bits[2 * k]
            ok = all(not (g and p) for g, p in zip(gs, ps))
            if not ok:
                continue
            c = c0
            for g, p in zip(gs, ps):
                c = g | (p & c)
            assert carry_lookahead(k, gs, ps, c0) == c


def test_and_and_carry_kind_names():
    assert and_kind(2) == "and2"
    assert and_kind(MAX_AND_ARITY) == f"and{MAX_AND_ARITY}"
    assert carry_kind(1) == "carry1"
    assert carry_kind(MAX_CARRY_INDEX) == f"carry{MAX_CARRY_INDEX}"
    with pytest.raises(ValueError):
        and_kind(1)
    with pytest.raises(ValueError):
        and_kind(MAX_AND_ARITY + 1)
    with pytest.raises(ValueError):
        carry_kind(0)
    with pytest.raises(ValueError):
        carry_kind(MAX_CARRY_INDEX + 1)


def test_registry_is_consistent():
    for kind in known_kinds():
        spec = cell_spec(kind)
        assert spec.kind == kind
        assert len(spec.input_names) == len(spec.ports.inputs)
        assert len(spec.output_names) == len(spec.ports.outputs)
        # the scalar function agrees with the declared port shape everywhere
        domains = [range(int(r)) for r in spec.ports.inputs]
        for ins in itertools.product(*domains):
            outs = spec.fn(*ins)
            assert len(outs) == len(spec.ports.outputs)
            for v, r in zip(outs, spec.ports.outputs):
                assert 0 <= v < int(r)


def test_cell_spec_unknown_kind():
    with pytest.raises(KeyError):
        cell_spec("nand17")


def test_ternary_adder_variants_add():
    # mixed-input full adder and half adder cells all compute a+b(+c)
    cases = {
        "tern_fa": (3, 3, 2),
        "tern_fa_tbb": (3, 2, 2),
        "tern_fa_bbb": (2, 2, 2),
        "tern_ha": (3, 3),
        "tern_ha_tb": (3, 2),
        "tern_ha_bb": (2, 2),
    }
    for kind, radices in cases.items():
        spec = cell_spec(kind)
        assert tuple(int(r) for r in spec.ports.inputs) == radices
        for ins in itertools.product(*[range(r) for r in radices]):
            outs = spec.fn(*ins)
            total = sum(ins)
            if len(outs) == 2:
                assert outs[0] + 3 * outs[1] == total
            else:
                # the two-bit half adder never carries: max sum is 2
                assert outs == (total,)


def test_mux2():
    spec = cell_spec("mux2")
    for d0, d1, sel in itertools.product((0, 1), repeat=3):
        assert spec.fn(d0, d1, sel) == ((d1,) if sel else (d0,))


def test_truth_table_rows_are_lexicographic():
    tt = truth_table("trit_mul")
    assert len(tt.rows) == 9
    ins = [row[0] for row in tt.rows]
    assert ins == sorted(ins)
    for (a, b), outs in tt.rows:
        assert outs == trit_mul(a, b)


def test_truth_table_csv():
    csv_text = truth_table("bin_ha").to_csv()
    lines = csv_text.strip().splitlines()
    assert lines[0] == "a,b,s,cout"
    assert lines[1:] == ["0,0,0,0", "0,1,1,0", "1,0,1,0", "1,1,0,1"]
