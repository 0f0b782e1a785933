from math import comb

import pytest
from hypothesis import given, settings
from hypothesis import strategies as st

import brute
from conftest import table_and_transform, tables
from npnsig.errors import InvalidArity, InvalidSelection
from npnsig.signatures import (
    ALL_SIGNATURES,
    SignatureSelection,
    assemble_msv,
    build_msv,
    compute_signatures,
    local_sensitivities,
    max_sensitivity,
    ocv,
    oiv,
    osdv_split,
    osv_split,
    total_influence,
)
from npnsig.truthtable import TruthTable, apply_np_transform, is_balanced, negate_output

MAJ = TruthTable(3, 0xE8)
X1 = TruthTable(3, 0xAA)
PARITY = TruthTable(3, 0x96)
ONE = TruthTable(3, 0xFF)
ZERO = TruthTable(3, 0x00)


class TestOcv:
    def test_majority(self):
        assert ocv(MAJ, 1) == (1, 1, 1, 3, 3, 3)
        assert ocv(MAJ, 2) == (0, 0, 0, 1, 1, 1, 1, 1, 1, 2, 2, 2)

    def test_projection(self):
        assert ocv(X1, 1) == (0, 2, 2, 2, 2, 4)
        assert ocv(X1, 2) == (0, 0, 0, 0, 1, 1, 1, 1, 2, 2, 2, 2)

    def test_zero_arity(self):
        assert ocv(MAJ, 0) == (4,)

    def test_bad_arity(self):
        with pytest.raises(InvalidArity):
            ocv(MAJ, 4)
        with pytest.raises(InvalidArity):
            ocv(MAJ, -1)

    @given(tables(max_n=6), st.data())
    def test_brute_force(self, t, data):
        k = data.draw(st.integers(0, t.n))
        got = ocv(t, k)
        assert got == brute.ocv(t.bits, t.n, k)
        assert len(got) == comb(t.n, k) << k


class TestInfluence:
    @pytest.mark.parametrize("t,expected", [(MAJ, (2, 2, 2)), (X1, (0, 0, 4)), (PARITY, (4, 4, 4))])
    def test_oiv(self, t, expected):
        assert oiv(t) == expected

    @pytest.mark.parametrize("t,expected", [(MAJ, 6), (ZERO, 0), (PARITY, 12)])
    def test_total(self, t, expected):
        assert total_influence(t) == expected

    @given(tables(max_n=8))
    def test_brute_force(self, t):
        assert oiv(t) == tuple(sorted(brute.influence(t.bits, t.n, i) for i in range(t.n)))
        assert all(0 <= v <= 1 << (t.n - 1) for v in oiv(t))


@pytest.mark.usefixtures("backend")
class TestSensitivity:
    def test_local(self):
        assert local_sensitivities(MAJ)[0b111] == 0
        assert list(local_sensitivities(ZERO)) == [0] * 8
        assert list(local_sensitivities(PARITY)) == [3] * 8

    def test_osv(self):
        assert osv_split(MAJ) == ((0, 0, 2, 2, 2, 2, 2, 2), (0, 2, 2, 2), (0, 2, 2, 2))
        assert osv_split(X1) == ((1,) * 8, (1, 1, 1, 1), (1, 1, 1, 1))
        assert osv_split(ONE) == ((0,) * 8, (), (0,) * 8)

    def test_max(self):
        assert max_sensitivity(MAJ) == (2, 2, 2)
        assert max_sensitivity(PARITY) == (3, 3, 3)
        assert max_sensitivity(ONE) == (0, 0, 0)

    def test_osdv_majority(self):
        osdv, osdv0, osdv1 = osdv_split(MAJ)
        assert osdv == (0, 0, 1, 0, 0, 0, 6, 6, 3, 0, 0, 0)
        assert osdv1 == (0, 0, 0, 0, 0, 0, 0, 3, 0, 0, 0, 0)

    def test_osdv_projection(self):
        osdv, _, osdv1 = osdv_split(X1)
        assert osdv == (0, 0, 0, 12, 12, 4, 0, 0, 0, 0, 0, 0)
        assert osdv1 == (0, 0, 0, 4, 2, 0, 0, 0, 0, 0, 0, 0)

    def test_osdv_parity(self):
        assert osdv_split(PARITY)[0] == (0,) * 9 + (12, 12, 4)

    @given(tables(max_n=6))
    @settings(max_examples=60)
    def test_brute_force(self, t):
        assert list(local_sensitivities(t)) == brute.sens_all(t.bits, t.n)
        assert osdv_split(t) == (
            brute.osdv(t.bits, t.n),
            brute.osdv(t.bits, t.n, 0),
            brute.osdv(t.bits, t.n, 1),
        )


class TestVectorInvariants:
    @given(tables(max_n=8))
    @settings(max_examples=60)
    def test_consistency(self, t):
        v = compute_signatures(t)
        for vec in (v.ocv1, v.ocv2, v.oiv, v.osv, v.osv0, v.osv1):
            assert list(vec) == sorted(vec)
        assert len(v.osv0) + len(v.osv1) == 1 << t.n
        assert tuple(sorted(v.osv0 + v.osv1)) == v.osv
        assert sum(v.oiv) == v.total_influence
        assert sum(v.osv) == 2 * v.total_influence
        for grid, osv in ((v.osdv, v.osv), (v.osdv0, v.osv0), (v.osdv1, v.osv1)):
            for i in range(t.n + 1):
                row = grid[i * t.n : (i + 1) * t.n]
                assert sum(row) == comb(osv.count(i), 2)
        assert all(0 <= s <= t.n for s in v.osv)

    @given(tables(max_n=8))
    @settings(max_examples=60)
    def test_output_negation_swap(self, t):
        v, w = compute_signatures(t), compute_signatures(negate_output(t))
        assert (w.osv1, w.osv0) == (v.osv0, v.osv1)
        assert (w.osdv1, w.osdv0) == (v.osdv0, v.osdv1)
        assert w.oiv == v.oiv and w.osdv == v.osdv and w.osv == v.osv

    @given(table_and_transform(max_n=7))
    @settings(max_examples=100)
    def test_pn_invariance_per_vector(self, pair):
        t, tr = pair
        if tr.out_neg:
            tr = type(tr)(tr.perm, tr.neg_mask, 0)
        v, w = compute_signatures(t), compute_signatures(apply_np_transform(t, tr))
        for name in ("ocv1", "ocv2", "oiv", "osv0", "osv1", "osdv0", "osdv1", "osdv"):
            assert getattr(v, name) == getattr(w, name), name


class TestSelection:
    def test_parse(self):
        assert SignatureSelection.parse("all") == ALL_SIGNATURES
        sel = SignatureSelection.parse("oiv, osv")
        assert sel.names() == ["oiv", "osv"] and str(sel) == "oiv,osv"

    def test_empty(self):
        with pytest.raises(InvalidSelection):
            SignatureSelection(False, False, False, False, False)
        with pytest.raises(InvalidSelection):
            SignatureSelection.parse("")
        with pytest.raises(InvalidSelection):
            SignatureSelection.parse("walsh")

    def test_subsets(self):
        assert len({s.flags for s in SignatureSelection.subsets()}) == 31


@pytest.mark.usefixtures("backend")
class TestMsv:
    def test_negation_pair(self):
        assert build_msv(MAJ) == build_msv(TruthTable(3, 0x17))

    def test_distinguishes_table_rows(self):
        assert build_msv(MAJ) != build_msv(X1)

    def test_layout(self):
        msv = build_msv(TruthTable(3, 0x01))
        seg = msv.segments()
        assert seg["header"] == (3, 1)
        assert seg["ocv1"] == (0, 0, 0, 1, 1, 1)
        assert seg["osv1"] == (3,) and seg["osv0"] == (0, 0, 0, 0, 1, 1, 1)
        assert len(msv) == 2 + 6 + 12 + 3 + 8 + 24

    def test_unbalanced_uses_minority_polarity(self):
        t = TruthTable(3, 0xFE)
        assert build_msv(t).values[1] == 1

    def test_balanced_keeps_lexicographic_minimum(self):
        t = TruthTable(4, 0x0677)  # its complement has the smaller raw vector
        assert is_balanced(t)

        def raw(f):
            v = compute_signatures(f)
            return (4, 8) + v.ocv1 + v.ocv2 + v.oiv + v.osv1 + v.osv0 + v.osdv1 + v.osdv0

        a, b = raw(t), raw(negate_output(t))
        assert b < a
        assert build_msv(t).values == min(a, b)
        assert build_msv(negate_output(t)).values == min(a, b)

    def test_bad_selection(self):
        with pytest.raises(InvalidSelection):
            build_msv(MAJ, "all")

    @given(tables(max_n=7), st.integers(1, 31))
    @settings(max_examples=80)
    def test_matches_assembled(self, t, flags):
        sel = SignatureSelection.from_flags(flags)
        assert build_msv(t, sel) == assemble_msv(t, sel)

    @given(table_and_transform(max_n=8), st.integers(1, 31))
    @settings(max_examples=150)
    def test_npn_invariance(self, pair, flags):
        t, tr = pair
        sel = SignatureSelection.from_flags(flags)
        assert build_msv(t, sel) == build_msv(apply_np_transform(t, tr), sel)

    def test_balanced_pair_with_output_negation(self):
        # balanced table versus the output negation of a transformed copy
        from npnsig.truthtable import NPTransform

        t = TruthTable(4, 0x6B52)
        assert is_balanced(t)
        g = negate_output(apply_np_transform(t, NPTransform((2, 0, 3, 1), 0b0101)))
        assert build_msv(t) == build_msv(g)
