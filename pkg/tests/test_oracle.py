import itertools

import pytest
from hypothesis import given, settings

import brute
from conftest import table_and_transform
from npnsig.errors import OracleArityLimit
from npnsig.oracle import canonical_values, enumerate_transforms, exact_classify, npn_canonical
from npnsig.truthtable import TruthTable, all_truth_tables, apply_np_transform


@pytest.mark.parametrize("n,count", [(1, 4), (2, 16), (3, 96), (4, 768)])
def test_transform_count(n, count):
    ts = list(enumerate_transforms(n))
    assert len(ts) == count
    assert len(set(ts)) == count


def test_arity_limit():
    with pytest.raises(OracleArityLimit):
        list(enumerate_transforms(7))
    with pytest.raises(OracleArityLimit):
        npn_canonical(TruthTable(7, 0))


def test_constant():
    assert npn_canonical(TruthTable(3, 0)).representative == TruthTable(3, 0)
    assert npn_canonical(TruthTable(3, 0xFF)).representative == TruthTable(3, 0)


def test_majority_orbit():
    reps = {npn_canonical(TruthTable(3, b)).representative for b in (0xE8, 0x17, 0xD4)}
    assert len(reps) == 1


def test_matches_brute_force_orbit_n3():
    for t in all_truth_tables(3):
        assert npn_canonical(t).representative.bits == min(brute.orbit(t.bits, 3))


def test_recorded_transform_reaches_representative():
    for bits in (0x0001, 0x6B52, 0x16E9, 0x8000, 0x7FFF):
        t = TruthTable(4, bits)
        c = npn_canonical(t)
        assert apply_np_transform(t, c.transform) == c.representative


@given(table_and_transform(min_n=1, max_n=5))
@settings(max_examples=60, deadline=None)
def test_orbit_identity(pair):
    t, tr = pair
    assert npn_canonical(t).representative == npn_canonical(apply_np_transform(t, tr)).representative


def test_batch_matches_single():
    tables = [TruthTable(5, b) for b in (0, 1, 0xDEADBEEF, 0x12345678, 0xFFFF0000)]
    assert canonical_values(tables, 5).tolist() == [npn_canonical(t).representative.bits for t in tables]


@pytest.mark.parametrize("n,classes", [(1, 2), (2, 4), (3, 14)])
def test_small_class_counts(n, classes):
    assert exact_classify(list(all_truth_tables(n))).class_count == classes


@pytest.mark.slow
def test_n4_class_count_and_orbit_sizes():
    exact = exact_classify(list(all_truth_tables(4)))
    assert exact.class_count == 222
    for members in exact.classes:
        assert 768 % len(members) == 0


def test_orbit_sizes_divide_group_order_n3():
    exact = exact_classify(list(all_truth_tables(3)))
    sizes = [len(m) for m in exact.classes]
    assert sum(sizes) == 256
    assert all(96 % s == 0 for s in sizes)
    # brute-force orbits give the same partition
    for members in exact.classes:
        assert set(t.bits for t in members) == brute.orbit(members[0].bits, 3)
