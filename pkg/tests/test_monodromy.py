import itertools

import pytest
from hypothesis import given, settings, strategies as st

from gcover.config import Config
from gcover.errors import InvalidQuery, SearchTooLarge
from gcover.group_core import BUILTIN_NAMES, builtin
from gcover.monodromy import (CoverCountQuery, NodeGluingQuery, commutator_distribution,
                              count_covers, count_homs_brute, count_homs_frobenius,
                              count_with_image_class, find_witness, gluing_factors,
                              iter_tuples, relation_product)

SMALL = [n for n in BUILTIN_NAMES if builtin(n).order <= 6]


def naive_count(g, genus, marks):
    """Direct itertools enumeration, independent of the recursive kernel."""
    pools = [range(g.order)] * (2 * genus) + [sorted(g.classes[c]) for c in marks]
    return sum(1 for t in itertools.product(*pools) if relation_product(g, genus, t) == 0)


@pytest.mark.parametrize("name", SMALL)
def test_brute_equals_frobenius_exhaustive(name):
    g = builtin(name)
    for genus in (0, 1, 2):
        for n in (0, 1, 2):
            for marks in itertools.product(range(len(g.classes)), repeat=n):
                q = CoverCountQuery(g, genus, marks)
                assert count_homs_brute(q).count == count_homs_frobenius(q).count
                q = CoverCountQuery(g, genus, marks, up_to_conjugation=True)
                assert count_homs_brute(q).count == count_homs_frobenius(q).count


def test_kernel_against_naive_enumeration():
    s3 = builtin("S3")
    for genus, marks in [(1, ()), (1, (1,)), (1, (2, 2)), (0, (1, 1, 1)), (2, (2,))]:
        q = CoverCountQuery(s3, genus, marks)
        assert count_homs_brute(q).count == naive_count(s3, genus, marks)


def test_known_counts():
    s3 = builtin("S3")
    assert count_homs_brute(CoverCountQuery(s3, 1)).count == 18
    assert count_homs_frobenius(CoverCountQuery(s3, 1)).count == 18
    assert count_homs_frobenius(CoverCountQuery(builtin("mu3"), 2)).count == 81
    for name in SMALL:
        assert count_homs_brute(CoverCountQuery(builtin(name), 0)).count == 1
    q = CoverCountQuery(s3, 2)
    assert count_homs_brute(q).count == count_homs_frobenius(q).count == 486


@pytest.mark.parametrize("i", [1, 2, 3])
def test_mu2_full_image(i):
    mu2 = builtin("mu2")
    q = CoverCountQuery(mu2, i, (), mu2.full_class)
    assert count_homs_brute(q).count == 2 ** (2 * i) - 1
    assert count_with_image_class(q).count == 2 ** (2 * i) - 1


def test_s3_genus_one_up_to_conjugation():
    s3 = builtin("S3")
    by_class = {s3.subgroup_class_names[h]: count_with_image_class(
        CoverCountQuery(s3, 1, (), h, True)).count for h in range(4)}
    assert by_class == {"1": 1, "T": 3, "N": 4, "S3": 0}
    assert count_homs_brute(CoverCountQuery(s3, 1, up_to_conjugation=True)).count == 8


def test_trivial_image_class():
    for name in SMALL:
        g = builtin(name)
        for genus in range(4):
            assert count_with_image_class(CoverCountQuery(g, genus, (), 0)).count == 1
    s3 = builtin("S3")
    with pytest.raises(InvalidQuery):
        CoverCountQuery(s3, 1, (1,), 0)


@pytest.mark.parametrize("inner", ["convolution", "frobenius", "brute_force"])
def test_moebius_inner_methods_agree_with_brute(inner):
    s3 = builtin("S3")
    for genus, marks in [(1, ()), (2, ()), (1, (1, 1)), (2, (2,)), (0, (1, 1, 2))]:
        for h in range(len(s3.subgroup_classes)):
            if h == 0 and any(marks):
                continue
            for conj in (False, True):
                q = CoverCountQuery(s3, genus, marks, h, conj)
                assert count_with_image_class(q, inner).count == count_homs_brute(q).count


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2), st.data())
def test_image_classes_sum_to_total(name, genus, data):
    g = builtin(name)
    n = data.draw(st.integers(0, 2))
    marks = tuple(data.draw(st.integers(0, len(g.classes) - 1)) for _ in range(n))
    total = count_homs_frobenius(CoverCountQuery(g, genus, marks)).count
    parts = sum(count_with_image_class(CoverCountQuery(g, genus, marks, h)).count
                for h in range(len(g.subgroup_classes)) if h or not any(marks))
    assert parts == total


@settings(max_examples=40, deadline=None)
@given(st.sampled_from(SMALL), st.integers(0, 2), st.data())
def test_mark_inversion_symmetry(name, genus, data):
    g = builtin(name)
    n = data.draw(st.integers(0, 3))
    marks = tuple(data.draw(st.integers(0, len(g.classes) - 1)) for _ in range(n))
    flipped = tuple(g.inverse_class[c] for c in reversed(marks))
    a = count_covers(CoverCountQuery(g, genus, marks))
    b = count_covers(CoverCountQuery(g, genus, flipped))
    assert a.count == b.count


def test_convolution_reaches_high_genus():
    s3 = builtin("S3")
    d = commutator_distribution(s3, range(6), 13)
    assert sum(d.values()) == 6 ** 26
    # Frobenius with no marks: |Hom| = |G|^(2g-1) sum chi(1)^(2-2g)
    q = CoverCountQuery(s3, 13)
    assert d[0] == count_homs_frobenius(q).count


def test_search_cutoff():
    q = CoverCountQuery(builtin("S3"), 3)
    with pytest.raises(SearchTooLarge) as info:
        count_homs_brute(q, Config(brute_force_cutoff=1000))
    assert info.value.required == 6 ** 6
    assert count_homs_brute(q, Config(brute_force_cutoff=6 ** 6)).count > 0


def test_parallel_matches_serial(monkeypatch):
    import gcover.monodromy as mono
    monkeypatch.setattr(mono, "_PARALLEL_THRESHOLD", 1)
    q = CoverCountQuery(builtin("S3"), 2, (1,))
    serial = count_homs_brute(q, Config(threads=1)).count
    assert count_homs_brute(q, Config(threads=2)).count == serial


def test_gluing_factors():
    s3 = builtin("S3")
    assert gluing_factors(NodeGluingQuery(s3, 0)).count == 6
    assert gluing_factors(NodeGluingQuery(s3, 0)).orbit_count == 3
    assert gluing_factors(NodeGluingQuery(s3, 1)).count == 2
    assert gluing_factors(NodeGluingQuery(s3, 2)).count == 3


def test_witness_is_padded_and_valid():
    s3 = builtin("S3")
    t = s3.element("(12)")
    w = find_witness(s3, 4, [{t}, {t}], frozenset(range(6)))
    assert w.found_at_genus == 1 and len(w.tuple) == 2 * 4 + 2
    assert relation_product(s3, 4, w.tuple) == 0
    assert s3.generated(w.tuple) == frozenset(range(6))
    assert find_witness(s3, 1, [], frozenset(range(6))) is None


def test_iter_tuples_counts():
    s3 = builtin("S3")
    assert sum(1 for _ in iter_tuples(s3, 1, [])) == 18


def test_auto_falls_back_without_character_table():
    from gcover.group_core import build_group
    v4 = build_group([[0, 1, 2, 3], [1, 0, 3, 2], [2, 3, 0, 1], [3, 2, 1, 0]])
    r = count_covers(CoverCountQuery(v4, 1))
    # abelian: every pair commutes
    assert r.count == 16 and r.method == "moebius"
