import pytest
from hypothesis import given, strategies as st

from gcover.elliptic_tail import (AutAction, BranchDatum, EllipticCoverClass, FiberPoint,
                                  all_classes, aut_orbits, branch_data_RN, classes_with_image,
                                  genus_by_riemann_hurwitz)
from gcover.errors import InconsistentProfile, InvalidQuery
from gcover.group_core import BUILTIN_NAMES, builtin

ROWS = {"(i)": ("1", "(123)"), "(ii)": ("(123)", "(123)"),
        "(iii)": ("(123)", "(132)"), "(iv)": ("(123)", "1")}


def row_class(s3, row):
    a, b = ROWS[row]
    return EllipticCoverClass.of(s3, s3.element(a), s3.element(b))


def test_four_n_classes():
    s3 = builtin("S3")
    classes = classes_with_image(s3, s3.subgroup_class("N"))
    assert len(classes) == 4
    assert sorted(c.row_label for c in classes) == ["(i)", "(ii)", "(iii)", "(iv)"]
    for row in ROWS:
        assert row_class(s3, row).row_label == row


def test_canonical_pairs():
    s3 = builtin("S3")
    assert [row_class(s3, r).pair for r in ("(i)", "(ii)", "(iii)", "(iv)")] == \
        [(0, 4), (4, 4), (4, 5), (4, 0)]


def test_class_counts_by_image():
    s3 = builtin("S3")
    assert [len(classes_with_image(s3, h)) for h in range(4)] == [1, 3, 4, 0]
    assert classes_with_image(s3, 0)[0].pair == (0, 0)


def test_order_six_orbits():
    s3 = builtin("S3")
    classes = classes_with_image(s3, s3.subgroup_class("N"))
    orbits = aut_orbits(classes, AutAction(6))
    cycles = {tuple(c.row_label for c in o.members) for o in orbits}
    assert cycles == {("(i)", "(ii)", "(iv)"), ("(iii)",)}
    a6 = AutAction(6)
    assert a6.apply(row_class(s3, "(i)")).row_label == "(ii)"
    assert a6.apply(row_class(s3, "(ii)")).row_label == "(iv)"
    assert a6.apply(row_class(s3, "(iv)")).row_label == "(i)"


def test_order_four_orbits():
    s3 = builtin("S3")
    classes = classes_with_image(s3, s3.subgroup_class("N"))
    orbits = aut_orbits(classes, AutAction(4))
    assert {frozenset(c.row_label for c in o.members) for o in orbits} == \
        {frozenset({"(i)", "(iv)"}), frozenset({"(ii)", "(iii)"})}
    assert not any(o.lifting for o in orbits)


@given(st.sampled_from(BUILTIN_NAMES), st.sampled_from([4, 6]))
def test_action_well_defined(name, order):
    g = builtin(name)
    act = AutAction(order)
    for c in all_classes(g):
        img = act.apply(c)
        a, b = img.pair
        assert g.mul(a, b) == g.mul(b, a)
        assert img.image_class == c.image_class
        x = c
        for _ in range(order):
            x = act.apply(x)
        assert x.pair == c.pair


@pytest.mark.parametrize("name", ["mu2", "mu3", "mu4", "mu6"])
def test_abelian_only_trivial_is_fixed(name):
    g = builtin(name)
    fixed = [o.members[0].pair for o in aut_orbits(all_classes(g), AutAction(6)) if o.lifting]
    assert fixed == [(0, 0)]


def test_s3_fixed_classes():
    s3 = builtin("S3")
    fixed = [o.members[0] for o in aut_orbits(all_classes(s3), AutAction(6)) if o.lifting]
    assert [c.pair for c in fixed] == [(0, 0), (4, 5)]
    assert fixed[1].row_label == "(iii)"


def test_branch_data():
    branch, degree = branch_data_RN()
    assert degree == 4
    assert [b.base_point for b in branch] == ["E4", "E6", "E0"]
    assert [len(b.fiber) for b in branch] == [2, 2, 2]
    assert [sorted(p.ramification for p in b.fiber) for b in branch] == [[2, 2], [1, 3], [1, 3]]
    assert sum(b.ramification for b in branch) == 6
    assert [b.local_picture for b in branch] == ["(1/2,1/2)", "(1/3,1/3)", "(1,1/3)"]
    assert genus_by_riemann_hurwitz(degree, 0, branch) == 0


def test_riemann_hurwitz_simple_cases():
    assert genus_by_riemann_hurwitz(1, 0, []) == 0
    assert genus_by_riemann_hurwitz(2, 1, []) == 1
    # hyperelliptic: double cover of P^1 with 2g+2 branch points
    pts = [BranchDatum(f"p{k}", (FiberPoint("q", 2),)) for k in range(8)]
    assert genus_by_riemann_hurwitz(2, 0, pts) == 3


def test_riemann_hurwitz_errors():
    with pytest.raises(InconsistentProfile):
        genus_by_riemann_hurwitz(2, 0, [BranchDatum("p", (FiberPoint("q", 3),))])
    with pytest.raises(InconsistentProfile):
        genus_by_riemann_hurwitz(2, 0, [BranchDatum("p", (FiberPoint("q", 2),))])
    with pytest.raises(InconsistentProfile):
        genus_by_riemann_hurwitz(2, 0, [])


def test_invalid_inputs():
    s3 = builtin("S3")
    with pytest.raises(InvalidQuery):
        AutAction(3)
    with pytest.raises(InvalidQuery):
        EllipticCoverClass.of(s3, s3.element("(12)"), s3.element("(13)"))
