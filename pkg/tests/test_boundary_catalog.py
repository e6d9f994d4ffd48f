import copy

import pytest

from gcover.boundary_catalog import (BoundaryLabel, _decide_type0, candidate_labels, catalog,
                                     commutator_necessary_condition, decide, replay_witness)
from gcover.config import Config
from gcover.errors import InvalidQuery
from gcover.group_core import builtin


def key(lab):
    g = lab.group
    return lab.i, lab.node_name, g.subgroup_class_names[lab.h1], g.subgroup_class_names[lab.h2]


@pytest.fixture(scope="module")
def s3_g6():
    return catalog(6, builtin("S3"), include_empty=True)


def test_trivial_group_gives_classical_labels():
    labels = catalog(5, builtin("trivial"))
    assert [lab.name for lab in labels] == ["Delta_{0}^{1,1}", "Delta_{1}^{1,1}",
                                            "Delta_{2}^{1,1}"]


def test_type0_nontrivial_nodes(s3_g6):
    found = {key(lab)[1:] for lab in s3_g6 if lab.kind == "type_0" and lab.nonempty
             and lab.node_class}
    assert found == {("c2", "T", "T"), ("c2", "S3", "S3"), ("c3", "N", "N"), ("c3", "S3", "S3")}
    empty = {key(lab)[1:] for lab in s3_g6 if lab.kind == "type_0" and lab.nonempty is False}
    assert ("c2", "S3", "T") in empty and ("c3", "S3", "N") in empty
    # a trivial normalization cannot glue to a connected S3-cover
    assert ("1", "S3", "1") in empty


def test_type_i_twisted_nodes(s3_g6):
    for i in (1, 2, 3):
        twisted = {key(lab)[1:] for lab in s3_g6 if lab.i == i and lab.nonempty
                   and lab.node_class}
        assert twisted == {("c3", "S3", "S3")}


def test_type_i_trivial_nodes(s3_g6):
    for i in (2, 3):
        trivial = {key(lab)[2:] for lab in s3_g6 if lab.i == i and lab.nonempty
                   and not lab.node_class}
        assert len(trivial) == 16
    # genus-1 sides with trivial mark have commuting monodromy
    one = {key(lab)[2:] for lab in s3_g6 if lab.i == 1 and lab.nonempty and not lab.node_class}
    assert len(one) == 12 and not any(h1 == "S3" for h1, _ in one)


def test_witnesses_replay(s3_g6):
    for lab in s3_g6:
        if lab.nonempty:
            assert replay_witness(lab), lab.name
        else:
            assert lab.verdict.certificate


def test_tampered_witness_fails(s3_g6):
    lab = copy.deepcopy(next(lab for lab in s3_g6
                             if lab.nonempty and lab.kind == "type_0" and lab.node_class))
    assert replay_witness(lab)
    lab.verdict.witness["tuple"][-2] = "1"
    assert not replay_witness(lab)


def test_inversion_invariance():
    for name in ("S3", "mu3", "mu4", "mu6"):
        g = builtin(name)
        for lab in candidate_labels(4, g):
            if lab.kind != "type_0":
                continue
            a = decide(lab).status
            # decide through each member of the inverse-symmetric class
            for c in g.invsym_classes[lab.node_type]:
                b = _decide_type0(g, 4, c, lab.h1, lab.h2, Config()).status
                assert a == b, (name, lab.name)


def test_commutator_condition():
    s3 = builtin("S3")
    full = s3.full_class
    assert commutator_necessary_condition(BoundaryLabel(s3, 4, "type_0", 0, full, full, 0))
    assert commutator_necessary_condition(BoundaryLabel(s3, 4, "type_0", 0, full, full, 2))
    assert not commutator_necessary_condition(BoundaryLabel(s3, 4, "type_0", 0, full, full, 1))
    with pytest.raises(InvalidQuery):
        commutator_necessary_condition(BoundaryLabel(s3, 4, "type_i", 1, full, full, 0))


def test_diagnostic_disagreement_is_reported(s3_g6):
    lab = next(lab for lab in s3_g6 if key(lab) == (0, "c2", "S3", "S3"))
    assert lab.nonempty
    assert lab.verdict.commutator_condition is False
    assert lab.verdict.to_dict()["diagnostic_disagrees"] is True


def test_component_restriction():
    s3 = builtin("S3")
    labels = catalog(6, s3, s3.full_class)
    assert all(lab.h1 == s3.full_class for lab in labels if lab.kind == "type_0")
    names = {key(lab) for lab in labels}
    # N is normal, so two N-sides glue to an abelian total
    assert (2, "1", "N", "N") not in names
    assert (2, "1", "T", "N") in names and (2, "1", "T", "T") in names
    for lab in labels:
        assert replay_witness(lab)
        assert lab.verdict.witness.get("total_image", "S3") == "S3"


def test_genus_thirteen_sizes():
    labels = catalog(13, builtin("S3"))
    assert sum(1 for lab in labels if lab.kind == "type_0") == 12
    assert sum(1 for lab in labels if lab.i == 1) == 13
    assert all(sum(1 for lab in labels if lab.i == i) == 17 for i in range(2, 7))


def test_small_cutoff_makes_verdict_undecided():
    s3 = builtin("S3")
    lab = BoundaryLabel(s3, 6, "type_0", 0, s3.full_class, s3.full_class, 1)
    v = decide(lab, config=Config(brute_force_cutoff=10))
    assert v.status == "undecided"
    assert v.certificate["cutoff"] == 10


def test_genus_bound():
    with pytest.raises(InvalidQuery):
        catalog(1, builtin("S3"))
