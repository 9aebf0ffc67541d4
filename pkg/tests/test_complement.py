import pytest

from mergedjohnson.complement import (build_cocycle_data, build_pointed_psl28,
                                      complement_elements,
                                      complement_vertex_group,
                                      frobenius_class_action, global_flip,
                                      orbit_signature, vertex_permutation)
from mergedjohnson.johnson import build_graph
from mergedjohnson.verify import is_automorphism


@pytest.fixture(scope="module")
def pointed():
    return build_pointed_psl28()


@pytest.fixture(scope="module")
def datas(pointed):
    return {label: build_cocycle_data(label, pointed) for label in range(4)}


def test_pointed_group(pointed):
    assert pointed.group.degree == 10
    assert pointed.group.order == 504
    # the tenth point is fixed by the whole group
    assert all(g.images[9] == 9 for g in pointed.group.generators)


def test_split_complement_has_two_orbits(datas):
    assert orbit_signature(datas[0]) == (126, 126)


@pytest.mark.parametrize("label", [1, 2, 3])
def test_twisted_complements_are_2_regular(datas, label):
    group = complement_vertex_group(datas[label])
    assert group.order == 504
    assert orbit_signature(datas[label]) == (252,)
    assert group.regularity_degree() == 2


def test_complement_element_count(datas):
    assert len(complement_elements(datas[1])) == 504


@pytest.mark.parametrize("I", [(1, 4), (2, 3), (1, 4, 5), (2, 3, 5)])
def test_twisted_complement_preserves_listed_merges(datas, I):
    graph = build_graph(10, 5, frozenset(I))
    group = complement_vertex_group(datas[1])
    assert all(is_automorphism(g, graph) for g in group.generators)


def test_twisted_complement_breaks_other_merges(datas):
    graph = build_graph(10, 5, frozenset({1, 2}))
    group = complement_vertex_group(datas[1])
    assert not all(is_automorphism(g, graph) for g in group.generators)


def test_frobenius_cycles_nonzero_classes(datas):
    action = {label: frobenius_class_action(datas[label]) for label in range(4)}
    assert action[0] == 0
    nonzero = {action[label] for label in (1, 2, 3)}
    assert nonzero == {1, 2, 3}
    # fixed-point-free on the nonzero classes: a 3-cycle
    assert all(action[label] != label for label in (1, 2, 3))


def test_global_flip_commutes_with_action(datas):
    flip = global_flip()
    group = complement_vertex_group(datas[1])
    assert all(flip * g == g * flip for g in group.generators)


def test_vertex_permutation_identity(datas, pointed):
    from mergedjohnson.perms import Permutation
    ident = Permutation.identity(10)
    assert vertex_permutation(datas[1], ident) == Permutation.identity(252)
