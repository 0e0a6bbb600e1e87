import itertools

import pytest

from detlab.errors import InvalidTable, NoInverses
from detlab.groups import (
    AlgebraElem,
    FiniteMonoidTable,
    augmentation,
    cyclic_group,
    direct_product,
    generic_element,
    monoid_from_permutations,
)
from detlab.rings import Integers


def test_cyclic_group_structure():
    G = cyclic_group(4)
    assert G.is_group
    assert G.order(1) == 4
    assert G.power(1, 5) == 1


def test_nonassociative_table_names_triple():
    # unital but (1*2)*1 = 1 while 1*(2*1) = 2
    table = [[0, 1, 2], [1, 2, 2], [2, 1, 2]]
    with pytest.raises(InvalidTable, match="associativ"):
        FiniteMonoidTable(3, 0, table)


def test_monoid_without_inverses():
    # {1, 0} under multiplication
    M = FiniteMonoidTable(2, 0, [[0, 1], [1, 1]])
    assert not M.is_group
    with pytest.raises(NoInverses):
        M.require_inverses()


def test_s3_from_permutations_matches_composition():
    G = monoid_from_permutations([[1, 0, 2], [1, 2, 0]])
    assert G.size == 6
    for x, y in itertools.product(range(6), repeat=2):
        p, q = G.perms[x], G.perms[y]
        # x*y applies y first
        assert G.perms[G(x, y)] == tuple(p[q[i]] for i in range(3))


def test_direct_product_order():
    G = direct_product(cyclic_group(2), cyclic_group(2))
    assert G.size == 4
    assert all(G.order(g) <= 2 for g in range(4))


def test_group_algebra_product_and_augmentation():
    ZZ = Integers()
    G = cyclic_group(3)
    a = AlgebraElem(ZZ, {0: ZZ(1), 1: ZZ(2)})
    b = AlgebraElem(ZZ, {1: ZZ(1), 2: ZZ(-1)})
    ab = G.mul(a, b)
    assert augmentation(ab) == augmentation(a) * augmentation(b)


def test_generic_element_has_one_variable_per_support_element():
    G = cyclic_group(3)
    x, R, names = generic_element([0, 2], G, Integers())
    assert len(names) == 2
    assert x.support() == [0, 2]


def test_json_round_trip():
    G = monoid_from_permutations([[1, 2, 3, 0], [0, 3, 2, 1]])
    H = FiniteMonoidTable.from_json(G.to_json())
    assert all(G(x, y) == H(x, y) for x in range(8) for y in range(8))
