import random

import pytest

from doublechar.errors import InputError
from doublechar.groups import (
    FiniteGroup,
    centralizer,
    close_group,
    conjugacy_classes,
    perm_inv,
    perm_mul,
)

S3 = [(1, 0, 2), (1, 2, 0)]
S4 = [(1, 0, 2, 3), (1, 2, 3, 0)]


def brute_classes(group):
    """Orbits under conjugation by every element, from scratch."""
    elements = group.elements
    seen = set()
    classes = []
    for g in elements:
        if g in seen:
            continue
        orbit = {perm_mul(perm_mul(x, g), perm_inv(x)) for x in elements}
        seen |= orbit
        classes.append(orbit)
    return classes


@pytest.mark.parametrize(
    "gens, order, n_classes, sizes",
    [
        (S3, 6, 3, [1, 3, 2]),
        (S4, 24, 5, [1, 6, 8, 3, 6]),
        ([(1, 2, 3, 4, 5, 0)], 6, 6, [1] * 6),
        ([(1, 2, 3, 0), (3, 2, 1, 0)], 8, 5, [1, 2, 2, 2, 1]),
    ],
)
def test_class_structure(gens, order, n_classes, sizes):
    group = close_group(len(gens[0]), gens)
    assert group.order == order
    conj = conjugacy_classes(group)
    assert conj.count == n_classes
    assert conj.sizes() == sizes
    brute = brute_classes(group)
    assert sorted(len(c) for c in brute) == sorted(sizes)
    as_sets = [set(c) for c in conj.classes]
    for orbit in brute:
        orbit_idx = {group.index[g] for g in orbit}
        assert orbit_idx in as_sets


def test_identity_class_is_first():
    for gens in (S3, S4):
        group = close_group(len(gens[0]), gens)
        conj = conjugacy_classes(group)
        assert conj.classes[0] == [group.index[group.identity]]


def test_conjugators():
    group = close_group(3, S3)
    conj = conjugacy_classes(group)
    for i, g in enumerate(group.elements):
        x = conj.conjugator[i]
        rep = group.elements[conj.reps[conj.class_of[i]]]
        assert perm_mul(perm_mul(x, rep), perm_inv(x)) == g


def test_inverse_class_is_an_involution():
    group = close_group(4, S4)
    conj = conjugacy_classes(group)
    for c in range(conj.count):
        assert conj.inverse_class[conj.inverse_class[c]] == c
        rep = group.elements[conj.reps[c]]
        inv = group.index[perm_inv(rep)]
        assert conj.class_of[inv] == conj.inverse_class[c]


def test_exponent_and_orders():
    s3 = close_group(3, S3)
    assert s3.exponent() == 6
    assert not s3.is_abelian()
    c6 = close_group(6, [(1, 2, 3, 4, 5, 0)])
    assert c6.exponent() == 6
    assert c6.is_abelian()
    s4 = close_group(4, S4)
    assert s4.exponent() == 12


def test_centralizer_orbit_stabilizer():
    group = close_group(4, S4)
    conj = conjugacy_classes(group)
    for c, members in enumerate(conj.classes):
        rep = group.elements[conj.reps[c]]
        z = centralizer(group, rep)
        assert z.order * len(members) == group.order
        for h in z.elements:
            assert perm_mul(h, rep) == perm_mul(rep, h)


def test_index_tables():
    group = close_group(3, S3)
    rng = random.Random(6)
    for _ in range(40):
        i = rng.randrange(group.order)
        j = rng.randrange(group.order)
        assert group.elements[group.mul_index(i, j)] == perm_mul(
            group.elements[i], group.elements[j]
        )
        assert perm_mul(group.elements[i], group.elements[group.inverse_index(i)]) == (
            0,
            1,
            2,
        )


def test_content_key_ignores_generating_set():
    a = close_group(3, S3)
    b = close_group(3, [(0, 2, 1), (1, 0, 2)])
    assert b.order == 6
    assert a.content_key() == b.content_key()
    c6 = close_group(6, [(1, 2, 3, 4, 5, 0)])
    assert a.content_key() != c6.content_key()


def test_json_round_trip():
    group = close_group(4, S4)
    clone = FiniteGroup.from_json(group.to_json())
    assert clone.elements == group.elements
    assert clone.content_key() == group.content_key()


def test_group_order_cap():
    with pytest.raises(InputError):
        close_group(4, S4, max_order=10)


def test_bad_permutations_are_rejected():
    with pytest.raises(InputError):
        close_group(3, [(0, 0, 1)])
    with pytest.raises(InputError):
        close_group(3, [(0, 1)])
