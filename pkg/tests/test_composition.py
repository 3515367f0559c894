import pytest

from quasisym.composition import (
    Composition,
    EMPTY,
    canonical_key,
    coarsenings,
    compositions_of,
    concat,
    elementary_compose,
    elementary_decompose,
    enumerate_compositions,
    omega,
    refinements,
    reverse,
)


def C(*parts):
    return Composition(parts)


def test_validation():
    with pytest.raises(ValueError):
        Composition((0,))
    with pytest.raises(ValueError):
        Composition((2, -1))
    assert Composition(()) == EMPTY
    assert C(2, 1, 3).weight == 6
    assert len(C(2, 1, 3)) == 3
    assert EMPTY.weight == 0


def test_concat():
    assert concat(C(2), C(1, 3)) == C(2, 1, 3)
    assert concat(EMPTY, C(4)) == C(4)
    assert concat(C(4), EMPTY) == C(4)
    assert concat(C(1, 1), C(1, 1)) == C(1, 1, 1, 1)
    assert C(2) + C(1, 3) == C(2, 1, 3)
    # associative with identity
    assert concat(concat(C(1), C(2)), C(3)) == concat(C(1), concat(C(2), C(3)))


def test_reverse():
    assert reverse(C(3, 1, 2)) == C(2, 1, 3)
    assert reverse(EMPTY) == EMPTY
    assert reverse(C(5)) == C(5)
    for c in enumerate_compositions(5):
        assert reverse(reverse(c)) == c


def test_coarsenings():
    assert coarsenings(C(1, 1)) == frozenset({C(1, 1), C(2)})
    assert coarsenings(C(3, 1)) == frozenset({C(3, 1), C(4)})
    assert coarsenings(C(1, 1, 1)) == frozenset({C(1, 1, 1), C(2, 1), C(1, 2), C(3)})
    assert coarsenings(EMPTY) == frozenset({EMPTY})


def test_refinements():
    assert refinements(C(3, 1)) == frozenset(
        {C(3, 1), C(1, 2, 1), C(2, 1, 1), C(1, 1, 1, 1)}
    )
    assert refinements(C(2)) == frozenset({C(2), C(1, 1)})
    assert refinements(C(4)) == frozenset(compositions_of(4))


def test_coarsen_refine_duality():
    for c in enumerate_compositions(5):
        assert c in coarsenings(c)
        assert c in refinements(c)
        for d in coarsenings(c):
            assert d.weight == c.weight
            assert len(d) <= len(c)
            assert c in refinements(d)
    for n in range(1, 7):
        assert len(refinements(C(n))) == 2 ** (n - 1)


def test_elementary_decompose():
    assert elementary_decompose(C(3, 1)) == ((2, 1),)
    assert elementary_decompose(C(2, 1, 3, 1, 1)) == ((1, 1), (1, 2))
    assert elementary_decompose(C(1)) == ((0, 0),)
    with pytest.raises(ValueError):
        elementary_decompose(EMPTY)


def test_elementary_round_trip():
    for c in enumerate_compositions(7):
        if not c:
            continue
        assert elementary_compose(elementary_decompose(c)) == c


def test_omega():
    assert omega(C(3, 1)) == C(2, 1, 1)
    assert omega(C(1)) == C(1)
    assert omega(C(2, 3)) == C(1, 1, 2, 1)
    with pytest.raises(ValueError):
        omega(EMPTY)
    for c in enumerate_compositions(7):
        if not c:
            continue
        assert omega(omega(c)) == c
        assert omega(c).weight == c.weight


def test_enumerate_compositions():
    assert enumerate_compositions(0) == [EMPTY]
    assert enumerate_compositions(2) == [EMPTY, C(1), C(2), C(1, 1)]
    assert len(enumerate_compositions(4)) == 16
    for n in range(1, 8):
        assert len(compositions_of(n)) == 2 ** (n - 1)
    ordered = enumerate_compositions(6)
    keys = [canonical_key(c) for c in ordered]
    assert keys == sorted(keys)
