from fractions import Fraction

import pytest

from quasisym.composition import enumerate_compositions
from quasisym.elements import monomial
from quasisym.oracle import expand
from quasisym.qss import (
    QssPoly,
    closure_probe,
    in_span,
    pbup_transcription,
    qss_bullet,
    qss_kp_check,
    qss_M,
    qss_one,
    qss_p,
    set_y_zero_x_vector,
    t_substitution_check,
)


def QP(n, terms):
    return QssPoly(n, {(tuple(x), tuple(y)): Fraction(c) for (x, y), c in terms.items()})


def test_qss_poly_basics():
    p = qss_p(1, 2)
    assert p == QP(2, {((1, 0), (0, 0)): 1, ((0, 1), (0, 0)): 1, ((0, 0), (1, 0)): -1, ((0, 0), (0, 1)): -1})
    assert p - p == QssPoly(2)
    with pytest.raises(ValueError):
        qss_p(1, 2)._check(qss_p(1, 3))
    with pytest.raises(ValueError):
        QssPoly(0)


def test_qss_bullet_examples():
    n2 = qss_one(2)
    assert qss_bullet(1, n2, n2) == qss_p(1, 2)
    x1 = QP(2, {((1, 0), (0, 0)): 1})
    assert qss_bullet(1, x1, n2) == QP(
        2, {((1, 1), (0, 0)): 1, ((1, 0), (1, 0)): -1, ((1, 0), (0, 1)): -1}
    )
    x2 = QP(2, {((0, 1), (0, 0)): 1})
    assert qss_bullet(1, x1, x2) == QP(2, {((1, 2), (0, 0)): 1, ((1, 1), (1, 0)): -1})
    with pytest.raises(ValueError):
        qss_bullet(0, n2, n2)
    with pytest.raises(ValueError):
        qss_bullet(1, qss_one(2), qss_one(3))


def test_qss_p_equals_unit_bullet():
    for r in (1, 2, 3):
        for n in (1, 2, 4):
            assert qss_p(r, n) == qss_bullet(r, qss_one(n), qss_one(n))


def test_qss_M():
    assert qss_M((), 3) == qss_one(3)
    for n in (1, 3):
        for r in (1, 2):
            assert qss_M((r,), n) == qss_p(r, n)


def test_y_zero_specialization():
    for c in enumerate_compositions(4):
        for n in (2, 4):
            got = set_y_zero_x_vector(qss_M(c, n))
            want = expand(monomial("M", c), n).terms
            assert got == want


def test_qss_weak_nonassociativity():
    elems = [qss_M(c, 3) for c in enumerate_compositions(2)]
    for k in (1, 2):
        for b in elems:
            for c in elems:
                mid = qss_bullet(k, b, c)
                lefts = [qss_bullet(k, a, mid) for a in elems]
                rights = [qss_bullet(k, mid, d) for d in elems]
                for i, a in enumerate(elems):
                    for j, d in enumerate(elems):
                        assert qss_bullet(k, lefts[i], d) == qss_bullet(k, a, rights[j])


def test_qss_weak_nonassociativity_mixed_ks():
    one3 = qss_one(3)
    p1, p2 = qss_p(1, 3), qss_p(2, 3)
    m11 = qss_M((1, 1), 3)
    for a, b, c, d in [
        (one3, one3, one3, one3),
        (p1, one3, p2, m11),
        (m11, p1, one3, p1),
        (p2, m11, p1, one3),
    ]:
        for k, m, n in [(1, 2, 1), (2, 1, 2), (1, 1, 2), (2, 2, 1)]:
            mid = qss_bullet(m, b, c)
            lhs = qss_bullet(n, qss_bullet(k, a, mid), d)
            rhs = qss_bullet(k, a, qss_bullet(n, mid, d))
            assert lhs == rhs


def test_qss_lemma_iter():
    unit = qss_one(3)
    elems = [qss_M(c, 3) for c in enumerate_compositions(2)]
    for a in elems:
        for b in elems:
            for k in (1, 2):
                for l in (1, 2):
                    lhs = qss_bullet(k, a, qss_bullet(l, unit, b)) - qss_bullet(
                        l, qss_bullet(k, a, unit), b
                    )
                    assert lhs == qss_bullet(k + l, a, b)


def test_qss_kp_identity():
    for n in (1, 2, 3, 4):
        assert qss_kp_check(n)


def test_pbup_transcription_matches_bullet():
    for r in (1, 2):
        for s in (1, 2):
            for n in (2, 4):
                assert pbup_transcription(r, s, n) == qss_bullet(1, qss_p(r, n), qss_p(s, n))


def test_t_substitution():
    for n in (2, 4):
        for r in (1, 2):
            p = qss_p(r, n)
            for i in range(n):
                assert t_substitution_check(p, i)
    a = qss_bullet(1, qss_p(1, 3), qss_p(1, 3))
    assert t_substitution_check(a, 1)
    x1 = QP(2, {((1, 0), (0, 0)): 1})
    assert not t_substitution_check(x1, 0)
    with pytest.raises(ValueError):
        t_substitution_check(x1, 5)


def test_t_substitution_all_generated_weight_4():
    for c in enumerate_compositions(4):
        a = qss_M(c, 4)
        for i in range(4):
            assert t_substitution_check(a, i)


def test_in_span():
    v1 = {("a",): Fraction(1), ("b",): Fraction(1)}
    v2 = {("b",): Fraction(1)}
    assert in_span([v1, v2], {("a",): Fraction(2), ("b",): Fraction(1)})
    assert not in_span([v2], {("a",): Fraction(1)})


def test_closure_probe():
    results = list(closure_probe(4, 5))
    assert results
    assert all(ok for _, ok in results)


def test_ordinary_square_of_p1_in_generated_span():
    # p_1^2 = p_2 + 2 M_(1,1)-analog, already at truncation 1
    p1 = qss_p(1, 1)
    combo = qss_p(2, 1) + 2 * qss_M((1, 1), 1)
    assert p1 * p1 == combo
