"""Products on QSym: the commutative quasi-shuffle product and the graded
family of noncommutative, weakly nonassociative products.

Structure constants on the M basis:

    mul:     M_A * M_B     = sum over interleavings of A and B with optional
                             cross merges (quasi-shuffle)
    bullet:  M_A o_k 1       = M_{A(k)}
             M_A o_k M_{(m)B} = M_{A(k,m)B} + M_{A(k+m)B}
    hat:     1   o^_k M_B     = M_{(k)B}
             M_{A(m)} o^_k M_B = M_{A(m,k)B} + M_{A(m+k)B}

Closed forms on the other bases (two-term rule on Mt, one-term rule on F
for k = 1) are provided separately and agree with the M-basis rules after
conversion; the oracle module checks all of them against direct summation.
"""

from __future__ import annotations

from fractions import Fraction

from quasisym._core import quasi_shuffle
from quasisym.composition import Composition, elementary_compose, elementary_decompose
from quasisym.elements import QSymElem, monomial, one, to_basis


def _m(a: QSymElem) -> QSymElem:
    return a if a.basis == "M" else to_basis(a, "M")


def mul(a: QSymElem, b: QSymElem) -> QSymElem:
    """Ordinary (quasi-shuffle) product; commutative and associative."""
    a, b = _m(a), _m(b)
    acc = {}
    for A, ca in a.terms.items():
        for B, cb in b.terms.items():
            c = ca * cb
            for word, mult in quasi_shuffle(tuple(A), tuple(B)).items():
                val = acc.get(word, 0) + c * mult
                if val:
                    acc[word] = val
                elif word in acc:
                    del acc[word]
    return QSymElem("M", acc)


def _bullet_words(k: int, A: tuple, B: tuple):
    """(word, 1)-terms of M_A o_k M_B."""
    if not B:
        yield A + (k,)
    else:
        yield A + (k,) + B
        yield A + (k + B[0],) + B[1:]


def _hat_words(k: int, A: tuple, B: tuple):
    """(word, 1)-terms of M_A o^_k M_B (merge happens on the left)."""
    if not A:
        yield (k,) + B
    else:
        yield A + (k,) + B
        yield A[:-1] + (A[-1] + k,) + B


def _bilinear(words, k: int, a: QSymElem, b: QSymElem) -> QSymElem:
    if k < 1:
        raise ValueError(f"product index must be a positive integer, got {k}")
    a, b = _m(a), _m(b)
    acc = {}
    for A, ca in a.terms.items():
        for B, cb in b.terms.items():
            c = ca * cb
            for word in words(k, tuple(A), tuple(B)):
                val = acc.get(word, 0) + c
                if val:
                    acc[word] = val
                elif word in acc:
                    del acc[word]
    return QSymElem("M", acc)


def bullet(k: int, a: QSymElem, b: QSymElem) -> QSymElem:
    """The weakly nonassociative product o_k; raises degree by deg a + deg b + k."""
    return _bilinear(_bullet_words, k, a, b)


def hat_bullet(k: int, a: QSymElem, b: QSymElem) -> QSymElem:
    """The mirror product o^_k: reverse of o_k under M_C -> M_{reverse(C)}."""
    return _bilinear(_hat_words, k, a, b)


def bullet_via_first(k: int, a: QSymElem, b: QSymElem) -> QSymElem:
    """o_k expressed through o_1 alone:

        a o_{k+1} b = a o_k (1 o_1 b) - (a o_k 1) o_1 b

    applied recursively until only o_1 remains.  Exists to demonstrate that
    1 and o_1 generate everything; `bullet` is the native implementation.
    """
    if k < 1:
        raise ValueError(f"product index must be a positive integer, got {k}")
    if k == 1:
        return bullet(1, a, b)
    return bullet_via_first(k - 1, a, bullet(1, one(), b)) - bullet(
        1, bullet_via_first(k - 1, a, one()), b
    )


def reverse_map(a: QSymElem) -> QSymElem:
    """Linear extension of M_C -> M_{reverse(C)}."""
    a = _m(a)
    return QSymElem("M", {Composition(tuple(c)[::-1]): v for c, v in a.terms.items()})


# -- closed forms on the Mt and F bases -----------------------------------

def bullet_tilde(k: int, left, right) -> QSymElem:
    """Mt_left o_k Mt_right in the Mt basis.

    For nonempty left = A(m) this is the two-term rule
    Mt_{A(m,k)right} - Mt_{A(m+k)right}; for empty left it is the recursion
    Mt_{(k)right} = 1 o_k Mt_right.
    """
    if k < 1:
        raise ValueError(f"product index must be a positive integer, got {k}")
    left, right = Composition(left), Composition(right)
    if not left:
        return monomial("Mt", (k,) + tuple(right))
    terms = {
        Composition(tuple(left) + (k,) + tuple(right)): Fraction(1),
        Composition(tuple(left[:-1]) + (left[-1] + k,) + tuple(right)): Fraction(-1),
    }
    return QSymElem("Mt", terms)


def bullet_F(A, right) -> QSymElem:
    """F_A o_1 F_right = F_{A (m+1) B} where right = (m)B is nonempty.

    The one-term rule holds for o_1 only; other k route through the M basis.
    """
    A, right = Composition(A), Composition(right)
    if not right:
        raise ValueError("the F-basis rule needs a nonempty right composition")
    return monomial("F", tuple(A) + (right[0] + 1,) + tuple(right[1:]))


def elementary_F(m: int, n: int) -> QSymElem:
    """L_1^m R_1^n (1 o_1 1): the M-basis value of F_{(m+1, 1^n)}."""
    if m < 0 or n < 0:
        raise ValueError("block parameters must be nonnegative")
    e = bullet(1, one(), one())
    for _ in range(m):
        e = bullet(1, one(), e)
    for _ in range(n):
        e = bullet(1, e, one())
    return e


def factorize_F(c) -> list:
    """The elementary o_1 factors of F_c, left to right.

    Multiplying them with o_1 in any bracketing reproduces F_c: every
    factor has zero counit, where the product is associative.
    """
    blocks = elementary_decompose(c)
    return [monomial("F", elementary_compose([block])) for block in blocks]
