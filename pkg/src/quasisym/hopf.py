"""Coproduct, counit laws, antipode, and the tensor-square bimodule.

The coproduct deconcatenates on the M basis.  Together with any of the
graded products it makes QSym an infinitesimal bialgebra: the coproduct is
a derivation of those products, which is what the derivation and
distributivity checks in the test suite exercise.  The antipode is the
signed reversal M_C -> (-1)^len(C) Mt_{reverse(C)} and interacts with the
graded products by exchanging left and right with a sign.
"""

from __future__ import annotations

from fractions import Fraction

from quasisym.composition import Composition, canonical_key, omega, reverse
from quasisym.elements import QSymElem, monomial, to_basis
from quasisym.products import _m, bullet, mul


class TensorElem:
    """Element of QSym (x) QSym with both legs in the M basis."""

    __slots__ = ("terms",)

    def __init__(self, terms=None):
        clean = {}
        for (left, right), coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if coeff:
                clean[(Composition(left), Composition(right))] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("TensorElem is immutable")

    def __add__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return TensorElem(out)

    def __neg__(self):
        return TensorElem({k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return TensorElem({k: scalar * v for k, v in self.terms.items()})
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, TensorElem):
            return NotImplemented
        return self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    def sorted_terms(self):
        return sorted(
            self.terms.items(),
            key=lambda kv: (canonical_key(kv[0][0]), canonical_key(kv[0][1])),
        )

    def __repr__(self):
        if not self.terms:
            return "0"
        bits = []
        for (left, right), coeff in self.sorted_terms():
            la = "1" if not left else f"M{left!r}"
            ra = "1" if not right else f"M{right!r}"
            body = f"{la} (x) {ra}"
            if coeff != 1:
                body = f"{coeff}*{body}" if coeff != -1 else f"-{body}"
            bits.append(body)
        return " + ".join(bits)


def tensor_of(a: QSymElem, b: QSymElem) -> TensorElem:
    """The pure tensor a (x) b, bilinearly."""
    a, b = _m(a), _m(b)
    return TensorElem(
        {(A, B): ca * cb for A, ca in a.terms.items() for B, cb in b.terms.items()}
    )


def coproduct(a: QSymElem) -> TensorElem:
    """Deconcatenation: Delta(M_C) = sum over C = AB of M_A (x) M_B."""
    a = _m(a)
    acc = {}
    for comp, coeff in a.terms.items():
        for cut in range(len(comp) + 1):
            key = (Composition(comp[:cut]), Composition(comp[cut:]))
            acc[key] = acc.get(key, Fraction(0)) + coeff
    return TensorElem(acc)


def tensor_bullet_right(t: TensorElem, k: int, c: QSymElem) -> TensorElem:
    """(a (x) b) o_k c = a (x) (b o_k c)."""
    acc = {}
    for (left, right), coeff in t.terms.items():
        hit = bullet(k, monomial("M", right), c)
        for comp, u in hit.terms.items():
            key = (left, comp)
            acc[key] = acc.get(key, Fraction(0)) + coeff * u
    return TensorElem(acc)


def tensor_bullet_left(c: QSymElem, k: int, t: TensorElem) -> TensorElem:
    """c o_k (a (x) b) = (c o_k a) (x) b."""
    acc = {}
    for (left, right), coeff in t.terms.items():
        hit = bullet(k, c, monomial("M", left))
        for comp, u in hit.terms.items():
            key = (comp, right)
            acc[key] = acc.get(key, Fraction(0)) + coeff * u
    return TensorElem(acc)


def tensor_mul(t: TensorElem, u: TensorElem) -> TensorElem:
    """Leg-wise ordinary product: (a (x) b)(c (x) d) = ac (x) bd."""
    acc = {}
    for (a, b), x in t.terms.items():
        for (c, d), y in u.terms.items():
            left = mul(monomial("M", a), monomial("M", c))
            right = mul(monomial("M", b), monomial("M", d))
            coeff = x * y
            for lc, lv in left.terms.items():
                for rc, rv in right.terms.items():
                    key = (lc, rc)
                    acc[key] = acc.get(key, Fraction(0)) + coeff * lv * rv
    return TensorElem(acc)


def m_k(k: int, t: TensorElem) -> QSymElem:
    """Collapse a tensor through o_k: sends a (x) b to a o_k b."""
    out = QSymElem("M", {})
    for (left, right), coeff in t.terms.items():
        out = out + coeff * bullet(k, monomial("M", left), monomial("M", right))
    return out


def counit_left(t: TensorElem) -> QSymElem:
    """(eps (x) id) applied to a tensor."""
    acc = {}
    for (left, right), coeff in t.terms.items():
        if not left:
            acc[right] = acc.get(right, Fraction(0)) + coeff
    return QSymElem("M", acc)


def counit_right(t: TensorElem) -> QSymElem:
    """(id (x) eps) applied to a tensor."""
    acc = {}
    for (left, right), coeff in t.terms.items():
        if not right:
            acc[left] = acc.get(left, Fraction(0)) + coeff
    return QSymElem("M", acc)


def antipode(a: QSymElem) -> QSymElem:
    """S(M_C) = (-1)^len(C) Mt_{reverse(C)}, returned in the M basis."""
    a = _m(a)
    acc = {}
    for comp, coeff in a.terms.items():
        key = reverse(comp)
        sign = Fraction(-1) if len(comp) % 2 else Fraction(1)
        acc[key] = acc.get(key, Fraction(0)) + sign * coeff
    return to_basis(QSymElem("Mt", acc), "M")


def antipode_F(c) -> QSymElem:
    """S(F_C) = (-1)^|C| F_{omega(C)} as an F-basis element."""
    c = Composition(c)
    if not c:
        raise ValueError("the F-basis antipode formula needs a nonempty composition")
    sign = Fraction(-1) if c.weight % 2 else Fraction(1)
    return QSymElem("F", {omega(c): sign})


def antipode_axiom_left(a: QSymElem) -> QSymElem:
    """mu (id (x) S) Delta applied to a; equals counit(a) * 1 for the antipode."""
    out = QSymElem("M", {})
    for (left, right), coeff in coproduct(a).terms.items():
        out = out + coeff * mul(monomial("M", left), antipode(monomial("M", right)))
    return out


def antipode_axiom_right(a: QSymElem) -> QSymElem:
    """mu (S (x) id) Delta applied to a."""
    out = QSymElem("M", {})
    for (left, right), coeff in coproduct(a).terms.items():
        out = out + coeff * mul(antipode(monomial("M", left)), monomial("M", right))
    return out


def derivation_delta(n: int, a: QSymElem) -> QSymElem:
    """delta_n(a) = p_n a = m_n(Delta(a)): a commuting family of derivations
    of every o_k."""
    if n < 1:
        raise ValueError(f"derivation index must be a positive integer, got {n}")
    return mul(monomial("M", (n,)), a)
