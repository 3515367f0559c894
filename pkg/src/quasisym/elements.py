"""Elements of QSym: exact-rational linear combinations of compositions.

An element carries a basis tag — "M" (monomial), "Mt" (the weakly
increasing variant) or "F" (fundamental) — and a finitely supported map
from compositions to nonzero Fractions.  The M basis is the internal
canonical one: every cross-basis computation normalizes to it.

Base change facts used here:

    F_C  = sum of M_D over refinements D of C
    Mt_C = sum of M_D over coarsenings D of C

and the inverse directions carry the sign (-1)^(length difference).
"""

from __future__ import annotations

from fractions import Fraction

from quasisym.composition import (
    Composition,
    EMPTY,
    canonical_key,
    coarsenings,
    refinements,
)

BASES = ("M", "Mt", "F")


def _as_fraction(x) -> Fraction:
    if isinstance(x, Fraction):
        return x
    if isinstance(x, int):
        return Fraction(x)
    raise TypeError(f"coefficients must be exact rationals, got {type(x).__name__}")


class QSymElem:
    """A finitely supported linear combination of basis elements.

    Values are immutable by convention: operations always build new
    elements.  `==` compares the underlying quasi-symmetric functions (both
    sides are converted to the M basis), so e.g. the F and M expansions of
    the same function compare equal.
    """

    __slots__ = ("basis", "terms")

    def __init__(self, basis: str, terms=None):
        if basis not in BASES:
            raise ValueError(f"unknown basis {basis!r}, expected one of {BASES}")
        object.__setattr__(self, "basis", basis)
        clean = {}
        for comp, coeff in (terms or {}).items():
            coeff = _as_fraction(coeff)
            if coeff:
                clean[Composition(comp)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QSymElem is immutable")

    # -- linear structure ------------------------------------------------

    def __add__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        a, b = self, other
        if a.basis != b.basis:
            a, b = to_basis(a, "M"), to_basis(b, "M")
        out = dict(a.terms)
        for comp, coeff in b.terms.items():
            out[comp] = out.get(comp, Fraction(0)) + coeff
        return QSymElem(a.basis, out)

    def __neg__(self):
        return QSymElem(self.basis, {c: -v for c, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        return self + (-other)

    def __rmul__(self, scalar):
        if isinstance(scalar, (int, Fraction)):
            return scale(scalar, self)
        return NotImplemented

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return scale(other, self)
        if isinstance(other, QSymElem):
            from quasisym.products import mul

            return mul(self, other)
        return NotImplemented

    def __eq__(self, other):
        if not isinstance(other, QSymElem):
            return NotImplemented
        a = self if self.basis == "M" else to_basis(self, "M")
        b = other if other.basis == "M" else to_basis(other, "M")
        return a.terms == b.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)

    @property
    def degree(self) -> int:
        """Max weight over the support; 0 for the zero element."""
        return max((c.weight for c in self.terms), default=0)

    def sorted_terms(self):
        return sorted(self.terms.items(), key=lambda kv: canonical_key(kv[0]))

    def __repr__(self):
        return format_elem(self)


def monomial(basis: str, comp) -> QSymElem:
    """The single basis element with coefficient 1."""
    return QSymElem(basis, {Composition(comp): Fraction(1)})


def zero(basis: str = "M") -> QSymElem:
    return QSymElem(basis, {})


def one(basis: str = "M") -> QSymElem:
    """The unit: the empty composition in any basis."""
    return monomial(basis, EMPTY)


def add(a: QSymElem, b: QSymElem) -> QSymElem:
    return a + b


def scale(r, a: QSymElem) -> QSymElem:
    r = _as_fraction(r)
    return QSymElem(a.basis, {c: r * v for c, v in a.terms.items()})


# -- base change ---------------------------------------------------------

def _expand_to_m(basis: str, comp: Composition) -> dict:
    """M-basis expansion of a single Mt or F basis element."""
    if basis == "F":
        return {d: Fraction(1) for d in refinements(comp)}
    return {d: Fraction(1) for d in coarsenings(comp)}


def _m_to_target(target: str, comp: Composition) -> dict:
    """Signed expansion of a single M basis element in the Mt or F basis."""
    if target == "F":
        related = refinements(comp)
    else:
        related = coarsenings(comp)
    sign = lambda d: Fraction(-1) ** abs(len(d) - len(comp))
    return {d: sign(d) for d in related}


def to_basis(a: QSymElem, target: str) -> QSymElem:
    """Re-express a in the target basis; round trips are the identity."""
    if target not in BASES:
        raise ValueError(f"unknown basis {target!r}")
    if a.basis == target:
        return a
    if a.basis != "M":
        acc = {}
        for comp, coeff in a.terms.items():
            for d, u in _expand_to_m(a.basis, comp).items():
                key = d
                val = acc.get(key, Fraction(0)) + coeff * u
                if val:
                    acc[key] = val
                elif key in acc:
                    del acc[key]
        a = QSymElem("M", acc)
        if target == "M":
            return a
    acc = {}
    for comp, coeff in a.terms.items():
        for d, u in _m_to_target(target, comp).items():
            val = acc.get(d, Fraction(0)) + coeff * u
            if val:
                acc[d] = val
            elif d in acc:
                del acc[d]
    return QSymElem(target, acc)


def counit(a: QSymElem) -> Fraction:
    """Coefficient of the empty composition.

    Base change fixes the empty composition and preserves weight, so the
    coefficient can be read off in whichever basis a is stored.
    """
    return a.terms.get(EMPTY, Fraction(0))


# -- printing ------------------------------------------------------------

def format_coeff(c: Fraction) -> str:
    return str(c.numerator) if c.denominator == 1 else f"{c.numerator}/{c.denominator}"


def _atom(basis: str, comp: Composition) -> str:
    if not comp:
        return "1"
    return f"{basis}{comp!r}"


def format_elem(a: QSymElem) -> str:
    """Deterministic text form, e.g. ``2*M[1,1] + M[2]`` or ``3/2*F[2,1]``."""
    if not a.terms:
        return "0"
    pieces = []
    for comp, coeff in a.sorted_terms():
        atom = _atom(a.basis, comp)
        mag = abs(coeff)
        if atom == "1":
            body = format_coeff(mag)
        elif mag == 1:
            body = atom
        else:
            body = f"{format_coeff(mag)}*{atom}"
        if not pieces:
            pieces.append(body if coeff > 0 else f"-{body}")
        else:
            pieces.append(f"+ {body}" if coeff > 0 else f"- {body}")
    return " ".join(pieces)
