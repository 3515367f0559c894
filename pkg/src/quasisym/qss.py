"""Two-alphabet truncation: polynomials in x_1..x_N, y_1..y_N with the
graded products defined through per-monomial min/max index windows.

Elements are kept concretely as truncated polynomials (no structure
constants are assumed for this extension).  Generated from 1 by the
products, they specialize to the one-alphabet picture at y = 0 and are
t-independent under the substitution x_i = y_i = t, the defining property
of the supersymmetric world.
"""

from __future__ import annotations

from fractions import Fraction

from quasisym.composition import Composition, compositions_of


class QssPoly:
    """Sparse polynomial over two interleaved alphabets of N variables each.

    Keys are pairs (x-exponent tuple, y-exponent tuple), both of length N.
    """

    __slots__ = ("n", "terms")

    def __init__(self, n: int, terms=None):
        if n < 1:
            raise ValueError("need at least one variable per alphabet")
        object.__setattr__(self, "n", n)
        clean = {}
        for (xe, ye), coeff in (terms or {}).items():
            coeff = Fraction(coeff)
            if not coeff:
                continue
            xe, ye = tuple(xe), tuple(ye)
            if len(xe) != n or len(ye) != n or any(e < 0 for e in xe + ye):
                raise ValueError("bad exponent vectors")
            clean[(xe, ye)] = coeff
        object.__setattr__(self, "terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("QssPoly is immutable")

    def _check(self, other):
        if self.n != other.n:
            raise ValueError(f"truncation levels differ: {self.n} vs {other.n}")

    def __add__(self, other):
        if not isinstance(other, QssPoly):
            return NotImplemented
        self._check(other)
        out = dict(self.terms)
        for key, coeff in other.terms.items():
            out[key] = out.get(key, Fraction(0)) + coeff
        return QssPoly(self.n, out)

    def __neg__(self):
        return QssPoly(self.n, {k: -v for k, v in self.terms.items()})

    def __sub__(self, other):
        if not isinstance(other, QssPoly):
            return NotImplemented
        return self + (-other)

    def __mul__(self, other):
        if isinstance(other, (int, Fraction)):
            return QssPoly(self.n, {k: other * v for k, v in self.terms.items()})
        if not isinstance(other, QssPoly):
            return NotImplemented
        self._check(other)
        acc = {}
        for (x1, y1), c1 in self.terms.items():
            for (x2, y2), c2 in other.terms.items():
                key = (
                    tuple(a + b for a, b in zip(x1, x2)),
                    tuple(a + b for a, b in zip(y1, y2)),
                )
                val = acc.get(key, 0) + c1 * c2
                if val:
                    acc[key] = val
                elif key in acc:
                    del acc[key]
        return QssPoly(self.n, acc)

    __rmul__ = __mul__

    def __eq__(self, other):
        if not isinstance(other, QssPoly):
            return NotImplemented
        return self.n == other.n and self.terms == other.terms

    __hash__ = None

    def __bool__(self):
        return bool(self.terms)


def qss_one(n: int) -> QssPoly:
    return QssPoly(n, {((0,) * n, (0,) * n): Fraction(1)})


def _support_window(xe, ye):
    """(min index, max index) over both alphabets, or None for the constant."""
    idx = [i for i, e in enumerate(xe) if e] + [i for i, e in enumerate(ye) if e]
    if not idx:
        return None
    return (min(idx), max(idx))


def _mono_mul(key, i, alphabet, k):
    """Multiply monomial key by x_i^k or y_i^k."""
    xe, ye = key
    if alphabet == "x":
        xe = xe[:i] + (xe[i] + k,) + xe[i + 1 :]
    else:
        ye = ye[:i] + (ye[i] + k,) + ye[i + 1 :]
    return (xe, ye)


def qss_bullet(k: int, a: QssPoly, b: QssPoly) -> QssPoly:
    """The graded product, monomial pair by monomial pair.

    With m/M the min/max used index of a monomial (both alphabets pooled):

        1 o_k 1 = sum_i (x_i^k - y_i^k)
        1 o_k b = sum_{i <= m(b)} x_i^k b - sum_{i < m(b)} y_i^k b
        a o_k 1 = sum_{M(a) < i} a x_i^k - sum_{M(a) <= i} a y_i^k
        a o_k b = sum_{M(a) < i <= m(b)} a x_i^k b
                  - sum_{M(a) <= i < m(b)} a y_i^k b

    Ranges with no admissible index contribute zero.
    """
    if k < 1:
        raise ValueError(f"product index must be a positive integer, got {k}")
    a._check(b)
    n = a.n
    acc = {}

    def put(key, coeff):
        val = acc.get(key, 0) + coeff
        if val:
            acc[key] = val
        elif key in acc:
            del acc[key]

    for ka, ca in a.terms.items():
        wa = _support_window(*ka)
        for kb, cb in b.terms.items():
            wb = _support_window(*kb)
            coeff = ca * cb
            merged = (
                tuple(p + q for p, q in zip(ka[0], kb[0])),
                tuple(p + q for p, q in zip(ka[1], kb[1])),
            )
            if wa is None and wb is None:
                x_lo, x_hi = 0, n  # half-open index ranges
                y_lo, y_hi = 0, n
            elif wa is None:
                x_lo, x_hi = 0, wb[0] + 1
                y_lo, y_hi = 0, wb[0]
            elif wb is None:
                x_lo, x_hi = wa[1] + 1, n
                y_lo, y_hi = wa[1], n
            else:
                x_lo, x_hi = wa[1] + 1, wb[0] + 1
                y_lo, y_hi = wa[1], wb[0]
            for i in range(x_lo, x_hi):
                put(_mono_mul(merged, i, "x", k), coeff)
            for i in range(y_lo, y_hi):
                put(_mono_mul(merged, i, "y", k), -coeff)
    return QssPoly(n, acc)


def qss_p(r: int, n: int) -> QssPoly:
    """The generator sum_{i=1}^N (x_i^r - y_i^r); equals 1 o_r 1."""
    if r < 1:
        raise ValueError(f"generator index must be a positive integer, got {r}")
    terms = {}
    zero = (0,) * n
    for i in range(n):
        xe = zero[:i] + (r,) + zero[i + 1 :]
        terms[(xe, zero)] = Fraction(1)
        terms[(zero, xe)] = Fraction(-1)
    return QssPoly(n, terms)


def qss_M(comp, n: int) -> QssPoly:
    """The recursively generated element: 1 for the empty composition, then
    right-multiplication by 1 under o_part for each part in turn."""
    comp = Composition(comp)
    out = qss_one(n)
    for part in comp:
        out = qss_bullet(part, out, qss_one(n))
    return out


def qss_kp_check(n: int) -> bool:
    """The two-alphabet KP identity at truncation n, checked literally."""
    p1, p2, p3 = qss_p(1, n), qss_p(2, n), qss_p(3, n)
    lhs = 4 * (p1 * p3) - 3 * (p2 * p2) - p1 * p1 * p1 * p1
    rhs = -6 * (p1 * qss_bullet(1, p1, p1)) + 6 * (
        qss_bullet(1, p1, p2) - qss_bullet(1, p2, p1)
    )
    return lhs == rhs


def t_substitution_check(a: QssPoly, i: int) -> bool:
    """True iff substituting x_i = y_i = t leaves no positive power of t.

    Collects a as a polynomial in t with two-alphabet coefficients and
    requires every coefficient of t^j, j >= 1, to vanish.
    """
    if not 0 <= i < a.n:
        raise ValueError(f"index out of range: {i}")
    by_degree = {}
    for (xe, ye), coeff in a.terms.items():
        d = xe[i] + ye[i]
        if d == 0:
            continue
        residual = (
            xe[:i] + (0,) + xe[i + 1 :],
            ye[:i] + (0,) + ye[i + 1 :],
        )
        bucket = by_degree.setdefault(d, {})
        val = bucket.get(residual, Fraction(0)) + coeff
        if val:
            bucket[residual] = val
        else:
            del bucket[residual]
    return all(not bucket for bucket in by_degree.values())


def pbup_transcription(r: int, s: int, n: int) -> QssPoly:
    """Literal double-sum transcription of the generator product

        sum_{i < j <= k} (x_i^r - y_i^r) x_j (x_k^s - y_k^s)
      - sum_{i <= j < k} (x_i^r - y_i^r) y_j (x_k^s - y_k^s)

    kept as an independent cross-check of qss_bullet(1, p_r, p_s).
    """
    acc = {}
    zero = (0,) * n

    def put(xe, ye, coeff):
        key = (tuple(xe), tuple(ye))
        val = acc.get(key, 0) + coeff
        if val:
            acc[key] = val
        elif key in acc:
            del acc[key]

    def add_products(i, j, k, middle, sign):
        # (x_i^r - y_i^r) * z_j * (x_k^s - y_k^s), z the middle alphabet
        for si, ai in ((1, "x"), (-1, "y")):
            for sk, ak in ((1, "x"), (-1, "y")):
                xe, ye = list(zero), list(zero)
                (xe if ai == "x" else ye)[i] += r
                (xe if middle == "x" else ye)[j] += 1
                (xe if ak == "x" else ye)[k] += s
                put(xe, ye, sign * si * sk)
    for i in range(n):
        for j in range(i + 1, n):
            for k in range(j, n):
                add_products(i, j, k, "x", 1)
    for i in range(n):
        for j in range(i, n):
            for k in range(j + 1, n):
                add_products(i, j, k, "y", -1)
    return QssPoly(n, acc)


def set_y_zero_x_vector(a: QssPoly):
    """Monomials surviving y = 0, as a map x-exponent tuple -> coefficient."""
    zero = (0,) * a.n
    return {xe: coeff for (xe, ye), coeff in a.terms.items() if ye == zero}


def _row_reduce(rows):
    """In-place exact Gaussian elimination; returns the pivot column list."""
    pivots = []
    r = 0
    cols = len(rows[0]) if rows else 0
    for c in range(cols):
        pivot = next((i for i in range(r, len(rows)) if rows[i][c]), None)
        if pivot is None:
            continue
        rows[r], rows[pivot] = rows[pivot], rows[r]
        inv = Fraction(1) / rows[r][c]
        rows[r] = [v * inv for v in rows[r]]
        for i in range(len(rows)):
            if i != r and rows[i][c]:
                f = rows[i][c]
                rows[i] = [v - f * w for v, w in zip(rows[i], rows[r])]
        pivots.append(c)
        r += 1
        if r == len(rows):
            break
    return pivots


def in_span(vectors, target) -> bool:
    """Exact membership of target in the rational span of vectors.

    vectors and target are maps monomial -> coefficient over any shared key
    space; decided by row reduction of the transposed system.
    """
    keys = sorted(set().union(*[v.keys() for v in vectors], target.keys()))
    if not keys:
        return True
    # columns: one per vector, plus the target; eliminate and look for a
    # pivot in the target column
    rows = [
        [Fraction(v.get(key, 0)) for v in vectors] + [Fraction(target.get(key, 0))]
        for key in keys
    ]
    pivots = _row_reduce(rows)
    return len(vectors) not in pivots


def closure_probe(max_weight: int, n: int):
    """Empirical check that ordinary products of generated elements stay in
    the generated span at matching truncation.

    Yields (case name, bool) for every pair of nonempty compositions with
    combined weight <= max_weight.
    """
    comps = [
        c
        for w in range(1, max_weight)
        for c in compositions_of(w)
    ]
    cache = {}

    def gen(c):
        if c not in cache:
            cache[c] = qss_M(c, n)
        return cache[c]

    for a in comps:
        for b in comps:
            w = a.weight + b.weight
            if w > max_weight:
                continue
            product = gen(a) * gen(b)
            basis = [gen(c).terms for c in compositions_of(w)]
            ok = in_span(basis, product.terms)
            yield (f"M{a!r}*M{b!r} in span(weight {w})", ok)
