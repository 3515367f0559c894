"""Enumerated identity suites.

Each suite yields (case label, passed) pairs in a deterministic order; the
CLI `verify` subcommand and the acceptance tests drive the same functions,
the latter at the bounds fixed in the acceptance checklist.
"""

from __future__ import annotations

from fractions import Fraction

from quasisym.composition import Composition, compositions_of, enumerate_compositions
from quasisym.elements import QSymElem, counit, monomial, one, to_basis
from quasisym.hopf import (
    antipode,
    antipode_axiom_left,
    antipode_axiom_right,
    antipode_F,
    coproduct,
    m_k,
    tensor_bullet_left,
    tensor_bullet_right,
    tensor_mul,
    tensor_of,
)
from quasisym.kp import (
    complete_h,
    kp_classical_identity,
    kp_identity,
    power_sum,
    schur_substitution,
)
from quasisym.oracle import expand, expand_bullet, poly_mul
from quasisym.products import (
    bullet,
    bullet_via_first,
    elementary_F,
    factorize_F,
    hat_bullet,
    mul,
)
from quasisym.qss import (
    closure_probe,
    qss_kp_check,
    qss_M,
    set_y_zero_x_vector,
    t_substitution_check,
)


def _m_elem(c) -> QSymElem:
    return monomial("M", c)


def _pairs(max_total_weight):
    comps = enumerate_compositions(max_total_weight)
    for a in comps:
        for b in comps:
            if a.weight + b.weight <= max_total_weight:
                yield a, b


def suite_shuffle_oracle(max_weight: int = 4, nvars: int = 8):
    """mul against polynomial multiplication of expansions."""
    comps = enumerate_compositions(max_weight)
    for a in comps:
        for b in comps:
            lhs = expand(mul(_m_elem(a), _m_elem(b)), nvars)
            rhs = poly_mul(expand(_m_elem(a), nvars), expand(_m_elem(b), nvars))
            yield (f"M{a!r}*M{b!r} @N={nvars}", lhs == rhs)


def suite_bullet_oracle(max_total_weight: int = 4, max_k: int = 3, nvars: int = 10):
    """bullet and hat_bullet structure constants against direct summation."""
    for a, b in _pairs(max_total_weight):
        ea, eb = _m_elem(a), _m_elem(b)
        for k in range(1, max_k + 1):
            ok = expand_bullet(k, ea, eb, nvars) == expand(bullet(k, ea, eb), nvars)
            yield (f"M{a!r} .{k}. M{b!r} @N={nvars}", ok)
            ok = expand_bullet(k, ea, eb, nvars, hat=True) == expand(
                hat_bullet(k, ea, eb), nvars
            )
            yield (f"M{a!r} ^{k}^ M{b!r} @N={nvars}", ok)


def suite_weak_nonassoc(max_weight: int = 2, max_k: int = 2):
    """(a o_k (b o_m c)) o_n d = a o_k ((b o_m c) o_n d)."""
    comps = enumerate_compositions(max_weight)
    ks = range(1, max_k + 1)
    for a in comps:
        for b in comps:
            for c in comps:
                for m in ks:
                    mid = bullet(m, _m_elem(b), _m_elem(c))
                    for d in comps:
                        for k in ks:
                            for n in ks:
                                lhs = bullet(n, bullet(k, _m_elem(a), mid), _m_elem(d))
                                rhs = bullet(k, _m_elem(a), bullet(n, mid, _m_elem(d)))
                                yield (
                                    f"assoc M{a!r},(M{b!r}.{m}.M{c!r}),M{d!r} k={k} n={n}",
                                    lhs == rhs,
                                )


def suite_lemma_iter(max_weight: int = 4, max_k: int = 3):
    """a o_k (1 o_l b) - (a o_k 1) o_l b = a o_{k+l} b."""
    comps = enumerate_compositions(max_weight)
    for a in comps:
        for b in comps:
            ea, eb = _m_elem(a), _m_elem(b)
            for k in range(1, max_k + 1):
                for l in range(1, max_k + 1):
                    lhs = bullet(k, ea, bullet(l, one(), eb)) - bullet(
                        l, bullet(k, ea, one()), eb
                    )
                    rhs = bullet(k + l, ea, eb)
                    yield (f"iter M{a!r} M{b!r} k={k} l={l}", lhs == rhs)


def suite_generation(max_weight: int = 6):
    """Iterated first-product expressions rebuild every M_C."""
    for c in enumerate_compositions(max_weight):
        if not c:
            continue
        e = one()
        for part in c:
            e = bullet_via_first(part, e, one())
        yield (f"generate M{c!r}", e == _m_elem(c))


def suite_delta_derivation(max_total_weight: int = 4, max_k: int = 3):
    """Delta(a o_n b) = Delta(a) o_n b + a o_n Delta(b)."""
    for a, b in _pairs(max_total_weight):
        ea, eb = _m_elem(a), _m_elem(b)
        for n in range(1, max_k + 1):
            lhs = coproduct(bullet(n, ea, eb))
            rhs = tensor_bullet_right(coproduct(ea), n, eb) + tensor_bullet_left(
                ea, n, coproduct(eb)
            )
            yield (f"Delta(M{a!r}.{n}.M{b!r})", lhs == rhs)


def suite_distributivity(max_total_weight: int = 3, max_k: int = 3):
    """c (a o_m b) = m_m(Delta(c) (a (x) b))."""
    comps = enumerate_compositions(max_total_weight)
    for a in comps:
        for b in comps:
            for c in comps:
                if a.weight + b.weight + c.weight > max_total_weight:
                    continue
                ea, eb, ec = _m_elem(a), _m_elem(b), _m_elem(c)
                for m in range(1, max_k + 1):
                    lhs = mul(ec, bullet(m, ea, eb))
                    rhs = m_k(m, tensor_mul(coproduct(ec), tensor_of(ea, eb)))
                    yield (f"M{c!r}*(M{a!r}.{m}.M{b!r})", lhs == rhs)


def suite_recursion(max_prefix_weight: int = 3, max_k: int = 3, max_weight_a: int = 4):
    """M_{C(k)} a = m_k((M_C (x) 1) Delta(a))."""
    prefixes = enumerate_compositions(max_prefix_weight)
    elems = enumerate_compositions(max_weight_a)
    for c in prefixes:
        for k in range(1, max_k + 1):
            left = monomial("M", tuple(c) + (k,))
            for a in elems:
                ea = _m_elem(a)
                lhs = mul(left, ea)
                rhs = m_k(k, tensor_mul(tensor_of(_m_elem(c), one()), coproduct(ea)))
                yield (f"M{Composition(tuple(c) + (k,))!r}*M{a!r}", lhs == rhs)


def suite_antipode(max_weight: int = 6):
    """Both antipode axioms plus involutivity on every M_C."""
    for c in enumerate_compositions(max_weight):
        e = _m_elem(c)
        target = counit(e) * one()
        ok = (
            antipode_axiom_left(e) == target
            and antipode_axiom_right(e) == target
            and antipode(antipode(e)) == e
        )
        yield (f"antipode axioms M{c!r}", ok)


def suite_antipode_bullet(max_weight: int = 4, max_k: int = 3):
    """S(a o_n b) = -S(b) o_n S(a)."""
    comps = enumerate_compositions(max_weight)
    for a in comps:
        for b in comps:
            ea, eb = _m_elem(a), _m_elem(b)
            sa, sb = antipode(ea), antipode(eb)
            for n in range(1, max_k + 1):
                lhs = antipode(bullet(n, ea, eb))
                rhs = -bullet(n, sb, sa)
                yield (f"S(M{a!r}.{n}.M{b!r})", lhs == rhs)


def suite_antipode_F(max_weight: int = 6):
    """S(F_C) = (-1)^|C| F_{omega(C)} against the M-basis antipode."""
    for c in enumerate_compositions(max_weight):
        if not c:
            continue
        via_formula = to_basis(antipode_F(c), "M")
        via_antipode = antipode(to_basis(monomial("F", c), "M"))
        yield (f"S(F{c!r})", via_formula == via_antipode)


def suite_F_rules(max_weight: int = 6):
    """The three fundamental-basis product facts."""
    half = max_weight // 2
    for a in enumerate_compositions(half):
        for b in enumerate_compositions(max_weight - half):
            if not b:
                continue
            lhs = bullet(
                1, to_basis(monomial("F", a), "M"), to_basis(monomial("F", b), "M")
            )
            rhs = to_basis(monomial("F", tuple(a) + (b[0] + 1,) + tuple(b[1:])), "M")
            yield (f"F{a!r} . F{b!r}", lhs == rhs)
    for m in range(0, max_weight):
        for n in range(0, max_weight - m):
            lhs = elementary_F(m, n)
            rhs = to_basis(monomial("F", (m + 1,) + (1,) * n), "M")
            yield (f"elementary F m={m} n={n}", lhs == rhs)
    for c in enumerate_compositions(max_weight):
        if not c:
            continue
        factors = [to_basis(f, "M") for f in factorize_F(c)]
        prod = factors[0]
        for f in factors[1:]:
            prod = bullet(1, prod, f)
        yield (f"factorize F{c!r}", prod == to_basis(monomial("F", c), "M"))


def suite_kp(max_mn: int = 3, certify_upto: int = 0):
    """The identity family; members with m, n <= certify_upto are also
    recomputed through the oracle at N = m + n + 2."""
    for m in range(1, max_mn + 1):
        for n in range(1, max_mn + 1):
            lhs, rhs = kp_identity(m, n)
            ok = lhs == rhs
            label = f"kp m={m} n={n}"
            if ok and m <= certify_upto and n <= certify_upto:
                ok = certify_kp(m, n, m + n + 2)
                label += f" +oracle@N={m + n + 2}"
            yield (label, ok)


def certify_kp(m: int, n: int, nvars: int) -> bool:
    """Rebuild both sides of the (m, n) identity with polynomial arithmetic."""
    h = complete_h
    lhs = poly_mul(expand(h(m), nvars), expand(h(n + 1), nvars)) - poly_mul(
        expand(h(m + 1), nvars), expand(h(n), nvars)
    )
    rhs = None
    for k in range(1, m + 1):
        term = expand_bullet(1, h(k), mul(h(m - k), h(n)), nvars)
        rhs = term if rhs is None else rhs + term
    for k in range(1, n + 1):
        rhs = rhs - expand_bullet(1, h(k), mul(h(n - k), h(m)), nvars)
    return lhs == rhs


def suite_kp_classical(certify_nvars: int = 4):
    """The coefficient-4/3/6/6 identity, exact and through the oracle."""
    lhs, rhs = kp_classical_identity()
    yield ("kp classical exact", lhs == rhs)
    p1, p2, p3 = power_sum(1), power_sum(2), power_sum(3)
    yield (
        "p1^2.p1 + p1.p1^2 = p1*(p1.p1)",
        bullet(1, mul(p1, p1), p1) + bullet(1, p1, mul(p1, p1))
        == mul(p1, bullet(1, p1, p1)),
    )
    n = certify_nvars
    e = lambda q: expand(q, n)
    poly_lhs = (
        4 * poly_mul(e(p1), e(p3))
        - 3 * poly_mul(e(p2), e(p2))
        - poly_mul(poly_mul(e(p1), e(p1)), poly_mul(e(p1), e(p1)))
    )
    poly_rhs = -6 * poly_mul(e(p1), expand_bullet(1, p1, p1, n)) + 6 * (
        expand_bullet(1, p1, p2, n) - expand_bullet(1, p2, p1, n)
    )
    yield (f"kp classical oracle @N={n}", poly_lhs == poly_rhs)


def suite_newton(max_n: int = 6):
    """h_n against the all-compositions sum and the Schur substitution."""
    for n in range(0, max_n + 1):
        hn = complete_h(n)
        flat = QSymElem("M", {c: Fraction(1) for c in compositions_of(n)})
        yield (f"h_{n} = sum of M_C", hn == flat)
        yield (f"h_{n} = Mt[1^{n}]", hn == to_basis(monomial("Mt", (1,) * n), "M"))
        yield (f"h_{n} schur substitution", hn == schur_substitution(n))


def suite_qss_kp(max_n: int = 4):
    for n in range(1, max_n + 1):
        yield (f"qss kp identity N={n}", qss_kp_check(n))


def suite_qss_cancel(max_weight: int = 4, nvars: int = 4):
    """t-substitution independence of the generated elements, all indices."""
    for c in enumerate_compositions(max_weight):
        a = qss_M(c, nvars)
        for i in range(nvars):
            yield (f"x_{i+1}=y_{i+1}=t on M{c!r}", t_substitution_check(a, i))


def suite_qss_y_zero(max_weight: int = 4, nvars: int = 4):
    """y = 0 specialization reproduces the one-alphabet expansions."""
    for c in enumerate_compositions(max_weight):
        got = set_y_zero_x_vector(qss_M(c, nvars))
        want = expand(monomial("M", c), nvars).terms
        yield (f"y=0 on M{c!r} @N={nvars}", got == want)


def suite_qss_closure(max_weight: int = 4, nvars: int = 5):
    yield from closure_probe(max_weight, nvars)


SUITES = {
    "shuffle-oracle": lambda mw, mk: suite_shuffle_oracle(max_weight=min(mw, 4), nvars=8),
    "bullet-oracle": lambda mw, mk: suite_bullet_oracle(max_total_weight=mw, max_k=mk, nvars=10),
    "weak-nonassoc": lambda mw, mk: suite_weak_nonassoc(max_weight=min(mw, 2), max_k=min(mk, 2)),
    "lemma-iter": lambda mw, mk: suite_lemma_iter(max_weight=mw, max_k=mk),
    "generation": lambda mw, mk: suite_generation(max_weight=mw),
    "delta-derivation": lambda mw, mk: suite_delta_derivation(max_total_weight=mw, max_k=mk),
    "distributivity": lambda mw, mk: suite_distributivity(max_total_weight=min(mw, 3), max_k=mk),
    "recursion": lambda mw, mk: suite_recursion(max_prefix_weight=min(mw, 3), max_k=mk),
    "antipode": lambda mw, mk: suite_antipode(max_weight=mw),
    "antipode-bullet": lambda mw, mk: suite_antipode_bullet(max_weight=min(mw, 4), max_k=mk),
    "antipode-F": lambda mw, mk: suite_antipode_F(max_weight=mw),
    "f-rules": lambda mw, mk: suite_F_rules(max_weight=mw),
    "kp": lambda mw, mk: suite_kp(max_mn=mw),
    "kp-classical": lambda mw, mk: suite_kp_classical(),
    "newton": lambda mw, mk: suite_newton(max_n=mw),
    "qss-kp": lambda mw, mk: suite_qss_kp(max_n=min(mw, 4)),
    "qss-cancel": lambda mw, mk: suite_qss_cancel(max_weight=min(mw, 4), nvars=4),
    "qss-y-zero": lambda mw, mk: suite_qss_y_zero(max_weight=min(mw, 4), nvars=4),
    "qss-closure": lambda mw, mk: suite_qss_closure(max_weight=min(mw, 4), nvars=5),
}

# bounds used when `verify` is invoked without flags; chosen so the whole
# sweep stays well under a minute
DEFAULT_MAX_WEIGHT = {
    "shuffle-oracle": 3,
    "bullet-oracle": 3,
    "weak-nonassoc": 2,
    "lemma-iter": 3,
    "generation": 5,
    "delta-derivation": 3,
    "distributivity": 3,
    "recursion": 2,
    "antipode": 4,
    "antipode-bullet": 3,
    "antipode-F": 5,
    "f-rules": 5,
    "kp": 3,
    "kp-classical": 0,
    "newton": 5,
    "qss-kp": 3,
    "qss-cancel": 3,
    "qss-y-zero": 3,
    "qss-closure": 3,
}
DEFAULT_MAX_K = 2


def run_suite(name: str, max_weight: int | None = None, max_k: int | None = None):
    """Materialize one suite's cases. Unknown names raise KeyError."""
    runner = SUITES[name]
    mw = max_weight if max_weight is not None else DEFAULT_MAX_WEIGHT[name]
    mk = max_k if max_k is not None else DEFAULT_MAX_K
    return list(runner(mw, mk))
