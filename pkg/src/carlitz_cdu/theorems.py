"""Closed-form predictions for c-differential uniformity, each with a brute-force check.

Predicates take field elements as ints and never run a uniformity scan; the
``*_check`` functions (and the suites in :mod:`carlitz_cdu.scan`) pair a
prediction with the exhaustive count and return a :class:`Verdict`.
"""

from __future__ import annotations

from dataclasses import dataclass
from typing import Union

from .carlitz import (
    CarlitzForm,
    Permutation,
    affine_deg1,
    car3_family,
    compose,
    from_carlitz,
    inverse_map,
)
from .cdiff import cdiff_count, uniformity
from .field import Field

Bound = tuple[int, int]


@dataclass(frozen=True)
class Verdict:
    """One claim instance.

    ``predicted`` is an exact value (int, bool or a set of elements) or an
    inclusive ``(lo, hi)`` bound on ``observed``.
    """

    claim: str
    params: dict
    predicted: Union[int, Bound, bool, frozenset]
    observed: Union[int, bool, frozenset]
    passed: bool

    def line(self) -> str:
        ps = " ".join(f"{k}={v}" for k, v in self.params.items())
        pred = self.predicted
        if isinstance(pred, tuple):
            pred = f"[{pred[0]},{pred[1]}]"
        obs = self.observed
        if isinstance(pred, frozenset):
            pred, obs = (f"{{{','.join(map(hex, sorted(x)))}}}" for x in (pred, obs))
        return f"{self.claim}\t{ps}\tpredicted={pred}\tobserved={obs}\t{'PASS' if self.passed else 'FAIL'}"


def _verdict(claim: str, params: dict, predicted, observed) -> Verdict:
    if isinstance(predicted, tuple):
        ok = predicted[0] <= observed <= predicted[1]
    else:
        ok = predicted == observed
    return Verdict(claim, params, predicted, observed, ok)


def _require_car3(F: Field, gamma: int, c: int) -> None:
    if c in (0, 1) or gamma in (0, 1):
        raise ValueError("c and gamma must lie outside GF(2)")
    if F.n < 4:
        raise ValueError("stated for n >= 4")


def _in_f4(F: Field, x: int) -> bool:
    return F.n % 2 == 0 and F.in_subfield(x, 2)


def _f4_star(F: Field) -> tuple[int, int]:
    """The two elements of GF(4) outside GF(2); needs even n."""
    if F.n % 2:
        raise ValueError("GF(4) is a subfield only for even n")
    w = F.pow(F.generator, (F.order - 1) // 3)
    return tuple(sorted((w, F.mul(w, w))))


# -- the inverse map and the transposition variant ----------------------------


def predict_inv(F: Field, c: int) -> int:
    """2 when ``trace(c) = trace(1/c) = 1`` (almost perfect c-nonlinear), else 3."""
    if c in (0, 1):
        raise ValueError("c must lie outside GF(2)")
    return 2 if F.trace(c) == 1 and F.trace(F.inv(c)) == 1 else 3


def car2_bound(n: int) -> Bound:
    """Uniformity range for ``Inv o (0, 1)`` when ``c`` is outside GF(2)."""
    if n < 2:
        raise ValueError("n >= 2")
    if n == 2:
        return (1, 1)
    return (1, 3) if n == 3 else (1, 4)


def car2_perm(F: Field) -> Permutation:
    t = F.inv_table.copy()
    t[0], t[1] = 1, 0
    return Permutation(F, t)


# -- generic bounds --------------------------------------------------------------


def rank_bound_check(form: CarlitzForm, c: int) -> Verdict:
    """Uniformity of a form of declared length ``m`` is at most ``m + 2`` for ``c != 1``."""
    if c == 1:
        raise ValueError("bound stated for c != 1")
    obs = uniformity(from_carlitz(form), c)
    params = {"n": form.field.n, "m": form.m, "c": form.field.fmt(c)}
    return _verdict("rank_bound", params, (1, form.m + 2), obs)


def modified_points_bound(f: Permutation, g: Permutation, c: int) -> Verdict:
    """``f`` agrees with ``g`` off a set P: uniformity(f) <= uniformity(g) + |P|.

    When ``g`` is the inverse map and 0 is in P the tighter ``|P| + 2`` applies.
    """
    if c == 1:
        raise ValueError("bound stated for c != 1")
    F = f.field
    P = f.differs_from(g)
    bound = uniformity(g, c) + len(P)
    if g == inverse_map(F) and 0 in P:
        bound = min(bound, len(P) + 2)
    return _verdict("modified_points", {"n": F.n, "|P|": len(P), "c": F.fmt(c)}, (1, bound), uniformity(f, c))


def affine_deg1_invariance(f: Permutation, u1: int, v1: int, u2: int, v2: int, c: int) -> Verdict:
    """Uniformity is unchanged by ``f -> A1 o f o A2`` with degree-one affine ``A_i``."""
    F = f.field
    g = compose(affine_deg1(F, u1, v1), compose(f, affine_deg1(F, u2, v2)))
    params = {"n": F.n, "u1": F.fmt(u1), "v1": F.fmt(v1), "u2": F.fmt(u2), "v2": F.fmt(v2), "c": F.fmt(c)}
    return _verdict("affine_invariance", params, uniformity(f, c), uniformity(g, c))


# -- Inv o (0, 1, gamma) ----------------------------------------------------------


def bound_3_5_check(F: Field, gamma: int, c: int) -> Verdict:
    _require_car3(F, gamma, c)
    obs = uniformity(car3_family(F, gamma), c)
    return _verdict("bound_3_5", {"n": F.n, "gamma": F.fmt(gamma), "c": F.fmt(c)}, (3, 5), obs)


def cdu5_conditions(F: Field, gamma: int, c: int) -> dict[str, bool]:
    """Each of the six families of ``(c, gamma)`` giving uniformity 5, evaluated separately."""
    _require_car3(F, gamma, c)
    mul, div, tr, inv = F.mul, F.div, F.trace, F.inv
    g = gamma
    g2 = mul(g, g)
    g3 = mul(g2, g)
    g4 = mul(g2, g2)
    g5 = mul(g4, g)
    g1 = g ^ 1
    rg = F.sqrt(g)  # gamma^(2^(n-1))
    g_in_f4 = _in_f4(F, g)
    out = {}

    pair = (div(g3, mul(g1, g1)), div(mul(g1, g1), g3))
    out["i"] = (
        c in pair
        and tr(inv(mul(g, mul(g1, g1)))) == 0
        and not g_in_f4
        and g4 ^ g3 ^ 1 != 0
        and g5 ^ g2 ^ 1 != 0
    )

    s = g3 ^ g2 ^ g
    pair = (div(g1, s), div(s, g1))
    out["ii"] = c in pair and tr(1 ^ inv(g3)) == 0 and not g_in_f4 and g5 ^ g3 ^ 1 != 0

    t = mul(rg, g) ^ rg ^ g
    pair = (div(t, mul(g, g1)), div(mul(g, g1), t))
    out["iii"] = (
        c in pair
        and tr(div(g1, mul(g2, g2 ^ g ^ 1))) == 0
        and not g_in_f4
        and g5 != 1
    )

    out["iv"] = F.n % 8 == 0 and g_in_f4 and _in_f4(F, c)

    c2 = mul(c, c)
    c3 = mul(c2, c)
    cg = mul(c, g)
    # the cubic's constant term is gamma; c in case (vi) solves its reciprocal
    out["v"] = (
        mul(g3, c3) ^ mul(g2, c2) ^ mul(g1, c) ^ g == 0
        and c not in (g, inv(rg ^ g))
        and mul(g3, c2) ^ mul(g2 ^ g ^ 1, c) ^ g2 != 0
        and tr(div(mul(cg ^ c ^ 1, mul(c2, g) ^ 1), mul(c, mul(c ^ g, c ^ g)))) == 0
        and not g_in_f4
    )
    out["vi"] = (
        mul(g, c3) ^ mul(g1, c2) ^ mul(g2, c) ^ g3 == 0
        and c not in (inv(g), rg ^ g)
        and mul(g2, c2) ^ mul(g2 ^ g ^ 1, c) ^ g3 != 0
        and tr(div(mul(c ^ g ^ 1, c2 ^ g), mul(cg ^ 1, cg ^ 1))) == 0
        and not g_in_f4
    )
    return out


def cdu5_predicate(F: Field, gamma: int, c: int) -> bool:
    """True exactly when ``Inv o (0,1,gamma)`` has c-differential uniformity 5."""
    return any(cdu5_conditions(F, gamma, c).values())


def _cdu3_traces(F: Field, g: int, c: int) -> list[int]:
    mul, div, tr, inv = F.mul, F.div, F.trace, F.inv
    g1 = g ^ 1
    g1sq = mul(g1, g1)
    g2 = mul(g, g)
    cg = mul(c, g)
    cg2 = mul(c, g2)
    sq = lambda x: mul(x, x)  # noqa: E731
    return [
        tr(div(g, mul(c, g1))),
        tr(inv(cg)),
        tr(div(mul(g, cg ^ 1), g1sq)),
        tr(div(cg, sq(cg ^ c ^ 1))),
        tr(div(mul(g, c ^ g ^ 1), mul(c, g1sq))),
        tr(div(mul(g, c ^ g), mul(c, g1sq))),
        tr(div(cg2, sq(c ^ g))),
        tr(div(cg, sq(c ^ g ^ 1))),
        tr(div(cg2, sq(cg ^ 1))),
        tr(div(cg, g1)),
        tr(div(c, g)),
        tr(div(mul(cg ^ c ^ 1, g), g1sq)),
    ]


def cdu3_sufficient(F: Field, gamma: int, c: int) -> bool:
    """Sufficient trace condition for uniformity exactly 3."""
    _require_car3(F, gamma, c)
    g = gamma
    if c in (g, F.inv(g), g ^ 1, F.inv(g ^ 1)):
        return False
    return all(t == 1 for t in _cdu3_traces(F, g, c))


def cf4_exact(n: int) -> int:
    """Uniformity when both ``c`` and ``gamma`` lie in GF(4) minus GF(2); ``n`` even."""
    if n % 2 or n < 4:
        raise ValueError("needs even n >= 4")
    if n % 4 == 2:
        return 3
    return 4 if n % 8 == 4 else 5


def cf4not_sufficient(F: Field, gamma: int, c: int) -> bool:
    """Sufficient condition for uniformity 3 when ``gamma`` is in GF(4) and ``c`` is not."""
    if F.n % 2:
        raise ValueError("needs even n")
    if gamma not in _f4_star(F):
        raise ValueError("gamma must lie in GF(4) minus GF(2)")
    if _in_f4(F, c):
        raise ValueError("c must lie outside GF(4)")
    mul, div, tr, inv = F.mul, F.div, F.trace, F.inv
    g = gamma
    g2 = mul(g, g)
    ci = inv(c)
    sq = lambda x: mul(x, x)  # noqa: E731
    traces = (
        tr(mul(c, g)),
        tr(mul(c, g2)),
        tr(mul(ci, g)),
        tr(mul(ci, g2)),
        tr(div(c, sq(c ^ g))),
        tr(div(mul(c, g2), sq(c ^ g))),
        tr(div(mul(c, g), sq(c ^ g2))),
        tr(div(c, sq(c ^ g2))),
    )
    return all(t == 1 for t in traces)


def af4_case(F: Field, gamma: int, c: int, a: int, b: int) -> int:
    """Predicted count at ``(a, b)`` for ``gamma`` in GF(4) and shift ``a`` in GF(4).

    Returns 4 when the count is exactly 4, otherwise 3 meaning "at most 3".
    """
    f4 = _f4_star(F)
    if gamma not in f4:
        raise ValueError("gamma must lie in GF(4) minus GF(2)")
    if a not in (0, 1) + f4:
        raise ValueError("a must lie in GF(4)")
    if c in (0, 1):
        raise ValueError("c must lie outside GF(2)")
    g2 = F.mul(gamma, gamma)
    if (
        a == 1
        and b == gamma
        and c != g2
        and F.trace(F.div(F.mul(c, gamma), F.mul(c, c) ^ gamma)) == 0
    ):
        return 4
    return 3


def af4_check(F: Field, gamma: int, c: int, a: int, b: int) -> Verdict:
    pred = af4_case(F, gamma, c, a, b)
    obs = cdiff_count(car3_family(F, gamma), c, a, b)
    params = {"n": F.n, "gamma": F.fmt(gamma), "c": F.fmt(c), "a": F.fmt(a), "b": F.fmt(b)}
    return _verdict("af4_case", params, 4 if pred == 4 else (0, 3), obs)
