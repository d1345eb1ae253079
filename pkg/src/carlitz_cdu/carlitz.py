"""Permutations of GF(2^n) built from inversions and degree-one affine maps.

A :class:`CarlitzForm` with coefficients ``(a_0, ..., a_{m+1})`` denotes

    F(x) = (...((a_0 x + a_1)^-1 + a_2)^-1 ... + a_m)^-1 + a_{m+1}

where ``^-1`` is the inverse map extended by ``0 -> 0``.  Every permutation
is materialised as a full lookup table.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from pathlib import Path
from typing import Literal, Sequence

import numpy as np

from .field import Field


class NotAPermutationError(ValueError):
    """A lookup table is not a bijection; ``value`` is the first repeated output."""

    def __init__(self, value: int, first: int, second: int):
        self.value = value
        super().__init__(
            f"not a permutation: output {value:#x} repeated at inputs {first:#x} and {second:#x}"
        )


def _first_collision(table: np.ndarray) -> tuple[int, int, int] | None:
    seen: dict[int, int] = {}
    for x, y in enumerate(table.tolist()):
        if y in seen:
            return y, seen[y], x
        seen[y] = x
    return None


@dataclass(frozen=True, eq=False)
class Permutation:
    """A bijection of the field, stored as ``table[x] = F(x)``."""

    field: Field
    table: np.ndarray

    def __post_init__(self):
        t = np.array(self.table, dtype=np.int64)
        q = self.field.order
        if t.shape != (q,):
            raise ValueError(f"table must have {q} entries, got {t.shape}")
        if t.min() < 0 or t.max() >= q:
            raise ValueError("table entries must lie in [0, 2^n)")
        if np.unique(t).size != q:
            raise NotAPermutationError(*_first_collision(t))
        t.setflags(write=False)
        object.__setattr__(self, "table", t)

    def __call__(self, x: int) -> int:
        return int(self.table[x])

    def __eq__(self, other):
        return (
            isinstance(other, Permutation)
            and self.field == other.field
            and np.array_equal(self.table, other.table)
        )

    __hash__ = None

    def __matmul__(self, other: Permutation) -> Permutation:
        return compose(self, other)

    def inverse(self) -> Permutation:
        out = np.empty_like(self.table)
        out[self.table] = np.arange(self.field.order)
        return Permutation(self.field, out)

    def differs_from(self, other: Permutation) -> frozenset[int]:
        """Points where this permutation and ``other`` disagree."""
        return frozenset(np.flatnonzero(self.table != other.table).tolist())


def identity(field: Field) -> Permutation:
    return Permutation(field, np.arange(field.order))


def inverse_map(field: Field) -> Permutation:
    """The inversion ``x -> x^(2^n - 2)``."""
    return Permutation(field, field.inv_table)


def compose(f: Permutation, g: Permutation) -> Permutation:
    """``f o g``, i.e. ``x -> f(g(x))``."""
    if f.field != g.field:
        raise ValueError(f"field mismatch: {f.field} vs {g.field}")
    return Permutation(f.field, f.table[g.table])


def affine_deg1(field: Field, u: int, v: int) -> Permutation:
    """The map ``x -> u*x + v``; requires ``u != 0``."""
    if u == 0:
        raise ValueError("u must be nonzero for an affine permutation of degree one")
    return Permutation(field, field.scale_table(u) ^ v)


def cycle_perm(field: Field, points: Sequence[int]) -> Permutation:
    """Cycle ``points[0] -> points[1] -> ... -> points[0]``, identity elsewhere."""
    pts = [int(p) for p in points]
    if len(pts) < 2:
        raise ValueError("a cycle needs at least two points")
    if len(set(pts)) != len(pts):
        raise ValueError(f"cycle points must be distinct: {pts}")
    t = np.arange(field.order)
    for i, p in enumerate(pts):
        t[p] = pts[(i + 1) % len(pts)]
    return Permutation(field, t)


def car3_family(field: Field, gamma: int) -> Permutation:
    """``Inv o (0, 1, gamma)``: sends 0 to 1, 1 to inv(gamma), gamma to 0."""
    if gamma in (0, 1):
        raise ValueError("gamma must lie outside GF(2)")
    t = field.inv_table.copy()
    t[0], t[1], t[gamma] = 1, field.inv(gamma), 0
    return Permutation(field, t)


# -- Carlitz forms -----------------------------------------------------------


@dataclass(frozen=True)
class CarlitzForm:
    """Coefficients ``(a_0, ..., a_{m+1})``; ``m`` is a declared rank bound, not the exact rank."""

    field: Field
    coeffs: tuple[int, ...]

    def __post_init__(self):
        coeffs = tuple(int(a) for a in self.coeffs)
        object.__setattr__(self, "coeffs", coeffs)
        if len(coeffs) < 3:
            raise ValueError("need m >= 1, i.e. at least three coefficients")
        if any(not 0 <= a < self.field.order for a in coeffs):
            raise ValueError("coefficients must be field elements")
        if coeffs[0] == 0:
            raise ValueError("a_0 must be nonzero")
        bad = [i for i in range(2, len(coeffs) - 1) if coeffs[i] == 0]
        if bad:
            raise ValueError(f"a_i must be nonzero for 2 <= i <= m, zero at i={bad}")

    @property
    def m(self) -> int:
        return len(self.coeffs) - 2


def from_carlitz(form: CarlitzForm) -> Permutation:
    F = form.field
    a = form.coeffs
    y = F.scale_table(a[0]) ^ a[1]
    for ai in a[2:]:
        y = F.inv_table[y] ^ ai
    return Permutation(F, y)


@dataclass(frozen=True)
class ConvergentData:
    alphas: tuple[int, ...]
    betas: tuple[int, ...]
    poles: frozenset[int]

    @property
    def rm_num(self) -> tuple[int, int]:
        return self.alphas[-1], self.betas[-1]

    @property
    def rm_den(self) -> tuple[int, int]:
        return self.alphas[-2], self.betas[-2]


def convergents(form: CarlitzForm) -> ConvergentData:
    F, a, m = form.field, form.coeffs, form.m
    alphas, betas = [0, a[0]], [1, a[1]]
    for i in range(2, m + 2):
        alphas.append(F.mul(a[i], alphas[-1]) ^ alphas[-2])
        betas.append(F.mul(a[i], betas[-1]) ^ betas[-2])
    poles = frozenset(
        F.div(betas[i], alphas[i]) for i in range(1, m + 1) if alphas[i] != 0
    )
    return ConvergentData(tuple(alphas), tuple(betas), poles)


def eval_rm(form: CarlitzForm, data: ConvergentData | None = None) -> tuple[np.ndarray, np.ndarray]:
    """Evaluate the rational map ``(alpha_{m+1} x + beta_{m+1}) / (alpha_m x + beta_m)``.

    Returns ``(values, defined)`` where ``defined`` marks a nonzero denominator.
    """
    F = form.field
    data = data or convergents(form)
    (an, bn), (ad, bd) = data.rm_num, data.rm_den
    num = F.scale_table(an) ^ bn
    den = F.scale_table(ad) ^ bd
    return F.mul_vec(num, F.inv_table[den]), den != 0


@dataclass(frozen=True)
class Normalization:
    """``g = outer o F o inner`` with ``g`` equal to Inv (or the identity) off ``points``.

    ``inner`` and ``outer`` are the ``(u, v)`` pairs of degree-one affine maps.
    """

    g: Permutation
    points: frozenset[int]
    kind: Literal["inv_like", "identity_like"]
    inner: tuple[int, int]
    outer: tuple[int, int]
    reference: Permutation = dc_field(repr=False)


def normalize(form: CarlitzForm) -> Normalization:
    F = form.field
    f = from_carlitz(form)
    data = convergents(form)
    (a_m1, b_m1), (a_m, b_m) = data.rm_num, data.rm_den
    a0 = form.coeffs[0]
    if a_m != 0:
        # inner(x) = (a_0 x + beta_m) / alpha_m, outer(y) = alpha_m y + alpha_{m+1}
        inner = (F.div(a0, a_m), F.div(b_m, a_m))
        outer = (a_m, a_m1)
        kind, reference = "inv_like", inverse_map(F)
    else:
        # alpha_{m+1} beta_m = a_0 here, so both are nonzero
        inner = (1, 0)
        outer = (F.div(b_m, a_m1), F.div(b_m1, a_m1))
        kind, reference = "identity_like", identity(F)
    A1 = affine_deg1(F, *inner)
    g = compose(affine_deg1(F, *outer), compose(f, A1))
    pullback = A1.inverse()
    points = frozenset(pullback(x) for x in data.poles)
    return Normalization(g, points, kind, inner, outer, reference)


# -- text file I/O -------------------------------------------------------------


def parse_table(text: str) -> list[int]:
    values = []
    for line in text.splitlines():
        line = line.split("#", 1)[0].strip()
        if line:
            values.append(int(line, 16))
    return values


def load_permutation(path: str | Path, field: Field) -> Permutation:
    """Read one hex value per line (``#`` starts a comment); line index is the input."""
    values = parse_table(Path(path).read_text())
    if len(values) != field.order:
        raise ValueError(f"{path}: expected {field.order} values, found {len(values)}")
    return Permutation(field, values)


def format_permutation(f: Permutation) -> str:
    return "".join(f"{f.field.fmt(int(y))}\n" for y in f.table)


def save_permutation(f: Permutation, path: str | Path) -> None:
    Path(path).write_text(format_permutation(f))
