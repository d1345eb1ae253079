"""c-differential counts, spectra and uniformity.

For a permutation ``F``, multiplier ``c`` and shift ``a`` the c-differential is
``x -> F(x + a) + c F(x)`` (characteristic 2, so minus is plus).  The
uniformity is the largest number of preimages of any ``b`` over all ``(a, b)``,
skipping ``a = 0`` when ``c = 1``.
"""

from __future__ import annotations

from dataclasses import dataclass

import numba
import numpy as np

from .carlitz import Permutation, car3_family
from .field import Field


@numba.njit(cache=True, nogil=True)
def _scan(table, ctab, a_start, threshold):
    q = table.size
    counts = np.zeros(q, np.int64)
    spectrum = np.zeros(q + 1, np.int64)
    best = -1
    best_a = 0
    best_b = 0
    rows = 0
    for a in range(a_start, q):
        for x in range(q):
            counts[table[x ^ a] ^ ctab[table[x]]] += 1
        for b in range(q):
            k = counts[b]
            spectrum[k] += 1
            if k > best:
                best = k
                best_a = a
                best_b = b
            counts[b] = 0
        rows += 1
        if threshold > 0 and best >= threshold:
            break
    return best, best_a, best_b, spectrum, rows


@numba.njit(cache=True, nogil=True)
def _max_only(table, ctab, a_start, threshold):
    q = table.size
    counts = np.zeros(q, np.int64)
    best = 0
    for a in range(a_start, q):
        for x in range(q):
            y = table[x ^ a] ^ ctab[table[x]]
            k = counts[y] + 1
            counts[y] = k
            if k > best:
                best = k
        if threshold > 0 and best >= threshold:
            return best
        for x in range(q):
            counts[table[x ^ a] ^ ctab[table[x]]] = 0
    return best


@dataclass(frozen=True)
class CDiffReport:
    """Outcome of a uniformity scan of one ``(F, c)``.

    ``spectrum`` maps a solution count to the number of ``(a, b)`` pairs that
    attain it (zero counts included).  ``witness`` is the lexicographically
    smallest maximising ``(a, b)``.  When the scan stopped early at a threshold
    ``complete`` is False and ``max_count`` is only a lower bound.
    """

    c: int
    max_count: int
    spectrum: dict[int, int]
    witness: tuple[int, int]
    complete: bool = True

    @property
    def is_pcn(self) -> bool:
        return self.complete and self.max_count == 1

    @property
    def is_apcn(self) -> bool:
        return self.complete and self.max_count == 2

    def to_record(self, field: Field) -> dict:
        fx = field.fmt
        return {
            "c": fx(self.c),
            "max_count": self.max_count,
            "spectrum": [[k, v] for k, v in sorted(self.spectrum.items())],
            "witness": [fx(self.witness[0]), fx(self.witness[1])],
            "complete": self.complete,
        }


def cdiff_values(f: Permutation, c: int, a: int) -> np.ndarray:
    """``F(x + a) + c F(x)`` for every ``x``."""
    x = np.arange(f.field.order)
    return f.table[x ^ a] ^ f.field.mul_vec(f.table, c)


def cdiff_count(f: Permutation, c: int, a: int, b: int) -> int:
    return int(np.count_nonzero(cdiff_values(f, c, a) == b))


def cdiff_row(f: Permutation, c: int, a: int) -> np.ndarray:
    """Counts for every ``b`` at shift ``a``."""
    return np.bincount(cdiff_values(f, c, a), minlength=f.field.order)


def cdiff_uniformity(f: Permutation, c: int, threshold: int | None = None) -> CDiffReport:
    """Full uniformity scan; with ``threshold`` the scan stops once it is reached."""
    F = f.field
    a_start = 1 if c == 1 else 0
    best, a, b, spec, rows = _scan(f.table, F.scale_table(c), a_start, threshold or 0)
    spectrum = {k: int(v) for k, v in enumerate(spec.tolist()) if v}
    complete = rows == F.order - a_start
    return CDiffReport(c, int(best), spectrum, (int(a), int(b)), complete)


def uniformity(f: Permutation, c: int, threshold: int | None = None) -> int:
    """Just the maximum count, without spectrum bookkeeping."""
    a_start = 1 if c == 1 else 0
    return int(_max_only(f.table, f.field.scale_table(c), a_start, threshold or 0))


def uniformity_numpy(f: Permutation, c: int) -> int:
    """Slow pure-numpy route, kept as an independent check of the kernel."""
    F = f.field
    q = F.order
    x = np.arange(q)
    cf = F.mul_vec(f.table, c)
    best = 0
    for a in range(1 if c == 1 else 0, q):
        best = max(best, int(np.bincount(f.table[x ^ a] ^ cf, minlength=q).max()))
    return best


def cdiff_symmetric(f: Permutation, c: int) -> bool:
    """Check that ``c`` and ``inv(c)`` give equal uniformity and equal pointwise counts.

    Pointwise, the count at ``(c, a, b)`` must equal the count at
    ``(inv(c), a, b * inv(c))`` for every nonzero ``a``.
    """
    if c == 0:
        raise ValueError("c must be nonzero")
    F = f.field
    ci = F.inv(c)
    if uniformity(f, c) != uniformity(f, ci):
        return False
    scale = F.scale_table(ci)
    for a in range(1, F.order):
        if not np.array_equal(cdiff_row(f, c, a), cdiff_row(f, ci, a)[scale]):
            return False
    return True


# -- the Inv o (0, 1, gamma) family --------------------------------------------


def boundary_set(gamma: int, a: int) -> frozenset[int]:
    """``{0, 1, gamma, a, a+1, a+gamma}``: where shifting by ``a`` meets the cycle."""
    base = (0, 1, gamma)
    return frozenset(base) | frozenset(x ^ a for x in base)


def outside_pa_predict(field: Field, gamma: int, c: int, a: int, b: int) -> int:
    """Closed-form count of solutions outside the boundary set for ``Inv o (0,1,gamma)``.

    Off the boundary set the equation reduces to ``b x^2 + (ab+c+1) x + ca = 0``.
    """
    F = field
    if a == 0:
        raise ValueError("a must be nonzero")
    if c in (0, 1) or gamma in (0, 1):
        raise ValueError("c and gamma must lie outside GF(2)")
    if F.n < 4:
        raise ValueError("closed form stated for n >= 4")
    mul = F.mul
    lin = mul(a, b) ^ c ^ 1
    ca = mul(c, a)
    g = gamma
    bg = mul(b, g)
    # a boundary point is a root exactly when its linear condition vanishes
    hits = {
        1: mul(b ^ c, a) ^ b ^ c ^ 1,
        a ^ 1: mul(b ^ 1, a) ^ b ^ c ^ 1,
        g: mul(bg ^ c, a) ^ mul(g, bg ^ c ^ 1),
        a ^ g: mul(bg ^ 1, a) ^ mul(g, bg ^ c ^ 1),
    }
    in_pa = {x for x, v in hits.items() if v == 0}
    if b == 0:
        # (c+1) x = ca has exactly one root
        return 0 if F.div(ca, c ^ 1) in in_pa else 1
    if lin == 0:
        return 0 if F.sqrt(F.div(ca, b)) in in_pa else 1
    if F.trace(F.div(mul(mul(a, b), c), mul(lin, lin))) == 1:
        return 0
    return 2 - len(in_pa)


def outside_pa_bruteforce(f: Permutation, gamma: int, c: int, a: int, b: int) -> int:
    """Direct count of ``x`` outside the boundary set solving the c-differential equation."""
    pa = boundary_set(gamma, a)
    vals = cdiff_values(f, c, a)
    return sum(1 for x in np.flatnonzero(vals == b).tolist() if x not in pa)


def car3_uniformity(field: Field, gamma: int, c: int, threshold: int | None = None) -> int:
    return uniformity(car3_family(field, gamma), c, threshold)
