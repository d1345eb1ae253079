"""Arithmetic in GF(2^n) for 2 <= n <= 16.

Elements are plain Python ints in ``[0, 2^n)``; bit ``i`` is the coefficient
of ``X^i`` in the polynomial-basis representation.  A :class:`Field` owns the
modulus and the lookup tables (log/antilog, inverse, trace, square root and
the ``y^2 + y`` preimage table) so every operation after construction is a
handful of table reads.

>>> F = make_field(4)
>>> hex(F.modulus)
'0x13'
>>> F.inv(0b0010)
9
"""

from __future__ import annotations

from functools import lru_cache

import numpy as np

MIN_DEGREE = 2
MAX_DEGREE = 16


class ReducibleModulusError(ValueError):
    """The requested modulus factors over GF(2)."""

    def __init__(self, modulus: int, factor: int):
        self.modulus = modulus
        self.factor = factor
        super().__init__(
            f"modulus {modulus:#x} is reducible over GF(2): "
            f"divisible by {format_poly(factor)} ({factor:#x})"
        )


def format_poly(p: int) -> str:
    """Render a bit-vector polynomial as ``X^4+X+1``."""
    if p == 0:
        return "0"
    terms = []
    for i in range(p.bit_length() - 1, -1, -1):
        if p >> i & 1:
            terms.append("1" if i == 0 else "X" if i == 1 else f"X^{i}")
    return "+".join(terms)


def clmul(x: int, y: int) -> int:
    """Carry-less product of two bit-vector polynomials."""
    r = 0
    while y:
        if y & 1:
            r ^= x
        x <<= 1
        y >>= 1
    return r


def poly_mod(x: int, m: int) -> int:
    dm = m.bit_length()
    while x.bit_length() >= dm:
        x ^= m << (x.bit_length() - dm)
    return x


def find_factor(p: int) -> int | None:
    """Return a nontrivial factor of ``p`` over GF(2), or ``None``.

    Exhaustive trial division by every polynomial of degree 1..deg(p)//2.
    """
    deg = p.bit_length() - 1
    for d in range(1, deg // 2 + 1):
        for q in range(1 << d, 1 << (d + 1)):
            if poly_mod(p, q) == 0:
                return q
    return None


def is_irreducible(p: int) -> bool:
    return p.bit_length() >= 2 and find_factor(p) is None


@lru_cache(maxsize=None)
def smallest_irreducible(n: int) -> int:
    """Smallest irreducible degree-``n`` polynomial, read as an integer."""
    for p in range((1 << n) | 1, 1 << (n + 1), 2):
        if is_irreducible(p):
            return p
    raise AssertionError("unreachable: irreducibles exist in every degree")


def _prime_factors(k: int) -> list[int]:
    out, d = [], 2
    while d * d <= k:
        if k % d == 0:
            out.append(d)
            while k % d == 0:
                k //= d
        d += 1
    if k > 1:
        out.append(k)
    return out


def _slow_pow(x: int, e: int, m: int) -> int:
    r = 1
    while e:
        if e & 1:
            r = poly_mod(clmul(r, x), m)
        x = poly_mod(clmul(x, x), m)
        e >>= 1
    return r


class Field:
    """GF(2^n) with an explicit irreducible modulus.

    Instances are immutable and cheap to share; build them with
    :func:`make_field`, which caches one instance per ``(n, modulus)``.
    """

    def __init__(self, n: int, modulus: int):
        if not MIN_DEGREE <= n <= MAX_DEGREE:
            raise ValueError(f"degree n={n} outside supported range {MIN_DEGREE}..{MAX_DEGREE}")
        if modulus.bit_length() != n + 1:
            raise ValueError(
                f"modulus {modulus:#x} has degree {modulus.bit_length() - 1}, expected {n}"
            )
        factor = find_factor(modulus)
        if factor is not None:
            raise ReducibleModulusError(modulus, factor)
        self.n = n
        self.modulus = modulus
        self.order = q = 1 << n
        self.generator = g = self._find_generator()

        # antilog doubled so log[x] + log[y] never needs a reduction
        exp = np.zeros(2 * (q - 1), dtype=np.int64)
        log = np.zeros(q, dtype=np.int64)
        v = 1
        for i in range(q - 1):
            exp[i] = v
            log[v] = i
            v = poly_mod(clmul(v, g), modulus)
        exp[q - 1:] = exp[: q - 1]
        self.exp_table = exp
        self.log_table = log  # log_table[0] is unused

        elems = np.arange(q, dtype=np.int64)
        inv = np.zeros(q, dtype=np.int64)
        inv[1:] = exp[(q - 1 - log[1:]) % (q - 1)]
        sq = self.mul_vec(elems, elems)
        sqrt = np.zeros(q, dtype=np.int64)
        sqrt[sq] = elems
        tr = np.zeros(q, dtype=np.int64)
        t = elems.copy()
        for _ in range(n):
            tr ^= t
            t = self.mul_vec(t, t)
        if not np.all((tr == 0) | (tr == 1)):
            raise AssertionError("trace left GF(2); tables are corrupt")
        # one root y of y^2 + y = d per d with trace(d) = 0, else -1
        as_root = np.full(q, -1, dtype=np.int64)
        d = sq ^ elems
        first = np.full(q, q, dtype=np.int64)
        np.minimum.at(first, d, elems)
        as_root[first < q] = first[first < q]

        for arr in (exp, log, inv, sqrt, tr, as_root):
            arr.setflags(write=False)
        self.inv_table = inv
        self.sqrt_table = sqrt
        self.trace_table = tr
        self.as_root_table = as_root
        # list copies: scalar indexing into lists is much faster than numpy
        self._exp = exp.tolist()
        self._log = log.tolist()
        self._inv = inv.tolist()
        self._sqrt = sqrt.tolist()
        self._tr = tr.tolist()
        self._as_root = as_root.tolist()

    def _find_generator(self) -> int:
        q1 = self.order - 1
        ps = _prime_factors(q1)
        for g in range(2, self.order):
            if all(_slow_pow(g, q1 // p, self.modulus) != 1 for p in ps):
                return g
        return 1  # only reachable for q1 == 1

    def __repr__(self):
        return f"Field(n={self.n}, modulus={self.modulus:#x})"

    def __eq__(self, other):
        return isinstance(other, Field) and (self.n, self.modulus) == (other.n, other.modulus)

    def __hash__(self):
        return hash((self.n, self.modulus))

    def __reduce__(self):
        return make_field, (self.n, self.modulus)

    @property
    def elements(self) -> range:
        return range(self.order)

    # -- scalar arithmetic -------------------------------------------------

    @staticmethod
    def add(x: int, y: int) -> int:
        return x ^ y

    def mul(self, x: int, y: int) -> int:
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self._log[y]]

    def inv(self, x: int) -> int:
        """Multiplicative inverse with the convention ``inv(0) == 0``."""
        return self._inv[x]

    def div(self, x: int, y: int) -> int:
        """``x * inv(y)``; division by zero yields 0 under the same convention."""
        if x == 0 or y == 0:
            return 0
        return self._exp[self._log[x] + self.order - 1 - self._log[y]]

    def pow(self, x: int, k: int) -> int:
        if k < 0:
            raise ValueError("negative exponent")
        if k == 0:
            return 1
        if x == 0:
            return 0
        return self._exp[self._log[x] * k % (self.order - 1)]

    def trace(self, x: int) -> int:
        return self._tr[x]

    def sqrt(self, x: int) -> int:
        return self._sqrt[x]

    def in_subfield(self, x: int, k: int) -> bool:
        """True if ``x`` lies in GF(2^k), tested as ``x^(2^k) == x``."""
        y = x
        for _ in range(k):
            y = self.mul(y, y)
        return y == x

    def poly_eval(self, coeffs, x: int) -> int:
        """Evaluate ``sum coeffs[i] * x^i`` by Horner's rule."""
        r = 0
        for a in reversed(coeffs):
            r = self.mul(r, x) ^ a
        return r

    # -- quadratics ----------------------------------------------------------

    def quad_count(self, a2: int, a1: int, a0: int) -> int:
        """Number of roots of ``a2 x^2 + a1 x + a0`` from the trace criterion."""
        if a2 == 0:
            raise ValueError("a2 == 0: not a quadratic")
        if a1 == 0:
            return 1
        d = self.div(self.mul(a0, a2), self.mul(a1, a1))
        return 2 - 2 * self._tr[d]

    def quad_roots(self, a2: int, a1: int, a0: int) -> frozenset[int]:
        if a2 == 0:
            raise ValueError("a2 == 0: not a quadratic")
        if a1 == 0:
            return frozenset({self._sqrt[self.div(a0, a2)]})
        # x = (a1/a2) y turns the equation into y^2 + y = a0 a2 / a1^2
        d = self.div(self.mul(a0, a2), self.mul(a1, a1))
        y = self._as_root[d]
        if y < 0:
            return frozenset()
        s = self.div(a1, a2)
        return frozenset({self.mul(s, y), self.mul(s, y ^ 1)})

    # -- vectorised helpers --------------------------------------------------

    def mul_vec(self, xs: np.ndarray, y) -> np.ndarray:
        """Elementwise product of an int array with a scalar or array."""
        xs = np.asarray(xs, dtype=np.int64)
        y = np.asarray(y, dtype=np.int64)
        out = self.exp_table[self.log_table[xs] + self.log_table[y]]
        return np.where((xs == 0) | (y == 0), 0, out)

    def scale_table(self, c: int) -> np.ndarray:
        """Lookup table of ``y -> c*y`` over the whole field."""
        return self.mul_vec(np.arange(self.order, dtype=np.int64), c)

    def fmt(self, x: int) -> str:
        return f"{x:#0{(self.n + 3) // 4 + 2}x}"


@lru_cache(maxsize=None)
def _cached_field(n: int, modulus: int) -> Field:
    return Field(n, modulus)


def make_field(n: int, modulus: int | str | None = None) -> Field:
    """Build (or fetch the cached) GF(2^n).

    ``modulus`` is an int or a hex string such as ``"0x13"``; when omitted the
    smallest irreducible polynomial of degree ``n`` is used, which gives
    ``X^3+X+1`` for n=3 and ``X^4+X+1`` for n=4.
    """
    if not MIN_DEGREE <= n <= MAX_DEGREE:
        raise ValueError(f"degree n={n} outside supported range {MIN_DEGREE}..{MAX_DEGREE}")
    if modulus is None:
        modulus = smallest_irreducible(n)
    elif isinstance(modulus, str):
        modulus = int(modulus, 16)
    return _cached_field(n, int(modulus))
