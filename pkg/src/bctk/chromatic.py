"""Exact chromatic polynomials.

``chromatic_polynomial`` runs the deletion-contraction recursion on the
minimum edge.  ``oracle_polynomial`` is an independent route: it counts
proper colourings directly for lambda = 0..n and interpolates.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import factorial, perm

from .errors import CoefficientOverflowError, GuardExceededError
from .graph import Graph, contract, delete, min_edge
from .guards import MAX_COLORING_MAPS

INT64_MAX = 2**63 - 1
INT64_MIN = -(2**63)


def _checked(value: int) -> int:
    if not INT64_MIN <= value <= INT64_MAX:
        raise CoefficientOverflowError(f"value {value} does not fit in a signed 64-bit integer")
    return value


@dataclass(frozen=True)
class Polynomial:
    """Integer polynomial in lambda of nominal degree ``n``.

    ``dense[i]`` is the coefficient of ``lambda**i`` and always has ``n + 1``
    entries.  ``ak`` is the unsigned view ``a_k = (-1)**k * dense[n - k]``.
    """

    n: int
    dense: tuple[int, ...]

    def __post_init__(self):
        if len(self.dense) != self.n + 1:
            raise ValueError(f"dense must have n+1={self.n + 1} entries, got {len(self.dense)}")
        for c in self.dense:
            _checked(c)

    @classmethod
    def zero(cls, n: int) -> "Polynomial":
        return cls(n, (0,) * (n + 1))

    @classmethod
    def monomial(cls, n: int) -> "Polynomial":
        return cls(n, (0,) * n + (1,))

    @classmethod
    def from_ak(cls, ak) -> "Polynomial":
        n = len(ak) - 1
        return cls(n, tuple((-1) ** k * ak[k] for k in range(n, -1, -1)))

    @property
    def ak(self) -> tuple[int, ...]:
        return tuple((-1) ** k * self.dense[self.n - k] for k in range(self.n + 1))

    def is_zero(self) -> bool:
        return not any(self.dense)

    def padded(self, n: int) -> "Polynomial":
        if n < self.n:
            raise ValueError("cannot pad to a smaller degree")
        return Polynomial(n, self.dense + (0,) * (n - self.n))

    def __sub__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.n, other.n)
        a, b = self.padded(n).dense, other.padded(n).dense
        return Polynomial(n, tuple(_checked(x - y) for x, y in zip(a, b)))

    def __add__(self, other: "Polynomial") -> "Polynomial":
        n = max(self.n, other.n)
        a, b = self.padded(n).dense, other.padded(n).dense
        return Polynomial(n, tuple(_checked(x + y) for x, y in zip(a, b)))

    def __call__(self, lam: int) -> int:
        return evaluate(self, lam)

    def render(self, ascii: bool = False) -> str:
        var = "x" if ascii else "λ"
        terms = []
        for power in range(self.n, -1, -1):
            c = self.dense[power]
            if c == 0:
                continue
            mag = abs(c)
            if power == 0:
                body = str(mag)
            else:
                body = ("" if mag == 1 else str(mag)) + var + (f"^{power}" if power > 1 else "")
            if not terms:
                terms.append(("-" if c < 0 else "") + body)
            else:
                terms.append(("- " if c < 0 else "+ ") + body)
        return " ".join(terms) if terms else "0"

    def __str__(self):
        return self.render()


def evaluate(P: Polynomial, lam: int) -> int:
    """Horner evaluation; every intermediate value is range-checked."""
    acc = 0
    for c in reversed(P.dense):
        acc = _checked(_checked(acc * lam) + c)
    return acc


def _simplify_parallels(G: Graph) -> Graph:
    # keep the smallest edge of each parallel class, i.e. repeatedly delete the
    # larger edge of a parallel pair
    seen = set()
    kept = []
    for eid, ends in G.edges:
        if ends not in seen:
            seen.add(ends)
            kept.append((eid, ends))
    return Graph(G.n, tuple(kept), "simplify")


def _canonical_key(G: Graph):
    # P does not depend on edge ids, so the memo ignores them
    return G.n, tuple(sorted(tuple(sorted(ends)) for _, ends in G.edges))


def chromatic_polynomial(G: Graph, memo: dict | None = None) -> Polynomial:
    """Chromatic polynomial by deletion-contraction on the minimum edge.

    Pass a dict as ``memo`` to cache results by the graph's id-free incidence
    listing; the same dict may be reused across calls.
    """
    if memo is not None:
        key = _canonical_key(G)
        hit = memo.get(key)
        if hit is not None:
            return hit
        result = _chromatic(G, memo)
        memo[key] = result
        return result
    return _chromatic(G, None)


def _chromatic(G: Graph, memo) -> Polynomial:
    if G.has_loop():
        return Polynomial.zero(G.n)
    if G.m == 0:
        return Polynomial.monomial(G.n)
    simple = _simplify_parallels(G)
    if simple.m < G.m:
        return chromatic_polynomial(simple, memo)
    e = min_edge(G)
    return chromatic_polynomial(delete(G, e), memo) - chromatic_polynomial(contract(G, e), memo)


def count_colorings_bruteforce(G: Graph, lam: int) -> int:
    """Number of maps V -> {1..lam} leaving no edge monochromatic.

    Proper colourings are enumerated one colour-permutation orbit at a time:
    each restricted growth string (colours numbered by first use) with ``j``
    classes stands for exactly ``lam * (lam-1) * ... * (lam-j+1)`` maps.
    """
    if lam < 0:
        raise ValueError("lambda must be nonnegative")
    if lam ** G.n > MAX_COLORING_MAPS:
        raise GuardExceededError(f"lambda^n = {lam}^{G.n} exceeds {MAX_COLORING_MAPS}")
    if G.has_loop():
        return 0
    n = G.n
    earlier = [set() for _ in range(n)]
    for _, ends in G.edges:
        u, v = sorted(ends)
        earlier[v].add(u)

    colour = [0] * n
    total = 0

    def extend(v: int, used: int):
        nonlocal total
        if v == n:
            total += perm(lam, used)
            return
        blocked = {colour[u] for u in earlier[v]}
        for c in range(used):
            if c not in blocked:
                colour[v] = c
                extend(v + 1, used)
        if used < lam:
            colour[v] = used
            extend(v + 1, used + 1)

    extend(0, 0)
    return _checked(total)


def interpolate_integer_values(values) -> tuple[int, ...]:
    """Dense coefficients of the polynomial through ``(i, values[i])``.

    Newton forward form: ``sum_k delta_k * C(x, k)``, expanded over a common
    denominator ``d!``.  Raises ``ValueError`` if the interpolant does not
    have integer coefficients.
    """
    d = len(values) - 1
    scale = factorial(d)
    numerators = [0] * (d + 1)
    falling = [1]  # coefficients of x(x-1)...(x-k+1), low to high
    row = list(values)
    for k in range(d + 1):
        delta = row[0]
        row = [b - a for a, b in zip(row, row[1:])]
        if k > 0:
            falling = [0] + falling
            for i in range(len(falling) - 1):
                falling[i] -= (k - 1) * falling[i + 1]
        weight = delta * (scale // factorial(k))
        for i, c in enumerate(falling):
            numerators[i] += weight * c
    coeffs = []
    for num in numerators:
        q, r = divmod(num, scale)
        if r:
            raise ValueError("interpolating polynomial has non-integer coefficients")
        coeffs.append(q)
    return tuple(coeffs)


def oracle_polynomial(G: Graph) -> Polynomial:
    counts = [count_colorings_bruteforce(G, lam) for lam in range(G.n + 1)]
    return Polynomial(G.n, tuple(_checked(c) for c in interpolate_integer_values(counts)))
