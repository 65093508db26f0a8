"""The hypersurface ring of x^a + y^b + z^c and its staircase monomial ideals.

Monomials are written in the truncated basis {x^k y^i z^j : 0 <= k <= a-1},
using the relation x^a = -(y^b + z^c).  Every ideal handled here has the
shape sum_k x^k * Q^{e_k} with Q = (y, z); such an ideal is encoded by its
per-level thresholds e_0, ..., e_{a-1}, and a monomial x^k y^i z^j belongs
to it exactly when i + j >= e_k.  This covers all closures of powers of the
maximal ideal and their Q-multiples.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import cached_property
from math import gcd


@dataclass(frozen=True)
class BrieskornTriple:
    """Validated exponent triple (a, b, c) with 2 <= a <= b <= c."""

    a: int
    b: int
    c: int

    def __post_init__(self) -> None:
        if self.a < 2:
            raise ValueError(f"need a >= 2, got a={self.a}")
        if not self.a <= self.b <= self.c:
            raise ValueError(f"need a <= b <= c, got ({self.a}, {self.b}, {self.c})")

    @cached_property
    def d(self) -> int:
        return gcd(self.a, self.b)

    @cached_property
    def a_prime(self) -> int:
        return self.a // self.d

    @cached_property
    def b_prime(self) -> int:
        return self.b // self.d

    @cached_property
    def n_seq(self) -> tuple[int, ...]:
        """n_k = floor(k*b/a) for k = 0..a-1; strictly increasing from k = 1 on."""
        return tuple(k * self.b // self.a for k in range(self.a))

    @property
    def q0(self) -> int:
        return self.b * self.c

    @property
    def q1(self) -> int:
        return self.a * self.c

    @property
    def q2(self) -> int:
        return self.a * self.b

    @property
    def D(self) -> int:
        return self.a * self.b * self.c

    @property
    def a_invariant(self) -> int:
        return self.D - self.q0 - self.q1 - self.q2


def new_triple(a: int, b: int, c: int) -> BrieskornTriple:
    """Validate and build a Brieskorn triple (characteristic zero assumed)."""
    return BrieskornTriple(a, b, c)


@dataclass(frozen=True)
class Monomial:
    """x^k y^i z^j in the truncated basis (0 <= k <= a-1)."""

    k: int
    i: int
    j: int

    def __post_init__(self) -> None:
        if self.k < 0 or self.i < 0 or self.j < 0:
            raise ValueError(f"exponents must be nonnegative, got {self}")


@dataclass(frozen=True)
class StaircaseIdeal:
    """An ideal sum_k x^k * Q^{e_k}, Q = (y, z), given by thresholds e_k.

    A threshold of None encodes an absent level (no x^k component at all);
    e_k = 0 encodes the full level x^k * A.  Ideals produced by
    closure_of_m_power always have all levels present.
    """

    triple: BrieskornTriple
    thresholds: tuple[int | None, ...]

    def __post_init__(self) -> None:
        if len(self.thresholds) != self.triple.a:
            raise ValueError(
                f"expected {self.triple.a} thresholds, got {len(self.thresholds)}"
            )
        for e in self.thresholds:
            if e is not None and e < 0:
                raise ValueError(f"thresholds must be nonnegative, got {e}")


def closure_of_m_power(t: BrieskornTriple, n: int) -> StaircaseIdeal:
    """Integral closure of m^n: thresholds e_k = max(n - n_k, 0).

    n = 0 gives the unit ideal (all thresholds zero).
    """
    if n < 0:
        raise ValueError(f"power must be nonnegative, got {n}")
    return StaircaseIdeal(t, tuple(max(n - nk, 0) for nk in t.n_seq))


def contains(ideal: StaircaseIdeal, m: Monomial) -> bool:
    """Membership test: x^k y^i z^j is in the ideal iff i + j >= e_k."""
    if m.k >= ideal.triple.a:
        raise ValueError(f"x-exponent {m.k} exceeds a-1 = {ideal.triple.a - 1}")
    e = ideal.thresholds[m.k]
    if e is None:
        return False
    return m.i + m.j >= e


def multiply_by_Q(ideal: StaircaseIdeal) -> StaircaseIdeal:
    """Q * sum_k x^k Q^{e_k} = sum_k x^k Q^{e_k + 1}."""
    return StaircaseIdeal(
        ideal.triple,
        tuple(None if e is None else e + 1 for e in ideal.thresholds),
    )


def colength(ideal: StaircaseIdeal) -> int:
    """Length of A / ideal: counts basis monomials x^k y^i z^j with i+j < e_k."""
    total = 0
    for e in ideal.thresholds:
        if e is None:
            raise ValueError("colength is infinite: ideal has an absent level")
        total += e * (e + 1) // 2
    return total


def power_membership_oracle(t: BrieskornTriple, m: Monomial, n: int) -> bool:
    """Integral-closure membership by raising to the a-th power.

    (x^k y^i z^j)^a rewrites as (-1)^k (y^b + z^c)^k y^{ai} z^{aj}; the
    monomial lies in the closure of m^n iff every term of that expansion has
    (y, z)-degree at least n*a.  Independent of the staircase description.
    """
    if n < 1:
        raise ValueError(f"power must be positive, got {n}")
    if m.k >= t.a:
        raise ValueError(f"x-exponent {m.k} exceeds a-1 = {t.a - 1}")
    min_term = min(
        (t.b * s + t.c * (m.k - s) for s in range(m.k + 1)), default=0
    )
    return min_term + t.a * (m.i + m.j) >= n * t.a
