"""Elementary exact integer utilities.

Everything here is pure integer / rational arithmetic: Hirzebruch-Jung
(descending) continued fractions and the negated modular inverse used to
compute the branch data of resolution graphs.  No floating point.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import gcd


@dataclass(frozen=True)
class HJFraction:
    """A coprime pair alpha/beta together with its HJ expansion.

    The expansion [[c_1, ..., c_s]] denotes c_1 - 1/(c_2 - 1/(... - 1/c_s))
    with every c_j >= 2.  The pair (1, 0) has the empty expansion.
    """

    numerator: int
    denominator: int
    expansion: tuple[int, ...]

    def value(self) -> Fraction:
        if self.denominator == 0:
            raise ValueError("alpha/beta is undefined for beta = 0")
        return Fraction(self.numerator, self.denominator)


def hj_expand(alpha: int, beta: int) -> HJFraction:
    """Expand alpha/beta as a Hirzebruch-Jung continued fraction.

    Requires 0 <= beta < alpha with gcd(alpha, beta) = 1 when beta >= 1;
    (1, 0) is allowed and yields the empty expansion.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if not 0 <= beta < alpha:
        raise ValueError(f"need 0 <= beta < alpha, got beta={beta}, alpha={alpha}")
    if beta == 0:
        if alpha != 1:
            raise ValueError("beta = 0 is only allowed together with alpha = 1")
        return HJFraction(1, 0, ())
    if gcd(alpha, beta) != 1:
        raise ValueError(f"alpha={alpha} and beta={beta} are not coprime")

    expansion: list[int] = []
    num, den = alpha, beta
    while den:
        c = -(-num // den)  # ceil(num/den)
        expansion.append(c)
        # partial denominators stay positive: 0 <= c*den - num < den
        num, den = den, c * den - num
    return HJFraction(alpha, beta, tuple(expansion))


def hj_evaluate(expansion) -> Fraction:
    """Exact rational value of a descending continued fraction.

    Inverse of hj_expand: hj_evaluate(hj_expand(a, b).expansion) == a/b.
    """
    terms = tuple(expansion)
    if not terms:
        raise ValueError("cannot evaluate an empty expansion")
    if any(c < 2 for c in terms):
        raise ValueError(f"all entries must be >= 2, got {terms}")
    value = Fraction(terms[-1])
    for c in reversed(terms[:-1]):
        value = c - 1 / value
    return value


def mod_inverse_negation(lam: int, alpha: int) -> int:
    """The unique beta with lam*beta + 1 == 0 (mod alpha) and 0 <= beta < alpha.

    Returns 0 when alpha == 1.
    """
    if alpha < 1:
        raise ValueError(f"alpha must be positive, got {alpha}")
    if lam < 1:
        raise ValueError(f"lam must be positive, got {lam}")
    if alpha == 1:
        return 0
    try:
        inverse = pow(lam % alpha, -1, alpha)
    except ValueError as exc:
        raise ValueError(f"{lam} is not invertible modulo {alpha}") from exc
    return (-inverse) % alpha
