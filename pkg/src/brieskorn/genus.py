"""Geometric genus by lattice-point counting, and q(m).

p_g equals the number of nonnegative integer triples (t0, t1, t2) with
q0*t0 + q1*t1 + q2*t2 <= D - q0 - q1 - q2, where (q0, q1, q2) = (bc, ac, ab)
are the weights of x, y, z and D = abc.  The count is done by a direct loop
over t0 and t1 with the t2 range collapsed to an integer division.
"""

from __future__ import annotations

from functools import lru_cache
from math import comb

from .errors import InternalCheckError
from .filtration import colength_drop, normal_reduction_number, q_sequence
from .ring import BrieskornTriple


@lru_cache(maxsize=None)
def geometric_genus(t: BrieskornTriple) -> int:
    """Exact count of lattice points in the weighted simplex; 0 if a(B) < 0."""
    bound = t.a_invariant
    if bound < 0:
        return 0
    q0, q1, q2 = t.q0, t.q1, t.q2
    total = 0
    for t0 in range(bound // q0 + 1):
        r0 = bound - q0 * t0
        for t1 in range(r0 // q1 + 1):
            total += (r0 - q1 * t1) // q2 + 1
    return total


def q_of_m(t: BrieskornTriple) -> int:
    """q(m) = p_g - sum_{n>=1} v_n.

    The tail sum telescopes to sum_{k=1}^{a-1} (n_k - n_{k-1})(a-k) minus the
    n = 0 term v_0 = a - 1, which the recursion (valid only for n >= 1) never
    reaches.  Must land in the sandwich 0 <= q(m) <= p_g.
    """
    pg = geometric_genus(t)
    n = t.n_seq
    tail = sum((n[k] - n[k - 1]) * (t.a - k) for k in range(1, t.a)) - (t.a - 1)
    q = pg - tail
    if not 0 <= q <= pg:
        raise InternalCheckError(f"{t}: q(m) = {q} outside [0, {pg}]")
    return q


def pg_lower_bound_check(t: BrieskornTriple) -> bool:
    """p_g >= C(nr(m), 2) + q(nr(m) * m)."""
    pg = geometric_genus(t)
    seq = q_sequence(t, pg)
    r = seq.nr
    return pg >= comb(r, 2) + seq.q[r]


def v_tail_sum(t: BrieskornTriple) -> int:
    """sum_{n>=1} v_n, summed termwise (cross-check for the q_of_m tail)."""
    br = normal_reduction_number(t)
    return sum(colength_drop(t, n) for n in range(1, br + 1))
