"""Classification predicates for Brieskorn triples.

Wherever the source result gives both a computable criterion and an explicit
family list (elliptic singularities, boundary cases p_g = C(nr, 2)), both
paths are evaluated and any disagreement raises: the lists are executable
statements, not lookups.
"""

from __future__ import annotations

from math import comb

from .errors import InternalCheckError
from .filtration import normal_reduction_number
from .genus import geometric_genus
from .resolution import fundamental_genus
from .ring import BrieskornTriple


def is_rational(t: BrieskornTriple) -> bool:
    return geometric_genus(t) == 0


def in_elliptic_list(t: BrieskornTriple) -> bool:
    """Explicit list of triples with fundamental genus one."""
    a, b, c = t.a, t.b, t.c
    return (
        (a, b) == (2, 3) and c >= 6
        or (a, b) == (2, 4)  # any c >= b
        or (a, b) == (2, 5) and c <= 9
        or (a, b) == (3, 3)  # any c >= 3
        or (a, b) == (3, 4) and c <= 5
    )


def is_elliptic(t: BrieskornTriple) -> bool:
    by_genus = fundamental_genus(t) == 1
    by_list = in_elliptic_list(t)
    if by_genus != by_list:
        raise InternalCheckError(
            f"{t}: p_f path says {by_genus}, elliptic list says {by_list}"
        )
    return by_genus


def rees_normal(t: BrieskornTriple) -> bool:
    """The Rees algebra of m is normal iff br(m) = a - 1."""
    return normal_reduction_number(t) == t.a - 1


def is_pg_ideal_m(t: BrieskornTriple) -> bool:
    """m is a p_g-ideal iff a = 2 and br(m) = 1 (i.e. b in {2, 3})."""
    return t.a == 2 and t.n_seq[1] == 1


def boundary_family_nr(t: BrieskornTriple) -> int | None:
    """nr(A) if (a, b, c) is in the explicit boundary list, else None."""
    a, b, c = t.a, t.b, t.c
    if a == 2:
        if b == 2:
            return 1
        if b == 3 and c <= 5:
            return 1
        if b == 4 and c <= 7:
            return 2
        if b % 2 == 0 and b >= 6 and c <= b + 2:
            return b // 2
        if b % 2 == 1 and b >= 5 and c <= b + 1:
            return (b - 1) // 2
    elif a == 3:
        # the a = 3 families stop at b <= 5: for b >= 7 the weight of x
        # drops below the a-invariant and the lattice count picks up an
        # extra point, so p_g exceeds C(nr, 2) by at least one
        if b == 3 and c <= 5:
            return 2
        if b == 4 and c == 4:
            return 2
        if b == 5 and c <= 6:
            return 3
    return None


def boundary_case(t: BrieskornTriple) -> bool:
    """p_g = C(nr(m), 2), verified against the family list."""
    nr = normal_reduction_number(t)
    by_count = geometric_genus(t) == comb(nr, 2)
    family = boundary_family_nr(t)
    if by_count != (family is not None):
        raise InternalCheckError(
            f"{t}: p_g count says {by_count}, boundary list says {family is not None}"
        )
    if family is not None and family != nr:
        raise InternalCheckError(f"{t}: listed nr(A) = {family} but nr(m) = {nr}")
    return by_count


def infer_nr_A(t: BrieskornTriple) -> tuple[str, int]:
    """("exact", nr) when p_g < C(nr+1, 2) or the boundary list applies; else a lower bound."""
    nr = normal_reduction_number(t)
    family = boundary_family_nr(t)
    if family is not None:
        return ("exact", family)
    if geometric_genus(t) < comb(nr + 1, 2):
        return ("exact", nr)
    return ("lower_bound", nr)


def _in_reduction_power(u: int, v: int, n: int) -> bool:
    """y^u z^v in (y, z^2)^n, i.e. u + floor(v/2) >= n."""
    return u + v // 2 >= n


def verify_nr3_certificate(t: BrieskornTriple) -> bool:
    """Check the explicit nr(J) >= 3 certificates for J = closure((y, z^2)).

    Family (2, 5, c >= 10): xz is not in (y, z^2) but (xz)^2 = (y^5 + z^c)z^2
    lies in (y, z^2)^6.  Family (3, 4, c >= 8): x^2 z is not in (y, z^2) but
    (x^2 z)^3 = (y^4 + z^c)^2 z^3 lies in (y, z^2)^9.
    """
    a, b, c = t.a, t.b, t.c
    if (a, b) == (2, 5) and c >= 10:
        power, z_extra, target = 1, 2, 6
    elif (a, b) == (3, 4) and c >= 8:
        power, z_extra, target = 2, 3, 9
    else:
        raise ValueError(f"{t}: outside the certificate families")

    # the witness monomial (z, resp. z) is outside (y, z^2) itself
    if _in_reduction_power(0, 1, 1):
        raise InternalCheckError("z should not lie in (y, z^2)")

    # every term of (y^b + z^c)^power * z^z_extra lies in (y, z^2)^target
    return all(
        _in_reduction_power(b * s, c * (power - s) + z_extra, target)
        for s in range(power + 1)
    )
