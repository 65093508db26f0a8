"""Weighted dual graph of the minimal good resolution, and the fundamental cycle.

The graph is a star: a central curve of genus g and self-intersection -c_0,
with ghat_1 + ghat_2 + ghat_3 chains of rational curves attached.  For each
w the chain weights are the HJ expansion of alpha_w / beta_w, repeated in
ghat_w identical copies; the branch is empty when alpha_w = 1.

The fundamental cycle is computed by the standard computation sequence:
start at the all-ones cycle and bump any coefficient whose pairing with the
cycle is still positive.  The minimal anti-nef cycle is unique, so the bump
order is irrelevant; we take the lowest index.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from math import gcd, lcm

from .errors import FormulaInapplicableError, InternalCheckError
from .numtheory import hj_expand, mod_inverse_negation
from .ring import BrieskornTriple


@dataclass(frozen=True)
class SeifertData:
    """Numerical data of the star-shaped resolution graph (one field per symbol)."""

    triple: BrieskornTriple
    lcms: tuple[int, int, int]  # l_w = lcm of the two exponents other than a_w
    alpha: tuple[int, int, int]
    lam: tuple[int, int, int]
    beta: tuple[int, int, int]
    ghat: tuple[int, int, int]  # pairwise gcds: (b,c), (a,c), (a,b)
    ghat_total: int  # abc / lcm(a,b,c)
    ell: int  # lcm(a,b,c)
    genus: int  # genus of the central curve
    center_weight: int  # c_0; central self-intersection is -c_0


@dataclass(frozen=True)
class DualGraph:
    """Vertices carry (self_intersection, genus); vertex 0 is the central curve.

    branch_index[i] is (w, copy, position) for chain vertices, None for the
    center.  Vertices are ordered: center, then w ascending, copies in order,
    chain positions ascending (position 0 attaches to the center).
    """

    vertices: tuple[tuple[int, int], ...]
    neighbors: tuple[tuple[int, ...], ...]
    branch_index: tuple[tuple[int, int, int] | None, ...]

    def intersection(self, i: int, j: int) -> int:
        if i == j:
            return self.vertices[i][0]
        return 1 if j in self.neighbors[i] else 0

    def intersection_matrix(self) -> list[list[int]]:
        n = len(self.vertices)
        return [[self.intersection(i, j) for j in range(n)] for i in range(n)]


@dataclass(frozen=True)
class Cycle:
    """Integer coefficients on the vertices of a dual graph."""

    coefficients: tuple[int, ...]


@lru_cache(maxsize=None)
def seifert_data(t: BrieskornTriple) -> SeifertData:
    """Compute all Seifert invariants of (a, b, c), checking integrality of g and c_0."""
    exps = (t.a, t.b, t.c)
    lcms = (lcm(t.b, t.c), lcm(t.a, t.c), lcm(t.a, t.b))
    alpha = tuple(a_w // gcd(a_w, l_w) for a_w, l_w in zip(exps, lcms))
    lam = tuple(l_w // gcd(a_w, l_w) for a_w, l_w in zip(exps, lcms))
    beta = tuple(mod_inverse_negation(lam_w, alpha_w) for lam_w, alpha_w in zip(lam, alpha))
    ghat = (gcd(t.b, t.c), gcd(t.a, t.c), gcd(t.a, t.b))
    ell = lcm(t.a, t.b, t.c)
    ghat_total = t.D // ell

    two_g = ghat_total - sum(ghat) + 2
    if two_g % 2 != 0 or two_g < 0:
        raise InternalCheckError(f"{t}: central genus from 2g-2 = {two_g - 2} is invalid")
    genus = two_g // 2

    c0 = sum(
        Fraction(g_w * b_w, a_w) for g_w, b_w, a_w in zip(ghat, beta, alpha)
    ) + Fraction(ghat_total, ell)
    if c0.denominator != 1 or c0 <= 0:
        raise InternalCheckError(f"{t}: central weight c_0 = {c0} is not a positive integer")

    return SeifertData(
        triple=t,
        lcms=lcms,
        alpha=alpha,
        lam=lam,
        beta=beta,
        ghat=ghat,
        ghat_total=ghat_total,
        ell=ell,
        genus=genus,
        center_weight=int(c0),
    )


@lru_cache(maxsize=None)
def build_dual_graph(sd: SeifertData) -> DualGraph:
    vertices: list[tuple[int, int]] = [(-sd.center_weight, sd.genus)]
    neighbors: list[list[int]] = [[]]
    branch_index: list[tuple[int, int, int] | None] = [None]

    for w in range(3):
        if sd.alpha[w] == 1:
            continue  # empty branch
        chain = hj_expand(sd.alpha[w], sd.beta[w]).expansion
        for copy in range(sd.ghat[w]):
            previous = 0
            for position, c in enumerate(chain):
                idx = len(vertices)
                vertices.append((-c, 0))
                neighbors.append([previous])
                neighbors[previous].append(idx)
                branch_index.append((w + 1, copy, position))
                previous = idx

    return DualGraph(
        vertices=tuple(vertices),
        neighbors=tuple(tuple(adj) for adj in neighbors),
        branch_index=tuple(branch_index),
    )


def dual_graph(t: BrieskornTriple) -> DualGraph:
    return build_dual_graph(seifert_data(t))


@lru_cache(maxsize=None)
def fundamental_cycle(g: DualGraph) -> Cycle:
    """Laufer's computation sequence from the all-ones cycle."""
    n = len(g.vertices)
    z = [1] * n
    # pairing[i] = Z . E_i, maintained incrementally; the minimal anti-nef
    # cycle is unique, so the order of bumps does not matter
    pairing = [g.vertices[i][0] + len(g.neighbors[i]) for i in range(n)]
    worklist = [i for i in range(n) if pairing[i] > 0]
    # cap must dominate sum(z_i - 1); coefficients on valid graphs have been
    # observed above sum(|w|), so the guard is quadratic in the vertex count
    cap = sum(-w for w, _ in g.vertices) * n * n
    steps = 0
    while worklist:
        i = worklist.pop()
        if pairing[i] <= 0:
            continue
        z[i] += 1
        pairing[i] += g.vertices[i][0]
        if pairing[i] > 0:
            worklist.append(i)
        for j in g.neighbors[i]:
            pairing[j] += 1
            if pairing[j] > 0:
                worklist.append(j)
        steps += 1
        if steps > cap:
            raise InternalCheckError(
                "fundamental cycle did not terminate; graph is not negative definite"
            )
    return Cycle(tuple(z))


def cycle_pairing(g: DualGraph, z: Cycle, i: int) -> int:
    """Z . E_i."""
    w, _ = g.vertices[i]
    return z.coefficients[i] * w + sum(z.coefficients[j] for j in g.neighbors[i])


def cycle_self_intersection(g: DualGraph, z: Cycle) -> int:
    return sum(z.coefficients[i] * cycle_pairing(g, z, i) for i in range(len(g.vertices)))


def canonical_degree(g: DualGraph, i: int) -> int:
    """K . E_i by adjunction: -E_i^2 + 2*genus(E_i) - 2."""
    w, gen = g.vertices[i]
    return -w + 2 * gen - 2


def fundamental_genus_oracle(g: DualGraph) -> int:
    """p_a(Z_E) = 1 + (Z^2 + Z.K)/2 from the intersection form."""
    z = fundamental_cycle(g)
    zz = cycle_self_intersection(g, z)
    zk = sum(z.coefficients[i] * canonical_degree(g, i) for i in range(len(g.vertices)))
    if (zz + zk) % 2 != 0:
        raise InternalCheckError("Z^2 + Z.K is odd; adjunction violated")
    return 1 + (zz + zk) // 2


def fundamental_genus_formula(t: BrieskornTriple) -> int:
    """Closed form for p_f, valid when lambda_3 <= alpha_1*alpha_2*alpha_3."""
    sd = seifert_data(t)
    alpha_product = sd.alpha[0] * sd.alpha[1] * sd.alpha[2]
    if sd.lam[2] > alpha_product:
        raise FormulaInapplicableError(
            f"{t}: lambda_3 = {sd.lam[2]} > alpha = {alpha_product}"
        )
    ceil_ratio = -(-sd.lam[2] // sd.alpha[2])
    numerator = t.a * t.b - t.a - t.b - (2 * ceil_ratio - 1) * gcd(t.a, t.b)
    if numerator % 2 != 0:
        raise InternalCheckError(f"{t}: p_f numerator {numerator} is odd")
    pf = numerator // 2 + 1
    if pf < 0:
        raise InternalCheckError(f"{t}: p_f = {pf} < 0")
    return pf


@lru_cache(maxsize=None)
def fundamental_genus(t: BrieskornTriple) -> int:
    """p_f via the closed form when applicable, otherwise via Laufer + adjunction."""
    try:
        return fundamental_genus_formula(t)
    except FormulaInapplicableError:
        return fundamental_genus_oracle(dual_graph(t))


def expected_minus_z_squared(t: BrieskornTriple) -> int:
    """-Z_E^2 = ghat_3 * ceil(lambda_3 / alpha_3) (with the p_f formula's hypothesis)."""
    sd = seifert_data(t)
    return sd.ghat[2] * (-(-sd.lam[2] // sd.alpha[2]))


def leading_principal_minors(matrix: list[list[int]]) -> list[int]:
    """All leading principal minors by fraction-free (Bareiss) elimination.

    Stops early (padding with the zero determinant) if a pivot vanishes,
    which already disqualifies definiteness.
    """
    n = len(matrix)
    m = [row[:] for row in matrix]
    minors: list[int] = []
    prev = 1
    for k in range(n):
        pivot = m[k][k]
        minors.append(pivot)
        if pivot == 0:
            minors.extend(0 for _ in range(n - k - 1))
            break
        for i in range(k + 1, n):
            for j in range(k + 1, n):
                m[i][j] = (m[i][j] * pivot - m[i][k] * m[k][j]) // prev
        prev = pivot
    return minors


def is_negative_definite(g: DualGraph) -> bool:
    """Sign test (-1)^k * minor_k > 0 on all leading principal minors."""
    minors = leading_principal_minors(g.intersection_matrix())
    return all(
        (minor > 0 if k % 2 == 1 else minor < 0) for k, minor in enumerate(minors)
    )


def to_dot(g: DualGraph) -> str:
    """Graphviz rendering; byte-stable for identical input."""
    lines = ["graph {"]
    for i, (weight, genus) in enumerate(g.vertices):
        info = g.branch_index[i]
        if info is None:
            label = f"E0 (g={genus}, {weight})"
        else:
            w, _, position = info
            label = f"E{w},{position + 1} ({weight})"
        lines.append(f'  n{i} [label="{label}"];')
    for i in range(len(g.vertices)):
        for j in g.neighbors[i]:
            if i < j:
                lines.append(f"  n{i} -- n{j};")
    lines.append("}")
    return "\n".join(lines) + "\n"


def to_json_dict(g: DualGraph) -> dict:
    """Canonical serialization: vertices in construction order."""
    return {
        "vertices": [
            {
                "branch": None
                if g.branch_index[i] is None
                else list(g.branch_index[i]),
                "genus": g.vertices[i][1],
                "neighbors": sorted(g.neighbors[i]),
                "weight": g.vertices[i][0],
            }
            for i in range(len(g.vertices))
        ]
    }
