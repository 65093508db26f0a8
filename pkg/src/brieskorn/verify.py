"""Formula-vs-oracle verification suites over a triple range.

Each suite scans all triples 2 <= a <= b <= c <= bound, checks one of the
package's cross-validation properties, and reports a check count plus any
counterexamples.  This is the engine behind `brieskorn verify`.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from math import comb

from . import classify, filtration, genus, resolution, ring


@dataclass
class SuiteResult:
    name: str
    checks: int = 0
    failures: list[str] = field(default_factory=list)

    @property
    def passed(self) -> bool:
        return not self.failures


def _triples(bound: int):
    for a in range(2, bound + 1):
        for b in range(a, bound + 1):
            for c in range(b, bound + 1):
                yield ring.BrieskornTriple(a, b, c)


def suite_nr_formula(bound: int) -> SuiteResult:
    """nr(m) closed form vs the staircase scan (which also certifies br = nr)."""
    result = SuiteResult("nr-formula-vs-staircase")
    for t in _triples(bound):
        result.checks += 1
        expected = filtration.normal_reduction_number(t)
        scanned = filtration.nr_by_staircase_oracle(t)
        if scanned != expected:
            result.failures.append(f"{t}: scan {scanned} != formula {expected}")
    return result


def suite_membership_oracle(bound: int) -> SuiteResult:
    """Staircase membership vs the a-th-power expansion test, plus the socle lemma."""
    result = SuiteResult("power-membership-oracle")
    for t in _triples(bound):
        top = t.n_seq[t.a - 1] + 2
        for n in range(1, top + 1):
            ideal = ring.closure_of_m_power(t, n)
            for k in range(t.a):
                # socle lemma: x^k lies in closure(m^n) iff n <= n_k
                result.checks += 1
                socle = ring.contains(ideal, ring.Monomial(k, 0, 0))
                if socle != (n <= t.n_seq[k]):
                    result.failures.append(f"{t}: socle test fails at k={k}, n={n}")
                # both tests depend on i, j through i + j only, so one mixed
                # representative per total degree covers every pair i + j <= n
                for s in range(n + 1):
                    result.checks += 1
                    m = ring.Monomial(k, s - s // 2, s // 2)
                    direct = ring.contains(ideal, m)
                    oracle = ring.power_membership_oracle(t, m, n)
                    if direct != oracle:
                        result.failures.append(f"{t}: {m} n={n}: {direct} vs {oracle}")
    return result


def suite_q_recursion(bound: int) -> SuiteResult:
    """q-recursion, corrected q(m) sum, and the a = 2 closed form."""
    result = SuiteResult("q-recursion")
    for t in _triples(bound):
        pg = genus.geometric_genus(t)
        seq = filtration.q_sequence(t, pg)  # re-checks the recursion internally
        result.checks += 1
        q_m = genus.q_of_m(t)
        if seq.q[1] != q_m:
            result.failures.append(f"{t}: q_1 = {seq.q[1]} != q(m) formula {q_m}")
        if t.a == 2:
            r = t.b // 2
            for i in range(1, seq.br + 2):
                result.checks += 1
                expected = pg - i * (r - 1) + comb(i, 2) if i <= r - 1 else pg - comb(r, 2)
                if seq.q[i] != expected:
                    result.failures.append(f"{t}: q({i}m) = {seq.q[i]} != {expected}")
    return result


def suite_hilbert(bound: int) -> SuiteResult:
    """Quadratic-fit Hilbert coefficients; closed form checked for a = 2."""
    result = SuiteResult("hilbert-coefficients")
    for t in _triples(bound):
        result.checks += 1
        e0, e1, e2 = filtration.normal_hilbert_coefficients(t)
        if e0 != t.a:
            result.failures.append(f"{t}: e0_bar = {e0}")
        if t.a == 2:
            r = t.b // 2
            if (e0, e1, e2) != (2, r, comb(r, 2)):
                result.failures.append(f"{t}: a=2 coefficients ({e0},{e1},{e2})")
    return result


def suite_fundamental_genus(bound: int) -> SuiteResult:
    """Closed-form p_f vs Laufer + adjunction, and the -Z^2 formula."""
    result = SuiteResult("fundamental-genus")
    for t in _triples(bound):
        sd = resolution.seifert_data(t)
        if sd.lam[2] > sd.alpha[0] * sd.alpha[1] * sd.alpha[2]:
            continue
        result.checks += 1
        graph = resolution.build_dual_graph(sd)
        by_formula = resolution.fundamental_genus_formula(t)
        by_adjunction = resolution.fundamental_genus_oracle(graph)
        if by_formula != by_adjunction:
            result.failures.append(f"{t}: formula {by_formula} vs adjunction {by_adjunction}")
        z = resolution.fundamental_cycle(graph)
        minus_z2 = -resolution.cycle_self_intersection(graph, z)
        if minus_z2 != resolution.expected_minus_z_squared(t):
            result.failures.append(f"{t}: -Z^2 = {minus_z2}")
    return result


def suite_negative_definite(bound: int) -> SuiteResult:
    """Exact principal-minor test on every constructed intersection matrix.

    Capped at 12 regardless of the requested bound; the minor computation is
    cubic in the vertex count and larger graphs are covered indirectly by the
    termination guard in the fundamental-cycle iteration.
    """
    result = SuiteResult("negative-definiteness")
    for t in _triples(min(bound, 12)):
        result.checks += 1
        if not resolution.is_negative_definite(resolution.dual_graph(t)):
            result.failures.append(f"{t}: intersection matrix not negative definite")
    return result


def suite_classification(bound: int) -> SuiteResult:
    """Two-path elliptic and boundary classification; elliptic implies nr <= 2."""
    result = SuiteResult("classification")
    for t in _triples(bound):
        result.checks += 1
        try:
            elliptic = classify.is_elliptic(t)
            classify.boundary_case(t)
        except Exception as exc:  # path disagreement
            result.failures.append(f"{t}: {exc}")
            continue
        if elliptic and filtration.normal_reduction_number(t) > 2:
            result.failures.append(f"{t}: elliptic but nr(m) > 2")
    return result


def suite_certificates(bound: int) -> SuiteResult:
    """nr(J) >= 3 certificates for the two families of the br = 2 analysis."""
    result = SuiteResult("nr3-certificates")
    families = [(2, 5, 10), (3, 4, 8)]
    for a, b, c_min in families:
        if b > bound:
            continue
        for c in range(c_min, bound + 1):
            result.checks += 1
            t = ring.BrieskornTriple(a, b, c)
            if not classify.verify_nr3_certificate(t):
                result.failures.append(f"{t}: certificate failed")
            elif classify.infer_nr_A(t)[0] != "lower_bound":
                result.failures.append(f"{t}: certificate contradicts exact nr(A)")
    return result


def suite_pg_bound(bound: int) -> SuiteResult:
    """p_g >= C(nr(m), 2) + q(nr(m) * m)."""
    result = SuiteResult("pg-lower-bound")
    for t in _triples(bound):
        result.checks += 1
        if not genus.pg_lower_bound_check(t):
            result.failures.append(f"{t}: p_g bound violated")
    return result


def run_all(bound: int) -> list[SuiteResult]:
    if bound < 2:
        raise ValueError(f"bound must be at least 2, got {bound}")
    return [
        suite_nr_formula(bound),
        suite_membership_oracle(bound),
        suite_q_recursion(bound),
        suite_hilbert(bound),
        suite_fundamental_genus(bound),
        suite_negative_definite(bound),
        suite_classification(bound),
        suite_certificates(bound),
        suite_pg_bound(bound),
    ]
