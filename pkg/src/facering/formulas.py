"""Closed-form face-number identities and bounds, each returned as a
prediction to be compared against the brute-force reduction oracle.

Binomial convention throughout: C(b, 0) = 1 and C(b, a) = 0 for a < 0 (and
for a > b).  Empty sums are 0.  No formula silently evaluates outside its
hypothesis class: a violated precondition raises
:class:`facering.errors.PreconditionError`, and callers that want the
out-of-hypothesis number anyway must catch it deliberately.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field
from math import comb

from . import classify as _classify
from . import homology, ring
from .complexes import SimplicialComplex, link
from .errors import PreconditionError
from .fields import FieldSpec


def binom(b: int, a: int) -> int:
    if a < 0 or a > b:
        return 0
    return comb(b, a)


def macaulay_max_growth(value: int, degree: int) -> int:
    """Macaulay's bound value^<degree>: the largest admissible next entry of
    an M-sequence after ``value`` in position ``degree``.

    Uses the unique expansion value = C(a_k, k) + C(a_{k-1}, k-1) + ... with
    a_k > a_{k-1} > ... >= j >= 1, then bumps every binomial one step up.
    """
    if value < 0 or degree < 1:
        raise ValueError("need value >= 0 and degree >= 1")
    if value == 0:
        return 0
    rem, j, out = value, degree, 0
    while rem > 0 and j >= 1:
        a = j
        while comb(a + 1, j) <= rem:
            a += 1
        rem -= comb(a, j)
        out += comb(a + 1, j + 1)
        j -= 1
    return out


def link_euler_sum(K: SimplicialComplex) -> int:
    """sum_v (1 + (-1)^(d-1) * chi~(lk v)); for even d this equals twice the
    unreduced Euler characteristic of any pseudomanifold with isolated
    singularities."""
    d = K.d
    sign = (-1) ** (d - 1)
    return sum(
        1 + sign * link(K, (v,)).reduced_euler_characteristic() for v in range(K.n)
    )


@dataclass(frozen=True)
class DSRow:
    i: int
    predicted: int
    actual: int

    @property
    def defect(self) -> int:
        return self.actual - self.predicted


@dataclass(frozen=True)
class DSReport:
    """Dehn-Sommerville relations with Euler-characteristic corrections for
    the complex and its vertex links; defect 0 in every degree for
    pseudomanifolds with isolated singularities."""

    rows: tuple

    @property
    def all_zero(self) -> bool:
        return all(r.defect == 0 for r in self.rows)


@dataclass(frozen=True)
class HPrimePrediction:
    """A predicted Hilbert function for the generic Artinian reduction."""

    values: tuple
    method: str
    inputs: dict = dc_field(default_factory=dict)

    def __getitem__(self, i):
        return self.values[i] if 0 <= i < len(self.values) else 0


def _report(K, field, report):
    return report if report is not None else _classify.classify(K, field)


def dehn_sommerville(K: SimplicialComplex, field: FieldSpec, report=None, force=False) -> DSReport:
    """h_{d-i} = h_i + (-1)^(i-1) C(d,i) (1 + (-1)^d chi~)
    + (-1)^i C(d-1,i-1) sum_v (1 + (-1)^(d-1) chi~(lk v)), for 0 <= i <= d."""
    rep = _report(K, field, report)
    if not (rep.pseudomanifold and rep.pseudomanifold_isolated) and not force:
        raise PreconditionError("Dehn-Sommerville needs a pseudomanifold with isolated singularities")
    d = K.d
    h = K.h_vector()
    chi = K.reduced_euler_characteristic()
    lsum = link_euler_sum(K)
    rows = []
    for i in range(d + 1):
        predicted = (
            h[i]
            + (-1) ** (i - 1) * binom(d, i) * (1 + (-1) ** d * chi)
            + (-1) ** i * binom(d - 1, i - 1) * lsum
        )
        rows.append(DSRow(i, predicted, h[d - i]))
    return DSReport(tuple(rows))


def schenzel_hprime(K: SimplicialComplex, field: FieldSpec, report=None, force=False) -> HPrimePrediction:
    """Buchsbaum case: h'_i = h_i + C(d,i) sum_{j=1}^{i-1} (-1)^(i-j-1) beta_{j-1}."""
    rep = _report(K, field, report)
    if not rep.buchsbaum and not force:
        raise PreconditionError("Schenzel's formula needs a Buchsbaum complex")
    d = K.d
    h = K.h_vector()
    betti = homology.reduced_betti(K, field)
    values = tuple(
        h[i] + binom(d, i) * sum((-1) ** (i - j - 1) * betti[j - 1] for j in range(1, i))
        for i in range(d + 1)
    )
    return HPrimePrediction(values, "schenzel", {"betti": betti.tail()})


def his_hprime(
    K: SimplicialComplex,
    field: FieldSpec,
    theta=None,
    report=None,
    ws: homology.CohomologyWorkspace | None = None,
    force=False,
) -> HPrimePrediction:
    """Homologically isolated singularities:

    h'_i = h_i + C(d,i) sum_{j<i} (-1)^(i-j-1) beta_{j-1}
         + C(d-1,i) [K_{i-1} - sum_v sum_{j<i-1} (-1)^(i-j) beta_{j-1}(lk v)].

    The kernel dimensions K are independent of the (fully supported) weight
    form under the hypothesis; the all-ones form is used by default.
    """
    rep = _report(K, field, report)
    if not rep.homologically_isolated and not force:
        raise PreconditionError("formula needs homologically isolated singularities")
    d = K.d
    h = K.h_vector()
    ws = ws or homology.CohomologyWorkspace(K, field)
    theta = tuple(theta) if theta is not None else homology.all_ones_form(K)
    kc = ws.kc_table(theta)
    betti = homology.reduced_betti(K, field)
    lb = homology.link_betti(K, field)
    values = []
    for i in range(d + 1):
        global_term = binom(d, i) * sum(
            (-1) ** (i - j - 1) * betti[j - 1] for j in range(1, i)
        )
        link_term = sum(
            (-1) ** (i - j) * t[j - 1] for t in lb for j in range(1, i - 1)
        )
        values.append(h[i] + global_term + binom(d - 1, i) * (kc.k(i - 1) - link_term))
    return HPrimePrediction(
        tuple(values), "his-formula", {"kernel": kc.kernel, "theta": theta}
    )


def topological_hprime(
    K: SimplicialComplex, field: FieldSpec, report=None, force=False
) -> HPrimePrediction:
    """The same Hilbert function from the topology alone:

    h'_i = h_i + sum_{j<i} (-1)^(i-j-1) [ C(d-1,i-1) beta_{j-1}(X)
                                        + C(d-1,i) beta_{j-1}(X - Sigma) ],

    with Sigma the singular set and X - Sigma read off the induced
    subcomplex on the nonsingular vertices.
    """
    rep = _report(K, field, report)
    if not rep.homologically_isolated and not force:
        raise PreconditionError("formula needs homologically isolated singularities")
    d = K.d
    h = K.h_vector()
    betti = homology.reduced_betti(K, field)
    punctured = homology.punctured_betti(K, rep.singular_vertices, field)
    values = tuple(
        h[i]
        + sum(
            (-1) ** (i - j - 1)
            * (binom(d - 1, i - 1) * betti[j - 1] + binom(d - 1, i) * punctured[j - 1])
            for j in range(1, i)
        )
        for i in range(d + 1)
    )
    return HPrimePrediction(
        tuple(values),
        "topological",
        {"betti": betti.tail(), "punctured": punctured.tail()},
    )


def depth_hprime(
    K: SimplicialComplex,
    field: FieldSpec,
    bundle: ring.LsopBundle | None = None,
    seed: int = 0,
    report=None,
    force=False,
) -> HPrimePrediction:
    """Almost-Cohen-Macaulay case (depth d-1), plus the pure two-dimensional
    specialization.

    depth >= d-1 with isolated singularities gives h'_d = beta_{d-1},
    h'_{d-1} = h_{d-1} + dim of the intersection of the kernels of the
    weighted inclusion sums over the bundle's d forms, and h'_i = h_i below.
    A pure 2-complex always qualifies for the variant
    h'_2 = h_2 + 3 beta_0 + dim(intersection).
    """
    rep = _report(K, field, report)
    d = K.d
    two_dim = K.is_pure and K.dim == 2
    if not two_dim and not force:
        if not rep.isolated_singularities:
            raise PreconditionError("depth formula needs isolated singularities")
        if rep.depth < d - 1:
            raise PreconditionError(f"depth formula needs depth >= {d - 1}, got {rep.depth}")
    if bundle is None:
        bundle = ring.sample_lsop(K, field, seed=seed)
    betti = homology.reduced_betti(K, field)
    h = K.h_vector()
    cap = ring.kernel_intersection_dim(K, bundle, d - 2)
    values = list(h[: d - 1]) + [h[d - 1] + cap, betti[d - 1]]
    if two_dim:
        values[2] = h[2] + 3 * betti[0] + cap
    return HPrimePrediction(
        tuple(values),
        "depth-formula",
        {"kernel_intersection": cap, "seed": bundle.seed},
    )


def socle_lower_bound(
    K: SimplicialComplex,
    field: FieldSpec,
    theta=None,
    report=None,
    ws: homology.CohomologyWorkspace | None = None,
    force=False,
) -> tuple:
    """Per-degree lower bound for the socle of the reduction (degrees < d-1):

    C(d,i) beta_{i-1} + C(d-1,i) (K_i + K_{i-1} - sum_v beta_{i-2}(lk v));

    the Hilbert function itself also dominates this bound.
    """
    rep = _report(K, field, report)
    if not rep.homologically_isolated and not force:
        raise PreconditionError("socle bound needs homologically isolated singularities")
    d = K.d
    ws = ws or homology.CohomologyWorkspace(K, field)
    theta = tuple(theta) if theta is not None else homology.all_ones_form(K)
    kc = ws.kc_table(theta)
    betti = homology.reduced_betti(K, field)
    lb = homology.link_betti(K, field)
    out = []
    for i in range(d - 1):
        link_sum = sum(t[i - 2] for t in lb)
        out.append(
            binom(d, i) * betti[i - 1]
            + binom(d - 1, i) * (kc.k(i) + kc.k(i - 1) - link_sum)
        )
    return tuple(out)


def g2_lower_bound(
    K: SimplicialComplex,
    field: FieldSpec,
    theta=None,
    report=None,
    ws: homology.CohomologyWorkspace | None = None,
    force=False,
) -> int:
    """Lower bound for g_2 = h_2 - h_1 of a pseudomanifold with homologically
    isolated singularities:

    C(d+1,2) [beta_{d-2} - beta_{d-1} + 1] + d*K_{d-2}
      - d * sum_v [beta_{d-3}(lk v) - beta_{d-2}(lk v) + 1],

    valid for d >= 5, and for d = 4 with at most 5 singularities (in the
    pseudomanifold sense).
    """
    rep = _report(K, field, report)
    if not force:
        if not (rep.pseudomanifold and rep.homologically_isolated):
            raise PreconditionError("g_2 bound needs a pseudomanifold with homologically isolated singularities")
        if K.d < 4 or (K.d == 4 and len(rep.pm_singular_vertices) > 5):
            raise PreconditionError("g_2 bound needs d >= 5, or d = 4 with at most 5 singularities")
    d = K.d
    ws = ws or homology.CohomologyWorkspace(K, field)
    theta = tuple(theta) if theta is not None else homology.all_ones_form(K)
    kc = ws.kc_table(theta)
    betti = homology.reduced_betti(K, field)
    lb = homology.link_betti(K, field)
    link_sum = sum(t[d - 3] - t[d - 2] + 1 for t in lb)
    return (
        binom(d + 1, 2) * (betti[d - 2] - betti[d - 1] + 1)
        + d * kc.k(d - 2)
        - d * link_sum
    )
