"""Placement of a complex in the Cohen-Macaulay / Buchsbaum / manifold /
pseudomanifold hierarchy, singular-vertex detection, and depth.

Every notion here is relative to a coefficient field: a complex can be
Cohen-Macaulay over the rationals and fail over F_2 (the projective plane
is the standard witness), so reports always record the field.
"""

from __future__ import annotations

from dataclasses import dataclass, field as dc_field

from . import homology
from .complexes import SimplicialComplex, link, skeleton
from .fields import FieldSpec


def is_cm(K: SimplicialComplex, field: FieldSpec) -> bool:
    """Reisner's criterion: every face link (the empty face included) has
    reduced homology only in its top allowed dimension d - |F| - 1."""
    if K.is_void:
        return False
    d = K.d
    for f in _all_faces_with_empty(K):
        betti = homology.reduced_betti(link(K, f), field)
        if any(betti[i] != 0 for i in range(-1, d - len(f) - 1)):
            return False
    return True


def is_homology_sphere(K: SimplicialComplex, field: FieldSpec) -> bool:
    """Cohen-Macaulay with one-dimensional top homology in every face link."""
    if K.is_void:
        return False
    d = K.d
    for f in _all_faces_with_empty(K):
        betti = homology.reduced_betti(link(K, f), field)
        if any(betti[i] != 0 for i in range(-1, d - len(f) - 1)):
            return False
        if betti[d - len(f) - 1] != 1:
            return False
    return True


def _all_faces_with_empty(K: SimplicialComplex):
    yield ()
    yield from K.all_faces()


def is_pseudomanifold(K: SimplicialComplex) -> bool:
    """Pure, and every codimension-one face lies in exactly two facets."""
    if not K.is_pure or K.dim < 1:
        return False
    counts = {f: 0 for f in K.faces(K.dim - 1)}
    for g in K.facets:
        for t in range(len(g)):
            counts[g[:t] + g[t + 1:]] += 1
    return all(c == 2 for c in counts.values())


def is_normal_pseudomanifold(K: SimplicialComplex) -> bool:
    """Pseudomanifold whose faces of codimension >= 2 all have connected
    links (the empty face included, so the complex itself is connected)."""
    if not is_pseudomanifold(K):
        return False
    field = FieldSpec.prime()
    for f in _all_faces_with_empty(K):
        if len(f) <= K.d - 2:
            lk = link(K, f)
            if homology.reduced_betti(lk, field)[0] != 0 or lk.n == 0:
                return False
    return True


def is_buchsbaum(K: SimplicialComplex, field: FieldSpec) -> bool:
    """Pure with Cohen-Macaulay vertex links."""
    if not K.is_pure or K.is_void:
        return False
    return all(is_cm(link(K, (v,)), field) for v in range(K.n))


def is_homology_manifold(K: SimplicialComplex, field: FieldSpec) -> bool:
    """Pure with homology-sphere vertex links."""
    if not K.is_pure or K.is_void:
        return False
    return all(is_homology_sphere(link(K, (v,)), field) for v in range(K.n))


def singular_vertices(K: SimplicialComplex, field: FieldSpec) -> list[int]:
    """Vertices whose link is not Cohen-Macaulay (the space notion)."""
    return [v for v in range(K.n) if not is_cm(link(K, (v,)), field)]


def pm_singular_vertices(K: SimplicialComplex, field: FieldSpec) -> list[int]:
    """Vertices whose link is not a homology sphere (the pseudomanifold
    notion); always a superset of :func:`singular_vertices`."""
    return [v for v in range(K.n) if not is_homology_sphere(link(K, (v,)), field)]


def has_isolated_singularities(K: SimplicialComplex, field: FieldSpec) -> bool:
    """Pure with Buchsbaum vertex links (equivalently, CM edge links)."""
    if not K.is_pure or K.is_void:
        return False
    return all(is_buchsbaum(link(K, (v,)), field) for v in range(K.n))


def is_pseudomanifold_with_isolated_singularities(K, field: FieldSpec) -> bool:
    """Pure with homology-manifold vertex links."""
    if not K.is_pure or K.is_void:
        return False
    return all(is_homology_manifold(link(K, (v,)), field) for v in range(K.n))


def depth(K: SimplicialComplex, field: FieldSpec) -> int:
    """Largest j such that the (j-1)-skeleton is Cohen-Macaulay."""
    best = 0
    for j in range(1, K.d + 1):
        if is_cm(skeleton(K, j), field):
            best = j
        else:
            break
    return best


def homological_depth(K: SimplicialComplex, field: FieldSpec) -> int:
    """Depth via vanishing of low homology of the complex and its vertex
    links; agrees with :func:`depth` on spaces with isolated singularities
    and is reported as auxiliary data otherwise."""
    d = K.d
    betti = homology.reduced_betti(K, field)
    bound = d
    for i in range(0, d):
        if betti[i] != 0:
            bound = min(bound, i + 1)
            break
    for v in range(K.n):
        lb = homology.reduced_betti(link(K, (v,)), field)
        for i in range(-1, d - 1):
            if lb[i] != 0:
                bound = min(bound, i + 2)
                break
    return bound


@dataclass(frozen=True)
class SingularityReport:
    """Full classification of one complex over one field."""

    field: FieldSpec
    pure: bool
    pseudomanifold: bool
    normal: bool
    cm: bool
    homology_sphere: bool
    homology_manifold: bool
    buchsbaum: bool
    isolated_singularities: bool
    pseudomanifold_isolated: bool
    homologically_isolated: bool
    singular_vertices: tuple
    pm_singular_vertices: tuple
    depth: int
    homological_depth: int
    notes: tuple = dc_field(default_factory=tuple)

    def flags(self) -> dict:
        return {
            "pure": self.pure,
            "pseudomanifold": self.pseudomanifold,
            "normal": self.normal,
            "cm": self.cm,
            "homology_sphere": self.homology_sphere,
            "homology_manifold": self.homology_manifold,
            "buchsbaum": self.buchsbaum,
            "isolated_singularities": self.isolated_singularities,
            "pseudomanifold_isolated": self.pseudomanifold_isolated,
            "homologically_isolated": self.homologically_isolated,
        }


def classify(K: SimplicialComplex, field: FieldSpec) -> SingularityReport:
    """Evaluate the whole hierarchy.  Purity is decided first; Buchsbaum and
    stronger properties are reported False (with a note) on non-pure input
    instead of raising."""
    pure = K.is_pure and not K.is_void
    notes = []
    cm = is_cm(K, field)
    sphere = cm and is_homology_sphere(K, field)
    if pure:
        buchsbaum = is_buchsbaum(K, field)
        manifold = buchsbaum and is_homology_manifold(K, field)
        isolated = buchsbaum or has_isolated_singularities(K, field)
        pm_isolated = is_pseudomanifold_with_isolated_singularities(K, field)
        sing = tuple(singular_vertices(K, field))
        pm_sing = tuple(pm_singular_vertices(K, field))
    else:
        notes.append("complex is not pure: link-based classes reported False")
        buchsbaum = manifold = isolated = pm_isolated = False
        sing = pm_sing = ()
    if isolated:
        ws = homology.CohomologyWorkspace(K, field)
        hom_isolated = all(ws.images_independent(i) for i in range(K.d - 1))
    else:
        hom_isolated = False
        if pure:
            notes.append("not a space with isolated singularities")
    return SingularityReport(
        field=field,
        pure=pure,
        pseudomanifold=is_pseudomanifold(K),
        normal=is_normal_pseudomanifold(K),
        cm=cm,
        homology_sphere=sphere,
        homology_manifold=manifold,
        buchsbaum=buchsbaum,
        isolated_singularities=isolated,
        pseudomanifold_isolated=pm_isolated,
        homologically_isolated=hom_isolated,
        singular_vertices=sing,
        pm_singular_vertices=pm_sing,
        depth=depth(K, field),
        homological_depth=homological_depth(K, field),
        notes=tuple(notes),
    )
