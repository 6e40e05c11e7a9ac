"""Reduced simplicial (co)homology over a field, relative cohomology with
respect to vertex costars, inclusion-induced maps, and the kernel/cokernel
dimensions of their weighted sums.

Conventions
-----------
Chains are augmented: the empty face generates degree -1, so all Betti
numbers are reduced and ``H^0`` of the absolute cochain complex is the
reduced cohomology.  Cochain bases follow the canonical face order of the
complex, and the coboundary is the transpose of the boundary

    (del c)(F) = sum_k (-1)^k c(F minus its k-th vertex).

For a vertex ``v``, the cochains supported on faces containing ``v`` form a
subcomplex of the absolute cochain complex; its cohomology is the relative
cohomology of the pair (complex, costar of v), with dimensions equal to the
link's reduced cohomology one degree down.
"""

from __future__ import annotations

from dataclasses import dataclass

import numpy as np

from . import linalg
from .complexes import SimplicialComplex, induced_subcomplex, link
from .errors import PreconditionError
from .fields import FieldSpec


@dataclass(frozen=True)
class BettiTable:
    """Reduced Betti numbers indexed from -1 to dim; out-of-range reads 0."""

    values: tuple
    field: FieldSpec

    def __getitem__(self, i: int) -> int:
        j = i + 1
        if j < 0 or j >= len(self.values):
            return 0
        return self.values[j]

    def tail(self) -> tuple:
        """(beta_0, ..., beta_dim) without the reduced -1 slot."""
        return self.values[1:]

    def euler(self) -> int:
        return sum((-1) ** i * self[i] for i in range(len(self.values) - 1))


@dataclass(frozen=True)
class CohomologyBasis:
    """Representative cocycles (columns) for one cohomology group.

    ``faces`` labels the rows: all i-faces for the absolute group, the
    i-faces containing ``vertex`` for a relative group.
    """

    degree: int
    vertex: int | None
    faces: tuple
    basis: np.ndarray
    field: FieldSpec

    @property
    def dim(self) -> int:
        return self.basis.shape[1]


@dataclass(frozen=True)
class KernelCokernelTable:
    """Kernel/cokernel dimensions of the weighted inclusion sums, one row per
    cochain degree 0..d-1, plus the per-degree independence flags (degrees
    0..d-2) of the inclusion images."""

    kernel: tuple
    cokernel: tuple
    domain: tuple
    homologically_isolated: tuple
    theta: tuple
    field: FieldSpec

    def k(self, i: int) -> int:
        return self.kernel[i] if 0 <= i < len(self.kernel) else 0

    def c(self, i: int) -> int:
        return self.cokernel[i] if 0 <= i < len(self.cokernel) else 0


def boundary_matrix(K: SimplicialComplex, k: int) -> np.ndarray:
    """Integer matrix of the boundary map from k-chains to (k-1)-chains.

    ``k = 0`` is the augmentation (row indexed by the empty face).
    """
    rows = K.faces(k - 1)
    cols = K.faces(k)
    idx = {f: i for i, f in enumerate(rows)}
    mat = np.zeros((len(rows), len(cols)), dtype=np.int64)
    for j, face in enumerate(cols):
        for t in range(len(face)):
            sub = face[:t] + face[t + 1:]
            mat[idx[sub], j] = (-1) ** t
    return mat


def reduced_betti(K: SimplicialComplex, field: FieldSpec) -> BettiTable:
    """Reduced Betti numbers from augmented boundary-matrix ranks."""
    if K.is_void:
        return BettiTable((), field)
    dim = K.dim
    ranks = [linalg.rank(boundary_matrix(K, k), field) for k in range(dim + 1)]
    ranks.append(0)  # no (dim+1)-chains
    values = [1 - ranks[0]]
    for k in range(dim + 1):
        values.append(len(K.faces(k)) - ranks[k] - ranks[k + 1])
    return BettiTable(tuple(values), field)


def link_betti(K: SimplicialComplex, field: FieldSpec) -> list[BettiTable]:
    """Reduced Betti table of every vertex link, in vertex order."""
    return [reduced_betti(link(K, (v,)), field) for v in range(K.n)]


class CohomologyWorkspace:
    """Caches cochain data for one (complex, field) pair.

    All inclusion matrices produced by one workspace are expressed in the
    same absolute-cohomology basis, which is what makes weighted sums of
    them meaningful.
    """

    def __init__(self, K: SimplicialComplex, field: FieldSpec):
        self.K = K
        self.field = field
        self._delta: dict[int, np.ndarray] = {}
        self._abs: dict[int, CohomologyBasis] = {}
        self._rel: dict[tuple, CohomologyBasis] = {}
        self._inc: dict[tuple, np.ndarray] = {}

    # -- cochain plumbing --------------------------------------------------

    def delta(self, i: int) -> np.ndarray:
        """Coboundary matrix from i-cochains to (i+1)-cochains (integer)."""
        if i not in self._delta:
            if i == -1:
                mat = np.ones((len(self.K.faces(0)), 1), dtype=np.int64)
            else:
                mat = boundary_matrix(self.K, i + 1).T
            self._delta[i] = mat
        return self._delta[i]

    def _extend_image_to_kernel(self, image_cols, kernel_cols):
        """Pick kernel columns completing the coboundary image to a basis."""
        field = self.field
        both = np.concatenate([field.matrix(image_cols), kernel_cols], axis=1)
        _, pivots = linalg.row_reduce(both, field)
        cut = image_cols.shape[1]
        picked = [j - cut for j in pivots if j >= cut]
        return kernel_cols[:, picked]

    def absolute_basis(self, i: int) -> CohomologyBasis:
        if i not in self._abs:
            faces = self.K.faces(i)
            kern = linalg.kernel_basis(self.delta(i), self.field)
            basis = self._extend_image_to_kernel(self.delta(i - 1), kern)
            self._abs[i] = CohomologyBasis(i, None, tuple(faces), basis, self.field)
        return self._abs[i]

    def _star_rows(self, v: int, i: int) -> np.ndarray:
        faces = self.K.faces(i)
        return np.array([j for j, f in enumerate(faces) if v in f], dtype=np.intp)

    def relative_basis(self, v: int, i: int) -> CohomologyBasis:
        key = (v, i)
        if key not in self._rel:
            rows_i = self._star_rows(v, i)
            rows_up = self._star_rows(v, i + 1)
            a = self.delta(i)[np.ix_(rows_up, rows_i)]
            kern = linalg.kernel_basis(a, self.field)
            if i == 0:
                # no relative (-1)-cochains: the empty face misses v
                basis = kern
            else:
                rows_dn = self._star_rows(v, i - 1)
                b = self.delta(i - 1)[np.ix_(rows_i, rows_dn)]
                basis = self._extend_image_to_kernel(b, kern)
            faces = tuple(self.K.faces(i)[j] for j in rows_i)
            self._rel[key] = CohomologyBasis(i, v, faces, basis, self.field)
        return self._rel[key]

    # -- inclusion-induced maps ---------------------------------------------

    def inc_star(self, v: int, i: int) -> np.ndarray:
        """Matrix of the inclusion map from the v-relative group into the
        absolute group, in the workspace bases."""
        key = (v, i)
        if key not in self._inc:
            field = self.field
            rel = self.relative_basis(v, i)
            absq = self.absolute_basis(i)
            n_faces = len(self.K.faces(i))
            ext = field.zeros((n_faces, rel.dim))
            if rel.dim:
                ext[self._star_rows(v, i)] = rel.basis
            # a zero-extended relative cocycle is an absolute cocycle; write it
            # in the chosen basis modulo coboundaries
            system = np.concatenate([absq.basis, field.matrix(self.delta(i - 1))], axis=1)
            sol = linalg.solve(system, ext, field)
            self._inc[key] = sol[: absq.dim]
        return self._inc[key]

    def f_map(self, theta, i: int, support=None) -> np.ndarray:
        """Weighted sum of the inclusion maps, one block of columns per
        vertex in ``support`` (all vertices by default)."""
        field = self.field
        verts = range(self.K.n) if support is None else sorted(support)
        coeffs = tuple(theta)
        blocks = []
        for v in verts:
            m = self.inc_star(v, i)
            if m.shape[1]:
                blocks.append(field.reduce(m * coeffs[v]))
        b_i = self.absolute_basis(i).dim
        if not blocks:
            return field.zeros((b_i, 0))
        return np.concatenate(blocks, axis=1)

    def domain_dim(self, i: int, support=None) -> int:
        verts = range(self.K.n) if support is None else sorted(support)
        return sum(self.relative_basis(v, i).dim for v in verts)

    def images_independent(self, i: int) -> bool:
        """True when the inclusion images form linearly independent subspaces."""
        field = self.field
        total, ranks = [], 0
        for v in range(self.K.n):
            m = self.inc_star(v, i)
            if m.shape[1]:
                total.append(m)
                ranks += linalg.rank(m, field)
        if not total:
            return True
        return linalg.rank(np.concatenate(total, axis=1), field) == ranks

    def kc_table(self, theta, support=None) -> KernelCokernelTable:
        field = self.field
        d = self.K.d
        kdims, cdims, doms, iso = [], [], [], []
        for i in range(d):
            fm = self.f_map(theta, i, support=support)
            r = linalg.rank(fm, field)
            dom = self.domain_dim(i, support=support)
            kdims.append(dom - r)
            cdims.append(self.absolute_basis(i).dim - r)
            doms.append(dom)
            if i <= d - 2:
                iso.append(self.images_independent(i))
        return KernelCokernelTable(
            tuple(kdims), tuple(cdims), tuple(doms), tuple(iso), tuple(theta), field
        )


# -- module-level operations ------------------------------------------------


def all_ones_form(K: SimplicialComplex) -> tuple:
    return (1,) * K.n


def relative_cohomology_basis(K, v: int, i: int, field: FieldSpec) -> CohomologyBasis:
    if not 0 <= v < K.n:
        raise ValueError(f"unknown vertex id {v}")
    return CohomologyWorkspace(K, field).relative_basis(v, i)


def inc_star(K, v: int, i: int, field: FieldSpec) -> np.ndarray:
    return CohomologyWorkspace(K, field).inc_star(v, i)


def f_map(K, theta, i: int, field: FieldSpec) -> np.ndarray:
    return CohomologyWorkspace(K, field).f_map(theta, i)


def kc_dims(K, theta, field: FieldSpec) -> KernelCokernelTable:
    """Kernel and cokernel dimensions of the weighted inclusion sums for a
    fully supported 1-form ``theta`` (coefficient per vertex)."""
    return CohomologyWorkspace(K, field).kc_table(theta)


def is_homologically_isolated(K, field: FieldSpec) -> tuple:
    """Per-degree independence flags (degrees 0..d-2) of the inclusion
    images.  Requires isolated singularities; raises otherwise."""
    from . import classify  # deferred: classify builds on this module

    if not classify.has_isolated_singularities(K, field):
        raise PreconditionError("complex is not a space with isolated singularities")
    ws = CohomologyWorkspace(K, field)
    return tuple(ws.images_independent(i) for i in range(K.d - 1))


def punctured_betti(K, singular_vertices, field: FieldSpec) -> BettiTable:
    """Reduced Betti numbers of the induced subcomplex on the nonsingular
    vertices (a deformation retract of the space minus its singular set)."""
    keep = set(range(K.n)) - {int(v) for v in singular_vertices}
    return reduced_betti(induced_subcomplex(K, keep), field)
