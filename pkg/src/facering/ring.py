"""The face ring and its generic Artinian reductions, by brute force.

The graded pieces of the face ring are enumerated as monomials whose
support is a face.  An Artinian reduction by linear forms theta_1..theta_d
is computed degree by degree: since the ideal is generated in degree one,
its degree-i slice is spanned exactly by the products theta_j * m over the
degree-(i-1) monomial basis, and one row reduction per degree yields both
the Hilbert function and a canonical complement basis for the quotient.
Everything downstream (socle, multiplication maps) works in complement
coordinates modulo the reduced ideal rows.

This module is the independent oracle against which every closed-form
Hilbert-function formula in :mod:`facering.formulas` is checked.
"""

from __future__ import annotations

import warnings
from dataclasses import dataclass, field as dc_field
from functools import lru_cache
from itertools import combinations
from math import comb

import numpy as np

from . import homology, linalg
from .complexes import SimplicialComplex
from .errors import LsopSamplingError, PreconditionError
from .fields import FieldSpec


@dataclass(frozen=True)
class LinearForm:
    """A 1-form sum_v a_v x_v, one integer coefficient per vertex id."""

    coeffs: tuple

    def fully_supported(self, field: FieldSpec) -> bool:
        if field.is_prime_field:
            return all(c % field.p != 0 for c in self.coeffs)
        return all(c != 0 for c in self.coeffs)


@dataclass
class LsopBundle:
    """d sampled linear forms plus the seed that reproduces them."""

    thetas: tuple
    field: FieldSpec
    seed: int
    verified: bool = False
    _cache: dict = dc_field(default_factory=dict, repr=False, compare=False)


@dataclass(frozen=True)
class MonomialBasis:
    """Degree-i monomials with face support, in canonical order
    (face dimension, then face, then exponent pattern)."""

    degree: int
    monomials: tuple  # exponent tuples of length n

    def __len__(self):
        return len(self.monomials)

    def index(self) -> dict:
        return {m: i for i, m in enumerate(self.monomials)}


@dataclass(frozen=True)
class HilbertFunction:
    """h'_0..h'_d of one Artinian reduction (or a generic minimum)."""

    values: tuple
    method: str = "bruteforce"
    stable: bool = True

    def __getitem__(self, i):
        return self.values[i] if 0 <= i < len(self.values) else 0


@dataclass(frozen=True)
class SocleDims:
    """Per-degree dimensions of the socle of the Artinian reduction."""

    values: tuple

    def __getitem__(self, i):
        return self.values[i] if 0 <= i < len(self.values) else 0


@dataclass(frozen=True)
class MultMap:
    """Rank data of multiplication by a 1-form between two quotient degrees."""

    rank: int
    injective: bool
    surjective: bool
    matrix: np.ndarray


def _compositions(total: int, parts: int):
    """All ways of writing ``total`` as ``parts`` positive integers, lex order."""
    for cuts in combinations(range(1, total), parts - 1):
        prev, out = 0, []
        for c in cuts:
            out.append(c - prev)
            prev = c
        out.append(total - prev)
        yield tuple(out)


class RingWorkspace:
    """Field-independent monomial bookkeeping for one complex."""

    def __init__(self, K: SimplicialComplex):
        self.K = K
        self._bases: dict[int, MonomialBasis] = {}
        self._index: dict[int, dict] = {}
        self._shift: dict[tuple, np.ndarray] = {}

    def basis(self, i: int) -> MonomialBasis:
        if i not in self._bases:
            K = self.K
            if i == 0:
                monos = [(0,) * K.n]
            else:
                monos = []
                for k in range(min(i, K.d)):
                    for face in K.faces(k):
                        for parts in _compositions(i, k + 1):
                            expo = [0] * K.n
                            for v, e in zip(face, parts):
                                expo[v] = e
                            monos.append(tuple(expo))
            self._bases[i] = MonomialBasis(i, tuple(monos))
            self._index[i] = self._bases[i].index()
        return self._bases[i]

    def shift(self, v: int, i: int) -> np.ndarray:
        """Index map of multiplication by x_v from degree i to i+1;
        -1 where the product leaves the face ring."""
        key = (v, i)
        if key not in self._shift:
            src = self.basis(i).monomials
            dst = self._index_for(i + 1)
            out = np.full(len(src), -1, dtype=np.intp)
            for k, m in enumerate(src):
                if m[v] == 0:
                    support = tuple(sorted({u for u, e in enumerate(m) if e} | {v}))
                    if not self.K.has_face(support):
                        continue
                prod = m[:v] + (m[v] + 1,) + m[v + 1:]
                out[k] = dst[prod]
            self._shift[key] = out
        return self._shift[key]

    def _index_for(self, i: int) -> dict:
        self.basis(i)
        return self._index[i]


@lru_cache(maxsize=64)
def _workspace(K: SimplicialComplex) -> RingWorkspace:
    return RingWorkspace(K)


def monomial_basis(K: SimplicialComplex, i: int) -> MonomialBasis:
    """All degree-i monomials supported on faces; count equals
    sum_j f_{j-1} * C(i-1, j-1)."""
    if i < 0:
        raise ValueError("degree must be nonnegative")
    return _workspace(K).basis(i)


class ArtinianReduction:
    """Degree-by-degree reduction of the face ring by given linear forms."""

    def __init__(self, K: SimplicialComplex, thetas, field: FieldSpec, upto: int | None = None):
        self.K = K
        self.field = field
        self.thetas = tuple(thetas)
        self.upto = K.d + 1 if upto is None else upto
        self._ws = _workspace(K)
        self._rref: dict[int, tuple] = {0: (field.zeros((0, 1)), [])}
        self._dims = [1]
        self._build()

    def _build(self):
        field = self.field
        top = self.K.d + 1
        for i in range(1, self.upto + 1):
            ncur = len(self._ws.basis(i))
            if i == top and not field.is_prime_field and self._full_rank_certificate(i):
                # Over the rationals the top slice is the expensive one, and
                # only a rank lower bound is needed there: full column rank
                # modulo a prime certifies full rank over the rationals.
                self._rref[i] = (None, list(range(ncur)))
                self._dims.append(0)
                continue
            rref, pivots = linalg.rref_rows(self._ideal_rows(i, field), field)
            self._rref[i] = (rref, pivots)
            self._dims.append(ncur - len(pivots))

    def _ideal_rows(self, i: int, field: FieldSpec) -> np.ndarray:
        """The degree-i slice of the ideal: every theta_j times every
        degree-(i-1) basis monomial (the ideal is generated in degree one,
        so these products span the slice exactly)."""
        ws, thetas = self._ws, self.thetas
        nprev = len(ws.basis(i - 1))
        ncur = len(ws.basis(i))
        rows = field.zeros((len(thetas) * nprev, ncur))
        src = np.arange(nprev)
        for j, theta in enumerate(thetas):
            block = rows[j * nprev: (j + 1) * nprev]
            for v in range(self.K.n):
                t = ws.shift(v, i - 1)
                ok = t >= 0
                block[src[ok], t[ok]] += theta.coeffs[v]
        return field.reduce(rows)

    def _full_rank_certificate(self, i: int) -> bool:
        from .fields import DEFAULT_PRIME

        proxy = FieldSpec.prime(DEFAULT_PRIME)
        rows = self._ideal_rows(i, proxy)
        return linalg.rank(rows, proxy) == len(self._ws.basis(i))

    @property
    def hilbert_raw(self) -> tuple:
        """Quotient dimensions for degrees 0..upto."""
        return tuple(self._dims)

    @property
    def valid(self) -> bool:
        """An l.s.o.p. must kill everything beyond degree d (the ring is
        generated in degree one, so vanishing at d+1 suffices)."""
        if self.upto < self.K.d + 1:
            raise ValueError("reduction was not built through degree d+1")
        return self._dims[self.K.d + 1] == 0

    def hilbert(self) -> tuple:
        return tuple(self._dims[: self.K.d + 1])

    def complement(self, i: int) -> list:
        """Monomial columns representing the quotient in degree i."""
        _, pivots = self._rref[i]
        pivot_set = set(pivots)
        return [c for c in range(len(self._ws.basis(i))) if c not in pivot_set]

    def reduce_rows(self, i: int, vectors: np.ndarray) -> np.ndarray:
        rref, pivots = self._rref[i]
        if rref is None:
            raise RuntimeError(
                "degree was certified full-rank without an echelon basis; "
                "no canonical representatives exist there"
            )
        return linalg.reduce_mod_rowspace(vectors, rref, pivots, self.field)

    def form_action(self, form: LinearForm, i: int) -> np.ndarray:
        """Matrix of multiplication by a 1-form from quotient degree i to
        i+1, in complement coordinates (rows: degree-(i+1) complement)."""
        field, ws = self.field, self._ws
        comp = self.complement(i)
        comp_up = self.complement(i + 1)
        if not comp_up:
            return field.zeros((0, len(comp)))
        w = field.zeros((len(comp), len(self._ws.basis(i + 1))))
        for v in range(self.K.n):
            t = ws.shift(v, i)
            for k, c in enumerate(comp):
                tc = t[c]
                if tc >= 0:
                    w[k, tc] += form.coeffs[v]
        w = self.reduce_rows(i + 1, field.reduce(w))
        return w[:, comp_up].T

    def vertex_action(self, v: int, i: int) -> np.ndarray:
        """Like :meth:`form_action` for a single variable x_v."""
        field, ws = self.field, self._ws
        comp = self.complement(i)
        comp_up = self.complement(i + 1)
        if not comp_up:
            return field.zeros((0, len(comp)))
        w = field.zeros((len(comp), len(ws.basis(i + 1))))
        t = ws.shift(v, i)
        for k, c in enumerate(comp):
            tc = t[c]
            if tc >= 0:
                w[k, tc] = 1
        w = self.reduce_rows(i + 1, w)
        return w[:, comp_up].T


def reduction_for(K: SimplicialComplex, bundle: LsopBundle) -> ArtinianReduction:
    """Build (or fetch) the verified reduction of K by the bundle's forms."""
    cached = bundle._cache.get(K)
    if cached is not None:
        return cached
    red = ArtinianReduction(K, bundle.thetas, bundle.field)
    if not red.valid:
        raise PreconditionError(
            f"forms from seed {bundle.seed} are not an l.s.o.p.: "
            f"quotient has dimension {red.hilbert_raw[K.d + 1]} in degree {K.d + 1}"
        )
    bundle._cache[K] = red
    bundle.verified = True
    return red


def sample_form(K: SimplicialComplex, field: FieldSpec, rng) -> LinearForm:
    return LinearForm(tuple(field.random_nonzero(rng) for _ in range(K.n)))


def sample_lsop(K: SimplicialComplex, field: FieldSpec, seed: int = 0, retries: int = 8) -> LsopBundle:
    """Draw d fully supported random linear forms and verify they are an
    l.s.o.p. (quotient vanishes in degree d+1); resample from a fresh
    stream on failure, up to ``retries`` attempts."""
    if field.is_prime_field and field.p.bit_length() < 31:
        warnings.warn(
            f"prime {field.p} is small; generic behaviour is only emulated reliably "
            "over large prime fields or the rationals",
            stacklevel=2,
        )
    for attempt in range(retries):
        rng = np.random.default_rng([seed, attempt])
        bundle = LsopBundle(
            thetas=tuple(sample_form(K, field, rng) for _ in range(K.d)),
            field=field,
            seed=seed,
        )
        try:
            reduction_for(K, bundle)
            return bundle
        except PreconditionError:
            continue
    raise LsopSamplingError(
        f"no valid l.s.o.p. after {retries} attempts (seed {seed}, field {field})",
        seed=seed,
    )


def artinian_dims(K: SimplicialComplex, bundle: LsopBundle) -> HilbertFunction:
    """Exact graded dimensions of the quotient by the bundle's forms."""
    return HilbertFunction(reduction_for(K, bundle).hilbert(), method="bruteforce")


def generic_hilbert(K: SimplicialComplex, field: FieldSpec, seed: int = 0, trials: int = 3):
    """Generic Hilbert function, operationalized as the per-degree minimum
    over ``trials`` independently seeded reductions.

    Returns ``(HilbertFunction, bundles)``.  The minimum is the generic
    value; if the trials disagree the result is flagged unstable, a warning
    is emitted, and (over a prime field, at small vertex counts) the values
    are recomputed over the rationals.
    """
    bundles = [sample_lsop(K, field, seed=seed * max(trials, 1) + t) for t in range(trials)]
    tables = [reduction_for(K, b).hilbert() for b in bundles]
    values = tuple(min(col) for col in zip(*tables))
    stable = all(t == tables[0] for t in tables)
    if not stable:
        warnings.warn(
            f"Hilbert-function trials disagree for seed {seed}: {tables}; "
            "reporting per-degree minima",
            stacklevel=2,
        )
        if field.is_prime_field and K.n <= 12:
            rational = generic_hilbert(K, FieldSpec.rationals(), seed=seed, trials=trials)[0]
            return HilbertFunction(rational.values, method="bruteforce", stable=False), bundles
    return HilbertFunction(values, method="bruteforce", stable=stable), bundles


def socle_dims(K: SimplicialComplex, bundle: LsopBundle) -> SocleDims:
    """Per-degree dimension of the annihilator of the irrelevant ideal in
    the quotient: classes killed by every vertex variable."""
    red = reduction_for(K, bundle)
    field = bundle.field
    out = []
    for i in range(K.d + 1):
        hp = red.hilbert()[i]
        blocks = [red.vertex_action(v, i) for v in range(K.n)]
        blocks = [b for b in blocks if b.shape[0]]
        if not blocks:
            out.append(hp)
            continue
        stacked = np.concatenate(blocks, axis=0)
        out.append(hp - linalg.rank(stacked, field))
    return SocleDims(tuple(out))


def socle_basis(K: SimplicialComplex, bundle: LsopBundle, i: int) -> np.ndarray:
    """Complement-coordinate basis of the degree-i socle (columns)."""
    red = reduction_for(K, bundle)
    blocks = [red.vertex_action(v, i) for v in range(K.n)]
    blocks = [b for b in blocks if b.shape[0]]
    if not blocks:
        return bundle.field.matrix(np.eye(red.hilbert()[i], dtype=np.int64))
    return linalg.kernel_basis(np.concatenate(blocks, axis=0), bundle.field)


def mult_map(K: SimplicialComplex, bundle: LsopBundle, omega: LinearForm, i: int) -> MultMap:
    """Rank of multiplication by ``omega`` from quotient degree i to i+1."""
    red = reduction_for(K, bundle)
    mat = red.form_action(omega, i)
    r = linalg.rank(mat, bundle.field)
    return MultMap(
        rank=r,
        injective=r == mat.shape[1],
        surjective=r == mat.shape[0],
        matrix=mat,
    )


def kernel_intersection_dim(K: SimplicialComplex, bundle: LsopBundle, i: int) -> int:
    """Dimension of the intersection over the bundle's forms of the kernels
    of the weighted inclusion sums in cochain degree i."""
    field = bundle.field
    for theta in bundle.thetas:
        if not theta.fully_supported(field):
            raise PreconditionError("kernel intersection requires fully supported forms")
    ws = homology.CohomologyWorkspace(K, field)
    stacked = np.concatenate([ws.f_map(theta.coeffs, i) for theta in bundle.thetas], axis=0)
    return stacked.shape[1] - linalg.rank(stacked, field)


def expected_basis_size(K: SimplicialComplex, i: int) -> int:
    """Closed-form monomial count used as an enumeration cross-check."""
    f = K.f_vector()
    if i == 0:
        return 1
    return sum(f[j] * comb(i - 1, j - 1) for j in range(1, len(f)))
