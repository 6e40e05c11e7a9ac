"""Immutable simplicial complexes.

A complex is stored as its downward closure, grouped by dimension, with
faces kept as strictly increasing tuples of dense vertex ids.  Vertex
labels are arbitrary tokens; all arithmetic happens on ids.  Faces within
each dimension are sorted lexicographically, and that order is the
canonical basis order for every matrix built downstream.

The empty complex ``{∅}`` (one face: the empty set, f_{-1} = 1) and the
void complex (no faces at all) are distinguished, as reduced homology and
h-vector conventions require.
"""

from __future__ import annotations

from itertools import combinations
from math import comb
from pathlib import Path

from .errors import ParseError

Face = tuple  # strictly increasing tuple of vertex ids


def _as_face(vertices) -> Face:
    face = tuple(sorted(int(v) for v in vertices))
    if len(set(face)) != len(face):
        raise ValueError(f"face {face} has repeated vertices")
    return face


class SimplicialComplex:
    """A finite simplicial complex on densely numbered vertices."""

    __slots__ = ("labels", "facets", "faces_by_dim", "_face_set", "_is_void")

    def __init__(self, facets, labels=None, _void=False):
        """Build the downward closure of ``facets`` (iterables of vertex ids).

        Non-maximal entries are absorbed.  ``labels`` maps id -> token and
        defaults to decimal strings ``"0"``, ``"1"``, ...
        """
        if _void:
            self._is_void = True
            self.labels = ()
            self.facets = ()
            self.faces_by_dim = {}
            self._face_set = frozenset()
            return
        self._is_void = False
        candidates = sorted({_as_face(f) for f in facets}, key=lambda f: (-len(f), f))
        maximal: list[Face] = []
        for f in candidates:
            if not any(set(f) <= set(g) for g in maximal):
                maximal.append(f)
        vertex_ids = sorted({v for f in maximal for v in f})
        if labels is None:
            labels = [str(v) for v in vertex_ids]
        else:
            labels = [labels[v] for v in vertex_ids]
        remap = {v: i for i, v in enumerate(vertex_ids)}
        maximal = sorted(tuple(remap[v] for v in f) for f in maximal)
        by_dim: dict[int, set] = {}
        for f in maximal:
            for k in range(1, len(f) + 1):
                by_dim.setdefault(k - 1, set()).update(combinations(f, k))
        self.labels = tuple(labels)
        self.facets = tuple(maximal)
        self.faces_by_dim = {k: tuple(sorted(faces)) for k, faces in by_dim.items()}
        self._face_set = frozenset(f for faces in self.faces_by_dim.values() for f in faces)

    # -- constructors -----------------------------------------------------

    @classmethod
    def void(cls) -> "SimplicialComplex":
        return cls((), _void=True)

    @classmethod
    def empty(cls) -> "SimplicialComplex":
        """The complex whose only face is the empty set."""
        return cls(())

    @classmethod
    def from_tokens(cls, facet_tokens) -> "SimplicialComplex":
        """Build from facets given as lists of label tokens.

        Ids are assigned in first-appearance order, so the token order of the
        input fixes the basis order of everything downstream.
        """
        ids: dict[str, int] = {}
        facets = []
        for tokens in facet_tokens:
            tokens = [str(t) for t in tokens]
            if len(set(tokens)) != len(tokens):
                raise ParseError(f"facet {' '.join(tokens)} repeats a vertex")
            for t in tokens:
                ids.setdefault(t, len(ids))
            facets.append([ids[t] for t in tokens])
        labels = [None] * len(ids)
        for t, i in ids.items():
            labels[i] = t
        return cls(facets, labels=labels)

    # -- basic queries ----------------------------------------------------

    @property
    def is_void(self) -> bool:
        return self._is_void

    @property
    def n(self) -> int:
        """Number of vertices."""
        return len(self.labels)

    @property
    def dim(self) -> int:
        return max(self.faces_by_dim, default=-1)

    @property
    def d(self) -> int:
        """dim + 1, the number of h-vector steps and of l.s.o.p. forms."""
        return self.dim + 1

    @property
    def is_pure(self) -> bool:
        return len({len(f) for f in self.facets}) <= 1 and not self._is_void

    def faces(self, k: int):
        """All k-dimensional faces in canonical (lex) order."""
        if k == -1:
            return ((),) if not self._is_void else ()
        return self.faces_by_dim.get(k, ())

    def all_faces(self):
        """All nonempty faces, dimension by dimension."""
        for k in range(self.dim + 1):
            yield from self.faces(k)

    def has_face(self, face) -> bool:
        face = _as_face(face)
        if face == ():
            return not self._is_void
        return face in self._face_set

    def face_index(self, k: int):
        return {f: i for i, f in enumerate(self.faces(k))}

    def tokens(self, face) -> tuple:
        return tuple(self.labels[v] for v in face)

    def vertex_id(self, token) -> int:
        token = str(token)
        try:
            return self.labels.index(token)
        except ValueError:
            raise KeyError(f"unknown vertex token {token!r}") from None

    def __eq__(self, other):
        return (
            isinstance(other, SimplicialComplex)
            and self.facets == other.facets
            and self._is_void == other._is_void
        )

    def __hash__(self):
        return hash((self.facets, self._is_void))

    def __repr__(self):
        if self._is_void:
            return "SimplicialComplex.void()"
        return f"<SimplicialComplex n={self.n} dim={self.dim} facets={len(self.facets)}>"

    # -- f/h/g vectors ----------------------------------------------------

    def f_vector(self) -> tuple:
        """(f_{-1}, f_0, ..., f_{dim}); f_{-1} = 1 for any nonvoid complex."""
        if self._is_void:
            return ()
        return (1,) + tuple(len(self.faces(k)) for k in range(self.dim + 1))

    def h_vector(self) -> tuple:
        return h_from_f(self.f_vector(), self.d)

    def g_vector(self) -> tuple:
        h = self.h_vector()
        return tuple(h[j] - h[j - 1] for j in range(1, len(h)))

    def reduced_euler_characteristic(self) -> int:
        f = self.f_vector()
        return sum((-1) ** i * f[i + 1] for i in range(self.dim + 1)) - (1 if f else 0)


def h_from_f(f, d: int) -> tuple:
    """h-vector from the face counts via sum_i h_i x^(d-i) = sum f_(i-1)(x-1)^(d-i)."""
    if len(f) != d + 1:
        raise ValueError(f"f-vector length {len(f)} does not match d={d}")
    return tuple(
        sum((-1) ** (k - i) * comb(d - i, k - i) * f[i] for i in range(k + 1))
        for k in range(d + 1)
    )


def f_from_h(h) -> tuple:
    """Inverse transform; ``h_from_f(f_from_h(h), len(h)-1) == h``."""
    d = len(h) - 1
    return tuple(sum(comb(d - k, i - k) * h[k] for k in range(i + 1)) for i in range(d + 1))


# -- derived complexes ----------------------------------------------------


def link(K: SimplicialComplex, face) -> SimplicialComplex:
    """Faces disjoint from ``face`` whose union with it lies in K."""
    face = _as_face(face)
    if not K.has_face(face):
        raise ValueError(f"{face} is not a face of the complex")
    fs = set(face)
    facets = [tuple(v for v in g if v not in fs) for g in K.facets if fs <= set(g)]
    return SimplicialComplex(facets, labels=K.labels)


def costar(K: SimplicialComplex, face) -> SimplicialComplex:
    """All faces of K that do not contain ``face`` (a vertex id is accepted)."""
    if isinstance(face, int):
        face = (face,)
    face = _as_face(face)
    if not K.has_face(face):
        raise ValueError(f"{face} is not a face of the complex")
    fs = set(face)
    facets = []
    for g in K.facets:
        if fs <= set(g):
            facets.extend(tuple(v for v in g if v != drop) for drop in face)
        else:
            facets.append(g)
    facets = [f for f in facets if f]
    if not facets:
        return SimplicialComplex.empty()
    return SimplicialComplex(facets, labels=K.labels)


def skeleton(K: SimplicialComplex, j: int) -> SimplicialComplex:
    """The (j-1)-skeleton: all faces with at most j vertices."""
    if j < 0:
        raise ValueError("skeleton index must be nonnegative")
    if j == 0:
        return SimplicialComplex.empty()
    facets = [f for f in K.facets if len(f) <= j]
    facets.extend(K.faces(j - 1))
    return SimplicialComplex(facets, labels=K.labels)


def induced_subcomplex(K: SimplicialComplex, vertices) -> SimplicialComplex:
    """All faces of K whose vertices lie in the given id set."""
    keep = {int(v) for v in vertices}
    facets = [tuple(v for v in g if v in keep) for g in K.facets]
    facets = [f for f in facets if f]
    if not facets:
        return SimplicialComplex.empty()
    return SimplicialComplex(facets, labels=K.labels)


def stellar_subdivision(K: SimplicialComplex, face) -> SimplicialComplex:
    """Subdivide at ``face``: remove every face containing it, add a new
    vertex rho and all tau + {rho} with tau not containing the face but
    tau + face in K.

    Subdividing at a single vertex is rejected (the operation is only
    defined for faces of positive dimension).
    """
    face = _as_face(face)
    if len(face) < 2:
        raise ValueError("stellar subdivision requires a face of positive dimension")
    if not K.has_face(face):
        raise ValueError(f"{face} is not a face of the complex")
    rho = K.n
    labels = list(K.labels) + [f"rho#{rho}"]
    fs = set(face)
    facets = []
    for g in K.facets:
        if fs <= set(g):
            for drop in face:
                facets.append(tuple(v for v in g if v != drop) + (rho,))
        else:
            facets.append(g)
    return SimplicialComplex(facets, labels=labels)


def join(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    """Simplicial join; vertex sets are made disjoint by shifting B's ids."""
    if A.is_void or B.is_void:
        return SimplicialComplex.void()
    shift = A.n
    labels = list(A.labels) + [f"{t}'" if t in A.labels else t for t in B.labels]
    facets = [fa + tuple(v + shift for v in fb) for fa in (A.facets or ((),)) for fb in (B.facets or ((),))]
    facets = [f for f in facets if f]
    if not facets:
        return SimplicialComplex.empty()
    return SimplicialComplex(facets, labels=labels)


def disjoint_union(A: SimplicialComplex, B: SimplicialComplex) -> SimplicialComplex:
    shift = A.n
    labels = list(A.labels) + [f"{t}'" if t in A.labels else t for t in B.labels]
    facets = list(A.facets) + [tuple(v + shift for v in f) for f in B.facets]
    return SimplicialComplex(facets, labels=labels)


def simplex(k: int) -> SimplicialComplex:
    """The full k-simplex on vertices 1..k+1."""
    return SimplicialComplex.from_tokens([[str(i) for i in range(1, k + 2)]])


def simplex_boundary(k: int) -> SimplicialComplex:
    """The boundary of the k-simplex, a (k-1)-sphere."""
    verts = [str(i) for i in range(1, k + 2)]
    return SimplicialComplex.from_tokens(combinations(verts, k))


# -- classical identities -------------------------------------------------


def short_h_identity_check(K: SimplicialComplex) -> dict:
    """Per-degree check of i*h_i + (d-i+1)*h_{i-1} == sum_v h_{i-1}(lk v),
    valid for every pure complex (1 <= i <= d)."""
    if not K.is_pure:
        raise ValueError("the link-sum h-vector identity requires a pure complex")
    d = K.d
    h = K.h_vector()
    link_h = [link(K, (v,)).h_vector() for v in range(K.n)]
    out = {}
    for i in range(1, d + 1):
        lhs = i * h[i] + (d - i + 1) * h[i - 1]
        rhs = sum(lh[i - 1] for lh in link_h)
        out[i] = lhs == rhs
    return out


# -- the .cplx facet-list format -------------------------------------------


def loads(text: str) -> SimplicialComplex:
    """Parse facet-list text: '#' comments, one whitespace-separated facet
    per nonempty line.  Raises :class:`ParseError` on malformed input."""
    facet_tokens = []
    for lineno, raw in enumerate(text.splitlines(), start=1):
        line = raw.split("#", 1)[0].strip()
        if not line:
            continue
        tokens = line.split()
        if len(set(tokens)) != len(tokens):
            raise ParseError(f"line {lineno}: facet repeats a vertex: {line!r}")
        facet_tokens.append(tokens)
    if not facet_tokens:
        raise ParseError("no facets found in input")
    return SimplicialComplex.from_tokens(facet_tokens)


def dumps(K: SimplicialComplex, header: str | None = None) -> str:
    """Canonical facet-list text (facets lexicographically by vertex id)."""
    lines = [] if header is None else [f"# {header}"]
    lines.extend(" ".join(K.tokens(f)) for f in K.facets)
    return "\n".join(lines) + "\n"


def load(path) -> SimplicialComplex:
    return loads(Path(path).read_text(encoding="utf-8"))


def save(K: SimplicialComplex, path, header: str | None = None) -> None:
    Path(path).write_text(dumps(K, header=header), encoding="utf-8")
