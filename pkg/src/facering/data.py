"""Bundled complexes: the three 8-vertex singular 3-pseudomanifold
triangulations (with their simple 3-trees) plus small control spaces.

Facet lists for n1/n3/n4 are transcribed digit by digit from the source
tables; the test suite pins a checksum of each so accidental edits fail
loudly.  Everything is exposed in the .cplx facet-list format.
"""

from __future__ import annotations

from . import complexes
from .complexes import SimplicialComplex

_N1 = """
1 2 4 8
1 2 6 8
1 3 4 8
1 3 7 8
1 5 6 8
1 5 7 8
2 3 5 8
2 3 7 8
2 4 5 8
2 6 7 8
3 4 6 8
3 5 6 8
4 5 7 8
4 6 7 8
1 2 4 7
1 2 5 7
1 3 6 7
1 4 6 7
2 3 4 7
2 5 6 7
3 4 5 7
3 5 6 7
1 2 3 6
2 3 4 6
1 3 4 5
1 2 3 5
1 4 5 6
2 4 5 6
"""

_N3 = """
1 2 4 8
1 2 6 8
1 3 4 8
1 3 7 8
1 5 6 8
1 5 7 8
2 3 5 8
2 3 7 8
2 4 5 8
2 6 7 8
3 4 6 8
3 5 6 8
4 5 7 8
4 6 7 8
1 2 3 4
2 3 4 7
2 4 5 6
2 4 6 7
3 4 5 6
3 4 5 7
1 2 3 5
1 2 5 6
1 3 5 7
"""

_N4 = """
1 2 4 8
1 2 6 8
1 3 4 8
1 3 7 8
1 5 6 8
1 5 7 8
2 3 5 8
2 3 7 8
2 4 5 8
2 6 7 8
3 4 6 8
3 5 6 8
4 5 7 8
4 6 7 8
1 2 4 5
1 2 5 6
2 3 5 6
2 3 6 7
3 4 6 7
1 3 4 7
1 4 5 7
"""

_TREE = """
1 2 4 8
1 2 6 8
1 3 4 8
1 3 7 8
1 5 6 8
"""

_BD_DELTA3 = """
1 2 3
1 2 4
1 3 4
2 3 4
"""

_BD_DELTA4 = """
1 2 3 4
1 2 3 5
1 2 4 5
1 3 4 5
2 3 4 5
"""

# Octahedron with antipodal pairs (1,4), (2,5), (3,6).
_OCTAHEDRON = """
1 2 3
1 2 6
1 3 5
1 5 6
2 3 4
2 4 6
3 4 5
4 5 6
"""

# Minimal 6-vertex projective plane (antipodal quotient of the icosahedron).
_RP2_6 = """
1 2 3
1 2 6
1 3 4
1 4 5
1 5 6
2 3 5
2 4 5
2 4 6
3 4 6
3 5 6
"""

# Minimal 7-vertex torus: triangles {i, i+1, i+3} and {i, i+2, i+3} mod 7.
_TORUS7 = """
1 2 4
1 3 4
2 3 5
2 4 5
3 4 6
3 5 6
4 5 7
4 6 7
1 5 6
1 5 7
2 6 7
1 2 6
1 3 7
2 3 7
"""

# A sphere with north and south pole identified: cylinder on the disjoint
# 3-cycles 123 / 456, both rims coned to the single apex "a".  The apex link
# is two disjoint circles; every other link is a 5-cycle.
_PINCHED_TORUS = """
a 1 2
a 2 3
a 1 3
a 4 5
a 5 6
a 4 6
1 2 4
2 4 5
2 3 5
3 5 6
1 3 6
1 4 6
"""

# Two octahedron-style spheres sharing both poles n and s.  Both pinch
# vertices see the same generator of H^1, so the inclusion images fail to be
# independent: a negative control for homological isolation.
_DOUBLE_PINCH = """
n 1 2
n 2 3
n 3 4
n 1 4
s 1 2
s 2 3
s 3 4
s 1 4
n 5 6
n 6 7
n 7 8
n 5 8
s 5 6
s 6 7
s 7 8
s 5 8
"""

_TWO_HOLLOW_TRIANGLES = """
1 2
1 3
2 3
4 5
4 6
5 6
"""

_TWO_TRIANGLES = """
1 2 3
4 5 6
"""

_TWO_TRIANGLES_VERTEX = """
1 2 3
1 4 5
"""

_TWO_SPHERES = """
1 2 3
1 2 4
1 3 4
2 3 4
5 6 7
5 6 8
5 7 8
6 7 8
"""

# Codimension-one face 123 sits in three facets: not a pseudomanifold.
_BROKEN_PM = """
1 2 3 4
1 2 3 5
1 2 3 6
"""

_REGISTRY: dict[str, tuple[str, str]] = {
    "n1": ("8-vertex 3-pseudomanifold, 8 torus-link singularities, 28 facets", _N1),
    "n3": ("8-vertex 3-pseudomanifold, 4 projective-plane + 1 torus links, 23 facets", _N3),
    "n4": ("8-vertex 3-pseudomanifold, one torus-link singularity, 21 facets", _N4),
    "n1-tree": ("simple 3-tree used by the n1 construction", _TREE),
    "n3-tree": ("simple 3-tree used by the n3 construction", _TREE),
    "n4-tree": ("simple 3-tree used by the n4 construction", _TREE),
    "bd-delta3": ("boundary of the 3-simplex (2-sphere)", _BD_DELTA3),
    "bd-delta4": ("boundary of the 4-simplex (3-sphere)", _BD_DELTA4),
    "octahedron": ("octahedral 2-sphere", _OCTAHEDRON),
    "rp2-6": ("minimal 6-vertex projective plane", _RP2_6),
    "torus7": ("minimal 7-vertex torus", _TORUS7),
    "pinched-torus": ("sphere with poles identified; one singular vertex", _PINCHED_TORUS),
    "double-pinch": ("two spheres sharing two vertices; dependent singularities", _DOUBLE_PINCH),
    "two-hollow-triangles": ("disjoint union of two hollow triangles", _TWO_HOLLOW_TRIANGLES),
    "two-triangles": ("disjoint union of two solid triangles", _TWO_TRIANGLES),
    "two-triangles-vertex": ("two solid triangles sharing one vertex", _TWO_TRIANGLES_VERTEX),
    "two-spheres": ("disjoint union of two 2-spheres", _TWO_SPHERES),
    "broken-pm": ("codim-1 face in three facets; pseudomanifold negative control", _BROKEN_PM),
}


def names() -> list[str]:
    return list(_REGISTRY)


def description(name: str) -> str:
    return _REGISTRY[name][0]


def get(name: str) -> SimplicialComplex:
    try:
        _, text = _REGISTRY[name]
    except KeyError:
        raise KeyError(f"unknown bundled complex {name!r}; see data.names()") from None
    return complexes.loads(text)


def emit(name: str) -> str:
    """Canonical .cplx text for a bundled complex."""
    return complexes.dumps(get(name), header=f"{name}: {description(name)}")
