"""Surface invariants of the map obtained by embedding a coset graph.

Collapsing every y-face (and x-monogon) of a januarial to a point gives the
companion graph: one vertex per y-orbit and one edge per x-transposition.
Everything here is computed combinatorially from the orbit data. The
rotation at a vertex is the y-order of its points, and the "right-most" exit
rule used when tracing faces is the slot successor ``u -> u^y``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Optional

from .action import CosetMap, classify
from .exceptions import InvalidInputError, InvariantViolation

BLUE = "blue"
RED = "red"
GREEN = "green"

SIMPLE = "simple"
GENERAL = "general"


def euler_characteristic(cm: CosetMap) -> int:
    """``V - E + F`` of the closed surface carrying the full 2-complex.

    Vertices are the points; edges are one per x-orbit (loops included) plus
    one y-edge per point; faces are the x-monogons, y-faces and xy-faces.
    """
    n = cm.size
    edges = len(cm.x_pairs) + len(cm.x_fixed) + n
    faces = len(cm.x_fixed) + len(cm.y_orbits) + len(cm.xy_orbits)
    return n - edges + faces


def genus_by_euler(cm: CosetMap) -> int:
    chi = euler_characteristic(cm)
    if chi % 2:
        raise InvariantViolation(f"odd Euler characteristic {chi}")
    return (2 - chi) // 2


def _require_januarial(cm):
    if not classify(cm).is_januarial:
        raise InvalidInputError("map is not a januarial")


def genus_by_lemma(cm: CosetMap) -> int:
    """Half of (non-loop x-edges minus y-faces); januarials only."""
    _require_januarial(cm)
    diff = len(cm.x_pairs) - len(cm.y_orbits)
    if diff % 2 or diff < 0:
        raise InvariantViolation(
            f"x-edges minus y-faces is {diff}, expected a non-negative even number")
    return diff // 2


@dataclass(frozen=True)
class CompanionGraph:
    """The collapsed graph with its rotation system and two face boundaries.

    Slots are the points that carry a non-loop x-edge. ``edges[e]`` is the
    pair of slots joined by edge ``e``; ``faces[i]`` (i = 0, 1) lists the slots
    ``s`` in traversal order, each standing for the directed edge
    ``s -> s^x``.
    """

    cm: CosetMap
    vertex_of: tuple[int, ...]
    rotation: tuple[tuple[int, ...], ...]
    edges: tuple[tuple[int, int], ...]
    edge_of: tuple[Optional[int], ...]
    colors: tuple[str, ...]
    faces: tuple[tuple[int, ...], tuple[int, ...]]
    face_of: tuple[int, ...]

    @property
    def n_vertices(self) -> int:
        return len(self.rotation)

    @property
    def face1(self) -> tuple[int, ...]:
        return self.faces[0]

    @property
    def face2(self) -> tuple[int, ...]:
        return self.faces[1]

    def is_slot(self, s: int) -> bool:
        return self.edge_of[s] is not None

    def blue_edges(self) -> list[int]:
        return [e for e, c in enumerate(self.colors) if c == BLUE]

    def vertex_label(self, v: int) -> str:
        labels = self.cm.action.space.labels
        return labels[min(self.cm.y_orbits[v])]

    def next_slot(self, u: int, blue_only: bool = False) -> int:
        """First slot among ``u^y, u^{y^2}, ...`` (optionally blue ones only)."""
        y = self.cm.action.y
        w = y[u]
        while True:
            e = self.edge_of[w]
            if e is not None and (not blue_only or self.colors[e] == BLUE):
                return w
            if w == u:
                raise InvariantViolation(f"no exit slot after point {u}")
            w = y[w]

    def face_counts(self, face_index: int) -> tuple[int, int]:
        """``(V_i, E_i)``: vertices and edges visited by face ``face_index``."""
        slots = self.faces[_face(face_index)]
        x = self.cm.action.x
        verts = {self.vertex_of[s] for s in slots} | {self.vertex_of[x[s]] for s in slots}
        if not slots:
            orbit = self.cm.xy_orbits[_face(face_index)]
            verts = {self.vertex_of[s] for s in orbit}
        return len(verts), len({self.edge_of[s] for s in slots})


def _face(face_index):
    if face_index not in (1, 2):
        raise InvalidInputError(f"face index must be 1 or 2, got {face_index}")
    return face_index - 1


def companion(cm: CosetMap) -> CompanionGraph:
    _require_januarial(cm)
    x = cm.action.x
    n = cm.size
    vertex_of = tuple(cm.y_orbit_index())
    face_of = tuple(cm.xy_orbit_index())
    edge_of: list[Optional[int]] = [None] * n
    for e, (s, t) in enumerate(cm.x_pairs):
        edge_of[s] = edge_of[t] = e
    rotation = tuple(tuple(s for s in orbit if edge_of[s] is not None)
                     for orbit in cm.y_orbits)
    colors = []
    for s, t in cm.x_pairs:
        if face_of[s] != face_of[t]:
            colors.append(BLUE)
        else:
            colors.append(RED if face_of[s] == 0 else GREEN)
    faces = tuple(tuple(s for s in orbit if x[s] != s) for orbit in cm.xy_orbits)
    return CompanionGraph(cm, vertex_of, rotation, tuple(cm.x_pairs), tuple(edge_of),
                          tuple(colors), faces, face_of)


def trace_face(g: CompanionGraph, face_index: int) -> list[int]:
    """Walk a face boundary by the slot-successor rule.

    Independent of the stored face lists (which come straight from the
    xy-orbits); the two must agree up to rotation.
    """
    face = g.faces[_face(face_index)]
    if not face:
        return []
    x = g.cm.action.x
    start = face[0]
    walk = [start]
    s = g.next_slot(x[start])
    while s != start:
        walk.append(s)
        s = g.next_slot(x[s])
    return walk


def boundary_circuits(g: CompanionGraph, face_index: int) -> list[list[int]]:
    """Partition the blue subgraph into circuits oriented like face ``face_index``.

    Each circuit is a list of edge indices. Tracing with face 1's directions
    yields ``h_2`` circuits, with face 2's directions ``h_1``.
    """
    fi = _face(face_index)
    x = g.cm.action.x
    starts = [s for s in g.faces[fi] if g.colors[g.edge_of[s]] == BLUE]
    if not starts:
        raise InvariantViolation("blue subgraph is empty")
    unused = set(starts)
    circuits = []
    for start in starts:
        if start not in unused:
            continue
        circuit = []
        s = start
        while True:
            if s not in unused:
                raise InvariantViolation(f"boundary walk revisits slot {s} off its start")
            unused.discard(s)
            circuit.append(g.edge_of[s])
            s = g.next_slot(x[s], blue_only=True)
            if g.face_of[s] != fi:
                raise InvariantViolation(
                    f"boundary walk left face {face_index} at point {s}")
            if s == start:
                break
        circuits.append(circuit)
    return circuits


def subsurface_genus(g: CompanionGraph, face_index: int, h_i: int) -> int:
    """Genus ``g_i`` from ``2 - 2 g_i = V_i - E_i + h_i + 1``."""
    v, e = g.face_counts(face_index)
    twice = 2 - v + e - h_i - 1
    if twice % 2 or twice < 0:
        raise InvariantViolation(
            f"face {face_index}: V={v}, E={e}, h={h_i} give non-integral genus")
    return twice // 2


@dataclass(frozen=True, eq=False)
class SurfaceType:
    """Type ``((h1, g1), (h2, g2))`` of a januarial, by face.

    Equality ignores which face is which. Simple types print as
    ``(h, g, g')`` with the larger genus first; general types print their
    two pairs in lexicographic order.
    """

    kind: str
    h1: int
    g1: int
    h2: int
    g2: int

    def __post_init__(self):
        if self.kind not in (SIMPLE, GENERAL):
            raise InvalidInputError(f"unknown type kind {self.kind!r}")
        if self.kind == SIMPLE and self.h1 != self.h2:
            raise InvariantViolation("simple type needs h1 == h2")
        if min(self.h1, self.h2) < 1 or min(self.g1, self.g2) < 0:
            raise InvariantViolation(f"impossible type values {self.pairs}")

    @classmethod
    def simple(cls, h: int, g1: int, g2: int) -> SurfaceType:
        return cls(SIMPLE, h, g1, h, g2)

    @classmethod
    def general(cls, pair1: tuple[int, int], pair2: tuple[int, int]) -> SurfaceType:
        return cls(GENERAL, pair1[0], pair1[1], pair2[0], pair2[1])

    @property
    def is_simple(self) -> bool:
        return self.kind == SIMPLE

    @property
    def pairs(self) -> tuple[tuple[int, int], tuple[int, int]]:
        return ((self.h1, self.g1), (self.h2, self.g2))

    @property
    def h(self) -> int:
        if not self.is_simple:
            raise InvalidInputError("h is only defined for simple types")
        return self.h1

    def canonical(self) -> tuple:
        return (self.kind, tuple(sorted(self.pairs)))

    def __eq__(self, other):
        if not isinstance(other, SurfaceType):
            return NotImplemented
        return self.canonical() == other.canonical()

    def __hash__(self):
        return hash(self.canonical())

    def as_tuple(self) -> tuple:
        if self.is_simple:
            return (self.h1, max(self.g1, self.g2), min(self.g1, self.g2))
        return tuple(sorted(self.pairs))

    def __str__(self):
        t = self.as_tuple()
        if self.is_simple:
            return "(%d,%d,%d)" % t
        return "((%d,%d),(%d,%d))" % (t[0] + t[1])


def blue_degrees(g: CompanionGraph) -> list[int]:
    deg = [0] * g.n_vertices
    for e in g.blue_edges():
        s, t = g.edges[e]
        deg[g.vertex_of[s]] += 1
        deg[g.vertex_of[t]] += 1
    return deg


def _blue_components(g):
    parent = list(range(g.n_vertices))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    touched = set()
    for e in g.blue_edges():
        s, t = g.edges[e]
        u, v = g.vertex_of[s], g.vertex_of[t]
        touched.update((u, v))
        parent[find(u)] = find(v)
    return len({find(v) for v in touched})


def is_simple(g: CompanionGraph) -> bool:
    """True iff the blue subgraph is a disjoint union of simple circuits."""
    return all(d in (0, 2) for d in blue_degrees(g))


def surface_type(g: CompanionGraph) -> SurfaceType:
    if is_simple(g):
        h = _blue_components(g)
        if h == 0:
            raise InvariantViolation("blue subgraph is empty")
        return SurfaceType.simple(h, subsurface_genus(g, 1, h), subsurface_genus(g, 2, h))
    h1 = len(boundary_circuits(g, 2))
    h2 = len(boundary_circuits(g, 1))
    return SurfaceType.general((h1, subsurface_genus(g, 1, h1)),
                               (h2, subsurface_genus(g, 2, h2)))


def genus_from_type(t: SurfaceType) -> int:
    """``g1 + g2 + h - 1``; defined for simple types only."""
    if not t.is_simple:
        raise InvalidInputError("genus formula from type needs a simple type")
    return t.g1 + t.g2 + t.h - 1


@dataclass(frozen=True)
class FaceCounts:
    V: int
    E: int
    h: int
    g: int


@dataclass(frozen=True)
class SurfaceReport:
    euler_char: int
    genus_euler: int
    genus_lemma: Optional[int] = None
    type: Optional[SurfaceType] = None
    faces: Optional[tuple[FaceCounts, FaceCounts]] = None
    n_blue: Optional[int] = None

    @property
    def genus(self) -> int:
        return self.genus_euler


def analyze_surface(cm: CosetMap) -> SurfaceReport:
    """Every surface invariant available for ``cm``.

    Non-januarials only get the Euler characteristic and genus.
    """
    chi = euler_characteristic(cm)
    genus_e = genus_by_euler(cm)
    if not classify(cm).is_januarial:
        return SurfaceReport(chi, genus_e)
    genus_l = genus_by_lemma(cm)
    if genus_l != genus_e:
        raise InvariantViolation(
            f"genus by x-edge count ({genus_l}) disagrees with Euler ({genus_e})")
    g = companion(cm)
    st = surface_type(g)
    faces = []
    for i, (h, gen) in enumerate(st.pairs, start=1):
        v, e = g.face_counts(i)
        faces.append(FaceCounts(v, e, h, gen))
    if st.is_simple and genus_from_type(st) != genus_l:
        raise InvariantViolation(
            f"simple type {st} implies genus {genus_from_type(st)}, not {genus_l}")
    return SurfaceReport(chi, genus_e, genus_l, st, tuple(faces), len(g.blue_edges()))
