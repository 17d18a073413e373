"""Finite actions of (2,k,l) triangle groups and the maps they define.

An action is a pair of permutations ``(x, y)`` of a finite set with
``x^2 = 1``; ``k`` and ``l`` are the orders of ``y`` and ``xy``. Actions are
built from Möbius generators (on the projective line or on unordered pairs
of its points) or from explicit permutations in cycle notation.
"""
from __future__ import annotations

import itertools
from dataclasses import dataclass, field
from typing import Mapping, Sequence, Union

from .exceptions import InvalidInputError
from .mobius import (
    MobiusTransformation, apply_index, check_modulus, compose, point_from_index,
    point_label,
)
from .perm import (
    Perm, check_perm, is_identity, parse_cycles, perm_cycles, perm_inv, perm_mul,
    perm_order,
)

PROJECTIVE_LINE = "projective_line"
UNORDERED_PAIRS = "unordered_pairs"
EXPLICIT = "explicit"

JANUARIAL = "januarial"
M_FACE_MAP = "m_face_map"
DEGENERATE = "degenerate"


@dataclass(frozen=True)
class ActionSpace:
    """The finite set acted on, with a display label for each index."""

    kind: str
    size: int
    labels: tuple[str, ...]
    p: int | None = None
    pairs: tuple[tuple[int, int], ...] | None = None

    def __post_init__(self):
        if len(self.labels) != self.size:
            raise InvalidInputError("one label per point required")
        if len(set(self.labels)) != self.size:
            raise InvalidInputError("labels must be unique")

    @classmethod
    def projective_line(cls, p: int) -> ActionSpace:
        check_modulus(p)
        labels = tuple(point_label(point_from_index(i, p)) for i in range(p + 1))
        return cls(PROJECTIVE_LINE, p + 1, labels, p=p)

    @classmethod
    def unordered_pairs(cls, p: int) -> ActionSpace:
        # index p is infinity, so lexicographic order puts infinity last
        check_modulus(p)
        pairs = tuple(itertools.combinations(range(p + 1), 2))
        labels = tuple(
            "{%s,%s}" % (point_from_index(i, p), point_from_index(j, p))
            for i, j in pairs)
        return cls(UNORDERED_PAIRS, len(pairs), labels, p=p, pairs=pairs)

    @classmethod
    def explicit(cls, n: int) -> ActionSpace:
        if n < 1:
            raise InvalidInputError(f"degree must be positive, got {n}")
        return cls(EXPLICIT, n, tuple(str(i + 1) for i in range(n)))

    def induced(self, m: MobiusTransformation) -> Perm:
        """The permutation of this space induced by a Möbius transformation."""
        if self.kind == EXPLICIT:
            raise InvalidInputError("explicit spaces carry no Möbius action")
        if m.p != self.p:
            raise InvalidInputError(f"modulus mismatch: {m.p} vs {self.p}")
        line = [apply_index(m, i) for i in range(self.p + 1)]
        if self.kind == PROJECTIVE_LINE:
            return tuple(line)
        index = {pair: n for n, pair in enumerate(self.pairs)}
        return tuple(index[tuple(sorted((line[i], line[j])))] for i, j in self.pairs)


@dataclass(frozen=True)
class TriangleAction:
    """A transitive action of Δ(2, k, l) given by permutations ``x`` and ``y``.

    ``generators`` records the Möbius transformations the permutations were
    induced from, when there are any (keys ``"x"``, ``"y"`` and possibly
    ``"t"``); ``base`` is the action this one is an associate of.
    """

    space: ActionSpace
    x: Perm
    y: Perm
    k: int
    l: int
    generators: Mapping[str, MobiusTransformation] = field(
        default_factory=dict, compare=False)
    base: TriangleAction | None = field(default=None, compare=False, repr=False)

    @property
    def size(self) -> int:
        return self.space.size

    @property
    def xy(self) -> Perm:
        return perm_mul(self.x, self.y)


def count_components(n: int, perms: Sequence[Perm]) -> int:
    """Number of orbits of the group generated by ``perms`` (union-find)."""
    parent = list(range(n))

    def find(i):
        while parent[i] != i:
            parent[i] = parent[parent[i]]
            i = parent[i]
        return i

    components = n
    for perm in perms:
        for i, j in enumerate(perm):
            ri, rj = find(i), find(j)
            if ri != rj:
                parent[ri] = rj
                components -= 1
    return components


def make_action(space: ActionSpace, x: Perm, y: Perm,
                generators: Mapping[str, MobiusTransformation] | None = None,
                base: TriangleAction | None = None) -> TriangleAction:
    """Validate ``(x, y)`` and compute ``k`` and ``l``."""
    x, y = check_perm(x), check_perm(y)
    if len(x) != space.size or len(y) != space.size:
        raise InvalidInputError("permutation degree does not match the space")
    if is_identity(x) or not is_identity(perm_mul(x, x)):
        raise InvalidInputError("x is not an involution")
    if is_identity(y):
        raise InvalidInputError("y is trivial")
    components = count_components(space.size, [x, y])
    if components != 1:
        raise InvalidInputError(
            f"action is not transitive: {components} components")
    return TriangleAction(space, x, y, perm_order(y), perm_order(perm_mul(x, y)),
                          dict(generators or {}), base)


def _check_mobius_pair(p, x, y):
    check_modulus(p)
    if x.p != p or y.p != p:
        raise InvalidInputError(f"generators are not defined mod {p}")
    if not x.is_involution():
        raise InvalidInputError(f"x is not an involution: {x.formula()}")
    if y.is_identity():
        raise InvalidInputError("y is trivial")


def build_projective_action(p: int, x: MobiusTransformation,
                            y: MobiusTransformation) -> TriangleAction:
    _check_mobius_pair(p, x, y)
    space = ActionSpace.projective_line(p)
    return make_action(space, space.induced(x), space.induced(y), {"x": x, "y": y})


def build_pairs_action(p: int, x: MobiusTransformation,
                       y: MobiusTransformation) -> TriangleAction:
    """The induced action ``{u, v} -> {u^g, v^g}`` on unordered pairs."""
    _check_mobius_pair(p, x, y)
    space = ActionSpace.unordered_pairs(p)
    return make_action(space, space.induced(x), space.induced(y), {"x": x, "y": y})


def build_explicit_action(n: int, x: Union[str, Sequence[int]],
                          y: Union[str, Sequence[int]]) -> TriangleAction:
    """Action from permutations given in 1-based cycle notation (or image tuples)."""
    space = ActionSpace.explicit(n)
    xp = parse_cycles(x, n) if isinstance(x, str) else check_perm(x)
    yp = parse_cycles(y, n) if isinstance(y, str) else check_perm(y)
    return make_action(space, xp, yp)


def associate(a: TriangleAction,
              t: Union[MobiusTransformation, str, Sequence[int]]) -> TriangleAction:
    """The action of ``(xt, y)`` for an involution ``t`` centralizing ``x`` and inverting ``y``."""
    if isinstance(t, MobiusTransformation):
        tp = a.space.induced(t)
    elif isinstance(t, str):
        tp = parse_cycles(t, a.size)
    else:
        tp = check_perm(t)
    if len(tp) != a.size:
        raise InvalidInputError("t has the wrong degree")
    if not is_identity(perm_mul(tp, tp)):
        raise InvalidInputError("t^2 != 1")
    t_inv = perm_inv(tp)
    if perm_mul(perm_mul(t_inv, a.x), tp) != a.x:
        raise InvalidInputError("t^-1 x t != x")
    if perm_mul(perm_mul(t_inv, a.y), tp) != perm_inv(a.y):
        raise InvalidInputError("t^-1 y t != y^-1")
    generators = {}
    if isinstance(t, MobiusTransformation) and "x" in a.generators:
        generators = {"x": compose(a.generators["x"], t), "y": a.generators["y"], "t": t}
    return make_action(a.space, perm_mul(a.x, tp), a.y, generators, base=a)


@dataclass(frozen=True)
class CosetMap:
    """Combinatorial data of the embedded coset graph.

    ``y_orbits`` and ``xy_orbits`` are cyclically ordered (successive entries
    are related by ``y``, resp. ``xy``), each starting at its least index and
    listed in order of that index. The xy-orbit holding point 0 is face 1.
    """

    action: TriangleAction
    x_fixed: tuple[int, ...]
    x_pairs: tuple[tuple[int, int], ...]
    y_orbits: tuple[tuple[int, ...], ...]
    xy_orbits: tuple[tuple[int, ...], ...]

    @property
    def size(self) -> int:
        return self.action.size

    def y_orbit_index(self) -> list[int]:
        return _orbit_lookup(self.y_orbits, self.size)

    def xy_orbit_index(self) -> list[int]:
        return _orbit_lookup(self.xy_orbits, self.size)


def _orbit_lookup(orbits, n):
    lookup = [0] * n
    for idx, orbit in enumerate(orbits):
        for s in orbit:
            lookup[s] = idx
    return lookup


def coset_map(a: TriangleAction) -> CosetMap:
    x = a.x
    x_fixed = tuple(s for s in range(a.size) if x[s] == s)
    x_pairs = tuple((s, x[s]) for s in range(a.size) if s < x[s])
    return CosetMap(
        a, x_fixed, x_pairs,
        tuple(tuple(c) for c in perm_cycles(a.y)),
        tuple(tuple(c) for c in perm_cycles(a.xy)),
    )


@dataclass(frozen=True)
class MapClass:
    m: int
    orbit_sizes: tuple[int, ...]
    verdict: str

    @property
    def is_januarial(self) -> bool:
        return self.verdict == JANUARIAL

    @property
    def nontrivial_faces(self) -> int:
        """Number of xy-orbits of length greater than one."""
        return sum(1 for s in self.orbit_sizes if s > 1)


def classify(cm: CosetMap) -> MapClass:
    sizes = tuple(sorted(len(o) for o in cm.xy_orbits))
    m = len(sizes)
    if cm.size < 2:
        verdict = DEGENERATE
    elif m == 2 and sizes[0] == sizes[1]:
        verdict = JANUARIAL
    else:
        verdict = M_FACE_MAP
    return MapClass(m, sizes, verdict)
