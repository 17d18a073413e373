"""Named example actions with their documented generators."""
from __future__ import annotations

from dataclasses import dataclass
from typing import Callable, Optional

from .action import (
    TriangleAction, associate, build_explicit_action, build_pairs_action,
    build_projective_action,
)
from .exceptions import InvalidInputError
from .mobius import MobiusTransformation
from .theory import standard_triple

F = MobiusTransformation.from_formula

ALT16_X = "(2,4)(3,7)(6,10)(8,16)(9,13)(11,14)"
ALT16_Y = "(1,2,3)(4,5,6)(7,8,9)(10,11,12)(13,14,15)"


@dataclass(frozen=True)
class Preset:
    """A base action plus, optionally, the involution giving its associate."""

    name: str
    description: str
    space: str
    k: int
    default_p: Optional[int]
    _build: Callable[[Optional[int]], tuple[TriangleAction, object]]

    def base(self, p: Optional[int] = None) -> TriangleAction:
        return self._build(p if p is not None else self.default_p)[0]

    def involution(self, p: Optional[int] = None):
        return self._build(p if p is not None else self.default_p)[1]

    def action(self, p: Optional[int] = None, use_associate: bool = False) -> TriangleAction:
        base, t = self._build(p if p is not None else self.default_p)
        if use_associate and t is not None:
            return associate(base, t)
        return base


def _standard(k):
    def build(p):
        triple = standard_triple(p, k)
        if triple is None:
            raise InvalidInputError(f"no standard triple for p={p}, k={k}")
        return build_projective_action(p, triple.x, triple.y), triple.t
    return build


def _fixed_p(expected, build):
    def wrapped(p):
        if p != expected:
            raise InvalidInputError(f"this preset is only defined for p={expected}")
        return build(p)
    return wrapped


def _alt16(_p):
    return build_explicit_action(16, ALT16_X, ALT16_Y), None


def _portrait(p):
    x, y = F(p, 0, -1, 1, 0), F(p, 1, 2, -1, 2)
    return build_pairs_action(p, x, y), F(p, 1, 1, 1, -1)


def _k6_p11(p):
    return build_projective_action(p, F(p, 0, -1, 1, 0), F(p, 8, -8, 1, 1)), None


PRESETS = {
    "k3-standard": Preset(
        "k3-standard", "x: z -> -1/z, y: z -> (z-1)/z, t: z -> 1/z on the projective line",
        "line", 3, 13, _standard(3)),
    "k4-p43": Preset(
        "k4-p43", "x: z -> 21/z, y: z -> (2z-1)/(2z), t: z -> 22/z mod 43",
        "line", 4, 43, _fixed_p(43, _standard(4))),
    "k6-p31": Preset(
        "k6-p31", "x: z -> 10/z, y: z -> (z+10)/z, t: z -> 1/(3z) mod 31",
        "line", 6, 31, _fixed_p(31, _standard(6))),
    "alt16": Preset(
        "alt16", f"x = {ALT16_X}, y = {ALT16_Y} on 16 points",
        "explicit", 3, None, _alt16),
    "portrait-psl2-11": Preset(
        "portrait-psl2-11",
        "x: z -> -1/z, y: z -> (z+2)/(2-z), t: z -> (z+1)/(z-1) on unordered pairs mod 11",
        "pairs", 5, 11, _fixed_p(11, _portrait)),
    "k6-p11": Preset(
        "k6-p11", "x: z -> -1/z, y: z -> (8z-8)/(z+1) mod 11",
        "line", 6, 11, _fixed_p(11, _k6_p11)),
}


def get_preset(name: str) -> Preset:
    try:
        return PRESETS[name]
    except KeyError:
        raise InvalidInputError(
            f"unknown preset {name!r}; choose from {', '.join(PRESETS)}") from None


def find_preset(p: int, k: int, space: str) -> Optional[Preset]:
    """A bundled preset matching ``(p, k, space)``, if any."""
    for preset in PRESETS.values():
        if preset.default_p == p and preset.k == k and preset.space == space:
            return preset
    return None
