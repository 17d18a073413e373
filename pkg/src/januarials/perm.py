"""Permutations as tuples of images on ``range(n)``.

Products are read left to right to match the Möbius convention:
``perm_mul(p, q)`` applies ``p`` first, then ``q``.
"""
from __future__ import annotations

import math
import re
from typing import Sequence

from .exceptions import InvalidInputError

Perm = tuple[int, ...]


def check_perm(p: Sequence[int]) -> Perm:
    p = tuple(p)
    if sorted(p) != list(range(len(p))):
        raise InvalidInputError("not a permutation")
    return p


def identity_perm(n: int) -> Perm:
    return tuple(range(n))


def perm_mul(p: Perm, q: Perm) -> Perm:
    return tuple(q[i] for i in p)


def perm_inv(p: Perm) -> Perm:
    inv = [0] * len(p)
    for i, j in enumerate(p):
        inv[j] = i
    return tuple(inv)


def perm_pow(p: Perm, k: int) -> Perm:
    if k < 0:
        return perm_pow(perm_inv(p), -k)
    result = identity_perm(len(p))
    for _ in range(k):
        result = perm_mul(result, p)
    return result


def perm_cycles(p: Perm, include_fixed: bool = True) -> list[list[int]]:
    """Cycles of ``p``, each starting at its least point, ordered by that point."""
    seen = [False] * len(p)
    cycles = []
    for i in range(len(p)):
        if seen[i]:
            continue
        cycle = [i]
        seen[i] = True
        j = p[i]
        while j != i:
            seen[j] = True
            cycle.append(j)
            j = p[j]
        if include_fixed or len(cycle) > 1:
            cycles.append(cycle)
    return cycles


def perm_order(p: Perm) -> int:
    return math.lcm(*(len(c) for c in perm_cycles(p))) if p else 1


def is_identity(p: Perm) -> bool:
    return all(i == j for i, j in enumerate(p))


_CYCLE_RE = re.compile(r"\(([^()]*)\)")


def parse_cycles(text: str, n: int) -> Perm:
    """Parse 1-based cycle notation such as ``"(2,4)(3,7)"`` on ``n`` points.

    Whitespace is ignored and fixed points may be omitted; ``"()"`` or an
    empty string is the identity.
    """
    compact = "".join(text.split())
    if _CYCLE_RE.sub("", compact):
        raise InvalidInputError(f"malformed cycle notation: {text!r}")
    images = list(range(n))
    used = set()
    for body in _CYCLE_RE.findall(compact):
        if not body:
            continue
        try:
            pts = [int(tok) for tok in body.split(",")]
        except ValueError:
            raise InvalidInputError(f"malformed cycle ({body}) in {text!r}") from None
        for pt in pts:
            if not 1 <= pt <= n:
                raise InvalidInputError(f"point {pt} outside 1..{n}")
            if pt in used:
                raise InvalidInputError(f"point {pt} appears twice in {text!r}")
            used.add(pt)
        for u, v in zip(pts, pts[1:] + pts[:1]):
            images[u - 1] = v - 1
    return tuple(images)


def format_cycles(p: Perm, labels: Sequence[str] | None = None) -> str:
    """Inverse of :func:`parse_cycles` (1-based unless ``labels`` is given)."""
    name = (lambda i: labels[i]) if labels is not None else (lambda i: str(i + 1))
    out = ["(" + ",".join(name(i) for i in c) + ")"
           for c in perm_cycles(p, include_fixed=False)]
    return "".join(out) or "()"
