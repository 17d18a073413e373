"""Exact arithmetic on the projective line over a prime field.

Elements of PGL(2, p) are stored as normalized 2x2 matrices ``(a b; c d)``
acting on the right of row vectors, so that the matrix corresponds to the
transformation ``z -> (a*z + c) / (b*z + d)`` and products are read left to
right: ``compose(m1, m2)`` means "apply m1, then m2", which is the matrix
product ``M1 @ M2``.
"""
from __future__ import annotations

from dataclasses import dataclass
from typing import Iterator, Union

from .exceptions import InvalidInputError


class _Infinity:
    """The point at infinity of the projective line (a singleton)."""

    _instance = None

    def __new__(cls):
        if cls._instance is None:
            cls._instance = super().__new__(cls)
        return cls._instance

    def __repr__(self):
        return "INFINITY"

    def __str__(self):
        return "∞"

    def __reduce__(self):
        return (_Infinity, ())


INFINITY = _Infinity()

ProjectivePoint = Union[int, _Infinity]


def is_prime(n: int) -> bool:
    if n < 2:
        return False
    if n % 2 == 0:
        return n == 2
    f = 3
    while f * f <= n:
        if n % f == 0:
            return False
        f += 2
    return True


def primes_between(lo: int, hi: int) -> list[int]:
    return [n for n in range(max(lo, 2), hi + 1) if is_prime(n)]


def check_modulus(p: int) -> int:
    """Validate a modulus for this package: an odd prime with p >= 5."""
    if isinstance(p, bool) or not isinstance(p, int):
        raise InvalidInputError(f"modulus must be an integer, got {p!r}")
    if not is_prime(p):
        raise InvalidInputError(f"modulus {p} is not prime")
    if p < 5:
        raise InvalidInputError(f"modulus must be a prime >= 5, got {p}")
    return p


@dataclass(frozen=True)
class PrimeField:
    """The field of residues modulo an odd prime ``p >= 5``."""

    p: int

    def __post_init__(self):
        check_modulus(self.p)

    def __call__(self, a: int) -> int:
        return a % self.p

    def inv(self, a: int) -> int:
        a %= self.p
        if a == 0:
            raise ZeroDivisionError(f"0 has no inverse mod {self.p}")
        return pow(a, -1, self.p)

    def is_square(self, a: int) -> bool:
        return is_square(a, self.p)

    def points(self) -> list[ProjectivePoint]:
        """All ``p + 1`` points of the projective line, infinity last."""
        return [*range(self.p), INFINITY]


def is_square(a: int, p: int) -> bool:
    """Euler's criterion; zero counts as a square."""
    a %= p
    if a == 0:
        return True
    return pow(a, (p - 1) // 2, p) == 1


def symmetric_residue(a: int, p: int) -> int:
    """Representative of ``a mod p`` in ``(-p/2, p/2]``."""
    a %= p
    return a - p if a > p // 2 else a


def point_index(z: ProjectivePoint, p: int) -> int:
    """Index of a point in ``0..p``; infinity is ``p``."""
    if z is INFINITY:
        return p
    if isinstance(z, bool) or not isinstance(z, int):
        raise InvalidInputError(f"not a projective point: {z!r}")
    return z % p


def point_from_index(i: int, p: int) -> ProjectivePoint:
    return INFINITY if i == p else i


def point_label(z: ProjectivePoint) -> str:
    return str(z)


# -- raw 4-tuple arithmetic, used in hot loops ------------------------------

def _mul(m, n, p):
    a, b, c, d = m
    e, f, g, h = n
    return ((a * e + b * g) % p, (a * f + b * h) % p,
            (c * e + d * g) % p, (c * f + d * h) % p)


def _normalize(m, p):
    for v in m:
        if v % p:
            s = pow(v, -1, p)
            return tuple(x * s % p for x in m)
    raise InvalidInputError("zero matrix")


def _is_scalar(m):
    a, b, c, d = m
    return b == 0 and c == 0 and a == d


def _order(m, p):
    if _is_scalar(m):
        return 1
    power = m
    # element orders in PGL(2, p) never exceed p + 1
    for n in range(2, p + 3):
        power = _mul(power, m, p)
        if _is_scalar(power):
            return n
    raise AssertionError(f"no finite order found for {m} mod {p}")


@dataclass(frozen=True)
class MobiusTransformation:
    """An element of PGL(2, p), stored as a normalized matrix ``(a b; c d)``.

    Acts by ``z -> (a*z + c) / (b*z + d)``. The first nonzero entry of
    ``(a, b, c, d)`` is scaled to 1, so equal group elements compare and hash
    equal.

    >>> x = MobiusTransformation(0, 1, -1, 0, 13)
    >>> y = MobiusTransformation.from_formula(13, 1, -1, 1, 0)
    >>> (x * y).formula()
    'z -> z+1'
    """

    a: int
    b: int
    c: int
    d: int
    p: int

    def __post_init__(self):
        p = check_modulus(self.p)
        raw = tuple(v % p for v in (self.a, self.b, self.c, self.d))
        if (raw[0] * raw[3] - raw[1] * raw[2]) % p == 0:
            raise InvalidInputError(
                f"singular matrix ({self.a} {self.b}; {self.c} {self.d}) mod {p}")
        a, b, c, d = _normalize(raw, p)
        object.__setattr__(self, "a", a)
        object.__setattr__(self, "b", b)
        object.__setattr__(self, "c", c)
        object.__setattr__(self, "d", d)

    @classmethod
    def from_formula(cls, p: int, alpha: int, beta: int, gamma: int,
                     delta: int) -> MobiusTransformation:
        """Build ``z -> (alpha*z + beta) / (gamma*z + delta)``."""
        return cls(alpha, gamma, beta, delta, p)

    @classmethod
    def identity(cls, p: int) -> MobiusTransformation:
        return cls(1, 0, 0, 1, p)

    @classmethod
    def _from_raw(cls, m, p):
        return cls(m[0], m[1], m[2], m[3], p)

    @property
    def entries(self) -> tuple[int, int, int, int]:
        return (self.a, self.b, self.c, self.d)

    @property
    def det(self) -> int:
        return (self.a * self.d - self.b * self.c) % self.p

    @property
    def trace(self) -> int:
        return (self.a + self.d) % self.p

    def __call__(self, z: ProjectivePoint) -> ProjectivePoint:
        return apply(self, z)

    def __mul__(self, other: MobiusTransformation) -> MobiusTransformation:
        return compose(self, other)

    def __pow__(self, n: int) -> MobiusTransformation:
        if n < 0:
            return inverse(self) ** (-n)
        result = MobiusTransformation.identity(self.p)
        for _ in range(n):
            result = compose(result, self)
        return result

    def inverse(self) -> MobiusTransformation:
        return inverse(self)

    def order(self) -> int:
        return element_order(self)

    def theta(self) -> int:
        return theta(self)

    def in_psl(self) -> bool:
        return in_psl(self)

    def is_identity(self) -> bool:
        return _is_scalar(self.entries)

    def is_involution(self) -> bool:
        return not self.is_identity() and self.trace == 0

    def formula(self) -> str:
        return format_formula(self)

    def __str__(self):
        return self.formula()


def apply(m: MobiusTransformation, z: ProjectivePoint) -> ProjectivePoint:
    """Image of ``z`` under ``m``, computed on homogeneous coordinates."""
    p = m.p
    if z is INFINITY:
        u, w = 1, 0
    else:
        u, w = point_index(z, p), 1
    num = (u * m.a + w * m.c) % p
    den = (u * m.b + w * m.d) % p
    if den == 0:
        return INFINITY
    return num * pow(den, -1, p) % p


def apply_index(m: MobiusTransformation, i: int) -> int:
    """Like :func:`apply` but on point indices (infinity is ``p``)."""
    return point_index(apply(m, point_from_index(i, m.p)), m.p)


def compose(m1: MobiusTransformation, m2: MobiusTransformation) -> MobiusTransformation:
    """Apply ``m1`` first, then ``m2``."""
    if m1.p != m2.p:
        raise InvalidInputError(f"modulus mismatch: {m1.p} vs {m2.p}")
    return MobiusTransformation._from_raw(_mul(m1.entries, m2.entries, m1.p), m1.p)


def inverse(m: MobiusTransformation) -> MobiusTransformation:
    # adjugate
    return MobiusTransformation(m.d, -m.b, -m.c, m.a, m.p)


def conjugate(m: MobiusTransformation, h: MobiusTransformation) -> MobiusTransformation:
    """``h^-1 m h``."""
    return compose(compose(inverse(h), m), h)


def element_order(m: MobiusTransformation) -> int:
    return _order(m.entries, m.p)


def theta(m: MobiusTransformation) -> int:
    """Conjugacy invariant ``trace^2 / det`` (independent of scaling)."""
    p = m.p
    return m.trace * m.trace * pow(m.det, -1, p) % p


def theta_square_step(r: int, p: int) -> int:
    """The value of theta on the square of an element with theta ``r``.

    Uses ``(r - 2)^2``, which follows from ``tr(M^2) = tr(M)^2 - 2 det(M)``.
    """
    return (r - 2) * (r - 2) % p


def in_psl(m: MobiusTransformation) -> bool:
    """True iff the determinant of a representative is a square."""
    return is_square(m.det, m.p)


def iter_pgl2(p: int) -> Iterator[MobiusTransformation]:
    """Every element of PGL(2, p), in lexicographic order of normalized entries."""
    check_modulus(p)
    for b in range(p):
        for c in range(p):
            for d in range(p):
                if (d - b * c) % p:
                    yield MobiusTransformation(1, b, c, d, p)
    for c in range(1, p):
        for d in range(p):
            yield MobiusTransformation(0, 1, c, d, p)


def iter_psl2(p: int) -> Iterator[MobiusTransformation]:
    return (m for m in iter_pgl2(p) if in_psl(m))


def iter_involutions(p: int, psl_only: bool = False) -> Iterator[MobiusTransformation]:
    """All involutions ``(a b; c -a)`` of PGL(2, p) (or of PSL(2, p))."""
    check_modulus(p)
    cands = [(0, 1, c, 0) for c in range(1, p)]
    cands += [(1, b, c, p - 1) for b in range(p) for c in range(p)
              if (-1 - b * c) % p]
    for a, b, c, d in cands:
        m = MobiusTransformation(a, b, c, d, p)
        if not psl_only or in_psl(m):
            yield m


def _linear_term(coef: int, const: int, p: int) -> str:
    coef, const = symmetric_residue(coef, p), symmetric_residue(const, p)
    parts = []
    if coef:
        parts.append({1: "z", -1: "-z"}.get(coef, f"{coef}z"))
    if const or not parts:
        parts.append(f"{const:+d}" if parts else str(const))
    return "".join(parts)


def format_formula(m: MobiusTransformation) -> str:
    """Human-readable form such as ``'z -> (z-1)/z'``."""
    p = m.p
    a, b, c, d = m.entries
    if b == 0:
        s = pow(d, -1, p)
        return "z -> " + _linear_term(a * s, c * s, p)
    s = pow(b, -1, p)
    num = _linear_term(a * s, c * s, p)
    den = _linear_term(1, d * s, p)
    if not (a * s % p and c * s % p):
        num_s = num
    else:
        num_s = f"({num})"
    den_s = den if d * s % p == 0 else f"({den})"
    return f"z -> {num_s}/{den_s}"
