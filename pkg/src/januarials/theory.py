"""Number theory predicting when associates of PSL(2, p) actions are januarials.

Covers the theta values forced by small element orders, the Pythagorean
identity for Klein four-groups, residue-class admissibility of primes,
counting 3-januarials, construction of generator triples ``(x, y, t)`` and
the prime-range survey.
"""
from __future__ import annotations

import itertools
from concurrent.futures import ProcessPoolExecutor
from dataclasses import dataclass
from typing import Optional

from .exceptions import InvalidInputError, InvariantViolation
from .mobius import (
    MobiusTransformation, _mul, _normalize, _order, check_modulus, compose,
    element_order, in_psl, inverse, is_square, iter_involutions, iter_pgl2,
    primes_between, theta,
)

THETA_BY_ORDER = {1: 4, 2: 0, 3: 1, 4: 2, 6: 3}

# k -> (modulus, admissible residues)
RESIDUE_CLASSES = {3: (20, (13, 17)), 4: (24, (17, 19)), 6: (42, (13, 19, 31))}

SUPPORTED_K = tuple(RESIDUE_CLASSES)


def theta_for_order(n: int, p: int) -> int:
    """Theta of any element of order ``n`` in PGL(2, p), for n in 1, 2, 3, 4, 6 or p."""
    check_modulus(p)
    if n == p:
        return 4
    try:
        return THETA_BY_ORDER[n] % p
    except KeyError:
        raise InvalidInputError(f"theta is not determined by order {n}") from None


def _check_klein(a, b, c):
    problems = []
    for name, m in zip("abc", (a, b, c)):
        if not m.is_involution():
            problems.append(f"{name} is not an involution")
        elif not in_psl(m):
            problems.append(f"{name} is not in PSL")
    if len({a, b, c}) != 3:
        problems.append("a, b, c are not distinct")
    elif compose(a, b) != c:
        problems.append("a*b != c")
    return problems


def pythagorean_sum(a: MobiusTransformation, b: MobiusTransformation,
                    c: MobiusTransformation, d: MobiusTransformation) -> int:
    """``theta(ad) + theta(bd) + theta(cd) mod p``.

    ``a, b, c`` must be the involutions of a Klein four-subgroup of PSL(2, p)
    and ``d`` an involution of PSL(2, p); the sum is then 4.
    """
    problems = _check_klein(a, b, c)
    if not d.is_involution():
        problems.append("d is not an involution")
    elif not in_psl(d):
        problems.append("d is not in PSL")
    if problems:
        raise InvalidInputError("; ".join(problems))
    return (theta(compose(a, d)) + theta(compose(b, d)) + theta(compose(c, d))) % a.p


@dataclass(frozen=True)
class AdmissibilityVerdict:
    p: int
    k: int
    modulus: int
    residue: int
    classes: tuple[int, ...]
    admissible: bool
    minus_one_square: bool

    @property
    def reason(self) -> str:
        rel = "in" if self.admissible else "not in"
        return (f"{self.p} = {self.residue} mod {self.modulus}, {rel} "
                f"{{{', '.join(map(str, self.classes))}}}")

    def to_dict(self) -> dict:
        return {"p": self.p, "k": self.k, "modulus": self.modulus,
                "residue": self.residue, "classes": list(self.classes),
                "admissible": self.admissible,
                "minus_one_square": self.minus_one_square,
                "reason": self.reason}


def admissible_prime(p: int, k: int) -> AdmissibilityVerdict:
    """Necessary residue condition for the associate construction to give a k-januarial."""
    check_modulus(p)
    if k not in RESIDUE_CLASSES:
        raise InvalidInputError(f"admissibility is only known for k in {SUPPORTED_K}")
    modulus, classes = RESIDUE_CLASSES[k]
    residue = p % modulus
    return AdmissibilityVerdict(p, k, modulus, residue, classes, residue in classes,
                                p % 4 == 1)


def totient(n: int) -> int:
    if n < 1:
        raise InvalidInputError("totient needs a positive integer")
    result, m, f = n, n, 2
    while f * f <= m:
        if m % f == 0:
            while m % f == 0:
                m //= f
            result -= result // f
        f += 1
    if m > 1:
        result -= result // m
    return result


def count_3januarials(p: int) -> int:
    """Number of distinct 3-januarials from PSL(2, p): ``phi((p+1)/2) / 2``."""
    check_modulus(p)
    return totient((p + 1) // 2) // 2


BRUTE_FORCE_LIMIT = 31


def conjugacy_classes(p: int, order: Optional[int] = None,
                      limit: int = BRUTE_FORCE_LIMIT) -> list[frozenset]:
    """Conjugacy classes of PGL(2, p) by direct enumeration.

    Each class is a frozenset of normalized entry tuples. With ``order``, only
    classes of elements of that order are returned.
    """
    check_modulus(p)
    if p > limit:
        raise InvalidInputError(f"brute force capped at p <= {limit}")
    group = [m.entries for m in iter_pgl2(p)]
    inverses = [_normalize((d, -b % p, -c % p, a), p) for a, b, c, d in group]
    seen = set()
    classes = []
    for g in group:
        if g in seen or (order is not None and _order(g, p) != order):
            continue
        cls = frozenset(_normalize(_mul(_mul(hi, g, p), h, p), p)
                        for h, hi in zip(group, inverses))
        seen |= cls
        classes.append(cls)
    return classes


def count_halforder_classes(p: int, brute_force: bool = False) -> int:
    """Number of PGL(2, p) classes of elements of order ``(p+1)/2``."""
    check_modulus(p)
    if brute_force:
        return len(conjugacy_classes(p, order=(p + 1) // 2))
    return totient((p + 1) // 2) // 2


def necessities_check(g: MobiusTransformation) -> tuple[bool, bool]:
    """``(is theta(g) a square, is theta(g) - 4 a square)`` for g of order (p+1)/2.

    For such elements the answer is always ``(True, False)``.
    """
    p = g.p
    n = element_order(g)
    if n != (p + 1) // 2:
        raise InvalidInputError(f"element has order {n}, not {(p + 1) // 2}")
    r = theta(g)
    return is_square(r, p), is_square(r - 4, p)


# -- generator triples ------------------------------------------------------

BUILTIN_K3 = "builtin_k3"
BUILTIN_K4_43 = "builtin_k4_43"
BUILTIN_K6_31 = "builtin_k6_31"
SEARCHED = "searched"


@dataclass(frozen=True)
class StandardTriple:
    """Involution ``x``, element ``y`` of order ``k`` and involution ``t``.

    ``t`` commutes with ``x`` and inverts ``y``; it is ``None`` only for a
    triple returned by :func:`find_triple` with ``require_t=False`` when no
    invertible ``t`` exists.
    """

    p: int
    k: int
    x: MobiusTransformation
    y: MobiusTransformation
    t: Optional[MobiusTransformation]
    source: str

    @property
    def xy(self) -> MobiusTransformation:
        return compose(self.x, self.y)

    @property
    def xt(self) -> MobiusTransformation:
        return compose(self.x, self.t)

    @property
    def xty(self) -> MobiusTransformation:
        return compose(self.xt, self.y)

    @property
    def t_invertible(self) -> bool:
        return self.t is not None

    @property
    def in_psl(self) -> bool:
        gens = [self.x, self.y] + ([self.t] if self.t is not None else [])
        return all(in_psl(m) for m in gens)

    @property
    def group(self) -> str:
        return "PSL" if self.in_psl else "PGL"

    def check(self) -> None:
        """Raise :class:`InvariantViolation` unless the defining relations hold."""
        x, y, t = self.x, self.y, self.t
        if not x.is_involution():
            raise InvariantViolation("x is not an involution")
        if element_order(y) != self.k:
            raise InvariantViolation(f"y has order {element_order(y)}, not {self.k}")
        if t is None:
            return
        if not t.is_involution():
            raise InvariantViolation("t is not an involution")
        if compose(compose(inverse(t), x), t) != x:
            raise InvariantViolation("t does not centralize x")
        if compose(compose(inverse(t), y), t) != inverse(y):
            raise InvariantViolation("t does not invert y")


def inverting_involutions(x: MobiusTransformation,
                          y: MobiusTransformation) -> list[MobiusTransformation]:
    """All involutions ``t != x`` with ``t x t = x`` and ``t y t = y^-1``.

    For trace-zero ``T`` these are the linear conditions ``tr(TX) = 0`` and
    ``tr(TY) = 0``, so generically the answer is a single involution.
    """
    p = x.p
    a, b, c, _ = x.entries
    y1, y2, y3, y4 = y.entries
    r1 = (2 * a % p, c, b)
    r2 = ((y1 - y4) % p, y3, y2)
    n = ((r1[1] * r2[2] - r1[2] * r2[1]) % p,
         (r1[2] * r2[0] - r1[0] * r2[2]) % p,
         (r1[0] * r2[1] - r1[1] * r2[0]) % p)
    if any(n):
        al, be, ga = n
        if (-al * al - be * ga) % p == 0:
            return []
        cands = [MobiusTransformation(al, be, ga, -al, p)]
    else:
        cands = list(iter_involutions(p))
    y_inv = inverse(y)
    return sorted(
        (t for t in cands
         if t != x and compose(compose(t, x), t) == x
         and compose(compose(t, y), t) == y_inv),
        key=lambda m: m.entries)


def _builtin(p, k):
    f = MobiusTransformation.from_formula
    if k == 3:
        return (f(p, 0, -1, 1, 0), f(p, 1, -1, 1, 0), f(p, 0, 1, 1, 0), BUILTIN_K3)
    if (p, k) == (43, 4):
        return (f(p, 0, 21, 1, 0), f(p, 2, -1, 2, 0), f(p, 0, 22, 1, 0), BUILTIN_K4_43)
    if (p, k) == (31, 6):
        return (f(p, 0, 10, 1, 0), f(p, 1, 10, 1, 0), f(p, 0, 1, 3, 0), BUILTIN_K6_31)
    return None


def _involution_candidates(p, target):
    """Involutions ``x`` with ``theta(x (z -> z+1)) == target``, lexicographically.

    For ``x = (a b; c -a)`` the product with ``(1 0; 1 1)`` has trace ``b`` and
    determinant ``det x``, so ``b^2 = target * (-a^2 - bc)`` fixes ``c``.
    """
    if target % p == 0:
        return
    t_inv = pow(target, -1, p)
    yield (0, 1, -t_inv % p, 0)
    for b in range(1, p):
        c = (-b * b * t_inv - 1) * pow(b, -1, p) % p
        yield (1, b, c, p - 1)


def search_triple(p: int, k: int, psl_only: bool = False) -> Optional[StandardTriple]:
    """Lexicographically least ``(x, y, t)`` with ``xy: z -> z+1`` and ``y`` of order ``k``.

    Involutions ``x`` are scanned in order of their normalized entries;
    ``y = x^-1 (z -> z+1)`` and ``t`` is solved for directly.
    """
    check_modulus(p)
    if k not in THETA_BY_ORDER or k < 3:
        raise InvalidInputError(f"unsupported k={k}; expected one of {SUPPORTED_K}")
    parabolic = MobiusTransformation(1, 0, 1, 1, p)
    target = THETA_BY_ORDER[k] % p
    for raw in _involution_candidates(p, target):
        x = MobiusTransformation(*raw, p)
        if psl_only and not in_psl(x):
            continue
        y = compose(x, parabolic)
        if element_order(y) != k:
            continue
        for t in inverting_involutions(x, y):
            if psl_only and not in_psl(t):
                continue
            return StandardTriple(p, k, x, y, t, SEARCHED)
    return None


def standard_triple(p: int, k: int, psl_only: bool = False) -> Optional[StandardTriple]:
    """The generator triple used for the survey of k-januarials from PSL(2, p).

    ``k = 3`` uses the fixed classical generators and (43, 4), (31, 6) use
    fixed generators too (they coincide with what the search finds);
    everything else is found by :func:`search_triple`. Returns ``None`` when no triple exists
    (for instance when ``psl_only`` rules out every candidate).
    """
    check_modulus(p)
    if k not in SUPPORTED_K:
        raise InvalidInputError(f"unsupported k={k}; expected one of {SUPPORTED_K}")
    builtin = _builtin(p, k)
    if builtin is not None:
        triple = StandardTriple(p, k, *builtin)
        triple.check()
        if psl_only and not triple.in_psl:
            return None
        return triple
    triple = search_triple(p, k, psl_only=psl_only)
    if triple is not None:
        triple.check()
    return triple


_LEMMA_Y = (-1, 1, -1, 0)


def find_triple(p: int, target_order_xy: int, k: int = 3, require_t: bool = True,
                theta_value: Optional[int] = None) -> StandardTriple:
    """Triple ``(x, y, xy)`` in PSL(2, p) with ``y`` of order 3 and ``xy`` of a given order.

    ``y`` is fixed as the matrix ``(-1 1; -1 0)`` and ``x = (a b; c -a)`` with
    ``a^2 + bc = -1``; the involution ``t`` comes from the matrix
    ``(-(b+c) 2a+b; 2a-c b+c)``, which is singular exactly when ``xy`` has
    order 6. With ``theta_value`` the class of ``xy`` is pinned as well.
    """
    check_modulus(p)
    if k != 3:
        raise InvalidInputError("find_triple only handles k = 3")
    if target_order_xy in (1, 2, p):
        raise InvalidInputError(f"target order {target_order_xy} is excluded (1, 2 and p)")
    for x, xy in _lemma_solutions(p):
        if element_order(xy) != target_order_xy:
            continue
        if theta_value is not None and theta(xy) != theta_value % p:
            continue
        a, b, c, _ = x.entries
        y = MobiusTransformation(*_LEMMA_Y, p)
        t_raw = (-(b + c), 2 * a + b, 2 * a - c, b + c)
        if (t_raw[0] * t_raw[3] - t_raw[1] * t_raw[2]) % p == 0:
            if require_t:
                raise InvalidInputError(
                    f"t is singular for xy of order {target_order_xy}")
            triple = StandardTriple(p, 3, x, y, None, SEARCHED)
        else:
            triple = StandardTriple(p, 3, x, y, MobiusTransformation(*t_raw, p), SEARCHED)
        triple.check()
        return triple
    raise InvalidInputError(f"no triple with xy of order {target_order_xy} mod {p}")


def _lemma_solutions(p):
    """Pairs ``(x, xy)`` for every trace-zero ``X`` with ``det X = 1`` (as matrices)."""
    y = MobiusTransformation(*_LEMMA_Y, p)
    for a, b in itertools.product(range(p), repeat=2):
        if b:
            cs = [(-1 - a * a) * pow(b, -1, p) % p]
        elif (a * a + 1) % p == 0:
            cs = range(p)
        else:
            cs = []
        for c in cs:
            x = MobiusTransformation(a, b, c, -a, p)
            yield x, compose(x, y)


def lemma_triples(p: int, target_order_xy: int, theta_value: int) -> list[StandardTriple]:
    """Every triple of :func:`find_triple`'s form with ``xy`` in the given class."""
    y = MobiusTransformation(*_LEMMA_Y, p)
    return [StandardTriple(p, 3, x, y, None, SEARCHED)
            for x, xy in _lemma_solutions(p)
            if theta(xy) == theta_value % p and element_order(xy) == target_order_xy]


def triples_conjugate(s: StandardTriple, u: StandardTriple) -> bool:
    """Brute force: is there ``h`` in PGL(2, p) with ``s^h == u`` on x and y?"""
    for h in iter_pgl2(s.p):
        hi = inverse(h)
        if (compose(compose(hi, s.x), h) == u.x
                and compose(compose(hi, s.y), h) == u.y):
            return True
    return False


# -- survey over primes -----------------------------------------------------

NO_TRIPLE = "no_triple"


def analyze_prime(p: int, k: int, allow_pgl: bool = False):
    """Run the associate construction for one prime and report the outcome."""
    from .action import associate, build_projective_action
    from .report import build_report, no_construction_report

    verdict = admissible_prime(p, k)
    triple = standard_triple(p, k, psl_only=not allow_pgl)
    if triple is None:
        reason = "no triple in PSL(2,p)" if not allow_pgl else "no triple found"
        return no_construction_report(p, k, verdict, reason)
    base = build_projective_action(p, triple.x, triple.y)
    action = associate(base, triple.t)
    return build_report(action, admissibility=verdict, triple=triple,
                        k_requested=k)


def _analyze_args(args):
    return analyze_prime(*args)


def search(p_min: int, p_max: int, k: int, allow_pgl: bool = False,
           jobs: int = 1) -> list:
    """One report per prime in ``[p_min, p_max]`` (primes >= 5), ordered by ``p``."""
    if p_min > p_max:
        raise InvalidInputError(f"empty range [{p_min}, {p_max}]")
    if k not in SUPPORTED_K:
        raise InvalidInputError(f"unsupported k={k}; expected one of {SUPPORTED_K}")
    tasks = [(p, k, allow_pgl) for p in primes_between(max(p_min, 5), p_max)]
    if jobs > 1 and len(tasks) > 1:
        with ProcessPoolExecutor(max_workers=jobs) as pool:
            return list(pool.map(_analyze_args, tasks))
    return [_analyze_args(t) for t in tasks]
