"""Deterministic JSON reports of an analyzed action."""
from __future__ import annotations

import json
from dataclasses import asdict, dataclass, fields
from typing import Optional

from .action import (
    PROJECTIVE_LINE, TriangleAction, classify, coset_map,
)
from .mobius import MobiusTransformation, element_order, in_psl
from .perm import format_cycles
from .surface import analyze_surface

SCHEMA_KEYS = ("input", "orders", "verdict", "genus", "euler_characteristic",
               "type", "counts", "admissibility")

NO_CONSTRUCTION = "no_construction"


@dataclass(frozen=True)
class JanuarialReport:
    """One analysis result; every field is plain JSON data."""

    input: dict
    orders: dict
    verdict: dict
    genus: Optional[dict]
    euler_characteristic: Optional[int]
    type: Optional[dict]
    counts: Optional[dict]
    admissibility: Optional[dict]

    def to_dict(self) -> dict:
        return asdict(self)

    def to_json(self, indent: Optional[int] = 2) -> str:
        return json.dumps(self.to_dict(), sort_keys=True, indent=indent,
                          ensure_ascii=False)

    @classmethod
    def from_dict(cls, data: dict) -> JanuarialReport:
        missing = set(SCHEMA_KEYS) - set(data)
        if missing:
            raise ValueError(f"report is missing keys {sorted(missing)}")
        return cls(**{f.name: data[f.name] for f in fields(cls)})

    @classmethod
    def from_json(cls, text: str) -> JanuarialReport:
        return cls.from_dict(json.loads(text))

    # convenience accessors
    @property
    def p(self) -> Optional[int]:
        return self.input.get("p")

    @property
    def verdict_class(self) -> str:
        return self.verdict["class"]

    @property
    def is_januarial(self) -> bool:
        return self.verdict_class == "januarial"

    @property
    def genus_value(self) -> Optional[int]:
        return None if self.genus is None else self.genus["euler"]

    @property
    def type_display(self) -> Optional[str]:
        return None if self.type is None else self.type["display"]


def mobius_dict(m: MobiusTransformation) -> dict:
    return {"formula": m.formula(), "matrix": list(m.entries), "in_psl": in_psl(m),
            "order": element_order(m)}


def _generators(action):
    gens = {name: mobius_dict(m) for name, m in sorted(action.generators.items())}
    if not gens:
        labels = action.space.labels if action.space.kind != "explicit" else None
        gens = {"x": {"cycles": format_cycles(action.x, labels)},
                "y": {"cycles": format_cycles(action.y, labels)}}
    return gens


def build_report(action: TriangleAction, admissibility=None, triple=None,
                 k_requested: Optional[int] = None,
                 preset: Optional[str] = None) -> JanuarialReport:
    """Full report for ``action``; ``admissibility`` is an AdmissibilityVerdict."""
    space = action.space
    inp = {
        "space": space.kind,
        "degree": space.size,
        "p": space.p,
        "k_requested": k_requested,
        "preset": preset,
        "associate": action.base is not None,
        "generators": _generators(action),
    }
    if triple is not None:
        inp["triple_source"] = triple.source
        inp["group"] = triple.group
    cm = coset_map(action)
    mc = classify(cm)
    orders = {"k": action.k, "l": action.l, "xy_orbit_sizes": list(mc.orbit_sizes)}
    if action.base is not None:
        orders["base_l"] = action.base.l
    if space.kind == PROJECTIVE_LINE:
        orders["expected_l"] = (space.p + 1) // 2
    verdict = {"class": mc.verdict, "m": mc.m, "m_nontrivial": mc.nontrivial_faces}
    surf = analyze_surface(cm)
    counts = {"x_pairs": len(cm.x_pairs), "x_fixed": len(cm.x_fixed),
              "y_orbits": len(cm.y_orbits), "xy_orbits": len(cm.xy_orbits)}
    type_ = None
    if surf.type is not None:
        st = surf.type
        type_ = {"kind": st.kind, "display": str(st),
                 "faces": [list(pair) for pair in st.pairs]}
        counts["blue_edges"] = surf.n_blue
        counts["faces"] = [asdict(f) for f in surf.faces]
    return JanuarialReport(
        input=inp,
        orders=orders,
        verdict=verdict,
        genus={"euler": surf.genus_euler, "lemma": surf.genus_lemma},
        euler_characteristic=surf.euler_char,
        type=type_,
        counts=counts,
        admissibility=None if admissibility is None else admissibility.to_dict(),
    )


def no_construction_report(p: int, k: int, admissibility, reason: str) -> JanuarialReport:
    """Placeholder row for a prime where no generator triple exists."""
    return JanuarialReport(
        input={"space": PROJECTIVE_LINE, "degree": p + 1, "p": p, "k_requested": k,
               "preset": None, "associate": True, "generators": {}},
        orders={"k": k, "l": None, "expected_l": (p + 1) // 2},
        verdict={"class": NO_CONSTRUCTION, "reason": reason},
        genus=None,
        euler_characteristic=None,
        type=None,
        counts=None,
        admissibility=None if admissibility is None else admissibility.to_dict(),
    )
