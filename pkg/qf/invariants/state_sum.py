"""Cocycle state sums: Phi, the component vector and the family of vectors.

Exponents live in Z_q and are written additively; t^n in the output is
the exponent n.
"""
import logging
from collections import Counter
from dataclasses import dataclass
from typing import Dict, List, Optional, Sequence, Tuple

from pydantic import BaseModel

from qf.algebra.group_ring import GroupRingModel, GroupRingValue
from qf.core.errors import NotACocycle
from qf.extensions.abelian import cocycle_from_section
from qf.homology.cocycles import Cochain, is_2cocycle
from qf.invariants.colorings import Coloring, enumerate_colorings
from qf.links.diagram import Crossing, LinkDiagram, component_crossing_sets
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)

Vector = Tuple[int, ...]


class FamilyEntry(BaseModel):
    vector: List[int]
    multiplicity: int


class InvariantModel(BaseModel):
    link: Optional[str] = None
    quandle: Optional[str] = None
    q: int
    colorings: int
    scalar: GroupRingModel
    vector: List[GroupRingModel]
    family: List[FamilyEntry]


def weight(c: Crossing, C: Coloring, phi: Cochain) -> int:
    """eps * phi(C(alpha), C(over)) in Z_q."""
    x = C.color(c.alpha)
    y = C.color(c.over)
    return (c.sign * int(phi.values[x, y])) % phi.q


def contribution(C: Coloring, phi: Cochain) -> Vector:
    """Per-component sums of the weights of the crossings under each component."""
    out = []
    for group in component_crossing_sets(C.diagram):
        out.append(sum(weight(c, C, phi) for c in group) % phi.q)
    return tuple(out)


def _format_vector(v: Vector, q: int) -> str:
    parts = []
    for e in v:
        e %= q
        parts.append("1" if e == 0 else ("t" if e == 1 else f"t^{e}"))
    return "(" + ", ".join(parts) + ")"


@dataclass(frozen=True)
class InvariantValue:
    """The multiset of per-coloring contribution vectors, sorted."""

    q: int
    n_components: int
    vectors: Tuple[Vector, ...]
    link: Optional[str] = None
    quandle: Optional[str] = None

    @property
    def colorings(self) -> int:
        return len(self.vectors)

    def scalar(self) -> GroupRingValue:
        return GroupRingValue.from_exponents(self.q, (sum(v) for v in self.vectors))

    def vector(self) -> Tuple[GroupRingValue, ...]:
        return tuple(
            GroupRingValue.from_exponents(self.q, (v[i] for v in self.vectors)) for i in range(self.n_components)
        )

    def lopes(self) -> Tuple[Tuple[int, ...], ...]:
        """Per-component multisets of exponents, alignment across components forgotten."""
        return tuple(tuple(sorted(v[i] for v in self.vectors)) for i in range(self.n_components))

    def family(self) -> Tuple[Tuple[Vector, int], ...]:
        counts: Dict[Vector, int] = Counter(self.vectors)
        return tuple(sorted(counts.items()))

    def nontrivial(self) -> bool:
        return any(any(v) for v in self.vectors)

    def format_scalar(self) -> str:
        return str(self.scalar())

    def format_vector(self) -> str:
        return "(" + ", ".join(str(g) for g in self.vector()) + ")"

    def format_family(self) -> str:
        return "{" + ", ".join(f"{m} x {_format_vector(v, self.q)}" for v, m in self.family()) + "}"

    def to_model(self) -> InvariantModel:
        return InvariantModel(
            link=self.link,
            quandle=self.quandle,
            q=self.q,
            colorings=self.colorings,
            scalar=self.scalar().to_model(),
            vector=[g.to_model() for g in self.vector()],
            family=[FamilyEntry(vector=list(v), multiplicity=m) for v, m in self.family()],
        )


def psi(
    D: LinkDiagram,
    X: FiniteQuandle,
    phi: Cochain,
    *,
    colorings: Optional[Sequence[Coloring]] = None,
    max_enum: Optional[int] = None,
    threads: Optional[int] = None,
) -> InvariantValue:
    if phi.degree != 2:
        raise ValueError("the state sum needs a 2-cochain")
    if len(phi.quandle) != len(X):
        raise ValueError(f"cocycle lives on {phi.quandle.name}, not on {X.name}")
    res = is_2cocycle(phi, X, phi.q)
    if not res:
        raise NotACocycle(f"phi is not a 2-cocycle: {res.reason}", witness=res.witness)
    if colorings is None:
        colorings = enumerate_colorings(D, X, max_enum=max_enum, threads=threads)
    vectors = tuple(sorted(contribution(C, phi) for C in colorings))
    value = InvariantValue(phi.q, D.n_components, vectors, D.name, X.name)
    logger.info("state sum of %s over %s with Z_%d: %d colorings, %d distinct vectors",
                D.name, X.name, phi.q, len(vectors), len(value.family()))
    return value


def smallest_nontrivial_level(
    D: LinkDiagram, family: str, q: int, max_level: int, *, max_enum: Optional[int] = None
) -> Optional[int]:
    """Smallest m <= max_level whose section cocycle gives a non-zero contribution vector."""
    for m in range(1, max_level + 1):
        phi = cocycle_from_section(family, q, m)
        value = psi(D, phi.quandle, phi, max_enum=max_enum)
        if value.nontrivial():
            logger.info("%s: first non-trivial %s level for q=%d is %d", D.name, family, q, m)
            return m
    return None
