"""Wreath-product quandles Q(v) inside Z_v wr S_n.

An element is a monomial matrix: row r has its single non-zero entry x^e_r
in column cols[r]. The permutation it represents is the inverse of the
row-to-column map, so matrix products compose permutations as functions.
Q(v) keeps the matrices over a base set Q of permutations whose unique
diagonal entry is 1, with a*b = b^-1 a b.
"""
import itertools
import logging
from dataclasses import dataclass
from typing import Dict, List, Sequence, Tuple, Union

from sympy.combinatorics import Permutation

from qf.core.errors import EvenN
from qf.quandles.families import QS4_CYCLES, conjugation_quandle, parse_cycles
from qf.quandles.quandle import FiniteQuandle, QuandleHom, validate_quandle

logger = logging.getLogger(__name__)

R3_LETTERS = "abc"


@dataclass(frozen=True)
class MonomialMatrix:
    cols: Tuple[int, ...]
    exps: Tuple[int, ...]
    v: int

    @classmethod
    def from_permutation(cls, perm: Permutation, exps: Sequence[int], v: int) -> "MonomialMatrix":
        inv = (~perm).array_form
        return cls(tuple(inv), tuple(e % v for e in exps), v)

    @classmethod
    def identity(cls, n: int, v: int) -> "MonomialMatrix":
        return cls(tuple(range(n)), (0,) * n, v)

    @property
    def size(self) -> int:
        return len(self.cols)

    def __mul__(self, other: "MonomialMatrix") -> "MonomialMatrix":
        if other.size != self.size or other.v != self.v:
            raise ValueError("monomial matrices must share size and exponent modulus")
        cols = tuple(other.cols[c] for c in self.cols)
        exps = tuple((self.exps[r] + other.exps[c]) % self.v for r, c in enumerate(self.cols))
        return MonomialMatrix(cols, exps, self.v)

    def inverse(self) -> "MonomialMatrix":
        cols = [0] * self.size
        exps = [0] * self.size
        for r, c in enumerate(self.cols):
            cols[c] = r
            exps[c] = (-self.exps[r]) % self.v
        return MonomialMatrix(tuple(cols), tuple(exps), self.v)

    def conjugate_by(self, b: "MonomialMatrix") -> "MonomialMatrix":
        return b.inverse() * self * b

    def permutation(self) -> Permutation:
        return ~Permutation(list(self.cols))

    def diagonal_slots(self) -> List[int]:
        return [r for r, c in enumerate(self.cols) if r == c]

    def rows(self) -> List[List[str]]:
        out = [["0"] * self.size for _ in range(self.size)]
        for r, c in enumerate(self.cols):
            out[r][c] = f"x^{self.exps[r]}"
        return out


def reflection(n: int, i: int) -> Permutation:
    """sigma_i on vertices 1..n of the n-gon: k -> 2i - k mod n, fixing i."""
    return Permutation([((2 * i - (k + 1)) % n or n) - 1 for k in range(n)])


@dataclass(frozen=True, eq=False)
class WreathQuandle:
    base: FiniteQuandle
    v: int
    quandle: FiniteQuandle
    projection: QuandleHom

    @property
    def elements(self) -> Tuple[MonomialMatrix, ...]:
        return self.quandle.carrier

    def fiber_size(self) -> int:
        return len(self.quandle) // len(self.base)


def _label_r3(letter_slot: int, exps: Sequence[int]) -> str:
    rest = [str(e) for k, e in enumerate(exps) if k != letter_slot]
    return f"{R3_LETTERS[letter_slot]}_{{{','.join(rest)}}}"


def _label_reflection(slot: int, exps: Sequence[int]) -> str:
    parts = ["*" if k == slot else str(e) for k, e in enumerate(exps)]
    return f"s{slot + 1}({','.join(parts)})"


def _label_bracket(slot: int, exps: Sequence[int]) -> str:
    parts = ["*" if k == slot else str(e) for k, e in enumerate(exps)]
    return f"[{','.join(parts)}]"


def _base_for(Q: Union[str, Tuple[str, int]]):
    if isinstance(Q, str):
        key = Q.strip().lower()
        if key == "qs4":
            return "qs4", 4, [parse_cycles(c, 4) for c in QS4_CYCLES], "QS_4"
        if key.startswith("r") and key[1:].isdigit():
            Q = ("dihedral", int(key[1:]))
        else:
            raise ValueError(f"unknown wreath base {Q!r}; use r<n> or qs4")
    kind, n = Q
    if kind != "dihedral":
        raise ValueError("wreath bases are ('dihedral', n) or 'qs4'")
    if n < 3:
        raise ValueError("n must be >= 3")
    if n % 2 == 0:
        raise EvenN(f"R_{n} wreath quandles need n odd, got {n}", witness=(n,))
    return "dihedral", n, [reflection(n, i) for i in range(1, n + 1)], f"R_{n}"


def wreath_quandle(Q: Union[str, Tuple[str, int]], v: int) -> WreathQuandle:
    if v < 1:
        raise ValueError("v must be >= 1")
    kind, n, perms, base_name = _base_for(Q)
    base = conjugation_quandle(perms, degree=n, name=base_name)

    if kind == "qs4":
        labeler = _label_bracket
    elif n == 3:
        labeler = _label_r3
    else:
        labeler = _label_reflection

    elements: List[MonomialMatrix] = []
    labels: List[str] = []
    owner: List[int] = []
    for b_idx, perm in enumerate(base.carrier):
        fixed = [k for k in range(n) if perm(k) == k]
        if len(fixed) != 1:
            raise ValueError(f"{base.labels[b_idx]} must fix exactly one point")
        slot = fixed[0]
        free = [k for k in range(n) if k != slot]
        for values in itertools.product(range(v), repeat=len(free)):
            exps = [0] * n
            for k, e in zip(free, values):
                exps[k] = e
            elements.append(MonomialMatrix.from_permutation(perm, exps, v))
            labels.append(labeler(slot, exps))
            owner.append(b_idx)

    pos: Dict[MonomialMatrix, int] = {m: i for i, m in enumerate(elements)}
    size = len(elements)
    table = [[0] * size for _ in range(size)]
    for j, b in enumerate(elements):
        b_inv = b.inverse()
        for i, a in enumerate(elements):
            table[i][j] = pos[b_inv * a * b]
    name = f"{base_name}({v})"
    total = validate_quandle(table, labels, name, tuple(elements))
    proj = QuandleHom(total, base, tuple(owner))
    logger.info("wreath quandle %s: %d elements over %d", name, size, len(base))
    return WreathQuandle(base, v, total, proj)
