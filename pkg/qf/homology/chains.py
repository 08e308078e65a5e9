import itertools
from collections import defaultdict
from dataclasses import dataclass
from typing import Dict, Iterable, List, Literal, Optional, Tuple

from qf.quandles.quandle import FiniteQuandle

Theory = Literal["rack", "degenerate", "quandle"]
THEORIES = ("rack", "degenerate", "quandle")

Simplex = Tuple[int, ...]


def is_degenerate(t: Simplex) -> bool:
    return any(t[i] == t[i + 1] for i in range(len(t) - 1))


def chain_basis(n: int, size: int, theory: Theory = "quandle") -> List[Simplex]:
    """Generators of C_n in lexicographic order of element indices."""
    if theory not in THEORIES:
        raise ValueError("theory must be 'rack', 'degenerate' or 'quandle'")
    if n < 0:
        return []
    tuples = itertools.product(range(size), repeat=n)
    if theory == "rack":
        return list(tuples)
    if theory == "degenerate":
        return [t for t in tuples if is_degenerate(t)]
    return [t for t in tuples if not is_degenerate(t)]


@dataclass(frozen=True)
class Chain:
    """Finitely supported formal sum of n-tuples of element indices."""

    degree: int
    terms: Tuple[Tuple[Simplex, int], ...] = ()
    modulus: Optional[int] = None

    @classmethod
    def from_dict(cls, degree: int, d: Dict[Simplex, int], modulus: Optional[int] = None) -> "Chain":
        items = []
        for t, c in d.items():
            if len(t) != degree:
                raise ValueError(f"tuple {t} does not have length {degree}")
            c = c % modulus if modulus else c
            if c:
                items.append((tuple(t), c))
        return cls(degree, tuple(sorted(items)), modulus)

    @classmethod
    def generator(cls, t: Iterable[int], modulus: Optional[int] = None) -> "Chain":
        t = tuple(t)
        return cls.from_dict(len(t), {t: 1}, modulus)

    def as_dict(self) -> Dict[Simplex, int]:
        return dict(self.terms)

    def is_zero(self) -> bool:
        return not self.terms

    def __add__(self, other: "Chain") -> "Chain":
        if other.degree != self.degree:
            raise ValueError("chains must share a degree")
        d = defaultdict(int, self.as_dict())
        for t, c in other.terms:
            d[t] += c
        return Chain.from_dict(self.degree, d, self.modulus)

    def __neg__(self) -> "Chain":
        return Chain.from_dict(self.degree, {t: -c for t, c in self.terms}, self.modulus)

    def __sub__(self, other: "Chain") -> "Chain":
        return self + (-other)

    def quotient(self) -> "Chain":
        """Image in C^Q: degenerate tuples dropped."""
        return Chain(self.degree, tuple((t, c) for t, c in self.terms if not is_degenerate(t)), self.modulus)

    def degenerate_part(self) -> "Chain":
        return Chain(self.degree, tuple((t, c) for t, c in self.terms if is_degenerate(t)), self.modulus)

    def labeled(self, X: FiniteQuandle) -> Dict[Tuple[str, ...], int]:
        return {tuple(X.labels[i] for i in t): c for t, c in self.terms}


def boundary_of_tuple(X: FiniteQuandle, t: Simplex) -> Dict[Simplex, int]:
    n = len(t)
    out: Dict[Simplex, int] = defaultdict(int)
    if n <= 1:
        return out
    tab = X.table
    for i in range(1, n):
        sign = 1 if (i + 1) % 2 == 0 else -1
        face = t[:i] + t[i + 1:]
        acted = tuple(int(tab[t[k], t[i]]) for k in range(i)) + t[i + 1:]
        out[face] += sign
        out[acted] -= sign
    return out


def boundary(n: int, c: Chain, X: FiniteQuandle) -> Chain:
    """d_n(x_1..x_n) = sum_{i=2}^{n} (-1)^i [(.., x^_i, ..) - (x_1*x_i, .., x_{i-1}*x_i, x_{i+1}, ..)]."""
    if c.degree != n:
        raise ValueError(f"chain has degree {c.degree}, not {n}")
    if n <= 1:
        return Chain(max(n - 1, 0), (), c.modulus)
    acc: Dict[Simplex, int] = defaultdict(int)
    for t, coeff in c.terms:
        for face, s in boundary_of_tuple(X, t).items():
            acc[face] += s * coeff
    return Chain.from_dict(n - 1, acc, c.modulus)
