from collections import Counter
from dataclasses import dataclass
from typing import Dict, Iterable, Tuple

from pydantic import BaseModel


class GroupRingModel(BaseModel):
    q: int
    coeffs: Dict[str, int]


@dataclass(frozen=True)
class GroupRingValue:
    """Element sum_n c_n t^n of Z[Z_q], t the generator of Z_q."""

    q: int
    coeffs: Tuple[int, ...]

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be >= 1")
        if len(self.coeffs) != self.q:
            raise ValueError("coeffs must have exactly q entries")
        if any(c < 0 for c in self.coeffs):
            raise ValueError("multiplicities must be >= 0")

    @classmethod
    def zero(cls, q: int) -> "GroupRingValue":
        return cls(q, (0,) * q)

    @classmethod
    def from_exponents(cls, q: int, exponents: Iterable[int]) -> "GroupRingValue":
        counts = Counter(e % q for e in exponents)
        return cls(q, tuple(counts.get(n, 0) for n in range(q)))

    @classmethod
    def from_counts(cls, q: int, counts: Dict[int, int]) -> "GroupRingValue":
        acc = [0] * q
        for n, c in counts.items():
            acc[n % q] += c
        return cls(q, tuple(acc))

    def __add__(self, other: "GroupRingValue") -> "GroupRingValue":
        self._check(other)
        return GroupRingValue(self.q, tuple(a + b for a, b in zip(self.coeffs, other.coeffs)))

    def __mul__(self, other: "GroupRingValue") -> "GroupRingValue":
        self._check(other)
        q = self.q
        acc = [0] * q
        for i, a in enumerate(self.coeffs):
            if a:
                for j, b in enumerate(other.coeffs):
                    acc[(i + j) % q] += a * b
        return GroupRingValue(q, tuple(acc))

    def _check(self, other: "GroupRingValue") -> None:
        if other.q != self.q:
            raise ValueError("group ring values must share q")

    def total(self) -> int:
        return sum(self.coeffs)

    def is_trivial(self) -> bool:
        """All mass on t^0."""
        return all(c == 0 for c in self.coeffs[1:])

    def to_model(self) -> GroupRingModel:
        return GroupRingModel(q=self.q, coeffs={str(n): c for n, c in enumerate(self.coeffs)})

    @classmethod
    def from_model(cls, model: GroupRingModel) -> "GroupRingValue":
        return cls.from_counts(model.q, {int(k): v for k, v in model.coeffs.items()})

    def __str__(self) -> str:
        parts = []
        for n, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if n == 0:
                parts.append(str(c))
            else:
                mono = "t" if n == 1 else f"t^{n}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) if parts else "0"
