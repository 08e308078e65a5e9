import logging
from dataclasses import dataclass
from functools import cached_property
from typing import Any, Callable, Dict, Optional, Sequence, Tuple

import numpy as np

from qf.core.config import settings
from qf.core.errors import (
    AxiomIIIViolation,
    AxiomIIViolation,
    AxiomIViolation,
    CheckResult,
    NotAHomomorphism,
    SizeLimitExceeded,
)

logger = logging.getLogger(__name__)

# (a*b)*c vs (a*c)*(b*c) is checked in slabs of this many table cells
_CHUNK_CELLS = 1 << 22


def _readonly(a: np.ndarray) -> np.ndarray:
    a = np.ascontiguousarray(a, dtype=np.int64)
    a.setflags(write=False)
    return a


@dataclass(frozen=True, eq=False)
class FiniteQuandle:
    """A validated finite quandle.

    table[i, j] is the index of labels[i] * labels[j]; inv_table[i, j] is the
    unique c with c * j = i. Build through validate_quandle.
    """

    labels: Tuple[str, ...]
    table: np.ndarray
    inv_table: np.ndarray
    name: Optional[str] = None
    carrier: Any = None

    def __len__(self) -> int:
        return len(self.labels)

    def __eq__(self, other) -> bool:
        if not isinstance(other, FiniteQuandle):
            return NotImplemented
        return self.labels == other.labels and np.array_equal(self.table, other.table)

    def __hash__(self) -> int:
        return hash((self.labels, self.table.tobytes()))

    @property
    def size(self) -> int:
        return len(self.labels)

    @cached_property
    def _index(self) -> Dict[str, int]:
        return {lbl: i for i, lbl in enumerate(self.labels)}

    def index(self, label: str) -> int:
        try:
            return self._index[label]
        except KeyError:
            raise KeyError(f"{label!r} is not an element of {self.name or 'the quandle'}")

    def op(self, a: str, b: str) -> str:
        return self.labels[self.table[self.index(a), self.index(b)]]

    def inv(self, a: str, b: str) -> str:
        return self.labels[self.inv_table[self.index(a), self.index(b)]]

    def op_index(self, i: int, j: int) -> int:
        return int(self.table[i, j])

    def inv_index(self, i: int, j: int) -> int:
        return int(self.inv_table[i, j])

    def right_translation(self, a: str) -> Tuple[int, ...]:
        """x -> x*a as a permutation of indices."""
        return tuple(int(v) for v in self.table[:, self.index(a)])

    def is_trivial(self) -> bool:
        return bool(np.all(self.table == np.arange(len(self))[:, None]))

    def is_connected(self) -> bool:
        n = len(self)
        seen = {0}
        frontier = [0]
        while frontier:
            x = frontier.pop()
            for y in self.table[x, :].tolist() + self.inv_table[x, :].tolist():
                if y not in seen:
                    seen.add(y)
                    frontier.append(y)
        return len(seen) == n

    def element(self, i: int):
        """Carrier element behind index i (ring element, permutation, ...), when known."""
        if self.carrier is None:
            return self.labels[i]
        return self.carrier[i]

    def describe(self) -> str:
        return f"{self.name or 'quandle'} ({len(self)} elements)"


def check_axioms(table: np.ndarray, labels: Optional[Sequence[str]] = None) -> CheckResult:
    """Exhaustive check of the three quandle axioms; never raises."""
    t = np.asarray(table, dtype=np.int64)
    n = t.shape[0]
    labels = list(labels) if labels is not None else [str(i) for i in range(n)]
    idx = np.arange(n)

    # columns first: a broken column usually also breaks idempotence
    for j in range(n):
        col = t[:, j]
        if np.unique(col).size != n:
            seen: Dict[int, int] = {}
            for i, v in enumerate(col.tolist()):
                if v in seen:
                    return CheckResult(False, (labels[seen[v]], labels[i], labels[j]), "II")
                seen[v] = i

    bad = np.nonzero(t[idx, idx] != idx)[0]
    if bad.size:
        a = int(bad[0])
        return CheckResult(False, (labels[a], labels[a], labels[int(t[a, a])]), "I")

    step = max(1, _CHUNK_CELLS // max(1, n * n))
    for start in range(0, n, step):
        a = idx[start:start + step]
        ab = t[a, :]
        lhs = t[ab[:, :, None], idx[None, None, :]]
        rhs = t[t[a, :][:, None, :], t[None, :, :]]
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            i, b, c = diff[0]
            return CheckResult(False, (labels[int(a[i])], labels[int(b)], labels[int(c)]), "III")
    return CheckResult(True)


def validate_quandle(
    table,
    labels: Optional[Sequence[str]] = None,
    name: Optional[str] = None,
    carrier: Any = None,
    *,
    max_size: Optional[int] = None,
) -> FiniteQuandle:
    t = np.asarray(table, dtype=np.int64)
    if t.ndim != 2 or t.shape[0] != t.shape[1]:
        raise ValueError("table must be square")
    n = t.shape[0]
    if n == 0:
        raise ValueError("a quandle needs at least one element")
    cap = settings.max_quandle_size if max_size is None else max_size
    if n > cap:
        raise SizeLimitExceeded(f"quandle of size {n} exceeds the cap {cap} (set QF_MAX_QUANDLE)", witness=(n,))
    if t.min() < 0 or t.max() >= n:
        raise ValueError("table entries must be element indices")
    labels = tuple(str(l) for l in labels) if labels is not None else tuple(str(i) for i in range(n))
    if len(labels) != n:
        raise ValueError("one label per row is required")
    if len(set(labels)) != n:
        raise ValueError("labels must be unique")

    res = check_axioms(t, labels)
    if not res:
        a, b, c = res.witness
        if res.reason == "I":
            raise AxiomIViolation(f"{a}*{a} = {c}, not {a}", witness=res.witness)
        if res.reason == "II":
            raise AxiomIIViolation(f"{a}*{c} = {b}*{c}: column {c} is not a permutation", witness=res.witness)
        raise AxiomIIIViolation(f"({a}*{b})*{c} != ({a}*{c})*({b}*{c})", witness=res.witness)

    inv = np.empty_like(t)
    cols = np.arange(n)
    for j in range(n):
        inv[t[:, j], j] = cols
    logger.debug("validated quandle %s of size %d", name, n)
    return FiniteQuandle(labels, _readonly(t), _readonly(inv), name, carrier)


def from_operation(labels: Sequence[Any], fn: Callable[[Any, Any], Any], name: Optional[str] = None,
                   label_fn: Callable[[Any], str] = str) -> FiniteQuandle:
    """Tabulate fn over the given elements; fn must return an element of the list."""
    elems = list(labels)
    pos = {e: i for i, e in enumerate(elems)}
    n = len(elems)
    t = np.empty((n, n), dtype=np.int64)
    for i, a in enumerate(elems):
        for j, b in enumerate(elems):
            c = fn(a, b)
            if c not in pos:
                raise ValueError(f"{a} * {b} = {c} lies outside the element list")
            t[i, j] = pos[c]
    return validate_quandle(t, [label_fn(e) for e in elems], name, tuple(elems))


@dataclass(frozen=True, eq=False)
class QuandleHom:
    source: FiniteQuandle
    target: FiniteQuandle
    mapping: Tuple[int, ...]

    def __post_init__(self):
        f = np.asarray(self.mapping, dtype=np.int64)
        if f.shape != (len(self.source),):
            raise ValueError("mapping must send every source element somewhere")
        if f.min() < 0 or f.max() >= len(self.target):
            raise ValueError("mapping must land in the target")
        lhs = f[self.source.table]
        rhs = self.target.table[f[:, None], f[None, :]]
        bad = np.argwhere(lhs != rhs)
        if bad.size:
            a, b = (self.source.labels[int(x)] for x in bad[0])
            raise NotAHomomorphism(f"f({a}*{b}) != f({a})*f({b})", witness=(a, b))

    def __call__(self, label: str) -> str:
        return self.target.labels[self.mapping[self.source.index(label)]]

    def is_bijective(self) -> bool:
        return len(self.source) == len(self.target) and len(set(self.mapping)) == len(self.mapping)

    def fiber_sizes(self) -> Tuple[int, ...]:
        counts = np.bincount(np.asarray(self.mapping, dtype=np.int64), minlength=len(self.target))
        return tuple(int(c) for c in counts)

    def as_dict(self) -> Dict[str, str]:
        return {self.source.labels[i]: self.target.labels[j] for i, j in enumerate(self.mapping)}
