import json
import logging
import random
from dataclasses import dataclass
from typing import Callable, Dict, Optional, Tuple, Union

import numpy as np
from pydantic import BaseModel, ValidationError

from qf.core.errors import CheckResult, ParseError
from qf.homology.chains import Simplex
from qf.quandles.quandle import FiniteQuandle

logger = logging.getLogger(__name__)

KEY_SEP = "|"


class CochainModel(BaseModel):
    quandle: Optional[str] = None
    degree: int
    q: int
    values: Dict[str, int]


@dataclass(frozen=True, eq=False)
class Cochain:
    """Function X^n -> Z_q held as an n-dimensional array of residues."""

    quandle: FiniteQuandle
    degree: int
    q: int
    values: np.ndarray

    def __post_init__(self):
        if self.q < 1:
            raise ValueError("q must be >= 1")
        shape = (len(self.quandle),) * self.degree
        if self.values.shape != shape:
            raise ValueError(f"values must have shape {shape}")

    def __eq__(self, other) -> bool:
        if not isinstance(other, Cochain):
            return NotImplemented
        return (self.quandle == other.quandle and self.degree == other.degree and self.q == other.q
                and np.array_equal(self.values, other.values))

    def __hash__(self) -> int:
        return hash((self.degree, self.q, self.values.tobytes()))

    @classmethod
    def from_array(cls, X: FiniteQuandle, degree: int, q: int, values) -> "Cochain":
        arr = np.asarray(values, dtype=np.int64) % q
        arr.setflags(write=False)
        return cls(X, degree, q, arr)

    @classmethod
    def zero(cls, X: FiniteQuandle, degree: int, q: int) -> "Cochain":
        return cls.from_array(X, degree, q, np.zeros((len(X),) * degree, dtype=np.int64))

    @classmethod
    def from_function(cls, X: FiniteQuandle, degree: int, q: int, fn: Callable[..., int]) -> "Cochain":
        arr = np.zeros((len(X),) * degree, dtype=np.int64)
        for t in np.ndindex(*arr.shape):
            arr[t] = fn(*t)
        return cls.from_array(X, degree, q, arr)

    @classmethod
    def from_labels(cls, X: FiniteQuandle, degree: int, q: int, values: Dict[Tuple[str, ...], int]) -> "Cochain":
        arr = np.zeros((len(X),) * degree, dtype=np.int64)
        for key, v in values.items():
            if len(key) != degree:
                raise ValueError(f"key {key} does not have {degree} entries")
            arr[tuple(X.index(l) for l in key)] = v
        return cls.from_array(X, degree, q, arr)

    def __call__(self, *idx: int) -> int:
        return int(self.values[idx])

    def at(self, *labels: str) -> int:
        return int(self.values[tuple(self.quandle.index(l) for l in labels)])

    def _check(self, other: "Cochain") -> None:
        if other.degree != self.degree or other.q != self.q or len(other.quandle) != len(self.quandle):
            raise ValueError("cochains must share quandle, degree and coefficients")

    def __add__(self, other: "Cochain") -> "Cochain":
        self._check(other)
        return Cochain.from_array(self.quandle, self.degree, self.q, self.values + other.values)

    def __neg__(self) -> "Cochain":
        return Cochain.from_array(self.quandle, self.degree, self.q, -self.values)

    def __sub__(self, other: "Cochain") -> "Cochain":
        return self + (-other)

    def scale(self, k: int) -> "Cochain":
        return Cochain.from_array(self.quandle, self.degree, self.q, self.values * k)

    def is_zero(self) -> bool:
        return not self.values.any()

    def vanishes_on_degenerate(self) -> bool:
        n = len(self.quandle)
        for i in range(self.degree - 1):
            diag = np.arange(n)
            view = np.moveaxis(self.values, (i, i + 1), (0, 1))[diag, diag]
            if view.any():
                return False
        return True

    def support(self) -> Dict[Simplex, int]:
        return {tuple(int(x) for x in t): int(self.values[tuple(t)]) for t in np.argwhere(self.values)}

    def to_model(self) -> CochainModel:
        labels = self.quandle.labels
        vals = {KEY_SEP.join(labels[i] for i in t): v for t, v in sorted(self.support().items())}
        return CochainModel(quandle=self.quandle.name, degree=self.degree, q=self.q, values=vals)

    def to_json(self) -> str:
        return json.dumps(self.to_model().model_dump(), sort_keys=True, indent=2)


def cochain_from_json(text: Union[str, dict], X: FiniteQuandle) -> Cochain:
    try:
        data = json.loads(text) if isinstance(text, str) else text
        model = CochainModel.model_validate(data)
    except (json.JSONDecodeError, ValidationError) as e:
        raise ParseError(f"invalid cochain JSON: {e}")
    values = {}
    for key, v in model.values.items():
        parts = tuple(key.split(KEY_SEP)) if model.degree else ()
        try:
            [X.index(p) for p in parts]
        except KeyError as e:
            raise ParseError(str(e), witness=(key,))
        values[parts] = v
    return Cochain.from_labels(X, model.degree, model.q, values)


def coboundary(f: Cochain) -> Cochain:
    """(delta f)(x_1..x_{n+1}) = f(d_{n+1}(x_1..x_{n+1}))."""
    X, n = f.quandle, f.degree
    N = len(X)
    T = X.table
    if n == 0:
        return Cochain.zero(X, 1, f.q)
    grids = np.indices((N,) * (n + 1))
    out = np.zeros((N,) * (n + 1), dtype=np.int64)
    for i in range(1, n + 1):
        sign = 1 if (i + 1) % 2 == 0 else -1
        face = tuple(grids[k] for k in range(n + 1) if k != i)
        acted = tuple(T[grids[k], grids[i]] for k in range(i)) + tuple(grids[k] for k in range(i + 1, n + 1))
        out += sign * (f.values[face] - f.values[acted])
    return Cochain.from_array(X, n + 1, f.q, out)


def _first_nonzero(arr: np.ndarray) -> Optional[Tuple[int, ...]]:
    hits = np.argwhere(arr)
    return tuple(int(x) for x in hits[0]) if hits.size else None


def _check_degree(c: Cochain, n: int, X: Optional[FiniteQuandle], q: Optional[int]) -> None:
    if c.degree != n:
        raise ValueError(f"expected a {n}-cochain, got degree {c.degree}")
    if X is not None and X != c.quandle:
        raise ValueError("cochain is defined on a different quandle")
    if q is not None and q != c.q:
        raise ValueError(f"cochain has coefficients mod {c.q}, not {q}")


def is_2cocycle(phi: Cochain, X: Optional[FiniteQuandle] = None, q: Optional[int] = None) -> CheckResult:
    """phi(x,x) = 0 and phi(x,z) + phi(x*z, y*z) = phi(x*y, z) + phi(x, y)."""
    _check_degree(phi, 2, X, q)
    labels = phi.quandle.labels
    diag = np.nonzero(np.diagonal(phi.values))[0]
    if diag.size:
        x = labels[int(diag[0])]
        return CheckResult(False, (x, x), "phi(x,x) != 0")
    hit = _first_nonzero(coboundary(phi).values)
    if hit is not None:
        return CheckResult(False, tuple(labels[i] for i in hit), "2-cocycle identity fails")
    return CheckResult(True)


def is_3cocycle(theta: Cochain, X: Optional[FiniteQuandle] = None, q: Optional[int] = None) -> CheckResult:
    _check_degree(theta, 3, X, q)
    labels = theta.quandle.labels
    n = len(theta.quandle)
    r = np.arange(n)
    left = theta.values[r[:, None], r[:, None], r[None, :]]
    hit = _first_nonzero(left)
    if hit is not None:
        p, s = (labels[i] for i in hit)
        return CheckResult(False, (p, p, s), "theta(p,p,q) != 0")
    right = theta.values[r[:, None], r[None, :], r[None, :]]
    hit = _first_nonzero(right)
    if hit is not None:
        p, s = (labels[i] for i in hit)
        return CheckResult(False, (p, s, s), "theta(p,q,q) != 0")
    hit = _first_nonzero(coboundary(theta).values)
    if hit is not None:
        return CheckResult(False, tuple(labels[i] for i in hit), "3-cocycle identity fails")
    return CheckResult(True)


def random_cochain(X: FiniteQuandle, degree: int, q: int, rng: random.Random, *, normalized: bool = True) -> Cochain:
    """Uniform random cochain; normalized ones vanish on degenerate tuples."""
    arr = np.array([rng.randrange(q) for _ in range(len(X) ** degree)], dtype=np.int64)
    arr = arr.reshape((len(X),) * degree) if degree else arr.reshape(())
    if normalized and degree >= 2:
        for t in np.ndindex(*arr.shape):
            if any(t[i] == t[i + 1] for i in range(degree - 1)):
                arr[t] = 0
    return Cochain.from_array(X, degree, q, arr)

