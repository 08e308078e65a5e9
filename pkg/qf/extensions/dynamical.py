import itertools
import logging
from dataclasses import dataclass
from typing import Callable, Optional, Sequence, Tuple

import numpy as np

from qf.core.errors import CheckResult, InvalidDynamicalCocycle
from qf.quandles.quandle import FiniteQuandle, QuandleHom, validate_quandle

logger = logging.getLogger(__name__)


@dataclass(frozen=True, eq=False)
class DynamicalCocycle:
    """alpha[s, t, a, b] = alpha_{s,t}(a, b) as fiber indices."""

    base: FiniteQuandle
    fiber: Tuple[str, ...]
    alpha: np.ndarray

    def __post_init__(self):
        n, k = len(self.base), len(self.fiber)
        if self.alpha.shape != (n, n, k, k):
            raise ValueError(f"alpha must have shape {(n, n, k, k)}")
        if k and (self.alpha.min() < 0 or self.alpha.max() >= k):
            raise ValueError("alpha must take values in the fiber")

    def __call__(self, s: int, t: int, a: int, b: int) -> int:
        return int(self.alpha[s, t, a, b])


def dynamical_cocycle(X: FiniteQuandle, fiber: Sequence[str], fn: Callable[[int, int, int, int], int]) -> DynamicalCocycle:
    n, k = len(X), len(fiber)
    arr = np.empty((n, n, k, k), dtype=np.int64)
    for s, t, a, b in itertools.product(range(n), range(n), range(k), range(k)):
        arr[s, t, a, b] = fn(s, t, a, b)
    arr.setflags(write=False)
    return DynamicalCocycle(X, tuple(fiber), arr)


def trivial_dynamical_cocycle(X: FiniteQuandle, fiber: Sequence[str]) -> DynamicalCocycle:
    return dynamical_cocycle(X, fiber, lambda s, t, a, b: a)


def validate_dynamical_cocycle(alpha: DynamicalCocycle) -> CheckResult:
    X, al = alpha.base, alpha.alpha
    n, k = len(X), len(alpha.fiber)
    lab, fib = X.labels, alpha.fiber
    r = np.arange(k)

    for s in range(n):
        bad = np.nonzero(al[s, s, r, r] != r)[0]
        if bad.size:
            a = int(bad[0])
            return CheckResult(False, (lab[s], fib[a]), "alpha_{s,s}(a,a) != a")

    for s, t in itertools.product(range(n), repeat=2):
        for b in range(k):
            if np.unique(al[s, t, :, b]).size != k:
                return CheckResult(False, (lab[s], lab[t], fib[b]), "alpha_{s,t}(-,b) is not a bijection")

    T = X.table
    for s, t, e in itertools.product(range(n), repeat=3):
        inner = al[s, t]                                   # (a, b)
        lhs = al[T[s, t], e][inner[:, :, None], r[None, None, :]]
        left = al[s, e]                                    # (a, c)
        right = al[t, e]                                   # (b, c)
        rhs = al[T[s, e], T[t, e]][left[:, None, :], right[None, :, :]]
        diff = np.argwhere(lhs != rhs)
        if diff.size:
            a, b, c = (fib[int(x)] for x in diff[0])
            return CheckResult(False, (lab[s], lab[t], lab[e], a, b, c), "twisted distributivity fails")
    return CheckResult(True)


def dynamical_extension(alpha: DynamicalCocycle, name: Optional[str] = None) -> FiniteQuandle:
    """S x_alpha X with (a,s)*(b,t) = (alpha_{s,t}(a,b), s*t); (a,s) sits at index s*|S| + a."""
    res = validate_dynamical_cocycle(alpha)
    if not res:
        raise InvalidDynamicalCocycle(res.reason, witness=res.witness)
    X, al = alpha.base, alpha.alpha
    n, k = len(X), len(alpha.fiber)
    base = np.broadcast_to(X.table[:, None, :, None], (n, k, n, k))
    fiber = al.transpose(0, 2, 1, 3)                       # (s, a, t, b)
    table = (base * k + fiber).reshape(n * k, n * k)
    labels = [f"({a},{x})" for x in X.labels for a in alpha.fiber]
    Q = validate_quandle(table, labels, name or f"S x_alpha {X.name}")
    logger.info("dynamical extension of %s: %d elements", X.name, len(Q))
    return Q


def cocycle_from_fibration(Y: FiniteQuandle, X: FiniteQuandle, p: QuandleHom) -> DynamicalCocycle:
    """Read alpha off a surjection with constant fibers.

    Each fiber is identified with S = {0..k-1} in index order, so
    y_s[a] * y_t[b] = y_{s*t}[alpha_{s,t}(a,b)].
    """
    if p.source is not Y and p.source != Y:
        raise ValueError("p must start at Y")
    if p.target is not X and p.target != X:
        raise ValueError("p must land in X")
    sizes = set(p.fiber_sizes())
    if len(sizes) != 1 or 0 in sizes:
        raise ValueError("p must be surjective with fibers of one size")
    k = sizes.pop()
    fibers = [[] for _ in range(len(X))]
    for y, x in enumerate(p.mapping):
        fibers[x].append(y)
    slot = {}
    for x, members in enumerate(fibers):
        for a, y in enumerate(members):
            slot[y] = a
    n = len(X)
    arr = np.empty((n, n, k, k), dtype=np.int64)
    for s, t in itertools.product(range(n), repeat=2):
        for a, b in itertools.product(range(k), repeat=2):
            arr[s, t, a, b] = slot[int(Y.table[fibers[s][a], fibers[t][b]])]
    arr.setflags(write=False)
    return DynamicalCocycle(X, tuple(str(a) for a in range(k)), arr)
