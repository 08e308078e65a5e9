import itertools
import logging
import math
from dataclasses import dataclass, field
from functools import cached_property
from typing import Dict, Iterator, List, Literal, Optional, Sequence, Tuple, Union

from qf.algebra.laurent import LaurentPoly
from qf.core.errors import NonUnitLeadingCoefficient, NotInIdeal

logger = logging.getLogger(__name__)

Basis = Literal["T", "1-T"]
IdealKind = Literal["1-T", "q"]


def _is_unit_mod(c: int, q: int) -> bool:
    return math.gcd(c % q, q) == 1


@dataclass(frozen=True)
class FiniteRing:
    """Z_q[T,T^-1]/(h(T)) with elements stored as coefficient tuples.

    Internally every element is a polynomial in a variable u reduced modulo a
    monic polynomial g(u) over Z_q, where u = T (basis "T") or u = 1-T
    (basis "1-T"). `family`/`level`/`base` tag the W_m and U_m rings so that
    sections, projections and ideal stripping know which tower they live in.
    """

    q: int
    h: LaurentPoly
    basis: Basis = "T"
    family: Optional[str] = None
    level: int = 0
    base: int = 0
    _inverse_cache: Dict[Tuple[int, ...], Optional[Tuple[int, ...]]] = field(
        default_factory=dict, compare=False, hash=False, repr=False
    )

    @property
    def degree(self) -> int:
        return self.h.max_degree - self.h.min_degree

    @property
    def size(self) -> int:
        return self.q ** self.degree

    @cached_property
    def modulus(self) -> Tuple[int, ...]:
        """Monic g(u), ascending coefficients, length degree+1."""
        q = self.q
        hc = list(self.h.normalized().coefficient_list())
        if self.basis == "T":
            g = [c % q for c in hc]
        else:
            # h(1-u) = sum c_k (1-u)^k
            g = [0] * len(hc)
            for k, c in enumerate(hc):
                for j in range(k + 1):
                    g[j] += c * math.comb(k, j) * (-1) ** j
            g = [c % q for c in g]
        lead_inv = pow(g[-1], -1, q) if q > 1 else 0
        return tuple((c * lead_inv) % q for c in g)

    def _reduce(self, coeffs: Sequence[int]) -> Tuple[int, ...]:
        q, g, d = self.q, self.modulus, self.degree
        r = [c % q for c in coeffs]
        for i in range(len(r) - 1, d - 1, -1):
            c = r[i]
            if c:
                base = i - d
                for j in range(d + 1):
                    r[base + j] = (r[base + j] - c * g[j]) % q
        r = r[:d] + [0] * max(0, d - len(r))
        return tuple(r)

    def element(self, coeffs: Sequence[int]) -> "RingElement":
        return RingElement(self, self._reduce(coeffs))

    def scalar(self, c: int) -> "RingElement":
        return self.element([c])

    @property
    def zero(self) -> "RingElement":
        return RingElement(self, (0,) * self.degree)

    @property
    def one(self) -> "RingElement":
        return self.scalar(1)

    @cached_property
    def T(self) -> "RingElement":
        return self.element([0, 1]) if self.basis == "T" else self.element([1, -1])

    @cached_property
    def T_inv(self) -> "RingElement":
        return invert_T(self)

    def from_laurent(self, p: LaurentPoly) -> "RingElement":
        out = self.zero
        for e, c in p.terms:
            mono = self.T ** e if e >= 0 else self.T_inv ** (-e)
            out = out + mono * c
        return out

    def elements(self) -> List["RingElement"]:
        return [RingElement(self, c) for c in itertools.product(range(self.q), repeat=self.degree)]

    def iter_elements(self) -> Iterator["RingElement"]:
        for c in itertools.product(range(self.q), repeat=self.degree):
            yield RingElement(self, c)

    def index_of(self, e: "RingElement") -> int:
        idx = 0
        for c in e.coeffs:
            idx = idx * self.q + c
        return idx

    def element_at(self, idx: int) -> "RingElement":
        coeffs = []
        for _ in range(self.degree):
            idx, c = divmod(idx, self.q)
            coeffs.append(c)
        return RingElement(self, tuple(reversed(coeffs)))

    def describe(self) -> str:
        if self.family == "W":
            return f"W_{self.level} = Z_{self.q}[T]/(1-T)^{self.level}"
        if self.family == "U":
            return f"U_{self.level} = Z_{self.q}[T]/(T-1+{self.base})"
        return f"Z_{self.q}[T,T^-1]/({self.h})"


@dataclass(frozen=True)
class RingElement:
    ring: FiniteRing
    coeffs: Tuple[int, ...]

    def _check(self, other: "RingElement") -> None:
        if other.ring is not self.ring and other.ring != self.ring:
            raise ValueError("ring elements must belong to the same ring")

    def _lift(self, other) -> "RingElement":
        if isinstance(other, int):
            return self.ring.scalar(other)
        self._check(other)
        return other

    def __add__(self, other) -> "RingElement":
        other = self._lift(other)
        q = self.ring.q
        return RingElement(self.ring, tuple((a + b) % q for a, b in zip(self.coeffs, other.coeffs)))

    __radd__ = __add__

    def __neg__(self) -> "RingElement":
        q = self.ring.q
        return RingElement(self.ring, tuple((-a) % q for a in self.coeffs))

    def __sub__(self, other) -> "RingElement":
        return self + (-self._lift(other))

    def __rsub__(self, other) -> "RingElement":
        return self._lift(other) - self

    def __mul__(self, other) -> "RingElement":
        if isinstance(other, int):
            q = self.ring.q
            return RingElement(self.ring, tuple((a * other) % q for a in self.coeffs))
        self._check(other)
        a, b = self.coeffs, other.coeffs
        if not a:
            return self
        prod = [0] * (2 * len(a) - 1)
        for i, x in enumerate(a):
            if x:
                for j, y in enumerate(b):
                    prod[i + j] += x * y
        return self.ring.element(prod)

    __rmul__ = __mul__

    def __pow__(self, k: int) -> "RingElement":
        base = self
        if k < 0:
            inv = self.inverse()
            if inv is None:
                raise ValueError(f"{self} is not invertible")
            base, k = inv, -k
        out = self.ring.one
        while k:
            if k & 1:
                out = out * base
            base = base * base
            k >>= 1
        return out

    def is_zero(self) -> bool:
        return not any(self.coeffs)

    def inverse(self) -> Optional["RingElement"]:
        cache = self.ring._inverse_cache
        if self.coeffs not in cache:
            found = None
            one = self.ring.one
            for cand in self.ring.iter_elements():
                if self * cand == one:
                    found = cand.coeffs
                    break
            cache[self.coeffs] = found
        inv = cache[self.coeffs]
        return None if inv is None else RingElement(self.ring, inv)

    def is_unit(self) -> bool:
        if self.ring.degree == 0:
            return True
        # local rings: unit iff the constant term is a unit
        if self.ring.family == "W":
            return _is_unit_mod(self.coeffs[0], self.ring.q)
        return self.inverse() is not None

    def __str__(self) -> str:
        if self.ring.degree == 0:
            return "0"
        if self.ring.degree == 1 and self.ring.basis == "T":
            return str(self.coeffs[0])
        var = "T" if self.ring.basis == "T" else "(1-T)"
        parts = []
        for k, c in enumerate(self.coeffs):
            if c == 0:
                continue
            if k == 0:
                parts.append(str(c))
            else:
                mono = var if k == 1 else f"{var}^{k}"
                parts.append(mono if c == 1 else f"{c}{mono}")
        return " + ".join(parts) if parts else "0"

    def __repr__(self) -> str:
        return f"RingElement({self})"


def make_ring(q: int, h: Union[LaurentPoly, str, Sequence[int]], basis: Basis = "T") -> FiniteRing:
    if q < 2:
        raise ValueError("q must be >= 2")
    poly = LaurentPoly.parse(h).reduce_mod(q)
    if poly.is_zero():
        raise NonUnitLeadingCoefficient(f"h vanishes mod {q}")
    poly = poly.normalized()
    low, high = poly.coeff(0), poly.coeff(poly.max_degree)
    if not _is_unit_mod(low, q) or not _is_unit_mod(high, q):
        raise NonUnitLeadingCoefficient(
            f"extreme coefficients of h = {poly} must be units mod {q}", witness=(low, high)
        )
    ring = FiniteRing(q=q, h=poly, basis=basis)
    logger.debug("built ring %s with %d elements", ring.describe(), ring.size)
    return ring


def w_ring(q: int, m: int) -> FiniteRing:
    if m < 1:
        raise ValueError("m must be >= 1")
    base = make_ring(q, LaurentPoly.from_coeffs([1, -1]) ** m, basis="1-T")
    return FiniteRing(q=q, h=base.h, basis="1-T", family="W", level=m, base=q)


def u_ring(q: int, m: int) -> FiniteRing:
    if m < 1:
        raise ValueError("m must be >= 1")
    if q < 2:
        raise ValueError("q must be >= 2")
    base = make_ring(q ** m, LaurentPoly.from_coeffs([q - 1, 1]))
    return FiniteRing(q=q ** m, h=base.h, basis="T", family="U", level=m, base=q)


def family_ring(family: str, q: int, m: int) -> FiniteRing:
    fam = family.upper()
    if fam == "W":
        return w_ring(q, m)
    if fam == "U":
        return u_ring(q, m)
    raise ValueError("family must be 'W' or 'U'")


def invert_T(r: FiniteRing) -> RingElement:
    # h = h0 + T*rest(T) with h0 a unit, so T * (-rest/h0) = 1 mod h
    if r.degree == 0:
        return r.zero
    hc = r.h.normalized().coefficient_list()
    h0_inv = pow(hc[0] % r.q, -1, r.q)
    rest = r.zero
    for c in reversed(hc[1:]):
        rest = rest * r.T + c
    return rest * (-h0_inv)


def section(x: RingElement, target: FiniteRing) -> RingElement:
    """Canonical lift of an element of level m into the level m+1 ring of the same family."""
    src = x.ring
    if src.family is None or src.family != target.family or target.level != src.level + 1:
        raise ValueError("section needs a W_m -> W_{m+1} or U_m -> U_{m+1} pair")
    if src.family == "W":
        return RingElement(target, x.coeffs + (0,))
    return RingElement(target, x.coeffs)


def project(e: RingElement, target: FiniteRing) -> RingElement:
    src = e.ring
    if src.family is None or src.family != target.family or src.level != target.level + 1:
        raise ValueError("project needs a W_{m+1} -> W_m or U_{m+1} -> U_m pair")
    if src.family == "W":
        return RingElement(target, e.coeffs[:-1])
    return target.scalar(e.coeffs[0])


def strip_ideal_factor(e: RingElement, kind: IdealKind, m: Optional[int] = None) -> int:
    """Return c in Z_q with e = c*(1-T)^m (kind "1-T") or e = c*q^m (kind "q").

    m defaults to level - 1, i.e. the kernel of the projection onto the
    previous ring of the tower.
    """
    ring = e.ring
    if kind == "1-T":
        if ring.basis != "1-T":
            raise ValueError("(1-T)-stripping needs a ring in the (1-T) basis")
        m = ring.degree - 1 if m is None else m
        if m < 0 or m >= ring.degree:
            raise ValueError("m must satisfy 0 <= m < degree")
        if any(e.coeffs[:m]) or any(e.coeffs[m + 1:]):
            raise NotInIdeal(f"{e} is not a multiple of (1-T)^{m}", witness=e.coeffs)
        return e.coeffs[m] % ring.q
    if kind == "q":
        if ring.family != "U" or ring.degree != 1:
            raise ValueError("q-stripping needs a U_m ring")
        m = ring.level - 1 if m is None else m
        qm = ring.base ** m
        value = e.coeffs[0]
        if value % qm:
            raise NotInIdeal(f"{value} is not a multiple of {ring.base}^{m}", witness=(value,))
        c = value // qm
        if c >= ring.base:
            raise NotInIdeal(f"{value} is not c*{ring.base}^{m} with c < {ring.base}", witness=(value,))
        return c
    raise ValueError("kind must be '1-T' or 'q'")


def ideal_kind(r: FiniteRing) -> IdealKind:
    if r.family == "W":
        return "1-T"
    if r.family == "U":
        return "q"
    raise ValueError("ring is not part of a W/U tower")
