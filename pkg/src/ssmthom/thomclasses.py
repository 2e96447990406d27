"""SSM-Thom polynomial components of A_0, A_0^2 and A_1 in degrees ell..2ell-1."""

from __future__ import annotations

import enum
from dataclasses import dataclass
from typing import Mapping

from .polyring import ContextError, Poly, Ring, SubstitutionError
from .symfun import (
    Partition,
    binom,
    c_name,
    c_to_s_swap,
    class_ring,
    parse_symbol,
    s_det,
    s_name,
)


class SingularityId(enum.Enum):
    A0 = "A0"
    A02 = "A02"
    A1 = "A1"

    @property
    def label(self) -> str:
        return {"A0": "A_0", "A02": "A_0^2", "A1": "A_1"}[self.value]

    def codimension(self, ell: int) -> int:
        return {"A0": 0, "A02": ell, "A1": ell + 1}[self.value]


class GradingError(ValueError):
    pass


class DegreeRangeError(ValueError):
    """N outside 0 <= N < ell, where the closed formulas are not established."""


@dataclass(frozen=True)
class ClassPoly:
    """A polynomial in the class symbols c_i, s_lambda for a fixed ell."""

    ell: int
    poly: Poly

    def __post_init__(self):
        if self.poly.ring != class_ring(self.ell):
            raise ContextError(f"ClassPoly for ell={self.ell} needs class_ring({self.ell})")

    @classmethod
    def zero(cls, ell: int) -> "ClassPoly":
        return cls(ell, class_ring(ell).zero())

    @classmethod
    def one(cls, ell: int) -> "ClassPoly":
        return cls(ell, class_ring(ell).one())

    def _other(self, other) -> Poly:
        if isinstance(other, ClassPoly):
            if other.ell != self.ell:
                raise ContextError(f"ell mismatch: {self.ell} vs {other.ell}")
            return other.poly
        return other

    def __add__(self, other):
        return ClassPoly(self.ell, self.poly + self._other(other))

    __radd__ = __add__

    def __sub__(self, other):
        return ClassPoly(self.ell, self.poly - self._other(other))

    def __neg__(self):
        return ClassPoly(self.ell, -self.poly)

    def __mul__(self, other):
        return ClassPoly(self.ell, self.poly * self._other(other))

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, ClassPoly):
            return self.ell == other.ell and self.poly == other.poly
        return self.poly == other

    def __hash__(self):
        return hash((self.ell, self.poly))

    def __bool__(self):
        return bool(self.poly)

    def degree(self) -> int:
        return self.poly.degree()

    def graded_part(self, D: int) -> "ClassPoly":
        return ClassPoly(self.ell, self.poly.graded_part(D))

    def truncate(self, D: int) -> "ClassPoly":
        return ClassPoly(self.ell, self.poly.truncate(D))

    def components(self) -> dict[int, "ClassPoly"]:
        return {d: ClassPoly(self.ell, p) for d, p in self.poly.graded_parts().items()}

    def __str__(self):
        return str(self.poly)

    def to_latex(self) -> str:
        return self.poly.to_latex()


def c(ell: int, i: int) -> Poly:
    return class_ring(ell).gen(c_name(i))


def s(ell: int, lam: Partition = ()) -> Poly:
    return class_ring(ell).gen(s_name(lam))


def _check_range(ell: int, N: int, strict: bool) -> None:
    if ell < 1:
        raise DegreeRangeError("ell must be positive")
    if N < 0:
        raise DegreeRangeError("N must be nonnegative")
    if strict and N >= ell:
        raise DegreeRangeError(f"N must be < ell (got N={N}, ell={ell})")
    if ell + N > 2 * ell:
        raise DegreeRangeError(f"degree {ell + N} exceeds the class ring bound {2 * ell}")


def s_det_ln(ell: int, m: int) -> Poly:
    """S^LN_(m): S_(m) with every c-monomial swapped for the matching s_lambda."""
    return c_to_s_swap(s_det(m), ell)


def ssm_a02_component(ell: int, N: int, *, strict: bool = True) -> ClassPoly:
    _check_range(ell, N, strict)
    ring = class_ring(ell)
    acc = ring.zero()
    for k in range(N + 1):
        acc = acc + s_det(N - k, ring) * c(ell, ell + k) * binom(ell + N - 1, k)
    sign = -1 if N % 2 == 0 else 1  # (-1)^(N+1)
    return ClassPoly(ell, acc * sign - s_det_ln(ell, N) * sign)


def ssm_a1_component(ell: int, N: int, *, strict: bool = True) -> ClassPoly:
    _check_range(ell, N, strict)
    ring = class_ring(ell)
    acc = ring.zero()
    for k in range(N):
        acc = acc + s_det(N - 1 - k, ring) * c(ell, ell + k + 1) * binom(ell + N - 2, k)
    sign = 1 if N % 2 == 1 else -1  # (-1)^(N-1)
    return ClassPoly(ell, acc * sign)


def ssm_a0_component(ell: int, N: int, *, strict: bool = True) -> ClassPoly:
    # the three loci partition the source, so the components sum to zero
    return -(ssm_a02_component(ell, N, strict=strict) + ssm_a1_component(ell, N, strict=strict))


_GENERATORS = {
    SingularityId.A0: ssm_a0_component,
    SingularityId.A02: ssm_a02_component,
    SingularityId.A1: ssm_a1_component,
}


def ssm_component(sing: SingularityId, ell: int, N: int, *, strict: bool = True) -> ClassPoly:
    return _GENERATORS[SingularityId(sing)](ell, N, strict=strict)


def ssm_truncated(sing: SingularityId, ell: int, N_max: int, *, strict: bool = True,
                  perturb: Mapping[int, Poly] | None = None) -> ClassPoly:
    """Sum of the components N = 0..N_max, plus the constant 1 for A_0.

    ``perturb`` adds a correction to individual components (keyed by N); it exists
    only so tests can confirm that verification catches a corrupted formula.
    """
    sing = SingularityId(sing)
    _check_range(ell, N_max, strict)
    total = ClassPoly.one(ell) if sing is SingularityId.A0 else ClassPoly.zero(ell)
    for N in range(N_max + 1):
        total = total + ssm_component(sing, ell, N, strict=strict)
        if perturb and N in perturb:
            total = total + perturb[N]
    return total


def thom_evaluate(cp: ClassPoly, c_bindings: Mapping[int, Poly],
                  s_bindings: Mapping[Partition, Poly], *, target: Ring | None = None,
                  truncate_at: int | None = None) -> Poly:
    """Substitute characteristic classes of a map into a class polynomial.

    Every symbol occurring in ``cp`` must be bound; a c_i binding must be
    homogeneous of degree i and an s_lambda binding of degree ell + |lambda|.
    """
    names = {}
    for name in sorted(cp.poly.variables_used()):
        kind, idx = parse_symbol(name)
        if kind == "c":
            if idx not in c_bindings:
                raise SubstitutionError(name)
            img, expected = c_bindings[idx], idx
        else:
            if idx not in s_bindings:
                raise SubstitutionError(name)
            img, expected = s_bindings[idx], cp.ell + sum(idx)
        if not img.is_homogeneous(expected):
            raise GradingError(f"binding for {name} is not homogeneous of degree {expected}")
        names[name] = img
    if target is None:
        if names:
            target = next(iter(names.values())).ring
        else:
            raise ValueError("a target ring is required when no symbol is bound")
    return cp.poly.substitute(names, target, truncate_at=truncate_at)
