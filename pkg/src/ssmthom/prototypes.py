"""Prototype germs of A_0, A_0^2, A_1 and the interpolation check against them.

A prototype is described by torus weights: the target representation and, for
each branch of the source, the source representation.  Everything else (the
quotient Chern classes, the Landweber-Novikov classes, the locus oracles) is
derived from those weights.
"""

from __future__ import annotations

import enum
from dataclasses import dataclass
from fractions import Fraction
from functools import lru_cache
from typing import Mapping

from .polyring import Poly, Ring, Variable, series_quotient
from .symfun import Partition, complete_sym, partitions
from .thomclasses import ClassPoly, SingularityId, ssm_truncated, thom_evaluate


class PrototypeId(enum.Enum):
    P_A0 = "P_A0"
    P_A02 = "P_A02"
    P_A1 = "P_A1"


class NotInOracleError(KeyError):
    pass


def _product(ring: Ring, factors) -> Poly:
    out = ring.one()
    for f in factors:
        out = out * f
    return out


def _scalar_ratio(p: Poly, q: Poly):
    """kappa with p == kappa * q, or None."""
    pt, qt = p.raw_terms(), q.raw_terms()
    if not qt or pt.keys() != qt.keys():
        return None
    k0 = next(iter(qt))
    kappa = Fraction(pt[k0]) / qt[k0]
    if all(pt[k] == kappa * qt[k] for k in qt):
        return kappa
    return None


@dataclass(frozen=True)
class Prototype:
    id: PrototypeId
    ell: int
    ring: Ring
    target_weights: tuple[Poly, ...]
    # one tuple per source branch; branch 0 is the one the check is performed on
    source_weights: tuple[tuple[Poly, ...], ...]

    def __post_init__(self):
        for branch in self.source_weights:
            if any(not w for w in branch):
                raise ValueError("source Euler class vanishes")

    @property
    def roots(self) -> tuple[Poly, ...]:
        return self.ring.gens()

    def source_chern(self, branch: int = 0) -> Poly:
        return _product(self.ring, (1 + w for w in self.source_weights[branch]))

    def chern_series(self, D: int, branch: int = 0) -> Poly:
        """c(target) / c(source branch), truncated at degree D."""
        num = list(self.target_weights)
        den = []
        for w in self.source_weights[branch]:
            if w in num:
                num.remove(w)
            else:
                den.append(w)
        numerator = _product(self.ring, (1 + w for w in num))
        denominator = _product(self.ring, (1 + w for w in den))
        return series_quotient(numerator, denominator, D)

    def chern_classes(self, D: int, branch: int = 0) -> dict[int, Poly]:
        series = self.chern_series(D, branch)
        return {i: series.graded_part(i) for i in range(1, D + 1)}

    def euler_quotient(self, branch: int = 0) -> Poly:
        """f^* e(TN) / e(TM) for one source branch, by cancelling proportional weights."""
        remaining = list(self.target_weights)
        scale = Fraction(1)
        for w in self.source_weights[branch]:
            for j, t in enumerate(remaining):
                kappa = _scalar_ratio(t, w)
                if kappa is not None:
                    scale *= kappa
                    del remaining[j]
                    break
            else:
                raise ValueError(f"source weight {w} does not divide the target Euler class")
        return _product(self.ring, remaining) * scale

    def _branch_data(self, D: int) -> list[tuple[dict[int, Poly], Poly]]:
        return [(self.chern_classes(D, b), self.euler_quotient(b))
                for b in range(len(self.source_weights))]

    def landweber(self, lam: Partition, D: int, _data=None) -> Poly:
        """s_lambda = sum over branches of c^(b)_lambda * f^*e(TN)/e(TM^(b))."""
        out = self.ring.zero()
        for classes, euler in _data or self._branch_data(D):
            term = euler
            for part in lam:
                term = term * classes.get(part, self.ring.zero())
            out = out + term
        return out

    def psi(self, cp: ClassPoly, D: int) -> Poly:
        """Image of a class polynomial under the prototype's substitution, degrees <= D."""
        if cp.ell != self.ell:
            raise ValueError(f"ell mismatch: class polynomial {cp.ell}, prototype {self.ell}")
        if cp.degree() > D:
            raise ValueError(f"degree bound {D} below class polynomial degree {cp.degree()}")
        data = self._branch_data(D)
        s_bind = {lam: self.landweber(lam, D, data)
                  for w in range(0, max(D - self.ell, -1) + 1) for lam in partitions(w)}
        return thom_evaluate(cp, data[0][0], s_bind, target=self.ring, truncate_at=D)


def _roots_ring(names_latex) -> Ring:
    return Ring(Variable(n, 1, tex) for n, tex in names_latex)


@lru_cache(maxsize=None)
def prototype(pid: PrototypeId, ell: int) -> Prototype:
    pid = PrototypeId(pid)
    if ell < 1:
        raise ValueError("ell must be positive")
    idx = range(1, ell + 1)
    if pid is PrototypeId.P_A0:
        # pt -> C^ell
        ring = _roots_ring([(f"a_{i}", rf"\alpha_{{{i}}}") for i in idx])
        alphas = ring.gens()
        return Prototype(pid, ell, ring, alphas, ((),))
    if pid is PrototypeId.P_A02:
        # C^ell_1 + C^ell_2 -> C^2ell, coordinate embeddings
        ring = _roots_ring([(f"a_{i}", rf"\alpha_{{{i}}}") for i in idx]
                           + [(f"b_{i}", rf"\beta_{{{i}}}") for i in idx])
        gens = ring.gens()
        alphas, betas = gens[:ell], gens[ell:]
        return Prototype(pid, ell, ring, alphas + betas, (alphas, betas))
    # (x, y) -> (x^2, x*y_1..x*y_ell, y_1..y_ell)
    ring = _roots_ring([("a", r"\alpha")] + [(f"b_{i}", rf"\beta_{{{i}}}") for i in idx])
    a, *betas = ring.gens()
    target = (2 * a,) + tuple(a + b for b in betas) + tuple(betas)
    return Prototype(pid, ell, ring, target, ((a,) + tuple(betas),))


def locus_csm(proto: Prototype, sing: SingularityId) -> Poly:
    """CSM class of the singularity locus inside the distinguished source branch."""
    sing = SingularityId(sing)
    ring = proto.ring
    ell = proto.ell
    key = (proto.id, sing)
    if proto.id is PrototypeId.P_A0:
        # the source is a point: only A_0 is nonempty
        return ring.one() if sing is SingularityId.A0 else ring.zero()
    if proto.id is PrototypeId.P_A02:
        alphas = ring.gens()[:ell]
        origin = _product(ring, alphas)
        table = {
            SingularityId.A02: origin,
            SingularityId.A1: ring.zero(),
            SingularityId.A0: proto.source_chern() - origin,
        }
    elif proto.id is PrototypeId.P_A1:
        a, *betas = ring.gens()
        axis_point = _product(ring, betas)
        axis = (1 + a) * axis_point
        table = {
            SingularityId.A02: axis - a * axis_point,  # x-axis minus the origin
            SingularityId.A1: a * axis_point,          # the origin
            SingularityId.A0: proto.source_chern() - axis,
        }
    else:
        raise NotInOracleError(key)
    return table[sing]


def locus_ssm_rhs(proto: Prototype, sing: SingularityId, N: int) -> Poly:
    """Degree ell+N part of csm(locus) / c(T source)."""
    if not 0 <= N < proto.ell:
        raise ValueError(f"N must satisfy 0 <= N < ell (got N={N}, ell={proto.ell})")
    D = proto.ell + N
    return series_quotient(locus_csm(proto, sing), proto.source_chern(), D).graded_part(D)


def locus_ssm_closed_form(proto: Prototype, sing: SingularityId, N: int) -> Poly:
    """Closed forms of the nonzero A_0^2 / A_1 oracles via complete symmetric polynomials."""
    sing = SingularityId(sing)
    ring, ell = proto.ring, proto.ell
    sign = 1 if N % 2 == 0 else -1
    if proto.id is PrototypeId.P_A02 and sing is SingularityId.A02:
        alphas = ring.gens()[:ell]
        return _product(ring, alphas) * complete_sym(N, alphas) * sign
    if proto.id is PrototypeId.P_A1 and sing is SingularityId.A02:
        a, *betas = ring.gens()
        return _product(ring, betas) * complete_sym(N, ring.gens()) * sign
    if proto.id is PrototypeId.P_A1 and sing is SingularityId.A1:
        a, *betas = ring.gens()
        if N == 0:
            return ring.zero()
        return a * _product(ring, betas) * complete_sym(N - 1, ring.gens()) * (-sign)
    raise NotInOracleError((proto.id, sing))


@dataclass(frozen=True)
class VerificationReport:
    formula: SingularityId
    prototype: PrototypeId
    ell: int
    N: int
    lhs: Poly
    rhs: Poly
    residual: Poly

    @property
    def passed(self) -> bool:
        return not self.residual

    def line(self) -> str:
        status = "PASS" if self.passed else "FAIL"
        return f"{status} formula={self.formula.value} prototype={self.prototype.value} ell={self.ell} N={self.N}"


def verify(sing: SingularityId, proto: Prototype, N: int,
           perturb: Mapping[int, Poly] | None = None) -> VerificationReport:
    sing = SingularityId(sing)
    D = proto.ell + N
    cp = ssm_truncated(sing, proto.ell, N, perturb=perturb)
    lhs = proto.psi(cp, D).graded_part(D)
    rhs = locus_ssm_rhs(proto, sing, N)
    return VerificationReport(sing, proto.id, proto.ell, N, lhs, rhs, lhs - rhs)


def verify_all(ell: int, perturb: Mapping[SingularityId, Mapping[int, Poly]] | None = None
               ) -> list[VerificationReport]:
    """All formula x prototype x N checks for one ell, in a fixed order."""
    if ell < 1:
        raise ValueError("ell must be positive")
    perturb = perturb or {}
    reports = []
    for sing in SingularityId:
        for pid in PrototypeId:
            proto = prototype(pid, ell)
            for N in range(ell):
                reports.append(verify(sing, proto, N, perturb.get(sing)))
    return reports
