"""Singularity loci of degree-d maps P^(ell+1) -> P^(2ell+1).

The pipeline runs symbolically in the map degree ``d`` (a degree-0 variable):
Thom evaluation -> CSM classes -> gamma polynomials -> the Aluffi-Ohmoto
involution -> Euler characteristics of general linear sections.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

from .polyring import Poly, Ring, Variable, series_quotient
from .symfun import Partition, binom
from .thomclasses import SingularityId, ssm_truncated, thom_evaluate

HD = Ring([Variable("h", 1), Variable("d", 0)])
T = Ring([Variable("t", 1)])

LOCI = (SingularityId.A0, SingularityId.A02, SingularityId.A1)


@dataclass(frozen=True)
class ProjectiveSetup:
    ell: int
    d: int

    def __post_init__(self):
        if self.ell < 1:
            raise ValueError("ell must be positive")
        if self.d < 1:
            raise ValueError("map degree d must be positive")

    @property
    def dim(self) -> int:
        return self.ell + 1


def _h():
    return HD.gen("h")


def _d():
    return HD.gen("d")


def _at_degree(p: Poly, d: int) -> Poly:
    return p.substitute({"d": d}, HD)


def _as_int(x) -> int:
    if getattr(x, "denominator", 1) != 1:
        raise ArithmeticError(f"expected an integer, got {x}")
    return int(x)


# -- characteristic classes, symbolic in d ---------------------------------------

@lru_cache(maxsize=None)
def chern_series_symbolic(ell: int) -> Poly:
    """(1 + d h)^(2ell+2) / (1 + h)^(ell+2) up to h^(ell+1)."""
    h, d = _h(), _d()
    return series_quotient((1 + d * h) ** (2 * ell + 2), (1 + h) ** (ell + 2), ell + 1)


def chern_closed_form(ell: int, k: int) -> Poly:
    """(-h)^k sum_a C(2ell+2, a) C(k-a+ell+1, ell+1) (-d)^a."""
    h, d = _h(), _d()
    acc = HD.zero()
    for a in range(k + 1):
        acc = acc + binom(2 * ell + 2, a) * binom(k - a + ell + 1, ell + 1) * (-d) ** a
    return acc * (-h) ** k


def chern_binding_symbolic(ell: int, k: int) -> Poly:
    if not 0 <= k <= ell + 1:
        raise ValueError(f"k must lie in 0..{ell + 1}")
    return chern_series_symbolic(ell).graded_part(k)


def chern_binding(setup: ProjectiveSetup, k: int) -> Poly:
    return _at_degree(chern_binding_symbolic(setup.ell, k), setup.d)


def sigma(ell: int, d: int) -> int:
    """Coefficient of h^ell in c_ell, written out as a sum."""
    return sum(binom(2 * ell + 2, a) * binom(2 * ell - a + 1, ell + 1) * d ** a
               * (-1) ** (ell - a) for a in range(ell + 1))


def landweber_binding_symbolic(ell: int, lam: Partition) -> Poly:
    h, d = _h(), _d()
    s_empty = d ** (2 * ell + 1) * h ** ell
    if lam == ():
        return s_empty
    if lam == (1,):
        return s_empty * ((2 * ell + 2) * d - ell - 2) * h
    raise ValueError(f"only s_0 and s_1 occur in degrees <= ell+1, got {lam}")


def landweber_binding(setup: ProjectiveSetup, lam: Partition) -> Poly:
    return _at_degree(landweber_binding_symbolic(setup.ell, lam), setup.d)


@lru_cache(maxsize=None)
def loci_ssm_symbolic(ell: int) -> dict[SingularityId, Poly]:
    """SSM classes of the three loci as polynomials in h and d.

    For ell = 1 the first-order component sits outside the proven range N < ell;
    it is used anyway, which is what reproduces the ell = 1 column of the degree
    table.
    """
    top = ell + 1
    c_bind = {k: chern_binding_symbolic(ell, k) for k in range(1, top + 1)}
    s_bind = {(): landweber_binding_symbolic(ell, ()),
              (1,): landweber_binding_symbolic(ell, (1,))}
    out = {}
    for sing in LOCI:
        cp = ssm_truncated(sing, ell, 1, strict=ell >= 2)
        out[sing] = thom_evaluate(cp, c_bind, s_bind, target=HD, truncate_at=top)
    return out


def loci_ssm(setup: ProjectiveSetup) -> dict[SingularityId, Poly]:
    return {k: _at_degree(v, setup.d) for k, v in loci_ssm_symbolic(setup.ell).items()}


def csm_from_ssm(p: Poly, ell: int) -> Poly:
    """Multiply by c(T P^(ell+1)) = (1+h)^(ell+2), dropping h^(ell+2) and above."""
    return (p * (1 + p.ring.gen("h")) ** (ell + 2)).truncate(ell + 1)


def gamma_poly(csm: Poly, ell: int) -> Poly:
    """Replace h^k (the class of P^(ell+1-k)) by t^(ell+1-k)."""
    out = {}
    for exps, coeff in csm.terms():
        if set(exps) - {"h"}:
            raise ValueError("gamma_poly needs a polynomial in h alone")
        k = exps.get("h", 0)
        if k > ell + 1:
            raise ValueError(f"h^{k} exceeds the dimension {ell + 1}")
        out[T.pack({"t": ell + 1 - k})] = coeff
    return Poly(T, out)


def aluffi_involution(p: Poly) -> Poly:
    """p(t) -> (t p(-t-1) + p(0)) / (t+1), computed as p(0) - t p_+(-t-1)."""
    t = p.ring.gen("t")
    p0 = p.constant_term()
    shifted = {}
    for exps, coeff in p.terms():
        k = exps.get("t", 0)
        if k:
            shifted[p.ring.pack({"t": k - 1})] = coeff
    p_plus = Poly(p.ring, shifted)
    return p0 - t * p_plus.substitute({"t": -t - 1})


def sections_from_chi_poly(chi: Poly, ell: int) -> list[int]:
    """chi(X cap H_1 .. H_r) for r = 0..ell+1 from sum_r chi(X_r) (-t)^r."""
    return [_as_int(chi.coeff({"t": r}) * (-1) ** r) for r in range(ell + 2)]


@dataclass(frozen=True)
class ProjectiveReport:
    setup: ProjectiveSetup
    ssm: dict[SingularityId, Poly]
    csm: dict[SingularityId, Poly]
    gamma: dict[SingularityId, Poly]
    chi_poly: dict[str, Poly]
    section_euler: dict[str, list[int]]

    @property
    def euler(self) -> dict[str, int]:
        return {k: v[0] for k, v in self.section_euler.items()}

    @property
    def closure_degree(self) -> int:
        return self.section_euler["closure"][1]


def report(setup: ProjectiveSetup) -> ProjectiveReport:
    ell = setup.ell
    ssm = loci_ssm(setup)
    csm = {k: csm_from_ssm(v, ell) for k, v in ssm.items()}
    gamma = {k: gamma_poly(v, ell) for k, v in csm.items()}
    chi = {k.value: aluffi_involution(v) for k, v in gamma.items()}
    # the closure of the double point locus is A_0^2 together with A_1
    chi["closure"] = chi["A02"] + chi["A1"]
    sections = {k: sections_from_chi_poly(v, ell) for k, v in chi.items()}
    return ProjectiveReport(setup, ssm, csm, gamma, chi, sections)


def closure_degree(ell: int, d: int) -> int:
    return report(ProjectiveSetup(ell, d)).closure_degree


# -- complete intersections ------------------------------------------------------

def chi_complete_intersection(degrees) -> int:
    """Euler characteristic of a curve cut out by hypersurfaces of the given degrees
    in P^(len+1)."""
    prod = 1
    for di in degrees:
        prod *= di
    return -prod * (sum(degrees) - (len(degrees) + 2))


def divisors(n: int) -> list[int]:
    small, large = [], []
    i = 1
    while i * i <= n:
        if n % i == 0:
            small.append(i)
            if i * i != n:
                large.append(n // i)
        i += 1
    return small + large[::-1]


def factorizations(n: int, parts: int, min_factor: int = 1):
    """Nondecreasing tuples of ``parts`` positive integers >= min_factor with product n."""
    if parts == 0:
        if n == 1:
            yield ()
        return
    if parts == 1:
        if n >= min_factor:
            yield (n,)
        return
    for f in divisors(n):
        if f < min_factor:
            continue
        if f ** parts > n:
            break
        for rest in factorizations(n // f, parts - 1, f):
            yield (f,) + rest


def ci_candidates(ell: int, d: int) -> tuple[ProjectiveReport, list[tuple[tuple[int, ...], int]]]:
    rep = report(ProjectiveSetup(ell, d))
    deg = rep.closure_degree
    cands = []
    if deg > 0:
        cands = [(f, chi_complete_intersection(f)) for f in factorizations(deg, ell)]
    return rep, cands


def ci_feasible(ell: int, d: int) -> list[tuple[int, ...]]:
    """Degree tuples of complete intersections matching the closure's degree and chi."""
    rep, cands = ci_candidates(ell, d)
    target = rep.euler["closure"]
    return [f for f, chi in cands if chi == target]
