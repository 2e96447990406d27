"""Symmetric functions, the Toeplitz determinants S_(m), the c<->s swap and the
identity corpus that certifies the algebra behind the A_0^2 and A_1 formulas."""

from __future__ import annotations

import math
from dataclasses import dataclass
from functools import lru_cache
from typing import Iterator, Sequence

from .polyring import Poly, Ring, Variable, series_quotient

Partition = tuple[int, ...]


def partition(parts: Sequence[int]) -> Partition:
    """Canonical (weakly decreasing) form of a multiset of positive parts."""
    if any(p <= 0 for p in parts):
        raise ValueError(f"partition parts must be positive: {parts}")
    return tuple(sorted(parts, reverse=True))


def partitions(n: int, max_part: int | None = None) -> Iterator[Partition]:
    """All partitions of ``n`` with descending parts, in lexicographically descending order."""
    if max_part is None:
        max_part = n
    if n == 0:
        yield ()
        return
    for first in range(min(n, max_part), 0, -1):
        for rest in partitions(n - first, first):
            yield (first,) + rest


def binom(n: int, k: int) -> int:
    """Binomial coefficient, zero outside 0 <= k <= n."""
    if k < 0 or n < 0 or k > n:
        return 0
    return math.comb(n, k)


# -- symbol naming --------------------------------------------------------------

def c_name(i: int) -> str:
    return f"c_{i}"


def s_name(lam: Partition) -> str:
    if not lam:
        return "s_0"
    if all(p < 10 for p in lam):
        return "s_" + "".join(map(str, lam))
    return "s_{" + ",".join(map(str, lam)) + "}"


def s_latex(lam: Partition) -> str:
    if not lam:
        return r"s_\emptyset"
    sep = "" if all(p < 10 for p in lam) else ","
    return "s_{" + sep.join(map(str, lam)) + "}"


@lru_cache(maxsize=None)
def chern_ring(n: int) -> Ring:
    """Ring of c_1..c_n with deg c_i = i."""
    return Ring(Variable(c_name(i), i, f"c_{{{i}}}") for i in range(1, n + 1))


@lru_cache(maxsize=None)
def class_ring(ell: int) -> Ring:
    """Ring of the class symbols for parameter ``ell``.

    c_1..c_{2ell} and s_lambda for |lambda| <= ell, deg s_lambda = ell + |lambda|.
    Within a weight, s-symbols are ordered with more parts first so that the
    canonical print order reads s_{111}, s_{21}, s_3.
    """
    if ell < 1:
        raise ValueError("ell must be positive")
    cs = [Variable(c_name(i), i, f"c_{{{i}}}") for i in range(1, 2 * ell + 1)]
    ss = []
    for w in range(ell + 1):
        for lam in sorted(partitions(w)):
            ss.append(Variable(s_name(lam), ell + w, s_latex(lam)))
    return Ring(cs + ss)


def parse_symbol(name: str) -> tuple[str, object]:
    """Inverse of :func:`c_name` / :func:`s_name`: ("c", i) or ("s", partition)."""
    if name.startswith("c_"):
        return "c", int(name[2:])
    if name == "s_0":
        return "s", ()
    if name.startswith("s_{"):
        return "s", tuple(int(p) for p in name[3:-1].split(","))
    if name.startswith("s_"):
        return "s", tuple(int(p) for p in name[2:])
    raise ValueError(f"not a class symbol: {name}")


# -- symmetric polynomials ------------------------------------------------------

def elem_sym(k: int, xs: Sequence[Poly]) -> Poly:
    """e_k(xs); e_0 = 1 and e_k = 0 for k > len(xs)."""
    if not xs:
        raise ValueError("need at least one argument to fix the ring")
    ring = xs[0].ring
    if k < 0 or k > len(xs):
        return ring.zero()
    # e[j] holds e_j of the prefix processed so far
    e = [ring.one()] + [ring.zero()] * k
    for x in xs:
        for j in range(k, 0, -1):
            e[j] = e[j] + x * e[j - 1]
    return e[k]


def complete_sym(k: int, xs: Sequence[Poly]) -> Poly:
    """h_k(xs); h_0 = 1."""
    if not xs:
        raise ValueError("need at least one argument to fix the ring")
    ring = xs[0].ring
    if k < 0:
        return ring.zero()
    h = [ring.one()] + [ring.zero()] * k
    for x in xs:
        # h_j(prefix + x) = h_j(prefix) + x * h_{j-1}(prefix + x)
        for j in range(1, k + 1):
            h[j] = h[j] + x * h[j - 1]
    return h[k]


def s_det(m: int, ring: Ring | None = None) -> Poly:
    """S_(m) in c_1..c_m via S_(m) = sum_i (-1)^(i+1) c_i S_(m-i), S_(0) = 1."""
    if m < 0:
        raise ValueError("m must be nonnegative")
    ring = ring or chern_ring(max(m, 1))
    return _s_det_table(m, ring)[m]


@lru_cache(maxsize=64)
def _s_det_table(m: int, ring: Ring) -> tuple[Poly, ...]:
    c = [None] + [ring.gen(c_name(i)) for i in range(1, m + 1)]
    S = [ring.one()]
    for n in range(1, m + 1):
        acc = ring.zero()
        for i in range(1, n + 1):
            term = c[i] * S[n - i]
            acc = acc + term if i % 2 else acc - term
        S.append(acc)
    return tuple(S)


def c_to_s_swap(p: Poly, ell: int) -> Poly:
    """Replace each c-monomial prod c_{lambda_i} by s_lambda, keeping coefficients."""
    target = class_ring(ell)
    c_index = {}
    for i, v in enumerate(p.ring.variables):
        if v.name in p.variables_used():
            if not v.name.startswith("c_"):
                raise ValueError(f"c_to_s_swap expects a pure c-polynomial, found {v.name}")
            c_index[v.name] = int(v.name[2:])
    out = target.zero()
    for exps, coeff in p.terms():
        parts = []
        for name, e in exps.items():
            parts.extend([c_index[name]] * e)
        lam = partition(parts)
        out = out + target.gen(s_name(lam)) * coeff
    return out


# -- identity corpus --------------------------------------------------------------

@dataclass(frozen=True)
class IdentityResult:
    family: str
    params: tuple[tuple[str, int], ...]
    passed: bool

    def label(self) -> str:
        return f"({self.family}) " + " ".join(f"{k}={v}" for k, v in self.params)


IDENTITY_FAMILIES = {
    "a": "Newton relation sum (-1)^i e_i h_{m-i} = 0",
    "b": "root expansion prod (x - X_j) = sum (-1)^k e_k x^(n-k)",
    "c": "S_(m) at A_1 classes = sum 2^(i-1) a^i h_{m-i}(a+b) + h_m(a+b)",
    "d": "vanishing sum with free e, h indeterminates",
    "e": "shift lemma h_k(a+b) and its inverse",
    "f": "h_N(a, b) = sum_k S_(N-k) C(l+N-1, k) (-a)^k",
    "g": "alternating hockey stick",
}


@lru_cache(maxsize=None)
def _roots_ring(n: int) -> Ring:
    return Ring([Variable("x", 1)] + [Variable(f"X_{j}", 1) for j in range(1, n + 1)])


def check_newton(m: int, n: int) -> bool:
    xs = _roots_ring(n).gens()[1:]
    total = xs[0].ring.zero()
    for i in range(m + 1):
        term = elem_sym(i, xs) * complete_sym(m - i, xs)
        total = total + term if i % 2 == 0 else total - term
    return not total


def check_root_expansion(n: int) -> bool:
    ring = _roots_ring(n)
    x, *xs = ring.gens()
    lhs = ring.one()
    for X in xs:
        lhs = lhs * (x - X)
    rhs = ring.zero()
    for k in range(n + 1):
        rhs = rhs + elem_sym(k, xs) * x ** (n - k) * (-1) ** k
    return lhs == rhs


@lru_cache(maxsize=None)
def _a1_ring(ell: int) -> Ring:
    return Ring([Variable("a", 1, r"\alpha")]
                + [Variable(f"b_{j}", 1, rf"\beta_{{{j}}}") for j in range(1, ell + 1)])


def a1_chern_classes(ell: int, D: int) -> list[Poly]:
    """c_0..c_D of (1+2a) prod(1+a+b_j) / (1+a), the A_1 germ's quotient classes."""

    ring = _a1_ring(ell)
    a, *bs = ring.gens()
    num = 1 + 2 * a
    for b in bs:
        num = num * (1 + a + b)
    series = series_quotient(num, 1 + a, D)
    return [series.graded_part(k) for k in range(D + 1)]


def _s_det_at(m: int, classes: Sequence[Poly]) -> Poly:
    S = [classes[0].ring.one()]
    for n in range(1, m + 1):
        acc = classes[0].ring.zero()
        for i in range(1, n + 1):
            term = classes[i] * S[n - i]
            acc = acc + term if i % 2 else acc - term
        S.append(acc)
    return S[m]


def check_s_expansion(ell: int, m: int) -> bool:
    ring = _a1_ring(ell)
    a, *bs = ring.gens()
    shifted = [a + b for b in bs]
    classes = a1_chern_classes(ell, m)
    lhs = _s_det_at(m, classes)
    rhs = complete_sym(m, shifted)
    for i in range(1, m + 1):
        rhs = rhs + 2 ** (i - 1) * a ** i * complete_sym(m - i, shifted)
    return lhs == rhs


def vanishing_sum(m: int) -> Poly:
    """The sum of the zero-sum lemma with e_1..e_m, h_0..h_m left as free symbols."""
    ring = Ring([Variable("a", 1)]
                + [Variable(f"e_{i}", i) for i in range(1, m + 1)]
                + [Variable(f"h_{i}", i) for i in range(0, m + 1)])
    a = ring.gen("a")
    e = {i: ring.gen(f"e_{i}") for i in range(1, m + 1)}
    h = {i: ring.gen(f"h_{i}") for i in range(0, m + 1)}

    def sign(n):
        return 1 if n % 2 == 0 else -1

    total = ring.zero()
    for i in range(1, m + 1):
        tail = ring.zero()
        for k in range(1, m - i + 1):
            tail = tail + 2 ** (k - 1) * a ** k * h[m - i - k]
        inner = e[i] * tail
        mixed = ring.zero()
        for j in range(1, i):
            # (-1)^(-(i-j)+1) == (-1)^(i-j+1)
            mixed = mixed + e[j] * a ** (i - j) * sign(i - j + 1)
        inner = inner + mixed * tail + h[m - i] * mixed
        total = total + inner * sign(i + 1)
    return total


def check_vanishing_sum(m: int) -> bool:
    return not vanishing_sum(m)


def check_shift_lemma(ell: int, k: int) -> bool:
    ring = _a1_ring(ell)
    a, *bs = ring.gens()
    shifted = [a + b for b in bs]
    forward = sum(
        (binom(ell + k - 1, k - j) * a ** (k - j) * complete_sym(j, bs) for j in range(k + 1)),
        ring.zero(),
    )
    inverse = sum(
        (binom(ell + k - 1, k - j) * (-a) ** (k - j) * complete_sym(j, shifted)
         for j in range(k + 1)),
        ring.zero(),
    )
    return complete_sym(k, shifted) == forward and complete_sym(k, bs) == inverse


def check_master_identity(ell: int, N: int) -> bool:
    ring = _a1_ring(ell)
    a, *_ = ring.gens()
    classes = a1_chern_classes(ell, N)
    rhs = ring.zero()
    for k in range(N + 1):
        rhs = rhs + _s_det_at(N - k, classes) * binom(ell + N - 1, k) * (-a) ** k
    return complete_sym(N, list(ring.gens())) == rhs


def hockey_stick_sides(r: int, c: int) -> tuple[int, int]:
    diagonal = sum(binom(r - c + i, i) * (-1) ** i for i in range(c))
    row = sum(2 ** (c - 1 - i) * (-1) ** i * binom(r, i) for i in range(c))
    return diagonal, row


def check_hockey_stick(r: int, c: int) -> bool:
    lhs, rhs = hockey_stick_sides(r, c)
    return lhs == rhs


def identity_suite(max_size: int = 8, max_ell: int = 4, max_k: int = 6,
                   max_r: int = 30) -> list[IdentityResult]:
    """Run every identity family over its parameter sweep; failures are reported, not raised."""
    results = []

    def record(family, ok, **params):
        results.append(IdentityResult(family, tuple(params.items()), bool(ok)))

    for n in range(1, max_size + 1):
        for m in range(1, max_size + 1):
            record("a", check_newton(m, n), m=m, n=n)
        record("b", check_root_expansion(n), n=n)
    for ell in range(1, max_ell + 1):
        for m in range(0, ell + 4):
            record("c", check_s_expansion(ell, m), ell=ell, m=m)
            record("f", check_master_identity(ell, m), ell=ell, N=m)
    for m in range(1, max_ell + 4):
        record("d", check_vanishing_sum(m), m=m)
    for ell in range(1, max_ell + 1):
        for k in range(0, max_k + 1):
            record("e", check_shift_lemma(ell, k), ell=ell, k=k)
    for r in range(1, max_r + 1):
        for c in range(1, r + 1):
            record("g", check_hockey_stick(r, c), r=r, c=c)
    return results
