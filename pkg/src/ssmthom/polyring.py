"""Exact sparse multivariate polynomials over the rationals with a per-variable grading.

Coefficients are ``int`` or :class:`fractions.Fraction` (a Fraction with unit
denominator is always collapsed to ``int``).  Monomials are packed into a single
Python integer, ``_BITS`` bits per variable, so that monomial multiplication is
integer addition.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction
from numbers import Rational
from typing import Iterable, Mapping, Union

_BITS = 16
_FIELD = (1 << _BITS) - 1
# exponents must stay below 2**(_BITS-1) so that a product never carries
_MAX_EXP = 1 << (_BITS - 1)

Scalar = Union[int, Fraction]


class ContextError(ValueError):
    """Operands live in different rings."""


class SubstitutionError(KeyError):
    """A variable has neither a binding nor a counterpart in the target ring."""


class NotInvertibleError(ZeroDivisionError):
    """Series inversion of an element without an invertible constant term."""


def _canon(c) -> Scalar:
    if isinstance(c, bool) or not isinstance(c, Rational):
        raise TypeError(f"coefficients must be exact rationals, got {type(c).__name__}")
    if isinstance(c, int):
        return c
    c = Fraction(c)
    return c.numerator if c.denominator == 1 else c


def format_rational(c: Scalar) -> str:
    c = _canon(c)
    if isinstance(c, int):
        return str(c)
    return f"{c.numerator}/{c.denominator}"


@dataclass(frozen=True)
class Variable:
    name: str
    degree: int = 1
    latex: str | None = field(default=None, compare=False)

    def __post_init__(self):
        if self.degree < 0:
            raise ValueError(f"negative degree for {self.name}")


class Ring:
    """An ordered set of graded variables.  Rings with equal variable lists are equal."""

    def __init__(self, variables: Iterable[Variable]):
        self.variables = tuple(variables)
        self.index = {v.name: i for i, v in enumerate(self.variables)}
        if len(self.index) != len(self.variables):
            raise ValueError("duplicate variable names")
        self._hash = hash(self.variables)
        self._degree_cache: dict[int, int] = {0: 0}
        self._overflow = sum(1 << (_BITS * i + _BITS - 1) for i in range(len(self.variables)))

    def __eq__(self, other):
        if self is other:
            return True
        return isinstance(other, Ring) and self.variables == other.variables

    def __hash__(self):
        return self._hash

    def __repr__(self):
        return f"Ring({', '.join(v.name for v in self.variables)})"

    def __contains__(self, name: str) -> bool:
        return name in self.index

    # -- monomial keys ------------------------------------------------------
    def pack(self, exponents: Mapping[str, int]) -> int:
        key = 0
        for name, e in exponents.items():
            if e < 0 or e >= _MAX_EXP:
                raise ValueError(f"exponent {e} out of range for {name}")
            if e:
                key |= e << (_BITS * self.index[name])
        return key

    def unpack(self, key: int) -> tuple[int, ...]:
        return tuple((key >> (_BITS * i)) & _FIELD for i in range(len(self.variables)))

    def key_degree(self, key: int) -> int:
        deg = self._degree_cache.get(key)
        if deg is None:
            deg = 0
            k, i = key, 0
            while k:
                e = k & _FIELD
                if e:
                    deg += e * self.variables[i].degree
                k >>= _BITS
                i += 1
            self._degree_cache[key] = deg
        return deg

    # -- constructors --------------------------------------------------------
    def gen(self, name: str) -> "Poly":
        return Poly(self, {1 << (_BITS * self.index[name]): 1})

    def gens(self) -> tuple["Poly", ...]:
        return tuple(self.gen(v.name) for v in self.variables)

    def const(self, c) -> "Poly":
        return Poly(self, {0: c})

    def zero(self) -> "Poly":
        return Poly(self)

    def one(self) -> "Poly":
        return Poly(self, {0: 1})

    def monomial(self, exponents: Mapping[str, int], coeff=1) -> "Poly":
        return Poly(self, {self.pack(exponents): coeff})


class Poly:
    """Immutable polynomial in a :class:`Ring`."""

    __slots__ = ("ring", "_terms")

    def __init__(self, ring: Ring, terms: Mapping[int, Scalar] | None = None):
        self.ring = ring
        clean = {}
        if terms:
            for k, c in terms.items():
                c = _canon(c)
                if c:
                    clean[k] = c
        self._terms = clean

    @classmethod
    def _raw(cls, ring: Ring, terms: dict) -> "Poly":
        p = cls.__new__(cls)
        p.ring = ring
        p._terms = terms
        return p

    # -- coercion ------------------------------------------------------------
    def _coerce(self, other) -> "Poly":
        if isinstance(other, Poly):
            if other.ring is not self.ring and other.ring != self.ring:
                raise ContextError(f"{self.ring!r} vs {other.ring!r}")
            return other
        return Poly(self.ring, {0: other})

    # -- arithmetic ------------------------------------------------------------
    def __add__(self, other):
        other = self._coerce(other)
        a, b = (self._terms, other._terms)
        if len(a) < len(b):
            a, b = b, a
        out = dict(a)
        for k, c in b.items():
            s = out.get(k, 0) + c
            if s:
                out[k] = _canon(s) if isinstance(s, Fraction) else s
            else:
                out.pop(k, None)
        return Poly._raw(self.ring, out)

    __radd__ = __add__

    def __neg__(self):
        return Poly._raw(self.ring, {k: -c for k, c in self._terms.items()})

    def __sub__(self, other):
        return self + (-self._coerce(other))

    def __rsub__(self, other):
        return self._coerce(other) - self

    def __mul__(self, other):
        if not isinstance(other, Poly):
            c = _canon(other)
            if not c:
                return Poly._raw(self.ring, {})
            return Poly._raw(self.ring, {k: _canon(v * c) for k, v in self._terms.items()})
        other = self._coerce(other)
        a, b = self._terms, other._terms
        if len(a) < len(b):
            a, b = b, a
        out: dict = {}
        get = out.get
        for kb, cb in b.items():
            for ka, ca in a.items():
                k = ka + kb
                out[k] = get(k, 0) + ca * cb
        if any(k & self.ring._overflow for k in out):
            raise OverflowError("exponent overflow in product")
        return Poly._raw(self.ring, {k: _canon(c) for k, c in out.items() if c})

    __rmul__ = __mul__

    def __truediv__(self, other):
        c = _canon(other)
        if not c:
            raise ZeroDivisionError("division by zero scalar")
        return self * (Fraction(1) / c)

    def __pow__(self, k: int):
        if not isinstance(k, int) or k < 0:
            raise ValueError("exponent must be a nonnegative integer")
        result = self.ring.one()
        base = self
        while k:
            if k & 1:
                result = result * base
            k >>= 1
            if k:
                base = base * base
        return result

    def __eq__(self, other):
        if isinstance(other, Poly):
            return self.ring == other.ring and self._terms == other._terms
        try:
            other = _canon(other)
        except TypeError:
            return NotImplemented
        if not other:
            return not self._terms
        return self._terms == {0: other}

    def __hash__(self):
        return hash((self.ring, frozenset(self._terms.items())))

    def __bool__(self):
        return bool(self._terms)

    def __len__(self):
        return len(self._terms)

    # -- grading ---------------------------------------------------------------
    def degree(self) -> int:
        """Highest graded degree; -1 for the zero polynomial."""
        deg = self.ring.key_degree
        return max((deg(k) for k in self._terms), default=-1)

    def graded_part(self, D: int) -> "Poly":
        deg = self.ring.key_degree
        return Poly._raw(self.ring, {k: c for k, c in self._terms.items() if deg(k) == D})

    def truncate(self, D: int) -> "Poly":
        deg = self.ring.key_degree
        return Poly._raw(self.ring, {k: c for k, c in self._terms.items() if deg(k) <= D})

    def graded_parts(self) -> dict[int, "Poly"]:
        deg = self.ring.key_degree
        parts: dict[int, dict] = {}
        for k, c in self._terms.items():
            parts.setdefault(deg(k), {})[k] = c
        return {d: Poly._raw(self.ring, t) for d, t in sorted(parts.items())}

    def is_homogeneous(self, D: int | None = None) -> bool:
        degs = {self.ring.key_degree(k) for k in self._terms}
        if not degs:
            return True
        return len(degs) == 1 and (D is None or degs == {D})

    # -- inspection ------------------------------------------------------------
    def constant_term(self) -> Scalar:
        return self._terms.get(0, 0)

    def coeff(self, exponents: Mapping[str, int] | None = None) -> Scalar:
        return self._terms.get(self.ring.pack(exponents or {}), 0)

    def is_constant(self) -> bool:
        return all(k == 0 for k in self._terms)

    def variables_used(self) -> set[str]:
        used = 0
        for k in self._terms:
            used |= k
        names = set()
        for i, v in enumerate(self.ring.variables):
            if (used >> (_BITS * i)) & _FIELD:
                names.add(v.name)
        return names

    def _sort_key(self, key: int):
        # ascending degree, then lexicographically descending exponent vectors
        return (self.ring.key_degree(key), tuple(-e for e in self.ring.unpack(key)))

    def terms(self) -> list[tuple[dict[str, int], Scalar]]:
        """Terms in canonical order as ``(exponents, coefficient)`` pairs."""
        out = []
        names = [v.name for v in self.ring.variables]
        for key in sorted(self._terms, key=self._sort_key):
            exps = {n: e for n, e in zip(names, self.ring.unpack(key)) if e}
            out.append((exps, self._terms[key]))
        return out

    def raw_terms(self) -> dict[int, Scalar]:
        return dict(self._terms)

    # -- substitution ----------------------------------------------------------
    def substitute(
        self,
        bindings: Mapping[str, "Poly | Scalar"],
        target: Ring | None = None,
        truncate_at: int | None = None,
    ) -> "Poly":
        """Ring homomorphism image of ``self``.

        Variables without a binding are carried over by name into ``target``
        (default: this ring).  ``truncate_at`` drops target terms of degree above
        the bound while expanding; all target degrees are nonnegative, so this
        commutes with the final truncation.
        """
        target = target or self.ring
        images: list[Poly | None] = []
        used = self.variables_used()
        for v in self.ring.variables:
            if v.name not in used:
                images.append(None)
                continue
            if v.name in bindings:
                img = bindings[v.name]
                img = img if isinstance(img, Poly) else Poly(target, {0: img})
                if img.ring != target:
                    raise ContextError(f"binding for {v.name} lives in {img.ring!r}")
            elif v.name in target:
                img = target.gen(v.name)
            else:
                raise SubstitutionError(v.name)
            images.append(img)

        powers: dict[tuple[int, int], Poly] = {}

        def power(i: int, e: int) -> Poly:
            p = powers.get((i, e))
            if p is None:
                if e == 1:
                    p = images[i]
                else:
                    p = power(i, e - 1) * images[i]
                if truncate_at is not None:
                    p = p.truncate(truncate_at)
                powers[(i, e)] = p
            return p

        result = target.zero()
        nvars = len(self.ring.variables)
        for key, c in self._terms.items():
            term = Poly(target, {0: c})
            for i in range(nvars):
                e = (key >> (_BITS * i)) & _FIELD
                if e:
                    term = term * power(i, e)
                    if truncate_at is not None:
                        term = term.truncate(truncate_at)
                    if not term:
                        break
            result = result + term
        return result

    # -- printing --------------------------------------------------------------
    def __str__(self):
        if not self._terms:
            return "0"
        pieces = []
        for exps, c in self.terms():
            mono = "*".join(n if e == 1 else f"{n}^{e}" for n, e in exps.items())
            pieces.append(_join_term(c, mono, "*"))
        return _join_signed(pieces)

    def __repr__(self):
        return f"Poly({self})"

    def to_latex(self) -> str:
        if not self._terms:
            return "0"
        latex_name = {v.name: (v.latex or v.name) for v in self.ring.variables}
        pieces = []
        for exps, c in self.terms():
            mono = "".join(
                latex_name[n] if e == 1 else f"{latex_name[n]}^{{{e}}}" for n, e in exps.items()
            )
            pieces.append(_join_term(c, mono, "", latex=True))
        return _join_signed(pieces)


def _join_term(c: Scalar, mono: str, sep: str, latex: bool = False) -> tuple[bool, str]:
    neg = c < 0
    a = -c if neg else c
    if latex and isinstance(a, Fraction):
        num = f"\\frac{{{a.numerator}}}{{{a.denominator}}}"
    else:
        num = format_rational(a)
    if not mono:
        return neg, num
    if a == 1:
        return neg, mono
    return neg, f"{num}{sep}{mono}"


def _join_signed(pieces: list[tuple[bool, str]]) -> str:
    out = []
    for i, (neg, body) in enumerate(pieces):
        if i == 0:
            out.append(f"-{body}" if neg else body)
        else:
            out.append(f" - {body}" if neg else f" + {body}")
    return "".join(out)


def graded_part(p: Poly, D: int) -> Poly:
    return p.graded_part(D)


def truncate(p: Poly, D: int) -> Poly:
    return p.truncate(D)


def substitute(p: Poly, bindings, target: Ring | None = None) -> Poly:
    return p.substitute(bindings, target)


def series_quotient(num: Poly, den: Poly, D: int) -> Poly:
    """``num / den`` as a formal power series, truncated at total degree ``D``.

    Solved degree by degree: ``q_k = (num_k - sum_{j>=1} den_j q_{k-j}) / den_0``.
    The degree-0 part of ``den`` must be a nonzero scalar.
    """
    den = num._coerce(den)
    den_parts = den.graded_parts()
    den0 = den_parts.get(0)
    if den0 is None or not den0.is_constant():
        raise NotInvertibleError("denominator needs a nonzero scalar constant term")
    inv0 = Fraction(1) / den0.constant_term()
    num_parts = num.graded_parts()
    q: list[Poly] = []
    for k in range(D + 1):
        acc = num_parts.get(k, num.ring.zero())
        for j, dj in den_parts.items():
            if 1 <= j <= k:
                acc = acc - dj * q[k - j]
        q.append(acc * inv0)
    result = num.ring.zero()
    for part in q:
        result = result + part
    return result
