"""Exact Laurent polynomials in a fractional power of q.

A ScaledLaurent with scale D represents an element of Z[q^(1/D), q^(-1/D)]:
the term c*q^(e/D) is stored as the dict entry e -> c with an arbitrary
precision integer coefficient.  The zero polynomial is the empty term map,
and zero coefficients are never stored.  All arithmetic is exact; division
is long division from the lowest exponent and must leave no remainder.
"""

from __future__ import annotations

from fractions import Fraction
from math import gcd
from typing import Iterable, Iterator, Mapping, Union

__all__ = [
    "LaurentError",
    "ScaleMismatchError",
    "ScaleError",
    "InexactDivisionError",
    "NonIntegralExponentError",
    "UndefinedDegreeError",
    "ScaledLaurent",
]


class LaurentError(Exception):
    """Base class for ScaledLaurent arithmetic errors."""


class ScaleMismatchError(LaurentError):
    """Binary operation on polynomials with different scales."""


class ScaleError(LaurentError):
    """A rescale or exponent does not land on the requested lattice."""


class InexactDivisionError(LaurentError):
    """Long division left a remainder (no integer Laurent quotient exists)."""


class NonIntegralExponentError(LaurentError):
    """Integer reduction requested for a polynomial with fractional exponents."""


class UndefinedDegreeError(LaurentError):
    """Degree span requested for the zero polynomial."""


TermsLike = Union[Mapping[int, int], Iterable[tuple[int, int]]]


class ScaledLaurent:
    """Sparse exact Laurent polynomial in q^(1/scale).

    Instances are immutable: every operation returns a new polynomial.
    """

    __slots__ = ("scale", "_terms")

    def __init__(self, scale: int, terms: TermsLike = ()):
        if not isinstance(scale, int) or scale < 1:
            raise ScaleError(f"scale must be a positive integer, got {scale!r}")
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[int, int] = {}
        for e, c in pairs:
            if not isinstance(e, int) or not isinstance(c, int):
                raise TypeError(f"term ({e!r}, {c!r}) is not an int pair")
            if c:
                v = clean.get(e, 0) + c
                if v:
                    clean[e] = v
                elif e in clean:
                    del clean[e]
        object.__setattr__(self, "scale", scale)
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("ScaledLaurent is immutable")

    # -- constructors ------------------------------------------------

    @classmethod
    def zero(cls, scale: int = 6) -> "ScaledLaurent":
        return cls(scale)

    @classmethod
    def one(cls, scale: int = 6) -> "ScaledLaurent":
        return cls(scale, {0: 1})

    @classmethod
    def monomial(cls, scale: int, exponent: int, coeff: int = 1) -> "ScaledLaurent":
        return cls(scale, {exponent: coeff})

    # -- inspection --------------------------------------------------

    def items(self) -> tuple[tuple[int, int], ...]:
        """Terms as (scaled exponent, coefficient), ascending exponent."""
        return tuple(sorted(self._terms.items()))

    def coefficient(self, exponent: int) -> int:
        return self._terms.get(exponent, 0)

    @property
    def term_count(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self) -> Iterator[tuple[int, int]]:
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, ScaledLaurent):
            return NotImplemented
        return self.scale == other.scale and self._terms == other._terms

    def __hash__(self) -> int:
        return hash((self.scale, frozenset(self._terms.items())))

    def __repr__(self) -> str:
        if len(self._terms) <= 8:
            return f"ScaledLaurent({self.scale}, {self.to_text()!r})"
        lo, hi = min(self._terms), max(self._terms)
        return (f"<ScaledLaurent scale={self.scale} terms={len(self._terms)}"
                f" exponents=[{lo},{hi}]>")

    # -- ring operations ---------------------------------------------

    def _check_scale(self, other: "ScaledLaurent") -> None:
        if self.scale != other.scale:
            raise ScaleMismatchError(
                f"scale mismatch: {self.scale} vs {other.scale}")

    def __add__(self, other: "ScaledLaurent") -> "ScaledLaurent":
        if not isinstance(other, ScaledLaurent):
            return NotImplemented
        self._check_scale(other)
        out = dict(self._terms)
        for e, c in other._terms.items():
            v = out.get(e, 0) + c
            if v:
                out[e] = v
            elif e in out:
                del out[e]
        return ScaledLaurent(self.scale, out)

    def __neg__(self) -> "ScaledLaurent":
        return ScaledLaurent(self.scale, {e: -c for e, c in self._terms.items()})

    def __sub__(self, other: "ScaledLaurent") -> "ScaledLaurent":
        if not isinstance(other, ScaledLaurent):
            return NotImplemented
        return self + (-other)

    def scalar_mul(self, c: int) -> "ScaledLaurent":
        if not isinstance(c, int):
            raise TypeError("scalar must be an int")
        if c == 0:
            return ScaledLaurent(self.scale)
        return ScaledLaurent(self.scale, {e: c * v for e, v in self._terms.items()})

    def __mul__(self, other) -> "ScaledLaurent":
        if isinstance(other, int):
            return self.scalar_mul(other)
        if not isinstance(other, ScaledLaurent):
            return NotImplemented
        self._check_scale(other)
        a, b = self._terms, other._terms
        if len(a) > len(b):
            a, b = b, a
        out: dict[int, int] = {}
        for e1, c1 in a.items():
            for e2, c2 in b.items():
                k = e1 + e2
                v = out.get(k, 0) + c1 * c2
                if v:
                    out[k] = v
                elif k in out:
                    del out[k]
        return ScaledLaurent(self.scale, out)

    def __rmul__(self, other) -> "ScaledLaurent":
        if isinstance(other, int):
            return self.scalar_mul(other)
        return NotImplemented

    def div_exact(self, divisor: "ScaledLaurent") -> "ScaledLaurent":
        """Exact quotient self / divisor.

        Long division from the lowest exponent on the common exponent
        lattice.  Raises InexactDivisionError unless divisor * quotient
        reproduces self exactly with integer coefficients.
        """
        if not isinstance(divisor, ScaledLaurent):
            raise TypeError("divisor must be a ScaledLaurent")
        self._check_scale(divisor)
        if not divisor._terms:
            raise ZeroDivisionError("division by the zero polynomial")
        if not self._terms:
            return ScaledLaurent(self.scale)
        f_items = sorted(self._terms.items())
        g_items = sorted(divisor._terms.items())
        f_lo = f_items[0][0]
        g_lo = g_items[0][0]
        step = 0
        for e, _ in f_items:
            step = gcd(step, e - f_lo)
        for e, _ in g_items:
            step = gcd(step, e - g_lo)
        if step == 0:
            # monomial / monomial
            q, r = divmod(f_items[0][1], g_items[0][1])
            if r:
                raise InexactDivisionError(
                    "monomial coefficient not divisible")
            return ScaledLaurent(self.scale, {f_lo - g_lo: q})
        nf = (f_items[-1][0] - f_lo) // step + 1
        ng = (g_items[-1][0] - g_lo) // step + 1
        if nf < ng:
            raise InexactDivisionError("divisor span exceeds dividend span")
        fa = [0] * nf
        for e, c in f_items:
            fa[(e - f_lo) // step] = c
        g0 = g_items[0][1]
        g_rest = [((e - g_lo) // step, c) for e, c in g_items[1:]]
        nq = nf - ng + 1
        quot = [0] * nq
        for i in range(nq):
            c = fa[i]
            if c:
                qc, r = divmod(c, g0)
                if r:
                    raise InexactDivisionError(
                        f"coefficient {c} not divisible by {g0} at step {i}")
                quot[i] = qc
                for off, gc in g_rest:
                    fa[i + off] -= qc * gc
        if any(fa[nq:]):
            raise InexactDivisionError("nonzero remainder")
        base = f_lo - g_lo
        return ScaledLaurent(
            self.scale, {base + i * step: c for i, c in enumerate(quot) if c})

    # -- structure maps ----------------------------------------------

    def mirror(self) -> "ScaledLaurent":
        """The image under q -> 1/q (all exponents negated)."""
        return ScaledLaurent(self.scale, {-e: c for e, c in self._terms.items()})

    def eval_one(self) -> int:
        """The value at q = 1, i.e. the sum of all coefficients."""
        return sum(self._terms.values())

    def degree_span(self) -> tuple[Fraction, Fraction]:
        """(lowest, highest) exponent as exact rationals in lowest terms."""
        if not self._terms:
            raise UndefinedDegreeError("degree of the zero polynomial")
        return (Fraction(min(self._terms), self.scale),
                Fraction(max(self._terms), self.scale))

    def rescale(self, new_scale: int) -> "ScaledLaurent":
        """Re-express on the lattice Z/new_scale.

        Allowed whenever every exponent e/scale equals some e'/new_scale
        with integer e'; otherwise raises ScaleError.
        """
        if not isinstance(new_scale, int) or new_scale < 1:
            raise ScaleError(f"scale must be a positive integer, got {new_scale!r}")
        if new_scale == self.scale:
            return self
        out = {}
        for e, c in self._terms.items():
            num = e * new_scale
            q, r = divmod(num, self.scale)
            if r:
                raise ScaleError(
                    f"exponent {e}/{self.scale} not representable at scale {new_scale}")
            out[q] = c
        return ScaledLaurent(new_scale, out)

    def as_integer_laurent(self) -> "ScaledLaurent":
        """Reduce to scale 1; every exponent must be an integer."""
        try:
            return self.rescale(1)
        except ScaleError as exc:
            raise NonIntegralExponentError(str(exc)) from None

    # -- serialization -----------------------------------------------

    def to_text(self) -> str:
        """Human-readable form, ascending exponents.

        Terms render as c*q^e with reduced rational exponents, for example
        "1*q^24 + 2*q^(51/2) - 1*q^30".  The zero polynomial renders "0".
        """
        if not self._terms:
            return "0"
        parts: list[str] = []
        for e, c in self.items():
            frac = Fraction(e, self.scale)
            if frac.denominator == 1:
                es = str(frac.numerator)
            else:
                es = f"({frac.numerator}/{frac.denominator})"
            term = f"{abs(c)}*q^{es}"
            if not parts:
                parts.append(term if c > 0 else f"-{term}")
            else:
                parts.append(f" + {term}" if c > 0 else f" - {term}")
        return "".join(parts)

    def to_json_dict(self) -> dict:
        """JSON form: scale plus [exponent, coefficient-string] pairs."""
        return {
            "scale": self.scale,
            "terms": [[e, str(c)] for e, c in self.items()],
        }

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "ScaledLaurent":
        scale = data["scale"]
        terms = [(int(e), int(c)) for e, c in data["terms"]]
        return cls(scale, terms)
