"""sl3 weight combinatorics: quantum integers, dimensions and twists.

Dominant weights are written in the fundamental-weight basis, so
Weight(m1, m2) stands for m1*w1 + m2*w2.  The invariant pairing has Gram
matrix [[2/3, 1/3], [1/3, 2/3]] on (w1, w2); the simple roots are
a1 = 2*w1 - w2 and a2 = -w1 + 2*w2.  Quantum dimensions and twists are
ScaledLaurent values at scale 6, so half- and third-integer exponents
stay exact integers on the internal lattice.
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from typing import Mapping, NamedTuple, Union

from .laurent import ScaledLaurent, ScaleError

__all__ = [
    "Weight",
    "WeightLike",
    "SignedWeightSum",
    "RootDataSl3",
    "ROOT_DATA",
    "qint",
    "pairing",
    "dimension",
    "qdim_closed",
    "qdim_weyl",
    "twist_monomial",
    "twist_weyl_check",
]


class Weight(NamedTuple):
    """A weight m1*w1 + m2*w2 in the fundamental-weight basis."""

    m1: int
    m2: int


WeightLike = Union[Weight, tuple[int, int]]


def _as_weight(w: WeightLike) -> Weight:
    wt = Weight(*w)
    if not (isinstance(wt.m1, int) and isinstance(wt.m2, int)):
        raise TypeError(f"weight coordinates must be ints, got {wt!r}")
    return wt


def _as_dominant(w: WeightLike) -> Weight:
    wt = _as_weight(w)
    if wt.m1 < 0 or wt.m2 < 0:
        raise ValueError(f"weight {wt} is not dominant")
    return wt


@dataclass(frozen=True)
class RootDataSl3:
    """Root system constants for sl3 in fundamental-weight coordinates."""

    alpha1: tuple[int, int] = (2, -1)
    alpha2: tuple[int, int] = (-1, 2)
    rho: tuple[int, int] = (1, 1)

    @property
    def positive_roots(self) -> tuple[tuple[int, int], ...]:
        a1, a2 = self.alpha1, self.alpha2
        return (a1, a2, (a1[0] + a2[0], a1[1] + a2[1]))


ROOT_DATA = RootDataSl3()


def pairing(u: tuple[int, int], v: tuple[int, int]) -> Fraction:
    """Invariant bilinear form of two vectors in w1/w2 coordinates.

    Normalized so that roots have squared length 2; values lie in (1/3)Z.
    """
    u1, u2 = u
    v1, v2 = v
    return Fraction(4 * u1 * v1 + 2 * (u1 * v2 + u2 * v1) + 4 * u2 * v2, 6)


def qint(n: int, scale: int = 6) -> ScaledLaurent:
    """Balanced quantum integer [n] = q^((n-1)/2) + ... + q^(-(n-1)/2).

    [0] is the zero polynomial and [1] = 1.  The scale must be divisible
    by 2 so the half-integer exponents are representable.
    """
    if not isinstance(n, int) or n < 0:
        raise ValueError(f"[n] needs an integer n >= 0, got {n!r}")
    if scale % 2:
        raise ScaleError(f"scale {scale} cannot represent half-integer exponents")
    half = scale // 2
    return ScaledLaurent(scale, {half * (n - 1 - 2 * i): 1 for i in range(n)})


def dimension(w: WeightLike) -> int:
    """Classical dimension (m1+1)(m2+1)(m1+m2+2)/2 of the irreducible V_w."""
    m1, m2 = _as_dominant(w)
    return (m1 + 1) * (m2 + 1) * (m1 + m2 + 2) // 2


def qdim_closed(w: WeightLike, scale: int = 6) -> ScaledLaurent:
    """Quantum dimension [m1+1][m2+1][m1+m2+2]/[2], an exact quotient."""
    m1, m2 = _as_dominant(w)
    prod = qint(m1 + 1, scale) * qint(m2 + 1, scale) * qint(m1 + m2 + 2, scale)
    return prod.div_exact(qint(2, scale))


def qdim_weyl(w: WeightLike, scale: int = 6) -> ScaledLaurent:
    """Quantum dimension via the Weyl-form product over positive roots.

    Independent of qdim_closed: evaluates prod [(w+rho, a)] / prod [(rho, a)]
    using the pairing, rather than the hardcoded three-factor formula.
    """
    wt = _as_dominant(w)
    shifted = (wt.m1 + ROOT_DATA.rho[0], wt.m2 + ROOT_DATA.rho[1])
    num = ScaledLaurent.one(scale)
    den = ScaledLaurent.one(scale)
    for alpha in ROOT_DATA.positive_roots:
        top = pairing(shifted, alpha)
        bot = pairing(ROOT_DATA.rho, alpha)
        if top.denominator != 1 or bot.denominator != 1:
            raise ArithmeticError(f"non-integral root pairing for weight {wt}")
        num = num * qint(int(top), scale)
        den = den * qint(int(bot), scale)
    return num.div_exact(den)


def _twist_exponent_data(w: WeightLike) -> tuple[int, int]:
    m1, m2 = _as_dominant(w)
    quad = m1 * m1 + m1 * m2 + m2 * m2
    lin = m1 + m2
    return quad, lin


def twist_monomial(w: WeightLike, num: int, den: int = 1,
                   scale: int = 6) -> ScaledLaurent:
    """The twist power theta_w^(num/den) as a one-term polynomial.

    theta_w = q^((m1^2 + m1*m2 + m2^2)/3 + m1 + m2).  The scaled exponent
    must land on the integer lattice of the requested scale; den in {1, 2}
    at scale 6 always does, other combinations raise ScaleError when they
    do not.
    """
    if not isinstance(num, int) or not isinstance(den, int) or den < 1:
        raise ValueError(f"twist power {num!r}/{den!r} is not a valid fraction")
    quad, lin = _twist_exponent_data(w)
    e_num = scale * num * (quad + 3 * lin)
    q, r = divmod(e_num, 3 * den)
    if r:
        raise ScaleError(
            f"twist exponent {num}/{den} for {tuple(w)} is not on the "
            f"1/{scale} lattice")
    return ScaledLaurent(scale, {q: 1})


def twist_weyl_check(w: WeightLike) -> bool:
    """Check the twist exponent against (1/2)(w, w + 2*rho).

    Both sides are exact rationals; returns True when the closed-form
    exponent (quad/3 + lin) agrees with the pairing form.
    """
    wt = _as_dominant(w)
    quad, lin = _twist_exponent_data(wt)
    shifted = (wt.m1 + 2 * ROOT_DATA.rho[0], wt.m2 + 2 * ROOT_DATA.rho[1])
    return Fraction(1, 2) * pairing(tuple(wt), shifted) == Fraction(quad, 3) + lin


class SignedWeightSum:
    """Finite Z-linear combination of dominant weights.

    Immutable mapping Weight -> nonzero signed multiplicity, with a
    deterministic lexicographic term order for rendering and JSON.
    """

    __slots__ = ("_terms",)

    def __init__(self, terms: Union[Mapping, list, tuple] = ()):
        pairs = terms.items() if isinstance(terms, Mapping) else terms
        clean: dict[Weight, int] = {}
        for w, c in pairs:
            wt = _as_dominant(w)
            if not isinstance(c, int):
                raise TypeError(f"multiplicity {c!r} is not an int")
            if c:
                v = clean.get(wt, 0) + c
                if v:
                    clean[wt] = v
                elif wt in clean:
                    del clean[wt]
        object.__setattr__(self, "_terms", clean)

    def __setattr__(self, name, value):
        raise AttributeError("SignedWeightSum is immutable")

    def items(self) -> tuple[tuple[Weight, int], ...]:
        return tuple(sorted(self._terms.items()))

    def __getitem__(self, w: WeightLike) -> int:
        return self._terms.get(_as_weight(w), 0)

    def __len__(self) -> int:
        return len(self._terms)

    def __bool__(self) -> bool:
        return bool(self._terms)

    def __iter__(self):
        return iter(self.items())

    def __eq__(self, other) -> bool:
        if not isinstance(other, SignedWeightSum):
            return NotImplemented
        return self._terms == other._terms

    def __hash__(self) -> int:
        return hash(frozenset(self._terms.items()))

    def __repr__(self) -> str:
        if len(self._terms) <= 8:
            return f"SignedWeightSum({self.to_text()!r})"
        return f"<SignedWeightSum terms={len(self._terms)}>"

    def to_text(self) -> str:
        """Signed list like "+V_{0,0}-V_{1,2}", lexicographic weight order."""
        if not self._terms:
            return "0"
        parts = []
        for (m1, m2), c in self.items():
            sign = "+" if c > 0 else "-"
            mag = "" if abs(c) == 1 else str(abs(c))
            parts.append(f"{sign}{mag}V_{{{m1},{m2}}}")
        return "".join(parts)

    def to_json_dict(self) -> dict:
        return {"terms": [[w.m1, w.m2, c] for w, c in self.items()]}

    @classmethod
    def from_json_dict(cls, data: Mapping) -> "SignedWeightSum":
        return cls([((int(m1), int(m2)), int(c)) for m1, m2, c in data["terms"]])
