"""Symmetric polynomials in three variables and a plethysm oracle.

Polynomials are sparse dicts mapping exponent triples (e1, e2, e3) to
integer coefficients.  Schur polynomials come from the bialternant ratio
det(x_i^(l_j + 3 - j)) / det(x_i^(3 - j)), computed by exact synthetic
division, so disordered or negative-adjacent indices straighten
automatically (possibly to zero).  The plethysm oracle applies an Adams
operation x_i -> x_i^a to a character and decomposes the result back
into the Schur basis; it is the independent cross-check for the closed
second-plethysm formula in the plethysm2 module.
"""

from __future__ import annotations

import functools
from itertools import permutations
from typing import Dict, Tuple

from .sl3rep import SignedWeightSum, Weight, WeightLike, _as_dominant

__all__ = [
    "SymPoly3",
    "GLIndex",
    "NotSymmetricError",
    "p_zero",
    "p_one",
    "p_add",
    "p_sub",
    "mul_sym",
    "adams",
    "is_symmetric",
    "straighten",
    "schur",
    "decompose_schur",
    "psi_oracle",
    "verify_lemma_LR",
    "verify_lemma_psi2_recurrence",
    "generic_row_at_m2_one",
]

SymPoly3 = Dict[Tuple[int, int, int], int]
GLIndex = Tuple[int, int, int]

_DELTA = (2, 1, 0)


class NotSymmetricError(ValueError):
    """Schur decomposition requested for a non-symmetric polynomial."""


def p_zero() -> SymPoly3:
    return {}


def p_one() -> SymPoly3:
    return {(0, 0, 0): 1}


def p_add(f: SymPoly3, g: SymPoly3) -> SymPoly3:
    out = dict(f)
    for mono, c in g.items():
        v = out.get(mono, 0) + c
        if v:
            out[mono] = v
        elif mono in out:
            del out[mono]
    return out


def p_sub(f: SymPoly3, g: SymPoly3) -> SymPoly3:
    return p_add(f, {m: -c for m, c in g.items()})


def mul_sym(f: SymPoly3, g: SymPoly3) -> SymPoly3:
    """Product of two sparse trivariate polynomials."""
    if len(f) > len(g):
        f, g = g, f
    out: SymPoly3 = {}
    for (a1, a2, a3), c1 in f.items():
        for (b1, b2, b3), c2 in g.items():
            key = (a1 + b1, a2 + b2, a3 + b3)
            v = out.get(key, 0) + c1 * c2
            if v:
                out[key] = v
            elif key in out:
                del out[key]
    return out


def adams(f: SymPoly3, a: int) -> SymPoly3:
    """Adams operation: substitute x_i -> x_i^a (a >= 1)."""
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"Adams degree must be a positive integer, got {a!r}")
    return {(e1 * a, e2 * a, e3 * a): c for (e1, e2, e3), c in f.items()}


def is_symmetric(f: SymPoly3) -> bool:
    """True when the coefficient map is constant on permutation orbits."""
    for mono, c in f.items():
        for p in set(permutations(mono)):
            if f.get(p, 0) != c:
                return False
    return True


def straighten(lam: GLIndex) -> tuple[int, GLIndex] | None:
    """Normalize a Schur index to (sign, partition), or None when it dies.

    Adds the staircase (2, 1, 0), sorts, and subtracts it back; a repeated
    shifted exponent means the alternant vanishes and None is returned.
    """
    a = tuple(lam[i] + _DELTA[i] for i in range(3))
    if len(set(a)) < 3:
        return None
    srt = tuple(sorted(a, reverse=True))
    # sign of the permutation taking a to sorted order (3 entries: count
    # inversions directly)
    inv = sum(1 for i in range(3) for j in range(i + 1, 3) if a[i] < a[j])
    part = tuple(srt[i] - _DELTA[i] for i in range(3))
    return (-1 if inv % 2 else 1, part)


def _div_linear(f: SymPoly3, i: int, j: int) -> SymPoly3:
    """Exact division by (x_i - x_j) via synthetic division in x_i."""
    cof: dict[int, SymPoly3] = {}
    for mono, c in f.items():
        d = mono[i]
        key = list(mono)
        key[i] = 0
        cof.setdefault(d, {})[tuple(key)] = c
    if not cof:
        return {}
    out: SymPoly3 = {}
    carry: SymPoly3 = {}
    for k in range(max(cof), 0, -1):
        nxt = dict(cof.get(k, {}))
        for mono, c in carry.items():
            key = list(mono)
            key[j] += 1
            key = tuple(key)
            v = nxt.get(key, 0) + c
            if v:
                nxt[key] = v
            elif key in nxt:
                del nxt[key]
        for mono, c in nxt.items():
            key = list(mono)
            key[i] = k - 1
            out[tuple(key)] = c
        carry = nxt
    rem = dict(cof.get(0, {}))
    for mono, c in carry.items():
        key = list(mono)
        key[j] += 1
        key = tuple(key)
        v = rem.get(key, 0) + c
        if v:
            rem[key] = v
        elif key in rem:
            del rem[key]
    if rem:
        raise ArithmeticError("alternant not divisible by Vandermonde factor")
    return out


@functools.lru_cache(maxsize=4096)
def _schur_cached(lam: GLIndex) -> tuple[tuple[GLIndex, int], ...]:
    shifted = tuple(lam[i] + _DELTA[i] for i in range(3))
    if min(shifted) < 0:
        raise ValueError(f"Schur index {lam} has negative shifted exponents")
    if len(set(shifted)) < 3:
        return ()
    alternant: SymPoly3 = {}
    for perm in permutations((0, 1, 2)):
        inv = sum(1 for i in range(3) for j in range(i + 1, 3)
                  if perm[i] > perm[j])
        mono = (shifted[perm[0]], shifted[perm[1]], shifted[perm[2]])
        alternant[mono] = -1 if inv % 2 else 1
    quot = _div_linear(alternant, 0, 1)
    quot = _div_linear(quot, 0, 2)
    quot = _div_linear(quot, 1, 2)
    return tuple(sorted(quot.items()))


def schur(lam: GLIndex) -> SymPoly3:
    """Schur polynomial s_lam(x1, x2, x3) for a length-3 integer index.

    The index need not be a partition: it straightens by the alternant's
    antisymmetry, and indices with a repeated shifted exponent give the
    zero polynomial.  Shifted exponents must be nonnegative.
    """
    lam = tuple(lam)
    if len(lam) != 3 or not all(isinstance(e, int) for e in lam):
        raise TypeError(f"Schur index must be three ints, got {lam!r}")
    return dict(_schur_cached(lam))


def decompose_schur(f: SymPoly3) -> dict[GLIndex, int]:
    """Expand a symmetric polynomial in the Schur basis.

    Greedy subtraction: repeatedly take the lexicographically largest
    surviving monomial, which for a symmetric polynomial is a partition
    and the leading monomial of its Schur polynomial, and strip that
    term.  Raises NotSymmetricError for non-symmetric input and
    ArithmeticError if the leading monomial fails to decrease.
    """
    if not is_symmetric(f):
        raise NotSymmetricError("input is not a symmetric polynomial")
    residual = dict(f)
    out: dict[GLIndex, int] = {}
    prev: tuple[int, int, int] | None = None
    while residual:
        lead = max(residual)
        if not (lead[0] >= lead[1] >= lead[2] >= 0):
            raise ArithmeticError(
                f"leading monomial {lead} of a symmetric polynomial is not "
                f"a partition")
        if prev is not None and lead >= prev:
            raise ArithmeticError("Schur decomposition failed to progress")
        prev = lead
        c = residual[lead]
        out[lead] = c
        for mono, sc in _schur_cached(lead):
            v = residual.get(mono, 0) - c * sc
            if v:
                residual[mono] = v
            elif mono in residual:
                del residual[mono]
    return out


def _reduce_two_row(expansion: dict[GLIndex, int]) -> dict[tuple[int, int], int]:
    """Collapse GL(3) partitions to two-row labels (a-c, b-c).

    Determinant powers act trivially on sl3 characters, so identities
    stated with two-row Schur labels are compared after this reduction.
    """
    out: dict[tuple[int, int], int] = {}
    for (a, b, c), mult in expansion.items():
        key = (a - c, b - c)
        v = out.get(key, 0) + mult
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return out


def _two_row_sum(terms) -> dict[tuple[int, int], int]:
    """Signed sum of two-row Schur labels, straightened, as reduced labels.

    terms is an iterable of (coeff, a, b); labels that straighten to zero
    drop out, others contribute coeff * sign at the straightened partition.
    """
    out: dict[tuple[int, int], int] = {}
    for coeff, a, b in terms:
        st = straighten((a, b, 0))
        if st is None:
            continue
        sign, part = st
        key = (part[0] - part[2], part[1] - part[2])
        v = out.get(key, 0) + coeff * sign
        if v:
            out[key] = v
        elif key in out:
            del out[key]
    return out


def _product_reduced(f: SymPoly3, g: SymPoly3) -> dict[tuple[int, int], int]:
    return _reduce_two_row(decompose_schur(mul_sym(f, g)))


def verify_lemma_LR(m1: int, m2: int) -> bool:
    """Check the one- and two-box Pieri products against the case tables.

    Verifies s_{m1} * s_1, then s_{m1,m2} * s_2, s_{m1,m2} * s_{1,1} and
    their difference, selecting the case row in the order m2 = 0, m2 = 1,
    m1 = m2, generic (m1 - m2 >= 1 and m2 >= 2).  Index pairs falling
    outside the partition range straighten, possibly to zero, before the
    comparison, which happens at the two-row label level.
    """
    if not (isinstance(m1, int) and isinstance(m2, int) and m1 >= m2 >= 0):
        raise ValueError(f"({m1}, {m2}) is not a two-row partition")
    s = schur((m1, m2, 0))
    s1 = schur((1, 0, 0))
    s2 = schur((2, 0, 0))
    s11 = schur((1, 1, 0))

    lhs_one = _product_reduced(schur((m1, 0, 0)), s1)
    if lhs_one != _two_row_sum([(1, m1 + 1, 0), (1, m1, 1)]):
        return False

    if m2 == 0:
        rows = (
            [(1, m1 + 2, 0), (1, m1 + 1, 1), (1, m1, 2)],
            [(1, m1 + 1, 1), (1, m1 - 1, 0)],
            [(1, m1 + 2, 0), (1, m1, 2), (-1, m1 - 1, 0)],
        )
    elif m2 == 1:
        rows = (
            [(1, m1 + 2, 1), (1, m1 + 1, 2), (1, m1, 0), (1, m1, 3),
             (1, m1 - 1, 1)],
            [(1, m1 + 1, 2), (1, m1, 0), (1, m1 - 1, 1)],
            [(1, m1 + 2, 1), (1, m1, 3)],
        )
    elif m1 == m2:
        rows = (
            [(1, m1 + 2, m2), (1, m1, m2 - 1), (1, m1 - 2, m2 - 2)],
            [(1, m1 + 1, m2 + 1), (1, m1, m2 - 1)],
            [(1, m1 + 2, m2), (1, m1 - 2, m2 - 2), (-1, m1 + 1, m2 + 1)],
        )
    else:
        rows = (
            [(1, m1 + 2, m2), (1, m1 + 1, m2 + 1), (1, m1, m2 - 1),
             (1, m1, m2 + 2), (1, m1 - 1, m2), (1, m1 - 2, m2 - 2)],
            [(1, m1 + 1, m2 + 1), (1, m1, m2 - 1), (1, m1 - 1, m2)],
            [(1, m1 + 2, m2), (1, m1, m2 + 2), (1, m1 - 2, m2 - 2)],
        )

    if _product_reduced(s, s2) != _two_row_sum(rows[0]):
        return False
    if _product_reduced(s, s11) != _two_row_sum(rows[1]):
        return False
    if _product_reduced(s, p_sub(s2, s11)) != _two_row_sum(rows[2]):
        return False
    return True


def _psi2_reduced(a: int, b: int) -> dict[tuple[int, int], int]:
    """Second Adams image of s_{a,b}, Schur-decomposed and two-row reduced."""
    return _reduce_two_row(decompose_schur(adams(schur((a, b, 0)), 2)))


def verify_lemma_psi2_recurrence(m1: int, m2: int) -> bool:
    """Check the column-adding recurrence for the second Adams operation.

    psi2(s_{m1,m2+1}) = psi2(s_{m1,m2}) * (s_2 - s_{1,1})
                        - psi2(s_{m1+1,m2}) - psi2(s_{m1-1,m2-1})
    compared at the two-row label level; requires m1 >= m2 + 1 >= 1.
    For m2 = 0 the last term has index (m1-1, -1), which straightens to
    the zero polynomial, so it drops out on its own.
    """
    if not (isinstance(m1, int) and isinstance(m2, int) and m1 >= m2 + 1 >= 1):
        raise ValueError(f"recurrence needs m1 >= m2 + 1 >= 1, got ({m1}, {m2})")
    lhs = _psi2_reduced(m1, m2 + 1)
    prod = mul_sym(adams(schur((m1, m2, 0)), 2),
                   p_sub(schur((2, 0, 0)), schur((1, 1, 0))))
    rhs = _reduce_two_row(decompose_schur(prod))
    for sub in (_psi2_reduced(m1 + 1, m2), _psi2_reduced(m1 - 1, m2 - 1)):
        for key, c in sub.items():
            v = rhs.get(key, 0) - c
            if v:
                rhs[key] = v
            elif key in rhs:
                del rhs[key]
    return lhs == rhs


def generic_row_at_m2_one(m1: int) -> bool:
    """Empirical probe: the generic case rows evaluated at m2 = 1.

    The generic rows are stated for m1 - m2 >= 1 and m2 >= 2.  This
    evaluates them at m2 = 1, letting out-of-range labels straighten
    (the (m1 - 2, -1) term dies and (m1, 0) is the one-row label), and
    reports whether they still reproduce the products.  The selfcheck
    records the outcome as an observation; nothing asserts it.
    """
    if not (isinstance(m1, int) and m1 >= 2):
        raise ValueError("probe needs m1 >= 2 so m1 - m2 >= 1 at m2 = 1")
    m2 = 1
    s = schur((m1, m2, 0))
    s2 = schur((2, 0, 0))
    s11 = schur((1, 1, 0))
    gen = (
        [(1, m1 + 2, m2), (1, m1 + 1, m2 + 1), (1, m1, m2 - 1),
         (1, m1, m2 + 2), (1, m1 - 1, m2), (1, m1 - 2, m2 - 2)],
        [(1, m1 + 1, m2 + 1), (1, m1, m2 - 1), (1, m1 - 1, m2)],
        [(1, m1 + 2, m2), (1, m1, m2 + 2), (1, m1 - 2, m2 - 2)],
    )
    return (_product_reduced(s, s2) == _two_row_sum(gen[0])
            and _product_reduced(s, s11) == _two_row_sum(gen[1])
            and _product_reduced(s, p_sub(s2, s11)) == _two_row_sum(gen[2]))


def psi_oracle(w: WeightLike, a: int) -> SignedWeightSum:
    """Adams-operation plethysm of the irreducible character V_w.

    Builds the character as s_{(m1+m2, m2, 0)}, applies x_i -> x_i^a and
    decomposes back into Schur terms, returned as dominant sl3 weights
    (l1 - l2, l2 - l3) with signed multiplicities.
    """
    wt = _as_dominant(w)
    if not isinstance(a, int) or a < 1:
        raise ValueError(f"Adams degree must be a positive integer, got {a!r}")
    ch = schur((wt.m1 + wt.m2, wt.m2, 0))
    expansion = decompose_schur(adams(ch, a))
    acc: dict[Weight, int] = {}
    for (l1, l2, l3), c in expansion.items():
        key = Weight(l1 - l2, l2 - l3)
        v = acc.get(key, 0) + c
        if v:
            acc[key] = v
        elif key in acc:
            del acc[key]
    return SignedWeightSum(acc)
