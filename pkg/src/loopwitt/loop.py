"""Elements and exact brackets of the loop algebra (A x DerA) (x) B.

An element is a sparse map from basis keys to B coefficients.  Keys are
("t", 0, r) for the function part t^r and ("d", i, r) for the basis
derivation carrying e_i at degree r; a general derivation with direction
vector u at degree r is stored as the n entries with coefficients u_i.
Zero coefficients are pruned after every operation so equality to zero
is structural.
"""

from __future__ import annotations

from math import comb
from typing import Dict, List, Sequence, Tuple

from .coeff import BElem, BPresentation
from .scalars import GaussRat, ZERO

Degree = Tuple[int, ...]
Key = Tuple[str, int, Degree]  # kind, direction index (0 for "t"), degree


def _add_deg(r: Degree, s: Degree) -> Degree:
    return tuple(a + b for a, b in zip(r, s))


class LoopElem:
    __slots__ = ("n", "pres", "terms")

    def __init__(self, n: int, pres: BPresentation,
                 terms: Dict[Key, BElem] = None):
        self.n = n
        self.pres = pres
        self.terms = {}
        for key, coeff in (terms or {}).items():
            if not coeff.is_zero():
                self.terms[key] = coeff

    # -- constructors -------------------------------------------------

    @staticmethod
    def zero(n: int, pres: BPresentation) -> "LoopElem":
        return LoopElem(n, pres)

    @staticmethod
    def t_part(n: int, pres: BPresentation, r: Sequence[int],
               b: BElem = None) -> "LoopElem":
        b = b if b is not None else pres.one()
        return LoopElem(n, pres, {("t", 0, tuple(r)): b})

    @staticmethod
    def d_part(n: int, pres: BPresentation, i: int, r: Sequence[int],
               b: BElem = None) -> "LoopElem":
        if not 1 <= i <= n:
            raise ValueError(f"direction index {i} out of range 1..{n}")
        b = b if b is not None else pres.one()
        return LoopElem(n, pres, {("d", i, tuple(r)): b})

    @staticmethod
    def d_vec(n: int, pres: BPresentation, u: Sequence[GaussRat],
              r: Sequence[int], b: BElem = None) -> "LoopElem":
        """D(u, r) tensor b as a combination of basis derivations."""
        b = b if b is not None else pres.one()
        terms: Dict[Key, BElem] = {}
        for i, ui in enumerate(u, start=1):
            c = b * ui
            if not c.is_zero():
                terms[("d", i, tuple(r))] = c
        return LoopElem(n, pres, terms)

    # -- vector-space structure ---------------------------------------

    def _check(self, other: "LoopElem"):
        if self.n != other.n:
            raise ValueError("rank mismatch")
        if self.pres != other.pres:
            raise ValueError("B presentation mismatch")

    def __add__(self, other: "LoopElem") -> "LoopElem":
        self._check(other)
        out = dict(self.terms)
        for key, c in other.terms.items():
            if key in out:
                out[key] = out[key] + c
            else:
                out[key] = c
        return LoopElem(self.n, self.pres, out)

    def __neg__(self) -> "LoopElem":
        return LoopElem(self.n, self.pres,
                        {k: -c for k, c in self.terms.items()})

    def __sub__(self, other: "LoopElem") -> "LoopElem":
        return self + (-other)

    def scale(self, c) -> "LoopElem":
        return LoopElem(self.n, self.pres,
                        {k: v * c for k, v in self.terms.items()})

    def __eq__(self, other):
        return (isinstance(other, LoopElem) and self.n == other.n
                and self.pres == other.pres and self.terms == other.terms)

    def is_zero(self) -> bool:
        return not self.terms

    # -- Lie structure ------------------------------------------------

    def bracket(self, other: "LoopElem") -> "LoopElem":
        self._check(other)
        out = LoopElem.zero(self.n, self.pres)
        acc: Dict[Key, BElem] = {}

        def put(key: Key, coeff: BElem):
            if key in acc:
                acc[key] = acc[key] + coeff
            else:
                acc[key] = coeff

        for (k1, i, r), b1 in self.terms.items():
            for (k2, j, s), b2 in other.terms.items():
                bb = b1 * b2
                if bb.is_zero():
                    continue
                rs = _add_deg(r, s)
                if k1 == "d" and k2 == "d":
                    # [D(e_i,r), D(e_j,s)] = s_i D(e_j,r+s) - r_j D(e_i,r+s)
                    if s[i - 1]:
                        put(("d", j, rs), bb * s[i - 1])
                    if r[j - 1]:
                        put(("d", i, rs), bb * (-r[j - 1]))
                elif k1 == "d" and k2 == "t":
                    if s[i - 1]:
                        put(("t", 0, rs), bb * s[i - 1])
                elif k1 == "t" and k2 == "d":
                    if r[j - 1]:
                        put(("t", 0, rs), bb * (-r[j - 1]))
                # [t^r, t^s] = 0
        out.terms = {k: c for k, c in acc.items() if not c.is_zero()}
        return out

    def jacobi_residual(self, y: "LoopElem", z: "LoopElem") -> "LoopElem":
        return (self.bracket(y.bracket(z))
                + y.bracket(z.bracket(self))
                + z.bracket(self.bracket(y)))

    def ad_weight(self) -> Degree:
        """Common degree of a homogeneous element, checked against the
        defining bracket with the zero-mode basis derivations."""
        if self.is_zero():
            raise ValueError("zero element has no ad-weight")
        degrees = {key[2] for key in self.terms}
        if len(degrees) != 1:
            raise ValueError("element is not homogeneous")
        (m,) = degrees
        zero_deg = (0,) * self.n
        for i in range(1, self.n + 1):
            h = LoopElem.d_part(self.n, self.pres, i, zero_deg)
            if h.bracket(self) != self.scale(m[i - 1]):
                raise AssertionError("ad-weight check failed")
        return m

    # -- deterministic ordering / printing ----------------------------

    def sorted_terms(self) -> List[Tuple[Key, BElem]]:
        return sorted(self.terms.items(),
                      key=lambda kv: (kv[0][0], kv[0][1], kv[0][2]))


# -- rank-one special elements ---------------------------------------


def poly_derivation(pres: BPresentation, k: int, i: int) -> LoopElem:
    """(t-1)^k d_i expanded in the d_m basis (rank one only)."""
    if k < 0:
        raise ValueError("k must be nonnegative")
    out = LoopElem.zero(1, pres)
    for j in range(k + 1):
        sign = 1 if (k - j) % 2 == 0 else -1
        out = out + LoopElem.d_part(1, pres, 1, (i + j,)).scale(sign * comb(k, j))
    return out


def diff_derivation(pres: BPresentation, r: int) -> LoopElem:
    """(t^r - 1) d = d_r - d_0 (rank one only)."""
    return (LoopElem.d_part(1, pres, 1, (r,))
            - LoopElem.d_part(1, pres, 1, (0,)))


def poly_derivation_bracket_residual(pres: BPresentation, k: int, l: int,
                                     i: int, j: int) -> LoopElem:
    """[(t-1)^k d_i, (t-1)^l d_j] minus its closed form
    (l-k+j-i)(t-1)^(k+l) d_(i+j) + (l-k)(t-1)^(k+l-1) d_(i+j).
    The second term is dropped when its coefficient vanishes, which in
    particular covers k = l = 0."""
    lhs = poly_derivation(pres, k, i).bracket(poly_derivation(pres, l, j))
    rhs = poly_derivation(pres, k + l, i + j).scale(l - k + j - i)
    if l != k:
        rhs = rhs + poly_derivation(pres, k + l - 1, i + j).scale(l - k)
    return lhs - rhs


def diff_derivation_bracket_residual(pres: BPresentation, r: int,
                                     s: int) -> LoopElem:
    """[(t^r-1)d, (t^s-1)d] minus (s-r)(t^(r+s)-1)d + r(t^r-1)d - s(t^s-1)d."""
    lhs = diff_derivation(pres, r).bracket(diff_derivation(pres, s))
    rhs = (diff_derivation(pres, r + s).scale(s - r)
           + diff_derivation(pres, r).scale(r)
           - diff_derivation(pres, s).scale(s))
    return lhs - rhs
