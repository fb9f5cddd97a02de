"""Exact arithmetic in the representation ring R(T).

LaurentPoly is a sparse map from exponent vectors in Z^rank to arbitrary
precision integer coefficients.  ev_xi collapses a polynomial along a
rational grading vector, and geometric_expand produces the truncated graded
character num / prod (1 - e^{-mu}).
"""

from __future__ import annotations

from dataclasses import dataclass
from fractions import Fraction
from math import comb


class LaurentPoly:
    __slots__ = ("rank", "terms")

    def __init__(self, rank: int, terms=None):
        self.rank = rank
        clean = {}
        for exp, coef in (terms or {}).items():
            if len(exp) != rank:
                raise ValueError(f"exponent {exp} has length != rank {rank}")
            if coef:
                clean[tuple(exp)] = coef
        self.terms = clean

    @classmethod
    def zero(cls, rank):
        return cls(rank)

    @classmethod
    def one(cls, rank):
        return cls(rank, {(0,) * rank: 1})

    @classmethod
    def monomial(cls, exponent, coef: int = 1):
        return cls(len(exponent), {tuple(exponent): coef})

    def is_zero(self):
        return not self.terms

    def _check(self, other):
        if self.rank != other.rank:
            raise ValueError(f"rank mismatch {self.rank} vs {other.rank}")

    def __add__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(self.rank, {(0,) * self.rank: other})
        self._check(other)
        out = dict(self.terms)
        for exp, c in other.terms.items():
            s = out.get(exp, 0) + c
            if s:
                out[exp] = s
            else:
                out.pop(exp, None)
        return LaurentPoly(self.rank, out)

    __radd__ = __add__

    def __neg__(self):
        return LaurentPoly(self.rank, {e: -c for e, c in self.terms.items()})

    def __sub__(self, other):
        if isinstance(other, int):
            other = LaurentPoly(self.rank, {(0,) * self.rank: other})
        return self + (-other)

    def __rsub__(self, other):
        return (-self) + other

    def __mul__(self, other):
        if isinstance(other, int):
            return LaurentPoly(
                self.rank, {e: c * other for e, c in self.terms.items()}
            )
        self._check(other)
        out = {}
        for e1, c1 in self.terms.items():
            for e2, c2 in other.terms.items():
                key = tuple(a + b for a, b in zip(e1, e2))
                s = out.get(key, 0) + c1 * c2
                if s:
                    out[key] = s
                else:
                    del out[key]
        return LaurentPoly(self.rank, out)

    __rmul__ = __mul__

    def __eq__(self, other):
        if isinstance(other, int):
            return self == LaurentPoly(self.rank, {(0,) * self.rank: other})
        return (
            isinstance(other, LaurentPoly)
            and self.rank == other.rank
            and self.terms == other.terms
        )

    def __hash__(self):
        return hash((self.rank, frozenset(self.terms.items())))

    def sorted_terms(self):
        return sorted(self.terms.items())

    def coefficient_sum(self) -> int:
        return sum(self.terms.values())

    def __repr__(self):
        return f"LaurentPoly({format_poly(self)})"


def monomial(weight) -> LaurentPoly:
    return LaurentPoly.monomial(weight)


def dual(p: LaurentPoly) -> LaurentPoly:
    """The involution e^lam -> e^{-lam}."""
    return LaurentPoly(p.rank, {tuple(-x for x in e): c for e, c in p.terms.items()})


def specialize_zero(p: LaurentPoly, coord: int) -> LaurentPoly:
    """Send eps_coord to 0 (1-based), dropping the coordinate and merging terms."""
    if not 1 <= coord <= p.rank:
        raise ValueError(f"coordinate {coord} out of range 1..{p.rank}")
    out = {}
    k = coord - 1
    for e, c in p.terms.items():
        key = e[:k] + e[k + 1:]
        s = out.get(key, 0) + c
        if s:
            out[key] = s
        else:
            del out[key]
    return LaurentPoly(p.rank - 1, out)


def xi_degree(exponent, xi) -> int:
    """mu(xi) for an exponent vector; must be an integer."""
    val = sum(Fraction(x) * Fraction(c) for x, c in zip(xi, exponent))
    if val.denominator != 1:
        raise ValueError(f"non-integral degree {val} for exponent {exponent}")
    return int(val)


def ev_xi(p: LaurentPoly, xi) -> dict:
    """Sum c_mu t^{mu(xi)}, returned as a degree -> coefficient map."""
    out = {}
    for e, c in p.terms.items():
        d = xi_degree(e, xi)
        s = out.get(d, 0) + c
        if s:
            out[d] = s
        else:
            del out[d]
    return out


@dataclass
class GradedSeries:
    """Truncated character; slices[i] collects the monomials of xi-degree i.

    In dimension-only mode the slices are plain integers.
    """

    trunc: int
    slices: list

    def dims(self) -> list:
        return [
            s if isinstance(s, int) else s.coefficient_sum() for s in self.slices
        ]


def geometric_expand(numerator: LaurentPoly, denom_weights, xi, N: int,
                     dimension_only: bool = False) -> GradedSeries:
    """Expand num / prod_{mu} (1 - e^{-mu}) as a character up to xi-degree N.

    Each -mu must have xi-degree exactly 1 (every tangent weight pairs to -1
    in the cominuscule setting), so the expansion is graded and finite per
    degree.
    """
    if N < 0:
        raise ValueError("truncation degree must be nonnegative")
    for mu in denom_weights:
        if xi_degree(tuple(-x for x in mu), xi) != 1:
            raise ValueError(f"denominator weight {mu} does not have xi-degree -1")
    if dimension_only:
        nums = [0] * (N + 1)
        for e, c in numerator.terms.items():
            d = xi_degree(e, xi)
            if 0 <= d <= N:
                nums[d] += c
            elif d < 0:
                raise ValueError(f"negative-degree monomial {e} in numerator")
        dim = len(denom_weights)
        vals = [
            sum(nums[k] * comb(i - k + dim - 1, dim - 1) for k in range(i + 1))
            for i in range(N + 1)
        ]
        return GradedSeries(N, vals)

    rank = numerator.rank
    slices = [LaurentPoly.zero(rank) for _ in range(N + 1)]
    for e, c in numerator.terms.items():
        d = xi_degree(e, xi)
        if d < 0:
            raise ValueError(f"negative-degree monomial {e} in numerator")
        if d <= N:
            slices[d] = slices[d] + LaurentPoly.monomial(e, c)
    for mu in denom_weights:
        step = LaurentPoly.monomial(tuple(-x for x in mu))
        powers = [LaurentPoly.one(rank)]
        for _ in range(N):
            powers.append(powers[-1] * step)
        new = [LaurentPoly.zero(rank) for _ in range(N + 1)]
        for i in range(N + 1):
            acc = LaurentPoly.zero(rank)
            for k in range(i + 1):
                acc = acc + slices[i - k] * powers[k]
            new[i] = acc
        slices = new
    return GradedSeries(N, slices)


def format_poly(p: LaurentPoly, latex: bool = False) -> str:
    """Render as a sum of c * e^{...} monomials, sorted by exponent vector."""
    if p.is_zero():
        return "0"
    from .weyl import format_weight

    parts = []
    for e, c in p.sorted_terms():
        if all(x == 0 for x in e):
            body = str(abs(c))
        else:
            weight = format_weight(e, latex=latex)
            mag = "" if abs(c) == 1 else f"{abs(c)}*"
            body = f"{mag}e^{{{weight}}}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts)


def format_tpoly(coeffs: dict) -> str:
    """Render an ev_xi result as a polynomial in t."""
    if not coeffs:
        return "0"
    parts = []
    for d in sorted(coeffs, reverse=True):
        c = coeffs[d]
        mag = abs(c)
        if d == 0:
            body = str(mag)
        else:
            t = "t" if d == 1 else f"t^{d}"
            body = t if mag == 1 else f"{mag}*{t}"
        sign = "-" if c < 0 else ("+" if parts else "")
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts)


def poly_to_json(p: LaurentPoly) -> dict:
    return {
        "monomials": [
            {"exp": list(e), "coef": str(c)} for e, c in p.sorted_terms()
        ]
    }


def poly_from_json(data: dict, rank: int) -> LaurentPoly:
    terms = {}
    for m in data["monomials"]:
        terms[tuple(m["exp"])] = int(m["coef"])
    return LaurentPoly(rank, terms)
