"""Restriction of Schubert structure-sheaf classes to torus fixed points,
with three mutually cross-checking backends, plus Hilbert series, Hilbert
polynomial and multiplicity of the Schubert variety at the fixed point.

Conventions.  For minimal representatives w, v the class i_v*[O_{X^w}] is
(-1)^{l(w)} times a sum of products of factors (e^{-r} - 1) over positive
roots r drawn from the tangent weights at v.  Fixed points off the variety
(v not >= w) yield the zero class rather than an error: restricting a sheaf
outside its support is genuinely zero.
"""

from __future__ import annotations

from concurrent.futures import ThreadPoolExecutor
from dataclasses import dataclass
from fractions import Fraction
from math import comb

from . import hecke
from .diagrams import (
    enumerate_eyd,
    geometry_of,
    reading_word,
    reflection_tableau,
)
from .ring import GradedSeries, LaurentPoly, geometric_expand, specialize_zero
from .shapes import (
    bd_identify_inverse,
    contains,
    shape_of,
    size,
)
from .tableaux import enumerate_svt
from .weyl import (
    RootSystem,
    WeylElement,
    apply,
    eps_of_entry,
    full_window,
    is_minimal_rep,
    is_positive_root_vector,
    length,
    mult,
    negate_weight,
    simple_reflection,
    simple_roots,
    window_right_ascent,
    window_right_mult,
)

BACKENDS = ("eyd", "svt", "hecke")


@dataclass(frozen=True)
class KClass:
    rstype: RootSystem
    d: int
    value: LaurentPoly
    on_variety: bool = True


@dataclass(frozen=True)
class HilbertData:
    d_w: int
    m: tuple  # (m_0, m_1, ...), empty when the point is off the variety

    @property
    def multiplicity(self) -> int:
        return self.m[0] if self.m else 0


def dim_gp(rstype: RootSystem, d: int = None) -> int:
    n = rstype.rank
    if rstype.kind == "A":
        return d * (n - d)
    if rstype.kind in ("B", "C"):
        return n * (n + 1) // 2
    return n * (n - 1) // 2


def _resolve_d(rstype: RootSystem, d) -> int:
    if rstype.kind == "A":
        if d is None or not 1 <= d <= rstype.rank - 1:
            raise ValueError(f"type A needs 1 <= d <= {rstype.rank - 1}, got {d}")
        return d
    return rstype.rank


def levi_complement_roots(rstype: RootSystem, d: int = None) -> list:
    """Positive roots of g outside the Levi of the maximal parabolic."""
    n = rstype.rank
    out = []
    if rstype.kind == "A":
        d = _resolve_d(rstype, d)
        for i in range(1, d + 1):
            for j in range(d + 1, n + 1):
                v = [0] * n
                v[i - 1], v[j - 1] = 1, -1
                out.append(tuple(v))
        return out
    for i in range(1, n + 1):
        if rstype.kind == "B":
            v = [0] * n
            v[i - 1] = 1
            out.append(tuple(v))
        elif rstype.kind == "C":
            v = [0] * n
            v[i - 1] = 2
            out.append(tuple(v))
        for j in range(i + 1, n + 1):
            v = [0] * n
            v[i - 1], v[j - 1] = 1, 1
            out.append(tuple(v))
    return out


def tangent_weights(rstype: RootSystem, d, v: WeylElement) -> list:
    """Weights of the tangent space at the fixed point v: v applied to -Phi(g/p)."""
    if not is_minimal_rep(v, d if rstype.kind == "A" else None):
        raise ValueError(f"{v} is not a minimal representative")
    return [apply(v, negate_weight(beta)) for beta in levi_complement_roots(rstype, d)]


def r_values(word, rstype: RootSystem) -> list:
    """r(c) = s_1 s_2 ... s_{c-1}(alpha_c) along a reduced word; positive roots."""
    alphas = simple_roots(rstype)
    out = []
    u = None
    for c, i in enumerate(word):
        if not 1 <= i <= rstype.num_simple:
            raise ValueError(f"letter {i} out of range for {rstype}")
        alpha = alphas[i - 1]
        r = alpha if u is None else apply(u, alpha)
        if not is_positive_root_vector(r):
            raise ValueError(f"word is not reduced: r({c + 1}) is a negative root")
        out.append(r)
        s = simple_reflection(rstype, i)
        u = s if u is None else mult(u, s)
    if u is not None and length(u) != len(word):
        raise ValueError("word is not reduced")
    return out


def xi_vector(rstype: RootSystem, d, v: WeylElement) -> tuple:
    """The grading vector with alpha(xi) = -1 for every tangent weight at v.

    Exists in the cominuscule cases only: any d in type A, the maximal
    parabolic in types C and D.  Type B is rejected; use the D identification.
    """
    if rstype.kind == "B":
        raise ValueError("type B is not cominuscule; compute through D_{n+1}")
    n = rstype.rank
    if rstype.kind == "A":
        d = _resolve_d(rstype, d)
        base = [Fraction(1)] * d + [Fraction(0)] * (n - d)
    else:
        base = [Fraction(1, 2)] * n
    out = [Fraction(0)] * n
    for i, t in enumerate(v.window):
        if t > 0:
            out[t - 1] += base[i]
        else:
            out[-t - 1] -= base[i]
    xi = tuple(out)
    for alpha in tangent_weights(rstype, d, v):
        pairing = sum(Fraction(c) * x for c, x in zip(alpha, xi))
        if pairing != -1:
            raise RuntimeError(f"xi pairing failed: {alpha}(xi) = {pairing}")
    return xi


def _eyd_factor_exponent(rstype: RootSystem, d: int, v: WeylElement, box) -> tuple:
    """Exponent g with factor (e^g - 1) for a diagram box; g = -r for the
    positive root r attached to the box."""
    n = rstype.rank
    i, j = box
    fw = full_window(v)
    if rstype.kind == "A":
        a, b = fw[d - i], fw[d + j - 1]  # v_{d+1-i}, v_{d+j}
        vec = [0] * n
        vec[a - 1] += 1
        vec[b - 1] -= 1
        return tuple(vec)
    if rstype.kind == "C":
        ea = eps_of_entry(fw[n + i - 1], n)
        eb = eps_of_entry(fw[n + j - 1], n)
        return tuple(-(x + y) for x, y in zip(ea, eb))
    if rstype.kind == "B":
        if i == j:
            return tuple(-x for x in eps_of_entry(fw[n + i - 1], n))
        ea = eps_of_entry(fw[n + i - 1], n)
        eb = eps_of_entry(fw[n + j - 1], n)
        return tuple(-(x + y) for x, y in zip(ea, eb))
    # type D: columns are labelled v_{n+2}, v_{n+3}, ...
    ea = eps_of_entry(fw[n + i - 1], n)
    eb = eps_of_entry(fw[n + j], n)
    return tuple(-(x + y) for x, y in zip(ea, eb))


def _svt_entry_box(geometry: str, box, x: int) -> tuple:
    i, j = box
    return (x, x + j - i)


def _term_product(rank: int, exponents) -> LaurentPoly:
    acc = LaurentPoly.one(rank)
    for g in exponents:
        acc = acc * (LaurentPoly.monomial(g) - 1)
    return acc


def pullback_terms(rstype: RootSystem, d, w: WeylElement, v: WeylElement,
                   backend: str = "eyd", cap: int = hecke.DEFAULT_CAP) -> list:
    """The factored form of the class: a list of terms, each a tuple of
    exponents g, so that i_v*[O_{X^w}] = (-1)^{l(w)} sum_t prod (e^g - 1)."""
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if rstype != w.rstype or rstype != v.rstype:
        raise ValueError("root system mismatch")
    d = _resolve_d(rstype, d)
    aflag = d if rstype.kind == "A" else None
    if not is_minimal_rep(w, aflag) or not is_minimal_rep(v, aflag):
        raise ValueError("w and v must be minimal representatives")
    lam, mu = shape_of(w, d), shape_of(v, d)
    if not contains(lam, mu):
        return []
    geometry = geometry_of(rstype)
    if backend == "eyd":
        terms = []
        for C in enumerate_eyd(lam, mu, geometry):
            terms.append(
                tuple(
                    _eyd_factor_exponent(rstype, d, v, box)
                    for box in C.sorted_boxes()
                )
            )
        return terms
    if backend == "svt":
        terms = []
        entry_bound = d if rstype.kind == "A" else None
        for T in enumerate_svt(lam, mu, geometry, d=entry_bound):
            exps = []
            for box, entries in T.cells:
                for x in entries:
                    image = _svt_entry_box(geometry, box, x)
                    exps.append(_eyd_factor_exponent(rstype, d, v, image))
            terms.append(tuple(exps))
        return terms
    # hecke: explicit subsequence enumeration against the tableau word
    T = reflection_tableau(mu, rstype, d if rstype.kind == "A" else None)
    word = reading_word(T)
    rvals = r_values(word, rstype)
    terms = []
    for sub in hecke.hecke_subsequences(w, word, cap=cap):
        terms.append(tuple(negate_weight(rvals[p - 1]) for p in sub.indices))
    return terms


def _hecke_class_dp(rstype: RootSystem, w: WeylElement, word, rvals) -> LaurentPoly:
    """Sum over T(w, word) of prod (e^{-r} - 1) by a fold-state dynamic program."""
    n = rstype.rank
    kind = rstype.kind
    lw = length(w)
    ident = tuple(range(1, n + 1))
    zero = LaurentPoly.zero(n)
    states = {ident: LaurentPoly.one(n)}
    lengths = {ident: 0}
    for c, i in enumerate(word):
        factor = LaurentPoly.monomial(negate_weight(rvals[c])) - 1
        nxt = {}
        for win, val in states.items():
            nxt[win] = nxt.get(win, zero) + val
            if window_right_ascent(kind, win, i):
                win2 = window_right_mult(kind, win, i)
                if win2 not in lengths:
                    lengths[win2] = lengths[win] + 1
                if lengths[win2] > lw:
                    continue
            else:
                win2 = win
            nxt[win2] = nxt.get(win2, zero) + val * factor
        states = nxt
    return states.get(w.window, zero)


def pullback(rstype: RootSystem, d, w: WeylElement, v: WeylElement,
             backend: str = "eyd", cap: int = hecke.DEFAULT_CAP,
             threads: int = 1) -> KClass:
    """The class i_v*[O_{X^w}] as an expanded Laurent polynomial.

    All three backends return identical polynomials; hecke enumerates
    0-Hecke subsequences of a reduced word for v and is the ground truth.
    """
    if backend not in BACKENDS:
        raise ValueError(f"unknown backend {backend!r}")
    if rstype != w.rstype or rstype != v.rstype:
        raise ValueError("root system mismatch")
    d = _resolve_d(rstype, d)
    aflag = d if rstype.kind == "A" else None
    if not is_minimal_rep(w, aflag) or not is_minimal_rep(v, aflag):
        raise ValueError("w and v must be minimal representatives")
    n = rstype.rank
    lam, mu = shape_of(w, d), shape_of(v, d)
    if not contains(lam, mu):
        return KClass(rstype, d, LaurentPoly.zero(n), on_variety=False)
    sign = -1 if length(w) % 2 else 1
    if backend == "hecke":
        if size(mu) > cap:
            raise ValueError(f"|mu| = {size(mu)} exceeds cap {cap}")
        T = reflection_tableau(mu, rstype, d if rstype.kind == "A" else None)
        word = reading_word(T)
        rvals = r_values(word, rstype)
        poly = _hecke_class_dp(rstype, w, word, rvals)
        return KClass(rstype, d, poly * sign)
    terms = pullback_terms(rstype, d, w, v, backend=backend)
    if threads > 1:
        with ThreadPoolExecutor(max_workers=threads) as pool:
            products = list(pool.map(lambda t: _term_product(n, t), terms))
    else:
        products = [_term_product(n, t) for t in terms]
    total = LaurentPoly.zero(n)
    for p in products:
        total = total + p
    return KClass(rstype, d, total * sign)


def pullback_hecke_with_word(rstype: RootSystem, w: WeylElement, word) -> LaurentPoly:
    """Hecke-backend class over an arbitrary reduced word for v (signed)."""
    rvals = r_values(word, rstype)
    sign = -1 if length(w) % 2 else 1
    return _hecke_class_dp(rstype, w, word, rvals) * sign


def pullback_b_via_d(w: WeylElement, v: WeylElement, backend: str = "eyd") -> KClass:
    """Type B_n class through the D_{n+1} identification: compute upstairs,
    then send eps_{n+1} to 0."""
    if w.rstype.kind != "B" or v.rstype.kind != "B":
        raise ValueError("pullback_b_via_d expects type B elements")
    n = w.rstype.rank
    wD, vD = bd_identify_inverse(w), bd_identify_inverse(v)
    cls = pullback(wD.rstype, None, wD, vD, backend=backend)
    return KClass(w.rstype, n, specialize_zero(cls.value, n + 1), cls.on_variety)


def hilbert_data(rstype: RootSystem, d, w: WeylElement, v: WeylElement,
                 method: str = "eyd") -> HilbertData:
    """d_w = dim G/P - l(w) and the vector m with m_k the number of excited
    diagrams of k extra boxes (equal to the count of Hecke subsequences with
    excess k).  Type B is defined through the D_{n+1} identification."""
    if rstype.kind == "B":
        data = hilbert_data(
            RootSystem("D", rstype.rank + 1),
            None,
            bd_identify_inverse(w),
            bd_identify_inverse(v),
            method=method,
        )
        return HilbertData(dim_gp(rstype) - length(w), data.m)
    d = _resolve_d(rstype, d)
    aflag = d if rstype.kind == "A" else None
    if not is_minimal_rep(w, aflag) or not is_minimal_rep(v, aflag):
        raise ValueError("w and v must be minimal representatives")
    d_w = dim_gp(rstype, d) - length(w)
    lam, mu = shape_of(w, d), shape_of(v, d)
    if not contains(lam, mu):
        return HilbertData(d_w, ())
    if method == "hecke":
        T = reflection_tableau(mu, rstype, d if rstype.kind == "A" else None)
        stats = hecke.subsequence_stats(w, reading_word(T))
        top = max(stats) if stats else size(lam)
        m = tuple(stats.get(size(lam) + k, 0) for k in range(top - size(lam) + 1))
    else:
        sizes = {}
        for C in enumerate_eyd(lam, mu, geometry_of(rstype)):
            sizes[len(C)] = sizes.get(len(C), 0) + 1
        top = max(sizes)
        m = tuple(sizes.get(size(lam) + k, 0) for k in range(top - size(lam) + 1))
    return HilbertData(d_w, m)


def hilbert_polynomial_coeffs(data: HilbertData) -> tuple:
    """Coefficients (ascending in n) of h(n) = sum (-1)^k m_k binom(n+K-1, K-1)
    with K = d_w - k; exact rationals.  A K = 0 term only occurs for the
    degenerate point case and contributes the zero polynomial here."""
    coeffs = [Fraction(0)]
    for k, mk in enumerate(data.m):
        K = data.d_w - k
        if K <= 0:
            continue
        term = _binom_poly(K)
        term = [c * mk * (-1) ** k for c in term]
        if len(term) > len(coeffs):
            coeffs.extend([Fraction(0)] * (len(term) - len(coeffs)))
        for idx, c in enumerate(term):
            coeffs[idx] += c
    while len(coeffs) > 1 and coeffs[-1] == 0:
        coeffs.pop()
    return tuple(coeffs)


def _binom_poly(K: int) -> list:
    """binom(n+K-1, K-1) as a polynomial in n: prod_{j=1}^{K-1}(n+j)/(K-1)!."""
    poly = [Fraction(1)]
    for j in range(1, K):
        poly = [Fraction(0)] + poly  # multiply by n
        for idx in range(len(poly) - 1):
            poly[idx] += j * poly[idx + 1]
    fact = 1
    for j in range(2, K):
        fact *= j
    return [c / fact for c in poly]


def hilbert_polynomial_value(data: HilbertData, n: int) -> int:
    """Exact Hilbert function value; agrees with the polynomial for all n >= 0."""
    if n < 0:
        raise ValueError("Hilbert function argument must be nonnegative")
    total = 0
    for k, mk in enumerate(data.m):
        K = data.d_w - k
        if K == 0:
            term = 1 if n == 0 else 0  # the series 1/(1-t)^0 is the constant 1
        elif K < 0:
            raise RuntimeError(f"m_{k} nonzero beyond d_w = {data.d_w}")
        else:
            term = comb(n + K - 1, K - 1)
        total += (-1) ** k * mk * term
    return total


def hilbert_series_str(data: HilbertData) -> str:
    if not data.m:
        return "0"
    parts = []
    for k, mk in enumerate(data.m):
        if mk == 0:
            continue
        K = data.d_w - k
        body = str(mk) if K == 0 else f"{mk}/(1-t)^{K}"
        sign = "-" if k % 2 else ("+" if parts else "")
        parts.append(f"{sign} {body}" if parts else f"{sign}{body}")
    return " ".join(parts) if parts else "0"


def graded_character(rstype: RootSystem, d, w: WeylElement, v: WeylElement,
                     N: int, dimension_only: bool = False) -> GradedSeries:
    """Truncated character of the tangent-cone coordinate ring at v.

    Dimension slices agree with the Hilbert polynomial values; cominuscule
    types only (A, C, D)."""
    d = _resolve_d(rstype, d)
    xi = xi_vector(rstype, d, v)
    numerator = pullback(rstype, d, w, v, backend="eyd").value
    weights = tangent_weights(rstype, d, v)
    return geometric_expand(numerator, weights, xi, N, dimension_only=dimension_only)


def graded_character_b_via_d(w: WeylElement, v: WeylElement, N: int) -> GradedSeries:
    """Type B character computed upstairs in D_{n+1}, slices specialized back."""
    if w.rstype.kind != "B":
        raise ValueError("expects type B elements")
    n = w.rstype.rank
    wD, vD = bd_identify_inverse(w), bd_identify_inverse(v)
    series = graded_character(wD.rstype, None, wD, vD, N)
    slices = [specialize_zero(s, n + 1) for s in series.slices]
    return GradedSeries(N, slices)


@dataclass
class BackendReport:
    classes: list  # (name, KClass)
    agree: bool
    first_diff: str = ""


def check_backends(rstype: RootSystem, d, w: WeylElement, v: WeylElement,
                   cap: int = hecke.DEFAULT_CAP) -> BackendReport:
    """Run every applicable backend and compare the expanded classes bit-exactly."""
    names = list(BACKENDS)
    classes = [
        (name, pullback(rstype, d, w, v, backend=name, cap=cap)) for name in names
    ]
    if rstype.kind == "B":
        classes.append(("b-via-d", pullback_b_via_d(w, v)))
    base = classes[0][1].value
    for name, cls in classes[1:]:
        if cls.value != base:
            diff = _first_difference(base, cls.value)
            return BackendReport(classes, False, f"{names[0]} vs {name}: {diff}")
    return BackendReport(classes, True)


def _first_difference(p: LaurentPoly, q: LaurentPoly) -> str:
    exps = sorted(set(p.terms) | set(q.terms))
    for e in exps:
        a, b = p.terms.get(e, 0), q.terms.get(e, 0)
        if a != b:
            return f"monomial {e}: {a} != {b}"
    return "values equal"
