"""Classical root systems and Weyl groups of types A, B, C and D.

Elements are stored as signed one-line windows: type A uses a plain
permutation ``(w_1, ..., w_n)`` of ``{1, ..., n}``, while types B, C and D
use the first half of the symmetric 2n-window, with a negative entry ``-k``
standing for the barred letter.  The second half of the 2n-window is implied
by the symmetry and reconstructed on demand by :func:`full_window`.

Group elements act on weights on the left, and a product ``u * w`` applies
``w`` first.  A word ``(i_1, ..., i_l)`` therefore denotes the element
``s_{i_1} s_{i_2} ... s_{i_l}`` in which ``s_{i_l}`` acts first.
"""

from __future__ import annotations

from dataclasses import dataclass
from functools import lru_cache

KINDS = ("A", "B", "C", "D")

Weight = tuple  # integer vector of length rank, coefficients of eps_1..eps_rank


@dataclass(frozen=True)
class RootSystem:
    kind: str
    rank: int

    def __post_init__(self):
        if self.kind not in KINDS:
            raise ValueError(f"unknown root system kind {self.kind!r}")
        if self.rank < 2:
            raise ValueError(f"rank must be at least 2, got {self.rank}")
        if self.kind == "D" and self.rank < 3:
            raise ValueError("type D requires rank at least 3")

    @property
    def num_simple(self) -> int:
        """Number of simple roots (n-1 for type A in its rank-n ambient)."""
        return self.rank - 1 if self.kind == "A" else self.rank

    def __repr__(self):
        return f"RootSystem({self.kind!r}, {self.rank})"


def simple_roots(rstype: RootSystem) -> list:
    """Simple roots in index order, as integer coordinate vectors."""
    n = rstype.rank
    roots = []
    for i in range(1, n):
        v = [0] * n
        v[i - 1], v[i] = 1, -1
        roots.append(tuple(v))
    if rstype.kind == "B":
        v = [0] * n
        v[n - 1] = 1
        roots.append(tuple(v))
    elif rstype.kind == "C":
        v = [0] * n
        v[n - 1] = 2
        roots.append(tuple(v))
    elif rstype.kind == "D":
        v = [0] * n
        v[n - 2], v[n - 1] = 1, 1
        roots.append(tuple(v))
    return roots


@dataclass(frozen=True)
class WeylElement:
    rstype: RootSystem
    window: tuple

    def __post_init__(self):
        n = self.rstype.rank
        win = tuple(self.window)
        object.__setattr__(self, "window", win)
        if len(win) != n:
            raise ValueError(f"window length {len(win)} != rank {n}")
        if sorted(abs(t) for t in win) != list(range(1, n + 1)):
            raise ValueError(f"window {win} is not a signed permutation of 1..{n}")
        kind = self.rstype.kind
        negatives = sum(1 for t in win if t < 0)
        if kind == "A" and negatives:
            raise ValueError("type A windows carry no signs")
        if kind == "D" and negatives % 2:
            raise ValueError(f"type D window {win} has an odd number of barred entries")

    def __mul__(self, other: "WeylElement") -> "WeylElement":
        return mult(self, other)

    def __repr__(self):
        return f"WeylElement({self.rstype.kind}{self.rstype.rank}: {format_window(self)})"


def identity(rstype: RootSystem) -> WeylElement:
    return WeylElement(rstype, tuple(range(1, rstype.rank + 1)))


def simple_reflection(rstype: RootSystem, i: int) -> WeylElement:
    """The i-th simple reflection as a window, 1-based index."""
    n = rstype.rank
    if not 1 <= i <= rstype.num_simple:
        raise ValueError(f"simple reflection index {i} out of range for {rstype}")
    win = list(range(1, n + 1))
    if i < n:
        win[i - 1], win[i] = win[i], win[i - 1]
    elif rstype.kind in ("B", "C"):
        win[n - 1] = -n
    else:  # type D, i == n
        win[n - 2], win[n - 1] = -n, -(n - 1)
    return WeylElement(rstype, tuple(win))


def apply(w: WeylElement, mu: Weight) -> Weight:
    """Signed-permutation action on a weight: eps_i -> sign(w_i) eps_|w_i|."""
    n = w.rstype.rank
    if len(mu) != n:
        raise ValueError(f"weight length {len(mu)} != rank {n}")
    out = [0] * n
    for i, t in enumerate(w.window):
        if t > 0:
            out[t - 1] += mu[i]
        else:
            out[-t - 1] -= mu[i]
    return tuple(out)


def mult(u: WeylElement, w: WeylElement) -> WeylElement:
    """Group product u*w, with w acting first."""
    if u.rstype != w.rstype:
        raise ValueError(f"type mismatch: {u.rstype} vs {w.rstype}")
    uw = u.window
    out = []
    for t in w.window:
        r = uw[abs(t) - 1]
        out.append(r if t > 0 else -r)
    return WeylElement(u.rstype, tuple(out))


def inverse(w: WeylElement) -> WeylElement:
    out = [0] * w.rstype.rank
    for i, t in enumerate(w.window, start=1):
        out[abs(t) - 1] = i if t > 0 else -i
    return WeylElement(w.rstype, tuple(out))


def is_positive_root_vector(v) -> bool:
    """In all four types a root is positive iff its first nonzero coordinate is."""
    for c in v:
        if c:
            return c > 0
    raise ValueError("zero vector is not a root")


@lru_cache(maxsize=None)
def reduced_word(w: WeylElement) -> tuple:
    """A reduced word for w found by greedy left-descent reduction.

    The returned word ``(i_1, ..., i_l)`` satisfies
    ``w = s_{i_1} s_{i_2} ... s_{i_l}`` under the apply-rightmost-first
    convention; its length is the Coxeter length of w.
    """
    rs = w.rstype
    alphas = simple_roots(rs)
    letters = []
    u = w
    uinv = inverse(w)
    ident = tuple(range(1, rs.rank + 1))
    while u.window != ident:
        for i in range(1, rs.num_simple + 1):
            # l(s_i u) < l(u)  iff  u^{-1}(alpha_i) is a negative root
            if not is_positive_root_vector(apply(uinv, alphas[i - 1])):
                s = simple_reflection(rs, i)
                u = mult(s, u)
                uinv = mult(uinv, s)
                letters.append(i)
                break
        else:  # pragma: no cover
            raise RuntimeError(f"no descent found for {u}; corrupt window?")
    return tuple(letters)


def length(w: WeylElement) -> int:
    return len(reduced_word(w))


def is_minimal_rep(w: WeylElement, d=None) -> bool:
    """Test membership in W^P: the d-th maximal parabolic in type A, P_n otherwise.

    Types B/C/D ignore d and compare entries of the 2n-window, so barred
    letters count as large.
    """
    n = w.rstype.rank
    if w.rstype.kind == "A":
        if d is None or not 1 <= d <= n - 1:
            raise ValueError(f"type A requires 1 <= d <= {n - 1}, got {d}")
        win = w.window
        return all(win[i] < win[i + 1] for i in range(d - 1)) and all(
            win[i] < win[i + 1] for i in range(d, n - 1)
        )
    full = full_window(w)
    return all(full[i] < full[i + 1] for i in range(n - 1))


def full_window(w: WeylElement) -> tuple:
    """The numeric window: the 2n-window for B/C/D (bar(k) = 2n+1-k), w itself for A."""
    if w.rstype.kind == "A":
        return w.window
    n = w.rstype.rank
    first = tuple(t if t > 0 else 2 * n + 1 + t for t in w.window)
    return first + tuple(2 * n + 1 - t for t in reversed(first))


def signed_entry(x: int, n: int) -> int:
    """Decode an entry of a numeric 2n-window back to its signed form."""
    return x if x <= n else -(2 * n + 1 - x)


def eps_of_entry(x: int, n: int) -> Weight:
    """The weight eps_x for an entry of a 2n-window, with eps_bar(m) = -eps_m."""
    v = [0] * n
    if x <= n:
        v[x - 1] = 1
    else:
        v[2 * n - x] = -1
    return tuple(v)


def add_weights(a: Weight, b: Weight) -> Weight:
    return tuple(x + y for x, y in zip(a, b))


def negate_weight(a: Weight) -> Weight:
    return tuple(-x for x in a)


def parse_window(rstype: RootSystem, text: str) -> WeylElement:
    """Parse a comma-separated signed window such as "2,-4,-3,-1"."""
    try:
        entries = tuple(int(part) for part in text.split(","))
    except ValueError:
        raise ValueError(f"malformed window {text!r}") from None
    return WeylElement(rstype, entries)


def format_window(w: WeylElement) -> str:
    return ",".join(str(t) for t in w.window)


def format_weight(mu: Weight, latex: bool = False) -> str:
    """Render a weight like "ε_1-ε_3" (or its LaTeX form), positive part first."""
    sym = r"\epsilon_" if latex else "ε_"
    ordered = [(i, c) for i, c in enumerate(mu, start=1) if c > 0]
    ordered += [(i, c) for i, c in enumerate(mu, start=1) if c < 0]
    parts = []
    for i, c in ordered:
        sign = "-" if c < 0 else ("+" if parts else "")
        mag = "" if abs(c) == 1 else str(abs(c))
        parts.append(f"{sign}{mag}{sym}{i}")
    return "".join(parts) if parts else "0"


# Window-level helpers used by the 0-Hecke fold inner loops.  They avoid
# building WeylElement instances in hot paths; the tuple is always a valid
# window for the ambient root system.

def window_right_mult(kind: str, win: tuple, i: int) -> tuple:
    """win * s_i (acts on positions)."""
    n = len(win)
    w = list(win)
    if i < n:
        w[i - 1], w[i] = w[i], w[i - 1]
    elif kind in ("B", "C"):
        w[n - 1] = -w[n - 1]
    else:  # type D
        w[n - 2], w[n - 1] = -w[n - 1], -w[n - 2]
    return tuple(w)


def window_right_ascent(kind: str, win: tuple, i: int) -> bool:
    """True iff l(w s_i) > l(w), i.e. w(alpha_i) is a positive root."""
    n = len(win)
    if i < n:
        a, b = win[i - 1], win[i]
        # w(alpha_i) = sgn(a) eps_|a| - sgn(b) eps_|b|; the smaller index wins
        if abs(a) < abs(b):
            return a > 0
        return b < 0
    if kind in ("B", "C"):
        return win[n - 1] > 0
    # type D: w(alpha_n) = sgn(a) eps_|a| + sgn(b) eps_|b|
    a, b = win[n - 2], win[n - 1]
    return a > 0 if abs(a) < abs(b) else b > 0
