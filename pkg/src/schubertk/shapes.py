"""Partitions, strict partitions, and their bijections with minimal coset
representatives, including the B_{n-1} <-> D_n fixed-point identification.

Partitions are plain tuples with trailing zeros trimmed.  In types B/C/D the
partition of an element is computed by embedding the signed window into the
full 2n-window and reusing the type A formula with d = n: one code path.
"""

from __future__ import annotations

from itertools import combinations

from .weyl import (
    RootSystem,
    WeylElement,
    full_window,
    is_minimal_rep,
)


def trim(parts) -> tuple:
    parts = tuple(parts)
    while parts and parts[-1] == 0:
        parts = parts[:-1]
    return parts


def is_partition(parts) -> bool:
    parts = tuple(parts)
    return all(a >= b for a, b in zip(parts, parts[1:])) and all(a >= 0 for a in parts)


def is_strict_partition(parts) -> bool:
    parts = trim(parts)
    return is_partition(parts) and all(a > b for a, b in zip(parts, parts[1:])) and all(
        a > 0 for a in parts
    )


def size(parts) -> int:
    return sum(parts)


def part(parts, i: int) -> int:
    """The i-th part (1-based), zero beyond the last row."""
    return parts[i - 1] if 1 <= i <= len(parts) else 0


def contains(lam, mu) -> bool:
    """Componentwise lam_i <= mu_i; the Bruhat test for these cominuscule cases.

    >>> contains((2, 1), (4, 4, 3))
    True
    >>> contains((3,), (2, 2))
    False
    """
    lam, mu = trim(lam), trim(mu)
    if len(lam) > len(mu):
        return False
    return all(a <= b for a, b in zip(lam, mu))


def transpose(lam) -> tuple:
    """Column lengths of the diagram.

    >>> transpose((4, 4, 3))
    (3, 3, 3, 2)
    """
    lam = trim(lam)
    if not lam:
        return ()
    return tuple(sum(1 for a in lam if a >= j) for j in range(1, lam[0] + 1))


def _window_partition(window, d: int) -> tuple:
    """(lambda_v)_i = v_{d+1-i} - (d+1-i) for a numeric window."""
    return trim(window[d - i] - (d + 1 - i) for i in range(1, d + 1))


def partition_of(v: WeylElement, d: int) -> tuple:
    """Partition of a type A minimal representative in W^{P_d}."""
    if v.rstype.kind != "A":
        raise ValueError("partition_of is the type A bijection; use strict_partition_of")
    if not is_minimal_rep(v, d):
        raise ValueError(f"{v} is not minimal in W^P_{d}")
    return _window_partition(v.window, d)


def perm_of(lam, d: int, n: int) -> WeylElement:
    """Inverse of partition_of: the minimal representative with partition lam."""
    lam = trim(lam)
    if not is_partition(lam):
        raise ValueError(f"{lam} is not a partition")
    if len(lam) > d or (lam and lam[0] > n - d):
        raise ValueError(f"{lam} does not fit in a {d}x{n - d} box")
    head = sorted(part(lam, i) + (d + 1 - i) for i in range(1, d + 1))
    tail = sorted(set(range(1, n + 1)) - set(head))
    return WeylElement(RootSystem("A", n), tuple(head + tail))


def symmetric_partition_of(w: WeylElement) -> tuple:
    """lambda_w of a B/C/D minimal representative, via the 2n-window."""
    if w.rstype.kind == "A":
        raise ValueError("expected a type B/C/D element")
    if not is_minimal_rep(w):
        raise ValueError(f"{w} is not minimal in W^P_n")
    lam = _window_partition(full_window(w), w.rstype.rank)
    if transpose(lam) != lam:
        raise RuntimeError(f"lambda_w = {lam} is not symmetric; corrupt element {w}")
    return lam


def strict_partition_of(w: WeylElement) -> tuple:
    """The strict partition indexing w: drop boxes below (B/C) or on/below (D)
    the diagonal of the symmetric diagram lambda_w."""
    lam = symmetric_partition_of(w)
    shift = 0 if w.rstype.kind in ("B", "C") else 1
    return trim(max(part(lam, i) - (i - 1) - shift, 0) for i in range(1, len(lam) + 1))


def _symmetric_from_strict(lam, kind: str) -> tuple:
    """Rebuild the symmetric partition whose shifted half is lam.

    B/C read lam as diagonal hooks with arm a_i = lam_i - 1; type D uses
    arm a_i = lam_i and appends a lone diagonal box when needed to keep the
    number of diagonal boxes even.
    """
    lam = trim(lam)
    r = len(lam)
    shift = 0 if kind in ("B", "C") else 1
    rows = {}
    for i in range(1, r + 1):
        rows[i] = lam[i - 1] + (i - 1) + shift
    if kind == "D" and r % 2 == 1:
        rows[r + 1] = r + 1
    d0 = len(rows)
    nrows = max(rows.values(), default=0)
    out = []
    for i in range(1, nrows + 1):
        if i in rows:
            out.append(rows[i])
        else:
            out.append(sum(1 for j in rows.values() if j >= i))
    return trim(out)


def perm_of_strict(lam, rstype: RootSystem, rank: int = None) -> WeylElement:
    """Inverse of strict_partition_of."""
    if rstype.kind == "A":
        raise ValueError("perm_of_strict applies to types B/C/D")
    lam = trim(lam)
    if not is_strict_partition(lam):
        raise ValueError(f"{lam} is not a strict partition")
    n = rstype.rank if rank is None else rank
    rstype = RootSystem(rstype.kind, n)
    bound = n if rstype.kind in ("B", "C") else n - 1
    if lam and lam[0] > bound:
        raise ValueError(f"{lam} does not fit: largest part exceeds {bound}")
    big = _symmetric_from_strict(lam, rstype.kind)
    v2n = perm_of(big, n, 2 * n)
    signed = tuple(t if t <= n else -(2 * n + 1 - t) for t in v2n.window[:n])
    return WeylElement(rstype, signed)


def bd_identify(w: WeylElement) -> WeylElement:
    """D_n -> B_{n-1}: delete the entry of absolute value n from the window.

    >>> from schubertk.weyl import RootSystem, parse_window
    >>> bd_identify(parse_window(RootSystem("D", 6), "1,4,-6,-5,-3,-2"))
    WeylElement(B5: 1,4,-5,-3,-2)
    """
    if w.rstype.kind != "D":
        raise ValueError("bd_identify expects a type D element")
    if not is_minimal_rep(w):
        raise ValueError(f"{w} is not minimal in W^P_n")
    n = w.rstype.rank
    win = tuple(t for t in w.window if abs(t) != n)
    return WeylElement(RootSystem("B", n - 1), win)


def bd_identify_inverse(u: WeylElement) -> WeylElement:
    """B_n -> D_{n+1}: insert +-(n+1), signed to make the bar count even."""
    if u.rstype.kind != "B":
        raise ValueError("bd_identify_inverse expects a type B element")
    if not is_minimal_rep(u):
        raise ValueError(f"{u} is not minimal in W^P_n")
    n = u.rstype.rank
    negatives = sum(1 for t in u.window if t < 0)
    new = (n + 1) if negatives % 2 == 0 else -(n + 1)
    # 2n-window order puts every barred letter after every plain one
    key = lambda t: t if t > 0 else 2 * (n + 1) + 1 + t
    win = tuple(sorted(u.window + (new,), key=key))
    return WeylElement(RootSystem("D", n + 1), win)


def all_shapes(rstype: RootSystem, d: int = None):
    """All shapes indexing W^P: partitions in a d x (n-d) box for type A,
    strict partitions with parts <= n (B/C) or <= n-1 (D)."""
    n = rstype.rank
    if rstype.kind == "A":
        if d is None:
            raise ValueError("type A needs d")
        return _box_partitions(d, n - d)
    bound = n if rstype.kind in ("B", "C") else n - 1
    shapes = []
    for r in range(bound + 1):
        for combo in combinations(range(1, bound + 1), r):
            shapes.append(tuple(sorted(combo, reverse=True)))
    return sorted(shapes, key=lambda s: (sum(s), s))


def _box_partitions(rows: int, cols: int):
    out = []

    def rec(prefix, prev):
        out.append(trim(prefix))
        if len(prefix) == rows:
            return
        for a in range(1, prev + 1):
            rec(prefix + [a], a)

    rec([], cols)
    return sorted(set(out), key=lambda s: (sum(s), s))


def minimal_reps(rstype: RootSystem, d: int = None):
    """All minimal coset representatives, enumerated through their shapes."""
    if rstype.kind == "A":
        return [perm_of(lam, d, rstype.rank) for lam in all_shapes(rstype, d)]
    return [perm_of_strict(lam, rstype) for lam in all_shapes(rstype)]


def shape_of(w: WeylElement, d: int = None) -> tuple:
    return partition_of(w, d) if w.rstype.kind == "A" else strict_partition_of(w)


def parse_shape(text: str) -> tuple:
    text = text.strip()
    if not text:
        return ()
    try:
        parts = tuple(int(p) for p in text.split(","))
    except ValueError:
        raise ValueError(f"malformed shape {text!r}") from None
    if not is_partition(parts):
        raise ValueError(f"{parts} is not weakly decreasing")
    return trim(parts)


def format_shape(lam) -> str:
    return ",".join(str(a) for a in lam)
