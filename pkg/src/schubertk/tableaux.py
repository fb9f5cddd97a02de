"""Set-valued (shifted) tableaux restricted by an ambient shape, and the
explicit bijection f with excited Young diagrams.

A filling is semistandard when rows are weakly and columns strictly
increasing entry-by-entry; it is restricted by mu when every entry x of box
(i,j) satisfies x+j-i <= mu(x) (ordinary) or j-i <= mu(x)-1 (shifted).
"""

from __future__ import annotations

from dataclasses import dataclass

from .diagrams import BoxSet, ambient_boxes
from .shapes import contains, part, trim


@dataclass(frozen=True)
class SetValuedTableau:
    geometry: str
    shape: tuple
    ambient: tuple  # the restricting shape mu
    cells: tuple    # sorted tuple of ((i, j), (x1 < x2 < ...))

    def __post_init__(self):
        object.__setattr__(self, "shape", trim(self.shape))
        object.__setattr__(self, "ambient", trim(self.ambient))
        cells = tuple(sorted((tuple(b), tuple(sorted(es))) for b, es in self.cells))
        object.__setattr__(self, "cells", cells)
        boxes = {b for b, _ in cells}
        if boxes != set(ambient_boxes(self.shape, self.geometry)):
            raise ValueError(f"cells do not cover the shape {self.shape}")
        if any(not es for _, es in cells):
            raise ValueError("every box needs a nonempty entry set")

    def entry(self, box) -> tuple:
        for b, es in self.cells:
            if b == box:
                return es
        return ()

    def entry_count(self) -> int:
        return sum(len(es) for _, es in self.cells)

    def __repr__(self):
        body = ", ".join(f"{b}:{set(es)}" for b, es in self.cells)
        return f"SVT({self.geometry}, {self.shape} in {self.ambient}; {body})"


def _restriction_ok(geometry: str, mu, x: int, i: int, j: int) -> bool:
    if geometry == "ordinary":
        return x + j - i <= part(mu, x)
    if geometry == "shiftedD" and i == j and (x - i) % 2:
        # type D diagonal excitations move two steps, so a diagonal entry
        # keeps the parity of its starting row
        return False
    return j - i <= part(mu, x) - 1


def is_semistandard(T: SetValuedTableau) -> bool:
    by_box = dict(T.cells)
    for (i, j), es in T.cells:
        right = by_box.get((i, j + 1))
        if right is not None and max(es) > min(right):
            return False
        below = by_box.get((i + 1, j))
        if below is not None and max(es) >= min(below):
            return False
    return True


def is_restricted(T: SetValuedTableau) -> bool:
    return all(
        _restriction_ok(T.geometry, T.ambient, x, i, j)
        for (i, j), es in T.cells
        for x in es
    )


def max_entry(geometry: str, mu, d: int = None) -> int:
    """Entries run over {1..d} in type A and {1..n}, here capped by mu's rows."""
    return d if d is not None else len(trim(mu))


def enumerate_svt(lam, mu, geometry: str, d: int = None,
                  single_valued_only: bool = False) -> list:
    """All set-valued tableaux of shape lam restricted by mu, canonically ordered.

    Backtracks over boxes in row-major order; the feasible entries of a box
    are bounded below by the row and column neighbours and above by the
    restriction inequality (with the diagonal parity gaps in shiftedD).
    """
    lam, mu = trim(lam), trim(mu)
    if not contains(lam, mu):
        raise ValueError(f"{lam} is not contained in {mu}")
    boxes = sorted(ambient_boxes(lam, geometry))
    top = max_entry(geometry, mu, d)
    out = []
    filled = {}

    def allowed_values(i, j):
        lo = i if geometry == "ordinary" else 1
        left = filled.get((i, j - 1))
        if left:
            lo = max(lo, left[-1])
        above = filled.get((i - 1, j))
        if above:
            lo = max(lo, above[-1] + 1)
        values = []
        for x in range(lo, top + 1):
            if geometry == "ordinary":
                exceeded = x + j - i > part(mu, x)
            else:
                exceeded = j - i > part(mu, x) - 1
            if exceeded:
                break  # the bound only tightens as x grows
            if _restriction_ok(geometry, mu, x, i, j):
                values.append(x)
        return values

    def rec(k):
        if k == len(boxes):
            out.append(
                SetValuedTableau(geometry, lam, mu, tuple(filled.items()))
            )
            return
        i, j = boxes[k]
        for subset in _nonempty_subsets(allowed_values(i, j), single_valued_only):
            filled[(i, j)] = subset
            rec(k + 1)
        filled.pop((i, j), None)

    rec(0)
    out.sort(key=lambda T: T.cells)
    return out


def _nonempty_subsets(values, singles_only):
    if singles_only:
        for x in values:
            yield (x,)
        return
    n = len(values)
    for mask in range(1, 1 << n):
        yield tuple(values[b] for b in range(n) if mask >> b & 1)


def top_tableau(lam, mu, geometry: str) -> SetValuedTableau:
    """T^top: every box of row i holds the single entry i; f maps it to D_lam."""
    cells = tuple((box, (box[0],)) for box in ambient_boxes(lam, geometry))
    return SetValuedTableau(geometry, trim(lam), trim(mu), cells)


def f_map(T: SetValuedTableau) -> BoxSet:
    """f(T) = {(x, x+j-i) : x an entry of box (i,j)}; lands in E_lam(mu)."""
    image = set()
    total = 0
    for (i, j), es in T.cells:
        for x in es:
            image.add((x, x + j - i))
            total += 1
    C = BoxSet(T.geometry, T.ambient, frozenset(image))
    if len(C.boxes) != total:
        raise RuntimeError(f"f is not injective on the entries of {T}")
    return C


def f_inverse(C: BoxSet, lam) -> SetValuedTableau:
    """The unique T with f(T) = C, filled one diagonal at a time from the top.

    Follows the constructive uniqueness argument: an entry x on diagonal q
    goes into the single box of lam's diagonal q compatible with the already
    filled diagonal q+1.
    """
    lam = trim(lam)
    shape_boxes = ambient_boxes(lam, C.geometry)
    diagonals = sorted({j - i for (i, j) in shape_boxes}, reverse=True)
    filled = {}
    for q in diagonals:
        lam_boxes = sorted(b for b in shape_boxes if b[1] - b[0] == q)
        entries = sorted(i for (i, j) in C.boxes if j - i == q)
        for x in entries:
            spot = None
            for (i, j) in lam_boxes:
                above_right = filled.get((i - 1, j))
                if above_right is not None and x <= max(above_right):
                    continue
                right = filled.get((i, j + 1))
                if right is not None and x > min(right):
                    continue
                spot = (i, j)
                break
            if spot is None:
                raise ValueError(f"{C} is not in the image of f for shape {lam}")
            filled.setdefault(spot, []).append(x)
    leftover = {b for b in shape_boxes if b not in filled}
    if leftover:
        raise ValueError(f"{C} is not in the image of f for shape {lam}")
    T = SetValuedTableau(
        C.geometry, lam, C.ambient, tuple((b, tuple(es)) for b, es in filled.items())
    )
    if not is_semistandard(T) or not is_restricted(T) or f_map(T).boxes != C.boxes:
        raise ValueError(f"{C} is not in the image of f for shape {lam}")
    return T


def excite_tableau(T: SetValuedTableau, box, x: int, kind: str):
    """One tableau excitation in the ordinary geometry (test oracle for f).

    Type 1 replaces x by x+1 in the box, type 2 adds x+1; both need x+1 absent
    from the box and its neighbours and the restriction bound to keep holding.
    """
    if T.geometry != "ordinary":
        raise ValueError("tableau excitations are defined for the ordinary geometry")
    if kind not in ("type1", "type2"):
        raise ValueError(f"unknown excitation kind {kind!r}")
    i, j = box
    by_box = dict(T.cells)
    es = by_box.get((i, j), ())
    if x not in es:
        raise ValueError(f"entry {x} not in box {box}")
    if x in by_box.get((i, j + 1), ()):
        return None
    if x + 1 in es or x + 1 in by_box.get((i + 1, j), ()):
        return None
    if not _restriction_ok("ordinary", T.ambient, x + 1, i, j):
        return None
    new = set(es)
    if kind == "type1":
        new.remove(x)
    new.add(x + 1)
    cells = dict(by_box)
    cells[(i, j)] = tuple(sorted(new))
    T2 = SetValuedTableau(T.geometry, T.shape, T.ambient, tuple(cells.items()))
    if not is_semistandard(T2):
        return None
    return T2


def svt_to_json(T: SetValuedTableau) -> dict:
    return {
        "shape": list(T.shape),
        "cells": [{"box": list(b), "set": list(es)} for b, es in T.cells],
    }


def svt_from_json(data: dict, geometry: str, mu) -> SetValuedTableau:
    cells = tuple(
        (tuple(cell["box"]), tuple(cell["set"])) for cell in data["cells"]
    )
    return SetValuedTableau(geometry, tuple(data["shape"]), trim(mu), cells)
