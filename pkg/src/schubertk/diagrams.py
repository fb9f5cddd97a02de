"""(Shifted) Young diagrams, excitation moves, excited-diagram enumeration,
reflection-valued tableaux and their reading words.

Boxes are (row, col) pairs, 1-indexed, rows top to bottom.  Shifted diagrams
store boxes in absolute coordinates with col >= row; the type D column shift
only enters the weight formulas, never the stored geometry.
"""

from __future__ import annotations

from dataclasses import dataclass, field
from fractions import Fraction

from .shapes import contains, size, trim
from .weyl import RootSystem

GEOMETRIES = ("ordinary", "shiftedBC", "shiftedD")


def geometry_of(rstype: RootSystem) -> str:
    return {"A": "ordinary", "B": "shiftedBC", "C": "shiftedBC", "D": "shiftedD"}[
        rstype.kind
    ]


def ambient_boxes(mu, geometry: str) -> frozenset:
    """All boxes of D_mu (ordinary) or D'_mu (shifted)."""
    if geometry not in GEOMETRIES:
        raise ValueError(f"unknown geometry {geometry!r}")
    mu = trim(mu)
    boxes = set()
    for i, row_len in enumerate(mu, start=1):
        start = 1 if geometry == "ordinary" else i
        boxes.update((i, j) for j in range(start, start + row_len))
    return frozenset(boxes)


@dataclass(frozen=True)
class BoxSet:
    geometry: str
    ambient: tuple
    boxes: frozenset

    def __post_init__(self):
        object.__setattr__(self, "ambient", trim(self.ambient))
        object.__setattr__(self, "boxes", frozenset(self.boxes))
        legal = ambient_boxes(self.ambient, self.geometry)
        bad = self.boxes - legal
        if bad:
            raise ValueError(f"boxes {sorted(bad)} outside ambient {self.ambient}")

    def sorted_boxes(self) -> tuple:
        return tuple(sorted(self.boxes))

    def __len__(self):
        return len(self.boxes)

    def __repr__(self):
        return f"BoxSet({self.geometry}, mu={self.ambient}, {sorted(self.boxes)})"


def initial_diagram(lam, mu, geometry: str) -> BoxSet:
    """D_lam embedded box-for-box inside D_mu."""
    if not contains(lam, mu):
        raise ValueError(f"{lam} is not contained in {mu}")
    return BoxSet(geometry, trim(mu), ambient_boxes(lam, geometry))


def excite(C: BoxSet, box, kind) -> BoxSet | None:
    """Apply one excitation based at box, or return None when blocked.

    kind is "type1" (move) or "type2" (add).  Off-diagonal boxes need the
    three boxes (i+1,j), (i,j+1), (i+1,j+1) free inside the ambient; the
    shifted diagonal rules need two (B/C) or four (D) free boxes and move by
    one or two diagonal steps respectively.
    """
    if kind not in ("type1", "type2"):
        raise ValueError(f"unknown excitation kind {kind!r}")
    i, j = box
    if (i, j) not in C.boxes:
        raise ValueError(f"box {box} not in the diagram")
    legal = ambient_boxes(C.ambient, C.geometry)
    free = lambda b: b in legal and b not in C.boxes
    if C.geometry == "ordinary" or i != j:
        needed = ((i + 1, j), (i, j + 1), (i + 1, j + 1))
        target = (i + 1, j + 1)
    elif C.geometry == "shiftedBC":
        needed = ((i, i + 1), (i + 1, i + 1))
        target = (i + 1, i + 1)
    else:  # shiftedD diagonal
        needed = ((i, i + 1), (i + 1, i + 1), (i + 1, i + 2), (i + 2, i + 2))
        target = (i + 2, i + 2)
    if not all(free(b) for b in needed):
        return None
    new = set(C.boxes)
    if kind == "type1":
        new.remove((i, j))
    new.add(target)
    return BoxSet(C.geometry, C.ambient, frozenset(new))


def enumerate_eyd(lam, mu, geometry: str, reduced_only: bool = False) -> list:
    """All excited Young diagrams of D_lam in D_mu, by BFS over excitations.

    With reduced_only, only type 1 moves are applied, which yields the
    reduced excited diagrams.  Output is deduplicated and sorted by box list.
    """
    start = initial_diagram(lam, mu, geometry)
    kinds = ("type1",) if reduced_only else ("type1", "type2")
    seen = {start.boxes}
    frontier = [start]
    out = [start]
    while frontier:
        nxt = []
        for C in frontier:
            for box in C.boxes:
                for kind in kinds:
                    C2 = excite(C, box, kind)
                    if C2 is not None and C2.boxes not in seen:
                        seen.add(C2.boxes)
                        nxt.append(C2)
                        out.append(C2)
        frontier = nxt
    out.sort(key=lambda C: C.sorted_boxes())
    return out


def energies(C: BoxSet, lam) -> tuple:
    """(e1, e2): the type 1 and type 2 energies of C relative to lam."""
    lam = trim(lam)
    dl = ambient_boxes(lam, C.geometry)

    def weight(boxes):
        if C.geometry == "shiftedD":
            return sum(i + j if i < j else i for (i, j) in boxes)
        return sum(i + j for (i, j) in boxes)

    e1 = Fraction(weight(C.boxes) - weight(dl), 2)
    e2 = len(C.boxes) - size(lam)
    return e1, e2


@dataclass(frozen=True)
class ReflectionTableau:
    """The filling T_mu (or T'_mu) together with its reading order.

    reading_boxes lists boxes bottom row first, right to left within a row;
    positions into the reading word are 1-based throughout.
    """

    rstype: RootSystem
    d: int
    mu: tuple
    geometry: str
    entries: dict = field(compare=False)
    reading_boxes: tuple = field(compare=False)

    def letter(self, box) -> int:
        return self.entries[box]


def reflection_tableau(mu, rstype: RootSystem, d: int = None) -> ReflectionTableau:
    """Fill D_mu with simple reflections so that the reading word is reduced."""
    mu = trim(mu)
    n = rstype.rank
    kind = rstype.kind
    geometry = geometry_of(rstype)
    if kind == "A":
        if d is None:
            raise ValueError("type A needs d")
        if len(mu) > d or (mu and mu[0] > n - d):
            raise ValueError(f"{mu} does not fit in a {d}x{n - d} box")
    else:
        d = n
        bound = n if kind in ("B", "C") else n - 1
        if mu and mu[0] > bound:
            raise ValueError(f"{mu} does not fit: largest part exceeds {bound}")
    entries = {}
    for box in ambient_boxes(mu, geometry):
        i, j = box
        if kind == "A":
            entries[box] = d + j - i
        elif kind in ("B", "C"):
            entries[box] = n + i - j
        elif i == j:
            entries[box] = n if i % 2 == 1 else n - 1
        else:
            entries[box] = n + i - (j + 1)
    reading = tuple(
        sorted(entries, key=lambda b: (-b[0], -b[1]))
    )
    return ReflectionTableau(rstype, d, mu, geometry, entries, reading)


def reading_word(T: ReflectionTableau) -> tuple:
    return tuple(T.entries[b] for b in T.reading_boxes)


def subword_of(C: BoxSet, T: ReflectionTableau) -> tuple:
    """Reading-order positions of the boxes of C, 1-based."""
    if not C.boxes <= frozenset(T.reading_boxes):
        raise ValueError("diagram does not sit inside the tableau shape")
    return tuple(
        pos for pos, box in enumerate(T.reading_boxes, start=1) if box in C.boxes
    )


def boxset_to_json(C: BoxSet) -> dict:
    return {"ambient": list(C.ambient), "boxes": [list(b) for b in C.sorted_boxes()]}


def boxset_from_json(data: dict, geometry: str) -> BoxSet:
    return BoxSet(
        geometry,
        tuple(data["ambient"]),
        frozenset(tuple(b) for b in data["boxes"]),
    )


def boxset_to_tikz(C: BoxSet) -> str:
    """A minimal TikZ picture: ambient outline plus shaded boxes."""
    lines = [r"\begin{tikzpicture}[scale=.4]"]
    height = len(C.ambient)
    for (i, j) in sorted(ambient_boxes(C.ambient, C.geometry)):
        y = height - i
        fill = "[fill=blue!30]" if (i, j) in C.boxes else ""
        lines.append(
            rf"\draw{fill} ({j - 1},{y}) rectangle ({j},{y + 1});"
        )
    lines.append(r"\end{tikzpicture}")
    return "\n".join(lines)
