"""0-Hecke (Demazure) products and subsequence enumeration.

The 0-Hecke monoid multiplies by ``H_s H_w = H_{sw}`` when the length goes
up and absorbs the letter otherwise.  Folding a word gives the ground-truth
oracle against which the diagram and tableau backends are checked, and the
full-commutativity utilities support the reduced-word property tests.
"""

from __future__ import annotations

from collections import deque
from functools import lru_cache
from typing import NamedTuple

from .weyl import (
    RootSystem,
    WeylElement,
    apply,
    identity,
    is_positive_root_vector,
    length,
    mult,
    reduced_word,
    simple_reflection,
    simple_roots,
    window_right_ascent,
    window_right_mult,
)

DEFAULT_CAP = 24


class HeckeSubseq(NamedTuple):
    indices: tuple  # strictly increasing 1-based positions into the word
    length: int     # l(t) = number of letters
    excess: int     # e(t) = l(t) - l(w)


def _check_letters(word, rstype: RootSystem):
    for i in word:
        if not 1 <= i <= rstype.num_simple:
            raise ValueError(f"letter {i} out of range for {rstype}")


def demazure_fold(word, rstype: RootSystem) -> WeylElement:
    """Fold H_{s_1}...H_{s_q} right to left; the empty word folds to the identity."""
    _check_letters(word, rstype)
    alphas = simple_roots(rstype)
    u = identity(rstype)
    uinv = u
    for i in reversed(word):
        # l(s_i u) > l(u) iff u^{-1}(alpha_i) is positive
        if is_positive_root_vector(apply(uinv, alphas[i - 1])):
            s = simple_reflection(rstype, i)
            u = mult(s, u)
            uinv = mult(uinv, s)
    return u


def demazure_fold_ltr(word, rstype: RootSystem) -> WeylElement:
    """Left-to-right fold; agrees with demazure_fold by associativity."""
    _check_letters(word, rstype)
    kind = rstype.kind
    win = tuple(range(1, rstype.rank + 1))
    for i in word:
        if window_right_ascent(kind, win, i):
            win = window_right_mult(kind, win, i)
    return WeylElement(rstype, win)


def hecke_subsequences(w: WeylElement, word, cap: int = DEFAULT_CAP) -> list:
    """All index subsequences of word whose fold is w, in lexicographic order.

    Distinct index tuples count separately even when they spell the same
    letters.  Raises if the word is longer than cap (the search is 2^length
    in the worst case).
    """
    if len(word) > cap:
        raise ValueError(f"word length {len(word)} exceeds cap {cap}")
    rs = w.rstype
    _check_letters(word, rs)
    kind = rs.kind
    target = w.window
    lw = length(w)
    q = len(word)
    lengths = {tuple(range(1, rs.rank + 1)): 0}
    out = []

    def rec(pos, win, taken, chosen):
        lu = lengths[win]
        if lu > lw or lu + (q - pos) < lw:
            return
        if pos == q:
            if win == target:
                out.append(HeckeSubseq(tuple(chosen), taken, taken - lw))
            return
        i = word[pos]
        chosen.append(pos + 1)
        if window_right_ascent(kind, win, i):
            win2 = window_right_mult(kind, win, i)
            if win2 not in lengths:
                lengths[win2] = lu + 1
            rec(pos + 1, win2, taken + 1, chosen)
        else:
            rec(pos + 1, win, taken + 1, chosen)
        chosen.pop()
        rec(pos + 1, win, taken, chosen)

    rec(0, tuple(range(1, rs.rank + 1)), 0, [])
    out.sort(key=lambda t: t.indices)
    return out


def subsequence_stats(w: WeylElement, word) -> dict:
    """Count subsequences folding to w, bucketed by l(t).

    Dynamic program over (fold state, taken letters); equivalent to the
    explicit enumeration but polynomial in practice.
    """
    rs = w.rstype
    _check_letters(word, rs)
    kind = rs.kind
    lw = length(w)
    ident = tuple(range(1, rs.rank + 1))
    # state -> {taken: count}; states longer than l(w) can never fold back down
    states = {ident: {0: 1}}
    lengths = {ident: 0}
    for i in word:
        nxt = {}
        for win, buckets in states.items():
            skip = nxt.setdefault(win, {})
            for m, c in buckets.items():
                skip[m] = skip.get(m, 0) + c
            if window_right_ascent(kind, win, i):
                win2 = window_right_mult(kind, win, i)
                if win2 not in lengths:
                    lengths[win2] = lengths[win] + 1
                if lengths[win2] > lw:
                    continue
            else:
                win2 = win
            take = nxt.setdefault(win2, {})
            for m, c in buckets.items():
                take[m + 1] = take.get(m + 1, 0) + c
        states = nxt
    return dict(sorted(states.get(w.window, {}).items()))


@lru_cache(maxsize=None)
def m_order(rstype: RootSystem, i: int, j: int) -> int:
    """Order of s_i s_j in W, derived from the root system rather than a table."""
    st = mult(simple_reflection(rstype, i), simple_reflection(rstype, j))
    u = st
    m = 1
    ident = identity(rstype)
    while u != ident:
        u = mult(st, u)
        m += 1
    return m


def commutation_class(word, rstype: RootSystem, max_size: int = 200000) -> list:
    """All words reachable from a reduced word by swapping adjacent commuting letters."""
    word = tuple(word)
    _fold_reduced_check(word, rstype)
    seen = {word}
    queue = deque([word])
    while queue:
        cur = queue.popleft()
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a != b and m_order(rstype, a, b) == 2:
                nxt = cur[:k] + (b, a) + cur[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
                    if len(seen) > max_size:
                        raise RuntimeError("commutation class too large")
    return sorted(seen)


def _fold_reduced_check(word, rstype: RootSystem) -> WeylElement:
    w = demazure_fold(word, rstype)
    if length(w) != len(word):
        raise ValueError(f"word {tuple(word)} is not reduced")
    return w


def _has_braid_factor(word, rstype: RootSystem) -> bool:
    for k in range(len(word) - 1):
        a, b = word[k], word[k + 1]
        if a == b:
            continue
        m = m_order(rstype, a, b)
        if m < 3 or k + m > len(word):
            continue
        if all(word[k + t] == (a if t % 2 == 0 else b) for t in range(m)):
            return True
    return False


def is_fully_commutative(w: WeylElement) -> bool:
    """True iff no word in the commutation class contains a braid factor s,t,s,...

    of length m(s,t) >= 3 (Stembridge's criterion, checked by BFS over the
    commutation class of one reduced word).
    """
    rs = w.rstype
    start = tuple(reduced_word(w))
    seen = {start}
    queue = deque([start])
    while queue:
        cur = queue.popleft()
        if _has_braid_factor(cur, rs):
            return False
        for k in range(len(cur) - 1):
            a, b = cur[k], cur[k + 1]
            if a != b and m_order(rs, a, b) == 2:
                nxt = cur[:k] + (b, a) + cur[k + 2:]
                if nxt not in seen:
                    seen.add(nxt)
                    queue.append(nxt)
    return True
