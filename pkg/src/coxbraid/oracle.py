"""Brute-force ground truth: enumeration, rewrite graphs, naive divisors.

Everything here is definitionally exhaustive within its bounds and is used
by tests and by the explicit ``oracle`` CLI subcommand only; the main
algorithms never call into this module.
"""

from __future__ import annotations

from collections import deque
from dataclasses import dataclass

from .coxeter import CoxeterSystem, WElement
from .errors import BoundExceeded, NotSphericalType
from .words import Word, braid_move_rewrites, free_deletions, free_insertions, free_reduce


def enumerate_w(system: CoxeterSystem, I) -> list[WElement]:
    """All elements of the standard parabolic W_I, shortest words first."""
    if not system.is_finite_type(I):
        raise NotSphericalType(f"W_{sorted(I)} is infinite")
    I = sorted(I, key=lambda s: system.index[s])
    seen = {(): system.identity}
    frontier = [system.identity]
    while frontier:
        nxt = []
        for w in frontier:
            for s in I:
                w2 = system.element(w.word + (s,))
                if w2.word not in seen:
                    seen[w2.word] = w2
                    nxt.append(w2)
        frontier = nxt
    return sorted(seen.values(), key=lambda w: (w.length, w.word))


class FiniteGroupTable:
    """Index-based multiplication table for an enumerated finite W_I."""

    def __init__(self, system: CoxeterSystem, I):
        self.system = system
        self.I = sorted(I, key=lambda s: system.index[s])
        self.elements = enumerate_w(system, I)
        self.index = {w.word: i for i, w in enumerate(self.elements)}
        n = len(self.elements)
        self._right = {}
        for s in self.I:
            col = []
            for w in self.elements:
                col.append(self.index[system.element(w.word + (s,)).word])
            self._right[s] = col
        self._inv = [self.index[w.inverse().word] for w in self.elements]

    def __len__(self):
        return len(self.elements)

    def idx(self, w: WElement) -> int:
        return self.index[w.word]

    def mult(self, i: int, j: int) -> int:
        for s in self.elements[j].word:
            i = self._right[s][i]
        return i

    def inv(self, i: int) -> int:
        return self._inv[i]

    def conj(self, i: int, g: int) -> int:
        return self.mult(self.mult(self._inv[g], i), g)


# -- rewrite graphs on signed words ------------------------------------------


def neighbors(system: CoxeterSystem, word: Word, max_len: int):
    """Single rewrite steps: braid moves, free deletions, bounded insertions."""
    yield from braid_move_rewrites(system, word)
    yield from free_deletions(word)
    if len(word) + 2 <= max_len:
        yield from free_insertions(system, word)


def rewrite_equal(system: CoxeterSystem, a: Word, b: Word, bound: int, node_cap: int = 200_000) -> str:
    """'equal' if a and b are connected in the bounded rewrite graph, else 'unknown'."""
    a, b = free_reduce(a), free_reduce(b)
    if a == b:
        return "equal"
    max_len = max(len(a), len(b), bound)
    seen = {a}
    queue = deque([a])
    while queue:
        if len(seen) > node_cap:
            return "unknown"
        cur = queue.popleft()
        for nxt in neighbors(system, cur, max_len):
            if nxt == b:
                return "equal"
            if nxt not in seen:
                seen.add(nxt)
                queue.append(nxt)
    return "unknown"


def min_word_length(system: CoxeterSystem, word: Word, node_cap: int = 200_000) -> int:
    """ell_S of the element: shortest word in the bounded rewrite component.

    Oracle-grade: explores insertions only up to the starting length, which
    suffices at desk scale (a geodesic witness is reachable that way in all
    exercised instances).
    """
    word = free_reduce(word)
    best = len(word)
    max_len = len(word)
    seen = {word}
    queue = deque([word])
    while queue:
        if len(seen) > node_cap:
            raise BoundExceeded("rewrite ball too large")
        cur = queue.popleft()
        for nxt in neighbors(system, cur, max_len):
            if nxt not in seen:
                seen.add(nxt)
                best = min(best, len(nxt))
                queue.append(nxt)
    return best


# -- naive positive-braid lattice ----------------------------------------------


def positive_class(system: CoxeterSystem, letters: tuple[str, ...], cap: int = 300_000) -> frozenset[tuple[str, ...]]:
    """All positive words equal to the given one (positive braid moves only)."""
    start = tuple(letters)
    seen = {start}
    queue = deque([start])
    while queue:
        if len(seen) > cap:
            raise BoundExceeded("positive class too large")
        cur = queue.popleft()
        for i in range(len(cur)):
            for j in range(i + 2, len(cur) + 1):
                seg = cur[i:j]
                alt = _braid_swap(system, seg)
                if alt is not None:
                    w2 = cur[:i] + alt + cur[j:]
                    if w2 not in seen:
                        seen.add(w2)
                        queue.append(w2)
    return frozenset(seen)


def _braid_swap(system: CoxeterSystem, seg: tuple[str, ...]):
    if len(seg) < 2:
        return None
    s, t = seg[0], seg[1]
    if s == t:
        return None
    m = system.m(s, t)
    if m is None or m != len(seg):
        return None
    expect = tuple(s if k % 2 == 0 else t for k in range(m))
    if seg != expect:
        return None
    return tuple(t if k % 2 == 0 else s for k in range(m))


def positive_key(system: CoxeterSystem, letters: tuple[str, ...]) -> tuple[str, ...]:
    """Canonical (lexicographically least) word of the positive class."""
    return min(positive_class(system, letters))


@dataclass(frozen=True)
class DivisorLattice:
    """Left-divisors of a positive word, by exhaustive positive-class search."""

    keys: frozenset[tuple[str, ...]]            # canonical words of the divisors
    witness: dict                               # key -> (prefix word, full word it is a prefix of)


def naive_divisors(system: CoxeterSystem, letters: tuple[str, ...], cap_lambda: int = 8) -> DivisorLattice:
    if len(letters) > cap_lambda:
        raise BoundExceeded(f"lambda {len(letters)} exceeds naive bound {cap_lambda}")
    keys = set()
    witness = {}
    for word in positive_class(system, tuple(letters)):
        for i in range(len(word) + 1):
            key = positive_key(system, word[:i])
            if key not in keys:
                keys.add(key)
                witness[key] = (word[:i], word)
    return DivisorLattice(frozenset(keys), witness)


def naive_normal_form(system: CoxeterSystem, letters: tuple[str, ...]) -> tuple[tuple[str, ...], ...]:
    """Left-greedy normal form computed only from the divisor lattice."""
    letters = tuple(letters)
    factors = []
    while letters:
        lat = naive_divisors(system, letters, cap_lambda=len(letters))
        simples = [k for k in lat.keys if k and len(system.element(k).word) == len(k)]
        top_len = max(len(k) for k in simples)
        top = [k for k in simples if len(k) == top_len]
        heads = {system.element(k).word for k in top}
        assert len(heads) == 1, "head of a positive braid must be unique"
        head = top[0]
        rest = None
        for word in positive_class(system, letters):
            if positive_key(system, word[: len(head)]) == positive_key(system, head):
                rest = word[len(head):]
                break
        assert rest is not None
        factors.append(system.element(head).word)
        letters = rest
    return tuple(factors)


def naive_retract(system: CoxeterSystem, I, word: Word) -> Word:
    """Retraction computed definitionally, recomputing every coset tail afresh."""
    out = []
    for j in range(1, len(word) + 1):
        prefix = tuple(s for s, _ in word[: j - 1])
        tail = system.coset_tail(I, system.element(prefix))
        s_j, eps = word[j - 1]
        named = system.simple_root_name(tail.act(system.simple_root(s_j)))
        if named is not None and named[0] in I:
            out.append((named[0], eps))
    return tuple(out)
