"""Coxeter systems with exact root arithmetic and canonical reduced words.

A ``CoxeterSystem`` owns the coefficient ring Z[2cos(pi/L)] and acts on
roots stored as coefficient tuples in the simple-root basis.  Group
elements (``WElement``) are canonical reduced words: the lexicographically
smallest reduced word, so string equality is group equality.

The module also provides the classical coset machinery: minimal coset and
double-coset representatives, Solomon's intersection for parabolic
subgroups, finite-type detection by diagram classification, and longest
elements.
"""

from __future__ import annotations

from dataclasses import dataclass
from math import lcm

from .cosfield import CosField, Elem
from .errors import NotReduced, NotSphericalType

Root = tuple  # tuple of CosField elements, indexed like generators

INFINITE = None  # matrix entry for an infinite bond


class CoxeterSystem:
    """A Coxeter matrix together with its exact reflection representation."""

    def __init__(self, generators, matrix):
        self.generators: tuple[str, ...] = tuple(generators)
        if len(set(self.generators)) != len(self.generators):
            raise ValueError("duplicate generator names")
        self.index = {s: i for i, s in enumerate(self.generators)}
        n = len(self.generators)
        norm = []
        for row in matrix:
            norm.append(tuple(INFINITE if m in (0, INFINITE) else int(m) for m in row))
        self.matrix: tuple[tuple[int | None, ...], ...] = tuple(norm)
        if len(self.matrix) != n or any(len(r) != n for r in self.matrix):
            raise ValueError("matrix shape does not match generators")
        for i in range(n):
            if self.matrix[i][i] != 1:
                raise ValueError("diagonal entries must be 1")
            for j in range(n):
                if self.matrix[i][j] != self.matrix[j][i]:
                    raise ValueError("matrix must be symmetric")
                if i != j and self.matrix[i][j] is not INFINITE and self.matrix[i][j] < 2:
                    raise ValueError("off-diagonal entries must be >= 2 or infinite")

        finite_ms = [m for i, row in enumerate(self.matrix) for j, m in enumerate(row) if i < j and m]
        self.field = CosField(lcm(*finite_ms) if finite_ms else 1)
        f = self.field
        # c[i][j] = 2cos(pi/m(i,j)) = -2B(alpha_i, alpha_j) for i != j
        self._c = tuple(
            tuple(f.two_cos_pi_over(self.matrix[i][j]) if i != j else f.from_int(-2) for j in range(n))
            for i in range(n)
        )
        self._act_cache: dict[tuple[int, Root], Root] = {}
        self._sign_cache: dict[Root, int] = {}
        self._reflection_cache: dict[Root, tuple[str, ...]] = {}
        self._known_reflections: set[tuple[str, ...]] = set()
        self._finite_cache: dict[frozenset, bool] = {}
        self._identity = WElement(self, ())

    # -- basic data ---------------------------------------------------------

    def m(self, s: str, t: str) -> int | None:
        return self.matrix[self.index[s]][self.index[t]]

    def __eq__(self, other):
        return (
            isinstance(other, CoxeterSystem)
            and self.generators == other.generators
            and self.matrix == other.matrix
        )

    def __hash__(self):
        return hash((self.generators, self.matrix))

    def __repr__(self):
        return f"CoxeterSystem({list(self.generators)})"

    # -- roots --------------------------------------------------------------

    def simple_root(self, s: str) -> Root:
        f = self.field
        return tuple(f.one if i == self.index[s] else f.zero for i in range(len(self.generators)))

    def act_letter(self, s: str, root: Root) -> Root:
        key = (self.index[s], root)
        cached = self._act_cache.get(key)
        if cached is not None:
            return cached
        f = self.field
        i = self.index[s]
        acc = f.neg(root[i])
        crow = self._c[i]
        for j, coord in enumerate(root):
            if j != i and not f.is_zero(coord):
                acc = f.add(acc, f.mul(crow[j], coord))
        new = root[:i] + (acc,) + root[i + 1 :]
        self._act_cache[key] = new
        return new

    def act_word(self, word, root: Root) -> Root:
        # word acts as the product of its letters, rightmost letter first
        for s in reversed(word):
            root = self.act_letter(s, root)
        return root

    def act_inverse_word(self, word, root: Root) -> Root:
        for s in word:
            root = self.act_letter(s, root)
        return root

    def pairing2(self, a: Root, b: Root) -> Elem:
        """Twice the invariant bilinear form; integral on the root lattice."""
        f = self.field
        acc = f.zero
        for i, ai in enumerate(a):
            if f.is_zero(ai):
                continue
            row = f.mul_int(b[i], 2)
            for j, bj in enumerate(b):
                if j != i and not f.is_zero(bj):
                    row = f.sub(row, f.mul(self._c[i][j], bj))
            acc = f.add(acc, f.mul(ai, row))
        return acc

    def reflect_by_root(self, a: Root, v: Root) -> Root:
        """Image of v under the reflection with root a (a must have unit norm)."""
        f = self.field
        coef = self.pairing2(a, v)
        return tuple(f.sub(vc, f.mul(coef, ac)) for vc, ac in zip(v, a))

    def root_sign(self, root: Root) -> int:
        """+1 for positive roots, -1 for negative ones; 0 never occurs on roots."""
        cached = self._sign_cache.get(root)
        if cached is not None:
            return cached
        f = self.field
        sign = 0
        for coord in root:
            s = f.sign(coord)
            if s:
                if sign and s != sign:
                    raise ValueError("mixed-sign vector is not a root")
                sign = s
        self._sign_cache[root] = sign
        return sign

    def root_support(self, root: Root) -> frozenset[str]:
        f = self.field
        return frozenset(s for s, c in zip(self.generators, root) if not f.is_zero(c))

    def root_in_parabolic(self, root: Root, I) -> bool:
        return self.root_support(root) <= frozenset(I)

    def simple_root_name(self, root: Root) -> tuple[str, int] | None:
        """(generator, sign) if root is +-alpha_s, else None."""
        f = self.field
        hit = None
        for s, c in zip(self.generators, root):
            if f.is_zero(c):
                continue
            if hit is not None:
                return None
            if c == f.one:
                hit = (s, 1)
            elif c == f.neg(f.one):
                hit = (s, -1)
            else:
                return None
        return hit

    # -- canonical words -----------------------------------------------------

    def reduce_word(self, letters) -> tuple[str, ...]:
        """Some reduced word for the product of letters (not yet canonical)."""
        word: list[str] = []
        for s in letters:
            r = self.act_word(word, self.simple_root(s))
            if self.root_sign(r) > 0:
                word.append(s)
            else:
                # exchange condition: deleting one letter of word gives word*s
                r = self.simple_root(s)
                for i in range(len(word) - 1, -1, -1):
                    r2 = self.act_letter(word[i], r)
                    if self.root_sign(r2) < 0:
                        del word[i]
                        break
                    r = r2
                else:  # pragma: no cover - guarded by root_sign above
                    raise AssertionError("exchange failed")
        return tuple(word)

    def lex_canonical(self, reduced) -> tuple[str, ...]:
        """Lexicographically smallest reduced word for an already reduced word."""
        word = list(reduced)
        out: list[str] = []
        while word:
            for s in self.generators:
                if self.root_sign(self.act_inverse_word(word, self.simple_root(s))) < 0:
                    break
            else:  # pragma: no cover
                raise AssertionError("nonempty word with no descent")
            out.append(s)
            r = self.simple_root(s)
            for i, letter in enumerate(word):
                r2 = self.act_letter(letter, r)
                if self.root_sign(r2) < 0:
                    del word[i]
                    break
                r = r2
            else:  # pragma: no cover
                raise AssertionError("left exchange failed")
        return tuple(out)

    def canonical_word(self, letters) -> tuple[str, ...]:
        return self.lex_canonical(self.reduce_word(letters))

    def element(self, letters) -> "WElement":
        if isinstance(letters, str):
            letters = letters.split()
        letters = tuple(letters)
        for s in letters:
            if s not in self.index:
                raise ValueError(f"unknown generator {s!r}")
        return WElement(self, self.canonical_word(letters))

    @property
    def identity(self) -> "WElement":
        return self._identity

    def gen(self, s: str) -> "WElement":
        return self.element([s])

    # -- descents and cosets --------------------------------------------------

    def is_left_descent(self, s: str, w: "WElement") -> bool:
        return self.root_sign(self.act_inverse_word(w.word, self.simple_root(s))) < 0

    def is_right_descent(self, w: "WElement", s: str) -> bool:
        return self.root_sign(self.act_word(w.word, self.simple_root(s))) < 0

    def coset_tail(self, I, w: "WElement") -> "WElement":
        """t_I(w): the unique I-reduced element of the coset W_I w."""
        I = frozenset(I)
        v = w
        changed = True
        while changed:
            changed = False
            for s in self.generators:
                if s in I and self.is_left_descent(s, v):
                    v = self.element((s,) + v.word)
                    changed = True
        return v

    def coset_head(self, I, w: "WElement") -> "WElement":
        """pi_I(w) = w * t_I(w)^{-1}, the W_I part of w."""
        return w * self.coset_tail(I, w).inverse()

    def coset_tail_right(self, I, w: "WElement") -> "WElement":
        """The unique reduced-I element of the coset w W_I."""
        I = frozenset(I)
        v = w
        changed = True
        while changed:
            changed = False
            for s in self.generators:
                if s in I and self.is_right_descent(v, s):
                    v = self.element(v.word + (s,))
                    changed = True
        return v

    def coset_head_right(self, I, w: "WElement") -> "WElement":
        return self.coset_tail_right(I, w).inverse() * w

    def is_I_reduced(self, I, w: "WElement") -> bool:
        return not any(self.is_left_descent(s, w) for s in I)

    def is_reduced_J(self, w: "WElement", J) -> bool:
        return not any(self.is_right_descent(w, s) for s in J)

    def double_coset_min(self, I, J, w: "WElement") -> "WElement":
        """The minimal element of W_I w W_J (I-reduced-J)."""
        d = w
        while True:
            d2 = self.coset_tail_right(J, self.coset_tail(I, d))
            if d2 == d:
                return d
            d = d2

    def i_reduced_j_decompose(self, I, J, w: "WElement"):
        """w = i * d * j with d minimal in W_I w W_J and additive lengths."""
        t = self.coset_tail(I, w)
        i = w * t.inverse()
        d = self.double_coset_min(I, J, w)
        j = d.inverse() * t
        assert set(j.word) <= set(J) and set(i.word) <= set(I)
        assert i.length + d.length + j.length == w.length
        return i, d, j

    # -- Solomon intersections -------------------------------------------------

    def twisted_subset(self, I, w: "WElement", J) -> frozenset[str]:
        """J1 = I^w \\cap J = {j in J : w j w^{-1} in I} (as subsets of S)."""
        out = set()
        for j in J:
            named = self.simple_root_name(self.act_word(w.word, self.simple_root(j)))
            if named is not None and named[0] in I:
                out.add(j)
        return frozenset(out)

    def solomon_intersection(self, I, J, w: "WElement") -> frozenset[str]:
        """Generators J1 with W_J \\cap W_I^w = W_{J1}, for w I-reduced-J (Solomon)."""
        if not (self.is_I_reduced(I, w) and self.is_reduced_J(w, J)):
            raise NotReduced("w must be I-reduced-J")
        return self.twisted_subset(I, w, J)

    def is_ribbon(self, I, w: "WElement") -> bool:
        """w is an I-ribbon: I-reduced with I^w a subset of S."""
        if not self.is_I_reduced(I, w):
            return False
        winv = w.inverse()
        for i in I:
            if self.simple_root_name(self.act_word(winv.word, self.simple_root(i))) is None:
                return False
        return True

    def ribbon_target(self, I, w: "WElement") -> frozenset[str]:
        """I^w, assuming w is an I-ribbon."""
        winv = w.inverse()
        out = set()
        for i in I:
            named = self.simple_root_name(self.act_word(winv.word, self.simple_root(i)))
            assert named is not None and named[1] == 1, "not a ribbon"
            out.add(named[0])
        return frozenset(out)

    def ribbon_map(self, I, w: "WElement") -> dict[str, str]:
        """phi_w : I^w -> I, j |-> w j w^{-1}."""
        J = self.ribbon_target(I, w)
        out = {}
        for j in J:
            named = self.simple_root_name(self.act_word(w.word, self.simple_root(j)))
            assert named is not None and named[1] == 1
            out[j] = named[0]
        return out

    # -- inversion sets ----------------------------------------------------------

    def inversion_roots(self, w: "WElement") -> tuple[Root, ...]:
        """The roots s_1...s_{i-1}(alpha_{s_i}) of a reduced word; all positive."""
        out = []
        prefix: list[str] = []
        for s in w.word:
            out.append(self.act_word(prefix, self.simple_root(s)))
            prefix.append(s)
        return tuple(out)

    def inversion_set(self, w: "WElement") -> frozenset["WElement"]:
        """N(w) as a set of reflections; |N(w)| = length(w)."""
        return frozenset(self.reflection_from_root(r) for r in self.inversion_roots(w))

    def reflection_from_root(self, root: Root) -> "WElement":
        """The reflection with positive root `root`."""
        if self.root_sign(root) < 0:
            root = tuple(self.field.neg(c) for c in root)
        word = self._reflection_cache.get(root)
        if word is None:
            word = self._reflection_word(root)
            self._reflection_cache[root] = word
            self._known_reflections.add(word)
        return WElement(self, word)

    def _reflection_word(self, root: Root) -> tuple[str, ...]:
        named = self.simple_root_name(root)
        if named is not None:
            return (named[0],)
        f = self.field
        for s in self.generators:
            # pairing2 > 0 makes s(root) a positive root of smaller depth
            if f.sign(self.pairing2(self.simple_root(s), root)) > 0:
                inner = self._reflection_word(self.act_letter(s, root))
                return self.canonical_word((s,) + inner + (s,))
        raise ValueError("vector is not a root")  # pragma: no cover

    def root_of_reflection(self, t: "WElement") -> Root:
        """alpha_t: the positive root negated by the reflection t."""
        for r in self.inversion_roots(t):
            if self.act_word(t.word, r) == tuple(self.field.neg(c) for c in r):
                return r
        raise ValueError("element is not a reflection")

    def is_reflection(self, t: "WElement") -> bool:
        if t.word in self._known_reflections:
            return True
        ok = t.length % 2 == 1 and (t * t).is_identity()
        if ok:
            self._known_reflections.add(t.word)
        return ok

    def reflection_in_parabolic(self, t: "WElement", I) -> bool:
        return self.root_support(self.root_of_reflection(t)) <= frozenset(I)

    # -- finite type, longest elements ---------------------------------------------

    def is_finite_type(self, I) -> bool:
        I = frozenset(I)
        cached = self._finite_cache.get(I)
        if cached is None:
            cached = all(_component_is_finite(self, comp) for comp in _components(self, I))
            self._finite_cache[I] = cached
        return cached

    def longest_element(self, I) -> "WElement":
        if not self.is_finite_type(I):
            raise NotSphericalType(f"W_{sorted(I)} is not finite")
        v = self.identity
        I = sorted(I, key=lambda s: self.index[s])
        while True:
            for s in I:
                if not self.is_right_descent(v, s):
                    v = self.element(v.word + (s,))
                    break
            else:
                return v

    def positive_roots(self, I) -> frozenset[Root]:
        """All positive roots of the standard parabolic W_I (finite type only)."""
        if not self.is_finite_type(I):
            raise NotSphericalType(f"W_{sorted(I)} has infinitely many roots")
        I = list(I)
        frontier = [self.simple_root(s) for s in I]
        seen = set(frontier)
        while frontier:
            nxt = []
            for r in frontier:
                for s in I:
                    r2 = self.act_letter(s, r)
                    if self.root_sign(r2) > 0 and r2 not in seen:
                        seen.add(r2)
                        nxt.append(r2)
            frontier = nxt
        return frozenset(seen)

    def reflections(self, I) -> frozenset["WElement"]:
        return frozenset(self.reflection_from_root(r) for r in self.positive_roots(I))


def _components(system: CoxeterSystem, I):
    todo = set(I)
    while todo:
        comp = {todo.pop()}
        grew = True
        while grew:
            grew = False
            for s in list(todo):
                if any(system.m(s, t) not in (2,) for t in comp):
                    comp.add(s)
                    todo.discard(s)
                    grew = True
        yield comp


def _component_is_finite(system: CoxeterSystem, comp) -> bool:
    nodes = sorted(comp, key=lambda s: system.index[s])
    n = len(nodes)
    edges = []
    for i in range(n):
        for j in range(i + 1, n):
            m = system.m(nodes[i], nodes[j])
            if m is INFINITE:
                return False
            if m >= 3:
                edges.append((nodes[i], nodes[j], m))
    if len(edges) != n - 1:
        return n == 1  # a cycle (affine) unless the component is a single node
    degree = {s: 0 for s in nodes}
    for a, b, _ in edges:
        degree[a] += 1
        degree[b] += 1
    branch = [s for s in nodes if degree[s] >= 3]
    labels = sorted(m for _, _, m in edges if m >= 4)
    if not branch:
        # a path; locate big labels by whether they touch an endpoint
        if not labels:
            return True  # type A
        if len(labels) > 1:
            return False
        m = labels[0]
        if n == 2:
            return True  # I2(m)
        a, b, _ = next(e for e in edges if e[2] == m)
        end_edge = degree[a] == 1 or degree[b] == 1
        if m == 4:
            return end_edge or n == 4  # type B/C, or F4 (middle bond of a 4-chain)
        if m == 5:
            return end_edge and n in (3, 4)  # H3, H4
        return False
    if len(branch) > 1 or labels or max(degree.values()) > 3:
        return False
    # single degree-3 node, all bonds simple: D or E by arm lengths
    center = branch[0]
    arms = []
    adj = {s: [t for t in nodes if s != t and system.m(s, t) >= 3] for s in nodes}
    for first in adj[center]:
        ln, prev, cur = 1, center, first
        while True:
            nxts = [t for t in adj[cur] if t != prev]
            if not nxts:
                break
            prev, cur = cur, nxts[0]
            ln += 1
        arms.append(ln)
    arms.sort()
    return arms[:2] == [1, 1] or arms in ([1, 2, 2], [1, 2, 3], [1, 2, 4])


@dataclass(frozen=True)
class WElement:
    """A Coxeter group element, stored as its canonical reduced word."""

    system: CoxeterSystem
    word: tuple[str, ...]

    @property
    def length(self) -> int:
        return len(self.word)

    def is_identity(self) -> bool:
        return not self.word

    def __mul__(self, other: "WElement") -> "WElement":
        assert self.system == other.system
        return WElement(self.system, self.system.canonical_word(self.word + other.word))

    def inverse(self) -> "WElement":
        return WElement(self.system, self.system.canonical_word(tuple(reversed(self.word))))

    def conjugate_by(self, g: "WElement") -> "WElement":
        """g^{-1} * self * g."""
        return g.inverse() * self * g

    def act(self, root: Root) -> Root:
        return self.system.act_word(self.word, root)

    @property
    def support(self) -> frozenset[str]:
        return frozenset(self.word)

    def in_parabolic(self, I) -> bool:
        return self.support <= frozenset(I)

    def __repr__(self):
        return "W(e)" if not self.word else "W(" + " ".join(self.word) + ")"


@dataclass(frozen=True)
class ReflectionBag:
    """An integer-valued, finitely supported function on reflections."""

    entries: tuple[tuple[WElement, int], ...] = ()

    @staticmethod
    def from_dict(d: dict[WElement, int]) -> "ReflectionBag":
        items = tuple(sorted(((t, c) for t, c in d.items() if c), key=lambda tc: (tc[0].length, tc[0].word)))
        for t, _ in items:
            if not t.system.is_reflection(t):
                raise ValueError(f"{t!r} is not a reflection")
        return ReflectionBag(items)

    def to_dict(self) -> dict[WElement, int]:
        return dict(self.entries)

    def add(self, other: "ReflectionBag") -> "ReflectionBag":
        d = self.to_dict()
        for t, c in other.entries:
            d[t] = d.get(t, 0) + c
        return ReflectionBag.from_dict(d)

    def scale(self, n: int) -> "ReflectionBag":
        return ReflectionBag.from_dict({t: n * c for t, c in self.entries})

    def conjugate_by(self, w: WElement) -> "ReflectionBag":
        """Push the bag through conjugation t |-> w t w^{-1}."""
        d: dict[WElement, int] = {}
        for t, c in self.entries:
            t2 = w * t * w.inverse()
            d[t2] = d.get(t2, 0) + c
        return ReflectionBag.from_dict(d)

    def mod2(self) -> frozenset[WElement]:
        return frozenset(t for t, c in self.entries if c % 2)

    def restrict(self, I) -> "ReflectionBag":
        I = frozenset(I)
        return ReflectionBag(
            tuple((t, c) for t, c in self.entries if t.system.reflection_in_parabolic(t, I))
        )

    def is_zero(self) -> bool:
        return not self.entries

    def __repr__(self):
        if not self.entries:
            return "Bag()"
        return "Bag(" + ", ".join(f"{c}*{' '.join(t.word)}" for t, c in self.entries) + ")"
