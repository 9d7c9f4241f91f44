"""The positive Artin monoid as a locally Garside monoid.

Positive braids are kept in left-greedy normal form: each factor is the
greatest simple left-divisor of what remains.  Simples are identified with
Coxeter group elements through the canonical lift, so all factor
arithmetic happens on canonical reduced words.

Lattice operations use order-theoretic algorithms that are valid for
every Coxeter matrix: the left-gcd peels common atoms (an atom divides a
positive braid iff it divides its head), and the conditional right-lcm is
computed by right-reversing with a completion bound, reporting failure
honestly when no common multiple appears within the bound.  On simples in
finite type these agree with the biclosed-closure formulas of the
weak-order lattice, which the tests check.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, WElement
from .errors import LcmBoundExceeded, NotConjugatePositive, NotReduced
from .words import Word, positive_word, retract_word


@dataclass(frozen=True)
class PositiveBraid:
    """A positive braid in left-greedy normal form."""

    system: CoxeterSystem
    factors: tuple[WElement, ...]

    @property
    def braid_length(self) -> int:
        return sum(f.length for f in self.factors)

    def is_identity(self) -> bool:
        return not self.factors

    def head(self) -> WElement:
        return self.factors[0] if self.factors else self.system.identity

    def tail(self) -> "PositiveBraid":
        return PositiveBraid(self.system, self.factors[1:])

    def as_word(self) -> Word:
        return tuple((s, 1) for f in self.factors for s in f.word)

    def letters(self) -> tuple[str, ...]:
        return tuple(s for f in self.factors for s in f.word)

    def __mul__(self, other: "PositiveBraid") -> "PositiveBraid":
        assert self.system == other.system
        return normalize(self.system, self.factors + other.factors)

    def __repr__(self):
        if not self.factors:
            return "B+()"
        return "B+(" + " | ".join(" ".join(f.word) for f in self.factors) + ")"


def from_letters(system: CoxeterSystem, letters) -> PositiveBraid:
    if isinstance(letters, str):
        letters = letters.split()
    return normalize(system, tuple(system.element([s]) for s in letters))


def from_positive_word(system: CoxeterSystem, word: Word) -> PositiveBraid:
    assert all(e == 1 for _, e in word), "word must be positive"
    return from_letters(system, [s for s, _ in word])


def simple_product_is_simple(u: WElement, v: WElement) -> bool:
    return (u * v).length == u.length + v.length


def _slide(system: CoxeterSystem, u: WElement, v: WElement):
    """Make (u, v) left-greedy by moving left descents of v into u."""
    changed = False
    progressing = True
    while progressing:
        progressing = False
        for s in system.generators:
            if system.is_left_descent(s, v) and not system.is_right_descent(u, s):
                u = system.element(u.word + (s,))
                v = system.element((s,) + v.word)
                changed = True
                progressing = True
    return u, v, changed


def normalize(system: CoxeterSystem, factors) -> PositiveBraid:
    """Left-greedy normal form of a product of simples."""
    work = [f for f in factors if not f.is_identity()]
    changed = True
    while changed:
        changed = False
        for i in range(len(work) - 2, -1, -1):
            u, v, moved = _slide(system, work[i], work[i + 1])
            if moved:
                changed = True
                work[i] = u
                if v.is_identity():
                    del work[i + 1]
                else:
                    work[i + 1] = v
    return PositiveBraid(system, tuple(work))


def is_normal_form(system: CoxeterSystem, factors) -> bool:
    if any(f.is_identity() for f in factors):
        return False
    for u, v in zip(factors, factors[1:]):
        for s in system.generators:
            if system.is_left_descent(s, v) and not system.is_right_descent(u, s):
                return False
    return True


# -- divisibility ---------------------------------------------------------------


def atom_divides(system: CoxeterSystem, s: str, b: PositiveBraid) -> bool:
    """An atom left-divides b iff it left-divides the head."""
    return bool(b.factors) and system.is_left_descent(s, b.head())


def strip_atom(system: CoxeterSystem, s: str, b: PositiveBraid) -> PositiveBraid:
    assert atom_divides(system, s, b)
    head = system.element((s,) + b.head().word)
    rest = (head,) + b.factors[1:] if not head.is_identity() else b.factors[1:]
    return normalize(system, rest)


def left_divides(system: CoxeterSystem, u: PositiveBraid, v: PositiveBraid) -> bool:
    while not u.is_identity():
        s = u.head().word[0]
        if not atom_divides(system, s, v):
            return False
        u = strip_atom(system, s, u)
        v = strip_atom(system, s, v)
    return True


def left_quotient(system: CoxeterSystem, u: PositiveBraid, v: PositiveBraid) -> PositiveBraid | None:
    """u^{-1} v when u left-divides v, else None."""
    while not u.is_identity():
        s = u.head().word[0]
        if not atom_divides(system, s, v):
            return None
        u = strip_atom(system, s, u)
        v = strip_atom(system, s, v)
    return v


def left_gcd(system: CoxeterSystem, a: PositiveBraid, b: PositiveBraid) -> PositiveBraid:
    """Greatest common left-divisor, by greedy common-atom peeling."""
    out: list[str] = []
    while True:
        for s in system.generators:
            if atom_divides(system, s, a) and atom_divides(system, s, b):
                out.append(s)
                a = strip_atom(system, s, a)
                b = strip_atom(system, s, b)
                break
        else:
            return from_letters(system, out)


def _right_reverse(system: CoxeterSystem, u: tuple[str, ...], v: tuple[str, ...], bound: int):
    """Rewrite u^{-1} v into (u \\ v)(v \\ u)^{-1} by iterated reversing.

    Returns (u\\v, v\\u); None when an infinite bond blocks an elementary
    reversing step (no common multiple exists); raises when the number of
    reversing steps exceeds the bound.
    """
    word = [(s, -1) for s in reversed(u)] + [(t, 1) for t in v]
    while True:
        idx = None
        for i in range(len(word) - 1):
            if word[i][1] < 0 and word[i + 1][1] > 0:
                idx = i
                break
        if idx is None:
            break
        bound -= 1
        if bound < 0:
            raise LcmBoundExceeded("right-lcm completion exceeded its bound")
        s, t = word[idx][0], word[idx + 1][0]
        if s == t:
            replacement = []
        else:
            m = system.m(s, t)
            if m is None:
                return None
            s_comp_t = [(t if k % 2 == 0 else s, 1) for k in range(m - 1)]   # s \ t
            t_comp_s = [(s if k % 2 == 0 else t, 1) for k in range(m - 1)]   # t \ s
            replacement = s_comp_t + [(x, -1) for x, _ in reversed(t_comp_s)]
        word[idx : idx + 2] = replacement
    pos = tuple(x for x, e in word if e > 0)
    neg = tuple(reversed([x for x, e in word if e < 0]))
    return pos, neg


def right_lcm(system: CoxeterSystem, a: PositiveBraid, b: PositiveBraid, bound: int = 4096) -> PositiveBraid:
    """Least common right-multiple a * (a \\ b); raises when none exists in bound."""
    got = _right_reverse(system, a.letters(), b.letters(), bound)
    if got is None:
        raise LcmBoundExceeded("no common right-multiple: an infinite bond blocks completion")
    return a * from_letters(system, got[0])


# -- retraction on the positive monoid -------------------------------------------


def retract_positive(system: CoxeterSystem, I, b: PositiveBraid) -> PositiveBraid:
    """pi_I restricted to the positive monoid."""
    out = retract_word(system, I, b.as_word())
    return from_letters(system, [s for s, _ in out])


# -- the longest parabolic prefix --------------------------------------------------


def _max_parabolic_divisor(system: CoxeterSystem, I, w: WElement) -> WElement:
    """The greatest left-divisor of the simple w lying in W_I."""
    I = frozenset(I)
    u = system.identity
    rest = w
    progressing = True
    while progressing:
        progressing = False
        for s in system.generators:
            if s in I and system.is_left_descent(s, rest):
                u = system.element(u.word + (s,))
                rest = system.element((s,) + rest.word)
                progressing = True
    return u


def parabolic_prefix(system: CoxeterSystem, I, b: PositiveBraid) -> PositiveBraid:
    """H_I(b): the longest prefix of b inside the parabolic positive monoid."""
    out: list[str] = []
    while True:
        x = _max_parabolic_divisor(system, I, b.head()) if b.factors else system.identity
        if x.is_identity():
            return from_letters(system, out)
        out.extend(x.word)
        b = left_quotient(system, PositiveBraid(system, (x,)), b)
        assert b is not None


def is_parabolic_reduced(system: CoxeterSystem, I, b: PositiveBraid) -> bool:
    """No atom of I left-divides b (H_I(b) = 1)."""
    return not any(atom_divides(system, s, b) for s in I)


# -- positive ribbons ------------------------------------------------------------------


@dataclass(frozen=True)
class RibbonReport:
    source: frozenset[str]          # supp(b)
    target: frozenset[str]          # supp(b)^{pr(g)}
    conjugated: PositiveBraid       # b^g, positive
    generator_map: dict             # s in source -> its conjugate by g, an atom
    head_is_ribbon: bool
    prefix_transport_ok: bool


def support_positive(b: PositiveBraid) -> frozenset[str]:
    """Letters of any positive word for b; braid moves preserve this set."""
    return frozenset(b.letters())


def positive_ribbon_check(system: CoxeterSystem, b: PositiveBraid, g: PositiveBraid,
                          probe: PositiveBraid | None = None) -> RibbonReport:
    """Certify that g is a supp(b)-ribbon from a positive conjugate b^g.

    Preconditions (checked): g is supp(b)-reduced and b^g is positive,
    certified by g left-dividing b*g.
    """
    I = support_positive(b)
    if not is_parabolic_reduced(system, I, g):
        raise NotReduced("g has a nontrivial parabolic prefix for supp(b)")
    bg = b * g
    conj = left_quotient(system, g, bg)
    if conj is None:
        raise NotConjugatePositive("g does not left-divide b*g")
    gen_map = {}
    for s in sorted(I, key=lambda x: system.index[x]):
        q = left_quotient(system, g, from_letters(system, [s]) * g)
        if q is None or q.braid_length != 1:
            raise NotConjugatePositive(f"conjugate of atom {s} is not an atom")
        gen_map[s] = q.letters()[0]
    target = frozenset(gen_map.values())
    head = g.head() if g.factors else system.identity
    head_braid = PositiveBraid(system, (head,) if not head.is_identity() else ())
    head_ok = all(
        (q := left_quotient(system, head_braid, from_letters(system, [s]) * head_braid)) is not None
        and q.braid_length == 1
        for s in I
    )
    transport_ok = True
    if probe is not None:
        lhs = left_quotient(system, g, parabolic_prefix(system, I, g * probe) * g)
        rhs = parabolic_prefix(system, target, probe)
        transport_ok = lhs is not None and lhs.factors == rhs.factors
    return RibbonReport(I, target, conj, gen_map, head_ok, transport_ok)
