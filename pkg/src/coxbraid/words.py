"""Signed words over the generators and the word-level retraction.

A word is a tuple of (generator, sign) letters with sign +1 or -1; the
empty word is spelled ``e`` in text form.  Words are never auto-reduced:
the retraction operates on raw words, and its invariance under braid moves
and free cancellation is a tested theorem, not an assumption.

The retraction into a standard parabolic is implemented twice:

* ``retract_word`` scans the word once, maintaining the minimal coset
  representative of the prefix incrementally (a letter either emits a
  generator of the parabolic or is absorbed into the coset tail);
* ``retract_word_by_roots`` filters the root sequence of the word to the
  parabolic's roots and converts back.

Their agreement on arbitrary words is part of the test suite.
"""

from __future__ import annotations

from dataclasses import dataclass

from .coxeter import CoxeterSystem, Root, WElement
from .errors import CaseNotApplicable, NotPositive, NotSimpleRoot

Letter = tuple[str, int]
Word = tuple[Letter, ...]
RootSeq = tuple[Root, ...]


# -- text form ----------------------------------------------------------------


def parse_word(system: CoxeterSystem, text: str) -> Word:
    """Parse whitespace-separated tokens: ``name`` or ``name^-1``; ``e`` is empty."""
    text = text.strip()
    if text in ("", "e"):
        return ()
    out = []
    for token in text.split():
        if token.endswith("^-1"):
            name, sign = token[:-3], -1
        else:
            name, sign = token, 1
        if name not in system.index:
            raise ValueError(f"unknown generator {name!r}")
        out.append((name, sign))
    return tuple(out)


def format_word(word: Word) -> str:
    if not word:
        return "e"
    return " ".join(s if e > 0 else f"{s}^-1" for s, e in word)


def positive_word(letters) -> Word:
    return tuple((s, 1) for s in letters)


# -- elementary operations -------------------------------------------------------


def inverse_word(word: Word) -> Word:
    return tuple((s, -e) for s, e in reversed(word))


def rev_word(word: Word) -> Word:
    """The reversing anti-automorphism: reverse letter order, keep signs."""
    return tuple(reversed(word))


def invert_letters(word: Word) -> Word:
    """The automorphism sending every generator to its inverse."""
    return tuple((s, -e) for s, e in word)


def free_reduce(word: Word) -> Word:
    stack: list[Letter] = []
    for letter in word:
        if stack and stack[-1][0] == letter[0] and stack[-1][1] == -letter[1]:
            stack.pop()
        else:
            stack.append(letter)
    return tuple(stack)


def exponent_sum(word: Word) -> int:
    return sum(e for _, e in word)


def is_positive_word(word: Word) -> bool:
    return all(e > 0 for _, e in word)


def letter_support(word: Word) -> frozenset[str]:
    return frozenset(s for s, _ in word)


def word_image(system: CoxeterSystem, word: Word) -> WElement:
    """The image in W (signs vanish since generators are involutions)."""
    return system.element(tuple(s for s, _ in word))


# -- rewrite moves (shared with the brute-force oracle) ---------------------------


def braid_move_rewrites(system: CoxeterSystem, word: Word):
    """All words obtained by one braid move on a sign-uniform alternating run."""
    n = len(word)
    for i in range(n - 1):
        s, es = word[i]
        t, et = word[i + 1]
        if s == t or es != et:
            continue
        m = system.m(s, t)
        if m is None or i + m > n:
            continue
        ok = True
        for k in range(m):
            name, e = word[i + k]
            if e != es or name != (s if k % 2 == 0 else t):
                ok = False
                break
        if ok:
            swapped = tuple((t if k % 2 == 0 else s, es) for k in range(m))
            yield word[:i] + swapped + word[i + m:]


def free_deletions(word: Word):
    for i in range(len(word) - 1):
        if word[i][0] == word[i + 1][0] and word[i][1] == -word[i + 1][1]:
            yield word[:i] + word[i + 2:]


def free_insertions(system: CoxeterSystem, word: Word):
    for i in range(len(word) + 1):
        for s in system.generators:
            for e in (1, -1):
                yield word[:i] + ((s, e), (s, -e)) + word[i:]


# -- root sequences -----------------------------------------------------------------


def p_star(system: CoxeterSystem, word: Word) -> RootSeq:
    """Letters to roots: s -> alpha_s, s^-1 -> -alpha_s."""
    f = system.field
    out = []
    for s, e in word:
        r = system.simple_root(s)
        out.append(r if e > 0 else tuple(f.neg(c) for c in r))
    return tuple(out)


def p_star_inv(system: CoxeterSystem, seq: RootSeq) -> Word:
    out = []
    for r in seq:
        named = system.simple_root_name(r)
        if named is None:
            raise NotSimpleRoot(f"term {r} is not plus or minus a simple root")
        out.append(named)
    return tuple(out)


def vecN(system: CoxeterSystem, seq: RootSeq) -> RootSeq:
    """Term i becomes s_{a_1}...s_{a_{i-1}}(a_i)."""
    out = []
    for i, r in enumerate(seq):
        v = r
        for j in range(i - 1, -1, -1):
            v = system.reflect_by_root(seq[j], v)
        out.append(v)
    return tuple(out)


def seq_product(system: CoxeterSystem, seq: RootSeq) -> WElement:
    """Product of the reflections of the sequence's terms."""
    w = system.identity
    for r in seq:
        w = w * system.reflection_from_root(r)
    return w


def filter_phi_I(system: CoxeterSystem, seq: RootSeq, I) -> RootSeq:
    I = frozenset(I)
    return tuple(r for r in seq if system.root_support(r) <= I)


def word_is_simple(system: CoxeterSystem, word: Word) -> bool:
    """A positive word has a simple braid image iff its root sequence stays positive."""
    if not is_positive_word(word):
        raise NotPositive("simplicity is defined for positive words")
    return word_image(system, word).length == len(word)


# -- the retraction ------------------------------------------------------------------


def retract_word(system: CoxeterSystem, I, word: Word) -> Word:
    """pi_I on words: the good-index scan with an incrementally maintained tail."""
    I = frozenset(I)
    tail = system.identity
    out = []
    for s, eps in word:
        named = system.simple_root_name(tail.act(system.simple_root(s)))
        if named is not None and named[0] in I:
            out.append((named[0], eps))
        else:
            tail = tail * system.gen(s)
    return tuple(out)


def retract_trace(system: CoxeterSystem, I, word: Word):
    """(letter, good, emitted generator or None, coset tail after) per index."""
    I = frozenset(I)
    tail = system.identity
    rows = []
    for s, eps in word:
        named = system.simple_root_name(tail.act(system.simple_root(s)))
        if named is not None and named[0] in I:
            rows.append(((s, eps), True, named[0], tail))
        else:
            tail = tail * system.gen(s)
            rows.append(((s, eps), False, None, tail))
    return rows


def retract_word_by_roots(system: CoxeterSystem, I, word: Word) -> Word:
    """pi_I via root sequences: filter vecN(p*(b)) to the parabolic and convert back."""
    seq = vecN(system, p_star(system, word))
    return p_star_inv(system, vecN(system, filter_phi_I(system, seq, I)))


def retract_transitivity_check(system: CoxeterSystem, I, J, word: Word) -> bool:
    lhs = retract_word(system, I, retract_word(system, J, word))
    rhs = retract_word(system, frozenset(I) & frozenset(J), word)
    return lhs == rhs


def apply_generator_bijection(mapping: dict[str, str], word: Word) -> Word:
    return tuple((mapping[s], e) for s, e in word)


@dataclass(frozen=True)
class RetractProduct:
    """pi_I(b|b') together with the factorization the hypotheses provide."""

    case: str                   # "parabolic", "ribbon" or "reduced"
    word: Word                  # pi_I(b|b')
    left: Word                  # pi_I(b)
    right: Word                 # the second factor of the factorization
    target: frozenset[str]      # J for the ribbon case, J1 for the reduced case


def retract_product(system: CoxeterSystem, I, b: Word, b2: Word, J=None) -> RetractProduct:
    """Factor pi_I(b|b2) when the image of b is parabolic, a ribbon, or reduced.

    Cases, by hypothesis on w = image of b:
      (a) w in W_I:            pi_I(b|b2) = pi_I(b) | pi_I(b2)
      (b) w an I-ribbon-J:     pi_I(b|b2) = pi_I(b) | phi_w(pi_J(b2))
      (c) w I-reduced-J and b2 over J: the same with J1 = I^w cap J in place of J.
    """
    I = frozenset(I)
    w = word_image(system, b)
    full = retract_word(system, I, b + b2)
    left = retract_word(system, I, b)
    if w.in_parabolic(I):
        right = retract_word(system, I, b2)
        assert full == left + right
        return RetractProduct("parabolic", full, left, right, I)
    if system.is_ribbon(I, w):
        Jr = system.ribbon_target(I, w)
        mapping = system.ribbon_map(I, w)
        right = apply_generator_bijection(mapping, retract_word(system, Jr, b2))
        assert full == left + right
        return RetractProduct("ribbon", full, left, right, Jr)
    Jc = frozenset(J) if J is not None else letter_support(b2)
    if system.is_I_reduced(I, w) and system.is_reduced_J(w, Jc) and letter_support(b2) <= Jc:
        J1 = system.solomon_intersection(I, Jc, w)
        mapping = {
            j: system.simple_root_name(system.act_word(w.word, system.simple_root(j)))[0]
            for j in J1
        }
        right = apply_generator_bijection(mapping, retract_word(system, J1, b2))
        assert full == left + right
        return RetractProduct("reduced", full, left, right, J1)
    raise CaseNotApplicable("image of b is neither in W_I, nor a ribbon, nor I-reduced-J")
