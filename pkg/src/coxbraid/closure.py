"""Closed and biclosed sets of positive roots, and the weak-order lattice.

Finite biclosed sets of positive roots are exactly the inversion sets N(w)
(Dyer), and the weak-order join and meet translate to a closure of the
union, respectively a complement-closure of the intersection.  Computing
those closures needs the ambient set of positive roots, so these
operations require a finite-type system; the Garside layer uses
order-theoretic algorithms that work in general and is cross-checked
against these formulas on finite types.
"""

from __future__ import annotations

from itertools import combinations

from .coxeter import CoxeterSystem, Root, WElement
from .errors import NotBiclosed


def _in_positive_span(system: CoxeterSystem, alpha: Root, beta: Root, gamma: Root) -> bool:
    """gamma = a*alpha + b*beta with a, b > 0, decided by exact sign tests."""
    f = system.field
    n = len(system.generators)
    if not _in_span(system, alpha, beta, gamma):
        return False
    for u, v in combinations(range(n), 2):
        d_ab = f.sub(f.mul(alpha[u], beta[v]), f.mul(alpha[v], beta[u]))
        sd = f.sign(d_ab)
        if sd == 0:
            continue
        d_gb = f.sub(f.mul(gamma[u], beta[v]), f.mul(gamma[v], beta[u]))
        d_ag = f.sub(f.mul(alpha[u], gamma[v]), f.mul(alpha[v], gamma[u]))
        return f.sign(d_gb) == sd and f.sign(d_ag) == sd
    return False  # alpha, beta dependent: distinct positive roots never are


def closure(system: CoxeterSystem, roots, universe=None) -> frozenset[Root]:
    """Smallest closed subset of the positive roots containing `roots`."""
    if universe is None:
        universe = system.positive_roots(system.generators)
    closed = set(roots)
    candidates = set(universe) - closed
    changed = True
    while changed:
        changed = False
        for gamma in list(candidates):
            for alpha, beta in combinations(closed, 2):
                if _in_positive_span(system, alpha, beta, gamma):
                    closed.add(gamma)
                    candidates.discard(gamma)
                    changed = True
                    break
    return frozenset(closed)


def is_closed(system: CoxeterSystem, roots, universe=None) -> bool:
    roots = frozenset(roots)
    return closure(system, roots, universe) == roots


def is_biclosed(system: CoxeterSystem, roots, universe=None) -> bool:
    if universe is None:
        universe = system.positive_roots(system.generators)
    roots = frozenset(roots)
    return is_closed(system, roots, universe) and is_closed(system, universe - roots, universe)


def element_from_inversion_roots(system: CoxeterSystem, roots) -> WElement:
    """The w with N(w) = roots; raises NotBiclosed when no such w exists."""
    f = system.field
    rest = set(roots)
    word = []
    while rest:
        for s in system.generators:
            alpha = system.simple_root(s)
            if alpha in rest:
                word.append(s)
                rest.remove(alpha)
                rest = {system.act_letter(s, r) for r in rest}
                if any(system.root_sign(r) < 0 for r in rest):
                    raise NotBiclosed("set is not an inversion set")
                break
        else:
            raise NotBiclosed("no simple root available; not an inversion set")
    w = system.element(word)
    if w.length != len(frozenset(roots)):
        raise NotBiclosed("set is not an inversion set")
    return w


def inversion_join(system: CoxeterSystem, v: WElement, w: WElement) -> WElement:
    """Weak-order join: N(join) is the closure of N(v) united with N(w)."""
    universe = system.positive_roots(system.generators)
    nv = frozenset(system.inversion_roots(v))
    nw = frozenset(system.inversion_roots(w))
    _require_inversion_set(system, nv, universe)
    _require_inversion_set(system, nw, universe)
    joined = closure(system, nv | nw, universe)
    if not is_biclosed(system, joined, universe):
        raise NotBiclosed("closure of the union is not biclosed")
    return element_from_inversion_roots(system, joined)


def inversion_meet(system: CoxeterSystem, v: WElement, w: WElement) -> WElement:
    """Weak-order meet: the complement of N(meet) is the closure of the
    complement of N(v) intersected with N(w)."""
    universe = system.positive_roots(system.generators)
    nv = frozenset(system.inversion_roots(v))
    nw = frozenset(system.inversion_roots(w))
    _require_inversion_set(system, nv, universe)
    _require_inversion_set(system, nw, universe)
    met = universe - closure(system, universe - (nv & nw), universe)
    if not is_biclosed(system, met, universe):
        raise NotBiclosed("complement closure is not biclosed")
    return element_from_inversion_roots(system, met)


def _require_inversion_set(system, roots, universe):
    if not is_biclosed(system, roots, universe):
        raise NotBiclosed("input is not an inversion set")


def _in_span(system: CoxeterSystem, alpha: Root, beta: Root, gamma: Root) -> bool:
    f = system.field
    n = len(system.generators)
    rows = (alpha, beta, gamma)
    for cols in combinations(range(n), 3):
        det = f.zero
        for perm, sign in (((0, 1, 2), 1), ((1, 2, 0), 1), ((2, 0, 1), 1),
                           ((0, 2, 1), -1), ((2, 1, 0), -1), ((1, 0, 2), -1)):
            term = f.mul(rows[0][cols[perm[0]]], f.mul(rows[1][cols[perm[1]]], rows[2][cols[perm[2]]]))
            det = f.add(det, term) if sign > 0 else f.sub(det, term)
        if not f.is_zero(det):
            return False
    return True


def dihedral_reflection_order_closed(system: CoxeterSystem, roots) -> bool:
    """Interval characterization of closed sets inside each dihedral subsystem.

    In every rank-2 subsystem of the positive roots, the members of a
    closed set must form an interval-closed family for the reflection
    order of that subsystem.
    """
    roots = frozenset(roots)
    universe = system.positive_roots(system.generators)
    for alpha, beta in combinations(universe, 2):
        plane = [g for g in universe if g in (alpha, beta) or _in_span(system, alpha, beta, g)]
        ordered = _reflection_order(system, plane)
        members = [i for i, g in enumerate(ordered) if g in roots]
        if members:
            lo, hi = min(members), max(members)
            if any(ordered[k] not in roots for k in range(lo, hi + 1)):
                return False
    return True


def _reflection_order(system: CoxeterSystem, plane_roots):
    """Roots of a rank-2 subsystem ordered from one extreme to the other."""
    # Extremes are the two roots not expressible from the others; order the
    # rest by the coefficient ratio along the extremes.
    plane = list(plane_roots)
    if len(plane) <= 2:
        return plane
    extremes = []
    for g in plane:
        others = [h for h in plane if h != g]
        inside = any(
            _in_positive_span(system, a, b, g) for a, b in combinations(others, 2)
        )
        if not inside:
            extremes.append(g)
    assert len(extremes) == 2, "rank-2 subsystem must have two extreme positive roots"
    a, b = extremes

    def ratio_key(g):
        # g = x*a + y*b; sort by y/x, extremes at the ends
        f = system.field
        from fractions import Fraction

        n = len(system.generators)
        for u, v in combinations(range(n), 2):
            det = f.sub(f.mul(a[u], b[v]), f.mul(a[v], b[u]))
            if not f.is_zero(det):
                x = f.sub(f.mul(g[u], b[v]), f.mul(g[v], b[u]))
                y = f.sub(f.mul(a[u], g[v]), f.mul(a[v], g[u]))
                xf, yf = f.to_float(x) / f.to_float(det), f.to_float(y) / f.to_float(det)
                if xf <= 1e-12:
                    return float("inf")
                return yf / xf
        raise AssertionError("degenerate plane")

    return sorted(plane, key=ratio_key)
