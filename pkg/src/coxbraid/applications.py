"""Double-coset canonical forms, intersection reductions, minimal conjugates,
the ribbon-isomorphism solver, and conjugacy of reducible elements.

Everything here reduces braid-group questions to finite computations in W
plus word/conjugacy oracles in spherical parabolics.  Verdicts that depend
on an oracle carry its certificate; oracle gaps surface as ``unknown``
flags or ``OracleUnavailable``, never as silent guesses.
"""

from __future__ import annotations

from dataclasses import dataclass, field

from .braid import BraidOracle, retract, retract_right, support, tail, tail_right
from .coxeter import CoxeterSystem, WElement
from .errors import OracleUnavailable
from .spherical import spherical_context
from .words import (
    Word,
    apply_generator_bijection,
    exponent_sum,
    free_reduce,
    inverse_word,
    letter_support,
    word_image,
)


def _sorted_subset(system: CoxeterSystem, I) -> tuple[str, ...]:
    return tuple(sorted(I, key=lambda s: system.index[s]))


# -- double cosets -----------------------------------------------------------------


@dataclass(frozen=True)
class DoubleCosetForm:
    I: tuple[str, ...]
    J: tuple[str, ...]
    b0: Word
    I1: tuple[str, ...]
    J1: tuple[str, ...]
    uniqueness: str              # "unique" | "not_unique" | "unknown"
    checks: dict = field(default_factory=dict)


def double_coset_canonical(system: CoxeterSystem, I, J, word: Word,
                           oracle: BraidOracle | None = None) -> DoubleCosetForm:
    """The preferred representative b0 = t^r_J(t_I(b)) of B_I b B_J.

    b0 retracts trivially on both sides and its image in W is I-reduced-J.
    The representative is unique among such elements exactly when
    conjugation by b0 restricted to the matched generator pairs descends
    from W to B, which is decided in W when the twisted intersection is
    empty and asked of the oracle otherwise.
    """
    oracle = oracle or BraidOracle(system)
    I, J = _sorted_subset(system, I), _sorted_subset(system, J)
    t_left = tail(system, I, word)
    b0 = tail_right(system, J, t_left)
    w = word_image(system, b0)
    assert system.is_I_reduced(I, w) and system.is_reduced_J(w, J)
    checks = {
        "left_retraction_trivial": oracle.is_trivial(retract(system, I, b0)).value,
        "right_retraction_trivial": oracle.is_trivial(retract_right(system, J, b0)).value,
    }
    J1 = system.twisted_subset(I, w, J)            # I^w cap J
    I1 = system.twisted_subset(J, w.inverse(), I)  # I cap wJw^{-1}
    if not J1:
        uniqueness = "unique"
        checks["uniqueness_route"] = "twisted-intersection-empty"
    else:
        uniqueness = "unique"
        checks["uniqueness_route"] = "generator-conjugation"
        for j in sorted(J1, key=lambda s: system.index[s]):
            named = system.simple_root_name(system.act_word(w.word, system.simple_root(j)))
            i = named[0]
            lhs = free_reduce(b0 + ((j, 1),) + inverse_word(b0))
            verdict = oracle.equal(lhs, ((i, 1),))
            checks[f"conjugates_{j}_to_{i}"] = verdict.value
            if verdict.value == "distinct":
                uniqueness = "not_unique"
            elif verdict.value == "unknown" and uniqueness == "unique":
                uniqueness = "unknown"
    checks["decomposition_identity"] = _decomposition_identity(
        system, I, J, I1, word, t_left, w, oracle
    )
    return DoubleCosetForm(I, J, b0, _sorted_subset(system, I1), _sorted_subset(system, J1),
                           uniqueness, checks)


def _decomposition_identity(system, I, J, I1, word, t_left, w, oracle) -> str:
    # pi^r_J(b) = phi^{-1}_{w}(pi^r_{I1}(pi_I(b))) | pi^r_J(t_I(b))
    lhs = retract_right(system, J, word)
    inner = retract_right(system, I1, retract(system, I, word))
    if I1:
        mapping = {}
        for i in I1:
            named = system.simple_root_name(system.act_inverse_word(w.word, system.simple_root(i)))
            mapping[i] = named[0]
        inner = apply_generator_bijection(mapping, inner)
    rhs = inner + retract_right(system, J, t_left)
    return oracle.equal(lhs, rhs).value


# -- intersection of parabolic subgroups ----------------------------------------------


@dataclass(frozen=True)
class ReductionStep:
    kind: str
    data: dict
    verified: str                # "verified" | "unknown" | "not_applicable"


@dataclass(frozen=True)
class IntersectionReduction:
    steps: tuple[ReductionStep, ...]
    final_subset: tuple[str, ...]
    final_pure_part: Word


def reduce_intersection(system: CoxeterSystem, I, J, word: Word,
                        oracle: BraidOracle | None = None) -> IntersectionReduction:
    """Reduce B_I cap bB_Jb^{-1} to a centralizer inside a parabolic.

    Emits the chain: normalize b to b0 with trivial two-sided retractions,
    shrink (I, J) to the twisted pair, split off the pure part p with the
    ribbon lift, ending at C_{B_I1}(p); optionally note the ambient
    minimization step.  Identities are oracle-checked where decidable.
    """
    oracle = oracle or BraidOracle(system)
    I, J = _sorted_subset(system, I), _sorted_subset(system, J)
    steps = []

    t_left = tail(system, I, word)
    b0 = tail_right(system, J, t_left)
    conj = retract(system, I, word)
    c1 = oracle.is_trivial(retract(system, I, b0)).value
    c2 = oracle.is_trivial(retract_right(system, J, b0)).value
    steps.append(ReductionStep(
        "normalize",
        {"b0": b0, "conjugator": conj},
        "verified" if (c1 == "equal" and c2 == "equal") else "unknown",
    ))

    w = word_image(system, b0)
    J1 = system.twisted_subset(I, w, J)
    I1 = system.twisted_subset(J, w.inverse(), I)
    ribbon_ok = system.is_ribbon(I1, w) and system.ribbon_target(I1, w) == frozenset(J1)
    steps.append(ReductionStep(
        "shrink",
        {"I1": _sorted_subset(system, I1), "J1": _sorted_subset(system, J1)},
        "verified" if ribbon_ok else "unknown",
    ))

    lift = tuple((s, 1) for s in w.word)
    pure_part = free_reduce(b0 + inverse_word(lift))
    c3 = oracle.is_trivial(retract(system, I1, pure_part)).value
    pr_trivial = word_image(system, pure_part).is_identity()
    steps.append(ReductionStep(
        "pure-split",
        {"ribbon_lift": lift, "pure": pure_part,
         "result": f"C_B[{','.join(_sorted_subset(system, I1))}](p)"},
        "verified" if (c3 == "equal" and pr_trivial) else "unknown",
    ))

    trivial_p = oracle.is_trivial(pure_part).value
    if trivial_p == "equal":
        steps.append(ReductionStep(
            "minimize-ambient",
            {"note": "pure part is trivial; the intersection is the whole parabolic"},
            "verified",
        ))
    else:
        steps.append(ReductionStep(
            "minimize-ambient",
            {"note": "conjugate inside the parabolic to a minimal ambient; "
                     "depends on knowing the intersection"},
            "not_applicable",
        ))
    return IntersectionReduction(tuple(steps), _sorted_subset(system, I1), pure_part)


# -- minimal conjugates ------------------------------------------------------------------


@dataclass(frozen=True)
class MinimalForms:
    subset: tuple[str, ...]
    length: int
    forms: tuple[tuple[Word, Word], ...]   # (minimal word, conjugator g with input^g = word)


_minimal_cache: dict = {}
_ball_cache: dict = {}


def _parabolic_ball(system: CoxeterSystem, I, radius: int):
    """Levels of the Cayley ball of B_I: canonical-key -> representative word."""
    key = (system, I, radius)
    hit = _ball_cache.get(key)
    if hit is not None:
        return hit
    ctx = spherical_context(system, I)
    letters = [(s, e) for s in I for e in (1, -1)]
    levels = []
    seen = {ctx.mixed_form(()).key(): ()}
    levels.append(dict(seen))
    frontier = [()]
    for _ in range(radius):
        level = {}
        nxt = []
        for word in frontier:
            for letter in letters:
                cand = word + (letter,)
                k = ctx.mixed_form(cand).key()
                if k not in seen:
                    seen[k] = cand
                    level[k] = cand
                    nxt.append(cand)
        levels.append(level)
        frontier = nxt
    _ball_cache[key] = levels
    return levels


def minimal_conjugate(system: CoxeterSystem, I, word: Word) -> MinimalForms:
    """All conjugates of minimal word length inside the parabolic over I.

    Enumerates the Cayley ball of B_I up to the input's word length and
    keeps the first level containing conjugates; the minimal length there
    is the global minimum over the whole ambient conjugacy class.
    """
    I = _sorted_subset(system, I)
    if not system.is_finite_type(I):
        raise OracleUnavailable(f"no conjugacy oracle for W_{list(I)}")
    if not letter_support(word) <= set(I):
        raise ValueError("word leaves the parabolic")
    ctx = spherical_context(system, I)
    cache_key = (system, I, ctx.mixed_form(word).key())
    hit = _minimal_cache.get(cache_key)
    if hit is not None:
        return hit
    bound = len(free_reduce(word))
    sss = ctx.super_summit_set(word)
    lam = exponent_sum(word)
    levels = _parabolic_ball(system, I, bound)
    for length, level in enumerate(levels):
        forms = []
        for k, cand in sorted(level.items(), key=lambda kv: kv[1]):
            if exponent_sum(cand) != lam:
                continue
            rep, wit_c = ctx.summit_representative(cand)
            entry = sss.get(rep.key())
            if entry is None:
                continue
            conj = free_reduce(entry[1] + inverse_word(wit_c))
            assert ctx.equal(free_reduce(inverse_word(conj) + word + conj), cand)
            forms.append((cand, conj))
        if forms:
            result = MinimalForms(I, length, tuple(forms))
            _minimal_cache[cache_key] = result
            return result
    raise AssertionError("input is conjugate to itself within its own length")


# -- ribbon isomorphisms --------------------------------------------------------------------


@dataclass(frozen=True)
class RibbonSolution:
    mapping: tuple[tuple[str, str], ...]   # pairs (j, phi(j)) with phi: J -> I
    witness: tuple[str, ...]               # reduced word of an I-ribbon-J realizing phi


@dataclass(frozen=True)
class RibbonGraph:
    source: tuple[str, ...]
    vertices: tuple[tuple[tuple[str, ...], tuple[tuple[str, str], ...]], ...]
    edges: tuple[tuple[int, int, tuple[str, ...]], ...]
    solutions_by_subset: dict


_ribbon_cache: dict = {}


def ribbon_graph(system: CoxeterSystem, I) -> RibbonGraph:
    """Breadth-first closure of (I, id) under elementary ribbons.

    An elementary ribbon out of a subset K adjoins one generator s with
    K + s of finite type and conjugates by w0(K) w0(K + s); every ribbon
    is a product of such steps, so the reachable vertices carry all
    realizable isomorphisms onto I.
    """
    I = _sorted_subset(system, I)
    hit = _ribbon_cache.get((system, I))
    if hit is not None:
        return hit
    start = (I, tuple((i, i) for i in I))
    witness = {start: system.identity}
    order = [start]
    edges = []
    queue = [start]
    while queue:
        cur = queue.pop(0)
        cur_subset, cur_map = cur
        cur_phi = dict(cur_map)
        w_cur = witness[cur]
        for s in system.generators:
            if s in cur_subset:
                continue
            bigger = _sorted_subset(system, set(cur_subset) | {s})
            if not system.is_finite_type(bigger):
                continue
            nu = system.longest_element(cur_subset) * system.longest_element(bigger)
            if not system.is_ribbon(cur_subset, nu):   # re-verify, never trust
                continue
            target = system.ribbon_target(cur_subset, nu)
            phi_nu = system.ribbon_map(cur_subset, nu)
            new_map = tuple(sorted(((j, cur_phi[phi_nu[j]]) for j in target),
                                   key=lambda p: system.index[p[0]]))
            new_vertex = (_sorted_subset(system, target), new_map)
            if new_vertex not in witness:
                witness[new_vertex] = w_cur * nu
                order.append(new_vertex)
                queue.append(new_vertex)
            edges.append((order.index(cur), order.index(new_vertex), nu.word))
    solutions: dict = {}
    for vertex in order:
        subset, mapping = vertex
        w = witness[vertex]
        assert system.is_ribbon(I, w) and system.ribbon_target(I, w) == frozenset(subset)
        got = system.ribbon_map(I, w)
        assert tuple(sorted(got.items(), key=lambda p: system.index[p[0]])) == mapping
        solutions.setdefault(subset, []).append(RibbonSolution(mapping, w.word))
    graph = RibbonGraph(I, tuple(order), tuple(edges), solutions)
    _ribbon_cache[(system, I)] = graph
    return graph


def ribbon_solver(system: CoxeterSystem, I, J) -> list[RibbonSolution]:
    """All bijections J -> I realized by I-ribbons-J, with witness words."""
    graph = ribbon_graph(system, I)
    return list(graph.solutions_by_subset.get(_sorted_subset(system, J), []))


# -- conjugacy for reducible elements ----------------------------------------------------------


@dataclass(frozen=True)
class ConjugacyReport:
    verdict: str               # "conjugate" | "not_conjugate"
    witness: Word | None       # g with i^g = j when conjugate
    minimal_i: MinimalForms
    minimal_j: MinimalForms
    route: dict


def conjugacy_reducible(system: CoxeterSystem, I, J, i_word: Word, j_word: Word,
                        oracle: BraidOracle | None = None) -> ConjugacyReport:
    """Decide conjugacy of parabolic words via minimal forms and ribbons."""
    oracle = oracle or BraidOracle(system)
    I, J = _sorted_subset(system, I), _sorted_subset(system, J)
    mi = minimal_conjugate(system, I, i_word)
    mj = minimal_conjugate(system, J, j_word)
    if exponent_sum(i_word) != exponent_sum(j_word) or mi.length != mj.length:
        return ConjugacyReport("not_conjugate", None, mi, mj,
                               {"reason": "class invariants differ"})
    for iw, ci in mi.forms:
        Ip = _sorted_subset(system, letter_support(iw))
        ctx = spherical_context(system, Ip)
        for jw, cj in mj.forms:
            Jp = _sorted_subset(system, letter_support(jw))
            for solution in ribbon_solver(system, Ip, Jp):
                mapped = apply_generator_bijection(dict(solution.mapping), jw)
                if not ctx.equal(iw, mapped):
                    continue
                lift = tuple((s, 1) for s in solution.witness)
                witness = free_reduce(ci + lift + inverse_word(cj))
                verified = oracle.equal(
                    free_reduce(inverse_word(witness) + i_word + witness), j_word
                )
                assert verified.value != "distinct"
                return ConjugacyReport(
                    "conjugate", witness, mi, mj,
                    {"ribbon": solution.witness, "via": (iw, jw),
                     "witness_verified": verified.value},
                )
    return ConjugacyReport("not_conjugate", None, mi, mj,
                           {"reason": "no ribbon links any pair of minimal forms"})


# -- minimal parabolic subgroups --------------------------------------------------------------------


def element_min_length(system: CoxeterSystem, I, word: Word) -> int:
    """ell_S of an element of a spherical parabolic, by levelwise ball search."""
    ctx = spherical_context(system, I)
    target = ctx.mixed_form(word).key()
    levels = _parabolic_ball(system, _sorted_subset(system, I), len(free_reduce(word)))
    for length, level in enumerate(levels):
        if target in level:
            return length
    raise AssertionError("element not found within its own word length")


def minimal_parabolic(system: CoxeterSystem, word: Word,
                      oracle: BraidOracle | None = None):
    """A minimal parabolic containing the element: (subset, conjugator, word).

    The subset is the support of a length-minimal conjugate; minimality
    among parabolics holds by the support theory, uniqueness is not
    asserted (see conjecture_instance_check).
    """
    oracle = oracle or BraidOracle(system)
    K = support(system, word, oracle)
    word_k = retract(system, K, word)
    forms = minimal_conjugate(system, K, word_k)
    best_word, conj = forms.forms[0]
    subset = _sorted_subset(system, letter_support(best_word))
    assert support(system, best_word, oracle) == frozenset(subset)
    return frozenset(subset), conj, best_word


# -- conjecture instance checking ----------------------------------------------------------------------


@dataclass(frozen=True)
class ConjectureReport:
    status: str                # "supporting" | "refuting" | "hypotheses_not_met" | "unknown"
    hypotheses: dict
    centralizes_generators: dict


def conjecture_instance_check(system: CoxeterSystem, b_word: Word, p_word: Word,
                              oracle: BraidOracle | None = None) -> ConjectureReport:
    """Check one instance of the minimal-parabolic centralizer conjecture.

    Verifies the hypotheses (p pure, p centralizes b, p retracts trivially
    to the support of b, b of minimal word length in its class) and then
    tests whether p centralizes every generator of the support parabolic.
    An instance check, never a proof.
    """
    oracle = oracle or BraidOracle(system)
    hypotheses: dict = {}
    hypotheses["p_is_pure"] = word_image(system, p_word).is_identity()
    hypotheses["p_centralizes_b"] = oracle.equal(
        free_reduce(p_word + b_word), free_reduce(b_word + p_word)
    ).value
    K = support(system, b_word, oracle)
    Ks = _sorted_subset(system, K)
    hypotheses["support"] = Ks
    hypotheses["retraction_trivial"] = oracle.is_trivial(retract(system, K, p_word)).value
    b_k = retract(system, K, b_word)
    if system.is_finite_type(K):
        own = element_min_length(system, Ks, b_k)
        cls = minimal_conjugate(system, Ks, b_k).length
        hypotheses["length_minimal"] = own == cls
    else:
        hypotheses["length_minimal"] = None
    ok = (
        hypotheses["p_is_pure"]
        and hypotheses["p_centralizes_b"] == "equal"
        and hypotheses["retraction_trivial"] == "equal"
        and hypotheses["length_minimal"] is True
    )
    if not ok:
        unknownish = hypotheses["p_centralizes_b"] == "unknown" or hypotheses[
            "retraction_trivial"
        ] == "unknown" or hypotheses["length_minimal"] is None
        return ConjectureReport(
            "unknown" if unknownish and hypotheses["p_is_pure"] else "hypotheses_not_met",
            hypotheses, {},
        )
    outcomes = {}
    for s in Ks:
        v = oracle.equal(
            free_reduce(p_word + ((s, 1),)), free_reduce(((s, 1),) + p_word)
        )
        outcomes[s] = v.value
    if all(v == "equal" for v in outcomes.values()):
        status = "supporting"
    elif any(v == "distinct" for v in outcomes.values()):
        status = "refuting"
    else:
        status = "unknown"
    return ConjectureReport(status, hypotheses, outcomes)
