"""Batch command-line interface with deterministic JSON output.

Configuration is a JSON file (path from --config or the COXBRAID_CONFIG
environment variable) holding the Coxeter matrix (inline or via
"matrix_file"), the declared family of oracle-backed subsets, and bounds:

    {"generators": ["s", "t"], "matrix": [[1, 3], [3, 1]],
     "lambda": [["s"], ["s", "t"]],
     "bounds": {"rewrite": 12, "lcm": 4096, "enumeration": 2000}}

A matrix entry 0 encodes an infinite bond.  Subset arguments are
comma-separated generator names.  A word argument of "-" reads the word
from standard input.  Exit status: 0 for decided results, 2 when a
verdict is unknown, 1 for errors (reported as a JSON object).
"""

from __future__ import annotations

import argparse
import json
import os
import sys

from . import applications, braid, garside, oracle as oracle_mod, spherical
from .coxeter import CoxeterSystem
from .errors import CoxbraidError
from .words import format_word, parse_word

ENV_CONFIG = "COXBRAID_CONFIG"


def _load_config(path: str | None) -> dict:
    path = path or os.environ.get(ENV_CONFIG)
    if path is None:
        raise CoxbraidError("no configuration: pass --config or set " + ENV_CONFIG)
    with open(path, "r", encoding="utf-8") as fh:
        cfg = json.load(fh)
    if "matrix_file" in cfg:
        with open(cfg["matrix_file"], "r", encoding="utf-8") as fh:
            cfg.update(json.load(fh))
    return cfg


def _build_system(cfg: dict) -> CoxeterSystem:
    return CoxeterSystem(cfg["generators"], cfg["matrix"])


def _subset(system: CoxeterSystem, text: str) -> tuple[str, ...]:
    if text in ("", "-"):
        return ()
    names = [x for x in text.split(",") if x]
    for name in names:
        if name not in system.index:
            raise CoxbraidError(f"unknown generator {name!r}")
    return tuple(sorted(set(names), key=lambda s: system.index[s]))


def _word(system: CoxeterSystem, text: str):
    if text == "-":
        text = sys.stdin.read()
    return parse_word(system, text)


def _check_lambda(cfg: dict, system: CoxeterSystem, I) -> None:
    declared = cfg.get("lambda")
    if declared is not None:
        allowed = {tuple(sorted(x)) for x in declared}
        if tuple(sorted(I)) not in allowed:
            raise CoxbraidError(f"subset {sorted(I)} is not in the declared family")
    if not system.is_finite_type(I):
        raise CoxbraidError(f"subset {sorted(I)} has no word/conjugacy oracle (not finite type)")


def _emit(payload: dict) -> int:
    sys.stdout.write(json.dumps(payload, sort_keys=True) + "\n")
    return 2 if _has_unknown(payload) else 0


def _has_unknown(value) -> bool:
    if isinstance(value, dict):
        return any(_has_unknown(v) for v in value.values())
    if isinstance(value, (list, tuple)):
        return any(_has_unknown(v) for v in value)
    return value == "unknown"


def _oracle_for(system: CoxeterSystem, cfg: dict, args) -> braid.BraidOracle:
    bounds = cfg.get("bounds", {})
    rewrite = args.bound_rewrite or bounds.get("rewrite", 12)
    return braid.BraidOracle(system, rewrite_bound=rewrite)


def main(argv=None) -> int:
    parser = argparse.ArgumentParser(prog="coxbraid", description=__doc__)
    parser.add_argument("--config", help="path to the JSON session configuration")
    parser.add_argument("--bound-rewrite", type=int, default=None)
    parser.add_argument("--bound-lcm", type=int, default=None)
    parser.add_argument("--format", choices=["json"], default="json")
    sub = parser.add_subparsers(dest="command", required=True)

    def cmd(name, *flags):
        p = sub.add_parser(name)
        for flag in flags:
            if flag == "I":
                p.add_argument("-I", required=True, help="comma-separated subset")
            elif flag == "J":
                p.add_argument("-J", required=True, help="comma-separated subset")
            else:
                p.add_argument(flag)
        return p

    cmd("retract", "I", "word")
    cmd("tail", "I", "word")
    cmd("retract-right", "I", "word")
    cmd("tail-right", "I", "word")
    cmd("normal-form", "word")
    cmd("gcd", "word1", "word2")
    cmd("lcm", "word1", "word2")
    cmd("word-problem", "I", "word")
    cmd("double-coset", "I", "J", "word")
    cmd("intersect-reduce", "I", "J", "word")
    cmd("ribbons", "I", "J")
    cmd("conjugacy", "I", "J", "word1", "word2")
    cmd("min-parabolic", "word")
    cmd("nmap", "word")
    cmd("check-conjecture", "word1", "word2")
    po = sub.add_parser("oracle")
    posub = po.add_subparsers(dest="subcommand", required=True)
    pe = posub.add_parser("enumerate")
    pe.add_argument("-I", default=None)
    pr = posub.add_parser("rewrite-equal")
    pr.add_argument("word1")
    pr.add_argument("word2")
    pd = posub.add_parser("divisors")
    pd.add_argument("word")
    pt = posub.add_parser("retract")
    pt.add_argument("-I", required=True)
    pt.add_argument("word")
    pt.add_argument("--brute-force", action="store_true")

    args = parser.parse_args(argv)
    try:
        cfg = _load_config(args.config)
        system = _build_system(cfg)
        return _dispatch(args, cfg, system)
    except CoxbraidError as exc:
        sys.stdout.write(json.dumps(
            {"error": {"type": type(exc).__name__, "message": str(exc)}}, sort_keys=True
        ) + "\n")
        return 1
    except (ValueError, OSError, KeyError, json.JSONDecodeError) as exc:
        sys.stdout.write(json.dumps(
            {"error": {"type": type(exc).__name__, "message": str(exc)}}, sort_keys=True
        ) + "\n")
        return 1


def _dispatch(args, cfg, system) -> int:
    command = args.command
    if command == "retract":
        I = _subset(system, args.I)
        return _emit({"result": format_word(braid.retract(system, I, _word(system, args.word)))})
    if command == "tail":
        I = _subset(system, args.I)
        return _emit({"result": format_word(braid.tail(system, I, _word(system, args.word)))})
    if command == "retract-right":
        I = _subset(system, args.I)
        return _emit({"result": format_word(braid.retract_right(system, I, _word(system, args.word)))})
    if command == "tail-right":
        I = _subset(system, args.I)
        return _emit({"result": format_word(braid.tail_right(system, I, _word(system, args.word)))})
    if command == "normal-form":
        b = garside.from_positive_word(system, _word(system, args.word))
        return _emit({"factors": [" ".join(f.word) for f in b.factors]})
    if command in ("gcd", "lcm"):
        x = garside.from_positive_word(system, _word(system, args.word1))
        y = garside.from_positive_word(system, _word(system, args.word2))
        bounds = cfg.get("bounds", {})
        if command == "gcd":
            out = garside.left_gcd(system, x, y)
        else:
            out = garside.right_lcm(system, x, y, bound=args.bound_lcm or bounds.get("lcm", 4096))
        return _emit({"factors": [" ".join(f.word) for f in out.factors]})
    if command == "word-problem":
        I = _subset(system, args.I)
        _check_lambda(cfg, system, I)
        word = _word(system, args.word)
        ctx = spherical.spherical_context(system, I)
        trivial = ctx.is_trivial(word)
        return _emit({"verdict": "equal" if trivial else "distinct",
                      "certificate": {"kind": "garside", "parabolic": list(I)}})
    if command == "double-coset":
        I, J = _subset(system, args.I), _subset(system, args.J)
        form = applications.double_coset_canonical(
            system, I, J, _word(system, args.word), _oracle_for(system, cfg, args)
        )
        return _emit({
            "b0": format_word(form.b0),
            "I1": list(form.I1), "J1": list(form.J1),
            "unique": form.uniqueness,
            "checks": form.checks,
        })
    if command == "intersect-reduce":
        I, J = _subset(system, args.I), _subset(system, args.J)
        red = applications.reduce_intersection(
            system, I, J, _word(system, args.word), _oracle_for(system, cfg, args)
        )
        return _emit({
            "steps": [
                {"kind": s.kind, "verified": s.verified,
                 "data": {k: (format_word(v) if isinstance(v, tuple) and (not v or isinstance(v[0], tuple)) else
                              (list(v) if isinstance(v, tuple) else v))
                          for k, v in s.data.items()}}
                for s in red.steps
            ],
            "final_subset": list(red.final_subset),
            "pure_part": format_word(red.final_pure_part),
        })
    if command == "ribbons":
        I, J = _subset(system, args.I), _subset(system, args.J)
        sols = applications.ribbon_solver(system, I, J)
        return _emit({"solutions": [
            {"mapping": {j: i for j, i in s.mapping}, "witness": " ".join(s.witness) or "e"}
            for s in sorted(sols, key=lambda s: s.witness)
        ]})
    if command == "conjugacy":
        I, J = _subset(system, args.I), _subset(system, args.J)
        _check_lambda(cfg, system, I)
        _check_lambda(cfg, system, J)
        rep = applications.conjugacy_reducible(
            system, I, J, _word(system, args.word1), _word(system, args.word2),
            _oracle_for(system, cfg, args),
        )
        payload = {"verdict": rep.verdict, "minimal_length": rep.minimal_i.length}
        if rep.witness is not None:
            payload["witness"] = format_word(rep.witness)
        return _emit(payload)
    if command == "min-parabolic":
        subset, conj, word = applications.minimal_parabolic(
            system, _word(system, args.word), _oracle_for(system, cfg, args)
        )
        return _emit({
            "subset": sorted(subset, key=lambda s: system.index[s]),
            "conjugator": format_word(conj),
            "minimal_word": format_word(word),
        })
    if command == "nmap":
        bag, image = braid.nmap(system, _word(system, args.word))
        return _emit({
            "image": " ".join(image.word) or "e",
            "bag": [{"reflection": " ".join(t.word), "coefficient": c} for t, c in bag.entries],
        })
    if command == "check-conjecture":
        rep = applications.conjecture_instance_check(
            system, _word(system, args.word1), _word(system, args.word2),
            _oracle_for(system, cfg, args),
        )
        hyp = dict(rep.hypotheses)
        if "support" in hyp:
            hyp["support"] = list(hyp["support"])
        return _emit({"status": rep.status, "hypotheses": hyp,
                      "centralizes": rep.centralizes_generators})
    if command == "oracle":
        return _oracle_command(args, cfg, system)
    raise CoxbraidError(f"unhandled command {command}")  # pragma: no cover


def _oracle_command(args, cfg, system) -> int:
    bounds = cfg.get("bounds", {})
    if args.subcommand == "enumerate":
        I = _subset(system, args.I if args.I is not None else ",".join(system.generators))
        cap = bounds.get("enumeration", 100_000)
        elements = oracle_mod.enumerate_w(system, I)
        if len(elements) > cap:
            raise CoxbraidError("enumeration exceeds the configured cap")
        return _emit({"count": len(elements),
                      "elements": [" ".join(w.word) or "e" for w in elements]})
    if args.subcommand == "rewrite-equal":
        a, b = _word(system, args.word1), _word(system, args.word2)
        bound = (args.bound_rewrite or bounds.get("rewrite", 12)) + max(len(a), len(b))
        got = oracle_mod.rewrite_equal(system, a, b, bound=bound)
        return _emit({"verdict": got})
    if args.subcommand == "divisors":
        word = _word(system, args.word)
        lat = oracle_mod.naive_divisors(system, tuple(s for s, _ in word))
        return _emit({"divisors": sorted(" ".join(k) or "e" for k in lat.keys)})
    if args.subcommand == "retract":
        I = _subset(system, args.I)
        word = _word(system, args.word)
        return _emit({"result": format_word(oracle_mod.naive_retract(system, I, word))})
    raise CoxbraidError(f"unknown oracle subcommand {args.subcommand}")


if __name__ == "__main__":  # pragma: no cover
    raise SystemExit(main())
