"""Command line front end: ``conelab <command> [script.cone] [options]``.

Exit codes: 0 verdict true (or no verdict), 1 verdict false, 2 input error,
3 resource cap exceeded.
"""

from __future__ import annotations

import argparse
import json
import re
import sys
import time
from importlib import resources
from pathlib import Path

from . import flatness, ideal_ops, normal_cone, resolution, segre0
from .exactpoly import GREVLEX, LEX, Polynomial, PolyRing
from .groebner import DEFAULT_LIMITS, Ideal, ResourceLimitExceeded, ideal_equal
from .parser import ParseError, SessionScript, parse, parse_poly, parse_poly_list

EXIT_TRUE, EXIT_FALSE, EXIT_INPUT, EXIT_RESOURCE = 0, 1, 2, 3

COMMANDS = ["gb", "nf", "colon", "intersect", "saturate", "eliminate", "dim",
            "tangent-star", "smf", "s0", "coalesce", "embedded", "flat",
            "internal-flat", "fiber-compare", "pd", "cm", "verdict", "run"]


class InputError(ValueError):
    pass


# ---------- loading ----------

def corpus_path(name: str) -> Path:
    return Path(str(resources.files("conelab") / "corpus" / name))


def resolve_path(path: str) -> Path:
    """Existing path, else the file of the same name in the shipped corpus."""
    p = Path(path)
    if p.exists():
        return p
    c = corpus_path(p.name)
    if c.exists():
        return c
    raise InputError(f"no such file: {path}")


def _rewrap(script: SessionScript, ring: PolyRing) -> SessionScript:
    conv = lambda p: Polynomial(ring, dict(p.coeffs))
    return SessionScript(ring, {k: conv(v) for k, v in script.polys.items()},
                         {k: [conv(p) for p in v] for k, v in script.ideals.items()},
                         script.directions, script.command, script.command_args)


def _ring_from_expr(text: str, param: str | None) -> PolyRing:
    names = []
    for m in re.finditer(r"[A-Za-z_][A-Za-z0-9_]*", text):
        if m.group() not in names:
            names.append(m.group())
    if param is not None:
        if param in names:
            names.remove(param)
        names.append(param)
    return PolyRing(tuple(names), GREVLEX, param)


def _strip_comments(text: str) -> str:
    return "\n".join(line.split("#", 1)[0] for line in text.splitlines())


def _is_script(text: str) -> bool:
    return _strip_comments(text).lstrip().startswith("ring")


def _bare_ideal(text: str, param: str | None) -> SessionScript:
    """A file holding only comma separated generators, bound as I."""
    body = _strip_comments(text).strip().rstrip(";")
    ring = _ring_from_expr(body, param)
    return SessionScript(ring, ideals={"I": parse_poly_list(body, ring)})


def load(args) -> SessionScript:
    if args.file:
        text = resolve_path(args.file).read_text()
        if _is_script(text):
            script = parse(text)
        else:
            script = _bare_ideal(text, args.param)
    elif args.poly:
        script = SessionScript(_ring_from_expr(args.poly, args.param))
    elif args.ideal_text:
        script = SessionScript(_ring_from_expr(args.ideal_text, args.param))
    else:
        raise InputError("give a script file, --poly or --ideal-text")
    ring = script.ring
    if args.param is not None and args.param != ring.param:
        if args.param not in ring.names:
            raise InputError(f"--param {args.param}: not a ring variable")
        ring = ring.with_param(args.param)
    if args.order:
        ring = ring.with_order(LEX if args.order == "lex" else GREVLEX)
    if ring != script.ring:
        script = _rewrap(script, ring)
    return script


def _ideal(script: SessionScript, name: str | None, args, default=("I", "X")) -> tuple[str, Ideal]:
    if name is None and getattr(args, "ideal_text", None):
        return "<text>", Ideal(script.ring, parse_poly_list(args.ideal_text, script.ring))
    names = [name] if name else list(default)
    for n in names:
        if n in script.ideals:
            return n, Ideal(script.ring, script.ideals[n])
    if name is None and len(script.ideals) == 1:
        n = next(iter(script.ideals))
        return n, Ideal(script.ring, script.ideals[n])
    raise InputError(f"script has no ideal named {' or '.join(names)}")


def _poly(script: SessionScript, args, default=("f",)) -> tuple[str, Polynomial]:
    if args.poly:
        if args.poly in script.polys:
            return args.poly, script.polys[args.poly]
        return args.poly, parse_poly(args.poly, script.ring, script.polys)
    for n in default:
        if n in script.polys:
            return n, script.polys[n]
    if len(script.polys) == 1:
        n = next(iter(script.polys))
        return n, script.polys[n]
    raise InputError("no polynomial selected; use --poly")


def _test_ideal(script: SessionScript, I: Ideal, args):
    if args.test_ideal:
        text = resolve_path(args.test_ideal).read_text()
        if _is_script(text):
            other = parse(text)
            if other.ring.names != script.ring.names:
                raise InputError("test ideal file declares a different ring")
            ideals = other.ideals
            gens = ideals.get("J") or (next(iter(ideals.values())) if len(ideals) == 1 else None)
            if gens is None:
                raise InputError("test ideal file must bind J or a single ideal")
            return Ideal(script.ring, [Polynomial(script.ring, dict(g.coeffs)) for g in gens])
        body = _strip_comments(text).strip().rstrip(";")
        return Ideal(script.ring, parse_poly_list(body, script.ring))
    if args.with_ideal or "J" in script.ideals:
        return _ideal(script, args.with_ideal or "J", args)[1]
    return None


def _directions(script: SessionScript):
    return script.directions


# ---------- commands ----------

def _gens(I: Ideal) -> list[str]:
    return [str(g) for g in I.generators]


def cmd_gb(script, args, rep):
    name, I = _ideal(script, args.ideal, args)
    gb = I.groebner()
    rep["result"] = [str(g) for g in gb.elements]
    rep["gb_size"] = len(gb)
    rep["order"] = str(gb.order)


def cmd_nf(script, args, rep):
    name, I = _ideal(script, args.ideal, args)
    _, f = _poly(script, args)
    r = I.groebner().normal_form(f)
    rep["result"] = str(r)
    rep["verdict"] = r.is_zero()
    rep["gb_size"] = len(I.groebner())


def _second(script, args):
    return _ideal(script, args.with_ideal or "J", args)[1]


def cmd_colon(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    rep["result"] = _gens(ideal_ops.colon(I, _second(script, args)))


def cmd_intersect(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    rep["result"] = _gens(ideal_ops.intersect(I, _second(script, args)).reduced())


def cmd_saturate(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    _, f = _poly(script, args)
    rep["result"] = _gens(ideal_ops.saturate(I, f))


def cmd_eliminate(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    if not args.vars:
        raise InputError("eliminate needs --vars")
    rep["result"] = _gens(ideal_ops.eliminate(I, args.vars.split(",")).reduced())


def cmd_dim(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    d = ideal_ops.dimension(I)
    rep["result"] = {"dimension": d, "height": I.ring.nvars - d, "nvars": I.ring.nvars}
    rep["gb_size"] = len(I.groebner())


def cmd_tangent_star(script, args, rep):
    name, X = _ideal(script, args.ideal, args, default=("X",))
    C = normal_cone.tangent_star_ideal(X, _directions(script))
    rep["result"] = _gens(C.ideal)
    rep["ring"] = list(C.ring.names)
    rep["gb_size"] = len(C.ideal.generators)
    target = args.compare or ("I" if "I" in script.ideals and name != "I" else None)
    if target:
        _, T = _ideal(script, target, args)
        rep["compared_with"] = target
        rep["verdict"] = ideal_equal(C.ideal, T.to_ring(C.ring))


def cmd_smf(script, args, rep):
    _, f = _poly(script, args)
    C = normal_cone.hypersurface_cone(f, _directions(script))
    rep["result"] = _gens(C.ideal)
    rep["ring"] = list(C.ring.names)


def _cycle(c: segre0.CycleClass):
    return [[w, str(g)] for w, g in c.terms]


def cmd_s0(script, args, rep):
    _, f = _poly(script, args)
    rep["result"] = _cycle(segre0.s0_tangent_star(f))


def cmd_coalesce(script, args, rep):
    _, f = _poly(script, args)
    res = segre0.s0_specializes(f)
    rep["verdict"] = res.verdict
    rep["failing_criterion"] = res.report.failing_criterion
    rep["witness"] = None if res.report.certificate is None else str(res.report.certificate)
    rep["family_s0"] = _cycle(res.family)
    rep["fiber_s0"] = _cycle(res.fiber)


def _flat_report(r: flatness.FlatnessReport, rep, I):
    rep["verdict"] = r.verdict
    rep["witness"] = None if r.witness is None else str(r.witness)
    rep["notes"] += r.hypothesis_notes
    rep["gb_size"] = len(I.groebner())
    if r.test_ideal_used is not None:
        rep["test_ideal"] = _gens(r.test_ideal_used.ideal)
    if r.saturated_verdict is not None:
        rep["saturated_verdict"] = r.saturated_verdict
    if not r.verdict:
        rep["witness_valid"] = flatness.witness_is_valid(I, r)


def cmd_embedded(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    J = _test_ideal(script, I, args)
    _flat_report(flatness.has_no_embedded_components(I, J, seed=args.seed), rep, I)


def cmd_flat(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    _flat_report(flatness.is_flat_over_germ(I), rep, I)


def cmd_internal_flat(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    J = _test_ideal(script, I, args)
    r = flatness.is_internally_flat(I, J, seed=args.seed, saturated=args.saturate)
    _flat_report(r, rep, I)


def cmd_fiber_compare(script, args, rep):
    _, X = _ideal(script, args.ideal, args, default=("X",))
    C = normal_cone.tangent_star_ideal(X, _directions(script))
    cmp = normal_cone.cone_fiber_compare(C, X)
    rep["result"] = cmp.outcome
    rep["verdict"] = cmp.equal
    rep["witness"] = None if cmp.certificate is None else str(cmp.certificate)


def _pd_common(script, args, rep):
    _, I = _ideal(script, args.ideal, args)
    cm = resolution.is_cohen_macaulay(I)
    rep["pd"] = cm.pd
    rep["height"] = cm.height
    rep["graded"] = cm.graded
    if not cm.graded:
        rep["notes"].append("ideal is not homogeneous: pd is an upper bound only")
    return cm


def cmd_pd(script, args, rep):
    cm = _pd_common(script, args, rep)
    rep["result"] = cm.pd


def cmd_cm(script, args, rep):
    cm = _pd_common(script, args, rep)
    rep["verdict"] = cm.verdict
    rep["result"] = "indeterminate" if cm.verdict is None else cm.verdict


def cmd_verdict(script, args, rep):
    _, f = _poly(script, args)
    if f.ring.param is None:
        raise InputError("verdict needs a family parameter (--param)")
    res = segre0.s0_specializes(f)
    rep["coalescing"] = not res.verdict
    rep["family_s0"] = _cycle(res.family)
    rep["fiber_s0"] = _cycle(res.fiber)
    if res.verdict:
        rep["result"] = "components do not coalesce: the relative tangent star cone is " \
                        "flat and its special fiber is the tangent star cone of the fiber"
        rep["verdict"] = True
    else:
        rep["result"] = f"components coalesce (criterion {res.report.failing_criterion}); " \
                        "no conclusion about flatness"
        rep["verdict"] = False
        rep["witness"] = str(res.report.certificate)
    rep["notes"].append("hypersurface case: s0 specialization suffices and the cone is "
                        "Cohen-Macaulay, so internal flatness holds automatically")
    if args.verify:
        C = normal_cone.tangent_star_ideal(Ideal(f.ring, [f]), _directions(script))
        flat = flatness.is_flat_over_germ(C.ideal)
        cmp = normal_cone.cone_fiber_compare(C, Ideal(f.ring, [f]))
        rep["verify"] = {"cone": _gens(C.ideal), "flat_over_germ": flat.verdict,
                         "fiber_compare": cmp.outcome}
        if res.verdict and not (flat.verdict and cmp.equal):
            rep["notes"].append("direct verification disagrees with the criterion")
            rep["verdict"] = False


HANDLERS = {
    "gb": cmd_gb, "nf": cmd_nf, "colon": cmd_colon, "intersect": cmd_intersect,
    "saturate": cmd_saturate, "eliminate": cmd_eliminate, "dim": cmd_dim,
    "tangent-star": cmd_tangent_star, "smf": cmd_smf, "s0": cmd_s0,
    "coalesce": cmd_coalesce, "embedded": cmd_embedded, "flat": cmd_flat,
    "internal-flat": cmd_internal_flat, "fiber-compare": cmd_fiber_compare,
    "pd": cmd_pd, "cm": cmd_cm, "verdict": cmd_verdict,
}


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="conelab", description=__doc__.splitlines()[0])
    ap.add_argument("command", choices=COMMANDS)
    ap.add_argument("file", nargs="?", help="session script (.cone)")
    ap.add_argument("--order", choices=["lex", "grevlex"])
    ap.add_argument("--param", help="family parameter variable")
    ap.add_argument("--ideal", help="name of the ideal to act on")
    ap.add_argument("--with", dest="with_ideal", help="name of the second ideal")
    ap.add_argument("--ideal-text", help="comma separated generators instead of a script")
    ap.add_argument("--poly", help="polynomial binding name or expression")
    ap.add_argument("--vars", help="comma separated variables to eliminate")
    ap.add_argument("--compare", help="ideal to compare the tangent star cone with")
    ap.add_argument("--test-ideal", help="file holding the test ideal J")
    ap.add_argument("--seed", type=int, default=0, help="seed for generated test ideals")
    ap.add_argument("--saturate", action="store_true",
                    help="also test internal flatness with I : t^oo")
    ap.add_argument("--verify", action="store_true",
                    help="verdict: compute the cone and check flatness directly")
    ap.add_argument("--json", help="write the JSON report here ('-' for stdout)")
    ap.add_argument("--max-pairs", type=int, help="cap on S-pairs per Groebner basis")
    return ap


def run(argv: list[str] | None = None) -> tuple[int, dict]:
    argv = sys.argv[1:] if argv is None else list(argv)
    ap = build_parser()
    args = ap.parse_args(argv)
    rep: dict = {"command": args.command, "file": args.file, "verdict": None,
                 "witness": None, "gb_size": None, "seed": args.seed, "notes": []}
    old_pairs = DEFAULT_LIMITS.max_pairs
    DEFAULT_LIMITS.max_pairs = args.max_pairs
    t0 = time.perf_counter()
    try:
        script = load(args)
        command = args.command
        if command == "run":
            if not script.command:
                raise InputError("script has no command statement")
            command = script.command
            rep["command"] = command
            extra = [a for a in argv[1:] if a != args.file]
            args = ap.parse_args([command] + ([args.file] if args.file else [])
                                 + script.command_args + extra)
        HANDLERS[command](script, args, rep)
        code = EXIT_FALSE if rep["verdict"] is False else EXIT_TRUE
    except ResourceLimitExceeded as e:
        rep["error"] = f"resource cap exceeded: {e}"
        code = EXIT_RESOURCE
    except (ParseError, InputError, flatness.MissingParameterError,
            ideal_ops.TestIdealError, segre0.DegenerateFamilyError, ValueError, KeyError) as e:
        rep["error"] = str(e)
        code = EXIT_INPUT
    finally:
        DEFAULT_LIMITS.max_pairs = old_pairs
    rep["stats"] = {"seconds": round(time.perf_counter() - t0, 3)}
    rep["exit_code"] = code
    if args.json:
        text = json.dumps(rep, indent=2, sort_keys=True)
        if args.json == "-":
            print(text)
        else:
            Path(args.json).write_text(text + "\n")
    return code, rep


def _summary(rep: dict) -> str:
    lines = [f"command: {rep['command']}"]
    if "error" in rep:
        lines.append(f"error: {rep['error']}")
    for key in ("result", "verdict", "witness", "pd", "height", "family_s0", "fiber_s0",
                "verify"):
        if rep.get(key) is not None:
            val = rep[key]
            if isinstance(val, list) and val and isinstance(val[0], str):
                val = "\n  " + "\n  ".join(val)
            lines.append(f"{key}: {val}")
    for n in rep.get("notes", []):
        lines.append(f"note: {n}")
    return "\n".join(lines)


def main(argv: list[str] | None = None) -> int:
    argv = sys.argv[1:] if argv is None else list(argv)
    code, rep = run(argv)
    if build_parser().parse_args(argv).json != "-":
        print(_summary(rep))
    return code


if __name__ == "__main__":
    sys.exit(main())
