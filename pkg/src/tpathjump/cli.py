"""Command-line interface: ``tpj <subcommand> ...``.

Exit codes: 0 success, 1 a checked property failed, 2 bad usage or input.
With ``--json`` every subcommand prints one JSON report
``{command, instance, result, verdicts, elapsed}``.
"""

from __future__ import annotations

import argparse
import json
import sys
import time
from collections.abc import Sequence
from fractions import Fraction
from typing import Any, Callable, Optional

from . import battery
from .exchange import ExchangeError, TheoremViolation, certify, exchange_step_edge, \
    exchange_step_generic
from .graph import InstanceError, Multigraph, load_instance
from .greedy import greedy_optimize
from .jump import Step, check_delta_matroid, check_even_sum, check_two_step_axiom
from .packing import enumerate_feasible, max_packing, member_via_reduction, realize
from .paths import EDGE, MODES
from .polytope import (check_bisubmodular, enumerate_vertices, fmt, intersect_and_check,
                       polytope_member, reduced_inequalities, relaxed_feasible,
                       support_function, support_pair_function, parity_feasibility_check)

__all__ = ["main", "run"]

# (result, verdicts, one-line message)
Outcome = tuple[dict[str, Any], dict[str, bool], str]


class UsageError(Exception):
    pass


def _json_arg(text: str, what: str) -> Any:
    try:
        return json.loads(text)
    except json.JSONDecodeError as exc:
        raise UsageError(f"{what} is not valid JSON: {exc}") from None


def _rational(v: Any) -> Fraction:
    if isinstance(v, bool):
        raise UsageError(f"not a number: {v!r}")
    try:
        return Fraction(v)
    except (TypeError, ValueError):
        raise UsageError(f"not a rational number: {v!r}") from None


def _point(g: Multigraph, text: str) -> tuple[Fraction, ...]:
    raw = _json_arg(text, "--point")
    if isinstance(raw, dict):
        if set(raw) != set(g.terminals):
            raise UsageError("point keys must be exactly the terminals")
        raw = [raw[t] for t in g.terminals]
    if not isinstance(raw, list) or len(raw) != len(g.terminals):
        raise UsageError(f"point needs {len(g.terminals)} coordinates")
    return tuple(_rational(v) for v in raw)


def _named_point(g: Multigraph, x: Sequence[Fraction]) -> dict[str, str]:
    return {t: fmt(Fraction(c)) for t, c in zip(g.terminals, x)}


def _terminal_list(g: Multigraph, text: Optional[str], what: str) -> list[str]:
    if not text:
        return []
    raw = _json_arg(text, what)
    if not isinstance(raw, list) or any(t not in g.terminals for t in raw):
        raise UsageError(f"{what} must be a JSON list of terminals")
    return raw


# subcommand handlers


def cmd_enumerate(g: Multigraph, a: argparse.Namespace) -> Outcome:
    J = enumerate_feasible(g, a.mode, g.partition(a.partition))
    vecs = [J.named(v) for v in J]
    return ({"mode": a.mode, "partition": a.partition, "box": g.as_dict(J.box),
             "count": len(J), "vectors": vecs}, {}, f"{len(J)} feasible vectors")


def cmd_max_packing(g: Multigraph, a: argparse.Namespace) -> Outcome:
    count, witness = max_packing(g, a.mode, g.partition(a.partition))
    return ({"mode": a.mode, "count": count, "witness": witness.to_dict()}, {},
            f"maximum packing has {count} paths")


def cmd_member(g: Multigraph, a: argparse.Namespace) -> Outcome:
    m = g.vector(_json_arg(a.demand, "--demand"))
    result: dict[str, Any] = {"mode": a.mode, "demand": g.as_dict(m)}
    if sum(m) % 2:
        result["reason"] = "odd coordinate sum"
    feasible = None
    if a.via in ("search", "both"):
        w = realize(g, a.mode, m, g.partition(a.partition))
        feasible = w is not None
        result["search"] = feasible
        result["witness"] = None if w is None else w.to_dict()
    if a.via in ("reduction", "both"):
        if a.partition not in (None, "singletons"):
            raise UsageError("the reduction only handles plain terminal paths")
        red = member_via_reduction(g, a.mode, m)
        result["reduction"] = red
        if feasible is None:
            feasible = red
        else:
            result["agree"] = red == feasible
    result["feasible"] = feasible
    msg = "feasible" if feasible else "infeasible"
    if result.get("reason"):
        msg += f" ({result['reason']})"
    if result.get("agree") is False:
        msg += "; reduction disagrees with search (finding)"
    return result, {}, msg


def cmd_check_jump(g: Multigraph, a: argparse.Namespace) -> Outcome:
    J = enumerate_feasible(g, a.mode, g.partition(a.partition))
    axiom = check_two_step_axiom(J)
    parity = check_even_sum(J)
    result: dict[str, Any] = {"mode": a.mode, "size": len(J), "two_step_axiom": axiom.to_dict(),
                              "even_sum": parity.to_dict()}
    verdicts = {"two_step_axiom": axiom.ok, "even_sum": parity.ok}
    if all(c <= 1 for v in J for c in v):
        dm = check_delta_matroid(J)
        result["delta_matroid"] = dm.to_dict()
        verdicts["delta_matroid"] = dm.ok
    msg = (f"axiom verified, |J|={len(J)}" if axiom.ok
           else f"axiom FAILS, |J|={len(J)}: {axiom.counterexample}")
    return result, verdicts, msg


def cmd_exchange(g: Multigraph, a: argparse.Namespace) -> Outcome:
    m1 = g.vector(_json_arg(a.m1, "--m1"))
    m2 = g.vector(_json_arg(a.m2, "--m2"))
    try:
        sigma = Step.parse(a.step, g.terminals)
    except ValueError as exc:
        raise UsageError(str(exc)) from None
    part = g.partition(a.partition)
    if a.constructive:
        if a.mode != EDGE or part is not None:
            raise UsageError("--constructive works in edge mode without a partition")
        if not sigma.is_legal(m1, m2):
            raise ExchangeError(f"{a.step} is not a step from m1 toward m2")
        P1, P2 = realize(g, EDGE, m1), realize(g, EDGE, m2)
        if P1 is None or P2 is None:
            raise ExchangeError("m1 and m2 must both be feasible")
        res = exchange_step_edge(g, P1, P2, sigma)
    else:
        res = exchange_step_generic(g, a.mode, m1, m2, sigma, part)
    cert = certify(g, m1, m2, sigma, res, a.mode, part)
    out = res.to_dict(g.terminals)
    out["certificate"] = {"ok": cert.ok, "reason": cert.reason}
    msg = f"{res.outcome}: {g.as_dict(res.vector)}"
    if res.step is not None:
        msg += f" via {res.step.label(g.terminals)}"
    return out, {"certified": cert.ok}, msg


def cmd_polytope(g: Multigraph, a: argparse.Namespace) -> Outcome:
    part = g.partition(a.partition)
    S = reduced_inequalities(g, part)
    if a.action == "rows":
        d = S.to_dict()
        return d, {}, f"{len(S.rows)} reduced inequalities"
    if a.action == "vertices":
        verts = enumerate_vertices(S)
        integral = all(c.denominator == 1 for v in verts for c in v)
        return ({"vertices": [_named_point(g, v) for v in verts], "integral": integral},
                {}, f"{len(verts)} vertices, {'all' if integral else 'not all'} integral")
    if a.action in ("member", "relaxed"):
        if not a.point:
            raise UsageError(f"polytope {a.action} needs --point")
        x = _point(g, a.point)
        if a.action == "member":
            inside = polytope_member(S, x)
            return ({"point": _named_point(g, x), "inside": inside}, {},
                    f"inside={str(inside).lower()}")
        ok = relaxed_feasible(g, part, x)
        return ({"point": _named_point(g, x), "relaxed_feasible": ok}, {},
                f"relaxed_feasible={str(ok).lower()}")
    if a.action == "support":
        if a.A is None and a.B is None:
            f = support_pair_function(S)
            table = [{"A": sorted(A), "B": sorted(B), "value": fmt(v)}
                     for (A, B), v in f.values.items()]
            return {"support": table}, {}, f"support function on {len(table)} pairs"
        A = _terminal_list(g, a.A, "--A")
        B = _terminal_list(g, a.B, "--B")
        if set(A) & set(B):
            raise UsageError("--A and --B must be disjoint")
        v = support_function(S, A, B)
        return {"A": A, "B": B, "value": fmt(v)}, {}, f"support value {fmt(v)}"
    # bisubmodular
    verdict = check_bisubmodular(support_pair_function(S))
    msg = "bisubmodular" if verdict.ok else f"NOT bisubmodular: {verdict.counterexample}"
    return verdict.to_dict(), {"bisubmodular": verdict.ok}, msg


def cmd_parity_check(g: Multigraph, a: argparse.Namespace) -> Outcome:
    v = parity_feasibility_check(g, g.partition(a.partition))
    msg = (f"parity feasibility verified ({v.detail['checked']} points realized)" if v.ok
           else f"parity feasibility FAILS at {v.counterexample}")
    return v.to_dict(), {"parity_feasibility": v.ok}, msg


def cmd_intersect(g: Multigraph, a: argparse.Namespace) -> Outcome:
    rep = intersect_and_check(g, g.partition(a.t1), g.partition(a.t2))
    out = rep.to_dict()
    cands = len(rep.infeasible_vertices)
    msg = (f"{len(rep.vertices)} vertices, integral={str(rep.all_integral).lower()}, "
           f"max sum {fmt(rep.max_sum)}, {cands} conjecture candidates")
    return out, {"integral": rep.all_integral, "attainer_feasible": rep.attainer is not None}, msg


def cmd_greedy(g: Multigraph, a: argparse.Namespace) -> Outcome:
    raw = _json_arg(a.weights, "--weights")
    w = g.vector(raw, nonnegative=False)
    J = enumerate_feasible(g, a.mode, g.partition(a.partition))
    if not len(J):
        raise UsageError("no feasible vectors")
    m, value = greedy_optimize(J, w)
    best = max(sum(x * y for x, y in zip(w, v)) for v in J)
    return ({"vector": g.as_dict(m), "value": value, "bruteforce_max": best},
            {"optimal": value == best, "member": m in J}, f"greedy value {value} at {g.as_dict(m)}")


def cmd_suite(a: argparse.Namespace, emit: Callable[[str], None]) -> Outcome:
    if a.family not in battery.PRESETS:
        raise UsageError(f"unknown family {a.family!r}; choose from {sorted(battery.PRESETS)}")
    quiet = a.json
    results = battery.run_suite(a.family, a.seed, a.criteria,
                                progress=None if quiet else (lambda r: emit(r.line())))
    verdicts = {f"criterion_{r.number}": r.ok for r in results}
    ok = all(verdicts.values())
    return ({"family": a.family, "seed": a.seed,
             "criteria": [r.to_dict() for r in results]},
            verdicts, "all criteria pass" if ok else "some criteria FAIL")


HANDLERS: dict[str, Callable[[Multigraph, argparse.Namespace], Outcome]] = {
    "enumerate": cmd_enumerate,
    "max-packing": cmd_max_packing,
    "member": cmd_member,
    "check-jump": cmd_check_jump,
    "exchange": cmd_exchange,
    "polytope": cmd_polytope,
    "parity-check": cmd_parity_check,
    "intersect": cmd_intersect,
    "greedy": cmd_greedy,
}


class _Parser(argparse.ArgumentParser):
    def error(self, message: str) -> None:  # type: ignore[override]
        raise UsageError(message)


def build_parser() -> argparse.ArgumentParser:
    p = _Parser(prog="tpj", description="T-path packings, jump systems and their polytopes.")
    sub = p.add_subparsers(dest="command", required=True, parser_class=_Parser)

    def add(name: str, help_: str, *, mode: bool = True, partition: bool = True
            ) -> argparse.ArgumentParser:
        sp = sub.add_parser(name, help=help_)
        sp.add_argument("--input", required=True, help="instance JSON file")
        sp.add_argument("--json", action="store_true", help="print a JSON report")
        if mode:
            sp.add_argument("--mode", choices=MODES, default=EDGE)
        if partition:
            sp.add_argument("--partition", default=None,
                            help="partition name from the instance ('singletons' is implicit)")
        return sp

    add("enumerate", "list all feasible demand vectors")
    add("max-packing", "maximum number of disjoint paths")
    sp = add("member", "is a demand vector feasible")
    sp.add_argument("--demand", required=True, help='JSON, e.g. {"a":1,"b":1}')
    sp.add_argument("--via", choices=("search", "reduction", "both"), default="search")
    add("check-jump", "verify the two-step axiom on the feasible vectors")
    sp = add("exchange", "second step of the jump property for two feasible vectors")
    sp.add_argument("--m1", required=True)
    sp.add_argument("--m2", required=True)
    sp.add_argument("--step", required=True, help="'+t', '-t' or 'stay'")
    sp.add_argument("--constructive", action="store_true",
                    help="use the edge-transition exchange on path systems (edge mode)")
    sp = add("polytope", "the polytope of a partition", mode=False)
    sp.add_argument("action", choices=("rows", "vertices", "member", "support",
                                       "bisubmodular", "relaxed"))
    sp.add_argument("--point", help="JSON point; rationals as 'p/q' strings")
    sp.add_argument("--A", help="JSON list of terminals (support)")
    sp.add_argument("--B", help="JSON list of terminals (support)")
    add("parity-check", "realize every integer point meeting the parity condition", mode=False)
    sp = add("intersect", "intersection of the polytopes of two partitions", mode=False,
             partition=False)
    sp.add_argument("--t1", required=True)
    sp.add_argument("--t2", required=True)
    sp = add("greedy", "maximize a linear objective over the feasible vectors")
    sp.add_argument("--weights", required=True, help='JSON, e.g. {"a":2,"b":-1,"c":0}')

    sp = sub.add_parser("suite", help="run the acceptance battery")
    sp.add_argument("--family", default="acceptance", help=f"one of {sorted(battery.PRESETS)}")
    sp.add_argument("--seed", type=int, default=0, help="seed for weight sampling")
    sp.add_argument("--criteria", type=int, nargs="+", choices=sorted(battery.CRITERIA))
    sp.add_argument("--json", action="store_true")
    return p


def _join_step(argv: Sequence[str]) -> list[str]:
    """Let ``--step -a`` through: argparse would read ``-a`` as an option."""
    args = list(argv)
    for i in range(len(args) - 1):
        if args[i] == "--step" and args[i + 1].startswith("-"):
            return args[:i] + [f"--step={args[i + 1]}"] + args[i + 2:]
    return args


def run(argv: Sequence[str], out=None, err=None) -> int:
    out = out or sys.stdout
    err = err or sys.stderr
    emit = lambda s: print(s, file=out, flush=True)  # noqa: E731
    want_json = "--json" in argv
    t0 = time.perf_counter()
    digest = None
    try:
        a = build_parser().parse_args(_join_step(argv))
        if a.command == "suite":
            result, verdicts, msg = cmd_suite(a, emit)
        else:
            g = load_instance(a.input)
            digest = g.digest()
            result, verdicts, msg = HANDLERS[a.command](g, a)
    except (UsageError, InstanceError, ExchangeError, OSError) as exc:
        if want_json:
            emit(json.dumps({"command": list(argv), "error": str(exc)}, sort_keys=True))
        else:
            print(f"tpj: error: {exc}", file=err)
        return 2
    except TheoremViolation as exc:
        if want_json:
            emit(json.dumps({"command": list(argv), "violation": exc.instance}, sort_keys=True))
        else:
            print(f"tpj: property violated: {exc}", file=err)
        return 1
    code = 0 if all(verdicts.values()) else 1
    report = {"command": list(argv), "instance": digest, "result": result,
              "verdicts": verdicts, "elapsed": round(time.perf_counter() - t0, 4)}
    if a.json:
        emit(json.dumps(report, sort_keys=True))
    else:
        emit(msg)
    return code


def main() -> None:
    sys.exit(run(sys.argv[1:]))


if __name__ == "__main__":
    main()
