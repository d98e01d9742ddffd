"""Command-line entry point: ``two-stripe solve`` and ``two-stripe verify``.

Exit codes: 0 success (or "yes" in decision mode), 1 mismatch / "no",
2 invalid input.
"""
from __future__ import annotations

import argparse
import json
import os
import sys
from concurrent.futures import ProcessPoolExecutor
from typing import Any, Optional

from .instance import InvalidInstanceError, build_instance
from .materialize import iter_tour, validate_tour
from .solver import EqualCostAny, GgPlusWrap, SolveResult, solve


def output_record(res: SolveResult) -> dict[str, Any]:
    """Flat JSON-ready view of a solve; absent values are omitted."""
    inst, d = res.instance, res.decomposition
    rec: dict[str, Any] = {
        "feasible": res.feasible,
        "n": inst.n,
        "a1": inst.a1,
        "a2": inst.a2,
        "cost1": inst.cost1,
        "cost2": inst.cost2,
        "g1": d.g1,
        "g2": d.g2,
        "r": d.r,
        "c": d.c,
    }
    if res.x is not None:
        rec["x"] = res.x
    if res.m_star is not None and res.m_star.exists:
        rec["m_star"] = res.m_star.value
        rec["branch"] = res.m_star.branch.value
    if res.h_star is not None:
        rec["h_star"] = res.h_star
        rec["cost"] = res.total_cost
    rec["tour_class"] = res.descriptor.tag
    desc = res.descriptor.inner if isinstance(res.descriptor, EqualCostAny) else res.descriptor
    if isinstance(desc, GgPlusWrap):
        p = desc.params
        rec["params"] = {
            "m": p.m,
            "first_col_dir": p.first_col_dir.value,
            "second_col_end": p.second_col_end,
            "k": p.k,
        }
    return rec


def _summary(rec):
    if not rec["feasible"]:
        return f"n={rec['n']} a1={rec['a1']} a2={rec['a2']}: infeasible (g2={rec['g2']})"
    text = (
        f"n={rec['n']} a1={rec['a1']} a2={rec['a2']}: cost={rec['cost']} "
        f"h*={rec['h_star']} g1={rec['g1']} r={rec['r']} c={rec['c']} tour={rec['tour_class']}"
    )
    if "m_star" in rec:
        text += f" m*={rec['m_star']}"
    return text


def _stream_tour(inst, res, as_json, out):
    labels = iter_tour(inst, res)
    if as_json:
        out.write("[")
        for i, v in enumerate(labels):
            out.write(f",{v}" if i else str(v))
        out.write("]\n")
    else:
        for v in labels:
            out.write(f"{v}\n")


def cmd_solve(args, out=None) -> int:
    out = out or sys.stdout
    try:
        inst = build_instance(args.n, args.a1, args.c1, args.a2, args.c2)
    except InvalidInstanceError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 2
    res = solve(inst)
    rec = output_record(res)

    if args.budget is not None:
        yes = res.feasible and res.total_cost <= args.budget
        if args.json:
            rec["budget"] = args.budget
            rec["decision"] = yes
            out.write(json.dumps(rec) + "\n")
        else:
            out.write("yes\n" if yes else "no\n")
        return 0 if yes else 1

    out.write((json.dumps(rec) if args.json else _summary(rec)) + "\n")
    if args.emit_tour and res.feasible:
        _stream_tour(inst, res, args.json, out)
    if args.check and res.feasible:
        chk = validate_tour(inst, iter_tour(inst, res))
        good = chk.hamiltonian and chk.count_a2 == res.h_star
        print(
            f"check: hamiltonian={chk.hamiltonian} expensive_edges={chk.count_a2} "
            f"cost={chk.cost} {'ok' if good else 'FAILED'}",
            file=sys.stderr,
        )
        if not good:
            return 1
    return 0


# verify sweeps ---------------------------------------------------------------

def _workers() -> int:
    try:
        cap = int(os.environ.get("TWO_STRIPE_THREADS", "0"))
    except ValueError:
        cap = 0
    cpus = os.cpu_count() or 1
    return max(1, min(cap, cpus) if cap > 0 else cpus)


def _held_karp_rows(n: int) -> list[dict]:
    from .oracle import held_karp
    from .instance import TwoStripeInstance

    rows = []
    for a1 in range(1, n // 2 + 1):
        for a2 in range(1, n // 2 + 1):
            if a1 == a2:
                continue
            inst = TwoStripeInstance(n, a1, a2, 0, 1)
            hk = held_karp(inst)
            res = solve(inst)
            expected = None if hk is None else hk[0]
            actual = res.total_cost if res.feasible else None
            rows.append({"n": n, "a1": a1, "a2": a2, "expected": expected,
                         "actual": actual, "ok": expected == actual})
    return rows


def _gg_formula_rows(n: int) -> list[dict]:
    from .solver import sweep_n

    a1, a2, h_main, h_gg, _ = sweep_n(n)
    bad = (h_main != h_gg).nonzero()[0]
    rows = [{"n": n, "instances": int(len(h_main)), "mismatches": int(len(bad)), "ok": not len(bad)}]
    for i in bad[:20]:
        rows.append({"n": n, "a1": int(a1[i]), "a2": int(a2[i]), "expected": int(h_gg[i]),
                     "actual": int(h_main[i]), "ok": False})
    return rows


def _cylinder_rows(size: tuple[int, int]) -> list[dict]:
    from .oracle import check_cylinder

    return [json.loads(chk.to_json()) for chk in check_cylinder(*size)]


def _run_sweep(fn, jobs, out) -> int:
    failures = 0
    workers = _workers()
    if workers == 1:
        results = map(fn, jobs)
    else:
        pool = ProcessPoolExecutor(max_workers=workers)
        results = pool.map(fn, jobs)
    for rows in results:
        for row in rows:
            failures += not row["ok"]
            out.write(json.dumps(row) + "\n")
    if workers > 1:
        pool.shutdown()
    return 1 if failures else 0


def cmd_verify(args, out=None) -> int:
    out = out or sys.stdout
    if args.sweep == "held-karp":
        from .oracle import HELD_KARP_MAX_N

        if not 4 <= args.max_n <= HELD_KARP_MAX_N:
            print(f"error: --max-n must lie in [4, {HELD_KARP_MAX_N}]", file=sys.stderr)
            return 2
        return _run_sweep(_held_karp_rows, range(4, args.max_n + 1), out)
    if args.sweep == "gg-formula":
        if args.max_n < 4:
            print("error: --max-n must be at least 4", file=sys.stderr)
            return 2
        return _run_sweep(_gg_formula_rows, range(4, args.max_n + 1), out)
    if args.max_cells < 4:
        print("error: --max-cells must be at least 4", file=sys.stderr)
        return 2
    cap = args.max_cells
    jobs = [(r, c) for r in range(2, cap // 2 + 1) for c in range(2, cap // 2 + 1) if r * c <= cap]
    return _run_sweep(_cylinder_rows, jobs, out)


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="two-stripe", description=__doc__.splitlines()[0])
    sub = parser.add_subparsers(dest="command", required=True)

    sp = sub.add_parser("solve", help="solve one instance")
    sp.add_argument("--n", type=int, required=True)
    sp.add_argument("--a1", type=int, required=True, help="first stripe length")
    sp.add_argument("--a2", type=int, required=True, help="second stripe length")
    sp.add_argument("--c1", type=int, default=0, help="cost of the a1 stripe (default 0)")
    sp.add_argument("--c2", type=int, default=1, help="cost of the a2 stripe (default 1)")
    sp.add_argument("--json", action="store_true", help="machine-readable output")
    sp.add_argument("--emit-tour", action="store_true", help="stream the tour labels")
    sp.add_argument("--check", action="store_true", help="validate the emitted tour")
    sp.add_argument("--budget", type=int, help="decision mode: is the optimum <= BUDGET?")
    sp.set_defaults(func=cmd_solve)

    vp = sub.add_parser("verify", help="run an oracle sweep")
    vsub = vp.add_subparsers(dest="sweep", required=True)
    hk = vsub.add_parser("held-karp", help="solver vs Held-Karp over all stripe pairs")
    hk.add_argument("--max-n", type=int, default=16)
    cy = vsub.add_parser("cylinder", help="exhaustive cylinder search vs A-set prediction")
    cy.add_argument("--max-cells", type=int, default=20)
    gg = vsub.add_parser("gg-formula", help="main solver vs the Gerace-Greco formula")
    gg.add_argument("--max-n", type=int, default=2000)
    vp.set_defaults(func=cmd_verify)
    return parser


def main(argv: Optional[list[str]] = None) -> int:
    args = build_parser().parse_args(argv)
    try:
        return args.func(args)
    except BrokenPipeError:
        # downstream closed the pipe (e.g. `| head`)
        sys.stderr.close()
        return 0


if __name__ == "__main__":
    sys.exit(main())
