"""Command-line entry points.

    wreathhopf verify-counterexample --m 2 --ring Zm
    wreathhopf finite analyze --group s3_natural --coeff 3 --json out.json
    wreathhopf finite aut|h1|endring --group <file or bundled name> --coeff <list>

Exit codes: 0 success, 1 certificate failure, 2 input error, 3 bound exceeded.
"""

from __future__ import annotations

import argparse
import json
import sys
from typing import List, Optional

from .abelian import AbelianSpec
from .reports import Report, Timer, _jsonable

EXIT_OK, EXIT_CERT, EXIT_INPUT, EXIT_BOUND = 0, 1, 2, 3


def native(obj):
    return json.loads(json.dumps(obj, default=_jsonable))


def _m_arg(text: str) -> int:
    try:
        m = int(text)
    except ValueError:
        raise argparse.ArgumentTypeError(f"--m must be an integer, got {text!r}") from None
    if m < 2:
        raise argparse.ArgumentTypeError("--m must be at least 2")
    return m


def _coeff_arg(text: str) -> AbelianSpec:
    try:
        return AbelianSpec.parse(text)
    except ValueError as exc:
        raise argparse.ArgumentTypeError(f"bad --coeff {text!r}: {exc}") from None


def build_parser() -> argparse.ArgumentParser:
    ap = argparse.ArgumentParser(prog="wreathhopf", description=__doc__.split("\n\n")[0])
    sub = ap.add_subparsers(dest="command", required=True)

    vc = sub.add_parser("verify-counterexample",
                        help="exact certificates for the BS(1, m+1) counterexample")
    vc.add_argument("--m", type=_m_arg, default=2)
    vc.add_argument("--ring", default="Zm", help="Q, Zm or Z/N (default Zm)")
    vc.add_argument("--seed", type=int, default=0)
    vc.add_argument("--hom-trials", type=int, default=500)
    vc.add_argument("--preimage-trials", type=int, default=200)
    vc.add_argument("--json", metavar="PATH")

    fin = sub.add_parser("finite", help="computations for A wr_X B with B, X finite")
    fsub = fin.add_subparsers(dest="action", required=True)
    for name, hlp in (("analyze", "full report"), ("aut", "Aut/Out orders"),
                      ("h1", "derivations and H^1"), ("endring", "intertwiner algebras")):
        p = fsub.add_parser(name, help=hlp)
        p.add_argument("--group", required=True, help="group file or bundled action name")
        p.add_argument("--coeff", type=_coeff_arg, default=AbelianSpec((2,)),
                       help="invariants of A, comma separated; 0 stands for Z (default 2)")
        p.add_argument("--seed", type=int, default=0)
        p.add_argument("--max-aut-order", type=int, default=200,
                       help="largest |G| for brute-force automorphism search")
        p.add_argument("--budget", type=int, default=256, help="probe budget per matrix ring")
        p.add_argument("--json", metavar="PATH")
    return ap


# -- commands -----------------------------------------------------------------------------


def cmd_verify_counterexample(args) -> Report:
    from .induced import certify_theta, verify_counterexample
    from .scalars import NotInvertible, parse_ring
    rep = Report("verify-counterexample", {"m": args.m, "ring": args.ring, "seed": args.seed})
    try:
        ring = parse_ring(args.ring, args.m)
        if not ring.is_unit(args.m + 1):
            raise NotInvertible(f"m+1 = {args.m + 1} is not a unit in {ring}")
    except (ValueError, NotInvertible) as exc:
        raise InputError(str(exc)) from None
    with Timer() as t:
        ce = verify_counterexample(args.m, ring)
        th = certify_theta(args.m, args.hom_trials, args.preimage_trials, seed=args.seed)
    rep.timing = t.elapsed
    rep.hypotheses = {"m_at_least_2": True, "m_plus_1_invertible": True}
    rep.certificates = {"counterexample": native(ce.as_dict()), "theta": native(th.as_dict())}
    rep.results = {
        "left_inverse": ce.left_inverse,
        "right_inverse": ce.right_inverse,
        "ba_support_size": ce.ba_support_size,
        "kernel_witness_nontrivial": th.witness_nontrivial and th.witness_in_kernel,
        "hom_failures": th.hom_failures,
        "preimage_failures": th.preimage_failures,
    }
    ok = ce.ok() and th.ok()
    rep.verdict("G_hopfian", False if ok else None,
                ["left_inverse", "not_right_inverse", "theta_homomorphism",
                 "theta_surjective", "kernel_witness"] if ok else [])
    rep.exit_code = EXIT_OK if ok else EXIT_CERT
    return rep


def _setup(args):
    from .datasets import load_action
    from .finite.groups import GroupFormatError
    try:
        action = load_action(args.group)
    except (OSError, GroupFormatError) as exc:
        raise InputError(str(exc)) from None
    return action, args.coeff


class InputError(Exception):
    pass


def _orbit_results(action) -> dict:
    from .finite.actions import lundstrom_check, orbits_stabs
    od = orbits_stabs(action)
    lund = lundstrom_check(action)
    return {
        "group_order": action.group.order,
        "points": action.n,
        "orbits": [[x + 1 for x in o] for o in od.orbits],
        "stabilizer_orders": [len(h) for h in od.stabilizers],
        "kernel_order": len(od.kernel),
        "lundstrom": lund.holds,
        "lundstrom_witness": None if lund.holds else [w + 1 for w in lund.witness],
    }


def _endring(action, A, args, rep: Report) -> bool:
    from .finite.endo import burnside_pair_count, direct_finiteness_probe, intertwiner_basis
    basis = intertwiner_basis(action)
    rep.results["burnside_pair_count"] = burnside_pair_count(action)
    fields = [(p, A.n_p(p)) for p in A.primes()]
    if A.rank:
        fields.append((None, A.rank))
    probes = {}
    for p, s in fields:
        key = "q" if p is None else f"p{p}"
        rep.results[f"end_dim_{key}"] = len(basis)
        budget = args.budget if p is not None else min(args.budget, 64)
        probes[key] = direct_finiteness_probe(basis, p, s, budget, args.seed).as_dict()
    rep.certificates["direct_finiteness_probes"] = native(probes)
    violations = sum(pr["violations"] for pr in probes.values())
    rep.results["probe_violations"] = violations
    return violations == 0 and len(basis) == rep.results["burnside_pair_count"]


def _h1(action, A, rep: Report) -> bool:
    from .finite.actions import orbits_stabs
    from .finite.cohomology import derivations_h1, shapiro_oracle
    h = derivations_h1(action, A)
    rep.results.update({
        "der_order": h.der_order, "pder_order": h.pder_order, "h1_size": h.h1_order,
        "der_rank": h.der_rank, "pder_rank": h.pder_rank, "h1_rank": h.h1_rank,
    })
    od = orbits_stabs(action)
    ok = True
    if len(od.orbits) == 1 and len(A.invariants) == 1 and A.invariants[0] in (2, 3, 5, 7):
        oracle = shapiro_oracle(action.group, od.stabilizers[0], A.invariants[0])
        rep.certificates["shapiro_oracle"] = oracle
        ok = oracle == h.h1_order
    return ok


def _aut(action, A, args, rep: Report) -> int:
    from .finite.automorphisms import (HypothesisError, aut_brute, aut_out_orders,
                                       decomposition_hypotheses)
    from .finite.module import BoundExceeded, FiniteWreath
    try:
        auts_B = aut_brute(action.group, max(args.max_aut_order, action.group.order))
    except BoundExceeded:
        return EXIT_BOUND
    hyp = decomposition_hypotheses(action, A, auts_B)
    rep.hypotheses.update(hyp)
    rep.results.update({"aut_formula": None, "out_formula": None, "aut_brute": None,
                        "inn_brute": None, "out_brute": None})
    if not A.is_finite():
        rep.results["aut_note"] = "Aut(G) is infinite for infinite A; orders not computed"
        return EXIT_OK
    try:
        orders = aut_out_orders(action, A, auts_B=auts_B)
    except HypothesisError as exc:
        rep.results["aut_note"] = str(exc)
        return EXIT_OK
    rep.results.update({
        "aut_formula": orders.aut_formula, "out_formula": orders.out_formula,
        "iso_order": orders.iso, "aut_B": orders.aut_B, "out_B": orders.out_B,
        "delta_center": orders.delta_center,
    })
    rep.verdict("aut_formula", orders.aut_formula, sorted(orders.hypotheses))
    G_order = A.order() ** action.n * action.group.order
    rep.results["G_order"] = G_order
    if G_order > args.max_aut_order:
        rep.results["aut_formula_verified"] = False
        return EXIT_BOUND
    W = FiniteWreath(action, A, max_order=args.max_aut_order)
    n_aut = len(aut_brute(W.group, args.max_aut_order))
    n_inn = W.order // W.center_order()
    rep.results.update({"aut_brute": n_aut, "inn_brute": n_inn, "out_brute": n_aut // n_inn})
    ok = n_aut == orders.aut_formula and n_aut // n_inn == orders.out_formula
    rep.results["aut_formula_verified"] = ok
    return EXIT_OK if ok else EXIT_CERT


def cmd_finite(args) -> Report:
    from .finite.theorem_b import theoremB_report
    rep = Report(f"finite {args.action}",
                 {"group": args.group, "coeff": list(args.coeff.invariants), "seed": args.seed,
                  "max_aut_order": args.max_aut_order, "budget": args.budget})
    action, A = _setup(args)
    code = EXIT_OK
    with Timer() as t:
        rep.results.update(_orbit_results(action))
        if args.action in ("analyze", "endring"):
            if not _endring(action, A, args, rep):
                code = EXIT_CERT
        if args.action in ("analyze", "h1"):
            if not _h1(action, A, rep):
                code = EXIT_CERT
        if args.action in ("analyze", "aut"):
            c = _aut(action, A, args, rep)
            if code == EXIT_OK:
                code = c
        if args.action == "analyze":
            tb = theoremB_report(action, A, args.budget, args.seed,
                                 max(args.max_aut_order, action.group.order)).as_dict()
            rep.hypotheses.update(tb["conditions"])
            rep.results["theorem_b_failed"] = tb["failed"]
            rep.results["n_p"] = tb["n_p"]
            rep.results["n_0"] = tb["n_0"]
            rep.verdict("hopfian", tb["verdict"], tb["licensed_by"])
            rep.verdicts["fallback"] = tb["fallback"]
    rep.timing = t.elapsed
    rep.results = native(rep.results)
    rep.exit_code = code
    return rep


def _summary(rep: Report) -> str:
    lines = [f"{rep.command}: exit {rep.exit_code}"]
    for k in sorted(rep.results):
        v = rep.results[k]
        if isinstance(v, (dict, list)) and len(json.dumps(v)) > 60:
            continue
        lines.append(f"  {k} = {json.dumps(v)}")
    for k in sorted(rep.verdicts):
        lines.append(f"  verdict {k} = {json.dumps(rep.verdicts[k])}")
    failed = [k for k, v in rep.hypotheses.items() if not v]
    if failed:
        lines.append("  failed hypotheses: " + ", ".join(sorted(failed)))
    return "\n".join(lines)


def main(argv: Optional[List[str]] = None) -> int:
    parser = build_parser()
    args = parser.parse_args(argv)   # exits with 2 on bad flags
    try:
        if args.command == "verify-counterexample":
            rep = cmd_verify_counterexample(args)
        else:
            rep = cmd_finite(args)
    except InputError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_INPUT
    print(_summary(rep))
    if args.json:
        text = rep.to_json()
        if args.json == "-":
            sys.stdout.write(text)
        else:
            with open(args.json, "w", encoding="utf-8") as fh:
                fh.write(text)
    return rep.exit_code


if __name__ == "__main__":
    sys.exit(main())
