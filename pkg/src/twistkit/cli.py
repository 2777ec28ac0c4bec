"""Batch command-line interface.

Subcommands: expand-phi, solve-twist, verify, eval-rep, show-rmatrix.
Output is deterministic (byte-identical for identical configurations).
Exit codes: 0 success / all checks pass, 1 a check was falsified,
2 bad input, 3 the twist system is infeasible at the given cutoffs.
The TWISTKIT_ORDER environment variable overrides the default --order.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
from .deform import phi
from .pbw import element_to_json, to_casimir_basis
from .reps import evaluate, rep_unitarity_check, spin_rep
from .rmatrix import classical_R, quantum_R_image, quasitriangular_residual
from .tensor import tensor_to_json, tensor_to_str
from .twist import (TwistCandidate, build_candidate, normalization_check,
                    twist_residuals, unitarity_defect, cocycle_defect)

EXIT_OK = 0
EXIT_FALSIFIED = 1
EXIT_BAD_INPUT = 2
EXIT_INFEASIBLE = 3

# negative results documented for the reference twist: these checks are
# reported but do not flip the exit code under --expect-paper-behavior
EXPECTED_FAILURES = ("unitarity", "cocycle")


def _default_order() -> int:
    try:
        return int(os.environ.get("TWISTKIT_ORDER", "2"))
    except ValueError:
        return 2


def _emit(args, text: str):
    if getattr(args, "output", None):
        with open(args.output, "w") as fh:
            fh.write(text + "\n")
    else:
        print(text)


def _json_dumps(obj) -> str:
    return json.dumps(obj, indent=2, sort_keys=True)


# ---------------------------------------------------------------------------
# rendering helpers


def format_hi_polynomial(x) -> str:
    """Render a polynomial in H and I over a common denominator, e.g.
    (2*I + 2*H^2 - 2*H - 1)/12."""
    decomp = to_casimir_basis(x)
    if not decomp:
        return "0"
    if any(t.side != "pure" for t, _ in decomp):
        raise ValueError("not a polynomial in H and I")
    terms = sorted(decomp, key=lambda kv: (kv[0].b, kv[0].a), reverse=True)
    from math import lcm
    den = lcm(*(c.denominator for _, c in terms))
    parts = []
    for t, c in terms:
        n = int(c * den)
        mono = "*".join(s for s in (f"I^{t.b}" if t.b > 1 else "I" if t.b else "",
                                    f"H^{t.a}" if t.a > 1 else "H" if t.a else "") if s)
        if not mono:
            body = str(abs(n))
        elif abs(n) == 1:
            body = mono
        else:
            body = f"{abs(n)}*{mono}"
        parts.append((" - " if n < 0 else " + ") + body)
    head = parts[0][3:]
    if parts[0].startswith(" - "):
        head = "-" + head
    poly = head + "".join(parts[1:])
    if den == 1:
        return poly
    if len(terms) == 1 and not poly.startswith("-"):
        return f"{poly}/{den}"
    return f"({poly})/{den}"


def format_phi_series(series) -> str:
    parts = []
    for k, c in enumerate(series.coeffs):
        if c.is_zero():
            continue
        body = format_hi_polynomial(c)
        if k == 0:
            parts.append(body)
        else:
            hp = "h" if k == 1 else f"h^{k}"
            parts.append(f"{hp}*{body}" if body != "1" else hp)
    return " + ".join(parts) if parts else "0"


def _tensor_series_text(series, label: str) -> list:
    lines = [f"{label} up to order {series.order}:"]
    for k, c in enumerate(series.coeffs):
        lines.append(f"  h^{k}: {tensor_to_str(c)}")
    return lines


# ---------------------------------------------------------------------------
# subcommands


def cmd_expand_phi(args) -> int:
    p = phi(args.sign, args.order)
    if args.format == "json":
        payload = {
            "sign": args.sign,
            "order": args.order,
            "coefficients": [element_to_json(c) for c in p.series.coeffs],
            "text": format_phi_series(p.series),
        }
        _emit(args, _json_dumps(payload))
    else:
        _emit(args, format_phi_series(p.series))
    return EXIT_OK


def cmd_solve_twist(args) -> int:
    try:
        cand, sols = build_candidate(args.order, cutoff_l=args.cutoff_l,
                                     cutoff_d=args.cutoff_d,
                                     symmetrize=not args.raw,
                                     max_escalations=args.max_escalations)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    solved = all(s.solved for s in sols) and len(sols) == args.order
    if args.out_dir:
        os.makedirs(args.out_dir, exist_ok=True)
        for s in sols:
            path = os.path.join(args.out_dir, f"twist-order-{s.order}.json")
            with open(path, "w") as fh:
                fh.write(_json_dumps(s.to_json()) + "\n")
    if solved and args.candidate_out:
        with open(args.candidate_out, "w") as fh:
            fh.write(_json_dumps(cand.to_json()) + "\n")
    if args.format == "json":
        payload = {
            "solutions": [s.to_json() for s in sols],
            "candidate": cand.to_json() if solved else None,
        }
        _emit(args, _json_dumps(payload))
    else:
        lines = []
        for s in sols:
            lines.append(f"order {s.order}: {s.status} "
                         f"(cutoffs L={s.cutoff_l}, D={s.cutoff_d}, "
                         f"unknowns={s.unknown_count}, rank={s.rank}, "
                         f"kernel dim={len(s.homogeneous)})")
            if s.particular is not None:
                lines.append(f"  particular: {tensor_to_str(s.particular)}")
        if solved:
            lines.append("candidate coefficients:")
            for k, c in enumerate(cand.series.coeffs):
                lines.append(f"  h^{k}: {tensor_to_str(c)}")
        _emit(args, "\n".join(lines))
    return EXIT_OK if solved else EXIT_INFEASIBLE


def _load_candidate(path: str) -> TwistCandidate:
    with open(path) as fh:
        data = json.load(fh)
    if isinstance(data, dict) and "candidate" in data:
        data = data["candidate"]
    return TwistCandidate.from_json(data)


ALL_CHECKS = ("twist", "rmatrix", "normalization", "unitarity", "cocycle")


def cmd_verify(args) -> int:
    try:
        cand = _load_candidate(args.candidate)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot load candidate: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    checks = ALL_CHECKS if "all" in args.checks else tuple(args.checks)
    order = args.order
    lines = []
    falsified = False
    for name in checks:
        if name == "twist":
            rep = twist_residuals(cand, order)
            ok = rep.passed
            lines.extend("twist " + l for l in rep.lines())
        elif name == "rmatrix":
            resid = quasitriangular_residual(cand, order)
            bad = next((k for k, c in enumerate(resid.coeffs) if not c.is_zero()), None)
            ok = bad is None
            lines.append(f"rmatrix[quasitriangular]: {'pass' if ok else f'fail (first failure at order {bad})'}")
        elif name == "normalization":
            rep = normalization_check(cand)
            ok = rep.passed
            lines.extend("normalization " + l for l in rep.lines())
        elif name == "unitarity":
            defect = unitarity_defect(cand)
            bad = next((k for k, c in enumerate(defect.coeffs) if not c.is_zero()), None)
            ok = bad is None
            label = "pass" if ok else (
                f"fails-as-paper-states (first nonzero at order {bad})"
                if args.expect_paper_behavior else f"fail (first nonzero at order {bad})")
            lines.append(f"unitarity(universal): {label}")
        elif name == "cocycle":
            defect = cocycle_defect(cand)
            bad = next((k for k, c in enumerate(defect.coeffs) if not c.is_zero()), None)
            ok = bad is None
            label = "pass" if ok else (
                f"fails-as-paper-states (first nonzero at order {bad})"
                if args.expect_paper_behavior else f"fail (first nonzero at order {bad})")
            lines.append(f"cocycle: {label}")
        else:
            print(f"error: unknown check {name!r}", file=sys.stderr)
            return EXIT_BAD_INPUT
        if not ok and not (args.expect_paper_behavior and name in EXPECTED_FAILURES):
            falsified = True
    if args.format == "json":
        _emit(args, _json_dumps({"order": order, "report": lines,
                                 "falsified": falsified}))
    else:
        _emit(args, "\n".join(lines))
    return EXIT_FALSIFIED if falsified else EXIT_OK


def cmd_eval_rep(args) -> int:
    try:
        cand = _load_candidate(args.candidate)
    except (OSError, ValueError, KeyError, TypeError, json.JSONDecodeError) as exc:
        print(f"error: cannot load candidate: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    try:
        rep1 = spin_rep(args.two_j1)
        rep2 = spin_rep(args.two_j2)
    except ValueError as exc:
        print(f"error: {exc}", file=sys.stderr)
        return EXIT_BAD_INPUT
    mat = evaluate(cand.at_order(args.order).series, rep1, rep2)
    unitarity = None
    if args.two_j1 == 1 and args.two_j2 == 1:
        unitarity = rep_unitarity_check(cand, args.order)
    if args.format == "json":
        payload = mat.to_json()
        if unitarity is not None:
            payload["unitarity"] = [c.line() for c in unitarity.checks]
        _emit(args, _json_dumps(payload))
    else:
        lines = [f"{rep1.dim * rep2.dim}x{rep1.dim * rep2.dim} series matrix "
                 f"(two_j = {args.two_j1}, {args.two_j2}; order {args.order}):",
                 mat.render_text()]
        if unitarity is not None:
            lines.extend(unitarity.lines())
        _emit(args, "\n".join(lines))
    return EXIT_OK


def cmd_show_rmatrix(args) -> int:
    which = args.which
    out_text = []
    payload = {"order": args.order}
    if which in ("classical", "both"):
        R = classical_R(args.order)
        out_text.extend(_tensor_series_text(R, "classical R = q^P"))
        payload["classical"] = [tensor_to_json(c) for c in R.coeffs]
    if which in ("quantum", "both"):
        Rq = quantum_R_image(args.order)
        out_text.extend(_tensor_series_text(Rq, "quantum R image"))
        payload["quantum"] = [tensor_to_json(c) for c in Rq.coeffs]
    if args.format == "json":
        _emit(args, _json_dumps(payload))
    else:
        _emit(args, "\n".join(out_text))
    return EXIT_OK


# ---------------------------------------------------------------------------


def build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(
        prog="twistkit",
        description="Exact computations for the quantum-sl2 coproduct twist.")
    sub = parser.add_subparsers(dest="command", required=True)

    def common(p):
        p.add_argument("--order", type=int, default=_default_order(),
                       help="truncation order N (default: TWISTKIT_ORDER or 2)")
        p.add_argument("--format", choices=("text", "json"), default="text")
        p.add_argument("--output", help="write output to this file instead of stdout")

    p = sub.add_parser("expand-phi", help="expand the deforming-map coefficient phi")
    p.add_argument("--sign", choices=("plus", "minus"), required=True)
    common(p)
    p.set_defaults(func=cmd_expand_phi)

    p = sub.add_parser("solve-twist", help="solve the twist equations order by order")
    common(p)
    p.add_argument("--cutoff-l", type=int, default=None,
                   help="ansatz power cutoff L (default k+1 at order k)")
    p.add_argument("--cutoff-d", type=int, default=None,
                   help="ansatz polynomial degree cutoff D (default 2k)")
    p.add_argument("--max-escalations", type=int, default=2,
                   help="cutoff escalations (L+1, D+2) tried on infeasibility")
    p.add_argument("--raw", action="store_true",
                   help="skip the kernel correction that enforces the "
                        "quasitriangular relation")
    p.add_argument("--out-dir", help="write one solution JSON file per order here")
    p.add_argument("--candidate-out", help="write the assembled candidate JSON here")
    p.set_defaults(func=cmd_solve_twist)

    p = sub.add_parser("verify", help="verify a candidate twist from a JSON file")
    p.add_argument("candidate", help="candidate JSON file")
    common(p)
    p.add_argument("--checks", nargs="+", default=["all"],
                   choices=("all",) + ALL_CHECKS)
    p.add_argument("--expect-paper-behavior", action="store_true",
                   help="report the documented negative results (universal "
                        "unitarity, cocycle) as expected failures that do "
                        "not flip the exit code")
    p.set_defaults(func=cmd_verify)

    p = sub.add_parser("eval-rep", help="evaluate a candidate in a spin representation")
    p.add_argument("candidate", help="candidate JSON file")
    p.add_argument("--two-j1", type=int, required=True)
    p.add_argument("--two-j2", type=int, required=True)
    common(p)
    p.set_defaults(func=cmd_eval_rep)

    p = sub.add_parser("show-rmatrix", help="print the R-matrix expansions")
    p.add_argument("--which", choices=("classical", "quantum", "both"),
                   default="both")
    common(p)
    p.set_defaults(func=cmd_show_rmatrix)

    return parser


def main(argv=None) -> int:
    args = build_parser().parse_args(argv)
    if getattr(args, "order", 0) < 0:
        print("error: --order must be nonnegative", file=sys.stderr)
        return EXIT_BAD_INPUT
    return args.func(args)


if __name__ == "__main__":
    sys.exit(main())
