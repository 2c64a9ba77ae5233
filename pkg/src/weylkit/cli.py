"""Command-line front end: construct, certify, and interpolate.

Three subcommands:

* ``generate`` writes a unitary system as JSON,
* ``certify`` audits a system file (orders, commutation, spectral
  multiplicities, canonical form, algebra/commutant dimensions),
* ``interpolate`` decides ucp-interpolation feasibility, or runs the
  dilation-rigidity search with ``--rigidity``.

Exit codes: ``generate`` 0 success / 2 bad flags / 3 construction or I/O
error; ``certify`` 0 all checks pass / 1 certified failure / 3 I/O error;
``interpolate`` 0 feasible / 1 infeasible evidence / 4 undetermined /
3 I/O error.  ``WEYLKIT_TOL`` overrides the default tolerance; ``--tol``
overrides both.
"""

from __future__ import annotations

import argparse
import json
import os
import sys
import tempfile

import numpy as np

from . import serialize
from .canonical import canonical_u, canonical_v, canonicalize, random_pair
from .errors import WeylkitError
from .linalg import frobenius_norm
from .star_iso import algebra_span, commutant
from .weyl import (
    WeylSystem,
    check_relations,
    clock_matrix,
    counterexample_triple,
    ew_matrix,
    shift_matrix,
    simple_commutation,
    simple_weyl_triple,
    spectral_audit,
    weyl_brauer,
    weyl_pair,
)

__all__ = ["main"]


def _write_atomic(path: str | None, text: str) -> None:
    if path is None:
        sys.stdout.write(text + "\n")
        return
    directory = os.path.dirname(os.path.abspath(path))
    fd, tmp = tempfile.mkstemp(dir=directory, prefix=".weylkit-")
    try:
        with os.fdopen(fd, "w") as handle:
            handle.write(text + "\n")
        os.replace(tmp, path)
    except BaseException:
        if os.path.exists(tmp):
            os.unlink(tmp)
        raise


def _default_tol(args, fallback: float) -> float:
    if args.tol is not None:
        return args.tol
    env = os.environ.get("WEYLKIT_TOL")
    if env is not None:
        return float(env)
    return fallback


def _load_json(path: str) -> dict:
    with open(path) as handle:
        return json.load(handle)


def cmd_generate(args) -> int:
    p = args.p
    if args.kind == "pair":
        system = weyl_pair(p)
    elif args.kind == "triple":
        system = simple_weyl_triple(p)
    elif args.kind == "brauer":
        system = weyl_brauer(p, args.k)
    elif args.kind == "random":
        system = random_pair(p, args.n, seed=args.seed, scramble=True)
    elif args.kind == "counterexample":
        system = counterexample_triple(p)
    else:  # ew
        system = WeylSystem(
            p=p,
            zeta=np.exp(2j * np.pi / p),
            unitaries=[clock_matrix(p), ew_matrix(p), shift_matrix(p)],
            commutation=simple_commutation(3),
        )
    if args.format == "text":
        report = check_relations(system)
        lines = [
            f"kind: {args.kind}",
            f"p: {system.p}  d: {system.d}  generators: {system.g}",
            f"max order residual: {report.max_order_residual:.3e}",
            f"max commutation residual: {report.residual_matrix.max():.3e}",
            f"relations pass: {report.pass_}",
        ]
        _write_atomic(args.out, "\n".join(lines))
    else:
        _write_atomic(args.out, serialize.dumps(serialize.system_to_json(system)))
    return 0


def _certify_checks(system: WeylSystem, tol_val: float) -> list[dict]:
    checks = []
    relations = check_relations(system)
    checks.append(
        {
            "name": "order and commutation relations",
            "pass": bool(relations.pass_),
            "detail": {
                "max_order_residual": relations.max_order_residual,
                "max_commutation_residual": float(relations.residual_matrix.max()),
                "is_simple": bool(relations.is_simple),
            },
        }
    )
    d = system.d
    expected = d // system.p if d % system.p == 0 else None
    for idx, u in enumerate(system.unitaries):
        try:
            audit = spectral_audit(u, system.p, system.zeta)
        except WeylkitError as exc:
            checks.append(
                {
                    "name": f"spectral multiplicities of generator {idx + 1}",
                    "pass": False,
                    "detail": {"error": str(exc)},
                }
            )
            continue
        balanced = expected is not None and all(
            m == expected for m in audit["spectrum_multiplicities"]
        )
        checks.append(
            {
                "name": f"spectral multiplicities of generator {idx + 1}",
                "pass": bool(audit["divides"] and balanced),
                "detail": {
                    "divides": audit["divides"],
                    "trace": [audit["trace"].real, audit["trace"].imag],
                    "multiplicities": audit["spectrum_multiplicities"],
                },
            }
        )
    if system.g == 2 and relations.pass_:
        u, v = system.unitaries
        try:
            cf = canonicalize(u, v, system.p, system.zeta)
        except WeylkitError as exc:
            checks.append(
                {"name": "block canonical form", "pass": False, "detail": {"error": str(exc)}}
            )
        else:
            y = cf.y
            res_u = frobenius_norm(y.conj().T @ u @ y - canonical_u(cf.p, cf.n, cf.zeta))
            res_v = frobenius_norm(y.conj().T @ v @ y - canonical_v(cf.p, cf.n, cf.blocks, cf.v1))
            checks.append(
                {
                    "name": "block canonical form",
                    "pass": bool(max(res_u, res_v) <= tol_val),
                    "detail": {"clock_residual": res_u, "cyclic_residual": res_v},
                }
            )
        alg = algebra_span(list(system.unitaries))
        comm = commutant(list(system.unitaries))
        n = d // system.p
        checks.append(
            {
                "name": "generated algebra dimension",
                "pass": bool(alg.dim == system.p**2),
                "detail": {"dim": alg.dim, "expected": system.p**2},
            }
        )
        checks.append(
            {
                "name": "commutant dimension",
                "pass": bool(comm.dim == n**2),
                "detail": {"dim": comm.dim, "expected": n**2, "irreducible": comm.dim == 1},
            }
        )
    return checks


def cmd_certify(args) -> int:
    tol_val = _default_tol(args, 1e-8)
    system = serialize.system_from_json(_load_json(args.infile))
    checks = _certify_checks(system, tol_val)
    all_pass = all(c["pass"] for c in checks)
    doc = {"d": system.d, "p": system.p, "generators": system.g, "all_pass": all_pass, "checks": checks}
    if args.format == "text":
        lines = [f"system: p={system.p} d={system.d} generators={system.g}"]
        for c in checks:
            lines.append(f"[{'pass' if c['pass'] else 'FAIL'}] {c['name']}")
        lines.append(f"overall: {'pass' if all_pass else 'FAIL'}")
        _write_atomic(args.out, "\n".join(lines))
    else:
        _write_atomic(args.out, serialize.dumps(doc))
    return 0 if all_pass else 1


def cmd_interpolate(args) -> int:
    from .certify import dilation_rigidity, ucp_interpolation

    tol_val = _default_tol(args, 1e-7)
    if args.rigidity:
        report = dilation_rigidity(
            args.p, args.ell, seeds=tuple(range(args.seed, args.seed + 5)), tol=tol_val
        )
        doc = {
            "offdiag_norms": [float(x) for x in report["offdiag_norms"]],
            "witness_found": report["witness_found"],
            "reports": [serialize.feasibility_report_to_json(r) for r in report["reports"]],
        }
        statuses = [r.status for r in report["reports"]]
        if args.format == "text":
            lines = [
                f"dilation rigidity: p={args.p} ell={args.ell}",
                f"witness found: {report['witness_found']}",
                "off-diagonal block norms: "
                + ", ".join(f"{x:.3e}" for x in report["offdiag_norms"]),
            ]
            _write_atomic(args.out, "\n".join(lines))
        else:
            _write_atomic(args.out, serialize.dumps(doc))
        if report["witness_found"]:
            return 0
        return 1 if "infeasible_evidence" in statuses else 4
    doc = _load_json(args.infile)
    generators = [serialize.matrix_from_json(m) for m in doc["generators"]]
    targets = [serialize.matrix_from_json(m) for m in doc["targets"]]
    report = ucp_interpolation(generators, targets, tol=tol_val, seed=args.seed)
    if args.format == "text":
        lines = [
            f"status: {report.status}",
            f"gap: {report.gap:.3e}",
            f"iterations: {report.iterations}",
        ]
        _write_atomic(args.out, "\n".join(lines))
    else:
        _write_atomic(args.out, serialize.dumps(serialize.feasibility_report_to_json(report)))
    return {"feasible": 0, "infeasible_evidence": 1}.get(report.status, 4)


def _build_parser() -> argparse.ArgumentParser:
    parser = argparse.ArgumentParser(prog="weylkit")
    sub = parser.add_subparsers(dest="command", required=True)

    gen = sub.add_parser("generate", help="construct a unitary system and write it as JSON")
    gen.add_argument(
        "--kind",
        required=True,
        choices=["pair", "triple", "brauer", "random", "counterexample", "ew"],
    )
    gen.add_argument("--p", type=int, default=3)
    gen.add_argument("--n", type=int, default=1)
    gen.add_argument("--k", type=int, default=1)
    gen.add_argument("--seed", type=int, default=0)
    gen.add_argument("--tol", type=float, default=None)
    gen.add_argument("--out", default=None)
    gen.add_argument("--format", choices=["json", "text"], default="json")
    gen.set_defaults(func=cmd_generate)

    cert = sub.add_parser("certify", help="audit a unitary system file")
    cert.add_argument("--in", dest="infile", required=True)
    cert.add_argument("--tol", type=float, default=None)
    cert.add_argument("--out", default=None)
    cert.add_argument("--format", choices=["json", "text"], default="json")
    cert.set_defaults(func=cmd_certify)

    interp = sub.add_parser("interpolate", help="ucp interpolation feasibility")
    interp.add_argument("--in", dest="infile", default=None)
    interp.add_argument("--rigidity", action="store_true")
    interp.add_argument("--p", type=int, default=3)
    interp.add_argument("--ell", type=int, default=1)
    interp.add_argument("--seed", type=int, default=0)
    interp.add_argument("--tol", type=float, default=None)
    interp.add_argument("--out", default=None)
    interp.add_argument("--format", choices=["json", "text"], default="json")
    interp.set_defaults(func=cmd_interpolate)
    return parser


def main(argv=None) -> int:
    parser = _build_parser()
    args = parser.parse_args(argv)
    if args.command == "interpolate" and not args.rigidity and args.infile is None:
        parser.error("interpolate requires --in unless --rigidity is given")
    try:
        return args.func(args)
    except (WeylkitError, OSError, KeyError, ValueError, json.JSONDecodeError) as exc:
        print(f"error: {exc}", file=sys.stderr)
        return 3


if __name__ == "__main__":
    raise SystemExit(main())
