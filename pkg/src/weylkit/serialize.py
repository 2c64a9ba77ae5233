"""JSON serialization for all weylkit artifact types.

Complex matrices travel as {"rows": n, "cols": m, "data": [[re, im], ...]}
in row-major order.  Reals are rendered with 17 significant digits so that
identical inputs always produce byte-identical files.
"""

from __future__ import annotations

import json

import numpy as np

from .canonical import CanonicalForm
from .certify import ChoiMatrix, FeasibilityReport, UcpCertificate
from .errors import DimensionMismatch
from .star_iso import SpanBasis
from .weyl import WeylSystem

__all__ = [
    "dumps",
    "matrix_to_json",
    "matrix_from_json",
    "system_to_json",
    "system_from_json",
    "canonical_form_to_json",
    "canonical_form_from_json",
    "span_basis_to_json",
    "span_basis_from_json",
    "feasibility_report_to_json",
    "feasibility_report_from_json",
    "ucp_certificate_to_json",
    "ucp_certificate_from_json",
]


def _real(x: float) -> str:
    return format(float(x), ".17g")


def dumps(obj) -> str:
    """Render a JSON document with reals at 17 significant digits."""
    if isinstance(obj, bool):
        return "true" if obj else "false"
    if isinstance(obj, (int, np.integer)):
        return str(int(obj))
    if isinstance(obj, (float, np.floating)):
        return _real(obj)
    if isinstance(obj, str):
        return json.dumps(obj)
    if isinstance(obj, dict):
        items = ", ".join(f"{json.dumps(k)}: {dumps(v)}" for k, v in obj.items())
        return "{" + items + "}"
    if isinstance(obj, (list, tuple)):
        return "[" + ", ".join(dumps(v) for v in obj) + "]"
    if obj is None:
        return "null"
    raise TypeError(f"cannot serialize {type(obj).__name__}")


def matrix_to_json(a) -> dict:
    a = np.atleast_2d(np.asarray(a, dtype=np.complex128))
    return {
        "rows": a.shape[0],
        "cols": a.shape[1],
        "data": [[x.real, x.imag] for x in a.ravel()],
    }


def matrix_from_json(doc: dict) -> np.ndarray:
    rows, cols = int(doc["rows"]), int(doc["cols"])
    data = doc["data"]
    if len(data) != rows * cols:
        raise DimensionMismatch(f"expected {rows * cols} entries, got {len(data)}")
    flat = np.array([complex(re, im) for re, im in data], dtype=np.complex128)
    return flat.reshape(rows, cols)


def system_to_json(system: WeylSystem) -> dict:
    return {
        "p": system.p,
        "zeta": [system.zeta.real, system.zeta.imag],
        "d": system.d,
        "unitaries": [matrix_to_json(u) for u in system.unitaries],
        "commutation": [[int(c) for c in row] for row in system.commutation],
    }


def system_from_json(doc: dict) -> WeylSystem:
    return WeylSystem(
        p=int(doc["p"]),
        zeta=complex(doc["zeta"][0], doc["zeta"][1]),
        unitaries=[matrix_from_json(m) for m in doc["unitaries"]],
        commutation=np.array(doc["commutation"], dtype=np.int64),
    )


def canonical_form_to_json(cf: CanonicalForm) -> dict:
    return {
        "p": cf.p,
        "n": cf.n,
        "zeta": [cf.zeta.real, cf.zeta.imag],
        "y": matrix_to_json(cf.y),
        "blocks": [matrix_to_json(b) for b in cf.blocks],
        "v1": matrix_to_json(cf.v1),
    }


def canonical_form_from_json(doc: dict) -> CanonicalForm:
    return CanonicalForm(
        p=int(doc["p"]),
        n=int(doc["n"]),
        zeta=complex(doc["zeta"][0], doc["zeta"][1]),
        y=matrix_from_json(doc["y"]),
        blocks=[matrix_from_json(b) for b in doc["blocks"]],
        v1=matrix_from_json(doc["v1"]),
    )


def span_basis_to_json(sb: SpanBasis) -> dict:
    return {
        "ambient_dim": sb.ambient_dim,
        "dim": sb.dim,
        "basis": [matrix_to_json(b) for b in sb.basis],
    }


def span_basis_from_json(doc: dict) -> SpanBasis:
    return SpanBasis(
        ambient_dim=int(doc["ambient_dim"]),
        basis=[matrix_from_json(b) for b in doc["basis"]],
        dim=int(doc["dim"]),
    )


def feasibility_report_to_json(report: FeasibilityReport) -> dict:
    return {
        "status": report.status,
        "gap": report.gap,
        "iterations": report.iterations,
        "in_dim": report.witness.in_dim,
        "out_dim": report.witness.out_dim,
        "witness": matrix_to_json(report.witness.mat),
    }


def feasibility_report_from_json(doc: dict) -> FeasibilityReport:
    return FeasibilityReport(
        status=str(doc["status"]),
        gap=float(doc["gap"]),
        iterations=int(doc["iterations"]),
        witness=ChoiMatrix(
            in_dim=int(doc["in_dim"]),
            out_dim=int(doc["out_dim"]),
            mat=matrix_from_json(doc["witness"]),
        ),
    )


def _choi_to_json(choi: ChoiMatrix) -> dict:
    return {
        "in_dim": choi.in_dim,
        "out_dim": choi.out_dim,
        "mat": matrix_to_json(choi.mat),
    }


def _choi_from_json(doc: dict) -> ChoiMatrix:
    return ChoiMatrix(
        in_dim=int(doc["in_dim"]),
        out_dim=int(doc["out_dim"]),
        mat=matrix_from_json(doc["mat"]),
    )


def ucp_certificate_to_json(cert: UcpCertificate) -> dict:
    return {
        "forward": _choi_to_json(cert.forward),
        "backward": _choi_to_json(cert.backward),
        "mapping_residuals": {k: float(v) for k, v in cert.mapping_residuals.items()},
        "psd_margins": {k: float(v) for k, v in cert.psd_margins.items()},
    }


def ucp_certificate_from_json(doc: dict) -> UcpCertificate:
    return UcpCertificate(
        forward=_choi_from_json(doc["forward"]),
        backward=_choi_from_json(doc["backward"]),
        mapping_residuals={k: float(v) for k, v in doc["mapping_residuals"].items()},
        psd_margins={k: float(v) for k, v in doc["psd_margins"].items()},
    )
