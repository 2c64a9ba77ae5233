import json

import numpy as np
import pytest

from weylkit import serialize
from weylkit.canonical import canonicalize, random_pair
from weylkit.certify import ucp_interpolation
from weylkit.errors import DimensionMismatch
from weylkit.star_iso import algebra_span
from weylkit.weyl import clock_matrix, shift_matrix, weyl_pair


def test_matrix_round_trip():
    rng = np.random.default_rng(0)
    a = rng.normal(size=(3, 4)) + 1j * rng.normal(size=(3, 4))
    doc = serialize.matrix_to_json(a)
    assert doc["rows"] == 3 and doc["cols"] == 4
    back = serialize.matrix_from_json(json.loads(serialize.dumps(doc)))
    assert np.array_equal(back, a)


def test_matrix_rejects_wrong_length():
    with pytest.raises(DimensionMismatch):
        serialize.matrix_from_json({"rows": 2, "cols": 2, "data": [[1.0, 0.0]]})


def test_dumps_17_significant_digits():
    assert serialize.dumps(1 / 3) == "0.33333333333333331"
    assert serialize.dumps(1.0) == "1"
    assert serialize.dumps(True) == "true"
    assert serialize.dumps([1, "a", None]) == '[1, "a", null]'


def test_dumps_deterministic():
    ws = weyl_pair(3)
    a = serialize.dumps(serialize.system_to_json(ws))
    b = serialize.dumps(serialize.system_to_json(weyl_pair(3)))
    assert a == b
    json.loads(a)  # valid JSON


def test_system_round_trip():
    ws = random_pair(3, 2, seed=1, scramble=True)
    text = serialize.dumps(serialize.system_to_json(ws))
    back = serialize.system_from_json(json.loads(text))
    assert back.p == ws.p and back.d == ws.d
    assert all(np.array_equal(x, y) for x, y in zip(back.unitaries, ws.unitaries))
    assert np.array_equal(back.commutation, ws.commutation)
    assert serialize.dumps(serialize.system_to_json(back)) == text


def test_canonical_form_round_trip():
    ws = random_pair(3, 2, seed=6, scramble=True)
    cf = canonicalize(*ws.unitaries, 3)
    back = serialize.canonical_form_from_json(
        json.loads(serialize.dumps(serialize.canonical_form_to_json(cf)))
    )
    assert np.array_equal(back.y, cf.y)
    assert np.array_equal(back.v1, cf.v1)
    assert all(np.array_equal(x, y) for x, y in zip(back.blocks, cf.blocks))


def test_span_basis_round_trip():
    sb = algebra_span([clock_matrix(3), shift_matrix(3)])
    back = serialize.span_basis_from_json(
        json.loads(serialize.dumps(serialize.span_basis_to_json(sb)))
    )
    assert back.dim == sb.dim and back.ambient_dim == sb.ambient_dim


def test_feasibility_report_round_trip():
    u, v = clock_matrix(3), shift_matrix(3)
    report = ucp_interpolation([u, v], [u, v])
    doc = serialize.feasibility_report_to_json(report)
    assert set(doc) == {"status", "gap", "iterations", "in_dim", "out_dim", "witness"}
    back = serialize.feasibility_report_from_json(json.loads(serialize.dumps(doc)))
    assert back.status == report.status
    assert back.gap == report.gap
    assert np.array_equal(back.witness.mat, report.witness.mat)
