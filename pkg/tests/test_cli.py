import io
import json
import subprocess
import sys

import numpy as np
import pytest

from cgplab import computational_mori, haar_unitary, masa_distance, mori_from_frame
from cgplab.cli import run
from cgplab.jsonio import dumps, matrix_from_doc, matrix_to_doc
from cgplab.qubit import SIGMA_X, SIGMA_Z

HADAMARD = np.array([[1, 1], [1, -1]]) / np.sqrt(2)


def write(tmp_path, name, obj):
    p = tmp_path / name
    p.write_text(json.dumps(obj))
    return str(p)


def write_matrix(tmp_path, name, m):
    return write(tmp_path, name, matrix_to_doc(m))


def call(argv):
    out, err = io.StringIO(), io.StringIO()
    code = run(argv, stdout=out, stderr=err)
    return code, out.getvalue(), err.getvalue()


def value(argv):
    code, out, _ = call(argv)
    assert code == 0, out
    return json.loads(out)["value"]


def test_cgp_hadamard(tmp_path):
    u = write_matrix(tmp_path, "H2.json", HADAMARD)
    b = write_matrix(tmp_path, "comp2.json", np.eye(2))
    code, out, _ = call(["cgp", "--unitary", u, "--basis", b])
    assert code == 0
    doc = json.loads(out)
    assert doc["value"] == 0.16666666666666666
    assert '"value": 0.16666666666666666' in out
    assert doc["command"] == "cgp"
    assert set(doc["inputs"]) == {"unitary", "basis"} and len(doc["inputs"]["unitary"]) == 64
    assert doc["tolerances"] == {"structural": 1e-10, "equality": 1e-12}


def test_cgp_channel(tmp_path):
    ks = [np.sqrt(0.5) * np.eye(2), np.sqrt(0.5) * HADAMARD]
    ch = write(tmp_path, "ch.json", {"kraus": [matrix_to_doc(k) for k in ks]})
    v = value(["cgp", "--channel", ch])
    assert 0 < v < 1 / 6


def test_distance_same_basis(tmp_path):
    b = write_matrix(tmp_path, "B.json", haar_unitary(3, 1))
    assert value(["distance", "--basis-a", b, "--basis-b", b]) == 0.0


def test_distance_methods_agree(tmp_path, rng):
    for d in (2, 5, 8):
        a = write_matrix(tmp_path, f"a{d}.json", haar_unitary(d, rng))
        b = write_matrix(tmp_path, f"b{d}.json", haar_unitary(d, rng))
        vals = [value(["distance", "--basis-a", a, "--basis-b", b, "--method", m])
                for m in ("closed", "superop", "commutator")]
        assert max(vals) - min(vals) <= 1e-10


def test_distance_from_unitary(tmp_path):
    u = write_matrix(tmp_path, "H2.json", HADAMARD)
    assert abs(value(["distance", "--unitary", u]) - np.sqrt(2)) < 1e-12


def test_estimate_cgp_byte_identical(tmp_path):
    u = write_matrix(tmp_path, "U.json", haar_unitary(3, 5))
    b = write_matrix(tmp_path, "B.json", haar_unitary(3, 6))
    argv = ["estimate-cgp", "--unitary", u, "--basis", b, "--samples", "100000", "--seed", "42"]
    first, second = call(argv), call(argv)
    assert first[0] == 0 and first[1] == second[1]
    doc = json.loads(first[1])
    assert doc["seed"] == 42 and doc["samples"] == 100000 and doc["workers"] == 1
    w1 = call(argv + ["--workers", "3"])
    assert w1[1] == call(argv + ["--workers", "3"])[1]


def test_estimate_seed_from_environment(tmp_path, monkeypatch):
    u = write_matrix(tmp_path, "H2.json", HADAMARD)
    argv = ["estimate-cgp", "--unitary", u, "--samples", "1000"]
    monkeypatch.setenv("CGPLAB_SEED", "17")
    from_env = call(argv)[1]
    assert json.loads(from_env)["seed"] == 17
    assert from_env == call(argv + ["--seed", "17"])[1]
    monkeypatch.delenv("CGPLAB_SEED")
    assert json.loads(call(argv)[1])["seed"] == 0


def test_coherence_methods(tmp_path):
    plus = write_matrix(tmp_path, "plus.json", 0.5 * (np.eye(2) + SIGMA_X))
    assert abs(value(["coherence", "--state", plus]) - 0.5) < 1e-15
    assert abs(value(["coherence", "--state", plus, "--method", "commutator"]) - 0.5) < 1e-15


def test_overlap_dfs_phi(tmp_path):
    f = write_matrix(tmp_path, "F3.json", np.fft.fft(np.eye(3)) / np.sqrt(3))
    o = matrix_from_doc(value(["overlap", "--unitary", f]))
    assert np.allclose(o, 1 / 3)
    assert abs(value(["dfs", "--unitary", f]) - np.pi / 2) < 1e-12
    code, out, _ = call(["phi", "--unitary", f])
    assert code == 0 and '"value": Infinity' in out


def test_qubit_verbs():
    assert abs(value(["qubit", "distance", "--n", "0", "0", "1", "--m", "1", "0", "0"]) - np.sqrt(2)) < 1e-15
    assert abs(value(["qubit", "cgp", "--theta", str(np.pi / 2)]) - 1 / 6) < 1e-15
    assert abs(value(["qubit", "dfs", "--psi", str(2 * np.pi / 3)]) - np.pi / 3) < 1e-15
    assert call(["qubit", "dfs", "--psi", "4"])[0] == 2
    assert call(["qubit"])[0] == 64


def test_haar_and_fourier():
    m = matrix_from_doc(value(["haar", "--dim", "4", "--seed", "3"]))
    assert np.max(np.abs(m - haar_unitary(4, 3))) == 0
    f = matrix_from_doc(value(["fourier", "--dim", "5"]))
    assert abs(masa_distance(computational_mori(5), mori_from_frame(f)) - np.sqrt(8)) < 1e-10


def test_susceptibility_csv(tmp_path):
    path = write(tmp_path, "path.json", {
        "dim": 2,
        "nodes": [{"t": 0.0, "H": matrix_to_doc(SIGMA_Z)}, {"t": 1.0, "H": matrix_to_doc(SIGMA_X)}],
        "h": 1e-4,
        "step": 0.25,
    })
    code, out, _ = call(["susceptibility", "--path", path, "--workers", "2"])
    assert code == 0
    lines = out.splitlines()
    assert lines[0] == "t,chi_0,chi_1,speed,fs_speed"
    rows = [[float(x) for x in line.split(",")] for line in lines[1:]]
    assert len(rows) == 4
    assert all(r[3] > 0 and abs(r[4] - r[3] / 2) < 1e-6 * r[3] for r in rows)


def test_invalid_inputs_exit_2(tmp_path):
    bad_u = write_matrix(tmp_path, "bad.json", np.ones((2, 2)))
    code, out, _ = call(["cgp", "--unitary", bad_u])
    assert code == 2
    err = json.loads(out)
    assert err["command"] == "cgp" and err["error"]["type"] == "NonUnitaryError"
    bad_rho = write_matrix(tmp_path, "rho.json", SIGMA_X)
    code, out, _ = call(["coherence", "--state", bad_rho])
    assert code == 2 and json.loads(out)["error"]["type"] == "InvalidStateError"
    crossing = write(tmp_path, "cross.json", {
        "dim": 2,
        "nodes": [{"t": -1.0, "H": matrix_to_doc(SIGMA_Z)}, {"t": 1.0, "H": matrix_to_doc(-SIGMA_Z)}],
    })
    code, out, _ = call(["dfs", "--basis-a", bad_u, "--basis-b", bad_u])
    assert code == 2
    broken = tmp_path / "broken.json"
    broken.write_text("{not json")
    assert call(["cgp", "--unitary", str(broken)])[0] == 2
    assert call(["cgp", "--unitary", str(tmp_path / "missing.json")])[0] == 2
    assert call(["cgp", "--unitary", write(tmp_path, "short.json", {"rows": 2, "cols": 2, "data": [[1, 0]]})])[0] == 2
    assert call(["haar", "--dim", "2", "--tol-structural", "-1"])[0] == 2
    # a node path whose grid lands on the crossing reports a gap, not an error
    code, out, _ = call(["susceptibility", "--path", crossing, "--h", "0.5", "--step", "0.5"])
    assert code == 0 and "nan" in out


def test_degenerate_path_document(tmp_path):
    doc = {"dim": 2, "nodes": [{"t": 0.0, "H": matrix_to_doc(SIGMA_Z)}, {"t": 1.0, "H": matrix_to_doc(SIGMA_Z.real + 1j)}]}
    assert call(["susceptibility", "--path", write(tmp_path, "p.json", doc)])[0] == 2
    assert call(["susceptibility", "--path", write(tmp_path, "q.json", {"dim": 2})])[0] == 2


def test_usage_errors_exit_64(tmp_path):
    code, out, err = call(["frobnicate"])
    assert code == 64 and out == "" and "usage" in err
    assert call([])[0] == 64
    assert call(["cgp"])[0] == 64
    assert call(["distance", "--basis-a", "x.json"])[0] == 64
    assert call(["estimate-cgp", "--unitary", "x", "--samples", "many"])[0] == 64


def test_module_entry_point(tmp_path):
    b = write_matrix(tmp_path, "B.json", np.eye(2))
    proc = subprocess.run([sys.executable, "-m", "cgplab", "distance", "--basis-a", b, "--basis-b", b],
                          capture_output=True, text=True)
    assert proc.returncode == 0 and json.loads(proc.stdout)["value"] == 0.0
    proc = subprocess.run([sys.executable, "-m", "cgplab", "nope"], capture_output=True, text=True)
    assert proc.returncode == 64


def test_matrix_doc_round_trip(rng):
    for d in (1, 3, 8):
        m = haar_unitary(d, rng) * 1e3
        doc = json.loads(dumps(matrix_to_doc(m)))
        assert np.max(np.abs(matrix_from_doc(doc) - m)) <= 1e-15 * np.max(np.abs(m))
    assert np.array_equal(matrix_from_doc({"rows": 1, "cols": 2, "data": [[1, [0, 2]]]}), [[1, 2j]])


def test_dumps_deterministic():
    doc = {"b": 1 / 3, "a": [1.0, float("nan"), float("-inf"), 2], "c": {"z": None, "y": True}}
    assert dumps(doc) == ('{"a": [1.0, NaN, -Infinity, 2], "b": 0.33333333333333331, '
                          '"c": {"y": true, "z": null}}')
    assert float(dumps(0.1)) == 0.1


@pytest.mark.parametrize("flag,key", [("--tol-structural", "structural"), ("--tol-equality", "equality")])
def test_tolerances_echoed(tmp_path, flag, key):
    b = write_matrix(tmp_path, "B.json", np.eye(2))
    code, out, _ = call(["distance", "--basis-a", b, "--basis-b", b, flag, "1e-11"])
    assert code == 0 and json.loads(out)["tolerances"][key] == 1e-11


def test_inconsistent_tolerances(tmp_path):
    b = write_matrix(tmp_path, "B.json", np.eye(2))
    code, out, _ = call(["distance", "--basis-a", b, "--basis-b", b, "--tol-equality", "1e-9"])
    assert code == 2 and json.loads(out)["error"]["type"] == "ValidationError"
