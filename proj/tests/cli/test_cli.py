import json
import os
import subprocess

import pytest

BIN = os.environ.get("SIMPLEX_SPECTRA_BIN", "simplex-spectra")
DATA = os.environ.get("SSPEC_TEST_DATA", os.path.join(os.path.dirname(__file__), "..", "data"))


def run(*args, env=None, expect=0):
    full_env = dict(os.environ)
    full_env.pop("SIMPLEX_SPECTRA_PRIMES", None)
    if env:
        full_env.update(env)
    proc = subprocess.run([BIN, *args], capture_output=True, text=True, env=full_env)
    assert proc.returncode == expect, proc.stderr
    return proc


def run_json(*args, **kw):
    return json.loads(run(*args, **kw).stdout)


def eigs(result):
    return {e["value"]: e["mult"] for e in result["eigs"]}


def test_triangular_array_form():
    out = run("spectrum", "gen:triangular:5", "--dim", "1", "--format", "array").stdout
    assert out.splitlines()[:2] == ["( 7 5 4 2 0 )", "( 4 6 5 6 9 )"]


def test_single_vertex_has_empty_edge_spectrum():
    r = run_json("spectrum", "g6:@")
    assert r["result"]["size"] == 0
    assert r["result"]["eigs"] == []


def test_hamming_spectrum_matches_verify():
    s = run_json("spectrum", "gen:hamming:2,4")
    v = run_json("verify", "hamming:2,4")
    assert v["match"]
    assert eigs(s["result"]) == eigs(v["results"][0]["predicted"]) == {0: 24, 4: 24}


def test_output_is_deterministic_apart_from_timing():
    a = run_json("spectrum", "file:%s/shrikhande.g6" % DATA, "--charpoly")
    b = run_json("spectrum", "file:%s/shrikhande.g6@1" % DATA, "--charpoly")
    a.pop("timing_ms"), b.pop("timing_ms")
    a["graph"].pop("spec"), b["graph"].pop("spec")
    assert a == b
    assert a["result"]["residual"]["degree"] == 12
    assert a["charpoly"].startswith("(x-6) (x-4)^9 (x-2)^9 x^17")


@pytest.mark.parametrize("args", [
    ["triangular:6"],
    ["gq-w3:3", "--dim", "1,2"],
    ["kncomplex:5,3"],
    ["triangular:7", "--dim", "4,5", "--laplacian", "down"],
])
def test_verify_matches(args):
    r = run_json("verify", *args)
    assert r["match"] is True
    assert all(x["match"] for x in r["results"])


def test_verify_kncomplex_covers_all_dimensions():
    r = run_json("verify", "kncomplex:5,3")
    assert len(r["results"]) == 4


def test_cospectral_scan_classes():
    pair = run_json("cospectral-scan", os.path.join(DATA, "pair14.g6"), "--with-complements")
    assert [c["members"] for c in pair["classes"]] == [[1, 2]]
    assert pair["classes"][0]["complement_classes"] == [[1], [2]]
    srg = run_json("cospectral-scan", os.path.join(DATA, "srg16.g6"))
    assert [c["members"] for c in srg["classes"]] == [[1], [2]]
    one = run_json("cospectral-scan", os.path.join(DATA, "shrikhande.g6"))
    assert [c["members"] for c in one["classes"]] == [[1]]


def test_cospectral_scan_skips_headers(tmp_path):
    f = tmp_path / "cat.g6"
    lines = open(os.path.join(DATA, "pair14.g6")).read().split()
    f.write_text(">>graph6<<\n\n" + "\n".join(lines) + "\n\n")
    r = run_json("cospectral-scan", str(f), "--threads", "2")
    assert r["graphs"] == 2


def test_cohomology_reports():
    k = run_json("cohomology", "gen:kneser:8,2")["result"]
    assert k["dim_h1"] == 0
    assert k["checker_verdicts"]["four_consecutive"] == "true"
    assert k["checker_verdicts"]["meshulam"] == "false"
    c5 = run_json("cohomology", "g6:" + "Dhc")["result"]
    assert c5["dim_h1"] == 1
    assert c5["checker_verdicts"]["four_consecutive"] == "false"
    p = run_json("cohomology", "gen:paley:29")["result"]
    assert p["dim_h1"] == 0
    assert p["checker_verdicts"]["conference_a"] == "true"
    for key in ("meshulam", "four_consecutive", "srg_inequality", "conference_a", "conference_b"):
        assert p["checker_verdicts"][key] in ("true", "false", "unknown", "not_applicable")


def test_cohomology_cycle_length_cap_gives_unknown():
    r = run_json("cohomology", "gen:cycle:7", "--max-cycle-len", "5")["result"]
    assert r["dim_h1"] == 1
    assert r["checker_verdicts"]["four_consecutive"] == "unknown"


def test_export_two_triangle_coboundary(tmp_path):
    out = tmp_path / "d1.mtx"
    run("export", "g6:Cz", "--matrix", "d1", "--out", str(out))
    lines = [l for l in out.read_text().splitlines() if not l.startswith("%")]
    rows, cols, nnz = map(int, lines[0].split())
    assert (rows, cols, nnz) == (2, 5, 6)
    dense = [[0] * 5 for _ in range(2)]
    for l in lines[1:]:
        r, c, v = map(int, l.split())
        dense[r - 1][c - 1] = v
    assert dense == [[1, -1, 1, 0, 0], [0, 0, 1, -1, 1]]


def test_export_triangle_free_up_laplacian_is_zero():
    text = run("export", "gen:cycle:4", "--matrix", "L1up").stdout
    body = [l for l in text.splitlines() if not l.startswith("%")]
    assert body[0].split() == ["4", "4", "0"]


def test_exit_codes():
    run("spectrum", "gen:nosuch:3", expect=3)
    run("spectrum", "g6:C", expect=3)
    run("spectrum", "file:/nonexistent.g6", expect=3)
    run("spectrum", "gen:complete:6000", expect=4)
    run("export", "g6:Cz", "--matrix", "Q7", expect=3)


def test_prime_override():
    r = run_json("spectrum", "gen:complete:4", env={"SIMPLEX_SPECTRA_PRIMES": "1000003,1000033"})
    assert r["primes"] == [1000003, 1000033]
    assert eigs(r["result"]) == {0: 3, 4: 3}
    run("spectrum", "gen:complete:4", env={"SIMPLEX_SPECTRA_PRIMES": "15"}, expect=3)
