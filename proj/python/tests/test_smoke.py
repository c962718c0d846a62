import pytest

import simplex_spectra as ss


def test_two_triangle_graph_matrices():
    g = ss.parse_graph6("Cz")
    assert g.order == 4 and g.size == 5
    assert ss.coboundary(g, 1) == [[1, -1, 1, 0, 0], [0, 0, 1, -1, 1]]
    assert ss.laplacian(g, 1, "total")[2] == [0, 0, 4, 0, 0]


def test_triangular_spectrum_matches_prediction():
    s = ss.spectrum(ss.generate("triangular:6"))
    assert s["residual"]["degree"] == 0
    assert s["eigs"] == ss.predict_triangular_L1(6)


def test_h1_and_checkers():
    r = ss.h1(ss.generate("cycle:5"))
    assert r["dim_h1"] == 1
    assert r["checker_verdicts"]["four_consecutive"] == "false"
    assert ss.h1(ss.generate("kneser:8,2"))["dim_h1"] == 0


def test_cycle_vector_and_roundtrip():
    g = ss.parse_graph6("Cz")
    assert ss.cycle_vector(g, [0, 1, 2]) == [1, -1, 1, 0, 0]
    assert ss.write_graph6(ss.complement(ss.complement(g))) == "Cz"


def test_errors_map_to_python():
    with pytest.raises(ValueError):
        ss.parse_graph6("C")
    with pytest.raises(ValueError):
        ss.generate("nosuch:1")
    with pytest.raises(RuntimeError):
        ss.generate("complete:9000")
