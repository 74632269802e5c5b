import json

import pytest

from hypergraph_spectra.cli import main, parse_family
from hypergraph_spectra.hypergraphs import (
    complete,
    complete_cylinder,
    from_edge_list,
    single_edge,
    tetra_minus_face,
    ultracube,
)


def run(capsys, *args):
    code = main(list(args))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def test_parse_family_grammar():
    assert parse_family("complete:n=4,k=3") == complete(4, 3)
    assert parse_family("cylinder:parts=2,3") == complete_cylinder([2, 3])
    assert parse_family("ultracube:k=3,d=2") == ultracube(3, 2)
    assert parse_family("single-edge", default_k=4) == single_edge(4)
    assert parse_family("single-edge:k=2") == single_edge(2)
    assert parse_family("tetra-minus-face") == tetra_minus_face()


def test_parse_family_rejects_garbage():
    with pytest.raises(ValueError):
        parse_family("moebius:n=4")
    with pytest.raises(ValueError):
        parse_family("complete:n=4")  # k missing
    with pytest.raises(ValueError):
        parse_family("complete:n=4,k=3,spin=up")
    with pytest.raises(ValueError):
        parse_family("cylinder:2,3")


def test_gen_round_trip(capsys, tmp_path):
    code, out, _ = run(capsys, "gen", "--family", "complete:n=4,k=3")
    assert code == 0
    assert from_edge_list(out) == complete(4, 3)

    code, out, _ = run(capsys, "gen", "--family", "ultracube:k=3,d=2")
    assert code == 0
    assert from_edge_list(out) == ultracube(3, 2)

    path = tmp_path / "h.hg"
    path.write_text(out)
    code, out2, _ = run(capsys, "gen", "--file", str(path))
    assert code == 0 and out2 == out


def test_charpoly_text(capsys):
    code, out, err = run(capsys, "charpoly", "--family", "single-edge", "--k", "3")
    assert code == 0
    assert out.strip() == "L^12 - 3*L^9 + 3*L^6 - L^3"
    assert "method=" in err


def test_charpoly_json_deterministic_across_threads(capsys):
    args = ["charpoly", "--family", "tetra-minus-face", "--format", "json"]
    code1, out1, _ = run(capsys, *args, "--threads", "1")
    code2, out2, _ = run(capsys, *args, "--threads", "2")
    assert code1 == code2 == 0
    assert out1 == out2
    payload = json.loads(out1)
    assert payload["degree"] == 32
    assert payload["coefficients"][0] == [32, "1"]


def test_coeffs_simplex_constant(capsys):
    code, out, _ = run(capsys, "coeffs", "--family", "complete:n=4,k=3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["coefficients"] == ["1", "0", "0", "-24", "-42"]
    assert payload["implied_simplex_constant"] == "21"


def test_traces_text(capsys):
    code, out, _ = run(capsys, "traces", "--family", "single-edge", "--k", "3",
                       "--max-codegree", "3")
    assert code == 0
    lines = out.strip().splitlines()
    assert lines[0] == "Tr_0 = 12"
    assert lines[1] == "Tr_1 = 0"
    assert lines[3] == "Tr_3 = 9"


def test_spectrum_json(capsys):
    code, out, _ = run(capsys, "spectrum", "--family", "cylinder:parts=1,1,1",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload["values"]) == 4
    reals = sorted(re for re, im in payload["values"])
    assert any(abs(v - 1) < 1e-9 for v in reals)

    code, out, _ = run(capsys, "spectrum", "--family", "complete:n=4,k=3",
                       "--format", "json")
    payload = json.loads(out)
    assert any(abs(re - 3) < 1e-6 and abs(im) < 1e-9
               for re, im in payload["values"])


def test_lambda_max_json(capsys):
    code, out, _ = run(capsys, "lambda-max", "--family", "complete:n=4,k=3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert abs(payload["value"] - 3) < 1e-8
    assert payload["converged"] is True
    assert payload["lower"] <= payload["value"] <= payload["upper"]


def test_bounds_json(capsys):
    code, out, _ = run(capsys, "bounds", "--family", "tetra-minus-face",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["d"] == 2.25
    assert payload["d_exact"] == "9/4"
    assert payload["Delta"] == 3
    assert payload["pass"] is True


def test_color(capsys):
    code, out, _ = run(capsys, "color", "--family", "complete:n=4,k=3",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["count"] == 2
    assert sorted(payload["colors"]) == ["0", "1", "2", "3"]


def test_verify_exit_codes(capsys):
    ok = ["verify", "--family", "single-edge", "--k", "3",
          "--vector", "1,1,1"]
    code, out, _ = run(capsys, *ok, "--value", "1")
    assert code == 0 and "PASS" in out
    code, out, _ = run(capsys, *ok, "--value", "2")
    assert code == 2 and "FAIL" in out


def test_verify_complex_vector(capsys):
    code, out, _ = run(capsys, "verify", "--family", "single-edge", "--k", "3",
                       "--value", "1",
                       "--vector", "1,-0.5+0.8660254037844387j,"
                                   "-0.5-0.8660254037844387j")
    assert code == 0


def test_family_summary(capsys):
    code, out, _ = run(capsys, "family", "--family", "ultracube:k=3,d=2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert payload["n"] == 9 and payload["num_edges"] == 6
    assert abs(payload["sporadic_value"] - 2 ** (1 / 3)) < 1e-12


def test_usage_errors(capsys):
    assert run(capsys, "charpoly")[0] == 1            # no input
    assert run(capsys, "nonsense")[0] == 1            # unknown command
    assert run(capsys)[0] == 1                        # no command
    code, _, err = run(capsys, "charpoly", "--family", "moebius:n=3")
    assert code == 1 and "unknown family" in err
    code, _, err = run(capsys, "charpoly", "--family", "complete:n=4,k=3",
                       "--file", "x.hg")
    assert code == 1 and "not both" in err
    code, _, err = run(capsys, "lambda-max", "--family", "single-edge",
                       "--k", "3", "--tol", "0")
    assert code == 1 and "positive" in err


def test_malformed_edge_list(capsys, tmp_path):
    path = tmp_path / "bad.hg"
    path.write_text("4 3\n1 2\n")
    code, _, err = run(capsys, "charpoly", "--file", str(path))
    assert code == 1
    assert "line 2" in err


def test_repro_single_claim(capsys):
    code, out, _ = run(capsys, "repro", "--only", "single-edge-charpoly-k2",
                       "--format", "json")
    assert code == 0
    payload = json.loads(out)
    assert len(payload) == 1
    assert payload[0]["claim"] == "single-edge-charpoly-k2"
    assert payload[0]["match"] is True


def test_repro_unknown_claim(capsys):
    code, _, err = run(capsys, "repro", "--only", "no-such-claim")
    assert code == 1 and "unknown claim" in err
