import json

import numpy as np
import pytest

from circlemaps.cli import main
from circlemaps.mapspec import (
    MapSpecError,
    quotient_from_spec,
    sampled_from_spec,
    spec_from_quotient,
)
from circlemaps.certify import quadratic_quotient


def write_spec(tmp_path, name, payload):
    p = tmp_path / name
    p.write_text(json.dumps(payload))
    return str(p)


IDENTITY = {"type": "blaschke_quotient", "zeros": [[0.0, 0.0]], "poles": [], "sigma": 0.0}


def test_spec_roundtrip_identical_spectra(tmp_path):
    Q = quadratic_quotient(0.2 + 0.1j, np.exp(0.3j))
    spec = spec_from_quotient(Q)
    Q2 = quotient_from_spec(spec)
    from circlemaps.fourier import fourier_coefficients, spectrum_csv_rows
    from circlemaps.gallery import rational_family

    rows1 = list(spectrum_csv_rows(fourier_coefficients(rational_family(Q, 1024))))
    rows2 = list(spectrum_csv_rows(fourier_coefficients(rational_family(Q2, 1024))))
    assert rows1 == rows2  # bit-identical CSV


def test_spec_validation_errors():
    with pytest.raises(MapSpecError):
        quotient_from_spec({"type": "star", "x": 1, "y": 1})
    with pytest.raises(MapSpecError):
        quotient_from_spec({"type": "blaschke_quotient", "zeros": [[1.5, 0.0]], "poles": []})
    with pytest.raises(MapSpecError):
        sampled_from_spec({"type": "avoidable"})
    with pytest.raises(MapSpecError):
        sampled_from_spec({"type": "samples", "values": []})


def test_cli_fourier_identity(tmp_path, capsys):
    spec = write_spec(tmp_path, "id.json", IDENTITY)
    out = tmp_path / "spec.csv"
    assert main(["fourier", "--spec", spec, "--out", str(out)]) == 0
    rows = out.read_text().strip().splitlines()
    assert rows[0] == "n,re,im,abs"
    above = [r for r in rows[1:] if float(r.split(",")[3]) > 1e-8]
    assert len(above) == 1 and above[0].startswith("1,")
    summary = json.loads((tmp_path / "spec.summary.json").read_text())
    assert summary["support"] == [1]
    assert summary["enclosed_area"] == pytest.approx(np.pi, abs=1e-9)


def test_cli_fourier_star_flags_vanishing(tmp_path):
    spec = write_spec(tmp_path, "star.json",
                      {"type": "star", "x": 8.0, "y": 1 / np.sqrt(3)})
    out = tmp_path / "star.csv"
    assert main(["fourier", "--spec", spec, "--grid", "65536", "--out", str(out),
                 "--tolerance", "1e-6", "--window", "16"]) == 0
    summary = json.loads((tmp_path / "star.summary.json").read_text())
    assert 1 not in summary["support"]
    rows = out.read_text().strip().splitlines()
    assert all(abs(int(r.split(",")[0])) <= 16 for r in rows[1:])


def test_cli_fourier_avoidable_support_pattern(tmp_path):
    spec = write_spec(tmp_path, "gap.json", {"type": "avoidable", "N": 1})
    out = tmp_path / "gap.csv"
    assert main(["fourier", "--spec", spec, "--grid", "16384", "--out", str(out),
                 "--tolerance", "1e-4"]) == 0
    summary = json.loads((tmp_path / "gap.summary.json").read_text())
    assert summary["support"]
    assert all(n % 3 == 1 for n in summary["support"])


def test_cli_certify_verdicts(tmp_path, capsys):
    spec = write_spec(tmp_path, "id.json", IDENTITY)
    assert main(["certify", "--spec", spec]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "Diffeomorphism"

    good = write_spec(tmp_path, "good.json",
                      {"type": "blaschke_quotient", "zeros": [[0, 0], [0, 0]],
                       "poles": [[0.3, 0]], "sigma": 0.0})
    assert main(["certify", "--spec", good]) == 0
    assert json.loads(capsys.readouterr().out)["verdict"] == "Diffeomorphism"

    bad = write_spec(tmp_path, "bad.json",
                     {"type": "blaschke_quotient", "zeros": [[0, 0], [0, 0]],
                      "poles": [[0.4, 0]], "sigma": 0.0})
    assert main(["certify", "--spec", bad]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["verdict"] == "NotHomeomorphism"
    assert "witness_theta" in payload


def test_cli_approximate_rotation(tmp_path, capsys):
    spec = write_spec(tmp_path, "rot.json",
                      {"type": "blaschke_quotient", "zeros": [[0.0, 0.0]],
                       "poles": [], "sigma": 0.9})
    out = tmp_path / "approx.json"
    assert main(["approximate", "--spec", spec, "--eps", "0.05",
                 "--direction", "below", "--out", str(out)]) == 0
    payload = json.loads(out.read_text())
    assert payload["certification"]["verdict"] == "Diffeomorphism"
    assert payload["sup_error"] < 0.05
    assert payload["quotient"]["type"] == "blaschke_quotient"
    assert {"r", "n", "eps", "eta"} <= set(payload["log"].keys())


def test_cli_figure(tmp_path):
    spec = write_spec(tmp_path, "gap.json", {"type": "avoidable", "N": 1})
    out = tmp_path / "fig.svg"
    assert main(["figure", "--spec", spec, "--grid", "2048", "--out", str(out)]) == 0
    text = out.read_text()
    assert text.startswith("<svg") and "polygon" in text


def test_cli_bounds_identity_and_constant(tmp_path, capsys):
    spec = write_spec(tmp_path, "id.json", IDENTITY)
    assert main(["bounds", "--spec", spec]) == 0
    payload = json.loads(capsys.readouterr().out)
    assert payload["heinz"]["hall_ok"] is True
    assert payload["curvature_bound"] == pytest.approx(4.0, abs=1e-9)

    m = 64
    const = write_spec(tmp_path, "const.json",
                       {"type": "samples", "kind": "unimodular",
                        "values": [[1.0, 0.0]] * m})
    assert main(["bounds", "--spec", const]) == 3  # no bound available


def test_cli_exit_codes(tmp_path, capsys):
    bad = write_spec(tmp_path, "bad.json", {"type": "nonsense"})
    assert main(["fourier", "--spec", bad]) == 2
    missing = str(tmp_path / "missing.json")
    assert main(["fourier", "--spec", missing]) == 2
    notjson = tmp_path / "notjson.json"
    notjson.write_text("{broken")
    assert main(["certify", "--spec", str(notjson)]) == 2
