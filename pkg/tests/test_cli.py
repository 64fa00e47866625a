"""End-to-end CLI behaviour: envelope shape, determinism, exit codes,
file output, CSV and SVG emission, and the verify modes."""

import csv
import io
import json

import pytest

from heronquad.cli import main


def run(capsys, *argv):
    code = main(list(argv))
    captured = capsys.readouterr()
    return code, captured.out, captured.err


def run_json(capsys, *argv):
    code, out, err = run(capsys, *argv)
    assert code == 0, err
    return json.loads(out)


class TestEnvelope:
    def test_key_order_and_version(self, capsys):
        code, out, _ = run(capsys, "solve", "3", "4", "5")
        assert code == 0
        doc = json.loads(out)
        assert list(doc) == ["command", "inputs", "result", "errata", "version"]
        assert doc["version"] == "0.1.0"

    def test_byte_determinism(self, capsys):
        _, out1, _ = run(capsys, "construct", "120", "35", "125")
        _, out2, _ = run(capsys, "construct", "120", "35", "125")
        assert out1 == out2
        _, out3, _ = run(capsys, "heron-table", "--t-max", "4")
        _, out4, _ = run(capsys, "heron-table", "--t-max", "4")
        assert out3 == out4

    def test_out_writes_file(self, capsys, tmp_path):
        target = tmp_path / "result.json"
        code, out, _ = run(capsys, "solve", "3", "4", "5", "--out", str(target))
        assert code == 0
        assert out == ""
        doc = json.loads(target.read_text())
        assert doc["command"] == "solve"


class TestSolveCommand:
    def test_tangency_case(self, capsys):
        doc = run_json(capsys, "solve", "3", "4", "5")
        result = doc["result"]
        assert result["arithmetic"] == "exact"
        assert result["half_angle_quadratic"] == {
            "c2": "9",
            "c1": "-6",
            "c0": "1",
            "discriminant": "0",
        }
        assert result["kind"] == "families"
        (fam,) = result["families"]
        assert fam["tan_half"] == "1/3"
        assert fam["exact"] is True
        assert fam["base_radians"] == pytest.approx(0.6435011088)
        assert result["solutions"]["values"] == [pytest.approx(0.6435011088)]

    def test_two_families_k_range(self, capsys):
        # negative lower bounds need the --k=VALUE spelling
        doc = run_json(capsys, "solve", "7", "24", "20", "--k=-1..1")
        result = doc["result"]
        assert len(result["families"]) == 2
        assert [f["tan_half"] for f in result["families"]] == ["1/2", "-2/11"]
        assert len(result["solutions"]["values"]) == 6
        assert result["solutions"]["max_abs_residual"] < 1e-9

    def test_empty_case(self, capsys):
        doc = run_json(capsys, "solve", "1", "2", "5")
        assert doc["result"]["kind"] == "empty"
        assert doc["result"]["families"] == []
        assert doc["result"]["solutions"]["values"] == []
        assert doc["result"]["solutions"]["max_abs_residual"] is None

    def test_all_reals(self, capsys):
        doc = run_json(capsys, "solve", "0", "0", "0")
        assert doc["result"]["kind"] == "all-reals"
        assert doc["result"]["solutions"] is None

    def test_odd_pi_family(self, capsys):
        doc = run_json(capsys, "solve", "0", "1", "-1")
        (fam,) = doc["result"]["families"]
        assert fam["tag"] == "odd-pi"
        assert fam["tan_half"] is None

    def test_float_coefficients(self, capsys):
        doc = run_json(capsys, "solve", "1.5", "2.0", "0.5")
        assert doc["result"]["arithmetic"] == "float"
        assert doc["result"]["kind"] == "families"

    def test_rational_stays_exact(self, capsys):
        doc = run_json(capsys, "solve", "3/2", "2", "1/2")
        assert doc["result"]["arithmetic"] == "exact"

    def test_bad_k_range(self, capsys):
        code, _, err = run(capsys, "solve", "3", "4", "5", "--k", "1to2")
        assert code == 2
        assert "parse error" in err

    def test_inverted_k_range_is_domain_error(self, capsys):
        code, _, err = run(capsys, "solve", "3", "4", "5", "--k", "2..1")
        assert code == 3
        assert "domain error" in err


class TestConstructCommand:
    def test_worked_example_payload(self, capsys):
        doc = run_json(capsys, "construct", "120", "35", "125")
        result = doc["result"]
        assert result["triple"] == {
            "delta": 5,
            "m": 4,
            "n": 3,
            "leg_form": "even-leg-first",
        }
        assert result["vertices"]["Gamma"]["x"] == "576/5"
        assert result["sides"]["Gamma-B"]["exact"] == "120"
        assert result["sides"]["Gamma2-Gamma1"]["exact"] == {"coef": "200", "radicand": 1}
        assert result["diagonals"]["B-Gamma1"]["exact"] == "160"
        assert result["diagonals"]["Gamma-Gamma2"]["exact"] == {
            "coef": "192",
            "radicand": 1,
        }
        assert result["tangents"] == {
            "B": "-24/7",
            "Gamma": "-4/3",
            "Gamma1": "24/7",
            "Gamma2": "4/3",
        }
        assert result["theta"]["tan"] == "3/4"
        assert result["theta"]["degrees_display"] == "36.86990"
        assert result["area"]["exact"] == "12288"
        assert [er["id"] for er in doc["errata"]] == [
            "worked-example-diagonal-92",
            "worked-example-tangent-gamma",
            "worked-example-tangent-gamma2",
        ]

    def test_irrational_side_payload(self, capsys):
        doc = run_json(capsys, "construct", "3", "4", "5")
        side = doc["result"]["sides"]["Gamma2-Gamma1"]
        assert side["exact"] == {"coef": "3", "radicand": 10}
        assert side["approx"] == pytest.approx(3 * 10**0.5)
        assert doc["errata"] == []

    def test_rational_non_integer_triple(self, capsys):
        doc = run_json(capsys, "construct", "3/2", "2", "5/2")
        assert doc["result"]["triple"] is None
        assert doc["result"]["area"]["exact"] == "243/40"

    def test_svg_side_file(self, capsys, tmp_path):
        svg_path = tmp_path / "fig.svg"
        doc = run_json(capsys, "construct", "3", "4", "5", "--svg", str(svg_path))
        assert doc["result"]["svg_path"] == str(svg_path)
        content = svg_path.read_text()
        assert content.startswith("<svg")
        assert "Γ₂" in content

    def test_non_pythagorean_rejected(self, capsys):
        code, _, err = run(capsys, "construct", "3", "4", "6")
        assert code == 3
        assert "domain error" in err

    def test_garbage_rejected(self, capsys):
        code, _, _ = run(capsys, "construct", "3", "4", "x")
        assert code == 2


class TestFamilyCommand:
    def test_heron_only_window(self, capsys):
        doc = run_json(
            capsys, "family", "--t-max", "3", "--delta-max", "13", "--heron-only"
        )
        assert doc["result"]["count"] == 3
        got = [
            (m["params"]["delta"], m["params"]["m"], m["params"]["n"])
            for m in doc["result"]["members"]
        ]
        assert got == [(5, 4, 3), (10, 4, 3), (13, 12, 5)]
        assert all(m["is_heron"] for m in doc["result"]["members"])

    def test_member_payload_shape(self, capsys):
        doc = run_json(capsys, "family", "--t-max", "3", "--delta-max", "1")
        member = doc["result"]["members"][0]
        assert member["params"] == {
            "t1": 2,
            "t2": 1,
            "t_form": "even-m",
            "delta": 1,
            "m": 4,
            "n": 3,
            "L": 5,
            "k": 40,
        }
        assert member["triple"] == [24, 7, 25]
        assert member["sides"]["Gamma-Gamma1"] == "56/5"
        assert member["tangents"]["Gamma"] == "-4/3"
        assert member["is_heron"] is False
        assert member["errata"] == ["family-tangent-closed-form"]

    def test_odd_leg_form_domain_error(self, capsys):
        code, _, err = run(
            capsys,
            "family",
            "--t-max",
            "3",
            "--delta-max",
            "2",
            "--leg-form",
            "odd-first",
        )
        assert code == 3
        assert "out of scope" in err


class TestHeronTableCommand:
    def test_default_json_rows(self, capsys):
        doc = run_json(capsys, "heron-table", "--t-max", "3")
        rows = doc["result"]["rows"]
        assert len(rows) == 2
        first, second = rows
        assert (first["m"], first["n"], first["delta"]) == (4, 3, 5)
        assert [
            first[k]
            for k in (
                "B_Gamma",
                "Gamma_Gamma1",
                "Gamma1_Gamma2",
                "Gamma2_B",
                "B_Gamma1",
                "Gamma_Gamma2",
                "Area",
            )
        ] == ["120", "56", "200", "120", "160", "192", "12288"]
        assert first["verified"] is True
        assert "published-table-area-12888" in first["errata"]
        assert (second["m"], second["n"], second["delta"]) == (12, 5, 13)
        assert second["Area"] == "4976640"
        assert second["errata"] == ["family-tangent-closed-form"]

    def test_csv_format(self, capsys):
        code, out, _ = run(capsys, "heron-table", "--t-max", "3", "--format", "csv")
        assert code == 0
        rows = list(csv.reader(io.StringIO(out)))
        assert rows[0] == [
            "t1",
            "t2",
            "m",
            "n",
            "delta",
            "B_Gamma",
            "Gamma_Gamma1",
            "Gamma1_Gamma2",
            "Gamma2_B",
            "B_Gamma1",
            "Gamma_Gamma2",
            "Area",
        ]
        assert rows[1] == ["2", "1", "4", "3", "5", "120", "56", "200", "120", "160", "192", "12288"]
        assert rows[2] == [
            "3",
            "2",
            "12",
            "5",
            "13",
            "1560",
            "2856",
            "4056",
            "1560",
            "3744",
            "2880",
            "4976640",
        ]

    def test_delta_multiples(self, capsys):
        doc = run_json(capsys, "heron-table", "--t-max", "3", "--delta-multiples", "2")
        deltas = [(r["m"], r["n"], r["delta"]) for r in doc["result"]["rows"]]
        assert deltas == [(4, 3, 5), (4, 3, 10), (12, 5, 13), (12, 5, 26)]

    def test_csv_round_trip_values(self, capsys):
        _, out, _ = run(capsys, "heron-table", "--t-max", "4", "--format", "csv")
        for row in csv.DictReader(io.StringIO(out)):
            m, n, delta = int(row["m"]), int(row["n"]), int(row["delta"])
            assert int(row["B_Gamma"]) == 2 * delta * m * n
            assert int(row["B_Gamma1"]) == 2 * delta * m * m
            # integer areas: the delta = L rows are Heron by construction
            assert int(row["Area"]) > 0


class TestVerifyCommand:
    def test_triple_mode(self, capsys):
        doc = run_json(capsys, "verify", "--triple", "120", "35", "125")
        assert doc["result"]["verdict"] == "pass"
        assert doc["result"]["counts"]["fail"] == 0
        assert doc["result"]["counts"]["erratum"] == 5
        assert doc["result"]["subject"].startswith("member(")

    def test_triple_mode_odd_leg_first(self, capsys):
        doc = run_json(capsys, "verify", "--triple", "35", "120", "125")
        assert doc["result"]["verdict"] == "pass"
        assert doc["result"]["subject"].startswith("construction(")

    def test_params_mode(self, capsys):
        doc = run_json(capsys, "verify", "--params", "5", "4", "3")
        assert doc["result"]["verdict"] == "pass"
        assert doc["result"]["counts"]["erratum"] == 5

    def test_input_mode_construct_envelope(self, capsys, tmp_path):
        code, out, _ = run(capsys, "construct", "120", "35", "125")
        assert code == 0
        envelope_path = tmp_path / "construct.json"
        envelope_path.write_text(out)
        doc = run_json(capsys, "verify", "--input", str(envelope_path))
        assert doc["result"]["verdict"] == "pass"
        names = [c["name"] for c in doc["result"]["checks"]]
        assert names[0] == "payload-consistency"
        assert doc["result"]["checks"][0]["status"] == "pass"

    def test_input_mode_detects_tampering(self, capsys, tmp_path):
        code, out, _ = run(capsys, "construct", "120", "35", "125")
        assert code == 0
        doc = json.loads(out)
        doc["result"]["tangents"]["Gamma"] = "-8/3"
        envelope_path = tmp_path / "tampered.json"
        envelope_path.write_text(json.dumps(doc))
        code, out, err = run(capsys, "verify", "--input", str(envelope_path))
        assert code == 4
        assert "verification failed" in err
        result = json.loads(out)["result"]
        assert result["verdict"] == "fail"
        failing = [c["name"] for c in result["checks"] if c["status"] == "fail"]
        assert failing == ["payload-consistency"]

    def test_input_mode_bare_triple(self, capsys, tmp_path):
        path = tmp_path / "bare.json"
        path.write_text(json.dumps({"alpha": "3", "beta": "4", "gamma": "5"}))
        doc = run_json(capsys, "verify", "--input", str(path))
        assert doc["result"]["verdict"] == "pass"

    def test_input_mode_bare_params(self, capsys, tmp_path):
        path = tmp_path / "params.json"
        path.write_text(json.dumps({"delta": 13, "m": 12, "n": 5}))
        doc = run_json(capsys, "verify", "--input", str(path))
        assert doc["result"]["verdict"] == "pass"
        assert doc["result"]["subject"] == "member(delta=13, m=12, n=5)"

    def test_input_mode_unrecognized(self, capsys, tmp_path):
        path = tmp_path / "junk.json"
        path.write_text(json.dumps({"foo": 1}))
        code, _, err = run(capsys, "verify", "--input", str(path))
        assert code == 2
        assert "parse error" in err

    def test_input_mode_missing_file(self, capsys, tmp_path):
        code, _, err = run(capsys, "verify", "--input", str(tmp_path / "nope.json"))
        assert code == 2

    def test_modes_mutually_exclusive(self, capsys):
        code, _, _ = run(
            capsys, "verify", "--triple", "3", "4", "5", "--params", "1", "2", "1"
        )
        assert code == 2


class TestSvgCommand:
    def test_stdout(self, capsys):
        code, out, _ = run(capsys, "svg", "3", "4", "5")
        assert code == 0
        assert out.startswith("<svg")
        assert out.rstrip().endswith("</svg>")
        for label in ("Γ", "B", "Γ₂", "Γ₁", "A"):
            assert label in out
        assert "stroke-dasharray" in out  # the circumcircle is dashed

    def test_out_file(self, capsys, tmp_path):
        path = tmp_path / "quad.svg"
        code, out, _ = run(capsys, "svg", "120", "35", "125", "--out", str(path))
        assert code == 0 and out == ""
        assert path.read_text().startswith("<svg")

    def test_svg_determinism(self, capsys):
        _, out1, _ = run(capsys, "svg", "120", "35", "125")
        _, out2, _ = run(capsys, "svg", "120", "35", "125")
        assert out1 == out2


class TestTopLevel:
    def test_no_subcommand(self, capsys):
        assert run(capsys)[0] == 2

    def test_unknown_subcommand(self, capsys):
        assert run(capsys, "frobnicate")[0] == 2

    def test_version_flag(self, capsys):
        code, out, _ = run(capsys, "--version")
        assert code == 0
        assert "0.1.0" in out
